//! Real-root isolation in exact arithmetic and floating complex roots.

pub mod complex;
pub mod real;

pub use complex::{complex_roots, complex_roots_named, ComplexRoot, RealRoot, RootKind, RootSet, DEFAULT_FLOAT_BITS, ROOT_CSV_HEADER};
pub use real::{
    count_above, isolate_real_roots, largest_real_root, multiplicity, refine, root_bound,
    sign_changing_roots_above, sturm_count, Bound, Interval, SturmSequence,
};
