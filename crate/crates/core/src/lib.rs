//! Exact arithmetic for the polynomials `P_n(x)` defined by
//! `sum_n P_n(x) q^n = prod_{k>=1} (1 - q^k)^(-x)`, the differences
//! `Delta_{a,b} = P_{a-1} P_{b+1} - P_a P_b`, and the checks built on them:
//! grid scans, positivity certificates, root isolation and table
//! reproduction.
//!
//! ```
//! use etaineq::{delta, gen_table, Rational};
//!
//! let table = gen_table(10);
//! let d = delta(6, 4, &table).unwrap();
//! assert_eq!(d.eval(&Rational::from(2)), Rational::from(-4));
//! ```

pub mod error;
pub mod etapoly;
pub mod float;
pub mod inequality;
mod intpoly;
pub mod poly;
pub mod rational;
pub mod report;
pub mod roots;
pub mod sigma;
pub mod verify;

pub use error::{Error, Result};
pub use etapoly::{eval_sequence, gen_table, EtaTable, ValueSequence};
pub use inequality::{bo_poly, delta, DeltaPoly};
pub use poly::Poly;
pub use rational::Rational;
pub use report::{Certificate, CertificateKind, ScanReport, Value, Verdict};
pub use roots::{Interval, RootSet};
pub use sigma::{sigma, SigmaTable};
pub use verify::{TableId, TableReport};
