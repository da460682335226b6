//! Root datasets of `Delta_{a,b}` for the figure families.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::etapoly::{gen_table, EtaTable};
use crate::inequality::delta;
use crate::rational::Rational;
use crate::roots::{complex_roots_named, largest_real_root, Interval, RootSet, DEFAULT_FLOAT_BITS, ROOT_CSV_HEADER};
use crate::verify::{Cell, TableId};

/// Tolerance between the floating real root and the exact largest root.
pub const REAL_ROOT_TOLERANCE: f64 = 1e-6;
const LARGEST_ROOT_BITS: u32 = 48;

#[derive(Clone, Debug)]
pub struct FigurePoly {
    pub a: usize,
    pub b: usize,
    pub roots: RootSet,
    /// Exact largest real root of `Delta_{a,b}`.
    pub largest: Option<Interval>,
    /// Every non-real root has real part below the largest real root.
    pub observation: bool,
}

impl FigurePoly {
    pub fn poly_id(&self) -> String {
        format!("delta_{}_{}", self.a, self.b)
    }

    /// The real-labeled approximation closest to the exact largest root.
    pub fn float_largest(&self) -> Option<&Rational> {
        self.roots
            .complex_roots
            .iter()
            .filter(|r| r.kind == crate::roots::RootKind::Real)
            .map(|r| &r.re)
            .max()
    }
}

#[derive(Clone, Debug)]
pub struct FigureData {
    pub which: TableId,
    pub float_bits: u32,
    pub polys: Vec<FigurePoly>,
}

fn family(which: TableId) -> Result<&'static [usize]> {
    match which {
        TableId::Fig1 => Ok(&[2]),
        TableId::Fig2 => Ok(&[27, 28]),
        other => Err(Error::InvalidArgument(format!("{other} is not a figure"))),
    }
}

/// Roots of `Delta_{a,b}` for every `b` of the family and
/// `b + 2 <= a <= a_max`.
pub fn figure_data(which: TableId, a_max: usize, float_bits: u32, table: &EtaTable) -> Result<FigureData> {
    let bs = family(which)?;
    table.require(a_max)?;
    let jobs: Vec<(usize, usize)> = bs
        .iter()
        .flat_map(|&b| (b + 2..=a_max).map(move |a| (a, b)))
        .collect();
    let polys = jobs
        .par_iter()
        .map(|&(a, b)| {
            let d = delta(a, b, table)?.poly;
            let roots = complex_roots_named(&d, float_bits, &format!("delta_{a}_{b}"))?;
            let largest = largest_real_root(&d, LARGEST_ROOT_BITS)?;
            let observation = match (&largest, roots.max_nonreal_re()) {
                (Some(top), Some(re)) => re < top.lo,
                _ => true,
            };
            Ok(FigurePoly { a, b, roots, largest, observation })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FigureData { which, float_bits, polys })
}

impl FigureData {
    /// Root CSV rows with positive real part plus the observation column.
    pub fn to_csv(&self) -> String {
        let mut out = format!("{ROOT_CSV_HEADER},observation\n");
        for p in &self.polys {
            for row in p.roots.csv_rows(&p.poly_id(), Some(p.a), Some(p.b), true) {
                out.push_str(&row);
                out.push(',');
                out.push_str(if p.observation { "true" } else { "false" });
                out.push('\n');
            }
        }
        out
    }

    pub fn file_name(&self) -> String {
        format!("{}_roots.csv", self.which.name().to_ascii_lowercase())
    }
}

/// Writes the dataset for `which` into `dir` and returns the file path.
pub fn figure_dataset(which: TableId, a_max: usize, dir: &Path) -> Result<PathBuf> {
    let table = gen_table(a_max.max(family(which)?.iter().max().copied().unwrap_or(0) + 2));
    figure_dataset_with(which, a_max, DEFAULT_FLOAT_BITS, &table, dir)
}

pub fn figure_dataset_with(
    which: TableId,
    a_max: usize,
    float_bits: u32,
    table: &EtaTable,
    dir: &Path,
) -> Result<PathBuf> {
    let data = figure_data(which, a_max, float_bits, table)?;
    fs::create_dir_all(dir).map_err(|e| Error::InvalidArgument(format!("{}: {e}", dir.display())))?;
    let path = dir.join(data.file_name());
    fs::write(&path, data.to_csv()).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Consistency cells for a figure: root count equals degree, residuals
/// below `2^-(float_bits/2)`, and the floating real root within
/// [`REAL_ROOT_TOLERANCE`] of the exact largest root.
pub(crate) fn figure_cells(which: TableId, a_max: usize, table: &EtaTable) -> Result<Vec<Cell>> {
    let data = figure_data(which, a_max, DEFAULT_FLOAT_BITS, table)?;
    Ok(data.cells())
}

impl FigureData {
    pub fn cells(&self) -> Vec<Cell> {
        let bound = 2f64.powi(-(self.float_bits as i32 / 2));
        let mut cells = Vec::new();
        for p in &self.polys {
            let id = p.poly_id();
            let count_ok = p.roots.complex_roots.len() == p.roots.degree;
            let res_ok = p.roots.max_residual() < bound && p.roots.all_converged();
            cells.push(Cell::new(
                format!("{id} roots"),
                format!("{} roots, residual < 2^-{}", p.roots.degree, self.float_bits / 2),
                format!("{} roots, max residual {:.3e}", p.roots.complex_roots.len(), p.roots.max_residual()),
                count_ok && res_ok,
            ));
            let (expected, computed, ok) = match (&p.largest, p.float_largest()) {
                (Some(iv), Some(re)) => {
                    let diff = (iv.midpoint() - re).abs().to_f64();
                    (iv.midpoint().to_decimal(10), re.to_decimal(10), diff < REAL_ROOT_TOLERANCE)
                }
                (None, None) => ("none".to_string(), "none".to_string(), true),
                (e, c) => (
                    e.as_ref().map(|iv| iv.midpoint().to_decimal(10)).unwrap_or_else(|| "none".into()),
                    c.map(|r| r.to_decimal(10)).unwrap_or_else(|| "none".into()),
                    false,
                ),
            };
            cells.push(
                Cell::new(format!("x_{{{},{}}}", p.a, p.b), expected, computed, ok)
                    .with_note(format!("complex real parts below x: {}", p.observation)),
            );
        }
        cells
    }
}
