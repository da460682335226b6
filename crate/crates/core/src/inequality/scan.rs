//! Grid scans: the k-colored partition inequality, sign scans of
//! `Delta_{a,b}`, and the partition quotient chain.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::etapoly::{eval_sequence, partition_numbers, EtaTable};
use crate::rational::Rational;
use crate::report::{ScanReport, Value};

/// Checks `p_{-k}(n-1) p_{-k}(m+1) >= p_{-k}(n) p_{-k}(m)` for
/// `n > m >= 1`, `n <= n_max`, `2 <= k <= k_max`. The one known exception
/// `(k, n, m) = (2, 6, 4)` is expected whenever it lies in range.
pub fn scan_cft(n_max: usize, k_max: usize) -> ScanReport {
    let mut report = ScanReport::new("scan_cft")
        .param("n_max", n_max)
        .param("k_max", k_max);
    let found: Vec<Vec<Value>> = (2..=k_max)
        .into_par_iter()
        .flat_map_iter(|k| {
            let seq = eval_sequence(&Rational::from(k as i64), n_max);
            let mut bad = Vec::new();
            for n in 2..=n_max {
                for m in 1..n {
                    let lhs = seq.get(n - 1) * seq.get(m + 1);
                    let rhs = seq.get(n) * seq.get(m);
                    if lhs < rhs {
                        bad.push(vec![Value::from(k), Value::from(n), Value::from(m)]);
                    }
                }
            }
            bad
        })
        .collect();
    for e in found {
        report.push_exception(e);
    }
    if k_max >= 2 && n_max >= 6 {
        report.expect_exception(vec![Value::from(2i64), Value::from(6i64), Value::from(4i64)]);
    }
    report.canonicalize();
    report
}

/// Exceptions `[k, n]` where `p_{-k}(n)^2 < p_{-k}(n-1) p_{-k}(n+1)`,
/// `lo <= n <= hi`. `k = 1` is the partition function.
pub fn log_concavity_report(k: usize, lo: usize, hi: usize) -> ScanReport {
    let mut report = ScanReport::new("log_concavity")
        .param("k", k)
        .param("n_lo", lo)
        .param("n_hi", hi);
    let seq = eval_sequence(&Rational::from(k as i64), hi + 1);
    for n in seq.log_concavity_failures(lo.max(1), hi) {
        report.push_exception(vec![Value::from(k), Value::from(n)]);
    }
    report
}

/// Exact sign of `Delta_{a,b}(x)` for `a` in `a_range` and `x` in the
/// grid; exceptions `[a, b, x]` where the value is negative.
pub fn scan_delta_sign(
    b: usize,
    a_range: RangeInclusive<usize>,
    x_grid: &[Rational],
    table: &EtaTable,
) -> Result<ScanReport> {
    table.require(*a_range.end())?;
    table.require(b + 1)?;
    let mut report = ScanReport::new("scan_delta_sign")
        .param("b", b)
        .param("a_min", *a_range.start())
        .param("a_max", *a_range.end())
        .param(
            "x_grid",
            x_grid.iter().map(Rational::to_string).collect::<Vec<_>>().join(","),
        );
    let a_lo = (*a_range.start()).max(b + 1);
    let a_hi = *a_range.end();
    let found: Vec<Vec<Value>> = x_grid
        .par_iter()
        .flat_map_iter(|x| {
            let v = table.values_at(x);
            (a_lo..=a_hi)
                .filter(|&a| v.get(a - 1) * v.get(b + 1) < v.get(a) * v.get(b))
                .map(|a| vec![Value::from(a), Value::from(b), Value::from(x.to_string())])
                .collect::<Vec<_>>()
        })
        .collect();
    for e in found {
        report.push_exception(e);
    }
    report.canonicalize();
    Ok(report)
}

/// `q(n) = p(n) / p(n-1)` for `1 <= n <= n_max`; index 0 is unused.
pub fn partition_quotients(n_max: usize) -> Vec<Rational> {
    let p = partition_numbers(n_max);
    let mut q = vec![Rational::zero()];
    for n in 1..=n_max {
        q.push(Rational::new(p[n].clone(), p[n - 1].clone()).expect("p(n) > 0"));
    }
    q
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChainLink {
    Greater(usize, usize),
    Equal(usize, usize),
}

/// The ordering of `q(2) .. q(27)`.
pub fn q_chain() -> Vec<ChainLink> {
    use ChainLink::{Equal, Greater};
    let order = [
        2, 4, 6, 3, 8, 5, 10, 12, 7, 9, 14, 11, 16, 13, 15, 18, 17, 20, 19, 22, 21, 24, 23, 26, 25,
        27,
    ];
    order
        .windows(2)
        .map(|w| match (w[0], w[1]) {
            (5, 10) | (7, 9) => Equal(w[0], w[1]),
            (l, r) => Greater(l, r),
        })
        .collect()
}

/// Verifies `q(n+2) <= q(n)`, `q(27) >= q(n)` for `n >= 27`, and the chain
/// from [`q_chain`], all by exact comparison. `q(3) > q(1)` is the single
/// failure of the step inequality and is listed as expected.
pub fn q_chain_check(n_max: usize) -> Result<ScanReport> {
    if n_max < 30 {
        return Err(Error::InvalidArgument(format!("q chain needs n_max >= 30, got {n_max}")));
    }
    let q = partition_quotients(n_max);
    let mut report = ScanReport::new("q_chain").param("n_max", n_max);
    for n in 1..=n_max - 2 {
        if q[n + 2] > q[n] {
            report.push_exception(vec![Value::from("step"), Value::from(n)]);
        }
    }
    report.expect_exception(vec![Value::from("step"), Value::from(1usize)]);
    report.note("q(3) = 3/2 > q(1) = 1; the step inequality holds from n = 2 on");
    for n in 27..=n_max {
        if q[n] > q[27] {
            report.push_exception(vec![Value::from("tail"), Value::from(n)]);
        }
    }
    for link in q_chain() {
        let ok = match link {
            ChainLink::Greater(l, r) => q[l] > q[r],
            ChainLink::Equal(l, r) => q[l] == q[r],
        };
        if !ok {
            let (l, rel, r) = match link {
                ChainLink::Greater(l, r) => (l, ">", r),
                ChainLink::Equal(l, r) => (l, "=", r),
            };
            report.push_exception(vec![Value::from("chain"), Value::from(l), Value::from(rel), Value::from(r)]);
        }
    }
    report.set_param("chain_links", q_chain().len());
    report.canonicalize();
    Ok(report)
}

/// For even `b >= 2`: the set `A_0(b)` of isolated `a` with
/// `Delta_{a,b}(1) >= 0` below `a_1(b)`, and `a_1(b)`, the least value from
/// which the inequality holds up to `a_scan_max`. At `x = 1` the values are
/// partition numbers.
pub fn even_b_thresholds(b: usize, a_scan_max: usize) -> Result<(Vec<usize>, usize)> {
    if b % 2 == 1 || b < 2 {
        return Err(Error::InvalidArgument(format!(
            "even_b_thresholds takes even b >= 2, got {b}"
        )));
    }
    let p: Vec<BigInt> = partition_numbers(a_scan_max.max(b + 1));
    let holds = |a: usize| &p[a - 1] * &p[b + 1] >= &p[a] * &p[b];
    let mut a1 = a_scan_max + 1;
    while a1 > b + 2 && holds(a1 - 1) {
        a1 -= 1;
    }
    let a0 = (b + 2..a1).filter(|&a| holds(a)).collect();
    Ok((a0, a1))
}
