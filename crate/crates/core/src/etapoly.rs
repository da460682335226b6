//! The polynomials `P_n(x)` defined by
//! `sum_n P_n(x) q^n = prod_{k>=1} (1 - q^k)^(-x)`.
//!
//! Logarithmic differentiation in `q` gives the recurrence
//! `n P_n(x) = x * sum_{k=1}^{n} sigma(k) P_{n-k}(x)`, used both for the
//! polynomials themselves and for values at a fixed point. The composition
//! sum for the coefficients is kept as an independent oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::report::{ScanReport, Value};
use crate::sigma::SigmaTable;

/// Default cap on `n` for [`kostant_coeff`]; the number of compositions
/// grows like `2^(n-1)`.
pub const KOSTANT_DEFAULT_CAP: usize = 14;

/// `P_0 .. P_{n_max}` together with the divisor sums that built them.
#[derive(Clone, Debug)]
pub struct EtaTable {
    n_max: usize,
    polys: Vec<Poly>,
    sigma: SigmaTable,
}

/// `P_0(x) .. P_{n_max}(x)` at one rational point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValueSequence {
    pub x: Rational,
    pub n_max: usize,
    pub values: Vec<Rational>,
}

impl EtaTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn sigma(&self) -> &SigmaTable {
        &self.sigma
    }

    /// `P_n`. Panics when `n > n_max`; see [`EtaTable::try_get`].
    pub fn get(&self, n: usize) -> &Poly {
        &self.polys[n]
    }

    pub fn try_get(&self, n: usize) -> Result<&Poly> {
        self.polys.get(n).ok_or(Error::InsufficientDepth {
            have: self.n_max,
            need: n,
        })
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            Err(Error::InsufficientDepth {
                have: self.n_max,
                need: n,
            })
        } else {
            Ok(())
        }
    }

    /// `P_n(x)` for all `n <= n_max` by the value recurrence.
    pub fn values_at(&self, x: &Rational) -> ValueSequence {
        eval_sequence_with(x, self.n_max, &self.sigma)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.polys).expect("polynomials serialize")
    }
}

/// Builds `P_0 .. P_{n_max}`.
///
/// Works on `Q_n = n! P_n`, which has integer coefficients:
/// `Q_n = x * sum_k sigma(k) (n-1)!/(n-k)! Q_{n-k}`.
pub fn gen_table(n_max: usize) -> EtaTable {
    let sigma = SigmaTable::new(n_max.max(1));
    let mut scaled: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    let mut factorial = BigInt::one();
    let mut polys = vec![Poly::one()];
    for n in 1..=n_max {
        factorial *= n;
        // sum_k sigma(k) * (n-1)(n-2)...(n-k+1) * Q_{n-k}, degree n-1
        let mut acc = vec![BigInt::zero(); n];
        let mut falling = BigInt::one();
        for k in 1..=n {
            if k > 1 {
                falling *= n - k + 1;
            }
            let w = &falling * sigma.at(k);
            for (i, c) in scaled[n - k].iter().enumerate() {
                acc[i] += &w * c;
            }
        }
        let mut q = vec![BigInt::zero()];
        q.extend(acc);
        polys.push(Poly::new(
            q.iter()
                .map(|c| Rational::new(c.clone(), factorial.clone()).expect("n! > 0"))
                .collect(),
        ));
        scaled.push(q);
    }
    EtaTable { n_max, polys, sigma }
}

/// `A_{n,m}`, the coefficient of `x^m` in `P_n`, summed directly over all
/// compositions of `n` into `m` positive parts. Capped at
/// [`KOSTANT_DEFAULT_CAP`].
pub fn kostant_coeff(n: usize, m: usize) -> Result<Rational> {
    kostant_coeff_capped(n, m, KOSTANT_DEFAULT_CAP)
}

pub fn kostant_coeff_capped(n: usize, m: usize, cap: usize) -> Result<Rational> {
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= n, got n = {n}, m = {m}"
        )));
    }
    if n > cap {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the composition cap {cap}"
        )));
    }
    let sigma = SigmaTable::new(n);
    let weight: Vec<Rational> = (0..=n)
        .map(|k| {
            if k == 0 {
                Rational::zero()
            } else {
                Rational::ratio(sigma.at(k) as i64, k as i64)
            }
        })
        .collect();

    // Odometer over the first m-1 parts; the last part takes the remainder.
    let mut parts = vec![1usize; m - 1];
    let mut total = Rational::zero();
    loop {
        let head: usize = parts.iter().sum();
        if head < n {
            let last = n - head;
            let term: Rational = parts
                .iter()
                .chain(std::iter::once(&last))
                .map(|&k| weight[k].clone())
                .product();
            total += &term;
        }
        // advance
        let mut i = parts.len();
        loop {
            if i == 0 {
                let m_fact: BigInt = (1..=m).map(BigInt::from).product();
                return Ok(total / Rational::from(m_fact));
            }
            i -= 1;
            parts[i] += 1;
            if parts.iter().sum::<usize>() < n {
                break;
            }
            parts[i] = 1;
        }
    }
}

/// `sum_{k=1}^{n} C(n-1, k-1) x^k / k!`, a coefficientwise lower bound for
/// `P_n` (every composition weight `sigma(k)/k` is at least 1).
pub fn laguerre_lower(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::InvalidArgument("laguerre_lower needs n >= 1".into()));
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut binom = BigInt::one(); // C(n-1, k-1)
    let mut fact = BigInt::one(); // k!
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        fact *= k;
        *c = Rational::new(binom.clone(), fact.clone()).expect("k! > 0");
        // C(n-1, k) = C(n-1, k-1) * (n-k) / k
        binom = binom * (n - k) / k;
    }
    Ok(Poly::new(coeffs))
}

/// Coefficientwise `P_n - laguerre_lower(n) >= 0` for `1 <= n <= n_max`.
pub fn check_laguerre_bound(table: &EtaTable) -> ScanReport {
    let mut report = ScanReport::new("laguerre_bound").param("n_max", table.n_max());
    for n in 1..=table.n_max() {
        let slack = table.get(n) - &laguerre_lower(n).expect("n >= 1");
        if let Some((m, c)) = slack.coeffs().iter().enumerate().find(|(_, c)| c.is_negative()) {
            report.push_exception(vec![Value::from(n), Value::from(m), Value::from(c)]);
            report.note(format!("first violation at n = {n}, m = {m}"));
            break;
        }
    }
    report
}

/// `P_0(x) .. P_{n_max}(x)` by the value recurrence, never building the
/// polynomials.
pub fn eval_sequence(x: &Rational, n_max: usize) -> ValueSequence {
    eval_sequence_with(x, n_max, &SigmaTable::new(n_max.max(1)))
}

fn eval_sequence_with(x: &Rational, n_max: usize, sigma: &SigmaTable) -> ValueSequence {
    let values = if x.is_integer() {
        integer_values(x.numer(), n_max, sigma)
            .into_iter()
            .map(Rational::from)
            .collect()
    } else {
        scaled_values(x, n_max, sigma)
    };
    ValueSequence {
        x: x.clone(),
        n_max,
        values,
    }
}

/// For `x = c/d`, runs the recurrence on the integers
/// `Q_n = n! d^n P_n(x)`:
/// `Q_n = c * sum_k sigma(k) (n-1)!/(n-k)! d^(k-1) Q_{n-k}`, nested so that
/// every step multiplies a big integer by a word.
fn scaled_values(x: &Rational, n_max: usize, sigma: &SigmaTable) -> Vec<Rational> {
    let (c, d) = (x.numer(), x.denom());
    let mut q: Vec<BigInt> = vec![BigInt::one()];
    let mut values = vec![Rational::one()];
    let mut denom = BigInt::one();
    for n in 1..=n_max {
        let mut acc = &q[0] * sigma.at(n);
        for k in (1..n).rev() {
            acc = acc * d * (n - k) + &q[n - k] * sigma.at(k);
        }
        let qn = acc * c;
        denom = denom * d * n;
        values.push(Rational::new(qn.clone(), denom.clone()).expect("positive denominator"));
        q.push(qn);
    }
    values
}

/// At an integer point every `P_n(x)` is an integer and the division by
/// `n` is exact.
fn integer_values(x: &BigInt, n_max: usize, sigma: &SigmaTable) -> Vec<BigInt> {
    let mut values: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    values.push(BigInt::one());
    for n in 1..=n_max {
        let mut s = BigInt::zero();
        for k in 1..=n {
            s += &values[n - k] * sigma.at(k);
        }
        values.push(s * x / n);
    }
    values
}

impl ValueSequence {
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    /// CSV rows `n,num,den` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,num,den\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{},{}\n", v.numer(), v.denom()));
        }
        out
    }

    /// `values[n]^2 >= values[n-1] values[n+1]` for all interior `n` in
    /// `lo..=hi`; returns the failing indices.
    pub fn log_concavity_failures(&self, lo: usize, hi: usize) -> Vec<usize> {
        let lo = lo.max(1);
        let hi = hi.min(self.n_max.saturating_sub(1));
        (lo..=hi)
            .filter(|&n| {
                let v = &self.values;
                &v[n] * &v[n] < &v[n - 1] * &v[n + 1]
            })
            .collect()
    }
}

/// `sum_{i+j=n} P_i(x1) P_j(x2) == P_n(x1 + x2)`, evaluated from the table.
pub fn convolution_check(n: usize, x1: &Rational, x2: &Rational, table: &EtaTable) -> Result<bool> {
    table.require(n)?;
    let lhs: Rational = (0..=n)
        .map(|i| table.get(i).eval(x1) * table.get(n - i).eval(x2))
        .sum();
    Ok(lhs == table.get(n).eval(&(x1 + x2)))
}

/// `P_n' = sum_{k=1}^{n} sigma(k)/k P_{n-k}` as an exact polynomial identity.
pub fn derivative_identity_check(table: &EtaTable) -> ScanReport {
    let mut report = ScanReport::new("derivative_identity").param("n_max", table.n_max());
    for n in 1..=table.n_max() {
        let rhs = (1..=n).fold(Poly::zero(), |acc, k| {
            let w = Rational::ratio(table.sigma().at(k) as i64, k as i64);
            acc + table.get(n - k).scale(&w)
        });
        if table.get(n).derivative() != rhs {
            report.push_exception(vec![Value::from(n)]);
        }
    }
    report
}

/// Partition numbers `p(0..=n)` by the dynamic program over part sizes.
/// Independent of the eta recurrence.
pub fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let add = p[total - part].clone();
            p[total] += add;
        }
    }
    p
}
