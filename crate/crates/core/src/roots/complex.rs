//! Simultaneous approximation of all complex roots (Aberth-Ehrlich).
//!
//! Each square-free factor is solved separately: a double-precision phase
//! gets close, then the iteration continues in `BigFloat` arithmetic at the
//! requested mantissa width.

use std::f64::consts::PI;

use astro_float::BigFloat;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::float::{self, RM};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::roots::real::{isolate_real_roots, refine_near, root_bound, Interval};

pub const DEFAULT_FLOAT_BITS: u32 = 113;
const F64_ITERATIONS: usize = 500;
const BIG_ITERATIONS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Real,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealRoot {
    pub interval: Interval,
    pub multiplicity: usize,
}

/// One approximated root. `re` and `im` are the exact values of the final
/// floating iterate. `residual` is `|p(z)| / sum |c_k| |z|^k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexRoot {
    pub kind: RootKind,
    pub re: Rational,
    pub im: Rational,
    pub residual: f64,
    pub converged: bool,
    /// Index into `RootSet::real_roots` for roots labeled real.
    pub real_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub source: String,
    pub degree: usize,
    pub float_bits: u32,
    pub real_roots: Vec<RealRoot>,
    pub complex_roots: Vec<ComplexRoot>,
}

pub const ROOT_CSV_HEADER: &str = "poly_id,a,b,kind,re,im,residual,lo_num,lo_den,hi_num,hi_den";

impl RootSet {
    pub fn real_count(&self) -> usize {
        self.complex_roots.iter().filter(|r| r.kind == RootKind::Real).count()
    }

    pub fn all_converged(&self) -> bool {
        self.complex_roots.iter().all(|r| r.converged)
    }

    pub fn max_residual(&self) -> f64 {
        self.complex_roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    /// Largest real part over roots not labeled real.
    pub fn max_nonreal_re(&self) -> Option<Rational> {
        self.complex_roots
            .iter()
            .filter(|r| r.kind == RootKind::Complex)
            .map(|r| r.re.clone())
            .max()
    }

    /// Largest real root interval.
    pub fn largest_real(&self) -> Option<&Interval> {
        self.real_roots.iter().map(|r| &r.interval).max_by(|a, b| a.lo.cmp(&b.lo))
    }

    /// One CSV line per root (with multiplicity), in `ROOT_CSV_HEADER`
    /// layout, optionally restricted to positive real part.
    pub fn csv_rows(&self, poly_id: &str, a: Option<usize>, b: Option<usize>, positive_only: bool) -> Vec<String> {
        let opt = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
        self.complex_roots
            .iter()
            .filter(|r| !positive_only || r.re.is_positive())
            .map(|r| {
                let (kind, bounds) = match (r.kind, r.real_index) {
                    (RootKind::Real, Some(i)) => {
                        let iv = &self.real_roots[i].interval;
                        (
                            "real",
                            format!("{},{},{},{}", iv.lo.numer(), iv.lo.denom(), iv.hi.numer(), iv.hi.denom()),
                        )
                    }
                    _ => ("complex", ",,,".to_string()),
                };
                format!(
                    "{poly_id},{},{},{kind},{},{},{:.3e},{bounds}",
                    opt(a),
                    opt(b),
                    r.re.to_significant(24),
                    r.im.to_significant(24),
                    r.residual
                )
            })
            .collect()
    }
}

#[derive(Clone)]
struct Cf {
    re: BigFloat,
    im: BigFloat,
}

impl Cf {
    fn zero(p: usize) -> Self {
        Cf { re: BigFloat::from_word(0, p), im: BigFloat::from_word(0, p) }
    }

    fn from_c64(z: Complex64, p: usize) -> Self {
        Cf { re: BigFloat::from_f64(z.re, p), im: BigFloat::from_f64(z.im, p) }
    }

    fn real(x: BigFloat, p: usize) -> Self {
        Cf { re: x, im: BigFloat::from_word(0, p) }
    }

    fn add(&self, o: &Cf, p: usize) -> Cf {
        Cf { re: self.re.add(&o.re, p, RM), im: self.im.add(&o.im, p, RM) }
    }

    fn sub(&self, o: &Cf, p: usize) -> Cf {
        Cf { re: self.re.sub(&o.re, p, RM), im: self.im.sub(&o.im, p, RM) }
    }

    fn mul(&self, o: &Cf, p: usize) -> Cf {
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Cf { re, im }
    }

    fn norm_sqr(&self, p: usize) -> BigFloat {
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    fn abs(&self, p: usize) -> BigFloat {
        self.norm_sqr(p).sqrt(p, RM)
    }

    fn div(&self, o: &Cf, p: usize) -> Cf {
        let d = o.norm_sqr(p);
        let re = self.re.mul(&o.re, p, RM).add(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.im.mul(&o.re, p, RM).sub(&self.re.mul(&o.im, p, RM), p, RM);
        Cf { re: re.div(&d, p, RM), im: im.div(&d, p, RM) }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// `(f(z), f'(z))` by Horner; coefficients highest power first.
fn horner_big(coeffs: &[BigFloat], z: &Cf, p: usize) -> (Cf, Cf) {
    let mut f = Cf::zero(p);
    let mut d = Cf::zero(p);
    for c in coeffs {
        d = d.mul(z, p).add(&f, p);
        f = f.mul(z, p).add(&Cf::real(c.clone(), p), p);
    }
    (f, d)
}

fn horner_f64(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut f = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        d = d * z + f;
        f = f * z + c;
    }
    (f, d)
}

/// Aberth correction for root `k` given `w = f/f'`.
fn aberth_step_f64(z: &[Complex64], k: usize, w: Complex64) -> Complex64 {
    let s: Complex64 = z
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, &zj)| (z[k] - zj).inv())
        .sum();
    w / (Complex64::new(1.0, 0.0) - w * s)
}

/// Initial guesses on a circle whose radius bounds the root moduli.
fn initial_guesses(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[0];
    let radius = (1..=d)
        .map(|k| (coeffs[k] / lead).abs().powf(1.0 / k as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3)
        * 2.0;
    (0..d)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / d as f64 + 0.4))
        .collect()
}

fn aberth_f64(coeffs: &[f64]) -> Vec<Complex64> {
    let mut z = initial_guesses(coeffs);
    let d = z.len();
    for _ in 0..F64_ITERATIONS {
        let mut moved = false;
        for k in 0..d {
            let (f, df) = horner_f64(coeffs, z[k]);
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            let step = aberth_step_f64(&z, k, f / df);
            if !step.is_finite() {
                continue;
            }
            z[k] -= step;
            if step.norm() > 1e-15 * z[k].norm().max(1e-300) {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    z
}

/// Relative residual `|f(z)| / sum |c_k| |z|^k`.
fn relative_residual(coeffs: &[BigFloat], z: &Cf, p: usize) -> BigFloat {
    let (f, _) = horner_big(coeffs, z, p);
    let r = z.abs(p);
    let mut scale = BigFloat::from_word(0, p);
    for c in coeffs {
        scale = scale.mul(&r, p, RM).add(&c.abs(), p, RM);
    }
    if scale.is_zero() {
        return BigFloat::from_word(0, p);
    }
    f.abs(p).div(&scale, p, RM)
}

fn aberth_big(coeffs: &[BigFloat], start: Vec<Complex64>, p: usize, tol: &BigFloat) -> Vec<Cf> {
    let d = start.len();
    let mut z: Vec<Cf> = start.into_iter().map(|c| Cf::from_c64(c, p)).collect();
    let one = Cf::real(BigFloat::from_word(1, p), p);
    let mut done = vec![false; d];
    for _ in 0..BIG_ITERATIONS {
        let mut moved = false;
        for k in 0..d {
            if done[k] {
                continue;
            }
            let (f, df) = horner_big(coeffs, &z[k], p);
            if f.is_zero() || df.is_zero() {
                continue;
            }
            let w = f.div(&df, p);
            let mut s = Cf::zero(p);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let diff = z[k].sub(zj, p);
                    if !diff.is_zero() {
                        s = s.add(&one.div(&diff, p), p);
                    }
                }
            }
            let denom = one.sub(&w.mul(&s, p), p);
            if denom.is_zero() {
                continue;
            }
            let step = w.div(&denom, p);
            let size = step.abs(p);
            if size.is_nan() || size.is_inf() {
                continue;
            }
            z[k] = z[k].sub(&step, p);
            let scale = z[k].abs(p);
            let bound = if scale.is_zero() { tol.clone() } else { scale.mul(tol, p, RM) };
            if size > bound {
                moved = true;
            } else {
                done[k] = true;
            }
        }
        if !moved {
            break;
        }
    }
    z
}

fn to_big_coeffs(p: &Poly, prec: usize) -> Vec<BigFloat> {
    p.coeffs().iter().rev().map(|c| float::from_rational(c, prec)).collect()
}

/// Approximates every root of `p` (with multiplicity) at `float_bits`
/// mantissa bits and labels the real ones against exact isolation.
pub fn complex_roots(p: &Poly, float_bits: u32) -> Result<RootSet> {
    complex_roots_named(p, float_bits, "p")
}

pub fn complex_roots_named(p: &Poly, float_bits: u32, source: &str) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if float_bits < 24 {
        return Err(Error::InvalidArgument(format!("float_bits {float_bits} below 24")));
    }
    let prec = float_bits as usize;
    let work = prec + 32;
    let degree = p.degree().unwrap_or(0);
    let full = to_big_coeffs(p, work);
    let converged_below = BigFloat::from_word(1, work).div(
        &float::from_rational(&Rational::from(2).pow(float_bits / 2), work),
        work,
        RM,
    );
    let step_tol = BigFloat::from_word(1, work).div(
        &float::from_rational(&Rational::from(2).pow(float_bits), work),
        work,
        RM,
    );

    let mut set = RootSet {
        source: source.to_string(),
        degree,
        float_bits,
        real_roots: Vec::new(),
        complex_roots: Vec::new(),
    };

    // exact zero roots
    let v = p.valuation();
    if v > 0 {
        set.real_roots.push(RealRoot { interval: Interval::point(Rational::zero()), multiplicity: v });
        for _ in 0..v {
            set.complex_roots.push(ComplexRoot {
                kind: RootKind::Real,
                re: Rational::zero(),
                im: Rational::zero(),
                residual: 0.0,
                converged: true,
                real_index: Some(0),
            });
        }
    }
    let rest = Poly::new(p.coeffs()[v..].to_vec());

    for (factor, mult) in rest.square_free_factorization() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let monic = factor.monic();
        // f64 phase on m(s y) / s^n, whose roots lie in the unit disk
        let s = root_bound(&monic);
        let s_inv = s.recip()?;
        let mut scale = Rational::one();
        let fcoeffs: Vec<f64> = monic
            .coeffs()
            .iter()
            .rev()
            .map(|c| {
                let v = (c * &scale).to_f64();
                scale = &scale * &s_inv;
                v
            })
            .collect();
        let s_f = s.to_f64();
        let start: Vec<Complex64> = if fcoeffs.iter().all(|c| c.is_finite()) {
            aberth_f64(&fcoeffs).into_iter().map(|z| z * s_f).collect()
        } else {
            initial_guesses(&fcoeffs.iter().map(|c| if c.is_finite() { *c } else { f64::MAX }).collect::<Vec<_>>())
                .into_iter()
                .map(|z| z * s_f)
                .collect()
        };
        let big = to_big_coeffs(&monic, work);
        let approx = aberth_big(&big, start, work, &step_tol);

        // label the r roots closest to the real axis as real
        let sf = factor.positive_part();
        let intervals = isolate_real_roots(&sf)?;
        let r = intervals.len();
        let im_keys: Vec<Rational> = approx.iter().map(|z| float::to_rational(&z.im.abs())).collect();
        let mut order: Vec<usize> = (0..approx.len()).collect();
        order.sort_by(|&i, &j| im_keys[i].cmp(&im_keys[j]));
        let re_keys: Vec<Rational> = approx.iter().map(|z| float::to_rational(&z.re)).collect();
        let mut real_idx: Vec<usize> = order[..r.min(order.len())].to_vec();
        real_idx.sort_by(|&i, &j| re_keys[i].cmp(&re_keys[j]));
        let mut label = vec![None; approx.len()];
        for (&i, iv) in real_idx.iter().zip(intervals) {
            let iv = refine_near(&sf, &iv, &re_keys[i], float_bits / 2)?;
            set.real_roots.push(RealRoot { interval: iv, multiplicity: mult });
            label[i] = Some(set.real_roots.len() - 1);
        }

        for (i, z) in approx.iter().enumerate() {
            let (re, im) = match label[i] {
                Some(j) if set.real_roots[j].interval.is_point() => (set.real_roots[j].interval.lo.clone(), Rational::zero()),
                Some(_) => (float::to_rational(&z.re), Rational::zero()),
                None => (float::to_rational(&z.re), float::to_rational(&z.im)),
            };
            let zr = Cf {
                re: float::from_rational(&re, work),
                im: float::from_rational(&im, work),
            };
            let res = relative_residual(&full, &zr, work);
            let converged = res < converged_below;
            for _ in 0..mult {
                set.complex_roots.push(ComplexRoot {
                    kind: if label[i].is_some() { RootKind::Real } else { RootKind::Complex },
                    re: re.clone(),
                    im: im.clone(),
                    residual: float::to_f64(&res),
                    converged,
                    real_index: label[i],
                });
            }
        }
    }
    set.real_roots.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));
    set.complex_roots.sort_by(|a, b| (&a.re, &a.im).cmp(&(&b.re, &b.im)));
    relabel(&mut set);
    Ok(set)
}

/// Points each real-labeled root at the interval closest to its value.
fn relabel(set: &mut RootSet) {
    let ivs: Vec<Interval> = set.real_roots.iter().map(|r| r.interval.clone()).collect();
    for root in set.complex_roots.iter_mut().filter(|r| r.kind == RootKind::Real) {
        let dist = |iv: &Interval| {
            if iv.contains(&root.re) {
                Rational::zero()
            } else {
                (iv.midpoint() - &root.re).abs()
            }
        };
        root.real_index = (0..ivs.len()).min_by(|&i, &j| dist(&ivs[i]).cmp(&dist(&ivs[j])));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn unit_imaginary_pair() {
        let set = complex_roots(&p("x^2+1"), 113).unwrap();
        assert_eq!(set.complex_roots.len(), 2);
        assert_eq!(set.real_count(), 0);
        for r in &set.complex_roots {
            assert!(r.re.abs() < Rational::ratio(1, 1 << 40));
            assert!((r.im.abs() - Rational::one()).abs() < Rational::ratio(1, 1 << 40));
            assert!(r.converged);
            assert!(r.residual < 1e-30);
        }
    }

    #[test]
    fn multiplicities_and_zero_roots() {
        let f = p("x^2 (x-1)^3 (x^2+x+1)");
        let set = complex_roots(&f, 113).unwrap();
        assert_eq!(set.complex_roots.len(), 7);
        assert_eq!(set.real_count(), 5);
        assert_eq!(set.real_roots.len(), 2);
        assert_eq!(set.real_roots[0].multiplicity, 2);
        assert_eq!(set.real_roots[1].multiplicity, 3);
        assert!(set.all_converged());
    }

    #[test]
    fn real_labels_match_sturm() {
        let f = p("(x^2-2)(x^2+3)(x-5)(x+1/7)");
        let set = complex_roots(&f, 128).unwrap();
        assert_eq!(set.complex_roots.len(), 6);
        assert_eq!(set.real_count(), 4);
        for r in set.complex_roots.iter().filter(|r| r.kind == RootKind::Real) {
            let iv = &set.real_roots[r.real_index.unwrap()].interval;
            let tol = Rational::ratio(1, 1 << 30);
            assert!(&iv.lo - &tol <= r.re && r.re <= &iv.hi + &tol);
        }
        let csv = set.csv_rows("demo", None, None, true);
        assert_eq!(csv.iter().filter(|l| l.contains(",real,")).count(), 2);
        assert!(csv.iter().all(|l| l.split(',').count() == 11));
    }

    #[test]
    fn rejects_zero_polynomial() {
        assert!(complex_roots(&Poly::zero(), 113).is_err());
    }
}
