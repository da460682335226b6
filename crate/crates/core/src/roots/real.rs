//! Sturm sequences, exact real-root isolation by Descartes bisection, and
//! refinement.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intpoly;
use crate::poly::{homogeneous_horner, sign_of, Poly};
use crate::rational::Rational;

/// Closed rational interval `[lo, hi]`; `lo == hi` marks an exact root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        Rational::midpoint(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Width at most `2^-bits`.
    pub fn is_narrower_than_bits(&self, bits: u32) -> bool {
        self.width() <= Rational::new(BigInt::one(), BigInt::one() << bits).expect("nonzero")
    }
}

/// A point on the extended real line for Sturm counts.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

/// Sturm chain of the square-free part of a polynomial, stored as integer
/// coefficient vectors. Each member is its remainder scaled by a positive
/// constant, so sign patterns are unchanged.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = p.square_free_part().positive_part();
        let first = sf.integer_form().1;
        let mut next = intpoly::primitive(sf.derivative().integer_form().1);
        let mut chain = vec![first];
        while !next.is_empty() {
            let prev = chain.last().expect("nonempty");
            let mut r = intpoly::prem(prev, &next);
            for c in r.iter_mut() {
                *c = -&*c;
            }
            chain.push(std::mem::replace(&mut next, intpoly::primitive(r)));
        }
        Ok(SturmSequence { chain })
    }

    /// Sign of the square-free part at `x`.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign_of(&homogeneous_horner(&self.chain[0], x))
    }

    /// Sign changes in the chain at `b`, zeros dropped.
    pub fn variations(&self, b: &Bound) -> usize {
        let signs = self.chain.iter().map(|c| match b {
            Bound::At(x) => sign_of(&homogeneous_horner(c, x)),
            Bound::PosInf => sign_of(c.last().expect("nonzero member")),
            Bound::NegInf => {
                let s = sign_of(c.last().expect("nonzero member"));
                if (c.len() - 1) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        let mut count = 0;
        let mut last = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    let s = SturmSequence::new(p)?;
    Ok(s.count(&Bound::At(lo.clone()), &Bound::At(hi.clone())))
}

/// Number of distinct real roots of `p` in `(x, inf)`.
pub fn count_above(p: &Poly, x: &Rational) -> Result<usize> {
    let s = SturmSequence::new(p)?;
    Ok(s.count(&Bound::At(x.clone()), &Bound::PosInf))
}

/// Power of two strictly above every root modulus, from Fujiwara's bound
/// `2 max |c_{n-k} / c_n|^(1/k)`. Dyadic bisection points then hit small
/// dyadic roots exactly.
pub fn root_bound(p: &Poly) -> Rational {
    let (_, ints) = p.integer_form();
    let Some((lead, rest)) = ints.split_last() else {
        return Rational::one();
    };
    let n = rest.len() as i64;
    let lead_bits = lead.bits() as i64;
    let mut exp: i64 = 0;
    for (i, c) in rest.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // |c / lead| < 2^(bits(c) - bits(lead) + 1)
        let k = n - i as i64;
        let e = (c.bits() as i64 - lead_bits + 1).div_euclid(k) + 1;
        exp = exp.max(e + 1);
    }
    Rational::from(BigInt::one() << exp as usize)
}

/// Disjoint intervals, ascending, each holding exactly one distinct real
/// root of `p`. Non-degenerate intervals have a strict sign change of the
/// square-free part across them.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sf = p.square_free_part().positive_part();
    let (_, ints) = sf.integer_form();
    let m = root_bound(&sf);
    let sign = |x: &Rational| sign_of(&homogeneous_horner(&ints, x));
    // t in (0, 1) maps to x = m (2t - 1)
    let m_int = m.numer().clone();
    let mut q: Vec<BigInt> = Vec::with_capacity(ints.len());
    let mut mp = BigInt::one();
    for c in &ints {
        q.push(c * &mp);
        mp *= &m_int;
    }
    intpoly::taylor_shift(&mut q, -1);
    for (i, c) in q.iter_mut().enumerate() {
        *c <<= i;
    }
    let to_x = |c: &BigInt, k: u32| {
        let t = Rational::new(c.clone(), BigInt::one() << k).expect("nonzero");
        &m * &(&t * &Rational::from(2) - Rational::one())
    };

    let mut out = Vec::new();
    let mut work = vec![(q, BigInt::zero(), 0u32)];
    while let Some((q, c, k)) = work.pop() {
        if q.len() < 2 {
            continue;
        }
        let v = intpoly::unit_interval_variations(&q);
        if v == 0 {
            continue;
        }
        if v == 1 {
            let lo = to_x(&c, k);
            let hi = to_x(&(&c + 1), k);
            if sign(&lo) != 0 && sign(&hi) != 0 {
                out.push(Interval::new(lo, hi));
                continue;
            }
        }
        // 2^n q(t/2) covers the left half, its shift by one the right half
        let n = q.len() - 1;
        let mut left: Vec<BigInt> = q.iter().enumerate().map(|(i, a)| a << (n - i)).collect();
        intpoly::strip_twos(&mut left);
        let mut right = left.clone();
        intpoly::taylor_shift(&mut right, 1);
        let c2 = &c * 2;
        if right[0].is_zero() {
            out.push(Interval::point(to_x(&(&c2 + 1), k + 1)));
            left = intpoly::div_by_x_minus_one(&left);
            right.remove(0);
        }
        work.push((right, &c2 + 1, k + 1));
        work.push((left, c2, k + 1));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Bisects `iv` until its width is at most `2^-bits`. The interval must
/// bracket a sign change of the square-free part of `p`, or already be a
/// root point.
pub fn refine(p: &Poly, iv: &Interval, bits: u32) -> Result<Interval> {
    let sf = p.square_free_part().positive_part();
    refine_square_free(&sf, iv, bits)
}

pub(crate) fn refine_square_free(sf: &Poly, iv: &Interval, bits: u32) -> Result<Interval> {
    let (_, ints) = sf.integer_form();
    let sign = |x: &Rational| sign_of(&homogeneous_horner(&ints, x));
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = sign(&lo);
    if slo == 0 {
        return Ok(Interval::point(lo));
    }
    let shi = sign(&hi);
    if shi == 0 {
        return Ok(Interval::point(hi));
    }
    if slo == shi {
        return Err(Error::NoSignChange {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    let target = Rational::new(BigInt::one(), BigInt::one() << bits).expect("nonzero");
    while &hi - &lo > target {
        let mid = Rational::midpoint(&lo, &hi);
        let s = sign(&mid);
        if s == 0 {
            return Ok(Interval::point(mid));
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Interval::new(lo, hi))
}

/// Like [`refine_square_free`], but first tries a `2^-bits` window around
/// `guess` clipped to `iv`, which costs two sign evaluations when the guess
/// is good.
pub(crate) fn refine_near(sf: &Poly, iv: &Interval, guess: &Rational, bits: u32) -> Result<Interval> {
    if iv.is_point() {
        return Ok(iv.clone());
    }
    let (_, ints) = sf.integer_form();
    let sign = |x: &Rational| sign_of(&homogeneous_horner(&ints, x));
    let scale = BigInt::one() << (bits + 1);
    let k = (guess * &Rational::from(scale.clone()) + Rational::ratio(1, 2)).floor();
    let centre = Rational::new(k.clone(), scale.clone()).expect("nonzero");
    if iv.contains(&centre) && sign(&centre) == 0 {
        return Ok(Interval::point(centre));
    }
    let lo = Rational::new(k.clone() - 1, scale.clone()).expect("nonzero").max(iv.lo.clone());
    let hi = Rational::new(k + 1, scale).expect("nonzero").min(iv.hi.clone());
    if lo < hi {
        let (slo, shi) = (sign(&lo), sign(&hi));
        if slo == 0 {
            return Ok(Interval::point(lo));
        }
        if shi == 0 {
            return Ok(Interval::point(hi));
        }
        if slo != shi {
            return Ok(Interval::new(lo, hi));
        }
    }
    refine_square_free(sf, iv, bits)
}

/// Refined interval around the largest real root, or `None` when `p` has no
/// real roots.
pub fn largest_real_root(p: &Poly, bits: u32) -> Result<Option<Interval>> {
    let roots = isolate_real_roots(p)?;
    match roots.last() {
        None => Ok(None),
        Some(iv) => refine(p, iv, bits).map(Some),
    }
}

/// Isolating intervals of the real roots of `p` in `(after, inf)` at which
/// `p` itself changes sign (odd multiplicity).
pub fn sign_changing_roots_above(p: &Poly, after: &Rational) -> Result<Vec<Interval>> {
    let sf = p.square_free_part().positive_part();
    let mut out = Vec::new();
    for iv in isolate_real_roots(p)? {
        if iv.hi <= *after {
            continue;
        }
        let iv = if iv.lo < *after {
            // `after` splits the interval; keep the half holding the root
            let s = sf.sign_at(after);
            if s == 0 || s != sf.sign_at(&iv.hi) {
                continue;
            }
            Interval::new(after.clone(), iv.hi)
        } else {
            iv
        };
        let odd = if iv.is_point() {
            multiplicity(p, &iv.lo) % 2 == 1
        } else {
            p.sign_at(&iv.lo) * p.sign_at(&iv.hi) < 0
        };
        if odd {
            out.push(iv);
        }
    }
    Ok(out)
}

/// Multiplicity of the rational root `r` of `p`.
pub fn multiplicity(p: &Poly, r: &Rational) -> usize {
    let lin = Poly::linear_root(r);
    let mut q = p.clone();
    let mut m = 0;
    while !q.is_zero() && q.eval(r).is_zero() {
        q = q.div_rem(&lin).expect("nonzero divisor").0;
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn counts() {
        assert_eq!(sturm_count(&p("x(x-3)/2"), &q(0), &q(10)).unwrap(), 1);
        assert_eq!(sturm_count(&p("x^2+1"), &q(-10), &q(10)).unwrap(), 0);
        assert_eq!(sturm_count(&p("(x-1)^2 (x-2)"), &q(0), &q(10)).unwrap(), 2);
        // half-open: root at the upper end counted, at the lower end not
        assert_eq!(sturm_count(&p("x-1"), &q(0), &q(1)).unwrap(), 1);
        assert_eq!(sturm_count(&p("x-1"), &q(1), &q(2)).unwrap(), 0);
        assert!(sturm_count(&Poly::zero(), &q(0), &q(1)).is_err());
        assert_eq!(count_above(&p("(x+1)(x-5)(x-7)"), &q(0)).unwrap(), 2);
    }

    #[test]
    fn isolation() {
        let roots = isolate_real_roots(&p("x(x^2-4)/3")).unwrap();
        assert_eq!(roots, vec![Interval::point(q(-2)), Interval::point(q(0)), Interval::point(q(2))]);
        assert!(isolate_real_roots(&p("5")).unwrap().is_empty());
        let roots = isolate_real_roots(&p("x(x+7)(x+1)(x-2)")).unwrap();
        assert_eq!(roots.len(), 4);
        for (iv, r) in roots.iter().zip([-7, -1, 0, 2]) {
            assert!(iv.contains(&q(r)), "{iv:?} misses {r}");
        }
        assert!(roots[3].is_point());
    }

    #[test]
    fn isolation_of_irrational_roots_brackets() {
        let f = p("(x^2-2)(x^2-3)(x-1/3)");
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots.len(), 5);
        for w in roots.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        for iv in roots.iter().filter(|iv| !iv.is_point()) {
            assert!(f.sign_at(&iv.lo) * f.sign_at(&iv.hi) < 0);
        }
    }

    #[test]
    fn refinement() {
        let f = p("x^2-2");
        let iv = refine(&f, &Interval::new(q(1), q(2)), 60).unwrap();
        assert!(iv.is_narrower_than_bits(60));
        assert!(iv.lo.to_f64() <= std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 <= iv.hi.to_f64());
        assert!(f.sign_at(&iv.lo) < 0 && f.sign_at(&iv.hi) > 0);
        assert!(matches!(
            refine(&f, &Interval::new(q(2), q(3)), 10),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn largest_root() {
        assert_eq!(largest_real_root(&p("x(x-3)/2"), 40).unwrap(), Some(Interval::point(q(3))));
        assert_eq!(largest_real_root(&p("x^2+1"), 40).unwrap(), None);
    }

    #[test]
    fn sign_changing_roots() {
        // double root at 1 does not change sign, simple root at 3 does
        let f = p("(x-1)^2 (x-3) (x+2)");
        let ivs = sign_changing_roots_above(&f, &q(0)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&q(3)));
        let g = p("(x^2-2)");
        let ivs = sign_changing_roots_above(&g, &q(0)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(!ivs[0].lo.is_negative() && ivs[0].contains(&"1.4142".parse().unwrap()));
    }
}
