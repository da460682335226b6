//! Dense univariate polynomials over `Rational`.
//!
//! Index `i` of the coefficient vector holds the coefficient of `x^i`. The
//! highest stored coefficient is always nonzero; the zero polynomial stores
//! nothing.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intpoly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// Integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Poly::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplicity of the root at zero (index of the lowest nonzero
    /// coefficient). Zero for the zero polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i as i64))
                .collect(),
        )
    }

    /// Exact evaluation by homogeneous integer Horner: with `x = n/d`, the
    /// sum `sum c_i n^i d^(deg-i)` is formed in integers and divided once.
    pub fn eval(&self, x: &Rational) -> Rational {
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        let (lcm, ints) = self.integer_form();
        let acc = homogeneous_horner(&ints, x);
        let den = lcm * num_traits::pow(x.denom().clone(), deg);
        Rational::new(acc, den).expect("nonzero denominator")
    }

    /// Sign of `self(x)` as -1, 0 or 1 without forming the reduced value.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (_, ints) = self.integer_form();
        sign_of(&homogeneous_horner(&ints, x))
    }

    /// Returns `q` with `q(t) = self(t + c)`.
    pub fn shift(&self, c: &Rational) -> Poly {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if n <= 1 || c.is_zero() {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = c * &a[j + 1];
                a[j] += &t;
            }
        }
        Poly::new(a)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Euclidean division. Errors when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = divisor.leading().recip()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] -= &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic copy; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().recip().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return if self.is_zero() { other.monic() } else { self.monic() };
        }
        // powers of x separately, so the modular test sees the rest
        let v = self.valuation().min(other.valuation());
        let (_, a) = self.content_primitive();
        let (_, b) = other.content_primitive();
        let mut a = a[self.valuation()..].to_vec();
        let mut b = b[other.valuation()..].to_vec();
        let x_pow = Poly::monomial(Rational::one(), v);
        if a.len() > 1 && b.len() > 1 && intpoly::coprime_mod_primes(&a, &b) {
            return x_pow;
        }
        while !b.is_empty() {
            let r = intpoly::primitive(intpoly::prem(&a, &b));
            a = b;
            b = r;
        }
        &x_pow * &Poly::new(a.into_iter().map(Rational::from).collect()).monic()
    }

    /// `self / gcd(self, self')`: same distinct roots, all simple.
    pub fn square_free_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("nonzero gcd").0
    }

    /// Yun's square-free factorization: monic, pairwise coprime, square-free
    /// factors `f_i` with `self = lc * prod f_i^i`. Constant factors omitted.
    pub fn square_free_factorization(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let c = f.gcd(&df);
        let mut w = f.div_rem(&c).expect("nonzero").0;
        let mut y = df.div_rem(&c).expect("nonzero").0;
        let mut z = &y - &w.derivative();
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let g = w.gcd(&z);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            w = w.div_rem(&g).expect("nonzero").0;
            y = z.div_rem(&g).expect("nonzero").0;
            z = &y - &w.derivative();
            i += 1;
        }
        out
    }

    /// `(lcm, ints)` with `self = ints / lcm`, where `lcm` is the positive
    /// least common multiple of the coefficient denominators.
    pub fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        (lcm, ints)
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let (lcm, ints) = self.integer_form();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        let content = Rational::new(g, lcm).expect("positive lcm");
        (content, prim)
    }

    /// Primitive integer polynomial with positive leading coefficient and the
    /// same roots. Signs flip when the content is negative; see
    /// [`Poly::positive_part`] for a sign-preserving version.
    pub fn primitive(&self) -> Poly {
        let (_, prim) = self.content_primitive();
        Poly::new(prim.into_iter().map(Rational::from).collect())
    }

    /// `self` divided by the absolute value of its content: integer
    /// coefficients, same sign everywhere.
    pub fn positive_part(&self) -> Poly {
        let (content, prim) = self.content_primitive();
        let p = Poly::new(prim.into_iter().map(Rational::from).collect());
        if content.is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Polynomial with integer coefficients given highest power first, as
    /// typed in printed tables.
    pub fn from_ints_desc(coeffs: &[i64]) -> Self {
        let mut v: Vec<i64> = coeffs.to_vec();
        v.reverse();
        Poly::from_ints(&v)
    }
}

pub(crate) fn sign_of(n: &BigInt) -> i32 {
    if n.is_zero() {
        0
    } else if n.is_negative() {
        -1
    } else {
        1
    }
}

/// `sum ints[i] * num^i * den^(deg - i)` for `x = num/den`.
pub(crate) fn homogeneous_horner(ints: &[BigInt], x: &Rational) -> BigInt {
    let Some((lead, rest)) = ints.split_last() else {
        return BigInt::zero();
    };
    let num = x.numer();
    let den = x.denom();
    let mut acc = lead.clone();
    if den.is_one() {
        for c in rest.iter().rev() {
            acc = acc * num + c;
        }
        return acc;
    }
    let mut dpow = den.clone();
    for c in rest.iter().rev() {
        acc = acc * num + c * &dpow;
        dpow *= den;
    }
    acc
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    /// Convolution carried out on the cleared-denominator integer forms.
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (l1, a) = self.integer_form();
        let (l2, b) = rhs.integer_form();
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                prod[i + j] += ai * bj;
            }
        }
        let den = l1 * l2;
        Poly::new(
            prod.into_iter()
                .map(|c| Rational::new(c, den.clone()).expect("nonzero"))
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! owned_poly_ops {
    ($Trait:ident, $method:ident) => {
        impl $Trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $Trait<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $Trait<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

owned_poly_ops!(Add, add);
owned_poly_ops!(Sub, sub);
owned_poly_ops!(Mul, mul);

impl fmt::Display for Poly {
    /// Highest power first, e.g. `1/2*x^2 + 3/2*x`. The output parses back
    /// with `Poly::from_str`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag == Rational::one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    degree: i64,
    coeffs: Vec<Rational>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            degree: self.degree().map_or(-1, |d| d as i64),
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(deserializer)?;
        let p = Poly::new(raw.coeffs);
        let d = p.degree().map_or(-1, |d| d as i64);
        if d != raw.degree {
            return Err(D::Error::custom(format!(
                "degree field {} disagrees with coefficients (degree {d})",
                raw.degree
            )));
        }
        Ok(p)
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses expressions in `x` such as `1/48*(x^2+4x+16)*(x+3)^2*x^2`.
    /// Supports `+ - * / ^`, parentheses, implicit multiplication and
    /// decimal literals. Division is only allowed by nonzero constants.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = ExprParser { src: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if d.degree() != Some(0) {
                        return Err(self.err("division by a non-constant or zero"));
                    }
                    acc = acc.scale(&d.leading().recip()?);
                }
                Some(c) if c == b'(' || c == b'x' || c.is_ascii_digit() || c == b'.' => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        if self.peek() == Some(b'+') {
            self.pos += 1;
            return self.factor();
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let exp: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| self.err("expected exponent"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'.')
                {
                    self.pos += 1;
                }
                let lit = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Poly::constant(lit.parse()?))
            }
            _ => Err(self.err("expected a number, 'x' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn addition() {
        assert!((Poly::x() + p("-x")).is_zero());
        assert_eq!(p("(x^2+3x)/2") + p("(x^2+3x)/2"), p("x^2+3x"));
        // P_1 + P_2
        assert_eq!(p("x") + p("(x^2+3x)/2"), p("(x^2+5x)/2"));
    }

    #[test]
    fn multiplication() {
        let q = p("3/7 x^3 - 2x + 5");
        assert_eq!(&Poly::one() * &q, q);
        assert_eq!(Poly::x() * Poly::x(), p("x^2"));
        assert_eq!(p("x") * p("(x^2+3x)/2"), p("(x^3+3x^2)/2"));
        assert_eq!((Poly::zero() * q.clone()).degree(), None);
        assert_eq!((q.clone() * q.clone()).degree(), Some(6));
    }

    #[test]
    fn derivative() {
        assert!(Poly::one().derivative().is_zero());
        assert_eq!(p("(x^2+3x)/2").derivative(), p("x + 3/2"));
        assert_eq!(p("x(x+1)(x+8)/6").derivative(), p("(3x^2+18x+8)/6"));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("(x^2+3x)/2").eval(&Rational::from(2)), Rational::from(5));
        let q = p("7/3 x^4 - x + 11/5");
        assert_eq!(q.eval(&Rational::zero()), r(11, 5));
        assert_eq!(q.eval(&r(1, 2)), r(7, 48) - r(1, 2) + r(11, 5));
        assert_eq!(q.sign_at(&r(1, 2)), 1);
        assert_eq!(p("x - 1/3").sign_at(&r(1, 3)), 0);
        assert_eq!(Poly::zero().eval(&r(3, 4)), Rational::zero());
    }

    #[test]
    fn taylor_shift() {
        assert_eq!(p("x^2").shift(&Rational::zero()), p("x^2"));
        assert_eq!(p("x^2").shift(&Rational::one()), p("x^2+2x+1"));
        assert_eq!(p("x(x-3)/2").shift(&Rational::from(3)), p("(x^2+3x)/2"));
    }

    #[test]
    fn division_and_gcd() {
        let a = p("(x-1)(x+2)(x-1/2)");
        let b = p("(x-1)(x+5)");
        let (q, rem) = a.div_rem(&b).unwrap();
        assert_eq!(&q * &b + rem.clone(), a);
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(a.gcd(&b), p("x-1"));
        assert!(a.div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn square_free() {
        let f = p("3(x-1)^3 (x+2)^2 x");
        assert_eq!(f.square_free_part().monic(), p("(x-1)(x+2)x"));
        let fac = f.square_free_factorization();
        assert_eq!(fac, vec![(p("x"), 1), (p("x+2"), 2), (p("x-1"), 3)]);
    }

    #[test]
    fn content_and_primitive() {
        let (c, prim) = p("x(x-3)/2").content_primitive();
        assert_eq!(c, r(1, 2));
        assert_eq!(prim, vec![BigInt::from(0), BigInt::from(-3), BigInt::from(1)]);
        let (c, _) = p("-2/3 x + 4/3").content_primitive();
        assert_eq!(c, r(-2, 3));
        assert_eq!(p("-2/3 x + 4/3").positive_part(), p("-x + 2"));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q = p("1/48*(x^2+4x+16)*(x+3)^2*x^2");
        assert_eq!(q.to_string().parse::<Poly>().unwrap(), q);
        assert_eq!(p("-x^2"), -p("x^2"));
        assert_eq!(p("5/6 x^2"), Poly::monomial(r(5, 6), 2));
        assert_eq!(p("2.5x"), Poly::monomial(r(5, 2), 1));
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("x - 1").to_string(), "x - 1");
        assert!("x/x".parse::<Poly>().is_err());
        assert!("(x+1".parse::<Poly>().is_err());
        assert!("x^".parse::<Poly>().is_err());
        assert!("y".parse::<Poly>().is_err());
    }

    #[test]
    fn json_shape() {
        let q = p("(x^2+3x)/2");
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(
            s,
            r#"{"degree":2,"coeffs":[{"num":"0","den":"1"},{"num":"3","den":"2"},{"num":"1","den":"2"}]}"#
        );
        assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), q);
        let z = serde_json::to_string(&Poly::zero()).unwrap();
        assert_eq!(z, r#"{"degree":-1,"coeffs":[]}"#);
        let bad = r#"{"degree":3,"coeffs":[{"num":"1","den":"1"}]}"#;
        assert!(serde_json::from_str::<Poly>(bad).is_err());
    }
}
