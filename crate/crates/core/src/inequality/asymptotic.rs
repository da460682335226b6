//! The bound `B_0(x)` and the high-precision main term for
//! `Delta_{a,b}(x)` at large `b`.

use astro_float::BigFloat;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::etapoly::eval_sequence;
use crate::float::{self, RM};
use crate::rational::Rational;

/// `max{2x^11 + x/24, 100/(x-24) + x/24}`.
pub fn b0_bound(x: &Rational) -> Result<Rational> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("b0_bound needs x > 0, got {x}")));
    }
    let x24 = x / &Rational::from(24);
    let pole = x - &Rational::from(24);
    if pole.is_zero() {
        return Err(Error::Pole(format!("100/(x-24) at x = {x}")));
    }
    let poly = Rational::from(2) * x.pow(11) + &x24;
    let hyp = Rational::from(100) / pole + x24;
    Ok(poly.max(hyp))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainTermParams {
    pub a: usize,
    pub b: usize,
    pub x: Rational,
    /// `a - 1 - x/24`
    pub big_a: Rational,
    /// `b - x/24`
    pub big_b: Rational,
    /// `B >= max{2x^11, 100/(x-24)}`
    pub valid: bool,
}

impl MainTermParams {
    pub fn new(a: usize, b: usize, x: &Rational) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::InvalidArgument(format!("main term needs x > 0, got {x}")));
        }
        let x24 = x / &Rational::from(24);
        let big_a = Rational::from(a as i64 - 1) - &x24;
        let big_b = Rational::from(b as i64) - &x24;
        let pole = x - &Rational::from(24);
        let mut need = Rational::from(2) * x.pow(11);
        if !pole.is_zero() {
            need = need.max(Rational::from(100) / &pole);
        }
        let valid = !pole.is_zero() && big_b >= need;
        Ok(MainTermParams { a, b, x: x.clone(), big_a, big_b, valid })
    }
}

/// `pi (x/24)^(x/2+1) (AB)^(-x/4-5/4) exp(pi sqrt(2x/3) (sqrt A + sqrt B)) (sqrt A - sqrt B)`
/// at `p` bits.
pub fn main_term_value(params: &MainTermParams, p: usize) -> Result<BigFloat> {
    if !params.big_a.is_positive() || !params.big_b.is_positive() {
        return Err(Error::InvalidArgument("main term needs A > 0 and B > 0".into()));
    }
    let mut cc = float::consts();
    let w = p + 64;
    let q = |r: &Rational| float::from_rational(r, w);
    let x = &params.x;
    let pi = cc.pi(w, RM);
    let base = q(&(x / &Rational::from(24))).ln(w, RM, &mut cc);
    let e1 = q(&(x / &Rational::from(2) + Rational::one()));
    let t_base = base.mul(&e1, w, RM).exp(w, RM, &mut cc);
    let ab = q(&(&params.big_a * &params.big_b)).ln(w, RM, &mut cc);
    let e2 = q(&(-(x / &Rational::from(4)) - Rational::ratio(5, 4)));
    let t_ab = ab.mul(&e2, w, RM).exp(w, RM, &mut cc);
    let sa = q(&params.big_a).sqrt(w, RM);
    let sb = q(&params.big_b).sqrt(w, RM);
    let c = q(&(Rational::from(2) * x / Rational::from(3))).sqrt(w, RM);
    let t_exp = pi.mul(&c, w, RM).mul(&sa.add(&sb, w, RM), w, RM).exp(w, RM, &mut cc);
    let diff = sa.sub(&sb, w, RM);
    let mut out = pi.mul(&t_base, w, RM).mul(&t_ab, w, RM).mul(&t_exp, w, RM).mul(&diff, w, RM);
    out.set_precision(p, RM).map_err(|e| Error::InvalidArgument(format!("{e:?}")))?;
    Ok(out)
}

/// Main term at `bits` and `2 bits`, exact `Delta_{a,b}(x)`, and their
/// ratio.
#[derive(Clone, Debug, Serialize)]
pub struct MainTermReport {
    pub params: MainTermParams,
    pub bits: usize,
    pub main_term: String,
    pub delta: String,
    pub ratio: f64,
    /// The runs at `bits` and `2 bits` agree to `bits/2` bits.
    pub stable: bool,
    /// `1/3 <= Delta / main <= 5/3`.
    pub in_window: bool,
    pub warnings: Vec<String>,
}

pub fn main_term(a: usize, b: usize, x: &Rational, bits: usize) -> Result<MainTermReport> {
    if a <= b + 1 {
        return Err(Error::InvalidArgument(format!("main term needs a > b+1, got a={a}, b={b}")));
    }
    let params = MainTermParams::new(a, b, x)?;
    let mut warnings = Vec::new();
    if !params.valid {
        warnings.push(format!("B = {} below the required bound", params.big_b));
    }
    let lo = main_term_value(&params, bits)?;
    let hi = main_term_value(&params, 2 * bits)?;
    let w = 2 * bits + 64;
    let tol = float::from_rational(&Rational::ratio(1, 2).pow(bits as u32 / 2), w);
    let rel = lo.sub(&hi, w, RM).abs().div(&hi.abs(), w, RM);
    let stable = rel <= tol;
    if !stable {
        warnings.push("precision doubling changed the main term".into());
    }

    let seq = eval_sequence(x, a.max(b + 1));
    let d = seq.get(a - 1) * seq.get(b + 1) - seq.get(a) * seq.get(b);
    let df = float::from_rational(&d, w);
    let ratio_f = df.div(&hi, w, RM);
    let ratio_q = float::to_rational(&ratio_f);
    let in_window = stable && ratio_q >= Rational::ratio(1, 3) && ratio_q <= Rational::ratio(5, 3);
    let mut cc = float::consts();
    Ok(MainTermReport {
        params,
        bits,
        main_term: float::to_decimal_string(&lo, &mut cc),
        delta: float::to_decimal_string(&float::from_rational(&d, bits), &mut cc),
        ratio: float::to_f64(&ratio_f),
        stable,
        in_window,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b0_values() {
        assert_eq!(b0_bound(&Rational::from(2)).unwrap(), Rational::ratio(49153, 12));
        assert_eq!(b0_bound(&Rational::from(3)).unwrap(), "354294.125".parse().unwrap());
        assert_eq!(b0_bound(&Rational::from(5)).unwrap().to_decimal(8), "97656250.20833333");
        assert!(matches!(b0_bound(&Rational::from(24)), Err(Error::Pole(_))));
        assert!(b0_bound(&Rational::zero()).is_err());
    }

    #[test]
    fn validity_flag() {
        let x = Rational::from(2);
        assert!(!MainTermParams::new(4146, 4096, &x).unwrap().valid);
        assert!(MainTermParams::new(4150, 4100, &x).unwrap().valid);
    }

    #[test]
    fn zero_when_a_minus_one_is_b() {
        let params = MainTermParams::new(31, 30, &Rational::from(2)).unwrap();
        assert!(main_term_value(&params, 128).unwrap().is_zero());
    }

    #[test]
    fn moderate_instance_is_stable() {
        let r = main_term(60, 40, &Rational::ratio(1, 2), 128).unwrap();
        assert!(r.stable);
        assert!(r.params.valid);
        assert!(r.ratio > 0.0);
    }
}
