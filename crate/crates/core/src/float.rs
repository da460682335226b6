//! Conversions between exact values and `astro_float::BigFloat`.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

pub const RM: RoundingMode = RoundingMode::ToEven;

pub fn consts() -> Consts {
    Consts::new().expect("constant cache allocates")
}

pub fn from_bigint(n: &BigInt, p: usize) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_word(0, p);
    }
    let (sign, mag) = n.to_u64_digits();
    let words: Vec<Word> = mag.iter().map(|&w| w as Word).collect();
    let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
    let exact = BigFloat::from_words(&words, s, (64 * words.len()) as i32);
    let mut out = exact;
    out.set_precision(p, RM).expect("valid precision");
    out
}

pub fn from_rational(r: &Rational, p: usize) -> BigFloat {
    let num = from_bigint(r.numer(), p + 64);
    let den = from_bigint(r.denom(), p + 64);
    num.div(&den, p, RM)
}

pub fn from_i64(v: i64, p: usize) -> BigFloat {
    from_bigint(&BigInt::from(v), p)
}

/// Nearest `f64`, saturating to infinities outside the `f64` range.
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    // value = 0.m * 2^exp with m read as a fraction of the full word length
    let top = words.last().copied().unwrap_or(0) as f64;
    let next = if words.len() > 1 { words[words.len() - 2] as f64 } else { 0.0 };
    let frac = (top + next / 18446744073709551616.0) / 18446744073709551616.0;
    let mag = frac * 2f64.powi(exp);
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

/// Exact value of a finite `BigFloat`.
pub fn to_rational(x: &BigFloat) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return Rational::zero();
    };
    let digits: Vec<u32> = words
        .iter()
        .flat_map(|&w| [w as u32, (w >> 32) as u32])
        .collect();
    let mut mant = BigInt::from_slice(num_bigint::Sign::Plus, &digits);
    if sign == Sign::Neg {
        mant = -mant;
    }
    let shift = exp as i64 - 64 * words.len() as i64;
    if shift >= 0 {
        Rational::from_integer(mant << shift as usize)
    } else {
        Rational::new(mant, BigInt::one() << (-shift) as usize).expect("nonzero")
    }
}

/// Decimal scientific notation at the number's full precision.
pub fn to_decimal_string(x: &BigFloat, cc: &mut Consts) -> String {
    x.format(Radix::Dec, RM, cc).unwrap_or_else(|_| "NaN".to_string())
}

/// `log2 |x|` rounded down, or `None` for zero.
pub fn exponent(x: &BigFloat) -> Option<i32> {
    if x.is_zero() {
        None
    } else {
        x.exponent()
    }
}
