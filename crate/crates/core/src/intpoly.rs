//! Kernels on integer coefficient vectors (lowest power first) used by the
//! exact root machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Divides out the positive gcd of the coefficients.
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g == BigInt::from(1) {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// `|lc(b)|^k * a - q * b` for the least `k` making the degree drop below
/// `deg b`: a positive multiple of the Euclidean remainder.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().expect("nonzero divisor");
    let lb_abs = lb.abs();
    let lb_neg = lb.is_negative();
    while r.len() > db {
        let top = r.len() - 1;
        let la = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c *= &lb_abs;
        }
        for (j, bc) in b.iter().enumerate() {
            let t = &la * bc;
            if lb_neg {
                r[shift + j] += t;
            } else {
                r[shift + j] -= t;
            }
        }
        debug_assert!(r[top].is_zero());
        r.pop();
        trim(&mut r);
    }
    r
}

/// `p(x + c)` in place.
pub(crate) fn taylor_shift(v: &mut [BigInt], c: i64) {
    let n = v.len();
    if n < 2 {
        return;
    }
    let c = BigInt::from(c);
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let t = &v[j + 1] * &c;
            v[j] += t;
        }
    }
}

/// Sign changes along the coefficient list, zeros skipped.
pub(crate) fn sign_variations(v: &[BigInt]) -> usize {
    let mut count = 0;
    let mut last = 0;
    for c in v {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Upper bound on the roots in `(0, 1)`, exact when it is 0 or 1.
pub(crate) fn unit_interval_variations(v: &[BigInt]) -> usize {
    let mut r: Vec<BigInt> = v.iter().rev().cloned().collect();
    taylor_shift(&mut r, 1);
    sign_variations(&r)
}

/// Exact quotient by `(x - 1)`; `v(1)` must vanish.
pub(crate) fn div_by_x_minus_one(v: &[BigInt]) -> Vec<BigInt> {
    let n = v.len();
    let mut q = vec![BigInt::zero(); n - 1];
    let mut acc = BigInt::zero();
    for i in (1..n).rev() {
        acc += &v[i];
        q[i - 1] = acc.clone();
    }
    debug_assert!((acc + &v[0]).is_zero());
    q
}

/// Strips the common power of two from the coefficients.
pub(crate) fn strip_twos(v: &mut [BigInt]) {
    let tz = v.iter().filter_map(|c| c.trailing_zeros()).min().unwrap_or(0);
    if tz > 0 {
        for c in v.iter_mut() {
            *c >>= tz;
        }
    }
}

const PRIMES: [u64; 3] = [(1 << 61) - 1, 4_611_686_018_427_387_847, 998_244_353];

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

fn reduce(v: &[BigInt], m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    v.iter().map(|c| c.mod_floor(&mb).to_u64().expect("reduced")).collect()
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> usize {
    let strip = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    while !b.is_empty() {
        let inv = powmod(*b.last().expect("nonempty"), m - 2, m);
        let db = b.len() - 1;
        while a.len() > db {
            let top = a.len() - 1;
            let f = mulmod(a[top], inv, m);
            let shift = top - db;
            for (j, &bc) in b.iter().enumerate() {
                let t = mulmod(f, bc, m);
                a[shift + j] = (a[shift + j] + m - t) % m;
            }
            strip(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when some prime keeps both degrees and sees a constant gcd, which
/// proves `gcd(a, b) = 1` over the rationals.
pub(crate) fn coprime_mod_primes(a: &[BigInt], b: &[BigInt]) -> bool {
    PRIMES.iter().any(|&m| {
        let (ra, rb) = (reduce(a, m), reduce(b, m));
        ra.last().is_some_and(|&c| c != 0)
            && rb.last().is_some_and(|&c| c != 0)
            && gcd_degree_mod(ra, rb, m) == 0
    })
}
