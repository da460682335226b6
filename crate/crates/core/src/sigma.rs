//! Divisor sums.

use crate::error::{Error, Result};

/// Sum of the positive divisors of `k`, by trial division up to `sqrt(k)`.
pub fn sigma(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::SigmaOfZero);
    }
    Ok(sigma_unchecked(k))
}

fn sigma_unchecked(k: u64) -> u64 {
    let mut total = 0;
    let mut d = 1;
    while d * d <= k {
        if k.is_multiple_of(d) {
            total += d;
            let e = k / d;
            if e != d {
                total += e;
            }
        }
        d += 1;
    }
    total
}

/// Memo table of `sigma(1..=n)`, filled once at construction and read-only
/// afterwards, so concurrent readers never contend.
#[derive(Clone, Debug)]
pub struct SigmaTable {
    values: Vec<u64>,
}

impl SigmaTable {
    pub fn new(n: usize) -> Self {
        let mut values = Vec::with_capacity(n + 1);
        values.push(0);
        values.extend((1..=n as u64).map(sigma_unchecked));
        SigmaTable { values }
    }

    /// Largest `k` covered.
    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `sigma(k)`. Errors for `k == 0`; falls back to trial division past
    /// the end of the table.
    pub fn get(&self, k: usize) -> Result<u64> {
        match k {
            0 => Err(Error::SigmaOfZero),
            _ => Ok(self
                .values
                .get(k)
                .copied()
                .unwrap_or_else(|| sigma_unchecked(k as u64))),
        }
    }

    /// `sigma(k)` for `1 <= k <= len()`. Panics on `k == 0`.
    pub fn at(&self, k: usize) -> u64 {
        assert!(k >= 1, "sigma(0) is undefined");
        self.values.get(k).copied().unwrap_or_else(|| sigma_unchecked(k as u64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(sigma(1).unwrap(), 1);
        assert_eq!(sigma(6).unwrap(), 12);
        assert_eq!(sigma(12).unwrap(), 28);
        assert_eq!(sigma(0), Err(Error::SigmaOfZero));
    }

    #[test]
    fn primes_and_multiplicativity() {
        for p in (2..=100).filter(|&n| is_prime(n)) {
            assert_eq!(sigma(p).unwrap(), p + 1);
        }
        for a in 1..=100u64 {
            for b in 1..=100u64 {
                if gcd(a, b) == 1 {
                    assert_eq!(sigma(a * b).unwrap(), sigma(a).unwrap() * sigma(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn table_matches_direct() {
        let t = SigmaTable::new(500);
        assert_eq!(t.len(), 500);
        for k in 1..=500 {
            // brute force over all candidates
            let brute: u64 = (1..=k as u64).filter(|d| (k as u64).is_multiple_of(*d)).sum();
            assert_eq!(t.at(k), brute);
        }
        assert_eq!(t.get(0), Err(Error::SigmaOfZero));
        assert_eq!(t.get(1000).unwrap(), sigma(1000).unwrap());
    }
}
