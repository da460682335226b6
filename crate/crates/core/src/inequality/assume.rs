//! `H_b`, `G_b`, `N_b`, `F_{a,b}` and nonnegativity certificates on
//! half-lines.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::etapoly::EtaTable;
use crate::inequality::delta;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::report::{Certificate, CertificateKind, ScanReport, Value};
use crate::roots::{count_above, refine, sign_changing_roots_above, Interval};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuxPolys {
    pub b: usize,
    pub x0: Rational,
    /// `H_b = hb_num / hb_den` with `hb_den = P_b`.
    pub hb_num: Poly,
    pub hb_den: Poly,
    /// `(x - x0)/(b+1) + P_{b+1}(x0)/P_b(x0)`.
    pub gb: Poly,
    /// `P'_{b+1} P_b - P_{b+1} P'_b`.
    pub nb: Poly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FabPoly {
    pub a: usize,
    pub b: usize,
    pub x0: Rational,
    pub poly: Poly,
}

fn nb_poly(k: usize, table: &EtaTable) -> Poly {
    let (p, q) = (table.get(k), table.get(k + 1));
    &q.derivative() * p - q * &p.derivative()
}

pub fn aux_polys(b: usize, x0: &Rational, table: &EtaTable) -> Result<AuxPolys> {
    table.require(b + 1)?;
    let pb = table.get(b).clone();
    let scale = Rational::from(b as i64 + 1).recip()?;
    let hb_num = table.get(b + 1) - &(&Poly::monomial(scale.clone(), 1) * &pb);
    let gb = Poly::new(vec![quotient_at(b, x0, table)? - x0 * &scale, scale]);
    Ok(AuxPolys { b, x0: x0.clone(), hb_num, hb_den: pb, gb, nb: nb_poly(b, table) })
}

impl AuxPolys {
    /// `N_b - P_b^2 / (b+1)`.
    pub fn criterion(&self) -> Poly {
        let scale = Rational::from(self.b as i64 + 1).recip().expect("b+1 > 0");
        &self.nb - &(&self.hb_den * &self.hb_den).scale(&scale)
    }
}

/// `N_k - P_k^2 / (b+1)`.
pub fn nb_criterion(k: usize, b: usize, table: &EtaTable) -> Result<Poly> {
    table.require(k + 1)?;
    let scale = Rational::from(b as i64 + 1).recip()?;
    let pk = table.get(k);
    Ok(&nb_poly(k, table) - &(pk * pk).scale(&scale))
}

/// `P_{b+1}(x0) / P_b(x0)`.
pub fn quotient_at(b: usize, x0: &Rational, table: &EtaTable) -> Result<Rational> {
    table.require(b + 1)?;
    table.get(b + 1).eval(x0).checked_div(&table.get(b).eval(x0))
}

/// Certifies `f >= 0` on `[x0, inf)`: first by nonnegative coefficients of
/// `f(t + x0)`, otherwise by `f(x0) >= 0`, a positive leading coefficient
/// and no sign change of `f` on `(x0, inf)`.
pub fn certify_nonnegative(f: &Poly, x0: &Rational, subject: &str) -> Certificate {
    let shifted = f.shift(x0);
    if shifted.all_coeffs_nonnegative() {
        return Certificate {
            subject: subject.to_string(),
            kind: CertificateKind::ShiftedCoefficients,
            detail: format!("f(x + {x0}) = {shifted}"),
        };
    }
    let at_x0 = f.eval(x0);
    let lead = f.leading();
    let crossings = sign_changing_roots_above(f, x0).map(|v| v.len()).unwrap_or(usize::MAX);
    if !at_x0.is_negative() && lead.is_positive() && crossings == 0 {
        let roots = count_above(f, x0).unwrap_or(0);
        return Certificate {
            subject: subject.to_string(),
            kind: CertificateKind::Sturm,
            detail: format!(
                "f({x0}) = {at_x0}, leading {lead}, {roots} distinct roots above {x0}, none with a sign change"
            ),
        };
    }
    Certificate {
        subject: subject.to_string(),
        kind: CertificateKind::Uncertified,
        detail: format!("f({x0}) = {at_x0}, leading {lead}, sign changes above {x0}: {crossings}"),
    }
}

/// `H_b` nondecreasing on `[x0, inf)` through `N_b - P_b^2/(b+1) >= 0`.
pub fn assumption1_certificate(b: usize, x0: &Rational, table: &EtaTable) -> Result<ScanReport> {
    let f = nb_criterion(b, b, table)?;
    let mut report = ScanReport::new("assumption1")
        .param("b", b)
        .param("x0", x0);
    report.push_certificate(certify_nonnegative(&f, x0, &format!("N_{b} - P_{b}^2/{}", b + 1)));
    Ok(report)
}

/// For `0 <= k <= b`: `N_k - P_k^2/(b+1) >= 0` on `[x0, inf)`, and for
/// `0 <= k < b`: `P_{b+1}(x0) P_k(x0) <= P_{k+1}(x0) P_b(x0)`.
pub fn assumption2_certificate(b: usize, x0: &Rational, table: &EtaTable) -> Result<ScanReport> {
    if b == 0 {
        return Err(Error::InvalidArgument("assumption2 needs b >= 1".into()));
    }
    table.require(b + 1)?;
    let mut report = ScanReport::new("assumption2")
        .param("b", b)
        .param("x0", x0);
    for k in 0..=b {
        let f = nb_criterion(k, b, table)?;
        report.push_certificate(certify_nonnegative(&f, x0, &format!("N_{k} - P_{k}^2/{}", b + 1)));
    }
    let v: Vec<Rational> = (0..=b + 1).map(|n| table.get(n).eval(x0)).collect();
    for k in 0..b {
        if &v[b + 1] * &v[k] > &v[k + 1] * &v[b] {
            report.push_exception(vec![Value::from("start"), Value::from(k)]);
        }
    }
    Ok(report)
}

/// Smallest `x0 > 0` from which `P_{b+1}(x) P_k(x) <= P_{k+1}(x) P_b(x)`
/// holds for every `0 <= k < b`: the largest sign-changing positive root
/// over `k` of `g_k = P_{b+1} P_k - P_{k+1} P_b`. Returns an interval of
/// width at most `2^-bits`.
pub fn smallest_x0(b: usize, bits: u32, table: &EtaTable) -> Result<Interval> {
    if b == 0 {
        return Err(Error::InvalidArgument("smallest_x0 needs b >= 1".into()));
    }
    table.require(b + 1)?;
    let zero = Rational::zero();
    let mut best: Option<Interval> = None;
    for k in 0..b {
        let g = table.get(b + 1) * table.get(k) - table.get(k + 1) * table.get(b);
        if g.is_zero() {
            continue;
        }
        let Some(iv) = sign_changing_roots_above(&g, &zero)?.pop() else {
            continue;
        };
        let iv = refine(&g, &iv, bits)?;
        best = Some(match best {
            None => iv,
            Some(cur) => Interval::new(cur.lo.clone().max(iv.lo.clone()), cur.hi.clone().max(iv.hi)),
        });
    }
    Ok(best.unwrap_or_else(|| Interval::point(zero)))
}

/// The fixed `G_b` used for `b = 1, 2, 3`.
pub fn fixed_g(b: usize) -> Option<Poly> {
    let s = match b {
        1 => "(x + 3)/2",
        2 => "(x + 4)/3",
        3 => "(3x + 17)/12",
        _ => return None,
    };
    Some(s.parse().expect("valid literal"))
}

/// `F_{a,b} = G_b P_{a-1} - P_a` with `G_b` anchored at `x0`.
pub fn fab(a: usize, b: usize, x0: &Rational, table: &EtaTable) -> Result<FabPoly> {
    if a <= b + 1 {
        return Err(Error::InvalidArgument(format!("fab needs a > b+1, got a={a}, b={b}")));
    }
    table.require(a)?;
    let gb = aux_polys(b, x0, table)?.gb;
    let poly = &(&gb * table.get(a - 1)) - table.get(a);
    Ok(FabPoly { a, b, x0: x0.clone(), poly })
}

/// `Delta'_{a,b}` has no real root in `(x0, inf)` and is positive at
/// `x0 + 1`.
pub fn derivative_positive_check(a: usize, b: usize, x0: &Rational, table: &EtaTable) -> Result<bool> {
    if a <= b + 1 {
        return Err(Error::InvalidArgument(format!("derivative check needs a > b+1, got a={a}, b={b}")));
    }
    let d = delta(a, b, table)?.poly.derivative();
    Ok(count_above(&d, x0)? == 0 && d.sign_at(&(x0 + &Rational::one())) > 0)
}
