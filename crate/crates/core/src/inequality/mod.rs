//! The inequality objects built from `P_n`: `Delta_{a,b}`, the
//! Bessenrodt-Ono difference, the auxiliary `H_b`, `G_b`, `F_{a,b}`, `N_b`,
//! and the asymptotic main term, with scans and certificates over them.

pub mod asymptotic;
pub mod assume;
pub mod scan;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::etapoly::EtaTable;
use crate::poly::Poly;
use crate::rational::Rational;

pub use asymptotic::{b0_bound, main_term, main_term_value, MainTermParams, MainTermReport};
pub use assume::{
    assumption1_certificate, assumption2_certificate, aux_polys, certify_nonnegative,
    derivative_positive_check, fab, fixed_g, nb_criterion, quotient_at, smallest_x0, AuxPolys,
    FabPoly,
};
pub use scan::{
    even_b_thresholds, log_concavity_report, partition_quotients, q_chain, q_chain_check, scan_cft,
    scan_delta_sign, ChainLink,
};

/// `Delta_{a,b} = P_{a-1} P_{b+1} - P_a P_b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaPoly {
    pub a: usize,
    pub b: usize,
    pub poly: Poly,
}

impl DeltaPoly {
    /// `(a-b-1) / (a! (b+1)!)`, the leading coefficient for `a > b+1`.
    pub fn expected_leading(a: usize, b: usize) -> Rational {
        let fact = |n: usize| (1..=n as i64).map(Rational::from).product::<Rational>();
        Rational::from(a as i64 - b as i64 - 1) / (fact(a) * fact(b + 1))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.poly.eval(x)
    }
}

pub fn delta(a: usize, b: usize, table: &EtaTable) -> Result<DeltaPoly> {
    if a <= b {
        return Err(Error::InvalidArgument(format!("delta needs a > b, got a={a}, b={b}")));
    }
    table.require(a)?;
    let poly = table.get(a - 1) * table.get(b + 1) - table.get(a) * table.get(b);
    Ok(DeltaPoly { a, b, poly })
}

/// `P_{a,b} = P_a P_b - P_{a+b}`.
pub fn bo_poly(a: usize, b: usize, table: &EtaTable) -> Result<Poly> {
    table.require(a + b)?;
    Ok(table.get(a) * table.get(b) - table.get(a + b).clone())
}

/// The base point used for `b`: 1 for odd `b`, 2 for even `b`.
pub fn default_x0(b: usize) -> Rational {
    if b % 2 == 1 {
        Rational::one()
    } else {
        Rational::from(2)
    }
}
