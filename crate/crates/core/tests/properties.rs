use etaineq::etapoly::{eval_sequence, gen_table};
use etaineq::inequality::{bo_poly, certify_nonnegative, delta, fab, DeltaPoly};
use etaineq::poly::Poly;
use etaineq::rational::Rational;
use etaineq::roots::{complex_roots, isolate_real_roots, refine, sturm_count, Bound, SturmSequence};
use proptest::prelude::*;
use std::sync::OnceLock;

fn table() -> &'static etaineq::EtaTable {
    static T: OnceLock<etaineq::EtaTable> = OnceLock::new();
    T.get_or_init(|| gen_table(24))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..200, 1i64..50).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..400, 1i64..60).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..10, 1..7).prop_map(|c| Poly::from_ints(&c))
}

/// Product of `(d x - n)` factors with repeated roots allowed.
fn rooted_poly() -> impl Strategy<Value = (Poly, Vec<Rational>)> {
    prop::collection::vec((-12i64..12, 1i64..4), 1..7).prop_map(|roots| {
        let mut p = Poly::one();
        let mut rs = Vec::new();
        for (n, d) in roots {
            p = &p * &Poly::from_ints(&[-n, d]);
            rs.push(Rational::ratio(n, d));
        }
        rs.sort();
        rs.dedup();
        (p, rs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_evaluates_pointwise(p in small_poly(), q in small_poly(), x in rational()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn shift_round_trip(p in small_poly(), c in rational(), x in rational()) {
        let s = p.shift(&c);
        prop_assert_eq!(s.shift(&-c.clone()), p.clone());
        prop_assert_eq!(s.eval(&x), p.eval(&(&x + &c)));
    }

    #[test]
    fn delta_matches_value_recurrence(b in 0usize..10, gap in 1usize..12, x in positive_rational()) {
        let a = b + gap;
        let d = delta(a, b, table()).unwrap();
        let v = eval_sequence(&x, a + 1);
        let direct = v.get(a - 1) * v.get(b + 1) - v.get(a) * v.get(b);
        prop_assert_eq!(d.eval(&x), direct);
    }

    #[test]
    fn delta_leading_coefficient(b in 0usize..10, gap in 2usize..12) {
        let a = b + gap;
        let d = delta(a, b, table()).unwrap();
        prop_assert_eq!(d.poly.degree(), Some(a + b));
        prop_assert_eq!(d.poly.leading(), DeltaPoly::expected_leading(a, b));
    }

    #[test]
    fn fab_recovers_delta_at_x0(b in 0usize..8, gap in 2usize..10, x0 in positive_rational()) {
        let a = b + gap;
        let f = fab(a, b, &x0, table()).unwrap();
        let d = delta(a, b, table()).unwrap();
        let pb = table().get(b).eval(&x0);
        prop_assert_eq!(f.poly.eval(&x0) * pb, d.eval(&x0));
    }

    #[test]
    fn values_at_one_are_partition_numbers(n in 0usize..24) {
        // p(n) by the coin-change recurrence
        let mut p = vec![0u64; n + 1];
        p[0] = 1;
        for part in 1..=n {
            for m in part..=n {
                p[m] += p[m - part];
            }
        }
        prop_assert_eq!(table().get(n).eval(&Rational::one()), Rational::from(p[n] as i64));
    }

    #[test]
    fn isolation_finds_every_distinct_root((p, roots) in rooted_poly()) {
        let ivs = isolate_real_roots(&p).unwrap();
        prop_assert_eq!(ivs.len(), roots.len());
        for (iv, r) in ivs.iter().zip(&roots) {
            prop_assert!(iv.contains(r));
            let fine = refine(&p, iv, 40).unwrap();
            prop_assert!(fine.contains(r));
            prop_assert!(fine.is_narrower_than_bits(40));
        }
    }

    #[test]
    fn isolation_agrees_with_sturm(p in small_poly()) {
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let ivs = isolate_real_roots(&p).unwrap();
        let s = SturmSequence::new(&p).unwrap();
        prop_assert_eq!(ivs.len(), s.count(&Bound::NegInf, &Bound::PosInf));
        for iv in ivs.iter().filter(|iv| !iv.is_point()) {
            prop_assert_eq!(sturm_count(&p, &iv.lo, &iv.hi).unwrap(), 1);
        }
    }

    #[test]
    fn complex_roots_account_for_degree((p, roots) in rooted_poly(), q in small_poly()) {
        let f = &p * &q;
        prop_assume!(f.degree().unwrap_or(0) > 0);
        let set = complex_roots(&f, 80).unwrap();
        prop_assert_eq!(set.complex_roots.len(), f.degree().unwrap());
        prop_assert!(set.all_converged());
        for r in &roots {
            prop_assert!(set.real_roots.iter().any(|rr| rr.interval.contains(r)));
        }
    }

    #[test]
    fn certified_polys_are_nonnegative(p in small_poly(), x0 in rational(), t in prop::collection::vec(positive_rational(), 1..8)) {
        let f = &p * &p;
        let cert = certify_nonnegative(&f, &x0, "square");
        prop_assert!(cert.is_certified() || f.is_zero());
        let g = &f - &Poly::one();
        if certify_nonnegative(&g, &x0, "shifted square").is_certified() {
            for dt in &t {
                prop_assert!(g.eval(&(&x0 + dt)) >= Rational::zero());
            }
        }
    }

    #[test]
    fn delta_with_b_zero_is_a_bessenrodt_ono_difference(a in 2usize..24) {
        let d = delta(a, 0, table()).unwrap();
        prop_assert_eq!(d.poly, bo_poly(a - 1, 1, table()).unwrap());
    }

    #[test]
    fn sign_matches_quotient_comparison(b in 0usize..10, gap in 1usize..12, x in positive_rational()) {
        let a = b + gap;
        let v = eval_sequence(&x, a + 1);
        let nonneg = delta(a, b, table()).unwrap().eval(&x) >= Rational::zero();
        let quotients = v.get(b + 1) / v.get(b) >= v.get(a) / v.get(a - 1);
        prop_assert_eq!(nonneg, quotients);
    }

    #[test]
    fn hoggar_closure(n1 in 3i64..40, d1 in 1i64..4, n2 in 3i64..40, d2 in 1i64..4, big_n in 4usize..40) {
        let x1 = Rational::ratio(n1.max(3 * d1), d1);
        let x2 = Rational::ratio(n2.max(3 * d2), d2);
        let s1 = eval_sequence(&x1, big_n);
        let s2 = eval_sequence(&x2, big_n);
        if s1.log_concavity_failures(1, big_n).is_empty() && s2.log_concavity_failures(1, big_n).is_empty() {
            let sum = eval_sequence(&(&x1 + &x2), big_n - 1);
            prop_assert!(sum.log_concavity_failures(1, big_n - 1).is_empty());
        }
    }
}
