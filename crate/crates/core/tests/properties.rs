use ladder_core::algebra::{integrate_rational, partial_fractions};
use ladder_core::cli::{gen_document, OutputDocument};
use ladder_core::families::FamilyKind;
use ladder_core::weighted::{PowerFactor, Sign};
use ladder_core::{Poly, RatFn, Rational, WeightedExpression as W};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..=max_degree + 1).prop_map(Poly::from_coeffs)
}

/// Denominators with up to three distinct rational roots.
fn split_den() -> impl Strategy<Value = Poly> {
    prop::collection::btree_set(small_rational(), 0..=3)
        .prop_map(|roots| roots.into_iter().fold(Poly::one(), |acc, r| &acc * &Poly::linear(r)))
}

fn in_class() -> impl Strategy<Value = RatFn> {
    (poly(4), split_den()).prop_map(|(num, den)| RatFn::new(num, den).unwrap())
}

/// `p + Σ c_i/(x - r_i)` with small residues. Integer parts of the
/// residues become polynomial factors under exponentiation, so they are
/// kept bounded.
fn bounded_residues() -> impl Strategy<Value = RatFn> {
    (poly(3), prop::collection::btree_map(small_rational(), (-8i64..=8, 1i64..=2), 0..=3)).prop_map(|(p, poles)| {
        poles.into_iter().fold(RatFn::from_poly(p), |acc, (root, (c, q))| {
            let term = RatFn::new(Poly::constant(Rational::new(c.into(), q.into())), Poly::linear(root)).unwrap();
            acc.add(&term)
        })
    })
}

fn weighted() -> impl Strategy<Value = W> {
    let power = (-3i64..=3, small_rational()).prop_map(|(r, e)| PowerFactor::new(Rational::from_integer(r.into()), e));
    (in_class(), prop::collection::vec(power, 0..=3), poly(3), -1i64..=1).prop_filter_map(
        "nonzero coefficient",
        |(coeff, powers, exp_arg, phase)| {
            (!coeff.is_zero()).then(|| W::from_parts(Rational::new(phase.into(), 2.into()), coeff, powers, exp_arg))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_fractions_recombine(r in in_class()) {
        prop_assert_eq!(partial_fractions(&r).unwrap().recombine(), r);
    }

    #[test]
    fn derivative_of_antiderivative_is_identity(r in in_class()) {
        prop_assert_eq!(integrate_rational(&r).unwrap().derivative(), r);
    }

    #[test]
    fn exp_integral_has_the_integrand_as_log_derivative(r in bounded_residues()) {
        let w = W::exp_integral(&integrate_rational(&r).unwrap(), Sign::Plus);
        prop_assert_eq!(w.log_derivative().unwrap(), r.clone());
        let inv = W::exp_integral(&integrate_rational(&r).unwrap(), Sign::Minus);
        prop_assert_eq!(inv.log_derivative().unwrap(), r.neg());
    }

    #[test]
    fn class_is_closed_and_product_rule_holds(u in weighted(), v in weighted()) {
        let uv = u.mul(&v);
        let lhs = uv.differentiate();
        let rhs = u.differentiate().mul(&v);
        // u'v and uv' share the weight of uv, so the sum stays in the class
        let rhs = rhs.add(&u.mul(&v.differentiate())).unwrap();
        prop_assert_eq!(lhs, rhs);
        let q = uv.div(&v).unwrap();
        prop_assert_eq!(q, u.clone());
        prop_assert!(ladder_core::weighted::exponents_are_fractional(&uv));
    }

    #[test]
    fn gen_json_round_trips(lambda in small_rational().prop_filter("nonzero", |l| *l != Rational::from_integer(0.into())), n_max in 0u32..8) {
        let doc = gen_document(&FamilyKind::Gegenbauer { lambda }, n_max).unwrap();
        let back = OutputDocument::from_json(&serde_json::to_string(&doc).unwrap()).unwrap();
        for (a, b) in doc.records.iter().zip(&back.records) {
            prop_assert_eq!(a.poly().unwrap(), b.poly().unwrap());
        }
        prop_assert_eq!(back, doc);
    }
}
