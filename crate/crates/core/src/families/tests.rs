use super::*;
use crate::rational::{int, rat};
use crate::WeightedExpression;

fn p(cs: &[Rational]) -> Poly {
    Poly::from_coeffs(cs.to_vec())
}

fn spec(kind: FamilyKind, n: u32) -> FamilySpec {
    FamilySpec::new(kind, n).unwrap()
}

#[test]
fn printed_operators() {
    let legendre = make_operator(&spec(FamilyKind::Legendre, 3), Direction::Raising).unwrap();
    assert_eq!(legendre.to_string(), "[(-1 + x^2)] D + [(3*x)]");
    let u = make_operator(&spec(FamilyKind::ChebyshevU, 2), Direction::Raising).unwrap();
    assert_eq!(u.to_string(), "[(-1 + x^2)] D + [(4*x)]");
    let coulomb = make_operator(&spec(FamilyKind::CoulombRadial { l: 0 }, 0), Direction::Raising).unwrap();
    assert_eq!(coulomb.to_string(), "[(1)] D + [((1)/(x))]");
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(FamilySpec::new(FamilyKind::AssocLegendre { m: 3 }, 2).is_err());
    assert!(FamilySpec::new(FamilyKind::Gegenbauer { lambda: int(0) }, 2).is_err());
    assert!(FamilySpec::new(FamilyKind::Laguerre { alpha: int(-1) }, 2).is_err());
    let radial = spec(FamilyKind::Oscillator3d { l: 1 }, 0);
    assert!(make_operator(&radial, Direction::Lowering).is_err());
    assert!(generate_ladder(&radial).is_err());
}

#[test]
fn small_members_by_ladder() {
    assert_eq!(generate_ladder(&spec(FamilyKind::Legendre, 2)).unwrap(), p(&[rat(-1, 2), int(0), rat(3, 2)]));
    assert_eq!(generate_ladder(&spec(FamilyKind::ChebyshevU, 2)).unwrap(), p(&[int(-1), int(0), int(4)]));
    let half = generate_ladder(&spec(FamilyKind::Gegenbauer { lambda: rat(1, 2) }, 4)).unwrap();
    assert_eq!(half, generate_ladder(&spec(FamilyKind::Legendre, 4)).unwrap());
    assert_eq!(generate_ladder(&spec(FamilyKind::Hermite, 1)).unwrap(), p(&[int(0), int(2)]));
}

#[test]
fn ladder_matches_recurrence() {
    let kinds = [
        FamilyKind::Legendre,
        FamilyKind::ChebyshevT,
        FamilyKind::ChebyshevU,
        FamilyKind::Hermite,
        FamilyKind::Gegenbauer { lambda: int(2) },
        FamilyKind::Laguerre { alpha: rat(-1, 2) },
        FamilyKind::LaguerreRadial { alpha: int(1) },
    ];
    for kind in kinds {
        let table = generate_ladder_table(&kind, 8).unwrap();
        for (n, got) in table.iter().enumerate() {
            assert_eq!(got, &oracle_recurrence(&spec(kind.clone(), n as u32)).unwrap(), "{kind} n={n}");
        }
    }
}

#[test]
fn rodrigues_examples() {
    let legendre = rodrigues_standard(&spec(FamilyKind::Legendre, 3)).unwrap();
    assert_eq!(legendre, p(&[int(0), rat(-3, 2), int(0), rat(5, 2)]));
    let u = rodrigues_standard(&spec(FamilyKind::ChebyshevU, 2)).unwrap();
    assert_eq!(u, p(&[int(-1), int(0), int(4)]));
    let c = rodrigues_standard(&spec(FamilyKind::Gegenbauer { lambda: int(1) }, 1)).unwrap();
    assert_eq!(c, p(&[int(0), int(2)]));

    let u1 = rodrigues_chain(&spec(FamilyKind::ChebyshevU, 1), ChainVariant::H0Chain).unwrap();
    assert_eq!(u1, p(&[int(0), int(2)]));
    let radial = rodrigues_chain(&spec(FamilyKind::LaguerreRadial { alpha: int(0) }, 1), ChainVariant::H0Chain).unwrap();
    assert_eq!(radial, p(&[int(1), int(0), int(-1)]));
    let h2 = rodrigues_chain(&spec(FamilyKind::Hermite, 2), ChainVariant::H0Chain).unwrap();
    assert_eq!(h2, p(&[int(-2), int(0), int(4)]));
}

#[test]
fn hermite_examples() {
    assert_eq!(hermite_from_laguerre(0, Parity::Even).unwrap(), Poly::one());
    assert_eq!(hermite_from_laguerre(1, Parity::Even).unwrap(), p(&[int(-2), int(0), int(4)]));
    assert_eq!(hermite_from_laguerre(0, Parity::Odd).unwrap(), p(&[int(0), int(2)]));
    assert_eq!(hermite_via_oscillator(0).unwrap(), Poly::one());
    assert_eq!(hermite_via_oscillator(2).unwrap(), p(&[int(-2), int(0), int(4)]));
}

#[test]
fn assoc_examples() {
    let w = generate_assoc_legendre(1, 1).unwrap();
    assert_eq!(w, WeightedExpression::one_minus_x2_pow(rat(1, 2)));
    let w = generate_assoc_legendre(2, 1).unwrap();
    let expected = WeightedExpression::one_minus_x2_pow(rat(1, 2)).mul(&WeightedExpression::from_poly(p(&[int(0), int(3)])));
    assert_eq!(w, expected);
    let p3 = generate_assoc_legendre(3, 0).unwrap();
    assert_eq!(p3.as_polynomial().unwrap(), generate_ladder(&spec(FamilyKind::Legendre, 3)).unwrap());
}

#[test]
fn remainder_vanishes_without_drift() {
    for reading in [FamilyFormReading::Printed, FamilyFormReading::Iterated] {
        assert!(remainder_f(3, &Poly::zero(), reading).unwrap().is_zero());
    }
    assert!(!remainder_f(3, &Poly::one(), FamilyFormReading::Iterated).unwrap().is_zero());
}

#[test]
fn identity_examples() {
    for id in ["eq31", "eq34", "remark3term", "remark3term-legendre", "eq33-35"] {
        let report = identity_check(id, 6).unwrap();
        assert!(report.passed(), "{id}: {:?}", report.failures().next());
    }
    assert!(identity_check("nope", 3).is_err());
}
