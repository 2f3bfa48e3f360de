use super::parse::ParseErrorKind;
use super::*;
use crate::rational::{int, rat};

fn run_args(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("ladder").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn poly(c: &[Rational]) -> Poly {
    Poly::from_coeffs(c.to_vec())
}

#[test]
fn parses_examples() {
    assert_eq!(parse_polynomial("x^2 - 1").unwrap(), poly(&[int(-1), int(0), int(1)]));
    assert_eq!(parse_polynomial("(3/2)*x^2 - 1/2").unwrap(), poly(&[rat(-1, 2), int(0), rat(3, 2)]));
    let r = parse_expression("x/(x^2-1)").unwrap();
    assert_eq!(r.num(), &Poly::x());
    assert_eq!(r.den(), &poly(&[int(-1), int(0), int(1)]));
    assert_eq!(parse_expression(" - ( r + 1 ) ^ 2 ").unwrap(), RatFn::from_poly(poly(&[int(-1), int(-2), int(-1)])));
    // cancellation to canonical form
    assert_eq!(parse_expression("(x^2-1)/(x-1)").unwrap(), RatFn::from_poly(poly(&[int(1), int(1)])));
}

#[test]
fn parse_errors_carry_positions() {
    let e = parse_expression("x + * 2").unwrap_err();
    assert_eq!((e.position, e.kind), (4, ParseErrorKind::Unexpected('*')));
    let e = parse_expression("x^99999999999").unwrap_err();
    assert_eq!(e.position, 2);
    assert!(matches!(e.kind, ParseErrorKind::ExponentOverflow(_)));
    assert!(matches!(parse_expression("x^1001").unwrap_err().kind, ParseErrorKind::ExponentOverflow(_)));
    assert_eq!(parse_expression("1/(x-x)").unwrap_err().kind, ParseErrorKind::DivisionByZero);
    assert_eq!(parse_expression("x + r").unwrap_err().kind, ParseErrorKind::MixedVariables);
    assert_eq!(parse_expression("(x").unwrap_err().kind, ParseErrorKind::Expected("`)`"));
    assert_eq!(parse_expression("x x").unwrap_err().kind, ParseErrorKind::TrailingInput);
    assert!(parse_expression("").is_err());
    assert!(parse_expression("x^-1").is_err());
    assert!(parse_polynomial("1/x").is_err());
}

#[test]
fn gen_csv_latex_json() {
    let (code, out, _) = run_args(&["gen", "--family", "legendre", "--n-max", "2", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "0:1\n1:0,1\n2:-1/2,0,3/2\n");

    let (_, out, _) = run_args(&["gen", "--family", "chebyshev-T", "--n-max", "3", "--format", "latex"]);
    assert!(out.contains("T_{3}(x) = 4x^{3} - 3x"), "{out}");

    let (_, out, _) = run_args(&["gen", "--family", "hermite", "--n-max", "1", "--format", "json"]);
    let doc = OutputDocument::from_json(&out).unwrap();
    assert_eq!(doc.records[1].coefficients, vec!["0", "2"]);
    assert_eq!(doc.family, "hermite");
}

#[test]
fn gen_json_round_trips() {
    let kinds = [
        FamilyKind::Gegenbauer { lambda: rat(3, 2) },
        FamilyKind::Laguerre { alpha: rat(-1, 2) },
        FamilyKind::AssocLegendre { m: 3 },
    ];
    for kind in kinds {
        let doc = gen_document(&kind, 8).unwrap();
        let back = OutputDocument::from_json(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        for (a, b) in doc.records.iter().zip(&back.records) {
            assert_eq!(a.value().unwrap(), b.value().unwrap());
        }
    }
    let assoc = gen_document(&FamilyKind::AssocLegendre { m: 1 }, 2).unwrap();
    assert_eq!(assoc.records[0].n, 1);
    assert_eq!(assoc.records[1].value().unwrap(), generate_assoc_legendre(2, 1).unwrap());
    assert!(assoc.records[1].weight.as_ref().unwrap().phase.is_some());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run_args(&["gen", "--family", "jacobi", "--n-max", "2"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["gen", "--family", "gegenbauer", "--n-max", "2"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["gen", "--family", "coulomb-radial", "--l", "1", "--n-max", "2"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["verify", "--suite", "nope", "--n-max", "2"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
    let (code, _, err) = run_args(&[
        "factorize", "--family", "legendre", "--direction", "raising", "--n", "2", "--drift", "x^",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("column 3"), "{err}");
    assert_eq!(run_args(&["--help"]).0, EXIT_OK);
}

#[test]
fn factorize_examples() {
    let (code, out, _) = run_args(&["factorize", "--family", "legendre", "--direction", "raising", "--n", "2", "--drift", "0"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("g2:       (-1 + x^2)"), "{out}");
    assert!(out.contains("verify:   ok"));

    let (code, out, _) = run_args(&[
        "factorize", "--family", "legendre", "--direction", "raising", "--n", "2", "--drift", "x^2+1", "--drift-is-h",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    let json: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(json["verified"], true);

    let (code, out, _) = run_args(&[
        "factorize", "--family", "assoc-legendre", "--m", "2", "--direction", "raising", "--n", "3", "--drift", "0",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");

    let (code, _, err) = run_args(&[
        "factorize", "--family", "legendre", "--direction", "raising", "--n", "2", "--drift", "1/(x^2+1)",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("outside the supported class"), "{err}");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run_args(&["verify", "--suite", "eq31", "--n-max", "6"]).0, EXIT_OK);
    let (code, out, _) = run_args(&["verify", "--suite", "oracle", "--n-max", "4", "--negative-control"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(out.contains("FAIL"), "{out}");
    let (_, out, _) = run_args(&["verify", "--suite", "eq31", "--n-max", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
}
