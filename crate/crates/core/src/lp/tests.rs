use std::collections::BTreeMap;

use super::*;
use crate::arith::parse_rational;

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn only(pairs: &[(&str, &str)]) -> Certificate {
    Certificate::parse(Variant::Standard, pairs.iter().copied()).unwrap()
}

#[test]
fn expand_examples() {
    let s = build_system(Variant::Standard);
    let (res, c) = expand(&s, &only(&[("5.1", "1")])).unwrap();
    let expect: BTreeMap<Symbol, Rational> = [
        (Symbol::Omega, q("-1")),
        (Symbol::E0, q("1")),
        (Symbol::F3, q("1")),
        (Symbol::S, q("2")),
        (Symbol::G4, q("1")),
    ]
    .into_iter()
    .collect();
    assert_eq!(res, expect);
    assert_eq!(c, q("0"));

    let (res, c) = expand(&s, &only(&[("5.1", "1"), ("5.2", "1")])).unwrap();
    assert_eq!(res[&Symbol::OmegaSmall], q("1"));
    assert_eq!(res[&Symbol::T], q("-1"));
    assert_eq!(res[&Symbol::S], q("1"));
    assert_eq!(c, q("-2"));

    assert_eq!(
        expand(&s, &only(&[("5.1", "1"), ("5.20", "1")])),
        Err(Error::UnknownRelation("5.20".into()))
    );
}

#[test]
fn check_examples() {
    let s = build_system(Variant::Standard);
    let trivial = check_certificate(&s, &only(&[("5.1", "1")])).unwrap();
    assert_eq!((trivial.a, trivial.b), (q("0"), q("0")));

    let err = check_certificate(&s, &only(&[("5.1", "1"), ("5.2", "1")])).unwrap_err();
    assert_eq!(err, Error::InvalidCertificate(vec!["negative residual on T (-1)".into()]));

    let bad = check_certificate(&s, &only(&[("5.1", "2"), ("5.3", "-1")])).unwrap_err();
    let Error::InvalidCertificate(v) = bad else { panic!() };
    assert!(v[0].starts_with("multiplier of 5.1"));
    assert!(v[1].starts_with("negative multiplier -1 on inequality 5.3"));
}

#[test]
fn adjusted_table_certifies_standard_bound() {
    let s = build_system(Variant::Standard);
    let r = check_certificate(&s, &table2_adjusted()).unwrap();
    assert_eq!((r.a.clone(), r.b.clone()), (q("99/37"), q("-187/37")));
    let expect: BTreeMap<Symbol, Rational> = [
        (Symbol::Omega, q("-1")),
        (Symbol::OmegaSmall, q("99/37")),
        (Symbol::S41, q("3/37")),
        (Symbol::S42, q("7/37")),
        (Symbol::S31SS, q("2/37")),
        (Symbol::S31TT, q("1/37")),
        (Symbol::S31SnfT, q("1/37")),
        (Symbol::S32Snf, q("1/37")),
    ]
    .into_iter()
    .collect();
    assert_eq!(r.residual, expect);
}

#[test]
fn printed_table_fails_only_on_s31_st() {
    let s = build_system(Variant::Standard);
    let err = check_certificate(&s, &table2_printed()).unwrap_err();
    assert_eq!(err, Error::InvalidCertificate(vec!["negative residual on S31_ST (-1/37)".into()]));
    assert!(err.to_string().contains("negative residual on S31_ST"));
    // Constant and ω coefficient are unaffected by c₁₀.
    let (res, c) = expand(&s, &table2_printed()).unwrap();
    assert_eq!((res[&Symbol::OmegaSmall].clone(), c), (q("99/37"), q("-187/37")));
}

#[test]
fn printed_no3_table_diagnostics() {
    let s = build_system(Variant::No3);
    let (res, c) = expand(&s, &table3_printed()).unwrap();
    assert_eq!(res[&Symbol::OmegaSmall], q("51/19"));
    assert_eq!(c, q("-50/19"));
    assert_eq!(
        check_certificate(&s, &table3_printed()),
        Err(Error::InvalidCertificate(vec!["negative residual on S31_ST (-1/19)".into()]))
    );
}

#[test]
fn optimum_standard() {
    let best = optimize(&build_system(Variant::Standard)).unwrap();
    assert_eq!((best.result.a.clone(), best.result.b.clone()), (q("99/37"), q("-187/37")));
    assert_eq!(best.phase1_a, best.result.a);
    assert_eq!(best.certificate.multiplier("5.1"), q("1"));
}

#[test]
fn optimum_no3() {
    let best = optimize(&build_system(Variant::No3)).unwrap();
    assert_eq!((best.result.a.clone(), best.result.b.clone()), (q("51/19"), q("-46/19")));
}

#[test]
fn optimum_of_single_relation() {
    let sys = build_system(Variant::Standard).restrict(&["5.1"]).unwrap();
    let best = optimize(&sys).unwrap();
    assert_eq!((best.result.a, best.result.b), (q("0"), q("0")));
}

#[test]
fn certificate_json_round_trip() {
    let c = table2_adjusted();
    let text = serde_json::to_string(&c).unwrap();
    assert!(text.starts_with("{\"variant\":\"standard\",\"multipliers\":{"));
    assert!(text.contains("\"5.2\":\"99/37\""));
    assert_eq!(Certificate::from_json(&text).unwrap(), c);
    let wrapped = format!("{{\"certificate\": {text}, \"note\": 1}}");
    assert_eq!(Certificate::from_json(&wrapped).unwrap(), c);
    assert!(matches!(Certificate::from_json("{\"variant\":\"x\",\"multipliers\":{}}"), Err(Error::Parse(_))));
    assert!(matches!(
        Certificate::from_json("{\"variant\":\"no3\",\"multipliers\":{\"5.1\":\"1/0\"}}"),
        Err(Error::Parse(_))
    ));
}

#[test]
fn bound_result_json() {
    let r = check_certificate(&build_system(Variant::Standard), &table2_adjusted()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["a"], "99/37");
    assert_eq!(v["b"], "-187/37");
    assert_eq!(v["residual"]["S41"], "3/37");
}
