use margulis::casefile::{self, parse, parse_cases, write, write_cases, Record};
use margulis::cases::{builtin_cases, CaseSpec, ConstraintRegion, Disc, Disposition, ExceptionPoint, FocalSum};
use margulis::constants::Order;
use margulis::Complex;
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = Complex> {
    (-1e3f64..1e3, -1e3f64..1e3).prop_map(|(a, b)| Complex::new(a, b))
}

fn disposition() -> impl Strategy<Value = Disposition> {
    prop_oneof![
        "[a-zA-Z0-9 ]{0,12}".prop_map(|s| Disposition::Excluded(s.trim().to_string())),
        Just(Disposition::JointBound),
        Just(Disposition::JointMin),
    ]
}

fn region() -> impl Strategy<Value = ConstraintRegion> {
    (
        prop::collection::vec((complex(), 1e-3f64..50.0, any::<bool>()), 0..4),
        prop::collection::vec((complex(), complex(), 0.0f64..50.0), 0..3),
        prop::collection::vec((complex(), disposition()), 0..5),
    )
        .prop_map(|(discs, sums, ex)| ConstraintRegion {
            discs: discs.into_iter().map(|(c, r, s)| Disc::new(c, r, s)).collect(),
            sums: sums.into_iter().map(|(a, b, s)| FocalSum::new(a, b, s)).collect(),
            exceptions: ex.into_iter().map(|(beta, disposition)| ExceptionPoint { beta, disposition }).collect(),
        })
}

fn case() -> impl Strategy<Value = CaseSpec> {
    (
        "[A-Za-z0-9/=.-]{1,20}",
        complex(),
        complex(),
        region(),
        0.0f64..2.0,
        prop_oneof![(3u32..1000).prop_map(Order::Finite), Just(Order::Infinite)],
        1u32..4,
    )
        .prop_map(|(name, gamma, beta_f, region, expected_bound, compare_to, power)| CaseSpec {
            name,
            gamma,
            beta_f,
            region,
            expected_bound,
            compare_to,
            power,
        })
}

proptest! {
    #[test]
    fn case_records_round_trip(cases in prop::collection::vec(case(), 1..4)) {
        let text = write_cases(&cases);
        let back = parse_cases(&text).unwrap();
        prop_assert_eq!(&back, &cases);
        prop_assert_eq!(write_cases(&back), text);
    }

    #[test]
    fn parser_never_panics(text in "(\\[case\\]|\\[extremal\\]|[a-z_]{1,8} = [-0-9.,; a-z()]{0,30}|#.*|)(\n(\\[case\\]|[a-z_]{1,8} = [-0-9.,; a-z()]{0,30}|)){0,12}") {
        let _ = parse(&text);
    }
}

#[test]
fn builtin_file_round_trip() {
    let cases = builtin_cases();
    let text = write_cases(&cases);
    assert_eq!(parse_cases(&text).unwrap(), cases);
}

#[test]
fn extremal_records_round_trip() {
    let records: Vec<Record> = (3..=12)
        .map(|n| margulis::extremal::extremal_elliptic_config(n).unwrap())
        .chain([margulis::extremal::orders_6_3_config(), margulis::extremal::modular_pair()])
        .enumerate()
        .map(|(i, config)| Record::Extremal(casefile::ExtremalRecord { name: format!("r{i}"), config }))
        .collect();
    let text = write(&records);
    assert_eq!(parse(&text).unwrap(), records);
}

#[test]
fn errors_carry_line_numbers() {
    let cases = [
        ("[case]\nname = a\ngamma = 1,\n", 3),
        ("name = a\n", 1),
        ("[case]\n\n\n[bogus]\n", 4),
        ("[case]\nname = a\nname = b\n", 3),
        ("[case]\nname = a\ngamma = 0\nbeta_f = 0\nexpected = 1\ncompare_to = c(2)\n", 6),
        ("[case]\nname = a\ngamma = 0\nbeta_f = 0\nexpected = 1\ncompare_to = c(3)\ndisc = 0 ; -1 ; closed\n", 7),
        ("[extremal]\nname = e\nkind = orders-6-3\nf = 1 0 0 0 0 0 2 0\n", 4),
    ];
    for (text, line) in cases {
        match parse(text) {
            Err(margulis::Error::Parse { line: l, message }) => assert_eq!(l, line, "{text:?}: {message}"),
            other => panic!("{text:?}: expected a parse error, got {other:?}"),
        }
    }
}

#[test]
fn value_parsers() {
    assert_eq!(casefile::parse_complex(" -1.5 , 2 ").unwrap(), Complex::new(-1.5, 2.0));
    assert_eq!(casefile::parse_complex("3").unwrap(), Complex::new(3.0, 0.0));
    assert!(casefile::parse_complex("nan,0").is_err());
    assert!(casefile::parse_complex("1,inf").is_err());
    assert_eq!(casefile::parse_reals8("1 0, 0 0 0 0 1 0").unwrap(), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    assert!(casefile::parse_reals8("1 2 3").is_err());
    assert_eq!(casefile::parse_target("c(inf)").unwrap(), Order::Infinite);
    assert_eq!(casefile::parse_target("c(5)").unwrap(), Order::Finite(5));
    assert!(casefile::parse_target("d(5)").is_err());
}
