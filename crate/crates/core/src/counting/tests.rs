use super::*;
use proptest::prelude::*;

fn ctx(p: u64, m: u32) -> FieldContext {
    FieldContext::new(p, m).unwrap()
}

fn el(ctx: &FieldContext, v: u64) -> Element {
    ctx.element(v).unwrap()
}

#[test]
fn profile_examples() {
    let f5 = Field::new(5, 1).unwrap();
    let w = power_profile(&f5, 4);
    assert_eq!(w.d, 4);
    assert_eq!(w.w, vec![1, 4, 0, 0, 0]);

    let f13 = Field::new(13, 1).unwrap();
    let w = power_profile(&f13, 4);
    let support: Vec<u64> = w.support().map(|(c, _)| c).collect();
    assert_eq!(support, vec![0, 1, 3, 9]);
    assert!(w.support().all(|(c, n)| if c == 0 { n == 1 } else { n == 4 }));

    let f7 = Field::new(7, 1).unwrap();
    let w = power_profile(&f7, 4);
    assert_eq!(w.d, 2);
    assert_eq!(w.w, vec![1, 2, 2, 0, 2, 0, 0]);
}

#[test]
fn profile_invariants_over_extensions() {
    for (p, m) in [(3, 2), (5, 2), (3, 3), (7, 2)] {
        let f = Field::new(p, m).unwrap();
        for e in [2, 4, 6] {
            let w = power_profile(&f, e);
            assert_eq!(w.w.iter().sum::<u64>(), f.q());
            assert_eq!(w.w[0], 1);
            if e == 2 {
                for c in f.nonzero_elements() {
                    assert_eq!(w.count(c) as i32 - 1, f.quadratic_character(c));
                }
            }
        }
    }
}

#[test]
fn oracle_examples() {
    let f = Field::new(5, 1).unwrap();
    let one = Element::ONE;
    let two = f.element(2).unwrap();
    assert_eq!(oracle_count(&f, &[one, one], Element::ZERO, 4).unwrap(), 1);
    assert_eq!(oracle_count(&f, &[one, one, one], one, 4).unwrap(), 12);
    assert_eq!(oracle_count(&f, &[one, two], Element::ZERO, 4).unwrap(), 1);
}

#[test]
fn oracle_matches_enumeration() {
    for (p, m) in [(5, 1), (3, 2), (13, 1), (7, 1), (3, 3), (5, 2), (7, 2)] {
        let f = Field::new(p, m).unwrap();
        let n_max = if f.q() <= 13 { 3 } else { 2 };
        for n in 1..=n_max {
            let mut coeffs = vec![Element::ONE; n];
            coeffs[n - 1] = f.element(f.q() - 1).unwrap();
            for c in f.elements() {
                for cs in [&ones(n)[..], &coeffs[..]] {
                    assert_eq!(
                        oracle_count(&f, cs, c, 4).unwrap(),
                        enumerate_count(&f, cs, c, 4).unwrap(),
                        "q={} n={n} c={c}",
                        f.q()
                    );
                }
            }
        }
    }
}

#[test]
fn oracle_errors() {
    let f = Field::new(5, 1).unwrap();
    assert_eq!(oracle_count(&f, &[Element::ZERO], Element::ONE, 4), Err(Error::ZeroCoefficient));
    assert!(matches!(oracle_count(&f, &[], Element::ONE, 4), Err(Error::BadArity { .. })));
    let big = Field::new(1_000_003, 1).unwrap();
    assert!(matches!(oracle_count(&big, &[Element::ONE; 2], Element::ONE, 4), Err(Error::TooLarge { .. })));
    assert!(matches!(enumerate_count(&f, &[Element::ONE; 12], Element::ONE, 4), Err(Error::TooLarge { .. })));
}

#[test]
fn small_counts_examples() {
    let c5 = ctx(5, 1);
    assert_eq!(count_small(&c5, Element::ONE, 3).unwrap(), 12);
    assert_eq!(count_small(&c5, Element::ONE, 4).unwrap(), 16);
    let c13 = ctx(13, 1);
    assert_eq!(count_small(&c13, Element::ONE, 2).unwrap(), 8);
    assert_eq!(count_small(&c13, Element::ONE, 1).unwrap(), 4);
    assert_eq!(count_small(&c13, el(&c13, 2), 1).unwrap(), 0);
    assert_eq!(count_small(&c13, Element::ZERO, 2), Err(Error::ZeroRhs));
    assert!(matches!(count_small(&ctx(7, 1), Element::ONE, 2), Err(Error::WrongResidueClass { .. })));
    assert!(matches!(count_small(&c13, Element::ONE, 5), Err(Error::BadArity { .. })));
}

#[test]
fn cyclotomy_examples() {
    let c13 = ctx(13, 1);
    assert_eq!(count_via_cyclotomy(&c13, Element::ONE, 1).unwrap(), 4);
    assert_eq!(count_via_cyclotomy(&c13, Element::ONE, 2).unwrap(), 8);
    assert_eq!(count_via_cyclotomy(&ctx(5, 1), Element::ONE, 4).unwrap(), 16);
}

#[test]
fn small_paths_agree_with_oracle() {
    for (p, m) in [(5, 1), (13, 1), (17, 1), (29, 1), (41, 1), (3, 2), (5, 2), (7, 2)] {
        let cx = ctx(p, m);
        for n in 1..=4 {
            let dist = oracle_distribution(&cx.field, &ones(n), 4).unwrap();
            for c in cx.field.nonzero_elements() {
                let want = SolutionCount(dist[c.value() as usize].clone());
                assert_eq!(count_small(&cx, c, n).unwrap(), want, "small q={} n={n} c={c}", cx.q());
                assert_eq!(count_via_cyclotomy(&cx, c, n).unwrap(), want, "cyclo q={} n={n} c={c}", cx.q());
                assert_eq!(count_N(&cx, c, n).unwrap(), want, "series q={} n={n} c={c}", cx.q());
            }
        }
    }
}

#[test]
fn dispatcher_examples() {
    assert_eq!(count_N(&ctx(5, 1), Element::ZERO, 5).unwrap(), 1025);
    let c7 = ctx(7, 1);
    assert_eq!(count_N(&c7, Element::ONE, 2).unwrap(), 8);
    let c13 = ctx(13, 1);
    let want = oracle_count(&c13.field, &ones(6), Element::ONE, 4).unwrap();
    assert_eq!(count_N(&c13, Element::ONE, 6).unwrap(), want);
    assert!(matches!(count_N(&c13, Element::ONE, 0), Err(Error::BadArity { .. })));
}

#[test]
fn dispatcher_matches_oracle_all_classes() {
    for (p, m) in [(5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (3, 3), (17, 1), (5, 2)] {
        let cx = ctx(p, m);
        for n in 1..=6 {
            let dist = oracle_distribution(&cx.field, &ones(n), 4).unwrap();
            for c in cx.field.elements() {
                assert_eq!(
                    count_N(&cx, c, n).unwrap().0,
                    dist[c.value() as usize],
                    "q={} n={n} c={c}",
                    cx.q()
                );
            }
        }
    }
}

#[test]
fn sum_of_squares_matches_quadratic_oracle() {
    for (p, m) in [(5, 1), (7, 1), (3, 2), (13, 1), (3, 3)] {
        let f = Field::new(p, m).unwrap();
        for n in 1..=5 {
            let dist = oracle_distribution(&f, &ones(n), 2).unwrap();
            for c in f.elements() {
                assert_eq!(sum_of_squares_count(&f, c, n).unwrap().0, dist[c.value() as usize]);
            }
        }
    }
}

#[test]
fn twisted_examples() {
    let c5 = ctx(5, 1);
    let two = el(&c5, 2);
    assert_eq!(count_M(&c5, two, 2).unwrap(), 1);
    assert_eq!(count_M(&c5, two, 3).unwrap(), 1);
    let c7 = ctx(7, 1);
    assert_eq!(count_M(&c7, el(&c7, 3), 2).unwrap(), 13);
    assert_eq!(count_M(&c5, Element::ONE, 2), Err(Error::QuarticY(1)));
    assert_eq!(count_M(&c5, Element::ZERO, 2), Err(Error::QuarticY(0)));
    assert_eq!(count_M(&c7, el(&c7, 2), 2), Err(Error::QuarticY(2)));
}

#[test]
fn twisted_matches_oracle() {
    for (p, m) in [(5, 1), (7, 1), (3, 2), (13, 1), (17, 1), (11, 1)] {
        let cx = ctx(p, m);
        for y in cx.field.nonzero_elements().filter(|&y| !cx.is_quartic(y)) {
            for n in 2..=6 {
                let mut coeffs = ones(n);
                coeffs[n - 1] = y;
                let want = oracle_count(&cx.field, &coeffs, Element::ZERO, 4).unwrap();
                assert_eq!(count_M(&cx, y, n).unwrap(), want, "q={} y={y} n={n}", cx.q());
            }
        }
    }
}

#[test]
fn count_display_round_trip() {
    let c = SolutionCount::from(1025u64);
    assert_eq!(c.to_string(), "1025");
    assert_eq!(serde_json::to_string(&c).unwrap(), "\"1025\"");
    assert_eq!(serde_json::from_str::<SolutionCount>("\"1025\"").unwrap(), c);
    assert_eq!("1025".parse::<SolutionCount>().unwrap(), c);
    assert!(SolutionCount::from_signed(BigInt::from(-1), "x").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn total_mass(idx in 0usize..6, n in 1usize..7) {
        let (p, m) = [(5, 1), (7, 1), (3, 2), (13, 1), (3, 3), (17, 1)][idx];
        let cx = ctx(p, m);
        let mut total = BigUint::zero();
        for c in cx.field.elements() {
            total += count_N(&cx, c, n).unwrap().0;
        }
        prop_assert_eq!(total, BigUint::from(cx.q()).pow(n as u32));
    }

    #[test]
    fn class_invariance(idx in 0usize..5, n in 1usize..7, raw in 1u64..1000) {
        let (p, m) = [(5, 1), (13, 1), (3, 2), (17, 1), (5, 2)][idx];
        let cx = ctx(p, m);
        let c = el(&cx, 1 + raw % (cx.q() - 1));
        let rep = cx.gen.power(&cx.field, cx.quartic_class(c).unwrap());
        prop_assert_eq!(count_N(&cx, c, n).unwrap(), count_N(&cx, rep, n).unwrap());
    }
}
