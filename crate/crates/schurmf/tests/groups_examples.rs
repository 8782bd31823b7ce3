use proptest::prelude::*;
use schurmf::charoracle::plethysm;
use schurmf::groups::{
    classification_corollary_check, classify_subgroups, double_even_mf, enumerate_irreducibles,
    even_and_strip_mf, index_two_lift, induced_symfunc, is_induced_mf, m12_trivial_induced,
    m2_index_two_mf, m2_index_two_symfunc, m2_index_two_witness, GroupDescriptor as G, GroupError,
    IrredCharDescriptor as C, Sporadic, SporadicCharacter, SporadicVariant, COROLLARY_IDS,
};
use schurmf::partition::partitions_of;
use schurmf::{s, Partition, SchurExpansion};
use serde_json::json;

fn p(t: &str) -> Partition {
    t.parse().unwrap()
}

#[test]
fn index_two_lift_examples() {
    let (l, lc) = (s(&[3, 1]), s(&[2, 1, 1]));
    assert_eq!(index_two_lift(&l, &lc, false).unwrap(), l.add(&lc));
    assert_eq!(index_two_lift(&l, &lc, true).unwrap(), l);
    assert!(matches!(
        index_two_lift(&l, &s(&[2]), false),
        Err(GroupError::DegreeMismatch { .. })
    ));
}

#[test]
fn induced_examples() {
    let g = G::Young { k: 3, l: 2 };
    let rho = C::Product {
        lambda: p("[2,1]"),
        mu: p("[2]"),
    };
    assert_eq!(
        induced_symfunc(&g, &rho).unwrap(),
        s(&[2, 1]).multiply(&s(&[2]))
    );

    for k in [1, 3, 4] {
        let g = G::SkTimesSporadic {
            k,
            group: Sporadic::Pgl2_5,
            variant: SporadicVariant::Full,
        };
        let rho = C::Sporadic {
            lambda: Partition::row(k),
            character: SporadicCharacter::Trivial,
        };
        let want = s(&[k]).multiply(&s(&[6]).add(&s(&[2, 2, 2])));
        assert_eq!(induced_symfunc(&g, &rho).unwrap(), want);
    }

    // m = 3 is odd, so the top factor is twisted: ν̄ = ν′
    let g = G::SmWr2CapAlt { m: 3, ambient: 7 };
    let rho = C::elementary(None, p("[3]"), p("[2]"));
    let want = plethysm(&p("[3]"), &p("[2]"))
        .unwrap()
        .add(&plethysm(&p("[1,1,1]"), &p("[1,1]")).unwrap());
    assert_eq!(induced_symfunc(&g, &rho).unwrap(), s(&[1]).multiply(&want));

    let m12 = m12_trivial_induced();
    let parts: [&[usize]; 8] = [
        &[12],
        &[6, 6],
        &[6, 2, 2, 2],
        &[4, 4, 4],
        &[4, 4, 1, 1, 1, 1],
        &[3, 3, 3, 3],
        &[2; 6],
        &[1; 12],
    ];
    assert_eq!(
        m12,
        parts
            .iter()
            .fold(SchurExpansion::zero(), |acc, q| acc.add(&s(q)))
    );
}

#[test]
fn rectangle_and_one_box_examples() {
    let check = |m: usize, mu: &str| {
        let g = G::SmWr2CapAlt {
            m,
            ambient: 2 * m + 1,
        };
        is_induced_mf(&g, &C::elementary(None, p(mu), p("[2]")))
            .unwrap()
            .verdict
    };
    assert!(!check(8, "[4,4]"));
    assert!(check(10, "[5,5]"));
}

#[test]
fn wreath_window_is_not_multiplicity_free() {
    for m in 3..=4 {
        let g = G::Tkmh {
            k: 2 * m - 1,
            m,
            h: 2,
        };
        let entries = enumerate_irreducibles(&g).unwrap();
        let bad = entries
            .iter()
            .find(|e| !is_induced_mf(&g, &e.character).unwrap().verdict);
        assert!(
            bad.is_some(),
            "m={m}: every character of T_kmh is induced-multiplicity-free"
        );
    }
}

#[test]
fn enumeration_counts() {
    assert_eq!(
        enumerate_irreducibles(&G::SmWr2 { m: 2, ambient: 4 })
            .unwrap()
            .len(),
        5
    );
    assert_eq!(
        enumerate_irreducibles(&G::Young { k: 1, l: 1 })
            .unwrap()
            .len(),
        1
    );
    let alt = enumerate_irreducibles(&G::Alternating { n: 4 }).unwrap();
    assert_eq!(alt.len(), 3);
    assert_eq!(
        alt.iter().filter(|e| e.self_paired == Some(true)).count(),
        1
    );
    let g = G::SkTimesSporadic {
        k: 2,
        group: Sporadic::PGammaL2_8,
        variant: SporadicVariant::Full,
    };
    assert!(enumerate_irreducibles(&g).is_err());
}

#[test]
fn induced_degrees_match_the_index() {
    // dim ρ↑ = [S_n : G]·dim ρ for the Young subgroups, checked via hook lengths
    use schurmf::charoracle::{degree, factorial};
    for (k, l) in [(2, 3), (3, 3), (1, 5)] {
        let g = G::Young { k, l };
        for e in enumerate_irreducibles(&g).unwrap() {
            let x = induced_symfunc(&g, &e.character).unwrap();
            let total: num_bigint::BigInt = x.terms().map(|(q, c)| c * degree(q)).sum();
            let C::Product { lambda, mu } = &e.character else {
                panic!("unexpected {}", e.character)
            };
            let index = factorial(k + l) / (factorial(k) * factorial(l));
            assert_eq!(total, index * degree(lambda) * degree(mu));
        }
    }
}

#[test]
fn classification_examples() {
    let groups: Vec<G> = classify_subgroups(66)
        .unwrap()
        .into_iter()
        .map(|c| c.group)
        .collect();
    assert!(groups.contains(&G::SymmetricGroup { n: 66 }));
    assert!(groups.contains(&G::Alternating { n: 66 }));
    assert!(groups.contains(&G::SkSmWr2CapAlt { k: 10, m: 28 }));
    assert!(groups.contains(&G::AmWr2 { m: 33, ambient: 66 }));
    assert!(!groups
        .iter()
        .any(|g| matches!(g, G::AmWr2 { m, ambient } if *ambient == 2 * m + 1)));
    let at67: Vec<G> = classify_subgroups(67)
        .unwrap()
        .into_iter()
        .map(|c| c.group)
        .collect();
    assert!(!at67.contains(&G::AmWr2 { m: 33, ambient: 67 }));
    assert!(matches!(
        classify_subgroups(60),
        Err(GroupError::BelowValidityThreshold { n: 60 })
    ));
    assert_eq!(
        GroupError::BelowValidityThreshold { n: 60 }.to_string(),
        "n below validity threshold 66"
    );
}

#[test]
fn classification_is_deterministic_and_duplicate_free() {
    for n in [66, 67, 72, 81] {
        let a = classify_subgroups(n).unwrap();
        assert_eq!(a, classify_subgroups(n).unwrap());
        let mut seen = std::collections::HashSet::new();
        for c in &a {
            assert_eq!(c.group.degree(), n, "{}", c.group);
            assert!(c.group.validate().is_ok(), "{}", c.group);
            assert!(seen.insert(c.group.clone()), "duplicate {}", c.group);
        }
    }
}

#[test]
fn corollary_examples() {
    assert!(even_and_strip_mf(8, 3));
    assert!(!double_even_mf(4));
    assert!(classification_corollary_check("even-and-strip", &json!({"k": 8, "h": 3})).unwrap());
    assert!(!classification_corollary_check("double-even", &json!({"h": 4})).unwrap());
    assert!(matches!(
        classification_corollary_check("no-such-lemma", &json!({})),
        Err(GroupError::UnknownCorollary(_))
    ));
    assert!(classification_corollary_check("even-and-strip", &json!({"k": 8})).is_err());
    for m in [4, 6] {
        let params = json!({"table": "hook_and_box", "m": m, "u": 2 * m - 1, "v": 2 * m - 2, "k": 2 * m - 2,
            "nu": [2], "nubar": [1, 1]});
        let _ = classification_corollary_check("hook-and-box-table", &params).unwrap();
    }
    assert_eq!(COROLLARY_IDS.len(), 23);
}

#[test]
fn double_even_witness() {
    // both summands of s_(h)∘s_(2) + s_(h)∘s_(1²) contain s_(h²) for even h
    for h in [2, 4, 6] {
        let x = plethysm(&p("[2]"), &Partition::row(h))
            .unwrap()
            .add(&plethysm(&p("[1,1]"), &Partition::row(h)).unwrap());
        assert_eq!(x.coeff(&Partition::rectangle(h, 2)), 2.into(), "h={h}");
        assert!(!double_even_mf(h));
    }
}

#[test]
fn m2_index_two_square_witness() {
    for n in 1..=10 {
        for lambda in partitions_of(n).into_iter().filter(|l| l.is_rectangular()) {
            let x = m2_index_two_symfunc(&lambda);
            if lambda.is_square() && lambda.size() >= 4 {
                let a = lambda.length();
                assert!(x.coeff(&m2_index_two_witness(a)) >= 2.into(), "{lambda}");
                assert!(!m2_index_two_mf(&lambda));
            } else if !lambda.is_square() {
                assert!(m2_index_two_mf(&lambda));
            }
        }
    }
}

fn arb_descriptor() -> impl Strategy<Value = G> {
    let k = 1usize..12;
    prop_oneof![
        k.clone().prop_map(|n| G::SymmetricGroup { n }),
        k.clone().prop_map(|n| G::Alternating { n }),
        (k.clone(), k.clone()).prop_map(|(k, l)| G::YoungCapAlt { k, l }),
        (k.clone(), 2usize..6).prop_map(|(k, m)| G::SkSmWr2 { k, m }),
        (k.clone(), 2usize..6, 2usize..4).prop_map(|(k, m, h)| G::Tkmh { k, m, h }),
        (2usize..6, 0usize..3).prop_map(|(m, e)| G::Tm2 {
            m,
            ambient: 2 * m + e
        }),
        (
            k.clone(),
            prop::sample::select(Sporadic::ALL.to_vec()),
            any::<bool>()
        )
            .prop_map(|(k, group, f)| G::SkTimesSporadic {
                k,
                group,
                variant: if f {
                    SporadicVariant::Full
                } else {
                    SporadicVariant::CapAlt
                }
            }),
        k.prop_map(|k| G::Nk { k }),
    ]
}

proptest! {
    #[test]
    fn descriptor_json_round_trip(g in arb_descriptor()) {
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<G>(&json).unwrap(), g);
    }

    #[test]
    fn young_induction_is_a_product(k in 1usize..5, l in 1usize..5, i in 0usize..16, j in 0usize..16) {
        let (ks, ls) = (partitions_of(k), partitions_of(l));
        let (lambda, mu) = (ks[i % ks.len()].clone(), ls[j % ls.len()].clone());
        let got = induced_symfunc(&G::Young { k, l }, &C::Product { lambda: lambda.clone(), mu: mu.clone() }).unwrap();
        prop_assert_eq!(got, s(lambda.parts()).multiply(&s(mu.parts())));
    }
}
