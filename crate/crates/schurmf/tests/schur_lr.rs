use num_bigint::BigInt;
use proptest::prelude::*;
use schurmf::charoracle::{degree, factorial, product_via_characters};
use schurmf::lr::{
    enumerate_lr_tableaux, induce_box, is_latticed, lr_coefficient, lr_product, multiply_by_column,
    multiply_by_row, restrict_box, Tableau,
};
use schurmf::mflib::MfVerdict;
use schurmf::partition::{partitions_of, Multifunction, Step};
use schurmf::{s, Partition, SchurExpansion};

fn p(t: &str) -> Partition {
    t.parse().unwrap()
}

fn arb_partition(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn arb_homogeneous(max_degree: usize) -> impl Strategy<Value = SchurExpansion> {
    (1..=max_degree).prop_flat_map(|n| {
        let all = partitions_of(n);
        let len = all.len();
        prop::collection::vec((0..len, 1i64..4), 1..=3).prop_map(move |terms| {
            let mut x = SchurExpansion::zero();
            for (i, c) in terms {
                x.add_term(all[i].clone(), BigInt::from(c));
            }
            x
        })
    })
}

#[test]
fn sample_lr_tableaux_reading_words() {
    let rows = |spec: &[&str]| -> Vec<Vec<Option<usize>>> {
        spec.iter()
            .map(|r| {
                r.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect()
            })
            .collect()
    };
    for (spec, word) in [
        (&["....1", "..12", ".123"][..], "123121"),
        (&["..11", ".12", "23"][..], "112132"),
        (&["..11", ".22", "13"][..], "112231"),
    ] {
        let t = Tableau::from_rows(&rows(spec)).unwrap();
        let got: String = t.reading_word().iter().map(|d| d.to_string()).collect();
        assert_eq!(got, word);
        assert!(t.is_semistandard());
    }
}

#[test]
fn latticed_examples() {
    let w = |t: &str| {
        t.chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect::<Vec<_>>()
    };
    assert!(is_latticed(&w("1122313")));
    assert!(is_latticed(&w("121132434")));
    assert!(!is_latticed(&w("1123132")));
    assert!(is_latticed(&[]));
}

#[test]
fn lr_examples() {
    assert_eq!(
        lr_coefficient(&p("[4,2,1]"), &p("[3,2,1]"), &p("[5,4,4]")),
        1
    );
    assert_eq!(
        lr_coefficient(&p("[4,2,1]"), &p("[3,2,1]"), &p("[4,4,3,2]")),
        2
    );
    assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")), 2);
    assert_eq!(
        lr_coefficient(&p("[3,1]"), &Partition::empty(), &p("[3,1]")),
        1
    );
    assert_eq!(
        enumerate_lr_tableaux(&p("[4,2,1]"), &p("[3,2,1]"), &p("[4,4,3,2]")).len(),
        2
    );
    assert_eq!(
        multiply_by_row(&p("[1,1]"), 2),
        s(&[3, 1]).add(&s(&[2, 1, 1]))
    );
    assert_eq!(multiply_by_column(&p("[3,2]"), 0), s(&[3, 2]));
    assert_eq!(
        induce_box(&p("[2,1]")),
        s(&[3, 1]).add(&s(&[2, 2])).add(&s(&[2, 1, 1]))
    );
    assert_eq!(restrict_box(&p("[1]")).unwrap(), SchurExpansion::one());
}

#[test]
fn schur_examples() {
    assert_eq!(s(&[2, 1]).inner(&s(&[2, 1])), BigInt::from(1));
    assert_eq!(s(&[3]).inner(&s(&[2, 1])), BigInt::from(0));
    assert_eq!(s(&[2]).add(&s(&[2])), s(&[2]).scale(&BigInt::from(2)));
    assert_eq!(s(&[3]).omega(), s(&[1, 1, 1]));
    assert_eq!(
        s(&[6]).add(&s(&[2, 2, 2])).omega(),
        s(&[1; 6]).add(&s(&[3, 3]))
    );
    let sq = s(&[2, 1]).multiply(&s(&[2, 1]));
    assert_eq!(MfVerdict::of(&sq).witness, Some(p("[3,2,1]")));
    assert_eq!(s(&[1]).multiply(&s(&[1])), s(&[2]).add(&s(&[1, 1])));
    assert_eq!(SchurExpansion::parse("s[3^2]").unwrap(), s(&[3, 3]));
    assert_eq!(SchurExpansion::one().render(), "s[]");
    let x = SchurExpansion::parse("s[2,1] + 2*s[1,1,1]").unwrap();
    assert_eq!(x.len(), 2);
    assert_eq!(x.coeff(&p("[1,1,1]")), BigInt::from(2));
}

#[test]
fn lr_symmetry_and_conjugation() {
    for n in 0..=10 {
        for lambda in partitions_of(n) {
            for k in 0..=n {
                for mu in partitions_of(k).into_iter().filter(|m| lambda.contains(m)) {
                    for nu in partitions_of(n - k) {
                        let c = lr_coefficient(&mu, &nu, &lambda);
                        assert_eq!(c, lr_coefficient(&nu, &mu, &lambda));
                        assert_eq!(
                            c,
                            lr_coefficient(&mu.conjugate(), &nu.conjugate(), &lambda.conjugate())
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn dimension_count() {
    for total in 0..=10 {
        for k in 0..=total {
            for mu in partitions_of(k) {
                for nu in partitions_of(total - k) {
                    let lhs: BigInt = lr_product(&mu, &nu)
                        .terms()
                        .map(|(l, c)| c * degree(l))
                        .sum();
                    let binom = factorial(total) / (factorial(k) * factorial(total - k));
                    assert_eq!(lhs, binom * degree(&mu) * degree(&nu), "{mu} {nu}");
                }
            }
        }
    }
}

#[test]
fn fast_paths_match_enumeration() {
    use schurmf::lr::count_lr_tableaux;
    for n in 0..=14 {
        for lambda in partitions_of(n) {
            for k in 1..n {
                for mu in partitions_of(k).into_iter().filter(|m| lambda.contains(m)) {
                    let nu_row = Partition::row(n - k);
                    let nu_col = Partition::column(n - k);
                    for nu in [nu_row, nu_col] {
                        assert_eq!(
                            lr_coefficient(&mu, &nu, &lambda),
                            count_lr_tableaux(&mu, &nu, &lambda)
                        );
                    }
                    let fast_shapes = mu.is_rectangular() || mu.is_hook();
                    if fast_shapes && 2 * k == n {
                        for nu in [mu.clone(), mu.conjugate()] {
                            assert_eq!(
                                lr_coefficient(&mu, &nu, &lambda),
                                count_lr_tableaux(&mu, &nu, &lambda),
                                "{mu} {nu} {lambda}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rectangle_products_are_multiplicity_free() {
    for a in 1..=4 {
        for b in 1..=4 {
            let r = Partition::rectangle(a, b);
            assert!(lr_product(&r, &r).is_multiplicity_free().unwrap());
            assert!(lr_product(&r, &r.conjugate())
                .is_multiplicity_free()
                .unwrap());
        }
    }
}

#[test]
fn rectangles_far_from_their_conjugates() {
    for l in 1..=5 {
        for n in (l * l + l + 1)..=40 {
            for lambda in partitions_of(n)
                .into_iter()
                .filter(|x| x.is_rectangular() && !x.is_square())
            {
                assert!(
                    lambda.l1_distance(&lambda.conjugate()) > 2 * l,
                    "{lambda} l={l}"
                );
            }
        }
    }
}

#[test]
fn lr_product_matches_character_product() {
    for total in 2..=10 {
        for k in 1..total {
            for mu in partitions_of(k) {
                for nu in partitions_of(total - k) {
                    let via = product_via_characters(&s(mu.parts()), &s(nu.parts())).unwrap();
                    assert_eq!(lr_product(&mu, &nu), via, "{mu} {nu}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn omega_is_multiplicative(x in arb_homogeneous(4), y in arb_homogeneous(4)) {
        prop_assert_eq!(x.multiply(&y).omega(), x.omega().multiply(&y.omega()));
    }

    #[test]
    fn products_are_graded(x in arb_homogeneous(6), y in arb_homogeneous(6)) {
        let want = x.degrees()[0] + y.degrees()[0];
        prop_assert_eq!(x.multiply(&y).degrees(), vec![want]);
    }

    #[test]
    fn commutative_and_associative(x in arb_homogeneous(4), y in arb_homogeneous(4), z in arb_homogeneous(4)) {
        prop_assert_eq!(x.multiply(&y), y.multiply(&x));
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
    }

    #[test]
    fn text_and_json_round_trip(x in arb_homogeneous(6)) {
        prop_assert_eq!(SchurExpansion::parse(&x.render()).unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<SchurExpansion>(&json).unwrap(), x);
    }

    #[test]
    fn adding_columns_or_rows_never_lowers_coefficients(
        mu in arb_partition(1, 4), nu in arb_partition(1, 4), r in 1usize..=3, pick in 0usize..64,
        steps in prop::collection::vec((any::<bool>(), arb_partition(1, 2)), 1..3)
    ) {
        let support: Vec<Partition> = lr_product(&mu, &nu).support().cloned().collect();
        let lambda = &support[pick % support.len()];
        let c = lr_coefficient(&mu, &nu, lambda);
        let (col, row) = (Partition::column(r), Partition::row(r));
        prop_assert!(lr_coefficient(&mu.plus(&col), &nu, &lambda.plus(&col)) >= c);
        prop_assert!(lr_coefficient(&mu.union_parts(&row), &nu, &lambda.union_parts(&row)) >= c);
        let f = Multifunction::new(
            steps.into_iter().map(|(add, a)| if add { Step::Add(a) } else { Step::Union(a) }).collect(),
        );
        prop_assert!(lr_coefficient(&f.apply(&mu), &nu, &f.apply(lambda)) >= c);
    }

    #[test]
    fn far_apart_products_sum_to_multiplicity_free(
        (mu, nu) in (2usize..=8).prop_flat_map(|n| {
            let all = partitions_of(n);
            let k = all.len();
            (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
        }),
        l in 1usize..=3
    ) {
        // s_μ s_(l) and s_ν s_(l) share no constituent once |μ−ν| > 2l
        prop_assume!(mu.l1_distance(&nu) > 2 * l);
        let row = Partition::row(l);
        prop_assert!(lr_product(&mu, &row).add(&lr_product(&nu, &row)).is_multiplicity_free().unwrap());
    }
}
