use num_bigint::BigInt;
use schurmf::charoracle::plethysm;
use schurmf::domino::{
    closed_form_plethysm, domino_plethysm_generic, domino_tally, domino_tally_two_phase,
    enumerate_domino_diagrams, even_partitions, plethysm_two, rectangle_plethysm, shift_symmetric,
    top_filling, DominoError, DominoTableau,
};
use schurmf::lr::lr_coefficient;
use schurmf::partition::partitions_of;
use schurmf::verify::sample_domino_tableaux;
use schurmf::{s, Partition};

fn p(t: &str) -> Partition {
    t.parse().unwrap()
}

fn row2() -> Partition {
    Partition::row(2)
}

fn col2() -> Partition {
    Partition::column(2)
}

fn word(t: &DominoTableau) -> String {
    t.reading_word().iter().map(|d| d.to_string()).collect()
}

#[test]
fn sample_domino_tableaux_read_correctly() {
    let [(odd, w1), (even, w2)] = sample_domino_tableaux();
    let odd = DominoTableau::from_tiles(p("[2,2,1]"), &odd).unwrap();
    let even = DominoTableau::from_tiles(p("[2,2,1]"), &even).unwrap();
    assert_eq!(word(&odd), w1);
    assert_eq!(word(&even), w2);
    assert_eq!(odd.diagram().horizontal_count(), 6);
    assert!(!odd.is_even());
    assert_eq!(even.diagram().horizontal_count(), 4);
    assert!(even.is_even());
    let diagrams = enumerate_domino_diagrams(&p("[2,2,1]"));
    assert!(diagrams.contains(odd.diagram()) && diagrams.contains(even.diagram()));
}

#[test]
fn top_fillings() {
    let [(odd, _), _] = sample_domino_tableaux();
    let fig = DominoTableau::from_tiles(p("[2,2,1]"), &odd).unwrap();
    assert_eq!(top_filling(&p("[2,2,1]"), &[1, 1, 0]).unwrap(), fig);
    let t = top_filling(&p("[3,3]"), &[2, 1]).unwrap();
    assert_eq!(t.weight(), vec![5, 4, 2, 1]);
    assert!(matches!(
        top_filling(&p("[2,1]"), &[3]),
        Err(DominoError::OutOfRange { .. })
    ));
    let all_vertical = top_filling(&p("[2,1]"), &[2, 1]).unwrap();
    assert_eq!(all_vertical.diagram().horizontal_count(), 0);
    assert!(all_vertical.is_even());
}

#[test]
fn plethysm_examples() {
    assert_eq!(
        plethysm_two(&p("[2,1]"), &row2()).unwrap(),
        s(&[4, 2])
            .add(&s(&[3, 2, 1]))
            .add(&s(&[3, 1, 1, 1]))
            .add(&s(&[2, 2, 2]))
    );
    assert_eq!(
        plethysm_two(&p("[2,1]"), &col2()).unwrap(),
        s(&[4, 1, 1])
            .add(&s(&[3, 3]))
            .add(&s(&[3, 2, 1]))
            .add(&s(&[2, 2, 1, 1]))
    );
    assert_eq!(plethysm_two(&p("[1]"), &row2()).unwrap(), s(&[2]));
    assert_eq!(
        closed_form_plethysm(&row2(), &Partition::column(3)).unwrap(),
        s(&[4, 1, 1]).add(&s(&[3, 3]))
    );
    assert_eq!(
        closed_form_plethysm(&row2(), &row2()).unwrap(),
        s(&[4]).add(&s(&[2, 2]))
    );
    assert!(plethysm_two(&p("[2,1]"), &p("[3]")).is_err());
    assert_eq!(shift_symmetric(&p("[3]")).unwrap(), p("[4,1,1]"));
    let mut evens = even_partitions(2);
    evens.sort();
    let mut want = vec![p("[4]"), p("[2,2]")];
    want.sort();
    assert_eq!(evens, want);
}

#[test]
fn square_splits_into_plethysms() {
    for mu in (1..=7).flat_map(partitions_of) {
        let sym = plethysm_two(&mu, &row2()).unwrap();
        let alt = plethysm_two(&mu, &col2()).unwrap();
        assert_eq!(
            sym.add(&alt),
            s(mu.parts()).multiply(&s(mu.parts())),
            "{mu}"
        );
        let m = mu.size();
        let conj = mu.conjugate();
        assert_eq!(
            sym.omega(),
            plethysm_two(&conj, &row2().conjugate_pow(m)).unwrap(),
            "{mu}"
        );
        assert_eq!(
            alt.omega(),
            plethysm_two(&conj, &col2().conjugate_pow(m)).unwrap(),
            "{mu}"
        );
    }
}

#[test]
fn rectangle_fast_path_matches_enumeration() {
    for a in 1..=4 {
        for b in 1..=4 {
            for nu in [row2(), col2()] {
                let mu = Partition::rectangle(a, b);
                assert_eq!(
                    rectangle_plethysm(a, b, &nu).unwrap(),
                    domino_plethysm_generic(&mu, &nu).unwrap(),
                    "{mu} {nu}"
                );
            }
        }
    }
}

#[test]
fn closed_forms_match_oracle() {
    for h in 1..=8 {
        for outer in [Partition::row(h), Partition::column(h)] {
            for inner in [row2(), col2()] {
                assert_eq!(
                    closed_form_plethysm(&inner, &outer).unwrap(),
                    plethysm(&inner, &outer).unwrap(),
                    "{outer}∘{inner}"
                );
            }
        }
    }
}

#[test]
fn domino_matches_oracle() {
    for mu in (1..=6).flat_map(partitions_of) {
        for nu in [row2(), col2()] {
            assert_eq!(
                plethysm_two(&mu, &nu).unwrap(),
                plethysm(&mu, &nu).unwrap(),
                "{nu}∘{mu}"
            );
        }
    }
}

#[test]
fn joint_and_two_phase_tallies_agree() {
    for mu in (1..=5).flat_map(partitions_of) {
        assert_eq!(domino_tally(&mu, None), domino_tally_two_phase(&mu), "{mu}");
    }
}

#[test]
fn doubled_lr_coefficients_split_evenly() {
    // for almost rectangular μ, a coefficient ≥ 2 in s_μ² is shared by both plethysms
    for mu in (1..=8)
        .flat_map(partitions_of)
        .filter(|m| m.is_almost_rectangular())
    {
        let sym = plethysm_two(&mu, &row2()).unwrap();
        let alt = plethysm_two(&mu, &col2()).unwrap();
        for lambda in partitions_of(2 * mu.size()) {
            if lr_coefficient(&mu, &mu, &lambda) >= 2 {
                assert_eq!(sym.coeff(&lambda), BigInt::from(1), "{mu} {lambda}");
                assert_eq!(alt.coeff(&lambda), BigInt::from(1), "{mu} {lambda}");
            }
        }
    }
}
