use proptest::prelude::*;
use schurmf::partition::{joinable, meetable, partitions_of, reachable, Multifunction, Step};
use schurmf::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

#[test]
fn conjugate_is_an_involution() {
    for n in 0..=30 {
        for l in partitions_of(n) {
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }
    assert_eq!(p("[5,3,3,2,1]").conjugate(), p("[5,4,3,1,1]"));
    assert_eq!(p("[3^3]").conjugate(), p("[3,3,3]"));
}

#[test]
fn union_is_conjugate_to_plus() {
    let small = up_to(12);
    for l in &small {
        for m in small.iter().filter(|m| m.size() + l.size() <= 12) {
            assert_eq!(
                l.union_parts(m).conjugate(),
                l.conjugate().plus(&m.conjugate()),
                "{l} {m}"
            );
        }
    }
}

#[test]
fn max_min_sizes() {
    let small = up_to(12);
    for l in &small {
        for m in &small {
            let (big, small_, d) = (l.max_parts(m), l.min_parts(m), l.l1_distance(m));
            assert_eq!(big.size() + small_.size(), l.size() + m.size());
            assert_eq!(big.size() - small_.size(), d);
        }
    }
    assert_eq!(p("[4,4]").l1_distance(&p("[2,2,2,2]")), 8);
}

#[test]
fn joinable_meetable_match_search() {
    for n in 0..=12 {
        let lambdas = partitions_of(n);
        let shapes = up_to(n);
        for mu in &shapes {
            for nu in &shapes {
                let join = lambdas.iter().any(|l| l.contains(mu) && l.contains(nu));
                let meet = lambdas.iter().any(|l| mu.contains(l) && nu.contains(l));
                assert_eq!(joinable(mu, nu, n), join, "join {mu} {nu} {n}");
                assert_eq!(meetable(mu, nu, n), meet, "meet {mu} {nu} {n}");
            }
        }
    }
}

// Shape flags restated from their definitions, deliberately naive.
fn rect(v: &[usize]) -> bool {
    !v.is_empty() && v.iter().all(|&x| x == v[0])
}

fn almost_rect(v: &[usize]) -> bool {
    if v.is_empty() || rect(v) {
        return false;
    }
    (0..v.len()).any(|i| {
        [v[i] + 1, v[i].wrapping_sub(1)].into_iter().any(|x| {
            let mut w = v.to_vec();
            w[i] = x;
            let w: Vec<usize> = w
                .into_iter()
                .filter(|&y| y != 0 && y != usize::MAX)
                .collect();
            w.windows(2).all(|p| p[0] >= p[1]) && rect(&w)
        })
    })
}

fn row_near(v: &[usize]) -> bool {
    !rect(v) && !v.is_empty() && rect(&v[..v.len() - 1])
}

fn row_unbalanced(v: &[usize]) -> bool {
    v.len() >= 2 && v[0] > v[1] && rect(&v[1..])
}

fn fat_hook(v: &[usize]) -> bool {
    let mut distinct = v.to_vec();
    distinct.dedup();
    distinct.len() == 2
}

#[test]
fn shape_flags_match_definitions() {
    for l in up_to(14) {
        let t = l.classify_shape();
        let v = l.parts();
        let c = l.conjugate();
        let cv = c.parts();
        assert_eq!(t.row, v.len() == 1, "{l}");
        assert_eq!(t.column, !v.is_empty() && v[0] == 1, "{l}");
        assert_eq!(t.rectangular, rect(v), "{l}");
        assert_eq!(t.square, rect(v) && v[0] == v.len(), "{l}");
        assert_eq!(t.properly_rectangular, rect(v) && !t.linear, "{l}");
        assert_eq!(
            t.two_rectangular,
            rect(v) && (v[0] == 2 || v.len() == 2),
            "{l}"
        );
        assert_eq!(t.almost_rectangular, almost_rect(v), "{l}");
        assert_eq!(t.row_near_rectangular, row_near(v), "{l}");
        assert_eq!(t.column_near_rectangular, row_near(cv), "{l}");
        assert_eq!(
            t.hook,
            v.len() >= 2 && v[0] >= 2 && v[1..].iter().all(|&x| x == 1),
            "{l}"
        );
        assert_eq!(t.fat_hook, fat_hook(v), "{l}");
        assert_eq!(t.row_unbalanced_fat_hook, row_unbalanced(v), "{l}");
        assert_eq!(t.column_unbalanced_fat_hook, row_unbalanced(cv), "{l}");
        assert_eq!(t.even, v.iter().all(|x| x % 2 == 0), "{l}");
        assert!(!(t.rectangular && t.almost_rectangular));
        assert!(!(t.hook && t.linear));
        assert_eq!(t.linear, t.row || t.column);
        assert_eq!(
            t.near_rectangular,
            t.row_near_rectangular || t.column_near_rectangular
        );
    }
}

#[test]
fn documented_shape_examples() {
    let t = p("[2,1]").classify_shape();
    assert!(t.row_near_rectangular && t.near_rectangular);
    let t = p("[4,1,1]").classify_shape();
    assert!(t.hook && !t.almost_rectangular);
    let t = p("[3,3,2]").classify_shape();
    assert!(t.almost_rectangular);
}

#[test]
fn multifunction_examples() {
    let f = Multifunction::new(vec![Step::Add(p("[1]")), Step::Union(p("[1]"))]);
    assert_eq!(f.apply(&p("[3,3]")), p("[4,3,1]"));
    let g = reachable(&p("[3,3]"), &p("[4,3,1]")).unwrap();
    assert_eq!(g.apply(&p("[3,3]")), p("[4,3,1]"));
    let g = reachable(&p("[2,1]"), &p("[3,2,2]")).unwrap();
    assert_eq!(g.apply(&p("[2,1]")), p("[3,2,2]"));
    assert_eq!(
        reachable(&p("[2,1]"), &p("[2,1]")).unwrap(),
        Multifunction::default()
    );
}

fn arb_step() -> impl Strategy<Value = Step> {
    (any::<bool>(), arb_partition(3))
        .prop_map(|(add, a)| if add { Step::Add(a) } else { Step::Union(a) })
}

proptest! {
    #[test]
    fn multifunctions_are_injective(steps in prop::collection::vec(arb_step(), 0..4), mu in arb_partition(8), nu in arb_partition(8)) {
        let f = Multifunction::new(steps);
        if f.apply(&mu) == f.apply(&nu) {
            prop_assert_eq!(mu, nu);
        }
    }

    #[test]
    fn power_repeats_each_step(steps in prop::collection::vec(arb_step(), 0..3), h in 0usize..3, mu in arb_partition(6)) {
        let f = Multifunction::new(steps.clone());
        let expanded: Vec<Step> = steps.iter().flat_map(|s| std::iter::repeat_n(s.clone(), h)).collect();
        prop_assert_eq!(f.power(h).apply(&mu), Multifunction::new(expanded).apply(&mu));
    }

    #[test]
    fn text_and_json_round_trip(l in arb_partition(20)) {
        prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l.clone());
        prop_assert_eq!(l.to_exponent_string().parse::<Partition>().unwrap(), l.clone());
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), l);
    }
}
