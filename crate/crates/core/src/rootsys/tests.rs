use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::Rational64;
use proptest::prelude::*;

use super::*;

fn sys(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn root(c: &[i32]) -> Root {
    Root::new(c.to_vec())
}

/// Oracle: the root set as the Weyl orbit of the simple roots, computed with
/// raw Cartan-matrix reflections and no root strings.
fn weyl_orbit_roots(rs: &RootSystem) -> BTreeSet<Vec<i32>> {
    let n = rs.rank();
    let a = rs.cartan();
    let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i32>> = (0..n).map(|i| Root::simple(n, i).0).collect();
    while let Some(v) = queue.pop_front() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for i in 0..n {
            let c: i32 = (0..n).map(|j| v[j] * a[j][i]).sum();
            let mut w = v.clone();
            w[i] -= c;
            if !seen.contains(&w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

fn textbook_positive_count(spec: RootSystemSpec) -> usize {
    let n = spec.rank;
    match (spec.family, n) {
        (Family::A, _) => n * (n + 1) / 2,
        (Family::B | Family::C, _) => n * n,
        (Family::D, _) => n * (n - 1),
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, 8) => 120,
        (Family::F, 4) => 24,
        (Family::G, 2) => 6,
        _ => unreachable!(),
    }
}

#[test]
fn rank_bounds_are_enforced() {
    assert!(RootSystemSpec::new(Family::A, 0).is_err());
    assert!(RootSystemSpec::new(Family::B, 1).is_err());
    assert!(RootSystemSpec::new(Family::D, 2).is_err());
    assert!(RootSystemSpec::new(Family::E, 5).is_err());
    assert!(RootSystemSpec::new(Family::E, 9).is_err());
    assert!(RootSystemSpec::new(Family::F, 3).is_err());
    assert!(RootSystemSpec::new(Family::G, 3).is_err());
    assert!(matches!(
        RootSystem::build(Family::C, 1),
        Err(Error::RankOutOfBounds {
            family: 'C',
            rank: 1,
            ..
        })
    ));
    assert_eq!("e8".parse::<RootSystemSpec>().unwrap().to_string(), "E8");
    assert!("X3".parse::<RootSystemSpec>().is_err());
}

#[test]
fn positive_counts_match_weyl_orbit_and_textbook() {
    for spec in RootSystemSpec::catalog(8) {
        let rs = RootSystem::new(spec);
        assert_eq!(rs.num_positive(), textbook_positive_count(spec), "{spec}");
        let orbit = weyl_orbit_roots(&rs);
        let generated: BTreeSet<Vec<i32>> = rs.roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(orbit, generated, "{spec}");
    }
}

#[test]
fn a2_example() {
    let rs = sys("A2");
    let pos: Vec<_> = rs.positive_roots().to_vec();
    assert_eq!(pos, vec![root(&[1, 0]), root(&[0, 1]), root(&[1, 1])]);
    assert_eq!(rs.theta_root(), &root(&[1, 1]));
}

#[test]
fn highest_roots() {
    for n in 1..=7 {
        let rs = RootSystem::build(Family::A, n).unwrap();
        assert_eq!(rs.theta_root().coeffs(), vec![1; n].as_slice());
        assert_eq!(rs.height(rs.theta()), n as i32);
    }
    assert_eq!(sys("C3").theta_root(), &root(&[2, 2, 1]));
    let b3 = sys("B3");
    assert_eq!(b3.theta_root(), &root(&[1, 2, 2]));
    assert_eq!(b3.theta_root().d(1), 2);
    assert_eq!(sys("F4").theta_root(), &root(&[2, 3, 4, 2]));
    assert_eq!(sys("G2").theta_root(), &root(&[2, 3]));
    assert_eq!(sys("E8").theta_root(), &root(&[2, 3, 4, 6, 5, 4, 3, 2]));
}

#[test]
fn theta_is_unique_maximum() {
    for spec in RootSystemSpec::catalog(8) {
        let rs = RootSystem::new(spec);
        let maximal: Vec<RootId> = rs
            .positive_ids()
            .filter(|&a| {
                rs.positive_ids()
                    .all(|b| b == a || !rs.root(a).le(rs.root(b)))
            })
            .collect();
        assert_eq!(maximal, vec![rs.theta()], "{spec}");
        assert!(rs.positive_ids().all(|a| rs.root(a).le(rs.theta_root())));
    }
}

#[test]
fn simple_roots_have_height_one() {
    let rs = sys("E6");
    for i in 0..6 {
        assert_eq!(rs.height(rs.simple(i)), 1);
    }
}

#[test]
fn pairing_examples() {
    let rs = sys("A2");
    let a1 = Weight::from(&root(&[1, 0]));
    let a2 = Weight::from(&root(&[0, 1]));
    assert_eq!(rs.pairing(&a1, &a1).unwrap(), Rational64::from_integer(2));
    assert_eq!(rs.pairing(&a1, &a2).unwrap(), Rational64::from_integer(-1));
    assert!(matches!(
        rs.pairing(&a1, &Weight::zero(3)),
        Err(Error::DimensionMismatch {
            expected: 2,
            got: 3
        })
    ));
}

#[test]
fn theta_is_long_and_dominant() {
    for spec in RootSystemSpec::catalog(6) {
        let rs = RootSystem::new(spec);
        let t = rs.theta();
        assert_eq!(rs.pairing_ids(t, t), Rational64::from_integer(2), "{spec}");
        for a in rs.positive_ids() {
            assert!(rs.pairing_scaled(t, a) >= 0, "{spec}");
        }
    }
}

#[test]
fn short_root_lengths() {
    let half = Rational64::new(1, 1);
    let b2 = sys("B2");
    assert_eq!(b2.pairing_ids(b2.simple(1), b2.simple(1)), half);
    let g2 = sys("G2");
    assert_eq!(
        g2.pairing_ids(g2.simple(1), g2.simple(1)),
        Rational64::new(2, 3)
    );
    assert_eq!(
        g2.symmetrizer(),
        vec![Rational64::from(1), Rational64::new(1, 3)]
    );
    let c3 = sys("C3");
    assert!(c3.is_long(c3.simple(2)));
    assert!(!c3.is_long(c3.simple(0)));
}

#[test]
fn add_roots_examples() {
    let a2 = sys("A2");
    assert_eq!(
        a2.add_roots(&root(&[1, 0]), &root(&[0, 1])),
        Some(root(&[1, 1]))
    );
    assert_eq!(a2.add_roots(&root(&[1, 0]), &root(&[1, 0])), None);
    let g2 = sys("G2");
    assert_eq!(
        g2.add_roots(&root(&[0, 1]), &root(&[1, 2])),
        Some(root(&[1, 3]))
    );
    assert!(g2.is_root(&[-2, -3]));
    assert!(!g2.is_root(&[1, -1]));
}

#[test]
fn closure_soundness() {
    for spec in RootSystemSpec::catalog(6) {
        let rs = RootSystem::new(spec);
        let set: HashSet<&Root> = rs.roots().iter().collect();
        for a in rs.all_ids() {
            for b in rs.all_ids() {
                let s = rs.root(a) + rs.root(b);
                assert_eq!(rs.add(a, b).is_some(), set.contains(&s));
            }
            for i in 0..rs.rank() {
                let r = rs.reflect(a, i);
                assert!(set.contains(rs.root(r)));
                assert_eq!(rs.reflect(r, i), a);
            }
        }
    }
}

#[test]
fn dominance_pairing_positivity() {
    for spec in RootSystemSpec::catalog(4) {
        let rs = RootSystem::new(spec);
        let dominant: Vec<RootId> = rs
            .all_ids()
            .filter(|&m| rs.is_dominant(&Weight::from(rs.root(m))))
            .collect();
        assert!(dominant.contains(&rs.theta()));
        for &mu in &dominant {
            for lam in rs.all_ids() {
                if rs.root(lam).le(rs.root(mu)) {
                    assert!(rs.pairing_scaled(mu, mu) >= rs.pairing_scaled(mu, lam));
                }
            }
        }
    }
}

#[test]
fn epsilon_examples() {
    let a3 = sys("A3");
    assert_eq!(a3.to_epsilon(&root(&[1, 1, 0])).unwrap(), vec![1, 0, -1, 0]);
    let b3 = sys("B3");
    assert_eq!(b3.to_epsilon(&root(&[0, 0, 1])).unwrap(), vec![0, 0, 1]);
    let c3 = sys("C3");
    assert_eq!(c3.to_epsilon(c3.theta_root()).unwrap(), vec![2, 0, 0]);
    assert_eq!(format_epsilon(&[2i64, 0, 0]), "2ε1");
    assert_eq!(format_epsilon(&[1i64, 0, -1, 0]), "ε1-ε3");
    assert!(matches!(
        sys("G2").to_epsilon(&root(&[1, 0])),
        Err(Error::Unsupported(_))
    ));
    assert!(b3.from_epsilon(&[1, 1, 1]).is_err());
}

#[test]
fn epsilon_round_trip() {
    for spec in RootSystemSpec::catalog(6) {
        if !spec.family.is_classical() {
            continue;
        }
        let rs = RootSystem::new(spec);
        for r in rs.roots() {
            let v = rs.to_epsilon(r).unwrap();
            assert_eq!(&rs.from_epsilon(&v).unwrap(), r, "{spec}");
        }
    }
}

/// Oracle: brute-force Weyl orbit of a weight.
fn weight_orbit(rs: &RootSystem, w: &Weight) -> Vec<Weight> {
    let mut seen = vec![w.clone()];
    let mut k = 0;
    while k < seen.len() {
        for i in 0..rs.rank() {
            let r = rs.reflect_weight(&seen[k], i);
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        k += 1;
    }
    seen
}

#[test]
fn dominant_representative_examples() {
    let rs = sys("A2");
    let w1 = rs.fundamental_weight(0);
    let (d, word) = rs.dominant_representative(&w1).unwrap();
    assert_eq!((d, word), (w1.clone(), vec![]));

    let zero = Weight::zero(2);
    assert_eq!(rs.dominant_representative(&zero).unwrap(), (zero, vec![]));

    let minus = w1.scale(Rational64::from_integer(-1));
    let (d, word) = rs.dominant_representative(&minus).unwrap();
    let orbit = weight_orbit(&rs, &minus);
    assert!(orbit.contains(&d));
    assert!(rs.is_dominant(&d));
    assert_eq!(rs.apply_word(&word, &minus), d);
    let dominant_in_orbit: Vec<_> = orbit.iter().filter(|w| rs.is_dominant(w)).collect();
    assert_eq!(dominant_in_orbit, vec![&d]);
    assert_eq!(d, rs.fundamental_weight(1));
}

#[test]
fn fundamental_weights_are_dual() {
    for spec in RootSystemSpec::catalog(8) {
        let rs = RootSystem::new(spec);
        for i in 0..rs.rank() {
            let w = rs.fundamental_weight(i);
            for j in 0..rs.rank() {
                let expect = if i == j { 1 } else { 0 };
                assert_eq!(rs.coroot_pairing(&w, j), Rational64::from(expect));
            }
        }
    }
    let f4 = sys("F4");
    assert_eq!(f4.fundamental_weight(3), Weight::from_ints(&[1, 2, 3, 2]));
}

proptest! {
    #[test]
    fn pairing_is_symmetric_bilinear(
        x in prop::collection::vec(-5i64..5, 4),
        y in prop::collection::vec(-5i64..5, 4),
        z in prop::collection::vec(-5i64..5, 4),
        c in -4i64..4,
    ) {
        for s in ["B4", "C4", "F4", "D4", "A4"] {
            let rs = sys(s);
            let (x, y, z) = (Weight::from_ints(&x), Weight::from_ints(&y), Weight::from_ints(&z));
            prop_assert_eq!(rs.pairing(&x, &y).unwrap(), rs.pairing(&y, &x).unwrap());
            let lhs = rs.pairing(&x.scale(Rational64::from(c)).add(&y), &z).unwrap();
            let rhs = rs.pairing(&x, &z).unwrap() * c + rs.pairing(&y, &z).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reflections_preserve_the_form(i in 0usize..4, a in 0usize..48, b in 0usize..48) {
        let rs = sys("F4");
        let (ra, rb) = (rs.reflect(a, i), rs.reflect(b, i));
        prop_assert_eq!(rs.pairing_scaled(ra, rb), rs.pairing_scaled(a, b));
    }
}
