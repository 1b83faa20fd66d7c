mod common;

use common::{intervals_meet, planar_hulls_meet, q, random_rational, rng};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use tverberg_core::{
    alternating_partition, hull_membership, hulls_common_point, tukey_depth, verify_centerpoint,
    Certificate, Point, PointSet, Rational,
};

fn random_blocks(rng: &mut rand_chacha::ChaCha8Rng, d: usize, r: usize, max_size: usize) -> Vec<Vec<Point>> {
    (0..r)
        .map(|_| {
            let size = rng.random_range(1..=max_size);
            (0..size)
                .map(|_| Point::new((0..d).map(|_| random_rational(rng, 6, 3)).collect()))
                .collect()
        })
        .collect()
}

#[test]
fn every_outcome_replays() {
    let mut rng = rng(2024);
    for _ in 0..1500 {
        let d = rng.random_range(1..=3);
        let r = rng.random_range(1..=3);
        let blocks = random_blocks(&mut rng, d, r, 4);
        let out = hulls_common_point(&blocks).unwrap();
        out.verify(&blocks).unwrap();
        if d == 1 {
            let vals: Vec<Vec<Rational>> = blocks
                .iter()
                .map(|b| b.iter().map(|p| p.coords()[0].clone()).collect())
                .collect();
            assert_eq!(out.is_feasible(), intervals_meet(&vals));
        }
    }
}

#[test]
fn alternating_partitions_on_the_line_match_intervals() {
    let mut rng = rng(7);
    for n in 1..=12 {
        for r in 1..=4.min(n) {
            let p = alternating_partition(n, r).unwrap();
            for trial in 0..6 {
                let values: Vec<Rational> = if trial == 0 {
                    (1..=n as i64).map(q).collect()
                } else {
                    (0..n).map(|_| random_rational(&mut rng, 20, 2)).collect()
                };
                let x = PointSet::new(1, values.iter().map(|v| Point::new(vec![v.clone()])).collect()).unwrap();
                let blocks = p.block_points(&x);
                let out = hulls_common_point(&blocks).unwrap();
                out.verify(&blocks).unwrap();
                let vals: Vec<Vec<Rational>> = p
                    .blocks()
                    .iter()
                    .map(|b| b.iter().map(|&i| values[i].clone()).collect())
                    .collect();
                assert_eq!(out.is_feasible(), intervals_meet(&vals), "n={n} r={r} {values:?}");
            }
        }
    }
}

#[test]
fn planar_pairs_match_segment_oracle() {
    let mut rng = rng(99);
    for _ in 0..600 {
        let side = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<(i64, i64)> {
            let k = rng.random_range(1..=4);
            (0..k).map(|_| (rng.random_range(-5..=5), rng.random_range(-5..=5))).collect()
        };
        let a = side(&mut rng);
        let b = side(&mut rng);
        let to_pts = |s: &[(i64, i64)]| -> Vec<Point> { s.iter().map(|&(x, y)| Point::from_ints(&[x, y])).collect() };
        let blocks = vec![to_pts(&a), to_pts(&b)];
        let out = hulls_common_point(&blocks).unwrap();
        out.verify(&blocks).unwrap();
        assert_eq!(out.is_feasible(), planar_hulls_meet(&a, &b), "{a:?} {b:?}");
        if let Some(c) = out.certificate() {
            assert!(matches!(c, Certificate::Separation { .. }));
        }
    }
}

#[test]
fn adding_points_never_breaks_feasibility() {
    let mut rng = rng(41);
    let mut grown = 0;
    while grown < 300 {
        let d = rng.random_range(1..=3);
        let r = rng.random_range(2..=3);
        let mut blocks = random_blocks(&mut rng, d, r, 3);
        if !hulls_common_point(&blocks).unwrap().is_feasible() {
            continue;
        }
        let b = rng.random_range(0..r);
        blocks[b].push(Point::new((0..d).map(|_| random_rational(&mut rng, 6, 3)).collect()));
        assert!(hulls_common_point(&blocks).unwrap().is_feasible());
        grown += 1;
    }
}

proptest! {
    #[test]
    fn membership_evidence_is_sound(
        d in 1usize..=3,
        raw in prop::collection::vec(prop::collection::vec(-8i64..=8, 3), 1..6),
        p in prop::collection::vec(-8i64..=8, 3),
    ) {
        let s: Vec<Point> = raw.iter().map(|c| Point::from_ints(&c[..d])).collect();
        let p = Point::from_ints(&p[..d]);
        let out = hull_membership(&p, &s).unwrap();
        prop_assert!(out.verify(&[vec![p.clone()], s.clone()]).is_ok());
        if let Some(w) = out.witness() {
            prop_assert_eq!(&w.point, &p);
        }
    }
}

/// Depth in the plane by sampling one direction on each side of every
/// critical direction.
fn planar_depth_oracle(p: &Point, x: &PointSet) -> usize {
    let ys: Vec<(Rational, Rational)> = x
        .points()
        .iter()
        .map(|v| (&v.coords()[0] - &p.coords()[0], &v.coords()[1] - &p.coords()[1]))
        .collect();
    let count = |u: &(Rational, Rational)| {
        ys.iter()
            .filter(|y| !(&u.0 * &y.0 + &u.1 * &y.1).is_negative())
            .count()
    };
    let delta = Rational::new(1.into(), 1_000_000.into());
    let mut best = x.len();
    for y in ys.iter().filter(|y| !(y.0.is_zero() && y.1.is_zero())) {
        for sign in [q(1), q(-1)] {
            let perp = (-&y.1 * &sign, &y.0 * &sign);
            for tilt in [delta.clone(), -delta.clone()] {
                let u = (&perp.0 + &tilt * &y.0, &perp.1 + &tilt * &y.1);
                best = best.min(count(&u));
            }
        }
    }
    best
}

#[test]
fn planar_depth_matches_direction_oracle() {
    let mut rng = rng(8);
    for _ in 0..80 {
        let n = rng.random_range(3..=8);
        let x = common::random_general_set(&mut rng, n, 2);
        let p = if rng.random_bool(0.3) {
            x.point(rng.random_range(0..n)).clone()
        } else {
            Point::new(vec![random_rational(&mut rng, 6, 2), random_rational(&mut rng, 6, 2)])
        };
        let rep = tukey_depth(&p, &x).unwrap();
        assert_eq!(rep.depth, planar_depth_oracle(&p, &x), "p={p} x={x:?}");
    }
}

#[test]
fn depth_witness_halfspace_is_exact() {
    let mut rng = rng(19);
    for _ in 0..60 {
        let d = rng.random_range(1..=3);
        let n = rng.random_range(d + 1..=8);
        let x = common::random_general_set(&mut rng, n, d);
        let p = Point::new((0..d).map(|_| random_rational(&mut rng, 4, 2)).collect());
        let rep = tukey_depth(&p, &x).unwrap();
        let h = &rep.witness_halfspace;
        assert!(!h.evaluate(&p).unwrap().is_negative());
        let inside = x.points().iter().filter(|v| !h.evaluate(v).unwrap().is_negative()).count();
        assert_eq!(inside, rep.depth);
        // no other direction does better
        for _ in 0..20 {
            let u: Vec<Rational> = (0..d).map(|_| random_rational(&mut rng, 5, 3)).collect();
            if u.iter().all(Zero::is_zero) {
                continue;
            }
            let dot = |v: &Point| -> Rational {
                u.iter().zip(v.coords()).zip(p.coords()).map(|((a, b), c)| a * (b - c)).sum()
            };
            let c = x.points().iter().filter(|v| !dot(v).is_negative()).count();
            assert!(c >= rep.depth);
        }
    }
}

#[test]
fn centerpoint_boundary_cases() {
    let line = PointSet::new(1, (1..=5).map(|i| Point::from_ints(&[i])).collect()).unwrap();
    assert_eq!(tukey_depth(&Point::from_ints(&[3]), &line).unwrap().depth, 3);
    assert!(verify_centerpoint(&Point::from_ints(&[3]), &line).unwrap());
    assert!(!verify_centerpoint(&Point::from_ints(&[1]), &line).unwrap());
    let tri = PointSet::new(
        2,
        vec![Point::from_ints(&[0, 0]), Point::from_ints(&[3, 0]), Point::from_ints(&[0, 3])],
    )
    .unwrap();
    // ceil(3/3) = 1 is attained exactly at a vertex
    assert!(verify_centerpoint(&Point::from_ints(&[0, 0]), &tri).unwrap());
    assert!(!verify_centerpoint(&Point::from_ints(&[5, 5]), &tri).unwrap());
}
