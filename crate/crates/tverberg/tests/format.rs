use proptest::prelude::*;
use tverberg::{emit_pointset, parse_pointset, parse_rational};
use tverberg_core::{Point, PointSet, Rational};

const FIGURE2: &str = include_str!("../data/figure2.otps");

#[test]
fn sixteen_point_file_round_trips_byte_for_byte() {
    let x = parse_pointset(FIGURE2).unwrap();
    assert_eq!((x.dim(), x.len()), (3, 16));
    assert_eq!(emit_pointset(&x), FIGURE2);
}

#[test]
fn sixteen_point_file_matches_the_construction() {
    let (c, _) = tverberg_core::figure2_counterexample().unwrap();
    assert_eq!(parse_pointset(FIGURE2).unwrap(), c.points().unwrap());
}

#[test]
fn small_examples() {
    let x = parse_pointset("otps 1 3\n1\n2\n3\n").unwrap();
    assert_eq!(x.points()[2], Point::from_ints(&[3]));
    let y = parse_pointset("otps 2 1\n1/2 -3/4\n").unwrap();
    assert_eq!(
        y.points()[0],
        Point::new(vec![Rational::new(1.into(), 2.into()), Rational::new((-3).into(), 4.into())])
    );
}

#[test]
fn non_canonical_input_becomes_canonical() {
    let x = parse_pointset("  otps   2 2 \n# c\n2/4   -6/3\n-0 10/5 # tail\n").unwrap();
    assert_eq!(emit_pointset(&x), "otps 2 2\n1/2 -2\n0 2\n");
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..50).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(d in 1usize..5, rows in prop::collection::vec(prop::collection::vec(rational(), 4), 0..12)) {
        let pts: Vec<Point> = rows.into_iter().map(|r| Point::new(r[..d].to_vec())).collect();
        let x = PointSet::new(d, pts).unwrap();
        let text = emit_pointset(&x);
        let back = parse_pointset(&text).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(emit_pointset(&back), text);
    }

    #[test]
    fn rationals_print_and_parse(r in rational()) {
        prop_assert_eq!(parse_rational(&r.to_string()), Some(r));
    }
}
