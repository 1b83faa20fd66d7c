//! Brute-force oracles shared by the integration suites. They use integer or
//! rational arithmetic directly and do not call the LP, the Gale code or the
//! orientation predicate under test.
#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tverberg_core::{Point, PointSet, Rational};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Determinant by Laplace expansion along the first row.
pub fn laplace_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return q(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = q(0);
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * laplace_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Orientation sign (-1, 0, 1) with the leading homogeneous coordinate.
pub fn oracle_orientation(points: &[&Point]) -> i8 {
    let m: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| std::iter::once(q(1)).chain(p.coords().iter().cloned()).collect())
        .collect();
    let det = laplace_det(&m);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

pub fn moment(alphas: &[Rational], d: usize) -> PointSet {
    let pts = alphas
        .iter()
        .map(|a| {
            let mut c = Vec::with_capacity(d);
            let mut p = q(1);
            for _ in 0..d {
                p = &p * a;
                c.push(p.clone());
            }
            Point::new(c)
        })
        .collect();
    PointSet::new(d, pts).unwrap()
}

pub fn moment_ints(alphas: impl IntoIterator<Item = i64>, d: usize) -> PointSet {
    let a: Vec<Rational> = alphas.into_iter().map(q).collect();
    moment(&a, d)
}

/// All `d`-subsets of moment points spanning a hyperplane with every other
/// point strictly on one side.
pub fn brute_facets(x: &PointSet) -> Vec<Vec<usize>> {
    let n = x.len();
    let d = x.dim();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut side = 0i8;
        let mut ok = true;
        for other in (0..n).filter(|i| mask & (1 << i) == 0) {
            let mut pts: Vec<&Point> = subset.iter().map(|&i| x.point(i)).collect();
            pts.push(x.point(other));
            let s = oracle_orientation(&pts);
            if s == 0 || (side != 0 && s != side) {
                ok = false;
                break;
            }
            side = s;
        }
        if ok {
            out.push(subset);
        }
    }
    out.sort();
    out
}

/// Common point of intervals `[min, max]` on the line.
pub fn intervals_meet(blocks: &[Vec<Rational>]) -> bool {
    if blocks.iter().any(Vec::is_empty) {
        return false;
    }
    let lower_ends = blocks.iter().map(|b| b.iter().min().unwrap());
    let upper_ends = blocks.iter().map(|b| b.iter().max().unwrap());
    lower_ends.max().unwrap() <= upper_ends.min().unwrap()
}

fn cross(o: (i128, i128), a: (i128, i128), b: (i128, i128)) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(p: (i128, i128), a: (i128, i128), b: (i128, i128)) -> bool {
    cross(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

fn segments_meet(a: (i128, i128), b: (i128, i128), c: (i128, i128), e: (i128, i128)) -> bool {
    let d1 = cross(c, e, a).signum();
    let d2 = cross(c, e, b).signum();
    let d3 = cross(a, b, c).signum();
    let d4 = cross(a, b, e).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    on_segment(a, c, e) || on_segment(b, c, e) || on_segment(c, a, b) || on_segment(e, a, b)
}

fn in_triangle(p: (i128, i128), a: (i128, i128), b: (i128, i128), c: (i128, i128)) -> bool {
    let s1 = cross(a, b, p).signum();
    let s2 = cross(b, c, p).signum();
    let s3 = cross(c, a, p).signum();
    let has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    let has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    !(has_neg && has_pos)
}

fn in_hull_2d(p: (i128, i128), set: &[(i128, i128)]) -> bool {
    let n = set.len();
    if set.contains(&p) {
        return true;
    }
    for i in 0..n {
        for j in i + 1..n {
            if on_segment(p, set[i], set[j]) {
                return true;
            }
            for k in j + 1..n {
                if cross(set[i], set[j], set[k]) != 0 && in_triangle(p, set[i], set[j], set[k]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Do the hulls of two integer point sets in the plane meet? A common
/// point exists iff a point of one lies in the other hull or two segments
/// cross.
pub fn planar_hulls_meet(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    let a: Vec<(i128, i128)> = a.iter().map(|&(x, y)| (x as i128, y as i128)).collect();
    let b: Vec<(i128, i128)> = b.iter().map(|&(x, y)| (x as i128, y as i128)).collect();
    if a.iter().any(|&p| in_hull_2d(p, &b)) || b.iter().any(|&p| in_hull_2d(p, &a)) {
        return true;
    }
    for i in 0..a.len() {
        for j in i..a.len() {
            for k in 0..b.len() {
                for l in k..b.len() {
                    if segments_meet(a[i], a[j], b[k], b[l]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Longest strictly monotone subsequence length by subset enumeration.
pub fn brute_monotone(values: &[i64]) -> usize {
    let n = values.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let seq: Vec<i64> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| values[i]).collect();
        let up = seq.windows(2).all(|w| w[0] < w[1]);
        let down = seq.windows(2).all(|w| w[0] > w[1]);
        if up || down {
            best = best.max(seq.len());
        }
    }
    best
}

/// Tolerance of a partition of points on the line by enumerating every
/// removal set as a bitmask.
pub fn brute_line_tolerance(values: &[Rational], block_of: &[usize], r: usize) -> i64 {
    let n = values.len();
    let mut best = n as i64;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as i64;
        if size >= best {
            continue;
        }
        let mut blocks = vec![Vec::new(); r];
        for i in (0..n).filter(|i| mask & (1 << i) == 0) {
            blocks[block_of[i]].push(values[i].clone());
        }
        if !intervals_meet(&blocks) {
            best = size;
        }
    }
    best - 1
}

pub fn random_rational(rng: &mut ChaCha8Rng, range: i64, max_den: i64) -> Rational {
    let den = rng.random_range(1..=max_den);
    let num = rng.random_range(-range * den..=range * den);
    Rational::new(num.into(), den.into())
}

/// Random point set in general position with small rational coordinates.
pub fn random_general_set(rng: &mut ChaCha8Rng, n: usize, d: usize) -> PointSet {
    loop {
        let pts = (0..n)
            .map(|_| Point::new((0..d).map(|_| random_rational(rng, 10, 4)).collect()))
            .collect();
        let x = PointSet::new(d, pts).unwrap();
        if x.is_general_position() {
            return x;
        }
    }
}

/// Strictly increasing random parameters.
pub fn random_alphas(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    loop {
        let mut a: Vec<Rational> = (0..n).map(|_| random_rational(rng, 8, 5)).collect();
        a.sort();
        if a.windows(2).all(|w| w[0] < w[1]) {
            return a;
        }
    }
}
