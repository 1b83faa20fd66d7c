//! Certified decisions about convex hulls.
//!
//! [`hulls_common_point`] decides whether `conv(A_1) ∩ ... ∩ conv(A_r)` is
//! nonempty by an exact phase-one LP over the per-block convex coefficients.
//! Every answer carries evidence that [`FeasibilityOutcome::verify`] replays
//! with nothing but exact arithmetic: a common point with its convex
//! combinations, or a separation/Farkas certificate.
//!
//! The hull of an empty block is empty, so a partition with an empty block
//! never has a common point.

use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::geometry::{primitive_scale, Hyperplane, Point, PointSet, Rational, Sign};
use crate::linalg::{dot, independent_subset, null_space};
use crate::lp::{phase_one, Phase1};

/// A common point together with, for each block, convex coefficients (one per
/// block point, in block order) reproducing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Point,
    pub coefficients: Vec<Vec<Rational>>,
}

impl Witness {
    /// `(block, position)` pairs carrying a positive coefficient.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.coefficients.iter().enumerate().flat_map(|(b, cs)| {
            cs.iter()
                .enumerate()
                .filter(|(_, c)| c.is_positive())
                .map(move |(i, _)| (b, i))
        })
    }
}

/// One linear functional of a Farkas certificate: `normal . x <= bound` on
/// every point of its block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub normal: Vec<Rational>,
    pub bound: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The block has no points, so its hull is empty.
    EmptyBlock { block: usize },
    /// Every point of `block` lies strictly on `side` of the hyperplane and
    /// every point of every other block strictly on the opposite side.
    Separation {
        hyperplane: Hyperplane,
        block: usize,
        side: Sign,
    },
    /// One functional per block with `normal_i . p <= bound_i` on block `i`,
    /// normals summing to zero and bounds summing to a negative number. A
    /// common point `x` would give `0 = sum normal_i . x <= sum bound_i < 0`.
    Farkas { functionals: Vec<Functional> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityOutcome {
    Feasible(Witness),
    Infeasible(Certificate),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("evidence has {found} blocks, instance has {expected}")]
    BlockCount { expected: usize, found: usize },
    #[error("block {block}: evidence does not match the block size or dimension")]
    Shape { block: usize },
    #[error("block {block}: negative convex coefficient")]
    NegativeCoefficient { block: usize },
    #[error("block {block}: coefficients do not sum to one")]
    NotConvex { block: usize },
    #[error("block {block}: convex combination differs from the witness point")]
    WrongCombination { block: usize },
    #[error("block {block} is not empty")]
    BlockNotEmpty { block: usize },
    #[error("point {index} of block {block} violates the certificate")]
    Violated { block: usize, index: usize },
    #[error("functional normals do not sum to zero")]
    NormalsDoNotCancel,
    #[error("functional bounds do not sum to a negative value")]
    BoundsNotNegative,
    #[error("configuration is not order-type homogeneous")]
    NotHomogeneous,
    #[error("evidence shows a common point, not a counterexample")]
    NotACounterexample,
}

impl FeasibilityOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityOutcome::Feasible(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            FeasibilityOutcome::Feasible(w) => Some(w),
            FeasibilityOutcome::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            FeasibilityOutcome::Feasible(_) => None,
            FeasibilityOutcome::Infeasible(c) => Some(c),
        }
    }

    /// Replays the evidence against `blocks` with exact arithmetic only.
    pub fn verify(&self, blocks: &[Vec<Point>]) -> Result<(), ReplayError> {
        match self {
            FeasibilityOutcome::Feasible(w) => verify_witness(w, blocks),
            FeasibilityOutcome::Infeasible(c) => c.verify(blocks),
        }
    }
}

fn verify_witness(w: &Witness, blocks: &[Vec<Point>]) -> Result<(), ReplayError> {
    if w.coefficients.len() != blocks.len() {
        return Err(ReplayError::BlockCount {
            expected: blocks.len(),
            found: w.coefficients.len(),
        });
    }
    let dim = w.point.dim();
    for (b, (coeffs, pts)) in w.coefficients.iter().zip(blocks).enumerate() {
        if coeffs.len() != pts.len() || pts.iter().any(|p| p.dim() != dim) {
            return Err(ReplayError::Shape { block: b });
        }
        if coeffs.iter().any(Signed::is_negative) {
            return Err(ReplayError::NegativeCoefficient { block: b });
        }
        if coeffs.iter().sum::<Rational>() != Rational::one() {
            return Err(ReplayError::NotConvex { block: b });
        }
        let mut combo = vec![Rational::zero(); dim];
        for (c, p) in coeffs.iter().zip(pts) {
            for (acc, x) in combo.iter_mut().zip(p.coords()) {
                *acc += c * x;
            }
        }
        if combo.as_slice() != w.point.coords() {
            return Err(ReplayError::WrongCombination { block: b });
        }
    }
    Ok(())
}

impl Certificate {
    pub fn verify(&self, blocks: &[Vec<Point>]) -> Result<(), ReplayError> {
        match self {
            Certificate::EmptyBlock { block } => match blocks.get(*block) {
                Some(pts) if pts.is_empty() => Ok(()),
                Some(_) => Err(ReplayError::BlockNotEmpty { block: *block }),
                None => Err(ReplayError::BlockCount {
                    expected: blocks.len(),
                    found: block + 1,
                }),
            },
            Certificate::Separation {
                hyperplane,
                block,
                side,
            } => {
                if *block >= blocks.len() || *side == Sign::Zero {
                    return Err(ReplayError::BlockCount {
                        expected: blocks.len(),
                        found: block + 1,
                    });
                }
                for (b, pts) in blocks.iter().enumerate() {
                    let want = if b == *block { *side } else { side.flip() };
                    for (i, p) in pts.iter().enumerate() {
                        let got = hyperplane
                            .evaluate(p)
                            .map_err(|_| ReplayError::Shape { block: b })?;
                        if Sign::of(&got) != want {
                            return Err(ReplayError::Violated { block: b, index: i });
                        }
                    }
                }
                Ok(())
            }
            Certificate::Farkas { functionals } => {
                if functionals.len() != blocks.len() {
                    return Err(ReplayError::BlockCount {
                        expected: blocks.len(),
                        found: functionals.len(),
                    });
                }
                let dim = functionals.first().map_or(0, |f| f.normal.len());
                let mut total = vec![Rational::zero(); dim];
                let mut bound_sum = Rational::zero();
                for (b, (f, pts)) in functionals.iter().zip(blocks).enumerate() {
                    if f.normal.len() != dim {
                        return Err(ReplayError::Shape { block: b });
                    }
                    for (t, c) in total.iter_mut().zip(&f.normal) {
                        *t += c;
                    }
                    bound_sum += &f.bound;
                    for (i, p) in pts.iter().enumerate() {
                        if p.dim() != dim {
                            return Err(ReplayError::Shape { block: b });
                        }
                        if dot(&f.normal, p.coords()) > f.bound {
                            return Err(ReplayError::Violated { block: b, index: i });
                        }
                    }
                }
                if total.iter().any(|c| !c.is_zero()) {
                    return Err(ReplayError::NormalsDoNotCancel);
                }
                if !bound_sum.is_negative() {
                    return Err(ReplayError::BoundsNotNegative);
                }
                Ok(())
            }
        }
    }
}

fn common_dim(blocks: &[Vec<Point>]) -> Result<Option<usize>> {
    let mut dim = None;
    for p in blocks.iter().flatten() {
        match dim {
            None => dim = Some(p.dim()),
            Some(d) if d != p.dim() => {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: p.dim(),
                })
            }
            Some(_) => {}
        }
    }
    Ok(dim)
}

/// Decides whether the convex hulls of the blocks share a point.
///
/// For two blocks an infeasible answer is a strictly separating hyperplane
/// (block 0's side recorded); for more blocks it is a Farkas certificate,
/// scaled to coprime integers.
pub fn hulls_common_point(blocks: &[Vec<Point>]) -> Result<FeasibilityOutcome> {
    if blocks.is_empty() {
        return Err(invalid("need at least one block"));
    }
    let dim = common_dim(blocks)?;
    if let Some(block) = blocks.iter().position(Vec::is_empty) {
        return Ok(FeasibilityOutcome::Infeasible(Certificate::EmptyBlock {
            block,
        }));
    }
    let dim = dim.expect("nonempty blocks");
    if dim == 0 {
        return Err(invalid("points must have positive dimension"));
    }
    let r = blocks.len();
    let n: usize = blocks.iter().map(Vec::len).sum();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, b| {
            let start = *acc;
            *acc += b.len();
            Some(start)
        })
        .collect();

    // Rows: r convexity rows, then for each block i >= 1 the d coordinates of
    // (combination of block 0) - (combination of block i) = 0.
    let rows = r + (r - 1) * dim;
    let mut a = vec![vec![Rational::zero(); n]; rows];
    let mut b = vec![Rational::zero(); rows];
    for (i, blk) in blocks.iter().enumerate() {
        b[i] = Rational::one();
        for j in 0..blk.len() {
            a[i][offsets[i] + j] = Rational::one();
        }
    }
    for i in 1..r {
        for k in 0..dim {
            let row = r + (i - 1) * dim + k;
            for (j, p) in blocks[0].iter().enumerate() {
                a[row][offsets[0] + j] = p.coords()[k].clone();
            }
            for (j, p) in blocks[i].iter().enumerate() {
                a[row][offsets[i] + j] = -p.coords()[k].clone();
            }
        }
    }

    match phase_one(&a, &b) {
        Phase1::Feasible(x) => {
            let coefficients: Vec<Vec<Rational>> = blocks
                .iter()
                .zip(&offsets)
                .map(|(blk, &o)| x[o..o + blk.len()].to_vec())
                .collect();
            let mut point = vec![Rational::zero(); dim];
            for (c, p) in coefficients[0].iter().zip(&blocks[0]) {
                for (acc, v) in point.iter_mut().zip(p.coords()) {
                    *acc += c * v;
                }
            }
            Ok(FeasibilityOutcome::Feasible(Witness {
                point: Point::new(point),
                coefficients,
            }))
        }
        Phase1::Infeasible(y) => {
            let u = &y[..r];
            let v = |i: usize| &y[r + (i - 1) * dim..r + i * dim];
            let mut functionals = Vec::with_capacity(r);
            let mut w0 = vec![Rational::zero(); dim];
            for i in 1..r {
                for (acc, c) in w0.iter_mut().zip(v(i)) {
                    *acc += c;
                }
            }
            functionals.push(Functional {
                normal: w0,
                bound: -u[0].clone(),
            });
            for i in 1..r {
                functionals.push(Functional {
                    normal: v(i).iter().map(|c| -c).collect(),
                    bound: -u[i].clone(),
                });
            }
            let cert = if r == 2 {
                separation_from(&functionals[0].normal, blocks)
            } else {
                normalize_farkas(functionals)
            };
            Ok(FeasibilityOutcome::Infeasible(cert))
        }
    }
}

fn separation_from(normal: &[Rational], blocks: &[Vec<Point>]) -> Certificate {
    let hi = blocks[0]
        .iter()
        .map(|p| dot(normal, p.coords()))
        .max()
        .expect("nonempty block");
    let lo = blocks[1]
        .iter()
        .map(|p| dot(normal, p.coords()))
        .min()
        .expect("nonempty block");
    debug_assert!(hi < lo);
    let offset = (hi + lo) / Rational::from_integer(2.into());
    let h = Hyperplane::new(normal.to_vec(), offset).expect("farkas normal is nonzero");
    let (hyperplane, flipped) = h.normalized();
    Certificate::Separation {
        hyperplane,
        block: 0,
        side: if flipped {
            Sign::Positive
        } else {
            Sign::Negative
        },
    }
}

fn normalize_farkas(functionals: Vec<Functional>) -> Certificate {
    let all: Vec<Rational> = functionals
        .iter()
        .flat_map(|f| f.normal.iter().chain(core::iter::once(&f.bound)).cloned())
        .collect();
    let s = primitive_scale(&all);
    Certificate::Farkas {
        functionals: functionals
            .into_iter()
            .map(|f| Functional {
                normal: f.normal.iter().map(|c| c * &s).collect(),
                bound: f.bound * &s,
            })
            .collect(),
    }
}

/// Is `p` in `conv(points)`? Feasible answers carry `[[1], coefficients]`;
/// infeasible ones a hyperplane with `p` on the recorded side of block 0.
pub fn hull_membership(p: &Point, points: &[Point]) -> Result<FeasibilityOutcome> {
    hulls_common_point(&[vec![p.clone()], points.to_vec()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub point: Point,
    pub depth: usize,
    /// The closed nonnegative side (`normal . x >= offset`) contains the
    /// point and exactly `depth` points of the set.
    pub witness_halfspace: Hyperplane,
}

/// Tukey depth of `p` in `x`: the fewest points of `x` in a closed halfspace
/// containing `p`. Requires `x` in general position.
pub fn tukey_depth(p: &Point, x: &PointSet) -> Result<DepthReport> {
    let dim = x.dim();
    if p.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    if !x.is_general_position() {
        return Err(Error::Degenerate(
            "tukey depth needs the point set in general position".into(),
        ));
    }
    let coincident = x.points().iter().filter(|q| *q == p).count();
    let diffs: Vec<Vec<Rational>> = x
        .points()
        .iter()
        .filter(|q| *q != p)
        .map(|q| q.sub(p))
        .collect();
    let (open, direction) = min_open_count(&diffs, dim);
    let normal = if direction.iter().all(Zero::is_zero) {
        let mut e = vec![Rational::zero(); dim];
        e[0] = Rational::one();
        e
    } else {
        direction
    };
    let offset = dot(&normal, p.coords());
    Ok(DepthReport {
        point: p.clone(),
        depth: coincident + open,
        witness_halfspace: Hyperplane::new(normal, offset).expect("nonzero normal"),
    })
}

/// Minimum of `|{y : g . y > 0}|` over directions `g` with `g . y != 0` for
/// all `y`, together with a direction attaining it.
///
/// Directions live in the cells of the central arrangement `{g . y = 0}`.
/// Every cell has an extreme ray, cut out by `k - 1` independent vectors
/// (`k` the rank of the family); near such a ray the count is the number of
/// vectors strictly positive on it plus the same minimum taken over the
/// vectors the ray annihilates.
fn min_open_count(vectors: &[Vec<Rational>], dim: usize) -> (usize, Vec<Rational>) {
    if vectors.is_empty() {
        return (0, vec![Rational::zero(); dim]);
    }
    let basis: Vec<&Vec<Rational>> = independent_subset(vectors, dim)
        .into_iter()
        .map(|i| &vectors[i])
        .collect();
    let k = basis.len();
    let mut best: Option<(usize, Vec<Rational>)> = None;
    for chosen in (0..vectors.len()).combinations(k - 1) {
        let m: Vec<Vec<Rational>> = chosen
            .iter()
            .map(|&s| basis.iter().map(|b| dot(&vectors[s], b)).collect())
            .collect();
        let ns = null_space(&m, k);
        if ns.len() != 1 {
            continue;
        }
        let mut ray = vec![Rational::zero(); dim];
        for (a, b) in ns[0].iter().zip(&basis) {
            for (r, c) in ray.iter_mut().zip(b.iter()) {
                *r += a * c;
            }
        }
        for flip in [false, true] {
            let u: Vec<Rational> = if flip {
                ray.iter().map(|c| -c).collect()
            } else {
                ray.clone()
            };
            let values: Vec<Rational> = vectors.iter().map(|y| dot(&u, y)).collect();
            let positive = values.iter().filter(|v| v.is_positive()).count();
            if best.as_ref().is_some_and(|(b, _)| positive >= *b) {
                continue;
            }
            let zero_set: Vec<Vec<Rational>> = vectors
                .iter()
                .zip(&values)
                .filter(|(_, v)| v.is_zero())
                .map(|(y, _)| y.clone())
                .collect();
            let (inner, tilt) = min_open_count(&zero_set, dim);
            let total = positive + inner;
            if best.as_ref().is_some_and(|(b, _)| total >= *b) {
                continue;
            }
            // u + delta * tilt keeps every nonzero sign of u and resolves the
            // zero set as `tilt` does.
            let mut delta = Rational::one();
            for (y, v) in vectors.iter().zip(&values) {
                let t = dot(&tilt, y);
                if v.is_zero() || t.is_zero() {
                    continue;
                }
                let bound = v.abs() / (t.abs() * Rational::from_integer(2.into()));
                if bound < delta {
                    delta = bound;
                }
            }
            let g: Vec<Rational> = u.iter().zip(&tilt).map(|(a, t)| a + &delta * t).collect();
            best = Some((total, g));
        }
    }
    best.expect("at least one extreme ray")
}

/// Is `p` a centerpoint of `x`, i.e. is its depth at least `ceil(n / (d + 1))`?
pub fn verify_centerpoint(p: &Point, x: &PointSet) -> Result<bool> {
    let report = tukey_depth(p, x)?;
    Ok(report.depth >= x.len().div_ceil(x.dim() + 1))
}
