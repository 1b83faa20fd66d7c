//! Exact scalars, points, hyperplanes and the orientation predicate.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::linalg;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. `Display` prints `p/q`, or `p` when the denominator is one.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &Rational) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.to_i8())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Point {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Point {
        Point(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn origin(dim: usize) -> Point {
        Point(alloc::vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }
}

impl From<Vec<Rational>> for Point {
    fn from(coords: Vec<Rational>) -> Point {
        Point(coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// An ordered list of points of a common dimension. The order is part of the
/// data: paths, alternating partitions and homogeneity all read it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
    labels: Option<Vec<String>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<PointSet> {
        if dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(PointSet {
            dim,
            points,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<PointSet> {
        if labels.len() != self.points.len() {
            return Err(invalid(format!(
                "{} labels for {} points",
                labels.len(),
                self.points.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The ordered sub-configuration at `indices` (labels are dropped).
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            labels: None,
        }
    }

    /// Every `dim + 1` points are affinely independent (for fewer points,
    /// all of them are). Duplicates count as degenerate.
    pub fn is_general_position(&self) -> bool {
        let d = self.dim;
        let n = self.points.len();
        if n <= d + 1 {
            return affinely_independent(&self.points, d);
        }
        itertools::Itertools::combinations(0..n, d + 1).all(|idx| {
            let pts: Vec<&Point> = idx.iter().map(|&i| &self.points[i]).collect();
            orientation_unchecked(&pts) != Sign::Zero
        })
    }
}

fn affinely_independent(points: &[Point], dim: usize) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.sub(first)).collect();
    linalg::rank(&diffs, dim) == diffs.len()
}

/// Oriented hyperplane `{x : normal . x = offset}`; the positive side is
/// `normal . x > offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Hyperplane> {
        if normal.is_empty() || normal.iter().all(Zero::is_zero) {
            return Err(invalid("hyperplane normal must be nonzero"));
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal . p - offset`, exact.
    pub fn evaluate(&self, p: &Point) -> Result<Rational> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: p.dim(),
            });
        }
        Ok(linalg::dot(&self.normal, p.coords()) - &self.offset)
    }

    /// Same hyperplane with its sides exchanged.
    pub fn reversed(&self) -> Hyperplane {
        Hyperplane {
            normal: self.normal.iter().map(|c| -c).collect(),
            offset: -self.offset.clone(),
        }
    }

    /// Scales the normal to a primitive integer vector whose first nonzero
    /// entry is positive. Returns the hyperplane and whether sides flipped.
    pub fn normalized(&self) -> (Hyperplane, bool) {
        let scale = primitive_scale(&self.normal);
        let first_negative = self
            .normal
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative());
        let scale = if first_negative { -scale } else { scale };
        (
            Hyperplane {
                normal: self.normal.iter().map(|c| c * &scale).collect(),
                offset: &self.offset * &scale,
            },
            first_negative,
        )
    }
}

/// Positive factor turning `v` into a primitive integer vector (one if `v` is zero).
pub(crate) fn primitive_scale(v: &[Rational]) -> Rational {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let gcd = v
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(&(c * &lcm).to_integer()));
    if gcd.is_zero() {
        return Rational::one();
    }
    Rational::new(lcm, gcd)
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            if a.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{a}*x{}", i + 1)?;
            }
        }
        write!(f, " = {}", self.offset)
    }
}

/// Sign of the determinant of the `(d+1) x (d+1)` matrix whose rows are the
/// points in homogeneous coordinates `(1, x_1, ..., x_d)`, rows in the given
/// order.
///
/// With this convention an increasing pair on the line and every increasing
/// tuple on the moment curve are positively oriented.
pub fn orientation(points: &[Point], dim: usize) -> Result<Sign> {
    if points.len() != dim + 1 {
        return Err(invalid(format!(
            "orientation needs {} points in dimension {dim}, got {}",
            dim + 1,
            points.len()
        )));
    }
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    let refs: Vec<&Point> = points.iter().collect();
    Ok(orientation_unchecked(&refs))
}

pub(crate) fn orientation_unchecked(points: &[&Point]) -> Sign {
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            let mut row = Vec::with_capacity(p.dim() + 1);
            row.push(Rational::one());
            row.extend(p.coords().iter().cloned());
            row
        })
        .collect();
    Sign::of(&linalg::determinant(rows))
}

pub fn side_of(h: &Hyperplane, p: &Point) -> Result<Sign> {
    Ok(Sign::of(&h.evaluate(p)?))
}
