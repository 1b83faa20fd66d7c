//! Moment-curve configurations and order-type homogeneity.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::geometry::{orientation_unchecked, side_of, Hyperplane, Point, PointSet, Rational, Sign};

/// Parameters `alpha_1, ..., alpha_n` of points `(a, a^2, ..., a^d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSpec {
    pub dim: usize,
    pub alphas: Vec<Rational>,
}

impl MomentSpec {
    pub fn new(dim: usize, alphas: Vec<Rational>) -> MomentSpec {
        MomentSpec { dim, alphas }
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.alphas.windows(2).all(|w| w[0] < w[1])
    }
}

pub fn moment_point(alpha: &Rational, dim: usize) -> Point {
    let mut coords = Vec::with_capacity(dim);
    let mut power = Rational::one();
    for _ in 0..dim {
        power *= alpha;
        coords.push(power.clone());
    }
    Point::new(coords)
}

pub fn moment_points(spec: &MomentSpec) -> Result<PointSet> {
    if spec.dim == 0 {
        return Err(invalid("moment curve dimension must be positive"));
    }
    PointSet::new(
        spec.dim,
        spec.alphas.iter().map(|a| moment_point(a, spec.dim)).collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// Every ordered `(d+1)`-subset has this nonzero orientation.
    Homogeneous(Sign),
    /// Fewer than `d + 1` points: nothing to compare, no sign.
    Trivial,
    /// Two index subsets (ascending) with different orientations, or one
    /// subset twice when its orientation is zero.
    Violation {
        first: Vec<usize>,
        first_sign: Sign,
        second: Vec<usize>,
        second_sign: Sign,
    },
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Violation { .. })
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            Homogeneity::Homogeneous(s) => Some(*s),
            _ => None,
        }
    }
}

pub fn is_order_homogeneous(x: &PointSet) -> Homogeneity {
    let d = x.dim();
    let mut reference: Option<(Vec<usize>, Sign)> = None;
    for idx in (0..x.len()).combinations(d + 1) {
        let pts: Vec<&Point> = idx.iter().map(|&i| x.point(i)).collect();
        let s = orientation_unchecked(&pts);
        if s == Sign::Zero {
            return Homogeneity::Violation {
                first: idx.clone(),
                first_sign: s,
                second: idx,
                second_sign: s,
            };
        }
        match &reference {
            None => reference = Some((idx, s)),
            Some((first, fs)) if *fs != s => {
                return Homogeneity::Violation {
                    first: first.clone(),
                    first_sign: *fs,
                    second: idx,
                    second_sign: s,
                }
            }
            Some(_) => {}
        }
    }
    match reference {
        Some((_, s)) => Homogeneity::Homogeneous(s),
        None => Homogeneity::Trivial,
    }
}

/// `d`-element index sets (0-based, ascending) spanning facets of a
/// `d`-dimensional cyclic polytope on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSet {
    pub n: usize,
    pub dim: usize,
    pub facets: Vec<Vec<usize>>,
}

impl FacetSet {
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, facet: &[usize]) -> bool {
        self.facets.binary_search_by(|f| f.as_slice().cmp(facet)).is_ok()
    }
}

/// Gale's evenness condition: between any two vertices outside `facet`
/// there is an even number of facet vertices.
pub fn satisfies_evenness(facet: &[usize], n: usize) -> bool {
    let mut inside = vec![false; n];
    for &i in facet {
        inside[i] = true;
    }
    // parity of facet vertices seen since the last outside vertex
    let mut seen_outside = false;
    let mut run = 0usize;
    for &member in &inside {
        if member {
            run += 1;
        } else {
            if seen_outside && run % 2 == 1 {
                return false;
            }
            seen_outside = true;
            run = 0;
        }
    }
    true
}

pub fn gale_facets(n: usize, dim: usize) -> Result<FacetSet> {
    if dim == 0 || n < dim + 1 {
        return Err(invalid(format!(
            "gale facets need n >= d + 1 (n = {n}, d = {dim})"
        )));
    }
    let facets = (0..n)
        .combinations(dim)
        .filter(|f| satisfies_evenness(f, n))
        .collect();
    Ok(FacetSet { n, dim, facets })
}

/// Every `floor(d/2)`-subset of vertices lies in some Gale facet.
pub fn is_neighborly(n: usize, dim: usize) -> Result<bool> {
    let facets = gale_facets(n, dim)?;
    let k = dim / 2;
    Ok((0..n).combinations(k).all(|subset| {
        facets
            .facets
            .iter()
            .any(|f| subset.iter().all(|i| f.binary_search(i).is_ok()))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossings {
    pub count: usize,
    /// Edge `i` joins points `i` and `i + 1`.
    pub edges: Vec<usize>,
}

/// Number of path edges `x_i x_{i+1}` whose endpoints lie strictly on
/// opposite sides of `h`. Rejects hyperplanes through a vertex.
pub fn path_crossings(x: &PointSet, h: &Hyperplane) -> Result<Crossings> {
    let sides = x
        .points()
        .iter()
        .map(|p| side_of(h, p))
        .collect::<Result<Vec<Sign>>>()?;
    if let Some(i) = sides.iter().position(|s| *s == Sign::Zero) {
        return Err(Error::Degenerate(format!(
            "vertex {i} lies on the hyperplane"
        )));
    }
    let edges: Vec<usize> = sides
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] != w[1])
        .map(|(i, _)| i)
        .collect();
    Ok(Crossings {
        count: edges.len(),
        edges,
    })
}

pub const DEFAULT_SUBSET_CAP: usize = 20;

/// A longest index subsequence (original order kept) whose points form an
/// order-type homogeneous set; among longest ones the lexicographically
/// smallest index sequence.
///
/// In dimension one this is a longest strictly monotone subsequence and any
/// `n` is accepted. Otherwise the search is exhaustive and `n <= cap`.
pub fn largest_homogeneous_subset(x: &PointSet, cap: usize) -> Result<Vec<usize>> {
    let n = x.len();
    let d = x.dim();
    if n <= d {
        return Ok((0..n).collect());
    }
    if d == 1 {
        let values: Vec<&Rational> = x.points().iter().map(|p| &p.coords()[0]).collect();
        let up = longest_monotone(&values, |a, b| a < b);
        let down = longest_monotone(&values, |a, b| a > b);
        return Ok(if down.len() > up.len() || (down.len() == up.len() && down < up) {
            down
        } else {
            up
        });
    }
    if n > cap {
        return Err(Error::ResourceGuard {
            what: "homogeneous subset search",
            requested: n,
            limit: cap,
        });
    }
    let mut search = SubsetSearch {
        x,
        best: Vec::new(),
        current: Vec::new(),
        sign: None,
    };
    search.extend(0);
    if search.best.is_empty() {
        // every (d+1)-subset is degenerate; d points are trivially homogeneous
        return Ok((0..d).collect());
    }
    Ok(search.best)
}

fn longest_monotone(values: &[&Rational], before: impl Fn(&Rational, &Rational) -> bool) -> Vec<usize> {
    let n = values.len();
    // len_from[i]: longest chain starting at i
    let mut len_from = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if before(values[i], values[j]) && len_from[j] + 1 > len_from[i] {
                len_from[i] = len_from[j] + 1;
            }
        }
    }
    let best = len_from.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(best);
    let mut need = best;
    let mut last: Option<usize> = None;
    for i in 0..n {
        if need == 0 {
            break;
        }
        let fits = last.is_none_or(|l| before(values[l], values[i]));
        if fits && len_from[i] == need {
            out.push(i);
            last = Some(i);
            need -= 1;
        }
    }
    out
}

struct SubsetSearch<'a> {
    x: &'a PointSet,
    best: Vec<usize>,
    current: Vec<usize>,
    sign: Option<Sign>,
}

impl SubsetSearch<'_> {
    // Depth-first in lexicographic order; a strictly longer sequence replaces
    // the incumbent, so the first sequence of each length found wins.
    fn extend(&mut self, from: usize) {
        let n = self.x.len();
        let d = self.x.dim();
        for next in from..n {
            if self.current.len() + (n - next) <= self.best.len() {
                return;
            }
            let saved = self.sign;
            if self.compatible(next) {
                self.current.push(next);
                if self.current.len() > self.best.len() && self.current.len() > d {
                    self.best = self.current.clone();
                }
                self.extend(next + 1);
                self.current.pop();
            }
            self.sign = saved;
        }
    }

    fn compatible(&mut self, next: usize) -> bool {
        let d = self.x.dim();
        if self.current.len() < d {
            return true;
        }
        let new_point = self.x.point(next);
        for combo in self.current.iter().combinations(d) {
            let mut pts: Vec<&Point> = combo.iter().map(|&&i| self.x.point(i)).collect();
            pts.push(new_point);
            let s = orientation_unchecked(&pts);
            match (s, self.sign) {
                (Sign::Zero, _) => return false,
                (s, None) => self.sign = Some(s),
                (s, Some(t)) if s != t => return false,
                _ => {}
            }
        }
        true
    }
}
