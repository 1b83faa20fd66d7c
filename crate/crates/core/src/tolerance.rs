//! Tolerance of partitions and of point sets.
//!
//! The tolerance of a partition `A_1, ..., A_r` of `X` is the largest `t`
//! such that `conv(A_1 \ Y) ∩ ... ∩ conv(A_r \ Y)` stays nonempty for every
//! `Y` with `|Y| <= t`. It is `-1` when the hulls already miss each other.
//! Hulls of empty blocks are empty, so removing a whole block always breaks
//! the partition and the tolerance is below the smallest block size.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::combinatorics::set_partitions;
use crate::error::{invalid, Error, Result};
use crate::feasibility::hulls_common_point;
use crate::geometry::{Point, PointSet, Rational};
use crate::order_type::is_order_homogeneous;

/// Largest point count accepted by [`set_tolerance`].
pub const SET_TOLERANCE_GUARD: usize = 12;

/// Assignment of point indices `0..n` to blocks `0..r`, every block nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    r: usize,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(r: usize, block_of: Vec<usize>) -> Result<Partition> {
        if r == 0 {
            return Err(invalid("a partition needs at least one block"));
        }
        let mut sizes = vec![0usize; r];
        for &b in &block_of {
            if b >= r {
                return Err(invalid(format!("block label {b} out of range for r = {r}")));
            }
            sizes[b] += 1;
        }
        if let Some(b) = sizes.iter().position(|&s| s == 0) {
            return Err(invalid(format!("block {b} is empty")));
        }
        Ok(Partition { r, block_of })
    }

    /// Builds a partition of `0..n` from explicit blocks.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        let mut block_of = vec![usize::MAX; n];
        for (b, members) in blocks.iter().enumerate() {
            for &i in members {
                if i >= n {
                    return Err(invalid(format!("index {i} out of range for n = {n}")));
                }
                if block_of[i] != usize::MAX {
                    return Err(invalid(format!("index {i} appears in two blocks")));
                }
                block_of[i] = b;
            }
        }
        if let Some(i) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(invalid(format!("index {i} is not covered")));
        }
        Partition::new(blocks.len(), block_of)
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.r];
        for (i, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(i);
        }
        blocks
    }

    /// The same partition with labels renumbered in order of first appearance.
    pub fn canonical(&self) -> Partition {
        let mut map = vec![usize::MAX; self.r];
        let mut next = 0;
        let block_of = self
            .block_of
            .iter()
            .map(|&b| {
                if map[b] == usize::MAX {
                    map[b] = next;
                    next += 1;
                }
                map[b]
            })
            .collect();
        Partition {
            r: self.r,
            block_of,
        }
    }

    pub fn block_points(&self, x: &PointSet) -> Vec<Vec<Point>> {
        self.blocks()
            .iter()
            .map(|b| b.iter().map(|&i| x.point(i).clone()).collect())
            .collect()
    }
}

/// Block of index `j` is `j mod r` (0-based residue classes).
pub fn alternating_partition(n: usize, r: usize) -> Result<Partition> {
    if r == 0 || n < r {
        return Err(invalid(format!(
            "alternating partition needs n >= r >= 1 (n = {n}, r = {r})"
        )));
    }
    Partition::new(r, (0..n).map(|j| j % r).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToleranceReport {
    pub value: i64,
    /// Lexicographically first removal set of size `value + 1` that breaks
    /// the partition.
    pub breaking_set: Option<Vec<usize>>,
    /// False when the removal budget stopped the search; `value` is then a
    /// verified lower bound.
    pub exhausted: bool,
}

/// Tracks feasibility of the partition under removals. In dimension one the
/// hulls are intervals; otherwise the exact LP decides, and the supports of
/// earlier witnesses short-circuit removals that miss them.
struct HullChecker<'a> {
    x: &'a PointSet,
    blocks: Vec<Vec<usize>>,
    supports: VecDeque<Vec<usize>>,
}

const SUPPORT_CACHE: usize = 32;

impl<'a> HullChecker<'a> {
    fn new(x: &'a PointSet, p: &Partition) -> HullChecker<'a> {
        HullChecker {
            x,
            blocks: p.blocks(),
            supports: VecDeque::new(),
        }
    }

    fn survives(&mut self, removed: &[bool]) -> Result<bool> {
        if self.x.dim() == 1 {
            return Ok(self.intervals_meet(removed));
        }
        if let Some(pos) = self
            .supports
            .iter()
            .position(|s| s.iter().all(|&i| !removed[i]))
        {
            if pos > 0 {
                let s = self.supports.remove(pos).expect("index in range");
                self.supports.push_front(s);
            }
            return Ok(true);
        }
        let kept: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&i| !removed[i]).collect())
            .collect();
        let pts: Vec<Vec<Point>> = kept
            .iter()
            .map(|b| b.iter().map(|&i| self.x.point(i).clone()).collect())
            .collect();
        let outcome = hulls_common_point(&pts)?;
        let Some(w) = outcome.witness() else {
            return Ok(false);
        };
        let support = w.support().map(|(b, j)| kept[b][j]).collect();
        self.supports.push_front(support);
        self.supports.truncate(SUPPORT_CACHE);
        Ok(true)
    }

    fn intervals_meet(&self, removed: &[bool]) -> bool {
        let mut lo: Option<&Rational> = None;
        let mut hi: Option<&Rational> = None;
        for b in &self.blocks {
            let mut vals = b
                .iter()
                .filter(|&&i| !removed[i])
                .map(|&i| &self.x.point(i).coords()[0]);
            let Some(first) = vals.next() else {
                return false;
            };
            let (mn, mx) = vals.fold((first, first), |(mn, mx), v| {
                (if v < mn { v } else { mn }, if v > mx { v } else { mx })
            });
            lo = Some(lo.map_or(mn, |l| if mn > l { mn } else { l }));
            hi = Some(hi.map_or(mx, |h| if mx < h { mx } else { h }));
        }
        lo <= hi
    }
}

fn check_partition(x: &PointSet, p: &Partition) -> Result<()> {
    if p.n() != x.len() {
        return Err(invalid(format!(
            "partition covers {} indices, point set has {}",
            p.n(),
            x.len()
        )));
    }
    Ok(())
}

/// Tolerance of `p` on `x`: removal sets are tried by increasing size, each
/// size in lexicographic order, until one breaks the common point or the
/// budget (a maximum `|Y|`) is exceeded.
pub fn partition_tolerance(
    x: &PointSet,
    p: &Partition,
    budget: Option<usize>,
) -> Result<ToleranceReport> {
    check_partition(x, p)?;
    let n = x.len();
    let mut checker = HullChecker::new(x, p);
    let smallest = checker.blocks.iter().map(Vec::len).min().unwrap_or(0);
    let mut removed = vec![false; n];
    // removing the smallest block always breaks, so the loop returns by then
    for k in 0..=smallest {
        if budget.is_some_and(|b| k > b) {
            return Ok(ToleranceReport {
                value: (k - 1) as i64,
                breaking_set: None,
                exhausted: false,
            });
        }
        for y in (0..n).combinations(k) {
            for &i in &y {
                removed[i] = true;
            }
            let ok = checker.survives(&removed)?;
            for &i in &y {
                removed[i] = false;
            }
            if !ok {
                return Ok(ToleranceReport {
                    value: k as i64 - 1,
                    breaking_set: Some(y),
                    exhausted: true,
                });
            }
        }
    }
    unreachable!("removing the smallest block breaks every partition")
}

/// Size of the smallest breaking removal set on the line: either empty a
/// block or push every remaining point of one block strictly above every
/// remaining point of another.
fn line_break_size(x: &PointSet, blocks: &[Vec<usize>]) -> usize {
    let mut best = blocks.iter().map(Vec::len).min().unwrap_or(0);
    for (i, upper) in blocks.iter().enumerate() {
        for (j, lower) in blocks.iter().enumerate() {
            if i == j {
                continue;
            }
            // (value, is_upper) sorted by value; threshold c sweeps upward,
            // cost(c) = |upper <= c| + |lower > c|
            let mut events: Vec<(&Rational, bool)> = upper
                .iter()
                .map(|&k| (&x.point(k).coords()[0], true))
                .chain(lower.iter().map(|&k| (&x.point(k).coords()[0], false)))
                .collect();
            events.sort();
            let mut cost = lower.len();
            let mut min_cost = cost;
            let mut idx = 0;
            while idx < events.len() {
                let v = events[idx].0;
                while idx < events.len() && events[idx].0 == v {
                    if events[idx].1 {
                        cost += 1;
                    } else {
                        cost -= 1;
                    }
                    idx += 1;
                }
                min_cost = min_cost.min(cost);
            }
            best = best.min(min_cost);
        }
    }
    best
}

/// Result of a maximization over all partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetToleranceReport {
    pub report: ToleranceReport,
    pub partition: Partition,
    pub partitions_examined: usize,
}

/// `t(X, r)`: the best partition tolerance over all partitions of `x` into
/// `r` unordered nonempty blocks. Ties go to the lexicographically smallest
/// canonical label vector. At most [`SET_TOLERANCE_GUARD`] points.
pub fn set_tolerance(x: &PointSet, r: usize, budget: Option<usize>) -> Result<SetToleranceReport> {
    set_tolerance_guarded(x, r, budget, SET_TOLERANCE_GUARD)
}

pub(crate) fn set_tolerance_guarded(
    x: &PointSet,
    r: usize,
    budget: Option<usize>,
    guard: usize,
) -> Result<SetToleranceReport> {
    let n = x.len();
    if r == 0 || n < r {
        return Err(invalid(format!("need n >= r >= 1 (n = {n}, r = {r})")));
    }
    if n > guard {
        return Err(Error::ResourceGuard {
            what: "partition enumeration",
            requested: n,
            limit: guard,
        });
    }
    // no partition can beat the smallest block size
    let ceiling = (n / r) as i64 - 1;
    let mut best: Option<(i64, Vec<usize>)> = None;
    let mut any_cut = false;
    let mut examined = 0;
    for labels in set_partitions(n, r) {
        let p = Partition { r, block_of: labels };
        let blocks = p.blocks();
        let smallest = blocks.iter().map(Vec::len).min().unwrap_or(0) as i64;
        if best.as_ref().is_some_and(|(v, _)| smallest - 1 <= *v) {
            continue;
        }
        examined += 1;
        let (mut value, mut cut) = if x.dim() == 1 {
            (line_break_size(x, &blocks) as i64 - 1, false)
        } else {
            let rep = partition_tolerance(x, &p, budget)?;
            (rep.value, !rep.exhausted)
        };
        if let Some(b) = budget {
            if value > b as i64 {
                value = b as i64;
                cut = true;
            }
        }
        any_cut |= cut;
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, p.block_of));
        }
        if best.as_ref().is_some_and(|(v, _)| *v >= ceiling) {
            break;
        }
    }
    let (_, labels) = best.expect("n >= r gives at least one partition");
    let partition = Partition { r, block_of: labels };
    let mut report = partition_tolerance(x, &partition, budget)?;
    report.exhausted &= !any_cut;
    Ok(SetToleranceReport {
        report,
        partition,
        partitions_examined: examined,
    })
}

/// Upper bound on the alternating-partition constant:
/// `(d+1)(floor(d/2)+1)(r-1)+1`.
pub fn bound_lemma32(d: u64, r: u64) -> Result<u64> {
    if d == 0 || r == 0 {
        return Err(invalid("d and r must be positive"));
    }
    Ok((d + 1) * (d / 2 + 1) * (r - 1) + 1)
}

/// Sharper bound for even `d`: the minimum over `i in 0..r` of
/// `d(d+1)/2 (r-1) + i(d+1) + s_i`, where `s_i` is the least positive
/// integer congruent to `d(d+1)/2 - i d` modulo `r`.
pub fn bound_even_d(d: u64, r: u64) -> Result<u64> {
    if d == 0 || r == 0 {
        return Err(invalid("d and r must be positive"));
    }
    if d % 2 == 1 {
        return Err(invalid(format!("even-dimension bound needs even d, got {d}")));
    }
    let half = (d * (d + 1) / 2) as i64;
    let (di, ri) = (d as i64, r as i64);
    Ok((0..ri)
        .map(|i| {
            let s = (half - i * di).rem_euclid(ri);
            let s = if s == 0 { ri } else { s };
            (half * (ri - 1) + i * (di + 1) + s) as u64
        })
        .min()
        .expect("r >= 1"))
}

/// `floor(n/r) - floor(d/2)`; negative values mean no partition of `n`
/// points can be tolerant.
pub fn bound_prop41(n: u64, d: u64, r: u64) -> Result<i64> {
    if n == 0 || d == 0 || r == 0 {
        return Err(invalid("n, d and r must be positive"));
    }
    Ok((n / r) as i64 - (d / 2) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub t_value: i64,
    /// `floor(n/r) - bound_lemma32(d, r)`
    pub lower: i64,
    /// `floor(n/r) - floor(d/2)`
    pub upper: i64,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub partition: Partition,
    pub exhausted: bool,
}

/// Evaluates `floor(n/r) - c <= t(X, r) <= floor(n/r) - floor(d/2)` on a
/// homogeneous set, with `c` replaced by [`bound_lemma32`].
pub fn check_thm34(x: &PointSet, r: usize, budget: Option<usize>) -> Result<SandwichReport> {
    if !is_order_homogeneous(x).is_homogeneous() {
        return Err(invalid("point set is not order-type homogeneous"));
    }
    let n = x.len();
    if r == 0 || n < r {
        return Err(invalid(format!("need n >= r >= 1 (n = {n}, r = {r})")));
    }
    let d = x.dim();
    let st = set_tolerance(x, r, budget)?;
    let q = (n / r) as i64;
    let lower = q - bound_lemma32(d as u64, r as u64)? as i64;
    let upper = q - (d / 2) as i64;
    let t = st.report.value;
    Ok(SandwichReport {
        t_value: t,
        lower,
        upper,
        lower_ok: lower <= t,
        upper_ok: t <= upper,
        partition: st.partition,
        exhausted: st.report.exhausted,
    })
}
