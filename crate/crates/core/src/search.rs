//! Seeded counterexample search for the alternating-partition constant.
//!
//! `c(d, r)` is the least `n` such that every order-type homogeneous `n`-point
//! set in `R^d` has an alternating partition whose `r` hulls share a point. A
//! [`Counterexample`] is a moment-curve configuration whose alternating hulls
//! miss each other, with the certificate that proves it; finding one at `n`
//! shows `c(d, r) > n`.
//!
//! On the line every increasing configuration has the same order type, so
//! `1, ..., n` decides the question exactly. From dimension two on the answer
//! depends on the parameters themselves, and a search that finds nothing
//! proves nothing.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::feasibility::{hulls_common_point, FeasibilityOutcome, ReplayError};
use crate::geometry::{frac, int, PointSet, Rational};
use crate::order_type::{is_order_homogeneous, moment_points, MomentSpec};
use crate::tolerance::{alternating_partition, set_tolerance_guarded};

/// Parameters of the four alternating tetrahedra without a common point
/// (`d = 3, r = 4, n = 16`), before separating the repeated values.
pub const FIGURE2_VALUES: [i64; 16] = [-4, -3, -2, -2, -2, -1, -1, -1, 0, 1, 2, 6, 6, 7, 8, 9];

/// Largest `n` accepted by [`t_line`] and [`n_line`].
pub const T_LINE_GUARD: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyKind {
    /// `clusters` tight groups of repeated integer parameters (each of size
    /// two to `r - 1`) among distinct integers in `[-spread, spread]`;
    /// repeats are separated by `1/1000`. With an `anchor` multiset, rank 0
    /// is the anchor itself (truncated to `n`) and later ranks shift each of
    /// its distinct values by -1, 0 or +1.
    Clustered {
        clusters: usize,
        spread: i64,
        anchor: Option<Vec<i64>>,
    },
    /// `n` distinct multiples of `step` with multipliers in `[-window, window]`.
    Grid { step: Rational, window: i64 },
    /// `n` distinct rationals `p/q` with `1 <= q <= max_denominator` and
    /// `|p/q| <= range`.
    RandomRational { max_denominator: u32, range: i64 },
}

/// A deterministic candidate stream: candidate `k` depends only on
/// `(kind, seed, k)`, so candidates can be evaluated in any order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchStrategy {
    pub kind: StrategyKind,
    pub seed: u64,
}

impl SearchStrategy {
    pub fn clustered(r: usize, seed: u64) -> SearchStrategy {
        SearchStrategy {
            kind: StrategyKind::Clustered {
                clusters: r.saturating_sub(1).max(1),
                spread: 6,
                anchor: None,
            },
            seed,
        }
    }

    pub fn figure2(seed: u64) -> SearchStrategy {
        SearchStrategy {
            kind: StrategyKind::Clustered {
                clusters: 3,
                spread: 9,
                anchor: Some(FIGURE2_VALUES.to_vec()),
            },
            seed,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            StrategyKind::Clustered { .. } => "clustered",
            StrategyKind::Grid { .. } => "grid",
            StrategyKind::RandomRational { .. } => "random-rational",
        }
    }

    /// Strictly increasing parameters for candidate `rank`.
    pub fn candidate(&self, rank: u64, n: usize, r: usize) -> Vec<Rational> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(rank);
        match &self.kind {
            StrategyKind::Clustered {
                clusters,
                spread,
                anchor,
            } => {
                let values = match anchor {
                    Some(a) if a.len() >= n => {
                        let mut v = a[..n].to_vec();
                        if rank > 0 {
                            jitter(&mut v, &mut rng);
                        }
                        v
                    }
                    _ => clustered_values(&mut rng, n, r, *clusters, *spread),
                };
                separate_repeats(&values, &frac(1, 1000))
            }
            StrategyKind::Grid { step, window } => {
                let window = (*window).max(n as i64);
                let ks = distinct_sorted(&mut rng, n, window);
                ks.into_iter().map(|k| step * int(k)).collect()
            }
            StrategyKind::RandomRational {
                max_denominator,
                range,
            } => {
                let qmax = (*max_denominator).max(1) as i64;
                let range = (*range).max(1);
                let mut out: Vec<Rational> = Vec::with_capacity(n);
                while out.len() < n {
                    let q = rng.random_range(1..=qmax);
                    let p = rng.random_range(-range * q..=range * q);
                    let v = frac(p, q);
                    if !out.contains(&v) {
                        out.push(v);
                    }
                }
                out.sort();
                out
            }
        }
    }
}

fn distinct_sorted(rng: &mut ChaCha8Rng, n: usize, window: i64) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(n);
    while out.len() < n {
        let v = rng.random_range(-window..=window);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort();
    out
}

fn jitter(values: &mut [i64], rng: &mut ChaCha8Rng) {
    let mut i = 0;
    while i < values.len() {
        let v = values[i];
        let shift = rng.random_range(-1..=1);
        while i < values.len() && values[i] == v {
            values[i] += shift;
            i += 1;
        }
    }
    values.sort();
}

fn clustered_values(rng: &mut ChaCha8Rng, n: usize, r: usize, clusters: usize, spread: i64) -> Vec<i64> {
    let spread = spread.max(n as i64);
    let max_mult = r.saturating_sub(1).max(2);
    let mut values: Vec<i64> = Vec::with_capacity(n);
    let mut used: Vec<i64> = Vec::new();
    let fresh = |rng: &mut ChaCha8Rng, used: &mut Vec<i64>| loop {
        let v = rng.random_range(-spread..=spread);
        if !used.contains(&v) {
            used.push(v);
            return v;
        }
    };
    for _ in 0..clusters {
        if values.len() + 2 > n {
            break;
        }
        let mult = rng.random_range(2..=max_mult).min(n - values.len());
        let c = fresh(rng, &mut used);
        values.extend(core::iter::repeat_n(c, mult));
    }
    while values.len() < n {
        let v = fresh(rng, &mut used);
        values.push(v);
    }
    values.sort();
    values
}

/// `a, a, a` becomes `a, a + eps, a + 2 eps`; the caller keeps `eps` small
/// enough that runs do not reach the next value.
pub fn separate_repeats(values: &[i64], eps: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(values.len());
    let mut run = 0i64;
    for (i, &v) in values.iter().enumerate() {
        run = if i > 0 && values[i - 1] == v { run + 1 } else { 0 };
        out.push(int(v) + eps * int(run));
    }
    out
}

/// Moment-curve parameters whose alternating partition has no common point,
/// with the replayable certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub dim: usize,
    pub r: usize,
    pub alphas: Vec<Rational>,
    /// Candidate rank that produced it (0 for direct constructions).
    pub rank: u64,
    pub outcome: FeasibilityOutcome,
}

impl Counterexample {
    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn points(&self) -> Result<PointSet> {
        moment_points(&MomentSpec::new(self.dim, self.alphas.clone()))
    }

    /// Checks homogeneity and replays the infeasibility certificate against
    /// the alternating blocks, independent of how the example was found.
    pub fn replay(&self) -> core::result::Result<(), ReplayError> {
        let x = self.points().map_err(|_| ReplayError::Shape { block: 0 })?;
        if !is_order_homogeneous(&x).is_homogeneous() {
            return Err(ReplayError::NotHomogeneous);
        }
        if self.outcome.is_feasible() {
            return Err(ReplayError::NotACounterexample);
        }
        let p = alternating_partition(self.n(), self.r)
            .map_err(|_| ReplayError::BlockCount {
                expected: self.r,
                found: self.n(),
            })?;
        self.outcome.verify(&p.block_points(&x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Counterexample),
    /// `exact` is true only on the line, where one configuration decides all.
    NoneFound { tried: u64, exact: bool },
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// Evaluates one parameter list; `Some` when its alternating hulls miss.
pub fn evaluate_candidate(
    dim: usize,
    r: usize,
    alphas: Vec<Rational>,
    rank: u64,
) -> Result<Option<Counterexample>> {
    let x = moment_points(&MomentSpec::new(dim, alphas.clone()))?;
    let p = alternating_partition(x.len(), r)?;
    let outcome = hulls_common_point(&p.block_points(&x))?;
    if outcome.is_feasible() {
        return Ok(None);
    }
    Ok(Some(Counterexample {
        dim,
        r,
        alphas,
        rank,
        outcome,
    }))
}

fn check_search_args(dim: usize, r: usize, n: usize) -> Result<()> {
    if dim == 0 || r == 0 {
        return Err(invalid("d and r must be positive"));
    }
    if n < r {
        return Err(invalid(format!("need n >= r (n = {n}, r = {r})")));
    }
    Ok(())
}

/// Looks for `n` moment-curve points whose alternating `r`-partition has no
/// common point, trying candidates `0..budget` of `strategy` in order.
pub fn find_counterexample(
    dim: usize,
    r: usize,
    n: usize,
    strategy: &SearchStrategy,
    budget: u64,
) -> Result<SearchOutcome> {
    check_search_args(dim, r, n)?;
    if dim == 1 {
        let alphas: Vec<Rational> = (1..=n as i64).map(int).collect();
        return Ok(match evaluate_candidate(1, r, alphas, 0)? {
            Some(c) => SearchOutcome::Found(c),
            None => SearchOutcome::NoneFound {
                tried: 1,
                exact: true,
            },
        });
    }
    for rank in 0..budget {
        let alphas = strategy.candidate(rank, n, r);
        if let Some(c) = evaluate_candidate(dim, r, alphas, rank)? {
            return Ok(SearchOutcome::Found(c));
        }
    }
    Ok(SearchOutcome::NoneFound {
        tried: budget,
        exact: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub dim: usize,
    pub r: usize,
    pub entries: Vec<(usize, SearchOutcome)>,
}

impl ScanReport {
    /// `(largest n with a counterexample) + 1`, a certified lower bound on `c(d, r)`.
    pub fn lower_bound(&self) -> Option<usize> {
        self.entries
            .iter()
            .filter(|(_, o)| o.is_found())
            .map(|(n, _)| n + 1)
            .max()
    }
}

/// Runs [`find_counterexample`] independently for each `n` in the range.
pub fn scan_c_lower(
    dim: usize,
    r: usize,
    ns: core::ops::RangeInclusive<usize>,
    strategy: &SearchStrategy,
    budget: u64,
) -> Result<ScanReport> {
    let mut entries = Vec::new();
    for n in ns {
        entries.push((n, find_counterexample(dim, r, n, strategy, budget)?));
    }
    Ok(ScanReport { dim, r, entries })
}

fn line(n: usize) -> PointSet {
    PointSet::new(
        1,
        (1..=n as i64)
            .map(|i| crate::geometry::Point::from_ints(&[i]))
            .collect(),
    )
    .expect("dimension one")
}

/// `t(n, 1, r)`, exact: all generic `n`-point sets on the line share the
/// order type of `1, ..., n`.
pub fn t_line(n: usize, r: usize) -> Result<i64> {
    if r == 0 || n < r {
        return Err(invalid(format!("need n >= r >= 1 (n = {n}, r = {r})")));
    }
    Ok(set_tolerance_guarded(&line(n), r, None, T_LINE_GUARD)?
        .report
        .value)
}

/// Least `n` with `t_line(n, r) >= t`.
pub fn n_line(t: usize, r: usize) -> Result<usize> {
    if r == 0 {
        return Err(invalid("r must be positive"));
    }
    for n in r..=T_LINE_GUARD {
        if t_line(n, r)? >= t as i64 {
            return Ok(n);
        }
    }
    Err(Error::ResourceGuard {
        what: "line tolerance table",
        requested: T_LINE_GUARD + 1,
        limit: T_LINE_GUARD,
    })
}

/// `n >= r t + r (d - 2) / 2`, evaluated in integers.
pub fn check_thm_main_inequalities(d: u64, r: u64, t: u64, n: u64) -> bool {
    let (d, r, t, n) = (d as i128, r as i128, t as i128, n as i128);
    2 * n >= 2 * r * t + r * (d - 2)
}

/// Separates the repeated values of [`FIGURE2_VALUES`] by `eps`, starting at
/// `1/1000` and halving until the alternating tetrahedra are certified
/// disjoint. Returns the counterexample and the working `eps`.
pub fn figure2_counterexample() -> Result<(Counterexample, Rational)> {
    let mut eps = frac(1, 1000);
    for _ in 0..32 {
        let alphas = separate_repeats(&FIGURE2_VALUES, &eps);
        if let Some(c) = evaluate_candidate(3, 4, alphas, 0)? {
            return Ok((c, eps));
        }
        eps /= int(2);
    }
    Err(Error::Degenerate(
        "no perturbation down to 2^-32/1000 separates the tetrahedra".into(),
    ))
}
