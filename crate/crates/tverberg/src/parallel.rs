//! Parallel candidate evaluation. Candidates are evaluated in chunks and
//! merged by rank, so the answer is the one the sequential search gives.

use rayon::prelude::*;
use tverberg_core::search::evaluate_candidate;
use tverberg_core::{find_counterexample, Result, SearchOutcome, SearchStrategy};

const CHUNK: u64 = 256;

pub fn par_find_counterexample(
    dim: usize,
    r: usize,
    n: usize,
    strategy: &SearchStrategy,
    budget: u64,
) -> Result<SearchOutcome> {
    if dim == 1 || budget == 0 {
        return find_counterexample(dim, r, n, strategy, budget);
    }
    // argument checks live in the sequential path
    find_counterexample(dim, r, n, strategy, 0)?;
    let mut start = 0;
    while start < budget {
        let end = (start + CHUNK).min(budget);
        let results: Vec<_> = (start..end)
            .into_par_iter()
            .map(|rank| evaluate_candidate(dim, r, strategy.candidate(rank, n, r), rank))
            .collect();
        for res in results {
            if let Some(c) = res? {
                return Ok(SearchOutcome::Found(c));
            }
        }
        start = end;
    }
    Ok(SearchOutcome::NoneFound {
        tried: budget,
        exact: false,
    })
}
