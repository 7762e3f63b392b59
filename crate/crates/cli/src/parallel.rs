//! Candidate evaluation on a rayon pool.
//!
//! Every candidate carries its index so that failures are reported for the
//! first failing candidate in evaluation order, whatever the pool size.

use korolat_core::search::{candidates, finish, Candidate, SearchConfig, SearchResult};
use korolat_core::{Error, Result};
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::error::CliError;

/// `threads == 0` lets rayon pick the number of threads.
pub fn thread_pool(threads: usize) -> std::result::Result<ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::internal(format!("cannot start thread pool: {e}")))
}

type Partial = std::result::Result<Candidate, (usize, Error)>;

fn combine(a: Partial, b: Partial) -> Partial {
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(Candidate::pick(x, y)),
        (Err(e), Ok(_)) | (Ok(_), Err(e)) => Err(e),
        (Err(e), Err(f)) => Err(if e.0 <= f.0 { e } else { f }),
    }
}

/// Same result as [`korolat_core::search::find_good_vector`].
pub fn find_good_vector_in(pool: &ThreadPool, config: &SearchConfig) -> Result<SearchResult> {
    let cands = candidates(config)?;
    let evaluated = cands.len() as u64;
    let budget = config.budget;
    let best = pool.install(|| {
        cands
            .into_par_iter()
            .enumerate()
            .map(|(i, v)| Candidate::evaluate(v, &budget).map_err(|e| (i, e)))
            .reduce_with(combine)
    });
    match best {
        None => Err(Error::EmptySample),
        Some(Err((_, e))) => Err(e),
        Some(Ok(c)) => finish(config, c, evaluated),
    }
}
