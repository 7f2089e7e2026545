//! Worker-count resolution and pool construction.

use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::error::{HarnessError, HarnessResult};

pub const JOBS_ENV: &str = "BEI_JOBS";

/// `BEI_JOBS` overrides the flag; without either, the available parallelism.
pub fn resolve_workers(flag: Option<usize>) -> HarnessResult<usize> {
    resolve_from(flag, std::env::var(JOBS_ENV).ok().as_deref())
}

fn resolve_from(flag: Option<usize>, env: Option<&str>) -> HarnessResult<usize> {
    let n = match env.map(str::trim).filter(|s| !s.is_empty()) {
        Some(text) => text.parse::<usize>().map_err(|_| HarnessError::Workers(text.to_string()))?,
        None => match flag {
            Some(k) => k,
            None => std::thread::available_parallelism().map_or(1, |p| p.get()),
        },
    };
    if n == 0 {
        return Err(HarnessError::Workers("0".into()));
    }
    Ok(n)
}

pub fn pool(workers: usize) -> ThreadPool {
    ThreadPoolBuilder::new()
        .num_threads(workers)
        .thread_name(|k| format!("bei-worker-{k}"))
        .build()
        .expect("thread pool")
}
