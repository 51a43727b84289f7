//! Execution policy for the data-parallel loops.
//!
//! With the `parallel` feature (default) batch loops run on the rayon pool
//! unless the policy is switched to [`Execution::Sequential`]. Without the
//! feature every loop is sequential.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

static POLICY: AtomicU8 = AtomicU8::new(1);

pub fn set_execution(exec: Execution) {
    POLICY.store(exec as u8, Ordering::Relaxed);
}

pub fn execution() -> Execution {
    match POLICY.load(Ordering::Relaxed) {
        0 => Execution::Sequential,
        _ => Execution::Parallel,
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if execution() == Execution::Parallel && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Runs `op` inside a pool of `jobs` threads (or inline when sequential).
pub fn with_jobs<R: Send>(jobs: Option<usize>, op: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs.filter(|&n| n > 0) {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            return pool.install(op);
        }
    }
    let _ = jobs;
    op()
}
