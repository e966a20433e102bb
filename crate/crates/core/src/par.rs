//! Data-parallel map over independent work items. With the `parallel`
//! feature this runs on a dedicated rayon pool; otherwise, or with a single
//! worker, it runs in order on the calling thread.

#[cfg(feature = "parallel")]
use std::sync::Arc;

#[derive(Clone)]
pub struct Executor {
    workers: usize,
    #[cfg(feature = "parallel")]
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl std::fmt::Debug for Executor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Executor")
            .field("workers", &self.workers)
            .field("parallel", &self.is_parallel())
            .finish()
    }
}

impl Default for Executor {
    fn default() -> Self {
        Executor::sequential()
    }
}

impl Executor {
    pub fn sequential() -> Self {
        Executor {
            workers: 1,
            #[cfg(feature = "parallel")]
            pool: None,
        }
    }

    /// An executor with `workers` threads. Zero is treated as one.
    pub fn with_workers(workers: usize) -> Self {
        let workers = workers.max(1);
        if workers == 1 {
            return Executor::sequential();
        }
        #[cfg(feature = "parallel")]
        {
            match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                Ok(pool) => Executor {
                    workers,
                    pool: Some(Arc::new(pool)),
                },
                Err(e) => {
                    log::warn!("could not start {workers} workers ({e}); running sequentially");
                    Executor::sequential()
                }
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            log::debug!("built without the `parallel` feature; ignoring {workers} workers");
            Executor { workers }
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn is_parallel(&self) -> bool {
        #[cfg(feature = "parallel")]
        {
            self.pool.is_some()
        }
        #[cfg(not(feature = "parallel"))]
        {
            false
        }
    }

    /// Applies `f` to every item; the output keeps the input order.
    pub fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(usize, &T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect());
        }
        items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
}
