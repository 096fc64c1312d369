use rayon::prelude::*;

/// Maps `f` over `items`, on `jobs` worker threads when `jobs > 1`. Each
/// worker owns a state built by `init` (a shuffle memo, typically).
pub(crate) fn map_with<T, S, R, I, F>(jobs: usize, items: &[T], init: I, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> R + Sync + Send,
{
    if jobs <= 1 {
        let mut state = init();
        return items.iter().map(|item| f(&mut state, item)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map_init(&init, |state, item| f(state, item)).collect())
}
