//! Indexed work items with per-item random streams.
//!
//! Item `i` always sees the same generator, seeded from the campaign seed
//! with stream `i`, so results do not depend on scheduling or thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator for work item `index`.
pub fn item_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Maps `f` over `0..count` in index order. `jobs = 1` runs on the calling
/// thread; otherwise a pool of `jobs` threads is used (0 picks the default).
pub fn run_indexed<T, F>(count: u64, seed: u64, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, &mut ChaCha8Rng) -> T + Sync + Send,
{
    if jobs == 1 {
        return run_sequential(count, seed, &f);
    }
    run_parallel(count, seed, jobs, &f)
}

pub fn run_sequential<T, F>(count: u64, seed: u64, f: &F) -> Vec<T>
where
    F: Fn(u64, &mut ChaCha8Rng) -> T,
{
    (0..count).map(|i| f(i, &mut item_rng(seed, i))).collect()
}

#[cfg(feature = "parallel")]
pub fn run_parallel<T, F>(count: u64, seed: u64, jobs: usize, f: &F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, &mut ChaCha8Rng) -> T + Sync + Send,
{
    use rayon::prelude::*;
    let work = || (0..count).into_par_iter().map(|i| f(i, &mut item_rng(seed, i))).collect();
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn run_parallel<T, F>(count: u64, seed: u64, _jobs: usize, f: &F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, &mut ChaCha8Rng) -> T + Sync + Send,
{
    run_sequential(count, seed, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn order_and_values_ignore_thread_count() {
        let f = |i: u64, rng: &mut ChaCha8Rng| (i, rng.gen::<u64>());
        let a = run_indexed(200, 5, 1, f);
        let b = run_indexed(200, 5, 4, f);
        let c = run_indexed(200, 5, 0, f);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_ne!(a[0].1, a[1].1);
        assert_ne!(run_indexed(1, 6, 1, f), a[..1].to_vec());
    }
}
