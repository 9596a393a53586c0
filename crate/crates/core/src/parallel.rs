//! Order-preserving split of an index range across scoped worker threads.

use std::ops::Range;

/// Runs `f` on `workers` contiguous slices of `0..len` and returns the results
/// in slice order, so any order-insensitive merge is independent of the
/// worker count. With one worker no thread is spawned.
pub fn map_chunks<T, F>(len: u64, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
{
    let workers = workers.max(1) as u64;
    if workers == 1 || len < 2 {
        return vec![f(0..len)];
    }
    let chunks = workers.min(len);
    let bounds: Vec<Range<u64>> = (0..chunks)
        .map(|k| (len * k / chunks)..(len * (k + 1) / chunks))
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .into_iter()
            .map(|r| {
                let f = &f;
                scope.spawn(move || f(r))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Maps every item, preserving order.
pub fn map_items<I, T, F>(items: &[I], workers: usize, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync,
{
    map_chunks(items.len() as u64, workers, |r| {
        items[r.start as usize..r.end as usize]
            .iter()
            .map(&f)
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Number of hardware threads, at least one.
pub fn available_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
