//! Prime generation: a plain Eratosthenes sieve for small bounds and a
//! segmented variant whose fixed segment geometry makes parallel scans
//! reproducible — workers claim segments in any order, results are merged by
//! ascending segment index.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Fixed segment width for parallel prime scans. The value is part of the
/// determinism contract only in the sense that per-segment results are merged
/// in ascending order; any width gives the same aggregate.
pub const SEGMENT_WIDTH: u64 = 1 << 16;

/// All primes `<= limit` by plain Eratosthenes; intended for `limit` up to a
/// few million (base primes, certification budgets, tests).
pub fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for q in 2..=n {
        if composite[q] {
            continue;
        }
        primes.push(q as u64);
        let mut m = q * q;
        while m <= n {
            composite[m] = true;
            m += q;
        }
    }
    primes
}

/// Primes in the half-open range `[lo, hi)`, given base primes covering
/// `sqrt(hi)`.
pub fn segment_primes(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    let lo = lo.max(2);
    if hi <= lo {
        return Vec::new();
    }
    let len = (hi - lo) as usize;
    let mut composite = vec![false; len];
    for &q in base {
        if q * q >= hi {
            break;
        }
        let start = (q * q).max(lo.div_ceil(q) * q);
        let mut m = start;
        while m < hi {
            composite[(m - lo) as usize] = true;
            m += q;
        }
    }
    (0..len).filter(|&i| !composite[i]).map(|i| lo + i as u64).collect()
}

/// Applies `map` to the primes of each segment of `[2, limit]` on `workers`
/// threads and returns the per-segment results in ascending segment order,
/// independent of scheduling.
pub fn scan_primes_segmented<T, F>(limit: u64, workers: usize, map: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[u64]) -> T + Sync,
{
    if limit < 2 {
        return Vec::new();
    }
    let base = simple_sieve(limit.sqrt_floor());
    let n_segments = (limit / SEGMENT_WIDTH + 1) as usize;
    let slots: Vec<Mutex<Option<T>>> = (0..n_segments).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = workers.max(1).min(n_segments);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= n_segments {
                    break;
                }
                let lo = idx as u64 * SEGMENT_WIDTH;
                let hi = (lo + SEGMENT_WIDTH).min(limit + 1);
                let primes = segment_primes(lo, hi, &base);
                let value = map(&primes);
                *slots[idx].lock().unwrap() = Some(value);
            });
        }
    });

    slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("every segment computed"))
        .collect()
}

trait SqrtFloor {
    fn sqrt_floor(self) -> u64;
}

impl SqrtFloor for u64 {
    fn sqrt_floor(self) -> u64 {
        if self < 2 {
            return self;
        }
        // No u64 square root exceeds 2³² − 1, and clamping the float seed
        // there keeps r·r from overflowing in the correction loop.
        let mut r = ((self as f64).sqrt() as u64).min((1u64 << 32) - 1);
        while r * r > self {
            r -= 1;
        }
        while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= self) {
            r += 1;
        }
        r
    }
}
