//! Small numeric helpers shared across modules.

/// Compensated (Neumaier) summation: returns the sum of `terms` with the
/// accumulated rounding error folded back in. Order-sensitive inputs stay
/// deterministic because the iteration order is the caller's.
pub(crate) fn neumaier_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in terms {
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    sum + comp
}

/// `count` evenly spaced values from `start` to `stop` inclusive.
///
/// Node `k` is `start + k*(stop-start)/(count-1)` with the last node forced
/// to `stop` exactly, so the endpoints never drift. `count = 1` yields
/// `[start]`.
pub(crate) fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![start];
    }
    let step = (stop - start) / (count - 1) as f64;
    (0..count)
        .map(|k| {
            if k == count - 1 {
                stop
            } else {
                start + k as f64 * step
            }
        })
        .collect()
}
