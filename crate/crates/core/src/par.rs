//! Per-degree fan-out, parallel when the `parallel` feature is on.

#[cfg(feature = "parallel")]
pub(crate) fn map_degrees<T, F>(degrees: impl Iterator<Item = i64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    let ds: Vec<i64> = degrees.collect();
    ds.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_degrees<T, F>(degrees: impl Iterator<Item = i64>, f: F) -> Vec<T>
where
    F: Fn(i64) -> T,
{
    degrees.map(f).collect()
}
