//! Cyclotomic splitting of binomials `X^g - 1` and `X^g + 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Coefficients (ascending) of the d-th cyclotomic polynomial. Memoized.
pub(crate) fn cyclotomic(d: u32) -> Arc<[i64]> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("cache lock").get(&d) {
        return c.clone();
    }
    // Computed outside the lock since it recurses.
    let c: Arc<[i64]> = compute(d).into();
    cache
        .lock()
        .expect("cache lock")
        .entry(d)
        .or_insert(c)
        .clone()
}

fn compute(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    // x^d - 1 divided by every Phi_e with e | d, e < d
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in divisors(d) {
        if e == d {
            continue;
        }
        num = div_exact(&num, &cyclotomic(e));
    }
    num
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Indices `d` with `X^g - 1 = prod Phi_d(X)`.
pub(crate) fn minus_one_orders(g: u32) -> Vec<u32> {
    divisors(g)
}

/// Indices `d` with `X^g + 1 = prod Phi_d(X)`: divisors of `2g` that do not divide `g`.
pub(crate) fn plus_one_orders(g: u32) -> Vec<u32> {
    divisors(2 * g)
        .into_iter()
        .filter(|d| !g.is_multiple_of(*d))
        .collect()
}

fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len() - 1;
    let lead = den[dl];
    let mut quo = vec![0i64; num.len() - dl];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dl] / lead;
        quo[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}
