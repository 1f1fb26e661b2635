//! Stirling numbers generated by `S(n+1, m) = S(n, m-1) + n S(n, m)`,
//! `S(0, 0) = 1`. These are the unsigned numbers of the first kind, i.e. the
//! coefficients of the rising factorial `x (x+1) ... (x+n-1)`.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

static ROWS: RwLock<Option<Arc<Vec<Vec<BigInt>>>>> = RwLock::new(None);

fn extend(rows: &mut Vec<Vec<BigInt>>, n: usize) {
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n {
        let k = rows.len() - 1;
        let prev = &rows[k];
        let mut next = vec![BigInt::zero(); k + 2];
        for m in 1..=k + 1 {
            let left = &prev[m - 1];
            let right = prev.get(m).map_or_else(BigInt::zero, |v| v * BigInt::from(k));
            next[m] = left + right;
        }
        rows.push(next);
    }
}

/// Rows `0..=n` of the table; row `n` has entries for `m = 0..=n`.
pub fn stirling_rows(n: usize) -> Arc<Vec<Vec<BigInt>>> {
    if let Some(t) = ROWS.read().expect("stirling table poisoned").as_ref() {
        if t.len() > n {
            return Arc::clone(t);
        }
    }
    let mut guard = ROWS.write().expect("stirling table poisoned");
    let mut rows = guard.as_ref().map(|t| (**t).clone()).unwrap_or_default();
    extend(&mut rows, n);
    let rows = Arc::new(rows);
    *guard = Some(Arc::clone(&rows));
    rows
}

/// `S(n, m)`; zero when `m > n`.
pub fn stirling_first(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    stirling_rows(n)[n][m].clone()
}
