//! The series `X_m^(l)` attached to the torus knots `T(2, 2m+1)`.
//!
//! The nested sum is evaluated from the inside out: `W_i(y)` collects all
//! terms with `k_i = y` over the indices `k_1, ..., k_{i-1}`.

use super::fishburn::expand_fishburn;
use super::point::{Embedder, Point};
use crate::error::{Error, Result};
use crate::qseries::Series;

pub fn expand_torus2(m: u32, ell: u32, n_max: usize) -> Result<Series> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if ell >= m {
        return Err(Error::InvalidParameter(format!(
            "l = {ell} outside 0..={}",
            m - 1
        )));
    }
    if m == 1 {
        return Ok(expand_fishburn(n_max));
    }
    let (m, ell) = (m as i64, ell as i64);
    let order = n_max as i64;
    let delta = |i: i64| i64::from(i == ell);
    let lin = |i: i64| i64::from(i > ell);
    let mut emb = Embedder::new(Point::OneMinus, order);
    let ymax = order + 1;

    let mut w: Vec<Series> = (0..=ymax)
        .map(|x| emb.monomial(x * x + lin(1) * x, order))
        .collect();
    for i in 2..m {
        let d = delta(i - 1);
        let mut next = Vec::with_capacity(w.len());
        for y in 0..=ymax {
            let mut acc = Series::zero(order);
            for x in 0..=(y + d).min(ymax) {
                acc.add_assign(&emb.qbinomial(y + d, x, 1).mul_to(&w[x as usize], order));
            }
            next.push(emb.mul_monomial(&acc, y * y + lin(i) * y));
        }
        w = next;
    }

    let d = delta(m - 1);
    let mut total = Series::zero(order);
    let mut poch = Series::one(order);
    for n in 0..=order {
        if n > 0 {
            poch = poch.mul_to(&emb.one_minus_power(n as u64), order);
        }
        let limit = order - n;
        let mut inner = Series::zero(limit);
        for x in 0..=(n + d) {
            inner.add_assign(&emb.qbinomial(n + d, x, 1).mul_to(&w[x as usize], limit));
        }
        total.add_assign(&poch.mul_to(&inner, order));
    }
    Ok(total)
}
