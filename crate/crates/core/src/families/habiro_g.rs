//! The nested sums `G_k`, expandable at `q = 1 - u` or at `q = 0`.

use super::point::{Embedder, Point};
use crate::error::{Error, Result};
use crate::qseries::Series;

pub fn expand_habiro_g(k: u32, n_max: usize) -> Result<Series> {
    habiro_g_at(k, Point::OneMinus, n_max as i64)
}

/// `G_k(q)` as an ordinary power series up to `q^order`.
pub fn habiro_g_q_series(k: u32, order: usize) -> Result<Series> {
    habiro_g_at(k, Point::Zero, order as i64)
}

fn habiro_g_at(k: u32, point: Point, order: i64) -> Result<Series> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let k = k as i64;
    let mut emb = Embedder::new(point, order);
    // n_k <= order in both expansions: at 1 - u through the valuation of
    // (q; q^2)_n, at 0 through the factor q^(n_k).
    let nmax = order;
    let quad = |y: i64| 2 * y * y + 2 * y;
    let mut w: Vec<Series> = (0..=nmax).map(|x| emb.monomial(quad(x), order)).collect();
    for _ in 2..k {
        let mut next = Vec::with_capacity(w.len());
        for y in 0..=nmax {
            let mut acc = Series::zero(order);
            for x in 0..=y {
                if w[x as usize].is_zero() {
                    continue;
                }
                acc.add_assign(&emb.qbinomial(y, x, 2).mul_to(&w[x as usize], order));
            }
            next.push(emb.mul_monomial(&acc, quad(y)));
        }
        w = next;
    }

    let mut total = Series::zero(order);
    let mut poch = Series::one(order);
    for n in 0..=nmax {
        if n > 0 {
            poch = poch.mul_to(&emb.one_minus_power(2 * n as u64 - 1), order);
        }
        let lead = emb.mul_monomial(&poch, n);
        let Some(v) = lead.valuation() else { break };
        let limit = order - v;
        let inner = if k == 1 {
            Series::one(limit)
        } else {
            let mut inner = Series::zero(limit);
            for x in 0..=n {
                if w[x as usize].is_zero() {
                    continue;
                }
                inner.add_assign(&emb.qbinomial(n, x, 2).mul_to(&w[x as usize], limit));
            }
            inner
        };
        total.add_assign(&lead.mul_to(&inner, order));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::transform_h;

    #[test]
    fn table_rows() {
        let h1 = transform_h(&expand_habiro_g(1, 5).unwrap());
        assert_eq!(h1, Series::from_i64s(&[1, 2, 6, 34, 278, 2978]));
        let h2 = transform_h(&expand_habiro_g(2, 4).unwrap());
        assert_eq!(h2, Series::from_i64s(&[1, 4, 20, 180, 2420]));
    }

    #[test]
    fn q_expansion_k1() {
        // sum_n q^n (q; q^2)_n = 1 + q - q^5 - q^8 + q^16 + ...
        let s = habiro_g_q_series(1, 5).unwrap();
        assert_eq!(s.dense(), Series::from_i64s(&[1, 1, 0, 0, 0, -1]).dense());
    }
}
