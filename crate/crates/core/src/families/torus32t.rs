//! The series attached to the torus knots `T(3, 2^t)`.
//!
//! The inner sum over tuples `(j_1, ..., j_{m-1})` is organized as a
//! dynamic program over `l = m-1, ..., 1` whose state is the residue of
//! `sum j_l l` modulo `m`, plus a flag recording whether `l <= k` yet (this
//! folds the outer sum over `k` into the same pass). The quotient part of
//! `sum j_l l` is pushed into the series as a power of `q` on every step.

use super::fishburn::expand_fishburn;
use super::point::{Embedder, Point};
use crate::error::{Error, Result};
use crate::qseries::Series;

/// `(m, a, h'', h')` for the given `t`.
pub fn torus32t_constants(t: u32) -> (i64, i64, i64, i64) {
    let p = 1i64 << t;
    let m = p / 2;
    if t.is_multiple_of(2) {
        (m, (m + 1) / 3, (p - 1) / 3, (p - 4) / 3)
    } else {
        (m, (p + 1) / 3, (p - 2) / 3, (p - 5) / 3)
    }
}

pub fn expand_torus32t(t: u32, n_max: usize) -> Result<Series> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    if t == 1 {
        return Ok(expand_fishburn(n_max));
    }
    torus32t_sum(t, n_max)
}

/// The defining sum for any `t >= 1` (for `t = 1` the tuple is empty).
pub(crate) fn torus32t_sum(t: u32, n_max: usize) -> Result<Series> {
    if t > 20 {
        return Err(Error::InvalidParameter(format!("t = {t} is too large")));
    }
    let (m, a, h2, h1) = torus32t_constants(t);
    let order = n_max as i64;
    let mut emb = Embedder::new(Point::OneMinus, order);
    let mut total = Series::zero(order);
    let mut poch = Series::one(order);
    let minus = |s: Series, odd: bool| if odd { s.neg() } else { s };

    // w[top][j] = (-1)^j q^C(j,2) [top, j]
    let mut weights: Vec<Vec<Series>> = Vec::new();
    for top in 0..=order + 1 {
        let row = (0..=top)
            .map(|j| {
                let s = emb.qbinomial(top, j, 1).clone();
                minus(emb.mul_monomial(&s, j * (j - 1) / 2), j % 2 == 1)
            })
            .collect();
        weights.push(row);
    }

    for n in 0..=order {
        if n > 0 {
            poch = poch.mul_to(&emb.one_minus_power(n as u64), order);
        }
        let limit = order - n;
        let mut low: Vec<Option<Series>> = vec![None; m as usize];
        let mut high: Vec<Option<Series>> = vec![None; m as usize];
        low[0] = Some(Series::one(limit));
        for l in (1..m).rev() {
            // switching here selects k = l
            for r in 0..m as usize {
                if let Some(s) = low[r].clone() {
                    accumulate(&mut high[r], &s);
                }
            }
            low = step(&low, l, m, n, limit, &weights, &emb);
            high = step(&high, l, m, n + 1, limit, &weights, &emb);
        }
        let mut inner = Series::zero(limit);
        for r in 0..m {
            if (3 * r - 1).rem_euclid(m) != 0 {
                continue;
            }
            if (r - a).rem_euclid(m) != 0 {
                return Err(Error::CongruenceFilterViolated {
                    numerator: r - a,
                    denominator: m,
                });
            }
            for s in [&low[r as usize], &high[r as usize]].into_iter().flatten() {
                inner.add_assign(&emb.mul_monomial(s, (r - a) / m));
            }
        }
        total.add_assign(&poch.mul_to(&inner, order));
    }
    let total = emb.mul_monomial(&total, -h1);
    Ok(minus(total, h2 % 2 == 1))
}

fn accumulate(slot: &mut Option<Series>, s: &Series) {
    match slot {
        Some(acc) => acc.add_assign(s),
        None => *slot = Some(s.clone()),
    }
}

fn step(
    states: &[Option<Series>],
    l: i64,
    m: i64,
    top: i64,
    limit: i64,
    weights: &[Vec<Series>],
    emb: &Embedder,
) -> Vec<Option<Series>> {
    let mut out: Vec<Option<Series>> = vec![None; m as usize];
    for (r, s) in states.iter().enumerate() {
        let Some(s) = s else { continue };
        for j in 0..=top {
            let v = r as i64 + j * l;
            let term = s.mul_to(&weights[top as usize][j as usize], limit);
            let term = emb.mul_monomial(&term, v / m);
            accumulate(&mut out[(v % m) as usize], &term);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{inverse_g, transform_g};

    #[test]
    fn constants() {
        assert_eq!(torus32t_constants(1), (1, 1, 0, -1));
        assert_eq!(torus32t_constants(2), (2, 1, 1, 0));
        assert_eq!(torus32t_constants(3), (4, 3, 2, 1));
        for t in 2..12 {
            let (m, a, _, _) = torus32t_constants(t);
            assert_eq!((3 * a) % m, 1 % m);
        }
    }

    #[test]
    fn t1_sum_is_fishburn() {
        assert_eq!(torus32t_sum(1, 12).unwrap(), expand_fishburn(12));
        assert_eq!(expand_torus32t(1, 5).unwrap(), Series::from_i64s(&[1, 1, 2, 5, 15, 53]));
    }

    #[test]
    fn t2_against_inverted_table_row() {
        let g = Series::from_i64s(&[1, 3, 8, 31, 160, 1029, 7910]);
        let xi = expand_torus32t(2, 6).unwrap();
        assert_eq!(xi, inverse_g(&g));
        assert_eq!(transform_g(&xi), g);
    }

    #[test]
    fn rejects_t0() {
        assert!(matches!(expand_torus32t(0, 3), Err(Error::InvalidParameter(_))));
    }
}
