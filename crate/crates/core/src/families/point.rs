//! Where a q-series is expanded: at `q = 1 - u` (in powers of `u`) or at `q = 0`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::qseries::{one_minus_q_power, one_minus_u_power, qbinomial, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Point {
    /// Powers of `u` with `q = 1 - u`.
    OneMinus,
    /// Ordinary powers of `q`.
    Zero,
}

/// Memoized images of monomials and Gaussian binomials at a fixed order.
pub(crate) struct Embedder {
    point: Point,
    order: i64,
    // OneMinus: rows[base][n][k] built by the q-Pascal rule.
    rows: [Vec<Vec<Series>>; 2],
    qbin: HashMap<(i64, i64, i64), Series>,
}

impl Embedder {
    pub fn new(point: Point, order: i64) -> Self {
        Embedder {
            point,
            order,
            rows: [Vec::new(), Vec::new()],
            qbin: HashMap::new(),
        }
    }

    /// `q^e` truncated at `limit <= order`.
    pub fn monomial(&self, e: i64, limit: i64) -> Series {
        match self.point {
            Point::OneMinus => one_minus_u_power(e, limit),
            Point::Zero => Series::monomial(e, BigInt::one(), limit),
        }
    }

    /// `q^e * s`, truncated at the order of `s`.
    pub fn mul_monomial(&self, s: &Series, e: i64) -> Series {
        match self.point {
            Point::Zero => {
                let shifted = s.shift(e);
                if e >= 0 {
                    shifted.truncate(s.order())
                } else {
                    shifted
                }
            }
            Point::OneMinus => {
                if (0..=8).contains(&e) {
                    let mut r = s.clone();
                    for _ in 0..e {
                        r.mul_one_minus_u();
                    }
                    r
                } else {
                    s.mul_to(&one_minus_u_power(e, s.order()), s.order())
                }
            }
        }
    }

    /// `1 - q^a` for `a >= 1`.
    pub fn one_minus_power(&self, a: u64) -> Series {
        match self.point {
            Point::OneMinus => one_minus_q_power(a, self.order),
            Point::Zero => {
                let mut s = Series::one(self.order);
                s.sub_assign(&Series::monomial(a as i64, BigInt::one(), self.order));
                s
            }
        }
    }

    /// `[n, k]` in `q^base` at the full order.
    pub fn qbinomial(&mut self, n: i64, k: i64, base: i64) -> &Series {
        match self.point {
            Point::Zero => {
                let order = self.order;
                self.qbin
                    .entry((n, k, base))
                    .or_insert_with(|| qbinomial(n, k, base).to_series(order))
            }
            Point::OneMinus => {
                let b = (base - 1) as usize;
                if k < 0 || k > n {
                    let order = self.order;
                    return self.qbin.entry((-1, -1, base)).or_insert_with(|| Series::zero(order));
                }
                while self.rows[b].len() as i64 <= n {
                    self.extend_row(b, base);
                }
                &self.rows[b][n as usize][k as usize]
            }
        }
    }

    fn extend_row(&mut self, b: usize, base: i64) {
        let n = self.rows[b].len();
        let mut row = Vec::with_capacity(n + 1);
        if n == 0 {
            row.push(Series::one(self.order));
        } else {
            let prev = &self.rows[b][n - 1];
            for k in 0..=n {
                // [n, k] = [n-1, k-1] + q^(base k) [n-1, k]
                let mut s = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    Series::zero(self.order)
                };
                if k < n {
                    s.add_assign(&self.mul_monomial(&prev[k], base * k as i64));
                }
                row.push(s);
            }
        }
        self.rows[b].push(row);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::substitute_one_minus;

    #[test]
    fn pascal_table_matches_substitution() {
        let mut e = Embedder::new(Point::OneMinus, 7);
        for base in [1, 2] {
            for n in 0..=12 {
                for k in 0..=n {
                    let direct = substitute_one_minus(&qbinomial(n, k, base), 7);
                    assert_eq!(e.qbinomial(n, k, base), &direct, "n={n} k={k} base={base}");
                }
            }
        }
        assert!(e.qbinomial(3, 5, 1).is_zero());
    }

    #[test]
    fn monomials() {
        let e = Embedder::new(Point::OneMinus, 5);
        let s = Series::from_i64s(&[1, 2, 3, 4, 5, 6]);
        for p in [0, 3, 9, 17, -4] {
            assert_eq!(e.mul_monomial(&s, p), s.mul(&one_minus_u_power(p, 5)));
        }
        let z = Embedder::new(Point::Zero, 5);
        assert_eq!(z.mul_monomial(&s, 2).dense(), Series::from_i64s(&[0, 0, 1, 2, 3, 4]).dense());
    }
}
