//! The argument changes `q -> 1/(1+q)` and `q -> (1-q)/(1+q)` applied to a
//! `1 - q` expansion.

use num_bigint::BigInt;
use num_traits::Zero;

use super::series::Series;
use crate::arith::binomial;

fn dense_xi(xi: &Series) -> Vec<BigInt> {
    assert!(xi.min_degree() >= 0 || xi.coeffs().iter().take((-xi.min_degree()) as usize).all(Zero::is_zero));
    xi.dense()
}

/// `g(n) = sum_{l=0}^{n-1} (-1)^l C(n-1, l) xi(n-l)`, with `g(0) = xi(0)`.
pub fn transform_g(xi: &Series) -> Series {
    let x = dense_xi(xi);
    let mut out = Vec::with_capacity(x.len());
    for n in 0..x.len() {
        if n == 0 {
            out.push(x[0].clone());
            continue;
        }
        let mut acc = BigInt::zero();
        for l in 0..n {
            let term = binomial(n as u64 - 1, l as u64) * &x[n - l];
            if l % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        out.push(acc);
    }
    Series::from_coeffs(out)
}

/// Inverse of [`transform_g`]: `xi(n) = sum_{l=0}^{n-1} C(n-1, l) g(n-l)`.
pub fn inverse_g(g: &Series) -> Series {
    let x = g.dense();
    let mut out = Vec::with_capacity(x.len());
    for n in 0..x.len() {
        if n == 0 {
            out.push(x[0].clone());
            continue;
        }
        let mut acc = BigInt::zero();
        for l in 0..n {
            acc += binomial(n as u64 - 1, l as u64) * &x[n - l];
        }
        out.push(acc);
    }
    Series::from_coeffs(out)
}

/// Coefficients of `F((1-q)/(1+q))`: the `xi` series composed with `2q/(1+q)`.
pub fn transform_h(xi: &Series) -> Series {
    let x = dense_xi(xi);
    let order = x.len() as i64 - 1;
    // w = 2q/(1+q) = sum_{i>=1} 2 (-1)^(i-1) q^i
    let w: Vec<BigInt> = (0..=order)
        .map(|i| match i {
            0 => BigInt::zero(),
            _ if i % 2 == 1 => BigInt::from(2),
            _ => BigInt::from(-2),
        })
        .collect();
    let w = Series::from_coeffs(w);
    let mut acc = Series::zero(order);
    for c in x.iter().rev() {
        acc = acc.mul(&w);
        acc.add_assign(&Series::monomial(0, c.clone(), order));
    }
    Series::new(0, acc.dense(), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FISHBURN: [i64; 9] = [1, 1, 2, 5, 15, 53, 217, 1014, 5335];

    #[test]
    fn fishburn_g_and_h() {
        let xi = Series::from_i64s(&FISHBURN);
        assert_eq!(transform_g(&xi), Series::from_i64s(&[1, 1, 1, 2, 5, 16, 61, 271, 1372]));
        assert_eq!(
            transform_h(&xi),
            Series::from_i64s(&[1, 2, 6, 26, 142, 946, 7446, 67658, 697118])
        );
    }

    #[test]
    fn constants_are_fixed() {
        let one = Series::from_i64s(&[1, 0, 0, 0, 0]);
        assert_eq!(transform_g(&one), one);
        assert_eq!(transform_h(&one), one);
    }

    #[test]
    fn h_matches_closed_form() {
        let xi = Series::from_i64s(&[3, -1, 4, 1, -5, 9, 2, -6]);
        let h = transform_h(&xi);
        let x = xi.dense();
        for n in 1..x.len() {
            let mut acc = BigInt::zero();
            for j in 1..=n {
                let t = binomial(n as u64 - 1, (n - j) as u64) * &x[j] * (BigInt::from(1) << j);
                if (n - j) % 2 == 0 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            assert_eq!(h.coeff(n as i64), acc, "n={n}");
        }
    }
}
