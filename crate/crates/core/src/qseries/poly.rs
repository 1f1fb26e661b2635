//! Exact Laurent polynomials, Gaussian binomials and the substitution `q = 1 - u`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::Series;

/// `sum_i coeffs[i] q^(min_exp + i)` with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        LaurentPoly { min_exp, coeffs }.trimmed()
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(e: i64, c: BigInt) -> Self {
        LaurentPoly::new(e, vec![c])
    }

    pub fn from_i64s(min_exp: i64, v: &[i64]) -> Self {
        LaurentPoly::new(min_exp, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return LaurentPoly::zero();
        }
        self.coeffs.drain(..lead);
        self.min_exp += lead as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.min_exp {
            return BigInt::zero();
        }
        self.coeffs
            .get((e - self.min_exp) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + other.coeff(e)).collect();
        LaurentPoly::new(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        LaurentPoly::new(self.min_exp + other.min_exp, out)
    }

    /// `p(q) -> p(q^k)` for `k >= 1`.
    pub fn spread(&self, k: i64) -> Self {
        assert!(k >= 1);
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * k as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k as usize] = c.clone();
        }
        LaurentPoly::new(self.min_exp * k, out)
    }

    /// Multiply by `1 - q^a`, `a >= 1`.
    fn mul_one_minus(&mut self, a: usize) {
        if self.is_zero() {
            return;
        }
        let n = self.coeffs.len();
        self.coeffs.resize(n + a, BigInt::zero());
        for i in (a..n + a).rev() {
            let t = self.coeffs[i - a].clone();
            self.coeffs[i] -= t;
        }
    }

    /// Exact division by `1 - q^a`, `a >= 1`; the caller guarantees divisibility.
    fn div_one_minus(&mut self, a: usize) {
        if self.is_zero() {
            return;
        }
        // p = (1 - q^a) r  =>  r_i = p_i + r_{i-a}
        let n = self.coeffs.len();
        for i in a..n {
            let t = self.coeffs[i - a].clone();
            self.coeffs[i] += t;
        }
        debug_assert!(self.coeffs[n - a..].iter().all(Zero::is_zero));
        self.coeffs.truncate(n - a);
    }

    /// The series in `q` truncated at `order`.
    pub fn to_series(&self, order: i64) -> Series {
        let keep = (order - self.min_exp + 1).clamp(0, self.coeffs.len() as i64) as usize;
        Series::new(self.min_exp.min(order + 1), {
            let mut v = Vec::new();
            if self.min_exp <= order {
                v.extend_from_slice(&self.coeffs[..keep]);
            }
            v
        }, order)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(e, c)| format!("{c}q^{e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type QBinomialKey = (i64, i64, i64);

static QBINOMIALS: Mutex<Option<HashMap<QBinomialKey, Arc<LaurentPoly>>>> = Mutex::new(None);

/// Gaussian binomial `[n, k]` in `q^base` (`base` is 1 or 2); zero when `k < 0` or `k > n`.
pub fn qbinomial(n: i64, k: i64, base: i64) -> Arc<LaurentPoly> {
    assert!(base == 1 || base == 2, "q-binomial base must be 1 or 2");
    if k < 0 || k > n {
        return Arc::new(LaurentPoly::zero());
    }
    let k = k.min(n - k);
    let key = (n, k, base);
    if let Some(p) = QBINOMIALS
        .lock()
        .expect("q-binomial cache poisoned")
        .as_ref()
        .and_then(|m| m.get(&key))
    {
        return Arc::clone(p);
    }
    let p = if base == 1 {
        // prod_{i=1}^{k} (1 - q^(n-k+i)) / (1 - q^i), dividing as we go keeps
        // every intermediate a polynomial: it is [n-k+i, i] at step i.
        let mut p = LaurentPoly::one();
        for i in 1..=k {
            p.mul_one_minus((n - k + i) as usize);
            p.div_one_minus(i as usize);
        }
        p.trimmed()
    } else {
        qbinomial(n, k, 1).spread(base)
    };
    let p = Arc::new(p);
    QBINOMIALS
        .lock()
        .expect("q-binomial cache poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(key, Arc::clone(&p));
    p
}

/// `(1-u)^e` up to `u^order`; negative `e` gives the binomial series.
pub fn one_minus_u_power(e: i64, order: i64) -> Series {
    let len = order.max(-1) + 1;
    let mut coeffs = Vec::with_capacity(len as usize);
    let mut c = BigInt::one();
    for i in 0..len {
        if i > 0 {
            // C(e, i) (-1)^i = C(e, i-1) (-1)^(i-1) * (i - 1 - e) / i
            c = c * BigInt::from(i - 1 - e) / BigInt::from(i);
        }
        if e >= 0 && i > e {
            break;
        }
        coeffs.push(c.clone());
    }
    Series::new(0, coeffs, order)
}

/// `p(1-u)` expanded up to `u^order`.
pub fn substitute_one_minus(p: &LaurentPoly, order: i64) -> Series {
    let len = (order + 1).max(0) as usize;
    let mut out = vec![BigInt::zero(); len];
    for (e, c) in p.terms() {
        let mut b = BigInt::one();
        for (i, slot) in out.iter_mut().enumerate() {
            let i = i as i64;
            if i > 0 {
                b = b * BigInt::from(i - 1 - e) / BigInt::from(i);
            }
            if e >= 0 && i > e {
                break;
            }
            *slot += c * &b;
        }
    }
    Series::new(0, out, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(*qbinomial(2, 1, 1), LaurentPoly::from_i64s(0, &[1, 1]));
        assert_eq!(*qbinomial(4, 2, 1), LaurentPoly::from_i64s(0, &[1, 1, 2, 1, 1]));
        assert!(qbinomial(1, 3, 1).is_zero());
        assert!(qbinomial(3, -1, 1).is_zero());
        assert_eq!(*qbinomial(0, 0, 1), LaurentPoly::one());
        assert_eq!(*qbinomial(2, 1, 2), LaurentPoly::from_i64s(0, &[1, 0, 1]));
    }

    #[test]
    fn pascal_recurrences() {
        for n in 1..=30i64 {
            for k in 0..=n {
                let lhs = qbinomial(n, k, 1);
                let a = qbinomial(n - 1, k - 1, 1);
                let b = qbinomial(n - 1, k, 1);
                // [n,k] = [n-1,k-1] + q^k [n-1,k]
                assert_eq!(*lhs, a.add(&b.shift(k)), "first recurrence n={n} k={k}");
                // [n,k] = q^(n-k) [n-1,k-1] + [n-1,k]
                assert_eq!(*lhs, a.shift(n - k).add(&b), "second recurrence n={n} k={k}");
            }
        }
    }

    #[test]
    fn substitution() {
        let q = LaurentPoly::monomial(1, BigInt::one());
        assert_eq!(substitute_one_minus(&q, 3).dense(), Series::from_i64s(&[1, -1, 0, 0]).dense());
        let inv = LaurentPoly::monomial(-1, BigInt::one());
        assert_eq!(substitute_one_minus(&inv, 3).dense(), Series::from_i64s(&[1, 1, 1, 1]).dense());
        let p = LaurentPoly::from_i64s(-2, &[3, 0, 1, 5]);
        let direct = substitute_one_minus(&p, 6);
        let mut sum = Series::zero(6);
        for (e, c) in p.terms() {
            sum.add_assign(&one_minus_u_power(e, 6).scale(c));
        }
        assert_eq!(direct, sum);
    }

    #[test]
    fn binomial_series_inverts() {
        for e in 1..6 {
            let p = one_minus_u_power(e, 8).mul(&one_minus_u_power(-e, 8));
            assert_eq!(p.dense(), Series::one(8).dense());
        }
    }
}
