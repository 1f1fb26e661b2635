//! The coefficient sequences `C_n`, `B_n` and `xi(n)` produced by the theta side.
//!
//! Everything is kept over a common denominator so the inner sums run on
//! integers:
//!
//! `C_n = (-1)^(n+1) M^(2n+nu)/(2n+nu+1) sum_m f(m) B_(2n+nu+1)(m/M)`,
//! `B_n = b^-n sum_k C(n,k) a^(n-k) C_k`,
//! `xi(n) = (1/n!) sum_j S(n,j) B_j`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::identity::StrangeIdentity;
use crate::arith::bernoulli::bernoulli_table;
use crate::arith::stirling::stirling_rows;
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::qseries::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSequence {
    values: Vec<BigRational>,
}

impl CSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> &BigRational {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// `B_n = numerators[n] / (denominator b^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSequence {
    numerators: Vec<BigInt>,
    denominator: BigInt,
    b: BigInt,
}

impl BSequence {
    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn get(&self, n: usize) -> BigRational {
        let d = &self.denominator * num_traits::pow(self.b.clone(), n);
        BigRational::new(self.numerators[n].clone(), d)
    }

    pub fn values(&self) -> Vec<BigRational> {
        (0..self.len()).map(|n| self.get(n)).collect()
    }
}

/// `C_0, ..., C_n_max`.
pub fn c_sequence(id: &StrangeIdentity, n_max: usize) -> CSequence {
    let f = id.f();
    let nu = id.nu() as usize;
    let m = BigInt::from(f.period());
    let s_max = 2 * n_max + nu + 1;
    let bern = bernoulli_table(s_max + 1);
    let l = bern[..=s_max]
        .iter()
        .fold(BigInt::one(), |acc, b| acc.lcm(b.denom()));
    let bs: Vec<BigInt> = bern[..=s_max]
        .iter()
        .map(|b| b.numer() * (&l / b.denom()))
        .collect();
    let d = f.denominator();
    // P_e = sum_m (D f(m)) m^e over one period, m = 1..=M
    let mut p = vec![BigInt::zero(); s_max + 1];
    for (r, v) in f.support() {
        let r = if r == 0 { m.clone() } else { BigInt::from(r) };
        let w = v.numer() * (&d / v.denom());
        let mut pow = w;
        for pe in p.iter_mut() {
            *pe += &pow;
            pow *= &r;
        }
    }
    let mut m_pow = vec![BigInt::one()];
    for j in 1..=s_max {
        let next = &m_pow[j - 1] * &m;
        m_pow.push(next);
    }
    let values = (0..=n_max)
        .map(|n| {
            let s = 2 * n + nu + 1;
            // M^s sum_m f(m) B_s(m/M) D L = sum_j C(s,j) (L B_j) M^j P_(s-j)
            let mut t = BigInt::zero();
            let mut c = BigInt::one();
            for j in 0..=s {
                if j > 0 {
                    c = c * BigInt::from(s - j + 1) / BigInt::from(j);
                }
                if !bs[j].is_zero() {
                    t += &c * &bs[j] * &m_pow[j] * &p[s - j];
                }
            }
            let den = BigInt::from(s) * &d * &l * &m;
            let v = BigRational::new(t, den);
            if n % 2 == 0 {
                -v
            } else {
                v
            }
        })
        .collect();
    CSequence { values }
}

/// `B_0, ..., B_(C.len()-1)`.
pub fn b_sequence(id: &StrangeIdentity, c: &CSequence) -> BSequence {
    let den = c
        .values()
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let cs: Vec<BigInt> = c
        .values()
        .iter()
        .map(|v| v.numer() * (&den / v.denom()))
        .collect();
    let a = id.a();
    let mut a_pow = vec![BigInt::one()];
    for k in 1..cs.len() {
        let next = &a_pow[k - 1] * a;
        a_pow.push(next);
    }
    let numerators = (0..cs.len())
        .map(|n| {
            let mut s = BigInt::zero();
            let mut bin = BigInt::one();
            for k in 0..=n {
                if k > 0 {
                    bin = bin * BigInt::from(n - k + 1) / BigInt::from(k);
                }
                s += &bin * &a_pow[n - k] * &cs[k];
            }
            s
        })
        .collect();
    BSequence {
        numerators,
        denominator: den,
        b: id.b().clone(),
    }
}

/// `xi(0), ..., xi(b.len()-1)`; any non-integral value is an error.
///
/// `xi(0)` is taken to be `B_0`.
pub fn xi_from_theta(b: &BSequence) -> Result<Series> {
    let n_terms = b.len();
    if n_terms == 0 {
        return Ok(Series::zero(-1));
    }
    let rows = stirling_rows(n_terms);
    let mut out = Vec::with_capacity(n_terms);
    let b0 = b.get(0);
    if !b0.is_integer() {
        return Err(Error::NonIntegral { index: 0, value: b0.to_string() });
    }
    out.push(b0.to_integer());
    let mut b_pow = vec![BigInt::one()];
    for j in 1..n_terms {
        let next = &b_pow[j - 1] * &b.b;
        b_pow.push(next);
    }
    let mut fact = BigInt::one();
    for n in 1..n_terms {
        fact *= BigInt::from(n);
        // xi(n) n! D b^n = sum_j S(n,j) b^(n-j) num_j
        let mut s = BigInt::zero();
        for j in 1..=n {
            s += &rows[n][j] * &b_pow[n - j] * &b.numerators[j];
        }
        let den = &fact * &b.denominator * &b_pow[n];
        let (q, r) = s.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::NonIntegral {
                index: n,
                value: BigRational::new(s, den).to_string(),
            });
        }
        out.push(q);
    }
    Ok(Series::new(0, out, n_terms as i64 - 1))
}

/// `xi(0..=n_max)` computed entirely from the theta side.
pub fn theta_xi(id: &StrangeIdentity, n_max: usize) -> Result<Series> {
    let c = c_sequence(id, n_max);
    xi_from_theta(&b_sequence(id, &c))
}

/// `B_n` straight from the definition, without rescaling.
pub fn b_sequence_naive(id: &StrangeIdentity, n_max: usize) -> Vec<BigRational> {
    let c = c_sequence(id, n_max);
    let a = BigRational::from_integer(id.a().clone());
    let b = BigRational::from_integer(id.b().clone());
    (0..=n_max)
        .map(|n| {
            let mut s = BigRational::zero();
            for k in 0..=n {
                s += BigRational::from_integer(binomial(n as u64, k as u64))
                    * num_traits::pow(a.clone(), n - k)
                    * c.get(k);
            }
            s / num_traits::pow(b.clone(), n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bernoulli_poly;
    use crate::families::FamilySpec;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn c_literal(id: &StrangeIdentity, n: usize) -> BigRational {
        let m = id.f().period();
        let s = 2 * n + id.nu() as usize + 1;
        let mut sum = BigRational::zero();
        for r in 1..=m {
            let x = BigRational::new(r.into(), m.into());
            sum += id.f().at(r as i64) * bernoulli_poly(s, &x);
        }
        let scale = num_traits::pow(BigRational::from_integer(m.into()), s - 1);
        let v = sum * scale / BigRational::from_integer(s.into());
        if n.is_multiple_of(2) {
            -v
        } else {
            v
        }
    }

    #[test]
    fn kontsevich_c_and_b() {
        let id = StrangeIdentity::for_family(&FamilySpec::Kontsevich).unwrap();
        let c = c_sequence(&id, 4);
        let c_int: Vec<BigInt> = c.values().iter().map(|v| v.to_integer()).collect();
        assert_eq!(&c_int[..3], &ints(&[1, 23, 1681])[..]);
        assert!(c.values().iter().all(|v| v.is_integer()));
        let b = b_sequence(&id, &c);
        let bv = b.values();
        assert_eq!(bv[0], BigRational::one());
        assert_eq!(bv[1], BigRational::one());
        assert_eq!(bv[2], BigRational::from_integer(3.into()));
        assert_eq!(bv, b_sequence_naive(&id, 4));
    }

    #[test]
    fn efficient_c_matches_definition() {
        let specs = [
            FamilySpec::TorusKnot32t { t: 2 },
            FamilySpec::TorusKnot2 { m: 3, ell: 1 },
            FamilySpec::HabiroG { k: 2 },
        ];
        for s in &specs {
            let id = StrangeIdentity::for_family(s).unwrap();
            let c = c_sequence(&id, 6);
            for n in 0..=6 {
                assert_eq!(c.get(n), &c_literal(&id, n), "{s:?} n={n}");
            }
        }
    }

    #[test]
    fn kontsevich_xi() {
        let id = StrangeIdentity::for_family(&FamilySpec::Kontsevich).unwrap();
        let xi = theta_xi(&id, 8).unwrap();
        assert_eq!(xi.dense(), ints(&[1, 1, 2, 5, 15, 53, 217, 1014, 5335]));
    }

    #[test]
    fn perturbed_identity_is_not_integral() {
        let id = StrangeIdentity::for_family(&FamilySpec::Kontsevich).unwrap();
        let bad = id.with_a(id.a() + 1);
        assert!(matches!(theta_xi(&bad, 6), Err(Error::NonIntegral { .. })));
    }
}
