//! Rational-valued periodic weights `f : Z -> Q` and the built-in characters.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Stored sparsely: built-in periods grow like `2^t`, supports stay tiny.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicFunction {
    period: u64,
    entries: BTreeMap<u64, BigRational>,
}

impl PeriodicFunction {
    /// `f(0), ..., f(M-1)` given densely.
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        let period = values.len() as u64;
        let entries = values
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(m, v)| (m as u64, v))
            .collect();
        PeriodicFunction::sparse(period, entries)
    }

    /// Period `m` with the given residues set and zero elsewhere.
    pub fn from_residues(period: u64, entries: &[(i64, BigRational)]) -> Result<Self> {
        if period > i64::MAX as u64 {
            return Err(Error::InvalidParameter(format!("period {period} too large")));
        }
        let mut map = BTreeMap::new();
        for (r, v) in entries {
            map.insert(r.rem_euclid(period.max(1) as i64) as u64, v.clone());
        }
        map.retain(|_, v| !v.is_zero());
        PeriodicFunction::sparse(period, map)
    }

    fn sparse(period: u64, entries: BTreeMap<u64, BigRational>) -> Result<Self> {
        if period < 2 {
            return Err(Error::InvalidParameter(format!("period must be at least 2, got {period}")));
        }
        Ok(PeriodicFunction { period, entries })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Dense `f(0), ..., f(M-1)`.
    pub fn values(&self) -> Vec<BigRational> {
        (0..self.period).map(|m| self.at(m as i64)).collect()
    }

    pub fn at(&self, n: i64) -> BigRational {
        let r = (n as i128).rem_euclid(self.period as i128) as u64;
        self.entries.get(&r).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Residues `0 <= m < M` with `f(m) != 0`, with their values.
    pub fn support(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.entries.iter().map(|(m, v)| (*m, v))
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn max_abs(&self) -> BigRational {
        self.entries
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn mean_is_zero(&self) -> bool {
        self.entries
            .values()
            .fold(BigRational::zero(), |acc, v| acc + v)
            .is_zero()
    }

    fn reflected(&self, m: u64) -> BigRational {
        self.at(-(m as i64))
    }

    pub fn is_even(&self) -> bool {
        self.support().all(|(m, v)| self.reflected(m) == *v)
    }

    pub fn is_odd(&self) -> bool {
        self.support().all(|(m, v)| self.reflected(m) == -v.clone())
    }

    /// Least common denominator of the values.
    pub fn denominator(&self) -> BigInt {
        self.entries
            .values()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }
}

fn half(sign: i64) -> BigRational {
    BigRational::new(BigInt::from(sign), BigInt::from(2))
}

fn unit(sign: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(sign))
}

/// The weight of period `3 * 2^(t+1)` attached to `T(3, 2^t)`.
pub fn make_chi_t(t: u32) -> Result<PeriodicFunction> {
    if t == 0 || t > 60 {
        return Err(Error::InvalidParameter(format!("t = {t} outside 1..=60")));
    }
    let p = 1i64 << (t + 1);
    PeriodicFunction::from_residues(
        3 * p as u64,
        &[
            (p - 3, half(-1)),
            (3 + 2 * p, half(-1)),
            (p + 3, half(1)),
            (2 * p - 3, half(1)),
        ],
    )
}

/// The weight of period `8m + 4` attached to `X_m^(l)`.
pub fn make_chi_m_ell(m: u32, ell: u32) -> Result<PeriodicFunction> {
    if m == 0 || ell >= m {
        return Err(Error::InvalidParameter(format!("need m >= 1 and 0 <= l < m, got m={m}, l={ell}")));
    }
    let (m, l) = (m as i64, ell as i64);
    PeriodicFunction::from_residues(
        (8 * m + 4) as u64,
        &[
            (2 * m - 2 * l - 1, half(-1)),
            (6 * m + 2 * l + 5, half(-1)),
            (2 * m + 2 * l + 3, half(1)),
            (6 * m - 2 * l + 1, half(1)),
        ],
    )
}

/// The odd weight of period `4k + 2` attached to `G_k`.
pub fn make_chi_k(k: u32) -> Result<PeriodicFunction> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let k = k as i64;
    PeriodicFunction::from_residues(
        (4 * k + 2) as u64,
        &[(k, unit(1)), (k + 1, unit(1)), (-k, unit(-1)), (-k - 1, unit(-1))],
    )
}

#[derive(Serialize, Deserialize)]
struct PeriodicJson {
    #[serde(rename = "M")]
    m: u64,
    values: Vec<String>,
}

impl Serialize for PeriodicFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PeriodicJson {
            m: self.period,
            values: self.values().iter().map(|v| v.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PeriodicFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PeriodicJson::deserialize(d)?;
        if raw.values.len() as u64 != raw.m {
            return Err(D::Error::custom(format!(
                "M = {} but {} values given",
                raw.m,
                raw.values.len()
            )));
        }
        let values = raw
            .values
            .iter()
            .map(|s| BigRational::from_str(s.trim()).map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        PeriodicFunction::new(values).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residues(f: &PeriodicFunction) -> Vec<(u64, String)> {
        f.support().map(|(m, v)| (m, v.to_string())).collect()
    }

    #[test]
    fn chi_t_small() {
        let f = make_chi_t(1).unwrap();
        assert_eq!(f.period(), 12);
        assert_eq!(
            residues(&f),
            vec![(1, "-1/2".into()), (5, "1/2".into()), (7, "1/2".into()), (11, "-1/2".into())]
        );
        let f = make_chi_t(2).unwrap();
        assert_eq!(f.period(), 24);
        assert_eq!(
            residues(&f),
            vec![(5, "-1/2".into()), (11, "1/2".into()), (13, "1/2".into()), (19, "-1/2".into())]
        );
    }

    #[test]
    fn chi_m_ell_small() {
        assert_eq!(make_chi_m_ell(1, 0).unwrap(), make_chi_t(1).unwrap());
        let f = make_chi_m_ell(2, 0).unwrap();
        assert_eq!(f.period(), 20);
        assert_eq!(
            residues(&f),
            vec![(3, "-1/2".into()), (7, "1/2".into()), (13, "1/2".into()), (17, "-1/2".into())]
        );
    }

    #[test]
    fn chi_k_small() {
        let f = make_chi_k(1).unwrap();
        assert_eq!(f.period(), 6);
        assert_eq!(
            residues(&f),
            vec![(1, "1".into()), (2, "1".into()), (4, "-1".into()), (5, "-1".into())]
        );
    }

    #[test]
    fn large_periods_stay_sparse() {
        let f = make_chi_t(50).unwrap();
        assert_eq!(f.period(), 3 << 51);
        assert!(f.is_even() && f.mean_is_zero() && f.support_size() == 4);
        assert_eq!(f.at(-1 - (1i64 << 51)), f.at(1 + (1i64 << 51)));
    }

    #[test]
    fn parity_and_mean() {
        for t in 1..=8 {
            let f = make_chi_t(t).unwrap();
            assert!(f.is_even() && f.mean_is_zero() && f.support_size() == 4);
        }
        for m in 1..=8 {
            for l in 0..m {
                let f = make_chi_m_ell(m, l).unwrap();
                assert!(f.is_even() && f.mean_is_zero() && f.support_size() == 4);
            }
        }
        for k in 1..=8 {
            let f = make_chi_k(k).unwrap();
            assert!(f.is_odd() && f.mean_is_zero() && f.support_size() == 4);
        }
    }

    #[test]
    fn json_round_trip() {
        let f = make_chi_t(2).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.contains("\"M\":24") && s.contains("\"-1/2\""));
        let back: PeriodicFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<PeriodicFunction>(r#"{"M":3,"values":["1","0"]}"#).is_err());
        assert!(serde_json::from_str::<PeriodicFunction>(r#"{"M":1,"values":["1"]}"#).is_err());
    }
}
