//! Exact coefficient generators for the built-in families, expanded at `q = 1 - u`.

mod cache;
mod fishburn;
mod habiro_g;
mod point;
mod torus2;
mod torus32t;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use cache::{SeriesCache, CACHE_DIR_ENV};
pub use fishburn::expand_fishburn;
pub use habiro_g::{expand_habiro_g, habiro_g_q_series};
pub use point::Point;
pub use torus2::expand_torus2;
pub use torus32t::{expand_torus32t, torus32t_constants};

use crate::error::{Error, Result};
use crate::qseries::{RationalSeries, Series};
use crate::thetaside::StrangeIdentity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FamilySpec {
    Kontsevich,
    TorusKnot32t { t: u32 },
    TorusKnot2 { m: u32, ell: u32 },
    HabiroG { k: u32 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Kontsevich => Ok(()),
            FamilySpec::TorusKnot32t { t } if t >= 1 => Ok(()),
            FamilySpec::TorusKnot32t { t } => Err(Error::InvalidParameter(format!("t = {t} must be at least 1"))),
            FamilySpec::TorusKnot2 { m, ell } if m >= 1 && ell < m => Ok(()),
            FamilySpec::TorusKnot2 { m, ell } => Err(Error::InvalidParameter(format!(
                "need m >= 1 and 0 <= ell <= m-1, got m = {m}, ell = {ell}"
            ))),
            FamilySpec::HabiroG { k } if k >= 1 => Ok(()),
            FamilySpec::HabiroG { k } => Err(Error::InvalidParameter(format!("k = {k} must be at least 1"))),
        }
    }

    /// `xi(0..=n_max)` from the defining nested sum.
    pub fn expand(&self, n_max: usize) -> Result<Series> {
        self.validate()?;
        match *self {
            FamilySpec::Kontsevich => Ok(expand_fishburn(n_max)),
            FamilySpec::TorusKnot32t { t } => expand_torus32t(t, n_max),
            FamilySpec::TorusKnot2 { m, ell } => expand_torus2(m, ell, n_max),
            FamilySpec::HabiroG { k } => expand_habiro_g(k, n_max),
        }
    }

    pub fn identity(&self) -> Result<StrangeIdentity> {
        StrangeIdentity::for_family(self)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Kontsevich => "kontsevich",
            FamilySpec::TorusKnot32t { .. } => "torus32t",
            FamilySpec::TorusKnot2 { .. } => "torus2",
            FamilySpec::HabiroG { .. } => "habiro-g",
        }
    }

    pub fn params(&self) -> BTreeMap<String, u32> {
        let mut p = BTreeMap::new();
        match *self {
            FamilySpec::Kontsevich => {}
            FamilySpec::TorusKnot32t { t } => {
                p.insert("t".into(), t);
            }
            FamilySpec::TorusKnot2 { m, ell } => {
                p.insert("m".into(), m);
                p.insert("ell".into(), ell);
            }
            FamilySpec::HabiroG { k } => {
                p.insert("k".into(), k);
            }
        }
        p
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Kontsevich => write!(f, "F"),
            FamilySpec::TorusKnot32t { t } => write!(f, "F_{t}"),
            FamilySpec::TorusKnot2 { m, ell } => write!(f, "X_{m}^({ell})"),
            FamilySpec::HabiroG { k } => write!(f, "G_{k}"),
        }
    }
}

/// `sum_{n>=0} n^nu f(n) q^((n^2-a)/b)` up to `q^order`.
pub fn theta_q_expansion(id: &StrangeIdentity, order: usize) -> Result<RationalSeries> {
    id.check_exponents()?;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let limit = BigInt::from(order) * id.b() + id.a();
    let n_max = limit
        .sqrt()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("order too large".into()))?;
    for n in 0..=n_max {
        let v = id.f().at(n as i64);
        if v.is_zero() || (id.nu() == 1 && n == 0) {
            continue;
        }
        let nb = BigInt::from(n);
        let e = (&nb * &nb - id.a()) / id.b();
        let Some(e) = e.to_usize().filter(|&e| e <= order) else { continue };
        let w = if id.nu() == 1 {
            v * BigRational::from_integer(nb)
        } else {
            v.clone()
        };
        coeffs[e] += w;
    }
    Ok(RationalSeries::new(0, coeffs, order as i64))
}
