//! Parameter triples `(a, b, nu)` with a periodic weight, describing the
//! partial theta series `sum_{n>=0} n^nu f(n) q^((n^2 - a)/b)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::periodic::{make_chi_k, make_chi_m_ell, make_chi_t, PeriodicFunction};
use crate::error::{Error, Result};
use crate::families::FamilySpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrangeIdentity {
    a: BigInt,
    b: BigInt,
    nu: u8,
    f: PeriodicFunction,
}

impl StrangeIdentity {
    /// Checks `a >= 0`, `b > 0`, `nu` in `{0, 1}` and that `f` has mean zero.
    pub fn new(a: BigInt, b: BigInt, nu: u8, f: PeriodicFunction) -> Result<Self> {
        if a.is_negative() {
            return Err(Error::InvalidParameter(format!("a = {a} must be nonnegative")));
        }
        if !b.is_positive() {
            return Err(Error::InvalidParameter(format!("b = {b} must be positive")));
        }
        if nu > 1 {
            return Err(Error::InvalidParameter(format!("nu = {nu} must be 0 or 1")));
        }
        if !f.mean_is_zero() {
            return Err(Error::InvalidParameter("f must have mean zero over a period".into()));
        }
        Ok(StrangeIdentity { a, b, nu, f })
    }

    pub fn for_family(spec: &FamilySpec) -> Result<Self> {
        spec.validate()?;
        match *spec {
            FamilySpec::Kontsevich => StrangeIdentity::for_family(&FamilySpec::TorusKnot32t { t: 1 }),
            FamilySpec::TorusKnot32t { t } => {
                let s = (BigInt::from(1) << (t + 1)) - 3;
                let b = BigInt::from(3) << (t + 2);
                StrangeIdentity::new(&s * &s, b, 1, make_chi_t(t)?)
            }
            FamilySpec::TorusKnot2 { m, ell } => {
                let s = BigInt::from(2 * m as i64 - 2 * ell as i64 - 1);
                let b = BigInt::from(8 * (2 * m as i64 + 1));
                StrangeIdentity::new(&s * &s, b, 1, make_chi_m_ell(m, ell)?)
            }
            FamilySpec::HabiroG { k } => {
                let k = k as i64;
                StrangeIdentity::new(BigInt::from(k * k), BigInt::from(2 * k + 1), 0, make_chi_k(k as u32)?)
            }
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn nu(&self) -> u8 {
        self.nu
    }

    pub fn f(&self) -> &PeriodicFunction {
        &self.f
    }

    /// The same identity with `a` replaced (used to exercise mismatch detection).
    pub fn with_a(&self, a: BigInt) -> Self {
        StrangeIdentity { a, ..self.clone() }
    }

    /// `(n^2 - a)/b` is a nonnegative integer at every `n >= 0` with `n^nu f(n) != 0`.
    pub fn check_exponents(&self) -> Result<()> {
        let m = BigInt::from(self.f.period());
        let classes = &self.b / self.b.gcd(&m);
        let classes = classes
            .to_u64()
            .filter(|&c| c <= 1_000_000)
            .ok_or_else(|| Error::InvalidParameter("b / gcd(b, M) too large to check".into()))?;
        for (r, _) in self.f.support() {
            for t in 0..classes {
                let n = BigInt::from(r) + &m * t;
                if !(&n * &n - &self.a).is_multiple_of(&self.b) {
                    return Err(Error::IdentityInconsistent {
                        n: n.to_i64().unwrap_or(i64::MAX),
                    });
                }
            }
            let n = BigInt::from(r);
            if (self.nu == 0 || !n.is_zero()) && &n * &n < self.a {
                return Err(Error::IdentityInconsistent { n: r as i64 });
            }
        }
        Ok(())
    }
}
