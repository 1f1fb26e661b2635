//! Main terms of the coefficient asymptotics, evaluated in log domain.
//!
//! For an identity with data `(M, a, b, nu, f)` and `k = k_nu`,
//!
//! `xi(n) ~ (-1)^nu (M/(2 pi k))^(2n+nu+1) G(k) 2^(2n+nu) n! n^(nu-1/2)
//!          / (b^n sqrt(pi M)) * exp(b k^2 pi^2 / (2 M^2))`.
//!
//! Coefficients are far outside `f64` range, so everything here is a log
//! enclosure.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{factorial, Interval};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::qseries::Series;
use crate::thetaside::{find_k_nu, g_nonzero_enclosure, StrangeIdentity};

const GUARD: u32 = 32;

#[derive(Clone, Debug)]
pub struct AsymptoticProfile {
    period: u64,
    a: BigInt,
    b: BigInt,
    nu: u8,
    k_nu: u64,
    g: Interval,
    alpha1: Interval,
}

impl AsymptoticProfile {
    pub fn from_identity(id: &StrangeIdentity, prec: u32) -> Result<Self> {
        let k_nu = find_k_nu(id.f(), id.nu())?;
        let g = g_nonzero_enclosure(id.f(), id.nu(), k_nu, 8 * prec + 4096)?.with_prec(prec);
        let period = id.f().period();
        let w = prec + GUARD;
        // a (2 pi k / M)^2 / 4 + (-1)^(nu+1) (2 nu + 1) / 8
        let theta = Interval::pi(w)
            .mul_i64(2 * k_nu as i64)
            .div(&Interval::from_bigint(&BigInt::from(period), w))?;
        let first = theta.sqr().mul(&Interval::from_bigint(id.a(), w)).mul_pow2(-2);
        let sign = if id.nu() == 1 { 1 } else { -1 };
        let second = Interval::from_ratio(sign * (2 * id.nu() as i64 + 1), 8, w);
        Ok(AsymptoticProfile {
            period,
            a: id.a().clone(),
            b: id.b().clone(),
            nu: id.nu(),
            k_nu,
            g,
            alpha1: first.add(&second).with_prec(prec),
        })
    }

    pub fn for_family(spec: &FamilySpec, prec: u32) -> Result<Self> {
        AsymptoticProfile::from_identity(&spec.identity()?, prec)
    }

    pub fn period(&self) -> u64 {
        self.period
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

    pub fn k_nu(&self) -> u64 {
        self.k_nu
    }

    pub fn g(&self) -> &Interval {
        &self.g
    }

    pub fn alpha1(&self) -> &Interval {
        &self.alpha1
    }

    /// `b k^2 pi^2 / (2 M^2)`, the exponent of the correction factor.
    pub fn exponent(&self, prec: u32) -> Interval {
        let w = prec + GUARD;
        let k = Interval::from_i64(self.k_nu as i64, w);
        let m = Interval::from_bigint(&BigInt::from(self.period), w);
        Interval::pi(w)
            .mul(&k)
            .div(&m)
            .expect("period is positive")
            .sqr()
            .mul(&Interval::from_bigint(&self.b, w))
            .mul_pow2(-1)
            .with_prec(prec)
    }

    /// Sign of the main term, `sign((-1)^nu G(k_nu))`.
    pub fn sign(&self) -> i32 {
        if self.nu == 1 {
            -self.g.sign()
        } else {
            self.g.sign()
        }
    }

    /// First-order coefficient `c_1` with `xi(n) = main(n) (1 + c_1/n + O(1/n^2))`:
    /// `c_1 = alpha_1 + x^2/3 - (nu + 1/2) x`, `x` the exponent above.
    ///
    /// `alpha_1` alone is the first correction of `B_n`; the Stirling
    /// transfer to `xi(n)` adds the two `x` terms.
    pub fn first_order(&self, prec: u32) -> Interval {
        let w = prec + GUARD;
        let x = self.exponent(w);
        let half_nu = Interval::from_ratio(2 * self.nu as i64 + 1, 2, w);
        self.alpha1
            .with_prec(w)
            .add(&x.sqr().div_i64(3))
            .sub(&half_nu.mul(&x))
            .with_prec(prec)
    }
}

/// A sign together with an enclosure of the log of the magnitude.
#[derive(Clone, Debug)]
pub struct LogTerm {
    pub sign: i32,
    pub log_magnitude: Interval,
}

/// Enclosure of `ln |x|`, `x != 0`.
pub fn log_abs_bigint(x: &BigInt, prec: u32) -> Result<Interval> {
    if x.is_zero() {
        return Err(Error::Domain("log of zero".into()));
    }
    Interval::from_bigint(&x.abs(), prec + GUARD).ln().map(|v| v.with_prec(prec))
}

pub fn log_factorial(n: u64, prec: u32) -> Interval {
    log_abs_bigint(&factorial(n), prec).expect("n! is positive")
}

fn ln_i(v: &BigInt, w: u32) -> Interval {
    log_abs_bigint(v, w).expect("positive argument")
}

/// The common part `(2n+nu+1) ln(M/(2 pi k)) + ln|G| + ln n! + (nu-1/2) ln n - n ln b - ln(pi M)/2`.
fn log_core(p: &AsymptoticProfile, n: u64, w: u32) -> Result<Interval> {
    let m = BigInt::from(p.period);
    let pi = Interval::pi(w);
    let ratio = Interval::from_bigint(&m, w).div(&pi.mul_i64(2 * p.k_nu as i64))?;
    let s = 2 * n as i64 + p.nu as i64 + 1;
    let ln_n = if n > 0 { ln_i(&BigInt::from(n), w) } else { Interval::zero(w) };
    let nu_half = Interval::from_ratio(2 * p.nu as i64 - 1, 2, w);
    let ln_pi_m = pi.mul(&Interval::from_bigint(&m, w)).ln()?;
    Ok(ratio
        .ln()?
        .mul_i64(s)
        .add(&p.g.abs().with_prec(w).ln()?)
        .add(&log_factorial(n, w))
        .add(&nu_half.mul(&ln_n))
        .sub(&ln_i(&p.b, w).mul_i64(n as i64))
        .sub(&ln_pi_m.mul_pow2(-1)))
}

/// Log of the main term for `xi(n)`, `n >= 1`.
pub fn main_term_log(p: &AsymptoticProfile, n: u64, prec: u32) -> Result<LogTerm> {
    let w = prec + GUARD;
    let two = Interval::ln2(w).mul_i64(2 * n as i64 + p.nu as i64);
    let v = log_core(p, n, w)?.add(&two).add(&p.exponent(w));
    Ok(LogTerm {
        sign: p.sign(),
        log_magnitude: v.with_prec(prec),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Coefficients of `F(1/(1+q))`.
    G,
    /// Coefficients of `F((1-q)/(1+q))`.
    H,
}

/// Log of the main term for `g(n)` or `h(n)`.
pub fn transform_main_term_log(p: &AsymptoticProfile, which: Transform, n: u64, prec: u32) -> Result<LogTerm> {
    let w = prec + GUARD;
    let v = match which {
        Transform::G => log_core(p, n, w)?
            .add(&Interval::ln2(w).mul_i64(2 * n as i64 + p.nu as i64))
            .sub(&p.exponent(w)),
        Transform::H => log_core(p, n, w)?.add(&Interval::ln2(w).mul_i64(3 * n as i64 + p.nu as i64)),
    };
    Ok(LogTerm {
        sign: p.sign(),
        log_magnitude: v.with_prec(prec),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Correction {
    None,
    /// Multiply the main term by `1 + alpha_1/n`.
    Alpha1,
    /// Multiply the main term by `1 + c_1/n` (see [`AsymptoticProfile::first_order`]).
    FirstOrder,
}

#[derive(Clone, Debug)]
pub struct RatioSample {
    pub n: u64,
    /// Decimal digits of `|xi(n)|`.
    pub digits: usize,
    /// `ln |xi(n) / main(n)|`.
    pub log_ratio: Interval,
    /// `xi(n) / main(n)`, signed.
    pub ratio: Interval,
}

impl RatioSample {
    /// Upper bound for `|ratio - 1|` as an `f64` (rounded up slightly).
    pub fn error(&self) -> f64 {
        let d = self.ratio.sub(&Interval::from_i64(1, self.ratio.prec()));
        d.mag().to_f64() * (1.0 + 1e-12)
    }
}

/// `xi(n)/main(n)` at each requested `n`. A zero coefficient or an `n`
/// outside the series is reported for that sample only.
pub fn ratio_diagnostics(
    exact: &Series,
    p: &AsymptoticProfile,
    ns: &[u64],
    correction: Correction,
    prec: u32,
) -> Vec<Result<RatioSample>> {
    ns.iter()
        .map(|&n| ratio_at(exact, p, n, correction, prec))
        .collect()
}

fn ratio_at(exact: &Series, p: &AsymptoticProfile, n: u64, correction: Correction, prec: u32) -> Result<RatioSample> {
    let c = sample_coeff(exact, n)?;
    let w = prec + GUARD;
    let main = main_term_log(p, n, w)?;
    let corr = match correction {
        Correction::None => None,
        Correction::Alpha1 => Some(p.alpha1().with_prec(w)),
        Correction::FirstOrder => Some(p.first_order(w)),
    };
    finish_sample(&c, n, main, corr, w, prec)
}

/// `g(n)/g-main(n)` or `h(n)/h-main(n)` from transformed coefficients.
pub fn transform_ratio_diagnostics(
    transformed: &Series,
    p: &AsymptoticProfile,
    which: Transform,
    ns: &[u64],
    prec: u32,
) -> Vec<Result<RatioSample>> {
    ns.iter()
        .map(|&n| {
            let c = sample_coeff(transformed, n)?;
            let w = prec + GUARD;
            let main = transform_main_term_log(p, which, n, w)?;
            finish_sample(&c, n, main, None, w, prec)
        })
        .collect()
}

fn sample_coeff(exact: &Series, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidParameter("asymptotic samples need n >= 1".into()));
    }
    if n as i64 > exact.order() {
        return Err(Error::InvalidParameter(format!(
            "sample n = {n} beyond series order {}",
            exact.order()
        )));
    }
    let c = exact.coeff(n as i64);
    if c.is_zero() {
        return Err(Error::ZeroCoefficient(n as usize));
    }
    Ok(c)
}

fn finish_sample(c: &BigInt, n: u64, main: LogTerm, corr: Option<Interval>, w: u32, prec: u32) -> Result<RatioSample> {
    let mut log_main = main.log_magnitude;
    if let Some(c1) = corr {
        let factor = Interval::from_i64(1, w).add(&c1.div_i64(n as i64));
        log_main = log_main.add(&factor.ln()?);
    }
    let log_ratio = log_abs_bigint(c, w)?.sub(&log_main);
    let sign = if c.is_negative() { -main.sign } else { main.sign };
    let ratio = log_ratio.exp().mul_i64(sign as i64);
    Ok(RatioSample {
        n,
        digits: c.abs().to_string().len(),
        log_ratio: log_ratio.with_prec(prec),
        ratio: ratio.with_prec(prec),
    })
}

/// Log of the closed form for `F_t`:
/// `sin(pi/2^t)/(2^t sqrt(3 pi)) (3 2^t/pi)^(2n+2) 2^(2n+1) n! sqrt(n) / (3 2^(t+2))^n e^(pi^2/(3 2^(t+1)))`.
pub fn torus32t_closed_form_log(t: u32, n: u64, prec: u32) -> Result<Interval> {
    let w = prec + GUARD;
    let pi = Interval::pi(w);
    let two_t = Interval::from_bigint(&(BigInt::from(1) << t), w);
    let ln2 = Interval::ln2(w);
    let sin = pi.div(&two_t)?.sin();
    let v = sin
        .ln()?
        .sub(&two_t.mul(&pi.mul_i64(3).sqrt()?).ln()?)
        .add(&two_t.mul_i64(3).div(&pi)?.ln()?.mul_i64(2 * n as i64 + 2))
        .add(&ln2.mul_i64(2 * n as i64 + 1))
        .add(&log_factorial(n, w))
        .add(&ln_i(&BigInt::from(n), w).mul_pow2(-1))
        .sub(&ln_i(&(BigInt::from(3) << (t + 2)), w).mul_i64(n as i64))
        .add(&pi.sqr().div(&two_t.mul_i64(6))?);
    Ok(v.with_prec(prec))
}

/// Log of the closed form for `X_m^(l)`:
/// `sin(pi(l+1)/(2m+1)) ((2m+1)/pi^2)^(n+1) 2^(n+3) n! sqrt(n)/sqrt(pi) e^(pi^2/(8m+4))`.
pub fn torus2_closed_form_log(m: u32, ell: u32, n: u64, prec: u32) -> Result<Interval> {
    let w = prec + GUARD;
    let pi = Interval::pi(w);
    let q = Interval::from_i64(2 * m as i64 + 1, w);
    let v = pi
        .mul_i64(ell as i64 + 1)
        .div(&q)?
        .sin()
        .ln()?
        .add(&q.div(&pi.sqr())?.ln()?.mul_i64(n as i64 + 1))
        .add(&Interval::ln2(w).mul_i64(n as i64 + 3))
        .add(&log_factorial(n, w))
        .add(&ln_i(&BigInt::from(n), w).mul_pow2(-1))
        .sub(&pi.ln()?.mul_pow2(-1))
        .add(&pi.sqr().div(&q.mul_i64(4))?);
    Ok(v.with_prec(prec))
}

/// Log of the closed form for `G_k`:
/// `cos(pi/(2(2k+1))) 2^(2n+2) n! / (pi^(3/2) sqrt(n)) ((2k+1)/pi^2)^n e^(pi^2/(8(2k+1)))`.
pub fn habiro_g_closed_form_log(k: u32, n: u64, prec: u32) -> Result<Interval> {
    let w = prec + GUARD;
    let pi = Interval::pi(w);
    let q = Interval::from_i64(2 * k as i64 + 1, w);
    let v = pi
        .div(&q.mul_i64(2))?
        .cos()
        .ln()?
        .add(&Interval::ln2(w).mul_i64(2 * n as i64 + 2))
        .add(&log_factorial(n, w))
        .sub(&pi.ln()?.mul_i64(3).mul_pow2(-1))
        .sub(&ln_i(&BigInt::from(n), w).mul_pow2(-1))
        .add(&q.div(&pi.sqr())?.ln()?.mul_i64(n as i64))
        .add(&pi.sqr().div(&q.mul_i64(8))?);
    Ok(v.with_prec(prec))
}

/// Log of `(6/pi^2)^n n! sqrt(n) C_0` with `C_0 = 12 sqrt(3)/pi^(5/2) e^(pi^2/12)`.
pub fn fishburn_closed_form_log(n: u64, prec: u32) -> Result<Interval> {
    let w = prec + GUARD;
    let pi = Interval::pi(w);
    let c0 = Interval::from_i64(12, w)
        .mul(&Interval::from_i64(3, w).sqrt()?)
        .div(&pi.powi(5).sqrt()?)?
        .ln()?
        .add(&pi.sqr().div_i64(12));
    let v = Interval::from_i64(6, w)
        .div(&pi.sqr())?
        .ln()?
        .mul_i64(n as i64)
        .add(&log_factorial(n, w))
        .add(&ln_i(&BigInt::from(n), w).mul_pow2(-1))
        .add(&c0);
    Ok(v.with_prec(prec))
}

/// `C_1 / C_0 = 3/8 - 17 pi^2/144 + pi^4/432` for the Fishburn numbers.
pub fn fishburn_c1_over_c0(prec: u32) -> Interval {
    let w = prec + GUARD;
    let pi2 = Interval::pi(w).sqr();
    Interval::from_ratio(3, 8, w)
        .sub(&pi2.mul_i64(17).div_i64(144))
        .add(&pi2.sqr().div_i64(432))
        .with_prec(prec)
}
