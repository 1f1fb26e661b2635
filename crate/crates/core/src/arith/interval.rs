//! Rigorous interval enclosures over [`BigFloat`] endpoints.
//!
//! Every arithmetic operation and every elementary function returns an
//! interval that contains the exact result for every point of the inputs.
//! Transcendental functions are evaluated by truncated series with an
//! explicit remainder interval added to the sum.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bernoulli::{bernoulli_number, zeta_even};
use super::bigfloat::{BigFloat, Round};
use crate::error::{Error, Result};

/// Extra bits carried through internal series evaluations.
const GUARD: u32 = 32;

#[derive(Clone)]
pub struct Interval {
    lo: BigFloat,
    hi: BigFloat,
    prec: u32,
}

impl Interval {
    pub fn new(lo: BigFloat, hi: BigFloat, prec: u32) -> Self {
        assert!(lo <= hi, "interval with lo > hi");
        Interval {
            lo: lo.round(prec, Round::Down),
            hi: hi.round(prec, Round::Up),
            prec,
        }
    }

    pub fn point(v: BigFloat, prec: u32) -> Self {
        Interval::new(v.clone(), v, prec)
    }

    pub fn zero(prec: u32) -> Self {
        Interval::point(BigFloat::zero(), prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Interval::point(BigFloat::from_i64(v), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Interval::point(BigFloat::from_int(v.clone()), prec)
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        Interval {
            lo: BigFloat::from_ratio(r.numer(), r.denom(), prec, Round::Down),
            hi: BigFloat::from_ratio(r.numer(), r.denom(), prec, Round::Up),
            prec,
        }
    }

    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        Interval::from_rational(&BigRational::new(num.into(), den.into()), prec)
    }

    /// Symmetric interval `[-r, r]` for a nonnegative bound `r`.
    pub fn error_ball(r: &BigFloat, prec: u32) -> Self {
        let r = r.abs();
        Interval::new(r.neg(), r, prec)
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Interval {
            lo: self.lo.round(prec, Round::Down),
            hi: self.hi.round(prec, Round::Up),
            prec,
        }
    }

    pub fn width(&self) -> BigFloat {
        self.hi.sub(&self.lo, self.prec, Round::Up)
    }

    pub fn mid_f64(&self) -> f64 {
        0.5 * (self.lo.to_f64() + self.hi.to_f64())
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag(&self) -> BigFloat {
        BigFloat::max_of(&self.lo.abs(), &self.hi.abs()).clone()
    }

    /// Lower bound on `|x|` over the interval.
    pub fn mig(&self) -> BigFloat {
        if self.contains_zero() {
            BigFloat::zero()
        } else {
            BigFloat::min_of(&self.lo.abs(), &self.hi.abs()).clone()
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn contains(&self, v: &BigFloat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    /// +1 or -1 if the sign is decided, 0 if the interval straddles zero.
    pub fn sign(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = BigFloat::max_of(&self.lo, &other.lo).clone();
        let hi = BigFloat::min_of(&self.hi, &other.hi).clone();
        (lo <= hi).then(|| Interval {
            lo,
            hi,
            prec: self.prec.max(other.prec),
        })
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: BigFloat::min_of(&self.lo, &other.lo).clone(),
            hi: BigFloat::max_of(&self.hi, &other.hi).clone(),
            prec: self.prec.max(other.prec),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> Interval {
        Interval {
            lo: self.mig(),
            hi: self.mag(),
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let p = self.prec.max(other.prec);
        Interval {
            lo: self.lo.add(&other.lo, p, Round::Down),
            hi: self.hi.add(&other.hi, p, Round::Up),
            prec: p,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let p = self.prec.max(other.prec);
        let ends = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = ends
            .iter()
            .map(|(a, b)| a.mul(b, p, Round::Down))
            .min()
            .expect("four products");
        let hi = ends
            .iter()
            .map(|(a, b)| a.mul(b, p, Round::Up))
            .max()
            .expect("four products");
        Interval { lo, hi, prec: p }
    }

    pub fn sqr(&self) -> Interval {
        let p = self.prec;
        let mig = self.mig();
        let mag = self.mag();
        Interval {
            lo: mig.mul(&mig, p, Round::Down),
            hi: mag.mul(&mag, p, Round::Up),
            prec: p,
        }
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::Domain("division by an interval containing zero".into()));
        }
        let p = self.prec.max(other.prec);
        let ends = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = ends
            .iter()
            .map(|(a, b)| a.div(b, p, Round::Down))
            .min()
            .expect("four quotients");
        let hi = ends
            .iter()
            .map(|(a, b)| a.div(b, p, Round::Up))
            .max()
            .expect("four quotients");
        Ok(Interval { lo, hi, prec: p })
    }

    pub fn mul_i64(&self, k: i64) -> Interval {
        self.mul(&Interval::from_i64(k, self.prec))
    }

    pub fn div_i64(&self, k: i64) -> Interval {
        self.div(&Interval::from_i64(k, self.prec))
            .expect("nonzero integer divisor")
    }

    pub fn mul_pow2(&self, k: i64) -> Interval {
        Interval {
            lo: self.lo.mul_pow2(k),
            hi: self.hi.mul_pow2(k),
            prec: self.prec,
        }
    }

    pub fn powi(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::from_i64(1, self.prec);
        }
        if n.is_multiple_of(2) {
            return self.sqr().powi(n / 2);
        }
        self.mul(&self.powi(n - 1))
    }

    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo.signum() < 0 {
            return Err(Error::Domain("sqrt of an interval with negative part".into()));
        }
        Ok(Interval {
            lo: self.lo.sqrt(self.prec, Round::Down),
            hi: self.hi.sqrt(self.prec, Round::Up),
            prec: self.prec,
        })
    }

    pub fn pi(prec: u32) -> Interval {
        cached_constant(&PI_CACHE, prec, compute_pi)
    }

    pub fn ln2(prec: u32) -> Interval {
        cached_constant(&LN2_CACHE, prec, compute_ln2)
    }

    pub fn exp(&self) -> Interval {
        let p = self.prec;
        if self.mag().top() > 40 {
            // Arguments that large never occur here; give up tightness, not soundness.
            panic!("exp argument out of supported range: {self}");
        }
        let w = p + GUARD + 16;
        let x = self.with_prec(w);
        let ln2 = Interval::ln2(w);
        let k = (x.mid_f64() / std::f64::consts::LN_2).round() as i64;
        let r = x.sub(&ln2.mul_i64(k));
        let halvings = 12;
        let y = r.mul_pow2(-halvings);
        // |y| <= 1/2 here, so the tail after y^J/J! is at most 2 |y|^(J+1)/(J+1)!.
        let rho = y.mag();
        let target = BigFloat::from_i64(1).mul_pow2(-(w as i64) - 8);
        let mut sum = Interval::from_i64(1, w);
        let mut term = Interval::from_i64(1, w);
        let mut bound = BigFloat::from_i64(1);
        let mut j = 1i64;
        loop {
            term = term.mul(&y).div_i64(j);
            sum = sum.add(&term);
            bound = bound
                .mul(&rho, w, Round::Up)
                .div(&BigFloat::from_i64(j + 1), w, Round::Up);
            if bound.mul_pow2(1) < target || j > 10_000 {
                break;
            }
            j += 1;
        }
        sum = sum.add(&Interval::error_ball(&bound.mul_pow2(1), w));
        for _ in 0..halvings {
            sum = sum.sqr();
        }
        sum.mul_pow2(k).with_prec(p)
    }

    pub fn ln(&self) -> Result<Interval> {
        if self.lo.signum() <= 0 {
            return Err(Error::Domain("log of an interval that is not positive".into()));
        }
        let p = self.prec;
        let w = p + GUARD;
        let x = self.with_prec(w);
        // Scale the lower endpoint into [3/4, 3/2).
        let mut k = x.lo.top() - 1;
        let scaled_lo = x.lo.mul_pow2(-k);
        if scaled_lo >= BigFloat::from_parts(3.into(), -1) {
            k += 1;
        }
        let y = x.mul_pow2(-k);
        let one = Interval::from_i64(1, w);
        let z = y.sub(&one).div(&y.add(&one))?;
        let z2 = z.sqr();
        let rho2 = z2.hi.clone();
        if rho2 >= BigFloat::from_i64(1) {
            return Err(Error::Domain("log argument interval too wide".into()));
        }
        // atanh(z) = sum z^(2j+1)/(2j+1); tail bounded by |z|^(2J+3) / (1 - z^2).
        let target = BigFloat::from_i64(1).mul_pow2(-(w as i64) - 8);
        let mut power = z.clone();
        let mut sum = z.clone();
        let mut mag = z.mag();
        let mut j = 0i64;
        loop {
            j += 1;
            power = power.mul(&z2);
            sum = sum.add(&power.div_i64(2 * j + 1));
            mag = mag.mul(&rho2, w, Round::Up);
            if mag < target || j > 100_000 {
                break;
            }
        }
        let tail_den = BigFloat::from_i64(1).sub(&rho2, w, Round::Down);
        let tail = mag.mul(&rho2, w, Round::Up).div(&tail_den, w, Round::Up);
        let atanh = sum.add(&Interval::error_ball(&tail, w));
        let ln2 = Interval::ln2(w);
        Ok(ln2.mul_i64(k).add(&atanh.mul_pow2(1)).with_prec(p))
    }

    pub fn sin(&self) -> Interval {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Interval {
        self.sin_cos().1
    }

    pub fn sin_cos(&self) -> (Interval, Interval) {
        let p = self.prec;
        let unit = Interval::new(BigFloat::from_i64(-1), BigFloat::from_i64(1), p);
        let mid = self.mid_f64();
        if self.width() > BigFloat::from_i64(2) || !mid.is_finite() || mid.abs() > 1e15 {
            return (unit.clone(), unit);
        }
        let w = p + GUARD;
        let x = self.with_prec(w);
        let half_pi = Interval::pi(w).mul_pow2(-1);
        let k = (mid / std::f64::consts::FRAC_PI_2).round() as i64;
        let r = x.sub(&half_pi.mul_i64(k));
        let (s, c) = sin_cos_taylor(&r, w);
        let (s, c) = match k.rem_euclid(4) {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        };
        let clip = |v: Interval| v.intersect(&unit).unwrap_or(v).with_prec(p);
        (clip(s), clip(c))
    }

    /// Riemann zeta at an integer `s >= 2`.
    pub fn zeta(s: u32, prec: u32) -> Interval {
        assert!(s >= 2, "zeta argument must be at least 2");
        if s.is_multiple_of(2) {
            let (r, power) = zeta_even(s).expect("even argument");
            return Interval::pi(prec + GUARD)
                .powi(power)
                .mul(&Interval::from_rational(&r, prec + GUARD))
                .with_prec(prec);
        }
        zeta_odd_euler_maclaurin(s, prec)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid_f64()
    }
}

fn sin_cos_taylor(r: &Interval, w: u32) -> (Interval, Interval) {
    let r2 = r.sqr();
    let rho = r.mag();
    let target = BigFloat::from_i64(1).mul_pow2(-(w as i64) - 8);
    let mut sin_term = r.clone();
    let mut cos_term = Interval::from_i64(1, w);
    let mut s = sin_term.clone();
    let mut c = cos_term.clone();
    // Lagrange remainder: |R| <= rho^(n+1)/(n+1)! after the degree-n term.
    let mut bound = rho.clone();
    let mut n = 1i64;
    loop {
        cos_term = cos_term.mul(&r2).div_i64(n * (n + 1)).neg();
        c = c.add(&cos_term);
        sin_term = sin_term.mul(&r2).div_i64((n + 1) * (n + 2)).neg();
        s = s.add(&sin_term);
        n += 2;
        // bound >= rho^n / n!
        bound = bound
            .mul(&rho, w, Round::Up)
            .mul(&rho, w, Round::Up)
            .div(&BigFloat::from_i64((n - 1) * n), w, Round::Up);
        if bound < target || n > 20_000 {
            break;
        }
    }
    let tail = bound.mul(&rho, w, Round::Up);
    let ball = Interval::error_ball(&tail, w);
    (s.add(&ball), c.add(&ball))
}

fn zeta_odd_euler_maclaurin(s: u32, prec: u32) -> Interval {
    let w = prec + GUARD;
    let cutoff: i64 = 10 + (prec as i64) / 3;
    let mut sum = Interval::zero(w);
    for n in 1..cutoff {
        let den = BigInt::from(n).pow(s);
        sum = sum.add(&Interval::from_rational(
            &BigRational::new(BigInt::one(), den),
            w,
        ));
    }
    let k = BigInt::from(cutoff);
    let s_i = s as i64;
    // Integral and boundary terms.
    sum = sum.add(&Interval::from_rational(
        &BigRational::new(BigInt::one(), BigInt::from(s_i - 1) * k.pow(s - 1)),
        w,
    ));
    sum = sum.add(&Interval::from_rational(
        &BigRational::new(BigInt::one(), BigInt::from(2) * k.pow(s)),
        w,
    ));
    // Bernoulli corrections B_2j/(2j)! * (s)_(2j-1) * K^(-s-2j+1), where
    // (s)_r = s(s+1)...(s+r-1). After J terms the remainder is at most
    // 4 (s)_(2J-1) / ((2 pi)^(2J) K^(s+2J-1)).
    let target = BigFloat::from_i64(1).mul_pow2(-(w as i64) - 8);
    let two_pi_sq = Interval::pi(w).mul_pow2(1).sqr().lo().clone();
    let mut rising = BigInt::from(s_i);
    let mut factorial = BigInt::from(2);
    let mut two_pi_power = two_pi_sq.clone();
    let mut j: u32 = 1;
    let bound = loop {
        let kpow = k.pow(s + 2 * j - 1);
        let b = bernoulli_number(2 * j as usize);
        let term = b * BigRational::new(rising.clone(), &factorial * &kpow);
        sum = sum.add(&Interval::from_rational(&term, w));
        let den = two_pi_power.mul(&BigFloat::from_int(kpow), w, Round::Down);
        let bound = BigFloat::from_int(&rising * 4).div(&den, w, Round::Up);
        if bound < target || j > 4 * prec + 64 {
            break bound;
        }
        let (a, c) = (s_i + 2 * j as i64 - 1, s_i + 2 * j as i64);
        rising *= BigInt::from(a) * BigInt::from(c);
        factorial *= BigInt::from(2 * j as i64 + 1) * BigInt::from(2 * j as i64 + 2);
        two_pi_power = two_pi_power.mul(&two_pi_sq, w, Round::Down);
        j += 1;
    };
    sum.add(&Interval::error_ball(&bound, w)).with_prec(prec)
}

static PI_CACHE: Mutex<Option<Interval>> = Mutex::new(None);
static LN2_CACHE: Mutex<Option<Interval>> = Mutex::new(None);

fn cached_constant(cache: &Mutex<Option<Interval>>, prec: u32, compute: fn(u32) -> Interval) -> Interval {
    let mut guard = cache.lock().expect("constant cache poisoned");
    if let Some(v) = guard.as_ref() {
        if v.prec >= prec {
            return v.with_prec(prec);
        }
    }
    let v = compute(prec.max(256));
    let out = v.with_prec(prec);
    *guard = Some(v);
    out
}

/// Fixed-point `sum_j (-1)^j / ((2j+1) x^(2j+1))` scaled by `2^w`, with the
/// number of truncated terms (each contributing < 1 ulp of error).
fn atan_inv_fixed(x: u64, w: u64, alternating: bool) -> (BigInt, u64) {
    let one = BigInt::one() << w;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    loop {
        let term = &one / (&power * BigInt::from(2 * j + 1));
        if term.is_zero() {
            break;
        }
        if alternating && j % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        power *= &x2;
        j += 1;
    }
    (sum, j)
}

fn fixed_to_interval(value: BigInt, err_ulps: u64, w: u64, prec: u32) -> Interval {
    let e = BigInt::from(err_ulps);
    let lo = BigFloat::from_parts(&value - &e, -(w as i64));
    let hi = BigFloat::from_parts(&value + &e, -(w as i64));
    Interval::new(lo, hi, prec)
}

fn compute_pi(prec: u32) -> Interval {
    // pi = 16 atan(1/5) - 4 atan(1/239).
    let w = prec as u64 + 16;
    let (a, ja) = atan_inv_fixed(5, w, true);
    let (b, jb) = atan_inv_fixed(239, w, true);
    let value = a * 16 - b * 4;
    // Per series: < j ulps from floors plus < 1 ulp of alternating tail.
    let err = 16 * (ja + 2) + 4 * (jb + 2);
    fixed_to_interval(value, err, w, prec)
}

fn compute_ln2(prec: u32) -> Interval {
    // ln 2 = 2 atanh(1/3); positive terms, geometric tail below 2 ulps.
    let w = prec as u64 + 16;
    let (a, j) = atan_inv_fixed(3, w, false);
    fixed_to_interval(a * 2, 2 * (j + 2), w, prec)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Interval{self} @{}b", self.prec)
    }
}

/// Parse a decimal string like `-1.2345` into an exact rational.
pub fn parse_decimal(s: &str) -> BigRational {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: String = int.chars().chain(frac.chars()).collect();
    let num: BigInt = digits.parse().expect("decimal digits");
    let den = BigInt::from(10).pow(frac.len() as u32);
    let r = BigRational::new(num, den);
    if neg {
        -r
    } else {
        r
    }
}
