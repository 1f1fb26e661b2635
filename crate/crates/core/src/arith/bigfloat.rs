//! Binary floating point values `mantissa * 2^exponent` with directed rounding.
//!
//! These are the endpoints of [`Interval`](super::Interval). Every operation
//! takes a target precision in bits and a rounding direction; the result is
//! the exact value rounded toward `-inf` ([`Round::Down`]) or `+inf`
//! ([`Round::Up`]). Nothing here is correctly rounded to nearest, and nothing
//! needs to be.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

#[derive(Clone)]
pub struct BigFloat {
    mantissa: BigInt,
    exponent: i64,
}

fn shr_floor(m: &BigInt, s: u64) -> BigInt {
    // BigInt >> rounds toward negative infinity.
    m >> s
}

fn shr_ceil(m: &BigInt, s: u64) -> BigInt {
    -((-m) >> s)
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn from_int(m: BigInt) -> Self {
        BigFloat::from_parts(m, 0)
    }

    pub fn from_i64(v: i64) -> Self {
        BigFloat::from_int(BigInt::from(v))
    }

    pub fn from_parts(mantissa: BigInt, exponent: i64) -> Self {
        if mantissa.is_zero() {
            return BigFloat::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            BigFloat {
                mantissa: mantissa >> tz,
                exponent: exponent + tz as i64,
            }
        } else {
            BigFloat { mantissa, exponent }
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Smallest `e` with `|self| < 2^e`. Undefined (returns `i64::MIN`) at zero.
    pub fn top(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + self.bits() as i64
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return BigFloat::zero();
        }
        BigFloat {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    pub fn round(&self, prec: u32, rnd: Round) -> Self {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let m = match rnd {
            Round::Down => shr_floor(&self.mantissa, shift),
            Round::Up => shr_ceil(&self.mantissa, shift),
        };
        BigFloat::from_parts(m, self.exponent + shift as i64)
    }

    pub fn add(&self, other: &Self, prec: u32, rnd: Round) -> Self {
        if other.is_zero() {
            return self.round(prec, rnd);
        }
        if self.is_zero() {
            return other.round(prec, rnd);
        }
        let (big, small) = if self.top() >= other.top() {
            (self, other)
        } else {
            (other, self)
        };
        if big.top() > small.top() + prec as i64 + 2 {
            // `small` is below one ulp of `big` widened to prec + 2 bits.
            let want = prec as u64 + 2;
            let k = want.saturating_sub(big.bits());
            let m = &big.mantissa << k;
            let e = big.exponent - k as i64;
            let m = match (rnd, small.signum()) {
                (Round::Down, -1) => m - 1,
                (Round::Up, 1) => m + 1,
                _ => m,
            };
            return BigFloat::from_parts(m, e).round(prec, rnd);
        }
        let e = self.exponent.min(other.exponent);
        let m = (&self.mantissa << (self.exponent - e) as u64)
            + (&other.mantissa << (other.exponent - e) as u64);
        BigFloat::from_parts(m, e).round(prec, rnd)
    }

    pub fn sub(&self, other: &Self, prec: u32, rnd: Round) -> Self {
        self.add(&other.neg(), prec, rnd)
    }

    pub fn mul(&self, other: &Self, prec: u32, rnd: Round) -> Self {
        BigFloat::from_parts(&self.mantissa * &other.mantissa, self.exponent + other.exponent)
            .round(prec, rnd)
    }

    /// Panics on division by zero; callers check.
    pub fn div(&self, other: &Self, prec: u32, rnd: Round) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let want = prec as i64 + 2 + other.bits() as i64 - self.bits() as i64;
        let s = want.max(0) as u64;
        let num = &self.mantissa << s;
        let q = match rnd {
            Round::Down => num.div_floor(&other.mantissa),
            Round::Up => -((-num).div_floor(&other.mantissa)),
        };
        BigFloat::from_parts(q, self.exponent - other.exponent - s as i64).round(prec, rnd)
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(&self, prec: u32, rnd: Round) -> Self {
        assert!(self.signum() >= 0, "BigFloat sqrt of negative value");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let want = 2 * prec as i64 + 4 - self.bits() as i64;
        let mut s = want.max(0);
        if (self.exponent - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let m = &self.mantissa << s as u64;
        let mut r = m.sqrt();
        if rnd == Round::Up && &r * &r != m {
            r += 1;
        }
        BigFloat::from_parts(r, (self.exponent - s) / 2).round(prec, rnd)
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32, rnd: Round) -> Self {
        BigFloat::from_int(num.clone()).div(&BigFloat::from_int(den.clone()), prec, rnd)
    }

    /// Greatest integer not above the value.
    pub fn floor(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as u64
        } else {
            shr_floor(&self.mantissa, (-self.exponent) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (m, e) = if bits > 60 {
            let s = bits - 60;
            (shr_floor(&self.mantissa, s), self.exponent + s as i64)
        } else {
            (self.mantissa.clone(), self.exponent)
        };
        let mf = m.to_f64().unwrap_or(f64::NAN);
        if e > 2000 {
            return mf.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        mf * 2f64.powi(e as i32)
    }

    pub fn min_of<'a>(a: &'a Self, b: &'a Self) -> &'a Self {
        if a <= b {
            a
        } else {
            b
        }
    }

    pub fn max_of<'a>(a: &'a Self, b: &'a Self) -> &'a Self {
        if a >= b {
            a
        } else {
            b
        }
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigFloat {}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let mag = if self.top() != other.top() {
            self.top().cmp(&other.top())
        } else {
            let e = self.exponent.min(other.exponent);
            let a = self.mantissa.abs() << (self.exponent - e) as u64;
            let b = other.mantissa.abs() << (other.exponent - e) as u64;
            a.cmp(&b)
        };
        if sa > 0 {
            mag
        } else {
            mag.reverse()
        }
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl From<i64> for BigFloat {
    fn from(v: i64) -> Self {
        BigFloat::from_i64(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(m: i64, e: i64) -> BigFloat {
        BigFloat::from_parts(BigInt::from(m), e)
    }

    #[test]
    fn rounding_brackets_value() {
        let x = bf(0b1011011, 0);
        let lo = x.round(3, Round::Down);
        let hi = x.round(3, Round::Up);
        assert_eq!(lo, bf(0b101, 4));
        assert_eq!(hi, bf(0b110, 4));
        let y = x.neg();
        assert_eq!(y.round(3, Round::Down), bf(-0b110, 4));
        assert_eq!(y.round(3, Round::Up), bf(-0b101, 4));
    }

    #[test]
    fn division_is_directed() {
        let one = BigFloat::from_i64(1);
        let three = BigFloat::from_i64(3);
        let lo = one.div(&three, 40, Round::Down);
        let hi = one.div(&three, 40, Round::Up);
        assert!(lo < hi);
        assert!(lo.mul(&three, 200, Round::Down) < one);
        assert!(hi.mul(&three, 200, Round::Up) > one);
        let neg = one.neg().div(&three, 40, Round::Down);
        assert_eq!(neg, hi.neg());
    }

    #[test]
    fn sqrt_brackets() {
        let two = BigFloat::from_i64(2);
        let lo = two.sqrt(64, Round::Down);
        let hi = two.sqrt(64, Round::Up);
        assert!(lo.mul(&lo, 300, Round::Up) <= two);
        assert!(hi.mul(&hi, 300, Round::Down) >= two);
        assert!((lo.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        let four = BigFloat::from_i64(4);
        assert_eq!(four.sqrt(10, Round::Up), BigFloat::from_i64(2));
    }

    #[test]
    fn tiny_addend_shortcut() {
        let a = BigFloat::from_i64(1);
        let tiny = bf(1, -500);
        let up = a.add(&tiny, 30, Round::Up);
        let down = a.add(&tiny, 30, Round::Down);
        assert!(up > a);
        assert_eq!(down, a);
        let down2 = a.add(&tiny.neg(), 30, Round::Down);
        assert!(down2 < a);
    }

    #[test]
    fn ordering() {
        assert!(bf(3, -1) < bf(2, 0));
        assert!(bf(-3, 5) < bf(-1, 5));
        assert!(bf(-1, 100) < bf(1, -100));
        assert_eq!(bf(4, 0), bf(1, 2));
        assert_eq!(bf(-7, 3).floor(), BigInt::from(-56));
        assert_eq!(bf(-7, -1).floor(), BigInt::from(-4));
    }
}
