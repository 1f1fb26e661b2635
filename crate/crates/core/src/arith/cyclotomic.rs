//! Exact arithmetic in the cyclotomic field `Q(zeta_L)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(L)-1)` and
//! kept fully reduced modulo the `L`-th cyclotomic polynomial, so an element
//! is zero exactly when its coefficient vector is.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::interval::Interval;

static CYCLOTOMIC: Mutex<Option<HashMap<u64, Arc<Vec<BigInt>>>>> = Mutex::new(None);

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// Exact quotient of `num` by the monic polynomial `den` (ascending coefficients).
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1);
    {
        let guard = CYCLOTOMIC.lock().expect("cyclotomic cache poisoned");
        if let Some(p) = guard.as_ref().and_then(|m| m.get(&n)) {
            return Arc::clone(p);
        }
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            p = div_exact_monic(&p, &cyclotomic_poly(d));
        }
    }
    let p = Arc::new(p);
    let mut guard = CYCLOTOMIC.lock().expect("cyclotomic cache poisoned");
    guard
        .get_or_insert_with(HashMap::new)
        .insert(n, Arc::clone(&p));
    p
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Conductor at which `sin(2 pi j / m)` and `cos(2 pi j / m)` are both available.
pub fn trig_conductor(m: u64) -> u64 {
    (2 * m).lcm(&4)
}

#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(conductor: u64) -> Self {
        let d = euler_phi(conductor) as usize;
        CyclotomicNumber {
            conductor,
            coeffs: vec![BigRational::zero(); d],
        }
    }

    pub fn from_rational(conductor: u64, r: BigRational) -> Self {
        let mut x = CyclotomicNumber::zero(conductor);
        x.coeffs[0] = r;
        x
    }

    /// Reduce an arbitrary polynomial in `zeta` into canonical form.
    pub fn from_poly(conductor: u64, poly: Vec<BigRational>) -> Self {
        let phi = cyclotomic_poly(conductor);
        let d = phi.len() - 1;
        let mut p = poly;
        if p.len() > d {
            for i in (d..p.len()).rev() {
                let c = std::mem::take(&mut p[i]);
                if c.is_zero() {
                    continue;
                }
                for (j, pj) in phi.iter().enumerate().take(d) {
                    if !pj.is_zero() {
                        p[i - d + j] -= &c * BigRational::from_integer(pj.clone());
                    }
                }
            }
        }
        p.resize(d, BigRational::zero());
        CyclotomicNumber {
            conductor,
            coeffs: p,
        }
    }

    /// `zeta_L^e` for any integer `e`.
    pub fn zeta_power(conductor: u64, e: i64) -> Self {
        let e = e.rem_euclid(conductor as i64) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        CyclotomicNumber::from_poly(conductor, p)
    }

    /// `sin(2 pi j / m)` at the given conductor, which must be divisible by `4` and `m`.
    pub fn sin_2pi(conductor: u64, j: i64, m: u64) -> Self {
        assert!(conductor.is_multiple_of(4) && conductor.is_multiple_of(m));
        let a = j * (conductor / m) as i64;
        // (zeta^a - zeta^-a) / (2i), with 1/i = zeta^(3L/4)
        let diff = CyclotomicNumber::zeta_power(conductor, a)
            .sub(&CyclotomicNumber::zeta_power(conductor, -a));
        let minus_i = CyclotomicNumber::zeta_power(conductor, 3 * conductor as i64 / 4);
        diff.mul(&minus_i)
            .scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    /// `cos(2 pi j / m)` at the given conductor, which must be divisible by `m`.
    pub fn cos_2pi(conductor: u64, j: i64, m: u64) -> Self {
        assert!(conductor.is_multiple_of(m));
        let a = j * (conductor / m) as i64;
        CyclotomicNumber::zeta_power(conductor, a)
            .add(&CyclotomicNumber::zeta_power(conductor, -a))
            .scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let n = self.coeffs.len();
        let mut p = vec![BigRational::zero(); 2 * n.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += a * b;
                }
            }
        }
        CyclotomicNumber::from_poly(self.conductor, p)
    }

    /// Enclosures of the real and imaginary parts under `zeta -> exp(2 pi i / L)`.
    pub fn embed(&self, prec: u32) -> (Interval, Interval) {
        let w = prec + 16;
        let two_pi_over_l = Interval::pi(w).mul_i64(2).div_i64(self.conductor as i64);
        let mut re = Interval::zero(w);
        let mut im = Interval::zero(w);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (s, co) = two_pi_over_l.mul_i64(j as i64).sin_cos();
            let cv = Interval::from_rational(c, w);
            re = re.add(&cv.mul(&co));
            im = im.add(&cv.mul(&s));
        }
        (re.with_prec(prec), im.with_prec(prec))
    }

    /// Enclosure of the real embedding; asserts the imaginary part contains zero.
    pub fn real_value(&self, prec: u32) -> Interval {
        let (re, im) = self.embed(prec);
        debug_assert!(im.contains_zero(), "element is not real");
        re
    }
}

pub fn cyclo_zero_test(x: &CyclotomicNumber) -> bool {
    x.is_zero()
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})[", self.conductor)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(*cyclotomic_poly(15), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
        for n in 1..60 {
            assert_eq!(cyclotomic_poly(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn sqrt3_two_ways() {
        let z = |e| CyclotomicNumber::zeta_power(12, e);
        let a = z(1).add(&z(-1));
        let b = z(11).sub(&z(7));
        let diff = a.sub(&b);
        assert!(cyclo_zero_test(&diff));
        let three = CyclotomicNumber::from_rational(12, BigRational::from_integer(3.into()));
        assert!(cyclo_zero_test(&a.mul(&a).sub(&three)));
        assert!(!cyclo_zero_test(&z(1)));
        assert!(cyclo_zero_test(&CyclotomicNumber::zero(12)));
    }

    #[test]
    fn trig_values() {
        let l = trig_conductor(12);
        let s = CyclotomicNumber::sin_2pi(l, 3, 12);
        assert_eq!(s, CyclotomicNumber::from_rational(l, BigRational::one()));
        let c = CyclotomicNumber::cos_2pi(l, 2, 12);
        assert_eq!(
            c,
            CyclotomicNumber::from_rational(l, BigRational::new(1.into(), 2.into()))
        );
        // sin^2 + cos^2 = 1 for a generic angle
        let s = CyclotomicNumber::sin_2pi(l, 5, 12);
        let c = CyclotomicNumber::cos_2pi(l, 5, 12);
        let one = s.mul(&s).add(&c.mul(&c));
        assert_eq!(one, CyclotomicNumber::from_rational(l, BigRational::one()));
    }

    #[test]
    fn embedding_agrees_with_zero_test() {
        let l = trig_conductor(10);
        let mut x = CyclotomicNumber::zero(l);
        for j in 0..10 {
            x = x.add(&CyclotomicNumber::sin_2pi(l, j, 10));
        }
        assert!(cyclo_zero_test(&x));
        let (re, im) = x.embed(128);
        assert!(re.contains_zero() && im.contains_zero());
        let y = CyclotomicNumber::sin_2pi(l, 1, 10);
        assert!(!cyclo_zero_test(&y));
        let (re, _) = y.embed(128);
        assert!(re.is_positive());
        assert!((re.to_f64() - (std::f64::consts::PI / 5.0).sin()).abs() < 1e-15);
    }
}
