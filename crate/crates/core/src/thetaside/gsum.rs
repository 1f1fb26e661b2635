//! The finite Fourier coefficients `G_f^(nu)(k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::periodic::PeriodicFunction;
use crate::arith::cyclotomic::{trig_conductor, CyclotomicNumber};
use crate::arith::Interval;
use crate::error::{Error, Result};

const EXACT_CONDUCTOR_LIMIT: u64 = 1 << 14;

/// `sqrt(M) G(k)` exactly, and an enclosure of `G(k)`.
#[derive(Clone, Debug)]
pub struct GValue {
    pub sqrt_m_times_g: CyclotomicNumber,
    pub enclosure: Interval,
}

/// `sqrt(M) G(k) = 2 sum_m f(m) sin(2 pi m k / M)` for `nu = 0`, or with cos for `nu = 1`.
pub fn g_exact(f: &PeriodicFunction, nu: u8, k: u64) -> CyclotomicNumber {
    let m = f.period();
    let l = trig_conductor(m);
    let scale = (l / m) as i128;
    let quarter = (l / 4) as i128;
    let mut poly = vec![BigRational::zero(); l as usize];
    for (r, v) in f.support() {
        let a = (r as i128 * k as i128 % m as i128) * scale;
        let (p, q, sign) = if nu == 0 {
            // 2 sin x = -i (z^a - z^-a), -i = z^(3L/4)
            (a + 3 * quarter, -a + 3 * quarter, -1)
        } else {
            (a, -a, 1)
        };
        let p = p.rem_euclid(l as i128) as usize;
        let q = q.rem_euclid(l as i128) as usize;
        poly[p] += v;
        if sign < 0 {
            poly[q] -= v;
        } else {
            poly[q] += v;
        }
    }
    CyclotomicNumber::from_poly(l, poly)
}

/// Enclosure of `G(k)` evaluated directly on the support of `f`.
pub fn g_enclosure(f: &PeriodicFunction, nu: u8, k: u64, prec: u32) -> Interval {
    let w = prec + 24;
    let m = f.period();
    let two_pi = Interval::pi(w).mul_i64(2);
    let mut sum = Interval::zero(w);
    for (r, v) in f.support() {
        let j = (r as u128 * k as u128 % m as u128) as u64;
        let angle = two_pi
            .mul(&Interval::from_bigint(&BigInt::from(j), w))
            .div(&Interval::from_bigint(&BigInt::from(m), w))
            .expect("period is positive");
        let t = if nu == 0 { angle.sin() } else { angle.cos() };
        sum = sum.add(&t.mul(&Interval::from_rational(v, w)));
    }
    let sqrt_m = Interval::from_bigint(&BigInt::from(m), w).sqrt().expect("period is positive");
    sum.mul_i64(2).div(&sqrt_m).expect("period is positive").with_prec(prec)
}

pub fn g_value(f: &PeriodicFunction, nu: u8, k: u64, prec: u32) -> GValue {
    GValue {
        sqrt_m_times_g: g_exact(f, nu, k),
        enclosure: g_enclosure(f, nu, k, prec),
    }
}

/// Whether `G(k) = 0`, decided exactly in the cyclotomic field. For very
/// large periods a rigorous enclosure excluding zero settles the nonzero case
/// first; a zero verdict always comes from the exact test.
pub fn g_is_zero(f: &PeriodicFunction, nu: u8, k: u64) -> bool {
    if trig_conductor(f.period()) > EXACT_CONDUCTOR_LIMIT && !g_enclosure(f, nu, k, 96).contains_zero() {
        return false;
    }
    g_exact(f, nu, k).is_zero()
}

/// Smallest `k` in `1..=M` with `G(k) != 0`.
pub fn find_k_nu(f: &PeriodicFunction, nu: u8) -> Result<u64> {
    let m = f.period();
    for k in 1..=m {
        if !g_is_zero(f, nu, k) {
            return Ok(k);
        }
    }
    Err(Error::NoNonzeroFourierCoefficient { period: m })
}

/// Enclosure of `G(k)` that excludes zero, refining until it does.
pub fn g_nonzero_enclosure(f: &PeriodicFunction, nu: u8, k: u64, cap: u32) -> Result<Interval> {
    let mut prec = 128;
    loop {
        let g = g_enclosure(f, nu, k, prec);
        if !g.contains_zero() {
            return Ok(g);
        }
        if prec >= cap {
            return Err(Error::Undecided { cap });
        }
        prec = (2 * prec).min(cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{interval_eval, Expr};
    use crate::thetaside::periodic::{make_chi_k, make_chi_m_ell, make_chi_t};

    fn close(a: &Interval, b: &Interval, bits: i64) -> bool {
        let d = a.sub(b);
        d.mag() < crate::arith::BigFloat::from_i64(1).mul_pow2(-bits)
    }

    #[test]
    fn chi_t_closed_form() {
        for t in 1..=6u32 {
            let f = make_chi_t(t).unwrap();
            let g = g_value(&f, 1, 1, 128);
            let closed = -(Expr::int(1) / Expr::int(1 << (t - 1)).sqrt())
                * (Expr::Pi / Expr::int(1 << t)).sin();
            let c = interval_eval(&closed, 128).unwrap();
            assert!(close(&g.enclosure, &c, 110), "t={t}");
            let (re, im) = g.sqrt_m_times_g.embed(128);
            assert!(im.contains_zero());
            let sqrt_m = Interval::from_i64(f.period() as i64, 160).sqrt().unwrap();
            assert!(close(&re.div(&sqrt_m).unwrap(), &c, 100));
        }
        let g = g_value(&make_chi_t(1).unwrap(), 1, 1, 64);
        let minus_two_sqrt3 = CyclotomicNumber::zeta_power(24, 2)
            .add(&CyclotomicNumber::zeta_power(24, -2))
            .scale(&BigRational::from_integer((-2).into()));
        assert_eq!(g.sqrt_m_times_g, minus_two_sqrt3);
    }

    #[test]
    fn chi_k_even_arguments_vanish() {
        for k in 1..=5 {
            let f = make_chi_k(k).unwrap();
            for l in (2..=f.period()).step_by(2) {
                assert!(g_exact(&f, 0, l).is_zero(), "k={k} l={l}");
            }
            assert!(!g_exact(&f, 0, 1).is_zero());
        }
    }

    #[test]
    fn wrong_parity_vanishes() {
        let f = make_chi_m_ell(3, 1).unwrap();
        let h = make_chi_k(2).unwrap();
        for k in 1..=f.period() {
            assert!(g_exact(&f, 0, k).is_zero());
        }
        for k in 1..=h.period() {
            assert!(g_exact(&h, 1, k).is_zero());
        }
    }

    #[test]
    fn k_nu_search() {
        assert_eq!(find_k_nu(&make_chi_t(3).unwrap(), 1).unwrap(), 1);
        assert_eq!(find_k_nu(&make_chi_k(4).unwrap(), 0).unwrap(), 1);
        let zero = PeriodicFunction::new(vec![BigRational::zero(); 6]).unwrap();
        assert!(matches!(
            find_k_nu(&zero, 1),
            Err(Error::NoNonzeroFourierCoefficient { period: 6 })
        ));
        // f = cos-free weight: only G(2) survives
        let f = PeriodicFunction::from_residues(
            8,
            &[(2, BigRational::from_integer(1.into())), (6, BigRational::from_integer((-1).into()))],
        )
        .unwrap();
        assert_eq!(find_k_nu(&f, 0).unwrap(), 1);
        let f = PeriodicFunction::from_residues(
            8,
            &[
                (1, BigRational::from_integer(1.into())),
                (3, BigRational::from_integer(1.into())),
                (5, BigRational::from_integer((-1).into())),
                (7, BigRational::from_integer((-1).into())),
            ],
        )
        .unwrap();
        assert!(g_exact(&f, 0, 2).is_zero());
        assert_eq!(find_k_nu(&f, 0).unwrap(), 1);
    }
}
