//! Closed-form real expressions and their rigorous evaluation.

use std::ops;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bigfloat::BigFloat;
use super::interval::Interval;
use crate::error::{Error, Result};

pub const DEFAULT_PRECISION_CAP: u32 = 4096;

#[derive(Clone, Debug)]
pub enum Expr {
    Rational(BigRational),
    Pi,
    Zeta(u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Sqrt(Box<Expr>),
    Exp(Box<Expr>),
    Ln(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        Expr::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(n: i64, d: i64) -> Expr {
        Expr::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn rational(r: BigRational) -> Expr {
        Expr::Rational(r)
    }

    pub fn pow(self, k: u32) -> Expr {
        Expr::Pow(Box::new(self), k)
    }

    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(Box::new(self))
    }

    pub fn exp(self) -> Expr {
        Expr::Exp(Box::new(self))
    }

    pub fn ln(self) -> Expr {
        Expr::Ln(Box::new(self))
    }

    pub fn sin(self) -> Expr {
        Expr::Sin(Box::new(self))
    }

    pub fn cos(self) -> Expr {
        Expr::Cos(Box::new(self))
    }

    /// One evaluation at a fixed working precision.
    pub fn eval(&self, prec: u32) -> Result<Interval> {
        Ok(match self {
            Expr::Rational(r) => Interval::from_rational(r, prec),
            Expr::Pi => Interval::pi(prec),
            Expr::Zeta(s) => {
                if *s < 2 {
                    return Err(Error::Domain(format!("zeta({s}) diverges")));
                }
                Interval::zeta(*s, prec)
            }
            Expr::Neg(a) => a.eval(prec)?.neg(),
            Expr::Add(a, b) => a.eval(prec)?.add(&b.eval(prec)?),
            Expr::Sub(a, b) => a.eval(prec)?.sub(&b.eval(prec)?),
            Expr::Mul(a, b) => a.eval(prec)?.mul(&b.eval(prec)?),
            Expr::Div(a, b) => a.eval(prec)?.div(&b.eval(prec)?)?,
            Expr::Pow(a, k) => a.eval(prec)?.powi(*k),
            Expr::Sqrt(a) => a.eval(prec)?.sqrt()?,
            Expr::Exp(a) => {
                let x = a.eval(prec)?;
                if x.mag() > BigFloat::from_i64(1).mul_pow2(40) {
                    return Err(Error::Domain("exp argument too large".into()));
                }
                x.exp()
            }
            Expr::Ln(a) => a.eval(prec)?.ln()?,
            Expr::Sin(a) => a.eval(prec)?.sin(),
            Expr::Cos(a) => a.eval(prec)?.cos(),
        })
    }
}

fn width_ok(x: &Interval, prec: u32) -> bool {
    // width <= 2^(1-prec) * max(1, |x|)
    let scale = if x.mig() > BigFloat::from_i64(1) {
        x.mig()
    } else {
        BigFloat::from_i64(1)
    };
    let bound = scale.mul_pow2(1 - prec as i64);
    x.width() <= bound
}

/// Enclosure of width at most `2^(1-prec) max(1, |value|)`.
///
/// The working precision is raised until the target width is met. Fails with
/// [`Error::Undecided`] if the working precision would exceed
/// `8 * prec + DEFAULT_PRECISION_CAP` bits, and with [`Error::Domain`] when the
/// expression is undefined (a division by an interval containing zero, the
/// square root or logarithm of a nonpositive value).
pub fn interval_eval(expr: &Expr, prec: u32) -> Result<Interval> {
    let cap = 8 * prec + DEFAULT_PRECISION_CAP;
    let mut w = prec + 32;
    loop {
        let x = expr.eval(w)?;
        if width_ok(&x, prec) {
            return Ok(x.with_prec(prec + 2));
        }
        if w >= cap {
            return Err(Error::Undecided { cap });
        }
        w = (2 * w).min(cap);
    }
}

/// Rigorous sign of `expr`, doubling precision from `start` up to `cap`.
pub fn decide_sign(expr: &Expr, start: u32, cap: u32) -> Result<i32> {
    let mut w = start.max(16);
    loop {
        match expr.eval(w) {
            Ok(x) if !x.contains_zero() => return Ok(x.sign()),
            // An enclosure of a point 0 cannot be separated from 0.
            Ok(_) | Err(Error::Domain(_)) => {}
            Err(e) => return Err(e),
        }
        if w >= cap {
            return Err(Error::Undecided { cap });
        }
        w = (2 * w).min(cap);
    }
}

/// Rigorously decide `a < b` (`Ok(false)` means `a > b`; equality is undecided).
pub fn decide_less(a: &Expr, b: &Expr, start: u32, cap: u32) -> Result<bool> {
    let d = Expr::Sub(Box::new(b.clone()), Box::new(a.clone()));
    Ok(decide_sign(&d, start, cap)? > 0)
}

impl ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }
}

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}
