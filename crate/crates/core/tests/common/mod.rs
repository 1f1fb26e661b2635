#![allow(dead_code)]

pub mod tables;

use habiro::arith::Interval;

/// `|a - b|` bounded above (including both widths).
pub fn distance(a: &Interval, b: &Interval) -> f64 {
    a.sub(b).mag().to_f64()
}
