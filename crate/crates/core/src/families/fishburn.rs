use crate::qseries::{one_minus_q_power, Series};

/// Fishburn numbers `xi(0..=n_max)`: the expansion of `sum_n (q)_n` at `q = 1 - u`.
pub fn expand_fishburn(n_max: usize) -> Series {
    let order = n_max as i64;
    let mut total = Series::one(order);
    let mut poch = Series::one(order);
    for n in 1..=n_max as u64 {
        poch = poch.mul_to(&one_minus_q_power(n, order), order);
        total.add_assign(&poch);
    }
    total
}
