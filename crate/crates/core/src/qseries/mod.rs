//! Exact truncated series, Laurent polynomials and argument transforms.

pub mod poly;
pub mod series;
pub mod transforms;

pub use poly::{one_minus_u_power, qbinomial, substitute_one_minus, LaurentPoly};
pub use series::{one_minus_q_power, pochhammer_at_one_minus, series_mul, series_mul_to, Coeff, RationalSeries, Series, TruncatedSeries};
pub use transforms::{inverse_g, transform_g, transform_h};
