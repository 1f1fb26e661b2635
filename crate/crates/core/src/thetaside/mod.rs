//! The theta side: periodic weights, their Fourier coefficients, and the
//! coefficient sequences read off from the partial theta series.

pub mod gsum;
pub mod identity;
pub mod periodic;
pub mod sequences;

pub use gsum::{find_k_nu, g_enclosure, g_exact, g_is_zero, g_nonzero_enclosure, g_value, GValue};
pub use identity::StrangeIdentity;
pub use periodic::{make_chi_k, make_chi_m_ell, make_chi_t, PeriodicFunction};
pub use sequences::{b_sequence, c_sequence, theta_xi, xi_from_theta, BSequence, CSequence};
