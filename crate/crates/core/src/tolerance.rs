//! Tolerances shared by the verification routines and their tests.

/// Default absolute tolerance for comparing complex evaluations.
pub const DEFAULT_ABS: f64 = 1e-9;

/// Default relative tolerance for comparing complex evaluations.
pub const DEFAULT_REL: f64 = 1e-9;

/// Default bound on the relative eigen-residual `‖Mv − λv‖∞ / ‖v‖∞`.
pub const EIGEN_RESIDUAL: f64 = 1e-8;

/// Perron root against the closed form for `δ₀`.
pub const PERRON_VS_CLOSED: f64 = 1e-7;

/// `δ₀` within this of `dim + 1` counts as the equality case.
pub const GLBC_EQUALITY: f64 = 1e-9;

/// Largest imaginary part accepted for the real maximum of `E₁(ζᴵ)`.
pub const RIETSCH_IMAG: f64 = 1e-10;

/// Agreement of `max Re E₁(ζᴵ)` with `1 / sin(π/2n)`.
pub const RIETSCH_VALUE: f64 = 1e-9;

/// `a ≈ b` with an absolute floor and a relative term.
pub fn close(a: f64, b: f64, abs: f64, rel: f64) -> bool {
    (a - b).abs() <= abs.max(rel * a.abs().max(b.abs()))
}
