//! The lower bound `δ₀ ≥ dim M + 1` (GLBC) for LG(n) and OG(n).
//!
//! Writing `x = 1/(n+1)` (LG) or `x = 1/n` (OG) and clearing the positive
//! denominators of the closed form for `δ₀`, the bound `δ₀ ≥ d(n)` is
//! equivalent to `f(x) ≥ 0` (LG) or `h(x) ≥ 0` (OG).

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{check_range, Result};
use crate::par::{map_range, Execution};
use crate::qh::{c1_matrix, Space};
use crate::spectral::{delta0_closed_form, perron_root, MAX_VERIFY_RANK};
use crate::tolerance;

/// Largest `n` accepted by [`glbc_report`].
pub const MAX_GLBC_RANK: u32 = 12;

/// Bracket width requested from the power iteration.
const PERRON_TOL: f64 = 1e-10;
const PERRON_MAX_ITER: usize = 200_000;

/// `f(x) = 2x − 2^x (2x² − x + 1) sin(πx/2)`.
pub fn lemma_f(x: f64) -> f64 {
    2.0 * x - 2f64.powf(x) * (2.0 * x * x - x + 1.0) * (PI * x / 2.0).sin()
}

/// `h(x) = 2^{x+1} x − (2x² + x + 1) sin(πx/2)`.
pub fn lemma_h(x: f64) -> f64 {
    2f64.powf(x + 1.0) * x - (2.0 * x * x + x + 1.0) * (PI * x / 2.0).sin()
}

/// `d(n) = n(n+1)/2 + 1`.
pub fn bound(n: u32) -> u32 {
    n * (n + 1) / 2 + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Strict,
    Equality,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GlbcReport {
    pub space: Space,
    pub n: u32,
    pub dim: u32,
    pub bound: u32,
    pub delta0_closed: f64,
    /// Perron root of the exact `c₁` matrix; `None` above the verification rank.
    pub delta0_numeric: Option<f64>,
    pub verdict: Verdict,
    /// `f(1/(n+1))` for LG with `n ≥ 2`, `h(1/n)` for OG with `n ≥ 6`.
    pub lemma_margin: Option<f64>,
}

pub fn glbc_report(space: Space, n: u32) -> Result<GlbcReport> {
    check_range("n", i64::from(n), 1, i64::from(MAX_GLBC_RANK))?;
    let dim = space.dimension(n);
    let bound = bound(n);
    let delta0_closed = delta0_closed_form(space, n);
    let delta0_numeric = if n <= MAX_VERIFY_RANK {
        let m = c1_matrix(space, n)?;
        Some(perron_root(&m.matrix, PERRON_TOL, PERRON_MAX_ITER)?)
    } else {
        None
    };
    let gap = delta0_closed - f64::from(bound);
    let verdict = if gap.abs() <= tolerance::GLBC_EQUALITY {
        Verdict::Equality
    } else if gap > 0.0 {
        Verdict::Strict
    } else {
        Verdict::Fail
    };
    let lemma_margin = match space {
        Space::Lg if n >= 2 => Some(lemma_f(1.0 / f64::from(n + 1))),
        Space::Og if n >= 6 => Some(lemma_h(1.0 / f64::from(n))),
        _ => None,
    };
    Ok(GlbcReport {
        space,
        n,
        dim,
        bound,
        delta0_closed,
        delta0_numeric,
        verdict,
        lemma_margin,
    })
}

/// Reports for `n = 1..=n_max`.
pub fn glbc_table(space: Space, n_max: u32) -> Result<Vec<GlbcReport>> {
    glbc_table_with(Execution::default(), space, n_max)
}

pub fn glbc_table_with(exec: Execution, space: Space, n_max: u32) -> Result<Vec<GlbcReport>> {
    check_range("n_max", i64::from(n_max), 1, i64::from(MAX_GLBC_RANK))?;
    map_range(exec, n_max as usize, |i| glbc_report(space, i as u32 + 1))
        .into_iter()
        .collect()
}
