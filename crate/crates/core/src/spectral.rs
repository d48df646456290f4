//! Eigentheory of the quantum multiplication operators at `q = 1`.
//!
//! For LG(n) the eigenvectors are indexed by `I ∈ ℐᵉ_{n+1}` and live at the
//! point `δζᴵ`, `δ = 2^{−1/(n+1)}`, `ζ = exp(πi/(n+1))`:
//! `σ_I = Σ_ν Q̃_ν(δζᴵ) σ_ν̂`, with `[σ_k]` acting by `E_k(δζᴵ)`.
//! For OG(n) they are indexed by `I ∈ ℐₙ` at `εζᴵ`, `ε = 2^{1/n}`,
//! `ζ = exp(πi/n)`: `τ_I = Σ_ν P̃_ν(εζᴵ) τ_ν̂`, with `[τ_k]` acting by
//! `P̃_k(εζᴵ) = E_k(εζᴵ)/2`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::combinatorics::Basis;
use crate::error::{check_range, Error, Result};
use crate::matrix::IntMatrix;
use crate::par::{map_range, map_slice, Execution};
use crate::qh::{operator_matrix_with, Space};
use crate::sympoly::{index_sets, zeta_point, ComplexTuple, IndexTuple, SymmetricEvaluator};
use crate::tolerance;

/// Largest `n` for which eigenbases and closed-form spectra are built.
pub const MAX_EIGEN_RANK: u32 = 10;

/// Largest `n` for residual checks and Property 𝒪.
pub const MAX_VERIFY_RANK: u32 = 8;

/// Largest `n` accepted by [`rietsch_check`].
pub const MAX_RIETSCH_RANK: u32 = 12;

/// Pairs of normalized eigenvectors with `|⟨u, v⟩|` above this are
/// reported as proportional.
const PROPORTIONAL_COSINE: f64 = 1.0 - 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub index: IndexTuple,
    /// Eigenvalue of the `k`-th Pieri operator at position `k − 1`.
    pub pieri_eigenvalues: Vec<Complex64>,
    /// Coordinates in canonical basis order.
    pub eigenvector: Vec<Complex64>,
}

impl EigenPair {
    /// Claimed eigenvalue of `[σ_k]` / `[τ_k]`, `1 ≤ k ≤ n`.
    pub fn eigenvalue(&self, k: u32) -> Complex64 {
        self.pieri_eigenvalues[k as usize - 1]
    }

    /// Eigenvalue of `[c₁(M)]`.
    pub fn c1_eigenvalue(&self, space: Space, n: u32) -> Complex64 {
        self.eigenvalue(1) * space.c1_coefficient(n) as f64
    }
}

/// The root-of-unity index set and the scaled evaluation point for each
/// eigenvector.
pub fn evaluation_points(space: Space, n: u32) -> Result<Vec<(IndexTuple, ComplexTuple)>> {
    let (indices, scale) = match space {
        Space::Lg => (index_sets(n + 1)?.even, 0.5f64.powf(1.0 / f64::from(n + 1))),
        Space::Og => (index_sets(n)?.admissible, 2f64.powf(1.0 / f64::from(n))),
    };
    Ok(indices
        .into_iter()
        .map(|i| {
            let x = zeta_point(&i, scale);
            (i, x)
        })
        .collect())
}

pub fn eigenbasis_lg(n: u32) -> Result<Vec<EigenPair>> {
    eigenbasis_with(Execution::default(), Space::Lg, n)
}

pub fn eigenbasis_og(n: u32) -> Result<Vec<EigenPair>> {
    eigenbasis_with(Execution::default(), Space::Og, n)
}

/// Builds all `2ⁿ` eigenpairs and rejects the set if two vectors are
/// proportional.
pub fn eigenbasis_with(exec: Execution, space: Space, n: u32) -> Result<Vec<EigenPair>> {
    check_range("n", i64::from(n), 1, i64::from(MAX_EIGEN_RANK))?;
    let basis = Basis::new(n)?;
    let hat = basis.complement_indices();
    let points = evaluation_points(space, n)?;
    let pairs = map_slice(exec, &points, |(index, x)| -> Result<EigenPair> {
        let ev = SymmetricEvaluator::new(x);
        let mut eigenvector = vec![Complex64::new(0.0, 0.0); basis.len()];
        for (nu, &slot) in basis.elements().iter().zip(&hat) {
            let p = nu.as_partition();
            eigenvector[slot] = match space {
                Space::Lg => ev.qtilde(&p)?,
                Space::Og => ev.ptilde(&p)?,
            };
        }
        let factor = match space {
            Space::Lg => 1.0,
            Space::Og => 0.5,
        };
        let pieri_eigenvalues = (1..=i64::from(n)).map(|k| ev.e(k) * factor).collect();
        Ok(EigenPair {
            index: index.clone(),
            pieri_eigenvalues,
            eigenvector,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    check_pairwise_independent(exec, &pairs)?;
    Ok(pairs)
}

fn check_pairwise_independent(exec: Execution, pairs: &[EigenPair]) -> Result<()> {
    let unit: Vec<Vec<Complex64>> = pairs
        .iter()
        .map(|p| {
            let norm = p.eigenvector.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
            p.eigenvector.iter().map(|z| z / norm).collect()
        })
        .collect();
    let clash = map_range(exec, unit.len(), |a| {
        (a + 1..unit.len()).find_map(|b| {
            let dot: Complex64 = unit[a].iter().zip(&unit[b]).map(|(x, y)| x.conj() * y).sum();
            (dot.norm() > PROPORTIONAL_COSINE).then_some((a, b))
        })
    });
    match clash.into_iter().flatten().next() {
        Some((first, second)) => Err(Error::Degenerate { first, second }),
        None => Ok(()),
    }
}

/// Outcome of checking `M_k v = λ_{k,I} v` for every Pieri operator and pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenCheck {
    pub max_residual: f64,
    /// `(k, position of the pair)` where the maximum occurred.
    pub worst: (u32, usize),
    pub tol: f64,
    pub passed: bool,
}

/// Dense `Mv` for an integer matrix applied to a complex vector.
fn apply(m: &IntMatrix, v: &[Complex64]) -> Vec<Complex64> {
    (0..m.dim())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .filter(|(a, _)| **a != 0)
                .map(|(&a, z)| z * a as f64)
                .sum()
        })
        .collect()
}

fn sup_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max_{k, I} ‖M_k v_I − λ_{k,I} v_I‖∞ / ‖v_I‖∞` over the exact Pieri matrices.
pub fn verify_eigenpairs(space: Space, n: u32, tol: f64) -> Result<EigenCheck> {
    verify_eigenpairs_with(Execution::default(), space, n, tol)
}

pub fn verify_eigenpairs_with(exec: Execution, space: Space, n: u32, tol: f64) -> Result<EigenCheck> {
    check_range("n", i64::from(n), 1, i64::from(MAX_VERIFY_RANK))?;
    let pairs = eigenbasis_with(exec, space, n)?;
    let mut best = EigenCheck {
        max_residual: 0.0,
        worst: (1, 0),
        tol,
        passed: true,
    };
    for k in 1..=n {
        let m = operator_matrix_with(exec, space, n, k)?.matrix;
        let residuals = map_slice(exec, &pairs, |p| {
            let mv = apply(&m, &p.eigenvector);
            let lambda = p.eigenvalue(k);
            let diff: Vec<Complex64> = mv.iter().zip(&p.eigenvector).map(|(a, v)| a - lambda * v).collect();
            sup_norm(&diff) / sup_norm(&p.eigenvector)
        });
        for (pos, r) in residuals.into_iter().enumerate() {
            if r > best.max_residual || r.is_nan() {
                best.max_residual = r;
                best.worst = (k, pos);
            }
        }
    }
    best.passed = best.max_residual <= tol;
    Ok(best)
}

/// Result of [`perron_root_detailed`]: the root lies in `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerronEstimate {
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
}

/// Dominant eigenvalue of a nonnegative irreducible matrix.
pub fn perron_root(m: &IntMatrix, tol: f64, max_iter: usize) -> Result<f64> {
    perron_root_detailed(m, tol, max_iter).map(|e| e.value)
}

/// Power iteration on `M + sI` from the all-ones vector.
///
/// The Pieri operators are cyclic (their spectra are invariant under rotation
/// by the Fano index), so plain power iteration on `M` does not settle; the
/// positive shift `s` makes the Perron root strictly dominant. Convergence is
/// declared when the Collatz–Wielandt bracket
/// `min (Mx)ᵢ/xᵢ ≤ ρ ≤ max (Mx)ᵢ/xᵢ` is narrower than `tol`.
pub fn perron_root_detailed(m: &IntMatrix, tol: f64, max_iter: usize) -> Result<PerronEstimate> {
    if !m.is_nonnegative() || !m.is_irreducible() {
        return Err(Error::NotPerronFrobenius);
    }
    let d = m.dim();
    let a = m.to_f64();
    let row_sums: Vec<f64> = a.chunks(d).map(|r| r.iter().sum()).collect();
    let shift =
        (row_sums.iter().copied().fold(f64::INFINITY, f64::min) + row_sums.iter().copied().fold(0.0, f64::max)) / 2.0;
    let mut x = vec![1.0; d];
    let mut y = vec![0.0; d];
    let mut estimate = f64::NAN;
    for it in 1..=max_iter {
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &a[i * d..(i + 1) * d];
            *yi = shift * x[i] + row.iter().zip(&x).map(|(aij, xj)| aij * xj).sum::<f64>();
        }
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yi, xi) in y.iter().zip(&x) {
            let r = yi / xi;
            lo = lo.min(r);
            hi = hi.max(r);
        }
        let (lower, upper) = (lo - shift, hi - shift);
        estimate = 0.5 * (lower + upper);
        if upper - lower <= tol {
            return Ok(PerronEstimate {
                value: estimate,
                lower,
                upper,
                iterations: it,
            });
        }
        let top = y.iter().copied().fold(0.0, f64::max);
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / top;
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        estimate,
    })
}

/// `δ₀ = 2^{−1/(n+1)} (n+1) / sin(π/(2(n+1)))` for LG and
/// `δ₀ = 2^{1/n} n / sin(π/(2n))` for OG.
pub fn delta0_closed_form(space: Space, n: u32) -> f64 {
    match space {
        Space::Lg => {
            let m = f64::from(n + 1);
            2f64.powf(-1.0 / m) * m / (PI / (2.0 * m)).sin()
        }
        Space::Og => {
            let m = f64::from(n);
            2f64.powf(1.0 / m) * m / (PI / (2.0 * m)).sin()
        }
    }
}

/// The `2ⁿ` eigenvalues of `[c₁(M)]` from the closed forms, and `δ₀`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub space: Space,
    pub n: u32,
    /// One value per evaluation point, in index-set order.
    #[serde(skip)]
    pub values: Vec<Complex64>,
    pub delta0: f64,
}

pub fn closed_form_spectrum(space: Space, n: u32) -> Result<Spectrum> {
    check_range("n", i64::from(n), 1, i64::from(MAX_EIGEN_RANK))?;
    let c = space.c1_coefficient(n) as f64;
    let factor = match space {
        Space::Lg => c,
        Space::Og => c / 2.0,
    };
    let values: Vec<Complex64> = evaluation_points(space, n)?
        .iter()
        .map(|(_, x)| x.coords().iter().sum::<Complex64>() * factor)
        .collect();
    let delta0 = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(Spectrum {
        space,
        n,
        values,
        delta0,
    })
}

/// Sorts by `(re, im)` and greedily pairs each value of `a` with an unused
/// value of `b` within `tol`.
pub fn multisets_match(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let key = |z: &Complex64, w: &Complex64| z.re.total_cmp(&w.re).then(z.im.total_cmp(&w.im));
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(key);
    b.sort_by(key);
    let mut used = vec![false; b.len()];
    a.iter().all(|z| {
        let hit = b
            .iter()
            .enumerate()
            .position(|(j, w)| !used[j] && (z - w).norm() <= tol);
        if let Some(j) = hit {
            used[j] = true;
        }
        hit.is_some()
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RietschReport {
    pub n: u32,
    #[serde(skip)]
    pub maximizers: Vec<IndexTuple>,
    pub value_re: f64,
    pub value_im: f64,
    pub expected: f64,
    pub passed: bool,
}

impl RietschReport {
    pub fn maximizer(&self) -> &IndexTuple {
        &self.maximizers[0]
    }
}

/// Maximizes `Re E₁(ζᴵ)` over `ℐₙ` and compares with `1/sin(π/2n)`.
pub fn rietsch_check(n: u32) -> Result<RietschReport> {
    check_range("n", i64::from(n), 1, i64::from(MAX_RIETSCH_RANK))?;
    let sets = index_sets(n)?;
    let sums: Vec<Complex64> = sets
        .admissible
        .iter()
        .map(|i| zeta_point(i, 1.0).coords().iter().sum())
        .collect();
    let best = sums.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let winners: Vec<usize> = (0..sums.len()).filter(|&i| sums[i].re >= best - 1e-12).collect();
    let value = sums[winners[0]];
    let expected = 1.0 / (PI / (2.0 * f64::from(n))).sin();
    let passed = winners.iter().all(|&i| sums[i].im.abs() <= tolerance::RIETSCH_IMAG)
        && (value.re - expected).abs() <= tolerance::RIETSCH_VALUE;
    Ok(RietschReport {
        n,
        maximizers: winners.iter().map(|&i| sets.admissible[i].clone()).collect(),
        value_re: value.re,
        value_im: value.im,
        expected,
        passed,
    })
}

/// The three items of Property 𝒪 for `[c₁(M)]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyOReport {
    pub space: Space,
    pub n: u32,
    pub fano_index: u32,
    pub delta0: f64,
    /// Eigenvalues of modulus `δ₀` (within tolerance).
    #[serde(skip)]
    pub peripheral: Vec<Complex64>,
    /// (1) `δ₀` itself is an eigenvalue.
    pub is_eigenvalue: bool,
    /// (2) exactly one eigenvalue equals `δ₀`.
    pub simple: bool,
    /// (3) every modulus-`δ₀` eigenvalue is `δ₀ξ` with `ξ^r = 1`.
    pub rotations_by_roots_of_unity: bool,
    pub tol: f64,
}

impl PropertyOReport {
    pub fn passed(&self) -> bool {
        self.is_eigenvalue && self.simple && self.rotations_by_roots_of_unity
    }
}

pub fn property_o_check(space: Space, n: u32, tol: f64) -> Result<PropertyOReport> {
    check_range("n", i64::from(n), 1, i64::from(MAX_VERIFY_RANK))?;
    let spec = closed_form_spectrum(space, n)?;
    let delta0 = spec.delta0;
    let r = space.fano_index(n);
    let at_delta0 = spec
        .values
        .iter()
        .filter(|z| (**z - Complex64::new(delta0, 0.0)).norm() <= tol)
        .count();
    let peripheral: Vec<Complex64> = spec
        .values
        .iter()
        .copied()
        .filter(|z| (z.norm() - delta0).abs() <= tol)
        .collect();
    let step = 2.0 * PI / f64::from(r);
    let rotations_by_roots_of_unity = peripheral.iter().all(|z| {
        let m = (z.arg() / step).round();
        (z - Complex64::from_polar(delta0, m * step)).norm() <= tol
    });
    Ok(PropertyOReport {
        space,
        n,
        fano_index: r,
        delta0,
        peripheral,
        is_eigenvalue: at_delta0 >= 1,
        simple: at_delta0 == 1,
        rotations_by_roots_of_unity,
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qh::c1_matrix;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn lg1_eigenpairs() {
        let pairs = eigenbasis_lg(1).unwrap();
        assert_eq!(pairs.len(), 2);
        let mut vals: Vec<f64> = pairs.iter().map(|p| p.eigenvalue(1).re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 1.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12);
        let check = verify_eigenpairs(Space::Lg, 1, 1e-12).unwrap();
        assert!(check.passed, "{check:?}");
    }

    #[test]
    fn og_small_spectra() {
        let s1 = closed_form_spectrum(Space::Og, 1).unwrap();
        assert!(multisets_match(&s1.values, &[c(2.0, 0.0), c(-2.0, 0.0)], 1e-12));
        let s2 = closed_form_spectrum(Space::Og, 2).unwrap();
        let want = [c(4.0, 0.0), c(-4.0, 0.0), c(0.0, 4.0), c(0.0, -4.0)];
        assert!(multisets_match(&s2.values, &want, 1e-10));
        assert!((s2.delta0 - 4.0).abs() < 1e-12);
    }

    #[test]
    fn lg2_spectrum_maximum() {
        let s = closed_form_spectrum(Space::Lg, 2).unwrap();
        let want = 6.0 * 2f64.powf(-1.0 / 3.0);
        assert!((s.delta0 - want).abs() < 1e-12);
        assert!((delta0_closed_form(Space::Lg, 2) - want).abs() < 1e-12);
    }

    #[test]
    fn small_verifications() {
        for (space, n) in [(Space::Og, 2), (Space::Lg, 2), (Space::Og, 3), (Space::Lg, 3)] {
            let check = verify_eigenpairs(space, n, 1e-8).unwrap();
            assert!(check.passed, "{space} {n}: {check:?}");
        }
        assert!(verify_eigenpairs(Space::Og, 9, 1e-8).is_err());
    }

    #[test]
    fn counts() {
        for n in 1..=5 {
            assert_eq!(eigenbasis_lg(n).unwrap().len(), 1 << n);
            assert_eq!(eigenbasis_og(n).unwrap().len(), 1 << n);
        }
    }

    #[test]
    fn perron_examples() {
        let a1 = c1_matrix(Space::Og, 1).unwrap().matrix;
        assert!((perron_root(&a1, 1e-12, 1000).unwrap() - 2.0).abs() < 1e-12);
        let a2 = c1_matrix(Space::Og, 2).unwrap().matrix;
        assert!((perron_root(&a2, 1e-12, 1000).unwrap() - 4.0).abs() < 1e-12);
        let og3 = c1_matrix(Space::Og, 3).unwrap().matrix;
        let root = perron_root(&og3, 1e-10, 100_000).unwrap();
        let closed = 2f64.powf(1.0 / 3.0) * 3.0 / (PI / 6.0).sin();
        assert!((root - closed).abs() < 1e-8, "{root} vs {closed}");
        assert!((root - 7.5595).abs() < 1e-4);
    }

    #[test]
    fn perron_rejects_bad_input() {
        let reducible = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(perron_root(&reducible, 1e-9, 10), Err(Error::NotPerronFrobenius));
        let negative = IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(perron_root(&negative, 1e-9, 10), Err(Error::NotPerronFrobenius));
        let og4 = c1_matrix(Space::Og, 4).unwrap().matrix;
        assert!(matches!(
            perron_root(&og4, 1e-14, 2),
            Err(Error::NoConvergence { iterations: 2, .. })
        ));
    }

    #[test]
    fn closed_form_values() {
        assert!((delta0_closed_form(Space::Lg, 1) - 2.0).abs() < 1e-12);
        assert!((delta0_closed_form(Space::Og, 2) - 4.0).abs() < 1e-12);
        assert!((delta0_closed_form(Space::Og, 4) - 12.43).abs() < 0.01);
    }

    #[test]
    fn rietsch_small() {
        let r1 = rietsch_check(1).unwrap();
        assert!(r1.passed && (r1.value_re - 1.0).abs() < 1e-12);
        let r2 = rietsch_check(2).unwrap();
        assert!(r2.passed && (r2.value_re - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(r2.maximizer().to_string(), "(-1/2,1/2)");
        let r4 = rietsch_check(4).unwrap();
        assert!(r4.passed && (r4.value_re - 2.6131).abs() < 1e-4);
        assert!(rietsch_check(13).is_err());
    }

    #[test]
    fn property_o_small() {
        let og2 = property_o_check(Space::Og, 2, 1e-8).unwrap();
        assert!(og2.passed());
        assert_eq!(og2.fano_index, 4);
        let want = [c(4.0, 0.0), c(0.0, 4.0), c(-4.0, 0.0), c(0.0, -4.0)];
        assert!(multisets_match(&og2.peripheral, &want, 1e-10));
        let og1 = property_o_check(Space::Og, 1, 1e-8).unwrap();
        assert!(og1.passed() && og1.peripheral.len() == 2);
        let lg2 = property_o_check(Space::Lg, 2, 1e-8).unwrap();
        assert!(lg2.passed() && lg2.fano_index == 3);
    }

    #[test]
    fn multiset_matching() {
        let a = [c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)];
        assert!(multisets_match(&a, &[c(0.0, 1.0), c(1.0, 1e-12), c(1.0, 0.0)], 1e-9));
        assert!(!multisets_match(&a, &[c(0.0, 1.0), c(0.0, 1.0), c(1.0, 0.0)], 1e-9));
        assert!(!multisets_match(&a, &a[..2], 1e-9));
    }

    #[test]
    fn execution_modes_agree() {
        let s = eigenbasis_with(Execution::Sequential, Space::Og, 4).unwrap();
        let p = eigenbasis_with(Execution::Parallel, Space::Og, 4).unwrap();
        assert_eq!(s, p);
    }
}
