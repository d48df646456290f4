//! Quantum cohomology of `LG(n)` and `OG(n)` on the Schubert basis.
//!
//! Products come from the quantum Pieri rules of Kresch and Tamvakis. The
//! exposed ring is the specialization at `q = 1`; [`QuantumProduct`] keeps the
//! power of `q` so that grading can still be checked.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    add_horizontal_strips, remove_horizontal_strips, Basis, Partition, SkewShape, StrictPartition,
};
use crate::error::{check_range, Error, Result};
use crate::matrix::IntMatrix;
use crate::par::{map_slice, Execution};

/// Largest `n` for which operator matrices are built (dimension `2ⁿ`).
pub const MAX_OPERATOR_RANK: u32 = 12;

/// Largest `n` accepted by [`check_ring_relations`].
pub const MAX_RELATION_RANK: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Lg,
    Og,
}

impl Space {
    pub const ALL: [Space; 2] = [Space::Lg, Space::Og];

    /// Degree of `q`: `n + 1` for LG, `2n` for OG.
    pub fn q_degree(self, n: u32) -> u32 {
        match self {
            Space::Lg => n + 1,
            Space::Og => 2 * n,
        }
    }

    /// Fano index; equal to the degree of `q`.
    pub fn fano_index(self, n: u32) -> u32 {
        self.q_degree(n)
    }

    /// `c₁ = (n+1)σ₁` on LG and `2nτ₁` on OG.
    pub fn c1_coefficient(self, n: u32) -> i64 {
        i64::from(self.q_degree(n))
    }

    /// Name of the Schubert classes: `sigma` or `tau`.
    pub fn class_symbol(self) -> &'static str {
        match self {
            Space::Lg => "sigma",
            Space::Og => "tau",
        }
    }

    /// `n(n+1)/2`, the complex dimension.
    pub fn dimension(self, n: u32) -> u32 {
        n * (n + 1) / 2
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Lg => "lg",
            Space::Og => "og",
        })
    }
}

impl FromStr for Space {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lg" => Ok(Space::Lg),
            "og" => Ok(Space::Og),
            other => Err(format!("unknown space `{other}` (expected lg or og)")),
        }
    }
}

/// One term `coeff · q^{q_degree} · σ_partition`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumTerm {
    pub partition: StrictPartition,
    pub q_degree: u32,
    pub coeff: u64,
}

/// The result of a Pieri product `σ_k ⋆ σ_λ` with explicit powers of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumProduct {
    pub space: Space,
    pub n: u32,
    pub k: u32,
    pub lambda: StrictPartition,
    /// Sorted by power of `q`, then basis order; no repeated `(q, partition)`.
    pub terms: Vec<QuantumTerm>,
}

impl QuantumProduct {
    /// Specializes `q = 1`, merging terms that land on the same class.
    pub fn at_q_one(&self) -> SchubertVector {
        let mut v = SchubertVector::zero(self.space, self.n);
        for t in &self.terms {
            v.add(&t.partition, Rational64::from_integer(t.coeff as i64));
        }
        v
    }

    /// Every term has degree `|λ| + k`, counting `q` with its degree.
    pub fn is_homogeneous(&self) -> bool {
        let target = self.lambda.weight() + self.k;
        let qd = self.space.q_degree(self.n);
        self.terms
            .iter()
            .all(|t| t.partition.weight() + t.q_degree * qd == target)
    }
}

impl fmt::Display for QuantumProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sym = self.space.class_symbol();
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if t.coeff != 1 {
                factors.push(t.coeff.to_string());
            }
            if !t.partition.is_empty() {
                factors.push(class_name(sym, &t.partition));
            }
            match t.q_degree {
                0 => {}
                1 => factors.push("q".into()),
                d => factors.push(format!("q^{d}")),
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

fn class_name(sym: &str, p: &StrictPartition) -> String {
    let parts: Vec<String> = p.parts().iter().map(u32::to_string).collect();
    format!("{sym}({})", parts.join(","))
}

/// An element of `H^⋆(M; ℚ)` (at `q = 1`) in Schubert coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertVector {
    space: Space,
    n: u32,
    coeffs: BTreeMap<StrictPartition, Rational64>,
}

impl SchubertVector {
    pub fn zero(space: Space, n: u32) -> Self {
        Self {
            space,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The Schubert class `σ_λ` itself.
    pub fn class(space: Space, lambda: &StrictPartition) -> Self {
        let mut v = Self::zero(space, lambda.n());
        v.add(lambda, Rational64::from_integer(1));
        v
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add(&mut self, lambda: &StrictPartition, c: Rational64) {
        debug_assert_eq!(lambda.n(), self.n);
        let slot = self.coeffs.entry(lambda.clone()).or_default();
        *slot += c;
        if *slot == Rational64::from_integer(0) {
            self.coeffs.remove(lambda);
        }
    }

    pub fn coeff(&self, lambda: &StrictPartition) -> Rational64 {
        self.coeffs.get(lambda).copied().unwrap_or_default()
    }

    /// Nonzero coordinates in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&StrictPartition, &Rational64)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for SchubertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let sym = self.space.class_symbol();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(p, c)| match (p.is_empty(), *c == Rational64::from_integer(1)) {
                (true, _) => c.to_string(),
                (false, true) => class_name(sym, p),
                (false, false) => format!("{c}*{}", class_name(sym, p)),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

fn check_pieri_args(k: u32, lambda: &StrictPartition) -> Result<u32> {
    let n = lambda.n();
    check_range("k", i64::from(k), 1, i64::from(n))?;
    Ok(n)
}

fn collect_terms(
    space: Space,
    k: u32,
    lambda: &StrictPartition,
    raw: impl IntoIterator<Item = (Partition, u32, u32)>,
) -> Result<QuantumProduct> {
    let n = lambda.n();
    let mut merged: BTreeMap<(u32, StrictPartition), u64> = BTreeMap::new();
    for (p, q_degree, exponent) in raw {
        let sp = StrictPartition::from_partition(&p, n)?;
        *merged.entry((q_degree, sp)).or_default() += 1u64 << exponent;
    }
    Ok(QuantumProduct {
        space,
        n,
        k,
        lambda: lambda.clone(),
        terms: merged
            .into_iter()
            .map(|((q_degree, partition), coeff)| QuantumTerm {
                partition,
                q_degree,
                coeff,
            })
            .collect(),
    })
}

fn skew(outer: &Partition, inner: &Partition) -> SkewShape {
    SkewShape::new(outer.clone(), inner.clone()).expect("strip generators keep containment")
}

/// `σ_k ⋆ σ_λ` in `qH*(LG(n))`.
///
/// Classical terms: strict `μ ⊇ λ`, `μ₁ ≤ n`, `μ/λ` a horizontal strip of
/// size `k`, coefficient `2^{N(λ,μ)}`. Quantum terms: strict `ν ⊆ λ` with
/// `λ/ν` a horizontal strip of size `n + 1 − k`, coefficient `2^{N′(ν,λ)} q`.
pub fn pieri_lg(k: u32, lambda: &StrictPartition) -> Result<QuantumProduct> {
    let n = check_pieri_args(k, lambda)?;
    let lam = lambda.as_partition();
    let mut raw = Vec::new();
    for mu in add_horizontal_strips(&lam, k, n) {
        if mu.is_strict() {
            let e = skew(&mu, &lam).component_counts().n();
            raw.push((mu, 0, e));
        }
    }
    if lam.weight() + k > n {
        for nu in remove_horizontal_strips(&lam, n + 1 - k) {
            if nu.is_strict() {
                let e = skew(&lam, &nu).component_counts().n_prime();
                raw.push((nu, 1, e));
            }
        }
    }
    collect_terms(Space::Lg, k, lambda, raw)
}

/// `τ_k ⋆ τ_λ` in `qH*(OG(n))`.
///
/// Runs over `μ ⊇ λ`, `μ₁ ≤ n`, `μ/λ` a horizontal strip of size `k`, with
/// coefficient `2^{N′(λ,μ)}`. Strict `μ` give classical terms; `μ` with
/// `μ₁ = μ₂ = n` give `τ_{μ∖(n,n)} q`.
pub fn pieri_og(k: u32, lambda: &StrictPartition) -> Result<QuantumProduct> {
    let n = check_pieri_args(k, lambda)?;
    let lam = lambda.as_partition();
    let mut raw = Vec::new();
    for mu in add_horizontal_strips(&lam, k, n) {
        let e = skew(&mu, &lam).component_counts().n_prime();
        if mu.is_strict() {
            raw.push((mu, 0, e));
        } else if mu.part(0) == n && mu.part(1) == n {
            let rest = Partition::new(mu.parts()[2..].to_vec())?;
            if rest.is_strict() {
                raw.push((rest, 1, e));
            }
        }
    }
    collect_terms(Space::Og, k, lambda, raw)
}

pub fn pieri(space: Space, k: u32, lambda: &StrictPartition) -> Result<QuantumProduct> {
    match space {
        Space::Lg => pieri_lg(k, lambda),
        Space::Og => pieri_og(k, lambda),
    }
}

/// Matrix of a quantum multiplication operator at `q = 1` on the Schubert
/// basis in canonical order. Column `j` is the image of basis element `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub space: Space,
    pub n: u32,
    pub matrix: IntMatrix,
}

impl OperatorMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Applies the operator to a vector in exact rational arithmetic.
    pub fn apply(&self, v: &SchubertVector) -> Result<SchubertVector> {
        let basis = Basis::new(self.n)?;
        let mut out = SchubertVector::zero(self.space, self.n);
        for (lambda, c) in v.iter() {
            let j = basis.index_of(lambda).ok_or(Error::InvalidPartition {
                parts: lambda.parts().to_vec(),
                reason: "not in the basis of this operator",
            })?;
            for (i, mu) in basis.elements().iter().enumerate() {
                let a = self.matrix[(i, j)];
                if a != 0 {
                    out.add(mu, *c * a);
                }
            }
        }
        Ok(out)
    }
}

fn check_operator_rank(n: u32) -> Result<()> {
    check_range("n", i64::from(n), 1, i64::from(MAX_OPERATOR_RANK))
}

/// `[σ_k]` (LG) or `[τ_k]` (OG) at `q = 1`.
pub fn operator_matrix(space: Space, n: u32, k: u32) -> Result<OperatorMatrix> {
    operator_matrix_with(Execution::default(), space, n, k)
}

pub fn operator_matrix_with(exec: Execution, space: Space, n: u32, k: u32) -> Result<OperatorMatrix> {
    check_operator_rank(n)?;
    check_range("k", i64::from(k), 1, i64::from(n))?;
    let basis = Basis::new(n)?;
    let columns = map_slice(exec, basis.elements(), |lambda| pieri(space, k, lambda));
    let mut matrix = IntMatrix::zeros(basis.len());
    for (j, col) in columns.into_iter().enumerate() {
        for t in col?.terms {
            let i = basis.index_of(&t.partition).expect("Pieri terms lie in the basis");
            matrix[(i, j)] += t.coeff as i64;
        }
    }
    Ok(OperatorMatrix { space, n, matrix })
}

/// `[c₁(M)]`: `(n+1)[σ₁]` on LG, `2n[τ₁]` on OG.
pub fn c1_matrix(space: Space, n: u32) -> Result<OperatorMatrix> {
    c1_matrix_with(Execution::default(), space, n)
}

pub fn c1_matrix_with(exec: Execution, space: Space, n: u32) -> Result<OperatorMatrix> {
    let base = operator_matrix_with(exec, space, n, 1)?;
    Ok(OperatorMatrix {
        matrix: base.matrix.checked_scale(space.c1_coefficient(n))?,
        ..base
    })
}

/// One ring relation evaluated on operator matrices; zero when it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationResidual {
    pub label: String,
    pub residual: IntMatrix,
}

/// All Pieri operators `[σ₁], …, [σₙ]` (or `τ`) for one `n`.
pub fn pieri_operators(exec: Execution, space: Space, n: u32) -> Result<Vec<IntMatrix>> {
    (1..=n)
        .map(|k| operator_matrix_with(exec, space, n, k).map(|m| m.matrix))
        .collect()
}

/// Evaluates the defining relations of the ring presentation as identities of
/// operator matrices at `q = 1`.
///
/// LG, for `1 ≤ i ≤ n`:
/// `σᵢ² + 2Σ_{k=1}^{n−i} (−1)ᵏ σ_{i+k}σ_{i−k} − (−1)^{n−i} σ_{2i−n−1}`.
/// OG: `τ_{i,i} = τᵢ² + 2Σ_{k=1}^{i−1} (−1)ᵏ τ_{i+k}τ_{i−k} + (−1)ⁱ τ_{2i}` for
/// `1 ≤ i < n`, and `τₙ² − 1`.
///
/// Single-row classes with index below 0 or above `n` are zero; index 0 is
/// the unit.
pub fn check_ring_relations(space: Space, n: u32) -> Result<Vec<RelationResidual>> {
    check_ring_relations_with(Execution::default(), space, n)
}

pub fn check_ring_relations_with(exec: Execution, space: Space, n: u32) -> Result<Vec<RelationResidual>> {
    check_range("n", i64::from(n), 1, i64::from(MAX_RELATION_RANK))?;
    let ops = pieri_operators(exec, space, n)?;
    let dim = 1usize << n;
    let single = |j: i64| -> IntMatrix {
        match j {
            0 => IntMatrix::identity(dim),
            j if j < 0 || j > i64::from(n) => IntMatrix::zeros(dim),
            j => ops[j as usize - 1].clone(),
        }
    };
    let mul = |a: &IntMatrix, b: &IntMatrix| a.checked_mul_with(b, exec);
    let sign = |e: i64| if e % 2 == 0 { 1 } else { -1 };
    let ni = i64::from(n);
    let mut out = Vec::new();
    match space {
        Space::Lg => {
            for i in 1..=ni {
                let si = single(i);
                let mut acc = mul(&si, &si)?;
                for k in 1..=ni - i {
                    let prod = mul(&single(i + k), &single(i - k))?;
                    acc = acc.checked_add_scaled(&prod, 2 * sign(k))?;
                }
                acc = acc.checked_add_scaled(&single(2 * i - ni - 1), -sign(ni - i))?;
                out.push(RelationResidual {
                    label: format!("sigma_{i}^2 relation"),
                    residual: acc,
                });
            }
        }
        Space::Og => {
            for i in 1..ni {
                let ti = single(i);
                let mut acc = mul(&ti, &ti)?;
                for k in 1..i {
                    let prod = mul(&single(i + k), &single(i - k))?;
                    acc = acc.checked_add_scaled(&prod, 2 * sign(k))?;
                }
                acc = acc.checked_add_scaled(&single(2 * i), sign(i))?;
                out.push(RelationResidual {
                    label: format!("tau_({i},{i}) = 0"),
                    residual: acc,
                });
            }
            let tn = single(ni);
            out.push(RelationResidual {
                label: format!("tau_{n}^2 = q"),
                residual: mul(&tn, &tn)?.checked_sub(&IntMatrix::identity(dim))?,
            });
        }
    }
    Ok(out)
}
