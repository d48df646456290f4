//! Evaluation of the Pragacz–Ratajski `Q̃`/`P̃` polynomials at complex points,
//! and the root-of-unity index sets the eigenbasis is built from.

use std::f64::consts::PI;
use std::fmt;

use itertools::Itertools;
use num_complex::Complex64;

use crate::combinatorics::Partition;
use crate::error::{check_range, Error, Result};

/// Largest `n` accepted by [`index_sets`].
pub const MAX_INDEX_RANK: u32 = 14;

/// Matrices up to this size use first-row expansion in [`pfaffian`];
/// larger ones use elimination.
pub const EXPANSION_LIMIT: usize = 10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A point `(x₁, …, xₙ) ∈ ℂⁿ`, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexTuple(Vec<Complex64>);

impl ComplexTuple {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::OutOfRange {
                what: "tuple length",
                value: 0,
                min: 1,
                max: i64::MAX,
            });
        }
        Ok(Self(coords))
    }

    pub fn from_reals(coords: &[f64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `E₀, …, Eₙ` of `x` by the product expansion `∏(1 + xᵢt)`.
pub fn elementary_all(x: &ComplexTuple) -> Vec<Complex64> {
    let mut e = vec![ZERO; x.len() + 1];
    e[0] = ONE;
    for (done, &xi) in x.coords().iter().enumerate() {
        for k in (1..=done + 1).rev() {
            let prev = e[k - 1];
            e[k] += xi * prev;
        }
    }
    e
}

/// `E_k(x)`; zero for `k < 0` or `k > n`.
pub fn elementary_symmetric(k: i64, x: &ComplexTuple) -> Complex64 {
    SymmetricEvaluator::new(x).e(k)
}

/// `Q̃_{i,j}(x)` for `i ≥ j ≥ 0`.
pub fn qtilde_two_row(i: u32, j: u32, x: &ComplexTuple) -> Result<Complex64> {
    SymmetricEvaluator::new(x).qtilde_two_row(i, j)
}

/// `Q̃_λ(x)`.
pub fn qtilde(lambda: &Partition, x: &ComplexTuple) -> Result<Complex64> {
    SymmetricEvaluator::new(x).qtilde(lambda)
}

/// `P̃_λ(x) = 2^{-l(λ)} Q̃_λ(x)`.
pub fn ptilde(lambda: &Partition, x: &ComplexTuple) -> Result<Complex64> {
    SymmetricEvaluator::new(x).ptilde(lambda)
}

/// Caches `E₀…Eₙ` of one point so many `Q̃_λ` can be evaluated there.
#[derive(Debug, Clone)]
pub struct SymmetricEvaluator {
    e: Vec<Complex64>,
}

impl SymmetricEvaluator {
    pub fn new(x: &ComplexTuple) -> Self {
        Self { e: elementary_all(x) }
    }

    /// Number of coordinates of the point.
    pub fn arity(&self) -> usize {
        self.e.len() - 1
    }

    pub fn e(&self, k: i64) -> Complex64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.e.get(k).copied())
            .unwrap_or(ZERO)
    }

    pub fn qtilde_two_row(&self, i: u32, j: u32) -> Result<Complex64> {
        if i < j {
            return Err(Error::KernelOrder { i, j });
        }
        let (i, j) = (i64::from(i), i64::from(j));
        let mut tail = ZERO;
        for k in 1..=j {
            let term = self.e(i + k) * self.e(j - k);
            if k % 2 == 0 {
                tail += term;
            } else {
                tail -= term;
            }
        }
        Ok(self.e(i) * self.e(j) + tail * 2.0)
    }

    pub fn qtilde(&self, lambda: &Partition) -> Result<Complex64> {
        let n = self.arity() as u32;
        if !lambda.fits(n) {
            return Err(Error::OutOfRange {
                what: "largest part",
                value: i64::from(lambda.part(0).max(lambda.len() as u32)),
                min: 0,
                max: i64::from(n),
            });
        }
        let mut parts = lambda.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        let r = parts.len();
        let mut entries = Vec::with_capacity(r * (r.saturating_sub(1)) / 2);
        for a in 0..r {
            for b in a + 1..r {
                entries.push(self.qtilde_two_row(parts[a], parts[b])?);
            }
        }
        let mut it = entries.into_iter();
        let b = SkewSymMatrix::from_upper(r, |_, _| it.next().expect("entry count"));
        pfaffian(&b)
    }

    pub fn ptilde(&self, lambda: &Partition) -> Result<Complex64> {
        Ok(self.qtilde(lambda)? * 0.5f64.powi(lambda.len() as i32))
    }
}

/// A skew-symmetric complex matrix, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewSymMatrix {
    size: usize,
    data: Vec<Complex64>,
}

impl SkewSymMatrix {
    /// Fills the strict upper triangle row by row from `f(i, j)`, `i < j`,
    /// and mirrors it with a sign flip.
    pub fn from_upper(size: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = vec![ZERO; size * size];
        for i in 0..size {
            for j in i + 1..size {
                let v = f(i, j);
                data[i * size + j] = v;
                data[j * size + i] = -v;
            }
        }
        Self { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.size + j]
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Complex64> {
        self.data.clone()
    }
}

/// `Pf(B)`, with `Pf` of the empty matrix equal to 1.
pub fn pfaffian(b: &SkewSymMatrix) -> Result<Complex64> {
    if b.size() <= EXPANSION_LIMIT {
        pfaffian_expansion(b)
    } else {
        pfaffian_elimination(b)
    }
}

/// Recursive expansion along the first row:
/// `Pf(B) = Σ_{j≥2} (−1)ʲ b₁ⱼ Pf(B without rows/cols 1, j)`.
pub fn pfaffian_expansion(b: &SkewSymMatrix) -> Result<Complex64> {
    fn go(b: &SkewSymMatrix, idx: &[usize]) -> Complex64 {
        match idx {
            [] => ONE,
            [i, j] => b.get(*i, *j),
            [first, rest @ ..] => {
                let mut acc = ZERO;
                let mut minor = Vec::with_capacity(rest.len() - 1);
                for (p, &j) in rest.iter().enumerate() {
                    let bij = b.get(*first, j);
                    if bij == ZERO {
                        continue;
                    }
                    minor.clear();
                    minor.extend(rest.iter().copied().filter(|&k| k != j));
                    let term = bij * go(b, &minor);
                    if p % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            }
        }
    }
    if b.size() % 2 == 1 {
        return Err(Error::OddPfaffian { size: b.size() });
    }
    let idx: Vec<usize> = (0..b.size()).collect();
    Ok(go(b, &idx))
}

/// Skew-symmetric Gaussian elimination with partial pivoting (the
/// Parlett–Reid style `LTLᵀ` reduction).
pub fn pfaffian_elimination(b: &SkewSymMatrix) -> Result<Complex64> {
    let n = b.size();
    if n % 2 == 1 {
        return Err(Error::OddPfaffian { size: n });
    }
    let mut a = b.to_dense();
    let at = |i: usize, j: usize| i * n + j;
    let mut pf = ONE;
    for k in (0..n.saturating_sub(1)).step_by(2) {
        let kp = (k + 1..n)
            .max_by(|&x, &y| a[at(x, k)].norm().total_cmp(&a[at(y, k)].norm()))
            .expect("nonempty pivot range");
        if kp != k + 1 {
            for c in 0..n {
                a.swap(at(k + 1, c), at(kp, c));
            }
            for r in 0..n {
                a.swap(at(r, k + 1), at(r, kp));
            }
            pf = -pf;
        }
        let pivot = a[at(k, k + 1)];
        if pivot == ZERO {
            return Ok(ZERO);
        }
        pf *= pivot;
        if k + 2 < n {
            let tau: Vec<Complex64> = (k + 2..n).map(|c| a[at(k, c)] / pivot).collect();
            let col: Vec<Complex64> = (k + 2..n).map(|r| a[at(r, k + 1)]).collect();
            for (ri, r) in (k + 2..n).enumerate() {
                for (ci, c) in (k + 2..n).enumerate() {
                    a[at(r, c)] += tau[ri] * col[ci] - col[ri] * tau[ci];
                }
            }
        }
    }
    Ok(pf)
}

/// An element `J` of `𝒯ₙ`, stored as the integers `2j₁ < … < 2jₙ`.
///
/// For odd `n` the entries are integers, for even `n` half-integers; in both
/// cases the doubled entries run over `−(n−1), −(n−1)+2, …, 3n−1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    doubled: Vec<i64>,
    n: u32,
}

impl IndexTuple {
    pub fn from_doubled(doubled: Vec<i64>, n: u32) -> Result<Self> {
        check_range("n", i64::from(n), 1, i64::from(u32::MAX))?;
        let (lo, hi) = window(n);
        let parity_ok = |d: i64| (d - lo).rem_euclid(2) == 0;
        let valid = doubled.len() == n as usize
            && doubled.windows(2).all(|w| w[0] < w[1])
            && doubled.iter().all(|&d| (lo..=hi).contains(&d) && parity_ok(d));
        if !valid {
            return Err(Error::OutOfRange {
                what: "index tuple entry",
                value: doubled.first().copied().unwrap_or(0),
                min: lo,
                max: hi,
            });
        }
        Ok(Self { doubled, n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn entries(&self) -> Vec<f64> {
        self.doubled.iter().map(|&d| d as f64 / 2.0).collect()
    }

    /// No two coordinates of `ζᴶ` are antipodal, i.e. `J ∈ ℐₙ`.
    pub fn is_admissible(&self) -> bool {
        let period = 4 * i64::from(self.n);
        let half = 2 * i64::from(self.n);
        self.doubled
            .iter()
            .tuple_combinations()
            .all(|(a, b)| (b - a).rem_euclid(period) != half)
    }

    /// `∏ ζ^{jₖ}` when it is `±1`, otherwise `None`.
    pub fn product_sign(&self) -> Option<i8> {
        let n = i64::from(self.n);
        match self.doubled.iter().sum::<i64>().rem_euclid(4 * n) {
            0 => Some(1),
            r if r == 2 * n => Some(-1),
            _ => None,
        }
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.doubled.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if d % 2 == 0 {
                write!(f, "{}", d / 2)?;
            } else {
                write!(f, "{d}/2")?;
            }
        }
        f.write_str(")")
    }
}

fn window(n: u32) -> (i64, i64) {
    let n = i64::from(n);
    (1 - n, 3 * n - 1)
}

/// Lazily enumerates `𝒯ₙ` in lexicographic order (`C(2n, n)` tuples).
pub fn transversal_tuples(n: u32) -> impl Iterator<Item = IndexTuple> {
    let (lo, _) = window(n);
    (0..2 * i64::from(n))
        .map(move |t| lo + 2 * t)
        .combinations(n as usize)
        .map(move |doubled| IndexTuple { doubled, n })
}

/// `𝒯ₙ` (counted), `ℐₙ` and `ℐₙᵉ` (listed), each in lexicographic order.
#[derive(Debug, Clone)]
pub struct IndexSets {
    pub n: u32,
    pub transversal_count: u64,
    pub admissible: Vec<IndexTuple>,
    pub even: Vec<IndexTuple>,
}

/// Filters `𝒯ₙ` down to `ℐₙ` (no antipodal pair) and `ℐₙᵉ` (`∏ζ^{jₖ} = 1`).
/// Both tests run on the doubled exponents in exact integer arithmetic.
pub fn index_sets(n: u32) -> Result<IndexSets> {
    check_range("n", i64::from(n), 1, i64::from(MAX_INDEX_RANK))?;
    let mut transversal_count = 0u64;
    let mut admissible = Vec::new();
    for j in transversal_tuples(n) {
        transversal_count += 1;
        if j.is_admissible() {
            admissible.push(j);
        }
    }
    let even = admissible
        .iter()
        .filter(|j| j.product_sign() == Some(1))
        .cloned()
        .collect();
    Ok(IndexSets {
        n,
        transversal_count,
        admissible,
        even,
    })
}

/// `ζ = exp(π√−1 / n)` raised to the doubled exponent `d`, i.e. `ζ^{d/2}`.
pub fn zeta_power(doubled: i64, n: u32) -> Complex64 {
    let period = 4 * i64::from(n);
    let reduced = doubled.rem_euclid(period);
    Complex64::from_polar(1.0, PI * reduced as f64 / (2.0 * f64::from(n)))
}

/// `scale · ζᴶ = (scale·ζ^{j₁}, …, scale·ζ^{jₙ})`.
pub fn zeta_point(j: &IndexTuple, scale: f64) -> ComplexTuple {
    ComplexTuple(j.doubled.iter().map(|&d| zeta_power(d, j.n) * scale).collect())
}
