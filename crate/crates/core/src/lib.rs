//! Exact quantum Schubert calculus for the Lagrangian Grassmannian `LG(n)` and
//! the orthogonal Grassmannian `OG(n)`.
//!
//! The crate builds the quantum multiplication operators of the Pieri classes
//! (at `q = 1`) as exact integer matrices, evaluates a closed-form simultaneous
//! eigenbasis through Pfaffian `Q̃`/`P̃` polynomials at roots of unity, and
//! checks the lower bound `δ₀ ≥ dim + 1` and Property 𝒪 numerically.
//!
//! Module map:
//!
//! - [`combinatorics`]: strict partitions, complements, skew shapes, horizontal
//!   strips and connected components.
//! - [`sympoly`]: elementary symmetric functions, Pfaffians, `Q̃_λ`/`P̃_λ`
//!   evaluation and the root-of-unity index sets.
//! - [`qh`]: quantum Pieri rules, operator matrices and ring relations.
//! - [`spectral`]: eigenbasis construction and verification, Perron root,
//!   closed-form `δ₀`, Property 𝒪.
//! - [`glbc`]: per-`n` lower-bound reports and the two calculus lemmas.
//!
//! Data-parallel loops go through [`Execution`]; with the `parallel` feature
//! (on by default) they run on rayon, otherwise sequentially.

pub mod combinatorics;
pub mod error;
pub mod glbc;
pub mod matrix;
mod par;
pub mod qh;
pub mod spectral;
pub mod sympoly;
pub mod tolerance;

pub use combinatorics::{Basis, Partition, SkewShape, StrictPartition};
pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use par::Execution;
pub use qh::{OperatorMatrix, QuantumProduct, SchubertVector, Space};
pub use sympoly::{ComplexTuple, IndexTuple, SkewSymMatrix};

pub use num_complex::Complex64;
