//! Dense square matrices over `i64` with overflow-checked arithmetic.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::par::{map_range, Execution};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1;
        }
        m
    }

    /// Row-major construction; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::Shape {
                rows: dim,
                cols: bad.len(),
            });
        }
        Ok(Self {
            dim,
            data: rows.concat(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&x| x >= 0)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|&x| x.checked_mul(factor).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { dim: self.dim, data })
    }

    /// `self + factor · other`.
    pub fn checked_add_scaled(&self, other: &Self, factor: i64) -> Result<Self> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| {
                b.checked_mul(factor)
                    .and_then(|fb| a.checked_add(fb))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<_>>()?;
        Ok(Self { dim: self.dim, data })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add_scaled(other, -1)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul_with(other, Execution::default())
    }

    /// Matrix product. Zero entries of `self` are skipped, which makes products
    /// of the sparse Pieri matrices cheap.
    pub fn checked_mul_with(&self, other: &Self, exec: Execution) -> Result<Self> {
        self.same_shape(other)?;
        let d = self.dim;
        let rows = map_range(exec, d, |i| -> Result<Vec<i64>> {
            let mut acc = vec![0i64; d];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    if b != 0 {
                        *slot = a
                            .checked_mul(b)
                            .and_then(|ab| slot.checked_add(ab))
                            .ok_or(Error::Overflow)?;
                    }
                }
            }
            Ok(acc)
        });
        let mut data = Vec::with_capacity(d * d);
        for row in rows {
            data.extend(row?);
        }
        Ok(Self { dim: d, data })
    }

    /// Strong connectivity of the directed graph `i → j` whenever entry `(i, j) ≠ 0`.
    pub fn is_irreducible(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; self.dim];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                for w in 0..self.dim {
                    let e = if forward { self[(v, w)] } else { self[(w, v)] };
                    if e != 0 && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::Shape {
                rows: self.dim,
                cols: other.dim,
            })
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.dim + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
