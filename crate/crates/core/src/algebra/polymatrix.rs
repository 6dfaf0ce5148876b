use std::fmt;

use num::One;

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense matrix of polynomials, all in the same number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            data: vec![Poly::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m[(i, i)] = Poly::one(nvars);
        }
        m
    }

    pub fn scalar_identity(n: usize, p: &Poly) -> Self {
        let mut m = Self::zeros(n, n, p.nvars());
        for i in 0..n {
            m[(i, i)] = p.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>, nvars: usize) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged polynomial matrix".into()));
        }
        if rows.iter().flatten().any(|p| p.nvars() != nvars) {
            return Err(Error::VariableMismatch {
                left: nvars,
                right: rows
                    .iter()
                    .flatten()
                    .find(|p| p.nvars() != nvars)
                    .map_or(0, |p| p.nvars()),
            });
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nvars,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix with explicit shape; used when a dimension is zero.
    pub fn with_shape(rows: usize, cols: usize, nvars: usize, entries: Vec<Vec<Poly>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Ok(Self::zeros(rows, cols, nvars));
        }
        let m = Self::from_rows(entries, nvars)?;
        if (m.rows, m.cols) != (rows, cols) {
            return Err(Error::Shape(format!(
                "expected {rows}x{cols}, got {}x{}",
                m.rows, m.cols
            )));
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            data: self.data.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        self.scale(&-Rational::one())
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut out = Self::zeros(a.rows + c.rows, a.cols + b.cols, a.nvars);
        out.set_block(0, 0, a);
        out.set_block(0, a.cols, b);
        out.set_block(a.rows, 0, c);
        out.set_block(a.rows, a.cols, d);
        out
    }

    pub fn block_diag(blocks: &[&PolyMatrix], nvars: usize) -> PolyMatrix {
        let r = blocks.iter().map(|b| b.rows).sum();
        let c = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c, nvars);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &PolyMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        let mut out = Self::zeros(rows, cols, self.nvars);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    /// `out[i][j] = self[row_perm[i]][col_perm[j]]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> PolyMatrix {
        let mut out = Self::zeros(row_perm.len(), col_perm.len(), self.nvars);
        for (i, &ri) in row_perm.iter().enumerate() {
            for (j, &cj) in col_perm.iter().enumerate() {
                out[(i, j)] = self[(ri, cj)].clone();
            }
        }
        out
    }

    /// Re-embeds every entry into a ring with `extra` more variables.
    pub fn extend_vars(&self, extra: usize) -> PolyMatrix {
        let nvars = self.nvars + extra;
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            data: self.data.iter().map(|p| p.extend_vars(extra)).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
