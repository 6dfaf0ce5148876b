//! Exact rational matrices with kernel and image by fraction-free elimination.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use super::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of [`RatMatrix::kernel_image`].
#[derive(Clone, Debug, PartialEq)]
pub struct KernelImage {
    /// Kernel basis from the reduced echelon form, one vector per free column.
    pub kernel: Vec<Vec<Rational>>,
    /// Pivot columns of the matrix, a basis of its column space.
    pub image: Vec<Vec<Rational>>,
    pub rank: usize,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Clears denominators row by row and runs Bareiss elimination over the
    /// integers. Returns the integer echelon rows and pivot columns.
    fn bareiss_echelon(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row
                    .iter()
                    .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
                row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss_echelon().1.len()
    }

    /// Reduced row echelon form (nonzero rows only) and the pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let (ech, pivots) = self.bareiss_echelon();
        let mut rows: Vec<Vec<Rational>> = ech
            .into_iter()
            .map(|r| r.into_iter().map(Rational::from_integer).collect())
            .collect();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let inv = rows[i][pc].recip();
            for v in rows[i].iter_mut() {
                *v *= &inv;
            }
            for k in 0..i {
                let factor = rows[k][pc].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in pc..self.cols {
                    let sub = &factor * &rows[i][j];
                    rows[k][j] -= sub;
                }
            }
        }
        (rows, pivots)
    }

    pub fn kernel_image(&self) -> KernelImage {
        let (rref, pivots) = self.rref();
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref[i][free].clone();
            }
            kernel.push(v);
        }
        let image = pivots.iter().map(|&c| self.column(c)).collect();
        KernelImage {
            kernel,
            image,
            rank: pivots.len(),
        }
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        let inv = self.inverse()?;
        Some(inv.mul_vec(b))
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (rref, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(RatMatrix::from_rows(
            rref.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= &a[c][c];
            for i in c + 1..n {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let s = &f * &a[c][j];
                    a[i][j] -= s;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn identity_has_trivial_kernel() {
        let ki = RatMatrix::identity(3).kernel_image();
        assert_eq!(ki.rank, 3);
        assert!(ki.kernel.is_empty());
        assert_eq!(ki.image.len(), 3);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let ki = RatMatrix::zeros(2, 5).kernel_image();
        assert_eq!(ki.rank, 0);
        assert_eq!(ki.kernel.len(), 5);
    }

    #[test]
    fn proportional_rows() {
        let m = RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        let ki = m.kernel_image();
        assert_eq!(ki.rank, 1);
        assert_eq!(ki.kernel, vec![vec![int(-2), int(1)]]);
        assert_eq!(ki.image, vec![vec![int(1), int(2)]]);
    }

    #[test]
    fn rational_entries_and_inverse() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(m.determinant(), rat(1, 10) - rat(1, 12));
        let singular = RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), int(0));
    }
}
