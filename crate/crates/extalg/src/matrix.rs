//! Dense matrices over ℚ: row reduction, determinants, inverses, kernels,
//! and compound (minor) matrices.
//!
//! Elimination picks the first nonzero entry in scan order — exact
//! arithmetic needs no magnitude pivoting, and a deterministic pivot rule
//! is what ties pivot columns to initial sets downstream.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial_usize, Rational};
use crate::subset::SubsetNR;

/// Row-major dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Sets above this cap are refused by [`RatMatrix::compound`]; the result
/// has C(n,r)² entries and each entry is an r×r determinant.
pub const COMPOUND_CAP: usize = 14;

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
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
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| crate::rational::rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMatrix::zero(self.rows, other.cols);
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
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Reduced row echelon form scanning columns in the given order.
    /// Returns the reduced matrix and, per nonzero row, the first column
    /// (in scan order) holding its leading 1. Rows are arranged so pivots
    /// appear in scan order. Row space is preserved.
    pub fn rref(&self, column_order: &[usize]) -> Result<(RatMatrix, Vec<usize>)> {
        if column_order.len() != self.cols {
            return Err(Error::InvalidArgument(format!(
                "column order has {} entries for {} columns",
                column_order.len(),
                self.cols
            )));
        }
        let mut seen = vec![false; self.cols];
        for &c in column_order {
            if c >= self.cols || seen[c] {
                return Err(Error::InvalidArgument(
                    "column order is not a permutation".into(),
                ));
            }
            seen[c] = true;
        }

        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0usize;
        for &col in column_order {
            if next_row >= m.rows {
                break;
            }
            let Some(pivot_row) = (next_row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(next_row, pivot_row);
            let inv = m[(next_row, col)].recip();
            m.scale_row(next_row, &inv);
            for i in 0..m.rows {
                if i != next_row && !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    m.sub_scaled_row(i, next_row, &factor);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> usize {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref(&order).expect("natural order").1.len()
    }

    /// Exact determinant via rational Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&i| !m[(i, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot_row != col {
                m.swap_rows(col, pivot_row);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for i in col + 1..n {
                if !m[(i, col)].is_zero() {
                    let factor = &m[(i, col)] / &pivot;
                    m.sub_scaled_row(i, col, &factor);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse; `Singular` on rank-deficient input.
    pub fn invert(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // Gauss-Jordan on [self | I].
        let mut aug = RatMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let order: Vec<usize> = (0..2 * n).collect();
        let (red, pivots) = aug.rref(&order)?;
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        let mut inv = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Basis of the null space {x : Mx = 0}, one column vector per free
    /// column, in scan order of the free columns.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let order: Vec<usize> = (0..self.cols).collect();
        let (red, pivots) = self.rref(&order).expect("natural order");
        let pivot_of_col: std::collections::HashMap<usize, usize> = pivots
            .iter()
            .enumerate()
            .map(|(row, &col)| (col, row))
            .collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (&col, &row) in &pivot_of_col {
                v[col] = -red[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Submatrix determinant with the given row/column index sets
    /// (ascending order inside each set).
    pub fn minor(&self, row_set: &SubsetNR, col_set: &SubsetNR) -> Result<Rational> {
        let rows: Vec<usize> = row_set.members().map(|e| e - 1).collect();
        let cols: Vec<usize> = col_set.members().map(|e| e - 1).collect();
        let k = rows.len();
        assert_eq!(k, cols.len());
        let mut sub = RatMatrix::zero(k, k);
        for (i, &ri) in rows.iter().enumerate() {
            for (j, &cj) in cols.iter().enumerate() {
                sub[(i, j)] = self[(ri, cj)].clone();
            }
        }
        sub.det()
    }

    /// r-th compound: the C(n,r)×C(n,r) matrix of r×r minors, rows and
    /// columns indexed by r-subsets in canonical scan order. Entry (A, B)
    /// is det of the submatrix with rows A and columns B, so column B holds
    /// the coordinates of f_B = ⋀_{b∈B} f_b in the standard monomial basis.
    pub fn compound(&self, r: usize) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if r > n {
            return Err(Error::DegreeOverflow {
                degree: r,
                ground_n: n,
            });
        }
        if n > COMPOUND_CAP {
            return Err(Error::CapExceeded {
                what: "compound ground dimension",
                value: n,
                cap: COMPOUND_CAP,
            });
        }
        let level = SubsetNR::level(n, r);
        let size = binomial_usize(n, r);
        let mut out = RatMatrix::zero(size, size);
        for (i, a) in level.iter().enumerate() {
            for (j, b) in level.iter().enumerate() {
                out[(i, j)] = self.minor(a, b)?;
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn scale_row(&mut self, i: usize, factor: &Rational) {
        for k in 0..self.cols {
            if !self[(i, k)].is_zero() {
                self[(i, k)] *= factor;
            }
        }
    }

    /// row_i -= factor * row_j
    fn sub_scaled_row(&mut self, i: usize, j: usize, factor: &Rational) {
        for k in 0..self.cols {
            if !self[(j, k)].is_zero() {
                let delta = factor * &self[(j, k)];
                self[(i, k)] -= delta;
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn natural(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn rref_identity_fixed_point() {
        let id = RatMatrix::identity(3);
        let (r, p) = id.rref(&natural(3)).unwrap();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = RatMatrix::from_i64_rows(&[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref(&natural(2)).unwrap();
        assert_eq!(r, RatMatrix::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_scan_order_picks_pivots() {
        let m = RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let (_, p) = m.rref(&[1, 0]).unwrap();
        assert_eq!(p, vec![1, 0]);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = RatMatrix::zero(2, 3);
        let (r, p) = z.rref(&natural(3)).unwrap();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn det_examples() {
        assert_eq!(RatMatrix::identity(4).det().unwrap(), rat_int(1));
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det().unwrap(), rat_int(-2));
        let s = RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(s.det().unwrap(), rat_int(0));
        assert!(RatMatrix::zero(2, 3).det().is_err());
    }

    #[test]
    fn invert_examples() {
        let id = RatMatrix::identity(3);
        assert_eq!(id.invert().unwrap(), id);

        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let inv = m.invert().unwrap();
        assert_eq!(inv[(0, 0)], rat_int(-2));
        assert_eq!(inv[(0, 1)], rat_int(1));
        assert_eq!(inv[(1, 0)], rat(3, 2));
        assert_eq!(inv[(1, 1)], rat(-1, 2));
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));

        let s = RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert!(matches!(s.invert(), Err(Error::Singular)));
    }

    #[test]
    fn compound_of_identity() {
        for r in 0..=4 {
            let c = RatMatrix::identity(4).compound(r).unwrap();
            assert_eq!(c, RatMatrix::identity(binomial_usize(4, r)));
        }
    }

    #[test]
    fn compound_top_degree_is_det() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let c = m.compound(2).unwrap();
        assert_eq!(c.rows(), 1);
        assert_eq!(c[(0, 0)], rat_int(-2));
    }

    #[test]
    fn kernel_of_singular() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        for v in &k {
            let img = m.mul_vec(v);
            assert!(img.iter().all(|x| x.is_zero()));
        }
        assert!(RatMatrix::identity(3).kernel().is_empty());
    }

    #[test]
    fn compound_cap() {
        let m = RatMatrix::identity(15);
        assert!(matches!(m.compound(2), Err(Error::CapExceeded { .. })));
    }
}
