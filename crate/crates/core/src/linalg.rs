//! Small dense matrices over Q(v) with exact Gaussian elimination: rank,
//! row spaces, and linear solving. Sizes here never exceed a few hundred
//! entries, so no pivoting strategy beyond "first nonzero" is needed.

use crate::rational::RationalFunction;
use std::fmt;
use std::ops::{Add, Mul, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![RationalFunction::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| RationalFunction::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<RationalFunction> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> RationalFunction {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut t = RationalFunction::zero();
        for i in 0..self.rows {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn scale(&self, c: &RationalFunction) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RationalFunction::is_zero)
    }

    /// Vertical stack; column counts must agree.
    pub fn stack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form together with the rank.
    pub fn rref(&self) -> (Mat, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for j in 0..m.cols {
                    let a = m.get(pivot_row, j).clone();
                    let b = m.get(src, j).clone();
                    m.set(pivot_row, j, b);
                    m.set(src, j, a);
                }
            }
            let inv = m.get(pivot_row, col).recip().unwrap();
            for j in 0..m.cols {
                let v = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j) - &(m.get(pivot_row, j) * &factor);
                    m.set(r, j, v);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The nonzero rows of the reduced echelon form: a canonical basis of
    /// the row space.
    pub fn row_space_basis(&self) -> Mat {
        let (rref, rank) = self.rref();
        Mat::from_rows((0..rank).map(|i| rref.row(i)).collect())
    }

    /// Row spaces coincide iff stacking does not raise the rank of either.
    pub fn same_row_space(&self, other: &Mat) -> bool {
        let ra = self.rank();
        let rb = other.rank();
        ra == rb && self.stack(other).rank() == ra
    }

    /// Is `v` (a 1×n matrix) contained in the row space?
    pub fn contains_in_row_space(&self, v: &Mat) -> bool {
        self.stack(v).rank() == self.rank()
    }

    /// Solves `self * x = b` for a square invertible `self`; `None` if the
    /// matrix is singular. `b` is one column.
    pub fn solve(&self, b: &[RationalFunction]) -> Option<Vec<RationalFunction>> {
        assert_eq!(self.rows, self.cols, "solve expects a square matrix");
        assert_eq!(b.len(), self.rows);
        if self.rank() != self.rows {
            return None;
        }
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, _) = aug.rref();
        Some((0..self.rows).map(|i| r.get(i, self.cols).clone()).collect())
    }

    /// Determinant via elimination (exact).
    pub fn det(&self) -> RationalFunction {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = RationalFunction::one();
        for col in 0..m.cols {
            let Some(src) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return RationalFunction::zero();
            };
            if src != col {
                det = -&det;
                for j in 0..m.cols {
                    let a = m.get(col, j).clone();
                    let b = m.get(src, j).clone();
                    m.set(col, j, b);
                    m.set(src, j, a);
                }
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.recip().unwrap();
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for j in col..m.cols {
                    let v = m.get(r, j) - &(m.get(col, j) * &factor);
                    m.set(r, j, v);
                }
            }
        }
        det
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + &(a * rhs.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for row in &cells {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{cell:>width$}", width = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Polynomial;

    #[test]
    fn rank_and_rref() {
        let m = Mat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let id = Mat::identity(3);
        assert_eq!(id.rank(), 3);
    }

    #[test]
    fn row_space_comparison() {
        let a = Mat::from_int_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let b = Mat::from_int_rows(&[&[1, 1, 2], &[1, -1, 0]]);
        let c = Mat::from_int_rows(&[&[1, 0, 0], &[0, 1, 1]]);
        assert!(a.same_row_space(&b));
        assert!(!a.same_row_space(&c));
    }

    #[test]
    fn solve_2x2_over_function_field() {
        // [[v, 1], [1, 1]] x = [v^2, 1]  =>  x = [v + 1, -v]
        let v = RationalFunction::variable();
        let m = Mat::from_rows(vec![
            vec![v.clone(), RationalFunction::one()],
            vec![RationalFunction::one(), RationalFunction::one()],
        ]);
        let b = vec![
            RationalFunction::from_polynomial(Polynomial::from_ints(&[0, 0, 1])),
            RationalFunction::one(),
        ];
        let x = m.solve(&b).unwrap();
        assert_eq!(x[0], RationalFunction::from_polynomial(Polynomial::from_ints(&[1, 1])));
        assert_eq!(x[1], -&v);
    }

    #[test]
    fn determinant_examples() {
        let m = Mat::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), RationalFunction::from_int(-2));
        let singular = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), RationalFunction::zero());
        assert_eq!(singular.solve(&[RationalFunction::one(), RationalFunction::one()]), None);
    }

    #[test]
    fn product_against_hand_computation() {
        let a = Mat::from_int_rows(&[&[1, 2], &[0, 1]]);
        let b = Mat::from_int_rows(&[&[3, 0], &[1, 1]]);
        assert_eq!(&a * &b, Mat::from_int_rows(&[&[5, 2], &[1, 1]]));
        assert_eq!((&a * &b).trace(), RationalFunction::from_int(6));
    }
}
