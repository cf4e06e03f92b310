use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    /// `x^T * self`, with overflow checking.
    pub fn left_mul(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: x.len(),
            });
        }
        let mut out = vec![0i128; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(i)) {
                *o = o
                    .checked_add(xi as i128 * m as i128)
                    .ok_or(Error::Overflow("vector-matrix product"))?;
            }
        }
        out.into_iter()
            .map(|v| i64::try_from(v).map_err(|_| Error::Overflow("vector-matrix product")))
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        Ok(sign * &a[n - 1][n - 1])
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Solves `x^T * m = v` for lower-triangular `m` by back-substitution.
///
/// Returns `Ok(None)` when some division is inexact, i.e. `v` is not an
/// integer combination of the rows of `m`.
pub fn solve_lower_triangular(m: &IntMatrix, v: &[i64]) -> Result<Option<Vec<i64>>> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.cols(),
        });
    }
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    for i in 0..n {
        if m[(i, i)] == 0 {
            return Err(Error::SingularMatrix(i));
        }
        if let Some(j) = (i + 1..n).find(|&j| m[(i, j)] != 0) {
            return Err(Error::NotTriangular(i, j));
        }
    }
    // v_j = sum_{i >= j} x_i m[i][j]
    let mut x = vec![0i64; n];
    for j in (0..n).rev() {
        let mut rest = v[j] as i128;
        for i in j + 1..n {
            rest -= x[i] as i128 * m[(i, j)] as i128;
        }
        let d = m[(j, j)] as i128;
        if rest % d != 0 {
            return Ok(None);
        }
        x[j] = i64::try_from(rest / d).map_err(|_| Error::Overflow("triangular solve"))?;
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m22() -> IntMatrix {
        IntMatrix::from_rows(vec![vec![2, 0], vec![1, 1]]).unwrap()
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_lower_triangular(&m22(), &[1, -1]).unwrap(), Some(vec![1, -1]));
        assert_eq!(solve_lower_triangular(&m22(), &[0, 1]).unwrap(), None);
        assert_eq!(solve_lower_triangular(&m22(), &[0, 0]).unwrap(), Some(vec![0, 0]));
    }

    #[test]
    fn solve_errors() {
        let singular = IntMatrix::from_rows(vec![vec![2, 0], vec![1, 0]]).unwrap();
        assert!(matches!(
            solve_lower_triangular(&singular, &[0, 0]),
            Err(Error::SingularMatrix(1))
        ));
        let upper = IntMatrix::from_rows(vec![vec![2, 1], vec![0, 1]]).unwrap();
        assert!(matches!(
            solve_lower_triangular(&upper, &[0, 0]),
            Err(Error::NotTriangular(0, 1))
        ));
        assert!(matches!(
            solve_lower_triangular(&m22(), &[0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m22().determinant().unwrap(), BigInt::from(2));
        let m = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(0));
    }

    fn lower_triangular(n: usize) -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec(-5i64..=5, n * n).prop_map(move |mut d| {
            for i in 0..n {
                for j in i + 1..n {
                    d[i * n + j] = 0;
                }
                if d[i * n + i] == 0 {
                    d[i * n + i] = 3;
                }
            }
            IntMatrix { rows: n, cols: n, data: d }
        })
    }

    proptest! {
        #[test]
        fn solve_round_trip(m in lower_triangular(5), x in prop::collection::vec(-100i64..=100, 5)) {
            let v = m.left_mul(&x).unwrap();
            prop_assert_eq!(solve_lower_triangular(&m, &v).unwrap(), Some(x));
        }

        #[test]
        fn triangular_determinant_is_diagonal_product(m in lower_triangular(4)) {
            let prod: i64 = m.diagonal().iter().product();
            prop_assert_eq!(m.determinant().unwrap(), BigInt::from(prod));
        }
    }
}
