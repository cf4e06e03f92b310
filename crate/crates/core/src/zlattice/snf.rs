use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Invariant factors and rank of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries of the Smith form, `d1 | d2 | ...`, all
    /// positive. Includes the unit factors.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one: the invariant factors of the torsion part
    /// of the cokernel.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = (0..m.rows())
        .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    smith_normal_form_big(rows)
}

/// Diagonalizes by unimodular row and column operations, then normalizes the
/// diagonal into a divisibility chain.
pub fn smith_normal_form_big(mut a: Vec<Vec<BigInt>>) -> SmithForm {
    let r = a.len();
    let c = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..r.min(c) {
        let Some((pi, pj)) = min_abs_entry(&a, t..r, t..c) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..c {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // a remainder is now smaller than the pivot; move it into place
            let cross = (t..r)
                .map(|i| (i, t))
                .chain((t + 1..c).map(|j| (t, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let (pi, pj) = cross.expect("pivot row or column is nonzero");
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }
        diag.push(a[t][t].abs());
    }
    let rank = diag.len();
    SmithForm {
        factors: normalize_diagonal(diag),
        rank,
    }
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Turns a diagonal `diag(a1, ..., ak)` of nonzero entries into the
/// equivalent divisibility chain using `diag(a, b) ~ diag(gcd, lcm)`.
pub fn normalize_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for x in d.iter_mut() {
        *x = x.abs();
    }
    let k = d.len();
    for i in 0..k {
        for j in i + 1..k {
            let g = d[i].gcd(&d[j]);
            if g.is_zero() {
                continue;
            }
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn examples() {
        let f = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!((f.factors, f.rank), (big(&[1, 1]), 2));
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![1, 1]]).unwrap();
        assert_eq!(smith_normal_form(&m).factors, big(&[1, 2]));
        let m = IntMatrix::from_rows(vec![vec![6]]).unwrap();
        assert_eq!(smith_normal_form(&m).factors, big(&[6]));
    }

    #[test]
    fn rank_deficient_and_rectangular() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        let f = smith_normal_form(&m);
        assert_eq!(f.factors, big(&[2, 6, 12]));
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4], vec![3, 6]]).unwrap();
        let f = smith_normal_form(&m);
        assert_eq!((f.factors, f.rank), (big(&[1]), 1));
        let f = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert_eq!(f.rank, 0);
    }

    #[test]
    fn diagonal_normalization() {
        assert_eq!(normalize_diagonal(big(&[4, 6])), big(&[2, 12]));
        assert_eq!(normalize_diagonal(big(&[2, 2, 3])), big(&[1, 2, 6]));
    }

    proptest! {
        #[test]
        fn factors_form_chain_and_preserve_det(d in prop::collection::vec(-9i64..=9, 16)) {
            let m = IntMatrix::from_rows(d.chunks(4).map(<[i64]>::to_vec).collect()).unwrap();
            let f = smith_normal_form(&m);
            for w in f.factors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
            let det = m.determinant().unwrap();
            if det.is_zero() {
                prop_assert!(f.rank < 4);
            } else {
                prop_assert_eq!(f.rank, 4);
                let prod: BigInt = f.factors.iter().product();
                prop_assert_eq!(prod, det.abs());
            }
        }
    }
}
