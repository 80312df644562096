//! Exact rank and kernel computations over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RankReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Dimension of the kernel of the map `Q^cols → Q^rows`.
    pub nullity: usize,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut m = QMatrix::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Rows scaled by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows(), self.cols)
    }

    pub fn rank_report(&self) -> RankReport {
        let rank = self.rank();
        RankReport { rows: self.rows, cols: self.cols, rank, nullity: self.cols - rank }
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of `{v : M v = 0}` read off the reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for v in a[r].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..self.rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..self.cols {
                        let t = &a[r][j] * &f;
                        a[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[row][f].clone();
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }
}

/// Fraction-free elimination; every intermediate division is exact.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // smallest pivot keeps the entries short
        let Some(p) = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].abs())
        else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = QMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullity(), 1);
        assert_eq!(QMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(QMatrix::zeros(0, 5).nullity(), 5);
    }

    #[test]
    fn rational_entries() {
        let half = BigRational::new(1.into(), 2.into());
        let m = QMatrix::from_rows(vec![vec![half.clone(), q(1)], vec![q(1), q(2)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let m = QMatrix::from_i64(&[vec![1, 1, 0, 2], vec![0, 1, 1, 1], vec![1, 2, 1, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), m.nullity());
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_is_transpose_invariant() {
        let m = QMatrix::from_i64(&[vec![3, -1, 4, 1], vec![5, 9, -2, 6], vec![8, 8, 2, 7]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }
}
