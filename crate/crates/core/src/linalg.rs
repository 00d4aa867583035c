//! Dense exact linear algebra over the rationals: determinants, solving,
//! rank, kernels. Sizes here are small (at most a few dozen), so plain
//! Gaussian elimination with rational pivots is exact and fast enough.

use num_traits::{One, Zero};

use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
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
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += &self[(i, k)] * &other[(k, j)];
            }
            acc
        })
    }

    pub fn matvec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &v[k];
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// Determinant by Gaussian elimination with exact rational pivots.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero());
            let Some(p) = pivot else {
                return Rational::zero();
            };
            if p != col {
                for j in 0..n {
                    let tmp = a[(p, j)].clone();
                    a[(p, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                }
                det = -det;
            }
            let pv = a[(col, col)].clone();
            det *= &pv;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &pv;
                for j in col..n {
                    let s = &a[(col, j)] * &f;
                    a[(r, j)] -= s;
                }
            }
        }
        det
    }

    /// Solve self * x = b; None if singular.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if p != col {
                for j in 0..n {
                    let tmp = a[(p, j)].clone();
                    a[(p, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                }
                rhs.swap(p, col);
            }
            let pv = a[(col, col)].clone();
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &pv;
                for j in col..n {
                    let s = &a[(col, j)] * &f;
                    a[(r, j)] -= s;
                }
                let s = &rhs[col] * &f;
                rhs[r] -= s;
            }
        }
        for i in 0..n {
            rhs[i] = &rhs[i] / &a[(i, i)];
        }
        Some(rhs)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut e = vec![Rational::zero(); n];
                e[j] = Rational::one();
                self.solve(&e)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_fn(n, n, |i, j| cols[j][i].clone()))
    }

    /// Row echelon rank.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    let tmp = a[(p, j)].clone();
                    a[(p, j)] = a[(rank, j)].clone();
                    a[(rank, j)] = tmp;
                }
            }
            let pv = a[(rank, col)].clone();
            for r in rank + 1..rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &pv;
                for j in col..cols {
                    let s = &a[(rank, j)] * &f;
                    a[(r, j)] -= s;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the null space of self (as column vectors).
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&rr| !a[(rr, col)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    let tmp = a[(p, j)].clone();
                    a[(p, j)] = a[(r, j)].clone();
                    a[(r, j)] = tmp;
                }
            }
            let pv = a[(r, col)].clone();
            for j in 0..cols {
                a[(r, j)] = &a[(r, j)] / &pv;
            }
            for rr in 0..rows {
                if rr == r || a[(rr, col)].is_zero() {
                    continue;
                }
                let f = a[(rr, col)].clone();
                for j in 0..cols {
                    let s = &a[(r, j)] * &f;
                    a[(rr, j)] -= s;
                }
            }
            pivot_col_of_row.push(col);
            r += 1;
        }
        let pivot_set: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = -a[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use num_traits::Zero;

    #[test]
    fn det_and_solve() {
        let m = QMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]]);
        assert_eq!(m.det(), rat(-2));
        let x = m.solve(&[rat(5), rat(11)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), QMatrix::identity(2));
    }

    #[test]
    fn rank_and_kernel() {
        let m = QMatrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
        ]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in k {
            let img = m.matvec(&v);
            assert!(img.iter().all(|x| x.is_zero()));
        }
    }
}
