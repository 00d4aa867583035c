//! Polynomial matrices and the differential operators built from them:
//! Hessian matrix, Hessian determinant H(F), the bordered determinant U(F),
//! and the rank-one-twisted determinant det(hess F + c dF (x) dF).


use crate::linalg::QMatrix;
use crate::poly::{rat, Poly, Rational};
use crate::Result;

/// Square matrix of polynomials sharing one ambient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub dim: usize,
    pub nvars: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_fn(dim: usize, nvars: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = f(i, j);
                assert_eq!(p.nvars(), nvars, "entry arity mismatch");
                entries.push(p);
            }
        }
        PolyMatrix { dim, nvars, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.dim + j]
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Evaluate every entry at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<QMatrix> {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self.at(i, j).eval(point)?;
            }
        }
        Ok(m)
    }

    fn count_zero_entries(&self) -> usize {
        self.entries.iter().filter(|p| p.is_zero()).count()
    }
}

/// Exact determinant of a polynomial matrix.
///
/// Dispatch: Laplace expansion with memoized minors and sparsest-row
/// pivoting for dimension <= 6 or mostly-zero matrices; fraction-free
/// Bareiss elimination otherwise. Both paths are exact.
pub fn det_poly(m: &PolyMatrix) -> Poly {
    if m.dim == 0 {
        return Poly::one(m.nvars);
    }
    let zeros = m.count_zero_entries();
    let mostly_zero = zeros * 2 >= m.dim * m.dim;
    if m.dim <= 6 || mostly_zero {
        det_laplace(m)
    } else {
        det_bareiss(m)
    }
}

/// Laplace expansion over column subsets, memoized, expanding along the row
/// with the most zero entries at each level.
fn det_laplace(m: &PolyMatrix) -> Poly {
    use std::collections::HashMap;
    let n = m.dim;
    // Order the rows so that the sparsest rows are consumed first.
    let mut row_order: Vec<usize> = (0..n).collect();
    row_order.sort_by_key(|&r| {
        (0..n)
            .filter(|&c| !m.at(r, c).is_zero())
            .count()
    });
    // minors[mask] = determinant of rows row_order[0..k] and columns in mask,
    // where k = popcount(mask).
    let mut prev: HashMap<u64, Poly> = HashMap::new();
    prev.insert(0u64, Poly::one(m.nvars));
    for k in 1..=n {
        let mut next: HashMap<u64, Poly> = HashMap::new();
        let row = row_order[k - 1];
        for (&mask, minor) in &prev {
            if minor.is_zero() {
                continue;
            }
            // extend by one column not yet used
            for c in 0..n {
                let bit = 1u64 << c;
                if mask & bit != 0 {
                    continue;
                }
                let e = m.at(row, c);
                if e.is_zero() {
                    continue;
                }
                // sign: parity of the number of used columns above c
                let below = (mask & (bit - 1)).count_ones();
                let pos_in_new = below; // column c is inserted after `below` columns
                let sign = if (k as u32 - 1 + pos_in_new) % 2 == 0 {
                    1
                } else {
                    -1
                };
                let contrib = minor.mul(e).expect("arity").scale(&rat(sign));
                let slot = next.entry(mask | bit).or_insert_with(|| Poly::zero(m.nvars));
                *slot = slot.add(&contrib).expect("arity");
            }
        }
        prev = next;
        if prev.is_empty() {
            return Poly::zero(m.nvars);
        }
    }
    let full = (1u64 << n) - 1;
    let det_in_order = prev.remove(&full).unwrap_or_else(|| Poly::zero(m.nvars));
    // account for the row permutation sign
    let sign = permutation_sign(&row_order);
    if sign < 0 {
        det_in_order.neg()
    } else {
        det_in_order
    }
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Fraction-free Bareiss elimination over the polynomial ring; every
/// division is exact by construction.
fn det_bareiss(m: &PolyMatrix) -> Poly {
    let n = m.dim;
    let mut a: Vec<Vec<Poly>> = (0..n)
        .map(|i| (0..n).map(|j| m.at(i, j).clone()).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev_pivot = Poly::one(m.nvars);
    for k in 0..n - 1 {
        // pivot: a nonzero entry in column k, preferring few terms
        let pivot_row = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| a[r][k].num_terms());
        let Some(p) = pivot_row else {
            return Poly::zero(m.nvars);
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t1 = a[k][k].mul(&a[i][j]).expect("arity");
                let t2 = a[i][k].mul(&a[k][j]).expect("arity");
                let num = t1.sub(&t2).expect("arity");
                a[i][j] = num
                    .divide_exact(&prev_pivot)
                    .expect("nonzero pivot")
                    .expect("fraction-free step divides exactly");
            }
            a[i][k] = Poly::zero(m.nvars);
        }
        prev_pivot = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Matrix of second partials of F.
pub fn hessian_matrix(f: &Poly) -> PolyMatrix {
    let n = f.nvars();
    let grad = f.gradient();
    let m = PolyMatrix::from_fn(n, n, |i, j| grad[i].diff(j).unwrap());
    debug_assert!(m.is_symmetric());
    m
}

/// Hessian determinant H(F) = det(hess F) in equiaffine coordinates.
pub fn hessian_det(f: &Poly) -> Result<Poly> {
    Ok(det_poly(&hessian_matrix(f)))
}

/// The bordered determinant U(F) = -det [[F_ij, F_i], [F_j, 0]].
///
/// Computed directly from the (n+2)-dimensional bordered matrix so it stays
/// defined where the Hessian degenerates.
pub fn u_of_f(f: &Poly) -> Poly {
    let n = f.nvars();
    let grad = f.gradient();
    let hess = hessian_matrix(f);
    let bordered = PolyMatrix::from_fn(n + 1, n, |i, j| {
        if i < n && j < n {
            hess.at(i, j).clone()
        } else if i < n {
            grad[i].clone()
        } else if j < n {
            grad[j].clone()
        } else {
            Poly::zero(n)
        }
    });
    det_poly(&bordered).neg()
}

/// det(hess F + c dF (x) dF) for a rational constant c.
pub fn twisted_det(f: &Poly, c: &Rational) -> Poly {
    let n = f.nvars();
    let grad = f.gradient();
    let hess = hessian_matrix(f);
    let m = PolyMatrix::from_fn(n, n, |i, j| {
        hess.at(i, j)
            .add(&grad[i].mul(&grad[j]).unwrap().scale(c))
            .unwrap()
    });
    det_poly(&m)
}

/// det(hess F + dF (x) dF), the c = 1 twist.
pub fn graph_det(f: &Poly) -> Poly {
    twisted_det(f, &rat(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};
    use crate::text::parse_poly;

    #[test]
    fn hessian_of_coordinate_product() {
        let f = parse_poly("x1*x2*x3", 0).unwrap();
        let h = hessian_matrix(&f);
        assert!(h.at(0, 0).is_zero());
        assert_eq!(*h.at(0, 1), Poly::var(3, 2));
        assert_eq!(*h.at(0, 2), Poly::var(3, 1));
        assert_eq!(*h.at(1, 2), Poly::var(3, 0));
        assert_eq!(hessian_det(&f).unwrap(), f.scale(&rat(2)));
    }

    #[test]
    fn hessian_of_sum_of_squares() {
        let f = parse_poly("x1^2 + x2^2", 0).unwrap();
        let h = hessian_matrix(&f);
        assert_eq!(*h.at(0, 0), Poly::constant(2, rat(2)));
        assert_eq!(*h.at(1, 1), Poly::constant(2, rat(2)));
        assert!(h.at(0, 1).is_zero());
        assert_eq!(hessian_det(&f).unwrap(), Poly::constant(2, rat(4)));
    }

    #[test]
    fn hessian_of_quadratic_form_is_twice_matrix() {
        // F = x1^2 + 3 x1 x2 + 5 x2^2 has Hessian [[2, 3], [3, 10]]
        let f = parse_poly("x1^2 + 3*x1*x2 + 5*x2^2", 0).unwrap();
        let h = hessian_matrix(&f);
        assert_eq!(*h.at(0, 1), Poly::constant(2, rat(3)));
        assert_eq!(*h.at(1, 1), Poly::constant(2, rat(10)));
    }

    #[test]
    fn hessian_det_of_gordan_noether_vanishes() {
        let f = parse_poly("x1^2*x3 + x1*x2*x4 + x2^2*x5", 0).unwrap();
        assert!(hessian_det(&f).unwrap().is_zero());
    }

    #[test]
    fn hessian_det_of_binary_cubic_discriminant() {
        let p = crate::catalog::binary_cubic_discriminant_poly();
        let h = hessian_det(&p).unwrap();
        // 2^4 3^5 P^2
        assert_eq!(h, p.pow(2).scale(&rat(3888)));
    }

    #[test]
    fn hessian_det_of_constant_is_zero() {
        let f = Poly::constant(2, rat(7));
        assert!(hessian_det(&f).unwrap().is_zero());
    }

    #[test]
    fn u_examples() {
        // U(x1 x2 x3) = 3 (x1 x2 x3)^2; cross-checked against the homogeneous
        // identity (lambda - 1) U = lambda F H with lambda = 3, H = 2F.
        let f = parse_poly("x1*x2*x3", 0).unwrap();
        let u = u_of_f(&f);
        assert_eq!(u, f.pow(2).scale(&rat(3)));
        let h = hessian_det(&f).unwrap();
        assert_eq!(u.scale(&rat(2)), f.mul(&h).unwrap().scale(&rat(3)));

        // U(x1^2 + x2^2) = 8 (x1^2 + x2^2)
        let g = parse_poly("x1^2 + x2^2", 0).unwrap();
        assert_eq!(u_of_f(&g), g.scale(&rat(8)));

        // linear F has vanishing Hessian block
        let l = parse_poly("x1 + 2*x2", 0).unwrap();
        assert!(u_of_f(&l).is_zero());
    }

    #[test]
    fn twisted_det_examples() {
        // F = x3 - x1^2 - x2^2, c = 1: determinant is the constant 4
        let f = parse_poly("x3 - x1^2 - x2^2", 0).unwrap();
        assert_eq!(twisted_det(&f, &rat(1)), Poly::constant(3, rat(4)));
        // c = 0 reduces to the Hessian determinant
        assert_eq!(twisted_det(&f, &rat(0)), hessian_det(&f).unwrap());
        // ratio law on a translationally homogeneous F: c / c' scales
        let a = twisted_det(&f, &ratio(3, 2));
        let b = twisted_det(&f, &ratio(5, 7));
        assert_eq!(a.scale(&ratio(5, 7)), b.scale(&ratio(3, 2)));
    }

    #[test]
    fn laplace_and_bareiss_agree() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(17);
        for dim in 2..=4 {
            for _ in 0..5 {
                let m = PolyMatrix::from_fn(dim, 2, |_, _| {
                    crate::poly::testutil::random_poly(&mut rng, 2, 2)
                });
                assert_eq!(det_laplace(&m), det_bareiss(&m));
            }
        }
    }

    #[test]
    fn det_matches_pointwise_evaluation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(23);
        for _ in 0..10 {
            let m = PolyMatrix::from_fn(3, 3, |_, _| {
                crate::poly::testutil::random_poly(&mut rng, 3, 2)
            });
            let d = det_poly(&m);
            let p: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-4..5))).collect();
            let lhs = d.eval(&p).unwrap();
            let rhs = m.eval(&p).unwrap().det();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn affine_covariance_of_h_and_u() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(31);
        for _ in 0..10 {
            let f = crate::poly::testutil::random_poly(&mut rng, 2, 3);
            // unimodular shear composed with a swap (det = -1 or +1)
            let s = rat(rng.gen_range(-3..4));
            let lin = vec![vec![rat(1), s.clone()], vec![rat(0), rat(1)]];
            let shift = vec![rat(0), rat(0)];
            let g = f.substitute_affine(&lin, &shift).unwrap();
            let hg = hessian_det(&g).unwrap();
            let gh = hessian_det(&f)
                .unwrap()
                .substitute_affine(&lin, &shift)
                .unwrap();
            assert_eq!(hg, gh);
            let ug = u_of_f(&g);
            let gu = u_of_f(&f).substitute_affine(&lin, &shift).unwrap();
            assert_eq!(ug, gu);
        }
    }
}
