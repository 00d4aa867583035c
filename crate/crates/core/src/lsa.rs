//! Left-symmetric algebras by structure constants: axioms, trace-form,
//! characteristic polynomial det(I + R(x)), right principal idempotents,
//! Koszul-form diagnostics, and the completely-solvable pipeline that
//! certifies H(exp P) = kappa exp(nP) for the characteristic polynomial and
//! produces the weight decomposition under the left action of the idempotent.

use num_traits::{One, Zero};

use crate::hessian::{det_poly, PolyMatrix};
use crate::linalg::QMatrix;
use crate::poly::{rat, Poly, Rational};
use crate::verify::{verify_exponential_relation, Relation};
use crate::{Error, Result};

/// Finite-dimensional algebra by structure constants: e_i * e_j =
/// sum_k c[i][j][k] e_k.
#[derive(Debug, Clone)]
pub struct Lsa {
    pub dim: usize,
    c: Vec<Rational>, // flat [i][j][k]
}

impl Lsa {
    pub fn new(dim: usize) -> Self {
        Lsa {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        self.c[(i * self.dim + j) * self.dim + k] = v;
    }

    /// Sparse constants as (i, j, k, value) with 1-based indices, the file
    /// interchange format.
    pub fn sparse_constants(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let v = self.structure_constant(i, j, k);
                    if !v.is_zero() {
                        out.push((i + 1, j + 1, k + 1, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn from_sparse(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut a = Lsa::new(dim);
        for (i, j, k, v) in entries {
            if *i == 0 || *j == 0 || *k == 0 || *i > dim || *j > dim || *k > dim {
                return Err(Error::IndexOutOfRange {
                    index: *i.max(j).max(k),
                    nvars: dim,
                });
            }
            a.set_structure_constant(i - 1, j - 1, k - 1, v.clone());
        }
        Ok(a)
    }

    /// Product of coordinate vectors.
    pub fn mul_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..n {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        out
    }

    /// Left multiplication operator L(x): L(x) y = x * y.
    pub fn l_op(&self, x: &[Rational]) -> QMatrix {
        let n = self.dim;
        QMatrix::from_fn(n, n, |k, j| {
            let mut acc = Rational::zero();
            for i in 0..n {
                if !x[i].is_zero() {
                    acc += self.structure_constant(i, j, k) * &x[i];
                }
            }
            acc
        })
    }

    /// Right multiplication operator R(x): R(x) y = y * x.
    pub fn r_op(&self, x: &[Rational]) -> QMatrix {
        let n = self.dim;
        QMatrix::from_fn(n, n, |k, i| {
            let mut acc = Rational::zero();
            for j in 0..n {
                if !x[j].is_zero() {
                    acc += self.structure_constant(i, j, k) * &x[j];
                }
            }
            acc
        })
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// tr R as a covector.
    pub fn trace_r_covector(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| self.r_op(&self.basis_vector(i)).trace())
            .collect()
    }

    /// tr L as a covector.
    pub fn trace_l_covector(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| self.l_op(&self.basis_vector(i)).trace())
            .collect()
    }
}

/// Left-symmetry: the associator (x*y)*z - x*(y*z) is symmetric in x, y.
/// Returns the first failing basis triple, if any. The Jacobi identity for
/// the associated bracket follows, but is asserted independently.
pub fn check_lsa(a: &Lsa) -> Option<(usize, usize, usize)> {
    let n = a.dim;
    let basis: Vec<Vec<Rational>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let assoc = |x: &[Rational], y: &[Rational], z: &[Rational]| -> Vec<Rational> {
        let xy_z = a.mul_vec(&a.mul_vec(x, y), z);
        let x_yz = a.mul_vec(x, &a.mul_vec(y, z));
        xy_z.iter().zip(&x_yz).map(|(u, v)| u - v).collect()
    };
    for i in 0..n {
        for j in 0..i {
            for k in 0..n {
                let lhs = assoc(&basis[i], &basis[j], &basis[k]);
                let rhs = assoc(&basis[j], &basis[i], &basis[k]);
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    // independent Jacobi check on the bracket [x, y] = x*y - y*x
    let bracket = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let xy = a.mul_vec(x, y);
        let yx = a.mul_vec(y, x);
        xy.iter().zip(&yx).map(|(u, v)| u - v).collect()
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = vec![Rational::zero(); n];
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let term = bracket(&basis[x], &bracket(&basis[y], &basis[z]));
                    for t in 0..n {
                        acc[t] += &term[t];
                    }
                }
                if acc.iter().any(|v| !v.is_zero()) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Characteristic polynomial P(x) = det(I + R(x)), a polynomial of degree
/// at most dim in dim variables with P(0) = 1.
pub fn characteristic_polynomial(a: &Lsa) -> Poly {
    let n = a.dim;
    let m = PolyMatrix::from_fn(n, n, |k, i| {
        // (I + sum_j x_j R(e_j))_{k i}
        let mut p = if k == i { Poly::one(n) } else { Poly::zero(n) };
        for j in 0..n {
            let c = a.structure_constant(i, j, k);
            if !c.is_zero() {
                p = p.add(&Poly::var(n, j).scale(c)).unwrap();
            }
        }
        p
    });
    let p = det_poly(&m);
    debug_assert!(p.total_degree() as usize <= n);
    p
}

/// Trace-form tau(x, y) = tr R(x) R(y) = tr R(x * y) as a symmetric matrix.
pub fn trace_form(a: &Lsa) -> QMatrix {
    let n = a.dim;
    let rops: Vec<QMatrix> = (0..n).map(|i| a.r_op(&a.basis_vector(i))).collect();
    let tau = QMatrix::from_fn(n, n, |i, j| rops[i].matmul(&rops[j]).trace());
    // agreement with tr R(e_i * e_j), and symmetry
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul_vec(&a.basis_vector(i), &a.basis_vector(j));
            assert_eq!(tau[(i, j)], a.r_op(&prod).trace(), "trace-form identity");
            assert_eq!(tau[(i, j)], tau[(j, i)], "trace-form symmetry");
        }
    }
    tau
}

/// Right principal idempotent: the tau-dual of tr R; requires tau
/// nondegenerate and the algebra incomplete (tr R not identically zero).
pub fn right_principal_idempotent(a: &Lsa) -> Result<Vec<Rational>> {
    let tr = a.trace_r_covector();
    if tr.iter().all(|t| t.is_zero()) {
        return Err(Error::Degenerate(
            "complete algebra: tr R vanishes identically".into(),
        ));
    }
    let tau = trace_form(a);
    let r = tau
        .solve(&tr)
        .ok_or_else(|| Error::Degenerate("trace-form is degenerate".into()))?;
    // r * r = r, tr R(r) = 1
    let rr = a.mul_vec(&r, &r);
    if rr != r {
        return Err(Error::Degenerate("tau-dual of tr R is not idempotent".into()));
    }
    if a.r_op(&r).trace() != Rational::one() {
        return Err(Error::Degenerate("tr R(r) != 1".into()));
    }
    Ok(r)
}

/// Report from the completely-solvable pipeline.
#[derive(Debug, Clone)]
pub struct LsaReport {
    /// All left operators triangular in the given basis (after an optional
    /// permutation search); the operational complete-solvability check.
    pub completely_solvable_in_basis: bool,
    pub complete: bool,
    pub tau_nondegenerate: bool,
    pub derived_codim: usize,
    pub idempotent: Option<Vec<Rational>>,
    pub charpoly: Poly,
    pub relation: Option<Relation>,
    /// Weights of L(r) on the whole algebra with generalized multiplicities.
    pub weights: Vec<(Rational, usize)>,
    /// Weights restricted to ker tr R.
    pub kernel_weights: Vec<(Rational, usize)>,
}

/// Search for a basis permutation making all L(e_i) lower triangular.
/// Positions are filled back-to-front: position p can hold basis vector b
/// only if every L(e_i) maps b into the span of vectors at positions >= p.
fn triangular_permutation(a: &Lsa) -> Option<Vec<usize>> {
    let n = a.dim;
    let lops: Vec<QMatrix> = (0..n).map(|i| a.l_op(&a.basis_vector(i))).collect();
    // Lower triangular in the ordering `perm` means a nonzero entry
    // L[(row, col)] needs position(row) >= position(col).
    let lower = |perm: &[usize]| -> bool {
        let mut pos = vec![0; n];
        for (p, &b) in perm.iter().enumerate() {
            pos[b] = p;
        }
        lops.iter().all(|l| {
            (0..n).all(|row| (0..n).all(|col| pos[row] >= pos[col] || l[(row, col)].is_zero()))
        })
    };
    let id: Vec<usize> = (0..n).collect();
    if lower(&id) {
        return Some(id);
    }
    if n > 8 {
        return None;
    }
    // Fill positions back to front: basis vector b may sit at position p only
    // if every L maps b into the span of b and the later-position vectors.
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn place(
        p: usize,
        n: usize,
        lops: &[QMatrix],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        'cand: for b in 0..n {
            if used[b] {
                continue;
            }
            for l in lops {
                for row in 0..n {
                    if l[(row, b)].is_zero() {
                        continue;
                    }
                    if row != b && !perm[p + 1..].contains(&row) {
                        continue 'cand;
                    }
                }
            }
            perm[p] = b;
            used[b] = true;
            if p == 0 || place(p - 1, n, lops, perm, used) {
                return true;
            }
            perm[p] = usize::MAX;
            used[b] = false;
        }
        false
    }
    if place(n - 1, n, &lops, &mut perm, &mut used) {
        Some(perm)
    } else {
        None
    }
}

/// Generalized eigen-decomposition of a rational matrix whose characteristic
/// polynomial splits over the rationals. Returns (eigenvalue, multiplicity,
/// basis of the generalized eigenspace); None when a root is irrational.
pub fn rational_weight_spaces(m: &QMatrix) -> Option<Vec<(Rational, usize, Vec<Vec<Rational>>)>> {
    let n = m.rows;
    // characteristic polynomial det(t I - M) as a univariate polynomial
    let cp = {
        let mm = PolyMatrix::from_fn(n, 1, |i, j| {
            let diag = if i == j { Poly::var(1, 0) } else { Poly::zero(1) };
            diag.sub(&Poly::constant(1, m[(i, j)].clone())).unwrap()
        });
        det_poly(&mm)
    };
    // rational roots with multiplicities by repeated division by (t - r)
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut rem = cp;
    for cand in rational_root_candidates(&rem) {
        let mut mult = 0;
        let lin = Poly::var(1, 0)
            .sub(&Poly::constant(1, cand.clone()))
            .unwrap();
        while let Some(q) = rem.divide_exact(&lin).unwrap() {
            rem = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    if total != n {
        return None; // irrational or complex eigenvalues
    }
    let mut out = Vec::new();
    for (r, mult) in roots {
        // generalized eigenspace: kernel of (M - r I)^n
        let shifted = QMatrix::from_fn(n, n, |i, j| {
            let mut v = m[(i, j)].clone();
            if i == j {
                v -= &r;
            }
            v
        });
        let mut power = QMatrix::identity(n);
        for _ in 0..n {
            power = power.matmul(&shifted);
        }
        let basis = power.kernel_basis();
        assert_eq!(basis.len(), mult, "generalized multiplicity mismatch");
        out.push((r, mult, basis));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Some(out)
}

/// Candidate rational roots of a univariate rational polynomial via the
/// rational root theorem after clearing denominators.
fn rational_root_candidates(p: &Poly) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if p.is_zero() {
        return vec![];
    }
    // common denominator
    let mut denom = BigInt::one();
    for (_, c) in p.terms() {
        denom = denom.lcm(c.denom());
    }
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); p.total_degree() as usize + 1];
    for (m, c) in p.terms() {
        let idx = m.total_degree() as usize;
        coeffs[idx] = (c * Rational::from_integer(denom.clone())).numer().clone();
    }
    let a0 = coeffs.iter().find(|c| !c.is_zero()).unwrap().clone();
    let an = coeffs.last().unwrap().clone();
    let divisors = |v: &BigInt| -> Vec<BigInt> {
        use num_traits::Signed;
        let va = v.abs();
        if va.is_zero() {
            return vec![BigInt::one()];
        }
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= va {
            if (&va % &d).is_zero() {
                out.push(d.clone());
                out.push(&va / &d);
            }
            d += 1;
        }
        out.sort();
        out.dedup();
        out
    };
    let mut cands = vec![Rational::zero()];
    for p_div in divisors(&a0) {
        for q_div in divisors(&an) {
            if q_div.is_zero() {
                continue;
            }
            let c = Rational::new(p_div.clone(), q_div.clone());
            cands.push(c.clone());
            cands.push(-c);
        }
    }
    cands.sort();
    cands.dedup();
    cands
}

/// Run the whole completely-solvable analysis on an algebra.
///
/// Checks, in order: triangularity of the left operators in the given basis
/// (with a permutation search for dim <= 8), nondegeneracy of the
/// trace-form, codimension of the derived subalgebra. On success computes
/// the characteristic polynomial, verifies its unit translational
/// homogeneity along the right principal idempotent, certifies the
/// exponential Hessian relation, and decomposes the algebra into weight
/// spaces of L(r), asserting the pairing alpha <-> 1 - alpha and the
/// tau-orthogonality between non-complementary weights.
pub fn completely_solvable_pipeline(a: &Lsa) -> Result<LsaReport> {
    if let Some((i, j, k)) = check_lsa(a) {
        return Err(Error::Precondition(format!(
            "not left-symmetric: first failing basis triple ({i}, {j}, {k})"
        )));
    }
    let charpoly = characteristic_polynomial(a);
    let tr = a.trace_r_covector();
    let complete = tr.iter().all(|t| t.is_zero());
    let solvable = triangular_permutation(a).is_some();
    let tau = trace_form(a);
    let tau_nondeg = !tau.det().is_zero();

    // derived Lie subalgebra span{ e_i e_j - e_j e_i }
    let n = a.dim;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..i {
            let bij = a.mul_vec(&a.basis_vector(i), &a.basis_vector(j));
            let bji = a.mul_vec(&a.basis_vector(j), &a.basis_vector(i));
            rows.push(
                bij.iter()
                    .zip(&bji)
                    .map(|(u, v)| u - v)
                    .collect::<Vec<Rational>>(),
            );
        }
    }
    let derived_rank = if rows.is_empty() {
        0
    } else {
        QMatrix::from_rows(rows).rank()
    };
    let derived_codim = n - derived_rank;

    let mut report = LsaReport {
        completely_solvable_in_basis: solvable,
        complete,
        tau_nondegenerate: tau_nondeg,
        derived_codim,
        idempotent: None,
        charpoly: charpoly.clone(),
        relation: None,
        weights: vec![],
        kernel_weights: vec![],
    };
    if !solvable {
        return Err(Error::Precondition(
            "left operators are not simultaneously triangular in any basis ordering".into(),
        ));
    }
    if !tau_nondeg {
        return Err(Error::Precondition("trace-form is degenerate".into()));
    }
    if derived_codim != 1 {
        return Err(Error::Precondition(format!(
            "derived subalgebra has codimension {derived_codim}, need 1"
        )));
    }

    let r = right_principal_idempotent(a)?;
    report.idempotent = Some(r.clone());

    // P(x + t r) = P(x) + t: equivalent to dP . r being the constant 1.
    let grad = charpoly.gradient();
    let mut dpr = Poly::zero(n);
    for i in 0..n {
        dpr = dpr.add(&grad[i].scale(&r[i]))?;
    }
    if dpr.as_constant() != Some(Rational::one()) {
        return Err(Error::Degenerate(
            "characteristic polynomial is not unit translationally homogeneous along r".into(),
        ));
    }
    // 2 tr L = (n+1) tr R as covectors
    let trl = a.trace_l_covector();
    for i in 0..n {
        if rat(2) * &trl[i] != rat(n as i64 + 1) * &tr[i] {
            return Err(Error::Degenerate(
                "2 tr L = (n+1) tr R fails; kernel of tr R is not unimodular".into(),
            ));
        }
    }
    let relation = verify_exponential_relation(&charpoly, &r)?.ok_or_else(|| {
        Error::Degenerate("graph determinant of the characteristic polynomial is not constant".into())
    })?;
    if relation.kappa.is_zero() {
        return Err(Error::Degenerate("exponential relation has kappa = 0".into()));
    }
    report.relation = Some(relation);

    // weight decomposition of L(r)
    let lr = a.l_op(&r);
    let Some(spaces) = rational_weight_spaces(&lr) else {
        return Err(Error::Degenerate(
            "L(r) has irrational eigenvalues; weight decomposition aborted".into(),
        ));
    };
    report.weights = spaces.iter().map(|(w, m, _)| (w.clone(), *m)).collect();

    // weights on b = ker tr R: alpha = 1 contributes only r
    let mut kernel_weights = Vec::new();
    for (w, mult, _) in &spaces {
        if *w == Rational::one() {
            if *mult > 1 {
                kernel_weights.push((w.clone(), mult - 1));
            }
        } else {
            kernel_weights.push((w.clone(), *mult));
        }
    }
    report.kernel_weights = kernel_weights.clone();

    // pairing alpha <-> 1 - alpha with equal dimensions
    for (w, mult) in &kernel_weights {
        let partner = Rational::one() - w;
        let pm = kernel_weights
            .iter()
            .find(|(v, _)| *v == partner)
            .map(|(_, m)| *m)
            .unwrap_or(0);
        if pm != *mult {
            return Err(Error::Degenerate(format!(
                "weight pairing fails: dim b^{w} = {mult} but dim b^{partner} = {pm}"
            )));
        }
    }
    // tau pairs only complementary weight spaces, nondegenerately
    for (wi, _, bi) in &spaces {
        for (wj, _, bj) in &spaces {
            let block = QMatrix::from_fn(bi.len(), bj.len(), |p, q| {
                let mut acc = Rational::zero();
                for s in 0..n {
                    for t in 0..n {
                        acc += &bi[p][s] * &tau[(s, t)] * &bj[q][t];
                    }
                }
                acc
            });
            let complementary = (wi + wj) == Rational::one()
                || (*wi == Rational::one() && *wj == Rational::one());
            if complementary {
                if bi.len() == bj.len() && block.rank() != bi.len() {
                    return Err(Error::Degenerate(format!(
                        "tau degenerates on the ({wi}, {wj}) weight block"
                    )));
                }
            } else if (0..bi.len()).any(|p| (0..bj.len()).any(|q| !block[(p, q)].is_zero())) {
                return Err(Error::Degenerate(format!(
                    "tau does not vanish on the non-complementary ({wi}, {wj}) block"
                )));
            }
        }
    }
    Ok(report)
}

/// Koszul-form diagnostics for a covector lambda.
#[derive(Debug, Clone)]
pub struct KoszulReport {
    pub metric_symmetric: bool,
    pub metric_nondegenerate: bool,
    pub idempotent: Vec<Rational>,
    /// h(u, u) != 0 and the reduced multiplication on ker lambda is an LSA.
    pub reduced_multiplication_lsa: bool,
    /// ker lambda = ker R(u).
    pub kernels_agree: bool,
    /// R(u)^2 = R(u) and h(u,u) = lambda(u) = 1.
    pub projection_normalized: bool,
    /// span(u) is a left ideal and lambda(u) != 0.
    pub span_left_ideal: bool,
    /// R(u) self-adjoint for h.
    pub r_self_adjoint: bool,
    /// L(u) + L(u)* = R(u) + I.
    pub l_adjoint_identity: bool,
    /// tr R(u), an integer between 1 and dim.
    pub trace_r_u: Rational,
}

/// Evaluate the Koszul metric h(x, y) = lambda(x * y), find the associated
/// idempotent, and check the reduced-multiplication conditions together with
/// the idempotent identities.
pub fn koszul_checks(a: &Lsa, lambda: &[Rational]) -> Result<KoszulReport> {
    let n = a.dim;
    if lambda.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    if lambda.iter().all(|v| v.is_zero()) {
        return Err(Error::Precondition("lambda = 0 is not a Koszul form".into()));
    }
    let lam = |x: &[Rational]| -> Rational {
        x.iter()
            .zip(lambda)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |s, v| s + v)
    };
    let h = QMatrix::from_fn(n, n, |i, j| {
        lam(&a.mul_vec(&a.basis_vector(i), &a.basis_vector(j)))
    });
    let metric_symmetric = (0..n).all(|i| (0..n).all(|j| h[(i, j)] == h[(j, i)]));
    let metric_nondegenerate = !h.det().is_zero();
    if !metric_symmetric || !metric_nondegenerate {
        return Err(Error::Precondition(
            "lambda(x * y) is not a nondegenerate symmetric metric".into(),
        ));
    }
    // idempotent u with lambda(a) = lambda(a * u) for all a:
    // h(e_i, u) = lambda(e_i) as a linear system.
    let u = h
        .solve(lambda)
        .ok_or_else(|| Error::Degenerate("metric solve failed".into()))?;
    let uu = a.mul_vec(&u, &u);
    if uu != u {
        return Err(Error::Degenerate("associated element is not idempotent".into()));
    }

    let ru = a.r_op(&u);
    let lu = a.l_op(&u);
    let lam_u = lam(&u);
    let huu = {
        let hu = h.matvec(&u);
        u.iter()
            .zip(&hu)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |s, v| s + v)
    };

    // kernels of lambda and R(u)
    let lambda_mat = QMatrix::from_rows(vec![lambda.to_vec()]);
    let ker_lambda = lambda_mat.kernel_basis();
    let ker_ru = ru.kernel_basis();
    let kernels_agree = ker_lambda.len() == ker_ru.len() && {
        // same span: every ker R(u) vector annihilated by lambda and ranks match
        ker_ru.iter().all(|v| lam(v).is_zero())
            && ker_lambda.len() == ker_ru.len()
    };

    let projection_normalized =
        ru.matmul(&ru) == ru && huu == Rational::one() && lam_u == Rational::one();

    // span(u) left ideal: x * u is a multiple of u for every basis x
    let span_left_ideal = !lam_u.is_zero()
        && (0..n).all(|i| {
            let xu = a.mul_vec(&a.basis_vector(i), &u);
            // xu is proportional to u
            let mut ratio: Option<Rational> = None;
            for t in 0..n {
                if u[t].is_zero() {
                    if !xu[t].is_zero() {
                        return false;
                    }
                } else {
                    let c = &xu[t] / &u[t];
                    match &ratio {
                        None => ratio = Some(c),
                        Some(prev) if *prev == c => {}
                        Some(_) => return false,
                    }
                }
            }
            true
        });

    // reduced multiplication x o y = x * y - lambda(u)^-1 h(x, y) u on ker lambda
    let reduced_multiplication_lsa = {
        let basis = &ker_lambda;
        let hxy = |x: &[Rational], y: &[Rational]| -> Rational {
            let hy = h.matvec(y);
            x.iter()
                .zip(&hy)
                .map(|(a, b)| a * b)
                .fold(Rational::zero(), |s, v| s + v)
        };
        let reduced = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
            let xy = a.mul_vec(x, y);
            let c = hxy(x, y) / &lam_u;
            xy.iter().zip(&u).map(|(p, q)| p - &(&c * q)).collect()
        };
        let assoc = |x: &[Rational], y: &[Rational], z: &[Rational]| -> Vec<Rational> {
            let lhs = reduced(&reduced(x, y), z);
            let rhs = reduced(x, &reduced(y, z));
            lhs.iter().zip(&rhs).map(|(p, q)| p - q).collect()
        };
        let mut ok = true;
        'outer: for x in basis {
            for y in basis {
                for z in basis {
                    let l = assoc(x, y, z);
                    let r2 = assoc(y, x, z);
                    if l != r2 {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        ok
    };

    // R(u) self-adjoint: h R(u) = R(u)^t h
    let r_self_adjoint = h.matmul(&ru) == ru.transpose().matmul(&h);
    // L(u) + L(u)* = R(u) + I with L* = h^-1 L^t h
    let l_adjoint_identity = {
        let hinv = h.inverse().expect("nondegenerate");
        let lstar = hinv.matmul(&lu.transpose()).matmul(&h);
        lu.add(&lstar) == ru.add(&QMatrix::identity(n))
    };
    let trace_r_u = ru.trace();

    Ok(KoszulReport {
        metric_symmetric,
        metric_nondegenerate,
        idempotent: u,
        reduced_multiplication_lsa,
        kernels_agree,
        projection_normalized,
        span_left_ideal,
        r_self_adjoint,
        l_adjoint_identity,
        trace_r_u,
    })
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

/// The n-dimensional Cayley algebra: e_i * e_j = e_{i+j} for i + j <= n
/// (i < n), and e_n * e_j = j e_j.
pub fn cayley_algebra(n: usize) -> Result<Lsa> {
    if n < 2 {
        return Err(Error::Precondition("dimension must be at least 2".into()));
    }
    let mut a = Lsa::new(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == n {
                // e_n * e_j = j e_j
                a.set_structure_constant(i - 1, j - 1, j - 1, rat(j as i64));
            } else if i + j <= n {
                let prev = a.structure_constant(i - 1, j - 1, i + j - 1).clone();
                a.set_structure_constant(i - 1, j - 1, i + j - 1, prev + Rational::one());
            }
        }
    }
    Ok(a)
}

/// Eastwood-Ezhov polynomial from the partition/composition formula,
/// normalized so that P_n - 1 = (-1)^n n Phi_n holds for the Cayley
/// characteristic polynomials:
/// Phi_n = (-1)^(n+1) sum_{i=1}^n (-1)^i (1/i) sum_{j_1+...+j_i = n} x_{j_1}...x_{j_i}.
/// (Phi_2 = x2 - x1^2/2, Phi_3 = -x1^3/3 + x1 x2 - x3.)
pub fn cayley_phi_partition(n: usize) -> Poly {
    // power series S(t) = sum_j x_j t^j; the inner sum over compositions of
    // n into i parts is the t^n coefficient of S^i.
    // Represent truncated series as Vec<Poly> indexed by t-degree.
    let zero = Poly::zero(n);
    let mut s: Vec<Poly> = vec![zero.clone(); n + 1];
    for j in 1..=n {
        s[j] = Poly::var(n, j - 1);
    }
    let mul_series = |a: &[Poly], b: &[Poly]| -> Vec<Poly> {
        let mut out = vec![Poly::zero(n); n + 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if i + j > n || bj.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&ai.mul(bj).unwrap()).unwrap();
            }
        }
        out
    };
    let mut acc = Poly::zero(n);
    let mut power = s.clone();
    for i in 1..=n {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc = acc
            .add(&power[n].scale(&Rational::new(sign.into(), (i as i64).into())))
            .unwrap();
        if i < n {
            power = mul_series(&power, &s);
        }
    }
    if n % 2 == 0 {
        acc = acc.neg();
    }
    acc
}

/// Phi_n computed both from the partition formula and from the Cayley
/// algebra's characteristic polynomial via P_n - 1 = (-1)^n n Phi_n; the two
/// must agree exactly.
pub fn cayley_phi(n: usize) -> Result<Poly> {
    let phi = cayley_phi_partition(n);
    let a = cayley_algebra(n)?;
    let p = characteristic_polynomial(&a);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let from_charpoly = p
        .sub(&Poly::one(n))?
        .scale(&Rational::new(sign.into(), (n as i64).into()));
    if phi != from_charpoly {
        return Err(Error::Degenerate(
            "partition formula and characteristic polynomial disagree".into(),
        ));
    }
    Ok(phi)
}

/// The parabolic algebra on basis (v_1, ..., v_{n-1}, u): v_i * v_j =
/// g_{ij} u, u * v_i = v_i / 2, u * u = u, with g the standard inner
/// product. Its characteristic polynomial has paraboloid level sets.
pub fn parabolic_algebra(n: usize) -> Result<Lsa> {
    if n < 2 {
        return Err(Error::Precondition("dimension must be at least 2".into()));
    }
    let mut a = Lsa::new(n);
    let u = n - 1;
    for i in 0..n - 1 {
        a.set_structure_constant(i, i, u, Rational::one());
        a.set_structure_constant(u, i, i, Rational::new(1.into(), 2.into()));
    }
    a.set_structure_constant(u, u, u, Rational::one());
    Ok(a)
}

/// Six-dimensional incomplete fixture with nilpotent, non-abelian derived
/// subalgebra; its characteristic polynomial is
/// 6 x1 x2 x3 + 6 x2^2 x3 - 6 x1 x4 - 6 x2 x5 - 3 x3^2 + 6 x6 + 1.
pub fn six_dim_example() -> Lsa {
    let mut a = Lsa::new(6);
    let mut set = |i: usize, j: usize, k: usize, num: i64, den: i64| {
        a.set_structure_constant(i - 1, j - 1, k - 1, Rational::new(num.into(), den.into()));
    };
    // read off the left multiplication operators row by row
    set(6, 1, 1, 3, 2);
    set(6, 2, 2, 3, 2);
    set(6, 3, 3, 3, 1);
    set(2, 3, 4, 1, 1);
    set(6, 4, 4, 9, 2);
    set(3, 1, 5, 1, 1);
    set(3, 2, 5, 1, 1);
    set(1, 3, 5, 1, 1);
    set(2, 3, 5, 2, 1);
    set(6, 5, 5, 9, 2);
    set(4, 1, 6, 1, 1);
    set(5, 2, 6, 1, 1);
    set(3, 3, 6, 1, 1);
    set(1, 4, 6, 1, 1);
    set(2, 5, 6, 1, 1);
    set(6, 6, 6, 6, 1);
    a
}

/// Four-dimensional incomplete fixture whose L(r) has a negative weight;
/// its characteristic polynomial is 1 + x4 - x1 x3 - x2^2/2.
pub fn four_dim_example() -> Lsa {
    let mut a = Lsa::new(4);
    let mut set = |i: usize, j: usize, k: usize, num: i64, den: i64| {
        a.set_structure_constant(i - 1, j - 1, k - 1, Rational::new(num.into(), den.into()));
    };
    set(4, 1, 1, -1, 1);
    set(4, 2, 2, 1, 2);
    set(4, 3, 3, 2, 1);
    set(3, 1, 4, 1, 1);
    set(2, 2, 4, 1, 1);
    set(1, 3, 4, 1, 1);
    set(4, 4, 4, 1, 1);
    a
}

/// Named fixtures for the CLI and tests.
pub fn fixture(name: &str) -> Option<Lsa> {
    match name {
        "cayley2" => cayley_algebra(2).ok(),
        "cayley3" => cayley_algebra(3).ok(),
        "cayley4" => cayley_algebra(4).ok(),
        "cayley5" => cayley_algebra(5).ok(),
        "cayley6" => cayley_algebra(6).ok(),
        "parabolic3" => parabolic_algebra(3).ok(),
        "parabolic4" => parabolic_algebra(4).ok(),
        "six_dim" => Some(six_dim_example()),
        "four_dim" => Some(four_dim_example()),
        _ => None,
    }
}

pub fn fixture_names() -> &'static [&'static str] {
    &[
        "cayley2",
        "cayley3",
        "cayley4",
        "cayley5",
        "cayley6",
        "parabolic3",
        "parabolic4",
        "six_dim",
        "four_dim",
    ]
}

/// Infinitesimal relative invariance: dP_x((I + R(x)) a) = P(x) tr R(a) as a
/// polynomial identity for every basis vector a.
pub fn relative_invariance_holds(a: &Lsa) -> bool {
    let n = a.dim;
    let p = characteristic_polynomial(a);
    let grad = p.gradient();
    for b in 0..n {
        // field X = (I + R(x)) e_b: component i is delta_{ib} + sum_j c_{bji} x_j
        let mut lhs = Poly::zero(n);
        for i in 0..n {
            let mut comp = if i == b { Poly::one(n) } else { Poly::zero(n) };
            for j in 0..n {
                let c = a.structure_constant(b, j, i);
                if !c.is_zero() {
                    comp = comp.add(&Poly::var(n, j).scale(c)).unwrap();
                }
            }
            lhs = lhs.add(&comp.mul(&grad[i]).unwrap()).unwrap();
        }
        let tr_rb = a.r_op(&a.basis_vector(b)).trace();
        if lhs != p.scale(&tr_rb) {
            return false;
        }
    }
    true
}

/// Trace-form from the characteristic polynomial:
/// tau(a, b) = (d_a P d_b P - d_a d_b P)(0).
pub fn trace_form_from_charpoly(a: &Lsa) -> bool {
    let n = a.dim;
    let p = characteristic_polynomial(a);
    let tau = trace_form(a);
    let zero = vec![Rational::zero(); n];
    let grad = p.gradient();
    for i in 0..n {
        for j in 0..n {
            let pi = grad[i].eval(&zero).unwrap();
            let pj = grad[j].eval(&zero).unwrap();
            let pij = grad[i].diff(j).unwrap().eval(&zero).unwrap();
            if tau[(i, j)] != pi * pj - pij {
                return false;
            }
        }
    }
    true
}

/// Closed form for the characteristic polynomial on ker tr R + t r:
/// P(xb + t r) = 1 - tau(xb, (I + Rbar(xb))^-1 L(r) xb) + t, checked at
/// exact rational sample points. Rbar is the reduced right multiplication
/// y -> y * x - tau(y, x) r on ker tr R.
pub fn closed_form_matches(a: &Lsa, samples: u32, seed: u64) -> Result<bool> {
    use rand::{Rng, SeedableRng};
    let n = a.dim;
    let p = characteristic_polynomial(a);
    let tau = trace_form(a);
    let r = right_principal_idempotent(a)?;
    let tr = a.trace_r_covector();
    let kernel = QMatrix::from_rows(vec![tr]).kernel_basis();
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    for _ in 0..samples {
        // random point in ker tr R
        let mut xb = vec![Rational::zero(); n];
        for basis_vec in &kernel {
            let c = rat(rng.gen_range(-4..5));
            for i in 0..n {
                xb[i] += &c * &basis_vec[i];
            }
        }
        let t = rat(rng.gen_range(-4..5));
        // direct evaluation
        let point: Vec<Rational> = (0..n).map(|i| &xb[i] + &t * &r[i]).collect();
        let direct = p.eval(&point)?;
        // closed form
        let rbar = {
            // matrix of y -> y * xb - tau(y, xb) r on the ambient space
            let rx = a.r_op(&xb);
            let tau_x = tau.matvec(&xb);
            QMatrix::from_fn(n, n, |i, j| {
                // column j: e_j * xb - tau(e_j, xb) r
                &rx[(i, j)] - &(&tau_x[j] * &r[i])
            })
        };
        let id = QMatrix::identity(n);
        let m = id.add(&rbar);
        let lr_x = a.l_op(&r);
        let lx = lr_x.matvec(&xb);
        let y = m
            .solve(&lx)
            .ok_or_else(|| Error::Degenerate("I + Rbar singular at sample".into()))?;
        let tau_y = tau.matvec(&y);
        let pairing = xb
            .iter()
            .zip(&tau_y)
            .map(|(u, v)| u * v)
            .fold(Rational::zero(), |s, v| s + v);
        let closed = Rational::one() - pairing + t;
        if direct != closed {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    #[test]
    fn cayley_algebras_are_lsas() {
        for n in 2..=8 {
            let a = cayley_algebra(n).unwrap();
            assert!(check_lsa(&a).is_none(), "cayley {n} fails left symmetry");
        }
    }

    #[test]
    fn abelian_associative_is_lsa_and_perturbation_fails() {
        // diagonal structure constants: e_i * e_i = e_i
        let mut a = Lsa::new(3);
        for i in 0..3 {
            a.set_structure_constant(i, i, i, Rational::one());
        }
        assert!(check_lsa(&a).is_none());

        let mut bad = cayley_algebra(3).unwrap();
        let v = bad.structure_constant(2, 2, 2).clone();
        bad.set_structure_constant(2, 2, 2, v + Rational::one());
        assert!(check_lsa(&bad).is_some());
    }

    #[test]
    fn cayley3_charpoly() {
        let a = cayley_algebra(3).unwrap();
        let p = characteristic_polynomial(&a);
        let expect = parse_poly("1 + x1^3 - 3*x1*x2 + 3*x3", 0).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn six_dim_charpoly_and_graph_hessian() {
        let a = six_dim_example();
        assert!(check_lsa(&a).is_none());
        let p = characteristic_polynomial(&a);
        let expect = parse_poly(
            "6*x1*x2*x3 + 6*x2^2*x3 - 6*x1*x4 - 6*x2*x5 - 3*x3^2 + 6*x6 + 1",
            0,
        )
        .unwrap();
        assert_eq!(p, expect);
        // reduced form: p5 = (P - 1 - 6 x6)/6 in five variables solves H = -1
        let p5 = parse_poly("x1*x2*x3 + x2^2*x3 - x1*x4 - x2*x5 - 1/2*x3^2", 0).unwrap();
        let h = crate::hessian::hessian_det(&p5).unwrap();
        assert_eq!(h, Poly::constant(5, rat(-1)));
    }

    #[test]
    fn four_dim_charpoly() {
        let a = four_dim_example();
        assert!(check_lsa(&a).is_none());
        let p = characteristic_polynomial(&a);
        let expect = parse_poly("1 + x4 - x1*x3 - 1/2*x2^2", 0).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn cayley_trace_form_and_idempotent() {
        let n = 5;
        let a = cayley_algebra(n).unwrap();
        let tau = trace_form(&a);
        // tau = n^2 e_n (x) e_n + n * antidiagonal on the rest
        for i in 0..n {
            for j in 0..n {
                let expect = if i == n - 1 && j == n - 1 {
                    rat((n * n) as i64)
                } else if i + j == n - 2 {
                    rat(n as i64)
                } else {
                    rat(0)
                };
                assert_eq!(tau[(i, j)], expect, "tau[{i}][{j}]");
            }
        }
        let r = right_principal_idempotent(&a).unwrap();
        let mut expect = vec![Rational::zero(); n];
        expect[n - 1] = Rational::new(1.into(), (n as i64).into());
        assert_eq!(r, expect);
    }

    #[test]
    fn four_dim_trace_form_and_idempotent() {
        let a = four_dim_example();
        let tau = trace_form(&a);
        // x1 y3 + x3 y1 + x2 y2 + x4 y4
        let expect = QMatrix::from_rows(vec![
            vec![rat(0), rat(0), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0)],
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(1)],
        ]);
        assert_eq!(tau, expect);
        let r = right_principal_idempotent(&a).unwrap();
        assert_eq!(r, vec![rat(0), rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn complete_algebra_has_no_principal_idempotent() {
        // strictly triangular: e_1 * e_1 = e_2, everything else zero
        let mut a = Lsa::new(2);
        a.set_structure_constant(0, 0, 1, Rational::one());
        assert!(check_lsa(&a).is_none());
        assert!(right_principal_idempotent(&a).is_err());
    }

    #[test]
    fn pipeline_cayley3() {
        let a = cayley_algebra(3).unwrap();
        let rep = completely_solvable_pipeline(&a).unwrap();
        assert!(rep.completely_solvable_in_basis);
        assert!(rep.tau_nondegenerate);
        assert_eq!(rep.derived_codim, 1);
        let rel = rep.relation.unwrap();
        assert_eq!(rel.m, 3);
        // P_3 = 3(x3 + g) + 1 with H(-g) = -1 in two variables, so the
        // graph determinant scales to 3^4 * (-1)
        assert_eq!(rel.kappa, rat(-81));
        // weights of L(r) on ker tr R: {1/3, 2/3}
        assert_eq!(
            rep.kernel_weights,
            vec![
                (Rational::new(1.into(), 3.into()), 1),
                (Rational::new(2.into(), 3.into()), 1)
            ]
        );
    }

    #[test]
    fn pipeline_six_dim() {
        let a = six_dim_example();
        let rep = completely_solvable_pipeline(&a).unwrap();
        let rel = rep.relation.unwrap();
        // P = 6(x6 + p) + 1 with H(p) = -1 in five variables scales the
        // graph determinant to 6^7 * (-1)^5 * H(-p) = -6^7
        assert_eq!(rel.kappa, rat(-279936));
        assert_eq!(rel.m, 6);
    }

    #[test]
    fn pipeline_four_dim_has_negative_weight() {
        let a = four_dim_example();
        let rep = completely_solvable_pipeline(&a).unwrap();
        let rel = rep.relation.clone().unwrap();
        assert_eq!(rel.kappa, rat(1));
        assert_eq!(rel.m, 4);
        // weights on ker tr R: {-1, 1/2, 2}
        assert_eq!(
            rep.kernel_weights,
            vec![
                (rat(-1), 1),
                (Rational::new(1.into(), 2.into()), 1),
                (rat(2), 1)
            ]
        );
    }

    #[test]
    fn koszul_on_cayley3() {
        let a = cayley_algebra(3).unwrap();
        let lambda = a.trace_r_covector();
        let rep = koszul_checks(&a, &lambda).unwrap();
        assert!(rep.metric_symmetric && rep.metric_nondegenerate);
        assert!(rep.reduced_multiplication_lsa);
        assert!(rep.kernels_agree);
        assert!(rep.projection_normalized);
        assert!(rep.span_left_ideal);
        assert!(rep.r_self_adjoint);
        assert!(rep.l_adjoint_identity);
        assert_eq!(rep.trace_r_u, Rational::one());
        // u is the right principal idempotent
        assert_eq!(rep.idempotent, right_principal_idempotent(&a).unwrap());
    }

    #[test]
    fn koszul_rejects_zero_form() {
        let a = cayley_algebra(3).unwrap();
        assert!(koszul_checks(&a, &[rat(0), rat(0), rat(0)]).is_err());
    }

    #[test]
    fn koszul_on_parabolic() {
        let a = parabolic_algebra(3).unwrap();
        assert!(check_lsa(&a).is_none());
        let p = characteristic_polynomial(&a);
        // P(x + a u) = a - g(x, x)/2 + 1 in coordinates: 1 + x3 - (x1^2 + x2^2)/2
        let expect = parse_poly("1 + x3 - 1/2*x1^2 - 1/2*x2^2", 0).unwrap();
        assert_eq!(p, expect);
        let lambda = a.trace_r_covector();
        let rep = koszul_checks(&a, &lambda).unwrap();
        assert!(rep.projection_normalized);
        // trace form tau(x + au, y + bu) = ab + g(x, y) is positive definite:
        // tau(x, y) = tr R(g(x,y) u) = g(x,y) tr R(u) = g(x,y) on the block
        let tau = trace_form(&a);
        assert_eq!(tau[(0, 0)], Rational::one());
        assert_eq!(tau[(1, 1)], Rational::one());
        assert_eq!(tau[(2, 2)], Rational::one());
        assert!(tau[(0, 1)].is_zero() && tau[(0, 2)].is_zero());
    }

    #[test]
    fn cayley_phi_small() {
        // Phi_3 = -x1^3/3 + x1 x2 - x3
        let phi3 = cayley_phi(3).unwrap();
        let expect = parse_poly("-1/3*x1^3 + x1*x2 - x3", 0).unwrap();
        assert_eq!(phi3, expect);
        // Phi_2 = x2 - x1^2/2
        let phi2 = cayley_phi(2).unwrap();
        let expect = parse_poly("x2 - 1/2*x1^2", 0).unwrap();
        assert_eq!(phi2, expect);
    }

    #[test]
    fn cayley_recursion_at_4() {
        // (-1)^n n Phi_n + sum_{i=1}^{n-1} (-1)^(n-i) (n-i) x_i Phi_{n-i} = n x_n
        let n = 4;
        let phi: Vec<Poly> = (1..=n).map(|k| cayley_phi_partition(k).embed(n, 0)).collect();
        let mut lhs = phi[n - 1].scale(&rat(if n % 2 == 0 { 1 } else { -1 } * n as i64));
        for i in 1..n {
            let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
            let term = Poly::var(n, i - 1)
                .mul(&phi[n - i - 1])
                .unwrap()
                .scale(&rat(sign * (n - i) as i64));
            lhs = lhs.add(&term).unwrap();
        }
        assert_eq!(lhs, Poly::var(n, n - 1).scale(&rat(n as i64)));
    }

    #[test]
    fn charpoly_recursion_all_n() {
        // P_n - 1 = sum_{i=1}^{n-1} x_i (1 - P_{n-i}) + n x_n
        for n in 2..=8usize {
            let ps: Vec<Poly> = (1..=n)
                .map(|k| {
                    if k == 1 {
                        // P_1 = 1 + x1
                        Poly::one(n).add(&Poly::var(n, 0)).unwrap()
                    } else {
                        characteristic_polynomial(&cayley_algebra(k).unwrap()).embed(n, 0)
                    }
                })
                .collect();
            let mut rhs = Poly::var(n, n - 1).scale(&rat(n as i64));
            for i in 1..n {
                let term = Poly::var(n, i - 1)
                    .mul(&Poly::one(n).sub(&ps[n - i - 1]).unwrap())
                    .unwrap();
                rhs = rhs.add(&term).unwrap();
            }
            let lhs = ps[n - 1].sub(&Poly::one(n)).unwrap();
            assert_eq!(lhs, rhs, "recursion fails at n = {n}");
        }
    }

    #[test]
    fn invariance_identities_all_fixtures() {
        for name in fixture_names() {
            let a = fixture(name).unwrap();
            assert!(relative_invariance_holds(&a), "{name}: relative invariance");
            assert!(trace_form_from_charpoly(&a), "{name}: trace form identity");
        }
    }

    #[test]
    fn closed_form_on_fixtures() {
        for name in ["cayley3", "cayley4", "six_dim", "four_dim"] {
            let a = fixture(name).unwrap();
            assert!(
                closed_form_matches(&a, 12, 7).unwrap(),
                "{name}: closed form mismatch"
            );
        }
    }

    #[test]
    fn sparse_round_trip() {
        let a = six_dim_example();
        let sparse = a.sparse_constants();
        let b = Lsa::from_sparse(6, &sparse).unwrap();
        assert_eq!(characteristic_polynomial(&a), characteristic_polynomial(&b));
    }
}
