//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order, so iteration and serialization are canonical. The
//! zero polynomial is the empty map; no zero coefficients are ever stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector of a single term. Length is fixed by the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// x_var as a monomial.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: first by total degree, then lexicographically on
    /// the exponent vector (x1 most significant).
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Homogeneity status of a polynomial. The zero polynomial gets its own
/// sentinel since it is homogeneous of every degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

/// Sparse exact multivariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    /// The variable x_var (zero-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        let mut p = Poly::zero(nvars);
        p.terms.insert(Monomial::var(nvars, var), Rational::one());
        p
    }

    /// Single term `c * x^exps`. Zero coefficients are dropped.
    pub fn term(nvars: usize, c: Rational, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps.to_vec()), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Leading term in graded-lex order (largest monomial), if any.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::constant(self.nvars))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Some(c) iff the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    fn check_arity(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut out.terms, m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                Self::insert_add(&mut out.terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, q: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = q;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base).expect("same arity");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same arity");
            }
        }
        out
    }

    /// Exact partial derivative with respect to x_var.
    pub fn diff(&self, var: usize) -> Result<Poly> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[var] = e - 1;
            Self::insert_add(&mut out.terms, me, c * rat(e as i64));
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        // Per-variable power tables keep the BigInt work linear in max degree.
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(self.nvars);
        for (i, x) in point.iter().enumerate() {
            let maxe = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
            let mut tab = Vec::with_capacity(maxe + 1);
            tab.push(Rational::one());
            for e in 1..=maxe {
                let next = &tab[e - 1] * x;
                tab.push(next);
            }
            powers.push(tab);
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v *= &powers[i][e as usize];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// f64 evaluation (for the geometry layer).
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut v = rational_to_f64(c);
            for (i, &e) in m.0.iter().enumerate() {
                v *= point[i].powi(e as i32);
            }
            acc += v;
        }
        acc
    }

    /// Precomposition with the affine map x -> linear*x + shift. The linear
    /// part must be invertible over the rationals (checked).
    pub fn substitute_affine(&self, linear: &[Vec<Rational>], shift: &[Rational]) -> Result<Poly> {
        let n = self.nvars;
        if linear.len() != n || linear.iter().any(|r| r.len() != n) || shift.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: linear.len(),
            });
        }
        let mat = crate::linalg::QMatrix::from_rows(linear.to_vec());
        if mat.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        // Image of each variable as a degree-1 polynomial.
        let mut images: Vec<Poly> = Vec::with_capacity(n);
        for i in 0..n {
            let mut p = Poly::constant(n, shift[i].clone());
            for j in 0..n {
                p = p.add(&Poly::var(n, j).scale(&linear[i][j]))?;
            }
            images.push(p);
        }
        self.substitute(&images)
    }

    /// Substitute arbitrary polynomials for the variables.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        let n = self.nvars;
        if images.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: images.len(),
            });
        }
        let out_vars = images.first().map(|p| p.nvars()).unwrap_or(n);
        // Power tables of the images.
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(n);
        for i in 0..n {
            let maxe = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
            let mut tab = Vec::with_capacity(maxe + 1);
            tab.push(Poly::one(out_vars));
            for e in 1..=maxe {
                let next = tab[e - 1].mul(&images[i])?;
                tab.push(next);
            }
            powers.push(tab);
        }
        let mut acc = Poly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Restrict to the line t -> point + t*dir, producing a univariate polynomial.
    pub fn restrict_to_line(&self, point: &[Rational], dir: &[Rational]) -> Result<Poly> {
        let n = self.nvars;
        if point.len() != n || dir.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: point.len(),
            });
        }
        let images: Vec<Poly> = (0..n)
            .map(|i| {
                Poly::constant(1, point[i].clone())
                    .add(&Poly::var(1, 0).scale(&dir[i]))
                    .expect("arity 1")
            })
            .collect();
        self.substitute(&images)
    }

    /// Reinterpret in a larger ring, mapping variable i to variable
    /// offset + i.
    pub fn embed(&self, nvars_new: usize, offset: usize) -> Poly {
        assert!(offset + self.nvars <= nvars_new);
        let mut out = Poly::zero(nvars_new);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; nvars_new];
            e[offset..offset + self.nvars].copy_from_slice(&m.0);
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Homogeneity: the common total degree of all terms if there is one.
    pub fn homogeneity(&self) -> Homogeneity {
        if self.is_zero() {
            return Homogeneity::Zero;
        }
        let mut it = self.terms.keys();
        let d = it.next().unwrap().total_degree();
        if it.all(|m| m.total_degree() == d) {
            Homogeneity::Homogeneous(d)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    /// Exact division: Some(q) with self = q*b when b divides self, None
    /// otherwise. Division by the zero polynomial is an error.
    pub fn divide_exact(&self, b: &Poly) -> Result<Option<Poly>> {
        self.check_arity(b)?;
        if b.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (lm, lc) = b.leading().unwrap();
        let lm = lm.clone();
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            // Monomial divisibility of the leading terms; failure means
            // "does not divide", a normal answer.
            let mut q_exps = Vec::with_capacity(self.nvars);
            let mut divisible = true;
            for (a, b) in rm.0.iter().zip(&lm.0) {
                if a < b {
                    divisible = false;
                    break;
                }
                q_exps.push(a - b);
            }
            if !divisible {
                return Ok(None);
            }
            let qc = rc / &lc;
            let qt = Poly::term(self.nvars, qc, &q_exps);
            quot = quot.add(&qt)?;
            rem = rem.sub(&qt.mul(b)?)?;
        }
        Ok(Some(quot))
    }

    /// Gradient as a vector of polynomials.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.diff(i).unwrap()).collect()
    }

    /// Euler operator sum_i x_i * dP/dx_i.
    pub fn euler_operator(&self) -> Poly {
        let mut acc = Poly::zero(self.nvars);
        for i in 0..self.nvars {
            let xi = Poly::var(self.nvars, i);
            acc = acc.add(&xi.mul(&self.diff(i).unwrap()).unwrap()).unwrap();
        }
        acc
    }

    /// Exact q-th root if the polynomial is a perfect q-th power, else None.
    pub fn nth_root(&self, q: u32) -> Option<Poly> {
        assert!(q >= 1);
        if q == 1 {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        // Newton-free approach: the root's leading term is the q-th root of
        // the leading term, then peel by long division of self by root^(q-1)
        // candidates. Simpler: binary-search by construction is overkill for
        // the scale used here; build the root term by term via division.
        let (lm, lc) = self.leading().unwrap();
        if lm.0.iter().any(|e| e % q != 0) {
            return None;
        }
        let root_lc = rational_nth_root(lc, q)?;
        let root_lm: Vec<u32> = lm.0.iter().map(|e| e / q).collect();
        let mut root = Poly::term(self.nvars, root_lc, &root_lm);
        // Iteratively fix the remaining terms: if self = (root + t + ...)^q,
        // the next correction t satisfies self - root^q = q * root^(q-1) * t + lower.
        loop {
            let diff = self.sub(&root.pow(q)).unwrap();
            if diff.is_zero() {
                return Some(root);
            }
            let divisor = root.pow(q - 1).scale(&rat(q as i64));
            let (dm, dc) = diff.leading().unwrap();
            let (vm, vc) = divisor.leading().unwrap();
            let mut exps = Vec::with_capacity(self.nvars);
            for (a, b) in dm.0.iter().zip(&vm.0) {
                if a < b {
                    return None;
                }
                exps.push(a - b);
            }
            let t = Poly::term(self.nvars, dc / vc, &exps);
            if t.is_zero() {
                return None;
            }
            let next = root.add(&t).unwrap();
            if next == root {
                return None;
            }
            root = next;
        }
    }
}

/// Convert a rational to f64 (numerator/denominator in f64, adequate at the
/// coefficient sizes used here).
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational q-th root when it exists.
fn rational_nth_root(r: &Rational, q: u32) -> Option<Rational> {
    let neg = r.is_negative();
    if neg && q % 2 == 0 {
        return None;
    }
    let n = r.numer().abs();
    let d = r.denom().clone();
    let rn = n.nth_root(q);
    let rd = d.nth_root(q);
    if num_traits::pow::pow(rn.clone(), q as usize) != n
        || num_traits::pow::pow(rd.clone(), q as usize) != d
    {
        return None;
    }
    let mut out = Rational::new(rn, rd);
    if neg {
        out = -out;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use testutil::{random_homogeneous, random_poly};

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let a = x(2, 0).add(&x(2, 1)).unwrap();
        let b = x(2, 0).sub(&x(2, 1)).unwrap();
        let expect = x(2, 0).pow(2).sub(&x(2, 1).pow(2)).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn pow_of_product() {
        let p = x(3, 0).mul(&x(3, 1)).unwrap().mul(&x(3, 2)).unwrap();
        assert_eq!(p.pow(2), Poly::term(3, rat(1), &[2, 2, 2]));
    }

    #[test]
    fn additive_inverse_is_empty_map() {
        let p = Poly::term(2, ratio(3, 7), &[1, 2]);
        let s = p.add(&p.neg()).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let a = Poly::one(2);
        let b = Poly::one(3);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn diff_basic() {
        // d/dx1 (x1^2 x2) = 2 x1 x2
        let p = Poly::term(2, rat(1), &[2, 1]);
        assert_eq!(p.diff(0).unwrap(), Poly::term(2, rat(2), &[1, 1]));
        // constants differentiate to zero
        assert!(Poly::constant(2, rat(5)).diff(1).unwrap().is_zero());
        assert!(p.diff(7).is_err());
    }

    #[test]
    fn diff_binary_cubic_discriminant_in_x1() {
        let p = crate::catalog::binary_cubic_discriminant_poly();
        let got = p.diff(0).unwrap();
        // Term-by-term differentiation oracle, frozen:
        // 18 x2 x3 x4 - 4 x3^3 - 54 x1 x4^2
        let expect = Poly::term(4, rat(18), &[0, 1, 1, 1])
            .add(&Poly::term(4, rat(-4), &[0, 0, 3, 0]))
            .unwrap()
            .add(&Poly::term(4, rat(-54), &[1, 0, 0, 2]))
            .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn eval_examples() {
        let p = x(3, 0).mul(&x(3, 1)).unwrap().mul(&x(3, 2)).unwrap();
        let one = rat(1);
        assert_eq!(p.eval(&[one.clone(), one.clone(), one.clone()]).unwrap(), rat(1));
        assert_eq!(Poly::zero(3).eval(&[rat(9), rat(-2), rat(0)]).unwrap(), rat(0));
        assert!(p.eval(&[rat(1)]).is_err());
    }

    #[test]
    fn eval_is_ring_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = random_poly(&mut rng, 3, 3);
            let b = random_poly(&mut rng, 3, 3);
            let p: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-5..6))).collect();
            let lhs = a.mul(&b).unwrap().eval(&p).unwrap();
            let rhs = a.eval(&p).unwrap() * b.eval(&p).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitute_affine_examples() {
        // swap of variables leaves x1 x2 fixed
        let p = Poly::term(2, rat(1), &[1, 1]);
        let swap = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        let shift = vec![rat(0), rat(0)];
        assert_eq!(p.substitute_affine(&swap, &shift).unwrap(), p);

        // x1^2 - x2^2 under (x1,x2) -> (x1+x2, x1-x2) gives 4 x1 x2
        let q = Poly::term(2, rat(1), &[2, 0])
            .add(&Poly::term(2, rat(-1), &[0, 2]))
            .unwrap();
        let lin = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        assert_eq!(
            q.substitute_affine(&lin, &shift).unwrap(),
            Poly::term(2, rat(4), &[1, 1])
        );

        // identity map is the identity
        let id = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        assert_eq!(q.substitute_affine(&id, &shift).unwrap(), q);

        // singular linear part rejected
        let sing = vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]];
        assert!(q.substitute_affine(&sing, &shift).is_err());
    }

    #[test]
    fn substitute_affine_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(11);
        for _ in 0..20 {
            let p = random_poly(&mut rng, 2, 3);
            // shear with unit determinant and its inverse
            let s = rat(rng.gen_range(-3..4));
            let lin = vec![vec![rat(1), s.clone()], vec![rat(0), rat(1)]];
            let inv = vec![vec![rat(1), -s.clone()], vec![rat(0), rat(1)]];
            let shift = vec![rat(2), rat(-1)];
            // inverse of x -> Lx + s is x -> L^-1 x - L^-1 s
            let ishift = vec![-(rat(2) + s.clone()), rat(1)];
            let there = p.substitute_affine(&lin, &shift).unwrap();
            let back = there.substitute_affine(&inv, &ishift).unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn homogeneity_cases() {
        let p = Poly::term(3, rat(1), &[1, 1, 1]);
        assert_eq!(p.homogeneity(), Homogeneity::Homogeneous(3));
        // 1 + x4 - x1 x3 - x2^2/2 is inhomogeneous
        let q = Poly::one(4)
            .add(&Poly::var(4, 3))
            .unwrap()
            .sub(&Poly::term(4, rat(1), &[1, 0, 1, 0]))
            .unwrap()
            .sub(&Poly::term(4, ratio(1, 2), &[0, 2, 0, 0]))
            .unwrap();
        assert_eq!(q.homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Poly::zero(2).homogeneity(), Homogeneity::Zero);
    }

    #[test]
    fn divide_exact_examples() {
        let pr = Poly::term(3, rat(1), &[1, 1, 1]);
        let sq = pr.pow(2);
        assert_eq!(sq.divide_exact(&pr).unwrap().unwrap(), pr);

        // H(x1 x2 x3) / (x1 x2 x3) = 2
        let h = crate::hessian::hessian_det(&pr).unwrap();
        assert_eq!(h.divide_exact(&pr).unwrap().unwrap(), Poly::constant(3, rat(2)));

        // x1^2 + x2^2 is not divisible by x1
        let s = Poly::term(2, rat(1), &[2, 0])
            .add(&Poly::term(2, rat(1), &[0, 2]))
            .unwrap();
        assert!(s.divide_exact(&Poly::var(2, 0)).unwrap().is_none());
        assert!(s.divide_exact(&Poly::zero(2)).is_err());
    }

    #[test]
    fn diff_commutes() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(3);
        for _ in 0..30 {
            let p = random_poly(&mut rng, 3, 4);
            for i in 0..3 {
                for j in 0..3 {
                    let a = p.diff(i).unwrap().diff(j).unwrap();
                    let b = p.diff(j).unwrap().diff(i).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn euler_identity_on_homogeneous() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(4);
        for _ in 0..30 {
            let p = random_homogeneous(&mut rng, 3, 4);
            let lhs = p.euler_operator();
            let rhs = p.scale(&rat(4));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn nth_root_examples() {
        let pr = Poly::term(3, rat(1), &[1, 1, 1]);
        assert_eq!(pr.pow(3).nth_root(3).unwrap(), pr);
        let s = Poly::var(2, 0).add(&Poly::var(2, 1)).unwrap();
        assert_eq!(s.pow(2).nth_root(2).unwrap(), s);
        assert!(s.nth_root(2).is_none());
    }
}
