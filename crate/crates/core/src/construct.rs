//! Combinators that build new solutions of H(P) = kappa * P^m from certified
//! ones: powers, disjoint-variable tensor products, adding a linear factor,
//! radial graphs, squared moduli of holomorphic solutions, and powers of
//! paraboloid graphs. Every constructor predicts the resulting relation from
//! the input data and then re-certifies it independently; the two must agree
//! or the constructor errors out.

use num_traits::{One, Zero};

use crate::catalog::EXACT_NVARS_LIMIT;
use crate::hessian::hessian_det;
use crate::poly::{rat, Homogeneity, Poly, Rational};
use crate::verify::{verify_power_relation_pit, PitOutcome, Relation, RelationKind};
use crate::{Error, Result, DEFAULT_SEED};

fn require_power(rel: &Relation) -> Result<(Rational, i64)> {
    if rel.kind != RelationKind::Power || rel.root != 1 {
        return Err(Error::Precondition(
            "input relation must be a plain power relation".into(),
        ));
    }
    if rel.kappa.is_zero() {
        return Err(Error::Precondition("input relation has kappa = 0".into()));
    }
    Ok((rel.kappa.clone(), rel.m))
}

fn homogeneous_degree(p: &Poly) -> Result<i64> {
    match p.homogeneity() {
        Homogeneity::Homogeneous(k) => Ok(k as i64),
        _ => Err(Error::Precondition("polynomial is not homogeneous".into())),
    }
}

/// Re-certify a predicted relation: exact identity for small ambient
/// dimension, seeded probabilistic verification above it.
fn recertify(p: &Poly, predicted: &Relation) -> Result<Relation> {
    if p.nvars() <= EXACT_NVARS_LIMIT {
        let h = hessian_det(p)?;
        let rhs = p.pow(predicted.m as u32).scale(&predicted.kappa);
        if h == rhs {
            Ok(Relation::exact(
                RelationKind::Power,
                predicted.kappa.clone(),
                predicted.m,
            ))
        } else {
            Err(Error::Degenerate(
                "constructed relation failed exact re-verification".into(),
            ))
        }
    } else {
        match verify_power_relation_pit(p, &predicted.kappa, predicted.m as u32, 12, DEFAULT_SEED)?
        {
            PitOutcome::Certified(r) => Ok(r),
            PitOutcome::Refuted { witness, .. } => Err(Error::Degenerate(format!(
                "constructed relation refuted at {witness:?}"
            ))),
        }
    }
}

/// P^q for homogeneous P of degree k with qk dividing 2(n+1):
/// kappa' = kappa q^(n+1) (qk-1)/(k-1), exponent (n+1)(qk-2)/(qk).
pub fn power(p: &Poly, relation: &Relation, q: u32) -> Result<(Poly, Relation)> {
    if q == 0 {
        return Err(Error::Precondition("exponent must be positive".into()));
    }
    if q == 1 {
        return Ok((p.clone(), relation.clone()));
    }
    let (kappa, _m) = require_power(relation)?;
    let k = homogeneous_degree(p)?;
    let n1 = p.nvars() as i64;
    let qk = q as i64 * k;
    if 2 * n1 % qk != 0 {
        return Err(Error::Precondition(format!(
            "divisibility failure: qk = {qk} does not divide 2(n+1) = {}",
            2 * n1
        )));
    }
    let kappa2 =
        kappa * rat(q as i64).pow(n1 as i32) * Rational::new((qk - 1).into(), (k - 1).into());
    let m2 = n1 * (qk - 2) / qk;
    let predicted = Relation::exact(RelationKind::Power, kappa2, m2);
    let result = p.pow(q);
    let certified = recertify(&result, &predicted)?;
    Ok((result, certified))
}

/// Disjoint-variable product P^a (x) Q^b with matching scaling data
/// 2(m+1)/(ak) = 2(n+1)/(bl):
/// kappa'' = -kappa_P kappa_Q a^(m+1) b^(n+1) (ak+bl-1)/((k-1)(l-1)),
/// exponent (m+n+2)(ak+bl-2)/(ak+bl).
pub fn tensor_compose(
    p: &Poly,
    rel_p: &Relation,
    a: u32,
    q: &Poly,
    rel_q: &Relation,
    b: u32,
) -> Result<(Poly, Relation)> {
    let (kp, _) = require_power(rel_p)?;
    let (kq, _) = require_power(rel_q)?;
    if a == 0 || b == 0 {
        return Err(Error::Precondition("powers must be positive".into()));
    }
    let k = homogeneous_degree(p)?;
    let l = homogeneous_degree(q)?;
    if k < 2 || l < 2 {
        return Err(Error::Precondition("factors must have degree >= 2".into()));
    }
    let m1 = p.nvars() as i64; // m + 1
    let n1 = q.nvars() as i64; // n + 1
    let ak = a as i64 * k;
    let bl = b as i64 * l;
    if (2 * m1) % ak != 0 || (2 * n1) % bl != 0 {
        return Err(Error::Precondition(format!(
            "divisibility failure: ak = {ak} | {} and bl = {bl} | {} required",
            2 * m1,
            2 * n1
        )));
    }
    if 2 * m1 / ak != 2 * n1 / bl {
        return Err(Error::Precondition(format!(
            "scaling mismatch: 2(m+1)/ak = {} but 2(n+1)/bl = {}",
            2 * m1 / ak,
            2 * n1 / bl
        )));
    }
    let total = (m1 + n1) as usize;
    let pe = p.embed(total, 0).pow(a);
    let qe = q.embed(total, m1 as usize).pow(b);
    let result = pe.mul(&qe)?;
    let kappa = -(kp * kq)
        * rat(a as i64).pow(m1 as i32)
        * rat(b as i64).pow(n1 as i32)
        * Rational::new((ak + bl - 1).into(), ((k - 1) * (l - 1)).into());
    let m2 = (m1 + n1) * (ak + bl - 2) / (ak + bl);
    let predicted = Relation::exact(RelationKind::Power, kappa, m2);
    let certified = recertify(&result, &predicted)?;
    Ok((result, certified))
}

/// x_{n+1} * Q for Q a degree-n solution in n variables with the product
/// relation kappa = (-1)^(n-1)(n-1), m = n-2; the result has
/// kappa' = (-1)^n n, m' = n-1.
pub fn add_variable(q: &Poly, relation: &Relation) -> Result<(Poly, Relation)> {
    let (kappa, m) = require_power(relation)?;
    let n = q.nvars() as i64;
    let k = homogeneous_degree(q)?;
    if k != n || n < 2 {
        return Err(Error::Precondition(
            "input must be a degree-n solution in n variables".into(),
        ));
    }
    let expect_kappa = rat(if n % 2 == 0 { -1 } else { 1 } * (n - 1));
    if kappa != expect_kappa || m != n - 2 {
        return Err(Error::Precondition(format!(
            "input relation (kappa = {kappa}, m = {m}) is not the required (kappa = {expect_kappa}, m = {})",
            n - 2
        )));
    }
    let total = (n + 1) as usize;
    let result = q.embed(total, 0).mul(&Poly::var(total, total - 1))?;
    let kappa2 = rat(if n % 2 == 0 { 1 } else { -1 } * n);
    let predicted = Relation::exact(RelationKind::Power, kappa2, n - 1);
    let certified = recertify(&result, &predicted)?;
    Ok((result, certified))
}

/// Radial graph: Q = x_{n+2}^2 P^l with l = 2(n+1)/k, solving with
/// kappa' = -2 kappa (2n+3) l^(n+1) / (k-1) and exponent n+1.
pub fn radial_graph(p: &Poly, relation: &Relation) -> Result<(Poly, Relation)> {
    let (kappa, _) = require_power(relation)?;
    let k = homogeneous_degree(p)?;
    let n1 = p.nvars() as i64; // n + 1
    if 2 * n1 % k != 0 {
        return Err(Error::Precondition(format!(
            "divisibility failure: k = {k} does not divide 2(n+1) = {}",
            2 * n1
        )));
    }
    let l = 2 * n1 / k;
    let total = (n1 + 1) as usize;
    let result = p
        .embed(total, 0)
        .pow(l as u32)
        .mul(&Poly::var(total, total - 1).pow(2))?;
    let kappa2 = rat(-2) * kappa * rat(2 * n1 + 1) * rat(l).pow(n1 as i32) / rat(k - 1);
    let predicted = Relation::exact(RelationKind::Power, kappa2, n1);
    let certified = recertify(&result, &predicted)?;
    Ok((result, certified))
}

/// Gaussian rationals, used to evaluate complex Hessian determinants at
/// sample points.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(Rational::one(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = &o.re * &o.re + &o.im * &o.im;
        let num = self.mul(&GaussRat::new(o.re.clone(), -o.im.clone()));
        GaussRat::new(num.re / &d, num.im / &d)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussRat::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

fn gauss_det(mut a: Vec<Vec<GaussRat>>) -> GaussRat {
    let n = a.len();
    let mut det = GaussRat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return GaussRat::zero();
        };
        if p != col {
            a.swap(p, col);
            det = GaussRat::zero().sub(&det);
        }
        let pv = a[col][col].clone();
        det = det.mul(&pv);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].div(&pv);
            for j in col..n {
                let s = a[col][j].mul(&f);
                a[r][j] = a[r][j].sub(&s);
            }
        }
    }
    det
}

/// Check the Cauchy-Riemann equations for (re, im) in interleaved variables
/// (x1, y1, x2, y2, ...): d re/d x_i = d im/d y_i, d re/d y_i = -d im/d x_i.
pub fn cauchy_riemann_ok(re_p: &Poly, im_p: &Poly) -> Result<bool> {
    let nv = re_p.nvars();
    if nv % 2 != 0 || im_p.nvars() != nv {
        return Err(Error::ArityMismatch {
            expected: nv,
            got: im_p.nvars(),
        });
    }
    for i in 0..nv / 2 {
        let (x, y) = (2 * i, 2 * i + 1);
        if re_p.diff(x)? != im_p.diff(y)? {
            return Ok(false);
        }
        if re_p.diff(y)? != im_p.diff(x)?.neg() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// |P|^2 = re^2 + im^2 for a holomorphic homogeneous P of degree k >= 2 on
/// C^(n+1), written in interleaved real variables, given its complex
/// relation H_C(P) = kappa_c P^m. The complex precondition is certified by
/// Gaussian-rational evaluation at seeded sample points; the real result is
/// kappa' = (-4)^(n+1) |kappa_c|^2 (1-2k)/(k-1)^2 with exponent n+1+m.
pub fn modulus_square(
    re_p: &Poly,
    im_p: &Poly,
    kappa_c: (Rational, Rational),
    k: u32,
) -> Result<(Poly, Relation)> {
    if k < 2 {
        return Err(Error::Precondition(
            "complex degree must be at least 2 ((k-1)^2 is singular otherwise)".into(),
        ));
    }
    if !cauchy_riemann_ok(re_p, im_p)? {
        return Err(Error::Precondition(
            "Cauchy-Riemann check failed: (re, im) is not holomorphic".into(),
        ));
    }
    let nv = re_p.nvars();
    let n1 = (nv / 2) as i64; // complex dimension n + 1
    let ki = k as i64;
    if (n1 * (ki - 2)) % ki != 0 {
        return Err(Error::Precondition(
            "complex exponent (n+1)(k-2)/k is not an integer".into(),
        ));
    }
    let m = n1 * (ki - 2) / ki;
    let kc = GaussRat::new(kappa_c.0.clone(), kappa_c.1.clone());

    // Complex Hessian entries d^2 P / dz_i dz_j = re_xixj + i im_xixj,
    // evaluated at seeded Gaussian-rational points.
    {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(DEFAULT_SEED);
        let xs: Vec<usize> = (0..n1 as usize).map(|i| 2 * i).collect();
        for _trial in 0..8 {
            let pt: Vec<Rational> = (0..nv).map(|_| rat(rng.gen_range(-50..51))).collect();
            let mut rows = Vec::with_capacity(n1 as usize);
            for &xi in &xs {
                let mut row = Vec::with_capacity(n1 as usize);
                for &xj in &xs {
                    let re = re_p.diff(xi)?.diff(xj)?.eval(&pt)?;
                    let im = im_p.diff(xi)?.diff(xj)?.eval(&pt)?;
                    row.push(GaussRat::new(re, im));
                }
                rows.push(row);
            }
            let det = gauss_det(rows);
            let pval = GaussRat::new(re_p.eval(&pt)?, im_p.eval(&pt)?);
            let rhs = kc.mul(&pval.pow(m as u32));
            if det != rhs {
                return Err(Error::Precondition(format!(
                    "complex relation H_C(P) = kappa_c P^{m} refuted at {pt:?}"
                )));
            }
        }
    }

    let result = re_p.pow(2).add(&im_p.pow(2))?;
    let minus4 = rat(-4).pow(n1 as i32);
    let kappa2 = minus4
        * kc.norm_sq()
        * Rational::new((1 - 2 * ki).into(), ((ki - 1) * (ki - 1)).into());
    let predicted = Relation::exact(RelationKind::Power, kappa2, n1 + m);
    let certified = recertify(&result, &predicted)?;
    Ok((result, certified))
}

/// Q = (x_{n+1} - P)^l for a nondegenerate quadratic form P in n variables
/// and l >= 2 dividing n+2: a nonhomogeneous solution with
/// kappa' = (-1)^n l^(n+1) (l-1) kappa and exponent n+1 - (n+2)/l.
pub fn graph_power(p: &Poly, l: u32) -> Result<(Poly, Relation)> {
    let n = p.nvars() as i64;
    if homogeneous_degree(p)? != 2 {
        return Err(Error::Precondition(
            "input must be a homogeneous quadratic form".into(),
        ));
    }
    let h = hessian_det(p)?;
    let kappa = match h.as_constant() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(Error::Precondition("quadratic form is degenerate".into())),
    };
    if l < 2 {
        return Err(Error::Precondition("power must be at least 2".into()));
    }
    if (n + 2) % l as i64 != 0 {
        return Err(Error::Precondition(format!(
            "divisibility failure: l = {l} does not divide n+2 = {}",
            n + 2
        )));
    }
    let total = (n + 1) as usize;
    let graph = Poly::var(total, total - 1).sub(&p.embed(total, 0))?;
    let result = graph.pow(l);
    let sign = rat(if n % 2 == 0 { 1 } else { -1 });
    let kappa2 = sign * rat(l as i64).pow((n + 1) as i32) * rat(l as i64 - 1) * kappa;
    let m2 = n + 1 - (n + 2) / l as i64;
    let predicted = Relation::exact(RelationKind::Power, kappa2, m2);
    let certified = recertify(&result, &predicted)?;
    Ok((result, certified))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;
    use crate::verify::infer_power_relation;

    fn entry(text: &str) -> (Poly, Relation) {
        let p = parse_poly(text, 0).unwrap();
        let r = infer_power_relation(&p).unwrap().unwrap();
        (p, r)
    }

    #[test]
    fn power_on_census_entries() {
        // (x1 x2 x3)^2: kappa = 2 * 8 * 5/2 = 40, m = 2
        let (p, r) = entry("x1*x2*x3");
        let (sq, rel) = power(&p, &r, 2).unwrap();
        assert_eq!(rel.kappa, rat(40));
        assert_eq!(rel.m, 2);
        assert_eq!(sq, p.pow(2));

        // (x1^2 + x2^2)^2: kappa = 48
        let (p, r) = entry("x1^2 + x2^2");
        let (_, rel) = power(&p, &r, 2).unwrap();
        assert_eq!(rel.kappa, rat(48));
        assert_eq!(rel.m, 1);

        // q = 1 is the identity
        let (p, r) = entry("x1*x2");
        let (q1, rel1) = power(&p, &r, 1).unwrap();
        assert_eq!(q1, p);
        assert!(rel1.same_identity(&r));
    }

    #[test]
    fn power_divisibility_rejected() {
        let (p, r) = entry("x1*x2*x3");
        // qk = 9 does not divide 2(n+1) = 6
        assert!(power(&p, &r, 3).is_err());
    }

    #[test]
    fn power_tower_associativity() {
        // a 4-variable quadric admits q = 2 twice: the tower equals the
        // direct fourth power, constants included
        let (p, r) = entry("x1^2 + x2^2 + x3^2 + x4^2");
        let (sq, r_sq) = power(&p, &r, 2).unwrap();
        let (tower, r_tower) = power(&sq, &r_sq, 2).unwrap();
        let (direct, r_direct) = power(&p, &r, 4).unwrap();
        assert_eq!(tower, direct);
        assert!(r_tower.same_identity(&r_direct));
    }

    #[test]
    fn compose_line_with_lorentz_cube() {
        // x1^2 (kappa 2) times a cube of a Lorentz quadric (kappa 8):
        // kappa'' = -2*8*27*7 = -3024
        let p = parse_poly("x1^2", 0).unwrap();
        let rp = infer_power_relation(&p).unwrap().unwrap();
        assert_eq!(rp.kappa, rat(2));
        let q = parse_poly("x1^2 - x2^2 - x3^2", 0).unwrap();
        let rq = infer_power_relation(&q).unwrap().unwrap();
        assert_eq!(rq.kappa, rat(8));
        let (r, rel) = tensor_compose(&p, &rp, 1, &q, &rq, 3).unwrap();
        assert_eq!(rel.kappa, rat(-3024));
        assert_eq!(rel.m, 3);
        assert_eq!(r.nvars(), 4);
        assert_eq!(r, parse_poly("x1^2*(x2^2 - x3^2 - x4^2)^3", 0).unwrap());
    }

    #[test]
    fn compose_two_products() {
        // x1 x2 (x) x3 x4 -> coordinate product of 4, kappa = -3
        let (p, rp) = entry("x1*x2");
        let (r, rel) = tensor_compose(&p, &rp, 1, &p, &rp, 1).unwrap();
        assert_eq!(rel.kappa, rat(-3));
        assert_eq!(rel.m, 2);
        let direct = crate::catalog::coordinate_product(4).unwrap();
        assert_eq!(direct.expected.kappa, rel.kappa);
        assert_eq!(r, direct.polynomial().unwrap().clone());
    }

    #[test]
    fn compose_two_squares() {
        // x1^2 (x) x2^2: kappa = -12, m = 1
        let p = parse_poly("x1^2", 0).unwrap();
        let rp = infer_power_relation(&p).unwrap().unwrap();
        let (r, rel) = tensor_compose(&p, &rp, 1, &p, &rp, 1).unwrap();
        assert_eq!(rel.kappa, rat(-12));
        assert_eq!(rel.m, 1);
        assert_eq!(r, parse_poly("x1^2*x2^2", 0).unwrap());
    }

    #[test]
    fn compose_mismatch_rejected() {
        let (p, rp) = entry("x1*x2");
        let (q, rq) = entry("x1*x2*x3");
        // b = 2: bl = 6 divides 6 but the scaling ratios are 2 vs 1
        assert!(tensor_compose(&p, &rp, 1, &q, &rq, 2).is_err());
    }

    #[test]
    fn strip_factor_recovers_input_relation() {
        // After composing, re-inferring a factor's relation recovers it.
        let (p, rp) = entry("x1^2 + x2^2");
        let (q, rq) = entry("x1*x2");
        let (r, rel) = tensor_compose(&p, &rp, 1, &q, &rq, 1).unwrap();
        assert_eq!(rel.m, 2);
        assert_eq!(rel.kappa, rat(12));
        let again = infer_power_relation(&p).unwrap().unwrap();
        assert!(again.same_identity(&rp));
        let again = infer_power_relation(&q).unwrap().unwrap();
        assert!(again.same_identity(&rq));
        assert_eq!(r.nvars(), 4);
    }

    #[test]
    fn add_variable_examples() {
        let (q, rq) = entry("x1*x2");
        let (p, rel) = add_variable(&q, &rq).unwrap();
        assert_eq!(p, parse_poly("x1*x2*x3", 0).unwrap());
        assert_eq!(rel.kappa, rat(2));
        assert_eq!(rel.m, 1);

        let (q, rq) = entry("x1*x2*x3");
        let (_, rel) = add_variable(&q, &rq).unwrap();
        assert_eq!(rel.kappa, rat(-3));

        // kappa mismatch rejected: the cone cubic has kappa = -8, not 2
        let (q, rq) = entry("x1*(x2^2 + x3^2)");
        assert!(add_variable(&q, &rq).is_err());
    }

    #[test]
    fn radial_graph_examples() {
        let (p, rp) = entry("x1*x2");
        let (q, rel) = radial_graph(&p, &rp).unwrap();
        assert_eq!(q, parse_poly("x3^2*x1^2*x2^2", 0).unwrap());
        assert_eq!(rel.kappa, rat(40));
        assert_eq!(rel.m, 2);

        let (p, rp) = entry("x1^2 + x2^2");
        let (q, rel) = radial_graph(&p, &rp).unwrap();
        assert_eq!(q, parse_poly("x3^2*(x1^2 + x2^2)^2", 0).unwrap());
        assert_eq!(rel.kappa, rat(-160));

        // kappa = 0 rejected
        let zero_rel = Relation::zero_hessian();
        assert!(radial_graph(&p, &zero_rel).is_err());
    }

    #[test]
    fn modulus_square_triple_product() {
        // P = z1 z2 z3: |P|^2 = (x1^2+y1^2)(x2^2+y2^2)(x3^2+y3^2),
        // kappa = 320, exponent 4; interleaved variables z_i = (x_{2i-1}, x_{2i}).
        let re = parse_poly("x1*x3*x5 - x1*x4*x6 - x2*x3*x6 - x2*x4*x5", 6).unwrap();
        let im = parse_poly("x1*x3*x6 + x1*x4*x5 + x2*x3*x5 - x2*x4*x6", 6).unwrap();
        assert!(cauchy_riemann_ok(&re, &im).unwrap());
        let (sq, rel) = modulus_square(&re, &im, (rat(2), rat(0)), 3).unwrap();
        assert_eq!(rel.kappa, rat(320));
        assert_eq!(rel.m, 4);
        let direct = parse_poly("(x1^2+x2^2)*(x3^2+x4^2)*(x5^2+x6^2)", 0).unwrap();
        assert_eq!(sq, direct);
    }

    #[test]
    fn modulus_square_z_squared() {
        // P = z^2: |P|^2 = (x^2+y^2)^2, kappa = (-4)*4*(-3) = 48, exponent 1
        let re = parse_poly("x1^2 - x2^2", 0).unwrap();
        let im = parse_poly("2*x1*x2", 0).unwrap();
        let (sq, rel) = modulus_square(&re, &im, (rat(2), rat(0)), 2).unwrap();
        assert_eq!(rel.kappa, rat(48));
        assert_eq!(rel.m, 1);
        assert_eq!(sq, parse_poly("(x1^2 + x2^2)^2", 0).unwrap());
    }

    #[test]
    fn modulus_square_rejects_linear() {
        let re = parse_poly("x1", 2).unwrap();
        let im = parse_poly("x2", 2).unwrap();
        assert!(modulus_square(&re, &im, (rat(1), rat(0)), 1).is_err());
    }

    #[test]
    fn graph_power_examples() {
        // (x3 - x1^2 - x2^2)^4: kappa = 4^3 * 3 * 4 = 768, m = 2
        let p = parse_poly("x1^2 + x2^2", 0).unwrap();
        let (q, rel) = graph_power(&p, 4).unwrap();
        assert_eq!(rel.kappa, rat(768));
        assert_eq!(rel.m, 2);
        assert_eq!(q, parse_poly("(x3 - x1^2 - x2^2)^4", 0).unwrap());

        // l = 2 works as well, with exponent n+1 - (n+2)/2 = 1
        let (_, rel) = graph_power(&p, 2).unwrap();
        assert_eq!(rel.m, 1);
        assert_eq!(rel.kappa, rat(8 * 4)); // 2^3 * 1 * 4

        // l = 3 does not divide n+2 = 4
        assert!(graph_power(&p, 3).is_err());
    }
}
