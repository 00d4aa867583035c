//! Named solutions of H(P) = kappa * P^m, each carrying its expected
//! relation and a literature citation, with builders for the parametrized
//! families. Every entry re-verifies its expected relation on demand:
//! exactly for small ambient dimension, probabilistically above it.

use num_traits::Zero;

use crate::hessian::hessian_det;
use crate::poly::{rat, Poly, Rational};
use crate::ratfn::RationalFn;
use crate::text::{parse_poly, parse_rational};
use crate::verify::{
    verify_power_relation_pit, verify_rational_relation, PitOutcome, RationalVerifyOptions,
    Relation, RelationKind,
};
use crate::{Error, Result, DEFAULT_SEED};

/// Ambient-variable threshold for exact symbolic verification; above it the
/// probabilistic path is used.
pub const EXACT_NVARS_LIMIT: usize = 9;

/// Trials used by catalog probabilistic verification.
pub const CATALOG_PIT_TRIALS: u32 = 12;

#[derive(Debug, Clone)]
pub enum CatalogFn {
    Poly(Poly),
    Rational(RationalFn),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub citation: String,
    pub f: CatalogFn,
    pub expected: Relation,
}

impl CatalogEntry {
    fn poly(id: &str, citation: &str, p: Poly, expected: Relation) -> Self {
        CatalogEntry {
            id: id.to_string(),
            citation: citation.to_string(),
            f: CatalogFn::Poly(p),
            expected,
        }
    }

    pub fn polynomial(&self) -> Option<&Poly> {
        match &self.f {
            CatalogFn::Poly(p) => Some(p),
            CatalogFn::Rational(_) => None,
        }
    }

    /// Certify the expected relation: exact symbolic identity when the
    /// ambient dimension allows, seeded probabilistic verification above it.
    pub fn verify(&self) -> Result<Relation> {
        self.verify_seeded(DEFAULT_SEED)
    }

    pub fn verify_seeded(&self, seed: u64) -> Result<Relation> {
        match &self.f {
            CatalogFn::Poly(p) => {
                if p.nvars() <= EXACT_NVARS_LIMIT {
                    match self.expected.kind {
                        RelationKind::Constant => {
                            if hessian_det(p)?.is_zero() {
                                Ok(Relation::zero_hessian())
                            } else {
                                Err(Error::Degenerate(format!(
                                    "{}: Hessian determinant does not vanish",
                                    self.id
                                )))
                            }
                        }
                        RelationKind::Power => {
                            let h = hessian_det(p)?;
                            let rhs = p.pow(self.expected.m as u32).scale(&self.expected.kappa);
                            if h == rhs {
                                Ok(Relation::exact(
                                    RelationKind::Power,
                                    self.expected.kappa.clone(),
                                    self.expected.m,
                                ))
                            } else {
                                Err(Error::Degenerate(format!(
                                    "{}: exact verification failed",
                                    self.id
                                )))
                            }
                        }
                        RelationKind::Exponential => Err(Error::Precondition(format!(
                            "{}: exponential entries are certified by the algebra layer",
                            self.id
                        ))),
                    }
                } else {
                    let out = verify_power_relation_pit(
                        p,
                        &self.expected.kappa,
                        self.expected.m as u32,
                        CATALOG_PIT_TRIALS,
                        seed,
                    )?;
                    match out {
                        PitOutcome::Certified(r) => Ok(r),
                        PitOutcome::Refuted { witness, .. } => Err(Error::Degenerate(format!(
                            "{}: probabilistic verification refuted at {:?}",
                            self.id, witness
                        ))),
                    }
                }
            }
            CatalogFn::Rational(u) => {
                let opts = RationalVerifyOptions {
                    seed,
                    ..RationalVerifyOptions::default()
                };
                let out =
                    verify_rational_relation(u, &self.expected.kappa, self.expected.m as u32, &opts)?;
                match out {
                    PitOutcome::Certified(r) => Ok(r),
                    PitOutcome::Refuted { witness, .. } => Err(Error::Degenerate(format!(
                        "{}: rational verification refuted at {:?}",
                        self.id, witness
                    ))),
                }
            }
        }
    }
}

fn power(kappa: Rational, m: i64) -> Relation {
    Relation::exact(RelationKind::Power, kappa, m)
}

// ---------------------------------------------------------------------------
// pinned constants discovered once by the inference oracle and frozen
// ---------------------------------------------------------------------------

const PINNED_JSON: &str = include_str!("../fixtures/pinned.json");

#[derive(serde::Deserialize)]
struct Pinned {
    hyperdeterminant_223_kappa: String,
    quaternion_hermitian_kappa: String,
}

fn pinned() -> &'static Pinned {
    use std::sync::OnceLock;
    static CELL: OnceLock<Pinned> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(PINNED_JSON).expect("fixtures/pinned.json is valid"))
}

pub fn pinned_hyperdeterminant_223_kappa() -> Rational {
    parse_rational(&pinned().hyperdeterminant_223_kappa).expect("valid pinned rational")
}

pub fn pinned_quaternion_hermitian_kappa() -> Rational {
    parse_rational(&pinned().quaternion_hermitian_kappa).expect("valid pinned rational")
}

/// Inference oracle: sample kappa = H(P)(x) / P(x)^m at `samples` random
/// integer points (skipping zeros of P); all samples must agree.
pub fn pit_infer_kappa(p: &Poly, m: u32, samples: u32, seed: u64) -> Result<Option<Rational>> {
    use num_bigint::BigInt;
    use rand::{RngCore, SeedableRng};
    let hess = crate::hessian::hessian_matrix(p);
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    let mut kappa: Option<Rational> = None;
    let mut done = 0;
    let mut budget = samples * 32;
    while done < samples {
        if budget == 0 {
            return Err(Error::Degenerate("sampling budget exhausted".into()));
        }
        budget -= 1;
        let pt: Vec<Rational> = (0..p.nvars())
            .map(|_| Rational::from_integer(BigInt::from((rng.next_u64() % 2001) as i64 - 1000)))
            .collect();
        let pv = p.eval(&pt)?;
        if pv.is_zero() {
            continue;
        }
        let hv = hess.eval(&pt)?.det();
        let k = hv / pv.pow(m as i32);
        match &kappa {
            None => kappa = Some(k),
            Some(prev) if *prev == k => {}
            Some(_) => return Ok(None),
        }
        done += 1;
    }
    Ok(kappa)
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

/// prod_{i=1..n} x_i with kappa = (-1)^(n-1) (n-1), m = n-2.
pub fn coordinate_product(n: usize) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(Error::Precondition("need at least two factors".into()));
    }
    let mut p = Poly::one(n);
    for i in 0..n {
        p = p.mul(&Poly::var(n, i))?;
    }
    let sign = if n % 2 == 0 { -1 } else { 1 };
    let kappa = rat(sign * (n as i64 - 1));
    Ok(CatalogEntry::poly(
        &format!("coordinate_product_{n}"),
        "product of linearly independent linear forms; level sets are hyperbolic affine spheres asymptotic to orthant boundaries",
        p,
        power(kappa, n as i64 - 2),
    ))
}

pub fn binary_cubic_discriminant_poly() -> Poly {
    parse_poly(
        "x2^2*x3^2 + 18*x1*x2*x3*x4 - 4*x1*x3^3 - 4*x2^3*x4 - 27*x1^2*x4^2",
        0,
    )
    .unwrap()
}

/// Discriminant of the binary cubic form: quartic in four variables,
/// kappa = 2^4 3^5, m = 2.
pub fn binary_cubic_discriminant() -> CatalogEntry {
    CatalogEntry::poly(
        "binary_cubic_discriminant",
        "discriminant of a binary cubic form, relative invariant of GL(2,R) acting on binary cubics (Sato-Kimura entry 4)",
        binary_cubic_discriminant_poly(),
        power(rat(3888), 2),
    )
}

/// The SU(1,1) real form of the binary cubic discriminant: quartic in four
/// variables solving H(P) = 2^8 3^5 P^2.
pub fn su_binary_cubic_discriminant() -> CatalogEntry {
    // P = |z2|^4 + 18 |z1|^2 |z2|^2 - 27 |z1|^4 - 4 (z1 conj(z2)^3 + conj(z1) z2^3)
    // with z1 = x1 + i x2, z2 = x3 + i x4.
    let z1 = ComplexPoly::from_vars(4, 0, 1);
    let z2 = ComplexPoly::from_vars(4, 2, 3);
    let n1 = z1.norm_sq();
    let n2 = z2.norm_sq();
    let cross = z1.mul(&z2.conj().pow(3));
    // z1 conj(z2)^3 + conj of it = 2 Re(z1 conj(z2)^3)
    let p = n2
        .pow(2)
        .add(&n1.mul(&n2).unwrap().scale(&rat(18)))
        .unwrap()
        .sub(&n1.pow(2).scale(&rat(27)))
        .unwrap()
        .sub(&cross.re.scale(&rat(8)))
        .unwrap();
    CatalogEntry::poly(
        "su_binary_cubic_discriminant",
        "binary cubic discriminant restricted to the SU(1,1) real form of the space of complex binary cubics",
        p,
        power(rat(62208), 2), // 2^8 * 3^5
    )
}

pub fn cayley_hyperdeterminant_poly() -> Poly {
    parse_poly(
        "x1^2*x8^2 + x2^2*x7^2 + x3^2*x6^2 + x4^2*x5^2 \
         + 4*(x1*x5*x6*x7 + x2*x3*x4*x8) \
         - 2*(x1*x2*x7*x8 + x1*x3*x6*x8 + x1*x4*x5*x8 + x2*x3*x6*x7 + x2*x4*x5*x7 + x3*x4*x5*x6)",
        0,
    )
    .unwrap()
}

/// Hyperdeterminant of format (2,2,2): 8-variable quartic,
/// kappa = 2^8 * 3, m = 4.
pub fn cayley_hyperdeterminant_222() -> CatalogEntry {
    CatalogEntry::poly(
        "cayley_hyperdeterminant_222",
        "Cayley's hyperdeterminant of format (2,2,2) (Cayley 1845), relative invariant of GL(2)^3",
        cayley_hyperdeterminant_poly(),
        power(rat(768), 4),
    )
}

/// Hyperdeterminant of format (2,2,3): degree-6 polynomial in the 12
/// variables x_{abi}, built from 3x3 minors of the 4x3 matrix whose row
/// index is 2a + b - 2. The exponent m = 8 is forced by degree counting;
/// kappa is a pinned constant found by the inference oracle.
pub fn hyperdeterminant_223() -> CatalogEntry {
    CatalogEntry::poly(
        "hyperdeterminant_223",
        "hyperdeterminant of format (2,2,3), obtained via castling from the 2x2 determinant (Gelfand-Kapranov-Zelevinsky ch. 14)",
        hyperdeterminant_223_poly(),
        power(pinned_hyperdeterminant_223_kappa(), 8),
    )
}

pub fn hyperdeterminant_223_poly() -> Poly {
    // variables x_{abi}: a,b in {1,2}, i in {1,2,3}; flat index rows 2a+b-2
    // (1..4), columns i (1..3); variable index = (row-1)*3 + (col-1).
    let n = 12;
    let entry = |row: usize, col: usize| Poly::var(n, (row - 1) * 3 + (col - 1));
    let minor = |rows: [usize; 3]| -> Poly {
        let mut acc = Poly::zero(n);
        // 3x3 determinant by explicit permutation expansion
        let perms: [([usize; 3], i64); 6] = [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
            ([1, 0, 2], -1),
        ];
        for (perm, sign) in perms {
            let mut t = Poly::constant(n, rat(sign));
            for (r, &c) in perm.iter().enumerate() {
                t = t.mul(&entry(rows[r], c + 1)).unwrap();
            }
            acc = acc.add(&t).unwrap();
        }
        acc
    };
    let x123 = minor([1, 2, 3]);
    let x234 = minor([2, 3, 4]);
    let x124 = minor([1, 2, 4]);
    let x134 = minor([1, 3, 4]);
    x123.mul(&x234)
        .unwrap()
        .sub(&x124.mul(&x134).unwrap())
        .unwrap()
}

/// Which division algebra the Hermitian 3x3 determinant is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermitianKind {
    /// Full 3x3 real matrix determinant: 9 variables, kappa = -2, m = 3.
    Real,
    /// Complex Hermitian: 9 variables, kappa = 128, m = 3.
    Complex,
    /// Quaternion Hermitian: 15 variables, m = 5, kappa pinned.
    Quaternion,
}

/// 3x3 determinant-type cubics over the real, complex, and quaternion
/// coordinate algebras.
pub fn hermitian_det3(kind: HermitianKind) -> CatalogEntry {
    match kind {
        HermitianKind::Real => CatalogEntry::poly(
            "matrix_det3_real",
            "determinant of a full 3x3 real matrix, relative invariant of SL(3)xGL(3) (Sato-Kimura entry 1)",
            parse_poly(
                "x1*x5*x9 - x1*x6*x8 - x2*x4*x9 + x3*x4*x8 + x2*x6*x7 - x3*x5*x7",
                0,
            )
            .unwrap(),
            power(rat(-2), 3),
        ),
        HermitianKind::Complex => CatalogEntry::poly(
            "hermitian_det3_complex",
            "determinant of a 3x3 complex Hermitian matrix (Sato-Kimura entry 1, Hermitian real form)",
            hermitian_det3_complex_poly(),
            power(rat(128), 3),
        ),
        HermitianKind::Quaternion => CatalogEntry::poly(
            "hermitian_det3_quaternion",
            "Moore determinant of a 3x3 quaternion Hermitian matrix (Sato-Kimura entry 3 real form)",
            hermitian_det3_quaternion_poly(),
            power(pinned_quaternion_hermitian_kappa(), 5),
        ),
    }
}

fn hermitian_det3_complex_poly() -> Poly {
    // x1 x2 x3 - x1 |z2|^2 - x2 |z3|^2 - x3 |z1|^2 + conj(z1)(conj(z2) z3) + (conj(z3) z2) z1
    // with z1 = (x4, x5), z2 = (x6, x7), z3 = (x8, x9).
    let n = 9;
    let x1 = Poly::var(n, 0);
    let x2 = Poly::var(n, 1);
    let x3 = Poly::var(n, 2);
    let z1 = ComplexPoly::from_vars(n, 3, 4);
    let z2 = ComplexPoly::from_vars(n, 5, 6);
    let z3 = ComplexPoly::from_vars(n, 7, 8);
    let t1 = z1.conj().mul(&z2.conj().mul(&z3));
    let t2 = z3.conj().mul(&z2).mul(&z1);
    let cross = t1.add(&t2);
    assert!(cross.im.is_zero(), "cross terms must be real");
    x1.mul(&x2)
        .unwrap()
        .mul(&x3)
        .unwrap()
        .sub(&x1.mul(&z2.norm_sq()).unwrap())
        .unwrap()
        .sub(&x2.mul(&z3.norm_sq()).unwrap())
        .unwrap()
        .sub(&x3.mul(&z1.norm_sq()).unwrap())
        .unwrap()
        .add(&cross.re)
        .unwrap()
}

fn hermitian_det3_quaternion_poly() -> Poly {
    let n = 15;
    let x1 = Poly::var(n, 0);
    let x2 = Poly::var(n, 1);
    let x3 = Poly::var(n, 2);
    let z1 = QuatPoly::from_vars(n, 3);
    let z2 = QuatPoly::from_vars(n, 7);
    let z3 = QuatPoly::from_vars(n, 11);
    let t1 = z1.conj().mul(&z2.conj().mul(&z3));
    let t2 = z3.conj().mul(&z2).mul(&z1);
    let cross = t1.add(&t2);
    assert!(
        cross.b.is_zero() && cross.c.is_zero() && cross.d.is_zero(),
        "cross terms must be real"
    );
    x1.mul(&x2)
        .unwrap()
        .mul(&x3)
        .unwrap()
        .sub(&x1.mul(&z2.norm_sq()).unwrap())
        .unwrap()
        .sub(&x2.mul(&z3.norm_sq()).unwrap())
        .unwrap()
        .sub(&x3.mul(&z1.norm_sq()).unwrap())
        .unwrap()
        .add(&cross.a)
        .unwrap()
}

/// Pfaffian of a 6x6 skew matrix (15 vars) plus the bilinear term u^t X v
/// (12 more): the 27-variable invariant cubic of the split E6 action,
/// kappa = 2, m = 9.
pub fn e6_split_cubic() -> CatalogEntry {
    CatalogEntry::poly(
        "e6_split_cubic",
        "invariant cubic of split E6 on the 27-dimensional space of 3x3 Hermitian matrices over split octonions",
        e6_split_cubic_poly(),
        power(rat(2), 9),
    )
}

/// Variable layout: x_{ij} (i<j, lexicographic) occupy indices 0..15,
/// u_1..u_6 indices 15..21, v_1..v_6 indices 21..27.
pub fn e6_split_cubic_poly() -> Poly {
    let n = 27;
    let mut pair_index = std::collections::BTreeMap::new();
    let mut idx = 0;
    for i in 0..6 {
        for j in i + 1..6 {
            pair_index.insert((i, j), idx);
            idx += 1;
        }
    }
    let x_entry = |i: usize, j: usize| -> Poly {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => Poly::var(n, pair_index[&(i, j)]),
            Greater => Poly::var(n, pair_index[&(j, i)]).neg(),
            Equal => Poly::zero(n),
        }
    };
    let pf = pfaffian_skew(&(0..6).collect::<Vec<_>>(), &x_entry, n);
    let mut bilinear = Poly::zero(n);
    for i in 0..6 {
        for j in 0..6 {
            if i == j {
                continue;
            }
            let u = Poly::var(n, 15 + i);
            let v = Poly::var(n, 21 + j);
            bilinear = bilinear
                .add(&u.mul(&x_entry(i, j)).unwrap().mul(&v).unwrap())
                .unwrap();
        }
    }
    pf.add(&bilinear).unwrap()
}

/// Pfaffian by recursive expansion along the first remaining index.
pub fn pfaffian_skew(indices: &[usize], entry: &dyn Fn(usize, usize) -> Poly, nvars: usize) -> Poly {
    if indices.is_empty() {
        return Poly::one(nvars);
    }
    let a = indices[0];
    let mut acc = Poly::zero(nvars);
    for t in 1..indices.len() {
        let b = indices[t];
        let mut rest: Vec<usize> = Vec::with_capacity(indices.len() - 2);
        rest.extend(indices[1..t].iter().copied());
        rest.extend(indices[t + 1..].iter().copied());
        let sub = pfaffian_skew(&rest, entry, nvars);
        let sign = if t % 2 == 1 { 1 } else { -1 };
        acc = acc
            .add(&entry(a, b).mul(&sub).unwrap().scale(&rat(sign)))
            .unwrap();
    }
    acc
}

/// The pencil member P_{a,b} = (a/6)(x1^3 + x2^3 + x3^3) + b x1 x2 x3.
pub fn syzygetic_poly(a: &Rational, b: &Rational) -> Poly {
    let cubes = parse_poly("x1^3 + x2^3 + x3^3", 0)
        .unwrap()
        .scale(&(a / rat(6)));
    cubes
        .add(&parse_poly("x1*x2*x3", 0).unwrap().scale(b))
        .unwrap()
}

/// Result of probing the cubic pencil: the Hessian determinant lands back in
/// the pencil at parameters (-6 a b^2, a^3 + 2 b^3); a power relation exists
/// exactly when those parameters are proportional to (a, b).
pub struct SyzygeticOutcome {
    pub poly: Poly,
    pub image_params: (Rational, Rational),
    pub relation: Option<Relation>,
}

pub fn syzygetic(a: &Rational, b: &Rational) -> Result<SyzygeticOutcome> {
    let p = syzygetic_poly(a, b);
    if p.is_zero() {
        return Err(Error::Precondition("zero member of the pencil".into()));
    }
    let a2 = -(a * b * b).clone() * rat(6);
    let b2 = a.pow(3) + rat(2) * b.pow(3);
    let image = syzygetic_poly(&a2, &b2);
    let h = hessian_det(&p)?;
    if h != image {
        return Err(Error::Degenerate(
            "pencil image identity failed symbolically".into(),
        ));
    }
    // proportionality: (a2, b2) = kappa (a, b)
    let relation = {
        let kappa = if !a.is_zero() {
            let k = &a2 / a;
            if &b2 == &(&k * b) {
                Some(k)
            } else {
                None
            }
        } else if !b.is_zero() {
            let k = &b2 / b;
            if a2.is_zero() {
                Some(k)
            } else {
                None
            }
        } else {
            None
        };
        kappa.map(|k| Relation::exact(RelationKind::Power, k, 1))
    };
    Ok(SyzygeticOutcome {
        poly: p,
        image_params: (a2, b2),
        relation,
    })
}

/// The primal and dual rational solutions attached to the 5-dimensional
/// non-self-dual homogeneous convex cone:
/// u = (det x)^4 / (x1 x3) with H(u) = 3^4 2^8 u^4 and
/// v = ((x1 x5 - x2^2)(x3 x5 - x4^2))^3 / x5^2 with H(v) = 2^4 3^6 v^4.
pub fn vinberg_cone_pair() -> Result<(CatalogEntry, CatalogEntry)> {
    let detx = parse_poly("x1*x3*x5 - x1*x4^2 - x2^2*x3", 0).unwrap();
    let u = RationalFn::new(detx.pow(4), parse_poly("x1*x3", 5).unwrap())?;
    let primal = CatalogEntry {
        id: "vinberg_cone_primal".into(),
        citation: "characteristic function power of Vinberg's 5-dimensional non-self-dual homogeneous cone".into(),
        f: CatalogFn::Rational(u),
        expected: power(rat(20736), 4), // 3^4 2^8
    };
    let ab = parse_poly("(x1*x5 - x2^2)*(x3*x5 - x4^2)", 0).unwrap();
    let v = RationalFn::new(ab.pow(3), parse_poly("x5^2", 5).unwrap())?;
    let dual = CatalogEntry {
        id: "vinberg_cone_dual".into(),
        citation: "characteristic function power of the dual of Vinberg's cone".into(),
        f: CatalogFn::Rational(v),
        expected: power(rat(11664), 4), // 2^4 3^6
    };
    Ok((primal, dual))
}

/// R_{p,q}: the product of p definite and q split plane quadrics in
/// 2(p+q) variables. Iterating the two-factor composition rule
/// kappa' = -kappa_1 kappa_2 (2j+1)/(2j-1) over the factors gives
/// kappa = (-1)^(p-1) (2p + 2q - 1) 2^(2p+2q), m = 2p + 2q - 2.
pub fn rpq(p: usize, q: usize) -> Result<CatalogEntry> {
    if p + q == 0 {
        return Err(Error::Precondition("need at least one factor".into()));
    }
    let n = 2 * (p + q);
    let mut f = Poly::one(n);
    for i in 0..p {
        let a = Poly::var(n, 2 * i).pow(2);
        let b = Poly::var(n, 2 * i + 1).pow(2);
        f = f.mul(&a.add(&b)?)?;
    }
    for j in 0..q {
        let a = Poly::var(n, 2 * p + 2 * j).pow(2);
        let b = Poly::var(n, 2 * p + 2 * j + 1).pow(2);
        f = f.mul(&a.sub(&b)?)?;
    }
    let sign = if p % 2 == 1 { 1 } else { -1 };
    let kappa = rat(sign * (2 * (p + q) as i64 - 1)) * rat(2).pow((2 * (p + q)) as i32);
    Ok(CatalogEntry::poly(
        &format!("rpq_{p}_{q}"),
        "flat affine spheres of Magid-Ryan type, products of definite and split plane quadrics (Vrancken)",
        f,
        power(kappa, 2 * (p + q) as i64 - 2),
    ))
}

/// The small-parameter census: the eight families with n+1 <= 3, both signs
/// where a sign parameter appears.
pub fn small_census() -> Vec<CatalogEntry> {
    let census_citation = "census of low-dimensional solutions: quadrics, products of forms, and their squares";
    let mk = |id: &str, text: &str, kappa: i64, m: i64| {
        CatalogEntry::poly(id, census_citation, parse_poly(text, 0).unwrap(), power(rat(kappa), m))
    };
    vec![
        mk("definite_quadric_pos", "x1^2 + x2^2", 4, 0),
        // H(-F) = (-1)^2 H(F) in two variables, so kappa stays +4 here: for
        // m = 0 the sign of the quadric does not propagate to kappa even
        // though the two quadrics are affinely inequivalent.
        mk("definite_quadric_neg", "-x1^2 - x2^2", 4, 0),
        mk("hyperbolic_quadric", "x1*x2", -1, 0),
        mk("double_product_pos", "x1^2*x2^2", -12, 1),
        mk("double_product_neg", "-x1^2*x2^2", 12, 1),
        mk("double_quadric_pos", "(x1^2 + x2^2)^2", 48, 1),
        mk("double_quadric_neg", "-(x1^2 + x2^2)^2", -48, 1),
        mk("coordinate_product_3", "x1*x2*x3", 2, 1),
        mk("cone_cubic", "x1*(x2^2 + x3^2)", -8, 1),
        mk("triple_square_product", "x1^2*x2^2*x3^2", 40, 2),
        mk("cone_cubic_squared", "x1^2*(x2^2 + x3^2)^2", -160, 2),
    ]
}

/// Further explicit solutions: locally homogeneous non-sphere families,
/// composition products, paraboloid-graph powers, and the vanishing-Hessian
/// cubic.
pub fn misc_examples() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let dv = "Dillen-Vrancken locally homogeneous hypersurfaces in R^4";
    out.push(CatalogEntry::poly(
        "dv_paraboloid_tube",
        dv,
        parse_poly("x4^2*(2*x1 - x2^2 - x3^2)^4", 0).unwrap(),
        power(rat(-10240), 3), // -2^11 * 5
    ));
    out.push(CatalogEntry::poly(
        "dv_double_graph",
        dv,
        parse_poly("(2*x1 - x2^2)^3*(2*x3 - x4^2)^3", 0).unwrap(),
        power(rat(-25920), 3), // -2^6 3^4 5
    ));
    out.push(CatalogEntry::poly(
        "dv_graph_product",
        dv,
        parse_poly("(2*x1 - x2^2)^3*x3^2*x4^2", 0).unwrap(),
        power(rat(-1728), 3), // -2^6 3^3
    ));
    out.push(CatalogEntry::poly(
        "equiaffine_non_sphere",
        "equiaffinely homogeneous level sets that are not affine spheres (Nomizu-Sasaki ch. 3)",
        parse_poly("x1^2*(x3 - x2^2)^3", 0).unwrap(),
        power(rat(144), 2),
    ));
    out.push(CatalogEntry::poly(
        "lorentz_composition",
        "composition of a line with the cube of a Lorentz quadric (Dillen-Vrancken)",
        parse_poly("x1^2*(x2^2 - x3^2 - x4^2)^3", 0).unwrap(),
        power(rat(-3024), 3),
    ));
    out.push(rpq(1, 1).unwrap());
    out.push(CatalogEntry::poly(
        "paraboloid_graph_power_4",
        "fourth power of a paraboloid graph: a nonhomogeneous solution whose levels are improper affine spheres",
        parse_poly("(x3 - x1^2 - x2^2)^4", 0).unwrap(),
        power(rat(768), 2),
    ));
    out.push(CatalogEntry::poly(
        "gordan_noether",
        "Gordan-Noether cubic in five variables with identically vanishing Hessian determinant",
        parse_poly("x1^2*x3 + x1*x2*x4 + x2^2*x5", 0).unwrap(),
        Relation::zero_hessian(),
    ));
    out
}

/// Every named polynomial entry (the fixed instances of the parametrized
/// builders plus the censuses). Rational entries are listed separately by
/// [`vinberg_cone_pair`] and appended here.
pub fn all_entries() -> Vec<CatalogEntry> {
    let mut v = small_census();
    v.push(coordinate_product(4).unwrap());
    v.push(coordinate_product(5).unwrap());
    v.push(binary_cubic_discriminant());
    v.push(su_binary_cubic_discriminant());
    v.push(cayley_hyperdeterminant_222());
    v.push(hyperdeterminant_223());
    v.push(hermitian_det3(HermitianKind::Real));
    v.push(hermitian_det3(HermitianKind::Complex));
    v.push(hermitian_det3(HermitianKind::Quaternion));
    v.push(e6_split_cubic());
    let syz = syzygetic(&rat(6), &rat(-3)).unwrap();
    v.push(CatalogEntry::poly(
        "syzygetic_6_neg3",
        "singular member of the syzygetic pencil of ternary cubics (Artebani-Dolgachev)",
        syz.poly,
        syz.relation.unwrap(),
    ));
    v.extend(misc_examples());
    let (a, b) = vinberg_cone_pair().unwrap();
    v.push(a);
    v.push(b);
    v
}

pub fn find(id: &str) -> Option<CatalogEntry> {
    all_entries().into_iter().find(|e| e.id == id)
}

// ---------------------------------------------------------------------------
// coordinate algebras used to expand Hermitian determinants into real
// variables
// ---------------------------------------------------------------------------

#[derive(Clone)]
pub struct ComplexPoly {
    pub re: Poly,
    pub im: Poly,
}

impl ComplexPoly {
    pub fn from_vars(nvars: usize, re: usize, im: usize) -> Self {
        ComplexPoly {
            re: Poly::var(nvars, re),
            im: Poly::var(nvars, im),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexPoly {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexPoly {
            re: self.re.add(&o.re).unwrap(),
            im: self.im.add(&o.im).unwrap(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexPoly {
            re: self
                .re
                .mul(&o.re)
                .unwrap()
                .sub(&self.im.mul(&o.im).unwrap())
                .unwrap(),
            im: self
                .re
                .mul(&o.im)
                .unwrap()
                .add(&self.im.mul(&o.re).unwrap())
                .unwrap(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ComplexPoly {
            re: Poly::one(self.re.nvars()),
            im: Poly::zero(self.re.nvars()),
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn norm_sq(&self) -> Poly {
        self.re
            .pow(2)
            .add(&self.im.pow(2))
            .unwrap()
    }
}

#[derive(Clone)]
pub struct QuatPoly {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
}

impl QuatPoly {
    pub fn from_vars(nvars: usize, start: usize) -> Self {
        QuatPoly {
            a: Poly::var(nvars, start),
            b: Poly::var(nvars, start + 1),
            c: Poly::var(nvars, start + 2),
            d: Poly::var(nvars, start + 3),
        }
    }

    pub fn conj(&self) -> Self {
        QuatPoly {
            a: self.a.clone(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        QuatPoly {
            a: self.a.add(&o.a).unwrap(),
            b: self.b.add(&o.b).unwrap(),
            c: self.c.add(&o.c).unwrap(),
            d: self.d.add(&o.d).unwrap(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = |x: &Poly, y: &Poly| x.mul(y).unwrap();
        QuatPoly {
            a: m(&self.a, &o.a)
                .sub(&m(&self.b, &o.b))
                .unwrap()
                .sub(&m(&self.c, &o.c))
                .unwrap()
                .sub(&m(&self.d, &o.d))
                .unwrap(),
            b: m(&self.a, &o.b)
                .add(&m(&self.b, &o.a))
                .unwrap()
                .add(&m(&self.c, &o.d))
                .unwrap()
                .sub(&m(&self.d, &o.c))
                .unwrap(),
            c: m(&self.a, &o.c)
                .sub(&m(&self.b, &o.d))
                .unwrap()
                .add(&m(&self.c, &o.a))
                .unwrap()
                .add(&m(&self.d, &o.b))
                .unwrap(),
            d: m(&self.a, &o.d)
                .add(&m(&self.b, &o.c))
                .unwrap()
                .sub(&m(&self.c, &o.b))
                .unwrap()
                .add(&m(&self.d, &o.a))
                .unwrap(),
        }
    }

    pub fn norm_sq(&self) -> Poly {
        self.a
            .pow(2)
            .add(&self.b.pow(2))
            .unwrap()
            .add(&self.c.pow(2))
            .unwrap()
            .add(&self.d.pow(2))
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Homogeneity;

    #[test]
    fn coordinate_product_small() {
        for (n, kappa, m) in [(2usize, -1i64, 0i64), (3, 2, 1), (5, 4, 3)] {
            let e = coordinate_product(n).unwrap();
            assert_eq!(e.expected.kappa, rat(kappa));
            assert_eq!(e.expected.m, m);
            e.verify().unwrap();
        }
        assert!(coordinate_product(1).is_err());
    }

    #[test]
    fn binary_cubic_discriminant_checks() {
        let e = binary_cubic_discriminant();
        e.verify().unwrap();
        let p = e.polynomial().unwrap();
        // monomial scan: the x2^3 x4-free slice vanishes at (0,1,0,0)
        let v = p
            .eval(&[rat(0), rat(1), rat(0), rat(0)])
            .unwrap();
        assert!(v.is_zero());
        // affine image re-verifies
        let lin = vec![
            vec![rat(1), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(2), rat(1)],
        ];
        let shift = vec![rat(0); 4];
        let img = p.substitute_affine(&lin, &shift).unwrap();
        let r = crate::verify::infer_power_relation(&img).unwrap().unwrap();
        assert_eq!(r.kappa, rat(3888));
        assert_eq!(r.m, 2);
    }

    #[test]
    fn cayley_hyperdeterminant_checks() {
        let e = cayley_hyperdeterminant_222();
        e.verify().unwrap();
        let p = e.polynomial().unwrap();
        // identity tensor slice evaluates to 1
        let mut pt = vec![rat(0); 8];
        pt[0] = rat(1);
        pt[7] = rat(1);
        assert_eq!(p.eval(&pt).unwrap(), rat(1));
        // monomial parity: the quartic has multidegree 2 in each tensor slot,
        // so negating the four variables with first-slot index u (x1, x2, x3,
        // x5) leaves it invariant.
        let mut lin = vec![vec![rat(0); 8]; 8];
        for i in 0..8 {
            lin[i][i] = if [0usize, 1, 2, 4].contains(&i) {
                rat(-1)
            } else {
                rat(1)
            };
        }
        let img = p.substitute_affine(&lin, &vec![rat(0); 8]).unwrap();
        assert_eq!(&img, p);
    }

    #[test]
    fn hyperdeterminant_223_shape() {
        let p = hyperdeterminant_223_poly();
        assert_eq!(p.nvars(), 12);
        assert_eq!(p.homogeneity(), Homogeneity::Homogeneous(6));
        // m forced by degree counting: 12 * (6 - 2) / 6
        assert_eq!(hyperdeterminant_223().expected.m, 8);
    }

    #[test]
    fn pfaffian_of_symplectic_form_is_one() {
        let n = 15;
        let entry = |i: usize, j: usize| -> Poly {
            // block-diagonal J: pairs (0,1), (2,3), (4,5)
            if j == i + 1 && i % 2 == 0 {
                Poly::one(n)
            } else if i == j + 1 && j % 2 == 0 {
                Poly::one(n).neg()
            } else {
                Poly::zero(n)
            }
        };
        let pf = pfaffian_skew(&(0..6).collect::<Vec<_>>(), &entry, n);
        assert_eq!(pf, Poly::one(n));
    }

    #[test]
    fn e6_cubic_shape() {
        let p = e6_split_cubic_poly();
        assert_eq!(p.nvars(), 27);
        assert_eq!(p.homogeneity(), Homogeneity::Homogeneous(3));
    }

    #[test]
    fn syzygetic_pencil() {
        // (6, -3): kappa = -54, m = 1
        let out = syzygetic(&rat(6), &rat(-3)).unwrap();
        let r = out.relation.unwrap();
        assert_eq!(r.kappa, rat(-54));
        assert_eq!(r.m, 1);
        // (0, 1): kappa = 2
        let out = syzygetic(&rat(0), &rat(1)).unwrap();
        assert_eq!(out.relation.unwrap().kappa, rat(2));
        // (1, 1): image is the (-6, 3) member, no power relation
        let out = syzygetic(&rat(1), &rat(1)).unwrap();
        assert!(out.relation.is_none());
        assert_eq!(out.image_params, (rat(-6), rat(3)));
    }

    #[test]
    fn vinberg_pair_shapes() {
        let (u, v) = vinberg_cone_pair().unwrap();
        let (CatalogFn::Rational(uf), CatalogFn::Rational(vf)) = (&u.f, &v.f) else {
            panic!("expected rational entries");
        };
        // u is homogeneous of degree 12 - 2 = 10
        assert_eq!(uf.num().total_degree(), 12);
        assert_eq!(uf.den().total_degree(), 2);
        // denominators do not vanish at (1,0,1,0,1)
        let pt = vec![rat(1), rat(0), rat(1), rat(0), rat(1)];
        assert!(!uf.den().eval(&pt).unwrap().is_zero());
        assert!(!vf.den().eval(&pt).unwrap().is_zero());
    }

    #[test]
    fn small_census_verifies() {
        for e in small_census() {
            e.verify().unwrap_or_else(|err| panic!("{}: {err}", e.id));
        }
    }

    #[test]
    fn catalog_lookup() {
        assert!(find("coordinate_product_3").is_some());
        assert!(find("nope").is_none());
    }
}


#[cfg(test)]
mod invariant_tests {
    use super::*;
    use crate::hessian::u_of_f;
    use crate::poly::Homogeneity;

    // Every entry certifies its expected relation; polynomial entries of
    // small ambient dimension with a nonzero constant additionally have H
    // and U constant along their level sets, and the homogeneous ones
    // satisfy the Euler identity, the U-identity (k-1) U = k F H, and the
    // Euler scaling of H.
    #[test]
    fn all_entries_verify_and_satisfy_homogeneous_identities() {
        use crate::verify::{check_level_constancy, LevelFn};
        for e in all_entries() {
            e.verify().unwrap_or_else(|err| panic!("{}: {err}", e.id));
            let CatalogFn::Poly(p) = &e.f else { continue };
            if p.nvars() <= 5 && !e.expected.kappa.is_zero() {
                let h = hessian_det(p).unwrap();
                let u = u_of_f(p);
                assert!(
                    check_level_constancy(LevelFn::Poly(&h), p).unwrap(),
                    "{}: H not level-constant",
                    e.id
                );
                assert!(
                    check_level_constancy(LevelFn::Poly(&u), p).unwrap(),
                    "{}: U not level-constant",
                    e.id
                );
            }
            if let Homogeneity::Homogeneous(k) = p.homogeneity() {
                assert_eq!(p.euler_operator(), p.scale(&rat(k as i64)), "{}", e.id);
                if p.nvars() <= 4 {
                    let h = hessian_det(p).unwrap();
                    let u = u_of_f(p);
                    assert_eq!(
                        u.scale(&rat(k as i64 - 1)),
                        p.mul(&h).unwrap().scale(&rat(k as i64)),
                        "{}: U identity",
                        e.id
                    );
                    let n1 = p.nvars() as i64;
                    assert_eq!(
                        h.euler_operator(),
                        h.scale(&rat(n1 * (k as i64 - 2))),
                        "{}: H scaling",
                        e.id
                    );
                }
            }
        }
    }
}
