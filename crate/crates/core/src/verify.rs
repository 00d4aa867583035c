//! Detection and certification of Hessian-determinant relations:
//! `H(P) = kappa * P^m`, the exponential variant `H(exp(P)) = kappa *
//! exp((n+1) P)` for translationally homogeneous exponentials, rational
//! analogues, and level-constancy wedge tests. Certificates are exact
//! (symbolic identity) or probabilistic (seeded random evaluation with a
//! Schwartz-Zippel failure bound); the mode is always recorded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde_json::json;

use crate::hessian::{graph_det, hessian_det, hessian_matrix, PolyMatrix};
use crate::poly::{rat, Homogeneity, Poly, Rational};
use crate::ratfn::RationalFn;
use crate::text::print_rational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// H(P) = kappa * P^m (m = 0 covers constant nonzero Hessians).
    Power,
    /// H(exp(P)) = kappa * exp(m * P) with m the ambient variable count.
    Exponential,
    /// H(P) vanishes identically (kappa = 0 certificate).
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    ExactSymbolic,
    Probabilistic,
}

/// A verified identity together with its evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub kind: RelationKind,
    pub kappa: Rational,
    /// Exponent. For `root > 1` the certified identity is
    /// `H(P) = kappa * B^m` where `B^root = P`: the relation holds outside
    /// the integer exponent family and is flagged by `root`.
    pub m: i64,
    pub root: u32,
    pub mode: VerifyMode,
    pub trials: u32,
    pub seed: Option<u64>,
    pub degree_bound: u64,
}

impl Relation {
    pub fn exact(kind: RelationKind, kappa: Rational, m: i64) -> Self {
        Relation {
            kind,
            kappa,
            m,
            root: 1,
            mode: VerifyMode::ExactSymbolic,
            trials: 0,
            seed: None,
            degree_bound: 0,
        }
    }

    pub fn zero_hessian() -> Self {
        Relation::exact(RelationKind::Constant, Rational::zero(), 0)
    }

    /// Same mathematical identity, ignoring the evidence fields.
    pub fn same_identity(&self, other: &Relation) -> bool {
        self.kind == other.kind
            && self.kappa == other.kappa
            && self.m == other.m
            && self.root == other.root
    }

    pub fn outside_integer_family(&self) -> bool {
        self.root > 1
    }

    /// Upper bound on the probability that all probabilistic trials passed
    /// on a false identity (Schwartz-Zippel, coordinates uniform over 2^64
    /// integers).
    pub fn failure_probability_bound(&self) -> f64 {
        if self.mode == VerifyMode::ExactSymbolic {
            return 0.0;
        }
        let per_trial = self.degree_bound as f64 / 2f64.powi(64);
        per_trial.powi(self.trials as i32)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        let kind = match self.kind {
            RelationKind::Power => "power",
            RelationKind::Exponential => "exponential",
            RelationKind::Constant => "constant",
        };
        obj.insert("kind".into(), json!(kind));
        obj.insert("kappa".into(), json!(print_rational(&self.kappa)));
        obj.insert("m".into(), json!(self.m));
        if self.root > 1 {
            obj.insert("root".into(), json!(self.root));
            obj.insert("outside_integer_family".into(), json!(true));
        }
        let mode = match self.mode {
            VerifyMode::ExactSymbolic => "exact-symbolic",
            VerifyMode::Probabilistic => "probabilistic",
        };
        obj.insert("mode".into(), json!(mode));
        obj.insert("trials".into(), json!(self.trials));
        if let Some(seed) = self.seed {
            obj.insert("seed".into(), json!(seed));
        }
        obj.insert("degree_bound".into(), json!(self.degree_bound));
        if self.mode == VerifyMode::Probabilistic {
            obj.insert(
                "failure_probability_bound".into(),
                json!(self.failure_probability_bound()),
            );
        }
        serde_json::Value::Object(obj)
    }
}

/// Outcome of a probabilistic verification.
#[derive(Debug, Clone)]
pub enum PitOutcome {
    Certified(Relation),
    Refuted {
        witness: Vec<i64>,
        lhs: Rational,
        rhs: Rational,
    },
}

impl PitOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            PitOutcome::Certified(r) => r.to_json(),
            PitOutcome::Refuted { witness, lhs, rhs } => json!({
                "kind": "refutation",
                "witness": witness,
                "lhs": print_rational(lhs),
                "rhs": print_rational(rhs),
            }),
        }
    }

    pub fn certified(&self) -> Option<&Relation> {
        match self {
            PitOutcome::Certified(r) => Some(r),
            PitOutcome::Refuted { .. } => None,
        }
    }
}

/// Whether (m, n+1, k) lies in the integer exponent family k*m = (n+1)*(k-2).
pub fn exponent_family_ok(nvars: usize, degree: u32, m: i64) -> bool {
    (degree as i64) * m == (nvars as i64) * (degree as i64 - 2)
}

/// Find and certify a relation H(P) = kappa * P^m by exact symbolic division.
///
/// For a homogeneous P the exponent is forced by degree counting; when the
/// forced exponent is fractional m/q and P is a perfect q-th power B^q, the
/// relation H(P) = kappa * B^m is certified and flagged (`root = q`). For
/// inhomogeneous P the exponent is found by trial division downward from
/// deg H / deg P. `None` means no relation of this shape holds.
pub fn infer_power_relation(p: &Poly) -> Result<Option<Relation>> {
    if p.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    let h = hessian_det(p)?;
    if h.is_zero() {
        return Ok(Some(Relation::zero_hessian()));
    }
    let n1 = p.nvars() as i64;
    match p.homogeneity() {
        Homogeneity::Homogeneous(k) => {
            let k = k as i64;
            let num = n1 * (k - 2);
            if num % k == 0 {
                let m = num / k;
                if m < 0 {
                    return Ok(None);
                }
                if let Some(q) = h.divide_exact(&p.pow(m as u32))? {
                    if let Some(c) = q.as_constant() {
                        return Ok(Some(Relation::exact(RelationKind::Power, c, m)));
                    }
                }
                Ok(None)
            } else {
                // Fractional forced exponent m/q in lowest terms: certify
                // against the q-th root when P is a perfect power.
                let g = num.gcd(&k);
                let (m, q) = (num / g, k / g);
                if m < 0 || q <= 1 {
                    return Ok(None);
                }
                let Some(base) = p.nth_root(q as u32) else {
                    return Ok(None);
                };
                if let Some(quot) = h.divide_exact(&base.pow(m as u32))? {
                    if let Some(c) = quot.as_constant() {
                        let mut r = Relation::exact(RelationKind::Power, c, m);
                        r.root = q as u32;
                        return Ok(Some(r));
                    }
                }
                Ok(None)
            }
        }
        Homogeneity::Inhomogeneous => {
            let dh = h.total_degree() as i64;
            let dp = p.total_degree() as i64;
            if dp == 0 {
                return Ok(None);
            }
            let mut m = dh / dp;
            while m >= 0 {
                if let Some(q) = h.divide_exact(&p.pow(m as u32))? {
                    if let Some(c) = q.as_constant() {
                        return Ok(Some(Relation::exact(RelationKind::Power, c, m)));
                    }
                }
                m -= 1;
            }
            Ok(None)
        }
        Homogeneity::Zero => unreachable!("p is nonzero"),
    }
}

/// Exact symbolic check that H(P) = kappa * P^m.
pub fn power_relation_holds(p: &Poly, kappa: &Rational, m: u32) -> Result<bool> {
    let h = hessian_det(p)?;
    Ok(h == p.pow(m).scale(kappa))
}

fn random_point(rng: &mut ChaCha20Rng, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.next_u64() as i64).collect()
}

fn to_rationals(pt: &[i64]) -> Vec<Rational> {
    pt.iter()
        .map(|&x| Rational::from_integer(BigInt::from(x)))
        .collect()
}

/// Run `f` over the indexed items on up to `effective_threads()` workers,
/// returning results in input order regardless of scheduling.
fn parallel_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let threads = crate::effective_threads().min(items.len().max(1));
    if threads <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let mut out: Vec<Option<U>> = Vec::new();
    out.resize_with(items.len(), || None);
    let slots: Vec<(usize, &T)> = items.iter().enumerate().collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for piece in slots.chunks(chunk) {
            let f = &f;
            handles.push(scope.spawn(move || {
                piece
                    .iter()
                    .map(|(i, t)| (*i, f(t)))
                    .collect::<Vec<(usize, U)>>()
            }));
        }
        for h in handles {
            for (i, u) in h.join().expect("worker panicked") {
                out[i] = Some(u);
            }
        }
    });
    out.into_iter().map(|u| u.unwrap()).collect()
}

/// Probabilistic verification of H(P) = kappa * P^m at `trials` points with
/// coordinates uniform over the 2^64 integers in [-2^63, 2^63), evaluated in
/// exact rational arithmetic. All-zero differences certify with failure
/// probability at most (degree_bound / 2^64)^trials; any nonzero difference
/// refutes with the witness point.
pub fn verify_power_relation_pit(
    p: &Poly,
    kappa: &Rational,
    m: u32,
    trials: u32,
    seed: u64,
) -> Result<PitOutcome> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    let hess = hessian_matrix(p);
    let n = p.nvars();
    let hess_deg: u64 = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| hess.at(i, j).total_degree() as u64)
                .max()
                .unwrap_or(0)
        })
        .sum();
    let degree_bound = hess_deg.max(p.total_degree() as u64 * m as u64);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let points: Vec<Vec<i64>> = (0..trials).map(|_| random_point(&mut rng, n)).collect();
    let results = parallel_map(points.clone(), |pt| -> Result<Option<(Rational, Rational)>> {
        let q = to_rationals(pt);
        let lhs = hess.eval(&q)?.det();
        let rhs = p.eval(&q)?.pow(m as i32) * kappa;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some((lhs, rhs)))
        }
    });
    for (i, r) in results.into_iter().enumerate() {
        if let Some((lhs, rhs)) = r? {
            return Ok(PitOutcome::Refuted {
                witness: points[i].clone(),
                lhs,
                rhs,
            });
        }
    }
    Ok(PitOutcome::Certified(Relation {
        kind: RelationKind::Power,
        kappa: kappa.clone(),
        m: m as i64,
        root: 1,
        mode: VerifyMode::Probabilistic,
        trials,
        seed: Some(seed),
        degree_bound,
    }))
}

/// Certify H(exp(P)) = kappa * exp((n+1) P) for P with P(x + t v) = P(x) + a t.
///
/// The precondition (directional derivative along `direction` is a nonzero
/// constant, equivalently the Hessian annihilates the direction) is checked
/// symbolically and reported on failure. The recorded kappa is the constant
/// det(hess P + dP (x) dP), which is exactly the multiplier in the
/// exponential identity; `None` when that determinant is not constant.
pub fn verify_exponential_relation(p: &Poly, direction: &[Rational]) -> Result<Option<Relation>> {
    let n = p.nvars();
    if direction.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: direction.len(),
        });
    }
    let grad = p.gradient();
    let mut dir_deriv = Poly::zero(n);
    for i in 0..n {
        dir_deriv = dir_deriv.add(&grad[i].scale(&direction[i]))?;
    }
    match dir_deriv.as_constant() {
        Some(a) if !a.is_zero() => {}
        _ => {
            return Err(Error::Precondition(format!(
                "directional derivative along the given direction is not a nonzero constant: {}",
                crate::text::print_poly(&dir_deriv)
            )))
        }
    }
    let hess = hessian_matrix(p);
    for i in 0..n {
        let mut row = Poly::zero(n);
        for j in 0..n {
            row = row.add(&hess.at(i, j).scale(&direction[j]))?;
        }
        if !row.is_zero() {
            return Err(Error::Precondition(format!(
                "Hessian does not annihilate the direction: row {} gives {}",
                i,
                crate::text::print_poly(&row)
            )));
        }
    }
    let c = graph_det(p);
    match c.as_constant() {
        Some(c) if !c.is_zero() => Ok(Some(Relation::exact(
            RelationKind::Exponential,
            c,
            n as i64,
        ))),
        Some(_) => Ok(Some(Relation::zero_hessian())),
        None => Ok(None),
    }
}

/// A level function: polynomial or rational.
pub enum LevelFn<'a> {
    Poly(&'a Poly),
    Rational(&'a RationalFn),
}

/// Exact wedge test dG /\ dF == 0: G is constant on the level sets of F.
/// For rational G = N/D the test is cross-multiplied so no division occurs.
pub fn check_level_constancy(g: LevelFn, f: &Poly) -> Result<bool> {
    let n = f.nvars();
    let fgrad = f.gradient();
    let (gnum, gden) = match g {
        LevelFn::Poly(p) => {
            if p.nvars() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    got: p.nvars(),
                });
            }
            (p.clone(), Poly::one(n))
        }
        LevelFn::Rational(r) => {
            if r.nvars() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    got: r.nvars(),
                });
            }
            (r.num().clone(), r.den().clone())
        }
    };
    // d(N/D) proportional to N_i D - N D_i
    let gi: Vec<Poly> = (0..n)
        .map(|i| {
            gnum.diff(i)
                .unwrap()
                .mul(&gden)
                .unwrap()
                .sub(&gnum.mul(&gden.diff(i).unwrap()).unwrap())
                .unwrap()
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let w = gi[i]
                .mul(&fgrad[j])?
                .sub(&gi[j].mul(&fgrad[i])?)?;
            if !w.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Options for [`verify_rational_relation`].
#[derive(Debug, Clone)]
pub struct RationalVerifyOptions {
    /// Use the exact symbolic path when the cross-multiplied identity has
    /// total degree at most this cap.
    pub symbolic_degree_cap: u32,
    pub trials: u32,
    pub seed: u64,
    /// Resampling budget per trial when a denominator vanishes.
    pub resample_budget: u32,
}

impl Default for RationalVerifyOptions {
    fn default() -> Self {
        RationalVerifyOptions {
            symbolic_degree_cap: 24,
            trials: 12,
            seed: crate::DEFAULT_SEED,
            resample_budget: 64,
        }
    }
}

/// Hessian of N/D as a polynomial matrix over the common denominator D^3:
/// (N/D)_ij = B_ij / D^3.
pub fn rational_hessian_numerators(u: &RationalFn) -> Result<PolyMatrix> {
    let nv = u.nvars();
    let nn = u.num();
    let dd = u.den();
    let ngrad = nn.gradient();
    let dgrad = dd.gradient();
    let d2 = dd.pow(2);
    let mut entries: Vec<Vec<Poly>> = vec![vec![Poly::zero(nv); nv]; nv];
    for i in 0..nv {
        for j in i..nv {
            // B_ij = N_ij D^2 - N D_ij D - N_i D_j D - N_j D_i D + 2 N D_i D_j
            let t1 = ngrad[i].diff(j)?.mul(&d2)?;
            let t2 = nn.mul(&dgrad[i].diff(j)?)?.mul(dd)?;
            let t3 = ngrad[i].mul(&dgrad[j])?.mul(dd)?;
            let t4 = ngrad[j].mul(&dgrad[i])?.mul(dd)?;
            let t5 = nn.mul(&dgrad[i])?.mul(&dgrad[j])?.scale(&rat(2));
            let b = t1.sub(&t2)?.sub(&t3)?.sub(&t4)?.add(&t5)?;
            entries[i][j] = b.clone();
            entries[j][i] = b;
        }
    }
    Ok(PolyMatrix::from_fn(nv, nv, |i, j| entries[i][j].clone()))
}

/// Certify H(u) = kappa * u^m for a rational u = N/D. Symbolic when small
/// enough (cross-multiplied polynomial identity), probabilistic otherwise.
pub fn verify_rational_relation(
    u: &RationalFn,
    kappa: &Rational,
    m: u32,
    opts: &RationalVerifyOptions,
) -> Result<PitOutcome> {
    let nv = u.nvars();
    let b = rational_hessian_numerators(u)?;
    let b_deg: u64 = (0..nv)
        .map(|i| {
            (0..nv)
                .map(|j| b.at(i, j).total_degree() as u64)
                .max()
                .unwrap_or(0)
        })
        .sum();
    let dn = u.den().total_degree() as u64;
    let nn = u.num().total_degree() as u64;
    // detB * D^m = kappa * N^m * D^(3 nv)
    let lhs_deg = b_deg + dn * m as u64;
    let rhs_deg = nn * m as u64 + dn * 3 * nv as u64;
    let degree_bound = lhs_deg.max(rhs_deg);

    if degree_bound <= opts.symbolic_degree_cap as u64 {
        let detb = crate::hessian::det_poly(&b);
        let lhs = detb.mul(&u.den().pow(m))?;
        let rhs = u
            .num()
            .pow(m)
            .mul(&u.den().pow(3 * nv as u32))?
            .scale(kappa);
        if lhs == rhs {
            return Ok(PitOutcome::Certified(Relation::exact(
                RelationKind::Power,
                kappa.clone(),
                m as i64,
            )));
        }
        return Ok(PitOutcome::Refuted {
            witness: vec![],
            lhs: Rational::zero(),
            rhs: Rational::zero(),
        });
    }

    if opts.trials == 0 {
        return Err(Error::Precondition(
            "identity too large for symbolic path and trials = 0".into(),
        ));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
    let mut points = Vec::with_capacity(opts.trials as usize);
    for _ in 0..opts.trials {
        let mut budget = opts.resample_budget;
        loop {
            let pt = random_point(&mut rng, nv);
            let q = to_rationals(&pt);
            if !u.den().eval(&q)?.is_zero() {
                points.push(pt);
                break;
            }
            if budget == 0 {
                return Err(Error::Degenerate(
                    "denominator vanished at every sampled point".into(),
                ));
            }
            budget -= 1;
        }
    }
    let results = parallel_map(points.clone(), |pt| -> Result<Option<(Rational, Rational)>> {
        let q = to_rationals(pt);
        let detb = b.eval(&q)?.det();
        let dval = u.den().eval(&q)?;
        let nval = u.num().eval(&q)?;
        let lhs = detb * dval.pow(m as i32);
        let rhs = nval.pow(m as i32) * dval.pow(3 * nv as i32) * kappa;
        Ok(if lhs == rhs { None } else { Some((lhs, rhs)) })
    });
    for (i, r) in results.into_iter().enumerate() {
        if let Some((lhs, rhs)) = r? {
            return Ok(PitOutcome::Refuted {
                witness: points[i].clone(),
                lhs,
                rhs,
            });
        }
    }
    Ok(PitOutcome::Certified(Relation {
        kind: RelationKind::Power,
        kappa: kappa.clone(),
        m: m as i64,
        root: 1,
        mode: VerifyMode::Probabilistic,
        trials: opts.trials,
        seed: Some(opts.seed),
        degree_bound,
    }))
}

/// An affine homogeneity class: the radial identity X . dF = lambda F + alpha
/// for the dilation field X(x) = (1 - epsilon)(x - v) + ... with epsilon
/// selecting central dilations (0) or translations (1) around center v.
#[derive(Debug, Clone)]
pub struct HomogeneityClass {
    pub lambda: Rational,
    pub alpha: Rational,
    pub epsilon: u8,
    pub center: Vec<Rational>,
}

impl HomogeneityClass {
    pub fn central(lambda: Rational, center: Vec<Rational>) -> Self {
        HomogeneityClass {
            lambda,
            alpha: Rational::zero(),
            epsilon: 0,
            center,
        }
    }

    pub fn translational(alpha: Rational, direction: Vec<Rational>) -> Self {
        HomogeneityClass {
            lambda: Rational::zero(),
            alpha,
            epsilon: 1,
            center: direction,
        }
    }
}

/// Exact check of the radial identity X . dF = lambda F + alpha for the
/// supplied class, with X(x) = (1-eps)(x - v) + (2 eps - 1) v + ... i.e.
/// X = x - v for central classes and X = v for translational ones.
pub fn classify_homogeneity(f: &Poly, class: &HomogeneityClass) -> Result<bool> {
    let n = f.nvars();
    if class.center.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: class.center.len(),
        });
    }
    let grad = f.gradient();
    let mut lhs = Poly::zero(n);
    for i in 0..n {
        let xi = if class.epsilon == 0 {
            Poly::var(n, i).sub(&Poly::constant(n, class.center[i].clone()))?
        } else {
            Poly::constant(n, class.center[i].clone())
        };
        lhs = lhs.add(&xi.mul(&grad[i])?)?;
    }
    let rhs = f
        .scale(&class.lambda)
        .add(&Poly::constant(n, class.alpha.clone()))?;
    Ok(lhs == rhs)
}
