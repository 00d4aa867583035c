//! Floating-point probes of the equiaffine geometry of level sets:
//! equiaffine normal, conormal, shape operator, affine mean curvature, and
//! affine-sphere verdicts. All derivatives come from exact symbolic
//! differentiation evaluated in f64 at the end; the only finite-precision
//! construction is the independent Euclidean curvature cross-check.
//!
//! Surfaces are level sets of a polynomial P or of exp(P); for the
//! exponential kind levels are still indexed by the value of P (the level
//! set {exp(P) = e^r} equals {P = r}).

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::hessian::{det_poly, graph_det, hessian_matrix, u_of_f, PolyMatrix};
use crate::poly::{Poly, Rational};
use crate::{Error, Result};

/// A level-set surface: polynomial or exponential of a polynomial.
#[derive(Debug, Clone)]
pub enum Surface {
    Poly(Poly),
    Exp(Poly),
}

impl Surface {
    pub fn poly(&self) -> &Poly {
        match self {
            Surface::Poly(p) | Surface::Exp(p) => p,
        }
    }

    pub fn nvars(&self) -> usize {
        self.poly().nvars()
    }

    fn is_exp(&self) -> bool {
        matches!(self, Surface::Exp(_))
    }
}

/// Precomputed symbolic data for repeated pointwise evaluation.
///
/// For F = P the stored determinant data is H = det hess P and
/// U = -det[[P_ij, P_i], [P_j, 0]]. For F = exp(P) the same slots hold the
/// polynomial factors C = det(hess P + dP dP) and W (the bordered
/// determinant of the twisted matrix), with H(F) = e^(nv P) C and
/// U(F) = e^((nv+1) P) W.
pub struct LevelGeometry {
    pub surface: Surface,
    nv: usize,
    grad: Vec<Poly>,
    hess: Vec<Vec<Poly>>,
    third: Vec<Vec<Vec<Poly>>>,
    h_core: Poly,
    h_core_grad: Vec<Poly>,
    u_core: Poly,
    u_core_grad: Vec<Poly>,
}

/// Pointwise differential-geometric data of a level set.
#[derive(Debug, Clone)]
pub struct LevelSample {
    pub point: Vec<f64>,
    pub value: f64,
    pub h: f64,
    pub u: f64,
    pub grad: Vec<f64>,
    pub hess: Vec<Vec<f64>>,
    /// one-form mu = d log U / (n+2)
    pub mu: Vec<f64>,
    /// scalar invariant 1 - F^p mu_p
    pub a: f64,
    /// equiaffine normal
    pub xi: Vec<f64>,
    /// equiaffine conormal, normalized so nu(xi) = 1
    pub nu: Vec<f64>,
    /// equiaffine shape operator S_i^j (row i, column j)
    pub shape: Vec<Vec<f64>>,
    /// affine mean curvature
    pub amc: f64,
    /// |trace-route minus closed-form| mean curvature gap; tiny exactly on
    /// surfaces whose U is constant along level sets
    pub amc_trace_gap: f64,
    /// signature of the evaluated Hessian (positive minus negative inertia)
    pub hessian_signature: i32,
}

impl LevelGeometry {
    pub fn new(surface: Surface) -> Result<Self> {
        let p = surface.poly().clone();
        let nv = p.nvars();
        let grad = p.gradient();
        let hess: Vec<Vec<Poly>> = grad.iter().map(|g| g.gradient()).collect();
        let third: Vec<Vec<Vec<Poly>>> = hess
            .iter()
            .map(|row| row.iter().map(|h| h.gradient()).collect())
            .collect();
        let (h_core, u_core) = match &surface {
            Surface::Poly(p) => (det_poly(&hessian_matrix(p)), u_of_f(p)),
            Surface::Exp(p) => {
                let c = graph_det(p);
                // bordered determinant of the twisted matrix M = hess P + dP dP
                let g = p.gradient();
                let hm = hessian_matrix(p);
                let m = PolyMatrix::from_fn(nv + 1, nv, |i, j| {
                    if i < nv && j < nv {
                        hm.at(i, j).add(&g[i].mul(&g[j]).unwrap()).unwrap()
                    } else if i < nv {
                        g[i].clone()
                    } else if j < nv {
                        g[j].clone()
                    } else {
                        Poly::zero(nv)
                    }
                });
                let w = det_poly(&m).neg();
                (c, w)
            }
        };
        let h_core_grad = h_core.gradient();
        let u_core_grad = u_core.gradient();
        Ok(LevelGeometry {
            surface,
            nv,
            grad,
            hess,
            third,
            h_core,
            h_core_grad,
            u_core,
            u_core_grad,
        })
    }

    /// The symbolic core polynomials (H-like, U-like): H and U themselves
    /// for polynomial surfaces, the exponential-stripped factors otherwise.
    pub fn cores(&self) -> (&Poly, &Poly) {
        (&self.h_core, &self.u_core)
    }

    /// Evaluate all level-set data at a point. Errors where H or U
    /// degenerates.
    pub fn sample_at(&self, point: &[f64]) -> Result<LevelSample> {
        let nv = self.nv;
        if point.len() != nv {
            return Err(Error::ArityMismatch {
                expected: nv,
                got: point.len(),
            });
        }
        let pval = self.surface.poly().eval_f64(point);
        let exp_factor = if self.surface.is_exp() { pval.exp() } else { 1.0 };
        let pgrad: Vec<f64> = self.grad.iter().map(|g| g.eval_f64(point)).collect();
        let phess: Vec<Vec<f64>> = self
            .hess
            .iter()
            .map(|row| row.iter().map(|h| h.eval_f64(point)).collect())
            .collect();
        let pthird: Vec<Vec<Vec<f64>>> = self
            .third
            .iter()
            .map(|r| {
                r.iter()
                    .map(|rr| rr.iter().map(|t| t.eval_f64(point)).collect())
                    .collect()
            })
            .collect();

        // F-jet
        let (value, grad, hess, third): (f64, Vec<f64>, Vec<Vec<f64>>, Vec<Vec<Vec<f64>>>) =
            if !self.surface.is_exp() {
                (pval, pgrad.clone(), phess.clone(), pthird)
            } else {
                let e = exp_factor;
                let grad: Vec<f64> = pgrad.iter().map(|g| e * g).collect();
                let hess: Vec<Vec<f64>> = (0..nv)
                    .map(|i| {
                        (0..nv)
                            .map(|j| e * (phess[i][j] + pgrad[i] * pgrad[j]))
                            .collect()
                    })
                    .collect();
                let third: Vec<Vec<Vec<f64>>> = (0..nv)
                    .map(|i| {
                        (0..nv)
                            .map(|j| {
                                (0..nv)
                                    .map(|k| {
                                        e * (pthird[i][j][k]
                                            + phess[i][j] * pgrad[k]
                                            + phess[j][k] * pgrad[i]
                                            + phess[k][i] * pgrad[j]
                                            + pgrad[i] * pgrad[j] * pgrad[k])
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect();
                (e, grad, hess, third)
            };

        let h_core_val = self.h_core.eval_f64(point);
        let u_core_val = self.u_core.eval_f64(point);
        let (h, u) = if self.surface.is_exp() {
            (
                exp_factor.powi(nv as i32) * h_core_val,
                exp_factor.powi(nv as i32 + 1) * u_core_val,
            )
        } else {
            (h_core_val, u_core_val)
        };
        if h == 0.0 || u == 0.0 || !h.is_finite() || !u.is_finite() {
            return Err(Error::Degenerate(format!(
                "degenerate point: H = {h}, U = {u}"
            )));
        }

        // d log H and mu = d log U / (nv + 1) (ambient dimension nv = n+1)
        let dlog_h: Vec<f64> = (0..nv)
            .map(|i| {
                let core = self.h_core_grad[i].eval_f64(point) / h_core_val;
                if self.surface.is_exp() {
                    nv as f64 * pgrad[i] + core
                } else {
                    core
                }
            })
            .collect();
        let mu: Vec<f64> = (0..nv)
            .map(|i| {
                let core =
                    self.u_core_grad[i].eval_f64(point) / ((nv as f64 + 1.0) * u_core_val);
                if self.surface.is_exp() {
                    pgrad[i] + core
                } else {
                    core
                }
            })
            .collect();

        // raise indices with the Hessian metric
        let ginv = invert(&hess)
            .ok_or_else(|| Error::Degenerate("Hessian not invertible at sample point".into()))?;
        let grad_up = matvec(&ginv, &grad);
        let mu_up = matvec(&ginv, &mu);
        let a = 1.0 - dot(&grad_up, &mu);

        let exponent = 1.0 / (nv as f64 + 1.0);
        let u_pow = u.abs().powf(exponent);
        let xi: Vec<f64> = (0..nv)
            .map(|i| -u_pow * (h * a / u * grad_up[i] + mu_up[i]))
            .collect();
        let nu: Vec<f64> = grad.iter().map(|gi| -gi / u_pow).collect();

        // shape operator
        let sign_u = if u >= 0.0 { 1.0 } else { -1.0 };
        let prefactor = sign_u * h * u.abs().powf(-(nv as f64) / (nv as f64 + 1.0));
        let n_float = nv as f64 - 1.0;
        let mut shape = vec![vec![0.0; nv]; nv];
        for i in 0..nv {
            // B_q = sum_p T_ipq F^p, raised over q
            let b: Vec<f64> = (0..nv)
                .map(|q| (0..nv).map(|p| third[i][p][q] * grad_up[p]).sum())
                .collect();
            let b_up = matvec(&ginv, &b);
            let coeff = dlog_h[i] + h / u * ((nv as f64 + 1.0) * a - n_float - 1.0) * grad[i];
            for j in 0..nv {
                let delta = if i == j { 1.0 } else { 0.0 };
                shape[i][j] = prefactor * (delta - b_up[j] + coeff * grad_up[j]);
            }
        }
        let amc_from_trace = (0..nv).map(|i| shape[i][i]).sum::<f64>() / n_float;
        let amc = (nv as f64 + 1.0) / n_float * prefactor * a;
        // The closed shape formula and its trace agree exactly when U is
        // constant on the level sets; off such solutions the gap is a
        // diagnostic, not an error.
        let amc_trace_gap = (amc - amc_from_trace).abs();

        let hessian_signature = inertia_signature(&hess);

        Ok(LevelSample {
            point: point.to_vec(),
            value,
            h,
            u,
            grad,
            hess,
            mu,
            a,
            xi,
            nu,
            shape,
            amc,
            amc_trace_gap,
            hessian_signature,
        })
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn matvec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Dense inverse via Gauss-Jordan with partial pivoting.
fn invert(m: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].abs().partial_cmp(&a[y][col].abs()).unwrap())?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col];
        for j in 0..n {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r][col];
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    Some(inv)
}

/// Signature (positive minus negative inertia) of a symmetric matrix via
/// the Jacobi eigenvalue iteration.
fn inertia_signature(m: &[Vec<f64>]) -> i32 {
    let n = m.len();
    let mut a = m.to_vec();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(1e-300);
    for _sweep in 0..100 {
        // largest off-diagonal entry
        let mut p = 0;
        let mut q = 1;
        let mut best = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                if a[i][j].abs() > best {
                    best = a[i][j].abs();
                    p = i;
                    q = j;
                }
            }
        }
        if n < 2 || best <= 1e-13 * scale {
            break;
        }
        let theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
        let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
        let c = 1.0 / (t * t + 1.0).sqrt();
        let s = t * c;
        for k in 0..n {
            let akp = a[k][p];
            let akq = a[k][q];
            a[k][p] = c * akp - s * akq;
            a[k][q] = s * akp + c * akq;
        }
        for k in 0..n {
            let apk = a[p][k];
            let aqk = a[q][k];
            a[p][k] = c * apk - s * aqk;
            a[q][k] = s * apk + c * aqk;
        }
    }
    let mut sig = 0;
    for i in 0..n {
        if a[i][i] > 1e-12 * scale {
            sig += 1;
        } else if a[i][i] < -1e-12 * scale {
            sig -= 1;
        }
    }
    sig
}

/// Options for the level-set sampler.
#[derive(Debug, Clone)]
pub struct SampleOptions {
    pub count: usize,
    pub seed: u64,
    /// Ray origin; should lie off the target level on one side of the sheet.
    pub anchor: Vec<f64>,
    pub max_rays: usize,
    pub target_tol: f64,
    /// Restrict ray directions d to the cone d . (anchor/|anchor|) >= cone_cos.
    /// Keeps the sample on the sheet facing the anchor; ignored for an
    /// anchor at the origin.
    pub cone_cos: f64,
    /// Longest ray parameter considered; keeps samples at well-conditioned
    /// coordinate scales.
    pub max_t: f64,
}

impl SampleOptions {
    pub fn new(anchor: Vec<f64>, count: usize, seed: u64) -> Self {
        SampleOptions {
            count,
            seed,
            anchor,
            max_rays: 8000,
            target_tol: 1e-12,
            cone_cos: 0.5,
            max_t: 4.0,
        }
    }
}

/// Sample points on the level set {P = r} by bisecting along random rays
/// from the anchor and polishing with one-dimensional Newton iteration.
/// Only the first crossing along each ray is kept, which holds the sample
/// on the sheet facing the anchor.
pub fn sample_level_set(p: &Poly, r: f64, opts: &SampleOptions) -> Result<Vec<Vec<f64>>> {
    let nv = p.nvars();
    if opts.anchor.len() != nv {
        return Err(Error::ArityMismatch {
            expected: nv,
            got: opts.anchor.len(),
        });
    }
    let grad = p.gradient();
    let phi = |x: &[f64]| p.eval_f64(x) - r;
    let phi0 = phi(&opts.anchor);
    let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
    let mut out = Vec::with_capacity(opts.count);
    let tol = opts.target_tol * r.abs().max(1.0);
    let anchor_dir: Option<Vec<f64>> = {
        let n = norm(&opts.anchor);
        if n > 1e-12 {
            Some(opts.anchor.iter().map(|v| v / n).collect())
        } else {
            None
        }
    };
    let mut rays = 0;
    while out.len() < opts.count && rays < opts.max_rays {
        rays += 1;
        let dir: Vec<f64> = {
            let mut d: Vec<f64> = (0..nv).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let n = norm(&d);
            if n < 1e-9 {
                continue;
            }
            for v in &mut d {
                *v /= n;
            }
            d
        };
        if let Some(ad) = &anchor_dir {
            if dot(&dir, ad) < opts.cone_cos {
                continue;
            }
        }
        // bracket the first sign change along t in (0, tmax]
        let mut f_prev = phi0;
        let mut t_prev = 0.0f64;
        let mut bracket = None;
        let mut t = 1e-3;
        for _ in 0..80 {
            if t > opts.max_t {
                break;
            }
            let x: Vec<f64> = (0..nv).map(|i| opts.anchor[i] + t * dir[i]).collect();
            let f = phi(&x);
            if f == 0.0 || f.signum() != f_prev.signum() {
                bracket = Some((t_prev, t));
                break;
            }
            t_prev = t;
            f_prev = f;
            t *= 1.35;
        }
        let Some((mut lo, mut hi)) = bracket else {
            continue;
        };
        for _ in 0..90 {
            let mid = 0.5 * (lo + hi);
            let x: Vec<f64> = (0..nv).map(|i| opts.anchor[i] + mid * dir[i]).collect();
            if phi(&x).signum() == phi0.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut t_star = 0.5 * (lo + hi);
        // Newton polish on the ray parameter
        for _ in 0..8 {
            let x: Vec<f64> = (0..nv).map(|i| opts.anchor[i] + t_star * dir[i]).collect();
            let f = phi(&x);
            let df: f64 = (0..nv).map(|i| grad[i].eval_f64(&x) * dir[i]).sum();
            if df.abs() < 1e-30 {
                break;
            }
            t_star -= f / df;
        }
        let x: Vec<f64> = (0..nv).map(|i| opts.anchor[i] + t_star * dir[i]).collect();
        if phi(&x).abs() <= tol {
            out.push(x);
        }
    }
    if out.is_empty() {
        return Err(Error::Degenerate(
            "no sign change found on any ray within budget".into(),
        ));
    }
    if out.len() < opts.count {
        return Err(Error::Degenerate(format!(
            "only {} of {} samples found within the ray budget",
            out.len(),
            opts.count
        )));
    }
    Ok(out)
}

/// Verdict of the affine-sphere test.
#[derive(Debug, Clone, PartialEq)]
pub enum SphereKind {
    Proper,
    Improper,
    NotASphere,
}

#[derive(Debug, Clone)]
pub struct SphereVerdict {
    pub kind: SphereKind,
    /// common center for proper verdicts
    pub center: Option<Vec<f64>>,
    /// common normal direction for improper verdicts
    pub direction: Option<Vec<f64>>,
    pub residual: f64,
    pub amc_spread: f64,
    /// Hessian signatures observed across the sampled sheet
    pub signatures: Vec<i32>,
}

#[derive(Debug, Clone)]
pub struct SphereOptions {
    pub samples: usize,
    pub seed: u64,
    pub anchor: Vec<f64>,
    pub center_tol: f64,
    pub direction_tol: f64,
    pub amc_tol: f64,
}

impl SphereOptions {
    pub fn new(anchor: Vec<f64>, samples: usize, seed: u64) -> Self {
        SphereOptions {
            samples,
            seed,
            anchor,
            center_tol: 1e-6,
            direction_tol: 1e-6,
            amc_tol: 1e-6,
        }
    }
}

/// Decide whether the sampled sheet is a proper affine sphere (normal lines
/// concurrent, constant mean curvature), an improper one (normals parallel,
/// vanishing mean curvature), or neither. Proper candidates fit the common
/// center of the lines p + t xi_p; improper candidates fit the common
/// direction of xi.
pub fn sphere_test(geom: &LevelGeometry, r: f64, opts: &SphereOptions) -> Result<SphereVerdict> {
    let pts = sample_level_set(
        geom.surface.poly(),
        r,
        &SampleOptions::new(opts.anchor.clone(), opts.samples, opts.seed),
    )?;
    let samples: Vec<LevelSample> = pts
        .iter()
        .map(|p| geom.sample_at(p))
        .collect::<Result<Vec<_>>>()?;
    let nv = geom.nv;

    let mut amcs: Vec<f64> = samples.iter().map(|s| s.amc).collect();
    amcs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median_amc = amcs[amcs.len() / 2];
    let amc_spread = samples
        .iter()
        .map(|s| (s.amc - median_amc).abs())
        .fold(0.0, f64::max);
    let xi_scale = samples
        .iter()
        .map(|s| norm(&s.xi))
        .fold(0.0, f64::max)
        .max(1e-300);
    let signatures: Vec<i32> = {
        let mut sigs: Vec<i32> = samples.iter().map(|s| s.hessian_signature).collect();
        sigs.sort();
        sigs.dedup();
        sigs
    };

    // proper candidate: centers p + xi / amc
    let mut proper_residual = f64::INFINITY;
    let mut center = None;
    if samples.iter().all(|s| s.amc.abs() > 1e-9 * xi_scale) {
        let centers: Vec<Vec<f64>> = samples
            .iter()
            .map(|s| {
                (0..nv)
                    .map(|i| s.point[i] + s.xi[i] / s.amc)
                    .collect::<Vec<f64>>()
            })
            .collect();
        let mean: Vec<f64> = (0..nv)
            .map(|i| centers.iter().map(|c| c[i]).sum::<f64>() / centers.len() as f64)
            .collect();
        proper_residual = centers
            .iter()
            .map(|c| (0..nv).map(|i| (c[i] - mean[i]).powi(2)).sum::<f64>().sqrt())
            .fold(0.0, f64::max);
        center = Some(mean);
    }

    // improper candidate: sign-aligned normal directions
    let dirs: Vec<Vec<f64>> = samples
        .iter()
        .map(|s| {
            let n = norm(&s.xi).max(1e-300);
            s.xi.iter().map(|v| v / n).collect::<Vec<f64>>()
        })
        .collect();
    let reference = &dirs[0];
    let aligned: Vec<Vec<f64>> = dirs
        .iter()
        .map(|d| {
            if dot(d, reference) < 0.0 {
                d.iter().map(|v| -v).collect()
            } else {
                d.clone()
            }
        })
        .collect();
    let mean_dir: Vec<f64> = {
        let mut m: Vec<f64> = (0..nv)
            .map(|i| aligned.iter().map(|d| d[i]).sum::<f64>())
            .collect();
        let n = norm(&m).max(1e-300);
        for v in &mut m {
            *v /= n;
        }
        m
    };
    let direction_residual = aligned
        .iter()
        .map(|d| {
            (0..nv)
                .map(|i| (d[i] - mean_dir[i]).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    let max_abs_amc = samples.iter().map(|s| s.amc.abs()).fold(0.0, f64::max);

    if proper_residual <= opts.center_tol && amc_spread <= opts.amc_tol {
        return Ok(SphereVerdict {
            kind: SphereKind::Proper,
            center,
            direction: None,
            residual: proper_residual,
            amc_spread,
            signatures,
        });
    }
    if direction_residual <= opts.direction_tol && max_abs_amc <= opts.amc_tol * xi_scale {
        return Ok(SphereVerdict {
            kind: SphereKind::Improper,
            center: None,
            direction: Some(mean_dir),
            residual: direction_residual,
            amc_spread,
            signatures,
        });
    }
    Ok(SphereVerdict {
        kind: SphereKind::NotASphere,
        center: None,
        direction: None,
        residual: proper_residual.min(direction_residual),
        amc_spread,
        signatures,
    })
}

/// Isoparametric diagnostics along a sampled level set.
#[derive(Debug, Clone)]
pub struct IsoReport {
    /// U(F) constant on level sets, checked symbolically.
    pub u_level_constant: bool,
    /// max over samples of the normalized wedge |mu /\ dF|.
    pub mu_wedge_max: f64,
    /// straight-line normals: exact vanishing of xi /\ D_xi xi at every
    /// rationalized sample.
    pub straight_line_normals: bool,
    /// max relative error of the Euclidean Gauss-curvature cross-check
    /// U(F) = (-1)^n K |dF|^(n+2).
    pub gauss_cross_max_rel_err: f64,
}

/// Run the isoparametric diagnostics: (a) the wedge mu /\ dF at each sample
/// (meaningful when U is constant on level sets, which is checked
/// symbolically), (b) exact straight-line normals via univariate restriction
/// of the normal field along itself, and (c) the Euclidean cross-check of U
/// against an independently computed Gauss curvature.
pub fn isoparametric_checks(
    geom: &LevelGeometry,
    r: f64,
    opts: &SphereOptions,
) -> Result<IsoReport> {
    let pts = sample_level_set(
        geom.surface.poly(),
        r,
        &SampleOptions::new(opts.anchor.clone(), opts.samples, opts.seed),
    )?;
    let samples: Vec<LevelSample> = pts
        .iter()
        .map(|p| geom.sample_at(p))
        .collect::<Result<Vec<_>>>()?;
    let nv = geom.nv;

    // (a) mu /\ dF; for exp surfaces U(F) = e^((nv+1) P) W is level-constant
    // exactly when dW /\ dP = 0, the same core test.
    let u_level_constant = crate::verify::check_level_constancy(
        crate::verify::LevelFn::Poly(&geom.u_core),
        geom.surface.poly(),
    )?;
    let mut mu_wedge_max: f64 = 0.0;
    for s in &samples {
        let scale = norm(&s.mu) * norm(&s.grad);
        if scale == 0.0 {
            continue;
        }
        for i in 0..nv {
            for j in i + 1..nv {
                let w = (s.mu[i] * s.grad[j] - s.mu[j] * s.grad[i]).abs() / scale;
                mu_wedge_max = mu_wedge_max.max(w);
            }
        }
    }

    // (b) exact straight-line test at rationalized samples
    let mut straight = true;
    for p in pts.iter().take(4) {
        if !normal_line_is_straight(geom, p)? {
            straight = false;
            break;
        }
    }

    // (c) Euclidean Gauss-curvature cross-check
    let mut gauss_err: f64 = 0.0;
    for s in &samples {
        let k = euclidean_gauss_curvature(s, nv)?;
        let n = nv as f64 - 1.0;
        let grad_norm = norm(&s.grad);
        let sign = if (nv - 1) % 2 == 0 { 1.0 } else { -1.0 };
        let predicted = sign * k * grad_norm.powf(n + 2.0);
        let rel = (s.u - predicted).abs() / s.u.abs().max(1e-300);
        gauss_err = gauss_err.max(rel);
    }

    Ok(IsoReport {
        u_level_constant,
        mu_wedge_max,
        straight_line_normals: straight,
        gauss_cross_max_rel_err: gauss_err,
    })
}

/// Gauss curvature of the level set at a sample with respect to the unit
/// normal N = -grad F / |grad F|, computed independently from the
/// second-fundamental-form data: the shape matrix of the normal field N(x)
/// restricted to an orthonormal tangent basis.
fn euclidean_gauss_curvature(s: &LevelSample, nv: usize) -> Result<f64> {
    let g = &s.grad;
    let gn = norm(g);
    if gn == 0.0 {
        return Err(Error::Degenerate("vanishing gradient".into()));
    }
    // Jacobian of N(x) = -grad F / |grad F|:
    // dN_i/dx_j = -F_ij/|g| + F_i (sum_k F_k F_kj) / |g|^3
    let mut jac = vec![vec![0.0; nv]; nv];
    for i in 0..nv {
        for j in 0..nv {
            let hg: f64 = (0..nv).map(|k| g[k] * s.hess[k][j]).sum();
            jac[i][j] = -s.hess[i][j] / gn + g[i] * hg / gn.powi(3);
        }
    }
    // orthonormal tangent basis via Gram-Schmidt against the normal
    let nvec: Vec<f64> = g.iter().map(|v| -v / gn).collect();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for i in 0..nv {
        let mut v = vec![0.0; nv];
        v[i] = 1.0;
        let d = dot(&v, &nvec);
        for t in 0..nv {
            v[t] -= d * nvec[t];
        }
        for b in &basis {
            let d = dot(&v, b);
            for t in 0..nv {
                v[t] -= d * b[t];
            }
        }
        let nn = norm(&v);
        if nn > 1e-8 {
            for t in 0..nv {
                v[t] /= nn;
            }
            basis.push(v);
            if basis.len() == nv - 1 {
                break;
            }
        }
    }
    if basis.len() != nv - 1 {
        return Err(Error::Degenerate("tangent basis construction failed".into()));
    }
    // shape matrix entries t_a . (J_N t_b)
    let m: Vec<Vec<f64>> = basis
        .iter()
        .map(|ta| {
            basis
                .iter()
                .map(|tb| {
                    let jb = matvec(&jac, tb);
                    dot(ta, &jb)
                })
                .collect()
        })
        .collect();
    Ok(det_f64(&m))
}

fn det_f64(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    if n == 0 {
        return 1.0;
    }
    let mut a = m.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].abs().partial_cmp(&a[y][col].abs()).unwrap())
            .unwrap();
        if a[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for j in col..n {
                a[r][j] -= f * a[col][j];
            }
        }
    }
    det
}

/// Exact test that the affine-normal line through a (rationalized) point is
/// straight: restrict the unnormalized normal direction field
/// X = g^{-1} ( (H A / U) dF + mu ) to the line point + t X(point) and check
/// X(0) /\ X'(0) = 0 in exact univariate rational-function arithmetic.
/// Scalar rescalings of X (including the exponential factors of exp
/// surfaces) do not affect the condition, so the core polynomials are used.
pub fn normal_line_is_straight(geom: &LevelGeometry, point: &[f64]) -> Result<bool> {
    let nv = geom.nv;
    // The wedge identity holds on the whole domain for the fields involved,
    // not only on the level set, so the sample may be snapped to a nearby
    // low-denominator rational point; this keeps the exact univariate
    // arithmetic small. The line direction must be the exact normal
    // direction at the snapped point, computed below in rational arithmetic.
    let snap = |x: f64| -> Result<Rational> {
        if !x.is_finite() {
            return Err(Error::Degenerate("non-finite coordinate".into()));
        }
        let denom = 16i64;
        let num = (x * denom as f64).round() as i64;
        Ok(Rational::new(num.into(), denom.into()))
    };
    let pt: Vec<Rational> = point.iter().map(|&x| snap(x)).collect::<Result<_>>()?;
    let dir = exact_normal_direction(geom, &pt)?;

    let is_exp = geom.surface.is_exp();
    let grad_t: Vec<Poly> = geom
        .grad
        .iter()
        .map(|g| g.restrict_to_line(&pt, &dir))
        .collect::<Result<Vec<_>>>()?;
    let hess_t: Vec<Vec<Poly>> = geom
        .hess
        .iter()
        .map(|row| {
            row.iter()
                .map(|h| h.restrict_to_line(&pt, &dir))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let h_t = geom.h_core.restrict_to_line(&pt, &dir)?;
    let u_t = geom.u_core.restrict_to_line(&pt, &dir)?;
    let du_t: Vec<Poly> = geom
        .u_core_grad
        .iter()
        .map(|g| g.restrict_to_line(&pt, &dir))
        .collect::<Result<Vec<_>>>()?;

    // metric-like matrix along the line: hess P (+ dP dP for exponentials)
    let m_t: Vec<Vec<Poly>> = (0..nv)
        .map(|i| {
            (0..nv)
                .map(|j| {
                    if is_exp {
                        hess_t[i][j].add(&grad_t[i].mul(&grad_t[j]).unwrap()).unwrap()
                    } else {
                        hess_t[i][j].clone()
                    }
                })
                .collect()
        })
        .collect();

    let adj = adjugate_poly(&m_t);

    // Clear all scalar denominators: with muN_i = dU/(nv+1) (+ U dP for
    // exponentials) one has mu_i = muN_i / U, the raised gradient is
    // adj(m) dF / H, the invariant A equals A_N / (H U) with
    // A_N = H U - (adj(m) dF) . muN, and the direction field becomes
    // X = adj(m) (A_N dF + U muN) / U^2. The scalar 1/U^2 drops out of the
    // wedge, leaving pure polynomial arithmetic.
    let scale = Rational::new(1.into(), (nv as i64 + 1).into());
    let mut mu_n: Vec<Poly> = Vec::with_capacity(nv);
    for i in 0..nv {
        let core = du_t[i].scale(&scale);
        mu_n.push(if is_exp {
            core.add(&grad_t[i].mul(&u_t)?)?
        } else {
            core
        });
    }
    let mut q: Vec<Poly> = Vec::with_capacity(nv); // adj(m) dF
    for i in 0..nv {
        let mut acc = Poly::zero(1);
        for j in 0..nv {
            acc = acc.add(&adj[i][j].mul(&grad_t[j])?)?;
        }
        q.push(acc);
    }
    let mut q_dot_mu = Poly::zero(1);
    for i in 0..nv {
        q_dot_mu = q_dot_mu.add(&q[i].mul(&mu_n[i])?)?;
    }
    let a_n = h_t.mul(&u_t)?.sub(&q_dot_mu)?;

    let y: Vec<Poly> = (0..nv)
        .map(|j| a_n.mul(&grad_t[j])?.add(&u_t.mul(&mu_n[j])?))
        .collect::<Result<Vec<_>>>()?;
    let mut x: Vec<Poly> = Vec::with_capacity(nv);
    for i in 0..nv {
        let mut acc = Poly::zero(1);
        for j in 0..nv {
            acc = acc.add(&adj[i][j].mul(&y[j])?)?;
        }
        x.push(acc);
    }
    let xp: Vec<Poly> = x.iter().map(|c| c.diff(0)).collect::<Result<Vec<_>>>()?;
    for i in 0..nv {
        for j in i + 1..nv {
            let w = x[i].mul(&xp[j])?.sub(&x[j].mul(&xp[i])?)?;
            if !w.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact rational direction of the (unnormalized) affine normal at a
/// rational point: g^{-1} (A_N dF + U muN) up to positive scalars, with the
/// same clearing of denominators as in the straightness test. The result is
/// scaled to a primitive integer vector to keep later arithmetic small.
fn exact_normal_direction(geom: &LevelGeometry, pt: &[Rational]) -> Result<Vec<Rational>> {
    use crate::linalg::QMatrix;
    use num_bigint::BigInt;
    use num_integer::Integer;
    let nv = geom.nv;
    let is_exp = geom.surface.is_exp();
    let grad_v: Vec<Rational> = geom
        .grad
        .iter()
        .map(|g| g.eval(pt))
        .collect::<Result<_>>()?;
    let g_mat = QMatrix::from_fn(nv, nv, |i, j| {
        let mut v = geom.hess[i][j].eval(pt).unwrap();
        if is_exp {
            v += &grad_v[i] * &grad_v[j];
        }
        v
    });
    let u_val = geom.u_core.eval(pt)?;
    if u_val.is_zero() {
        return Err(Error::Degenerate("U vanishes at snapped point".into()));
    }
    let du_val: Vec<Rational> = geom
        .u_core_grad
        .iter()
        .map(|g| g.eval(pt))
        .collect::<Result<_>>()?;
    let h_val = g_mat.det();
    if h_val.is_zero() {
        return Err(Error::Degenerate("H vanishes at snapped point".into()));
    }
    let scale = Rational::new(1.into(), (nv as i64 + 1).into());
    let mu_n: Vec<Rational> = (0..nv)
        .map(|i| {
            let mut v = &du_val[i] * &scale;
            if is_exp {
                v += &grad_v[i] * &u_val;
            }
            v
        })
        .collect();
    // q = h g^{-1} dF; A_N = h u - q . muN
    let ginv_grad = g_mat
        .solve(&grad_v)
        .ok_or_else(|| Error::Degenerate("metric singular at snapped point".into()))?;
    let mut q_dot_mu = Rational::zero();
    for i in 0..nv {
        q_dot_mu += &ginv_grad[i] * &h_val * &mu_n[i];
    }
    let a_n = &h_val * &u_val - q_dot_mu;
    let rhs: Vec<Rational> = (0..nv)
        .map(|i| &a_n * &grad_v[i] + &u_val * &mu_n[i])
        .collect();
    let dir = g_mat
        .solve(&rhs)
        .ok_or_else(|| Error::Degenerate("metric singular at snapped point".into()))?;
    if dir.iter().all(|d| d.is_zero()) {
        return Err(Error::Degenerate("normal direction vanishes".into()));
    }
    // clear denominators and divide by the numerator gcd
    let mut lcm = BigInt::from(1);
    for d in &dir {
        lcm = lcm.lcm(d.denom());
    }
    let nums: Vec<BigInt> = dir
        .iter()
        .map(|d| (d * Rational::from_integer(lcm.clone())).numer().clone())
        .collect();
    let mut gcd = BigInt::from(0);
    for n in &nums {
        gcd = gcd.gcd(n);
    }
    Ok(nums
        .into_iter()
        .map(|n| Rational::from_integer(n / &gcd))
        .collect())
}

/// Adjugate of a square matrix of univariate polynomials by cofactors.
fn adjugate_poly(m: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = m.len();
    let minor = |skip_r: usize, skip_c: usize| -> Poly {
        let idx: Vec<usize> = (0..n).filter(|&i| i != skip_r).collect();
        let jdx: Vec<usize> = (0..n).filter(|&j| j != skip_c).collect();
        let sub = PolyMatrix::from_fn(n - 1, 1, |a, b| m[idx[a]][jdx[b]].clone());
        det_poly(&sub)
    };
    let mut adj = vec![vec![Poly::zero(1); n]; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let c = minor(j, i);
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            *slot = c.scale(&crate::poly::rat(sign));
        }
    }
    adj
}

/// Closed-form affine mean curvature for a certified homogeneous solution
/// of degree lambda with H(F) = B F^m, at level r > 0:
/// sign(lambda r) |lambda - 1|^(-1/(n+2)) |lambda|^(-(n+1)/(n+2))
/// |B|^(1/(n+2)) |r|^((lambda-2)/lambda - (n+1)/(n+2)).
pub fn homogeneous_amc(nvars: usize, lambda: f64, b: f64, r: f64) -> f64 {
    let n2 = nvars as f64 + 1.0; // n + 2
    let n1 = nvars as f64; // n + 1
    let sign = (lambda * r).signum();
    sign * (lambda - 1.0).abs().powf(-1.0 / n2)
        * lambda.abs().powf(-n1 / n2)
        * b.abs().powf(1.0 / n2)
        * r.abs().powf((lambda - 2.0) / lambda - n1 / n2)
}

/// Equiaffine normal by the homogeneous-solution closed form (center 0):
/// xi = -(1/((n+2)(lambda-1))) |lambda F H / (lambda-1)|^(1/(n+2))
///      ((n + lambda)/(lambda F) x^i + (lambda - 1) (d log H)^i).
pub fn homogeneous_normal_formula(
    geom: &LevelGeometry,
    point: &[f64],
    lambda: f64,
) -> Result<Vec<f64>> {
    let s = geom.sample_at(point)?;
    let nv = geom.nv;
    let n = nv as f64 - 1.0;
    let n2 = nv as f64 + 1.0;
    let f = s.value;
    let h = s.h;
    let (hc, _) = geom.cores();
    let hval = hc.eval_f64(point);
    let dlogh: Vec<f64> = geom
        .h_core_grad
        .iter()
        .map(|g| g.eval_f64(point) / hval)
        .collect();
    let ginv = invert(&s.hess).ok_or_else(|| Error::Degenerate("metric singular".into()))?;
    let dlogh_up = matvec(&ginv, &dlogh);
    let pref =
        -1.0 / (n2 * (lambda - 1.0)) * (lambda * f * h / (lambda - 1.0)).abs().powf(1.0 / n2);
    Ok((0..nv)
        .map(|i| pref * ((n + lambda) / (lambda * f) * point[i] + (lambda - 1.0) * dlogh_up[i]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!(
            (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs())),
            "{what}: {a} vs {b}"
        );
    }

    #[test]
    fn coordinate_product_normal_and_curvature() {
        // F = x1 x2 x3 at (1,1,1): xi = -3^(-3/4) (1,1,1), amc = 3^(-3/4)
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let s = geom.sample_at(&[1.0, 1.0, 1.0]).unwrap();
        let c = 3f64.powf(-0.75);
        for i in 0..3 {
            assert_close(s.xi[i], -c, 1e-12, "xi");
        }
        assert_close(s.amc, c, 1e-12, "amc");
        // nu(xi) = 1 and S grad = 0
        let pairing = s.nu.iter().zip(&s.xi).map(|(a, b)| a * b).sum::<f64>();
        assert_close(pairing, 1.0, 1e-12, "nu(xi)");
        for i in 0..3 {
            let row: f64 = (0..3).map(|j| s.shape[i][j] * s.grad[j]).sum();
            assert!(row.abs() < 1e-12, "S grad != 0");
        }
        // closed-form mean curvature: lambda = 3, B = 2, r = 1
        let closed = homogeneous_amc(3, 3.0, 2.0, 1.0);
        assert_close(s.amc, closed, 1e-12, "closed-form amc");
    }

    #[test]
    fn circle_conormal() {
        // F = x1^2 + x2^2 at (1, 0): U = 8, nu = -8^(-1/3) (2, 0), amc = 1
        let p = parse_poly("x1^2 + x2^2", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let s = geom.sample_at(&[1.0, 0.0]).unwrap();
        assert_close(s.u, 8.0, 1e-12, "U");
        assert_close(s.nu[0], -2.0 * 8f64.powf(-1.0 / 3.0), 1e-12, "nu_1");
        assert_close(s.nu[1], 0.0, 1e-12, "nu_2");
        let pairing = s.nu.iter().zip(&s.xi).map(|(a, b)| a * b).sum::<f64>();
        assert_close(pairing, 1.0, 1e-12, "nu(xi)");
        assert_close(s.amc, 1.0, 1e-12, "amc of unit circle");
        // full shape operator at (1, 0): rows annihilate the gradient and
        // the tangent direction is a unit eigenvector
        assert_close(s.shape[0][0], 0.0, 1e-12, "S11");
        assert_close(s.shape[0][1], 0.0, 1e-12, "S12");
        assert_close(s.shape[1][0], 0.0, 1e-12, "S21");
        assert_close(s.shape[1][1], 1.0, 1e-12, "S22");
    }

    #[test]
    fn homogeneous_formula_agrees_with_general() {
        let p = parse_poly("x1*(x2^2 + x3^2)", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let pt = [1.0, 0.7, 0.6];
        let s = geom.sample_at(&pt).unwrap();
        let xi2 = homogeneous_normal_formula(&geom, &pt, 3.0).unwrap();
        for i in 0..3 {
            assert_close(s.xi[i], xi2[i], 1e-10, "normal formulas");
        }
    }

    #[test]
    fn reparameterization_and_coorientation() {
        // squaring the defining polynomial leaves xi unchanged on F > 0
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        let geom1 = LevelGeometry::new(Surface::Poly(p.clone())).unwrap();
        let geom2 = LevelGeometry::new(Surface::Poly(p.pow(2))).unwrap();
        let pt = [1.1, 0.9, 1.0];
        let s1 = geom1.sample_at(&pt).unwrap();
        let s2 = geom2.sample_at(&pt).unwrap();
        for i in 0..3 {
            assert_close(s1.xi[i], s2.xi[i], 1e-10, "xi under squaring");
        }
        // negating the polynomial flips the normal
        let geom3 = LevelGeometry::new(Surface::Poly(p.neg())).unwrap();
        let s3 = geom3.sample_at(&pt).unwrap();
        for i in 0..3 {
            assert_close(s1.xi[i], -s3.xi[i], 1e-10, "xi under negation");
        }
    }

    #[test]
    fn unimodular_equivariance() {
        use crate::poly::rat;
        // A(x) = M x with det M = 1; xi_{F o A}(x) = M^{-1} xi_F(Ax)
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        let lin = vec![
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(0), rat(0), rat(1)],
        ];
        let shift = vec![rat(0), rat(0), rat(0)];
        let pa = p.substitute_affine(&lin, &shift).unwrap();
        let geom_f = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let geom_fa = LevelGeometry::new(Surface::Poly(pa)).unwrap();
        let x = [0.4, 0.3, 0.8];
        let ax = [x[0] + 2.0 * x[1], x[1] + x[2], x[2]];
        let s_fa = geom_fa.sample_at(&x).unwrap();
        let s_f = geom_f.sample_at(&ax).unwrap();
        // M^{-1} applied to xi_F(Ax)
        let expect = vec![
            s_f.xi[0] - 2.0 * s_f.xi[1] + 2.0 * s_f.xi[2],
            s_f.xi[1] - s_f.xi[2],
            s_f.xi[2],
        ];
        for i in 0..3 {
            assert_close(s_fa.xi[i], expect[i], 1e-10, "equivariance");
        }
    }

    #[test]
    fn sampler_finds_level_and_detects_empty() {
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        let opts = SampleOptions::new(vec![0.6, 0.6, 0.6], 25, 3);
        let pts = sample_level_set(&p, 1.0, &opts).unwrap();
        assert_eq!(pts.len(), 25);
        for pt in &pts {
            assert!((p.eval_f64(pt) - 1.0).abs() < 1e-11);
            assert!(pt.iter().all(|&c| c > 0.0), "stays on the positive sheet");
        }
        // empty level: x1^2 + x2^2 = -1
        let q = parse_poly("x1^2 + x2^2", 0).unwrap();
        let opts = SampleOptions::new(vec![0.0, 0.0], 5, 3);
        assert!(sample_level_set(&q, -1.0, &opts).is_err());
    }

    #[test]
    fn sphere_test_proper_on_coordinate_product() {
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let opts = SphereOptions::new(vec![0.6, 0.6, 0.6], 40, 5);
        let v = sphere_test(&geom, 1.0, &opts).unwrap();
        assert_eq!(v.kind, SphereKind::Proper);
        let c = v.center.unwrap();
        assert!(norm(&c) < 1e-7, "center should be the origin, got {c:?}");
        assert!(v.amc_spread < 1e-8);
    }

    #[test]
    fn sphere_test_improper_on_paraboloid_exponential() {
        // exp(x3 - x1^2 - x2^2): levels of P are improper spheres with
        // normals along e3
        let p = parse_poly("x3 - x1^2 - x2^2", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Exp(p)).unwrap();
        let opts = SphereOptions::new(vec![0.0, 0.0, 3.0], 30, 7);
        let v = sphere_test(&geom, 1.0, &opts).unwrap();
        assert_eq!(v.kind, SphereKind::Improper);
        let d = v.direction.unwrap();
        assert!(d[2].abs() > 1.0 - 1e-9, "direction should be +-e3: {d:?}");
    }

    #[test]
    fn sphere_test_rejects_non_sphere() {
        let p = parse_poly("x1^2*(x3 - x2^2)^3", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let opts = SphereOptions::new(vec![1.0, 0.3, 2.0], 25, 11);
        let v = sphere_test(&geom, 1.0, &opts).unwrap();
        assert_eq!(v.kind, SphereKind::NotASphere);
    }

    #[test]
    fn iso_checks_on_certified_solution() {
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let opts = SphereOptions::new(vec![0.6, 0.6, 0.6], 20, 13);
        let rep = isoparametric_checks(&geom, 1.0, &opts).unwrap();
        assert!(rep.u_level_constant);
        assert!(rep.mu_wedge_max < 1e-8, "wedge {}", rep.mu_wedge_max);
        assert!(rep.straight_line_normals);
        assert!(
            rep.gauss_cross_max_rel_err < 1e-8,
            "gauss {}",
            rep.gauss_cross_max_rel_err
        );
    }

    #[test]
    fn hessian_signature_inertia() {
        // hess(x1 x2 x3) at (1,1,1) has eigenvalues 2, -1, -1
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let s = geom.sample_at(&[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(s.hessian_signature, -1);
        // definite quadric
        let q = parse_poly("x1^2 + x2^2 + x3^2", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(q)).unwrap();
        let s = geom.sample_at(&[1.0, 0.2, 0.1]).unwrap();
        assert_eq!(s.hessian_signature, 3);
    }

    #[test]
    fn iso_gauss_on_circle() {
        // K = -1 at (1, 0) on the unit circle with inward normal,
        // U = (-1)^n K |dF|^(n+2) = (-1)(-1) * 2^3 = 8
        let p = parse_poly("x1^2 + x2^2", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        let s = geom.sample_at(&[1.0, 0.0]).unwrap();
        let k = euclidean_gauss_curvature(&s, 2).unwrap();
        assert_close(k, -1.0, 1e-12, "gauss curvature of circle");
    }

    #[test]
    fn straight_normals_are_not_concurrence() {
        // x1^2 (x3 - x2^2)^3 has H and U constant on its level sets, so its
        // normal lines are straight; they fail to meet in a point or to be
        // parallel, which is what the sphere test detects.
        let p = parse_poly("x1^2*(x3 - x2^2)^3", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(p)).unwrap();
        assert!(normal_line_is_straight(&geom, &[1.0, 0.25, 1.5]).unwrap());
    }

    #[test]
    fn iso_straight_line_fails_off_solution() {
        // a generic cubic with no Hessian relation has curved normal lines
        let q = parse_poly("x1^3 + x2^3 + x3^3 + x1*x2", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Poly(q)).unwrap();
        assert!(!normal_line_is_straight(&geom, &[1.0, 0.5, 0.75]).unwrap());
    }

    #[test]
    fn exp_surface_matches_lemma_constants() {
        // H(exp P) = 4 exp(3 P) for P = x3 - x1^2 - x2^2
        let p = parse_poly("x3 - x1^2 - x2^2", 0).unwrap();
        let geom = LevelGeometry::new(Surface::Exp(p.clone())).unwrap();
        let pt = [0.3, -0.2, 1.4];
        let s = geom.sample_at(&pt).unwrap();
        let pv = p.eval_f64(&pt);
        assert_close(s.h, 4.0 * (3.0 * pv).exp(), 1e-10, "exponential H");
        assert_close(s.amc, 0.0, 1e-10, "improper mean curvature");
    }
}
