//! Exact symbolic computation with functions whose Hessian determinant is a
//! multiple of a power (or an exponential) of the function, together with
//! floating-point probes of the equiaffine geometry of their level sets.
//!
//! The crate is organized around a sparse multivariate polynomial ring over
//! arbitrary-precision rationals ([`poly`]), exact polynomial matrices and
//! determinants ([`hessian`]), certification of identities of the form
//! `H(P) = kappa * P^m` and `H(exp(P)) = kappa * exp((n+1) P)` ([`verify`]),
//! a catalog of named solutions ([`catalog`]), combinators producing new
//! solutions from old ([`construct`]), left-symmetric algebras whose
//! characteristic polynomials solve the exponential equation ([`lsa`]), and
//! numeric evaluation of equiaffine normals, shape operators, and
//! affine-sphere tests on level sets ([`geometry`]).

pub mod catalog;
pub mod construct;
pub mod geometry;
pub mod hessian;
pub mod linalg;
pub mod lsa;
pub mod poly;
pub mod ratfn;
pub mod text;
pub mod verify;

pub use poly::{Homogeneity, Monomial, Poly, Rational};
pub use ratfn::RationalFn;
pub use verify::{Relation, RelationKind, VerifyMode};

/// Default RNG seed used everywhere a seed is optional, so runs are reproducible.
pub const DEFAULT_SEED: u64 = 271828;

/// Environment variable capping worker-thread count for parallel verification.
pub const THREADS_ENV: &str = "HESSE_SPHERE_THREADS";

/// Worker-thread count: `HESSE_SPHERE_THREADS` if set and valid, else available
/// parallelism, else 1.
pub fn effective_threads() -> usize {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Errors shared across the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("matrix is singular over the rationals")]
    SingularMatrix,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
