//! Command-line front end: parse polynomials and algebras, certify
//! Hessian-determinant relations, build catalog entries and constructions,
//! and probe the equiaffine geometry of level sets.
//!
//! Exit codes: 0 = certificate/pass, 1 = refutation, no relation, or
//! not-a-sphere, 2 = usage or input error. Runs with identical inputs and
//! seed produce byte-identical output; `HESSE_SPHERE_THREADS` caps worker
//! threads.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hesse_core::catalog::{self, CatalogFn};
use hesse_core::construct;
use hesse_core::geometry::{
    isoparametric_checks, sample_level_set, sphere_test, LevelGeometry, LevelSample,
    SampleOptions, SphereKind, SphereOptions, Surface,
};
use hesse_core::lsa;
use hesse_core::poly::{Poly, Rational};
use hesse_core::ratfn::RationalFn;
use hesse_core::text::{parse_poly, parse_rational, print_poly, print_rational};
use hesse_core::verify::{
    self, infer_power_relation, verify_exponential_relation, verify_power_relation_pit,
    PitOutcome, RationalVerifyOptions,
};
use hesse_core::DEFAULT_SEED;

#[derive(Parser)]
#[command(
    name = "hesse-sphere",
    about = "Exact certification of Hessian-determinant relations and affine-sphere level-set probes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify H(P) = kappa P^m (exactly or probabilistically), the
    /// exponential variant, or a rational relation.
    Verify(VerifyArgs),
    /// List or show the named solutions.
    Catalog(CatalogArgs),
    /// Build new solutions from certified ones.
    Construct(ConstructArgs),
    /// Left-symmetric algebra tools.
    Lsa(LsaArgs),
    /// Level-set geometry probes.
    Geom(GeomArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Inline polynomial in the x1..xN grammar.
    #[arg(long)]
    poly: Option<String>,
    /// Read the polynomial from a file.
    #[arg(long)]
    file: Option<String>,
    /// Use a catalog entry.
    #[arg(long)]
    catalog: Option<String>,
    /// Numerator of a rational function (with --den).
    #[arg(long)]
    num: Option<String>,
    /// Denominator of a rational function (with --num).
    #[arg(long)]
    den: Option<String>,
    /// Expected kappa as p/q (enables direct verification).
    #[arg(long)]
    kappa: Option<String>,
    /// Expected exponent m.
    #[arg(long)]
    m: Option<u32>,
    /// Probabilistic trials (with --kappa/--m on a polynomial).
    #[arg(long, default_value_t = 12)]
    trials: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Verify the exponential relation H(exp P) = kappa exp((n+1)P) along
    /// this direction (comma-separated rationals).
    #[arg(long)]
    direction: Option<String>,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    action: CatalogAction,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List all entry ids with their expected relations.
    List,
    /// Print one entry: polynomial text plus certificates.
    Show { id: String },
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    action: ConstructAction,
}

#[derive(Subcommand)]
enum ConstructAction {
    /// P^q for a certified homogeneous P.
    Power {
        /// Inline polynomial or catalog:<id>.
        #[arg(long)]
        input: String,
        #[arg(long)]
        q: u32,
    },
    /// Disjoint-variable product P^a (x) Q^b.
    Compose {
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 1)]
        b: u32,
    },
    /// x_{n+1} Q for a degree-n product-type solution Q.
    Addvar {
        #[arg(long)]
        input: String,
    },
    /// Radial graph x_{n+2}^2 P^l.
    Radial {
        #[arg(long)]
        input: String,
    },
    /// Squared modulus of a holomorphic solution (interleaved variables).
    Modsq {
        #[arg(long)]
        re: String,
        #[arg(long)]
        im: String,
        #[arg(long)]
        kappa_re: String,
        #[arg(long, default_value = "0")]
        kappa_im: String,
        #[arg(long)]
        k: u32,
    },
    /// Power of a paraboloid graph (x_{n+1} - P)^l.
    Graph {
        #[arg(long)]
        input: String,
        #[arg(long)]
        l: u32,
    },
}

#[derive(Args)]
struct LsaArgs {
    #[command(subcommand)]
    action: LsaAction,
}

#[derive(Args, Clone)]
struct LsaSource {
    /// Built-in fixture name (see `lsa verify --help` for the list).
    #[arg(long)]
    fixture: Option<String>,
    /// JSON file {"dim": n, "c": [[i, j, k, "p/q"], ...]} (1-based indices).
    #[arg(long)]
    file: Option<String>,
}

#[derive(Subcommand)]
enum LsaAction {
    /// Check the left-symmetry axioms (and the Jacobi identity).
    Verify(LsaSource),
    /// Print the characteristic polynomial det(I + R(x)).
    Charpoly(LsaSource),
    /// Run the completely-solvable pipeline and print the report.
    Pipeline(LsaSource),
    /// Build the n-dimensional Cayley algebra and its polynomial.
    Cayley {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct GeomArgs {
    #[command(subcommand)]
    action: GeomAction,
}

#[derive(Args, Clone)]
struct SurfaceSource {
    /// Inline polynomial.
    #[arg(long)]
    poly: Option<String>,
    /// Catalog entry id.
    #[arg(long)]
    catalog: Option<String>,
    /// Treat the surface as exp(P); levels still index values of P.
    #[arg(long, default_value_t = false)]
    exp: bool,
}

#[derive(Subcommand)]
enum GeomAction {
    /// Sample points on a level set and print their geometric data.
    Sample {
        #[command(flatten)]
        surface: SurfaceSource,
        #[arg(long, default_value_t = 1.0)]
        level: f64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Comma-separated anchor for the ray sampler; defaults to
        /// (0.6, ..., 0.6).
        #[arg(long)]
        anchor: Option<String>,
        /// Emit CSV instead of JSON.
        #[arg(long, default_value_t = false)]
        csv: bool,
    },
    /// Evaluate the level-set data at one point.
    Normal {
        #[command(flatten)]
        surface: SurfaceSource,
        /// Comma-separated coordinates.
        #[arg(long)]
        point: String,
    },
    /// Decide proper / improper / not-a-sphere for the sampled sheet.
    SphereTest {
        #[command(flatten)]
        surface: SurfaceSource,
        #[arg(long, default_value_t = 1.0)]
        level: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Comma-separated anchor for the ray sampler; defaults to
        /// (0.6, ..., 0.6).
        #[arg(long)]
        anchor: Option<String>,
        /// Residual tolerance for the center/direction fits.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Isoparametric diagnostics along a sampled level set.
    Iso {
        #[command(flatten)]
        surface: SurfaceSource,
        #[arg(long, default_value_t = 1.0)]
        level: f64,
        #[arg(long, default_value_t = 40)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Comma-separated anchor for the ray sampler; defaults to
        /// (0.6, ..., 0.6).
        #[arg(long)]
        anchor: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Catalog(args) => cmd_catalog(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Lsa(args) => cmd_lsa(args),
        Command::Geom(args) => cmd_geom(args),
    }
}

fn parse_vector(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|t| parse_rational(t).map_err(|e| e.to_string()))
        .collect()
}

fn parse_f64_vector(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| e.to_string()))
        .collect()
}

/// Resolve an inline polynomial or a `catalog:<id>` reference.
fn resolve_poly(input: &str) -> Result<Poly, String> {
    if let Some(id) = input.strip_prefix("catalog:") {
        let entry = catalog::find(id).ok_or_else(|| format!("unknown catalog id '{id}'"))?;
        match entry.f {
            CatalogFn::Poly(p) => Ok(p),
            CatalogFn::Rational(_) => Err(format!("catalog entry '{id}' is rational")),
        }
    } else {
        parse_poly(input, 0).map_err(|e| e.to_string())
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, String> {
    // rational relation
    if let (Some(num), Some(den)) = (&args.num, &args.den) {
        let (Some(kappa), Some(m)) = (&args.kappa, args.m) else {
            return Err("rational verification needs --kappa and --m".into());
        };
        let num = parse_poly(num, 0).map_err(|e| e.to_string())?;
        let nv = num.nvars();
        let den = parse_poly(den, nv).map_err(|e| e.to_string())?;
        let num = if num.nvars() < den.nvars() {
            num.embed(den.nvars(), 0)
        } else {
            num
        };
        let u = RationalFn::new(num, den).map_err(|e| e.to_string())?;
        let kappa = parse_rational(kappa).map_err(|e| e.to_string())?;
        let opts = RationalVerifyOptions {
            trials: args.trials,
            seed: args.seed,
            ..RationalVerifyOptions::default()
        };
        let out = verify::verify_rational_relation(&u, &kappa, m, &opts)
            .map_err(|e| e.to_string())?;
        println!("{}", serde_json::to_string_pretty(&out.to_json()).unwrap());
        return Ok(match out {
            PitOutcome::Certified(_) => 0,
            PitOutcome::Refuted { .. } => 1,
        });
    }

    // catalog entry: re-verify its expected relation
    if let Some(id) = &args.catalog {
        let entry = catalog::find(id).ok_or_else(|| format!("unknown catalog id '{id}'"))?;
        let rel = entry.verify_seeded(args.seed).map_err(|e| e.to_string())?;
        let mut j = rel.to_json();
        j.as_object_mut()
            .unwrap()
            .insert("id".into(), json!(entry.id));
        println!("{}", serde_json::to_string_pretty(&j).unwrap());
        return Ok(0);
    }

    let text = match (&args.poly, &args.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| e.to_string())?,
        (None, None) => return Err("need one of --poly, --file, --catalog, or --num/--den".into()),
    };
    let p = parse_poly(text.trim(), 0).map_err(|e| e.to_string())?;

    // exponential relation
    if let Some(dir) = &args.direction {
        let direction = parse_vector(dir)?;
        let rel = verify_exponential_relation(&p, &direction).map_err(|e| e.to_string())?;
        return match rel {
            Some(rel) => {
                println!("{}", serde_json::to_string_pretty(&rel.to_json()).unwrap());
                Ok(0)
            }
            None => {
                println!("{}", json!({"kind": "none"}));
                Ok(1)
            }
        };
    }

    // explicit (kappa, m): probabilistic verification
    if let (Some(kappa), Some(m)) = (&args.kappa, args.m) {
        let kappa = parse_rational(kappa).map_err(|e| e.to_string())?;
        let out = verify_power_relation_pit(&p, &kappa, m, args.trials, args.seed)
            .map_err(|e| e.to_string())?;
        println!("{}", serde_json::to_string_pretty(&out.to_json()).unwrap());
        return Ok(match out {
            PitOutcome::Certified(_) => 0,
            PitOutcome::Refuted { .. } => 1,
        });
    }

    // exact inference
    let rel = infer_power_relation(&p).map_err(|e| e.to_string())?;
    match rel {
        Some(rel) => {
            println!("{}", serde_json::to_string_pretty(&rel.to_json()).unwrap());
            Ok(0)
        }
        None => {
            println!("{}", json!({"kind": "none"}));
            Ok(1)
        }
    }
}

fn cmd_catalog(args: CatalogArgs) -> Result<i32, String> {
    match args.action {
        CatalogAction::List => {
            for e in catalog::all_entries() {
                println!(
                    "{:32} kappa = {:>8}, m = {}",
                    e.id,
                    print_rational(&e.expected.kappa),
                    e.expected.m
                );
            }
            Ok(0)
        }
        CatalogAction::Show { id } => {
            let e = catalog::find(&id).ok_or_else(|| format!("unknown catalog id '{id}'"))?;
            match &e.f {
                CatalogFn::Poly(p) => println!("polynomial: {}", print_poly(p)),
                CatalogFn::Rational(u) => {
                    println!("numerator:   {}", print_poly(u.num()));
                    println!("denominator: {}", print_poly(u.den()));
                }
            }
            println!("citation: {}", e.citation);
            let rel = e.verify().map_err(|er| er.to_string())?;
            println!(
                "certificate: {}",
                serde_json::to_string_pretty(&rel.to_json()).unwrap()
            );
            Ok(0)
        }
    }
}

fn print_construction(p: &Poly, rel: &hesse_core::Relation) -> i32 {
    println!("result: {}", print_poly(p));
    println!(
        "certificate: {}",
        serde_json::to_string_pretty(&rel.to_json()).unwrap()
    );
    0
}

fn cmd_construct(args: ConstructArgs) -> Result<i32, String> {
    let infer = |p: &Poly| -> Result<hesse_core::Relation, String> {
        infer_power_relation(p)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| "input polynomial satisfies no power relation".to_string())
    };
    match args.action {
        ConstructAction::Power { input, q } => {
            let p = resolve_poly(&input)?;
            let rel = infer(&p)?;
            let (result, out) = construct::power(&p, &rel, q).map_err(|e| e.to_string())?;
            Ok(print_construction(&result, &out))
        }
        ConstructAction::Compose { p, a, q, b } => {
            let pp = resolve_poly(&p)?;
            let qq = resolve_poly(&q)?;
            let rp = infer(&pp)?;
            let rq = infer(&qq)?;
            let (result, out) =
                construct::tensor_compose(&pp, &rp, a, &qq, &rq, b).map_err(|e| e.to_string())?;
            Ok(print_construction(&result, &out))
        }
        ConstructAction::Addvar { input } => {
            let p = resolve_poly(&input)?;
            let rel = infer(&p)?;
            let (result, out) = construct::add_variable(&p, &rel).map_err(|e| e.to_string())?;
            Ok(print_construction(&result, &out))
        }
        ConstructAction::Radial { input } => {
            let p = resolve_poly(&input)?;
            let rel = infer(&p)?;
            let (result, out) = construct::radial_graph(&p, &rel).map_err(|e| e.to_string())?;
            Ok(print_construction(&result, &out))
        }
        ConstructAction::Modsq {
            re,
            im,
            kappa_re,
            kappa_im,
            k,
        } => {
            let re_p = resolve_poly(&re)?;
            let nv = re_p.nvars();
            let im_p = parse_poly(&im, nv).map_err(|e| e.to_string())?;
            let re_p = if re_p.nvars() < im_p.nvars() {
                re_p.embed(im_p.nvars(), 0)
            } else {
                re_p
            };
            let kr = parse_rational(&kappa_re).map_err(|e| e.to_string())?;
            let ki = parse_rational(&kappa_im).map_err(|e| e.to_string())?;
            let (result, out) =
                construct::modulus_square(&re_p, &im_p, (kr, ki), k).map_err(|e| e.to_string())?;
            Ok(print_construction(&result, &out))
        }
        ConstructAction::Graph { input, l } => {
            let p = resolve_poly(&input)?;
            let (result, out) = construct::graph_power(&p, l).map_err(|e| e.to_string())?;
            Ok(print_construction(&result, &out))
        }
    }
}

fn load_lsa(source: &LsaSource) -> Result<lsa::Lsa, String> {
    match (&source.fixture, &source.file) {
        (Some(name), None) => lsa::fixture(name).ok_or_else(|| {
            format!(
                "unknown fixture '{name}'; available: {}",
                lsa::fixture_names().join(", ")
            )
        }),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let dim = value["dim"]
                .as_u64()
                .ok_or_else(|| "missing integer field 'dim'".to_string())?
                as usize;
            let entries = value["c"]
                .as_array()
                .ok_or_else(|| "missing array field 'c'".to_string())?;
            let mut sparse = Vec::new();
            for e in entries {
                let row = e
                    .as_array()
                    .filter(|r| r.len() == 4)
                    .ok_or_else(|| "each entry of 'c' must be [i, j, k, \"p/q\"]".to_string())?;
                let idx = |v: &serde_json::Value| -> Result<usize, String> {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| "indices must be positive integers".to_string())
                };
                let val = match &row[3] {
                    serde_json::Value::String(s) => {
                        parse_rational(s).map_err(|e| e.to_string())?
                    }
                    serde_json::Value::Number(n) => {
                        parse_rational(&n.to_string()).map_err(|e| e.to_string())?
                    }
                    _ => return Err("structure constant must be a string or number".into()),
                };
                sparse.push((idx(&row[0])?, idx(&row[1])?, idx(&row[2])?, val));
            }
            lsa::Lsa::from_sparse(dim, &sparse).map_err(|e| e.to_string())
        }
        _ => Err("need exactly one of --fixture or --file".into()),
    }
}

fn weights_json(w: &[(Rational, usize)]) -> serde_json::Value {
    json!(w
        .iter()
        .map(|(a, d)| json!({"weight": print_rational(a), "dim": d}))
        .collect::<Vec<_>>())
}

fn cmd_lsa(args: LsaArgs) -> Result<i32, String> {
    match args.action {
        LsaAction::Verify(src) => {
            let a = load_lsa(&src)?;
            match lsa::check_lsa(&a) {
                None => {
                    println!("{}", json!({"left_symmetric": true, "dim": a.dim}));
                    Ok(0)
                }
                Some((i, j, k)) => {
                    println!(
                        "{}",
                        json!({"left_symmetric": false, "failing_triple": [i + 1, j + 1, k + 1]})
                    );
                    Ok(1)
                }
            }
        }
        LsaAction::Charpoly(src) => {
            let a = load_lsa(&src)?;
            println!("{}", print_poly(&lsa::characteristic_polynomial(&a)));
            Ok(0)
        }
        LsaAction::Pipeline(src) => {
            let a = load_lsa(&src)?;
            let rep = lsa::completely_solvable_pipeline(&a).map_err(|e| e.to_string())?;
            let rel_json = rep.relation.as_ref().map(|r| r.to_json());
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "charpoly": print_poly(&rep.charpoly),
                    "completely_solvable_in_basis": rep.completely_solvable_in_basis,
                    "complete": rep.complete,
                    "tau_nondegenerate": rep.tau_nondegenerate,
                    "derived_codim": rep.derived_codim,
                    "idempotent": rep.idempotent.as_ref().map(|r| r
                        .iter()
                        .map(print_rational)
                        .collect::<Vec<_>>()),
                    "relation": rel_json,
                    "weights": weights_json(&rep.weights),
                    "kernel_weights": weights_json(&rep.kernel_weights),
                }))
                .unwrap()
            );
            Ok(0)
        }
        LsaAction::Cayley { n } => {
            let a = lsa::cayley_algebra(n).map_err(|e| e.to_string())?;
            let p = lsa::characteristic_polynomial(&a);
            let phi = lsa::cayley_phi(n).map_err(|e| e.to_string())?;
            println!("charpoly: {}", print_poly(&p));
            println!("phi:      {}", print_poly(&phi));
            Ok(0)
        }
    }
}

fn resolve_anchor(anchor: &Option<String>, nvars: usize) -> Result<Vec<f64>, String> {
    match anchor {
        Some(text) => {
            let v = parse_f64_vector(text)?;
            if v.len() != nvars {
                return Err(format!("anchor has {} coordinates, surface has {nvars}", v.len()));
            }
            Ok(v)
        }
        None => Ok(vec![0.6; nvars]),
    }
}

fn surface_from(source: &SurfaceSource) -> Result<Surface, String> {
    let p = match (&source.poly, &source.catalog) {
        (Some(t), None) => parse_poly(t, 0).map_err(|e| e.to_string())?,
        (None, Some(id)) => resolve_poly(&format!("catalog:{id}"))?,
        _ => return Err("need exactly one of --poly or --catalog".into()),
    };
    Ok(if source.exp {
        Surface::Exp(p)
    } else {
        Surface::Poly(p)
    })
}

fn sample_json(s: &LevelSample) -> serde_json::Value {
    json!({
        "point": s.point,
        "value": s.value,
        "h": s.h,
        "u": s.u,
        "mu": s.mu,
        "a": s.a,
        "xi": s.xi,
        "nu": s.nu,
        "amc": s.amc,
        "hessian_signature": s.hessian_signature,
    })
}

fn cmd_geom(args: GeomArgs) -> Result<i32, String> {
    match args.action {
        GeomAction::Sample {
            surface,
            level,
            samples,
            seed,
            anchor,
            csv,
        } => {
            let surf = surface_from(&surface)?;
            let anchor = resolve_anchor(&anchor, surf.nvars())?;
            let geom = LevelGeometry::new(surf).map_err(|e| e.to_string())?;
            let pts = sample_level_set(
                geom.surface.poly(),
                level,
                &SampleOptions::new(anchor, samples, seed),
            )
            .map_err(|e| e.to_string())?;
            let data: Vec<LevelSample> = pts
                .iter()
                .map(|p| geom.sample_at(p))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            if csv {
                let nv = geom.surface.nvars();
                let mut header: Vec<String> = (1..=nv).map(|i| format!("x{i}")).collect();
                header.extend(["value", "h", "u", "a", "amc"].map(String::from));
                header.extend((1..=nv).map(|i| format!("xi{i}")));
                header.extend((1..=nv).map(|i| format!("nu{i}")));
                println!("{}", header.join(","));
                for s in &data {
                    let mut row: Vec<String> = s.point.iter().map(|v| v.to_string()).collect();
                    for v in [s.value, s.h, s.u, s.a, s.amc] {
                        row.push(v.to_string());
                    }
                    row.extend(s.xi.iter().map(|v| v.to_string()));
                    row.extend(s.nu.iter().map(|v| v.to_string()));
                    println!("{}", row.join(","));
                }
            } else {
                let rows: Vec<serde_json::Value> = data.iter().map(sample_json).collect();
                println!("{}", serde_json::to_string_pretty(&json!(rows)).unwrap());
            }
            Ok(0)
        }
        GeomAction::Normal { surface, point } => {
            let surf = surface_from(&surface)?;
            let pt = parse_f64_vector(&point)?;
            let geom = LevelGeometry::new(surf).map_err(|e| e.to_string())?;
            let s = geom.sample_at(&pt).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&sample_json(&s)).unwrap());
            Ok(0)
        }
        GeomAction::SphereTest {
            surface,
            level,
            samples,
            seed,
            anchor,
            tol,
        } => {
            let surf = surface_from(&surface)?;
            let anchor = resolve_anchor(&anchor, surf.nvars())?;
            let geom = LevelGeometry::new(surf).map_err(|e| e.to_string())?;
            let mut opts = SphereOptions::new(anchor, samples, seed);
            opts.center_tol = tol;
            opts.direction_tol = tol;
            opts.amc_tol = tol;
            let v = sphere_test(&geom, level, &opts).map_err(|e| e.to_string())?;
            let kind = match v.kind {
                SphereKind::Proper => "proper",
                SphereKind::Improper => "improper",
                SphereKind::NotASphere => "not-a-sphere",
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "kind": kind,
                    "center": v.center,
                    "direction": v.direction,
                    "residual": v.residual,
                    "amc_spread": v.amc_spread,
                    "hessian_signatures": v.signatures,
                }))
                .unwrap()
            );
            Ok(if v.kind == SphereKind::NotASphere { 1 } else { 0 })
        }
        GeomAction::Iso {
            surface,
            level,
            samples,
            seed,
            anchor,
        } => {
            let surf = surface_from(&surface)?;
            let anchor = resolve_anchor(&anchor, surf.nvars())?;
            let geom = LevelGeometry::new(surf).map_err(|e| e.to_string())?;
            let rep = isoparametric_checks(&geom, level, &SphereOptions::new(anchor, samples, seed))
                .map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "u_level_constant": rep.u_level_constant,
                    "mu_wedge_max": rep.mu_wedge_max,
                    "straight_line_normals": rep.straight_line_normals,
                    "gauss_cross_max_rel_err": rep.gauss_cross_max_rel_err,
                }))
                .unwrap()
            );
            Ok(0)
        }
    }
}
