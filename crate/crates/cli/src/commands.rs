use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bsarr::arrangement::{intersection_lattice, lattice_isomorphic, Arrangement};
use bsarr::bsideals::{self, BSProduct, LocusReport};
use bsarr::logarithmic::{self, EulerVerdict, TameVerdict};
use bsarr::Poly;

use crate::input;
use crate::Failure;

#[derive(Parser, Debug)]
#[command(name = "bsarr", version, about = "Hyperplane arrangements, Bernstein-Sato zero loci and logarithmic forms")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ArrArgs {
    /// Arrangement JSON file (`-` for stdin).
    #[arg(long)]
    arr: String,
    /// `linear`, `trivial`, or groups such as `[[0,1],[2]]`.
    #[arg(long)]
    factorization: Option<String>,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Infix polynomial, JSON object, or `@file`.
    #[arg(long)]
    poly: String,
    /// Comma-separated variable names, overriding inference.
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Intersection lattice with ranks, J(X) and indecomposability.
    Lattice {
        #[arg(long)]
        arr: String,
    },
    /// Hyperplanes forced into the zero locus.
    BsLower(ArrArgs),
    /// Hyperplanes that may occur in the zero locus.
    BsUpper(ArrArgs),
    /// Principal generator or zero locus for a generic arrangement.
    BsGeneric(ArrArgs),
    /// Walther's b-function of a generic arrangement.
    BfunctionGeneric {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// The product element of the Bernstein-Sato ideal for a linear factorization.
    Maisonobe {
        #[command(flatten)]
        arr: ArrArgs,
        /// Top shift N; defaults to 2d - n - 2.
        #[arg(long = "big-n")]
        big_n: Option<usize>,
    },
    /// Restriction of a locus to the diagonal (or to a partition of the coordinates).
    Diagonal {
        #[arg(long)]
        locus: String,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Merge factorization groups, or pull a locus back along the merge.
    Coarsen {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        locus: Option<String>,
        #[arg(long)]
        arr: Option<String>,
        #[arg(long)]
        factorization: Option<String>,
    },
    /// Logarithmic derivations.
    LogDer(PolyArgs),
    /// Numerators of logarithmic k-forms.
    LogForms {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        k: usize,
    },
    /// Derivation-type annihilators of F^S.
    Annihilator(ArrArgs),
    /// Saito's criterion.
    CheckFree(PolyArgs),
    /// Bounded tameness check.
    CheckTame {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long = "max-k", default_value_t = 3)]
        max_k: usize,
        /// Arrangement defining the polynomial, enabling the genericity shortcut.
        #[arg(long)]
        arr: Option<String>,
    },
    /// Strong Euler-homogeneity at the origin.
    CheckEuler(PolyArgs),
    /// Twist, contraction, pairing and exterior-square checks.
    VerifyAppendix(PolyArgs),
    /// Whether two arrangements have isomorphic intersection lattices.
    LatticeIso {
        #[arg(long)]
        arr: String,
        #[arg(long)]
        other: String,
    },
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn locus_report(r: LocusReport) -> Value {
    json!({ "locus": r.locus.to_json(), "warnings": r.warnings })
}

fn product(b: &BSProduct) -> Value {
    json!({ "product": b.to_json(), "display": b.to_string() })
}

fn module(m: &bsarr::PolyModule) -> Value {
    m.to_json()
}

fn derivation_strings(m: &bsarr::PolyModule) -> Vec<String> {
    m.generators().iter().map(|g| logarithmic::Derivation::new(g.clone()).to_string()).collect()
}

fn load(a: &ArrArgs) -> Result<(Arrangement, bsarr::arrangement::Factorization), Failure> {
    let (arr, stored) = input::arrangement(&a.arr)?;
    let f = input::factorization(a.factorization.as_deref(), stored, arr.degree())?;
    Ok((arr, f))
}

fn poly(p: &PolyArgs) -> Result<Poly, Failure> {
    input::poly(&p.poly, p.vars.as_deref())
}

pub fn run(cli: Cli) -> Result<Value, Failure> {
    Ok(match cli.command {
        Command::Lattice { arr } => {
            let (a, _) = input::arrangement(&arr)?;
            let lat = intersection_lattice(&a);
            let edges: Vec<Value> = lat
                .edges
                .iter()
                .map(|e| {
                    json!({
                        "rank": e.rank,
                        "forms": e.form_indices,
                        "j": e.j,
                        "d_x": e.d_x,
                        "indecomposable": e.indecomposable,
                        "basis": e.basis.iter().map(|r| strings(r)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({ "n": lat.n, "edges": edges, "containment": lat.containment })
        }
        Command::BsLower(a) => {
            let (arr, f) = load(&a)?;
            locus_report(bsideals::lower_locus(&arr, &f)?)
        }
        Command::BsUpper(a) => {
            let (arr, f) = load(&a)?;
            locus_report(bsideals::upper_locus(&arr, &f)?)
        }
        Command::BsGeneric(a) => {
            let (arr, f) = load(&a)?;
            let g = bsideals::generic_ideal(&arr, &f)?;
            json!({
                "locus": g.locus.to_json(),
                "generator": g.generator.as_ref().map(product),
                "principal": g.principal,
                "reduced": g.reduced,
            })
        }
        Command::BfunctionGeneric { n, d } => {
            let b = bsideals::walther_bfunction(n, d)?;
            let mut v = product(&b);
            v["roots"] = json!(strings(b.factors().keys().filter_map(|h| h.root())));
            v
        }
        Command::Maisonobe { arr, big_n } => {
            let (a, f) = load(&arr)?;
            let big_n = big_n.unwrap_or_else(|| (2 * a.degree()).saturating_sub(a.n() + 2));
            let mut v = product(&bsideals::maisonobe_element(&a, &f, big_n)?);
            v["N"] = json!(big_n);
            v
        }
        Command::Diagonal { locus, partition } => {
            let l = input::locus(&locus)?;
            let c = match partition {
                Some(p) => input::coarsening(&p, l.r())?,
                None => bsideals::CoarseningMap::diagonal(l.r()),
            };
            let pb = bsideals::pullback_locus(&l, &c)?;
            if c.m() == 1 {
                json!({
                    "roots": strings(pb.locus.hyperplanes().iter().filter_map(|h| h.root())),
                    "entire_diagonal": pb.entire_space,
                })
            } else {
                json!({ "locus": pb.locus.to_json(), "entire_space": pb.entire_space })
            }
        }
        Command::Coarsen { partition, locus, arr, factorization } => match (locus, arr) {
            (Some(l), None) => {
                let l = input::locus(&l)?;
                let pb = bsideals::pullback_locus(&l, &input::coarsening(&partition, l.r())?)?;
                json!({ "locus": pb.locus.to_json(), "entire_space": pb.entire_space })
            }
            (None, Some(a)) => {
                let (_, f) = load(&ArrArgs { arr: a, factorization })?;
                let c = input::coarsening(&partition, f.r())?;
                json!({ "factorization": bsideals::coarsen(&f, &c)?.groups() })
            }
            _ => return Err(Failure::new("usage", "coarsen needs exactly one of --locus or --arr")),
        },
        Command::LogDer(p) => {
            let f = poly(&p)?;
            let m = logarithmic::log_derivations(&f)?;
            json!({ "module": module(&m), "derivations": derivation_strings(&m) })
        }
        Command::LogForms { poly: p, k } => {
            let f = poly(&p)?;
            let forms = logarithmic::log_k_forms(&f, k)?;
            json!({ "k": k, "module": module(&forms.module) })
        }
        Command::Annihilator(a) => {
            let (arr, f) = load(&a)?;
            let factors = arr.factor_polys(&f)?;
            let elems: Vec<Value> = logarithmic::annihilator_generators(&factors)?
                .iter()
                .map(|e| {
                    json!({
                        "derivation": e.derivation.coeffs.iter().map(Poly::to_json).collect::<Vec<_>>(),
                        "s_linear": e.s_linear.iter().map(Poly::to_json).collect::<Vec<_>>(),
                        "display": e.to_string(),
                    })
                })
                .collect();
            json!({ "vars": Arrangement::default_vars(arr.n()).to_vec(), "elements": elems })
        }
        Command::CheckFree(p) => {
            let f = poly(&p)?;
            let r = logarithmic::is_free_saito(&f)?;
            json!({
                "free": r.free,
                "generators": r.generators.iter().map(|g| g.iter().map(Poly::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "generator_degrees": r.generator_degrees,
                "determinant": r.determinant.as_ref().map(input::poly_json),
                "constant": r.constant.map(|c| c.to_string()),
                "f_red": input::poly_json(&r.f_red),
            })
        }
        Command::CheckTame { poly: p, max_k, arr } => {
            let f = poly(&p)?;
            let a = arr.map(|path| input::arrangement(&path)).transpose()?.map(|(a, _)| a);
            let r = logarithmic::tame_check(&f, max_k, a.as_ref())?;
            let verdict = match &r.verdict {
                TameVerdict::Tame { reason } => json!({ "tame": true, "reason": reason }),
                TameVerdict::TameUpTo(k) => json!({ "tame": true, "up_to_k": k }),
                TameVerdict::NotTame { k } => json!({ "tame": false, "k": k }),
                TameVerdict::Partial => json!({ "tame": null, "reason": "degree cap exceeded" }),
            };
            let per_k: Vec<Value> =
                r.per_k.iter().map(|d| json!({ "k": d.k, "proj_dim": d.proj_dim, "ok": d.ok, "note": d.note })).collect();
            json!({ "verdict": verdict, "per_k": per_k })
        }
        Command::CheckEuler(p) => match logarithmic::strong_euler_check(&poly(&p)?) {
            EulerVerdict::Holds { weights } => json!({ "verdict": "holds", "weights": strings(weights) }),
            EulerVerdict::Undecided => json!({ "verdict": "undecided" }),
            EulerVerdict::NotApplicable => json!({ "verdict": "not_applicable" }),
        },
        Command::VerifyAppendix(p) => {
            let r = logarithmic::verify_appendix(&poly(&p)?)?;
            json!({
                "twist": r.twist,
                "contraction": r.contraction,
                "pairing": r.pairing,
                "exterior_square_strict": r.exterior_square_strict,
            })
        }
        Command::LatticeIso { arr, other } => {
            let (a, _) = input::arrangement(&arr)?;
            let (b, _) = input::arrangement(&other)?;
            json!({ "isomorphic": lattice_isomorphic(&a, &b)? })
        }
    })
}
