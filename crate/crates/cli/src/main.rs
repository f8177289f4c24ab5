use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use transpoly_core::permgroup::SamplingMode;
use transpoly_core::transpo::CARLITZ_EXPANSION_MAX_Q;
use transpoly_core::*;

/// Transposition polynomials, permutation criteria and lifting over finite
/// fields and finite local rings.
#[derive(Parser)]
#[command(name = "transpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArg {
    /// gf:p^n, gf:p^n/c0,..,1, zmod:p^k or fqu:p^n,k
    #[arg(long, value_parser = parse_ring_spec)]
    ring: RingSpec,
}

#[derive(Args)]
struct OutArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Elements and addition/multiplication tables by canonical index.
    FieldTable {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// The degree q-2 polynomial inducing (a b), with its verification.
    Transposition {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// The nested form inducing (0 a); expanded when q <= 16.
    Carlitz {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        a: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Checks whether a polynomial induces exactly (a b).
    Verify {
        #[command(flatten)]
        ring: RingArg,
        /// JSON polynomial: {"coeffs": [...]} or a bare coefficient list.
        #[arg(long)]
        poly: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Permutation criterion on a local ring, cross-checked by evaluation.
    Criterion {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Lifts a permutation of R/M to R: h = f + (f'+g)(x^q-x) + p*l.
    ///
    /// With --f, f is taken as given; otherwise f is the transposition
    /// polynomial for (a b) computed in R.
    Lift {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, conflicts_with_all = ["a", "b"], required_unless_present_all = ["a", "b"])]
        f: Option<String>,
        #[arg(long, requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        #[arg(long, default_value = "[1]")]
        g: String,
        #[arg(long, default_value = "[]")]
        l: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Polynomial functions and permutations of a small ring; with --poly,
    /// also the subgroup those permutation polynomials generate.
    Group {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        poly: Vec<String>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Sweeps lifted transposition polynomials and compares the group
    /// they generate with the group of polynomial permutations.
    Experiment {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw this many grid points at random instead of sweeping.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 1)]
        g_degree: usize,
        #[arg(long, default_value_t = 2)]
        l_degree: usize,
        /// One row per instance instead of the JSON summary.
        #[arg(long)]
        csv: bool,
        /// Include wall-clock runtime; makes output non-reproducible.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: OutArg,
    },
}

fn parse_ring_spec(s: &str) -> Result<RingSpec, Error> {
    s.parse()
}

fn element(ring: &Ring, s: &str) -> Result<Elem> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::InvalidElement(format!("{s}: {e}")))?;
    ring.decode(&v)
}

fn polynomial(ring: &Ring, s: &str) -> Result<Polynomial> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::InvalidPolynomial(format!("{s}: {e}")))?;
    let p = Polynomial::from_json(&v, Some(ring))?;
    if p.ring() != ring {
        return Err(Error::MixedRings(p.ring().to_string(), ring.to_string()));
    }
    Ok(p)
}

enum Output {
    Json(Value),
    Text(String),
}

fn with_header(ring: &Ring, body: Value) -> Value {
    let mut v = json!({"schema": 1, "ring": ring.to_string()});
    if let Value::Object(fields) = body {
        v.as_object_mut().unwrap().extend(fields);
    }
    v
}

fn field_table(ring: &Ring) -> Result<Value> {
    if ring.size() > 256 {
        return Err(Error::RingTooLarge(format!(
            "{ring}: tables are limited to 256 elements"
        )));
    }
    let table = |op: fn(&Ring, Elem, Elem) -> Elem| -> Vec<Vec<usize>> {
        ring.elements()
            .map(|x| ring.elements().map(|y| op(ring, x, y).index()).collect())
            .collect()
    };
    let mut v = json!({
        "size": ring.size(),
        "is_field": ring.is_field(),
        "elements": ring.elements().map(|x| ring.encode(x)).collect::<Vec<_>>(),
        "add": table(Ring::add),
        "mul": table(Ring::mul),
    });
    if let Some(m) = ring.modulus() {
        v["modulus"] = json!(m);
    }
    if !ring.is_field() {
        v["residue_field"] = json!(ring.residue_field().to_string());
        v["residue"] = json!(ring
            .elements()
            .map(|x| ring.residue(x).index())
            .collect::<Vec<_>>());
    }
    Ok(v)
}

fn run(command: Command) -> Result<(Output, Option<PathBuf>)> {
    let (out, path) = match command {
        Command::FieldTable { ring, out } => {
            let ring = Ring::new(&ring.ring)?;
            (with_header(&ring, field_table(&ring)?), out.output)
        }
        Command::Transposition { ring, a, b, out } => {
            let ring = Ring::new(&ring.ring)?;
            let (a, b) = (element(&ring, &a)?, element(&ring, &b)?);
            let f = transposition_poly(&TranspositionSpec::new(&ring, a, b)?);
            let body = json!({
                "a": ring.encode(a),
                "b": ring.encode(b),
                "poly": f.to_json(),
                "verification": verify_transposition(&f, a, b).to_json(),
            });
            (with_header(&ring, body), out.output)
        }
        Command::Carlitz { ring, a, out } => {
            let ring = Ring::new(&ring.ring)?;
            let a = element(&ring, &a)?;
            let table = carlitz_table(&ring, a)?;
            let mut body = json!({"a": ring.encode(a), "table": table.to_json()});
            if ring.size() <= CARLITZ_EXPANSION_MAX_Q {
                let g = carlitz_poly(&ring, a)?;
                body["poly"] = g.to_json();
                body["reduced"] = g.reduce_canonical()?.to_json();
            }
            (with_header(&ring, body), out.output)
        }
        Command::Verify {
            ring,
            poly,
            a,
            b,
            out,
        } => {
            let ring = Ring::new(&ring.ring)?;
            let f = polynomial(&ring, &poly)?;
            let (a, b) = (element(&ring, &a)?, element(&ring, &b)?);
            (
                with_header(&ring, verify_transposition(&f, a, b).to_json()),
                out.output,
            )
        }
        Command::Criterion { ring, poly, out } => {
            let ring = Ring::new(&ring.ring)?;
            let f = polynomial(&ring, &poly)?;
            let mut body = noebauer_is_permutation(&f)?.to_json();
            body["brute_force"] = json!(brute_force_is_permutation(&f));
            (with_header(&ring, body), out.output)
        }
        Command::Lift {
            ring,
            f,
            a,
            b,
            g,
            l,
            out,
        } => {
            let ring = Ring::new(&ring.ring)?;
            let (g, l) = (polynomial(&ring, &g)?, polynomial(&ring, &l)?);
            let inputs = match (f, a, b) {
                (Some(f), _, _) => LiftInputs::proposition(&polynomial(&ring, &f)?, &g, &l)?,
                (None, Some(a), Some(b)) => {
                    LiftInputs::corollary(&ring, element(&ring, &a)?, element(&ring, &b)?, &g, &l)?
                }
                _ => unreachable!("clap enforces --f or --a/--b"),
            };
            let h = inputs.build();
            let k = ring.residue_field();
            let mut body = json!({
                "f": inputs.f().to_json(),
                "g": g.to_json(),
                "l": l.to_json(),
                "h": h.to_json(),
                "is_permutation": brute_force_is_permutation(&h),
                "residue_table": residue_poly(&h).function_table().to_json(),
            });
            if let Some((a, b)) = inputs.points() {
                body["a"] = ring.encode(a);
                body["b"] = ring.encode(b);
                body["residue_points"] =
                    json!([k.encode(ring.residue(a)), k.encode(ring.residue(b))]);
            }
            if let Ok(p) = PermutationTable::from_function_table(&h.function_table()) {
                body["sign"] = json!(p.sign());
                body["cycle_type"] = json!(p.cycle_type());
            }
            (with_header(&ring, body), out.output)
        }
        Command::Group { ring, poly, out } => {
            let ring = Ring::new(&ring.ring)?;
            let bounds = ClosureBounds::default();
            let functions = all_polynomial_functions(&ring, &bounds)?;
            let group = polynomial_permutation_group(&ring, &bounds)?;
            let mut body = json!({
                "size": ring.size(),
                "polynomial_functions": functions.len(),
                "group_order": group.order(),
            });
            if !poly.is_empty() {
                let gens = poly
                    .iter()
                    .map(|s| {
                        let f = polynomial(&ring, s)?;
                        PermutationTable::from_function_table(&f.function_table())
                    })
                    .collect::<Result<Vec<_>>>()?;
                let sub = generated_subgroup(&gens)?;
                body["generated_order"] = json!(sub.order());
                body["index"] = json!(group.order() / sub.order());
            }
            (with_header(&ring, body), out.output)
        }
        Command::Experiment {
            ring,
            seed,
            samples,
            g_degree,
            l_degree,
            csv,
            timing,
            out,
        } => {
            let ring = Ring::new(&ring.ring)?;
            let config = SamplingConfig {
                g_max_degree: g_degree,
                l_max_degree: l_degree,
                mode: samples.map_or(SamplingMode::Exhaustive, |samples| SamplingMode::Random {
                    samples,
                }),
                seed,
            };
            let report = question_experiment(&ring, &config, &ClosureBounds::default())?;
            if csv {
                return Ok((Output::Text(report.to_csv()), out.output));
            }
            let mut v = report.to_json();
            if !timing {
                v.as_object_mut().unwrap().remove("runtime_ms");
            }
            (v, out.output)
        }
    };
    Ok((Output::Json(out), path))
}

fn fail(err: &Error) -> ExitCode {
    let v = json!({"schema": 1, "error": err.kind(), "message": err.to_string()});
    eprintln!("{v}");
    if err.is_parse_error() {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, path) = match run(cli.command) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let text = match out {
        Output::Json(v) => serde_json::to_string_pretty(&v).expect("json values serialize") + "\n",
        Output::Text(t) => t,
    };
    match path {
        Some(p) => {
            if let Err(e) = fs::write(&p, text) {
                eprintln!(
                    "{}",
                    json!({"schema": 1, "error": "Io", "message": format!("{}: {e}", p.display())})
                );
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
