//! Command-line front end. [`run`] does all the work so it can be tested in process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::divisor::{AmbientRing, DivisorJson, MapJson, Superdivisor};
use crate::error::{Error, Result};
use crate::invariants::{
    counterexample_n2, express_invariant, verify_lemma1, Expressed, SymmetricGenerators,
};
use crate::random::{self, Shape};
use crate::representability::{
    classify, roundtrip_divisor, roundtrip_morphism, universal_divisor, verify_theorem5,
    verify_spin_correspondence, MorphismText, SpinStructure, SupercurvePatch,
};
use crate::superalgebra::{Rational, SuperPolynomial, VariableContext};
use crate::symmetric::{Permutation, TensorPowerContext};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Even,
    Odd,
}

#[derive(Debug, Parser)]
#[command(name = "supersym", version, about = "Exact checks for supersymmetric products and superdivisors")]
struct Cli {
    /// Print a single JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for commands that draw random instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree bound for searches and random coefficients.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Report the wall-clock runtime (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TensorArgs {
    /// Base context of one factor.
    #[arg(long, default_value = "even z; odd t")]
    vars: String,
    /// Number of factors; inferred from the input when omitted.
    #[arg(long)]
    g: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a permutation (cycle notation) to an element of the tensor power.
    Act {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        tensor: TensorArgs,
    },
    /// Average an element over the symmetric group.
    Reynolds {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        tensor: TensorArgs,
    },
    /// Print the even and odd symmetric functions, or express an invariant in them.
    Symfun {
        #[arg(long)]
        g: usize,
        /// Only this index.
        #[arg(long)]
        h: Option<usize>,
        /// Only the even (s_h) or odd (sig_h) family.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Invariant to write as a polynomial in s_h and sig_h.
        #[arg(long)]
        express: Option<String>,
    },
    /// Compare generated subalgebra and invariants in a truncation.
    #[command(name = "verify-lemma1")]
    VerifyLemma1 {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        w: u32,
    },
    /// Find an invariant with two odd generators outside the generated subalgebra.
    Counterexample {
        #[arg(long, default_value_t = 2)]
        g: usize,
    },
    /// Operations on divisor files.
    Divisor {
        #[command(subcommand)]
        op: DivisorOp,
    },
    /// Print the universal divisor of degree g.
    Universal {
        #[arg(long)]
        g: usize,
    },
    /// Print the classifying morphism of a divisor.
    Classify {
        #[arg(long)]
        divisor: PathBuf,
    },
    /// Check classification and universal pullback are inverse to each other.
    Roundtrip {
        /// Divisor file; random instances are drawn when omitted.
        #[arg(long)]
        divisor: Option<PathBuf>,
        /// Number of random instances per direction.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Compare the spin pullback of the universal degree-1 divisor with the superdiagonal.
    #[command(name = "susy-check")]
    SusyCheck {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        unit: String,
        /// Require literal equality, without the odd-coordinate rescaling.
        #[arg(long)]
        literal: bool,
        /// Also check the degree-g correspondence on the patch.
        #[arg(long, default_value_t = 2)]
        g: usize,
    },
}

#[derive(Debug, Subcommand)]
enum DivisorOp {
    /// Sum of two divisors over the same base.
    Sum { first: PathBuf, second: PathBuf },
    /// The underlying ordinary divisor.
    Reduce { divisor: PathBuf },
    /// Characteristic polynomial of multiplication on the quotient.
    Charpoly {
        divisor: PathBuf,
        /// Even element of the ambient ring; defaults to the coordinate.
        #[arg(long)]
        multiplier: Option<String>,
    },
    /// Pull back along a base morphism.
    Pullback {
        divisor: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// The machine-readable result of one invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub status: Status,
    pub witness: Option<Vec<String>>,
    pub dims: Option<Vec<[usize; 2]>>,
    pub runtime_ms: u64,
    pub result: Value,
}

/// Captured output and exit code of [`run`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Done {
    status: Status,
    text: String,
    witness: Option<Vec<String>>,
    dims: Option<Vec<[usize; 2]>>,
    result: Value,
}

impl Done {
    fn pass(text: String, result: Value) -> Self {
        Done {
            status: Status::Pass,
            text,
            witness: None,
            dims: None,
            result,
        }
    }

    fn verdict(holds: bool, text: String, witness: Vec<String>, result: Value) -> Self {
        Done {
            status: if holds { Status::Pass } else { Status::Fail },
            text,
            witness: (!holds || !witness.is_empty()).then_some(witness),
            dims: None,
            result,
        }
    }

    fn dims(mut self, dims: Vec<[usize; 2]>) -> Self {
        self.dims = Some(dims);
        self
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Act { .. } => "act",
        Command::Reynolds { .. } => "reynolds",
        Command::Symfun { .. } => "symfun",
        Command::VerifyLemma1 { .. } => "verify-lemma1",
        Command::Counterexample { .. } => "counterexample",
        Command::Divisor { op } => match op {
            DivisorOp::Sum { .. } => "divisor sum",
            DivisorOp::Reduce { .. } => "divisor reduce",
            DivisorOp::Charpoly { .. } => "divisor charpoly",
            DivisorOp::Pullback { .. } => "divisor pullback",
        },
        Command::Universal { .. } => "universal",
        Command::Classify { .. } => "classify",
        Command::Roundtrip { .. } => "roundtrip",
        Command::SusyCheck { .. } => "susy-check",
    }
}

/// Parses `argv` (program name first), runs the command and renders its output.
///
/// Exit codes: 0 when the checked identity holds, 1 when it fails, 2 for usage,
/// parse and input errors.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_PASS,
                }
            };
        }
    };
    let start = Instant::now();
    let done = execute(&cli);
    let runtime_ms = if cli.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let command = command_name(&cli.command).to_string();
    match done {
        Ok(done) => {
            let code = match done.status {
                Status::Pass => EXIT_PASS,
                _ => EXIT_FAIL,
            };
            let stdout = if cli.json {
                let report = CommandReport {
                    command,
                    status: done.status,
                    witness: done.witness,
                    dims: done.dims,
                    runtime_ms,
                    result: done.result,
                };
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                let mut out = done.text;
                if cli.timing {
                    let _ = writeln!(out, "runtime_ms: {runtime_ms}");
                }
                out
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code,
            }
        }
        Err(e) => {
            let stdout = if cli.json {
                let report = CommandReport {
                    command,
                    status: Status::Error,
                    witness: None,
                    dims: None,
                    runtime_ms,
                    result: json!({ "error": e.to_string() }),
                };
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                String::new()
            };
            Outcome {
                stdout,
                stderr: format!("error: {e}\n"),
                code: EXIT_USAGE,
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn read_divisor(path: &Path) -> Result<Superdivisor> {
    DivisorJson::parse(&read(path)?)?.to_divisor()
}

/// Largest `k` such that some identifier in `text` is a base name followed by `k`.
fn infer_copies(text: &str, base: &VariableContext) -> usize {
    let names: Vec<&String> = base.even_vars().iter().chain(base.odd_vars()).collect();
    text.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .filter_map(|ident| {
            names
                .iter()
                .filter_map(|n| ident.strip_prefix(n.as_str()))
                .filter(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
                .filter_map(|rest| rest.parse::<usize>().ok())
                .max()
        })
        .max()
        .unwrap_or(0)
}

fn tensor_power(args: &TensorArgs, poly: &str, at_least: usize) -> Result<TensorPowerContext> {
    let base: VariableContext = args.vars.parse()?;
    let g = match args.g {
        Some(g) => g,
        None => infer_copies(poly, &base).max(at_least).max(1),
    };
    TensorPowerContext::new(&base, g)
}

fn divisor_text(d: &Superdivisor) -> String {
    format!("{}\n{} = 0\n", d.to_json().to_string_pretty(), d)
}

fn divisor_value(d: &Superdivisor) -> Value {
    json!({
        "divisor": serde_json::to_value(d.to_json()).expect("serializable"),
        "equation": d.to_string(),
    })
}

fn parse_unit(text: &str) -> Result<Rational> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Invalid(format!("`{text}` is not a rational number")))
}

fn execute(cli: &Cli) -> Result<Done> {
    match &cli.command {
        Command::Act { perm, poly, tensor } => {
            let sigma = Permutation::parse_cycles(perm, tensor.g)?;
            let tp = tensor_power(tensor, poly, sigma.size())?;
            let sigma = Permutation::parse_cycles(perm, Some(tp.g()))?;
            let p = SuperPolynomial::parse(tp.context(), poly)?;
            let out = tp.act(&sigma, &p)?;
            Ok(Done::pass(
                format!("{out}\n"),
                json!({ "g": tp.g(), "permutation": sigma.to_string(), "value": out.to_string() }),
            ))
        }
        Command::Reynolds { poly, tensor } => {
            let tp = tensor_power(tensor, poly, 1)?;
            let p = SuperPolynomial::parse(tp.context(), poly)?;
            let out = tp.reynolds(&p)?;
            Ok(Done::pass(
                format!("{out}\n"),
                json!({ "g": tp.g(), "value": out.to_string() }),
            ))
        }
        Command::Symfun { g, h, kind, express } => {
            let gens = SymmetricGenerators::new(*g)?;
            if let Some(text) = express {
                let p = SuperPolynomial::parse(gens.tensor_power().context(), text)?;
                return Ok(match express_invariant(&gens, &p)? {
                    Expressed::Expression(e) => Done::pass(
                        format!("{e}\n"),
                        json!({ "g": g, "expression": e.to_string() }),
                    ),
                    Expressed::NotInImage => Done::verdict(
                        false,
                        format!("{p} is not a polynomial in s_h, sig_h\n"),
                        vec![p.to_string()],
                        json!({ "g": g, "expression": null }),
                    ),
                });
            }
            let range: Vec<usize> = match h {
                Some(h) => {
                    if *h == 0 || *h > *g {
                        return Err(Error::IndexOutOfRange { index: *h, max: *g });
                    }
                    vec![*h]
                }
                None => (1..=*g).collect(),
            };
            let mut text = String::new();
            let mut even = serde_json::Map::new();
            let mut odd = serde_json::Map::new();
            if *kind != Some(Kind::Odd) {
                for &k in &range {
                    let _ = writeln!(text, "s{k} = {}", gens.s(k));
                    even.insert(format!("s{k}"), gens.s(k).to_string().into());
                }
            }
            if *kind != Some(Kind::Even) {
                for &k in &range {
                    let _ = writeln!(text, "sig{k} = {}", gens.sigma(k));
                    odd.insert(format!("sig{k}"), gens.sigma(k).to_string().into());
                }
            }
            Ok(Done::pass(text, json!({ "g": g, "even": even, "odd": odd })))
        }
        Command::VerifyLemma1 { g, d, w } => {
            let r = verify_lemma1(*g, *d, *w)?;
            let text = format!(
                "g={} d={} w={}: invariants {}, generated {}, products {}, injective {}, surjective {}\nstatus: {}\n",
                r.g,
                r.d,
                r.w,
                r.dim_invariants,
                r.dim_image,
                r.generator_monomials,
                r.injective,
                r.surjective,
                if r.holds() { "pass" } else { "fail" }
            );
            let dims = vec![[r.dim_invariants, r.dim_image]];
            let witness = if r.holds() {
                vec![]
            } else {
                vec![format!("dim invariants {}", r.dim_invariants), format!("dim image {}", r.dim_image)]
            };
            Ok(Done::verdict(r.holds(), text, witness, serde_json::to_value(&r).expect("serializable"))
                .dims(dims))
        }
        Command::Counterexample { g } => {
            let d = cli.max_degree.unwrap_or(2);
            let c = counterexample_n2(*g, d)?;
            let holds = c.infeasible && c.dim_invariants > c.dim_image;
            let text = format!(
                "witness: {}\nmultidegree: {:?}\ninvariants {}, generated {}, linear system infeasible: {}\nstatus: {}\n",
                c.witness,
                c.multidegree,
                c.dim_invariants,
                c.dim_image,
                c.infeasible,
                if holds { "pass" } else { "fail" }
            );
            Ok(Done::verdict(
                holds,
                text,
                vec![c.witness.to_string()],
                json!({
                    "g": g,
                    "multidegree": c.multidegree,
                    "infeasible": c.infeasible,
                }),
            )
            .dims(vec![[c.dim_invariants, c.dim_image]]))
        }
        Command::Divisor { op } => divisor_op(op),
        Command::Universal { g } => {
            let d = universal_divisor(*g, &SupercurvePatch::standard())?;
            Ok(Done::pass(divisor_text(&d), divisor_value(&d)))
        }
        Command::Classify { divisor } => {
            let d = read_divisor(divisor)?;
            let phi = classify(&d)?;
            let images: serde_json::Map<String, Value> = phi
                .assignment()
                .into_iter()
                .map(|(k, v)| (k, Value::String(v.to_string())))
                .collect();
            Ok(Done::pass(
                format!("{}\n", MorphismText(&phi)),
                json!({ "images": images }),
            ))
        }
        Command::Roundtrip { divisor, count } => match divisor {
            Some(path) => {
                let d = read_divisor(path)?;
                let patch = SupercurvePatch::with_coordinates(d.ring().coordinate(), d.ring().odd_coordinate())?;
                let first = roundtrip_divisor(&d)?;
                let second = roundtrip_morphism(&classify(&d)?, &patch)?;
                let mut witness = Vec::new();
                for c in [&first, &second] {
                    if !c.holds {
                        witness.push(c.expected.clone());
                        witness.push(c.actual.clone());
                    }
                }
                let holds = first.holds && second.holds;
                let text = format!(
                    "divisor: {}\nmorphism: {}\nstatus: {}\n",
                    first.holds,
                    second.holds,
                    if holds { "pass" } else { "fail" }
                );
                Ok(Done::verdict(
                    holds,
                    text,
                    witness,
                    json!({ "divisor": first.holds, "morphism": second.holds }),
                ))
            }
            None => random_roundtrip(cli.seed, *count, cli.max_degree.unwrap_or(2)),
        },
        Command::SusyCheck { unit, literal, g } => {
            let u = parse_unit(unit)?;
            let s = SpinStructure::new(SupercurvePatch::standard(), u)?;
            let r5 = verify_theorem5(&s)?;
            let r7 = verify_spin_correspondence(&s, *g)?;
            let degree_one = if *literal { r5.literal } else { r5.holds };
            let holds = degree_one && r7.holds();
            let compare_to = if *literal { &r5.superdiagonal } else { &r5.rescaled };
            let mut witness = Vec::new();
            if !degree_one {
                witness.push(r5.pulled_back.to_string());
                witness.push(compare_to.to_string());
            }
            for c in [&r7.transported, &r7.classified] {
                if !c.holds {
                    witness.push(c.expected.clone());
                    witness.push(c.actual.clone());
                }
            }
            let mut text = String::new();
            let _ = writeln!(text, "pullback: {} = 0", r5.pulled_back);
            let _ = writeln!(text, "superdiagonal: {} = 0", r5.superdiagonal);
            if !*literal {
                let _ = writeln!(text, "rescaling: {}", r5.rescaling);
            }
            let _ = writeln!(text, "literal: {}", r5.literal);
            let _ = writeln!(text, "degree {}: {}", g, r7.holds());
            let _ = writeln!(text, "status: {}", if holds { "pass" } else { "fail" });
            Ok(Done::verdict(
                holds,
                text,
                witness,
                json!({
                    "unit": r5.unit.to_string(),
                    "pullback": r5.pulled_back.to_string(),
                    "superdiagonal": r5.superdiagonal.to_string(),
                    "rescaling": if *literal { Value::Null } else { r5.rescaling.clone().into() },
                    "literal": r5.literal,
                    "degree_g": r7.holds(),
                }),
            ))
        }
    }
}

fn divisor_op(op: &DivisorOp) -> Result<Done> {
    match op {
        DivisorOp::Sum { first, second } => {
            let d = read_divisor(first)?.sum(&read_divisor(second)?)?;
            Ok(Done::pass(divisor_text(&d), divisor_value(&d)))
        }
        DivisorOp::Reduce { divisor } => {
            let r = read_divisor(divisor)?.reduce();
            Ok(Done::pass(
                format!("{r} = 0\n"),
                json!({ "equation": r.to_string() }),
            ))
        }
        DivisorOp::Charpoly { divisor, multiplier } => {
            let d = read_divisor(divisor)?;
            let ring = d.ring();
            let m = match multiplier {
                Some(text) => SuperPolynomial::parse(ring.context(), text)?,
                None => ring.z(),
            };
            let cp = d.quotient().char_poly(&m)?;
            let mut text = format!("{cp}\n");
            if m == ring.z() {
                let f = d.defining_polynomial();
                let holds = cp == f;
                let _ = writeln!(text, "status: {}", if holds { "pass" } else { "fail" });
                let witness = if holds { vec![] } else { vec![cp.to_string(), f.to_string()] };
                return Ok(Done::verdict(
                    holds,
                    text,
                    witness,
                    json!({ "char_poly": cp.to_string(), "defining": f.to_string() }),
                ));
            }
            Ok(Done::pass(text, json!({ "char_poly": cp.to_string() })))
        }
        DivisorOp::Pullback { divisor, map } => {
            let d = read_divisor(divisor)?;
            let phi = MapJson::parse(&read(map)?)?.to_morphism(d.base())?;
            let p = d.pullback(&phi)?;
            Ok(Done::pass(divisor_text(&p), divisor_value(&p)))
        }
    }
}

fn random_roundtrip(seed: u64, count: usize, max_degree: u32) -> Result<Done> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = Shape {
        max_degree,
        ..Shape::default()
    };
    let patch = SupercurvePatch::standard();
    let mut witness = Vec::new();
    let mut passed = [0usize; 2];
    for _ in 0..count {
        let g = rng.gen_range(1..=3);
        let base = random::base_context(rng.gen_range(0..=3), rng.gen_range(0..=3));
        let ring = AmbientRing::with_defaults(&base)?;
        let d = random::divisor(&mut rng, &ring, g, shape)?;
        let c = roundtrip_divisor(&d)?;
        if c.holds {
            passed[0] += 1;
        } else if witness.is_empty() {
            witness = vec![c.expected, c.actual];
        }
        let phi = random::morphism(&mut rng, &crate::representability::universal_base(g), &base, shape)?;
        let c = roundtrip_morphism(&phi, &patch)?;
        if c.holds {
            passed[1] += 1;
        } else if witness.is_empty() {
            witness = vec![c.expected, c.actual];
        }
    }
    let holds = passed == [count, count];
    let text = format!(
        "divisors: {}/{count}\nmorphisms: {}/{count}\nstatus: {}\n",
        passed[0],
        passed[1],
        if holds { "pass" } else { "fail" }
    );
    Ok(Done::verdict(
        holds,
        text,
        witness,
        json!({ "seed": seed, "count": count, "divisors": passed[0], "morphisms": passed[1] }),
    ))
}
