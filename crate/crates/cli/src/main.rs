use std::fmt::Display;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sympgroth::coxeter::{
    is_fpf_grassmannian, FpfInvolution, Partition, Permutation, ShiftedFpfInvolution,
    StrictPartition,
};
use sympgroth::grothendieck::{
    beta_rescale_check, expand_in_grothendieck_basis, grothendieck, schubert, sp_grothendieck,
    sp_transition_recurrence, verify_lenart_transition, verify_sp_transition,
};
use sympgroth::poly::MultiPoly;
use sympgroth::stable::{
    expand_in_g_basis, expand_in_gp_basis, gp_partition, gp_sp, stable_groth_partition,
    verify_f_grass, verify_stable_sp_transition, Window,
};
use sympgroth::Error;

const SCHEMA_VERSION: u32 = 1;

/// Exact computations with Grothendieck and symplectic Grothendieck polynomials.
#[derive(Parser, Debug)]
#[command(name = "sympgroth", version)]
struct Cli {
    /// Number of variables of the window for stable objects.
    #[arg(long, global = true, default_value_t = 4)]
    nvars: usize,
    /// Degree bound of the window for stable objects.
    #[arg(long, global = true, default_value_t = 6)]
    maxdeg: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a polynomial in canonical form.
    Compute { object: Object, element: String },
    /// Expand a polynomial in a basis.
    Expand {
        object: Object,
        element: String,
        /// Target basis; inferred from the object when omitted.
        #[arg(long, value_enum)]
        basis: Option<Basis>,
        /// Degree budget for expansions in the `groth` basis.
        #[arg(long, default_value_t = 24)]
        max_expansion_degree: i64,
    },
    /// Check one identity on one element.
    Verify {
        identity: Identity,
        element: String,
        #[arg(long, allow_hyphen_values = true)]
        j: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Check one identity on every element of a given rank.
    Sweep {
        identity: Identity,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    #[value(name = "groth")]
    Groth,
    #[value(name = "schubert")]
    Schubert,
    #[value(name = "sp-groth")]
    SpGroth,
    #[value(name = "G")]
    G,
    #[value(name = "GP")]
    Gp,
    #[value(name = "GP-sp")]
    GpSp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    #[value(name = "groth")]
    Groth,
    #[value(name = "G")]
    G,
    #[value(name = "GP")]
    Gp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    LenartTransition,
    SpTransition,
    SpRecurrence,
    FGrass,
    StableSpTransition,
    BetaRescale,
}

impl Identity {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

enum Failure {
    Parse(String),
    Precondition(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Verification(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidPermutation(_)
            | Error::InvalidInvolution(_)
            | Error::InvalidPartition { .. } => Failure::Parse(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

struct Ctx {
    window: Window,
    format: Format,
}

impl Ctx {
    fn render(&self, text: String, mut value: Value) -> String {
        match self.format {
            Format::Text => text,
            Format::Json => {
                value["schema_version"] = json!(SCHEMA_VERSION);
                serde_json::to_string_pretty(&value).expect("JSON values always serialize")
            }
        }
    }

    fn window_json(&self) -> Value {
        json!({"nvars": self.window.nvars(), "maxdeg": self.window.maxdeg()})
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(Failure::from)
}

fn parse_shifted(s: &str) -> Result<ShiftedFpfInvolution, Failure> {
    match s.split_once('@') {
        Some((base, offset)) => {
            let offset = offset
                .trim()
                .parse()
                .map_err(|_| Failure::Parse(format!("bad offset in {s:?}")))?;
            Ok(ShiftedFpfInvolution::new(offset, parse(base)?)?)
        }
        None => Ok(ShiftedFpfInvolution::from_positive(parse(s)?)),
    }
}

fn polynomial(ctx: &Ctx, object: Object, element: &str) -> Result<MultiPoly, Failure> {
    let w = &ctx.window;
    Ok(match object {
        Object::Groth => grothendieck(&parse(element)?, None),
        Object::Schubert => schubert(&parse(element)?),
        Object::SpGroth => sp_grothendieck(&parse(element)?, None),
        Object::G => stable_groth_partition(&parse::<Partition>(element)?, w),
        Object::Gp => gp_partition(&parse::<StrictPartition>(element)?, w),
        Object::GpSp => gp_sp(&parse(element)?, w)?,
    })
}

fn is_stable(object: Object) -> bool {
    matches!(object, Object::G | Object::Gp | Object::GpSp)
}

fn compute(ctx: &Ctx, object: Object, element: &str) -> Outcome {
    let f = polynomial(ctx, object, element)?;
    let mut value = json!({"object": object_name(object), "element": element, "polynomial": f.to_json()});
    if is_stable(object) {
        value["window"] = ctx.window_json();
    }
    Ok(ctx.render(f.canonical_text(), value))
}

fn object_name(object: Object) -> String {
    object.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn expand(ctx: &Ctx, object: Object, element: &str, basis: Option<Basis>, max_deg: i64) -> Outcome {
    let basis = basis.unwrap_or(match object {
        Object::Groth | Object::Schubert | Object::SpGroth => Basis::Groth,
        Object::G => Basis::G,
        Object::Gp | Object::GpSp => Basis::Gp,
    });
    let f = polynomial(ctx, object, element)?;
    let head = json!({"object": object_name(object), "element": element});
    let (text, mut value) = match basis {
        Basis::Groth => {
            if is_stable(object) {
                return Err(Failure::Precondition("the groth basis needs a polynomial object".into()));
            }
            let e = expand_in_grothendieck_basis(&f, max_deg)?;
            (e.to_string(), json!({"basis": "groth", "terms": e.to_json()}))
        }
        Basis::G => {
            let e = expand_in_g_basis(&f, &ctx.window)?;
            (stable_text(&e.terms, &e.censored), e.to_json())
        }
        Basis::Gp => {
            let e = expand_in_gp_basis(&f, &ctx.window)?;
            (stable_text(&e.terms, &e.censored), e.to_json())
        }
    };
    if basis != Basis::Groth {
        value["basis"] = json!(if basis == Basis::G { "G" } else { "GP" });
    }
    value["object"] = head["object"].clone();
    value["element"] = head["element"].clone();
    Ok(ctx.render(text, value))
}

fn stable_text<K: Ord + Display>(terms: &impl Display, censored: &[K]) -> String {
    if censored.is_empty() {
        return terms.to_string();
    }
    let list: Vec<String> = censored.iter().map(|k| format!("[{k}]")).collect();
    format!("{terms}\ncensored: {}", list.join(" "))
}

/// One identity check: whether it holds, both sides for the report, details.
struct Check {
    holds: bool,
    lhs: String,
    rhs: String,
    details: Value,
}

fn need(flag: &str, v: Option<i64>) -> Result<i64, Failure> {
    v.ok_or_else(|| Failure::Parse(format!("--{flag} is required for this identity")))
}

fn positive(flag: &str, v: i64) -> Result<usize, Failure> {
    usize::try_from(v)
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| Failure::Precondition(format!("--{flag} must be positive here")))
}

fn run_identity(ctx: &Ctx, identity: Identity, element: &str, j: Option<i64>, k: Option<i64>) -> Result<Check, Failure> {
    let w = &ctx.window;
    Ok(match identity {
        Identity::LenartTransition => {
            let k = positive("k", need("k", k)?)?;
            let t = verify_lenart_transition(&parse(element)?, k)?;
            Check {
                holds: t.equal && t.signed_equal,
                lhs: t.lhs.canonical_text(),
                rhs: t.rhs.canonical_text(),
                details: t.to_json(),
            }
        }
        Identity::SpTransition => {
            let z: FpfInvolution = parse(element)?;
            let j = positive("j", need("j", j)?)?;
            let k = k.map(|k| positive("k", k)).transpose()?.unwrap_or(z.apply(j));
            let t = verify_sp_transition(&z, j, k)?;
            Check { holds: t.equal, lhs: t.lhs.canonical_text(), rhs: t.rhs.canonical_text(), details: t.to_json() }
        }
        Identity::SpRecurrence => {
            let r = sp_transition_recurrence(&parse(element)?)?;
            Check { holds: r.certified, lhs: r.lhs.canonical_text(), rhs: r.rhs.canonical_text(), details: r.to_json() }
        }
        Identity::FGrass => {
            let z: FpfInvolution = parse(element)?;
            let holds = verify_f_grass(&z, w)?;
            let shape = StrictPartition::try_from(z.shape())?;
            Check {
                holds,
                lhs: gp_sp(&z, w)?.canonical_text(),
                rhs: gp_partition(&shape, w).canonical_text(),
                details: json!({"shape": shape.to_string(), "window": ctx.window_json(), "equal": holds}),
            }
        }
        Identity::StableSpTransition => {
            let v = parse_shifted(element)?;
            let j = need("j", j)?;
            let k = k.unwrap_or(v.apply(j));
            let t = verify_stable_sp_transition(&v, j, k, w)?;
            let mut details = t.to_json();
            details["window"] = ctx.window_json();
            Check { holds: t.equal, lhs: t.lhs.canonical_text(), rhs: t.rhs.canonical_text(), details }
        }
        Identity::BetaRescale => {
            let holds = beta_rescale_check(&parse(element)?);
            Check { holds, lhs: String::new(), rhs: String::new(), details: json!({"equal": holds}) }
        }
    })
}

fn verify(ctx: &Ctx, identity: Identity, element: &str, j: Option<i64>, k: Option<i64>) -> Outcome {
    let check = run_identity(ctx, identity, element, j, k)?;
    let status = if check.holds { "PASS" } else { "FAIL" };
    let mut text = format!("{status} {} {element}", identity.name());
    if !check.holds && !check.lhs.is_empty() {
        text = format!("{text}\nlhs: {}\nrhs: {}", check.lhs, check.rhs);
    }
    let value = json!({
        "identity": identity.name(),
        "element": element,
        "result": status,
        "details": check.details,
    });
    let out = ctx.render(text, value);
    if check.holds {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

/// `(element, j, k)`.
type Case = (String, Option<i64>, Option<i64>);

/// Every case a sweep visits at the given rank.
fn sweep_cases(identity: Identity, rank: usize) -> Result<Vec<Case>, Failure> {
    let fpf = || {
        if rank % 2 == 1 {
            Err(Failure::Precondition(format!("I^FPF_{rank} needs an even rank")))
        } else {
            Ok(FpfInvolution::all(rank))
        }
    };
    let mut cases = Vec::new();
    match identity {
        Identity::LenartTransition => {
            for v in Permutation::all(rank) {
                cases.extend((1..=rank as i64).map(|k| (v.to_string(), None, Some(k))));
            }
        }
        Identity::BetaRescale => cases.extend(Permutation::all(rank).iter().map(|v| (v.to_string(), None, None))),
        Identity::SpTransition => {
            for z in fpf()? {
                for j in (1..=rank).filter(|&j| z.apply(j) > j) {
                    cases.push((z.to_string(), Some(j as i64), Some(z.apply(j) as i64)));
                }
            }
        }
        Identity::SpRecurrence => {
            cases.extend(fpf()?.iter().filter(|z| !z.is_theta()).map(|z| (z.to_string(), None, None)));
        }
        Identity::FGrass => {
            cases.extend(
                fpf()?
                    .iter()
                    .filter(|z| is_fpf_grassmannian(z).is_some())
                    .map(|z| (z.to_string(), None, None)),
            );
        }
        Identity::StableSpTransition => {
            for z in fpf()? {
                for offset in [0usize, 2] {
                    let v = ShiftedFpfInvolution::new(offset, z.clone())?;
                    let off = v.offset() as i64;
                    for j in 1 - off..=rank as i64 - off {
                        let k = v.apply(j);
                        if k > j {
                            cases.push((format!("{}@{}", v.base(), off), Some(j), Some(k)));
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn sweep(ctx: &Ctx, identity: Identity, rank: usize) -> Outcome {
    let cases = sweep_cases(identity, rank)?;
    let mut failed = Vec::new();
    for (element, j, k) in &cases {
        let check = run_identity(ctx, identity, element, *j, *k)?;
        if !check.holds {
            let mut label = element.clone();
            if let Some(j) = j {
                label.push_str(&format!(" j={j}"));
            }
            if let Some(k) = k {
                label.push_str(&format!(" k={k}"));
            }
            failed.push(label);
        }
    }
    let total = cases.len();
    let text = if failed.is_empty() {
        format!("all {total} identities PASS")
    } else {
        format!("{} of {total} identities FAIL\n{}", failed.len(), failed.join("\n"))
    };
    let value = json!({
        "identity": identity.name(),
        "rank": rank,
        "total": total,
        "failed": failed,
        "result": if failed.is_empty() { "PASS" } else { "FAIL" },
    });
    let out = ctx.render(text, value);
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn run(cli: Cli) -> Outcome {
    let window = Window::new(cli.nvars, cli.maxdeg).map_err(|e| Failure::Parse(e.to_string()))?;
    let ctx = Ctx { window, format: cli.format };
    match cli.command {
        Command::Compute { object, element } => compute(&ctx, object, &element),
        Command::Expand { object, element, basis, max_expansion_degree } => {
            expand(&ctx, object, &element, basis, max_expansion_degree)
        }
        Command::Verify { identity, element, j, k } => verify(&ctx, identity, &element, j, k),
        Command::Sweep { identity, rank } => sweep(&ctx, identity, rank),
    }
}

/// Writes to standard output, tolerating a closed pipe.
fn emit(out: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Verification(out) => emit(out),
                Failure::Parse(msg) | Failure::Precondition(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
