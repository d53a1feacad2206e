//! Command-line front end.
//!
//! Every subcommand produces a plain-text rendering and a JSON payload; with
//! `--json` the payload is wrapped in an envelope
//! `{command, params, result, elapsed_ms, exact}` with sorted keys and big
//! integers as decimal strings. Exit codes: 0 success, 2 invalid input,
//! 3 cross-check failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Map, Value};

use crate::characters::{char_rectangular, MnEvaluator};
use crate::error::{Error, Result};
use crate::kostant::{
    c_exponent, direct_series, epsilon_bruteforce, epsilon_closed, epsilon_theorem, kostant_series,
    term_table, weyl_dim, DominantWeight,
};
use crate::partition::{BorderSequence, Partition};
use crate::quotient::{k_core, reconstruct, QuotientDecomposition};
use crate::rimhook::{enumerate_rht, RimHookTableau};
use crate::series::PowerSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "rimhook",
    version,
    about = "Exact partition, rim hook and character computations"
)]
struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Clear the character memo whenever it reaches this many entries.
    #[arg(long, global = true, value_name = "ENTRIES")]
    cache_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Border-sequence encoding and basic operations.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// k-core, k-quotient and median offsets.
    Quotient(KPartition),
    /// k-core only.
    Core(KPartition),
    /// Rebuild a partition from its k-core and k-quotient.
    Reconstruct(ReconstructArgs),
    /// Rim hook tableaux.
    #[command(subcommand)]
    Rht(RhtCmd),
    /// Character value χ^λ_μ.
    Char(CharArgs),
    /// Kostant's coefficient ε for an SU(k) weight.
    Eps(EpsArgs),
    /// Coefficients of φ(x)^{k²-1}.
    Eta(EtaArgs),
}

#[derive(Subcommand, Debug)]
enum PartitionCmd {
    /// Partition to border sequence.
    Encode {
        parts: String,
    },
    /// Border sequence to partition.
    Decode {
        sequence: String,
    },
    Conjugate {
        parts: String,
    },
    Frobenius {
        parts: String,
    },
}

#[derive(Args, Debug)]
struct KPartition {
    #[arg(long)]
    k: usize,
    parts: String,
}

#[derive(Args, Debug)]
struct ReconstructArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    core: String,
    /// Components separated by `;`, e.g. `1,1;;2`.
    #[arg(long, allow_hyphen_values = true)]
    components: String,
}

#[derive(Subcommand, Debug)]
enum RhtCmd {
    /// List every tableau of the given shape and type.
    Enumerate {
        #[arg(long)]
        shape: String,
        /// Hook lengths in order of entry; zeros allowed.
        #[arg(long = "type")]
        kind: String,
        /// Print at most this many tableaux.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Zero permutation, sign and height of one tableau.
    Zeroperm {
        /// Rows separated by `;`, entries by `,`, e.g. `1,1,4;3,4,4;3`.
        #[arg(long)]
        filling: String,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CharMethod {
    Mn,
    Reduce,
    Rect,
    /// Murnaghan-Nakayama and the quotient reduction, compared.
    Both,
}

#[derive(Args, Debug)]
struct CharArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: Option<String>,
    /// Divisor for `reduce` and `rect`; defaults to the gcd of the parts of μ.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = CharMethod::Mn)]
    method: CharMethod,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EpsMethod {
    Closed,
    Theorem,
    Brute,
    /// All three, compared.
    All,
}

#[derive(Args, Debug)]
struct EpsArgs {
    #[arg(long)]
    k: usize,
    /// Weight coordinates; missing trailing coordinates are zero.
    #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
    weight: Option<String>,
    /// A partition with at most k parts representing the weight.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = EpsMethod::Closed)]
    method: EpsMethod,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EtaMethod {
    Kostant,
    Direct,
    Both,
}

#[derive(Args, Debug)]
struct EtaArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value_t = EtaMethod::Kostant)]
    method: EtaMethod,
    /// Also list the nonzero terms ε · dim · x^c.
    #[arg(long)]
    table: bool,
}

struct Outcome {
    command: String,
    params: Value,
    text: String,
    result: Value,
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let evaluator = match cli.cache_cap {
        Some(cap) => MnEvaluator::with_cap(cap),
        None => MnEvaluator::new(),
    };
    let start = Instant::now();
    match dispatch(&cli.command, &evaluator) {
        Ok(o) => {
            let written = if cli.json {
                let mut env = Map::new();
                env.insert("command".into(), Value::String(o.command));
                env.insert("params".into(), o.params);
                env.insert("result".into(), o.result);
                env.insert(
                    "elapsed_ms".into(),
                    json!(start.elapsed().as_millis() as u64),
                );
                env.insert("exact".into(), Value::Bool(true));
                let text = serde_json::to_string_pretty(&Value::Object(env))
                    .expect("JSON values serialize");
                writeln!(out, "{text}")
            } else {
                write!(out, "{}", o.text)
            };
            if written.is_err() {
                return EXIT_INVALID;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CrossCheck(_) => EXIT_MISMATCH,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn dispatch(cmd: &Command, ev: &MnEvaluator) -> Result<Outcome> {
    match cmd {
        Command::Partition(p) => partition_cmd(p),
        Command::Quotient(a) => quotient_cmd(a),
        Command::Core(a) => core_cmd(a),
        Command::Reconstruct(a) => reconstruct_cmd(a),
        Command::Rht(r) => rht_cmd(r),
        Command::Char(a) => char_cmd(a, ev),
        Command::Eps(a) => eps_cmd(a),
        Command::Eta(a) => eta_cmd(a),
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    if !s.is_ascii() {
        return Err(Error::InvalidPartition(format!(
            "{s:?} contains non-ASCII characters"
        )));
    }
    s.parse()
}

/// Comma-separated nonnegative integers, zeros allowed.
fn parse_composition(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .enumerate()
        .map(|(i, x)| {
            x.trim().parse::<u32>().map_err(|_| {
                Error::InvalidInput(format!(
                    "entry at index {i} ({x:?}) is not a nonnegative integer"
                ))
            })
        })
        .collect()
}

fn parse_filling(s: &str) -> Result<Vec<Vec<u32>>> {
    s.split(';')
        .filter(|r| !r.trim().is_empty())
        .map(parse_composition)
        .collect()
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn show_partition(p: &Partition) -> String {
    if p.is_empty() {
        "∅".into()
    } else {
        p.to_string()
    }
}

fn partition_cmd(cmd: &PartitionCmd) -> Result<Outcome> {
    let (name, input, text, result) = match cmd {
        PartitionCmd::Encode { parts } => {
            let s = parse_partition(parts)?.encode();
            let r = s.render();
            (
                "partition encode",
                parts,
                r.clone(),
                json!({ "sequence": r, "median_offset": s.median_offset() }),
            )
        }
        PartitionCmd::Decode { sequence } => {
            let p = sequence.parse::<BorderSequence>()?.decode();
            (
                "partition decode",
                sequence,
                show_partition(&p),
                json!({ "partition": partition_json(&p) }),
            )
        }
        PartitionCmd::Conjugate { parts } => {
            let p = parse_partition(parts)?.conjugate();
            (
                "partition conjugate",
                parts,
                show_partition(&p),
                json!({ "partition": partition_json(&p) }),
            )
        }
        PartitionCmd::Frobenius { parts } => {
            let f = parse_partition(parts)?.frobenius();
            let result = json!({ "alphas": f.alphas, "betas": f.betas, "rank": f.rank() });
            ("partition frobenius", parts, f.to_string(), result)
        }
    };
    Ok(Outcome {
        command: name.into(),
        params: json!({ "input": input }),
        text: format!("{text}\n"),
        result,
    })
}

fn quotient_cmd(a: &KPartition) -> Result<Outcome> {
    let d = QuotientDecomposition::new(&parse_partition(&a.parts)?, a.k)?;
    let comps: Vec<String> = d.components.iter().map(show_partition).collect();
    let shifts: Vec<String> = d.median_shifts.iter().map(|s| s.to_string()).collect();
    let text = format!(
        "core: {}\nquotient: {}\nmedian shifts: {}\n",
        show_partition(&d.core),
        comps.join("; "),
        shifts.join(",")
    );
    Ok(Outcome {
        command: "quotient".into(),
        params: json!({ "k": a.k, "partition": a.parts }),
        text,
        result: json!({
            "core": partition_json(&d.core),
            "components": d.components.iter().map(partition_json).collect::<Vec<_>>(),
            "median_shifts": d.median_shifts,
        }),
    })
}

fn core_cmd(a: &KPartition) -> Result<Outcome> {
    let core = k_core(&parse_partition(&a.parts)?, a.k)?;
    Ok(Outcome {
        command: "core".into(),
        params: json!({ "k": a.k, "partition": a.parts }),
        text: format!("{}\n", show_partition(&core)),
        result: json!({ "core": partition_json(&core), "empty": core.is_empty() }),
    })
}

fn reconstruct_cmd(a: &ReconstructArgs) -> Result<Outcome> {
    let core = parse_partition(&a.core)?;
    let components: Vec<Partition> = a
        .components
        .split(';')
        .map(|c| parse_partition(c.trim()))
        .collect::<Result<_>>()?;
    let p = reconstruct(&core, &components, a.k)?;
    Ok(Outcome {
        command: "reconstruct".into(),
        params: json!({ "k": a.k, "core": a.core, "components": a.components }),
        text: format!("{}\n", show_partition(&p)),
        result: json!({ "partition": partition_json(&p) }),
    })
}

fn filling_text(rows: &[Vec<u32>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect();
    rows.join(";")
}

fn tableau_json(t: &RimHookTableau) -> Value {
    let word = t.zero_permutation();
    json!({
        "filling": t.filling(),
        "height": t.height(),
        "zero_permutation": word.word(),
        "sign": word.sign(),
    })
}

fn rht_cmd(cmd: &RhtCmd) -> Result<Outcome> {
    match cmd {
        RhtCmd::Enumerate { shape, kind, limit } => {
            let shape_p = parse_partition(shape)?;
            let kind_v = parse_composition(kind)?;
            let all = enumerate_rht(&shape_p, &kind_v)?;
            let shown = limit.unwrap_or(all.len()).min(all.len());
            let mut text = String::new();
            for t in &all[..shown] {
                let _ = writeln!(
                    text,
                    "{}  height={}  zero_permutation={}",
                    filling_text(&t.filling()),
                    t.height(),
                    t.zero_permutation()
                );
            }
            if shown < all.len() {
                let _ = writeln!(text, "showing {shown} of {} tableaux", all.len());
            } else {
                let noun = if all.len() == 1 {
                    "tableau"
                } else {
                    "tableaux"
                };
                let _ = writeln!(text, "{} {noun}", all.len());
            }
            Ok(Outcome {
                command: "rht enumerate".into(),
                params: json!({ "shape": shape, "type": kind, "limit": limit }),
                text,
                result: json!({
                    "total": all.len(),
                    "shown": shown,
                    "tableaux": all[..shown].iter().map(tableau_json).collect::<Vec<_>>(),
                }),
            })
        }
        RhtCmd::Zeroperm { filling } => {
            let t = RimHookTableau::from_filling(&parse_filling(filling)?)?;
            let word = t.zero_permutation();
            let text = format!(
                "zero_permutation: {word}\nsign: {}\nheight: {}\ncycle type: {}\n",
                word.sign(),
                t.height(),
                show_partition(&word.cycle_type())
            );
            let mut result = tableau_json(&t);
            result["shape"] = partition_json(t.shape());
            result["type"] = json!(t.kind());
            Ok(Outcome {
                command: "rht zeroperm".into(),
                params: json!({ "filling": filling }),
                text,
                result,
            })
        }
    }
}

fn common_divisor(mu: &Partition) -> usize {
    mu.parts().iter().fold(0u32, |g, &x| g.gcd(&x)) as usize
}

fn divided(mu: &Partition, k: usize) -> Result<Partition> {
    if k < 2 || mu.parts().iter().any(|&x| !(x as usize).is_multiple_of(k)) {
        return Err(Error::InvalidParameter(format!(
            "every part of μ = {mu} must be divisible by k = {k} ≥ 2"
        )));
    }
    Partition::new(mu.parts().iter().map(|&x| x / k as u32).collect())
}

fn char_cmd(a: &CharArgs, ev: &MnEvaluator) -> Result<Outcome> {
    let lambda = parse_partition(&a.lambda)?;
    let mu = a.mu.as_deref().map(parse_partition).transpose()?;
    let need_mu = || {
        mu.clone()
            .ok_or_else(|| Error::InvalidInput(format!("--mu is required for {:?}", a.method)))
    };
    let pick_k = |mu: &Partition| a.k.unwrap_or_else(|| common_divisor(mu));
    let (value, k_used) = match a.method {
        CharMethod::Mn => (ev.character(&lambda, &need_mu()?)?, None),
        CharMethod::Reduce => {
            let mu = need_mu()?;
            let k = pick_k(&mu);
            (
                ev.littlewood_reduce(&lambda, k, &divided(&mu, k)?)?,
                Some(k),
            )
        }
        CharMethod::Both => {
            let mu = need_mu()?;
            let k = pick_k(&mu);
            let direct = ev.character(&lambda, &mu)?;
            let reduced = ev.littlewood_reduce(&lambda, k, &divided(&mu, k)?)?;
            if direct != reduced {
                return Err(Error::CrossCheck(format!(
                    "χ^{lambda}_{mu}: Murnaghan-Nakayama gives {direct}, the {k}-quotient reduction gives {reduced}"
                )));
            }
            (direct, Some(k))
        }
        CharMethod::Rect => {
            let k = match (&mu, a.k) {
                (_, Some(k)) => k,
                (Some(m), None) => m.part(0) as usize,
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "rect needs --k or a rectangular --mu".into(),
                    ))
                }
            };
            if let Some(m) = &mu {
                let expected =
                    Partition::rectangle(k as u32, (lambda.size() / k.max(1) as u64) as usize);
                if m != &expected {
                    return Err(Error::InvalidInput(format!(
                        "μ = {m} is not ({k}^p) with kp = |λ|"
                    )));
                }
            }
            (char_rectangular(&lambda, k)?, Some(k))
        }
    };
    let mut text = format!("{value}\n");
    if a.method == CharMethod::Both {
        text.push_str("MATCH\n");
    }
    Ok(Outcome {
        command: "char".into(),
        params: json!({
            "lambda": a.lambda,
            "mu": a.mu,
            "k": k_used,
            "method": format!("{:?}", a.method).to_lowercase(),
        }),
        text,
        result: json!({ "value": big(&value) }),
    })
}

fn eps_cmd(a: &EpsArgs) -> Result<Outcome> {
    let (weight, lambda) = match (&a.weight, &a.lambda) {
        (Some(w), _) => {
            let mut coords = parse_composition(w)?;
            if coords.len() > a.k.saturating_sub(1) {
                return Err(Error::InvalidInput(format!(
                    "an SU({}) weight has at most {} coordinates",
                    a.k,
                    a.k.saturating_sub(1)
                )));
            }
            coords.resize(a.k.saturating_sub(1), 0);
            let weight = DominantWeight::new(a.k, coords)?;
            let lambda = weight.representative();
            (weight, lambda)
        }
        (None, Some(l)) => {
            let lambda = parse_partition(l)?;
            (DominantWeight::from_partition(&lambda, a.k)?, lambda)
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "one of --weight or --lambda is required".into(),
            ))
        }
    };
    let value: BigInt = match a.method {
        EpsMethod::Closed => epsilon_closed(&weight).into(),
        EpsMethod::Theorem => epsilon_theorem(&lambda, a.k)?.into(),
        EpsMethod::Brute => epsilon_bruteforce(&lambda, a.k)?,
        EpsMethod::All => {
            let closed = BigInt::from(epsilon_closed(&weight));
            let theorem = BigInt::from(epsilon_theorem(&lambda, a.k)?);
            let brute = epsilon_bruteforce(&lambda, a.k)?;
            if closed != theorem || theorem != brute {
                return Err(Error::CrossCheck(format!(
                    "ε{weight}: closed {closed}, theorem {theorem}, brute force {brute}"
                )));
            }
            closed
        }
    };
    let c = c_exponent(&weight);
    let mut text = format!("{value}\n");
    if a.method == EpsMethod::All {
        text.push_str("MATCH\n");
    }
    Ok(Outcome {
        command: "eps".into(),
        params: json!({
            "k": a.k,
            "weight": a.weight,
            "lambda": a.lambda,
            "method": format!("{:?}", a.method).to_lowercase(),
        }),
        text,
        result: json!({
            "epsilon": big(&value),
            "weight": weight.coords(),
            "dim": weyl_dim(&weight).to_string(),
            "exponent": c.to_string(),
        }),
    })
}

fn series_json(s: &PowerSeries) -> Value {
    json!({
        "order": s.order(),
        "coefficients": s.coeffs().iter().map(big).collect::<Vec<_>>(),
        "rendered": s.render(),
    })
}

fn eta_cmd(a: &EtaArgs) -> Result<Outcome> {
    let series = match a.method {
        EtaMethod::Kostant => kostant_series(a.k, a.order)?,
        EtaMethod::Direct => direct_series(a.k, a.order)?,
        EtaMethod::Both => {
            let (kostant, direct) = rayon::join(
                || kostant_series(a.k, a.order),
                || direct_series(a.k, a.order),
            );
            let (kostant, direct) = (kostant?, direct?);
            if let Some(n) = (0..=a.order).find(|&n| kostant.coeff(n) != direct.coeff(n)) {
                return Err(Error::CrossCheck(format!(
                    "coefficient of x^{n}: weight sum {} but φ-power {}",
                    kostant.coeff(n),
                    direct.coeff(n)
                )));
            }
            kostant
        }
    };
    let mut text = format!("{}\n", series.render());
    let mut result = series_json(&series);
    if a.table {
        let terms = term_table(a.k, a.order)?;
        let _ = writeln!(
            text,
            "{:<20} {:>3} {:>24} {:>6}",
            "weight", "eps", "dim", "c"
        );
        for t in &terms {
            let _ = writeln!(
                text,
                "{:<20} {:>3} {:>24} {:>6}",
                t.weight.to_string(),
                t.epsilon,
                t.dim.to_string(),
                t.exponent
            );
        }
        result["table"] = Value::Array(
            terms
                .iter()
                .map(|t| {
                    json!({
                        "weight": t.weight.coords(),
                        "epsilon": t.epsilon,
                        "dim": t.dim.to_string(),
                        "exponent": t.exponent,
                    })
                })
                .collect(),
        );
    }
    if a.method == EtaMethod::Both {
        text.push_str("MATCH\n");
        result["match"] = Value::Bool(true);
    }
    Ok(Outcome {
        command: "eta".into(),
        params: json!({
            "k": a.k,
            "order": a.order,
            "method": format!("{:?}", a.method).to_lowercase(),
            "table": a.table,
        }),
        text,
        result,
    })
}
