use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};
use tetraposet::arrays::enumerate_arrays;
use tetraposet::identities::{verify, Identity};
use tetraposet::poly::closed_form;
use tetraposet::{
    Asm, Budget, ColorSet, Error, Method, MonotoneTriangle, OrderIdeal, QPoly, StaircaseArray, Subposet, Tournament,
    Tsscpp, Vertex,
};

/// Order ideals of the tetrahedral poset and the objects they encode.
#[derive(Parser)]
#[command(name = "tetraposet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count order ideals of T_n(S), optionally with the rank generating function.
    Count {
        #[arg(long)]
        n: usize,
        /// Colors as a compact string over r,b,g,o,y,s, e.g. "gybo".
        #[arg(long, default_value = "")]
        colors: String,
        /// Also print the rank generating function.
        #[arg(long)]
        q: bool,
        #[arg(long, value_enum, default_value_t = CountMethod::Dp)]
        method: CountMethod,
        /// Use the dual poset.
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        json: bool,
    },
    /// Convert an object between ASM, monotone triangle, staircase array, TSSCPP, tournament and ideal.
    Convert {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        /// JSON input file, or "-" for stdin.
        #[arg(long)]
        input: PathBuf,
        /// Color set of the poset, needed for ideals.
        #[arg(long)]
        colors: Option<String>,
        /// Order, needed when converting from an ideal.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check an identity exactly and print one JSON report per line.
    Verify {
        #[arg(long, value_parser = parse_identity)]
        identity: Identity,
        #[arg(long)]
        n: usize,
        /// Report elapsed_ms as 0 so output is byte-for-byte reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Write the colored Hasse diagram as Graphviz DOT.
    ExportDot {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        colors: String,
        #[arg(long)]
        dual: bool,
        /// Output file; stdout if omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the poset as JSON.
    ExportJson {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        colors: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Stream every object of a kind as JSON lines.
    #[command(visible_alias = "seed-list", long_flag_alias = "seed-list")]
    Enumerate {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Color set for ideals and arrays.
        #[arg(long)]
        colors: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Enum,
    Dp,
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Asm,
    Mt,
    Array,
    Tsscpp,
    Tournament,
    Ideal,
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConstraintMismatch { .. } => 4,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(1, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn colors_arg(s: &str) -> Result<ColorSet, Failure> {
    let c: ColorSet = s.parse()?;
    c.check_admissible()?;
    Ok(c)
}

fn coeff_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Writes to the file if given, otherwise stdout.
fn emit(output: Option<&PathBuf>, text: &str) -> Outcome {
    match output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn count(n: usize, colors: &str, with_q: bool, method: CountMethod, dual: bool, as_json: bool) -> Outcome {
    let colors = colors_arg(colors)?;
    let budget = Budget::from_env()?;
    let (total, gf) = match method {
        CountMethod::Formula => {
            let form = closed_form(n, colors)?
                .ok_or_else(|| Failure::new(3, format!("no closed formula known for {colors}")))?;
            let gf = match (with_q, form.rank_gf) {
                (false, _) => None,
                (true, None) => {
                    return Err(Failure::new(
                        3,
                        format!("no rank generating function formula known for {colors}"),
                    ))
                }
                (true, Some(f)) if dual => {
                    let size = Subposet::build(n, colors)?.len() as u32;
                    Some(f.reversed(size))
                }
                (true, Some(f)) => Some(f),
            };
            (form.count, gf)
        }
        CountMethod::Enum | CountMethod::Dp => {
            let method = if method == CountMethod::Enum {
                Method::Enumerate
            } else {
                Method::Dp
            };
            let mut p = Subposet::build(n, colors)?;
            if dual {
                p = p.dual();
            }
            if with_q {
                let f = p.rank_gf_by(method, &budget)?;
                (f.at_one().to_biguint().expect("nonnegative count"), Some(f))
            } else {
                (p.count_ideals_by(method, &budget)?, None)
            }
        }
    };
    let text = if as_json {
        let mut v = json!({
            "n": n,
            "colors": colors,
            "dual": dual,
            "count": total.to_string(),
        });
        if let Some(f) = &gf {
            v["rank_gf"] = json!(coeff_strings(f));
        }
        format!("{v}\n")
    } else {
        match &gf {
            Some(f) => format!("{total}\n{f}\n"),
            None => format!("{total}\n"),
        }
    };
    emit(None, &text)
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::new(2, format!("invalid input: {e}")))
}

fn poset_for_ideal(n: usize, colors: Option<&str>) -> Result<Subposet, Failure> {
    let colors = colors.ok_or_else(|| Failure::new(2, "--colors is required for ideals"))?;
    Ok(Subposet::build(n, colors_arg(colors)?)?)
}

fn convert(from: Kind, to: Kind, input: &PathBuf, colors: Option<&str>, n: Option<usize>) -> Outcome {
    let text = read_input(input)?;
    let array = match from {
        Kind::Asm => parse::<Asm>(&text)?.to_array(),
        Kind::Mt => parse::<MonotoneTriangle>(&text)?.to_array(),
        Kind::Array => parse::<StaircaseArray>(&text)?,
        Kind::Tsscpp => parse::<Tsscpp>(&text)?.to_array(),
        Kind::Tournament => parse::<Tournament>(&text)?.to_array(),
        Kind::Ideal => {
            let n = n.ok_or_else(|| Failure::new(2, "--n is required when converting from an ideal"))?;
            let p = poset_for_ideal(n, colors)?;
            let ideal = OrderIdeal::new(&p, parse::<Vec<Vertex>>(&text)?)?;
            p.ideal_to_array(&ideal)?
        }
    };
    let out = match to {
        Kind::Asm => serde_json::to_value(Asm::from_array(&array)?),
        Kind::Mt => serde_json::to_value(MonotoneTriangle::from_array(&array)?),
        Kind::Array => serde_json::to_value(&array),
        Kind::Tsscpp => serde_json::to_value(Tsscpp::from_array(&array)?),
        Kind::Tournament => serde_json::to_value(Tournament::from_array(&array)?),
        Kind::Ideal => {
            let p = poset_for_ideal(array.n(), colors)?;
            serde_json::to_value(p.array_to_ideal(&array)?)
        }
    }
    .expect("objects serialize");
    emit(None, &format!("{out}\n"))
}

fn run_verify(identity: Identity, n: usize, no_timing: bool) -> Outcome {
    let budget = Budget::from_env()?;
    let reports = verify(identity, n, &budget)?;
    let mut text = String::new();
    let mut mismatches = Vec::new();
    for mut r in reports {
        if no_timing {
            r.elapsed_ms = 0;
        }
        if !r.is_equal() {
            mismatches.push(format!(
                "{} at {}",
                r.identity,
                r.first_diff_monomial.as_deref().unwrap_or("?")
            ));
        }
        text.push_str(&serde_json::to_string(&r).expect("reports serialize"));
        text.push('\n');
    }
    emit(None, &text)?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(5, format!("identity mismatch: {}", mismatches.join(", "))))
    }
}

fn enumerate(kind: Kind, n: usize, colors: Option<&str>, output: Option<&PathBuf>) -> Outcome {
    let budget = Budget::from_env()?;
    let lines: Box<dyn Iterator<Item = Result<Value, Error>>> = match kind {
        Kind::Asm => Box::new(Asm::enumerate(n, &budget)?.map(|a| Ok(serde_json::to_value(a).unwrap()))),
        Kind::Mt => {
            Box::new(Asm::enumerate(n, &budget)?.map(|a| Ok(serde_json::to_value(a.to_monotone_triangle()).unwrap())))
        }
        Kind::Tsscpp => Box::new(Tsscpp::enumerate(n, &budget)?.map(|t| t.map(|t| serde_json::to_value(t).unwrap()))),
        Kind::Tournament => {
            budget_check(&budget, &(BigUint::from(1u32) << (n * n.saturating_sub(1) / 2)))?;
            Box::new(Tournament::enumerate(n).map(|t| Ok(serde_json::to_value(t).unwrap())))
        }
        Kind::Array => {
            let colors = match colors {
                Some(c) => colors_arg(c)?,
                None => return Err(Failure::new(2, "--colors is required for arrays")),
            };
            Box::new(enumerate_arrays(n, colors, &budget)?.map(|a| Ok(serde_json::to_value(a).unwrap())))
        }
        Kind::Ideal => {
            let p = poset_for_ideal(n, colors)?;
            Box::new(
                p.enumerate_ideals(&budget)?
                    .map(|i| Ok(serde_json::to_value(i).unwrap())),
            )
        }
    };
    let mut text = String::new();
    for line in lines {
        text.push_str(&line?.to_string());
        text.push('\n');
    }
    emit(output, &text)
}

fn budget_check(budget: &Budget, needed: &BigUint) -> Result<(), Failure> {
    let limit = BigUint::from(budget.max_items);
    if *needed > limit {
        return Err(Failure::new(
            2,
            format!("resource budget exceeded: {needed} objects > limit {limit}"),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Count {
            n,
            colors,
            q,
            method,
            dual,
            json,
        } => count(n, &colors, q, method, dual, json),
        Command::Convert {
            from,
            to,
            input,
            colors,
            n,
        } => convert(from, to, &input, colors.as_deref(), n),
        Command::Verify { identity, n, no_timing } => run_verify(identity, n, no_timing),
        Command::ExportDot {
            n,
            colors,
            dual,
            output,
        } => {
            let mut p = Subposet::build(n, colors_arg(&colors)?)?;
            if dual {
                p = p.dual();
            }
            emit(output.as_ref(), &p.to_dot())
        }
        Command::ExportJson { n, colors, output } => {
            let p = Subposet::build(n, colors_arg(&colors)?)?;
            emit(output.as_ref(), &format!("{}\n", p.to_json()))
        }
        Command::Enumerate {
            kind,
            n,
            colors,
            output,
        } => enumerate(kind, n, colors.as_deref(), output.as_ref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
