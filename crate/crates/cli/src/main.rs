//! `superchar`: exact pairings and character decompositions for `gl(m|n)`
//! from the command line. Results are JSON on stdout; `--latex` switches to
//! a LaTeX rendering where one exists. Errors are JSON objects on stderr.
//!
//! Exit codes: 0 success, 1 bad usage, input or failed computation, 2 when
//! the combinatorial and oracle pairings disagree.

mod cache;
mod spec;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use superchar::decompose::kac_constituents;
use superchar::latex::{combination_to_latex, diagram_to_latex, laurent_to_latex};
use superchar::pairing::pair_oracle_report;
use superchar::*;

use cache::{Cache, Entry};
use spec::{parse_diagram, CharSpec};

#[derive(Parser, Debug)]
#[command(name = "superchar", version, about = "Grothendieck-ring computations for gl(m|n)")]
struct Cli {
    /// Rank of the even block.
    #[arg(long, global = true, default_value_t = 2)]
    m: usize,
    /// Rank of the odd block.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Left end of the scan window for irr-char, euler-decompose and p-set.
    #[arg(long, global = true, allow_negative_numbers = true)]
    window: Option<i64>,
    /// Print LaTeX instead of JSON where available.
    #[arg(long, global = true)]
    latex: bool,
    /// Ignore SUPERCHAR_CACHE for this run.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Weight diagram utilities.
    Diagram {
        #[command(subcommand)]
        action: DiagramAction,
    },
    /// The bilinear form of two characters, e.g. `--left kac:0,-1 --right euler:-1`.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Series truncation order for the oracle; checked against order + 5.
        #[arg(long)]
        order: Option<u32>,
    },
    /// Kac flag of the projective cover P(f).
    ProjFlag {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// Irreducible constituents of the Kac module K(g).
    KacConstituents {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// Euler diagrams h with (P(f), E(h)) nonzero, with the pairing values.
    EulerSupport {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        /// Only the partially polynomial part, from the flag of P(f).
        #[arg(long)]
        pp: bool,
    },
    /// ch E(h) in the irreducible basis.
    EulerDecompose {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// ch L(f) in the Euler basis and as a Laurent polynomial.
    IrrChar {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// ch K(f) as a Laurent polynomial.
    KacChar {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// ch E(g) as a Laurent polynomial.
    EulerChar {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// The sets P_n^(m) with elements at or above the window.
    PSet {
        #[arg(long)]
        atypicality: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Closed form of ch L(a, b) for gl(2|2) in the Euler basis.
    Gl22Char {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum DiagramAction {
    /// Symbol row, weight and JSON form of a diagram.
    Show {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[arg(long, allow_negative_numbers = true)]
        lo: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        hi: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Combinatorial,
    Oracle,
    Both,
}

#[derive(Debug)]
pub struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: "usage",
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            kind: "input",
            message: message.into(),
        }
    }

    pub fn compute(e: impl std::fmt::Display) -> Self {
        Failure {
            kind: "computation",
            message: e.to_string(),
        }
    }

    fn report(&self) {
        eprintln!("{}", json!({ "error": self.kind, "message": self.message }));
    }
}

fn ok(json: Value, latex: Option<String>) -> Result<Entry, Failure> {
    Ok(Entry {
        exit: 0,
        json,
        latex,
    })
}

fn diagram_list_latex(ds: &[Diagram]) -> String {
    let items: Vec<String> = ds.iter().map(|d| format!("({})", diagram_to_latex(d))).collect();
    format!("\\{{{}\\}}", items.join(", "))
}

fn run_pair(
    cli: &Cli,
    left: &str,
    right: &str,
    method: Method,
    order: Option<u32>,
) -> Result<Entry, Failure> {
    let l = CharSpec::parse(left, cli.m, cli.n)?;
    let r = CharSpec::parse(right, cli.m, cli.n)?;
    let mut out = json!({ "left": l.to_string(), "right": r.to_string() });

    let combinatorial = match (&l, &r) {
        (CharSpec::Kac(f), CharSpec::Kac(g)) => Some(pair_kac_kac(f, g)),
        (CharSpec::Kac(f), CharSpec::Euler(g)) => Some(pair_kac_euler(f, g)),
        (CharSpec::Proj(f), CharSpec::Kac(g)) => Some(pair_proj_kac(f, g)),
        (CharSpec::Proj(f), CharSpec::Euler(g)) => Some(pair_proj_euler(f, g)),
        (CharSpec::Proj(f), CharSpec::Irr(g)) => Some(Ok(i64::from(f == g))),
        _ => None,
    };
    let combinatorial = match (method, combinatorial) {
        (Method::Oracle, _) => None,
        (Method::Combinatorial, None) => {
            return Err(Failure::usage(format!(
                "no combinatorial formula for ({l}, {r}); use --method oracle"
            )))
        }
        (_, Some(v)) => Some(v.map_err(Failure::compute)?),
        (Method::Both, None) => None,
    };
    if let Some(v) = combinatorial {
        out["combinatorial"] = json!(v);
    }

    let oracle = if method == Method::Combinatorial {
        None
    } else {
        let p = l.to_laurent(cli.window)?;
        let q = r.to_laurent(cli.window)?;
        let report = pair_oracle_report(&p, &q, order).map_err(Failure::compute)?;
        out["oracle"] = json!({
            "value": report.value.to_string(),
            "raw": report.raw.to_string(),
            "divisor": report.divisor.to_string(),
            "order": report.order,
        });
        Some(report.value)
    };

    let mut exit = 0;
    if let (Some(c), Some(o)) = (combinatorial, &oracle) {
        let agree = num_bigint::BigInt::from(c) == *o;
        out["agree"] = json!(agree);
        if !agree {
            exit = 2;
        }
    }
    let value = combinatorial
        .map(|c| c.to_string())
        .or_else(|| oracle.map(|o| o.to_string()))
        .unwrap_or_default();
    Ok(Entry {
        exit,
        json: out,
        latex: Some(value),
    })
}

fn run(cli: &Cli) -> Result<Entry, Failure> {
    let (m, n) = (cli.m, cli.n);
    let diagram = |s: &str| parse_diagram(s, m, n);
    match &cli.command {
        Command::Diagram {
            action: DiagramAction::Show { diagram: s, lo, hi },
        } => {
            let d = diagram(s)?;
            let (lo0, hi0) = d.support().unwrap_or((0, 0));
            let lo = lo.unwrap_or(lo0.min(d.pp_bound()) - 1);
            let hi = hi.unwrap_or(hi0.max(d.pp_bound()) + 1);
            if lo > hi {
                return Err(Failure::usage("--lo must not exceed --hi"));
            }
            let mut out = json!({
                "diagram": d,
                "crosses": d.crosses(),
                "partially_polynomial": d.is_partially_polynomial(),
                "render": d.render(lo, hi),
            });
            if d.kind() == Kind::Full {
                let w = diagram_to_weight(&d);
                out["weight"] = json!({ "lambda": w.lambda, "mu": w.mu });
                let partners: Vec<Value> = d
                    .crosses()
                    .into_iter()
                    .map(|a| json!([a, d.admissible_partner(a).expect("cross")]))
                    .collect();
                out["admissible"] = json!(partners);
            }
            ok(out, Some(diagram_to_latex(&d)))
        }
        Command::Pair {
            left,
            right,
            method,
            order,
        } => run_pair(cli, left, right, *method, *order),
        Command::ProjFlag { diagram: s } => {
            let d = diagram(s)?;
            let flag: Vec<Diagram> = proj_flag(&d).map_err(Failure::compute)?.into_iter().collect();
            let latex = diagram_list_latex(&flag);
            ok(json!({ "diagram": d, "flag": flag }), Some(latex))
        }
        Command::KacConstituents { diagram: s } => {
            let d = diagram(s)?;
            let found: Vec<Diagram> = kac_constituents(&d)
                .map_err(Failure::compute)?
                .into_iter()
                .collect();
            let latex = diagram_list_latex(&found);
            ok(json!({ "diagram": d, "constituents": found }), Some(latex))
        }
        Command::EulerSupport { diagram: s, pp } => {
            let f = diagram(s)?;
            let terms: Vec<(Diagram, i64)> = if *pp {
                euler_support_pp(&f)
                    .map_err(Failure::compute)?
                    .into_iter()
                    .map(|h| {
                        let v = pair_proj_euler(&f, &h).map_err(Failure::compute)?;
                        Ok((h, v))
                    })
                    .collect::<Result<_, Failure>>()?
            } else {
                euler_support(&f).map_err(Failure::compute)?.into_iter().collect()
            };
            let list: Vec<Value> = terms
                .iter()
                .map(|(h, v)| json!({ "diagram": h, "coeff": v }))
                .collect();
            ok(json!({ "diagram": f, "support": list }), None)
        }
        Command::EulerDecompose { diagram: s } => {
            let h = diagram(s)?;
            let c = euler_to_irr(&h, cli.window).map_err(Failure::compute)?;
            let latex = combination_to_latex(&c);
            ok(json!({ "diagram": h, "combination": c }), Some(latex))
        }
        Command::IrrChar { diagram: s } => {
            let f = diagram(s)?;
            let (c, p) = irr_char(&f, cli.window).map_err(Failure::compute)?;
            let latex = combination_to_latex(&c);
            ok(json!({ "diagram": f, "euler": c, "laurent": p }), Some(latex))
        }
        Command::KacChar { diagram: s } => {
            let f = diagram(s)?;
            let p = kac_char(&f).map_err(Failure::compute)?;
            let latex = laurent_to_latex(&p);
            ok(json!({ "diagram": f, "laurent": p }), Some(latex))
        }
        Command::EulerChar { diagram: s } => {
            let g = diagram(s)?.as_euler();
            let p = euler_char(&g).map_err(Failure::compute)?;
            let latex = laurent_to_latex(&p);
            ok(json!({ "diagram": g, "laurent": p }), Some(latex))
        }
        Command::PSet { atypicality, bound } => {
            let lo = cli.window.unwrap_or(-2 * *atypicality as i64 - 2);
            let sets = p_set(*atypicality, *bound, lo).map_err(Failure::compute)?;
            let sets: Vec<Vec<i64>> = sets.into_iter().collect();
            ok(
                json!({ "atypicality": atypicality, "bound": bound, "window": lo, "sets": sets }),
                None,
            )
        }
        Command::Gl22Char { a, b } => {
            let c = gl22_irr_char(*a, *b).map_err(Failure::compute)?;
            let latex = combination_to_latex(&c);
            ok(json!({ "a": a, "b": b, "combination": c }), Some(latex))
        }
    }
}

fn request(cli: &Cli) -> Value {
    json!({ "m": cli.m, "n": cli.n, "window": cli.window, "command": cli.command })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                // --help and --version
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            Failure::usage(e.to_string().trim().to_string()).report();
            return ExitCode::from(1);
        }
    };

    let cache = if cli.no_cache { None } else { Cache::from_env() };
    let key = Cache::key(&request(&cli));
    let cached = cache.as_ref().and_then(|c| c.get(&key));
    let entry = match cached {
        Some(entry) => entry,
        None => match run(&cli) {
            Ok(entry) => {
                if let Some(c) = &cache {
                    c.put(&key, &entry);
                }
                entry
            }
            Err(failure) => {
                failure.report();
                return ExitCode::from(1);
            }
        },
    };

    let text = match (&entry.latex, cli.latex) {
        (Some(latex), true) => latex.clone(),
        _ => serde_json::to_string_pretty(&entry.json).expect("JSON values serialize"),
    };
    // a closed pipe (e.g. `| head`) is not an error worth a panic
    let _ = writeln!(std::io::stdout(), "{text}");
    ExitCode::from(entry.exit as u8)
}
