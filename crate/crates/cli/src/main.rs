use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use plantree::algebra::{coproduct_poly, gamma_set, ShuffleOracle, Shuffler, TensorStyle, TreePolynomial};
use plantree::series::{exp_coefficient, exp_series};
use plantree::tree::{enumerate_trees, BasisElement};
use plantree::verify::{self, Suite};
use plantree::Error;

const EXIT_VIOLATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_DOMAIN: u8 = 4;

/// Planar tree polynomials: shuffle, co-addition and the generic exponential.
#[derive(Parser)]
#[command(name = "plantree", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the tensor sign as `(x)`.
    #[arg(long, global = true)]
    ascii: bool,

    /// Worker threads for verification sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle product of two trees.
    Shuffle {
        left: String,
        right: String,
        /// Cross-check against the enumerative definition.
        #[arg(long)]
        oracle: bool,
    },
    /// Co-addition of a polynomial (read from stdin when omitted).
    Coproduct { expr: Option<String> },
    /// Coefficients of the generic exponential.
    Exp {
        #[command(flatten)]
        target: ExpTarget,
        /// Evaluate at q = k (k >= 2).
        #[arg(long = "q")]
        q: Option<i64>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_DEGREE)]
        degree: usize,
    },
    /// List the trees with a given number of leaves.
    Enumerate {
        #[arg(long)]
        leaves: usize,
        #[arg(long)]
        count: bool,
    },
    /// List the covering pairs with k elements and sides of sizes m and n.
    Gamma { k: usize, m: usize, n: usize },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ExpTarget {
    /// A single coefficient a(T).
    #[arg(long)]
    coeff: Option<String>,
    /// The series up to this degree.
    #[arg(long)]
    series: Option<usize>,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(Suite::ALL.map(Suite::name))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

fn domain(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_DOMAIN,
        message: message.into(),
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !out.text.is_empty() {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let style = if cli.ascii { TensorStyle::Ascii } else { TensorStyle::Unicode };
    match &cli.command {
        Command::Shuffle { left, right, oracle } => shuffle(cli.json, left, right, *oracle),
        Command::Coproduct { expr } => {
            let text = match expr {
                Some(e) => e.clone(),
                None => read_stdin()?,
            };
            let f: TreePolynomial = text.trim().parse()?;
            let delta = coproduct_poly(&f);
            Ok(Output::ok(if cli.json {
                json_string(&delta.to_json_terms())
            } else {
                delta.display(style).to_string()
            }))
        }
        Command::Exp { target, q } => exp(cli.json, target, *q),
        Command::Verify { suite, degree } => {
            let suite: Suite = suite.parse()?;
            let reports = verify::run(suite, *degree, cli.jobs as usize)?;
            let passed = reports.iter().all(|r| r.passed());
            let text = if cli.json || !passed {
                json_string(&reports)
            } else {
                reports
                    .iter()
                    .map(|r| format!("{} up to degree {}: pass ({} cases)", r.identity, r.cap, r.checked))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok(Output {
                text,
                code: if passed { 0 } else { EXIT_VIOLATION },
            })
        }
        Command::Enumerate { leaves, count } => {
            if *leaves < 1 {
                return Err(domain("the number of leaves must be at least 1"));
            }
            let trees = enumerate_trees(*leaves);
            Ok(Output::ok(match (*count, cli.json) {
                (true, _) => trees.len().to_string(),
                (false, true) => json_string(&trees.iter().map(ToString::to_string).collect::<Vec<_>>()),
                (false, false) => trees.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
            }))
        }
        Command::Gamma { k, m, n } => {
            let pairs = gamma_set(*k, *m, *n);
            Ok(Output::ok(if cli.json {
                json_string(&pairs)
            } else {
                pairs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
            }))
        }
    }
}

fn shuffle(as_json: bool, left: &str, right: &str, oracle: bool) -> Result<Output, Failure> {
    let s: BasisElement = left.parse()?;
    let t: BasisElement = right.parse()?;
    let product = Shuffler::new().trees(&s, &t);
    let agree = if oracle {
        let expected = ShuffleOracle::new(s.degree() + t.degree()).shuffle(&s, &t)?;
        Some(&expected == product.as_ref())
    } else {
        None
    };
    let text = if as_json {
        let terms = serde_json::to_value(product.to_json_terms()).expect("terms serialize");
        match agree {
            None => terms.to_string(),
            Some(a) => json!({ "terms": terms, "oracle": if a { "agree" } else { "mismatch" } }).to_string(),
        }
    } else {
        match agree {
            None => product.to_string(),
            Some(a) => format!("{product}\noracle: {}", if a { "agree" } else { "mismatch" }),
        }
    };
    Ok(Output {
        text,
        code: if agree == Some(false) { EXIT_MISMATCH } else { 0 },
    })
}

fn exp(as_json: bool, args: &ExpTarget, q: Option<i64>) -> Result<Output, Failure> {
    if let Some(k) = q {
        if k < 2 {
            return Err(domain(format!("specialization point must be at least 2, got {k}")));
        }
    }
    if let Some(tree) = &args.coeff {
        let t: BasisElement = tree.parse()?;
        let a = exp_coefficient(&t);
        let value = match q {
            Some(k) => a.evaluate_at(k)?.to_string(),
            None => a.to_string(),
        };
        return Ok(Output::ok(if as_json {
            json!({ "tree": t.to_string(), "coeff": value }).to_string()
        } else {
            value
        }));
    }
    let cap = args.series.expect("clap requires --coeff or --series");
    let series = exp_series(cap);
    let (text, terms): (String, Value) = match q {
        Some(k) => {
            let s = series.specialize(k)?;
            (s.body().to_string(), serde_json::to_value(s.body().to_json_terms()).expect("terms serialize"))
        }
        None => (series.body().to_string(), serde_json::to_value(series.body().to_json_terms()).expect("terms serialize")),
    };
    Ok(Output::ok(if as_json { terms.to_string() } else { text }))
}

fn read_stdin() -> Result<String, Failure> {
    let mut buf = String::new();
    io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| domain(format!("reading stdin: {e}")))?;
    Ok(buf)
}

fn json_string<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}
