use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use chromsym::graphs::Graph;
use chromsym::oracle::{csf_bruteforce, DEFAULT_EDGE_BUDGET};
use chromsym::serial::{to_json, to_text};
use chromsym::{Composition, ESymFunc, Error, Family, FamilyKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

/// Chromatic symmetric functions in the elementary basis.
#[derive(Parser)]
#[command(name = "chromsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form expansion for a family instance.
    Expand {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare closed forms with brute force over every instance of order <= max-n.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        edge_budget: usize,
    },
    /// Compute an expansion by brute force from an edge-list file or a family.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        edge_budget: usize,
    },
    /// Report the minimum coefficient and whether the expansion is e-positive.
    Positivity {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        edge_budget: usize,
    },
    /// List the supported families and their parameters.
    ListFamilies,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family tag, see `list-families`.
    #[arg(long)]
    family: String,
    #[command(flatten)]
    params: Params,
}

/// Named family parameters; which ones apply depends on the family.
#[derive(Args, Clone)]
struct Params {
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated parts for `k-chain`, e.g. `3,2,4`.
    #[arg(long)]
    parts: Option<String>,
}

#[derive(Args)]
struct Input {
    /// Edge-list file: vertex count on the first line, then one `u v` per line.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[arg(long, required_unless_present = "graph")]
    family: Option<String>,
    #[command(flatten)]
    params: Params,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "json")]
    Structured,
}

enum Failure {
    Usage(String),
    Mismatch,
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EdgeBudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl FamilyArgs {
    fn build(&self) -> Result<Family, Error> {
        let p = &self.params;
        let values = [
            ("a", p.a),
            ("b", p.b),
            ("c", p.c),
            ("g", p.g),
            ("h", p.h),
            ("k", p.k),
            ("l", p.l),
            ("n", p.n),
        ];
        let params: BTreeMap<String, usize> = values
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
            .collect();
        let parts = p.parts.as_deref().map(parse_parts).transpose()?;
        Family::from_params(&self.family, &params, parts.as_ref())
    }
}

impl Input {
    fn family_args(&self) -> Option<FamilyArgs> {
        self.family.as_ref().map(|family| FamilyArgs {
            family: family.clone(),
            params: self.params.clone(),
        })
    }

    fn graph(&self) -> Result<Graph, Failure> {
        match (&self.graph, self.family_args()) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                Graph::parse_edge_list(&text)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
            }
            (None, Some(args)) => Ok(args.build()?.graph()?),
            (None, None) => Err(Failure::Usage(
                "either --graph or --family is required".into(),
            )),
        }
    }
}

fn parse_parts(s: &str) -> Result<Composition, Error> {
    let bad = || Error::Parse {
        line: 1,
        message: format!("bad --parts value `{s}`"),
    };
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Composition::new(parts).ok_or_else(bad)
}

fn render(x: &ESymFunc, format: Format) -> String {
    match format {
        Format::Text => to_text(x),
        Format::Structured => to_json(x),
    }
}

fn verify(tag: &str, max_n: usize, budget: usize) -> Result<(), Failure> {
    let kind = FamilyKind::from_tag(tag)?;
    let grid = kind.grid(max_n);
    let outcomes: Vec<Result<bool, Error>> = grid
        .par_iter()
        .map(|fam| {
            let oracle = csf_bruteforce(&fam.graph()?, budget)?;
            Ok(fam.evaluate()? == oracle)
        })
        .collect();

    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    for (fam, outcome) in grid.iter().zip(outcomes) {
        match outcome {
            Ok(true) => {
                passed += 1;
                println!("pass {fam}");
            }
            Ok(false) => {
                failed += 1;
                println!("FAIL {fam}");
            }
            Err(e @ Error::EdgeBudgetExceeded { .. }) => {
                skipped += 1;
                println!("skip {fam}: {e}");
                eprintln!("warning: skipped {fam}: {e}");
            }
            Err(e) => return Err(e.into()),
        }
    }
    println!("{kind}: {passed} passed, {failed} failed, {skipped} skipped");
    if failed > 0 {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn positivity(input: &Input, budget: usize) -> Result<(), Failure> {
    let x = match (&input.graph, input.family_args()) {
        (None, Some(args)) => args.build()?.evaluate()?,
        _ => csf_bruteforce(&input.graph()?, budget)?,
    };
    let verdict = if x.is_e_positive() {
        "e-positive"
    } else {
        "NOT e-positive"
    };
    match x.min_coefficient() {
        Some((p, c)) => {
            let parts: Vec<String> = p.parts().iter().map(usize::to_string).collect();
            println!("{verdict} (min coeff {c} at e[{}])", parts.join(","));
        }
        None => println!("{verdict}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Expand { family, format } => {
            println!("{}", render(&family.build()?.evaluate()?, format));
        }
        Command::Verify {
            family,
            max_n,
            edge_budget,
        } => verify(&family, max_n, edge_budget)?,
        Command::Oracle {
            input,
            format,
            edge_budget,
        } => {
            println!(
                "{}",
                render(&csf_bruteforce(&input.graph()?, edge_budget)?, format)
            );
        }
        Command::Positivity { input, edge_budget } => positivity(&input, edge_budget)?,
        Command::ListFamilies => {
            for kind in FamilyKind::ALL {
                let params = match kind {
                    FamilyKind::KChain => "parts".to_string(),
                    _ => kind.params().join(","),
                };
                println!("{:<18}{:<10}{}", kind.tag(), params, kind.describe());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
