use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use skein_core::bench::{run_bench, BenchOptions};
use skein_core::braid::{compare_with_rule, heuristic_minimize};
use skein_core::simplify::simplify_traced;
use skein_core::skein::EvalRecord;
use skein_core::table::{bundled_table, load_table};
use skein_core::{
    alexander, conway, homfly, homfly_memoized, jones, parse_braid_word, simplify, BraidWord,
    EvalStats, HomflyCache, LaurentPoly2,
};

#[derive(Parser)]
#[command(
    name = "skein",
    version,
    about = "HOMFLY and related polynomials of closed braids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct EvalFlags {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Evaluate without a result cache.
    #[arg(long)]
    no_memo: bool,
    /// Key the cache by least rotation.
    #[arg(long)]
    canonical_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// HOMFLY polynomial in l, m.
    Eval {
        word: String,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Jones polynomial in t.
    Jones {
        word: String,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Conway polynomial in z.
    Conway {
        word: String,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Alexander polynomial in t.
    Alexander {
        word: String,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Reduce a word to a terminal shape.
    Simplify {
        word: String,
        /// Print each step before the result.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for a smaller word with the same closure.
    Minimize {
        word: String,
        /// Words to visit before giving up.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare two words in the braid order.
    Compare { left: String, right: String },
    /// Evaluate every entry of a knot table (the bundled one by default).
    Bench {
        table: Option<PathBuf>,
        #[command(flatten)]
        flags: EvalFlags,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

enum Failure {
    Usage(String),
    Eval(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Eval(_) => 2,
        }
    }
}

type Outcome = Result<String, Failure>;

fn parse(text: &str) -> Result<BraidWord, Failure> {
    parse_braid_word(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn eval_err(e: impl std::fmt::Display) -> Failure {
    Failure::Eval(e.to_string())
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn evaluate(word: &BraidWord, flags: EvalFlags) -> Result<(LaurentPoly2, EvalStats), Failure> {
    if flags.no_memo {
        homfly(word)
    } else if flags.canonical_cache {
        homfly_memoized(word, &mut HomflyCache::canonicalizing())
    } else {
        homfly_memoized(word, &mut HomflyCache::new())
    }
    .map_err(eval_err)
}

fn cmd_eval(text: &str, flags: EvalFlags) -> Outcome {
    let word = parse(text)?;
    let (p, stats) = evaluate(&word, flags)?;
    if flags.json {
        let simplified = simplify(&word).map_err(eval_err)?.word;
        Ok(to_json(&EvalRecord::new(&word, &simplified, p, stats)))
    } else {
        Ok(p.to_string())
    }
}

fn cmd_specialize(text: &str, flags: EvalFlags, which: &str) -> Outcome {
    let word = parse(text)?;
    let (p, _) = evaluate(&word, flags)?;
    let (shown, terms) = match which {
        "jones" => {
            let v = jones(&p).map_err(eval_err)?;
            (v.to_string(), serde_json::to_value(v.to_json_terms()))
        }
        "alexander" => {
            let v = alexander(&p).map_err(eval_err)?;
            (v.to_string(), serde_json::to_value(v.to_json_terms()))
        }
        _ => {
            let v = conway(&p).map_err(eval_err)?;
            (v.to_string(), serde_json::to_value(&v))
        }
    };
    if flags.json {
        Ok(to_json(&json!({
            "input": word.to_string(),
            "polynomial": shown,
            which: terms.expect("serializable"),
        })))
    } else {
        Ok(shown)
    }
}

fn cmd_simplify(text: &str, trace: bool, as_json: bool) -> Outcome {
    let word = parse(text)?;
    let out = if trace {
        simplify_traced(&word)
    } else {
        simplify(&word)
    }
    .map_err(eval_err)?;
    if as_json {
        return Ok(to_json(&json!({
            "input": word.to_string(),
            "word": out.word.to_string(),
            "shape": out.shape.to_string(),
            "destabilized": out.destabilized,
            "trace": trace.then(|| out.trace_lines()),
        })));
    }
    let mut lines = out.trace_lines();
    lines.push(out.word.to_string());
    lines.push(out.shape.to_string());
    Ok(lines.join("\n"))
}

fn cmd_minimize(text: &str, budget: usize, as_json: bool) -> Outcome {
    let word = parse(text)?;
    let best = heuristic_minimize(&word, budget);
    if as_json {
        Ok(to_json(
            &json!({ "input": word.to_string(), "minimized": best.to_string() }),
        ))
    } else {
        Ok(best.to_string())
    }
}

fn cmd_compare(left: &str, right: &str) -> Outcome {
    let (a, b) = (parse(left)?, parse(right)?);
    Ok(match compare_with_rule(&a, &b) {
        (Ordering::Equal, _) | (_, None) => "Equal".to_string(),
        (Ordering::Less, Some(rule)) => format!("Less ({rule})"),
        (Ordering::Greater, Some(rule)) => format!("Greater ({rule})"),
    })
}

fn cmd_bench(path: Option<&PathBuf>, flags: EvalFlags, threads: usize) -> Outcome {
    let table = match path {
        Some(p) => load_table(p).map_err(|e| Failure::Usage(e.to_string()))?,
        None => bundled_table(),
    };
    let report = run_bench(
        &table,
        BenchOptions {
            memo: !flags.no_memo,
            canonical_cache: flags.canonical_cache,
            threads,
        },
    );
    let text = if flags.json {
        to_json(&report)
    } else {
        report.to_text().trim_end().to_string()
    };
    if report.failures.is_empty() {
        Ok(text)
    } else {
        println!("{text}");
        Err(Failure::Eval(format!(
            "{} entries failed",
            report.failures.len()
        )))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Eval { word, flags } => cmd_eval(&word, flags),
        Command::Jones { word, flags } => cmd_specialize(&word, flags, "jones"),
        Command::Conway { word, flags } => cmd_specialize(&word, flags, "conway"),
        Command::Alexander { word, flags } => cmd_specialize(&word, flags, "alexander"),
        Command::Simplify { word, trace, json } => cmd_simplify(&word, trace, json),
        Command::Minimize { word, budget, json } => cmd_minimize(&word, budget, json),
        Command::Compare { left, right } => cmd_compare(&left, &right),
        Command::Bench {
            table,
            flags,
            threads,
        } => cmd_bench(table.as_ref(), flags, threads),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Eval(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
