use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use braid_unplait::braidio::{self, DEFAULT_MAX_LETTERS};
use braid_unplait::{canonical, generators, unplait, BraidWord, NormalForm};
use rayon::prelude::*;
use serde_json::json;

use crate::Command;

const MAX_LETTERS_VAR: &str = "BRAID_MAX_LETTERS";

fn max_letters() -> Result<usize> {
    match std::env::var(MAX_LETTERS_VAR) {
        Ok(v) => v.trim().parse().with_context(|| {
            format!("{MAX_LETTERS_VAR} must be a non-negative integer, got {v:?}")
        }),
        Err(_) => Ok(DEFAULT_MAX_LETTERS),
    }
}

fn parse(text: &str) -> Result<BraidWord> {
    braidio::parse_with_limit(text, max_letters()?)
        .with_context(|| format!("cannot parse {text:?}"))
}

fn code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn describe(nf: &NormalForm) -> String {
    let factors: Vec<String> = nf
        .factors()
        .iter()
        .map(|f| format!("{}", f.permutation()))
        .collect();
    format!("inf {} factors [{}]", nf.inf(), factors.join(" "))
}

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Check { braid, json } => check(&braid, json),
        Command::Straighten { braid, json } => straighten(&braid, json),
        Command::Nf { braid, json } => {
            let nf = canonical::normal_form(&parse(&braid)?);
            if json {
                println!("{}", braidio::to_json(&nf));
            } else {
                println!("{}", describe(&nf));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq { left, right } => {
            let equal = canonical::equals(&parse(&left)?, &parse(&right)?)?;
            println!("{}", if equal { "equal" } else { "not equal" });
            Ok(code(equal))
        }
        Command::Gen { kind, args } => {
            println!("{}", braidio::serialize(&generate(&kind, &args)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { braid } => {
            let rep = unplait::classify(&parse(&braid)?)?;
            println!("{}", braidio::to_json(&rep));
            Ok(ExitCode::SUCCESS)
        }
        Command::Batch { file, json } => batch(&file, json),
    }
}

fn check(text: &str, json: bool) -> Result<ExitCode> {
    let report = unplait::is_topologically_trivial(&parse(text)?)?;
    if json {
        println!("{}", braidio::to_json(&report));
    } else if let Some(k) = report.twist_power {
        println!("trivial");
        println!("s'(b) = d^{k} on {} strands", report.n - 1);
    } else {
        println!("nontrivial");
        println!("class representative: {}", describe(&report.class_rep));
    }
    Ok(code(report.trivial))
}

fn straighten(text: &str, json: bool) -> Result<ExitCode> {
    let b = parse(text)?;
    let trace = unplait::straighten(&b)?;
    let reduced = unplait::remove_last_strand(&trace.output)?;
    if json {
        let out = json!({
            "marks": trace.marks,
            "expanded": braidio::serialize(&trace.expanded),
            "straightened": braidio::serialize(&trace.output),
            "reduced": braidio::serialize(&reduced),
        });
        println!("{out}");
        return Ok(ExitCode::SUCCESS);
    }
    println!("marks: {}", trace.marks.len());
    for m in &trace.marks {
        let letter = b.letters()[m.letter_position];
        let exp = if m.flip_sign < 0 { "^-1" } else { "" };
        println!(
            "  letter {} ({}) strand at {} insert r{}{}",
            m.letter_position + 1,
            letter,
            m.strand_position,
            m.flip,
            exp
        );
    }
    println!("s(b) expanded: {}", braidio::serialize(&trace.expanded));
    println!("s(b): {}", braidio::serialize(&trace.output));
    println!("s'(b): {}", braidio::serialize(&reduced));
    Ok(ExitCode::SUCCESS)
}

fn generate(kind: &str, args: &[i64]) -> Result<BraidWord> {
    let unsigned = |v: i64| -> Result<usize> {
        usize::try_from(v).with_context(|| format!("argument {v} must be non-negative"))
    };
    let want = |count: usize| -> Result<Vec<usize>> {
        if args.len() != count {
            bail!("gen {kind} takes {count} argument(s), got {}", args.len());
        }
        args.iter().map(|&v| unsigned(v)).collect()
    };
    let word = match kind {
        "d" => {
            let a = want(1)?;
            generators::full_twist(a[0])?
        }
        "r" => {
            let a = want(2)?;
            generators::flip(a[0], a[1])?
        }
        "b" => {
            let a = want(2)?;
            generators::belt_element(a[0], a[1])?
        }
        "R" => {
            let a = want(2)?;
            generators::ribbon_flip(a[0], a[1])?
        }
        other => bail!("unknown generator kind {other:?}; expected d, r, b or R"),
    };
    Ok(word)
}

struct Outcome {
    name: String,
    expected: bool,
    result: std::result::Result<bool, String>,
}

fn batch(path: &std::path::Path, json: bool) -> Result<ExitCode> {
    let src =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let fixtures = braidio::parse_fixtures_with_limit(&src, max_letters()?)
        .with_context(|| format!("in {}", path.display()))?;
    let mut outcomes: Vec<Outcome> = fixtures
        .par_iter()
        .map(|fx| Outcome {
            name: fx.name.clone(),
            expected: fx.expected_trivial,
            result: unplait::is_topologically_trivial(&fx.braid)
                .map(|r| r.trivial)
                .map_err(|e| e.to_string()),
        })
        .collect();
    outcomes.sort_by(|a, b| a.name.cmp(&b.name));

    let passed = |o: &Outcome| o.result.as_ref().is_ok_and(|&t| t == o.expected);
    let all_ok = outcomes.iter().all(passed);
    if json {
        let rows: Vec<_> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "name": o.name,
                    "expected_trivial": o.expected,
                    "trivial": o.result.as_ref().ok(),
                    "error": o.result.as_ref().err(),
                    "pass": passed(o),
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(rows));
    } else {
        for o in &outcomes {
            let status = if passed(o) { "ok  " } else { "FAIL" };
            match &o.result {
                Ok(t) => println!("{status} {} trivial={t} expected={}", o.name, o.expected),
                Err(e) => println!("{status} {} error: {e}", o.name),
            }
        }
        let n_ok = outcomes.iter().filter(|o| passed(o)).count();
        println!("{n_ok}/{} fixtures match", outcomes.len());
    }
    Ok(code(all_ok))
}
