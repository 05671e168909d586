//! Command-line front end.
//!
//! Exit status: 0 for valid / pass, 1 for invalid / fail, 2 for usage and
//! internal errors.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebra::{check_valuation, Valuation};
use crate::error::{Error, Result};
use crate::formula::{parse, render, Formula};
use crate::logics::{get_logic, list_logics, LogicSpec};
use crate::snapshots::{count_closed_form, count_enumerated, Which};
use crate::tableau::{dump_tree, prove_with, ProveOptions};
use crate::truthtable::{build_table, entails, Method, Verdict};
use crate::{metacheck, translate};

#[derive(Parser, Debug)]
#[command(
    name = "rnmatrix",
    version,
    about = "Decide entailment in finite restricted non-deterministic matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum MethodArg {
    Table,
    Tableau,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WhichArg {
    All,
    Designated,
    Boolean,
}

#[derive(clap::Args, Debug)]
struct LogicArgs {
    /// Logic name, see `list-logics`.
    #[arg(long)]
    logic: String,
    /// Level for `Cn`.
    #[arg(long)]
    level: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide `premises ⊢ conclusion`.
    Prove {
        #[command(flatten)]
        logic: LogicArgs,
        #[arg(long = "premise")]
        premises: Vec<String>,
        #[arg(long, value_enum, default_value = "table")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Add the derived `C_n` tableau rules.
        #[arg(long)]
        derived_rules: bool,
        /// Re-check a countermodel record from a file, or `-` for stdin.
        #[arg(long)]
        verify: Option<String>,
        /// Conclusion, or `-` to read it from stdin.
        conclusion: Option<String>,
    },
    /// Print the full table over the closure of the given formulas.
    Table {
        #[command(flatten)]
        logic: LogicArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(required = true)]
        formulas: Vec<String>,
    },
    /// Build and print a complete tableau.
    Tableau {
        #[command(flatten)]
        logic: LogicArgs,
        #[arg(long = "premise")]
        premises: Vec<String>,
        #[arg(long)]
        derived_rules: bool,
        conclusion: String,
    },
    /// Translate an LFI formula into the incompatibility signature.
    Translate { formula: String },
    /// Invert the translation on its image.
    Untranslate { formula: String },
    /// Count snapshots by enumeration and by closed form.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "all")]
        which: WhichArg,
    },
    /// Run the finite metatheory checks.
    Metacheck,
    /// List the built-in logics.
    ListLogics,
}

/// One `{formula, value}` pair of a countermodel record.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Assignment {
    pub formula: String,
    pub value: String,
}

/// The machine-readable verdict.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Record {
    pub verdict: String,
    pub logic: String,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rows_examined: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub branches: Option<usize>,
    pub countermodel: Vec<Assignment>,
}

impl Record {
    pub fn from_verdict(spec: &LogicSpec, v: &Verdict) -> Self {
        let countermodel = v
            .countermodel
            .iter()
            .flat_map(|cm| cm.named(spec.alg()))
            .map(|(f, name)| Assignment {
                formula: render(f),
                value: name.to_string(),
            })
            .collect();
        let (rows_examined, branches) = match v.method {
            Method::Table => (Some(v.rows_examined), None),
            Method::Tableau => (None, v.branches),
        };
        Record {
            verdict: if v.valid { "valid" } else { "invalid" }.to_string(),
            logic: spec.id.clone(),
            method: v.method,
            rows_examined,
            branches,
            countermodel,
        }
    }
}

/// Runs the CLI on `args` (without the program name) reading stdin when a
/// formula is `-`. Returns the exit status and the text to print.
pub fn run(args: &[String]) -> (i32, String) {
    run_with_stdin(args, &mut std::io::stdin())
}

pub fn run_with_stdin(args: &[String], stdin: &mut dyn Read) -> (i32, String) {
    let argv = std::iter::once("rnmatrix".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match execute(cli.command, stdin) {
        Ok(r) => r,
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn spec_of(l: &LogicArgs) -> Result<LogicSpec> {
    get_logic(&l.logic, l.level)
}

fn read_all(stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    stdin
        .read_to_string(&mut s)
        .map_err(|e| Error::Invalid(format!("reading stdin: {e}")))?;
    Ok(s)
}

fn formulas(spec: &LogicSpec, texts: &[String]) -> Result<Vec<Formula>> {
    texts.iter().map(|t| parse(t, &spec.sig)).collect()
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> Result<(i32, String)> {
    match cmd {
        Command::Prove {
            logic,
            premises,
            method,
            format,
            derived_rules,
            verify,
            conclusion,
        } => {
            let spec = spec_of(&logic)?;
            let premises = formulas(&spec, &premises)?;
            let conclusion = match conclusion.as_deref() {
                Some("-") if verify.as_deref() != Some("-") => {
                    Some(parse(read_all(stdin)?.trim(), &spec.sig)?)
                }
                Some("-") => {
                    return Err(Error::Invalid(
                        "stdin cannot hold both the record and the conclusion".into(),
                    ))
                }
                Some(t) => Some(parse(t, &spec.sig)?),
                None => None,
            };
            if let Some(src) = verify {
                let text = if src == "-" {
                    read_all(stdin)?
                } else {
                    std::fs::read_to_string(&src)
                        .map_err(|e| Error::Invalid(format!("{src}: {e}")))?
                };
                return verify_record(&spec, &text, &premises, conclusion.as_ref());
            }
            let conclusion =
                conclusion.ok_or_else(|| Error::Invalid("prove needs a conclusion".into()))?;
            let verdict = match method {
                MethodArg::Table => entails(&spec, &premises, &conclusion)?,
                MethodArg::Tableau => {
                    let opts = ProveOptions {
                        derived_rules,
                        ..Default::default()
                    };
                    prove_with(&spec, &premises, &conclusion, opts)?.verdict
                }
            };
            let code = if verdict.valid { 0 } else { 1 };
            let out = match format {
                Format::Records => {
                    let rec = Record::from_verdict(&spec, &verdict);
                    format!(
                        "{}\n",
                        serde_json::to_string(&rec).expect("records serialize")
                    )
                }
                Format::Text => verdict_text(&spec, &verdict),
            };
            Ok((code, out))
        }
        Command::Table {
            logic,
            format,
            formulas: texts,
        } => {
            let spec = spec_of(&logic)?;
            let fs = formulas(&spec, &texts)?;
            let table = build_table(&spec, &fs)?;
            let out = match format {
                Format::Text => table.dump(spec.alg()),
                Format::Records => table.records(spec.alg()).join("\n") + "\n",
            };
            Ok((0, out))
        }
        Command::Tableau {
            logic,
            premises,
            derived_rules,
            conclusion,
        } => {
            let spec = spec_of(&logic)?;
            let premises = formulas(&spec, &premises)?;
            let text = if conclusion == "-" {
                read_all(stdin)?.trim().to_string()
            } else {
                conclusion
            };
            let conclusion = parse(&text, &spec.sig)?;
            let opts = ProveOptions {
                derived_rules,
                exhaustive: true,
                ..Default::default()
            };
            let proof = prove_with(&spec, &premises, &conclusion, opts)?;
            let mut out = dump_tree(&spec, &proof.tree);
            out.push_str(&verdict_text(&spec, &proof.verdict));
            Ok((if proof.verdict.valid { 0 } else { 1 }, out))
        }
        Command::Translate { formula } => {
            let f = parse(&formula, &crate::formula::Signature::lfi())?;
            let r = translate::report(&f)?;
            Ok((
                0,
                format!("{}\nimage: {}\n", render(&r.output), r.image_member),
            ))
        }
        Command::Untranslate { formula } => {
            let g = parse(&formula, &crate::formula::Signature::nbi())?;
            match translate::untranslate(&g) {
                Ok(f) => Ok((0, format!("{}\n", render(&f)))),
                Err(e @ Error::NotInImage(_)) => Ok((1, format!("{e}\n"))),
                Err(e) => Err(e),
            }
        }
        Command::Count { n, m, which } => {
            let which = match which {
                WhichArg::All => Which::All,
                WhichArg::Designated => Which::Designated,
                WhichArg::Boolean => Which::Boolean,
            };
            let e = count_enumerated(n, m, which)?;
            let c = count_closed_form(n, m, which)?;
            Ok((
                if e == c { 0 } else { 1 },
                format!("enumerated={e} closed_form={c}\n"),
            ))
        }
        Command::Metacheck => {
            let claims = metacheck::report()?;
            let mut out = String::new();
            for c in &claims {
                out.push_str(&format!(
                    "{} {}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name
                ));
            }
            Ok((if claims.iter().all(|c| c.pass) { 0 } else { 1 }, out))
        }
        Command::ListLogics => {
            let mut out = String::new();
            for name in list_logics() {
                let level = if name == "Cn" { Some(1) } else { None };
                let spec = get_logic(name, level)?;
                let tableau = if spec.calculus.is_some() {
                    "table, tableau"
                } else {
                    "table"
                };
                let shown = if name == "Cn" {
                    "Cn (--level N)".to_string()
                } else {
                    name.to_string()
                };
                out.push_str(&format!("{shown}\t{}\t{tableau}\n", spec.sig.name));
            }
            Ok((0, out))
        }
    }
}

fn verdict_text(spec: &LogicSpec, v: &Verdict) -> String {
    let mut out = String::new();
    out.push_str(if v.valid { "valid\n" } else { "invalid\n" });
    match v.method {
        Method::Table => out.push_str(&format!(
            "method: table, rows examined: {}\n",
            v.rows_examined
        )),
        Method::Tableau => out.push_str(&format!(
            "method: tableau, branches: {}\n",
            v.branches.unwrap_or(0)
        )),
    }
    if let Some(cm) = &v.countermodel {
        out.push_str("countermodel:\n");
        for (f, name) in cm.named(spec.alg()) {
            out.push_str(&format!("  {} = {name}\n", render(f)));
        }
    }
    out
}

/// Re-checks a countermodel record: the valuation must be admissible, and
/// when given, premises designated and the conclusion undesignated.
fn verify_record(
    spec: &LogicSpec,
    text: &str,
    premises: &[Formula],
    conclusion: Option<&Formula>,
) -> Result<(i32, String)> {
    let rec: Record = serde_json::from_str(text.trim())
        .map_err(|e| Error::Invalid(format!("bad record: {e}")))?;
    if rec.countermodel.is_empty() {
        return Ok((1, "record has no countermodel\n".into()));
    }
    let mut v = Valuation {
        domain: Vec::new(),
        values: Vec::new(),
    };
    for a in &rec.countermodel {
        v.domain.push(parse(&a.formula, &spec.sig)?);
        v.values.push(spec.alg().value(&a.value)?);
    }
    if let Err(why) = check_valuation(&spec.matrix, &v) {
        return Ok((1, format!("rejected: {why}\n")));
    }
    let d = spec.designated();
    for p in premises {
        match v.get(p) {
            Some(x) if d.contains(x) => {}
            _ => {
                return Ok((
                    1,
                    format!("rejected: premise {} not designated\n", render(p)),
                ))
            }
        }
    }
    if let Some(c) = conclusion {
        match v.get(c) {
            Some(x) if !d.contains(x) => {}
            _ => {
                return Ok((
                    1,
                    format!("rejected: conclusion {} not undesignated\n", render(c)),
                ))
            }
        }
    }
    Ok((0, "countermodel verified\n".into()))
}
