//! Command-line front end: every computation behind a subcommand with
//! deterministic text or JSON output.
//!
//! Exit codes: 0 on success, 1 when a check suite reports a failure, 2 on
//! usage errors, malformed input, or violated preconditions.

use crate::algebra::{Element, Tensor};
use crate::checks;
use crate::coalgebra::{antipode, delta, delta_ne, ladder_antipode};
use crate::combinat::{forests, kappa, parse_binary_tree, parse_forest, trees, Forest};
use crate::error::{Error, Result};
use crate::operad::{act, p_basis, Flavor};
use crate::pairing::{dual_basis, gram, pair, q_sequence};
use crate::report::CheckReport;
use crate::tamari::poset_cached;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;

#[derive(Parser, Debug)]
#[command(
    name = "forest-hopf",
    version,
    about = "Exact computation in the infinitesimal Hopf algebra of planar forests",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads used by the check suites.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoprodKind {
    /// The left-admissible-cut coproduct.
    Delta,
    /// The deconcatenation coproduct.
    Deltane,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Root,
    Leaf,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Root => Flavor::Root,
            FlavorArg::Leaf => Flavor::Leaf,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    All,
    Algebra,
    Coalgebra,
    Pairing,
    Operad,
    Tamari,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List all forests of weight N in canonical order.
    Forests { n: usize },
    /// List all trees of weight N in canonical order.
    Trees { n: usize },
    /// Concatenation product of two forests.
    Prod { x: String, y: String },
    /// Root grafting of X onto Y (both non-unit).
    Groot { x: String, y: String },
    /// Left-leaf grafting of X onto Y.
    Gleaf { x: String, y: String },
    /// A coproduct of a forest.
    Coprod {
        #[arg(long, value_enum)]
        kind: CoprodKind,
        x: String,
    },
    /// Antipode of a forest.
    Antipode { x: String },
    /// The alternating ladder sum p_n.
    Pn { n: usize },
    /// The alternating sequence q_n.
    Qn { n: usize },
    /// Pairing of two forests.
    Pair { x: String, y: String },
    /// Gram matrix of the weight-N slice (CSV in text mode).
    Gram { n: usize },
    /// Dual-basis element of a forest, or the whole table up to a weight.
    Dual {
        forest: Option<String>,
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Operadic composition P ∘ (A1, ..., Ak) in the chosen flavor.
    Compose {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        p: String,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// The primitive basis element indexed by a binary tree.
    Pt { btree: String },
    /// The bijection from binary trees to planar trees.
    Kappa { btree: String },
    /// The forest partial order: covers, comparisons, Möbius, Hasse.
    Tamari {
        #[command(subcommand)]
        cmd: TamariCmd,
    },
    /// Run property suites; exits 1 on any failure.
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
    },
}

#[derive(Subcommand, Debug)]
enum TamariCmd {
    /// Cover relations of the weight-N slice as CSV.
    Covers {
        #[arg(long)]
        weight: usize,
    },
    /// Compare two forests of weight N.
    Leq {
        #[arg(long)]
        weight: usize,
        f: String,
        g: String,
    },
    /// Möbius value of a pair, or the whole matrix as CSV.
    Mobius {
        #[arg(long)]
        weight: usize,
        f: Option<String>,
        g: Option<String>,
    },
    /// Hasse diagram in DOT format.
    Hasse {
        #[arg(long)]
        weight: usize,
    },
}

/// Everything a finished invocation produces.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse and execute an argument vector (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let format = cli.format;
    let threads = cli.threads;
    let result = match threads {
        Some(k) if k >= 1 => {
            match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool.install(|| execute(cli.command, format)),
                Err(e) => Err(Error::Invariant(format!("thread pool: {e}"))),
            }
        }
        Some(_) => Err(Error::ZeroWeight { what: "--threads" }),
        None => execute(cli.command, format),
    };
    match result {
        Ok((stdout, code)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn require_positive(n: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroWeight { what })
    } else {
        Ok(())
    }
}

fn element_json(x: &Element) -> Value {
    Value::Array(
        x.terms()
            .map(|(f, c)| json!({ "coeff": c.to_string(), "forest": f.bracket_string() }))
            .collect(),
    )
}

fn tensor_json(t: &Tensor) -> Value {
    Value::Array(
        t.terms()
            .map(|(fs, c)| {
                json!({
                    "coeff": c.to_string(),
                    "factors": fs.iter().map(Forest::bracket_string).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn emit(format: Format, command: &str, text: String, result: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = json!({ "command": command, "result": result }).to_string();
            s.push('\n');
            s
        }
    }
}

fn element_output(format: Format, command: &str, x: &Element) -> String {
    emit(format, command, format!("{x}\n"), element_json(x))
}

fn report_output(format: Format, report: &CheckReport) -> (String, i32) {
    let code = if report.passed() { 0 } else { 1 };
    let text = format!("{report}\n");
    (emit(format, "check", text, report.to_json()), code)
}

fn execute(cmd: Cmd, format: Format) -> Result<(String, i32)> {
    let out = match cmd {
        Cmd::Forests { n } => {
            let fs = forests(n);
            let mut text = String::new();
            for f in &fs {
                text.push_str(&f.bracket_string());
                text.push('\n');
            }
            let result = Value::Array(fs.iter().map(|f| Value::from(f.bracket_string())).collect());
            (emit(format, "forests", text, result), 0)
        }
        Cmd::Trees { n } => {
            require_positive(n, "trees")?;
            let ts = trees(n);
            let mut text = String::new();
            for t in &ts {
                text.push_str(&t.to_string());
                text.push('\n');
            }
            let result = Value::Array(ts.iter().map(|t| Value::from(t.to_string())).collect());
            (emit(format, "trees", text, result), 0)
        }
        Cmd::Prod { x, y } => {
            let a = Element::from_forest(parse_forest(&x)?);
            let b = Element::from_forest(parse_forest(&y)?);
            (element_output(format, "prod", &a.mul(&b)), 0)
        }
        Cmd::Groot { x, y } => {
            let a = Element::from_forest(parse_forest(&x)?);
            let b = Element::from_forest(parse_forest(&y)?);
            (element_output(format, "groot", &a.graft_root(&b)?), 0)
        }
        Cmd::Gleaf { x, y } => {
            let a = Element::from_forest(parse_forest(&x)?);
            let b = Element::from_forest(parse_forest(&y)?);
            (element_output(format, "gleaf", &a.graft_leaf(&b)), 0)
        }
        Cmd::Coprod { kind, x } => {
            let a = Element::from_forest(parse_forest(&x)?);
            let t = match kind {
                CoprodKind::Delta => delta(&a),
                CoprodKind::Deltane => delta_ne(&a),
            };
            (emit(format, "coprod", format!("{t}\n"), tensor_json(&t)), 0)
        }
        Cmd::Antipode { x } => {
            let a = Element::from_forest(parse_forest(&x)?);
            (element_output(format, "antipode", &antipode(&a)), 0)
        }
        Cmd::Pn { n } => (element_output(format, "pn", &ladder_antipode(n)?), 0),
        Cmd::Qn { n } => {
            require_positive(n, "qn")?;
            (element_output(format, "qn", &q_sequence(n)), 0)
        }
        Cmd::Pair { x, y } => {
            let a = Element::from_forest(parse_forest(&x)?);
            let b = Element::from_forest(parse_forest(&y)?);
            let v = pair(&a, &b);
            (
                emit(format, "pair", format!("{v}\n"), Value::from(v.to_string())),
                0,
            )
        }
        Cmd::Gram { n } => {
            require_positive(n, "gram")?;
            let g = gram(n);
            let result = json!({
                "weight": g.weight,
                "basis": g.basis.iter().map(Forest::bracket_string).collect::<Vec<_>>(),
                "matrix": g.matrix.iter()
                    .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "det": g.det().to_string(),
            });
            (emit(format, "gram", g.to_csv(), result), 0)
        }
        Cmd::Dual { forest, max_weight } => match (forest, max_weight) {
            (Some(s), None) => {
                let f = parse_forest(&s)?;
                (element_output(format, "dual", &dual_basis(&f)), 0)
            }
            (None, Some(w)) => {
                let mut text = String::new();
                let mut rows = Vec::new();
                for n in 0..=w {
                    for f in forests(n) {
                        let d = dual_basis(&f);
                        text.push_str(&format!("f_{{{}}} = {}\n", f.label(), d));
                        rows.push(json!({
                            "forest": f.bracket_string(),
                            "dual": element_json(&d),
                        }));
                    }
                }
                (emit(format, "dual", text, Value::Array(rows)), 0)
            }
            _ => {
                return Err(Error::Invariant(
                    "dual takes either a forest or --max-weight N".to_string(),
                ))
            }
        },
        Cmd::Compose { flavor, p, args } => {
            let flavor: Flavor = flavor.into();
            let p = Element::from_forest(parse_forest(&p)?);
            let mut elems = Vec::with_capacity(args.len());
            for a in &args {
                elems.push(Element::from_forest(parse_forest(a)?));
            }
            (element_output(format, "compose", &act(flavor, &p, &elems)?), 0)
        }
        Cmd::Pt { btree } => {
            let b = parse_binary_tree(&btree)?;
            (element_output(format, "pt", &p_basis(&b)), 0)
        }
        Cmd::Kappa { btree } => {
            let b = parse_binary_tree(&btree)?;
            let t = kappa(&b);
            (
                emit(format, "kappa", format!("{t}\n"), Value::from(t.to_string())),
                0,
            )
        }
        Cmd::Tamari { cmd } => return tamari_cmd(cmd, format),
        Cmd::Check { suite, max_weight } => {
            let report = match suite {
                Suite::All => checks::all_suites(max_weight),
                Suite::Algebra => checks::algebra_suite(max_weight),
                Suite::Coalgebra => checks::coalgebra_suite(max_weight),
                Suite::Pairing => checks::pairing_suite(max_weight),
                Suite::Operad => checks::operad_suite(max_weight),
                Suite::Tamari => checks::tamari_suite(max_weight),
            };
            report_output(format, &report)
        }
    };
    Ok(out)
}

fn tamari_cmd(cmd: TamariCmd, format: Format) -> Result<(String, i32)> {
    fn slice_member(weight: usize, s: &str) -> Result<Forest> {
        let f = parse_forest(s)?;
        if f.weight() != weight {
            return Err(Error::Invariant(format!(
                "{s} has weight {}, expected {weight}",
                f.weight()
            )));
        }
        Ok(f)
    }
    let out = match cmd {
        TamariCmd::Covers { weight } => {
            require_positive(weight, "tamari covers")?;
            let p = poset_cached(weight);
            let covers: Vec<(String, String)> = p
                .covers()
                .map(|(a, b)| (a.bracket_string(), b.bracket_string()))
                .collect();
            let result = Value::Array(
                covers
                    .iter()
                    .map(|(a, b)| json!({ "lower": a, "upper": b }))
                    .collect(),
            );
            (emit(format, "tamari covers", p.covers_csv(), result), 0)
        }
        TamariCmd::Leq { weight, f, g } => {
            require_positive(weight, "tamari leq")?;
            let a = slice_member(weight, &f)?;
            let b = slice_member(weight, &g)?;
            let p = poset_cached(weight);
            let v = p.leq(&a, &b)?;
            (
                emit(format, "tamari leq", format!("{v}\n"), Value::from(v)),
                0,
            )
        }
        TamariCmd::Mobius { weight, f, g } => {
            require_positive(weight, "tamari mobius")?;
            let p = poset_cached(weight);
            match (f, g) {
                (Some(f), Some(g)) => {
                    let a = slice_member(weight, &f)?;
                    let b = slice_member(weight, &g)?;
                    let v = p.mobius(&a, &b)?;
                    (
                        emit(format, "tamari mobius", format!("{v}\n"), Value::from(v.to_string())),
                        0,
                    )
                }
                (None, None) => {
                    let result = json!({
                        "basis": p.elements().iter().map(Forest::bracket_string).collect::<Vec<_>>(),
                        "matrix": p.elements().iter().enumerate()
                            .map(|(i, _)| (0..p.elements().len())
                                .map(|j| p.mobius_idx(i, j).to_string())
                                .collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    });
                    (emit(format, "tamari mobius", p.mobius_csv(), result), 0)
                }
                _ => {
                    return Err(Error::Invariant(
                        "tamari mobius takes two forests or none".to_string(),
                    ))
                }
            }
        }
        TamariCmd::Hasse { weight } => {
            require_positive(weight, "tamari hasse")?;
            let p = poset_cached(weight);
            let result = Value::from(p.hasse_dot());
            (emit(format, "tamari hasse", p.hasse_dot(), result), 0)
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut argv = vec!["forest-hopf"];
        argv.extend(args);
        run(argv)
    }

    #[test]
    fn dual_example() {
        let out = run_args(&["dual", "[[]]"]);
        assert_eq!(out.code, 0);
        // canonical term order puts [][] before [[]]
        assert_eq!(out.stdout, "1*[][] - 1*[[]]\n");
    }

    #[test]
    fn pair_example() {
        let out = run_args(&["pair", "[[]]", "[][]"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "1\n");
    }

    #[test]
    fn coprod_example() {
        let out = run_args(&["coprod", "--kind", "delta", "[][]"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "1*1⊗[][] + 1*[]⊗[] + 1*[][]⊗1\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["nonsense"]).code, 2);
        assert_eq!(run_args(&["pair", "[["]).code, 2);
        assert_eq!(run_args(&["groot", "", "[]"]).code, 2);
        assert_eq!(run_args(&["pn", "0"]).code, 2);
        assert_eq!(run_args(&["dual"]).code, 2);
        assert_eq!(run_args(&["tamari", "leq", "--weight", "2", "[]", "[]"]).code, 2);
    }

    #[test]
    fn check_small_suite_exits_0() {
        let out = run_args(&["check", "--suite", "algebra", "--max-weight", "3"]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert!(out.stdout.contains("PASS"));
    }

    #[test]
    fn output_is_deterministic() {
        for args in [
            vec!["forests", "4"],
            vec!["dual", "--max-weight", "3"],
            vec!["gram", "3"],
            vec!["coprod", "--kind", "deltane", "[][[]][]"],
            vec!["tamari", "hasse", "--weight", "3"],
            vec!["--format", "json", "antipode", "[[[]]]"],
        ] {
            let a = run_args(&args);
            let b = run_args(&args);
            assert_eq!(a.code, b.code);
            assert_eq!(a.stdout, b.stdout, "args {args:?}");
        }
    }

    #[test]
    fn json_shape() {
        let out = run_args(&["--format", "json", "dual", "[[]]"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["command"], "dual");
        assert_eq!(v["result"][0]["coeff"], "1");
        assert_eq!(v["result"][0]["forest"], "[][]");
        assert_eq!(v["result"][1]["coeff"], "-1");
        assert_eq!(v["result"][1]["forest"], "[[]]");
    }
}
