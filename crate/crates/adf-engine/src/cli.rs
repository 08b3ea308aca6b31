//! Command-line front end.
//!
//! The flag surface uses single-dash multi-character switches (`-cf`,
//! `-sm`, `-all`), so argument parsing is hand-rolled rather than built
//! on a derive-style library. Results are printed per semantics under a
//! `[name] count` header, one interpretation per line; `--json` switches
//! to one JSON document per semantics with identical content.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use crate::adf::Adf;
use crate::error::Error;
use crate::interpretation::Interpretation;
use crate::operator::least_fixpoint_trace;
use crate::semantics::{self, ResultItems, ResultSet, SemanticsKind};
use crate::syntax::{self, facts, serialize_functional, Dialect};
use crate::transform::{formula_to_table, padf_to_adf};
use crate::truth::Truth;

pub const USAGE: &str = "\
usage: adf-engine [-h] [-cf] [-m] [-sm] [-g] [-c] [-a]
                  [--transform_pform | --transform_prio] [-all] [--json]
                  [--trace] [--version] [instance]

positional arguments:
  instance              File name of the ADF instance (standard input if omitted)

optional arguments:
  -h, --help            show this help message and exit
  -cf, --conflict-free  compute the conflict free sets
  -m, --model           compute the two-valued models
  -sm, --stablemodel    compute the stable models
  -g, --grounded        compute the grounded model
  -c, --complete        compute the complete models
  -a, --admissible      compute the admissible models
  --transform_pform     transform a propositional formula ADF before the computation
  --transform_prio      transform a prioritized ADF before the computation
  -all, --all           compute all sets and models
  --json                print one machine-readable JSON document per semantics
  --trace               print the grounded fixpoint iteration to standard error
  --version             prints the current version
";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformMode {
    None,
    Pform,
    Prio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

/// A fully parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Instance file; `None` reads standard input.
    pub instance: Option<PathBuf>,
    /// Requested semantics in reporting order.
    pub semantics: Vec<SemanticsKind>,
    pub transform: TransformMode,
    pub output: OutputMode,
    pub trace: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliAction {
    Run(RunConfig),
    Help,
    Version,
}

/// Errors of a whole invocation, split by exit code: usage problems exit
/// with 1, instance problems with 2.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Instance(#[from] Error),
    #[error("cannot read instance: {0}")]
    Io(#[from] io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 1,
            _ => 2,
        }
    }
}

/// Parses command-line arguments (without the program name).
pub fn parse_args<I>(args: I) -> Result<CliAction, RunError>
where
    I: IntoIterator<Item = String>,
{
    let mut conflict_free = false;
    let mut model = false;
    let mut stable = false;
    let mut grounded = false;
    let mut complete = false;
    let mut admissible = false;
    let mut all = false;
    let mut transform = TransformMode::None;
    let mut output = OutputMode::Text;
    let mut trace = false;
    let mut instance: Option<PathBuf> = None;
    let mut instance_given = false;
    for arg in args {
        match arg.as_str() {
            "-h" | "--help" => return Ok(CliAction::Help),
            "--version" => return Ok(CliAction::Version),
            "-cf" | "--conflict-free" => conflict_free = true,
            "-m" | "--model" => model = true,
            "-sm" | "--stablemodel" => stable = true,
            "-g" | "--grounded" => grounded = true,
            "-c" | "--complete" => complete = true,
            "-a" | "--admissible" => admissible = true,
            "-all" | "--all" => all = true,
            "--transform_pform" => {
                if transform == TransformMode::Prio {
                    return Err(RunError::Usage(
                        "--transform_pform and --transform_prio are mutually exclusive".into(),
                    ));
                }
                transform = TransformMode::Pform;
            }
            "--transform_prio" => {
                if transform == TransformMode::Pform {
                    return Err(RunError::Usage(
                        "--transform_pform and --transform_prio are mutually exclusive".into(),
                    ));
                }
                transform = TransformMode::Prio;
            }
            "--json" => output = OutputMode::Json,
            "--trace" => trace = true,
            other if other.starts_with('-') && other != "-" => {
                return Err(RunError::Usage(format!("unknown option `{other}`")))
            }
            path => {
                if instance_given {
                    return Err(RunError::Usage("more than one instance given".into()));
                }
                instance_given = true;
                // "-" is the explicit standard-input marker
                instance = (path != "-").then(|| PathBuf::from(path));
            }
        }
    }
    let mut semantics = Vec::new();
    let flags = [
        (conflict_free, SemanticsKind::ConflictFree),
        (model, SemanticsKind::Model),
        (stable, SemanticsKind::Stable),
        (grounded, SemanticsKind::Grounded),
        (complete, SemanticsKind::Complete),
        (admissible, SemanticsKind::Admissible),
    ];
    for (requested, kind) in flags {
        if all || requested {
            semantics.push(kind);
        }
    }
    if semantics.is_empty() && transform == TransformMode::None {
        return Err(RunError::Usage(
            "nothing to do: select at least one semantics or a transform".into(),
        ));
    }
    Ok(CliAction::Run(RunConfig {
        instance,
        semantics,
        transform,
        output,
        trace,
    }))
}

/// Loads the instance and executes the run, writing results to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), RunError> {
    let text = match &config.instance {
        Some(path) => fs::read_to_string(path)?,
        None => io::read_to_string(io::stdin())?,
    };
    run_instance(&text, config, out)
}

/// Executes the run on instance text that is already in memory.
///
/// A transform flag forces the dialect; instances using predicates
/// outside that dialect fail with the interpreter's own location-carrying
/// error. Without a flag the dialect is detected from the vocabulary.
pub fn run_instance(text: &str, config: &RunConfig, out: &mut dyn Write) -> Result<(), RunError> {
    let facts = facts::read_facts(text).map_err(RunError::Instance)?;
    let dialect = match config.transform {
        TransformMode::Pform => Dialect::Formula,
        TransformMode::Prio => Dialect::Padf,
        TransformMode::None => syntax::detect(&facts),
    };
    let adf = match dialect {
        Dialect::Functional => syntax::functional::from_facts(&facts)?,
        Dialect::Formula => formula_to_table(&syntax::formula::from_facts(&facts)?)?,
        Dialect::Padf => padf_to_adf(&syntax::padf::from_facts(&facts)?)?,
    };
    if config.semantics.is_empty() {
        // transform-only invocation: emit the functional form
        write!(out, "{}", serialize_functional(&adf))?;
        return Ok(());
    }
    for &kind in &config.semantics {
        if config.trace && kind == SemanticsKind::Grounded {
            for (step, v) in least_fixpoint_trace(&adf).iter().enumerate() {
                eprintln!("step {step}: {}", format_interpretation(&adf, v));
            }
        }
        let result = semantics::compute(&adf, kind);
        match config.output {
            OutputMode::Text => write_text(&adf, &result, out)?,
            OutputMode::Json => write_json(&adf, &result, out)?,
        }
    }
    Ok(())
}

/// Renders an interpretation as space-separated literals sorted by
/// statement name: accepted statements bare, rejected ones with a `-`
/// prefix, undecided ones omitted.
pub fn format_interpretation(adf: &Adf, v: &Interpretation) -> String {
    literal_tokens(adf, v).join(" ")
}

fn literal_tokens(adf: &Adf, v: &Interpretation) -> Vec<String> {
    let mut names: Vec<&str> = adf.statements().names().collect();
    names.sort_unstable();
    names
        .iter()
        .filter_map(|name| {
            let id = adf.statements().id(name).expect("names round-trip");
            match v.get(id) {
                Truth::True => Some((*name).to_owned()),
                Truth::False => Some(format!("-{name}")),
                Truth::Unknown => None,
            }
        })
        .collect()
}

fn set_tokens(adf: &Adf, set: &[crate::adf::StatementId]) -> Vec<String> {
    let mut names: Vec<String> = set
        .iter()
        .map(|&s| adf.statements().name(s).to_owned())
        .collect();
    names.sort_unstable();
    names
}

fn result_tokens(adf: &Adf, result: &ResultSet) -> Vec<Vec<String>> {
    match result.items() {
        ResultItems::Interpretations(items) => {
            items.iter().map(|v| literal_tokens(adf, v)).collect()
        }
        ResultItems::Sets(items) => items.iter().map(|set| set_tokens(adf, set)).collect(),
    }
}

fn write_text(adf: &Adf, result: &ResultSet, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "[{}] {}", result.semantics(), result.len())?;
    for tokens in result_tokens(adf, result) {
        writeln!(out, "{}", tokens.join(" "))?;
    }
    Ok(())
}

fn write_json(adf: &Adf, result: &ResultSet, out: &mut dyn Write) -> io::Result<()> {
    let document = serde_json::json!({
        "semantics": result.semantics().to_string(),
        "count": result.len(),
        "items": result_tokens(adf, result),
    });
    writeln!(out, "{document}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_functional;
    use crate::test_support::{SELF_LOOP, SELF_LOOP_FORMULA, SUPPORT_CYCLE};

    fn args(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn parsed(list: &[&str]) -> RunConfig {
        match parse_args(args(list)).unwrap() {
            CliAction::Run(config) => config,
            other => panic!("expected a run, got {other:?}"),
        }
    }

    fn run_to_string(text: &str, list: &[&str]) -> String {
        let config = parsed(list);
        let mut out = Vec::new();
        run_instance(text, &config, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn parses_individual_flags() {
        let config = parsed(&["-g", "file.adf"]);
        assert_eq!(config.semantics, vec![SemanticsKind::Grounded]);
        assert_eq!(config.instance, Some(PathBuf::from("file.adf")));
        assert_eq!(config.transform, TransformMode::None);
        assert_eq!(config.output, OutputMode::Text);

        let config = parsed(&["--stablemodel", "-cf"]);
        assert_eq!(
            config.semantics,
            vec![SemanticsKind::ConflictFree, SemanticsKind::Stable]
        );
        assert_eq!(config.instance, None);
    }

    #[test]
    fn all_selects_every_semantics_in_reporting_order() {
        let config = parsed(&["-all"]);
        assert_eq!(config.semantics, SemanticsKind::ALL.to_vec());
    }

    #[test]
    fn transform_without_semantics_is_a_valid_invocation() {
        let config = parsed(&["--transform_pform", "file.adf"]);
        assert!(config.semantics.is_empty());
        assert_eq!(config.transform, TransformMode::Pform);
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(
            parse_args(args(&["-g", "--bogus"])),
            Err(RunError::Usage(_))
        ));
        assert!(matches!(
            parse_args(args(&["--transform_pform", "--transform_prio"])),
            Err(RunError::Usage(_))
        ));
        assert!(matches!(parse_args(args(&[])), Err(RunError::Usage(_))));
        assert!(matches!(
            parse_args(args(&["-g", "one.adf", "two.adf"])),
            Err(RunError::Usage(_))
        ));
    }

    #[test]
    fn help_and_version_take_precedence() {
        assert_eq!(parse_args(args(&["-h"])).unwrap(), CliAction::Help);
        assert_eq!(
            parse_args(args(&["--version", "-g"])).unwrap(),
            CliAction::Version
        );
    }

    #[test]
    fn a_bare_dash_marks_standard_input() {
        let config = parsed(&["-g", "-"]);
        assert_eq!(config.instance, None);
        assert!(matches!(
            parse_args(args(&["-g", "-", "file.adf"])),
            Err(RunError::Usage(_))
        ));
    }

    #[test]
    fn usage_lists_every_flag() {
        for flag in [
            "-cf",
            "-m",
            "-sm",
            "-g",
            "-c",
            "-a",
            "--transform_pform",
            "--transform_prio",
            "-all",
            "--version",
            "instance",
            "--conflict-free",
            "--model",
            "--stablemodel",
            "--grounded",
            "--complete",
            "--admissible",
        ] {
            assert!(USAGE.contains(flag), "usage is missing {flag}");
        }
    }

    #[test]
    fn formats_interpretations_as_sorted_literals() {
        use Truth::*;
        let adf = parse_functional(SUPPORT_CYCLE).unwrap();
        let mut v = Interpretation::all_unknown(3);
        v.set(adf.statements().id("a").unwrap(), True);
        v.set(adf.statements().id("b").unwrap(), True);
        v.set(adf.statements().id("c").unwrap(), False);
        assert_eq!(format_interpretation(&adf, &v), "a b -c");
        assert_eq!(
            format_interpretation(&adf, &Interpretation::all_unknown(3)),
            ""
        );

        let adf = parse_functional(SELF_LOOP).unwrap();
        let mut v = Interpretation::all_unknown(4);
        v.set(adf.statements().id("a").unwrap(), True);
        assert_eq!(format_interpretation(&adf, &v), "a");
    }

    #[test]
    fn grounded_run_prints_a_header_and_one_line() {
        let output = run_to_string(SELF_LOOP, &["-g"]);
        assert_eq!(output, "[grounded] 1\na\n");
    }

    #[test]
    fn formula_instances_are_detected_without_a_flag() {
        let output = run_to_string(SELF_LOOP_FORMULA, &["-g"]);
        assert_eq!(output, "[grounded] 1\na\n");
    }

    #[test]
    fn transform_only_prints_the_functional_form() {
        let output = run_to_string(SELF_LOOP_FORMULA, &["--transform_pform"]);
        let normalise = |text: &str| text.split_whitespace().collect::<Vec<_>>().join(" ");
        assert_eq!(normalise(&output), normalise(SELF_LOOP));
    }

    #[test]
    fn all_run_reports_every_semantics() {
        let output = run_to_string(SUPPORT_CYCLE, &["-all"]);
        assert!(output.contains("[conflict-free] 3"));
        assert!(output.contains("[model] 2"));
        assert!(output.contains("[stable] 1"));
        assert!(output.contains("[grounded] 1"));
        assert!(output.contains("[complete] 3"));
        assert!(output.contains("[admissible] 5"));
        assert!(output.contains("-a -b c"));
    }

    #[test]
    fn json_and_text_agree_on_content() {
        let text_output = run_to_string(SUPPORT_CYCLE, &["-all"]);
        let json_output = run_to_string(SUPPORT_CYCLE, &["-all", "--json"]);
        let mut text_lines = text_output.lines();
        for document in json_output.lines() {
            let value: serde_json::Value = serde_json::from_str(document).unwrap();
            let header = text_lines.next().unwrap();
            assert_eq!(
                header,
                format!(
                    "[{}] {}",
                    value["semantics"].as_str().unwrap(),
                    value["count"]
                )
            );
            for item in value["items"].as_array().unwrap() {
                let tokens: Vec<&str> = item
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|t| t.as_str().unwrap())
                    .collect();
                assert_eq!(text_lines.next().unwrap(), tokens.join(" "));
            }
        }
        assert_eq!(text_lines.next(), None);
    }

    #[test]
    fn transform_flags_reject_the_wrong_dialect() {
        let config = parsed(&["--transform_pform", "-g"]);
        let mut out = Vec::new();
        let err = run_instance(SUPPORT_CYCLE, &config, &mut out).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(
            matches!(&err, RunError::Instance(Error::Syntax(_, msg)) if msg.contains("formula dialect")),
            "got {err:?}"
        );

        let config = parsed(&["--transform_prio", "-g"]);
        let err = run_instance(SELF_LOOP_FORMULA, &config, &mut out).unwrap_err();
        assert!(
            matches!(&err, RunError::Instance(Error::Syntax(_, msg)) if msg.contains("prioritised dialect")),
            "got {err:?}"
        );
    }

    #[test]
    fn transform_prio_accepts_link_free_instances() {
        // a lone statement is a valid prioritised framework even though
        // nothing marks the dialect
        let output = run_to_string("s(a).", &["--transform_prio", "-g"]);
        assert_eq!(output, "[grounded] 1\na\n");
    }

    #[test]
    fn parse_errors_surface_with_exit_code_two() {
        let config = parsed(&["-g"]);
        let mut out = Vec::new();
        let err = run_instance("s(a). ci(a). ci(a,1,b).", &config, &mut out).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(matches!(err, RunError::Instance(Error::Undeclared(_, _))));
    }

    #[test]
    fn padf_instances_run_end_to_end() {
        let output = run_to_string("s(a). s(b). lm(a,b). pref(b,a).", &["-m"]);
        // both statements are unattacked in effect: b shrugs off a
        assert_eq!(output, "[model] 1\na b\n");
    }
}
