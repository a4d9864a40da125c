//! The `oa-kit` command line.
//!
//! Reports go to stdout as one JSON object carrying `"schema": "oa-kit/1"`;
//! `fragment join`/`split` print plain text. Diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation errors present,
//! 3 anchoring failure, 4 unreadable or unparsable input.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::anchor::{anchor_annotation, DocumentSet, TextDocument};
use crate::annotea::convert_annotea;
use crate::model::{classify_body, validate_with, BodyRole, Iri, MotivationRegistry, ResourceRef};
use crate::multiplicity::{expand, ExpandMode};
use crate::rdf::{annotation_roots, lift, lower_all, parse_turtle, serialize_turtle, Graph};
use crate::specifiers::{decompose_fragment_uri, reconstruct_fragment_uri, ConformsToTable};
use crate::model::Annotation;

pub const SCHEMA: &str = "oa-kit/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ANCHOR: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "oa-kit", version, about = "Validate, convert, anchor and expand Open Annotation graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every annotation in a Turtle file.
    Validate {
        file: PathBuf,
        /// Motivation registry replacing the bundled one.
        #[arg(long)]
        motivations: Option<PathBuf>,
    },
    /// Convert legacy formats.
    #[command(subcommand)]
    Convert(Convert),
    /// Resolve selectors against local copies of their sources.
    Anchor {
        file: PathBuf,
        /// Binds a source IRI to a local UTF-8 file: IRI=PATH. Repeatable.
        #[arg(long = "doc", value_name = "IRI=PATH")]
        docs: Vec<String>,
    },
    /// List the body/target interpretations of each annotation.
    Expand {
        file: PathBuf,
        /// One interpretation per Choice branch instead of the first item.
        #[arg(long)]
        all_alternatives: bool,
    },
    /// Join or split fragment URIs.
    #[command(subcommand)]
    Fragment(FragmentCmd),
    /// Count textual and semantic tags.
    Tags { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum Convert {
    /// Annotea graph to Open Annotation.
    Annotea {
        file: PathBuf,
        /// Write the converted Turtle here instead of into the report.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum FragmentCmd {
    /// Print SOURCE#VALUE.
    Join { source: String, value: String },
    /// Print the source and the fragment value on separate lines.
    Split {
        uri: String,
        #[command(flatten)]
        spec: ConformsArg,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct ConformsArg {
    /// IRI of the fragment syntax standard, printed as a third line.
    #[arg(long)]
    conforms_to: Option<String>,
    /// Look the fragment syntax standard up by media type.
    #[arg(long)]
    media_type: Option<String>,
}

/// Runs with the process's stdout and stderr.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// `argv` excludes the program name.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("oa-kit")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let (text, code) = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => (e.to_string(), EXIT_USAGE),
            };
            let _ = write!(err, "{text}");
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Validate { file, motivations } => cmd_validate(&file, motivations.as_deref()),
        Command::Convert(Convert::Annotea { file, output }) => cmd_convert(&file, output.as_deref()),
        Command::Anchor { file, docs } => cmd_anchor(&file, &docs),
        Command::Expand { file, all_alternatives } => cmd_expand(&file, all_alternatives),
        Command::Fragment(FragmentCmd::Join { source, value }) => cmd_join(&source, &value),
        Command::Fragment(FragmentCmd::Split { uri, spec }) => cmd_split(&uri, spec),
        Command::Tags { file } => cmd_tags(&file),
    };
    match outcome {
        Ok(Output { stdout, code }) => {
            let _ = out.write_all(stdout.as_bytes());
            code
        }
        Err(Failure { message, code }) => {
            let _ = writeln!(err, "oa-kit: {message}");
            code
        }
    }
}

struct Output {
    stdout: String,
    code: i32,
}

struct Failure {
    message: String,
    code: i32,
}

type Outcome = Result<Output, Failure>;

fn fail(code: i32, message: impl std::fmt::Display) -> Failure {
    Failure { message: message.to_string(), code }
}

fn report(command: &str, ok: bool, body: Value, code: i32) -> Output {
    let mut object = serde_json::Map::new();
    object.insert("schema".into(), json!(SCHEMA));
    object.insert("command".into(), json!(command));
    object.insert("status".into(), json!(if ok { "ok" } else { "errors" }));
    if let Value::Object(fields) = body {
        object.extend(fields);
    }
    let mut stdout = serde_json::to_string_pretty(&Value::Object(object)).expect("JSON values always serialize");
    stdout.push('\n');
    Output { stdout, code }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_turtle(&read(path)?).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

/// Lifts every annotation in the file; structural problems are reported
/// as validation errors.
fn load_annotations(path: &Path) -> Result<Vec<Annotation>, Failure> {
    let graph = load_graph(path)?;
    let roots = annotation_roots(&graph);
    if roots.is_empty() {
        return Err(fail(EXIT_INVALID, format!("{}: no oa:Annotation found", path.display())));
    }
    roots
        .iter()
        .map(|root| lift(&graph, root).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display()))))
        .collect()
}

#[derive(Serialize)]
struct FindingOut<'a> {
    annotation: String,
    #[serde(flatten)]
    finding: &'a crate::model::Finding,
}

fn cmd_validate(file: &Path, motivations: Option<&Path>) -> Outcome {
    let registry = match motivations {
        Some(path) => MotivationRegistry::parse(&read(path)?)
            .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?,
        None => MotivationRegistry::default(),
    };
    let graph = load_graph(file)?;
    let roots = annotation_roots(&graph);
    let mut reports = Vec::new();
    let mut structural = Vec::new();
    for root in &roots {
        match lift(&graph, root) {
            Ok(a) => reports.push((root.to_string(), validate_with(&a, &registry))),
            Err(e) => structural.push(json!({
                "annotation": root.to_string(),
                "severity": "error",
                "code": "malformed-structure",
                "path": "annotation",
                "message": e.to_string(),
            })),
        }
    }
    if roots.is_empty() {
        structural.push(json!({
            "annotation": null,
            "severity": "error",
            "code": "no-annotation",
            "path": "",
            "message": "no node is typed oa:Annotation",
        }));
    }
    let mut findings: Vec<Value> = structural;
    for (id, r) in &reports {
        for f in &r.entries {
            findings.push(serde_json::to_value(FindingOut { annotation: id.clone(), finding: f }).expect("serializable"));
        }
    }
    let errors = findings.iter().filter(|f| f["severity"] == "error").count();
    let warnings = findings.len() - errors;
    let ok = errors == 0;
    let body = json!({
        "annotations": roots.len(),
        "errors": errors,
        "warnings": warnings,
        "findings": findings,
    });
    Ok(report("validate", ok, body, if ok { EXIT_OK } else { EXIT_INVALID }))
}

fn cmd_convert(file: &Path, output: Option<&Path>) -> Outcome {
    let graph = load_graph(file)?;
    let (annotations, conversion) =
        convert_annotea(&graph).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", file.display())))?;
    let turtle = serialize_turtle(&lower_all(&annotations));
    let mut body = json!({
        "annotations": annotations.len(),
        "properties": conversion.properties,
        "notes": conversion.notes,
    });
    match output {
        Some(path) => {
            std::fs::write(path, &turtle).map_err(|e| fail(EXIT_PARSE, format!("cannot write {}: {e}", path.display())))?;
            body["output"] = json!(path.display().to_string());
        }
        None => body["turtle"] = json!(turtle),
    }
    Ok(report("convert annotea", true, body, EXIT_OK))
}

fn parse_doc_binding(binding: &str) -> Result<(Iri, PathBuf), Failure> {
    // IRIs contain ':' and may contain '=', so split at the last '='.
    let (iri, path) = binding
        .rsplit_once('=')
        .ok_or_else(|| fail(EXIT_USAGE, format!("--doc {binding:?}: expected IRI=PATH")))?;
    let iri = Iri::new(iri).map_err(|e| fail(EXIT_USAGE, format!("--doc {binding:?}: {e}")))?;
    Ok((iri, PathBuf::from(path)))
}

fn cmd_anchor(file: &Path, bindings: &[String]) -> Outcome {
    let mut docs = DocumentSet::new();
    for binding in bindings {
        let (iri, path) = parse_doc_binding(binding)?;
        docs.insert(TextDocument::new(iri, &read(&path)?));
    }
    let annotations = load_annotations(file)?;
    let mut results = Vec::new();
    for a in &annotations {
        for anchored in anchor_annotation(a, &docs) {
            let mut entry = serde_json::to_value(&anchored).expect("serializable");
            entry["annotation"] = json!(a.id.to_string());
            results.push((anchored.failed(), entry));
        }
    }
    let failures = results.iter().filter(|(failed, _)| *failed).count();
    let ok = failures == 0;
    let body = json!({
        "anchored": results.len() - failures,
        "failures": failures,
        "findings": results.into_iter().map(|(_, e)| e).collect::<Vec<_>>(),
    });
    Ok(report("anchor", ok, body, if ok { EXIT_OK } else { EXIT_ANCHOR }))
}

fn cmd_expand(file: &Path, all_alternatives: bool) -> Outcome {
    let mode = if all_alternatives { ExpandMode::AllAlternatives } else { ExpandMode::Default };
    let annotations = load_annotations(file)?;
    let ids = |set: &[ResourceRef]| set.iter().map(|r| r.id().to_string()).collect::<Vec<_>>();
    let mut out = Vec::new();
    for a in &annotations {
        let interpretations = expand(a, mode).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", file.display())))?;
        let list: Vec<Value> = interpretations
            .iter()
            .map(|i| {
                json!({
                    "bodies": ids(&i.body_set),
                    "targets": ids(&i.target_set),
                    "target_set": i.target_set_id.as_ref().map(ToString::to_string),
                })
            })
            .collect();
        out.push(json!({ "annotation": a.id.to_string(), "interpretations": list }));
    }
    let body = json!({
        "mode": if all_alternatives { "all-alternatives" } else { "default" },
        "annotations": out,
    });
    Ok(report("expand", true, body, EXIT_OK))
}

fn cmd_join(source: &str, value: &str) -> Outcome {
    let fragment = crate::specifiers::Fragment::new(value);
    let uri = reconstruct_fragment_uri(source, &fragment).map_err(|e| fail(EXIT_INVALID, e))?;
    Ok(Output { stdout: format!("{uri}\n"), code: EXIT_OK })
}

fn cmd_split(uri: &str, spec: ConformsArg) -> Outcome {
    let conforms_to = match (spec.conforms_to, spec.media_type) {
        (Some(iri), _) => Some(Iri::new(iri).map_err(|e| fail(EXIT_USAGE, e))?),
        (None, Some(media_type)) => Some(
            ConformsToTable::default()
                .lookup(&media_type)
                .cloned()
                .ok_or_else(|| fail(EXIT_USAGE, format!("no fragment syntax known for {media_type:?}")))?,
        ),
        (None, None) => None,
    };
    let (source, fragment) = decompose_fragment_uri(uri, conforms_to).map_err(|e| fail(EXIT_INVALID, e))?;
    let mut stdout = format!("{source}\n{}\n", fragment.value);
    if let Some(spec) = fragment.conforms_to {
        stdout.push_str(&format!("{spec}\n"));
    }
    Ok(Output { stdout, code: EXIT_OK })
}

fn cmd_tags(file: &Path) -> Outcome {
    let annotations = load_annotations(file)?;
    let mut textual: BTreeMap<String, usize> = BTreeMap::new();
    let mut semantic: BTreeMap<String, usize> = BTreeMap::new();
    let mut comments = 0usize;
    for a in &annotations {
        let mut leaves = Vec::new();
        for body in &a.bodies {
            collect_leaves(body, &mut leaves);
        }
        for leaf in leaves {
            match (classify_body(leaf), leaf) {
                (Ok(BodyRole::TextualTag), ResourceRef::EmbeddedText(t)) => *textual.entry(t.chars.clone()).or_default() += 1,
                (Ok(BodyRole::SemanticTag), r) => *semantic.entry(r.id().to_string()).or_default() += 1,
                (Ok(BodyRole::Comment), _) => comments += 1,
                _ => {}
            }
        }
    }
    let body = json!({
        "annotations": annotations.len(),
        "textual": textual,
        "semantic": semantic,
        "other_bodies": comments,
    });
    Ok(report("tags", true, body, EXIT_OK))
}

/// Every External or EmbeddedText leaf, across all construct branches.
fn collect_leaves<'a>(r: &'a ResourceRef, out: &mut Vec<&'a ResourceRef>) {
    match r {
        ResourceRef::Construct(c) => c.items.iter().for_each(|i| collect_leaves(i, out)),
        ResourceRef::Specific(_) => {}
        leaf => out.push(leaf),
    }
}
