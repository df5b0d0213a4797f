use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gradedring::classify::{local_structure_in, ring_predicates, Flag};
use gradedring::ideals::{enumerate_graded_ideals, Ideal};
use gradedring::verifier::{default_corpus, parse_range, search_counterexample, summarize, verify_corpus, DEFAULT_RANGE};
use gradedring::{classify_ideal, Corpus, CorpusDocument, GradedRing, Outcome, RingSpecDocument, Statement};

#[derive(Parser)]
#[command(name = "gradedring", version, about = "Finite graded commutative rings: ideals, classification, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Ring-level commands.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Ideal-level commands.
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// Run verification statements over a corpus.
    Verify {
        /// Statement id (e.g. THM_2_6) or `all`.
        statement: String,
        /// Corpus document; the built-in corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Inclusive modulus range for range statements, `a..b`.
        #[arg(long)]
        range: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List corpus ideals where one flag holds and another fails.
    Search {
        #[arg(long)]
        hypothesis: String,
        #[arg(long)]
        conclusion: String,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Units, nilradical, Grad(0), homogeneous elements, graded ideals.
    Describe {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Classify one proper graded ideal.
    Classify {
        spec: PathBuf,
        /// A name from the document's `[ideals]` table or comma-separated generators.
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Exit status 2: bad input.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether the run is free of FAIL outcomes.
fn run(command: Command) -> Result<bool, UsageError> {
    match command {
        Command::Ring {
            command: RingCommand::Describe { spec, format },
        } => {
            let loaded = RingSpecDocument::load(&spec)?;
            emit(format, describe_text(&loaded.graded)?, || describe_json(&loaded.graded));
            Ok(true)
        }
        Command::Ideal {
            command: IdealCommand::Classify { spec, ideal, format },
        } => {
            let loaded = RingSpecDocument::load(&spec)?;
            let p = loaded.ideal(&ideal)?;
            let gr = &loaded.graded;
            let report = classify_ideal(gr, &p)?;
            let mut text = format!("{}: ideal {} = {{{}}}\n", gr.label(), p.describe(), p.names().join(", "));
            text += &format!("  Grad = {}\n", report.radical.describe());
            for flag in Flag::ALL {
                let value = report.flag(flag);
                text += &format!("  {:<30} {}", flag.as_str(), value);
                if let Some(w) = report.witnesses.get(&flag) {
                    text += &format!("  witness {}", w.render(gr));
                }
                text.push('\n');
            }
            emit(format, text, || {
                json!({
                    "ring": gr.label(),
                    "ideal": p.names(),
                    "radical": report.radical.names(),
                    "flags": Flag::ALL.iter().map(|f| (f.as_str().to_string(), json!(report.flag(*f)))).collect::<serde_json::Map<_, _>>(),
                    "witnesses": report.witnesses.iter().map(|(f, w)| (f.as_str().to_string(), json!(w.render(gr)))).collect::<serde_json::Map<_, _>>(),
                })
            });
            Ok(true)
        }
        Command::Verify {
            statement,
            corpus,
            range,
            format,
        } => {
            let statements: Vec<Statement> = if statement.eq_ignore_ascii_case("all") {
                Statement::ALL.to_vec()
            } else {
                vec![statement.parse()?]
            };
            let range = range.as_deref().map(parse_range).transpose()?.unwrap_or(DEFAULT_RANGE);
            let corpus = load_corpus(corpus.as_deref())?;
            let reports = verify_corpus(&statements, &corpus, range)?;
            let ok = reports.iter().all(|r| r.outcome != Outcome::Fail);
            let summary = summarize(&reports);
            let mut text: String = reports.iter().map(|r| r.to_text()).collect();
            if reports.len() > 1 {
                text += "summary\n";
                for s in &summary {
                    text += &format!("  {:<18} {:<9} {} targets\n", s.statement.id(), s.outcome, s.targets);
                }
            }
            emit(format, text, || json!({ "reports": reports, "summary": summary }));
            Ok(ok)
        }
        Command::Search {
            hypothesis,
            conclusion,
            corpus,
            format,
        } => {
            let hyp: Flag = hypothesis.parse()?;
            let concl: Flag = conclusion.parse()?;
            let corpus = load_corpus(corpus.as_deref())?;
            let found = search_counterexample(&corpus, hyp, concl)?;
            let mut text = format!("{} separation(s): {hyp} but not {concl}\n", found.len());
            for s in &found {
                text += &format!("  {}\n", s.render());
            }
            emit(format, text, || {
                Value::Array(
                    found
                        .iter()
                        .map(|s| {
                            json!({
                                "ring": s.ring.label(),
                                "ideal": s.ideal.names(),
                                "hypothesis": s.hypothesis.as_str(),
                                "conclusion": s.conclusion.as_str(),
                                "witness": s.witness.render(&s.ring),
                            })
                        })
                        .collect(),
                )
            });
            Ok(true)
        }
    }
}

fn load_corpus(path: Option<&Path>) -> Result<Corpus, UsageError> {
    Ok(match path {
        Some(p) => CorpusDocument::load(p)?,
        None => default_corpus()?,
    })
}

fn emit(format: Format, text: String, json: impl FnOnce() -> Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&json()).expect("report serializes")),
    }
}

fn names(gr: &GradedRing, set: impl IntoIterator<Item = gradedring::Elem>) -> Vec<String> {
    set.into_iter().map(|x| gr.name(x)).collect()
}

struct Description {
    lattice: Vec<Ideal>,
    maximal: Vec<Ideal>,
    local: bool,
}

fn analyse(gr: &GradedRing) -> Result<Description, UsageError> {
    let lattice = enumerate_graded_ideals(gr)?;
    let local = local_structure_in(gr, &lattice)?;
    Ok(Description {
        lattice,
        maximal: local.graded_maximal_ideals,
        local: local.is_graded_local,
    })
}

fn describe_text(gr: &GradedRing) -> Result<String, UsageError> {
    let r = gr.ring();
    let d = analyse(gr)?;
    let preds = ring_predicates(gr);
    let mut out = format!("{}\n", gr.label());
    out += &format!("  carrier size     {}\n", r.size());
    out += &format!("  grading group    {}\n", gr.group());
    out += &format!("  units            {{{}}}\n", names(gr, r.unit_set().iter()).join(", "));
    out += &format!("  nilradical       {{{}}}\n", names(gr, r.nilradical().iter()).join(", "));
    out += &format!("  Grad(0)          {{{}}}\n", names(gr, gr.grad_zero().iter()).join(", "));
    out += "  components\n";
    for (deg, comp) in gr.components() {
        out += &format!("    {:<14} {{{}}}\n", deg.to_string(), names(gr, comp.iter()).join(", "));
    }
    out += &format!("  homogeneous      {} elements\n", gr.homogeneous_elements().len());
    out += &format!("  graded ideals    {}\n", d.lattice.len());
    for i in &d.lattice {
        let tag = if d.maximal.contains(i) { "  (maximal)" } else { "" };
        out += &format!("    {} = {{{}}}{}\n", i.describe(), i.names().join(", "), tag);
    }
    out += &format!("  graded local     {}\n", d.local);
    out += &format!("  graded field     {}\n", preds.graded_field);
    out += &format!("  graded domain    {}\n", preds.graded_domain);
    out += &format!("  field            {}\n", r.is_field());
    out += &format!("  homogeneous elements nilpotent or unit  {}\n", preds.every_homogeneous_nilpotent_or_unit);
    Ok(out)
}

fn describe_json(gr: &GradedRing) -> Value {
    let r = gr.ring();
    let d = analyse(gr).unwrap_or(Description {
        lattice: Vec::new(),
        maximal: Vec::new(),
        local: false,
    });
    json!({
        "ring": gr.label(),
        "size": r.size(),
        "group": gr.group().to_string(),
        "units": names(gr, r.unit_set().iter()),
        "nilradical": names(gr, r.nilradical().iter()),
        "grad_zero": names(gr, gr.grad_zero().iter()),
        "components": gr.components().map(|(deg, c)| json!({ "degree": deg.to_string(), "elements": names(gr, c.iter()) })).collect::<Vec<_>>(),
        "homogeneous": names(gr, gr.homogeneous_elements().iter()),
        "graded_ideals": d.lattice.iter().map(|i| i.names()).collect::<Vec<_>>(),
        "graded_maximal": d.maximal.iter().map(|i| i.names()).collect::<Vec<_>>(),
        "graded_local": d.local,
        "predicates": ring_predicates(gr),
        "field": r.is_field(),
    })
}
