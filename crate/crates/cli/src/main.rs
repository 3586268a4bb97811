use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use copro_core::analytics::{corpus_agreement, pattern_yield, stats};
use copro_core::corpus_io::{export_column, read_corpus_with, write_corpus, Checks};
use copro_core::ingest::{ingest_text, read_tagged, OrgGazetteer, TaggerLexicon};
use copro_core::patterns::{expand, parse_config, PatternConfig};
use copro_core::validator::{exit_code, report, validate_corpus, AdjectiveStoplist, ReportFormat};
use copro_core::{Corpus, Document, Preannotation, Preannotator};

#[derive(Parser)]
#[command(name = "copro", version, about = "Pre-annotate, validate and measure company/product corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect pattern configurations.
    #[command(subcommand)]
    Patterns(PatternsCommand),
    /// Pre-annotate every file in a directory and write a corpus file.
    Preannotate(PreannotateArgs),
    /// Check a corpus against the annotation guidelines.
    Validate(ValidateArgs),
    /// Corpus statistics.
    Stats(StatsArgs),
    /// Agreement between two annotation layers of the same documents.
    Agreement(AgreementArgs),
    /// Convert between the corpus and column formats.
    Convert(ConvertArgs),
}

#[derive(Subcommand)]
enum PatternsCommand {
    /// Print every surface pattern, or just how many there are.
    Expand {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Args)]
struct PreannotateArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    gazetteer: PathBuf,
    /// Directory of input documents, read in file name order.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Inputs are in the tagged column format instead of raw text.
    #[arg(long)]
    tagged: bool,
    /// Tagger lexicon for raw text (defaults to the built-in one).
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Worker threads; output does not depend on this.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Extra stoplist words, one per line, added to the built-in list.
    #[arg(long)]
    stoplist: Option<PathBuf>,
    #[arg(long, default_value = "text")]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    Table,
    Kv,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "table")]
    format: Layout,
}

#[derive(Args)]
struct AgreementArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
    #[arg(long, value_enum, default_value = "table")]
    format: Layout,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Column,
    Corpus,
}

#[derive(Args)]
struct ConvertArgs {
    /// A corpus file (to column) or a column file or directory (to corpus).
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    to: Target,
    /// Defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure reported on stderr, with the exit status to use.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(path: &Path, code: u8) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(code, format!("{}: {e}", path.display())))
}

fn load_corpus(path: &Path, checks: Checks, code: u8) -> Result<Corpus, Failure> {
    let file = fs::File::open(path).map_err(|e| Failure::new(code, format!("{}: {e}", path.display())))?;
    read_corpus_with(BufReader::new(file), checks).map_err(|e| Failure::new(code, format!("{}: {e}", path.display())))
}

fn load_config(path: &Path) -> Result<PatternConfig, Failure> {
    parse_config(&read_text(path, 1)?).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))
}

fn doc_id(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Regular, non-hidden files of `dir` in lexicographic name order.
fn list_dir(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::new(1, format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Failure::new(1, format!("{}: {e}", dir.display())))?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if !hidden && entry.path().is_file() {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(1, format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::new(1, e.to_string())),
    }
}

fn patterns_expand(config: &Path, count_only: bool) -> Outcome {
    let surfaces = expand(&load_config(config)?);
    let mut out = String::new();
    if count_only {
        out = format!("{}\n", surfaces.len());
    } else {
        for s in &surfaces {
            out.push_str(&format!("{}\t{s}\n", s.id));
        }
    }
    write_output(None, &out)?;
    Ok(0)
}

fn preannotate(args: &PreannotateArgs) -> Outcome {
    let config = load_config(&args.config)?;
    let gazetteer = OrgGazetteer::parse(&read_text(&args.gazetteer, 1)?);
    let lexicon = match &args.lexicon {
        Some(p) => {
            TaggerLexicon::parse(&read_text(p, 1)?).map_err(|e| Failure::new(1, format!("{}: {e}", p.display())))?
        }
        None => TaggerLexicon::default(),
    };
    let pre = Preannotator::new(&config, gazetteer);
    let files = list_dir(&args.input)?;

    let run = |path: &PathBuf| -> Result<Preannotation, Failure> {
        let text = read_text(path, 1)?;
        let id = doc_id(path);
        let fail = |e: String| Failure::new(1, format!("{}: {e}", path.display()));
        let doc = if args.tagged {
            read_tagged(&id, &text).map_err(|e| fail(e.to_string()))?
        } else {
            ingest_text(&id, &text, &lexicon).map_err(|e| fail(e.to_string()))?
        };
        pre.annotate(&doc).map_err(|e| fail(e.to_string()))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Failure::new(1, e.to_string()))?;
    let results: Vec<Result<Preannotation, Failure>> = pool.install(|| files.par_iter().map(run).collect());
    let results: Vec<Preannotation> = results.into_iter().collect::<Result<_, _>>()?;

    let yields = pattern_yield(
        pre.pattern_ids(),
        results.iter().flat_map(|p| p.raw.iter().map(move |d| (p.document.doc_id(), d))),
    );
    let docs: Vec<Document> = results.into_iter().map(|p| p.document).collect();
    let corpus = Corpus::new(docs).map_err(|e| Failure::new(1, e.to_string()))?;
    let file = fs::File::create(&args.out).map_err(|e| Failure::new(1, format!("{}: {e}", args.out.display())))?;
    write_corpus(&corpus, io::BufWriter::new(file)).map_err(|e| Failure::new(1, e.to_string()))?;
    write_output(None, &yields.render())?;
    eprintln!("wrote {} documents to {}", corpus.documents().len(), args.out.display());
    Ok(0)
}

fn validate(args: &ValidateArgs) -> Outcome {
    let corpus = load_corpus(&args.input, Checks::Structural, 2)?;
    let mut stoplist = AdjectiveStoplist::default();
    if let Some(p) = &args.stoplist {
        let extra = AdjectiveStoplist::parse(&read_text(p, 2)?);
        stoplist.extend(extra.words());
    }
    let violations = validate_corpus(&corpus, &stoplist);
    write_output(None, &report(&violations, args.format))?;
    Ok(exit_code(&violations) as u8)
}

fn stats_cmd(args: &StatsArgs) -> Outcome {
    let corpus = load_corpus(&args.input, Checks::Structural, 1)?;
    let s = stats(&corpus).map_err(|e| Failure::new(1, format!("{}: {e}", args.input.display())))?;
    let out = match args.format {
        Layout::Table => s.render_table(),
        Layout::Kv => s.render_kv(),
    };
    write_output(None, &out)?;
    Ok(0)
}

fn agreement_cmd(args: &AgreementArgs) -> Outcome {
    let a = load_corpus(&args.a, Checks::Structural, 1)?;
    let b = load_corpus(&args.b, Checks::Structural, 1)?;
    let s = corpus_agreement(&a, &b).map_err(|e| Failure::new(1, e.to_string()))?;
    let out = match args.format {
        Layout::Table => s.render_table(),
        Layout::Kv => s.render_kv(),
    };
    write_output(None, &out)?;
    Ok(0)
}

fn convert(args: &ConvertArgs) -> Outcome {
    let text = match args.to {
        Target::Column => {
            let corpus = load_corpus(&args.input, Checks::Structural, 1)?;
            corpus.documents().iter().map(export_column).collect::<Vec<_>>().join("\n")
        }
        Target::Corpus => {
            let files = if args.input.is_dir() { list_dir(&args.input)? } else { vec![args.input.clone()] };
            let mut docs = Vec::with_capacity(files.len());
            for f in &files {
                let doc = read_tagged(&doc_id(f), &read_text(f, 1)?)
                    .map_err(|e| Failure::new(1, format!("{}: {e}", f.display())))?;
                docs.push(doc);
            }
            let corpus = Corpus::new(docs).map_err(|e| Failure::new(1, e.to_string()))?;
            copro_core::corpus_io::corpus_to_string(&corpus)
        }
    };
    write_output(args.out.as_deref(), &text)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Patterns(PatternsCommand::Expand { config, count_only }) => patterns_expand(config, *count_only),
        Command::Preannotate(args) => preannotate(args),
        Command::Validate(args) => validate(args),
        Command::Stats(args) => stats_cmd(args),
        Command::Agreement(args) => agreement_cmd(args),
        Command::Convert(args) => convert(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("copro: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
