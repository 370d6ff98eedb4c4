//! Command-line front end: build models, run verification suites, evaluate
//! ad-hoc words, re-render saved reports.
//!
//! Exit codes are stable: 0 when everything verifies, 1 when a verification
//! step fails, 2 on configuration, parse, or IO errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};

use crate::atlas::{build_atlas, default_atlas_file, AtlasFile, CurveAtlas};
use crate::builtin::{builtin_script, SCRIPT_IDS};
use crate::engine;
use crate::ends;
use crate::error::ScriptError;
use crate::script::{run_script, VerificationReport};
use crate::surface::{CurveName, SurfaceConfig};
use crate::word::parse_word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the default model directory.
pub const MODEL_DIR_ENV: &str = "BIGMCG_MODEL_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "bigmcg",
    about = "Verify mapping class group generator computations on a finite truncation",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Write the default atlas and the bundled derivation scripts to a directory.
    Init(InitArgs),
    /// Replay derivation scripts and report per-step results.
    Verify(VerifyArgs),
    /// Evaluate a word on homology and on the ends.
    Eval(EvalArgs),
    /// Re-render a saved JSON report (object or array) as text.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
struct InitArgs {
    /// Number of ends.
    #[arg(long)]
    ends: u32,
    /// Handles kept per arm.
    #[arg(long, default_value_t = SurfaceConfig::DEFAULT_DEPTH)]
    depth: u32,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Number of ends, a single value (`7`) or an inclusive range (`3..8`).
    #[arg(long)]
    ends: String,
    /// Handles kept per arm.
    #[arg(long, default_value_t = SurfaceConfig::DEFAULT_DEPTH)]
    depth: u32,
    /// Atlas file; defaults to the bundled model (or $BIGMCG_MODEL_DIR).
    #[arg(long)]
    atlas: Option<PathBuf>,
    /// Script id to run (repeatable).
    #[arg(long = "lemma")]
    lemmas: Vec<String>,
    /// Run every script applicable at each requested n.
    #[arg(long)]
    all: bool,
    /// Emit reports as a JSON array instead of text.
    #[arg(long)]
    json: bool,
    /// Parallel verification jobs.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// The word to evaluate, in the bracket grammar.
    word: String,
    /// Print the image of this curve instead of the full matrix.
    #[arg(long)]
    on: Option<String>,
    /// Print only the end permutation.
    #[arg(long)]
    perm: bool,
    #[arg(long, default_value_t = 7)]
    ends: u32,
    #[arg(long, default_value_t = SurfaceConfig::DEFAULT_DEPTH)]
    depth: u32,
    #[arg(long)]
    atlas: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// Saved report file (JSON object or array).
    file: PathBuf,
}

/// Run the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Init(args) => cmd_init(&args),
        Cmd::Verify(args) => cmd_verify(&args),
        Cmd::Eval(args) => cmd_eval(&args),
        Cmd::Report(args) => cmd_report(&args),
    }
}

fn fail_usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn parse_ends_spec(spec: &str) -> Result<Vec<u32>, String> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range start `{lo}`"))?;
        let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range end `{hi}`"))?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok((lo..=hi).collect())
    } else {
        let n: u32 = spec.trim().parse().map_err(|_| format!("bad ends value `{spec}`"))?;
        Ok(vec![n])
    }
}

fn load_atlas(
    cfg: &SurfaceConfig,
    path: &Option<PathBuf>,
) -> Result<CurveAtlas, String> {
    let file = match path {
        Some(p) => read_atlas_file(p)?,
        None => match model_dir_atlas(cfg) {
            Some(Ok(file)) => file,
            Some(Err(e)) => return Err(e),
            None => default_atlas_file(cfg),
        },
    };
    if file.config.ends != cfg.ends || file.config.depth != cfg.depth {
        return Err(format!(
            "atlas is for n = {}, depth = {}, requested n = {}, depth = {}",
            file.config.ends, file.config.depth, cfg.ends, cfg.depth
        ));
    }
    build_atlas(&file).map_err(|e| e.to_string())
}

fn read_atlas_file(path: &Path) -> Result<AtlasFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    AtlasFile::from_json(&text).map_err(|e| e.to_string())
}

fn model_dir_atlas(cfg: &SurfaceConfig) -> Option<Result<AtlasFile, String>> {
    let dir = std::env::var_os(MODEL_DIR_ENV)?;
    let path = PathBuf::from(dir).join(atlas_file_name(cfg));
    if path.exists() {
        Some(read_atlas_file(&path))
    } else {
        None
    }
}

fn atlas_file_name(cfg: &SurfaceConfig) -> String {
    format!("atlas-n{}-g{}.json", cfg.ends, cfg.depth)
}

fn cmd_init(args: &InitArgs) -> i32 {
    let cfg = match SurfaceConfig::new(args.ends, args.depth) {
        Ok(cfg) => cfg,
        Err(e) => return fail_usage(e),
    };
    let file = default_atlas_file(&cfg);
    if let Err(e) = build_atlas(&file) {
        return fail_usage(format!("generated atlas fails validation: {e}"));
    }
    if let Err(e) = fs::create_dir_all(&args.out) {
        return fail_usage(format!("{}: {e}", args.out.display()));
    }
    let atlas_path = args.out.join(atlas_file_name(&cfg));
    if let Err(e) = fs::write(&atlas_path, file.to_json()) {
        return fail_usage(format!("{}: {e}", atlas_path.display()));
    }
    let mut written = vec![atlas_path.display().to_string()];
    for id in SCRIPT_IDS {
        let Some(script) = builtin_script(id, &cfg) else { continue };
        if !script.requires.admits(cfg.ends) {
            continue;
        }
        let path = args.out.join(format!("{id}-n{}.json", cfg.ends));
        if let Err(e) = fs::write(&path, script.to_json()) {
            return fail_usage(format!("{}: {e}", path.display()));
        }
        written.push(path.display().to_string());
    }
    for w in written {
        println!("wrote {w}");
    }
    EXIT_OK
}

fn selected_ids(args: &VerifyArgs) -> Result<Vec<String>, String> {
    if args.all {
        if !args.lemmas.is_empty() {
            return Err("--all and --lemma are mutually exclusive".into());
        }
        return Ok(SCRIPT_IDS.iter().map(|s| s.to_string()).collect());
    }
    if args.lemmas.is_empty() {
        return Err("select scripts with --lemma <id> or --all".into());
    }
    for id in &args.lemmas {
        if !SCRIPT_IDS.contains(&id.as_str()) {
            return Err(format!(
                "unknown script `{id}`; available: {}",
                SCRIPT_IDS.join(", ")
            ));
        }
    }
    Ok(args.lemmas.clone())
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let ns = match parse_ends_spec(&args.ends) {
        Ok(ns) => ns,
        Err(e) => return fail_usage(e),
    };
    let ids = match selected_ids(args) {
        Ok(ids) => ids,
        Err(e) => return fail_usage(e),
    };

    // Assemble the (script, n) task list up front, in deterministic order.
    let mut tasks: Vec<(String, SurfaceConfig)> = Vec::new();
    for &n in &ns {
        let cfg = match SurfaceConfig::new(n, args.depth) {
            Ok(cfg) => cfg,
            Err(e) => return fail_usage(e),
        };
        for id in &ids {
            let Some(script) = builtin_script(id, &cfg) else {
                return fail_usage(format!("unknown script `{id}`"));
            };
            if script.requires.admits(n) {
                tasks.push((id.clone(), cfg));
            } else if !args.all {
                return fail_usage(ScriptError::NotApplicable { id: id.clone(), n });
            }
        }
    }

    let mut atlases: Vec<(SurfaceConfig, CurveAtlas)> = Vec::new();
    for &n in &ns {
        let cfg = SurfaceConfig::new(n, args.depth).expect("validated above");
        match load_atlas(&cfg, &args.atlas) {
            Ok(atlas) => atlases.push((cfg, atlas)),
            Err(e) => return fail_usage(e),
        }
    }
    let atlas_for = |cfg: &SurfaceConfig| -> &CurveAtlas {
        &atlases.iter().find(|(c, _)| c == cfg).expect("atlas built").1
    };

    let jobs = args.jobs.max(1).min(tasks.len().max(1));
    let mut slots: Vec<Option<Result<VerificationReport, ScriptError>>> = Vec::new();
    slots.resize_with(tasks.len(), || None);
    let results: Mutex<Vec<Option<Result<VerificationReport, ScriptError>>>> = Mutex::new(slots);
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::SeqCst);
                if i >= tasks.len() {
                    break;
                }
                let (id, cfg) = &tasks[i];
                let outcome = builtin_script(id, cfg)
                    .ok_or_else(|| ScriptError::UnknownScript(id.clone()))
                    .and_then(|script| run_script(&script, atlas_for(cfg)));
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });

    let results = results.into_inner().unwrap();
    let mut reports = Vec::new();
    for outcome in results {
        match outcome.expect("every task ran") {
            Ok(report) => reports.push(report),
            Err(e) => return fail_usage(e),
        }
    }

    let all_passed = reports.iter().all(|r| r.passed);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    } else {
        for r in &reports {
            print!("{}", r.render_text());
        }
        println!(
            "{}: {} of {} runs verified",
            if all_passed { "PASS" } else { "FAIL" },
            reports.iter().filter(|r| r.passed).count(),
            reports.len()
        );
    }
    if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

fn cmd_eval(args: &EvalArgs) -> i32 {
    let cfg = match SurfaceConfig::new(args.ends, args.depth) {
        Ok(cfg) => cfg,
        Err(e) => return fail_usage(e),
    };
    let atlas = match load_atlas(&cfg, &args.atlas) {
        Ok(a) => a,
        Err(e) => return fail_usage(e),
    };
    let word = match parse_word(&args.word) {
        Ok(w) => w,
        Err(e) => return fail_usage(e),
    };
    let perm = ends::perm_of(&word, &cfg);
    if args.perm {
        println!("{perm}");
        return EXIT_OK;
    }
    if let Some(curve_text) = &args.on {
        let name: CurveName = match curve_text.parse() {
            Ok(n) => n,
            Err(e) => return fail_usage(e),
        };
        match engine::evaluate_curve(&word, &name, &atlas) {
            Ok(class) => {
                println!("{}", class.display(&cfg));
                EXIT_OK
            }
            Err(e) => fail_usage(e),
        }
    } else {
        match engine::word_matrix(&word, &atlas) {
            Ok(m) => {
                print!("{m}");
                println!("ends: {perm}");
                EXIT_OK
            }
            Err(e) => fail_usage(e),
        }
    }
}

fn cmd_report(args: &ReportArgs) -> i32 {
    let text = match fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return fail_usage(format!("{}: {e}", args.file.display())),
    };
    let reports: Vec<VerificationReport> =
        match serde_json::from_str::<Vec<VerificationReport>>(&text) {
            Ok(rs) => rs,
            Err(_) => match serde_json::from_str::<VerificationReport>(&text) {
                Ok(r) => vec![r],
                Err(e) => return fail_usage(format!("not a report file: {e}")),
            },
        };
    let mut all_passed = true;
    for r in &reports {
        print!("{}", r.render_text());
        all_passed &= r.passed;
    }
    if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}
