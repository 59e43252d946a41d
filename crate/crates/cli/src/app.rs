use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use knee_mcdm::gen::{generate, Family, FrontSpec};
use knee_mcdm::{
    dominance_filter, format_number, load_front, normalize, rank, select, verify_equivalence,
    write_front, Decision, EquivalenceReport, Format, Front, FrontError, McdmError, Method,
    NormalizedFront, RankedClass, Sense, DEFAULT_EPSILON,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{bench, exit, plot, sampling};

/// Knee selection on approximate Pareto fronts.
#[derive(Debug, Parser)]
#[command(name = "knee-mcdm", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Select the knee class of a front.
    Select(SelectArgs),
    /// List every equivalence class, best first.
    Rank(RankArgs),
    /// Check that all selectors agree.
    Verify(VerifyArgs),
    /// Write a benchmark front.
    Gen(GenArgs),
    /// Time the selectors against each other.
    Bench(BenchArgs),
    /// Draw a two-objective decision as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Front file; reads standard input when absent or `-`.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Input format; guessed from the file extension, CSV otherwise.
    #[arg(long, value_enum)]
    format: Option<FrontFormat>,
    /// Comma-separated objective columns to maximize.
    #[arg(long, value_delimiter = ',')]
    maximize: Vec<String>,
    /// Keep dominated solutions.
    #[arg(long)]
    no_filter: bool,
    /// Relative tolerance for equal normalized sums.
    #[arg(long, env = "KNEE_MCDM_EPSILON", default_value_t = DEFAULT_EPSILON, value_parser = parse_epsilon)]
    epsilon: f64,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write the result here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output_format: OutputFormat,
}

#[derive(Debug, Args)]
struct SelectArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// mmd, ws or dnc.
    #[arg(long, default_value = "mmd")]
    method: Method,
    /// Pairing seed of the dnc tournament.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print only the lexicographically smallest winner id.
    #[arg(long)]
    representative: bool,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Tournament seed; repeat for several. Defaults to 1, 2, 3 and 4.
    #[arg(long = "seed")]
    seeds: Vec<u64>,
    /// Verify randomly generated fronts instead of an input file.
    #[arg(long, conflicts_with = "input")]
    self_test: bool,
    /// Number of fronts for --self-test.
    #[arg(long, default_value_t = 100, requires = "self_test")]
    fronts: usize,
    /// Generator seed for --self-test.
    #[arg(long, default_value_t = 0, requires = "self_test")]
    sample_seed: u64,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// convex2d, concave2d, line2d, plane3d, sphere3d, disconnected2d, table1 or table2like.
    #[arg(long)]
    family: Family,
    /// Number of solutions; the table fixtures only come in their own size.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Half-width of uniform noise added to every value.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, value_enum, default_value_t = FrontFormat::Csv)]
    format: FrontFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Category::All)]
    category: Category,
    /// Repetition counts for C1.
    #[arg(long, value_delimiter = ',', default_value = "100,1000,3000")]
    runs: Vec<usize>,
    /// Front sizes for C2.
    #[arg(long, value_delimiter = ',', default_value = "25,50,100,200")]
    sizes: Vec<usize>,
    /// Repetitions per workload in C2 and C3.
    #[arg(long, default_value_t = 500)]
    reps: usize,
    /// Samples per front in C3.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "KNEE_MCDM_EPSILON", default_value_t = DEFAULT_EPSILON, value_parser = parse_epsilon)]
    epsilon: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    output_format: TableFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "mmd")]
    method: Method,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FrontFormat {
    Csv,
    Json,
}

impl From<FrontFormat> for Format {
    fn from(f: FrontFormat) -> Self {
        match f {
            FrontFormat::Csv => Format::Csv,
            FrontFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Category {
    C1,
    C2,
    C3,
    All,
}

fn parse_epsilon(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("must be finite and non-negative, got {v}"))
    }
}

/// A command failure: exit code plus message for standard error.
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: exit::INPUT,
            message: message.into(),
        }
    }
}

impl From<FrontError> for Failure {
    fn from(e: FrontError) -> Self {
        let code = match e {
            FrontError::AllDimensionsDegenerate => exit::DEGENERATE,
            _ => exit::INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<McdmError> for Failure {
    fn from(e: McdmError) -> Self {
        let code = match e {
            McdmError::AllDimensionsDegenerate => exit::DEGENERATE,
            McdmError::EquivalenceViolation { .. } => exit::VIOLATION,
            _ => exit::INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

pub(crate) fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Select(args) => cmd_select(args, stdout, stderr),
        Command::Rank(args) => cmd_rank(args, stdout, stderr),
        Command::Verify(args) => cmd_verify(args, stdout, stderr),
        Command::Gen(args) => cmd_gen(args, stdout),
        Command::Bench(args) => cmd_bench(args, stdout),
        Command::Plot(args) => cmd_plot(args, stdout, stderr),
    }
}

fn load(args: &InputArgs, stderr: &mut dyn Write) -> Result<Front, Failure> {
    let path = args.input.as_deref().filter(|p| *p != Path::new("-"));
    let mut bytes = Vec::new();
    match path {
        Some(p) => {
            bytes = std::fs::read(p)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display())))?
        }
        None => {
            std::io::stdin()
                .read_to_end(&mut bytes)
                .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
        }
    }
    let format = match args.format {
        Some(f) => f.into(),
        None => match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        },
    };
    let overrides: Vec<(String, Sense)> = args
        .maximize
        .iter()
        .map(|c| (c.trim().to_string(), Sense::Maximize))
        .collect();
    let front = load_front(&bytes[..], format, &overrides)?;
    if args.no_filter {
        return Ok(front);
    }
    let (kept, removed) = dominance_filter(&front);
    if !removed.is_empty() {
        let _ = writeln!(
            stderr,
            "warning: dropped {} dominated solution(s): {}",
            removed.len(),
            removed.join(", ")
        );
    }
    Ok(kept)
}

fn normalized<'a>(
    front: &'a Front,
    stderr: &mut dyn Write,
) -> Result<NormalizedFront<'a>, Failure> {
    let nf = normalize(front)?;
    if front.len() > 1 {
        for &n in nf.degenerate_dims() {
            let _ = writeln!(
                stderr,
                "warning: objective `{}` has zero spread and is ignored",
                front.objective_names()[n]
            );
        }
    }
    Ok(nf)
}

fn emit(output: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Outcome {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(format!("cannot write output: {e}"))),
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn cmd_select(args: SelectArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let front = load(&args.input, stderr)?;
    let nf = normalized(&front, stderr)?;
    let decision = select(&nf, args.method, args.input.epsilon, args.seed)?;
    let text = if args.representative {
        format!("{}\n", decision.representative())
    } else {
        match args.output.output_format {
            OutputFormat::Json => decision.to_json(),
            OutputFormat::Csv => decision_csv(&decision),
            OutputFormat::Text => decision_text(&decision),
        }
    };
    emit(args.output.output.as_deref(), &text, stdout)
}

fn decision_csv(d: &Decision) -> String {
    let mut out = String::from("id,mmd,ws,winner\n");
    for s in &d.scores {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            s.id,
            format_number(s.mmd),
            format_number(s.ws),
            d.winner.contains(&s.id)
        );
    }
    out
}

fn decision_text(d: &Decision) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", d.method);
    let _ = writeln!(out, "winner: {}", d.winner.join(", "));
    for (id, f) in d.winner.iter().zip(&d.knee) {
        let values: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "knee {id}: {}", values.join(", "));
    }
    let _ = writeln!(out, "c_min_mmd: {}", d.c_min_mmd);
    let _ = writeln!(out, "c_min_ws: {}", d.c_min_ws);
    if let Some(trace) = &d.trace {
        for c in trace {
            let _ = writeln!(
                out,
                "round {}: class {} vs class {}, ip {:.4}, winner class {}",
                c.round, c.left, c.right, c.ip, c.winner
            );
        }
    }
    out
}

fn cmd_rank(args: RankArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let front = load(&args.input, stderr)?;
    let nf = normalized(&front, stderr)?;
    let ranking = rank(&nf, args.input.epsilon)?;
    let text = match args.output.output_format {
        OutputFormat::Json => ranking_json(&ranking),
        OutputFormat::Csv => {
            let mut out = String::from("rank,id,mmd\n");
            for c in &ranking {
                for id in &c.members {
                    let _ = writeln!(out, "{},{id},{}", c.rank, format_number(c.mmd));
                }
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for c in &ranking {
                let _ = writeln!(out, "{:>4}  {:.6}  {}", c.rank, c.mmd, c.members.join(", "));
            }
            out
        }
    };
    emit(args.output.output.as_deref(), &text, stdout)
}

fn ranking_json(ranking: &[RankedClass]) -> String {
    let mut out = String::from("{\n  \"ranking\": [");
    for (i, c) in ranking.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        let members: Vec<String> = c.members.iter().map(|m| quote(m)).collect();
        let _ = write!(
            out,
            "    {{\"rank\": {}, \"members\": [{}], \"mmd\": {}}}",
            c.rank,
            members.join(", "),
            format_number(c.mmd)
        );
    }
    out.push_str("\n  ]\n}\n");
    out
}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let seeds = if args.seeds.is_empty() {
        vec![1, 2, 3, 4]
    } else {
        args.seeds.clone()
    };
    if args.self_test {
        return self_test(&args, &seeds, stdout, stderr);
    }
    let front = load(&args.input, stderr)?;
    let nf = normalized(&front, stderr)?;
    let report = verify_equivalence(&nf, args.input.epsilon, &seeds)?;
    let text = match args.output.output_format {
        OutputFormat::Json => report_json(&report),
        OutputFormat::Csv => report_csv(&report),
        OutputFormat::Text => report_text(&report),
    };
    emit(args.output.output.as_deref(), &text, stdout)?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure {
            code: exit::VIOLATION,
            message: report.details.join("; "),
        })
    }
}

fn report_json(r: &EquivalenceReport) -> String {
    let ids: Vec<String> = r.winner.iter().map(|s| quote(s)).collect();
    let seeds: Vec<String> = r.seeds.iter().map(u64::to_string).collect();
    let details: Vec<String> = r.details.iter().map(|s| quote(s)).collect();
    format!(
        "{{\n  \"passed\": {},\n  \"winner_ids\": [{}],\n  \"c_min_mmd\": {},\n  \"c_min_ws\": {},\n  \"ideal_offset\": {},\n  \"offset_error\": {},\n  \"seeds\": [{}],\n  \"details\": [{}]\n}}\n",
        r.passed,
        ids.join(", "),
        format_number(r.c_min_mmd),
        format_number(r.c_min_ws),
        format_number(r.ideal_offset),
        format_number(r.offset_error),
        seeds.join(", "),
        details.join(", ")
    )
}

fn report_csv(r: &EquivalenceReport) -> String {
    format!(
        "passed,winner_ids,c_min_mmd,c_min_ws,ideal_offset,offset_error\n{},{},{},{},{},{}\n",
        r.passed,
        r.winner.join(";"),
        format_number(r.c_min_mmd),
        format_number(r.c_min_ws),
        format_number(r.ideal_offset),
        format_number(r.offset_error)
    )
}

fn report_text(r: &EquivalenceReport) -> String {
    let seeds: Vec<String> = r.seeds.iter().map(u64::to_string).collect();
    let mut out = format!(
        "{}: mmd, ws and dnc (seeds {}) select {}\n",
        if r.passed { "PASS" } else { "FAIL" },
        seeds.join(", "),
        r.winner.join(", ")
    );
    let _ = writeln!(
        out,
        "c_min_ws - c_min_mmd = {}, sum l/L = {}, error {:e}",
        r.c_min_ws - r.c_min_mmd,
        r.ideal_offset,
        r.offset_error
    );
    for d in &r.details {
        let _ = writeln!(out, "{d}");
    }
    out
}

fn self_test(
    args: &VerifyArgs,
    seeds: &[u64],
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(args.sample_seed);
    let mut failed = 0;
    for k in 0..args.fronts {
        let front = sampling::random_front(&mut rng, 64, 6);
        let nf = normalize(&front)?;
        let problem = match verify_equivalence(&nf, args.input.epsilon, seeds) {
            Ok(r) if r.passed => None,
            Ok(r) => Some(r.details.join("; ")),
            Err(e) => Some(e.to_string()),
        };
        if let Some(problem) = problem {
            failed += 1;
            let _ = writeln!(
                stderr,
                "front {k} ({} x {}): {problem}",
                front.len(),
                front.dims()
            );
        }
    }
    let passed = args.fronts - failed;
    let text = match args.output.output_format {
        OutputFormat::Json => format!(
            "{{\n  \"fronts\": {},\n  \"seeds\": {},\n  \"passed\": {passed},\n  \"failed\": {failed}\n}}\n",
            args.fronts,
            seeds.len()
        ),
        OutputFormat::Csv => format!("fronts,seeds,passed,failed\n{},{},{passed},{failed}\n", args.fronts, seeds.len()),
        OutputFormat::Text => format!(
            "self-test: {} fronts, {} seeds each: {passed} passed, {failed} failed\n",
            args.fronts,
            seeds.len()
        ),
    };
    emit(args.output.output.as_deref(), &text, stdout)?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: exit::VIOLATION,
            message: format!("{failed} of {} fronts failed", args.fronts),
        })
    }
}

fn cmd_gen(args: GenArgs, stdout: &mut dyn Write) -> Outcome {
    let samples = args
        .samples
        .unwrap_or_else(|| args.family.fixed_size().unwrap_or(50));
    let spec = FrontSpec {
        family: args.family,
        samples,
        seed: args.seed,
        noise: args.noise,
    };
    let front = generate(&spec).map_err(|e| Failure::input(e.to_string()))?;
    let mut buf = Vec::new();
    write_front(&front, &mut buf, args.format.into())?;
    let text = String::from_utf8(buf).expect("fronts are written as UTF-8");
    emit(args.output.as_deref(), &text, stdout)
}

fn cmd_bench(args: BenchArgs, stdout: &mut dyn Write) -> Outcome {
    if args.runs.contains(&0) || args.sizes.iter().any(|&m| m < 2) || args.reps == 0 {
        return Err(Failure::input(
            "runs and reps must be positive and sizes at least 2",
        ));
    }
    let all = args.category == Category::All;
    let mut rows = Vec::new();
    if all || args.category == Category::C1 {
        rows.extend(bench::c1(&args.runs, args.seed, args.epsilon));
    }
    if all || args.category == Category::C2 {
        rows.extend(bench::c2(&args.sizes, args.reps, args.seed, args.epsilon));
    }
    if all || args.category == Category::C3 {
        let samples = args.samples.max(3);
        rows.extend(bench::c3(samples, args.reps, args.seed, args.epsilon));
    }
    let text = match args.output_format {
        TableFormat::Text => bench::render_text(&rows),
        TableFormat::Csv => bench::render_csv(&rows),
    };
    emit(args.output.as_deref(), &text, stdout)?;
    if let Some(bad) = rows.iter().find(|r| !r.agree) {
        return Err(Failure {
            code: exit::VIOLATION,
            message: format!("selectors disagree on {} {}", bad.category, bad.label),
        });
    }
    Ok(())
}

fn cmd_plot(args: PlotArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let front = load(&args.input, stderr)?;
    if front.dims() != 2 {
        return Err(Failure {
            code: exit::PLOT,
            message: plot::PlotError::Dimensions(front.dims()).to_string(),
        });
    }
    let nf = normalized(&front, stderr)?;
    let decision = select(&nf, args.method, args.input.epsilon, args.seed)?;
    let svg = plot::render_svg(&nf, &decision).map_err(|e| Failure {
        code: exit::PLOT,
        message: e.to_string(),
    })?;
    emit(args.output.as_deref(), &svg, stdout)
}
