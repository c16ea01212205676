//! Batch command-line surface.
//!
//! Every command reads its inputs, runs one library operation and renders a
//! report as JSON (default), CSV or aligned text. Exit codes: 0 ok, 2 parse
//! error, 3 shape or size mismatch, 4 infeasible request, 5 capacity limit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::coopgame::{self, Game, MarginalWeights, SolutionCoefficients, SolutionConcept};
use crate::io;
use crate::rational::{self, int};
use crate::specht;
use crate::symcore::enumerate_tabloids;
use crate::voting::{
    self, ConstructOptions, Profile, RankingScores, SpectralWeights, WeightingVector,
};
use crate::{Composition, Error, ModuleVector, Rational, Result};

#[derive(Parser, Debug)]
#[command(
    name = "tabloids",
    version,
    about = "Exact tallies, spectral decompositions and solution concepts"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomized inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Also print 12-significant-digit decimal approximations.
    #[arg(long, global = true)]
    pub approx: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Borda,
    Plurality,
    Antiplurality,
}

impl Preset {
    fn weights(self, rows: usize) -> Result<WeightingVector> {
        match self {
            Preset::Borda => WeightingVector::borda(rows),
            Preset::Plurality => WeightingVector::plurality(rows),
            Preset::Antiplurality => WeightingVector::antiplurality(rows),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Concept {
    Shapley,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positional tally of a ballot profile.
    Tally(TallyArgs),
    /// Kemeny scores of every full ranking.
    Kemeny(BallotArgs),
    /// Scores under γ₀T₀ + γ₁T₁ + γ₂T₂.
    Family(FamilyArgs),
    /// Split a profile into its W₀, W₁, W₂ and residual parts.
    Decompose(BallotArgs),
    /// Find a profile with prescribed tallies under several weighting vectors.
    ConstructProfile(ConstructArgs),
    /// Split every level of a game into its U₀, U₁ and common-kernel parts.
    GameDecompose(GameArgs),
    /// Payoffs of a solution concept on a game.
    GameSolve(GameSolveArgs),
    /// Efficiency, marginality and self-duality of a solution concept.
    GameAnalyze(GameAnalyzeArgs),
}

#[derive(Args, Debug)]
pub struct BallotArgs {
    /// Ballot file: JSON, or CSV lines `1>2>3,count` when the name ends in `.csv`.
    pub ballots: PathBuf,
    /// Candidate count for CSV input (inferred from the first ballot otherwise).
    #[arg(long)]
    pub candidates: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TallyArgs {
    #[command(flatten)]
    pub input: BallotArgs,
    #[arg(long, value_enum, default_value_t = Preset::Borda)]
    pub weights_preset: Preset,
    /// Weighting-vector file `{"weights": [...]}`; overrides the preset.
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub input: BallotArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma0: String,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma2: String,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// Weighting-vector files; their sum-zero parts are used.
    #[arg(long)]
    pub weights: Vec<PathBuf>,
    /// Preset weighting vectors, after any files.
    #[arg(long, value_enum)]
    pub preset: Vec<Preset>,
    /// Candidate count, needed when only presets are given.
    #[arg(long)]
    pub candidates: Option<usize>,
    /// Target tallies as module-vector files, one per weighting vector.
    /// Random sum-zero integer targets are drawn from --seed when omitted.
    #[arg(long)]
    pub targets: Vec<PathBuf>,
    #[arg(long)]
    pub as_integer_profile: bool,
    #[arg(long, requires = "as_integer_profile")]
    pub max_shift: Option<String>,
}

#[derive(Args, Debug)]
pub struct GameArgs {
    /// Game file `{"n": 3, "v": {"<bitmask>": "p/q"}}`.
    pub game: PathBuf,
}

#[derive(Args, Debug)]
#[group(id = "solution", required = true, multiple = false)]
pub struct ConceptArgs {
    #[arg(long, value_enum, group = "solution")]
    pub concept: Option<Concept>,
    /// Coefficient file `{"c0": [...], "c1": [...]}`.
    #[arg(long, group = "solution")]
    pub coeffs: Option<PathBuf>,
    /// Marginal weight file `{"m": [...]}`.
    #[arg(long, group = "solution")]
    pub marginal: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GameSolveArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[command(flatten)]
    pub concept: ConceptArgs,
}

#[derive(Args, Debug)]
pub struct GameAnalyzeArgs {
    #[command(flatten)]
    pub concept: ConceptArgs,
    /// Player count, needed with --concept.
    #[arg(long)]
    pub players: Option<usize>,
}

/// Exit code for a library error.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse { .. } | Error::InvalidArgument(_) => 2,
        Error::InvalidComposition(_)
        | Error::ShapeMismatch { .. }
        | Error::SizeMismatch { .. }
        | Error::RankOutOfRange { .. } => 3,
        Error::NotSumZero(_) | Error::DependentWeights | Error::Infeasible(_) => 4,
        Error::Capacity { .. } => 5,
    }
}

/// Parses arguments, runs the command and writes the report. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let outcome = execute(&cli).and_then(|text| match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs the command and returns the rendered report.
pub fn execute(cli: &Cli) -> Result<String> {
    let ctx = Ctx { approx: cli.approx };
    let report = match &cli.command {
        Command::Tally(args) => cmd_tally(&ctx, args)?,
        Command::Kemeny(args) => {
            let profile = read_profile(args)?;
            let n = profile.counts().n();
            ranking_report(
                &ctx,
                &profile,
                &SpectralWeights::kemeny(n),
                voting::kemeny_apply(profile.counts())?,
            )
        }
        Command::Family(args) => cmd_family(&ctx, args)?,
        Command::Decompose(args) => cmd_decompose(&ctx, args)?,
        Command::ConstructProfile(args) => cmd_construct_profile(&ctx, args, cli.seed)?,
        Command::GameDecompose(args) => cmd_game_decompose(&ctx, args)?,
        Command::GameSolve(args) => cmd_game_solve(&ctx, args)?,
        Command::GameAnalyze(args) => cmd_game_analyze(&ctx, args)?,
    };
    report.render(cli.format)
}

struct Ctx {
    approx: bool,
}

impl Ctx {
    fn num(&self, value: &Rational) -> Value {
        if self.approx {
            json!({ "exact": rational::format(value), "approx": rational::approx(value, 12) })
        } else {
            io::rational_to_json(value)
        }
    }

    fn nums(&self, values: &[Rational]) -> Value {
        Value::Array(values.iter().map(|v| self.num(v)).collect())
    }

    fn cell(&self, value: &Rational) -> String {
        if self.approx {
            format!(
                "{} (approx {})",
                rational::format(value),
                rational::approx(value, 12)
            )
        } else {
            rational::format(value)
        }
    }
}

#[derive(Default)]
struct Report {
    fields: Map<String, Value>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Report {
    fn field(mut self, key: &str, value: Value) -> Self {
        self.fields.insert(key.to_string(), value);
        self
    }

    fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(ToString::to_string).collect();
        self.rows = rows;
        self
    }

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&Value::Object(self.fields.clone()))
                    .expect("reports serialize");
                text.push('\n');
                Ok(text)
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                let write_err = |e: csv::Error| Error::InvalidArgument(format!("csv output: {e}"));
                writer.write_record(&self.header).map_err(write_err)?;
                for row in &self.rows {
                    writer.write_record(row).map_err(write_err)?;
                }
                let bytes = writer
                    .into_inner()
                    .map_err(|e| Error::InvalidArgument(format!("csv output: {e}")))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            Format::Pretty => Ok(self.pretty()),
        }
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::String(s) => writeln!(out, "{key}: {s}"),
                Value::Array(_) | Value::Object(_) if !self.rows.is_empty() && is_bulky(value) => {
                    Ok(())
                }
                other => writeln!(out, "{key}: {other}"),
            }
            .expect("writing to a string");
        }
        if !self.header.is_empty() {
            let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
            for row in &self.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            out.push('\n');
            for row in std::iter::once(&self.header).chain(&self.rows) {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, &w)| format!("{cell:<w$}"))
                    .collect();
                writeln!(out, "{}", line.join("  ").trim_end()).expect("writing to a string");
            }
        }
        out
    }
}

fn is_bulky(value: &Value) -> bool {
    value.to_string().len() > 60
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(path.display().to_string(), e))
}

fn read_profile(args: &BallotArgs) -> Result<Profile> {
    let text = read_text(&args.ballots)?;
    let is_csv = args
        .ballots
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("csv"));
    let profile = if is_csv {
        io::read_ballots_csv(&text, args.candidates)?
    } else {
        io::read_ballots_json(&text)?
    };
    if let Some(n) = args.candidates {
        if profile.counts().n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: profile.counts().n(),
            });
        }
    }
    Ok(profile)
}

fn profile_fields(report: Report, profile: &Profile, ctx: &Ctx) -> Report {
    let counts = profile.counts();
    report
        .field("n", json!(counts.n()))
        .field("shape", json!(counts.shape().parts()))
        .field("voter_total", ctx.num(&profile.voter_total()))
}

fn cmd_tally(ctx: &Ctx, args: &TallyArgs) -> Result<Report> {
    let profile = read_profile(&args.input)?;
    let w = match &args.weights {
        Some(path) => io::read_weights(&read_text(path)?)?,
        None => args
            .weights_preset
            .weights(profile.counts().shape().num_rows())?,
    };
    let tally = voting::positional_tally(&w, profile.counts())?;
    let candidates = |ranks: &[usize]| ranks.iter().map(|r| r + 1).collect::<Vec<_>>();
    let rows = candidate_rows(ctx, &tally);
    Ok(profile_fields(Report::default(), &profile, ctx)
        .field("weights", ctx.nums(w.weights()))
        .field(
            "scores",
            Value::Array(
                (0..tally.scores().dim())
                    .map(|r| json!({ "candidate": r + 1, "score": ctx.num(&tally.score(r)) }))
                    .collect(),
            ),
        )
        .field("winners", json!(candidates(tally.winners())))
        .field(
            "tiers",
            json!(tally
                .tiers()
                .iter()
                .map(|t| candidates(t))
                .collect::<Vec<_>>()),
        )
        .table(&["candidate", "score", "tier"], rows))
}

fn tier_of(tally: &RankingScores) -> Vec<usize> {
    let mut tiers = vec![0; tally.scores().dim()];
    for (t, members) in tally.tiers().iter().enumerate() {
        for &r in members {
            tiers[r] = t + 1;
        }
    }
    tiers
}

fn candidate_rows(ctx: &Ctx, tally: &RankingScores) -> Vec<Vec<String>> {
    let tiers = tier_of(tally);
    (0..tally.scores().dim())
        .map(|r| {
            vec![
                (r + 1).to_string(),
                ctx.cell(&tally.score(r)),
                tiers[r].to_string(),
            ]
        })
        .collect()
}

/// Shared by `kemeny` and `family`, so that the family at the Kemeny
/// coordinates reproduces the Kemeny report byte for byte.
fn ranking_report(
    ctx: &Ctx,
    profile: &Profile,
    gamma: &SpectralWeights,
    tally: RankingScores,
) -> Report {
    let shape = tally.scores().shape().clone();
    let rankings = enumerate_tabloids(&shape).expect("scores were computed on this shape");
    let labels: Vec<String> = rankings.iter().map(io::ranking_to_string).collect();
    let tiers = tier_of(&tally);
    let rows = labels
        .iter()
        .enumerate()
        .map(|(r, label)| {
            vec![
                label.clone(),
                ctx.cell(&tally.score(r)),
                tiers[r].to_string(),
            ]
        })
        .collect();
    let label_list = |ranks: &[usize]| ranks.iter().map(|&r| labels[r].clone()).collect::<Vec<_>>();
    profile_fields(Report::default(), profile, ctx)
        .field("gamma", ctx.nums(&gamma.0))
        .field(
            "rankings",
            Value::Array(
                labels
                    .iter()
                    .enumerate()
                    .map(
                        |(r, label)| json!({ "ranking": label, "score": ctx.num(&tally.score(r)) }),
                    )
                    .collect(),
            ),
        )
        .field("winners", json!(label_list(tally.winners())))
        .field(
            "tiers",
            json!(tally
                .tiers()
                .iter()
                .map(|t| label_list(t))
                .collect::<Vec<_>>()),
        )
        .table(&["ranking", "score", "tier"], rows)
}

fn parse_flag(name: &str, text: &str) -> Result<Rational> {
    rational::parse(text).map_err(|_| Error::parse(name, format!("malformed rational {text:?}")))
}

fn cmd_family(ctx: &Ctx, args: &FamilyArgs) -> Result<Report> {
    let gamma = SpectralWeights([
        parse_flag("--gamma0", &args.gamma0)?,
        parse_flag("--gamma1", &args.gamma1)?,
        parse_flag("--gamma2", &args.gamma2)?,
    ]);
    let profile = read_profile(&args.input)?;
    let tally = voting::family_apply(&gamma, profile.counts())?;
    Ok(ranking_report(ctx, &profile, &gamma, tally))
}

fn cmd_decompose(ctx: &Ctx, args: &BallotArgs) -> Result<Report> {
    let profile = read_profile(args)?;
    let f = profile.counts();
    let mut parts = specht::spectral_components(f)?;
    let residual = parts.iter().try_fold(f.clone(), |acc, p| acc.sub(p))?;
    parts.push(residual);
    let mut names: Vec<&str> = vec!["W0", "W1", "W2"];
    names.truncate(parts.len() - 1);
    names.push("residual");

    let components = names
        .iter()
        .zip(&parts)
        .map(|(name, part)| {
            json!({
                "name": name,
                "norm_squared": ctx.num(&part.norm_squared()),
                "vector": io::vector_to_json(part),
            })
        })
        .collect();
    let labels = enumerate_tabloids(f.shape())?;
    let rows = labels
        .iter()
        .enumerate()
        .map(|(r, x)| {
            let mut row = vec![r.to_string(), io::ranking_to_string(x), ctx.cell(&f.get(r))];
            row.extend(parts.iter().map(|p| ctx.cell(&p.get(r))));
            row
        })
        .collect();
    let mut header = vec!["rank", "ranking", "profile"];
    header.extend(&names);
    Ok(profile_fields(Report::default(), &profile, ctx)
        .field("components", Value::Array(components))
        .table(&header, rows))
}

fn random_sum_zero(rng: &mut ChaCha8Rng, n: usize) -> Result<ModuleVector> {
    let raw: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-9..=9))).collect();
    let mean = raw.iter().sum::<Rational>() / int(n as i64);
    ModuleVector::from_values(
        &Composition::candidates(n)?,
        raw.into_iter().map(|v| v - &mean).collect(),
    )
}

fn cmd_construct_profile(ctx: &Ctx, args: &ConstructArgs, seed: u64) -> Result<Report> {
    let mut ws = args
        .weights
        .iter()
        .map(|path| io::read_weights(&read_text(path)?))
        .collect::<Result<Vec<_>>>()?;
    if !args.preset.is_empty() {
        let n = args
            .candidates
            .or_else(|| ws.first().map(WeightingVector::n))
            .ok_or_else(|| Error::parse("--candidates", "required when only presets are given"))?;
        for preset in &args.preset {
            ws.push(preset.weights(n)?);
        }
    }
    if ws.is_empty() {
        return Err(Error::parse(
            "--weights",
            "give at least one weighting vector",
        ));
    }
    let n = ws[0].n();
    if let Some(expected) = args.candidates {
        if expected != n {
            return Err(Error::SizeMismatch { expected, found: n });
        }
    }
    let hats: Vec<WeightingVector> = ws.iter().map(WeightingVector::hat).collect();

    let random = args.targets.is_empty();
    let targets = if random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..hats.len())
            .map(|_| random_sum_zero(&mut rng, n))
            .collect::<Result<Vec<_>>>()?
    } else {
        if args.targets.len() != hats.len() {
            return Err(Error::parse(
                "--targets",
                format!(
                    "expected {} target files, got {}",
                    hats.len(),
                    args.targets.len()
                ),
            ));
        }
        args.targets
            .iter()
            .map(|path| io::read_vector(&read_text(path)?))
            .collect::<Result<Vec<_>>>()?
    };
    let max_shift = args
        .max_shift
        .as_deref()
        .map(|text| {
            text.parse::<BigInt>()
                .map_err(|_| Error::parse("--max-shift", format!("malformed integer {text:?}")))
        })
        .transpose()?;
    let options = ConstructOptions {
        integer_profile: args.as_integer_profile,
        max_shift,
    };
    let built = voting::construct_profile(&hats, &targets, &options)?;

    let verified = hats
        .iter()
        .zip(&targets)
        .map(|(w, r)| Ok(voting::apply_positional(w, &built.solution)? == *r))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);

    let labels = enumerate_tabloids(built.solution.shape())?;
    let rows = labels
        .iter()
        .enumerate()
        .map(|(r, x)| {
            let mut row = vec![
                r.to_string(),
                io::ranking_to_string(x),
                ctx.cell(&built.solution.get(r)),
            ];
            if let Some(p) = &built.integer_profile {
                row.push(ctx.cell(&p.profile.get(r)));
            }
            row
        })
        .collect();
    let mut header = vec!["rank", "ranking", "solution"];
    let mut report = Report::default()
        .field("n", json!(n))
        .field(
            "weights",
            Value::Array(hats.iter().map(|w| ctx.nums(w.weights())).collect()),
        )
        .field(
            "targets",
            Value::Array(targets.iter().map(|t| ctx.nums(&t.to_values())).collect()),
        )
        .field(
            "targets_source",
            json!(if random {
                format!("seed {seed}")
            } else {
                "files".to_string()
            }),
        )
        .field("solution", io::vector_to_json(&built.solution))
        .field("solution_dimension", json!(built.solution_dimension))
        .field("verified", json!(verified));
    if let Some(p) = &built.integer_profile {
        header.push("integer_profile");
        let voter_total: Rational = p.profile.sum();
        report = report.field(
            "integer_profile",
            json!({
                "profile": io::vector_to_json(&p.profile),
                "scale": p.scale.to_string(),
                "shift": p.shift.to_string(),
                "voter_total": ctx.num(&voter_total),
            }),
        );
    }
    Ok(report.table(&header, rows))
}

fn read_game(args: &GameArgs) -> Result<Game> {
    io::read_game(&read_text(&args.game)?)
}

fn game_fields(report: Report, v: &Game, ctx: &Ctx) -> Report {
    report
        .field("n", json!(v.n()))
        .field("grand_value", ctx.num(v.grand_value()))
}

fn coalition_label(s: coopgame::Coalition) -> String {
    let players: Vec<String> = coopgame::players_of(s)
        .iter()
        .map(ToString::to_string)
        .collect();
    format!("{{{}}}", players.join(","))
}

fn cmd_game_decompose(ctx: &Ctx, args: &GameArgs) -> Result<Report> {
    let v = read_game(args)?;
    let levels = coopgame::decompose_game(&v)?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for level in &levels {
        let coalitions = coopgame::level_coalitions(v.n(), level.k)?;
        for (r, &s) in coalitions.iter().enumerate() {
            rows.push(vec![
                level.k.to_string(),
                coalition_label(s),
                ctx.cell(v.value(s)),
                ctx.cell(&level.mean_part.get(r)),
                ctx.cell(&level.u1_part.get(r)),
                ctx.cell(&level.kernel_part.get(r)),
            ]);
        }
        entries.push(json!({
            "k": level.k,
            "average": ctx.num(&coopgame::level_average(&v, level.k)?),
            "u1_norm_squared": ctx.num(&level.u1_part.norm_squared()),
            "kernel_norm_squared": ctx.num(&level.kernel_part.norm_squared()),
            "mean_part": io::vector_to_json(&level.mean_part),
            "u1_part": io::vector_to_json(&level.u1_part),
            "kernel_part": io::vector_to_json(&level.kernel_part),
        }));
    }
    let kernel = coopgame::kernel_game(v.n(), &levels)?;
    Ok(game_fields(Report::default(), &v, ctx)
        .field("levels", Value::Array(entries))
        .field("kernel_game", io::game_to_json(&kernel))
        .table(
            &[
                "k",
                "coalition",
                "value",
                "mean_part",
                "u1_part",
                "kernel_part",
            ],
            rows,
        ))
}

enum LoadedConcept {
    Coefficients(SolutionCoefficients, &'static str),
    Marginal(MarginalWeights),
}

impl LoadedConcept {
    fn load(args: &ConceptArgs, n: Option<usize>) -> Result<Self> {
        if let Some(Concept::Shapley) = args.concept {
            let n = n.ok_or_else(|| Error::parse("--players", "required with --concept"))?;
            return Ok(LoadedConcept::Coefficients(
                coopgame::shapley_coefficients(n)?,
                "shapley",
            ));
        }
        if let Some(path) = &args.coeffs {
            return Ok(LoadedConcept::Coefficients(
                io::read_coefficients(&read_text(path)?)?,
                "coefficients",
            ));
        }
        if let Some(path) = &args.marginal {
            return Ok(LoadedConcept::Marginal(io::read_marginal(&read_text(
                path,
            )?)?));
        }
        Err(Error::parse(
            "--concept",
            "choose --concept, --coeffs or --marginal",
        ))
    }

    fn coefficients(&self) -> SolutionCoefficients {
        match self {
            LoadedConcept::Coefficients(c, _) => c.clone(),
            LoadedConcept::Marginal(m) => coopgame::marginal_to_coefficients(m),
        }
    }

    fn concept(&self) -> &dyn SolutionConcept {
        match self {
            LoadedConcept::Coefficients(c, _) => c,
            LoadedConcept::Marginal(m) => m,
        }
    }

    fn describe(&self) -> Value {
        match self {
            LoadedConcept::Coefficients(c, source) => {
                json!({ "source": source, "coefficients": io::coefficients_to_json(c) })
            }
            LoadedConcept::Marginal(m) => {
                json!({ "source": "marginal", "m": io::marginal_to_json(m)["m"] })
            }
        }
    }
}

fn cmd_game_solve(ctx: &Ctx, args: &GameSolveArgs) -> Result<Report> {
    let v = read_game(&args.game)?;
    let concept = LoadedConcept::load(&args.concept, Some(v.n()))?;
    let phi = concept.concept();
    if phi.n() != v.n() {
        return Err(Error::SizeMismatch {
            expected: v.n(),
            found: phi.n(),
        });
    }
    let payoffs = phi.payoffs(&v)?;
    let rows = (0..v.n())
        .map(|i| vec![(i + 1).to_string(), ctx.cell(&payoffs.get(i))])
        .collect();
    Ok(game_fields(Report::default(), &v, ctx)
        .field("concept", concept.describe())
        .field(
            "payoffs",
            Value::Array(
                (0..v.n())
                    .map(|i| json!({ "player": i + 1, "payoff": ctx.num(&payoffs.get(i)) }))
                    .collect(),
            ),
        )
        .field("payoff_total", ctx.num(&payoffs.sum()))
        .table(&["player", "payoff"], rows))
}

const EFFICIENCY_CRITERION: &str = "c0^1 = ... = c0^(n-1) = 0 and c0^n = 1";

fn cmd_game_analyze(ctx: &Ctx, args: &GameAnalyzeArgs) -> Result<Report> {
    let concept = LoadedConcept::load(&args.concept, args.players)?;
    let c = concept.coefficients();
    let n = c.n();
    if let Some(expected) = args.players {
        if expected != n {
            return Err(Error::SizeMismatch { expected, found: n });
        }
    }
    let efficient = coopgame::efficiency_check(&c);
    let basis = Game::unanimity_basis(n)?;
    let semantic = coopgame::is_efficient_on(concept.concept(), &basis)?;
    let fit = coopgame::fit_marginal_weights(&c)?;
    let self_dual = coopgame::self_dual_check(concept.concept())?;
    let rows = vec![
        vec!["efficient".to_string(), efficient.to_string()],
        vec!["marginal".to_string(), fit.exact.to_string()],
        vec!["self_dual".to_string(), self_dual.to_string()],
    ];
    Ok(Report::default()
        .field("n", json!(n))
        .field("concept", concept.describe())
        .field(
            "coefficients",
            json!({ "c0": ctx.nums(c.c0()), "c1": ctx.nums(c.c1()) }),
        )
        .field(
            "efficiency",
            json!({
                "efficient": efficient,
                "criterion": EFFICIENCY_CRITERION,
                "unanimity_basis_check": semantic,
            }),
        )
        .field(
            "marginal",
            json!({
                "exact": fit.exact,
                "best_fit_m": ctx.nums(fit.weights.weights()),
            }),
        )
        .field("self_dual", json!(self_dual))
        .table(&["property", "holds"], rows))
}
