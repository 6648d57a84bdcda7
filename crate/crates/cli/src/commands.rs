use std::io::Read;
use std::path::PathBuf;

use braidcurve_core::braid::{cable_braid, delta_squared, torus_braid};
use braidcurve_core::{braids_equal, BandRepresentation, BraidWord, DeltaForm};
use braidcurve_group::{
    abelianization, bidisk_presentation, coset_enumerate, count_homs_to_symmetric, default_budget,
    projective_presentation, tietze_simplify, wirtinger_to_bands, CosetOutcome, DEFAULT_HOM_CAP,
};
use braidcurve_monodromy::{
    positivity_check, track_parametric, track_polynomial, ParametricOracle, TrackConfig, TrackedBraid,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::fixtures::{CheckSettings, FixtureData, FixtureSet};
use crate::input;

#[derive(Parser, Debug)]
#[command(name = "braidcurve", version, about = "Braids, branches and knot groups of complex plane curves")]
pub struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Braid word invariants and constructions.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Parametrized branches `z = t^m, w = t^n + …`.
    #[command(subcommand)]
    Branch(BranchCmd),
    /// Numerical braid monodromy over a small circle.
    #[command(subcommand)]
    Monodromy(MonodromyCmd),
    /// Group presentations from bands, simplification and finite quotients.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Checks of factorizations of the full twist.
    #[command(subcommand)]
    Delta2(Delta2Cmd),
    /// Bundled examples.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Subcommand, Debug)]
pub enum BraidCmd {
    /// Exponent sum, permutation and closure invariants of a word.
    Info { word: Option<String> },
    /// The product `a·b`.
    Compose { a: String, b: String },
    /// The inverse word.
    Invert { word: Option<String> },
    /// Whether two words are the same braid.
    Equal { a: String, b: String },
    /// The braid word of a band representation.
    Product { bands: Option<String> },
    /// `(σ₁⋯σ_{p−1})^q`, whose closure is the `(p, q)` torus knot.
    Torus { p: i64, q: i64 },
    /// The `(p, q)` cable of a knot braid.
    Cable { base: String, p: i64, q: i64 },
    /// The full twist `Δ²`.
    Delta2 {
        n: usize,
        #[arg(long, value_enum, default_value_t = Form::Power)]
        form: Form,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Form {
    /// `(σ₁⋯σ_{n−1})^n`.
    Power,
    /// The product of the pure generators `A_{i,j}`.
    Pure,
}

impl From<Form> for DeltaForm {
    fn from(f: Form) -> Self {
        match f {
            Form::Power => DeltaForm::Power,
            Form::Pure => DeltaForm::PureProduct,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum BranchCmd {
    /// Cable cascade, braid, Milnor number and genus of a branch.
    Analyze {
        branch: Option<String>,
        /// Also compare the cascade braid with numerical tracking.
        #[arg(long)]
        validate: bool,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        #[command(flatten)]
        track: TrackArgs,
    },
    /// The k-th characteristic approximation of a branch.
    Approx { branch: String, k: usize },
}

#[derive(Args, Debug, Clone)]
pub struct TrackArgs {
    /// Initial number of samples on the circle.
    #[arg(long, env = "MONODROMY_SAMPLES")]
    pub samples: Option<usize>,
    /// Relative collision tolerance.
    #[arg(long, env = "MONODROMY_TOL")]
    pub tol: Option<f64>,
    /// Projection direction in radians; scanned when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
}

impl TrackArgs {
    pub fn config(&self) -> Result<TrackConfig, CliError> {
        let mut cfg = TrackConfig::default();
        if let Some(s) = self.samples {
            if s < 4 {
                return Err(CliError::Usage(format!("need at least 4 samples, got {s}")));
            }
            cfg.initial_samples = s;
            cfg.max_samples = cfg.max_samples.max(s);
        }
        if let Some(t) = self.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Usage(format!("tolerance must be positive, got {t}")));
            }
            cfg.collision_tol = t;
        }
        cfg.theta = self.theta;
        Ok(cfg)
    }
}

#[derive(Subcommand, Debug)]
pub enum MonodromyCmd {
    /// Track the fibre of a branch over `|z| = ε`.
    Param {
        branch: Option<String>,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        #[command(flatten)]
        track: TrackArgs,
    },
    /// Track the roots of a polynomial curve over `|z| = ε`.
    Poly {
        poly: Option<String>,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        /// Treat the run as centred on a singularity: negative crossings are errors.
        #[arg(long)]
        singular: bool,
        #[command(flatten)]
        track: TrackArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CosetArgs {
    /// Coset table size at which enumeration gives up.
    #[arg(long = "max-cosets", env = "COSET_CAP", default_value_t = 100_000)]
    pub max_cosets: usize,
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    /// The presentation read off a band representation.
    FromBands {
        bands: Option<String>,
        /// Add the relation at infinity `x₁⋯x_n = 1`.
        #[arg(long)]
        projective: bool,
    },
    /// Tietze simplification.
    Simplify {
        input: Option<String>,
        /// Largest total relator length allowed while eliminating.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Abelian invariants.
    Abelianize { input: Option<String> },
    /// Order by coset enumeration.
    Order {
        input: Option<String>,
        #[command(flatten)]
        cosets: CosetArgs,
    },
    /// Number of homomorphisms into the symmetric group `S_k`.
    Homs {
        input: Option<String>,
        #[arg(long)]
        sym: usize,
        /// Search-node cap.
        #[arg(long, default_value_t = DEFAULT_HOM_CAP)]
        cap: u64,
    },
    /// A quasipositive band representation realizing a Wirtinger presentation.
    ToBands { input: Option<String> },
}

#[derive(Subcommand, Debug)]
pub enum Delta2Cmd {
    /// Whether a band representation multiplies to `Δ²`.
    Verify {
        bands: Option<String>,
        /// Strand count the factorization must have.
        #[arg(long)]
        n: Option<usize>,
        /// Read the bands from a fixture.
        #[arg(long, conflicts_with = "bands")]
        fixture: Option<String>,
        /// Check the square of the product instead.
        #[arg(long)]
        square: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixturesCmd {
    /// Names and descriptions.
    List {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// One fixture as stored.
    Show {
        name: String,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Run every fixture through its checks.
    Selftest {
        #[arg(long)]
        dir: Option<PathBuf>,
        #[command(flatten)]
        cosets: CosetArgs,
        #[command(flatten)]
        track: TrackArgs,
    },
    /// Write the bundled fixtures as JSON files.
    Export {
        #[arg(long)]
        dir: PathBuf,
    },
}

/// What a command prints, and the exit status it ends with.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Notes for stderr, kept off stdout so pipelines stay parseable.
    pub warnings: Vec<String>,
    pub code: i32,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, warnings: Vec::new(), code: 0 }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

fn word_output(w: &BraidWord) -> Output {
    Output::ok(w.to_string(), json!({ "word": w }))
}

fn cycles(w: &BraidWord) -> String {
    w.permutation()
        .cycles()
        .iter()
        .map(|c| format!("({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")))
        .collect()
}

pub fn execute(cli: Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    match cli.command {
        Command::Braid(cmd) => braid(cmd, stdin),
        Command::Branch(cmd) => branch(cmd, stdin),
        Command::Monodromy(cmd) => monodromy(cmd, stdin),
        Command::Group(cmd) => group(cmd, stdin),
        Command::Delta2(cmd) => delta2(cmd, stdin),
        Command::Fixtures(cmd) => fixtures(cmd),
    }
}

fn braid(cmd: BraidCmd, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let fixtures = FixtureSet::builtin();
    Ok(match cmd {
        BraidCmd::Info { word } => {
            let w = input::braid(word.as_deref(), stdin)?;
            let inv = w.closure_invariants();
            let genus = inv.fiber_genus().ok();
            let mut text = vec![
                format!("word: {w}"),
                format!("exponent sum: {}", w.exponent_sum()),
                format!("permutation: {}", cycles(&w)),
                format!("components: {}", inv.components),
                format!("component linking: {:?}", inv.component_linking),
            ];
            if let Some(sw) = &inv.self_windings {
                text.push(format!("self-windings: {sw:?}"));
            }
            if let Some(g) = genus {
                text.push(format!("fibre genus: {g}"));
            }
            text.push(format!("strictly positive: {}", w.is_strictly_positive()));
            Output::ok(
                text.join("\n"),
                json!({
                    "word": w,
                    "invariants": inv,
                    "battery": inv.battery(),
                    "fiber_genus": genus,
                    "strictly_positive": w.is_strictly_positive(),
                }),
            )
        }
        BraidCmd::Compose { a, b } => {
            let (a, b) = (input::braid(Some(&a), stdin)?, input::braid(Some(&b), stdin)?);
            word_output(&a.compose(&b)?)
        }
        BraidCmd::Invert { word } => word_output(&input::braid(word.as_deref(), stdin)?.invert()),
        BraidCmd::Equal { a, b } => {
            let (a, b) = (input::braid(Some(&a), stdin)?, input::braid(Some(&b), stdin)?);
            let equal = braids_equal(&a, &b)?;
            Output::ok(format!("equal: {equal}"), json!({ "equal": equal }))
        }
        BraidCmd::Product { bands } => word_output(&input::bands(bands.as_deref(), stdin, fixtures)?.product()),
        BraidCmd::Torus { p, q } => word_output(&torus_braid(p, q)?),
        BraidCmd::Cable { base, p, q } => word_output(&cable_braid(&input::braid(Some(&base), stdin)?, p, q)?),
        BraidCmd::Delta2 { n, form } => word_output(&delta_squared(n, form.into())?),
    })
}

fn branch(cmd: BranchCmd, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let fixtures = FixtureSet::builtin();
    Ok(match cmd {
        BranchCmd::Analyze { branch, validate, eps, track } => {
            let b = input::branch(branch.as_deref(), stdin, fixtures)?;
            let cascade = b.cable_cascade();
            let word = b.cascade_braid()?;
            let mu = b.milnor_number()?;
            let genus = b.fiber_genus()?;
            let pairs: Vec<String> = cascade.pairs().iter().map(|(p, q)| format!("({p},{q})")).collect();
            let mut text = vec![
                format!("branch: {b}"),
                format!("g-sequence: {:?}", b.g_sequence()),
                format!("cable cascade: {}", pairs.join(" ")),
                format!("braid: {word}"),
                format!("milnor number: {mu}"),
                format!("fibre genus: {genus}"),
            ];
            let mut out = json!({
                "branch": b,
                "g_sequence": b.g_sequence(),
                "characteristic_exponents": b.characteristic_exponents(),
                "cascade": cascade.pairs(),
                "word": word,
                "milnor_number": mu,
                "fiber_genus": genus,
            });
            if validate {
                let oracle = ParametricOracle { radius: eps, config: track.config()? };
                b.validated_cascade(&oracle)?;
                text.push(format!("oracle: invariants agree at radius {eps}"));
                out["validated"] = json!(true);
            }
            Output::ok(text.join("\n"), out)
        }
        BranchCmd::Approx { branch, k } => {
            let b = input::branch(Some(&branch), stdin, fixtures)?;
            let a = b.approximation(k)?;
            Output::ok(a.to_string(), json!({ "branch": a }))
        }
    })
}

fn tracked_output(t: &TrackedBraid, from_singularity: bool) -> Result<Output, CliError> {
    let report = positivity_check(t, from_singularity)?;
    let diagnostics = json!({
        "samples": t.samples,
        "min_separation": t.min_separation,
        "radius": t.radius,
        "theta": t.theta,
        "transversality": t.transversality,
        "root_permutation": t.root_permutation,
        "warnings": t.warnings,
        "positivity": report,
    });
    let text = format!("{}\n{}", t.word, serde_json::to_string_pretty(&diagnostics)?);
    let mut full = serde_json::to_value(t)?;
    full["positivity"] = serde_json::to_value(&report)?;
    Ok(Output::ok(text, full))
}

fn monodromy(cmd: MonodromyCmd, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let fixtures = FixtureSet::builtin();
    match cmd {
        MonodromyCmd::Param { branch, eps, track } => {
            let b = input::branch(branch.as_deref(), stdin, fixtures)?;
            tracked_output(&track_parametric(&b, eps, &track.config()?)?, true)
        }
        MonodromyCmd::Poly { poly, eps, singular, track } => {
            let f = input::poly(poly.as_deref(), stdin, fixtures)?;
            tracked_output(&track_polynomial(&f, eps, &track.config()?)?, singular)
        }
    }
}

fn group(cmd: GroupCmd, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let fixtures = FixtureSet::builtin();
    Ok(match cmd {
        GroupCmd::FromBands { bands, projective } => {
            let rep = input::bands(bands.as_deref(), stdin, fixtures)?;
            if projective {
                let out = projective_presentation(&rep)?;
                let mut o = Output::ok(out.presentation.to_string(), serde_json::to_value(&out)?);
                if !out.product_is_full_twist {
                    o.warnings.push("the product of the bands is not Δ²".into());
                }
                o
            } else {
                let p = bidisk_presentation(&rep);
                Output::ok(p.to_string(), json!({ "presentation": p }))
            }
        }
        GroupCmd::Simplify { input, budget } => {
            let p = input::presentation(input.as_deref(), stdin)?;
            let out = tietze_simplify(&p, budget.unwrap_or_else(|| default_budget(&p)));
            let mut o = Output::ok(out.presentation.to_string(), serde_json::to_value(&out)?);
            if out.budget_exceeded {
                o.warnings.push("budget exceeded: some eliminations were skipped".into());
                o = o.with_code(3);
            }
            o
        }
        GroupCmd::Abelianize { input } => {
            let a = abelianization(&input::presentation(input.as_deref(), stdin)?);
            Output::ok(a.to_string(), json!({ "abelianization": a, "display": a.to_string() }))
        }
        GroupCmd::Order { input, cosets } => {
            let p = input::presentation(input.as_deref(), stdin)?;
            let outcome = coset_enumerate(&p, cosets.max_cosets);
            let json = serde_json::to_value(outcome)?;
            match outcome {
                CosetOutcome::Finite { order } => Output::ok(format!("order: {order}"), json),
                CosetOutcome::Exceeded { cap } => {
                    Output::ok(format!("exceeded: more than {cap} cosets"), json).with_code(3)
                }
            }
        }
        GroupCmd::Homs { input, sym, cap } => {
            let p = input::presentation(input.as_deref(), stdin)?;
            let count = count_homs_to_symmetric(&p, sym, cap)?;
            Output::ok(format!("homomorphisms to S{sym}: {count}"), json!({ "degree": sym, "count": count }))
        }
        GroupCmd::ToBands { input } => {
            let rep = wirtinger_to_bands(&input::presentation(input.as_deref(), stdin)?)?;
            Output::ok(rep.to_string(), json!({ "representation": rep }))
        }
    })
}

fn delta2(cmd: Delta2Cmd, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let Delta2Cmd::Verify { bands, n, fixture, square } = cmd;
    let fixtures = FixtureSet::builtin();
    let rep: BandRepresentation = match fixture {
        Some(name) => {
            if fixtures.get(&name).is_none() {
                return Err(CliError::Usage(format!("unknown fixture {name}")));
            }
            input::bands(Some(&name), stdin, fixtures)?
        }
        None => input::bands(bands.as_deref(), stdin, fixtures)?,
    };
    if let Some(n) = n {
        if n != rep.strands() {
            return Err(CliError::Usage(format!("--n {n} but the bands live in B_{}", rep.strands())));
        }
    }
    let product = rep.product();
    let checked = if square { product.compose(&product)? } else { product };
    let equal = braids_equal(&checked, &delta_squared(rep.strands(), DeltaForm::Power)?)?;
    let out = Output::ok(
        format!("equal: {equal}"),
        json!({ "equal": equal, "strands": rep.strands(), "squared": square, "product": checked }),
    );
    Ok(if equal { out } else { out.with_code(1) })
}

fn fixture_set(dir: Option<PathBuf>) -> Result<FixtureSet, CliError> {
    match dir {
        Some(d) => FixtureSet::from_dir(&d),
        None => Ok(FixtureSet::builtin().clone()),
    }
}

fn fixtures(cmd: FixturesCmd) -> Result<Output, CliError> {
    Ok(match cmd {
        FixturesCmd::List { dir } => {
            let set = fixture_set(dir)?;
            let mut lines = Vec::new();
            let mut entries = Vec::new();
            for f in set.fixtures() {
                let kind = match f.data {
                    FixtureData::Bands { .. } => "bands",
                    FixtureData::Branch { .. } => "branch",
                    FixtureData::Polynomial { .. } => "polynomial",
                };
                let load = set.load_check(&f.name);
                let status = match load {
                    Some(c) if !c.passed => " [load check failed]",
                    _ => "",
                };
                lines.push(format!("{:<20} {:<11} {}{status}", f.name, kind, f.description));
                entries.push(json!({ "name": f.name, "kind": kind, "description": f.description, "load_check": load }));
            }
            Output::ok(lines.join("\n"), Value::Array(entries))
        }
        FixturesCmd::Show { name, dir } => {
            let set = fixture_set(dir)?;
            let f = set.get(&name).ok_or_else(|| CliError::Usage(format!("unknown fixture {name}")))?;
            let text = match &f.data {
                FixtureData::Bands { bands, .. } => bands.clone(),
                FixtureData::Branch { branch, .. } => branch.clone(),
                FixtureData::Polynomial { poly, .. } => serde_json::to_string(poly)?,
            };
            Output::ok(text, serde_json::to_value(f)?)
        }
        FixturesCmd::Selftest { dir, cosets, track } => {
            let set = fixture_set(dir)?;
            let settings = CheckSettings { coset_cap: cosets.max_cosets, track: track.config()? };
            let report = set.selftest(&settings);
            let mut lines = Vec::new();
            for r in &report.results {
                lines.push(format!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name));
                for c in r.checks.iter().filter(|c| !c.passed) {
                    lines.push(format!("     {}: {}", c.check, c.detail));
                }
            }
            let failed = report.results.iter().filter(|r| !r.passed).count();
            lines.push(format!("{} fixtures, {failed} failed", report.results.len()));
            Output::ok(lines.join("\n"), serde_json::to_value(&report)?).with_code(if report.passed { 0 } else { 1 })
        }
        FixturesCmd::Export { dir } => {
            let count = FixtureSet::builtin().export(&dir)?;
            Output::ok(
                format!("wrote {count} fixtures to {}", dir.display()),
                json!({ "written": count, "dir": dir }),
            )
        }
    })
}
