//! Bundled regression data: band representations of `Δ²` (and one of `Δ`),
//! branches and polynomials, each with the values it is expected to
//! produce.

use std::path::Path;
use std::sync::OnceLock;

use braidcurve_core::braid::delta_squared;
use braidcurve_core::{braids_equal, BandRepresentation, DeltaForm};
use braidcurve_group::{
    abelianization, coset_enumerate, count_homs_to_symmetric, default_budget, projective_presentation,
    tietze_simplify, CosetOutcome, GroupPresentation, DEFAULT_HOM_CAP,
};
use braidcurve_monodromy::{positivity_check, track_polynomial, ParametricOracle, PolyCurve, TrackConfig};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    #[serde(flatten)]
    pub data: FixtureData,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FixtureData {
    Bands {
        bands: String,
        target: Target,
        #[serde(default)]
        expect: GroupExpectation,
    },
    Branch {
        branch: String,
        radius: f64,
        #[serde(default)]
        expect: BranchExpectation,
    },
    Polynomial {
        poly: PolyCurve,
        radius: f64,
        #[serde(default)]
        expect: BatteryExpectation,
    },
}

/// What the product of a band fixture must equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// The product is `Δ²`.
    DeltaSquared,
    /// The product is a factorization of `Δ` up to conjugacy, checked
    /// through its square; the group is that of the squared factorization.
    SquareIsDeltaSquared,
}

/// Group values of the projective presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupExpectation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelianization: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    /// Generators left after Tietze simplification.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplified_generators: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s3_homs: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchExpectation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cascade: Option<Vec<(u64, u64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryExpectation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent_sum: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linking_numbers: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_positive: Option<bool>,
}

/// `(σ₁⋯σ_{n−1})^n` as `n² − n` single bands.
pub fn standard_factorization(n: usize) -> String {
    let bands: String = (0..n).flat_map(|_| (1..n).map(|k| format!("({k})"))).collect();
    format!("B{n}: {bands}")
}

/// `Δ²` as the product of the pure generators `A_{i,j}`, each written as
/// the node `(σ_i⋯σ_{j−1}) σ_j² (σ_i⋯σ_{j−1})⁻¹`.
pub fn pure_factorization(n: usize) -> String {
    let mut bands = String::new();
    for i in 1..n {
        for j in (i..n).rev() {
            let conj: Vec<String> = (i..j).map(|k| k.to_string()).collect();
            if conj.is_empty() {
                bands.push_str(&format!("({j}^2)"));
            } else {
                bands.push_str(&format!("({} : {j}^2)", conj.join(" ")));
            }
        }
    }
    format!("B{n}: {bands}")
}

/// Tricuspidal quartic. The conjugator of the second band is `σ₃⁻¹σ₂⁻¹`;
/// the printed source string `(3·3·3)(3 2̄ : 1)(1·1·1)(2)(1·1·1)(3 2 : 1)`
/// has `σ₃σ₂⁻¹` there, which does not multiply to `Δ²`.
pub const QUARTIC: &str = "B4: (3^3)(-3 -2 : 1)(1^3)(2)(1^3)(3 2 : 1)";

/// The printed quartic string, kept for the record of the discrepancy.
pub const QUARTIC_AS_PRINTED: &str = "B4: (3^3)(3 -2 : 1)(1^3)(2)(1^3)(3 2 : 1)";

/// Six cusps on a conic: a factorization of `Δ` up to conjugacy, from
/// `(1·1·1)(1̄2 : 1)(3·3·3)(3̄4 : 3)(5·5·5)(1̄3̄3̄ : 2)(3̄5̄5̄ : 4)(2 : 3)(4 : 5)`.
pub const SEXTIC_CONIC: &str = "B6: (1^3)(-1 2 : 1)(3^3)(-3 4 : 3)(5^3)(-1 -3 -3 : 2)(-3 -5 -5 : 4)(2 : 3)(4 : 5)";

/// Six cusps not on a conic, transcribed literally from
/// `(2 1̄ 2 : 3)(4)(5)(2·2·2)(1 : 2)³(3 : 2)(4 3 1 : 2)(1·1·1)(4 3̄ 2 : 1)(4 4 : 5)
/// (4 4 2 : 3)(4·4·4)(1·1·1)(2 1̄ 2 : 3)(2 1̄ 2 : 3)(1·1·1)(2 2 : 1)(2)`.
/// Its product is not `Δ²`: it permutes the strands as `(1 4 2 3)(5 6)`.
pub const SEXTIC_MIXED: &str = "B6: (2 -1 2 : 3)(4)(5)(2^3)(1 : 2)^3(3 : 2)(4 3 1 : 2)(1^3)(4 -3 2 : 1)(4 4 : 5)\
(4 4 2 : 3)(4^3)(1^3)(2 -1 2 : 3)(2 -1 2 : 3)(1^3)(2 2 : 1)(2)";

fn bands_fixture(name: &str, description: &str, bands: String, target: Target, expect: GroupExpectation) -> Fixture {
    Fixture { name: name.into(), description: description.into(), data: FixtureData::Bands { bands, target, expect } }
}

fn cyclic(n: usize) -> String {
    if n == 1 {
        "0".into()
    } else {
        format!("Z/{n}")
    }
}

fn free_abelian(rank: usize) -> String {
    match rank {
        0 => "0".into(),
        1 => "Z".into(),
        r => format!("Z^{r}"),
    }
}

fn builtin_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push(bands_fixture(
            &format!("example1-n{n}"),
            &format!("Δ² in B_{n} as (σ₁⋯σ_{{n−1}})^n; generic projective curve of degree {n}"),
            standard_factorization(n),
            Target::DeltaSquared,
            GroupExpectation { abelianization: Some(cyclic(n)), order: Some(n as u64), ..Default::default() },
        ));
    }
    for n in 2..=6 {
        out.push(bands_fixture(
            &format!("example2-n{n}"),
            &format!("Δ² in B_{n} as the product of the A_{{i,j}}; {n} lines in general position"),
            pure_factorization(n),
            Target::DeltaSquared,
            GroupExpectation { abelianization: Some(free_abelian(n - 1)), ..Default::default() },
        ));
    }
    out.push(bands_fixture(
        "example3-quartic",
        "Δ² in B_4 as three bands and three cusps; tricuspidal quartic, group of order 12",
        QUARTIC.into(),
        Target::DeltaSquared,
        GroupExpectation {
            abelianization: Some("Z/4".into()),
            order: Some(12),
            ..Default::default()
        },
    ));
    out.push(bands_fixture(
        "example3-sextic",
        "Δ in B_6 with six cusps, squared; sextic with six cusps on a conic, group Z/2 * Z/3",
        SEXTIC_CONIC.into(),
        Target::SquareIsDeltaSquared,
        GroupExpectation {
            abelianization: Some("Z/6".into()),
            simplified_generators: Some(2),
            s3_homs: Some(12),
            ..Default::default()
        },
    ));
    out.push(bands_fixture(
        "example3-mixed",
        "Δ² in B_6 with six cusps and nodes; sextic with six cusps not on a conic, group Z/6",
        SEXTIC_MIXED.into(),
        Target::DeltaSquared,
        GroupExpectation { abelianization: Some("Z/6".into()), order: Some(6), ..Default::default() },
    ));
    let branch = |name: &str, description: &str, text: &str, cascade: Vec<(u64, u64)>, milnor: i64| Fixture {
        name: name.into(),
        description: description.into(),
        data: FixtureData::Branch {
            branch: text.into(),
            radius: 0.25,
            expect: BranchExpectation { cascade: Some(cascade), milnor: Some(milnor) },
        },
    };
    out.push(branch("cusp23", "(t², t³): the cusp, whose link is the trefoil", "m=2; w = t^3", vec![(2, 3)], 2));
    out.push(branch("branch25", "(t², t⁵): link is the (2,5) torus knot", "m=2; w = t^5", vec![(2, 5)], 4));
    out.push(branch(
        "branch467",
        "(t⁴, t⁶ + t⁷): the (2,13) cable of the trefoil",
        "m=4; w = t^6 + t^7",
        vec![(2, 3), (2, 13)],
        16,
    ));
    let poly = |name: &str, description: &str, terms: &[(u32, u32, i64)], expect: BatteryExpectation| Fixture {
        name: name.into(),
        description: description.into(),
        data: FixtureData::Polynomial {
            poly: PolyCurve::from_integer_terms(terms).expect("bundled polynomial"),
            radius: 0.5,
            expect,
        },
    };
    out.push(poly(
        "poly-cusp",
        "w² − z³: the cusp, link is the trefoil",
        &[(0, 2, 1), (3, 0, -1)],
        BatteryExpectation {
            exponent_sum: Some(3),
            components: Some(1),
            linking_numbers: Some(vec![]),
            all_positive: Some(true),
        },
    ));
    out.push(poly(
        "poly-node",
        "w² − z²: the node, link is the Hopf link with linking number +1",
        &[(0, 2, 1), (2, 0, -1)],
        BatteryExpectation {
            exponent_sum: Some(2),
            components: Some(2),
            linking_numbers: Some(vec![1]),
            all_positive: Some(true),
        },
    ));
    out.push(poly(
        "poly-smooth",
        "w² − 1: no singularity over the disk, identity braid",
        &[(0, 2, 1), (0, 0, -1)],
        BatteryExpectation {
            exponent_sum: Some(0),
            components: Some(2),
            linking_numbers: Some(vec![0]),
            all_positive: Some(true),
        },
    ));
    out
}

/// Result of the load-time `Δ²` (or `Δ`) check of a band fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoadCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A named collection of fixtures, with every band representation checked
/// against its target when the set is built.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    fixtures: Vec<Fixture>,
    load_checks: Vec<LoadCheck>,
    /// Files that could not be read as fixtures, with the reason.
    unreadable: Vec<(String, String)>,
}

/// Checks the product of a band fixture against its target.
pub fn check_target(bands: &str, target: Target) -> Result<(), String> {
    let rep = full_twist_factorization(bands, target)?;
    let d2 = delta_squared(rep.strands(), DeltaForm::Power).map_err(|e| e.to_string())?;
    let product = rep.product();
    if braids_equal(&product, &d2).map_err(|e| e.to_string())? {
        return Ok(());
    }
    let cycles: String = product
        .permutation()
        .cycles()
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| format!("({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")))
        .collect();
    let what = if target == Target::DeltaSquared { "product" } else { "square of the product" };
    Err(format!(
        "{what} is not Δ² (exponent sum {}, permutation {})",
        product.exponent_sum(),
        if cycles.is_empty() { "identity".into() } else { cycles }
    ))
}

impl FixtureSet {
    pub fn new(fixtures: Vec<Fixture>) -> Self {
        Self::with_unreadable(fixtures, Vec::new())
    }

    fn with_unreadable(fixtures: Vec<Fixture>, unreadable: Vec<(String, String)>) -> Self {
        let load_checks = fixtures
            .iter()
            .filter_map(|f| match &f.data {
                FixtureData::Bands { bands, target, .. } => {
                    let result = check_target(bands, *target);
                    let detail = match (&result, target) {
                        (Ok(()), Target::DeltaSquared) => "product is Δ²".to_string(),
                        (Ok(()), Target::SquareIsDeltaSquared) => "square of the product is Δ²".to_string(),
                        (Err(e), _) => e.clone(),
                    };
                    Some(LoadCheck { name: f.name.clone(), passed: result.is_ok(), detail })
                }
                _ => None,
            })
            .collect();
        FixtureSet { fixtures, load_checks, unreadable }
    }

    /// The bundled fixtures, built and checked once per process.
    pub fn builtin() -> &'static FixtureSet {
        static SET: OnceLock<FixtureSet> = OnceLock::new();
        SET.get_or_init(|| FixtureSet::new(builtin_fixtures()))
    }

    /// Reads every `*.json` file of a directory as one fixture. A missing
    /// or empty directory is a usage error; unreadable files are kept as
    /// named failures.
    pub fn from_dir(dir: &Path) -> Result<FixtureSet, CliError> {
        let entries = std::fs::read_dir(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
        let mut paths: Vec<_> = entries
            .filter_map(Result::ok)
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        if paths.is_empty() {
            return Err(CliError::Usage(format!("{}: no fixture files (*.json)", dir.display())));
        }
        let mut fixtures = Vec::new();
        let mut unreadable = Vec::new();
        for path in paths {
            let label = path.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            match std::fs::read_to_string(&path).map_err(|e| e.to_string()).and_then(|text| {
                serde_json::from_str::<Fixture>(&text).map_err(|e| e.to_string())
            }) {
                Ok(f) => fixtures.push(f),
                Err(e) => unreadable.push((label, e)),
            }
        }
        Ok(Self::with_unreadable(fixtures, unreadable))
    }

    /// Writes each fixture to `<dir>/<name>.json`.
    pub fn export(&self, dir: &Path) -> Result<usize, CliError> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
        for f in &self.fixtures {
            let path = dir.join(format!("{}.json", f.name));
            let text = serde_json::to_string_pretty(f)? + "\n";
            std::fs::write(&path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        }
        Ok(self.fixtures.len())
    }

    pub fn fixtures(&self) -> &[Fixture] {
        &self.fixtures
    }

    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    pub fn load_check(&self, name: &str) -> Option<&LoadCheck> {
        self.load_checks.iter().find(|c| c.name == name)
    }

    /// Runs every fixture through its checks.
    pub fn selftest(&self, settings: &CheckSettings) -> SelftestReport {
        let mut results: Vec<FixtureResult> = self
            .unreadable
            .iter()
            .map(|(file, reason)| FixtureResult {
                name: file.clone(),
                passed: false,
                checks: vec![Check::new("readable", false, reason.clone())],
            })
            .collect();
        for f in &self.fixtures {
            let checks = match &f.data {
                FixtureData::Bands { bands, target, expect } => {
                    let load = self.load_check(&f.name).expect("band fixtures are checked on load");
                    let mut checks = vec![Check::new("target", load.passed, load.detail.clone())];
                    checks.extend(group_checks(bands, *target, expect, settings));
                    checks
                }
                FixtureData::Branch { branch, radius, expect } => branch_checks(branch, *radius, expect, settings),
                FixtureData::Polynomial { poly, radius, expect } => poly_checks(poly, *radius, expect, settings),
            };
            results.push(FixtureResult { name: f.name.clone(), passed: checks.iter().all(|c| c.passed), checks });
        }
        SelftestReport { passed: results.iter().all(|r| r.passed), results }
    }
}

/// Caps and tolerances used by the fixture checks.
#[derive(Clone, Debug)]
pub struct CheckSettings {
    pub coset_cap: usize,
    pub track: TrackConfig,
}

impl Default for CheckSettings {
    fn default() -> Self {
        CheckSettings { coset_cap: 100_000, track: TrackConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(check: &str, passed: bool, detail: String) -> Self {
        Check { check: check.into(), passed, detail }
    }

    fn compare<T: PartialEq + std::fmt::Debug>(check: &str, expected: &T, actual: &T) -> Self {
        let passed = expected == actual;
        let detail = if passed { format!("{actual:?}") } else { format!("expected {expected:?}, got {actual:?}") };
        Check::new(check, passed, detail)
    }

    fn error(check: &str, e: impl std::fmt::Display) -> Self {
        Check::new(check, false, e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub passed: bool,
    pub results: Vec<FixtureResult>,
}

/// The factorization of `Δ²` a band fixture stands for: the bands
/// themselves, or the bands twice over when they factor `Δ`.
pub fn full_twist_factorization(bands: &str, target: Target) -> Result<BandRepresentation, String> {
    let rep: BandRepresentation = bands.parse().map_err(|e| format!("{e}"))?;
    match target {
        Target::DeltaSquared => Ok(rep),
        Target::SquareIsDeltaSquared => {
            let doubled = rep.bands().iter().chain(rep.bands()).cloned().collect();
            BandRepresentation::new(rep.strands(), doubled).map_err(|e| e.to_string())
        }
    }
}

/// The projective presentation a band fixture describes.
pub fn fixture_presentation(bands: &str, target: Target) -> Result<GroupPresentation, String> {
    let rep = full_twist_factorization(bands, target)?;
    Ok(projective_presentation(&rep).map_err(|e| e.to_string())?.presentation)
}

fn group_checks(bands: &str, target: Target, expect: &GroupExpectation, settings: &CheckSettings) -> Vec<Check> {
    let p = match fixture_presentation(bands, target) {
        Ok(p) => p,
        Err(e) => return vec![Check::error("presentation", e)],
    };
    let mut checks = Vec::new();
    if let Some(ab) = &expect.abelianization {
        checks.push(Check::compare("abelianization", ab, &abelianization(&p).to_string()));
    }
    if let Some(order) = expect.order {
        checks.push(match coset_enumerate(&p, settings.coset_cap) {
            CosetOutcome::Finite { order: found } => Check::compare("order", &order, &found),
            CosetOutcome::Exceeded { cap } => Check::error("order", format!("more than {cap} cosets")),
        });
    }
    if expect.simplified_generators.is_some() || expect.s3_homs.is_some() {
        let simplified = tietze_simplify(&p, default_budget(&p)).presentation;
        if let Some(g) = expect.simplified_generators {
            checks.push(Check::compare("simplified generators", &g, &simplified.generators()));
        }
        if let Some(h) = expect.s3_homs {
            checks.push(match count_homs_to_symmetric(&simplified, 3, DEFAULT_HOM_CAP) {
                Ok(count) => Check::compare("homomorphisms to S3", &h, &count),
                Err(e) => Check::error("homomorphisms to S3", e),
            });
        }
    }
    checks
}

fn branch_checks(text: &str, radius: f64, expect: &BranchExpectation, settings: &CheckSettings) -> Vec<Check> {
    let b: braidcurve_core::BranchParam = match text.parse() {
        Ok(b) => b,
        Err(e) => return vec![Check::error("branch", e)],
    };
    let mut checks = Vec::new();
    if let Some(cascade) = &expect.cascade {
        checks.push(Check::compare("cable cascade", cascade, &b.cable_cascade().pairs().to_vec()));
    }
    if let Some(mu) = expect.milnor {
        checks.push(match b.milnor_number() {
            Ok(found) => Check::compare("milnor number", &mu, &found),
            Err(e) => Check::error("milnor number", e),
        });
    }
    checks.push(match b.cascade_braid() {
        Ok(w) => Check::new("strictly positive", w.is_strictly_positive(), w.to_string()),
        Err(e) => Check::error("strictly positive", e),
    });
    let oracle = ParametricOracle { radius, config: settings.track.clone() };
    checks.push(match b.validated_cascade(&oracle) {
        Ok(_) => Check::new("numerical oracle", true, format!("battery agrees at radius {radius}")),
        Err(e) => Check::error("numerical oracle", e),
    });
    checks
}

fn poly_checks(poly: &PolyCurve, radius: f64, expect: &BatteryExpectation, settings: &CheckSettings) -> Vec<Check> {
    let tracked = match track_polynomial(poly, radius, &settings.track) {
        Ok(t) => t,
        Err(e) => return vec![Check::error("tracking", e)],
    };
    let battery = tracked.word.closure_invariants().battery();
    let mut checks = vec![Check::new("tracking", true, tracked.word.to_string())];
    if let Some(e) = expect.exponent_sum {
        checks.push(Check::compare("exponent sum", &e, &battery.exponent_sum));
    }
    if let Some(c) = expect.components {
        checks.push(Check::compare("components", &c, &battery.components));
    }
    if let Some(l) = &expect.linking_numbers {
        checks.push(Check::compare("linking numbers", l, &battery.linking_numbers));
    }
    if let Some(p) = expect.all_positive {
        checks.push(match positivity_check(&tracked, false) {
            Ok(report) => Check::compare("all crossings positive", &p, &report.all_positive()),
            Err(e) => Check::error("all crossings positive", e),
        });
    }
    checks
}
