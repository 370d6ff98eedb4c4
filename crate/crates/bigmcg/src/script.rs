//! Derivation scripts and their machine replay.
//!
//! A script is plain data: a generating set, an ordered list of checkable
//! steps, and the target elements it derives. The checker is generic; it
//! binds each verified step's claimed value into an environment that later
//! steps reference by name. Every step carries the displayed equation it
//! verifies, so a failing step names exactly what it contradicts.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::atlas::CurveAtlas;
use crate::engine;
use crate::ends;
use crate::error::{EngineError, ScriptError, WordError};
use crate::lattice::{self, ActionMatrix};
use crate::surface::{CurveName, SurfaceConfig};
use crate::word::{parse_word_in_env, MappingWord, WordEnv};

/// Applicability predicate of a script.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Requires {
    pub min_n: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_n: Option<u32>,
}

impl Requires {
    pub fn admits(&self, n: u32) -> bool {
        match self.exact_n {
            Some(exact) => n == exact,
            None => n >= self.min_n,
        }
    }
}

/// A named element of a script's generating set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorDef {
    pub name: String,
    pub word: String,
}

/// One alternative reading of a claimed image tuple.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Reading {
    pub label: String,
    pub images: Vec<(String, String)>,
}

/// One checkable derivation step.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Step {
    /// Bind `name` to a word over generators and earlier names.
    Define {
        name: String,
        word: String,
        cite: String,
    },
    /// Bind `name` to `word`, verified equal to `conj_by * base * inv(conj_by)`
    /// up to one global sign; the image claims justify the rewriting.
    Conjugation {
        name: String,
        base: String,
        conj_by: String,
        word: String,
        #[serde(default)]
        images: Vec<(String, String)>,
        cite: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        warn: Option<String>,
    },
    /// Bind `name` to `word`, verified exactly equal to the product `base`.
    Product {
        name: String,
        base: String,
        word: String,
        cite: String,
    },
    /// Verify curve images of `word`. Either a single tuple in `images`, or
    /// several `readings` of which at least one must verify.
    Image {
        word: String,
        #[serde(default)]
        images: Vec<(String, String)>,
        #[serde(default)]
        readings: Vec<Reading>,
        cite: String,
    },
    /// Matrix identity between two words. Exact equality; `on_window`
    /// restricts the comparison to the common evaluable domain.
    Relation {
        left: String,
        right: String,
        #[serde(default)]
        on_window: bool,
        cite: String,
    },
    /// `word` squares to the identity on homology and on ends.
    Involution { word: String, cite: String },
    /// The end images of `generators` generate the expected subgroup order
    /// (the full symmetric group when `expect_order` is omitted).
    Closure {
        generators: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        expect_order: Option<usize>,
        cite: String,
    },
}

impl Step {
    pub fn kind(&self) -> &'static str {
        match self {
            Step::Define { .. } => "define",
            Step::Conjugation { .. } => "conjugation",
            Step::Product { .. } => "product",
            Step::Image { .. } => "image",
            Step::Relation { .. } => "relation",
            Step::Involution { .. } => "involution",
            Step::Closure { .. } => "closure",
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Step::Define { name, .. }
            | Step::Conjugation { name, .. }
            | Step::Product { name, .. } => Some(name),
            _ => None,
        }
    }

    pub fn cite(&self) -> &str {
        match self {
            Step::Define { cite, .. }
            | Step::Conjugation { cite, .. }
            | Step::Product { cite, .. }
            | Step::Image { cite, .. }
            | Step::Relation { cite, .. }
            | Step::Involution { cite, .. }
            | Step::Closure { cite, .. } => cite,
        }
    }
}

/// A derivation script: data, not logic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScriptFile {
    pub id: String,
    pub requires: Requires,
    #[serde(default)]
    pub notes: Vec<String>,
    pub generators: Vec<GeneratorDef>,
    pub steps: Vec<Step>,
    #[serde(default)]
    pub targets: Vec<String>,
}

impl ScriptFile {
    pub fn from_json(text: &str) -> Result<Self, ScriptError> {
        serde_json::from_str(text).map_err(|e| ScriptError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("script serializes")
    }
}

/// Outcome of one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum StepStatus {
    Pass,
    Fail { detail: String },
    Error { detail: String },
}

impl StepStatus {
    pub fn passed(&self) -> bool {
        matches!(self, StepStatus::Pass)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepReport {
    pub index: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub cite: String,
    #[serde(flatten)]
    pub status: StepStatus,
    #[serde(default)]
    pub warnings: Vec<String>,
}

/// Which part of the truncation window a run actually exercised.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct WindowUsage {
    /// Deepest handle index carrying a nonzero coefficient during the run.
    pub max_index_touched: u32,
    /// Basis slots excluded from some partial-action domain during the run.
    pub excluded_slots: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub script_id: String,
    pub n: u32,
    pub g: u32,
    pub steps: Vec<StepReport>,
    pub window: WindowUsage,
    #[serde(default)]
    pub warnings: Vec<String>,
    /// Resolved target elements, by name, in canonical word form.
    #[serde(default)]
    pub targets: Vec<(String, String)>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "script {} (n = {}, depth = {}): {}\n",
            self.script_id,
            self.n,
            self.g,
            if self.passed { "PASS" } else { "FAIL" }
        ));
        for s in &self.steps {
            let name = s.name.as_deref().unwrap_or("-");
            let status = match &s.status {
                StepStatus::Pass => "pass".to_string(),
                StepStatus::Fail { detail } => format!("FAIL: {detail}"),
                StepStatus::Error { detail } => format!("ERROR: {detail}"),
            };
            out.push_str(&format!(
                "  [{:>2}] {:<12} {:<8} {}  // {}\n",
                s.index, s.kind, name, status, s.cite
            ));
            for w in &s.warnings {
                out.push_str(&format!("       warning: {w}\n"));
            }
        }
        for (name, word) in &self.targets {
            out.push_str(&format!("  target {name} = {word}\n"));
        }
        out.push_str(&format!(
            "  window: deepest handle index {} of {}",
            self.window.max_index_touched, self.g
        ));
        if !self.window.excluded_slots.is_empty() {
            out.push_str(&format!(
                "; outside partial domains: {}",
                self.window.excluded_slots.join(", ")
            ));
        }
        out.push('\n');
        for w in &self.warnings {
            out.push_str(&format!("  note: {w}\n"));
        }
        out
    }
}

struct Tracker {
    max_index: u32,
    excluded: BTreeSet<String>,
}

impl Tracker {
    fn new() -> Self {
        Tracker { max_index: 0, excluded: BTreeSet::new() }
    }

    fn touch_class(&mut self, cfg: &SurfaceConfig, class: &lattice::HomologyClass) {
        for s in class.support() {
            let (_, index, _) = lattice::slot_coords(cfg, s);
            self.max_index = self.max_index.max(index);
        }
    }

    fn touch_matrix(&mut self, cfg: &SurfaceConfig, m: &ActionMatrix) {
        for s in m.excluded_slots() {
            self.excluded.insert(lattice::slot_label(cfg, s));
        }
    }
}

/// Replays one script against an atlas.
pub struct Replay<'a> {
    atlas: &'a CurveAtlas,
    env: WordEnv,
    tracker: Tracker,
}

impl<'a> Replay<'a> {
    pub fn new(atlas: &'a CurveAtlas) -> Self {
        Replay { atlas, env: WordEnv::new(), tracker: Tracker::new() }
    }

    fn cfg(&self) -> &SurfaceConfig {
        self.atlas.cfg()
    }

    fn parse(&self, index: usize, text: &str) -> Result<MappingWord, ScriptError> {
        parse_word_in_env(text, &self.env).map_err(|e| match e {
            WordError::UnknownName { name, .. } if !self.env.contains_key(&name) => {
                ScriptError::UndefinedName { index, name }
            }
            other => ScriptError::Word { index, source: other },
        })
    }

    fn matrix(&mut self, w: &MappingWord) -> Result<ActionMatrix, EngineError> {
        let cfg = *self.atlas.cfg();
        let m = engine::word_matrix(w, self.atlas)?;
        self.tracker.touch_matrix(&cfg, &m);
        Ok(m)
    }

    fn check_images(
        &mut self,
        word: &MappingWord,
        images: &[(String, String)],
        warnings: &mut Vec<String>,
    ) -> Result<StepStatus, ScriptError> {
        for (input, claimed) in images {
            let input_name: CurveName = input
                .parse()
                .map_err(|e: crate::error::AtlasError| ScriptError::Malformed(e.to_string()))?;
            let claimed_name: CurveName = claimed
                .parse()
                .map_err(|e: crate::error::AtlasError| ScriptError::Malformed(e.to_string()))?;
            let start = match self.atlas.class(&input_name) {
                Ok(c) => c.clone(),
                Err(e) => return Ok(StepStatus::Error { detail: e.to_string() }),
            };
            let target = match self.atlas.class(&claimed_name) {
                Ok(c) => c.clone(),
                Err(e) => return Ok(StepStatus::Error { detail: e.to_string() }),
            };
            let cfg = *self.atlas.cfg();
            self.tracker.touch_class(&cfg, &start);
            let image = match engine::evaluate(word, &start, self.atlas) {
                Ok(c) => c,
                Err(e @ EngineError::OutOfWindow { .. }) => {
                    return Ok(StepStatus::Error { detail: e.to_string() })
                }
                Err(e) => return Ok(StepStatus::Error { detail: e.to_string() }),
            };
            self.tracker.touch_class(&cfg, &image);
            if !image.eq_up_to_sign(&target) {
                return Ok(StepStatus::Fail {
                    detail: format!(
                        "image of {input} is {}, claimed {claimed} = {}",
                        image.display(self.cfg()),
                        target.display(self.cfg())
                    ),
                });
            }
            if image != target {
                warnings.push(format!("{input} -> {claimed} matches with global sign -1"));
            }
        }
        Ok(StepStatus::Pass)
    }

    fn run_step(&mut self, index: usize, step: &Step) -> Result<StepReport, ScriptError> {
        let mut warnings = Vec::new();
        let status = match step {
            Step::Define { name, word, .. } => {
                let value = self.parse(index, word)?;
                self.env.insert(name.clone(), value);
                StepStatus::Pass
            }
            Step::Conjugation { name, base, conj_by, word, images, warn, .. } => {
                if let Some(w) = warn {
                    warnings.push(w.clone());
                }
                let base_word = self.parse(index, base)?;
                let f = self.parse(index, conj_by)?;
                let claimed = self.parse(index, word)?;
                let status = self.check_images(&f, images, &mut warnings)?;
                if !status.passed() {
                    status
                } else {
                    let conjugated = base_word.conjugate_by(&f);
                    match (self.matrix(&conjugated), self.matrix(&claimed)) {
                        (Ok(lhs), Ok(rhs)) => match lhs.sign_equal_on_common_domain(&rhs) {
                            Ok(Some(sign)) => {
                                if sign < 0 {
                                    warnings.push(
                                        "matrix identity holds with global sign -1".into(),
                                    );
                                }
                                self.env.insert(name.clone(), claimed);
                                StepStatus::Pass
                            }
                            Ok(None) => StepStatus::Fail {
                                detail: format!(
                                    "matrix of conj({base}, {conj_by}) differs from {word}"
                                ),
                            },
                            Err(e) => StepStatus::Error { detail: e.to_string() },
                        },
                        (Err(e), _) | (_, Err(e)) => StepStatus::Error { detail: e.to_string() },
                    }
                }
            }
            Step::Product { name, base, word, .. } => {
                let product = self.parse(index, base)?;
                let claimed = self.parse(index, word)?;
                match (self.matrix(&product), self.matrix(&claimed)) {
                    (Ok(lhs), Ok(rhs)) => match lhs.equal_on_common_domain(&rhs) {
                        Ok(true) => {
                            self.env.insert(name.clone(), claimed);
                            StepStatus::Pass
                        }
                        Ok(false) => StepStatus::Fail {
                            detail: format!("product {base} is not {word} on homology"),
                        },
                        Err(e) => StepStatus::Error { detail: e.to_string() },
                    },
                    (Err(e), _) | (_, Err(e)) => StepStatus::Error { detail: e.to_string() },
                }
            }
            Step::Image { word, images, readings, .. } => {
                let w = self.parse(index, word)?;
                if readings.is_empty() {
                    self.check_images(&w, images, &mut warnings)?
                } else {
                    let mut verdicts = Vec::new();
                    let mut any_pass = false;
                    for reading in readings {
                        let status = self.check_images(&w, &reading.images, &mut Vec::new())?;
                        match status {
                            StepStatus::Pass => {
                                any_pass = true;
                                verdicts.push(format!("reading `{}` verifies", reading.label));
                            }
                            StepStatus::Fail { detail } => verdicts.push(format!(
                                "reading `{}` fails: {detail}",
                                reading.label
                            )),
                            StepStatus::Error { detail } => verdicts.push(format!(
                                "reading `{}` errors: {detail}",
                                reading.label
                            )),
                        }
                    }
                    warnings.extend(verdicts);
                    if any_pass {
                        StepStatus::Pass
                    } else {
                        StepStatus::Fail { detail: "no reading verifies".into() }
                    }
                }
            }
            Step::Relation { left, right, on_window, .. } => {
                let lw = self.parse(index, left)?;
                let rw = self.parse(index, right)?;
                match (self.matrix(&lw), self.matrix(&rw)) {
                    (Ok(lhs), Ok(rhs)) => {
                        let verdict = if *on_window {
                            lhs.equal_on_common_domain(&rhs)
                        } else {
                            match (lhs.is_total(), rhs.is_total()) {
                                (true, true) => Ok(lhs == rhs),
                                _ => Err(EngineError::DomainMismatch(
                                    "relation sides must be total; use on_window".into(),
                                )),
                            }
                        };
                        match verdict {
                            Ok(true) => StepStatus::Pass,
                            Ok(false) => StepStatus::Fail {
                                detail: matrix_diff(self.cfg(), &lhs, &rhs, left, right),
                            },
                            Err(e) => StepStatus::Error { detail: e.to_string() },
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => StepStatus::Error { detail: e.to_string() },
                }
            }
            Step::Involution { word, .. } => {
                let w = self.parse(index, word)?;
                let squared = w.compose(&w);
                match self.matrix(&squared) {
                    Ok(m) => {
                        if !m.is_identity_on_domain() {
                            let witness = m
                                .domain()
                                .find(|&v| {
                                    m.col(v).map(|c| {
                                        c.iter().enumerate().any(|(u, &x)| x != i64::from(u == v))
                                    }) == Some(true)
                                })
                                .map(|v| lattice::slot_label(self.cfg(), v))
                                .unwrap_or_default();
                            StepStatus::Fail {
                                detail: format!(
                                    "square of `{word}` moves basis slot {witness}"
                                ),
                            }
                        } else {
                            let p = ends::perm_of(&squared, self.cfg());
                            if p.is_identity() {
                                StepStatus::Pass
                            } else {
                                StepStatus::Fail {
                                    detail: format!(
                                        "square of `{word}` acts on ends as {p}"
                                    ),
                                }
                            }
                        }
                    }
                    Err(e) => StepStatus::Error { detail: e.to_string() },
                }
            }
            Step::Closure { generators, expect_order, .. } => {
                let n = self.cfg().ends;
                let mut perms = Vec::new();
                let mut parse_err = None;
                for text in generators {
                    match self.parse(index, text) {
                        Ok(w) => perms.push(ends::perm_of(&w, self.cfg())),
                        Err(e) => {
                            parse_err = Some(e);
                            break;
                        }
                    }
                }
                if let Some(e) = parse_err {
                    return Err(e);
                }
                let expected = expect_order.unwrap_or_else(|| ends::factorial(n));
                match ends::subgroup_closure(&perms, n) {
                    Ok(closure) => {
                        warnings
                            .push("rotation end-images are convention-derived".into());
                        if closure.order() == expected {
                            StepStatus::Pass
                        } else {
                            StepStatus::Fail {
                                detail: format!(
                                    "closure has order {}, expected {expected}",
                                    closure.order()
                                ),
                            }
                        }
                    }
                    Err(e) => StepStatus::Error { detail: e.to_string() },
                }
            }
        };
        Ok(StepReport {
            index,
            kind: step.kind().to_string(),
            name: step.name().map(|s| s.to_string()),
            cite: step.cite().to_string(),
            status,
            warnings,
        })
    }
}

/// First basis slot on which two actions disagree, with both image vectors.
fn matrix_diff(
    cfg: &SurfaceConfig,
    lhs: &ActionMatrix,
    rhs: &ActionMatrix,
    left: &str,
    right: &str,
) -> String {
    for v in 0..cfg.rank() {
        if let (Some(x), Some(y)) = (lhs.col(v), rhs.col(v)) {
            if x != y {
                let lx = lattice::HomologyClass::from_coeffs(x.clone());
                let ly = lattice::HomologyClass::from_coeffs(y.clone());
                return format!(
                    "matrices differ on {}: `{left}` gives {}, `{right}` gives {}",
                    lattice::slot_label(cfg, v),
                    lx.display(cfg),
                    ly.display(cfg)
                );
            }
        }
    }
    format!("matrices of `{left}` and `{right}` differ in domain only")
}

/// Replay a script in order; a failed or errored defining step aborts the run
/// (later steps would reference unverified bindings) and yields a partial
/// report.
pub fn run_script(
    script: &ScriptFile,
    atlas: &CurveAtlas,
) -> Result<VerificationReport, ScriptError> {
    let cfg = *atlas.cfg();
    if !script.requires.admits(cfg.ends) {
        return Err(ScriptError::NotApplicable { id: script.id.clone(), n: cfg.ends });
    }

    let mut replay = Replay::new(atlas);
    for g in &script.generators {
        let w = replay.parse(0, &g.word)?;
        replay.env.insert(g.name.clone(), w);
    }

    let mut steps = Vec::new();
    let mut passed = true;
    for (index, step) in script.steps.iter().enumerate() {
        let report = replay.run_step(index, step)?;
        let defining = step.name().is_some();
        let ok = report.status.passed();
        steps.push(report);
        if !ok {
            passed = false;
            if defining {
                break;
            }
        }
    }

    let targets = script
        .targets
        .iter()
        .filter_map(|name| replay.env.get(name).map(|w| (name.clone(), w.to_string())))
        .collect();

    Ok(VerificationReport {
        script_id: script.id.clone(),
        n: cfg.ends,
        g: cfg.depth,
        steps,
        window: WindowUsage {
            max_index_touched: replay.tracker.max_index,
            excluded_slots: replay.tracker.excluded.into_iter().collect(),
        },
        warnings: script.notes.clone(),
        targets,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::default_atlas;

    fn atlas(n: u32) -> CurveAtlas {
        default_atlas(&SurfaceConfig::new(n, 6).unwrap()).unwrap()
    }

    fn simple_script() -> ScriptFile {
        ScriptFile {
            id: "demo".into(),
            requires: Requires { min_n: 3, exact_n: None },
            notes: vec![],
            generators: vec![
                GeneratorDef { name: "rot".into(), word: "R".into() },
                GeneratorDef { name: "EC".into(), word: "C0[1]*inv(C0[2])".into() },
            ],
            steps: vec![
                Step::Conjugation {
                    name: "Q1".into(),
                    base: "EC".into(),
                    conj_by: "rot".into(),
                    word: "C0[2]*inv(C0[3])".into(),
                    images: vec![
                        ("c0[1]".into(), "c0[2]".into()),
                        ("c0[2]".into(), "c0[3]".into()),
                    ],
                    cite: "R(c_0^1, c_0^2) = (c_0^2, c_0^3)".into(),
                    warn: None,
                },
                Step::Product {
                    name: "Q2".into(),
                    base: "EC*Q1".into(),
                    word: "C0[1]*inv(C0[3])".into(),
                    cite: "telescoping product".into(),
                },
            ],
            targets: vec!["Q2".into()],
        }
    }

    #[test]
    fn simple_replay_passes() {
        let atlas = atlas(4);
        let report = run_script(&simple_script(), &atlas).unwrap();
        assert!(report.passed, "{}", report.render_text());
        assert_eq!(report.targets[0].1, "C0[1]*inv(C0[3])");
    }

    #[test]
    fn wrong_claim_fails_with_both_vectors() {
        let atlas = atlas(4);
        let mut script = simple_script();
        script.steps[0] = Step::Conjugation {
            name: "Q1".into(),
            base: "EC".into(),
            conj_by: "rot".into(),
            word: "C0[2]*inv(C0[3])".into(),
            images: vec![("c0[1]".into(), "c0[3]".into())],
            cite: "deliberately wrong image".into(),
            warn: None,
        };
        let report = run_script(&script, &atlas).unwrap();
        assert!(!report.passed);
        match &report.steps[0].status {
            StepStatus::Fail { detail } => {
                assert!(detail.contains("a[2,1]"), "detail: {detail}");
            }
            other => panic!("expected fail, got {other:?}"),
        }
        // The failing definition aborts the run.
        assert_eq!(report.steps.len(), 1);
    }

    #[test]
    fn applicability_is_enforced() {
        let atlas = atlas(3);
        let mut script = simple_script();
        script.requires = Requires { min_n: 3, exact_n: Some(6) };
        assert!(matches!(
            run_script(&script, &atlas),
            Err(ScriptError::NotApplicable { .. })
        ));
    }

    #[test]
    fn undefined_name_is_an_error() {
        let atlas = atlas(3);
        let mut script = simple_script();
        script.steps.push(Step::Define {
            name: "X".into(),
            word: "NOPE*rho1".into(),
            cite: "bad reference".into(),
        });
        assert!(matches!(
            run_script(&script, &atlas),
            Err(ScriptError::UndefinedName { .. })
        ));
    }

    #[test]
    fn script_json_round_trip() {
        let script = simple_script();
        let text = script.to_json();
        let reread = ScriptFile::from_json(&text).unwrap();
        assert_eq!(reread.steps.len(), script.steps.len());
        assert_eq!(reread.id, script.id);
    }

    #[test]
    fn report_json_round_trip() {
        let atlas = atlas(4);
        let report = run_script(&simple_script(), &atlas).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let reread: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(reread.passed, report.passed);
        assert_eq!(reread.steps.len(), report.steps.len());
        assert_eq!(
            serde_json::to_value(&reread).unwrap(),
            serde_json::to_value(&report).unwrap()
        );
    }

    #[test]
    fn twist_moves_its_dual_curve() {
        // The image claim b -> b under the twist about a must fail, since
        // the pairing <b, a> is nonzero: by hand on the one-handle lattice,
        // T_a(b) = b - a.
        let atlas = atlas(3);
        let script = ScriptFile {
            id: "img-demo".into(),
            requires: Requires { min_n: 3, exact_n: None },
            notes: vec![],
            generators: vec![],
            steps: vec![
                Step::Image {
                    word: "A[1,1]".into(),
                    images: vec![("b[1,1]".into(), "b[1,1]".into())],
                    readings: vec![],
                    cite: "not fixed".into(),
                },
                Step::Image {
                    word: "h[1]".into(),
                    images: vec![("c0[1]".into(), "c[2,1]".into())],
                    readings: vec![],
                    cite: "h_{1,2}(c_0^i) = c_1^{i+1}".into(),
                },
                Step::Image {
                    word: "".into(),
                    images: vec![("a[1,1]".into(), "a[1,1]".into())],
                    readings: vec![],
                    cite: "identity".into(),
                },
            ],
            targets: vec![],
        };
        let report = run_script(&script, &atlas).unwrap();
        assert!(!report.steps[0].status.passed());
        assert!(report.steps[1].status.passed());
        assert!(report.steps[2].status.passed());
    }

    #[test]
    fn conjugation_by_the_empty_word_keeps_the_base() {
        let atlas = atlas(3);
        let script = ScriptFile {
            id: "conj-empty".into(),
            requires: Requires { min_n: 3, exact_n: None },
            notes: vec![],
            generators: vec![GeneratorDef {
                name: "X".into(),
                word: "A[1,1]*inv(B[2,1])".into(),
            }],
            steps: vec![Step::Conjugation {
                name: "Y".into(),
                base: "X".into(),
                conj_by: "".into(),
                word: "A[1,1]*inv(B[2,1])".into(),
                images: vec![("a[1,1]".into(), "a[1,1]".into())],
                cite: "conjugation by the identity".into(),
                warn: None,
            }],
            targets: vec!["Y".into()],
        };
        let report = run_script(&script, &atlas).unwrap();
        assert!(report.passed, "{}", report.render_text());
        assert_eq!(report.targets[0].1, "A[1,1]*inv(B[2,1])");
    }

    #[test]
    fn relation_distinguishes_commuting_from_braiding() {
        // Disjoint twists commute; the dual pair does not: checked by hand
        // on the two-dimensional sub-lattice, T_a T_b (a) = -b + ... differs
        // from T_b T_a (a).
        let atlas = atlas(3);
        let script = ScriptFile {
            id: "rel-demo".into(),
            requires: Requires { min_n: 3, exact_n: None },
            notes: vec![],
            generators: vec![],
            steps: vec![
                Step::Relation {
                    left: "A[1,1]*A[1,2]".into(),
                    right: "A[1,2]*A[1,1]".into(),
                    on_window: false,
                    cite: "disjoint twists commute".into(),
                },
                Step::Relation {
                    left: "A[1,1]*B[1,1]".into(),
                    right: "B[1,1]*A[1,1]".into(),
                    on_window: false,
                    cite: "dual twists braid".into(),
                },
            ],
            targets: vec![],
        };
        let report = run_script(&script, &atlas).unwrap();
        assert!(report.steps[0].status.passed());
        assert!(!report.steps[1].status.passed());
    }

    #[test]
    fn involution_check_rejects_a_twist() {
        let atlas = atlas(3);
        let script = ScriptFile {
            id: "inv-demo".into(),
            requires: Requires { min_n: 3, exact_n: None },
            notes: vec![],
            generators: vec![],
            steps: vec![
                Step::Involution { word: "rho1".into(), cite: "order-two rotation".into() },
                Step::Involution { word: "A[1,1]".into(), cite: "a twist is not".into() },
            ],
            targets: vec![],
        };
        let report = run_script(&script, &atlas).unwrap();
        assert!(report.steps[0].status.passed());
        assert!(!report.steps[1].status.passed());
        assert!(!report.passed);
        // Non-defining failures do not abort the run.
        assert_eq!(report.steps.len(), 2);
    }
}
