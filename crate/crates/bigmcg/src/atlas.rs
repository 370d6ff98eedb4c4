//! The named-curve atlas: homology classes and geometric intersection data.
//!
//! The atlas is plain data read from a JSON file (or generated for the
//! default model) and validated against the structural facts the engine
//! relies on: the basis pairing, chain adjacency, compatibility of
//! intersection numbers with the algebraic pairing, primitivity, and
//! equivariance under the one-step rotation. After construction it is
//! immutable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::AtlasError;
use crate::lattice::{self, HomologyClass, SlotKind};
use crate::surface::{CurveName, Family, SurfaceConfig, LANTERN_ARM};

/// Validated atlas: every named curve's class plus pairwise intersections.
#[derive(Debug, Clone)]
pub struct CurveAtlas {
    cfg: SurfaceConfig,
    classes: BTreeMap<CurveName, HomologyClass>,
    intersections: BTreeMap<(CurveName, CurveName), u8>,
}

impl CurveAtlas {
    pub fn cfg(&self) -> &SurfaceConfig {
        &self.cfg
    }

    pub fn contains(&self, name: &CurveName) -> bool {
        self.classes.contains_key(name)
    }

    pub fn class(&self, name: &CurveName) -> Result<&HomologyClass, AtlasError> {
        self.classes
            .get(name)
            .ok_or_else(|| AtlasError::UnknownCurve(name.to_string()))
    }

    pub fn curves(&self) -> impl Iterator<Item = (&CurveName, &HomologyClass)> {
        self.classes.iter()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Geometric intersection number; symmetric, zero on the diagonal.
    pub fn intersection(&self, x: &CurveName, y: &CurveName) -> Result<u8, AtlasError> {
        if !self.contains(x) {
            return Err(AtlasError::UnknownCurve(x.to_string()));
        }
        if !self.contains(y) {
            return Err(AtlasError::UnknownCurve(y.to_string()));
        }
        if x == y {
            return Ok(0);
        }
        let key = pair_key(*x, *y);
        Ok(self
            .intersections
            .get(&key)
            .copied()
            .unwrap_or_else(|| default_intersection(&self.cfg, &key.0, &key.1)))
    }
}

fn pair_key(x: CurveName, y: CurveName) -> (CurveName, CurveName) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Chain-configuration defaults for pairs the file leaves unlisted.
fn default_intersection(cfg: &SurfaceConfig, x: &CurveName, y: &CurveName) -> u8 {
    let hit = |c: &CurveName, b: &CurveName| -> bool {
        debug_assert_eq!(b.family, Family::B);
        match c.family {
            Family::A => c.arm == b.arm && c.index == b.index,
            Family::C => c.arm == b.arm && (b.index == c.index || b.index == c.index + 1),
            Family::C0 => {
                b.index == 1
                    && (b.arm == c.arm || b.arm == c.arm.map(|i| cfg.next_arm(i)))
            }
            _ => false,
        }
    };
    match (x.family, y.family) {
        (Family::B, _) if hit(y, x) => 1,
        (_, Family::B) if hit(x, y) => 1,
        _ => 0,
    }
}

const AB_FLAG_A: u8 = 0;
const AB_FLAG_B: u8 = 1;

/// One curve record of the atlas file. Homology entries are
/// `[arm, index, ab_flag, coeff]` with `ab_flag` 0 for the `a` slot and 1 for
/// the `b` slot of the handle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveEntry {
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub arm: Option<u32>,
    #[serde(default)]
    pub index: u32,
    #[serde(default)]
    pub primed: bool,
    pub homology: Vec<(u32, u32, u8, i64)>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct AtlasConfig {
    pub ends: u32,
    pub depth: u32,
}

/// On-disk atlas: `config`, `curves`, explicit `intersections` overriding the
/// chain-configuration defaults.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AtlasFile {
    pub config: AtlasConfig,
    pub curves: Vec<CurveEntry>,
    #[serde(default)]
    pub intersections: Vec<(String, String, u8)>,
}

impl AtlasFile {
    pub fn from_json(text: &str) -> Result<Self, AtlasError> {
        serde_json::from_str(text).map_err(|e| AtlasError::MalformedAtlas(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("atlas serializes")
    }
}

/// Build and fully validate an atlas; fails atomically.
pub fn build_atlas(file: &AtlasFile) -> Result<CurveAtlas, AtlasError> {
    let cfg = SurfaceConfig::new(file.config.ends, file.config.depth)?;

    let mut classes: BTreeMap<CurveName, HomologyClass> = BTreeMap::new();
    for entry in &file.curves {
        let name = CurveName {
            family: entry.family,
            arm: entry.arm,
            index: entry.index,
            primed: entry.primed,
        };
        name.validate(&cfg)?;
        if classes.contains_key(&name) {
            return Err(AtlasError::MalformedAtlas(format!("duplicate curve {name}")));
        }
        let mut coeffs = vec![0i64; cfg.rank()];
        for &(arm, index, flag, coeff) in &entry.homology {
            if arm < 1 || arm > cfg.ends || index < 1 || index > cfg.depth {
                return Err(AtlasError::IndexOutOfWindow {
                    name: name.to_string(),
                    detail: format!("homology slot ({arm},{index})"),
                });
            }
            let kind = match flag {
                AB_FLAG_A => SlotKind::A,
                AB_FLAG_B => SlotKind::B,
                other => {
                    return Err(AtlasError::MalformedAtlas(format!(
                        "{name}: ab_flag must be 0 or 1, got {other}"
                    )))
                }
            };
            let s = lattice::slot(&cfg, arm, index, kind);
            coeffs[s] += coeff;
        }
        classes.insert(name, HomologyClass::from_coeffs(coeffs));
    }

    let mut intersections = BTreeMap::new();
    for (xs, ys, value) in &file.intersections {
        let x: CurveName = xs.parse()?;
        let y: CurveName = ys.parse()?;
        for name in [&x, &y] {
            if !classes.contains_key(name) {
                return Err(AtlasError::UnknownCurve(name.to_string()));
            }
        }
        if *value > 2 {
            return Err(AtlasError::MalformedAtlas(format!(
                "intersection i({x},{y}) = {value} outside 0..=2"
            )));
        }
        if x == y && *value != 0 {
            return Err(AtlasError::InvariantViolation {
                constraint: "self-intersection".into(),
                detail: format!("i({x},{x}) must be 0"),
            });
        }
        intersections.insert(pair_key(x, y), *value);
    }

    let atlas = CurveAtlas { cfg, classes, intersections };
    validate(&atlas)?;
    Ok(atlas)
}

fn validate(atlas: &CurveAtlas) -> Result<(), AtlasError> {
    let cfg = atlas.cfg;

    // Per-class facts: nonzero, primitive, supported on the declared arms.
    for (name, class) in atlas.curves() {
        if class.is_zero() {
            return Err(AtlasError::InvariantViolation {
                constraint: "nonzero class".into(),
                detail: format!("[{name}] = 0"),
            });
        }
        if !class.is_primitive() {
            return Err(AtlasError::InvariantViolation {
                constraint: "primitive class".into(),
                detail: format!("[{name}] has content {}", class.content()),
            });
        }
        let arms = name.touched_arms(&cfg);
        for s in class.support() {
            let (arm, _, _) = lattice::slot_coords(&cfg, s);
            if !arms.contains(&arm) {
                return Err(AtlasError::InvariantViolation {
                    constraint: "support on touched arms".into(),
                    detail: format!(
                        "[{name}] touches {} outside arms {arms:?}",
                        lattice::slot_label(&cfg, s)
                    ),
                });
            }
        }
    }

    // Basis handles: <[a], [b]> = ±1 with intersection 1.
    for (name, class) in atlas.curves() {
        if name.family == Family::A && !name.primed {
            let b = CurveName::b(name.arm.unwrap(), name.index);
            if let Ok(bclass) = atlas.class(&b) {
                let p = lattice::pairing(class, bclass)
                    .map_err(|e| AtlasError::MalformedAtlas(e.to_string()))?;
                if p.abs() != 1 {
                    return Err(AtlasError::InvariantViolation {
                        constraint: "basis pairing".into(),
                        detail: format!("<[{name}],[{b}]> = {p}, want ±1"),
                    });
                }
                if atlas.intersection(name, &b)? != 1 {
                    return Err(AtlasError::InvariantViolation {
                        constraint: "basis intersection".into(),
                        detail: format!("i({name},{b}) must be 1"),
                    });
                }
            }
        }
    }

    // Chain adjacency for chain curves present in the atlas.
    for (name, _) in atlas.curves() {
        if name.family == Family::C {
            let arm = name.arm.unwrap();
            let below = CurveName::b(arm, name.index);
            if atlas.contains(&below) && atlas.intersection(name, &below)? != 1 {
                return Err(AtlasError::InvariantViolation {
                    constraint: "chain adjacency".into(),
                    detail: format!("i({name},{below}) must be 1"),
                });
            }
            if name.index < cfg.depth {
                let above = CurveName::b(arm, name.index + 1);
                if atlas.contains(&above) && atlas.intersection(name, &above)? != 1 {
                    return Err(AtlasError::InvariantViolation {
                        constraint: "chain adjacency".into(),
                        detail: format!("i({name},{above}) must be 1"),
                    });
                }
            }
        }
        if name.family == Family::C0 {
            for arm in name.touched_arms(&cfg) {
                let b = CurveName::b(arm, 1);
                if atlas.contains(&b) && atlas.intersection(name, &b)? != 1 {
                    return Err(AtlasError::InvariantViolation {
                        constraint: "chain adjacency".into(),
                        detail: format!("i({name},{b}) must be 1"),
                    });
                }
            }
        }
    }

    // Disjoint curves must pair to zero.
    let names: Vec<CurveName> = atlas.classes.keys().copied().collect();
    for (k, x) in names.iter().enumerate() {
        for y in &names[k + 1..] {
            if atlas.intersection(x, y)? == 0 {
                let p = lattice::pairing(atlas.class(x)?, atlas.class(y)?)
                    .map_err(|e| AtlasError::MalformedAtlas(e.to_string()))?;
                if p != 0 {
                    return Err(AtlasError::InvariantViolation {
                        constraint: "disjointness pairing".into(),
                        detail: format!("i({x},{y}) = 0 but <[{x}],[{y}]> = {p}"),
                    });
                }
            }
        }
    }

    // Rotation equivariance for every curve with an arm label.
    let rot = lattice::rotation_matrix(&cfg);
    for (name, class) in atlas.curves() {
        let Some(arm) = name.arm else { continue };
        let successor = CurveName { arm: Some(cfg.next_arm(arm)), ..*name };
        let image = rot
            .apply(class)
            .map_err(|e| AtlasError::MalformedAtlas(e.to_string()))?;
        let target = atlas.class(&successor).map_err(|_| AtlasError::InvariantViolation {
            constraint: "rotation equivariance".into(),
            detail: format!("{name} has no successor {successor}"),
        })?;
        if !image.eq_up_to_sign(target) {
            return Err(AtlasError::InvariantViolation {
                constraint: "rotation equivariance".into(),
                detail: format!(
                    "R[{name}] = {} but [{successor}] = {}",
                    image.display(&cfg),
                    target.display(&cfg)
                ),
            });
        }
    }

    Ok(())
}

/// The bundled atlas for the default model of the truncated surface.
///
/// Handle curves are unit basis classes. A chain curve spans its two handles,
/// a `c0` curve spans the first handles of its two adjacent arms, and the two
/// lantern interior curves live on the lantern arm. Primed curves share the
/// class of their unprimed partner; at homology level the two readings agree,
/// which the derivation scripts cross-validate.
pub fn default_atlas_file(cfg: &SurfaceConfig) -> AtlasFile {
    let n = cfg.ends;
    let g = cfg.depth;
    let mut curves = Vec::new();
    let mut intersections = Vec::new();

    let unit = |arm: u32, index: u32, flag: u8| vec![(arm, index, flag, 1i64)];

    for arm in 1..=n {
        for index in 1..=g {
            curves.push(CurveEntry {
                family: Family::A,
                arm: Some(arm),
                index,
                primed: false,
                homology: unit(arm, index, AB_FLAG_A),
            });
            curves.push(CurveEntry {
                family: Family::A,
                arm: Some(arm),
                index,
                primed: true,
                homology: unit(arm, index, AB_FLAG_A),
            });
            curves.push(CurveEntry {
                family: Family::B,
                arm: Some(arm),
                index,
                primed: false,
                homology: unit(arm, index, AB_FLAG_B),
            });
            intersections.push((
                CurveName::a(arm, index).to_string(),
                CurveName::b(arm, index).to_string(),
                1,
            ));
            intersections.push((
                CurveName::a_primed(arm, index).to_string(),
                CurveName::b(arm, index).to_string(),
                1,
            ));
        }
        // Chain curves between consecutive handles; the deepest handle has no
        // successor inside the window, so its chain curve is not modelled.
        for index in 1..g {
            curves.push(CurveEntry {
                family: Family::C,
                arm: Some(arm),
                index,
                primed: false,
                homology: vec![(arm, index, AB_FLAG_A, 1), (arm, index + 1, AB_FLAG_A, 1)],
            });
            intersections.push((
                CurveName::c(arm, index).to_string(),
                CurveName::b(arm, index).to_string(),
                1,
            ));
            intersections.push((
                CurveName::c(arm, index).to_string(),
                CurveName::b(arm, index + 1).to_string(),
                1,
            ));
        }
        // The curve through the first handles of this arm and the next.
        let next = cfg.next_arm(arm);
        curves.push(CurveEntry {
            family: Family::C0,
            arm: Some(arm),
            index: 0,
            primed: false,
            homology: vec![(arm, 1, AB_FLAG_A, 1), (next, 1, AB_FLAG_A, 1)],
        });
        intersections.push((
            CurveName::c0(arm).to_string(),
            CurveName::b(arm, 1).to_string(),
            1,
        ));
        intersections.push((
            CurveName::c0(arm).to_string(),
            CurveName::b(next, 1).to_string(),
            1,
        ));
    }

    // Lantern interior curves on the fixed arm, read off the four-holed
    // sphere bounded by a[2,1], c[2,1], c[2,2], a[2,3].
    let la = LANTERN_ARM;
    curves.push(CurveEntry {
        family: Family::D,
        arm: None,
        index: 1,
        primed: false,
        homology: vec![
            (la, 1, AB_FLAG_A, 1),
            (la, 2, AB_FLAG_A, 1),
            (la, 3, AB_FLAG_A, 1),
        ],
    });
    curves.push(CurveEntry {
        family: Family::D,
        arm: None,
        index: 2,
        primed: false,
        homology: vec![(la, 1, AB_FLAG_A, 1), (la, 3, AB_FLAG_A, -1)],
    });
    let d1 = CurveName::d(1).to_string();
    let d2 = CurveName::d(2).to_string();
    intersections.push((d1.clone(), d2.clone(), 2));
    intersections.push((d1.clone(), CurveName::a(la, 2).to_string(), 2));
    intersections.push((d2.clone(), CurveName::a(la, 2).to_string(), 2));
    intersections.push((d2.clone(), CurveName::b(la, 2).to_string(), 2));
    for j in 1..=3 {
        intersections.push((d1.clone(), CurveName::b(la, j).to_string(), 1));
        if j != 2 {
            intersections.push((d2.clone(), CurveName::b(la, j).to_string(), 1));
        }
    }

    AtlasFile {
        config: AtlasConfig { ends: n, depth: g },
        curves,
        intersections,
    }
}

/// Convenience: the validated default atlas.
pub fn default_atlas(cfg: &SurfaceConfig) -> Result<CurveAtlas, AtlasError> {
    build_atlas(&default_atlas_file(cfg))
}
