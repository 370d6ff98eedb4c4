//! The truncated surface model and symbolic curve names.
//!
//! The surface has `n` arms (one per end), each carrying a window of `g`
//! handles. Curves are identified purely symbolically; their homology data
//! lives in the atlas.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AtlasError;

/// Shape of the finite truncation: `ends` arms, `depth` handles per arm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceConfig {
    pub ends: u32,
    pub depth: u32,
}

impl SurfaceConfig {
    pub const DEFAULT_DEPTH: u32 = 6;

    pub fn new(ends: u32, depth: u32) -> Result<Self, AtlasError> {
        if ends < 2 {
            return Err(AtlasError::BadConfig(format!(
                "need at least 2 ends, got {ends}"
            )));
        }
        if depth < 5 {
            return Err(AtlasError::BadConfig(format!(
                "need depth >= 5 so every derivation stays in the window, got {depth}"
            )));
        }
        Ok(SurfaceConfig { ends, depth })
    }

    /// Rank of the truncated homology lattice: one `a` and one `b` slot per handle.
    pub fn rank(&self) -> usize {
        2 * self.ends as usize * self.depth as usize
    }

    /// Arm successor in the cyclic end ordering (1-based).
    pub fn next_arm(&self, arm: u32) -> u32 {
        arm % self.ends + 1
    }

    /// Normalize an integer to an arm label in `1..=n`.
    pub fn wrap_arm(&self, raw: i64) -> u32 {
        let n = self.ends as i64;
        ((raw - 1).rem_euclid(n) + 1) as u32
    }
}

/// Curve families drawn on the truncated surface.
///
/// `A`, `B` are the handle curves (one dual pair per handle), `C` the chain
/// curves linking consecutive handles of one arm, `C0` the curves linking the
/// first handles of two adjacent arms through the central body, and `D` the
/// two interior curves of the embedded lantern on the fixed arm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    B,
    C,
    C0,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::C0 => "c0",
            Family::D => "d",
        };
        f.write_str(s)
    }
}

/// Symbolic identity of a named curve.
///
/// Canonical text forms: `a[arm,index]`, `a'[arm,index]`, `b[arm,index]`,
/// `c[arm,index]`, `c0[arm]`, `d[index]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CurveName {
    pub family: Family,
    /// Absent exactly for `d`-curves, which live on the fixed lantern arm.
    pub arm: Option<u32>,
    pub index: u32,
    pub primed: bool,
}

/// Arm carrying the embedded lantern configuration and its `d`-curves.
pub const LANTERN_ARM: u32 = 2;

impl CurveName {
    pub fn a(arm: u32, index: u32) -> Self {
        CurveName { family: Family::A, arm: Some(arm), index, primed: false }
    }

    pub fn a_primed(arm: u32, index: u32) -> Self {
        CurveName { family: Family::A, arm: Some(arm), index, primed: true }
    }

    pub fn b(arm: u32, index: u32) -> Self {
        CurveName { family: Family::B, arm: Some(arm), index, primed: false }
    }

    pub fn c(arm: u32, index: u32) -> Self {
        CurveName { family: Family::C, arm: Some(arm), index, primed: false }
    }

    pub fn c0(arm: u32) -> Self {
        CurveName { family: Family::C0, arm: Some(arm), index: 0, primed: false }
    }

    pub fn d(index: u32) -> Self {
        CurveName { family: Family::D, arm: None, index, primed: false }
    }

    /// Structural validity against a truncation window.
    pub fn validate(&self, cfg: &SurfaceConfig) -> Result<(), AtlasError> {
        if self.primed && self.family != Family::A {
            return Err(AtlasError::InvalidName(format!(
                "{self}: only a-curves may be primed"
            )));
        }
        match self.family {
            Family::A | Family::B | Family::C => {
                let arm = self.arm.ok_or_else(|| {
                    AtlasError::InvalidName(format!("{self}: missing arm"))
                })?;
                if arm < 1 || arm > cfg.ends {
                    return Err(AtlasError::IndexOutOfWindow {
                        name: self.to_string(),
                        detail: format!("arm {arm} not in 1..={}", cfg.ends),
                    });
                }
                if self.index < 1 || self.index > cfg.depth {
                    return Err(AtlasError::IndexOutOfWindow {
                        name: self.to_string(),
                        detail: format!("index {} not in 1..={}", self.index, cfg.depth),
                    });
                }
            }
            Family::C0 => {
                let arm = self.arm.ok_or_else(|| {
                    AtlasError::InvalidName(format!("{self}: missing arm"))
                })?;
                if arm < 1 || arm > cfg.ends {
                    return Err(AtlasError::IndexOutOfWindow {
                        name: self.to_string(),
                        detail: format!("arm {arm} not in 1..={}", cfg.ends),
                    });
                }
                if self.index != 0 {
                    return Err(AtlasError::InvalidName(format!(
                        "{self}: c0 carries index 0"
                    )));
                }
            }
            Family::D => {
                if self.arm.is_some() {
                    return Err(AtlasError::InvalidName(format!(
                        "{self}: d-curves carry no arm"
                    )));
                }
                if !(1..=2).contains(&self.index) {
                    return Err(AtlasError::InvalidName(format!(
                        "{self}: d-index must be 1 or 2"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Arms whose handles the curve may touch in homology.
    pub fn touched_arms(&self, cfg: &SurfaceConfig) -> Vec<u32> {
        match (self.family, self.arm) {
            (Family::C0, Some(i)) => vec![i, cfg.next_arm(i)],
            (Family::D, _) => vec![LANTERN_ARM],
            (_, Some(i)) => vec![i],
            _ => vec![],
        }
    }
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = if self.primed { "'" } else { "" };
        match self.family {
            Family::C0 => write!(f, "c0[{}]", self.arm.unwrap_or(0)),
            Family::D => write!(f, "d[{}]", self.index),
            fam => write!(f, "{fam}{prime}[{},{}]", self.arm.unwrap_or(0), self.index),
        }
    }
}

impl FromStr for CurveName {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AtlasError::InvalidName(format!("cannot parse curve name `{s}`"));
        let open = s.find('[').ok_or_else(bad)?;
        if !s.ends_with(']') {
            return Err(bad());
        }
        let head = &s[..open];
        let args: Vec<&str> = s[open + 1..s.len() - 1].split(',').collect();
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let (family, primed) = match head {
            "a" => (Family::A, false),
            "a'" => (Family::A, true),
            "b" => (Family::B, false),
            "c" => (Family::C, false),
            "c0" => (Family::C0, false),
            "d" => (Family::D, false),
            _ => return Err(bad()),
        };
        match family {
            Family::C0 => {
                if args.len() != 1 {
                    return Err(bad());
                }
                Ok(CurveName::c0(num(args[0])?))
            }
            Family::D => {
                if args.len() != 1 {
                    return Err(bad());
                }
                Ok(CurveName::d(num(args[0])?))
            }
            _ => {
                if args.len() != 2 {
                    return Err(bad());
                }
                let name = CurveName {
                    family,
                    arm: Some(num(args[0])?),
                    index: num(args[1])?,
                    primed,
                };
                Ok(name)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_bounds() {
        assert!(SurfaceConfig::new(1, 6).is_err());
        assert!(SurfaceConfig::new(3, 4).is_err());
        let cfg = SurfaceConfig::new(3, 6).unwrap();
        assert_eq!(cfg.rank(), 36);
        assert_eq!(cfg.next_arm(3), 1);
        assert_eq!(cfg.wrap_arm(0), 3);
        assert_eq!(cfg.wrap_arm(-1), 2);
        assert_eq!(cfg.wrap_arm(4), 1);
    }

    #[test]
    fn name_round_trip() {
        for text in ["a[1,1]", "a'[7,1]", "b[3,2]", "c[2,5]", "c0[3]", "d[1]"] {
            let name: CurveName = text.parse().unwrap();
            assert_eq!(name.to_string(), text);
        }
    }

    #[test]
    fn name_validation() {
        let cfg = SurfaceConfig::new(4, 6).unwrap();
        assert!(CurveName::a(1, 1).validate(&cfg).is_ok());
        assert!(CurveName::a(5, 1).validate(&cfg).is_err());
        assert!(CurveName::b(1, 7).validate(&cfg).is_err());
        assert!(CurveName::d(3).validate(&cfg).is_err());
        let primed_b = CurveName { family: Family::B, arm: Some(1), index: 1, primed: true };
        assert!(primed_b.validate(&cfg).is_err());
    }

    #[test]
    fn c0_touches_adjacent_arms() {
        let cfg = SurfaceConfig::new(3, 6).unwrap();
        assert_eq!(CurveName::c0(3).touched_arms(&cfg), vec![3, 1]);
    }
}
