//! Exact integer arithmetic on the truncated homology lattice.
//!
//! The lattice has rank `2ng` with one `a` and one `b` slot per handle
//! `(arm, index)` and the standard alternating pairing `<a, b> = +1` on each
//! handle. All arithmetic is checked; overflow is an error, never wraparound.
//!
//! Generator actions are matrices over this lattice. Handle shifts are only
//! partially defined on the window, so a matrix carries an optional domain:
//! a column of `None` marks a basis slot on which the action is undefined.

use std::fmt;

use crate::error::EngineError;
use crate::surface::SurfaceConfig;

/// Basis slot kind: the `a` or the `b` curve of a handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotKind {
    A,
    B,
}

/// Dense index of the basis slot for `(arm, index, kind)`; all 1-based.
pub fn slot(cfg: &SurfaceConfig, arm: u32, index: u32, kind: SlotKind) -> usize {
    debug_assert!(arm >= 1 && arm <= cfg.ends);
    debug_assert!(index >= 1 && index <= cfg.depth);
    let handle = (arm as usize - 1) * cfg.depth as usize + (index as usize - 1);
    2 * handle + match kind {
        SlotKind::A => 0,
        SlotKind::B => 1,
    }
}

/// Inverse of [`slot`]: `(arm, index, kind)` of a dense index.
pub fn slot_coords(cfg: &SurfaceConfig, s: usize) -> (u32, u32, SlotKind) {
    let kind = if s.is_multiple_of(2) { SlotKind::A } else { SlotKind::B };
    let handle = s / 2;
    let g = cfg.depth as usize;
    ((handle / g) as u32 + 1, (handle % g) as u32 + 1, kind)
}

/// Human-readable slot label, e.g. `a[2,3]`.
pub fn slot_label(cfg: &SurfaceConfig, s: usize) -> String {
    let (arm, index, kind) = slot_coords(cfg, s);
    let k = match kind {
        SlotKind::A => "a",
        SlotKind::B => "b",
    };
    format!("{k}[{arm},{index}]")
}

fn checked_add(x: i64, y: i64) -> Result<i64, EngineError> {
    x.checked_add(y).ok_or(EngineError::Overflow)
}

fn checked_mul(x: i64, y: i64) -> Result<i64, EngineError> {
    x.checked_mul(y).ok_or(EngineError::Overflow)
}

/// Integer vector in the truncated lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyClass {
    coeffs: Vec<i64>,
}

impl HomologyClass {
    pub fn zero(cfg: &SurfaceConfig) -> Self {
        HomologyClass { coeffs: vec![0; cfg.rank()] }
    }

    pub fn basis(cfg: &SurfaceConfig, s: usize) -> Self {
        let mut coeffs = vec![0; cfg.rank()];
        coeffs[s] = 1;
        HomologyClass { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        HomologyClass { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, s: usize) -> i64 {
        self.coeffs[s]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Slots carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(s, _)| s)
    }

    /// gcd of the coefficients; primitive classes have gcd 1.
    pub fn content(&self) -> u64 {
        self.coeffs.iter().fold(0u64, |acc, &c| gcd(acc, c.unsigned_abs()))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn neg(&self) -> Self {
        HomologyClass { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }

    /// `self + k * other`, exactly.
    pub fn add_scaled(&self, k: i64, other: &Self) -> Result<Self, EngineError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (x, y) in self.coeffs.iter().zip(&other.coeffs) {
            coeffs.push(checked_add(*x, checked_mul(k, *y)?)?);
        }
        Ok(HomologyClass { coeffs })
    }

    /// Render against a configuration, e.g. `a[1,1] + a[2,1]`.
    pub fn display(&self, cfg: &SurfaceConfig) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for s in 0..self.coeffs.len() {
            let c = self.coeffs[s];
            if c == 0 {
                continue;
            }
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&slot_label(cfg, s));
        }
        out
    }
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

/// Alternating intersection pairing `<x, y>` with `<a, b> = +1` per handle.
pub fn pairing(x: &HomologyClass, y: &HomologyClass) -> Result<i64, EngineError> {
    debug_assert_eq!(x.dim(), y.dim());
    let mut acc: i64 = 0;
    let xs = x.coeffs();
    let ys = y.coeffs();
    let mut s = 0;
    while s < xs.len() {
        let term = checked_mul(xs[s], ys[s + 1])?
            .checked_sub(checked_mul(xs[s + 1], ys[s])?)
            .ok_or(EngineError::Overflow)?;
        acc = checked_add(acc, term)?;
        s += 2;
    }
    Ok(acc)
}

/// Integer matrix acting on the lattice, possibly only on a sub-window.
///
/// Column `v` is the image of basis slot `v`; `None` marks slots outside the
/// declared domain. Composition shrinks domains column-wise: a column
/// survives only if its image support stays inside the outer domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix {
    dim: usize,
    cols: Vec<Option<Vec<i64>>>,
}

impl ActionMatrix {
    pub fn identity(dim: usize) -> Self {
        let cols = (0..dim)
            .map(|v| {
                let mut col = vec![0; dim];
                col[v] = 1;
                Some(col)
            })
            .collect();
        ActionMatrix { dim, cols }
    }

    pub fn from_cols(cols: Vec<Option<Vec<i64>>>) -> Self {
        ActionMatrix { dim: cols.len(), cols }
    }

    /// Signed partial permutation from a slot map; `None` marks undefined slots.
    pub fn from_slot_map(dim: usize, map: impl Fn(usize) -> Option<(usize, i64)>) -> Self {
        let cols = (0..dim)
            .map(|v| {
                map(v).map(|(target, sign)| {
                    let mut col = vec![0; dim];
                    col[target] = sign;
                    col
                })
            })
            .collect();
        ActionMatrix { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_total(&self) -> bool {
        self.cols.iter().all(|c| c.is_some())
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.cols
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_some())
            .map(|(v, _)| v)
    }

    pub fn excluded_slots(&self) -> Vec<usize> {
        self.cols
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn col(&self, v: usize) -> Option<&Vec<i64>> {
        self.cols[v].as_ref()
    }

    /// Apply to a class. Errors if the support leaves the domain.
    pub fn apply(&self, x: &HomologyClass) -> Result<HomologyClass, EngineError> {
        if x.dim() != self.dim {
            return Err(EngineError::DomainMismatch(format!(
                "class dim {} vs matrix dim {}",
                x.dim(),
                self.dim
            )));
        }
        let mut out = vec![0i64; self.dim];
        for v in x.support() {
            let col = self.cols[v].as_ref().ok_or_else(|| EngineError::DomainMismatch(
                format!("slot {v} outside matrix domain"),
            ))?;
            let k = x.coeff(v);
            for (o, &c) in out.iter_mut().zip(col) {
                *o = checked_add(*o, checked_mul(k, c)?)?;
            }
        }
        Ok(HomologyClass::from_coeffs(out))
    }

    fn apply_vec(&self, x: &[i64]) -> Result<Option<Vec<i64>>, EngineError> {
        let mut out = vec![0i64; self.dim];
        for (v, &k) in x.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let Some(col) = self.cols[v].as_ref() else {
                return Ok(None);
            };
            for (o, &c) in out.iter_mut().zip(col) {
                *o = checked_add(*o, checked_mul(k, c)?)?;
            }
        }
        Ok(Some(out))
    }

    /// Functional composition `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &ActionMatrix) -> Result<ActionMatrix, EngineError> {
        if self.dim != inner.dim {
            return Err(EngineError::DomainMismatch(format!(
                "matrix dims {} vs {}",
                self.dim, inner.dim
            )));
        }
        let mut cols = Vec::with_capacity(self.dim);
        for v in 0..self.dim {
            match inner.cols[v].as_ref() {
                None => cols.push(None),
                Some(y) => cols.push(self.apply_vec(y)?),
            }
        }
        Ok(ActionMatrix { dim: self.dim, cols })
    }

    pub fn is_identity_on_domain(&self) -> bool {
        self.cols.iter().enumerate().all(|(v, col)| match col {
            None => true,
            Some(c) => c.iter().enumerate().all(|(u, &x)| x == i64::from(u == v)),
        })
    }

    /// Exact equality on the common domain; errors if dims differ.
    pub fn equal_on_common_domain(&self, other: &ActionMatrix) -> Result<bool, EngineError> {
        if self.dim != other.dim {
            return Err(EngineError::DomainMismatch(format!(
                "matrix dims {} vs {}",
                self.dim, other.dim
            )));
        }
        for v in 0..self.dim {
            if let (Some(x), Some(y)) = (&self.cols[v], &other.cols[v]) {
                if x != y {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Equality up to one global sign on the common domain.
    /// Returns the sign that realizes equality, if any.
    pub fn sign_equal_on_common_domain(
        &self,
        other: &ActionMatrix,
    ) -> Result<Option<i64>, EngineError> {
        if self.dim != other.dim {
            return Err(EngineError::DomainMismatch(format!(
                "matrix dims {} vs {}",
                self.dim, other.dim
            )));
        }
        let mut sign: Option<i64> = None;
        for v in 0..self.dim {
            if let (Some(x), Some(y)) = (&self.cols[v], &other.cols[v]) {
                for (a, b) in x.iter().zip(y) {
                    match (a, b) {
                        (0, 0) => {}
                        (a, b) if *a == *b => match sign {
                            None => sign = Some(1),
                            Some(1) => {}
                            Some(_) => return Ok(None),
                        },
                        (a, b) if *a == -*b => match sign {
                            None => sign = Some(-1),
                            Some(-1) => {}
                            Some(_) => return Ok(None),
                        },
                        _ => return Ok(None),
                    }
                }
            }
        }
        Ok(Some(sign.unwrap_or(1)))
    }

    /// Strict equality up to global sign: same domain required.
    pub fn equal_up_to_sign(&self, other: &ActionMatrix) -> Result<bool, EngineError> {
        if self.dim != other.dim {
            return Err(EngineError::DomainMismatch(format!(
                "matrix dims {} vs {}",
                self.dim, other.dim
            )));
        }
        for v in 0..self.dim {
            if self.cols[v].is_some() != other.cols[v].is_some() {
                return Err(EngineError::DomainMismatch(format!(
                    "domains differ at slot {v}"
                )));
            }
        }
        Ok(self.sign_equal_on_common_domain(other)?.is_some())
    }

    /// `MᵀJM = J` for total matrices: columns pair like the basis they image.
    pub fn preserves_form(&self) -> Result<bool, EngineError> {
        if !self.is_total() {
            return Err(EngineError::DomainMismatch(
                "form preservation is checked on total matrices".into(),
            ));
        }
        let cols: Vec<HomologyClass> = (0..self.dim)
            .map(|v| HomologyClass::from_coeffs(self.cols[v].clone().unwrap()))
            .collect();
        for u in 0..self.dim {
            for v in (u + 1)..self.dim {
                let expect = if v == u + 1 && u % 2 == 0 { 1 } else { 0 };
                if pairing(&cols[u], &cols[v])? != expect {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for ActionMatrix {
    /// Row-major integer grid; `.` marks columns outside the domain.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            for v in 0..self.dim {
                if v > 0 {
                    write!(f, " ")?;
                }
                match &self.cols[v] {
                    None => write!(f, ".")?,
                    Some(col) => write!(f, "{}", col[r])?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Transvection `x -> x + sign * <x, c> * c`, the homology action of the
/// right-handed Dehn twist (`sign = +1`) or its inverse (`sign = -1`).
pub fn transvection(
    cfg: &SurfaceConfig,
    class: &HomologyClass,
    sign: i64,
) -> Result<ActionMatrix, EngineError> {
    if class.is_zero() {
        return Err(EngineError::ZeroClass(class.display(cfg)));
    }
    let dim = cfg.rank();
    let mut cols = Vec::with_capacity(dim);
    for v in 0..dim {
        let e = HomologyClass::basis(cfg, v);
        let k = checked_mul(sign, pairing(&e, class)?)?;
        let img = e.add_scaled(k, class)?;
        cols.push(Some(img.coeffs().to_vec()));
    }
    Ok(ActionMatrix::from_cols(cols))
}

/// Apply a transvection directly to a class, cheaper than building the matrix.
pub fn transvect_class(
    class: &HomologyClass,
    about: &HomologyClass,
    sign: i64,
) -> Result<HomologyClass, EngineError> {
    let k = checked_mul(sign, pairing(class, about)?)?;
    class.add_scaled(k, about)
}

fn arm_permutation_matrix(cfg: &SurfaceConfig, arm_map: impl Fn(u32) -> u32) -> ActionMatrix {
    ActionMatrix::from_slot_map(cfg.rank(), |s| {
        let (arm, index, kind) = slot_coords(cfg, s);
        Some((slot(cfg, arm_map(arm), index, kind), 1))
    })
}

/// End relabelling of the order-two rotation whose axis passes through arm 1.
pub fn rho1_arm_map(cfg: &SurfaceConfig, arm: u32) -> u32 {
    cfg.wrap_arm(2 - arm as i64)
}

/// End relabelling of the order-two rotation offset half a step from the first.
pub fn rho2_arm_map(cfg: &SurfaceConfig, arm: u32) -> u32 {
    cfg.wrap_arm(1 - arm as i64)
}

pub fn rho1_matrix(cfg: &SurfaceConfig) -> ActionMatrix {
    arm_permutation_matrix(cfg, |arm| rho1_arm_map(cfg, arm))
}

pub fn rho2_matrix(cfg: &SurfaceConfig) -> ActionMatrix {
    arm_permutation_matrix(cfg, |arm| rho2_arm_map(cfg, arm))
}

/// The rotation by one arm step: composite of the two order-two rotations.
pub fn rotation_matrix(cfg: &SurfaceConfig) -> ActionMatrix {
    arm_permutation_matrix(cfg, |arm| cfg.next_arm(arm))
}

/// First reflection factor of the handle shift between arms 1 and 2.
///
/// On the doubly infinite handle strip through arms 1 and 2 this is the point
/// reflection fixing the first handle of arm 2. The strip leaves the window at
/// the deepest handle of arm 1; that single edge slot is completed as a fixed
/// point to keep the matrix a total involution. See [`tau_edge_slots`].
pub fn tau1_matrix(cfg: &SurfaceConfig) -> ActionMatrix {
    let g = cfg.depth;
    ActionMatrix::from_slot_map(cfg.rank(), |s| {
        let (arm, index, kind) = slot_coords(cfg, s);
        let target = match arm {
            1 if index < g => slot(cfg, 2, index + 1, kind),
            1 => s,
            2 if index == 1 => s,
            2 => slot(cfg, 1, index - 1, kind),
            _ => s,
        };
        Some((target, 1))
    })
}

/// Second reflection factor: swaps the strips of arms 1 and 2 handle-wise.
pub fn tau2_matrix(cfg: &SurfaceConfig) -> ActionMatrix {
    ActionMatrix::from_slot_map(cfg.rank(), |s| {
        let (arm, index, kind) = slot_coords(cfg, s);
        let target = match arm {
            1 => slot(cfg, 2, index, kind),
            2 => slot(cfg, 1, index, kind),
            _ => s,
        };
        Some((target, 1))
    })
}

/// Window slots where the reflection factors are truncation-completed rather
/// than figure-determined.
pub fn tau_edge_slots(cfg: &SurfaceConfig) -> Vec<usize> {
    vec![
        slot(cfg, 1, cfg.depth, SlotKind::A),
        slot(cfg, 1, cfg.depth, SlotKind::B),
    ]
}

/// Partial action of the handle shift between arms `i` and `i+1` (forward),
/// or its inverse. The forward shift carries the first handle of arm `i` over
/// to arm `i+1` and pushes arm `i+1` one step deeper, so the deepest handle of
/// arm `i+1` has no image inside the window.
pub fn shift_matrix(
    cfg: &SurfaceConfig,
    i: u32,
    inverse: bool,
) -> Result<ActionMatrix, EngineError> {
    if i < 1 || i + 1 > cfg.ends {
        return Err(EngineError::InvalidShift { index: i, ends: cfg.ends });
    }
    let g = cfg.depth;
    let (src, dst) = (i, i + 1);
    let m = ActionMatrix::from_slot_map(cfg.rank(), |s| {
        let (arm, index, kind) = slot_coords(cfg, s);
        if !inverse {
            if arm == src {
                if index == 1 {
                    Some((slot(cfg, dst, 1, kind), 1))
                } else {
                    Some((slot(cfg, src, index - 1, kind), 1))
                }
            } else if arm == dst {
                if index == g {
                    None
                } else {
                    Some((slot(cfg, dst, index + 1, kind), 1))
                }
            } else {
                Some((s, 1))
            }
        } else if arm == dst {
            if index == 1 {
                Some((slot(cfg, src, 1, kind), 1))
            } else {
                Some((slot(cfg, dst, index - 1, kind), 1))
            }
        } else if arm == src {
            if index == g {
                None
            } else {
                Some((slot(cfg, src, index + 1, kind), 1))
            }
        } else {
            Some((s, 1))
        }
    });
    Ok(m)
}
