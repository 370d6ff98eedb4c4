//! Action of mapping words on the ends of the surface and brute-force
//! subgroup closure inside the symmetric group.
//!
//! Twists and handle shifts fix every end. Both reflection factors swap the
//! first two ends. The end images of the two order-two rotations are fixed by
//! the convention that makes their composite the one-step cycle; any
//! figure-faithful relabelling verifies the same closure facts.

use std::collections::HashSet;
use std::fmt;

use crate::error::ScriptError;
use crate::surface::SurfaceConfig;
use crate::word::{GeneratorToken, MappingWord, TokenKind};

/// A permutation of the ends `1..=n`, stored as 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EndPermutation {
    images: Vec<usize>,
}

impl EndPermutation {
    pub fn identity(n: u32) -> Self {
        EndPermutation { images: (0..n as usize).collect() }
    }

    /// From 1-based images; must be a bijection.
    pub fn from_images_one_based(images: &[u32]) -> Option<Self> {
        let n = images.len();
        let imgs: Vec<usize> = images.iter().map(|&i| i as usize - 1).collect();
        let mut seen = vec![false; n];
        for &i in &imgs {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(EndPermutation { images: imgs })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// 1-based image of a 1-based end.
    pub fn map(&self, end: u32) -> u32 {
        self.images[end as usize - 1] as u32 + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Functional composition: `other` acts first.
    pub fn compose(&self, other: &EndPermutation) -> EndPermutation {
        EndPermutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> EndPermutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        EndPermutation { images }
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            k += 1;
        }
        k
    }

    fn key(&self) -> Vec<u8> {
        self.images.iter().map(|&i| i as u8).collect()
    }
}

impl fmt::Display for EndPermutation {
    /// Cycle notation with fixed points shown, e.g. `(1 2)(3)(4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                seen[i] = true;
                first = false;
                i = self.images[i];
                if i == start {
                    break;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn token_permutation(token: &GeneratorToken, cfg: &SurfaceConfig) -> EndPermutation {
    let n = cfg.ends;
    let base = match token.kind {
        TokenKind::Twist(_) | TokenKind::Shift(_) => EndPermutation::identity(n),
        TokenKind::Tau1 | TokenKind::Tau2 => {
            let mut images: Vec<u32> = (1..=n).collect();
            images.swap(0, 1);
            EndPermutation::from_images_one_based(&images).unwrap()
        }
        TokenKind::Rho1 => {
            let images: Vec<u32> = (1..=n).map(|i| cfg.wrap_arm(2 - i as i64)).collect();
            EndPermutation::from_images_one_based(&images).unwrap()
        }
        TokenKind::Rho2 => {
            let images: Vec<u32> = (1..=n).map(|i| cfg.wrap_arm(1 - i as i64)).collect();
            EndPermutation::from_images_one_based(&images).unwrap()
        }
    };
    if token.inverse {
        base.inverse()
    } else {
        base
    }
}

/// Image of a word under the projection to the symmetric group on ends.
pub fn perm_of(word: &MappingWord, cfg: &SurfaceConfig) -> EndPermutation {
    let mut acc = EndPermutation::identity(cfg.ends);
    for token in word.tokens() {
        acc = acc.compose(&token_permutation(token, cfg));
    }
    acc
}

/// Exact closure of a generating set by breadth-first products.
#[derive(Debug)]
pub struct SubgroupClosure {
    degree: u32,
    elements: HashSet<Vec<u8>>,
}

impl SubgroupClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn contains(&self, p: &EndPermutation) -> bool {
        self.elements.contains(&p.key())
    }

    pub fn is_full_symmetric(&self) -> bool {
        self.order() == factorial(self.degree)
    }
}

/// `n!` as usize; fine for the supported range `n <= 10`.
pub fn factorial(n: u32) -> usize {
    (1..=n as usize).product::<usize>().max(1)
}

/// Closure of the generated subgroup; enumerative, so capped at `n <= 10`.
pub fn subgroup_closure(
    generators: &[EndPermutation],
    n: u32,
) -> Result<SubgroupClosure, ScriptError> {
    if n > 10 {
        return Err(ScriptError::TooLarge(n));
    }
    let identity = EndPermutation::identity(n);
    let mut elements: HashSet<Vec<u8>> = HashSet::new();
    elements.insert(identity.key());
    let mut frontier = vec![identity];
    while let Some(current) = frontier.pop() {
        for g in generators {
            debug_assert_eq!(g.degree(), n);
            let next = g.compose(&current);
            if elements.insert(next.key()) {
                frontier.push(next);
            }
        }
    }
    Ok(SubgroupClosure { degree: n, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn cfg(n: u32) -> SurfaceConfig {
        SurfaceConfig::new(n, 6).unwrap()
    }

    #[test]
    fn rotation_image_is_the_full_cycle() {
        for n in 2..=8 {
            let cfg = cfg(n);
            let r = perm_of(&parse_word("rho1*rho2").unwrap(), &cfg);
            for i in 1..=n {
                assert_eq!(r.map(i), i % n + 1);
            }
            assert_eq!(r.order(), n as usize);
        }
    }

    #[test]
    fn shift_fixes_every_end() {
        let cfg = cfg(5);
        assert!(perm_of(&parse_word("h[1]").unwrap(), &cfg).is_identity());
        let t = perm_of(&parse_word("tau1*tau2").unwrap(), &cfg);
        assert!(t.is_identity());
    }

    #[test]
    fn rho1_convention_at_n4() {
        let cfg = cfg(4);
        let p = perm_of(&parse_word("rho1").unwrap(), &cfg);
        assert_eq!(p.map(1), 1);
        assert_eq!(p.map(2), 4);
        assert_eq!(p.map(3), 3);
        assert_eq!(p.map(4), 2);
        assert!(p.compose(&p).is_identity());
        let q = perm_of(&parse_word("rho2").unwrap(), &cfg);
        assert!(q.compose(&q).is_identity());
    }

    #[test]
    fn homomorphism_and_inverse() {
        let cfg = cfg(5);
        let u = parse_word("rho1*tau1*h[2]").unwrap();
        let v = parse_word("tau2*rho2").unwrap();
        let lhs = perm_of(&u.compose(&v), &cfg);
        assert_eq!(lhs, perm_of(&u, &cfg).compose(&perm_of(&v, &cfg)));
        let w = parse_word("rho1*tau2").unwrap();
        assert_eq!(perm_of(&w.invert(), &cfg), perm_of(&w, &cfg).inverse());
    }

    #[test]
    fn cycle_notation_prints_fixed_points() {
        let cfg = cfg(4);
        let p = perm_of(&parse_word("tau1").unwrap(), &cfg);
        assert_eq!(p.to_string(), "(1 2)(3)(4)");
        assert_eq!(EndPermutation::identity(3).to_string(), "(1)(2)(3)");
    }

    #[test]
    fn cycle_and_transposition_generate_everything() {
        for n in 3..=7 {
            let cfg = cfg(n);
            let r = perm_of(&parse_word("R").unwrap(), &cfg);
            let t = perm_of(&parse_word("tau1").unwrap(), &cfg);
            let closure = subgroup_closure(&[r, t], n).unwrap();
            assert_eq!(closure.order(), factorial(n));
            assert!(closure.is_full_symmetric());
        }
    }

    #[test]
    fn trivial_and_klein_closures() {
        let id = EndPermutation::identity(4);
        let closure = subgroup_closure(&[id], 4).unwrap();
        assert_eq!(closure.order(), 1);

        // Two disjoint transpositions generate a four-element group; the
        // oracle is the explicit enumeration of its members.
        let s12 = EndPermutation::from_images_one_based(&[2, 1, 3, 4]).unwrap();
        let s34 = EndPermutation::from_images_one_based(&[1, 2, 4, 3]).unwrap();
        let closure = subgroup_closure(&[s12.clone(), s34.clone()], 4).unwrap();
        assert_eq!(closure.order(), 4);
        for member in [
            EndPermutation::identity(4),
            s12.clone(),
            s34.clone(),
            s12.compose(&s34),
        ] {
            assert!(closure.contains(&member));
        }
        assert!(!closure.contains(&EndPermutation::from_images_one_based(&[3, 1, 2, 4]).unwrap()));
    }

    #[test]
    fn closure_is_capped() {
        assert!(matches!(
            subgroup_closure(&[EndPermutation::identity(11)], 11),
            Err(ScriptError::TooLarge(11))
        ));
    }

    #[test]
    fn empty_generating_set_closes_to_identity() {
        let closure = subgroup_closure(&[], 5).unwrap();
        assert_eq!(closure.order(), 1);
    }
}
