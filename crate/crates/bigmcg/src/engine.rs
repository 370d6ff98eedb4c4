//! Evaluation of mapping words on the truncated homology lattice.
//!
//! Twists act as transvections about atlas classes, the order-two rotations
//! and the reflection factors as signed permutations, handle shifts as
//! windowed partial maps. Compositions follow the functional convention:
//! the rightmost token of a word acts first.

use crate::atlas::CurveAtlas;
use crate::error::EngineError;
use crate::lattice::{self, ActionMatrix, HomologyClass};
use crate::surface::{CurveName, SurfaceConfig};
use crate::word::{GeneratorToken, MappingWord, TokenKind};

/// Matrix of a single generator token on the truncated lattice.
pub fn generator_matrix(
    token: &GeneratorToken,
    atlas: &CurveAtlas,
) -> Result<ActionMatrix, EngineError> {
    let cfg = atlas.cfg();
    let sign = if token.inverse { -1 } else { 1 };
    match token.kind {
        TokenKind::Twist(name) => {
            let class = atlas.class(&name)?;
            lattice::transvection(cfg, class, sign)
        }
        TokenKind::Rho1 => Ok(lattice::rho1_matrix(cfg)),
        TokenKind::Rho2 => Ok(lattice::rho2_matrix(cfg)),
        TokenKind::Tau1 => Ok(lattice::tau1_matrix(cfg)),
        TokenKind::Tau2 => Ok(lattice::tau2_matrix(cfg)),
        TokenKind::Shift(i) => lattice::shift_matrix(cfg, i, token.inverse),
    }
}

/// Matrix of a whole word. Partial domains of handle shifts propagate through
/// the product; the result records on which basis slots it is defined.
pub fn word_matrix(word: &MappingWord, atlas: &CurveAtlas) -> Result<ActionMatrix, EngineError> {
    let mut acc = ActionMatrix::identity(atlas.cfg().rank());
    for token in word.tokens() {
        let m = generator_matrix(token, atlas)?;
        acc = acc.compose(&m)?;
    }
    Ok(acc)
}

fn apply_token(
    token: &GeneratorToken,
    x: &HomologyClass,
    atlas: &CurveAtlas,
) -> Result<Option<HomologyClass>, EngineError> {
    let sign = if token.inverse { -1 } else { 1 };
    match token.kind {
        TokenKind::Twist(name) => {
            let about = atlas.class(&name)?;
            Ok(Some(lattice::transvect_class(x, about, sign)?))
        }
        _ => {
            let m = generator_matrix(token, atlas)?;
            match m.apply(x) {
                Ok(y) => Ok(Some(y)),
                Err(EngineError::DomainMismatch(_)) => Ok(None),
                Err(e) => Err(e),
            }
        }
    }
}

/// Image of a class under a word; exact integers, rightmost token first.
pub fn evaluate(
    word: &MappingWord,
    x: &HomologyClass,
    atlas: &CurveAtlas,
) -> Result<HomologyClass, EngineError> {
    let cfg = atlas.cfg();
    let mut current = x.clone();
    for (token_index, token) in word.tokens().iter().enumerate().rev() {
        match apply_token(token, &current, atlas)? {
            Some(next) => current = next,
            None => {
                let support = current
                    .support()
                    .map(|s| lattice::slot_label(cfg, s))
                    .collect::<Vec<_>>()
                    .join(", ");
                return Err(EngineError::OutOfWindow {
                    token_index,
                    token: token.to_string(),
                    support,
                });
            }
        }
    }
    Ok(current)
}

/// Image of a named curve's class under a word.
pub fn evaluate_curve(
    word: &MappingWord,
    name: &CurveName,
    atlas: &CurveAtlas,
) -> Result<HomologyClass, EngineError> {
    let class = atlas.class(name)?;
    evaluate(word, class, atlas)
}

/// Equality of two action matrices up to one global sign (same domain).
pub fn matrices_equal_up_to_sign(
    m1: &ActionMatrix,
    m2: &ActionMatrix,
) -> Result<bool, EngineError> {
    m1.equal_up_to_sign(m2)
}

/// Equality of two classes up to global sign (same dimension).
pub fn classes_equal_up_to_sign(
    x: &HomologyClass,
    y: &HomologyClass,
) -> Result<bool, EngineError> {
    if x.dim() != y.dim() {
        return Err(EngineError::DomainMismatch(format!(
            "class dims {} vs {}",
            x.dim(),
            y.dim()
        )));
    }
    Ok(x.eq_up_to_sign(y))
}

/// The twist matrix about a curve, with the window shape of the atlas.
pub fn twist_matrix(name: &CurveName, atlas: &CurveAtlas) -> Result<ActionMatrix, EngineError> {
    generator_matrix(
        &GeneratorToken::new(TokenKind::Twist(*name)),
        atlas,
    )
}

/// Fixed depth-window facts about a configuration used in reports.
pub fn window_edge_labels(cfg: &SurfaceConfig) -> Vec<String> {
    lattice::tau_edge_slots(cfg)
        .into_iter()
        .map(|s| lattice::slot_label(cfg, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::default_atlas;
    use crate::word::parse_word;

    fn setup(n: u32) -> CurveAtlas {
        default_atlas(&SurfaceConfig::new(n, 6).unwrap()).unwrap()
    }

    fn class(atlas: &CurveAtlas, name: &str) -> HomologyClass {
        atlas.class(&name.parse().unwrap()).unwrap().clone()
    }

    #[test]
    fn empty_word_is_identity() {
        let atlas = setup(3);
        let x = class(&atlas, "b[1,1]");
        assert_eq!(evaluate(&MappingWord::empty(), &x, &atlas).unwrap(), x);
        let m = word_matrix(&MappingWord::empty(), &atlas).unwrap();
        assert!(m.is_identity_on_domain() && m.is_total());
    }

    #[test]
    fn shift_moves_the_connecting_curve_one_handle_deeper() {
        let atlas = setup(3);
        let w = parse_word("h[1]").unwrap();
        let img = evaluate_curve(&w, &"c0[1]".parse().unwrap(), &atlas).unwrap();
        assert!(img.eq_up_to_sign(&class(&atlas, "c[2,1]")));
        let img = evaluate_curve(&w, &"b[1,1]".parse().unwrap(), &atlas).unwrap();
        assert!(img.eq_up_to_sign(&class(&atlas, "b[2,1]")));
        let img = evaluate_curve(&w, &"a[1,1]".parse().unwrap(), &atlas).unwrap();
        assert!(img.eq_up_to_sign(&class(&atlas, "a'[2,1]")));
    }

    #[test]
    fn shift_runs_out_of_window_at_the_deepest_handle() {
        let atlas = setup(3);
        let w = parse_word("h[1]").unwrap();
        let deep = class(&atlas, "a[2,6]");
        match evaluate(&w, &deep, &atlas) {
            Err(EngineError::OutOfWindow { token_index, support, .. }) => {
                assert_eq!(token_index, 0);
                assert!(support.contains("a[2,6]"), "support: {support}");
            }
            other => panic!("expected out-of-window, got {other:?}"),
        }
    }

    #[test]
    fn rotation_action_on_named_curves() {
        let atlas = setup(4);
        let r = parse_word("R").unwrap();
        for (from, to) in [("c0[1]", "c0[2]"), ("a[1,2]", "a[2,2]"), ("b[4,1]", "b[1,1]")] {
            let img = evaluate_curve(&r, &from.parse().unwrap(), &atlas).unwrap();
            assert!(img.eq_up_to_sign(&class(&atlas, to)), "{from} -> {to}");
        }
    }

    #[test]
    fn twist_example_from_the_chain() {
        let atlas = setup(3);
        let w = parse_word("A[1,1]").unwrap();
        let img = evaluate_curve(&w, &"b[1,1]".parse().unwrap(), &atlas).unwrap();
        let expect = class(&atlas, "b[1,1]")
            .add_scaled(-1, &class(&atlas, "a[1,1]"))
            .unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn composite_matrix_equals_matrix_product() {
        let atlas = setup(3);
        let u = parse_word("A[1,1]*rho1").unwrap();
        let v = parse_word("tau2*inv(B[2,1])").unwrap();
        let lhs = word_matrix(&u.compose(&v), &atlas).unwrap();
        let mu = word_matrix(&u, &atlas).unwrap();
        let mv = word_matrix(&v, &atlas).unwrap();
        assert_eq!(lhs, mu.compose(&mv).unwrap());
    }

    #[test]
    fn word_and_inverse_cancel_on_homology() {
        let atlas = setup(3);
        let w = parse_word("A[1,1]*rho2*C0[2]*tau1").unwrap();
        let m = word_matrix(&w.compose(&w.invert()), &atlas).unwrap();
        assert!(m.is_identity_on_domain() && m.is_total());
    }

    #[test]
    fn unknown_curve_in_word() {
        let atlas = setup(3);
        let w = parse_word("C[1,6]").unwrap();
        assert!(matches!(
            word_matrix(&w, &atlas),
            Err(EngineError::UnknownCurve(_))
        ));
    }

    #[test]
    fn shift_index_out_of_range() {
        let atlas = setup(3);
        let w = parse_word("h[3]").unwrap();
        assert!(matches!(
            word_matrix(&w, &atlas),
            Err(EngineError::InvalidShift { .. })
        ));
    }

    #[test]
    fn transvection_conjugation_identity_for_a_sample() {
        let atlas = setup(3);
        let f = parse_word("rho1*A[1,1]*tau2").unwrap();
        let m = word_matrix(&f, &atlas).unwrap();
        let m_inv = word_matrix(&f.invert(), &atlas).unwrap();
        let v = class(&atlas, "c0[1]");
        let tv = lattice::transvection(atlas.cfg(), &v, 1).unwrap();
        let lhs = m.compose(&tv).unwrap().compose(&m_inv).unwrap();
        let rhs = lattice::transvection(atlas.cfg(), &m.apply(&v).unwrap(), 1).unwrap();
        assert_eq!(lhs, rhs);
    }
}
