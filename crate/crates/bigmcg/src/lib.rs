//! Exact verification of mapping class group generator computations on a
//! finite truncation of the infinite-genus surface with `n` ends.
//!
//! The engine models the surface by a window of `g` handles per arm, carries
//! a validated atlas of named curves with integer homology classes, evaluates
//! words in the generators (Dehn twists, two order-two rotations, two
//! reflection factors of the handle shift, handle shifts) exactly on the
//! truncated lattice and on the ends, and replays bundled derivation scripts
//! step by step: every conjugation's curve images, every product identity,
//! the embedded lantern relation, the involution generating sets, and the
//! symmetric group closure on ends.
//!
//! Start with [`atlas::default_atlas`] for the bundled model, [`word`] for
//! the word grammar, [`engine`] for evaluation, and [`script::run_script`]
//! with [`builtin::builtin_script`] for replaying a derivation. The
//! `examples/` directory has one runnable example per capability.

pub mod atlas;
pub mod builtin;
pub mod cli;
pub mod ends;
pub mod engine;
pub mod error;
pub mod lattice;
pub mod script;
pub mod surface;
pub mod word;

pub use atlas::{build_atlas, default_atlas, default_atlas_file, AtlasFile, CurveAtlas};
pub use engine::{evaluate, evaluate_curve, generator_matrix, word_matrix};
pub use ends::{perm_of, subgroup_closure, EndPermutation};
pub use error::{AtlasError, EngineError, ScriptError, WordError};
pub use lattice::{ActionMatrix, HomologyClass};
pub use script::{run_script, ScriptFile, VerificationReport};
pub use surface::{CurveName, Family, SurfaceConfig};
pub use word::{parse_word, MappingWord};
