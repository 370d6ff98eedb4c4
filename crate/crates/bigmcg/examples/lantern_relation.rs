//! Check the embedded lantern relation as an exact matrix identity, and show
//! how the two interior curve classes arise as images under derived words.
//!
//! ```bash
//! cargo run --example lantern_relation
//! ```

use bigmcg::atlas::default_atlas;
use bigmcg::engine::{evaluate_curve, word_matrix};
use bigmcg::surface::SurfaceConfig;
use bigmcg::word::parse_word;

fn main() {
    let cfg = SurfaceConfig::new(4, 6).unwrap();
    let atlas = default_atlas(&cfg).unwrap();

    let left = parse_word("A[2,1]*C[2,1]*C[2,2]*A[2,3]").unwrap();
    let right = parse_word("A[2,2]*D[1]*D[2]").unwrap();
    let lhs = word_matrix(&left, &atlas).unwrap();
    let rhs = word_matrix(&right, &atlas).unwrap();
    println!(
        "A[2,1]*C[2,1]*C[2,2]*A[2,3] == A[2,2]*D[1]*D[2] exactly: {}",
        lhs == rhs
    );

    // The interior classes are not free data: they are forced as images of
    // b-curves under earlier derived elements, which is how the atlas data
    // gets cross-validated.
    let w1 = parse_word(
        "B[2,2]*inv(A[2,1])*C[2,1]*inv(A[2,1])*A[2,1]*inv(A[2,2])*C[2,2]*inv(A[2,1])",
    )
    .unwrap();
    let image = evaluate_curve(&w1, &"b[2,2]".parse().unwrap(), &atlas).unwrap();
    let d1 = atlas.class(&"d[1]".parse().unwrap()).unwrap();
    println!(
        "image of b[2,2]: {}  vs  [d[1]] = {}  (equal up to sign: {})",
        image.display(&cfg),
        d1.display(&cfg),
        image.eq_up_to_sign(d1)
    );
}
