//! Parse words in the bracket grammar and evaluate them on homology classes
//! and on the ends.
//!
//! ```bash
//! cargo run --example evaluate_words
//! ```

use bigmcg::atlas::default_atlas;
use bigmcg::ends::perm_of;
use bigmcg::engine::evaluate_curve;
use bigmcg::surface::SurfaceConfig;
use bigmcg::word::parse_word;

fn main() {
    let cfg = SurfaceConfig::new(7, 6).unwrap();
    let atlas = default_atlas(&cfg).unwrap();

    let samples = [
        ("A[1,1]", "b[1,1]"),
        ("h[1]", "c0[1]"),
        ("h[1]", "b[1,1]"),
        ("R", "c0[1]"),
        ("rho3", "a[1,1]"),
        ("conj(A[1,1], rho1)", "b[1,1]"),
        ("A[2,1]*inv(A[2,2])*B[2,1]*inv(B[2,2])", "a[2,1]"),
    ];
    for (word_text, curve) in samples {
        let word = parse_word(word_text).unwrap();
        let image = evaluate_curve(&word, &curve.parse().unwrap(), &atlas).unwrap();
        println!("{word_text} sends [{curve}] to {}", image.display(&cfg));
    }

    for word_text in ["R", "tau1", "h[1]", "rho1", "rho3"] {
        let word = parse_word(word_text).unwrap();
        println!("{word_text} acts on ends as {}", perm_of(&word, &cfg));
    }

    // Words stay symbolic until evaluated, so composing and reducing is free.
    let w = parse_word("A[1,1]*h[1]*inv(h[1])*inv(A[1,1])*rho2").unwrap();
    println!("`{w}` reduces to `{}`", w.free_reduce());
}
