//! The handle shift is only partially defined on the truncation: it pushes
//! one arm a step deeper, so the deepest handle has no image. This example
//! shows the window bookkeeping and the factorization into two reflections.
//!
//! ```bash
//! cargo run --example handle_shift_window
//! ```

use bigmcg::atlas::default_atlas;
use bigmcg::engine::{evaluate_curve, window_edge_labels, word_matrix};
use bigmcg::error::EngineError;
use bigmcg::lattice::slot_label;
use bigmcg::surface::SurfaceConfig;
use bigmcg::word::parse_word;

fn main() {
    let cfg = SurfaceConfig::new(3, 6).unwrap();
    let atlas = default_atlas(&cfg).unwrap();

    let h = parse_word("h[1]").unwrap();
    let m = word_matrix(&h, &atlas).unwrap();
    let excluded: Vec<String> = m
        .excluded_slots()
        .into_iter()
        .map(|s| slot_label(&cfg, s))
        .collect();
    println!("h[1] is defined outside: {}", excluded.join(", "));

    match evaluate_curve(&h, &"a[2,6]".parse().unwrap(), &atlas) {
        Err(EngineError::OutOfWindow { token_index, token, support }) => println!(
            "evaluating on a[2,6] fails at token {token_index} ({token}); support {support}"
        ),
        other => println!("unexpected: {other:?}"),
    }

    // The product of the two reflections agrees with the shift wherever the
    // shift is defined; the reflections themselves are total involutions.
    let taus = word_matrix(&parse_word("tau1*tau2").unwrap(), &atlas).unwrap();
    let agree = m.domain().all(|v| taus.col(v) == m.col(v));
    println!("tau1*tau2 agrees with h[1] on its whole domain: {agree}");
    println!(
        "truncation-completed reflection slots: {}",
        window_edge_labels(&cfg).join(", ")
    );

    // Deeper words shrink the domain further.
    let twice = parse_word("h[1]^2").unwrap();
    let m2 = word_matrix(&twice, &atlas).unwrap();
    let excluded2: Vec<String> = m2
        .excluded_slots()
        .into_iter()
        .map(|s| slot_label(&cfg, s))
        .collect();
    println!("h[1]^2 is defined outside: {}", excluded2.join(", "));
}
