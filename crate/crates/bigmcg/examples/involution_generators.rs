//! Check the involution generating sets: every element squares to the
//! identity on the truncated homology lattice and on the ends.
//!
//! ```bash
//! cargo run --example involution_generators
//! ```

use bigmcg::atlas::default_atlas;
use bigmcg::ends::perm_of;
use bigmcg::engine::word_matrix;
use bigmcg::surface::SurfaceConfig;
use bigmcg::word::parse_word;

fn check_set(n: u32, label: &str, words: &[&str]) {
    let cfg = SurfaceConfig::new(n, 6).unwrap();
    let atlas = default_atlas(&cfg).unwrap();
    println!("{label} (n = {n}):");
    for text in words {
        let w = parse_word(text).unwrap();
        let sq = word_matrix(&w.compose(&w), &atlas).unwrap();
        let p = perm_of(&w, &cfg);
        let ok = sq.is_identity_on_domain() && p.compose(&p).is_identity();
        println!(
            "  {} squares to the identity: {ok}   (ends: {p})",
            text
        );
    }
}

fn main() {
    check_set(
        7,
        "five involutions",
        &[
            "rho1",
            "rho2",
            "rho3*A[1,1]*C0[1]*B[3,1]*inv(B[5,1])*inv(C0[6])*inv(A'[7,1])",
            "tau1",
            "tau2",
        ],
    );
    check_set(
        6,
        "five involutions",
        &[
            "rho1",
            "rho2",
            "rho2*A[1,1]*C0[1]*B[3,1]*inv(B[4,1])*inv(C0[5])*inv(A'[6,1])",
            "tau1",
            "tau2",
        ],
    );
    check_set(
        3,
        "six involutions",
        &[
            "rho1",
            "rho2",
            "rho4*B[1,1]*C0[1]*inv(C0[2])*inv(B[3,1])",
            "rho5*A[1,1]*inv(A'[2,1])",
            "tau1",
            "tau2",
        ],
    );
}
