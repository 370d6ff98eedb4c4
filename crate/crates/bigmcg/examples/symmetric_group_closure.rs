//! Project generating sets to the symmetric group on ends and close them up
//! by brute force.
//!
//! ```bash
//! cargo run --example symmetric_group_closure
//! ```

use bigmcg::ends::{factorial, perm_of, subgroup_closure};
use bigmcg::surface::SurfaceConfig;
use bigmcg::word::parse_word;

fn main() {
    for n in 3..=8 {
        let cfg = SurfaceConfig::new(n, 6).unwrap();
        let r = perm_of(&parse_word("R").unwrap(), &cfg);
        let t = perm_of(&parse_word("tau1").unwrap(), &cfg);
        println!("n = {n}: images {r} and {t}");
        let closure = subgroup_closure(&[r, t], n).unwrap();
        println!(
            "  closure order {} (n! = {}), full symmetric group: {}",
            closure.order(),
            factorial(n),
            closure.is_full_symmetric()
        );
    }

    // A proper subgroup for contrast: two disjoint transpositions.
    let cfg = SurfaceConfig::new(4, 6).unwrap();
    let t = perm_of(&parse_word("tau1").unwrap(), &cfg);
    let closure = subgroup_closure(&[t], 4).unwrap();
    println!(
        "one transposition alone closes to order {} of {}",
        closure.order(),
        factorial(4)
    );
}
