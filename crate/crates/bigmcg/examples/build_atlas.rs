//! Build and validate the bundled curve atlas, then poke at its data.
//!
//! ```bash
//! cargo run --example build_atlas
//! ```

use bigmcg::atlas::default_atlas;
use bigmcg::surface::{CurveName, SurfaceConfig};

fn main() {
    let cfg = SurfaceConfig::new(5, 6).expect("valid configuration");
    let atlas = default_atlas(&cfg).expect("the bundled atlas validates");

    println!(
        "atlas for {} ends, {} handles per arm: {} named curves on a rank-{} lattice",
        cfg.ends,
        cfg.depth,
        atlas.len(),
        cfg.rank()
    );

    for name in ["a[1,1]", "b[1,1]", "c[1,2]", "c0[1]", "c0[5]", "d[1]", "d[2]"] {
        let curve: CurveName = name.parse().unwrap();
        let class = atlas.class(&curve).unwrap();
        println!("  [{name}] = {}", class.display(&cfg));
    }

    let pairs = [
        ("a[1,1]", "b[1,1]"),
        ("a[1,1]", "a[2,1]"),
        ("c[2,1]", "b[2,2]"),
        ("c0[1]", "b[2,1]"),
        ("d[1]", "d[2]"),
    ];
    for (x, y) in pairs {
        let i = atlas
            .intersection(&x.parse().unwrap(), &y.parse().unwrap())
            .unwrap();
        println!("  i({x}, {y}) = {i}");
    }
}
