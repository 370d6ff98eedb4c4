//! Replay a bundled derivation script step by step and print the report.
//!
//! ```bash
//! cargo run --example replay_derivation            # lem33 at n = 5
//! cargo run --example replay_derivation lem4 7     # pick script and n
//! ```

use bigmcg::atlas::default_atlas;
use bigmcg::builtin::builtin_script;
use bigmcg::script::run_script;
use bigmcg::surface::SurfaceConfig;

fn main() {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "lem33".into());
    let n: u32 = args.next().map(|s| s.parse().expect("numeric n")).unwrap_or(5);

    let cfg = SurfaceConfig::new(n, SurfaceConfig::DEFAULT_DEPTH).expect("valid n");
    let atlas = default_atlas(&cfg).expect("atlas validates");
    let script = builtin_script(&id, &cfg).expect("known script id");
    match run_script(&script, &atlas) {
        Ok(report) => print!("{}", report.render_text()),
        Err(e) => eprintln!("cannot replay: {e}"),
    }
}
