//! Write the atlas and every applicable derivation script to a directory as
//! JSON, the same files the `init` subcommand produces, then read one back
//! and replay it.
//!
//! ```bash
//! cargo run --example export_model
//! ```

use bigmcg::atlas::{build_atlas, default_atlas_file, AtlasFile};
use bigmcg::builtin::applicable_scripts;
use bigmcg::script::{run_script, ScriptFile};
use bigmcg::surface::SurfaceConfig;

fn main() -> std::io::Result<()> {
    let cfg = SurfaceConfig::new(6, 6).unwrap();
    let dir = std::env::temp_dir().join("bigmcg-model-n6");
    std::fs::create_dir_all(&dir)?;

    let atlas_file = default_atlas_file(&cfg);
    let atlas_path = dir.join("atlas-n6-g6.json");
    std::fs::write(&atlas_path, atlas_file.to_json())?;
    println!("wrote {}", atlas_path.display());

    for script in applicable_scripts(&cfg) {
        let path = dir.join(format!("{}-n6.json", script.id));
        std::fs::write(&path, script.to_json())?;
        println!("wrote {}", path.display());
    }

    // Round trip: load the files back and replay one derivation.
    let atlas = build_atlas(&AtlasFile::from_json(&std::fs::read_to_string(&atlas_path)?).unwrap())
        .expect("exported atlas validates");
    let script_text = std::fs::read_to_string(dir.join("lem5-n6.json"))?;
    let script = ScriptFile::from_json(&script_text).unwrap();
    let report = run_script(&script, &atlas).unwrap();
    println!(
        "replayed {} from disk: {}",
        script.id,
        if report.passed { "PASS" } else { "FAIL" }
    );
    Ok(())
}
