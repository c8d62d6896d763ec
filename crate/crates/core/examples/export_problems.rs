//! Writes every preset's problem file (and stabilizer witness, when one
//! is shipped) as JSON into a directory, default `problems/`.
//!
//!     cargo run -p superq-core --example export_problems -- problems

use std::fs;
use std::path::PathBuf;
use superq_core::all_presets;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "problems".into()));
    fs::create_dir_all(&dir)?;
    for p in all_presets() {
        let path = dir.join(format!("{}.json", p.name));
        fs::write(&path, serde_json::to_string_pretty(&p.problem)? + "\n")?;
        println!("wrote {}", path.display());
        if let Some(w) = &p.witness {
            let path = dir.join(format!("{}.witness.json", p.name));
            fs::write(&path, serde_json::to_string_pretty(w)? + "\n")?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
