//! Rewrites `data/curves` from the registry.

use std::path::Path;

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/curves");
    std::fs::create_dir_all(&dir)?;
    for (name, file) in g3_cli::bundle::bundled_curves().expect("registry curves build") {
        std::fs::write(dir.join(&name), file.to_json() + "\n")?;
        println!("{name}");
    }
    Ok(())
}
