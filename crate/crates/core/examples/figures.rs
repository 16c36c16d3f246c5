//! Writes the figure data set (two CSV files and a manifest) to a directory,
//! `figures/` by default.

use std::path::PathBuf;

use isospec::io::cmd_figures;

fn main() -> isospec::Result<()> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| "figures".into());
    let manifest = cmd_figures(&dir)?;
    for f in &manifest.files {
        println!("{}  {:>8} bytes  sha256 {}", f.name, f.bytes, f.sha256);
    }
    for (column, norm) in &manifest.norms {
        println!("norm of {column}: {norm:.12}");
    }
    Ok(())
}
