//! Approach to the critical parameter: the potential converges to a closed
//! form and the lowest level disappears from the spectrum.

use isospec::factorization::{
    critical_potential_l1, potential_tilde, FactorizationParams, PotentialSpec,
};
use isospec::oracle::{discretize, RadialGrid};

fn main() -> isospec::Result<()> {
    let grid = RadialGrid::with_step(0.01, 60.0)?;
    println!(
        "{:>10} {:>14} {:>12} {:>12}",
        "γ", "Ṽ(1) + 0.72", "E_1", "E_2"
    );
    for g in [1.0, 0.3, 0.26, 0.251, 0.2501] {
        let p = FactorizationParams::new(1, g)?;
        let e = discretize(&PotentialSpec::deformed(p.clone())?, grid)?.lowest_eigenvalues(2)?;
        println!(
            "{g:>10} {:>14.3e} {:>12.6} {:>12.6}",
            potential_tilde(&p, 1.0)? + 0.72,
            e[0],
            e[1]
        );
    }
    let p = FactorizationParams::critical(1)?;
    let e = discretize(&PotentialSpec::deformed(p.clone())?, grid)?.lowest_eigenvalues(2)?;
    println!(
        "{:>10} {:>14.3e} {:>12.6} {:>12.6}",
        "critical",
        potential_tilde(&p, 1.0)? + 0.72,
        e[0],
        e[1]
    );
    println!("closed form at r = 1: {}", critical_potential_l1(1.0)?);
    Ok(())
}
