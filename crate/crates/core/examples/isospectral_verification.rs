//! Finite-difference spectra of deformed potentials compared with −1/n².

use isospec::factorization::{FactorizationParams, GammaMode};
use isospec::oracle::{verify_isospectral, RadialGrid};

fn main() -> isospec::Result<()> {
    let grid = RadialGrid::with_step(0.01, 60.0)?;
    let mut family: Vec<FactorizationParams> = [0.3, 1.0, 10.0, -1.0]
        .iter()
        .map(|&g| FactorizationParams::new(1, g))
        .collect::<isospec::Result<_>>()?;
    family.push(FactorizationParams::critical(1)?);

    for p in &family {
        // the critical spectrum starts at n = 2; n = 5 would need r_max > 60
        let k = if p.mode() == GammaMode::Critical {
            3
        } else {
            4
        };
        let report = verify_isospectral(p, &grid, k)?;
        println!("γ = {} ({:?})", p.gamma(), p.mode());
        for j in 0..report.levels.len() {
            println!(
                "  n={}  target {:>10.7}  computed {:>12.9}  residual {:.1e}  order {:.2}",
                report.levels[j],
                report.targets[j],
                report.eigenvalues[j],
                report.residuals[j],
                report.orders[j]
            );
        }
    }
    Ok(())
}
