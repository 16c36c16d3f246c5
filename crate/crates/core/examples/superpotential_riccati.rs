//! The general superpotential β_l and the Riccati identity it satisfies.

use isospec::factorization::{beta, beta_jet, particular_beta, FactorizationParams};
use isospec::special::critical_gamma;

fn main() -> isospec::Result<()> {
    let l = 2;
    let c = critical_gamma(l)?;
    let lf = f64::from(l);
    println!("l = {l}, critical γ = {c}");
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12}",
        "r", "particular", "γ=-1", "γ=2γ_c", "residual"
    );
    for r in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        let neg = FactorizationParams::new(l, -1.0)?;
        let pos = FactorizationParams::new(l, 2.0 * c)?;
        let [b, db, _] = beta_jet(&pos, r)?;
        let rhs = lf * (lf + 1.0) / (r * r) - 2.0 / r + 1.0 / (lf * lf);
        println!(
            "{r:>8} {:>12.6} {:>12.6} {:>12.6} {:>12.1e}",
            particular_beta(l, r),
            beta(&neg, r)?,
            b,
            -db + b * b - rhs
        );
    }
    Ok(())
}
