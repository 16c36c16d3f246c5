//! Hydrogen radial states, their overlaps, and the truncated integral that
//! parametrizes the deformed family.

use isospec::oracle::{integrate_to_infinity, Tolerance};
use isospec::special::{critical_gamma, hydrogen_radial, truncated_integral, QuantumNumbers};
use std::f64::consts::PI;

fn main() -> isospec::Result<()> {
    let states: Vec<QuantumNumbers> = (2..=4)
        .map(|n| QuantumNumbers::new(n, 1))
        .collect::<isospec::Result<_>>()?;

    println!("overlaps (R_n1, R_m1) with the 4π r² measure:");
    for a in &states {
        let row = states
            .iter()
            .map(|b| {
                let v = integrate_to_infinity(
                    |r| {
                        4.0 * PI
                            * r
                            * r
                            * hydrogen_radial(*a, r).unwrap()
                            * hydrogen_radial(*b, r).unwrap()
                    },
                    0.0,
                    10.0,
                    1e-15,
                    Tolerance::default(),
                )?;
                Ok(format!("{v:>10.2e}"))
            })
            .collect::<isospec::Result<Vec<_>>>()?;
        println!("  n={}  {}", a.n(), row.join(" "));
    }

    println!("\ntruncated integral I_l(r) approaching its limit γ_c:");
    for l in 1..=3 {
        let c = critical_gamma(l)?;
        let values: Vec<String> = [1.0, 5.0, 20.0, 60.0]
            .iter()
            .map(|&r| truncated_integral(l, r).map(|i| format!("{:.6}", i / c)))
            .collect::<isospec::Result<_>>()?;
        println!(
            "  l={l}  γ_c={c:<10}  I/γ_c at r=1,5,20,60: {}",
            values.join(", ")
        );
    }
    Ok(())
}
