//! The extra bound state at E = −1/l² and the transformed hydrogen states.

use isospec::factorization::operators::Ladder;
use isospec::factorization::{transformed_state, FactorizationParams, MissingState};
use isospec::oracle::{integrate_to_infinity, Tolerance};
use isospec::special::QuantumNumbers;
use std::f64::consts::PI;

fn inner(f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64) -> isospec::Result<f64> {
    integrate_to_infinity(
        |r| {
            if r == 0.0 {
                0.0
            } else {
                4.0 * PI * r * r * f(r) * g(r)
            }
        },
        0.0,
        8.0,
        1e-15,
        Tolerance::default(),
    )
}

fn main() -> isospec::Result<()> {
    for g in [0.3, 1.0, -1.0] {
        let p = FactorizationParams::new(1, g)?;
        let m = MissingState::new(&p)?;
        let ladder = Ladder::new(&p);
        let jet = m.jet(1.5)?;
        println!("γ = {g}: c = {:.6}, E = {}", m.coefficient(), m.energy());
        println!(
            "  at r = 1.5: R = {:.6}, A⁺R = {:.1e}, H̃R - E R = {:.1e}",
            jet.value,
            ladder.raise(&jet)?,
            ladder.partner_hamiltonian(&jet)? - m.energy() * jet.value
        );
        let norm = inner(|r| m.value(r).unwrap(), |r| m.value(r).unwrap())?;
        print!("  norm {norm:.12}, overlaps with n=2..5:");
        for n in 2..=5 {
            let s = QuantumNumbers::new(n, 1)?;
            let o = inner(
                |r| m.value(r).unwrap(),
                |r| transformed_state(&p, s, r).unwrap(),
            )?;
            print!(" {o:.1e}");
        }
        println!();
    }
    let critical = FactorizationParams::critical(1)?;
    let m = MissingState::new(&critical)?;
    println!(
        "critical γ: normalizable = {}, R(20) = {:.3e} (grows like e^r / r²)",
        m.is_normalizable(),
        m.value(20.0)?
    );
    Ok(())
}
