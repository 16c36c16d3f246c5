//! Members of the potential family Ṽ_0 next to the Coulomb potential.

use isospec::factorization::{FactorizationParams, PotentialSpec};

fn main() -> isospec::Result<()> {
    let mut specs = vec![PotentialSpec::coulomb(0)];
    for g in [0.251, 0.5, 1.0, 5.0, -1.0] {
        specs.push(PotentialSpec::deformed(FactorizationParams::new(1, g)?)?);
    }
    specs.push(PotentialSpec::deformed(FactorizationParams::critical(1)?)?);

    print!("{:>6}", "r");
    for s in &specs {
        print!(" {:>20}", s.label());
    }
    println!();
    for r in [0.05, 0.2, 0.5, 1.0, 2.0, 4.0, 8.0] {
        print!("{r:>6}");
        for s in &specs {
            print!(" {:>20.6}", s.evaluate(r)?);
        }
        println!();
    }
    Ok(())
}
