//! Weights of the isotropy spin representation and their decomposition into
//! irreducible modules of the isotropy group.

use outer_dirac::spin_module::{decompose_table, enumerate_spin_weights};
use outer_dirac::symmetric_space::{build_space, SymmetricSpaceSpec};
use outer_dirac::Caps;

fn main() -> outer_dirac::Result<()> {
    for spec in [
        SymmetricSpaceSpec::su_so(4)?,
        SymmetricSpaceSpec::e6_f4(),
        SymmetricSpaceSpec::e6_sp4(),
    ] {
        let space = build_space(&spec, &Caps::default())?;
        let table = enumerate_spin_weights(&space)?;
        let shw = decompose_table(&space, &table)?;
        println!(
            "{}: spinor dim {}, {} dominant table entries",
            spec.title(),
            table.spinor_dim(),
            table.entries().len()
        );
        for e in &shw.entries {
            println!(
                "  labels {:?}  {}  mult {}  dim {}",
                e.labels, e.weight, e.multiplicity, e.dim
            );
        }
        println!("  Σ mult × dim = {}", shw.total_dim());
    }
    Ok(())
}
