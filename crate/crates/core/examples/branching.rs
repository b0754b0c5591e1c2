//! Multiplicities of isotropy modules inside the restriction of a module of `G`.

use num_traits::Signed;
use outer_dirac::dirac_solver::{first_eigenvalue_with, Branching};
use outer_dirac::spin_module::decompose_spin;
use outer_dirac::symmetric_space::{build_space, SymmetricSpaceSpec};
use outer_dirac::Caps;

fn main() -> outer_dirac::Result<()> {
    let space = build_space(&SymmetricSpaceSpec::e6_f4(), &Caps::default())?;
    let w1 = space.g().fundamental_weights()[0].clone();
    let br = Branching::new(&space, &w1)?;
    println!("E6 ω1 (dim {}) restricted to F4:", space.g().weyl_dim(&w1)?);
    for labels in [[0, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0]] {
        let lambda = space.k().weight_from_labels(&labels);
        println!(
            "  {labels:?} (dim {}): {}",
            space.k().weyl_dim(&lambda)?,
            br.multiplicity(&lambda)?
        );
    }

    let space = build_space(&SymmetricSpaceSpec::so_grassmann(2, 3)?, &Caps::default())?;
    let shw = decompose_spin(&space)?;
    let witness = first_eigenvalue_with(&space, &shw)?.witness;
    let br = Branching::new(&space, &witness.mu)?;
    println!("\n{} witness {}", space.spec().title(), witness.mu);
    println!(
        "  restriction {} is a spin highest weight: {}",
        witness.restriction,
        shw.contains(&witness.restriction)
    );
    for w in shw.weights() {
        let n = br.multiplicity(w)?;
        if n.is_positive() {
            println!("  spin highest weight {w}: multiplicity {n}");
        }
    }
    Ok(())
}
