//! The full pipeline for one space: fibers, minimizers, certification and λ².

use outer_dirac::dirac_solver::{closed_form_reference, first_eigenvalue};
use outer_dirac::symmetric_space::{build_space, SymmetricSpaceSpec};
use outer_dirac::Caps;

fn main() -> outer_dirac::Result<()> {
    let spec = match std::env::args().nth(1).as_deref() {
        Some("f4") => SymmetricSpaceSpec::e6_f4(),
        Some("so") => SymmetricSpaceSpec::so_grassmann(2, 3)?,
        _ => SymmetricSpaceSpec::e6_sp4(),
    };
    let space = build_space(&spec, &Caps::default())?;
    let r = first_eigenvalue(&space)?;
    println!("{}", spec.title());
    println!("  fibers            {}", r.fibers.len());
    println!("  fiber minimum     {}", r.fiber_minimum);
    for c in &r.minimizers {
        println!("  minimizer         {}  → dominant {}", c.mu, c.mu_dominant);
    }
    println!("  ruled out         {}", r.rejected);
    println!("  witness           {}", r.witness.mu);
    println!("  K-type matched    {}", r.spin_highest_weight);
    println!("  s · Casimir       {}", r.casimir_term);
    println!("  dim 𝔭 / 16        {}", r.scalar_term);
    println!("  λ²                {}", r.lambda_squared);
    println!("  closed form       {}", closed_form_reference(&spec));
    Ok(())
}
