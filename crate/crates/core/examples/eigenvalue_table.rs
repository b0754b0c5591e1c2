//! Pipeline values against the closed forms over the parametric families, run through
//! the library entry point of the command-line tool.

use outer_dirac::cli::{run_table, Format, Report};
use outer_dirac::symmetric_space::SymmetricSpaceSpec;
use outer_dirac::Caps;

fn main() -> outer_dirac::Result<()> {
    let mut specs = Vec::new();
    for m in 2..=4 {
        specs.push(SymmetricSpaceSpec::su_so(m)?);
        specs.push(SymmetricSpaceSpec::su_sp(m)?);
    }
    for q in 1..=3 {
        for p in 0..=q {
            specs.push(SymmetricSpaceSpec::so_grassmann(p, q)?);
        }
    }
    let table = run_table(&specs, &Caps::default());
    print!("{}", Report::Table(table).render(Format::Text)?);
    Ok(())
}
