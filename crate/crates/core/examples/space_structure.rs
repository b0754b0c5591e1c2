//! Involution, root partition and isotropy type of each family, with the structural checks.

use outer_dirac::symmetric_space::{build_space, verify_root_partition, SymmetricSpaceSpec};
use outer_dirac::Caps;

fn main() -> outer_dirac::Result<()> {
    let specs = [
        SymmetricSpaceSpec::su_so(3)?,
        SymmetricSpaceSpec::su_sp(3)?,
        SymmetricSpaceSpec::so_grassmann(1, 2)?,
        SymmetricSpaceSpec::e6_f4(),
        SymmetricSpaceSpec::e6_sp4(),
    ];
    for spec in specs {
        let space = build_space(&spec, &Caps::default())?;
        let part = space.partition();
        let report = verify_root_partition(&space);
        println!(
            "{:<24} K = {:<6} |Φ1⁺| = {:<3} |Φ2⁺| = {:<3} |Φ3′⁺| = {:<3} checks {}/{}",
            spec.title(),
            space.k_type().to_string(),
            part.phi1_plus.len(),
            part.phi2_plus.len(),
            part.phi3_prime_plus.len(),
            report.checks.iter().filter(|c| c.passed).count(),
            report.checks.len()
        );
    }
    Ok(())
}
