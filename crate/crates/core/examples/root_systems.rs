//! Builds a few root systems from their Cartan types and prints Weyl data and a
//! Freudenthal character.

use outer_dirac::lie_core::{CartanType, RootSystem};
use outer_dirac::Caps;

fn main() -> outer_dirac::Result<()> {
    for name in ["A3", "B2×B3", "C4", "F4", "E6"] {
        let t: CartanType = name.parse()?;
        let rs = RootSystem::of_type(&t, &Caps::default())?;
        println!(
            "{name:<6} rank {}  |Φ⁺| = {:<3} |W| = {:<6} ‖δ‖² = {}",
            rs.rank(),
            rs.positive_roots().len(),
            rs.weyl_group_order(),
            rs.norm2(rs.weyl_vector())?
        );
    }
    let rs = RootSystem::of_type(&"A2".parse()?, &Caps::default())?;
    let adjoint = rs.weight_from_labels(&[1, 1]);
    println!("\nA2 adjoint module, dim {}", rs.weyl_dim(&adjoint)?);
    for (w, m) in rs.freudenthal_multiplicities(&adjoint)? {
        println!("  {w}  ×{m}");
    }
    Ok(())
}
