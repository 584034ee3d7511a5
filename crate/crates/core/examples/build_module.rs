//! Build an irreducible gl(3)-module from Dynkin labels and a central charge,
//! inspect its weights and dump it as JSON.

use projrep::gl_modules::{build_irreducible, check_representation, weyl_dimension, DominantLabels};
use projrep::linalg::rat;
use projrep::Representation;

fn main() -> projrep::Result<()> {
    let labels = DominantLabels::new(vec![1, 1], rat(1, 2));
    let v = build_irreducible(&labels)?;
    println!("{labels}");
    println!("highest weight {}", v.highest_weight());
    println!("dimension {} (Weyl formula {})", v.dim(), weyl_dimension(v.highest_weight())?);
    for (idx, w) in v.basis_weights().iter().enumerate().take(5) {
        println!("  v{idx}: weight {w}");
    }
    check_representation(&v, Some(v.central()))?;
    println!("commutation relations hold");

    let json = v.to_json();
    println!("JSON document: {} bytes", json.len());
    Ok(())
}
