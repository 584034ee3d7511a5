//! Composition series of a reducible module, with the finite-dimensional
//! submodule identified by its sl(n+1) labels.

use projrep::gl_modules::{build_irreducible, DominantLabels};
use projrep::irreducibility::jordan_holder;
use projrep::linalg::int;
use projrep::projective_action::ProjectiveModule;

fn main() -> projrep::Result<()> {
    for (a, b) in [(vec![0], int(-2)), (vec![1], int(1)), (vec![1], int(-1)), (vec![0, 0], int(-3))] {
        let labels = DominantLabels::new(a, b);
        let pm = ProjectiveModule::new(build_irreducible(&labels)?);
        let report = jordan_holder(&pm, 4)?;
        println!("{labels}");
        print!("{report}");
        println!();
    }
    Ok(())
}
