//! Decide irreducibility by the closed-form criterion and confirm it with
//! graded ranks of the submodule generated by the constants.

use projrep::gl_modules::{build_irreducible, pieri_index_set, DominantLabels};
use projrep::irreducibility::{criterion, q_coefficient, PseudoSubmodule};
use projrep::linalg::{display_rational, int, rat};
use projrep::projective_action::ProjectiveModule;

fn main() -> projrep::Result<()> {
    for (a, b) in [(vec![1], int(1)), (vec![0], rat(1, 2)), (vec![1, 0], int(-1))] {
        let labels = DominantLabels::new(a, b);
        let pm = ProjectiveModule::new(build_irreducible(&labels)?);
        let mu = pm.module().highest_weight().clone();
        let witness = criterion(&mu)?;
        println!("{labels}: {:?}, failing pairs {:?}", witness.verdict, witness.failing_pairs);

        let sub = PseudoSubmodule::new(&pm);
        let ranks = sub.ranks(3);
        let full: Vec<usize> = (0..=3).map(|j| sub.full_dim(j)).collect();
        println!("  ranks {ranks:?} of {full:?}");

        for c in pieri_index_set(&mu, 1)?.entries {
            println!("  q{c:?} = {}", display_rational(&q_coefficient(&mu, &c)?));
        }
    }
    Ok(())
}
