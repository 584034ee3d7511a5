//! The characteristic identities of σ̃₂, M and M̃, and the projectors onto
//! the summands of V(ε₁) ⊗ V.

use projrep::char_identity::{
    adjoint_matrices, check_characteristic_identity, predicted_adjoint_roots,
    predicted_sigma2_roots, sigma2_tilde, tensor_projector,
};
use projrep::gl_modules::{build_irreducible, DominantLabels};
use projrep::linalg::{display_rational, rank, rat};

fn main() -> projrep::Result<()> {
    let v = build_irreducible(&DominantLabels::new(vec![1, 0], rat(-3, 2)))?;
    let mu = v.highest_weight();

    let roots = predicted_sigma2_roots(mu);
    let report = check_characteristic_identity(&sigma2_tilde(&v), &roots)?;
    println!("sigma2: residual zero = {}", report.residual_zero);
    for (r, m) in roots.iter().zip(&report.multiplicities) {
        println!("  root {} realized with multiplicity {m}", display_rational(r));
    }

    let (m, _) = adjoint_matrices(&v);
    let adj = check_characteristic_identity(&m, &predicted_adjoint_roots(mu))?;
    println!("M: residual zero = {}", adj.residual_zero);

    for r in 1..=3 {
        let p = tensor_projector(&v, r, false)?;
        println!("projector onto mu + e{r}: rank {}", rank(&p));
    }
    Ok(())
}
