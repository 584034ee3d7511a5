//! Vector fields acting on polynomial-valued vectors: operator matrices,
//! brackets and the Chevalley relations.

use projrep::gl_modules::{build_irreducible, DominantLabels};
use projrep::linalg::{display_rational, rat};
use projrep::projective_action::{
    bracket_consistency_failures, chevalley_generators, GradedElement, ProjectiveModule,
    WittElement,
};

fn main() -> projrep::Result<()> {
    let v = build_irreducible(&DominantLabels::new(vec![1], rat(1, 2)))?;
    let pm = ProjectiveModule::new(v);

    let p1 = WittElement::pseudo_translation(2, 0);
    let d2 = WittElement::partial(2, 1);
    println!("[{p1}, {d2}] = {}", p1.bracket(&d2));

    let m = pm.operator_matrix(&p1, 1)?;
    println!("p1 on degree 1: {}x{} with {} nonzeros", m.rows(), m.cols(), m.nnz());

    let start = GradedElement::basis(vec![1, 0], 0);
    let image = pm.act(&p1, &start)?;
    for (exp, j, c) in image.terms() {
        println!("  {} x^{exp:?} ⊗ v{j}", display_rational(c));
    }

    let failures = bracket_consistency_failures(&pm, 3)?;
    println!("bracket mismatches through degree 3: {}", failures.len());

    let gens = chevalley_generators(2)?;
    println!("symbolic relation failures: {}", gens.symbolic_failures().len());
    println!("operator relation failures: {}", gens.operator_failures(&pm, 2)?.len());
    Ok(())
}
