//! Summands of V(μ) ⊗ V(kε₁) and the dimension count behind them.

use projrep::gl_modules::{pieri_index_set, weight_from_labels, weyl_dimension, DominantLabels};
use projrep::linalg::int;

fn main() -> projrep::Result<()> {
    let mu = weight_from_labels(&DominantLabels::new(vec![2, 1], int(0)));
    let base = weyl_dimension(&mu)?;
    println!("mu = {mu}, dim {base}");
    for k in 0..=3 {
        let set = pieri_index_set(&mu, k)?;
        let mut total = 0;
        for c in &set.entries {
            let d = weyl_dimension(&mu.shifted(c))?;
            total += d;
            println!("  k={k} c={c:?} weight {} dim {d}", mu.shifted(c));
        }
        println!("k={k}: {} summands, total dimension {total}", set.len());
    }
    Ok(())
}
