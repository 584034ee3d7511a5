use num_traits::{One, Zero};

use super::submodule::PseudoSubmodule;
use crate::error::{Error, Result};
use crate::gl_modules::{
    highest_weight_vectors, in_pieri_set, pieri_index_set, PieriIndexSet, Representation, Weight,
};
use crate::linalg::{int, Matrix, Rational};
use crate::projective_action::SpanningOp;

fn exponent_string(c: &[u32]) -> String {
    let parts: Vec<String> = c.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

/// `q_c = ∏_s ∏_{i=1}^{c_s} (μ_s + |μ| − s + i)` with 1-based `s`.
pub fn q_coefficient(mu: &Weight, c: &[u32]) -> Result<Rational> {
    if !in_pieri_set(mu, c)? {
        return Err(Error::NotInPieriSet(exponent_string(c)));
    }
    let total = mu.total();
    let mut q = Rational::one();
    for (s, &cs) in c.iter().enumerate() {
        let base = mu.get(s) + &total - int(s as i64 + 1);
        for i in 1..=cs {
            q *= &base + int(i64::from(i));
        }
    }
    Ok(q)
}

/// The same scalar read off the action: the maximal vector `ξ` of weight
/// `μ + c` in degree `|c|` (normalized so that `x^c ⊗ v_μ` has coefficient
/// 1) is sent by `x^l ⊗ v ↦ p^l (1 ⊗ v)` to `q·ξ`.
pub fn q_coefficient_bruteforce(sub: &PseudoSubmodule<'_>, c: &[u32]) -> Result<Rational> {
    let pm = sub.projective_module();
    let v = pm.module();
    let mu = v.highest_weight();
    if !in_pieri_set(mu, c)? {
        return Err(Error::NotInPieriSet(exponent_string(c)));
    }
    let n = pm.n();
    let d = pm.dim_v();
    let j: u32 = c.iter().sum();
    let monomials = pm.monomials(j);
    let target = mu.shifted(c);

    let weights: Vec<Rational> = monomials
        .exponents
        .iter()
        .flat_map(|l| {
            let target = &target;
            v.basis_weights()
                .iter()
                .map(move |nu| int(i64::from(nu.shifted(l) == *target)))
        })
        .collect();
    let projector = Matrix::diagonal(&weights);
    let raising: Vec<Matrix> = (0..n.saturating_sub(1))
        .map(|i| pm.spanning_matrix(SpanningOp::XD(i, i + 1), j).as_ref().clone())
        .collect();
    let maximal = highest_weight_vectors(projector.rows(), &raising, &projector)?;
    if maximal.len() != 1 {
        return Err(Error::MultiplicityAnomaly {
            weight: target.to_string(),
            found: maximal.len(),
        });
    }
    let lead_pos = monomials.position(c).expect("exponent of the right degree") * d
        + v.highest_index();
    let lead = maximal[0][lead_pos].clone();
    if lead.is_zero() {
        return Err(Error::ConsistencyViolation(format!(
            "maximal vector of weight {target} has no x^c ⊗ v_μ component"
        )));
    }
    let xi: Vec<Rational> = maximal[0].iter().map(|x| x / &lead).collect();
    let image = sub.generator_matrix(j).mul_vec(&xi);
    let q = image[lead_pos].clone();
    if image.iter().zip(&xi).any(|(y, x)| *y != &q * x) {
        return Err(Error::ConsistencyViolation(format!(
            "image of the maximal vector of weight {target} is not proportional to it"
        )));
    }
    Ok(q)
}

/// `{c ∈ I(μ, j) : q_c = 0}`.
pub fn residual_summands(mu: &Weight, j: u32) -> Result<PieriIndexSet> {
    let all = pieri_index_set(mu, j)?;
    let mut entries = Vec::new();
    for c in all.entries {
        if q_coefficient(mu, &c)?.is_zero() {
            entries.push(c);
        }
    }
    Ok(PieriIndexSet { degree: j, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_modules::{build_irreducible, DominantLabels};
    use crate::linalg::rat;
    use crate::projective_action::ProjectiveModule;

    fn pm(a: &[u32], b: Rational) -> ProjectiveModule {
        ProjectiveModule::new(build_irreducible(&DominantLabels::new(a.to_vec(), b)).unwrap())
    }

    #[test]
    fn closed_form_examples() {
        let mu = Weight::from_i64(&[1, 0]);
        assert_eq!(q_coefficient(&mu, &[0, 0]).unwrap(), int(1));
        assert_eq!(q_coefficient(&mu, &[0, 1]).unwrap(), int(0));
        assert_eq!(q_coefficient(&mu, &[1, 0]).unwrap(), int(2));
        assert!(matches!(
            q_coefficient(&mu, &[0, 2]),
            Err(Error::NotInPieriSet(_))
        ));
    }

    #[test]
    fn brute_force_examples() {
        let v = pm(&[1], int(1));
        let sub = PseudoSubmodule::new(&v);
        assert_eq!(q_coefficient_bruteforce(&sub, &[0, 0]).unwrap(), int(1));
        assert_eq!(q_coefficient_bruteforce(&sub, &[0, 1]).unwrap(), int(0));
        assert_eq!(q_coefficient_bruteforce(&sub, &[1, 0]).unwrap(), int(2));
        let t = pm(&[0], int(0));
        let sub = PseudoSubmodule::new(&t);
        assert_eq!(q_coefficient_bruteforce(&sub, &[1, 0]).unwrap(), int(0));
    }

    #[test]
    fn brute_force_matches_closed_form_with_fractional_central() {
        let v = pm(&[1, 1], rat(-1, 2));
        let mu = v.module().highest_weight().clone();
        let sub = PseudoSubmodule::new(&v);
        for j in 0..=2 {
            for c in pieri_index_set(&mu, j).unwrap().entries {
                assert_eq!(
                    q_coefficient_bruteforce(&sub, &c).unwrap(),
                    q_coefficient(&mu, &c).unwrap(),
                    "c = {c:?}"
                );
            }
        }
    }

    #[test]
    fn residual_examples() {
        let mu = Weight::from_i64(&[1, 0]);
        assert_eq!(residual_summands(&mu, 1).unwrap().entries, vec![vec![0, 1]]);
        let mu = Weight::from_i64(&[0, 0]);
        assert_eq!(residual_summands(&mu, 1).unwrap().entries, vec![vec![1, 0]]);
        let mu = Weight::new(vec![rat(1, 4), rat(1, 4)]);
        for j in 0..5 {
            assert!(residual_summands(&mu, j).unwrap().is_empty());
        }
    }
}
