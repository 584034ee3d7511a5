use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl_modules::Weight;
use crate::linalg::{int, is_nonpositive_integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Irreducible,
    Reducible,
}

/// A pair `(i, s)`, 1-based `i`, with `μ_i + |μ| − i + s = 0` and `i ∈ I_s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FailingPair {
    pub i: usize,
    pub s: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionWitness {
    pub verdict: Verdict,
    /// Sorted by `s`, then `i`.
    pub failing_pairs: Vec<FailingPair>,
    pub first_failure_degree: Option<u64>,
}

/// Consecutive gaps `μ_i − μ_{i+1}` of a weight with dominant sl-part.
pub(crate) fn gaps(mu: &Weight) -> Result<Vec<u32>> {
    mu.dynkin_labels()
        .ok_or_else(|| Error::NonDominant(mu.to_string()))
}

/// `I_s = {1} ∪ {j ≥ 2 : μ_{j−1} − μ_j ≥ s}`, 1-based.
pub fn eligible_indices(mu: &Weight, s: u64) -> Result<Vec<usize>> {
    let g = gaps(mu)?;
    let mut out = vec![1];
    out.extend(
        g.iter()
            .enumerate()
            .filter(|(_, &gap)| u64::from(gap) >= s)
            .map(|(j, _)| j + 2),
    );
    Ok(out)
}

/// `μ_i + |μ| − i + s` for 1-based `i`.
pub fn criterion_value(mu: &Weight, i: usize, s: u64) -> Rational {
    mu.get(i - 1) + mu.total() - int(i as i64) + int(s as i64)
}

/// All failing pairs. For `i = 1` the only candidate is
/// `s = 1 − μ_1 − |μ|`; for `i ≥ 2`, `s` ranges over `1..=μ_{i−1} − μ_i`.
pub fn criterion(mu: &Weight) -> Result<CriterionWitness> {
    let g = gaps(mu)?;
    let total = mu.total();
    let mut pairs = Vec::new();
    let first = mu.get(0) + &total;
    if is_nonpositive_integer(&first) {
        let s = int(1) - &first;
        let s = u64::try_from(s.to_integer())
            .map_err(|_| Error::ConsistencyViolation("failing degree out of range".into()))?;
        pairs.push(FailingPair { i: 1, s });
    }
    for (idx, &gap) in g.iter().enumerate() {
        let i = idx + 2;
        for s in 1..=u64::from(gap) {
            if criterion_value(mu, i, s) == int(0) {
                pairs.push(FailingPair { i, s });
            }
        }
    }
    pairs.sort_by_key(|p| (p.s, p.i));
    let first_failure_degree = pairs.first().map(|p| p.s);
    Ok(CriterionWitness {
        verdict: if pairs.is_empty() {
            Verdict::Irreducible
        } else {
            Verdict::Reducible
        },
        failing_pairs: pairs,
        first_failure_degree,
    })
}

/// Irreducibility read off the two conditions on `μ_1 + |μ|` and on
/// `μ_i + |μ| − i` for `2 ≤ i ≤ n − 1`:
///
/// * `μ_1 + |μ| ∉ −ℕ ∪ {2, …, 1 + μ_1 − μ_2}`
/// * `μ_i + |μ| − i ∉ {1, …, μ_i − μ_{i+1}}`
pub fn main_theorem_verdict(mu: &Weight) -> Result<Verdict> {
    let g = gaps(mu)?;
    let n = mu.n();
    let total = mu.total();
    let in_range = |x: &Rational, lo: i64, hi: i64| {
        x.is_integer() && *x >= int(lo) && *x <= int(hi)
    };
    let first = mu.get(0) + &total;
    let mut fails = is_nonpositive_integer(&first);
    if n >= 2 {
        fails |= in_range(&first, 2, 1 + i64::from(g[0]));
    }
    for i in 2..n {
        let x = mu.get(i - 1) + &total - int(i as i64);
        fails |= in_range(&x, 1, i64::from(g[i - 1]));
    }
    Ok(if fails {
        Verdict::Reducible
    } else {
        Verdict::Irreducible
    })
}

/// Whether the two formulations give the same verdict.
pub fn criterion_equivalence_check(mu: &Weight) -> Result<bool> {
    Ok(criterion(mu)?.verdict == main_theorem_verdict(mu)?)
}

/// `i₀ = min{i : μ_i + |μ| − i + 1 ∈ −ℕ}` (1-based) and
/// `k = −μ_{i₀} − |μ| + i₀ − 1`.
pub fn corollary_threshold(mu: &Weight) -> Option<(usize, u64)> {
    (1..=mu.n()).find_map(|i| {
        let x = criterion_value(mu, i, 1);
        if is_nonpositive_integer(&x) {
            Some((i, u64::try_from((-x).to_integer()).ok()?))
        } else {
            None
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_modules::{weight_from_labels, DominantLabels};
    use crate::linalg::rat;

    fn mu(a: &[u32], b: Rational) -> Weight {
        weight_from_labels(&DominantLabels::new(a.to_vec(), b))
    }

    #[test]
    fn trivial_module_fails_at_degree_one() {
        let w = criterion(&mu(&[0], int(0))).unwrap();
        assert_eq!(w.verdict, Verdict::Reducible);
        assert_eq!(w.failing_pairs, vec![FailingPair { i: 1, s: 1 }]);
        assert_eq!(w.first_failure_degree, Some(1));
    }

    #[test]
    fn half_central_is_irreducible() {
        let w = criterion(&mu(&[0], rat(1, 2))).unwrap();
        assert_eq!(w.verdict, Verdict::Irreducible);
        assert!(w.failing_pairs.is_empty());
        assert_eq!(w.first_failure_degree, None);
    }

    #[test]
    fn vector_representation_fails_in_second_index() {
        let w = criterion(&mu(&[1], int(1))).unwrap();
        assert_eq!(w.failing_pairs, vec![FailingPair { i: 2, s: 1 }]);
        for p in &w.failing_pairs {
            assert!(eligible_indices(&mu(&[1], int(1)), p.s).unwrap().contains(&p.i));
        }
    }

    #[test]
    fn formulations_agree() {
        for b in -3..=3 {
            for a in [vec![], vec![0], vec![0, 0], vec![0, 0, 0]] {
                assert!(criterion_equivalence_check(&mu(&a, int(b))).unwrap());
            }
        }
        for a1 in 0..=1 {
            for a2 in 0..=1 {
                for b in [int(-2), int(-1), int(0), int(1), int(2), rat(1, 2)] {
                    assert!(criterion_equivalence_check(&mu(&[a1, a2], b)).unwrap());
                }
            }
        }
        assert!(criterion_equivalence_check(&mu(&[2], int(-1))).unwrap());
    }

    #[test]
    fn corollary_threshold_examples() {
        assert_eq!(corollary_threshold(&mu(&[0], int(0))), Some((1, 0)));
        assert_eq!(corollary_threshold(&mu(&[1], int(1))), Some((2, 0)));
        assert_eq!(corollary_threshold(&mu(&[0], int(-2))), Some((1, 3)));
        assert_eq!(corollary_threshold(&mu(&[0], int(-1))), None);
    }
}
