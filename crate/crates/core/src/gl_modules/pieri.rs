use serde::{Deserialize, Serialize};

use super::weight::Weight;
use crate::error::{Error, Result};

/// Exponent vectors `c` labelling the summands `V(μ + c)` of `V(μ) ⊗ V(jε₁)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriIndexSet {
    pub degree: u32,
    /// Descending lexicographic order.
    pub entries: Vec<Vec<u32>>,
}

impl PieriIndexSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, c: &[u32]) -> bool {
        self.entries.iter().any(|e| e == c)
    }
}

/// All `c ∈ ℕⁿ` with `|c| = j` and `c_{s+1} ≤ μ_s − μ_{s+1}`.
pub fn pieri_index_set(mu: &Weight, j: u32) -> Result<PieriIndexSet> {
    let gaps = mu
        .dynkin_labels()
        .ok_or_else(|| Error::NonDominant(mu.to_string()))?;
    let n = mu.n();
    let mut entries = Vec::new();
    let mut current = vec![0u32; n];
    fill(&gaps, 0, j, &mut current, &mut entries);
    Ok(PieriIndexSet { degree: j, entries })
}

fn fill(gaps: &[u32], pos: usize, remaining: u32, current: &mut [u32], out: &mut Vec<Vec<u32>>) {
    let n = current.len();
    if pos == n - 1 {
        let bound = if pos == 0 { u32::MAX } else { gaps[pos - 1] };
        if remaining <= bound {
            current[pos] = remaining;
            out.push(current.to_vec());
        }
        return;
    }
    let bound = if pos == 0 { remaining } else { gaps[pos - 1].min(remaining) };
    for value in (0..=bound).rev() {
        current[pos] = value;
        fill(gaps, pos + 1, remaining - value, current, out);
    }
    current[pos] = 0;
}

/// Whether `c` belongs to the Pieri index set of `μ` (at degree `|c|`).
pub fn in_pieri_set(mu: &Weight, c: &[u32]) -> Result<bool> {
    let gaps = mu
        .dynkin_labels()
        .ok_or_else(|| Error::NonDominant(mu.to_string()))?;
    if c.len() != mu.n() {
        return Err(Error::DimensionMismatch(format!(
            "exponent vector of length {} for n = {}",
            c.len(),
            mu.n()
        )));
    }
    Ok(c.iter().skip(1).zip(&gaps).all(|(x, g)| x <= g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_is_the_origin() {
        let s = pieri_index_set(&Weight::from_i64(&[3, 1, 0]), 0).unwrap();
        assert_eq!(s.entries, vec![vec![0, 0, 0]]);
    }

    #[test]
    fn small_cases() {
        let s = pieri_index_set(&Weight::from_i64(&[1, 0]), 1).unwrap();
        assert_eq!(s.entries, vec![vec![1, 0], vec![0, 1]]);
        let s = pieri_index_set(&Weight::from_i64(&[1, 1, 1]), 2).unwrap();
        assert_eq!(s.entries, vec![vec![2, 0, 0]]);
        let s = pieri_index_set(&Weight::from_i64(&[5]), 3).unwrap();
        assert_eq!(s.entries, vec![vec![3]]);
        let s = pieri_index_set(&Weight::from_i64(&[2, 1, 0]), 2).unwrap();
        assert_eq!(
            s.entries,
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]
        );
    }

    #[test]
    fn membership() {
        let mu = Weight::from_i64(&[1, 0]);
        assert!(in_pieri_set(&mu, &[0, 1]).unwrap());
        assert!(!in_pieri_set(&mu, &[0, 2]).unwrap());
    }
}
