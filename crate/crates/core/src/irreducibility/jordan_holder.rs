use serde::{Deserialize, Serialize};

use super::criterion::{corollary_threshold, criterion, Verdict};
use super::qcoeff::residual_summands;
use super::submodule::PseudoSubmodule;
use crate::error::{Error, Result};
use crate::gl_modules::{weyl_dimension, Weight};
use crate::linalg::{int, rank, Matrix};
use crate::projective_action::{ProjectiveModule, SpanningOp};

/// Composition series `{0} ⊂ U(P)(1⊗V) ⊂ 𝒜⊗V` of a reducible module,
/// with every closed-form quantity confirmed against the graded ranks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanHolderReport {
    /// The submodule is everything in degrees `≤ k` and falls short at `k + 1`.
    pub k: u64,
    /// Smallest 1-based `i` with `μ_i + |μ| − i + 1 ∈ −ℕ`.
    pub i0: usize,
    /// Index of the unit vector in the single residual summand `(k+1)ε_r`.
    pub r: usize,
    pub residual_weight: Weight,
    pub submodule_dims_by_degree: Vec<usize>,
    pub full_dims: Vec<usize>,
    pub quotient_description: String,
    /// Whether the submodule is finite dimensional (exactly when `i0 = 1`).
    pub finite_dim_flag: bool,
    /// Dynkin labels `[k, m_1, …, m_{n−1}]` of the finite submodule.
    pub finite_highest_weight: Option<Vec<u32>>,
    pub finite_dimension: Option<u128>,
    /// Degrees checked by brute force.
    pub degree_cap: u32,
    /// Disagreements between the threshold formula and the failing pairs.
    pub findings: Vec<String>,
}

/// Dimension of the sl(n+1)-module with the given Dynkin labels.
pub fn sl_dimension(labels: &[u32]) -> Result<u128> {
    let mut coords = Vec::with_capacity(labels.len() + 1);
    let mut tail = 0i64;
    coords.push(int(0));
    for &a in labels.iter().rev() {
        tail += i64::from(a);
        coords.push(int(tail));
    }
    coords.reverse();
    weyl_dimension(&Weight::new(coords))
}

fn violation(msg: String) -> Error {
    Error::ConsistencyViolation(msg)
}

pub fn jordan_holder(pm: &ProjectiveModule, degree_cap: u32) -> Result<JordanHolderReport> {
    let v = pm.module();
    let n = pm.n();
    let mu = v.highest_weight().clone();
    let witness = criterion(&mu)?;
    if witness.verdict != Verdict::Reducible {
        return Err(Error::InvalidLabels(format!(
            "{} gives an irreducible module",
            v.labels()
        )));
    }
    let first = witness.first_failure_degree.expect("reducible has a failure");
    let k = first - 1;
    let k32 = u32::try_from(k).map_err(|_| violation("threshold out of range".into()))?;
    let cap = degree_cap.max(k32 + 2).max(4);
    let mut findings = Vec::new();

    let sub = PseudoSubmodule::new(pm);
    let ranks = sub.ranks(cap);
    let full: Vec<usize> = (0..=cap).map(|j| sub.full_dim(j)).collect();
    let deficient = (0..=cap as usize).find(|&j| ranks[j] < full[j]);
    if deficient != Some(first as usize) {
        return Err(violation(format!(
            "first rank deficiency at {deficient:?}, criterion predicts degree {first}"
        )));
    }

    let residual = residual_summands(&mu, k32 + 1)?;
    let r = match residual.entries.as_slice() {
        [c] => match c.iter().position(|&x| x > 0) {
            Some(r) if c[r] == k32 + 1 => r + 1,
            _ => {
                return Err(violation(format!(
                    "residual summand {c:?} at degree {first} is not a multiple of a unit vector"
                )))
            }
        },
        other => {
            return Err(violation(format!(
                "expected one residual summand at degree {first}, found {}",
                other.len()
            )))
        }
    };
    let mut exponent = vec![0u32; n];
    exponent[r - 1] = k32 + 1;
    let residual_weight = mu.shifted(&exponent);

    for j in 0..=cap {
        let lost: u128 = residual_summands(&mu, j)?
            .entries
            .iter()
            .map(|c| weyl_dimension(&mu.shifted(c)))
            .sum::<Result<u128>>()?;
        if ranks[j as usize] as u128 + lost != full[j as usize] as u128 {
            return Err(violation(format!(
                "rank {} at degree {j} does not equal {} − {lost}",
                ranks[j as usize], full[j as usize]
            )));
        }
    }

    for j in k32 + 2..=cap {
        let kernel = sub.residual_space(j);
        if kernel.is_empty() {
            continue;
        }
        let below = sub.generator_matrix(j - 1);
        let below_rank = ranks[(j - 1) as usize];
        let kernel = Matrix::from_columns(full[j as usize], &kernel);
        for l in 0..n {
            let image = pm.spanning_matrix(SpanningOp::Partial(l), j).mul(&kernel);
            if rank(&Matrix::hstack(&[&below, &image])) == below_rank {
                return Err(violation(format!(
                    "∂{} keeps the residual part of degree {j} inside the submodule",
                    l + 1
                )));
            }
        }
    }

    let i0 = match corollary_threshold(&mu) {
        Some((i0, k_formula)) => {
            if k_formula != k {
                findings.push(format!(
                    "threshold formula gives k = {k_formula} at i0 = {i0}, failing pairs give k = {k}"
                ));
            }
            if i0 != r {
                findings.push(format!("i0 = {i0} differs from residual index r = {r}"));
            }
            i0
        }
        None => {
            findings.push(format!("threshold formula finds no index; using r = {r}"));
            r
        }
    };

    let finite_dim_flag = i0 == 1;
    let mut top = cap + 1;
    let (finite_highest_weight, finite_dimension) = if finite_dim_flag {
        let mut labels = vec![k32];
        labels.extend(v.labels().dynkin.iter().copied());
        let expected = sl_dimension(&labels)?;
        let mut total: u128 = 0;
        let mut j = 0u32;
        loop {
            let rj = sub.rank(j) as u128;
            if rj == 0 {
                break;
            }
            total += rj;
            if total > expected {
                return Err(violation(format!(
                    "submodule dimension exceeds {expected} by degree {j}"
                )));
            }
            j += 1;
        }
        top = top.max(j + 1);
        if total != expected {
            return Err(violation(format!(
                "submodule has dimension {total}, expected {expected}"
            )));
        }
        (Some(labels), Some(expected))
    } else {
        (None, None)
    };

    let submodule_dims_by_degree = (0..top).map(|j| sub.rank(j)).collect();
    let full_dims = (0..top).map(|j| sub.full_dim(j)).collect();

    Ok(JordanHolderReport {
        k,
        i0,
        r,
        quotient_description: format!("χ_{residual_weight}"),
        residual_weight,
        submodule_dims_by_degree,
        full_dims,
        finite_dim_flag,
        finite_highest_weight,
        finite_dimension,
        degree_cap: cap,
        findings,
    })
}
