use rayon::prelude::*;

use super::module::ProjectiveModule;
use super::witt::{spanning_ops, WittElement};
use crate::error::Result;
use crate::gl_modules::GlModule;
use crate::linalg::{int, Matrix, Rational};

/// `x ∘ y`: the matrix from degree `k` to `k + shift(x) + shift(y)`.
pub fn compose_on_degree(
    pm: &ProjectiveModule,
    x: &WittElement,
    y: &WittElement,
    k: u32,
) -> Result<Matrix> {
    let sy = shift_of(y)?;
    let sx = shift_of(x)?;
    let mid = i64::from(k) + i64::from(sy);
    let end = mid + i64::from(sx);
    if mid < 0 || end < 0 {
        return Ok(Matrix::zeros(pm.graded_dim(end), pm.graded_dim(i64::from(k))));
    }
    let my = pm.operator_matrix_unlabeled(y, k)?;
    let mx = pm.operator_matrix_unlabeled(x, mid as u32)?;
    Ok(mx.mul(&my))
}

fn shift_of(op: &WittElement) -> Result<i32> {
    ProjectiveModule::degree_shift(op).map(|(_, s)| s)
}

/// `x ∘ y − y ∘ x` on the degree-`k` piece.
pub fn commutator_on_degree(
    pm: &ProjectiveModule,
    x: &WittElement,
    y: &WittElement,
    k: u32,
) -> Result<Matrix> {
    Ok(compose_on_degree(pm, x, y, k)?.sub(&compose_on_degree(pm, y, x, k)?))
}

/// Pairs of spanning operators (and degrees) where the matrix of the
/// symbolic bracket differs from the commutator of the matrices.
pub fn bracket_consistency_failures(pm: &ProjectiveModule, k_max: u32) -> Result<Vec<String>> {
    let n = pm.n();
    let ops = spanning_ops(n);
    for k in 0..=k_max + 2 {
        for &op in &ops {
            pm.spanning_matrix(op, k);
        }
    }
    let pairs: Vec<(usize, usize)> = (0..ops.len())
        .flat_map(|a| (a + 1..ops.len()).map(move |b| (a, b)))
        .collect();
    let results: Vec<Result<Option<String>>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (u, w) = (ops[a].to_element(n), ops[b].to_element(n));
            let bracket = u.bracket(&w);
            for k in 0..=k_max {
                let commutator = commutator_on_degree(pm, &u, &w, k)?;
                let ok = if bracket.is_zero() {
                    commutator.is_zero()
                } else {
                    let expected = pm.operator_matrix_unlabeled(&bracket, k)?;
                    expected == commutator
                };
                if !ok {
                    return Ok(Some(format!("[{}, {}] at degree {k}", ops[a], ops[b])));
                }
            }
            Ok(None)
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(failures)
}

pub fn verify_bracket_consistency(n: usize, v: &GlModule, k_max: u32) -> bool {
    use crate::gl_modules::Representation;
    if v.n() != n {
        return false;
    }
    let pm = ProjectiveModule::new(v.clone());
    matches!(bracket_consistency_failures(&pm, k_max), Ok(f) if f.is_empty())
}

/// `x_j ∂_i` when `i ≠ j`, and `Σ x_l∂_l + x_i∂_i + shift` when `i = j`, on the
/// given degree. Indices 0-based.
pub fn triangle_delta_with_shift(
    pm: &ProjectiveModule,
    i: usize,
    j: usize,
    shift: &Rational,
    degree: u32,
) -> Result<Matrix> {
    let n = pm.n();
    if i != j {
        return pm.operator_matrix_unlabeled(&WittElement::x_partial(n, j, i), degree);
    }
    let op = WittElement::euler(n).add(&WittElement::x_partial(n, i, i));
    let m = pm.operator_matrix_unlabeled(&op, degree)?;
    Ok(m.add(&Matrix::scalar(m.rows(), shift)))
}

/// `Δᵏ_{i,j}` on the given degree.
pub fn triangle_delta(
    pm: &ProjectiveModule,
    i: usize,
    j: usize,
    k: u32,
    degree: u32,
) -> Result<Matrix> {
    triangle_delta_with_shift(pm, i, j, &(int(i64::from(k)) - int(1)), degree)
}

/// `p_{i_1} ⋯ p_{i_m}` applied to a degree-0 vector.
pub fn apply_pseudo_product(
    pm: &ProjectiveModule,
    indices: &[usize],
    start: &[Rational],
) -> Vec<Rational> {
    let mut v = start.to_vec();
    for (step, &i) in indices.iter().rev().enumerate() {
        v = pm
            .spanning_matrix(super::witt::SpanningOp::Pseudo(i), step as u32)
            .mul_vec(&v);
    }
    v
}

/// Both sides of
/// `∂_i p_{i_1}⋯p_{i_k}(1⊗v) = Σ_s (∏_{t≠s} p_{i_t}) Δᵏ_{i,i_s}(1⊗v)`,
/// with `Δ` supplied by the caller as `delta(i, i_s, k)` on degree 0.
pub fn derivative_identity_sides<F>(
    pm: &ProjectiveModule,
    i: usize,
    indices: &[usize],
    v_index: usize,
    delta: F,
) -> Result<(Vec<Rational>, Vec<Rational>)>
where
    F: Fn(usize, usize, u32) -> Result<Matrix>,
{
    let d = pm.dim_v();
    let k = indices.len() as u32;
    let mut start = vec![int(0); d];
    start[v_index] = int(1);
    let top = apply_pseudo_product(pm, indices, &start);
    let lhs = if k == 0 {
        Vec::new()
    } else {
        pm.spanning_matrix(super::witt::SpanningOp::Partial(i), k)
            .mul_vec(&top)
    };
    let mut rhs = vec![int(0); pm.graded_dim(i64::from(k) - 1)];
    for s in 0..indices.len() {
        let rest: Vec<usize> = indices
            .iter()
            .enumerate()
            .filter(|(t, _)| *t != s)
            .map(|(_, &x)| x)
            .collect();
        let base = delta(i, indices[s], k)?.mul_vec(&start);
        let term = apply_pseudo_product(pm, &rest, &base);
        for (acc, x) in rhs.iter_mut().zip(term) {
            *acc += x;
        }
    }
    Ok((lhs, rhs))
}
