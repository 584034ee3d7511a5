//! The action of the projective subalgebra on `𝒜 ⊗ V`, one graded piece at a
//! time:
//!
//! * `x_i ∂_j (x^c ⊗ v) = c_j x^{c−e_j+e_i} ⊗ v + x^c ⊗ E_ij v`
//! * `∂_i (x^c ⊗ v) = c_i x^{c−e_i} ⊗ v`
//! * `p_i (x^c ⊗ v) = |c| x^{c+e_i} ⊗ v + x^{c+e_i} ⊗ (Σ_j E_jj) v + Σ_j x^{c+e_j} ⊗ E_ij v`

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::graded::{GradedElement, MonomialBasis};
use super::witt::{SpanningOp, WittElement};
use crate::error::{Error, Result};
use crate::gl_modules::{GlModule, Representation};
use crate::linalg::{int, Matrix, Rational};

/// `𝒜 ⊗ V` with lazily built, immutable per-degree operator matrices.
#[derive(Debug)]
pub struct ProjectiveModule {
    module: GlModule,
    twist_sign: i64,
    monomials: RwLock<HashMap<u32, Arc<MonomialBasis>>>,
    matrices: RwLock<HashMap<(SpanningOp, u32), Arc<Matrix>>>,
}

impl Clone for ProjectiveModule {
    fn clone(&self) -> Self {
        ProjectiveModule {
            module: self.module.clone(),
            twist_sign: self.twist_sign,
            monomials: RwLock::new(HashMap::new()),
            matrices: RwLock::new(HashMap::new()),
        }
    }
}

impl ProjectiveModule {
    pub fn new(module: GlModule) -> Self {
        ProjectiveModule {
            module,
            twist_sign: 1,
            monomials: RwLock::new(HashMap::new()),
            matrices: RwLock::new(HashMap::new()),
        }
    }

    /// Negates the `V`-terms of every `p_i`. Used to check that the test
    /// suite notices a broken action.
    #[doc(hidden)]
    pub fn with_flipped_twist(mut self) -> Self {
        self.twist_sign = -self.twist_sign;
        self.matrices = RwLock::new(HashMap::new());
        self
    }

    pub fn module(&self) -> &GlModule {
        &self.module
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    pub fn dim_v(&self) -> usize {
        self.module.dim()
    }

    pub fn monomials(&self, k: u32) -> Arc<MonomialBasis> {
        if let Some(b) = self.monomials.read().expect("cache lock").get(&k) {
            return Arc::clone(b);
        }
        let built = Arc::new(MonomialBasis::new(self.n(), k));
        Arc::clone(
            self.monomials
                .write()
                .expect("cache lock")
                .entry(k)
                .or_insert(built),
        )
    }

    /// Size of the degree-`k` piece; zero for negative degrees.
    pub fn graded_dim(&self, k: i64) -> usize {
        if k < 0 {
            0
        } else {
            self.monomials(k as u32).len() * self.dim_v()
        }
    }

    /// `x^c ⊗ v_j`, ordered by monomial then by `j`.
    pub fn graded_basis(&self, k: u32) -> Vec<(Vec<u32>, usize)> {
        let m = self.monomials(k);
        m.exponents
            .iter()
            .flat_map(|e| (0..self.dim_v()).map(move |j| (e.clone(), j)))
            .collect()
    }

    pub fn basis_labels(&self, k: i64) -> Vec<String> {
        if k < 0 {
            return Vec::new();
        }
        self.graded_basis(k as u32)
            .iter()
            .map(|(e, j)| {
                let exps: Vec<String> = e.iter().map(u32::to_string).collect();
                format!("x^({})⊗v{}", exps.join(","), j)
            })
            .collect()
    }

    /// Matrix of a spanning operator from degree `k` to degree `k + shift`.
    pub fn spanning_matrix(&self, op: SpanningOp, k: u32) -> Arc<Matrix> {
        if let Some(m) = self.matrices.read().expect("cache lock").get(&(op, k)) {
            return Arc::clone(m);
        }
        let built = Arc::new(self.build_spanning_matrix(op, k));
        Arc::clone(
            self.matrices
                .write()
                .expect("cache lock")
                .entry((op, k))
                .or_insert(built),
        )
    }

    fn build_spanning_matrix(&self, op: SpanningOp, k: u32) -> Matrix {
        let d = self.dim_v();
        let src = self.monomials(k);
        let cols = src.len() * d;
        let target_degree = i64::from(k) + i64::from(op.degree_shift());
        let rows = self.graded_dim(target_degree);
        if rows == 0 {
            return Matrix::zeros(0, cols);
        }
        let dst = self.monomials(target_degree as u32);
        let mut t: Vec<(usize, usize, Rational)> = Vec::new();
        let v = &self.module;
        match op {
            SpanningOp::Partial(i) => {
                for (s, c) in src.exponents.iter().enumerate() {
                    if c[i] == 0 {
                        continue;
                    }
                    let mut e = c.clone();
                    e[i] -= 1;
                    let r = dst.position(&e).expect("target monomial");
                    for a in 0..d {
                        t.push((r * d + a, s * d + a, int(i64::from(c[i]))));
                    }
                }
            }
            SpanningOp::XD(i, j) => {
                let eij = v.e(i, j);
                for (s, c) in src.exponents.iter().enumerate() {
                    if c[j] > 0 {
                        let mut e = c.clone();
                        e[j] -= 1;
                        e[i] += 1;
                        let r = dst.position(&e).expect("target monomial");
                        for a in 0..d {
                            t.push((r * d + a, s * d + a, int(i64::from(c[j]))));
                        }
                    }
                    for (row, col, x) in eij.triplets() {
                        t.push((s * d + row, s * d + col, x.clone()));
                    }
                }
            }
            SpanningOp::Pseudo(i) => {
                let n = self.n();
                let sign = int(self.twist_sign);
                let mut trace = Matrix::zeros(d, d);
                for j in 0..n {
                    trace = trace.add(v.e(j, j));
                }
                for (s, c) in src.exponents.iter().enumerate() {
                    let mut up_i = c.clone();
                    up_i[i] += 1;
                    let ri = dst.position(&up_i).expect("target monomial");
                    if k > 0 {
                        for a in 0..d {
                            t.push((ri * d + a, s * d + a, int(i64::from(k))));
                        }
                    }
                    for (row, col, x) in trace.triplets() {
                        t.push((ri * d + row, s * d + col, &sign * x));
                    }
                    for j in 0..n {
                        let mut up_j = c.clone();
                        up_j[j] += 1;
                        let rj = dst.position(&up_j).expect("target monomial");
                        for (row, col, x) in v.e(i, j).triplets() {
                            t.push((rj * d + row, s * d + col, &sign * x));
                        }
                    }
                }
            }
        }
        Matrix::from_triplets(rows, cols, t)
    }

    /// Degree shift of a nonzero field in the projective span; fields mixing
    /// different shifts are rejected.
    pub fn degree_shift(op: &WittElement) -> Result<(Vec<(SpanningOp, Rational)>, i32)> {
        let combo = op.decompose()?;
        let shifts: Vec<i32> = combo.iter().map(|(o, _)| o.degree_shift()).collect();
        let shift = shifts.first().copied().unwrap_or(0);
        if shifts.iter().any(|&s| s != shift) {
            return Err(Error::UnsupportedOperator(format!(
                "{op} is not homogeneous in degree"
            )));
        }
        Ok((combo, shift))
    }

    /// Matrix from degree `k` to the target degree, without basis labels.
    pub fn operator_matrix_unlabeled(&self, op: &WittElement, k: u32) -> Result<Matrix> {
        if op.n() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "operator in {} variables on a module with n = {}",
                op.n(),
                self.n()
            )));
        }
        let (combo, shift) = Self::degree_shift(op)?;
        let rows = self.graded_dim(i64::from(k) + i64::from(shift));
        let mut acc = Matrix::zeros(rows, self.graded_dim(i64::from(k)));
        for (o, c) in combo {
            acc = acc.add_scaled(&self.spanning_matrix(o, k), &c);
        }
        Ok(acc)
    }

    /// Matrix of `op` on the degree-`k` piece, labelled by the bases.
    pub fn operator_matrix(&self, op: &WittElement, k: u32) -> Result<Matrix> {
        let (_, shift) = Self::degree_shift(op)?;
        let m = self.operator_matrix_unlabeled(op, k)?;
        let rows = self.basis_labels(i64::from(k) + i64::from(shift));
        let cols = self.basis_labels(i64::from(k));
        m.with_labels(rows, cols)
    }

    pub fn act(&self, op: &WittElement, v: &GradedElement) -> Result<GradedElement> {
        let (_, shift) = Self::degree_shift(op)?;
        let target = i64::from(v.degree) + i64::from(shift);
        if target < 0 {
            return Ok(GradedElement::zero(0));
        }
        let m = self.operator_matrix_unlabeled(op, v.degree)?;
        let x = v.to_vector(&self.monomials(v.degree), self.dim_v())?;
        let y = m.mul_vec(&x);
        Ok(GradedElement::from_vector(
            &self.monomials(target as u32),
            self.dim_v(),
            &y,
        ))
    }
}

pub fn graded_basis(v: &GlModule, k: u32) -> Vec<(Vec<u32>, usize)> {
    ProjectiveModule::new(v.clone()).graded_basis(k)
}

pub fn operator_matrix(op: &WittElement, v: &GlModule, k: u32) -> Result<Matrix> {
    ProjectiveModule::new(v.clone()).operator_matrix(op, k)
}

pub fn act(op: &WittElement, element: &GradedElement, v: &GlModule) -> Result<GradedElement> {
    ProjectiveModule::new(v.clone()).act(op, element)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_modules::{build_irreducible, DominantLabels};
    use crate::linalg::rat;

    fn pm(a: &[u32], b: Rational) -> ProjectiveModule {
        ProjectiveModule::new(build_irreducible(&DominantLabels::new(a.to_vec(), b)).unwrap())
    }

    #[test]
    fn derivatives_kill_constants() {
        let m = pm(&[1], int(1));
        for j in 0..2 {
            let out = m
                .act(&WittElement::partial(2, 0), &GradedElement::basis(vec![0, 0], j))
                .unwrap();
            assert!(out.is_zero());
        }
        let d = m.operator_matrix(&WittElement::partial(2, 0), 0).unwrap();
        assert_eq!((d.rows(), d.cols()), (0, 2));
    }

    #[test]
    fn pseudo_translation_on_constants() {
        let m = pm(&[1], int(1));
        let v = m.module();
        for a in 0..2 {
            for i in 0..2 {
                let out = m
                    .act(
                        &WittElement::pseudo_translation(2, i),
                        &GradedElement::basis(vec![0, 0], a),
                    )
                    .unwrap();
                let mut expected = GradedElement::zero(1);
                let mut xi = vec![0, 0];
                xi[i] = 1;
                // x_i ⊗ b·v_a
                expected.add_term(xi, a, v.central().clone()).unwrap();
                for j in 0..2 {
                    let mut xj = vec![0, 0];
                    xj[j] = 1;
                    for r in 0..2 {
                        expected.add_term(xj.clone(), r, v.e(i, j).get(r, a)).unwrap();
                    }
                }
                assert_eq!(out, expected);
            }
        }
    }

    #[test]
    fn euler_type_operator_on_linear_term() {
        let m = pm(&[1], rat(1, 3));
        let v = m.module();
        let out = m
            .act(&WittElement::x_partial(2, 0, 0), &GradedElement::basis(vec![1, 0], 1))
            .unwrap();
        let mut expected = GradedElement::basis(vec![1, 0], 1);
        expected.add_term(vec![1, 0], 1, v.e(0, 0).get(1, 1)).unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn graded_basis_sizes() {
        assert_eq!(pm(&[2], int(0)).graded_basis(0).len(), 3);
        assert_eq!(pm(&[0], int(0)).graded_basis(2).len(), 3);
        assert_eq!(pm(&[1, 0], int(1)).graded_basis(1).len(), 9);
        let m = ProjectiveModule::new(
            build_irreducible(&DominantLabels::new(vec![0, 0], int(0))).unwrap(),
        );
        assert_eq!(m.graded_basis(1).len(), 3);
    }

    #[test]
    fn pseudo_translation_vanishes_on_trivial_constants() {
        let m = pm(&[0], int(0));
        let p = m.operator_matrix(&WittElement::pseudo_translation(2, 0), 0).unwrap();
        assert!(p.is_zero());
        assert_eq!((p.rows(), p.cols()), (2, 1));
        let p = m.operator_matrix(&WittElement::pseudo_translation(2, 0), 1).unwrap();
        assert!(!p.is_zero());
    }

    #[test]
    fn mixed_degree_fields_are_rejected() {
        let m = pm(&[0], int(0));
        let op = WittElement::partial(2, 0).add(&WittElement::pseudo_translation(2, 1));
        assert!(matches!(
            m.operator_matrix(&op, 1),
            Err(Error::UnsupportedOperator(_))
        ));
    }
}
