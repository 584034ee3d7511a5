//! The graded submodule generated by `1 ⊗ V` under the pseudo-translations.

use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::linalg::{kernel_basis, rank, Matrix, Rational};
use crate::projective_action::{spanning_ops, ProjectiveModule, SpanningOp};

/// Per-degree generator matrices `M_j`: column `x^l ⊗ v_a` holds
/// `p_1^{l_1} ⋯ p_n^{l_n} (1 ⊗ v_a)` in the degree-`j` basis.
#[derive(Debug)]
pub struct PseudoSubmodule<'a> {
    pm: &'a ProjectiveModule,
    generators: Mutex<Vec<Arc<Matrix>>>,
    ranks: Mutex<Vec<Option<usize>>>,
}

impl<'a> PseudoSubmodule<'a> {
    pub fn new(pm: &'a ProjectiveModule) -> Self {
        PseudoSubmodule {
            pm,
            generators: Mutex::new(vec![Arc::new(Matrix::identity(pm.dim_v()))]),
            ranks: Mutex::new(Vec::new()),
        }
    }

    pub fn projective_module(&self) -> &ProjectiveModule {
        self.pm
    }

    /// `M_j`, built from `M_{j−1}` one column at a time: the column for
    /// `x^l ⊗ v` is `p_i` applied to the column for `x^{l−e_i} ⊗ v`, where
    /// `i` is the first index with `l_i > 0`.
    pub fn generator_matrix(&self, j: u32) -> Arc<Matrix> {
        let mut gens = self.generators.lock().expect("generator cache");
        while gens.len() <= j as usize {
            let prev_degree = gens.len() as u32 - 1;
            let prev = Arc::clone(gens.last().expect("degree zero present"));
            let next = self.next_generator(&prev, prev_degree);
            gens.push(Arc::new(next));
        }
        Arc::clone(&gens[j as usize])
    }

    fn next_generator(&self, prev: &Matrix, prev_degree: u32) -> Matrix {
        let pm = self.pm;
        let n = pm.n();
        let d = pm.dim_v();
        let src = pm.monomials(prev_degree);
        let dst = pm.monomials(prev_degree + 1);
        let images: Vec<Matrix> = (0..n)
            .into_par_iter()
            .map(|i| {
                pm.spanning_matrix(SpanningOp::Pseudo(i), prev_degree)
                    .mul(prev)
                    .transpose()
            })
            .collect();
        let mut triplets = Vec::new();
        for (pos, l) in dst.exponents.iter().enumerate() {
            let i = l.iter().position(|&x| x > 0).expect("positive degree");
            let mut lower = l.clone();
            lower[i] -= 1;
            let src_pos = src.position(&lower).expect("lower monomial");
            for a in 0..d {
                for (r, x) in images[i].row(src_pos * d + a) {
                    triplets.push((*r, pos * d + a, x.clone()));
                }
            }
        }
        Matrix::from_triplets(dst.len() * d, dst.len() * d, triplets)
    }

    /// Dimension of the submodule in degree `j`.
    pub fn rank(&self, j: u32) -> usize {
        if let Some(Some(r)) = self.ranks.lock().expect("rank cache").get(j as usize) {
            return *r;
        }
        let r = rank(&self.generator_matrix(j));
        let mut ranks = self.ranks.lock().expect("rank cache");
        if ranks.len() <= j as usize {
            ranks.resize(j as usize + 1, None);
        }
        ranks[j as usize] = Some(r);
        r
    }

    pub fn full_dim(&self, j: u32) -> usize {
        self.pm.graded_dim(i64::from(j))
    }

    /// Ranks for degrees `0..=j_max`, computed in parallel.
    pub fn ranks(&self, j_max: u32) -> Vec<usize> {
        self.generator_matrix(j_max);
        (0..=j_max)
            .into_par_iter()
            .map(|j| self.rank(j))
            .collect()
    }

    /// First degree `≤ j_max` where the submodule is a proper subspace.
    pub fn first_deficient_degree(&self, j_max: u32) -> Option<u32> {
        (0..=j_max).find(|&j| self.rank(j) < self.full_dim(j))
    }

    /// Kernel of `M_j`: the sum of the summands of degree `j` outside the
    /// submodule, as column vectors.
    pub fn residual_space(&self, j: u32) -> Vec<Vec<Rational>> {
        kernel_basis(&self.generator_matrix(j))
    }

    /// Whether every spanning operator maps the degree-`j` part into the
    /// submodule at the target degree.
    pub fn is_invariant_at(&self, j: u32) -> bool {
        let pm = self.pm;
        let mj = self.generator_matrix(j);
        spanning_ops(pm.n()).into_par_iter().all(|op| {
            let target = i64::from(j) + i64::from(op.degree_shift());
            if target < 0 {
                return true;
            }
            let image = pm.spanning_matrix(op, j).mul(&mj);
            let base = self.generator_matrix(target as u32);
            rank(&Matrix::hstack(&[&base, &image])) == self.rank(target as u32)
        })
    }
}

/// `rank M_k`.
pub fn up_submodule_rank(pm: &ProjectiveModule, k: u32) -> usize {
    PseudoSubmodule::new(pm).rank(k)
}

/// Matrix of `e'_i ⊗ w ↦ p_i . w` from `V(ε₁) ⊗ (𝒜⊗V)_j` to degree `j + 1`;
/// column `i · dim_j + w`.
pub fn tensor_action_map(pm: &ProjectiveModule, j: u32) -> Matrix {
    let blocks: Vec<Arc<Matrix>> = (0..pm.n())
        .map(|i| pm.spanning_matrix(SpanningOp::Pseudo(i), j))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().map(|b| b.as_ref()).collect();
    Matrix::hstack(&refs)
}

/// Matrices of `x_s ∂_t` acting on `V(ε₁) ⊗ (𝒜⊗V)_j`.
pub fn tensor_action_source(pm: &ProjectiveModule, s: usize, t: usize, j: u32) -> Matrix {
    let n = pm.n();
    let dj = pm.graded_dim(i64::from(j));
    let vector_part = Matrix::from_triplets(n, n, [(s, t, Rational::from_integer(1.into()))]);
    let xd = pm.spanning_matrix(SpanningOp::XD(s, t), j);
    vector_part
        .kron(&Matrix::identity(dj))
        .add(&Matrix::identity(n).kron(&xd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_modules::{build_irreducible, DominantLabels};
    use crate::linalg::int;

    fn pm(a: &[u32], b: i64) -> ProjectiveModule {
        ProjectiveModule::new(build_irreducible(&DominantLabels::new(a.to_vec(), int(b))).unwrap())
    }

    #[test]
    fn rank_examples() {
        let v = pm(&[1], 1);
        assert_eq!(up_submodule_rank(&v, 0), 2);
        assert_eq!(up_submodule_rank(&v, 1), 3);
        let t = pm(&[0], 0);
        assert_eq!(up_submodule_rank(&t, 1), 0);
        assert_eq!(up_submodule_rank(&t, 0), 1);
    }

    #[test]
    fn generator_columns_are_pseudo_products() {
        let v = pm(&[1], 1);
        let sub = PseudoSubmodule::new(&v);
        let m2 = sub.generator_matrix(2);
        // column of x1 x2 ⊗ v_1 is p_1 p_2 (1 ⊗ v_1)
        let mono = v.monomials(2);
        let pos = mono.position(&[1, 1]).unwrap();
        let expected = crate::projective_action::apply_pseudo_product(&v, &[0, 1], &[int(0), int(1)]);
        assert_eq!(m2.column(pos * 2 + 1), expected);
    }

    #[test]
    fn trivial_tensor_map_vanishes_at_degree_zero() {
        let t = pm(&[0], 0);
        let m = tensor_action_map(&t, 0);
        assert!(m.is_zero());
        assert_eq!((m.rows(), m.cols()), (2, 2));
    }

    #[test]
    fn tensor_map_intertwines() {
        let v = pm(&[1], 1);
        for j in 0..=2 {
            let t = tensor_action_map(&v, j);
            for s in 0..2 {
                for u in 0..2 {
                    let lhs = t.mul(&tensor_action_source(&v, s, u, j));
                    let rhs = v.spanning_matrix(SpanningOp::XD(s, u), j + 1).mul(&t);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
