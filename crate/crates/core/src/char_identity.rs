//! Block operators on `V(ε₁) ⊗ V` and `V(ε₁)* ⊗ V` built from the action of
//! `E_ij` on `V`, their characteristic identities, and the projectors onto
//! the summands of the tensor product.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl_modules::{pieri_index_set, weyl_dimension, GlModule, Representation, Weight};
use crate::linalg::{
    eval_operator_polynomial, format_rational, idempotent_from_spectrum, int, rank, Matrix,
    Rational,
};

/// An `n × n` grid of `dim V × dim V` blocks and its row-major flattening.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockOperator {
    pub grid: Vec<Vec<Matrix>>,
    pub flattened: Matrix,
}

impl BlockOperator {
    pub fn from_grid(grid: Vec<Vec<Matrix>>) -> Self {
        let flattened = Matrix::from_blocks(&grid);
        BlockOperator { grid, flattened }
    }

    pub fn n(&self) -> usize {
        self.grid.len()
    }

    pub fn dim(&self) -> usize {
        self.flattened.rows()
    }
}

/// Block `(i, j)` is `δ_ij·b + E_ji`.
pub fn sigma2_tilde(v: &GlModule) -> BlockOperator {
    let n = v.n();
    let central = Matrix::scalar(v.dim(), v.central());
    let grid = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = v.e(j, i).clone();
                    if i == j {
                        e.add(&central)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    BlockOperator::from_grid(grid)
}

/// `m_i = μ_i + |μ| − i + 1`.
pub fn predicted_sigma2_roots(mu: &Weight) -> Vec<Rational> {
    let total = mu.total();
    (0..mu.n())
        .map(|i| mu.get(i) + &total - int(i as i64))
        .collect()
}

/// Block `(i, j)` of `M` is `E_ij`; `M̃` is minus the block transpose.
pub fn adjoint_matrices(v: &GlModule) -> (BlockOperator, BlockOperator) {
    let n = v.n();
    let m = (0..n)
        .map(|i| (0..n).map(|j| v.e(i, j).clone()).collect())
        .collect();
    let m_tilde = (0..n)
        .map(|i| (0..n).map(|j| v.e(j, i).scale(&int(-1))).collect())
        .collect();
    (BlockOperator::from_grid(m), BlockOperator::from_grid(m_tilde))
}

/// `d_i = μ_i + n − i`.
pub fn predicted_adjoint_roots(mu: &Weight) -> Vec<Rational> {
    let n = mu.n();
    (0..n)
        .map(|i| mu.get(i) + int((n - 1 - i) as i64))
        .collect()
}

/// `d̃_i = n − 1 − d_i`.
pub fn predicted_dual_adjoint_roots(mu: &Weight) -> Vec<Rational> {
    let n = mu.n() as i64;
    predicted_adjoint_roots(mu)
        .iter()
        .map(|d| int(n - 1) - d)
        .collect()
}

/// Residual of a characteristic identity and the realized root multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    #[serde(with = "crate::linalg::rational::serde_rational::vec")]
    pub roots: Vec<Rational>,
    pub residual_zero: bool,
    /// `dim − rank(op − root)` for each root.
    pub multiplicities: Vec<usize>,
}

impl SpectrumReport {
    pub fn realized(&self) -> Vec<bool> {
        self.multiplicities.iter().map(|&m| m > 0).collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

pub fn check_characteristic_identity(
    op: &BlockOperator,
    roots: &[Rational],
) -> Result<SpectrumReport> {
    let m = &op.flattened;
    let residual = eval_operator_polynomial(m, roots)?;
    let multiplicities = roots
        .iter()
        .map(|r| m.rows() - rank(&m.shift_diagonal(r)))
        .collect();
    Ok(SpectrumReport {
        roots: roots.to_vec(),
        residual_zero: residual.is_zero(),
        multiplicities,
    })
}

/// Expected multiplicity of each `m_i`: the dimension of `V(μ + ε_i)` when
/// `ε_i` is a Pieri index of degree one, else zero.
pub fn predicted_sigma2_multiplicities(mu: &Weight) -> Result<Vec<usize>> {
    let n = mu.n();
    let pieri = pieri_index_set(mu, 1)?;
    (0..n)
        .map(|i| {
            let mut c = vec![0u32; n];
            c[i] = 1;
            if pieri.contains(&c) {
                Ok(weyl_dimension(&mu.shifted(&c))? as usize)
            } else {
                Ok(0)
            }
        })
        .collect()
}

/// Projector onto the summand of `V(ε₁) ⊗ V` of highest weight `μ + ε_r`
/// (`dual = false`), or of `V(ε₁)* ⊗ V` of highest weight `μ − ε_r`
/// (`dual = true`). `r` is 1-based. The zero matrix when the summand is
/// absent.
pub fn tensor_projector(v: &GlModule, r: usize, dual: bool) -> Result<Matrix> {
    let n = v.n();
    if r == 0 || r > n {
        return Err(Error::DimensionMismatch(format!("index r = {r} outside 1..{n}")));
    }
    let (m, m_tilde) = adjoint_matrices(v);
    let (op, roots) = if dual {
        (m.flattened, predicted_adjoint_roots(v.highest_weight()))
    } else {
        (m_tilde.flattened, predicted_dual_adjoint_roots(v.highest_weight()))
    };
    projector_from_roots(&op, &roots, r - 1)
}

/// Lagrange idempotent for `roots[target]` against all other roots. Reports
/// colliding 1-based root indices.
pub fn projector_from_roots(op: &Matrix, roots: &[Rational], target: usize) -> Result<Matrix> {
    for l in 0..roots.len() {
        if l != target && roots[l] == roots[target] {
            return Err(Error::DegenerateSpectrum {
                first: target + 1,
                second: l + 1,
                value: format_rational(&roots[l]),
            });
        }
    }
    let others: Vec<Rational> = roots
        .iter()
        .enumerate()
        .filter(|(l, _)| *l != target)
        .map(|(_, x)| x.clone())
        .collect();
    idempotent_from_spectrum(op, &roots[target], &others)
}

/// Matrices of `E_ij` acting diagonally on `V(ε₁) ⊗ V` (or `V(ε₁)* ⊗ V`),
/// with basis index `i·dim V + a`.
pub fn diagonal_tensor_action(v: &GlModule, dual: bool) -> Vec<Vec<Matrix>> {
    let n = v.n();
    let id_v = Matrix::identity(v.dim());
    let id_n = Matrix::identity(n);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let unit = if dual {
                        Matrix::from_triplets(n, n, [(j, i, int(-1))])
                    } else {
                        Matrix::from_triplets(n, n, [(i, j, int(1))])
                    };
                    unit.kron(&id_v).add(&id_n.kron(v.e(i, j)))
                })
                .collect()
        })
        .collect()
}
