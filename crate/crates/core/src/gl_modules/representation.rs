use num_traits::Zero;

use super::weight::Weight;
use crate::error::{Error, Result};
use crate::linalg::{column_space_basis, int, kernel_basis, Matrix, Rational};

/// A finite-dimensional gl(n)-module with a weight basis and explicit action
/// matrices for every `E_ij`. Indices are 0-based.
pub trait Representation {
    fn n(&self) -> usize;
    fn dim(&self) -> usize;
    fn action(&self, i: usize, j: usize) -> &Matrix;
    fn basis_weights(&self) -> &[Weight];
}

/// Tensor product (or any other module given by raw data).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub n: usize,
    pub action: Vec<Vec<Matrix>>,
    pub weights: Vec<Weight>,
}

impl Representation for ModuleData {
    fn n(&self) -> usize {
        self.n
    }
    fn dim(&self) -> usize {
        self.weights.len()
    }
    fn action(&self, i: usize, j: usize) -> &Matrix {
        &self.action[i][j]
    }
    fn basis_weights(&self) -> &[Weight] {
        &self.weights
    }
}

/// `V ⊗ W` with `E_ij ↦ E_ij ⊗ 1 + 1 ⊗ E_ij`; basis index `a·dim W + b`.
pub fn tensor_product(v: &impl Representation, w: &impl Representation) -> ModuleData {
    assert_eq!(v.n(), w.n());
    let n = v.n();
    let (iv, iw) = (Matrix::identity(v.dim()), Matrix::identity(w.dim()));
    let action = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| v.action(i, j).kron(&iw).add(&iv.kron(w.action(i, j))))
                .collect()
        })
        .collect();
    let weights = v
        .basis_weights()
        .iter()
        .flat_map(|a| w.basis_weights().iter().map(move |b| a + b))
        .collect();
    ModuleData { n, action, weights }
}

/// Raising operators `E_{i,i+1}`.
pub fn raising_operators(v: &impl Representation) -> Vec<Matrix> {
    (0..v.n().saturating_sub(1))
        .map(|i| v.action(i, i + 1).clone())
        .collect()
}

/// Diagonal 0/1 projector onto the span of basis vectors of weight `target`.
pub fn weight_space_projector(v: &impl Representation, target: &Weight) -> Matrix {
    let diag: Vec<Rational> = v
        .basis_weights()
        .iter()
        .map(|w| int(i64::from(w == target)))
        .collect();
    Matrix::diagonal(&diag)
}

/// Basis of the vectors in the image of `weight_projector` killed by every
/// raising operator.
pub fn highest_weight_vectors(
    space_dim: usize,
    raising_ops: &[Matrix],
    weight_projector: &Matrix,
) -> Result<Vec<Vec<Rational>>> {
    for m in raising_ops.iter().chain(std::iter::once(weight_projector)) {
        if m.rows() != space_dim || m.cols() != space_dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {space_dim}x{space_dim} operators, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let image = column_space_basis(weight_projector);
    if image.is_empty() {
        return Ok(Vec::new());
    }
    let basis = Matrix::from_columns(space_dim, &image);
    let restricted: Vec<Matrix> = raising_ops.iter().map(|e| e.mul(&basis)).collect();
    let refs: Vec<&Matrix> = restricted.iter().collect();
    let stacked = if refs.is_empty() {
        Matrix::zeros(0, basis.cols())
    } else {
        Matrix::vstack(&refs)
    };
    Ok(kernel_basis(&stacked)
        .iter()
        .map(|y| basis.mul_vec(y))
        .collect())
}

/// Checks the defining relations and weight bookkeeping of a module:
/// commutation relations, diagonal Cartan action matching the weights and,
/// when given, the central value of `Σ E_ii`.
pub fn check_representation(v: &impl Representation, central: Option<&Rational>) -> Result<()> {
    let n = v.n();
    let dim = v.dim();
    let fail = |msg: String| Err(Error::ConsistencyViolation(msg));
    if v.basis_weights().len() != dim {
        return fail("weight list length differs from dimension".into());
    }
    for i in 0..n {
        let expected = Matrix::diagonal(
            &v.basis_weights()
                .iter()
                .map(|w| w.get(i).clone())
                .collect::<Vec<_>>(),
        );
        if v.action(i, i) != &expected {
            return fail(format!("E_{{{},{}}} is not the diagonal weight action", i + 1, i + 1));
        }
    }
    if let Some(b) = central {
        let mut trace = Matrix::zeros(dim, dim);
        for i in 0..n {
            trace = trace.add(v.action(i, i));
        }
        if trace != Matrix::scalar(dim, b) {
            return fail("sum of E_ii is not the central scalar".into());
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs = v.action(i, j).commutator(v.action(k, l));
                    let mut rhs = Matrix::zeros(dim, dim);
                    if j == k {
                        rhs = rhs.add(v.action(i, l));
                    }
                    if i == l {
                        rhs = rhs.sub(v.action(k, j));
                    }
                    if lhs != rhs {
                        return fail(format!(
                            "[E_{{{},{}}}, E_{{{},{}}}] violates the gl(n) relations",
                            i + 1,
                            j + 1,
                            k + 1,
                            l + 1
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Whether `v` is killed by every matrix.
pub fn annihilated_by(v: &[Rational], ops: &[Matrix]) -> bool {
    ops.iter()
        .all(|m| m.mul_vec(v).iter().all(Rational::is_zero))
}
