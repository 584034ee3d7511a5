use serde::{Deserialize, Serialize};

use super::graded::MonomialBasis;
use crate::gl_modules::{ModuleData, Weight};
use crate::linalg::{format_rational, int, parse_rational, Matrix};
use crate::error::Result;

/// Sparse-triplet JSON form of a labelled matrix; values as `"num/den"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDocument {
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Option<Vec<String>>,
    pub col_labels: Option<Vec<String>>,
    pub entries: Vec<(usize, usize, String)>,
}

impl OperatorDocument {
    pub fn from_matrix(m: &Matrix) -> Self {
        OperatorDocument {
            rows: m.rows(),
            cols: m.cols(),
            row_labels: m.row_labels().map(<[String]>::to_vec),
            col_labels: m.col_labels().map(<[String]>::to_vec),
            entries: m
                .triplets()
                .map(|(r, c, v)| (r, c, format_rational(v)))
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let mut triplets = Vec::with_capacity(self.entries.len());
        for (r, c, v) in &self.entries {
            triplets.push((*r, *c, parse_rational(v)?));
        }
        let m = Matrix::from_triplets(self.rows, self.cols, triplets);
        match (&self.row_labels, &self.col_labels) {
            (Some(r), Some(c)) => m.with_labels(r.clone(), c.clone()),
            _ => Ok(m),
        }
    }
}

/// Degree-`k` polynomials with `E_ij` acting as `x_i ∂_j`; a copy of
/// `V(kε₁)` in the monomial basis.
pub fn polynomial_module(n: usize, k: u32) -> ModuleData {
    let basis = MonomialBasis::new(n, k);
    let dim = basis.len();
    let action = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let t = basis.exponents.iter().enumerate().filter_map(|(col, c)| {
                        (c[j] > 0).then(|| {
                            let mut e = c.clone();
                            e[j] -= 1;
                            e[i] += 1;
                            (basis.position(&e).expect("same degree"), col, int(i64::from(c[j])))
                        })
                    });
                    Matrix::from_triplets(dim, dim, t)
                })
                .collect()
        })
        .collect();
    let weights = basis
        .exponents
        .iter()
        .map(|c| Weight::from_i64(&c.iter().map(|&x| i64::from(x)).collect::<Vec<_>>()))
        .collect();
    ModuleData { n, action, weights }
}
