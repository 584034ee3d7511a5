//! JSON documents for modules: sparse action entries as
//! `[i, j, row, col, "num", "den"]` with 1-based `i, j`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::construct::GlModule;
use super::weight::{weight_from_labels, DominantLabels, Weight};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

pub type ActionEntry = (usize, usize, usize, usize, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlModuleDocument {
    pub n: usize,
    pub dim: usize,
    pub labels: DominantLabels,
    pub highest_index: usize,
    pub weights: Vec<Weight>,
    pub action: Vec<ActionEntry>,
}

impl GlModule {
    pub fn to_document(&self) -> GlModuleDocument {
        let n = self.labels.n();
        let mut action = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (r, c, v) in self.action[i][j].triplets() {
                    action.push((
                        i + 1,
                        j + 1,
                        r,
                        c,
                        v.numer().to_string(),
                        v.denom().to_string(),
                    ));
                }
            }
        }
        GlModuleDocument {
            n,
            dim: self.basis_weights.len(),
            labels: self.labels.clone(),
            highest_index: self.highest_index(),
            weights: self.basis_weights.clone(),
            action,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("module documents always serialize")
    }

    pub fn from_document(doc: &GlModuleDocument) -> Result<GlModule> {
        let n = doc.labels.n();
        let bad = |msg: &str| Error::Parse(format!("module document: {msg}"));
        if doc.n != n || doc.weights.len() != doc.dim || doc.highest_index != 0 {
            return Err(bad("inconsistent header"));
        }
        let mut triplets = vec![vec![Vec::new(); n]; n];
        for (i, j, r, c, num, den) in &doc.action {
            if !(1..=n).contains(i) || !(1..=n).contains(j) || *r >= doc.dim || *c >= doc.dim {
                return Err(bad("action entry out of range"));
            }
            let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
            let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
            if den == BigInt::from(0) {
                return Err(bad("zero denominator"));
            }
            triplets[i - 1][j - 1].push((*r, *c, Rational::new(num, den)));
        }
        let action = triplets
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| Matrix::from_triplets(doc.dim, doc.dim, t))
                    .collect()
            })
            .collect();
        Ok(GlModule {
            labels: doc.labels.clone(),
            highest_weight: weight_from_labels(&doc.labels),
            basis_weights: doc.weights.clone(),
            action,
        })
    }

    pub fn from_json(text: &str) -> Result<GlModule> {
        let doc: GlModuleDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_document(&doc)
    }
}
