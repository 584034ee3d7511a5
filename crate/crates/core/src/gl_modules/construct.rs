//! Irreducible gl(n)-modules realized inside tensor products of exterior
//! powers of the vector representation.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::{One, Zero};

use super::representation::Representation;
use super::weight::{weight_from_labels, weyl_dimension, DominantLabels, Weight};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Rational};

pub const DEFAULT_DIM_CAP: usize = 5000;

/// The irreducible module with given Dynkin labels on which the identity acts
/// as the given scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlModule {
    pub(crate) labels: DominantLabels,
    pub(crate) highest_weight: Weight,
    pub(crate) basis_weights: Vec<Weight>,
    /// `action[i][j]` is the matrix of `E_ij`.
    pub(crate) action: Vec<Vec<Matrix>>,
}

impl GlModule {
    pub fn labels(&self) -> &DominantLabels {
        &self.labels
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    /// Index of the highest weight vector; the basis is sorted so that it
    /// comes first.
    pub fn highest_index(&self) -> usize {
        0
    }

    pub fn central(&self) -> &Rational {
        &self.labels.central
    }

    pub fn e(&self, i: usize, j: usize) -> &Matrix {
        &self.action[i][j]
    }
}

impl Representation for GlModule {
    fn n(&self) -> usize {
        self.labels.n()
    }
    fn dim(&self) -> usize {
        self.basis_weights.len()
    }
    fn action(&self, i: usize, j: usize) -> &Matrix {
        &self.action[i][j]
    }
    fn basis_weights(&self) -> &[Weight] {
        &self.basis_weights
    }
}

pub fn build_irreducible(labels: &DominantLabels) -> Result<GlModule> {
    build_irreducible_capped(labels, DEFAULT_DIM_CAP)
}

/// Builds the module, refusing when its Weyl dimension exceeds `dim_cap`.
pub fn build_irreducible_capped(labels: &DominantLabels, dim_cap: usize) -> Result<GlModule> {
    let n = labels.n();
    if n > 16 {
        return Err(Error::InvalidLabels(format!("n = {n} is too large")));
    }
    let highest_weight = weight_from_labels(labels);
    let expected = weyl_dimension(&highest_weight)?;
    if expected > dim_cap as u128 {
        return Err(Error::DimensionCapExceeded {
            dim: expected,
            cap: dim_cap,
        });
    }
    let shift = (&labels.central - int(labels.tensor_trace() as i64)) / int(n as i64);

    let degrees: Vec<usize> = labels
        .dynkin
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i + 1, a as usize))
        .collect();
    let mut space = TensorSpace::new(n);
    let top: Vec<u16> = degrees.iter().map(|&p| ((1u32 << p) - 1) as u16).collect();
    let top_index = space.intern(top);

    // Cyclic span under the simple lowering operators, one reduced echelon
    // basis per weight space.
    let mut spaces: BTreeMap<Vec<u32>, Rref> = BTreeMap::new();
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    let start: SparseVec = BTreeMap::from([(top_index, Rational::one())]);
    spaces
        .entry(space.weight(top_index).to_vec())
        .or_default()
        .insert(start.clone());
    queue.push_back(start);
    let mut count = 1usize;
    while let Some(v) = queue.pop_front() {
        for k in 0..n - 1 {
            let lowered = space.apply(k + 1, k, &v);
            if lowered.is_empty() {
                continue;
            }
            let w = space.weight(*lowered.keys().next().unwrap()).to_vec();
            if spaces.entry(w).or_default().insert(lowered.clone()) {
                count += 1;
                if count as u128 > expected {
                    return Err(Error::ConsistencyViolation(format!(
                        "lowering closure exceeds the Weyl dimension {expected}"
                    )));
                }
                queue.push_back(lowered);
            }
        }
    }
    if count as u128 != expected {
        return Err(Error::ConsistencyViolation(format!(
            "lowering closure has dimension {count}, expected {expected}"
        )));
    }

    // Basis: weights in descending lexicographic order (as module weights),
    // rows of each reduced echelon form by pivot.
    let to_module_weight = |w: &[u32]| {
        Weight::new(w.iter().map(|&c| int(i64::from(c)) + &shift).collect())
    };
    let mut ordered: Vec<(Weight, &Vec<u32>, &Rref)> = spaces
        .iter()
        .map(|(w, r)| (to_module_weight(w), w, r))
        .collect();
    ordered.sort_by(|a, b| b.0.cmp(&a.0));

    let mut basis_weights = Vec::with_capacity(count);
    let mut offsets: HashMap<Vec<u32>, usize> = HashMap::new();
    for (mw, w, r) in &ordered {
        offsets.insert((*w).clone(), basis_weights.len());
        basis_weights.extend(std::iter::repeat_n(mw.clone(), r.rows.len()));
    }

    let mut triplets: Vec<Vec<Vec<(usize, usize, Rational)>>> =
        vec![vec![Vec::new(); n]; n];
    for (_, w, r) in &ordered {
        let col_offset = offsets[*w];
        for (local, row) in r.rows.values().enumerate() {
            let col = col_offset + local;
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let image = space.apply(i, j, row);
                    if image.is_empty() {
                        continue;
                    }
                    let target_w = space.weight(*image.keys().next().unwrap()).to_vec();
                    let (Some(target), Some(&row_offset)) =
                        (spaces.get(&target_w), offsets.get(&target_w))
                    else {
                        return Err(Error::ConsistencyViolation(
                            "action leaves the constructed span".into(),
                        ));
                    };
                    for (local_row, coeff) in target.coordinates(&image)? {
                        triplets[i][j].push((row_offset + local_row, col, coeff));
                    }
                }
            }
        }
    }
    let action = triplets
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, t)| {
                    if i == j {
                        Matrix::diagonal(
                            &basis_weights
                                .iter()
                                .map(|w| w.get(i).clone())
                                .collect::<Vec<_>>(),
                        )
                    } else {
                        Matrix::from_triplets(count, count, t)
                    }
                })
                .collect()
        })
        .collect();

    Ok(GlModule {
        labels: labels.clone(),
        highest_weight,
        basis_weights,
        action,
    })
}

type SparseVec = BTreeMap<usize, Rational>;

/// Interned basis of a tensor product of exterior powers; each key stores one
/// subset bitmask per factor.
struct TensorSpace {
    n: usize,
    keys: Vec<Vec<u16>>,
    weights: Vec<Vec<u32>>,
    index: HashMap<Vec<u16>, usize>,
}

impl TensorSpace {
    fn new(n: usize) -> Self {
        TensorSpace {
            n,
            keys: Vec::new(),
            weights: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn intern(&mut self, key: Vec<u16>) -> usize {
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        let weight = (0..self.n)
            .map(|l| key.iter().filter(|&&m| m & (1 << l) != 0).count() as u32)
            .collect();
        let id = self.keys.len();
        self.index.insert(key.clone(), id);
        self.keys.push(key);
        self.weights.push(weight);
        id
    }

    fn weight(&self, id: usize) -> &[u32] {
        &self.weights[id]
    }

    /// `E_ij` (i ≠ j) acting as a derivation on every factor.
    fn apply(&mut self, i: usize, j: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        let (bi, bj) = (1u16 << i, 1u16 << j);
        let (lo, hi) = (i.min(j), i.max(j));
        let between: u16 = (((1u32 << hi) - 1) & !((1u32 << (lo + 1)) - 1)) as u16;
        for (&id, coeff) in v {
            let key = self.keys[id].clone();
            for (f, &mask) in key.iter().enumerate() {
                if mask & bj == 0 || mask & bi != 0 {
                    continue;
                }
                let mut new_key = key.clone();
                new_key[f] = (mask & !bj) | bi;
                let sign_odd = (mask & between).count_ones() % 2 == 1;
                let target = self.intern(new_key);
                let entry = out.entry(target).or_insert_with(Rational::zero);
                if sign_odd {
                    *entry -= coeff;
                } else {
                    *entry += coeff;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Reduced row echelon basis of a subspace; rows keyed by pivot column with
/// pivot entry 1.
#[derive(Default)]
struct Rref {
    rows: BTreeMap<usize, SparseVec>,
}

impl Rref {
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .map(|(c, x)| (*c, x.clone()))
            .collect();
        for (pivot, factor) in hits {
            for (c, x) in &self.rows[&pivot] {
                let e = v.entry(*c).or_insert_with(Rational::zero);
                *e -= &factor * x;
            }
        }
        v.retain(|_, x| !x.is_zero());
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(f) = row.get(&pivot).cloned() {
                for (c, x) in &r {
                    let e = row.entry(*c).or_insert_with(Rational::zero);
                    *e -= &f * x;
                }
                row.retain(|_, x| !x.is_zero());
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    /// Coordinates of a vector known to lie in the span, as
    /// `(row position, coefficient)`.
    fn coordinates(&self, v: &SparseVec) -> Result<Vec<(usize, Rational)>> {
        let coords: Vec<(usize, Rational)> = self
            .rows
            .keys()
            .enumerate()
            .filter_map(|(pos, p)| v.get(p).map(|x| (pos, x.clone())))
            .collect();
        let mut rebuilt = SparseVec::new();
        for (pos, x) in &coords {
            let row = self.rows.values().nth(*pos).expect("row position in range");
            for (c, y) in row {
                *rebuilt.entry(*c).or_insert_with(Rational::zero) += x * y;
            }
        }
        rebuilt.retain(|_, x| !x.is_zero());
        if &rebuilt != v {
            return Err(Error::ConsistencyViolation(
                "image vector is outside its weight space".into(),
            ));
        }
        Ok(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_modules::representation::{check_representation, raising_operators};
    use crate::linalg::rat;

    fn build(a: &[u32], b: Rational) -> GlModule {
        build_irreducible(&DominantLabels::new(a.to_vec(), b)).unwrap()
    }

    #[test]
    fn trivial_module() {
        let v = build(&[0], int(0));
        assert_eq!(v.dim(), 1);
        for i in 0..2 {
            for j in 0..2 {
                assert!(v.e(i, j).is_zero());
            }
        }
    }

    #[test]
    fn vector_representation() {
        let v = build(&[1], int(1));
        assert_eq!(v.dim(), 2);
        assert_eq!(
            v.basis_weights(),
            &[Weight::from_i64(&[1, 0]), Weight::from_i64(&[0, 1])]
        );
        check_representation(&v, Some(&int(1))).unwrap();
    }

    #[test]
    fn adjoint_type_module_has_dimension_eight() {
        for b in [int(0), int(3), rat(-5, 7)] {
            let v = build(&[1, 1], b.clone());
            assert_eq!(v.dim(), 8);
            check_representation(&v, Some(&b)).unwrap();
        }
    }

    #[test]
    fn highest_vector_is_first_and_annihilated() {
        let v = build(&[2, 1], rat(1, 2));
        assert_eq!(v.basis_weights()[0], *v.highest_weight());
        for e in raising_operators(&v) {
            assert!(e.column(0).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let labels = DominantLabels::new(vec![2, 2], int(0));
        assert_eq!(
            build_irreducible_capped(&labels, 10),
            Err(Error::DimensionCapExceeded { dim: 27, cap: 10 })
        );
    }

    #[test]
    fn n_equals_one() {
        let v = build(&[], rat(3, 2));
        assert_eq!(v.dim(), 1);
        assert_eq!(v.e(0, 0), &Matrix::scalar(1, &rat(3, 2)));
    }
}
