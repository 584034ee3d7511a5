use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Exponent vectors of total degree `k` in descending lexicographic order
/// (`x_1 > x_2 > … > x_n`), with a reverse index.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub degree: u32,
    pub exponents: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, degree: u32) -> Self {
        let mut exponents = Vec::new();
        let mut current = vec![0u32; n];
        enumerate(0, degree, &mut current, &mut exponents);
        let index = exponents
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        MonomialBasis {
            degree,
            exponents,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn position(&self, exponent: &[u32]) -> Option<usize> {
        self.index.get(exponent).copied()
    }
}

fn enumerate(pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let n = current.len();
    if n == 0 {
        return;
    }
    if pos == n - 1 {
        current[pos] = remaining;
        out.push(current.clone());
        current[pos] = 0;
        return;
    }
    for value in (0..=remaining).rev() {
        current[pos] = value;
        enumerate(pos + 1, remaining - value, current, out);
    }
    current[pos] = 0;
}

/// Element of the degree-`k` piece, `Σ coeff · x^c ⊗ v_j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedElement {
    pub degree: u32,
    coords: BTreeMap<(Vec<u32>, usize), Rational>,
}

impl GradedElement {
    pub fn zero(degree: u32) -> Self {
        GradedElement {
            degree,
            coords: BTreeMap::new(),
        }
    }

    /// `x^c ⊗ v_j`.
    pub fn basis(exponent: Vec<u32>, j: usize) -> Self {
        let degree = exponent.iter().sum();
        let mut e = Self::zero(degree);
        e.coords.insert((exponent, j), Rational::from_integer(1.into()));
        e
    }

    pub fn add_term(&mut self, exponent: Vec<u32>, j: usize, coeff: Rational) -> Result<()> {
        if exponent.iter().sum::<u32>() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "monomial {exponent:?} does not have degree {}",
                self.degree
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let key = (exponent, j);
        let entry = self.coords.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coords.remove(&key);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], usize, &Rational)> {
        self.coords.iter().map(|((e, j), c)| (e.as_slice(), *j, c))
    }

    pub fn coefficient(&self, exponent: &[u32], j: usize) -> Rational {
        self.coords
            .get(&(exponent.to_vec(), j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coordinates in the basis `x^c ⊗ v_j` at index `pos(c)·dim V + j`.
    pub fn to_vector(&self, monomials: &MonomialBasis, dim_v: usize) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); monomials.len() * dim_v];
        for ((e, j), c) in &self.coords {
            let pos = monomials
                .position(e)
                .filter(|_| *j < dim_v)
                .ok_or_else(|| Error::DimensionMismatch(format!("{e:?}⊗v{j} outside the basis")))?;
            out[pos * dim_v + j] = c.clone();
        }
        Ok(out)
    }

    pub fn from_vector(monomials: &MonomialBasis, dim_v: usize, v: &[Rational]) -> Self {
        let mut e = Self::zero(monomials.degree);
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.coords
                    .insert((monomials.exponents[idx / dim_v].clone(), idx % dim_v), c.clone());
            }
        }
        e
    }
}
