use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{display_rational, int, Rational};

/// A gl(n) weight in the coordinates `λ_i = λ(E_ii)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![Rational::zero(); n])
    }

    /// The standard basis weight `ε_i` (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.0[i] = Rational::one();
        w
    }

    /// The simple root `α_i = ε_i − ε_{i+1}` (0-based `i`).
    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.0[i] = Rational::one();
        w.0[i + 1] = -Rational::one();
        w
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    /// `|λ| = Σ λ_i`.
    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    /// `λ + Σ c_s ε_s`.
    pub fn shifted(&self, c: &[u32]) -> Weight {
        assert_eq!(c.len(), self.n());
        Weight(
            self.0
                .iter()
                .zip(c)
                .map(|(x, &k)| x + int(i64::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * factor).collect())
    }

    /// Consecutive differences `λ_i − λ_{i+1}`, if all are nonnegative integers.
    pub fn dynkin_labels(&self) -> Option<Vec<u32>> {
        self.0
            .windows(2)
            .map(|w| {
                let d = &w[0] - &w[1];
                if d.is_integer() && !d.is_negative() {
                    u32::try_from(d.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.dynkin_labels().is_some()
    }

    pub fn labels(&self) -> Option<DominantLabels> {
        self.dynkin_labels()
            .map(|dynkin| DominantLabels::new(dynkin, self.total()))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(display_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::linalg::rational::serde_rational::vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::linalg::rational::serde_rational::vec::deserialize(d).map(Weight)
    }
}

/// Dynkin labels of the sl(n) part together with the scalar by which the
/// identity acts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominantLabels {
    pub dynkin: Vec<u32>,
    #[serde(with = "crate::linalg::rational::serde_rational")]
    pub central: Rational,
}

impl DominantLabels {
    pub fn new(dynkin: Vec<u32>, central: Rational) -> Self {
        DominantLabels { dynkin, central }
    }

    pub fn n(&self) -> usize {
        self.dynkin.len() + 1
    }

    /// `Σ i·a_i`, the trace of the exterior-power realization.
    pub fn tensor_trace(&self) -> u64 {
        self.dynkin
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64 + 1) * u64::from(a))
            .sum()
    }
}

impl fmt::Display for DominantLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.dynkin.iter().map(u32::to_string).collect();
        write!(
            f,
            "n={} a=({}) b={}",
            self.n(),
            a.join(","),
            display_rational(&self.central)
        )
    }
}

/// Highest weight `μ_j = Σ_{i≥j} a_i + (b − Σ i·a_i)/n`.
pub fn weight_from_labels(labels: &DominantLabels) -> Weight {
    let n = labels.n();
    let shift = (&labels.central - int(labels.tensor_trace() as i64)) / int(n as i64);
    let coords = (0..n)
        .map(|j| {
            let tail: u64 = labels.dynkin[j..]
                .iter()
                .map(|&a| u64::from(a))
                .sum();
            int(tail as i64) + &shift
        })
        .collect();
    Weight(coords)
}

/// Weight `μ − Σ k_i α_i` reached from the highest vector by `k_i` lowerings
/// along each simple root.
pub fn weight_of_vector(labels: &DominantLabels, lowering_counts: &[u32]) -> Result<Weight> {
    let n = labels.n();
    if lowering_counts.len() != n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "expected {} lowering counts, got {}",
            n - 1,
            lowering_counts.len()
        )));
    }
    let mut w = weight_from_labels(labels);
    for (i, &k) in lowering_counts.iter().enumerate() {
        let alpha = Weight::simple_root(n, i).scale(&int(i64::from(k)));
        w = &w - &alpha;
    }
    Ok(w)
}

/// `∏_{i<j} (μ_i − μ_j + j − i)/(j − i)`.
pub fn weyl_dimension(mu: &Weight) -> Result<u128> {
    if !mu.is_dominant() {
        return Err(Error::NonDominant(mu.to_string()));
    }
    let n = mu.n();
    let mut value = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = int((j - i) as i64);
            value *= (mu.get(i) - mu.get(j) + &gap) / gap;
        }
    }
    debug_assert!(value.is_integer());
    u128::try_from(value.to_integer()).map_err(|_| Error::NonDominant(mu.to_string()))
}
