//! Polynomial vector fields `Σ f_i ∂_i` and the projective subalgebra spanned
//! by `∂_i`, `x_i ∂_j` and `p_i = x_i Σ_j x_j ∂_j`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{display_rational, int, Rational};

/// One of the spanning operators; indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpanningOp {
    Partial(usize),
    /// `x_i ∂_j`.
    XD(usize, usize),
    Pseudo(usize),
}

impl SpanningOp {
    /// Change in polynomial degree.
    pub fn degree_shift(self) -> i32 {
        match self {
            SpanningOp::Partial(_) => -1,
            SpanningOp::XD(..) => 0,
            SpanningOp::Pseudo(_) => 1,
        }
    }

    pub fn to_element(self, n: usize) -> WittElement {
        match self {
            SpanningOp::Partial(i) => WittElement::partial(n, i),
            SpanningOp::XD(i, j) => WittElement::x_partial(n, i, j),
            SpanningOp::Pseudo(i) => WittElement::pseudo_translation(n, i),
        }
    }
}

impl fmt::Display for SpanningOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpanningOp::Partial(i) => write!(f, "∂{}", i + 1),
            SpanningOp::XD(i, j) => write!(f, "x{}∂{}", i + 1, j + 1),
            SpanningOp::Pseudo(i) => write!(f, "p{}", i + 1),
        }
    }
}

/// `∂_1, …, ∂_n`, then `x_i ∂_j` row by row, then `p_1, …, p_n`.
pub fn spanning_ops(n: usize) -> Vec<SpanningOp> {
    let mut ops: Vec<SpanningOp> = (0..n).map(SpanningOp::Partial).collect();
    for i in 0..n {
        for j in 0..n {
            ops.push(SpanningOp::XD(i, j));
        }
    }
    ops.extend((0..n).map(SpanningOp::Pseudo));
    ops
}

/// `Σ_i f_i ∂_i`, stored as `(exponent of x, direction i) → coefficient`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittElement {
    n: usize,
    terms: BTreeMap<(Vec<u32>, usize), Rational>,
}

impl WittElement {
    pub fn zero(n: usize) -> Self {
        WittElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · x^exponent ∂_direction`.
    pub fn monomial(n: usize, exponent: Vec<u32>, direction: usize, coeff: Rational) -> Self {
        assert_eq!(exponent.len(), n);
        assert!(direction < n);
        let mut e = Self::zero(n);
        e.add_term(exponent, direction, coeff);
        e
    }

    pub fn partial(n: usize, i: usize) -> Self {
        Self::monomial(n, vec![0; n], i, Rational::one())
    }

    /// `x_i ∂_j`.
    pub fn x_partial(n: usize, i: usize, j: usize) -> Self {
        Self::monomial(n, unit(n, i), j, Rational::one())
    }

    /// Euler field `Σ_j x_j ∂_j`.
    pub fn euler(n: usize) -> Self {
        (0..n).fold(Self::zero(n), |acc, j| acc.add(&Self::x_partial(n, j, j)))
    }

    /// `p_i = x_i Σ_j x_j ∂_j`.
    pub fn pseudo_translation(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        for j in 0..n {
            let mut exp = unit(n, i);
            exp[j] += 1;
            e.add_term(exp, j, Rational::one());
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], usize, &Rational)> {
        self.terms.iter().map(|((e, d), c)| (e.as_slice(), *d, c))
    }

    fn add_term(&mut self, exponent: Vec<u32>, direction: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (exponent, direction);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn add_scaled(&self, other: &Self, factor: &Rational) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for ((e, d), c) in &other.terms {
            out.add_term(e.clone(), *d, c * factor);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::zero(self.n).add_scaled(self, factor)
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    /// `[Σ a_i ∂_i, Σ b_i ∂_i] = Σ_i Σ_j (a_j ∂_j b_i − b_j ∂_j a_i) ∂_i`.
    pub fn bracket(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for ((ea, da), ca) in &self.terms {
            for ((eb, db), cb) in &other.terms {
                // x^ea ∂_da applied to the coefficient x^eb of ∂_db
                if eb[*da] > 0 {
                    let mut exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                    exp[*da] -= 1;
                    out.add_term(exp, *db, ca * cb * int(i64::from(eb[*da])));
                }
                if ea[*db] > 0 {
                    let mut exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                    exp[*db] -= 1;
                    out.add_term(exp, *da, -(ca * cb) * int(i64::from(ea[*db])));
                }
            }
        }
        out
    }

    /// Coordinates in the spanning set, or an error when the field lies
    /// outside the projective subalgebra.
    pub fn decompose(&self) -> Result<Vec<(SpanningOp, Rational)>> {
        let n = self.n;
        let mut out = Vec::new();
        let mut quadratic = Self::zero(n);
        for ((e, d), c) in &self.terms {
            let degree: u32 = e.iter().sum();
            match degree {
                0 => out.push((SpanningOp::Partial(*d), c.clone())),
                1 => {
                    let i = e.iter().position(|&x| x == 1).expect("degree one exponent");
                    out.push((SpanningOp::XD(i, *d), c.clone()));
                }
                2 => quadratic.add_term(e.clone(), *d, c.clone()),
                _ => return Err(Error::UnsupportedOperator(self.to_string())),
            }
        }
        // The quadratic part must be x_i·ℓ in every direction i for one
        // linear form ℓ = Σ c_l x_l, i.e. Σ c_l p_l.
        let mut linear: BTreeMap<usize, Rational> = BTreeMap::new();
        for ((e, d), c) in &quadratic.terms {
            if e[*d] == 0 {
                return Err(Error::UnsupportedOperator(self.to_string()));
            }
            let mut rest = e.clone();
            rest[*d] -= 1;
            let l = rest.iter().position(|&x| x == 1).expect("degree one remainder");
            linear.entry(l).or_insert_with(|| c.clone());
        }
        let rebuilt = linear.iter().fold(Self::zero(n), |acc, (l, c)| {
            acc.add_scaled(&Self::pseudo_translation(n, *l), c)
        });
        if rebuilt != quadratic {
            return Err(Error::UnsupportedOperator(self.to_string()));
        }
        out.extend(linear.into_iter().map(|(l, c)| (SpanningOp::Pseudo(l), c)));
        out.sort_by_key(|a| a.0);
        Ok(out)
    }

    pub fn from_combination(n: usize, combination: &[(SpanningOp, Rational)]) -> Self {
        combination.iter().fold(Self::zero(n), |acc, (op, c)| {
            acc.add_scaled(&op.to_element(n), c)
        })
    }
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl fmt::Display for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((e, d), c)| {
                let mono: String = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| {
                        if p == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, p)
                        }
                    })
                    .collect();
                format!("{}·{}∂{}", display_rational(c), mono, d + 1)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
