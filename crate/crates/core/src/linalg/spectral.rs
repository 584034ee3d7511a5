//! Operator polynomials, spectral projectors, and a brute-force rational
//! spectrum used as an independent oracle.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::elimination::square_components;
use super::matrix::Matrix;
use super::rational::{common_denominator, format_rational, Rational};
use crate::error::{Error, Result};

/// `∏ (op − r·Id)` over `roots`, multiplied left to right.
///
/// Evaluated block by block on the connected components of `op`, which is
/// exact because polynomials in a block-diagonal matrix stay block diagonal.
pub fn eval_operator_polynomial(op: &Matrix, roots: &[Rational]) -> Result<Matrix> {
    if !op.is_square() {
        return Err(Error::NotSquare {
            rows: op.rows(),
            cols: op.cols(),
        });
    }
    let n = op.rows();
    let mut triplets = Vec::new();
    for comp in square_components(op) {
        let block = op.submatrix(&comp, &comp);
        let size = comp.len();
        let mut acc = Matrix::identity(size);
        for r in roots {
            acc = acc.mul(&block.shift_diagonal(r));
            if acc.is_zero() {
                break;
            }
        }
        for (i, j, v) in acc.triplets() {
            triplets.push((comp[i], comp[j], v.clone()));
        }
    }
    Ok(Matrix::from_triplets(n, n, triplets))
}

/// Lagrange idempotent `∏_{l ∈ others} (op − l)/(target − l)`.
pub fn idempotent_from_spectrum(
    op: &Matrix,
    target: &Rational,
    others: &[Rational],
) -> Result<Matrix> {
    let nodes: Vec<&Rational> = std::iter::once(target).chain(others).collect();
    for a in 0..nodes.len() {
        for b in a + 1..nodes.len() {
            if nodes[a] == nodes[b] {
                return Err(Error::DegenerateSpectrum {
                    first: a,
                    second: b,
                    value: format_rational(nodes[a]),
                });
            }
        }
    }
    let denominator: Rational = others.iter().map(|l| target - l).product();
    let numerator = eval_operator_polynomial(op, others)?;
    Ok(numerator.scale(&(Rational::one() / denominator)))
}

/// Coefficients `c_0, …, c_{m−1}, 1` of the monic characteristic polynomial
/// `det(x·Id − m)`, via reduction to upper Hessenberg form.
pub fn characteristic_polynomial(m: &Matrix) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut h = m.to_dense();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        for r in j + 2..n {
            if h[r][j].is_zero() {
                continue;
            }
            let f = &h[r][j] / &h[j + 1][j];
            for c in 0..n {
                let delta = &f * &h[j + 1][c];
                h[r][c] -= delta;
            }
            for row in h.iter_mut() {
                let delta = &f * &row[r];
                row[j + 1] += delta;
            }
        }
    }
    // p_k is the characteristic polynomial of the leading k×k block.
    let mut polys: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for k in 1..=n {
        let mut next = shift_up(&polys[k - 1]);
        sub_scaled(&mut next, &polys[k - 1], &h[k - 1][k - 1]);
        let mut subdiag = Rational::one();
        for i in (1..k).rev() {
            subdiag *= &h[i][i - 1];
            if subdiag.is_zero() {
                break;
            }
            let coeff = &h[i - 1][k - 1] * &subdiag;
            sub_scaled(&mut next, &polys[i - 1], &coeff);
        }
        polys.push(next);
    }
    Ok(polys.pop().unwrap_or_else(|| vec![Rational::one()]))
}

fn shift_up(p: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    out.extend_from_slice(p);
    out
}

fn sub_scaled(target: &mut [Rational], p: &[Rational], factor: &Rational) {
    for (t, c) in target.iter_mut().zip(p) {
        *t -= c * factor;
    }
}

/// Rational eigenvalues with algebraic multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpectrum {
    /// Distinct rational roots, ascending, with multiplicity.
    pub roots: Vec<(Rational, usize)>,
    /// Degree of the characteristic polynomial not accounted for by
    /// rational roots.
    pub unresolved_degree: usize,
}

impl RationalSpectrum {
    pub fn multiplicity(&self, value: &Rational) -> usize {
        self.roots
            .iter()
            .find(|(r, _)| r == value)
            .map_or(0, |(_, m)| *m)
    }
}

/// Largest Gershgorin radius tolerated when enumerating integer root
/// candidates.
const MAX_ROOT_SEARCH: i64 = 2_000_000;

/// Extracts every rational eigenvalue from the characteristic polynomial.
///
/// With `D` the common denominator of the entries, `D·op` has an integer
/// monic characteristic polynomial, so each rational eigenvalue is `y/D` for
/// an integer `y` dividing the constant term and bounded by the largest
/// absolute row sum of `D·op`.
pub fn rational_spectrum(op: &Matrix) -> Result<RationalSpectrum> {
    if !op.is_square() {
        return Err(Error::NotSquare {
            rows: op.rows(),
            cols: op.cols(),
        });
    }
    let mut found: Vec<(Rational, usize)> = Vec::new();
    let mut unresolved = 0;
    for comp in square_components(op) {
        let block = op.submatrix(&comp, &comp);
        let (roots, rest) = block_rational_roots(&block)?;
        unresolved += rest;
        for (r, m) in roots {
            match found.iter_mut().find(|(v, _)| *v == r) {
                Some((_, acc)) => *acc += m,
                None => found.push((r, m)),
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RationalSpectrum {
        roots: found,
        unresolved_degree: unresolved,
    })
}

fn block_rational_roots(block: &Matrix) -> Result<(Vec<(Rational, usize)>, usize)> {
    let m = block.rows();
    let den = common_denominator(block.triplets().map(|(_, _, v)| v));
    let d = Rational::from_integer(den.clone());
    let scaled = block.scale(&d);
    let chi = characteristic_polynomial(&scaled)?;
    let mut coeffs: Vec<BigInt> = chi
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    let mut roots: Vec<(Rational, usize)> = Vec::new();

    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros));
        coeffs.drain(..zeros);
    }
    let bound: BigInt = (0..m)
        .map(|i| {
            scaled
                .row(i)
                .iter()
                .map(|(_, v)| v.to_integer().abs())
                .sum::<BigInt>()
        })
        .max()
        .unwrap_or_default();
    let bound: i64 = i64::try_from(&bound)
        .ok()
        .filter(|b| *b <= MAX_ROOT_SEARCH)
        .ok_or_else(|| {
            Error::ConsistencyViolation(format!("root search bound {bound} too large"))
        })?;
    for magnitude in 1..=bound {
        if coeffs.len() <= 1 {
            break;
        }
        for y in [magnitude, -magnitude] {
            let y = BigInt::from(y);
            let mut mult = 0;
            while coeffs.len() > 1 && (&coeffs[0] % &y).is_zero() {
                match divide_root(&coeffs, &y) {
                    Some(q) => {
                        coeffs = q;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                roots.push((Rational::new(y, den.clone()), mult));
            }
        }
    }
    Ok((roots, coeffs.len() - 1))
}

/// Synthetic division by `(x − y)`; `None` if `y` is not a root.
fn divide_root(coeffs: &[BigInt], y: &BigInt) -> Option<Vec<BigInt>> {
    // coeffs ascending; Horner from the top.
    let deg = coeffs.len() - 1;
    let mut quotient = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for k in (0..=deg).rev() {
        let value = &coeffs[k] + &carry * y;
        if k == 0 {
            return value.is_zero().then_some(quotient);
        }
        quotient[k - 1] = value.clone();
        carry = value;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, rat};

    #[test]
    fn polynomial_examples() {
        let op = Matrix::scalar(3, &int(2));
        assert!(eval_operator_polynomial(&op, &[int(2)]).unwrap().is_zero());
        let op = Matrix::diagonal(&[int(2), int(0)]);
        assert!(eval_operator_polynomial(&op, &[int(2), int(0)])
            .unwrap()
            .is_zero());
        let nil = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(eval_operator_polynomial(&nil, &[int(0)]).unwrap(), nil);
    }

    #[test]
    fn polynomial_rejects_rectangular() {
        assert_eq!(
            eval_operator_polynomial(&Matrix::zeros(2, 3), &[]),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn diagonal_projectors() {
        let op = Matrix::diagonal(&[int(2), int(0)]);
        let p = idempotent_from_spectrum(&op, &int(2), &[int(0)]).unwrap();
        assert_eq!(p, Matrix::diagonal(&[int(1), int(0)]));
        let q = idempotent_from_spectrum(&op, &int(0), &[int(2)]).unwrap();
        assert_eq!(q, Matrix::diagonal(&[int(0), int(1)]));
    }

    #[test]
    fn repeated_nodes_are_rejected() {
        let op = Matrix::identity(2);
        let err = idempotent_from_spectrum(&op, &int(1), &[int(0), int(1)]).unwrap_err();
        assert!(matches!(
            err,
            Error::DegenerateSpectrum {
                first: 0,
                second: 2,
                ..
            }
        ));
    }

    #[test]
    fn charpoly_of_companion_like_matrix() {
        // [[2,1],[1,2]] has x^2 - 4x + 3
        let m = Matrix::from_i64(&[&[2, 1], &[1, 2]]);
        assert_eq!(
            characteristic_polynomial(&m).unwrap(),
            vec![int(3), int(-4), int(1)]
        );
        let m = Matrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(
            characteristic_polynomial(&m).unwrap(),
            vec![int(-1), int(0), int(0), int(1)]
        );
    }

    #[test]
    fn spectrum_with_fractions_and_irrational_part() {
        let m = Matrix::from_dense(&[
            vec![rat(1, 2), int(0), int(0), int(0)],
            vec![int(0), rat(1, 2), int(0), int(0)],
            vec![int(0), int(0), int(0), int(2)],
            vec![int(0), int(0), int(1), int(0)],
        ]);
        let s = rational_spectrum(&m).unwrap();
        assert_eq!(s.roots, vec![(rat(1, 2), 2)]);
        assert_eq!(s.unresolved_degree, 2);
    }

    #[test]
    fn spectrum_of_jordan_block_counts_algebraic_multiplicity() {
        let m = Matrix::from_i64(&[&[-3, 1], &[0, -3]]);
        let s = rational_spectrum(&m).unwrap();
        assert_eq!(s.roots, vec![(int(-3), 2)]);
        assert_eq!(s.unresolved_degree, 0);
    }
}
