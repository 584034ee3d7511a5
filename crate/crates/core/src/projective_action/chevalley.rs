use super::checks::commutator_on_degree;
use super::module::ProjectiveModule;
use super::witt::WittElement;
use crate::error::{Error, Result};
use crate::linalg::int;

/// Chevalley generators of sl(n+1) inside the projective subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleySet {
    pub e: Vec<WittElement>,
    pub f: Vec<WittElement>,
    pub h: Vec<WittElement>,
}

/// `h_i = x_i∂_i − x_{i+1}∂_{i+1}`, `e_i = x_i∂_{i+1}`, `f_i = x_{i+1}∂_i` for
/// `i < n`; `h_n = Σ x_j∂_j + x_n∂_n`, `e_n = p_n`, `f_n = −∂_n`.
pub fn chevalley_generators(n: usize) -> Result<ChevalleySet> {
    if n == 0 {
        return Err(Error::InvalidLabels("n must be at least 1".into()));
    }
    let mut set = ChevalleySet {
        e: Vec::with_capacity(n),
        f: Vec::with_capacity(n),
        h: Vec::with_capacity(n),
    };
    for i in 0..n - 1 {
        set.h.push(
            WittElement::x_partial(n, i, i).add_scaled(&WittElement::x_partial(n, i + 1, i + 1), &int(-1)),
        );
        set.e.push(WittElement::x_partial(n, i, i + 1));
        set.f.push(WittElement::x_partial(n, i + 1, i));
    }
    set.h
        .push(WittElement::euler(n).add(&WittElement::x_partial(n, n - 1, n - 1)));
    set.e.push(WittElement::pseudo_translation(n, n - 1));
    set.f.push(WittElement::partial(n, n - 1).neg());
    Ok(set)
}

/// Cartan matrix of type `A_n`.
pub fn cartan_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

impl ChevalleySet {
    pub fn n(&self) -> usize {
        self.h.len()
    }

    /// `(x, y, expected [x, y], description)` for every defining relation.
    fn relations(&self) -> Vec<(&WittElement, &WittElement, WittElement, String)> {
        let n = self.n();
        let a = cartan_matrix(n);
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                out.push((&self.h[i], &self.h[j], WittElement::zero(n), format!("[h{},h{}]", i + 1, j + 1)));
                out.push((
                    &self.h[i],
                    &self.e[j],
                    self.e[j].scale(&int(a[i][j])),
                    format!("[h{},e{}]", i + 1, j + 1),
                ));
                out.push((
                    &self.h[i],
                    &self.f[j],
                    self.f[j].scale(&int(-a[i][j])),
                    format!("[h{},f{}]", i + 1, j + 1),
                ));
                let expected = if i == j { self.h[i].clone() } else { WittElement::zero(n) };
                out.push((&self.e[i], &self.f[j], expected, format!("[e{},f{}]", i + 1, j + 1)));
            }
        }
        out
    }

    /// Relations checked on vector fields, including the Serre relations.
    pub fn symbolic_failures(&self) -> Vec<String> {
        let n = self.n();
        let a = cartan_matrix(n);
        let mut failures: Vec<String> = self
            .relations()
            .into_iter()
            .filter(|(x, y, expected, _)| x.bracket(y) != *expected)
            .map(|(_, _, _, name)| name)
            .collect();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let power = (1 - a[i][j]) as usize;
                for (gens, label) in [(&self.e, "e"), (&self.f, "f")] {
                    let mut acc = gens[j].clone();
                    for _ in 0..power {
                        acc = gens[i].bracket(&acc);
                    }
                    if !acc.is_zero() {
                        failures.push(format!("Serre ad({label}{})^{power} {label}{}", i + 1, j + 1));
                    }
                }
            }
        }
        failures
    }

    /// Relations checked as operators on every graded piece up to `k_max`,
    /// with the expected side built from the Cartan matrix.
    pub fn operator_failures(&self, pm: &ProjectiveModule, k_max: u32) -> Result<Vec<String>> {
        let mut failures = Vec::new();
        for (x, y, expected, name) in self.relations() {
            for k in 0..=k_max {
                let lhs = commutator_on_degree(pm, x, y, k)?;
                let rhs = if expected.is_zero() {
                    lhs.scale(&int(0))
                } else {
                    pm.operator_matrix_unlabeled(&expected, k)?
                };
                if lhs != rhs {
                    failures.push(format!("{name} at degree {k}"));
                    break;
                }
            }
        }
        Ok(failures)
    }
}
