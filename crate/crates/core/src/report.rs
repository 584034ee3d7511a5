//! Reports behind the command-line tool, as serializable documents with a
//! plain-text table rendering.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::char_identity::{
    adjoint_matrices, check_characteristic_identity, predicted_adjoint_roots,
    predicted_dual_adjoint_roots, predicted_sigma2_multiplicities, predicted_sigma2_roots,
    sigma2_tilde, tensor_projector, SpectrumReport,
};
use crate::error::{Error, Result};
use crate::gl_modules::{
    build_irreducible_capped, pieri_index_set, weyl_dimension, DominantLabels, GlModule,
    Representation, Weight,
};
use crate::irreducibility::{
    criterion, jordan_holder, main_theorem_verdict, q_coefficient, q_coefficient_bruteforce,
    CriterionWitness, JordanHolderReport, PseudoSubmodule, Verdict,
};
use crate::linalg::{display_rational, rank, Rational};
use crate::projective_action::ProjectiveModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRow {
    pub c: Vec<u32>,
    pub weight: Weight,
    #[serde(with = "crate::linalg::rational::serde_rational")]
    pub q: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    pub degree: u32,
    pub rank: usize,
    pub full: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub labels: DominantLabels,
    pub highest_weight: Weight,
    pub dim: usize,
    pub degree_cap: u32,
    pub criterion: CriterionWitness,
    pub main_theorem_verdict: Verdict,
    pub q_table: Vec<QRow>,
    pub ranks: Vec<RankRow>,
    pub jordan_holder: Option<JordanHolderReport>,
}

fn build(labels: &DominantLabels, dim_cap: usize) -> Result<GlModule> {
    build_irreducible_capped(labels, dim_cap)
}

/// Criterion, `q_c` table and graded ranks through `degree_cap`, every
/// closed-form value matched against the action.
pub fn analyze(labels: &DominantLabels, degree_cap: u32, dim_cap: usize) -> Result<AnalyzeReport> {
    let module = build(labels, dim_cap)?;
    let mu = module.highest_weight().clone();
    let dim = module.dim();
    let pm = ProjectiveModule::new(module);
    let witness = criterion(&mu)?;
    let literal = main_theorem_verdict(&mu)?;
    if literal != witness.verdict {
        return Err(Error::ConsistencyViolation(format!(
            "criterion formulations disagree for {labels}"
        )));
    }
    let sub = PseudoSubmodule::new(&pm);
    let mut q_table = Vec::new();
    for j in 0..=degree_cap {
        for c in pieri_index_set(&mu, j)?.entries {
            let q = q_coefficient(&mu, &c)?;
            let brute = q_coefficient_bruteforce(&sub, &c)?;
            if q != brute {
                return Err(Error::ConsistencyViolation(format!(
                    "q at {c:?} is {} by formula and {} by the action",
                    display_rational(&q),
                    display_rational(&brute)
                )));
            }
            q_table.push(QRow { weight: mu.shifted(&c), c, q });
        }
    }
    let ranks: Vec<RankRow> = sub
        .ranks(degree_cap)
        .into_iter()
        .enumerate()
        .map(|(j, rank)| RankRow { degree: j as u32, rank, full: sub.full_dim(j as u32) })
        .collect();
    let deficient = ranks.iter().find(|r| r.rank < r.full).map(|r| u64::from(r.degree));
    let predicted = witness
        .first_failure_degree
        .filter(|&s| s <= u64::from(degree_cap));
    if deficient != predicted {
        return Err(Error::ConsistencyViolation(format!(
            "first rank deficiency {deficient:?}, criterion predicts {predicted:?}"
        )));
    }
    let jordan_holder = match witness.verdict {
        Verdict::Reducible => Some(jordan_holder(&pm, degree_cap)?),
        Verdict::Irreducible => None,
    };
    Ok(AnalyzeReport {
        labels: labels.clone(),
        highest_weight: mu,
        dim,
        degree_cap,
        criterion: witness,
        main_theorem_verdict: literal,
        q_table,
        ranks,
        jordan_holder,
    })
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Irreducible => "irreducible",
        Verdict::Reducible => "reducible",
    }
}

fn exponents(c: &[u32]) -> String {
    let parts: Vec<String> = c.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for AnalyzeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "module      {}", self.labels)?;
        writeln!(f, "mu          {}", self.highest_weight)?;
        writeln!(f, "dim V       {}", self.dim)?;
        writeln!(f, "verdict     {}", verdict_name(self.criterion.verdict))?;
        for p in &self.criterion.failing_pairs {
            writeln!(f, "  failing pair i={} s={}", p.i, p.s)?;
        }
        writeln!(f)?;
        writeln!(f, "{:<12} {:<24} {:>10}", "c", "mu + c", "q_c")?;
        for row in &self.q_table {
            writeln!(
                f,
                "{:<12} {:<24} {:>10}",
                exponents(&row.c),
                row.weight.to_string(),
                display_rational(&row.q)
            )?;
        }
        writeln!(f)?;
        writeln!(f, "{:>6} {:>8} {:>8}", "degree", "rank", "full")?;
        for row in &self.ranks {
            writeln!(f, "{:>6} {:>8} {:>8}", row.degree, row.rank, row.full)?;
        }
        if let Some(jh) = &self.jordan_holder {
            writeln!(f)?;
            write!(f, "{jh}")?;
        }
        Ok(())
    }
}

impl fmt::Display for JordanHolderReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "series      {{0}} ⊂ U(P)(1⊗V) ⊂ 𝒜⊗V")?;
        writeln!(f, "k           {}", self.k)?;
        writeln!(f, "i0          {}", self.i0)?;
        writeln!(f, "residual    {} (r = {})", self.residual_weight, self.r)?;
        writeln!(f, "quotient    {}", self.quotient_description)?;
        let dims: Vec<String> = self
            .submodule_dims_by_degree
            .iter()
            .map(usize::to_string)
            .collect();
        writeln!(f, "submodule   [{}]", dims.join(", "))?;
        match (&self.finite_highest_weight, self.finite_dimension) {
            (Some(labels), Some(dim)) => {
                writeln!(f, "finite      yes, labels {labels:?}, dimension {dim}")?
            }
            _ => writeln!(f, "finite      no")?,
        }
        for finding in &self.findings {
            writeln!(f, "finding     {finding}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeRow {
    pub c: Vec<u32>,
    pub weight: Weight,
    pub dim: u128,
    #[serde(with = "crate::linalg::rational::serde_rational")]
    pub q: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectorRow {
    pub r: usize,
    pub rank: usize,
    pub expected: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub labels: DominantLabels,
    pub degree: u32,
    pub rows: Vec<DecomposeRow>,
    /// Ranks of the projectors onto `V(μ + ε_r)`, filled for degree 1.
    pub projector_ranks: Vec<ProjectorRow>,
}

/// Summands of `V ⊗ V(kε₁)` with dimensions and `q_c`.
pub fn decompose(labels: &DominantLabels, degree: u32, dim_cap: usize) -> Result<DecomposeReport> {
    let module = build(labels, dim_cap)?;
    let mu = module.highest_weight().clone();
    let mut rows = Vec::new();
    for c in pieri_index_set(&mu, degree)?.entries {
        let weight = mu.shifted(&c);
        rows.push(DecomposeRow {
            dim: weyl_dimension(&weight)?,
            q: q_coefficient(&mu, &c)?,
            weight,
            c,
        });
    }
    let mut projector_ranks = Vec::new();
    if degree == 1 {
        for r in 1..=module.n() {
            let p = tensor_projector(&module, r, false)?;
            let mut c = vec![0u32; module.n()];
            c[r - 1] = 1;
            let expected = rows.iter().find(|row| row.c == c).map_or(0, |row| row.dim);
            let row = ProjectorRow { r, rank: rank(&p), expected };
            if row.rank as u128 != expected {
                return Err(Error::ConsistencyViolation(format!(
                    "projector {r} has rank {}, the summand has dimension {expected}",
                    row.rank
                )));
            }
            projector_ranks.push(row);
        }
    }
    Ok(DecomposeReport { labels: labels.clone(), degree, rows, projector_ranks })
}

impl fmt::Display for DecomposeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "module      {}", self.labels)?;
        writeln!(f, "degree      {}", self.degree)?;
        writeln!(f)?;
        writeln!(f, "{:<12} {:<24} {:>8} {:>10}", "c", "mu + c", "dim", "q_c")?;
        for row in &self.rows {
            writeln!(
                f,
                "{:<12} {:<24} {:>8} {:>10}",
                exponents(&row.c),
                row.weight.to_string(),
                row.dim,
                display_rational(&row.q)
            )?;
        }
        if !self.projector_ranks.is_empty() {
            writeln!(f)?;
            writeln!(f, "{:>3} {:>8} {:>8}", "r", "rank", "dim")?;
            for row in &self.projector_ranks {
                writeln!(f, "{:>3} {:>8} {:>8}", row.r, row.rank, row.expected)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub labels: DominantLabels,
    pub dim: usize,
    pub sigma2: SpectrumReport,
    pub predicted_multiplicities: Vec<usize>,
    pub adjoint: SpectrumReport,
    pub dual_adjoint: SpectrumReport,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.sigma2.residual_zero
            && self.adjoint.residual_zero
            && self.dual_adjoint.residual_zero
            && self.sigma2.multiplicities == self.predicted_multiplicities
    }
}

/// Characteristic identities of `σ̃₂`, `M` and `M̃`. A failing identity is a
/// consistency violation.
pub fn verify_identity(labels: &DominantLabels, dim_cap: usize) -> Result<IdentityReport> {
    let module = build(labels, dim_cap)?;
    let mu = module.highest_weight();
    let (m, m_tilde) = adjoint_matrices(&module);
    let report = IdentityReport {
        labels: labels.clone(),
        dim: module.dim(),
        sigma2: check_characteristic_identity(&sigma2_tilde(&module), &predicted_sigma2_roots(mu))?,
        predicted_multiplicities: predicted_sigma2_multiplicities(mu)?,
        adjoint: check_characteristic_identity(&m, &predicted_adjoint_roots(mu))?,
        dual_adjoint: check_characteristic_identity(&m_tilde, &predicted_dual_adjoint_roots(mu))?,
    };
    if !report.holds() {
        return Err(Error::ConsistencyViolation(format!(
            "characteristic identity fails for {labels}"
        )));
    }
    Ok(report)
}

fn spectrum_line(name: &str, s: &SpectrumReport) -> String {
    let mut line = format!("{name:<8} residual {}", if s.residual_zero { "zero" } else { "NONZERO" });
    for (root, m) in s.roots.iter().zip(&s.multiplicities) {
        let _ = write!(line, "  {}:{m}", display_rational(root));
    }
    line
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "module      {}", self.labels)?;
        writeln!(f, "dim V       {}", self.dim)?;
        writeln!(f, "{}", spectrum_line("sigma2", &self.sigma2))?;
        writeln!(f, "{}", spectrum_line("M", &self.adjoint))?;
        writeln!(f, "{}", spectrum_line("M~", &self.dual_adjoint))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_modules::DEFAULT_DIM_CAP;
    use crate::linalg::{int, rat};

    fn labels(a: &[u32], b: Rational) -> DominantLabels {
        DominantLabels::new(a.to_vec(), b)
    }

    #[test]
    fn analyze_trivial() {
        let r = analyze(&labels(&[0], int(0)), 2, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(r.criterion.verdict, Verdict::Reducible);
        let jh = r.jordan_holder.unwrap();
        assert_eq!(jh.finite_dimension, Some(1));
        assert_eq!(r.ranks[1], RankRow { degree: 1, rank: 0, full: 2 });
    }

    #[test]
    fn analyze_vector_half() {
        let r = analyze(&labels(&[1], rat(1, 2)), 2, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(r.highest_weight, Weight::new(vec![rat(3, 4), rat(-1, 4)]));
        assert_eq!(r.criterion.verdict, Verdict::Irreducible);
        assert!(r.q_table.iter().all(|row| row.q != int(0)));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<AnalyzeReport>(&text).unwrap(), r);
    }

    #[test]
    fn analyze_sl2_polynomials() {
        let r = analyze(&labels(&[], int(0)), 3, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(r.dim, 1);
        assert!(r.to_string().contains("reducible"));
    }

    #[test]
    fn decompose_rows() {
        let r = decompose(&labels(&[1], int(1)), 1, DEFAULT_DIM_CAP).unwrap();
        let rows: Vec<(Vec<u32>, u128, Rational)> =
            r.rows.iter().map(|x| (x.c.clone(), x.dim, x.q.clone())).collect();
        assert_eq!(rows, vec![(vec![1, 0], 3, int(2)), (vec![0, 1], 1, int(0))]);
        assert_eq!(r.projector_ranks.len(), 2);
        let r = decompose(&labels(&[1], int(1)), 0, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].q, int(1));
        let r = decompose(&labels(&[0, 0], int(0)), 2, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].c, vec![2, 0, 0]);
    }

    #[test]
    fn identity_report() {
        let r = verify_identity(&labels(&[1, 0], int(1)), DEFAULT_DIM_CAP).unwrap();
        assert!(r.holds());
        assert_eq!(r.sigma2.total_multiplicity(), 9);
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<IdentityReport>(&text).unwrap(), r);
    }
}
