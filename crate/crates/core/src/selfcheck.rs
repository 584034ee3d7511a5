//! Invariant suites run over a sweep of modules, with optional fault
//! injection to confirm that each suite can fail.

use std::fmt;

use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::char_identity::{
    adjoint_matrices, check_characteristic_identity, predicted_adjoint_roots,
    predicted_dual_adjoint_roots, predicted_sigma2_multiplicities, predicted_sigma2_roots,
    sigma2_tilde, tensor_projector,
};
use crate::error::Result;
use crate::gl_modules::{
    build_irreducible_capped, check_representation, in_pieri_set, pieri_index_set,
    weyl_dimension, DominantLabels, GlModule, Representation,
};
use crate::irreducibility::{
    criterion, criterion_equivalence_check, jordan_holder, q_coefficient,
    q_coefficient_bruteforce, residual_summands, tensor_action_map, tensor_action_source,
    PseudoSubmodule, Verdict,
};
use crate::linalg::{int, rank, rat, Matrix, Rational};
use crate::projective_action::{
    bracket_consistency_failures, chevalley_generators, derivative_identity_sides,
    triangle_delta_with_shift, ProjectiveModule, SpanningOp,
};

/// Deliberate defects that the suites must detect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fault {
    /// Use `+∂_n` in place of `f_n = −∂_n`.
    FlipFnSign,
    /// Drop the `k − 1` term from the diagonal of `Δᵏ`.
    DropDeltaShift,
    /// Add 1 to the `i`-th (0-based) root of the `σ̃₂` identity.
    PerturbRoot(usize),
    /// Flip the sign of the `V`-terms in the action of `p_i`.
    FlipTwistSign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Representation,
    BracketConsistency,
    Chevalley,
    DeltaIdentity,
    CharacteristicIdentity,
    AdjointIdentities,
    Projectors,
    PieriDimension,
    QCoefficient,
    Criterion,
    JordanHolder,
    Intertwiner,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Representation,
        Suite::BracketConsistency,
        Suite::Chevalley,
        Suite::DeltaIdentity,
        Suite::CharacteristicIdentity,
        Suite::AdjointIdentities,
        Suite::Projectors,
        Suite::PieriDimension,
        Suite::QCoefficient,
        Suite::Criterion,
        Suite::JordanHolder,
        Suite::Intertwiner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Representation => "representation",
            Suite::BracketConsistency => "bracket_consistency",
            Suite::Chevalley => "chevalley",
            Suite::DeltaIdentity => "delta_identity",
            Suite::CharacteristicIdentity => "characteristic_identity",
            Suite::AdjointIdentities => "adjoint_identities",
            Suite::Projectors => "projectors",
            Suite::PieriDimension => "pieri_dimension",
            Suite::QCoefficient => "q_coefficient",
            Suite::Criterion => "criterion",
            Suite::JordanHolder => "jordan_holder",
            Suite::Intertwiner => "intertwiner",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct SelfCheckConfig {
    pub n_max: usize,
    pub degree_cap: u32,
    pub seed: u64,
    /// Points whose module is larger than this are skipped.
    pub dim_cap: usize,
    pub suites: Vec<Suite>,
    pub fault: Option<Fault>,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig {
            n_max: 3,
            degree_cap: 4,
            seed: 0,
            dim_cap: 300,
            suites: Suite::ALL.to_vec(),
            fault: None,
        }
    }
}

/// Central charges of the standard sweep.
pub fn standard_centrals() -> Vec<Rational> {
    vec![int(-2), int(-1), int(0), int(1), int(2), rat(1, 2), rat(-3, 2)]
}

/// All label tuples with entries `≤ max_label` for each `n`, crossed with
/// the given central charges.
pub fn sweep_points(ns: &[usize], max_label: u32, centrals: &[Rational]) -> Vec<DominantLabels> {
    let mut out = Vec::new();
    for &n in ns {
        let mut dynkin = vec![0u32; n.saturating_sub(1)];
        loop {
            for b in centrals {
                out.push(DominantLabels::new(dynkin.clone(), b.clone()));
            }
            let Some(pos) = dynkin.iter().rposition(|&a| a < max_label) else {
                break;
            };
            dynkin[pos] += 1;
            for a in &mut dynkin[pos + 1..] {
                *a = 0;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub suite: Suite,
    pub labels: DominantLabels,
    pub dim: usize,
    pub detail: String,
}

impl Failure {
    /// Command line that rebuilds the failing point.
    pub fn reproducer(&self) -> String {
        let a: Vec<String> = self.labels.dynkin.iter().map(u32::to_string).collect();
        format!(
            "projrep analyze -n {} -a '{}' -b {}  # {}: {}",
            self.labels.n(),
            a.join(","),
            crate::linalg::display_rational(&self.labels.central),
            self.suite,
            self.detail
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCount {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCheckSummary {
    pub seed: u64,
    pub points: usize,
    pub skipped: usize,
    pub counts: Vec<SuiteCount>,
    pub failures: Vec<Failure>,
    /// Threshold-formula findings collected from the composition series.
    pub findings: Vec<String>,
}

impl SelfCheckSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_passed(&self) -> usize {
        self.counts.iter().map(|c| c.passed).sum()
    }

    pub fn total_failed(&self) -> usize {
        self.counts.iter().map(|c| c.failed).sum()
    }

    /// The failure on the smallest module.
    pub fn minimal_failure(&self) -> Option<&Failure> {
        self.failures
            .iter()
            .min_by_key(|f| (f.labels.n(), f.dim, f.suite))
    }

    pub fn failed_suites(&self) -> Vec<Suite> {
        let mut s: Vec<Suite> = self.failures.iter().map(|f| f.suite).collect();
        s.sort();
        s.dedup();
        s
    }
}

struct PointOutcome {
    skipped: bool,
    results: Vec<(Suite, Vec<String>)>,
    dim: usize,
    findings: Vec<String>,
}

pub fn run_selfcheck(config: &SelfCheckConfig) -> SelfCheckSummary {
    let ns: Vec<usize> = (1..=config.n_max).collect();
    let points = sweep_points(&ns, 2, &standard_centrals());
    run_on_points(config, &points)
}

pub fn run_on_points(config: &SelfCheckConfig, points: &[DominantLabels]) -> SelfCheckSummary {
    let outcomes: Vec<PointOutcome> = points
        .par_iter()
        .enumerate()
        .map(|(idx, labels)| check_point(config, labels, idx as u64))
        .collect();
    let mut counts: Vec<SuiteCount> = config
        .suites
        .iter()
        .map(|&suite| SuiteCount { suite, passed: 0, failed: 0 })
        .collect();
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mut skipped = 0;
    for (labels, outcome) in points.iter().zip(outcomes) {
        if outcome.skipped {
            skipped += 1;
            continue;
        }
        for f in outcome.findings {
            findings.push(format!("{labels}: {f}"));
        }
        for (suite, errs) in outcome.results {
            let count = counts.iter_mut().find(|c| c.suite == suite).expect("suite listed");
            if errs.is_empty() {
                count.passed += 1;
            } else {
                count.failed += 1;
                failures.extend(errs.into_iter().map(|detail| Failure {
                    suite,
                    labels: labels.clone(),
                    dim: outcome.dim,
                    detail,
                }));
            }
        }
    }
    SelfCheckSummary {
        seed: config.seed,
        points: points.len(),
        skipped,
        counts,
        failures,
        findings,
    }
}

fn check_point(config: &SelfCheckConfig, labels: &DominantLabels, index: u64) -> PointOutcome {
    let module = match build_irreducible_capped(labels, config.dim_cap) {
        Ok(m) => m,
        Err(_) => {
            return PointOutcome { skipped: true, results: Vec::new(), dim: 0, findings: Vec::new() }
        }
    };
    let mut pm = ProjectiveModule::new(module.clone());
    if config.fault == Some(Fault::FlipTwistSign) {
        pm = pm.with_flipped_twist();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index);
    let mut findings = Vec::new();
    let results = config
        .suites
        .iter()
        .map(|&suite| {
            let errs = match run_suite(suite, config, &module, &pm, &mut rng, &mut findings) {
                Ok(errs) => errs,
                Err(e) => vec![e.to_string()],
            };
            (suite, errs)
        })
        .collect();
    PointOutcome { skipped: false, results, dim: module.dim(), findings }
}

fn run_suite(
    suite: Suite,
    config: &SelfCheckConfig,
    v: &GlModule,
    pm: &ProjectiveModule,
    rng: &mut ChaCha8Rng,
    findings: &mut Vec<String>,
) -> Result<Vec<String>> {
    let cap = config.degree_cap;
    match suite {
        Suite::Representation => Ok(match check_representation(v, Some(v.central())) {
            Ok(()) => Vec::new(),
            Err(e) => vec![e.to_string()],
        }),
        Suite::BracketConsistency => bracket_consistency_failures(pm, cap),
        Suite::Chevalley => chevalley_suite(config, pm),
        Suite::DeltaIdentity => delta_suite(config, pm, rng),
        Suite::CharacteristicIdentity => sigma2_suite(config, v),
        Suite::AdjointIdentities => adjoint_suite(v),
        Suite::Projectors => projector_suite(v),
        Suite::PieriDimension => pieri_suite(v),
        Suite::QCoefficient => q_suite(pm, cap.min(3)),
        Suite::Criterion => criterion_suite(pm, cap),
        Suite::JordanHolder => {
            if criterion(v.highest_weight())?.verdict == Verdict::Irreducible {
                return Ok(Vec::new());
            }
            let report = jordan_holder(pm, cap)?;
            findings.extend(report.findings);
            Ok(Vec::new())
        }
        Suite::Intertwiner => intertwiner_suite(pm, cap.min(2), rng),
    }
}

fn chevalley_suite(config: &SelfCheckConfig, pm: &ProjectiveModule) -> Result<Vec<String>> {
    let mut g = chevalley_generators(pm.n())?;
    if config.fault == Some(Fault::FlipFnSign) {
        let last = g.f.len() - 1;
        g.f[last] = g.f[last].neg();
    }
    let mut failures = g.symbolic_failures();
    failures.extend(g.operator_failures(pm, config.degree_cap.min(2))?);
    Ok(failures)
}

fn delta_suite(
    config: &SelfCheckConfig,
    pm: &ProjectiveModule,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<String>> {
    let n = pm.n();
    let d = pm.dim_v();
    let drop_shift = config.fault == Some(Fault::DropDeltaShift);
    let mut failures = Vec::new();
    for k in 1..=config.degree_cap.min(3) as usize {
        for _ in 0..3 {
            let indices: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
            let i = rng.gen_range(0..n);
            let v_index = rng.gen_range(0..d);
            let (lhs, rhs) = derivative_identity_sides(pm, i, &indices, v_index, |a, b, k| {
                let shift = if drop_shift { int(0) } else { int(i64::from(k)) - int(1) };
                triangle_delta_with_shift(pm, a, b, &shift, 0)
            })?;
            if lhs != rhs {
                failures.push(format!(
                    "∂{} on p{:?}(1⊗v{v_index}) differs from the Δ expansion",
                    i + 1,
                    indices.iter().map(|x| x + 1).collect::<Vec<_>>()
                ));
            }
        }
    }
    Ok(failures)
}

fn sigma2_suite(config: &SelfCheckConfig, v: &GlModule) -> Result<Vec<String>> {
    let mu = v.highest_weight();
    let n = v.n();
    let mut roots = predicted_sigma2_roots(mu);
    if let Some(Fault::PerturbRoot(i)) = config.fault {
        if i < n {
            roots[i] += int(1);
        }
    }
    let report = check_characteristic_identity(&sigma2_tilde(v), &roots)?;
    let mut failures = Vec::new();
    if !report.residual_zero {
        failures.push("nonzero residual of ∏(σ̃₂ − m_i)".into());
    }
    if report.total_multiplicity() != n * v.dim() {
        failures.push(format!(
            "multiplicities sum to {} instead of {}",
            report.total_multiplicity(),
            n * v.dim()
        ));
    }
    if report.multiplicities != predicted_sigma2_multiplicities(mu)? {
        failures.push(format!("multiplicities {:?} differ from Pieri dimensions", report.multiplicities));
    }
    for (i, &m) in report.multiplicities.iter().enumerate() {
        let mut c = vec![0u32; n];
        c[i] = 1;
        if m > 0 && !in_pieri_set(mu, &c)? {
            failures.push(format!("root {} realized outside the Pieri set", i + 1));
        }
    }
    Ok(failures)
}

fn adjoint_suite(v: &GlModule) -> Result<Vec<String>> {
    let mu = v.highest_weight();
    let (m, m_tilde) = adjoint_matrices(v);
    let mut failures = Vec::new();
    if !check_characteristic_identity(&m, &predicted_adjoint_roots(mu))?.residual_zero {
        failures.push("nonzero residual of ∏(M − d_i)".into());
    }
    if !check_characteristic_identity(&m_tilde, &predicted_dual_adjoint_roots(mu))?.residual_zero {
        failures.push("nonzero residual of ∏(M̃ − d̃_i)".into());
    }
    Ok(failures)
}

fn projector_suite(v: &GlModule) -> Result<Vec<String>> {
    let n = v.n();
    let mu = v.highest_weight();
    let size = n * v.dim();
    let mut failures = Vec::new();
    for dual in [false, true] {
        let projectors: Vec<Matrix> = (1..=n)
            .map(|r| tensor_projector(v, r, dual))
            .collect::<Result<_>>()?;
        let mut sum = Matrix::zeros(size, size);
        for (r, p) in projectors.iter().enumerate() {
            if p.mul(p) != *p {
                failures.push(format!("projector {} (dual {dual}) is not idempotent", r + 1));
            }
            for (s, q) in projectors.iter().enumerate() {
                if s > r && !p.mul(q).is_zero() {
                    failures.push(format!("projectors {} and {} (dual {dual}) overlap", r + 1, s + 1));
                }
            }
            let mut c = vec![0i64; n];
            c[r] = if dual { -1 } else { 1 };
            let shifted = crate::gl_modules::Weight::new(
                mu.coords().iter().zip(&c).map(|(x, &d)| x + int(d)).collect(),
            );
            let expected = if shifted.is_dominant() { weyl_dimension(&shifted)? as usize } else { 0 };
            if rank(p) != expected {
                failures.push(format!(
                    "projector {} (dual {dual}) has rank {}, expected {expected}",
                    r + 1,
                    rank(p)
                ));
            }
            sum = sum.add(p);
        }
        if sum != Matrix::identity(size) {
            failures.push(format!("projectors (dual {dual}) do not sum to the identity"));
        }
    }
    Ok(failures)
}

fn pieri_suite(v: &GlModule) -> Result<Vec<String>> {
    let mu = v.highest_weight();
    let n = v.n() as u128;
    let base = weyl_dimension(mu)?;
    let mut failures = Vec::new();
    for k in 0..=4u32 {
        let total: u128 = pieri_index_set(mu, k)?
            .entries
            .iter()
            .map(|c| weyl_dimension(&mu.shifted(c)))
            .sum::<Result<u128>>()?;
        let expected = base * binomial(u128::from(k) + n - 1, n - 1);
        if total != expected {
            failures.push(format!("degree {k}: Pieri dimensions sum to {total}, expected {expected}"));
        }
    }
    Ok(failures)
}

fn q_suite(pm: &ProjectiveModule, j_max: u32) -> Result<Vec<String>> {
    let mu = pm.module().highest_weight();
    let sub = PseudoSubmodule::new(pm);
    let mut failures = Vec::new();
    for j in 0..=j_max {
        for c in pieri_index_set(mu, j)?.entries {
            let closed = q_coefficient(mu, &c)?;
            let brute = q_coefficient_bruteforce(&sub, &c)?;
            if closed != brute {
                failures.push(format!("q at {c:?}: closed form {closed}, action {brute}"));
            }
        }
    }
    Ok(failures)
}

fn criterion_suite(pm: &ProjectiveModule, cap: u32) -> Result<Vec<String>> {
    let mu = pm.module().highest_weight();
    let mut failures = Vec::new();
    if !criterion_equivalence_check(mu)? {
        failures.push("the two formulations of the criterion disagree".into());
    }
    let witness = criterion(mu)?;
    let sub = PseudoSubmodule::new(pm);
    let ranks = sub.ranks(cap);
    let deficient = (0..=cap).find(|&j| ranks[j as usize] < sub.full_dim(j));
    let predicted = witness
        .first_failure_degree
        .filter(|&s| s <= u64::from(cap))
        .map(|s| s as u32);
    if deficient != predicted {
        failures.push(format!(
            "first rank deficiency {deficient:?} through degree {cap}, criterion predicts {predicted:?}"
        ));
    }
    for j in 0..=cap {
        let lost: u128 = residual_summands(mu, j)?
            .entries
            .iter()
            .map(|c| weyl_dimension(&mu.shifted(c)))
            .sum::<Result<u128>>()?;
        if ranks[j as usize] as u128 + lost != sub.full_dim(j) as u128 {
            failures.push(format!("rank identity fails at degree {j}"));
        }
        if j < cap && !sub.is_invariant_at(j) {
            failures.push(format!("submodule not invariant at degree {j}"));
        }
    }
    Ok(failures)
}

fn intertwiner_suite(pm: &ProjectiveModule, j_max: u32, rng: &mut ChaCha8Rng) -> Result<Vec<String>> {
    let n = pm.n();
    let mut failures = Vec::new();
    for j in 0..=j_max {
        let t = tensor_action_map(pm, j);
        let w: Vec<Rational> = (0..t.cols()).map(|_| int(rng.gen_range(-5..=5))).collect();
        let tw = t.mul_vec(&w);
        for s in 0..n {
            for u in 0..n {
                let lhs = t.mul_vec(&tensor_action_source(pm, s, u, j).mul_vec(&w));
                let rhs = pm.spanning_matrix(SpanningOp::XD(s, u), j + 1).mul_vec(&tw);
                if lhs != rhs {
                    failures.push(format!("x{}∂{} does not commute with the p-map at degree {j}", s + 1, u + 1));
                }
            }
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(fault: Option<Fault>) -> SelfCheckSummary {
        let config = SelfCheckConfig { degree_cap: 3, fault, ..SelfCheckConfig::default() };
        let points = sweep_points(&[1, 2], 1, &[int(0), int(1), rat(1, 2), int(-2)]);
        run_on_points(&config, &points)
    }

    #[test]
    fn sweep_point_count() {
        assert_eq!(sweep_points(&[1, 2, 3], 2, &standard_centrals()).len(), 7 * (1 + 3 + 9));
    }

    #[test]
    fn clean_run_passes() {
        let s = small(None);
        assert!(s.passed(), "{:?}", s.failures);
        assert_eq!(s.points, 12);
        assert_eq!(s.skipped, 0);
    }

    #[test]
    fn each_fault_is_caught() {
        assert!(small(Some(Fault::FlipFnSign)).failed_suites().contains(&Suite::Chevalley));
        assert!(small(Some(Fault::DropDeltaShift)).failed_suites().contains(&Suite::DeltaIdentity));
        assert!(small(Some(Fault::FlipTwistSign))
            .failed_suites()
            .contains(&Suite::BracketConsistency));
        for i in 0..2 {
            assert!(small(Some(Fault::PerturbRoot(i)))
                .failed_suites()
                .contains(&Suite::CharacteristicIdentity));
        }
    }

    #[test]
    fn seed_does_not_change_verdicts() {
        let points = sweep_points(&[2], 1, &[int(0), rat(1, 2)]);
        let a = run_on_points(&SelfCheckConfig { seed: 1, degree_cap: 2, ..Default::default() }, &points);
        let b = run_on_points(&SelfCheckConfig { seed: 99, degree_cap: 2, ..Default::default() }, &points);
        assert_eq!(a.counts, b.counts);
    }

    #[test]
    fn reproducer_names_the_point() {
        let s = small(Some(Fault::FlipFnSign));
        let f = s.minimal_failure().unwrap();
        assert!(f.reproducer().starts_with("projrep analyze -n "));
    }
}
