//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use projrep::char_identity::{predicted_sigma2_roots, sigma2_tilde};
use projrep::gl_modules::{
    build_irreducible, pieri_index_set, weyl_dimension, DominantLabels, Representation, Weight,
};
use projrep::irreducibility::{
    corollary_threshold, criterion, jordan_holder, residual_summands, up_submodule_rank,
    PseudoSubmodule, Verdict,
};
use projrep::linalg::{int, rat, rational_spectrum, Rational};
use projrep::projective_action::{bracket_consistency_failures, ProjectiveModule};
use projrep::selfcheck::{run_on_points, sweep_points, Fault, SelfCheckConfig, Suite};

fn centrals() -> Vec<Rational> {
    vec![int(-2), int(-1), int(0), int(1), int(2), rat(1, 2)]
}

fn sweep() -> Vec<DominantLabels> {
    sweep_points(&[1, 2, 3], 2, &centrals())
}

fn sweep_with_n4() -> Vec<DominantLabels> {
    let mut points = sweep();
    for l in sweep_points(&[4], 2, &centrals()) {
        let mu = projrep::gl_modules::weight_from_labels(&l);
        if weyl_dimension(&mu).unwrap() <= 300 {
            points.push(l);
        }
    }
    points
}

fn labels(a: &[u32], b: Rational) -> DominantLabels {
    DominantLabels::new(a.to_vec(), b)
}

fn projective(l: &DominantLabels) -> ProjectiveModule {
    ProjectiveModule::new(build_irreducible(l).unwrap())
}

fn config(suites: &[Suite], degree_cap: u32, fault: Option<Fault>) -> SelfCheckConfig {
    SelfCheckConfig {
        degree_cap,
        suites: suites.to_vec(),
        fault,
        dim_cap: 300,
        ..SelfCheckConfig::default()
    }
}

/// Errors collected by a criterion; empty means pass.
type Outcome = Vec<String>;
type Criterion = (&'static str, fn() -> Outcome);

fn bracket_consistency() -> Outcome {
    let mut errs = Vec::new();
    for l in sweep() {
        let failures = bracket_consistency_failures(&projective(&l), 4).unwrap();
        errs.extend(failures.into_iter().map(|f| format!("{l}: {f}")));
    }
    errs
}

fn characteristic_identity() -> Outcome {
    let points = sweep_with_n4();
    let summary = run_on_points(&config(&[Suite::CharacteristicIdentity], 1, None), &points);
    let mut errs: Outcome = summary.failures.iter().map(|f| f.reproducer()).collect();
    if summary.skipped > 0 {
        errs.push(format!("{} points skipped", summary.skipped));
    }
    // Independent route: the rational spectrum of σ̃₂ from its characteristic
    // polynomial must consist of the predicted roots only.
    for l in sweep() {
        let v = build_irreducible(&l).unwrap();
        if v.n() * v.dim() > 36 {
            continue;
        }
        let spectrum = rational_spectrum(&sigma2_tilde(&v).flattened).unwrap();
        let predicted = predicted_sigma2_roots(v.highest_weight());
        if spectrum.unresolved_degree != 0
            || spectrum.roots.iter().any(|(r, _)| !predicted.contains(r))
        {
            errs.push(format!("{l}: spectrum {:?} outside predicted roots", spectrum.roots));
        }
    }
    errs
}

fn adjoint_identities() -> Outcome {
    let points = sweep_with_n4();
    let summary = run_on_points(
        &config(&[Suite::AdjointIdentities, Suite::Projectors], 1, None),
        &points,
    );
    summary.failures.iter().map(|f| f.reproducer()).collect()
}

fn q_coefficients() -> Outcome {
    let summary = run_on_points(&config(&[Suite::QCoefficient], 3, None), &sweep());
    summary.failures.iter().map(|f| f.reproducer()).collect()
}

fn main_theorem() -> Outcome {
    let summary = run_on_points(&config(&[Suite::Criterion], 4, None), &sweep());
    let mut errs: Outcome = summary.failures.iter().map(|f| f.reproducer()).collect();

    let trivial = criterion(&Weight::zero(2)).unwrap();
    if trivial.verdict != Verdict::Reducible || trivial.first_failure_degree != Some(1) {
        errs.push("trivial module: expected first failure at degree 1".into());
    }
    let vector = projective(&labels(&[1], int(1)));
    let mu = vector.module().highest_weight().clone();
    if residual_summands(&mu, 1).unwrap().entries != vec![vec![0, 1]]
        || mu.shifted(&[0, 1]) != Weight::from_i64(&[1, 1])
        || up_submodule_rank(&vector, 1) != 3
    {
        errs.push("n=2 a=(1) b=1: expected residual V(1,1) at degree 1".into());
    }
    let half = projective(&labels(&[0], rat(1, 2)));
    let sub = PseudoSubmodule::new(&half);
    if criterion(half.module().highest_weight()).unwrap().verdict != Verdict::Irreducible {
        errs.push("n=2 b=1/2: criterion should give irreducible".into());
    }
    for j in 0..=6 {
        if sub.rank(j) != sub.full_dim(j) {
            errs.push(format!("n=2 b=1/2: rank deficient at degree {j}"));
        }
    }
    errs
}

fn jordan_holder_structure() -> Outcome {
    let mut errs = Vec::new();
    let mut reducible = 0;
    for l in sweep() {
        let pm = projective(&l);
        let mu = pm.module().highest_weight().clone();
        let witness = criterion(&mu).unwrap();
        if witness.verdict == Verdict::Irreducible {
            continue;
        }
        reducible += 1;
        match jordan_holder(&pm, 4) {
            Ok(report) => {
                let first = witness.first_failure_degree.unwrap();
                match corollary_threshold(&mu) {
                    Some((_, k)) if k + 1 == first => {}
                    other => errs.push(format!(
                        "{l}: threshold formula {other:?}, first failure {first}"
                    )),
                }
                if report.finite_dim_flag && report.finite_dimension.is_none() {
                    errs.push(format!("{l}: finite flag without a dimension"));
                }
            }
            Err(e) => errs.push(format!("{l}: {e}")),
        }
    }
    if reducible == 0 {
        errs.push("sweep contains no reducible case".into());
    }
    errs
}

fn pieri_dimensions() -> Outcome {
    let mut errs = Vec::new();
    for l in sweep_with_n4() {
        let mu = projrep::gl_modules::weight_from_labels(&l);
        let n = mu.n() as u128;
        let base = weyl_dimension(&mu).unwrap();
        for k in 0..=4u128 {
            let total: u128 = pieri_index_set(&mu, k as u32)
                .unwrap()
                .entries
                .iter()
                .map(|c| weyl_dimension(&mu.shifted(c)).unwrap())
                .sum();
            let choose = (0..n - 1).fold(1u128, |acc, i| acc * (k + n - 1 - i) / (i + 1));
            if total != base * choose {
                errs.push(format!("{l}: degree {k} gives {total}, expected {}", base * choose));
            }
        }
    }
    errs
}

fn mutation_sensitivity() -> Outcome {
    let points = sweep_points(&[1, 2, 3], 1, &[int(0), int(1), rat(1, 2), int(-2)]);
    let mut errs = Vec::new();
    let mut faults = vec![
        (Fault::FlipFnSign, Suite::Chevalley),
        (Fault::DropDeltaShift, Suite::DeltaIdentity),
        (Fault::FlipTwistSign, Suite::BracketConsistency),
    ];
    for i in 0..3 {
        faults.push((Fault::PerturbRoot(i), Suite::CharacteristicIdentity));
    }
    for (fault, suite) in faults {
        let summary = run_on_points(&config(&[suite], 2, Some(fault)), &points);
        if summary.passed() {
            errs.push(format!("{fault:?} went undetected by {suite}"));
        }
    }
    let clean = run_on_points(
        &config(
            &[
                Suite::Chevalley,
                Suite::DeltaIdentity,
                Suite::BracketConsistency,
                Suite::CharacteristicIdentity,
            ],
            2,
            None,
        ),
        &points,
    );
    if !clean.passed() {
        errs.push("unmutated suites fail on the mutation sweep".into());
    }
    errs
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("bracket consistency through degree 4", bracket_consistency),
        ("characteristic identity of sigma2", characteristic_identity),
        ("adjoint identities and projectors", adjoint_identities),
        ("q_c closed form equals action", q_coefficients),
        ("irreducibility criterion", main_theorem),
        ("composition series structure", jordan_holder_structure),
        ("Pieri dimension identity", pieri_dimensions),
        ("mutation sensitivity", mutation_sensitivity),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let errs = check();
        let status = if errs.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {status} {name} ({:.1}s)",
            idx + 1,
            start.elapsed().as_secs_f64()
        );
        for e in errs.iter().take(5) {
            println!("    {e}");
        }
        if !errs.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
