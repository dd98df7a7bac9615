//! Acceptance criteria. Runs as a plain binary so that every criterion prints
//! a PASS/FAIL line; exits non-zero if any criterion fails.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use eigenfactor::analysis::{dense_oracle, robustness_harness, AnalysisError, RobustnessConfig};
use eigenfactor::graph::{
    load_edges, load_registry, CitationEdge, CrossCitationMatrix, Journal, JournalRegistry,
};
use eigenfactor::output::{write_rankings_csv, write_rankings_json, write_robustness, Format};
use eigenfactor::ranking::{
    compute, compute_rankings, ArticleVector, DampingParameters, DanglingTreatment,
    NormalizedMatrix, PatchedMatrix, RankingError, TraversalOperator,
};
use eigenfactor::synthetic::{Community, Network, RandomNetwork, TwoCommunityNetwork};

const ALPHAS: [f64; 3] = [0.5, 0.85, 0.99];
const INSTANCES: usize = 200;

struct Instance {
    net: Network,
    alpha: f64,
}

/// 200 seeded instances covering n in 2..=20, density 0.1..0.9 and the
/// three damping factors.
fn instances() -> Vec<Instance> {
    (0..INSTANCES)
        .map(|k| {
            let n = 2 + k % 19;
            let density = 0.1 + 0.1 * ((k / 19) % 9) as f64;
            let mut spec = RandomNetwork::new(n, density);
            spec.zero_articles = 0.1;
            spec.self_citations = 0.2;
            Instance {
                net: spec.generate(0xE16E_0000 + k as u64),
                alpha: ALPHAS[k % 3],
            }
        })
        .collect()
}

fn linf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn matrix(net: &Network) -> CrossCitationMatrix {
    CrossCitationMatrix::build(&net.registry, &net.edges).expect("generated edges resolve")
}

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn sum_rule(cases: &[Instance]) -> Outcome {
    let start = Instant::now();
    let (mut worst, mut raised) = (0.0f64, 0usize);
    for (k, case) in cases.iter().enumerate() {
        let z = matrix(&case.net);
        let params = DampingParameters::with_alpha(case.alpha).unwrap();
        match compute(&case.net.registry, &z, &params) {
            Ok(run) => worst = worst.max((run.eigenfactor.iter().sum::<f64>() - 100.0).abs()),
            Err(RankingError::NoInternalCitations) => {
                // must coincide with H pi* being the zero vector
                let h = NormalizedMatrix::from_cross_citations(&z);
                let a = ArticleVector::from_registry(&case.net.registry).unwrap();
                let pi = eigenfactor::ranking::leading_eigenvector(
                    PatchedMatrix::new(&h, &a).unwrap(),
                    &params,
                )
                .unwrap();
                if h.multiply(&pi.pi).iter().any(|&v| v != 0.0) {
                    return Err(format!("instance {k}: NoInternalCitations with H pi* != 0"));
                }
                raised += 1;
            }
            Err(e) => return Err(format!("instance {k}: unexpected {e}")),
        }
    }
    let elapsed = start.elapsed();
    check(
        worst <= 1e-9 && elapsed < Duration::from_secs(10),
        format!("max |sum EF - 100| = {worst:.2e} (<= 1e-9), {raised} NoInternalCitations, {elapsed:.2?} (< 10 s)"),
    )
}

fn oracle_equivalence(cases: &[Instance]) -> Outcome {
    let start = Instant::now();
    let (mut pi_err, mut ef_err, mut compared) = (0.0f64, 0.0f64, 0usize);
    for (k, case) in cases.iter().enumerate() {
        let z = matrix(&case.net);
        let params = DampingParameters::with_alpha(case.alpha).unwrap();
        let run = compute(&case.net.registry, &z, &params);
        let oracle = dense_oracle(&z, &case.net.registry, case.alpha);
        match (run, oracle) {
            (Ok(run), Ok(oracle)) => {
                pi_err = pi_err.max(linf(&run.stationary.pi, &oracle.pi));
                ef_err = ef_err.max(linf(&run.eigenfactor, &oracle.eigenfactor));
                compared += 1;
            }
            (
                Err(RankingError::NoInternalCitations),
                Err(AnalysisError::Ranking(RankingError::NoInternalCitations)),
            ) => {}
            (run, oracle) => {
                return Err(format!(
                    "instance {k}: outcomes differ (power iteration ok = {}, oracle ok = {})",
                    run.is_ok(),
                    oracle.is_ok()
                ))
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        pi_err <= 1e-10 && ef_err <= 1e-9 && elapsed < Duration::from_secs(30),
        format!(
            "{compared} compared, L_inf pi = {pi_err:.2e} (<= 1e-10), L_inf EF = {ef_err:.2e} (<= 1e-9), {elapsed:.2?} (< 30 s)"
        ),
    )
}

/// Everything the CLI would emit for one instance.
fn emitted(registry: &JournalRegistry, edges: &[CitationEdge], alpha: f64) -> Vec<u8> {
    let z = CrossCitationMatrix::build(registry, edges).unwrap();
    let params = DampingParameters::with_alpha(alpha).unwrap();
    match compute_rankings(registry, &z, &params) {
        Ok(result) => {
            let mut out = Vec::new();
            write_rankings_csv(&mut out, &result, None).unwrap();
            write_rankings_json(&mut out, &result, None).unwrap();
            out
        }
        Err(e) => format!("error: {e}").into_bytes(),
    }
}

fn self_citation_invariance(cases: &[Instance]) -> Outcome {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for (k, case) in cases.iter().enumerate() {
        let mut padded = case.net.edges.clone();
        for journal in case.net.registry.iter() {
            if rng.random_bool(0.6) {
                padded.push(CitationEdge::new(
                    journal.id.clone(),
                    journal.id.clone(),
                    rng.random_range(1..=10_000),
                ));
            }
        }
        let before = emitted(&case.net.registry, &case.net.edges, case.alpha);
        let after = emitted(&case.net.registry, &padded, case.alpha);
        if before != after {
            return Err(format!("instance {k}: output changed after adding diagonal mass"));
        }
    }
    Ok(format!("{} instances, emitted CSV+JSON byte-identical", cases.len()))
}

fn scale_invariance(cases: &[Instance]) -> Outcome {
    let mut worst = 0.0f64;
    for (k, case) in cases.iter().enumerate() {
        let params = DampingParameters::with_alpha(case.alpha).unwrap();
        let base = compute(&case.net.registry, &matrix(&case.net), &params);
        for c in [2u64, 10, 1000] {
            let scaled: Vec<CitationEdge> = case
                .net
                .edges
                .iter()
                .map(|e| CitationEdge::new(e.citing.clone(), e.cited.clone(), e.count * c))
                .collect();
            let z = CrossCitationMatrix::build(&case.net.registry, &scaled).unwrap();
            match (&base, compute(&case.net.registry, &z, &params)) {
                (Ok(x), Ok(y)) => worst = worst.max(linf(&x.eigenfactor, &y.eigenfactor)),
                (Err(x), Err(y)) if *x == y => {}
                _ => return Err(format!("instance {k}, c = {c}: outcomes differ")),
            }
        }
    }
    check(worst <= 1e-12, format!("max L_inf EF change = {worst:.2e} (<= 1e-12)"))
}

fn dangling_handling() -> Outcome {
    // D is cited by everyone but cites nothing.
    let registry = JournalRegistry::new(
        [("A", 40), ("B", 25), ("C", 25), ("D", 10)]
            .iter()
            .map(|(id, n)| Journal::new(*id, *id, *n))
            .collect(),
    )
    .unwrap();
    let edges = [
        CitationEdge::new("A", "B", 5),
        CitationEdge::new("A", "D", 12),
        CitationEdge::new("B", "A", 7),
        CitationEdge::new("B", "C", 2),
        CitationEdge::new("B", "D", 9),
        CitationEdge::new("C", "A", 3),
        CitationEdge::new("C", "D", 6),
    ];
    let z = CrossCitationMatrix::build(&registry, &edges).unwrap();
    let params = DampingParameters::default();
    let run = compute(&registry, &z, &params).map_err(|e| e.to_string())?;
    if run.normalized.dangling() != [3] {
        return Err(format!("dangling set {:?}, expected [3]", run.normalized.dangling()));
    }

    let patched = PatchedMatrix::new(&run.normalized, &run.articles).unwrap();
    let col_err = patched
        .column_sums()
        .iter()
        .map(|s| (s - 1.0).abs())
        .fold(0.0, f64::max);

    // Without the substitution the walk leaks whatever mass sits on D.
    let leaky = TraversalOperator::new(patched, params.alpha())
        .unwrap()
        .with_dangling(DanglingTreatment::Drop);
    let mut x = run.articles.to_vec();
    let mut masses = vec![1.0];
    for _ in 0..50 {
        x = leaky.apply(&x).unwrap();
        masses.push(x.iter().sum());
    }
    let decays = masses.windows(2).all(|w| w[1] < w[0]);
    let final_mass = *masses.last().unwrap();

    check(
        col_err <= 1e-12 && decays && final_mass < 0.9,
        format!(
            "converged in {} iterations, max |col sum - 1| = {col_err:.1e}, walk mass without substitution 1 -> {final_mass:.4} after 50 steps",
            run.stationary.iterations
        ),
    )
}

fn disciplinary_window() -> Outcome {
    let start = Instant::now();
    let net = TwoCommunityNetwork::new(4);

    let z = CrossCitationMatrix::build(&net.registry, &net.edges_within(5)).unwrap();
    let run = compute(&net.registry, &z, &DampingParameters::default()).map_err(|e| e.to_string())?;
    let mass = |kind| net.members(kind).map(|p| run.eigenfactor[p]).sum::<f64>();
    let (fast_ef, slow_ef) = (mass(Community::Fast), mass(Community::Slow));

    // Naive citations-per-article using only the first two years.
    let mut received: HashMap<&str, u64> = HashMap::new();
    let truncated = net.edges_within(2);
    for e in &truncated {
        if e.citing != e.cited {
            *received.entry(e.cited.as_str()).or_default() += e.count;
        }
    }
    let naive = |p: usize| {
        let j = &net.registry.journals()[p];
        received.get(j.id.as_str()).copied().unwrap_or(0) as f64 / j.articles as f64
    };
    let fast_min = net.members(Community::Fast).map(naive).fold(f64::INFINITY, f64::min);
    let slow_max = net.members(Community::Slow).map(naive).fold(f64::NEG_INFINITY, f64::max);
    let elapsed = start.elapsed();

    check(
        (fast_ef - slow_ef).abs() <= 1.0 && fast_min > slow_max && elapsed < Duration::from_secs(1),
        format!(
            "EF mass fast = {fast_ef:.6}, slow = {slow_ef:.6} (|diff| <= 1); two-year rate min fast = {fast_min:.2} > max slow = {slow_max:.2}; {elapsed:.2?} (< 1 s)"
        ),
    )
}

fn symmetric_pair() -> Outcome {
    let registry =
        JournalRegistry::new(vec![Journal::new("A", "A", 12), Journal::new("B", "B", 12)]).unwrap();
    let edges = [CitationEdge::new("A", "B", 9), CitationEdge::new("B", "A", 9)];
    let z = CrossCitationMatrix::build(&registry, &edges).unwrap();
    let run = compute(&registry, &z, &DampingParameters::default()).map_err(|e| e.to_string())?;
    let ef_err = linf(&run.eigenfactor, &[50.0, 50.0]);
    let ai: Vec<f64> = run.article_influence.iter().map(|v| v.unwrap_or(f64::NAN)).collect();
    let ai_err = linf(&ai, &[1.0, 1.0]);
    check(
        ef_err <= 1e-12 && ai_err <= 1e-12,
        format!("EF = {:?}, AI = {:?}", run.eigenfactor, ai),
    )
}

fn robustness() -> Outcome {
    let registry = load_registry(fixture("net20_journals.csv")).map_err(|e| e.to_string())?;
    let edges = load_edges(fixture("net20_edges.csv"), &registry).map_err(|e| e.to_string())?;
    let config = |keep_fraction, trials, seed| RobustnessConfig {
        keep_fraction,
        trials,
        seed,
        params: DampingParameters::default(),
    };

    let identity = robustness_harness(&registry, &edges, &config(1.0, 10, 1)).map_err(|e| e.to_string())?;
    let identity_mean = identity.summary.as_ref().map_or(f64::NAN, |s| s.mean);

    let pinned = std::fs::read(fixture("net20_robustness.json")).map_err(|e| e.to_string())?;
    let mut renders = Vec::new();
    for _ in 0..3 {
        let report =
            robustness_harness(&registry, &edges, &config(0.8, 50, 42)).map_err(|e| e.to_string())?;
        let mut out = Vec::new();
        write_robustness(&mut out, &report, Format::Json).unwrap();
        renders.push(out);
    }
    let cli = Command::new(env!("CARGO_BIN_EXE_eigenfactor"))
        .args(["robustness", "--journals"])
        .arg(fixture("net20_journals.csv"))
        .arg("--edges")
        .arg(fixture("net20_edges.csv"))
        .args(["--keep-fraction", "0.8", "--trials", "50", "--seed", "42", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    renders.push(cli.stdout);

    let identical = renders.iter().all(|r| *r == pinned);
    check(
        identity_mean == 1.0 && identical,
        format!(
            "keep_fraction 1.0 mean rho = {identity_mean}; seeded run (keep 0.8, 50 trials, seed 42) matches pinned report: {identical}"
        ),
    )
}

fn convergence_budget(cases: &[Instance]) -> Outcome {
    let params = DampingParameters::new(0.85, 1e-12, 100_000).unwrap();
    let mut worst = 0usize;
    let mut networks: Vec<(JournalRegistry, CrossCitationMatrix)> =
        cases.iter().map(|c| (c.net.registry.clone(), matrix(&c.net))).collect();
    for (j, e) in [
        ("journals.csv", "edges.csv"),
        ("tri_journals.csv", "tri_edges.csv"),
        ("pair_journals.csv", "pair_edges.csv"),
        ("net20_journals.csv", "net20_edges.csv"),
    ] {
        let registry = load_registry(fixture(j)).unwrap();
        let edges = load_edges(fixture(e), &registry).unwrap();
        let z = CrossCitationMatrix::build(&registry, &edges).unwrap();
        networks.push((registry, z));
    }
    let two = TwoCommunityNetwork::new(4);
    let z = CrossCitationMatrix::build(&two.registry, &two.edges_within(5)).unwrap();
    networks.push((two.registry, z));

    for (k, (registry, z)) in networks.iter().enumerate() {
        let h = NormalizedMatrix::from_cross_citations(z);
        let a = ArticleVector::from_registry(registry).unwrap();
        let pi = eigenfactor::ranking::leading_eigenvector(PatchedMatrix::new(&h, &a).unwrap(), &params)
            .map_err(|e| format!("network {k}: {e}"))?;
        worst = worst.max(pi.iterations);
    }
    check(
        worst <= 200,
        format!("{} networks, max iterations = {worst} (<= 200)", networks.len()),
    )
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() {
    let cases = instances();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 sum rule", Box::new(|| sum_rule(&cases))),
        ("2 oracle equivalence", Box::new(|| oracle_equivalence(&cases))),
        ("3 self-citation invariance", Box::new(|| self_citation_invariance(&cases))),
        ("4 scale invariance", Box::new(|| scale_invariance(&cases))),
        ("5 dangling handling", Box::new(dangling_handling)),
        ("6 disciplinary window", Box::new(disciplinary_window)),
        ("7 symmetric pair", Box::new(symmetric_pair)),
        ("8 robustness harness", Box::new(robustness)),
        ("9 convergence budget", Box::new(|| convergence_budget(&cases))),
    ];

    let mut failed = 0;
    for (name, criterion) in &criteria {
        match criterion() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
