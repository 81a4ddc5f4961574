use hampair::analysis::{sweep_paths, witness_sweep};
use hampair::constructions::{algorithm_paths, predicted_paths_cost};
use hampair::depth::{has_antipodal_edge, parity_class, path_cut_points, path_depth_profile, tour_depth_profile, ParityClass};
use hampair::instances::*;
use hampair::metric::{exact_shp, exact_tsp, shp2_metric, tsp2_naive, ExactSolverBudget};
use hampair::oracle::{search_path_pairs, search_tour_pairs, ObjectiveKind, OracleConfig, Problem};
use hampair::properties::structural_suite;
use hampair::{Error, Execution};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn budget() -> ExactSolverBudget {
    ExactSolverBudget::default()
}

#[test]
fn structural_suite_has_no_counterexamples() {
    let checks = structural_suite(Execution::Parallel).unwrap();
    for c in &checks {
        assert!(c.cases > 0, "{} examined nothing", c.name);
        assert!(c.passed(), "{}: {} violations, e.g. {:?}", c.name, c.violations, c.examples);
    }
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

#[test]
fn random_tours_are_never_mixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 10_000 {
        let n = rng.gen_range(3..=14);
        let c = make_uniform_circle(n).unwrap();
        let t = Tour::new(shuffled(n, &mut rng)).unwrap();
        if has_antipodal_edge(&t, &c) {
            continue;
        }
        let p = tour_depth_profile(&t, &c).unwrap();
        assert_ne!(parity_class(&p), ParityClass::Mixed, "{:?}", t.one_indexed());
        checked += 1;
    }
}

proptest! {
    #[test]
    fn canonical_form_identifies_all_representations(perm in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let t = Tour::new(perm.clone()).unwrap();
        prop_assert_eq!(canonical_cycle(t.order()), t.order().to_vec());
        let n = perm.len();
        for r in 0..n {
            let rot: Vec<usize> = (0..n).map(|i| perm[(r + i) % n]).collect();
            let mut rev = rot.clone();
            rev.reverse();
            prop_assert_eq!(Tour::new(rot).unwrap(), t.clone());
            prop_assert_eq!(Tour::new(rev).unwrap(), t.clone());
        }
    }

    #[test]
    fn line_cost_is_depth_times_length(
        lengths in prop::collection::vec(1u32..20, 2..12),
        seed in any::<u64>(),
    ) {
        let lengths: Vec<f64> = lengths.into_iter().map(f64::from).collect();
        let line = LineInstance::from_segments(&lengths).unwrap();
        let n = lengths.len() + 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = HamPath::new(shuffled(n, &mut rng)).unwrap();
        let prof = path_depth_profile(&p, n).unwrap();
        prop_assert_eq!(prof.weighted_sum(&lengths), p.cost(&line).unwrap());
        let uniform = make_uniform_line(n).unwrap();
        prop_assert_eq!(prof.total() as f64, p.cost(&uniform).unwrap());
    }

    #[test]
    fn circle_cost_is_depth_times_length(
        lengths in prop::collection::vec(1u32..20, 3..12),
        seed in any::<u64>(),
    ) {
        let lengths: Vec<f64> = lengths.into_iter().map(f64::from).collect();
        let circle = CircleInstance::from_segments(&lengths).unwrap();
        let n = lengths.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = Tour::new(shuffled(n, &mut rng)).unwrap();
        let prof = tour_depth_profile(&t, &circle).unwrap();
        prop_assert_eq!(prof.weighted_sum(&lengths), t.cost(&circle).unwrap());
    }

    #[test]
    fn random_metrics_satisfy_their_own_validation(n in 2usize..15, seed in any::<u64>()) {
        let m = MetricInstance::random(n, seed).unwrap();
        prop_assert!(MetricInstance::new(m.rows()).is_ok());
    }
}

#[test]
fn metric_validation() {
    let ok = vec![vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 1.0], vec![2.0, 1.0, 0.0]];
    assert!(MetricInstance::new(ok.clone()).is_ok());
    let mut asym = ok.clone();
    asym[0][1] = 1.5;
    assert!(matches!(MetricInstance::new(asym), Err(Error::InvalidInstance(_))));
    let mut diag = ok.clone();
    diag[1][1] = 0.5;
    assert!(matches!(MetricInstance::new(diag), Err(Error::InvalidInstance(_))));
    let mut tri = ok.clone();
    tri[0][2] = 5.0;
    tri[2][0] = 5.0;
    assert!(matches!(MetricInstance::new(tri.clone()), Err(Error::InvalidInstance(_))));
    assert!(MetricInstance::with_validation(tri, false).is_ok());
    assert!(MetricInstance::new(vec![vec![0.0, 1.0], vec![1.0]]).is_err());
    assert!(matches!(MetricInstance::new(vec![vec![0.0]]), Err(Error::InvalidSize { .. })));
}

#[test]
fn naive_tours_are_disjoint_and_within_twice() {
    for n in 5..=40 {
        let c = Instance::Circle(make_uniform_circle(n).unwrap());
        let out = tsp2_naive(&c, &budget(), None).unwrap();
        assert!(edge_disjoint(&out.pair.a, &out.pair.b));
        let (obj, opt) = (out.pair.objective as i64, n as i64);
        if n % 2 == 1 {
            assert_eq!(obj, 2 * opt);
        } else {
            assert!(obj < 2 * opt);
        }
    }
    for seed in 0..200 {
        let n = 5 + (seed as usize % 8);
        let m = Instance::Metric(MetricInstance::random(n, seed).unwrap());
        let out = tsp2_naive(&m, &budget(), None).unwrap();
        assert!(edge_disjoint(&out.pair.a, &out.pair.b));
        assert!(out.pair.objective <= 2.0 * out.baseline_cost + TOL);
        if n % 2 == 0 {
            assert!(out.pair.objective < 2.0 * out.baseline_cost);
        }
    }
}

#[test]
fn three_ratio_paths_on_random_metrics() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let n = rng.gen_range(6..=14);
        let m = Instance::Metric(MetricInstance::random(n, rng.gen()).unwrap());
        let out = shp2_metric(&m, 0, n - 1, &budget(), None).unwrap();
        assert!(out.max_cover() <= 3);
        assert!(out.pair.cost_a <= 3.0 * out.baseline_cost + TOL);
        assert!(out.pair.cost_b <= 3.0 * out.baseline_cost + TOL);
    }
}

#[test]
fn suboptimal_baselines_scale_the_guarantee() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.gen_range(6..=11);
        let m = Instance::Metric(MetricInstance::random(n, rng.gen()).unwrap());
        let mut inner: Vec<usize> = (1..n - 1).collect();
        inner.shuffle(&mut rng);
        let mut order = vec![0];
        order.extend(inner);
        order.push(n - 1);
        let base = HamPath::new(order).unwrap();
        let opt = exact_shp(&m, 0, n - 1, &budget()).unwrap().cost(&m).unwrap();
        let rho = base.cost(&m).unwrap() / opt;
        let out = shp2_metric(&m, 0, n - 1, &budget(), Some(base)).unwrap();
        assert!(out.pair.objective <= 3.0 * rho * opt + 1e-6);

        let t = Tour::new(shuffled(n, &mut rng)).unwrap();
        let topt = exact_tsp(&m, &budget()).unwrap().cost(&m).unwrap();
        let trho = t.cost(&m).unwrap() / topt;
        let out = tsp2_naive(&m, &budget(), Some(t)).unwrap();
        assert!(out.pair.objective <= 2.0 * trho * topt + 1e-6);
    }
}

#[test]
fn path_construction_invariants() {
    for n in 6..=500 {
        let pair = algorithm_paths(n).unwrap();
        assert!(edge_disjoint(&pair.a, &pair.b));
        for p in [&pair.a, &pair.b] {
            assert_eq!((p.start(), p.end(), p.len()), (0, n - 1, n));
            assert!(path_depth_profile(p, n).unwrap().max_depth() <= 3);
        }
        assert_eq!(pair.objective as u64, predicted_paths_cost(n).unwrap());
        if n > 11 {
            assert!(!path_cut_points(&pair.a, &pair.b).is_empty());
        }
    }
}

#[test]
fn ratio_envelope() {
    let s = sweep_paths(6, 10_000, Execution::Parallel).unwrap();
    for p in &s.points {
        let (c, m) = (p.objective, p.opt);
        assert!(7 * c <= 13 * m, "n={}", p.n);
        assert_eq!(7 * c == 13 * m, p.n == 8);
        // 8/5 (1 - 1/m) <= c/m <= 8/5 + 16/m
        assert!(8 * (m - 1) <= 5 * c);
        assert!(5 * c <= 8 * m + 80);
        if p.n % 10 == 1 {
            assert_eq!(p.ratio, Ratio::new(8, 5));
        }
    }
}

#[test]
fn witness_ratio_meets_target_and_grows_with_weight() {
    let cfg = OracleConfig::default();
    let eps = [1.5, 1.0, 0.75, 0.5, 0.4, 0.25, 0.1, 0.05];
    for (problem, n) in [(Problem::Shp2, 7), (Problem::Shp2, 8), (Problem::Tsp2, 7), (Problem::Tsp2, 8)] {
        let pts = witness_sweep(problem, n, &eps, &cfg, &budget()).unwrap();
        assert!(pts.iter().all(|p| p.meets_target));
        // small weights are dominated by the uniform instance itself
        let heavy: Vec<_> = pts.iter().filter(|p| p.eps <= 0.5).collect();
        for w in heavy.windows(2) {
            assert!(w[0].weight < w[1].weight);
            assert!(w[0].report.ratio < w[1].report.ratio, "{problem:?} n={n}");
        }
    }
}

#[test]
fn oracle_is_deterministic_and_sane() {
    let seq = OracleConfig {
        exec: Execution::Sequential,
        ..Default::default()
    };
    let par = OracleConfig::default();
    for n in 6..=9 {
        let l = make_uniform_line(n).unwrap();
        let a = search_path_pairs(&l, 0, n - 1, ObjectiveKind::MinMax, &seq).unwrap();
        let b = search_path_pairs(&l, 0, n - 1, ObjectiveKind::MinMax, &par).unwrap();
        assert_eq!(a.witness, b.witness);
        let w = a.witness.unwrap();
        assert!(edge_disjoint(&w.a, &w.b));
        assert_eq!(Some(w.objective), a.min_max_cost);
        let ratio = Ratio::new(w.objective as i64, n as i64 - 1);
        assert!(ratio <= Ratio::new(13, 7));
        assert_eq!(ratio == Ratio::new(13, 7), n == 8);
        assert_eq!(w.objective, algorithm_paths(n).unwrap().objective);
        if n <= 8 {
            let t = search_path_pairs(&l, 0, n - 1, ObjectiveKind::MinTotal, &seq).unwrap();
            assert!(t.min_total_cost.unwrap() >= 2.0 * (n as f64 - 1.0));
        }
    }
    for n in 5..=8 {
        let c = make_uniform_circle(n).unwrap();
        let a = search_tour_pairs(&c, ObjectiveKind::MinTotal, &seq).unwrap();
        let b = search_tour_pairs(&c, ObjectiveKind::MinTotal, &par).unwrap();
        assert_eq!(a.witness, b.witness);
        assert!(a.min_total_cost.unwrap() >= 2.0 * n as f64);
    }
}
