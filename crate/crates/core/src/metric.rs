//! General-metric algorithms: exact single-solution solvers and the two
//! pattern-transfer algorithms for disjoint pairs.

use std::time::{Duration, Instant};

use crate::constructions::algorithm_paths;
use crate::depth::{path_depth_profile, DepthProfile};
use crate::error::{Error, Result};
use crate::instances::{edge, DisjointPair, HamPath, Instance, Metric, Solution, Tour, TOL};

/// Limits for the exponential exact solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactSolverBudget {
    pub max_n: usize,
    pub time_limit: Option<Duration>,
}

impl Default for ExactSolverBudget {
    fn default() -> Self {
        ExactSolverBudget {
            max_n: 18,
            time_limit: None,
        }
    }
}

impl ExactSolverBudget {
    pub fn new(max_n: usize, time_limit: Option<Duration>) -> Result<Self> {
        if max_n < 2 {
            return Err(Error::Range(format!("budget max_n must be >= 2, got {max_n}")));
        }
        Ok(ExactSolverBudget { max_n, time_limit })
    }
}

/// Held-Karp over the vertices other than `start` and `end`. Returns the
/// order of a cheapest Hamiltonian walk `start -> ... -> end`; when
/// `start == end` this is a tour through `start`.
fn held_karp<M: Metric + ?Sized>(
    m: &M,
    start: usize,
    end: usize,
    budget: &ExactSolverBudget,
) -> Result<Vec<usize>> {
    let n = m.len();
    if n > budget.max_n {
        return Err(Error::Resource(format!(
            "exact solver limited to n <= {}, got n = {n}",
            budget.max_n
        )));
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != start && v != end).collect();
    let k = others.len();
    if k == 0 {
        return Ok(if start == end { vec![start] } else { vec![start, end] });
    }
    let started = Instant::now();
    let full = (1usize << k) - 1;
    let mut dp = vec![f64::INFINITY; (full + 1) * k];
    let mut parent = vec![u8::MAX; (full + 1) * k];
    for (j, &v) in others.iter().enumerate() {
        dp[(1 << j) * k + j] = m.dist(start, v);
    }
    for mask in 1..=full {
        if mask & 0xfff == 0 {
            if let Some(limit) = budget.time_limit {
                if started.elapsed() > limit {
                    return Err(Error::Resource(format!("exact solver exceeded {limit:?}")));
                }
            }
        }
        for j in 0..k {
            if mask & (1 << j) == 0 {
                continue;
            }
            let here = dp[mask * k + j];
            if !here.is_finite() {
                continue;
            }
            for (x, &w) in others.iter().enumerate() {
                if mask & (1 << x) != 0 {
                    continue;
                }
                let next = mask | (1 << x);
                let c = here + m.dist(others[j], w);
                if c < dp[next * k + x] {
                    dp[next * k + x] = c;
                    parent[next * k + x] = j as u8;
                }
            }
        }
    }
    let mut last = 0;
    let mut best = f64::INFINITY;
    for j in 0..k {
        let c = dp[full * k + j] + m.dist(others[j], end);
        if c < best {
            best = c;
            last = j;
        }
    }
    let mut rev = Vec::with_capacity(k);
    let mut mask = full;
    let mut j = last;
    loop {
        rev.push(others[j]);
        let p = parent[mask * k + j];
        mask &= !(1 << j);
        if p == u8::MAX {
            break;
        }
        j = p as usize;
    }
    let mut order = vec![start];
    order.extend(rev.into_iter().rev());
    if start != end {
        order.push(end);
    }
    Ok(order)
}

/// Cheapest `(s, t)` Hamiltonian path by bitmask dynamic programming.
pub fn held_karp_path<M: Metric + ?Sized>(
    m: &M,
    s: usize,
    t: usize,
    budget: &ExactSolverBudget,
) -> Result<HamPath> {
    check_endpoints(m.len(), s, t)?;
    HamPath::new(held_karp(m, s, t, budget)?)
}

/// Cheapest tour by bitmask dynamic programming.
pub fn held_karp_tour<M: Metric + ?Sized>(m: &M, budget: &ExactSolverBudget) -> Result<Tour> {
    if m.len() < 3 {
        return Err(Error::InvalidSize {
            n: m.len(),
            reason: "a tour needs n >= 3".into(),
        });
    }
    Tour::new(held_karp(m, 0, 0, budget)?)
}

fn check_endpoints(n: usize, s: usize, t: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidSize {
            n,
            reason: "a path pair needs n >= 2".into(),
        });
    }
    if s >= n || t >= n {
        return Err(Error::Range(format!("endpoints ({s}, {t}) out of range for n = {n}")));
    }
    if s == t {
        return Err(Error::Precondition("s and t must differ".into()));
    }
    Ok(())
}

/// Minimum-cost `(s, t)` Hamiltonian path.
///
/// On a line with `{s, t}` the two extreme points the monotone path is
/// returned directly; everything else goes through Held-Karp.
pub fn exact_shp(instance: &Instance, s: usize, t: usize, budget: &ExactSolverBudget) -> Result<HamPath> {
    let n = instance.len();
    check_endpoints(n, s, t)?;
    if let Instance::Line(_) = instance {
        if s == 0 && t == n - 1 {
            return Ok(HamPath::identity(n));
        }
        if s == n - 1 && t == 0 {
            return HamPath::new((0..n).rev().collect());
        }
    }
    held_karp_path(instance, s, t, budget)
}

/// Minimum-cost tour. Circles use the rim tour.
pub fn exact_tsp(instance: &Instance, budget: &ExactSolverBudget) -> Result<Tour> {
    match instance {
        Instance::Circle(c) => Tour::rim(c.len()),
        _ => held_karp_tour(instance, budget),
    }
}

/// Output of [`shp2_metric`].
#[derive(Debug, Clone, PartialEq)]
pub struct Shp2Output {
    pub pair: DisjointPair<HamPath>,
    pub baseline: HamPath,
    pub baseline_cost: f64,
    /// `covers[p][i]`: how many edges of output path `p` pass over baseline
    /// edge `i` (between the `i`-th and `(i+1)`-th baseline vertices).
    pub covers: [DepthProfile; 2],
}

impl Shp2Output {
    pub fn ratio(&self) -> f64 {
        self.pair.objective / self.baseline_cost
    }

    pub fn max_cover(&self) -> u32 {
        self.covers[0].max_depth().max(self.covers[1].max_depth())
    }
}

/// Disjoint `(s, t)`-path pair whose objective is at most three times the
/// baseline path.
///
/// The baseline defaults to the exact optimum. Its vertices play the role
/// of the uniform line's points, and the uniform-line construction's edge
/// pattern is copied onto them.
pub fn shp2_metric(
    instance: &Instance,
    s: usize,
    t: usize,
    budget: &ExactSolverBudget,
    baseline: Option<HamPath>,
) -> Result<Shp2Output> {
    let n = instance.len();
    check_endpoints(n, s, t)?;
    if n <= 5 {
        return Err(Error::Infeasible(format!(
            "no pair of edge-disjoint Hamiltonian paths exists for n <= 5 (n = {n})"
        )));
    }
    let baseline = match baseline {
        Some(p) => {
            if p.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: p.len(),
                });
            }
            if p.start() != s || p.end() != t {
                return Err(Error::InvalidSolution(format!(
                    "baseline runs {} -> {}, expected {s} -> {t}",
                    p.start(),
                    p.end()
                )));
            }
            p
        }
        None => exact_shp(instance, s, t, budget)?,
    };
    let pattern = algorithm_paths(n)?;
    let covers = [path_depth_profile(&pattern.a, n)?, path_depth_profile(&pattern.b, n)?];
    let map = baseline.order();
    let pair = DisjointPair::new(pattern.a.relabel(map)?, pattern.b.relabel(map)?, instance)?;
    let baseline_cost = baseline.cost(instance)?;
    Ok(Shp2Output {
        pair,
        baseline,
        baseline_cost,
        covers,
    })
}

/// Output of [`tsp2_naive`].
#[derive(Debug, Clone, PartialEq)]
pub struct Tsp2Output {
    pub pair: DisjointPair<Tour>,
    /// Starting tour, rotated so `v_1` is first (and, for even `n`, its
    /// cheapest edge is `(v_n, v_1)`).
    pub baseline: Vec<usize>,
    pub baseline_cost: f64,
}

impl Tsp2Output {
    pub fn ratio(&self) -> f64 {
        self.pair.objective / self.baseline_cost
    }
}

/// Rotates `order` so that its cheapest cyclic edge closes the sequence.
/// Ties go to the lexicographically smallest undirected edge.
fn rotate_cheapest_last<M: Metric + ?Sized>(m: &M, order: &[usize]) -> Vec<usize> {
    let n = order.len();
    let mut best = 0;
    for i in 1..n {
        let (a, b) = (order[i], order[(i + 1) % n]);
        let (ba, bb) = (order[best], order[(best + 1) % n]);
        let (c, bc) = (m.dist(a, b), m.dist(ba, bb));
        if c < bc - TOL || (c <= bc + TOL && edge(a, b) < edge(ba, bb)) {
            best = i;
        }
    }
    (0..n).map(|i| order[(best + 1 + i) % n]).collect()
}

/// Two disjoint tours, each at most twice the starting tour.
///
/// Odd `n`: the starting tour and its "every second vertex" companion.
/// Even `n`: two tours that triple the cheapest starting edge and double
/// the rest.
pub fn tsp2_naive(instance: &Instance, budget: &ExactSolverBudget, baseline: Option<Tour>) -> Result<Tsp2Output> {
    let n = instance.len();
    if n <= 4 {
        return Err(Error::Infeasible(format!(
            "no pair of edge-disjoint tours exists for n <= 4 (n = {n})"
        )));
    }
    let start = match baseline {
        Some(t) if t.len() != n => {
            return Err(Error::Dimension {
                expected: n,
                got: t.len(),
            })
        }
        Some(t) => t,
        None => exact_tsp(instance, budget)?,
    };
    let v = if n % 2 == 0 {
        rotate_cheapest_last(instance, start.order())
    } else {
        start.order().to_vec()
    };
    // v[i] is v_{i+1}
    let (t1, t2): (Vec<usize>, Vec<usize>) = if n % 2 == 1 {
        let odd = (0..n).step_by(2);
        let even = (1..n).step_by(2);
        (v.clone(), odd.chain(even).map(|i| v[i]).collect())
    } else {
        let mut t1 = vec![v[0], v[n - 1]];
        t1.extend(&v[1..n - 1]);
        let mut t2: Vec<usize> = (0..n - 1).step_by(2).map(|i| v[i]).collect();
        t2.push(v[n - 1]);
        t2.extend((1..n - 2).step_by(2).rev().map(|i| v[i]));
        (t1, t2)
    };
    let pair = DisjointPair::new(Tour::new(t1)?, Tour::new(t2)?, instance)?;
    let baseline_cost = start.cost(instance)?;
    Ok(Tsp2Output {
        pair,
        baseline: v,
        baseline_cost,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{
        make_shp_witness, make_tsp_witness, make_uniform_circle, make_uniform_line, MetricInstance,
    };

    fn budget() -> ExactSolverBudget {
        ExactSolverBudget::default()
    }

    #[test]
    fn line_closed_form() {
        let line = Instance::Line(make_uniform_line(9).unwrap());
        let p = exact_shp(&line, 0, 8, &budget()).unwrap();
        assert_eq!(p, HamPath::identity(9));
        assert_eq!(p.cost(&line).unwrap(), 8.0);
    }

    #[test]
    fn dp_matches_closed_form_on_witness() {
        let w = make_shp_witness(10, 8.0).unwrap();
        let dp = held_karp_path(&w, 0, 9, &budget()).unwrap();
        assert_eq!(dp.cost(&w).unwrap(), 16.0);
        let p = exact_shp(&Instance::Line(w), 0, 9, &budget()).unwrap();
        assert_eq!(p, HamPath::identity(10));
    }

    #[test]
    fn tiny_cases() {
        let line = Instance::Line(make_uniform_line(2).unwrap());
        assert_eq!(exact_shp(&line, 1, 0, &budget()).unwrap().order(), &[1, 0]);
        let m = MetricInstance::new(vec![vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 1.0], vec![2.0, 1.0, 0.0]]).unwrap();
        let t = exact_tsp(&Instance::Metric(m), &budget()).unwrap();
        assert_eq!(t.order(), &[0, 1, 2]);
    }

    #[test]
    fn circle_closed_form_and_dp_agree() {
        let c = make_uniform_circle(7).unwrap();
        assert_eq!(held_karp_tour(&c, &budget()).unwrap().cost(&c).unwrap(), 7.0);
        let w = make_tsp_witness(7, 2.5).unwrap();
        let t = held_karp_tour(&w, &budget()).unwrap();
        assert_eq!(t.cost(&w).unwrap(), 10.0);
        assert_eq!(exact_tsp(&Instance::Circle(w), &budget()).unwrap(), Tour::rim(7).unwrap());
    }

    #[test]
    fn dp_on_random_metrics_is_no_worse_than_identity() {
        for seed in 0..20 {
            let m = MetricInstance::random(8, seed).unwrap();
            let p = held_karp_path(&m, 0, 7, &budget()).unwrap();
            assert!(p.cost(&m).unwrap() <= HamPath::identity(8).cost(&m).unwrap() + TOL);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let m = MetricInstance::random(8, 1).unwrap();
        let b = ExactSolverBudget::new(7, None).unwrap();
        assert!(matches!(held_karp_tour(&m, &b), Err(Error::Resource(_))));
        assert!(ExactSolverBudget::new(1, None).is_err());
    }

    #[test]
    fn shp2_on_uniform_line() {
        let line = Instance::Line(make_uniform_line(8).unwrap());
        let out = shp2_metric(&line, 0, 7, &budget(), None).unwrap();
        assert_eq!(out.pair.objective, 13.0);
        assert_eq!(out.baseline_cost, 7.0);
        assert!(out.max_cover() <= 3);
        assert!(matches!(
            shp2_metric(&Instance::Line(make_uniform_line(5).unwrap()), 0, 4, &budget(), None),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn shp2_degenerate_baseline() {
        let mut coords = vec![0.0f64; 7];
        coords[6] = 1.0;
        let mut d = vec![vec![0.0; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                d[i][j] = (coords[i] - coords[j]).abs();
            }
        }
        let m = Instance::Metric(MetricInstance::new(d).unwrap());
        let out = shp2_metric(&m, 0, 6, &budget(), None).unwrap();
        assert!(out.pair.objective <= 3.0 * out.baseline_cost + TOL);
    }

    #[test]
    fn naive_tours_on_circles() {
        let c7 = Instance::Circle(make_uniform_circle(7).unwrap());
        let out = tsp2_naive(&c7, &budget(), None).unwrap();
        assert_eq!((out.pair.cost_a, out.pair.cost_b), (7.0, 14.0));
        assert_eq!(out.ratio(), 2.0);

        let c8 = Instance::Circle(make_uniform_circle(8).unwrap());
        let out = tsp2_naive(&c8, &budget(), None).unwrap();
        assert_eq!((out.pair.cost_a, out.pair.cost_b), (10.0, 14.0));
        assert_eq!(out.baseline, vec![1, 2, 3, 4, 5, 6, 7, 0]);
    }

    #[test]
    fn naive_tours_rotate_onto_cheap_edge() {
        let w = Instance::Circle(make_tsp_witness(8, 2.5).unwrap());
        let out = tsp2_naive(&w, &budget(), None).unwrap();
        let (a, b) = (out.baseline[7], out.baseline[0]);
        assert_eq!(w.dist(a, b), 1.0);
        assert!(out.ratio() < 2.0);
    }

    #[test]
    fn odd_witness_has_no_slack() {
        let w = Instance::Circle(make_tsp_witness(7, 2.5).unwrap());
        let out = tsp2_naive(&w, &budget(), None).unwrap();
        assert_eq!((out.pair.cost_a, out.pair.cost_b), (10.0, 20.0));
    }
}
