//! Exhaustive search over pairs of edge-disjoint solutions.
//!
//! Single solutions within the cost bound are enumerated once by a pruned
//! depth-first search, sorted by `(cost, order)`, and stored with a 128-bit
//! edge mask. Pairs are then scanned over that list. Edge masks limit the
//! search to `n <= 16`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num_rational::Ratio;
use serde::Serialize;

use crate::analysis::RatioReport;
use crate::constructions::catalog;
use crate::depth::{parity_class, tour_depth_profile, ParityClass};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::instances::{
    make_uniform_circle, make_uniform_line, CircleInstance, DisjointPair, HamPath, Instance, Metric, Solution, Tour,
    TOL,
};
use crate::metric::{exact_shp, exact_tsp, ExactSolverBudget};

/// Largest `n` the pair search supports.
pub const MAX_PAIR_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveKind {
    /// Minimise `max(c(a), c(b))`.
    MinMax,
    /// Minimise `c(a) + c(b)`.
    MinTotal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Only solutions of cost `<= bound` take part.
    pub bound: Option<f64>,
    pub exec: Execution,
    /// Abort once more single solutions than this are collected.
    pub max_solutions: usize,
    pub time_limit: Option<Duration>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            bound: None,
            exec: Execution::default(),
            max_solutions: 5_000_000,
            time_limit: None,
        }
    }
}

impl OracleConfig {
    pub fn with_bound(bound: f64) -> Self {
        OracleConfig {
            bound: Some(bound),
            ..Self::default()
        }
    }
}

/// Result of a pair search. With a bound, `feasible == false` means no
/// pair exists among solutions costing at most the bound.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport<S> {
    pub instance: String,
    pub n: usize,
    pub objective: ObjectiveKind,
    pub bound: Option<f64>,
    pub feasible: bool,
    pub min_max_cost: Option<f64>,
    pub min_total_cost: Option<f64>,
    pub witness: Option<DisjointPair<S>>,
    /// Search-tree nodes visited while enumerating single solutions.
    pub explored: u64,
    /// Number of single solutions within the bound.
    pub solutions: usize,
    pub elapsed: Duration,
}

/// Sorted single solutions with their edge masks.
#[derive(Debug, Clone)]
pub struct Enumeration<S> {
    pub solutions: Vec<(f64, S)>,
    pub masks: Vec<u128>,
    pub explored: u64,
}

impl<S> Enumeration<S> {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn cost(&self, i: usize) -> f64 {
        self.solutions[i].0
    }
}

#[inline]
fn edge_bit(a: usize, b: usize) -> u128 {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    1u128 << (j * (j - 1) / 2 + i)
}

fn mask_of<S: Solution>(s: &S) -> u128 {
    s.edges().iter().fold(0, |m, &(a, b)| m | edge_bit(a, b))
}

struct Limits {
    started: Instant,
    time_limit: Option<Duration>,
    max_solutions: usize,
    found: AtomicU64,
    explored: AtomicU64,
    abort: AtomicBool,
}

impl Limits {
    fn check(&self) -> bool {
        if self.abort.load(Ordering::Relaxed) {
            return false;
        }
        if let Some(limit) = self.time_limit {
            if self.started.elapsed() > limit {
                self.abort.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    fn error(&self) -> Error {
        if self.found.load(Ordering::Relaxed) as usize > self.max_solutions {
            Error::Resource(format!("more than {} single solutions within the bound", self.max_solutions))
        } else {
            Error::Resource(format!(
                "search exceeded its time limit of {:?}",
                self.time_limit.unwrap_or_default()
            ))
        }
    }
}

/// Depth-first enumeration of walks `start -> ... -> end` visiting every
/// vertex once. `end == start` means a closed tour.
struct Dfs<'a, M: ?Sized> {
    m: &'a M,
    n: usize,
    end: usize,
    closed: bool,
    bound: f64,
    min_edge: Vec<f64>,
    limits: &'a Limits,
    order: Vec<usize>,
    visited: u32,
    out: Vec<(f64, Vec<usize>)>,
    explored: u64,
}

impl<M: Metric + ?Sized> Dfs<'_, M> {
    fn lower_bound(&self, u: usize) -> f64 {
        let mut half = self.min_edge[u] + self.min_edge[self.end];
        let mut far = 0.0f64;
        for v in 0..self.n {
            if self.visited & (1 << v) == 0 && v != self.end {
                half += 2.0 * self.min_edge[v];
                far = far.max(self.m.dist(u, v) + self.m.dist(v, self.end));
            }
        }
        (half / 2.0).max(far).max(self.m.dist(u, self.end))
    }

    fn run(&mut self, cost: f64) {
        self.explored += 1;
        if self.explored & 0x3ff == 0 && !self.limits.check() {
            return;
        }
        let u = *self.order.last().unwrap();
        let placed = self.order.len();
        let last_slot = if self.closed { self.n } else { self.n - 1 };
        if placed == last_slot {
            if self.closed && self.order[1] > self.order[self.n - 1] {
                return;
            }
            let total = cost + self.m.dist(u, self.end);
            if total <= self.bound + TOL {
                let mut order = self.order.clone();
                if !self.closed {
                    order.push(self.end);
                }
                self.out.push((total, order));
                let found = self.limits.found.fetch_add(1, Ordering::Relaxed) as usize + 1;
                if found > self.limits.max_solutions {
                    self.limits.abort.store(true, Ordering::Relaxed);
                }
            }
            return;
        }
        if cost + self.lower_bound(u) > self.bound + TOL {
            return;
        }
        for v in 0..self.n {
            if self.visited & (1 << v) != 0 || v == self.end {
                continue;
            }
            let c = cost + self.m.dist(u, v);
            self.visited |= 1 << v;
            self.order.push(v);
            self.run(c);
            self.order.pop();
            self.visited &= !(1 << v);
            if self.limits.abort.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

fn enumerate_walks<M: Metric + ?Sized>(
    m: &M,
    start: usize,
    end: usize,
    cfg: &OracleConfig,
) -> Result<(Vec<(f64, Vec<usize>)>, u64)> {
    let n = m.len();
    if n > 31 {
        return Err(Error::Resource(format!("enumeration supports n <= 31, got {n}")));
    }
    let closed = start == end;
    let bound = cfg.bound.unwrap_or(f64::INFINITY);
    let min_edge: Vec<f64> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| w != v)
                .map(|w| m.dist(v, w))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let limits = Limits {
        started: Instant::now(),
        time_limit: cfg.time_limit,
        max_solutions: cfg.max_solutions,
        found: AtomicU64::new(0),
        explored: AtomicU64::new(0),
        abort: AtomicBool::new(false),
    };
    if !closed && n == 2 {
        let c = m.dist(start, end);
        let out = if c <= bound + TOL { vec![(c, vec![start, end])] } else { Vec::new() };
        return Ok((out, 1));
    }
    let firsts: Vec<usize> = (0..n).filter(|&v| v != start && v != end).collect();
    let parts = cfg.exec.map(firsts, |v| {
        let mut dfs = Dfs {
            m,
            n,
            end,
            closed,
            bound,
            min_edge: min_edge.clone(),
            limits: &limits,
            order: vec![start, v],
            visited: (1 << start) | (1 << v),
            out: Vec::new(),
            explored: 0,
        };
        dfs.run(m.dist(start, v));
        limits.explored.fetch_add(dfs.explored, Ordering::Relaxed);
        dfs.out
    });
    if limits.abort.load(Ordering::Relaxed) {
        return Err(limits.error());
    }
    let mut all: Vec<(f64, Vec<usize>)> = parts.into_iter().flatten().collect();
    all.sort_by(|x, y| x.0.total_cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    Ok((all, limits.explored.load(Ordering::Relaxed)))
}

fn check_pair_size(n: usize) -> Result<()> {
    if n > MAX_PAIR_N {
        return Err(Error::Resource(format!("pair search supports n <= {MAX_PAIR_N}, got {n}")));
    }
    Ok(())
}

/// All Hamiltonian `(s, t)`-paths of cost within the bound, cheapest first.
pub fn enumerate_paths<M: Metric + ?Sized>(m: &M, s: usize, t: usize, cfg: &OracleConfig) -> Result<Enumeration<HamPath>> {
    let n = m.len();
    check_pair_size(n)?;
    if n < 2 || s >= n || t >= n || s == t {
        return Err(Error::Range(format!("invalid endpoints ({s}, {t}) for n = {n}")));
    }
    let (raw, explored) = enumerate_walks(m, s, t, cfg)?;
    let mut solutions = Vec::with_capacity(raw.len());
    let mut masks = Vec::with_capacity(raw.len());
    for (c, order) in raw {
        let p = HamPath::new(order)?;
        masks.push(mask_of(&p));
        solutions.push((c, p));
    }
    Ok(Enumeration {
        solutions,
        masks,
        explored,
    })
}

/// All tours of cost within the bound (each cycle once, canonical form).
pub fn enumerate_tours<M: Metric + ?Sized>(m: &M, cfg: &OracleConfig) -> Result<Enumeration<Tour>> {
    let n = m.len();
    check_pair_size(n)?;
    if n < 3 {
        return Err(Error::InvalidSize {
            n,
            reason: "a tour needs n >= 3".into(),
        });
    }
    let (raw, explored) = enumerate_walks(m, 0, 0, cfg)?;
    let mut solutions = Vec::with_capacity(raw.len());
    let mut masks = Vec::with_capacity(raw.len());
    for (c, order) in raw {
        let t = Tour::new(order)?;
        masks.push(mask_of(&t));
        solutions.push((c, t));
    }
    Ok(Enumeration {
        solutions,
        masks,
        explored,
    })
}

impl<S: Solution> Enumeration<S> {
    /// Keeps only the solutions satisfying `keep`.
    pub fn filter(self, keep: impl Fn(&S) -> bool) -> Self {
        let mut solutions = Vec::new();
        let mut masks = Vec::new();
        for (sol, mask) in self.solutions.into_iter().zip(self.masks) {
            if keep(&sol.1) {
                solutions.push(sol);
                masks.push(mask);
            }
        }
        Enumeration {
            solutions,
            masks,
            explored: self.explored,
        }
    }

    /// Best pair `(i, j)`, `i < j`, under `objective`. Ties go to the
    /// lexicographically smallest `(j, i)` for MinMax and `(i, j)` for
    /// MinTotal.
    pub fn best_pair(&self, objective: ObjectiveKind, exec: Execution) -> Option<(usize, usize)> {
        let masks = &self.masks;
        match objective {
            ObjectiveKind::MinMax => {
                let partner = |j: usize| (0..j).find(|&i| masks[i] & masks[j] == 0);
                let j = exec.find_first(masks.len(), |j| partner(j).is_some())?;
                Some((partner(j)?, j))
            }
            ObjectiveKind::MinTotal => {
                let best_bits = AtomicU64::new(f64::INFINITY.to_bits());
                let rows: Vec<usize> = (0..masks.len()).collect();
                let per_row = exec.map(rows, |i| {
                    let ci = self.cost(i);
                    let mut best: Option<(f64, usize)> = None;
                    for j in i + 1..masks.len() {
                        let total = ci + self.cost(j);
                        let global = f64::from_bits(best_bits.load(Ordering::Relaxed));
                        if total > global + TOL || best.is_some_and(|(b, _)| total >= b) {
                            break;
                        }
                        if masks[i] & masks[j] == 0 {
                            best = Some((total, j));
                            best_bits.fetch_min(total.to_bits(), Ordering::Relaxed);
                            break;
                        }
                    }
                    best.map(|(t, j)| (t, i, j))
                });
                per_row
                    .into_iter()
                    .flatten()
                    .min_by(|x, y| x.0.total_cmp(&y.0).then((x.1, x.2).cmp(&(y.1, y.2))))
                    .map(|(_, i, j)| (i, j))
            }
        }
    }
}

fn report_from<S: Solution, M: Metric + ?Sized>(
    m: &M,
    instance: String,
    en: &Enumeration<S>,
    objective: ObjectiveKind,
    cfg: &OracleConfig,
    started: Instant,
) -> Result<OracleReport<S>> {
    let best = en.best_pair(objective, cfg.exec);
    let witness = match best {
        Some((i, j)) => Some(DisjointPair::new(en.solutions[i].1.clone(), en.solutions[j].1.clone(), m)?),
        None => None,
    };
    let (min_max_cost, min_total_cost) = match (&witness, objective) {
        (Some(w), ObjectiveKind::MinMax) => (Some(w.objective), None),
        (Some(w), ObjectiveKind::MinTotal) => (None, Some(w.total())),
        (None, _) => (None, None),
    };
    Ok(OracleReport {
        instance,
        n: m.len(),
        objective,
        bound: cfg.bound,
        feasible: witness.is_some(),
        min_max_cost,
        min_total_cost,
        witness,
        explored: en.explored,
        solutions: en.len(),
        elapsed: started.elapsed(),
    })
}

/// Optimal pair of edge-disjoint `(s, t)`-paths.
pub fn search_path_pairs<M: Metric + ?Sized>(
    m: &M,
    s: usize,
    t: usize,
    objective: ObjectiveKind,
    cfg: &OracleConfig,
) -> Result<OracleReport<HamPath>> {
    let started = Instant::now();
    let en = enumerate_paths(m, s, t, cfg)?;
    report_from(m, format!("paths n={} s={} t={}", m.len(), s + 1, t + 1), &en, objective, cfg, started)
}

/// Optimal pair of edge-disjoint tours.
pub fn search_tour_pairs<M: Metric + ?Sized>(
    m: &M,
    objective: ObjectiveKind,
    cfg: &OracleConfig,
) -> Result<OracleReport<Tour>> {
    let started = Instant::now();
    let en = enumerate_tours(m, cfg)?;
    report_from(m, format!("tours n={}", m.len()), &en, objective, cfg, started)
}

/// Pair search restricted to tours whose depth profile on `circle` has
/// the given parity class.
pub fn search_tour_pairs_with_parity(
    circle: &CircleInstance,
    class: ParityClass,
    objective: ObjectiveKind,
    cfg: &OracleConfig,
) -> Result<OracleReport<Tour>> {
    let started = Instant::now();
    let en = enumerate_tours(circle, cfg)?
        .filter(|t| tour_depth_profile(t, circle).map(|p| parity_class(&p) == class).unwrap_or(false));
    report_from(
        circle,
        format!("tours n={} parity={class:?}", circle.len()),
        &en,
        objective,
        cfg,
        started,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Shp2,
    Tsp2,
}

/// Oracle min-max pair cost over the exact single-solution optimum. Paths
/// run between the first and last vertex.
pub fn witness_ratio(
    instance: &Instance,
    problem: Problem,
    cfg: &OracleConfig,
    budget: &ExactSolverBudget,
) -> Result<RatioReport> {
    let n = instance.len();
    let (opt, best) = match problem {
        Problem::Shp2 => {
            let opt = exact_shp(instance, 0, n - 1, budget)?.cost(instance)?;
            let r = search_path_pairs(instance, 0, n - 1, ObjectiveKind::MinMax, cfg)?;
            (opt, r.min_max_cost)
        }
        Problem::Tsp2 => {
            let opt = exact_tsp(instance, budget)?.cost(instance)?;
            let r = search_tour_pairs(instance, ObjectiveKind::MinMax, cfg)?;
            (opt, r.min_max_cost)
        }
    };
    let best = best.ok_or_else(|| Error::Resource(format!("no disjoint pair found for {} n={n}", instance.kind())))?;
    RatioReport::new(
        format!("{} n={n}", instance.kind()),
        "oracle".into(),
        best,
        opt,
        Some(best),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ClaimsReport {
    pub checks: Vec<ClaimCheck>,
}

impl ClaimsReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(ClaimCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

fn exact(x: f64) -> Result<i64> {
    crate::instances::as_exact_integer(x).ok_or_else(|| Error::Precondition(format!("expected an integer cost, got {x}")))
}

/// Exact integer pair totals on the uniform line / circle of size `n`.
pub fn uniform_path_min_total(n: usize, exec: Execution) -> Result<Option<i64>> {
    let line = make_uniform_line(n)?;
    let cfg = OracleConfig { exec, ..Default::default() };
    let r = search_path_pairs(&line, 0, n - 1, ObjectiveKind::MinTotal, &cfg)?;
    r.min_total_cost.map(exact).transpose()
}

pub fn uniform_tour_min_total(n: usize, exec: Execution) -> Result<Option<i64>> {
    let circle = make_uniform_circle(n)?;
    let cfg = OracleConfig { exec, ..Default::default() };
    let r = search_tour_pairs(&circle, ObjectiveKind::MinTotal, &cfg)?;
    r.min_total_cost.map(exact).transpose()
}

/// Combined edge-length profile of a tour pair on the uniform circle:
/// counts of length-1, length-2 and length-3 edges, and the number of
/// longer edges.
fn length_profile(circle: &CircleInstance, a: &Tour, b: &Tour) -> [usize; 4] {
    let mut counts = [0; 4];
    for (u, v) in a.edges().into_iter().chain(b.edges()) {
        let d = circle.dist(u, v).round() as usize;
        counts[d.clamp(1, 4) - 1] += 1;
    }
    counts
}

/// The three combined edge-length types a cheap disjoint tour pair on the
/// uniform circle could have.
pub fn tour_pair_types(n: usize) -> [[usize; 4]; 3] {
    [[n, n, 0, 0], [n - 1, n + 1, 0, 0], [n, n - 1, 1, 0]]
}

/// Counts the disjoint tour pairs on the uniform circle realising each of
/// the three cheap edge-length types.
pub fn count_tour_pair_types(n: usize, exec: Execution) -> Result<[usize; 3]> {
    let circle = make_uniform_circle(n)?;
    let cfg = OracleConfig {
        bound: Some(2.0 * n as f64 + 1.0),
        exec,
        ..Default::default()
    };
    let en = enumerate_tours(&circle, &cfg)?;
    let types = tour_pair_types(n);
    let rows: Vec<usize> = (0..en.len()).collect();
    let per_row = exec.map(rows, |i| {
        let mut c = [0usize; 3];
        for j in i + 1..en.len() {
            if en.masks[i] & en.masks[j] != 0 {
                continue;
            }
            let p = length_profile(&circle, &en.solutions[i].1, &en.solutions[j].1);
            for (k, ty) in types.iter().enumerate() {
                if p == *ty {
                    c[k] += 1;
                }
            }
        }
        c
    });
    Ok(per_row.into_iter().fold([0; 3], |acc, c| [acc[0] + c[0], acc[1] + c[1], acc[2] + c[2]]))
}

fn total_detail(total: Option<i64>, floor: i64) -> String {
    let total = total.map_or_else(|| "none (no pair)".to_string(), |c| c.to_string());
    format!("min total {total}, bound {}", Ratio::new(floor, 5))
}

/// Re-runs the small computer-checked claims on uniform instances.
pub fn verify_small_claims(exec: Execution) -> Result<ClaimsReport> {
    let mut report = ClaimsReport::default();
    let cfg = OracleConfig { exec, ..Default::default() };

    for n in 2..=5 {
        let line = make_uniform_line(n)?;
        let r = search_path_pairs(&line, 0, n - 1, ObjectiveKind::MinMax, &cfg)?;
        report.push(
            format!("paths: no disjoint pair, n={n}"),
            !r.feasible,
            format!("{} single paths, feasible={}", r.solutions, r.feasible),
        );
    }
    for n in 6..=8 {
        let total = uniform_path_min_total(n, exec)?;
        let floor = 16 * (n as i64 - 1);
        let passed = total.is_some_and(|c| 5 * c >= floor);
        report.push(
            format!("paths: min total >= 16(n-1)/5, n={n}"),
            passed,
            total_detail(total, floor),
        );
    }
    for n in 3..=4 {
        let circle = make_uniform_circle(n)?;
        let r = search_tour_pairs(&circle, ObjectiveKind::MinMax, &cfg)?;
        report.push(
            format!("tours: no disjoint pair, n={n}"),
            !r.feasible,
            format!("{} tours, feasible={}", r.solutions, r.feasible),
        );
    }
    for n in 5..=8 {
        let total = uniform_tour_min_total(n, exec)?;
        let floor = 16 * n as i64;
        let passed = total.is_some_and(|c| 5 * c >= floor);
        report.push(
            format!("tours: min total >= 16n/5, n={n}"),
            passed,
            total_detail(total, floor),
        );
    }
    for n in 5..=8 {
        let circle = make_uniform_circle(n)?;
        let r = search_tour_pairs_with_parity(&circle, ParityClass::OddDepth, ObjectiveKind::MinTotal, &cfg)?;
        let total = r.min_total_cost.map(exact).transpose()?;
        let floor = 16 * n as i64;
        let passed = total.is_none_or(|c| 5 * c >= floor);
        report.push(
            format!("tours, odd-depth pairs: min total >= 16n/5, n={n}"),
            passed,
            total_detail(total, floor),
        );
    }
    for n in 5..=8 {
        let counts = count_tour_pair_types(n, exec)?;
        for (k, c) in counts.iter().enumerate() {
            report.push(
                format!("tours: no pair of edge type {}, n={n}", k + 1),
                *c == 0,
                format!("{c} disjoint pairs of this type"),
            );
        }
    }

    let base = catalog().get(6).expect("catalog covers n = 6");
    let line6 = make_uniform_line(6)?;
    let base_total = exact(base.a.cost(&line6)? + base.b.cost(&line6)?)?;
    let total6 = uniform_path_min_total(6, exec)?;
    report.push(
        "paths: n=6 min total attained by the base pair",
        total6 == Some(16) && base_total == 16,
        format!("oracle {}, base pair {base_total}", total6.map_or("none".into(), |t| t.to_string())),
    );

    let n = 11i64;
    // 2·max >= total >= 16(n-1)/5
    let max_floor = (16 * (n - 1) + 9) / 10;
    let cat = catalog().get(11).expect("catalog covers n = 11").cost as i64;
    report.push(
        "paths: n=11 min-max lower bound matches the base pair",
        max_floor == cat,
        format!("lower bound {max_floor}, base pair {cat}"),
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(n: usize) -> crate::instances::LineInstance {
        make_uniform_line(n).unwrap()
    }

    #[test]
    fn path_counts() {
        let en = enumerate_paths(&line(6), 0, 5, &OracleConfig::default()).unwrap();
        assert_eq!(en.len(), 24);
        assert_eq!(en.cost(0), 5.0);
        let en = enumerate_tours(&make_uniform_circle(6).unwrap(), &OracleConfig::default()).unwrap();
        assert_eq!(en.len(), 60);
    }

    #[test]
    fn bound_filters_exactly() {
        let all = enumerate_paths(&line(7), 0, 6, &OracleConfig::default()).unwrap();
        let cut = enumerate_paths(&line(7), 0, 6, &OracleConfig::with_bound(8.0)).unwrap();
        let expected = all.solutions.iter().filter(|s| s.0 <= 8.0).count();
        assert_eq!(cut.len(), expected);
        assert!(expected > 0 && expected < all.len());
    }

    #[test]
    fn small_optima() {
        let cfg = OracleConfig::default();
        let r = search_path_pairs(&line(5), 0, 4, ObjectiveKind::MinMax, &cfg).unwrap();
        assert!(!r.feasible && r.min_max_cost.is_none() && r.witness.is_none());
        let r = search_path_pairs(&line(8), 0, 7, ObjectiveKind::MinMax, &cfg).unwrap();
        assert_eq!(r.min_max_cost, Some(13.0));
        let w = r.witness.unwrap();
        assert!(crate::instances::edge_disjoint(&w.a, &w.b));
        assert!(w.cost_a <= w.cost_b);
        let r = search_tour_pairs(&make_uniform_circle(4).unwrap(), ObjectiveKind::MinMax, &cfg).unwrap();
        assert!(!r.feasible);
        let r = search_tour_pairs(&make_uniform_circle(5).unwrap(), ObjectiveKind::MinMax, &cfg).unwrap();
        assert_eq!(r.min_max_cost, Some(8.0));
    }

    #[test]
    fn min_total_n6() {
        assert_eq!(uniform_path_min_total(6, Execution::Sequential).unwrap(), Some(16));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let l = line(8);
        for obj in [ObjectiveKind::MinMax, ObjectiveKind::MinTotal] {
            let a = search_path_pairs(&l, 0, 7, obj, &OracleConfig { exec: Execution::Sequential, ..Default::default() }).unwrap();
            let b = search_path_pairs(&l, 0, 7, obj, &OracleConfig { exec: Execution::Parallel, ..Default::default() }).unwrap();
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn solution_limit() {
        let cfg = OracleConfig {
            max_solutions: 10,
            ..Default::default()
        };
        assert!(matches!(enumerate_paths(&line(8), 0, 7, &cfg), Err(Error::Resource(_))));
    }

    #[test]
    fn size_limit() {
        let l = line(17);
        assert!(matches!(
            enumerate_paths(&l, 0, 16, &OracleConfig::default()),
            Err(Error::Resource(_))
        ));
    }
}
