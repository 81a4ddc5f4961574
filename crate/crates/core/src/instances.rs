//! Instance families and single-solution types.
//!
//! Vertices are 0-indexed everywhere in the library. On a line or circle
//! vertex `i` is the `i`-th point in coordinate order, so segment `i` joins
//! vertices `i` and `i + 1` (and, on a circle, segment `n - 1` joins
//! vertex `n - 1` back to vertex `0`).

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Absolute tolerance for real-valued cost comparisons.
pub const TOL: f64 = 1e-9;

/// Anything with a symmetric distance between `len()` vertices.
pub trait Metric: Send + Sync {
    fn len(&self) -> usize;
    fn dist(&self, i: usize, j: usize) -> f64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Undirected edge, always stored as `(min, max)`.
pub type Edge = (usize, usize);

#[inline]
pub fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Returns `Some(k)` when `x` is (within float noise) the integer `k`.
pub fn as_exact_integer(x: f64) -> Option<i64> {
    let r = x.round();
    if (x - r).abs() <= TOL && r.abs() < 9.0e15 {
        Some(r as i64)
    } else {
        None
    }
}

fn check_strictly_increasing(values: &[f64], what: &str) -> Result<()> {
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidInstance(format!("{what} contains non-finite value {bad}")));
    }
    if let Some(w) = values.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInstance(format!(
            "{what} must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Points on the real line, sorted left to right.
#[derive(Debug, Clone, PartialEq)]
pub struct LineInstance {
    coords: Vec<f64>,
}

impl LineInstance {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidSize {
                n: coords.len(),
                reason: "a line instance needs at least 2 points".into(),
            });
        }
        check_strictly_increasing(&coords, "line coordinates")?;
        Ok(LineInstance { coords })
    }

    /// Builds the line from consecutive segment lengths, starting at coordinate 1.
    pub fn from_segments(lengths: &[f64]) -> Result<Self> {
        let mut coords = Vec::with_capacity(lengths.len() + 1);
        coords.push(1.0);
        for &l in lengths {
            if !(l > 0.0) {
                return Err(Error::InvalidInstance(format!("segment length {l} must be positive")));
            }
            let last = *coords.last().unwrap();
            coords.push(last + l);
        }
        LineInstance::new(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn segment_lengths(&self) -> Vec<f64> {
        self.coords.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// True when every segment has length exactly 1.
    pub fn is_uniform(&self) -> bool {
        self.segment_lengths().iter().all(|&l| l == 1.0)
    }
}

impl Metric for LineInstance {
    fn len(&self) -> usize {
        self.coords.len()
    }

    fn dist(&self, i: usize, j: usize) -> f64 {
        (self.coords[j] - self.coords[i]).abs()
    }
}

/// Shorter arc of an edge on a circle: `len` consecutive segments starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub start: usize,
    pub len: usize,
}

/// Points on a circle of circumference `L`, positions in `[0, L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleInstance {
    positions: Vec<f64>,
    circumference: f64,
}

impl CircleInstance {
    pub fn new(positions: Vec<f64>, circumference: f64) -> Result<Self> {
        if positions.len() < 3 {
            return Err(Error::InvalidSize {
                n: positions.len(),
                reason: "a circle instance needs at least 3 points".into(),
            });
        }
        check_strictly_increasing(&positions, "circle positions")?;
        if !(circumference.is_finite() && positions[0] >= 0.0 && *positions.last().unwrap() < circumference) {
            return Err(Error::InvalidInstance(format!(
                "positions must lie in [0, {circumference})"
            )));
        }
        Ok(CircleInstance {
            positions,
            circumference,
        })
    }

    /// Builds the circle from its `n` segment lengths; segment `n - 1` closes the loop.
    pub fn from_segments(lengths: &[f64]) -> Result<Self> {
        if let Some(l) = lengths.iter().find(|&&l| !(l > 0.0)) {
            return Err(Error::InvalidInstance(format!("segment length {l} must be positive")));
        }
        let mut positions = Vec::with_capacity(lengths.len());
        let mut at = 0.0;
        for &l in lengths {
            positions.push(at);
            at += l;
        }
        CircleInstance::new(positions, at)
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn circumference(&self) -> f64 {
        self.circumference
    }

    pub fn segment_lengths(&self) -> Vec<f64> {
        let n = self.positions.len();
        (0..n)
            .map(|i| {
                if i + 1 < n {
                    self.positions[i + 1] - self.positions[i]
                } else {
                    self.circumference - self.positions[i] + self.positions[0]
                }
            })
            .collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.segment_lengths().iter().all(|&l| l == 1.0)
    }

    /// Whether the two arcs between `a` and `b` have equal length.
    pub fn is_antipodal(&self, a: usize, b: usize) -> bool {
        let forward = (self.positions[a] - self.positions[b]).abs();
        (2.0 * forward - self.circumference).abs() <= TOL
    }

    /// The arc an edge covers: the strictly shorter one, or on a tie the
    /// non-wrapping arc `lo..hi`.
    pub fn arc(&self, a: usize, b: usize) -> Arc {
        let (lo, hi) = edge(a, b);
        let n = self.positions.len();
        let inner = self.positions[hi] - self.positions[lo];
        let outer = self.circumference - inner;
        if inner <= outer + TOL {
            Arc {
                start: lo,
                len: hi - lo,
            }
        } else {
            Arc {
                start: hi,
                len: n - (hi - lo),
            }
        }
    }
}

impl Metric for CircleInstance {
    fn len(&self) -> usize {
        self.positions.len()
    }

    fn dist(&self, i: usize, j: usize) -> f64 {
        let d = (self.positions[j] - self.positions[i]).abs();
        d.min(self.circumference - d)
    }
}

/// Dense symmetric distance matrix satisfying the triangle inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricInstance {
    n: usize,
    d: Vec<f64>,
}

impl MetricInstance {
    /// Validates symmetry, zero diagonal, non-negativity and the triangle inequality.
    pub fn new(matrix: Vec<Vec<f64>>) -> Result<Self> {
        Self::with_validation(matrix, true)
    }

    /// `check_triangle = false` skips the O(n^3) triangle check.
    pub fn with_validation(matrix: Vec<Vec<f64>>, check_triangle: bool) -> Result<Self> {
        let n = matrix.len();
        if n < 2 {
            return Err(Error::InvalidSize {
                n,
                reason: "a metric instance needs at least 2 points".into(),
            });
        }
        if let Some((i, row)) = matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidInstance(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for i in 0..n {
            if matrix[i][i].abs() > TOL {
                return Err(Error::InvalidInstance(format!("d({i},{i}) = {} is not zero", matrix[i][i])));
            }
            for j in 0..n {
                let v = matrix[i][j];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidInstance(format!("d({i},{j}) = {v} is not a non-negative real")));
                }
                if (v - matrix[j][i]).abs() > TOL {
                    return Err(Error::InvalidInstance(format!("matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        if check_triangle {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if matrix[i][k] > matrix[i][j] + matrix[j][k] + TOL {
                            return Err(Error::InvalidInstance(format!(
                                "triangle inequality violated: d({i},{k}) > d({i},{j}) + d({j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(MetricInstance {
            n,
            d: matrix.into_iter().flatten().collect(),
        })
    }

    /// Dense copy of any metric.
    pub fn from_metric<M: Metric + ?Sized>(m: &M) -> Self {
        let n = m.len();
        let mut d = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                d[i * n + j] = if i == j { 0.0 } else { m.dist(i, j) };
            }
        }
        MetricInstance { n, d }
    }

    /// Seeded random metric: shortest-path closure of random integer weights in `1..=100`.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize {
                n,
                reason: "a metric instance needs at least 2 points".into(),
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut d = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let w = rng.gen_range(1..=100) as f64;
                d[i * n + j] = w;
                d[j * n + i] = w;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i * n + k] + d[k * n + j];
                    if via < d[i * n + j] {
                        d[i * n + j] = via;
                    }
                }
            }
        }
        Ok(MetricInstance { n, d })
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.d.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}

impl Metric for MetricInstance {
    fn len(&self) -> usize {
        self.n
    }

    fn dist(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }
}

/// Any of the three instance kinds, as loaded from JSON or built by the CLI.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Line(LineInstance),
    Circle(CircleInstance),
    Metric(MetricInstance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Line(_) => "line",
            Instance::Circle(_) => "circle",
            Instance::Metric(_) => "metric",
        }
    }
}

impl Metric for Instance {
    fn len(&self) -> usize {
        match self {
            Instance::Line(l) => l.len(),
            Instance::Circle(c) => c.len(),
            Instance::Metric(m) => m.len(),
        }
    }

    fn dist(&self, i: usize, j: usize) -> f64 {
        match self {
            Instance::Line(l) => l.dist(i, j),
            Instance::Circle(c) => c.dist(i, j),
            Instance::Metric(m) => m.dist(i, j),
        }
    }
}

pub fn make_uniform_line(n: usize) -> Result<LineInstance> {
    if n < 2 {
        return Err(Error::InvalidSize {
            n,
            reason: "a uniform line needs n >= 2".into(),
        });
    }
    LineInstance::new((1..=n).map(|i| i as f64).collect())
}

pub fn make_uniform_circle(n: usize) -> Result<CircleInstance> {
    if n < 3 {
        return Err(Error::InvalidSize {
            n,
            reason: "a uniform circle needs n >= 3".into(),
        });
    }
    CircleInstance::new((0..n).map(|i| i as f64).collect(), n as f64)
}

/// Line with unit segments except the second one, which has length `w`.
pub fn make_shp_witness(n: usize, w: f64) -> Result<LineInstance> {
    if n <= 5 {
        return Err(Error::InvalidSize {
            n,
            reason: "the path witness needs n > 5".into(),
        });
    }
    if !(w >= 1.0) || !w.is_finite() {
        return Err(Error::InvalidInstance(format!("witness weight W = {w} must be >= 1")));
    }
    let mut lengths = vec![1.0; n - 1];
    lengths[1] = w;
    LineInstance::from_segments(&lengths)
}

/// Circle of unit segments except segments 0 and 2, which have length `w`
/// (they sandwich the unit segment 1).
pub fn make_tsp_witness(n: usize, w: f64) -> Result<CircleInstance> {
    if n <= 6 {
        return Err(Error::InvalidSize {
            n,
            reason: "the tour witness needs n > 6".into(),
        });
    }
    if !(w >= 1.0) || !w.is_finite() {
        return Err(Error::InvalidInstance(format!("witness weight W = {w} must be >= 1")));
    }
    let mut lengths = vec![1.0; n];
    lengths[0] = w;
    lengths[2] = w;
    CircleInstance::from_segments(&lengths)
}

/// Heavy-segment weight making the path witness ratio equal `3 - eps`.
pub fn shp_witness_weight(n: usize, eps: f64) -> f64 {
    (2.0 - eps) * (n as f64 - 2.0) / eps
}

/// Heavy-segment weight making the tour witness ratio equal `2 - eps`.
pub fn tsp_witness_weight(n: usize, eps: f64) -> f64 {
    (1.0 - eps) * (n as f64 - 2.0) / (2.0 * eps)
}

fn check_permutation(order: &[usize]) -> Result<()> {
    let n = order.len();
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::InvalidSolution(format!(
                "order {order:?} is not a permutation of 0..{n}"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Common view of paths and tours.
pub trait Solution: Clone + Send + Sync {
    /// Whether the closing edge `order[n-1] -> order[0]` belongs to the solution.
    const CLOSED: bool;

    fn order(&self) -> &[usize];

    fn len(&self) -> usize {
        self.order().len()
    }

    fn is_empty(&self) -> bool {
        self.order().is_empty()
    }

    fn edges(&self) -> Vec<Edge> {
        let o = self.order();
        let mut e: Vec<Edge> = o.windows(2).map(|w| edge(w[0], w[1])).collect();
        if Self::CLOSED && o.len() > 2 {
            e.push(edge(o[o.len() - 1], o[0]));
        }
        e
    }

    fn cost<M: Metric + ?Sized>(&self, m: &M) -> Result<f64> {
        if m.len() != self.len() {
            return Err(Error::Dimension {
                expected: m.len(),
                got: self.len(),
            });
        }
        Ok(self.edges().iter().map(|&(a, b)| m.dist(a, b)).sum())
    }

    /// 1-indexed vertex labels, as shown to users.
    fn one_indexed(&self) -> Vec<usize> {
        self.order().iter().map(|v| v + 1).collect()
    }
}

/// A Hamiltonian path; `order[0]` is `s`, the last entry is `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HamPath {
    order: Vec<usize>,
}

impl HamPath {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        if order.is_empty() {
            return Err(Error::InvalidSolution("empty path".into()));
        }
        check_permutation(&order)?;
        Ok(HamPath { order })
    }

    pub fn from_one_indexed(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidSolution("1-indexed labels cannot contain 0".into()));
        }
        HamPath::new(labels.iter().map(|v| v - 1).collect())
    }

    /// `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Self {
        HamPath {
            order: (0..n).collect(),
        }
    }

    pub fn start(&self) -> usize {
        self.order[0]
    }

    pub fn end(&self) -> usize {
        *self.order.last().unwrap()
    }

    /// Relabels every vertex `v` as `map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        HamPath::new(self.order.iter().map(|&v| map[v]).collect())
    }
}

impl Solution for HamPath {
    const CLOSED: bool = false;

    fn order(&self) -> &[usize] {
        &self.order
    }
}

/// A Hamiltonian cycle in canonical form: starts at vertex 0 and
/// `order[1] < order[n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tour {
    order: Vec<usize>,
}

impl Tour {
    /// Canonicalises any rotation or reflection of the cycle.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        if order.len() < 3 {
            return Err(Error::InvalidSolution(format!(
                "a tour needs at least 3 vertices, got {}",
                order.len()
            )));
        }
        check_permutation(&order)?;
        Ok(Tour {
            order: canonical_cycle(&order),
        })
    }

    pub fn from_one_indexed(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidSolution("1-indexed labels cannot contain 0".into()));
        }
        Tour::new(labels.iter().map(|v| v - 1).collect())
    }

    /// The cycle `0, 1, ..., n-1` along the circle.
    pub fn rim(n: usize) -> Result<Self> {
        Tour::new((0..n).collect())
    }

    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        Tour::new(self.order.iter().map(|&v| map[v]).collect())
    }
}

impl Solution for Tour {
    const CLOSED: bool = true;

    fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Rotates vertex 0 to the front and orients so the second entry is
/// smaller than the last.
pub fn canonical_cycle(order: &[usize]) -> Vec<usize> {
    let n = order.len();
    let at = order.iter().position(|&v| v == 0).unwrap_or(0);
    let mut out: Vec<usize> = (0..n).map(|i| order[(at + i) % n]).collect();
    if n > 2 && out[1] > out[n - 1] {
        out[1..].reverse();
    }
    out
}

pub fn path_cost<M: Metric + ?Sized>(instance: &M, path: &HamPath) -> Result<f64> {
    path.cost(instance)
}

pub fn tour_cost<M: Metric + ?Sized>(instance: &M, tour: &Tour) -> Result<f64> {
    tour.cost(instance)
}

pub fn edge_disjoint<S: Solution>(a: &S, b: &S) -> bool {
    let ea: HashSet<Edge> = a.edges().into_iter().collect();
    b.edges().iter().all(|e| !ea.contains(e))
}

/// Two edge-disjoint solutions with their max-cost objective.
#[derive(Debug, Clone, PartialEq)]
pub struct DisjointPair<S> {
    pub a: S,
    pub b: S,
    pub cost_a: f64,
    pub cost_b: f64,
    pub objective: f64,
}

impl<S: Solution> DisjointPair<S> {
    /// Evaluates both solutions on `metric`; fails if they share an edge.
    pub fn new<M: Metric + ?Sized>(a: S, b: S, metric: &M) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Dimension {
                expected: a.len(),
                got: b.len(),
            });
        }
        if !edge_disjoint(&a, &b) {
            return Err(Error::Precondition("the two solutions share an edge".into()));
        }
        let cost_a = a.cost(metric)?;
        let cost_b = b.cost(metric)?;
        Ok(DisjointPair {
            a,
            b,
            cost_a,
            cost_b,
            objective: cost_a.max(cost_b),
        })
    }

    pub fn total(&self) -> f64 {
        self.cost_a + self.cost_b
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}
