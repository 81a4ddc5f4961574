//! Explicit disjoint path pairs on the uniform line and the two
//! constructions built from them.
//!
//! The base catalog holds one pair for every `n` in `6..=15`. Pairs for
//! `n <= 11` are optimal; `12..=15` extend the `n = 11` pair by a few
//! vertices and are only known to be good enough for the concatenation
//! scheme. Larger `n` is handled by concatenating copies of the `n = 11`
//! pair, whose junction vertices become cut-points.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::instances::{make_uniform_circle, make_uniform_line, DisjointPair, HamPath, Solution, Tour};

/// Extra cost `f(l)` above `16k` when `n - 1 = 10k + l` with `l` in `1..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FTable {
    values: [u64; 9],
}

pub const F_TABLE: FTable = FTable {
    values: [3, 4, 7, 8, 9, 10, 13, 14, 15],
};

impl FTable {
    pub fn get(&self, l: usize) -> Option<u64> {
        (1..=9).contains(&l).then(|| self.values[l - 1])
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (i + 1, v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasePair {
    pub n: usize,
    pub a: HamPath,
    pub b: HamPath,
    /// `max(c(a), c(b))` on the uniform line.
    pub cost: u64,
    /// Proven optimal (`n <= 11`) rather than merely constructed.
    pub optimal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasePairCatalog {
    entries: Vec<BasePair>,
}

// (n, first path, second path, max cost), 1-indexed.
const RAW_CATALOG: [(usize, &[usize], &[usize], u64); 10] = [
    (6, &[1, 3, 2, 4, 5, 6], &[1, 2, 5, 3, 4, 6], 9),
    (7, &[1, 3, 4, 2, 5, 6, 7], &[1, 2, 3, 6, 4, 5, 7], 10),
    (8, &[1, 3, 4, 2, 5, 6, 7, 8], &[1, 2, 3, 7, 5, 4, 6, 8], 13),
    (9, &[1, 3, 5, 4, 2, 6, 7, 8, 9], &[1, 2, 3, 4, 6, 8, 5, 7, 9], 14),
    (10, &[1, 3, 5, 2, 4, 6, 7, 8, 9, 10], &[1, 2, 3, 4, 5, 7, 9, 6, 8, 10], 15),
    (11, &[1, 3, 4, 2, 5, 6, 7, 9, 8, 10, 11], &[1, 2, 3, 5, 4, 6, 8, 7, 10, 9, 11], 16),
    (12, &[1, 3, 4, 2, 5, 6, 7, 9, 8, 11, 10, 12], &[1, 2, 3, 5, 4, 6, 8, 7, 10, 9, 11, 12], 19),
    (
        13,
        &[1, 3, 4, 2, 5, 6, 7, 9, 8, 11, 10, 12, 13],
        &[1, 2, 3, 5, 4, 6, 8, 7, 10, 9, 12, 11, 13],
        20,
    ),
    (
        14,
        &[1, 3, 4, 2, 5, 6, 7, 9, 8, 11, 10, 13, 12, 14],
        &[1, 2, 3, 5, 4, 6, 8, 7, 10, 9, 12, 11, 13, 14],
        23,
    ),
    (
        15,
        &[1, 3, 4, 2, 5, 6, 7, 9, 8, 11, 10, 13, 12, 14, 15],
        &[1, 2, 3, 5, 4, 6, 8, 7, 10, 9, 12, 11, 14, 13, 15],
        24,
    ),
];

impl BasePairCatalog {
    /// Parses the literal table and re-checks every entry.
    pub fn build() -> Result<Self> {
        let entries = RAW_CATALOG
            .iter()
            .map(|&(n, a, b, cost)| {
                Ok(BasePair {
                    n,
                    a: HamPath::from_one_indexed(a)?,
                    b: HamPath::from_one_indexed(b)?,
                    cost,
                    optimal: n <= 11,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let catalog = BasePairCatalog { entries };
        catalog.verify()?;
        Ok(catalog)
    }

    /// Hamiltonian, anchored at `v1`/`vn`, edge-disjoint, stated cost.
    pub fn verify(&self) -> Result<()> {
        for e in &self.entries {
            let line = make_uniform_line(e.n)?;
            for p in [&e.a, &e.b] {
                if p.len() != e.n || p.start() != 0 || p.end() != e.n - 1 {
                    return Err(Error::InvalidSolution(format!(
                        "catalog n={}: path {:?} is not a (v1, v{})-path",
                        e.n,
                        p.one_indexed(),
                        e.n
                    )));
                }
            }
            let pair = DisjointPair::new(e.a.clone(), e.b.clone(), &line)
                .map_err(|err| Error::InvalidSolution(format!("catalog n={}: {err}", e.n)))?;
            if pair.objective != e.cost as f64 {
                return Err(Error::InvalidSolution(format!(
                    "catalog n={}: cost {} differs from stated {}",
                    e.n, pair.objective, e.cost
                )));
            }
        }
        Ok(())
    }

    pub fn get(&self, n: usize) -> Option<&BasePair> {
        self.entries.iter().find(|e| e.n == n)
    }

    pub fn entries(&self) -> &[BasePair] {
        &self.entries
    }
}

/// The verified catalog. Panics on first use if a transcribed entry is wrong.
pub fn catalog() -> &'static BasePairCatalog {
    static CATALOG: OnceLock<BasePairCatalog> = OnceLock::new();
    CATALOG.get_or_init(|| BasePairCatalog::build().expect("base pair catalog failed its self-check"))
}

/// `x || y`: `y`'s vertex 0 is glued onto `x`'s last vertex and the rest of
/// `y` is shifted to follow. `x` must end at its highest label and `y`
/// must start at 0.
pub fn concat(x: &HamPath, y: &HamPath) -> Result<HamPath> {
    let junction = x.len() - 1;
    if x.end() != junction || y.start() != 0 {
        return Err(Error::Precondition(format!(
            "cannot join: x ends at {} (needs {junction}), y starts at {} (needs 0)",
            x.end(),
            y.start()
        )));
    }
    let mut order = x.order().to_vec();
    order.extend(y.order()[1..].iter().map(|&v| v + junction));
    HamPath::new(order)
}

fn concat_pairs(parts: &[&BasePair]) -> Result<(HamPath, HamPath)> {
    let mut a = HamPath::identity(1);
    let mut b = HamPath::identity(1);
    for p in parts {
        a = concat(&a, &p.a)?;
        b = concat(&b, &p.b)?;
    }
    Ok((a, b))
}

fn infeasible_paths(n: usize) -> Error {
    Error::Infeasible(format!(
        "no pair exists for n <= 5: the uniform line on {n} points has no two edge-disjoint Hamiltonian (v1, vn)-paths"
    ))
}

/// Splits `n - 1 = 10k + l`.
fn decompose(n: usize) -> (usize, usize) {
    ((n - 1) / 10, (n - 1) % 10)
}

/// Edge-disjoint `(v1, vn)`-paths on the uniform line of `n >= 6` points.
pub fn algorithm_paths(n: usize) -> Result<DisjointPair<HamPath>> {
    if n <= 5 {
        return Err(infeasible_paths(n));
    }
    let cat = catalog();
    let line = make_uniform_line(n)?;
    if n <= 11 {
        let base = cat.get(n).expect("catalog covers 6..=11");
        return DisjointPair::new(base.a.clone(), base.b.clone(), &line);
    }
    let (k, l) = decompose(n);
    let h11 = cat.get(11).expect("catalog has n = 11");
    let mut parts: Vec<&BasePair> = Vec::with_capacity(k + 1);
    match l {
        0 => parts.extend(std::iter::repeat_n(h11, k)),
        5..=9 => {
            parts.extend(std::iter::repeat_n(h11, k));
            parts.push(cat.get(l + 1).expect("catalog has 6..=10"));
        }
        _ => {
            parts.extend(std::iter::repeat_n(h11, k - 1));
            parts.push(cat.get(l + 11).expect("catalog has 12..=15"));
        }
    }
    let (a, b) = concat_pairs(&parts)?;
    DisjointPair::new(a, b, &line)
}

/// Closed-form objective of [`algorithm_paths`].
pub fn predicted_paths_cost(n: usize) -> Result<u64> {
    if n <= 5 {
        return Err(infeasible_paths(n));
    }
    if n <= 11 {
        return Ok(catalog().get(n).expect("catalog covers 6..=11").cost);
    }
    let (k, l) = decompose(n);
    Ok(16 * k as u64 + F_TABLE.get(l).unwrap_or(0))
}

/// Turns each path of `algorithm_paths(n + 1)` into a tour on the uniform
/// circle of `n` points by merging the last vertex into the first.
pub fn algorithm_tours(n: usize) -> Result<DisjointPair<Tour>> {
    if n <= 4 {
        return Err(Error::Infeasible(format!(
            "no pair exists for n <= 4: the uniform circle on {n} points has no two edge-disjoint tours"
        )));
    }
    let paths = algorithm_paths(n + 1)?;
    let contract = |p: &HamPath| Tour::new(p.order()[..n].to_vec());
    let circle = make_uniform_circle(n)?;
    DisjointPair::new(contract(&paths.a)?, contract(&paths.b)?, &circle)
}
