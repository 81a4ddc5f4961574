//! JSON and DOT formats. Vertex labels are 1-indexed in every format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::{CircleInstance, DisjointPair, HamPath, Instance, LineInstance, Metric, MetricInstance, Solution, Tour};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum InstanceJson {
    Line { coords: Vec<f64> },
    Circle { positions: Vec<f64>, circumference: f64 },
    Metric { matrix: Vec<Vec<f64>> },
}

impl InstanceJson {
    pub fn from_instance(inst: &Instance) -> Self {
        match inst {
            Instance::Line(l) => InstanceJson::Line {
                coords: l.coords().to_vec(),
            },
            Instance::Circle(c) => InstanceJson::Circle {
                positions: c.positions().to_vec(),
                circumference: c.circumference(),
            },
            Instance::Metric(m) => InstanceJson::Metric { matrix: m.rows() },
        }
    }

    pub fn into_instance(self) -> Result<Instance> {
        Ok(match self {
            InstanceJson::Line { coords } => Instance::Line(LineInstance::new(coords)?),
            InstanceJson::Circle {
                positions,
                circumference,
            } => Instance::Circle(CircleInstance::new(positions, circumference)?),
            InstanceJson::Metric { matrix } => Instance::Metric(MetricInstance::new(matrix)?),
        })
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    serde_json::from_str::<InstanceJson>(text)
        .map_err(parse_error)?
        .into_instance()
}

pub fn instance_to_json(inst: &Instance) -> String {
    serde_json::to_string_pretty(&InstanceJson::from_instance(inst)).expect("instances serialise")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionKind {
    Path,
    Tour,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionJson {
    pub kind: SolutionKind,
    pub order: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost: Option<f64>,
}

/// A path or a tour read from JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySolution {
    Path(HamPath),
    Tour(Tour),
}

impl AnySolution {
    pub fn cost<M: Metric + ?Sized>(&self, m: &M) -> Result<f64> {
        match self {
            AnySolution::Path(p) => p.cost(m),
            AnySolution::Tour(t) => t.cost(m),
        }
    }
}

impl SolutionJson {
    pub fn from_solution<S: Solution, M: Metric + ?Sized>(s: &S, m: &M) -> Result<Self> {
        Ok(SolutionJson {
            kind: if S::CLOSED { SolutionKind::Tour } else { SolutionKind::Path },
            order: s.one_indexed(),
            cost: Some(s.cost(m)?),
        })
    }

    pub fn to_solution(&self) -> Result<AnySolution> {
        Ok(match self.kind {
            SolutionKind::Path => AnySolution::Path(HamPath::from_one_indexed(&self.order)?),
            SolutionKind::Tour => AnySolution::Tour(Tour::from_one_indexed(&self.order)?),
        })
    }

    /// Rebuilds the solution and checks the stored cost, if any, against
    /// `m` exactly.
    pub fn validate<M: Metric + ?Sized>(&self, m: &M) -> Result<AnySolution> {
        let s = self.to_solution()?;
        let c = s.cost(m)?;
        if let Some(stored) = self.cost {
            if stored != c {
                return Err(Error::InvalidSolution(format!("stored cost {stored} but the instance gives {c}")));
            }
        }
        Ok(s)
    }
}

pub fn solution_from_json(text: &str) -> Result<SolutionJson> {
    serde_json::from_str(text).map_err(parse_error)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairJson {
    pub n: usize,
    pub objective: f64,
    pub total: f64,
    pub first: SolutionJson,
    pub second: SolutionJson,
}

impl PairJson {
    pub fn from_pair<S: Solution, M: Metric + ?Sized>(pair: &DisjointPair<S>, m: &M) -> Result<Self> {
        Ok(PairJson {
            n: pair.n(),
            objective: pair.objective,
            total: pair.total(),
            first: SolutionJson::from_solution(&pair.a, m)?,
            second: SolutionJson::from_solution(&pair.b, m)?,
        })
    }
}

/// Node layout for DOT output, in inches.
fn layout(inst: &Instance) -> Option<Vec<(f64, f64)>> {
    match inst {
        Instance::Line(l) => {
            let c = l.coords();
            let span = (c[c.len() - 1] - c[0]).max(1e-9);
            let scale = 1.2 * (c.len() as f64 - 1.0).max(1.0) / span;
            Some(c.iter().map(|x| ((x - c[0]) * scale, 0.0)).collect())
        }
        Instance::Circle(c) => {
            let r = 0.4 * c.len() as f64;
            Some(
                c.positions()
                    .iter()
                    .map(|p| {
                        let a = std::f64::consts::TAU * p / c.circumference();
                        (r * a.cos(), r * a.sin())
                    })
                    .collect(),
            )
        }
        Instance::Metric(_) => None,
    }
}

const STYLES: [&str; 2] = ["color=\"#1f77b4\", style=solid, penwidth=2", "color=\"#d62728\", style=dashed, penwidth=2"];

/// Undirected DOT graph containing exactly the edges of the given
/// solutions, one style per solution.
pub fn to_dot<S: Solution>(inst: &Instance, solutions: &[&S]) -> String {
    let mut s = String::from("graph hampair {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n");
    let pos = layout(inst);
    for v in 0..inst.len() {
        match &pos {
            Some(p) => s.push_str(&format!("  {} [pos=\"{:.3},{:.3}!\"];\n", v + 1, p[v].0, p[v].1)),
            None => s.push_str(&format!("  {};\n", v + 1)),
        }
    }
    for (k, sol) in solutions.iter().enumerate() {
        let style = STYLES[k % STYLES.len()];
        for (a, b) in sol.edges() {
            s.push_str(&format!(
                "  {} -- {} [{style}, label=\"{}\"];\n",
                a + 1,
                b + 1,
                format_len(inst.dist(a, b))
            ));
        }
    }
    s.push_str("}\n");
    s
}

fn format_len(x: f64) -> String {
    match crate::instances::as_exact_integer(x) {
        Some(i) => i.to_string(),
        None => format!("{x:.3}"),
    }
}

pub fn pair_to_dot<S: Solution>(inst: &Instance, pair: &DisjointPair<S>) -> String {
    to_dot(inst, &[&pair.a, &pair.b])
}
