//! Loss-ratio reports and sweeps over `n`.

use num_rational::Ratio;
use serde::Serialize;

use crate::constructions::{algorithm_paths, algorithm_tours, predicted_paths_cost};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::instances::{
    as_exact_integer, make_shp_witness, make_tsp_witness, shp_witness_weight, tsp_witness_weight, Instance,
};
use crate::metric::ExactSolverBudget;
use crate::oracle::{witness_ratio, OracleConfig, Problem};

/// Slack allowed when comparing a real ratio against a target.
pub const RATIO_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioReport {
    pub instance: String,
    pub algorithm: String,
    pub objective: f64,
    pub opt: f64,
    pub ratio: f64,
    /// Present when both costs are integers.
    pub exact: Option<Ratio<i64>>,
    pub oracle_min_max: Option<f64>,
}

impl RatioReport {
    pub fn new(
        instance: String,
        algorithm: String,
        objective: f64,
        opt: f64,
        oracle_min_max: Option<f64>,
    ) -> Result<Self> {
        if !(opt > 0.0) {
            return Err(Error::Precondition(format!("OPT must be positive, got {opt}")));
        }
        let exact = match (as_exact_integer(objective), as_exact_integer(opt)) {
            (Some(a), Some(b)) => Some(Ratio::new(a, b)),
            _ => None,
        };
        Ok(RatioReport {
            instance,
            algorithm,
            objective,
            opt,
            ratio: objective / opt,
            exact,
            oracle_min_max,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepPoint {
    pub n: usize,
    pub objective: i64,
    pub opt: i64,
    pub ratio: Ratio<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
    /// `running_max[i]` is the largest ratio among `points[..=i]`.
    pub running_max: Vec<Ratio<i64>>,
    pub max: Ratio<i64>,
    /// Smallest `n` attaining `max`.
    pub argmax: usize,
    /// Mean ratio over the points with `n % 10 == 1`.
    pub tail_average: Option<f64>,
}

impl SweepResult {
    pub fn from_points(points: Vec<SweepPoint>) -> Result<Self> {
        let first = points.first().ok_or_else(|| Error::Range("empty sweep".into()))?;
        let (mut max, mut argmax) = (first.ratio, first.n);
        let mut running_max = Vec::with_capacity(points.len());
        for p in &points {
            if p.ratio > max {
                max = p.ratio;
                argmax = p.n;
            }
            running_max.push(max);
        }
        let tail: Vec<f64> = points
            .iter()
            .filter(|p| p.n % 10 == 1)
            .map(|p| *p.ratio.numer() as f64 / *p.ratio.denom() as f64)
            .collect();
        let tail_average = (!tail.is_empty()).then(|| tail.iter().sum::<f64>() / tail.len() as f64);
        Ok(SweepResult {
            points,
            running_max,
            max,
            argmax,
            tail_average,
        })
    }

    pub fn get(&self, n: usize) -> Option<&SweepPoint> {
        self.points.iter().find(|p| p.n == n)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,objective,opt,ratio,ratio_float,running_max\n");
        for (p, m) in self.points.iter().zip(&self.running_max) {
            s.push_str(&format!(
                "{},{},{},{},{:.12},{}\n",
                p.n,
                p.objective,
                p.opt,
                p.ratio,
                *p.ratio.numer() as f64 / *p.ratio.denom() as f64,
                m
            ));
        }
        s
    }
}

fn check_range(n_min: usize, n_max: usize, floor: usize) -> Result<()> {
    if n_min < floor {
        return Err(Error::Infeasible(format!("sweep must start at n >= {floor}, got {n_min}")));
    }
    if n_max < n_min {
        return Err(Error::Range(format!("empty range {n_min}..={n_max}")));
    }
    Ok(())
}

fn sweep<F>(range: std::ops::RangeInclusive<usize>, exec: Execution, f: F) -> Result<SweepResult>
where
    F: Fn(usize) -> Result<(i64, i64)> + Sync + Send,
{
    let points = exec
        .map(range.collect(), |n| {
            f(n).map(|(objective, opt)| SweepPoint {
                n,
                objective,
                opt,
                ratio: Ratio::new(objective, opt),
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    SweepResult::from_points(points)
}

fn int(x: f64) -> Result<i64> {
    as_exact_integer(x).ok_or_else(|| Error::Precondition(format!("expected an integer cost, got {x}")))
}

/// `predicted_paths_cost(n) / (n - 1)` for each `n`.
pub fn sweep_paths(n_min: usize, n_max: usize, exec: Execution) -> Result<SweepResult> {
    check_range(n_min, n_max, 6)?;
    sweep(n_min..=n_max, exec, |n| Ok((predicted_paths_cost(n)? as i64, n as i64 - 1)))
}

/// Objective of the constructed path pair over `n - 1`.
pub fn sweep_paths_realized(n_min: usize, n_max: usize, exec: Execution) -> Result<SweepResult> {
    check_range(n_min, n_max, 6)?;
    sweep(n_min..=n_max, exec, |n| Ok((int(algorithm_paths(n)?.objective)?, n as i64 - 1)))
}

/// `predicted_paths_cost(n + 1) / n` for each `n`.
pub fn sweep_tours(n_min: usize, n_max: usize, exec: Execution) -> Result<SweepResult> {
    check_range(n_min, n_max, 5)?;
    sweep(n_min..=n_max, exec, |n| Ok((predicted_paths_cost(n + 1)? as i64, n as i64)))
}

/// Objective of the constructed tour pair over `n`.
pub fn sweep_tours_realized(n_min: usize, n_max: usize, exec: Execution) -> Result<SweepResult> {
    check_range(n_min, n_max, 5)?;
    sweep(n_min..=n_max, exec, |n| Ok((int(algorithm_tours(n)?.objective)?, n as i64)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessPoint {
    pub eps: f64,
    /// Heavy weight used (the formula value, raised to at least 1).
    pub weight: f64,
    pub target: f64,
    pub report: RatioReport,
    pub meets_target: bool,
}

/// Builds the weighted witness for each `eps` and measures its oracle ratio.
pub fn witness_sweep(
    problem: Problem,
    n: usize,
    epsilons: &[f64],
    cfg: &OracleConfig,
    budget: &ExactSolverBudget,
) -> Result<Vec<WitnessPoint>> {
    epsilons
        .iter()
        .map(|&eps| {
            if !(eps > 0.0) || !eps.is_finite() {
                return Err(Error::Range(format!("eps must be positive, got {eps}")));
            }
            let (instance, weight, target) = match problem {
                Problem::Shp2 => {
                    let w = shp_witness_weight(n, eps).max(1.0);
                    (Instance::Line(make_shp_witness(n, w)?), w, 3.0 - eps)
                }
                Problem::Tsp2 => {
                    let w = tsp_witness_weight(n, eps).max(1.0);
                    (Instance::Circle(make_tsp_witness(n, w)?), w, 2.0 - eps)
                }
            };
            let mut report = witness_ratio(&instance, problem, cfg, budget)?;
            report.instance = format!("{} W={weight}", report.instance);
            Ok(WitnessPoint {
                eps,
                weight,
                target,
                meets_target: report.ratio >= target - RATIO_TOL,
                report,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_sweep_examples() {
        let s = sweep_paths(6, 120, Execution::Parallel).unwrap();
        assert_eq!(s.max, Ratio::new(13, 7));
        assert_eq!(s.argmax, 8);
        assert_eq!(s.get(101).unwrap().ratio, Ratio::new(8, 5));
        assert_eq!(s.get(14).unwrap().ratio, Ratio::new(23, 13));
        assert!(s.running_max.windows(2).all(|w| w[0] <= w[1]));
        assert!((s.tail_average.unwrap() - 1.6).abs() < RATIO_TOL);
    }

    #[test]
    fn tours_sweep_examples() {
        let s = sweep_tours(5, 100, Execution::Sequential).unwrap();
        assert_eq!(s.get(7).unwrap().ratio, Ratio::new(13, 7));
        assert_eq!(s.get(100).unwrap().ratio, Ratio::new(160, 100));
        assert_eq!(s.get(5).unwrap().ratio, Ratio::new(9, 5));
        assert_eq!((s.max, s.argmax), (Ratio::new(13, 7), 7));
    }

    #[test]
    fn range_errors() {
        assert!(matches!(sweep_paths(5, 10, Execution::Sequential), Err(Error::Infeasible(_))));
        assert!(matches!(sweep_tours(4, 10, Execution::Sequential), Err(Error::Infeasible(_))));
        assert!(matches!(sweep_paths(9, 8, Execution::Sequential), Err(Error::Range(_))));
    }

    #[test]
    fn ratio_report_needs_positive_opt() {
        assert!(RatioReport::new("x".into(), "y".into(), 1.0, 0.0, None).is_err());
        let r = RatioReport::new("x".into(), "y".into(), 13.0, 7.0, None).unwrap();
        assert_eq!(r.exact, Some(Ratio::new(13, 7)));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let s = sweep_paths(6, 8, Execution::Sequential).unwrap();
        let csv = s.to_csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().nth(3).unwrap().starts_with("8,13,7,13/7,"));
    }
}
