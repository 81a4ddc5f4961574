use std::path::Path;

use anyhow::{bail, Context as _, Result};
use hampair::analysis::{
    sweep_paths, sweep_paths_realized, sweep_tours, sweep_tours_realized, witness_sweep, RatioReport, SweepPoint,
    SweepResult,
};
use hampair::constructions::{algorithm_paths, algorithm_tours};
use hampair::instances::{
    as_exact_integer, make_shp_witness, make_tsp_witness, make_uniform_circle, make_uniform_line, CircleInstance,
    DisjointPair, HamPath, Instance, Metric, MetricInstance, Solution, Tour,
};
use hampair::io::{instance_from_json, pair_to_dot, solution_from_json, to_dot, AnySolution, InstanceJson, PairJson, SolutionJson};
use hampair::metric::{shp2_metric, tsp2_naive};
use hampair::oracle::{search_path_pairs, search_tour_pairs, verify_small_claims, ObjectiveKind, OracleConfig, OracleReport, Problem};
use hampair::properties::structural_suite;
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::{Command, ConstructProblem, Context, Family, Format, Objective, OracleProblem, SolveProblem, Source, Status, Usage};

type Output = (String, Status);

pub fn dispatch(cmd: &Command, ctx: &Context) -> Result<Output> {
    match cmd {
        Command::Construct { problem, n, format } => construct(ctx, *problem, *n, ctx.format(*format)),
        Command::Solve {
            problem,
            source,
            from,
            to,
            baseline,
            format,
        } => solve(ctx, *problem, source, *from, *to, baseline.as_deref(), ctx.format(*format)),
        Command::Oracle {
            problem,
            source,
            objective,
            bound,
            from,
            to,
            format,
        } => oracle(ctx, *problem, source, *objective, *bound, *from, *to, ctx.format(*format)),
        Command::VerifyClaims { format } => verify_claims(ctx, ctx.format(*format)),
        Command::Sweep {
            problem,
            from,
            to,
            realized,
            format,
        } => sweep(ctx, *problem, *from, *to, *realized, ctx.format(*format)),
        Command::Witness { problem, n, eps, format } => witness(ctx, *problem, *n, eps, ctx.format(*format)),
        Command::Export { source, solution, format } => export(ctx, source, solution, ctx.format(*format)),
    }
}

fn ok(text: String) -> Result<Output> {
    Ok((text, Status::Ok))
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn num(x: f64) -> String {
    match as_exact_integer(x) {
        Some(i) => i.to_string(),
        None => format!("{x:.6}"),
    }
}

fn labels(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn unsupported(format: Format, cmd: &str) -> anyhow::Error {
    Usage(format!("{cmd} cannot write {format:?} output")).into()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Parses an instance file. Command outputs holding an `instance` field are
/// accepted too.
fn parse_instance_file(path: &Path) -> Result<Instance> {
    let text = read(path)?;
    if let Ok(Value::Object(map)) = serde_json::from_str::<Value>(&text) {
        if let Some(inner) = map.get("instance").filter(|v| v.is_object()) {
            let j: InstanceJson = serde_json::from_value(inner.clone()).with_context(|| path.display().to_string())?;
            return Ok(j.into_instance()?);
        }
    }
    instance_from_json(&text).with_context(|| path.display().to_string())
}

fn load_instance(ctx: &Context, src: &Source) -> Result<Instance> {
    match (src.family, &src.instance) {
        (Some(_), Some(_)) | (None, None) => Err(Usage("give exactly one of --family or --instance".into()).into()),
        (None, Some(path)) => {
            if src.n.is_some() || src.weight.is_some() {
                bail!(Usage("--n and --weight only apply to --family".into()));
            }
            parse_instance_file(path)
        }
        (Some(family), None) => {
            let n = src.n.ok_or_else(|| Usage("--family needs --n".into()))?;
            let weight = || src.weight.ok_or_else(|| Usage("witness families need --weight".into()));
            Ok(match family {
                Family::Line => Instance::Line(make_uniform_line(n)?),
                Family::Circle => Instance::Circle(make_uniform_circle(n)?),
                Family::Metric => Instance::Metric(MetricInstance::random(n, ctx.seed)?),
                Family::ShpWitness => Instance::Line(make_shp_witness(n, weight()?)?),
                Family::TspWitness => Instance::Circle(make_tsp_witness(n, weight()?)?),
            })
        }
    }
}

/// 1-indexed CLI endpoint to 0-indexed vertex.
fn endpoint(v: Option<usize>, default: usize, n: usize, flag: &str) -> Result<usize> {
    match v {
        None => Ok(default),
        Some(x) if (1..=n).contains(&x) => Ok(x - 1),
        Some(x) => Err(Usage(format!("{flag} {x} is outside 1..={n}")).into()),
    }
}

fn describe(inst: &Instance) -> String {
    format!("{} n={}", inst.kind(), inst.len())
}

fn pair_lines<S: Solution>(pair: &DisjointPair<S>) -> String {
    format!(
        "first:  {} (cost {})\nsecond: {} (cost {})\nobjective {}, total {}\n",
        labels(&pair.a.one_indexed()),
        num(pair.cost_a),
        labels(&pair.b.one_indexed()),
        num(pair.cost_b),
        num(pair.objective),
        num(pair.total()),
    )
}

fn ratio_line(r: &RatioReport) -> String {
    match r.exact {
        Some(q) => format!("ratio {} ({:.6}) against {}\n", q, r.ratio, num(r.opt)),
        None => format!("ratio {:.6} against {}\n", r.ratio, num(r.opt)),
    }
}

/// Shared output for commands that produce one pair.
fn emit_pair<S: Solution>(
    inst: &Instance,
    pair: &DisjointPair<S>,
    report: &RatioReport,
    extra: Value,
    format: Format,
    cmd: &str,
) -> Result<String> {
    match format {
        Format::Text => Ok(format!(
            "{} on {}\n{}{}",
            report.algorithm,
            describe(inst),
            pair_lines(pair),
            ratio_line(report)
        )),
        Format::Json => pretty(&json!({
            "instance": InstanceJson::from_instance(inst),
            "pair": PairJson::from_pair(pair, inst)?,
            "report": report,
            "details": extra,
        })),
        Format::Dot => Ok(pair_to_dot(inst, pair)),
        Format::Csv => Err(unsupported(format, cmd)),
    }
}

fn construct(ctx: &Context, problem: ConstructProblem, n: usize, format: Format) -> Result<Output> {
    let text = match problem {
        ConstructProblem::Paths => {
            let pair = algorithm_paths(n)?;
            let inst = Instance::Line(make_uniform_line(n)?);
            let report = RatioReport::new(describe(&inst), "paths construction".into(), pair.objective, (n - 1) as f64, None)?;
            emit_pair(&inst, &pair, &report, Value::Null, format, "construct")?
        }
        ConstructProblem::Tours => {
            let pair = algorithm_tours(n)?;
            let inst = Instance::Circle(make_uniform_circle(n)?);
            let report = RatioReport::new(describe(&inst), "tours construction".into(), pair.objective, n as f64, None)?;
            emit_pair(&inst, &pair, &report, Value::Null, format, "construct")?
        }
        ConstructProblem::NaiveTours => {
            let inst = Instance::Circle(make_uniform_circle(n.max(1))?);
            let out = tsp2_naive(&inst, &ctx.budget, None)?;
            let report = RatioReport::new(describe(&inst), "naive tours".into(), out.pair.objective, out.baseline_cost, None)?;
            emit_pair(&inst, &out.pair, &report, Value::Null, format, "construct")?
        }
    };
    ok(text)
}

fn load_baseline(path: &Path, inst: &Instance) -> Result<AnySolution> {
    let j = solution_from_json(&read(path)?).with_context(|| path.display().to_string())?;
    Ok(j.validate(inst)?)
}

fn solve(
    ctx: &Context,
    problem: SolveProblem,
    src: &Source,
    from: Option<usize>,
    to: Option<usize>,
    baseline: Option<&Path>,
    format: Format,
) -> Result<Output> {
    let inst = load_instance(ctx, src)?;
    let n = inst.len();
    let baseline = baseline.map(|p| load_baseline(p, &inst)).transpose()?;
    let text = match problem {
        SolveProblem::Shp2 => {
            let s = endpoint(from, 0, n, "--from")?;
            let t = endpoint(to, n.saturating_sub(1), n, "--to")?;
            let base = match baseline {
                Some(AnySolution::Path(p)) => Some(p),
                Some(AnySolution::Tour(_)) => bail!(Usage("shp2 needs a path baseline".into())),
                None => None,
            };
            let out = shp2_metric(&inst, s, t, &ctx.budget, base)?;
            let report = RatioReport::new(describe(&inst), "shp2".into(), out.pair.objective, out.baseline_cost, None)?;
            let extra = json!({
                "baseline": out.baseline.one_indexed(),
                "baseline_cost": out.baseline_cost,
                "max_cover": out.max_cover(),
            });
            let mut text = emit_pair(&inst, &out.pair, &report, extra, format, "solve")?;
            if format == Format::Text {
                text.push_str(&format!(
                    "baseline {} (cost {}), max cover {}\n",
                    labels(&out.baseline.one_indexed()),
                    num(out.baseline_cost),
                    out.max_cover()
                ));
            }
            text
        }
        SolveProblem::Tsp2 => {
            if from.is_some() || to.is_some() {
                bail!(Usage("--from/--to only apply to shp2".into()));
            }
            let base = match baseline {
                Some(AnySolution::Tour(t)) => Some(t),
                Some(AnySolution::Path(_)) => bail!(Usage("tsp2 needs a tour baseline".into())),
                None => None,
            };
            let out = tsp2_naive(&inst, &ctx.budget, base)?;
            let base_labels: Vec<usize> = out.baseline.iter().map(|v| v + 1).collect();
            let report = RatioReport::new(describe(&inst), "tsp2".into(), out.pair.objective, out.baseline_cost, None)?;
            let extra = json!({ "baseline": base_labels, "baseline_cost": out.baseline_cost });
            let mut text = emit_pair(&inst, &out.pair, &report, extra, format, "solve")?;
            if format == Format::Text {
                text.push_str(&format!("baseline {} (cost {})\n", labels(&base_labels), num(out.baseline_cost)));
            }
            text
        }
    };
    ok(text)
}

fn oracle_output<S: Solution>(inst: &Instance, r: &OracleReport<S>, format: Format) -> Result<String> {
    let opt = |x: Option<f64>| x.map(num).unwrap_or_else(|| "-".into());
    match format {
        Format::Text => {
            let mut s = format!(
                "oracle on {} ({}, bound {})\nfeasible: {}\nmin-max cost: {}\nmin-total cost: {}\n",
                describe(inst),
                objective_name(r.objective),
                opt(r.bound),
                if r.feasible { "yes" } else { "no" },
                opt(r.min_max_cost),
                opt(r.min_total_cost),
            );
            if let Some(w) = &r.witness {
                s.push_str(&pair_lines(w));
            }
            s.push_str(&format!(
                "explored {} nodes, {} single solutions, {:.3} s\n",
                r.explored,
                r.solutions,
                r.elapsed.as_secs_f64()
            ));
            Ok(s)
        }
        Format::Json => {
            let witness = r.witness.as_ref().map(|w| PairJson::from_pair(w, inst)).transpose()?;
            pretty(&json!({
                "instance": InstanceJson::from_instance(inst),
                "objective": r.objective,
                "bound": r.bound,
                "feasible": r.feasible,
                "min_max_cost": r.min_max_cost,
                "min_total_cost": r.min_total_cost,
                "pair": witness,
                "explored": r.explored,
                "solutions": r.solutions,
                "elapsed_secs": r.elapsed.as_secs_f64(),
            }))
        }
        Format::Dot => match &r.witness {
            Some(w) => Ok(pair_to_dot(inst, w)),
            None => bail!("no pair found, nothing to draw"),
        },
        Format::Csv => Err(unsupported(format, "oracle")),
    }
}

fn objective_name(o: ObjectiveKind) -> &'static str {
    match o {
        ObjectiveKind::MinMax => "min-max",
        ObjectiveKind::MinTotal => "min-total",
    }
}

#[allow(clippy::too_many_arguments)]
fn oracle(
    ctx: &Context,
    problem: OracleProblem,
    src: &Source,
    objective: Objective,
    bound: Option<f64>,
    from: Option<usize>,
    to: Option<usize>,
    format: Format,
) -> Result<Output> {
    let inst = load_instance(ctx, src)?;
    let n = inst.len();
    let cfg = OracleConfig {
        bound,
        exec: ctx.exec,
        time_limit: ctx.time_limit,
        ..Default::default()
    };
    let obj = match objective {
        Objective::MinMax => ObjectiveKind::MinMax,
        Objective::MinTotal => ObjectiveKind::MinTotal,
    };
    let text = match problem {
        OracleProblem::Paths => {
            let s = endpoint(from, 0, n, "--from")?;
            let t = endpoint(to, n.saturating_sub(1), n, "--to")?;
            oracle_output(&inst, &search_path_pairs(&inst, s, t, obj, &cfg)?, format)?
        }
        OracleProblem::Tours => oracle_output(&inst, &search_tour_pairs(&inst, obj, &cfg)?, format)?,
    };
    ok(text)
}

fn verify_claims(ctx: &Context, format: Format) -> Result<Output> {
    let claims = verify_small_claims(ctx.exec)?;
    let props = structural_suite(ctx.exec)?;
    let passed = claims.all_passed() && props.iter().all(|p| p.passed());
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for c in &claims.checks {
                s.push_str(&format!("{}  {}: {}\n", verdict(c.passed), c.name, c.detail));
            }
            for p in &props {
                s.push_str(&format!(
                    "{}  {}: {} cases, {} violations\n",
                    verdict(p.passed()),
                    p.name,
                    p.cases,
                    p.violations
                ));
                for e in &p.examples {
                    s.push_str(&format!("      e.g. {e}\n"));
                }
            }
            let total = claims.checks.len() + props.len();
            let good = claims.checks.iter().filter(|c| c.passed).count() + props.iter().filter(|p| p.passed()).count();
            s.push_str(&format!("{good} of {total} checks passed\n"));
            s
        }
        Format::Json => pretty(&json!({ "passed": passed, "claims": claims.checks, "properties": props }))?,
        _ => return Err(unsupported(format, "verify-claims")),
    };
    Ok((text, if passed { Status::Ok } else { Status::VerificationFailed }))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn naive_sweep(ctx: &Context, from: usize, to: usize) -> Result<SweepResult> {
    if from < 5 || to < from {
        bail!(Usage(format!("naive tours need 5 <= from <= to, got {from}..{to}")));
    }
    let points = ctx.exec.map((from..=to).collect(), |n| -> Result<SweepPoint> {
        let inst = Instance::Circle(CircleInstance::from_segments(&vec![1.0; n])?);
        let out = tsp2_naive(&inst, &ctx.budget, None)?;
        let objective = as_exact_integer(out.pair.objective).context("non-integral objective")?;
        Ok(SweepPoint {
            n,
            objective,
            opt: n as i64,
            ratio: Ratio::new(objective, n as i64),
        })
    });
    Ok(SweepResult::from_points(points.into_iter().collect::<Result<_>>()?)?)
}

fn sweep(ctx: &Context, problem: ConstructProblem, from: Option<usize>, to: usize, realized: bool, format: Format) -> Result<Output> {
    let result = match problem {
        ConstructProblem::Paths => {
            let from = from.unwrap_or(6);
            if realized {
                sweep_paths_realized(from, to, ctx.exec)?
            } else {
                sweep_paths(from, to, ctx.exec)?
            }
        }
        ConstructProblem::Tours => {
            let from = from.unwrap_or(5);
            if realized {
                sweep_tours_realized(from, to, ctx.exec)?
            } else {
                sweep_tours(from, to, ctx.exec)?
            }
        }
        ConstructProblem::NaiveTours => naive_sweep(ctx, from.unwrap_or(5), to)?,
    };
    let text = match format {
        Format::Csv => result.to_csv(),
        Format::Json => pretty(&result)?,
        Format::Text => {
            let mut s = format!(
                "{} sizes, max ratio {} at n={}\n",
                result.points.len(),
                result.max,
                result.argmax
            );
            if let Some(avg) = result.tail_average {
                s.push_str(&format!("mean ratio over n = 1 (mod 10): {avg:.6}\n"));
            }
            s
        }
        Format::Dot => return Err(unsupported(format, "sweep")),
    };
    ok(text)
}

fn witness(ctx: &Context, problem: SolveProblem, n: Option<usize>, eps: &[f64], format: Format) -> Result<Output> {
    let (problem, n) = match problem {
        SolveProblem::Shp2 => (Problem::Shp2, n.unwrap_or(8)),
        SolveProblem::Tsp2 => (Problem::Tsp2, n.unwrap_or(7)),
    };
    let cfg = OracleConfig {
        exec: ctx.exec,
        time_limit: ctx.time_limit,
        ..Default::default()
    };
    let points = witness_sweep(problem, n, eps, &cfg, &ctx.budget)?;
    let all = points.iter().all(|p| p.meets_target);
    let text = match format {
        Format::Text => points
            .iter()
            .map(|p| {
                format!(
                    "{}  eps={} W={} ratio={:.6} target={:.6} (oracle {} / optimum {})\n",
                    verdict(p.meets_target),
                    p.eps,
                    num(p.weight),
                    p.report.ratio,
                    p.target,
                    num(p.report.objective),
                    num(p.report.opt)
                )
            })
            .collect(),
        Format::Json => pretty(&points)?,
        _ => return Err(unsupported(format, "witness")),
    };
    Ok((text, if all { Status::Ok } else { Status::VerificationFailed }))
}

/// Reads every solution in a file: a single solution, a pair, or a command
/// output with a `pair` field.
fn read_solutions(path: &Path) -> Result<Vec<SolutionJson>> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text).with_context(|| path.display().to_string())?;
    let pair = value.get("pair").cloned().unwrap_or(Value::Null);
    let from_pair = |v: Value| -> Result<Vec<SolutionJson>> {
        let p: PairJson = serde_json::from_value(v).with_context(|| path.display().to_string())?;
        Ok(vec![p.first, p.second])
    };
    if pair.is_object() {
        from_pair(pair)
    } else if value.get("first").is_some() {
        from_pair(value)
    } else {
        Ok(vec![solution_from_json(&text).with_context(|| path.display().to_string())?])
    }
}

fn export(ctx: &Context, src: &Source, files: &[std::path::PathBuf], format: Format) -> Result<Output> {
    let inst = load_instance(ctx, src)?;
    let mut sols = Vec::new();
    for f in files {
        for j in read_solutions(f)? {
            let s = j.validate(&inst).with_context(|| f.display().to_string())?;
            sols.push((j, s));
        }
    }
    let text = match format {
        Format::Json if sols.is_empty() => pretty(&InstanceJson::from_instance(&inst))?,
        Format::Json => pretty(&json!({
            "instance": InstanceJson::from_instance(&inst),
            "solutions": sols.iter().map(|(j, _)| j).collect::<Vec<_>>(),
        }))?,
        Format::Dot => {
            let paths: Vec<&HamPath> = sols
                .iter()
                .filter_map(|(_, s)| match s {
                    AnySolution::Path(p) => Some(p),
                    _ => None,
                })
                .collect();
            let tours: Vec<&Tour> = sols
                .iter()
                .filter_map(|(_, s)| match s {
                    AnySolution::Tour(t) => Some(t),
                    _ => None,
                })
                .collect();
            match (paths.is_empty(), tours.is_empty()) {
                (_, true) => to_dot(&inst, &paths),
                (true, false) => to_dot(&inst, &tours),
                (false, false) => bail!(Usage("cannot mix paths and tours in one drawing".into())),
            }
        }
        _ => return Err(unsupported(format, "export")),
    };
    ok(text)
}
