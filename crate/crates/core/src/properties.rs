//! Exhaustive structural checks over every path, tour or disjoint pair of
//! a small uniform instance. Each check returns its counterexamples
//! instead of panicking.

use serde::Serialize;

use crate::depth::{
    has_antipodal_edge, one_sections, parity_class, path_cut_points, path_depth_profile, piece_total_depth, pieces,
    tour_cut_points, tour_depth_profile, DepthProfile, ParityClass, Piece,
};
use crate::error::Result;
use crate::exec::Execution;
use crate::instances::{edge, make_uniform_circle, make_uniform_line, CircleInstance, Solution, Tour};
use crate::oracle::{enumerate_paths, enumerate_tours, Enumeration, OracleConfig};

/// Counterexamples kept per check; the count is always exact.
const KEEP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    /// Objects (solutions or pairs) examined.
    pub cases: usize,
    pub violations: usize,
    /// The first few violations, 1-indexed.
    pub examples: Vec<String>,
}

impl PropertyCheck {
    fn new(name: impl Into<String>) -> Self {
        PropertyCheck {
            name: name.into(),
            cases: 0,
            violations: 0,
            examples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn record(&mut self, bad: Option<String>) {
        self.cases += 1;
        if let Some(msg) = bad {
            self.violations += 1;
            if self.examples.len() < KEEP {
                self.examples.push(msg);
            }
        }
    }

    fn merge(&mut self, other: PropertyCheck) {
        self.cases += other.cases;
        self.violations += other.violations;
        for e in other.examples {
            if self.examples.len() < KEEP {
                self.examples.push(e);
            }
        }
    }
}

fn all_paths(n: usize, exec: Execution) -> Result<Enumeration<crate::instances::HamPath>> {
    let line = make_uniform_line(n)?;
    enumerate_paths(&line, 0, n - 1, &OracleConfig { exec, ..Default::default() })
}

fn all_tours(circle: &CircleInstance, exec: Execution) -> Result<Enumeration<Tour>> {
    enumerate_tours(circle, &OracleConfig { exec, ..Default::default() })
}

fn has_edge<S: Solution>(s: &S, seg: usize, n: usize) -> bool {
    let e = edge(seg, (seg + 1) % n);
    s.edges().contains(&e)
}

/// Per-path depth facts on the uniform line, for `2 <= n <= n_max`:
/// every depth is odd; the two end segments have depth 1; a 3-piece of
/// depth 3 has its middle segment in the path; a 3-piece of depth 5 whose
/// middle has depth 3 also has its middle segment in the path.
pub fn path_depth_checks(n_max: usize, exec: Execution) -> Result<Vec<PropertyCheck>> {
    let mut odd = PropertyCheck::new("paths: every segment depth is odd");
    let mut ends = PropertyCheck::new("paths: end segments have depth 1");
    let mut three = PropertyCheck::new("paths: depth-3 piece has its middle segment as an edge");
    let mut five = PropertyCheck::new("paths: depth-5 piece with middle depth 3 has its middle segment as an edge");
    for n in 2..=n_max {
        for (_, p) in all_paths(n, exec)?.solutions {
            let prof = path_depth_profile(&p, n)?;
            let d = prof.depths();
            let label = || format!("n={n} {:?} depths {:?}", p.one_indexed(), d);
            odd.record(d.iter().any(|x| x % 2 == 0).then(label));
            ends.record((d[0] != 1 || d[d.len() - 1] != 1).then(label));
            for w in 0..d.len().saturating_sub(2) {
                let sum = d[w] + d[w + 1] + d[w + 2];
                let mid_edge = has_edge(&p, w + 1, n);
                if sum == 3 {
                    three.record((!mid_edge).then(label));
                }
                if sum == 5 && d[w + 1] == 3 {
                    five.record((!mid_edge).then(label));
                }
            }
        }
    }
    Ok(vec![odd, ends, three, five])
}

/// Every tour on the uniform circle, `3 <= n <= n_max`, is odd-depth or
/// even-depth. Tours with an antipodal edge are skipped.
pub fn tour_parity_check(n_max: usize, exec: Execution) -> Result<PropertyCheck> {
    let mut check = PropertyCheck::new("tours: depths are all odd or all even");
    for n in 3..=n_max {
        let circle = make_uniform_circle(n)?;
        for (_, t) in all_tours(&circle, exec)?.solutions {
            if has_antipodal_edge(&t, &circle) {
                continue;
            }
            let prof = tour_depth_profile(&t, &circle)?;
            check.record(
                (parity_class(&prof) == ParityClass::Mixed)
                    .then(|| format!("n={n} {:?} depths {:?}", t.one_indexed(), prof.depths())),
            );
        }
    }
    Ok(check)
}

fn has_cheap_three_piece(a: &DepthProfile, b: &DepthProfile) -> bool {
    pieces(a, 3)
        .into_iter()
        .any(|p: Piece| piece_total_depth(a, b, p).is_ok_and(|d| d < 10))
}

/// Runs `f` over every disjoint pair `(i, j)`, `i < j`, of `en`, in
/// parallel by row.
fn over_pairs<S, F>(en: &Enumeration<S>, name: &str, exec: Execution, f: F) -> PropertyCheck
where
    S: Solution,
    F: Fn(usize, usize) -> Option<String> + Sync + Send,
{
    let rows: Vec<usize> = (0..en.len()).collect();
    let parts = exec.map(rows, |i| {
        let mut c = PropertyCheck::new(name);
        for j in i + 1..en.len() {
            if en.masks[i] & en.masks[j] == 0 {
                c.record(f(i, j));
            }
        }
        c
    });
    let mut total = PropertyCheck::new(name);
    for p in parts {
        total.merge(p);
    }
    total
}

/// For every disjoint path pair on the uniform line, `6 <= n <= n_max`:
/// a cut-point exists iff some 3-piece has total depth below 10.
pub fn path_cut_point_check(n_max: usize, exec: Execution) -> Result<PropertyCheck> {
    let name = "path pairs: cut-point iff a 3-piece has total depth < 10";
    let mut check = PropertyCheck::new(name);
    for n in 6..=n_max {
        let en = all_paths(n, exec)?;
        let profiles: Vec<DepthProfile> = en
            .solutions
            .iter()
            .map(|(_, p)| path_depth_profile(p, n))
            .collect::<Result<_>>()?;
        let part = over_pairs(&en, name, exec, |i, j| {
            let (a, b) = (&en.solutions[i].1, &en.solutions[j].1);
            let (pa, pb) = (&profiles[i], &profiles[j]);
            let cut = !path_cut_points(a, b).is_empty();
            let cheap = has_cheap_three_piece(pa, pb);
            (cut != cheap).then(|| {
                format!(
                    "n={n} {:?} / {:?}: cut-point {cut}, cheap piece {cheap}",
                    a.one_indexed(),
                    b.one_indexed()
                )
            })
        });
        check.merge(part);
    }
    Ok(check)
}

fn odd_depth_tours(circle: &CircleInstance, exec: Execution) -> Result<Enumeration<Tour>> {
    Ok(all_tours(circle, exec)?.filter(|t| {
        tour_depth_profile(t, circle).is_ok_and(|p| parity_class(&p) == ParityClass::OddDepth)
    }))
}

/// Tour analogue of [`path_cut_point_check`] over disjoint pairs of
/// odd-depth tours, `5 <= n <= n_max`. With `odd_only == false` every
/// disjoint tour pair is examined instead. Tours with an antipodal edge
/// are skipped since which vertices such an edge covers is a convention.
pub fn tour_cut_point_check(n_max: usize, odd_only: bool, exec: Execution) -> Result<PropertyCheck> {
    let name = if odd_only {
        "odd-depth tour pairs: cut-point iff a 3-piece has total depth < 10"
    } else {
        "all tour pairs: cut-point iff a 3-piece has total depth < 10"
    };
    let mut check = PropertyCheck::new(name);
    for n in 5..=n_max {
        let circle = make_uniform_circle(n)?;
        let en = if odd_only {
            odd_depth_tours(&circle, exec)?
        } else {
            all_tours(&circle, exec)?
        }
        .filter(|t| !has_antipodal_edge(t, &circle));
        let profiles: Vec<DepthProfile> = en
            .solutions
            .iter()
            .map(|(_, t)| tour_depth_profile(t, &circle))
            .collect::<Result<_>>()?;
        let part = over_pairs(&en, name, exec, |i, j| {
            let (a, b) = (&en.solutions[i].1, &en.solutions[j].1);
            let (pa, pb) = (&profiles[i], &profiles[j]);
            let cut = !tour_cut_points(a, b, &circle).is_empty();
            let cheap = has_cheap_three_piece(pa, pb);
            (cut != cheap).then(|| {
                format!(
                    "n={n} {:?} / {:?}: cut-point {cut}, cheap piece {cheap}",
                    a.one_indexed(),
                    b.one_indexed()
                )
            })
        });
        check.merge(part);
    }
    Ok(check)
}

/// Over every disjoint pair of odd-depth tours on the uniform circle of
/// size `n`: 1-sections have length at most 2 and are at least 2 apart.
pub fn one_section_checks(n: usize, exec: Execution) -> Result<Vec<PropertyCheck>> {
    let circle = make_uniform_circle(n)?;
    let en = odd_depth_tours(&circle, exec)?;
    let len_name = format!("odd-depth tour pairs n={n}: 1-sections have length <= 2");
    let gap_name = format!("odd-depth tour pairs n={n}: distinct 1-sections are >= 2 apart");
    let lens = over_pairs(&en, &len_name, exec, |i, j| {
        let (a, b) = (&en.solutions[i].1, &en.solutions[j].1);
        let s = one_sections(a, b, &circle).ok()?;
        (s.max_len() > 2).then(|| format!("{:?} / {:?}: {:?}", a.one_indexed(), b.one_indexed(), s.sections))
    });
    let gaps = over_pairs(&en, &gap_name, exec, |i, j| {
        let (a, b) = (&en.solutions[i].1, &en.solutions[j].1);
        let s = one_sections(a, b, &circle).ok()?;
        s.min_distance()
            .is_some_and(|d| d < 2)
            .then(|| format!("{:?} / {:?}: {:?}", a.one_indexed(), b.one_indexed(), s.sections))
    });
    Ok(vec![lens, gaps])
}

/// For every disjoint path pair on the line, `6 <= n <= n_max`, the second
/// segment and the second-to-last segment each have depth at least 3 in
/// one of the two paths. Depths do not depend on segment lengths, so the
/// uniform line stands for every weighted line.
pub fn second_segment_check(n_max: usize, exec: Execution) -> Result<PropertyCheck> {
    let name = "path pairs: second and second-to-last segments have depth >= 3 in some path";
    let mut check = PropertyCheck::new(name);
    for n in 6..=n_max {
        let en = all_paths(n, exec)?;
        let profiles: Vec<DepthProfile> = en
            .solutions
            .iter()
            .map(|(_, p)| path_depth_profile(p, n))
            .collect::<Result<_>>()?;
        let part = over_pairs(&en, name, exec, |i, j| {
            let (da, db) = (profiles[i].depths(), profiles[j].depths());
            let ok = |seg: usize| da[seg].max(db[seg]) >= 3;
            (!ok(1) || !ok(n - 3)).then(|| {
                format!(
                    "n={n} {:?} / {:?}",
                    en.solutions[i].1.one_indexed(),
                    en.solutions[j].1.one_indexed()
                )
            })
        });
        check.merge(part);
    }
    Ok(check)
}

fn tours_of_class(circle: &CircleInstance, class: ParityClass, exec: Execution) -> Result<Enumeration<Tour>> {
    Ok(all_tours(circle, exec)?.filter(|t| {
        !has_antipodal_edge(t, circle) && tour_depth_profile(t, circle).is_ok_and(|p| parity_class(&p) == class)
    }))
}

/// Over every even-depth tour, `5 <= n <= n_max`, and every window of five
/// consecutive segments `s1..s5`: if `s3` has depth 0 and `s2` is not a
/// tour edge then `s1` has depth at least 4 (and symmetrically for `s4`,
/// `s5`). Antipodal-edge tours are skipped.
pub fn even_tour_window_check(n_max: usize, exec: Execution) -> Result<PropertyCheck> {
    let mut check = PropertyCheck::new("even-depth tours: empty middle segment forces depth >= 4 two segments out");
    for n in 5..=n_max {
        let circle = make_uniform_circle(n)?;
        for (_, t) in tours_of_class(&circle, ParityClass::EvenDepth, exec)?.solutions {
            let p = tour_depth_profile(&t, &circle)?;
            for w in 0..n {
                let seg = |k: usize| (w + k) % n;
                if p.at(seg(2)) != 0 {
                    continue;
                }
                let left = has_edge(&t, seg(1), n) || p.at(seg(0)) >= 4;
                let right = has_edge(&t, seg(3), n) || p.at(seg(4)) >= 4;
                check.record((!left || !right).then(|| {
                    format!("n={n} {:?} window at segment {}: {:?}", t.one_indexed(), w + 1, p.depths())
                }));
            }
        }
    }
    Ok(check)
}

/// Over every disjoint pair of an even-depth tour `T1` and an odd-depth
/// tour `T2`, `5 <= n <= n_max`, and every five-segment window with
/// `s3` uncovered by `T1`: either `s3` has total depth at least 3, or `s1`
/// and `s5` each have total depth at least 5. Antipodal-edge tours are
/// skipped.
pub fn mixed_pair_window_check(n_max: usize, exec: Execution) -> Result<PropertyCheck> {
    let name = "even/odd tour pairs: empty middle segment forces total depth 3 there or 5 two segments out";
    let mut check = PropertyCheck::new(name);
    for n in 5..=n_max {
        let circle = make_uniform_circle(n)?;
        let evens = tours_of_class(&circle, ParityClass::EvenDepth, exec)?;
        let odds = tours_of_class(&circle, ParityClass::OddDepth, exec)?;
        let odd_profiles: Vec<DepthProfile> = odds
            .solutions
            .iter()
            .map(|(_, t)| tour_depth_profile(t, &circle))
            .collect::<Result<_>>()?;
        let rows: Vec<usize> = (0..evens.len()).collect();
        let parts = exec.map(rows, |i| {
            let mut c = PropertyCheck::new(name);
            let t1 = &evens.solutions[i].1;
            let Ok(p1) = tour_depth_profile(t1, &circle) else {
                return c;
            };
            for (j, p2) in odd_profiles.iter().enumerate() {
                if evens.masks[i] & odds.masks[j] != 0 {
                    continue;
                }
                let tot = |k: usize| p1.at(k) + p2.at(k);
                let bad = (0..n).find(|&w| {
                    let seg = |k: usize| (w + k) % n;
                    p1.at(seg(2)) == 0 && tot(seg(2)) < 3 && (tot(seg(0)) < 5 || tot(seg(4)) < 5)
                });
                c.record(bad.map(|w| {
                    format!(
                        "n={n} {:?} / {:?} window at segment {}",
                        t1.one_indexed(),
                        odds.solutions[j].1.one_indexed(),
                        w + 1
                    )
                }));
            }
            c
        });
        for p in parts {
            check.merge(p);
        }
    }
    Ok(check)
}

/// Every check of the structural suite at its standard size.
pub fn structural_suite(exec: Execution) -> Result<Vec<PropertyCheck>> {
    let mut out = path_depth_checks(9, exec)?;
    out.push(tour_parity_check(8, exec)?);
    out.push(path_cut_point_check(8, exec)?);
    out.push(tour_cut_point_check(8, true, exec)?);
    out.extend(one_section_checks(7, exec)?);
    out.push(second_segment_check(8, exec)?);
    out.push(even_tour_window_check(8, exec)?);
    out.push(mixed_pair_window_check(8, exec)?);
    Ok(out)
}
