//! Segment depth: how many solution edges pass over each segment.
//!
//! On a line, edge `(j, k)` with `j < k` covers segments `j..k` and the
//! vertices strictly between `j` and `k`. On a circle an edge covers the
//! segments of its shorter arc (see [`CircleInstance::arc`]). Summing
//! `depth * segment length` over all segments gives the solution cost.

use crate::error::{Error, Result};
use crate::instances::{edge_disjoint, CircleInstance, HamPath, Solution, Tour};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Line,
    Circle,
}

/// Per-segment cover counts of one solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthProfile {
    depths: Vec<u32>,
    kind: ProfileKind,
}

impl DepthProfile {
    pub fn new(depths: Vec<u32>, kind: ProfileKind) -> Self {
        DepthProfile { depths, kind }
    }

    pub fn depths(&self) -> &[u32] {
        &self.depths
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.depths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depths.is_empty()
    }

    pub fn max_depth(&self) -> u32 {
        self.depths.iter().copied().max().unwrap_or(0)
    }

    /// Depth of segment `i`, wrapping around on circles.
    pub fn at(&self, i: usize) -> u32 {
        match self.kind {
            ProfileKind::Circle => self.depths[i % self.depths.len()],
            ProfileKind::Line => self.depths[i],
        }
    }

    /// `sum(depth * length)`; equals the solution cost.
    pub fn weighted_sum(&self, lengths: &[f64]) -> f64 {
        self.depths.iter().zip(lengths).map(|(&d, &l)| d as f64 * l).sum()
    }

    /// `sum(depth)`; the cost on a uniform instance.
    pub fn total(&self) -> u64 {
        self.depths.iter().map(|&d| d as u64).sum()
    }
}

pub fn path_depth_profile(path: &HamPath, n: usize) -> Result<DepthProfile> {
    if path.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: path.len(),
        });
    }
    let mut depths = vec![0u32; n.saturating_sub(1)];
    for (j, k) in path.edges() {
        for d in &mut depths[j..k] {
            *d += 1;
        }
    }
    Ok(DepthProfile::new(depths, ProfileKind::Line))
}

pub fn tour_depth_profile(tour: &Tour, circle: &CircleInstance) -> Result<DepthProfile> {
    let n = crate::instances::Metric::len(circle);
    if tour.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: tour.len(),
        });
    }
    let mut depths = vec![0u32; n];
    for (a, b) in tour.edges() {
        let arc = circle.arc(a, b);
        for i in 0..arc.len {
            depths[(arc.start + i) % n] += 1;
        }
    }
    Ok(DepthProfile::new(depths, ProfileKind::Circle))
}

/// Whether any edge of the tour joins two antipodal points.
pub fn has_antipodal_edge(tour: &Tour, circle: &CircleInstance) -> bool {
    tour.edges().iter().any(|&(a, b)| circle.is_antipodal(a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    OddDepth,
    EvenDepth,
    Mixed,
}

pub fn parity_class(profile: &DepthProfile) -> ParityClass {
    let odd = profile.depths.iter().filter(|&&d| d % 2 == 1).count();
    if odd == profile.len() {
        ParityClass::OddDepth
    } else if odd == 0 {
        ParityClass::EvenDepth
    } else {
        ParityClass::Mixed
    }
}

/// `covered[v]`: some path edge passes strictly over vertex `v`.
pub fn path_covered_vertices(path: &HamPath) -> Vec<bool> {
    let mut covered = vec![false; path.len()];
    for (j, k) in path.edges() {
        for c in &mut covered[j + 1..k] {
            *c = true;
        }
    }
    covered
}

pub fn tour_covered_vertices(tour: &Tour, circle: &CircleInstance) -> Vec<bool> {
    let n = tour.len();
    let mut covered = vec![false; n];
    for (a, b) in tour.edges() {
        let arc = circle.arc(a, b);
        for i in 1..arc.len {
            covered[(arc.start + i) % n] = true;
        }
    }
    covered
}

/// Interior vertices covered by neither path. `s` and `t` never qualify.
pub fn path_cut_points(a: &HamPath, b: &HamPath) -> Vec<usize> {
    let ca = path_covered_vertices(a);
    let cb = path_covered_vertices(b);
    let n = a.len();
    (1..n.saturating_sub(1)).filter(|&v| !ca[v] && !cb[v]).collect()
}

pub fn tour_cut_points(a: &Tour, b: &Tour, circle: &CircleInstance) -> Vec<usize> {
    let ca = tour_covered_vertices(a, circle);
    let cb = tour_covered_vertices(b, circle);
    (0..a.len()).filter(|&v| !ca[v] && !cb[v]).collect()
}

/// `len` consecutive segments starting at segment `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub start: usize,
    pub len: usize,
}

pub fn piece_total_depth(a: &DepthProfile, b: &DepthProfile, piece: Piece) -> Result<u32> {
    if a.kind != b.kind || a.len() != b.len() {
        return Err(Error::Precondition("profiles describe different segment sets".into()));
    }
    let m = a.len();
    let fits = match a.kind {
        ProfileKind::Line => piece.start + piece.len <= m,
        ProfileKind::Circle => piece.start < m && piece.len <= m,
    };
    if piece.len == 0 || !fits {
        return Err(Error::Range(format!(
            "piece {}+{} does not fit {m} segments",
            piece.start, piece.len
        )));
    }
    Ok((piece.start..piece.start + piece.len).map(|i| a.at(i) + b.at(i)).sum())
}

/// Every `len`-piece of the segment set (wrapping on circles).
pub fn pieces(profile: &DepthProfile, len: usize) -> Vec<Piece> {
    let m = profile.len();
    match profile.kind {
        ProfileKind::Line if len <= m => (0..=m - len).map(|start| Piece { start, len }).collect(),
        ProfileKind::Circle if len <= m => (0..m).map(|start| Piece { start, len }).collect(),
        _ => Vec::new(),
    }
}

/// Maximal circular run of segments with depth 1 in both tours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneSection {
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSections {
    pub sections: Vec<OneSection>,
    /// `distances[i]`: segments separating section `i` from section `i + 1`
    /// (cyclically). Empty when there are fewer than two sections.
    pub distances: Vec<usize>,
}

impl OneSections {
    pub fn max_len(&self) -> usize {
        self.sections.iter().map(|s| s.len).max().unwrap_or(0)
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.distances.iter().copied().min()
    }
}

/// 1-sections of a pair of edge-disjoint odd-depth tours.
pub fn one_sections(a: &Tour, b: &Tour, circle: &CircleInstance) -> Result<OneSections> {
    if !edge_disjoint(a, b) {
        return Err(Error::Precondition("tours share an edge".into()));
    }
    let pa = tour_depth_profile(a, circle)?;
    let pb = tour_depth_profile(b, circle)?;
    if parity_class(&pa) != ParityClass::OddDepth || parity_class(&pb) != ParityClass::OddDepth {
        return Err(Error::Precondition("both tours must be odd-depth".into()));
    }
    Ok(one_sections_of_profiles(&pa, &pb))
}

/// 1-sections of two circular profiles, without the disjointness and parity checks.
pub fn one_sections_of_profiles(pa: &DepthProfile, pb: &DepthProfile) -> OneSections {
    let n = pa.len();
    let ones: Vec<bool> = (0..n).map(|i| pa.at(i) == 1 && pb.at(i) == 1).collect();
    let Some(anchor) = ones.iter().position(|&x| !x) else {
        return OneSections {
            sections: vec![OneSection { start: 0, len: n }],
            distances: Vec::new(),
        };
    };
    let mut sections = Vec::new();
    let mut i = 1;
    while i <= n {
        let s = (anchor + i) % n;
        if ones[s] {
            let mut len = 0;
            while ones[(s + len) % n] {
                len += 1;
            }
            sections.push(OneSection { start: s, len });
            i += len;
        } else {
            i += 1;
        }
    }
    let distances = if sections.len() < 2 {
        Vec::new()
    } else {
        (0..sections.len())
            .map(|k| {
                let cur = sections[k];
                let next = sections[(k + 1) % sections.len()];
                (next.start + n - (cur.start + cur.len) % n) % n
            })
            .collect()
    };
    OneSections { sections, distances }
}
