//! The individual checks of the verification pipeline.
//!
//! Each check takes the geometry, the family and (after P1) the point
//! coloring, and returns a [`CheckRecord`] with its measured values and, on
//! failure, the lowest-indexed offending object as witness.

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use super::certificate::{CheckName, CheckRecord, Witness};
use super::family::PlaneFamily;
use crate::pg3::{Geometry, LineId, PlaneId, PointId};
use crate::quadric::{self, fit_form, is_arc_in_plane, QuadraticForm, Quadric, QuadricKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Color {
    /// On q^2 - q members.
    Black,
    /// On q^2 members.
    White,
    Invalid,
}

/// Number of family members through each point, and the resulting colors.
#[derive(Debug, Clone)]
pub struct PointColoring {
    q: u32,
    counts: Vec<u32>,
    colors: Vec<Color>,
    black: FixedBitSet,
    b: usize,
    w: usize,
    invalid: usize,
}

impl PointColoring {
    /// Colors points from given per-point counts.
    pub fn from_counts(q: u32, counts: Vec<u32>) -> Self {
        let (black_count, white_count) = (q * q - q, q * q);
        let mut black = FixedBitSet::with_capacity(counts.len());
        let colors: Vec<Color> = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if c == black_count {
                    black.insert(i);
                    Color::Black
                } else if c == white_count {
                    Color::White
                } else {
                    Color::Invalid
                }
            })
            .collect();
        let b = black.count_ones(..);
        let w = colors.iter().filter(|&&c| c == Color::White).count();
        PointColoring {
            q,
            invalid: counts.len() - b - w,
            counts,
            colors,
            black,
            b,
            w,
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, x: PointId) -> u32 {
        self.counts[x.idx()]
    }

    pub fn color(&self, x: PointId) -> Color {
        self.colors[x.idx()]
    }

    pub fn is_black(&self, x: PointId) -> bool {
        self.black.contains(x.idx())
    }

    pub fn black_mask(&self) -> &FixedBitSet {
        &self.black
    }

    pub fn black_points(&self) -> Vec<PointId> {
        self.black.ones().map(|i| PointId(i as u32)).collect()
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn invalid(&self) -> usize {
        self.invalid
    }

    pub fn invalid_points(&self) -> impl Iterator<Item = PointId> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == Color::Invalid)
            .map(|(i, _)| PointId(i as u32))
    }
}

pub fn color_points(geom: &Geometry, family: &PlaneFamily) -> PointColoring {
    let counts = geom
        .point_ids()
        .map(|x| family.count_through_point(geom, x) as u32)
        .collect();
    PointColoring::from_counts(geom.q(), counts)
}

fn qi(geom: &Geometry) -> i64 {
    geom.q() as i64
}

fn distinct(values: impl IntoIterator<Item = i64>) -> Vec<i64> {
    let mut v: Vec<i64> = values.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Black points of `geom` on `plane`.
pub fn black_on_plane(geom: &Geometry, coloring: &PointColoring, plane: PlaneId) -> usize {
    geom.plane_mask(plane).intersection_count(coloring.black_mask())
}

pub fn black_on_line(geom: &Geometry, coloring: &PointColoring, l: LineId) -> usize {
    geom.points_on_line(l)
        .iter()
        .filter(|&&x| coloring.is_black(x))
        .count()
}

/// Every point lies on q^2 - q or q^2 members.
pub fn check_p1(geom: &Geometry, coloring: &PointColoring) -> CheckRecord {
    let mut rec = CheckRecord::new(CheckName::P1)
        .value("b", coloring.b())
        .value("w", coloring.w())
        .value("invalid", coloring.invalid())
        .value("counts", distinct(coloring.counts().iter().map(|&c| c as i64)));
    if let Some(x) = coloring.invalid_points().next() {
        let q = qi(geom);
        rec.fail(
            Witness::Point { point: x },
            format!("point lies on {} members, expected {} or {}", coloring.count(x), q * q - q, q * q),
        );
    }
    rec
}

pub fn p2_allowed(q: u32) -> [u32; 4] {
    [0, q - 1, q, q + 1]
}

/// Members through each line.
pub fn line_counts(geom: &Geometry, family: &PlaneFamily) -> Vec<u32> {
    geom.line_ids()
        .map(|l| {
            geom.planes_through_line(l)
                .iter()
                .filter(|p| family.contains(**p))
                .count() as u32
        })
        .collect()
}

/// Every line lies on 0, q-1, q or q+1 members.
pub fn check_p2(geom: &Geometry, family: &PlaneFamily) -> (Vec<u32>, CheckRecord) {
    let counts = line_counts(geom, family);
    let allowed = p2_allowed(geom.q());
    let mut rec = CheckRecord::new(CheckName::P2)
        .value("spectrum", distinct(counts.iter().map(|&c| c as i64)))
        .value("allowed", allowed.to_vec());
    if let Some(i) = counts.iter().position(|c| !allowed.contains(c)) {
        rec.fail(
            Witness::Line { line: LineId(i as u32) },
            format!("line lies on {} members", counts[i]),
        );
    }
    (counts, rec)
}

/// The three double-counting identities on measured b, w and |Σ|, each
/// also compared with the directly counted incidences.
pub fn check_counting_identities(
    geom: &Geometry,
    coloring: &PointColoring,
    family: &PlaneFamily,
) -> [CheckRecord; 3] {
    let q = qi(geom);
    let (b, w, s) = (coloring.b() as i64, coloring.w() as i64, family.len() as i64);
    let total = geom.num_points() as i64;

    let mut eq1 = CheckRecord::new(CheckName::Eq1)
        .value("b", b)
        .value("w", w)
        .value("points", total);
    if b + w != total {
        eq1.fail(Witness::Global, format!("b + w = {} != {total}", b + w));
    }

    let pairs: i64 = coloring.counts().iter().map(|&c| c as i64).sum();
    let lhs2 = b * (q * q - q) + w * q * q;
    let rhs2 = s * (q * q + q + 1);
    let mut eq2 = CheckRecord::new(CheckName::Eq2)
        .value("lhs", lhs2)
        .value("rhs", rhs2)
        .value("incident-pairs", pairs);
    if lhs2 != rhs2 || pairs != rhs2 {
        eq2.fail(Witness::Global, format!("{lhs2} vs {rhs2} (direct count {pairs})"));
    }

    let triples: i64 = coloring
        .counts()
        .iter()
        .map(|&c| c as i64 * (c as i64 - 1))
        .sum();
    let lhs3 = b * (q * q - q) * (q * q - q - 1) + w * q * q * (q * q - 1);
    let rhs3 = s * (s - 1) * (q + 1);
    let mut eq3 = CheckRecord::new(CheckName::Eq3)
        .value("lhs", lhs3)
        .value("rhs", rhs3)
        .value("incident-triples", triples);
    if lhs3 != rhs3 || triples != rhs3 {
        eq3.fail(Witness::Global, format!("{lhs3} vs {rhs3} (direct count {triples})"));
    }
    if q % 2 == 1 {
        let lhs_half = b * (q * (q - 1) / 2) * (q * q - q - 1) + w * q * q * ((q - 1) * (q + 1) / 2);
        let rhs_half = s * (s - 1) * ((q + 1) / 2);
        eq3.set("halved-lhs", lhs_half);
        eq3.set("halved-rhs", rhs_half);
        if lhs_half != rhs_half {
            eq3.fail(Witness::Global, format!("halved identity {lhs_half} vs {rhs_half}"));
        }
    }
    [eq1, eq2, eq3]
}

/// q+1 divides b for even q; (q+1)/2 divides b for odd q.
pub fn check_divisibility(geom: &Geometry, coloring: &PointColoring) -> CheckRecord {
    let q = qi(geom);
    let divisor = if q % 2 == 0 { q + 1 } else { (q + 1) / 2 };
    let b = coloring.b() as i64;
    let mut rec = CheckRecord::new(CheckName::Divisibility)
        .value("b", b)
        .value("divisor", divisor);
    if b % divisor != 0 {
        rec.fail(Witness::Global, format!("{divisor} does not divide {b}"));
    }
    rec
}

/// All members carry the same number (q+1)r of black points, with
/// q^3 - qr = |Σ|, and every other plane carries q + (q+1)r.
/// Returns the measured r when the member count is consistent.
pub fn check_per_plane_black_counts(
    geom: &Geometry,
    coloring: &PointColoring,
    family: &PlaneFamily,
) -> (CheckRecord, Option<u32>) {
    let q = qi(geom);
    let s = family.len() as i64;
    let per_plane: Vec<i64> = geom
        .plane_ids()
        .map(|p| black_on_plane(geom, coloring, p) as i64)
        .collect();
    let (members, others): (Vec<PlaneId>, Vec<PlaneId>) = geom.plane_ids().partition(|&p| family.contains(p));
    let mut rec = CheckRecord::new(CheckName::PerPlaneBlackCounts)
        .value("member-black-counts", distinct(members.iter().map(|p| per_plane[p.idx()])))
        .value("other-black-counts", distinct(others.iter().map(|p| per_plane[p.idx()])));

    let first = members[0];
    let member_count = per_plane[first.idx()];
    if let Some(&bad) = members.iter().find(|p| per_plane[p.idx()] != member_count) {
        rec.fail(
            Witness::PlanePair { first, second: bad },
            format!("members carry {member_count} and {} black points", per_plane[bad.idx()]),
        );
        return (rec, None);
    }
    if member_count % (q + 1) != 0 {
        rec.fail(
            Witness::Plane { plane: first },
            format!("member black count {member_count} not divisible by {}", q + 1),
        );
        return (rec, None);
    }
    let r = member_count / (q + 1);
    rec.set("r", r);
    rec.set("q^3-qr", q * q * q - q * r);
    if q * q * q - q * r != s {
        rec.fail(Witness::Global, format!("q^3 - qr = {} != |Σ| = {s}", q * q * q - q * r));
        return (rec, Some(r as u32));
    }
    let expected_other = q + (q + 1) * r;
    rec.set("expected-other", expected_other);
    if let Some(&bad) = others.iter().find(|p| per_plane[p.idx()] != expected_other) {
        rec.fail(
            Witness::Plane { plane: bad },
            format!("non-member carries {} black points, expected {expected_other}", per_plane[bad.idx()]),
        );
    }
    (rec, Some(r as u32))
}

/// 1 <= r <= q-1, and in fact r = 1.
pub fn check_r(geom: &Geometry, r: u32) -> CheckRecord {
    let q = geom.q();
    let mut rec = CheckRecord::new(CheckName::R).value("r", r).value("upper", q - 1);
    if !(1..=q - 1).contains(&r) {
        rec.fail(Witness::Global, format!("r = {r} outside [1, {}]", q - 1));
    } else if r != 1 {
        rec.fail(Witness::Global, format!("r = {r}, expected 1"));
    }
    rec
}

/// |Σ| = q^3 - q and b = (q+1)^2.
pub fn check_size_sigma(geom: &Geometry, coloring: &PointColoring, family: &PlaneFamily) -> CheckRecord {
    let q = qi(geom);
    let (s, b) = (family.len() as i64, coloring.b() as i64);
    let mut rec = CheckRecord::new(CheckName::SizeSigma)
        .value("size", s)
        .value("expected-size", q * q * q - q)
        .value("b", b)
        .value("expected-b", (q + 1) * (q + 1));
    if s != q * q * q - q {
        rec.fail(Witness::Global, format!("|Σ| = {s}"));
    } else if b != (q + 1) * (q + 1) {
        rec.fail(Witness::Global, format!("b = {b}"));
    }
    rec
}

/// (q+1)^2 non-members, each with 2q+1 black points; members have q+1.
pub fn check_tangent_plane_census(
    geom: &Geometry,
    coloring: &PointColoring,
    family: &PlaneFamily,
) -> CheckRecord {
    let q = qi(geom);
    let others = geom.num_planes() as i64 - family.len() as i64;
    let mut rec = CheckRecord::new(CheckName::TangentPlaneCensus)
        .value("non-members", others)
        .value("expected-non-members", (q + 1) * (q + 1))
        .value("member-black", q + 1)
        .value("non-member-black", 2 * q + 1);
    if others != (q + 1) * (q + 1) {
        rec.fail(Witness::Global, format!("{others} non-member planes"));
        return rec;
    }
    for p in geom.plane_ids() {
        let expected = if family.contains(p) { q + 1 } else { 2 * q + 1 };
        let found = black_on_plane(geom, coloring, p) as i64;
        if found != expected {
            rec.fail(
                Witness::Plane { plane: p },
                format!("plane carries {found} black points, expected {expected}"),
            );
            break;
        }
    }
    rec
}

/// Per line: non-members in the pencil equal black points on the line,
/// and that number is 0, 1, 2 or q+1.
pub fn check_line_duality(geom: &Geometry, coloring: &PointColoring, family: &PlaneFamily) -> CheckRecord {
    let q = geom.q() as usize;
    let mut rec = CheckRecord::new(CheckName::LineDuality);
    let mut histogram = [0usize; 4];
    for l in geom.line_ids() {
        let tangent = geom
            .planes_through_line(l)
            .iter()
            .filter(|p| !family.contains(**p))
            .count();
        let black = black_on_line(geom, coloring, l);
        if tangent != black {
            rec.fail(
                Witness::Line { line: l },
                format!("{tangent} non-member planes but {black} black points"),
            );
            break;
        }
        match black {
            0..=2 => histogram[black] += 1,
            n if n == q + 1 => histogram[3] += 1,
            n => {
                rec.fail(Witness::Line { line: l }, format!("line carries {n} black points"));
                break;
            }
        }
    }
    rec.set("lines-with-0-1-2-all-black", histogram.to_vec());
    rec
}

/// Lines all of whose points are black.
pub fn black_lines(geom: &Geometry, coloring: &PointColoring) -> Vec<LineId> {
    let q1 = geom.q() as usize + 1;
    geom.line_ids()
        .filter(|&l| black_on_line(geom, coloring, l) == q1)
        .collect()
}

/// Extracts the black lines and checks: there are 2(q+1), every black
/// point is on exactly two, and every non-member plane's black points are
/// two intersecting black lines.
pub fn extract_black_lines(
    geom: &Geometry,
    coloring: &PointColoring,
    family: &PlaneFamily,
) -> (Vec<LineId>, CheckRecord) {
    let q = geom.q() as usize;
    let lines = black_lines(geom, coloring);
    let mut rec = CheckRecord::new(CheckName::BlackLineStructure)
        .value("black-lines", lines.len())
        .value("expected", 2 * (q + 1));
    if lines.len() != 2 * (q + 1) {
        rec.fail(Witness::Global, format!("{} black lines", lines.len()));
        return (lines, rec);
    }
    for x in coloring.black_points() {
        let n = lines_through(geom, &lines, x).count();
        if n != 2 {
            rec.fail(Witness::Point { point: x }, format!("black point on {n} black lines"));
            return (lines, rec);
        }
    }
    for p in geom.plane_ids().filter(|&p| !family.contains(p)) {
        if !is_two_black_lines(geom, coloring, &lines, p) {
            rec.fail(
                Witness::Plane { plane: p },
                "black points of the plane are not two intersecting black lines",
            );
            return (lines, rec);
        }
    }
    (lines, rec)
}

fn lines_through<'a>(geom: &'a Geometry, lines: &'a [LineId], x: PointId) -> impl Iterator<Item = LineId> + 'a {
    lines.iter().copied().filter(move |&l| geom.line(l).contains(x))
}

/// The plane's black set equals the union of exactly two black lines in it.
pub fn is_two_black_lines(geom: &Geometry, coloring: &PointColoring, lines: &[LineId], p: PlaneId) -> bool {
    let in_plane: Vec<LineId> = lines.iter().copied().filter(|&l| geom.line_in_plane(l, p)).collect();
    let [a, b] = in_plane[..] else {
        return false;
    };
    let mut union = FixedBitSet::with_capacity(geom.num_points());
    for &x in geom.points_on_line(a).iter().chain(geom.points_on_line(b)) {
        union.insert(x.idx());
    }
    let mut black_here = geom.plane_mask(p).clone();
    black_here.intersect_with(coloring.black_mask());
    union == black_here
}

/// Axiom-by-axiom findings for a point-line geometry tested as a
/// generalized quadrangle of order (s, t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GqReport {
    pub s: u32,
    pub t: u32,
    pub point_count: usize,
    pub line_count: usize,
    /// Lines without exactly s+1 points of the point set.
    pub line_size_violations: Vec<LineId>,
    /// Points not on exactly t+1 lines.
    pub point_degree_violations: Vec<PointId>,
    /// Line pairs sharing more than one point.
    pub q2_violations: Vec<(LineId, LineId)>,
    /// Non-incident pairs without exactly one connecting line.
    pub q3_violations: Vec<(PointId, LineId)>,
}

impl GqReport {
    pub fn expected_points(&self) -> usize {
        ((self.s + 1) * (self.s * self.t + 1)) as usize
    }

    pub fn expected_lines(&self) -> usize {
        ((self.t + 1) * (self.s * self.t + 1)) as usize
    }

    pub fn holds(&self) -> bool {
        self.line_size_violations.is_empty()
            && self.point_degree_violations.is_empty()
            && self.q2_violations.is_empty()
            && self.q3_violations.is_empty()
            && self.point_count == self.expected_points()
            && self.line_count == self.expected_lines()
    }

    pub fn record(&self) -> CheckRecord {
        let mut rec = CheckRecord::new(CheckName::GqAxioms)
            .value("s", self.s)
            .value("t", self.t)
            .value("points", self.point_count)
            .value("lines", self.line_count)
            .value("expected-points", self.expected_points())
            .value("expected-lines", self.expected_lines())
            .value("q1-line-violations", self.line_size_violations.len())
            .value("q1-point-violations", self.point_degree_violations.len())
            .value("q2-violations", self.q2_violations.len())
            .value("q3-violations", self.q3_violations.len());
        if let Some(&line) = self.line_size_violations.first() {
            rec.fail(Witness::Line { line }, format!("line does not carry {} points", self.s + 1));
        } else if let Some(&point) = self.point_degree_violations.first() {
            rec.fail(Witness::Point { point }, format!("point not on {} lines", self.t + 1));
        } else if let Some(&(first, second)) = self.q2_violations.first() {
            rec.fail(Witness::LinePair { first, second }, "lines share two points");
        } else if let Some(&(point, line)) = self.q3_violations.first() {
            rec.fail(Witness::PointLine { point, line }, "no unique line through the point meets the line");
        } else if self.point_count != self.expected_points() || self.line_count != self.expected_lines() {
            rec.fail(Witness::Global, "point or line total differs from (s+1)(st+1), (t+1)(st+1)");
        }
        rec
    }
}

/// Tests `(points, lines)` as a generalized quadrangle of order (q, 1).
pub fn check_gq(geom: &Geometry, points: &FixedBitSet, lines: &[LineId]) -> GqReport {
    let (s, t) = (geom.q(), 1u32);
    let line_masks: Vec<FixedBitSet> = lines
        .iter()
        .map(|&l| {
            let mut m = FixedBitSet::with_capacity(geom.num_points());
            for &x in geom.points_on_line(l) {
                if points.contains(x.idx()) {
                    m.insert(x.idx());
                }
            }
            m
        })
        .collect();

    let line_size_violations = lines
        .iter()
        .zip(&line_masks)
        .filter(|(&l, m)| m.count_ones(..) != (s + 1) as usize || geom.points_on_line(l).len() != m.count_ones(..))
        .map(|(&l, _)| l)
        .collect();

    let point_ids: Vec<PointId> = points.ones().map(|i| PointId(i as u32)).collect();
    let point_degree_violations = point_ids
        .iter()
        .copied()
        .filter(|x| line_masks.iter().filter(|m| m.contains(x.idx())).count() != (t + 1) as usize)
        .collect();

    let mut q2_violations = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if line_masks[i].intersection_count(&line_masks[j]) > 1 {
                q2_violations.push((lines[i], lines[j]));
            }
        }
    }

    let mut q3_violations = Vec::new();
    for &x in &point_ids {
        for (j, &l) in lines.iter().enumerate() {
            if line_masks[j].contains(x.idx()) {
                continue;
            }
            let connecting = line_masks
                .iter()
                .filter(|m| m.contains(x.idx()) && !m.is_disjoint(&line_masks[j]))
                .count();
            if connecting != 1 {
                q3_violations.push((x, l));
            }
        }
    }

    GqReport {
        s,
        t,
        point_count: point_ids.len(),
        line_count: lines.len(),
        line_size_violations,
        point_degree_violations,
        q2_violations,
        q3_violations,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("no nonzero quadratic form vanishes on the black points")]
    NoFittingForm,
    #[error("no form in the {dimension}-dimensional solution space has the black points as zero set")]
    NoExactZeroSet { dimension: usize },
    #[error("{matches} inequivalent forms have the black points as zero set")]
    Ambiguous { dimension: usize, matches: usize },
    #[error("solution space of dimension {dimension} is too large to search")]
    TooManyCandidates { dimension: usize },
    #[error("the reconstructed quadric is {0}, not hyperbolic")]
    NotHyperbolic(QuadricKind),
}

impl ReconstructError {
    pub fn code(&self) -> &'static str {
        match self {
            ReconstructError::NoFittingForm => "no-fitting-form",
            ReconstructError::NoExactZeroSet { .. } => "zero-set-mismatch",
            ReconstructError::Ambiguous { .. } => "ambiguous",
            ReconstructError::TooManyCandidates { .. } => "too-many-candidates",
            ReconstructError::NotHyperbolic(_) => "not-hyperbolic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub form: QuadraticForm,
    pub fit_dimension: usize,
    pub candidates: usize,
}

const MAX_CANDIDATES: u64 = 1 << 20;

/// The unique (up to scalar) form whose zero set is exactly `points`,
/// searched over all projective combinations of the fitted basis.
pub fn reconstruct_from_points(geom: &Geometry, points: &FixedBitSet) -> Result<Reconstruction, ReconstructError> {
    let f = geom.field();
    let ids: Vec<PointId> = points.ones().map(|i| PointId(i as u32)).collect();
    let basis = fit_form(geom, &ids);
    let d = basis.len();
    if d == 0 {
        return Err(ReconstructError::NoFittingForm);
    }
    let q = f.q() as u64;
    if q.checked_pow(d as u32).is_none_or(|n| n > MAX_CANDIDATES) {
        return Err(ReconstructError::TooManyCandidates { dimension: d });
    }
    let basis_ranks: Vec<[u16; 10]> = basis.iter().map(QuadraticForm::ranks).collect();
    let mut matches: Vec<QuadraticForm> = Vec::new();
    let mut candidates = 0;
    for n in 1..q.pow(d as u32) {
        let mut combo = vec![0u16; d];
        let mut r = n;
        for c in combo.iter_mut().rev() {
            *c = (r % q) as u16;
            r /= q;
        }
        if combo.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        candidates += 1;
        let mut ranks = [0u16; 10];
        for (c, b) in combo.iter().zip(&basis_ranks) {
            for k in 0..10 {
                ranks[k] = f.add_r(ranks[k], f.mul_r(*c, b[k]));
            }
        }
        let form = QuadraticForm::from_ranks(f, ranks).normalize(f);
        let zero_set_matches = geom
            .point_ids()
            .all(|x| (form.evaluate_ranks(f, geom.point_coords(x)) == 0) == points.contains(x.idx()));
        if zero_set_matches && !matches.iter().any(|m| m.scalar_equivalent(&form, f)) {
            matches.push(form);
        }
    }
    match matches[..] {
        [] => Err(ReconstructError::NoExactZeroSet { dimension: d }),
        [form] => {
            let kind = quadric::classify(geom, &form).expect("nonzero form").kind;
            if kind != QuadricKind::Hyperbolic {
                return Err(ReconstructError::NotHyperbolic(kind));
            }
            Ok(Reconstruction {
                form,
                fit_dimension: d,
                candidates,
            })
        }
        _ => Err(ReconstructError::Ambiguous {
            dimension: d,
            matches: matches.len(),
        }),
    }
}

pub fn reconstruct(geom: &Geometry, coloring: &PointColoring) -> Result<Reconstruction, ReconstructError> {
    reconstruct_from_points(geom, coloring.black_mask())
}

pub fn reconstruction_record(result: &Result<Reconstruction, ReconstructError>) -> CheckRecord {
    let mut rec = CheckRecord::new(CheckName::Reconstruction);
    match result {
        Ok(r) => {
            rec.set("fit-dimension", r.fit_dimension);
            rec.set("candidates", r.candidates);
        }
        Err(e) => {
            if let ReconstructError::NoExactZeroSet { dimension }
            | ReconstructError::Ambiguous { dimension, .. }
            | ReconstructError::TooManyCandidates { dimension } = e
            {
                rec.set("fit-dimension", *dimension);
            }
            rec.set("failure", e.code());
            rec.fail(Witness::Global, e.to_string());
        }
    }
    rec
}

/// Σ equals the secant planes of `form` (both inclusions), and every
/// member's black points form a (q+1)-arc.
pub fn check_final_equality(
    geom: &Geometry,
    coloring: &PointColoring,
    family: &PlaneFamily,
    form: &QuadraticForm,
) -> CheckRecord {
    let q = geom.q() as usize;
    let mut rec = CheckRecord::new(CheckName::FinalEquality).value("members", family.len());
    let quad = match Quadric::hyperbolic(geom, form) {
        Ok(quad) => quad,
        Err(e) => {
            rec.fail(Witness::Global, e.to_string());
            return rec;
        }
    };
    let secant = quad.secant_planes();
    rec.set("secant-planes", secant.len());
    if let Some(&p) = family.members().iter().find(|&&p| quad.plane_kind(p) != quadric::PlaneKindTag::Secant) {
        rec.fail(Witness::Plane { plane: p }, "member is not a secant plane of the quadric");
    } else if let Some(&p) = secant.iter().find(|&&p| !family.contains(p)) {
        rec.fail(Witness::Plane { plane: p }, "secant plane missing from the family");
    } else if let Some(&p) = family.members().iter().find(|&&p| {
        black_on_plane(geom, coloring, p) != q + 1 || !is_arc_in_plane(geom, p, coloring.black_mask())
    }) {
        rec.fail(Witness::Plane { plane: p }, "member's black points are not an oval");
    }
    rec
}
