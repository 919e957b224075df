//! Verification pipeline for plane families.
//!
//! [`verify_theorem`] runs the checks in a fixed order: the point and line
//! conditions P1 and P2, the counting identities, divisibility of b, the
//! per-plane black counts and the values they force, the line duality,
//! black-line structure, the generalized quadrangle axioms, reconstruction
//! of the quadric and the final comparison of the family with the
//! quadric's secant planes. Later checks rely on earlier ones, so the first
//! failure stops the run and the remaining checks are recorded as skipped.

mod certificate;
mod checks;
mod family;
mod search;

pub use certificate::{Certificate, CheckName, CheckRecord, Status, Witness};
pub use checks::{
    black_lines, black_on_line, black_on_plane, check_counting_identities, check_divisibility,
    check_final_equality, check_gq, check_line_duality, check_p1, check_p2, check_per_plane_black_counts,
    check_r, check_size_sigma, check_tangent_plane_census, color_points, extract_black_lines,
    is_two_black_lines, line_counts, p2_allowed, reconstruct, reconstruct_from_points, reconstruction_record,
    Color, GqReport, PointColoring, ReconstructError, Reconstruction,
};
pub use family::{FamilyError, PlaneFamily};
pub use search::{confirm_search, confirm_search_q2, exhaustive_search_q2, search_p1_p2, SearchConfirmation, SearchReport};

use crate::pg3::Geometry;
use crate::quadric::{QuadraticForm, Quadric, QuadricError};

/// Per-plane black counts, then r, |Σ| and the non-member census, stopping
/// at the first failure.
pub fn check_black_counts_per_plane(
    geom: &Geometry,
    coloring: &PointColoring,
    family: &PlaneFamily,
) -> (Vec<CheckRecord>, Option<u32>) {
    let (per_plane, r) = check_per_plane_black_counts(geom, coloring, family);
    let mut records = vec![per_plane];
    let Some(r) = r.filter(|_| records[0].passed()) else {
        return (records, r);
    };
    let steps: [&dyn Fn() -> CheckRecord; 3] = [
        &|| check_r(geom, r),
        &|| check_size_sigma(geom, coloring, family),
        &|| check_tangent_plane_census(geom, coloring, family),
    ];
    for step in steps {
        let rec = step();
        let ok = rec.passed();
        records.push(rec);
        if !ok {
            break;
        }
    }
    (records, Some(r))
}

struct Run {
    checks: Vec<CheckRecord>,
}

impl Run {
    /// Appends records; false once any has failed.
    fn push(&mut self, records: impl IntoIterator<Item = CheckRecord>) -> bool {
        for rec in records {
            let ok = rec.passed();
            self.checks.push(rec);
            if !ok {
                return false;
            }
        }
        true
    }

    fn finish(
        mut self,
        geom: &Geometry,
        family: &PlaneFamily,
        fit_dimension: Option<usize>,
        form: Option<&QuadraticForm>,
    ) -> Certificate {
        for name in CheckName::ALL {
            if !self.checks.iter().any(|r| r.name == name) {
                self.checks.push(CheckRecord::skipped(name));
            }
        }
        self.checks.sort_by_key(|r| r.name);
        let verdict = if self.checks.iter().all(CheckRecord::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Certificate {
            q: geom.field().to_string(),
            family_size: family.len(),
            checks: self.checks,
            fit_dimension,
            reconstructed_form: form.map(ToString::to_string),
            verdict,
        }
    }
}

/// Runs the full pipeline on a family and returns its certificate.
pub fn verify_theorem(geom: &Geometry, family: &PlaneFamily) -> Certificate {
    let mut run = Run { checks: Vec::new() };
    let coloring = color_points(geom, family);
    let p1 = check_p1(geom, &coloring);
    let (_, p2) = check_p2(geom, family);
    // P1 and P2 are independent, so both are always reported.
    let p1_ok = run.push([p1]);
    let p2_ok = run.push([p2]);
    if !(p1_ok && p2_ok) {
        return run.finish(geom, family, None, None);
    }
    if !run.push(check_counting_identities(geom, &coloring, family))
        || !run.push([check_divisibility(geom, &coloring)])
        || !run.push(check_black_counts_per_plane(geom, &coloring, family).0)
        || !run.push([check_line_duality(geom, &coloring, family)])
    {
        return run.finish(geom, family, None, None);
    }
    let (lines, structure) = extract_black_lines(geom, &coloring, family);
    if !run.push([structure]) || !run.push([check_gq(geom, coloring.black_mask(), &lines).record()]) {
        return run.finish(geom, family, None, None);
    }
    let rebuilt = reconstruct(geom, &coloring);
    let fit_dimension = match &rebuilt {
        Ok(r) => Some(r.fit_dimension),
        Err(
            ReconstructError::NoExactZeroSet { dimension }
            | ReconstructError::Ambiguous { dimension, .. }
            | ReconstructError::TooManyCandidates { dimension },
        ) => Some(*dimension),
        Err(_) => None,
    };
    if !run.push([reconstruction_record(&rebuilt)]) {
        return run.finish(geom, family, fit_dimension, None);
    }
    let form = rebuilt.expect("reconstruction passed").form;
    run.push([check_final_equality(geom, &coloring, family, &form)]);
    run.finish(geom, family, fit_dimension, Some(&form))
}

/// The secant planes of a hyperbolic quadric.
pub fn forward_generate(geom: &Geometry, form: &QuadraticForm) -> Result<PlaneFamily, QuadricError> {
    let quad = Quadric::hyperbolic(geom, form)?;
    Ok(PlaneFamily::new(geom, quad.secant_planes()).expect("a hyperbolic quadric has secant planes"))
}

/// Re-runs a failed check on its witness alone and reports whether the
/// failure reproduces. Global witnesses re-run the whole pipeline.
pub fn reproduce_failure(geom: &Geometry, family: &PlaneFamily, record: &CheckRecord) -> bool {
    if record.status != Status::Fail {
        return false;
    }
    let Some(witness) = record.witness else {
        return false;
    };
    let q = geom.q() as usize;
    let coloring = || color_points(geom, family);
    match (record.name, witness) {
        (CheckName::P1, Witness::Point { point }) => {
            let n = family.count_through_point(geom, point);
            n != q * q - q && n != q * q
        }
        (CheckName::P2, Witness::Line { line }) => {
            let n = geom
                .planes_through_line(line)
                .iter()
                .filter(|p| family.contains(**p))
                .count();
            !p2_allowed(q as u32).contains(&(n as u32))
        }
        (CheckName::PerPlaneBlackCounts, Witness::PlanePair { first, second }) => {
            let c = coloring();
            family.contains(first)
                && family.contains(second)
                && black_on_plane(geom, &c, first) != black_on_plane(geom, &c, second)
        }
        (CheckName::PerPlaneBlackCounts, Witness::Plane { plane }) => {
            let c = coloring();
            let n = black_on_plane(geom, &c, plane);
            if family.contains(plane) {
                !n.is_multiple_of(q + 1)
            } else {
                let r = black_on_plane(geom, &c, family.members()[0]) / (q + 1);
                n != q + (q + 1) * r
            }
        }
        (CheckName::TangentPlaneCensus, Witness::Plane { plane }) => {
            let n = black_on_plane(geom, &coloring(), plane);
            n != if family.contains(plane) { q + 1 } else { 2 * q + 1 }
        }
        (CheckName::LineDuality, Witness::Line { line }) => {
            let tangent = geom
                .planes_through_line(line)
                .iter()
                .filter(|p| !family.contains(**p))
                .count();
            let black = black_on_line(geom, &coloring(), line);
            tangent != black || !(black <= 2 || black == q + 1)
        }
        (CheckName::BlackLineStructure, Witness::Point { point }) => {
            let c = coloring();
            let lines = black_lines(geom, &c);
            lines.iter().filter(|&&l| geom.line(l).contains(point)).count() != 2
        }
        (CheckName::BlackLineStructure, Witness::Plane { plane }) => {
            let c = coloring();
            !family.contains(plane) && !is_two_black_lines(geom, &c, &black_lines(geom, &c), plane)
        }
        (CheckName::GqAxioms, Witness::Point { point }) => {
            let c = coloring();
            black_lines(geom, &c).iter().filter(|&&l| geom.line(l).contains(point)).count() != 2
        }
        (CheckName::GqAxioms, Witness::Line { line }) => black_on_line(geom, &coloring(), line) != q + 1,
        (CheckName::GqAxioms, Witness::PointLine { point, line }) => {
            let c = coloring();
            let lines = black_lines(geom, &c);
            let connecting = lines
                .iter()
                .filter(|&&m| {
                    geom.line(m).contains(point)
                        && geom.points_on_line(m).iter().any(|&y| geom.line(line).contains(y))
                })
                .count();
            connecting != 1
        }
        (CheckName::FinalEquality, Witness::Plane { plane }) => {
            let c = coloring();
            let Ok(rebuilt) = reconstruct(geom, &c) else {
                return false;
            };
            let Ok(quad) = Quadric::hyperbolic(geom, &rebuilt.form) else {
                return false;
            };
            let secant = quad.plane_kind(plane) == crate::quadric::PlaneKindTag::Secant;
            secant != family.contains(plane)
                || (family.contains(plane)
                    && (black_on_plane(geom, &c, plane) != q + 1
                        || !crate::quadric::is_arc_in_plane(geom, plane, c.black_mask())))
        }
        (name, _) => verify_theorem(geom, family)
            .record(name)
            .is_some_and(|r| r.status == Status::Fail && r.witness == Some(witness)),
    }
}
