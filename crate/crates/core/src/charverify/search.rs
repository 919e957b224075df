//! Exhaustive search over all plane families of PG(3,2).

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::family::PlaneFamily;
use super::{p2_allowed, verify_theorem};
use crate::pg3::{Geometry, PlaneId};
use crate::quadric::hyperbolic_census;

#[derive(Debug, Clone)]
pub struct SearchReport {
    /// Nonempty subsets examined.
    pub scanned: u64,
    /// Subsets passing P1.
    pub p1_survivors: u64,
    /// Subsets passing P1 and P2, in subset-mask order.
    pub survivors: Vec<PlaneFamily>,
}

/// Every nonempty set of planes passing P1 then P2. Only feasible when the
/// plane count fits a machine word and the subset space is small.
pub fn search_p1_p2(geom: &Geometry) -> SearchReport {
    let n = geom.num_planes();
    assert!(n <= 24, "subset search over {n} planes is not feasible");
    let q = geom.q();
    let (black, white) = (q * q - q, q * q);
    let allowed = p2_allowed(q);
    let to_mask = |planes: &[PlaneId]| planes.iter().fold(0u32, |m, p| m | 1 << p.0);
    let point_masks: Vec<u32> = geom.point_ids().map(|x| to_mask(geom.planes_through_point(x))).collect();
    let line_masks: Vec<u32> = geom.line_ids().map(|l| to_mask(geom.planes_through_line(l))).collect();

    let mut report = SearchReport {
        scanned: 0,
        p1_survivors: 0,
        survivors: Vec::new(),
    };
    for subset in 1u32..(1 << n) {
        report.scanned += 1;
        let p1 = point_masks.iter().all(|&m| {
            let c = (subset & m).count_ones();
            c == black || c == white
        });
        if !p1 {
            continue;
        }
        report.p1_survivors += 1;
        if line_masks.iter().all(|&m| allowed.contains(&(subset & m).count_ones())) {
            let mut mask = FixedBitSet::with_capacity(n);
            for i in (0..n).filter(|i| subset >> i & 1 == 1) {
                mask.insert(i);
            }
            report
                .survivors
                .push(PlaneFamily::from_mask(geom, mask).expect("nonempty subset"));
        }
    }
    report
}

pub fn exhaustive_search_q2() -> SearchReport {
    let geom = Geometry::of_order(2).expect("GF(2) exists");
    search_p1_p2(&geom)
}

/// The search result set against the census of hyperbolic forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfirmation {
    pub scanned: u64,
    pub p1_survivors: u64,
    pub survivors: usize,
    /// Hyperbolic forms among all nonzero forms, counted by signature.
    pub hyperbolic_forms: usize,
    /// Survivors with exactly q^3 - q planes.
    pub survivors_of_expected_size: usize,
    /// Survivor set equals the set of secant-plane families of the census.
    pub sets_equal: bool,
    /// Survivors whose certificate passes and whose reconstructed form is
    /// in the census.
    pub round_trips: usize,
}

impl SearchConfirmation {
    pub fn holds(&self) -> bool {
        self.survivors == self.hyperbolic_forms
            && self.survivors_of_expected_size == self.survivors
            && self.sets_equal
            && self.round_trips == self.survivors
    }
}

pub fn confirm_search(geom: &Geometry, report: &SearchReport) -> SearchConfirmation {
    let q = geom.q() as usize;
    let census = hyperbolic_census(geom);
    let census_forms: BTreeSet<[u16; 10]> = census.iter().map(|f| f.ranks()).collect();
    let expected: BTreeSet<Vec<PlaneId>> = census
        .iter()
        .map(|form| super::forward_generate(geom, form).expect("census forms are hyperbolic").members().to_vec())
        .collect();
    let found: BTreeSet<Vec<PlaneId>> = report.survivors.iter().map(|f| f.members().to_vec()).collect();
    let round_trips = report
        .survivors
        .iter()
        .filter(|fam| {
            let cert = verify_theorem(geom, fam);
            cert.passed()
                && cert
                    .reconstructed_form
                    .as_deref()
                    .and_then(|s| crate::quadric::QuadraticForm::parse(geom.field(), s).ok())
                    .is_some_and(|f| census_forms.contains(&f.normalize(geom.field()).ranks()))
        })
        .count();
    SearchConfirmation {
        scanned: report.scanned,
        p1_survivors: report.p1_survivors,
        survivors: report.survivors.len(),
        hyperbolic_forms: census.len(),
        survivors_of_expected_size: report.survivors.iter().filter(|f| f.len() == q * q * q - q).count(),
        sets_equal: found == expected && found.len() == report.survivors.len(),
        round_trips,
    }
}

/// Runs the PG(3,2) search and confirms it against the form census.
pub fn confirm_search_q2() -> SearchConfirmation {
    let geom = Geometry::of_order(2).expect("GF(2) exists");
    let report = search_p1_p2(&geom);
    confirm_search(&geom, &report)
}
