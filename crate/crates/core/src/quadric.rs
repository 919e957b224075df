//! Quadratic forms on PG(3,q) and the plane/line/point census of a
//! hyperbolic quadric.
//!
//! Forms are stored as their ten upper-triangular coefficients
//! `a_ij, i <= j`, so nothing depends on the characteristic. Quadric kinds
//! are read off the `(points, lines)` signature of the zero set.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::gf::{FieldElement, FieldSpec, GfError};
use crate::linalg::Matrix;
use crate::pg3::{Coords, Geometry, LineId, PlaneId, PointId};

/// Monomial order of the coefficient vector.
pub const MONOMIALS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadricError {
    #[error("the zero form defines no quadric")]
    ZeroForm,
    #[error("expected a hyperbolic quadric, found {0}")]
    NotHyperbolic(QuadricKind),
    #[error("plane {0} is neither secant nor tangent")]
    UnclassifiablePlane(PlaneId),
    #[error("expected 10 coefficients, found {0}")]
    WrongArity(usize),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// `Q(x) = sum_{i<=j} a_ij x_i x_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticForm {
    coeffs: [FieldElement; 10],
}

impl QuadraticForm {
    pub fn new(coeffs: [FieldElement; 10]) -> Self {
        Self { coeffs }
    }

    pub fn from_ranks(field: &FieldSpec, ranks: [u16; 10]) -> Self {
        Self::new(ranks.map(|r| field.element(r)))
    }

    /// `x0*x1 + x2*x3`.
    pub fn standard_hyperbolic(field: &FieldSpec) -> Self {
        let mut ranks = [0u16; 10];
        ranks[1] = 1;
        ranks[8] = 1;
        Self::from_ranks(field, ranks).normalize(field)
    }

    pub fn coeffs(&self) -> &[FieldElement; 10] {
        &self.coeffs
    }

    pub fn ranks(&self) -> [u16; 10] {
        self.coeffs.map(|c| c.rank())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    /// Leading nonzero coefficient equals 1.
    pub fn is_normalized(&self) -> bool {
        self.ranks().iter().find(|&&r| r != 0) == Some(&1)
    }

    /// Scales so the first nonzero coefficient is 1. The zero form is
    /// returned unchanged.
    pub fn normalize(&self, field: &FieldSpec) -> Self {
        let ranks = self.ranks();
        let Some(&lead) = ranks.iter().find(|&&r| r != 0) else {
            return *self;
        };
        let s = field.inv_r(lead);
        Self::from_ranks(field, ranks.map(|r| field.mul_r(r, s)))
    }

    /// Same zero set up to a nonzero scalar, compared on normalized vectors.
    pub fn scalar_equivalent(&self, other: &Self, field: &FieldSpec) -> bool {
        self.normalize(field).ranks() == other.normalize(field).ranks()
    }

    pub fn evaluate_ranks(&self, field: &FieldSpec, v: Coords) -> u16 {
        let ranks = self.ranks();
        MONOMIALS
            .iter()
            .zip(ranks)
            .fold(0u16, |acc, (&(i, j), a)| {
                if a == 0 {
                    acc
                } else {
                    field.add_r(acc, field.mul_r(a, field.mul_r(v[i], v[j])))
                }
            })
    }

    pub fn evaluate(&self, geom: &Geometry, x: PointId) -> FieldElement {
        let f = geom.field();
        f.element(self.evaluate_ranks(f, geom.point_coords(x)))
    }

    /// The form `x -> Q(M x)`, with `M` given row by row as element ranks.
    pub fn substitute(&self, field: &FieldSpec, m: &[[u16; 4]; 4]) -> Self {
        let ranks = self.ranks();
        let mut out = [0u16; 10];
        for (&(i, j), a) in MONOMIALS.iter().zip(ranks) {
            if a == 0 {
                continue;
            }
            for k in 0..4 {
                for l in 0..4 {
                    let c = field.mul_r(a, field.mul_r(m[i][k], m[j][l]));
                    let slot = monomial_slot(k.min(l), k.max(l));
                    out[slot] = field.add_r(out[slot], c);
                }
            }
        }
        Self::from_ranks(field, out)
    }

    pub fn parse(field: &FieldSpec, text: &str) -> Result<Self, QuadricError> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        if parts.len() != 10 {
            return Err(QuadricError::WrongArity(parts.len()));
        }
        let mut ranks = [0u16; 10];
        for (slot, part) in ranks.iter_mut().zip(parts) {
            *slot = field.parse_element(part.trim())?.rank();
        }
        Ok(Self::from_ranks(field, ranks))
    }
}

/// Ten element strings in monomial order joined by `:`.
impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn monomial_slot(i: usize, j: usize) -> usize {
    MONOMIALS
        .iter()
        .position(|&m| m == (i, j))
        .expect("i <= j < 4")
}

/// Every nonzero form with leading coefficient 1, i.e. one representative
/// per scalar class, in rank order of the coefficient vector.
pub fn enumerate_forms(field: &FieldSpec) -> impl Iterator<Item = QuadraticForm> + '_ {
    let q = field.q() as u64;
    let total = q.pow(10);
    (1..total).filter_map(move |mut n| {
        let mut ranks = [0u16; 10];
        for slot in ranks.iter_mut().rev() {
            *slot = (n % q) as u16;
            n /= q;
        }
        let lead = ranks.iter().find(|&&r| r != 0)?;
        (*lead == 1).then(|| QuadraticForm::from_ranks(field, ranks).normalize(field))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadricKind {
    Hyperbolic,
    Elliptic,
    Cone,
    PlanePair,
    OtherDegenerate,
}

impl fmt::Display for QuadricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadricKind::Hyperbolic => "hyperbolic",
            QuadricKind::Elliptic => "elliptic",
            QuadricKind::Cone => "cone",
            QuadricKind::PlanePair => "plane-pair",
            QuadricKind::OtherDegenerate => "other-degenerate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadricClassification {
    pub point_count: usize,
    pub line_count: usize,
    pub kind: QuadricKind,
}

/// Kind from the `(points, lines)` signature of the zero set.
pub fn kind_from_signature(q: u64, point_count: u64, line_count: u64) -> QuadricKind {
    match (point_count, line_count) {
        (p, l) if p == (q + 1) * (q + 1) && l == 2 * (q + 1) => QuadricKind::Hyperbolic,
        (p, 0) if p == q * q + 1 => QuadricKind::Elliptic,
        (p, l) if p == q * q + q + 1 && l == q + 1 => QuadricKind::Cone,
        (p, l) if p == 2 * q * q + q + 1 && l == 2 * q * q + 2 * q + 1 => QuadricKind::PlanePair,
        _ => QuadricKind::OtherDegenerate,
    }
}

fn zero_mask(geom: &Geometry, form: &QuadraticForm) -> FixedBitSet {
    let f = geom.field();
    let mut mask = FixedBitSet::with_capacity(geom.num_points());
    for x in geom.point_ids() {
        if form.evaluate_ranks(f, geom.point_coords(x)) == 0 {
            mask.insert(x.idx());
        }
    }
    mask
}

fn lines_in_mask(geom: &Geometry, mask: &FixedBitSet) -> Vec<LineId> {
    geom.line_ids()
        .filter(|&l| geom.points_on_line(l).iter().all(|x| mask.contains(x.idx())))
        .collect()
}

/// Points where the form vanishes.
pub fn point_set(geom: &Geometry, form: &QuadraticForm) -> Vec<PointId> {
    zero_mask(geom, form).ones().map(|i| PointId(i as u32)).collect()
}

/// Lines contained in the zero set.
pub fn lines_on(geom: &Geometry, form: &QuadraticForm) -> Vec<LineId> {
    lines_in_mask(geom, &zero_mask(geom, form))
}

pub fn classify(geom: &Geometry, form: &QuadraticForm) -> Result<QuadricClassification, QuadricError> {
    if form.is_zero() {
        return Err(QuadricError::ZeroForm);
    }
    let mask = zero_mask(geom, form);
    let point_count = mask.count_ones(..);
    let line_count = lines_in_mask(geom, &mask).len();
    let kind = kind_from_signature(geom.q() as u64, point_count as u64, line_count as u64);
    Ok(QuadricClassification {
        point_count,
        line_count,
        kind,
    })
}

/// True if no three members of `set` lying on `plane` are collinear.
pub fn is_arc_in_plane(geom: &Geometry, plane: PlaneId, set: &FixedBitSet) -> bool {
    geom.lines_on_plane(plane).iter().all(|&l| {
        geom.points_on_line(l)
            .iter()
            .filter(|x| set.contains(x.idx()))
            .count()
            <= 2
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PlaneKindTag {
    Secant,
    Tangent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneKind {
    /// q+1 points, no three collinear.
    Secant { points: Vec<PointId> },
    /// 2q+1 points on two generators meeting at `vertex`.
    Tangent {
        points: Vec<PointId>,
        generators: (LineId, LineId),
        vertex: PointId,
    },
}

impl PlaneKind {
    pub fn tag(&self) -> PlaneKindTag {
        match self {
            PlaneKind::Secant { .. } => PlaneKindTag::Secant,
            PlaneKind::Tangent { .. } => PlaneKindTag::Tangent,
        }
    }

    pub fn points(&self) -> &[PointId] {
        match self {
            PlaneKind::Secant { points } | PlaneKind::Tangent { points, .. } => points,
        }
    }
}

/// A hyperbolic quadric with its point set, generators and plane kinds.
pub struct Quadric<'g> {
    geom: &'g Geometry,
    form: QuadraticForm,
    mask: FixedBitSet,
    points: Vec<PointId>,
    generators: Vec<LineId>,
    kinds: Vec<PlaneKindTag>,
}

impl<'g> Quadric<'g> {
    pub fn hyperbolic(geom: &'g Geometry, form: &QuadraticForm) -> Result<Self, QuadricError> {
        if form.is_zero() {
            return Err(QuadricError::ZeroForm);
        }
        let mask = zero_mask(geom, form);
        let points: Vec<PointId> = mask.ones().map(|i| PointId(i as u32)).collect();
        let generators = lines_in_mask(geom, &mask);
        let kind = kind_from_signature(geom.q() as u64, points.len() as u64, generators.len() as u64);
        if kind != QuadricKind::Hyperbolic {
            return Err(QuadricError::NotHyperbolic(kind));
        }
        let mut quadric = Quadric {
            geom,
            form: form.normalize(geom.field()),
            mask,
            points,
            generators,
            kinds: Vec::new(),
        };
        quadric.kinds = geom
            .plane_ids()
            .map(|p| quadric.classify_plane(p).map(|k| k.tag()))
            .collect::<Result<_, _>>()?;
        Ok(quadric)
    }

    pub fn geometry(&self) -> &'g Geometry {
        self.geom
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn contains(&self, x: PointId) -> bool {
        self.mask.contains(x.idx())
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn points(&self) -> &[PointId] {
        &self.points
    }

    pub fn generators(&self) -> &[LineId] {
        &self.generators
    }

    pub fn is_generator(&self, l: LineId) -> bool {
        self.generators.binary_search(&l).is_ok()
    }

    pub fn classify_plane(&self, plane: PlaneId) -> Result<PlaneKind, QuadricError> {
        let geom = self.geom;
        let q = geom.q() as usize;
        let points: Vec<PointId> = geom
            .points_on_plane(plane)
            .iter()
            .copied()
            .filter(|&x| self.contains(x))
            .collect();
        if points.len() == q + 1 && is_arc_in_plane(geom, plane, &self.mask) {
            return Ok(PlaneKind::Secant { points });
        }
        if points.len() == 2 * q + 1 {
            let gens: Vec<LineId> = geom
                .lines_on_plane(plane)
                .iter()
                .copied()
                .filter(|&l| self.is_generator(l))
                .collect();
            if let [a, b] = gens[..] {
                let mut union: Vec<PointId> = geom
                    .points_on_line(a)
                    .iter()
                    .chain(geom.points_on_line(b))
                    .copied()
                    .collect();
                union.sort_unstable();
                union.dedup();
                if union == points {
                    let vertex = *geom
                        .points_on_line(a)
                        .iter()
                        .find(|x| geom.line(b).contains(**x))
                        .expect("coplanar lines meet");
                    return Ok(PlaneKind::Tangent {
                        points,
                        generators: (a, b),
                        vertex,
                    });
                }
            }
        }
        Err(QuadricError::UnclassifiablePlane(plane))
    }

    pub fn plane_kind(&self, plane: PlaneId) -> PlaneKindTag {
        self.kinds[plane.idx()]
    }

    pub fn secant_planes(&self) -> Vec<PlaneId> {
        self.planes_of_kind(PlaneKindTag::Secant)
    }

    pub fn tangent_planes(&self) -> Vec<PlaneId> {
        self.planes_of_kind(PlaneKindTag::Tangent)
    }

    fn planes_of_kind(&self, tag: PlaneKindTag) -> Vec<PlaneId> {
        self.geom
            .plane_ids()
            .filter(|&p| self.kinds[p.idx()] == tag)
            .collect()
    }

    pub fn secant_count_through_point(&self, x: PointId) -> usize {
        self.geom
            .planes_through_point(x)
            .iter()
            .filter(|&&p| self.kinds[p.idx()] == PlaneKindTag::Secant)
            .count()
    }

    pub fn secant_count_through_line(&self, l: LineId) -> usize {
        self.geom
            .planes_through_line(l)
            .iter()
            .filter(|&&p| self.kinds[p.idx()] == PlaneKindTag::Secant)
            .count()
    }

    /// The two reguli: the first generator together with every generator
    /// disjoint from it, and the rest. `None` if that split is not two
    /// families of q+1 pairwise disjoint lines.
    pub fn reguli(&self) -> Option<[Vec<LineId>; 2]> {
        let geom = self.geom;
        let disjoint = |a: LineId, b: LineId| {
            !geom
                .points_on_line(a)
                .iter()
                .any(|&x| geom.line(b).contains(x))
        };
        let &first = self.generators.first()?;
        let (one, other): (Vec<LineId>, Vec<LineId>) = self
            .generators
            .iter()
            .partition(|&&l| l == first || disjoint(first, l));
        let q1 = geom.q() as usize + 1;
        let pairwise = |family: &[LineId]| {
            family.len() == q1
                && family
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| family[i + 1..].iter().all(|&b| disjoint(a, b)))
        };
        (pairwise(&one) && pairwise(&other)).then_some([one, other])
    }
}

pub fn classify_plane(geom: &Geometry, form: &QuadraticForm, plane: PlaneId) -> Result<PlaneKind, QuadricError> {
    Quadric::hyperbolic(geom, form)?.classify_plane(plane)
}

/// A basis of the forms vanishing on every given point, normalized.
pub fn fit_form(geom: &Geometry, points: &[PointId]) -> Vec<QuadraticForm> {
    let f = geom.field();
    let rows: Vec<Vec<u16>> = points
        .iter()
        .map(|&x| {
            let v = geom.point_coords(x);
            MONOMIALS.iter().map(|&(i, j)| f.mul_r(v[i], v[j])).collect()
        })
        .collect();
    let basis = Matrix::from_rows(10, &rows).nullspace(f);
    basis
        .into_iter()
        .map(|v| {
            let ranks: [u16; 10] = v.try_into().expect("ten coefficients");
            QuadraticForm::from_ranks(f, ranks).normalize(f)
        })
        .collect()
}

/// Every hyperbolic form (one per scalar class), by signature census over
/// all nonzero forms. Feasible only for very small q.
pub fn hyperbolic_census(geom: &Geometry) -> Vec<QuadraticForm> {
    enumerate_forms(geom.field())
        .filter(|form| {
            classify(geom, form).map(|c| c.kind) == Ok(QuadricKind::Hyperbolic)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(q: u32) -> Geometry {
        Geometry::of_order(q).unwrap()
    }

    #[test]
    fn standard_form_text() {
        let g = geom(2);
        let form = QuadraticForm::standard_hyperbolic(g.field());
        assert_eq!(form.to_string(), "0:1:0:0:0:0:0:0:1:0");
        assert_eq!(QuadraticForm::parse(g.field(), "0:1:0:0:0:0:0:0:1:0").unwrap(), form.normalize(g.field()));
        assert!(QuadraticForm::parse(g.field(), "0:1:0").is_err());
    }

    #[test]
    fn evaluate_examples() {
        let g = geom(3);
        let f = g.field();
        let form = QuadraticForm::standard_hyperbolic(f);
        assert!(form.evaluate(&g, g.point_of([1, 0, 0, 0]).unwrap()).is_zero());
        assert_eq!(form.evaluate(&g, g.point_of([1, 1, 0, 0]).unwrap()), f.one());
        // homogeneity: every scalar multiple of a vector has the same zero status
        for x in g.point_ids() {
            let v = g.point_coords(x);
            let zero = form.evaluate_ranks(f, v) == 0;
            for s in 1..3u16 {
                let w = v.map(|c| f.mul_r(c, s));
                assert_eq!(form.evaluate_ranks(f, w) == 0, zero);
            }
        }
    }

    #[test]
    fn hyperbolic_point_and_line_counts() {
        for (q, pts, lines) in [(2u32, 9, 6), (3, 16, 8), (4, 25, 10), (5, 36, 12), (7, 64, 16)] {
            let g = geom(q);
            let form = QuadraticForm::standard_hyperbolic(g.field());
            assert_eq!(point_set(&g, &form).len(), pts);
            assert_eq!(lines_on(&g, &form).len(), lines);
            assert_eq!(classify(&g, &form).unwrap().kind, QuadricKind::Hyperbolic);
        }
    }

    #[test]
    fn every_quadric_point_on_two_generators() {
        for q in [2u32, 3, 4, 5] {
            let g = geom(q);
            let quad = Quadric::hyperbolic(&g, &QuadraticForm::standard_hyperbolic(g.field())).unwrap();
            for &x in quad.points() {
                let n = quad
                    .generators()
                    .iter()
                    .filter(|&&l| g.line(l).contains(x))
                    .count();
                assert_eq!(n, 2);
            }
            let [a, b] = quad.reguli().expect("two reguli");
            for &x in quad.points() {
                assert_eq!(a.iter().filter(|&&l| g.line(l).contains(x)).count(), 1);
                assert_eq!(b.iter().filter(|&&l| g.line(l).contains(x)).count(), 1);
            }
        }
    }

    #[test]
    fn degenerate_signatures() {
        let g = geom(2);
        let f = g.field();
        let mut pair = [0u16; 10];
        pair[monomial_slot(0, 1)] = 1;
        let c = classify(&g, &QuadraticForm::from_ranks(f, pair)).unwrap();
        assert_eq!((c.point_count, c.kind), (11, QuadricKind::PlanePair));
        let mut square = [0u16; 10];
        square[monomial_slot(0, 0)] = 1;
        let c = classify(&g, &QuadraticForm::from_ranks(f, square)).unwrap();
        assert_eq!((c.point_count, c.kind), (7, QuadricKind::OtherDegenerate));
        assert_eq!(classify(&g, &QuadraticForm::from_ranks(f, [0; 10])), Err(QuadricError::ZeroForm));
        // x0^2 + x0 x1 + x1^2 + x2 x3 is elliptic over GF(2)
        let mut ell = [0u16; 10];
        for (i, j) in [(0, 0), (0, 1), (1, 1), (2, 3)] {
            ell[monomial_slot(i, j)] = 1;
        }
        let c = classify(&g, &QuadraticForm::from_ranks(f, ell)).unwrap();
        assert_eq!((c.point_count, c.line_count, c.kind), (5, 0, QuadricKind::Elliptic));
        // x0 x1 + x2^2 is a cone
        let mut cone = [0u16; 10];
        cone[monomial_slot(0, 1)] = 1;
        cone[monomial_slot(2, 2)] = 1;
        let c = classify(&g, &QuadraticForm::from_ranks(f, cone)).unwrap();
        assert_eq!((c.point_count, c.line_count, c.kind), (7, 3, QuadricKind::Cone));
    }

    #[test]
    fn plane_census() {
        for (q, secant, tangent) in [(2u32, 6, 9), (3, 24, 16), (4, 60, 25)] {
            let g = geom(q);
            let quad = Quadric::hyperbolic(&g, &QuadraticForm::standard_hyperbolic(g.field())).unwrap();
            assert_eq!(quad.secant_planes().len(), secant);
            assert_eq!(quad.tangent_planes().len(), tangent);
            for p in quad.tangent_planes() {
                let PlaneKind::Tangent { points, generators, vertex } = quad.classify_plane(p).unwrap() else {
                    panic!("tangent plane {p} misclassified");
                };
                assert!(points.contains(&vertex));
                assert!(g.line(generators.0).contains(vertex) && g.line(generators.1).contains(vertex));
            }
        }
    }

    #[test]
    fn non_hyperbolic_rejected() {
        let g = geom(2);
        let mut pair = [0u16; 10];
        pair[1] = 1;
        let form = QuadraticForm::from_ranks(g.field(), pair);
        assert!(matches!(
            classify_plane(&g, &form, PlaneId(0)),
            Err(QuadricError::NotHyperbolic(QuadricKind::PlanePair))
        ));
    }

    #[test]
    fn secant_counts_through_points_and_lines() {
        let g = geom(3);
        let quad = Quadric::hyperbolic(&g, &QuadraticForm::standard_hyperbolic(g.field())).unwrap();
        let mut total = 0;
        for x in g.point_ids() {
            let n = quad.secant_count_through_point(x);
            assert_eq!(n, if quad.contains(x) { 6 } else { 9 });
            total += n;
        }
        assert_eq!(total, 312);
        assert_eq!(total, 24 * 13);
        for l in g.line_ids() {
            let on = g.points_on_line(l).iter().filter(|&&x| quad.contains(x)).count();
            let n = quad.secant_count_through_line(l);
            let expected = match on {
                4 => 0,
                2 => 2,
                1 => 3,
                0 => 4,
                _ => unreachable!("line meets the quadric in {on} points"),
            };
            assert_eq!(n, expected, "line {l} with {on} quadric points");
            assert_eq!(n == 0, quad.is_generator(l));
        }
    }

    #[test]
    fn fit_form_contains_standard() {
        let g = geom(3);
        let f = g.field();
        let form = QuadraticForm::standard_hyperbolic(f);
        let fitted = fit_form(&g, &point_set(&g, &form));
        assert_eq!(fitted.len(), 1);
        assert!(fitted[0].scalar_equivalent(&form, f));
    }

    #[test]
    fn fit_form_on_all_points_is_empty() {
        let g = geom(2);
        let all: Vec<PointId> = g.point_ids().collect();
        assert!(fit_form(&g, &all).is_empty());
        // oracle: no nonzero form over GF(2) vanishes everywhere
        assert!(enumerate_forms(g.field()).all(|form| point_set(&g, &form).len() < 15));
        assert_eq!(enumerate_forms(g.field()).count(), 1023);
    }

    #[test]
    fn fit_form_five_general_points() {
        let g = geom(3);
        let f = g.field();
        let pts: Vec<PointId> = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]]
            .iter()
            .map(|&v| g.point_of(v).unwrap())
            .collect();
        // oracle: count all 3^10 coefficient vectors vanishing on the points
        let mut vanishing = 0u64;
        for n in 0..3u64.pow(10) {
            let mut ranks = [0u16; 10];
            let mut r = n;
            for slot in ranks.iter_mut() {
                *slot = (r % 3) as u16;
                r /= 3;
            }
            let form = QuadraticForm::from_ranks(f, ranks);
            if pts.iter().all(|&x| form.evaluate_ranks(f, g.point_coords(x)) == 0) {
                vanishing += 1;
            }
        }
        assert_eq!(vanishing, 3u64.pow(5));
        let basis = fit_form(&g, &pts);
        assert_eq!(basis.len(), 5);
        for form in &basis {
            assert!(form.is_normalized());
            assert!(pts.iter().all(|&x| form.evaluate(&g, x).is_zero()));
        }
    }

    #[test]
    fn substitution_maps_zero_sets() {
        let g = geom(3);
        let f = g.field();
        let form = QuadraticForm::standard_hyperbolic(f);
        // swap x0 and x2
        let m = [[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]];
        let swapped = form.substitute(f, &m);
        let mut expected = [0u16; 10];
        expected[monomial_slot(1, 2)] = 1;
        expected[monomial_slot(0, 3)] = 1;
        assert_eq!(swapped.ranks(), expected);
        let fitted = fit_form(&g, &point_set(&g, &swapped));
        assert_eq!(fitted.len(), 1);
        assert!(fitted[0].scalar_equivalent(&swapped, f));
    }

    #[test]
    fn q2_hyperbolic_census() {
        let g = geom(2);
        let census = hyperbolic_census(&g);
        // |GL(4,2)| / |O+(4,2)| = 20160 / 72
        assert_eq!(census.len(), 280);
    }
}
