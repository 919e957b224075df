//! Points, lines and planes of PG(3,q) with precomputed incidence tables.
//!
//! Points are normalized so the first nonzero coordinate is 1 and are
//! numbered in lexicographic order of their coordinate tuples (first
//! coordinate most significant, element ranks from [`crate::gf`]). Planes
//! use the same normalization and order on dual coordinates, so point `i`
//! and plane `i` carry the same coordinate vector. A line is keyed by the
//! two smallest indices among its points, and lines are numbered in key
//! order. Indices are part of the file and certificate formats.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{FieldElement, FieldSpec, GfError};
use crate::linalg::Matrix;

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub u32);

        impl $name {
            #[inline]
            pub fn idx(self) -> usize {
                self.0 as usize
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

id_type!(
    /// Index into the point enumeration.
    PointId
);
id_type!(
    /// Index into the line enumeration.
    LineId
);
id_type!(
    /// Index into the plane enumeration.
    PlaneId
);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("the two points are identical")]
    IdenticalPoints,
    #[error("the two planes are identical")]
    IdenticalPlanes,
    #[error("point {0} lies on the line")]
    PointOnLine(PointId),
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("expected 4 coordinates, found {0}")]
    WrongArity(usize),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A point with normalized coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub coords: [FieldElement; 4],
    pub index: PointId,
}

/// A plane, the zero set of the linear form given by `dual_coords`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPlane {
    pub dual_coords: [FieldElement; 4],
    pub index: PlaneId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjLine {
    /// Sorted; exactly q+1 entries.
    pub point_indices: Vec<PointId>,
    pub index: LineId,
}

impl ProjLine {
    /// The two smallest point indices; identifies the line.
    pub fn key(&self) -> (PointId, PointId) {
        (self.point_indices[0], self.point_indices[1])
    }

    pub fn contains(&self, x: PointId) -> bool {
        self.point_indices.binary_search(&x).is_ok()
    }
}

pub type Coords = [u16; 4];

pub fn point_count(q: u64) -> u64 {
    q * q * q + q * q + q + 1
}

pub fn line_count(q: u64) -> u64 {
    (q * q + 1) * (q * q + q + 1)
}

/// PG(3,q) with every incidence relation tabulated.
pub struct Geometry {
    field: FieldSpec,
    raw: Vec<Coords>,
    vec_index: Vec<u32>,
    points: Vec<ProjPoint>,
    planes: Vec<ProjPlane>,
    lines: Vec<ProjLine>,
    plane_points: Vec<Vec<PointId>>,
    plane_masks: Vec<FixedBitSet>,
    point_planes: Vec<Vec<PlaneId>>,
    point_lines: Vec<Vec<LineId>>,
    line_planes: Vec<Vec<PlaneId>>,
    plane_lines: Vec<Vec<LineId>>,
    line_by_key: HashMap<(PointId, PointId), LineId>,
}

impl fmt::Debug for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PG(3,{})", self.field.q())
    }
}

const NONE: u32 = u32::MAX;

impl Geometry {
    pub fn of_order(q: u32) -> Result<Self, GfError> {
        Ok(Self::new(FieldSpec::of_order(q)?))
    }

    pub fn new(field: FieldSpec) -> Self {
        let q = field.q() as usize;
        let code = |v: &Coords| -> usize {
            v.iter().fold(0usize, |acc, &c| acc * q + c as usize)
        };

        // Normalized vectors in lexicographic order: iterate all codes
        // ascending and keep those whose leading nonzero entry is 1.
        let mut raw = Vec::with_capacity(point_count(q as u64) as usize);
        for n in 1..q.pow(4) {
            let v = decode(n, q);
            if v.iter().find(|&&c| c != 0) == Some(&1) {
                raw.push(v);
            }
        }

        let mut vec_index = vec![NONE; q.pow(4)];
        for n in 1..q.pow(4) {
            let v = decode(n, q);
            let lead = *v.iter().find(|&&c| c != 0).unwrap();
            let s = field.inv_r(lead);
            let norm = v.map(|c| field.mul_r(c, s));
            vec_index[n] = code(&norm) as u32;
        }
        // vec_index currently holds normalized codes; turn them into ranks.
        let mut rank_of_code = vec![NONE; q.pow(4)];
        for (i, v) in raw.iter().enumerate() {
            rank_of_code[code(v)] = i as u32;
        }
        for slot in vec_index.iter_mut().skip(1) {
            *slot = rank_of_code[*slot as usize];
        }

        let elements = field.enumerate_elements();
        let to_elems = |v: &Coords| v.map(|c| elements[c as usize]);
        let points: Vec<ProjPoint> = raw
            .iter()
            .enumerate()
            .map(|(i, v)| ProjPoint {
                coords: to_elems(v),
                index: PointId(i as u32),
            })
            .collect();
        let planes: Vec<ProjPlane> = raw
            .iter()
            .enumerate()
            .map(|(i, v)| ProjPlane {
                dual_coords: to_elems(v),
                index: PlaneId(i as u32),
            })
            .collect();

        let n = raw.len();
        let dot = |a: &Coords, b: &Coords| {
            a.iter()
                .zip(b)
                .fold(0u16, |acc, (&x, &y)| field.add_r(acc, field.mul_r(x, y)))
        };
        let mut plane_points = vec![Vec::new(); n];
        let mut plane_masks = vec![FixedBitSet::with_capacity(n); n];
        let mut point_planes = vec![Vec::new(); n];
        for (pi, pv) in raw.iter().enumerate() {
            for (xi, xv) in raw.iter().enumerate() {
                if dot(xv, pv) == 0 {
                    plane_points[pi].push(PointId(xi as u32));
                    plane_masks[pi].insert(xi);
                    point_planes[xi].push(PlaneId(pi as u32));
                }
            }
        }

        let mut line_sets = enumerate_line_point_sets(&field, &vec_index, q);
        line_sets.sort_by_key(|pts| (pts[0], pts[1]));
        let lines: Vec<ProjLine> = line_sets
            .into_iter()
            .enumerate()
            .map(|(i, pts)| ProjLine {
                point_indices: pts,
                index: LineId(i as u32),
            })
            .collect();

        let mut point_lines = vec![Vec::new(); n];
        let mut line_by_key = HashMap::with_capacity(lines.len());
        let mut line_planes = Vec::with_capacity(lines.len());
        let mut plane_lines = vec![Vec::new(); n];
        for line in &lines {
            for x in &line.point_indices {
                point_lines[x.idx()].push(line.index);
            }
            line_by_key.insert(line.key(), line.index);
            let (a, b) = line.key();
            let pencil = intersect_sorted(&point_planes[a.idx()], &point_planes[b.idx()]);
            for pl in &pencil {
                plane_lines[pl.idx()].push(line.index);
            }
            line_planes.push(pencil);
        }

        Geometry {
            field,
            raw,
            vec_index,
            points,
            planes,
            lines,
            plane_points,
            plane_masks,
            point_planes,
            point_lines,
            line_planes,
            plane_lines,
            line_by_key,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_planes(&self) -> usize {
        self.planes.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn enumerate_points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn enumerate_planes(&self) -> &[ProjPlane] {
        &self.planes
    }

    pub fn enumerate_lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn point_ids(&self) -> impl Iterator<Item = PointId> + '_ {
        (0..self.points.len() as u32).map(PointId)
    }

    pub fn plane_ids(&self) -> impl Iterator<Item = PlaneId> + '_ {
        (0..self.planes.len() as u32).map(PlaneId)
    }

    pub fn line_ids(&self) -> impl Iterator<Item = LineId> + '_ {
        (0..self.lines.len() as u32).map(LineId)
    }

    pub fn point(&self, x: PointId) -> &ProjPoint {
        &self.points[x.idx()]
    }

    pub fn plane(&self, p: PlaneId) -> &ProjPlane {
        &self.planes[p.idx()]
    }

    pub fn line(&self, l: LineId) -> &ProjLine {
        &self.lines[l.idx()]
    }

    /// Normalized coordinate ranks of a point.
    pub fn point_coords(&self, x: PointId) -> Coords {
        self.raw[x.idx()]
    }

    /// Normalized dual coordinate ranks of a plane.
    pub fn plane_coords(&self, p: PlaneId) -> Coords {
        self.raw[p.idx()]
    }

    /// The point spanned by a nonzero vector of element ranks.
    pub fn point_of(&self, v: Coords) -> Option<PointId> {
        self.index_of(v).map(PointId)
    }

    /// The plane whose linear form is the given nonzero vector.
    pub fn plane_of(&self, v: Coords) -> Option<PlaneId> {
        self.index_of(v).map(PlaneId)
    }

    fn index_of(&self, v: Coords) -> Option<u32> {
        let q = self.field.q() as usize;
        if v.iter().any(|&c| c as usize >= q) {
            return None;
        }
        let code = v.iter().fold(0usize, |acc, &c| acc * q + c as usize);
        Some(self.vec_index[code]).filter(|&i| i != NONE)
    }

    fn ranks_of(&self, coords: &[FieldElement]) -> Result<Coords, GeometryError> {
        if coords.len() != 4 {
            return Err(GeometryError::WrongArity(coords.len()));
        }
        let mut v = [0u16; 4];
        for (slot, c) in v.iter_mut().zip(coords) {
            if !self.field.contains(c) {
                return Err(GfError::FieldMismatch.into());
            }
            *slot = c.rank();
        }
        Ok(v)
    }

    pub fn point_from_elements(&self, coords: &[FieldElement]) -> Result<PointId, GeometryError> {
        let v = self.ranks_of(coords)?;
        self.point_of(v).ok_or(GeometryError::ZeroVector)
    }

    pub fn plane_from_elements(&self, coords: &[FieldElement]) -> Result<PlaneId, GeometryError> {
        let v = self.ranks_of(coords)?;
        self.plane_of(v).ok_or(GeometryError::ZeroVector)
    }

    /// `a:b:c:d` using the element text form.
    pub fn format_coords(&self, v: Coords) -> String {
        v.iter()
            .map(|&c| self.field.element(c).to_string())
            .collect::<Vec<_>>()
            .join(":")
    }

    pub fn parse_coords(&self, text: &str) -> Result<Coords, GeometryError> {
        let parts: Vec<&str> = text.split(':').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(GeometryError::WrongArity(parts.len()));
        }
        let mut v = [0u16; 4];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = self.field.parse_element(part)?.rank();
        }
        Ok(v)
    }

    pub fn format_plane(&self, p: PlaneId) -> String {
        self.format_coords(self.plane_coords(p))
    }

    pub fn format_point(&self, x: PointId) -> String {
        self.format_coords(self.point_coords(x))
    }

    /// Line text form: its two key point indices, `i:j`.
    pub fn format_line(&self, l: LineId) -> String {
        let (a, b) = self.line(l).key();
        format!("{a}:{b}")
    }

    pub fn parse_plane(&self, text: &str) -> Result<PlaneId, GeometryError> {
        let v = self.parse_coords(text)?;
        self.plane_of(v).ok_or(GeometryError::ZeroVector)
    }

    pub fn parse_point(&self, text: &str) -> Result<PointId, GeometryError> {
        let v = self.parse_coords(text)?;
        self.point_of(v).ok_or(GeometryError::ZeroVector)
    }

    pub fn line_by_key(&self, a: PointId, b: PointId) -> Option<LineId> {
        self.line_by_key.get(&(a.min(b), a.max(b))).copied()
    }

    /// True iff the point lies on the plane, from the tabulated bitsets.
    #[inline]
    pub fn incident(&self, x: PointId, p: PlaneId) -> bool {
        self.plane_masks[p.idx()].contains(x.idx())
    }

    /// Incidence recomputed from coordinates: `sum x_i * u_i == 0`.
    pub fn incident_by_coords(&self, x: PointId, p: PlaneId) -> bool {
        let f = &self.field;
        let (xv, pv) = (self.raw[x.idx()], self.raw[p.idx()]);
        xv.iter()
            .zip(&pv)
            .fold(0u16, |acc, (&a, &b)| f.add_r(acc, f.mul_r(a, b)))
            == 0
    }

    /// The line `{x1 + t*x2 : t in GF(q)} ∪ {x2}`.
    pub fn line_through(&self, x1: PointId, x2: PointId) -> Result<LineId, GeometryError> {
        if x1 == x2 {
            return Err(GeometryError::IdenticalPoints);
        }
        let f = &self.field;
        let (a, b) = (self.raw[x1.idx()], self.raw[x2.idx()]);
        let mut pts: Vec<PointId> = (0..f.q() as u16)
            .map(|t| {
                let v = [0, 1, 2, 3].map(|i| f.add_r(a[i], f.mul_r(t, b[i])));
                self.point_of(v).expect("independent vectors")
            })
            .collect();
        pts.push(x2);
        pts.sort_unstable();
        Ok(self.line_by_key[&(pts[0], pts[1])])
    }

    /// The line through two points, via the point-to-lines tables.
    pub fn common_line(&self, x1: PointId, x2: PointId) -> Option<LineId> {
        if x1 == x2 {
            return None;
        }
        intersect_sorted(&self.point_lines[x1.idx()], &self.point_lines[x2.idx()])
            .first()
            .copied()
    }

    pub fn points_on_line(&self, l: LineId) -> &[PointId] {
        &self.lines[l.idx()].point_indices
    }

    /// The q+1 planes of the pencil on `l`, ascending.
    pub fn planes_through_line(&self, l: LineId) -> &[PlaneId] {
        &self.line_planes[l.idx()]
    }

    pub fn planes_through_point(&self, x: PointId) -> &[PlaneId] {
        &self.point_planes[x.idx()]
    }

    pub fn lines_through_point(&self, x: PointId) -> &[LineId] {
        &self.point_lines[x.idx()]
    }

    pub fn points_on_plane(&self, p: PlaneId) -> &[PointId] {
        &self.plane_points[p.idx()]
    }

    pub fn plane_mask(&self, p: PlaneId) -> &FixedBitSet {
        &self.plane_masks[p.idx()]
    }

    pub fn lines_on_plane(&self, p: PlaneId) -> &[LineId] {
        &self.plane_lines[p.idx()]
    }

    pub fn line_in_plane(&self, l: LineId, p: PlaneId) -> bool {
        self.line_planes[l.idx()].binary_search(&p).is_ok()
    }

    /// The unique plane on `l` and `x`.
    pub fn plane_span(&self, l: LineId, x: PointId) -> Result<PlaneId, GeometryError> {
        if self.line(l).contains(x) {
            return Err(GeometryError::PointOnLine(x));
        }
        let mut hits = self
            .planes_through_line(l)
            .iter()
            .copied()
            .filter(|&p| self.incident(x, p));
        let plane = hits.next().expect("a point off a line spans a plane with it");
        debug_assert!(hits.next().is_none());
        Ok(plane)
    }

    /// Intersection line of two distinct planes, from the null space of the
    /// 2x4 system of their linear forms.
    pub fn meet_planes(&self, a: PlaneId, b: PlaneId) -> Result<LineId, GeometryError> {
        if a == b {
            return Err(GeometryError::IdenticalPlanes);
        }
        let m = Matrix::from_rows(4, &[self.raw[a.idx()].to_vec(), self.raw[b.idx()].to_vec()]);
        let basis = m.nullspace(&self.field);
        debug_assert_eq!(basis.len(), 2);
        let to_point = |v: &Vec<u16>| self.point_of([v[0], v[1], v[2], v[3]]).expect("nonzero");
        self.line_through(to_point(&basis[0]), to_point(&basis[1]))
    }
}

fn decode(mut n: usize, q: usize) -> Coords {
    let mut v = [0u16; 4];
    for slot in v.iter_mut().rev() {
        *slot = (n % q) as u16;
        n /= q;
    }
    v
}

/// Point sets of all lines, one per 2x4 matrix in reduced row echelon form.
fn enumerate_line_point_sets(field: &FieldSpec, vec_index: &[u32], q: usize) -> Vec<Vec<PointId>> {
    let code = |v: &Coords| v.iter().fold(0usize, |acc, &c| acc * q + c as usize);
    let mut out = Vec::with_capacity(line_count(q as u64) as usize);
    for a in 0..4 {
        for b in a + 1..4 {
            let free1: Vec<usize> = (a + 1..4).filter(|&c| c != b).collect();
            let free2: Vec<usize> = (b + 1..4).collect();
            let nfree = free1.len() + free2.len();
            for n in 0..q.pow(nfree as u32) {
                let mut r1 = [0u16; 4];
                let mut r2 = [0u16; 4];
                r1[a] = 1;
                r2[b] = 1;
                let mut rest = n;
                for &c in free1.iter() {
                    r1[c] = (rest % q) as u16;
                    rest /= q;
                }
                for &c in free2.iter() {
                    r2[c] = (rest % q) as u16;
                    rest /= q;
                }
                let mut pts: Vec<PointId> = Vec::with_capacity(q + 1);
                pts.push(PointId(vec_index[code(&r2)]));
                for t in 0..q as u16 {
                    let v = [0, 1, 2, 3].map(|i| field.add_r(r1[i], field.mul_r(t, r2[i])));
                    pts.push(PointId(vec_index[code(&v)]));
                }
                pts.sort_unstable();
                out.push(pts);
            }
        }
    }
    out
}

fn intersect_sorted<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn geom(q: u32) -> Geometry {
        Geometry::of_order(q).unwrap()
    }

    #[test]
    fn counts() {
        for (q, n) in [(2, 15), (3, 40), (4, 85), (5, 156)] {
            let g = geom(q);
            assert_eq!(g.num_points(), n);
            assert_eq!(g.num_planes(), n);
        }
    }

    /// Group every point pair by the set of points it spans.
    fn lines_by_pair_grouping(g: &Geometry) -> BTreeSet<Vec<PointId>> {
        let f = g.field();
        let mut out = BTreeSet::new();
        for a in g.point_ids() {
            for b in g.point_ids().filter(|&b| b > a) {
                let (va, vb) = (g.point_coords(a), g.point_coords(b));
                let mut span = BTreeSet::new();
                for s in 0..f.q() as u16 {
                    for t in 0..f.q() as u16 {
                        let v = [0, 1, 2, 3].map(|i| f.add_r(f.mul_r(s, va[i]), f.mul_r(t, vb[i])));
                        if let Some(x) = g.point_of(v) {
                            span.insert(x);
                        }
                    }
                }
                out.insert(span.into_iter().collect());
            }
        }
        out
    }

    #[test]
    fn line_counts_match_pair_grouping() {
        for (q, expected) in [(2, 35), (3, 130), (4, 357)] {
            let g = geom(q);
            let oracle = lines_by_pair_grouping(&g);
            assert_eq!(oracle.len(), expected);
            assert_eq!(g.num_lines(), expected);
            let ours: BTreeSet<Vec<PointId>> =
                g.enumerate_lines().iter().map(|l| l.point_indices.clone()).collect();
            assert_eq!(ours, oracle);
        }
    }

    #[test]
    fn point_order_is_lexicographic() {
        let g = geom(3);
        let coords: Vec<Coords> = g.point_ids().map(|x| g.point_coords(x)).collect();
        assert!(coords.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(coords[0], [0, 0, 0, 1]);
        assert_eq!(*coords.last().unwrap(), [1, 2, 2, 2]);
        let keys: Vec<_> = g.enumerate_lines().iter().map(|l| l.key()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn incidence_examples() {
        let g = geom(2);
        let x = g.point_of([1, 0, 0, 0]).unwrap();
        assert!(g.incident(x, g.plane_of([0, 0, 0, 1]).unwrap()));
        assert!(!g.incident(x, g.plane_of([1, 0, 0, 0]).unwrap()));
        for p in g.plane_ids() {
            let count = g.point_ids().filter(|&x| g.incident_by_coords(x, p)).count();
            assert_eq!(count, 7);
            assert_eq!(g.points_on_plane(p).len(), 7);
        }
    }

    #[test]
    fn line_through_axes() {
        let g = geom(2);
        let a = g.point_of([1, 0, 0, 0]).unwrap();
        let b = g.point_of([0, 1, 0, 0]).unwrap();
        let c = g.point_of([1, 1, 0, 0]).unwrap();
        let l = g.line_through(a, b).unwrap();
        let mut expected = vec![a, b, c];
        expected.sort();
        assert_eq!(g.points_on_line(l), expected.as_slice());
        assert_eq!(g.line_through(b, a).unwrap(), l);
        assert_eq!(g.line_through(a, a), Err(GeometryError::IdenticalPoints));
    }

    #[test]
    fn line_through_agrees_with_tables() {
        let g = geom(3);
        for a in g.point_ids() {
            for b in g.point_ids().filter(|&b| b != a) {
                let l = g.line_through(a, b).unwrap();
                assert_eq!(g.points_on_line(l).len(), 4);
                assert_eq!(Some(l), g.common_line(a, b));
            }
        }
    }

    #[test]
    fn pencils_and_double_count() {
        for q in [2u32, 3, 4] {
            let g = geom(q);
            let q = q as usize;
            let mut flags = 0;
            for l in g.line_ids() {
                let pencil = g.planes_through_line(l);
                assert_eq!(pencil.len(), q + 1);
                for &p in pencil {
                    assert!(g.points_on_line(l).iter().all(|&x| g.incident(x, p)));
                }
                flags += pencil.len();
            }
            let by_planes: usize = g.plane_ids().map(|p| g.lines_on_plane(p).len()).sum();
            assert_eq!(flags, by_planes);
            assert_eq!(by_planes, g.num_planes() * (q * q + q + 1));
        }
    }

    #[test]
    fn plane_span_examples() {
        let g = geom(3);
        let a = g.point_of([1, 0, 0, 0]).unwrap();
        let b = g.point_of([0, 1, 0, 0]).unwrap();
        let l = g.line_through(a, b).unwrap();
        let x = g.point_of([0, 0, 1, 0]).unwrap();
        assert_eq!(g.plane_span(l, x).unwrap(), g.plane_of([0, 0, 0, 1]).unwrap());
        assert_eq!(g.plane_span(l, a), Err(GeometryError::PointOnLine(a)));
        for l in g.line_ids().step_by(7) {
            for x in g.point_ids().filter(|&x| !g.line(l).contains(x)) {
                let p = g.plane_span(l, x).unwrap();
                assert!(g.incident(x, p));
                assert!(g.points_on_line(l).iter().all(|&y| g.incident(y, p)));
                let all: Vec<_> = g
                    .plane_ids()
                    .filter(|&s| g.incident(x, s) && g.line_in_plane(l, s))
                    .collect();
                assert_eq!(all, vec![p]);
            }
        }
    }

    #[test]
    fn plane_contents() {
        let g = geom(3);
        for p in g.plane_ids() {
            assert_eq!(g.points_on_plane(p).len(), 13);
            assert_eq!(g.lines_on_plane(p).len(), 13);
        }
        let g2 = geom(2);
        assert!(g2.plane_ids().all(|p| g2.points_on_plane(p).len() == 7));
    }

    #[test]
    fn lines_on_plane_by_grouping() {
        let g = geom(3);
        let p = PlaneId(17);
        let pts = g.points_on_plane(p);
        let mut groups = BTreeSet::new();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                let l = g.line_through(a, b).unwrap();
                groups.insert(g.points_on_line(l).to_vec());
            }
        }
        assert_eq!(groups.len(), 13);
    }

    #[test]
    fn meet_planes_examples() {
        let g = geom(3);
        let a = g.plane_of([1, 0, 0, 0]).unwrap();
        let b = g.plane_of([0, 1, 0, 0]).unwrap();
        let l = g.meet_planes(a, b).unwrap();
        for &x in g.points_on_line(l) {
            let v = g.point_coords(x);
            assert_eq!((v[0], v[1]), (0, 0));
        }
        assert_eq!(g.meet_planes(a, a), Err(GeometryError::IdenticalPlanes));
        for s in g.plane_ids() {
            for t in g.plane_ids().filter(|&t| t != s) {
                let l = g.meet_planes(s, t).unwrap();
                assert!(g.line_in_plane(l, s) && g.line_in_plane(l, t));
            }
        }
    }

    #[test]
    fn duality_is_incidence_preserving() {
        // Point i and plane i share coordinates, so x on p iff point p on plane x.
        let g = geom(4);
        for x in g.point_ids() {
            for p in g.plane_ids() {
                assert_eq!(g.incident(x, p), g.incident(PointId(p.0), PlaneId(x.0)));
            }
        }
    }

    #[test]
    fn text_forms() {
        let g = geom(4);
        let p = g.parse_plane("1:01:0:11").unwrap();
        assert_eq!(g.format_plane(p), "1:01:0:11");
        // non-normalized input normalizes to the same plane
        let alpha = g.parse_plane("01:11:0:1").unwrap();
        assert_eq!(alpha, p);
        assert!(g.parse_plane("0:0:0:0").is_err());
        assert!(g.parse_plane("1:0:0").is_err());
        assert!(g.parse_plane("1:2:0:0").is_err());
    }
}
