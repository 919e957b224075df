use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::pg3::{Geometry, PlaneId, PointId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("a plane family must be nonempty")]
    Empty,
    #[error("plane index {0} does not exist in PG(3,{1})")]
    InvalidPlane(PlaneId, u32),
    #[error("plane {0} occurs twice")]
    Duplicate(PlaneId),
}

/// A nonempty set of planes of one PG(3,q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneFamily {
    q: u32,
    members: Vec<PlaneId>,
    mask: FixedBitSet,
}

impl PlaneFamily {
    /// Rejects empty input, unknown indices and repeated planes.
    pub fn new(geom: &Geometry, planes: impl IntoIterator<Item = PlaneId>) -> Result<Self, FamilyError> {
        let n = geom.num_planes();
        let mut mask = FixedBitSet::with_capacity(n);
        for p in planes {
            if p.idx() >= n {
                return Err(FamilyError::InvalidPlane(p, geom.q()));
            }
            if mask.put(p.idx()) {
                return Err(FamilyError::Duplicate(p));
            }
        }
        Self::from_mask(geom, mask)
    }

    pub fn from_mask(geom: &Geometry, mask: FixedBitSet) -> Result<Self, FamilyError> {
        if mask.len() != geom.num_planes() {
            let bad = mask.len().max(geom.num_planes()) as u32;
            return Err(FamilyError::InvalidPlane(PlaneId(bad), geom.q()));
        }
        if mask.is_clear() {
            return Err(FamilyError::Empty);
        }
        let members = mask.ones().map(|i| PlaneId(i as u32)).collect();
        Ok(PlaneFamily {
            q: geom.q(),
            members,
            mask,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in ascending index order.
    pub fn members(&self) -> &[PlaneId] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn contains(&self, p: PlaneId) -> bool {
        self.mask.contains(p.idx())
    }

    /// Number of members through a point.
    pub fn count_through_point(&self, geom: &Geometry, x: PointId) -> usize {
        geom.planes_through_point(x)
            .iter()
            .filter(|p| self.contains(**p))
            .count()
    }

    fn edited(&self, remove: Option<PlaneId>, add: Option<PlaneId>) -> Result<Self, FamilyError> {
        let mut mask = self.mask.clone();
        if let Some(p) = remove {
            mask.set(p.idx(), false);
        }
        if let Some(p) = add {
            if p.idx() >= mask.len() {
                return Err(FamilyError::InvalidPlane(p, self.q));
            }
            if mask.put(p.idx()) {
                return Err(FamilyError::Duplicate(p));
            }
        }
        if mask.is_clear() {
            return Err(FamilyError::Empty);
        }
        let members = mask.ones().map(|i| PlaneId(i as u32)).collect();
        Ok(PlaneFamily {
            q: self.q,
            members,
            mask,
        })
    }

    pub fn without(&self, p: PlaneId) -> Result<Self, FamilyError> {
        self.edited(Some(p), None)
    }

    pub fn with(&self, p: PlaneId) -> Result<Self, FamilyError> {
        self.edited(None, Some(p))
    }

    /// Replaces member `out` by the non-member `added`.
    pub fn swapped(&self, out: PlaneId, added: PlaneId) -> Result<Self, FamilyError> {
        self.edited(Some(out), Some(added))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_errors() {
        let g = Geometry::of_order(2).unwrap();
        assert_eq!(PlaneFamily::new(&g, []), Err(FamilyError::Empty));
        assert_eq!(
            PlaneFamily::new(&g, [PlaneId(1), PlaneId(1)]),
            Err(FamilyError::Duplicate(PlaneId(1)))
        );
        assert_eq!(
            PlaneFamily::new(&g, [PlaneId(15)]),
            Err(FamilyError::InvalidPlane(PlaneId(15), 2))
        );
        let fam = PlaneFamily::new(&g, [PlaneId(4), PlaneId(2)]).unwrap();
        assert_eq!(fam.members(), &[PlaneId(2), PlaneId(4)]);
        assert_eq!(fam.with(PlaneId(2)), Err(FamilyError::Duplicate(PlaneId(2))));
        assert_eq!(fam.without(PlaneId(2)).unwrap().members(), &[PlaneId(4)]);
        assert_eq!(
            fam.without(PlaneId(2)).unwrap().without(PlaneId(4)),
            Err(FamilyError::Empty)
        );
        assert_eq!(fam.swapped(PlaneId(2), PlaneId(7)).unwrap().members(), &[PlaneId(4), PlaneId(7)]);
    }
}
