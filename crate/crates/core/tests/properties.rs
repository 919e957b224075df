use conicplanes::charverify::{color_points, forward_generate, reconstruct, PlaneFamily};
use conicplanes::cli::{read_family, write_family};
use conicplanes::gf::FieldSpec;
use conicplanes::linalg::Matrix;
use conicplanes::pg3::{Geometry, PlaneId};
use conicplanes::quadric::{point_set, QuadraticForm};
use proptest::prelude::*;

const ORDERS: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

proptest! {
    #[test]
    fn element_text_round_trip(qi in 0..ORDERS.len(), r in 0u16..256) {
        let f = FieldSpec::of_order(ORDERS[qi]).unwrap();
        let a = f.element(r % f.q() as u16);
        prop_assert_eq!(f.parse_element(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn substituted_forms_reconstruct(qi in 0..4usize, entries in prop::array::uniform16(0u16..256)) {
        let g = Geometry::of_order(ORDERS[qi]).unwrap();
        let f = g.field();
        let q = f.q() as u16;
        let m: [[u16; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| entries[4 * i + j] % q));
        let rows: Vec<Vec<u16>> = m.iter().map(|r| r.to_vec()).collect();
        prop_assume!(Matrix::from_rows(4, &rows).rank(f) == 4);
        let form = QuadraticForm::standard_hyperbolic(f).substitute(f, &m);
        let fam = forward_generate(&g, &form).unwrap();
        let rebuilt = reconstruct(&g, &color_points(&g, &fam)).unwrap();
        prop_assert!(rebuilt.form.scalar_equivalent(&form, f));
        prop_assert_eq!(point_set(&g, &rebuilt.form), point_set(&g, &form));
    }

    #[test]
    fn family_file_round_trip(qi in 0..3usize, bits in prop::collection::vec(any::<bool>(), 400)) {
        let g = Geometry::of_order(ORDERS[qi]).unwrap();
        let planes: Vec<PlaneId> = g.plane_ids().filter(|p| bits[p.idx()]).collect();
        prop_assume!(!planes.is_empty());
        let fam = PlaneFamily::new(&g, planes).unwrap();
        prop_assert_eq!(read_family(&g, &write_family(&g, &fam)).unwrap(), fam);
    }
}
