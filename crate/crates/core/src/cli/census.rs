//! Measured incidence counts for the standard hyperbolic quadric, side by
//! side with their closed forms.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::pg3::{line_count, point_count, Geometry};
use crate::quadric::{QuadraticForm, Quadric};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub name: &'static str,
    pub measured: String,
    pub expected: String,
    pub ok: bool,
}

fn exact(name: &'static str, measured: u64, expected: u64) -> CensusRow {
    CensusRow {
        name,
        measured: measured.to_string(),
        expected: expected.to_string(),
        ok: measured == expected,
    }
}

fn set_text(values: &BTreeSet<u64>) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn census(geom: &Geometry) -> Vec<CensusRow> {
    let q = geom.q() as u64;
    let quad = Quadric::hyperbolic(geom, &QuadraticForm::standard_hyperbolic(geom.field()))
        .expect("the standard form is hyperbolic");
    let secant = quad.secant_planes();

    let mut rows = vec![
        exact("points", geom.num_points() as u64, point_count(q)),
        exact("lines", geom.num_lines() as u64, line_count(q)),
        exact("planes", geom.num_planes() as u64, point_count(q)),
        exact("quadric points", quad.points().len() as u64, (q + 1) * (q + 1)),
        exact("generators", quad.generators().len() as u64, 2 * (q + 1)),
        exact("secant planes", secant.len() as u64, q * q * q - q),
        exact("tangent planes", quad.tangent_planes().len() as u64, (q + 1) * (q + 1)),
    ];

    // on the quadric q^2 - q, off it q^2
    let mut wrong_point = 0;
    let mut point_values = BTreeSet::new();
    for x in geom.point_ids() {
        let n = quad.secant_count_through_point(x) as u64;
        point_values.insert(n);
        if n != if quad.contains(x) { q * q - q } else { q * q } {
            wrong_point += 1;
        }
    }
    rows.push(CensusRow {
        name: "point secant counts",
        measured: set_text(&point_values),
        expected: set_text(&BTreeSet::from([q * q - q, q * q])),
        ok: wrong_point == 0,
    });

    let allowed = BTreeSet::from([0, q - 1, q, q + 1]);
    let line_values: BTreeSet<u64> = geom
        .line_ids()
        .map(|l| quad.secant_count_through_line(l) as u64)
        .collect();
    rows.push(CensusRow {
        name: "line secant spectrum",
        measured: set_text(&line_values),
        expected: format!("subset of {}", set_text(&allowed)),
        ok: line_values.is_subset(&allowed),
    });
    rows
}

pub struct CensusTable<'a> {
    pub q: String,
    pub rows: &'a [CensusRow],
}

impl fmt::Display for CensusTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "census q={}", self.q)?;
        writeln!(out, "{:<22} {:>12} {:>22}  ok", "quantity", "measured", "expected")?;
        for row in self.rows {
            let ok = if row.ok { "yes" } else { "NO" };
            writeln!(out, "{:<22} {:>12} {:>22}  {ok}", row.name, row.measured, row.expected)?;
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lookup<'a>(rows: &'a [CensusRow], name: &str) -> &'a CensusRow {
        rows.iter().find(|r| r.name == name).unwrap()
    }

    #[test]
    fn small_orders() {
        let g = Geometry::of_order(2).unwrap();
        let rows = census(&g);
        assert!(rows.iter().all(|r| r.ok));
        assert_eq!(lookup(&rows, "points").measured, "15");
        assert_eq!(lookup(&rows, "lines").measured, "35");
        assert_eq!(lookup(&rows, "planes").measured, "15");

        let g = Geometry::of_order(3).unwrap();
        let rows = census(&g);
        assert!(rows.iter().all(|r| r.ok));
        for (name, v) in [("quadric points", "16"), ("generators", "8"), ("secant planes", "24"), ("tangent planes", "16")] {
            assert_eq!(lookup(&rows, name).measured, v);
        }
        assert_eq!(lookup(&rows, "point secant counts").measured, "{6,9}");
    }

    #[test]
    fn order_seven() {
        let g = Geometry::of_order(7).unwrap();
        let rows = census(&g);
        assert!(rows.iter().all(|r| r.ok));
        assert_eq!(lookup(&rows, "secant planes").measured, "336");
        assert_eq!(lookup(&rows, "tangent planes").measured, "64");
    }
}
