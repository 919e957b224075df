//! The plane family text format.
//!
//! ```text
//! # comments run to end of line
//! q=2^2
//! 1:0:0:0
//! 0:1:01:11
//! ```
//!
//! The header names the field as `q=<p>` or `q=<p>^<e>`; every further
//! non-blank line is one plane in coordinate text form. Planes may be given
//! in any scaling, but each plane may appear only once.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::charverify::PlaneFamily;
use crate::gf::FieldSpec;
use crate::pg3::{Geometry, GeometryError, PlaneId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyFileError {
    #[error("missing header line `q=<order>`")]
    MissingHeader,
    #[error("line {line}: bad header `{text}`")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: file declares q={declared}, expected q={expected}")]
    OrderMismatch { line: usize, declared: String, expected: String },
    #[error("line {line}: {source}")]
    BadPlane { line: usize, source: GeometryError },
    #[error("line {line}: plane {plane} already given on line {first}")]
    Duplicate { line: usize, plane: PlaneId, first: usize },
    #[error("the file lists no planes")]
    Empty,
}

impl FamilyFileError {
    /// 1-based line number of the offending line, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            FamilyFileError::BadHeader { line, .. }
            | FamilyFileError::OrderMismatch { line, .. }
            | FamilyFileError::BadPlane { line, .. }
            | FamilyFileError::Duplicate { line, .. } => Some(*line),
            FamilyFileError::MissingHeader | FamilyFileError::Empty => None,
        }
    }
}

/// Header text for a field: `q=p` for prime fields, `q=p^e` otherwise.
pub fn header(field: &FieldSpec) -> String {
    format!("q={field}")
}

pub fn write_family(geom: &Geometry, family: &PlaneFamily) -> String {
    let mut out = header(geom.field());
    out.push('\n');
    for &p in family.members() {
        writeln!(out, "{}", geom.format_plane(p)).unwrap();
    }
    out
}

/// Content lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split_once('#').map_or(raw, |(b, _)| b).trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

/// The declared `(p, e)` of a family file.
pub fn read_header(text: &str) -> Result<(u32, u32), FamilyFileError> {
    let (line, body) = content_lines(text).next().ok_or(FamilyFileError::MissingHeader)?;
    let bad = || FamilyFileError::BadHeader {
        line,
        text: body.to_string(),
    };
    let value = body.strip_prefix("q=").ok_or_else(bad)?;
    FieldSpec::parse_order(value).map_err(|_| bad())
}

/// Parses a family over `geom`; the header must name the same field.
pub fn read_family(geom: &Geometry, text: &str) -> Result<PlaneFamily, FamilyFileError> {
    let mut lines = content_lines(text);
    let (header_line, _) = lines.next().ok_or(FamilyFileError::MissingHeader)?;
    let (p, e) = read_header(text)?;
    let field = geom.field();
    if (p, e) != (field.p(), field.e()) {
        let declared = if e == 1 { p.to_string() } else { format!("{p}^{e}") };
        return Err(FamilyFileError::OrderMismatch {
            line: header_line,
            declared,
            expected: field.to_string(),
        });
    }
    let mut seen: HashMap<PlaneId, usize> = HashMap::new();
    let mut planes = Vec::new();
    for (line, body) in lines {
        let plane = geom
            .parse_plane(body)
            .map_err(|source| FamilyFileError::BadPlane { line, source })?;
        if let Some(&first) = seen.get(&plane) {
            return Err(FamilyFileError::Duplicate { line, plane, first });
        }
        seen.insert(plane, line);
        planes.push(plane);
    }
    if planes.is_empty() {
        return Err(FamilyFileError::Empty);
    }
    Ok(PlaneFamily::new(geom, planes).expect("planes are distinct and in range"))
}
