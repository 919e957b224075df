//! Plane families of PG(3,q) that meet a hyperbolic quadric in a conic.
//!
//! The crate models PG(3,q) for small q, the quadrics on it, and a
//! verification pipeline that takes a family of planes, checks the point and
//! line incidence conditions together with every counting consequence, and
//! rebuilds the quadric whose conic planes the family must be.

pub mod gf;
pub mod linalg;
pub mod pg3;
pub mod charverify;
pub mod cli;
pub mod quadric;
