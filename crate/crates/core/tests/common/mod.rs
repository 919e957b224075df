//! Oracles shared by the integration tests. Everything here is computed
//! from coordinates and bare polynomial arithmetic, not from the library's
//! precomputed tables.
#![allow(dead_code)]

use conicplanes::charverify::PlaneFamily;
use conicplanes::gf::FieldSpec;
use conicplanes::pg3::{Geometry, PlaneId};

/// Trims leading zero coefficients (stored constant term first).
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn modinv(a: u32, p: u32) -> u32 {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero residue")
}

fn poly_sub_scaled(a: &[u32], b: &[u32], c: u32, shift: usize, p: u32) -> Vec<u32> {
    let mut out = a.to_vec();
    out.resize(out.len().max(b.len() + shift), 0);
    for (i, &bi) in b.iter().enumerate() {
        out[i + shift] = (out[i + shift] + p - c * bi % p) % p;
    }
    trim(out)
}

fn poly_divmod(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = modinv(*b.last().unwrap(), p);
    let mut quot = vec![0; r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead % p;
        quot[shift] = c;
        r = poly_sub_scaled(&r, &b, c, shift, p);
    }
    (trim(quot), r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Inverse of `a` modulo `modulus` over GF(p) by the extended Euclidean
/// algorithm, as `e` coefficients constant term first.
pub fn euclid_inverse(p: u32, modulus: &[u32], a: &[u32]) -> Vec<u32> {
    let e = modulus.len() - 1;
    let (mut r0, mut r1) = (trim(modulus.to_vec()), trim(a.to_vec()));
    let (mut s0, mut s1) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (quot, rem) = poly_divmod(&r0, &r1, p);
        let s2 = {
            let prod = poly_mul(&quot, &s1, p);
            let mut d = s0.clone();
            d.resize(d.len().max(prod.len()), 0);
            for (i, x) in prod.iter().enumerate() {
                d[i] = (d[i] + p - x) % p;
            }
            trim(d)
        };
        (r0, r1) = (r1, rem);
        (s0, s1) = (s1, s2);
    }
    assert_eq!(r0.len(), 1, "gcd must be a nonzero constant");
    let scale = modinv(r0[0], p);
    let mut inv: Vec<u32> = s0.iter().map(|c| c * scale % p).collect();
    inv.resize(e, 0);
    inv
}

/// Checks the field axioms on every pair and triple of elements and the
/// agreement of the rank-level and element-level operations.
pub fn field_axioms(f: &FieldSpec) -> Result<(), String> {
    let q = f.q() as u16;
    let els = f.enumerate_elements();
    let (zero, one) = (f.zero(), f.one());
    for a in &els {
        let ar = a.rank();
        if f.add(a, &zero).unwrap() != *a || f.mul(a, &one).unwrap() != *a {
            return Err(format!("identity fails at {a}"));
        }
        if !f.add(a, &f.neg(a).unwrap()).unwrap().is_zero() {
            return Err(format!("additive inverse fails at {a}"));
        }
        if !a.is_zero() && f.mul(a, &f.inv(a).unwrap()).unwrap() != one {
            return Err(format!("multiplicative inverse fails at {a}"));
        }
        for b in &els {
            let br = b.rank();
            let sum = f.add(a, b).unwrap();
            let prod = f.mul(a, b).unwrap();
            if sum != f.add(b, a).unwrap() || prod != f.mul(b, a).unwrap() {
                return Err(format!("commutativity fails at {a},{b}"));
            }
            if sum.rank() != f.add_r(ar, br) || prod.rank() != f.mul_r(ar, br) {
                return Err(format!("rank tables disagree at {a},{b}"));
            }
            if f.sub(&sum, b).unwrap() != *a {
                return Err(format!("subtraction fails at {a},{b}"));
            }
            for c in 0..q {
                let c = f.element(c);
                let assoc_add = f.add(&sum, &c).unwrap() == f.add(a, &f.add(b, &c).unwrap()).unwrap();
                let assoc_mul = f.mul(&prod, &c).unwrap() == f.mul(a, &f.mul(b, &c).unwrap()).unwrap();
                let distrib = f.mul(a, &f.add(b, &c).unwrap()).unwrap()
                    == f.add(&prod, &f.mul(a, &c).unwrap()).unwrap();
                if !(assoc_add && assoc_mul && distrib) {
                    return Err(format!("ring law fails at {a},{b},{c}"));
                }
            }
        }
    }
    Ok(())
}

/// Nonzero elements whose library inverse differs from the Euclid oracle.
pub fn inverse_disagreements(f: &FieldSpec) -> Vec<String> {
    let modulus: Vec<u32> = if f.e() == 1 { vec![0, 1] } else { f.modulus().to_vec() };
    f.enumerate_elements()
        .into_iter()
        .filter(|a| !a.is_zero())
        .filter(|a| {
            let coeffs: Vec<u32> = a.coeffs().iter().map(|&c| c as u32).collect();
            let oracle = if f.e() == 1 {
                vec![modinv(coeffs[0], f.p())]
            } else {
                euclid_inverse(f.p(), &modulus, &coeffs)
            };
            f.inv(a).unwrap() != f.from_coeffs(&oracle).unwrap()
        })
        .map(|a| a.to_string())
        .collect()
}

/// Every single-plane deletion, addition and swap of `family`.
pub fn single_edits(geom: &Geometry, family: &PlaneFamily) -> Vec<(String, PlaneFamily)> {
    let others: Vec<PlaneId> = geom.plane_ids().filter(|p| !family.contains(*p)).collect();
    let mut out = Vec::new();
    for &m in family.members() {
        out.push((format!("delete {m}"), family.without(m).unwrap()));
    }
    for &o in &others {
        out.push((format!("add {o}"), family.with(o).unwrap()));
    }
    for &m in family.members() {
        for &o in &others {
            out.push((format!("swap {m} for {o}"), family.swapped(m, o).unwrap()));
        }
    }
    out
}
