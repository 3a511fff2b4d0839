//! Skew braces on a common carrier: validation, the λ/ρ/conj maps, left
//! ideals, left-simplicity, and isomorphism.

mod ideal;
mod iso;
mod maps;

pub use ideal::{is_left_simple, lambda_orbits, left_ideal_closure, left_ideals, LeftIdeal, LeftSimplicity};
pub use iso::{braces_isomorphic, find_isomorphism, BraceFingerprint};
pub use maps::{brace_maps, canonical_ideals, image_subgroups, BraceMaps, CanonicalIdeals, ImageSubgroups};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{build_group, FiniteGroup, FULL_SCAN_LIMIT};

/// A skew brace `(A,·,∘)`. Both groups share the ids `0..order` and the
/// identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBrace {
    name: Option<String>,
    dot: FiniteGroup,
    circle: FiniteGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BraceClass {
    Trivial,
    AlmostTrivial,
    Neither,
}

/// Validates the brace relation on every triple.
pub fn make_brace(dot: FiniteGroup, circle: FiniteGroup) -> Result<SkewBrace> {
    if dot.order() != circle.order() {
        return Err(Error::OrderMismatch {
            dot: dot.order(),
            circle: circle.order(),
        });
    }
    if let Some((a, b, c)) = first_brace_violation(&dot, &circle) {
        return Err(Error::BraceRelationFails { a, b, c });
    }
    Ok(SkewBrace {
        name: None,
        dot,
        circle,
    })
}

/// Builds a brace from raw tables, reporting differing identities before
/// any group validation.
pub fn make_brace_from_tables(dot: &[Vec<usize>], circle: &[Vec<usize>], name: Option<&str>) -> Result<SkewBrace> {
    if dot.len() != circle.len() {
        return Err(Error::OrderMismatch {
            dot: dot.len(),
            circle: circle.len(),
        });
    }
    if let (Some(d), Some(c)) = (table_identity(dot), table_identity(circle)) {
        if d != c {
            return Err(Error::IdentityMismatch { dot: d, circle: c });
        }
    }
    let dot = build_group(dot, None)?;
    let circle = build_group(circle, None)?;
    let b = make_brace(dot, circle)?;
    Ok(match name {
        Some(n) => b.with_name(n),
        None => b,
    })
}

fn table_identity(t: &[Vec<usize>]) -> Option<usize> {
    let n = t.len();
    (0..n).find(|&e| t[e].len() == n && t[e].iter().enumerate().all(|(i, &x)| i == x) && t.iter().enumerate().all(|(i, r)| r.get(e) == Some(&i)))
}

/// First `(a,b,c)` in lexicographic order with
/// `a∘(b·c) ≠ (a∘b)·a⁻¹·(a∘c)`.
///
/// Left-multiplying by `a⁻¹` turns the relation into
/// `λ_a(b·c) = λ_a(b)·λ_a(c)`. Above [`FULL_SCAN_LIMIT`] each `λ_a` is
/// first tested on `c` ranging over generators of the dot group, which
/// decides the relation exactly since `λ_a(1) = 1` then forces
/// multiplicativity on all of `c`; a failing row is rescanned in full for
/// the least triple.
pub fn first_brace_violation(dot: &FiniteGroup, circle: &FiniteGroup) -> Option<(usize, usize, usize)> {
    let n = dot.order();
    if n <= FULL_SCAN_LIMIT {
        return first_brace_violation_exhaustive(dot, circle);
    }
    let gens = dot.generators();
    let a = (0..n).into_par_iter().find_first(|&a| {
        let lam = lambda_row(dot, circle, a);
        lam[0] != 0
            || (0..n).any(|b| {
                let rb = dot.row(b);
                let rlb = dot.row(lam[b] as usize);
                gens.iter().any(|&s| lam[rb[s] as usize] != rlb[lam[s] as usize])
            })
    })?;
    violation_in_row(dot, circle, a)
}

/// As [`first_brace_violation`], scanning all `n³` triples in blocks of
/// one `a` per task.
pub fn first_brace_violation_exhaustive(dot: &FiniteGroup, circle: &FiniteGroup) -> Option<(usize, usize, usize)> {
    (0..dot.order()).into_par_iter().find_map_first(|a| violation_in_row(dot, circle, a))
}

fn lambda_row(dot: &FiniteGroup, circle: &FiniteGroup, a: usize) -> Vec<u16> {
    let ainv = dot.row(dot.inv(a));
    circle.row(a).iter().map(|&x| ainv[x as usize]).collect()
}

fn violation_in_row(dot: &FiniteGroup, circle: &FiniteGroup, a: usize) -> Option<(usize, usize, usize)> {
    let n = dot.order();
    let lam = lambda_row(dot, circle, a);
    for b in 0..n {
        let rb = dot.row(b);
        let rlb = dot.row(lam[b] as usize);
        for c in 0..n {
            if lam[rb[c] as usize] != rlb[lam[c] as usize] {
                return Some((a, b, c));
            }
        }
    }
    None
}

impl SkewBrace {
    /// `a∘b = a·b`.
    pub fn trivial(g: &FiniteGroup) -> Result<SkewBrace> {
        let name = format!("trivial({})", g.name().unwrap_or("G"));
        Ok(make_brace(g.clone(), g.clone())?.with_name(name))
    }

    /// `a∘b = b·a`.
    pub fn almost_trivial(g: &FiniteGroup) -> Result<SkewBrace> {
        let name = format!("almost_trivial({})", g.name().unwrap_or("G"));
        Ok(make_brace(g.clone(), g.opposite())?.with_name(name))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    pub fn dot(&self) -> &FiniteGroup {
        &self.dot
    }

    pub fn circle(&self) -> &FiniteGroup {
        &self.circle
    }

    /// `λ_a(x) = a⁻¹·(a∘x)`.
    #[inline]
    pub fn lambda(&self, a: usize, x: usize) -> usize {
        self.dot.mul(self.dot.inv(a), self.circle.mul(a, x))
    }

    /// `ρ_a(x) = (a∘x)·a⁻¹`.
    #[inline]
    pub fn rho(&self, a: usize, x: usize) -> usize {
        self.dot.mul(self.circle.mul(a, x), self.dot.inv(a))
    }

    pub fn brace_class(&self) -> BraceClass {
        brace_class(self)
    }
}

/// Trivial when `∘ = ·`, almost trivial when `a∘b = b·a`; an abelian
/// additive group satisfying both reports trivial.
pub fn brace_class(b: &SkewBrace) -> BraceClass {
    let n = b.order();
    let (d, c) = (&b.dot, &b.circle);
    if (0..n).all(|x| c.row(x) == d.row(x)) {
        return BraceClass::Trivial;
    }
    if (0..n).all(|x| (0..n).all(|y| c.mul(x, y) == d.mul(y, x))) {
        return BraceClass::AlmostTrivial;
    }
    BraceClass::Neither
}
