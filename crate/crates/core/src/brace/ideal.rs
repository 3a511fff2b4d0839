use rayon::prelude::*;
use serde::Serialize;

use super::SkewBrace;
use crate::error::Result;
use crate::group::{all_subgroups, subgroup_closure, Bounds, Subgroup, FULL_SCAN_LIMIT};

/// A subgroup of the dot group that is invariant under every `λ_a`, and
/// therefore also a subgroup of the circle group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LeftIdeal {
    elements: Vec<usize>,
}

impl LeftIdeal {
    /// Checks every left-ideal property of `elements` against `b`: dot
    /// subgroup, λ-invariance, and closure under circle products and
    /// inverses.
    pub fn certify(b: &SkewBrace, mut elements: Vec<usize>) -> std::result::Result<LeftIdeal, String> {
        elements.sort_unstable();
        elements.dedup();
        let n = b.order();
        let sub = Subgroup::from_elements(b.dot(), elements).map_err(|e| e.to_string())?;
        let mask = sub.membership(n);
        if let Some((a, x)) = lambda_escape(b, sub.elements(), &mask) {
            return Err(format!("λ_{a}({x}) leaves the set"));
        }
        let circle = b.circle();
        let els = sub.elements();
        let bad = els.par_iter().find_first(|&&x| !mask[circle.inv(x)] || els.iter().any(|&y| !mask[circle.mul(x, y)]));
        if let Some(&x) = bad {
            return Err(format!("not a circle subgroup at {x}"));
        }
        Ok(LeftIdeal {
            elements: sub.elements().to_vec(),
        })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// First `(a, x)` with `x` in the set and `λ_a(x)` outside it. Since `λ` is
/// a homomorphism from the circle group, generators of the circle group
/// suffice above the full-scan limit.
fn lambda_escape(b: &SkewBrace, elements: &[usize], mask: &[bool]) -> Option<(usize, usize)> {
    let n = b.order();
    let actors: Vec<usize> = if n <= FULL_SCAN_LIMIT {
        (0..n).collect()
    } else {
        b.circle().generators().to_vec()
    };
    actors
        .par_iter()
        .find_map_first(|&a| elements.iter().find(|&&x| !mask[b.lambda(a, x)]).map(|&x| (a, x)))
}

/// Smallest left ideal containing `set`.
pub fn left_ideal_closure(b: &SkewBrace, set: &[usize]) -> LeftIdeal {
    let n = b.order();
    let dot = b.dot();
    let actors = b.circle().generators().to_vec();
    let mut gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
    loop {
        let sub = subgroup_closure(dot, &gens);
        if sub.order() == n {
            return LeftIdeal {
                elements: sub.elements().to_vec(),
            };
        }
        let mask = sub.membership(n);
        // λ_g is a dot automorphism, so λ_g(⟨S⟩) = ⟨λ_g(S)⟩
        let mut grown = false;
        let snapshot = gens.clone();
        for &g in &actors {
            for &s in &snapshot {
                let y = b.lambda(g, s);
                if !mask[y] && !gens.contains(&y) {
                    gens.push(y);
                    grown = true;
                }
            }
        }
        if !grown {
            return LeftIdeal {
                elements: sub.elements().to_vec(),
            };
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeftSimplicity {
    pub left_simple: bool,
    /// A proper nontrivial left ideal when not left simple.
    pub witness: Option<LeftIdeal>,
}

/// Decided by singleton closures: a proper nontrivial left ideal contains
/// the closure of each of its nonzero elements. One element per λ-orbit is
/// enough, because the closure of `λ_g(a)` is the closure of `a`.
pub fn is_left_simple(b: &SkewBrace) -> LeftSimplicity {
    let n = b.order();
    if n == 1 {
        return LeftSimplicity {
            left_simple: false,
            witness: None,
        };
    }
    let reps = lambda_orbit_representatives(b);
    let witness = reps
        .par_iter()
        .filter(|&&a| a != 0)
        .map(|&a| left_ideal_closure(b, &[a]))
        .find_first(|i| i.order() < n);
    LeftSimplicity {
        left_simple: witness.is_none(),
        witness,
    }
}

/// Smallest element of each orbit of the λ-action.
pub(crate) fn lambda_orbit_representatives(b: &SkewBrace) -> Vec<usize> {
    lambda_orbits(b).into_iter().map(|o| o[0]).collect()
}

/// Orbits of the λ-action on the carrier, each sorted, ordered by their
/// smallest element.
pub fn lambda_orbits(b: &SkewBrace) -> Vec<Vec<usize>> {
    let n = b.order();
    let actors = b.circle().generators().to_vec();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for &g in &actors {
                let y = b.lambda(g, x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Every left ideal, sorted by `(order, elements)`.
pub fn left_ideals(b: &SkewBrace, bounds: &Bounds) -> Result<Vec<LeftIdeal>> {
    let n = b.order();
    let subs = all_subgroups(b.dot(), bounds)?;
    let out: Vec<LeftIdeal> = subs
        .par_iter()
        .filter(|s| lambda_escape(b, s.elements(), &s.membership(n)).is_none())
        .map(|s| {
            LeftIdeal::certify(b, s.elements().to_vec())
                .unwrap_or_else(|e| panic!("λ-invariant subgroup failed certification: {e}"))
        })
        .collect();
    Ok(out)
}
