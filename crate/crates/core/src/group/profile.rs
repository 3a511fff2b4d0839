use serde::Serialize;

use super::{automorphism_orbits, Bounds, FiniteGroup};
use crate::error::Result;

/// `G ≅ Tⁿ` with `|T| = factor_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleFactorHint {
    pub factor_order: usize,
    pub power: usize,
    pub factor_abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub order: usize,
    pub is_abelian: bool,
    pub center: Vec<usize>,
    pub is_simple: bool,
    pub is_characteristically_simple: bool,
    pub simple_factor_hint: Option<SimpleFactorHint>,
}

/// Smallest normal subgroup containing `x`.
pub(crate) fn normal_closure(g: &FiniteGroup, x: usize) -> Vec<usize> {
    let mut gens = vec![x];
    let mut members = g.right_closure(&gens);
    let mut mask = vec![false; g.order()];
    for &m in &members {
        mask[m] = true;
    }
    // normal iff its generators stay inside under conjugation by the
    // generators of g
    let mut i = 0;
    while i < gens.len() {
        let h = gens[i];
        for &s in g.generators() {
            let c = g.conj(s, h);
            if !mask[c] {
                gens.push(c);
                members = g.right_closure(&gens);
                for &m in &members {
                    mask[m] = true;
                }
            }
        }
        i += 1;
    }
    members
}

/// Structural summary. Simplicity is decided by normal closures of single
/// elements and characteristic simplicity by closures of `Aut`-orbits, so
/// no subgroup lattice is needed.
pub fn group_profile(g: &FiniteGroup, bounds: &Bounds) -> Result<GroupProfile> {
    let n = g.order();
    let is_abelian = g.is_abelian();
    let center = g.center();
    let is_simple = n > 1 && (1..n).all(|x| normal_closure(g, x).len() == n);
    let is_characteristically_simple = if n == 1 {
        false
    } else if is_simple {
        true
    } else {
        automorphism_orbits(g, bounds)?
            .iter()
            .filter(|o| o[0] != 0)
            .all(|o| g.right_closure(o).len() == n)
    };
    let simple_factor_hint = if is_characteristically_simple {
        // minimal normal subgroups of Tⁿ are the factors
        let t = (1..n).map(|x| normal_closure(g, x).len()).min().unwrap_or(1);
        let t = if is_abelian { g.element_order(1) } else { t };
        let mut power = 0;
        let mut m = 1usize;
        while m < n {
            m *= t;
            power += 1;
        }
        Some(SimpleFactorHint {
            factor_order: t,
            power,
            factor_abelian: is_abelian,
        })
    } else {
        None
    };
    Ok(GroupProfile {
        order: n,
        is_abelian,
        center,
        is_simple,
        is_characteristically_simple,
        simple_factor_hint,
    })
}
