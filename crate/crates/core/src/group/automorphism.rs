//! Automorphisms by backtracking over images of a generating set.
//!
//! Candidate images of each generator must match its element order and
//! conjugacy-class size, and the orders of short words in the generators.
//! Each partial choice is extended over the subgroup generated so far by a
//! walk on its Cayley graph; any inconsistency or collision prunes it.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{Bounds, FiniteGroup};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// A table-preserving permutation of the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    perm: Perm,
}

impl Automorphism {
    pub fn new(g: &FiniteGroup, perm: Perm) -> Result<Automorphism> {
        if !is_automorphism(g, &perm) {
            return Err(Error::Invalid("map is not an automorphism".into()));
        }
        Ok(Automorphism { perm })
    }

    pub(crate) fn from_perm_unchecked(perm: Perm) -> Automorphism {
        Automorphism { perm }
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.perm.apply(x)
    }
}

pub fn is_automorphism(g: &FiniteGroup, perm: &Perm) -> bool {
    g.is_automorphism_map(perm.images())
}

/// The full automorphism group, with the inner automorphisms flagged.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    elements: Vec<Automorphism>,
    index: HashMap<Perm, usize>,
    inner: Vec<usize>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inner_order(&self) -> usize {
        self.inner.len()
    }

    pub fn out_order(&self) -> usize {
        self.elements.len() / self.inner.len()
    }

    /// Sorted by image vector; index 0 is the identity.
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.elements[i]
    }

    pub fn index_of(&self, perm: &Perm) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Indices of the inner automorphisms, ascending.
    pub fn inner_indices(&self) -> &[usize] {
        &self.inner
    }

    pub fn is_inner(&self, i: usize) -> bool {
        self.inner.binary_search(&i).is_ok()
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].perm.compose(&self.elements[j].perm);
        self.index[&p]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&self.elements[i].perm.inverse()]
    }
}

struct Search<'a> {
    g: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

/// Extends images of generators to a homomorphism by walking the Cayley
/// graph of the source.
pub(crate) struct Extender {
    map: Vec<u16>,
    used: Vec<bool>,
    visited: Vec<usize>,
}

const UNSET: u16 = u16::MAX;

impl Extender {
    pub(crate) fn new(n: usize) -> Self {
        Extender {
            map: vec![UNSET; n],
            used: vec![false; n],
            visited: Vec::with_capacity(n),
        }
    }

    fn reset(&mut self) {
        for &x in &self.visited {
            self.used[self.map[x] as usize] = false;
            self.map[x] = UNSET;
        }
        self.visited.clear();
    }

    pub(crate) fn map(&self) -> &[u16] {
        &self.map
    }

    /// Defines `x·gᵢ ↦ map(x)·uᵢ` over the subgroup generated by `gens`.
    /// Succeeds iff this is a well-defined injective homomorphism there.
    fn extend(&mut self, g: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
        self.extend_into(g, g, gens, images)
    }

    /// As [`Extender::extend`] with images taken in `dst`.
    pub(crate) fn extend_into(&mut self, g: &FiniteGroup, dst: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
        self.reset();
        self.map[0] = 0;
        self.used[0] = true;
        self.visited.push(0);
        let mut i = 0;
        while i < self.visited.len() {
            let x = self.visited[i];
            let fx = self.map[x] as usize;
            for (&s, &u) in gens.iter().zip(images) {
                let y = g.mul(x, s);
                let fy = dst.mul(fx, u);
                let cur = self.map[y];
                if cur == UNSET {
                    if self.used[fy] {
                        return false;
                    }
                    self.map[y] = fy as u16;
                    self.used[fy] = true;
                    self.visited.push(y);
                } else if cur as usize != fy {
                    return false;
                }
            }
            i += 1;
        }
        true
    }
}

impl<'a> Search<'a> {
    fn new(g: &'a FiniteGroup) -> Self {
        let gens = g.generators().to_vec();
        let cs = g.class_sizes();
        let candidates = gens
            .iter()
            .map(|&s| {
                (1..g.order())
                    .filter(|&y| g.element_order(y) == g.element_order(s) && cs[y] == cs[s])
                    .collect()
            })
            .collect();
        Search { g, gens, candidates }
    }

    fn word_orders_match(&self, level: usize, images: &[usize]) -> bool {
        let g = self.g;
        let (s, u) = (self.gens[level], images[level]);
        (0..level).all(|j| {
            let (t, v) = (self.gens[j], images[j]);
            g.element_order(g.mul(s, t)) == g.element_order(g.mul(u, v))
                && g.element_order(g.mul(s, g.inv(t))) == g.element_order(g.mul(u, g.inv(v)))
                && g.element_order(g.mul(g.mul(s, s), t)) == g.element_order(g.mul(g.mul(u, u), v))
        })
    }

    fn descend<F: FnMut(&[u16])>(&self, level: usize, images: &mut Vec<usize>, ext: &mut Extender, visit: &mut F) {
        let k = self.gens.len();
        for &u in &self.candidates[level] {
            images.push(u);
            if self.word_orders_match(level, images) && ext.extend(self.g, &self.gens[..=level], images) {
                if level + 1 == k {
                    visit(&ext.map);
                } else {
                    self.descend(level + 1, images, ext, visit);
                }
            }
            images.pop();
        }
    }

    /// Folds every automorphism, partitioned by the image of the first
    /// generator; partial results are combined in root order.
    fn fold<A, I, F, R>(&self, init: I, fold: F, reduce: R) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, &[u16]) + Sync + Send,
        R: Fn(A, A) -> A + Sync + Send,
    {
        let n = self.g.order();
        if self.gens.is_empty() {
            let mut acc = init();
            fold(&mut acc, &[0]);
            return acc;
        }
        self.candidates[0]
            .par_iter()
            .map(|&u| {
                let mut acc = init();
                let mut ext = Extender::new(n);
                let mut images = vec![u];
                if ext.extend(self.g, &self.gens[..1], &images) {
                    if self.gens.len() == 1 {
                        fold(&mut acc, &ext.map);
                    } else {
                        self.descend(1, &mut images, &mut ext, &mut |m| fold(&mut acc, m));
                    }
                }
                acc
            })
            .reduce(&init, &reduce)
    }
}

fn check_bound(g: &FiniteGroup, bounds: &Bounds) -> Result<()> {
    if g.order() > bounds.carrier {
        return Err(Error::size_limit("automorphism search", g.order() as u128, bounds.carrier as u128));
    }
    Ok(())
}

/// Number of automorphisms, without materializing them.
pub fn count_automorphisms(g: &FiniteGroup, bounds: &Bounds) -> Result<u64> {
    check_bound(g, bounds)?;
    Ok(Search::new(g).fold(|| 0u64, |c, _| *c += 1, |a, b| a + b))
}

/// Orbits of `Aut(g)` on the carrier, each sorted, listed by least element.
pub fn automorphism_orbits(g: &FiniteGroup, bounds: &Bounds) -> Result<Vec<Vec<usize>>> {
    check_bound(g, bounds)?;
    let n = g.order();
    // Orbit of x is {φ(x)}; a mask per orbit representative would be n², so
    // collect the relation into a union-find instead.
    let parents = Search::new(g).fold(
        || (0..n as u32).collect::<Vec<u32>>(),
        |uf, m| {
            for (x, &y) in m.iter().enumerate() {
                union(uf, x, y as usize);
            }
        },
        |mut a, b| {
            for (x, &p) in b.iter().enumerate() {
                union(&mut a, x, p as usize);
            }
            a
        },
    );
    let mut parents = parents;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for x in 0..n {
        let r = find(&mut parents, x);
        let idx = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[idx].push(x);
    }
    Ok(groups)
}

fn find(uf: &mut [u32], mut x: usize) -> usize {
    while uf[x] as usize != x {
        let p = uf[x] as usize;
        uf[x] = uf[p];
        x = p;
    }
    x
}

fn union(uf: &mut [u32], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        uf[hi] = lo as u32;
    }
}

/// All automorphisms of `g`, with the inner subgroup `{conj(a)}`.
pub fn automorphism_group(g: &FiniteGroup, bounds: &Bounds) -> Result<AutomorphismGroup> {
    check_bound(g, bounds)?;
    let n = g.order();
    let mut perms: Vec<Perm> = Search::new(g).fold(
        Vec::new,
        |v, m| v.push(Perm::from_images(m[..n].to_vec())),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    perms.sort();
    let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut inner: Vec<usize> = (0..n)
        .map(|a| {
            let p = Perm::from_images((0..n).map(|x| g.conj(a, x) as u16).collect());
            index[&p]
        })
        .collect();
    inner.sort_unstable();
    inner.dedup();
    let elements = perms.into_iter().map(Automorphism::from_perm_unchecked).collect();
    Ok(AutomorphismGroup {
        elements,
        index,
        inner,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{builtin_group, cyclic, direct_power};
    use super::*;

    /// Brute force over all bijections fixing 0.
    fn brute_force_count(g: &FiniteGroup) -> usize {
        fn rec(g: &FiniteGroup, pos: usize, img: &mut Vec<u16>, used: &mut Vec<bool>, count: &mut usize) {
            let n = g.order();
            if pos == n {
                if g.is_automorphism_map(img) {
                    *count += 1;
                }
                return;
            }
            for y in 1..n {
                if !used[y] {
                    used[y] = true;
                    img.push(y as u16);
                    rec(g, pos + 1, img, used, count);
                    img.pop();
                    used[y] = false;
                }
            }
        }
        let mut count = 0;
        let mut used = vec![false; g.order()];
        used[0] = true;
        rec(g, 1, &mut vec![0], &mut used, &mut count);
        count
    }

    #[test]
    fn small_groups_match_brute_force() {
        for name in ["C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "D4", "Q8", "C4xC2", "C2^3"] {
            let g = builtin_group(name).unwrap();
            let aut = automorphism_group(&g, &Bounds::default()).unwrap();
            assert_eq!(aut.order(), brute_force_count(&g), "{name}");
        }
    }

    #[test]
    fn known_orders() {
        let b = Bounds::default();
        let c3 = automorphism_group(&cyclic(3), &b).unwrap();
        assert_eq!(c3.order(), 2);
        let s3 = automorphism_group(&builtin_group("S3").unwrap(), &b).unwrap();
        assert_eq!((s3.order(), s3.inner_order(), s3.out_order()), (6, 6, 1));
        let a5 = automorphism_group(&builtin_group("A5").unwrap(), &b).unwrap();
        assert_eq!((a5.order(), a5.inner_order(), a5.out_order()), (120, 60, 2));
        let a4 = automorphism_group(&builtin_group("A4").unwrap(), &b).unwrap();
        assert_eq!(a4.order(), 24);
        let q8 = automorphism_group(&builtin_group("Q8").unwrap(), &b).unwrap();
        assert_eq!((q8.order(), q8.inner_order()), (24, 4));
    }

    #[test]
    fn group_invariants() {
        let g = builtin_group("D4").unwrap();
        let aut = automorphism_group(&g, &Bounds::default()).unwrap();
        assert!(aut.get(0).perm().is_identity());
        for i in 0..aut.order() {
            assert!(is_automorphism(&g, aut.get(i).perm()));
            assert_eq!(aut.compose(i, aut.inverse(i)), 0);
            for j in 0..aut.order() {
                let _ = aut.compose(i, j);
            }
        }
        assert_eq!(aut.inner_order(), g.order() / g.center().len());
        // φ ∘ conj(a) ∘ φ⁻¹ = conj(φ(a))
        for phi in aut.elements() {
            let inv = phi.perm().inverse();
            for a in 0..g.order() {
                for x in 0..g.order() {
                    assert_eq!(phi.apply(g.conj(a, inv.apply(x))), g.conj(phi.apply(a), x));
                }
            }
        }
    }

    #[test]
    fn wreath_formula_for_a5_powers() {
        let b = Bounds::default();
        let a5 = builtin_group("A5").unwrap();
        let aut_t = count_automorphisms(&a5, &b).unwrap();
        assert_eq!(aut_t, 120);
        let sq = direct_power(&a5, 2, &b).unwrap();
        assert_eq!(count_automorphisms(&sq, &b).unwrap(), aut_t.pow(2) * 2);
    }

    #[test]
    fn orbits_of_v4_and_a5() {
        let b = Bounds::default();
        let v4 = builtin_group("V4").unwrap();
        assert_eq!(automorphism_orbits(&v4, &b).unwrap(), vec![vec![0], vec![1, 2, 3]]);
        let a5 = builtin_group("A5").unwrap();
        let sizes: Vec<usize> = automorphism_orbits(&a5, &b).unwrap().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        // the two classes of 5-cycles fuse under the outer automorphism
        assert_eq!(sorted, vec![1, 15, 20, 24]);
    }

    #[test]
    fn bound_is_enforced() {
        let a5 = builtin_group("A5").unwrap();
        let b = Bounds {
            carrier: 10,
            ..Bounds::default()
        };
        assert!(automorphism_group(&a5, &b).unwrap_err().is_resource_limit());
    }
}
