use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{ideal::lambda_orbits, left_ideals, SkewBrace};
use crate::group::{Bounds, Extender};
use crate::perm::Perm;

/// Isomorphism invariants of a brace. Equal fingerprints are necessary for
/// an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraceFingerprint {
    pub order: usize,
    /// Sorted `(dot order, circle order, λ-orbit size)` over all elements.
    pub profile: Vec<(u32, u32, u32)>,
    pub im_lambda: usize,
    pub j1: usize,
    pub j2: usize,
    pub left_ideal_count: Option<usize>,
}

fn signatures(b: &SkewBrace) -> Vec<(u32, u32, u32)> {
    let mut sig = vec![(0, 0, 0); b.order()];
    for orbit in lambda_orbits(b) {
        for &x in &orbit {
            sig[x] = (b.dot().element_order(x) as u32, b.circle().element_order(x) as u32, orbit.len() as u32);
        }
    }
    sig
}

impl BraceFingerprint {
    pub fn of(b: &SkewBrace, bounds: &Bounds) -> BraceFingerprint {
        let n = b.order();
        let mut profile = signatures(b);
        profile.sort_unstable();
        let lambda_rows: HashSet<Vec<usize>> = (0..n).map(|a| (0..n).map(|x| b.lambda(a, x)).collect()).collect();
        let dot = b.dot();
        // conj(a) ∈ Im λ
        let j1 = (0..n)
            .filter(|&a| lambda_rows.contains(&(0..n).map(|x| dot.conj(a, x)).collect::<Vec<_>>()))
            .count();
        let j2 = (0..n).filter(|&a| (0..n).all(|x| b.rho(a, x) == x)).count();
        let left_ideal_count = left_ideals(b, bounds).ok().map(|v| v.len());
        BraceFingerprint {
            order: n,
            profile,
            im_lambda: lambda_rows.len(),
            j1,
            j2,
            left_ideal_count,
        }
    }
}

/// A bijection `f` with `f(x·y) = f(x)·f(y)` and `f(x∘y) = f(x)∘f(y)`, as
/// the permutation `x ↦ f(x)`, or `None`.
///
/// Dot generators of `b1` are sent by backtracking to elements of `b2` with
/// the same signature, extended along the Cayley graph, and the result is
/// checked against the circle generators.
pub fn find_isomorphism(b1: &SkewBrace, b2: &SkewBrace) -> Option<Perm> {
    let n = b1.order();
    if n != b2.order() {
        return None;
    }
    let (s1, s2) = (signatures(b1), signatures(b2));
    let mut p1 = s1.clone();
    let mut p2 = s2.clone();
    p1.sort_unstable();
    p2.sort_unstable();
    if p1 != p2 {
        return None;
    }
    let gens = b1.dot().generators().to_vec();
    if gens.is_empty() {
        return Some(Perm::identity(n));
    }
    let candidates: Vec<Vec<usize>> = gens.iter().map(|&g| (1..n).filter(|&y| s2[y] == s1[g]).collect()).collect();
    let search = IsoSearch {
        b1,
        b2,
        gens: &gens,
        candidates: &candidates,
        circle_gens: b1.circle().generators(),
    };
    candidates[0].par_iter().find_map_first(|&y| {
        let mut ext = Extender::new(n);
        let mut images = vec![y];
        search.descend(1, &mut images, &mut ext)
    })
}

struct IsoSearch<'a> {
    b1: &'a SkewBrace,
    b2: &'a SkewBrace,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    circle_gens: &'a [usize],
}

impl IsoSearch<'_> {
    fn descend(&self, level: usize, images: &mut Vec<usize>, ext: &mut Extender) -> Option<Perm> {
        let (d1, d2) = (self.b1.dot(), self.b2.dot());
        if !ext.extend_into(d1, d2, &self.gens[..level], images) {
            return None;
        }
        if level == self.gens.len() {
            let map = ext.map();
            let (c1, c2) = (self.b1.circle(), self.b2.circle());
            let ok = self
                .circle_gens
                .iter()
                .all(|&g| (0..map.len()).all(|x| map[c1.mul(x, g)] as usize == c2.mul(map[x] as usize, map[g] as usize)));
            return ok.then(|| Perm::from_images(map.to_vec()));
        }
        for &y in &self.candidates[level] {
            images.push(y);
            let found = self.descend(level + 1, images, ext);
            images.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

pub fn braces_isomorphic(b1: &SkewBrace, b2: &SkewBrace) -> bool {
    find_isomorphism(b1, b2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, builtin_group};

    fn relabel(b: &SkewBrace, p: &[usize]) -> SkewBrace {
        let n = b.order();
        let mut inv = vec![0; n];
        for (x, &y) in p.iter().enumerate() {
            inv[y] = x;
        }
        let t = |g: &crate::group::FiniteGroup| -> Vec<Vec<usize>> {
            (0..n).map(|a| (0..n).map(|c| p[g.mul(inv[a], inv[c])]).collect()).collect()
        };
        super::super::make_brace(build_group(&t(b.dot()), None).unwrap(), build_group(&t(b.circle()), None).unwrap()).unwrap()
    }

    #[test]
    fn self_and_relabelled() {
        let s3 = builtin_group("S3").unwrap();
        let b = SkewBrace::almost_trivial(&s3).unwrap();
        assert!(braces_isomorphic(&b, &b));
        let p = [0, 3, 5, 1, 2, 4];
        let r = relabel(&b, &p);
        let f = find_isomorphism(&b, &r).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(f.apply(b.dot().mul(x, y)), r.dot().mul(f.apply(x), f.apply(y)));
                assert_eq!(f.apply(b.circle().mul(x, y)), r.circle().mul(f.apply(x), f.apply(y)));
            }
        }
        let bounds = Bounds::default();
        assert_eq!(BraceFingerprint::of(&b, &bounds), BraceFingerprint::of(&r, &bounds));
    }

    #[test]
    fn non_isomorphic() {
        let a5 = builtin_group("A5").unwrap();
        let t = SkewBrace::trivial(&a5).unwrap();
        let at = SkewBrace::almost_trivial(&a5).unwrap();
        assert!(!braces_isomorphic(&t, &at));
        let bounds = Bounds::default();
        assert_ne!(BraceFingerprint::of(&t, &bounds).im_lambda, BraceFingerprint::of(&at, &bounds).im_lambda);
        let c4 = SkewBrace::trivial(&builtin_group("C4").unwrap()).unwrap();
        let v4 = SkewBrace::trivial(&builtin_group("V4").unwrap()).unwrap();
        assert!(!braces_isomorphic(&c4, &v4));
    }
}
