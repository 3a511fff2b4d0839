//! Braces with a prescribed additive group, as regular subgroups of the
//! holomorph.
//!
//! A regular subgroup `N ≤ Hol(G)` holds exactly one element
//! `n_a = (a, f(a))` with `n_a(0) = a` for each `a`, and the brace is
//! `a∘b = n_a(b) = a·f(a)(b)`.

mod brute;

pub use brute::brute_force_braces;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::brace::{find_isomorphism, make_brace, BraceFingerprint, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{automorphism_group, build_group, AutomorphismGroup, Bounds, FiniteGroup};
use crate::perm::Perm;

/// Largest `|Aut(G)|` for which the composition table is materialized.
pub const HOLOMORPH_AUT_LIMIT: usize = 5040;

const NONE: u32 = u32::MAX;

/// `G ⋊ Aut(G)` acting on the carrier by `(g,φ)(x) = g·φ(x)`, with
/// `(g,φ)(h,ψ) = (g·φ(h), φ∘ψ)`.
#[derive(Clone, Debug)]
pub struct Holomorph {
    base: FiniteGroup,
    aut: AutomorphismGroup,
    // act[φ·n + x] = φ(x)
    act: Vec<u16>,
    // comp[φ·|Aut| + ψ] = φ∘ψ
    comp: Vec<u32>,
}

pub fn holomorph(g: &FiniteGroup, bounds: &Bounds) -> Result<Holomorph> {
    let aut = automorphism_group(g, bounds)?;
    let m = aut.order();
    if m > HOLOMORPH_AUT_LIMIT {
        return Err(Error::size_limit("holomorph automorphism table", m as u128, HOLOMORPH_AUT_LIMIT as u128));
    }
    let n = g.order();
    let act: Vec<u16> = aut.elements().iter().flat_map(|a| a.perm().images().to_vec()).collect();
    let comp: Vec<u32> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let aut = &aut;
            (0..m).map(move |j| aut.compose(i, j) as u32)
        })
        .collect();
    debug_assert_eq!(act.len(), n * m);
    Ok(Holomorph {
        base: g.clone(),
        aut,
        act,
        comp,
    })
}

impl Holomorph {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn automorphisms(&self) -> &AutomorphismGroup {
        &self.aut
    }

    /// `|G|·|Aut(G)|`.
    pub fn order(&self) -> usize {
        self.base.order() * self.aut.order()
    }

    #[inline]
    fn apply_aut(&self, phi: usize, x: usize) -> usize {
        self.act[phi * self.base.order() + x] as usize
    }

    #[inline]
    fn compose_aut(&self, phi: usize, psi: usize) -> usize {
        self.comp[phi * self.aut.order() + psi] as usize
    }

    /// `(g,φ)(h,ψ)`.
    pub fn mul(&self, (g, phi): (usize, usize), (h, psi): (usize, usize)) -> (usize, usize) {
        (self.base.mul(g, self.apply_aut(phi, h)), self.compose_aut(phi, psi))
    }

    /// The permutation `x ↦ g·φ(x)`.
    pub fn action(&self, (g, phi): (usize, usize)) -> Perm {
        let n = self.base.order();
        Perm::from_images((0..n).map(|x| self.base.mul(g, self.apply_aut(phi, x)) as u16).collect())
    }
}

/// A regular subgroup `{(a, f(a))}` of the holomorph, stored as the
/// automorphism index `f(a)` for each `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularSubgroup {
    gamma: Vec<u16>,
}

impl RegularSubgroup {
    pub fn order(&self) -> usize {
        self.gamma.len()
    }

    /// Index into the holomorph's automorphism list of `f(a)`.
    pub fn gamma(&self, a: usize) -> usize {
        self.gamma[a] as usize
    }

    pub fn elements(&self) -> Vec<(usize, usize)> {
        self.gamma.iter().enumerate().map(|(a, &f)| (a, f as usize)).collect()
    }

    /// Closed under the holomorph product and regular on the carrier.
    pub fn is_regular_in(&self, hol: &Holomorph) -> bool {
        let n = hol.base.order();
        if self.gamma.len() != n || self.gamma[0] != 0 {
            return false;
        }
        let closed = (0..n).all(|a| {
            (0..n).all(|b| {
                let (c, f) = hol.mul((a, self.gamma(a)), (b, self.gamma(b)));
                self.gamma(c) == f
            })
        });
        if !closed {
            return false;
        }
        // only the identity fixes a point
        (1..n).all(|a| {
            let p = hol.action((a, self.gamma(a)));
            (0..n).all(|x| p.apply(x) != x)
        })
    }
}

/// Limits on the regular-subgroup search. Exceeding either yields
/// [`Error::Timeout`]; a partial result is never returned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub wall: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: Some(200_000_000),
            wall: None,
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: None,
            wall: None,
        }
    }

    fn describe(&self) -> String {
        match (self.max_nodes, self.wall) {
            (Some(n), Some(w)) => format!("{n} nodes or {} ms", w.as_millis()),
            (Some(n), None) => format!("{n} nodes"),
            (None, Some(w)) => format!("{} ms", w.as_millis()),
            (None, None) => "unlimited".into(),
        }
    }
}

struct Meter {
    nodes: AtomicU64,
    stop: AtomicBool,
    start: Instant,
    budget: SearchBudget,
}

impl Meter {
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let k = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.budget.max_nodes.is_some_and(|m| k > m);
        let over_wall = k % 1024 == 0 && self.budget.wall.is_some_and(|w| self.start.elapsed() > w);
        if over_nodes || over_wall {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

/// Partial subgroup: `f` on the first coordinates reached so far.
#[derive(Clone)]
struct Partial {
    f: Vec<u32>,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl Partial {
    fn new(n: usize) -> Self {
        let mut f = vec![NONE; n];
        f[0] = 0;
        Partial {
            f,
            members: vec![0],
            gens: Vec::new(),
        }
    }

    /// Adds the generator `(x, φ)` and closes. Fails when two elements
    /// share a first coordinate, i.e. some non-identity element fixes 0.
    fn add(&mut self, hol: &Holomorph, x: usize, phi: usize) -> bool {
        self.f[x] = phi as u32;
        let old = self.members.len();
        self.members.push(x);
        self.gens.push(x);
        let mut i = 0;
        while i < self.members.len() {
            let e = self.members[i];
            let fe = self.f[e] as usize;
            let acting: &[usize] = if i < old { &self.gens[self.gens.len() - 1..] } else { &self.gens };
            for &s in acting {
                let (y, fy) = hol.mul((e, fe), (s, self.f[s] as usize));
                match self.f[y] {
                    NONE => {
                        self.f[y] = fy as u32;
                        self.members.push(y);
                    }
                    cur if cur as usize != fy => return false,
                    _ => {}
                }
            }
            i += 1;
        }
        hol.base.order() % self.members.len() == 0
    }

    fn next_point(&self) -> Option<usize> {
        self.f.iter().position(|&v| v == NONE)
    }
}

fn descend(hol: &Holomorph, p: Partial, meter: &Meter, out: &mut Vec<RegularSubgroup>) {
    let Some(x) = p.next_point() else {
        out.push(RegularSubgroup {
            gamma: p.f.iter().map(|&v| v as u16).collect(),
        });
        return;
    };
    for phi in 0..hol.aut.order() {
        if !meter.tick() {
            return;
        }
        let mut q = p.clone();
        if q.add(hol, x, phi) {
            descend(hol, q, meter, out);
        }
    }
}

/// Every regular subgroup of `Hol(G)`, each once, sorted by `f`.
///
/// The least point `x` not yet reached from 0 is sent to every `(x, φ)`;
/// `N` determines `φ`, so each subgroup is found along exactly one path.
pub fn regular_subgroups(hol: &Holomorph, budget: &SearchBudget) -> Result<Vec<RegularSubgroup>> {
    let n = hol.base.order();
    let meter = Meter {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        start: Instant::now(),
        budget: *budget,
    };
    let root = Partial::new(n);
    let mut found: Vec<RegularSubgroup> = match root.next_point() {
        None => vec![RegularSubgroup { gamma: vec![0] }],
        Some(x) => (0..hol.aut.order())
            .into_par_iter()
            .map(|phi| {
                let mut out = Vec::new();
                let mut q = root.clone();
                if meter.tick() && q.add(hol, x, phi) {
                    descend(hol, q, &meter, &mut out);
                }
                out
            })
            .flatten()
            .collect(),
    };
    if meter.stop.load(Ordering::Relaxed) {
        return Err(Error::Timeout {
            budget: budget.describe(),
        });
    }
    found.sort();
    Ok(found)
}

/// `a∘b = n_a(b) = a·f(a)(b)`.
pub fn brace_from_regular(hol: &Holomorph, r: &RegularSubgroup) -> Result<SkewBrace> {
    let g = &hol.base;
    let n = g.order();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| g.mul(a, hol.apply_aut(r.gamma(a), b))).collect())
        .collect();
    let circle = build_group(&table, None)?;
    make_brace(g.clone(), circle)
}

/// Options for [`enumerate_braces`].
#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    pub up_to_iso: bool,
    pub bounds: Bounds,
    pub budget: SearchBudget,
}

/// One brace per regular subgroup, in the order of [`regular_subgroups`];
/// with `up_to_iso`, the first brace of each isomorphism class is kept.
pub fn enumerate_braces(g: &FiniteGroup, opts: &EnumerateOptions) -> Result<Vec<SkewBrace>> {
    let hol = holomorph(g, &opts.bounds)?;
    let regs = regular_subgroups(&hol, &opts.budget)?;
    let base = g.name().unwrap_or("G").to_string();
    let braces: Vec<SkewBrace> = regs
        .par_iter()
        .enumerate()
        .map(|(i, r)| brace_from_regular(&hol, r).map(|b| b.with_name(format!("{base}#{i}"))))
        .collect::<Result<_>>()?;
    if !opts.up_to_iso {
        return Ok(braces);
    }
    dedupe_up_to_iso(braces, &opts.bounds)
}

/// Keeps the first brace of each isomorphism class, preserving order.
pub fn dedupe_up_to_iso(braces: Vec<SkewBrace>, bounds: &Bounds) -> Result<Vec<SkewBrace>> {
    let prints: Vec<BraceFingerprint> = braces.par_iter().map(|b| BraceFingerprint::of(b, bounds)).collect();
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..braces.len() {
        let dup = kept
            .iter()
            .any(|&j| prints[j] == prints[i] && find_isomorphism(&braces[j], &braces[i]).is_some());
        if !dup {
            kept.push(i);
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for (i, b) in braces.into_iter().enumerate() {
        if kept.binary_search(&i).is_ok() {
            out.push(b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::BraceClass;
    use crate::group::builtin_group;

    fn g(name: &str) -> FiniteGroup {
        builtin_group(name).unwrap()
    }

    fn enumerate(name: &str, up_to_iso: bool) -> Vec<SkewBrace> {
        let opts = EnumerateOptions {
            up_to_iso,
            ..Default::default()
        };
        enumerate_braces(&g(name), &opts).unwrap()
    }

    #[test]
    fn holomorph_orders() {
        let b = Bounds::default();
        assert_eq!(holomorph(&g("C3"), &b).unwrap().order(), 6);
        assert_eq!(holomorph(&g("V4"), &b).unwrap().order(), 24);
        assert_eq!(holomorph(&g("A5"), &b).unwrap().order(), 7200);
    }

    #[test]
    fn holomorph_action_is_faithful_homomorphism() {
        let hol = holomorph(&g("S3"), &Bounds::default()).unwrap();
        let n = 6;
        let m = hol.automorphisms().order();
        let mut seen = std::collections::HashSet::new();
        for x in 0..n {
            for phi in 0..m {
                assert!(seen.insert(hol.action((x, phi))));
                for (y, psi) in [(1, 0), (2, m - 1), (5, 1 % m)] {
                    let lhs = hol.action(hol.mul((x, phi), (y, psi)));
                    let rhs = hol.action((x, phi)).compose(&hol.action((y, psi)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn regular_subgroup_counts() {
        let b = Bounds::default();
        for (name, count) in [("C2", 1), ("V4", 4), ("C4", 2), ("C3", 1)] {
            let hol = holomorph(&g(name), &b).unwrap();
            let regs = regular_subgroups(&hol, &SearchBudget::default()).unwrap();
            assert_eq!(regs.len(), count, "{name}");
            assert!(regs.iter().all(|r| r.is_regular_in(&hol)));
        }
    }

    #[test]
    fn v4_has_three_cyclic_circles() {
        let braces = enumerate("V4", false);
        let cyclic = braces.iter().filter(|b| (0..4).any(|x| b.circle().element_order(x) == 4)).count();
        assert_eq!(cyclic, 3);
        let c4 = braces.iter().find(|b| (0..4).any(|x| b.circle().element_order(x) == 4)).unwrap();
        assert_eq!(c4.brace_class(), BraceClass::Neither);
        let maps = crate::brace::brace_maps(c4);
        let im = crate::brace::image_subgroups(c4, &maps);
        assert_eq!((im.im_lambda.len(), im.inn.len(), im.gamma.len()), (2, 1, 2));
    }

    #[test]
    fn classes_up_to_iso() {
        assert_eq!(enumerate("C2", true).len(), 1);
        assert_eq!(enumerate("V4", true).len(), 2);
        let c5 = enumerate("C5", true);
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].brace_class(), BraceClass::Trivial);
    }

    #[test]
    fn class_totals_by_order() {
        // known totals: 6 skew braces of order 6, 47 of order 8
        let six: usize = ["C6", "S3"].iter().map(|n| enumerate(n, true).len()).sum();
        assert_eq!(six, 6);
        let eight: usize = ["C8", "C4xC2", "C2^3", "D4", "Q8"].iter().map(|n| enumerate(n, true).len()).sum();
        assert_eq!(eight, 47);
    }

    #[test]
    fn translation_copies_present() {
        for name in ["S3", "D4", "Q8", "A4"] {
            let braces = enumerate(name, false);
            let classes: Vec<BraceClass> = braces.iter().map(|b| b.brace_class()).collect();
            assert!(classes.contains(&BraceClass::Trivial), "{name}");
            assert!(classes.contains(&BraceClass::AlmostTrivial), "{name}");
        }
    }

    #[test]
    fn a5_regular_subgroups() {
        let hol = holomorph(&g("A5"), &Bounds::default()).unwrap();
        let regs = regular_subgroups(&hol, &SearchBudget::default()).unwrap();
        let braces: Vec<SkewBrace> = regs.iter().map(|r| brace_from_regular(&hol, r).unwrap()).collect();
        let classes: Vec<BraceClass> = braces.iter().map(|b| b.brace_class()).collect();
        assert!(classes.contains(&BraceClass::Trivial));
        assert!(classes.contains(&BraceClass::AlmostTrivial));
    }

    #[test]
    fn node_budget_times_out() {
        let hol = holomorph(&g("A4"), &Bounds::default()).unwrap();
        let budget = SearchBudget {
            max_nodes: Some(10),
            wall: None,
        };
        let err = regular_subgroups(&hol, &budget).unwrap_err();
        assert!(matches!(err, Error::Timeout { .. }));
    }
}
