//! Finite groups given by Cayley tables on the element ids `0..order`.
//!
//! Id `0` is always the identity. Tables are stored row-major as `u16`, so
//! the carrier is capped at 65535 elements; the configurable [`Bounds`] keep
//! the working sizes far below that.

mod automorphism;
mod named;
mod profile;
mod subgroup;

pub(crate) use automorphism::Extender;
pub use automorphism::{
    automorphism_group, automorphism_orbits, count_automorphisms, is_automorphism, Automorphism,
    AutomorphismGroup,
};
pub use named::{builtin_group, builtin_names, cyclic, elementary_abelian, group_from_perm_generators};
pub use profile::{group_profile, GroupProfile, SimpleFactorHint};
pub use subgroup::{all_subgroups, subgroup_closure, Subgroup};

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Size bounds for the searches in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest Cayley table accepted by constructions and automorphism searches.
    pub carrier: usize,
    /// Largest group whose full subgroup lattice is enumerated.
    pub lattice: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            carrier: 3600,
            lattice: 200,
        }
    }
}

/// Orders up to this size get a full associativity scan; larger tables
/// are checked with Light's test over a generating set.
pub const FULL_SCAN_LIMIT: usize = 512;

/// A validated finite group.
#[derive(Clone)]
pub struct FiniteGroup {
    name: Option<String>,
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    elem_order: Vec<u32>,
    generators: OnceLock<Vec<usize>>,
    class_sizes: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

/// Validates `table` and returns the group it defines.
pub fn build_group(table: &[Vec<usize>], name: Option<&str>) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::not_a_group("empty table"));
    }
    if n > u16::MAX as usize {
        return Err(Error::size_limit("table", n as u128, u16::MAX as u128));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::not_a_group(format!(
                "row {i} has length {}, expected {n}",
                row.len()
            )));
        }
        for (j, &x) in row.iter().enumerate() {
            if x >= n {
                return Err(Error::not_a_group(format!("entry ({i},{j}) = {x} out of range")));
            }
            flat.push(x as u16);
        }
    }
    FiniteGroup::from_flat(flat, n, name.map(str::to_owned))
}

impl FiniteGroup {
    /// Builds from a row-major table with entries already known to be in range.
    pub(crate) fn from_flat(table: Vec<u16>, n: usize, name: Option<String>) -> Result<FiniteGroup> {
        debug_assert_eq!(table.len(), n * n);
        check_identity_and_latin(&table, n)?;
        let inverse = two_sided_inverses(&table, n)?;
        let mut g = FiniteGroup {
            name,
            order: n,
            table,
            inverse,
            elem_order: Vec::new(),
            generators: OnceLock::new(),
            class_sizes: OnceLock::new(),
        };
        if n <= FULL_SCAN_LIMIT {
            if let Some((a, b, c)) = g.first_nonassociative_triple() {
                return Err(Error::not_a_group(format!("associativity fails at ({a},{b},{c})")));
            }
        } else {
            // Right-multiplication closure works in any loop, so the
            // generating set is valid before associativity is known.
            let gens = g.greedy_generators();
            if let Some((a, b, c)) = g.light_test(&gens) {
                return Err(Error::not_a_group(format!("associativity fails at ({a},{b},{c})")));
            }
            let _ = g.generators.set(gens);
        }
        g.elem_order = (0..n).map(|a| g.compute_order(a)).collect();
        Ok(g)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn row(&self, a: usize) -> &[u16] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// Order of the element `a`.
    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.elem_order[a] as usize
    }

    /// `a·x·a⁻¹`.
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(a, x), self.inv(a))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.row(a).iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// The opposite group, `a ∗ b = b·a`.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut t = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                t[a * n + b] = self.table[b * n + a];
            }
        }
        FiniteGroup {
            name: self.name.as_ref().map(|s| format!("{s}^op")),
            order: n,
            table: t,
            inverse: self.inverse.clone(),
            elem_order: self.elem_order.clone(),
            generators: OnceLock::new(),
            class_sizes: OnceLock::new(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        let gens = self.generators();
        (0..self.order)
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Sizes of conjugacy classes, indexed by element.
    pub fn class_sizes(&self) -> &[u32] {
        self.class_sizes.get_or_init(|| {
            let n = self.order;
            (0..n)
                .into_par_iter()
                .map(|x| {
                    let centralizer = (0..n).filter(|&y| self.mul(x, y) == self.mul(y, x)).count();
                    (n / centralizer) as u32
                })
                .collect()
        })
    }

    /// Conjugacy class of `x`, sorted.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        for a in 0..self.order {
            seen[self.conj(a, x)] = true;
        }
        (0..self.order).filter(|&y| seen[y]).collect()
    }

    /// A small generating set, chosen greedily: each step adds the element
    /// whose closure with the current set is largest (ties go to the
    /// smallest id).
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| self.greedy_generators())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let n = self.order;
        let mut gens = Vec::new();
        let mut current = vec![0usize];
        while current.len() < n {
            let mut in_current = vec![false; n];
            for &x in &current {
                in_current[x] = true;
            }
            let candidates: Vec<usize> = (1..n).filter(|&x| !in_current[x]).collect();
            let best = candidates
                .par_iter()
                .map(|&x| {
                    let mut trial = gens.clone();
                    trial.push(x);
                    (self.right_closure(&trial).len(), x)
                })
                .reduce(|| (0, usize::MAX), |p, q| {
                    if p.0 > q.0 || (p.0 == q.0 && p.1 < q.1) {
                        p
                    } else {
                        q
                    }
                });
            gens.push(best.1);
            current = self.right_closure(&gens);
        }
        gens
    }

    /// `{0}` closed under right multiplication by `gens`; the generated
    /// subgroup once associativity holds.
    pub(crate) fn right_closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    fn first_nonassociative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        (0..n).into_par_iter().find_map_first(|a| {
            let ra = self.row(a);
            for b in 0..n {
                let ab = ra[b] as usize;
                let rab = self.row(ab);
                let rb = self.row(b);
                for c in 0..n {
                    if rab[c] != ra[rb[c] as usize] {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Light's test: `(x·g)·y = x·(g·y)` for all `x, y` and each `g` in a
    /// set that generates the loop under multiplication.
    fn light_test(&self, gens: &[usize]) -> Option<(usize, usize, usize)> {
        let n = self.order;
        gens.iter().find_map(|&g| {
            (0..n).into_par_iter().find_map_first(|x| {
                let xg = self.mul(x, g);
                let rxg = self.row(xg);
                let rx = self.row(x);
                let rg = self.row(g);
                (0..n)
                    .find(|&y| rxg[y] != rx[rg[y] as usize])
                    .map(|y| (x, g, y))
            })
        })
    }

    fn compute_order(&self, a: usize) -> u32 {
        let mut k = 1u32;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Whether `x ↦ perm[x]` is an automorphism. Checked on all pairs for
    /// small groups and against a generating set above the full-scan limit.
    pub fn is_automorphism_map(&self, perm: &[u16]) -> bool {
        let n = self.order;
        if perm.len() != n || perm[0] != 0 {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in perm {
            if seen[x as usize] {
                return false;
            }
            seen[x as usize] = true;
        }
        let check = |x: usize, y: usize| perm[self.mul(x, y)] as usize == self.mul(perm[x] as usize, perm[y] as usize);
        if n <= FULL_SCAN_LIMIT {
            (0..n).all(|x| (0..n).all(|y| check(x, y)))
        } else {
            let gens = self.generators();
            (0..n).into_par_iter().all(|x| gens.iter().all(|&g| check(x, g)))
        }
    }
}

fn check_identity_and_latin(table: &[u16], n: usize) -> Result<()> {
    for b in 0..n {
        if table[b] as usize != b {
            return Err(Error::not_a_group(format!("0 is not a left identity: 0·{b} ≠ {b}")));
        }
        if table[b * n] as usize != b {
            return Err(Error::not_a_group(format!("0 is not a right identity: {b}·0 ≠ {b}")));
        }
    }
    let mut seen = vec![0u32; n];
    let mut stamp = 0u32;
    for a in 0..n {
        stamp += 1;
        for b in 0..n {
            let x = table[a * n + b] as usize;
            if seen[x] == stamp {
                return Err(Error::not_a_group(format!("row {a} is not a permutation")));
            }
            seen[x] = stamp;
        }
    }
    for b in 0..n {
        stamp += 1;
        for a in 0..n {
            let x = table[a * n + b] as usize;
            if seen[x] == stamp {
                return Err(Error::not_a_group(format!("column {b} is not a permutation")));
            }
            seen[x] = stamp;
        }
    }
    Ok(())
}

fn two_sided_inverses(table: &[u16], n: usize) -> Result<Vec<u16>> {
    let mut inv = vec![0u16; n];
    for a in 0..n {
        let b = (0..n)
            .find(|&b| table[a * n + b] == 0)
            .expect("latin rows contain the identity");
        if table[b * n + a] != 0 {
            return Err(Error::not_a_group(format!("{a} has no two-sided inverse")));
        }
        inv[a] = b as u16;
    }
    Ok(inv)
}

/// `T^n` with element ids in mixed radix: `(t₁,…,tₙ) ↦ t₁ + |T|·t₂ + …`,
/// so the first factor occupies ids `0..|T|`.
pub fn direct_power(t: &FiniteGroup, n: usize, bounds: &Bounds) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Invalid("direct power exponent must be at least 1".into()));
    }
    let m = t.order();
    let size = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > bounds.carrier as u128 {
        return Err(Error::size_limit(format!("{}^{n}", t.name().unwrap_or("T")), size, bounds.carrier as u128));
    }
    if n == 1 {
        return Ok(t.clone());
    }
    let total = size as usize;
    let digits = |mut x: usize| {
        let mut d = vec![0usize; n];
        for slot in d.iter_mut() {
            *slot = x % m;
            x /= m;
        }
        d
    };
    let all: Vec<Vec<usize>> = (0..total).map(digits).collect();
    let mut table = vec![0u16; total * total];
    table.par_chunks_mut(total).enumerate().for_each(|(a, row)| {
        let da = &all[a];
        for (b, slot) in row.iter_mut().enumerate() {
            let db = &all[b];
            let mut id = 0usize;
            for i in (0..n).rev() {
                id = id * m + t.mul(da[i], db[i]);
            }
            *slot = id as u16;
        }
    });
    let name = format!("{}^{n}", t.name().unwrap_or("T"));
    FiniteGroup::from_flat(table, total, Some(name))
}

/// `G × H` with ids `g + |G|·h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (a, b) = (g.order(), h.order());
    let n = a * b;
    if n > u16::MAX as usize {
        return Err(Error::size_limit("direct product", n as u128, u16::MAX as u128));
    }
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            let (x0, x1) = (x % a, x / a);
            let (y0, y1) = (y % a, y / a);
            table[x * n + y] = (g.mul(x0, y0) + a * h.mul(x1, y1)) as u16;
        }
    }
    let name = format!("{}x{}", g.name().unwrap_or("G"), h.name().unwrap_or("H"));
    FiniteGroup::from_flat(table, n, Some(name))
}
