use std::collections::HashSet;

use super::{Bounds, FiniteGroup};
use crate::error::{Error, Result};

/// A subgroup of some [`FiniteGroup`], as a sorted set of element ids.
///
/// The parent is not stored; operations take it explicitly.
/// Equality, hashing, and ordering look at the element set only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Option<Vec<usize>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.elements).cmp(&(other.order(), &other.elements))
    }
}

impl Subgroup {
    /// The whole group.
    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup {
            elements: (0..g.order()).collect(),
            generators: Some(g.generators().to_vec()),
        }
    }

    pub fn trivial() -> Subgroup {
        Subgroup {
            elements: vec![0],
            generators: Some(Vec::new()),
        }
    }

    /// Wraps `elements` after checking the subgroup axioms against `g`.
    pub fn from_elements(g: &FiniteGroup, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        let s = Subgroup {
            elements,
            generators: None,
        };
        if !s.is_subgroup_of(g) {
            return Err(Error::Invalid(format!("{:?} is not a subgroup", s.elements)));
        }
        Ok(s)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
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

    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    /// Contains 0, closed under products and inverses, and (when present)
    /// generated by its generators.
    pub fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        if self.elements.first() != Some(&0) || self.elements.iter().any(|&x| x >= g.order()) {
            return false;
        }
        let m = self.membership(g.order());
        let closed = self
            .elements
            .iter()
            .all(|&a| m[g.inv(a)] && self.elements.iter().all(|&b| m[g.mul(a, b)]));
        if !closed {
            return false;
        }
        match &self.generators {
            Some(gens) => {
                let mut c = g.right_closure(gens);
                c.sort_unstable();
                c == self.elements
            }
            None => true,
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup {
            elements,
            generators: None,
        }
    }

    /// Whether `a H a⁻¹ = H` for every `a` in `g`.
    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        let m = self.membership(g.order());
        g.generators()
            .iter()
            .all(|&a| self.elements.iter().all(|&h| m[g.conj(a, h)]))
    }
}

/// The subgroup generated by `set`.
pub fn subgroup_closure(g: &FiniteGroup, set: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut elements = g.right_closure(&gens);
    elements.sort_unstable();
    Subgroup {
        elements,
        generators: Some(gens),
    }
}

/// Closure of `⟨base, x⟩` where `base` is a subgroup given by its member
/// list, membership mask, and generators.
fn extend_closure(g: &FiniteGroup, base: &[usize], mask: &[bool], base_gens: &[usize], x: usize) -> Vec<usize> {
    let mut seen = mask.to_vec();
    let mut out = base.to_vec();
    let old = out.len();
    let mut i = 0;
    while i < out.len() {
        let e = out[i];
        // base is already closed under its own generators
        let y = g.mul(e, x);
        if !seen[y] {
            seen[y] = true;
            out.push(y);
        }
        if i >= old {
            for &s in base_gens {
                let y = g.mul(e, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Every subgroup of `g`, sorted by `(order, elements)`.
///
/// Breadth-first over `⟨H, x⟩` for known subgroups `H`, deduplicated on the
/// element set.
pub fn all_subgroups(g: &FiniteGroup, bounds: &Bounds) -> Result<Vec<Subgroup>> {
    let n = g.order();
    if n > bounds.lattice {
        return Err(Error::size_limit("subgroup lattice", n as u128, bounds.lattice as u128));
    }
    let mut known: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], Vec::new())];
    known.insert(vec![0]);
    let mut head = 0;
    while head < queue.len() {
        let (base, gens) = queue[head].clone();
        head += 1;
        let mut mask = vec![false; n];
        for &x in &base {
            mask[x] = true;
        }
        for x in 0..n {
            if mask[x] {
                continue;
            }
            let ext = extend_closure(g, &base, &mask, &gens, x);
            if known.insert(ext.clone()) {
                let mut ext_gens = gens.clone();
                ext_gens.push(x);
                queue.push((ext, ext_gens));
            }
        }
    }
    let mut out: Vec<Subgroup> = queue
        .into_iter()
        .map(|(elements, gens)| Subgroup {
            elements,
            generators: Some(gens),
        })
        .collect();
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::builtin_group;
    use super::*;

    fn counts(name: &str) -> usize {
        all_subgroups(&builtin_group(name).unwrap(), &Bounds::default()).unwrap().len()
    }

    #[test]
    fn closure_examples() {
        let c4 = builtin_group("C4").unwrap();
        assert_eq!(subgroup_closure(&c4, &[]).elements(), &[0]);
        assert_eq!(subgroup_closure(&c4, &[1]).order(), 4);
        let s3 = builtin_group("S3").unwrap();
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = subgroup_closure(&s3, &[t]);
        assert_eq!(h.elements(), &[0, t]);
        assert!(h.is_subgroup_of(&s3));
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(counts("C4"), 3);
        assert_eq!(counts("V4"), 5);
        assert_eq!(counts("S3"), 6);
        assert_eq!(counts("Q8"), 6);
        assert_eq!(counts("D4"), 10);
        assert_eq!(counts("A4"), 10);
        assert_eq!(counts("A5"), 59);
    }

    #[test]
    fn a5_lattice_matches_conjugacy_tally() {
        // Conjugacy classes of subgroups of A5: 1, C2 (15), C3 (10), V4 (5),
        // C5 (6), S3 (10), D10 (6), A4 (5), A5.
        let a5 = builtin_group("A5").unwrap();
        let subs = all_subgroups(&a5, &Bounds::default()).unwrap();
        let mut by_order = std::collections::BTreeMap::new();
        for s in &subs {
            *by_order.entry(s.order()).or_insert(0) += 1;
        }
        let expected: std::collections::BTreeMap<usize, usize> =
            [(1, 1), (2, 15), (3, 10), (4, 5), (5, 6), (6, 10), (10, 6), (12, 5), (60, 1)].into();
        assert_eq!(by_order, expected);
    }

    #[test]
    fn lattice_invariants() {
        let g = builtin_group("D4").unwrap();
        let subs = all_subgroups(&g, &Bounds::default()).unwrap();
        assert_eq!(subs.first().unwrap().elements(), &[0]);
        assert_eq!(subs.last().unwrap().order(), 8);
        let set: HashSet<&Subgroup> = subs.iter().collect();
        for a in &subs {
            assert!(a.is_subgroup_of(&g));
            for b in &subs {
                assert!(set.contains(&a.intersection(b)));
            }
        }
    }

    #[test]
    fn lattice_bound() {
        let a5 = builtin_group("A5").unwrap();
        let b = Bounds {
            lattice: 30,
            ..Bounds::default()
        };
        assert!(all_subgroups(&a5, &b).unwrap_err().is_resource_limit());
    }
}
