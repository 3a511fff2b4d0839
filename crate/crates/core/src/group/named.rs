use std::collections::{BTreeSet, HashMap};

use super::{direct_power, direct_product, Bounds, FiniteGroup};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Cyclic group of order `n` with ids `k ↦ k (mod n)`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table: Vec<u16> = (0..n * n).map(|i| ((i / n + i % n) % n) as u16).collect();
    FiniteGroup::from_flat(table, n, Some(format!("C{n}"))).expect("cyclic table is a group")
}

/// `C_p^n` in the power coding of [`direct_power`].
pub fn elementary_abelian(p: usize, n: usize, bounds: &Bounds) -> Result<FiniteGroup> {
    let g = direct_power(&cyclic(p), n, bounds)?;
    Ok(if n == 1 { g } else { g.with_name(format!("C{p}^{n}")) })
}

/// Closes the permutation group generated by `gens` (images of `0..degree`)
/// and returns its Cayley table. Elements are numbered in lexicographic
/// order of their image vectors, which puts the identity at id 0. The
/// product is `(a·b)(x) = a(b(x))`.
pub fn group_from_perm_generators(
    degree: usize,
    gens: &[Vec<usize>],
    name: Option<&str>,
    bounds: &Bounds,
) -> Result<FiniteGroup> {
    let gens: Vec<Perm> = gens
        .iter()
        .map(|g| {
            if g.len() != degree {
                return Err(Error::Invalid(format!(
                    "generator {g:?} has length {}, expected degree {degree}",
                    g.len()
                )));
            }
            Perm::try_from_usize(g).ok_or_else(|| Error::Invalid(format!("{g:?} is not a permutation")))
        })
        .collect::<Result<_>>()?;
    let mut elements: BTreeSet<Perm> = BTreeSet::new();
    let id = Perm::identity(degree);
    elements.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in &gens {
            let q = p.compose(g);
            if elements.insert(q.clone()) {
                if elements.len() > bounds.carrier {
                    return Err(Error::size_limit("permutation group", elements.len() as u128, bounds.carrier as u128));
                }
                frontier.push(q);
            }
        }
    }
    let list: Vec<Perm> = elements.into_iter().collect();
    let index: HashMap<&Perm, usize> = list.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = list.len();
    let mut table = vec![0u16; n * n];
    for (a, pa) in list.iter().enumerate() {
        for (b, pb) in list.iter().enumerate() {
            table[a * n + b] = index[&pa.compose(pb)] as u16;
        }
    }
    FiniteGroup::from_flat(table, n, name.map(str::to_owned))
}

fn quaternion() -> FiniteGroup {
    // Ids 0..8 are 1, i, j, k, -1, -i, -j, -k.
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut table = vec![0u16; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (neg, u) = UNIT[a % 4][b % 4];
            let sign = (a >= 4) ^ (b >= 4) ^ neg;
            table[a * 8 + b] = (u + if sign { 4 } else { 0 }) as u16;
        }
    }
    FiniteGroup::from_flat(table, 8, Some("Q8".into())).expect("Q8 table is a group")
}

const BUILTINS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "V4", "S3", "A4", "A5", "D4", "Q8", "C4xC2", "C2^3", "C3^2",
];

/// Names accepted by [`builtin_group`].
pub fn builtin_names() -> &'static [&'static str] {
    BUILTINS
}

/// Looks up a built-in group by name.
pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let bounds = Bounds::default();
    let g = match name {
        "V4" => elementary_abelian(2, 2, &bounds)?,
        "C2^3" => elementary_abelian(2, 3, &bounds)?,
        "C3^2" => elementary_abelian(3, 2, &bounds)?,
        "C4xC2" => direct_product(&cyclic(4), &cyclic(2))?,
        "S3" => group_from_perm_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]], None, &bounds)?,
        "A4" => group_from_perm_generators(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], None, &bounds)?,
        "A5" => group_from_perm_generators(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]], None, &bounds)?,
        "D4" => group_from_perm_generators(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]], None, &bounds)?,
        "Q8" => quaternion(),
        _ => match name.strip_prefix('C').and_then(|k| k.parse::<usize>().ok()) {
            Some(k) if (1..=8).contains(&k) => cyclic(k),
            _ => return Err(Error::Invalid(format!("unknown built-in group {name:?}"))),
        },
    };
    Ok(g.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders() {
        let expected = [
            ("C1", 1),
            ("C2", 2),
            ("C8", 8),
            ("V4", 4),
            ("S3", 6),
            ("A4", 12),
            ("A5", 60),
            ("D4", 8),
            ("Q8", 8),
            ("C4xC2", 8),
            ("C2^3", 8),
            ("C3^2", 9),
        ];
        for (name, order) in expected {
            let g = builtin_group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.name(), Some(name));
        }
        assert!(builtin_group("C9").is_err());
        assert!(builtin_group("nope").is_err());
    }

    #[test]
    fn every_builtin_passes_validation() {
        for name in builtin_names() {
            let g = builtin_group(name).unwrap();
            let rebuilt = super::super::build_group(&g.table_rows(), Some(name)).unwrap();
            assert_eq!(rebuilt, g);
        }
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion();
        assert_eq!((1..8).filter(|&x| q.element_order(x) == 2).count(), 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn a5_element_order_profile() {
        let a5 = builtin_group("A5").unwrap();
        let mut counts = [0usize; 6];
        for x in 0..60 {
            counts[a5.element_order(x)] += 1;
        }
        assert_eq!(counts, [0, 1, 15, 20, 0, 24]);
    }

    #[test]
    fn bad_generators_rejected() {
        let b = Bounds::default();
        assert!(group_from_perm_generators(3, &[vec![0, 0, 1]], None, &b).is_err());
        assert!(group_from_perm_generators(3, &[vec![0, 1]], None, &b).is_err());
    }
}
