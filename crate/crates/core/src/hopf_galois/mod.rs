//! Hopf–Galois data of a brace on a Galois group `G`: which subgroups of
//! the circle group lie in the image of the correspondence (exactly the
//! left ideals), minimality, and the λ-orbits that index the fixed algebra.

use rayon::prelude::*;
use serde::Serialize;

use crate::brace::{brace_maps, canonical_ideals, is_left_simple, lambda_orbits, LeftIdeal, SkewBrace};
use crate::error::Result;
use crate::group::{all_subgroups, Bounds, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupRow {
    pub order: usize,
    pub subgroup: Vec<usize>,
    pub is_left_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HgsReport {
    pub brace_id: Option<String>,
    pub degree: usize,
    pub orbit_partition: Vec<Vec<usize>>,
    pub subgroup_rows: Vec<SubgroupRow>,
    pub image_size: usize,
    pub minimal: bool,
    /// Set when the circle group exceeds the lattice bound and only
    /// `1`, `G`, `J₁`, `J₂` are listed.
    pub partial: bool,
}

impl HgsReport {
    pub fn orbit_sizes_sum(&self) -> usize {
        self.orbit_partition.iter().map(Vec::len).sum()
    }
}

fn row(b: &SkewBrace, elements: Vec<usize>) -> SubgroupRow {
    SubgroupRow {
        order: elements.len(),
        is_left_ideal: LeftIdeal::certify(b, elements.clone()).is_ok(),
        subgroup: elements,
    }
}

pub fn correspondence_report(b: &SkewBrace, bounds: &Bounds) -> Result<HgsReport> {
    let n = b.order();
    let partial = n > bounds.lattice;
    let mut subgroup_rows: Vec<SubgroupRow> = if partial {
        let maps = brace_maps(b);
        let ideals = canonical_ideals(b, &maps);
        let mut sets = vec![vec![0], (0..n).collect(), ideals.j1.elements().to_vec(), ideals.j2.elements().to_vec()];
        sets.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
        sets.dedup();
        sets.into_iter().map(|s| row(b, s)).collect()
    } else {
        all_subgroups(b.circle(), bounds)?
            .par_iter()
            .map(|s: &Subgroup| row(b, s.elements().to_vec()))
            .collect()
    };
    subgroup_rows.sort_by(|x, y| (x.order, &x.subgroup).cmp(&(y.order, &y.subgroup)));
    let image_size = subgroup_rows.iter().filter(|r| r.is_left_ideal).count();
    Ok(HgsReport {
        brace_id: b.name().map(str::to_string),
        degree: n,
        orbit_partition: lambda_orbits(b),
        subgroup_rows,
        image_size,
        minimal: is_left_simple(b).left_simple,
        partial,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedAlgebraStats {
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub dimension: usize,
}

/// Orbits of the λ-action of `(G,∘)` on `G`, ordered by least element.
pub fn fixed_algebra_stats(b: &SkewBrace) -> FixedAlgebraStats {
    let orbits = lambda_orbits(b);
    FixedAlgebraStats {
        orbit_count: orbits.len(),
        orbit_sizes: orbits.iter().map(Vec::len).collect(),
        dimension: b.order(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, cyclic};

    #[test]
    fn trivial_brace_on_s3() {
        let b = SkewBrace::trivial(&builtin_group("S3").unwrap()).unwrap();
        let r = correspondence_report(&b, &Bounds::default()).unwrap();
        assert_eq!((r.subgroup_rows.len(), r.image_size), (6, 6));
        assert!(!r.minimal && !r.partial);
    }

    #[test]
    fn almost_trivial_a5_is_minimal() {
        let b = SkewBrace::almost_trivial(&builtin_group("A5").unwrap()).unwrap();
        let r = correspondence_report(&b, &Bounds::default()).unwrap();
        assert_eq!(r.subgroup_rows.len(), 59);
        assert_eq!(r.image_size, 2);
        assert!(r.minimal);
        let mut sizes = fixed_algebra_stats(&b).orbit_sizes;
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn cyclic_prime_and_partial() {
        let b = SkewBrace::trivial(&cyclic(5)).unwrap();
        let r = correspondence_report(&b, &Bounds::default()).unwrap();
        assert_eq!((r.subgroup_rows.len(), r.image_size), (2, 2));
        assert!(r.minimal);
        let s = fixed_algebra_stats(&SkewBrace::trivial(&cyclic(3)).unwrap());
        assert_eq!((s.orbit_count, s.dimension), (3, 3));
        let small = Bounds { lattice: 4, ..Bounds::default() };
        let r = correspondence_report(&b, &small).unwrap();
        assert!(r.partial);
        assert_eq!(r.image_size, 2);
        assert_eq!(r.orbit_sizes_sum(), 5);
    }
}
