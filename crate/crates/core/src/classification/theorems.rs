//! Desk-scale checks of the left-simplicity classification: elementary
//! abelian additive groups, simple additive groups, and powers `Tⁿ`.

use rayon::prelude::*;
use serde::Serialize;

use crate::brace::{
    brace_maps, braces_isomorphic, image_subgroups, is_left_simple, BraceClass, LeftIdeal, LeftSimplicity, SkewBrace,
};
use crate::enumeration::{dedupe_up_to_iso, enumerate_braces, EnumerateOptions};
use crate::error::{Error, Result};
use crate::group::{direct_power, elementary_abelian, group_profile, Bounds, FiniteGroup};
use crate::perm::Perm;

/// Largest `pⁿ` accepted by [`verify_thm1`] unless raised.
pub const THM1_DEFAULT_LIMIT: u64 = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub name: Option<String>,
    pub class: BraceClass,
    pub left_simple: bool,
    pub im_lambda_order: usize,
    pub witness_order: Option<usize>,
}

fn summarize(b: &SkewBrace, ls: &LeftSimplicity) -> ClassSummary {
    let maps = brace_maps(b);
    let mut im: Vec<&Perm> = maps.lambda.iter().collect();
    im.sort();
    im.dedup();
    ClassSummary {
        name: b.name().map(str::to_string),
        class: b.brace_class(),
        left_simple: ls.left_simple,
        im_lambda_order: im.len(),
        witness_order: ls.witness.as_ref().map(LeftIdeal::order),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm1Report {
    pub p: u64,
    pub n: u32,
    pub order: u64,
    pub brace_count: usize,
    pub class_count: usize,
    /// Left-simple braces among all enumerated (not up to isomorphism).
    pub left_simple_brace_count: usize,
    pub left_simple_count: usize,
    pub left_simple_classes: Vec<ClassSummary>,
    pub holds: bool,
}

/// Enumerates every brace on `(Z/p)ⁿ` and checks that left-simple ones
/// occur only for `n = 1`, where exactly the trivial class is left simple.
pub fn verify_thm1(p: u64, n: u32, opts: &EnumerateOptions, limit: u64) -> Result<Thm1Report> {
    if !super::arith::is_prime(p) || n == 0 {
        return Err(Error::Invalid(format!("need p prime and n ≥ 1, got p={p} n={n}")));
    }
    let order = p.checked_pow(n).filter(|&q| q <= limit).ok_or_else(|| {
        Error::size_limit(format!("{p}^{n}"), p.checked_pow(n).map_or(u128::MAX, u128::from), limit)
    })?;
    let g = elementary_abelian(p as usize, n as usize, &opts.bounds)?;
    let all = enumerate_braces(
        &g,
        &EnumerateOptions {
            up_to_iso: false,
            ..opts.clone()
        },
    )?;
    let simplicity: Vec<LeftSimplicity> = all.par_iter().map(is_left_simple).collect();
    let left_simple_brace_count = simplicity.iter().filter(|s| s.left_simple).count();
    let classes = dedupe_up_to_iso(all.clone(), &opts.bounds)?;
    let left_simple_classes: Vec<ClassSummary> = classes
        .iter()
        .map(|b| (b, is_left_simple(b)))
        .filter(|(_, s)| s.left_simple)
        .map(|(b, s)| summarize(b, &s))
        .collect();
    let holds = if n == 1 {
        left_simple_classes.len() == 1 && left_simple_classes[0].class == BraceClass::Trivial
    } else {
        left_simple_brace_count == 0
    };
    Ok(Thm1Report {
        p,
        n,
        order,
        brace_count: all.len(),
        class_count: classes.len(),
        left_simple_brace_count,
        left_simple_count: left_simple_classes.len(),
        left_simple_classes,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm2aReport {
    pub group: Option<String>,
    pub order: usize,
    /// Equal to the number of regular subgroups of the holomorph.
    pub brace_count: usize,
    pub class_count: usize,
    pub left_simple_brace_count: usize,
    pub classes: Vec<ClassSummary>,
    /// Left-simple classes, all of which must be almost trivial.
    pub left_simple_classes: Vec<ClassSummary>,
    pub left_simple_iff_almost_trivial: bool,
    pub witnesses_certified: bool,
    pub trivial_brace: LeftSimplicity,
    pub holds: bool,
}

/// Enumerates every brace with additive group `t` and checks that the
/// left-simple ones are exactly the almost trivial class.
pub fn verify_thm2a(t: &FiniteGroup, opts: &EnumerateOptions) -> Result<Thm2aReport> {
    let profile = group_profile(t, &opts.bounds)?;
    if profile.is_abelian || !profile.is_simple {
        return Err(Error::NotSimpleAdditive);
    }
    let all = enumerate_braces(
        t,
        &EnumerateOptions {
            up_to_iso: false,
            ..opts.clone()
        },
    )?;
    let almost = SkewBrace::almost_trivial(t)?;
    let simplicity: Vec<LeftSimplicity> = all.par_iter().map(is_left_simple).collect();
    let witnesses_certified = all.par_iter().zip(&simplicity).all(|(b, s)| match &s.witness {
        Some(w) => !w.is_trivial() && w.order() < b.order() && LeftIdeal::certify(b, w.elements().to_vec()).is_ok(),
        None => s.left_simple,
    });
    let left_simple_brace_count = simplicity.iter().filter(|s| s.left_simple).count();
    let every_left_simple_is_almost = all
        .par_iter()
        .zip(&simplicity)
        .filter(|(_, s)| s.left_simple)
        .all(|(b, _)| braces_isomorphic(b, &almost));
    let classes = dedupe_up_to_iso(all.clone(), &opts.bounds)?;
    let summaries: Vec<(ClassSummary, bool)> = classes
        .par_iter()
        .map(|b| {
            let s = is_left_simple(b);
            (summarize(b, &s), braces_isomorphic(b, &almost))
        })
        .collect();
    let class_iff = summaries.iter().all(|(s, iso)| s.left_simple == *iso)
        && summaries.iter().filter(|(_, iso)| *iso).count() == 1;
    let left_simple_classes: Vec<ClassSummary> =
        summaries.iter().filter(|(s, _)| s.left_simple).map(|(s, _)| s.clone()).collect();
    let trivial_brace = is_left_simple(&SkewBrace::trivial(t)?);
    let left_simple_iff_almost_trivial = class_iff && every_left_simple_is_almost;
    let holds = left_simple_iff_almost_trivial
        && witnesses_certified
        && !trivial_brace.left_simple
        && trivial_brace.witness.is_some();
    Ok(Thm2aReport {
        group: t.name().map(str::to_string),
        order: t.order(),
        brace_count: all.len(),
        class_count: classes.len(),
        left_simple_brace_count,
        classes: summaries.into_iter().map(|(s, _)| s).collect(),
        left_simple_classes,
        left_simple_iff_almost_trivial,
        witnesses_certified,
        trivial_brace,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitIdeal {
    pub orbit: Vec<usize>,
    pub order: usize,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm2bReport {
    pub brace_id: Option<String>,
    pub order: usize,
    pub n: usize,
    pub left_simple: bool,
    pub lambda_meet_inn: usize,
    /// Distinct permutations of the factors induced by `Im ρ`.
    pub projection: Vec<Vec<usize>>,
    pub projections_agree: bool,
    pub orbits: Vec<Vec<usize>>,
    pub orbit_ideals: Vec<OrbitIdeal>,
    pub witness: Option<LeftIdeal>,
    pub implication_holds: bool,
}

/// The permutation of the `n` factors induced by an automorphism of `Tⁿ`
/// in the mixed-radix coding.
fn factor_permutation(phi: &Perm, m: usize, n: usize) -> Result<Vec<usize>> {
    let digits = |mut x: usize| {
        let mut d = vec![0usize; n];
        for slot in d.iter_mut() {
            *slot = x % m;
            x /= m;
        }
        d
    };
    let mut perm = Vec::with_capacity(n);
    for i in 0..n {
        let embedded = m.pow(i as u32);
        let image = digits(phi.apply(embedded));
        let support: Vec<usize> = (0..n).filter(|&j| image[j] != 0).collect();
        match support[..] {
            [j] => perm.push(j),
            _ => {
                return Err(Error::CodingMismatch {
                    reason: format!("factor {i} is not mapped into a single factor"),
                })
            }
        }
    }
    Ok(perm)
}

fn distinct_projection(images: &[Perm], m: usize, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<usize>> = images
        .par_iter()
        .map(|phi| factor_permutation(phi, m, n))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn orbits_of(perms: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orbit = vec![s];
        let mut i = 0;
        while i < orbit.len() {
            for p in perms {
                let y = p[orbit[i]];
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

/// For a brace on `Tⁿ`: left-simplicity, `|Im λ ∩ Inn|`, and the action of
/// `Im ρ` on the factors. A left-simple brace must have trivial meet and a
/// transitive action; each orbit `O` of an intransitive action gives the
/// left ideal `∏_{i∈O} Tᵢ`.
pub fn check_thm2b(b: &SkewBrace, t: &FiniteGroup, n: usize, bounds: &Bounds) -> Result<Thm2bReport> {
    if n < 2 {
        return Err(Error::Invalid("n must be at least 2".into()));
    }
    let expected = direct_power(t, n, bounds)?;
    if *b.dot() != expected {
        return Err(Error::CodingMismatch {
            reason: format!("dot table is not the canonical coding of {}^{n}", t.name().unwrap_or("T")),
        });
    }
    let m = t.order();
    let ls = is_left_simple(b);
    let maps = brace_maps(b);
    let imgs = image_subgroups(b, &maps);
    let projection = distinct_projection(&imgs.im_rho, m, n)?;
    let lambda_projection = distinct_projection(&imgs.im_lambda, m, n)?;
    let orbits = orbits_of(&projection, n);
    let mut orbit_ideals = Vec::new();
    let mut witness = None;
    if orbits.len() > 1 {
        for orbit in &orbits {
            let mut inside = vec![false; n];
            for &i in orbit {
                inside[i] = true;
            }
            let elements: Vec<usize> = (0..b.order())
                .filter(|&x| {
                    let mut x = x;
                    (0..n).all(|i| {
                        let d = x % m;
                        x /= m;
                        inside[i] || d == 0
                    })
                })
                .collect();
            let certified = LeftIdeal::certify(b, elements);
            orbit_ideals.push(OrbitIdeal {
                orbit: orbit.clone(),
                order: certified.as_ref().map_or(0, LeftIdeal::order),
                certified: certified.is_ok(),
            });
            if witness.is_none() {
                witness = certified.ok();
            }
        }
    }
    if witness.is_none() {
        witness = ls.witness.clone();
    }
    let lambda_meet_inn = imgs.lambda_meet_inn();
    let implication_holds = (!ls.left_simple || (lambda_meet_inn == 1 && orbits.len() == 1))
        && orbit_ideals.iter().all(|o| o.certified);
    Ok(Thm2bReport {
        brace_id: b.name().map(str::to_string),
        order: b.order(),
        n,
        left_simple: ls.left_simple,
        lambda_meet_inn,
        projections_agree: projection == lambda_projection,
        projection,
        orbits,
        orbit_ideals,
        witness,
        implication_holds,
    })
}
