use std::collections::HashSet;

use rayon::prelude::*;

use super::{LeftIdeal, SkewBrace};
use crate::group::{FiniteGroup, FULL_SCAN_LIMIT};
use crate::perm::Perm;

/// The families `λ_a`, `ρ_a`, `conj(a)` for every `a`, materialized as
/// permutations of the carrier.
#[derive(Clone, Debug)]
pub struct BraceMaps {
    pub lambda: Vec<Perm>,
    pub rho: Vec<Perm>,
    pub conj: Vec<Perm>,
}

impl BraceMaps {
    /// Checks that λ and ρ are homomorphisms from the circle group, that
    /// conj is one from the dot group, and the identities
    /// `ρ_a = conj(a)∘λ_a`, `λ_a = conj(a⁻¹)∘ρ_a`, `conj(a) = ρ_a∘λ_a⁻¹`.
    ///
    /// Homomorphism laws are checked on all pairs up to the full-scan
    /// limit and against generators of the source group above it.
    pub fn verify(&self, b: &SkewBrace) -> std::result::Result<(), String> {
        let n = b.order();
        let (dot, circle) = (b.dot(), b.circle());
        hom_law(circle, &self.lambda).map_err(|(x, y)| format!("λ is not a homomorphism at ({x},{y})"))?;
        hom_law(circle, &self.rho).map_err(|(x, y)| format!("ρ is not a homomorphism at ({x},{y})"))?;
        hom_law(dot, &self.conj).map_err(|(x, y)| format!("conj is not a homomorphism at ({x},{y})"))?;
        let bad = (0..n).into_par_iter().find_first(|&a| {
            let (l, r, c) = (&self.lambda[a], &self.rho[a], &self.conj[a]);
            let ca_inv = &self.conj[dot.inv(a)];
            let l_inv = &self.lambda[circle.inv(a)];
            (0..n).any(|x| {
                r.apply(x) != c.apply(l.apply(x))
                    || l.apply(x) != ca_inv.apply(r.apply(x))
                    || c.apply(x) != r.apply(l_inv.apply(x))
            })
        });
        if let Some(a) = bad {
            return Err(format!("translation identities fail at a={a}"));
        }
        Ok(())
    }

    /// `λ_a ∘ ρ_a⁻¹ ∈ Inn(dot)` for every `a`; returns the first failure.
    pub fn lambda_rho_congruent_mod_inner(&self, b: &SkewBrace) -> Option<usize> {
        let inner: HashSet<&Perm> = self.conj.iter().collect();
        let circle = b.circle();
        (0..b.order()).find(|&a| {
            let rho_inv = &self.rho[circle.inv(a)];
            !inner.contains(&self.lambda[a].compose(rho_inv))
        })
    }
}

/// First pair violating `f(x·y) = f(x)∘f(y)`.
fn hom_law(src: &FiniteGroup, f: &[Perm]) -> std::result::Result<(), (usize, usize)> {
    let n = src.order();
    let check = |x: usize, y: usize| {
        let (fx, fy, fxy) = (&f[x], &f[y], &f[src.mul(x, y)]);
        (0..n).all(|z| fxy.apply(z) == fx.apply(fy.apply(z)))
    };
    let found = if n <= FULL_SCAN_LIMIT {
        (0..n).into_par_iter().find_map_first(|x| (0..n).find(|&y| !check(x, y)).map(|y| (x, y)))
    } else {
        let gens = src.generators();
        (0..n)
            .into_par_iter()
            .find_map_first(|x| gens.iter().find(|&&g| !check(x, g)).map(|&g| (x, g)))
    };
    match found {
        Some(p) => Err(p),
        None => Ok(()),
    }
}

/// Materializes and verifies the λ/ρ/conj families.
///
/// Panics if the verification fails, which can only happen if the brace
/// relation check was bypassed.
pub fn brace_maps(b: &SkewBrace) -> BraceMaps {
    let n = b.order();
    let dot = b.dot();
    let build = |f: &(dyn Fn(usize, usize) -> usize + Sync)| -> Vec<Perm> {
        (0..n)
            .into_par_iter()
            .map(|a| Perm::from_images((0..n).map(|x| f(a, x) as u16).collect()))
            .collect()
    };
    let maps = BraceMaps {
        lambda: build(&|a, x| b.lambda(a, x)),
        rho: build(&|a, x| b.rho(a, x)),
        conj: build(&|a, x| dot.conj(a, x)),
    };
    if let Err(e) = maps.verify(b) {
        panic!("brace maps of an accepted brace failed verification: {e}");
    }
    maps
}

/// `Im λ`, `Im ρ`, `Inn(dot)` and `Γ = Im λ · Im ρ` as sorted sets of
/// automorphisms, with the product identities evaluated.
#[derive(Clone, Debug)]
pub struct ImageSubgroups {
    pub im_lambda: Vec<Perm>,
    pub im_rho: Vec<Perm>,
    pub inn: Vec<Perm>,
    pub gamma: Vec<Perm>,
    /// `Γ = Im λ · Inn`.
    pub gamma_eq_lambda_inn: bool,
    /// `Γ = Im ρ · Inn`.
    pub gamma_eq_rho_inn: bool,
    /// `Inn ≤ Γ`.
    pub inn_in_gamma: bool,
    /// Every element of `Γ` is an automorphism of the dot group.
    pub gamma_in_aut: bool,
}

impl ImageSubgroups {
    pub fn identities_hold(&self) -> bool {
        self.gamma_eq_lambda_inn && self.gamma_eq_rho_inn && self.inn_in_gamma && self.gamma_in_aut
    }

    pub fn lambda_meet_inn(&self) -> usize {
        meet(&self.im_lambda, &self.inn)
    }

    pub fn rho_meet_inn(&self) -> usize {
        meet(&self.im_rho, &self.inn)
    }
}

fn meet(a: &[Perm], b: &[Perm]) -> usize {
    let set: HashSet<&Perm> = b.iter().collect();
    a.iter().filter(|p| set.contains(p)).count()
}

fn distinct_sorted(ps: &[Perm]) -> Vec<Perm> {
    let mut v: Vec<Perm> = ps.iter().collect::<HashSet<_>>().into_iter().cloned().collect();
    v.sort();
    v
}

/// `X·Y` for a set `X` and a group `Y`: cosets `xY` are added once per new
/// coset representative.
fn product_with_group(xs: &[Perm], group: &[Perm]) -> HashSet<Perm> {
    let mut out: HashSet<Perm> = HashSet::new();
    for x in xs {
        if out.contains(x) {
            continue;
        }
        let coset: Vec<Perm> = group.par_iter().map(|y| x.compose(y)).collect();
        out.extend(coset);
    }
    out
}

pub fn image_subgroups(b: &SkewBrace, maps: &BraceMaps) -> ImageSubgroups {
    let im_lambda = distinct_sorted(&maps.lambda);
    let im_rho = distinct_sorted(&maps.rho);
    let inn = distinct_sorted(&maps.conj);
    let gamma_set = product_with_group(&im_lambda, &im_rho);
    let lambda_inn = product_with_group(&im_lambda, &inn);
    let rho_inn = product_with_group(&im_rho, &inn);
    let inn_in_gamma = inn.iter().all(|p| gamma_set.contains(p));
    let mut gamma: Vec<Perm> = gamma_set.iter().cloned().collect();
    gamma.sort();
    let dot = b.dot();
    let gamma_in_aut = gamma.par_iter().all(|p| dot.is_automorphism_map(p.images()));
    ImageSubgroups {
        gamma_eq_lambda_inn: gamma_set == lambda_inn,
        gamma_eq_rho_inn: gamma_set == rho_inn,
        inn_in_gamma,
        gamma_in_aut,
        im_lambda,
        im_rho,
        inn,
        gamma,
    }
}

/// `J₁ = conj⁻¹(Im λ)` and `J₂ = ker ρ`, each certified as a left ideal.
#[derive(Clone, Debug)]
pub struct CanonicalIdeals {
    pub j1: LeftIdeal,
    pub j2: LeftIdeal,
}

pub fn canonical_ideals(b: &SkewBrace, maps: &BraceMaps) -> CanonicalIdeals {
    let n = b.order();
    let im_lambda: HashSet<&Perm> = maps.lambda.iter().collect();
    let j1: Vec<usize> = (0..n).filter(|&a| im_lambda.contains(&maps.conj[a])).collect();
    let j2: Vec<usize> = (0..n).filter(|&a| maps.rho[a].is_identity()).collect();
    let certify = |elems: Vec<usize>, label: &str| {
        LeftIdeal::certify(b, elems).unwrap_or_else(|e| panic!("{label} is not a left ideal: {e}"))
    };
    CanonicalIdeals {
        j1: certify(j1, "J1"),
        j2: certify(j2, "J2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin_group;

    #[test]
    fn trivial_brace_maps() {
        let s3 = builtin_group("S3").unwrap();
        let b = SkewBrace::trivial(&s3).unwrap();
        let m = brace_maps(&b);
        assert!(m.lambda.iter().all(Perm::is_identity));
        assert_eq!(m.rho, m.conj);
        assert_eq!(m.lambda_rho_congruent_mod_inner(&b), None);
    }

    #[test]
    fn almost_trivial_brace_maps() {
        let s3 = builtin_group("S3").unwrap();
        let b = SkewBrace::almost_trivial(&s3).unwrap();
        let m = brace_maps(&b);
        assert!(m.rho.iter().all(Perm::is_identity));
        for a in 0..6 {
            assert_eq!(m.lambda[a], m.conj[s3.inv(a)]);
        }
    }

    #[test]
    fn a5_images_and_ideals() {
        let a5 = builtin_group("A5").unwrap();
        let t = SkewBrace::trivial(&a5).unwrap();
        let mt = brace_maps(&t);
        let it = image_subgroups(&t, &mt);
        assert_eq!((it.im_lambda.len(), it.im_rho.len(), it.inn.len(), it.gamma.len()), (1, 60, 60, 60));
        assert!(it.identities_hold());
        let ct = canonical_ideals(&t, &mt);
        assert_eq!(ct.j1.elements(), &[0]);
        assert_eq!(ct.j2.elements(), &[0]);

        let at = SkewBrace::almost_trivial(&a5).unwrap();
        let ma = brace_maps(&at);
        let ia = image_subgroups(&at, &ma);
        assert_eq!((ia.im_lambda.len(), ia.im_rho.len(), ia.gamma.len()), (60, 1, 60));
        assert!(ia.identities_hold());
        let ca = canonical_ideals(&at, &ma);
        assert_eq!(ca.j1.order(), 60);
        assert_eq!(ca.j2.order(), 60);
    }

    #[test]
    fn abelian_trivial_ideals() {
        let c4 = builtin_group("C4").unwrap();
        let b = SkewBrace::trivial(&c4).unwrap();
        let m = brace_maps(&b);
        let c = canonical_ideals(&b, &m);
        assert_eq!(c.j1.order(), 4);
        assert_eq!(c.j2.order(), 4);
    }
}
