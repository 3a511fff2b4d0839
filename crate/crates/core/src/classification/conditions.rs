//! Necessary conditions on a left-simple brace whose additive group is a
//! non-abelian simple group `T`, with `H = Im λ` and `K = Im ρ`.

use serde::Serialize;

use crate::brace::{brace_maps, canonical_ideals, image_subgroups, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{automorphism_group, group_profile, Bounds};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationWitness {
    pub brace_id: Option<String>,
    pub order_t: u128,
    /// `|H| = |Im λ|`
    pub h_order: u128,
    /// `|K| = |Im ρ|`
    pub k_order: u128,
    pub h_meet_inn: u128,
    pub k_meet_inn: u128,
    pub out_order: u128,
}

impl FactorizationWitness {
    /// Divisibility of the meets and `|H|/|H ∩ Inn| = |K|/|K ∩ Inn|`.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.h_meet_inn == 0 || self.h_order % self.h_meet_inn != 0 {
            return Err(format!("|H ∩ Inn| = {} does not divide |H| = {}", self.h_meet_inn, self.h_order));
        }
        if self.k_meet_inn == 0 || self.k_order % self.k_meet_inn != 0 {
            return Err(format!("|K ∩ Inn| = {} does not divide |K| = {}", self.k_meet_inn, self.k_order));
        }
        if !self.quotient_identity() {
            return Err("|H|/|H ∩ Inn| ≠ |K|/|K ∩ Inn|".into());
        }
        Ok(())
    }

    pub fn quotient_identity(&self) -> bool {
        self.h_meet_inn != 0
            && self.k_meet_inn != 0
            && self.h_order * self.k_meet_inn == self.k_order * self.h_meet_inn
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionVerdict {
    /// (1) fails: `Im λ` meets `Inn(T)` nontrivially or is trivial, so a
    /// left-simple candidate must be almost trivial.
    MustBeAlmostTrivial,
    /// (1) holds but a later condition fails.
    Contradiction,
    AllHold,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub witness: FactorizationWitness,
    /// `|H| ≠ 1` and `|H ∩ Inn(T)| = 1`
    pub c1: bool,
    /// `|H|` divides `|Out(T)|`
    pub c2: bool,
    /// `|K| = |T|`
    pub c3: bool,
    /// `|T| = |H|·|K ∩ Inn(T)|`
    pub c4: bool,
    pub quotient_identity: bool,
    pub im_lambda_in_inn: bool,
    pub j1_order: Option<usize>,
    pub j2_order: Option<usize>,
    pub failing: Vec<u8>,
    pub verdict: ConditionVerdict,
}

/// Evaluates the four conditions on a witness alone.
pub fn evaluate_conditions(w: &FactorizationWitness) -> ConditionReport {
    let c1 = w.h_order != 1 && w.h_meet_inn == 1;
    let c2 = w.out_order % w.h_order == 0;
    let c3 = w.k_order == w.order_t;
    let c4 = w.order_t == w.h_order * w.k_meet_inn;
    let failing: Vec<u8> = [c1, c2, c3, c4]
        .iter()
        .zip(1u8..)
        .filter(|(ok, _)| !**ok)
        .map(|(_, i)| i)
        .collect();
    let verdict = if !c1 {
        ConditionVerdict::MustBeAlmostTrivial
    } else if failing.is_empty() {
        ConditionVerdict::AllHold
    } else {
        ConditionVerdict::Contradiction
    };
    ConditionReport {
        witness: w.clone(),
        c1,
        c2,
        c3,
        c4,
        quotient_identity: w.quotient_identity(),
        im_lambda_in_inn: w.h_meet_inn == w.h_order,
        j1_order: None,
        j2_order: None,
        failing,
        verdict,
    }
}

/// Builds the witness from the λ/ρ images of `b` and evaluates it.
pub fn check_conditions(b: &SkewBrace, bounds: &Bounds) -> Result<ConditionReport> {
    let dot = b.dot();
    let profile = group_profile(dot, bounds)?;
    if profile.is_abelian || !profile.is_simple {
        return Err(Error::NotSimpleAdditive);
    }
    let aut = automorphism_group(dot, bounds)?;
    let maps = brace_maps(b);
    let imgs = image_subgroups(b, &maps);
    let ideals = canonical_ideals(b, &maps);
    let w = FactorizationWitness {
        brace_id: b.name().map(str::to_string),
        order_t: b.order() as u128,
        h_order: imgs.im_lambda.len() as u128,
        k_order: imgs.im_rho.len() as u128,
        h_meet_inn: imgs.lambda_meet_inn() as u128,
        k_meet_inn: imgs.rho_meet_inn() as u128,
        out_order: aut.out_order() as u128,
    };
    let mut report = evaluate_conditions(&w);
    report.j1_order = Some(ideals.j1.order());
    report.j2_order = Some(ideals.j2.order());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, cyclic};

    #[test]
    fn trivial_and_almost_trivial_on_a5() {
        let a5 = builtin_group("A5").unwrap();
        let t = check_conditions(&SkewBrace::trivial(&a5).unwrap(), &Bounds::default()).unwrap();
        assert_eq!(t.witness.h_order, 1);
        assert!(!t.c1);
        assert!(t.quotient_identity);
        assert_eq!(t.witness.out_order, 2);
        let a = check_conditions(&SkewBrace::almost_trivial(&a5).unwrap(), &Bounds::default()).unwrap();
        assert_eq!((a.witness.h_order, a.witness.h_meet_inn), (60, 60));
        assert!(!a.c1 && a.im_lambda_in_inn);
        assert_eq!(a.verdict, ConditionVerdict::MustBeAlmostTrivial);
    }

    #[test]
    fn synthetic_psl27_witness() {
        let w = FactorizationWitness {
            brace_id: None,
            order_t: 168,
            h_order: 7,
            k_order: 168,
            h_meet_inn: 1,
            k_meet_inn: 24,
            out_order: 2,
        };
        assert!(w.validate().is_ok());
        let r = evaluate_conditions(&w);
        assert!(r.c1 && !r.c2 && r.c3 && r.c4);
        assert_eq!(r.failing, vec![2]);
        assert_eq!(r.verdict, ConditionVerdict::Contradiction);
    }

    #[test]
    fn abelian_is_rejected() {
        let b = SkewBrace::trivial(&cyclic(5)).unwrap();
        assert_eq!(check_conditions(&b, &Bounds::default()).unwrap_err(), Error::NotSimpleAdditive);
        let s3 = builtin_group("S3").unwrap();
        let b = SkewBrace::trivial(&s3).unwrap();
        assert_eq!(check_conditions(&b, &Bounds::default()).unwrap_err(), Error::NotSimpleAdditive);
    }
}
