//! Mechanical audit of the factorization tables: every printed number is
//! recomputed from the order formulas, and every row's inequality or
//! non-divisibility is re-checked. Statements quantified over all `q` are
//! checked on a finite sweep and labelled as spot-checks.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::arith::{gcd, is_primitive_divisor, pow_mod, vp, zsigmondy};
use super::expr::{big_vp, eval, eval_const, Vars};
use super::orders::{out_order, parse_family, Family, PrimePowerParam};
use super::tables::{sha256_hex, shipped_tables, Tables, TABLES_JSON};
use crate::error::{Error, Result};

const SWEEP_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
const SWEEP_Q_MAX: u64 = 4096;
const SWEEP_PARAM_MAX: u32 = 8;
const VP_PAIRS: usize = 10_000;
/// Default seed for the sampled valuation pairs.
pub const DEFAULT_SEED: u64 = 0x5eed_0f_7a_b1e5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub id: String,
    /// `exact`, or `spot-check: ...` for finite sweeps of a statement about
    /// infinitely many parameters.
    pub scope: String,
    pub checks: Vec<CheckResult>,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub rows: usize,
    pub checks: usize,
    pub spot_check_rows: usize,
    pub sha256: String,
    pub all_passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
    pub summary: AuditSummary,
}

struct Row {
    id: String,
    scope: String,
    checks: Vec<CheckResult>,
}

impl Row {
    fn new(id: &str, scope: impl Into<String>) -> Row {
        Row {
            id: id.to_string(),
            scope: scope.into(),
            checks: Vec::new(),
        }
    }

    fn fail(&self, detail: impl Into<String>) -> Error {
        Error::TableCorrupt {
            row: self.id.clone(),
            detail: detail.into(),
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) -> Result<()> {
        let detail = detail.into();
        if !ok {
            return Err(self.fail(format!("{name}: {detail}")));
        }
        self.checks.push(CheckResult {
            name: name.to_string(),
            ok,
            detail,
        });
        Ok(())
    }

    fn done(self, verdict: &str) -> AuditRow {
        AuditRow {
            id: self.id,
            scope: self.scope,
            checks: self.checks,
            verdict: verdict.to_string(),
        }
    }
}

fn big(x: u128) -> BigUint {
    BigUint::from(x)
}

fn vars(q: PrimePowerParam, extra: &[(&'static str, u64)]) -> Vars {
    let mut v = Vars::new();
    v.insert("q", big(q.q() as u128));
    v.insert("p", big(q.p as u128));
    v.insert("f", big(q.f as u128));
    for &(k, x) in extra {
        v.insert(k, big(x as u128));
    }
    v
}

fn ev(row: &Row, src: &str, v: &Vars) -> Result<BigUint> {
    eval(src, v).map_err(|e| row.fail(format!("cannot evaluate {src:?}: {e}")))
}

fn ev_const(row: &Row, src: &str) -> Result<u128> {
    eval_const(src).map_err(|e| row.fail(format!("cannot evaluate {src:?}: {e}")))
}

fn ev_u32(row: &Row, src: &str, v: &Vars) -> Result<u32> {
    ev(row, src, v)?
        .to_u32()
        .ok_or_else(|| row.fail(format!("{src:?} is too large")))
}

fn family_of(row: &Row, name: &str) -> Result<Family> {
    parse_family(name).map_err(|e| row.fail(e.to_string()))
}

fn order_of(row: &Row, fam: &Family) -> Result<u128> {
    fam.order().ok_or_else(|| row.fail(format!("order of {fam} overflows")))
}

/// `|Out(T)|`, including the one sporadic group in the tables.
fn outer(row: &Row, fam: &Family) -> Result<u128> {
    match fam {
        // Out(M11) = 1
        Family::Mathieu(11) => Ok(1),
        _ => out_order(fam).map_err(|e| row.fail(e.to_string())),
    }
}

fn lie_family(row: &Row, key: &str, dim: u32, q: PrimePowerParam) -> Result<Family> {
    Ok(match key {
        "PSL" => Family::Psl { n: dim, q },
        "PSU" => Family::Psu { n: dim, q },
        "PSp" => Family::Psp { dim, q },
        "O" => Family::OmegaOdd { dim, q },
        "PO+" => Family::POmega { dim, plus: true, q },
        other => return Err(row.fail(format!("unknown family key {other}"))),
    })
}

fn p_allowed(constraint: &str, p: u64) -> bool {
    match constraint {
        "2" => p == 2,
        "odd" => p != 2,
        _ => true,
    }
}

/// Prime powers `q = p^f ≤ q_max` over the sweep primes.
fn sweep_q(constraint: &str, q_max: u64) -> Vec<PrimePowerParam> {
    let mut out = Vec::new();
    for &p in &SWEEP_PRIMES {
        if !p_allowed(constraint, p) {
            continue;
        }
        let mut f = 1;
        while p.checked_pow(f).is_some_and(|q| q <= q_max) {
            out.push(PrimePowerParam { p, f });
            f += 1;
        }
    }
    out
}

/// Which of `n`, `m` a dimension expression uses.
fn dim_var(dim: &str) -> Option<&'static str> {
    if dim.contains('n') {
        Some("n")
    } else if dim.contains('m') {
        Some("m")
    } else {
        None
    }
}

fn audit_psl2_kk(t: &Tables) -> Result<AuditRow> {
    let r = &t.psl2_kk;
    let mut row = Row::new(&r.id, format!("spot-check: prime powers 4 ≤ q ≤ {}", r.q_max));
    let qs: Vec<PrimePowerParam> = (4..=r.q_max).filter_map(|q| PrimePowerParam::from_q(q).ok()).collect();
    for &q in &qs {
        let v = vars(q, &[]);
        let fam = Family::Psl { n: 2, q };
        let t_order = order_of(&row, &fam)?;
        let out = outer(&row, &fam)?;
        let (qq, f) = (q.q() as u128, q.f as u128);
        let printed_t = ev(&row, &r.t_order, &v)?;
        let printed_out = ev(&row, &r.out, &v)?;
        let lo = ev(&row, &r.kk_divisible_by, &v)?;
        let hi = ev(&row, &r.kk_divides, &v)?;
        let fail = |what: &str| row.fail(format!("q = {}: {what}", q.q()));
        if printed_t != big(t_order) {
            return Err(fail("|T| formula disagrees with the order formula"));
        }
        if printed_out != big(out) {
            return Err(fail("|Out(T)| formula disagrees"));
        }
        if !(&hi % &lo).is_zero() || !(big(t_order) % &hi).is_zero() {
            return Err(fail("bounds for |K ∩ Inn(T)| are not a divisor chain of |T|"));
        }
        // |H|·|K ∩ Inn| divides |Out|·(upper bound) = q(q−1)f
        let product = qq * (qq - 1) * f;
        if big(out) * &hi != big(product) {
            return Err(fail("|Out|·q(q−1)/(2,q−1) ≠ q(q−1)f"));
        }
        if product >= t_order {
            return Err(fail("q(q−1)f is not below |T|"));
        }
        let g = gcd(2, qq - 1);
        let two_f = 1u128 << q.f;
        // f < (2^f+1)/2 ≤ (q+1)/(2,q−1)
        if 2 * f >= two_f + 1 || (two_f + 1) * g > 2 * (qq + 1) {
            return Err(fail("f < (2^f+1)/2 ≤ (q+1)/(2,q−1) fails"));
        }
    }
    let n = qs.len();
    row.check("t_order and out formulas match", true, format!("{n} values of q"))?;
    row.check("q(q−1)f < |T|", true, format!("{n} values of q"))?;
    row.check("f < (2^f+1)/2 ≤ (q+1)/(2,q−1)", true, format!("{n} values of q"))?;
    Ok(row.done("contradicts (4)"))
}

fn audit_solvable(t: &Tables) -> Result<Vec<AuditRow>> {
    t.both_solvable
        .par_iter()
        .map(|r| {
            let mut row = Row::new(&r.id, "exact");
            let fam = family_of(&row, &r.t)?;
            let t_order = order_of(&row, &fam)?;
            let out = outer(&row, &fam)?;
            row.check("|Out(T)| recomputed", out == r.out as u128, format!("{} = {out}", r.t))?;
            let h = ev_const(&row, &r.h_min)?;
            let k = ev_const(&row, &r.k_min)?;
            let aut = t_order * out;
            row.check("min |H'| divides |Aut(T)|", aut % h == 0, format!("{h} | {aut}"))?;
            row.check("min |K'| divides |Aut(T)|", aut % k == 0, format!("{k} | {aut}"))?;
            row.check("min |H'| ∤ |Out(T)|", out % h != 0, format!("{h} ∤ {out}"))?;
            row.check("min |K'| ∤ |Out(T)|", out % k != 0, format!("{k} ∤ {out}"))?;
            Ok(row.done("contradicts (2)"))
        })
        .collect::<Vec<Result<AuditRow>>>()
        .into_iter()
        .collect()
}

fn audit_named_orders(id: &str, orders: &[super::tables::NamedOrder]) -> Result<AuditRow> {
    let mut row = Row::new(id, "exact");
    for o in orders {
        let fam = family_of(&row, &o.name)?;
        let got = order_of(&row, &fam)?;
        let printed = ev_const(&row, &o.order)?;
        row.check(&format!("|{}|", o.name), got == printed, format!("{got}"))?;
    }
    Ok(row.done("orders confirmed"))
}

fn audit_k_bound(t: &Tables) -> Result<Vec<AuditRow>> {
    t.lie_k_bound
        .par_iter()
        .map(|r| {
            let mut row = Row::new(&r.id, "exact");
            let fam = family_of(&row, &r.t)?;
            let t_order = order_of(&row, &fam)?;
            let printed = ev_const(&row, &r.t_order)?;
            row.check("|T| recomputed", t_order == printed, format!("{} = {t_order}", r.t))?;
            let out = outer(&row, &fam)?;
            row.check("|Out(T)| recomputed", out == r.out as u128, format!("{out}"))?;
            let k = ev_const(&row, &r.k_bound)?;
            let bound = out
                .checked_mul(k)
                .ok_or_else(|| row.fail("|Out|·𝒦 overflows"))?;
            row.check("|Out(T)|·𝒦 < |T|", bound < t_order, format!("{bound} < {t_order}"))?;
            Ok(row.done("contradicts (4)"))
        })
        .collect::<Vec<Result<AuditRow>>>()
        .into_iter()
        .collect()
}

fn audit_out_table(t: &Tables) -> Result<Vec<AuditRow>> {
    t.out_table
        .iter()
        .map(|r| {
            let mut row = Row::new(&r.id, format!("spot-check: q ≤ {SWEEP_Q_MAX}, parameter ≤ {SWEEP_PARAM_MAX}"));
            let var = dim_var(&r.dim);
            let params: Vec<u32> = match var {
                Some(_) => (r.param_min.unwrap_or(1)..=SWEEP_PARAM_MAX).collect(),
                None => vec![0],
            };
            let mut count = 0;
            for q in sweep_q(&r.p, SWEEP_Q_MAX) {
                for &k in &params {
                    let extra: Vec<(&'static str, u64)> = var.map(|v| vec![(v, k as u64)]).unwrap_or_default();
                    let v = vars(q, &extra);
                    let dim = ev_u32(&row, &r.dim, &v)?;
                    if r.exclude_m2_p2 && dim == 4 && q.p == 2 {
                        continue;
                    }
                    if let Some(cond) = &r.qm_mod4 {
                        let qm = ev(&row, "q^m", &v)?;
                        let is1 = (&qm % 4u32) == BigUint::from(1u32);
                        if is1 != (cond == "1") {
                            continue;
                        }
                    }
                    let fam = lie_family(&row, &r.family, dim, q)?;
                    let expected = ev(&row, &r.formula, &v)?;
                    let got = outer(&row, &fam)?;
                    if expected != big(got) {
                        return Err(row.fail(format!("{fam}: formula gives {expected}, computed {got}")));
                    }
                    count += 1;
                }
            }
            row.check("formula agrees with out_order", count > 0, format!("{count} groups"))?;
            Ok(row.done("formula confirmed"))
        })
        .collect()
}

fn audit_valuations(t: &Tables) -> Result<Vec<AuditRow>> {
    t.valuation
        .iter()
        .map(|r| {
            let mut row = Row::new(&r.id, format!("spot-check: q ≤ {SWEEP_Q_MAX}, m ≤ {SWEEP_PARAM_MAX}"));
            let h = t
                .lie_h_lower
                .iter()
                .find(|h| h.id == r.id)
                .ok_or_else(|| row.fail("no matching |H| row"))?;
            let ms: Vec<u32> = match r.m_min {
                Some(lo) => (lo..=SWEEP_PARAM_MAX).collect(),
                None => vec![0],
            };
            let mut count = 0;
            for q in sweep_q(&r.p, SWEEP_Q_MAX) {
                for &m in &ms {
                    let v = vars(q, &[("m", m as u64)]);
                    let dim = ev_u32(&row, &h.dim, &v)?;
                    let fam = lie_family(&row, &h.family, dim, q)?;
                    let out = outer(&row, &fam)?;
                    let t_order = fam.order().map(BigUint::from);
                    let out_max = ev_u32(&row, &r.out_vp_at_most, &v)?;
                    let h_min = ev_u32(&row, &r.h_vp_at_least, &v)?;
                    let hdiv = ev(&row, &h.h_divisor, &v)?;
                    let at = |what: &str| row.fail(format!("{fam}: {what}"));
                    if vp(out, q.p as u128) > out_max {
                        return Err(at("v_p(|Out|) exceeds its stated bound"));
                    }
                    if big_vp(&hdiv, q.p) < h_min {
                        return Err(at("v_p of the |H| divisor is below its stated bound"));
                    }
                    if t_order.is_some_and(|t| !((t * big(out)) % &hdiv).is_zero()) {
                        return Err(at("|H| divisor does not divide |Aut(T)|"));
                    }
                    if out_max >= h_min {
                        return Err(at("valuation bounds do not contradict"));
                    }
                    let f = q.f as u128;
                    // v_p(f) ≤ log_p f < f
                    if (q.p as u128).pow(vp(f, q.p as u128)) > f || (q.f >= 1 && (q.p as u128).pow(q.f) <= f) {
                        return Err(at("v_p(f) ≤ log_p f < f fails"));
                    }
                    count += 1;
                }
            }
            row.check("v_p(|Out|) ≤ stated bound", count > 0, format!("{count} groups"))?;
            row.check("v_p(|H|) ≥ stated bound", true, format!("{count} groups"))?;
            row.check("v_p(|Out|) < v_p(|H|)", true, format!("{count} groups"))?;
            Ok(row.done("contradicts (2)"))
        })
        .collect()
}

fn audit_psl_primitive(t: &Tables, seed: u64) -> Result<Vec<AuditRow>> {
    let pp = &t.psl_primitive;
    let h_a = t
        .lie_h_lower
        .iter()
        .find(|h| h.id == "a")
        .ok_or_else(|| Error::TableCorrupt {
            row: "a".into(),
            detail: "no |H| row for case a".into(),
        })?;
    let mut rows = Vec::new();

    // n = 2: |Out| ≤ 2f < 2^f+1 ≤ p^f+1 = (q²−1)/(q−1) ≤ |H|
    let mut row = Row::new("a-n2", format!("spot-check: prime powers 4 ≤ q ≤ {SWEEP_Q_MAX}"));
    if pp.n2_chain.len() != 4 {
        return Err(row.fail("chain must have four terms"));
    }
    let mut count = 0;
    for q in (4..=SWEEP_Q_MAX).filter_map(|q| PrimePowerParam::from_q(q).ok()) {
        let v = vars(q, &[("n", 2)]);
        let out = outer(&row, &Family::Psl { n: 2, q })?;
        let c: Vec<BigUint> = pp.n2_chain.iter().map(|e| ev(&row, e, &v)).collect::<Result<_>>()?;
        let h = ev(&row, &h_a.h_divisor, &v)?;
        let ok = big(out) <= c[0] && c[0] < c[1] && c[1] <= c[2] && c[2] == c[3] && c[3] == h;
        if !ok {
            return Err(row.fail(format!("chain fails at q = {}", q.q())));
        }
        count += 1;
    }
    row.check("|Out| ≤ 2f < 2^f+1 ≤ p^f+1 = (q²−1)/(q−1)", true, format!("{count} values of q"))?;
    rows.push(row.done("contradicts (2)"));

    for s in &pp.specials {
        let mut row = Row::new(&s.id, "exact");
        let q = PrimePowerParam::new(s.p, s.f).map_err(|e| row.fail(e.to_string()))?;
        let v = vars(q, &[("n", s.n as u64)]);
        let out = outer(&row, &Family::Psl { n: s.n, q })?;
        row.check("|Out(T)| recomputed", out == s.out as u128, format!("PSL{}({}) has |Out| = {out}", s.n, q.q()))?;
        let lower = ev(&row, &s.h_lower, &v)?;
        let h = ev(&row, &h_a.h_divisor, &v)?;
        row.check("bound is (q^n−1)/(q−1)", lower == h, format!("{h}"))?;
        row.check("|Out(T)| < (q^n−1)/(q−1)", big(out) < h, format!("{out} < {h}"))?;
        let z = zsigmondy(s.p, s.f * s.n);
        row.check("no primitive prime divisor", z.is_none(), format!("p^(fn) − 1 = {}", s.p.pow(s.f * s.n) - 1))?;
        rows.push(row.done("contradicts (2)"));
    }

    let mut row = Row::new(
        "a-zsigmondy",
        format!("spot-check: p ≤ 13, 3 ≤ n ≤ {}, p^(fn) < 2^{}", pp.n_max, pp.pfn_max_bits),
    );
    let mut count = 0;
    for &p in &SWEEP_PRIMES {
        for f in 1u32.. {
            if p.checked_pow(3 * f).is_none_or(|x| x >> pp.pfn_max_bits != 0) {
                break;
            }
            for n in 3..=pp.n_max {
                let Some(pfn) = p.checked_pow(f * n).filter(|x| x >> pp.pfn_max_bits == 0) else {
                    break;
                };
                if f * n == 6 && p == 2 {
                    continue;
                }
                let q = PrimePowerParam { p, f };
                let v = vars(q, &[("n", n as u64)]);
                let at = |what: &str| row.fail(format!("p={p} f={f} n={n}: {what}"));
                let l = zsigmondy(p, f * n).ok_or_else(|| at("no primitive prime divisor"))?;
                if !is_primitive_divisor(p, f * n, l) || (pfn - 1) % l != 0 {
                    return Err(at("returned prime is not primitive"));
                }
                let h = ev(&row, &h_a.h_divisor, &v)?;
                let out = outer(&row, &Family::Psl { n, q })?;
                let lq = l as u128;
                if !(&h % lq).is_zero() {
                    return Err(at("ℓ does not divide (q^n−1)/(q−1)"));
                }
                if (q.q() as u128 - 1) % lq == 0 || l == 2 || (f as u64) % l == 0 || out % lq == 0 {
                    return Err(at("ℓ divides q−1, 2f, or |Out|"));
                }
                count += 1;
            }
        }
    }
    row.check("primitive ℓ divides (q^n−1)/(q−1) but not |Out(T)|", count > 0, format!("{count} cases"))?;

    // p ≡ p^ℓ (mod ℓ) gives p^{(f/ℓ)n} ≡ p^{fn} (mod ℓ) when ℓ | f
    let mut descents = 0;
    for &p in &SWEEP_PRIMES {
        for &l in &SWEEP_PRIMES {
            for k in 1..=3u128 {
                for n in 1..=pp.n_max as u128 {
                    let f = l as u128 * k;
                    let lhs = pow_mod(p as u128, k * n, l as u128);
                    let rhs = pow_mod(p as u128, f * n, l as u128);
                    if lhs != rhs {
                        return Err(row.fail(format!("descent fails for p={p} ℓ={l} f={f} n={n}")));
                    }
                    descents += 1;
                }
            }
        }
    }
    row.check("p^((f/ℓ)n) ≡ p^(fn) (mod ℓ)", true, format!("{descents} cases"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..VP_PAIRS {
        let a: u128 = rng.gen_range(1..1u128 << 40);
        let b: u128 = rng.gen_range(1..1u128 << 40);
        let p = SWEEP_PRIMES[rng.gen_range(0..SWEEP_PRIMES.len())] as u128;
        if vp(a * b, p) != vp(a, p) + vp(b, p) {
            return Err(row.fail(format!("v_p not additive at ({a}, {b}, {p})")));
        }
    }
    row.check("v_p(ab) = v_p(a) + v_p(b)", true, format!("{VP_PAIRS} seeded pairs"))?;
    rows.push(row.done("contradicts (2)"));
    Ok(rows)
}

/// Audits a parsed dataset. The first failing row aborts with
/// [`Error::TableCorrupt`].
pub fn audit(t: &Tables, sha256: String, seed: u64) -> Result<AuditReport> {
    let mut rows = vec![audit_psl2_kk(t)?];
    rows.extend(audit_solvable(t)?);
    rows.push(audit_named_orders("stated-orders", &t.stated_orders)?);
    rows.extend(audit_k_bound(t)?);
    rows.push(audit_named_orders("helper-orders", &t.helper_orders)?);
    rows.extend(audit_out_table(t)?);
    rows.extend(audit_valuations(t)?);
    rows.extend(audit_psl_primitive(t, seed)?);
    let summary = AuditSummary {
        rows: rows.len(),
        checks: rows.iter().map(|r| r.checks.len()).sum(),
        spot_check_rows: rows.iter().filter(|r| r.scope.starts_with("spot-check")).count(),
        sha256,
        all_passed: rows.iter().all(|r| r.checks.iter().all(|c| c.ok)),
    };
    Ok(AuditReport { rows, summary })
}

/// Audits the shipped dataset after verifying its digest.
pub fn audit_tables() -> Result<AuditReport> {
    audit_tables_seeded(DEFAULT_SEED)
}

pub fn audit_tables_seeded(seed: u64) -> Result<AuditReport> {
    let t = shipped_tables()?;
    audit(&t, sha256_hex(TABLES_JSON.as_bytes()), seed)
}

#[cfg(test)]
mod tests {
    use super::super::tables::load_tables;
    use super::*;

    #[test]
    fn shipped_tables_pass() {
        let rep = audit_tables().unwrap();
        assert!(rep.summary.all_passed);
        let ids: Vec<&str> = rep.rows.iter().map(|r| r.id.as_str()).collect();
        for id in ["psl2-kk", "sol-01", "sol-12", "ins-22", "ins-28", "b", "i", "a-n2", "a-special-2", "a-zsigmondy"] {
            assert!(ids.contains(&id), "{id}");
        }
    }

    #[test]
    fn example_rows() {
        let rep = audit_tables().unwrap();
        let row = |id: &str| rep.rows.iter().find(|r| r.id == id).unwrap().clone();
        let psl27 = row("sol-01");
        assert!(psl27.checks.iter().any(|c| c.detail == "7 ∤ 2"));
        assert!(psl27.checks.iter().any(|c| c.detail == "24 ∤ 2"));
        let m11 = row("sol-12");
        assert!(m11.checks.iter().any(|c| c.detail == "55 ∤ 1"));
        let o73 = row("ins-22");
        assert!(o73.checks.iter().any(|c| c.detail == "8491392 < 4585351680"));
    }

    fn corrupted(from: &str, to: &str) -> Error {
        let json = TABLES_JSON.replacen(from, to, 1);
        assert_ne!(json, TABLES_JSON, "pattern {from} not found");
        let t = load_tables(&json, false).unwrap();
        audit(&t, String::new(), DEFAULT_SEED).unwrap_err()
    }

    #[test]
    fn corrupt_rows_are_reported() {
        match corrupted("\"t_order\": \"4080\"", "\"t_order\": \"4081\"") {
            Error::TableCorrupt { row, .. } => assert_eq!(row, "ins-02"),
            e => panic!("{e}"),
        }
        match corrupted("\"h_min\": \"7\"", "\"h_min\": \"2\"") {
            Error::TableCorrupt { row, .. } => assert_eq!(row, "sol-01"),
            e => panic!("{e}"),
        }
        match corrupted("\"order\": \"9828\"", "\"order\": \"9829\"") {
            Error::TableCorrupt { row, .. } => assert_eq!(row, "helper-orders"),
            e => panic!("{e}"),
        }
        match corrupted("\"formula\": \"8*f\"", "\"formula\": \"4*f\"") {
            Error::TableCorrupt { row, .. } => assert_eq!(row, "out-8"),
            e => panic!("{e}"),
        }
        match corrupted("\"h_vp_at_least\": \"3*f\"", "\"h_vp_at_least\": \"4*f\"") {
            Error::TableCorrupt { row, .. } => assert_eq!(row, "b"),
            e => panic!("{e}"),
        }
    }
}
