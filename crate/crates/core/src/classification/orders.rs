//! Orders and outer-automorphism orders of the groups named in the audit
//! tables, computed from the standard formulas.

use std::fmt;

use serde::Serialize;

use super::arith::{gcd, is_prime, prime_power};
use crate::error::{Error, Result};

/// `q = p^f` with `p` prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePowerParam {
    pub p: u64,
    pub f: u32,
}

impl PrimePowerParam {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if !is_prime(p) || f == 0 {
            return Err(Error::Invalid(format!("{p}^{f} is not a prime power")));
        }
        p.checked_pow(f)
            .ok_or_else(|| Error::Invalid(format!("{p}^{f} overflows")))?;
        Ok(PrimePowerParam { p, f })
    }

    pub fn from_q(q: u64) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or_else(|| Error::Invalid(format!("{q} is not a prime power")))?;
        Ok(PrimePowerParam { p, f })
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.f)
    }
}

/// A group named in the tables. Dimensions are the matrix sizes: `Psp{dim:4}`
/// is `PSp₄`, `OmegaOdd{dim:7}` is `Ω₇`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Psl { n: u32, q: PrimePowerParam },
    Sl { n: u32, q: PrimePowerParam },
    Psu { n: u32, q: PrimePowerParam },
    Psp { dim: u32, q: PrimePowerParam },
    Sp { dim: u32, q: PrimePowerParam },
    /// `Ω_{2m+1}(q)`.
    OmegaOdd { dim: u32, q: PrimePowerParam },
    /// `Ω^±_{2m}(q)`.
    Omega { dim: u32, plus: bool, q: PrimePowerParam },
    /// `PΩ^±_{2m}(q)`.
    POmega { dim: u32, plus: bool, q: PrimePowerParam },
    G2 { q: PrimePowerParam },
    Alternating(u32),
    Symmetric(u32),
    /// Dihedral group of the given order.
    Dihedral(u32),
    Mathieu(u32),
    /// `AΓL₁(q)`.
    AGammaL1 { q: PrimePowerParam },
}

fn prod(it: impl IntoIterator<Item = Option<u128>>) -> Option<u128> {
    it.into_iter().try_fold(1u128, |acc, x| acc.checked_mul(x?))
}

fn pw(q: u128, e: u32) -> Option<u128> {
    q.checked_pow(e)
}

fn factorial(n: u32) -> Option<u128> {
    prod((1..=n as u128).map(Some))
}

impl Family {
    /// Group order, `None` on overflow of `u128`.
    pub fn order(&self) -> Option<u128> {
        use Family::*;
        match *self {
            Psl { n, q } => Some(sl_order(n, q.q() as u128)? / gcd(n as u128, q.q() as u128 - 1)),
            Sl { n, q } => sl_order(n, q.q() as u128),
            Psu { n, q } => Some(su_order(n, q.q() as u128)? / gcd(n as u128, q.q() as u128 + 1)),
            Psp { dim, q } => Some(sp_order(dim / 2, q.q() as u128)? / gcd(2, q.q() as u128 - 1)),
            Sp { dim, q } => sp_order(dim / 2, q.q() as u128),
            // Ω_{2m+1}(q) has index (2,q−1) in SO_{2m+1}(q) ≅ Sp_{2m}(q) in order
            OmegaOdd { dim, q } => Some(sp_order((dim - 1) / 2, q.q() as u128)? / gcd(2, q.q() as u128 - 1)),
            Omega { dim, plus, q } => {
                let q = q.q() as u128;
                Some(so_even_order(dim / 2, plus, q)? / gcd(2, q - 1))
            }
            POmega { dim, plus, q } => {
                let qq = q.q() as u128;
                let m = dim / 2;
                let qm = pw(qq, m)?;
                let d = if plus { gcd(4, qm - 1) } else { gcd(4, qm + 1) };
                Some(so_even_order(m, plus, qq)? / d)
            }
            G2 { q } => {
                let q = q.q() as u128;
                prod([pw(q, 6), pw(q, 6).map(|x| x - 1), Some(q * q - 1)])
            }
            Alternating(n) => Some(factorial(n)? / 2),
            Symmetric(n) => factorial(n),
            Dihedral(k) => Some(k as u128),
            // 3²:Q₈, the point stabilizer of M₁₀ on 10 points
            Mathieu(9) => Some(72),
            // 2⁴·3²·5·11
            Mathieu(11) => Some(7920),
            Mathieu(_) => None,
            AGammaL1 { q } => {
                let qq = q.q() as u128;
                prod([Some(qq), Some(qq - 1), Some(q.f as u128)])
            }
        }
    }

    /// Prime-power parameter, for the Lie-type families.
    pub fn param(&self) -> Option<PrimePowerParam> {
        use Family::*;
        match *self {
            Psl { q, .. } | Sl { q, .. } | Psu { q, .. } | Psp { q, .. } | Sp { q, .. } | OmegaOdd { q, .. } => Some(q),
            Omega { q, .. } | POmega { q, .. } | G2 { q } | AGammaL1 { q } => Some(q),
            _ => None,
        }
    }
}

/// `|SL_n(q)| = q^{n(n−1)/2} ∏_{i=2}^{n} (q^i − 1)`.
fn sl_order(n: u32, q: u128) -> Option<u128> {
    prod(std::iter::once(pw(q, n * (n - 1) / 2)).chain((2..=n).map(|i| pw(q, i).map(|x| x - 1))))
}

/// `|SU_n(q)| = q^{n(n−1)/2} ∏_{i=2}^{n} (q^i − (−1)^i)`.
fn su_order(n: u32, q: u128) -> Option<u128> {
    prod(
        std::iter::once(pw(q, n * (n - 1) / 2))
            .chain((2..=n).map(|i| pw(q, i).map(|x| if i % 2 == 0 { x - 1 } else { x + 1 }))),
    )
}

/// `|Sp_{2m}(q)| = q^{m²} ∏_{i=1}^{m} (q^{2i} − 1)`.
fn sp_order(m: u32, q: u128) -> Option<u128> {
    prod(std::iter::once(pw(q, m * m)).chain((1..=m).map(|i| pw(q, 2 * i).map(|x| x - 1))))
}

/// `q^{m(m−1)} (q^m ∓ 1) ∏_{i=1}^{m−1} (q^{2i} − 1)`, which is
/// `(2,q−1)·|Ω^±_{2m}(q)|`.
fn so_even_order(m: u32, plus: bool, q: u128) -> Option<u128> {
    let qm = pw(q, m)?;
    let e = if plus { qm - 1 } else { qm + 1 };
    prod(
        [pw(q, m * (m - 1)), Some(e)]
            .into_iter()
            .chain((1..m).map(|i| pw(q, 2 * i).map(|x| x - 1))),
    )
}

/// `|Out(T)|` for the Lie-type families of the outer-automorphism table.
pub fn out_order(family: &Family) -> Result<u128> {
    use Family::*;
    let unknown = || Error::UnknownFamily(family.to_string());
    let (q, p, f) = match family.param() {
        Some(param) => (param.q() as u128, param.p as u128, param.f as u128),
        None => return Err(unknown()),
    };
    let out = match *family {
        Psl { n: 2, .. } => gcd(2, q - 1) * f,
        Psl { n, .. } if n >= 3 => gcd(n as u128, q - 1) * 2 * f,
        Psu { n, .. } if n >= 3 => gcd(n as u128, q + 1) * 2 * f,
        Psp { dim: 4, .. } | Sp { dim: 4, .. } if p == 2 => 2 * f,
        // Sp_{2m}(q) = PSp_{2m}(q) for q even
        Psp { dim, .. } if dim >= 4 => gcd(2, q - 1) * f,
        Sp { dim, .. } if dim >= 4 && p == 2 => f,
        OmegaOdd { dim, .. } if dim >= 7 && p != 2 => 2 * f,
        POmega { dim: 8, plus: true, .. } => factorial(2 + gcd(2, q - 1) as u32).ok_or_else(unknown)? * f,
        // Ω = PΩ for q even
        Omega { dim: 8, plus: true, .. } if p == 2 => 6 * f,
        POmega { dim, plus: true, .. } if dim >= 10 => {
            let qm = q.checked_pow(dim / 2).ok_or_else(unknown)?;
            if qm % 4 == 1 {
                8 * f
            } else {
                2 * gcd(2, q - 1) * f
            }
        }
        Omega { dim, plus: true, .. } if dim >= 10 && p == 2 => 2 * f,
        _ => return Err(unknown()),
    };
    Ok(out)
}

/// `|PSL₂(q)| = q(q−1)(q+1)/(2,q−1)`.
pub fn psl2_order(q: PrimePowerParam) -> u128 {
    Family::Psl { n: 2, q }.order().expect("PSL2 order fits in u128")
}

impl fmt::Display for Family {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match *self {
            Psl { n, q } => write!(out, "PSL{n}({})", q.q()),
            Sl { n, q } => write!(out, "SL{n}({})", q.q()),
            Psu { n, q } => write!(out, "PSU{n}({})", q.q()),
            Psp { dim, q } => write!(out, "PSp{dim}({})", q.q()),
            Sp { dim, q } => write!(out, "Sp{dim}({})", q.q()),
            OmegaOdd { dim, q } => write!(out, "O{dim}({})", q.q()),
            Omega { dim, plus, q } => write!(out, "O{dim}{}({})", if plus { '+' } else { '-' }, q.q()),
            POmega { dim, plus, q } => write!(out, "PO{dim}{}({})", if plus { '+' } else { '-' }, q.q()),
            G2 { q } => write!(out, "G2({})", q.q()),
            Alternating(n) => write!(out, "A{n}"),
            Symmetric(n) => write!(out, "S{n}"),
            Dihedral(k) => write!(out, "D{k}"),
            Mathieu(k) => write!(out, "M{k}"),
            AGammaL1 { q } => write!(out, "AGammaL1({})", q.q()),
        }
    }
}

/// Parses names such as `PSL2(7)`, `PSL2(5^2)`, `Sp6(2)`, `O7(3)`,
/// `PO8+(3)`, `O8-(3)`, `G2(3)`, `A5`, `S4`, `D10`, `M11`, `AGammaL1(9)`.
pub fn parse_family(name: &str) -> Result<Family> {
    use Family::*;
    let bad = || Error::UnknownFamily(name.to_string());
    let (head, arg) = match name.find('(') {
        Some(i) => {
            let inner = name[i + 1..].strip_suffix(')').ok_or_else(bad)?;
            (&name[..i], Some(parse_q(inner).ok_or_else(bad)?))
        }
        None => (name, None),
    };
    let split = head.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
    let (letters, rest) = head.split_at(split);
    let (digits, sign) = match rest.strip_suffix('+') {
        Some(d) => (d, Some(true)),
        None => match rest.strip_suffix('-') {
            Some(d) => (d, Some(false)),
            None => (rest, None),
        },
    };
    let k: u32 = digits.parse().map_err(|_| bad())?;
    let fam = match (letters, arg, sign) {
        ("PSL", Some(q), None) => Psl { n: k, q },
        ("SL", Some(q), None) => Sl { n: k, q },
        ("PSU", Some(q), None) => Psu { n: k, q },
        ("PSp", Some(q), None) if k % 2 == 0 => Psp { dim: k, q },
        ("Sp", Some(q), None) if k % 2 == 0 => Sp { dim: k, q },
        ("O", Some(q), None) if k % 2 == 1 => OmegaOdd { dim: k, q },
        ("O", Some(q), Some(plus)) if k % 2 == 0 => Omega { dim: k, plus, q },
        ("PO", Some(q), Some(plus)) if k % 2 == 0 => POmega { dim: k, plus, q },
        ("G", Some(q), None) if k == 2 => G2 { q },
        ("AGammaL", Some(q), None) if k == 1 => AGammaL1 { q },
        ("A", None, None) => Alternating(k),
        ("S", None, None) => Symmetric(k),
        ("D", None, None) => Dihedral(k),
        ("M", None, None) if k == 9 || k == 11 => Mathieu(k),
        _ => return Err(bad()),
    };
    Ok(fam)
}

fn parse_q(s: &str) -> Option<PrimePowerParam> {
    let q: u64 = match s.split_once('^') {
        Some((b, e)) => b.trim().parse::<u64>().ok()?.checked_pow(e.trim().parse().ok()?)?,
        None => s.trim().parse().ok()?,
    };
    PrimePowerParam::from_q(q).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(name: &str) -> u128 {
        parse_family(name).unwrap().order().unwrap()
    }

    fn out(name: &str) -> u128 {
        out_order(&parse_family(name).unwrap()).unwrap()
    }

    #[test]
    fn psl2_examples() {
        assert_eq!(psl2_order(PrimePowerParam::from_q(11).unwrap()), 660);
        assert_eq!(psl2_order(PrimePowerParam::from_q(16).unwrap()), 4080);
        assert_eq!(psl2_order(PrimePowerParam::from_q(5).unwrap()), 60);
    }

    #[test]
    fn small_orders() {
        assert_eq!(order("A5"), 60);
        assert_eq!(order("S4"), 24);
        assert_eq!(order("D10"), 10);
        assert_eq!(order("AGammaL1(9)"), 144);
        assert_eq!(order("PSL2(5^2)"), 7800);
        assert_eq!(order("PSL3(2)"), 168);
        assert_eq!(order("PSL2(7)"), 168);
        assert_eq!(order("PSU4(2)"), order("PSp4(3)"));
    }

    #[test]
    fn outer_orders() {
        assert_eq!(out("PSL2(7)"), 2);
        assert_eq!(out("PSL3(4)"), 12);
        assert_eq!(out("PSU3(8)"), 18);
        assert_eq!(out("Sp6(2)"), 1);
        assert_eq!(out("PO8+(3)"), 24);
        assert_eq!(out("O8+(2)"), 6);
        assert!(matches!(out_order(&parse_family("A5").unwrap()), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_family("PSL2(6)").is_err());
        assert!(parse_family("XYZ3(2)").is_err());
        assert!(parse_family("M12").is_err());
    }
}
