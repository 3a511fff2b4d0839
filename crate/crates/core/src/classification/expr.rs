//! Arithmetic expressions used by the table dataset, e.g.
//! `2^(3+6)*7^2*3`, `7*3*|S3|`, `q^3*(q^3-1)/gcd(2,q-1)`, `1+vp(f)`.
//!
//! Values are non-negative big integers. Subtraction below zero and
//! inexact division are errors. `|Name|` is the order of a named group;
//! `vp(x)` is the valuation at the variable `p`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::orders::parse_family;

pub type Vars = HashMap<&'static str, BigUint>;

pub fn eval(src: &str, vars: &Vars) -> Result<BigUint, String> {
    let mut p = Parser {
        s: src.as_bytes(),
        i: 0,
        vars,
    };
    let v = p.expr()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(format!("trailing input at {} in {src:?}", p.i));
    }
    Ok(v)
}

/// As [`eval`] with no variables, as `u128`.
pub fn eval_const(src: &str) -> Result<u128, String> {
    eval(src, &Vars::new())?
        .to_u128()
        .ok_or_else(|| format!("{src:?} exceeds u128"))
}

pub fn big_vp(z: &BigUint, p: u64) -> u32 {
    assert!(!z.is_zero() && p >= 2);
    let p = BigUint::from(p);
    let mut z = z.clone();
    let mut e = 0;
    while (&z % &p).is_zero() {
        z /= &p;
        e += 1;
    }
    e
}

fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), String> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(format!("expected '{}' at {}", c as char, self.i))
        }
    }

    fn expr(&mut self) -> Result<BigUint, String> {
        let mut v = self.term()?;
        loop {
            if self.eat(b'+') {
                v += self.term()?;
            } else if self.eat(b'-') {
                let r = self.term()?;
                if r > v {
                    return Err("negative intermediate value".into());
                }
                v -= r;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<BigUint, String> {
        let mut v = self.power()?;
        loop {
            if self.eat(b'*') {
                v *= self.power()?;
            } else if self.eat(b'/') {
                let d = self.power()?;
                if d.is_zero() || !(&v % &d).is_zero() {
                    return Err(format!("inexact division {v}/{d}"));
                }
                v /= d;
            } else {
                return Ok(v);
            }
        }
    }

    fn power(&mut self) -> Result<BigUint, String> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.power()?;
            let e = e.to_u32().ok_or("exponent too large")?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BigUint, String> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'|') => {
                self.i += 1;
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i] != b'|' {
                    self.i += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.i]).map_err(|e| e.to_string())?;
                self.expect(b'|')?;
                let fam = parse_family(name.trim()).map_err(|e| e.to_string())?;
                fam.order()
                    .map(BigUint::from)
                    .ok_or_else(|| format!("order of {name} overflows"))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let digits = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                Ok(digits.parse::<BigUint>().map_err(|e| e.to_string())?)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_alphanumeric() {
                    self.i += 1;
                }
                let ident = std::str::from_utf8(&self.s[start..self.i]).unwrap().to_string();
                if self.eat(b'(') {
                    let mut args = vec![self.expr()?];
                    while self.eat(b',') {
                        args.push(self.expr()?);
                    }
                    self.expect(b')')?;
                    return self.call(&ident, &args);
                }
                self.vars
                    .get(ident.as_str())
                    .cloned()
                    .ok_or_else(|| format!("unbound variable {ident}"))
            }
            other => Err(format!("unexpected {:?} at {}", other.map(|c| c as char), self.i)),
        }
    }

    fn call(&self, f: &str, args: &[BigUint]) -> Result<BigUint, String> {
        match (f, args) {
            ("gcd", [a, b]) => Ok(gcd(a, b)),
            ("fact", [a]) => {
                let n = a.to_u32().ok_or("factorial argument too large")?;
                Ok((1..=n).fold(BigUint::one(), |acc, k| acc * k))
            }
            ("vp", [a]) => {
                if a.is_zero() {
                    return Err("vp(0)".into());
                }
                let p = self.vars.get("p").ok_or("vp needs p")?;
                let p = p.to_u64().ok_or("p too large")?;
                Ok(BigUint::from(big_vp(a, p)))
            }
            _ => Err(format!("unknown function {f}/{}", args.len())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(pairs: &[(&'static str, u64)]) -> Vars {
        pairs.iter().map(|&(k, v)| (k, BigUint::from(v))).collect()
    }

    #[test]
    fn constants() {
        assert_eq!(eval_const("7").unwrap(), 7);
        assert_eq!(eval_const("2^(3+6)*7^2*3").unwrap(), 512 * 49 * 3);
        assert_eq!(eval_const("3^(1+2)*2*|A4|").unwrap(), 27 * 2 * 12);
        assert_eq!(eval_const("7*3*|S3|").unwrap(), 126);
        assert_eq!(eval_const("2^3^2").unwrap(), 512);
        assert_eq!(eval_const("|PSL2(5^2)|*2").unwrap(), 15600);
        assert!(eval_const("7/2").is_err());
        assert!(eval_const("1-2").is_err());
        assert!(eval_const("(1").is_err());
        assert!(eval_const("|Foo|").is_err());
    }

    #[test]
    fn variables_and_functions() {
        let v = vars(&[("q", 9), ("p", 3), ("f", 2)]);
        assert_eq!(eval("q^3*(q^3-1)/gcd(2,q-1)", &v).unwrap(), BigUint::from(729u32 * 728 / 2));
        assert_eq!(eval("1+vp(f)", &v).unwrap(), BigUint::from(1u32));
        assert_eq!(eval("fact(2+gcd(2,q-1))*f", &v).unwrap(), BigUint::from(48u32));
        assert!(eval("m", &v).is_err());
    }
}
