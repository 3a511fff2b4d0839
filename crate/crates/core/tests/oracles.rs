//! Independent computations checked against the closed formulas.

use skewbrace::classification::arith::is_primitive_divisor;
use skewbrace::classification::{out_order, psl2_order, vp, zsigmondy, Family, PrimePowerParam};
use skewbrace::group::{automorphism_group, builtin_group, Bounds};

/// `|SL_n(F_p)|` by counting matrices of determinant 1.
fn count_sl(n: usize, p: u64) -> u64 {
    let cells = n * n;
    let total = p.pow(cells as u32);
    let mut count = 0;
    let mut m = vec![0i64; cells];
    for code in 0..total {
        let mut c = code;
        for x in m.iter_mut() {
            *x = (c % p) as i64;
            c /= p;
        }
        if det_mod(&m, n, p as i64) == 1 {
            count += 1;
        }
    }
    count
}

fn det_mod(m: &[i64], n: usize, p: i64) -> i64 {
    if n == 1 {
        return m[0].rem_euclid(p);
    }
    let mut d = 0;
    for j in 0..n {
        let minor: Vec<i64> = (1..n)
            .flat_map(|r| (0..n).filter(move |&c| c != j).map(move |c| (r, c)))
            .map(|(r, c)| m[r * n + c])
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        d += sign * m[j] * det_mod(&minor, n - 1, p);
    }
    d.rem_euclid(p)
}

fn q(p: u64, f: u32) -> PrimePowerParam {
    PrimePowerParam::new(p, f).unwrap()
}

#[test]
fn sl_orders_match_counts() {
    for (n, p) in [(2usize, 2u64), (2, 3), (2, 5), (2, 7), (3, 2)] {
        let fam = Family::Sl { n: n as u32, q: q(p, 1) };
        assert_eq!(fam.order().unwrap(), count_sl(n, p) as u128, "SL{n}({p})");
    }
}

#[test]
fn psl2_orders_from_counts() {
    // the centre of SL2(p) has order (2, p−1)
    for p in [5u64, 7, 11] {
        assert_eq!(psl2_order(q(p, 1)), (count_sl(2, p) / 2) as u128);
    }
    assert_eq!(psl2_order(q(2, 2)), 60);
}

#[test]
fn out_orders_match_automorphism_search() {
    let a5 = builtin_group("A5").unwrap();
    let aut = automorphism_group(&a5, &Bounds::default()).unwrap();
    assert_eq!(aut.out_order() as u128, out_order(&Family::Psl { n: 2, q: q(5, 1) }).unwrap());
    assert_eq!(aut.out_order() as u128, out_order(&Family::Psl { n: 2, q: q(2, 2) }).unwrap());
}

#[test]
fn sp6_2_valuation_by_division() {
    let mut z = 1451520u128;
    let mut e = 0;
    while z % 2 == 0 {
        z /= 2;
        e += 1;
    }
    assert_eq!(vp(1451520, 2), e);
    assert_eq!(Family::Sp { dim: 6, q: q(2, 1) }.order(), Some(1451520));
}

/// `ℓ | p^m − 1` and `ℓ ∤ p^k − 1` for `k < m`, by direct division.
fn primitive_by_division(p: u64, m: u32, l: u64) -> bool {
    let l = l as u128;
    let minus_one = |k: u32| (p as u128).pow(k) - 1;
    minus_one(m) % l == 0 && (1..m).all(|k| minus_one(k) % l != 0)
}

fn prime_by_division(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d: &u64| d.saturating_mul(*d) <= n).all(|d| n % d != 0)
}

/// Bound for the brute-force search for a smaller primitive prime.
const MINIMALITY_BOUND: u64 = 100_000;

#[test]
fn zsigmondy_exceptions_for_small_primes() {
    let primes: Vec<u64> = (2..50u64).filter(|&n| prime_by_division(n)).collect();
    for &p in &primes {
        for m in 2..=12u32 {
            let got = zsigmondy(p, m);
            let exception = (m == 6 && p == 2) || (m == 2 && (p + 1).is_power_of_two());
            match got {
                None => {
                    assert!(exception, "p={p} m={m}");
                    let r = p.pow(m) - 1;
                    assert!((2..=r).all(|k| r % k != 0 || !prime_by_division(k) || !primitive_by_division(p, m, k)));
                }
                Some(l) => {
                    assert!(!exception, "p={p} m={m}");
                    assert!(primitive_by_division(p, m, l), "p={p} m={m} l={l}");
                    if l < 1 << 40 {
                        assert!(prime_by_division(l));
                    } else {
                        assert!(is_primitive_divisor(p, m, l));
                    }
                    let r = (p as u128).pow(m) - 1;
                    assert!((2..l.min(MINIMALITY_BOUND)).all(|k| r % k as u128 != 0 || !prime_by_division(k) || !primitive_by_division(p, m, k)));
                }
            }
        }
    }
}
