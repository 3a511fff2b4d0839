//! Integer helpers: valuations, gcd, primality, multiplicative order, and
//! primitive prime divisors.

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Largest `e` with `p^e | z`.
///
/// # Panics
/// If `z = 0` or `p < 2`.
pub fn vp(z: u128, p: u128) -> u32 {
    assert!(z >= 1 && p >= 2, "vp needs z ≥ 1 and p ≥ 2");
    let mut z = z;
    let mut e = 0;
    while z % p == 0 {
        z /= p;
        e += 1;
    }
    e
}

/// Deterministic Miller–Rabin; these bases are exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let n128 = n as u128;
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a as u128, d as u128, n128);
        if x == 1 || x == n128 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n128;
            if x == n128 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `q = p^f` with `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    let mut f = 0;
    while r % p == 0 {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p, f))
}

pub fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut r = 1u128;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Least `k ≥ 1` with `p^k ≡ 1 (mod l)`; `l` must be coprime to `p`.
pub fn multiplicative_order(p: u64, l: u64) -> u64 {
    assert!(l >= 2 && gcd(p as u128, l as u128) == 1);
    let mut x = p % l;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * p as u128) % l as u128) as u64;
        k += 1;
    }
    k
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Cyclotomic value `Φ_m(p)` from `p^m − 1 = ∏_{d | m} Φ_d(p)`, by
/// Möbius-free division over proper divisors. `None` if `p^m` overflows.
fn cyclotomic_value(p: u64, m: u32) -> Option<u128> {
    let mut vals: Vec<(u32, u128)> = Vec::new();
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        let mut v = (p as u128).checked_pow(d)? - 1;
        for &(e, phi) in &vals {
            if d % e == 0 {
                v /= phi;
            }
        }
        vals.push((d, v));
    }
    vals.last().map(|&(_, v)| v)
}

/// Least prime `ℓ` with `ℓ | p^m − 1` and `ℓ ∤ p^k − 1` for `1 ≤ k < m`,
/// or `None` when no such prime exists.
///
/// Every prime factor of `Φ_m(p)` not dividing `m` is primitive, and the
/// primitive ones are `≡ 1 (mod m)`.
///
/// # Panics
/// If `p` is not prime, `m < 2`, `p^m ≥ 2^128`, or the primitive part of
/// `Φ_m(p)` exceeds `u64`.
pub fn zsigmondy(p: u64, m: u32) -> Option<u64> {
    assert!(is_prime(p) && m >= 2, "zsigmondy needs p prime and m ≥ 2");
    let mut r = cyclotomic_value(p, m).expect("p^m must fit in 128 bits");
    for l in prime_factors(m as u64) {
        while r % l as u128 == 0 {
            r /= l as u128;
        }
    }
    if r == 1 {
        return None;
    }
    let r = u64::try_from(r).expect("primitive part of Φ_m(p) must fit in 64 bits");
    if is_prime(r) {
        return Some(r);
    }
    let step = m as u64;
    let mut l = step + 1;
    while (l as u128) * (l as u128) <= r as u128 {
        if r % l == 0 && is_prime(l) {
            return Some(l);
        }
        l += step;
    }
    Some(r)
}

/// Whether `l` is a primitive prime divisor of `p^m − 1`, checked directly.
pub fn is_primitive_divisor(p: u64, m: u32, l: u64) -> bool {
    if !is_prime(l) || l == p {
        return false;
    }
    let l = l as u128;
    pow_mod(p as u128, m as u128, l) == 1 && (1..m).all(|k| pow_mod(p as u128, k as u128, l) != 1)
}
