use proptest::prelude::*;

use skewbrace::brace::{
    brace_maps, find_isomorphism, image_subgroups, is_left_simple, left_ideals, make_brace_from_tables, BraceFingerprint,
    SkewBrace,
};
use skewbrace::classification::arith::{is_primitive_divisor, pow_mod};
use skewbrace::classification::{vp, zsigmondy};
use skewbrace::enumeration::{enumerate_braces, EnumerateOptions};
use skewbrace::group::{builtin_group, Bounds};
use skewbrace::hopf_galois::correspondence_report;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn relabel(b: &SkewBrace, sigma: &[usize]) -> SkewBrace {
    let n = b.order();
    let mut inv = vec![0; n];
    for (x, &y) in sigma.iter().enumerate() {
        inv[y] = x;
    }
    let table = |mul: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|c| sigma[mul(inv[a], inv[c])]).collect()).collect()
    };
    let dot = table(&|x, y| b.dot().mul(x, y));
    let circle = table(&|x, y| b.circle().mul(x, y));
    make_brace_from_tables(&dot, &circle, None).unwrap()
}

/// A permutation of `0..n` fixing 0.
fn fixing_zero(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|rest| {
        let mut v = vec![0];
        v.extend(rest);
        v
    })
}

fn corpus_brace() -> impl Strategy<Value = SkewBrace> {
    let names = ["C4", "V4", "S3", "C6", "D4", "Q8", "C4xC2"];
    (0..names.len(), any::<prop::sample::Index>()).prop_map(move |(i, k)| {
        let braces = enumerate_braces(&builtin_group(names[i]).unwrap(), &EnumerateOptions::default()).unwrap();
        braces[k.index(braces.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn vp_is_additive(a in 1u128..1 << 40, b in 1u128..1 << 40, i in 0usize..PRIMES.len()) {
        let p = PRIMES[i] as u128;
        prop_assert_eq!(vp(a * b, p), vp(a, p) + vp(b, p));
    }

    #[test]
    fn zsigmondy_is_least_primitive(i in 0usize..PRIMES.len(), m in 2u32..=12) {
        let p = PRIMES[i];
        let r = (p as u128).pow(m) - 1;
        match zsigmondy(p, m) {
            Some(l) => {
                prop_assert!(r % l as u128 == 0 && is_primitive_divisor(p, m, l));
                prop_assert!((2..l.min(100_000)).all(|k| r % k as u128 != 0 || !is_primitive_divisor(p, m, k)));
            }
            None => prop_assert!((m == 6 && p == 2) || (m == 2 && (p + 1).is_power_of_two())),
        }
    }

    #[test]
    fn descent_congruence(i in 0usize..PRIMES.len(), j in 0usize..PRIMES.len(), k in 1u128..4, n in 1u128..9) {
        let (p, l) = (PRIMES[i] as u128, PRIMES[j] as u128);
        let f = l * k;
        prop_assert_eq!(pow_mod(p, k * n, l), pow_mod(p, f * n, l));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn relabeling_preserves_invariants((b, sigma) in corpus_brace().prop_flat_map(|b| { let n = b.order(); (Just(b), fixing_zero(n)) })) {
        let r = relabel(&b, &sigma);
        prop_assert!(find_isomorphism(&b, &r).is_some());
        let bounds = Bounds::default();
        prop_assert_eq!(BraceFingerprint::of(&b, &bounds), BraceFingerprint::of(&r, &bounds));
        prop_assert_eq!(is_left_simple(&b).left_simple, is_left_simple(&r).left_simple);
        prop_assert_eq!(left_ideals(&b, &bounds).unwrap().len(), left_ideals(&r, &bounds).unwrap().len());
        let (ib, ir) = (image_subgroups(&b, &brace_maps(&b)), image_subgroups(&r, &brace_maps(&r)));
        prop_assert_eq!((ib.im_lambda.len(), ib.im_rho.len(), ib.gamma.len()), (ir.im_lambda.len(), ir.im_rho.len(), ir.gamma.len()));
    }

    #[test]
    fn hgs_invariants(b in corpus_brace()) {
        let r = correspondence_report(&b, &Bounds::default()).unwrap();
        prop_assert_eq!(r.orbit_sizes_sum(), b.order());
        prop_assert_eq!(&r.orbit_partition[0], &vec![0]);
        prop_assert_eq!(r.minimal, is_left_simple(&b).left_simple);
        prop_assert_eq!(r.minimal, r.image_size == 2 && r.degree > 1);
        let full: Vec<usize> = (0..b.order()).collect();
        prop_assert!(r.subgroup_rows.iter().any(|x| x.subgroup == vec![0] && x.is_left_ideal));
        prop_assert!(r.subgroup_rows.iter().any(|x| x.subgroup == full && x.is_left_ideal));
    }

    #[test]
    fn maps_verify_and_congruent(b in corpus_brace()) {
        let maps = brace_maps(&b);
        prop_assert!(maps.verify(&b).is_ok());
        prop_assert_eq!(maps.lambda_rho_congruent_mod_inner(&b), None);
        prop_assert!(image_subgroups(&b, &maps).identities_hold());
    }
}
