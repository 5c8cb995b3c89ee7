use catalan_core::hub::{decode, encode, transcode, Family};
use catalan_core::sequence::{rank, random_uniform, unrank, validate, CatalanSequence};
use catalan_core::trees::{decode_tree, encode_tree, extend_tree, strip_leaves};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_sequence(max_n: usize) -> impl Strategy<Value = CatalanSequence> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| random_uniform(n, seed))
}

fn arb_family() -> impl Strategy<Value = Family> {
    proptest::sample::select(Family::total().collect::<Vec<_>>())
}

proptest! {
    #[test]
    fn validate_agrees_with_altitude(bits in proptest::collection::vec(any::<bool>(), 0..40)) {
        let mut h: i64 = 0;
        let mut never_negative = true;
        for &b in &bits {
            h += if b { -1 } else { 1 };
            never_negative &= h >= 0;
        }
        let accepted = validate(&bits).is_ok();
        prop_assert_eq!(accepted, never_negative && h == 0);
        if let Ok(s) = validate(&bits) {
            let profile = s.altitude_profile();
            prop_assert_eq!(profile.heights().len(), bits.len() + 1);
            prop_assert_eq!(profile.heights().last(), Some(&0));
            if !s.is_empty() {
                prop_assert!(!s.bits()[0] && s.bits()[s.len() - 1]);
            }
        }
    }

    #[test]
    fn rank_unrank_inverse_large(s in arb_sequence(150)) {
        let k = rank(&s);
        prop_assert_eq!(unrank(s.semilength(), &k).unwrap(), s);
    }

    #[test]
    fn unrank_rank_inverse(n in 0usize..60, raw in any::<u128>()) {
        let total = catalan_core::counting::catalan_closed(n).into_value();
        let k = BigUint::from(raw) % &total;
        let s = unrank(n, &k).unwrap();
        prop_assert_eq!(rank(&s), k);
    }

    #[test]
    fn tree_codec_inverse(s in arb_sequence(300)) {
        let t = decode_tree(&s);
        prop_assert_eq!(t.node_count(), s.semilength());
        prop_assert_eq!(&encode_tree(&t), &s);
        prop_assert_eq!(strip_leaves(&extend_tree(&t)), t);
    }

    #[test]
    fn hub_round_trip(s in arb_sequence(40), f in arb_family(), g in arb_family()) {
        let text = decode(f, &s).unwrap();
        let other = transcode(f, g, &text).unwrap();
        prop_assert_eq!(encode(g, &other).unwrap().semilength(), s.semilength());
        prop_assert_eq!(transcode(g, f, &other).unwrap(), text);
    }
}

#[test]
fn hub_identity_exhaustive() {
    for n in 0..=6 {
        for s in catalan_core::sequence::enumerate(n).unwrap() {
            for f in Family::total() {
                let text = decode(f, &s).unwrap();
                assert_eq!(transcode(f, f, &text).unwrap(), text);
                for g in Family::total() {
                    let other = transcode(f, g, &text).unwrap();
                    assert_eq!(encode(g, &other).unwrap(), s);
                    assert_eq!(transcode(g, f, &other).unwrap(), text, "{f} -> {g}: {s}");
                }
            }
        }
    }
}

#[test]
fn count_methods_agree() {
    use catalan_core::counting::{catalan, Method};
    for n in [0, 1, 2, 17, 64, 150] {
        let closed = catalan(n, Method::Closed);
        for m in Method::ALL {
            assert_eq!(catalan(n, m), closed, "{} at {n}", m.name());
        }
    }
}
