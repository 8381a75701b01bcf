//! Property-based invariants for the ordinal and club cores.

use proptest::prelude::*;

use cskit::club::{rel_sq, rel_sq_chi, rel_sq_x, Club};
use cskit::ord::{CardinalTag, Ordinal};

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

/// Random CNF ordinals below w^4 with small coefficients.
fn arb_ordinal() -> impl Strategy<Value = Ordinal> {
    // exponents 0..=3, coefficients 1..=5, up to 4 terms
    proptest::collection::vec((0u64..4, 1u64..6), 0..4).prop_map(|mut terms| {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        terms.dedup_by_key(|t| t.0);
        let terms = terms
            .into_iter()
            .map(|(e, c)| (Ordinal::from_nat(e), c))
            .collect();
        Ordinal::from_terms(terms)
    })
}

/// Random small clubs with mixed segment shapes.
fn arb_club() -> impl Strategy<Value = Club> {
    prop_oneof![
        // finite explicit
        proptest::collection::vec(0u64..40, 0..8)
            .prop_map(|v| Club::from_members(v.into_iter().map(Ordinal::from_nat).collect())),
        // omega tails
        (0u64..6, 1u64..4).prop_map(|(b, s)| Club::arithmetic(
            Ordinal::from_nat(b),
            Ordinal::from_nat(s),
            Ordinal::omega()
        )),
        // full intervals
        (1u64..4).prop_map(|k| Club::full_below(o("w").mul(&Ordinal::from_nat(k)))),
        // stacked: evens then a point then a tail
        (1u64..4, 1u64..3).prop_map(|(k, s)| {
            let lim = o("w").mul(&Ordinal::from_nat(k));
            Club::arithmetic(Ordinal::from_nat(0), Ordinal::from_nat(2), Ordinal::omega())
                .union(&Club::singleton(o("w")))
                .unwrap()
                .union(&Club::arithmetic(
                    lim.add(&Ordinal::from_nat(1)),
                    Ordinal::from_nat(s),
                    Ordinal::omega(),
                ))
                .unwrap()
        }),
        // canonical fundamental clubs
        (1u64..4).prop_map(|k| Club::fundamental(&Ordinal::omega_pow(Ordinal::from_nat(k))).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn add_is_associative(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn mul_is_associative(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn add_strictly_monotone_right(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        if b < c {
            prop_assert!(a.add(&b) < a.add(&c));
        }
    }

    #[test]
    fn mul_left_distributes(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn division_law(a in arb_ordinal(), d in arb_ordinal()) {
        if !d.is_zero() {
            let (q, r) = a.div_rem(&d);
            prop_assert_eq!(d.mul(&q).add(&r), a);
            prop_assert!(r < d);
        }
    }

    #[test]
    fn string_roundtrip(a in arb_ordinal()) {
        let s = a.to_string();
        let back: Ordinal = s.parse().unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// index and otp agree: every indexed element is a member, in order.
    #[test]
    fn index_otp_roundtrip(c in arb_club()) {
        let otp = c.otp();
        let mut last: Option<Ordinal> = None;
        for j in [o("0"), o("1"), o("3"), o("w"), o("w+2")] {
            if j < otp {
                let x = c.index(&j).unwrap();
                prop_assert!(c.contains(&x));
                if let Some(prev) = &last {
                    prop_assert!(&x > prev);
                }
                last = Some(x);
            }
        }
    }

    /// membership is consistent with sup_below: members strictly dominate
    /// the sup of their predecessors unless they accumulate them.
    #[test]
    fn membership_supbelow_consistency(c in arb_club(), n in 0u64..60) {
        let x = Ordinal::from_nat(n);
        if c.contains(&x) {
            let sb = c.sup_below(&x);
            prop_assert!(sb <= x);
            // either a proper gap below, or x is an accumulation point
            // (x = 0 only reaches sb == x through the empty-sup convention)
            if sb == x && !x.is_zero() {
                prop_assert!(c.acc().contains(&x));
            } else {
                prop_assert!(!c.acc().contains(&x));
            }
        }
    }

    /// closure is idempotent on every sampled club.
    #[test]
    fn closure_idempotent(c in arb_club()) {
        let cl = c.cl().unwrap();
        prop_assert!(cl.cl().unwrap().eq_club(&cl).unwrap());
    }

    /// the initial-segment relation implies both weakenings.
    #[test]
    fn sq_implies_weakenings(c in arb_club(), n in 1u64..30) {
        let d = c.restrict(&Ordinal::from_nat(n));
        prop_assert!(rel_sq(&d, &c).unwrap());
        prop_assert!(rel_sq_x(&d, &c, &CardinalTag::Aleph0).unwrap());
        prop_assert!(rel_sq_chi(&d, &c, &CardinalTag::Aleph0).unwrap());
    }

    /// acc and nacc partition the membership on a probe range.
    #[test]
    fn acc_nacc_partition(c in arb_club(), n in 0u64..80) {
        let x = Ordinal::from_nat(n);
        let in_acc = c.acc().contains(&x);
        let in_nacc = c.nacc().contains(&x);
        prop_assert!(!(in_acc && in_nacc));
        prop_assert_eq!(c.contains(&x), in_acc || in_nacc);
    }
}
