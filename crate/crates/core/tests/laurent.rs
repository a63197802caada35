use hecke_core::{LaurentQ, RatFunc};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-8i32..8, -20i64..20), 0..6).prop_map(|t| LaurentQ::from_terms(t.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn q(c: &[i64]) -> LaurentQ {
    LaurentQ::from_q_coeffs(c)
}

#[test]
fn arithmetic_examples() {
    assert_eq!(&q(&[-1, 1]) * &q(&[1, 1]), q(&[-1, 0, 1]));
    assert_eq!(LaurentQ::v_pow(1).pow(2), q(&[0, 1]));
    assert_eq!(q(&[0, 1]).bar(), LaurentQ::q_pow(-1));
    assert_eq!(q(&[1, 1]).bar(), &LaurentQ::q_pow(-1) + &LaurentQ::one());
}

#[test]
fn shape_predicates() {
    assert!(q(&[2, 6, 2]).is_palindromic(2));
    assert!(q(&[0, 1]).is_palindromic(2));
    assert!(!q(&[1, 1]).is_palindromic(0));
    assert!(q(&[1, 2, 2, 2, 1]).is_unimodal_nonneg().unwrap());
    assert!(q(&[1]).is_unimodal_nonneg().unwrap());
    assert!(!q(&[1, 0, 0, 1]).is_unimodal_nonneg().unwrap());
    assert!(LaurentQ::v_pow(1).is_unimodal_nonneg().is_err());
    assert!(q(&[1, 2, 1]).is_log_concave().unwrap());
    assert!(q(&[0, 1, 2, 1]).is_log_concave().unwrap());
    assert!(!q(&[1, 1, 3]).is_log_concave().unwrap());
    assert!(LaurentQ::q_pow(-1).is_log_concave().is_err());
}

#[test]
fn ratfunc_reduces() {
    let num = (&q(&[-1, 0, 1]) * &q(&[0, 3])).to_rational();
    let den = q(&[-1, 1]).to_rational();
    let r = RatFunc::new(num, den).unwrap();
    assert_eq!(r.to_laurent().unwrap(), (&q(&[1, 1]) * &q(&[0, 3])).to_rational());
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &LaurentQ::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a.clone());
    }

    #[test]
    fn bar_is_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
    }

    #[test]
    fn evaluation_at_one_is_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        prop_assert_eq!((&a + &b).eval_one(), a.eval_one() + b.eval_one());
    }

    #[test]
    fn rational_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_rational().to_integral().unwrap(), a.clone());
        let r = RatFunc::from_laurent(a.to_rational());
        prop_assert_eq!(r.to_laurent().unwrap(), a.to_rational());
    }

    #[test]
    fn ratfunc_field_ops(a in laurent(), b in laurent(), d in 1i64..4) {
        let den = LaurentQ::from_q_coeffs(&[-1, 1]).pow(d as u32).to_rational();
        let x = RatFunc::new(a.to_rational(), den.clone()).unwrap();
        let y = RatFunc::new(b.to_rational(), den.clone()).unwrap();
        let sum = &x + &y;
        let back = &sum * &RatFunc::from_laurent(den);
        prop_assert_eq!(back.to_laurent().unwrap(), (&a + &b).to_rational());
    }
}
