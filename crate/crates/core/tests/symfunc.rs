use hecke_core::symfunc::{
    character_table, character_value, jacobi_trudi, jacobi_trudi_matrix, multilinear_sum, z_matrix, PlethysmMode,
    SymContext,
};
use hecke_core::{Basis, Engine, HeckeElement, LaurentQ, LaurentRat, Partition, Permutation, SymFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn part(s: &str) -> Partition {
    if s.is_empty() {
        Partition::empty()
    } else {
        s.parse().unwrap()
    }
}

fn q(c: &[i64]) -> LaurentRat {
    LaurentQ::from_q_coeffs(c).to_rational()
}

fn el(basis: Basis, lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(basis, lambda)
}

fn int(x: i64) -> LaurentRat {
    LaurentRat::from_int(x)
}

fn sym(basis: Basis, terms: &[(&str, LaurentRat)]) -> SymFunc {
    let deg = part(terms[0].0).size();
    SymFunc::from_terms(basis, deg, terms.iter().map(|(l, c)| (part(l), c.clone()))).unwrap()
}

fn random_sym(basis: Basis, n: usize) -> impl Strategy<Value = SymFunc> {
    let parts = Partition::all(n);
    prop::collection::vec((0..parts.len(), -4i64..5, 0i32..3), 0..5).prop_map(move |ts| {
        SymFunc::from_terms(basis, n, ts.into_iter().map(|(i, c, e)| (parts[i].clone(), LaurentRat::from_int(c).shift(e)))).unwrap()
    })
}

#[test]
fn classical_identities() {
    let mut ctx = SymContext::default();
    for n in 1..=6 {
        let row = Partition::new(vec![n]).unwrap();
        let col = row.conjugate();
        assert_eq!(ctx.change_basis(&el(Basis::E, &row), Basis::S).unwrap(), el(Basis::S, &col));
        assert_eq!(ctx.change_basis(&el(Basis::H, &row), Basis::S).unwrap(), el(Basis::S, &row));
        assert!(ctx.newton_check(n).unwrap());
    }
    let p2 = ctx.change_basis(&el(Basis::P, &part("2")), Basis::S).unwrap();
    assert_eq!(p2, sym(Basis::S, &[("2", int(1)), ("1,1", int(-1))]));
    assert_eq!(ctx.omega(&el(Basis::E, &part("4"))).unwrap(), el(Basis::H, &part("4")));
    assert_eq!(ctx.omega(&el(Basis::S, &part("2,1"))).unwrap(), el(Basis::S, &part("2,1")));
    assert_eq!(ctx.omega(&el(Basis::P, &part("2,1"))).unwrap(), sym(Basis::P, &[("2,1", int(-1))]));
}

#[test]
fn hall_pairing() {
    let mut ctx = SymContext::default();
    for n in 1..=5 {
        for a in Partition::all(n) {
            for b in Partition::all(n) {
                let expected = if a == b { int(1) } else { int(0) };
                let (sa, sb) = (el(Basis::S, &a), el(Basis::S, &b));
                assert_eq!(ctx.hall_inner_product(&sa, &sb).unwrap(), expected);
                let (ha, mb) = (el(Basis::H, &a), el(Basis::M, &b));
                assert_eq!(ctx.hall_inner_product(&ha, &mb).unwrap(), expected);
            }
        }
    }
    let a = el(Basis::S, &part("2"));
    let b = el(Basis::S, &part("3"));
    assert!(ctx.hall_inner_product(&a, &b).is_err());
}

#[test]
fn character_tables() {
    for n in 1..=8 {
        let t = character_table(n).unwrap();
        let parts = t.partitions().to_vec();
        let trivial = Partition::new(vec![n]).unwrap();
        let sign = trivial.conjugate();
        for mu in &parts {
            assert_eq!(t.value(&trivial, mu).unwrap(), &BigInt::from(1));
            assert_eq!(t.value(&sign, mu).unwrap(), &BigInt::from(mu.sign()));
            let sum: BigInt = parts.iter().map(|l| t.value(l, mu).unwrap().pow(2)).sum();
            assert_eq!(sum, mu.z());
        }
    }
    assert_eq!(character_value(&part("2,1"), &part("1,1,1")).unwrap(), BigInt::from(2));
}

#[test]
fn skew_schur_and_immanants() {
    let mut ctx = SymContext::default();
    assert_eq!(jacobi_trudi(&part("2,1"), &Partition::empty()).unwrap(), sym(Basis::H, &[("2,1", int(1)), ("3", int(-1))]));
    assert_eq!(jacobi_trudi(&part("4"), &Partition::empty()).unwrap(), el(Basis::H, &part("4")));
    let trivial = jacobi_trudi(&part("3,1"), &part("3,1")).unwrap();
    assert_eq!(trivial, SymFunc::scalar(Basis::H, int(1)));
    // immanants of Jacobi-Trudi matrices: the sign character gives the skew Schur function
    for (l, m) in [("3,2", "1"), ("3,3,1", "2,1"), ("4,2,1", ""), ("2,2", "1")] {
        let (l, m) = (part(l), part(m));
        let jt = jacobi_trudi_matrix(&l, &m).unwrap();
        let k = jt.len();
        let sign = Partition::new(vec![1; k]).unwrap();
        let a = ctx.immanant(&sign, &jt).unwrap();
        let b = jacobi_trudi(&l, &m).unwrap();
        assert_eq!(ctx.change_basis(&a, Basis::S).unwrap(), ctx.change_basis(&b, Basis::S).unwrap());
    }
    let perm2 = ctx.immanant(&part("2"), &z_matrix(2)).unwrap();
    assert_eq!(ctx.change_basis(&perm2, Basis::H).unwrap(), sym(Basis::H, &[("2", int(2))]));
    for n in 1..=4 {
        let z = z_matrix(n);
        let nfact: i64 = (1..=n as i64).product();
        for lam in Partition::all(n) {
            let imm = ctx.immanant(&lam, &z).unwrap();
            let expected = el(Basis::S, &lam).scale(&int(nfact));
            assert_eq!(ctx.change_basis(&imm, Basis::S).unwrap(), expected, "{}", lam);
        }
        assert_eq!(
            ctx.immanant(&Partition::new(vec![1; n]).unwrap(), &z).unwrap(),
            multilinear_sum(&z, true).unwrap()
        );
    }
    assert!(ctx.immanant(&part("8"), &z_matrix(8)).is_err());
}

#[test]
fn frobenius_of_3412_in_h() {
    let mut engine = Engine::default();
    let ch = engine.kl_frobenius(&"3412".parse().unwrap()).unwrap();
    let h = engine.sym().change_basis(&ch, Basis::H).unwrap();
    let expected = sym(Basis::H, &[("4", q(&[1, 2, 2, 2, 1])), ("3,1", q(&[0, 1, 2, 1])), ("2,2", q(&[0, 1, 2, 1]))]);
    assert_eq!(h, expected);
}

#[test]
fn frobenius_of_identity() {
    let mut engine = Engine::default();
    for n in 1..=5 {
        let ch = engine.frobenius_character(&HeckeElement::one(n)).unwrap();
        let nfact: i64 = (1..=n as i64).product();
        for lam in Partition::all(n) {
            let young: i64 = lam.parts().iter().map(|&k| (1..=k as i64).product::<i64>()).product();
            assert_eq!(ch.coeff(&lam), int(nfact / young));
        }
        let p = engine.sym().change_basis(&ch, Basis::P).unwrap();
        assert_eq!(p, el(Basis::P, &Partition::new(vec![1; n]).unwrap()));
    }
}

#[test]
fn frobenius_of_t_basis_at_one_is_power_sum() {
    let mut engine = Engine::default();
    for n in 1..=4 {
        for w in Permutation::all(n) {
            let ch = engine.frobenius_character(&HeckeElement::basis(&w)).unwrap().eval_one();
            let p = engine.sym().change_basis(&ch, Basis::P).unwrap();
            assert_eq!(p, el(Basis::P, &w.cycle_type()), "{}", w);
        }
    }
}

#[test]
fn kl_characters_are_schur_positive_n4() {
    let mut engine = Engine::default();
    for w in Permutation::all(4) {
        let ch = engine.kl_frobenius(&w).unwrap();
        let s = engine.sym().change_basis(&ch, Basis::S).unwrap();
        for (lam, c) in s.terms() {
            let c = c.to_integral().unwrap();
            assert!(c.is_unimodal_nonneg().unwrap(), "{} {}", w, lam);
            assert!(c.is_palindromic(w.length() as i32), "{} {}: {}", w, lam, c);
        }
    }
}

#[test]
fn trivial_coefficient_is_intersection_poincare() {
    let mut engine = Engine::default();
    for n in 1..=4 {
        let top = Partition::new(vec![n]).unwrap();
        for w in Permutation::all(n) {
            let e = engine.kl_basis_element(&w).unwrap();
            let mut expected = LaurentQ::zero();
            for (z, p) in e.terms() {
                expected += &p.shift(2 * z.length() as i32);
            }
            let ch = engine.kl_frobenius(&w).unwrap();
            let s = engine.sym().change_basis(&ch, Basis::S).unwrap();
            assert_eq!(s.coeff(&top), expected.to_rational());
        }
    }
}

#[test]
fn plethysm_examples() {
    let mut ctx = SymContext::default();
    let p1 = el(Basis::P, &part("1")).to_ratfunc();
    let d = ctx.plethysm_scale(&p1, PlethysmMode::Divide).unwrap();
    let c = d.coeff(&part("1"));
    assert!(c.to_laurent().is_none());
    assert_eq!(c.denominator(), &q(&[-1, 1]));
    let zero = SymFunc::<LaurentRat>::zero(Basis::S, 3).to_ratfunc();
    assert!(ctx.plethysm_scale(&zero, PlethysmMode::Divide).unwrap().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn basis_changes_round_trip(n in 1usize..=6, from in 0usize..5, to in 0usize..5, seed in any::<u64>()) {
        let mut ctx = SymContext::default();
        let parts = Partition::all(n);
        let (from, to) = (Basis::ALL[from], Basis::ALL[to]);
        let mut f = SymFunc::zero(from, n);
        let mut x = seed;
        for lam in &parts {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = (x >> 60) as i64 - 8;
            f = f.add(&el(from, lam).scale(&LaurentRat::from_int(c))).unwrap();
        }
        let g = ctx.change_basis(&f, to).unwrap();
        prop_assert_eq!(g.basis(), to);
        prop_assert_eq!(ctx.change_basis(&g, from).unwrap(), f);
    }

    #[test]
    fn omega_is_involution(f in random_sym(Basis::S, 5), b in 0usize..5) {
        let mut ctx = SymContext::default();
        let g = ctx.change_basis(&f, Basis::ALL[b]).unwrap();
        let once = ctx.omega(&g).unwrap();
        let back = ctx.omega(&once).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn plethysm_round_trip(f in random_sym(Basis::M, 4)) {
        let mut ctx = SymContext::default();
        let r = f.to_ratfunc();
        let down = ctx.plethysm_scale(&r, PlethysmMode::Divide).unwrap();
        let up = ctx.plethysm_scale(&down, PlethysmMode::Times).unwrap();
        let back = ctx.change_basis(&up.clear_denominators().unwrap(), Basis::M).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn hall_pairing_is_symmetric(f in random_sym(Basis::H, 4), g in random_sym(Basis::P, 4)) {
        let mut ctx = SymContext::default();
        prop_assert_eq!(ctx.hall_inner_product(&f, &g).unwrap(), ctx.hall_inner_product(&g, &f).unwrap());
        let scaled = f.scale_rational(&BigRational::from_integer(BigInt::from(3)));
        let three = ctx.hall_inner_product(&f, &g).unwrap().scale(&BigRational::from_integer(BigInt::from(3)));
        prop_assert_eq!(ctx.hall_inner_product(&scaled, &g).unwrap(), three);
    }
}
