//! Acceptance suite: one timed check per criterion, one PASS/FAIL line each.
//! Exits non-zero when any criterion fails or overruns its time bound.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_core::chromatic::{chss_check, conjecture_scan, csf_q, llt_direct, llt_plethysm, IndifferenceGraph, ScanKind};
use hecke_core::hecke::{bott_samelson_product, springer_decomposition};
use hecke_core::parabolic::{bin_set, bott_samelson_character, good_word_character, good_words, kappa};
use hecke_core::{
    Basis, Engine, HeckeElement, HessenbergFunction, LaurentQ, LaurentRat, ParabolicQuotient, ParabolicSet, Partition,
    Permutation, SymFunc, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn q(c: &[i64]) -> LaurentQ {
    LaurentQ::from_q_coeffs(c)
}

fn qr(c: &[i64]) -> LaurentRat {
    q(c).to_rational()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| Word::all_of_length(n, l)).collect()
}

fn sym(basis: Basis, terms: &[(&str, LaurentRat)]) -> SymFunc {
    SymFunc::from_terms(basis, terms.iter().map(|(l, _)| part(l).size()).next().unwrap_or(0), terms.iter().map(|(l, c)| (part(l), c.clone()))).unwrap()
}

fn kl_ground_truth() -> Check {
    let mut engine = Engine::default();
    let t = engine.kl_table(4).map_err(|e| e.to_string())?;
    let poly = t.kl_polynomial(&p("1234"), &p("3412")).map_err(|e| e.to_string())?;
    ensure(poly == q(&[1, 1]), || format!("P_(1234,3412) = {}", poly))?;
    let mut expected = vec![(p("1234"), q(&[1, 1])), (p("1324"), q(&[1, 1]))];
    for w in ["2134", "1243", "1342", "1423", "2143", "3124", "2314", "1432", "3142", "2413", "3214", "3412"] {
        expected.push((p(w), q(&[1])));
    }
    let expected = HeckeElement::from_terms(4, expected).unwrap();
    let got = t.basis_element(&p("3412")).map_err(|e| e.to_string())?;
    ensure(got.len() == 14 && got == expected, || format!("q^2 C'_3412 = {}", got))?;
    Ok("P_(1234,3412) = 1+q and q^2 C'_3412 has the 14 expected terms".into())
}

fn induced_ground_truth() -> Check {
    let mut engine = Engine::default();
    let j = ParabolicSet::new(4, &[1, 3]).unwrap();
    let sigma = Word::new(vec![1, 2]);
    let expected = q(&[2, 6, 2]);
    let trace = engine.induced_character(&bott_samelson_product(4, &sigma).unwrap(), &j).map_err(|e| e.to_string())?;
    let good = good_word_character(4, &sigma, &j).map_err(|e| e.to_string())?;
    let fixed = bott_samelson_character(4, &sigma, &j).map_err(|e| e.to_string())?;
    ensure(trace == expected, || format!("trace gives {}", trace))?;
    ensure(good == expected, || format!("good words give {}", good))?;
    ensure(fixed == expected, || format!("fixed points give {}", fixed))?;
    Ok("c_J = 2+6q+2q^2 by trace, good words and fixed points".into())
}

fn trtr_case(engine: &mut Engine, n: usize, sigma: &Word, j: &ParabolicSet) -> std::result::Result<(), String> {
    let trace = engine.induced_character(&bott_samelson_product(n, sigma).unwrap(), j).map_err(|e| e.to_string())?;
    let good = good_word_character(n, sigma, j).map_err(|e| e.to_string())?;
    ensure(trace == good, || format!("n = {}, sigma = {}, J = {}: {} vs {}", n, sigma, j, trace, good))
}

fn trtr_suite() -> Check {
    let mut engine = Engine::default();
    let mut cases = 0;
    for n in [3, 4] {
        for j in ParabolicSet::all(n) {
            for sigma in words_up_to(n, 6) {
                trtr_case(&mut engine, n, &sigma, &j)?;
                cases += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let all_j = ParabolicSet::all(5);
    for _ in 0..200 {
        let len = rng.gen_range(0..=6);
        let sigma = Word::new((0..len).map(|_| rng.gen_range(1..5)).collect());
        let j = &all_j[rng.gen_range(0..all_j.len())];
        trtr_case(&mut engine, 5, &sigma, j)?;
        cases += 1;
    }
    Ok(format!("c'_J = c_J on {} cases (S_3, S_4 exhaustive, 200 seeded in S_5)", cases))
}

fn kappa_bijection() -> Check {
    let mut cases = 0;
    for n in 1..=4 {
        for j in ParabolicSet::all(n) {
            let quot = ParabolicQuotient::new(&j);
            for sigma in words_up_to(n, 5) {
                let mut image = BTreeSet::new();
                let mut count = 0;
                for w in Permutation::all(n) {
                    for b in good_words(&w, &sigma, &j).map_err(|e| e.to_string())? {
                        count += 1;
                        image.insert(kappa(&w, &b, &sigma, &j).map_err(|e| e.to_string())?);
                    }
                }
                let mut target = BTreeSet::new();
                for w in quot.reps() {
                    for b in bin_set(w, &sigma, &j).map_err(|e| e.to_string())? {
                        target.insert((w.clone(), b));
                    }
                }
                ensure(image.len() == count, || format!("kappa not injective: n = {}, sigma = {}, J = {}", n, sigma, j))?;
                ensure(image == target, || format!("kappa not onto: n = {}, sigma = {}, J = {}", n, sigma, j))?;
                cases += 1;
            }
        }
    }
    Ok(format!("kappa_J bijective on {} (n, J, sigma) cases", cases))
}

fn frobenius_ground_truth() -> Check {
    let mut engine = Engine::default();
    let ch = engine.kl_frobenius(&p("3412")).map_err(|e| e.to_string())?;
    let h = engine.sym().change_basis(&ch, Basis::H).map_err(|e| e.to_string())?;
    let expected = sym(Basis::H, &[("4", qr(&[1, 2, 2, 2, 1])), ("3,1", qr(&[0, 1, 2, 1])), ("2,2", qr(&[0, 1, 2, 1]))]);
    ensure(h == expected, || format!("ch(q^2 C'_3412) = {}", h))?;
    for w in Permutation::all(5) {
        let ch = engine.frobenius_character(&HeckeElement::basis(&w)).map_err(|e| e.to_string())?;
        let at_one = engine.sym().change_basis(&ch.eval_one(), Basis::P).map_err(|e| e.to_string())?;
        let expected = SymFunc::basis_element(Basis::P, &w.cycle_type());
        ensure(at_one == expected, || format!("ch(T_{}) at q = 1 is {}", w, at_one))?;
    }
    Ok("ch(q^2 C'_3412) matches in h; ch(T_w)(q=1) = p_cycle(w) on S_5".into())
}

fn chss() -> Check {
    let mut engine = Engine::default();
    let mut count = 0;
    for n in 1..=5 {
        for m in HessenbergFunction::all(n) {
            let r = chss_check(&m, &mut engine).map_err(|e| e.to_string())?;
            ensure(r.holds(), || format!("m = {}: {:?}", m, r.diff()))?;
            count += 1;
        }
    }
    let m = HessenbergFunction::new(&[2, 3, 4, 4]).unwrap();
    let csf = csf_q(&IndifferenceGraph::new(&m), engine.budget()).map_err(|e| e.to_string())?;
    let e = engine.sym().change_basis(&csf, Basis::E).map_err(|e| e.to_string())?;
    let expected = sym(Basis::E, &[("4", qr(&[1, 1, 1, 1])), ("3,1", qr(&[0, 1, 1])), ("2,2", qr(&[0, 1, 1]))]);
    ensure(e == expected, || format!("csf_q(G_(2,3,4,4)) = {}", e))?;
    let r = chss_check(&m, &mut engine).map_err(|e| e.to_string())?;
    let hecke_h = engine.sym().change_basis(&r.hecke_side, Basis::H).map_err(|e| e.to_string())?;
    let expected_h = sym(Basis::H, &[("4", qr(&[1, 1, 1, 1])), ("3,1", qr(&[0, 1, 1])), ("2,2", qr(&[0, 1, 1]))]);
    ensure(hecke_h == expected_h, || format!("ch(C'_(w_m)) for (2,3,4,4) = {}", hecke_h))?;
    Ok(format!("CHSS holds for all {} Hessenberg functions with n <= 5", count))
}

fn springer() -> Check {
    let mut engine = Engine::default();
    let t = engine.kl_table(4).map_err(|e| e.to_string())?;
    let mut words = 0;
    for len in 0..=6 {
        for sigma in Word::all_of_length(4, len) {
            if !sigma.is_reduced(4).unwrap() {
                continue;
            }
            let w = sigma.evaluate(4).unwrap();
            let d = springer_decomposition(4, &sigma, t).map_err(|e| e.to_string())?;
            ensure(d.get(&w).is_some_and(|c| c.is_one()), || format!("P_(sigma,w) != 1 for {}", sigma))?;
            for (u, c) in &d {
                let gap = (w.length() - u.length()) as i32;
                let pol = c.shift(-gap);
                ensure(pol.bar() == pol, || format!("{}: P_(sigma,{}) = {} not palindromic", sigma, u, pol))?;
                ensure(c.min_exp().is_some_and(|e| e >= 0) && c.has_nonnegative_coeffs(), || {
                    format!("{}: coefficient of C'_{} is {}", sigma, u, c)
                })?;
            }
            words += 1;
        }
    }
    Ok(format!("{} reduced words of S_4 decompose with P_(sigma,w) = 1, palindromic nonnegative P", words))
}

fn smoothness() -> Check {
    let mut engine = Engine::default();
    let mut checked = 0;
    for n in 1..=6 {
        let e = Permutation::identity(n);
        let t = engine.kl_table(n).map_err(|e| e.to_string())?;
        for w in Permutation::all(n) {
            let one = t.kl_polynomial(&e, &w).map_err(|e| e.to_string())?.is_one();
            ensure(one == w.is_smooth(), || format!("w = {}: P_(e,w) = 1 is {}, avoidance is {}", w, one, !one))?;
            checked += 1;
        }
    }
    Ok(format!("P_(e,w) = 1 iff w avoids 3412 and 4231 on all {} permutations with n <= 6", checked))
}

fn llt() -> Check {
    let mut engine = Engine::default();
    let got = llt_plethysm(&p("3412"), &mut engine).map_err(|e| e.to_string())?;
    let expected = sym(
        Basis::S,
        &[
            ("4", qr(&[1, 1])),
            ("3,1", qr(&[0, 3, 3])),
            ("2,2", qr(&[0, 1, 2, 1])),
            ("2,1,1", qr(&[0, 0, 3, 3])),
            ("1,1,1,1", qr(&[0, 0, 0, 1, 1])),
        ],
    );
    ensure(got == expected, || format!("LLT(3412) = {}", got))?;
    let mut count = 0;
    for n in 1..=5 {
        for m in HessenbergFunction::all(n) {
            let a = llt_plethysm(&m.codominant(), &mut engine).map_err(|e| e.to_string())?;
            let b = llt_direct(&m, engine.budget()).map_err(|e| e.to_string())?;
            let b = engine.sym().change_basis(&b, Basis::S).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("m = {}: {} vs {}", m, a, b))?;
            count += 1;
        }
    }
    Ok(format!("LLT(3412) matches; plethysm = direct for {} Hessenberg functions", count))
}

fn haiman() -> Check {
    let mut engine = Engine::default();
    for w in Permutation::all(5) {
        let ch = engine.kl_frobenius(&w).map_err(|e| e.to_string())?;
        let s = engine.sym().change_basis(&ch, Basis::S).map_err(|e| e.to_string())?;
        for (lam, c) in s.terms() {
            let c = c.to_integral().ok_or_else(|| format!("w = {}, s{}: non-integral {}", w, lam, c))?;
            let ok = c.is_q_polynomial()
                && c.is_palindromic(w.length() as i32)
                && c.is_unimodal_nonneg().unwrap_or(false);
            ensure(ok, || format!("w = {}, s{}: {}", w, lam, c))?;
        }
    }
    Ok("s-coefficients palindromic, unimodal, nonnegative for all w in S_5".into())
}

fn scans() -> Check {
    let mut engine = Engine::default();
    let mut summary = Vec::new();
    for kind in [ScanKind::HPositivity, ScanKind::LogConcavity] {
        for n in 1..=5 {
            let r = conjecture_scan(kind, n, &mut engine).map_err(|e| e.to_string())?;
            ensure(r.rows.len() == Permutation::all(n).len(), || format!("{} scan n = {} incomplete", kind, n))?;
            if n == 5 {
                summary.push(format!("{}: {} of {} fail", kind, r.failures().count(), r.rows.len()));
            }
        }
    }
    Ok(format!("scans completed, report only ({})", summary.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("KL ground truth", Duration::from_secs(1), kl_ground_truth),
        ("induced-character ground truth", Duration::from_secs(1), induced_ground_truth),
        ("trace equals good-word count", Duration::from_secs(120), trtr_suite),
        ("kappa bijection", Duration::from_secs(60), kappa_bijection),
        ("Frobenius ground truth", Duration::from_secs(30), frobenius_ground_truth),
        ("CHSS identity", Duration::from_secs(300), chss),
        ("Springer decomposition", Duration::from_secs(60), springer),
        ("smoothness criterion", Duration::from_secs(600), smoothness),
        ("LLT ground truth", Duration::from_secs(300), llt),
        ("Haiman positivity", Duration::from_secs(120), haiman),
        ("conjecture scans", Duration::from_secs(300), scans),
    ];
    let mut failed = 0;
    for (k, (name, bound, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if took <= *bound => ("PASS", d),
            Ok(d) => ("FAIL", format!("{} but took longer than {:?}", d, bound)),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{} criterion {}: {} [{:.2?} / {:?}] {}", status, k + 1, name, took, bound, detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
