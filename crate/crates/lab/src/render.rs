//! Plain-text and LaTeX renderings.
//!
//! LaTeX follows the usual display conventions: ascending powers of `q`,
//! `h_{3,1}` style subscripts and parentheses only around coefficients with
//! more than one term.

use std::fmt::{Display, Write};

use hecke_core::laurent::Coeff;
use hecke_core::{HeckeElement, Laurent, LaurentQ, Permutation, SymFunc};
use std::collections::BTreeMap;

/// A coefficient magnitude as LaTeX, `\frac{a}{b}` for rationals.
fn latex_number(mag: &str) -> String {
    match mag.split_once('/') {
        Some((a, b)) => format!("\\frac{{{}}}{{{}}}", a, b),
        None => mag.to_string(),
    }
}

fn latex_q_power(e: i32) -> String {
    match e {
        0 => String::new(),
        2 => "q".to_string(),
        _ if e % 2 != 0 => format!("q^{{{}/2}}", e),
        _ if (0..=18).contains(&e) => format!("q^{}", e / 2),
        _ => format!("q^{{{}}}", e / 2),
    }
}

pub fn laurent_latex<C: Coeff + Display>(p: &Laurent<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().enumerate() {
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        if e == 0 || mag != "1" {
            out.push_str(&latex_number(&mag));
        }
        out.push_str(&latex_q_power(e));
    }
    out
}

/// `coefficient * label` with the coefficient omitted when it is `1`,
/// bare when it is a single term and parenthesized otherwise.
fn latex_term<C: Coeff + Display>(c: &Laurent<C>, label: &str) -> String {
    let body = laurent_latex(c);
    if body == "1" {
        label.to_string()
    } else if body == "-1" {
        format!("-{}", label)
    } else if c.num_terms() == 1 {
        format!("{}{}", body, label)
    } else {
        format!("({}){}", body, label)
    }
}

fn join_signed(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k > 0 && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    out
}

fn partition_subscript(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn symfunc_latex<C: Coeff + Display>(f: &SymFunc<Laurent<C>>) -> String
where
    Laurent<C>: hecke_core::symfunc::SymCoeff,
{
    let sym = f.basis().symbol();
    join_signed(
        f.terms()
            .map(|(l, c)| {
                let label = if l.is_empty() { String::new() } else { format!("{}_{}", sym, partition_subscript(l.parts())) };
                if label.is_empty() {
                    laurent_latex(c)
                } else {
                    latex_term(c, &label)
                }
            })
            .collect(),
    )
}

/// Plain text with the same layout as LaTeX but `h(3,1)` labels.
pub fn symfunc_plain<C: Coeff + Display>(f: &SymFunc<Laurent<C>>) -> String
where
    Laurent<C>: hecke_core::symfunc::SymCoeff,
{
    let sym = f.basis().symbol();
    join_signed(
        f.terms()
            .map(|(l, c)| {
                let body = c.to_string();
                let label = format!("{}{}", sym, l);
                if body == "1" {
                    label
                } else if body == "-1" {
                    format!("-{}", label)
                } else if c.num_terms() == 1 {
                    format!("{}*{}", body, label)
                } else {
                    format!("({})*{}", body, label)
                }
            })
            .collect(),
    )
}

fn perm_subscript(w: &Permutation) -> String {
    format!("{{{}}}", w)
}

/// Terms `c_w X_w` in `(length, lex)` order, with `X` the given symbol.
pub fn expansion_latex(terms: &BTreeMap<Permutation, LaurentQ>, symbol: &str) -> String {
    let mut sorted: Vec<_> = terms.iter().collect();
    sorted.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
    join_signed(sorted.into_iter().map(|(w, c)| latex_term(c, &format!("{}_{}", symbol, perm_subscript(w)))).collect())
}

pub fn expansion_plain(terms: &BTreeMap<Permutation, LaurentQ>, symbol: &str) -> String {
    let mut sorted: Vec<_> = terms.iter().collect();
    sorted.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
    let mut out = String::new();
    for (w, c) in sorted {
        let _ = writeln!(out, "{}\t{}_{}", c, symbol, w);
    }
    out.trim_end().to_string()
}

pub fn hecke_map(a: &HeckeElement) -> BTreeMap<Permutation, LaurentQ> {
    a.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}
