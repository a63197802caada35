//! Serde mirrors of the core types and conversions in both directions.
//!
//! - Laurent polynomial: `{"v": {"<v-exponent>": "<coefficient>"}}`, with
//!   integer coefficients or `a/b` rationals written as strings.
//! - Hecke element: `{"n": n, "terms": [{"perm": [...], "coeff": ...}]}`,
//!   terms sorted by `(length, lex)`.
//! - Symmetric function: `{"basis": "h", "degree": n, "coeffs":
//!   [{"partition": [...], "coeff": ...}]}`, partitions lexicographically
//!   decreasing.
//! - Good-word dump: `{"w": [...], "good": [[0, 1, ...], ...]}`, sorted.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use hecke_core::laurent::Coeff;
use hecke_core::parabolic::BinaryWord;
use hecke_core::{Basis, HeckeElement, Laurent, Partition, Permutation, SymFunc};
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub v: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub perm: Vec<usize>,
    pub coeff: LaurentJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymTermJson {
    pub partition: Vec<usize>,
    pub coeff: LaurentJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: String,
    pub degree: usize,
    pub coeffs: Vec<SymTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodWordsJson {
    pub w: Vec<usize>,
    pub good: Vec<Vec<u8>>,
}

pub fn laurent_to_json<C: Coeff + Display>(p: &Laurent<C>) -> LaurentJson {
    LaurentJson { v: p.terms().map(|(e, c)| (e.to_string(), c.to_string())).collect() }
}

pub fn laurent_from_json<C: Coeff + FromStr>(j: &LaurentJson) -> Result<Laurent<C>> {
    let mut terms = Vec::with_capacity(j.v.len());
    for (e, c) in &j.v {
        let e: i32 = e.parse().map_err(|_| LabError::schema("Laurent polynomial", format!("exponent {:?}", e)))?;
        let c: C = c.parse().map_err(|_| LabError::schema("Laurent polynomial", format!("coefficient {:?}", c)))?;
        terms.push((e, c));
    }
    Ok(Laurent::from_terms(terms))
}

pub fn perm_from_json(v: &[usize]) -> Result<Permutation> {
    Ok(Permutation::new(v)?)
}

pub fn hecke_to_json(a: &HeckeElement) -> HeckeJson {
    HeckeJson {
        n: a.n(),
        terms: a.sorted_terms().into_iter().map(|(w, c)| TermJson { perm: w.to_vec(), coeff: laurent_to_json(c) }).collect(),
    }
}

pub fn hecke_from_json(j: &HeckeJson) -> Result<HeckeElement> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        terms.push((perm_from_json(&t.perm)?, laurent_from_json(&t.coeff)?));
    }
    Ok(HeckeElement::from_terms(j.n, terms)?)
}

/// A `(Permutation -> coefficient)` map in the Hecke-element layout.
pub fn expansion_to_json(n: usize, terms: &BTreeMap<Permutation, hecke_core::LaurentQ>) -> HeckeJson {
    let mut sorted: Vec<_> = terms.iter().collect();
    sorted.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
    HeckeJson { n, terms: sorted.into_iter().map(|(w, c)| TermJson { perm: w.to_vec(), coeff: laurent_to_json(c) }).collect() }
}

pub fn symfunc_to_json<C: Coeff + Display>(f: &SymFunc<Laurent<C>>) -> SymFuncJson
where
    Laurent<C>: hecke_core::symfunc::SymCoeff,
{
    SymFuncJson {
        basis: f.basis().symbol().to_string(),
        degree: f.degree(),
        coeffs: f.terms().map(|(l, c)| SymTermJson { partition: l.parts().to_vec(), coeff: laurent_to_json(c) }).collect(),
    }
}

pub fn symfunc_from_json(j: &SymFuncJson) -> Result<SymFunc> {
    let basis = Basis::from_str(&j.basis).map_err(|_| LabError::schema("symmetric function", format!("basis {:?}", j.basis)))?;
    let mut terms = Vec::with_capacity(j.coeffs.len());
    for t in &j.coeffs {
        terms.push((Partition::new(t.partition.clone())?, laurent_from_json(&t.coeff)?));
    }
    Ok(SymFunc::from_terms(basis, j.degree, terms)?)
}

pub fn good_words_to_json(w: &Permutation, good: &[BinaryWord]) -> GoodWordsJson {
    let mut good: Vec<Vec<u8>> = good.iter().map(|b| b.0.clone()).collect();
    good.sort();
    GoodWordsJson { w: w.to_vec(), good }
}

pub fn good_words_from_json(j: &GoodWordsJson) -> Result<(Permutation, Vec<BinaryWord>)> {
    let w = perm_from_json(&j.w)?;
    if j.good.iter().flatten().any(|&b| b > 1) {
        return Err(LabError::schema("good-word dump", "bits must be 0 or 1"));
    }
    Ok((w, j.good.iter().map(|b| BinaryWord(b.clone())).collect()))
}

pub fn to_string<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|source| LabError::Json { context: "serializing output".into(), source })
}

pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str, context: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|source| LabError::Json { context: context.to_string(), source })
}
