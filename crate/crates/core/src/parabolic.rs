//! Parabolic quotients `^J W`, the Deodhar action and induced characters.
//!
//! Two routes compute the character `c_J(sigma)` of a Bott-Samelson product
//! `prod (1 + T_{s_i})` induced from the trivial character of `H_J`:
//! fixed points of the maps `phi_{J,sigma,b}` on `^J W`, and good binary
//! words on all of `W`. They agree with the trace of the product acting on
//! the parabolic module.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::{check_generator, ParabolicSet, Permutation, Transposition, Word};
use crate::error::{Error, Result};
use crate::group::SymmetricGroup;
use crate::hecke::HeckeElement;
use crate::laurent::LaurentQ;

/// Minimal representatives of the right cosets `W_J w`, sorted by `(length, lex)`.
#[derive(Debug, Clone)]
pub struct ParabolicQuotient {
    j: ParabolicSet,
    reps: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
}

impl ParabolicQuotient {
    pub fn new(j: &ParabolicSet) -> Self {
        let mut reps: Vec<Permutation> =
            Permutation::all(j.n()).into_iter().filter(|w| j.is_minimal_representative(w)).collect();
        reps.sort_by_key(|w| (w.length(), w.clone()));
        let index = reps.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        ParabolicQuotient { j: j.clone(), reps, index }
    }

    pub fn j(&self) -> &ParabolicSet {
        &self.j
    }

    pub fn n(&self) -> usize {
        self.j.n()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn check_rep(&self, w: &Permutation) -> Result<usize> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: w.n() });
        }
        self.index_of(w).ok_or(Error::NotMinimalRepresentative)
    }

    /// `w ._J s`: `ws` when it is again a minimal representative, else `w`.
    pub fn dot_action(&self, w: &Permutation, s: usize) -> Result<Permutation> {
        self.check_rep(w)?;
        check_generator(s, self.n())?;
        Ok(dot(w, s, Some(&self.j)))
    }

    /// Right multiplication by `T_s` on the module with basis `^J W`:
    /// `q w` when `w` is fixed, `ws` when `ws > w`, and
    /// `q ws + (q - 1) w` when `ws < w`.
    pub fn hecke_dot_matrix(&self, s: usize) -> Result<DotMatrix> {
        check_generator(s, self.n())?;
        let q = LaurentQ::q_pow(1);
        let qm1 = LaurentQ::from_q_coeffs(&[-1, 1]);
        let rows = self
            .reps
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let x = dot(w, s, Some(&self.j));
                let k = self.index[&x];
                if k == i {
                    vec![(i, q.clone())]
                } else if x.length() > w.length() {
                    vec![(k, LaurentQ::one())]
                } else {
                    let mut r = vec![(k, q.clone()), (i, qm1.clone())];
                    r.sort_by_key(|e| e.0);
                    r
                }
            })
            .collect();
        Ok(DotMatrix { rows })
    }
}

/// Sparse square matrix; row `i` is the image of the `i`-th basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotMatrix {
    rows: Vec<Vec<(usize, LaurentQ)>>,
}

impl DotMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[(usize, LaurentQ)] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> LaurentQ {
        self.rows[i].iter().find(|e| e.0 == j).map(|e| e.1.clone()).unwrap_or_default()
    }

    pub fn trace(&self) -> LaurentQ {
        let mut acc = LaurentQ::zero();
        for i in 0..self.size() {
            acc += &self.entry(i, i);
        }
        acc
    }
}

/// `^J W` for `J` in `S_n`.
pub fn parabolic_quotient(j: &ParabolicSet) -> ParabolicQuotient {
    ParabolicQuotient::new(j)
}

/// `w ._J s`; with `j = None` simply `ws`.
fn dot(w: &Permutation, s: usize, j: Option<&ParabolicSet>) -> Permutation {
    let ws = w.right_mul_simple(s);
    match j {
        Some(j) if !j.is_minimal_representative(&ws) => w.clone(),
        _ => ws,
    }
}

/// Traces `tr_J(T_z)` for every `z` in `S_n`, indexed like [`SymmetricGroup`].
#[derive(Debug, Clone)]
struct TraceTable {
    traces: Vec<LaurentQ>,
}

impl TraceTable {
    fn new(group: &SymmetricGroup, quotient: &ParabolicQuotient) -> Result<Self> {
        let n = group.n();
        let mats: Vec<DotMatrix> = (1..n).map(|s| quotient.hecke_dot_matrix(s)).collect::<Result<_>>()?;
        let mut traces = vec![LaurentQ::zero(); group.len()];
        // v_z = u T_z, built as v_{z'} T_s along z = z' s with l(z') < l(z)
        let mut vecs: Vec<Vec<(u32, LaurentQ)>> = vec![Vec::new(); group.len()];
        for u in 0..quotient.len() {
            vecs[0] = vec![(u as u32, LaurentQ::one())];
            traces[0] += &LaurentQ::one();
            for z in 1..group.len() {
                let s = group.first_right_descent(z).expect("z is not the identity");
                let parent = group.right_mul(s, z);
                let mut acc: BTreeMap<u32, LaurentQ> = BTreeMap::new();
                for (i, c) in &vecs[parent] {
                    for (k, m) in mats[s - 1].row(*i as usize) {
                        *acc.entry(*k as u32).or_default() += &(c * m);
                    }
                }
                let v: Vec<(u32, LaurentQ)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if let Ok(pos) = v.binary_search_by_key(&(u as u32), |e| e.0) {
                    traces[z] += &v[pos].1;
                }
                vecs[z] = v;
            }
        }
        Ok(TraceTable { traces })
    }
}

/// Cache of trace tables per `(n, J)`, giving induced characters
/// `c_J(a) = sum_z a_z tr_J(T_z)` by a lookup per support element.
#[derive(Debug, Default, Clone)]
pub struct InducedCharacters {
    groups: BTreeMap<usize, SymmetricGroup>,
    tables: BTreeMap<ParabolicSet, TraceTable>,
}

impl InducedCharacters {
    pub fn new() -> Self {
        Self::default()
    }

    /// Trace of right multiplication by `a` on the parabolic module of `J`.
    pub fn induced_character(&mut self, a: &HeckeElement, j: &ParabolicSet) -> Result<LaurentQ> {
        let n = a.n();
        if j.n() != n {
            return Err(Error::SizeMismatch { left: n, right: j.n() });
        }
        let group = self.groups.entry(n).or_insert_with(|| SymmetricGroup::new(n));
        if !self.tables.contains_key(j) {
            let t = TraceTable::new(group, &ParabolicQuotient::new(j))?;
            self.tables.insert(j.clone(), t);
        }
        let table = &self.tables[j];
        let mut acc = LaurentQ::zero();
        for (z, c) in a.terms() {
            let idx = group.index(z).expect("same n");
            acc += &(c * &table.traces[idx]);
        }
        Ok(acc)
    }

    /// `tr_J(T_z)`.
    pub fn trace_of_basis(&mut self, z: &Permutation, j: &ParabolicSet) -> Result<LaurentQ> {
        self.induced_character(&HeckeElement::basis(z), j)
    }
}

/// [`InducedCharacters::induced_character`] without a shared cache.
pub fn induced_character(a: &HeckeElement, j: &ParabolicSet) -> Result<LaurentQ> {
    InducedCharacters::new().induced_character(a, j)
}

/// A word over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BinaryWord(pub Vec<u8>);

impl BinaryWord {
    pub fn zeros(len: usize) -> Self {
        BinaryWord(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|b|`, the number of ones.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// Every binary word of length `len`, lexicographic.
    pub fn all(len: usize) -> Vec<BinaryWord> {
        (0u64..(1u64 << len))
            .map(|m| BinaryWord((0..len).map(|k| ((m >> (len - 1 - k)) & 1) as u8).collect()))
            .collect()
    }

    fn check(&self, sigma: &Word) -> Result<()> {
        if self.len() != sigma.len() || self.0.iter().any(|&b| b > 1) {
            return Err(Error::WordLengthMismatch { word: sigma.len(), bits: self.len() });
        }
        Ok(())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", b)?;
        }
        f.write_str(")")
    }
}

/// A sequence of positive roots `gamma_{i,j}`, written as transpositions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RootSequence(pub Vec<Transposition>);

impl fmt::Display for RootSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", t)?;
        }
        f.write_str(")")
    }
}

fn phi_step(w: &Permutation, s: usize, bit: u8, j: Option<&ParabolicSet>) -> Permutation {
    let x = dot(w, s, j);
    let x_longer = x.length() > w.length();
    if (bit == 1) == x_longer {
        x
    } else {
        w.clone()
    }
}

fn check_inputs(w: &Permutation, sigma: &Word, j: Option<&ParabolicSet>) -> Result<()> {
    sigma.check(w.n())?;
    if let Some(j) = j {
        if j.n() != w.n() {
            return Err(Error::SizeMismatch { left: w.n(), right: j.n() });
        }
        if !j.is_minimal_representative(w) {
            return Err(Error::NotMinimalRepresentative);
        }
    }
    Ok(())
}

/// The intermediate values `w_1, ..., w_k` of `phi_{J,sigma,b}(w)`, where
/// `w_i = phi_{J,s_i,b_i}(w_{i-1})`. With `j = None` the maps act on all of
/// `W` with `phi_{s,1}(w) = max(ws, w)` and `phi_{s,0}(w) = min(ws, w)`.
pub fn phi_chain(w: &Permutation, sigma: &Word, b: &BinaryWord, j: Option<&ParabolicSet>) -> Result<Vec<Permutation>> {
    check_inputs(w, sigma, j)?;
    b.check(sigma)?;
    let mut cur = w.clone();
    let mut out = Vec::with_capacity(sigma.len());
    for (&s, &bit) in sigma.generators().iter().zip(&b.0) {
        cur = phi_step(&cur, s, bit, j);
        out.push(cur.clone());
    }
    Ok(out)
}

/// `phi_{J,sigma,b}(w)`.
pub fn phi(w: &Permutation, sigma: &Word, b: &BinaryWord, j: Option<&ParabolicSet>) -> Result<Permutation> {
    Ok(phi_chain(w, sigma, b, j)?.pop().unwrap_or_else(|| w.clone()))
}

/// `Bin_{J,sigma}(w)`: binary words `b` with `phi_{J,sigma,b}(w) = w`.
pub fn bin_set(w: &Permutation, sigma: &Word, j: &ParabolicSet) -> Result<Vec<BinaryWord>> {
    check_inputs(w, sigma, Some(j))?;
    let mut out = Vec::new();
    let mut bits = Vec::with_capacity(sigma.len());
    bin_rec(w, w, sigma.generators(), Some(j), &mut bits, &mut |b| out.push(BinaryWord(b.to_vec())));
    Ok(out)
}

fn bin_rec(
    target: &Permutation,
    cur: &Permutation,
    rest: &[usize],
    j: Option<&ParabolicSet>,
    bits: &mut Vec<u8>,
    emit: &mut dyn FnMut(&[u8]),
) {
    let Some((&s, tail)) = rest.split_first() else {
        if cur == target {
            emit(bits);
        }
        return;
    };
    for bit in 0..=1u8 {
        bits.push(bit);
        bin_rec(target, &phi_step(cur, s, bit, j), tail, j, bits, emit);
        bits.pop();
    }
}

/// `c_J(sigma) = sum_{w in ^J W} sum_{b in Bin_{J,sigma}(w)} q^{|b|}`.
pub fn bott_samelson_character(n: usize, sigma: &Word, j: &ParabolicSet) -> Result<LaurentQ> {
    sigma.check(n)?;
    if j.n() != n {
        return Err(Error::SizeMismatch { left: n, right: j.n() });
    }
    let mut counts = vec![0i64; sigma.len() + 1];
    for w in Permutation::all(n).into_iter().filter(|w| j.is_minimal_representative(w)) {
        let mut bits = Vec::with_capacity(sigma.len());
        bin_rec(&w, &w, sigma.generators(), Some(j), &mut bits, &mut |b| {
            counts[b.iter().filter(|&&x| x == 1).count()] += 1
        });
    }
    Ok(LaurentQ::from_q_coeffs(&counts))
}

/// `Good(J, sigma, w)`: words `b` with `phi_{sigma,b}(w) = w` such that
/// every left descent `s` of `w` in `J` has a position `i` with
/// `w_{i-1} s_i = s w_{i-1}`.
pub fn good_words(w: &Permutation, sigma: &Word, j: &ParabolicSet) -> Result<Vec<BinaryWord>> {
    check_inputs(w, sigma, None)?;
    if j.n() != w.n() {
        return Err(Error::SizeMismatch { left: w.n(), right: j.n() });
    }
    let mut out = Vec::new();
    for_each_good(w, sigma, j, &mut |b| out.push(BinaryWord(b.to_vec())));
    Ok(out)
}

fn for_each_good(w: &Permutation, sigma: &Word, j: &ParabolicSet, emit: &mut dyn FnMut(&[u8])) {
    let needed: Vec<usize> = w.left_descents().into_iter().filter(|&s| j.contains(s)).collect();
    let full: u32 = (1u32 << needed.len()) - 1;
    let mut bits = Vec::with_capacity(sigma.len());
    good_rec(w, w, sigma.generators(), &needed, 0, full, &mut bits, emit);
}

#[allow(clippy::too_many_arguments)]
fn good_rec(
    target: &Permutation,
    cur: &Permutation,
    rest: &[usize],
    needed: &[usize],
    seen: u32,
    full: u32,
    bits: &mut Vec<u8>,
    emit: &mut dyn FnMut(&[u8]),
) {
    let Some((&si, tail)) = rest.split_first() else {
        if seen == full && cur == target {
            emit(bits);
        }
        return;
    };
    let right = cur.right_mul_simple(si);
    let mut seen = seen;
    for (k, &s) in needed.iter().enumerate() {
        if right == cur.left_mul_simple(s) {
            seen |= 1 << k;
        }
    }
    for bit in 0..=1u8 {
        bits.push(bit);
        good_rec(target, &phi_step(cur, si, bit, None), tail, needed, seen, full, bits, emit);
        bits.pop();
    }
}

/// Whether `b` is good for `w`.
pub fn is_good_word(w: &Permutation, sigma: &Word, b: &BinaryWord, j: &ParabolicSet) -> Result<bool> {
    b.check(sigma)?;
    Ok(good_words(w, sigma, j)?.contains(b))
}

/// `c'_J(sigma) = sum_{w in W} sum_{b in Good(J, sigma, w)} q^{|b|}`.
pub fn good_word_character(n: usize, sigma: &Word, j: &ParabolicSet) -> Result<LaurentQ> {
    sigma.check(n)?;
    if j.n() != n {
        return Err(Error::SizeMismatch { left: n, right: j.n() });
    }
    let mut counts = vec![0i64; sigma.len() + 1];
    for w in Permutation::all(n) {
        for_each_good(&w, sigma, j, &mut |b| counts[b.iter().filter(|&&x| x == 1).count()] += 1);
    }
    Ok(LaurentQ::from_q_coeffs(&counts))
}

/// `kappa_J(w, b) = (minimal representative of W_J w, b)` for a good `b`.
pub fn kappa(w: &Permutation, b: &BinaryWord, sigma: &Word, j: &ParabolicSet) -> Result<(Permutation, BinaryWord)> {
    if !is_good_word(w, sigma, b, j)? {
        return Err(Error::NotGoodWord);
    }
    Ok((j.factor(w).0, b.clone()))
}

/// `delta(sigma, J, w, b)`: for each position `j` with `b_j = 1`, the
/// transposition `t` with `t w_{j-1} = w_{j-1} s_j`.
pub fn derive_root_sequence(w: &Permutation, sigma: &Word, b: &BinaryWord, j: &ParabolicSet) -> Result<RootSequence> {
    if !is_good_word(w, sigma, b, j)? {
        return Err(Error::NotGoodWord);
    }
    let chain = phi_chain(w, sigma, b, None)?;
    let mut out = Vec::new();
    for (k, (&s, &bit)) in sigma.generators().iter().zip(&b.0).enumerate() {
        if bit == 1 {
            let prev = if k == 0 { w } else { &chain[k - 1] };
            let (x, y) = (prev.at(s), prev.at(s + 1));
            out.push(Transposition { i: x.min(y), j: x.max(y) });
        }
    }
    Ok(RootSequence(out))
}

/// Whether every root `gamma` in the inversion set `Phi(u)` either occurs in
/// `delta`, or for each simple root `alpha` of `J` with
/// `beta = gamma - alpha` a positive root outside `Phi(u)`, `beta` occurs in
/// `delta` before any occurrence of `alpha`.
pub fn is_good_sequence(delta: &RootSequence, u: &Permutation, j: &ParabolicSet) -> Result<bool> {
    if j.n() != u.n() {
        return Err(Error::SizeMismatch { left: u.n(), right: j.n() });
    }
    if !j.contains_element(u) {
        return Err(Error::NotInParabolicSubgroup);
    }
    let phi_u = u.left_inversions();
    let d = &delta.0;
    for gamma in &phi_u {
        if d.contains(gamma) {
            continue;
        }
        let (i, k) = (gamma.i, gamma.j);
        let mut cands = Vec::new();
        if k > i + 1 {
            cands.push((i, Transposition { i: i + 1, j: k }));
            cands.push((k - 1, Transposition { i, j: k - 1 }));
        }
        for (a, beta) in cands {
            if !j.contains(a) || phi_u.contains(&beta) {
                continue;
            }
            let alpha = Transposition::simple(a);
            let ok = d
                .iter()
                .position(|x| *x == beta)
                .is_some_and(|pos| !d[..pos].contains(&alpha));
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
