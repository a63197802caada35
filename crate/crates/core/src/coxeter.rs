//! Symmetric group combinatorics in one-line notation.
//!
//! Everything here is 1-based to match the usual notation for `S_n`:
//! a permutation `w` is stored as `w(1) w(2) ... w(n)` and the simple
//! transposition `s_i` swaps `i` and `i + 1`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::symfunc::Partition;

/// An element of `S_n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Builds a permutation from 1-based one-line entries.
    pub fn new(entries: &[usize]) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation("n too large".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in entries {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(
                    entries.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                ));
            }
            seen[x] = true;
        }
        Ok(Permutation(entries.iter().map(|&x| x as u8).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// The longest element `w_0 = n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    /// The simple transposition `s_i` of `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_generator(i, n)?;
        Ok(Permutation::identity(n).right_mul_simple(i))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// Group law `(u w)(i) = u(w(i))`.
    pub fn multiply(&self, w: &Permutation) -> Result<Permutation> {
        if self.n() != w.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: w.n() });
        }
        Ok(Permutation(w.0.iter().map(|&x| self.0[x as usize - 1]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = (k + 1) as u8;
        }
        Permutation(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `w s_i`: swaps positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        Permutation(e)
    }

    /// `s_i w`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        self.left_mul_transposition(Transposition { i, j: i + 1 })
    }

    /// `t w`: swaps the values `t.i` and `t.j`.
    pub fn left_mul_transposition(&self, t: Transposition) -> Permutation {
        let (a, b) = (t.i as u8, t.j as u8);
        Permutation(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// Position of the value `x`, i.e. `w^{-1}(x)`.
    pub fn position(&self, x: usize) -> usize {
        self.0.iter().position(|&y| y as usize == x).unwrap() + 1
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.position(i + 1) < self.position(i)
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// Transpositions `t` with `l(tw) < l(w)`, sorted.
    ///
    /// In one-line notation `(i, j)` is a left inversion exactly when the
    /// value `j` occurs before the value `i`.
    pub fn left_inversions(&self) -> Vec<Transposition> {
        let n = self.n();
        let inv = self.inverse();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if inv.at(j) < inv.at(i) {
                    out.push(Transposition { i, j });
                }
            }
        }
        out
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.is_left_descent(i)).collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.is_right_descent(i)).collect()
    }

    /// Bruhat comparison `self <= w` by the rank-matrix criterion.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        if self.n() != w.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: w.n() });
        }
        Ok(bruhat_leq_unchecked(&self.0, &w.0))
    }

    /// Reduced word obtained by repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut gens = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.is_left_descent(i)) {
            gens.push(i);
            w = w.left_mul_simple(i);
        }
        Word(gens)
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.n();
        let n = self.n();
        if k > n {
            return false;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let matches = (0..k).all(|a| {
                (a + 1..k).all(|b| {
                    (self.0[idx[a]] < self.0[idx[b]]) == (pattern.0[a] < pattern.0[b])
                })
            });
            if matches {
                return true;
            }
            // next k-subset in lex order
            let mut i = k;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] < n - k + i {
                    break;
                }
                if i == 0 {
                    return false;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    pub fn avoids_patterns(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }

    /// Avoids 3412 and 4231.
    pub fn is_smooth(&self) -> bool {
        let p1 = Permutation(vec![3, 4, 1, 2]);
        let p2 = Permutation(vec![4, 2, 3, 1]);
        self.avoids_patterns(&[p1, p2])
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.0[k] as usize - 1;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub(crate) fn bruhat_leq_unchecked(u: &[u8], w: &[u8]) -> bool {
    // u <= w iff #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
    let n = u.len();
    let mut cu = vec![0usize; n + 2];
    let mut cw = vec![0usize; n + 2];
    for i in 0..n {
        for c in &mut cu[1..=u[i] as usize] {
            *c += 1;
        }
        for c in &mut cw[1..=w[i] as usize] {
            *c += 1;
        }
        if (1..=n).any(|j| cu[j] > cw[j]) {
            return false;
        }
    }
    true
}

pub(crate) fn check_generator(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::InvalidGenerator { index: i, n })
    } else {
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in &self.0 {
                write!(f, "{}", x)?;
            }
        } else {
            for (k, x) in self.0.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Contiguous digits (`3412`) or comma separated (`10,3,...`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(&entries)
    }
}

/// A word in the simple transpositions; entry `i` stands for `s_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(generators: Vec<usize>) -> Self {
        Word(generators)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generators(&self) -> &[usize] {
        &self.0
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|&i| check_generator(i, n))
    }

    /// The product `s_{a_1} s_{a_2} ... s_{a_k}` in `S_n`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        self.check(n)?;
        Ok(self
            .0
            .iter()
            .fold(Permutation::identity(n), |w, &i| w.right_mul_simple(i)))
    }

    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.evaluate(n)?.length() == self.len())
    }

    /// Every word of length `len` over the generators of `S_n`.
    pub fn all_of_length(n: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word(Vec::new())];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * (n - 1));
            for w in &out {
                for i in 1..n {
                    let mut g = w.0.clone();
                    g.push(i);
                    next.push(Word(g));
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str(")")
    }
}

/// The transposition `(i, j)`, identified with the positive root `e_i - e_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= j || j > n {
            return Err(Error::InvalidTransposition { i, j, n });
        }
        Ok(Transposition { i, j })
    }

    pub fn simple(i: usize) -> Self {
        Transposition { i, j: i + 1 }
    }

    /// Root height `j - i`.
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A subset `J` of the simple transpositions of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ParabolicSet {
    n: usize,
    generators: Vec<usize>,
}

impl ParabolicSet {
    pub fn new(n: usize, generators: &[usize]) -> Result<Self> {
        let mut gens: Vec<usize> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        for &g in &gens {
            check_generator(g, n)?;
        }
        Ok(ParabolicSet { n, generators: gens })
    }

    pub fn empty(n: usize) -> Self {
        ParabolicSet { n, generators: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        ParabolicSet { n, generators: (1..n).collect() }
    }

    /// `J_lambda`: every generator except the partial sums of `composition`,
    /// so that `W_J` is the Young subgroup `S_{lambda_1} x S_{lambda_2} x ...`.
    pub fn from_composition(composition: &[usize]) -> Result<Self> {
        let n: usize = composition.iter().sum();
        if n == 0 || composition.contains(&0) {
            return Err(Error::InvalidPartition("composition with zero part".into()));
        }
        let mut cuts = Vec::new();
        let mut acc = 0;
        for &p in composition {
            acc += p;
            cuts.push(acc);
        }
        Ok(ParabolicSet {
            n,
            generators: (1..n).filter(|g| !cuts.contains(g)).collect(),
        })
    }

    /// Every subset of the generators of `S_n`.
    pub fn all(n: usize) -> Vec<ParabolicSet> {
        let k = n.saturating_sub(1);
        (0u32..(1u32 << k))
            .map(|mask| ParabolicSet {
                n,
                generators: (1..n).filter(|g| mask & (1 << (g - 1)) != 0).collect(),
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, s: usize) -> bool {
        self.generators.binary_search(&s).is_ok()
    }

    /// Block sizes of the Young subgroup `W_J`.
    pub fn composition(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut size = 1;
        for g in 1..self.n {
            if self.contains(g) {
                size += 1;
            } else {
                out.push(size);
                size = 1;
            }
        }
        out.push(size);
        out
    }

    /// Whether `w` is the minimal element of its right coset `W_J w`.
    pub fn is_minimal_representative(&self, w: &Permutation) -> bool {
        self.generators.iter().all(|&s| !w.is_left_descent(s))
    }

    /// Whether `u` lies in `W_J`, i.e. preserves every block.
    pub fn contains_element(&self, u: &Permutation) -> bool {
        let mut start = 1;
        for size in self.composition() {
            let end = start + size;
            if (start..end).any(|i| {
                let x = u.at(i);
                x < start || x >= end
            }) {
                return false;
            }
            start = end;
        }
        true
    }

    /// Minimal representative of `W_J w` and the factor `u in W_J` with
    /// `w = u * rep`.
    pub fn factor(&self, w: &Permutation) -> (Permutation, Permutation) {
        let mut rep = w.clone();
        let mut u = Permutation::identity(w.n());
        while let Some(&s) = self.generators.iter().find(|&&s| rep.is_left_descent(s)) {
            rep = rep.left_mul_simple(s);
            u = u.right_mul_simple(s);
        }
        (rep, u)
    }
}

impl fmt::Display for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str("}")
    }
}

/// Nondecreasing `m: [n] -> [n]` with `m(j) >= j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HessenbergFunction(Vec<usize>);

impl HessenbergFunction {
    pub fn new(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidHessenberg("empty".into()));
        }
        for (k, &m) in values.iter().enumerate() {
            let j = k + 1;
            if m < j || m > n {
                return Err(Error::InvalidHessenberg(format_values(values)));
            }
            if k > 0 && m < values[k - 1] {
                return Err(Error::InvalidHessenberg(format_values(values)));
            }
        }
        Ok(HessenbergFunction(values.to_vec()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `m(j)` for `1 <= j <= n`.
    pub fn at(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    /// Every Hessenberg function of size `n` (Catalan many), lex order.
    pub fn all(n: usize) -> Vec<HessenbergFunction> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
            let j = cur.len() + 1;
            if j > n {
                out.push(HessenbergFunction(cur.clone()));
                return;
            }
            let lo = core::cmp::max(j, cur.last().copied().unwrap_or(1));
            for m in lo..=n {
                cur.push(m);
                rec(n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    /// The lexicographically greatest `w` with `w(i) <= m(i)` for all `i`.
    pub fn codominant(&self) -> Permutation {
        let n = self.n();
        let mut used = vec![false; n + 1];
        let mut out = Vec::with_capacity(n);
        for i in 1..=n {
            // all values used so far are <= m(i-1) <= m(i), and m(i) >= i, so one is free
            let v = (1..=self.at(i)).rev().find(|&v| !used[v]).unwrap();
            used[v] = true;
            out.push(v as u8);
        }
        Permutation(out)
    }
}

fn format_values(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_values(&self.0))
    }
}

/// Outcome of the skew-shape to Hessenberg translation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SkewHessenberg {
    Hessenberg(HessenbergFunction),
    /// The raw values fail `m(j) >= j`; the permutation set of the skew
    /// shape is empty. `None` marks a `j` for which no `i` qualified.
    Empty(Vec<Option<usize>>),
}

/// `m(j) = max{ i : i - lambda_i + mu_j - j <= 0 }` with both partitions
/// padded by zeros to length `n`.
pub fn hessenberg_from_skew(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<SkewHessenberg> {
    if lambda.len() > n || mu.len() > n {
        return Err(Error::InvalidPartition("partition longer than n".into()));
    }
    if !mu.is_contained_in(lambda) {
        return Err(Error::NotContained);
    }
    let part = |p: &Partition, i: usize| -> i64 { p.parts().get(i - 1).copied().unwrap_or(0) as i64 };
    let raw: Vec<Option<usize>> = (1..=n)
        .map(|j| {
            (1..=n)
                .filter(|&i| i as i64 - part(lambda, i) + part(mu, j) - j as i64 <= 0)
                .max()
        })
        .collect();
    if raw.iter().all(|x| x.is_some()) {
        let vals: Vec<usize> = raw.iter().map(|x| x.unwrap()).collect();
        if let Ok(h) = HessenbergFunction::new(&vals) {
            return Ok(SkewHessenberg::Hessenberg(h));
        }
    }
    Ok(SkewHessenberg::Empty(raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(p("213").multiply(&p("132")).unwrap(), p("231"));
        let w = p("3142");
        assert_eq!(Permutation::identity(4).multiply(&w).unwrap(), w);
        assert!(w.multiply(&w.inverse()).unwrap().is_identity());
        assert_eq!(
            p("12").multiply(&p("123")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn length_examples() {
        assert_eq!(p("4213").length(), 4);
        assert_eq!(p("1234").length(), 0);
        assert_eq!(p("4321").length(), 6);
    }

    #[test]
    fn left_inversions_examples() {
        let t = |i, j| Transposition { i, j };
        assert_eq!(p("4213").left_inversions(), vec![t(1, 2), t(1, 4), t(2, 4), t(3, 4)]);
        assert!(p("1234").left_inversions().is_empty());
        // brute force: t is a left inversion iff l(tw) < l(w)
        let w0 = p("4321");
        let brute: Vec<_> = (1..=4)
            .flat_map(|i| (i + 1..=4).map(move |j| t(i, j)))
            .filter(|&tr| w0.left_mul_transposition(tr).length() < w0.length())
            .collect();
        assert_eq!(brute.len(), 6);
        assert_eq!(w0.left_inversions(), brute);
    }

    #[test]
    fn left_descents_examples() {
        assert_eq!(p("4213").left_descents(), vec![1, 3]);
        assert!(p("1234").left_descents().is_empty());
        assert_eq!(p("2134").left_descents(), vec![1]);
    }

    #[test]
    fn bruhat_examples() {
        assert!(p("1342").bruhat_leq(&p("3412")).unwrap());
        assert!(p("3412").bruhat_leq(&p("3412")).unwrap());
        assert!(!p("4321").bruhat_leq(&p("1234")).unwrap());
        assert!(p("1234").bruhat_leq(&p("4321")).unwrap());
        assert!(p("12").bruhat_leq(&p("123")).is_err());
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(p("3412").reduced_word(), Word(vec![2, 1, 3, 2]));
        assert_eq!(p("3412").reduced_word().evaluate(4).unwrap(), p("3412"));
        assert!(p("1234").reduced_word().is_empty());
        assert_eq!(p("2134").reduced_word(), Word(vec![1]));
    }

    #[test]
    fn pattern_examples() {
        let pats = [p("3412"), p("4231")];
        assert!(!p("3412").avoids_patterns(&pats));
        assert!(p("1234").avoids_patterns(&pats));
        assert!(!p("45312").avoids_patterns(&pats));
        assert!(!p("4231").is_smooth());
        assert!(p("2413").contains_pattern(&p("12")));
        assert!(!p("4321").contains_pattern(&p("12")));
    }

    #[test]
    fn codominant_examples() {
        for n in 2..=7 {
            let mut vals: Vec<usize> = (2..=n).collect();
            vals.push(n);
            let m = HessenbergFunction::new(&vals).unwrap();
            let mut expect: Vec<usize> = (2..=n).collect();
            expect.push(1);
            assert_eq!(m.codominant(), Permutation::new(&expect).unwrap());
            let id = HessenbergFunction::new(&(1..=n).collect::<Vec<_>>()).unwrap();
            assert!(id.codominant().is_identity());
            let full = HessenbergFunction::new(&vec![n; n]).unwrap();
            assert_eq!(full.codominant(), Permutation::longest(n));
        }
    }

    #[test]
    fn hessenberg_validation() {
        assert!(HessenbergFunction::new(&[1, 1]).is_err());
        assert!(HessenbergFunction::new(&[3, 2, 3]).is_err());
        assert!(HessenbergFunction::new(&[2, 3, 2]).is_err());
        assert_eq!(HessenbergFunction::all(3).len(), 5);
        assert_eq!(HessenbergFunction::all(5).len(), 42);
    }

    #[test]
    fn skew_examples() {
        let part = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let hf = |v: &[usize]| SkewHessenberg::Hessenberg(HessenbergFunction::new(v).unwrap());
        assert_eq!(hessenberg_from_skew(&part(&[2, 2]), &part(&[1]), 2).unwrap(), hf(&[2, 2]));
        assert_eq!(hessenberg_from_skew(&part(&[3, 1]), &part(&[]), 2).unwrap(), hf(&[2, 2]));
        let lam = part(&[4, 2, 1]);
        assert_eq!(hessenberg_from_skew(&lam, &lam, 3).unwrap(), hf(&[1, 2, 3]));
        assert_eq!(
            hessenberg_from_skew(&part(&[1, 1, 1]), &part(&[1]), 2),
            Err(Error::InvalidPartition("partition longer than n".into()))
        );
        assert_eq!(hessenberg_from_skew(&part(&[1]), &part(&[2]), 2), Err(Error::NotContained));
        // with mu inside lambda the identity always qualifies, so the flag never fires
        for lam in Partition::all(5) {
            for mu in Partition::all_up_to(5) {
                if mu.is_contained_in(&lam) {
                    let r = hessenberg_from_skew(&lam, &mu, 5).unwrap();
                    assert!(matches!(r, SkewHessenberg::Hessenberg(_)));
                }
            }
        }
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(p("2341").cycle_type().parts(), &[4]);
        assert_eq!(p("1234").cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(p("2143").cycle_type().parts(), &[2, 2]);
    }

    #[test]
    fn parabolic_set_basics() {
        let j = ParabolicSet::from_composition(&[2, 2]).unwrap();
        assert_eq!(j.generators(), &[1, 3]);
        assert_eq!(j.composition(), vec![2, 2]);
        assert!(j.contains_element(&p("2143")));
        assert!(!j.contains_element(&p("1324")));
        let (rep, u) = j.factor(&p("4312"));
        assert_eq!(rep, p("3412"));
        assert_eq!(u.multiply(&rep).unwrap(), p("4312"));
        assert_eq!(ParabolicSet::all(4).len(), 8);
        assert!(ParabolicSet::new(4, &[4]).is_err());
    }

    #[test]
    fn parse_literals() {
        assert_eq!(p("3412").to_vec(), vec![3, 4, 1, 2]);
        let big: Permutation = "10,1,2,3,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(big.n(), 10);
        assert_eq!(alloc::format!("{}", big), "10,1,2,3,4,5,6,7,8,9");
        assert!("3312".parse::<Permutation>().is_err());
        assert!("3a12".parse::<Permutation>().is_err());
    }
}
