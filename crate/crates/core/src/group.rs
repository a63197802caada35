//! `S_n` with its elements enumerated once and multiplication by simple
//! transpositions tabulated, so inner loops work on indices.

use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::Permutation;

/// Elements of `S_n` sorted by `(length, lex)`, with lookup tables.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    elems: Vec<Permutation>,
    lengths: Vec<u16>,
    /// lex rank -> position in `elems`
    by_rank: Vec<u32>,
    /// `left[s - 1][x] = index of s * elems[x]`
    left: Vec<Vec<u32>>,
    /// `right[s - 1][x] = index of elems[x] * s`
    right: Vec<Vec<u32>>,
}

fn lex_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        let mut elems = Permutation::all(n);
        let lens: Vec<usize> = elems.iter().map(|w| w.length()).collect();
        let mut order: Vec<usize> = (0..elems.len()).collect();
        order.sort_by(|&a, &b| lens[a].cmp(&lens[b]).then_with(|| elems[a].cmp(&elems[b])));
        let sorted: Vec<Permutation> = order.iter().map(|&k| elems[k].clone()).collect();
        elems = sorted;
        let lengths: Vec<u16> = elems.iter().map(|w| w.length() as u16).collect();
        let mut by_rank = vec![0u32; elems.len()];
        for (pos, w) in elems.iter().enumerate() {
            by_rank[lex_rank(w.entries())] = pos as u32;
        }
        let mut g = SymmetricGroup { n, elems, lengths, by_rank, left: Vec::new(), right: Vec::new() };
        for s in 1..n {
            let l: Vec<u32> = g.elems.iter().map(|w| g.index_unchecked(&w.left_mul_simple(s))).collect();
            let r: Vec<u32> = g.elems.iter().map(|w| g.index_unchecked(&w.right_mul_simple(s))).collect();
            g.left.push(l);
            g.right.push(r);
        }
        g
    }

    fn index_unchecked(&self, w: &Permutation) -> u32 {
        self.by_rank[lex_rank(w.entries())]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn element(&self, x: usize) -> &Permutation {
        &self.elems[x]
    }

    /// Position of `w`, or `None` for a permutation of a different size.
    pub fn index(&self, w: &Permutation) -> Option<usize> {
        (w.n() == self.n).then(|| self.index_unchecked(w) as usize)
    }

    pub fn length(&self, x: usize) -> usize {
        self.lengths[x] as usize
    }

    /// Index of `s w`.
    pub fn left_mul(&self, s: usize, x: usize) -> usize {
        self.left[s - 1][x] as usize
    }

    /// Index of `w s`.
    pub fn right_mul(&self, s: usize, x: usize) -> usize {
        self.right[s - 1][x] as usize
    }

    pub fn is_left_descent(&self, s: usize, x: usize) -> bool {
        self.lengths[self.left_mul(s, x)] < self.lengths[x]
    }

    pub fn is_right_descent(&self, s: usize, x: usize) -> bool {
        self.lengths[self.right_mul(s, x)] < self.lengths[x]
    }

    pub fn first_left_descent(&self, x: usize) -> Option<usize> {
        (1..self.n).find(|&s| self.is_left_descent(s, x))
    }

    pub fn first_right_descent(&self, x: usize) -> Option<usize> {
        (1..self.n).find(|&s| self.is_right_descent(s, x))
    }
}
