//! Symmetric functions of fixed degree in the `e, h, p, m, s` bases.
//!
//! Coefficients are Laurent polynomials with rational coefficients, since
//! power sums need denominators. Basis changes all go through the Schur
//! basis: Kostka numbers come from Pieri's rule and characters from the
//! Murnaghan-Nakayama rule.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::coxeter::Permutation;
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::laurent::{factorial, LaurentQ, LaurentRat, RatFunc};
use crate::parabolic::InducedCharacters;

/// A weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic; output lists partitions in the
/// reverse of it, which refines dominance order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates a weakly decreasing list; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(join(&parts)));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `lambda_i` for `i >= 1`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// `self_i <= other_i` for all `i`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `(-1)^{n - l(lambda)}`, the sign of any permutation of this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`, the centralizer order.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut k = 0;
        while k < self.0.len() {
            let p = self.0[k];
            let mult = self.0[k..].iter().take_while(|&&x| x == p).count();
            acc *= factorial(mult);
            for _ in 0..mult {
                acc *= BigInt::from(p);
            }
            k += mult;
        }
        acc
    }

    /// Number of permutations of cycle type `lambda`, `n!/z_lambda`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.z()
    }

    /// Partitions of `n`, lexicographically decreasing: `(n), (n-1,1), ...`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of every size `0..=n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// Comma separated parts, optionally wrapped in parentheses.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.into()))?;
        Partition::new(parts)
    }
}

/// The classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Basis {
    E,
    H,
    P,
    M,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::E, Basis::H, Basis::P, Basis::M, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::M => "m",
            Basis::S => "s",
        }
    }

    /// `e`, `h` and `p` are multiplicative: `b_lambda = prod_i b_{lambda_i}`.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::E | Basis::H | Basis::P)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            _ => Err(Error::UnknownName(alloc::format!("basis {}", s))),
        }
    }
}

/// Coefficient ring for [`SymFunc`]: a commutative `Q`-algebra.
pub trait SymCoeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &BigRational) -> Self;
    fn from_rational(r: BigRational) -> Self;
}

impl SymCoeff for LaurentRat {
    fn zero() -> Self {
        LaurentRat::zero()
    }
    fn one() -> Self {
        LaurentRat::one()
    }
    fn is_zero(&self) -> bool {
        LaurentRat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &BigRational) -> Self {
        LaurentRat::scale(self, r)
    }
    fn from_rational(r: BigRational) -> Self {
        LaurentRat::constant(r)
    }
}

impl SymCoeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::from_laurent(LaurentRat::one())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &BigRational) -> Self {
        RatFunc::scale(self, r)
    }
    fn from_rational(r: BigRational) -> Self {
        RatFunc::from_laurent(LaurentRat::constant(r))
    }
}

/// `sum_lambda c_lambda b_lambda` over partitions of a fixed degree.
#[derive(Clone, PartialEq)]
pub struct SymFunc<C = LaurentRat> {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, C>,
}

impl<C: SymCoeff> SymFunc<C> {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, coeffs: BTreeMap::new() }
    }

    /// The constant `c` in degree zero.
    pub fn scalar(basis: Basis, c: C) -> Self {
        let mut out = Self::zero(basis, 0);
        out.add_term(Partition::empty(), &c);
        out
    }

    /// `b_lambda` for the basis `b`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut out = Self::zero(basis, lambda.size());
        out.add_term(lambda.clone(), &C::one());
        out
    }

    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
    {
        let mut out = Self::zero(basis, degree);
        for (lam, c) in terms {
            if lam.size() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: lam.size() });
            }
            out.add_term(lam, &c);
        }
        Ok(out)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.coeffs.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in lexicographically decreasing order of the partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, lambda: Partition, c: &C) {
        if c.is_zero() {
            return;
        }
        let next = match self.coeffs.get(&lambda) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if next.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, next);
        }
    }

    /// Sum; a zero operand is accepted in any degree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale_rational(&BigRational::from_integer(BigInt::from(-1))))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (l, a) in &self.coeffs {
            out.add_term(l.clone(), &a.mul(c));
        }
        out
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (l, a) in &self.coeffs {
            out.add_term(l.clone(), &a.scale(r));
        }
        out
    }

    pub fn map_coeffs<D: SymCoeff, F: Fn(&C) -> D>(&self, f: F) -> SymFunc<D> {
        let mut out = SymFunc::zero(self.basis, self.degree);
        for (l, a) in &self.coeffs {
            out.add_term(l.clone(), &f(a));
        }
        out
    }

    /// Product in a multiplicative basis (partitions concatenate).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis || !self.basis.is_multiplicative() {
            return Err(Error::BasisMismatch);
        }
        let mut out = Self::zero(self.basis, self.degree + other.degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let mut parts = a.0.clone();
                parts.extend_from_slice(&b.0);
                out.add_term(Partition::from_unsorted(parts), &x.mul(y));
            }
        }
        Ok(out)
    }
}

impl SymFunc<LaurentRat> {
    /// Lifts integral coefficients.
    pub fn from_integral<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, LaurentQ)>,
    {
        Self::from_terms(basis, degree, terms.into_iter().map(|(l, c)| (l, c.to_rational())))
    }

    /// Specialization `v = 1`.
    pub fn eval_one(&self) -> Self {
        self.map_coeffs(|c| LaurentRat::constant(c.eval_one()))
    }

    pub fn to_ratfunc(&self) -> SymFunc<RatFunc> {
        self.map_coeffs(|c| RatFunc::from_laurent(c.clone()))
    }

    /// Every coefficient is a polynomial in `q` with nonnegative coefficients.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| c.is_q_polynomial() && c.has_nonnegative_coeffs())
    }

    /// Integral coefficients, when all of them are.
    pub fn integral_coeffs(&self) -> Option<Vec<(Partition, LaurentQ)>> {
        self.terms().map(|(l, c)| c.to_integral().map(|x| (l.clone(), x))).collect()
    }
}

impl SymFunc<RatFunc> {
    /// Fails unless every coefficient is a Laurent polynomial.
    pub fn clear_denominators(&self) -> Result<SymFunc<LaurentRat>> {
        let mut out = SymFunc::zero(self.basis, self.degree);
        for (l, c) in &self.coeffs {
            let x = c.to_laurent().ok_or(Error::UnclearedDenominator)?;
            out.add_term(l.clone(), &x);
        }
        Ok(out)
    }
}

impl<C: SymCoeff + fmt::Display> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(c)h(3,1) + (c')h(2,2)`, lexicographically decreasing partitions.
impl<C: SymCoeff + fmt::Display> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}){}{}", c, self.basis, l)?;
        }
        Ok(())
    }
}

type Matrix = Vec<Vec<BigRational>>;

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Gauss-Jordan inverse over `Q`; the input must be invertible.
fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a: Matrix = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible transition matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        if !p.is_one() {
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                }
                if !inv[col][j].is_zero() {
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

/// All `nu` obtained from `lambda` by adding a horizontal strip of `k` boxes.
fn horizontal_strips(lambda: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(lambda: &[usize], row: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == lambda.len() {
            let bound = if row == 0 { usize::MAX } else { lambda[row - 1] };
            if rem == 0 {
                out.push(cur.clone());
            } else if rem <= bound {
                cur.push(rem);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let old = lambda[row];
        let cap = if row == 0 { rem } else { (lambda[row - 1] - old).min(rem) };
        for add in 0..=cap {
            cur.push(old + add);
            rec(lambda, row + 1, rem - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Kostka numbers `K[lambda][mu]` with `h_mu = sum_lambda K s_lambda`.
fn kostka_matrix(parts: &[Partition], index: &BTreeMap<Partition, usize>) -> Vec<Vec<BigInt>> {
    let n = parts.len();
    let mut k = vec![vec![BigInt::zero(); n]; n];
    for (j, mu) in parts.iter().enumerate() {
        let mut shapes: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        shapes.insert(Vec::new(), BigInt::one());
        for &m in mu.parts() {
            let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
            for (sh, c) in &shapes {
                for nu in horizontal_strips(sh, m) {
                    *next.entry(nu).or_default() += c;
                }
            }
            shapes = next;
        }
        for (sh, c) in shapes {
            k[index[&Partition(sh)]][j] = c;
        }
    }
    k
}

/// Murnaghan-Nakayama on beta sets, memoized on `(beta, position in mu)`.
struct MnRule<'a> {
    mu: &'a [usize],
    memo: BTreeMap<(Vec<usize>, usize), BigInt>,
}

impl MnRule<'_> {
    fn eval(&mut self, beta: Vec<usize>, idx: usize) -> BigInt {
        if idx == self.mu.len() {
            return BigInt::one();
        }
        if let Some(v) = self.memo.get(&(beta.clone(), idx)) {
            return v.clone();
        }
        let k = self.mu[idx];
        let mut acc = BigInt::zero();
        for (pos, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
            let mut nb = beta.clone();
            nb[pos] = b - k;
            nb.sort_unstable();
            let v = self.eval(nb, idx + 1);
            if between % 2 == 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        self.memo.insert((beta, idx), acc.clone());
        acc
    }
}

/// `chi^lambda(mu)` by the Murnaghan-Nakayama rule.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::DegreeMismatch { left: lambda.size(), right: mu.size() });
    }
    let l = lambda.len();
    let mut beta: Vec<usize> = (1..=l).map(|i| lambda.part(i) + l - i).collect();
    beta.sort_unstable();
    Ok(MnRule { mu: mu.parts(), memo: BTreeMap::new() }.eval(beta, 0))
}

/// Irreducible characters of `S_n`, rows `lambda`, columns the cycle type `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    parts: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: usize, budget: &Budget) -> Result<Self> {
        Budget::check("character table degree", n, budget.symfunc_degree)?;
        let parts = Partition::all(n);
        let mut values = Vec::with_capacity(parts.len());
        for lam in &parts {
            let l = lam.len();
            let mut beta: Vec<usize> = (1..=l).map(|i| lam.part(i) + l - i).collect();
            beta.sort_unstable();
            let row = parts
                .iter()
                .map(|mu| MnRule { mu: mu.parts(), memo: BTreeMap::new() }.eval(beta.clone(), 0))
                .collect();
            values.push(row);
        }
        Ok(CharacterTable { n, parts, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels, lexicographically decreasing.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        let i = self.parts.iter().position(|p| p == lambda)?;
        let j = self.parts.iter().position(|p| p == mu)?;
        Some(&self.values[i][j])
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.values[i]
    }
}

/// `chi^lambda(mu)` for all `lambda, mu |- n`.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    CharacterTable::new(n, &Budget::default())
}

struct Transitions {
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    /// `to_s[b][lambda][mu]`: coefficient of `s_lambda` in `b_mu`
    to_s: BTreeMap<Basis, Matrix>,
    /// `from_s[b][mu][lambda]`: coefficient of `b_mu` in `s_lambda`
    from_s: BTreeMap<Basis, Matrix>,
}

impl Transitions {
    fn new(n: usize) -> Self {
        let parts = Partition::all(n);
        let index: BTreeMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let len = parts.len();
        let kost = kostka_matrix(&parts, &index);
        let kq: Matrix = kost.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        let kinv = invert(&kq);
        let conj: Vec<usize> = parts.iter().map(|p| index[&p.conjugate()]).collect();
        let mut to_s = BTreeMap::new();
        to_s.insert(Basis::H, kq.clone());
        to_s.insert(Basis::E, (0..len).map(|l| kq[conj[l]].clone()).collect());
        to_s.insert(Basis::M, (0..len).map(|l| (0..len).map(|m| kinv[m][l].clone()).collect()).collect());
        to_s.insert(
            Basis::S,
            (0..len).map(|i| (0..len).map(|j| if i == j { rat(1) } else { rat(0) }).collect()).collect(),
        );
        let table = CharacterTable {
            n,
            parts: parts.clone(),
            values: parts
                .iter()
                .map(|lam| parts.iter().map(|mu| character_value(lam, mu).unwrap()).collect())
                .collect(),
        };
        to_s.insert(
            Basis::P,
            table
                .values
                .iter()
                .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
                .collect(),
        );
        let from_s = to_s.iter().map(|(b, m)| (*b, invert(m))).collect();
        Transitions { parts, index, to_s, from_s }
    }
}

/// Per-degree cache of transition matrices between the five bases.
pub struct SymContext {
    budget: Budget,
    transitions: BTreeMap<usize, Transitions>,
}

impl Default for SymContext {
    fn default() -> Self {
        Self::new(Budget::default())
    }
}

impl SymContext {
    pub fn new(budget: Budget) -> Self {
        SymContext { budget, transitions: BTreeMap::new() }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    fn transitions(&mut self, n: usize) -> Result<&Transitions> {
        Budget::check("symmetric function degree", n, self.budget.symfunc_degree)?;
        Ok(self.transitions.entry(n).or_insert_with(|| Transitions::new(n)))
    }

    /// Re-expresses `f` in the `target` basis.
    pub fn change_basis<C: SymCoeff>(&mut self, f: &SymFunc<C>, target: Basis) -> Result<SymFunc<C>> {
        if f.basis == target {
            return Ok(f.clone());
        }
        let t = self.transitions(f.degree)?;
        let len = t.parts.len();
        let a = &t.to_s[&f.basis];
        let mut in_s: Vec<C> = vec![C::zero(); len];
        for (mu, c) in &f.coeffs {
            let j = t.index[mu];
            for (l, slot) in in_s.iter_mut().enumerate() {
                if !a[l][j].is_zero() {
                    *slot = slot.add(&c.scale(&a[l][j]));
                }
            }
        }
        let b = &t.from_s[&target];
        let mut out = SymFunc::zero(target, f.degree);
        for (row, lam) in b.iter().zip(&t.parts).take(len) {
            let mut acc = C::zero();
            for (l, c) in in_s.iter().enumerate() {
                if !row[l].is_zero() && !c.is_zero() {
                    acc = acc.add(&c.scale(&row[l]));
                }
            }
            out.add_term(lam.clone(), &acc);
        }
        Ok(out)
    }

    /// The involution with `omega(e_n) = h_n`.
    pub fn omega<C: SymCoeff>(&mut self, f: &SymFunc<C>) -> Result<SymFunc<C>> {
        let relabel = |f: &SymFunc<C>, basis: Basis| SymFunc { basis, degree: f.degree, coeffs: f.coeffs.clone() };
        match f.basis {
            Basis::E => Ok(relabel(f, Basis::H)),
            Basis::H => Ok(relabel(f, Basis::E)),
            Basis::P => {
                let mut out = SymFunc::zero(Basis::P, f.degree);
                for (l, c) in &f.coeffs {
                    let c = if l.sign() < 0 { c.scale(&rat(-1)) } else { c.clone() };
                    out.add_term(l.clone(), &c);
                }
                Ok(out)
            }
            Basis::S => {
                let mut out = SymFunc::zero(Basis::S, f.degree);
                for (l, c) in &f.coeffs {
                    out.add_term(l.conjugate(), c);
                }
                Ok(out)
            }
            Basis::M => {
                let s = self.change_basis(f, Basis::S)?;
                let w = self.omega(&s)?;
                self.change_basis(&w, Basis::M)
            }
        }
    }

    /// Hall inner product, making the Schur basis orthonormal.
    pub fn hall_inner_product<C: SymCoeff>(&mut self, f: &SymFunc<C>, g: &SymFunc<C>) -> Result<C> {
        if f.degree != g.degree && !f.is_zero() && !g.is_zero() {
            return Err(Error::DegreeMismatch { left: f.degree, right: g.degree });
        }
        let a = self.change_basis(f, Basis::S)?;
        let b = self.change_basis(g, Basis::S)?;
        let mut acc = C::zero();
        for (l, x) in &a.coeffs {
            if let Some(y) = b.coeffs.get(l) {
                acc = acc.add(&x.mul(y));
            }
        }
        Ok(acc)
    }

    /// `ch(a) = sum_lambda c_{J_lambda}(a) m_lambda`.
    pub fn frobenius_character(
        &mut self,
        a: &HeckeElement,
        traces: &mut InducedCharacters,
    ) -> Result<SymFunc<LaurentRat>> {
        let n = a.n();
        Budget::check("symmetric function degree", n, self.budget.symfunc_degree)?;
        let mut out = SymFunc::zero(Basis::M, n);
        for lam in Partition::all(n) {
            let j = crate::coxeter::ParabolicSet::from_composition(lam.parts())?;
            let c = traces.induced_character(a, &j)?;
            out.add_term(lam, &c.to_rational());
        }
        Ok(out)
    }

    /// Immanant `sum_w chi^lambda(w) prod_i M[i][w(i)]` of a matrix over a
    /// multiplicative basis.
    pub fn immanant(&mut self, lambda: &Partition, m: &[Vec<SymFunc<LaurentRat>>]) -> Result<SymFunc<LaurentRat>> {
        let k = m.len();
        Budget::check("immanant size", k, self.budget.immanant_n)?;
        if lambda.size() != k || m.iter().any(|r| r.len() != k) {
            return Err(Error::DegreeMismatch { left: lambda.size(), right: k });
        }
        let basis = matrix_basis(m)?;
        let mut chi: BTreeMap<Partition, BigInt> = BTreeMap::new();
        let mut acc = SymFunc::zero(basis, 0);
        for w in Permutation::all(k) {
            let ct = w.cycle_type();
            let c = match chi.get(&ct) {
                Some(c) => c.clone(),
                None => {
                    let c = character_value(lambda, &ct)?;
                    chi.insert(ct, c.clone());
                    c
                }
            };
            if c.is_zero() {
                continue;
            }
            let mut prod = SymFunc::scalar(basis, LaurentRat::from_int(1));
            for i in 1..=k {
                let e = &m[i - 1][w.at(i) - 1];
                if e.is_zero() {
                    prod = SymFunc::zero(basis, 0);
                    break;
                }
                prod = prod.mul(e)?;
            }
            acc = acc.add(&prod.scale_rational(&BigRational::from_integer(c)))?;
        }
        Ok(acc)
    }

    /// Verifies `n! e_n = sum_mu c(mu) sign(mu) p_mu`, `n! h_n = sum_mu c(mu) p_mu`,
    /// `n! e_n = det(Z_n)` and `n! h_n = perm(Z_n)`.
    pub fn newton_check(&mut self, n: usize) -> Result<bool> {
        Budget::check("symmetric function degree", n, self.budget.symfunc_degree)?;
        let nfact = BigRational::from_integer(factorial(n));
        let top = Partition::new(vec![n])?;
        let en = SymFunc::<LaurentRat>::basis_element(Basis::E, &top).scale_rational(&nfact);
        let hn = SymFunc::<LaurentRat>::basis_element(Basis::H, &top).scale_rational(&nfact);
        let mut signed = SymFunc::zero(Basis::P, n);
        let mut unsigned = SymFunc::zero(Basis::P, n);
        for mu in Partition::all(n) {
            let c = BigRational::from_integer(mu.class_size());
            let sc = if mu.sign() < 0 { -c.clone() } else { c.clone() };
            signed.add_term(mu.clone(), &LaurentRat::constant(sc));
            unsigned.add_term(mu, &LaurentRat::constant(c));
        }
        if self.change_basis(&signed, Basis::E)? != en {
            return Err(Error::IdentityFailed("n! e_n = sum c(mu) sign(mu) p_mu"));
        }
        if self.change_basis(&unsigned, Basis::H)? != hn {
            return Err(Error::IdentityFailed("n! h_n = sum c(mu) p_mu"));
        }
        let z = z_matrix(n);
        let det = multilinear_sum(&z, true)?;
        if self.change_basis(&det, Basis::E)? != en {
            return Err(Error::IdentityFailed("n! e_n = det Z_n"));
        }
        let perm = multilinear_sum(&z, false)?;
        if self.change_basis(&perm, Basis::H)? != hn {
            return Err(Error::IdentityFailed("n! h_n = perm Z_n"));
        }
        Ok(true)
    }

    /// `p_k -> (q^k - 1) p_k` or `p_k -> p_k / (q^k - 1)`, multiplicatively
    /// over `p_lambda`; the result is in the `p` basis.
    pub fn plethysm_scale(&mut self, f: &SymFunc<RatFunc>, mode: PlethysmMode) -> Result<SymFunc<RatFunc>> {
        let p = self.change_basis(f, Basis::P)?;
        let mut out = SymFunc::zero(Basis::P, f.degree);
        for (lam, c) in &p.coeffs {
            let mut factor = LaurentRat::one();
            for &k in lam.parts() {
                factor = &factor * &(&LaurentRat::q_pow(k as i32) - &LaurentRat::one());
            }
            let factor = match mode {
                PlethysmMode::Times => RatFunc::from_laurent(factor),
                PlethysmMode::Divide => RatFunc::new(LaurentRat::one(), factor)?,
            };
            out.add_term(lam.clone(), &c.mul(&factor));
        }
        Ok(out)
    }
}

/// Direction of [`SymContext::plethysm_scale`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlethysmMode {
    /// `f[X (q - 1)]`
    Times,
    /// `f[X / (q - 1)]`
    Divide,
}

fn matrix_basis(m: &[Vec<SymFunc<LaurentRat>>]) -> Result<Basis> {
    let basis = m.first().and_then(|r| r.first()).map(|e| e.basis()).unwrap_or(Basis::H);
    if !basis.is_multiplicative() || m.iter().flatten().any(|e| e.basis() != basis) {
        return Err(Error::BasisMismatch);
    }
    Ok(basis)
}

/// Determinant (`signed`) or permanent by dynamic programming over column
/// subsets, avoiding the `k!` expansion.
pub fn multilinear_sum(m: &[Vec<SymFunc<LaurentRat>>], signed: bool) -> Result<SymFunc<LaurentRat>> {
    let k = m.len();
    let basis = matrix_basis(m)?;
    if k == 0 {
        return Ok(SymFunc::scalar(basis, LaurentRat::one()));
    }
    let full = 1usize << k;
    let mut d: Vec<SymFunc<LaurentRat>> = vec![SymFunc::zero(basis, 0); full];
    d[0] = SymFunc::scalar(basis, LaurentRat::one());
    for mask in 1..full {
        let row = mask.count_ones() as usize - 1;
        let mut acc = SymFunc::zero(basis, 0);
        for (col, entry) in m[row].iter().enumerate().take(k) {
            if mask & (1 << col) == 0 {
                continue;
            }
            let rest = mask & !(1 << col);
            if d[rest].is_zero() || entry.is_zero() {
                continue;
            }
            let mut term = d[rest].mul(entry)?;
            // sign of the column moved past the larger columns already used
            if signed && (rest >> col).count_ones() % 2 == 1 {
                term = term.scale_rational(&rat(-1));
            }
            acc = acc.add(&term)?;
        }
        d[mask] = acc;
    }
    Ok(d[full - 1].clone())
}

/// `Z_n`: `p_{j-i+1}` on and above the diagonal, `i - 1` just below it.
pub fn z_matrix(n: usize) -> Vec<Vec<SymFunc<LaurentRat>>> {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if j >= i {
                        SymFunc::basis_element(Basis::P, &Partition(vec![j - i + 1]))
                    } else if j + 1 == i {
                        SymFunc::scalar(Basis::P, LaurentRat::from_int((i - 1) as i64))
                    } else {
                        SymFunc::zero(Basis::P, 0)
                    }
                })
                .collect()
        })
        .collect()
}

/// `h_k` as an `h`-basis element (`1` for `k = 0`, `0` for `k < 0`).
fn h_elem(k: i64) -> SymFunc<LaurentRat> {
    if k < 0 {
        SymFunc::zero(Basis::H, 0)
    } else if k == 0 {
        SymFunc::scalar(Basis::H, LaurentRat::one())
    } else {
        SymFunc::basis_element(Basis::H, &Partition(vec![k as usize]))
    }
}

/// The matrix `(h_{lambda_i - mu_j + j - i})`.
pub fn jacobi_trudi_matrix(lambda: &Partition, mu: &Partition) -> Result<Vec<Vec<SymFunc<LaurentRat>>>> {
    if !mu.is_contained_in(lambda) {
        return Err(Error::NotContained);
    }
    let k = lambda.len();
    Ok((1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| h_elem(lambda.part(i) as i64 - mu.part(j) as i64 + j as i64 - i as i64))
                .collect()
        })
        .collect())
}

/// The skew Schur function `s_{lambda/mu}` in the `h` basis.
pub fn jacobi_trudi(lambda: &Partition, mu: &Partition) -> Result<SymFunc<LaurentRat>> {
    let m = jacobi_trudi_matrix(lambda, mu)?;
    let d = multilinear_sum(&m, true)?;
    let degree = lambda.size() - mu.size();
    Ok(SymFunc { basis: Basis::H, degree, coeffs: d.coeffs })
}

/// Convenience wrapper around [`SymContext::change_basis`].
pub fn change_basis<C: SymCoeff>(f: &SymFunc<C>, target: Basis) -> Result<SymFunc<C>> {
    SymContext::default().change_basis(f, target)
}
