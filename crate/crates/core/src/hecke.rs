//! The Hecke algebra of `S_n` in the `T` basis and its Kazhdan-Lusztig basis.
//!
//! Relations: `T_w T_s = T_{ws}` when `ws > w` and
//! `T_s^2 = (q - 1) T_s + q`. The KL basis is stored in the integral
//! normalization `E_w = q^{l(w)/2} C'_w = sum_{z <= w} P_{z,w}(q) T_z`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::budget::Budget;
use crate::coxeter::{check_generator, Permutation, Word};
use crate::error::{Error, Result};
use crate::group::SymmetricGroup;
use crate::laurent::LaurentQ;

/// A finite `sum_w a_w T_w` with Laurent polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentQ>,
}

fn q_minus_one() -> LaurentQ {
    LaurentQ::from_q_coeffs(&[-1, 1])
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    /// `T_e`.
    pub fn one(n: usize) -> Self {
        Self::basis(&Permutation::identity(n))
    }

    /// `T_w`.
    pub fn basis(w: &Permutation) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), LaurentQ::one());
        HeckeElement { n: w.n(), terms }
    }

    /// `T_{s_i}`.
    pub fn generator(n: usize, s: usize) -> Result<Self> {
        Ok(Self::basis(&Permutation::simple(n, s)?))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, LaurentQ)>,
    {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::SizeMismatch { left: n, right: w.n() });
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentQ {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of the permutation.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentQ)> {
        self.terms.iter()
    }

    /// Terms sorted by `(length, lex)`.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &LaurentQ)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(w, _)| (w.length(), *w));
        v
    }

    fn add_term(&mut self, w: Permutation, c: &LaurentQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::SizeMismatch { left: self.n, right: other.n })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentQ::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    /// Right multiplication by `T_{s}`.
    pub fn mul_ts_right(&self, s: usize) -> Result<Self> {
        check_generator(s, self.n)?;
        let mut out = Self::zero(self.n);
        let qm1 = q_minus_one();
        let q = LaurentQ::q_pow(1);
        for (w, c) in &self.terms {
            let ws = w.right_mul_simple(s);
            if w.is_right_descent(s) {
                out.add_term(w.clone(), &(c * &qm1));
                out.add_term(ws, &(c * &q));
            } else {
                out.add_term(ws, c);
            }
        }
        Ok(out)
    }

    /// Right multiplication by `T_s^{-1} = q^{-1} T_s + (q^{-1} - 1)`.
    fn mul_ts_inverse_right(&self, s: usize) -> Result<Self> {
        let qinv = LaurentQ::q_pow(-1);
        let shifted = self.mul_ts_right(s)?.scale(&qinv);
        shifted.add(&self.scale(&(&qinv - &LaurentQ::one())))
    }

    /// Product in `H_n`, expanding `other` through reduced words.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc = Self::zero(self.n);
        for (w, c) in &other.terms {
            let mut x = self.scale(c);
            for &s in w.reduced_word().generators() {
                x = x.mul_ts_right(s)?;
            }
            acc = acc.add(&x)?;
        }
        Ok(acc)
    }

    /// The ring involution with `v -> v^{-1}` and `T_w -> T_{w^{-1}}^{-1}`.
    pub fn bar_involution(&self) -> Self {
        let mut acc = Self::zero(self.n);
        for (w, c) in &self.terms {
            let mut x = Self::one(self.n).scale(&c.bar());
            for &s in w.reduced_word().generators() {
                x = x.mul_ts_inverse_right(s).expect("generator in range");
            }
            acc = acc.add(&x).expect("same n");
        }
        acc
    }

    /// Multiplication of every coefficient by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        HeckeElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.shift(k))).collect(),
        }
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(c1)T_{w1}+(c2)T_{w2}+...` in `(length, lex)` order.
impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "({})T_{}", c, w)?;
        }
        Ok(())
    }
}

/// `prod_i (1 + T_{s_i})` in the `T` basis of `H_n`.
pub fn bott_samelson_product(n: usize, sigma: &Word) -> Result<HeckeElement> {
    sigma.check(n)?;
    let mut x = HeckeElement::one(n);
    for &s in sigma.generators() {
        x = x.add(&x.mul_ts_right(s)?)?;
    }
    Ok(x)
}

/// Which descent the KL recursion peels off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

type Sparse = Vec<(u32, LaurentQ)>;

/// Memoized Kazhdan-Lusztig basis elements of `H_n`, computed on demand.
#[derive(Debug, Clone)]
pub struct KlTable {
    group: SymmetricGroup,
    side: Side,
    elems: Vec<Option<Sparse>>,
}

impl KlTable {
    /// Table recursing on the smallest left descent, guarded by the default budget.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_options(n, Side::Left, &Budget::default())
    }

    pub fn with_options(n: usize, side: Side, budget: &Budget) -> Result<Self> {
        Budget::check("KL table n", n, budget.max_n)?;
        if n == 0 {
            return Err(Error::InvalidPermutation("n = 0".into()));
        }
        let group = SymmetricGroup::new(n);
        let len = group.len();
        let mut elems = Vec::with_capacity(len);
        elems.resize(len, None);
        Ok(KlTable { group, side, elems })
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    fn index(&self, w: &Permutation) -> Result<usize> {
        self.group
            .index(w)
            .ok_or(Error::SizeMismatch { left: self.n(), right: w.n() })
    }

    /// `P_{u,w}(q)`; errors unless `u <= w`.
    pub fn kl_polynomial(&mut self, u: &Permutation, w: &Permutation) -> Result<LaurentQ> {
        let ui = self.index(u)?;
        let wi = self.index(w)?;
        if !u.bruhat_leq(w)? {
            return Err(Error::NotBruhatBelow);
        }
        let terms = self.terms_of(wi);
        Ok(match terms.binary_search_by_key(&(ui as u32), |t| t.0) {
            Ok(k) => terms[k].1.clone(),
            Err(_) => LaurentQ::zero(),
        })
    }

    /// `E_w = q^{l(w)/2} C'_w` in the `T` basis.
    pub fn basis_element(&mut self, w: &Permutation) -> Result<HeckeElement> {
        let wi = self.index(w)?;
        let n = self.n();
        let terms = self.terms_of(wi).to_vec();
        let g = &self.group;
        Ok(HeckeElement {
            n,
            terms: terms.into_iter().map(|(z, p)| (g.element(z as usize).clone(), p)).collect(),
        })
    }

    /// Sparse `(index, P_{z,w})` list for `E_w`, sorted by index.
    pub fn terms_of(&mut self, w: usize) -> &[(u32, LaurentQ)] {
        self.ensure(w);
        self.elems[w].as_deref().unwrap()
    }

    /// Number of basis elements computed so far.
    pub fn computed_count(&self) -> usize {
        self.elems.iter().filter(|e| e.is_some()).count()
    }

    /// Computed basis elements as `(w, [(z, P_{z,w})])`, in `(length, lex)` order of `w`.
    pub fn computed(&self) -> Vec<(Permutation, Vec<(Permutation, LaurentQ)>)> {
        let g = &self.group;
        self.elems
            .iter()
            .enumerate()
            .filter_map(|(w, e)| {
                e.as_ref().map(|terms| {
                    (
                        g.element(w).clone(),
                        terms.iter().map(|(z, p)| (g.element(*z as usize).clone(), p.clone())).collect(),
                    )
                })
            })
            .collect()
    }

    /// Seeds the table with a previously computed `E_w`, after checking
    /// that it has the shape of a KL basis element.
    pub fn insert(&mut self, w: &Permutation, terms: &[(Permutation, LaurentQ)]) -> Result<()> {
        let wi = self.index(w)?;
        let mut sparse = Vec::with_capacity(terms.len());
        for (z, p) in terms {
            let zi = self.index(z)?;
            if !z.bruhat_leq(w)? {
                return Err(Error::NotBruhatBelow);
            }
            sparse.push((zi as u32, p.clone()));
        }
        sparse.sort_by_key(|t| t.0);
        sparse.dedup_by_key(|t| t.0);
        if sparse.len() != terms.len() {
            return Err(Error::Postcondition("duplicate terms"));
        }
        self.check_element(wi, &sparse)?;
        self.elems[wi] = Some(sparse);
        Ok(())
    }

    fn check_element(&self, w: usize, terms: &Sparse) -> Result<()> {
        let lw = self.group.length(w) as i32;
        let mut saw_top = false;
        for (z, p) in terms {
            let z = *z as usize;
            if z == w {
                if !p.is_one() {
                    return Err(Error::Postcondition("P_{w,w} = 1"));
                }
                saw_top = true;
                continue;
            }
            if p.is_zero() || !p.is_q_polynomial() {
                return Err(Error::Postcondition("P_{z,w} is a nonzero polynomial in q"));
            }
            let lz = self.group.length(z) as i32;
            if p.max_exp().unwrap() >= lw - lz {
                return Err(Error::Postcondition("deg P_{z,w} < (l(w) - l(z)) / 2"));
            }
        }
        if saw_top {
            Ok(())
        } else {
            Err(Error::Postcondition("P_{w,w} = 1"))
        }
    }

    fn ensure(&mut self, w: usize) {
        if self.elems[w].is_some() {
            return;
        }
        if w == 0 {
            self.elems[0] = Some(alloc::vec![(0, LaurentQ::one())]);
            return;
        }
        let g = &self.group;
        let s = match self.side {
            Side::Left => g.first_left_descent(w),
            Side::Right => g.first_right_descent(w),
        }
        .expect("non-identity element has a descent");
        let w1 = match self.side {
            Side::Left => g.left_mul(s, w),
            Side::Right => g.right_mul(s, w),
        };
        self.ensure(w1);

        let g = &self.group;
        let l1 = g.length(w1) as i32;
        let mut mus: Vec<(usize, BigInt)> = Vec::new();
        for (z, p) in self.elems[w1].as_ref().unwrap() {
            let z = *z as usize;
            if z == w1 {
                continue;
            }
            let desc = match self.side {
                Side::Left => g.is_left_descent(s, z),
                Side::Right => g.is_right_descent(s, z),
            };
            let gap = l1 - g.length(z) as i32;
            if desc && gap % 2 == 1 {
                let mu = p.coeff(gap - 1);
                if !mu.is_zero() {
                    mus.push((z, mu));
                }
            }
        }
        for &(z, _) in &mus {
            self.ensure(z);
        }

        let g = &self.group;
        let qm1 = q_minus_one();
        let q = LaurentQ::q_pow(1);
        let mut acc: BTreeMap<u32, LaurentQ> = BTreeMap::new();
        let add = |acc: &mut BTreeMap<u32, LaurentQ>, z: usize, c: LaurentQ| {
            let e = acc.entry(z as u32).or_default();
            *e += &c;
        };
        for (z, p) in self.elems[w1].as_ref().unwrap() {
            let z = *z as usize;
            add(&mut acc, z, p.clone());
            let sz = match self.side {
                Side::Left => g.left_mul(s, z),
                Side::Right => g.right_mul(s, z),
            };
            if g.length(sz) > g.length(z) {
                add(&mut acc, sz, p.clone());
            } else {
                add(&mut acc, z, p * &qm1);
                add(&mut acc, sz, p * &q);
            }
        }
        let lw = g.length(w) as i32;
        for (z, mu) in &mus {
            let factor = LaurentQ::monomial(-mu.clone(), lw - g.length(*z) as i32);
            for (y, p) in self.elems[*z].as_ref().unwrap() {
                add(&mut acc, *y as usize, p * &factor);
            }
        }
        let terms: Sparse = acc.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        if let Err(e) = self.check_element(w, &terms) {
            panic!("KL recursion broke an invariant: {}", e);
        }
        self.elems[w] = Some(terms);
    }

    /// `mu(z, w)`: the coefficient of `q^{(l(w) - l(z) - 1)/2}` in `P_{z,w}`.
    pub fn mu(&mut self, z: &Permutation, w: &Permutation) -> Result<BigInt> {
        let gap = w.length() as i32 - z.length() as i32;
        if gap <= 0 || gap % 2 == 0 || !z.bruhat_leq(w)? {
            return Ok(BigInt::zero());
        }
        Ok(self.kl_polynomial(z, w)?.coeff(gap - 1))
    }
}

/// `P_{u,w}(q)` from a fresh table.
pub fn kl_polynomial(u: &Permutation, w: &Permutation) -> Result<LaurentQ> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch { left: u.n(), right: w.n() });
    }
    KlTable::new(w.n())?.kl_polynomial(u, w)
}

/// `q^{l(w)/2} C'_w` from a fresh table.
pub fn kl_basis_element(w: &Permutation) -> Result<HeckeElement> {
    KlTable::new(w.n())?.basis_element(w)
}

/// Whether `v^{-l(w)} E` is fixed by the bar involution.
pub fn is_bar_invariant_basis(e: &HeckeElement, w: &Permutation) -> bool {
    let c = e.shift(-(w.length() as i32));
    c.bar_involution() == c
}

/// Coefficients `c_w` with `a = sum_w c_w q^{l(w)/2} C'_w`.
pub fn cprime_expand(a: &HeckeElement, table: &mut KlTable) -> Result<BTreeMap<Permutation, LaurentQ>> {
    if a.n() != table.n() {
        return Err(Error::SizeMismatch { left: a.n(), right: table.n() });
    }
    // group indices are sorted by (length, lex), so the last key is the top term
    let mut rest: BTreeMap<usize, LaurentQ> = BTreeMap::new();
    for (w, c) in a.terms() {
        rest.insert(table.index(w)?, c.clone());
    }
    let mut out = BTreeMap::new();
    while let Some((w, c)) = rest.pop_last() {
        for (z, p) in table.terms_of(w) {
            let z = *z as usize;
            if z == w {
                continue;
            }
            let e = rest.entry(z).or_default();
            *e -= &(p * &c);
            if e.is_zero() {
                rest.remove(&z);
            }
        }
        out.insert(table.group().element(w).clone(), c);
    }
    Ok(out)
}

/// Inverse of [`cprime_expand`].
pub fn cprime_synthesize(
    n: usize,
    coeffs: &BTreeMap<Permutation, LaurentQ>,
    table: &mut KlTable,
) -> Result<HeckeElement> {
    let mut acc = HeckeElement::zero(n);
    for (w, c) in coeffs {
        acc = acc.add(&table.basis_element(w)?.scale(c))?;
    }
    Ok(acc)
}

/// For a reduced word `sigma` of `w`, the coefficients
/// `Q(u) = v^{l(w) - l(u)} P_{sigma,u}(v)` with
/// `prod (1 + T_{s_i}) = sum_u Q(u) q^{l(u)/2} C'_u`.
pub fn springer_decomposition(
    n: usize,
    sigma: &Word,
    table: &mut KlTable,
) -> Result<BTreeMap<Permutation, LaurentQ>> {
    if !sigma.is_reduced(n)? {
        return Err(Error::NotReduced);
    }
    let prod = bott_samelson_product(n, sigma)?;
    cprime_expand(&prod, table)
}
