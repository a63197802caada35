//! Laurent polynomials in `v = q^{1/2}`.
//!
//! A single integer exponent of `v` is stored per term, so `q^k` is `v^{2k}`
//! and every formula with half-integral powers of `q` stays integral in `v`.
//! Coefficients are exact: [`LaurentQ`] uses big integers and
//! [`LaurentRat`] big rationals. [`RatFunc`] is a quotient of two
//! [`LaurentRat`] values, used only where division by `q^k - 1` is needed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring of a [`Laurent`] polynomial.
pub trait Coeff:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(x: i64) -> Self;
    fn is_nonnegative(&self) -> bool;
}

impl Coeff for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }
}

impl Coeff for BigRational {
    fn from_i64(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }
}

/// Finitely supported `exponent -> coefficient` map, stored densely from the
/// lowest nonzero exponent. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    low: i32,
    coeffs: Vec<C>,
}

pub type LaurentQ = Laurent<BigInt>;
pub type LaurentRat = Laurent<BigRational>;

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(x: i64) -> Self {
        Self::constant(C::from_i64(x))
    }

    /// `c v^exp`.
    pub fn monomial(c: C, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { low: exp, coeffs: vec![c] }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    /// `sum_k coeffs[k] q^k`.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (2 * k as i32, C::from_i64(c))))
    }

    /// Builds from `(v-exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let terms: Vec<(i32, C)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in &terms {
            coeffs[(e - lo) as usize] += c;
        }
        let mut out = Laurent { low: lo, coeffs };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest v-exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest v-exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Coefficient of `v^exp`.
    pub fn coeff(&self, exp: i32) -> C {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Coefficient of `q^k`.
    pub fn q_coeff(&self, k: i32) -> C {
        self.coeff(2 * k)
    }

    /// Nonzero `(v-exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c).collect(),
        };
        out.normalize();
        out
    }

    /// The involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Laurent { low: -hi, coeffs }
            }
        }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// All exponents even and nonnegative.
    pub fn is_q_polynomial(&self) -> bool {
        self.is_zero() || (self.low >= 0 && self.terms().all(|(e, _)| e % 2 == 0))
    }

    /// Degree in `q` of a q-polynomial; `None` for zero.
    pub fn q_degree(&self) -> Option<i32> {
        self.max_exp().map(|e| e.div_euclid(2))
    }

    /// `[c_0, c_1, ..., c_d]` with `self = sum c_k q^k`, or an error when
    /// `self` is not a polynomial in `q`.
    pub fn q_coeffs(&self) -> Result<Vec<C>> {
        if !self.is_q_polynomial() {
            return Err(Error::NotPolynomial);
        }
        match self.q_degree() {
            None => Ok(Vec::new()),
            Some(d) => Ok((0..=d).map(|k| self.q_coeff(k)).collect()),
        }
    }

    /// Coefficient of `v^{c+k}` equals that of `v^{c-k}` for all `k`, where
    /// `center_v` is the center measured in `v`-exponents (twice the
    /// center in powers of `q`).
    pub fn is_palindromic(&self, center_v: i32) -> bool {
        self.terms().all(|(e, c)| self.coeff(2 * center_v - e) == *c)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_nonnegative())
    }

    /// Coefficients in `q` are nonnegative, weakly increase, then weakly decrease.
    pub fn is_unimodal_nonneg(&self) -> Result<bool> {
        let c = self.q_coeffs()?;
        if !c.iter().all(|x| x.is_nonnegative()) {
            return Ok(false);
        }
        let mut k = 0;
        while k + 1 < c.len() && c[k] <= c[k + 1] {
            k += 1;
        }
        while k + 1 < c.len() && c[k] >= c[k + 1] {
            k += 1;
        }
        Ok(k + 1 >= c.len())
    }

    /// `c_k^2 >= c_{k-1} c_{k+1}` for every interior `k` of the q-coefficient list.
    pub fn is_log_concave(&self) -> Result<bool> {
        let c = self.q_coeffs()?;
        for k in 1..c.len().saturating_sub(1) {
            let sq = c[k].clone() * &c[k];
            let side = c[k - 1].clone() * &c[k + 1];
            if sq < side {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p(q) -> p(q + 1)` for a polynomial in `q`.
    pub fn substitute_q_plus_one(&self) -> Result<Self> {
        let c = self.q_coeffs()?;
        let q_plus_one = Self::from_q_coeffs(&[1, 1]);
        let mut acc = Self::zero();
        for coeff in c.iter().rev() {
            acc = &(&acc * &q_plus_one) + &Self::constant(coeff.clone());
        }
        Ok(acc)
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Laurent<D> {
        let mut out = Laurent { low: self.low, coeffs: self.coeffs.iter().map(f).collect() };
        out.normalize();
        out
    }

    fn add_scaled_shifted(&mut self, other: &Self, sign_neg: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if sign_neg { -other.clone() } else { other.clone() };
            return;
        }
        let lo = self.low.min(other.low);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            let mut coeffs = vec![C::zero(); pad];
            coeffs.append(&mut self.coeffs);
            self.coeffs = coeffs;
            self.low = lo;
        }
        self.coeffs.resize((hi - lo + 1) as usize, C::zero());
        let off = (other.low - self.low) as usize;
        for (k, c) in other.coeffs.iter().enumerate() {
            if sign_neg {
                self.coeffs[off + k] -= c;
            } else {
                self.coeffs[off + k] += c;
            }
        }
        self.normalize();
    }
}

impl LaurentQ {
    pub fn to_rational(&self) -> LaurentRat {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn coeff_i64(&self, exp: i32) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.coeff(exp).to_i64()
    }
}

impl LaurentRat {
    /// `Some` when every coefficient is an integer.
    pub fn to_integral(&self) -> Option<LaurentQ> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(self.map_coeffs(|c| c.to_integer()))
        } else {
            None
        }
    }

    fn leading(&self) -> &BigRational {
        self.coeffs.last().unwrap()
    }

    /// Division with remainder as polynomials in `v` (both must have
    /// nonnegative exponents; `divisor` nonzero).
    fn poly_divrem(&self, divisor: &Self) -> (Self, Self) {
        debug_assert!(divisor.low >= 0 && (self.is_zero() || self.low >= 0));
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let dmax = divisor.max_exp().unwrap();
        let dlead = divisor.leading().clone();
        while let Some(rmax) = rem.max_exp() {
            if rmax < dmax {
                break;
            }
            let c = rem.leading().clone() / &dlead;
            let t = Self::monomial(c, rmax - dmax);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        (quot, rem)
    }

    fn poly_gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.poly_divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }
}

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, C: Coeff> Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, false);
        out
    }
}

impl<'a, C: Coeff> Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, true);
        out
    }
}

impl<'a, C: Coeff> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b;
                coeffs[i + j] += &prod;
            }
        }
        let mut out = Laurent { low: self.low + rhs.low, coeffs };
        out.normalize();
        out
    }
}

impl<C: Coeff> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self.add_scaled_shifted(&rhs, false);
        self
    }
}

impl<C: Coeff> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self.add_scaled_shifted(&rhs, true);
        self
    }
}

impl<C: Coeff> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}

impl<'a, C: Coeff> AddAssign<&'a Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &'a Laurent<C>) {
        self.add_scaled_shifted(rhs, false);
    }
}

impl<'a, C: Coeff> SubAssign<&'a Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &'a Laurent<C>) {
        self.add_scaled_shifted(rhs, true);
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -self.clone()
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Plain text in `q`, ascending powers, e.g. `1+2q-q^3` or `q^{1/2}`.
impl<C: Coeff + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let s = alloc::format!("{}", c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, s.as_str()),
            };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let unit = mag == "1";
            if e == 0 {
                f.write_str(mag)?;
                continue;
            }
            if !unit {
                if mag.contains('/') {
                    write!(f, "({})", mag)?;
                } else {
                    f.write_str(mag)?;
                }
            }
            f.write_str("q")?;
            if e != 2 {
                if e % 2 == 0 {
                    write!(f, "^{}", e / 2)?;
                } else {
                    write!(f, "^{{{}/2}}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// `num / den` with `den` a monic polynomial in `v` with nonzero constant
/// term and no common factor with `num`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: LaurentRat,
    den: LaurentRat,
}

impl RatFunc {
    pub fn new(num: LaurentRat, den: LaurentRat) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::UnclearedDenominator);
        }
        let mut r = RatFunc { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_laurent(p: LaurentRat) -> Self {
        RatFunc { num: p, den: LaurentRat::one() }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentRat::zero())
    }

    pub fn numerator(&self) -> &LaurentRat {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentRat {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some` when the denominator is 1.
    pub fn to_laurent(&self) -> Option<LaurentRat> {
        self.den.is_one().then(|| self.num.clone())
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentRat::one();
            return;
        }
        // move powers of v from den into num so den has a nonzero constant term
        let dl = self.den.low;
        self.den = self.den.shift(-dl);
        let nl = self.num.low;
        let num_poly = self.num.shift(-nl);
        let g = LaurentRat::poly_gcd(&num_poly, &self.den);
        let (nq, _) = num_poly.poly_divrem(&g);
        let (dq, _) = self.den.poly_divrem(&g);
        let lead = dq.leading().clone();
        let inv = lead.recip();
        self.num = nq.scale(&inv).shift(nl - dl);
        self.den = dq.scale(&inv);
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut r = RatFunc { num: self.num.scale(c), den: self.den.clone() };
        if r.num.is_zero() {
            r.den = LaurentRat::one();
        }
        r
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.den == rhs.den {
            let mut r = RatFunc { num: &self.num + &rhs.num, den: self.den.clone() };
            r.normalize();
            return r;
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let mut r = RatFunc { num, den: &self.den * &rhs.den };
        r.normalize();
        r
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        let mut r = RatFunc { num: &self.num * &rhs.num, den: &self.den * &rhs.den };
        r.normalize();
        r
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Exact integer `n!`.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `gcd` helper re-exported for callers that normalize rationals by hand.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> LaurentQ {
        LaurentQ::from_q_coeffs(c)
    }

    #[test]
    fn ring_examples() {
        let a = q(&[-1, 1]);
        let b = q(&[1, 1]);
        assert_eq!(&a * &b, q(&[-1, 0, 1]));
        assert_eq!(&a * &LaurentQ::one(), a);
        let v = LaurentQ::v_pow(1);
        assert_eq!(&v * &v, LaurentQ::q_pow(1));
        assert_eq!(&a - &a, LaurentQ::zero());
        assert!((&a - &a).min_exp().is_none());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentQ::q_pow(1).bar(), LaurentQ::q_pow(-1));
        assert_eq!(q(&[1, 1]).bar(), &LaurentQ::q_pow(-1) + &LaurentQ::one());
        let a = LaurentQ::from_terms([(-3, BigInt::from(2)), (5, BigInt::from(-7))]);
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn palindromic_examples() {
        assert!(q(&[2, 6, 2]).is_palindromic(2));
        assert!(LaurentQ::q_pow(1).is_palindromic(2));
        // a lone q is centered at q^1, not q^{1/2}
        assert!(!LaurentQ::q_pow(1).is_palindromic(1));
        assert!(!q(&[1, 1]).is_palindromic(0));
        assert!(q(&[1, 1]).is_palindromic(1));
    }

    #[test]
    fn unimodal_examples() {
        assert!(q(&[1, 2, 2, 2, 1]).is_unimodal_nonneg().unwrap());
        assert!(q(&[1]).is_unimodal_nonneg().unwrap());
        assert!(!q(&[1, 0, 0, 1]).is_unimodal_nonneg().unwrap());
        assert!(!q(&[1, -1]).is_unimodal_nonneg().unwrap());
        assert_eq!(LaurentQ::v_pow(1).is_unimodal_nonneg(), Err(Error::NotPolynomial));
        assert_eq!(LaurentQ::q_pow(-1).is_log_concave(), Err(Error::NotPolynomial));
    }

    #[test]
    fn log_concave_examples() {
        assert!(q(&[1, 2, 1]).is_log_concave().unwrap());
        assert!(q(&[0, 1, 2, 1]).is_log_concave().unwrap());
        assert!(!q(&[1, 1, 3]).is_log_concave().unwrap());
    }

    #[test]
    fn display_plain() {
        use alloc::string::ToString;
        assert_eq!(q(&[1, 2, 2, 2, 1]).to_string(), "1+2q+2q^2+2q^3+q^4");
        assert_eq!(q(&[0, -1, 0, 3]).to_string(), "-q+3q^3");
        assert_eq!(LaurentQ::v_pow(3).to_string(), "q^{3/2}");
        assert_eq!(LaurentQ::q_pow(-1).to_string(), "q^-1");
        assert_eq!(LaurentQ::zero().to_string(), "0");
    }

    #[test]
    fn substitute_shift() {
        // q^2 -> (q+1)^2
        assert_eq!(q(&[0, 0, 1]).substitute_q_plus_one().unwrap(), q(&[1, 2, 1]));
    }

    #[test]
    fn ratfunc_normalizes() {
        let qm1 = q(&[-1, 1]).to_rational();
        let q2m1 = q(&[-1, 0, 1]).to_rational();
        // (q^2-1)/(q-1) = q+1
        let r = RatFunc::new(q2m1.clone(), qm1.clone()).unwrap();
        assert_eq!(r.to_laurent(), Some(q(&[1, 1]).to_rational()));
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let a = RatFunc::new(LaurentRat::one(), qm1.clone()).unwrap();
        let b = RatFunc::new(LaurentRat::one(), q(&[1, 1]).to_rational()).unwrap();
        let s = &a + &b;
        assert_eq!(s.denominator(), &q2m1);
        assert_eq!(s.numerator(), &q(&[0, 2]).to_rational());
        // multiplying back by (q^2 - 1) clears
        let back = &s * &RatFunc::from_laurent(q2m1);
        assert_eq!(back.to_laurent(), Some(q(&[0, 2]).to_rational()));
        // v^-2 in the denominator moves to the numerator
        let r = RatFunc::new(LaurentRat::one(), LaurentRat::q_pow(-1)).unwrap();
        assert_eq!(r.to_laurent(), Some(LaurentRat::q_pow(1)));
    }
}
