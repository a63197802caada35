//! Indifference graphs, chromatic quasisymmetric functions and unicellular
//! LLT polynomials.
//!
//! Colorings use the palette `1..=n`: a symmetric function of degree `n` is
//! determined by its monomials in `n` variables, so the monomial
//! expansion collected there is exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::coxeter::{HessenbergFunction, Permutation};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::laurent::{LaurentQ, LaurentRat};
use crate::symfunc::{Basis, Partition, PlethysmMode, SymFunc};

/// The graph on `[n]` with an edge `{i, j}`, `i < j`, whenever `j <= m(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndifferenceGraph {
    m: HessenbergFunction,
    edges: Vec<(usize, usize)>,
}

impl IndifferenceGraph {
    pub fn new(m: &HessenbergFunction) -> Self {
        let n = m.n();
        let edges = (1..=n).flat_map(|i| (i + 1..=m.at(i)).map(move |j| (i, j))).collect();
        IndifferenceGraph { m: m.clone(), edges }
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn hessenberg(&self) -> &HessenbergFunction {
        &self.m
    }

    /// Edges sorted by `(i, j)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a != b && b <= self.m.at(a)
    }

    /// Edges `{i < j}` with `kappa(i) < kappa(j)`.
    pub fn ascents(&self, kappa: &[usize]) -> usize {
        self.edges.iter().filter(|&&(i, j)| kappa[i - 1] < kappa[j - 1]).count()
    }

    pub fn is_proper(&self, kappa: &[usize]) -> bool {
        self.edges.iter().all(|&(i, j)| kappa[i - 1] != kappa[j - 1])
    }
}

/// Monomial coefficients keyed by exponent vector in base `n + 1`,
/// each a histogram over the number of ascents.
struct MonomialCollector {
    n: usize,
    powers: Vec<u64>,
    counts: BTreeMap<u64, Vec<u64>>,
    max_asc: usize,
}

impl MonomialCollector {
    fn new(n: usize, max_asc: usize) -> Self {
        let powers = (0..n).map(|c| ((n + 1) as u64).pow(c as u32)).collect();
        MonomialCollector { n, powers, counts: BTreeMap::new(), max_asc }
    }

    fn record(&mut self, code: u64, asc: usize) {
        let slot = self.counts.entry(code).or_insert_with(|| vec![0; self.max_asc + 1]);
        slot[asc] += 1;
    }

    fn decode(&self, code: u64) -> Vec<usize> {
        let base = (self.n + 1) as u64;
        let mut c = code;
        (0..self.n)
            .map(|_| {
                let d = (c % base) as usize;
                c /= base;
                d
            })
            .collect()
    }

    /// Checks that each orbit of exponent vectors carries one coefficient
    /// and returns the `m`-basis expansion.
    fn into_symmetric(self) -> Result<SymFunc<LaurentRat>> {
        let mut orbits: BTreeMap<Partition, (usize, Vec<u64>)> = BTreeMap::new();
        for (code, hist) in &self.counts {
            let lam = Partition::from_unsorted(self.decode(*code));
            match orbits.get_mut(&lam) {
                Some((seen, h)) => {
                    if h != hist {
                        return Err(Error::SymmetryViolation(format!(
                            "monomials of type {} carry different coefficients",
                            lam
                        )));
                    }
                    *seen += 1;
                }
                None => {
                    orbits.insert(lam, (1, hist.clone()));
                }
            }
        }
        let mut terms = Vec::new();
        for (lam, (seen, hist)) in orbits {
            let expected = arrangements(&lam, self.n);
            if seen as u64 != expected {
                return Err(Error::SymmetryViolation(format!(
                    "{} of {} monomials of type {} occur",
                    seen, expected, lam
                )));
            }
            let coeff = LaurentQ::from_terms(
                hist.iter().enumerate().map(|(k, &c)| (2 * k as i32, BigInt::from(c))),
            );
            terms.push((lam, coeff));
        }
        SymFunc::from_integral(Basis::M, self.n, terms)
    }
}

/// Number of distinct exponent vectors of length `n` that sort to `lambda`.
fn arrangements(lam: &Partition, n: usize) -> u64 {
    let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
    for &p in lam.parts() {
        *mult.entry(p).or_default() += 1;
    }
    mult.insert(0, (n - lam.len()) as u64);
    let mut acc: u64 = 1;
    let mut placed: u64 = 0;
    for &m in mult.values() {
        for k in 1..=m {
            placed += 1;
            acc = acc * placed / k;
        }
    }
    acc
}

/// `csf_q(G) = sum over proper colorings of q^{asc} x_kappa`, in the `m` basis.
pub fn csf_q(g: &IndifferenceGraph, budget: &Budget) -> Result<SymFunc<LaurentRat>> {
    let n = g.n();
    Budget::check("csf n", n, budget.csf_n)?;
    let mut col = MonomialCollector::new(n, g.edges().len());
    let mut kappa = vec![0usize; n];
    proper_rec(g, 0, 0, 0, &mut kappa, &mut col);
    col.into_symmetric()
}

fn proper_rec(g: &IndifferenceGraph, v: usize, code: u64, asc: usize, kappa: &mut [usize], col: &mut MonomialCollector) {
    let n = g.n();
    if v == n {
        col.record(code, asc);
        return;
    }
    // earlier neighbours of vertex v+1 are v+1-k for small k, all with m >= v+1
    'colors: for c in 1..=n {
        let mut gained = 0;
        for (u, &ku) in kappa.iter().enumerate().take(v) {
            if g.is_edge(u + 1, v + 1) {
                if ku == c {
                    continue 'colors;
                }
                if ku < c {
                    gained += 1;
                }
            }
        }
        kappa[v] = c;
        proper_rec(g, v + 1, code + col.powers[c - 1], asc + gained, kappa, col);
    }
}

/// `LLT(m) = sum over all colorings of q^{asc} x_kappa`, in the `m` basis.
pub fn llt_direct(m: &HessenbergFunction, budget: &Budget) -> Result<SymFunc<LaurentRat>> {
    let n = m.n();
    Budget::check("LLT n", n, budget.llt_n)?;
    let g = IndifferenceGraph::new(m);
    let mut col = MonomialCollector::new(n, g.edges().len());
    let total = (n as u64).pow(n as u32);
    let mut kappa = vec![0usize; n];
    for idx in 0..total {
        let mut x = idx;
        let mut code = 0;
        for slot in kappa.iter_mut() {
            let c = (x % n as u64) as usize + 1;
            x /= n as u64;
            *slot = c;
            code += col.powers[c - 1];
        }
        let asc = g.ascents(&kappa);
        col.record(code, asc);
    }
    col.into_symmetric()
}

/// `LLT(w) = (q - 1)^n omega(ch(q^{l(w)/2} C'_w))[X/(q - 1)]`, in the `s` basis.
pub fn llt_plethysm(w: &Permutation, engine: &mut Engine) -> Result<SymFunc<LaurentRat>> {
    let n = w.n();
    Budget::check("LLT n", n, engine.budget().llt_n)?;
    let ch = engine.kl_frobenius(w)?;
    let sym = engine.sym();
    let om = sym.omega(&ch)?;
    let divided = sym.plethysm_scale(&om.to_ratfunc(), PlethysmMode::Divide)?;
    let scale = LaurentQ::from_q_coeffs(&[-1, 1]).pow(n as u32).to_rational();
    let scaled = divided.scale(&crate::laurent::RatFunc::from_laurent(scale));
    let in_s = sym.change_basis(&scaled, Basis::S)?;
    in_s.clear_denominators()
}

/// Both sides of `ch(q^{l(w_m)/2} C'_{w_m}) = omega(csf_q(G_m))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChssReport {
    pub m: HessenbergFunction,
    pub w: Permutation,
    /// Frobenius character of the KL basis element, `m` basis.
    pub hecke_side: SymFunc<LaurentRat>,
    /// `omega(csf_q(G_m))`, `m` basis.
    pub coloring_side: SymFunc<LaurentRat>,
}

impl ChssReport {
    pub fn holds(&self) -> bool {
        self.hecke_side == self.coloring_side
    }

    /// Terms where the two sides differ: `(lambda, hecke, coloring)`.
    pub fn diff(&self) -> Vec<(Partition, LaurentRat, LaurentRat)> {
        let mut keys: Vec<Partition> = self.hecke_side.terms().map(|(l, _)| l.clone()).collect();
        keys.extend(self.coloring_side.terms().map(|(l, _)| l.clone()));
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .rev()
            .filter_map(|l| {
                let a = self.hecke_side.coeff(&l);
                let b = self.coloring_side.coeff(&l);
                (a != b).then_some((l, a, b))
            })
            .collect()
    }
}

/// Computes both sides of the Hecke / coloring identity for `m`.
pub fn chss_check(m: &HessenbergFunction, engine: &mut Engine) -> Result<ChssReport> {
    let w = m.codominant();
    let hecke_side = engine.kl_frobenius(&w)?;
    let budget = *engine.budget();
    let csf = csf_q(&IndifferenceGraph::new(m), &budget)?;
    let om = engine.sym().omega(&csf)?;
    let coloring_side = engine.sym().change_basis(&om, Basis::M)?;
    Ok(ChssReport { m: m.clone(), w, hecke_side, coloring_side })
}

/// What [`conjecture_scan`] tests for each permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    /// `ch(q^{l(w)/2} C'_w)` has `h`-coefficients in `N[q]`.
    HPositivity,
    /// Each `h`-coefficient of `ch(q^{l(w)/2} C'_w)` is log-concave.
    LogConcavity,
    /// `LLT(w)` with `q -> q + 1` has `e`-coefficients in `N[q]`.
    ShiftedE,
}

impl ScanKind {
    pub fn name(self) -> &'static str {
        match self {
            ScanKind::HPositivity => "h-positivity",
            ScanKind::LogConcavity => "log-concavity",
            ScanKind::ShiftedE => "shifted-e",
        }
    }

    /// How the expansion in each row is obtained.
    pub fn convention(self) -> &'static str {
        match self {
            ScanKind::HPositivity | ScanKind::LogConcavity => "ch(q^{l(w)/2} C'_w) in the h basis",
            ScanKind::ShiftedE => "LLT(w) with q replaced by q+1, in the e basis",
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for ScanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h-positivity" => Ok(ScanKind::HPositivity),
            "log-concavity" => Ok(ScanKind::LogConcavity),
            "shifted-e" => Ok(ScanKind::ShiftedE),
            _ => Err(Error::UnknownName(format!("scan kind {}", s))),
        }
    }
}

/// One permutation's verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub w: Permutation,
    pub expansion: SymFunc<LaurentRat>,
    /// Per-coefficient verdicts in the order of `expansion.terms()`.
    pub coefficient_verdicts: Vec<(Partition, bool)>,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub n: usize,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn failures(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| !r.verdict)
    }
}

/// Evaluates the chosen property for every `w` in `S_n`, in `(length, lex)`
/// order. Outcomes are reported, never asserted.
pub fn conjecture_scan(kind: ScanKind, n: usize, engine: &mut Engine) -> Result<ScanReport> {
    let limit = match kind {
        ScanKind::ShiftedE => engine.budget().llt_n,
        _ => engine.budget().max_n,
    };
    Budget::check("scan n", n, limit)?;
    let mut perms = Permutation::all(n);
    perms.sort_by_key(|w| (w.length(), w.clone()));
    let mut rows = Vec::with_capacity(perms.len());
    for w in perms {
        let expansion = match kind {
            ScanKind::HPositivity | ScanKind::LogConcavity => {
                let ch = engine.kl_frobenius(&w)?;
                engine.sym().change_basis(&ch, Basis::H)?
            }
            ScanKind::ShiftedE => {
                let llt = llt_plethysm(&w, engine)?;
                let mut shifted = SymFunc::zero(Basis::S, n);
                for (l, c) in llt.terms() {
                    let term = SymFunc::basis_element(Basis::S, l).scale(&c.substitute_q_plus_one()?);
                    shifted = shifted.add(&term)?;
                }
                engine.sym().change_basis(&shifted, Basis::E)?
            }
        };
        let coefficient_verdicts: Vec<(Partition, bool)> = expansion
            .terms()
            .map(|(l, c)| {
                let ok = match kind {
                    ScanKind::LogConcavity => c.is_log_concave().unwrap_or(false),
                    _ => c.is_q_polynomial() && c.has_nonnegative_coeffs(),
                };
                (l.clone(), ok)
            })
            .collect();
        let verdict = coefficient_verdicts.iter().all(|x| x.1);
        rows.push(ScanRow { w, expansion, coefficient_verdicts, verdict });
    }
    Ok(ScanReport { kind, n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(c: &[i64]) -> LaurentRat {
        LaurentQ::from_q_coeffs(c).to_rational()
    }

    #[test]
    fn graph_edges() {
        let g = IndifferenceGraph::new(&hf(&[2, 3, 4, 4]));
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (3, 4)]);
        assert!(g.is_edge(3, 2));
        assert!(!g.is_edge(1, 3));
        assert_eq!(g.ascents(&[1, 2, 1, 3]), 2);
    }

    #[test]
    fn csf_path_graph() {
        let g = IndifferenceGraph::new(&hf(&[2, 3, 4, 4]));
        let csf = csf_q(&g, &Budget::default()).unwrap();
        let mut engine = Engine::default();
        let e = engine.sym().change_basis(&csf, Basis::E).unwrap();
        let expected = SymFunc::from_terms(
            Basis::E,
            4,
            [(part("4"), q(&[1, 1, 1, 1])), (part("3,1"), q(&[0, 1, 1])), (part("2,2"), q(&[0, 1, 1]))],
        )
        .unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn csf_edgeless_is_p1_power() {
        let g = IndifferenceGraph::new(&hf(&[1, 2, 3]));
        let csf = csf_q(&g, &Budget::default()).unwrap();
        let mut engine = Engine::default();
        let p = engine.sym().change_basis(&csf, Basis::P).unwrap();
        assert_eq!(p, SymFunc::basis_element(Basis::P, &part("1,1,1")));
    }

    #[test]
    fn csf_complete_graph() {
        let g = IndifferenceGraph::new(&hf(&[3, 3, 3]));
        let csf = csf_q(&g, &Budget::default()).unwrap();
        let mut engine = Engine::default();
        let e = engine.sym().change_basis(&csf, Basis::E).unwrap();
        let qfact = &q(&[1, 1]) * &q(&[1, 1, 1]);
        assert_eq!(e, SymFunc::basis_element(Basis::E, &part("3")).scale(&qfact));
    }

    #[test]
    fn arrangements_count() {
        assert_eq!(arrangements(&part("2,1"), 3), 6);
        assert_eq!(arrangements(&part("1,1,1"), 3), 1);
        assert_eq!(arrangements(&part("3"), 3), 3);
        assert_eq!(arrangements(&part("2,2"), 4), 6);
    }

    #[test]
    fn llt_single_edge() {
        // colorings of an edge with palette 2: 11, 22 (no ascent), 12 (ascent), 21
        let l = llt_direct(&hf(&[2, 2]), &Budget::default()).unwrap();
        let expected = SymFunc::from_terms(Basis::M, 2, [(part("2"), q(&[1])), (part("1,1"), q(&[1, 1]))]).unwrap();
        assert_eq!(l, expected);
    }

    #[test]
    fn llt_plethysm_small() {
        let mut engine = Engine::default();
        let l = llt_plethysm(&Permutation::identity(1), &mut engine).unwrap();
        assert_eq!(l, SymFunc::basis_element(Basis::S, &part("1")));
        for m in HessenbergFunction::all(3) {
            let a = llt_plethysm(&m.codominant(), &mut engine).unwrap();
            let b = llt_direct(&m, &Budget::default()).unwrap();
            assert_eq!(engine.sym().change_basis(&b, Basis::S).unwrap(), a, "m = {}", m);
        }
    }

    #[test]
    fn chss_small() {
        let mut engine = Engine::default();
        for n in 1..=4 {
            for m in HessenbergFunction::all(n) {
                let r = chss_check(&m, &mut engine).unwrap();
                assert!(r.holds(), "m = {}: {:?}", m, r.diff());
            }
        }
    }

    #[test]
    fn scan_n3() {
        let mut engine = Engine::default();
        let r = conjecture_scan(ScanKind::HPositivity, 3, &mut engine).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert_eq!(r.failures().count(), 0);
        let r = conjecture_scan(ScanKind::ShiftedE, 3, &mut engine).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert!(matches!(
            conjecture_scan(ScanKind::ShiftedE, 7, &mut engine),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
