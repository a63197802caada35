//! Shared caches for pipelines that cross module boundaries.

use alloc::collections::BTreeMap;

use crate::budget::Budget;
use crate::coxeter::{ParabolicSet, Permutation};
use crate::error::Result;
use crate::hecke::{HeckeElement, KlTable, Side};
use crate::laurent::{LaurentQ, LaurentRat};
use crate::parabolic::InducedCharacters;
use crate::symfunc::{SymContext, SymFunc};

/// KL tables per `n`, parabolic trace tables and symmetric-function
/// transition matrices, all filled on demand.
pub struct Engine {
    budget: Budget,
    kl: BTreeMap<usize, KlTable>,
    traces: InducedCharacters,
    sym: SymContext,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(Budget::default())
    }
}

impl Engine {
    pub fn new(budget: Budget) -> Self {
        Engine { budget, kl: BTreeMap::new(), traces: InducedCharacters::new(), sym: SymContext::new(budget) }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn kl_table(&mut self, n: usize) -> Result<&mut KlTable> {
        if !self.kl.contains_key(&n) {
            let t = KlTable::with_options(n, Side::Left, &self.budget)?;
            self.kl.insert(n, t);
        }
        Ok(self.kl.get_mut(&n).unwrap())
    }

    /// The table for `n` if one has been built or installed.
    pub fn cached_kl_table(&self, n: usize) -> Option<&KlTable> {
        self.kl.get(&n)
    }

    /// Replaces the table for its `n`, e.g. with one loaded from disk.
    pub fn set_kl_table(&mut self, table: KlTable) {
        self.kl.insert(table.n(), table);
    }

    pub fn sym(&mut self) -> &mut SymContext {
        &mut self.sym
    }

    /// `q^{l(w)/2} C'_w`.
    pub fn kl_basis_element(&mut self, w: &Permutation) -> Result<HeckeElement> {
        self.kl_table(w.n())?.basis_element(w)
    }

    pub fn induced_character(&mut self, a: &HeckeElement, j: &ParabolicSet) -> Result<LaurentQ> {
        crate::budget::Budget::check("parabolic n", a.n(), self.budget.max_n)?;
        self.traces.induced_character(a, j)
    }

    /// Frobenius character in the `m` basis.
    pub fn frobenius_character(&mut self, a: &HeckeElement) -> Result<SymFunc<LaurentRat>> {
        crate::budget::Budget::check("parabolic n", a.n(), self.budget.max_n)?;
        self.sym.frobenius_character(a, &mut self.traces)
    }

    /// `ch(q^{l(w)/2} C'_w)` in the `m` basis.
    pub fn kl_frobenius(&mut self, w: &Permutation) -> Result<SymFunc<LaurentRat>> {
        let e = self.kl_basis_element(w)?;
        self.frobenius_character(&e)
    }
}
