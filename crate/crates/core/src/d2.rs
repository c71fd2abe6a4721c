//! The pair `m₁, m₂` realizing the second generalized Hamming weight, d₂-test
//! sets, and the sufficient condition under which the basis-derived set `M_G`
//! is one.

use std::cmp::Ordering;
use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{mask_indices, CodeTable, LinearCode, Word};
use crate::error::{Error, Result};
use crate::groebner::{associated_codewords, compute_mg, find_by_codeword, reduced_gb, GroebnerBasis};
use crate::orders::{check_minus_compatibility, word_cmp, OrderKind, Verdict};
use crate::Limits;

/// Brute-force facts about a code shared by every check in this module.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub code: LinearCode,
    pub order: OrderKind,
    pub table: CodeTable,
    pub d1: usize,
    pub d2: usize,
    pub minimal: HashSet<u128>,
    pub m1: Word,
    pub m2: Word,
}

fn popcount(m: u128) -> usize {
    m.count_ones() as usize
}

fn min_word<'a>(order: OrderKind, code: &LinearCode, it: impl Iterator<Item = &'a Word>) -> Option<Word> {
    let f = code.field();
    it.min_by(|a, b| word_cmp(order, f, a, b)).cloned()
}

impl Analysis {
    pub fn new(code: &LinearCode, order: OrderKind, limits: &Limits) -> Result<Self> {
        if code.k() < 2 {
            return Err(Error::DimensionTooSmall(code.k()));
        }
        let table = code.table(limits)?;
        let d1 = table.min_weight();
        let d2 = table.ghw_with_witnesses(2, 0, limits)?.0;
        let minimal = table.minimal_masks();

        // M₁ depends on m only through its support
        let mut masks: Vec<u128> = table.masks.iter().copied().filter(|&m| m != 0).collect();
        masks.sort_unstable();
        masks.dedup();
        let pairs = (masks.len() as u128).pow(2);
        if pairs > limits.pairs {
            return Err(Error::TooLarge { what: "support pairs", count: pairs, cap: limits.pairs });
        }
        let in_m1: HashSet<u128> = masks
            .par_iter()
            .filter(|&&a| std::iter::once(&0u128).chain(&masks).any(|&b| popcount(a | b) == d2))
            .copied()
            .collect();
        let m1 = min_word(order, code, table.words.iter().filter(|w| in_m1.contains(&w.mask_unchecked())))
            .expect("some plane attains d2");
        let i_mask = m1.mask_unchecked();
        let m2 = min_word(order, code, table.words.iter().filter(|w| popcount(i_mask | w.mask_unchecked()) == d2))
            .expect("m1 extends to a plane attaining d2");
        Ok(Self { code: code.clone(), order, table, d1, d2, minimal, m1, m2 })
    }

    pub fn i(&self) -> Vec<usize> {
        mask_indices(self.m1.mask_unchecked())
    }
    pub fn j(&self) -> Vec<usize> {
        mask_indices(self.m2.mask_unchecked())
    }
    pub fn intersection(&self) -> usize {
        popcount(self.m1.mask_unchecked() & self.m2.mask_unchecked())
    }

    /// `|I ∩ J| ≤ (|J| + 1) / 2`.
    pub fn hypothesis_46(&self) -> bool {
        2 * self.intersection() <= self.m2.weight() + 1
    }

    /// The set `M₁`, literally: nonzero m with some codeword m′ and `w(⟨m,m′⟩) = d₂`.
    pub fn big_m1(&self) -> Vec<Word> {
        self.table
            .words
            .iter()
            .filter(|m| !m.is_zero())
            .filter(|m| {
                let a = m.mask_unchecked();
                self.table.masks.iter().any(|&b| popcount(a | b) == self.d2)
            })
            .cloned()
            .collect()
    }

    /// The set `M₂ = {m : w(⟨m₁, m⟩) = d₂}`.
    pub fn big_m2(&self) -> Vec<Word> {
        let i = self.m1.mask_unchecked();
        self.table.words.iter().filter(|w| popcount(i | w.mask_unchecked()) == self.d2).cloned().collect()
    }

    pub fn is_minimal(&self, w: &Word) -> bool {
        self.code.contains(w) && self.minimal.contains(&w.mask_unchecked())
    }

    /// Whether `set ⊆ M(C)` holds two independent words spanning a plane of weight d₂.
    pub fn is_d2_test_set(&self, set: &[Word]) -> Result<Option<(Word, Word)>> {
        if set.iter().any(|w| !self.is_minimal(w)) {
            return Err(Error::NotMinimalSupport);
        }
        let f = self.code.field();
        let masks: Vec<u128> = set.iter().map(Word::mask_unchecked).collect();
        let hit = (0..set.len()).into_par_iter().find_map_first(|a| {
            (a + 1..set.len())
                .find(|&b| popcount(masks[a] | masks[b]) == self.d2 && set[b].multiple_of(f, &set[a]).is_none())
                .map(|b| (set[a].clone(), set[b].clone()))
        });
        Ok(hit)
    }

    /// The five structural facts every analyzed code satisfies; returns the failed ones.
    pub fn invariant_failures(&self) -> Vec<String> {
        let q = self.code.q();
        let (wi, wj, x) = (self.m1.weight(), self.m2.weight(), self.intersection());
        let union = popcount(self.m1.mask_unchecked() | self.m2.mask_unchecked());
        let mut out = Vec::new();
        if union != self.d2 {
            out.push(format!("|I ∪ J| = {union} differs from d2 = {}", self.d2));
        }
        if wi >= self.d2 {
            out.push(format!("|I| = {wi} not below d2 = {}", self.d2));
        }
        if wj >= self.d2 {
            out.push(format!("|J| = {wj} not below d2 = {}", self.d2));
        }
        if wi > wj {
            out.push(format!("|I| = {wi} exceeds |J| = {wj}"));
        }
        if q * x > (q - 1) * wi {
            out.push(format!("|I ∩ J| = {x} exceeds (q-1)/q · |I| with |I| = {wi}, q = {q}"));
        }
        if word_cmp(self.order, self.code.field(), &self.m1, &self.m2) != Ordering::Less {
            out.push("m1 is not below m2".into());
        }
        out
    }

    pub fn prop42(&self) -> Prop42 {
        let q = self.code.q();
        let (wi, wj, x) = (self.m1.weight(), self.m2.weight(), self.intersection());
        Prop42 { intersection: x, i: wi, j: wj, q, holds: q * x <= (q - 1) * wi && wi <= wj }
    }
}

/// The intersection bound `|I ∩ J| ≤ (q-1)/q |I| ≤ (q-1)/q |J|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop42 {
    pub intersection: usize,
    pub i: usize,
    pub j: usize,
    pub q: usize,
    pub holds: bool,
}

pub fn check_prop42(code: &LinearCode, order: OrderKind, limits: &Limits) -> Result<Prop42> {
    Ok(Analysis::new(code, order, limits)?.prop42())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Silent,
    Falsified,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem46 {
    pub hypothesis: bool,
    pub order_condition: Verdict,
    pub status: Status,
    pub mg_is_test_set: bool,
    pub witnesses: Option<(Word, Word)>,
    /// some basis element has `c_f = m₁`
    pub prop44: bool,
    /// some basis element g has `w(⟨m₁, c_g⟩) = d₂` and `w(c_g) = w(m₂)`
    pub prop45: bool,
    /// some basis element has `c_g = m₂`
    pub cg_equals_m2: bool,
    pub failures: Vec<String>,
}

/// Evaluates the sufficient condition on a computed basis.
///
/// The conclusion is asserted only when the intersection hypothesis holds and the
/// order condition is exact (or `allow_sampled` accepts a sampled verdict).
pub fn check_theorem_46(
    a: &Analysis,
    gb: &GroebnerBasis,
    mg: &[Word],
    order_condition: Verdict,
    allow_sampled: bool,
) -> Result<Theorem46> {
    let witnesses = a.is_d2_test_set(mg)?;
    let assoc = associated_codewords(gb);
    let prop44 = find_by_codeword(gb, &a.m1).is_some();
    let i_mask = a.m1.mask_unchecked();
    let prop45 = assoc.iter().any(|c| popcount(i_mask | c.mask_unchecked()) == a.d2 && c.weight() == a.m2.weight());
    let cg_equals_m2 = find_by_codeword(gb, &a.m2).is_some();
    let hypothesis = a.hypothesis_46();
    let order_ok = order_condition.holds() && (order_condition.is_exact() || allow_sampled);

    let mut failures = Vec::new();
    if hypothesis {
        if !prop44 {
            failures.push("no basis element has associated codeword m1".to_string());
        }
        if order_ok {
            if witnesses.is_none() {
                failures.push("M_G is not a d2-test set".to_string());
            }
            if !prop45 {
                failures.push("no basis element g with w(<m1, c_g>) = d2 and w(c_g) = w(m2)".to_string());
            }
            if a.code.field().is_char2() && !cg_equals_m2 {
                failures.push("characteristic 2 but no basis element has c_g = m2".to_string());
            }
        }
    }
    let status = if !failures.is_empty() {
        Status::Falsified
    } else if hypothesis && order_ok {
        Status::Verified
    } else {
        Status::Silent
    };
    Ok(Theorem46 {
        hypothesis,
        order_condition,
        status,
        mg_is_test_set: witnesses.is_some(),
        witnesses,
        prop44,
        prop45,
        cg_equals_m2,
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct D2Report {
    pub m1: Word,
    pub m2: Word,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub d1: usize,
    pub d2: usize,
    pub intersection: usize,
    pub condition_thm46: bool,
    pub prop42: Prop42,
    pub invariant_failures: Vec<String>,
    pub gb_size: usize,
    pub mg: Vec<Word>,
    pub theorem46: Theorem46,
}

/// Full pipeline: brute-force analysis, basis, `M_G`, and every verdict.
pub fn analyze(code: &LinearCode, order: OrderKind, limits: &Limits, seed: u64) -> Result<D2Report> {
    let a = Analysis::new(code, order, limits)?;
    let gb = reduced_gb(code, order, limits)?;
    let mg = compute_mg(code, &gb, limits)?;
    let cond5 = check_minus_compatibility(order, code.field(), code.n(), limits, seed);
    let theorem46 = check_theorem_46(&a, &gb, &mg, cond5, false)?;
    Ok(D2Report {
        m1: a.m1.clone(),
        m2: a.m2.clone(),
        i: a.i(),
        j: a.j(),
        d1: a.d1,
        d2: a.d2,
        intersection: a.intersection(),
        condition_thm46: a.hypothesis_46(),
        prop42: a.prop42(),
        invariant_failures: a.invariant_failures(),
        gb_size: gb.len(),
        mg,
        theorem46,
    })
}
