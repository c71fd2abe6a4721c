//! Variables `x_{i,j}`, the encoding of words as square-free monomials, and
//! the two degree-compatible orders used throughout.
//!
//! Variables are indexed `v = (i-1)(q-1) + (j-1)`. Index 0 is the largest
//! variable, so `X_n ≺ … ≺ X_1` and `x_{i,q-1} ≺ … ≺ x_{i,1}` inside a block.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::Word;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

impl FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "deglex" => Ok(OrderKind::DegLex),
            "degrevlex" => Ok(OrderKind::DegRevLex),
            other => Err(format!("unknown order {other:?} (expected deglex or degrevlex)")),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A monomial in the `n(q-1)` variables, stored as a dense exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    per_block: u8,
    exps: Vec<u8>,
    degree: u32,
}

impl Monomial {
    pub fn one(n: usize, q: usize) -> Self {
        Self { per_block: (q - 1) as u8, exps: vec![0; n * (q - 1)], degree: 0 }
    }

    pub fn from_exponents(q: usize, exps: Vec<u8>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { per_block: (q - 1) as u8, exps, degree }
    }

    /// Builds a monomial from one-based `(i, j, e)` triples.
    pub fn from_terms(n: usize, q: usize, terms: &[(usize, usize, u8)]) -> Result<Self> {
        let mut m = Self::one(n, q);
        for &(i, j, e) in terms {
            if i < 1 || i > n || j < 1 || j >= q {
                return Err(Error::BadIndex { i, k: n });
            }
            let v = var_index(q, i, j);
            m.exps[v] = m.exps[v].checked_add(e).ok_or(Error::NotInImage)?;
            m.degree += e as u32;
        }
        Ok(m)
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }
    pub fn n(&self) -> usize {
        self.exps.len() / self.per_block as usize
    }
    pub fn q(&self) -> usize {
        self.per_block as usize + 1
    }
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul_var(&self, v: usize) -> Self {
        let mut m = self.clone();
        m.exps[v] += 1;
        m.degree += 1;
        m
    }

    pub fn div_var(&self, v: usize) -> Option<Self> {
        if self.exps[v] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[v] -= 1;
        m.degree -= 1;
        Some(m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Self { per_block: self.per_block, exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Square-free with at most one variable per block.
    pub fn in_delta_image(&self) -> bool {
        self.exps
            .chunks(self.per_block as usize)
            .all(|b| b.iter().all(|&e| e <= 1) && b.iter().filter(|&&e| e == 1).count() <= 1)
    }

    /// One-based `(i, j, e)` triples in descending variable order.
    pub fn terms(&self) -> Vec<(usize, usize, u8)> {
        let pb = self.per_block as usize;
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, &e)| (v / pb + 1, v % pb + 1, e)).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, j, e) in self.terms() {
            write!(f, "x_{{{i},{j}}}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn var_index(q: usize, i: usize, j: usize) -> usize {
    (i - 1) * (q - 1) + (j - 1)
}

pub fn var_of(q: usize, v: usize) -> (usize, usize) {
    (v / (q - 1) + 1, v % (q - 1) + 1)
}

pub fn delta(f: &FieldSpec, w: &Word) -> Monomial {
    let q = f.q();
    let mut m = Monomial::one(w.len(), q);
    for (i, &x) in w.0.iter().enumerate() {
        if x != 0 {
            m.exps[i * (q - 1) + f.log_unchecked(x) - 1] = 1;
            m.degree += 1;
        }
    }
    m
}

pub fn delta_inverse(f: &FieldSpec, m: &Monomial) -> Result<Word> {
    if !m.in_delta_image() || m.q() != f.q() {
        return Err(Error::NotInImage);
    }
    let mut w = Word::zeros(m.n());
    for (i, j, _) in m.terms() {
        w.0[i - 1] = f.pow_alpha(j as u32);
    }
    Ok(w)
}

/// Key whose natural ordering is the monomial order.
pub fn monomial_key(kind: OrderKind, m: &Monomial) -> (u32, Vec<u8>) {
    match kind {
        OrderKind::DegLex => (m.degree, m.exps.clone()),
        OrderKind::DegRevLex => (m.degree, m.exps.iter().rev().map(|&e| u8::MAX - e).collect()),
    }
}

pub fn compare(kind: OrderKind, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| match kind {
        OrderKind::DegLex => a.exps.cmp(&b.exps),
        OrderKind::DegRevLex => b.exps.iter().rev().cmp(a.exps.iter().rev()),
    })
}

/// Per-coordinate rank used by the word-level comparison.
#[inline]
fn coord_rank(kind: OrderKind, f: &FieldSpec, x: u8) -> u8 {
    let q = f.q() as u8;
    match (kind, x) {
        (OrderKind::DegLex, 0) => 0,
        (OrderKind::DegRevLex, 0) => q,
        (_, x) => q - f.log_unchecked(x) as u8,
    }
}

/// Key whose natural ordering is the induced order on words.
pub fn word_key(kind: OrderKind, f: &FieldSpec, w: &Word) -> (usize, Vec<u8>) {
    let ranks = w.0.iter().map(|&x| coord_rank(kind, f, x));
    let key = match kind {
        OrderKind::DegLex => ranks.collect(),
        OrderKind::DegRevLex => ranks.rev().collect(),
    };
    (w.weight(), key)
}

/// Compares words through their monomials without building them.
pub fn word_compare(kind: OrderKind, f: &FieldSpec, a: &Word, b: &Word) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(word_cmp(kind, f, a, b))
}

pub(crate) fn word_cmp(kind: OrderKind, f: &FieldSpec, a: &Word, b: &Word) -> Ordering {
    let by_weight = a.weight().cmp(&b.weight());
    if by_weight != Ordering::Equal {
        return by_weight;
    }
    let pairs = a.0.iter().zip(&b.0);
    let differing = match kind {
        OrderKind::DegLex => pairs.clone().find(|(x, y)| x != y),
        OrderKind::DegRevLex => pairs.rev().find(|(x, y)| x != y),
    };
    match differing {
        None => Ordering::Equal,
        Some((&x, &y)) => coord_rank(kind, f, x).cmp(&coord_rank(kind, f, y)),
    }
}

/// Outcome of an order-condition scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    /// Every relevant pair was examined.
    ExhaustiveTrue {
        checked: u128,
    },
    /// Exact, via the per-weight extremes rather than all pairs.
    ExtremalTrue {
        weights: usize,
    },
    Violated {
        a: Word,
        b: Word,
    },
    SampledTrue {
        samples: u64,
        seed: u64,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Violated { .. })
    }
    pub fn is_exact(&self) -> bool {
        matches!(self, Verdict::ExhaustiveTrue { .. } | Verdict::ExtremalTrue { .. } | Verdict::Violated { .. })
    }
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::ExhaustiveTrue { .. } => "exhaustive-true",
            Verdict::ExtremalTrue { .. } => "extremal-true",
            Verdict::Violated { .. } => "exhaustive-false",
            Verdict::SampledTrue { .. } => "sampled-true",
        }
    }
}

/// Decodes `idx` into a pair of words with disjoint supports: per coordinate,
/// digit 0 leaves both zero, digits 1..q-1 set `a`, digits q..2q-2 set `b`.
fn disjoint_pair(q: usize, n: usize, mut idx: u128) -> (Word, Word) {
    let base = (2 * q - 1) as u128;
    let mut a = Word::zeros(n);
    let mut b = Word::zeros(n);
    for i in 0..n {
        let d = (idx % base) as usize;
        idx /= base;
        if d >= q {
            b.0[i] = (d - q + 1) as u8;
        } else if d > 0 {
            a.0[i] = d as u8;
        }
    }
    (a, b)
}

/// Checks that `Δ(b) ≺ Δ(a)` implies `Δ(-b) ≺ Δ(-a)` for disjointly supported words.
/// Exhaustive when the `(2q-1)^n` pairs fit in `limits.pairs`, else sampled.
pub fn check_minus_compatibility(kind: OrderKind, f: &FieldSpec, n: usize, limits: &Limits, seed: u64) -> Verdict {
    let q = f.q();
    let test = |a: &Word, b: &Word| {
        word_cmp(kind, f, b, a) != Ordering::Less || word_cmp(kind, f, &b.neg(f), &a.neg(f)) == Ordering::Less
    };
    let total = ((2 * q - 1) as u128).checked_pow(n as u32);
    match total {
        Some(total) if total <= limits.pairs => {
            for idx in 0..total {
                let (a, b) = disjoint_pair(q, n, idx);
                if !test(&a, &b) {
                    return Verdict::Violated { a, b };
                }
            }
            Verdict::ExhaustiveTrue { checked: total }
        }
        _ => {
            let samples = limits.pairs.min(1_000_000) as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let mut a = Word::zeros(n);
                let mut b = Word::zeros(n);
                for i in 0..n {
                    let d = rng.gen_range(0..2 * q - 1);
                    if d >= q {
                        b.0[i] = (d - q + 1) as u8;
                    } else if d > 0 {
                        a.0[i] = d as u8;
                    }
                }
                if !test(&a, &b) {
                    return Verdict::Violated { a, b };
                }
            }
            Verdict::SampledTrue { samples, seed }
        }
    }
}

/// The ≺-largest and ≺-smallest words of weight `w` supported inside `blocks`
/// (zero-based, ascending).
pub fn weight_extremes(kind: OrderKind, f: &FieldSpec, n: usize, blocks: &[usize], w: usize) -> Option<(Word, Word)> {
    if w == 0 || w > blocks.len() {
        return None;
    }
    // Both orders put the earliest blocks and the smallest exponent on top.
    let _ = kind;
    let mut max = Word::zeros(n);
    let mut min = Word::zeros(n);
    for &i in &blocks[..w] {
        max.0[i] = f.alpha();
    }
    for &i in &blocks[blocks.len() - w..] {
        min.0[i] = 1;
    }
    Some((max, min))
}

fn for_each_word_on(f: &FieldSpec, n: usize, blocks: &[usize], w: usize, mut visit: impl FnMut(&Word)) {
    let q = f.q();
    let total = q.pow(blocks.len() as u32);
    for idx in 0..total {
        let mut word = Word::zeros(n);
        let mut rest = idx;
        for &i in blocks {
            word.0[i] = (rest % q) as u8;
            rest /= q;
        }
        if word.weight() == w {
            visit(&word);
        }
    }
}

/// Checks that every word of weight `w` supported in the first `m` coordinates is
/// ≻ every word of the same weight supported outside them.
pub fn check_block_dominance(kind: OrderKind, f: &FieldSpec, n: usize, m: usize, limits: &Limits) -> Result<Verdict> {
    if m > n {
        return Err(Error::BadIndex { i: m, k: n });
    }
    let inner: Vec<usize> = (0..m).collect();
    let outer: Vec<usize> = (m..n).collect();
    let q = f.q() as u128;
    let side = |len: usize| q.checked_pow(len as u32).unwrap_or(u128::MAX);
    let pairs = side(m).saturating_mul(side(n - m));
    if pairs <= limits.pairs {
        let mut checked = 0u128;
        for w in 1..=m.min(n - m) {
            let mut us = Vec::new();
            for_each_word_on(f, n, &inner, w, |u| us.push(u.clone()));
            let mut bad = None;
            for_each_word_on(f, n, &outer, w, |v| {
                if bad.is_none() {
                    if let Some(u) = us.iter().find(|u| word_cmp(kind, f, u, v) != Ordering::Greater) {
                        bad = Some((u.clone(), v.clone()));
                    }
                    checked += us.len() as u128;
                }
            });
            if let Some((a, b)) = bad {
                return Ok(Verdict::Violated { a, b });
            }
        }
        return Ok(Verdict::ExhaustiveTrue { checked });
    }
    let weights = m.min(n - m);
    for w in 1..=weights {
        let (_, u_min) = weight_extremes(kind, f, n, &inner, w).unwrap();
        let (v_max, _) = weight_extremes(kind, f, n, &outer, w).unwrap();
        if word_cmp(kind, f, &u_min, &v_max) != Ordering::Greater {
            return Ok(Verdict::Violated { a: u_min, b: v_max });
        }
    }
    Ok(Verdict::ExtremalTrue { weights })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn all_words(f: &FieldSpec, n: usize) -> Vec<Word> {
        let q = f.q();
        (0..q.pow(n as u32))
            .map(|mut idx| {
                Word(
                    (0..n)
                        .map(|_| {
                            let d = idx % q;
                            idx /= q;
                            d as u8
                        })
                        .collect(),
                )
            })
            .collect()
    }

    #[test]
    fn delta_examples() {
        let f = gf3();
        assert!(delta(&f, &Word::zeros(3)).is_one());
        let m = delta(&f, &Word(vec![2, 0, 1]));
        assert_eq!(m.terms(), vec![(1, 1, 1), (3, 2, 1)]);
        assert_eq!(m.to_string(), "x_{1,1}x_{3,2}");
        let m1 = Word(vec![2, 0, 0, 0, 0, 2, 0, 1, 0]);
        let d = delta(&f, &m1);
        assert_eq!(d.to_string(), "x_{1,1}x_{6,1}x_{8,2}");
        assert_eq!(delta_inverse(&f, &d).unwrap(), m1);
    }

    #[test]
    fn delta_inverse_rejects() {
        let f = gf3();
        let sq = Monomial::from_terms(2, 3, &[(1, 1, 2)]).unwrap();
        assert_eq!(delta_inverse(&f, &sq), Err(Error::NotInImage));
        let two = Monomial::from_terms(2, 3, &[(1, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(delta_inverse(&f, &two), Err(Error::NotInImage));
    }

    #[test]
    fn delta_roundtrip_and_degree() {
        for (p, s) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = FieldSpec::new(p, s, None).unwrap();
            for w in all_words(&f, 3) {
                let m = delta(&f, &w);
                assert_eq!(m.degree() as usize, w.weight());
                assert_eq!(delta_inverse(&f, &m).unwrap(), w);
            }
        }
    }

    #[test]
    fn compare_examples() {
        let f = gf3();
        let one = Monomial::one(9, 3);
        let x = Monomial::from_terms(9, 3, &[(5, 2, 1)]).unwrap();
        for k in [OrderKind::DegLex, OrderKind::DegRevLex] {
            assert_eq!(compare(k, &one, &x), Ordering::Less);
        }
        let mut last = Word::zeros(9);
        last.0[8] = 1;
        let mut first = Word::zeros(9);
        first.0[0] = 1;
        let k = OrderKind::DegRevLex;
        assert_eq!(compare(k, &delta(&f, &last), &delta(&f, &first)), Ordering::Less);
        assert_eq!(word_compare(k, &f, &last, &first).unwrap(), Ordering::Less);
        assert_eq!(word_compare(OrderKind::DegLex, &f, &last, &first).unwrap(), Ordering::Less);
        let g_lead = Monomial::from_terms(9, 3, &[(6, 2, 1), (7, 2, 1), (9, 2, 1)]).unwrap();
        let g_trail = Monomial::from_terms(9, 3, &[(2, 1, 1), (5, 1, 1)]).unwrap();
        assert_eq!(compare(k, &g_lead, &g_trail), Ordering::Greater);
        let m1 = Word(vec![2, 0, 0, 0, 0, 2, 0, 1, 0]);
        let m2 = Word(vec![0, 1, 0, 0, 1, 1, 1, 0, 1]);
        assert_eq!(word_compare(k, &f, &m1, &m2).unwrap(), Ordering::Less);
        assert_eq!(word_compare(k, &f, &Word::zeros(9), &m1).unwrap(), Ordering::Less);
        assert_eq!(word_compare(k, &f, &m1, &Word::zeros(8)), Err(Error::LengthMismatch(9, 8)));
    }

    #[test]
    fn word_compare_agrees_with_monomials() {
        for (p, s) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = FieldSpec::new(p, s, None).unwrap();
            let n = if f.q() > 3 { 2 } else { 3 };
            let words = all_words(&f, n);
            for k in [OrderKind::DegLex, OrderKind::DegRevLex] {
                for a in &words {
                    for b in &words {
                        let (ma, mb) = (delta(&f, a), delta(&f, b));
                        let expect = compare(k, &ma, &mb);
                        assert_eq!(word_cmp(k, &f, a, b), expect);
                        assert_eq!(word_key(k, &f, a).cmp(&word_key(k, &f, b)), expect);
                        assert_eq!(monomial_key(k, &ma).cmp(&monomial_key(k, &mb)), expect);
                        assert_eq!(expect == Ordering::Equal, a == b);
                    }
                }
            }
        }
    }

    /// All monomials of degree ≤ d in `nv` variables.
    fn monomials_upto(nv: usize, q: usize, d: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::from_exponents(q, vec![0; nv])];
        let mut frontier = out.clone();
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &frontier {
                let start = m.exps.iter().rposition(|&e| e > 0).unwrap_or(0);
                for v in start..nv {
                    next.push(m.mul_var(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn order_axioms_up_to_degree_three() {
        // n(q-1) = 6 variables, q = 3
        let ms = monomials_upto(6, 3, 3);
        for k in [OrderKind::DegLex, OrderKind::DegRevLex] {
            let mut sorted = ms.clone();
            sorted.sort_by(|a, b| compare(k, a, b));
            for w in sorted.windows(2) {
                assert_eq!(compare(k, &w[0], &w[1]), Ordering::Less);
            }
            assert!(sorted[0].is_one());
            for a in &ms {
                for b in &ms {
                    let c = compare(k, a, b);
                    assert_eq!(c, compare(k, b, a).reverse());
                    if a.degree() < b.degree() {
                        assert_eq!(c, Ordering::Less);
                    }
                    if c == Ordering::Less && a.degree() < 3 && b.degree() < 3 {
                        for v in 0..6 {
                            assert_eq!(compare(k, &a.mul_var(v), &b.mul_var(v)), Ordering::Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coordinate_ranks_and_disjoint_products() {
        for (p, s) in [(2, 1), (3, 1), (2, 2)] {
            let f = FieldSpec::new(p, s, None).unwrap();
            let words = all_words(&f, 3);
            for k in [OrderKind::DegLex, OrderKind::DegRevLex] {
                for a in &words {
                    for b in &words {
                        let prod = delta(&f, a).mul(&delta(&f, b));
                        let sum = delta(&f, &a.add(&f, b));
                        assert_ne!(compare(k, &sum, &prod), Ordering::Greater);
                        if a.mask_unchecked() & b.mask_unchecked() == 0 {
                            assert_eq!(sum, prod);
                        }
                        if word_cmp(k, &f, a, b) == Ordering::Less {
                            assert!(a.weight() <= b.weight());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn minus_compatibility() {
        let l = Limits::default();
        for (p, s) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = FieldSpec::new(p, s, None).unwrap();
            for k in [OrderKind::DegLex, OrderKind::DegRevLex] {
                let v = check_minus_compatibility(k, &f, 3, &l, 1);
                assert!(matches!(v, Verdict::ExhaustiveTrue { .. }), "{v:?}");
            }
        }
        let small = Limits { pairs: 100, ..Limits::default() };
        let v = check_minus_compatibility(OrderKind::DegRevLex, &gf3(), 6, &small, 9);
        assert_eq!(v, Verdict::SampledTrue { samples: 100, seed: 9 });
        assert!(!v.is_exact());
    }

    #[test]
    fn block_dominance() {
        let f = gf3();
        let l = Limits::default();
        for k in [OrderKind::DegLex, OrderKind::DegRevLex] {
            let v = check_block_dominance(k, &f, 6, 3, &l).unwrap();
            assert!(matches!(v, Verdict::ExhaustiveTrue { .. }), "{v:?}");
            assert!(matches!(check_block_dominance(k, &f, 4, 4, &l).unwrap(), Verdict::ExhaustiveTrue { checked: 0 }));
            let big = check_block_dominance(k, &f, 1352, 8, &l).unwrap();
            assert_eq!(big, Verdict::ExtremalTrue { weights: 8 });
        }
    }

    #[test]
    fn weight_extremes_match_brute_force() {
        for (p, s) in [(3, 1), (2, 2), (5, 1)] {
            let f = FieldSpec::new(p, s, None).unwrap();
            let n = 4;
            let blocks = vec![0, 2, 3];
            for k in [OrderKind::DegLex, OrderKind::DegRevLex] {
                for w in 1..=3 {
                    let mut ws = Vec::new();
                    for_each_word_on(&f, n, &blocks, w, |x| ws.push(x.clone()));
                    let max = ws.iter().max_by(|a, b| word_cmp(k, &f, a, b)).unwrap();
                    let min = ws.iter().min_by(|a, b| word_cmp(k, &f, a, b)).unwrap();
                    assert_eq!(weight_extremes(k, &f, n, &blocks, w).unwrap(), (max.clone(), min.clone()));
                }
            }
        }
    }

    #[test]
    fn parse_order() {
        assert_eq!("degrevlex".parse::<OrderKind>().unwrap(), OrderKind::DegRevLex);
        assert!("lex".parse::<OrderKind>().is_err());
    }
}
