//! Linear codes over GF(q) and the brute-force invariants computed from them:
//! weights, generalized Hamming weights, and minimal-support codewords.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{ElementRepr, FieldDesc, FieldSpec};
use crate::Limits;

/// Longest word for which supports are handled as bitmasks.
pub const MASK_BITS: usize = 128;

/// Maximum number of witnesses any scan returns.
pub const WITNESS_LIMIT: usize = 100;

/// A vector over GF(q), entries given by integer codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn zeros(n: usize) -> Self {
        Word(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Zero-based positions of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    pub fn support_mask(&self) -> Result<u128> {
        if self.len() > MASK_BITS {
            return Err(Error::TooLong(self.len()));
        }
        Ok(self.mask_unchecked())
    }

    pub(crate) fn mask_unchecked(&self) -> u128 {
        self.0.iter().enumerate().filter(|(_, &x)| x != 0).fold(0u128, |m, (i, _)| m | (1u128 << i))
    }

    pub fn add(&self, f: &FieldSpec, other: &Word) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| f.add(a, b)).collect())
    }

    pub fn sub(&self, f: &FieldSpec, other: &Word) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| f.sub(a, b)).collect())
    }

    pub fn scale(&self, f: &FieldSpec, lambda: u8) -> Word {
        Word(self.0.iter().map(|&a| f.mul(lambda, a)).collect())
    }

    pub fn neg(&self, f: &FieldSpec) -> Word {
        Word(self.0.iter().map(|&a| f.neg(a)).collect())
    }

    /// `Some(λ)` with `self = λ·other` when `other` is nonzero and the words are parallel.
    pub fn multiple_of(&self, f: &FieldSpec, other: &Word) -> Option<u8> {
        let pivot = other.0.iter().position(|&x| x != 0)?;
        let lambda = f.mul(self.0[pivot], f.inv(other.0[pivot]).ok()?);
        (self.scale(f, 1) == other.scale(f, lambda)).then_some(lambda)
    }
}

/// One-based sorted indices of a support mask.
pub fn mask_indices(mask: u128) -> Vec<usize> {
    (0..MASK_BITS).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub(crate) fn rref(f: &FieldSpec, rows: &mut Vec<Vec<u8>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).unwrap();
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &FieldSpec, rows: &[Word]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|w| w.0.clone()).collect();
    rref(f, &mut m).len()
}

/// Code file layout: `{"field": {...}, "generator": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldDesc,
    pub generator: Vec<Vec<ElementRepr>>,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    generator: Vec<Word>,
    parity_check: Vec<Word>,
    rref: Vec<Word>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Builds the code spanned by `rows`, which must be linearly independent.
    pub fn from_generator(field: FieldSpec, rows: Vec<Vec<u8>>) -> Result<Self> {
        let code = Self::from_spanning_rows(field, rows.clone())?;
        if code.k() < rows.len() {
            return Err(Error::DependentRows { rank: code.k(), rows: rows.len() });
        }
        Ok(Self { generator: rows.into_iter().map(Word).collect(), ..code })
    }

    /// Builds the code spanned by `rows`, keeping a basis when rows are dependent.
    pub fn from_spanning_rows(field: FieldSpec, rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedMatrix);
        }
        let q = field.q() as u32;
        if let Some(&bad) = rows.iter().flatten().find(|&&x| x as u32 >= q) {
            return Err(Error::ElementOutOfRange { code: bad as u32, q });
        }
        let mut reduced = rows.clone();
        let pivots = rref(&field, &mut reduced);
        if pivots.is_empty() || n == 0 {
            return Err(Error::EmptyCode);
        }
        let generator = if pivots.len() == rows.len() {
            rows.into_iter().map(Word).collect()
        } else {
            reduced.iter().cloned().map(Word).collect()
        };

        // standard-form complement: one check row per non-pivot column
        let mut parity_check = Vec::with_capacity(n - pivots.len());
        for c in (0..n).filter(|c| !pivots.contains(c)) {
            let mut h = vec![0u8; n];
            h[c] = 1;
            for (row, &p) in reduced.iter().zip(&pivots) {
                h[p] = field.neg(row[c]);
            }
            parity_check.push(Word(h));
        }
        let code = Self { field, n, generator, parity_check, rref: reduced.into_iter().map(Word).collect(), pivots };
        for g in &code.generator {
            debug_assert!(code.syndrome(g).iter().all(|&x| x == 0));
        }
        Ok(code)
    }

    pub fn from_file(file: &CodeFile) -> Result<Self> {
        let field = FieldSpec::from_desc(&file.field)?;
        let rows = file
            .generator
            .iter()
            .map(|r| r.iter().map(|e| field.parse_element(e)).collect::<Result<Vec<u8>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_generator(field, rows)
    }

    pub fn to_file(&self) -> CodeFile {
        CodeFile {
            field: self.field.desc(),
            generator: self
                .generator
                .iter()
                .map(|w| w.0.iter().map(|&x| ElementRepr::Code(x as u32)).collect())
                .collect(),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.pivots.len()
    }
    pub fn q(&self) -> usize {
        self.field.q()
    }
    pub fn generator(&self) -> &[Word] {
        &self.generator
    }
    pub fn parity_check(&self) -> &[Word] {
        &self.parity_check
    }
    pub fn rref_basis(&self) -> &[Word] {
        &self.rref
    }

    pub fn syndrome(&self, w: &Word) -> Vec<u8> {
        let f = &self.field;
        self.parity_check
            .iter()
            .map(|h| h.0.iter().zip(&w.0).fold(0u8, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.n && self.syndrome(w).iter().all(|&x| x == 0)
    }

    /// Codeword with information vector `info` (one coefficient per generator row).
    pub fn encode(&self, info: &[u8]) -> Word {
        let f = &self.field;
        let mut out = vec![0u8; self.n];
        for (&c, row) in info.iter().zip(&self.generator) {
            if c != 0 {
                for (o, &g) in out.iter_mut().zip(&row.0) {
                    *o = f.add(*o, f.mul(c, g));
                }
            }
        }
        Word(out)
    }

    /// `q^k`, saturating.
    pub fn size(&self) -> u128 {
        (self.q() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX)
    }

    fn check_enumeration(&self, limits: &Limits) -> Result<()> {
        if self.size() > limits.enumeration {
            return Err(Error::TooLarge { what: "codewords", count: self.size(), cap: limits.enumeration });
        }
        Ok(())
    }

    /// All `q^k` codewords. Index `Σ_r info_r q^r` is the position in the output.
    pub fn enumerate(&self, limits: &Limits) -> Result<Vec<Word>> {
        self.check_enumeration(limits)?;
        Ok(self.table(limits)?.words)
    }

    pub fn table(&self, limits: &Limits) -> Result<CodeTable> {
        self.check_enumeration(limits)?;
        if self.n > MASK_BITS {
            return Err(Error::TooLong(self.n));
        }
        let q = self.q();
        let total = self.size() as usize;
        let mut words: Vec<Word> = Vec::with_capacity(total);
        words.push(Word::zeros(self.n));
        // Extend digit by digit: indices with top digit r are built from lower ones.
        let mut block = 1usize;
        for row in &self.generator {
            for c in 1..q as u8 {
                let shifted = row.scale(&self.field, c);
                for idx in 0..block {
                    let w = words[idx].add(&self.field, &shifted);
                    words.push(w);
                }
            }
            block *= q;
        }
        let masks = words.iter().map(Word::mask_unchecked).collect();
        Ok(CodeTable { q, k: self.k(), words, masks })
    }

    /// The i-th generalized Hamming weight by exhaustive subspace enumeration.
    pub fn ghw(&self, i: usize, limits: &Limits) -> Result<usize> {
        Ok(self.ghw_with_witnesses(i, 0, limits)?.0)
    }

    /// `d_i` together with up to `limit` bases of subspaces attaining it.
    pub fn ghw_with_witnesses(&self, i: usize, limit: usize, limits: &Limits) -> Result<(usize, Vec<Vec<Word>>)> {
        let table = self.table(limits)?;
        table.ghw_with_witnesses(i, limit, limits)
    }

    pub fn minimal_support_codewords(&self, limits: &Limits) -> Result<Vec<Word>> {
        Ok(self.table(limits)?.minimal_support_codewords())
    }
}

/// Enumerated codewords with their support masks.
#[derive(Clone, Debug)]
pub struct CodeTable {
    q: usize,
    k: usize,
    pub words: Vec<Word>,
    pub masks: Vec<u128>,
}

/// Number of i-dimensional subspaces of GF(q)^k.
pub fn gaussian_binomial(q: usize, k: usize, i: usize) -> u128 {
    if i > k {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for t in 0..i {
        num = num.saturating_mul(q.saturating_pow((k - t) as u32) - 1);
        den = den.saturating_mul(q.saturating_pow((t + 1) as u32) - 1);
    }
    if num == u128::MAX {
        u128::MAX
    } else {
        num / den
    }
}

/// Pivot sets of i×k RREF matrices, ascending.
pub(crate) fn pivot_sets(k: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in start..=k - left {
            cur.push(p);
            rec(p + 1, k, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, i, &mut Vec::new(), &mut out);
    out
}

/// Calls `visit` with the information-vector indices of the rows of every
/// i×k RREF matrix sharing the given pivot columns.
pub(crate) fn for_each_rref_with_pivots(q: usize, k: usize, pivots: &[usize], mut visit: impl FnMut(&[usize])) {
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (p + 1..k).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
        .collect();
    let mut powers = vec![1usize; k];
    for c in 1..k {
        powers[c] = powers[c - 1] * q;
    }
    let base: Vec<usize> = pivots.iter().map(|&p| powers[p]).collect();
    let mut digits = vec![0usize; free.len()];
    let mut rows = base.clone();
    loop {
        visit(&rows);
        // odometer over the free entries, updating row indices incrementally
        let mut pos = 0;
        loop {
            if pos == free.len() {
                return;
            }
            let (r, c) = free[pos];
            if digits[pos] + 1 < q {
                digits[pos] += 1;
                rows[r] += powers[c];
                break;
            }
            rows[r] -= digits[pos] * powers[c];
            digits[pos] = 0;
            pos += 1;
        }
    }
}

impl CodeTable {
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ghw_with_witnesses(&self, i: usize, limit: usize, limits: &Limits) -> Result<(usize, Vec<Vec<Word>>)> {
        if i < 1 || i > self.k {
            return Err(Error::BadIndex { i, k: self.k });
        }
        let count = gaussian_binomial(self.q, self.k, i);
        if count > limits.pairs {
            return Err(Error::TooLarge { what: "subspaces", count, cap: limits.pairs });
        }
        let partial: Vec<(usize, Vec<Vec<usize>>)> = pivot_sets(self.k, i)
            .into_par_iter()
            .map(|piv| {
                let mut best = usize::MAX;
                let mut wit: Vec<Vec<usize>> = Vec::new();
                for_each_rref_with_pivots(self.q, self.k, &piv, |rows| {
                    let w = rows.iter().fold(0u128, |m, &r| m | self.masks[r]).count_ones() as usize;
                    if w < best {
                        best = w;
                        wit.clear();
                    }
                    if w == best && wit.len() < limit {
                        wit.push(rows.to_vec());
                    }
                });
                (best, wit)
            })
            .collect();
        let best = partial.iter().map(|(b, _)| *b).min().unwrap();
        let witnesses = partial
            .into_iter()
            .filter(|(b, _)| *b == best)
            .flat_map(|(_, w)| w)
            .take(limit)
            .map(|rows| rows.into_iter().map(|r| self.words[r].clone()).collect())
            .collect();
        Ok((best, witnesses))
    }

    /// Visits every i-dimensional subspace once, passing its support mask and
    /// basis (information-vector indices). Stops early when `visit` returns false.
    pub fn for_each_subspace(&self, i: usize, mut visit: impl FnMut(u128, &[usize]) -> bool) {
        for piv in pivot_sets(self.k, i) {
            let mut go = true;
            for_each_rref_with_pivots(self.q, self.k, &piv, |rows| {
                if go {
                    let m = rows.iter().fold(0u128, |m, &r| m | self.masks[r]);
                    go = visit(m, rows);
                }
            });
            if !go {
                return;
            }
        }
    }

    /// Support masks that are minimal among nonzero codeword supports.
    pub fn minimal_masks(&self) -> HashSet<u128> {
        let mut distinct: Vec<u128> = self.masks.iter().copied().filter(|&m| m != 0).collect();
        distinct.sort_by_key(|m| (m.count_ones(), *m));
        distinct.dedup();
        let mut minimal: Vec<u128> = Vec::new();
        for m in distinct {
            if !minimal.iter().any(|&s| s & !m == 0) {
                minimal.push(m);
            }
        }
        minimal.into_iter().collect()
    }

    pub fn minimal_support_codewords(&self) -> Vec<Word> {
        let minimal = self.minimal_masks();
        self.words.iter().zip(&self.masks).filter(|(_, m)| minimal.contains(m)).map(|(w, _)| w.clone()).collect()
    }

    pub fn min_weight(&self) -> usize {
        self.masks.iter().filter(|&&m| m != 0).map(|m| m.count_ones() as usize).min().unwrap_or(0)
    }
}

/// Dimension (1 or 2) and weight of the span of two nonzero words.
pub fn span2_weight(f: &FieldSpec, c1: &Word, c2: &Word) -> Result<(usize, usize)> {
    if c1.len() != c2.len() {
        return Err(Error::LengthMismatch(c1.len(), c2.len()));
    }
    if c1.is_zero() || c2.is_zero() {
        return Err(Error::ZeroInput);
    }
    let dim = if c2.multiple_of(f, c1).is_some() { 1 } else { 2 };
    let weight = c1.0.iter().zip(&c2.0).filter(|(&a, &b)| a != 0 || b != 0).count();
    Ok((dim, weight))
}

/// A two-dimensional subspace given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace2 {
    pub basis: [Word; 2],
    pub support: Vec<usize>,
}

impl Subspace2 {
    pub fn new(f: &FieldSpec, c1: Word, c2: Word) -> Result<Self> {
        let (dim, _) = span2_weight(f, &c1, &c2)?;
        if dim != 2 {
            return Err(Error::DependentRows { rank: 1, rows: 2 });
        }
        let support = (0..c1.len()).filter(|&i| c1.0[i] != 0 || c2.0[i] != 0).collect();
        Ok(Self { basis: [c1, c2], support })
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    use crate::examples::{ternary_8_2, ternary_9_3};

    #[test]
    fn identity_code_has_no_checks() {
        let c = LinearCode::from_generator(gf3(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(c.k(), 3);
        assert!(c.parity_check().is_empty());
        assert_eq!(c.enumerate(&Limits::default()).unwrap().len(), 27);
    }

    #[test]
    fn construction_errors() {
        let f = gf3();
        assert_eq!(
            LinearCode::from_generator(f.clone(), vec![vec![1, 2, 0], vec![2, 1, 0]]).unwrap_err(),
            Error::DependentRows { rank: 1, rows: 2 }
        );
        assert_eq!(LinearCode::from_generator(f.clone(), vec![vec![0, 0]]).unwrap_err(), Error::EmptyCode);
        assert_eq!(LinearCode::from_generator(f.clone(), vec![]).unwrap_err(), Error::EmptyCode);
        assert_eq!(LinearCode::from_generator(f.clone(), vec![vec![1], vec![0, 1]]).unwrap_err(), Error::RaggedMatrix);
        assert!(LinearCode::from_generator(f.clone(), vec![vec![3]]).is_err());
        let reduced = LinearCode::from_spanning_rows(f, vec![vec![1, 2, 0], vec![2, 1, 0]]).unwrap();
        assert_eq!(reduced.k(), 1);
    }

    #[test]
    fn ternary_8_2_weights() {
        let c = ternary_8_2();
        let words = c.enumerate(&Limits::default()).unwrap();
        assert_eq!(words.len(), 9);
        assert!(words.iter().filter(|w| !w.is_zero()).all(|w| w.weight() == 6));
        for w in &words {
            assert!(c.contains(w));
        }
        let l = Limits::default();
        assert_eq!(c.ghw(1, &l).unwrap(), 6);
        assert_eq!(c.ghw(2, &l).unwrap(), 8);
        // equal weights, distinct supports, none contains another
        assert_eq!(c.minimal_support_codewords(&l).unwrap().len(), 8);
    }

    #[test]
    fn ternary_9_3_weights() {
        let c = ternary_9_3();
        let l = Limits::default();
        let words = c.enumerate(&l).unwrap();
        assert_eq!(words.len(), 27);
        let d1 = words.iter().filter(|w| !w.is_zero()).map(Word::weight).min().unwrap();
        assert_eq!(c.ghw(1, &l).unwrap(), d1);
        assert_eq!(c.ghw(2, &l).unwrap(), 7);
        assert_eq!(c.ghw(3, &l).unwrap(), 9);
        let m1 = Word(vec![2, 0, 0, 0, 0, 2, 0, 1, 0]);
        let m2 = Word(vec![0, 1, 0, 0, 1, 1, 1, 0, 1]);
        let ms = c.minimal_support_codewords(&l).unwrap();
        assert!(ms.contains(&m1) && ms.contains(&m2));
        assert_eq!(span2_weight(c.field(), &m1, &m2).unwrap(), (2, 7));
    }

    #[test]
    fn bad_ghw_index() {
        let c = ternary_8_2();
        let l = Limits::default();
        assert_eq!(c.ghw(0, &l).unwrap_err(), Error::BadIndex { i: 0, k: 2 });
        assert_eq!(c.ghw(3, &l).unwrap_err(), Error::BadIndex { i: 3, k: 2 });
    }

    #[test]
    fn full_space_minimal_supports() {
        let c = LinearCode::from_generator(gf3(), vec![vec![1, 0], vec![0, 1]]).unwrap();
        let ms = c.minimal_support_codewords(&Limits::default()).unwrap();
        assert_eq!(ms.len(), 4);
        assert!(ms.iter().all(|w| w.weight() == 1));
    }

    #[test]
    fn span2_cases() {
        let f = gf3();
        let c = Word(vec![1, 2, 0, 1]);
        assert_eq!(span2_weight(&f, &c, &c.scale(&f, 2)).unwrap(), (1, 3));
        let d = Word(vec![0, 0, 1, 0]);
        let e = Word(vec![1, 1, 0, 0]);
        assert_eq!(span2_weight(&f, &d, &e).unwrap(), (2, 3));
        assert_eq!(span2_weight(&f, &d, &Word::zeros(4)), Err(Error::ZeroInput));
        assert_eq!(span2_weight(&f, &d, &Word::zeros(3)), Err(Error::LengthMismatch(4, 3)));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 3, 1), 7);
        assert_eq!(gaussian_binomial(2, 3, 2), 7);
        assert_eq!(gaussian_binomial(3, 3, 2), 13);
        assert_eq!(gaussian_binomial(3, 4, 2), 130);
        for (q, k, i) in [(2, 4, 2), (3, 3, 1), (4, 3, 2), (3, 4, 2)] {
            let mut count = 0u128;
            for piv in pivot_sets(k, i) {
                for_each_rref_with_pivots(q, k, &piv, |_| count += 1);
            }
            assert_eq!(count, gaussian_binomial(q, k, i), "q={q} k={k} i={i}");
        }
    }

    /// Brute-force d_2 over unordered pairs of codewords.
    fn d2_by_pairs(c: &LinearCode) -> usize {
        let words = c.enumerate(&Limits::default()).unwrap();
        let mut best = usize::MAX;
        for a in &words {
            for b in &words {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let (dim, w) = span2_weight(c.field(), a, b).unwrap();
                if dim == 2 {
                    best = best.min(w);
                }
            }
        }
        best
    }

    #[test]
    fn rref_enumeration_matches_pair_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, s) in [(2, 1), (3, 1), (2, 2)] {
            let f = FieldSpec::new(p, s, None).unwrap();
            for _ in 0..15 {
                let n = rng.gen_range(3..8);
                let k = rng.gen_range(2..=3.min(n));
                let rows: Vec<Vec<u8>> =
                    (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..f.q() as u8)).collect()).collect();
                let Ok(c) = LinearCode::from_generator(f.clone(), rows) else { continue };
                let l = Limits::default();
                assert_eq!(c.ghw(2, &l).unwrap(), d2_by_pairs(&c));
                let d1 = c.ghw(1, &l).unwrap();
                let ms = c.minimal_support_codewords(&l).unwrap();
                assert_eq!(ms.iter().map(Word::weight).min().unwrap(), d1);
                for i in 2..=c.k() {
                    assert!(c.ghw(i, &l).unwrap() > c.ghw(i - 1, &l).unwrap());
                }
            }
        }
    }

    #[test]
    fn parity_check_annihilates_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = FieldSpec::new(2, 2, None).unwrap();
        for _ in 0..20 {
            let rows: Vec<Vec<u8>> = (0..3).map(|_| (0..6).map(|_| rng.gen_range(0..4)).collect()).collect();
            let Ok(c) = LinearCode::from_generator(f.clone(), rows) else { continue };
            assert_eq!(c.parity_check().len(), c.n() - c.k());
            for g in c.generator() {
                assert!(c.syndrome(g).iter().all(|&x| x == 0));
            }
            // null space of H has exactly q^k words
            let mut in_null = 0;
            let total = 4usize.pow(6);
            for idx in 0..total {
                let w = Word((0..6).map(|i| ((idx >> (2 * i)) & 3) as u8).collect());
                if c.contains(&w) {
                    in_null += 1;
                }
            }
            assert_eq!(in_null as u128, c.size());
        }
    }

    #[test]
    fn minimal_supports_closed_under_scaling() {
        let c = ternary_9_3();
        let f = c.field();
        let ms = c.minimal_support_codewords(&Limits::default()).unwrap();
        for w in &ms {
            for lambda in 1..3 {
                assert!(ms.contains(&w.scale(f, lambda)));
            }
        }
    }

    #[test]
    fn witnesses_reported() {
        let c = ternary_9_3();
        let (d2, wit) = c.ghw_with_witnesses(2, WITNESS_LIMIT, &Limits::default()).unwrap();
        assert_eq!(d2, 7);
        assert!(!wit.is_empty() && wit.len() <= WITNESS_LIMIT);
        for basis in &wit {
            let s = Subspace2::new(c.field(), basis[0].clone(), basis[1].clone()).unwrap();
            assert_eq!(s.weight(), 7);
        }
    }

    #[test]
    fn enumeration_cap() {
        let c = ternary_9_3();
        let l = Limits { enumeration: 10, ..Limits::default() };
        assert!(matches!(c.enumerate(&l), Err(Error::TooLarge { .. })));
    }
}
