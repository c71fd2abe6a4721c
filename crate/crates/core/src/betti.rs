//! Graded Betti numbers of square-free monomial ideals through Hochster's
//! formula, and the recovery of `d₁, d₂` from them.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::Word;
use crate::d2::Analysis;
use crate::error::{Error, Result};
use crate::Limits;

/// Largest vertex count representable by the `u32` face masks.
pub const MAX_VERTICES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    n: usize,
    generators: Vec<u32>,
}

/// `{"n": 4, "generators": [[1, 2], [3, 4]]}` with one-based vertices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
}

fn bits(m: u32) -> usize {
    m.count_ones() as usize
}

impl SquarefreeIdeal {
    pub fn from_masks(n: usize, mut masks: Vec<u32>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "vertices", count: n as u128, cap: MAX_VERTICES as u128 });
        }
        if let Some(&m) = masks.iter().find(|&&m| m == 0 || (n < 32 && m >> n != 0)) {
            let v = if m == 0 { 0 } else { 32 - m.leading_zeros() as usize };
            return Err(Error::VertexOutOfRange(v));
        }
        masks.sort_by_key(|&m| (bits(m), m));
        masks.dedup();
        if masks.is_empty() {
            return Err(Error::TooFewGenerators { needed: 1, got: 0 });
        }
        for (a, &x) in masks.iter().enumerate() {
            if masks[..a].iter().any(|&y| y & !x == 0) {
                return Err(Error::NotAntichain);
            }
        }
        Ok(Self { n, generators: masks })
    }

    pub fn new(n: usize, generators: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(generators.len());
        for g in generators {
            let mut m = 0u32;
            for &v in g {
                if v < 1 || v > n || v > MAX_VERTICES {
                    return Err(Error::VertexOutOfRange(v));
                }
                m |= 1 << (v - 1);
            }
            masks.push(m);
        }
        Self::from_masks(n, masks)
    }

    pub fn from_file(file: &IdealFile) -> Result<Self> {
        Self::new(file.n, &file.generators)
    }

    /// The ideal generated by the supports of `words`.
    pub fn from_words(n: usize, words: &[Word]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "vertices", count: n as u128, cap: MAX_VERTICES as u128 });
        }
        Self::from_masks(n, words.iter().map(|w| w.mask_unchecked() as u32).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn generator_sets(&self) -> Vec<Vec<usize>> {
        self.generators.iter().map(|&m| (0..self.n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect()).collect()
    }

    fn is_face(&self, tau: u32) -> bool {
        !self.generators.iter().any(|&s| s & !tau == 0)
    }

    /// Union of the generators contained in `w`.
    fn generator_cover(&self, w: u32) -> u32 {
        self.generators.iter().filter(|&&s| s & w == s).fold(0, |acc, &s| acc | s)
    }
}

/// The Stanley–Reisner complex: every face as a vertex mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub n: usize,
    pub faces: Vec<u32>,
}

pub fn stanley_reisner_complex(ideal: &SquarefreeIdeal, limits: &Limits) -> Result<Complex> {
    check_vertices(ideal.n, limits)?;
    let faces = (0..1u32 << ideal.n).filter(|&t| ideal.is_face(t)).collect();
    Ok(Complex { n: ideal.n, faces })
}

fn check_vertices(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.betti_vertices {
        return Err(Error::TooLarge { what: "vertices", count: n as u128, cap: limits.betti_vertices as u128 });
    }
    Ok(())
}

impl Complex {
    pub fn is_face(&self, t: u32) -> bool {
        self.faces.binary_search(&t).is_ok()
    }

    pub fn facets(&self) -> Vec<u32> {
        self.faces
            .iter()
            .copied()
            .filter(|&t| !(0..self.n).any(|v| t >> v & 1 == 0 && self.is_face(t | 1 << v)))
            .collect()
    }

    /// `dim H̃_d(Δ_W; GF(ℓ))` for d = -1 ..= |W|-1, indexed by d + 1.
    pub fn reduced_homology_dims(&self, w: u32, ell: u8) -> Result<Vec<usize>> {
        check_prime(ell)?;
        Ok(homology_dims(|t| self.is_face(t), w, ell, None))
    }
}

fn check_prime(ell: u8) -> Result<()> {
    if matches!(ell, 2 | 3 | 5) {
        Ok(())
    } else {
        Err(Error::NotPrime(ell as u32))
    }
}

/// Faces of the induced subcomplex on `w`, grouped by size and sorted.
fn faces_by_size(is_face: &impl Fn(u32) -> bool, w: u32, max_size: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); bits(w).min(max_size) + 1];
    let mut sub = w;
    loop {
        let s = bits(sub);
        if s <= max_size && is_face(sub) {
            out[s].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & w;
    }
    for layer in &mut out {
        layer.sort_unstable();
    }
    out
}

/// Rank of the boundary map from size-`s` faces to size-`(s-1)` faces.
fn boundary_rank(upper: &[u32], lower: &[u32], ell: u8) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let idx = |t: u32| lower.binary_search(&t).expect("faces are closed under subsets");
    if ell == 2 {
        let words = lower.len().div_ceil(64);
        let mut pivots: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for &t in upper {
            let mut row = vec![0u64; words];
            let mut rest = t;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let k = idx(t & !(1 << v));
                row[k / 64] |= 1 << (k % 64);
            }
            while let Some(lead) =
                row.iter().enumerate().find(|(_, &x)| x != 0).map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)
            {
                match pivots.get(&lead) {
                    Some(p) => row.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                    None => {
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
        return pivots.len();
    }
    let l = ell as u16;
    let inv = |a: u16| (1..l).find(|b| a * b % l == 1).unwrap();
    let mut pivots: BTreeMap<usize, Vec<u16>> = BTreeMap::new();
    for &t in upper {
        let mut row = vec![0u16; lower.len()];
        let mut rest = t;
        let mut sign = 1u16;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            row[idx(t & !(1 << v))] = sign;
            sign = l - sign;
        }
        while let Some(lead) = row.iter().position(|&x| x != 0) {
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = row[lead];
                    for (a, &b) in row.iter_mut().zip(p) {
                        *a = (*a + l * l - factor * b % l) % l;
                    }
                }
                None => {
                    let s = inv(row[lead]);
                    row.iter_mut().for_each(|a| *a = *a * s % l);
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Reduced homology of the induced complex on `w`, indexed by face size
/// (`d + 1`). With `only = Some(s)` the other entries are left at zero.
fn homology_dims(is_face: impl Fn(u32) -> bool, w: u32, ell: u8, only: Option<usize>) -> Vec<usize> {
    let size = bits(w);
    let max_size = only.map_or(size, |s| (s + 1).min(size));
    let layers = faces_by_size(&is_face, w, max_size);
    let rank = |s: usize| -> usize {
        if s == 0 || s >= layers.len() {
            0
        } else {
            boundary_rank(&layers[s], &layers[s - 1], ell)
        }
    };
    let mut dims = vec![0usize; size + 1];
    for s in 0..=size {
        if only.is_some_and(|k| k != s) || s >= layers.len() {
            continue;
        }
        dims[s] = layers[s].len() - rank(s) - rank(s + 1);
    }
    dims
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// `(i, j) -> β_{i,j}(R/I)`, nonzero entries only
    pub entries: BTreeMap<(usize, usize), usize>,
    pub pd: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn min_j(&self, i: usize) -> Option<usize> {
        self.entries.keys().filter(|(a, _)| *a == i).map(|&(_, j)| j).min()
    }

    /// Coefficients of `Σ (-1)^i β_{i,j} t^j`.
    pub fn alternating_sum(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n + 1];
        for (&(i, j), &v) in &self.entries {
            out[j] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
        }
        out
    }

    pub fn triples(&self) -> Vec<[usize; 3]> {
        self.entries.iter().map(|(&(i, j), &v)| [i, j, v]).collect()
    }
}

/// Full Betti table over GF(ℓ) by Hochster's formula.
pub fn betti_numbers(ideal: &SquarefreeIdeal, ell: u8, limits: &Limits) -> Result<BettiTable> {
    check_vertices(ideal.n, limits)?;
    check_prime(ell)?;
    let contributions: Vec<(usize, usize, usize)> = (0..1u32 << ideal.n)
        .into_par_iter()
        // a vertex outside every generator inside W is a cone point
        .filter(|&w| ideal.generator_cover(w) == w)
        .flat_map_iter(|w| {
            let j = bits(w);
            homology_dims(|t| ideal.is_face(t), w, ell, None)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(move |(d1, h)| (j - d1, j, h))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (i, j, h) in contributions {
        *entries.entry((i, j)).or_insert(0) += h;
    }
    let pd = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
    Ok(BettiTable { entries, pd })
}

fn subsets_of_size(n: usize, j: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if j > n {
        return out;
    }
    if j == 0 {
        return vec![0];
    }
    let mut s: u64 = (1u64 << j) - 1;
    while s < 1u64 << n {
        out.push(s as u32);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// `β_{i,j}` for a single pair.
pub fn betti_entry(ideal: &SquarefreeIdeal, i: usize, j: usize, ell: u8) -> usize {
    if i == 0 {
        return usize::from(j == 0);
    }
    if j < i {
        return 0;
    }
    let k = j - i;
    subsets_of_size(ideal.n, j)
        .into_par_iter()
        .filter(|&w| ideal.generator_cover(w) == w)
        .map(|w| homology_dims(|t| ideal.is_face(t), w, ell, Some(k))[k])
        .sum()
}

/// `min{j : β_{i,j} ≠ 0}` by ascending scan with early exit.
pub fn betti_min(ideal: &SquarefreeIdeal, i: usize, ell: u8, limits: &Limits) -> Result<Option<usize>> {
    check_vertices(ideal.n, limits)?;
    check_prime(ell)?;
    Ok((i..=ideal.n).find(|&j| betti_entry(ideal, i, j, ell) > 0))
}

/// Smallest generator size and smallest union of two distinct generators.
pub fn direct_mins(ideal: &SquarefreeIdeal) -> Result<(usize, usize)> {
    let g = &ideal.generators;
    if g.len() < 2 {
        return Err(Error::TooFewGenerators { needed: 2, got: g.len() });
    }
    let first = g.iter().map(|&s| bits(s)).min().unwrap();
    let mut second = usize::MAX;
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            second = second.min(bits(g[a] | g[b]));
        }
    }
    Ok((first, second))
}

/// Hilbert-series numerator `Σ_{S ⊆ gens} (-1)^{|S|} t^{|∪S|}` by inclusion–exclusion.
pub fn k_polynomial_inclusion_exclusion(ideal: &SquarefreeIdeal) -> Result<Vec<i64>> {
    let g = &ideal.generators;
    if g.len() > 22 {
        return Err(Error::TooLarge { what: "generator subsets", count: 1u128 << g.len(), cap: 1 << 22 });
    }
    let mut out = vec![0i64; ideal.n + 1];
    fn rec(g: &[u32], start: usize, union: u32, sign: i64, out: &mut [i64]) {
        out[bits(union)] += sign;
        for k in start..g.len() {
            rec(g, k + 1, union | g[k], -sign, out);
        }
    }
    rec(g, 0, 0, 1, &mut out);
    Ok(out)
}

/// The same numerator from face counts: `Σ_τ t^{|τ|} (1-t)^{n-|τ|}`.
pub fn k_polynomial_from_faces(complex: &Complex) -> Vec<i64> {
    let n = complex.n;
    let mut binom = vec![vec![0i64; n + 1]; n + 1];
    for a in 0..=n {
        binom[a][0] = 1;
        for b in 1..=a {
            binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
        }
    }
    let mut out = vec![0i64; n + 1];
    for &t in &complex.faces {
        let s = bits(t);
        for e in 0..=n - s {
            let c = binom[n - s][e];
            out[s + e] += if e % 2 == 0 { c } else { -c };
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem62 {
    pub beta1_min: Option<usize>,
    pub beta2_min: Option<usize>,
    pub d1: usize,
    pub d2: usize,
    pub has_min_weight_word: bool,
    pub is_test_set: bool,
    pub direct: (usize, usize),
    pub holds: bool,
}

/// Checks both equivalences linking Betti minima of `I_M` to `M` for `M ⊆ M(C)`.
pub fn check_theorem_62(a: &Analysis, set: &[Word], ell: u8, limits: &Limits) -> Result<Theorem62> {
    let ideal = SquarefreeIdeal::from_words(a.code.n(), set)?;
    let direct = direct_mins(&ideal)?;
    let beta1_min = betti_min(&ideal, 1, ell, limits)?;
    let beta2_min = betti_min(&ideal, 2, ell, limits)?;
    let has_min_weight_word = set.iter().any(|w| w.weight() == a.d1);
    let is_test_set = a.is_d2_test_set(set)?.is_some();
    let holds = (beta1_min == Some(a.d1)) == has_min_weight_word
        && (beta2_min == Some(a.d2)) == is_test_set
        && beta1_min == Some(direct.0)
        && beta2_min == Some(direct.1);
    Ok(Theorem62 { beta1_min, beta2_min, d1: a.d1, d2: a.d2, has_min_weight_word, is_test_set, direct, holds })
}

/// Distinct supports of a word set, as one-based index lists.
pub fn supports(words: &[Word]) -> Vec<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut out: Vec<Vec<usize>> = words
        .iter()
        .filter(|w| seen.insert(w.mask_unchecked()))
        .map(|w| w.support().into_iter().map(|i| i + 1).collect())
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::LinearCode;
    use crate::gf::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ideal(n: usize, g: &[&[usize]]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(n, &g.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn table(entries: &[(usize, usize, usize)]) -> BTreeMap<(usize, usize), usize> {
        entries.iter().map(|&(i, j, v)| ((i, j), v)).collect()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SquarefreeIdeal::new(3, &[vec![1, 4]]).unwrap_err(), Error::VertexOutOfRange(4));
        assert_eq!(SquarefreeIdeal::new(3, &[vec![1], vec![1, 2]]).unwrap_err(), Error::NotAntichain);
        assert_eq!(SquarefreeIdeal::new(3, &[]).unwrap_err(), Error::TooFewGenerators { needed: 1, got: 0 });
        assert_eq!(direct_mins(&ideal(3, &[&[1, 2]])).unwrap_err(), Error::TooFewGenerators { needed: 2, got: 1 });
    }

    #[test]
    fn stanley_reisner_examples() {
        let l = Limits::default();
        let c = stanley_reisner_complex(&ideal(2, &[&[1, 2]]), &l).unwrap();
        assert_eq!(c.faces, vec![0, 1, 2]);
        let c = stanley_reisner_complex(&ideal(3, &[&[1, 2], &[2, 3]]), &l).unwrap();
        let mut facets = c.facets();
        facets.sort();
        assert_eq!(facets, vec![0b010, 0b101]);
    }

    #[test]
    fn homology_examples() {
        let l = Limits::default();
        for ell in [2, 3, 5] {
            // hollow triangle
            let c = stanley_reisner_complex(&ideal(3, &[&[1, 2, 3]]), &l).unwrap();
            assert_eq!(c.reduced_homology_dims(0b111, ell).unwrap(), vec![0, 0, 1, 0]);
            // two isolated points
            let c = stanley_reisner_complex(&ideal(2, &[&[1, 2]]), &l).unwrap();
            assert_eq!(c.reduced_homology_dims(0b11, ell).unwrap(), vec![0, 1, 0]);
            // full simplex
            let c = stanley_reisner_complex(&ideal(4, &[&[4]]), &l).unwrap();
            assert_eq!(c.reduced_homology_dims(0b111, ell).unwrap(), vec![0, 0, 0, 0]);
            // {∅}
            assert_eq!(c.reduced_homology_dims(0, ell).unwrap(), vec![1]);
        }
        let c = stanley_reisner_complex(&ideal(2, &[&[1, 2]]), &l).unwrap();
        assert_eq!(c.reduced_homology_dims(0b11, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn betti_examples() {
        let l = Limits::default();
        let t = betti_numbers(&ideal(4, &[&[1, 2], &[3, 4]]), 2, &l).unwrap();
        assert_eq!(t.entries, table(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)]));
        assert_eq!(t.pd, 2);
        let t = betti_numbers(&ideal(3, &[&[1, 2], &[2, 3]]), 2, &l).unwrap();
        assert_eq!(t.entries, table(&[(0, 0, 1), (1, 2, 2), (2, 3, 1)]));
        assert_eq!(direct_mins(&ideal(3, &[&[1, 2], &[2, 3]])).unwrap(), (2, 3));
        // three pairwise unions of size 4
        let i = ideal(6, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(direct_mins(&i).unwrap(), (2, 4));
        assert_eq!(betti_min(&i, 2, 3, &l).unwrap(), Some(4));
    }

    /// Taylor resolution check: β_{i,j} ≤ number of i-subsets with lcm of size j.
    #[test]
    fn taylor_bound_and_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let l = Limits::default();
        for _ in 0..40 {
            let n = rng.gen_range(3..8);
            let mut gens: Vec<u32> = (0..rng.gen_range(1..6)).map(|_| rng.gen_range(1..1u32 << n)).collect();
            gens.sort_by_key(|&m| (bits(m), m));
            gens.dedup();
            let mut anti: Vec<u32> = Vec::new();
            for g in gens {
                if !anti.iter().any(|&a| a & !g == 0) {
                    anti.push(g);
                }
            }
            let i = SquarefreeIdeal::from_masks(n, anti.clone()).unwrap();
            let t2 = betti_numbers(&i, 2, &l).unwrap();
            let t3 = betti_numbers(&i, 3, &l).unwrap();
            let t5 = betti_numbers(&i, 5, &l).unwrap();
            assert_eq!(t2, t3);
            assert_eq!(t2, t5);
            for j in 0..=n {
                assert_eq!(t2.get(1, j), anti.iter().filter(|&&g| bits(g) == j).count());
                for i_ in 1..=3 {
                    assert_eq!(betti_entry(&i, i_, j, 2), t2.get(i_, j));
                }
            }
            let c = stanley_reisner_complex(&i, &l).unwrap();
            let alt = t2.alternating_sum(n);
            assert_eq!(alt, k_polynomial_inclusion_exclusion(&i).unwrap());
            assert_eq!(alt, k_polynomial_from_faces(&c));
        }
    }

    #[test]
    fn hochster_recovers_ghw() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let l = Limits::default();
        let f = FieldSpec::prime(3).unwrap();
        for _ in 0..10 {
            let rows: Vec<Vec<u8>> = (0..2).map(|_| (0..6).map(|_| rng.gen_range(0..3)).collect()).collect();
            let Ok(c) = LinearCode::from_generator(f.clone(), rows) else { continue };
            let ms = c.minimal_support_codewords(&l).unwrap();
            let ideal = SquarefreeIdeal::from_words(c.n(), &ms).unwrap();
            let t = betti_numbers(&ideal, 2, &l).unwrap();
            for i in 1..=c.k() {
                assert_eq!(t.min_j(i), Some(c.ghw(i, &l).unwrap()));
                assert_eq!(betti_min(&ideal, i, 2, &l).unwrap(), Some(c.ghw(i, &l).unwrap()));
            }
            assert!(t.pd <= c.k());
        }
    }

    #[test]
    fn vertex_cap() {
        let l = Limits { betti_vertices: 3, ..Limits::default() };
        let i = ideal(4, &[&[1, 2]]);
        assert!(matches!(betti_numbers(&i, 2, &l), Err(Error::TooLarge { .. })));
        assert!(matches!(stanley_reisner_complex(&i, &l), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(5, 0), vec![0]);
        assert_eq!(subsets_of_size(3, 3), vec![7]);
        assert!(subsets_of_size(2, 3).is_empty());
        assert_eq!(subsets_of_size(32, 1).len(), 32);
    }
}
