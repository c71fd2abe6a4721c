//! Reduced Gröbner basis of the binomial ideal of a code, computed by walking
//! monomials in increasing order and identifying cosets by syndrome.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, HashSet};

use serde::Serialize;

use crate::codes::{LinearCode, Word};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::orders::{compare, delta, monomial_key, var_of, Monomial, OrderKind};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GbClass {
    InRx,
    Codeword(Word),
}

impl GbClass {
    pub fn codeword(&self) -> Option<&Word> {
        match self {
            GbClass::InRx => None,
            GbClass::Codeword(w) => Some(w),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: OrderKind,
    field: FieldSpec,
    n: usize,
    elements: Vec<Binomial>,
    standard: Vec<Monomial>,
    /// syndrome index -> position in `standard`
    coset: HashMap<u64, usize>,
    contrib: Vec<Vec<u8>>,
}

/// `α^j · H[:, i]` for every variable `x_{i,j}`.
fn variable_contributions(code: &LinearCode) -> Vec<Vec<u8>> {
    let f = code.field();
    let q = f.q();
    (0..code.n() * (q - 1))
        .map(|v| {
            let (i, j) = var_of(q, v);
            let a = f.pow_alpha(j as u32);
            code.parity_check().iter().map(|h| f.mul(a, h.0[i - 1])).collect()
        })
        .collect()
}

fn add_into(f: &FieldSpec, s: &[u8], c: &[u8]) -> Vec<u8> {
    s.iter().zip(c).map(|(&a, &b)| f.add(a, b)).collect()
}

fn syndrome_index(q: usize, s: &[u8]) -> u64 {
    s.iter().rev().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

fn coset_count(code: &LinearCode, limits: &Limits) -> Result<usize> {
    let count = (code.q() as u128).checked_pow((code.n() - code.k()) as u32).unwrap_or(u128::MAX);
    if count > limits.cosets {
        return Err(Error::TooLarge { what: "cosets", count, cap: limits.cosets });
    }
    Ok(count as usize)
}

fn degree_cap(code: &LinearCode) -> u32 {
    (code.n() * (code.q() - 1) + 1) as u32
}

struct Candidate {
    order: OrderKind,
    m: Monomial,
    syndrome: Vec<u8>,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl Eq for Candidate {}
impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Candidate {
    // reversed so the max-heap pops the ≺-smallest monomial
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self.order, &other.m, &self.m)
    }
}

/// Evaluation map: coordinate i is `Σ_j e_{i,j} α^j`.
pub fn evaluate(f: &FieldSpec, m: &Monomial) -> Word {
    let mut w = Word::zeros(m.n());
    for (i, j, e) in m.terms() {
        let a = f.pow_alpha(j as u32);
        for _ in 0..e {
            w.0[i - 1] = f.add(w.0[i - 1], a);
        }
    }
    w
}

/// Frontier traversal with a heap and standard-set pruning.
pub fn reduced_gb(code: &LinearCode, order: OrderKind, limits: &Limits) -> Result<GroebnerBasis> {
    let cosets = coset_count(code, limits)?;
    let f = code.field();
    let q = f.q();
    let n = code.n();
    let nv = n * (q - 1);
    let cap = degree_cap(code);
    let contrib = variable_contributions(code);

    let mut heap = BinaryHeap::new();
    heap.push(Candidate { order, m: Monomial::one(n, q), syndrome: vec![0; n - code.k()] });
    let mut standard: Vec<Monomial> = Vec::with_capacity(cosets);
    let mut standard_set: HashSet<Vec<u8>> = HashSet::with_capacity(cosets);
    let mut coset: HashMap<u64, usize> = HashMap::with_capacity(cosets);
    let mut elements = Vec::new();
    let mut last: Option<Monomial> = None;
    let mut scratch: Vec<u8> = Vec::with_capacity(nv);

    while let Some(Candidate { m, syndrome, .. }) = heap.pop() {
        // equal candidates pop consecutively
        if last.as_ref() == Some(&m) {
            continue;
        }
        last = Some(m.clone());
        if m.degree() > cap {
            return Err(Error::DegreeCapExceeded { degree: m.degree(), cap });
        }
        scratch.clear();
        scratch.extend_from_slice(m.exps());
        let mut border = true;
        for v in 0..nv {
            if scratch[v] > 0 {
                scratch[v] -= 1;
                border = standard_set.contains(scratch.as_slice());
                scratch[v] += 1;
                if !border {
                    break;
                }
            }
        }
        if !border {
            continue;
        }
        let key = syndrome_index(q, &syndrome);
        if let Some(&s) = coset.get(&key) {
            elements.push(Binomial { lead: m, trail: standard[s].clone() });
            continue;
        }
        coset.insert(key, standard.len());
        standard_set.insert(m.exps().to_vec());
        for (v, c) in contrib.iter().enumerate() {
            heap.push(Candidate { order, m: m.mul_var(v), syndrome: add_into(f, &syndrome, c) });
        }
        if heap.len() > limits.frontier {
            return Err(Error::FrontierOverflow { cap: limits.frontier });
        }
        standard.push(m);
    }
    debug_assert_eq!(standard.len(), cosets);
    Ok(GroebnerBasis { order, field: f.clone(), n, elements, standard, coset, contrib })
}

/// Degree-by-degree traversal with explicit lead divisibility; shares no
/// pruning logic with [`reduced_gb`].
pub fn reduced_gb_by_degree(code: &LinearCode, order: OrderKind, limits: &Limits) -> Result<GroebnerBasis> {
    let cosets = coset_count(code, limits)?;
    let f = code.field();
    let q = f.q();
    let n = code.n();
    let cap = degree_cap(code);
    let contrib = variable_contributions(code);
    let syndrome_of = |m: &Monomial| -> Vec<u8> {
        let mut s = vec![0u8; code.n() - code.k()];
        for (v, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                s = add_into(f, &s, &contrib[v]);
            }
        }
        s
    };

    let mut standard: Vec<Monomial> = Vec::new();
    let mut coset: HashMap<u64, usize> = HashMap::new();
    let mut elements: Vec<Binomial> = Vec::new();
    let mut layer = vec![Monomial::one(n, q)];
    let mut degree = 0;
    while !layer.is_empty() {
        if degree > cap {
            return Err(Error::DegreeCapExceeded { degree, cap });
        }
        layer.sort_by_key(|m| monomial_key(order, m));
        layer.dedup();
        let mut fresh = Vec::new();
        for m in layer {
            if elements.iter().any(|b| b.lead.divides(&m)) {
                continue;
            }
            let key = syndrome_index(q, &syndrome_of(&m));
            match coset.get(&key) {
                Some(&s) => elements.push(Binomial { lead: m, trail: standard[s].clone() }),
                None => {
                    coset.insert(key, standard.len());
                    standard.push(m.clone());
                    fresh.push(m);
                }
            }
        }
        layer = fresh.iter().flat_map(|m| (0..m.nvars()).map(move |v| m.mul_var(v))).collect();
        if layer.len() > limits.frontier {
            return Err(Error::FrontierOverflow { cap: limits.frontier });
        }
        degree += 1;
    }
    debug_assert_eq!(standard.len(), cosets);
    Ok(GroebnerBasis { order, field: f.clone(), n, elements, standard, coset, contrib })
}

impl GroebnerBasis {
    pub fn order(&self) -> OrderKind {
        self.order
    }
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
    pub fn standard_count(&self) -> usize {
        self.standard.len()
    }
    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }
    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|b| &b.lead)
    }

    pub fn syndrome(&self, m: &Monomial) -> Vec<u8> {
        let f = &self.field;
        let mut s = vec![0u8; self.contrib.first().map_or(0, |c| c.len())];
        for (v, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                s = add_into(f, &s, &self.contrib[v]);
            }
        }
        s
    }

    /// The standard monomial in the coset of `m`.
    pub fn canonical_form(&self, m: &Monomial) -> Monomial {
        let key = syndrome_index(self.field.q(), &self.syndrome(m));
        self.standard[self.coset[&key]].clone()
    }

    pub fn classify(&self, b: &Binomial) -> GbClass {
        let f = &self.field;
        let a = evaluate(f, &b.lead);
        let t = evaluate(f, &b.trail);
        if a == t {
            GbClass::InRx
        } else {
            GbClass::Codeword(a.sub(f, &t))
        }
    }

    pub fn classify_all(&self) -> Vec<GbClass> {
        self.elements.iter().map(|b| self.classify(b)).collect()
    }

    /// Both monomials blockwise square-free and `w(trail) <= w(lead) <= w(trail) + 1`
    /// for a codeword-bearing element. Elements in `R_X` pass trivially.
    pub fn check_shape(&self, b: &Binomial) -> Result<()> {
        if self.classify(b) == GbClass::InRx {
            return Ok(());
        }
        let shape = |detail: &str| Error::ShapeViolation {
            element: format!("{} - {}", b.lead, b.trail),
            detail: detail.to_string(),
        };
        if !b.lead.in_delta_image() || !b.trail.in_delta_image() {
            return Err(shape("monomial is not blockwise square-free"));
        }
        let (wl, wt) = (b.lead.degree(), b.trail.degree());
        if wl < wt || wl > wt + 1 {
            return Err(shape(&format!("lead weight {wl}, trail weight {wt}")));
        }
        Ok(())
    }

    /// Every shape violation in the basis.
    pub fn shape_violations(&self) -> Vec<Error> {
        self.elements.iter().filter_map(|b| self.check_shape(b).err()).collect()
    }

    pub fn associated_codeword(&self, b: &Binomial) -> Result<Word> {
        match self.classify(b) {
            GbClass::InRx => Err(Error::RxElement),
            GbClass::Codeword(w) => Ok(w),
        }
    }

    pub fn contains(&self, lead: &Monomial, trail: &Monomial) -> bool {
        self.elements.iter().any(|b| &b.lead == lead && &b.trail == trail)
    }

    pub fn export(&self) -> GbExport {
        let classes = self.classify_all();
        let elements: Vec<GbElementExport> = self
            .elements
            .iter()
            .zip(&classes)
            .map(|(b, c)| GbElementExport {
                lead: b.lead.terms(),
                trail: b.trail.terms(),
                class: if c.codeword().is_some() { "codeword" } else { "rx" },
                codeword: c.codeword().map(|w| w.0.clone()),
            })
            .collect();
        let rx_count = classes.iter().filter(|c| c.codeword().is_none()).count();
        GbExport {
            order: self.order,
            stats: GbStats { count: elements.len(), rx_count, standard_count: self.standard_count() },
            elements,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GbStats {
    pub count: usize,
    pub rx_count: usize,
    pub standard_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GbElementExport {
    pub lead: Vec<(usize, usize, u8)>,
    pub trail: Vec<(usize, usize, u8)>,
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codeword: Option<Vec<u8>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GbExport {
    pub order: OrderKind,
    pub stats: GbStats,
    pub elements: Vec<GbElementExport>,
}

/// Distinct associated codewords of the basis, in basis order.
pub fn associated_codewords(gb: &GroebnerBasis) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in gb.classify_all() {
        if let GbClass::Codeword(w) = c {
            if seen.insert(w.clone()) {
                out.push(w);
            }
        }
    }
    out
}

/// `M_G`: associated codewords of the basis that have minimal support.
pub fn compute_mg(code: &LinearCode, gb: &GroebnerBasis, limits: &Limits) -> Result<Vec<Word>> {
    let table = code.table(limits)?;
    let minimal = table.minimal_masks();
    let mg: Vec<Word> =
        associated_codewords(gb).into_iter().filter(|w| minimal.contains(&w.mask_unchecked())).collect();
    let d1 = table.min_weight();
    if !mg.iter().any(|w| w.weight() == d1) {
        return Err(Error::Falsified(format!("M_G has no codeword of minimum weight {d1}")));
    }
    Ok(mg)
}

/// Lead monomial of the element whose associated codeword is `c`, if any.
pub fn find_by_codeword<'a>(gb: &'a GroebnerBasis, c: &Word) -> Option<&'a Binomial> {
    gb.elements().iter().find(|b| gb.classify(b).codeword() == Some(c))
}

/// Whether `Δ(a)` lies in the leading ideal of the basis.
pub fn in_leading_ideal(gb: &GroebnerBasis, a: &Word) -> bool {
    let m = delta(&gb.field, a);
    gb.leads().any(|l| l.divides(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::word_cmp;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    use crate::examples::ternary_9_3;

    fn random_code(rng: &mut ChaCha8Rng, f: &FieldSpec, n: usize, k: usize) -> LinearCode {
        loop {
            let rows: Vec<Vec<u8>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..f.q() as u8)).collect()).collect();
            if let Ok(c) = LinearCode::from_generator(f.clone(), rows) {
                return c;
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let f = gf3();
        assert!(evaluate(&f, &Monomial::one(3, 3)).is_zero());
        let sq = Monomial::from_terms(3, 3, &[(1, 1, 2)]).unwrap();
        assert_eq!(evaluate(&f, &sq), Word(vec![1, 0, 0]));
        let rx = Monomial::from_terms(3, 3, &[(1, 1, 1), (1, 2, 1)]).unwrap();
        assert!(evaluate(&f, &rx).is_zero());
        let w = Word(vec![2, 1, 0]);
        assert_eq!(evaluate(&f, &delta(&f, &w)), w);
    }

    #[test]
    fn ternary_9_3_basis() {
        let c = ternary_9_3();
        let l = Limits::default();
        let gb = reduced_gb(&c, OrderKind::DegRevLex, &l).unwrap();
        assert_eq!(gb.standard_count(), 729);
        assert_eq!(gb.len(), 457);
        let classes = gb.classify_all();
        assert!(gb.shape_violations().is_empty());
        assert_eq!(classes.iter().filter(|c| **c == GbClass::InRx).count(), 27);
        let lead = Monomial::from_terms(9, 3, &[(1, 1, 1), (8, 2, 1)]).unwrap();
        let trail = Monomial::from_terms(9, 3, &[(6, 2, 1)]).unwrap();
        assert!(gb.contains(&lead, &trail));
        let b = Binomial { lead, trail };
        assert_eq!(gb.associated_codeword(&b).unwrap(), Word(vec![2, 0, 0, 0, 0, 2, 0, 1, 0]));
        let lead = Monomial::from_terms(9, 3, &[(6, 2, 1), (7, 2, 1), (9, 2, 1)]).unwrap();
        let trail = Monomial::from_terms(9, 3, &[(2, 1, 1), (5, 1, 1)]).unwrap();
        assert!(gb.contains(&lead, &trail));
        let b = Binomial { lead, trail };
        assert_eq!(gb.associated_codeword(&b).unwrap(), Word(vec![0, 1, 0, 0, 1, 1, 1, 0, 1]));

        let mg = compute_mg(&c, &gb, &l).unwrap();
        assert!(mg.contains(&Word(vec![2, 0, 0, 0, 0, 2, 0, 1, 0])));
        assert!(mg.contains(&Word(vec![0, 1, 0, 0, 1, 1, 1, 0, 1])));
    }

    #[test]
    fn routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let l = Limits::default();
        let mut codes = vec![ternary_9_3()];
        for (p, s, n, k) in [(2, 1, 6, 2), (3, 1, 5, 2), (2, 2, 4, 2), (2, 1, 7, 3), (5, 1, 3, 1)] {
            let f = FieldSpec::new(p, s, None).unwrap();
            for _ in 0..3 {
                codes.push(random_code(&mut rng, &f, n, k));
            }
        }
        for c in &codes {
            for o in [OrderKind::DegLex, OrderKind::DegRevLex] {
                let a = reduced_gb(c, o, &l).unwrap();
                let b = reduced_gb_by_degree(c, o, &l).unwrap();
                assert_eq!(a.elements(), b.elements());
                assert_eq!(a.standard_monomials(), b.standard_monomials());
            }
        }
    }

    #[test]
    fn full_space_basis_is_variables_minus_one() {
        let f = gf3();
        let c = LinearCode::from_generator(f.clone(), vec![vec![1, 0], vec![0, 1]]).unwrap();
        let gb = reduced_gb(&c, OrderKind::DegRevLex, &Limits::default()).unwrap();
        assert_eq!(gb.standard_count(), 1);
        assert_eq!(gb.len(), 4);
        for b in gb.elements() {
            assert_eq!(b.lead.degree(), 1);
            assert!(b.trail.is_one());
            let (i, j, _) = b.lead.terms()[0];
            let mut w = Word::zeros(2);
            w.0[i - 1] = f.pow_alpha(j as u32);
            assert_eq!(gb.associated_codeword(b).unwrap(), w);
        }
        let one_dim = LinearCode::from_generator(f, vec![vec![1]]).unwrap();
        let gb = reduced_gb(&one_dim, OrderKind::DegLex, &Limits::default()).unwrap();
        let mg = compute_mg(&one_dim, &gb, &Limits::default()).unwrap();
        let mut sorted = mg.clone();
        sorted.sort();
        assert_eq!(sorted, vec![Word(vec![1]), Word(vec![2])]);
    }

    #[test]
    fn canonical_forms() {
        let c = ternary_9_3();
        let gb = reduced_gb(&c, OrderKind::DegRevLex, &Limits::default()).unwrap();
        for s in gb.standard_monomials().iter().take(50) {
            assert_eq!(&gb.canonical_form(s), s);
        }
        for b in gb.elements() {
            assert_eq!(gb.canonical_form(&b.lead), b.trail);
        }
        let rx = Monomial::from_terms(9, 3, &[(1, 1, 1), (1, 2, 1)]).unwrap();
        assert!(gb.canonical_form(&rx).is_one());
        let deep = Monomial::from_terms(9, 3, &[(1, 1, 2), (4, 2, 1), (9, 1, 3)]).unwrap();
        let cf = gb.canonical_form(&deep);
        assert_eq!(gb.canonical_form(&cf), cf);
        assert_ne!(compare(OrderKind::DegRevLex, &cf, &deep), Ordering::Greater);
    }

    fn all_words(q: usize, n: usize) -> Vec<Word> {
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
    fn soundness_completeness_reducedness() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let l = Limits::default();
        for (p, n) in [(2, 5), (3, 4), (3, 5)] {
            let f = FieldSpec::prime(p).unwrap();
            let words = all_words(f.q(), n);
            for _ in 0..4 {
                let k = rng.gen_range(1..n);
                let c = random_code(&mut rng, &f, n, k);
                for o in [OrderKind::DegLex, OrderKind::DegRevLex] {
                    let gb = reduced_gb(&c, o, &l).unwrap();
                    for b in gb.elements() {
                        assert_eq!(compare(o, &b.lead, &b.trail), Ordering::Greater);
                        let diff = evaluate(&f, &b.lead).sub(&f, &evaluate(&f, &b.trail));
                        assert!(c.contains(&diff));
                        for other in gb.elements() {
                            assert!(!other.lead.divides(&b.trail));
                            if other != b {
                                assert!(!other.lead.divides(&b.lead));
                            }
                        }
                        if o == OrderKind::DegRevLex {
                            gb.check_shape(b).unwrap();
                        }
                        if let GbClass::Codeword(w) = gb.classify(b) {
                            let a = evaluate(&f, &b.lead);
                            let t = evaluate(&f, &b.trail);
                            assert_eq!(w.mask_unchecked(), a.mask_unchecked() | t.mask_unchecked());
                        }
                    }
                    for a in &words {
                        for b in &words {
                            if c.contains(&a.sub(&f, b)) && word_cmp(o, &f, b, a) == Ordering::Less {
                                assert!(in_leading_ideal(&gb, a), "{a:?} {b:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn binary_associated_codewords_are_minimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let f = FieldSpec::prime(2).unwrap();
        let l = Limits::default();
        for _ in 0..20 {
            let n = rng.gen_range(4..9);
            let k = rng.gen_range(1..4.min(n));
            let c = random_code(&mut rng, &f, n, k);
            let gb = reduced_gb(&c, OrderKind::DegRevLex, &l).unwrap();
            let minimal = c.table(&l).unwrap().minimal_masks();
            let all = associated_codewords(&gb);
            assert!(all.iter().all(|w| minimal.contains(&w.mask_unchecked())));
            assert_eq!(compute_mg(&c, &gb, &l).unwrap().len(), all.len());
        }
    }

    #[test]
    fn deglex_weight_gap_two() {
        // binary repetition code of length 4
        let f = FieldSpec::prime(2).unwrap();
        let c = LinearCode::from_generator(f, vec![vec![1, 1, 1, 1]]).unwrap();
        let l = Limits::default();
        let gb = reduced_gb(&c, OrderKind::DegLex, &l).unwrap();
        let lead = Monomial::from_terms(4, 2, &[(2, 1, 1), (3, 1, 1), (4, 1, 1)]).unwrap();
        let trail = Monomial::from_terms(4, 2, &[(1, 1, 1)]).unwrap();
        assert!(gb.contains(&lead, &trail));
        assert_eq!(gb.shape_violations().len(), 1);
        let gb = reduced_gb(&c, OrderKind::DegRevLex, &l).unwrap();
        assert!(gb.shape_violations().is_empty());

        let f = gf3();
        let c = LinearCode::from_generator(f, vec![vec![2, 1, 2, 2]]).unwrap();
        let gb = reduced_gb(&c, OrderKind::DegLex, &l).unwrap();
        let lead = Monomial::from_terms(4, 3, &[(2, 2, 1), (3, 1, 1), (4, 1, 1)]).unwrap();
        let trail = Monomial::from_terms(4, 3, &[(1, 2, 1)]).unwrap();
        assert!(gb.contains(&lead, &trail));
        for d in (0..lead.nvars()).filter_map(|v| lead.div_var(v)) {
            assert_eq!(gb.canonical_form(&d), d);
        }
    }

    #[test]
    fn caps() {
        let c = ternary_9_3();
        let l = Limits { cosets: 100, ..Limits::default() };
        assert!(matches!(reduced_gb(&c, OrderKind::DegLex, &l), Err(Error::TooLarge { .. })));
        let l = Limits { frontier: 10, ..Limits::default() };
        assert_eq!(reduced_gb(&c, OrderKind::DegLex, &l).unwrap_err(), Error::FrontierOverflow { cap: 10 });
    }
}
