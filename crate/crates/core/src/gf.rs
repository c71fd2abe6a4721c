//! Table-driven arithmetic in GF(q), q = p^s ≤ 16.
//!
//! Elements are identified by an integer code in `0..q`: for prime fields the
//! code is the residue, for extension fields it is the coefficient vector of
//! the polynomial representative read as a base-p number (constant term is the
//! least significant digit). Nonzero elements are also addressed by their
//! exponent with respect to the fixed primitive element α, using the range
//! `1..=q-1` so that the identity has exponent `q-1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u8,
    s: u8,
    q: u8,
    /// Ascending coefficients of the monic modulus, length `s + 1`; empty for prime fields.
    modulus: Vec<u8>,
    alpha: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    /// `exp[j] = α^j` for `j ∈ 1..=q-1`; slot 0 is unused.
    exp: Vec<u8>,
    /// `log[a] ∈ 1..=q-1` for nonzero `a`; slot 0 is unused.
    log: Vec<u8>,
}

/// Field description as it appears in input files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u32,
    #[serde(default = "one")]
    pub s: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

/// An element written in an input file: integer code, `"a^j"` string, or
/// coefficient vector (ascending).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Code(u32),
    Power(String),
    Coeffs(Vec<u32>),
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

// Polynomials over GF(p) as ascending coefficient vectors.

fn poly_trim(mut a: Vec<u8>) -> Vec<u8> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u8], m: &[u8], p: u8) -> Vec<u8> {
    let mut r = poly_trim(a.to_vec());
    let m = poly_trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = (1..p).find(|x| (x * m[dm]) % p == 1).unwrap();
    while r.len() > dm && !r.is_empty() {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u32 * lead_inv as u32 % p as u32) as u8;
        for (i, &mi) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = ((r[idx] as u32 + (p as u32 - c as u32) * mi as u32) % p as u32) as u8;
        }
        r = poly_trim(r);
    }
    r
}

fn digits(code: u32, p: u32, s: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(s);
    let mut c = code;
    for _ in 0..s {
        out.push((c % p) as u8);
        c /= p;
    }
    out
}

fn undigits(d: &[u8], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x as u32)
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=deg/2`.
fn is_irreducible(m: &[u8], p: u8) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u32).pow(d as u32);
        for low in 0..count {
            let mut f = digits(low, p as u32, d);
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `s`, ordered by the integer value of
/// its coefficient vector.
fn default_modulus(p: u8, s: usize) -> Vec<u8> {
    let count = (p as u32).pow(s as u32);
    for low in 0..count {
        let mut m = digits(low, p as u32, s);
        m.push(1);
        if m[0] != 0 && is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldSpec {
    /// Builds GF(p^s). `modulus` holds ascending coefficients of a degree-s
    /// polynomial; when omitted for s > 1 the smallest irreducible is used.
    pub fn new(p: u32, s: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || p.checked_pow(s).is_none_or(|q| q > MAX_ORDER) {
            return Err(Error::FieldTooLarge { p, s });
        }
        let q = p.pow(s);
        let pu = p as u8;
        let modulus: Vec<u8> = if s == 1 {
            Vec::new()
        } else {
            match modulus {
                None => default_modulus(pu, s as usize),
                Some(coeffs) => {
                    let bad = || Error::BadModulus { coeffs: coeffs.iter().map(|&c| c as u8).collect(), degree: s, p };
                    if coeffs.len() != s as usize + 1 || coeffs.iter().any(|&c| c >= p) {
                        return Err(bad());
                    }
                    let lead = coeffs[s as usize];
                    if lead == 0 {
                        return Err(bad());
                    }
                    let lead_inv = (1..p).find(|x| x * lead % p == 1).unwrap();
                    let m: Vec<u8> = coeffs.iter().map(|&c| (c * lead_inv % p) as u8).collect();
                    if !is_irreducible(&m, pu) {
                        return Err(Error::ReducibleModulus(m));
                    }
                    m
                }
            }
        };

        let qn = q as usize;
        let sn = s as usize;
        let mut add = vec![0u8; qn * qn];
        let mut mul = vec![0u8; qn * qn];
        for a in 0..q {
            let da = digits(a, p, sn);
            for b in 0..q {
                let db = digits(b, p, sn);
                let sum: Vec<u8> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % pu).collect();
                add[a as usize * qn + b as usize] = undigits(&sum, p) as u8;
                let mut prod = vec![0u8; 2 * sn - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = ((prod[i + j] as u32 + x as u32 * y as u32) % p) as u8;
                    }
                }
                let red = if s == 1 { poly_trim(prod) } else { poly_rem(&prod, &modulus, pu) };
                let mut red = red;
                red.resize(sn, 0);
                mul[a as usize * qn + b as usize] = undigits(&red, p) as u8;
            }
        }
        let mut neg = vec![0u8; qn];
        let mut inv = vec![0u8; qn];
        for a in 0..qn {
            neg[a] = (0..qn).find(|&b| add[a * qn + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..qn).find(|&b| mul[a * qn + b] == 1).unwrap() as u8;
            }
        }

        // First generator of the multiplicative group in ascending code order.
        let mut found = None;
        for g in 1..qn {
            let mut seen = vec![false; qn];
            let mut x = 1usize;
            let mut distinct = 0;
            for _ in 1..qn {
                x = mul[x * qn + g] as usize;
                if !seen[x] {
                    seen[x] = true;
                    distinct += 1;
                }
            }
            if distinct == qn - 1 {
                found = Some(g as u8);
                break;
            }
        }
        let alpha = found.ok_or(Error::NoPrimitiveElement)?;
        let mut exp = vec![0u8; qn];
        let mut log = vec![0u8; qn];
        let mut x = 1usize;
        for (j, e) in exp.iter_mut().enumerate().skip(1) {
            x = mul[x * qn + alpha as usize] as usize;
            *e = x as u8;
            log[x] = j as u8;
        }
        debug_assert_eq!(exp[qn - 1], 1);

        Ok(Self { p: pu, s: s as u8, q: q as u8, modulus, alpha, add, mul, neg, inv, exp, log })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// The field of order `q` with the default modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        let p = (2..=q.max(2)).find(|d| q.is_multiple_of(*d)).ok_or(Error::NotPrime(q))?;
        let mut s = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            s += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrime(q));
        }
        Self::new(p, s, None)
    }

    pub fn from_desc(desc: &FieldDesc) -> Result<Self> {
        Self::new(desc.p, desc.s, desc.modulus.as_deref())
    }

    pub fn desc(&self) -> FieldDesc {
        FieldDesc {
            p: self.p as u32,
            s: self.s as u32,
            modulus: (self.s > 1).then(|| self.modulus.iter().map(|&c| c as u32).collect()),
        }
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }
    pub fn s(&self) -> u32 {
        self.s as u32
    }
    pub fn q(&self) -> usize {
        self.q as usize
    }
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }
    /// Integer code of the primitive element α.
    pub fn alpha(&self) -> u8 {
        self.alpha
    }
    pub fn is_char2(&self) -> bool {
        self.p == 2
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }
    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }
    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv[a as usize])
        }
    }
    /// Exponent of a nonzero element in `1..=q-1`; `dlog(1) = q-1`.
    pub fn dlog(&self, a: u8) -> Result<u32> {
        if a == 0 {
            Err(Error::ZeroHasNoLog)
        } else {
            Ok(self.log[a as usize] as u32)
        }
    }
    #[inline]
    pub(crate) fn log_unchecked(&self, a: u8) -> usize {
        self.log[a as usize] as usize
    }
    /// α^j for any integer j (taken modulo q-1).
    #[inline]
    pub fn pow_alpha(&self, j: u32) -> u8 {
        let m = self.q as u32 - 1;
        let r = j % m;
        self.exp[if r == 0 { m as usize } else { r as usize }]
    }

    pub fn element(&self, code: u8) -> Result<FieldElement<'_>> {
        if (code as usize) < self.q() {
            Ok(FieldElement { field: self, code })
        } else {
            Err(Error::ElementOutOfRange { code: code as u32, q: self.q as u32 })
        }
    }

    /// Parses an element written in an input file.
    pub fn parse_element(&self, repr: &ElementRepr) -> Result<u8> {
        match repr {
            ElementRepr::Code(c) => {
                if (*c as usize) < self.q() {
                    Ok(*c as u8)
                } else {
                    Err(Error::ElementOutOfRange { code: *c, q: self.q as u32 })
                }
            }
            ElementRepr::Coeffs(cs) => {
                if cs.len() > self.s as usize || cs.iter().any(|&c| c >= self.p as u32) {
                    return Err(Error::BadElement(format!("{cs:?}")));
                }
                let d: Vec<u8> = cs.iter().map(|&c| c as u8).collect();
                Ok(undigits(&d, self.p as u32) as u8)
            }
            ElementRepr::Power(s) => {
                let t = s.trim();
                match t {
                    "0" => return Ok(0),
                    "1" => return Ok(1),
                    "a" => return Ok(self.alpha),
                    _ => {}
                }
                let j: u32 =
                    t.strip_prefix("a^").and_then(|e| e.parse().ok()).ok_or_else(|| Error::BadElement(s.clone()))?;
                Ok(self.pow_alpha(j))
            }
        }
    }

    /// Coefficient vector (ascending) of the element with the given code.
    pub fn coeffs(&self, code: u8) -> Vec<u8> {
        digits(code as u32, self.p as u32, self.s as usize)
    }
}

/// A field element tied to its field, for callers that want checked arithmetic.
#[derive(Clone, Copy, Debug)]
pub struct FieldElement<'f> {
    field: &'f FieldSpec,
    code: u8,
}

#[allow(clippy::should_implement_trait)]
impl<'f> FieldElement<'f> {
    pub fn code(&self) -> u8 {
        self.code
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        Ok(Self { field: self.field, code: self.field.add(self.code, other.code) })
    }
    pub fn mul(self, other: Self) -> Result<Self> {
        self.same_field(&other)?;
        Ok(Self { field: self.field, code: self.field.mul(self.code, other.code) })
    }
    pub fn neg(self) -> Self {
        Self { field: self.field, code: self.field.neg(self.code) }
    }
    pub fn inv(self) -> Result<Self> {
        Ok(Self { field: self.field, code: self.field.inv(self.code)? })
    }
    pub fn dlog(self) -> Result<u32> {
        self.field.dlog(self.code)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.same_field(other).is_ok()
    }
}
