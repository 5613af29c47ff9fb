//! Sparse multivariate polynomials with exact rational coefficients in the
//! `2^g` variables `x_a`, `a` in `F_2^g`.
//!
//! Variable `x_a` lives at index `v(a) = a_1 + 2 a_2 + ... + 2^(g-1) a_g` of
//! every exponent vector. Genus 0 is the one-variable ring in `x_0`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest genus whose `2^g` variables the ring supports.
pub const MAX_GENUS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("genus {0} exceeds the supported maximum {MAX_GENUS}")]
    GenusTooLarge(usize),
    #[error("exponent vector has {found} entries, genus {genus} needs {expected}")]
    Arity {
        genus: usize,
        expected: usize,
        found: usize,
    },
    #[error("polynomial has non-integral coefficients")]
    NotIntegral,
    #[error("modulus must be positive")]
    BadModulus,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then the exponent of `x_0`, then `x_1`, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Exponents {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// Polynomial in `x_a`, `a` in `F_2^genus`, over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    genus: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(genus: usize) -> Self {
        assert!(genus <= MAX_GENUS, "genus {genus} exceeds {MAX_GENUS}");
        Self {
            genus,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(genus: usize, c: Rational) -> Self {
        let mut p = Self::zero(genus);
        p.add_term(vec![0; 1 << genus].into(), c);
        p
    }

    pub fn one(genus: usize) -> Self {
        Self::constant(genus, Rational::one())
    }

    /// The variable `x_a` with `v(a) = index`.
    pub fn var(genus: usize, index: usize) -> Self {
        let mut e = vec![0; 1 << genus];
        e[index] = 1;
        Self::monomial(genus, e, Rational::one()).expect("index within range")
    }

    pub fn monomial(genus: usize, exps: Vec<u32>, c: Rational) -> Result<Self, PolyError> {
        if genus > MAX_GENUS {
            return Err(PolyError::GenusTooLarge(genus));
        }
        let mut p = Self::zero(genus);
        p.check_arity(&exps)?;
        p.add_term(exps.into(), c);
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms(
        genus: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self, PolyError> {
        if genus > MAX_GENUS {
            return Err(PolyError::GenusTooLarge(genus));
        }
        let mut p = Self::zero(genus);
        for (e, c) in terms {
            p.check_arity(&e)?;
            p.add_term(e.into(), c);
        }
        Ok(p)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn num_vars(&self) -> usize {
        1 << self.genus
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

    /// Terms from the largest monomial down (the canonical display order).
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter().rev()
    }

    fn check_arity(&self, e: &[u32]) -> Result<(), PolyError> {
        if e.len() != self.num_vars() {
            Err(PolyError::Arity {
                genus: self.genus,
                expected: self.num_vars(),
                found: e.len(),
            })
        } else {
            Ok(())
        }
    }

    fn check_genus(&self, other: &Self) -> Result<(), PolyError> {
        if self.genus != other.genus {
            Err(PolyError::GenusMismatch(self.genus, other.genus))
        } else {
            Ok(())
        }
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, e: &[u32]) -> Result<Rational, PolyError> {
        self.check_arity(e)?;
        Ok(self
            .terms
            .get(&Exponents(e.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_genus(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.negate())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_genus(other)?;
        let mut out = Self::zero(self.genus);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.0.iter().zip(&eb.0).map(|(x, y)| x + y).collect();
                out.add_term(Exponents(e), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.genus);
        }
        Self {
            genus: self.genus,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            genus: self.genus,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.genus);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Every coefficient of `self - other` is an integer divisible by
    /// `modulus`. Both inputs must be integral.
    pub fn congruent_mod(&self, other: &Self, modulus: u64) -> Result<bool, PolyError> {
        self.check_genus(other)?;
        if modulus == 0 {
            return Err(PolyError::BadModulus);
        }
        if !self.is_integral() || !other.is_integral() {
            return Err(PolyError::NotIntegral);
        }
        let m = BigInt::from(modulus);
        let diff = self.try_sub(other)?;
        Ok(diff.terms.values().all(|c| c.numer().is_multiple_of(&m)))
    }

    /// Some coefficient equals `+1` or `-1`.
    pub fn has_unit_coefficient(&self) -> Result<bool, PolyError> {
        if !self.is_integral() {
            return Err(PolyError::NotIntegral);
        }
        Ok(self.terms.values().any(|c| c.abs().is_one()))
    }

    pub fn is_homogeneous(&self, degree: u64) -> bool {
        self.terms.keys().all(|e| e.degree() == degree)
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// The genus-lowering map: `x_(a',0) -> x_a'`, `x_(a',1) -> 0`.
    /// With the `v(a)` indexing this keeps the terms whose upper half of
    /// exponents is zero and truncates them to the lower half.
    pub fn phi(&self) -> Self {
        if self.genus == 0 {
            return self.clone();
        }
        let half = self.num_vars() / 2;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.0[half..].iter().all(|&x| x == 0))
            .map(|(e, c)| (Exponents(e.0[..half].to_vec()), c.clone()))
            .collect();
        Self {
            genus: self.genus - 1,
            terms,
        }
    }

    /// First exponent vector (largest first) at which the two polynomials
    /// differ, with `(self, other)` coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Exponents, Rational, Rational)> {
        let mut a = self.terms.iter().rev().peekable();
        let mut b = other.terms.iter().rev().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((ea, ca)), None) => return Some(((*ea).clone(), (*ca).clone(), Rational::zero())),
                (None, Some((eb, cb))) => return Some(((*eb).clone(), Rational::zero(), (*cb).clone())),
                (Some((ea, ca)), Some((eb, cb))) => match ea.cmp(eb) {
                    Ordering::Greater => return Some(((*ea).clone(), (*ca).clone(), Rational::zero())),
                    Ordering::Less => return Some(((*eb).clone(), Rational::zero(), (*cb).clone())),
                    Ordering::Equal => {
                        if ca != cb {
                            return Some(((*ea).clone(), (*ca).clone(), (*cb).clone()));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }

    /// Name of variable `index` in text form: `x`, `y` in genus 1, `x` in
    /// genus 0, otherwise `x_` followed by the bits `a_1 ... a_g`.
    pub fn var_name(genus: usize, index: usize) -> String {
        match genus {
            0 => "x".to_string(),
            1 => ["x", "y"][index].to_string(),
            _ => {
                let bits: String = (0..genus)
                    .map(|k| if index >> k & 1 == 1 { '1' } else { '0' })
                    .collect();
                format!("x_{bits}")
            }
        }
    }

    fn var_index(genus: usize, name: &str) -> Option<usize> {
        (0..1usize << genus).find(|&i| Self::var_name(genus, i) == name)
    }

    /// Canonical text, e.g. `x^8 + 14*x^4*y^4 + y^8`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// LaTeX rendering: `x^{8}+14x^{4}y^{4}+y^{8}`, genus-2 variables as
    /// `x_{01}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let a = c.abs();
            let is_const = e.0.iter().all(|&x| x == 0);
            if !a.is_integer() {
                out.push_str(&format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()));
            } else if !a.is_one() || is_const {
                out.push_str(&a.numer().to_string());
            }
            for (idx, &x) in e.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = match self.genus {
                    0 => "x".to_string(),
                    1 => ["x", "y"][idx].to_string(),
                    g => format!(
                        "x_{{{}}}",
                        (0..g)
                            .map(|k| if idx >> k & 1 == 1 { '1' } else { '0' })
                            .collect::<String>()
                    ),
                };
                if x == 1 {
                    out.push_str(&name);
                } else {
                    out.push_str(&format!("{name}^{{{x}}}"));
                }
            }
        }
        out
    }

    /// JSON object `{genus, terms: [{exponents, coefficient}]}` with
    /// coefficients as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, c)| {
                serde_json::json!({
                    "exponents": e.0,
                    "coefficient": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "genus": self.genus, "terms": terms })
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(genus: usize, s: &str) -> Result<Self, PolyError> {
        if genus > MAX_GENUS {
            return Err(PolyError::GenusTooLarge(genus));
        }
        let err = |m: &str| PolyError::Parse(format!("{m} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Self::zero(genus);
        if compact == "0" {
            return Ok(out);
        }
        // split into signed terms
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            pieces.push(cur);
        }
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            if body.is_empty() {
                return Err(err("empty term"));
            }
            let mut coef = Rational::one();
            let mut exps = vec![0u32; 1 << genus];
            for factor in body.split('*') {
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let c: Rational = factor.parse().map_err(|_| err("bad coefficient"))?;
                    coef *= c;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                let idx = Self::var_index(genus, name).ok_or_else(|| err("unknown variable"))?;
                exps[idx] += power;
            }
            if neg {
                coef = -coef;
            }
            out.add_term(exps.into(), coef);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut factors = Vec::new();
            if !a.is_one() {
                factors.push(a.to_string());
            }
            for (idx, &x) in e.0.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(Self::var_name(self.genus, idx)),
                    _ => factors.push(format!("{}^{x}", Self::var_name(self.genus, idx))),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[g={}]({self})", self.genus)
    }
}

// Operator impls panic on genus mismatch; use the `try_*` methods where the
// genus is not known statically.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("genus mismatch in +")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("genus mismatch in -")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("genus mismatch in *")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}
