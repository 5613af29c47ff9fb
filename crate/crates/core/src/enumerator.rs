//! Genus-g weight enumerators, the product rule, and the named genus-1 and
//! genus-2 polynomials built from them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::gf2::{column_masks, len_mask, BinaryCode, Gf2Error, ENUMERATION_LIMIT};
use crate::poly::{int, rat, MultiPoly, PolyError, Rational};

/// Genus ceiling for exhaustive enumeration (8 variables of 7 bits pack into
/// the accumulator key).
pub const MAX_ENUMERATION_GENUS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("genus {0} is above the supported maximum {MAX_ENUMERATION_GENUS}")]
    GenusTooLarge(usize),
    #[error(
        "genus {genus} x dimension {dimension} = {} exceeds the enumeration budget {limit}; \
         split the code and use weight_enumerator_decomposed",
        genus * dimension
    )]
    BudgetExceeded {
        genus: usize,
        dimension: usize,
        limit: usize,
    },
    #[error("no component codes given")]
    NoParts,
    #[error("{0} is not integral")]
    NotIntegral(&'static str),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `W_C^(g)`: the sum over all `g`-tuples of codewords of
/// `prod_a x_a^{n_a(u_1, ..., u_g)}`.
///
/// Refuses when `g * k` exceeds [`ENUMERATION_LIMIT`]; direct sums should go
/// through [`weight_enumerator_decomposed`] instead.
pub fn weight_enumerator(code: &BinaryCode, genus: usize) -> Result<MultiPoly, EnumError> {
    if genus == 0 {
        return Err(EnumError::ZeroGenus);
    }
    if genus > MAX_ENUMERATION_GENUS {
        return Err(EnumError::GenusTooLarge(genus));
    }
    let k = code.dimension();
    if genus * k > ENUMERATION_LIMIT {
        return Err(EnumError::BudgetExceeded {
            genus,
            dimension: k,
            limit: ENUMERATION_LIMIT,
        });
    }
    let words = code.codeword_bits()?;
    let n = code.length();
    let counts = match genus {
        1 => genus1(&words, n),
        2 => genus2(&words, n),
        _ => genus_general(&words, n, genus),
    };
    let vars = 1usize << genus;
    let terms = counts.into_iter().map(|(key, count)| {
        let exps = unpack(key, vars);
        (exps, Rational::from_integer(BigInt::from(count)))
    });
    Ok(MultiPoly::from_terms(genus, terms)?)
}

const FIELD_BITS: u32 = 7;

#[inline]
fn unpack(key: u64, vars: usize) -> Vec<u32> {
    (0..vars)
        .map(|i| ((key >> (FIELD_BITS * i as u32)) & 0x7f) as u32)
        .collect()
}

fn genus1(words: &[u64], n: usize) -> Vec<(u64, u64)> {
    let mut dist = vec![0u64; n + 1];
    for &u in words {
        dist[u.count_ones() as usize] += 1;
    }
    dist.into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(w, c)| (((n - w) as u64) | (w as u64) << FIELD_BITS, c))
        .collect()
}

/// Pairs `(u, v)`: `n_10 = |u & !v|`, `n_01 = |!u & v|`, `n_11 = |u & v|`
/// index a dense table; `n_00` is implied by the length.
fn genus2(words: &[u64], n: usize) -> Vec<(u64, u64)> {
    let side = n + 1;
    let table = words
        .par_iter()
        .fold(
            || vec![0u64; side * side * side],
            |mut acc, &u| {
                for &v in words {
                    let n10 = (u & !v).count_ones() as usize;
                    let n01 = (!u & v).count_ones() as usize;
                    let n11 = (u & v).count_ones() as usize;
                    acc[(n10 * side + n01) * side + n11] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; side * side * side],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let mut out = Vec::new();
    for (idx, &count) in table.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let n11 = idx % side;
        let n01 = idx / side % side;
        let n10 = idx / side / side;
        let n00 = n - n10 - n01 - n11;
        let key = n00 as u64
            | (n10 as u64) << FIELD_BITS
            | (n01 as u64) << (2 * FIELD_BITS)
            | (n11 as u64) << (3 * FIELD_BITS);
        out.push((key, count));
    }
    out
}

/// Any genus: the outermost word is split across workers, the remaining
/// `g - 1` words run as an odometer.
fn genus_general(words: &[u64], n: usize, genus: usize) -> Vec<(u64, u64)> {
    let full = len_mask(n);
    let vars = 1usize << genus;
    let size = words.len();
    let merged = words
        .par_iter()
        .fold(HashMap::<u64, u64>::new, |mut acc, &first| {
            let mut idx = vec![0usize; genus - 1];
            let mut tuple = vec![0u64; genus];
            let mut masks = vec![0u64; vars];
            tuple[0] = first;
            loop {
                for (slot, &i) in tuple[1..].iter_mut().zip(&idx) {
                    *slot = words[i];
                }
                column_masks(&tuple, full, &mut masks);
                let mut key = 0u64;
                for (a, m) in masks.iter().enumerate() {
                    key |= (m.count_ones() as u64) << (FIELD_BITS * a as u32);
                }
                *acc.entry(key).or_insert(0) += 1;
                // advance odometer
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        return acc;
                    }
                    idx[pos] += 1;
                    if idx[pos] < size {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut out: Vec<(u64, u64)> = merged.into_iter().collect();
    out.sort_unstable();
    out
}

/// Product rule: `W_{C (+) C'}^(g) = W_C^(g) W_{C'}^(g)`.
pub fn weight_enumerator_decomposed(parts: &[BinaryCode], genus: usize) -> Result<MultiPoly, EnumError> {
    let (first, rest) = parts.split_first().ok_or(EnumError::NoParts)?;
    let mut acc = cached_weight_enumerator(first, genus)?.as_ref().clone();
    for part in rest {
        acc = acc.try_mul(cached_weight_enumerator(part, genus)?.as_ref())?;
    }
    Ok(acc)
}

type CacheKey = (usize, Vec<BitRow>, usize);
type BitRow = u64;

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<MultiPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<MultiPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// [`weight_enumerator`] memoized per process, keyed by the reduced
/// generator matrix and genus.
pub fn cached_weight_enumerator(code: &BinaryCode, genus: usize) -> Result<Arc<MultiPoly>, EnumError> {
    let key = (code.length(), code.raw_rows().to_vec(), genus);
    if let Some(hit) = cache().lock().expect("enumerator cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let poly = Arc::new(weight_enumerator(code, genus)?);
    cache()
        .lock()
        .expect("enumerator cache poisoned")
        .insert(key, Arc::clone(&poly));
    Ok(poly)
}

/// `x^4 y^4 (x^4 - y^4)^4`.
pub fn delta() -> MultiPoly {
    let x4 = MultiPoly::var(1, 0).pow(4);
    let y4 = MultiPoly::var(1, 1).pow(4);
    &(&x4 * &y4) * &(&x4 - &y4).pow(4)
}

/// `X = (W_9 - W_7) / 42`.
pub fn basis_x(w9: &MultiPoly, w7: &MultiPoly) -> Result<MultiPoly, EnumError> {
    Ok(w9.try_sub(w7)?.scale(&rat(1, 42)))
}

/// `Y = -11/7 W_9 + 4/7 W_7 + W_5`.
pub fn basis_y(w9: &MultiPoly, w7: &MultiPoly, w5: &MultiPoly) -> Result<MultiPoly, EnumError> {
    Ok(w9
        .scale(&rat(-11, 7))
        .try_add(&w7.scale(&rat(4, 7)))?
        .try_add(w5)?)
}

/// `X_24 = X - Y / 44`.
pub fn x24(x: &MultiPoly, y: &MultiPoly) -> Result<MultiPoly, EnumError> {
    Ok(x.try_sub(&y.scale(&rat(1, 44)))?)
}

/// `Y_24 = Y / (2^4 * 3 * 11)`.
pub fn y24(y: &MultiPoly) -> MultiPoly {
    y.scale(&rat(1, 528))
}

/// The genus-2 basis `W_{C_9}, X_24, Y_24` together with the intermediate
/// `X`, `Y`, built from the enumerators of `C_9`, `C_7`, `C_5`.
#[derive(Debug, Clone)]
pub struct GenusTwoBasis {
    pub w9: MultiPoly,
    pub w7: MultiPoly,
    pub w5: MultiPoly,
    pub x: MultiPoly,
    pub y: MultiPoly,
    pub x24: MultiPoly,
    pub y24: MultiPoly,
}

impl GenusTwoBasis {
    /// Fails if `X_24` or `Y_24` comes out non-integral, which can only
    /// happen when an input enumerator is wrong.
    pub fn new(w9: MultiPoly, w7: MultiPoly, w5: MultiPoly) -> Result<Self, EnumError> {
        let x = basis_x(&w9, &w7)?;
        let y = basis_y(&w9, &w7, &w5)?;
        let x24 = x24(&x, &y)?;
        let y24 = y24(&y);
        if !x24.is_integral() {
            return Err(EnumError::NotIntegral("X_24"));
        }
        if !y24.is_integral() {
            return Err(EnumError::NotIntegral("Y_24"));
        }
        Ok(Self {
            w9,
            w7,
            w5,
            x,
            y,
            x24,
            y24,
        })
    }

    /// `W_9 + 6(4h - 7) X_24 + 24(2h + 3)(4h - 7) Y_24`.
    pub fn predicted(&self, h: &Rational) -> MultiPoly {
        let (c0, c1) = coefficients_c(h);
        &(&self.w9 + &self.x24.scale(&c0)) + &self.y24.scale(&c1)
    }
}

/// `(c_0(h), c_1(h)) = (6(4h - 7), 24(2h + 3)(4h - 7))`.
pub fn coefficients_c(h: &Rational) -> (Rational, Rational) {
    let t = int(4) * h - int(7);
    let c0 = int(6) * &t;
    let c1 = int(24) * (int(2) * h + int(3)) * &t;
    (c0, c1)
}

/// `W_9^(1) + 6(4h - 7) Delta`.
pub fn genus1_predicted(w9: &MultiPoly, h: &Rational) -> MultiPoly {
    let c0 = int(6) * (int(4) * h - int(7));
    w9 + &delta().scale(&c0)
}
