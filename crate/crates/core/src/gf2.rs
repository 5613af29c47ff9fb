//! Bit-packed linear algebra over GF(2): words, codes, duals and the
//! component generator matrices used to assemble the length-24 codes.
//!
//! A [`BitWord`] stores coordinate `i` (1-based) in bit `i - 1` of a `u64`,
//! so the leftmost character of the textual form is coordinate 1.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported code length.
pub const MAX_LEN: usize = 64;

/// Largest dimension (or `genus * dimension` for tuples) that may be
/// enumerated exhaustively.
pub const ENUMERATION_LIMIT: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("word length {0} is outside 0..={MAX_LEN}")]
    LengthOutOfRange(usize),
    #[error("coordinate {index} is outside 1..={len}")]
    CoordinateOutOfRange { index: usize, len: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("bits set beyond length {len}")]
    StrayBits { len: usize },
    #[error("invalid character {0:?} in binary word")]
    InvalidCharacter(char),
    #[error("refusing to enumerate 2^{requested} words (limit 2^{limit})")]
    BudgetExceeded { requested: usize, limit: usize },
    #[error("d_n requires an even length n >= 4, got {0}")]
    InvalidDLength(usize),
    #[error("pattern counts need at least one word")]
    NoWords,
}

/// One vector of `F_2^n`, `n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    bits: u64,
    len: u8,
}

#[inline]
pub(crate) fn len_mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitWord {
    pub fn zero(len: usize) -> Result<Self, Gf2Error> {
        Self::from_bits(0, len)
    }

    pub fn from_bits(bits: u64, len: usize) -> Result<Self, Gf2Error> {
        if len > MAX_LEN {
            return Err(Gf2Error::LengthOutOfRange(len));
        }
        if bits & !len_mask(len) != 0 {
            return Err(Gf2Error::StrayBits { len });
        }
        Ok(Self {
            bits,
            len: len as u8,
        })
    }

    /// Word with ones exactly at the given 1-based coordinates.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self, Gf2Error> {
        let mut w = Self::zero(len)?;
        for &i in support {
            w.set(i, true)?;
        }
        Ok(w)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Value of 1-based coordinate `index`.
    pub fn get(&self, index: usize) -> Result<bool, Gf2Error> {
        self.check_index(index)?;
        Ok(self.bits >> (index - 1) & 1 == 1)
    }

    pub fn set(&mut self, index: usize, value: bool) -> Result<(), Gf2Error> {
        self.check_index(index)?;
        let bit = 1u64 << (index - 1);
        if value {
            self.bits |= bit;
        } else {
            self.bits &= !bit;
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<(), Gf2Error> {
        if index == 0 || index > self.len() {
            Err(Gf2Error::CoordinateOutOfRange {
                index,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Number of nonzero coordinates.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn xor(&self, other: &Self) -> Result<Self, Gf2Error> {
        self.same_len(other)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            len: self.len,
        })
    }

    /// Standard inner product `u_1 v_1 + ... + u_n v_n` over GF(2).
    pub fn dot(&self, other: &Self) -> Result<bool, Gf2Error> {
        self.same_len(other)?;
        Ok((self.bits & other.bits).count_ones() & 1 == 1)
    }

    /// `self` on coordinates `1..=n`, `other` on the following `n'`.
    pub fn concat(&self, other: &Self) -> Result<Self, Gf2Error> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Gf2Error::LengthOutOfRange(len));
        }
        let shifted = if self.len() == 64 { 0 } else { other.bits << self.len() };
        Ok(Self {
            bits: self.bits | shifted,
            len: len as u8,
        })
    }

    fn same_len(&self, other: &Self) -> Result<(), Gf2Error> {
        if self.len != other.len {
            Err(Gf2Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let len = s.chars().count();
        if len > MAX_LEN {
            return Err(Gf2Error::LengthOutOfRange(len));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => return Err(Gf2Error::InvalidCharacter(other)),
            }
        }
        Self::from_bits(bits, len)
    }
}

fn common_len(rows: &[BitWord]) -> Result<Option<usize>, Gf2Error> {
    let Some(first) = rows.first() else {
        return Ok(None);
    };
    for r in rows {
        if r.len() != first.len() {
            return Err(Gf2Error::LengthMismatch {
                expected: first.len(),
                found: r.len(),
            });
        }
    }
    Ok(Some(first.len()))
}

/// Reduced row-echelon form over GF(2), pivots taken from coordinate 1
/// upwards. Zero rows are dropped; returns the basis and its size.
pub fn rref(rows: &[BitWord]) -> Result<(Vec<BitWord>, usize), Gf2Error> {
    let Some(len) = common_len(rows)? else {
        return Ok((Vec::new(), 0));
    };
    let (basis, _) = rref_bits(rows.iter().map(|r| r.bits).collect(), len);
    let basis: Vec<BitWord> = basis
        .into_iter()
        .map(|bits| BitWord {
            bits,
            len: len as u8,
        })
        .collect();
    let rank = basis.len();
    Ok((basis, rank))
}

/// Row reduction on raw bit rows; returns the reduced rows and their pivot
/// bit positions (0-based), both sorted by pivot.
pub(crate) fn rref_bits(mut rows: Vec<u64>, len: usize) -> (Vec<u64>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..len {
        let bit = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// A binary linear code, stored as the RREF of its generator matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u64>,
    pivots: Vec<usize>,
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[{}, {}]", self.n, self.dimension())?;
        f.debug_list().entries(self.generators()).finish()
    }
}

impl BinaryCode {
    /// Code spanned by `rows`, each of length `n`. Dependent rows are fine.
    pub fn from_rows(n: usize, rows: &[BitWord]) -> Result<Self, Gf2Error> {
        if n > MAX_LEN {
            return Err(Gf2Error::LengthOutOfRange(n));
        }
        for r in rows {
            if r.len() != n {
                return Err(Gf2Error::LengthMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        Ok(Self::from_bit_rows(n, rows.iter().map(|r| r.bits).collect()))
    }

    pub(crate) fn from_bit_rows(n: usize, rows: Vec<u64>) -> Self {
        let (rows, pivots) = rref_bits(rows, n);
        Self { n, rows, pivots }
    }

    /// Parses one row per line from `{0,1}` strings.
    pub fn parse_rows<'a>(n: usize, lines: impl IntoIterator<Item = &'a str>) -> Result<Self, Gf2Error> {
        let rows = lines
            .into_iter()
            .map(BitWord::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(n, &rows)
    }

    /// The zero code `{0}` of length `n`.
    pub fn zero(n: usize) -> Result<Self, Gf2Error> {
        Self::from_rows(n, &[])
    }

    /// All of `F_2^n`.
    pub fn full(n: usize) -> Result<Self, Gf2Error> {
        if n > MAX_LEN {
            return Err(Gf2Error::LengthOutOfRange(n));
        }
        Ok(Self::from_bit_rows(n, (0..n).map(|i| 1u64 << i).collect()))
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> Vec<BitWord> {
        self.rows
            .iter()
            .map(|&bits| BitWord {
                bits,
                len: self.n as u8,
            })
            .collect()
    }

    pub(crate) fn raw_rows(&self) -> &[u64] {
        &self.rows
    }

    /// Reduces `bits` modulo the code: the unique coset element that is
    /// zero on every pivot coordinate.
    pub(crate) fn reduce(&self, mut bits: u64) -> u64 {
        for (&row, &p) in self.rows.iter().zip(&self.pivots) {
            if bits >> p & 1 == 1 {
                bits ^= row;
            }
        }
        bits
    }

    pub fn contains(&self, word: &BitWord) -> Result<bool, Gf2Error> {
        if word.len() != self.n {
            return Err(Gf2Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        Ok(self.reduce(word.bits) == 0)
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_code(&self, other: &BinaryCode) -> bool {
        self.n == other.n && other.rows.iter().all(|&r| self.reduce(r) == 0)
    }

    /// Row spaces are equal iff the reduced echelon forms are equal.
    pub fn same_row_space(&self, other: &BinaryCode) -> bool {
        self == other
    }

    /// `C^perp`: one generator `e_j + sum_{i: row_i[j]=1} e_{pivot_i}` per
    /// non-pivot coordinate `j`.
    pub fn dual(&self) -> BinaryCode {
        let mut out = Vec::with_capacity(self.n - self.dimension());
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for j in (0..self.n).filter(|&j| !is_pivot[j]) {
            let mut v = 1u64 << j;
            for (&row, &p) in self.rows.iter().zip(&self.pivots) {
                if row >> j & 1 == 1 {
                    v |= 1u64 << p;
                }
            }
            out.push(v);
        }
        Self::from_bit_rows(self.n, out)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &a)| self.rows[i..].iter().all(|&b| (a & b).count_ones() % 2 == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.n && self.is_self_orthogonal()
    }

    /// Every codeword has weight divisible by 4. Equivalent to: generators
    /// have weight 0 mod 4 and pairwise even overlaps, since
    /// `wt(u+v) = wt(u) + wt(v) - 2|u & v|`.
    pub fn is_doubly_even(&self) -> bool {
        self.rows.iter().all(|r| r.count_ones() % 4 == 0) && self.is_self_orthogonal()
    }

    /// Codewords in Gray-code order over the message bits: word `t` differs
    /// from word `t - 1` by generator `trailing_zeros(t)`. Starts at zero.
    pub fn codewords(&self) -> Result<Codewords<'_>, Gf2Error> {
        let k = self.dimension();
        if k > ENUMERATION_LIMIT {
            return Err(Gf2Error::BudgetExceeded {
                requested: k,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(Codewords {
            code: self,
            next: 0,
            total: 1u64 << k,
            current: 0,
        })
    }

    /// Raw bit patterns of all codewords, in [`Self::codewords`] order.
    pub fn codeword_bits(&self) -> Result<Vec<u64>, Gf2Error> {
        Ok(self.codewords()?.map(|w| w.bits).collect())
    }

    /// `C (+) C'`: `C` on the first `n` coordinates, `C'` on the rest.
    pub fn direct_sum(&self, other: &BinaryCode) -> Result<BinaryCode, Gf2Error> {
        let n = self.n + other.n;
        if n > MAX_LEN {
            return Err(Gf2Error::LengthOutOfRange(n));
        }
        let rows = self
            .rows
            .iter()
            .copied()
            .chain(other.rows.iter().map(|&r| r << self.n))
            .collect();
        Ok(Self::from_bit_rows(n, rows))
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>, Gf2Error> {
        let mut dist = vec![0u64; self.n + 1];
        for w in self.codewords()? {
            dist[w.weight() as usize] += 1;
        }
        Ok(dist)
    }
}

/// Iterator returned by [`BinaryCode::codewords`].
pub struct Codewords<'a> {
    code: &'a BinaryCode,
    next: u64,
    total: u64,
    current: u64,
}

impl Iterator for Codewords<'_> {
    type Item = BitWord;

    fn next(&mut self) -> Option<BitWord> {
        if self.next >= self.total {
            return None;
        }
        if self.next > 0 {
            self.current ^= self.code.rows[self.next.trailing_zeros() as usize];
        }
        self.next += 1;
        Some(BitWord {
            bits: self.current,
            len: self.code.n as u8,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords<'_> {}

/// `d_n`: rows of four ones at coordinates `2i-1 ..= 2i+2`, `i = 1..n/2-1`.
pub fn build_d(n: usize) -> Result<BinaryCode, Gf2Error> {
    if n < 4 || !n.is_multiple_of(2) || n > MAX_LEN {
        return Err(Gf2Error::InvalidDLength(n));
    }
    let rows = (0..n / 2 - 1).map(|i| 0b1111u64 << (2 * i)).collect();
    Ok(BinaryCode::from_bit_rows(n, rows))
}

fn from_literal(n: usize, rows: &[&str]) -> BinaryCode {
    BinaryCode::parse_rows(n, rows.iter().copied()).expect("static generator matrix")
}

pub fn build_e7() -> BinaryCode {
    from_literal(7, &["0111100", "0110011", "1101010"])
}

pub fn build_e8() -> BinaryCode {
    from_literal(8, &["11110000", "00111100", "00001111", "10101010"])
}

/// Extended binary Golay code `[I | B]`, where `B` borders the circulant
/// of the quadratic-residue pattern mod 11 with a row and column of ones.
pub fn build_golay() -> BinaryCode {
    const QR_PATTERN: [u8; 11] = [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0];
    let mut rows = Vec::with_capacity(12);
    for i in 0..12 {
        let mut bits = 1u64 << i;
        for j in 0..12 {
            let entry = match (i, j) {
                (11, 11) => 0,
                (11, _) | (_, 11) => 1,
                _ => QR_PATTERN[(j + 11 - i) % 11],
            };
            if entry == 1 {
                bits |= 1u64 << (12 + j);
            }
        }
        rows.push(bits);
    }
    BinaryCode::from_bit_rows(24, rows)
}

/// `n_a(u_1, ..., u_g)` for every `a`, indexed by `v(a) = sum a_k 2^(k-1)`
/// (the first word is the least significant bit).
pub fn pattern_counts(words: &[BitWord]) -> Result<Vec<u32>, Gf2Error> {
    let len = common_len(words)?.ok_or(Gf2Error::NoWords)?;
    let bits: Vec<u64> = words.iter().map(|w| w.bits).collect();
    let mut masks = vec![0u64; 1 << bits.len()];
    column_masks(&bits, len_mask(len), &mut masks);
    Ok(masks.iter().map(|m| m.count_ones()).collect())
}

/// Fills `masks[v(a)]` with the set of coordinates whose column equals `a`.
#[inline]
pub(crate) fn column_masks(words: &[u64], full: u64, masks: &mut [u64]) {
    masks[0] = full;
    let mut filled = 1;
    for &u in words {
        for a in 0..filled {
            let m = masks[a];
            masks[a] = m & !u;
            masks[a + filled] = m & u;
        }
        filled *= 2;
    }
}
