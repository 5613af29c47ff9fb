//! The nine Type II codes of length 24: component skeletons, the glue
//! search that completes them, `h` values, and the code data file.
//!
//! Data file layout, one block per code, blocks separated by blank lines:
//!
//! ```text
//! code <i> <components> <h>
//! <12 lines of 24 characters from {0,1}, leftmost = coordinate 1>
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::enumerator::{weight_enumerator, EnumError};
use crate::gf2::{build_d, build_e7, build_e8, build_golay, BinaryCode, BitWord, Gf2Error};
use crate::poly::{int, rat, Rational};

/// The embedded code data.
pub const EMBEDDED_DATA: &str = include_str!("../data/codes24.txt");

/// Table of the classification: index, components, `h` as `(num, den)`.
pub const CLASSIFICATION: [(usize, &str, (i64, i64)); 9] = [
    (1, "d12^2", (5, 4)),
    (2, "d10 e7^2", (1, 1)),
    (3, "d8^3", (3, 4)),
    (4, "d6^4", (1, 2)),
    (5, "d24", (11, 4)),
    (6, "d4^6", (1, 4)),
    (7, "g24", (0, 1)),
    (8, "d16 e8", (7, 4)),
    (9, "e8^3", (7, 4)),
];

/// `h_i` from the classification table.
pub fn table_h(index: usize) -> Option<Rational> {
    CLASSIFICATION
        .iter()
        .find(|(i, _, _)| *i == index)
        .map(|&(_, _, (n, d))| rat(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodesError {
    #[error("malformed component string {0:?}")]
    BadComponents(String),
    #[error("components {components:?} have total length {found}, expected {expected}")]
    ComponentLength {
        components: String,
        expected: usize,
        found: usize,
    },
    #[error("glue search needs a doubly even self-orthogonal code")]
    NotDoublyEvenSelfOrthogonal,
    #[error("no Type II overcode exists with these components")]
    NoOvercode,
    #[error("overcode has {found} weight-4 words, expected {expected}")]
    WrongComponents { expected: u64, found: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("code {index}: {violation}")]
    Record { index: usize, violation: String },
    #[error("database must list codes 1..=9 exactly once: {0}")]
    Indices(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

/// One building block of a component skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    D(usize),
    E7,
    E8,
    G24,
}

impl Component {
    pub fn length(&self) -> usize {
        match self {
            Component::D(n) => *n,
            Component::E7 => 7,
            Component::E8 => 8,
            Component::G24 => 24,
        }
    }

    pub fn code(&self) -> Result<BinaryCode, Gf2Error> {
        match self {
            Component::D(n) => build_d(*n),
            Component::E7 => Ok(build_e7()),
            Component::E8 => Ok(build_e8()),
            Component::G24 => Ok(build_golay()),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::D(n) => write!(f, "d{n}"),
            Component::E7 => f.write_str("e7"),
            Component::E8 => f.write_str("e8"),
            Component::G24 => f.write_str("g24"),
        }
    }
}

impl FromStr for Component {
    type Err = CodesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CodesError::BadComponents(s.to_string());
        match s {
            "e7" => Ok(Component::E7),
            "e8" => Ok(Component::E8),
            "g24" => Ok(Component::G24),
            _ => {
                let n: usize = s.strip_prefix('d').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if n < 4 || !n.is_multiple_of(2) {
                    return Err(bad());
                }
                Ok(Component::D(n))
            }
        }
    }
}

/// Parses `"d10 e7^2"` into `[d10, e7, e7]`.
pub fn parse_components(s: &str) -> Result<Vec<Component>, CodesError> {
    let mut out = Vec::new();
    for token in s.split_whitespace() {
        let (base, count) = match token.split_once('^') {
            Some((b, e)) => {
                let e: usize = e
                    .parse()
                    .map_err(|_| CodesError::BadComponents(s.to_string()))?;
                if e == 0 {
                    return Err(CodesError::BadComponents(s.to_string()));
                }
                (b, e)
            }
            None => (token, 1),
        };
        let c: Component = base.parse()?;
        out.extend(std::iter::repeat_n(c, count));
    }
    if out.is_empty() {
        return Err(CodesError::BadComponents(s.to_string()));
    }
    Ok(out)
}

/// Direct sum of the named components, in order, on consecutive blocks of
/// coordinates. Total length must equal `length`.
pub fn component_sum(components: &str, length: usize) -> Result<BinaryCode, CodesError> {
    let parts = parse_components(components)?;
    let total: usize = parts.iter().map(Component::length).sum();
    if total != length {
        return Err(CodesError::ComponentLength {
            components: components.to_string(),
            expected: length,
            found: total,
        });
    }
    let mut code = BinaryCode::zero(0)?;
    for p in parts {
        code = code.direct_sum(&p.code()?)?;
    }
    Ok(code)
}

/// [`component_sum`] for length 24.
pub fn component_subcode(components: &str) -> Result<BinaryCode, CodesError> {
    component_sum(components, 24)
}

/// `coefficient(W_C^(1), x^(n-4) y^4) / n`.
pub fn compute_h(code: &BinaryCode) -> Result<Rational, CodesError> {
    let n = code.length();
    if n < 4 {
        return Err(CodesError::Gf2(Gf2Error::LengthOutOfRange(n)));
    }
    let w = weight_enumerator(code, 1)?;
    let c = w
        .coefficient(&[n as u32 - 4, 4])
        .map_err(EnumError::from)?;
    Ok(c / int(n as i64))
}

fn weight4_count(code: &BinaryCode) -> Result<u64, CodesError> {
    Ok(code.codewords()?.filter(|w| w.weight() == 4).count() as u64)
}

/// Alternating word `1010...10` of length `n`.
pub fn alternating_word(n: usize) -> BitWord {
    let bits = (0..n).step_by(2).fold(0u64, |acc, i| acc | 1 << i);
    BitWord::from_bits(bits, n).expect("length checked by caller")
}

/// Completes a doubly even self-orthogonal code `D` to a self-dual doubly
/// even overcode whose weight-4 words are exactly those of `D`.
///
/// Backtracks over cosets of `D` in `D^perp`, adding one coset at a time.
/// A coset is admissible when its words have weight 0 mod 4 and none has
/// weight 4; a new coset must be orthogonal to the chosen ones and keep
/// every sum admissible. Candidates are scanned in lexicographic order of
/// their canonical representatives, `preferred` first when admissible.
pub fn glue_search(d: &BinaryCode, preferred: Option<BitWord>) -> Result<BinaryCode, CodesError> {
    if !d.is_doubly_even() {
        return Err(CodesError::NotDoublyEvenSelfOrthogonal);
    }
    let n = d.length();
    if !n.is_multiple_of(2) {
        return Err(CodesError::NoOvercode);
    }
    let target = n / 2 - d.dimension();
    if target == 0 {
        return Ok(d.clone());
    }

    // Basis of D^perp / D as canonical representatives.
    let reduced: Vec<u64> = d
        .dual()
        .raw_rows()
        .iter()
        .map(|&r| d.reduce(r))
        .collect();
    let quotient = BinaryCode::from_bit_rows(n, reduced);
    let basis = quotient.raw_rows().to_vec();
    let dim = basis.len();
    if dim != 2 * target {
        return Err(CodesError::NoOvercode);
    }
    let rep = |c: usize| -> u64 {
        (0..dim)
            .filter(|&j| c >> j & 1 == 1)
            .fold(0u64, |acc, j| acc ^ basis[j])
    };
    let cosets = 1usize << dim;
    let reps: Vec<u64> = (0..cosets).map(rep).collect();
    let d_words = d.codeword_bits()?;
    let admissible: Vec<bool> = reps
        .iter()
        .enumerate()
        .map(|(c, &r)| {
            c == 0
                || (r.count_ones() % 4 == 0 && d_words.iter().all(|&w| (w ^ r).count_ones() != 4))
        })
        .collect();

    let mut order: Vec<usize> = (1..cosets).filter(|&c| admissible[c]).collect();
    // lexicographic on the textual form: coordinate 1 most significant
    order.sort_by_key(|&c| reps[c].reverse_bits());
    if let Some(p) = preferred.filter(|p| p.len() == n) {
        let r = d.reduce(p.bits());
        if let Some(pos) = order.iter().position(|&c| reps[c] == r) {
            let c = order.remove(pos);
            order.insert(0, c);
        }
    }

    let mut search = Search {
        order: &order,
        reps: &reps,
        admissible: &admissible,
        chosen: Vec::new(),
        span: vec![0],
        in_span: vec![false; cosets],
    };
    search.in_span[0] = true;
    if !search.extend(0, target) {
        return Err(CodesError::NoOvercode);
    }
    let rows: Vec<u64> = d
        .raw_rows()
        .iter()
        .copied()
        .chain(search.chosen.iter().map(|&c| reps[c]))
        .collect();
    let code = BinaryCode::from_bit_rows(n, rows);
    if !code.is_self_dual() || !code.is_doubly_even() {
        return Err(CodesError::NoOvercode);
    }
    let (expected, found) = (weight4_count(d)?, weight4_count(&code)?);
    if expected != found {
        return Err(CodesError::WrongComponents { expected, found });
    }
    Ok(code)
}

struct Search<'a> {
    order: &'a [usize],
    reps: &'a [u64],
    admissible: &'a [bool],
    chosen: Vec<usize>,
    span: Vec<usize>,
    in_span: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, start: usize, target: usize) -> bool {
        if self.chosen.len() == target {
            return true;
        }
        for pos in start..self.order.len() {
            let c = self.order[pos];
            if self.in_span[c] {
                continue;
            }
            let r = self.reps[c];
            if self
                .chosen
                .iter()
                .any(|&o| (self.reps[o] & r).count_ones() % 2 == 1)
            {
                continue;
            }
            if !self.span.iter().all(|&s| self.admissible[s ^ c]) {
                continue;
            }
            let old = self.span.len();
            for i in 0..old {
                let s = self.span[i] ^ c;
                self.span.push(s);
                self.in_span[s] = true;
            }
            self.chosen.push(c);
            if self.extend(pos + 1, target) {
                return true;
            }
            self.chosen.pop();
            for s in self.span.drain(old..) {
                self.in_span[s] = false;
            }
        }
        false
    }
}

/// `d_16^+`, the [16, 8] Type II code glued onto `d_16`.
pub fn d16_plus() -> Result<BinaryCode, CodesError> {
    glue_search(&build_d(16)?, Some(alternating_word(16)))
}

/// One row of the classification with its generator matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeRecord {
    pub index: usize,
    pub components: String,
    pub h: Rational,
    pub code: BinaryCode,
}

impl CodeRecord {
    /// Checks every record invariant, naming the first one violated.
    pub fn validate(&self) -> Result<(), CodesError> {
        let fail = |v: String| CodesError::Record {
            index: self.index,
            violation: v,
        };
        let c = &self.code;
        if c.length() != 24 || c.dimension() != 12 {
            return Err(fail(format!(
                "expected a [24, 12] code, found [{}, {}]",
                c.length(),
                c.dimension()
            )));
        }
        if !c.is_self_dual() {
            return Err(fail("not self-dual".into()));
        }
        if !c.is_doubly_even() {
            return Err(fail("not doubly even".into()));
        }
        let h = compute_h(c)?;
        if h != self.h {
            return Err(fail(format!("h is {h}, record says {}", self.h)));
        }
        if let Some(expected) = table_h(self.index) {
            if expected != self.h {
                return Err(fail(format!("h {} differs from the table value {expected}", self.h)));
            }
        }
        let sub = component_subcode(&self.components).map_err(|e| fail(e.to_string()))?;
        if !c.contains_code(&sub) {
            return Err(fail(format!("does not contain the {} subcode", self.components)));
        }
        for w in c.codewords()?.filter(|w| w.weight() == 4) {
            if !sub.contains(&w)? {
                return Err(fail(format!("weight-4 word {w} lies outside the components")));
            }
        }
        Ok(())
    }

    /// Component skeleton of this record.
    pub fn component_code(&self) -> Result<BinaryCode, CodesError> {
        component_subcode(&self.components)
    }
}

/// The nine validated records, ordered by index.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeDatabase {
    records: Vec<CodeRecord>,
}

impl CodeDatabase {
    /// Validates each record and the index set.
    pub fn from_records(mut records: Vec<CodeRecord>) -> Result<Self, CodesError> {
        records.sort_by_key(|r| r.index);
        let indices: Vec<usize> = records.iter().map(|r| r.index).collect();
        let unique: BTreeSet<usize> = indices.iter().copied().collect();
        if indices.len() != 9 || unique.len() != 9 || unique != (1..=9).collect() {
            return Err(CodesError::Indices(format!("found {indices:?}")));
        }
        for r in &records {
            r.validate()?;
        }
        Ok(Self { records })
    }

    pub fn parse(text: &str) -> Result<Self, CodesError> {
        let mut records = Vec::new();
        let mut lines = text.lines().enumerate().peekable();
        while let Some((ln, line)) = lines.next() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let perr = |m: String| CodesError::Parse {
                line: ln + 1,
                message: m,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() < 4 || tokens[0] != "code" {
                return Err(perr(format!("expected `code <i> <components> <h>`, got {line:?}")));
            }
            let index: usize = tokens[1]
                .parse()
                .map_err(|_| perr(format!("bad index {:?}", tokens[1])))?;
            let h: Rational = tokens[tokens.len() - 1]
                .parse()
                .map_err(|_| perr(format!("bad fraction {:?}", tokens[tokens.len() - 1])))?;
            let components = tokens[2..tokens.len() - 1].join(" ");
            parse_components(&components).map_err(|e| perr(e.to_string()))?;
            let mut rows = Vec::with_capacity(12);
            for _ in 0..12 {
                let Some((rl, row)) = lines.next() else {
                    return Err(perr(format!("code {index}: fewer than 12 rows")));
                };
                let row = row.trim();
                if row.len() != 24 {
                    return Err(CodesError::Parse {
                        line: rl + 1,
                        message: format!("row must have 24 characters, found {}", row.len()),
                    });
                }
                rows.push(row.parse::<BitWord>().map_err(|e| CodesError::Parse {
                    line: rl + 1,
                    message: e.to_string(),
                })?);
            }
            if let Some((rl, extra)) = lines.peek() {
                if !extra.trim().is_empty() {
                    return Err(CodesError::Parse {
                        line: rl + 1,
                        message: "expected a blank line after 12 rows".into(),
                    });
                }
            }
            let code = BinaryCode::from_rows(24, &rows)?;
            records.push(CodeRecord {
                index,
                components,
                h,
                code,
            });
        }
        Self::from_records(records)
    }

    pub fn embedded() -> Result<Self, CodesError> {
        Self::parse(EMBEDDED_DATA)
    }

    pub fn load(path: &Path) -> Result<Self, CodesError> {
        let text = std::fs::read_to_string(path).map_err(|e| CodesError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Rebuilds every record from its components by [`glue_search`].
    pub fn reconstruct() -> Result<Self, CodesError> {
        let mut records = Vec::new();
        for &(index, components, (num, den)) in &CLASSIFICATION {
            let skeleton = component_subcode(components)?;
            let code = glue_search(&skeleton, Some(alternating_word(24)))?;
            records.push(CodeRecord {
                index,
                components: components.to_string(),
                h: rat(num, den),
                code,
            });
        }
        Self::from_records(records)
    }

    pub fn records(&self) -> &[CodeRecord] {
        &self.records
    }

    /// Record `index` (1-based).
    pub fn get(&self, index: usize) -> Option<&CodeRecord> {
        self.records.get(index.checked_sub(1)?)
    }

    pub fn h(&self, index: usize) -> Option<&Rational> {
        self.get(index).map(|r| &r.h)
    }

    /// Serializes in the data-file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.records.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&format!("code {} {} {}\n", r.index, r.components, r.h));
            for g in r.code.generators() {
                out.push_str(&g.to_string());
                out.push('\n');
            }
        }
        out
    }
}

/// Direct-sum decomposition used for genus 3: `C_8 = d16^+ (+) e8`,
/// `C_9 = e8 (+) e8 (+) e8`.
pub fn decomposition(index: usize) -> Result<Option<Vec<BinaryCode>>, CodesError> {
    Ok(match index {
        8 => Some(vec![d16_plus()?, build_e8()]),
        9 => Some(vec![build_e8(), build_e8(), build_e8()]),
        _ => None,
    })
}
