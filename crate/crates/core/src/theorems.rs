//! Executable checks of the identities, congruences and inequalities for
//! the length-24 Type II codes, each producing a [`VerificationReport`].

use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::codes24::{compute_h, decomposition, table_h, CodeDatabase, CodesError};
use crate::enumerator::{
    cached_weight_enumerator, coefficients_c, delta, genus1_predicted, weight_enumerator_decomposed,
    EnumError, GenusTwoBasis,
};
use crate::poly::{int, rat, MultiPoly, Rational};

/// The `m` table for `1 <= i < j <= 8`, row `i`, column `j`.
pub const TABLE_M: [[u32; 8]; 8] = [
    [0, 1, 2, 3, 6, 4, 5, 2],
    [0, 0, 1, 2, 7, 3, 4, 3],
    [0, 0, 0, 1, 8, 2, 3, 4],
    [0, 0, 0, 0, 9, 1, 2, 5],
    [0, 0, 0, 0, 0, 10, 11, 4],
    [0, 0, 0, 0, 0, 0, 1, 6],
    [0, 0, 0, 0, 0, 0, 0, 7],
    [0, 0, 0, 0, 0, 0, 0, 0],
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("table entry ({i}, {j}) is {table}, but |4h_i - 4h_j| = {computed}")]
    TableMismatch {
        i: usize,
        j: usize,
        table: u32,
        computed: String,
    },
    #[error(transparent)]
    Codes(#[from] CodesError),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Both sides of a checked equality, in canonical text form.
    Equality { lhs: String, rhs: String },
    /// First coefficient (largest monomial first) where two sides differ.
    Mismatch {
        exponents: Vec<u32>,
        expected: String,
        actual: String,
    },
    Detail { text: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn new(claim: String, ok: bool, witness: Witness, start: Instant) -> Self {
        Self {
            claim,
            status: if ok { Status::Pass } else { Status::Fail },
            witness: Some(witness),
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// Coefficient-by-coefficient comparison of `expected` and `actual`.
    fn equality(claim: String, expected: &MultiPoly, actual: &MultiPoly, start: Instant) -> Self {
        match expected.first_difference(actual) {
            None => Self::new(
                claim,
                true,
                Witness::Equality {
                    lhs: actual.to_text(),
                    rhs: expected.to_text(),
                },
                start,
            ),
            Some((e, want, got)) => Self::new(
                claim,
                false,
                Witness::Mismatch {
                    exponents: e.as_slice().to_vec(),
                    expected: want.to_string(),
                    actual: got.to_string(),
                },
                start,
            ),
        }
    }
}

/// Groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Thm1,
    Thm2,
    Prop1,
    Congruences,
    Lagrange,
    Genus3,
}

impl std::str::FromStr for Suite {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "thm1" => Suite::Thm1,
            "thm2" => Suite::Thm2,
            "prop1" => Suite::Prop1,
            "congruences" => Suite::Congruences,
            "lagrange" => Suite::Lagrange,
            "genus3" => Suite::Genus3,
            other => return Err(TheoremError::Domain(format!("unknown selector {other:?}"))),
        })
    }
}

/// Holds the database and the enumerator table the checks share.
pub struct Verifier {
    db: CodeDatabase,
    genus1: Vec<MultiPoly>,
    genus2: OnceLock<Vec<MultiPoly>>,
    basis: OnceLock<GenusTwoBasis>,
}

fn pair(i: usize, j: usize) -> String {
    format!("i={i},j={j}")
}

impl Verifier {
    pub fn new(db: CodeDatabase) -> Result<Self, TheoremError> {
        let genus1 = db
            .records()
            .iter()
            .map(|r| cached_weight_enumerator(&r.code, 1).map(|p| p.as_ref().clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            db,
            genus1,
            genus2: OnceLock::new(),
            basis: OnceLock::new(),
        })
    }

    pub fn database(&self) -> &CodeDatabase {
        &self.db
    }

    fn check_index(i: usize) -> Result<usize, TheoremError> {
        if (1..=9).contains(&i) {
            Ok(i - 1)
        } else {
            Err(TheoremError::Domain(format!("code index {i} is outside 1..=9")))
        }
    }

    pub fn h(&self, i: usize) -> Result<&Rational, TheoremError> {
        Ok(&self.db.records()[Self::check_index(i)?].h)
    }

    /// `W_{C_i}^(1)`.
    pub fn w1(&self, i: usize) -> Result<&MultiPoly, TheoremError> {
        Ok(&self.genus1[Self::check_index(i)?])
    }

    fn genus2_table(&self) -> Result<&Vec<MultiPoly>, TheoremError> {
        if let Some(t) = self.genus2.get() {
            return Ok(t);
        }
        let table = self
            .db
            .records()
            .iter()
            .map(|r| cached_weight_enumerator(&r.code, 2).map(|p| p.as_ref().clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.genus2.get_or_init(|| table))
    }

    /// `W_{C_i}^(2)`, by exhaustive enumeration of pairs (computed once).
    pub fn w2(&self, i: usize) -> Result<&MultiPoly, TheoremError> {
        let idx = Self::check_index(i)?;
        Ok(&self.genus2_table()?[idx])
    }

    pub fn basis(&self) -> Result<&GenusTwoBasis, TheoremError> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = GenusTwoBasis::new(self.w2(9)?.clone(), self.w2(7)?.clone(), self.w2(5)?.clone())?;
        Ok(self.basis.get_or_init(|| b))
    }

    /// `compute_h` on record `i` against the classification table.
    pub fn verify_table1(&self, i: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let idx = Self::check_index(i)?;
        let computed = compute_h(&self.db.records()[idx].code)?;
        let table = table_h(i).expect("index checked");
        Ok(VerificationReport::new(
            format!("table1/i={i}"),
            computed == table,
            Witness::Detail {
                text: format!("h computed {computed}, table {table}"),
            },
            start,
        ))
    }

    /// `W_i^(1) = W_9^(1) + 6(4h_i - 7) Delta`.
    pub fn verify_thm1_identity(&self, i: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let predicted = genus1_predicted(self.w1(9)?, self.h(i)?);
        Ok(VerificationReport::equality(
            format!("thm1.1/i={i}"),
            &predicted,
            self.w1(i)?,
            start,
        ))
    }

    fn check_pair(i: usize, j: usize) -> Result<(), TheoremError> {
        if i == j || !(1..=8).contains(&i) || !(1..=8).contains(&j) {
            return Err(TheoremError::Domain(format!(
                "({i}, {j}) must be distinct indices in 1..=8"
            )));
        }
        Ok(())
    }

    /// `|4h_i - 4h_j|`, checked against [`TABLE_M`].
    pub fn table_m(&self, i: usize, j: usize) -> Result<u32, TheoremError> {
        Self::check_pair(i, j)?;
        let diff = ((self.h(i)? - self.h(j)?) * int(4)).abs();
        let (lo, hi) = (i.min(j), i.max(j));
        let table = TABLE_M[lo - 1][hi - 1];
        if diff != int(table as i64) {
            return Err(TheoremError::TableMismatch {
                i: lo,
                j: hi,
                table,
                computed: diff.to_string(),
            });
        }
        Ok(table)
    }

    fn congruence(
        &self,
        claim: String,
        p: &MultiPoly,
        q: &MultiPoly,
        m: u32,
        unit_check: bool,
        start: Instant,
    ) -> Result<VerificationReport, TheoremError> {
        let modulus = 6 * m as u64;
        let congruent = p.congruent_mod(q, modulus).map_err(EnumError::from)?;
        let quotient = p.try_sub(q).map_err(EnumError::from)?.scale(&rat(1, modulus as i64));
        let integral = quotient.is_integral();
        let unit = if unit_check && integral {
            Some(quotient.has_unit_coefficient().map_err(EnumError::from)?)
        } else {
            None
        };
        let ok = congruent && integral && unit.unwrap_or(true);
        let mut text = format!("mod {modulus}: congruent={congruent}, quotient integral={integral}");
        if let Some(u) = unit {
            text.push_str(&format!(", quotient has a +-1 coefficient={u}"));
        }
        Ok(VerificationReport::new(claim, ok, Witness::Detail { text }, start))
    }

    /// `W_i^(1) = W_j^(1) mod 6m`, with `(W_i - W_j) / 6m` integral and
    /// carrying a coefficient `+-1`.
    pub fn verify_thm1_congruence(&self, i: usize, j: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let m = self.table_m(i, j)?;
        self.congruence(format!("thm1.2/{}", pair(i, j)), self.w1(i)?, self.w1(j)?, m, true, start)
    }

    /// Coefficients `((h_i - h_b)/(h_a - h_b), (h_i - h_a)/(h_b - h_a))`.
    pub fn thm1_lagrange_coefficients(
        &self,
        i: usize,
        a: usize,
        b: usize,
    ) -> Result<(Rational, Rational), TheoremError> {
        let (hi, ha, hb) = (self.h(i)?, self.h(a)?, self.h(b)?);
        if ha >= hb {
            return Err(TheoremError::Domain(format!(
                "need h_{a} < h_{b}, have {ha} and {hb}"
            )));
        }
        Ok(((hi - hb) / (ha - hb), (hi - ha) / (hb - ha)))
    }

    /// Two-point interpolation of `W_i^(1)` from `W_a^(1)` and `W_b^(1)`.
    pub fn verify_thm1_lagrange(&self, i: usize, a: usize, b: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let (ca, cb) = self.thm1_lagrange_coefficients(i, a, b)?;
        let predicted = &self.w1(a)?.scale(&ca) + &self.w1(b)?.scale(&cb);
        Ok(VerificationReport::equality(
            format!("thm1.3/i={i},a={a},b={b}"),
            &predicted,
            self.w1(i)?,
            start,
        ))
    }

    /// `phi(Y) = 0`, `phi(X) = Delta`, and `phi` has a one-dimensional
    /// kernel on the span of the three base enumerators.
    pub fn verify_prop_phi(&self) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let basis = self.basis()?;
        let d = delta();
        let y_kernel = basis.y.phi().is_zero();
        let x_delta = basis.x.phi() == d;
        let shifted = (&basis.x + &basis.y.scale(&int(5))).phi() == d;
        let rank = coefficient_rank(&[basis.w9.phi(), basis.w7.phi()]);
        let w5_in_span = basis.w5.phi()
            == &basis.w9.phi().scale(&rat(11, 7)) - &basis.w7.phi().scale(&rat(4, 7));
        let ok = y_kernel && x_delta && shifted && rank == 2 && w5_in_span;
        Ok(VerificationReport::new(
            "prop1".into(),
            ok,
            Witness::Detail {
                text: format!(
                    "phi(Y)=0: {y_kernel}; phi(X)=Delta: {x_delta}; phi(X+5Y)=Delta: {shifted}; \
                     rank(phi W9, phi W7)={rank}; phi W5 = 11/7 phi W9 - 4/7 phi W7: {w5_in_span}"
                ),
            },
            start,
        ))
    }

    /// `X_24`, `Y_24` integral with `phi(X_24) = Delta`, `phi(Y_24) = 0`.
    pub fn verify_thm2_phi(&self) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let basis = self.basis()?;
        let integral = basis.x24.is_integral() && basis.y24.is_integral();
        let px = basis.x24.phi() == delta();
        let py = basis.y24.phi().is_zero();
        Ok(VerificationReport::new(
            "thm2.1".into(),
            integral && px && py,
            Witness::Detail {
                text: format!(
                    "X24, Y24 integral: {integral}; phi(X24)=Delta: {px}; phi(Y24)=0: {py}; \
                     X24 has {} terms, Y24 has {}",
                    basis.x24.len(),
                    basis.y24.len()
                ),
            },
            start,
        ))
    }

    /// `W_i^(2) = W_9^(2) + 6(4h_i - 7) X_24 + 24(2h_i + 3)(4h_i - 7) Y_24`.
    pub fn verify_thm2_identity(&self, i: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let predicted = self.basis()?.predicted(self.h(i)?);
        Ok(VerificationReport::equality(
            format!("thm2.2/i={i}"),
            &predicted,
            self.w2(i)?,
            start,
        ))
    }

    /// Symbolic check, with no enumeration: writing `X_24`, `Y_24` in the
    /// coordinates of `(W_9, W_7, W_5)`, the genus-2 formula at `h = 7/4, 0,
    /// 11/4` returns the unit vectors.
    pub fn verify_thm2_unfolding(&self) -> VerificationReport {
        let start = Instant::now();
        let x = [rat(1, 42), rat(-1, 42), int(0)];
        let y = [rat(-11, 7), rat(4, 7), int(1)];
        let x24: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a - b / int(44)).collect();
        let y24: Vec<Rational> = y.iter().map(|b| b / int(528)).collect();
        let mut ok = true;
        let mut text = Vec::new();
        for (h, unit) in [(rat(7, 4), 0), (int(0), 1), (rat(11, 4), 2)] {
            let (c0, c1) = coefficients_c(&h);
            let coords: Vec<Rational> = (0..3)
                .map(|k| int(if k == 0 { 1 } else { 0 }) + &c0 * &x24[k] + &c1 * &y24[k])
                .collect();
            let expected: Vec<Rational> = (0..3).map(|k| int((k == unit) as i64)).collect();
            ok &= coords == expected;
            text.push(format!(
                "h={h}: ({})",
                coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
            ));
        }
        VerificationReport::new(
            "thm2.2/unfolding".into(),
            ok,
            Witness::Detail { text: text.join("; ") },
            start,
        )
    }

    /// `phi(W_i^(2)) = W_i^(1)`.
    pub fn verify_phi_consistency(&self, i: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let lowered = self.w2(i)?.phi();
        Ok(VerificationReport::equality(
            format!("phi/i={i}"),
            self.w1(i)?,
            &lowered,
            start,
        ))
    }

    /// `W_i^(2) = W_j^(2) mod 6m`.
    pub fn verify_cor_congruence_g2(&self, i: usize, j: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let m = self.table_m(i, j)?;
        self.congruence(format!("cor1/{}", pair(i, j)), self.w2(i)?, self.w2(j)?, m, false, start)
    }

    /// `W_8 = W_9` in genus 1 and 2; outside the theorem's index range, so
    /// reported under an `info/` claim.
    pub fn verify_info_pair_8_9(&self) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let g1 = self.w1(8)? == self.w1(9)?;
        let g2 = self.w2(8)? == self.w2(9)?;
        Ok(VerificationReport::new(
            "info/cor1/i=8,j=9".into(),
            g1 && g2,
            Witness::Detail {
                text: format!("non-normative: W8 = W9 in genus 1: {g1}, genus 2: {g2}"),
            },
            start,
        ))
    }

    /// Three-point interpolation of `W_i^(2)` in `h`, plus the determinant
    /// of the coefficient system.
    pub fn verify_cor_lagrange_g2(
        &self,
        i: usize,
        a: usize,
        b: usize,
        c: usize,
    ) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let nodes = self.ordered_nodes(a, b, c)?;
        let hi = self.h(i)?;
        let mut predicted = MultiPoly::zero(2);
        for (eps, idx) in [a, b, c].into_iter().enumerate() {
            let coef = lagrange_ell(eps, &nodes, hi)?;
            predicted = &predicted + &self.w2(idx)?.scale(&coef);
        }
        Ok(VerificationReport::equality(
            format!("cor2/i={i},a={a},b={b},c={c}"),
            &predicted,
            self.w2(i)?,
            start,
        ))
    }

    fn ordered_nodes(&self, a: usize, b: usize, c: usize) -> Result<[Rational; 3], TheoremError> {
        let nodes = [self.h(a)?.clone(), self.h(b)?.clone(), self.h(c)?.clone()];
        if !(nodes[0] < nodes[1] && nodes[1] < nodes[2]) {
            return Err(TheoremError::Domain(format!(
                "need h_{a} < h_{b} < h_{c}, have {}, {}, {}",
                nodes[0], nodes[1], nodes[2]
            )));
        }
        Ok(nodes)
    }

    /// `det A` from its entries against `-4608 (h_a - h_b)(h_a - h_c)(h_b - h_c)`.
    pub fn verify_det(&self, a: usize, b: usize, c: usize) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let nodes = self.ordered_nodes(a, b, c)?;
        let direct = det_a(&nodes);
        let formula = det_formula(&nodes);
        Ok(VerificationReport::new(
            format!("cor2.det/a={a},b={b},c={c}"),
            direct == formula && !direct.is_zero(),
            Witness::Detail {
                text: format!("det A = {direct}, product formula = {formula}"),
            },
            start,
        ))
    }

    /// `h_8 = h_9` and `W_8^(2) = W_9^(2)`, yet `W_8^(3) != W_9^(3)`, with
    /// genus 3 computed through the direct-sum decompositions.
    pub fn verify_genus3_remark(&self) -> Result<VerificationReport, TheoremError> {
        let start = Instant::now();
        let same_h = self.h(8)? == self.h(9)?;
        let same_g2 = self.w2(8)? == self.w2(9)?;
        let parts8 = decomposition(8)?.expect("record 8 decomposes");
        let parts9 = decomposition(9)?.expect("record 9 decomposes");
        // the decompositions reproduce the records' own enumerators
        let mut faithful = true;
        for (idx, parts) in [(8, &parts8), (9, &parts9)] {
            faithful &= &weight_enumerator_decomposed(parts, 1)? == self.w1(idx)?;
            faithful &= &weight_enumerator_decomposed(parts, 2)? == self.w2(idx)?;
        }
        let w8 = weight_enumerator_decomposed(&parts8, 3)?;
        let w9 = weight_enumerator_decomposed(&parts9, 3)?;
        let diff = w8.first_difference(&w9);
        let ok = same_h && same_g2 && faithful && diff.is_some();
        let text = match &diff {
            Some((e, c8, c9)) => format!(
                "h8 = h9: {same_h}; W8(2) = W9(2): {same_g2}; decompositions match records: {faithful}; \
                 W8(3) and W9(3) differ at exponents {:?}: {c8} vs {c9}",
                e.as_slice()
            ),
            None => format!(
                "h8 = h9: {same_h}; W8(2) = W9(2): {same_g2}; decompositions match records: {faithful}; \
                 W8(3) = W9(3)"
            ),
        };
        Ok(VerificationReport::new("genus3".into(), ok, Witness::Detail { text }, start))
    }

    /// Index pairs `(a, b)` with `h_a < h_b`.
    pub fn admissible_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=9 {
            for b in 1..=9 {
                if self.db.records()[a - 1].h < self.db.records()[b - 1].h {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Index triples with `h_a < h_b < h_c`.
    pub fn admissible_triples(&self) -> Vec<(usize, usize, usize)> {
        let h = |i: usize| &self.db.records()[i - 1].h;
        let mut out = Vec::new();
        for a in 1..=9 {
            for b in 1..=9 {
                for c in 1..=9 {
                    if h(a) < h(b) && h(b) < h(c) {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }

    fn congruence_pairs() -> Vec<(usize, usize)> {
        (1..=8)
            .flat_map(|i| (i + 1..=8).map(move |j| (i, j)))
            .collect()
    }

    /// Runs one suite; reports come back in a fixed order.
    pub fn run(&self, suite: Suite) -> Result<Vec<VerificationReport>, TheoremError> {
        let mut out = Vec::new();
        let want = |s: Suite| suite == Suite::All || suite == s;
        if suite == Suite::All {
            for i in 1..=9 {
                out.push(self.verify_table1(i)?);
            }
        }
        if want(Suite::Thm1) {
            for i in 1..=9 {
                out.push(self.verify_thm1_identity(i)?);
            }
        }
        if want(Suite::Thm1) || want(Suite::Congruences) {
            for (i, j) in Self::congruence_pairs() {
                out.push(self.verify_thm1_congruence(i, j)?);
            }
        }
        if want(Suite::Thm1) || want(Suite::Lagrange) {
            for (a, b) in self.admissible_pairs() {
                for i in 1..=9 {
                    out.push(self.verify_thm1_lagrange(i, a, b)?);
                }
            }
        }
        if want(Suite::Prop1) {
            out.push(self.verify_prop_phi()?);
        }
        if want(Suite::Thm2) {
            out.push(self.verify_thm2_phi()?);
            out.push(self.verify_thm2_unfolding());
            for i in 1..=9 {
                out.push(self.verify_thm2_identity(i)?);
            }
            for i in 1..=9 {
                out.push(self.verify_phi_consistency(i)?);
            }
        }
        if want(Suite::Congruences) || want(Suite::Thm2) {
            for (i, j) in Self::congruence_pairs() {
                out.push(self.verify_cor_congruence_g2(i, j)?);
            }
            out.push(self.verify_info_pair_8_9()?);
        }
        if want(Suite::Lagrange) || want(Suite::Thm2) {
            self.genus2_table()?;
            let triples = self.admissible_triples();
            for &(a, b, c) in &triples {
                out.push(self.verify_det(a, b, c)?);
            }
            let jobs: Vec<(usize, usize, usize, usize)> = triples
                .iter()
                .flat_map(|&(a, b, c)| (1..=9).map(move |i| (i, a, b, c)))
                .collect();
            let reports = jobs
                .par_iter()
                .map(|&(i, a, b, c)| self.verify_cor_lagrange_g2(i, a, b, c))
                .collect::<Result<Vec<_>, _>>()?;
            out.extend(reports);
        }
        if want(Suite::Genus3) {
            out.push(self.verify_genus3_remark()?);
        }
        Ok(out)
    }

    /// Every check over its full index range.
    pub fn verify_all(&self) -> Result<Vec<VerificationReport>, TheoremError> {
        self.run(Suite::All)
    }
}

/// `prod_{mu != eps} (x - x_mu) / (x_eps - x_mu)` over three nodes.
pub fn lagrange_ell(eps: usize, nodes: &[Rational; 3], x: &Rational) -> Result<Rational, TheoremError> {
    if eps > 2 {
        return Err(TheoremError::Domain(format!("node index {eps} is outside 0..3")));
    }
    if nodes[0] == nodes[1] || nodes[0] == nodes[2] || nodes[1] == nodes[2] {
        return Err(TheoremError::Domain("interpolation nodes must be distinct".into()));
    }
    let mut acc = int(1);
    for (mu, node) in nodes.iter().enumerate() {
        if mu != eps {
            acc *= (x - node) / (&nodes[eps] - node);
        }
    }
    Ok(acc)
}

/// Determinant of `[[1, 1, 1], [c0(h_a), c0(h_b), c0(h_c)], [c1(h_a), c1(h_b), c1(h_c)]]`
/// by cofactor expansion.
pub fn det_a(nodes: &[Rational; 3]) -> Rational {
    let cols: Vec<(Rational, Rational)> = nodes.iter().map(coefficients_c).collect();
    let (a0, a1) = &cols[0];
    let (b0, b1) = &cols[1];
    let (c0, c1) = &cols[2];
    (b0 * c1 - c0 * b1) - (a0 * c1 - c0 * a1) + (a0 * b1 - b0 * a1)
}

/// `-4608 (h_a - h_b)(h_a - h_c)(h_b - h_c)`.
pub fn det_formula(nodes: &[Rational; 3]) -> Rational {
    let [a, b, c] = nodes;
    int(-4608) * (a - b) * (a - c) * (b - c)
}

/// Rank of a list of polynomials viewed as coefficient vectors.
pub fn coefficient_rank(polys: &[MultiPoly]) -> usize {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut monomials: Vec<Vec<u32>> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| e.as_slice().to_vec()))
        .collect();
    monomials.sort();
    monomials.dedup();
    for p in polys {
        rows.push(
            monomials
                .iter()
                .map(|e| p.coefficient(e).unwrap_or_else(|_| int(0)))
                .collect(),
        );
    }
    rational_rank(rows)
}

fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}
