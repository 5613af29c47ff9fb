#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use typeii24::enumerator::{weight_enumerator, weight_enumerator_decomposed};
use typeii24::gf2::{pattern_counts, rref, BinaryCode, BitWord};
use typeii24::poly::{int, rat, MultiPoly, Rational};

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

pub fn arb_poly(genus: usize) -> impl Strategy<Value = MultiPoly> {
    let vars = 1usize << genus;
    prop::collection::vec((prop::collection::vec(0u32..4, vars), arb_rational()), 0..6)
        .prop_map(move |terms| MultiPoly::from_terms(genus, terms).unwrap())
}

pub fn arb_rows(max_len: usize) -> impl Strategy<Value = (usize, Vec<BitWord>)> {
    (1usize..=max_len).prop_flat_map(|n| {
        let mask = (1u64 << n) - 1;
        prop::collection::vec(any::<u64>().prop_map(move |b| b & mask), 0..=n).prop_map(move |bits| {
            let rows = bits
                .into_iter()
                .map(|b| BitWord::from_bits(b, n).unwrap())
                .collect();
            (n, rows)
        })
    })
}

pub fn arb_code(max_len: usize) -> impl Strategy<Value = BinaryCode> {
    arb_rows(max_len).prop_map(|(n, rows)| BinaryCode::from_rows(n, &rows).unwrap())
}

fn check(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn ring_axioms(p: &MultiPoly, q: &MultiPoly, r: &MultiPoly) -> Result<(), TestCaseError> {
    check(&(p + q) + r == p + &(q + r), "additive associativity")?;
    check(p + q == q + p, "additive commutativity")?;
    check(&(p * q) * r == p * &(q * r), "multiplicative associativity")?;
    check(p * q == q * p, "multiplicative commutativity")?;
    check(p * &(q + r) == &(p * q) + &(p * r), "distributivity")?;
    check((p + &p.negate()).is_zero(), "additive inverse")?;
    check(p * &MultiPoly::one(p.genus()) == *p, "multiplicative identity")
}

pub fn phi_homomorphism(p: &MultiPoly, q: &MultiPoly) -> Result<(), TestCaseError> {
    check((p + q).phi() == &p.phi() + &q.phi(), "phi additive")?;
    check((p * q).phi() == &p.phi() * &q.phi(), "phi multiplicative")?;
    check(p.scale(&rat(3, 5)).phi() == p.phi().scale(&rat(3, 5)), "phi linear")
}

pub fn coefficient_of_sum(p: &MultiPoly, q: &MultiPoly, e: &[u32]) -> Result<(), TestCaseError> {
    let lhs = (p + q).coefficient(e).unwrap();
    let rhs = p.coefficient(e).unwrap() + q.coefficient(e).unwrap();
    check(lhs == rhs, "coefficient(p + q) = coefficient(p) + coefficient(q)")
}

pub fn code_structure(n: usize, rows: &[BitWord]) -> Result<(), TestCaseError> {
    let (basis, rank) = rref(rows).unwrap();
    let (again, rank2) = rref(&basis).unwrap();
    check(basis == again && rank == rank2, "rref idempotent")?;
    let code = BinaryCode::from_rows(n, rows).unwrap();
    check(code.dimension() == rank, "dimension = rank")?;
    let mut words = code.codeword_bits().unwrap();
    words.sort_unstable();
    words.dedup();
    check(words.len() == 1usize << rank, "2^k distinct codewords")?;
    let dual = code.dual();
    check(dual.dimension() == n - rank, "dual dimension")?;
    for g in dual.generators() {
        for r in code.generators() {
            check(!g.dot(&r).unwrap(), "dual orthogonal")?;
        }
    }
    check(dual.dual().same_row_space(&code), "dual involution")?;
    let exhaustive = code
        .codewords()
        .unwrap()
        .all(|w| w.weight() % 4 == 0);
    check(exhaustive == code.is_doubly_even(), "doubly even predicate")
}

pub fn pattern_sum(words: &[BitWord]) -> Result<(), TestCaseError> {
    let counts = pattern_counts(words).unwrap();
    check(
        counts.iter().map(|&c| c as usize).sum::<usize>() == words[0].len(),
        "pattern counts sum to n",
    )
}

pub fn direct_sum_weights(a: &BinaryCode, b: &BinaryCode) -> Result<(), TestCaseError> {
    let sum = a.direct_sum(b).unwrap();
    let low = (1u64 << a.length()) - 1;
    for w in sum.codewords().unwrap() {
        let left = (w.bits() & low).count_ones();
        let right = (w.bits() >> a.length()).count_ones();
        check(w.weight() == left + right, "weight additivity")?;
        check(
            a.contains(&BitWord::from_bits(w.bits() & low, a.length()).unwrap()).unwrap(),
            "left part in C",
        )?;
    }
    check(sum.dimension() == a.dimension() + b.dimension(), "dimension adds")
}

pub fn product_rule(a: &BinaryCode, b: &BinaryCode, genus: usize) -> Result<(), TestCaseError> {
    let naive = weight_enumerator(&a.direct_sum(b).unwrap(), genus).unwrap();
    let split = weight_enumerator_decomposed(&[a.clone(), b.clone()], genus).unwrap();
    check(naive == split, "naive = decomposed")
}

pub fn enumerator_shape(code: &BinaryCode, genus: usize) -> Result<(), TestCaseError> {
    let w = weight_enumerator(code, genus).unwrap();
    check(w.is_homogeneous(code.length() as u64), "homogeneous of degree n")?;
    check(
        w.coefficient_sum() == int(1i64 << (genus * code.dimension())),
        "coefficient sum 2^(gk)",
    )?;
    check(
        w.terms().all(|(e, c)| {
            e.as_slice().len() == 1 << genus && c.is_integer() && *c > int(0)
        }),
        "positive integer coefficients",
    )?;
    if genus > 1 {
        check(
            w.phi() == weight_enumerator(code, genus - 1).unwrap(),
            "phi lowers genus",
        )?;
    }
    Ok(())
}
