//! Generators shared by the integration test targets.
#![allow(dead_code)]

use hornsat::{sym, Antecedent, Atom, Formula, HornFormula, HornImplication, Member};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn atom(name: &str) -> Atom {
    Atom::Sym(sym(name))
}

pub fn member(name: &str) -> Member {
    Member::Sym(sym(name))
}

pub fn imp(ante: &[&str], cons: Atom) -> HornImplication {
    HornImplication::new(Antecedent::conj(ante.iter().map(|n| atom(n))), cons)
}

pub fn symbol_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Shape of random Horn formulas.
#[derive(Debug, Clone, Copy)]
pub struct HornShape {
    pub symbols: usize,
    pub max_implications: usize,
    pub max_antecedent: usize,
    /// Probability that an antecedent is `⊤`.
    pub top_rate: f64,
    /// Probability that a consequent is `⊥`.
    pub bottom_rate: f64,
}

impl Default for HornShape {
    fn default() -> Self {
        HornShape {
            symbols: 12,
            max_implications: 30,
            max_antecedent: 3,
            top_rate: 0.15,
            bottom_rate: 0.1,
        }
    }
}

pub fn random_horn<R: Rng>(rng: &mut R, shape: HornShape) -> HornFormula {
    let names = symbol_names(shape.symbols);
    let n = rng.gen_range(1..=shape.max_implications);
    (0..n)
        .map(|_| {
            let antecedent = if rng.gen_bool(shape.top_rate) {
                Antecedent::Top
            } else {
                let k = rng.gen_range(1..=shape.max_antecedent);
                Antecedent::conj((0..k).map(|_| atom(names.choose(rng).unwrap())))
            };
            let consequent = if rng.gen_bool(shape.bottom_rate) {
                Atom::Bottom
            } else {
                atom(names.choose(rng).unwrap())
            };
            HornImplication::new(antecedent, consequent)
        })
        .collect()
}

/// `{⊤}` plus a random selection of symbols (and occasionally `⊥`).
pub fn random_start<R: Rng>(rng: &mut R, symbols: usize) -> hornsat::LiteralSet {
    let names = symbol_names(symbols);
    let mut set = hornsat::LiteralSet::top();
    for name in &names {
        if rng.gen_bool(0.25) {
            set.insert(member(name));
        }
    }
    if rng.gen_bool(0.05) {
        set.insert(Member::Bottom);
    }
    set
}

pub fn random_formula<R: Rng>(rng: &mut R, symbols: usize, depth: usize) -> Formula {
    let names = symbol_names(symbols);
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Verum,
            1 => Formula::Falsum,
            _ => Formula::atom(names.choose(rng).unwrap()),
        };
    }
    let sub = |rng: &mut R| random_formula(rng, symbols, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        3 => Formula::implies(sub(rng), sub(rng)),
        _ => Formula::iff(sub(rng), sub(rng)),
    }
}

/// Every Horn formula over `{p,q,r}` with 1 to `max_len` implications,
/// antecedents `⊤` or 1-2 distinct symbols, consequents in `{p,q,r,⊥}`.
pub fn exhaustive_horn_family(max_len: usize) -> Vec<HornFormula> {
    let antecedents: Vec<&[&str]> = vec![
        &[],
        &["p"],
        &["q"],
        &["r"],
        &["p", "q"],
        &["p", "r"],
        &["q", "r"],
    ];
    let consequents = [atom("p"), atom("q"), atom("r"), Atom::Bottom];
    let mut kinds = Vec::new();
    for a in &antecedents {
        for c in &consequents {
            kinds.push(imp(a, c.clone()));
        }
    }
    let mut out: Vec<Vec<HornImplication>> = Vec::new();
    let mut frontier: Vec<Vec<HornImplication>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for k in &kinds {
                let mut seq = prefix.clone();
                seq.push(k.clone());
                next.push(seq);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(HornFormula::new).collect()
}

pub fn shuffled<R: Rng>(rng: &mut R, phi: &HornFormula) -> HornFormula {
    let mut implications = phi.implications().to_vec();
    implications.shuffle(rng);
    HornFormula::new(implications)
}

pub fn arb_formula(symbols: usize, depth: u32) -> impl Strategy<Value = Formula> {
    let names = symbol_names(symbols);
    let leaf = prop_oneof![
        1 => Just(Formula::Verum),
        1 => Just(Formula::Falsum),
        8 => proptest::sample::select(names).prop_map(|n| Formula::atom(&n)),
    ];
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

pub fn arb_horn(symbols: usize, max_len: usize) -> impl Strategy<Value = HornFormula> {
    let names = symbol_names(symbols);
    let consequent = prop_oneof![
        1 => Just(Atom::Bottom),
        6 => proptest::sample::select(names.clone()).prop_map(|n| atom(&n)),
    ];
    let antecedent = prop_oneof![
        1 => Just(Antecedent::Top),
        4 => proptest::collection::vec(proptest::sample::select(names), 1..=3)
            .prop_map(|ns| Antecedent::conj(ns.iter().map(|n| atom(n)))),
    ];
    proptest::collection::vec(
        (antecedent, consequent).prop_map(|(a, c)| HornImplication::new(a, c)),
        0..=max_len,
    )
    .prop_map(HornFormula::new)
}

pub fn arb_start(symbols: usize) -> impl Strategy<Value = hornsat::LiteralSet> {
    proptest::collection::vec(any::<bool>(), symbols).prop_map(move |bits| {
        let names = symbol_names(symbols);
        hornsat::LiteralSet::with_members(
            names
                .iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(n, _)| member(n)),
        )
    })
}
