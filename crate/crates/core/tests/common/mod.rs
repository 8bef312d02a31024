#![allow(dead_code)]

use std::path::PathBuf;

use inss::io::load_soft_set;
use inss::reference_oracle::{raw_triple_is_valid, Law, RawTriple};
use inss::{Grade, GradeTriple, Parameter, SoftSet};
use proptest::prelude::*;

pub const POOL: [&str; 5] = ["p0", "p1", "p2", "p3", "p4"];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> SoftSet {
    load_soft_set(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn triple(units: RawTriple) -> GradeTriple {
    let g = |u| Grade::from_units(u).unwrap();
    GradeTriple::new(g(units[0]), g(units[1]), g(units[2])).unwrap()
}

/// Valid triples on the one-decimal grid; coarse values make ties common.
pub fn one_decimal_triple() -> impl Strategy<Value = GradeTriple> {
    (0u16..=10, 0u16..=10, 0u16..=10)
        .prop_map(|(t, i, f)| [t * 1000, i * 1000, f * 1000])
        .prop_filter("invalid triple", |&raw| raw_triple_is_valid(raw))
        .prop_map(triple)
}

pub fn universe(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("b{i}")).collect()
}

fn build(n: usize, names: Vec<&'static str>, cells: Vec<GradeTriple>) -> SoftSet {
    let columns = names
        .into_iter()
        .zip(cells.chunks(n))
        .map(|(name, chunk)| (Parameter::named(name), chunk.to_vec()))
        .collect();
    SoftSet::new(universe(n), columns).unwrap()
}

/// A soft set over `n` elements whose parameters are "p0" plus a shuffled
/// subset of the rest of the pool.
pub fn soft_set_with_p0(n: usize) -> impl Strategy<Value = SoftSet> {
    proptest::sample::subsequence(POOL[1..].to_vec(), 0..=3)
        .prop_flat_map(|extra| {
            let mut names = vec![POOL[0]];
            names.extend(extra);
            Just(names).prop_shuffle()
        })
        .prop_flat_map(move |names| {
            let cells = proptest::collection::vec(one_decimal_triple(), names.len() * n);
            (Just(names), cells)
        })
        .prop_map(move |(names, cells)| build(n, names, cells))
}

/// A soft set over `n` elements with exactly the given parameters.
pub fn soft_set_over(n: usize, names: Vec<&'static str>) -> impl Strategy<Value = SoftSet> {
    proptest::collection::vec(one_decimal_triple(), names.len() * n)
        .prop_map(move |cells| build(n, names.clone(), cells))
}

/// `k` soft sets over a shared universe of 1..=5 elements, all containing "p0".
pub fn overlapping_sets(k: usize) -> impl Strategy<Value = Vec<SoftSet>> {
    (1usize..=5).prop_flat_map(move |n| proptest::collection::vec(soft_set_with_p0(n), k))
}

/// `k` soft sets over a shared universe and one shared parameter list.
pub fn aligned_sets(k: usize) -> impl Strategy<Value = Vec<SoftSet>> {
    (1usize..=5, proptest::sample::subsequence(POOL.to_vec(), 1..=3))
        .prop_flat_map(move |(n, names)| proptest::collection::vec(soft_set_over(n, names), k))
}

/// Decision tables with 1..=8 objects and 1..=6 parameters.
pub fn decision_set() -> impl Strategy<Value = SoftSet> {
    (1usize..=8, 1usize..=6).prop_flat_map(|(n, m)| {
        proptest::collection::vec(one_decimal_triple(), n * m).prop_map(move |cells| {
            let columns = (0..m)
                .map(|j| (Parameter::named(format!("c{j}")), cells[j * n..(j + 1) * n].to_vec()))
                .collect();
            SoftSet::new(universe(n), columns).unwrap()
        })
    })
}

pub fn all_triples(set: &SoftSet) -> impl Iterator<Item = GradeTriple> + '_ {
    set.columns().iter().flat_map(|(_, ins)| ins.grades().iter().copied())
}

pub fn revalidates(set: &SoftSet) -> bool {
    all_triples(set).all(|g| {
        let [t, i, f] = g.components();
        GradeTriple::new(t, i, f).is_ok()
    })
}

/// Both sides of `law`, built with the production operations.
pub fn production_sides(law: Law, s: &[SoftSet]) -> inss::Result<(SoftSet, SoftSet)> {
    use inss::soft_algebra::{and, complement, intersection, or, union};
    let null_like = |a: &SoftSet| SoftSet::null(a.universe().to_vec(), a.parameters().cloned().collect());
    Ok(match law {
        Law::IdempotencyUnion => (union(&s[0], &s[0])?, s[0].clone()),
        Law::IdempotencyIntersection => (intersection(&s[0], &s[0])?, s[0].clone()),
        Law::CommutativityUnion => (union(&s[0], &s[1])?, union(&s[1], &s[0])?),
        Law::CommutativityIntersection => (intersection(&s[0], &s[1])?, intersection(&s[1], &s[0])?),
        Law::AssociativityUnion => (
            union(&s[0], &union(&s[1], &s[2])?)?,
            union(&union(&s[0], &s[1])?, &s[2])?,
        ),
        Law::AssociativityIntersection => (
            intersection(&s[0], &intersection(&s[1], &s[2])?)?,
            intersection(&intersection(&s[0], &s[1])?, &s[2])?,
        ),
        Law::DistributiveUnionOverIntersection => (
            union(&s[0], &intersection(&s[1], &s[2])?)?,
            intersection(&union(&s[0], &s[1])?, &union(&s[0], &s[2])?)?,
        ),
        Law::DistributiveIntersectionOverUnion => (
            intersection(&s[0], &union(&s[1], &s[2])?)?,
            union(&intersection(&s[0], &s[1])?, &intersection(&s[0], &s[2])?)?,
        ),
        Law::DeMorganAnd => (
            complement(&and(&s[0], &s[1])?),
            or(&complement(&s[0]), &complement(&s[1]))?,
        ),
        Law::DeMorganOr => (
            complement(&or(&s[0], &s[1])?),
            and(&complement(&s[0]), &complement(&s[1]))?,
        ),
        Law::Involution => (complement(&complement(&s[0])), s[0].clone()),
        Law::UnionNullIdentity => (union(&s[0], &null_like(&s[0])?)?, s[0].clone()),
        Law::IntersectionNullAbsorption => {
            let null = null_like(&s[0])?;
            (intersection(&s[0], &null)?, null)
        }
    })
}

pub fn production_law_holds(law: Law, s: &[SoftSet]) -> inss::Result<bool> {
    let (left, right) = production_sides(law, s)?;
    inss::soft_algebra::equals(&left, &right)
}

/// The laws expected to hold, paired with the input generator they hold on.
/// Union over intersection is only claimed for a shared parameter list.
pub fn law_inputs(law: Law) -> BoxedStrategy<Vec<SoftSet>> {
    match law {
        Law::DistributiveUnionOverIntersection => aligned_sets(3).boxed(),
        _ => overlapping_sets(law.arity()).boxed(),
    }
}

pub const HOLDING_LAWS: [Law; 11] = [
    Law::IdempotencyUnion,
    Law::IdempotencyIntersection,
    Law::CommutativityUnion,
    Law::CommutativityIntersection,
    Law::AssociativityUnion,
    Law::AssociativityIntersection,
    Law::DistributiveUnionOverIntersection,
    Law::DistributiveIntersectionOverUnion,
    Law::DeMorganAnd,
    Law::DeMorganOr,
    Law::Involution,
];
