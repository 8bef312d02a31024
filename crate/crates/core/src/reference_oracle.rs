//! Deliberately naive re-implementations used to audit the production code.
//!
//! Nothing here calls into the comparison or combination code of
//! [`crate::soft_algebra`] or [`crate::decision`]. Soft sets are flattened to
//! plain maps of integer triples; laws are checked by building both sides
//! from scratch and comparing cell by cell.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decision::{Cell, ComparisonMatrix, DecisionTable};
use crate::error::{Error, Result};
use crate::soft_algebra::{Parameter, SoftSet};

/// A triple as raw ten-thousandths: `[T, I, F]`.
pub type RawTriple = [u16; 3];

/// The triple constraints restated: at most one component may exceed one
/// half, and the components may not sum past two.
pub fn raw_triple_is_valid(triple: RawTriple) -> bool {
    let above_half = triple.iter().filter(|&&x| x > 5_000).count();
    let sum: u32 = triple.iter().map(|&x| u32::from(x)).sum();
    triple.iter().all(|&x| x <= 10_000) && above_half <= 1 && sum <= 20_000
}

/// A soft set as a map from parameter to one raw triple per element. No
/// validity checks are applied, so published examples that break the
/// constraints can still be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSoftSet {
    pub universe: Vec<String>,
    pub columns: BTreeMap<Parameter, Vec<RawTriple>>,
}

impl RawSoftSet {
    pub fn from_soft_set(set: &SoftSet) -> RawSoftSet {
        let mut columns = BTreeMap::new();
        for (p, ins) in set.columns() {
            let raw = ins
                .grades()
                .iter()
                .map(|g| {
                    let [t, i, f] = g.components();
                    [t.units(), i.units(), f.units()]
                })
                .collect();
            columns.insert(p.clone(), raw);
        }
        RawSoftSet {
            universe: set.universe().to_vec(),
            columns,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.columns.values().flatten().all(|&t| raw_triple_is_valid(t))
    }
}

fn naive_max(a: u16, b: u16) -> u16 {
    if a >= b {
        a
    } else {
        b
    }
}

fn naive_min(a: u16, b: u16) -> u16 {
    if a <= b {
        a
    } else {
        b
    }
}

fn raw_join(x: RawTriple, y: RawTriple) -> RawTriple {
    [naive_max(x[0], y[0]), naive_min(x[1], y[1]), naive_min(x[2], y[2])]
}

fn raw_meet(x: RawTriple, y: RawTriple) -> RawTriple {
    [naive_min(x[0], y[0]), naive_min(x[1], y[1]), naive_max(x[2], y[2])]
}

fn check_universes(a: &RawSoftSet, b: &RawSoftSet) -> Result<()> {
    if a.universe != b.universe {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

fn pointwise(a: &[RawTriple], b: &[RawTriple], f: fn(RawTriple, RawTriple) -> RawTriple) -> Vec<RawTriple> {
    let mut out = Vec::new();
    for idx in 0..a.len() {
        out.push(f(a[idx], b[idx]));
    }
    out
}

pub fn raw_union(a: &RawSoftSet, b: &RawSoftSet) -> Result<RawSoftSet> {
    check_universes(a, b)?;
    let mut columns = BTreeMap::new();
    for (p, col) in &a.columns {
        let value = match b.columns.get(p) {
            Some(other) => pointwise(col, other, raw_join),
            None => col.clone(),
        };
        columns.insert(p.clone(), value);
    }
    for (p, col) in &b.columns {
        if !a.columns.contains_key(p) {
            columns.insert(p.clone(), col.clone());
        }
    }
    Ok(RawSoftSet {
        universe: a.universe.clone(),
        columns,
    })
}

pub fn raw_intersection(a: &RawSoftSet, b: &RawSoftSet) -> Result<RawSoftSet> {
    check_universes(a, b)?;
    let mut columns = BTreeMap::new();
    for (p, col) in &a.columns {
        if let Some(other) = b.columns.get(p) {
            columns.insert(p.clone(), pointwise(col, other, raw_meet));
        }
    }
    if columns.is_empty() {
        return Err(Error::EmptyParameterIntersection);
    }
    Ok(RawSoftSet {
        universe: a.universe.clone(),
        columns,
    })
}

fn raw_product(a: &RawSoftSet, b: &RawSoftSet, f: fn(RawTriple, RawTriple) -> RawTriple) -> Result<RawSoftSet> {
    check_universes(a, b)?;
    let mut columns = BTreeMap::new();
    for (alpha, left) in &a.columns {
        for (beta, right) in &b.columns {
            columns.insert(Parameter::pair(alpha.clone(), beta.clone()), pointwise(left, right, f));
        }
    }
    Ok(RawSoftSet {
        universe: a.universe.clone(),
        columns,
    })
}

pub fn raw_and(a: &RawSoftSet, b: &RawSoftSet) -> Result<RawSoftSet> {
    raw_product(a, b, raw_meet)
}

pub fn raw_or(a: &RawSoftSet, b: &RawSoftSet) -> Result<RawSoftSet> {
    raw_product(a, b, raw_join)
}

pub fn raw_complement(a: &RawSoftSet) -> RawSoftSet {
    let mut columns = BTreeMap::new();
    for (p, col) in &a.columns {
        columns.insert(p.negate(), col.iter().map(|&[t, i, f]| [f, i, t]).collect());
    }
    RawSoftSet {
        universe: a.universe.clone(),
        columns,
    }
}

/// Null set over the same universe and parameters.
pub fn raw_null_like(a: &RawSoftSet) -> RawSoftSet {
    RawSoftSet {
        universe: a.universe.clone(),
        columns: a
            .columns
            .keys()
            .map(|p| (p.clone(), vec![[0, 0, 0]; a.universe.len()]))
            .collect(),
    }
}

/// Brute-force subset test: walks every parameter and element.
pub fn raw_is_subset(a: &RawSoftSet, b: &RawSoftSet) -> Result<bool> {
    check_universes(a, b)?;
    for (p, col) in &a.columns {
        let Some(other) = b.columns.get(p) else {
            return Ok(false);
        };
        for idx in 0..col.len() {
            let (x, y) = (col[idx], other[idx]);
            if !(x[0] <= y[0]) || !(x[1] <= y[1]) || !(x[2] >= y[2]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn raw_equals(a: &RawSoftSet, b: &RawSoftSet) -> Result<bool> {
    Ok(raw_is_subset(a, b)? && raw_is_subset(b, a)?)
}

/// Triple-loop recount of the comparison matrix.
pub fn oracle_matrix(table: &DecisionTable) -> ComparisonMatrix {
    let set = table.soft_set();
    let raw = RawSoftSet::from_soft_set(set);
    let params: Vec<Parameter> = set.parameters().cloned().collect();
    let n = set.universe().len();
    let mut cells = Vec::new();
    for i in 0..n {
        let mut row = Vec::new();
        for p in &params {
            let col = &raw.columns[p];
            let mut counts = [0u32; 3];
            for k in 0..n {
                if k == i {
                    continue;
                }
                for comp in 0..3 {
                    if col[i][comp] >= col[k][comp] {
                        counts[comp] += 1;
                    }
                }
            }
            row.push(Cell {
                a: counts[0],
                d: counts[1],
                c: counts[2],
            });
        }
        cells.push(row);
    }
    ComparisonMatrix::from_cells(set.universe().to_vec(), params, cells)
}

/// Expected column sum of the comparison matrix: n(n-1)/2 plus the tied
/// pairs in truth and indeterminacy, minus the tied pairs in falsity.
pub fn expected_column_sum(table: &DecisionTable, parameter: usize) -> i64 {
    let raw = RawSoftSet::from_soft_set(table.soft_set());
    let param = table.parameters()[parameter].clone();
    let col = &raw.columns[&param];
    let n = col.len() as i64;
    let mut ties = [0i64; 3];
    for x in 0..col.len() {
        for y in x + 1..col.len() {
            for comp in 0..3 {
                if col[x][comp] == col[y][comp] {
                    ties[comp] += 1;
                }
            }
        }
    }
    n * (n - 1) / 2 + ties[0] + ties[1] - ties[2]
}

/// Identities of the soft set algebra that can be checked by evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Law {
    IdempotencyUnion,
    IdempotencyIntersection,
    CommutativityUnion,
    CommutativityIntersection,
    AssociativityUnion,
    AssociativityIntersection,
    /// A ∪ (B ∩ C) = (A ∪ B) ∩ (A ∪ C)
    DistributiveUnionOverIntersection,
    /// A ∩ (B ∪ C) = (A ∩ B) ∪ (A ∩ C)
    DistributiveIntersectionOverUnion,
    /// (A AND B)^c = A^c OR B^c
    DeMorganAnd,
    /// (A OR B)^c = A^c AND B^c
    DeMorganOr,
    Involution,
    /// A ∪ Φ = A. Does not hold under the union rule when A has nonzero
    /// indeterminacy or falsity.
    UnionNullIdentity,
    /// A ∩ Φ = Φ. Does not hold under the intersection rule when A has
    /// nonzero falsity.
    IntersectionNullAbsorption,
}

impl Law {
    pub const ALL: [Law; 13] = [
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
        Law::UnionNullIdentity,
        Law::IntersectionNullAbsorption,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::IdempotencyUnion => "idempotency-union",
            Law::IdempotencyIntersection => "idempotency-intersection",
            Law::CommutativityUnion => "commutativity-union",
            Law::CommutativityIntersection => "commutativity-intersection",
            Law::AssociativityUnion => "associativity-union",
            Law::AssociativityIntersection => "associativity-intersection",
            Law::DistributiveUnionOverIntersection => "distributive-3",
            Law::DistributiveIntersectionOverUnion => "distributive-4",
            Law::DeMorganAnd => "de-morgan-and",
            Law::DeMorganOr => "de-morgan-or",
            Law::Involution => "involution",
            Law::UnionNullIdentity => "union-null-identity",
            Law::IntersectionNullAbsorption => "intersection-null-absorption",
        }
    }

    /// Number of soft sets the law quantifies over.
    pub fn arity(self) -> usize {
        match self {
            Law::IdempotencyUnion
            | Law::IdempotencyIntersection
            | Law::Involution
            | Law::UnionNullIdentity
            | Law::IntersectionNullAbsorption => 1,
            Law::CommutativityUnion | Law::CommutativityIntersection | Law::DeMorganAnd | Law::DeMorganOr => 2,
            Law::AssociativityUnion
            | Law::AssociativityIntersection
            | Law::DistributiveUnionOverIntersection
            | Law::DistributiveIntersectionOverUnion => 3,
        }
    }

    /// Builds (left side, right side) for the given inputs.
    fn sides(self, s: &[RawSoftSet]) -> Result<(RawSoftSet, RawSoftSet)> {
        Ok(match self {
            Law::IdempotencyUnion => (raw_union(&s[0], &s[0])?, s[0].clone()),
            Law::IdempotencyIntersection => (raw_intersection(&s[0], &s[0])?, s[0].clone()),
            Law::CommutativityUnion => (raw_union(&s[0], &s[1])?, raw_union(&s[1], &s[0])?),
            Law::CommutativityIntersection => (
                raw_intersection(&s[0], &s[1])?,
                raw_intersection(&s[1], &s[0])?,
            ),
            Law::AssociativityUnion => (
                raw_union(&s[0], &raw_union(&s[1], &s[2])?)?,
                raw_union(&raw_union(&s[0], &s[1])?, &s[2])?,
            ),
            Law::AssociativityIntersection => (
                raw_intersection(&s[0], &raw_intersection(&s[1], &s[2])?)?,
                raw_intersection(&raw_intersection(&s[0], &s[1])?, &s[2])?,
            ),
            Law::DistributiveUnionOverIntersection => (
                raw_union(&s[0], &raw_intersection(&s[1], &s[2])?)?,
                raw_intersection(&raw_union(&s[0], &s[1])?, &raw_union(&s[0], &s[2])?)?,
            ),
            Law::DistributiveIntersectionOverUnion => (
                raw_intersection(&s[0], &raw_union(&s[1], &s[2])?)?,
                raw_union(&raw_intersection(&s[0], &s[1])?, &raw_intersection(&s[0], &s[2])?)?,
            ),
            Law::DeMorganAnd => (
                raw_complement(&raw_and(&s[0], &s[1])?),
                raw_or(&raw_complement(&s[0]), &raw_complement(&s[1]))?,
            ),
            Law::DeMorganOr => (
                raw_complement(&raw_or(&s[0], &s[1])?),
                raw_and(&raw_complement(&s[0]), &raw_complement(&s[1]))?,
            ),
            Law::Involution => (raw_complement(&raw_complement(&s[0])), s[0].clone()),
            Law::UnionNullIdentity => (raw_union(&s[0], &raw_null_like(&s[0]))?, s[0].clone()),
            Law::IntersectionNullAbsorption => {
                let null = raw_null_like(&s[0]);
                (raw_intersection(&s[0], &null)?, null)
            }
        })
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Law> {
        Law::ALL
            .into_iter()
            .find(|law| law.id() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Component {
    Truth,
    Indeterminacy,
    Falsity,
}

/// Where the two sides of a law first differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Counterexample {
    /// A parameter present on only one side.
    Parameter { parameter: String, on_left: bool },
    /// A grade that differs, with both values in ten-thousandths.
    Grade {
        parameter: String,
        element: String,
        component: Component,
        left: u16,
        right: u16,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: Law,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Smallest difference between two raw soft sets, scanning parameters in
/// canonical order, then elements in universe order, then T, I, F.
pub fn first_difference(left: &RawSoftSet, right: &RawSoftSet) -> Option<Counterexample> {
    let mut keys: Vec<&Parameter> = left.columns.keys().chain(right.columns.keys()).collect();
    keys.sort();
    keys.dedup();
    for p in keys {
        match (left.columns.get(p), right.columns.get(p)) {
            (Some(l), Some(r)) => {
                for idx in 0..left.universe.len() {
                    for (comp, component) in [Component::Truth, Component::Indeterminacy, Component::Falsity]
                        .into_iter()
                        .enumerate()
                    {
                        if l[idx][comp] != r[idx][comp] {
                            return Some(Counterexample::Grade {
                                parameter: p.label(),
                                element: left.universe[idx].clone(),
                                component,
                                left: l[idx][comp],
                                right: r[idx][comp],
                            });
                        }
                    }
                }
            }
            (l, _) => {
                return Some(Counterexample::Parameter {
                    parameter: p.label(),
                    on_left: l.is_some(),
                })
            }
        }
    }
    None
}

/// Evaluates both sides of `law` on raw inputs, which need not satisfy the
/// triple constraints.
pub fn check_law_raw(law: Law, inputs: &[RawSoftSet]) -> Result<LawOutcome> {
    if inputs.len() != law.arity() {
        return Err(Error::LawArity {
            law: law.id().to_string(),
            expected: law.arity(),
            found: inputs.len(),
        });
    }
    for pair in inputs.windows(2) {
        check_universes(&pair[0], &pair[1])?;
    }
    let (left, right) = law.sides(inputs)?;
    let counterexample = first_difference(&left, &right);
    Ok(LawOutcome {
        law,
        holds: counterexample.is_none(),
        counterexample,
    })
}

/// Evaluates the law named `law_id` on validated soft sets.
pub fn oracle_law_check(law_id: &str, inputs: &[SoftSet]) -> Result<LawOutcome> {
    let law: Law = law_id.parse()?;
    let raw: Vec<RawSoftSet> = inputs.iter().map(RawSoftSet::from_soft_set).collect();
    check_law_raw(law, &raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grades::validate_triple;

    fn one_param(cells: &[&str]) -> SoftSet {
        let universe = (1..=cells.len()).map(|i| format!("b{i}")).collect();
        let grades = cells
            .iter()
            .map(|c| {
                let p: Vec<&str> = c.split(',').collect();
                validate_triple(p[0], p[1], p[2]).unwrap()
            })
            .collect();
        SoftSet::new(universe, vec![(Parameter::named("e"), grades)]).unwrap()
    }

    #[test]
    fn raw_validity_agrees_on_grid() {
        for t in (0..=10_000u16).step_by(500) {
            for i in (0..=10_000u16).step_by(500) {
                for f in (0..=10_000u16).step_by(500) {
                    let by_hand = {
                        let (t, i, f) = (t as f64 / 1e4, i as f64 / 1e4, f as f64 / 1e4);
                        t.min(f) <= 0.5 && t.min(i) <= 0.5 && f.min(i) <= 0.5 && t + i + f <= 2.0
                    };
                    assert_eq!(raw_triple_is_valid([t, i, f]), by_hand, "{t} {i} {f}");
                }
            }
        }
    }

    #[test]
    fn law_ids_round_trip() {
        for law in Law::ALL {
            assert_eq!(law.id().parse::<Law>().unwrap(), law);
        }
        assert_eq!("nope".parse::<Law>().unwrap_err(), Error::UnknownLaw("nope".into()));
    }

    #[test]
    fn idempotency_holds() {
        let s = one_param(&["0.6,0.3,0.1", "0.4,0.5,0.5"]);
        assert!(oracle_law_check("idempotency-union", std::slice::from_ref(&s)).unwrap().holds);
        assert!(oracle_law_check("idempotency-intersection", &[s]).unwrap().holds);
    }

    #[test]
    fn union_null_identity_fails_at_indeterminacy() {
        let s = one_param(&["0.6,0.3,0.1"]);
        let outcome = oracle_law_check("union-null-identity", &[s]).unwrap();
        assert!(!outcome.holds);
        assert_eq!(
            outcome.counterexample,
            Some(Counterexample::Grade {
                parameter: "e".into(),
                element: "b1".into(),
                component: Component::Indeterminacy,
                left: 0,
                right: 3000,
            })
        );
    }

    #[test]
    fn intersection_null_absorption_fails_at_falsity() {
        let s = one_param(&["0.6,0.3,0.1"]);
        let outcome = oracle_law_check("intersection-null-absorption", &[s]).unwrap();
        assert!(!outcome.holds);
        assert!(matches!(
            outcome.counterexample,
            Some(Counterexample::Grade {
                component: Component::Falsity,
                left: 1000,
                right: 0,
                ..
            })
        ));
    }

    #[test]
    fn arity_and_universe_checked() {
        let s = one_param(&["0.6,0.3,0.1"]);
        assert_eq!(oracle_law_check("distributive-3", std::slice::from_ref(&s)).unwrap_err().name(), "LawArity");
        let t = one_param(&["0.6,0.3,0.1", "0,0,0"]);
        assert_eq!(
            oracle_law_check("commutativity-union", &[s, t]).unwrap_err(),
            Error::UniverseMismatch
        );
    }

    #[test]
    fn parameter_presence_is_reported() {
        let a = RawSoftSet {
            universe: vec!["x".into()],
            columns: [(Parameter::named("p"), vec![[0, 0, 0]])].into_iter().collect(),
        };
        let b = RawSoftSet {
            universe: vec!["x".into()],
            columns: BTreeMap::new(),
        };
        assert_eq!(
            first_difference(&a, &b),
            Some(Counterexample::Parameter {
                parameter: "p".into(),
                on_left: true
            })
        );
    }
}
