use super::{InsSet, Parameter, SoftSet};
use crate::error::{Error, Result};
use crate::grades::GradeTriple;

fn same_universe(fa: &SoftSet, gb: &SoftSet) -> Result<()> {
    if fa.universe == gb.universe {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

// Union on shared parameters: T = max, I = min, F = min.
fn join(a: GradeTriple, b: GradeTriple) -> GradeTriple {
    GradeTriple::closed(
        a.truth().max(b.truth()),
        a.indeterminacy().min(b.indeterminacy()),
        a.falsity().min(b.falsity()),
    )
}

// Intersection: T = min, I = min, F = max.
fn meet(a: GradeTriple, b: GradeTriple) -> GradeTriple {
    GradeTriple::closed(
        a.truth().min(b.truth()),
        a.indeterminacy().min(b.indeterminacy()),
        a.falsity().max(b.falsity()),
    )
}

/// Negates every parameter, keeping order.
pub fn not_parameters(params: &[Parameter]) -> Vec<Parameter> {
    params.iter().map(Parameter::negate).collect()
}

/// Containment: every parameter of `fa` is a parameter of `gb`, and on those
/// parameters T and I grow while F shrinks. Non-strict, so `is_subset(s, s)`.
pub fn is_subset(fa: &SoftSet, gb: &SoftSet) -> Result<bool> {
    same_universe(fa, gb)?;
    for (param, small) in &fa.columns {
        let Some(large) = gb.get(param) else {
            return Ok(false);
        };
        let dominated = small.grades.iter().zip(&large.grades).all(|(s, l)| {
            s.truth() <= l.truth() && s.indeterminacy() <= l.indeterminacy() && s.falsity() >= l.falsity()
        });
        if !dominated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mutual containment: same parameter set and identical grades, regardless of
/// parameter order.
pub fn equals(fa: &SoftSet, gb: &SoftSet) -> Result<bool> {
    Ok(is_subset(fa, gb)? && is_subset(gb, fa)?)
}

/// Complement over the negated parameters; each triple has T and F swapped.
pub fn complement(fa: &SoftSet) -> SoftSet {
    SoftSet::from_parts(
        fa.universe.clone(),
        fa.columns
            .iter()
            .map(|(p, set)| (p.negate(), set.map(|g| g.complement())))
            .collect(),
    )
}

pub fn is_null(fa: &SoftSet) -> bool {
    fa.columns
        .iter()
        .all(|(_, set)| set.grades.iter().all(GradeTriple::is_null))
}

/// Union over A ∪ B. Parameters of `fa` come first, then those only in `gb`.
pub fn union(fa: &SoftSet, gb: &SoftSet) -> Result<SoftSet> {
    same_universe(fa, gb)?;
    let mut columns: Vec<(Parameter, InsSet)> = fa
        .columns
        .iter()
        .map(|(p, set)| match gb.get(p) {
            Some(other) => (p.clone(), set.zip_with(other, join)),
            None => (p.clone(), set.clone()),
        })
        .collect();
    columns.extend(
        gb.columns
            .iter()
            .filter(|(p, _)| !fa.contains(p))
            .cloned(),
    );
    Ok(SoftSet::from_parts(fa.universe.clone(), columns))
}

/// Intersection over A ∩ B, in `fa`'s parameter order. The parameter sets
/// must overlap.
pub fn intersection(fa: &SoftSet, gb: &SoftSet) -> Result<SoftSet> {
    same_universe(fa, gb)?;
    let columns: Vec<(Parameter, InsSet)> = fa
        .columns
        .iter()
        .filter_map(|(p, set)| gb.get(p).map(|other| (p.clone(), set.zip_with(other, meet))))
        .collect();
    if columns.is_empty() {
        return Err(Error::EmptyParameterIntersection);
    }
    Ok(SoftSet::from_parts(fa.universe.clone(), columns))
}

fn product(fa: &SoftSet, gb: &SoftSet, combine: fn(GradeTriple, GradeTriple) -> GradeTriple) -> Result<SoftSet> {
    same_universe(fa, gb)?;
    let mut columns = Vec::with_capacity(fa.columns.len() * gb.columns.len());
    for (alpha, left) in &fa.columns {
        for (beta, right) in &gb.columns {
            columns.push((
                Parameter::pair(alpha.clone(), beta.clone()),
                left.zip_with(right, combine),
            ));
        }
    }
    Ok(SoftSet::from_parts(fa.universe.clone(), columns))
}

/// AND: one compound parameter (α, β) per pair in A × B, row-major, graded
/// by the intersection rule.
pub fn and(fa: &SoftSet, gb: &SoftSet) -> Result<SoftSet> {
    product(fa, gb, meet)
}

/// OR: compound parameters as in [`and`], graded by max / min / min.
pub fn or(fa: &SoftSet, gb: &SoftSet) -> Result<SoftSet> {
    product(fa, gb, join)
}
