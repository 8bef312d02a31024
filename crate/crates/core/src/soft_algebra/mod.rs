//! Soft sets whose approximations are intuitionistic neutrosophic sets, and
//! the operations defined on them.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grades::GradeTriple;

mod ops;

pub use ops::{
    and, complement, equals, intersection, is_null, is_subset, not_parameters, or, union,
};

/// An attribute of the universe, possibly negated, or a pair of attributes
/// produced by the AND / OR products.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Parameter {
    Simple {
        name: String,
        #[serde(default)]
        negated: bool,
    },
    Compound(Box<CompoundParameter>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompoundParameter {
    pub left: Parameter,
    pub right: Parameter,
}

impl Parameter {
    pub fn named(name: impl Into<String>) -> Parameter {
        Parameter::Simple {
            name: name.into(),
            negated: false,
        }
    }

    pub fn pair(left: Parameter, right: Parameter) -> Parameter {
        Parameter::Compound(Box::new(CompoundParameter { left, right }))
    }

    /// Logical negation. Compound parameters negate componentwise.
    pub fn negate(&self) -> Parameter {
        match self {
            Parameter::Simple { name, negated } => Parameter::Simple {
                name: name.clone(),
                negated: !negated,
            },
            Parameter::Compound(pair) => Parameter::pair(pair.left.negate(), pair.right.negate()),
        }
    }

    /// Text used for table headers and as the key in documents:
    /// `bright`, `not bright`, `(bright, costly)`.
    pub fn label(&self) -> String {
        self.to_string()
    }

    fn check_names(&self) -> Result<()> {
        match self {
            Parameter::Simple { name, .. } if name.trim().is_empty() => Err(Error::Parse {
                input: name.clone(),
                reason: "parameter names must be non-empty".into(),
            }),
            Parameter::Simple { .. } => Ok(()),
            Parameter::Compound(pair) => {
                pair.left.check_names()?;
                pair.right.check_names()
            }
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Simple { name, negated: false } => f.write_str(name),
            Parameter::Simple { name, negated: true } => write!(f, "not {name}"),
            Parameter::Compound(pair) => write!(f, "({}, {})", pair.left, pair.right),
        }
    }
}

/// One approximation F(e): a grade triple for every element of the universe,
/// stored in universe order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InsSet {
    grades: Vec<GradeTriple>,
}

impl InsSet {
    pub fn grades(&self) -> &[GradeTriple] {
        &self.grades
    }

    pub fn get(&self, element: usize) -> Option<GradeTriple> {
        self.grades.get(element).copied()
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    fn map(&self, f: impl Fn(GradeTriple) -> GradeTriple) -> InsSet {
        InsSet {
            grades: self.grades.iter().copied().map(f).collect(),
        }
    }

    fn zip_with(&self, other: &InsSet, f: impl Fn(GradeTriple, GradeTriple) -> GradeTriple) -> InsSet {
        InsSet {
            grades: self
                .grades
                .iter()
                .zip(&other.grades)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

/// A parameterised family of intuitionistic neutrosophic sets over a finite
/// universe. Element and parameter order are significant: they define table
/// layout and tie-breaking in decisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftSet {
    universe: Vec<String>,
    columns: Vec<(Parameter, InsSet)>,
}

impl SoftSet {
    pub fn new(universe: Vec<String>, columns: Vec<(Parameter, Vec<GradeTriple>)>) -> Result<SoftSet> {
        check_universe(&universe)?;
        let mut seen = HashSet::new();
        let mut labels = HashSet::new();
        for (param, grades) in &columns {
            param.check_names()?;
            if !seen.insert(param) || !labels.insert(param.label()) {
                return Err(Error::DuplicateParameter(param.label()));
            }
            if grades.len() != universe.len() {
                return Err(Error::ArityMismatch {
                    parameter: param.label(),
                    expected: universe.len(),
                    found: grades.len(),
                });
            }
        }
        Ok(SoftSet {
            universe,
            columns: columns
                .into_iter()
                .map(|(p, grades)| (p, InsSet { grades }))
                .collect(),
        })
    }

    /// The null soft set: every grade is (0, 0, 0).
    pub fn null(universe: Vec<String>, parameters: Vec<Parameter>) -> Result<SoftSet> {
        let n = universe.len();
        SoftSet::new(
            universe,
            parameters
                .into_iter()
                .map(|p| (p, vec![GradeTriple::NULL; n]))
                .collect(),
        )
    }

    // Internal constructor for results of the algebra; inputs already satisfy
    // the uniqueness and arity invariants.
    fn from_parts(universe: Vec<String>, columns: Vec<(Parameter, InsSet)>) -> SoftSet {
        debug_assert!(columns.iter().all(|(_, s)| s.len() == universe.len()));
        SoftSet { universe, columns }
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> impl ExactSizeIterator<Item = &Parameter> + '_ {
        self.columns.iter().map(|(p, _)| p)
    }

    pub fn columns(&self) -> &[(Parameter, InsSet)] {
        &self.columns
    }

    pub fn get(&self, parameter: &Parameter) -> Option<&InsSet> {
        self.columns
            .iter()
            .find(|(p, _)| p == parameter)
            .map(|(_, s)| s)
    }

    pub fn contains(&self, parameter: &Parameter) -> bool {
        self.get(parameter).is_some()
    }

    /// Looks up a parameter by its label (`bright`, `not bright`, ...).
    pub fn parameter_by_label(&self, label: &str) -> Option<&Parameter> {
        self.parameters().find(|p| p.label() == label)
    }

    pub fn element_index(&self, element: &str) -> Option<usize> {
        self.universe.iter().position(|e| e == element)
    }

    pub fn grade(&self, parameter: &Parameter, element: &str) -> Option<GradeTriple> {
        let idx = self.element_index(element)?;
        self.get(parameter)?.get(idx)
    }

    pub fn parameter_count(&self) -> usize {
        self.columns.len()
    }

    /// Keeps only the listed parameters, in the listed order.
    pub fn restrict(&self, parameters: &[Parameter]) -> Result<SoftSet> {
        let mut columns = Vec::with_capacity(parameters.len());
        let mut seen = HashSet::new();
        for p in parameters {
            if !seen.insert(p) {
                return Err(Error::DuplicateParameter(p.label()));
            }
            let set = self
                .get(p)
                .ok_or_else(|| Error::UnknownParameter(p.label()))?;
            columns.push((p.clone(), set.clone()));
        }
        Ok(SoftSet::from_parts(self.universe.clone(), columns))
    }

    /// Same soft set with parameters sorted into canonical order, so that
    /// results of commutative operations compare equal literally.
    pub fn canonicalized(&self) -> SoftSet {
        let mut columns = self.columns.clone();
        columns.sort_by(|a, b| a.0.cmp(&b.0));
        SoftSet::from_parts(self.universe.clone(), columns)
    }

    /// Every (parameter, element, triple), parameter-major.
    pub fn cells(&self) -> impl Iterator<Item = (&Parameter, &str, GradeTriple)> + '_ {
        self.columns.iter().flat_map(move |(p, set)| {
            self.universe
                .iter()
                .zip(set.grades())
                .map(move |(e, &g)| (p, e.as_str(), g))
        })
    }
}

fn check_universe(universe: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for e in universe {
        if e.trim().is_empty() {
            return Err(Error::Parse {
                input: e.clone(),
                reason: "element ids must be non-empty".into(),
            });
        }
        if !seen.insert(e.as_str()) {
            return Err(Error::DuplicateElement(e.clone()));
        }
    }
    Ok(())
}
