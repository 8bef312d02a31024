use std::fmt;

use crate::grades::Constraint;

/// Coordinates of a cell in a soft set table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub parameter: String,
    pub element: String,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parameter `{}`, element `{}`", self.parameter, self.element)
    }
}

fn at(location: &Option<Location>) -> String {
    match location {
        Some(loc) => format!(" at {loc}"),
        None => String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("grade `{value}` lies outside [0, 1]{}", at(.location))]
    OutOfRange {
        value: String,
        location: Option<Location>,
    },

    #[error("grade `{value}` has more than four fractional digits{}", at(.location))]
    PrecisionLoss {
        value: String,
        location: Option<Location>,
    },

    #[error("triple {triple} violates {constraint}{}", at(.location))]
    ConstraintViolation {
        constraint: Constraint,
        triple: String,
        location: Option<Location>,
    },

    #[error("soft sets are defined over different universes")]
    UniverseMismatch,

    #[error("parameter sets do not intersect")]
    EmptyParameterIntersection,

    #[error("duplicate parameter `{0}`")]
    DuplicateParameter(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("no grade given{}", at(&Some(.0.clone())))]
    MissingGrade(Location),

    #[error("grades given for undeclared {0}")]
    UndeclaredEntry(String),

    #[error("parameter `{parameter}` has {found} grades but the universe has {expected} elements")]
    ArityMismatch {
        parameter: String,
        expected: usize,
        found: usize,
    },

    #[error("the choice parameter set is empty")]
    EmptyParameterSet,

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("the universe has no elements")]
    EmptyUniverse,

    #[error("unknown law `{0}`")]
    UnknownLaw(String),

    #[error("law `{law}` expects {expected} input sets, got {found}")]
    LawArity {
        law: String,
        expected: usize,
        found: usize,
    },

    #[error("unsupported format version {0}")]
    UnsupportedVersion(u32),

    #[error("reference matrix does not match the decision table: {0}")]
    ReferenceShapeMismatch(String),

    #[error("{path}: {reason}")]
    Io { path: String, reason: String },
}

impl Error {
    /// Stable variant name, used verbatim in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::PrecisionLoss { .. } => "PrecisionLoss",
            Error::ConstraintViolation { .. } => "ConstraintViolation",
            Error::UniverseMismatch => "UniverseMismatch",
            Error::EmptyParameterIntersection => "EmptyParameterIntersection",
            Error::DuplicateParameter(_) => "DuplicateParameter",
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::MissingGrade(_) => "MissingGrade",
            Error::UndeclaredEntry(_) => "UndeclaredEntry",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::EmptyParameterSet => "EmptyParameterSet",
            Error::UnknownParameter(_) => "UnknownParameter",
            Error::EmptyUniverse => "EmptyUniverse",
            Error::UnknownLaw(_) => "UnknownLaw",
            Error::LawArity { .. } => "LawArity",
            Error::UnsupportedVersion(_) => "UnsupportedVersion",
            Error::ReferenceShapeMismatch(_) => "ReferenceShapeMismatch",
            Error::Io { .. } => "IoError",
        }
    }

    /// Attaches table coordinates to grade-level errors that lack them.
    pub fn located(self, loc: Location) -> Self {
        match self {
            Error::OutOfRange { value, location: None } => Error::OutOfRange {
                value,
                location: Some(loc),
            },
            Error::PrecisionLoss { value, location: None } => Error::PrecisionLoss {
                value,
                location: Some(loc),
            },
            Error::ConstraintViolation {
                constraint,
                triple,
                location: None,
            } => Error::ConstraintViolation {
                constraint,
                triple,
                location: Some(loc),
            },
            Error::Parse { input, reason } => Error::Parse {
                input,
                reason: format!("{reason} (at {loc})"),
            },
            other => other,
        }
    }

    pub fn location(&self) -> Option<&Location> {
        match self {
            Error::OutOfRange { location, .. }
            | Error::PrecisionLoss { location, .. }
            | Error::ConstraintViolation { location, .. } => location.as_ref(),
            Error::MissingGrade(loc) => Some(loc),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
