//! Membership grades and the validated (truth, indeterminacy, falsity) triple.
//!
//! A [`Grade`] is an exact decimal in `[0, 1]` held as integer
//! ten-thousandths, so every comparison made by the algebra and the decision
//! procedure is an integer comparison.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of grade units in 1.0.
pub const SCALE: u16 = 10_000;
const HALF: u16 = SCALE / 2;
const MAX_FRACTION_DIGITS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grade(u16);

impl Grade {
    pub const ZERO: Grade = Grade(0);
    pub const ONE: Grade = Grade(SCALE);

    /// Builds a grade from ten-thousandths; `None` above 10000.
    pub const fn from_units(units: u16) -> Option<Grade> {
        if units <= SCALE {
            Some(Grade(units))
        } else {
            None
        }
    }

    pub const fn units(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            return write!(f, "{whole}");
        }
        let digits = format!("{frac:04}");
        write!(f, "{whole}.{}", digits.trim_end_matches('0'))
    }
}

impl FromStr for Grade {
    type Err = Error;

    /// Accepts plain decimals (`0.3`, `.35`, `1`, `1.0000`) and exponent
    /// forms (`3e-1`). Values must be exact at four fractional digits.
    fn from_str(s: &str) -> Result<Self> {
        parse_grade(s)
    }
}

fn parse_error(input: &str, reason: &str) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_grade(input: &str) -> Result<Grade> {
    let s = input.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => {
            let exp = body[pos + 1..]
                .parse::<i64>()
                .map_err(|_| parse_error(input, "malformed exponent"))?;
            (&body[..pos], exp)
        }
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(parse_error(input, "expected a decimal number"));
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(parse_error(input, "expected a decimal number"));
    }

    let digits: String = int_part.chars().chain(frac_part.chars()).collect();
    let all_zero = digits.bytes().all(|b| b == b'0');
    if all_zero {
        return Ok(Grade::ZERO);
    }
    if negative {
        return Err(Error::OutOfRange {
            value: input.to_string(),
            location: None,
        });
    }

    // Position of the decimal point within `digits` after applying the exponent.
    let point = (int_part.len() as i64).saturating_add(exponent);
    if point > digits.len() as i64 + 1 {
        return Err(Error::OutOfRange {
            value: input.to_string(),
            location: None,
        });
    }
    if point < -(MAX_FRACTION_DIGITS as i64) {
        return Err(Error::PrecisionLoss {
            value: input.to_string(),
            location: None,
        });
    }

    let (whole, fraction) = if point <= 0 {
        (String::new(), "0".repeat((-point) as usize) + &digits)
    } else if point as usize >= digits.len() {
        (
            digits.clone() + &"0".repeat(point as usize - digits.len()),
            String::new(),
        )
    } else {
        let (w, f) = digits.split_at(point as usize);
        (w.to_string(), f.to_string())
    };
    let whole = whole.trim_start_matches('0');
    let fraction = fraction.trim_end_matches('0');

    let whole_value = match whole {
        "" => 0,
        "1" => 1,
        _ => {
            return Err(Error::OutOfRange {
                value: input.to_string(),
                location: None,
            })
        }
    };
    if whole_value == 1 && !fraction.is_empty() {
        return Err(Error::OutOfRange {
            value: input.to_string(),
            location: None,
        });
    }
    if fraction.len() > MAX_FRACTION_DIGITS {
        return Err(Error::PrecisionLoss {
            value: input.to_string(),
            location: None,
        });
    }
    let frac_units: u16 = if fraction.is_empty() {
        0
    } else {
        format!("{fraction:0<4}").parse().expect("four ascii digits")
    };
    Ok(Grade(whole_value * SCALE + frac_units))
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(GradeVisitor)
    }
}

struct GradeVisitor;

impl<'de> Visitor<'de> for GradeVisitor {
    type Value = Grade;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a decimal grade as a string or number")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Grade, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Grade, E> {
        self.visit_str(&v.to_string())
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Grade, E> {
        self.visit_str(&v.to_string())
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Grade, E> {
        // Display for f64 gives the shortest round-tripping decimal without exponent.
        self.visit_str(&v.to_string())
    }
}

/// One of the four inequalities a triple must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Constraint {
    /// min(T, F) <= 0.5
    TruthFalsity,
    /// min(T, I) <= 0.5
    TruthIndeterminacy,
    /// min(F, I) <= 0.5
    FalsityIndeterminacy,
    /// T + I + F <= 2
    SumBound,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::TruthFalsity => "min(T, F) <= 0.5",
            Constraint::TruthIndeterminacy => "min(T, I) <= 0.5",
            Constraint::FalsityIndeterminacy => "min(F, I) <= 0.5",
            Constraint::SumBound => "T + I + F <= 2",
        })
    }
}

/// A (truth, indeterminacy, falsity) membership triple satisfying the
/// intuitionistic constraints. Fields are private so every value in
/// circulation has been checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeTriple {
    t: Grade,
    i: Grade,
    f: Grade,
}

/// Returns the first violated constraint, in the order they are listed on
/// [`Constraint`].
pub fn first_violation(t: Grade, i: Grade, f: Grade) -> Option<Constraint> {
    if t.0.min(f.0) > HALF {
        Some(Constraint::TruthFalsity)
    } else if t.0.min(i.0) > HALF {
        Some(Constraint::TruthIndeterminacy)
    } else if f.0.min(i.0) > HALF {
        Some(Constraint::FalsityIndeterminacy)
    } else if u32::from(t.0) + u32::from(i.0) + u32::from(f.0) > 2 * u32::from(SCALE) {
        Some(Constraint::SumBound)
    } else {
        None
    }
}

impl GradeTriple {
    pub const NULL: GradeTriple = GradeTriple {
        t: Grade::ZERO,
        i: Grade::ZERO,
        f: Grade::ZERO,
    };

    pub fn new(t: Grade, i: Grade, f: Grade) -> Result<GradeTriple> {
        match first_violation(t, i, f) {
            None => Ok(GradeTriple { t, i, f }),
            Some(constraint) => Err(Error::ConstraintViolation {
                constraint,
                triple: format!("({t}, {i}, {f})"),
                location: None,
            }),
        }
    }

    /// Used by the algebra, whose min/max combinations of valid triples are
    /// always valid.
    pub(crate) fn closed(t: Grade, i: Grade, f: Grade) -> GradeTriple {
        debug_assert!(
            first_violation(t, i, f).is_none(),
            "closure violated by ({t}, {i}, {f})"
        );
        GradeTriple { t, i, f }
    }

    pub fn truth(&self) -> Grade {
        self.t
    }

    pub fn indeterminacy(&self) -> Grade {
        self.i
    }

    pub fn falsity(&self) -> Grade {
        self.f
    }

    pub fn components(&self) -> [Grade; 3] {
        [self.t, self.i, self.f]
    }

    pub fn is_null(&self) -> bool {
        self.t.is_zero() && self.i.is_zero() && self.f.is_zero()
    }

    /// Swaps truth and falsity; indeterminacy is kept.
    pub fn complement(&self) -> GradeTriple {
        GradeTriple {
            t: self.f,
            i: self.i,
            f: self.t,
        }
    }
}

/// Parses three decimal strings and checks the triple constraints.
pub fn validate_triple(t: &str, i: &str, f: &str) -> Result<GradeTriple> {
    GradeTriple::new(t.parse()?, i.parse()?, f.parse()?)
}

pub fn complement_triple(g: GradeTriple) -> GradeTriple {
    g.complement()
}

impl fmt::Display for GradeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

impl Serialize for GradeTriple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(3)?;
        tup.serialize_element(&self.t)?;
        tup.serialize_element(&self.i)?;
        tup.serialize_element(&self.f)?;
        tup.end()
    }
}

impl<'de> Deserialize<'de> for GradeTriple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [t, i, f] = <[Grade; 3]>::deserialize(deserializer)?;
        GradeTriple::new(t, i, f).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Grade {
        s.parse().unwrap()
    }

    #[test]
    fn parses_plain_decimals() {
        assert_eq!(g("0.3").units(), 3000);
        assert_eq!(g(".35").units(), 3500);
        assert_eq!(g("1").units(), 10000);
        assert_eq!(g("1.0000").units(), 10000);
        assert_eq!(g("0").units(), 0);
        assert_eq!(g("-0").units(), 0);
        assert_eq!(g("0.0001").units(), 1);
        assert_eq!(g("3e-1").units(), 3000);
        assert_eq!(g("1e-4").units(), 1);
        assert_eq!(g("0.01E2").units(), 10000);
        assert_eq!(g(" 0.5 ").units(), 5000);
    }

    #[test]
    fn rejects_bad_grades() {
        assert_eq!(g("0.5").to_string(), "0.5");
        assert!(matches!("1.5".parse::<Grade>(), Err(Error::OutOfRange { .. })));
        assert!(matches!("1.00001".parse::<Grade>(), Err(Error::OutOfRange { .. })));
        assert!(matches!("2".parse::<Grade>(), Err(Error::OutOfRange { .. })));
        assert!(matches!("-0.1".parse::<Grade>(), Err(Error::OutOfRange { .. })));
        assert!(matches!("1e3".parse::<Grade>(), Err(Error::OutOfRange { .. })));
        assert!(matches!("0.00001".parse::<Grade>(), Err(Error::PrecisionLoss { .. })));
        assert!(matches!("0.12345".parse::<Grade>(), Err(Error::PrecisionLoss { .. })));
        assert!(matches!("1e-9".parse::<Grade>(), Err(Error::PrecisionLoss { .. })));
        assert!(matches!("".parse::<Grade>(), Err(Error::Parse { .. })));
        assert!(matches!(".".parse::<Grade>(), Err(Error::Parse { .. })));
        assert!(matches!("0.3x".parse::<Grade>(), Err(Error::Parse { .. })));
        assert!(matches!("1e".parse::<Grade>(), Err(Error::Parse { .. })));
        assert!(matches!("0,3".parse::<Grade>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn trailing_zeros_do_not_count_as_precision() {
        assert_eq!(g("0.300000000").units(), 3000);
    }

    #[test]
    fn display_is_minimal() {
        for (units, text) in [(0, "0"), (10000, "1"), (3000, "0.3"), (3500, "0.35"), (1, "0.0001"), (1230, "0.123")] {
            assert_eq!(Grade::from_units(units).unwrap().to_string(), text);
        }
        assert_eq!(Grade::from_units(10001), None);
    }

    #[test]
    fn example_triple_is_valid() {
        let triple = validate_triple("0.3", "0.5", "0.4").unwrap();
        assert_eq!(triple.to_string(), "(0.3, 0.5, 0.4)");
        assert!(validate_triple("0", "0", "0").unwrap().is_null());
    }

    #[test]
    fn names_first_violated_constraint() {
        let err = validate_triple("0.6", "0.6", "0.6").unwrap_err();
        assert!(matches!(
            err,
            Error::ConstraintViolation {
                constraint: Constraint::TruthFalsity,
                ..
            }
        ));
        let err = validate_triple("0.6", "0.6", "0.1").unwrap_err();
        assert!(matches!(
            err,
            Error::ConstraintViolation {
                constraint: Constraint::TruthIndeterminacy,
                ..
            }
        ));
        let err = validate_triple("0.1", "0.6", "0.7").unwrap_err();
        assert!(matches!(
            err,
            Error::ConstraintViolation {
                constraint: Constraint::FalsityIndeterminacy,
                ..
            }
        ));
    }

    #[test]
    fn half_is_inclusive() {
        assert!(validate_triple("0.5", "0.5", "0.5").is_ok());
        assert!(validate_triple("1", "0.5", "0.5").is_ok());
        assert!(validate_triple("1", "0.5001", "0.5").is_err());
    }

    #[test]
    fn sum_bound_is_implied_by_pairwise_bounds() {
        // Two of three components must be <= 0.5 once the pairwise bounds hold.
        for t in 0..=SCALE / 100 {
            for i in 0..=SCALE / 100 {
                for f in 0..=SCALE / 100 {
                    let (t, i, f) = (Grade(t * 100), Grade(i * 100), Grade(f * 100));
                    assert_ne!(first_violation(t, i, f), Some(Constraint::SumBound));
                }
            }
        }
    }

    #[test]
    fn complement_swaps_truth_and_falsity() {
        let c = validate_triple("0.5", "0.6", "0.3").unwrap().complement();
        assert_eq!(c, validate_triple("0.3", "0.6", "0.5").unwrap());
        assert_eq!(complement_triple(GradeTriple::NULL), GradeTriple::NULL);
        let x = validate_triple("0.7", "0.4", "0.3").unwrap();
        assert_eq!(x.complement().complement(), x);
    }

    #[test]
    fn serde_accepts_strings_and_numbers() {
        let t: GradeTriple = serde_json::from_str(r#"["0.3", 0.5, 0]"#).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"["0.3","0.5","0"]"#);
        assert!(serde_json::from_str::<GradeTriple>(r#"[0.6, 0.6, 0.6]"#).is_err());
        assert!(serde_json::from_str::<GradeTriple>(r#"[0.00001, 0, 0]"#).is_err());
    }
}
