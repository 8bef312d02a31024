//! The soft set document format, table rendering, and report text.
//!
//! A document is a JSON object:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "universe": ["b1", "b2"],
//!   "parameters": [{ "name": "bright", "negated": false }],
//!   "grades": { "bright": { "b1": ["0.5", "0.6", "0.3"], "b2": ["0.4", "0.7", "0.2"] } }
//! }
//! ```
//!
//! `grades` is keyed by parameter label (`bright`, `not bright`,
//! `(bright, costly)`) and then by element id. Grades may be given as strings
//! or numbers and are always written back as minimal decimal strings with
//! object keys sorted.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decision::{DecisionReport, ReferenceMatrix};
use crate::error::{Error, Location, Result};
use crate::grades::{Grade, GradeTriple};
use crate::reference_oracle::{RawSoftSet, RawTriple};
use crate::soft_algebra::{Parameter, SoftSet};

pub const FORMAT_VERSION: u32 = 1;

/// Grade text exactly as it appeared in the document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeText(pub String);

impl Serialize for GradeText {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for GradeText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TextVisitor;
        impl<'de> Visitor<'de> for TextVisitor {
            type Value = GradeText;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a grade as a string or number")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<GradeText, E> {
                Ok(GradeText(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<GradeText, E> {
                Ok(GradeText(v.to_string()))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<GradeText, E> {
                Ok(GradeText(v.to_string()))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<GradeText, E> {
                Ok(GradeText(v.to_string()))
            }
        }
        deserializer.deserialize_any(TextVisitor)
    }
}

type ParsedCell = (Location, [Grade; 3]);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoftSetDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub universe: Vec<String>,
    pub parameters: Vec<Parameter>,
    pub grades: BTreeMap<String, BTreeMap<String, [GradeText; 3]>>,
}

impl SoftSetDocument {
    pub fn from_json(text: &str) -> Result<SoftSetDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            input: format!("line {}, column {}", e.line(), e.column()),
            reason: e.to_string(),
        })
    }

    pub fn from_soft_set(set: &SoftSet) -> SoftSetDocument {
        let mut grades = BTreeMap::new();
        for (p, ins) in set.columns() {
            let row = set
                .universe()
                .iter()
                .zip(ins.grades())
                .map(|(e, g)| {
                    let [t, i, f] = g.components();
                    (e.clone(), [t, i, f].map(|x| GradeText(x.to_string())))
                })
                .collect();
            grades.insert(p.label(), row);
        }
        SoftSetDocument {
            format_version: FORMAT_VERSION,
            description: None,
            universe: set.universe().to_vec(),
            parameters: set.parameters().cloned().collect(),
            grades,
        }
    }

    /// Canonical text: pretty JSON with sorted keys and a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
        text.push('\n');
        text
    }

    fn check_structure(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::UnsupportedVersion(self.format_version));
        }
        let mut elements = HashSet::new();
        for e in &self.universe {
            if !elements.insert(e.as_str()) {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        let mut labels = BTreeSet::new();
        for p in &self.parameters {
            if !labels.insert(p.label()) {
                return Err(Error::DuplicateParameter(p.label()));
            }
        }
        for (label, row) in &self.grades {
            if !labels.contains(label) {
                return Err(Error::UndeclaredEntry(format!("parameter `{label}`")));
            }
            if let Some(extra) = row.keys().find(|e| !elements.contains(e.as_str())) {
                return Err(Error::UndeclaredEntry(format!("element `{extra}` under `{label}`")));
            }
        }
        Ok(())
    }

    /// Walks every declared cell in table order, parsing the three grades.
    fn parsed_cells(&self) -> Result<Vec<(Parameter, Vec<ParsedCell>)>> {
        self.check_structure()?;
        let mut columns = Vec::with_capacity(self.parameters.len());
        for p in &self.parameters {
            let label = p.label();
            let row = self.grades.get(&label);
            let mut cells = Vec::with_capacity(self.universe.len());
            for e in &self.universe {
                let loc = Location {
                    parameter: label.clone(),
                    element: e.clone(),
                };
                let Some(texts) = row.and_then(|r| r.get(e)) else {
                    return Err(Error::MissingGrade(loc));
                };
                let mut grades = [Grade::ZERO; 3];
                for (slot, text) in grades.iter_mut().zip(texts) {
                    *slot = text.0.parse::<Grade>().map_err(|err| err.located(loc.clone()))?;
                }
                cells.push((loc, grades));
            }
            columns.push((p.clone(), cells));
        }
        Ok(columns)
    }

    /// Validates the document into a soft set. Errors carry the coordinates
    /// of the offending cell.
    pub fn to_soft_set(&self) -> Result<SoftSet> {
        let mut columns = Vec::new();
        for (p, cells) in self.parsed_cells()? {
            let mut triples = Vec::with_capacity(cells.len());
            for (loc, [t, i, f]) in cells {
                triples.push(GradeTriple::new(t, i, f).map_err(|e| e.located(loc))?);
            }
            columns.push((p, triples));
        }
        SoftSet::new(self.universe.clone(), columns)
    }

    /// Parses grades without checking the triple constraints.
    pub fn to_raw(&self) -> Result<RawSoftSet> {
        let mut columns = BTreeMap::new();
        for (p, cells) in self.parsed_cells()? {
            let raw: Vec<RawTriple> = cells
                .into_iter()
                .map(|(_, g)| g.map(Grade::units))
                .collect();
            columns.insert(p, raw);
        }
        Ok(RawSoftSet {
            universe: self.universe.clone(),
            columns,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

pub fn load_document(path: impl AsRef<Path>) -> Result<SoftSetDocument> {
    let path = path.as_ref();
    SoftSetDocument::from_json(&read(path)?).map_err(|e| match e {
        Error::Parse { input, reason } => Error::Parse {
            input: format!("{}: {input}", path.display()),
            reason,
        },
        other => other,
    })
}

pub fn load_soft_set(path: impl AsRef<Path>) -> Result<SoftSet> {
    load_document(path)?.to_soft_set()
}

pub fn save_soft_set(set: &SoftSet, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, SoftSetDocument::from_soft_set(set).to_canonical_json()).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(flatten)]
    pub matrix: ReferenceMatrix,
}

pub fn load_reference_matrix(path: impl AsRef<Path>) -> Result<ReferenceMatrix> {
    let path = path.as_ref();
    let doc: MatrixDocument = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse {
        input: format!("{}: line {}, column {}", path.display(), e.line(), e.column()),
        reason: e.to_string(),
    })?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::UnsupportedVersion(doc.format_version));
    }
    Ok(doc.matrix)
}

fn grid(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(&header).chain(&rows) {
        let mut text = String::new();
        for (idx, (cell, w)) in line.iter().zip(&widths).enumerate() {
            if idx > 0 {
                text.push_str("  ");
            }
            let _ = write!(text, "{cell:<w$}");
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

/// Aligned text table: one row per element, one column per parameter,
/// cells written `(t, i, f)`. With no parameters only the header is printed.
pub fn render_table(set: &SoftSet) -> String {
    let mut header = vec!["U".to_string()];
    header.extend(set.parameters().map(Parameter::label));
    if set.parameter_count() == 0 {
        return grid(header, Vec::new());
    }
    let rows = set
        .universe()
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            let mut row = vec![e.clone()];
            row.extend(set.columns().iter().map(|(_, ins)| ins.grades()[idx].to_string()));
            row
        })
        .collect();
    grid(header, rows)
}

/// Human-readable decision report: the comparison matrix with its audit
/// counts, scores, ranking, selection, and any errata against a reference.
pub fn render_report(report: &DecisionReport) -> String {
    let mut out = String::new();

    out.push_str("Comparison matrix (entry = a + d - c)\n");
    let mut header = vec!["U".to_string()];
    header.extend(report.parameters.iter().cloned());
    let rows = report
        .objects
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let mut row = vec![o.clone()];
            row.extend(report.matrix[i].iter().map(i64::to_string));
            row
        })
        .collect();
    out.push_str(&grid(header.clone(), rows));

    out.push_str("\nAudit counts a/d/c (other objects with T / I / F less than or equal)\n");
    let rows = report
        .objects
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let mut row = vec![o.clone()];
            row.extend(report.counts[i].iter().map(|c| format!("{}/{}/{}", c.a, c.d, c.c)));
            row
        })
        .collect();
    out.push_str(&grid(header, rows));

    out.push_str("\nScores\n");
    let rows = report
        .objects
        .iter()
        .zip(&report.scores)
        .map(|(o, s)| vec![o.clone(), s.to_string()])
        .collect();
    out.push_str(&grid(vec!["U".into(), "Score".into()], rows));

    let ranking: Vec<String> = report
        .ranking
        .iter()
        .map(|o| {
            let idx = report.objects.iter().position(|x| x == o).expect("ranked object exists");
            format!("{o} ({})", report.scores[idx])
        })
        .collect();
    let _ = writeln!(out, "\nRanking: {}", ranking.join(", "));
    let _ = writeln!(out, "Selected: {} (score {})", report.selected, report.selected_score);
    if report.tie {
        let _ = writeln!(
            out,
            "Tie: {} share the maximum score; the earliest listed was chosen",
            report.tied.join(", ")
        );
    }

    if let Some(errata) = &report.errata {
        out.push_str("\nReference comparison\n");
        if errata.cells.is_empty() && errata.scores.is_empty() {
            out.push_str("reference agrees with the recomputation\n");
        }
        for d in &errata.cells {
            let _ = writeln!(
                out,
                "cell ({}, {}): reference {}, recomputed {} (a={} d={} c={})",
                d.object, d.parameter, d.reference, d.computed, d.counts.a, d.counts.d, d.counts.c
            );
        }
        for d in &errata.scores {
            let _ = writeln!(
                out,
                "score {}: reference {}, recomputed {}",
                d.object, d.reference, d.computed
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
        "format_version": 1,
        "universe": ["b1", "b2"],
        "parameters": [{"name": "bright"}, {"name": "cheap", "negated": true}],
        "grades": {
            "bright": {"b1": ["0.5", 0.6, "0.3"], "b2": [0.4, 0.7, 0.2]},
            "not cheap": {"b1": ["0", "0", "0"], "b2": ["1", "0", "0.5"]}
        }
    }"#;

    #[test]
    fn loads_mixed_string_and_number_grades() {
        let set = SoftSetDocument::from_json(SMALL).unwrap().to_soft_set().unwrap();
        assert_eq!(set.universe(), ["b1", "b2"]);
        assert_eq!(
            set.grade(&Parameter::named("bright"), "b1").unwrap().to_string(),
            "(0.5, 0.6, 0.3)"
        );
        assert_eq!(
            set.grade(&Parameter::named("cheap").negate(), "b2").unwrap().to_string(),
            "(1, 0, 0.5)"
        );
    }

    #[test]
    fn canonical_output_is_stable() {
        let set = SoftSetDocument::from_json(SMALL).unwrap().to_soft_set().unwrap();
        let text = SoftSetDocument::from_soft_set(&set).to_canonical_json();
        let again = SoftSetDocument::from_json(&text).unwrap().to_soft_set().unwrap();
        assert_eq!(again, set);
        assert_eq!(SoftSetDocument::from_soft_set(&again).to_canonical_json(), text);
        assert!(text.contains(r#""0.6""#));
        let fv = text.find("format_version").unwrap();
        let gr = text.find("\"grades\"").unwrap();
        let un = text.find("\"universe\"").unwrap();
        assert!(fv < gr && gr < un, "keys sorted");
    }

    #[test]
    fn errors_carry_coordinates() {
        let bad = SMALL.replace(r#"[0.4, 0.7, 0.2]"#, r#"[0.6, 0.6, 0.6]"#);
        let err = SoftSetDocument::from_json(&bad).unwrap().to_soft_set().unwrap_err();
        assert_eq!(err.name(), "ConstraintViolation");
        assert_eq!(
            err.location(),
            Some(&Location {
                parameter: "bright".into(),
                element: "b2".into()
            })
        );

        let bad = SMALL.replace(r#"0.2]"#, r#"0.20001]"#);
        let err = SoftSetDocument::from_json(&bad).unwrap().to_soft_set().unwrap_err();
        assert_eq!(err.name(), "PrecisionLoss");
        assert_eq!(err.location().unwrap().element, "b2");

        let bad = SMALL.replace(r#""b2": ["1", "0", "0.5"]"#, r#""b3": ["1", "0", "0.5"]"#);
        let err = SoftSetDocument::from_json(&bad).unwrap().to_soft_set().unwrap_err();
        assert_eq!(err.name(), "UndeclaredEntry");

        let bad = SMALL.replace(r#", "b2": ["1", "0", "0.5"]"#, "");
        let err = SoftSetDocument::from_json(&bad).unwrap().to_soft_set().unwrap_err();
        assert_eq!(
            err,
            Error::MissingGrade(Location {
                parameter: "not cheap".into(),
                element: "b2".into()
            })
        );
    }

    #[test]
    fn structural_errors() {
        let dup = SMALL.replace(r#"["b1", "b2"]"#, r#"["b1", "b1"]"#);
        assert_eq!(
            SoftSetDocument::from_json(&dup).unwrap().to_soft_set().unwrap_err(),
            Error::DuplicateElement("b1".into())
        );
        let dup = SMALL.replace(r#"{"name": "cheap", "negated": true}"#, r#"{"name": "bright"}"#);
        assert_eq!(
            SoftSetDocument::from_json(&dup).unwrap().to_soft_set().unwrap_err(),
            Error::DuplicateParameter("bright".into())
        );
        let v2 = SMALL.replace(r#""format_version": 1"#, r#""format_version": 2"#);
        assert_eq!(
            SoftSetDocument::from_json(&v2).unwrap().to_soft_set().unwrap_err(),
            Error::UnsupportedVersion(2)
        );
        assert_eq!(SoftSetDocument::from_json("{").unwrap_err().name(), "ParseError");
        let extra = SMALL.replace(r#""format_version": 1,"#, r#""format_version": 1, "bogus": 3,"#);
        assert_eq!(SoftSetDocument::from_json(&extra).unwrap_err().name(), "ParseError");
    }

    #[test]
    fn empty_universe_loads() {
        let doc = r#"{"format_version": 1, "universe": [], "parameters": [{"name": "x"}], "grades": {}}"#;
        let set = SoftSetDocument::from_json(doc).unwrap().to_soft_set().unwrap();
        assert!(set.universe().is_empty());
        assert_eq!(set.parameter_count(), 1);
    }

    #[test]
    fn raw_loading_skips_constraints() {
        let bad = SMALL.replace(r#"[0.4, 0.7, 0.2]"#, r#"[0.6, 0.6, 0.6]"#);
        let raw = SoftSetDocument::from_json(&bad).unwrap().to_raw().unwrap();
        assert_eq!(raw.columns[&Parameter::named("bright")][1], [6000, 6000, 6000]);
        assert!(!raw.is_valid());
    }

    #[test]
    fn renders_aligned_table() {
        let set = SoftSetDocument::from_json(SMALL).unwrap().to_soft_set().unwrap();
        let text = render_table(&set);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "U   bright           not cheap");
        assert_eq!(lines[1], "b1  (0.5, 0.6, 0.3)  (0, 0, 0)");
        assert_eq!(lines[2], "b2  (0.4, 0.7, 0.2)  (1, 0, 0.5)");

        let empty = SoftSet::new(vec!["b1".into()], vec![]).unwrap();
        assert_eq!(render_table(&empty), "U\n");
    }
}
