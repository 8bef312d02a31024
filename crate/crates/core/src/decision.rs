//! Object selection by comparison matrix and score.
//!
//! For object `i` and parameter `j`, the matrix entry is `a + d - c`, where
//! `a`, `d` and `c` count the other objects whose truth, indeterminacy and
//! falsity grades under `j` are less than or equal to those of `i`. The
//! score of an object is its row sum, and the selected object is the one with
//! the highest score.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grades::Grade;
use crate::soft_algebra::{Parameter, SoftSet};

/// A soft set restricted to the chooser's parameters, with at least one
/// object and one parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTable {
    set: SoftSet,
}

impl DecisionTable {
    pub fn new(set: SoftSet) -> Result<DecisionTable> {
        if set.parameter_count() == 0 {
            return Err(Error::EmptyParameterSet);
        }
        if set.universe().is_empty() {
            return Err(Error::EmptyUniverse);
        }
        Ok(DecisionTable { set })
    }

    /// Restricts `set` to `choice`, in the given order.
    pub fn from_choice(set: &SoftSet, choice: &[Parameter]) -> Result<DecisionTable> {
        if choice.is_empty() {
            return Err(Error::EmptyParameterSet);
        }
        DecisionTable::new(set.restrict(choice)?)
    }

    pub fn soft_set(&self) -> &SoftSet {
        &self.set
    }

    pub fn objects(&self) -> &[String] {
        self.set.universe()
    }

    pub fn parameters(&self) -> Vec<Parameter> {
        self.set.parameters().cloned().collect()
    }

    pub fn object_count(&self) -> usize {
        self.set.universe().len()
    }

    pub fn parameter_count(&self) -> usize {
        self.set.parameter_count()
    }

    /// Grades of parameter `j` for every object, component `k` (0 = T, 1 = I, 2 = F).
    pub fn column_component(&self, j: usize, k: usize) -> Vec<Grade> {
        self.set.columns()[j]
            .1
            .grades()
            .iter()
            .map(|g| g.components()[k])
            .collect()
    }
}

/// Audit counts for one matrix cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    /// Other objects with truth less than or equal.
    pub a: u32,
    /// Other objects with indeterminacy less than or equal.
    pub d: u32,
    /// Other objects with falsity less than or equal.
    pub c: u32,
}

impl Cell {
    pub fn value(&self) -> i64 {
        i64::from(self.a) + i64::from(self.d) - i64::from(self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonMatrix {
    objects: Vec<String>,
    parameters: Vec<Parameter>,
    /// Row-major: `cells[i][j]` is object `i`, parameter `j`.
    cells: Vec<Vec<Cell>>,
}

impl ComparisonMatrix {
    /// Builds a matrix from precomputed counts; used by independent
    /// implementations that must produce the same type.
    pub fn from_cells(objects: Vec<String>, parameters: Vec<Parameter>, cells: Vec<Vec<Cell>>) -> ComparisonMatrix {
        assert_eq!(cells.len(), objects.len());
        assert!(cells.iter().all(|row| row.len() == parameters.len()));
        ComparisonMatrix {
            objects,
            parameters,
            cells,
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn parameters(&self) -> &[Parameter] {
        &self.parameters
    }

    pub fn cell(&self, object: usize, parameter: usize) -> Cell {
        self.cells[object][parameter]
    }

    pub fn value(&self, object: usize, parameter: usize) -> i64 {
        self.cells[object][parameter].value()
    }

    pub fn row(&self, object: usize) -> Vec<i64> {
        self.cells[object].iter().map(Cell::value).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.objects.len()).map(|i| self.row(i)).collect()
    }

    pub fn column_sum(&self, parameter: usize) -> i64 {
        self.cells.iter().map(|row| row[parameter].value()).sum()
    }

    /// Cells where `reference` disagrees with this matrix. Objects and
    /// parameter labels must line up exactly.
    pub fn diff(&self, reference: &ReferenceMatrix) -> Result<Vec<CellDiff>> {
        if reference.objects != self.objects {
            return Err(Error::ReferenceShapeMismatch(format!(
                "objects {:?} vs {:?}",
                reference.objects, self.objects
            )));
        }
        let labels: Vec<String> = self.parameters.iter().map(Parameter::label).collect();
        if reference.parameters != labels {
            return Err(Error::ReferenceShapeMismatch(format!(
                "parameters {:?} vs {labels:?}",
                reference.parameters
            )));
        }
        if reference.entries.len() != self.objects.len()
            || reference.entries.iter().any(|r| r.len() != labels.len())
        {
            return Err(Error::ReferenceShapeMismatch("entry grid has the wrong size".into()));
        }
        let mut diffs = Vec::new();
        for (i, object) in self.objects.iter().enumerate() {
            for (j, label) in labels.iter().enumerate() {
                let computed = self.value(i, j);
                let printed = reference.entries[i][j];
                if computed != printed {
                    diffs.push(CellDiff {
                        object: object.clone(),
                        parameter: label.clone(),
                        computed,
                        reference: printed,
                        counts: self.cell(i, j),
                    });
                }
            }
        }
        Ok(diffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub object: String,
    pub parameter: String,
    pub computed: i64,
    pub reference: i64,
    pub counts: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScoreDiff {
    pub object: String,
    pub computed: i64,
    pub reference: i64,
}

/// A comparison matrix from an external source, e.g. a published table,
/// used only for diffing against a recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceMatrix {
    pub objects: Vec<String>,
    pub parameters: Vec<String>,
    pub entries: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scores: Option<Vec<i64>>,
}

/// Number of values in `sorted` that are <= `x`.
fn count_at_most(sorted: &[Grade], x: Grade) -> u32 {
    sorted.partition_point(|&v| v <= x) as u32
}

/// Computes the comparison matrix. Each column component is sorted once and
/// counts come from binary search; the object itself is always counted once
/// by the search and is subtracted.
pub fn comparison_matrix(table: &DecisionTable) -> ComparisonMatrix {
    let n = table.object_count();
    let m = table.parameter_count();
    let mut cells = vec![vec![Cell { a: 0, d: 0, c: 0 }; m]; n];
    for j in 0..m {
        let mut counts = [vec![0u32; n], vec![0u32; n], vec![0u32; n]];
        for (k, out) in counts.iter_mut().enumerate() {
            let column = table.column_component(j, k);
            let mut sorted = column.clone();
            sorted.sort_unstable();
            for (i, &x) in column.iter().enumerate() {
                out[i] = count_at_most(&sorted, x) - 1;
            }
        }
        for (i, row) in cells.iter_mut().enumerate() {
            row[j] = Cell {
                a: counts[0][i],
                d: counts[1][i],
                c: counts[2][i],
            };
        }
    }
    ComparisonMatrix {
        objects: table.objects().to_vec(),
        parameters: table.parameters(),
        cells,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScoreVector {
    objects: Vec<String>,
    scores: Vec<i64>,
    /// Object indices by descending score; ties keep universe order.
    ranking: Vec<usize>,
}

impl ScoreVector {
    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn scores(&self) -> &[i64] {
        &self.scores
    }

    pub fn score_of(&self, object: &str) -> Option<i64> {
        self.objects
            .iter()
            .position(|o| o == object)
            .map(|i| self.scores[i])
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn max(&self) -> Option<i64> {
        self.scores.iter().copied().max()
    }

    /// All objects attaining the maximum score, in universe order.
    pub fn leaders(&self) -> Vec<usize> {
        match self.max() {
            Some(best) => (0..self.scores.len()).filter(|&i| self.scores[i] == best).collect(),
            None => Vec::new(),
        }
    }

    pub fn diff(&self, reference: &[i64]) -> Result<Vec<ScoreDiff>> {
        if reference.len() != self.scores.len() {
            return Err(Error::ReferenceShapeMismatch(format!(
                "{} reference scores for {} objects",
                reference.len(),
                self.scores.len()
            )));
        }
        Ok(self
            .objects
            .iter()
            .zip(self.scores.iter().zip(reference))
            .filter(|(_, (c, r))| c != r)
            .map(|(o, (&computed, &reference))| ScoreDiff {
                object: o.clone(),
                computed,
                reference,
            })
            .collect())
    }
}

pub fn scores(matrix: &ComparisonMatrix) -> ScoreVector {
    let scores: Vec<i64> = (0..matrix.objects.len())
        .map(|i| matrix.cells[i].iter().map(Cell::value).sum())
        .collect();
    let mut ranking: Vec<usize> = (0..scores.len()).collect();
    // Stable sort keeps universe order among equal scores.
    ranking.sort_by(|&x, &y| scores[y].cmp(&scores[x]));
    ScoreVector {
        objects: matrix.objects.clone(),
        scores,
        ranking,
    }
}

/// Outcome of the selection procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub table: DecisionTable,
    pub matrix: ComparisonMatrix,
    pub scores: ScoreVector,
    /// Index of the selected object: the earliest among the maxima.
    pub best: usize,
    /// Every object sharing the maximum score, in universe order.
    pub tied: Vec<usize>,
}

impl Selection {
    pub fn best_object(&self) -> &str {
        &self.table.objects()[self.best]
    }

    pub fn best_score(&self) -> i64 {
        self.scores.scores()[self.best]
    }

    pub fn is_tie(&self) -> bool {
        self.tied.len() > 1
    }
}

/// Serializable summary of a selection, optionally with the cells and scores
/// where a reference matrix disagrees with the recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionReport {
    pub objects: Vec<String>,
    pub parameters: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    pub counts: Vec<Vec<Cell>>,
    pub scores: Vec<i64>,
    pub ranking: Vec<String>,
    pub selected: String,
    pub selected_score: i64,
    pub tie: bool,
    pub tied: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub errata: Option<Errata>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Errata {
    pub cells: Vec<CellDiff>,
    pub scores: Vec<ScoreDiff>,
}

impl Selection {
    pub fn report(&self, reference: Option<&ReferenceMatrix>) -> Result<DecisionReport> {
        let objects = self.table.objects().to_vec();
        let errata = match reference {
            Some(r) => Some(Errata {
                cells: self.matrix.diff(r)?,
                scores: match &r.scores {
                    Some(s) => self.scores.diff(s)?,
                    None => Vec::new(),
                },
            }),
            None => None,
        };
        Ok(DecisionReport {
            parameters: self.matrix.parameters().iter().map(Parameter::label).collect(),
            matrix: self.matrix.rows(),
            counts: self.matrix.cells.clone(),
            scores: self.scores.scores().to_vec(),
            ranking: self.scores.ranking().iter().map(|&i| objects[i].clone()).collect(),
            selected: self.best_object().to_string(),
            selected_score: self.best_score(),
            tie: self.is_tie(),
            tied: self.tied.iter().map(|&i| objects[i].clone()).collect(),
            objects,
            errata,
        })
    }
}

/// Restricts `soft_set` to the choice parameters, scores every object and
/// selects the best one.
pub fn select_best(soft_set: &SoftSet, choice: &[Parameter]) -> Result<Selection> {
    let table = DecisionTable::from_choice(soft_set, choice)?;
    let matrix = comparison_matrix(&table);
    let scores = scores(&matrix);
    let tied = scores.leaders();
    let best = tied[0];
    Ok(Selection {
        table,
        matrix,
        scores,
        best,
        tied,
    })
}
