use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// A partition `C_1 ∪ … ∪ C_k ∪ C` of the vertex set for local switching.
/// `cells` are the `C_i`; `rest` is `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingPartition {
    pub cells: Vec<Vec<usize>>,
    pub rest: Vec<usize>,
}

impl SwitchingPartition {
    pub fn new(cells: Vec<Vec<usize>>, rest: Vec<usize>) -> Self {
        Self { cells, rest }
    }

    /// Checks that the sets are nonempty cells covering `0..n` exactly once.
    pub fn check(&self, n: usize) -> Result<(), GraphError> {
        let mut seen = vec![false; n];
        for (i, cell) in self.cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(GraphError::InvalidPartition(format!("cell {i} is empty")));
            }
        }
        for &v in self.cells.iter().flatten().chain(&self.rest) {
            if v >= n {
                return Err(GraphError::InvalidPartition(format!(
                    "vertex {v} out of range for n = {n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::InvalidPartition(format!(
                    "vertex {v} listed twice"
                )));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} not covered"
            )));
        }
        Ok(())
    }

    /// Cell index of every vertex; `rest` vertices map to `None`.
    pub fn cell_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = Some(i);
            }
        }
        out
    }

    /// Applies a relabeling `v ↦ perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let map = |s: &Vec<usize>| s.iter().map(|&v| perm[v]).collect();
        Self {
            cells: self.cells.iter().map(map).collect(),
            rest: map(&self.rest),
        }
    }
}

/// The first switching condition found to fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "camelCase")]
pub enum SwitchingViolation {
    /// Two vertices of cell `cell` see different numbers of neighbors in
    /// cell `other`.
    UnequalCellCounts {
        cell: usize,
        other: usize,
        u: usize,
        v: usize,
    },
    /// A rest vertex sees neither none, half, nor all of a cell.
    RestNotZeroHalfAll {
        vertex: usize,
        cell: usize,
        count: usize,
    },
    /// A rest vertex does not see exactly half of a cell.
    RestNotHalf {
        vertex: usize,
        cell: usize,
        count: usize,
    },
    /// A cell vertex does not see exactly half of the rest.
    CellNotHalfRest { vertex: usize, count: usize },
}

impl fmt::Display for SwitchingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::UnequalCellCounts { cell, other, u, v } => write!(
                f,
                "vertices {u} and {v} of cell {cell} have different neighbor counts in cell {other}"
            ),
            Self::RestNotZeroHalfAll {
                vertex,
                cell,
                count,
            } => write!(
                f,
                "rest vertex {vertex} has {count} neighbors in cell {cell} (need none, half or all)"
            ),
            Self::RestNotHalf {
                vertex,
                cell,
                count,
            } => write!(
                f,
                "rest vertex {vertex} has {count} neighbors in cell {cell} (need exactly half)"
            ),
            Self::CellNotHalfRest { vertex, count } => write!(
                f,
                "cell vertex {vertex} has {count} neighbors in the rest (need exactly half)"
            ),
        }
    }
}

/// Outcome of checking a partition against both sets of switching
/// conditions. `None` means the conditions hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SwitchingReport {
    pub gm_violation: Option<SwitchingViolation>,
    pub degree_violation: Option<SwitchingViolation>,
}

impl SwitchingReport {
    /// Godsil–McKay conditions: switching preserves the adjacency spectrum.
    pub fn gm_switchable(&self) -> bool {
        self.gm_violation.is_none()
    }

    /// The stronger conditions under which switching preserves degree
    /// similarity.
    pub fn degree_switchable(&self) -> bool {
        self.degree_violation.is_none()
    }
}

fn count_in(g: &Graph, v: usize, set: &[usize]) -> usize {
    set.iter().filter(|&&w| g.has_edge(v, w)).count()
}

fn equal_cell_counts(g: &Graph, pi: &SwitchingPartition) -> Option<SwitchingViolation> {
    for (i, cell) in pi.cells.iter().enumerate() {
        for (j, other) in pi.cells.iter().enumerate() {
            let u = cell[0];
            let base = count_in(g, u, other);
            if let Some(&v) = cell[1..].iter().find(|&&v| count_in(g, v, other) != base) {
                return Some(SwitchingViolation::UnequalCellCounts {
                    cell: i,
                    other: j,
                    u,
                    v,
                });
            }
        }
    }
    None
}

fn gm_violation(g: &Graph, pi: &SwitchingPartition) -> Option<SwitchingViolation> {
    for &v in &pi.rest {
        for (i, cell) in pi.cells.iter().enumerate() {
            let count = count_in(g, v, cell);
            let ok = count == 0 || count == cell.len() || 2 * count == cell.len();
            if !ok {
                return Some(SwitchingViolation::RestNotZeroHalfAll {
                    vertex: v,
                    cell: i,
                    count,
                });
            }
        }
    }
    equal_cell_counts(g, pi)
}

fn degree_violation(g: &Graph, pi: &SwitchingPartition) -> Option<SwitchingViolation> {
    for &v in &pi.rest {
        for (i, cell) in pi.cells.iter().enumerate() {
            let count = count_in(g, v, cell);
            if 2 * count != cell.len() {
                return Some(SwitchingViolation::RestNotHalf {
                    vertex: v,
                    cell: i,
                    count,
                });
            }
        }
    }
    for &v in pi.cells.iter().flatten() {
        let count = count_in(g, v, &pi.rest);
        if 2 * count != pi.rest.len() {
            return Some(SwitchingViolation::CellNotHalfRest { vertex: v, count });
        }
    }
    equal_cell_counts(g, pi)
}

pub fn validate_switching(
    g: &Graph,
    pi: &SwitchingPartition,
) -> Result<SwitchingReport, GraphError> {
    pi.check(g.n())?;
    Ok(SwitchingReport {
        gm_violation: gm_violation(g, pi),
        degree_violation: degree_violation(g, pi),
    })
}

/// Local switching `X^π`: every rest vertex that sees exactly half of a cell
/// has its neighborhood within that cell complemented. Vertex numbering is
/// unchanged.
pub fn local_switch(g: &Graph, pi: &SwitchingPartition) -> Result<Graph, GraphError> {
    let report = validate_switching(g, pi)?;
    if let Some(v) = report.gm_violation {
        return Err(GraphError::NotSwitchable(v));
    }
    let mut out = g.clone();
    for &v in &pi.rest {
        for cell in &pi.cells {
            if 2 * count_in(g, v, cell) == cell.len() {
                for &w in cell {
                    out.set(v, w, !g.has_edge(v, w));
                }
            }
        }
    }
    Ok(out)
}
