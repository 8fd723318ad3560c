//! The boundary complexes for n = 4 and n = 5 and the table of pairwise,
//! triple and quadruple intersections of boundary components they come from.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::simplicial::subsets_of_size;
use crate::complex::{build_complex, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryCase {
    /// Three lines `E₁, E₂, E₃` forming a triangle.
    N4,
    /// The 8-vertex triangulated 2-sphere spanned by `E₁…E₄` and `ex₁₃±, ex₂₄±`.
    N5Equator,
    /// The equator suspended over `ex₁`, `ex₂`.
    N5Full,
}

impl BoundaryCase {
    pub const ALL: [BoundaryCase; 3] = [BoundaryCase::N4, BoundaryCase::N5Equator, BoundaryCase::N5Full];

    /// Dimension of the sphere it triangulates.
    pub fn sphere_dim(self) -> usize {
        match self {
            BoundaryCase::N4 => 1,
            BoundaryCase::N5Equator => 2,
            BoundaryCase::N5Full => 3,
        }
    }
}

impl FromStr for BoundaryCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "n4" => Ok(BoundaryCase::N4),
            "n5_equator" => Ok(BoundaryCase::N5Equator),
            "n5_full" => Ok(BoundaryCase::N5Full),
            _ => Err(Error::UnknownCase(s.to_string())),
        }
    }
}

impl fmt::Display for BoundaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryCase::N4 => "n4",
            BoundaryCase::N5Equator => "n5-equator",
            BoundaryCase::N5Full => "n5-full",
        })
    }
}

const N5_EQUATOR_VERTICES: [&str; 8] = ["E1", "E2", "E3", "E4", "ex13p", "ex13m", "ex24p", "ex24m"];

// The first four are spelled out for ex13+; the rest follow by the same
// argument for ex13−, ex24+, ex24−.
const N5_EQUATOR_TRIANGLES: [[&str; 3]; 12] = [
    ["E1", "E2", "ex13p"],
    ["E2", "E3", "ex13p"],
    ["E1", "ex13p", "ex13m"],
    ["E3", "ex13p", "ex13m"],
    ["E3", "E4", "ex13m"],
    ["E4", "E1", "ex13m"],
    ["E1", "E2", "ex24p"],
    ["E4", "E1", "ex24p"],
    ["E2", "ex24p", "ex24m"],
    ["E4", "ex24p", "ex24m"],
    ["E2", "E3", "ex24m"],
    ["E3", "E4", "ex24m"],
];

pub fn boundary_complex(case: BoundaryCase) -> SimplicialComplex {
    match case {
        BoundaryCase::N4 => build_complex(
            &["E1", "E2", "E3"],
            &[&["E1", "E2"], &["E2", "E3"], &["E3", "E1"]],
        )
        .expect("valid fixture"),
        BoundaryCase::N5Equator => {
            let facets: Vec<&[&str]> = N5_EQUATOR_TRIANGLES.iter().map(|t| &t[..]).collect();
            build_complex(&N5_EQUATOR_VERTICES, &facets).expect("valid fixture")
        }
        BoundaryCase::N5Full => boundary_complex(BoundaryCase::N5Equator)
            .suspension("ex1", "ex2")
            .expect("apexes are fresh"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableCase {
    N4,
    N5,
}

impl FromStr for TableCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n4" => Ok(TableCase::N4),
            "n5" => Ok(TableCase::N5),
            _ => Err(Error::UnknownCase(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntersectionStatus {
    NonemptyIrreducible,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionEntry {
    pub vertices: Vec<String>,
    pub status: IntersectionStatus,
}

/// Pairs of boundary components of the n = 5 compactification whose
/// intersection is nonempty and irreducible; every other pair is empty
/// (`E₁∩E₃`, `E₂∩E₄` are separated by the blow-ups, `ex₁₃± ∩ ex₂₄±` and
/// `ex₁ ∩ ex₂` do not meet, and `ex₁₃⁺∩E₄`, `ex₁₃⁻∩E₂`, `ex₂₄⁺∩E₃`,
/// `ex₂₄⁻∩E₁` are empty).
const N5_PAIRS: [[&str; 2]; 18] = [
    ["E1", "E2"],
    ["E2", "E3"],
    ["E3", "E4"],
    ["E4", "E1"],
    ["E1", "ex13p"],
    ["E1", "ex13m"],
    ["E3", "ex13p"],
    ["E3", "ex13m"],
    ["E2", "ex24p"],
    ["E2", "ex24m"],
    ["E4", "ex24p"],
    ["E4", "ex24m"],
    ["ex13p", "E2"],
    ["ex13m", "E4"],
    ["ex24p", "E1"],
    ["ex24m", "E3"],
    ["ex13p", "ex13m"],
    ["ex24p", "ex24m"],
];

fn same_set(a: &[&str], b: &[&str]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

fn n5_status(set: &[&str]) -> bool {
    let apexes: Vec<&&str> = set.iter().filter(|v| **v == "ex1" || **v == "ex2").collect();
    let rest: Vec<&str> = set.iter().copied().filter(|v| *v != "ex1" && *v != "ex2").collect();
    match apexes.len() {
        // ex₁ and ex₂ never meet
        2.. => false,
        // ex_j meets every component, and a tuple with ex_j is nonempty
        // exactly when the rest of it is
        1 => rest.len() == 1 || n5_status(&rest),
        _ => match rest.len() {
            2 => N5_PAIRS.iter().any(|p| same_set(p, &rest)),
            3 => N5_EQUATOR_TRIANGLES.iter().any(|t| same_set(t, &rest)),
            _ => false,
        },
    }
}

/// Status of every set of 2 to `max` components (`max = 3` for n = 4 and
/// `4` for n = 5), in lexicographic order of vertex positions.
pub fn intersection_table(case: TableCase) -> Vec<IntersectionEntry> {
    let (vertices, max): (Vec<&str>, usize) = match case {
        TableCase::N4 => (vec!["E1", "E2", "E3"], 3),
        TableCase::N5 => {
            let mut v = N5_EQUATOR_VERTICES.to_vec();
            v.extend(["ex1", "ex2"]);
            (v, 4)
        }
    };
    let idx: Vec<usize> = (0..vertices.len()).collect();
    let mut out = Vec::new();
    for size in 2..=max {
        for sub in subsets_of_size(&idx, size) {
            let labels: Vec<&str> = sub.iter().map(|&i| vertices[i]).collect();
            let nonempty = match case {
                // three lines of a triangle: each pair meets, no common point
                TableCase::N4 => size == 2,
                TableCase::N5 => n5_status(&labels),
            };
            out.push(IntersectionEntry {
                vertices: labels.iter().map(|s| s.to_string()).collect(),
                status: if nonempty {
                    IntersectionStatus::NonemptyIrreducible
                } else {
                    IntersectionStatus::Empty
                },
            });
        }
    }
    out
}

/// Disagreements between the table and the complex: an entry is a face of
/// the complex iff it is marked nonempty, and nonempty entries are closed
/// under taking subsets of size at least 2. Empty means consistent.
pub fn table_consistency(case: TableCase) -> Vec<String> {
    let complex = boundary_complex(match case {
        TableCase::N4 => BoundaryCase::N4,
        TableCase::N5 => BoundaryCase::N5Full,
    });
    let table = intersection_table(case);
    let nonempty = |labels: &[String]| {
        table
            .iter()
            .find(|e| e.vertices.len() == labels.len() && labels.iter().all(|l| e.vertices.contains(l)))
            .map(|e| e.status == IntersectionStatus::NonemptyIrreducible)
    };
    let mut problems = Vec::new();
    for e in &table {
        let idx: Vec<usize> = e
            .vertices
            .iter()
            .map(|l| complex.vertex_index(l).expect("table labels are complex vertices"))
            .collect();
        let marked = e.status == IntersectionStatus::NonemptyIrreducible;
        if marked != complex.contains_face(&idx) {
            problems.push(format!("{:?}: table says {:?}", e.vertices, e.status));
        }
        if marked {
            for size in 2..e.vertices.len() {
                let positions: Vec<usize> = (0..e.vertices.len()).collect();
                for sub in subsets_of_size(&positions, size) {
                    let labels: Vec<String> = sub.iter().map(|&i| e.vertices[i].clone()).collect();
                    if nonempty(&labels) != Some(true) {
                        problems.push(format!("{:?} is nonempty but {:?} is not", e.vertices, labels));
                    }
                }
            }
        }
    }
    let max = table.iter().map(|e| e.vertices.len()).max().unwrap_or(0) as i64;
    if complex.dim() + 1 > max {
        problems.push(format!("complex has faces with more than {max} vertices"));
    }
    problems
}
