use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite abstract simplicial complex, stored by its facets.
///
/// Facets are sorted vertex-index lists, sorted lexicographically, and form
/// an antichain. Vertices that lie in no given facet become 0-dimensional
/// facets, so every listed vertex is a face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

/// `{ "vertices": [labels], "facets": [[indices]] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;
    fn try_from(j: ComplexJson) -> Result<Self> {
        SimplicialComplex::from_indices(j.vertices, j.facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(c: SimplicialComplex) -> Self {
        ComplexJson {
            vertices: c.vertices,
            facets: c.facets,
        }
    }
}

/// Builds a complex from vertex labels and facets given by label.
///
/// ```
/// use charvar::complex::build_complex;
/// let c = build_complex(&["A", "B", "C"], &[&["A", "B", "C"], &["A", "B"]]).unwrap();
/// assert_eq!(c.facets().len(), 1);
/// assert_eq!(c.dim(), 2);
/// ```
pub fn build_complex(vertices: &[&str], facets: &[&[&str]]) -> Result<SimplicialComplex> {
    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let facets = facets
        .iter()
        .map(|f| {
            f.iter()
                .map(|v| {
                    index
                        .get(v)
                        .copied()
                        .ok_or_else(|| Error::InvalidComplex(format!("unknown vertex {v}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_indices(vertices.iter().map(|v| v.to_string()).collect(), facets)
}

impl SimplicialComplex {
    pub fn from_indices(vertices: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut sets: Vec<BTreeSet<usize>> = Vec::with_capacity(facets.len());
        for f in facets {
            if f.is_empty() {
                return Err(Error::InvalidComplex("empty facet".into()));
            }
            if let Some(&bad) = f.iter().find(|&&i| i >= vertices.len()) {
                return Err(Error::InvalidComplex(format!("vertex index {bad} out of range")));
            }
            sets.push(f.into_iter().collect());
        }
        let covered: BTreeSet<usize> = sets.iter().flatten().copied().collect();
        sets.extend((0..vertices.len()).filter(|i| !covered.contains(i)).map(|i| BTreeSet::from([i])));
        Ok(SimplicialComplex {
            vertices,
            facets: antichain(sets),
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Facets as label lists.
    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&i| self.vertices[i].as_str()).collect())
            .collect()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// Dimension; `-1` for the empty complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.len() as i64 - 1 == d)
    }

    /// All nonempty faces of dimension `k`, sorted.
    pub fn faces(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for f in self.facets.iter().filter(|f| f.len() > k) {
            for sub in subsets_of_size(f, k + 1) {
                out.insert(sub);
            }
        }
        out.into_iter().collect()
    }

    /// `f_k` for `k = 0..=dim`.
    pub fn face_counts(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.faces(k as usize).len()).collect()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| face.iter().all(|v| f.contains(v)))
    }

    /// `Σ (−1)^k f_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Cone over two fresh apexes; the apexes are not joined to each other.
    pub fn suspension(&self, apex1: &str, apex2: &str) -> Result<SimplicialComplex> {
        for a in [apex1, apex2] {
            if self.vertex_index(a).is_some() {
                return Err(Error::DuplicateLabel(a.to_string()));
            }
        }
        if apex1 == apex2 {
            return Err(Error::DuplicateLabel(apex1.to_string()));
        }
        let n = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.push(apex1.to_string());
        vertices.push(apex2.to_string());
        let facets = if self.facets.is_empty() {
            vec![vec![n], vec![n + 1]]
        } else {
            [n, n + 1]
                .iter()
                .flat_map(|&apex| {
                    self.facets.iter().map(move |f| {
                        let mut g = f.clone();
                        g.push(apex);
                        g
                    })
                })
                .collect()
        };
        SimplicialComplex::from_indices(vertices, facets)
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`, on the vertices it uses.
    pub fn link(&self, face: &[usize]) -> SimplicialComplex {
        let rest: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .filter(|f| face.iter().all(|v| f.contains(v)))
            .map(|f| f.iter().copied().filter(|v| !face.contains(v)).collect::<BTreeSet<_>>())
            .filter(|s| !s.is_empty())
            .collect();
        let used: BTreeSet<usize> = rest.iter().flatten().copied().collect();
        let relabel: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let vertices = used.iter().map(|&v| self.vertices[v].clone()).collect();
        let facets = rest
            .into_iter()
            .map(|s| s.into_iter().map(|v| relabel[&v]).collect())
            .collect();
        SimplicialComplex::from_indices(vertices, facets).expect("link of a valid complex")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complexes serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

fn antichain(sets: Vec<BTreeSet<usize>>) -> Vec<Vec<usize>> {
    let mut sets: Vec<BTreeSet<usize>> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<BTreeSet<usize>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    let mut out: Vec<Vec<usize>> = kept.into_iter().map(|s| s.into_iter().collect()).collect();
    out.sort();
    out
}

pub(crate) fn subsets_of_size(set: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(set: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..set.len() {
            current.push(set[i]);
            go(set, k, i + 1, current, out);
            current.pop();
        }
    }
    go(set, k, 0, &mut current, &mut out);
    out
}

/// A random complex on at most `max_vertices` vertices with facets of
/// dimension at most `max_dim`.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize, max_dim: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let all: Vec<usize> = (0..n).collect();
    let facet_count = rng.gen_range(1..=2 * n);
    let facets = (0..facet_count)
        .map(|_| {
            let size = rng.gen_range(1..=(max_dim + 1).min(n));
            all.choose_multiple(rng, size).copied().collect()
        })
        .collect();
    SimplicialComplex::from_indices(vertices, facets).expect("indices are in range")
}
