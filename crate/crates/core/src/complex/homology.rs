use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::algebra::{smith_normal_form, Matrix};
use crate::complex::SimplicialComplex;

/// Reduced integral homology `H̃_k ≅ ℤ^{β_k} ⊕ ⨁ ℤ/t` for `k = 0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub reduced_betti: Vec<usize>,
    /// Invariant factors greater than 1, per degree.
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    /// The profile of `S^d`.
    pub fn sphere(d: usize) -> Self {
        let mut reduced_betti = vec![0; d + 1];
        reduced_betti[d] = 1;
        HomologyProfile {
            reduced_betti,
            torsion: vec![Vec::new(); d + 1],
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

// numbers when they fit in a u64, decimal strings otherwise
fn serialize_torsion<S: Serializer>(t: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let values: Vec<Vec<serde_json::Value>> = t
        .iter()
        .map(|deg| {
            deg.iter()
                .map(|d| match d.to_u64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::from(d.to_string()),
                })
                .collect()
        })
        .collect();
    values.serialize(s)
}

/// Boundary map `∂_k : C_k → C_{k−1}` on sorted faces; `∂_0` is the
/// augmentation `C_0 → ℤ`.
fn boundary(k: usize, lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Matrix<BigInt> {
    if k == 0 {
        return Matrix::new(1, upper.len(), vec![BigInt::one(); upper.len()]).expect("1xn");
    }
    let mut m = Matrix::zeros(lower.len(), upper.len());
    let index: BTreeMap<&Vec<usize>, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    for (j, face) in upper.iter().enumerate() {
        for drop in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(drop);
            let sign = if drop % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            *m.get_mut(index[&sub], j) = sign;
        }
    }
    m
}

/// Reduced homology from Smith normal forms of the boundary maps.
///
/// ```
/// use charvar::complex::{build_complex, homology};
/// let circle = build_complex(&["A", "B", "C"], &[&["A", "B"], &["B", "C"], &["C", "A"]]).unwrap();
/// assert_eq!(homology(&circle).reduced_betti, vec![0, 1]);
/// ```
pub fn homology(c: &SimplicialComplex) -> HomologyProfile {
    let dim = c.dim();
    if dim < 0 {
        return HomologyProfile {
            reduced_betti: Vec::new(),
            torsion: Vec::new(),
        };
    }
    let dim = dim as usize;
    let faces: Vec<Vec<Vec<usize>>> = (0..=dim).map(|k| c.faces(k)).collect();
    // rank and invariant factors of ∂_k for k = 0..=dim+1
    let mut ranks = Vec::with_capacity(dim + 2);
    let mut factors = Vec::with_capacity(dim + 2);
    for k in 0..=dim + 1 {
        if k == dim + 1 {
            ranks.push(0);
            factors.push(Vec::new());
            continue;
        }
        let lower: &[Vec<usize>] = if k == 0 { &[] } else { &faces[k - 1] };
        let m = boundary(k, lower, &faces[k]);
        let (diag, rank) = if m.rows() == 0 || m.cols() == 0 {
            (Vec::new(), 0)
        } else {
            smith_normal_form(&m)
        };
        ranks.push(rank);
        factors.push(diag);
    }
    let reduced_betti = (0..=dim).map(|k| faces[k].len() - ranks[k] - ranks[k + 1]).collect();
    let torsion = (0..=dim)
        .map(|k| factors[k + 1].iter().filter(|d| !d.is_one()).cloned().collect())
        .collect();
    HomologyProfile { reduced_betti, torsion }
}

/// Homology, pseudomanifold and link checks for a triangulated `S^dim`.
///
/// True iff the reduced homology is that of `S^dim`, the complex is pure of
/// dimension `dim`, every `(dim − 1)`-face lies in exactly two facets, and
/// every vertex link passes the same test one dimension lower (for `dim = 2`
/// this says each link is a single cycle).
pub fn certify_sphere(c: &SimplicialComplex, dim: usize) -> bool {
    if c.dim() != dim as i64 || !c.is_pure() || homology(c) != HomologyProfile::sphere(dim) {
        return false;
    }
    if dim == 0 {
        return c.vertices().len() == 2;
    }
    let mut incidence: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for f in c.facets() {
        for drop in 0..f.len() {
            let mut sub = f.clone();
            sub.remove(drop);
            *incidence.entry(sub).or_insert(0) += 1;
        }
    }
    if incidence.values().any(|&n| n != 2) {
        return false;
    }
    dim == 1 || (0..c.vertices().len()).all(|v| certify_sphere(&c.link(&[v]), dim - 1))
}
