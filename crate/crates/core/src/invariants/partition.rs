//! Partition data and the dimension formula.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An n-tuple of partitions of a common rank `r`, one per puncture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTuple {
    r: u32,
    partitions: Vec<Vec<u32>>,
}

impl PartitionTuple {
    pub fn new(partitions: Vec<Vec<u32>>) -> Result<Self> {
        let first = partitions
            .first()
            .ok_or_else(|| Error::InvalidPartition("need at least one partition".into()))?;
        let r: u32 = first.iter().sum();
        if r == 0 {
            return Err(Error::InvalidPartition("rank must be positive".into()));
        }
        for (i, p) in partitions.iter().enumerate() {
            if p.is_empty() || p.contains(&0) {
                return Err(Error::InvalidPartition(format!(
                    "partition {} has a zero or missing part",
                    i + 1
                )));
            }
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "partition {} is not weakly decreasing",
                    i + 1
                )));
            }
            let s: u32 = p.iter().sum();
            if s != r {
                return Err(Error::InvalidPartition(format!(
                    "partition {} sums to {s}, expected {r}",
                    i + 1
                )));
            }
        }
        Ok(PartitionTuple { r, partitions })
    }

    /// `n` copies of `(1,1)`.
    pub fn all_ones_rank2(n: usize) -> Self {
        PartitionTuple::new(vec![vec![1, 1]; n]).expect("valid")
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.partitions.len()
    }

    pub fn partitions(&self) -> &[Vec<u32>] {
        &self.partitions
    }
}

/// Parses `"a,b;c,d;…"`: partitions separated by `;`, parts by `,`.
impl FromStr for PartitionTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(';')
            .map(|p| {
                p.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::InvalidPartition(format!("bad part `{x}`")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionTuple::new(parts)
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .partitions
            .iter()
            .map(|p| p.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", s.join(";"))
    }
}

/// `d = r²(2g − 2 + n) − Σ (μʲᵢ)² + 2 − 2g`. May be negative.
///
/// ```
/// use charvar::invariants::{dimension, PartitionTuple};
/// let mu: PartitionTuple = "1,1;1,1;1,1;1,1".parse().unwrap();
/// assert_eq!(dimension(0, &mu), 2);
/// ```
pub fn dimension(g: u32, mu: &PartitionTuple) -> i64 {
    let r = i64::from(mu.r);
    let g = i64::from(g);
    let n = mu.n() as i64;
    let squares: i64 = mu
        .partitions
        .iter()
        .flatten()
        .map(|&m| i64::from(m) * i64::from(m))
        .sum();
    r * r * (2 * g - 2 + n) - squares + 2 - 2 * g
}

fn dim2_cases() -> [Vec<Vec<u32>>; 4] {
    [
        vec![vec![1, 1]; 4],
        vec![vec![1, 1, 1]; 3],
        vec![vec![2, 2], vec![1, 1, 1, 1], vec![1, 1, 1, 1]],
        vec![vec![3, 3], vec![2, 2, 2], vec![1; 6]],
    ]
}

/// Whether `mu` is, up to reordering, one of the four genus-0 tuples of
/// dimension 2.
pub fn is_dim2_case(mu: &PartitionTuple) -> bool {
    let mut given = mu.partitions.clone();
    given.sort();
    dim2_cases().into_iter().any(|mut c| {
        c.sort();
        c == given
    })
}

/// The four tuples recognized by [`is_dim2_case`].
pub fn dim2_list() -> Vec<PartitionTuple> {
    dim2_cases()
        .into_iter()
        .map(|c| PartitionTuple::new(c).expect("valid"))
        .collect()
}
