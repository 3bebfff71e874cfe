//! Integer partitions and their per-partition statistics: conjugates, hook
//! lengths, the multiplicity vector nu, and the multiplicity-of-multiplicities
//! vector gamma.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Error building a partition from client input.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("part {0} is not a positive integer")]
    NonPositivePart(String),
    #[error("parts must be weakly decreasing: {0} appears after {1}")]
    NotDecreasing(usize, usize),
}

/// A partition: weakly decreasing sequence of positive integers. The empty
/// sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        for w in parts.windows(2) {
            if w[1] > w[0] {
                return Err(PartitionError::NotDecreasing(w[1], w[0]));
            }
        }
        if let Some(&last) = parts.last() {
            if last == 0 {
                return Err(PartitionError::NonPositivePart("0".into()));
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight n: sum of all parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition: columns of the Ferrers diagram read as rows.
    pub fn conjugate(&self) -> Partition {
        let ncols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=ncols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity of multiplicities threshold: the number of part sizes
    /// occurring at least `k` times. `gamma_geq(1)` is the number of distinct
    /// part sizes.
    pub fn gamma_geq(&self, k: usize) -> usize {
        assert!(k >= 1, "threshold must be at least 1");
        let mut count = 0;
        let mut run = 0;
        let mut prev = 0;
        for &p in &self.parts {
            if p == prev {
                run += 1;
            } else {
                if run >= k {
                    count += 1;
                }
                prev = p;
                run = 1;
            }
        }
        if run >= k {
            count += 1;
        }
        count
    }

    /// All per-partition statistics in one diagram pass.
    pub fn stat_vector(&self) -> StatVector {
        let mut nu = BTreeMap::new();
        for &p in &self.parts {
            *nu.entry(p).or_insert(0) += 1;
        }
        let mut gamma = BTreeMap::new();
        for &m in nu.values() {
            *gamma.entry(m).or_insert(0) += 1;
        }
        let conj = self.conjugate();
        let mut hooks = BTreeMap::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - 1 - j;
                let leg = conj.parts[j] - 1 - i;
                *hooks.entry(arm + leg + 1).or_insert(0) += 1;
            }
        }
        StatVector { nu, gamma, hooks }
    }

    /// The filled Ferrers diagram: row `i` holds the hook lengths of its
    /// cells, left to right. Debugging aid; all formulas consume the counted
    /// form in [`StatVector`].
    pub fn hook_grid(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - 1 - j) + (conj.parts[j] - 1 - i) + 1)
                    .collect()
            })
            .collect()
    }
}

/// Parses the canonical text encoding: comma-separated weakly decreasing
/// positive integers, e.g. `"5,4,3,3,2,2,1"`. The empty string is the empty
/// partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: usize = tok
                .parse()
                .map_err(|_| PartitionError::NonPositivePart(tok.to_string()))?;
            if p == 0 {
                return Err(PartitionError::NonPositivePart(tok.to_string()));
            }
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The statistics of a single partition.
///
/// `nu` maps part size to multiplicity (positive counts only); `gamma` maps
/// multiplicity m to the number of part sizes occurring exactly m times;
/// `hooks` maps hook length to the number of cells with that hook.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatVector {
    pub nu: BTreeMap<usize, usize>,
    pub gamma: BTreeMap<usize, usize>,
    pub hooks: BTreeMap<usize, usize>,
}

impl StatVector {
    /// Multiplicity of part size `i` (0 if absent).
    pub fn nu(&self, i: usize) -> usize {
        self.nu.get(&i).copied().unwrap_or(0)
    }

    /// Number of hooks of length exactly `h`.
    pub fn hook_count(&self, h: usize) -> usize {
        self.hooks.get(&h).copied().unwrap_or(0)
    }

    /// Number of part sizes with multiplicity at least `k`.
    pub fn gamma_geq(&self, k: usize) -> usize {
        assert!(k >= 1, "threshold must be at least 1");
        self.gamma
            .iter()
            .filter(|(&m, _)| m >= k)
            .map(|(_, &c)| c)
            .sum()
    }
}

/// Iterator over all partitions of a fixed weight, in reverse-lexicographic
/// (descending) order on part sequences: first `(n)`, last `(1,...,1)`.
pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        self.next = successor(&cur);
        Some(Partition { parts: cur })
    }
}

/// The partition after `parts` in reverse-lexicographic order: decrement the
/// last part exceeding 1 and redistribute everything after it greedily.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let x = parts[i] - 1;
    let mut next = parts[..i].to_vec();
    next.push(x);
    let mut rem = 1 + (parts.len() - i - 1);
    while rem > 0 {
        let p = rem.min(x);
        next.push(p);
        rem -= p;
    }
    Some(next)
}

/// All partitions of `n` in reverse-lexicographic descending order.
pub fn enumerate_partitions(n: usize) -> PartitionIter {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    PartitionIter { next: Some(first) }
}
