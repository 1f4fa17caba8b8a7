//! Partitions of a positive integer and the parity classes of their parts.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A partition `[d_1^{t_1}, …, d_s^{t_s}]` stored as `(d, t_d)` pairs with `d`
/// strictly increasing and every `t_d ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<(usize, usize)>,
}

impl Partition {
    /// Builds a partition from `(d, t_d)` pairs in any order.
    ///
    /// Fails on an empty list, a zero part or multiplicity, or a repeated part.
    pub fn new(mut parts: Vec<(usize, usize)>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::InvalidInput("a partition needs at least one part".into()));
        }
        parts.sort_unstable();
        for w in parts.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(PartitionError::InvalidInput(format!("part {} listed twice", w[0].0)));
            }
        }
        if let Some(&(d, t)) = parts.iter().find(|&&(d, t)| d == 0 || t == 0) {
            return Err(PartitionError::InvalidInput(format!("part {d} with multiplicity {t} is not allowed")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a list of row lengths, e.g. `[3, 1, 1]`.
    pub fn from_rows(rows: &[usize]) -> Result<Self, PartitionError> {
        let mut parts: Vec<(usize, usize)> = Vec::new();
        let mut sorted = rows.to_vec();
        sorted.sort_unstable();
        for d in sorted {
            match parts.last_mut() {
                Some((last, t)) if *last == d => *t += 1,
                _ => parts.push((d, 1)),
            }
        }
        Partition::new(parts)
    }

    /// The `(d, t_d)` pairs in ascending `d`.
    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    /// The integer being partitioned, `Σ t_d·d`.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&(d, t)| d * t).sum()
    }

    /// The multiplicity `t_d`, zero when `d` is not a part.
    pub fn multiplicity(&self, d: usize) -> usize {
        self.parts.iter().find(|&&(e, _)| e == d).map_or(0, |&(_, t)| t)
    }

    /// All rows in ascending order, each part repeated by its multiplicity.
    pub fn rows(&self) -> Vec<usize> {
        self.parts.iter().flat_map(|&(d, t)| std::iter::repeat_n(d, t)).collect()
    }

    /// The largest part.
    pub fn largest(&self) -> usize {
        self.parts.last().map_or(0, |&(d, _)| d)
    }

    /// Whether this is `[1^n]`.
    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].0 == 1
    }
}

impl Ord for Partition {
    /// Lexicographic order on the ascending row lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows().cmp(&other.rows())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Comma-joined `d^t` tokens in ascending `d`, e.g. `1^2,3^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.parts.iter().map(|(d, t)| format!("{d}^{t}")).collect();
        f.write_str(&tokens.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses comma-separated `d^t` tokens; a bare `d` means `d^1`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| PartitionError::Parse { text: text.to_string(), reason };
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let (d, t) = match token.split_once('^') {
                Some((d, t)) => (d, t),
                None => (token, "1"),
            };
            let d: usize = d.trim().parse().map_err(|_| err(format!("bad part {d:?}")))?;
            let t: usize = t.trim().parse().map_err(|_| err(format!("bad multiplicity {t:?}")))?;
            parts.push((d, t));
        }
        Partition::new(parts).map_err(|e| err(e.to_string()))
    }
}

/// All partitions of `n` in lexicographic order of their ascending row lists.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>, PartitionError> {
    if n == 0 {
        return Err(PartitionError::InvalidInput("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut rows = Vec::new();
    ascending_rows(n, 1, &mut rows, &mut out);
    Ok(out)
}

fn ascending_rows(remaining: usize, min: usize, rows: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_rows(rows).expect("nonempty rows of positive parts"));
        return;
    }
    for first in min..=remaining {
        let rest = remaining - first;
        if rest != 0 && rest < first {
            continue;
        }
        rows.push(first);
        ascending_rows(rest, first, rows, out);
        rows.pop();
    }
}

/// The parity classes of the distinct parts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PartClasses {
    /// All distinct parts.
    pub n_d: BTreeSet<usize>,
    /// Even parts.
    pub e_d: BTreeSet<usize>,
    /// Odd parts.
    pub o_d: BTreeSet<usize>,
    /// Odd parts congruent to 1 mod 4.
    pub o1_d: BTreeSet<usize>,
    /// Odd parts congruent to 3 mod 4.
    pub o3_d: BTreeSet<usize>,
}

pub fn classify(p: &Partition) -> PartClasses {
    let mut c = PartClasses::default();
    for &(d, _) in p.parts() {
        c.n_d.insert(d);
        if d % 2 == 0 {
            c.e_d.insert(d);
        } else {
            c.o_d.insert(d);
            if d % 4 == 1 {
                c.o1_d.insert(d);
            } else {
                c.o3_d.insert(d);
            }
        }
    }
    c
}

/// Parity predicates of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionFlags {
    /// Every part is even.
    pub is_even: bool,
    /// Every part is even and every multiplicity is even.
    pub is_very_even: bool,
    /// Every even part has even multiplicity.
    pub in_p1: bool,
    /// Every odd part has even multiplicity.
    pub in_p_minus1: bool,
}

pub fn predicates(p: &Partition) -> PartitionFlags {
    let parts = p.parts();
    let is_even = parts.iter().all(|&(d, _)| d % 2 == 0);
    let in_p1 = parts.iter().filter(|&&(d, _)| d % 2 == 0).all(|&(_, t)| t % 2 == 0);
    let in_p_minus1 = parts.iter().filter(|&&(d, _)| d % 2 == 1).all(|&(_, t)| t % 2 == 0);
    PartitionFlags { is_even, is_very_even: is_even && in_p1, in_p1, in_p_minus1 }
}
