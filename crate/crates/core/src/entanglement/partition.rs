use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Three disjoint mode sets `(A, B, C)` covering the whole lattice.
///
/// Modes are zero-based in code; the textual form `"1,2|3,4|5,6"` is one-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parties: [Vec<usize>; 3],
    labels: [String; 3],
}

impl Partition {
    /// Builds a partition from zero-based mode lists. Each list is sorted.
    pub fn new(a: Vec<usize>, b: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        let mut parties = [a, b, c];
        for p in parties.iter_mut() {
            if p.is_empty() {
                return Err(Error::InvalidPartition("every party needs at least one mode".into()));
            }
            p.sort_unstable();
        }
        let modes: usize = parties.iter().map(Vec::len).sum();
        let mut seen = vec![false; modes];
        for &m in parties.iter().flatten() {
            if m >= modes {
                return Err(Error::InvalidPartition(format!(
                    "mode {} lies outside 1..={modes}",
                    m + 1
                )));
            }
            if std::mem::replace(&mut seen[m], true) {
                return Err(Error::InvalidPartition(format!("mode {} appears twice", m + 1)));
            }
        }
        Ok(Self { parties, labels: ["A".into(), "B".into(), "C".into()] })
    }

    pub fn with_labels(mut self, labels: [&str; 3]) -> Self {
        self.labels = labels.map(String::from);
        self
    }

    /// Parses `"1,2|3,4|5,6"`.
    pub fn parse(spec: &str) -> Result<Self> {
        let groups: Vec<&str> = spec.split('|').collect();
        if groups.len() != 3 {
            return Err(Error::InvalidPartition(format!(
                "'{spec}' must contain exactly three '|'-separated groups"
            )));
        }
        let mut parsed = Vec::with_capacity(3);
        for g in groups {
            let modes = g
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(m) if m >= 1 => Ok(m - 1),
                    _ => Err(Error::InvalidPartition(format!("'{t}' is not a mode number (1-based)"))),
                })
                .collect::<Result<Vec<_>>>()?;
            parsed.push(modes);
        }
        let c = parsed.pop().unwrap();
        let b = parsed.pop().unwrap();
        let a = parsed.pop().unwrap();
        Self::new(a, b, c)
    }

    /// One mode per party: `{1|2|3}` style.
    pub fn single_modes() -> Self {
        Self::new(vec![0], vec![1], vec![2]).expect("valid")
    }

    /// `{1,2|3,4|5,6}`.
    pub fn adjacent_pairs() -> Self {
        Self::new(vec![0, 1], vec![2, 3], vec![4, 5]).expect("valid")
    }

    /// `{1,4|2,5|3,6}`.
    pub fn interleaved_pairs() -> Self {
        Self::new(vec![0, 3], vec![1, 4], vec![2, 5])
            .expect("valid")
            .with_labels(["A'", "B'", "C'"])
    }

    pub fn modes(&self) -> usize {
        self.parties.iter().map(Vec::len).sum()
    }

    pub fn party(&self, i: usize) -> &[usize] {
        &self.parties[i]
    }

    pub fn parties(&self) -> &[Vec<usize>; 3] {
        &self.parties
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Reorders parties: party `i` of the result is party `order[i]` of `self`.
    pub fn reordered(&self, order: [usize; 3]) -> Result<Self> {
        let mut sorted = order;
        sorted.sort_unstable();
        if sorted != [0, 1, 2] {
            return Err(Error::InvalidPartition(format!("{order:?} is not a party permutation")));
        }
        Ok(Self {
            parties: order.map(|i| self.parties[i].clone()),
            labels: order.map(|i| self.labels[i].clone()),
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parties.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            let s: Vec<String> = p.iter().map(|m| (m + 1).to_string()).collect();
            f.write_str(&s.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
