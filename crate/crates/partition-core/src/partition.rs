use std::fmt;
use std::str::FromStr;

use crate::PartitionError;

/// Parity of a partition: the number of positive even parts mod 2.
///
/// Also reused for the p-parity (number of nodes of non-zero residue mod 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// An integer partition: a weakly decreasing sequence of positive integers.
///
/// Stored canonically without trailing zeros, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Rejects sequences that
    /// are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of positive parts, written h(λ) in the source material.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The r-th part with rows numbered from 1; zero beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        debug_assert!(row >= 1, "rows are numbered from 1");
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// The transpose partition λ'.
    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        if let Some(&first) = self.parts.first() {
            for c in 1..=first {
                cols.push(self.parts.iter().filter(|&&p| p >= c).count() as u32);
            }
        }
        Partition { parts: cols }
    }

    /// True when the parts are strictly decreasing (2-regular).
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Whether a part is repeated p or more times.
    pub fn is_p_regular(&self, p: u32) -> bool {
        self.parts
            .chunk_by(|a, b| a == b)
            .all(|run| (run.len() as u32) < p)
    }

    /// Even iff the number of positive even parts is even.
    pub fn parity(&self) -> Parity {
        if self.parts.iter().filter(|&&p| p % 2 == 0).count() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// For every row either λ_r > λ_{r+1} or p divides λ_r.
    pub fn is_p_strict(&self, p: u32) -> bool {
        (1..=self.len()).all(|r| {
            let cur = self.part(r);
            cur > self.part(r + 1) || cur % p == 0
        })
    }

    /// p-strict, and for every row either λ_r < λ_{r+1} + p, or
    /// λ_r = λ_{r+1} with p dividing λ_r.
    pub fn is_p_restricted(&self, p: u32) -> bool {
        self.is_p_strict(p)
            && (1..=self.len()).all(|r| {
                let cur = self.part(r);
                let next = self.part(r + 1);
                cur < next + p || (cur == next && cur % p == 0)
            })
    }

    /// Number of nodes of non-zero p-residue, reduced mod 2.
    pub fn p_parity(&self, p: u32) -> Parity {
        let mut nonzero = 0u64;
        for (i, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                let node = crate::Node::new(i as u32 + 1, c);
                if crate::residue(node, p) != 0 {
                    nonzero += 1;
                }
            }
        }
        if nonzero % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Prefix-sum dominance: self ⊵ other. Requires equal sizes.
    pub fn dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.size() != other.size() {
            return Err(PartitionError::SizeMismatch(self.size(), other.size()));
        }
        let rows = self.len().max(other.len());
        let mut a = 0u64;
        let mut b = 0u64;
        for r in 1..=rows {
            a += u64::from(self.part(r));
            b += u64::from(other.part(r));
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Componentwise λ + n·μ, padding the shorter with zeros.
    pub fn plus_multiple(&self, n: u32, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        let parts = (1..=rows)
            .map(|r| self.part(r) + n * other.part(r))
            .collect();
        Partition::from_unsorted(parts)
    }

    /// λ ⊔ μ: the combined parts, sorted decreasingly.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as "-".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 2]).conjugate(), p(&[3, 3, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn strictness_and_parity() {
        assert!(p(&[4, 3, 2]).is_strict());
        assert_eq!(p(&[4, 3, 2]).parity(), Parity::Even);
        assert!(p(&[3, 2, 1]).is_strict());
        assert_eq!(p(&[3, 2, 1]).parity(), Parity::Odd);
        assert!(!p(&[3, 3, 1]).is_strict());
    }

    #[test]
    fn p_strict_and_restricted() {
        assert!(p(&[3, 3, 1]).is_p_strict(3));
        assert!(p(&[3, 3, 1]).is_p_restricted(3));
        assert!(p(&[4, 3, 2]).is_p_strict(3));
        assert!(p(&[4, 3, 2]).is_p_restricted(3));
        assert!(p(&[7, 1]).is_p_strict(3));
        assert!(!p(&[7, 1]).is_p_restricted(3));
        // a single row divisible by p is p-strict but not p-restricted
        assert!(p(&[3]).is_p_strict(3));
        assert!(!p(&[3]).is_p_restricted(3));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3]).dominates(&p(&[2, 1])).unwrap());
        assert!(p(&[2, 1]).dominates(&p(&[2, 1])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[3])).is_err());
    }

    #[test]
    fn sum_and_join_examples() {
        assert_eq!(p(&[7, 4, 1]).join(&p(&[3])), p(&[7, 4, 3, 1]));
        assert_eq!(p(&[1]).plus_multiple(3, &p(&[1])), p(&[4]));
        assert_eq!(p(&[2, 1]).join(&Partition::empty()), p(&[2, 1]));
    }

    #[test]
    fn p_parity_examples() {
        assert_eq!(p(&[4, 3, 2]).p_parity(3), Parity::Odd);
        assert_eq!(p(&[1]).p_parity(3), Parity::Even);
        assert_eq!(p(&[1]).p_parity(5), Parity::Even);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[5, 4, 3, 2]).to_string(), "5,4,3,2");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!("5,4,3,2".parse::<Partition>().unwrap(), p(&[5, 4, 3, 2]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,5".parse::<Partition>().is_err());
    }

    #[test]
    fn canonical_no_trailing_zeros() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
        assert!(Partition::new(vec![1, 3]).is_err());
    }
}
