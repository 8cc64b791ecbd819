use std::fmt;

use crate::{Error, Result};

/// Subset of `{1,2,3,4}` as a bitmask (bit `i-1` for member `i`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Subset(u8);

impl Subset {
    pub const EMPTY: Subset = Subset(0);
    pub const FULL: Subset = Subset(0b1111);

    pub fn from_bits(bits: u8) -> Result<Subset> {
        if bits > 0b1111 {
            return Err(Error::MalformedIndex(format!("subset bitmask {bits:#b}")));
        }
        Ok(Subset(bits))
    }

    pub fn from_members(members: &[usize]) -> Result<Subset> {
        let mut bits = 0u8;
        for &m in members {
            if !(1..=4).contains(&m) {
                return Err(Error::MalformedIndex(format!("subset member {m} not in 1..=4")));
            }
            if bits & (1 << (m - 1)) != 0 {
                return Err(Error::MalformedIndex(format!("repeated subset member {m}")));
            }
            bits |= 1 << (m - 1);
        }
        Ok(Subset(bits))
    }

    /// Parse a digit string such as `"134"`. The empty string is the empty set.
    pub fn parse(s: &str) -> Result<Subset> {
        let members = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::MalformedIndex(format!("bad subset digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Subset::from_members(&members)
    }

    /// `[n] = {1, ..., n}`.
    pub fn first(n: usize) -> Subset {
        Subset((1u8 << n.min(4)) - 1)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=4).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// Members in increasing order, 1-based.
    pub fn members(self) -> Vec<usize> {
        (1..=4).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Largest member.
    pub fn sup(self) -> Option<usize> {
        self.members().last().copied()
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn difference(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: Subset) -> Subset {
        Subset(self.0 ^ o.0)
    }

    /// All 16 subsets, ordered by bitmask.
    pub fn all() -> impl Iterator<Item = Subset> {
        (0..16u8).map(Subset)
    }

    /// The 15 nonempty subsets, ordered by bitmask.
    pub fn nonempty() -> impl Iterator<Item = Subset> {
        (1..16u8).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        for m in self.members() {
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_members() {
        let a = Subset::parse("134").unwrap();
        assert_eq!(a.members(), vec![1, 3, 4]);
        assert_eq!(a.sup(), Some(4));
        assert_eq!(a.to_string(), "134");
        assert_eq!(Subset::parse("").unwrap(), Subset::EMPTY);
        assert!(Subset::parse("15").is_err());
        assert!(Subset::parse("11").is_err());
        assert_eq!(Subset::first(3).to_string(), "123");
    }

    #[test]
    fn set_algebra() {
        let a = Subset::parse("12").unwrap();
        let b = Subset::parse("23").unwrap();
        assert_eq!(a.symmetric_difference(b).to_string(), "13");
        assert_eq!(a.intersection(b).to_string(), "2");
        assert_eq!(a.union(b).to_string(), "123");
        assert_eq!(a.difference(b).to_string(), "1");
        assert_eq!(Subset::nonempty().count(), 15);
    }
}
