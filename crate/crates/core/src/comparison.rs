//! Three-valued comparison verdicts.

use std::cmp::Ordering;
use std::fmt;

/// Verdict of comparing two events or two acts under a complete relation.
///
/// `Equivalent` is indifference, not identity: distinct objects may compare
/// as equivalent, and equivalence is not transitive for every relation in
/// this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Equivalent,
    Greater,
}

impl Comparison {
    pub fn from_ord(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equivalent,
            Ordering::Greater => Comparison::Greater,
        }
    }

    /// The verdict seen from the other side: compare(b, a).
    pub fn reverse(self) -> Self {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Equivalent => Comparison::Equivalent,
            Comparison::Greater => Comparison::Less,
        }
    }

    /// Weak preference: `Greater` or `Equivalent`.
    pub fn is_weak_ge(self) -> bool {
        matches!(self, Comparison::Greater | Comparison::Equivalent)
    }

    pub fn is_strict(self) -> bool {
        self == Comparison::Greater
    }

    pub fn is_equivalent(self) -> bool {
        self == Comparison::Equivalent
    }

    /// Rendering used by the command-line reports: `>`, `~`, `<`.
    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::Less => "<",
            Comparison::Equivalent => "~",
            Comparison::Greater => ">",
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reverse_is_involutive() {
        for c in [
            Comparison::Less,
            Comparison::Equivalent,
            Comparison::Greater,
        ] {
            assert_eq!(c.reverse().reverse(), c);
        }
    }

    #[test]
    fn weak_ge_matches_symbols() {
        assert!(Comparison::Greater.is_weak_ge());
        assert!(Comparison::Equivalent.is_weak_ge());
        assert!(!Comparison::Less.is_weak_ge());
        assert_eq!(Comparison::Greater.symbol(), ">");
        assert_eq!(Comparison::Equivalent.symbol(), "~");
    }
}
