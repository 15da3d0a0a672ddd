//! Fixed-width bit sets for semigroup elements and graph vertices.
//!
//! Element sets hold up to 64 members (the maximum supported semigroup
//! order); vertex sets hold up to 128 vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident, $word:ty) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
        pub struct $name($word);

        impl $name {
            pub const CAPACITY: usize = <$word>::BITS as usize;

            pub const fn empty() -> Self {
                Self(0)
            }

            /// The set `{0, 1, ..., n - 1}`.
            pub fn full(n: usize) -> Self {
                debug_assert!(n <= Self::CAPACITY);
                if n == Self::CAPACITY {
                    Self(<$word>::MAX)
                } else {
                    Self(((1 as $word) << n) - 1)
                }
            }

            pub fn singleton(x: usize) -> Self {
                Self((1 as $word) << x)
            }

            pub const fn from_bits(bits: $word) -> Self {
                Self(bits)
            }

            pub const fn bits(self) -> $word {
                self.0
            }

            #[inline]
            pub fn contains(self, x: usize) -> bool {
                x < Self::CAPACITY && (self.0 >> x) & 1 == 1
            }

            #[inline]
            pub fn insert(&mut self, x: usize) {
                self.0 |= (1 as $word) << x;
            }

            #[inline]
            pub fn remove(&mut self, x: usize) {
                self.0 &= !((1 as $word) << x);
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            #[inline]
            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            #[inline]
            pub fn is_proper_subset(self, other: Self) -> bool {
                self.is_subset(other) && self != other
            }

            #[inline]
            pub fn first(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let x = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        Some(x)
                    }
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }

            /// Lexicographic comparison of the sorted member lists.
            pub fn lex_cmp(self, other: Self) -> Ordering {
                self.iter().cmp(other.iter())
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut set = Self::empty();
                for x in iter {
                    set.insert(x);
                }
                set
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("{")?;
                for (i, x) in self.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_seq(self.iter())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let items = Vec::<usize>::deserialize(deserializer)?;
                if let Some(&bad) = items.iter().find(|&&x| x >= Self::CAPACITY) {
                    return Err(serde::de::Error::custom(format!(
                        "member {bad} out of range for a {}-bit set",
                        Self::CAPACITY
                    )));
                }
                Ok(items.into_iter().collect())
            }
        }
    };
}

bitset!(
    /// A set of semigroup elements.
    ElementSet,
    u64
);

bitset!(
    /// A set of graph vertices.
    VertexSet,
    u128
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iteration() {
        assert_eq!(ElementSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(128).len(), 128);
        assert!(ElementSet::full(0).is_empty());
    }

    #[test]
    fn subset_relations() {
        let a: ElementSet = [0, 3].into_iter().collect();
        let b: ElementSet = [0, 2, 3, 4].into_iter().collect();
        assert!(a.is_proper_subset(b));
        assert!(!b.is_subset(a));
        assert_eq!(a.to_string(), "{0,3}");
    }

    #[test]
    fn lexicographic_order() {
        let a: ElementSet = [0, 3].into_iter().collect();
        let b: ElementSet = [0, 2, 4].into_iter().collect();
        assert_eq!(a.lex_cmp(b), Ordering::Greater);
        assert_eq!(b.lex_cmp(a), Ordering::Less);
    }
}
