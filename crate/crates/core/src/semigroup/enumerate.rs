//! Enumeration of labeled semigroups by cell-by-cell backtracking.
//!
//! Cells are filled in row-major order with values tried in increasing
//! order, so tables come out in lexicographic order of their cell vectors.
//! Whenever a cell is assigned, every triple whose associativity check just
//! became fully defined is tested; such a triple must use the new cell in
//! one of the four lookups `ab`, `(ab)c`, `bc`, `a(bc)`.

use super::{CayleyTable, Element};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 5;

const UNSET: Element = Element::MAX;

/// Streams every associative table on `{0, ..., order - 1}`.
pub fn enumerate_semigroups(order: usize) -> Result<Enumeration> {
    Enumeration::new(order, &[])
}

/// Number of labeled semigroups of the given order.
pub fn count_semigroups(order: usize) -> Result<usize> {
    Ok(enumerate_semigroups(order)?.count())
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    order: usize,
    cells: Vec<Element>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl Enumeration {
    /// Enumerates the tables whose first cells equal `prefix`. Prefixes are
    /// how corpus sweeps partition the stream; concatenating the
    /// enumerations for all first rows in lexicographic order reproduces
    /// the full stream.
    pub fn new(order: usize, prefix: &[Element]) -> Result<Self> {
        if order == 0 || order > MAX_ENUMERATION_ORDER {
            return Err(Error::EnumerationOrder(order));
        }
        if prefix.len() > order * order || prefix.iter().any(|&x| x >= order) {
            return Err(Error::Precondition(format!(
                "invalid enumeration prefix {prefix:?} for order {order}"
            )));
        }
        let mut cells = vec![UNSET; order * order];
        cells[..prefix.len()].copy_from_slice(prefix);
        Ok(Self {
            order,
            cells,
            fixed: prefix.len(),
            started: false,
            done: false,
        })
    }

    #[inline]
    fn get(&self, a: Element, b: Element) -> Option<Element> {
        let v = self.cells[a * self.order + b];
        (v != UNSET).then_some(v)
    }

    #[inline]
    fn triple_ok(&self, a: Element, b: Element, c: Element) -> bool {
        let check = || -> Option<bool> {
            let left = self.get(self.get(a, b)?, c)?;
            let right = self.get(a, self.get(b, c)?)?;
            Some(left == right)
        };
        check().unwrap_or(true)
    }

    /// Checks the triples completed by assigning cell `pos`.
    fn consistent(&self, pos: usize) -> bool {
        let n = self.order;
        let (i, j) = (pos / n, pos % n);
        for x in 0..n {
            // cell as `ab` with (a, b) = (i, j), or as `bc` with (b, c) = (i, j)
            if !self.triple_ok(i, j, x) || !self.triple_ok(x, i, j) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                // cell as `(ab)c` with ab = i, c = j
                if self.get(a, b) == Some(i) && !self.triple_ok(a, b, j) {
                    return false;
                }
                // cell as `a(bc)` with a = i, bc = j
                if self.get(a, b) == Some(j) && !self.triple_ok(i, a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Advances to the next complete consistent table.
    fn advance(&mut self) -> bool {
        let total = self.order * self.order;
        let (mut pos, mut value);
        if !self.started {
            self.started = true;
            if !(0..self.fixed).all(|p| self.consistent_prefix(p)) {
                return false;
            }
            if self.fixed == total {
                return true;
            }
            pos = self.fixed;
            value = 0;
        } else {
            if self.fixed == total {
                return false;
            }
            pos = total - 1;
            value = self.cells[pos] + 1;
            self.cells[pos] = UNSET;
        }
        loop {
            if value >= self.order {
                if pos == self.fixed {
                    return false;
                }
                pos -= 1;
                value = self.cells[pos] + 1;
                self.cells[pos] = UNSET;
                continue;
            }
            self.cells[pos] = value;
            if self.consistent(pos) {
                pos += 1;
                if pos == total {
                    return true;
                }
                value = 0;
            } else {
                self.cells[pos] = UNSET;
                value += 1;
            }
        }
    }

    /// Replays the fixed prefix one cell at a time.
    fn consistent_prefix(&mut self, p: usize) -> bool {
        let saved: Vec<Element> = self.cells[p + 1..self.fixed].to_vec();
        for c in &mut self.cells[p + 1..self.fixed] {
            *c = UNSET;
        }
        let ok = self.consistent(p);
        self.cells[p + 1..self.fixed].copy_from_slice(&saved);
        ok
    }
}

impl Iterator for Enumeration {
    type Item = CayleyTable;

    fn next(&mut self) -> Option<CayleyTable> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(
                CayleyTable::from_cells(self.order, self.cells.clone())
                    .expect("enumerated cells are in range"),
            )
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_semigroups(1).unwrap(), 1);
        assert_eq!(count_semigroups(2).unwrap(), 8);
        assert_eq!(count_semigroups(3).unwrap(), 113);
    }

    #[test]
    fn rejects_large_orders() {
        assert!(matches!(enumerate_semigroups(6), Err(Error::EnumerationOrder(6))));
        assert!(matches!(enumerate_semigroups(0), Err(Error::EnumerationOrder(0))));
    }

    #[test]
    fn lexicographic_and_valid() {
        let tables: Vec<_> = enumerate_semigroups(3).unwrap().collect();
        assert!(tables.windows(2).all(|w| w[0].cells() < w[1].cells()));
        assert!(tables.iter().all(|t| t.validate().is_valid()));
    }

    #[test]
    fn first_row_partition_reproduces_stream() {
        let full: Vec<_> = enumerate_semigroups(3).unwrap().collect();
        let mut parts = Vec::new();
        for code in 0..27usize {
            let row = [code / 9, (code / 3) % 3, code % 3];
            parts.extend(Enumeration::new(3, &row).unwrap());
        }
        assert_eq!(parts, full);
    }

    #[test]
    fn full_prefix() {
        let rz2 = [0, 1, 0, 1];
        assert_eq!(Enumeration::new(2, &rz2).unwrap().count(), 1);
        let bad = [1, 0, 0, 0];
        assert_eq!(Enumeration::new(2, &bad).unwrap().count(), 0);
    }
}
