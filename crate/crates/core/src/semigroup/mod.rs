//! Finite semigroups given by their Cayley tables.

mod enumerate;
mod family;
mod io;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

pub use enumerate::{count_semigroups, enumerate_semigroups, Enumeration, MAX_ENUMERATION_ORDER};
pub(crate) use family::split_top_level;
pub use family::{generate, FamilySpec};
pub use io::{parse_json, parse_text, read_table};

/// Semigroup elements are `0..order`.
pub type Element = usize;

/// Largest supported order; element sets are 64-bit masks.
pub const MAX_ORDER: usize = ElementSet::CAPACITY;

/// A finite magma stored row-major: `table[i][j] = i * j`.
///
/// Construction only range-checks entries. Use [`CayleyTable::validate`] to
/// check associativity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<Element>,
    name: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Validation {
    Valid,
    /// `(i*j)*k != i*(j*k)` for the witness triple.
    Invalid { witness: (Element, Element, Element) },
}

impl Validation {
    pub fn is_valid(self) -> bool {
        matches!(self, Validation::Valid)
    }
}

impl CayleyTable {
    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let order = rows.len();
        check_order(order)?;
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::Table {
                    row: r + 1,
                    column: row.len().min(order) + 1,
                    message: format!("expected {order} entries, found {}", row.len()),
                });
            }
            cells.extend(row);
        }
        Self::from_cells(order, cells)
    }

    /// Builds a table from `order * order` entries in row-major order.
    pub fn from_cells(order: usize, cells: Vec<Element>) -> Result<Self> {
        check_order(order)?;
        if cells.len() != order * order {
            return Err(Error::Precondition(format!(
                "expected {} cells for order {order}, found {}",
                order * order,
                cells.len()
            )));
        }
        if let Some(pos) = cells.iter().position(|&x| x >= order) {
            return Err(Error::Table {
                row: pos / order + 1,
                column: pos % order + 1,
                message: format!("entry {} is outside 0..{order}", cells[pos]),
            });
        }
        Ok(Self {
            order,
            cells,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn product(&self, a: Element, b: Element) -> Element {
        self.cells[a * self.order + b]
    }

    pub fn row(&self, a: Element) -> &[Element] {
        &self.cells[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.cells.chunks(self.order)
    }

    pub fn cells(&self) -> &[Element] {
        &self.cells
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// Checks associativity, returning the lexicographically first failing
    /// triple.
    pub fn validate(&self) -> Validation {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    if self.product(ij, k) != self.product(i, self.product(j, k)) {
                        return Validation::Invalid { witness: (i, j, k) };
                    }
                }
            }
        }
        Validation::Valid
    }

    /// Like [`validate`](Self::validate) but as a `Result`.
    pub fn ensure_associative(&self) -> Result<()> {
        match self.validate() {
            Validation::Valid => Ok(()),
            Validation::Invalid { witness } => Err(Error::NotAssociative(witness)),
        }
    }

    /// The two-sided zero, if any. A zero is unique when it exists.
    pub fn zero_element(&self) -> Option<Element> {
        (0..self.order).find(|&z| {
            (0..self.order).all(|x| self.product(z, x) == z && self.product(x, z) == z)
        })
    }

    /// `S¹a = Sa ∪ {a}`.
    pub fn principal_left_ideal(&self, a: Element) -> ElementSet {
        let mut set = ElementSet::singleton(a);
        for s in 0..self.order {
            set.insert(self.product(s, a));
        }
        set
    }

    pub fn l_class_partition(&self) -> LClassPartition {
        let principals: Vec<ElementSet> =
            (0..self.order).map(|a| self.principal_left_ideal(a)).collect();
        let mut classes: Vec<Vec<Element>> = Vec::new();
        let mut class_of = vec![usize::MAX; self.order];
        for a in 0..self.order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let block: Vec<Element> = (a..self.order)
                .filter(|&b| principals[b] == principals[a])
                .collect();
            for &b in &block {
                class_of[b] = id;
            }
            classes.push(block);
        }
        LClassPartition { classes, class_of }
    }

    /// Stable short digest of the order and cells.
    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update((self.order as u64).to_le_bytes());
        for &c in &self.cells {
            hasher.update([c as u8]);
        }
        hex::encode(&hasher.finalize()[..8])
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        self.rows().map(<[Element]>::to_vec).collect()
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::Precondition("a semigroup must be non-empty".into()));
    }
    if order > MAX_ORDER {
        return Err(Error::SizeLimit {
            order,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

/// Green's L-classes: `a L b` iff `S¹a = S¹b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LClassPartition {
    pub classes: Vec<Vec<Element>>,
    pub class_of: Vec<usize>,
}

impl LClassPartition {
    /// Whether `set` is exactly one of the blocks.
    pub fn is_class(&self, set: ElementSet) -> bool {
        match set.first() {
            None => false,
            Some(x) => {
                let block = &self.classes[self.class_of[x]];
                block.len() == set.len() && block.iter().all(|&b| set.contains(b))
            }
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Serialized form shared by the JSON reader and writer.
#[derive(Serialize, Deserialize)]
pub(crate) struct TableDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<Element>>,
}

impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableDocument {
            name: self.name.clone(),
            order: self.order,
            table: self.to_rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CayleyTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = TableDocument::deserialize(deserializer)?;
        io::table_from_document(doc).map_err(serde::de::Error::custom)
    }
}
