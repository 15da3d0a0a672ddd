//! Parametrised families of semigroups.
//!
//! Specs have the textual form `kind(a,b,...)`, e.g. `right-zero(3)`,
//! `rectangular-band(2,3)` or `direct-product(right-zero(2),cyclic-group(3))`.

use std::fmt;
use std::str::FromStr;

use super::{CayleyTable, Element, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `x * y = y`.
    RightZero(usize),
    /// `x * y = x`.
    LeftZero(usize),
    /// `x * y = 0`; element 0 is the zero.
    NullWithZero(usize),
    /// `I × Λ` with `(i, λ)(j, μ) = (i, μ)`; `(i, λ)` is element `i * |Λ| + λ`.
    RectangularBand(usize, usize),
    /// Addition modulo `n`.
    CyclicGroup(usize),
    /// Multiplication modulo `n`.
    ZnMultiplication(usize),
    /// Componentwise product; pairs `(a, b)` are numbered `a * |B| + b`,
    /// folding from the left for more than two factors.
    DirectProduct(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::RightZero(_) => "right-zero",
            FamilySpec::LeftZero(_) => "left-zero",
            FamilySpec::NullWithZero(_) => "null-with-zero",
            FamilySpec::RectangularBand(..) => "rectangular-band",
            FamilySpec::CyclicGroup(_) => "cyclic-group",
            FamilySpec::ZnMultiplication(_) => "zn-multiplication",
            FamilySpec::DirectProduct(_) => "direct-product",
        }
    }

    /// Order of the generated semigroup (saturating).
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::RightZero(n)
            | FamilySpec::LeftZero(n)
            | FamilySpec::NullWithZero(n)
            | FamilySpec::CyclicGroup(n)
            | FamilySpec::ZnMultiplication(n) => n,
            FamilySpec::RectangularBand(p, q) => p.saturating_mul(q),
            FamilySpec::DirectProduct(ref factors) => factors
                .iter()
                .fold(1usize, |acc, f| acc.saturating_mul(f.order())),
        }
    }

    fn check(&self) -> Result<()> {
        let invalid = |reason: &str| Error::Family {
            spec: self.to_string(),
            reason: reason.into(),
        };
        match self {
            FamilySpec::DirectProduct(factors) => {
                if factors.len() < 2 {
                    return Err(invalid("a direct product needs at least two factors"));
                }
                for f in factors {
                    f.check()?;
                }
            }
            FamilySpec::RectangularBand(p, q) if *p == 0 || *q == 0 => {
                return Err(invalid("sizes must be at least 1"))
            }
            _ if self.order() == 0 => return Err(invalid("sizes must be at least 1")),
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return Err(Error::SizeLimit {
                order: self.order(),
                limit: MAX_ORDER,
            });
        }
        Ok(())
    }
}

pub fn generate(spec: &FamilySpec) -> Result<CayleyTable> {
    spec.check()?;
    let n = spec.order();
    let cells: Vec<Element> = match spec {
        FamilySpec::RightZero(_) => table(n, |_, y| y),
        FamilySpec::LeftZero(_) => table(n, |x, _| x),
        FamilySpec::NullWithZero(_) => table(n, |_, _| 0),
        FamilySpec::RectangularBand(_, q) => {
            let q = *q;
            table(n, |a, b| (a / q) * q + b % q)
        }
        FamilySpec::CyclicGroup(_) => table(n, |x, y| (x + y) % n),
        FamilySpec::ZnMultiplication(_) => table(n, |x, y| (x * y) % n),
        FamilySpec::DirectProduct(factors) => {
            let mut acc = generate(&factors[0])?;
            for f in &factors[1..] {
                acc = direct_product(&acc, &generate(f)?)?;
            }
            return Ok(acc.with_name(spec.to_string()));
        }
    };
    Ok(CayleyTable::from_cells(n, cells)?.with_name(spec.to_string()))
}

fn table(n: usize, op: impl Fn(usize, usize) -> usize) -> Vec<Element> {
    (0..n * n).map(|c| op(c / n, c % n)).collect()
}

fn direct_product(a: &CayleyTable, b: &CayleyTable) -> Result<CayleyTable> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let cells = table(n, |x, y| {
        let (xa, xb) = (x / nb, x % nb);
        let (ya, yb) = (y / nb, y % nb);
        a.product(xa, ya) * nb + b.product(xb, yb)
    });
    CayleyTable::from_cells(n, cells)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind())?;
        match self {
            FamilySpec::RightZero(n)
            | FamilySpec::LeftZero(n)
            | FamilySpec::NullWithZero(n)
            | FamilySpec::CyclicGroup(n)
            | FamilySpec::ZnMultiplication(n) => write!(f, "{n}")?,
            FamilySpec::RectangularBand(p, q) => write!(f, "{p},{q}")?,
            FamilySpec::DirectProduct(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{factor}")?;
                }
            }
        }
        f.write_str(")")
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::Family {
            spec: s.to_string(),
            reason: reason.into(),
        };
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| invalid("expected `kind(params)`"))?;
        if !s.ends_with(')') {
            return Err(invalid("missing closing parenthesis"));
        }
        let kind = s[..open].trim();
        let args = split_top_level(&s[open + 1..s.len() - 1]);
        let ints = || -> Result<Vec<usize>> {
            args.iter()
                .map(|a| {
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| invalid(&format!("`{}` is not a size", a.trim())))
                })
                .collect()
        };
        let one = || -> Result<usize> {
            match ints()?.as_slice() {
                [n] => Ok(*n),
                _ => Err(invalid("expected exactly one parameter")),
            }
        };
        let spec = match kind {
            "right-zero" => FamilySpec::RightZero(one()?),
            "left-zero" => FamilySpec::LeftZero(one()?),
            "null-with-zero" => FamilySpec::NullWithZero(one()?),
            "cyclic-group" => FamilySpec::CyclicGroup(one()?),
            "zn-multiplication" => FamilySpec::ZnMultiplication(one()?),
            "rectangular-band" => match ints()?.as_slice() {
                [p, q] => FamilySpec::RectangularBand(*p, *q),
                _ => return Err(invalid("expected two parameters")),
            },
            "direct-product" => FamilySpec::DirectProduct(
                args.iter()
                    .map(|a| a.parse())
                    .collect::<Result<Vec<FamilySpec>>>()?,
            ),
            other => return Err(invalid(&format!("unknown family `{other}`"))),
        };
        spec.check()?;
        Ok(spec)
    }
}

/// Splits on commas that are not nested inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s[start..].trim().is_empty() || !parts.is_empty() {
        parts.push(&s[start..]);
    }
    parts
}
