//! Finite, ordered classical bases and their products.
//!
//! Every quantity in this crate is a dense array indexed by the position of a
//! basis element. Product bases enumerate their tuples in row-major order: the
//! leftmost factor varies slowest. Under that convention the index of a tuple
//! does not depend on how the product is nested, so `(x, (y, z))` and
//! `(x, y, z)` share every index. Basis equality is therefore defined on the
//! flattened sequence of atomic factors, and regrouping a product is free.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Label of the first boolean basis element.
pub const FALSE: &str = "False";
/// Label of the second boolean basis element.
pub const TRUE: &str = "True";

/// A finite ordered set of distinguishable classical values.
///
/// Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Basis(Arc<Node>);

struct Node {
    kind: Kind,
    size: usize,
    leaves: Vec<Arc<[String]>>,
}

enum Kind {
    Atom(Arc<[String]>),
    Product(Vec<Basis>),
}

/// A basis element: an atomic label or a positional tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Label(String),
    Tuple(Vec<Element>),
}

impl Element {
    pub fn tuple(parts: impl IntoIterator<Item = Element>) -> Self {
        Element::Tuple(parts.into_iter().collect())
    }

    fn flatten_into(&self, out: &mut Vec<String>) {
        match self {
            Element::Label(l) => out.push(l.clone()),
            Element::Tuple(parts) => parts.iter().for_each(|p| p.flatten_into(out)),
        }
    }
}

impl From<bool> for Element {
    fn from(b: bool) -> Self {
        Element::Label(if b { TRUE } else { FALSE }.to_string())
    }
}

impl From<&str> for Element {
    fn from(s: &str) -> Self {
        Element::Label(s.to_string())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Label(l) => f.write_str(l),
            Element::Tuple(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Basis {
    /// Atomic basis from an ordered list of distinct labels.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyBasis);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let labels: Arc<[String]> = labels.into();
        Ok(Basis(Arc::new(Node {
            size: labels.len(),
            leaves: vec![labels.clone()],
            kind: Kind::Atom(labels),
        })))
    }

    /// The two-element boolean basis, ordered `[False, True]`.
    pub fn boolean() -> Self {
        Basis::new([FALSE, TRUE]).expect("boolean labels are distinct")
    }

    /// Positional product of `parts`, enumerated row-major.
    pub fn product(parts: &[Basis]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyProduct);
        }
        let size = parts.iter().map(Basis::size).product();
        let leaves = parts
            .iter()
            .flat_map(|p| p.0.leaves.iter().cloned())
            .collect();
        Ok(Basis(Arc::new(Node {
            kind: Kind::Product(parts.to_vec()),
            size,
            leaves,
        })))
    }

    /// Binary product `a × b`.
    pub fn pair(a: &Basis, b: &Basis) -> Self {
        Basis::product(&[a.clone(), b.clone()]).expect("two factors")
    }

    /// The `n`-fold product of `self`; `n == 1` returns `self` unchanged.
    pub fn power(&self, n: usize) -> Result<Self> {
        match n {
            0 => Err(Error::EmptyProduct),
            1 => Ok(self.clone()),
            _ => Basis::product(&vec![self.clone(); n]),
        }
    }

    /// `n` boolean wires as a flat product (`bool` itself when `n == 1`).
    pub fn qubits(n: usize) -> Result<Self> {
        Basis::boolean().power(n)
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn is_product(&self) -> bool {
        matches!(self.0.kind, Kind::Product(_))
    }

    /// Top-level factors; an atomic basis is its own single factor.
    pub fn factors(&self) -> Vec<Basis> {
        match &self.0.kind {
            Kind::Atom(_) => vec![self.clone()],
            Kind::Product(parts) => parts.clone(),
        }
    }

    /// Number of atomic factors after flattening all nesting.
    pub fn arity(&self) -> usize {
        self.0.leaves.len()
    }

    /// The two factors of a binary product.
    pub fn binary_split(&self) -> Result<(Basis, Basis)> {
        match &self.0.kind {
            Kind::Product(parts) if parts.len() == 2 => Ok((parts[0].clone(), parts[1].clone())),
            _ => Err(Error::NotBinaryProduct(self.to_string())),
        }
    }

    /// Per-factor indices of a row-major index over the top-level factors.
    pub fn split(&self, index: usize) -> Vec<usize> {
        let factors = self.factors();
        let mut out = vec![0; factors.len()];
        let mut rest = index;
        for (slot, f) in out.iter_mut().zip(&factors).rev() {
            *slot = rest % f.size();
            rest /= f.size();
        }
        out
    }

    /// Inverse of [`Basis::split`].
    pub fn join(&self, parts: &[usize]) -> usize {
        self.factors()
            .iter()
            .zip(parts)
            .fold(0, |acc, (f, &i)| acc * f.size() + i)
    }

    pub fn element_at(&self, index: usize) -> Result<Element> {
        self.check_index(index)?;
        Ok(self.element_unchecked(index))
    }

    fn element_unchecked(&self, index: usize) -> Element {
        match &self.0.kind {
            Kind::Atom(labels) => Element::Label(labels[index].clone()),
            Kind::Product(parts) => Element::Tuple(
                parts
                    .iter()
                    .zip(self.split(index))
                    .map(|(p, i)| p.element_unchecked(i))
                    .collect(),
            ),
        }
    }

    /// Row-major index of `e`. Tuples may follow the nesting of the basis or
    /// list every atomic component flat.
    pub fn index_of(&self, e: &Element) -> Result<usize> {
        self.index_nested(e)
            .or_else(|| {
                let mut flat = Vec::new();
                e.flatten_into(&mut flat);
                self.index_flat(&flat)
            })
            .ok_or_else(|| Error::UnknownElement(e.to_string()))
    }

    fn index_nested(&self, e: &Element) -> Option<usize> {
        match (&self.0.kind, e) {
            (Kind::Atom(labels), Element::Label(l)) => labels.iter().position(|x| x == l),
            (Kind::Product(parts), Element::Tuple(items)) if parts.len() == items.len() => {
                let idx: Option<Vec<usize>> = parts
                    .iter()
                    .zip(items)
                    .map(|(p, x)| p.index_nested(x))
                    .collect();
                idx.map(|idx| self.join(&idx))
            }
            _ => None,
        }
    }

    fn index_flat(&self, flat: &[String]) -> Option<usize> {
        if flat.len() != self.arity() {
            return None;
        }
        self.0
            .leaves
            .iter()
            .zip(flat)
            .try_fold(0, |acc, (leaf, l)| {
                leaf.iter()
                    .position(|x| x == l)
                    .map(|i| acc * leaf.len() + i)
            })
    }

    /// Index of the element whose display label is `label`.
    pub fn index_of_label(&self, label: &str) -> Result<usize> {
        (0..self.size())
            .find(|&i| self.label(i) == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn label(&self, index: usize) -> String {
        self.element_unchecked(index).to_string()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size()).map(|i| self.label(i)).collect()
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.size() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                size: self.size(),
            })
        }
    }

    pub(crate) fn expect_eq(&self, found: &Basis) -> Result<()> {
        if self == found {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: self.to_string(),
                found: found.to_string(),
            })
        }
    }
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.leaves == other.0.leaves
    }
}

impl Eq for Basis {}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Atom(labels) if labels.len() == 2 && labels[0] == FALSE && labels[1] == TRUE => {
                f.write_str("Bool")
            }
            Kind::Atom(labels) => write!(f, "{{{}}}", labels.join(",")),
            Kind::Product(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Basis{self}")
    }
}
