use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Result};
use crate::scalar::{self, Scalar};

/// A vector of exact coordinates with respect to the standard basis `e_0..e_{d-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element { coords: vec![Scalar::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut e = Element::zero(dim);
        e.coords[i] = Scalar::one();
        e
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Element { coords: coords.iter().map(|&c| scalar::int(c)).collect() }
    }

    /// Sparse constructor: `terms` lists `(index, coefficient)` pairs.
    pub fn from_terms(dim: usize, terms: &[(usize, i64)]) -> Self {
        let mut e = Element::zero(dim);
        for &(i, c) in terms {
            e.coords[i] += scalar::int(c);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Indices of nonzero coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element::zero(self.dim());
        }
        Element { coords: self.coords.iter().map(|c| c * s).collect() }
    }

    pub fn scale_int(&self, s: i64) -> Element {
        self.scale(&scalar::int(s))
    }

    pub fn add_scaled(&mut self, other: &Element, s: &Scalar) {
        debug_assert_eq!(self.dim(), other.dim());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    pub(crate) fn add_at(&mut self, i: usize, v: Scalar) {
        self.coords[i] += v;
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        check_dim(self.dim(), other.dim())?;
        Ok(self + other)
    }

    /// Sum of elements of dimension `dim`; the empty sum is zero.
    pub fn sum<'a>(dim: usize, items: impl IntoIterator<Item = &'a Element>) -> Element {
        let mut acc = Element::zero(dim);
        for e in items {
            acc = &acc + e;
        }
        acc
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in element addition");
        Element { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in element subtraction");
        Element { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Writes `2*e3 - 1/2*e9`, or `0`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.support() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mag.is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{}*e{i}", scalar::format(&mag))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(scalar::format).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coords = v
            .iter()
            .map(|s| scalar::parse(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Element { coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let e = Element::from_terms(16, &[(3, -2), (9, -2)]);
        assert_eq!(e.to_string(), "-2*e3 - 2*e9");
        assert_eq!(Element::zero(3).to_string(), "0");
        let h = Element::basis(4, 0).scale(&scalar::ratio(1, 2));
        assert_eq!(h.to_string(), "1/2*e0");
    }

    #[test]
    fn arithmetic() {
        let a = Element::from_ints(&[1, 2, 3]);
        let b = Element::from_ints(&[0, -2, 1]);
        assert_eq!(&a + &b, Element::from_ints(&[1, 0, 4]));
        assert_eq!(&a - &a, Element::zero(3));
        assert!(a.checked_add(&Element::zero(2)).is_err());
    }
}
