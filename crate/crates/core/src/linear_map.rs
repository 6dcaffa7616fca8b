use std::fmt;

use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{check_dim, Error, Result};
use crate::scalar::{self, Scalar};

/// A square matrix acting on coordinate vectors.
///
/// Column `j` holds the image of the basis vector `e_j`, so
/// `apply(m, e_j) == m.column(j)`. Storage is column-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    dim: usize,
    data: Vec<Scalar>,
}

impl LinearMap {
    pub fn identity(dim: usize) -> Self {
        let mut m = LinearMap::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Scalar::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap { dim, data: vec![Scalar::zero(); dim * dim] }
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_columns(columns: &[Element]) -> Result<Self> {
        let dim = columns.len();
        let mut data = Vec::with_capacity(dim * dim);
        for c in columns {
            check_dim(dim, c.dim())?;
            data.extend(c.coords().iter().cloned());
        }
        Ok(LinearMap { dim, data })
    }

    /// Builds a map from a row-major matrix (`rows[i][j]` is the coefficient of
    /// `e_i` in the image of `e_j`).
    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = LinearMap::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            check_dim(dim, row.len())?;
            for (j, v) in row.iter().enumerate() {
                m.data[j * dim + i] = v.clone();
            }
        }
        Ok(m)
    }

    /// `images[j] = (sign, k)` sends `e_j` to `sign * e_k`.
    pub fn signed_permutation(images: &[(i64, usize)]) -> Result<Self> {
        let dim = images.len();
        let mut m = LinearMap::zero(dim);
        for (j, &(sign, k)) in images.iter().enumerate() {
            if k >= dim {
                return Err(Error::IndexOutOfRange { index: k, dim });
            }
            m.data[j * dim + k] = scalar::int(sign);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.data[col * self.dim + row]
    }

    pub fn column(&self, j: usize) -> Element {
        Element::from_coords(self.data[j * self.dim..(j + 1) * self.dim].to_vec())
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.entry(i, j).clone()).collect()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearMap::identity(self.dim)
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        check_dim(self.dim, x.dim())?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Element) -> Element {
        let d = self.dim;
        let mut out = Element::zero(d);
        for (j, xj) in x.support() {
            for (i, m) in self.data[j * d..(j + 1) * d].iter().enumerate() {
                if !m.is_zero() {
                    out.add_at(i, m * xj);
                }
            }
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        check_dim(self.dim, other.dim)?;
        let columns: Vec<Element> = (0..self.dim).map(|j| self.apply_unchecked(&other.column(j))).collect();
        LinearMap::from_columns(&columns)
    }

    /// `k`-fold composition; `power(0)` is the identity.
    pub fn power(&self, k: u32) -> LinearMap {
        let mut result = LinearMap::identity(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base).expect("same dimension");
            }
        }
        result
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { dim: self.dim, data: self.data.iter().map(|v| v * s).collect() }
    }

    /// Gauss-Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.dim;
        let mut a = self.rows();
        let mut inv = LinearMap::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for v in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *v /= &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..n {
                        let (s, t) = (a[col][c].clone(), inv[col][c].clone());
                        a[r][c] -= &f * s;
                        inv[r][c] -= &f * t;
                    }
                }
            }
        }
        LinearMap::from_rows(&inv).ok()
    }

    /// Block-diagonal sum, `self` acting on the first coordinates.
    pub fn direct_sum(&self, other: &LinearMap) -> LinearMap {
        let n = self.dim + other.dim;
        let mut m = LinearMap::zero(n);
        for j in 0..self.dim {
            for i in 0..self.dim {
                m.data[j * n + i] = self.entry(i, j).clone();
            }
        }
        for j in 0..other.dim {
            for i in 0..other.dim {
                m.data[(j + self.dim) * n + i + self.dim] = other.entry(i, j).clone();
            }
        }
        m
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap({}x{}) [", self.dim, self.dim)?;
        for j in 0..self.dim {
            writeln!(f, "  e{j} -> {}", self.column(j))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> LinearMap {
        LinearMap::signed_permutation(&[(1, 1), (1, 2), (-1, 0)]).unwrap()
    }

    #[test]
    fn apply_matches_columns() {
        let m = cycle3();
        for j in 0..3 {
            assert_eq!(m.apply(&Element::basis(3, j)).unwrap(), m.column(j));
        }
    }

    #[test]
    fn power_zero_is_identity() {
        assert!(cycle3().power(0).is_identity());
        assert_eq!(cycle3().power(1), cycle3());
    }

    #[test]
    fn power_agrees_with_repeated_composition() {
        let m = cycle3();
        let mut acc = LinearMap::identity(3);
        for k in 0..8 {
            assert_eq!(m.power(k), acc);
            acc = m.compose(&acc).unwrap();
        }
        // order 6 signed cycle
        assert!(m.power(6).is_identity());
    }

    #[test]
    fn row_and_column_conventions_agree() {
        let rows = vec![vec![scalar::int(1), scalar::int(2)], vec![scalar::int(3), scalar::int(4)]];
        let m = LinearMap::from_rows(&rows).unwrap();
        assert_eq!(m.column(0), Element::from_ints(&[1, 3]));
        assert_eq!(m.rows(), rows);
    }

    #[test]
    fn inverse_round_trip() {
        let rows = vec![
            vec![scalar::int(2), scalar::int(1), scalar::int(0)],
            vec![scalar::int(0), scalar::int(1), scalar::int(3)],
            vec![scalar::int(1), scalar::int(0), scalar::int(1)],
        ];
        let m = LinearMap::from_rows(&rows).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
        assert!(LinearMap::zero(2).inverse().is_none());
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(cycle3().apply(&Element::zero(2)).unwrap_err().code(), "dimension");
        assert!(cycle3().compose(&LinearMap::identity(2)).is_err());
    }
}
