use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{check_dim, Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar::Scalar;

/// Fill ratio above which structure constants are stored densely.
pub const DENSE_FILL_THRESHOLD: f64 = 0.25;

#[derive(Clone)]
enum Table {
    /// `rows[i * d + j]` lists the nonzero `(k, c_ij^k)`.
    Sparse(Vec<Vec<(usize, Scalar)>>),
    /// `c[(i * d + j) * d + k]`.
    Dense(Vec<Scalar>),
}

/// A finite-dimensional Hom-algebra `(A, μ, α)` over the rationals, given by
/// structure constants `e_i e_j = Σ_k c_ij^k e_k` and a twisting map `α`.
///
/// Algebras built by the Cayley-Dickson process also carry their conjugation,
/// which is checked to be an involutive anti-automorphism of the product.
pub struct HomAlgebra {
    dim: usize,
    table: Table,
    alpha: LinearMap,
    conj: Option<LinearMap>,
    labels: Option<Vec<String>>,
    metadata: BTreeMap<String, String>,
    alpha_powers: RwLock<Vec<Arc<LinearMap>>>,
}

impl Clone for HomAlgebra {
    fn clone(&self) -> Self {
        HomAlgebra {
            dim: self.dim,
            table: self.table.clone(),
            alpha: self.alpha.clone(),
            conj: self.conj.clone(),
            labels: self.labels.clone(),
            metadata: self.metadata.clone(),
            alpha_powers: RwLock::new(self.alpha_powers.read().expect("poisoned").clone()),
        }
    }
}

impl HomAlgebra {
    /// Builds an algebra from `(i, j, k, c)` entries; repeated entries are summed.
    pub fn from_constants(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        alpha: LinearMap,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        check_dim(dim, alpha.dim())?;
        let mut dense = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            dense[(i * dim + j) * dim + k] += c;
        }
        Ok(Self::from_dense(dim, dense, alpha))
    }

    /// Builds an algebra from the products of basis vectors.
    pub fn from_products(
        dim: usize,
        alpha: LinearMap,
        mut product: impl FnMut(usize, usize) -> Element,
    ) -> Result<Self> {
        check_dim(dim, alpha.dim())?;
        let mut dense = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                check_dim(dim, p.dim())?;
                dense.extend(p.into_coords());
            }
        }
        Ok(Self::from_dense(dim, dense, alpha))
    }

    fn from_dense(dim: usize, dense: Vec<Scalar>, alpha: LinearMap) -> Self {
        let nonzero = dense.iter().filter(|c| !c.is_zero()).count();
        let fill = nonzero as f64 / dense.len() as f64;
        let table = if fill > DENSE_FILL_THRESHOLD {
            Table::Dense(dense)
        } else {
            let mut rows = vec![Vec::new(); dim * dim];
            for (idx, c) in dense.into_iter().enumerate() {
                if !c.is_zero() {
                    rows[idx / dim].push((idx % dim, c));
                }
            }
            Table::Sparse(rows)
        };
        HomAlgebra {
            dim,
            table,
            alpha,
            conj: None,
            labels: None,
            metadata: BTreeMap::new(),
            alpha_powers: RwLock::new(Vec::new()),
        }
    }

    /// Attaches a conjugation after checking `conj∘conj = Id` and
    /// `conj(e_i e_j) = conj(e_j) conj(e_i)` on all basis pairs.
    pub fn with_conjugation(mut self, conj: LinearMap) -> Result<Self> {
        check_dim(self.dim, conj.dim())?;
        if !conj.compose(&conj)?.is_identity() {
            return Err(Error::BadInvolution("conj∘conj is not the identity".into()));
        }
        let images: Vec<Element> = (0..self.dim).map(|j| conj.column(j)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = conj.apply_unchecked(&self.basis_product(i, j));
                let rhs = self.mul_unchecked(&images[j], &images[i]);
                if lhs != rhs {
                    return Err(Error::BadInvolution(format!("fails on e{i}*e{j}")));
                }
            }
        }
        self.conj = Some(conj);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_dim(self.dim, labels.len())?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub(crate) fn set_metadata(&mut self, metadata: BTreeMap<String, String>) {
        self.metadata = metadata;
    }

    /// Same product, new twisting map; drops the conjugation.
    pub fn with_alpha(&self, alpha: LinearMap) -> Result<Self> {
        check_dim(self.dim, alpha.dim())?;
        Ok(HomAlgebra {
            dim: self.dim,
            table: self.table.clone(),
            alpha,
            conj: None,
            labels: self.labels.clone(),
            metadata: self.metadata.clone(),
            alpha_powers: RwLock::new(Vec::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn conjugation(&self) -> Option<&LinearMap> {
        self.conj.as_ref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.table, Table::Dense(_))
    }

    /// `α^k`, memoized.
    pub fn alpha_power(&self, k: usize) -> Arc<LinearMap> {
        if let Some(m) = self.alpha_powers.read().expect("poisoned").get(k) {
            return Arc::clone(m);
        }
        let mut cache = self.alpha_powers.write().expect("poisoned");
        if cache.is_empty() {
            cache.push(Arc::new(LinearMap::identity(self.dim)));
        }
        while cache.len() <= k {
            let next = self.alpha.compose(cache.last().expect("non-empty")).expect("same dimension");
            cache.push(Arc::new(next));
        }
        Arc::clone(&cache[k])
    }

    /// `α^k(x)` without dimension checks.
    pub(crate) fn alpha_pow_apply(&self, k: usize, x: &Element) -> Element {
        match k {
            0 => x.clone(),
            1 => self.alpha.apply_unchecked(x),
            _ => self.alpha_power(k).apply_unchecked(x),
        }
    }

    /// Nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.row(i, j) {
                    out.push((i, j, k, c.clone()));
                }
            }
        }
        out
    }

    fn row(&self, i: usize, j: usize) -> Box<dyn Iterator<Item = (usize, &Scalar)> + '_> {
        let d = self.dim;
        match &self.table {
            Table::Sparse(rows) => Box::new(rows[i * d + j].iter().map(|(k, c)| (*k, c))),
            Table::Dense(c) => {
                let base = (i * d + j) * d;
                Box::new(c[base..base + d].iter().enumerate().filter(|(_, c)| !c.is_zero()))
            }
        }
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let mut out = Element::zero(self.dim);
        for (k, c) in self.row(i, j) {
            out.add_at(k, c.clone());
        }
        out
    }

    /// `e_i e_j = sign * e_k` when the product is a single basis vector with
    /// coefficient `±1`.
    pub fn monomial_product(&self, i: usize, j: usize) -> Option<(i64, usize)> {
        let mut it = self.row(i, j);
        let (k, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        if c.is_one() {
            Some((1, k))
        } else if (-c).is_one() {
            Some((-1, k))
        } else {
            None
        }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        check_dim(self.dim, x.dim())?;
        check_dim(self.dim, y.dim())?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        let d = self.dim;
        let mut out = Element::zero(d);
        let ys: Vec<(usize, &Scalar)> = y.support().collect();
        for (i, xi) in x.support() {
            for &(j, yj) in &ys {
                let xy = xi * yj;
                match &self.table {
                    Table::Sparse(rows) => {
                        for (k, c) in &rows[i * d + j] {
                            out.add_at(*k, &xy * c);
                        }
                    }
                    Table::Dense(cs) => {
                        let base = (i * d + j) * d;
                        for (k, c) in cs[base..base + d].iter().enumerate() {
                            if !c.is_zero() {
                                out.add_at(k, &xy * c);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `μ^op(x, y) = μ(y, x)`.
    pub fn op_mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.mul(y, x)
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(&self.mul(x, y)? - &self.mul(y, x)?)
    }

    /// `x ∙ y = xy + yx`.
    pub fn bullet(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(&self.mul(x, y)? + &self.mul(y, x)?)
    }

    pub(crate) fn bullet_unchecked(&self, x: &Element, y: &Element) -> Element {
        &self.mul_unchecked(x, y) + &self.mul_unchecked(y, x)
    }

    pub(crate) fn commutator_unchecked(&self, x: &Element, y: &Element) -> Element {
        &self.mul_unchecked(x, y) - &self.mul_unchecked(y, x)
    }

    pub fn apply_alpha(&self, x: &Element) -> Result<Element> {
        self.alpha.apply(x)
    }

    /// First basis pair `(i, j)` on which `f(e_i e_j) != f(e_i) f(e_j)`, if any.
    pub fn multiplicativity_defect(&self, f: &LinearMap) -> Result<Option<(usize, usize)>> {
        check_dim(self.dim, f.dim())?;
        let images: Vec<Element> = (0..self.dim).map(|j| f.column(j)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = f.apply_unchecked(&self.basis_product(i, j));
                let rhs = self.mul_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// `α μ = μ (α ⊗ α)` on all basis pairs, which suffices by bilinearity.
    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_defect(&self.alpha).expect("alpha has the algebra dimension").is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Checks that `f` is a morphism: `f μ = μ (f ⊗ f)` and `f α = α f`.
    pub fn check_morphism(&self, f: &LinearMap) -> Result<()> {
        if let Some((i, j)) = self.multiplicativity_defect(f)? {
            return Err(Error::NotMorphism(format!("f(e{i}e{j}) != f(e{i})f(e{j})")));
        }
        if f.compose(&self.alpha)? != self.alpha.compose(f)? {
            return Err(Error::NotMorphism("f does not commute with the twisting map".into()));
        }
        Ok(())
    }

    /// New algebra with product `f ∘ μ` and the given twisting map.
    pub(crate) fn map_products(&self, f: &LinearMap, alpha: LinearMap) -> Result<HomAlgebra> {
        check_dim(self.dim, f.dim())?;
        let mut h = HomAlgebra::from_products(self.dim, alpha, |i, j| f.apply_unchecked(&self.basis_product(i, j)))?;
        h.labels = self.labels.clone();
        Ok(h)
    }

    /// Equality of dimension, structure constants and twisting map.
    pub fn same_structure(&self, other: &HomAlgebra) -> bool {
        self.dim == other.dim && self.alpha == other.alpha && self.constants() == other.constants()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    pub fn one_plus_basis(&self, i: usize) -> Element {
        let mut e = Element::basis(self.dim, 0);
        e.add_at(i, Scalar::one());
        e
    }
}

impl PartialEq for HomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other)
    }
}

impl fmt::Debug for HomAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomAlgebra")
            .field("dim", &self.dim)
            .field("dense", &self.is_dense())
            .field("nonzero_constants", &self.constants().len())
            .field("alpha_is_identity", &self.alpha.is_identity())
            .field("has_conjugation", &self.conj.is_some())
            .field("metadata", &self.metadata)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar;

    /// Complex numbers over ℚ.
    fn complex() -> HomAlgebra {
        let entries = vec![
            (0, 0, 0, scalar::int(1)),
            (0, 1, 1, scalar::int(1)),
            (1, 0, 1, scalar::int(1)),
            (1, 1, 0, scalar::int(-1)),
        ];
        HomAlgebra::from_constants(2, entries, LinearMap::identity(2)).unwrap()
    }

    #[test]
    fn zero_algebra_products_vanish() {
        let h = HomAlgebra::from_constants(3, vec![], LinearMap::identity(3)).unwrap();
        let x = Element::from_ints(&[1, -2, 5]);
        assert!(h.mul(&x, &x).unwrap().is_zero());
        assert!(!h.is_dense());
    }

    #[test]
    fn dense_storage_above_threshold() {
        let c = complex();
        // 4 of 8 constants nonzero
        assert!(c.is_dense());
        let x = Element::from_ints(&[1, 2]);
        let y = Element::from_ints(&[3, -1]);
        assert_eq!(c.mul(&x, &y).unwrap(), Element::from_ints(&[5, 5]));
    }

    #[test]
    fn out_of_range_index_rejected() {
        let e = HomAlgebra::from_constants(2, vec![(0, 2, 0, scalar::one())], LinearMap::identity(2));
        assert_eq!(e.unwrap_err().code(), "dimension");
    }

    #[test]
    fn dimension_errors() {
        let c = complex();
        assert_eq!(c.mul(&Element::zero(3), &Element::zero(2)).unwrap_err().code(), "dimension");
        assert_eq!(c.op_mul(&Element::zero(2), &Element::zero(1)).unwrap_err().code(), "dimension");
    }

    #[test]
    fn conjugation_validated() {
        let conj = LinearMap::signed_permutation(&[(1, 0), (-1, 1)]).unwrap();
        assert!(complex().with_conjugation(conj).is_ok());
        let bad = LinearMap::signed_permutation(&[(1, 1), (1, 0)]).unwrap();
        assert_eq!(complex().with_conjugation(bad).unwrap_err().code(), "bad-involution");
    }

    #[test]
    fn alpha_zero_is_multiplicative() {
        let h = complex().with_alpha(LinearMap::zero(2)).unwrap();
        assert!(h.is_multiplicative());
        assert!(complex().is_multiplicative());
        let h = complex().with_alpha(LinearMap::identity(2).scale(&scalar::int(2))).unwrap();
        assert!(!h.is_multiplicative());
    }

    #[test]
    fn alpha_power_cache() {
        let sw = LinearMap::signed_permutation(&[(1, 1), (-1, 0)]).unwrap();
        let h = complex().with_alpha(sw.clone()).unwrap();
        assert_eq!(*h.alpha_power(3), sw.power(3));
        assert_eq!(*h.alpha_power(0), LinearMap::identity(2));
        assert_eq!(*h.clone().alpha_power(5), sw.power(5));
    }

    #[test]
    fn dim_one_is_commutative() {
        let h = HomAlgebra::from_constants(1, vec![(0, 0, 0, scalar::int(3))], LinearMap::identity(1)).unwrap();
        assert!(h.is_commutative());
    }
}
