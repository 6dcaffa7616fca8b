//! Hom-powers and the multilinear expressions built from `μ` and `α`.

use crate::algebra::HomAlgebra;
use crate::element::Element;
use crate::error::{check_dim, Error, Result};
use crate::perm::{index_set_left, index_set_right, Perm};

/// Memoized Hom-powers `x¹, x², ...` of one element.
pub struct PowerCache<'a> {
    h: &'a HomAlgebra,
    /// `alpha_x[k] = α^k(x)`
    alpha_x: Vec<Element>,
    /// `powers[n - 1] = xⁿ`
    powers: Vec<Element>,
}

impl<'a> PowerCache<'a> {
    pub fn new(h: &'a HomAlgebra, x: &Element) -> Result<Self> {
        check_dim(h.dim(), x.dim())?;
        Ok(PowerCache { h, alpha_x: vec![x.clone()], powers: vec![x.clone()] })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        self.h
    }

    pub fn element(&self) -> &Element {
        &self.powers[0]
    }

    fn alpha_x(&mut self, k: usize) -> &Element {
        while self.alpha_x.len() <= k {
            let next = self.h.alpha().apply_unchecked(self.alpha_x.last().expect("non-empty"));
            self.alpha_x.push(next);
        }
        &self.alpha_x[k]
    }

    /// `xⁿ = x^{n-1} α^{n-2}(x)`.
    pub fn power(&mut self, n: usize) -> Result<&Element> {
        if n == 0 {
            return Err(Error::UndefinedPower);
        }
        while self.powers.len() < n {
            let m = self.powers.len() + 1;
            let a = self.alpha_x(m - 2).clone();
            let next = self.h.mul_unchecked(self.powers.last().expect("non-empty"), &a);
            self.powers.push(next);
        }
        Ok(&self.powers[n - 1])
    }

    /// `x^{i,j} = α^{j-1}(xⁱ) α^{i-1}(xʲ)`.
    pub fn pair(&mut self, i: usize, j: usize) -> Result<Element> {
        if i == 0 || j == 0 {
            return Err(Error::ZeroIndex);
        }
        let xi = self.power(i)?.clone();
        let xj = self.power(j)?.clone();
        let left = self.h.alpha_pow_apply(j - 1, &xi);
        let right = self.h.alpha_pow_apply(i - 1, &xj);
        Ok(self.h.mul_unchecked(&left, &right))
    }
}

pub fn hom_power(h: &HomAlgebra, x: &Element, n: usize) -> Result<Element> {
    let mut cache = PowerCache::new(h, x)?;
    cache.power(n).cloned()
}

pub fn power_pair(h: &HomAlgebra, x: &Element, i: usize, j: usize) -> Result<Element> {
    PowerCache::new(h, x)?.pair(i, j)
}

fn check3(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<()> {
    for v in [x, y, z] {
        check_dim(h.dim(), v.dim())?;
    }
    Ok(())
}

pub(crate) fn assoc(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let a = h.alpha();
    let left = h.mul_unchecked(&h.mul_unchecked(x, y), &a.apply_unchecked(z));
    let right = h.mul_unchecked(&a.apply_unchecked(x), &h.mul_unchecked(y, z));
    &left - &right
}

pub(crate) fn cyclic(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    &(&assoc(h, x, y, z) + &assoc(h, z, x, y)) + &assoc(h, y, z, x)
}

pub(crate) fn jacobian(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let a = h.alpha();
    let term = |p: &Element, q: &Element, r: &Element| h.mul_unchecked(&h.mul_unchecked(p, q), &a.apply_unchecked(r));
    &(&term(x, y, z) + &term(z, x, y)) + &term(y, z, x)
}

/// `as(x, y, z) = (xy)α(z) - α(x)(yz)`.
pub fn hom_associator(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check3(h, x, y, z)?;
    Ok(assoc(h, x, y, z))
}

/// `S(x, y, z) = as(x, y, z) + as(z, x, y) + as(y, z, x)`.
pub fn cyclic_associator(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check3(h, x, y, z)?;
    Ok(cyclic(h, x, y, z))
}

/// `J(x, y, z) = (xy)α(z) + (zx)α(y) + (yz)α(x)`.
pub fn hom_jacobian(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    check3(h, x, y, z)?;
    Ok(jacobian(h, x, y, z))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FComponents {
    pub left: Element,
    pub right: Element,
    pub f: Element,
}

/// Permutation lists for `F_L` and `F_R`, built once.
pub struct FIndexSets {
    pub left: Vec<Perm>,
    pub right: Vec<Perm>,
}

impl Default for FIndexSets {
    fn default() -> Self {
        FIndexSets { left: index_set_left(), right: index_set_right() }
    }
}

impl FIndexSets {
    pub(crate) fn evaluate(&self, h: &HomAlgebra, args: [&Element; 4]) -> FComponents {
        let a1 = h.alpha_power(1);
        let a2 = h.alpha_power(2);
        let d = h.dim();
        let mut left = Element::zero(d);
        for p in &self.left {
            let [x, y, z, w] = <[&Element; 4]>::try_from(p.act(&args)).expect("four slots");
            let xy = h.bullet_unchecked(x, y);
            let t = h.mul_unchecked(&h.mul_unchecked(&xy, &a1.apply_unchecked(z)), &a2.apply_unchecked(w));
            left = &left + &t;
        }
        let mut right = Element::zero(d);
        for p in &self.right {
            let [x, y, z, w] = <[&Element; 4]>::try_from(p.act(&args)).expect("four slots");
            let l = a1.apply_unchecked(&h.bullet_unchecked(x, y));
            let r = a1.apply_unchecked(&h.bullet_unchecked(z, w));
            right = &right + &h.mul_unchecked(&l, &r);
        }
        let f = &left - &right;
        FComponents { left, right, f }
    }
}

/// `F_L = Σ_{I_L} ((x∙y)α(z))α²(w)`, `F_R = Σ_{I_R} α(x∙y)α(z∙w)`, `F = F_L - F_R`.
pub fn f_components(h: &HomAlgebra, x: &Element, y: &Element, z: &Element, w: &Element) -> Result<FComponents> {
    for v in [x, y, z, w] {
        check_dim(h.dim(), v.dim())?;
    }
    Ok(FIndexSets::default().evaluate(h, [x, y, z, w]))
}

fn sq(h: &HomAlgebra, x: &Element) -> Element {
    h.mul_unchecked(x, x)
}

/// `(u α(v)) α²(w)`
fn left_nested(h: &HomAlgebra, u: &Element, v: &Element, w: &Element) -> Element {
    h.mul_unchecked(&h.mul_unchecked(u, &h.alpha_pow_apply(1, v)), &h.alpha_pow_apply(2, w))
}

/// `B(x) = (x²α(x))α²(x) - α(x²)α(x²)`
pub(crate) fn defect_b(h: &HomAlgebra, x: &Element) -> Element {
    let ax2 = h.alpha_pow_apply(1, &sq(h, x));
    &left_nested(h, &sq(h, x), x, x) - &h.mul_unchecked(&ax2, &ax2)
}

pub(crate) fn defect_d(h: &HomAlgebra, x: &Element, y: &Element) -> Element {
    let a = |v: &Element| h.alpha_pow_apply(1, v);
    let xy = h.bullet_unchecked(x, y);
    let plus = [
        left_nested(h, &sq(h, y), x, x),
        left_nested(h, &sq(h, x), y, y),
        left_nested(h, &xy, x, y),
        left_nested(h, &xy, y, x),
    ];
    let minus = [h.mul_unchecked(&a(&xy), &a(&xy)), h.bullet_unchecked(&a(&sq(h, x)), &a(&sq(h, y)))];
    &Element::sum(h.dim(), &plus) - &Element::sum(h.dim(), &minus)
}

pub(crate) fn defect_e(h: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let a = |v: &Element| h.alpha_pow_apply(1, v);
    let b = |u: &Element, v: &Element| h.bullet_unchecked(u, v);
    let y2 = sq(h, y);
    let plus = [
        left_nested(h, &y2, x, z),
        left_nested(h, &y2, z, x),
        left_nested(h, &b(x, z), y, y),
        left_nested(h, &b(x, y), z, y),
        left_nested(h, &b(z, y), x, y),
        left_nested(h, &b(x, y), y, z),
        left_nested(h, &b(z, y), y, x),
    ];
    let minus = [b(&a(&b(x, y)), &a(&b(z, y))), b(&a(&b(x, z)), &a(&y2))];
    &Element::sum(h.dim(), &plus) - &Element::sum(h.dim(), &minus)
}

/// `B(x)`, `D(x, y)` or `E(x, y, z)` depending on how many arguments are given.
pub fn fourth_defects(h: &HomAlgebra, args: &[Element]) -> Result<Element> {
    for v in args {
        check_dim(h.dim(), v.dim())?;
    }
    match args {
        [x] => Ok(defect_b(h, x)),
        [x, y] => Ok(defect_d(h, x, y)),
        [x, y, z] => Ok(defect_e(h, x, y, z)),
        _ => Err(Error::Invalid(format!("fourth_defects takes 1 to 3 arguments, got {}", args.len()))),
    }
}
