//! The Cayley-Dickson doubling and the calibrated sedenion tower.
//!
//! The doubled algebra has basis `e_i = (e_i, 0)` for `i < n` and
//! `e_{n+i} = (0, e_i)`, with conjugation `(a, b) ↦ (ā, -b)`. Several sign
//! conventions for the doubled product are in common use; they give
//! isomorphic algebras but different tables on the standard basis, so the
//! convention is a parameter and the sedenions are built with a calibrated one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::HomAlgebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar::{self, Scalar};

use super::quadruple::listed_sedenion_map;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DoublingConvention {
    /// `(a,b)(c,d) = (ac + γ d̄b, da + bc̄)`
    DbarB,
    /// `(a,b)(c,d) = (ac + γ d̄b, ād + cb)`
    DbarBConjA,
    /// `(a,b)(c,d) = (ac + γ db̄, ād + cb)`
    DBbarConjA,
    /// `(a,b)(c,d) = (ac + γ b̄d, da + bc̄)`
    BbarD,
}

impl DoublingConvention {
    pub const ALL: [DoublingConvention; 4] = [
        DoublingConvention::DbarB,
        DoublingConvention::DbarBConjA,
        DoublingConvention::DBbarConjA,
        DoublingConvention::BbarD,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            DoublingConvention::DbarB => "(a,b)(c,d) = (ac + g*conj(d)b, da + b*conj(c))",
            DoublingConvention::DbarBConjA => "(a,b)(c,d) = (ac + g*conj(d)b, conj(a)d + cb)",
            DoublingConvention::DBbarConjA => "(a,b)(c,d) = (ac + g*d*conj(b), conj(a)d + cb)",
            DoublingConvention::BbarD => "(a,b)(c,d) = (ac + g*conj(b)d, da + b*conj(c))",
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            DoublingConvention::DbarB => "dbar-b",
            DoublingConvention::DbarBConjA => "dbar-b-conj-a",
            DoublingConvention::DBbarConjA => "d-bbar-conj-a",
            DoublingConvention::BbarD => "bbar-d",
        }
    }
}

impl fmt::Display for DoublingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The rationals as a one-dimensional algebra with identity conjugation.
pub fn rationals() -> HomAlgebra {
    HomAlgebra::from_constants(1, vec![(0, 0, 0, scalar::one())], LinearMap::identity(1))
        .and_then(|h| h.with_conjugation(LinearMap::identity(1)))
        .expect("one-dimensional field")
}

/// One Cayley-Dickson doubling step with parameter `gamma`.
pub fn cayley_dickson(h: &HomAlgebra, gamma: &Scalar, convention: DoublingConvention) -> Result<HomAlgebra> {
    let conj = h.conjugation().ok_or(Error::NoInvolution)?.clone();
    if !h.alpha().is_identity() {
        return Err(Error::Invalid("Cayley-Dickson doubling needs an ordinary algebra (α = Id)".into()));
    }
    let n = h.dim();
    let bar = |x: &Element| conj.apply_unchecked(x);
    let mul = |x: &Element, y: &Element| h.mul_unchecked(x, y);
    let split = |i: usize| -> (Element, Element) {
        if i < n {
            (Element::basis(n, i), Element::zero(n))
        } else {
            (Element::zero(n), Element::basis(n, i - n))
        }
    };
    let product = |i: usize, j: usize| -> Element {
        let (a, b) = split(i);
        let (c, d) = split(j);
        let bd = match convention {
            DoublingConvention::DbarB | DoublingConvention::DbarBConjA => mul(&bar(&d), &b),
            DoublingConvention::DBbarConjA => mul(&d, &bar(&b)),
            DoublingConvention::BbarD => mul(&bar(&b), &d),
        };
        let first = &mul(&a, &c) + &bd.scale(gamma);
        let second = match convention {
            DoublingConvention::DbarB | DoublingConvention::BbarD => &mul(&d, &a) + &mul(&b, &bar(&c)),
            DoublingConvention::DbarBConjA | DoublingConvention::DBbarConjA => &mul(&bar(&a), &d) + &mul(&c, &b),
        };
        let mut coords = first.into_coords();
        coords.extend(second.into_coords());
        Element::from_coords(coords)
    };
    let doubled = HomAlgebra::from_products(2 * n, LinearMap::identity(2 * n), product)?;
    let conj_columns: Vec<Element> = (0..2 * n)
        .map(|i| {
            let (a, b) = split(i);
            let mut coords = bar(&a).into_coords();
            coords.extend((-b).into_coords());
            Element::from_coords(coords)
        })
        .collect();
    let labels = (0..2 * n).map(|i| format!("e{i}")).collect();
    doubled.with_conjugation(LinearMap::from_columns(&conj_columns)?)?.with_labels(labels).map(|h| {
        h.with_metadata("cayley_dickson.convention", convention.id())
            .with_metadata("cayley_dickson.gamma", scalar::format(gamma))
    })
}

/// `levels` doublings of the rationals.
pub fn tower(levels: usize, gamma: &Scalar, convention: DoublingConvention) -> Result<HomAlgebra> {
    let mut h = rationals();
    for _ in 0..levels {
        h = cayley_dickson(&h, gamma, convention)?;
    }
    Ok(h)
}

/// `e_i² = -e_0` for every imaginary unit and `e_i e_j = -e_j e_i` for `i != j`.
pub fn imaginary_units_anticommute(h: &HomAlgebra) -> bool {
    let d = h.dim();
    let minus_one = -Element::basis(d, 0);
    (1..d).all(|i| {
        h.basis_product(i, i) == minus_one && (i + 1..d).all(|j| h.basis_product(i, j) == -h.basis_product(j, i))
    })
}

/// Outcome of testing one doubling convention against the sedenion data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionCheck {
    pub convention: DoublingConvention,
    pub units_anticommute: bool,
    pub listed_map_is_automorphism: bool,
    pub left_alternative_fails: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Calibration {
    pub checks: Vec<ConventionCheck>,
    pub selected: DoublingConvention,
    pub rule: &'static str,
}

/// Left-alternativity defect `(xx)y - x(xy)` at `x = e1 + e8`, `y = e3 + e9`.
pub fn sedenion_left_alternative_defect(s: &HomAlgebra) -> Element {
    let x = Element::from_terms(16, &[(1, 1), (8, 1)]);
    let y = Element::from_terms(16, &[(3, 1), (9, 1)]);
    &s.mul_unchecked(&s.mul_unchecked(&x, &x), &y) - &s.mul_unchecked(&x, &s.mul_unchecked(&x, &y))
}

/// Tests every convention on the four-fold doubling with `γ = -1`.
///
/// Selection: the first convention whose imaginary units square to `-1` and
/// anticommute and for which the listed sedenion map is an automorphism; if
/// no convention admits the listed map, the first one with anticommuting units
/// on which left-alternativity fails at `x = e1 + e8`, `y = e3 + e9`.
pub fn calibrate_sedenions() -> Calibration {
    let gamma = scalar::int(-1);
    let listed = listed_sedenion_map();
    let checks: Vec<ConventionCheck> = DoublingConvention::ALL
        .iter()
        .map(|&convention| {
            let s = tower(4, &gamma, convention).expect("doubling of a conjugation algebra");
            ConventionCheck {
                convention,
                units_anticommute: imaginary_units_anticommute(&s),
                listed_map_is_automorphism: s.multiplicativity_defect(&listed).expect("dim 16").is_none(),
                left_alternative_fails: !sedenion_left_alternative_defect(&s).is_zero(),
            }
        })
        .collect();
    let strict = checks.iter().find(|c| c.units_anticommute && c.listed_map_is_automorphism);
    let (selected, rule) = match strict {
        Some(c) => (c.convention, "units+listed-automorphism"),
        None => {
            let c = checks
                .iter()
                .find(|c| c.units_anticommute && c.left_alternative_fails)
                .or_else(|| checks.iter().find(|c| c.units_anticommute))
                .expect("at least one convention gives anticommuting units");
            (c.convention, "units+left-alternative-failure")
        }
    };
    Calibration { checks, selected, rule }
}

/// The sedenions: four doublings of ℚ with `γ = -1` in the calibrated convention.
pub fn sedenions() -> HomAlgebra {
    let cal = calibrate_sedenions();
    tower(4, &scalar::int(-1), cal.selected)
        .expect("doubling of a conjugation algebra")
        .with_metadata("cayley_dickson.calibration", cal.rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_numbers() {
        let c = cayley_dickson(&rationals(), &scalar::int(-1), DoublingConvention::DbarB).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.basis_product(1, 1), -Element::basis(2, 0));
        assert!(c.is_commutative());
    }

    #[test]
    fn every_convention_gives_a_conjugation_algebra() {
        for conv in DoublingConvention::ALL {
            let s = tower(4, &scalar::int(-1), conv).unwrap();
            assert!(s.conjugation().is_some());
            assert!(imaginary_units_anticommute(&s), "{conv}");
        }
    }

    #[test]
    fn subalgebra_property() {
        for conv in DoublingConvention::ALL {
            let mut prev = rationals();
            for _ in 0..4 {
                let next = cayley_dickson(&prev, &scalar::int(-1), conv).unwrap();
                let n = prev.dim();
                for i in 0..n {
                    for j in 0..n {
                        let p = next.basis_product(i, j);
                        let q = prev.basis_product(i, j);
                        assert_eq!(&p.coords()[..n], q.coords());
                        assert!(p.coords()[n..].iter().all(|c| *c == scalar::zero()));
                    }
                }
                prev = next;
            }
        }
    }

    #[test]
    fn requires_conjugation() {
        let plain = rationals().with_alpha(LinearMap::identity(1)).unwrap();
        assert_eq!(
            cayley_dickson(&plain, &scalar::int(-1), DoublingConvention::DbarB).unwrap_err().code(),
            "no-involution"
        );
    }

    #[test]
    fn calibration_is_recorded() {
        let cal = calibrate_sedenions();
        assert!(cal.checks.iter().all(|c| c.units_anticommute));
        let s = sedenions();
        assert_eq!(s.metadata()["cayley_dickson.convention"], cal.selected.id());
        assert_eq!(s.metadata()["cayley_dickson.calibration"], cal.rule);
    }
}
