//! Constructors for the example algebras and the Hom-algebra constructions
//! built on top of them.

mod cayley_dickson;
mod jordan;
mod octonions;
mod quadruple;
mod twist;

pub use cayley_dickson::{
    calibrate_sedenions, cayley_dickson, imaginary_units_anticommute, rationals, sedenion_left_alternative_defect,
    sedenions, tower, Calibration, ConventionCheck, DoublingConvention,
};
pub use jordan::{extend_entrywise, hermitian_jordan, twisted_jordan, HermitianOct3};
pub use octonions::{
    load_octonions, octonion_automorphism, octonion_conjugation, twisted_octonions, OCTONION_AUTOMORPHISM,
    OCTONION_TABLE,
};
pub use quadruple::{
    listed_sedenion_map, quadruple_automorphism, quadruple_extension, BasicQuadruple, QuadrupleExtension,
    LISTED_SEDENION_IMAGES,
};
pub use twist::{
    derived_hom_algebra, lambda_algebra, minus_algebra, opposite_algebra, plus_algebra, twist_product, twist_unchecked,
    yau_twist,
};
