//! The character variety of the m137 knot complement.
pub mod apoly;
pub mod classify;
pub mod curve;
pub mod irreducible;
pub mod presentation;
pub mod reconstruct;

pub use apoly::{validate_a_polynomial, APolyValidation, APolynomialForm};
pub use classify::{
    classify_character_point, su2_triangle_criterion, verify_unitarity_reduction, CharacterClass, CharacterPoint,
    UnitarityReduction,
};
pub use curve::{
    derive_character_curve, derive_character_curve_with, published_generators, w_coordinate, CharacterCurve,
    CurveDerivation, DerivationPath, Strategy,
};
pub use irreducible::{irreducibility_certificate, IrreducibilityCertificate};
pub use presentation::{generic_images, relator_entry_equations, trace_relations, Presentation};
pub use reconstruct::{reconstruct_representation, Reconstruction, ReconstructionMode, RepresentationParams};
