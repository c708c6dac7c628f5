//! Finite-dimensional formally real Jordan algebras, the Hilbert projective
//! metric on the interior of their positive cones, the variation seminorm on
//! the quotient by the order unit, and the factorization of the isometries of
//! both structures into normal form.
//!
//! The crate is organized in layers:
//!
//! * [`algebra`] — descriptors, elements, the product, and the trace form;
//! * [`spectral`] — spectral decompositions, functional calculus, norms;
//! * [`cone`] — cone membership, gauges, the Hilbert metric, rays, inversion;
//! * [`dual`] — functionals, supports, faces of the state space;
//! * [`isometry`] / [`factor`] — structure maps and their factorization;
//! * [`sample`] — seeded reproducible samplers;
//! * [`suite`] — the property-based verification suites and their reports.
//!
//! All serialized forms are JSON; decoding always re-validates, so malformed
//! input is rejected with a typed [`error::Error`] rather than a panic.

pub mod algebra;
pub mod cone;
pub mod dual;
pub mod error;
pub mod factor;
pub mod isometry;
pub mod linalg;
pub mod sample;
pub mod spectral;
pub mod suite;
pub mod tol;

pub use algebra::{
    embed_summand, extract_summand, quadratic_rep, triple_product, AlgebraDescriptor, Element,
};
pub use cone::{
    class_equal, exp_class, hilbert_distance, in_cone_interior, inversion,
    inversion_is_linear_up_to_scale, log_ray, ray_equal, upper_gauge, QuotientClass, Ray,
};
pub use dual::{
    dual_norm, extreme_point_check, face_diameter_le_2, functionals_orthogonal,
    norming_class_of_face, orthogonal_decomposition, projection_join, sampled_face_diameter,
    support_projection, FaceDescriptor, Functional, Projection, StateDescriptor,
};
pub use error::{Error, Result};
pub use factor::{
    factor_hilbert_isometry, factor_variation_isometry, hamhalter_decompose,
    variation_isometry_from_hilbert,
};
pub use isometry::{
    classify_isometry_group, conjugated_projectivity, jordan_iso_residual,
    verify_hilbert_isometry, verify_jordan_iso, verify_variation_isometry,
    AffineVariationIsometry, CoordLinearMap, HilbertIsometry, IsometryGroup, JordanIsomorphism,
    QuotientMapFn, RayMapFn, Sign, VariationIsometry,
};
pub use sample::{
    derive_seed, sample_element, sample_interior, sample_jordan_iso, sample_projection, Rng,
};
pub use spectral::{
    exp_el, functional_calculus, inverse, log_el, order_unit_norm, power, quotient_norm,
    spectral_bounds, spectral_decomposition, spectrum, variation_seminorm, SpectralDecomposition,
};
pub use suite::{default_algebras, run_suite, PropertyRecord, SuiteConfig, SuiteReport};
