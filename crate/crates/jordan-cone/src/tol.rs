//! Numerical tolerances, collected in one place so each threshold has a single
//! authoritative value and a stated role.  Functions that accept a tolerance
//! scale multiply these defaults; nothing else in the crate hard-codes one.

/// Idempotency slack: `p` is accepted as a projection when ‖p∘p − p‖ ≤ TOL_IDEM
/// in the order-unit norm.  Also the slack for operator products that must
/// vanish (orthogonality of projections, support tests).
pub const TOL_IDEM: f64 = 1e-8;

/// Strict-positivity margin.  Eigenvalues ≤ TOL_BOUNDARY count as "on the
/// boundary": cone-interior tests, logarithm/fractional-power domains and
/// support membership all use it.
pub const TOL_BOUNDARY: f64 = 1e-12;

/// Two normalized rays are equal when their representatives differ by at most
/// this much in the order-unit norm.
pub const RAY_EQ_TOL: f64 = 1e-9;

/// Projective-distance slack for map-level ray comparisons (two ways of
/// computing the image of a ray must agree to within this d_H).
pub const RAY_MAP_TOL: f64 = 1e-8;

/// Orthogonality slack for matrices supplied as isomorphism data:
/// ‖QᵀQ − I‖_max ≤ TOL_ORTHOGONALITY.
pub const TOL_ORTHOGONALITY: f64 = 1e-10;

/// Sampled isometry pre-checks (distance or seminorm preservation).
pub const ISOMETRY_CHECK_TOL: f64 = 1e-8;

/// Residual bound certifying that a map assembled column-by-column really is
/// linear on the quotient.
pub const LINEARITY_TOL: f64 = 1e-7;

/// Final verification bound for factored isometries: the reconstructed
/// canonical map must agree with the input map to within this residual.
pub const FACTOR_VERIFY_TOL: f64 = 1e-6;

/// Residual bound for splitting an affine isometry into εJ + e⊗φ.
pub const AFFINE_RESIDUAL_TOL: f64 = 1e-7;

/// A functional is rejected as "not positive" when its representer has an
/// eigenvalue below −NEGATIVITY_TOL·max(1, ‖a‖).
pub const NEGATIVITY_TOL: f64 = 1e-9;

/// Eigenvalue clustering width: eigenvalues closer than this merge into one
/// spectral cluster.  `scale` is the largest |eigenvalue| of the element.
pub fn cluster_width(scale: f64) -> f64 {
    1e-9 * scale.max(1.0)
}
