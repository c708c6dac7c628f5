//! The interior of the positive cone, its projective rays, the Hilbert
//! metric, and the spectral inversion of rays.

use crate::algebra::{quadratic_rep, AlgebraDescriptor, Element};
use crate::error::{Error, Result};
use crate::sample::{derive_seed, sample_interior, Rng};
use crate::spectral::{
    exp_el, inverse, log_el, order_unit_norm, power, quotient_norm, spectral_bounds,
};
use crate::tol::{LINEARITY_TOL, NEGATIVITY_TOL, RAY_EQ_TOL, TOL_BOUNDARY};

/// Strict positivity of the spectrum, with an absolute floor so boundary
/// points within 1e-12 are rejected.
pub fn in_cone_interior(x: &Element) -> bool {
    let (lo, _) = spectral_bounds(x);
    lo > TOL_BOUNDARY
}

/// Upper gauge M(x/y): the largest eigenvalue of U_{y^{-1/2}} x, i.e. the
/// least t with x ≤ t·y.  Both arguments must be interior.
pub fn upper_gauge(x: &Element, y: &Element) -> Result<f64> {
    if x.algebra() != y.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if !in_cone_interior(x) || !in_cone_interior(y) {
        return Err(Error::Boundary);
    }
    let w = power(y, -0.5)?;
    let z = quadratic_rep(&w, x)?;
    Ok(spectral_bounds(&z).1)
}

/// Hilbert projective distance log M(x/y) + log M(y/x); zero exactly on
/// proportional pairs (tiny negative rounding is clamped to 0).
pub fn hilbert_distance(x: &Element, y: &Element) -> Result<f64> {
    let a = upper_gauge(x, y)?;
    let b = upper_gauge(y, x)?;
    Ok((a.ln() + b.ln()).max(0.0))
}

/// A ray of the cone interior, stored through its trace-normalized
/// representative: ⟨rep, e⟩ = ⟨e, e⟩ = rank.
#[derive(Clone, Debug, PartialEq)]
pub struct Ray {
    rep: Element,
}

impl Ray {
    /// Normalizes an interior element onto its ray.  Elements with genuinely
    /// negative spectrum report `NonPositive`; nonnegative elements that touch
    /// the boundary report `Boundary`.
    pub fn of(x: &Element) -> Result<Ray> {
        let (lo, hi) = spectral_bounds(x);
        let scale = lo.abs().max(hi.abs()).max(1.0);
        if lo < -NEGATIVITY_TOL * scale {
            return Err(Error::NonPositive);
        }
        if lo <= TOL_BOUNDARY {
            return Err(Error::Boundary);
        }
        let rank = x.algebra().rank() as f64;
        let rep = x.scale(rank / x.trace());
        Ok(Ray { rep })
    }

    pub fn representative(&self) -> &Element {
        &self.rep
    }

    pub fn algebra(&self) -> &AlgebraDescriptor {
        self.rep.algebra()
    }
}

/// Two rays coincide when their normalized representatives agree to within
/// the ray tolerance.
pub fn ray_equal(a: &Ray, b: &Ray) -> bool {
    if a.algebra() != b.algebra() {
        return false;
    }
    let diff = a.rep.sub(&b.rep).expect("same algebra");
    order_unit_norm(&diff) <= RAY_EQ_TOL
}

/// An element of the quotient by the line ℝe, stored through its traceless
/// representative.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientClass {
    rep: Element,
}

impl QuotientClass {
    pub fn of(x: &Element) -> QuotientClass {
        let alg = x.algebra();
        let shift = x.trace() / alg.rank() as f64;
        let rep = x.add_scaled(-shift, &alg.unit()).expect("same algebra");
        QuotientClass { rep }
    }

    /// The unique traceless representative.
    pub fn representative(&self) -> &Element {
        &self.rep
    }

    pub fn algebra(&self) -> &AlgebraDescriptor {
        self.rep.algebra()
    }

    /// Distance in the quotient norm (half the variation seminorm).
    pub fn distance(&self, other: &QuotientClass) -> Result<f64> {
        let diff = self.rep.sub(&other.rep)?;
        Ok(quotient_norm(&diff))
    }
}

pub fn class_equal(a: &QuotientClass, b: &QuotientClass) -> bool {
    match a.distance(b) {
        Ok(d) => d <= RAY_EQ_TOL,
        Err(_) => false,
    }
}

/// Spectral logarithm of a ray, landing in the traceless quotient.
pub fn log_ray(r: &Ray) -> Result<QuotientClass> {
    Ok(QuotientClass::of(&log_el(&r.rep)?))
}

/// Spectral exponential of a quotient class, landing back on a ray.
pub fn exp_class(q: &QuotientClass) -> Result<Ray> {
    Ray::of(&exp_el(&q.rep)?)
}

/// Ray-level spectral inversion ι([x]) = [x⁻¹].
pub fn inversion(r: &Ray) -> Result<Ray> {
    Ray::of(&inverse(&r.rep)?)
}

/// √⟨x, x⟩ in the trace form — positive definite, used for residuals.
fn trace_norm(x: &Element) -> f64 {
    x.trace_inner_product(x).expect("same algebra").sqrt()
}

/// Relative residual of the best approximation of `t` in span{a, b}.
fn span_residual(t: &Element, a: &Element, b: &Element) -> f64 {
    let gaa = a.trace_inner_product(a).unwrap();
    let gab = a.trace_inner_product(b).unwrap();
    let gbb = b.trace_inner_product(b).unwrap();
    let ra = a.trace_inner_product(t).unwrap();
    let rb = b.trace_inner_product(t).unwrap();
    let det = gaa * gbb - gab * gab;
    let (alpha, beta) = if det > 1e-14 * gaa * gbb {
        ((gbb * ra - gab * rb) / det, (gaa * rb - gab * ra) / det)
    } else {
        (ra / gaa, 0.0)
    };
    let fit = a.scale(alpha).add_scaled(beta, b).unwrap();
    let res = t.sub(&fit).unwrap();
    trace_norm(&res) / trace_norm(t).max(f64::MIN_POSITIVE)
}

/// Empirically decides whether ray inversion extends to a linear map up to
/// scale: every sampled ι(x+y) must stay in span{ι(x), ι(y)}, and when the
/// rank is at least three a fixed three-eigenvalue witness is tested as well
/// (for such algebras the witness equations are inconsistent, so this returns
/// false deterministically).
pub fn inversion_is_linear_up_to_scale(
    alg: &AlgebraDescriptor,
    seed: u64,
    samples: usize,
) -> bool {
    let mut rng = Rng::new(derive_seed(seed, "inversion-linearity"));
    for _ in 0..samples {
        let x = sample_interior(alg, &mut rng);
        let y = sample_interior(alg, &mut rng);
        let ix = inverse(&x).expect("interior");
        let iy = inverse(&y).expect("interior");
        let ixy = inverse(&x.add(&y).expect("same algebra")).expect("interior");
        if span_residual(&ixy, &ix, &iy) > LINEARITY_TOL {
            return false;
        }
    }
    if alg.rank() >= 3 {
        // f has eigenvalues {1, 2, 3}; if inversion were linear up to scale,
        // (f+e)⁻¹ would solve α·f⁻¹ + β·e, i.e. 1/(λ+1) = α/λ + β for all
        // three eigenvalues — an inconsistent system.
        let frame = alg.jordan_frame();
        let mut f = frame[0].clone();
        f = f.add_scaled(2.0, &frame[1]).unwrap();
        let mut rest = alg.unit().sub(&frame[0]).unwrap();
        rest = rest.sub(&frame[1]).unwrap();
        f = f.add_scaled(3.0, &rest).unwrap();
        let lhs = inverse(&f.add(&alg.unit()).unwrap()).expect("interior");
        let finv = inverse(&f).expect("interior");
        if span_residual(&lhs, &finv, &alg.unit()) > LINEARITY_TOL {
            return false;
        }
    }
    true
}
