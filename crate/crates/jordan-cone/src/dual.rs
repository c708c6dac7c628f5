//! Positive functionals, support projections, faces of the state space, and
//! the geometry of the dual (base-norm) ball.
//!
//! Functionals are represented through the trace form: φ(x) = ⟨r, x⟩.  The
//! dual norm of φ is Σ |μᵢ|·mult(μᵢ) over the spectrum of r.

use serde::{Deserialize, Serialize};

use crate::algebra::{quadratic_rep, AlgebraDescriptor, Element};
use crate::cone::QuotientClass;
use crate::error::{Error, Result};
use crate::sample::{derive_seed, sample_interior, Rng};
use crate::spectral::{order_unit_norm, spectral_bounds, spectral_decomposition};
use crate::tol::{NEGATIVITY_TOL, TOL_BOUNDARY, TOL_IDEM, TOL_ORTHOGONALITY};

/// Linear functional φ(x) = ⟨representer, x⟩ in the trace form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Functional {
    representer: Element,
}

impl Functional {
    pub fn new(representer: Element) -> Functional {
        Functional { representer }
    }

    pub fn representer(&self) -> &Element {
        &self.representer
    }

    pub fn algebra(&self) -> &AlgebraDescriptor {
        self.representer.algebra()
    }

    pub fn apply(&self, x: &Element) -> Result<f64> {
        self.representer.trace_inner_product(x)
    }

    pub fn add(&self, other: &Functional) -> Result<Functional> {
        Ok(Functional::new(self.representer.add(&other.representer)?))
    }

    pub fn sub(&self, other: &Functional) -> Result<Functional> {
        Ok(Functional::new(self.representer.sub(&other.representer)?))
    }

    pub fn scale(&self, s: f64) -> Functional {
        Functional::new(self.representer.scale(s))
    }

    pub fn from_json(s: &str) -> Result<Functional> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Base-norm (dual) norm: Σ |μᵢ| · mult(μᵢ) over the representer's spectrum.
pub fn dual_norm(f: &Functional) -> f64 {
    let d = spectral_decomposition(&f.representer).expect("finite representer");
    d.eigenvalues()
        .iter()
        .zip(d.multiplicities())
        .map(|(mu, m)| mu.abs() * *m as f64)
        .sum()
}

/// A validated idempotent with integer rank (its trace).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Element", into = "Element")]
pub struct Projection {
    element: Element,
    rank: usize,
}

impl Projection {
    /// Accepts p with ‖p∘p − p‖ ≤ 1e-8 and a trace within 1e-6 of an integer
    /// in 0..=rank.
    pub fn try_new(element: Element) -> Result<Projection> {
        let sq = element.jordan_product(&element)?;
        let dev = order_unit_norm(&sq.sub(&element)?);
        if !(dev <= TOL_IDEM) {
            return Err(Error::NotAProjection(format!(
                "idempotency defect {dev} exceeds {TOL_IDEM}"
            )));
        }
        let tr = element.trace();
        let rank = tr.round();
        if (tr - rank).abs() > 1e-6 || rank < 0.0 || rank > element.algebra().rank() as f64 {
            return Err(Error::NotAProjection(format!("trace {tr} is not an admissible rank")));
        }
        Ok(Projection { element, rank: rank as usize })
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn algebra(&self) -> &AlgebraDescriptor {
        self.element.algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }

    pub fn is_unit(&self) -> bool {
        self.rank == self.algebra().rank()
    }

    pub fn complement(&self) -> Projection {
        let e = self.algebra().unit();
        let element = e.sub(&self.element).expect("same algebra");
        Projection { element, rank: self.algebra().rank() - self.rank }
    }
}

impl TryFrom<Element> for Projection {
    type Error = Error;
    fn try_from(e: Element) -> Result<Projection> {
        Projection::try_new(e)
    }
}

impl From<Projection> for Element {
    fn from(p: Projection) -> Element {
        p.element
    }
}

/// Decomposes φ = φ⁺ − φ⁻ with positive parts carried by opposite-sign
/// spectral idempotents of the representer (so their supports are
/// orthogonal and the dual norm is additive).
pub fn orthogonal_decomposition(f: &Functional) -> Result<(Functional, Functional)> {
    let d = spectral_decomposition(&f.representer)?;
    let alg = f.algebra();
    let mut plus = alg.zero();
    let mut minus = alg.zero();
    for (mu, c) in d.eigenvalues().iter().zip(d.idempotents()) {
        if *mu >= 0.0 {
            plus = plus.add_scaled(*mu, c)?;
        } else {
            minus = minus.add_scaled(-*mu, c)?;
        }
    }
    Ok((Functional::new(plus), Functional::new(minus)))
}

/// Smallest projection s with φ = φ∘U_s.  Requires φ positive: representers
/// with an eigenvalue below −1e-9·scale are rejected.
pub fn support_projection(f: &Functional) -> Result<Projection> {
    let d = spectral_decomposition(&f.representer)?;
    let (lo, hi) = spectral_bounds(&f.representer);
    let scale = lo.abs().max(hi.abs()).max(1.0);
    if lo < -NEGATIVITY_TOL * scale {
        return Err(Error::NotPositive);
    }
    let alg = f.algebra();
    let mut s = alg.zero();
    let mut rank = 0usize;
    for ((mu, c), m) in d.eigenvalues().iter().zip(d.idempotents()).zip(d.multiplicities()) {
        if *mu > TOL_BOUNDARY {
            s = s.add(c)?;
            rank += m;
        }
    }
    Ok(Projection { element: s, rank })
}

/// Orthogonality of positive functionals: their support projections multiply
/// to zero.  (Equivalently the dual norm of the difference is the sum of the
/// norms; the suite cross-checks the two.)
pub fn functionals_orthogonal(f: &Functional, g: &Functional) -> Result<bool> {
    if f.algebra() != g.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let sf = support_projection(f)?;
    let sg = support_projection(g)?;
    let prod = sf.element().jordan_product(sg.element())?;
    Ok(order_unit_norm(&prod) <= TOL_ORTHOGONALITY)
}

/// Extreme points of the hyperplane section {φ : φ(e) = 0, ‖φ‖ ≤ 2}: exactly
/// the differences of two orthogonal pure states, i.e. representers with
/// spectrum {+1, −1} of multiplicity one each (everything else 0).
pub fn extreme_point_check(f: &Functional) -> Result<bool> {
    let at_unit = f.apply(&f.algebra().unit())?;
    if at_unit.abs() > 1e-10 {
        return Err(Error::NotInHyperplane);
    }
    let d = spectral_decomposition(&f.representer)?;
    let mut plus_rank = 0usize;
    let mut minus_rank = 0usize;
    for (mu, m) in d.eigenvalues().iter().zip(d.multiplicities()) {
        if (mu - 1.0).abs() <= 1e-8 {
            plus_rank += m;
        } else if (mu + 1.0).abs() <= 1e-8 {
            minus_rank += m;
        } else if mu.abs() > 1e-8 {
            return Ok(false);
        }
    }
    Ok(plus_rank == 1 && minus_rank == 1)
}

/// A normalized positive functional together with its purity flag: pure
/// states are exactly those whose representer is an atom.
#[derive(Clone, Debug)]
pub struct StateDescriptor {
    functional: Functional,
    is_pure: bool,
}

impl StateDescriptor {
    pub fn new(functional: Functional) -> Result<StateDescriptor> {
        let support = support_projection(&functional)?;
        let unit = functional.algebra().unit();
        let total = functional.apply(&unit)?;
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Domain("a state must satisfy φ(e) = 1".into()));
        }
        let is_pure = support.rank() == 1;
        Ok(StateDescriptor { functional, is_pure })
    }

    pub fn functional(&self) -> &Functional {
        &self.functional
    }

    pub fn is_pure(&self) -> bool {
        self.is_pure
    }
}

/// An ordered pair of nonzero orthogonal projections naming the set
/// {φ − ψ : φ a state on p, ψ a state on q}; maximal when q = p^⊥.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaceDescriptor {
    p: Projection,
    q: Projection,
}

impl FaceDescriptor {
    pub fn new(p: Projection, q: Projection) -> Result<FaceDescriptor> {
        if p.algebra() != q.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if p.is_zero() || q.is_zero() {
            return Err(Error::InvalidFace("projections must be nonzero".into()));
        }
        let prod = p.element().jordan_product(q.element())?;
        if prod.max_abs_coord() > TOL_IDEM {
            return Err(Error::InvalidFace("projections must be orthogonal".into()));
        }
        Ok(FaceDescriptor { p, q })
    }

    pub fn p(&self) -> &Projection {
        &self.p
    }

    pub fn q(&self) -> &Projection {
        &self.q
    }

    /// True when q is the full complement of p, so the pair names a maximal
    /// proper face of the scaled dual ball.
    pub fn is_maximal(&self) -> bool {
        let sum = self.p.element().add(self.q.element()).expect("same algebra");
        let unit = self.algebra().unit();
        sum.sub(&unit).expect("same algebra").max_abs_coord() <= 1e-8
    }

    pub fn algebra(&self) -> &AlgebraDescriptor {
        self.p.algebra()
    }

    pub fn from_json(s: &str) -> Result<FaceDescriptor> {
        let face: FaceDescriptor = serde_json::from_str(s)?;
        FaceDescriptor::new(face.p, face.q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Normalized tracial state of a nonzero projection.
fn tracial_state(p: &Projection) -> Functional {
    Functional::new(p.element().scale(1.0 / p.rank() as f64))
}

/// Random state supported on p: compress an interior point and normalize.
fn face_state(p: &Projection, rng: &mut Rng) -> Functional {
    let w = sample_interior(p.algebra(), rng);
    let r = quadratic_rep(p.element(), &w).expect("same algebra");
    Functional::new(r.scale(1.0 / r.trace()))
}

/// Splits a projection of rank ≥ 2 into two nonzero orthogonal parts using
/// the top eigenvalue cluster of a compressed random element.
fn split_projection(p: &Projection, rng: &mut Rng) -> Option<(Projection, Projection)> {
    for _ in 0..64 {
        let w = sample_interior(p.algebra(), rng);
        let z = quadratic_rep(p.element(), &w).expect("same algebra");
        let d = spectral_decomposition(&z).expect("finite");
        let top = d.idempotents().last().expect("nonempty");
        let m = *d.multiplicities().last().expect("nonempty");
        if m == 0 || m >= p.rank() {
            continue;
        }
        let rest = p.element().sub(top).expect("same algebra");
        let p1 = Projection { element: top.clone(), rank: m };
        let p2 = Projection { element: rest, rank: p.rank() - m };
        return Some((p1, p2));
    }
    None
}

/// Monte-Carlo diameter of {φ − ψ}: the maximum dual-norm distance over
/// sampled pairs, seeded with tracial states and (when ranks allow) a split
/// four-state witness that attains the extremal value 4.
pub fn sampled_face_diameter(face: &FaceDescriptor, samples: usize, seed: u64) -> Result<f64> {
    let mut rng = Rng::new(derive_seed(seed, "face-diameter"));
    let p = face.p();
    let q = face.q();
    // Entries of the set, as functionals φ − ψ.
    let mut deltas: Vec<Functional> = Vec::new();
    deltas.push(tracial_state(p).sub(&tracial_state(q))?);
    if p.rank() >= 2 && q.rank() >= 2 {
        if let (Some((p1, p2)), Some((q1, q2))) =
            (split_projection(p, &mut rng), split_projection(q, &mut rng))
        {
            let (sp1, sp2) = (tracial_state(&p1), tracial_state(&p2));
            let (sq1, sq2) = (tracial_state(&q1), tracial_state(&q2));
            deltas.push(sp1.sub(&sq1)?);
            deltas.push(sp2.sub(&sq2)?);
            deltas.push(sp1.sub(&sq2)?);
            deltas.push(sp2.sub(&sq1)?);
        }
    }
    for _ in 0..samples {
        let phi = face_state(p, &mut rng);
        let psi = face_state(q, &mut rng);
        deltas.push(phi.sub(&psi)?);
    }
    let mut best: f64 = 0.0;
    for i in 0..deltas.len() {
        for j in 0..i {
            best = best.max(dual_norm(&deltas[i].sub(&deltas[j])?));
        }
    }
    Ok(best)
}

/// Diameter dichotomy: the set {φ − ψ} has diameter at most 2 exactly when
/// p or q is an atom (rank one).  The structural answer is cross-checked
/// against the sampled diameter, witness construction included.
pub fn face_diameter_le_2(face: &FaceDescriptor, samples: usize, seed: u64) -> Result<bool> {
    let small = face.p().rank() == 1 || face.q().rank() == 1;
    let sampled = sampled_face_diameter(face, samples, seed)?;
    if small != (sampled <= 2.0 + 1e-8) {
        return Err(Error::Domain(format!(
            "sampled diameter {sampled} contradicts the atom criterion"
        )));
    }
    Ok(small)
}

/// The quotient class normed by a maximal face G_p = F_p − F_{p^⊥}: every
/// member φ − ψ evaluates to exactly 1 on ½(p − p^⊥), and [p] is the unique
/// projection class with that property.
pub fn norming_class_of_face(face: &FaceDescriptor) -> Result<QuotientClass> {
    if !face.is_maximal() {
        return Err(Error::InvalidFace(
            "the norming class is defined for maximal faces (q = p^⊥)".into(),
        ));
    }
    let p = face.p();
    if p.is_zero() || p.is_unit() {
        return Err(Error::InvalidFace(
            "maximal faces come from proper nonzero projections".into(),
        ));
    }
    Ok(QuotientClass::of(p.element()))
}

/// Join p ∨ q: the support of p + q, i.e. the smallest projection dominating
/// both.
pub fn projection_join(p: &Projection, q: &Projection) -> Result<Projection> {
    if p.algebra() != q.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let sum = Functional::new(p.element().add(q.element())?);
    support_projection(&sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(n: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::diagonal(n).unwrap()
    }

    fn el(alg: &AlgebraDescriptor, coords: &[f64]) -> Element {
        Element::new(alg.clone(), coords.to_vec()).unwrap()
    }

    fn func(alg: &AlgebraDescriptor, coords: &[f64]) -> Functional {
        Functional::new(el(alg, coords))
    }

    fn proj(alg: &AlgebraDescriptor, coords: &[f64]) -> Projection {
        Projection::try_new(el(alg, coords)).unwrap()
    }

    #[test]
    fn dual_norm_frozen_values() {
        let a = diag(3);
        assert_eq!(dual_norm(&Functional::new(a.unit())), 3.0);
        assert_eq!(dual_norm(&func(&a, &[1.0, -1.0, 0.0])), 2.0);
        let s = AlgebraDescriptor::spin(3).unwrap();
        assert_eq!(dual_norm(&Functional::new(s.unit())), 2.0);
    }

    #[test]
    fn decomposition_splits_by_sign() {
        let a = diag(3);
        let f = func(&a, &[3.0, -2.0, 0.0]);
        let (plus, minus) = orthogonal_decomposition(&f).unwrap();
        assert_eq!(plus.representer().coords(), &[3.0, 0.0, 0.0]);
        assert_eq!(minus.representer().coords(), &[0.0, 2.0, 0.0]);
        assert!(functionals_orthogonal(&plus, &minus).unwrap());
        assert_eq!(dual_norm(&f), dual_norm(&plus) + dual_norm(&minus));
        let back = plus.sub(&minus).unwrap();
        assert_eq!(back.representer().coords(), f.representer().coords());
    }

    #[test]
    fn support_projection_frozen_values() {
        let a = diag(3);
        let s = support_projection(&func(&a, &[0.0, 3.0, 2.0])).unwrap();
        assert_eq!(s.element().coords(), &[0.0, 1.0, 1.0]);
        assert_eq!(s.rank(), 2);
        // Sub-tolerance mass counts as zero.
        let s2 = support_projection(&func(&a, &[5e-13, 1.0, 0.0])).unwrap();
        assert_eq!(s2.element().coords(), &[0.0, 1.0, 0.0]);
        assert!(matches!(
            support_projection(&func(&a, &[0.0, -1.0, 1.0])),
            Err(Error::NotPositive)
        ));
        // Rank-one matrix: the support is its normalized ray projection.
        let m = AlgebraDescriptor::sym_matrix(2).unwrap();
        let s3 = support_projection(&func(&m, &[1.0, 1.0, 1.0])).unwrap();
        assert_eq!(s3.rank(), 1);
        for (got, want) in s3.element().coords().iter().zip(&[0.5, 0.5, 0.5]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn support_reproduces_the_functional() {
        let a = AlgebraDescriptor::spin(3).unwrap();
        let mut rng = Rng::new(3);
        for _ in 0..10 {
            let x = sample_interior(&a, &mut rng);
            let f = Functional::new(x);
            let s = support_projection(&f).unwrap();
            assert!(s.is_unit());
        }
        // Compressed functionals have the compressing projection as support.
        let d = diag(4);
        let f = func(&d, &[2.0, 0.0, 1.0, 0.0]);
        let s = support_projection(&f).unwrap();
        let compressed = quadratic_rep(s.element(), f.representer()).unwrap();
        for (u, v) in compressed.coords().iter().zip(f.representer().coords()) {
            assert!((u - v).abs() < 1e-12);
        }
    }

    #[test]
    fn orthogonality_examples() {
        let a = diag(3);
        assert!(functionals_orthogonal(&func(&a, &[1.0, 0.0, 0.0]), &func(&a, &[0.0, 2.0, 0.0]))
            .unwrap());
        assert!(!functionals_orthogonal(&func(&a, &[1.0, 1.0, 0.0]), &func(&a, &[0.0, 1.0, 1.0]))
            .unwrap());
        // Norm additivity matches the support test.
        let f = func(&a, &[1.0, 0.0, 0.0]);
        let g = func(&a, &[0.0, 2.0, 0.0]);
        let h = func(&a, &[0.5, 1.0, 0.0]);
        assert_eq!(dual_norm(&f.sub(&g).unwrap()), dual_norm(&f) + dual_norm(&g));
        assert!(dual_norm(&f.sub(&h).unwrap()) < dual_norm(&f) + dual_norm(&h) - 0.4);
    }

    #[test]
    fn extreme_point_examples() {
        let a = diag(3);
        assert!(extreme_point_check(&func(&a, &[1.0, -1.0, 0.0])).unwrap());
        assert!(!extreme_point_check(&func(&a, &[1.0, -0.5, -0.5])).unwrap());
        assert!(matches!(
            extreme_point_check(&func(&a, &[1.0, 0.0, 0.0])),
            Err(Error::NotInHyperplane)
        ));
        let s = AlgebraDescriptor::spin(2).unwrap();
        assert!(extreme_point_check(&func(&s, &[0.6, 0.8, 0.0])).unwrap());
        assert!(!extreme_point_check(&func(&s, &[1.2, 1.6, 0.0])).unwrap());
    }

    #[test]
    fn projection_validation() {
        let a = diag(3);
        let p = proj(&a, &[1.0, 0.0, 1.0]);
        assert_eq!(p.rank(), 2);
        assert_eq!(p.complement().element().coords(), &[0.0, 1.0, 0.0]);
        assert!(Projection::try_new(el(&a, &[0.5, 0.0, 0.0])).is_err());
        assert!(Projection::try_new(el(&a, &[1.0, 1e-4, 0.0])).is_err());
        // Serde round-trips through the raw element and re-validates.
        let json = serde_json::to_string(&p).unwrap();
        let back: Projection = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Projection>(
            &serde_json::to_string(&el(&a, &[0.5, 0.0, 0.0])).unwrap()
        )
        .is_err());
    }

    #[test]
    fn join_examples() {
        let a = diag(3);
        let j = projection_join(&proj(&a, &[1.0, 1.0, 0.0]), &proj(&a, &[0.0, 1.0, 1.0])).unwrap();
        assert!(j.is_unit());
        let j2 = projection_join(&proj(&a, &[1.0, 0.0, 0.0]), &proj(&a, &[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(j2.element().coords(), &[1.0, 0.0, 1.0]);
        let p = proj(&a, &[1.0, 1.0, 0.0]);
        assert_eq!(projection_join(&p, &p).unwrap(), p);
        // Two distinct rank-one matrices span everything.
        let m = AlgebraDescriptor::sym_matrix(2).unwrap();
        let u = proj(&m, &[1.0, 0.0, 0.0]);
        let v = proj(&m, &[0.5, 0.5, 0.5]);
        assert!(projection_join(&u, &v).unwrap().is_unit());
    }

    #[test]
    fn face_diameter_dichotomy() {
        let a = diag(4);
        let wide = FaceDescriptor::new(proj(&a, &[1.0, 1.0, 0.0, 0.0]), proj(&a, &[0.0, 0.0, 1.0, 1.0]))
            .unwrap();
        assert!(!face_diameter_le_2(&wide, 40, 42).unwrap());
        let d = sampled_face_diameter(&wide, 40, 42).unwrap();
        assert!((d - 4.0).abs() < 1e-9, "witness should reach 4, got {d}");

        let narrow = FaceDescriptor::new(proj(&a, &[1.0, 0.0, 0.0, 0.0]), proj(&a, &[0.0, 1.0, 1.0, 0.0]))
            .unwrap();
        assert!(face_diameter_le_2(&narrow, 40, 42).unwrap());
        let d2 = sampled_face_diameter(&narrow, 40, 42).unwrap();
        assert!(d2 <= 2.0 + 1e-9, "atomic face stays within 2, got {d2}");

        // Rank-one projection in the matrix variant: diameter stays within 2.
        let m = AlgebraDescriptor::sym_matrix(2).unwrap();
        let u = proj(&m, &[1.0, 0.0, 0.0]);
        let small = FaceDescriptor::new(u.clone(), u.complement()).unwrap();
        assert!(face_diameter_le_2(&small, 100, 7).unwrap());

        // Overlapping projections do not name a face.
        let p = proj(&a, &[1.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            FaceDescriptor::new(p.clone(), p.clone()),
            Err(Error::InvalidFace(_))
        ));
    }

    #[test]
    fn norming_class_evaluates_to_one() {
        let a = diag(3);
        let p = proj(&a, &[1.0, 0.0, 0.0]);
        let face = FaceDescriptor::new(p.clone(), p.complement()).unwrap();
        assert!(face.is_maximal());
        let c = norming_class_of_face(&face).unwrap();
        let mut rng = Rng::new(8);
        for _ in 0..20 {
            let phi = face_state(&p, &mut rng);
            let psi = face_state(&p.complement(), &mut rng);
            let diff = phi.sub(&psi).unwrap();
            let v = diff.apply(c.representative()).unwrap();
            assert!((v - 1.0).abs() < 1e-9, "got {v}");
        }
        // The evaluation point ½(p − p^⊥) carries the same class as p.
        let half = p
            .element()
            .sub(&p.complement().element())
            .unwrap()
            .scale(0.5);
        assert!(crate::cone::class_equal(&c, &QuotientClass::of(&half)));
        // A non-maximal face has no norming class.
        let partial =
            FaceDescriptor::new(p.clone(), proj(&a, &[0.0, 1.0, 0.0])).unwrap();
        assert!(!partial.is_maximal());
        assert!(matches!(norming_class_of_face(&partial), Err(Error::InvalidFace(_))));
        // p = e cannot even form a face: nothing nonzero is orthogonal to it.
        let unit = proj(&a, &[1.0, 1.0, 1.0]);
        assert!(FaceDescriptor::new(unit.clone(), unit).is_err());
    }

    #[test]
    fn state_descriptor_purity() {
        let a = diag(3);
        let pure = StateDescriptor::new(func(&a, &[1.0, 0.0, 0.0])).unwrap();
        assert!(pure.is_pure());
        let mixed = StateDescriptor::new(func(&a, &[0.5, 0.5, 0.0])).unwrap();
        assert!(!mixed.is_pure());
        assert!((mixed.functional().apply(&a.unit()).unwrap() - 1.0).abs() < 1e-12);
        // Not normalized and not positive are both rejected.
        assert!(matches!(
            StateDescriptor::new(func(&a, &[2.0, 0.0, 0.0])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            StateDescriptor::new(func(&a, &[1.5, -0.5, 0.0])),
            Err(Error::NotPositive)
        ));
    }

    #[test]
    fn functional_json_roundtrip() {
        let a = diag(2);
        let f = func(&a, &[0.25, -1.5]);
        let s = f.to_json();
        assert_eq!(
            s,
            r#"{"representer":{"algebra":{"variant":"diagonal","n":2},"coords":[0.25,-1.5]}}"#
        );
        assert_eq!(Functional::from_json(&s).unwrap(), f);
    }
}
