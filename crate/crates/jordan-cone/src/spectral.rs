//! Spectral decompositions, functional calculus, and the norms built on them.
//!
//! Every element x splits as x = Σ λᵢ cᵢ over pairwise orthogonal idempotents
//! cᵢ summing to the unit.  Eigenvalues closer than `cluster_width` merge into
//! one cluster, so the listed eigenvalues are distinct and ascending and each
//! idempotent carries an integer multiplicity (its trace).

use crate::algebra::{embed_summand, sym_pack, AlgebraDescriptor, Element};
use crate::error::{Error, Result};
use crate::linalg::{sym_eigen, Mat};
use crate::tol::{cluster_width, TOL_BOUNDARY};

/// Spectral data of an element: distinct ascending eigenvalues, matching
/// orthogonal idempotents, and integer multiplicities (idempotent traces).
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    algebra: AlgebraDescriptor,
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    idempotents: Vec<Element>,
}

impl SpectralDecomposition {
    pub fn algebra(&self) -> &AlgebraDescriptor {
        &self.algebra
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn idempotents(&self) -> &[Element] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(f64::NAN)
    }

    /// Σ λᵢ cᵢ — reconstructs the element the decomposition came from.
    pub fn reconstruct(&self) -> Element {
        let mut acc = self.algebra.zero();
        for (lam, c) in self.eigenvalues.iter().zip(&self.idempotents) {
            acc = acc.add_scaled(*lam, c).expect("same algebra");
        }
        acc
    }
}

/// One eigenvalue with an (unclustered) rank-one-or-more idempotent.
type RawPair = (f64, usize, Element);

fn raw_pairs(x: &Element) -> Result<Vec<RawPair>> {
    let alg = x.algebra();
    let coords = x.coords();
    match alg {
        AlgebraDescriptor::Diagonal { n } => Ok((0..*n)
            .map(|i| (coords[i], 1, alg.basis_element(i)))
            .collect()),
        AlgebraDescriptor::Spin { n } => {
            let n = *n;
            let lambda = coords[n];
            let (norm, unit) = safe_norm_and_unit(&coords[..n]);
            let mut plus = Vec::with_capacity(n + 1);
            let mut minus = Vec::with_capacity(n + 1);
            for u in &unit {
                plus.push(0.5 * u);
                minus.push(-0.5 * u);
            }
            plus.push(0.5);
            minus.push(0.5);
            Ok(vec![
                (lambda - norm, 1, Element::from_parts_unchecked(alg.clone(), minus)),
                (lambda + norm, 1, Element::from_parts_unchecked(alg.clone(), plus)),
            ])
        }
        AlgebraDescriptor::SymMatrix { n } => {
            let n = *n;
            let full = crate::algebra::sym_unpack(n, coords);
            let mut m = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, full[i * n + j]);
                }
            }
            let (lams, vecs) = sym_eigen(&m)?;
            let mut out = Vec::with_capacity(n);
            for (k, lam) in lams.iter().enumerate() {
                let w = vecs.col(k);
                let mut proj = vec![0.0; n * n];
                for i in 0..n {
                    for j in 0..n {
                        proj[i * n + j] = w[i] * w[j];
                    }
                }
                out.push((
                    *lam,
                    1,
                    Element::from_parts_unchecked(alg.clone(), sym_pack(n, &proj)),
                ));
            }
            Ok(out)
        }
        AlgebraDescriptor::DirectSum { summands } => {
            let mut out = Vec::new();
            for (idx, _s) in summands.iter().enumerate() {
                let part = crate::algebra::extract_summand(alg, idx, x)?;
                for (lam, mult, c) in raw_pairs(&part)? {
                    out.push((lam, mult, embed_summand(alg, idx, &c)?));
                }
            }
            Ok(out)
        }
    }
}

/// Overflow-safe norm and unit vector; the unit direction defaults to e₁ when
/// the vector vanishes (any direction serves: the two spin idempotents then
/// merge into the unit during clustering).
fn safe_norm_and_unit(v: &[f64]) -> (f64, Vec<f64>) {
    let m = v.iter().fold(0.0_f64, |a, b| a.max(b.abs()));
    if m == 0.0 {
        let mut unit = vec![0.0; v.len()];
        unit[0] = 1.0;
        return (0.0, unit);
    }
    let s: f64 = v.iter().map(|x| (x / m) * (x / m)).sum::<f64>().sqrt();
    let norm = m * s;
    let unit = v.iter().map(|x| (x / m) / s).collect();
    (norm, unit)
}

/// Full spectral decomposition with eigenvalue clustering.
pub fn spectral_decomposition(x: &Element) -> Result<SpectralDecomposition> {
    let mut raw = raw_pairs(x)?;
    raw.sort_by(|a, b| a.0.total_cmp(&b.0));
    let scale = raw.iter().fold(0.0_f64, |m, p| m.max(p.0.abs()));
    let width = cluster_width(scale);

    let mut eigenvalues = Vec::new();
    let mut multiplicities = Vec::new();
    let mut idempotents: Vec<Element> = Vec::new();
    let mut cluster: Vec<RawPair> = Vec::new();

    let flush = |cluster: &mut Vec<RawPair>,
                 eigenvalues: &mut Vec<f64>,
                 multiplicities: &mut Vec<usize>,
                 idempotents: &mut Vec<Element>| {
        if cluster.is_empty() {
            return;
        }
        let total_mult: usize = cluster.iter().map(|p| p.1).sum();
        let value = cluster.iter().map(|p| p.0 * p.1 as f64).sum::<f64>() / total_mult as f64;
        let mut idem = cluster[0].2.clone();
        for p in &cluster[1..] {
            idem = idem.add(&p.2).expect("same algebra");
        }
        eigenvalues.push(value);
        multiplicities.push(total_mult);
        idempotents.push(idem);
        cluster.clear();
    };

    for pair in raw {
        if let Some(last) = cluster.last() {
            if pair.0 - last.0 > width {
                flush(&mut cluster, &mut eigenvalues, &mut multiplicities, &mut idempotents);
            }
        }
        cluster.push(pair);
    }
    flush(&mut cluster, &mut eigenvalues, &mut multiplicities, &mut idempotents);

    Ok(SpectralDecomposition {
        algebra: x.algebra().clone(),
        eigenvalues,
        multiplicities,
        idempotents,
    })
}

/// Distinct eigenvalues, ascending.
pub fn spectrum(x: &Element) -> Result<Vec<f64>> {
    Ok(spectral_decomposition(x)?.eigenvalues.clone())
}

/// (min, max) of the spectrum without building idempotents.  Total: returns
/// NaN bounds only if the eigensolver fails, which finite input cannot cause.
pub fn spectral_bounds(x: &Element) -> (f64, f64) {
    fn bounds(alg: &AlgebraDescriptor, coords: &[f64]) -> (f64, f64) {
        match alg {
            AlgebraDescriptor::Diagonal { .. } => coords
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v))),
            AlgebraDescriptor::Spin { n } => {
                let lambda = coords[*n];
                let (norm, _) = safe_norm_and_unit(&coords[..*n]);
                (lambda - norm, lambda + norm)
            }
            AlgebraDescriptor::SymMatrix { n } => {
                let n = *n;
                let full = crate::algebra::sym_unpack(n, coords);
                let mut m = Mat::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        m.set(i, j, full[i * n + j]);
                    }
                }
                match sym_eigen(&m) {
                    Ok((lams, _)) => (lams[0], lams[n - 1]),
                    Err(_) => (f64::NAN, f64::NAN),
                }
            }
            AlgebraDescriptor::DirectSum { summands } => {
                let mut off = 0;
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for s in summands {
                    let d = s.dim();
                    let (l, h) = bounds(s, &coords[off..off + d]);
                    lo = lo.min(l);
                    hi = hi.max(h);
                    off += d;
                }
                (lo, hi)
            }
        }
    }
    bounds(x.algebra(), x.coords())
}

/// max |λ| over the spectrum — the order-unit norm (operator norm).
pub fn order_unit_norm(x: &Element) -> f64 {
    let (lo, hi) = spectral_bounds(x);
    lo.abs().max(hi.abs())
}

/// max λ − min λ: the diameter of the spectrum.  Vanishes exactly on
/// multiples of the unit.
pub fn variation_seminorm(x: &Element) -> f64 {
    let (lo, hi) = spectral_bounds(x);
    hi - lo
}

/// Distance from x to the line ℝe in the order-unit norm; equals half the
/// variation seminorm (the infimum is attained at the spectral midpoint).
pub fn quotient_norm(x: &Element) -> f64 {
    0.5 * variation_seminorm(x)
}

/// Σ f(λᵢ) cᵢ.  `DomainError` when f produces a non-finite value.
pub fn functional_calculus(x: &Element, f: impl Fn(f64) -> f64) -> Result<Element> {
    let d = spectral_decomposition(x)?;
    let mut acc = x.algebra().zero();
    for (lam, c) in d.eigenvalues.iter().zip(&d.idempotents) {
        let v = f(*lam);
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "function produced a non-finite value at eigenvalue {lam}"
            )));
        }
        acc = acc.add_scaled(v, c)?;
    }
    Ok(acc)
}

/// Spectral exponential.
pub fn exp_el(x: &Element) -> Result<Element> {
    functional_calculus(x, f64::exp)
}

/// Spectral logarithm; requires the spectrum strictly above the boundary
/// tolerance.
pub fn log_el(x: &Element) -> Result<Element> {
    let (lo, _) = spectral_bounds(x);
    if !(lo > TOL_BOUNDARY) {
        return Err(Error::Domain(format!(
            "logarithm needs eigenvalues > {TOL_BOUNDARY}, found {lo}"
        )));
    }
    functional_calculus(x, f64::ln)
}

/// Spectral power x^alpha.  Any spectrum is allowed when alpha is a
/// nonnegative integer; otherwise eigenvalues must be strictly positive.
pub fn power(x: &Element, alpha: f64) -> Result<Element> {
    let rounded = alpha.round();
    let integral = (alpha - rounded).abs() < 1e-12 && rounded >= 0.0;
    if integral {
        let k = rounded as i32;
        functional_calculus(x, |lam| lam.powi(k))
    } else {
        let (lo, _) = spectral_bounds(x);
        if !(lo > TOL_BOUNDARY) {
            return Err(Error::Domain(format!(
                "power {alpha} needs eigenvalues > {TOL_BOUNDARY}, found {lo}"
            )));
        }
        functional_calculus(x, |lam| lam.powf(alpha))
    }
}

/// Spectral inverse; requires 0 outside the spectrum (within the boundary
/// tolerance).  Negative eigenvalues are allowed.
pub fn inverse(x: &Element) -> Result<Element> {
    let d = spectral_decomposition(x)?;
    if d.eigenvalues.iter().any(|l| l.abs() <= TOL_BOUNDARY) {
        return Err(Error::Domain("inverse needs a spectrum bounded away from zero".into()));
    }
    let mut acc = x.algebra().zero();
    for (lam, c) in d.eigenvalues.iter().zip(&d.idempotents) {
        acc = acc.add_scaled(1.0 / lam, c)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor;

    fn el(alg: &AlgebraDescriptor, coords: &[f64]) -> Element {
        Element::new(alg.clone(), coords.to_vec()).unwrap()
    }

    fn diag(n: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::diagonal(n).unwrap()
    }

    #[test]
    fn diagonal_spectrum_and_norms() {
        let a = diag(3);
        let x = el(&a, &[1.0, -3.0, 2.0]);
        assert_eq!(spectrum(&x).unwrap(), vec![-3.0, 1.0, 2.0]);
        assert_eq!(order_unit_norm(&x), 3.0);
        assert_eq!(order_unit_norm(&a.unit()), 1.0);
        let y = el(&a, &[1.0, 2.0, 4.0]);
        assert_eq!(variation_seminorm(&y), 3.0);
        assert_eq!(quotient_norm(&y), 1.5);
        assert_eq!(variation_seminorm(&a.unit()), 0.0);
    }

    #[test]
    fn quotient_norm_is_shift_invariant() {
        let a = diag(3);
        let x = el(&a, &[1.0, 2.0, 4.0]);
        let shifted = x.add_scaled(7.0, &a.unit()).unwrap();
        // Integer data: the shifted spectrum is exact, so equality is exact.
        assert_eq!(quotient_norm(&x), quotient_norm(&shifted));
    }

    #[test]
    fn spin_spectrum_and_idempotents() {
        let a = AlgebraDescriptor::spin(2).unwrap();
        let x = el(&a, &[3.0, 4.0, 10.0]);
        let d = spectral_decomposition(&x).unwrap();
        assert_eq!(d.eigenvalues(), &[5.0, 15.0]);
        assert_eq!(d.multiplicities(), &[1, 1]);
        // Ascending order: eigenvalue 5 carries ½(−v̂, 1), 15 carries ½(v̂, 1).
        let lo = d.idempotents()[0].coords();
        let hi = d.idempotents()[1].coords();
        for (got, want) in lo.iter().zip(&[-0.3, -0.4, 0.5]) {
            assert!((got - want).abs() < 1e-15);
        }
        for (got, want) in hi.iter().zip(&[0.3, 0.4, 0.5]) {
            assert!((got - want).abs() < 1e-15);
        }
        assert_eq!(order_unit_norm(&x), 15.0);
        assert_eq!(variation_seminorm(&x), 10.0);
    }

    #[test]
    fn spin_three_coordinates_example() {
        let a = AlgebraDescriptor::spin(3).unwrap();
        let x = el(&a, &[1.0, 2.0, 2.0, 0.0]);
        assert_eq!(spectrum(&x).unwrap(), vec![-3.0, 3.0]);
    }

    #[test]
    fn multiple_of_unit_has_single_cluster() {
        let a = AlgebraDescriptor::direct_sum(vec![diag(2), AlgebraDescriptor::spin(2).unwrap()])
            .unwrap();
        let e = a.unit();
        let d = spectral_decomposition(&e).unwrap();
        assert_eq!(d.eigenvalues(), &[1.0]);
        assert_eq!(d.multiplicities(), &[4]);
        assert_eq!(d.idempotents()[0], e);
        assert_eq!(spectrum(&e).unwrap(), vec![1.0]);
    }

    #[test]
    fn sym_decomposition_known_matrix() {
        // [[2,1],[1,2]]: eigenvalues 1 and 3 with idempotents ½[[1,∓1],[∓1,1]].
        let a = AlgebraDescriptor::sym_matrix(2).unwrap();
        let x = el(&a, &[2.0, 1.0, 2.0]);
        let d = spectral_decomposition(&x).unwrap();
        assert!((d.eigenvalues()[0] - 1.0).abs() < 1e-14);
        assert!((d.eigenvalues()[1] - 3.0).abs() < 1e-14);
        let c0 = d.idempotents()[0].coords();
        assert!((c0[0] - 0.5).abs() < 1e-14);
        assert!((c0[0] + c0[1]).abs() < 1e-14);
        let r = d.reconstruct();
        for (u, v) in r.coords().iter().zip(x.coords()) {
            assert!((u - v).abs() < 1e-13);
        }
    }

    #[test]
    fn decomposition_invariants_across_variants() {
        let algebras = vec![
            diag(4),
            AlgebraDescriptor::spin(3).unwrap(),
            AlgebraDescriptor::sym_matrix(3).unwrap(),
            AlgebraDescriptor::direct_sum(vec![diag(2), AlgebraDescriptor::sym_matrix(2).unwrap()])
                .unwrap(),
        ];
        for a in algebras {
            let dim = a.dim();
            let x = el(&a, &(0..dim).map(|i| ((i * 7 + 3) % 5) as f64 - 2.0).collect::<Vec<_>>());
            let d = spectral_decomposition(&x).unwrap();
            // Completeness: idempotents sum to the unit.
            let mut total = a.zero();
            for c in d.idempotents() {
                total = total.add(c).unwrap();
            }
            let diff = total.sub(&a.unit()).unwrap();
            assert!(order_unit_norm(&diff) < 1e-9, "{a:?}");
            // Orthogonality and idempotency.
            for (i, ci) in d.idempotents().iter().enumerate() {
                let sq = ci.jordan_product(ci).unwrap();
                assert!(order_unit_norm(&sq.sub(ci).unwrap()) < 1e-8);
                for cj in &d.idempotents()[..i] {
                    let prod = ci.jordan_product(cj).unwrap();
                    assert!(order_unit_norm(&prod) < 1e-9);
                }
            }
            // Reconstruction.
            let r = d.reconstruct();
            let err = order_unit_norm(&r.sub(&x).unwrap());
            assert!(err <= 1e-8 * (1.0 + order_unit_norm(&x)));
            // Multiplicities count the full rank.
            assert_eq!(d.multiplicities().iter().sum::<usize>(), a.rank());
        }
    }

    #[test]
    fn calculus_examples() {
        let a = diag(3);
        let x = el(&a, &[1.0, 2.0, 4.0]);
        let inv = power(&x, -1.0).unwrap();
        assert_eq!(inv.coords(), &[1.0, 0.5, 0.25]);
        let inv2 = inverse(&x).unwrap();
        assert_eq!(inv2.coords(), &[1.0, 0.5, 0.25]);

        let half = power(&x, 0.5).unwrap();
        let back = half.jordan_product(&half).unwrap();
        for (u, v) in back.coords().iter().zip(x.coords()) {
            assert!((u - v).abs() < 1e-12);
        }

        let lx = log_el(&x).unwrap();
        let ex = exp_el(&lx).unwrap();
        for (u, v) in ex.coords().iter().zip(x.coords()) {
            assert!((u - v).abs() < 1e-8);
        }
    }

    #[test]
    fn calculus_domain_errors() {
        let a = diag(3);
        let boundary = el(&a, &[1.0, 0.0, 1.0]);
        assert!(matches!(log_el(&boundary), Err(Error::Domain(_))));
        assert!(matches!(inverse(&boundary), Err(Error::Domain(_))));
        assert!(matches!(power(&boundary, 0.5), Err(Error::Domain(_))));
        // Nonnegative integer powers tolerate any spectrum.
        let negative = el(&a, &[-1.0, 0.0, 2.0]);
        assert_eq!(power(&negative, 2.0).unwrap().coords(), &[1.0, 0.0, 4.0]);
        // exp of a log-free element is fine.
        assert!(exp_el(&negative).is_ok());
    }

    #[test]
    fn log_exp_roundtrip_spin_and_sym() {
        for a in [AlgebraDescriptor::spin(3).unwrap(), AlgebraDescriptor::sym_matrix(3).unwrap()] {
            let dim = a.dim();
            let x = el(&a, &(0..dim).map(|i| 0.3 * i as f64 - 0.8).collect::<Vec<_>>());
            let y = exp_el(&x).unwrap();
            let back = log_el(&y).unwrap();
            let err = order_unit_norm(&back.sub(&x).unwrap());
            assert!(err < 1e-8, "{a:?}: {err}");
        }
    }

    #[test]
    fn quadratic_rep_on_diagonal_is_pointwise_square() {
        let a = diag(3);
        let y = el(&a, &[1.0, 2.0, 3.0]);
        let x = el(&a, &[4.0, -5.0, 6.0]);
        let u = crate::algebra::quadratic_rep(&y, &x).unwrap();
        assert_eq!(u.coords(), &[4.0, -20.0, 54.0]);
    }
}
