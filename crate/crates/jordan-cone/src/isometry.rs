//! Structure-preserving maps: algebra isomorphisms, metric isometries of the
//! cone's projective rays, linear isometries of the variation seminorm, and
//! the classification of the isometry group.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::algebra::{quadratic_rep, sym_pack, sym_unpack, AlgebraDescriptor, Element};
use crate::cone::{hilbert_distance, in_cone_interior, QuotientClass, Ray};
use crate::dual::Functional;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::sample::{derive_seed, sample_element, sample_interior, Rng};
use crate::spectral::{inverse, order_unit_norm};

/// A sign ±1, serialized as the integer 1 or -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;
    fn try_from(v: i8) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidDescriptor(format!("sign must be 1 or -1, got {v}"))),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

fn orth_from_rows(rows: &[Vec<f64>], n: usize) -> Result<Mat> {
    let m = Mat::from_rows(rows)?;
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::InvalidDescriptor(format!(
            "expected a {n}×{n} matrix, got {}×{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if !m.is_orthogonal(1e-9) {
        return Err(Error::NotAnIsometry("matrix is not orthogonal".into()));
    }
    Ok(m)
}

/// Unit-preserving algebra isomorphism between two descriptors.
///
/// The four shapes cover all isomorphisms arising here: coordinate
/// permutations of diagonal algebras, orthogonal maps of the vector part of a
/// spin factor, conjugations X ↦ QXQᵀ of matrix algebras, and on direct sums
/// a matching of identical summands composed with component isomorphisms.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "JordanIsoRepr", into = "JordanIsoRepr")]
pub enum JordanIsomorphism {
    Permutation {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        perm: Vec<usize>,
    },
    SpinOrthogonal {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        orth: Mat,
    },
    SymConjugation {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        orth: Mat,
    },
    SumMap {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        /// summand i of the domain lands in summand summand_map[i].
        summand_map: Vec<usize>,
        components: Vec<JordanIsomorphism>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
enum JordanIsoRepr {
    Permutation {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        perm: Vec<usize>,
    },
    SpinOrthogonal {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        orth: Vec<Vec<f64>>,
    },
    SymConjugation {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        orth: Vec<Vec<f64>>,
    },
    SumMap {
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        summand_map: Vec<usize>,
        components: Vec<JordanIsoRepr>,
    },
}

impl TryFrom<JordanIsoRepr> for JordanIsomorphism {
    type Error = Error;
    fn try_from(r: JordanIsoRepr) -> Result<JordanIsomorphism> {
        match r {
            JordanIsoRepr::Permutation { domain, codomain, perm } => {
                JordanIsomorphism::permutation(domain, codomain, perm)
            }
            JordanIsoRepr::SpinOrthogonal { domain, codomain, orth } => {
                let n = match &domain {
                    AlgebraDescriptor::Spin { n } => *n,
                    _ => return Err(Error::InvalidDescriptor("spin map needs spin domain".into())),
                };
                JordanIsomorphism::spin_orthogonal(domain, codomain, orth_from_rows(&orth, n)?)
            }
            JordanIsoRepr::SymConjugation { domain, codomain, orth } => {
                let n = match &domain {
                    AlgebraDescriptor::SymMatrix { n } => *n,
                    _ => {
                        return Err(Error::InvalidDescriptor(
                            "conjugation needs a matrix domain".into(),
                        ))
                    }
                };
                JordanIsomorphism::sym_conjugation(domain, codomain, orth_from_rows(&orth, n)?)
            }
            JordanIsoRepr::SumMap { domain, codomain, summand_map, components } => {
                let components = components
                    .into_iter()
                    .map(JordanIsomorphism::try_from)
                    .collect::<Result<Vec<_>>>()?;
                JordanIsomorphism::sum_map(domain, codomain, summand_map, components)
            }
        }
    }
}

impl From<JordanIsomorphism> for JordanIsoRepr {
    fn from(j: JordanIsomorphism) -> JordanIsoRepr {
        match j {
            JordanIsomorphism::Permutation { domain, codomain, perm } => {
                JordanIsoRepr::Permutation { domain, codomain, perm }
            }
            JordanIsomorphism::SpinOrthogonal { domain, codomain, orth } => {
                JordanIsoRepr::SpinOrthogonal { domain, codomain, orth: orth.to_rows() }
            }
            JordanIsomorphism::SymConjugation { domain, codomain, orth } => {
                JordanIsoRepr::SymConjugation { domain, codomain, orth: orth.to_rows() }
            }
            JordanIsomorphism::SumMap { domain, codomain, summand_map, components } => {
                JordanIsoRepr::SumMap {
                    domain,
                    codomain,
                    summand_map,
                    components: components.into_iter().map(JordanIsoRepr::from).collect(),
                }
            }
        }
    }
}

fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

impl JordanIsomorphism {
    /// Coordinate permutation of a diagonal algebra; input slot i lands in
    /// output slot perm[i].
    pub fn permutation(
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        perm: Vec<usize>,
    ) -> Result<JordanIsomorphism> {
        match (&domain, &codomain) {
            (AlgebraDescriptor::Diagonal { n }, AlgebraDescriptor::Diagonal { n: m })
                if n == m && is_permutation(&perm, *n) =>
            {
                Ok(JordanIsomorphism::Permutation { domain, codomain, perm })
            }
            _ => Err(Error::InvalidDescriptor(
                "permutation maps need equal diagonal algebras and a valid permutation".into(),
            )),
        }
    }

    /// Rotation of the vector part of a spin factor: (v, λ) ↦ (Qv, λ).
    pub fn spin_orthogonal(
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        orth: Mat,
    ) -> Result<JordanIsomorphism> {
        match (&domain, &codomain) {
            (AlgebraDescriptor::Spin { n }, AlgebraDescriptor::Spin { n: m })
                if n == m && orth.nrows() == *n && orth.ncols() == *n =>
            {
                if !orth.is_orthogonal(1e-9) {
                    return Err(Error::NotAnIsometry("matrix is not orthogonal".into()));
                }
                Ok(JordanIsomorphism::SpinOrthogonal { domain, codomain, orth })
            }
            _ => Err(Error::InvalidDescriptor(
                "spin maps need equal spin factors and a square matrix".into(),
            )),
        }
    }

    /// Conjugation X ↦ QXQᵀ of a matrix algebra by an orthogonal Q.
    pub fn sym_conjugation(
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        orth: Mat,
    ) -> Result<JordanIsomorphism> {
        match (&domain, &codomain) {
            (AlgebraDescriptor::SymMatrix { n }, AlgebraDescriptor::SymMatrix { n: m })
                if n == m && orth.nrows() == *n && orth.ncols() == *n =>
            {
                if !orth.is_orthogonal(1e-9) {
                    return Err(Error::NotAnIsometry("matrix is not orthogonal".into()));
                }
                Ok(JordanIsomorphism::SymConjugation { domain, codomain, orth })
            }
            _ => Err(Error::InvalidDescriptor(
                "conjugations need equal matrix algebras and a square matrix".into(),
            )),
        }
    }

    /// Matches summands of two direct sums (descriptors must agree slotwise
    /// under the matching) and applies a component isomorphism on each.
    pub fn sum_map(
        domain: AlgebraDescriptor,
        codomain: AlgebraDescriptor,
        summand_map: Vec<usize>,
        components: Vec<JordanIsomorphism>,
    ) -> Result<JordanIsomorphism> {
        let (ds, cs) = match (domain.summands(), codomain.summands()) {
            (Some(d), Some(c)) => (d, c),
            _ => {
                return Err(Error::InvalidDescriptor(
                    "sum maps need direct sums on both sides".into(),
                ))
            }
        };
        if ds.len() != cs.len()
            || !is_permutation(&summand_map, ds.len())
            || components.len() != ds.len()
        {
            return Err(Error::InvalidDescriptor(
                "summand matching must be a permutation with one component per summand".into(),
            ));
        }
        for (i, comp) in components.iter().enumerate() {
            if comp.domain() != &ds[i] || comp.codomain() != &cs[summand_map[i]] {
                return Err(Error::InvalidDescriptor(format!(
                    "component {i} does not map summand {i} onto summand {}",
                    summand_map[i]
                )));
            }
        }
        Ok(JordanIsomorphism::SumMap { domain, codomain, summand_map, components })
    }

    pub fn identity(alg: &AlgebraDescriptor) -> JordanIsomorphism {
        match alg {
            AlgebraDescriptor::Diagonal { n } => JordanIsomorphism::Permutation {
                domain: alg.clone(),
                codomain: alg.clone(),
                perm: (0..*n).collect(),
            },
            AlgebraDescriptor::Spin { n } => JordanIsomorphism::SpinOrthogonal {
                domain: alg.clone(),
                codomain: alg.clone(),
                orth: Mat::identity(*n),
            },
            AlgebraDescriptor::SymMatrix { n } => JordanIsomorphism::SymConjugation {
                domain: alg.clone(),
                codomain: alg.clone(),
                orth: Mat::identity(*n),
            },
            AlgebraDescriptor::DirectSum { summands } => JordanIsomorphism::SumMap {
                domain: alg.clone(),
                codomain: alg.clone(),
                summand_map: (0..summands.len()).collect(),
                components: summands.iter().map(JordanIsomorphism::identity).collect(),
            },
        }
    }

    pub fn domain(&self) -> &AlgebraDescriptor {
        match self {
            JordanIsomorphism::Permutation { domain, .. }
            | JordanIsomorphism::SpinOrthogonal { domain, .. }
            | JordanIsomorphism::SymConjugation { domain, .. }
            | JordanIsomorphism::SumMap { domain, .. } => domain,
        }
    }

    pub fn codomain(&self) -> &AlgebraDescriptor {
        match self {
            JordanIsomorphism::Permutation { codomain, .. }
            | JordanIsomorphism::SpinOrthogonal { codomain, .. }
            | JordanIsomorphism::SymConjugation { codomain, .. }
            | JordanIsomorphism::SumMap { codomain, .. } => codomain,
        }
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.algebra() != self.domain() {
            return Err(Error::AlgebraMismatch);
        }
        let coords = x.coords();
        match self {
            JordanIsomorphism::Permutation { codomain, perm, .. } => {
                let mut out = vec![0.0; coords.len()];
                for (i, &p) in perm.iter().enumerate() {
                    out[p] = coords[i];
                }
                Element::new(codomain.clone(), out)
            }
            JordanIsomorphism::SpinOrthogonal { codomain, orth, .. } => {
                let n = orth.nrows();
                let mut out = orth.matvec(&coords[..n]);
                out.push(coords[n]);
                Element::new(codomain.clone(), out)
            }
            JordanIsomorphism::SymConjugation { codomain, orth, .. } => {
                let n = orth.nrows();
                let full = sym_unpack(n, coords);
                let mut xm = Mat::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        xm.set(i, j, full[i * n + j]);
                    }
                }
                let rot = orth.matmul(&xm).matmul(&orth.transpose());
                let mut flat = vec![0.0; n * n];
                for i in 0..n {
                    for j in 0..n {
                        flat[i * n + j] = rot.at(i, j);
                    }
                }
                Element::new(codomain.clone(), sym_pack(n, &flat))
            }
            JordanIsomorphism::SumMap { domain, codomain, summand_map, components } => {
                let mut out = codomain.zero();
                for (i, comp) in components.iter().enumerate() {
                    let part = crate::algebra::extract_summand(domain, i, x)?;
                    let mapped = comp.apply(&part)?;
                    let emb = crate::algebra::embed_summand(codomain, summand_map[i], &mapped)?;
                    out = out.add(&emb)?;
                }
                Ok(out)
            }
        }
    }

    pub fn inverse(&self) -> JordanIsomorphism {
        match self {
            JordanIsomorphism::Permutation { domain, codomain, perm } => {
                let mut inv = vec![0usize; perm.len()];
                for (i, &p) in perm.iter().enumerate() {
                    inv[p] = i;
                }
                JordanIsomorphism::Permutation {
                    domain: codomain.clone(),
                    codomain: domain.clone(),
                    perm: inv,
                }
            }
            JordanIsomorphism::SpinOrthogonal { domain, codomain, orth } => {
                JordanIsomorphism::SpinOrthogonal {
                    domain: codomain.clone(),
                    codomain: domain.clone(),
                    orth: orth.transpose(),
                }
            }
            JordanIsomorphism::SymConjugation { domain, codomain, orth } => {
                JordanIsomorphism::SymConjugation {
                    domain: codomain.clone(),
                    codomain: domain.clone(),
                    orth: orth.transpose(),
                }
            }
            JordanIsomorphism::SumMap { domain, codomain, summand_map, components } => {
                let k = summand_map.len();
                let mut inv_map = vec![0usize; k];
                let mut inv_components: Vec<Option<JordanIsomorphism>> = vec![None; k];
                for (i, &p) in summand_map.iter().enumerate() {
                    inv_map[p] = i;
                    inv_components[p] = Some(components[i].inverse());
                }
                JordanIsomorphism::SumMap {
                    domain: codomain.clone(),
                    codomain: domain.clone(),
                    summand_map: inv_map,
                    components: inv_components.into_iter().map(|c| c.expect("filled")).collect(),
                }
            }
        }
    }

    /// Coordinate matrix (codomain dim × domain dim).
    pub fn coordinate_matrix(&self) -> Mat {
        let dom = self.domain();
        let mut m = Mat::zeros(self.codomain().dim(), dom.dim());
        for k in 0..dom.dim() {
            let img = self.apply(&dom.basis_element(k)).expect("basis element");
            m.set_col(k, img.coords());
        }
        m
    }

    pub fn from_json(s: &str) -> Result<JordanIsomorphism> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl PartialEq for JordanIsomorphism {
    /// Equality as maps: same domain/codomain and coordinate matrices within
    /// 1e-12 (a conjugation by Q equals one by −Q, for instance).
    fn eq(&self, other: &Self) -> bool {
        if self.domain() != other.domain() || self.codomain() != other.codomain() {
            return false;
        }
        let a = self.coordinate_matrix();
        let b = other.coordinate_matrix();
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                if (a.at(i, j) - b.at(i, j)).abs() > 1e-12 {
                    return false;
                }
            }
        }
        true
    }
}

/// Sampled defect of multiplicativity, unit and trace-form preservation.
pub fn jordan_iso_residual(j: &JordanIsomorphism, samples: usize, seed: u64) -> Result<f64> {
    let dom = j.domain();
    let mut rng = Rng::new(derive_seed(seed, "verify-jordan-iso"));
    let mut worst: f64 = 0.0;
    let e_img = j.apply(&dom.unit())?;
    worst = worst.max(order_unit_norm(&e_img.sub(&j.codomain().unit())?));
    for _ in 0..samples {
        let x = sample_element(dom, &mut rng);
        let y = sample_element(dom, &mut rng);
        let lhs = j.apply(&x.jordan_product(&y)?)?;
        let rhs = j.apply(&x)?.jordan_product(&j.apply(&y)?)?;
        worst = worst.max(order_unit_norm(&lhs.sub(&rhs)?));
        let ip = x.trace_inner_product(&y)?;
        let ip2 = j.apply(&x)?.trace_inner_product(&j.apply(&y)?)?;
        worst = worst.max((ip - ip2).abs());
    }
    Ok(worst)
}

/// True when the map preserves the unit and is multiplicative on random
/// pairs, within 1e-9.
pub fn verify_jordan_iso(j: &JordanIsomorphism, samples: usize, seed: u64) -> Result<bool> {
    Ok(jordan_iso_residual(j, samples, seed)? <= 1e-9)
}

/// A dense linear map between the coordinate spaces of two algebras.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CoordLinearMapRepr", into = "CoordLinearMapRepr")]
pub struct CoordLinearMap {
    from: AlgebraDescriptor,
    to: AlgebraDescriptor,
    matrix: Mat,
}

#[derive(Serialize, Deserialize)]
struct CoordLinearMapRepr {
    from: AlgebraDescriptor,
    to: AlgebraDescriptor,
    matrix: Vec<Vec<f64>>,
}

impl TryFrom<CoordLinearMapRepr> for CoordLinearMap {
    type Error = Error;
    fn try_from(r: CoordLinearMapRepr) -> Result<CoordLinearMap> {
        CoordLinearMap::new(r.from, r.to, Mat::from_rows(&r.matrix)?)
    }
}

impl From<CoordLinearMap> for CoordLinearMapRepr {
    fn from(m: CoordLinearMap) -> CoordLinearMapRepr {
        CoordLinearMapRepr { from: m.from, to: m.to, matrix: m.matrix.to_rows() }
    }
}

impl CoordLinearMap {
    pub fn new(from: AlgebraDescriptor, to: AlgebraDescriptor, matrix: Mat) -> Result<CoordLinearMap> {
        if matrix.nrows() != to.dim() || matrix.ncols() != from.dim() {
            return Err(Error::InvalidDescriptor(format!(
                "matrix must be {}×{}, got {}×{}",
                to.dim(),
                from.dim(),
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if matrix.entries().iter().any(|v| !v.is_finite() || v.abs() > crate::algebra::MAX_COORD) {
            return Err(Error::InvalidCoords(
                "matrix entries must be finite and bounded".into(),
            ));
        }
        Ok(CoordLinearMap { from, to, matrix })
    }

    pub fn identity(alg: &AlgebraDescriptor) -> CoordLinearMap {
        CoordLinearMap { from: alg.clone(), to: alg.clone(), matrix: Mat::identity(alg.dim()) }
    }

    pub fn from_algebra(&self) -> &AlgebraDescriptor {
        &self.from
    }

    pub fn to_algebra(&self) -> &AlgebraDescriptor {
        &self.to
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.algebra() != &self.from {
            return Err(Error::AlgebraMismatch);
        }
        Element::new(self.to.clone(), self.matrix.matvec(x.coords()))
    }

    pub fn from_json(s: &str) -> Result<CoordLinearMap> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Black-box map on rays with a call counter, the input to the metric
/// factorization routine.
pub struct RayMapFn {
    f: Box<dyn Fn(&Ray) -> Result<Ray> + Sync>,
    calls: AtomicU64,
}

impl RayMapFn {
    pub fn new(f: impl Fn(&Ray) -> Result<Ray> + Sync + 'static) -> RayMapFn {
        RayMapFn { f: Box::new(f), calls: AtomicU64::new(0) }
    }

    pub fn apply(&self, r: &Ray) -> Result<Ray> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        (self.f)(r)
    }

    /// How many times the underlying map has been evaluated.
    pub fn call_count(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}

/// Black-box map on quotient classes with a call counter.
pub struct QuotientMapFn {
    f: Box<dyn Fn(&QuotientClass) -> Result<QuotientClass> + Sync>,
    calls: AtomicU64,
}

impl QuotientMapFn {
    pub fn new(
        f: impl Fn(&QuotientClass) -> Result<QuotientClass> + Sync + 'static,
    ) -> QuotientMapFn {
        QuotientMapFn { f: Box::new(f), calls: AtomicU64::new(0) }
    }

    pub fn apply(&self, q: &QuotientClass) -> Result<QuotientClass> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        (self.f)(q)
    }

    pub fn call_count(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }
}

/// Isometry of the Hilbert metric in normal form: [x] ↦ [U_y J(x^ε)].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "HilbertIsometryRepr", into = "HilbertIsometryRepr")]
pub struct HilbertIsometry {
    epsilon: Sign,
    y: Element,
    j: JordanIsomorphism,
}

#[derive(Serialize, Deserialize)]
struct HilbertIsometryRepr {
    epsilon: Sign,
    y: Element,
    #[serde(rename = "J")]
    j: JordanIsomorphism,
}

impl TryFrom<HilbertIsometryRepr> for HilbertIsometry {
    type Error = Error;
    fn try_from(r: HilbertIsometryRepr) -> Result<HilbertIsometry> {
        HilbertIsometry::new(r.epsilon, r.y, r.j)
    }
}

impl From<HilbertIsometry> for HilbertIsometryRepr {
    fn from(h: HilbertIsometry) -> HilbertIsometryRepr {
        HilbertIsometryRepr { epsilon: h.epsilon, y: h.y, j: h.j }
    }
}

impl HilbertIsometry {
    pub fn new(epsilon: Sign, y: Element, j: JordanIsomorphism) -> Result<HilbertIsometry> {
        if y.algebra() != j.codomain() {
            return Err(Error::AlgebraMismatch);
        }
        if !in_cone_interior(&y) {
            return Err(Error::Boundary);
        }
        Ok(HilbertIsometry { epsilon, y, j })
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn y(&self) -> &Element {
        &self.y
    }

    pub fn jordan_part(&self) -> &JordanIsomorphism {
        &self.j
    }

    pub fn domain(&self) -> &AlgebraDescriptor {
        self.j.domain()
    }

    pub fn codomain(&self) -> &AlgebraDescriptor {
        self.j.codomain()
    }

    pub fn apply_ray(&self, r: &Ray) -> Result<Ray> {
        if r.algebra() != self.domain() {
            return Err(Error::AlgebraMismatch);
        }
        let x = match self.epsilon {
            Sign::Plus => r.representative().clone(),
            Sign::Minus => inverse(r.representative())?,
        };
        let moved = quadratic_rep(&self.y, &self.j.apply(&x)?)?;
        Ray::of(&moved)
    }

    /// Wraps the isometry as a counted black-box map.
    pub fn as_ray_map(&self) -> RayMapFn {
        let me = self.clone();
        RayMapFn::new(move |r| me.apply_ray(r))
    }

    pub fn from_json(s: &str) -> Result<HilbertIsometry> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Sampled defect of Hilbert-distance preservation for a black-box ray map.
///
/// The defect is relative: |d(x,y) − d(f x, f y)| / (1 + d(x,y)).  Sampled
/// distances reach O(10) and the quadratic representation conditions the
/// absolute error by e^{spread}, so an absolute defect would mostly measure
/// how far apart the sampled pair happened to land.
pub fn verify_hilbert_isometry(
    f: &RayMapFn,
    domain: &AlgebraDescriptor,
    seed: u64,
    samples: usize,
) -> Result<f64> {
    let mut rng = Rng::new(derive_seed(seed, "verify-hilbert-isometry"));
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let x = sample_interior(domain, &mut rng);
        let y = sample_interior(domain, &mut rng);
        let rx = Ray::of(&x)?;
        let ry = Ray::of(&y)?;
        let d = hilbert_distance(&x, &y)?;
        let fx = f.apply(&rx)?;
        let fy = f.apply(&ry)?;
        let d2 = hilbert_distance(fx.representative(), fy.representative())?;
        worst = worst.max((d - d2).abs() / (1.0 + d));
    }
    Ok(worst)
}

/// Linear isometry of the variation seminorm in normal form ε·J modulo ℝe.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VariationIsometry {
    epsilon: Sign,
    #[serde(rename = "J")]
    j: JordanIsomorphism,
}

impl VariationIsometry {
    pub fn new(epsilon: Sign, j: JordanIsomorphism) -> VariationIsometry {
        VariationIsometry { epsilon, j }
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn jordan_part(&self) -> &JordanIsomorphism {
        &self.j
    }

    pub fn domain(&self) -> &AlgebraDescriptor {
        self.j.domain()
    }

    pub fn codomain(&self) -> &AlgebraDescriptor {
        self.j.codomain()
    }

    pub fn apply_class(&self, q: &QuotientClass) -> Result<QuotientClass> {
        let moved = self.j.apply(q.representative())?.scale(self.epsilon.as_f64());
        Ok(QuotientClass::of(&moved))
    }

    /// The induced matrix on coordinates, with image in traceless
    /// representatives (so the unit maps to 0).
    pub fn as_matrix(&self) -> CoordLinearMap {
        let from = self.domain().clone();
        let to = self.codomain().clone();
        let mut m = Mat::zeros(to.dim(), from.dim());
        for k in 0..from.dim() {
            let img = self
                .apply_class(&QuotientClass::of(&from.basis_element(k)))
                .expect("basis element");
            m.set_col(k, img.representative().coords());
        }
        CoordLinearMap { from, to, matrix: m }
    }
}

/// Sampled defect of seminorm preservation for a coordinate linear map read
/// modulo ℝe on both sides.
pub fn verify_variation_isometry(s: &CoordLinearMap, seed: u64, samples: usize) -> Result<f64> {
    let mut rng = Rng::new(derive_seed(seed, "verify-variation-isometry"));
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let x = sample_element(&s.from, &mut rng);
        let q = crate::spectral::quotient_norm(&x);
        let q2 = crate::spectral::quotient_norm(&s.apply(&x)?);
        worst = worst.max((q - q2).abs());
    }
    Ok(worst)
}

/// Affine-type isometry of the variation seminorm on the full space:
/// T(x) = ε·J(x) + φ(x)·e.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "AffineVariationIsometryRepr", into = "AffineVariationIsometryRepr")]
pub struct AffineVariationIsometry {
    epsilon: Sign,
    j: JordanIsomorphism,
    phi: Functional,
}

#[derive(Serialize, Deserialize)]
struct AffineVariationIsometryRepr {
    epsilon: Sign,
    #[serde(rename = "J")]
    j: JordanIsomorphism,
    phi: Functional,
}

impl TryFrom<AffineVariationIsometryRepr> for AffineVariationIsometry {
    type Error = Error;
    fn try_from(r: AffineVariationIsometryRepr) -> Result<AffineVariationIsometry> {
        AffineVariationIsometry::new(r.epsilon, r.j, r.phi)
    }
}

impl From<AffineVariationIsometry> for AffineVariationIsometryRepr {
    fn from(t: AffineVariationIsometry) -> AffineVariationIsometryRepr {
        AffineVariationIsometryRepr { epsilon: t.epsilon, j: t.j, phi: t.phi }
    }
}

impl AffineVariationIsometry {
    pub fn new(
        epsilon: Sign,
        j: JordanIsomorphism,
        phi: Functional,
    ) -> Result<AffineVariationIsometry> {
        if phi.algebra() != j.domain() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AffineVariationIsometry { epsilon, j, phi })
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn jordan_part(&self) -> &JordanIsomorphism {
        &self.j
    }

    pub fn phi(&self) -> &Functional {
        &self.phi
    }

    pub fn domain(&self) -> &AlgebraDescriptor {
        self.j.domain()
    }

    pub fn codomain(&self) -> &AlgebraDescriptor {
        self.j.codomain()
    }

    /// T is onto iff T(e) = (ε + φ(e))·e is nonzero.
    pub fn is_surjective(&self) -> bool {
        let at_unit = self.phi.apply(&self.domain().unit()).expect("same algebra");
        (self.epsilon.as_f64() + at_unit).abs() > 1e-9
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        let jx = self.j.apply(x)?.scale(self.epsilon.as_f64());
        jx.add_scaled(self.phi.apply(x)?, &self.codomain().unit())
    }

    pub fn to_matrix(&self) -> CoordLinearMap {
        let from = self.domain().clone();
        let to = self.codomain().clone();
        let mut m = Mat::zeros(to.dim(), from.dim());
        for k in 0..from.dim() {
            let img = self.apply(&from.basis_element(k)).expect("basis element");
            m.set_col(k, img.coords());
        }
        CoordLinearMap { from, to, matrix: m }
    }

    pub fn from_json(s: &str) -> Result<AffineVariationIsometry> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Whether every Hilbert-metric isometry of the cone's rays is induced by a
/// linear map of the ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsometryGroup {
    /// All isometries are projectivities (rank-two cones: inversion itself is
    /// linear up to scale there).
    ProjectivitiesOnly,
    /// The inversion is a non-projective isometry, so the group splits as the
    /// projectivities extended by the order-two inversion (rank three and up).
    SemidirectWithC2,
}

/// Rank dichotomy for the isometry group of the Hilbert metric.
pub fn classify_isometry_group(alg: &AlgebraDescriptor) -> IsometryGroup {
    if alg.rank() == 2 {
        IsometryGroup::ProjectivitiesOnly
    } else {
        IsometryGroup::SemidirectWithC2
    }
}

/// Conjugation of a projectivity by the ray inversion: (+1, y, J) becomes
/// (+1, y⁻¹, J).
pub fn conjugated_projectivity(h: &HilbertIsometry) -> Result<HilbertIsometry> {
    if h.epsilon() != Sign::Plus {
        return Err(Error::Domain(
            "conjugation formula applies to projectivities (ε = +1)".into(),
        ));
    }
    let y_inv = inverse(h.y())?;
    HilbertIsometry::new(h.epsilon(), y_inv, h.jordan_part().clone())
}
