//! Algebra descriptors and element arithmetic.
//!
//! Four families are implemented, all carrying their canonical trace inner
//! product normalized so that primitive idempotents have trace one:
//!
//! * `Diagonal(n)` — ℝⁿ with entrywise product, ⟨x,y⟩ = Σ xᵢyᵢ;
//! * `Spin(n)` — pairs (v, λ) ∈ ℝⁿ×ℝ with (u,α)∘(v,β) = (βu+αv, ⟨u,v⟩+αβ)
//!   and ⟨·,·⟩ scaled by 2 so the two eigenvalue slots each carry weight 1;
//! * `SymMatrix(n)` — real symmetric n×n matrices with X∘Y = (XY+YX)/2 and
//!   tr(XY), stored packed (upper triangle, row-major, off-diagonals once);
//! * `DirectSum` — concatenated coordinates of the summands, in declaration
//!   order, with componentwise operations.
//!
//! Every element knows its descriptor; binary operations insist the
//! descriptors match exactly and fail with `AlgebraMismatch` otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard ceiling on total coordinate dimension accepted from descriptors.
/// Purely a decoder guard so hostile JSON cannot request absurd allocations.
pub const MAX_TOTAL_DIM: usize = 1 << 16;

#[derive(Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
enum DescriptorRepr {
    Diagonal { n: u64 },
    Spin { n: u64 },
    Sym { n: u64 },
    Sum { summands: Vec<DescriptorRepr> },
}

/// Shape of an algebra.  Build through the checked constructors or JSON;
/// the operations assume a validated descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DescriptorRepr", into = "DescriptorRepr")]
pub enum AlgebraDescriptor {
    Diagonal { n: usize },
    Spin { n: usize },
    SymMatrix { n: usize },
    DirectSum { summands: Vec<AlgebraDescriptor> },
}

impl TryFrom<DescriptorRepr> for AlgebraDescriptor {
    type Error = Error;
    fn try_from(r: DescriptorRepr) -> Result<Self> {
        let d = convert_repr(r)?;
        d.validate()?;
        Ok(d)
    }
}

fn convert_repr(r: DescriptorRepr) -> Result<AlgebraDescriptor> {
    let as_usize = |n: u64| -> Result<usize> {
        usize::try_from(n).map_err(|_| Error::InvalidDescriptor("n is out of range".into()))
    };
    Ok(match r {
        DescriptorRepr::Diagonal { n } => AlgebraDescriptor::Diagonal { n: as_usize(n)? },
        DescriptorRepr::Spin { n } => AlgebraDescriptor::Spin { n: as_usize(n)? },
        DescriptorRepr::Sym { n } => AlgebraDescriptor::SymMatrix { n: as_usize(n)? },
        DescriptorRepr::Sum { summands } => AlgebraDescriptor::DirectSum {
            summands: summands.into_iter().map(convert_repr).collect::<Result<_>>()?,
        },
    })
}

impl From<AlgebraDescriptor> for DescriptorRepr {
    fn from(d: AlgebraDescriptor) -> DescriptorRepr {
        match d {
            AlgebraDescriptor::Diagonal { n } => DescriptorRepr::Diagonal { n: n as u64 },
            AlgebraDescriptor::Spin { n } => DescriptorRepr::Spin { n: n as u64 },
            AlgebraDescriptor::SymMatrix { n } => DescriptorRepr::Sym { n: n as u64 },
            AlgebraDescriptor::DirectSum { summands } => DescriptorRepr::Sum {
                summands: summands.into_iter().map(Into::into).collect(),
            },
        }
    }
}

impl AlgebraDescriptor {
    pub fn diagonal(n: usize) -> Result<Self> {
        let d = AlgebraDescriptor::Diagonal { n };
        d.validate()?;
        Ok(d)
    }

    pub fn spin(n: usize) -> Result<Self> {
        let d = AlgebraDescriptor::Spin { n };
        d.validate()?;
        Ok(d)
    }

    pub fn sym_matrix(n: usize) -> Result<Self> {
        let d = AlgebraDescriptor::SymMatrix { n };
        d.validate()?;
        Ok(d)
    }

    pub fn direct_sum(summands: Vec<AlgebraDescriptor>) -> Result<Self> {
        let d = AlgebraDescriptor::DirectSum { summands };
        d.validate()?;
        Ok(d)
    }

    /// Structural validation: every variant needs n ≥ 2, sums need at least
    /// one summand, and the total dimension must stay below `MAX_TOTAL_DIM`.
    pub fn validate(&self) -> Result<()> {
        self.checked_dim().map(|_| ())
    }

    fn checked_dim(&self) -> Result<usize> {
        let dim = match self {
            AlgebraDescriptor::Diagonal { n } => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor("diagonal algebra needs n >= 2".into()));
                }
                *n
            }
            AlgebraDescriptor::Spin { n } => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor("spin factor needs n >= 2".into()));
                }
                n.checked_add(1)
                    .ok_or_else(|| Error::InvalidDescriptor("dimension overflow".into()))?
            }
            AlgebraDescriptor::SymMatrix { n } => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor("matrix algebra needs n >= 2".into()));
                }
                n.checked_mul(n + 1)
                    .map(|m| m / 2)
                    .ok_or_else(|| Error::InvalidDescriptor("dimension overflow".into()))?
            }
            AlgebraDescriptor::DirectSum { summands } => {
                if summands.is_empty() {
                    return Err(Error::InvalidDescriptor("direct sum needs at least one summand".into()));
                }
                let mut total = 0usize;
                for s in summands {
                    total = total
                        .checked_add(s.checked_dim()?)
                        .ok_or_else(|| Error::InvalidDescriptor("dimension overflow".into()))?;
                }
                total
            }
        };
        if dim > MAX_TOTAL_DIM {
            return Err(Error::InvalidDescriptor(format!(
                "total dimension {dim} exceeds the supported maximum {MAX_TOTAL_DIM}"
            )));
        }
        Ok(dim)
    }

    /// Coordinate dimension of elements.
    pub fn dim(&self) -> usize {
        match self {
            AlgebraDescriptor::Diagonal { n } => *n,
            AlgebraDescriptor::Spin { n } => n + 1,
            AlgebraDescriptor::SymMatrix { n } => n * (n + 1) / 2,
            AlgebraDescriptor::DirectSum { summands } => summands.iter().map(|s| s.dim()).sum(),
        }
    }

    /// Rank: the number of atoms in a maximal orthogonal system (equivalently
    /// the trace of the unit).
    pub fn rank(&self) -> usize {
        match self {
            AlgebraDescriptor::Diagonal { n } => *n,
            AlgebraDescriptor::Spin { .. } => 2,
            AlgebraDescriptor::SymMatrix { n } => *n,
            AlgebraDescriptor::DirectSum { summands } => summands.iter().map(|s| s.rank()).sum(),
        }
    }

    pub fn summands(&self) -> Option<&[AlgebraDescriptor]> {
        match self {
            AlgebraDescriptor::DirectSum { summands } => Some(summands),
            _ => None,
        }
    }

    /// (offset, length) of each summand's coordinate block; None for simple
    /// variants.
    pub fn summand_spans(&self) -> Option<Vec<(usize, usize)>> {
        let summands = self.summands()?;
        let mut spans = Vec::with_capacity(summands.len());
        let mut off = 0;
        for s in summands {
            let d = s.dim();
            spans.push((off, d));
            off += d;
        }
        Some(spans)
    }

    pub fn zero(&self) -> Element {
        Element { algebra: self.clone(), coords: vec![0.0; self.dim()] }
    }

    /// The order unit e (identity of the product).
    pub fn unit(&self) -> Element {
        let mut coords = vec![0.0; self.dim()];
        write_unit(self, &mut coords);
        Element { algebra: self.clone(), coords }
    }

    /// k-th coordinate basis element.
    pub fn basis_element(&self, k: usize) -> Element {
        let mut coords = vec![0.0; self.dim()];
        coords[k] = 1.0;
        Element { algebra: self.clone(), coords }
    }

    /// A fixed complete system of pairwise orthogonal atoms summing to the
    /// unit: δᵢ for diagonals, ½(±e₁, 1) for spin factors, Eᵢᵢ for matrices,
    /// embedded summand frames for sums.
    pub fn jordan_frame(&self) -> Vec<Element> {
        match self {
            AlgebraDescriptor::Diagonal { n } => (0..*n).map(|i| self.basis_element(i)).collect(),
            AlgebraDescriptor::Spin { n } => {
                let mut plus = vec![0.0; n + 1];
                plus[0] = 0.5;
                plus[*n] = 0.5;
                let mut minus = vec![0.0; n + 1];
                minus[0] = -0.5;
                minus[*n] = 0.5;
                vec![
                    Element { algebra: self.clone(), coords: plus },
                    Element { algebra: self.clone(), coords: minus },
                ]
            }
            AlgebraDescriptor::SymMatrix { n } => (0..*n)
                .map(|i| {
                    let mut coords = vec![0.0; self.dim()];
                    coords[sym_index(*n, i, i)] = 1.0;
                    Element { algebra: self.clone(), coords }
                })
                .collect(),
            AlgebraDescriptor::DirectSum { summands } => {
                let mut out = Vec::new();
                for (idx, s) in summands.iter().enumerate() {
                    for atom in s.jordan_frame() {
                        out.push(embed_summand(self, idx, &atom).expect("frame embeds"));
                    }
                }
                out
            }
        }
    }

    /// Diagonal of the Gram matrix of the trace form in packed coordinates
    /// (the coordinate basis is orthogonal in every variant).
    pub fn trace_gram_diagonal(&self) -> Vec<f64> {
        match self {
            AlgebraDescriptor::Diagonal { n } => vec![1.0; *n],
            AlgebraDescriptor::Spin { n } => vec![2.0; n + 1],
            AlgebraDescriptor::SymMatrix { n } => {
                let mut w = vec![0.0; self.dim()];
                for i in 0..*n {
                    for j in i..*n {
                        w[sym_index(*n, i, j)] = if i == j { 1.0 } else { 2.0 };
                    }
                }
                w
            }
            AlgebraDescriptor::DirectSum { summands } => {
                summands.iter().flat_map(|s| s.trace_gram_diagonal()).collect()
            }
        }
    }

    /// Parses and validates a descriptor from JSON
    /// (`{"variant":"diagonal"|"spin"|"sym"|"sum", "n":…, "summands":[…]}`).
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serialization cannot fail")
    }
}

fn write_unit(alg: &AlgebraDescriptor, out: &mut [f64]) {
    match alg {
        AlgebraDescriptor::Diagonal { .. } => out.fill(1.0),
        AlgebraDescriptor::Spin { n } => {
            out.fill(0.0);
            out[*n] = 1.0;
        }
        AlgebraDescriptor::SymMatrix { n } => {
            out.fill(0.0);
            for i in 0..*n {
                out[sym_index(*n, i, i)] = 1.0;
            }
        }
        AlgebraDescriptor::DirectSum { summands } => {
            let mut off = 0;
            for s in summands {
                let d = s.dim();
                write_unit(s, &mut out[off..off + d]);
                off += d;
            }
        }
    }
}

/// Packed index of entry (i, j), i ≤ j, in the row-major upper triangle.
/// Row i starts at Σ_{k<i}(n−k) = i(2n−i+1)/2.
#[inline]
pub(crate) fn sym_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * (2 * n - i + 1) / 2 + (j - i)
}

/// Expands packed coordinates into a full row-major n×n symmetric matrix.
pub(crate) fn sym_unpack(n: usize, packed: &[f64]) -> Vec<f64> {
    let mut full = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = packed[sym_index(n, i, j)];
            full[i * n + j] = v;
            full[j * n + i] = v;
        }
    }
    full
}

/// Packs the upper triangle of a full row-major matrix.
pub(crate) fn sym_pack(n: usize, full: &[f64]) -> Vec<f64> {
    let mut packed = vec![0.0; n * (n + 1) / 2];
    for i in 0..n {
        for j in i..n {
            packed[sym_index(n, i, j)] = full[i * n + j];
        }
    }
    packed
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    algebra: AlgebraDescriptor,
    coords: Vec<f64>,
}

/// An element of an algebra: a validated coordinate vector tagged with its
/// descriptor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ElementRepr", into = "ElementRepr")]
pub struct Element {
    algebra: AlgebraDescriptor,
    coords: Vec<f64>,
}

impl TryFrom<ElementRepr> for Element {
    type Error = Error;
    fn try_from(r: ElementRepr) -> Result<Self> {
        Element::new(r.algebra, r.coords)
    }
}

impl From<Element> for ElementRepr {
    fn from(e: Element) -> ElementRepr {
        ElementRepr { algebra: e.algebra, coords: e.coords }
    }
}

/// Largest accepted coordinate magnitude.  Products of two in-range
/// coordinates stay far from f64 overflow, which keeps every quadratic
/// expression downstream (products, traces, eigensolves) finite.
pub const MAX_COORD: f64 = 1e150;

impl Element {
    /// Validates length, finiteness (NaN/∞ rejected), and magnitude
    /// (|c| ≤ MAX_COORD).
    pub fn new(algebra: AlgebraDescriptor, coords: Vec<f64>) -> Result<Element> {
        if coords.len() != algebra.dim() {
            return Err(Error::InvalidCoords(format!(
                "expected {} coordinates, got {}",
                algebra.dim(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidCoords("coordinates must be finite".into()));
        }
        if coords.iter().any(|c| c.abs() > MAX_COORD) {
            return Err(Error::InvalidCoords(format!(
                "coordinate magnitude exceeds {MAX_COORD:e}"
            )));
        }
        Ok(Element { algebra, coords })
    }

    pub fn algebra(&self) -> &AlgebraDescriptor {
        &self.algebra
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub(crate) fn from_parts_unchecked(algebra: AlgebraDescriptor, coords: Vec<f64>) -> Element {
        Element { algebra, coords }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        check_same(self, other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Element { algebra: self.algebra.clone(), coords })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        check_same(self, other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Element { algebra: self.algebra.clone(), coords })
    }

    pub fn scale(&self, c: f64) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|v| c * v).collect(),
        }
    }

    /// self + c·other.
    pub fn add_scaled(&self, c: f64, other: &Element) -> Result<Element> {
        check_same(self, other)?;
        let coords =
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + c * b).collect();
        Ok(Element { algebra: self.algebra.clone(), coords })
    }

    /// The commutative (non-associative) product of the algebra.
    pub fn jordan_product(&self, other: &Element) -> Result<Element> {
        check_same(self, other)?;
        let mut out = vec![0.0; self.coords.len()];
        jordan_into(&self.algebra, &self.coords, &other.coords, &mut out);
        Ok(Element { algebra: self.algebra.clone(), coords: out })
    }

    /// Canonical trace form, normalized so atoms have trace 1; in particular
    /// ⟨e, e⟩ equals the rank.
    pub fn trace_inner_product(&self, other: &Element) -> Result<f64> {
        check_same(self, other)?;
        Ok(trace_inner(&self.algebra, &self.coords, &other.coords))
    }

    /// ⟨x, e⟩ — the trace of the element.
    pub fn trace(&self) -> f64 {
        trace_of(&self.algebra, &self.coords)
    }

    /// Largest |coordinate|; a cheap scale estimate (not the algebra norm).
    pub fn max_abs_coord(&self) -> f64 {
        self.coords.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn from_json(s: &str) -> Result<Element> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serialization cannot fail")
    }
}

fn check_same(a: &Element, b: &Element) -> Result<()> {
    if a.algebra != b.algebra {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

fn jordan_into(alg: &AlgebraDescriptor, x: &[f64], y: &[f64], out: &mut [f64]) {
    match alg {
        AlgebraDescriptor::Diagonal { .. } => {
            for i in 0..x.len() {
                out[i] = x[i] * y[i];
            }
        }
        AlgebraDescriptor::Spin { n } => {
            let n = *n;
            let alpha = x[n];
            let beta = y[n];
            let mut dot = 0.0;
            for i in 0..n {
                out[i] = beta * x[i] + alpha * y[i];
                dot += x[i] * y[i];
            }
            out[n] = dot + alpha * beta;
        }
        AlgebraDescriptor::SymMatrix { n } => {
            let n = *n;
            let xf = sym_unpack(n, x);
            let yf = sym_unpack(n, y);
            // (XY + YX)/2, read off the upper triangle.
            for i in 0..n {
                for j in i..n {
                    let mut acc = 0.0;
                    for k in 0..n {
                        acc += xf[i * n + k] * yf[k * n + j] + yf[i * n + k] * xf[k * n + j];
                    }
                    out[sym_index(n, i, j)] = 0.5 * acc;
                }
            }
        }
        AlgebraDescriptor::DirectSum { summands } => {
            let mut off = 0;
            for s in summands {
                let d = s.dim();
                jordan_into(s, &x[off..off + d], &y[off..off + d], &mut out[off..off + d]);
                off += d;
            }
        }
    }
}

fn trace_inner(alg: &AlgebraDescriptor, x: &[f64], y: &[f64]) -> f64 {
    match alg {
        AlgebraDescriptor::Diagonal { .. } => x.iter().zip(y).map(|(a, b)| a * b).sum(),
        AlgebraDescriptor::Spin { .. } => {
            2.0 * x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>()
        }
        AlgebraDescriptor::SymMatrix { n } => {
            let n = *n;
            let mut acc = 0.0;
            for i in 0..n {
                for j in i..n {
                    let w = if i == j { 1.0 } else { 2.0 };
                    let k = sym_index(n, i, j);
                    acc += w * x[k] * y[k];
                }
            }
            acc
        }
        AlgebraDescriptor::DirectSum { summands } => {
            let mut off = 0;
            let mut acc = 0.0;
            for s in summands {
                let d = s.dim();
                acc += trace_inner(s, &x[off..off + d], &y[off..off + d]);
                off += d;
            }
            acc
        }
    }
}

fn trace_of(alg: &AlgebraDescriptor, x: &[f64]) -> f64 {
    match alg {
        AlgebraDescriptor::Diagonal { .. } => x.iter().sum(),
        AlgebraDescriptor::Spin { n } => 2.0 * x[*n],
        AlgebraDescriptor::SymMatrix { n } => (0..*n).map(|i| x[sym_index(*n, i, i)]).sum(),
        AlgebraDescriptor::DirectSum { summands } => {
            let mut off = 0;
            let mut acc = 0.0;
            for s in summands {
                let d = s.dim();
                acc += trace_of(s, &x[off..off + d]);
                off += d;
            }
            acc
        }
    }
}

/// Jordan triple product {x, y, z} = (x∘y)∘z + (z∘y)∘x − (x∘z)∘y.
pub fn triple_product(x: &Element, y: &Element, z: &Element) -> Result<Element> {
    let xy_z = x.jordan_product(y)?.jordan_product(z)?;
    let zy_x = z.jordan_product(y)?.jordan_product(x)?;
    let xz_y = x.jordan_product(z)?.jordan_product(y)?;
    xy_z.add(&zy_x)?.sub(&xz_y)
}

/// Quadratic representation U_y x = {y, x, y} = 2 y∘(y∘x) − y²∘x.
pub fn quadratic_rep(y: &Element, x: &Element) -> Result<Element> {
    let y_yx = y.jordan_product(&y.jordan_product(x)?)?;
    let yy_x = y.jordan_product(y)?.jordan_product(x)?;
    y_yx.scale(2.0).sub(&yy_x)
}

/// Embeds a summand element into the direct sum at position `idx` (zeros
/// everywhere else).
pub fn embed_summand(sum: &AlgebraDescriptor, idx: usize, component: &Element) -> Result<Element> {
    let spans = sum
        .summand_spans()
        .ok_or_else(|| Error::InvalidDescriptor("not a direct sum".into()))?;
    let summands = sum.summands().expect("spans imply summands");
    if idx >= summands.len() {
        return Err(Error::InvalidDescriptor("summand index out of range".into()));
    }
    if component.algebra() != &summands[idx] {
        return Err(Error::AlgebraMismatch);
    }
    let (off, d) = spans[idx];
    let mut coords = vec![0.0; sum.dim()];
    coords[off..off + d].copy_from_slice(component.coords());
    Ok(Element { algebra: sum.clone(), coords })
}

/// Extracts the block of a direct-sum element belonging to summand `idx`.
pub fn extract_summand(sum: &AlgebraDescriptor, idx: usize, x: &Element) -> Result<Element> {
    if x.algebra() != sum {
        return Err(Error::AlgebraMismatch);
    }
    let spans = sum
        .summand_spans()
        .ok_or_else(|| Error::InvalidDescriptor("not a direct sum".into()))?;
    let summands = sum.summands().expect("spans imply summands");
    if idx >= summands.len() {
        return Err(Error::InvalidDescriptor("summand index out of range".into()));
    }
    let (off, d) = spans[idx];
    Ok(Element {
        algebra: summands[idx].clone(),
        coords: x.coords()[off..off + d].to_vec(),
    })
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

    #[test]
    fn descriptor_validation() {
        assert!(AlgebraDescriptor::diagonal(1).is_err());
        assert!(AlgebraDescriptor::spin(1).is_err());
        assert!(AlgebraDescriptor::sym_matrix(1).is_err());
        assert!(AlgebraDescriptor::direct_sum(vec![]).is_err());
        assert!(AlgebraDescriptor::diagonal(2).is_ok());
        let sum = AlgebraDescriptor::direct_sum(vec![diag(2), AlgebraDescriptor::spin(3).unwrap()]);
        assert!(sum.is_ok());
    }

    #[test]
    fn dims_and_ranks() {
        assert_eq!(diag(3).dim(), 3);
        assert_eq!(diag(3).rank(), 3);
        let spin3 = AlgebraDescriptor::spin(3).unwrap();
        assert_eq!(spin3.dim(), 4);
        assert_eq!(spin3.rank(), 2);
        let sym3 = AlgebraDescriptor::sym_matrix(3).unwrap();
        assert_eq!(sym3.dim(), 6);
        assert_eq!(sym3.rank(), 3);
        let sum = AlgebraDescriptor::direct_sum(vec![diag(2), spin3]).unwrap();
        assert_eq!(sum.dim(), 6);
        assert_eq!(sum.rank(), 4);
    }

    #[test]
    fn units() {
        assert_eq!(diag(3).unit().coords(), &[1.0, 1.0, 1.0]);
        assert_eq!(AlgebraDescriptor::spin(2).unwrap().unit().coords(), &[0.0, 0.0, 1.0]);
        assert_eq!(AlgebraDescriptor::sym_matrix(2).unwrap().unit().coords(), &[1.0, 0.0, 1.0]);
        let sum = AlgebraDescriptor::direct_sum(vec![diag(2), AlgebraDescriptor::spin(2).unwrap()])
            .unwrap();
        assert_eq!(sum.unit().coords(), &[1.0, 1.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn diagonal_product_is_entrywise() {
        let a = diag(3);
        let x = el(&a, &[1.0, 2.0, 3.0]);
        let y = el(&a, &[4.0, 5.0, 6.0]);
        assert_eq!(x.jordan_product(&y).unwrap().coords(), &[4.0, 10.0, 18.0]);
    }

    #[test]
    fn unit_is_neutral_in_every_variant() {
        let algebras = vec![
            diag(4),
            AlgebraDescriptor::spin(3).unwrap(),
            AlgebraDescriptor::sym_matrix(3).unwrap(),
            AlgebraDescriptor::direct_sum(vec![diag(2), AlgebraDescriptor::sym_matrix(2).unwrap()])
                .unwrap(),
        ];
        for a in algebras {
            let dim = a.dim();
            let x = el(&a, &(0..dim).map(|i| (i as f64) * 0.7 - 1.3).collect::<Vec<_>>());
            let xe = x.jordan_product(&a.unit()).unwrap();
            for (u, v) in x.coords().iter().zip(xe.coords()) {
                assert!((u - v).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn spin_square_of_unit_vector_is_unit() {
        let a = AlgebraDescriptor::spin(2).unwrap();
        let x = el(&a, &[1.0, 0.0, 0.0]);
        let sq = x.jordan_product(&x).unwrap();
        assert_eq!(sq.coords(), a.unit().coords());
    }

    #[test]
    fn sym_square_matches_matrix_square() {
        // X = [[1,2],[2,3]] packed (1,2,3); X² = [[5,8],[8,13]].
        let a = AlgebraDescriptor::sym_matrix(2).unwrap();
        let x = el(&a, &[1.0, 2.0, 3.0]);
        let sq = x.jordan_product(&x).unwrap();
        assert_eq!(sq.coords(), &[5.0, 8.0, 13.0]);
    }

    #[test]
    fn triple_product_is_xyx_for_matrices() {
        // X=[[1,2],[2,3]], Y=[[0,1],[1,1]]: XYX = [[8,13],[13,21]].
        let a = AlgebraDescriptor::sym_matrix(2).unwrap();
        let x = el(&a, &[1.0, 2.0, 3.0]);
        let y = el(&a, &[0.0, 1.0, 1.0]);
        let t = triple_product(&x, &y, &x).unwrap();
        for (got, want) in t.coords().iter().zip(&[8.0, 13.0, 21.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn quadratic_rep_matches_triple_product() {
        let a = AlgebraDescriptor::sym_matrix(3).unwrap();
        let y = el(&a, &[1.0, 0.2, -0.4, 2.0, 0.3, -1.0]);
        let x = el(&a, &[0.5, 1.0, 0.0, -0.7, 0.2, 1.5]);
        let u = quadratic_rep(&y, &x).unwrap();
        let t = triple_product(&y, &x, &y).unwrap();
        for (a, b) in u.coords().iter().zip(t.coords()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn trace_of_unit_is_rank() {
        for a in [
            diag(5),
            AlgebraDescriptor::spin(2).unwrap(),
            AlgebraDescriptor::spin(4).unwrap(),
            AlgebraDescriptor::sym_matrix(4).unwrap(),
            AlgebraDescriptor::direct_sum(vec![diag(2), AlgebraDescriptor::spin(3).unwrap()])
                .unwrap(),
        ] {
            let e = a.unit();
            let got = e.trace_inner_product(&e).unwrap();
            assert!((got - a.rank() as f64).abs() < 1e-14, "{a:?}");
            assert!((e.trace() - a.rank() as f64).abs() < 1e-14);
        }
    }

    #[test]
    fn frame_atoms_have_trace_one_and_sum_to_unit() {
        for a in [
            diag(3),
            AlgebraDescriptor::spin(3).unwrap(),
            AlgebraDescriptor::sym_matrix(3).unwrap(),
            AlgebraDescriptor::direct_sum(vec![diag(2), AlgebraDescriptor::spin(2).unwrap()])
                .unwrap(),
        ] {
            let frame = a.jordan_frame();
            assert_eq!(frame.len(), a.rank());
            let mut total = a.zero();
            for atom in &frame {
                assert!((atom.trace() - 1.0).abs() < 1e-14);
                let sq = atom.jordan_product(atom).unwrap();
                for (u, v) in sq.coords().iter().zip(atom.coords()) {
                    assert!((u - v).abs() < 1e-14);
                }
                total = total.add(atom).unwrap();
            }
            for (u, v) in total.coords().iter().zip(a.unit().coords()) {
                assert!((u - v).abs() < 1e-14);
            }
            for i in 0..frame.len() {
                for j in 0..i {
                    let prod = frame[i].jordan_product(&frame[j]).unwrap();
                    assert!(prod.max_abs_coord() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn trace_form_is_associative_with_product() {
        let a = AlgebraDescriptor::direct_sum(vec![
            AlgebraDescriptor::spin(3).unwrap(),
            AlgebraDescriptor::sym_matrix(2).unwrap(),
        ])
        .unwrap();
        let x = el(&a, &[0.3, -1.0, 0.4, 2.0, 1.0, 0.5, -0.2]);
        let y = el(&a, &[1.1, 0.2, -0.3, 0.9, -0.4, 0.8, 1.5]);
        let z = el(&a, &[-0.7, 0.6, 1.2, 0.1, 0.3, -1.1, 0.4]);
        let lhs = x.jordan_product(&y).unwrap().trace_inner_product(&z).unwrap();
        let rhs = x.trace_inner_product(&y.jordan_product(&z).unwrap()).unwrap();
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn mismatch_is_rejected() {
        let x = el(&diag(3), &[1.0, 2.0, 3.0]);
        let y = el(&diag(2), &[1.0, 2.0]);
        assert!(matches!(x.jordan_product(&y), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn element_validation() {
        assert!(Element::new(diag(3), vec![1.0, 2.0]).is_err());
        assert!(Element::new(diag(2), vec![f64::NAN, 0.0]).is_err());
        assert!(Element::new(diag(2), vec![f64::INFINITY, 0.0]).is_err());
    }

    #[test]
    fn descriptor_json_wire_format() {
        let d = diag(3);
        assert_eq!(d.to_json(), r#"{"variant":"diagonal","n":3}"#);
        let s = AlgebraDescriptor::sym_matrix(2).unwrap();
        assert_eq!(s.to_json(), r#"{"variant":"sym","n":2}"#);
        let sum = AlgebraDescriptor::direct_sum(vec![d.clone(), s.clone()]).unwrap();
        assert_eq!(
            sum.to_json(),
            r#"{"variant":"sum","summands":[{"variant":"diagonal","n":3},{"variant":"sym","n":2}]}"#
        );
        for json in [d.to_json(), s.to_json(), sum.to_json()] {
            let back = AlgebraDescriptor::from_json(&json).unwrap();
            assert_eq!(back.to_json(), json);
        }
    }

    #[test]
    fn malformed_descriptor_json_is_rejected() {
        assert!(AlgebraDescriptor::from_json(r#"{"variant":"diagonal","n":1}"#).is_err());
        assert!(AlgebraDescriptor::from_json(r#"{"variant":"sum","summands":[]}"#).is_err());
        assert!(AlgebraDescriptor::from_json(r#"{"variant":"diagonal","n":99999999}"#).is_err());
        assert!(AlgebraDescriptor::from_json(r#"{"variant":"cube","n":3}"#).is_err());
    }

    #[test]
    fn element_json_roundtrip_and_validation() {
        let a = AlgebraDescriptor::spin(2).unwrap();
        let x = el(&a, &[3.0, 4.0, 10.0]);
        let json = x.to_json();
        assert_eq!(
            json,
            r#"{"algebra":{"variant":"spin","n":2},"coords":[3.0,4.0,10.0]}"#
        );
        let back = Element::from_json(&json).unwrap();
        assert_eq!(back, x);
        assert!(Element::from_json(
            r#"{"algebra":{"variant":"spin","n":2},"coords":[3.0,4.0]}"#
        )
        .is_err());
        assert!(Element::from_json(
            r#"{"algebra":{"variant":"spin","n":2},"coords":[3.0,4.0,null]}"#
        )
        .is_err());
    }

    #[test]
    fn direct_sum_embedding_roundtrip() {
        let spin = AlgebraDescriptor::spin(2).unwrap();
        let sum = AlgebraDescriptor::direct_sum(vec![diag(2), spin.clone()]).unwrap();
        let part = el(&spin, &[1.0, -2.0, 0.5]);
        let emb = embed_summand(&sum, 1, &part).unwrap();
        assert_eq!(emb.coords(), &[0.0, 0.0, 1.0, -2.0, 0.5]);
        let back = extract_summand(&sum, 1, &emb).unwrap();
        assert_eq!(back, part);
        assert!(embed_summand(&sum, 0, &part).is_err());
    }

    #[test]
    fn sym_packing_roundtrip() {
        let n = 4;
        let packed: Vec<f64> = (0..10).map(|i| i as f64 * 0.31 - 1.0).collect();
        let full = sym_unpack(n, &packed);
        for i in 0..n {
            for j in 0..n {
                assert_eq!(full[i * n + j], full[j * n + i]);
            }
        }
        assert_eq!(sym_pack(n, &full), packed);
    }
}
