//! Deterministic sampling: a small SplitMix64 generator plus samplers for
//! elements, cone-interior points, projections, and structure-preserving maps.
//!
//! Everything is reproducible from a seed; independent streams for named
//! properties come from hashing the name into the master seed.

use crate::algebra::{AlgebraDescriptor, Element};
use crate::isometry::JordanIsomorphism;
use crate::linalg::{orthonormalize_columns, Mat};
use crate::spectral::{exp_el, spectral_decomposition};

/// SplitMix64 with a cached Box–Muller spare for normal draws.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
    spare: Option<f64>,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed, spare: None }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with full 53-bit mantissa.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in 0..n (n > 0), bias-free enough for test sampling.
    pub fn next_range(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    pub fn next_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// Standard normal via the polar Box–Muller transform.
    pub fn normal(&mut self) -> f64 {
        if let Some(s) = self.spare.take() {
            return s;
        }
        loop {
            let u = 2.0 * self.next_f64() - 1.0;
            let v = 2.0 * self.next_f64() - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let f = (-2.0 * s.ln() / s).sqrt();
                self.spare = Some(v * f);
                return u * f;
            }
        }
    }
}

/// FNV-1a over the property name, XORed into the master seed, so each named
/// check gets an independent reproducible stream.
pub fn derive_seed(master: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    master ^ h
}

/// Arbitrary element with iid standard-normal coordinates.
pub fn sample_element(alg: &AlgebraDescriptor, rng: &mut Rng) -> Element {
    let coords: Vec<f64> = (0..alg.dim()).map(|_| rng.normal()).collect();
    Element::new(alg.clone(), coords).expect("normal coordinates are finite")
}

/// Cone-interior element: the exponential of a moderate random element, so the
/// spectrum is strictly positive with condition numbers spread over a few
/// orders of magnitude.
pub fn sample_interior(alg: &AlgebraDescriptor, rng: &mut Rng) -> Element {
    let coords: Vec<f64> = (0..alg.dim()).map(|_| 0.7 * rng.normal()).collect();
    let x = Element::new(alg.clone(), coords).expect("finite");
    exp_el(&x).expect("bounded spectrum cannot overflow the exponential")
}

/// Proper projection (neither 0 nor the unit): split the spectrum of a random
/// element at a uniform cut and keep a random side.
pub fn sample_projection(alg: &AlgebraDescriptor, rng: &mut Rng) -> Element {
    loop {
        let x = sample_element(alg, rng);
        let d = spectral_decomposition(&x).expect("finite element");
        if d.len() < 2 {
            continue;
        }
        // Threshold at the median eigenvalue (counted with multiplicity),
        // keeping a uniformly chosen side of the cut.
        let median = {
            let mut seen = 0usize;
            let mut idx = 0usize;
            let half = alg.rank() / 2;
            for (i, m) in d.multiplicities().iter().enumerate() {
                seen += m;
                if seen > half {
                    idx = i;
                    break;
                }
            }
            idx
        };
        if median == 0 {
            // Every eigenvalue sits at or above the median cluster: no
            // proper cut below it, so redraw.
            continue;
        }
        let upper = rng.next_bool();
        let picked: Vec<&Element> = if upper {
            d.idempotents()[median..].iter().collect()
        } else {
            d.idempotents()[..median].iter().collect()
        };
        let mut p = alg.zero();
        for c in picked {
            p = p.add(c).expect("same algebra");
        }
        return p;
    }
}

/// Haar-ish random orthogonal matrix: Gram–Schmidt of a normal matrix.
pub fn random_orthogonal(n: usize, rng: &mut Rng) -> Mat {
    loop {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rng.normal());
            }
        }
        if let Some(q) = orthonormalize_columns(&m) {
            return q;
        }
    }
}

fn random_permutation(n: usize, rng: &mut Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.next_range(i + 1);
        perm.swap(i, j);
    }
    perm
}

/// Random structure-preserving automorphism of the algebra: coordinate
/// permutations on diagonal factors, orthogonal rotations of the spin part,
/// orthogonal conjugations on matrix factors, and on direct sums a permutation
/// of identical summands composed with per-summand automorphisms.
pub fn sample_jordan_iso(alg: &AlgebraDescriptor, rng: &mut Rng) -> JordanIsomorphism {
    match alg {
        AlgebraDescriptor::Diagonal { n } => JordanIsomorphism::permutation(
            alg.clone(),
            alg.clone(),
            random_permutation(*n, rng),
        )
        .expect("valid permutation"),
        AlgebraDescriptor::Spin { n } => JordanIsomorphism::spin_orthogonal(
            alg.clone(),
            alg.clone(),
            random_orthogonal(*n, rng),
        )
        .expect("orthogonal matrix"),
        AlgebraDescriptor::SymMatrix { n } => JordanIsomorphism::sym_conjugation(
            alg.clone(),
            alg.clone(),
            random_orthogonal(*n, rng),
        )
        .expect("orthogonal matrix"),
        AlgebraDescriptor::DirectSum { summands } => {
            // Permute only within groups of identical summand descriptors.
            let k = summands.len();
            let mut assignment = vec![usize::MAX; k];
            let mut taken = vec![false; k];
            for i in 0..k {
                let slots: Vec<usize> = (0..k)
                    .filter(|&j| !taken[j] && summands[j] == summands[i])
                    .collect();
                let j = slots[rng.next_range(slots.len())];
                assignment[i] = j;
                taken[j] = true;
            }
            let components: Vec<JordanIsomorphism> =
                summands.iter().map(|s| sample_jordan_iso(s, rng)).collect();
            JordanIsomorphism::sum_map(alg.clone(), alg.clone(), assignment, components)
                .expect("matched summands")
        }
    }
}
