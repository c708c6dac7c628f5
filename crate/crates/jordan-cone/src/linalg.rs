//! Small dense-matrix helpers: row-major storage, a cyclic Jacobi eigensolver
//! for symmetric matrices, and polar orthogonalization.  Every matrix in this
//! crate has at most a handful of rows (the rank or dimension of an algebra),
//! so the implementations favor determinism and robustness over asymptotics.

use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, a: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from row vectors, rejecting ragged or non-finite input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Mat> {
        if rows.is_empty() {
            return Err(Error::InvalidCoords("matrix has no rows".into()));
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::InvalidCoords("matrix has empty rows".into()));
        }
        let mut a = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::InvalidCoords("matrix rows have unequal lengths".into()));
            }
            for &v in r {
                if !v.is_finite() {
                    return Err(Error::InvalidCoords("matrix entry is not finite".into()));
                }
                a.push(v);
            }
        }
        Ok(Mat { rows: rows.len(), cols, a })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.a[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    /// Flat row-major view of all entries.
    pub fn entries(&self) -> &[f64] {
        &self.a
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[f64]) {
        for i in 0..self.rows {
            self.set(i, j, v[i]);
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j));
            }
        }
        t
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len());
        let mut y = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut s = 0.0;
            for j in 0..self.cols {
                s += self.at(i, j) * x[j];
            }
            y[i] = s;
        }
        y
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut m = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    m.set(i, j, m.at(i, j) + aik * other.at(k, j));
                }
            }
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// ‖QᵀQ − I‖_max ≤ tol for a square matrix.
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let g = self.transpose().matmul(self);
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g.at(i, j) - target).abs());
            }
        }
        worst <= tol
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the orthonormal eigenvectors as
/// the *columns* of the returned matrix, in matching order.  The input is
/// pre-scaled by its largest entry so that arbitrarily large finite inputs
/// cannot overflow, and the sweep order is fixed, so the output is a
/// deterministic function of the input.
pub fn sym_eigen(m: &Mat) -> Result<(Vec<f64>, Mat)> {
    assert_eq!(m.nrows(), m.ncols());
    let n = m.nrows();
    if n == 0 {
        return Ok((Vec::new(), Mat::zeros(0, 0)));
    }
    let scale = m.max_abs();
    if scale == 0.0 {
        return Ok((vec![0.0; n], Mat::identity(n)));
    }
    if !scale.is_finite() {
        return Err(Error::Domain("eigensolver input is not finite".into()));
    }

    let mut a = m.clone();
    for v in a.a.iter_mut() {
        *v /= scale;
    }
    let mut v = Mat::identity(n);
    let mut d: Vec<f64> = (0..n).map(|i| a.at(i, i)).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let mut converged = false;
    for sweep in 0..JACOBI_MAX_SWEEPS {
        let mut sm = 0.0;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                sm += a.at(p, q).abs();
            }
        }
        if sm == 0.0 {
            converged = true;
            break;
        }
        let tresh = if sweep < 3 { 0.2 * sm / ((n * n) as f64) } else { 0.0 };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let g = 100.0 * a.at(p, q).abs();
                // Skip rotations on entries that are negligible against both
                // diagonal values; zeroing them ends the sweep sooner.
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a.set(p, q, 0.0);
                } else if a.at(p, q).abs() > tresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        a.at(p, q) / h
                    } else {
                        let theta = 0.5 * h / a.at(p, q);
                        let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            t = -t;
                        }
                        t
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    h = t * a.at(p, q);
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a.set(p, q, 0.0);
                    let rot = |a: &mut Mat, i: usize, j: usize, k: usize, l: usize| {
                        let g = a.at(i, j);
                        let h = a.at(k, l);
                        a.set(i, j, g - s * (h + g * tau));
                        a.set(k, l, h + s * (g - h * tau));
                    };
                    for j in 0..p {
                        rot(&mut a, j, p, j, q);
                    }
                    for j in p + 1..q {
                        rot(&mut a, p, j, j, q);
                    }
                    for j in q + 1..n {
                        rot(&mut a, p, j, q, j);
                    }
                    for j in 0..n {
                        rot(&mut v, j, p, j, q);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if !converged {
        return Err(Error::Domain("jacobi eigensolver did not converge".into()));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i] * scale).collect();
    let mut vectors = Mat::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let col = v.col(src);
        vectors.set_col(dst, &col);
    }
    Ok((eigenvalues, vectors))
}

/// Polar orthogonal factor Q = F(FᵀF)^(−1/2) of a square nonsingular F.
///
/// Used to snap a nearly orthogonal fitted frame onto the orthogonal group;
/// fails when F is numerically rank-deficient.
pub fn polar_orthogonal(f: &Mat) -> Result<Mat> {
    assert_eq!(f.nrows(), f.ncols());
    let s = f.transpose().matmul(f);
    let (lams, v) = sym_eigen(&s)?;
    let n = f.nrows();
    let lam_max = lams.last().copied().unwrap_or(0.0);
    if lams[0] <= 1e-12 * lam_max.max(1.0) {
        return Err(Error::Domain("polar factor of a singular matrix".into()));
    }
    // S^(−1/2) = V diag(1/√λ) Vᵀ
    let mut inv_half = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += v.at(i, k) * v.at(j, k) / lams[k].sqrt();
            }
            inv_half.set(i, j, acc);
        }
    }
    Ok(f.matmul(&inv_half))
}

/// Orthonormalizes the columns of a square matrix by modified Gram–Schmidt.
/// Returns None when a pivot collapses (caller should resample).
pub fn orthonormalize_columns(m: &Mat) -> Option<Mat> {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let mut cols: Vec<Vec<f64>> = (0..n).map(|j| m.col(j)).collect();
    for j in 0..n {
        for k in 0..j {
            let dot: f64 = (0..n).map(|i| cols[j][i] * cols[k][i]).sum();
            for i in 0..n {
                cols[j][i] -= dot * cols[k][i];
            }
        }
        let norm: f64 = (0..n).map(|i| cols[j][i] * cols[j][i]).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return None;
        }
        for i in 0..n {
            cols[j][i] /= norm;
        }
    }
    let mut q = Mat::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        q.set_col(j, c);
    }
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(lams: &[f64], v: &Mat) -> Mat {
        let n = lams.len();
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += lams[k] * v.at(i, k) * v.at(j, k);
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    #[test]
    fn eigen_2x2_known() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let m = Mat::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let (lams, v) = sym_eigen(&m).unwrap();
        assert!((lams[0] - 1.0).abs() < 1e-14);
        assert!((lams[1] - 3.0).abs() < 1e-14);
        assert!(v.is_orthogonal(1e-14));
    }

    #[test]
    fn eigen_3x3_reconstructs() {
        let m = Mat::from_rows(&[
            vec![4.0, 1.0, -2.0],
            vec![1.0, 2.0, 0.5],
            vec![-2.0, 0.5, -1.0],
        ])
        .unwrap();
        let (lams, v) = sym_eigen(&m).unwrap();
        assert!(lams.windows(2).all(|w| w[0] <= w[1]));
        assert!(v.is_orthogonal(1e-13));
        let r = reconstruct(&lams, &v);
        for i in 0..3 {
            for j in 0..3 {
                assert!((r.at(i, j) - m.at(i, j)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn eigen_handles_huge_scale_without_overflow() {
        let m = Mat::from_rows(&[vec![1e300, 2e299], vec![2e299, -3e299]]).unwrap();
        let (lams, v) = sym_eigen(&m).unwrap();
        assert!(lams.iter().all(|l| l.is_finite()));
        assert!(v.is_orthogonal(1e-13));
    }

    #[test]
    fn eigen_is_deterministic() {
        let m = Mat::from_rows(&[
            vec![0.3, -1.2, 0.7],
            vec![-1.2, 2.0, 0.1],
            vec![0.7, 0.1, -0.5],
        ])
        .unwrap();
        let a = sym_eigen(&m).unwrap();
        let b = sym_eigen(&m).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn polar_snaps_perturbed_rotation() {
        // A rotation perturbed by 1e-3 should snap back to within ~1e-6 of O(n).
        let c = 0.6_f64;
        let s = 0.8_f64;
        let m = Mat::from_rows(&[vec![c + 1e-3, -s], vec![s, c - 1e-3]]).unwrap();
        let q = polar_orthogonal(&m).unwrap();
        assert!(q.is_orthogonal(1e-12));
        assert!((q.at(0, 0) - c).abs() < 1e-2);
    }

    #[test]
    fn gram_schmidt_produces_orthogonal() {
        let m = Mat::from_rows(&[
            vec![1.0, 1.0, 0.0],
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0],
        ])
        .unwrap();
        let q = orthonormalize_columns(&m).unwrap();
        assert!(q.is_orthogonal(1e-13));
    }
}
