//! Dense complex linear algebra for few-qubit operators.
//!
//! Everything here works on small square matrices (at most 16×16). Qubit 0
//! is the most significant bit of a basis index, so `|abc⟩` sits at index
//! `4a + 2b + c`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

const MAX_JACOBI_SWEEPS: usize = 100;

/// Row-major square complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from `dim²` row-major entries.
    pub fn from_entries(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_entries(dim, entries)
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    /// The rank-one operator `|v⟩⟨v|`.
    pub fn outer(v: &[C64]) -> Self {
        let dim = v.len();
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate (not transposed).
    pub fn conj(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `M - M†`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(M + M†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
            }
        }
        out
    }

    /// `M v`.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    sum += self[(i, j)].norm_sqr();
                }
            }
        }
        sum.sqrt()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.entries[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Tensor (Kronecker) product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (m, n) = (a.dim, b.dim);
    let mut out = ComplexMatrix::zeros(m * n);
    for i in 0..m {
        for j in 0..m {
            let aij = a[(i, j)];
            for k in 0..n {
                for l in 0..n {
                    out[(i * n + k, j * n + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Spectral decomposition of a Hermitian matrix.
///
/// `values` are sorted in descending order and column `i` of `vectors` is
/// the unit eigenvector for `values[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Eigen {
    /// `V diag(f(λ)) V†`.
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.vectors[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vik * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_values(|x| x)
    }
}

/// Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<Eigen> {
    let deviation = h.hermiticity_deviation();
    if !(deviation <= tol::HERMITIAN) {
        return Err(Error::NotHermitian { deviation });
    }
    let n = h.dim;
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = tol::JACOBI_OFF_DIAGONAL * a.frobenius_norm().max(1.0);

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if a.off_diagonal_norm() < threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, src)];
        }
    }
    Ok(Eigen { values, vectors })
}

/// Annihilates `a[p][q]` with the unitary `U = diag(1, e^{-iα}) R(θ)` acting
/// on coordinates `p, q`, where `a[p][q] = r e^{iα}`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase_conj = (apq / r).conj();
    let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let u_pp = C64::new(c, 0.0);
    let u_pq = C64::new(s, 0.0);
    let u_qp = phase_conj * -s;
    let u_qq = phase_conj * c;

    let n = a.dim;
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}

/// Principal square root of a Hermitian positive semidefinite matrix.
pub fn psd_sqrt_matrix(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(m)?;
    sqrt_from_eigen(&eig)
}

fn sqrt_from_eigen(eig: &Eigen) -> Result<ComplexMatrix> {
    if let Some(&lowest) = eig.values.last() {
        if lowest < -tol::EIGEN_CLAMP {
            return Err(Error::NegativeEigenvalue { value: lowest });
        }
    }
    Ok(eig.map_values(|x| x.max(0.0).sqrt()))
}

/// A validated density operator on `num_qubits` qubits.
///
/// Construction checks Hermiticity, unit trace and positivity, and caches
/// the spectrum. Eigenvalues in the clamp window are set to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    num_qubits: usize,
    spectrum: Eigen,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 || num_qubits > 4 {
            return Err(Error::InvalidParameter(format!(
                "num_qubits must be in 1..=4, got {num_qubits}"
            )));
        }
        let expected = 1usize << num_qubits;
        if matrix.dim != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: matrix.dim,
            });
        }
        let trace = matrix.trace();
        if !((trace.re - 1.0).abs() <= tol::TRACE && trace.im.abs() <= tol::TRACE) {
            return Err(Error::TraceNotUnit { trace: trace.re });
        }
        let mut spectrum = hermitian_eigen(&matrix)?;
        let lowest = *spectrum.values.last().expect("non-empty spectrum");
        if lowest < -tol::EIGEN_CLAMP {
            return Err(Error::NegativeEigenvalue { value: lowest });
        }

        let matrix = if lowest < 0.0 {
            for v in spectrum.values.iter_mut() {
                *v = v.max(0.0);
            }
            let total: f64 = spectrum.values.iter().sum();
            for v in spectrum.values.iter_mut() {
                *v /= total;
            }
            spectrum.reconstruct()
        } else {
            matrix.hermitian_part()
        };
        Ok(Self {
            matrix,
            num_qubits,
            spectrum,
        })
    }

    /// The pure-state projector `|ψ⟩⟨ψ|` for a normalized amplitude vector.
    pub fn from_amplitudes(amplitudes: &[C64], num_qubits: usize) -> Result<Self> {
        Self::new(ComplexMatrix::outer(amplitudes), num_qubits)
    }

    pub fn maximally_mixed(num_qubits: usize) -> Result<Self> {
        let dim = 1usize << num_qubits;
        Self::new(
            ComplexMatrix::diagonal(&vec![1.0 / dim as f64; dim]),
            num_qubits,
        )
    }

    /// Convex combination `w·self + (1-w)·other`.
    pub fn mix(&self, other: &Self, weight: f64) -> Result<Self> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                actual: other.num_qubits,
            });
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::InvalidParameter(format!("mixing weight {weight}")));
        }
        let m = &self.matrix.scale(C64::new(weight, 0.0))
            + &other.matrix.scale(C64::new(1.0 - weight, 0.0));
        Self::new(m, self.num_qubits)
    }

    /// `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Self::new(
            kron(&self.matrix, &other.matrix),
            self.num_qubits + other.num_qubits,
        )
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim
    }

    /// Eigenvalues in descending order, all non-negative.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectrum.values
    }

    pub fn spectrum(&self) -> &Eigen {
        &self.spectrum
    }

    /// Number of eigenvalues above `threshold`.
    pub fn rank(&self, threshold: f64) -> usize {
        self.spectrum
            .values
            .iter()
            .filter(|&&x| x > threshold)
            .count()
    }
}

/// Reduced state on the qubits in `keep`, in the order given.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.num_qubits;
    if keep.is_empty() {
        return Err(Error::InvalidParameter("keep set is empty".into()));
    }
    let mut seen = vec![false; n];
    for &q in keep {
        if q >= n {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits: n,
            });
        }
        if seen[q] {
            return Err(Error::DuplicateQubit(q));
        }
        seen[q] = true;
    }
    let traced: Vec<usize> = (0..n).filter(|&q| !seen[q]).collect();

    let spread = |bits: usize, qubits: &[usize]| -> usize {
        let k = qubits.len();
        qubits
            .iter()
            .enumerate()
            .map(|(pos, &q)| ((bits >> (k - 1 - pos)) & 1) << (n - 1 - q))
            .sum()
    };

    let out_dim = 1usize << keep.len();
    let env_dim = 1usize << traced.len();
    let kept_index: Vec<usize> = (0..out_dim).map(|i| spread(i, keep)).collect();
    let env_index: Vec<usize> = (0..env_dim).map(|t| spread(t, &traced)).collect();

    let mut out = ComplexMatrix::zeros(out_dim);
    for i in 0..out_dim {
        for j in 0..out_dim {
            out[(i, j)] = env_index
                .iter()
                .map(|&e| rho.matrix[(kept_index[i] | e, kept_index[j] | e)])
                .sum();
        }
    }
    DensityMatrix::new(out, keep.len())
}

/// Principal square root of a density matrix.
pub fn psd_sqrt(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    sqrt_from_eigen(&rho.spectrum)
}

/// Pauli matrices, for tests and operator construction.
pub mod pauli {
    use super::{ComplexMatrix, C64};

    pub fn x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
    }

    pub fn y() -> ComplexMatrix {
        let i = C64::new(0.0, 1.0);
        ComplexMatrix::from_rows(&[vec![C64::new(0.0, 0.0), -i], vec![i, C64::new(0.0, 0.0)]])
            .unwrap()
    }

    pub fn z() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]).unwrap()
    }
}
