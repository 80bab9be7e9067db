//! Numeric canonical forms: density matrices, fidelity, two-qubit Schmidt
//! and three-qubit Acín decompositions, and the `h → −h` reversal symmetry.
//!
//! Dense vectors use tensor-product order with `|↑⟩ = (1, 0)ᵀ` and site 1
//! most significant, so index 0 is `|↑…↑⟩`.

use nalgebra::{DMatrix, DVector, Matrix2, Vector2};
use num_complex::Complex64;

use crate::hilbert::{proportional, NumericState, StateVector};
use crate::scalar::HScalar;
use crate::{Error, Result};

/// Accepted deviation of an input norm from 1.
pub const NORM_TOLERANCE: f64 = 1e-10;
/// Singular-value gap below which a decomposition is flagged degenerate.
pub const DEGENERACY_GAP: f64 = 1e-10;
/// Largest acceptable Acín canonicalization residual.
pub const ACIN_RESIDUAL: f64 = 1e-8;
/// Relative size below which the Acín discriminant counts as zero.
const DISCRIMINANT_FLOOR: f64 = 1e-13;
/// Amplitudes below this are treated as zero when fixing phases.
const PHASE_FLOOR: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub type Unitary2 = Matrix2<Complex64>;

/// Complex dense vector of an `n_sites` chain.
pub fn to_complex(state: &NumericState) -> DVector<Complex64> {
    DVector::from_iterator(1 << state.n_sites(), state.to_dense().into_iter().map(|a| Complex64::new(a, 0.0)))
}

fn sites_of(v: &DVector<Complex64>) -> Result<usize> {
    let len = v.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::Format(format!("vector length {len} is not 2^N")));
    }
    Ok(len.trailing_zeros() as usize)
}

fn check_unit(v: &DVector<Complex64>) -> Result<()> {
    let norm = v.norm();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized(norm));
    }
    Ok(())
}

/// `|s⟩⟨s|` and general mixed states on `N` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    n_sites: usize,
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Wraps a matrix after checking Hermiticity, unit trace and
    /// positivity (eigenvalues ≥ −1e−10).
    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = matrix.nrows();
        if dim != matrix.ncols() || dim < 2 || !dim.is_power_of_two() {
            return Err(Error::Format(format!("{}x{} is not a 2^N square matrix", dim, matrix.ncols())));
        }
        let rho = Self { n_sites: dim.trailing_zeros() as usize, matrix };
        rho.validate()?;
        Ok(rho)
    }

    pub fn validate(&self) -> Result<()> {
        let m = &self.matrix;
        let skew = (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if skew > 1e-12 {
            return Err(Error::Format(format!("density matrix is not Hermitian (deviation {skew:e})")));
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > 1e-12 || trace.im.abs() > 1e-12 {
            return Err(Error::Format(format!("density matrix trace {trace} is not 1")));
        }
        let min = self.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -1e-10 {
            return Err(Error::Format(format!("density matrix has eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.matrix.clone().symmetric_eigenvalues().iter().copied().collect()
    }

    /// Real part of `ρ[row][col]`.
    pub fn real_entry(&self, row: usize, col: usize) -> f64 {
        self.matrix[(row, col)].re
    }

    /// `√ρ` via the eigendecomposition, negative round-off clipped to zero.
    fn sqrt(&self) -> DMatrix<Complex64> {
        let eig = self.matrix.clone().symmetric_eigen();
        let roots = eig.eigenvalues.map(|l| Complex64::new(l.max(0.0).sqrt(), 0.0));
        &eig.eigenvectors * DMatrix::from_diagonal(&roots) * eig.eigenvectors.adjoint()
    }
}

pub fn density(state: &NumericState) -> Result<DensityMatrix> {
    density_complex(&to_complex(state))
}

pub fn density_complex(state: &DVector<Complex64>) -> Result<DensityMatrix> {
    let n_sites = sites_of(state)?;
    check_unit(state)?;
    Ok(DensityMatrix { n_sites, matrix: state * state.adjoint() })
}

/// Uhlmann fidelity `(tr √(√ρ σ √ρ))²`; equals `|⟨a|b⟩|²` on pure states.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.n_sites != sigma.n_sites {
        return Err(Error::SiteMismatch(rho.n_sites, sigma.n_sites));
    }
    // A pure ρ = |ψ⟩⟨ψ| gives ⟨ψ|σ|ψ⟩ directly; the square roots below would
    // amplify round-off in the zero eigenvalues.
    let eig = rho.matrix.clone().symmetric_eigen();
    let (top, top_value) = eig.eigenvalues.argmax();
    if (top_value - 1.0).abs() < 1e-12 {
        let psi = eig.eigenvectors.column(top);
        return Ok((psi.adjoint() * &sigma.matrix * psi)[(0, 0)].re);
    }
    let root = rho.sqrt();
    let inner = DensityMatrix { n_sites: rho.n_sites, matrix: &root * &sigma.matrix * &root };
    let trace: f64 = inner.eigenvalues().into_iter().map(|l| if l > 1e-14 { l.sqrt() } else { 0.0 }).sum();
    Ok(trace * trace)
}

/// `½ Σ |λᵢ(ρ − σ)|`.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.n_sites != sigma.n_sites {
        return Err(Error::SiteMismatch(rho.n_sites, sigma.n_sites));
    }
    let diff = &rho.matrix - &sigma.matrix;
    Ok(diff.symmetric_eigenvalues().iter().map(|l| l.abs()).sum::<f64>() / 2.0)
}

/// `λ₁|↑↑⟩ + λ₂|↓↓⟩` with `U₁ ⊗ U₂ |ψ⟩` equal to that form.
#[derive(Clone, Debug, PartialEq)]
pub struct SchmidtResult {
    /// Descending, nonnegative, squares summing to 1.
    pub coefficients: [f64; 2],
    pub local_unitaries: [Unitary2; 2],
    /// Max deviation of the transformed state from the canonical form.
    pub residual: f64,
    /// Singular values closer than [`DEGENERACY_GAP`].
    pub degenerate: bool,
}

impl SchmidtResult {
    pub fn rank(&self, tolerance: f64) -> usize {
        self.coefficients.iter().filter(|c| **c > tolerance).count()
    }
}

pub fn schmidt2(state: &NumericState) -> Result<SchmidtResult> {
    schmidt2_complex(&to_complex(state))
}

/// SVD of the 2×2 amplitude matrix (site 1 indexes rows).
pub fn schmidt2_complex(state: &DVector<Complex64>) -> Result<SchmidtResult> {
    if sites_of(state)? != 2 {
        return Err(Error::SiteMismatch(2, sites_of(state)?));
    }
    let norm = state.norm();
    if norm < 1e-14 {
        return Err(Error::ZeroVector);
    }
    let psi = state / Complex64::new(norm, 0.0);
    let m = Matrix2::new(psi[0], psi[1], psi[2], psi[3]);
    let Svd2 { u, s, v_t } = svd2(&m);
    // (A ⊗ B)ψ has amplitude matrix A·M·Bᵀ; with M = U·S·Vᴴ take A = Uᴴ, B = Vᵀ.
    let a = u.adjoint();
    let b = v_t.conjugate();
    let transformed = a * m * b.transpose();
    let residual = [
        (transformed[(0, 0)] - Complex64::new(s[0], 0.0)).norm(),
        transformed[(0, 1)].norm(),
        transformed[(1, 0)].norm(),
        (transformed[(1, 1)] - Complex64::new(s[1], 0.0)).norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    Ok(SchmidtResult {
        coefficients: s,
        local_unitaries: [a, b],
        residual,
        degenerate: (s[0] - s[1]).abs() < DEGENERACY_GAP,
    })
}

/// `λ₀|↑↑↑⟩ + λ₁e^{iφ}|↓↑↑⟩ + λ₂|↓↑↓⟩ + λ₃|↓↓↑⟩ + λ₄|↓↓↓⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct AcinResult {
    pub lambdas: [f64; 5],
    /// In `[0, π]`.
    pub phi: f64,
    /// The transformed state carries `e^{−iφ}`; a real input never sets this
    /// except through round-off at `φ = π`.
    pub conjugated: bool,
    pub local_unitaries: [Unitary2; 3],
    /// Max deviation of `U₁⊗U₂⊗U₃|ψ⟩` from the template.
    pub residual: f64,
    /// The first-site rotation was not unique (all block determinants vanish).
    pub degenerate: bool,
}

impl AcinResult {
    /// The template vector with this result's coefficients.
    pub fn template(&self) -> DVector<Complex64> {
        let [l0, l1, l2, l3, l4] = self.lambdas;
        let phase = Complex64::from_polar(1.0, if self.conjugated { -self.phi } else { self.phi });
        let mut v = DVector::from_element(8, ZERO);
        v[0] = Complex64::new(l0, 0.0);
        v[0b100] = phase * l1;
        v[0b101] = Complex64::new(l2, 0.0);
        v[0b110] = Complex64::new(l3, 0.0);
        v[0b111] = Complex64::new(l4, 0.0);
        v
    }
}

pub fn acin3(state: &NumericState) -> Result<AcinResult> {
    acin3_complex(&to_complex(state))
}

/// Three-qubit canonical form.
///
/// The first-site rotation makes the `|↑··⟩` block rank one (a root of the
/// quadratic `det(u₀T₀ + u₁T₁) = 0`); an SVD of that block fixes sites 2
/// and 3; diagonal phases leave a single phase on `λ₁`. Of the two roots the
/// one giving the larger `λ₀` wins.
pub fn acin3_complex(state: &DVector<Complex64>) -> Result<AcinResult> {
    if sites_of(state)? != 3 {
        return Err(Error::SiteMismatch(3, sites_of(state)?));
    }
    check_unit(state)?;
    let block =
        |first: usize| Matrix2::new(state[first * 4], state[first * 4 + 1], state[first * 4 + 2], state[first * 4 + 3]);
    let (t0, t1) = (block(0), block(1));
    let a = t0.determinant();
    let c = t1.determinant();
    let b = (t0 + t1).determinant() - a - c;
    let scale = a.norm().max(b.norm()).max(c.norm());

    let mut rows: Vec<Vector2<Complex64>> = Vec::new();
    let degenerate = scale < 1e-12;
    if degenerate {
        // Any rotation works; take the dominant left singular vector of the 2×4 unfolding.
        let unfold = nalgebra::Matrix2x4::from_fn(|i, j| state[4 * i + j]);
        let top = top_eigenvector(&(unfold * unfold.adjoint()));
        rows.push(top.map(|z| z.conj()));
    } else {
        let unit = |x: Complex64| {
            let n = (1.0 + x.norm_sqr()).sqrt();
            Vector2::new(Complex64::new(1.0 / n, 0.0), x / n)
        };
        if c.norm() > 1e-14 * scale {
            // b² − 4ac is the hyperdeterminant; at zero three-tangle round-off
            // would otherwise enter λ₄ as its square root.
            let mut disc = b * b - a * c * 4.0;
            if disc.norm() < DISCRIMINANT_FLOOR * scale * scale {
                disc = ZERO;
            }
            let disc = disc.sqrt();
            rows.push(unit((-b + disc) / (c * 2.0)));
            rows.push(unit((-b - disc) / (c * 2.0)));
        } else {
            rows.push(Vector2::new(ZERO, ONE));
            if b.norm() > 1e-14 * scale {
                rows.push(unit(-a / b));
            }
        }
    }

    let mut best: Option<AcinResult> = None;
    for row in rows {
        let candidate = canonical_from_row(state, row, degenerate);
        if best.as_ref().is_none_or(|b| candidate.lambdas[0] > b.lambdas[0] + 1e-13) {
            best = Some(candidate);
        }
    }
    let result = best.expect("at least one candidate row");
    if result.residual.is_nan() || result.residual > ACIN_RESIDUAL {
        return Err(Error::Convergence(result.residual));
    }
    Ok(result)
}

fn canonical_from_row(state: &DVector<Complex64>, row: Vector2<Complex64>, degenerate: bool) -> AcinResult {
    let u1 = Matrix2::new(row[0], row[1], -row[1].conj(), row[0].conj());
    let rotated = apply_local(state, [&u1, &Matrix2::identity(), &Matrix2::identity()]);
    let first = Matrix2::new(rotated[0], rotated[1], rotated[2], rotated[3]);
    let Svd2 { u: p, v_t, .. } = svd2(&first);
    let u2 = p.adjoint();
    let u3 = v_t.conjugate();
    let t = apply_local(state, [&u1, &u2, &u3]);

    let (l0, a, b, c, d) = (t[0], t[0b100], t[0b101], t[0b110], t[0b111]);
    let arg = |z: Complex64| if z.norm() > PHASE_FLOOR { z.arg() } else { 0.0 };
    let all_nonzero = [a, b, c, d].iter().all(|z| z.norm() > PHASE_FLOOR);
    // The only local-unitary invariant phase of the template.
    let raw = if all_nonzero { wrap(arg(a) + arg(d) - arg(b) - arg(c)) } else { 0.0 };

    // Diagonal phases: g on qubit 1 globally, x_i on |↓⟩ of qubit i.
    let g = -arg(l0);
    let x1 = if a.norm() > PHASE_FLOOR {
        raw - arg(a) - g
    } else if all_nonzero || [b, c, d].iter().all(|z| z.norm() > PHASE_FLOOR) {
        -arg(b) - arg(c) + arg(d) - g
    } else {
        0.0
    };
    let x2 = if c.norm() > PHASE_FLOOR {
        -arg(c) - g - x1
    } else if b.norm() > PHASE_FLOOR && d.norm() > PHASE_FLOOR {
        arg(b) - arg(d)
    } else {
        0.0
    };
    let x3 = if b.norm() > PHASE_FLOOR {
        -arg(b) - g - x1
    } else if d.norm() > PHASE_FLOOR {
        -arg(d) - g - x1 - x2
    } else {
        0.0
    };
    let phase = |x: f64| Complex64::from_polar(1.0, x);
    let u1 = Matrix2::new(phase(g), ZERO, ZERO, phase(g + x1)) * u1;
    let u2 = Matrix2::new(ONE, ZERO, ZERO, phase(x2)) * u2;
    let u3 = Matrix2::new(ONE, ZERO, ZERO, phase(x3)) * u3;
    let t = apply_local(state, [&u1, &u2, &u3]);

    let mut result = AcinResult {
        lambdas: [t[0].norm(), t[0b100].norm(), t[0b101].norm(), t[0b110].norm(), t[0b111].norm()],
        phi: raw.abs(),
        conjugated: raw < 0.0,
        local_unitaries: [u1, u2, u3],
        residual: 0.0,
        degenerate,
    };
    result.residual = (&t - result.template()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    result
}

/// `M = U·diag(s)·V_t` with `s` descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Svd2 {
    pub u: Unitary2,
    pub s: [f64; 2],
    pub v_t: Unitary2,
}

/// Closed-form 2×2 SVD. The small singular value comes from `|det M| / s₁`,
/// which keeps it accurate for nearly rank-one input.
pub fn svd2(m: &Matrix2<Complex64>) -> Svd2 {
    let u1 = top_eigenvector(&(m * m.adjoint()));
    let w1 = m.adjoint() * u1;
    let s1 = w1.norm();
    if s1 < f64::MIN_POSITIVE {
        return Svd2 { u: Matrix2::identity(), s: [0.0, 0.0], v_t: Matrix2::identity() };
    }
    let v1 = w1 / Complex64::new(s1, 0.0);
    let u2 = Vector2::new(-u1[1].conj(), u1[0].conj());
    let mut v2 = Vector2::new(-v1[1].conj(), v1[0].conj());
    let w = (u2.adjoint() * m * v2)[(0, 0)];
    let s2 = m.determinant().norm() / s1;
    if w.norm() > 0.0 {
        v2 *= w.conj() / w.norm();
    }
    let u = Matrix2::from_columns(&[u1, u2]);
    let v = Matrix2::from_columns(&[v1, v2]);
    Svd2 { u, s: [s1, s2], v_t: v.adjoint() }
}

/// Unit eigenvector of the larger eigenvalue of a Hermitian 2×2 matrix.
fn top_eigenvector(a: &Matrix2<Complex64>) -> Vector2<Complex64> {
    let (p, q, r) = (a[(0, 0)].re, a[(0, 1)], a[(1, 1)].re);
    let half = (p - r) / 2.0;
    let lambda = (p + r) / 2.0 + (half * half + q.norm_sqr()).sqrt();
    let first = Vector2::new(q, Complex64::new(lambda - p, 0.0));
    let second = Vector2::new(Complex64::new(lambda - r, 0.0), q.conj());
    let v = if first.norm() >= second.norm() { first } else { second };
    let n = v.norm();
    if n < f64::MIN_POSITIVE {
        return Vector2::new(ONE, ZERO);
    }
    v / Complex64::new(n, 0.0)
}

/// Maps an angle into `(−π, π]`.
fn wrap(x: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let mut y = (x + pi).rem_euclid(2.0 * pi) - pi;
    if y <= -pi + 1e-12 {
        y = pi;
    }
    y
}

/// The unitary `e^{ia}cos θ, e^{ib}sin θ; −e^{i(a−b+c)}sin θ, e^{ic}cos θ`,
/// which covers U(2) as the angles range over the reals.
pub fn euler_unitary(theta: f64, a: f64, b: f64, c: f64) -> Unitary2 {
    let (s, co) = theta.sin_cos();
    let e = |x: f64| Complex64::from_polar(1.0, x);
    Matrix2::new(e(a) * co, e(b) * s, -e(-b + a + c) * s, e(c) * co)
}

/// `(U₁ ⊗ U₂ ⊗ … ) |ψ⟩` for one 2×2 unitary per site.
pub fn apply_local<const N: usize>(state: &DVector<Complex64>, unitaries: [&Unitary2; N]) -> DVector<Complex64> {
    let mut out = state.clone();
    for (site, u) in unitaries.iter().enumerate() {
        let stride = 1 << (N - 1 - site);
        let mut next = DVector::from_element(out.len(), ZERO);
        for i in 0..out.len() {
            let bit = (i / stride) & 1;
            let base = i - bit * stride;
            next[i] = u[(bit, 0)] * out[base] + u[(bit, 1)] * out[base + stride];
        }
        out = next;
    }
    out
}

/// Whether `s` equals `sign` times its image under the site permutation
/// (site reversal when `perm` is `None`) combined with `h ↦ −h`.
pub fn reversal_symmetry_check(state: &StateVector, perm: Option<&[usize]>, sign: i8) -> Result<bool> {
    let n = state.n_sites();
    let reversal: Vec<usize> = (1..=n).rev().collect();
    let image = state.permute_sites(perm.unwrap_or(&reversal))?.negate_h();
    Ok(proportional(&image, state)?.is_some_and(|r| r.equals(&HScalar::from(sign))))
}
