//! Uniform Fourier-DVR grid: quadrature, kinetic energy, model potentials,
//! soft-Coulomb interaction kernel and the complex absorbing potential.
//!
//! Orbitals are stored as weight-scaled samples `c_k = sqrt(w) * phi(x_k)`,
//! so discrete inner products are plain dot products and every local
//! potential acts diagonally.  The kinetic operator is the exact Fourier-DVR
//! matrix with periodic boundary; it is applied either densely or through
//! the FFT (both routes agree to machine precision).

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;
use rustfft::{Fft, FftDirection, FftPlanner};
use thiserror::Error;

use crate::scalar::{fabs, fmax, Real};

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("invalid domain: need n >= 2 and x_max > x_min (got n={n}, x_min={x_min}, x_max={x_max})")]
    InvalidDomain { n: usize, x_min: f64, x_max: f64 },
    #[error("invalid CAP spec: {0}")]
    InvalidCap(String),
}

/// Uniform grid on `[x_min, x_max)` with periodic Fourier-DVR quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct DvrGrid<F: Real> {
    pub x_min: F,
    pub x_max: F,
    pub n_points: usize,
    pub points: Vec<F>,
    /// Uniform quadrature weight `(x_max - x_min) / n_points`.
    pub weight: F,
}

impl<F: Real> DvrGrid<F> {
    pub fn spacing(&self) -> F {
        self.weight
    }

    pub fn length(&self) -> F {
        self.x_max - self.x_min
    }

    /// Largest distance from the origin covered by the box.
    pub fn edge(&self) -> F {
        fmax(fabs(self.x_min), fabs(self.x_max))
    }
}

/// Build a grid with `n` equally spaced points on `[x_min, x_max)`.
pub fn build_grid<F: Real>(x_min: F, x_max: F, n: usize) -> Result<DvrGrid<F>, GridError> {
    if n < 2 || x_max <= x_min {
        return Err(GridError::InvalidDomain {
            n,
            x_min: x_min.to_f64(),
            x_max: x_max.to_f64(),
        });
    }
    let dx = (x_max - x_min) / F::of_usize(n);
    let points = (0..n).map(|k| x_min + dx * F::of_usize(k)).collect();
    Ok(DvrGrid {
        x_min,
        x_max,
        n_points: n,
        points,
        weight: dx,
    })
}

/// Momentum of Fourier mode with FFT index `idx` (the Nyquist mode of an
/// even grid maps to `+pi/dx`).
fn mode_momentum<F: Real>(idx: usize, n: usize, length: F) -> F {
    let m = if idx <= n / 2 {
        idx as isize
    } else {
        idx as isize - n as isize
    };
    F::two_pi() * F::of(m as f64) / length
}

/// Circulant profile of the kinetic matrix: `t[d]` is the matrix element at
/// circular distance `d`, for `d = 0..=n/2`.
fn kinetic_profile<F: Real>(grid: &DvrGrid<F>) -> Vec<F> {
    let n = grid.n_points;
    let len = grid.length();
    let half = F::of(0.5);
    let inv_n = F::one() / F::of_usize(n);
    (0..=n / 2)
        .map(|d| {
            let mut acc = F::zero();
            for idx in 0..n {
                let k = mode_momentum(idx, n, len);
                let phase = F::two_pi() * F::of_usize(d) * F::of(idx as f64) / F::of_usize(n);
                acc += half * k * k * phase.cos();
            }
            acc * inv_n
        })
        .collect()
}

/// Exact Fourier-DVR representation of `-1/2 d^2/dx^2` (real symmetric).
pub fn kinetic_matrix<F: Real>(grid: &DvrGrid<F>) -> DMatrix<F> {
    let n = grid.n_points;
    let prof = kinetic_profile(grid);
    DMatrix::from_fn(n, n, |j, l| {
        let d = (j as isize - l as isize).rem_euclid(n as isize) as usize;
        prof[d.min(n - d)]
    })
}

/// Exact Fourier-DVR first-derivative matrix `d/dx` (real antisymmetric;
/// the Nyquist mode is dropped as usual for odd-order operators).
pub fn first_derivative_matrix<F: Real>(grid: &DvrGrid<F>) -> DMatrix<F> {
    let n = grid.n_points;
    let len = grid.length();
    let inv_n = F::one() / F::of_usize(n);
    // Antisymmetric circulant profile: s[d] = (1/n) sum_m (-k_m) sin(2 pi m d / n).
    let mut prof = vec![F::zero(); n];
    #[allow(clippy::needless_range_loop)]
    for d in 0..n {
        let mut acc = F::zero();
        for idx in 0..n {
            if n % 2 == 0 && idx == n / 2 {
                continue;
            }
            let k = mode_momentum(idx, n, len);
            let phase = F::two_pi() * F::of_usize(d) * F::of(idx as f64) / F::of_usize(n);
            acc -= k * phase.sin();
        }
        prof[d] = acc * inv_n;
    }
    // Enforce exact antisymmetry of the circulant: s[n-d] := -s[d].
    for d in 1..=(n - 1) / 2 {
        prof[n - d] = -prof[d];
    }
    if n % 2 == 0 {
        prof[n / 2] = F::zero();
    }
    DMatrix::from_fn(n, n, |j, l| {
        let d = (j as isize - l as isize).rem_euclid(n as isize) as usize;
        prof[d]
    })
}

/// Soft-core nuclear attraction `-Z / sqrt(x^2 + 1)` sampled on the grid.
pub fn potential_vector<F: Real>(grid: &DvrGrid<F>, z: F) -> DVector<F> {
    DVector::from_iterator(
        grid.n_points,
        grid.points
            .iter()
            .map(|&x| -z / (x * x + F::one()).sqrt()),
    )
}

/// Dipole-acceleration weight `d(x) = -dV/dx = -Z x / (x^2 + 1)^(3/2)`.
pub fn dipole_acceleration_vector<F: Real>(grid: &DvrGrid<F>, z: F) -> DVector<F> {
    DVector::from_iterator(
        grid.n_points,
        grid.points.iter().map(|&x| {
            let r2 = x * x + F::one();
            -z * x / (r2 * r2.sqrt())
        }),
    )
}

/// Soft-Coulomb repulsion kernel `K_kl = 1 / sqrt((x_k - x_l)^2 + 1)`.
pub fn interaction_kernel<F: Real>(grid: &DvrGrid<F>) -> DMatrix<F> {
    let n = grid.n_points;
    let dx = grid.spacing();
    // Depends only on |k - l|; build from a profile so K is exactly symmetric.
    let prof: Vec<F> = (0..n)
        .map(|d| {
            let r = dx * F::of_usize(d);
            F::one() / (r * r + F::one()).sqrt()
        })
        .collect();
    DMatrix::from_fn(n, n, |k, l| prof[k.abs_diff(l)])
}

/// Monomial complex-absorbing-potential ramp (applied as `-i * cap`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapSpec<F: Real> {
    /// Fraction of the box edge where absorption starts, in (0, 1).
    pub onset_fraction: F,
    /// CAP value at the box edge (a.u.).
    pub strength: F,
    /// Monomial order of the ramp.
    pub order: u32,
}

impl<F: Real> CapSpec<F> {
    pub fn new(onset_fraction: F, strength: F, order: u32) -> Result<Self, GridError> {
        if !(onset_fraction > F::zero() && onset_fraction < F::one()) {
            return Err(GridError::InvalidCap(format!(
                "onset_fraction must be in (0,1), got {}",
                onset_fraction.to_f64()
            )));
        }
        if strength < F::zero() {
            return Err(GridError::InvalidCap("strength must be >= 0".into()));
        }
        if order < 2 {
            return Err(GridError::InvalidCap("order must be >= 2".into()));
        }
        Ok(CapSpec {
            onset_fraction,
            strength,
            order,
        })
    }
}

impl<F: Real> Default for CapSpec<F> {
    fn default() -> Self {
        CapSpec {
            onset_fraction: F::of(0.8),
            strength: F::of(0.5),
            order: 2,
        }
    }
}

/// CAP values on the grid (nonnegative; zero inside the onset radius).
pub fn cap_vector<F: Real>(grid: &DvrGrid<F>, spec: &CapSpec<F>) -> DVector<F> {
    let x_edge = grid.edge();
    let x_on = spec.onset_fraction * x_edge;
    let denom = x_edge - x_on;
    DVector::from_iterator(
        grid.n_points,
        grid.points.iter().map(|&x| {
            let a = fabs(x);
            if a <= x_on || denom <= F::zero() {
                F::zero()
            } else {
                spec.strength * ((a - x_on) / denom).powi(spec.order as i32)
            }
        }),
    )
}

/// FFT-backed operator kit for one grid: spectral kinetic/derivative
/// application and fast kernel convolutions for the mean fields.
pub struct GridOps<F: Real> {
    pub grid: DvrGrid<F>,
    n: usize,
    kin_mult: Vec<F>,
    d1_mult: Vec<Complex<F>>,
    fft_fwd: Arc<dyn Fft<F>>,
    fft_inv: Arc<dyn Fft<F>>,
    npad: usize,
    pad_fwd: Arc<dyn Fft<F>>,
    pad_inv: Arc<dyn Fft<F>>,
    /// Forward FFT of the circularly laid-out interaction kernel.
    kernel_spec: Vec<Complex<F>>,
}

impl<F: Real> GridOps<F> {
    pub fn new(grid: DvrGrid<F>) -> Self {
        let n = grid.n_points;
        let len = grid.length();
        let mut planner = FftPlanner::new();
        let fft_fwd = planner.plan_fft(n, FftDirection::Forward);
        let fft_inv = planner.plan_fft(n, FftDirection::Inverse);

        let kin_mult: Vec<F> = (0..n)
            .map(|idx| {
                let k = mode_momentum(idx, n, len);
                F::of(0.5) * k * k
            })
            .collect();
        let d1_mult: Vec<Complex<F>> = (0..n)
            .map(|idx| {
                if n % 2 == 0 && idx == n / 2 {
                    Complex::new(F::zero(), F::zero())
                } else {
                    Complex::new(F::zero(), mode_momentum(idx, n, len))
                }
            })
            .collect();

        let npad = (2 * n).next_power_of_two();
        let pad_fwd = planner.plan_fft(npad, FftDirection::Forward);
        let pad_inv = planner.plan_fft(npad, FftDirection::Inverse);
        let dx = grid.spacing();
        let mut kern = vec![Complex::new(F::zero(), F::zero()); npad];
        for d in 0..=n {
            let r = dx * F::of_usize(d);
            let v = F::one() / (r * r + F::one()).sqrt();
            kern[d] = Complex::new(v, F::zero());
            if d > 0 && d < n {
                kern[npad - d] = Complex::new(v, F::zero());
            }
        }
        pad_fwd.process(&mut kern);

        GridOps {
            grid,
            n,
            kin_mult,
            d1_mult,
            fft_fwd,
            fft_inv,
            npad,
            pad_fwd,
            pad_inv,
            kernel_spec: kern,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn spectral_apply(&self, src: &[Complex<F>], dst: &mut [Complex<F>], kinetic: bool) {
        debug_assert_eq!(src.len(), self.n);
        dst.copy_from_slice(src);
        self.fft_fwd.process(dst);
        let inv_n = F::one() / F::of_usize(self.n);
        if kinetic {
            for (v, &m) in dst.iter_mut().zip(&self.kin_mult) {
                *v *= Complex::new(m * inv_n, F::zero());
            }
        } else {
            for (v, &m) in dst.iter_mut().zip(&self.d1_mult) {
                *v *= m * inv_n;
            }
        }
        self.fft_inv.process(dst);
    }

    /// `dst = -1/2 d^2/dx^2 src` (spectral; equals the dense kinetic matrix).
    pub fn apply_kinetic(&self, src: &[Complex<F>], dst: &mut [Complex<F>]) {
        self.spectral_apply(src, dst, true);
    }

    /// `dst = d/dx src` (spectral first derivative).
    pub fn apply_dx(&self, src: &[Complex<F>], dst: &mut [Complex<F>]) {
        self.spectral_apply(src, dst, false);
    }

    /// Linear convolution with the soft-Coulomb kernel:
    /// `dst[a] = sum_b K(x_a - x_b) src[b]`.
    pub fn convolve_kernel(&self, src: &[Complex<F>], dst: &mut [Complex<F>]) {
        debug_assert_eq!(src.len(), self.n);
        let mut buf = vec![Complex::new(F::zero(), F::zero()); self.npad];
        buf[..self.n].copy_from_slice(src);
        self.pad_fwd.process(&mut buf);
        let inv = F::one() / F::of_usize(self.npad);
        for (v, &k) in buf.iter_mut().zip(&self.kernel_spec) {
            *v *= k * inv;
        }
        self.pad_inv.process(&mut buf);
        dst.copy_from_slice(&buf[..self.n]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Independent cyclic-Jacobi eigensolver used as the dense oracle.
    pub fn jacobi_eigenvalues(mut a: DMatrix<f64>) -> Vec<f64> {
        let n = a.nrows();
        for _sweep in 0..100 {
            let mut off = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += a[(p, q)] * a[(p, q)];
                }
            }
            if off < 1e-24 {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    if apq.abs() < 1e-300 {
                        continue;
                    }
                    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = c * akp - s * akq;
                        a[(k, q)] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[(p, k)];
                        let aqk = a[(q, k)];
                        a[(p, k)] = c * apk - s * aqk;
                        a[(q, k)] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
        ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
        ev
    }

    #[test]
    fn grid_examples() {
        let g = build_grid::<f64>(-25.0, 25.0, 256).unwrap();
        assert_abs_diff_eq!(g.spacing(), 50.0 / 256.0, epsilon = 1e-15);
        let g2 = build_grid::<f64>(-300.0, 300.0, 2048).unwrap();
        assert_abs_diff_eq!(g2.spacing(), 600.0 / 2048.0, epsilon = 1e-15);
        let g3 = build_grid::<f64>(0.0, 1.0, 2).unwrap();
        assert_eq!(g3.points, vec![0.0, 0.5]);
    }

    #[test]
    fn grid_domain_errors() {
        assert!(build_grid::<f64>(0.0, 1.0, 1).is_err());
        assert!(build_grid::<f64>(1.0, 1.0, 8).is_err());
        assert!(build_grid::<f64>(2.0, -2.0, 8).is_err());
    }

    #[test]
    fn kinetic_symmetric_and_positive() {
        for n in [2usize, 7, 16, 33] {
            let g = build_grid::<f64>(-4.0, 4.0, n).unwrap();
            let t = kinetic_matrix(&g);
            assert_eq!(t, t.transpose(), "exact symmetry at n={n}");
            let ev = jacobi_eigenvalues(t);
            assert!(ev.iter().all(|&e| e > -1e-10), "eigenvalues >= 0 at n={n}");
        }
    }

    #[test]
    fn kinetic_plus_potential_matches_dense_oracle() {
        let g = build_grid::<f64>(-25.0, 25.0, 256).unwrap();
        let mut h = kinetic_matrix(&g);
        let v = potential_vector(&g, 2.0);
        for k in 0..256 {
            h[(k, k)] += v[k];
        }
        let ev = jacobi_eigenvalues(h.clone());
        let se = nalgebra::SymmetricEigen::new(h);
        let mut ev2: Vec<f64> = se.eigenvalues.iter().copied().collect();
        ev2.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert_abs_diff_eq!(ev[0], ev2[0], epsilon = 1e-10);
    }

    #[test]
    fn potential_closed_forms() {
        let g = build_grid::<f64>(-2.0, 2.0, 4).unwrap();
        // x = 0 sits at index 2.
        assert_abs_diff_eq!(potential_vector(&g, 4.0)[2], -4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(potential_vector(&g, 6.0)[2], -6.0, epsilon = 1e-14);
        let g1 = build_grid::<f64>(-1.0, 3.0, 4).unwrap();
        // x = 1 sits at index 2.
        assert_abs_diff_eq!(
            potential_vector(&g1, 2.0)[2],
            -2.0 / 2.0f64.sqrt(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            dipole_acceleration_vector(&g1, 4.0)[2],
            -4.0 / 2.0f64.powf(1.5),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(dipole_acceleration_vector(&g, 4.0)[2], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn kernel_properties() {
        let g = build_grid::<f64>(-3.0, 3.0, 12).unwrap();
        let k = interaction_kernel(&g);
        assert_eq!(k, k.transpose());
        for i in 0..12 {
            assert_abs_diff_eq!(k[(i, i)], 1.0, epsilon = 1e-15);
        }
        // |x_k - x_l| = 1 at distance 2 grid points (dx = 0.5).
        assert_abs_diff_eq!(k[(0, 2)], 1.0 / 2.0f64.sqrt(), epsilon = 1e-14);
        // Pure function: repeated calls bit-identical.
        assert_eq!(k, interaction_kernel(&g));
        let v = potential_vector(&g, 2.0);
        assert_eq!(v, potential_vector(&g, 2.0));
    }

    #[test]
    fn cap_shape() {
        let g = build_grid::<f64>(-10.0, 10.0, 20).unwrap();
        let spec = CapSpec::new(0.8, 0.5, 2).unwrap();
        let cap = cap_vector(&g, &spec);
        // x = 0 inside onset.
        assert_eq!(cap[10], 0.0);
        // At the left box edge (x = -10) the ramp reaches the full strength.
        assert_abs_diff_eq!(cap[0], 0.5, epsilon = 1e-14);
        assert!(cap.iter().all(|&c| c >= 0.0));
        // Degenerate spec: onset -> 1 gives a CAP that vanishes everywhere
        // except a sliver at the edge.
        let weak = CapSpec::new(1.0 - 1e-12, 0.5, 2).unwrap();
        let capw = cap_vector(&g, &weak);
        assert!(capw.iter().take(19).skip(1).all(|&c| c == 0.0));
        assert!(CapSpec::new(1.2, 0.5, 2).is_err());
        assert!(CapSpec::new(0.5, -0.1, 2).is_err());
        assert!(CapSpec::new(0.5, 0.1, 1).is_err());
    }

    #[test]
    fn spectral_kinetic_matches_dense() {
        for n in [8usize, 15, 32] {
            let g = build_grid::<f64>(-5.0, 7.0, n).unwrap();
            let ops = GridOps::new(g.clone());
            let t = kinetic_matrix(&g);
            let src: Vec<num_complex::Complex<f64>> = (0..n)
                .map(|k| num_complex::Complex::new((k as f64).sin(), (k as f64 * 0.7).cos()))
                .collect();
            let mut dst = src.clone();
            ops.apply_kinetic(&src, &mut dst);
            let sv = nalgebra::DVector::from_vec(src.clone()).map(|z| z);
            let dense = t.map(|x| num_complex::Complex::new(x, 0.0)) * sv;
            for k in 0..n {
                assert_abs_diff_eq!(dst[k].re, dense[k].re, epsilon = 1e-9);
                assert_abs_diff_eq!(dst[k].im, dense[k].im, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn spectral_derivative_matches_dense_and_is_antisymmetric() {
        let n = 24;
        let g = build_grid::<f64>(-6.0, 6.0, n).unwrap();
        let d = first_derivative_matrix(&g);
        let dt = d.transpose();
        for i in 0..n {
            for j in 0..n {
                assert_abs_diff_eq!(d[(i, j)], -dt[(i, j)], epsilon = 0.0);
            }
        }
        let ops = GridOps::new(g);
        let src: Vec<num_complex::Complex<f64>> = (0..n)
            .map(|k| num_complex::Complex::new((0.3 * k as f64).cos(), 0.1 * k as f64))
            .collect();
        let mut dst = src.clone();
        ops.apply_dx(&src, &mut dst);
        let sv = nalgebra::DVector::from_vec(src);
        let dense = d.map(|x| num_complex::Complex::new(x, 0.0)) * sv;
        for k in 0..n {
            assert_abs_diff_eq!(dst[k].re, dense[k].re, epsilon = 1e-10);
            assert_abs_diff_eq!(dst[k].im, dense[k].im, epsilon = 1e-10);
        }
    }

    #[test]
    fn convolution_matches_direct_double_sum() {
        let n = 16;
        let g = build_grid::<f64>(-4.0, 4.0, n).unwrap();
        let ops = GridOps::new(g.clone());
        let k = interaction_kernel(&g);
        let src: Vec<num_complex::Complex<f64>> = (0..n)
            .map(|j| num_complex::Complex::new(0.2 * j as f64 - 1.0, (j as f64).sin()))
            .collect();
        let mut dst = src.clone();
        ops.convolve_kernel(&src, &mut dst);
        for a in 0..n {
            let mut acc = num_complex::Complex::new(0.0, 0.0);
            for b in 0..n {
                acc += k[(a, b)] * src[b];
            }
            assert_abs_diff_eq!(dst[a].re, acc.re, epsilon = 1e-12);
            assert_abs_diff_eq!(dst[a].im, acc.im, epsilon = 1e-12);
        }
    }
}
