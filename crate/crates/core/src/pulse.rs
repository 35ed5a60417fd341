//! Laser pulse (sin^2-envelope vector potential) and gauge selection.

use crate::scalar::Real;

/// `A(t) = (F0/omega) sin^2(pi t / T) sin(omega t)` on `[0, T]`, zero outside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaserPulse<F: Real> {
    /// Peak electric-field strength (a.u.).
    pub f0: F,
    /// Carrier angular frequency (a.u.).
    pub omega: F,
    /// Number of optical cycles; the duration is `cycles * 2 pi / omega`.
    pub cycles: F,
}

impl<F: Real> LaserPulse<F> {
    pub fn new(f0: F, omega: F, cycles: F) -> Self {
        assert!(f0 >= F::zero() && omega > F::zero() && cycles > F::zero());
        LaserPulse { f0, omega, cycles }
    }

    /// Total pulse duration `T` (a.u.).
    pub fn duration(&self) -> F {
        self.cycles * F::two_pi() / self.omega
    }

    /// Ponderomotive energy `U_p = F0^2 / (4 omega^2)`.
    pub fn ponderomotive_energy(&self) -> F {
        self.f0 * self.f0 / (F::of(4.0) * self.omega * self.omega)
    }

    /// Classical harmonic cutoff `3.17 U_p + I_p` in units of `omega`.
    pub fn cutoff_harmonic(&self, ip: F) -> F {
        (F::of(3.17) * self.ponderomotive_energy() + ip) / self.omega
    }

    /// Vector potential `A(t)`.
    pub fn vector_potential(&self, t: F) -> F {
        let big_t = self.duration();
        if t < F::zero() || t > big_t {
            return F::zero();
        }
        let env = (F::pi() * t / big_t).sin();
        self.f0 / self.omega * env * env * (self.omega * t).sin()
    }

    /// Electric field `F(t) = -dA/dt` (closed-form derivative).
    pub fn electric_field(&self, t: F) -> F {
        let big_t = self.duration();
        if t < F::zero() || t > big_t {
            return F::zero();
        }
        let a = F::pi() / big_t;
        let s_env = (a * t).sin();
        let c_env = (a * t).cos();
        let s_c = (self.omega * t).sin();
        let c_c = (self.omega * t).cos();
        -self.f0 / self.omega
            * (F::of(2.0) * a * s_env * c_env * s_c + self.omega * s_env * s_env * c_c)
    }
}

/// Gauge of the laser-electron coupling within the dipole approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GaugeTag {
    /// `+ x F(t)` in the one-body Hamiltonian.
    #[default]
    Length,
    /// `- i A(t) d/dx` in the one-body Hamiltonian.
    Velocity,
}
