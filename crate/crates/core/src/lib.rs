//! Self-consistent-field wave-function dynamics for 1D model atoms.
//!
//! The crate implements the TD-RASSCF family of many-electron methods (TDHF,
//! MCTDHF, TD-CASSCF and the restricted-active-space S/D/SD/SDT truncations)
//! together with the reference methods they are usually compared against
//! (HF, TDCIS, a frozen-orbital SAE model and an exact two-electron grid
//! solver).  Everything operates on a uniform Fourier-DVR grid.
//!
//! All numerics are generic over the scalar type through [`scalar::Real`];
//! the concrete aliases used by the CLI and the test suites are defined at
//! the crate root ([`R`], [`C64`]).

pub mod analysis;
pub mod config;
pub mod cost;
pub mod densities;
pub mod eom;
pub mod fock;
pub mod grid;
pub mod hamiltonian;
pub mod integrator;
pub mod propagator;
pub mod pulse;
pub mod reference;
pub mod runner;
pub mod scalar;

pub use scalar::Real;

/// Default real scalar used by the CLI and acceptance suites.
pub type R = f64;
/// Default complex scalar.
pub type C64 = num_complex::Complex<f64>;
