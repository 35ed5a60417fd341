//! Scalar abstraction: all floating-point work is generic over `Real`.

use num_complex::Complex;
use num_traits::{FloatConst, FromPrimitive};

/// Real scalar type of the whole library (`f32` or `f64`).
///
/// `nalgebra::RealField` supplies the elementary functions and the dense
/// linear algebra, `rustfft::FftNum` the FFT kernels and `FloatConst` the
/// mathematical constants.  Method calls in generic code go through
/// `RealField` to avoid trait-method ambiguity.
pub trait Real: nalgebra::RealField + rustfft::FftNum + FloatConst + Copy + Default {
    /// Conversion from an `f64` literal.
    fn of(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("literal not representable")
    }

    fn of_usize(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize not representable")
    }

    fn to_f64(self) -> f64;
}

impl Real for f64 {
    fn to_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    fn to_f64(self) -> f64 {
        self as f64
    }
}

/// `re + i·im` from `f64` literals.
pub fn c<F: Real>(re: f64, im: f64) -> Complex<F> {
    Complex::new(F::of(re), F::of(im))
}

/// Purely real complex number.
pub fn cr<F: Real>(re: F) -> Complex<F> {
    Complex::new(re, F::zero())
}

/// `exp(i·theta)`.
pub fn cis<F: Real>(theta: F) -> Complex<F> {
    Complex::new(theta.cos(), theta.sin())
}

/// Complex exponential without requiring `num_traits::Float`.
pub fn cexp<F: Real>(z: Complex<F>) -> Complex<F> {
    cis(z.im) * z.re.exp()
}

/// Imaginary unit.
pub fn im<F: Real>() -> Complex<F> {
    Complex::new(F::zero(), F::one())
}

/// Absolute value, disambiguated between the `Signed` and `ComplexField`
/// supertraits.
pub fn fabs<F: Real>(x: F) -> F {
    nalgebra::ComplexField::abs(x)
}

pub fn fmax<F: Real>(a: F, b: F) -> F {
    if a > b {
        a
    } else {
        b
    }
}

pub fn fmin<F: Real>(a: F, b: F) -> F {
    if a < b {
        a
    } else {
        b
    }
}
