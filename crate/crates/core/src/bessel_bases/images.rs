use super::Bandwidth;
use crate::specfun::{jacobi_p, legendre_p, Order};
use num_complex::Complex64;

/// Fourier image of `j_{n,c}` split into a real profile and a unimodular phase.
///
/// With `F f(xi) = (2 pi)^{-1/2} int f(x) e^{-i x xi} dx` the transform is
/// `phase * profile`, where `profile = (-1)^n sqrt((2n+1)/(2c)) P_n(xi/c)` on
/// `[-c, c]` and `phase = i^n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierImage {
    pub profile: f64,
    pub phase: Complex64,
}

impl FourierImage {
    pub fn value(&self) -> Complex64 {
        self.phase * self.profile
    }
}

pub fn fourier_image_j(n: usize, c: Bandwidth, xi: f64) -> FourierImage {
    let c = c.value();
    let phase = match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let profile = if xi.abs() > c {
        0.0
    } else {
        let s = if n % 2 == 0 { 1.0 } else { -1.0 };
        s * ((2 * n + 1) as f64 / (2.0 * c)).sqrt() * legendre_p(n, xi / c)
    };
    FourierImage { profile, phase }
}

/// `H^alpha tilde j_{n,alpha,c}(x)`:
/// `sqrt(2(2n+alpha+1)/c) (x/c)^{alpha+1/2} P_n^{(alpha,0)}(1 - 2 (x/c)^2)` on `(0, c]`.
pub fn hankel_image_j(n: usize, alpha: Order, c: Bandwidth, x: f64) -> f64 {
    let (a, c) = (alpha.value(), c.value());
    if x <= 0.0 || x > c {
        return 0.0;
    }
    let s = x / c;
    (2.0 * (2.0 * n as f64 + a + 1.0) / c).sqrt() * s.powf(a + 0.5) * jacobi_p(n, a, 1.0 - 2.0 * s * s)
}
