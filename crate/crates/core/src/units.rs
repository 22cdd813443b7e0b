//! Physical constants and the handful of unit conversions used throughout.
//!
//! All quantities are SI. Fields use the engineering time convention
//! `exp(+iωt)`, so lossy media have negative imaginary permittivity and
//! outgoing cylindrical waves follow the Hankel function of the second kind.

use num_complex::Complex;

/// Vacuum permittivity, F/m.
pub const EPS0: f64 = 8.854_187_812_8e-12;
/// Vacuum permeability, H/m.
pub const MU0: f64 = 1.256_637_062_12e-6;
/// Speed of light in vacuum, m/s.
pub const C0: f64 = 299_792_458.0;

/// Complex field sample type used everywhere in this crate.
pub type C64 = Complex<f64>;

/// Free-space wavenumber k₀ = ω/c at the given frequency.
pub fn wavenumber(freq_hz: f64) -> f64 {
    2.0 * std::f64::consts::PI * freq_hz / C0
}

/// Free-space wavelength λ₀ at the given frequency.
pub fn wavelength(freq_hz: f64) -> f64 {
    C0 / freq_hz
}

/// Complex relative permittivity ε_r − iσ/(ωε₀) for the `exp(+iωt)` convention.
pub fn complex_rel_permittivity(eps_rel: f64, sigma: f64, freq_hz: f64) -> C64 {
    let omega = 2.0 * std::f64::consts::PI * freq_hz;
    Complex::new(eps_rel, -sigma / (omega * EPS0))
}

/// Contrast of an object against a background, χ = Δε_r − iΔσ/(ωε₀).
pub fn contrast(eps_rel: f64, sigma: f64, eps_rel_bg: f64, sigma_bg: f64, freq_hz: f64) -> C64 {
    complex_rel_permittivity(eps_rel, sigma, freq_hz)
        - complex_rel_permittivity(eps_rel_bg, sigma_bg, freq_hz)
}

/// Conductivity in S/m recovered from the imaginary part of a contrast value.
pub fn conductivity_from_contrast(chi_im: f64, freq_hz: f64) -> f64 {
    let omega = 2.0 * std::f64::consts::PI * freq_hz;
    -omega * EPS0 * chi_im
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn austria_contrast_values() {
        // eps_r = 2.0, sigma = 10 mS/m at 300 MHz gives roughly 1.0 - 0.6i.
        let chi = contrast(2.0, 0.010, 1.0, 0.0, 3.0e8);
        assert!((chi.re - 1.0).abs() < 1e-12);
        assert!((chi.im + 0.5995).abs() < 1e-3);

        let chi = contrast(3.5, 0.010, 1.0, 0.0, 3.0e8);
        assert!((chi.re - 2.5).abs() < 1e-12);
        assert!((chi.im + 0.6).abs() < 2e-3);
    }

    #[test]
    fn conductivity_roundtrip() {
        let chi = contrast(2.0, 0.010, 1.0, 0.0, 3.0e8);
        let sigma = conductivity_from_contrast(chi.im, 3.0e8);
        assert!((sigma - 0.010).abs() < 1e-15);
    }
}
