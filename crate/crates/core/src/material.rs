//! Elastic and photoelastic material parameters.

use crate::error::{CoreError, Result};

/// Isotropic elastic material with photoelastic (strain-optic) coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    /// Mass density (kg/m³).
    pub density: f64,
    /// Longitudinal (dilatational) sound speed (m/s).
    pub v_longitudinal: f64,
    /// Shear sound speed (m/s).
    pub v_shear: f64,
    /// Refractive index at the working wavelength.
    pub refractive_index: f64,
    /// Pockels strain-optic coefficients.
    pub p11: f64,
    pub p12: f64,
    pub p44: f64,
    /// When set, p44 must equal (p11 - p12)/2 to 1e-12.
    pub isotropic: bool,
}

impl Material {
    /// Fused silica at room temperature (literature values).
    pub fn silica() -> Self {
        let p11 = 0.121;
        let p12 = 0.270;
        Material {
            density: 2203.0,
            v_longitudinal: 5996.0,
            v_shear: 3740.0,
            refractive_index: 1.45,
            p11,
            p12,
            p44: (p11 - p12) / 2.0,
            isotropic: true,
        }
    }

    /// Lamé constants (λ, μ) in Pa.
    pub fn lame(&self) -> (f64, f64) {
        let mu = self.density * self.v_shear * self.v_shear;
        let lambda = self.density
            * (self.v_longitudinal * self.v_longitudinal - 2.0 * self.v_shear * self.v_shear);
        (lambda, mu)
    }

    /// Ratio of shear to longitudinal speed.
    pub fn velocity_ratio(&self) -> f64 {
        self.v_shear / self.v_longitudinal
    }

    /// Check invariants; returns non-fatal warnings (e.g. negative λ).
    pub fn validate(&self) -> Result<Vec<String>> {
        if !(self.density > 0.0) {
            return Err(CoreError::validation(format!(
                "material.density must be > 0 (got {})",
                self.density
            )));
        }
        if !(self.v_shear > 0.0) {
            return Err(CoreError::validation(format!(
                "material.v_shear must be > 0 (got {})",
                self.v_shear
            )));
        }
        if !(self.v_shear < self.v_longitudinal) {
            return Err(CoreError::validation(format!(
                "material.v_shear ({}) must be < v_longitudinal ({})",
                self.v_shear, self.v_longitudinal
            )));
        }
        if !(self.refractive_index > 0.0) {
            return Err(CoreError::validation(
                "material.refractive_index must be > 0",
            ));
        }
        if self.isotropic {
            let dev = (self.p44 - (self.p11 - self.p12) / 2.0).abs();
            if dev > 1e-12 {
                return Err(CoreError::validation(format!(
                    "material.p44 violates isotropy: |p44 - (p11-p12)/2| = {dev:.3e} > 1e-12"
                )));
            }
        }
        let mut warnings = Vec::new();
        let (lambda, _) = self.lame();
        if lambda < 0.0 {
            warnings.push(format!(
                "material: λ = ρ(v_d² - 2v_s²) = {lambda:.3e} Pa is negative"
            ));
        }
        Ok(warnings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn silica_is_valid_and_isotropic() {
        let m = Material::silica();
        assert!(m.validate().unwrap().is_empty());
        let (lambda, mu) = m.lame();
        assert!(lambda > 0.0 && mu > 0.0);
        // λ = 2203·(5996² - 2·3740²)
        let expect = 2203.0 * (5996.0f64 * 5996.0 - 2.0 * 3740.0 * 3740.0);
        assert!((lambda - expect).abs() <= 1e-6 * expect.abs());
    }

    #[test]
    fn rejects_inverted_velocities() {
        let mut m = Material::silica();
        m.v_shear = 6000.0;
        assert!(m.validate().is_err());
    }

    #[test]
    fn rejects_anisotropic_p44_when_flagged() {
        let mut m = Material::silica();
        m.p44 = 0.1;
        assert!(m.validate().is_err());
        m.isotropic = false;
        assert!(m.validate().is_ok());
    }

    #[test]
    fn warns_when_lambda_negative() {
        let mut m = Material::silica();
        m.v_shear = 5000.0;
        m.p44 = (m.p11 - m.p12) / 2.0;
        let warnings = m.validate().unwrap();
        assert_eq!(warnings.len(), 1);
    }
}
