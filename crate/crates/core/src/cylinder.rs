//! Analytic eigenmodes of an infinite free elastic cylinder in plane strain:
//! the radial family (angular order 0) and the mixed torsional-radial family
//! (angular order 2), with equipartition thermal amplitudes.
//!
//! Pure-torsional n=0 and flexural n=1 families are omitted: they have zero
//! overlap with a centered optical mode (no dilatation on axis, no angular
//! average), so they contribute no phase or polarization noise here.

use crate::bessel::{bessel_jn, bessel_jn_prime};
use crate::constants::BOLTZMANN;
use crate::error::{CoreError, Result};
use crate::material::Material;
use crate::quad::adaptive_simpson;
use std::f64::consts::PI;

/// Mode family label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeFamily {
    /// Radial modes, angular order 0.
    R,
    /// Mixed torsional-radial modes, angular order 2.
    Tr,
}

impl std::fmt::Display for ModeFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModeFamily::R => write!(f, "R"),
            ModeFamily::Tr => write!(f, "TR"),
        }
    }
}

/// One analytic cylinder eigenmode.
#[derive(Debug, Clone)]
pub struct CylinderMode {
    pub family: ModeFamily,
    /// Angular order (0 for R, 2 for TR).
    pub n: u32,
    /// Radial index within the family, consecutive from 0.
    pub m: u32,
    /// Eigenfrequency (Hz), equal to y·v_d/(2π a).
    pub frequency: f64,
    /// Dimensionless root y = ω a / v_d.
    pub y_root: f64,
    /// Cylinder radius (m).
    pub radius: f64,
    pub material: Material,
    /// Potential amplitudes (dilatational, shear); (1, 0) for R modes.
    pub amp: (f64, f64),
    /// Mean-square modal amplitude at temperature T; None until normalized.
    pub thermal_amplitude_sq: Option<f64>,
}

/// Radial profile factors of a mode at radius r. The physical fields are
/// `u_r = u_r·cos nθ`, `u_θ = u_t·sin nθ`, `ε_rr = e_rr·cos nθ`,
/// `ε_θθ = e_tt·cos nθ`, `ε_rθ = e_rt·sin nθ`.
#[derive(Debug, Clone, Copy)]
pub struct RadialProfile {
    pub u_r: f64,
    pub u_t: f64,
    pub e_rr: f64,
    pub e_tt: f64,
    pub e_rt: f64,
}

// nonsingular Bessel ratio helpers via recurrences
fn j1_over_x(x: f64) -> f64 {
    0.5 * (bessel_jn(0, x) + bessel_jn(2, x))
}
fn j2_over_x(x: f64) -> f64 {
    0.25 * (bessel_jn(1, x) + bessel_jn(3, x))
}
fn j2_over_x2(x: f64) -> f64 {
    // J2/x² = (J1/x + J3/x)/4, J3/x = (J2 + J4)/6
    (0.5 * (bessel_jn(0, x) + bessel_jn(2, x))
        + (bessel_jn(2, x) + bessel_jn(4, x)) / 6.0)
        / 4.0
}
fn j2_prime_over_x(x: f64) -> f64 {
    (3.0 * bessel_jn(0, x) + 2.0 * bessel_jn(2, x) - bessel_jn(4, x)) / 12.0
}
fn j2_pp(x: f64) -> f64 {
    0.25 * (bessel_jn(0, x) - 2.0 * bessel_jn(2, x) + bessel_jn(4, x))
}

impl CylinderMode {
    /// Dilatational and shear wavenumbers (1/m).
    pub fn wavenumbers(&self) -> (f64, f64) {
        let h = self.y_root / self.radius;
        let kappa = h / self.material.velocity_ratio();
        (h, kappa)
    }

    /// Profile factors at radius r (0 <= r <= radius).
    pub fn profile(&self, r: f64) -> RadialProfile {
        let (h, kappa) = self.wavenumbers();
        match self.family {
            ModeFamily::R => {
                let x = h * r;
                let j0 = bessel_jn(0, x);
                let j2 = bessel_jn(2, x);
                RadialProfile {
                    u_r: bessel_jn(1, x),
                    u_t: 0.0,
                    e_rr: h * 0.5 * (j0 - j2),
                    e_tt: h * 0.5 * (j0 + j2),
                    e_rt: 0.0,
                }
            }
            ModeFamily::Tr => {
                let (a, b) = self.amp;
                let x = h * r;
                let w = kappa * r;
                let u_r = a * h * bessel_jn_prime(2, x) + 2.0 * b * kappa * j2_over_x(w);
                let u_t = -2.0 * a * h * j2_over_x(x) - b * kappa * bessel_jn_prime(2, w);
                let up = a * h * h * j2_pp(x)
                    + 2.0 * b * kappa * kappa * (j2_prime_over_x(w) - j2_over_x2(w));
                let vp = -2.0 * a * h * h * (j2_prime_over_x(x) - j2_over_x2(x))
                    - b * kappa * kappa * j2_pp(w);
                let u_over_r = a * h * h * j2_prime_over_x(x) + 2.0 * b * kappa * kappa * j2_over_x2(w);
                let v_over_r =
                    -2.0 * a * h * h * j2_over_x2(x) - b * kappa * kappa * j2_prime_over_x(w);
                RadialProfile {
                    u_r,
                    u_t,
                    e_rr: up,
                    e_tt: u_over_r + 2.0 * v_over_r,
                    e_rt: 0.5 * (vp - v_over_r - 2.0 * u_over_r),
                }
            }
        }
    }

    /// Displacement (u_r, u_θ) at polar point (r, θ), per unit modal amplitude.
    pub fn displacement(&self, r: f64, theta: f64) -> (f64, f64) {
        let p = self.profile(r);
        let n = self.n as f64;
        (p.u_r * (n * theta).cos(), p.u_t * (n * theta).sin())
    }

    /// Divergence profile factor: ∇·u = div(r)·cos nθ.
    pub fn divergence(&self, r: f64) -> f64 {
        let p = self.profile(r);
        p.e_rr + p.e_tt
    }

    /// ∫ ρ |u|² dA over the cross section (kg/m per unit amplitude²).
    pub fn norm_integral(&self) -> f64 {
        let rho = self.material.density;
        let a = self.radius;
        let angular = match self.family {
            ModeFamily::R => 2.0 * PI,
            ModeFamily::Tr => PI,
        };
        rho * angular
            * adaptive_simpson(
                &|r| {
                    let p = self.profile(r);
                    (p.u_r * p.u_r + p.u_t * p.u_t) * r
                },
                0.0,
                a,
                1e-8,
            )
    }

    /// Residual of the dispersion relation at the stored root, relative to
    /// the largest term entering it.
    pub fn dispersion_residual(&self) -> f64 {
        let alpha = self.material.velocity_ratio();
        match self.family {
            ModeFamily::R => {
                let t1 = (1.0 - alpha * alpha) * bessel_jn(0, self.y_root);
                let t2 = alpha * alpha * bessel_jn(2, self.y_root);
                (t1 - t2).abs() / t1.abs().max(t2.abs()).max(1e-300)
            }
            ModeFamily::Tr => {
                let m = tr_boundary_matrix(alpha, self.y_root);
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                let scale = m
                    .iter()
                    .flatten()
                    .fold(0.0f64, |acc, &e| acc.max(e.abs()))
                    .max(1e-300);
                det.abs() / (scale * scale)
            }
        }
    }
}

/// Radial free-surface condition: (1 - α²)·J0(y) - α²·J2(y).
pub fn radial_dispersion_fn(alpha: f64, y: f64) -> f64 {
    (1.0 - alpha * alpha) * bessel_jn(0, y) - alpha * alpha * bessel_jn(2, y)
}

/// Boundary matrix of the n=2 free cylinder in (A, B), scaled by a²/μ.
///
/// Rows are the σ_rr and σ_rθ conditions at r = a; columns the dilatational
/// potential φ = A·J2(h r)·cos 2θ and shear potential ψ = B·J2(κ r)·sin 2θ
/// with u = ∇φ + curl(ψ ẑ), y = h a, z = κ a = y/α.
pub fn tr_boundary_matrix(alpha: f64, y: f64) -> [[f64; 2]; 2] {
    let n = 2.0;
    let z = y / alpha;
    let jy = bessel_jn(2, y);
    let jz = bessel_jn(2, z);
    let jpy = bessel_jn_prime(2, y);
    let jpz = bessel_jn_prime(2, z);
    let m11 = (2.0 * n * n - z * z) * jy - 2.0 * y * jpy;
    let m12 = 2.0 * n * (z * jpz - jz);
    let m21 = 2.0 * n * (jy - y * jpy);
    let m22 = -((2.0 * n * n - z * z) * jz - 2.0 * z * jpz);
    [[m11, m12], [m21, m22]]
}

fn tr_det(alpha: f64, y: f64) -> f64 {
    let m = tr_boundary_matrix(alpha, y);
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Sign-change bracketing on a uniform grid, then bisection to |Δy| < 1e-12.
pub fn bracket_roots(f: &dyn Fn(f64) -> f64, y_max: f64, step: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    let n = (y_max / step).ceil() as usize;
    let mut y_prev = step * 0.5;
    let mut f_prev = f(y_prev);
    for i in 1..=n {
        let y = step * 0.5 + i as f64 * step;
        if y > y_max + step * 0.5 {
            break;
        }
        let fy = f(y);
        if f_prev == 0.0 {
            roots.push(y_prev);
        } else if f_prev * fy < 0.0 {
            let (mut lo, mut hi) = (y_prev, y);
            let mut flo = f_prev;
            while hi - lo > 1e-12 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                } else if flo * fm < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        y_prev = y;
        f_prev = fy;
    }
    roots.retain(|&y| y <= y_max);
    roots
}

fn check_inputs(material: &Material, radius: f64, f_max: f64) -> Result<f64> {
    material.validate()?;
    if !(radius > 0.0) {
        return Err(CoreError::validation("radius must be > 0"));
    }
    if !(f_max > 0.0) {
        return Err(CoreError::validation("f_max must be > 0"));
    }
    let y_max = 2.0 * PI * radius * f_max / material.v_longitudinal;
    if y_max / PI > 1e6 {
        return Err(CoreError::numerical(format!(
            "f_max = {f_max:e} Hz requests more than 1e6 roots"
        )));
    }
    Ok(y_max)
}

/// All radial (R) modes with frequency in (0, f_max].
pub fn radial_dispersion_roots(
    material: &Material,
    radius: f64,
    f_max: f64,
) -> Result<Vec<CylinderMode>> {
    let y_max = check_inputs(material, radius, f_max)?;
    let alpha = material.velocity_ratio();
    let roots = bracket_roots(&|y| radial_dispersion_fn(alpha, y), y_max, 0.01);
    Ok(roots
        .into_iter()
        .enumerate()
        .map(|(m, y)| CylinderMode {
            family: ModeFamily::R,
            n: 0,
            m: m as u32,
            frequency: y * material.v_longitudinal / (2.0 * PI * radius),
            y_root: y,
            radius,
            material: *material,
            amp: (1.0, 0.0),
            thermal_amplitude_sq: None,
        })
        .collect())
}

/// All mixed torsional-radial (TR, n=2) modes with frequency in (0, f_max].
pub fn tr_dispersion_roots(
    material: &Material,
    radius: f64,
    f_max: f64,
) -> Result<Vec<CylinderMode>> {
    let y_max = check_inputs(material, radius, f_max)?;
    let alpha = material.velocity_ratio();
    let roots = bracket_roots(&|y| tr_det(alpha, y), y_max, 0.01);
    Ok(roots
        .into_iter()
        .enumerate()
        .map(|(m, y)| {
            // null vector of the boundary matrix, from its better row
            let mm = tr_boundary_matrix(alpha, y);
            let r0 = mm[0][0] * mm[0][0] + mm[0][1] * mm[0][1];
            let r1 = mm[1][0] * mm[1][0] + mm[1][1] * mm[1][1];
            let (a, b) = if r0 >= r1 {
                (mm[0][1], -mm[0][0])
            } else {
                (mm[1][1], -mm[1][0])
            };
            let s = (a * a + b * b).sqrt();
            // scale by a/y = 1/h so displacement profiles are O(1)
            let scale = radius / (y * s);
            CylinderMode {
                family: ModeFamily::Tr,
                n: 2,
                m: m as u32,
                frequency: y * material.v_longitudinal / (2.0 * PI * radius),
                y_root: y,
                radius,
                material: *material,
                amp: (a * scale, b * scale),
                thermal_amplitude_sq: None,
            }
        })
        .collect())
}

/// Set the equipartition mean-square amplitude: ⟨c²⟩ ω² ∫ρ|u|²dA · L = k_B T.
pub fn normalize_thermal(
    mode: &CylinderMode,
    temperature: f64,
    fiber_length: f64,
) -> Result<CylinderMode> {
    if !(temperature > 0.0) {
        return Err(CoreError::validation("temperature must be > 0"));
    }
    if !(fiber_length > 0.0) {
        return Err(CoreError::validation("fiber_length must be > 0"));
    }
    if mode.frequency <= 0.0 {
        return Err(CoreError::validation(
            "zero-frequency mode carries no restoring force",
        ));
    }
    let omega = 2.0 * PI * mode.frequency;
    let norm = mode.norm_integral();
    let mut out = mode.clone();
    out.thermal_amplitude_sq = Some(BOLTZMANN * temperature / (omega * omega * fiber_length * norm));
    Ok(out)
}
