//! Parametric fiber cross sections: solid cladding and hexagonal-lattice
//! microstructured (PCF) geometries, plus point-membership queries.

use crate::error::{CoreError, Result};
use crate::material::Material;

/// Boundary classification tolerance (m): points this close to a boundary
/// count as glass.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Circular air hole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hole {
    pub center: (f64, f64),
    pub radius: f64,
}

/// Axis-aligned-then-rotated ellipse (semi-axes, rotation about the center).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse {
    pub semi_axis_x: f64,
    pub semi_axis_y: f64,
    pub rotation: f64,
}

impl Ellipse {
    /// True if the point lies strictly inside.
    pub fn contains(&self, p: (f64, f64)) -> bool {
        let (x, y) = self.to_local(p);
        (x / self.semi_axis_x).powi(2) + (y / self.semi_axis_y).powi(2) < 1.0
    }

    fn to_local(&self, p: (f64, f64)) -> (f64, f64) {
        let (s, c) = self.rotation.sin_cos();
        (c * p.0 + s * p.1, -s * p.0 + c * p.1)
    }

    /// Euclidean distance from a point to the solid ellipse (0 if inside).
    ///
    /// Bisection on the Lagrange parameter of the closest-point problem
    /// (Eberly's formulation), robust for all aspect ratios.
    pub fn distance(&self, p: (f64, f64)) -> f64 {
        let (x, y) = self.to_local(p);
        let (x, y) = (x.abs(), y.abs());
        let (a, b) = (self.semi_axis_x, self.semi_axis_y);
        if (x / a).powi(2) + (y / b).powi(2) <= 1.0 {
            return 0.0;
        }
        // closest boundary point solves x·a/(t+a²) etc.; t ∈ (-b², ∞)
        let mut lo = -b * b + b * y.max(1e-300);
        let mut hi = -b * b + (a * x).hypot(b * y);
        let f = |t: f64| {
            let u = a * x / (t + a * a);
            let v = b * y / (t + b * b);
            u * u + v * v - 1.0
        };
        // hi must bracket: f(hi) <= 0
        while f(hi) > 0.0 {
            hi = 2.0 * hi + b * b;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-16 * (1.0 + hi.abs()) {
                break;
            }
        }
        let t = 0.5 * (lo + hi);
        let cx = a * a * x / (t + a * a);
        let cy = b * b * y / (t + b * b);
        (x - cx).hypot(y - cy)
    }
}

/// Hexagonal hole-lattice parameters used to generate the hole list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    pub pitch: f64,
    pub hole_diameter: f64,
    pub rings: usize,
    pub holey_region_radius: f64,
}

/// Region tag for a point of the cross section.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Glass,
    Hole(usize),
    Outside,
}

/// 2D fiber cross section: an outer glass disk with optional air holes and
/// an optional (index-only) elliptical core.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberCrossSection {
    pub outer_radius: f64,
    pub holes: Vec<Hole>,
    pub core: Option<Ellipse>,
    pub material: Material,
    pub lattice_spec: Option<LatticeSpec>,
}

/// Gaussian optical mode: 1/e field-amplitude radii along two axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticalMode {
    pub center: (f64, f64),
    pub waist_x: f64,
    pub waist_y: f64,
    pub orientation: f64,
    pub wavelength: f64,
    pub power: f64,
}

impl OpticalMode {
    /// Normalized intensity at a point, ∫I dA = 1 over the plane.
    pub fn intensity(&self, p: (f64, f64)) -> f64 {
        let dx = p.0 - self.center.0;
        let dy = p.1 - self.center.1;
        let (s, c) = self.orientation.sin_cos();
        let u = c * dx + s * dy;
        let v = -s * dx + c * dy;
        let wx2 = self.waist_x * self.waist_x;
        let wy2 = self.waist_y * self.waist_y;
        2.0 / (std::f64::consts::PI * self.waist_x * self.waist_y)
            * (-2.0 * (u * u / wx2 + v * v / wy2)).exp()
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.waist_x > 0.0) || !(self.waist_y > 0.0) {
            return Err(CoreError::validation(format!(
                "optical_mode waists must be > 0 (got {}, {})",
                self.waist_x, self.waist_y
            )));
        }
        if !(self.wavelength > 0.0) {
            return Err(CoreError::validation("optical_mode.wavelength must be > 0"));
        }
        Ok(())
    }
}

impl FiberCrossSection {
    /// Classify a point; boundary points (within `BOUNDARY_TOL`) are glass.
    pub fn region_of(&self, p: (f64, f64)) -> Region {
        let r = p.0.hypot(p.1);
        if r > self.outer_radius + BOUNDARY_TOL {
            return Region::Outside;
        }
        for (i, h) in self.holes.iter().enumerate() {
            let d = (p.0 - h.center.0).hypot(p.1 - h.center.1);
            if d < h.radius - BOUNDARY_TOL {
                return Region::Hole(i);
            }
        }
        Region::Glass
    }

    /// Glass area of the idealized geometry (outer disk minus holes).
    pub fn glass_area(&self) -> f64 {
        let mut a = std::f64::consts::PI * self.outer_radius * self.outer_radius;
        for h in &self.holes {
            a -= std::f64::consts::PI * h.radius * h.radius;
        }
        a
    }

    /// Structural invariants: containment, pairwise separation, core clearance.
    pub fn validate(&self) -> Result<()> {
        if !(self.outer_radius > 0.0) {
            return Err(CoreError::validation("fiber.outer_radius must be > 0"));
        }
        for (i, h) in self.holes.iter().enumerate() {
            if !(h.radius > 0.0) {
                return Err(CoreError::validation(format!("hole {i} has radius <= 0")));
            }
            let r = h.center.0.hypot(h.center.1);
            if r + h.radius >= self.outer_radius {
                return Err(CoreError::validation(format!(
                    "hole {i} is not strictly inside the outer circle"
                )));
            }
        }
        for i in 0..self.holes.len() {
            for j in (i + 1)..self.holes.len() {
                let (a, b) = (&self.holes[i], &self.holes[j]);
                let d = (a.center.0 - b.center.0).hypot(a.center.1 - b.center.1);
                if d <= a.radius + b.radius {
                    return Err(CoreError::validation(format!(
                        "holes {i} and {j} overlap (separation {d:.3e})"
                    )));
                }
            }
        }
        if let Some(core) = &self.core {
            for (i, h) in self.holes.iter().enumerate() {
                if core.distance(h.center) < h.radius {
                    return Err(CoreError::validation(format!(
                        "hole {i} intersects the core ellipse"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Solid fiber with a circular Gaussian mode of waist `mfd / 2`.
pub fn build_standard_fiber(
    cladding_diameter: f64,
    mfd: f64,
    material: Material,
) -> Result<(FiberCrossSection, OpticalMode)> {
    if !(cladding_diameter > 0.0) {
        return Err(CoreError::validation(format!(
            "cladding_diameter must be > 0 (got {cladding_diameter})"
        )));
    }
    if !(mfd > 0.0) {
        return Err(CoreError::validation(format!("mfd must be > 0 (got {mfd})")));
    }
    if mfd >= cladding_diameter {
        return Err(CoreError::validation(format!(
            "mfd ({mfd}) must be smaller than cladding_diameter ({cladding_diameter})"
        )));
    }
    material.validate()?;
    let cs = FiberCrossSection {
        outer_radius: cladding_diameter / 2.0,
        holes: Vec::new(),
        core: None,
        material,
        lattice_spec: None,
    };
    let om = OpticalMode {
        center: (0.0, 0.0),
        waist_x: mfd / 2.0,
        waist_y: mfd / 2.0,
        orientation: 0.0,
        wavelength: 1.064e-6,
        power: 0.9e-3,
    };
    Ok((cs, om))
}

/// Hexagonal lattice sites with |site| <= rmax, deterministic ring-walk order.
///
/// Axial basis a1 = Λ(1, 0), a2 = Λ(1/2, √3/2); the central site is skipped.
pub fn hex_lattice_sites(pitch: f64, rmax: f64) -> Vec<(f64, f64)> {
    const DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    let pos = |i: i64, j: i64| {
        (
            pitch * (i as f64 + 0.5 * j as f64),
            pitch * (3.0f64.sqrt() / 2.0 * j as f64),
        )
    };
    let mut out = Vec::new();
    let kmax = (rmax / pitch).ceil() as i64 + 1;
    for k in 1..=kmax {
        for (step, dir) in DIRS.iter().enumerate() {
            // ring corner in direction `step`, then walk k sites along the edge
            let corner = (k * DIRS[step].0, k * DIRS[step].1);
            let edge = DIRS[(step + 2) % 6];
            let _ = dir;
            for t in 0..k {
                let (i, j) = (corner.0 + t * edge.0, corner.1 + t * edge.1);
                let p = pos(i, j);
                if p.0.hypot(p.1) <= rmax * (1.0 + 1e-12) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Microstructured fiber: hexagonal hole lattice around an elliptical core.
///
/// `core_axes` are the full core axes (d1, d2); the optical waists default to
/// the core semi-axes scaled by `waist_factor`. Lattice sites whose hole would
/// overlap the core ellipse are omitted (as is the central site).
#[allow(clippy::too_many_arguments)]
pub fn build_pcf(
    cladding_diameter: f64,
    pitch: f64,
    hole_diameter: f64,
    holey_region_diameter: f64,
    core_axes: (f64, f64),
    core_orientation: f64,
    waist_factor: f64,
    material: Material,
) -> Result<(FiberCrossSection, OpticalMode)> {
    for (name, v) in [
        ("cladding_diameter", cladding_diameter),
        ("pitch", pitch),
        ("hole_diameter", hole_diameter),
        ("holey_region_diameter", holey_region_diameter),
        ("core_axes.x", core_axes.0),
        ("core_axes.y", core_axes.1),
        ("waist_factor", waist_factor),
    ] {
        if !(v > 0.0) {
            return Err(CoreError::validation(format!("{name} must be > 0 (got {v})")));
        }
    }
    if hole_diameter >= pitch {
        return Err(CoreError::validation(format!(
            "hole_diameter ({hole_diameter}) must be < pitch ({pitch}): holes touch"
        )));
    }
    if holey_region_diameter >= cladding_diameter {
        return Err(CoreError::validation(
            "holey_region_diameter must be < cladding_diameter",
        ));
    }
    let core = Ellipse {
        semi_axis_x: core_axes.0 / 2.0,
        semi_axis_y: core_axes.1 / 2.0,
        rotation: core_orientation,
    };
    let semi_max = core.semi_axis_x.max(core.semi_axis_y);
    if semi_max >= pitch {
        return Err(CoreError::validation(format!(
            "core semi-axis ({semi_max}) must fit inside the innermost lattice ring (pitch {pitch})"
        )));
    }
    material.validate()?;

    let hole_r = hole_diameter / 2.0;
    let holey_r = holey_region_diameter / 2.0;
    let mut holes = Vec::new();
    for site in hex_lattice_sites(pitch, holey_r) {
        if core.distance(site) < hole_r {
            continue; // site's hole would cut into the core
        }
        holes.push(Hole {
            center: site,
            radius: hole_r,
        });
    }
    let rings = (holey_r / pitch).floor() as usize;
    let cs = FiberCrossSection {
        outer_radius: cladding_diameter / 2.0,
        holes,
        core: Some(core),
        material,
        lattice_spec: Some(LatticeSpec {
            pitch,
            hole_diameter,
            rings,
            holey_region_radius: holey_r,
        }),
    };
    cs.validate()?;
    let om = OpticalMode {
        center: (0.0, 0.0),
        waist_x: waist_factor * core.semi_axis_x,
        waist_y: waist_factor * core.semi_axis_y,
        orientation: core_orientation,
        wavelength: 1.064e-6,
        power: 0.9e-3,
    };
    Ok((cs, om))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn paper_pcf() -> (FiberCrossSection, OpticalMode) {
        build_pcf(
            127e-6,
            1.6e-6,
            1.28e-6,
            10e-6,
            (2.4e-6, 1.5e-6),
            0.0,
            1.0,
            Material::silica(),
        )
        .unwrap()
    }

    #[test]
    fn standard_fiber_dimensions() {
        let (cs, om) = build_standard_fiber(80e-6, 4.5e-6, Material::silica()).unwrap();
        assert_eq!(cs.outer_radius, 40e-6);
        assert!(cs.holes.is_empty());
        assert_eq!(om.waist_x, 2.25e-6);
        assert_eq!(om.waist_y, 2.25e-6);
    }

    #[test]
    fn standard_fiber_rejects_degenerate_mfd() {
        let err = build_standard_fiber(125e-6, 0.0, Material::silica()).unwrap_err();
        assert!(err.to_string().contains("mfd"));
    }

    #[test]
    fn standard_fiber_rejects_mode_larger_than_cladding() {
        let err = build_standard_fiber(80e-6, 100e-6, Material::silica()).unwrap_err();
        assert!(err.to_string().contains("cladding_diameter"));
    }

    #[test]
    fn pcf_rejects_touching_holes() {
        let err = build_pcf(
            127e-6,
            1.6e-6,
            1.6e-6,
            10e-6,
            (2.4e-6, 1.5e-6),
            0.0,
            1.0,
            Material::silica(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("holes touch"));
    }

    /// Independent lattice-enumeration oracle: integer (i, j) scan.
    fn lattice_oracle(pitch: f64, rmax: f64, core: &Ellipse, hole_r: f64) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let kmax = (rmax / pitch).ceil() as i64 + 2;
        for i in -kmax..=kmax {
            for j in -kmax..=kmax {
                if i == 0 && j == 0 {
                    continue;
                }
                let x = pitch * (i as f64 + 0.5 * j as f64);
                let y = pitch * (3.0f64.sqrt() / 2.0 * j as f64);
                if x.hypot(y) > rmax * (1.0 + 1e-12) {
                    continue;
                }
                if core.distance((x, y)) < hole_r {
                    continue;
                }
                out.push((x, y));
            }
        }
        out
    }

    #[test]
    fn pcf_hole_count_matches_enumeration_oracle() {
        let (cs, _) = paper_pcf();
        let core = cs.core.unwrap();
        let oracle = lattice_oracle(1.6e-6, 5e-6, &core, 0.64e-6);
        assert_eq!(cs.holes.len(), oracle.len());
        // set equality within 1e-12 m
        for h in &cs.holes {
            assert!(
                oracle
                    .iter()
                    .any(|s| (s.0 - h.center.0).hypot(s.1 - h.center.1) < 1e-12),
                "hole at {:?} missing from oracle set",
                h.center
            );
        }
        // 37 sites within 5 um; center + the two ±x first-ring sites omitted
        assert_eq!(cs.holes.len(), 34);
    }

    #[test]
    fn pcf_passes_validation_and_region_queries() {
        let (cs, om) = paper_pcf();
        cs.validate().unwrap();
        assert_eq!(cs.region_of((0.0, 0.0)), Region::Glass);
        let h0 = cs.holes[0];
        assert_eq!(cs.region_of(h0.center), Region::Hole(0));
        assert_eq!(cs.region_of((2.0 * cs.outer_radius, 0.0)), Region::Outside);
        assert!(om.intensity((0.0, 0.0)) > 0.0);
    }

    #[test]
    fn solid_fiber_region_of_origin_is_glass() {
        let (cs, _) = build_standard_fiber(80e-6, 4.5e-6, Material::silica()).unwrap();
        assert_eq!(cs.region_of((0.0, 0.0)), Region::Glass);
    }

    #[test]
    fn lattice_sixfold_symmetry_without_core() {
        // rotation by 60° maps the generated site set onto itself
        let sites = hex_lattice_sites(1.6e-6, 5e-6);
        let (s, c) = (std::f64::consts::PI / 3.0).sin_cos();
        for p in &sites {
            let q = (c * p.0 - s * p.1, s * p.0 + c * p.1);
            assert!(
                sites
                    .iter()
                    .any(|t| (t.0 - q.0).hypot(t.1 - q.1) < 1e-12),
                "rotated site {q:?} not in set"
            );
        }
    }

    #[test]
    fn optical_intensity_normalizes_to_one() {
        let om = OpticalMode {
            center: (0.0, 0.0),
            waist_x: 2.25e-6,
            waist_y: 1.1e-6,
            orientation: 0.4,
            wavelength: 1.064e-6,
            power: 0.9e-3,
        };
        // midpoint grid over ±6 waists
        let n = 400;
        let l = 6.0 * om.waist_x.max(om.waist_y);
        let hstep = 2.0 * l / n as f64;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                let x = -l + (i as f64 + 0.5) * hstep;
                let y = -l + (j as f64 + 0.5) * hstep;
                sum += om.intensity((x, y)) * hstep * hstep;
            }
        }
        assert!((sum - 1.0).abs() < 1e-6, "integral = {sum}");
    }

    #[test]
    fn ellipse_distance_matches_circle() {
        let e = Ellipse {
            semi_axis_x: 2.0,
            semi_axis_y: 2.0,
            rotation: 0.0,
        };
        assert!((e.distance((5.0, 0.0)) - 3.0).abs() < 1e-10);
        assert!((e.distance((0.0, -7.0)) - 5.0).abs() < 1e-10);
        assert_eq!(e.distance((1.0, 0.5)), 0.0);
    }

    proptest! {
        #[test]
        fn scaling_by_powers_of_two_is_exact(exp in -4i32..5) {
            let s = 2.0f64.powi(exp);
            let base = hex_lattice_sites(1.6e-6, 5e-6);
            let scaled = hex_lattice_sites(1.6e-6 * s, 5e-6 * s);
            prop_assert_eq!(base.len(), scaled.len());
            for (b, t) in base.iter().zip(scaled.iter()) {
                prop_assert_eq!(b.0 * s, t.0);
                prop_assert_eq!(b.1 * s, t.1);
            }
        }

        #[test]
        fn region_of_consistent_with_hole_list(x in -70e-6..70e-6f64, y in -70e-6..70e-6f64) {
            let (cs, _) = paper_pcf();
            let tag = cs.region_of((x, y));
            let in_some_hole = cs.holes.iter().any(|h| {
                (x - h.center.0).hypot(y - h.center.1) < h.radius - BOUNDARY_TOL
            });
            prop_assert_eq!(matches!(tag, Region::Hole(_)), in_some_hole);
        }

        #[test]
        fn ellipse_distance_vs_dense_sampling(px in -4.0..4.0f64, py in -4.0..4.0f64) {
            let e = Ellipse { semi_axis_x: 1.3, semi_axis_y: 0.6, rotation: 0.7 };
            let d = e.distance((px, py));
            let mut best = f64::INFINITY;
            for k in 0..4096 {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 4096.0;
                let (s, c) = e.rotation.sin_cos();
                let bx = 1.3 * t.cos();
                let by = 0.6 * t.sin();
                let q = (c * bx - s * by, s * bx + c * by);
                best = best.min((px - q.0).hypot(py - q.1));
            }
            if e.contains((px, py)) || d == 0.0 {
                prop_assert!(d <= 1e-3);
            } else {
                prop_assert!((d - best).abs() < 1e-5, "d={d} best={best}");
            }
        }
    }
}
