//! Modelling of guided acoustic wave Brillouin scattering (GAWBS) in optical
//! fibers: acoustic mode spectra of solid and microstructured fiber cross
//! sections, photoelastic coupling to the guided optical mode, and synthesis
//! of shot-noise-referenced phase / polarization noise spectra.

pub mod bessel;
pub mod calibration;
pub mod config;
pub mod constants;
pub mod cylinder;
pub mod error;
pub mod fem;
pub mod geometry;
pub mod material;
pub mod mesh;
pub mod photoelastic;
pub mod quad;
pub mod sparse;
pub mod spectrum;
pub mod study;

pub use error::{CoreError, Result};
pub use geometry::{FiberCrossSection, OpticalMode, Region};
pub use material::Material;
