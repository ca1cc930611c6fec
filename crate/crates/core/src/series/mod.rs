//! Exact truncated power-series arithmetic over exchangeable coefficient
//! rings, kernel-root expansion and rational reconstruction.

pub mod bivar;
pub mod json;
pub mod kernel;
pub mod laurent;
pub mod pade;
pub mod ring;
pub mod trunc;

pub use bivar::BivarPoly;
pub use kernel::{kernel_residual, line_kernel_root, solve_kernel_root, triangle_kernel_root, KernelModel};
pub use laurent::LaurentPoly;
pub use pade::{pade_reconstruct, RationalFn};
pub use ring::CoeffRing;
pub use trunc::TruncSeries;
