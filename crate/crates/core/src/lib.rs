//! Exact spinor arithmetic through the binary code of basic spinors.
//!
//! Basic spinors `u_a` are indexed by integers whose bits record the
//! signs of the torus weights, and Clifford multiplication by `e_p` is a
//! single bit flip times a power of `i`. On top of that kernel the crate
//! builds the representation matrices of `Spin(n)`, the triality
//! automorphisms of `Spin(8)`, `𝔤₂` inside `𝔰𝔭𝔦𝔫(7)`, the invariant forms,
//! the octonions, and Hurwitz–Radon vector fields on spheres. All
//! arithmetic is exact over `ℚ(i, √2, √3)`.

pub mod clifford;
pub mod error;
pub mod fields;
pub mod forms;
pub mod golden;
pub mod matrix;
pub mod octonion;
pub mod oracle;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod spinor;
pub mod triality;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Angle, Rat, Scalar};
pub use spinor::{RealForm, Spinor};
