//! Exact arithmetic: rationals, Q(√3), its quadratic extensions, and the integral lattice.

pub mod interval;
pub mod lattice;
pub mod lucas;
pub mod mobius;
pub mod rational;
pub mod sqrt3;
pub mod surd;

pub use interval::{DecimalMode, Interval};
pub use lattice::{
    h_matrix, hat, m_inverse, m_matrix, pairing, quadratic_form, u_matrix, IntVec3, Mat3Z,
};
pub use lucas::{lucas_cd, lucas_u};
pub use mobius::{n_graded, n_matrix, Graded, Mat2S};
pub use rational::BigRat;
pub use sqrt3::SqrtThree;
pub use surd::{surd_sign, Surd};
