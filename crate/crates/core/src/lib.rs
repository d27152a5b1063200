//! Exact and high-precision computations on the Hesse pencil of plane cubics
//! `t0(x³+y³+z³) + t1·xyz = 0`: number-field towers, polynomials, plane
//! geometry, the Hessian group, the chord-tangent law and integer lattices.

pub mod ellaw;
pub mod error;
pub mod field;
pub mod groups;
pub mod hesse;
pub mod lattice;
pub mod numeric;
pub mod plane;
pub mod poly;
pub mod ring;
pub mod text;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldTower, Rational};
pub use ring::{Field, Fp, Ring};
