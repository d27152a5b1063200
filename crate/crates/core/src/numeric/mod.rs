//! High-precision numerics backed by MPFR/MPC.

pub mod ball;
pub mod roots;
pub mod cpoly;
