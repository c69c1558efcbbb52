//! Tube (Steiner) coefficients for non-locally-convex planar sets and 3D
//! polytopes, tail expansions for the maximum of stationary unit-variance
//! Gaussian fields, a brute-force grid dilation oracle, and Monte Carlo
//! validation against an exactly Gaussian random-wave field.

pub mod cli;
pub mod config;
pub mod field_sim;
pub mod monte_carlo;
pub mod fixtures;
pub mod geometry2d;
pub mod geometry3d;
pub mod expansion;
pub mod special;
pub mod tube_oracle;
pub mod point;

pub use geometry2d::{PlanarSet, SteinerCoeffs2D};
pub use point::Point;
