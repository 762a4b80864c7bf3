//! Exact geometry for the unit-disk reduction to convex and empty convex
//! subsets of point sets in R³.
//!
//! The crate is organised bottom-up:
//!
//! - [`rational`] and [`geom`]: exact rationals, points, planes, lifting.
//! - [`hull`]: Carathéodory hull membership and convex-position predicates,
//!   plus [`hull::HullIndex`], a precomputed support table used by the searches.
//! - [`reduction`]: unit-disk instances, the lifted point set with blocking
//!   points, witness planes, and the checkers built on them.
//! - [`solvers`]: maximum independent set, exhaustive ES/LECS searches, the
//!   Erdős–Szekeres shortcut, planar DP and the projection heuristic.
//! - [`nets`]: weak ε-net verification and red/blue discrepancy over convex ranges.

pub mod error;
pub mod geom;
pub mod hull;
pub mod nets;
pub mod rational;
pub mod reduction;
pub mod solvers;

pub use error::{Error, Result};
pub use geom::{circle_lift_plane, general_position_2d, lift, plane_side, Plane3, Point2, Point3, Sign};
pub use hull::{is_convex_position, is_empty_convex_position, point_in_hull, HullIndex};
pub use rational::Rational;
