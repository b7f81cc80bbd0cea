//! Exact computational toolkit for piecewise-linear circle maps.
//!
//! All dynamics go through a single representation: a PL lifting
//! `F: R -> R` with rational breakpoints and `F(x+1) = F(x) + deg`.
//! Everything downstream — rotation numbers, periodic structure, horseshoes,
//! cover-join complexity, combinatorial independence, ω-limit machinery —
//! is computed in exact rational arithmetic. Searches are horizon-bounded
//! and say so: verdict types distinguish an exact certificate from evidence
//! gathered up to a budget.

pub mod arcset;
pub mod budget;
pub mod circle;
pub mod complexity;
pub mod error;
pub mod independence;
pub mod mapfile;
pub mod models;
pub mod omega;
pub mod periodic;
pub mod pl_lifting;
pub mod rational;
pub mod rotation;

pub use arcset::{Arc, ArcSet};
pub use budget::Budget;
pub use circle::{circle_metric, circular_order, CirclePoint};
pub use error::{Error, Result};
pub use pl_lifting::{CircleMapPL, PLLifting};
pub use rational::Rational;
