//! Connectivity of Boolean solution graphs for formulas and circuits over
//! arbitrary finite bases.
//!
//! * [`boolfn`]: truth tables, clone properties, Post's lattice, dispatch.
//! * [`rep`]: formulas, circuits, quantified formulas, DIMACS CNF.
//! * [`graph`]: explicit solution sets and the exhaustive graph engine.
//! * [`poly`]: the polynomial algorithms for monotone, linear, and
//!   0-separating bases.
//! * [`reduce`]: hardness reductions and exponential-diameter witnesses.

pub mod boolfn;
pub mod error;
pub mod graph;
pub mod poly;
pub mod reduce;
pub mod rep;

pub use boolfn::{BaseSet, BitVector, TruthTable};
pub use error::{Error, Result};
