//! Syntax layer: formulas, circuits, quantified formulas, DIMACS CNF, and
//! their evaluation.

pub mod circuit;
pub mod cnf;
pub mod eval;
pub mod formula;
pub mod qbf;

pub use circuit::{formula_to_circuit, parse_circuit, Circuit, Node};
pub use cnf::{parse_dimacs, random_3cnf, CnfFormula};
pub use eval::{eliminate, truth_table_of, Instance, ENUMERATION_BUDGET};
pub use formula::{parse_formula, Formula};
pub use qbf::{parse_qbf, QuantifiedFormula, Quantifier, EXPANSION_BUDGET};
