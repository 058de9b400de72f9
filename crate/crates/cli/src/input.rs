//! Reading bases, instances, and relations from the command line.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args};
use solconn::rep::{parse_circuit, parse_dimacs, parse_formula, parse_qbf, Instance};
use solconn::graph::SolutionSet;
use solconn::{BaseSet, BitVector};

use crate::error::{CliError, CliResult};

#[derive(Args, Debug, Clone)]
#[command(group(
    ArgGroup::new("instance")
        .required(true)
        .args(["formula", "circuit", "cnf", "qbf", "rel"])
))]
pub struct InputArgs {
    /// Base file: one `name arity bits` line per function (default: not/and/or)
    #[arg(long, value_name = "FILE")]
    pub base: Option<PathBuf>,
    /// Formula file, e.g. `and(x1,or(x2,x3))`
    #[arg(long, value_name = "FILE")]
    pub formula: Option<PathBuf>,
    /// Circuit netlist file
    #[arg(long, value_name = "FILE")]
    pub circuit: Option<PathBuf>,
    /// DIMACS CNF file
    #[arg(long, value_name = "FILE")]
    pub cnf: Option<PathBuf>,
    /// Quantified formula file, e.g. `A x3 E x4 : f(x1,x3,x4)`
    #[arg(long, value_name = "FILE")]
    pub qbf: Option<PathBuf>,
    /// Explicit relation file: `n <dim>` then one bitstring per line
    #[arg(long, value_name = "FILE")]
    pub rel: Option<PathBuf>,
    /// Solution-graph dimension; larger values add fictive variables
    #[arg(long, value_name = "N")]
    pub vars: Option<u32>,
}

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn load_base(path: Option<&Path>) -> CliResult<BaseSet> {
    match path {
        Some(p) => Ok(BaseSet::parse(&read(p)?)?),
        None => Ok(BaseSet::standard()),
    }
}

pub fn parse_bits(text: &str) -> CliResult<BitVector> {
    Ok(text.parse::<BitVector>()?)
}

/// What the query runs on.
pub enum Loaded {
    Instance {
        obj: Instance,
        base: BaseSet,
        n: u32,
    },
    Relation(SolutionSet),
}

impl InputArgs {
    pub fn load(&self) -> CliResult<Loaded> {
        if let Some(p) = &self.rel {
            let r = SolutionSet::parse_rel(&read(p)?)?;
            if let Some(n) = self.vars.filter(|&n| n != r.dim()) {
                return Err(CliError::Usage(format!(
                    "--vars {n} does not match the relation's dimension {}",
                    r.dim()
                )));
            }
            return Ok(Loaded::Relation(r));
        }
        let mut base = load_base(self.base.as_deref())?;
        let obj = if let Some(p) = &self.formula {
            Instance::Formula(parse_formula(&read(p)?, &base)?)
        } else if let Some(p) = &self.circuit {
            Instance::Circuit(parse_circuit(&read(p)?, &base)?)
        } else if let Some(p) = &self.qbf {
            Instance::Quantified(parse_qbf(&read(p)?, &base)?)
        } else if let Some(p) = &self.cnf {
            // clauses are over the standard connectives whatever --base says
            base = BaseSet::standard();
            Instance::Cnf(parse_dimacs(&read(p)?)?)
        } else {
            unreachable!("clap requires one instance flag")
        };
        let min = obj.default_dim();
        let n = self.vars.unwrap_or(min);
        if n < min {
            return Err(CliError::Usage(format!(
                "--vars {n} is below the instance's dimension {min}"
            )));
        }
        if n == 0 {
            return Err(CliError::Usage("the instance has no variables; pass --vars".into()));
        }
        Ok(Loaded::Instance { obj, base, n })
    }
}
