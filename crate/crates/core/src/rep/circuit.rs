//! B-circuits: DAGs of gates labelled by base functions with ordered wires.
//!
//! ```text
//! input x1
//! input x2
//! gate g1 and x1 x2
//! output g1
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use super::formula::{as_variable, lookup, Formula};
use crate::boolfn::bits::{get_var, BitVector};
use crate::boolfn::BaseSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Input(u32),
    /// Wires point to earlier nodes; their order selects the table row.
    Gate { func: String, args: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    nodes: Vec<Node>,
    names: Vec<String>,
    output: usize,
}

impl Circuit {
    /// Builds a circuit from topologically ordered nodes.
    pub fn new(nodes: Vec<Node>, names: Vec<String>, output: usize) -> Result<Self> {
        if nodes.len() != names.len() {
            return Err(Error::Invalid("one name per node required".into()));
        }
        if output >= nodes.len() {
            return Err(Error::MissingOutput);
        }
        for (k, node) in nodes.iter().enumerate() {
            match node {
                Node::Input(0) => return Err(Error::Invalid("variable index 0".into())),
                Node::Gate { args, .. } if args.iter().any(|&a| a >= k) => {
                    return Err(Error::ForwardReference(names[k].clone()));
                }
                _ => {}
            }
        }
        Ok(Self {
            nodes,
            names,
            output,
        })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn name(&self, node: usize) -> &str {
        &self.names[node]
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Input variables in node order.
    pub fn inputs(&self) -> Vec<u32> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Input(i) => Some(*i),
                Node::Gate { .. } => None,
            })
            .collect()
    }

    pub fn gate_count(&self) -> usize {
        self.nodes.len() - self.inputs().len()
    }

    pub fn max_var(&self) -> u32 {
        self.inputs().into_iter().max().unwrap_or(0)
    }

    /// Number of wires leaving each node.
    pub fn outdegrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.nodes.len()];
        for node in &self.nodes {
            if let Node::Gate { args, .. } = node {
                for &a in args {
                    out[a] += 1;
                }
            }
        }
        out
    }

    pub fn validate(&self, base: &BaseSet) -> Result<()> {
        for node in &self.nodes {
            if let Node::Gate { func, args } = node {
                lookup(base, func, args.len())?;
            }
        }
        Ok(())
    }

    pub fn eval_word(&self, base: &BaseSet, word: u64, n: u32) -> Result<bool> {
        let mut values = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let v = match node {
                Node::Input(i) => {
                    if *i > n {
                        return Err(Error::MissingVariable(*i));
                    }
                    get_var(word, n, *i)
                }
                Node::Gate { func, args } => {
                    let f = lookup(base, func, args.len())?;
                    let row = args.iter().fold(0u64, |acc, &a| (acc << 1) | values[a] as u64);
                    f.get(row)
                }
            };
            values.push(v);
        }
        Ok(values[self.output])
    }

    pub fn eval(&self, base: &BaseSet, a: &BitVector) -> Result<bool> {
        self.eval_word(base, a.word(), a.dim())
    }

    /// Unfolds the DAG into a formula (exponential for shared gates).
    pub fn to_formula(&self) -> Formula {
        fn build(c: &Circuit, k: usize) -> Formula {
            match &c.nodes[k] {
                Node::Input(i) => Formula::Var(*i),
                Node::Gate { func, args } => {
                    Formula::Apply(func.clone(), args.iter().map(|&a| build(c, a)).collect())
                }
            }
        }
        build(self, self.output)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (node, name) in self.nodes.iter().zip(&self.names) {
            match node {
                Node::Input(i) => writeln!(out, "input x{i}").unwrap(),
                Node::Gate { func, args } => {
                    write!(out, "gate {name} {func}").unwrap();
                    for &a in args {
                        write!(out, " {}", self.names[a]).unwrap();
                    }
                    out.push('\n');
                }
            }
        }
        writeln!(out, "output {}", self.names[self.output]).unwrap();
        out
    }
}

fn valid_wire_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_circuit(text: &str, base: &BaseSet) -> Result<Circuit> {
    // All names defined anywhere, to tell forward references from typos.
    let defined: BTreeSet<&str> = text
        .lines()
        .filter_map(|l| {
            let mut f = l.split('#').next().unwrap_or("").split_whitespace();
            match (f.next(), f.next()) {
                (Some("input" | "gate"), Some(name)) => Some(name),
                _ => None,
            }
        })
        .collect();

    let mut nodes = Vec::new();
    let mut names = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut output = None;
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let pos = offset;
        offset += raw.len();
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::SyntaxError { pos, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if output.is_some() {
            return Err(syntax("nothing may follow the output line".into()));
        }
        match fields[0] {
            "input" => {
                let [_, name] = fields.as_slice() else {
                    return Err(syntax("expected `input xN`".into()));
                };
                let var = as_variable(name).ok_or_else(|| syntax(format!("bad input `{name}`")))?;
                if index.insert(name.to_string(), nodes.len()).is_some() {
                    return Err(Error::DuplicateName(name.to_string()));
                }
                nodes.push(Node::Input(var));
                names.push(name.to_string());
            }
            "gate" => {
                if fields.len() < 3 {
                    return Err(syntax("expected `gate NAME fn args...`".into()));
                }
                let (name, func) = (fields[1], fields[2]);
                if !valid_wire_name(name) {
                    return Err(syntax(format!("bad gate name `{name}`")));
                }
                if index.contains_key(name) {
                    return Err(Error::DuplicateName(name.to_string()));
                }
                let args = fields[3..]
                    .iter()
                    .map(|a| match index.get(*a) {
                        Some(&k) => Ok(k),
                        None if defined.contains(a) => Err(Error::ForwardReference(a.to_string())),
                        None => Err(syntax(format!("undefined wire `{a}`"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                lookup(base, func, args.len())?;
                index.insert(name.to_string(), nodes.len());
                nodes.push(Node::Gate {
                    func: func.to_string(),
                    args,
                });
                names.push(name.to_string());
            }
            "output" => {
                let [_, name] = fields.as_slice() else {
                    return Err(syntax("expected `output NAME`".into()));
                };
                let k = match index.get(*name) {
                    Some(&k) => k,
                    None => return Err(syntax(format!("undefined output `{name}`"))),
                };
                output = Some(k);
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }
    let output = output.ok_or(Error::MissingOutput)?;
    Circuit::new(nodes, names, output)
}

/// One input per distinct variable, one gate per function occurrence.
pub fn formula_to_circuit(phi: &Formula) -> Circuit {
    let vars: Vec<u32> = phi.vars().into_iter().collect();
    let mut nodes: Vec<Node> = vars.iter().map(|&i| Node::Input(i)).collect();
    let mut names: Vec<String> = vars.iter().map(|i| format!("x{i}")).collect();
    let input_of: HashMap<u32, usize> = vars.iter().enumerate().map(|(k, &i)| (i, k)).collect();

    fn emit(
        f: &Formula,
        input_of: &HashMap<u32, usize>,
        nodes: &mut Vec<Node>,
        names: &mut Vec<String>,
    ) -> usize {
        match f {
            Formula::Var(i) => input_of[i],
            Formula::Apply(func, args) => {
                let args = args
                    .iter()
                    .map(|a| emit(a, input_of, nodes, names))
                    .collect();
                let gate = names.len() - input_of.len() + 1;
                nodes.push(Node::Gate {
                    func: func.clone(),
                    args,
                });
                names.push(format!("g{gate}"));
                nodes.len() - 1
            }
        }
    }
    let output = emit(phi, &input_of, &mut nodes, &mut names);
    Circuit {
        nodes,
        names,
        output,
    }
}
