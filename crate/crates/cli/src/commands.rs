//! One function per subcommand. Each returns text for the terminal, a
//! JSON value for `--json`, and the yes/no answer for `--exit-status`.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use solconn::boolfn::dispatch::BaseMembership;
use solconn::boolfn::props::property_report;
use solconn::boolfn::{clone_closure, clone_identify, dispatch, tt_print, DichotomyVerdict, TVariant};
use solconn::graph::{
    components, diameter, export_dot, graph_stats, random_relation, shortest_path, DiameterMode,
    SolutionSet,
};
use solconn::poly::{easy_decide, Rationale};
use solconn::reduce::{
    gen_expdiam, shift_to_one_reproducing, t_transform_cnf, tr_combine, SynthBudget,
    TransformInfo,
};
use solconn::rep::{parse_dimacs, random_3cnf, Instance};
use solconn::{BitVector, Error};

use crate::error::{CliError, CliResult};
use crate::input::{load_base, parse_bits, read, write, InputArgs, Loaded};

pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// `Some(false)` turns into exit status 1 under `--exit-status`.
    pub answer: Option<bool>,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            answer: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Polynomial algorithm when the base is easy, else enumeration within budget
    Auto,
    /// Polynomial algorithm only; refuses hard bases
    Poly,
    /// Exhaustive enumeration of the solution graph
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiamMode {
    Exact,
    LowerBound,
}

impl From<DiamMode> for DiameterMode {
    fn from(m: DiamMode) -> Self {
        match m {
            DiamMode::Exact => DiameterMode::Exact,
            DiamMode::LowerBound => DiameterMode::LowerBound,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct QueryArgs {
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,
    /// Largest dimension the exhaustive engine will enumerate
    #[arg(long, value_name = "N", default_value_t = 20)]
    pub budget: u32,
    /// Largest 0-separation degree tested when classifying the base
    #[arg(long, value_name = "M", default_value_t = solconn::boolfn::DEFAULT_DEGREE_BOUND)]
    pub degree_bound: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// Hard variant chosen by classifying --base
    Auto,
    S12,
    D1,
    S02k,
    S02q,
}

fn verdict_json(v: &DichotomyVerdict) -> Value {
    json!({ "text": v.to_string(), "detail": v })
}

fn path_text(path: &[BitVector]) -> String {
    path.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn classify(base_file: Option<PathBuf>, degree_bound: u32) -> CliResult<Outcome> {
    let base = load_base(base_file.as_deref())?;
    if base.is_empty() {
        return Err(CliError::Usage("the base has no functions".into()));
    }
    let reports = base
        .tables()
        .map(|f| property_report(f, degree_bound))
        .collect::<solconn::Result<Vec<_>>>()?;
    let m = BaseMembership::of(&reports);
    let all = |p: &dyn Fn(&solconn::boolfn::props::PropertyReport) -> bool| reports.iter().all(p);
    let mut inclusions = Vec::new();
    for (name, holds) in [
        ("R0", all(&|r| r.reproducing0)),
        ("R1", all(&|r| r.reproducing1)),
        ("M", m.monotone),
        ("D", m.self_dual),
        ("L", m.linear),
        ("S0", m.zero_separating),
        ("S1", all(&|r| r.separating1)),
    ] {
        if holds {
            inclusions.push(name);
        }
    }
    let clone = clone_identify(&base, degree_bound)?;
    let plain = dispatch(&base, false, degree_bound)?;
    let quantified = dispatch(&base, true, degree_bound)?;
    let incl = if inclusions.is_empty() {
        "B ⊆ BF".to_string()
    } else {
        inclusions.iter().map(|c| format!("B ⊆ {c}")).collect::<Vec<_>>().join(", ")
    };
    let functions: Vec<String> = base
        .iter()
        .map(|(name, t)| format!("{name}/{} {}", t.arity(), tt_print(t)))
        .collect();
    let text = format!(
        "report: {incl}, dichotomy {plain}, clone {clone}\n\
         functions: {}\n\
         clone: {clone}\n\
         dichotomy: {plain}\n\
         quantified: {quantified}",
        functions.join(", ")
    );
    let per_function: serde_json::Map<String, Value> = base
        .iter()
        .zip(&reports)
        .map(|((name, _), r)| (name.to_string(), json!(r)))
        .collect();
    let json = json!({
        "clone": clone.name(),
        "inclusions": inclusions,
        "membership": m,
        "dichotomy": verdict_json(&plain),
        "quantified_dichotomy": verdict_json(&quantified),
        "functions": per_function,
    });
    Ok(Outcome::new(text, json))
}

/// A connectivity answer from either engine.
struct Decision {
    method: &'static str,
    verdict: Option<DichotomyVerdict>,
    connected: bool,
    st_connected: Option<bool>,
    path: Option<Vec<BitVector>>,
    rationale: Option<Rationale>,
    note: String,
    witness_withheld: bool,
    solutions: Option<usize>,
    components: Option<usize>,
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

fn brute_decide(set: &SolutionSet, pair: Option<(BitVector, BitVector)>) -> CliResult<Decision> {
    let labels = components(set);
    let mut d = Decision {
        method: "brute",
        verdict: None,
        connected: labels.count() <= 1,
        st_connected: None,
        path: None,
        rationale: None,
        note: format!(
            "brute force; {} solution{}, {} component{}",
            set.len(),
            plural(set.len()),
            labels.count(),
            plural(labels.count())
        ),
        witness_withheld: false,
        solutions: Some(set.len()),
        components: Some(labels.count()),
    };
    if let Some((s, t)) = pair {
        let path = shortest_path(set, &s, &t)?;
        d.st_connected = Some(path.is_some());
        d.path = path;
    }
    Ok(d)
}

fn rationale_note(r: &Rationale, obj: &Instance, n: u32) -> String {
    let name = |p: u32| -> String {
        match obj {
            // quantified supports are positions in the free-variable list
            Instance::Quantified(q) => match q.free_vars_padded(n) {
                Ok(free) => format!("x{}", free[p as usize - 1]),
                Err(_) => format!("#{p}"),
            },
            _ => format!("x{p}"),
        }
    };
    match r {
        Rationale::Monotone => "monotone".into(),
        Rationale::ZeroSeparating { coordinate: Some(i) } => {
            format!("0-separating; coordinate x{i}")
        }
        Rationale::ZeroSeparating { coordinate: None } => "0-separating".into(),
        Rationale::Linear { support, .. } if support.is_empty() => {
            "linear; non-fictive: none".into()
        }
        Rationale::Linear { support, .. } => format!(
            "linear; non-fictive: {}",
            support.iter().map(|&p| name(p)).collect::<Vec<_>>().join(",")
        ),
        Rationale::Tautology => "quantified linear; tautology".into(),
        Rationale::Unsatisfiable => "quantified linear; unsatisfiable".into(),
    }
}

fn decide(loaded: &Loaded, q: &QueryArgs, s: Option<&str>, t: Option<&str>) -> CliResult<Decision> {
    let s = s.map(parse_bits).transpose()?;
    let t = t.map(parse_bits).transpose()?;
    let pair = match (s, t) {
        (Some(s), Some(t)) => Some((s, t)),
        (None, None) => None,
        _ => return Err(CliError::Usage("--s and --t go together".into())),
    };
    let (obj, base, n) = match loaded {
        Loaded::Relation(r) => {
            if q.mode == Mode::Poly {
                return Err(CliError::Usage(
                    "--mode poly needs a formula, circuit, or quantified formula".into(),
                ));
            }
            return brute_decide(r, pair);
        }
        Loaded::Instance { obj, base, n } => (obj, base, *n),
    };
    let brute = |verdict| -> CliResult<Decision> {
        let set = solconn::graph::enumerate_solutions(obj, base, n, q.budget)?;
        let mut d = brute_decide(&set, pair)?;
        d.verdict = verdict;
        Ok(d)
    };
    if q.mode == Mode::Brute {
        return brute(None);
    }
    if matches!(obj, Instance::Cnf(_)) && q.mode == Mode::Poly {
        return Err(Error::WrongClass("CNF formulas use non-monotone negation".into()).into());
    }
    let verdict = dispatch(base, obj.is_quantified(), q.degree_bound)?;
    if !verdict.is_easy() || matches!(obj, Instance::Cnf(_)) {
        if q.mode == Mode::Poly {
            return Err(Error::WrongClass(format!("dispatch says {verdict}")).into());
        }
        if n > q.budget {
            return Err(CliError::Refused(format!(
                "dispatch says {verdict}: no polynomial algorithm applies and dimension {n} exceeds the enumeration budget {}",
                q.budget
            )));
        }
        return brute(Some(verdict));
    }
    let ans = easy_decide(obj, base, n, pair.as_ref().map(|p| &p.0), pair.as_ref().map(|p| &p.1))?;
    Ok(Decision {
        method: "poly",
        verdict: Some(verdict),
        connected: ans.connected,
        st_connected: ans.st_connected,
        path: ans.witness_path,
        note: rationale_note(&ans.rationale, obj, n),
        rationale: Some(ans.rationale),
        witness_withheld: ans.witness_withheld,
        solutions: None,
        components: None,
    })
}

fn decision_json(query: &str, d: &Decision) -> Value {
    json!({
        "query": query,
        "connected": d.connected,
        "st_connected": d.st_connected,
        "path": d.path,
        "method": d.method,
        "dichotomy": d.verdict.as_ref().map(verdict_json),
        "rationale": d.rationale,
        "witness_withheld": d.witness_withheld,
        "solutions": d.solutions,
        "components": d.components,
    })
}

pub fn conn(input: &InputArgs, q: &QueryArgs) -> CliResult<Outcome> {
    let loaded = input.load()?;
    let d = decide(&loaded, q, None, None)?;
    let mut out = Outcome::new(
        format!("connected: {} ({})", d.connected, d.note),
        decision_json("conn", &d),
    );
    out.answer = Some(d.connected);
    Ok(out)
}

pub fn stconn(input: &InputArgs, q: &QueryArgs, s: &str, t: &str) -> CliResult<Outcome> {
    let loaded = input.load()?;
    let d = decide(&loaded, q, Some(s), Some(t))?;
    let st = d.st_connected.expect("pair was given");
    let text = match (&d.path, st) {
        (Some(p), true) => format!("connected: true; path: {}", path_text(p)),
        (None, true) => "connected: true; path withheld (witness search budget exceeded)".into(),
        (_, false) => "connected: false".into(),
    };
    let mut out = Outcome::new(text, decision_json("stconn", &d));
    out.answer = Some(st);
    Ok(out)
}

fn solution_set(loaded: &Loaded, budget: u32) -> CliResult<SolutionSet> {
    match loaded {
        Loaded::Relation(r) => Ok(r.clone()),
        Loaded::Instance { obj, base, n } => {
            Ok(solconn::graph::enumerate_solutions(obj, base, *n, budget)?)
        }
    }
}

pub fn path(input: &InputArgs, budget: u32, s: &str, t: &str) -> CliResult<Outcome> {
    let set = solution_set(&input.load()?, budget)?;
    let p = shortest_path(&set, &parse_bits(s)?, &parse_bits(t)?)?;
    let text = match &p {
        Some(p) => format!("path: {}\nlength: {}", path_text(p), p.len() - 1),
        None => "no path".into(),
    };
    let mut out = Outcome::new(
        text,
        json!({ "path": p, "length": p.as_ref().map(|p| p.len() - 1) }),
    );
    out.answer = Some(p.is_some());
    Ok(out)
}

pub fn diameter_cmd(input: &InputArgs, budget: u32, mode: DiamMode) -> CliResult<Outcome> {
    let set = solution_set(&input.load()?, budget)?;
    let stats = graph_stats(&set, mode.into())?;
    let suffix = if mode == DiamMode::LowerBound { " (lower bound)" } else { "" };
    Ok(Outcome::new(
        format!("diameter: {}{suffix}", stats.diameter),
        json!(stats),
    ))
}

pub fn components_cmd(input: &InputArgs, budget: u32, mode: DiamMode) -> CliResult<Outcome> {
    let set = solution_set(&input.load()?, budget)?;
    let labels = components(&set);
    let stats = graph_stats(&set, mode.into())?;
    let sizes = labels.sizes();
    let text = format!(
        "components: {}\nsolutions: {}\nsizes: {}",
        labels.count(),
        set.len(),
        sizes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    );
    let mut json = json!(stats);
    json["sizes"] = json!(sizes);
    let mut out = Outcome::new(text, json);
    out.answer = Some(labels.count() <= 1);
    Ok(out)
}

pub fn export_dot_cmd(input: &InputArgs, budget: u32, dot: Option<PathBuf>) -> CliResult<Outcome> {
    let set = solution_set(&input.load()?, budget)?;
    let labels = components(&set);
    let text = export_dot(&set, Some(&labels))?;
    let json = json!({
        "vertices": set.len(),
        "components": labels.count(),
        "dot": dot.as_ref().map(|p| p.display().to_string()),
    });
    match dot {
        Some(path) => {
            write(&path, &text)?;
            Ok(Outcome::new(
                format!(
                    "wrote {} ({} vertices, {} components)",
                    path.display(),
                    set.len(),
                    labels.count()
                ),
                json,
            ))
        }
        None => Ok(Outcome::new(text.trim_end().to_string(), json)),
    }
}

#[derive(Args, Debug, Clone)]
pub struct ReduceArgs {
    /// DIMACS CNF to transform
    #[arg(long, value_name = "FILE")]
    pub cnf: PathBuf,
    /// Target base; when given the output is synthesized over it
    #[arg(long, value_name = "FILE")]
    pub base: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
    pub variant: VariantArg,
    /// Degree for the s02k variant
    #[arg(long, value_name = "K", default_value_t = 2)]
    pub k: u32,
    /// A solution used to make the CNF 1-reproducing first
    #[arg(long, value_name = "BITS")]
    pub s: Option<String>,
    /// Output formula file; the sidecar goes to FILE.json
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Compositions the synthesizer may try per truth table
    #[arg(long, value_name = "N", default_value_t = SynthBudget::default().max_steps)]
    pub synth_steps: u64,
    #[arg(long, value_name = "M", default_value_t = solconn::boolfn::DEFAULT_DEGREE_BOUND)]
    pub degree_bound: u32,
}

pub fn reduce(args: &ReduceArgs) -> CliResult<Outcome> {
    let mut phi = parse_dimacs(&read(&args.cnf)?)?;
    if let Some(s) = &args.s {
        phi = shift_to_one_reproducing(&phi, &parse_bits(s)?)?;
    }
    let base = args.base.as_deref().map(|p| load_base(Some(p))).transpose()?;
    let variant = match args.variant {
        VariantArg::S12 => TVariant::S12,
        VariantArg::D1 => TVariant::D1,
        VariantArg::S02k => TVariant::S02K(args.k),
        VariantArg::S02q => TVariant::S02Q,
        VariantArg::Auto => {
            let Some(b) = &base else {
                return Err(CliError::Usage("--variant auto needs --base".into()));
            };
            let v = dispatch(b, false, args.degree_bound)?;
            v.hard_variant().ok_or_else(|| {
                CliError::Refused(format!("dispatch says {v}: the base is on the easy side"))
            })?
        }
    };
    let (instance, info, depth): (Instance, TransformInfo, Option<u32>) = match &base {
        Some(b) => {
            let budget = SynthBudget {
                max_steps: args.synth_steps,
                ..SynthBudget::default()
            };
            let tr = tr_combine(&phi, variant, b, budget)?;
            (tr.instance, tr.info, Some(tr.depth))
        }
        None => {
            let t = t_transform_cnf(&phi, variant)?;
            (t.instance, t.info, None)
        }
    };
    let formula = match &instance {
        Instance::Formula(f) => f.to_string(),
        Instance::Quantified(q) => q.to_string(),
        _ => unreachable!("reductions produce formulas"),
    };
    let size = match &instance {
        Instance::Formula(f) => f.size(),
        Instance::Quantified(q) => q.matrix().size(),
        _ => 0,
    };
    let sidecar = serde_json::to_value(&info).expect("sidecar serializes");
    let json = json!({
        "formula": formula,
        "sidecar": sidecar,
        "size": size,
        "depth": depth,
        "output": args.output.as_ref().map(|p| p.display().to_string()),
    });
    let text = match &args.output {
        Some(path) => {
            write(path, &format!("{formula}\n"))?;
            let side = sidecar_path(path);
            write(&side, &format!("{}\n", serde_json::to_string_pretty(&sidecar).expect("json")))?;
            let new_vars: Vec<String> =
                info.new_variable_indices.iter().map(|i| format!("x{i}")).collect();
            let mut lines = vec![
                format!("variant: {variant}"),
                format!("new variables: {}", new_vars.join(" ")),
                format!("pad: {}", info.pad_vector),
                format!("size: {size}"),
            ];
            if let Some(d) = depth {
                lines.push(format!("depth: {d}"));
            }
            lines.push(format!("wrote: {} {}", path.display(), side.display()));
            lines.join("\n")
        }
        None => formula,
    };
    Ok(Outcome::new(text, json))
}

pub fn sidecar_path(path: &std::path::Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

pub fn gen_expdiam_cmd(k: u32, output: Option<PathBuf>) -> CliResult<Outcome> {
    let (set, path) = gen_expdiam(k)?;
    let diam = diameter(&set, DiameterMode::Exact)?;
    let json = json!({
        "k": k,
        "dimension": set.dim(),
        "vertices": set.len(),
        "diameter": diam,
        "path": path,
    });
    emit_relation(&set, output, json)
}

fn emit_relation(set: &SolutionSet, output: Option<PathBuf>, json: Value) -> CliResult<Outcome> {
    let rel = set.to_rel();
    match output {
        Some(p) => {
            write(&p, &rel)?;
            Ok(Outcome::new(
                format!("wrote {} ({} vertices, dimension {})", p.display(), set.len(), set.dim()),
                json,
            ))
        }
        None => Ok(Outcome::new(rel.trim_end().to_string(), json)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    /// Uniform relation of --size distinct vectors
    Rel,
    /// 3-CNF with --size clauses
    Cnf,
}

#[derive(Args, Debug, Clone)]
pub struct RandomArgs {
    #[arg(long, value_enum, default_value_t = RandomKind::Rel)]
    pub kind: RandomKind,
    #[arg(long, value_name = "N")]
    pub vars: u32,
    /// Number of vectors (rel) or clauses (cnf)
    #[arg(long, value_name = "M")]
    pub size: usize,
    #[arg(long, value_name = "S", default_value_t = 0)]
    pub seed: u64,
    /// Give every clause a positive literal, so all-ones is a solution
    #[arg(long)]
    pub one_reproducing: bool,
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

pub fn gen_random(args: &RandomArgs) -> CliResult<Outcome> {
    match args.kind {
        RandomKind::Rel => {
            let set = random_relation(args.vars, args.size, args.seed)?;
            let json = json!({
                "dimension": set.dim(),
                "vertices": set.len(),
                "seed": args.seed,
                "words": set.vectors().collect::<Vec<_>>(),
            });
            emit_relation(&set, args.output.clone(), json)
        }
        RandomKind::Cnf => {
            let cnf = random_3cnf(args.vars, args.size, args.seed, args.one_reproducing)?;
            let text = cnf.to_dimacs();
            let json = json!({
                "vars": cnf.num_vars(),
                "clauses": cnf.clauses(),
                "seed": args.seed,
            });
            match &args.output {
                Some(p) => {
                    write(p, &text)?;
                    Ok(Outcome::new(format!("wrote {}", p.display()), json))
                }
                None => Ok(Outcome::new(text.trim_end().to_string(), json)),
            }
        }
    }
}

pub fn closure(base_file: Option<PathBuf>, arity: u32, budget: usize) -> CliResult<Outcome> {
    let base = load_base(base_file.as_deref())?;
    let tables = clone_closure(&base, arity, budget)?;
    let printed: Vec<String> = tables.iter().map(tt_print).collect();
    let text = std::iter::once(format!("arity {arity}: {} functions", printed.len()))
        .chain(printed.iter().cloned())
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome::new(
        text,
        json!({ "arity": arity, "count": printed.len(), "tables": printed }),
    ))
}
