//! Command dispatch. Every command produces a text rendering and a JSON value;
//! the text always names the basis the answer rests on.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use cmtrace::families::{self, seeded_rng};
use cmtrace::{
    alexander_dual, betti_numbers, canonical_trace, classify_ng_height2, classify_ng_two_vars, cm_type,
    hb_matrix_general, hb_matrix_xy, height, irreducible_decomposition, is_cohen_macaulay_h2,
    is_generically_gorenstein, is_height_unmixed, is_nearly_gorenstein_h2, polarize, standard_primary_decomposition,
    verify_conjecture, verify_inclusion, verify_kernel_theorem_xy, AmbientRing, Chordality, Monomial, MonomialIdeal,
    NgCase, SignedMonomialMatrix, TraceBasis, Verdict, VerificationReport, DEFAULT_DEGREE_CAP,
};

use crate::parse::{parse_graph_spec, parse_ideal, parse_vars, ParseError};

pub const SCHEMA_VERSION: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const EXACT: &str = "proven (exact combinatorial computation)";

#[derive(Parser, Debug)]
#[command(name = "cmtrace", version, about = "Canonical traces of height-two Cohen-Macaulay monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Declared variables, e.g. `x,y,z`; otherwise collected in order of appearance.
    #[arg(long, global = true, value_name = "LIST")]
    pub vars: Option<String>,
    /// Degree bound for the kernel oracle; defaults to twice the lcm of the generators.
    #[arg(long, global = true, value_name = "E1,...,En")]
    pub bound: Option<String>,
    /// Maximum number of multidegrees the oracle may scan.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    pub cap: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct IdealInput {
    /// The ideal, e.g. "x^3, x^2*y, y^2"; read from stdin when omitted.
    pub ideal: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Xy,
    Height2,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Irreducible and standard primary decomposition.
    Decompose(IdealInput),
    /// Height and unmixedness.
    Height(IdealInput),
    /// Polarization.
    Polarize(IdealInput),
    /// Alexander dual of a squarefree ideal.
    Dual(IdealInput),
    /// Localization at the prime generated by the given variables.
    Localize {
        #[arg(long, value_name = "VARS")]
        at: String,
        #[command(flatten)]
        input: IdealInput,
    },
    /// The ideal of edge-sequence data and cochordality of G(a,b).
    Graph {
        /// Print G(a,b) in Graphviz format instead of the report.
        #[arg(long)]
        dot: bool,
        /// Lines `i j a b`; read from stdin when omitted.
        spec: Option<String>,
    },
    /// Cohen-Macaulay test via projective dimension.
    IsCm(IdealInput),
    /// Multigraded Betti numbers of S/I.
    Betti(IdealInput),
    /// Hilbert-Burch matrix.
    HbMatrix(IdealInput),
    /// Canonical trace and the Gorenstein-type properties.
    Trace(IdealInput),
    /// Nearly Gorenstein classification by pattern.
    Classify(IdealInput),
    /// Oracle check of the two-variable kernel theorem.
    VerifyKernelXy(IdealInput),
    /// Oracle and symbolic check of the inclusion of minors.
    VerifyInclusion(IdealInput),
    /// Oracle check of the trace formula; exit 4 on refutation.
    VerifyConjecture(IdealInput),
    /// Enumeration sweeps comparing trace decisions with the classification.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        /// Largest exponent or pattern parameter (default 5 for xy, 3 for height2).
        #[arg(long)]
        max_exp: Option<u32>,
        /// Random non-pattern instances for the height2 family.
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

impl Command {
    /// The positional input, if the command takes one.
    fn input(&self) -> Option<&Option<String>> {
        match self {
            Command::Decompose(i)
            | Command::Height(i)
            | Command::Polarize(i)
            | Command::Dual(i)
            | Command::IsCm(i)
            | Command::Betti(i)
            | Command::HbMatrix(i)
            | Command::Trace(i)
            | Command::Classify(i)
            | Command::VerifyKernelXy(i)
            | Command::VerifyInclusion(i)
            | Command::VerifyConjecture(i)
            | Command::Localize { input: i, .. } => Some(&i.ideal),
            Command::Graph { spec, .. } => Some(spec),
            Command::Sweep { .. } => None,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Decompose(_) => "decompose",
            Command::Height(_) => "height",
            Command::Polarize(_) => "polarize",
            Command::Dual(_) => "dual",
            Command::Localize { .. } => "localize",
            Command::Graph { .. } => "graph",
            Command::IsCm(_) => "is-cm",
            Command::Betti(_) => "betti",
            Command::HbMatrix(_) => "hb-matrix",
            Command::Trace(_) => "trace",
            Command::Classify(_) => "classify",
            Command::VerifyKernelXy(_) => "verify-kernel-xy",
            Command::VerifyInclusion(_) => "verify-inclusion",
            Command::VerifyConjecture(_) => "verify-conjecture",
            Command::Sweep { .. } => "sweep",
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Usage(String),
    Io(String),
    Lib(cmtrace::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Lib(cmtrace::Error::Resource(_)) => 3,
            CliError::Lib(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Lib(cmtrace::Error::Resource(_)) => "resource",
            CliError::Lib(_) => "domain",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "parse error at {e}"),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<cmtrace::Error> for CliError {
    fn from(e: cmtrace::Error) -> Self {
        CliError::Lib(e)
    }
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    json: Value,
    /// Exit status for a report that was produced but signals a failure.
    status: Option<(u8, String)>,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, status: None }
    }
}

fn envelope(command: &str, body: (&str, Value)) -> Value {
    let mut v = json!({ "schema": SCHEMA_VERSION, "version": VERSION, "command": command });
    v[body.0] = body.1;
    v
}

/// Runs one command. `stdin` is only called when the input argument is omitted.
pub fn dispatch(cli: &Cli, stdin: impl FnOnce() -> io::Result<String>) -> Outcome {
    let name = cli.command.name();
    match run(cli, stdin) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Text => report.text,
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&envelope(name, ("result", report.json)))
                        .expect("reports serialize");
                    s.push('\n');
                    s
                }
            };
            let (code, stderr) = report.status.map_or((0, String::new()), |(c, m)| (c, format!("{m}\n")));
            Outcome { code, stdout, stderr }
        }
        Err(e) => {
            let stdout = match cli.format {
                Format::Text => String::new(),
                Format::Json => {
                    let err = json!({ "kind": e.kind(), "message": e.to_string() });
                    let mut s = serde_json::to_string_pretty(&envelope(name, ("error", err))).expect("serializes");
                    s.push('\n');
                    s
                }
            };
            Outcome { code: e.exit_code(), stdout, stderr: format!("error: {e}\n") }
        }
    }
}

fn run(cli: &Cli, stdin: impl FnOnce() -> io::Result<String>) -> Result<Report, CliError> {
    let vars = cli.vars.as_deref().map(parse_vars).transpose()?;
    let text = match cli.command.input() {
        Some(Some(s)) => s.clone(),
        Some(None) => stdin().map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?,
        None => String::new(),
    };
    let ideal = || -> Result<MonomialIdeal, CliError> { Ok(parse_ideal(&text, vars.as_ref())?) };
    match &cli.command {
        Command::Decompose(_) => decompose(&ideal()?),
        Command::Height(_) => height_cmd(&ideal()?),
        Command::Polarize(_) => polarize_cmd(&ideal()?),
        Command::Dual(_) => dual_cmd(&ideal()?),
        Command::Localize { at, .. } => localize_cmd(&ideal()?, at),
        Command::Graph { dot, .. } => graph_cmd(&text, vars.as_ref(), *dot),
        Command::IsCm(_) => is_cm_cmd(&ideal()?),
        Command::Betti(_) => betti_cmd(&ideal()?),
        Command::HbMatrix(_) => hb_cmd(&ideal()?),
        Command::Trace(_) => trace_cmd(&ideal()?),
        Command::Classify(_) => classify_cmd(&ideal()?),
        Command::VerifyKernelXy(_) => {
            let ideal = ideal()?;
            let bound = bound_of(cli, &ideal)?;
            verify_kernel_cmd(&ideal, bound.as_ref(), cli.cap)
        }
        Command::VerifyInclusion(_) => {
            let ideal = ideal()?;
            let bound = bound_of(cli, &ideal)?;
            verify_inclusion_cmd(&ideal, bound.as_ref(), cli.cap)
        }
        Command::VerifyConjecture(_) => {
            let ideal = ideal()?;
            let bound = bound_of(cli, &ideal)?;
            verify_conjecture_cmd(&ideal, bound.as_ref(), cli.cap)
        }
        Command::Sweep { family, max_exp, count } => match family {
            Family::Xy => sweep_xy(max_exp.unwrap_or(5)),
            Family::Height2 => sweep_height2(max_exp.unwrap_or(3), *count, cli.seed),
        },
    }
}

fn bound_of(cli: &Cli, ideal: &MonomialIdeal) -> Result<Option<Monomial>, CliError> {
    let Some(text) = &cli.bound else { return Ok(None) };
    let exps = text
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("invalid bound entry `{}`", t.trim()))))
        .collect::<Result<Vec<u32>, _>>()?;
    if exps.len() != ideal.nvars() {
        return Err(CliError::Usage(format!(
            "--bound has {} entries but the ring has {} variables",
            exps.len(),
            ideal.nvars()
        )));
    }
    Ok(Some(Monomial::new(exps)))
}

fn names(ring: &AmbientRing, vars: impl IntoIterator<Item = usize>) -> Vec<String> {
    vars.into_iter().map(|v| ring.name(v).to_string()).collect()
}

fn mono(ring: &AmbientRing, m: &Monomial) -> String {
    m.to_string_in(ring)
}

fn decompose(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let ring = ideal.ring();
    let irr: Vec<MonomialIdeal> = irreducible_decomposition(ideal)?.iter().map(|c| c.to_ideal(ring)).collect();
    let spd = standard_primary_decomposition(ideal)?;
    let mut t = format!("ideal: {ideal}\nirreducible components ({}):\n", irr.len());
    for c in &irr {
        let _ = writeln!(t, "  {c}");
    }
    let _ = writeln!(t, "primary components ({}):", spd.components.len());
    let mut primary = Vec::new();
    for c in &spd.components {
        let radical = names(ring, c.radical.iter().copied());
        let _ = writeln!(t, "  ({}): {}", radical.join(", "), c.ideal);
        primary.push(json!({ "radical": radical, "ideal": c.ideal }));
    }
    let _ = writeln!(t, "basis: {EXACT}");
    Ok(Report::ok(t, json!({ "ideal": ideal, "irreducible": irr, "primary": primary })))
}

fn height_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let h = height(ideal)?;
    let unmixed = is_height_unmixed(ideal)?;
    let t = format!("ideal: {ideal}\nheight: {h}\nunmixed: {unmixed}\nbasis: {EXACT}\n");
    Ok(Report::ok(t, json!({ "ideal": ideal, "height": h, "unmixed": unmixed })))
}

fn polarize_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let (p, _) = polarize(ideal)?;
    let t = format!("ideal: {ideal}\npolarization: {p}\nbasis: {EXACT}\n");
    Ok(Report::ok(t, json!({ "ideal": ideal, "polarization": p })))
}

fn dual_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let d = alexander_dual(ideal)?;
    let t = format!("ideal: {ideal}\nalexander dual: {d}\nbasis: {EXACT}\n");
    Ok(Report::ok(t, json!({ "ideal": ideal, "dual": d })))
}

fn localize_cmd(ideal: &MonomialIdeal, at: &str) -> Result<Report, CliError> {
    let ring = ideal.ring();
    let vars = at
        .split(',')
        .map(str::trim)
        .map(|v| ring.index_of(v).ok_or_else(|| CliError::Usage(format!("--at names unknown variable `{v}`"))))
        .collect::<Result<BTreeSet<usize>, _>>()?;
    let vars: Vec<usize> = vars.into_iter().collect();
    let l = ideal.localize(&vars)?;
    let prime = names(ring, vars.iter().copied());
    let t = format!("ideal: {ideal}\nprime: ({})\nlocalization: {l}\nbasis: {EXACT}\n", prime.join(", "));
    Ok(Report::ok(t, json!({ "ideal": ideal, "prime": prime, "localization": l })))
}

fn graph_cmd(spec: &str, vars: Option<&AmbientRing>, dot: bool) -> Result<Report, CliError> {
    let data = parse_graph_spec(spec, vars)?;
    let ring = data.graph().vertices();
    let ideal = data.build_ideal();
    let g = data.intersection_graph()?;
    let complement = g.complement().chordality();
    let cochordal = complement.is_chordal();
    let cm = is_cohen_macaulay_h2(&ideal)?;
    let witness: Option<Vec<String>> = match &complement {
        Chordality::NotChordal { cycle } => Some(cycle.iter().map(|&v| g.label(v).to_string()).collect()),
        Chordality::Chordal { .. } => None,
    };
    let edges: Vec<Value> = data
        .edges()
        .iter()
        .enumerate()
        .map(|(l, &(i, j))| json!({ "edge": [ring.name(i), ring.name(j)], "a": data.a()[l], "b": data.b()[l] }))
        .collect();
    let g_edges: Vec<[&str; 2]> = g.edges().into_iter().map(|(u, v)| [g.label(u), g.label(v)]).collect();
    let json = json!({
        "edges": edges,
        "ideal": ideal,
        "intersection_graph": { "vertices": g.vertices().names(), "edges": g_edges },
        "cochordal": cochordal,
        "complement_induced_cycle": witness,
        "cohen_macaulay": cm,
        "dot": g.to_dot(),
    });
    if dot {
        return Ok(Report::ok(g.to_dot(), json));
    }
    let mut t = String::from("data:\n");
    for (l, &(i, j)) in data.edges().iter().enumerate() {
        let _ = writeln!(t, "  {{{}, {}}} a={} b={}", ring.name(i), ring.name(j), data.a()[l], data.b()[l]);
    }
    let _ = writeln!(t, "ideal: {ideal}");
    let _ = writeln!(t, "G(a,b): {} vertices, {} edges", g.len(), g.num_edges());
    for [u, v] in &g_edges {
        let _ = writeln!(t, "  {u} -- {v}");
    }
    let _ = writeln!(t, "cochordal: {cochordal}");
    if let Some(c) = &witness {
        let _ = writeln!(t, "induced cycle in the complement: {}", c.join(" "));
    }
    let _ = writeln!(t, "cohen-macaulay (betti numbers): {cm}");
    let _ = writeln!(t, "basis: {EXACT}");
    let status = (cm != cochordal).then(|| (1, "Cohen-Macaulay test and cochordality disagree".to_string()));
    Ok(Report { text: t, json, status })
}

fn is_cm_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let h = height(ideal)?;
    let table = betti_numbers(ideal)?;
    let pd = table.quotient_projective_dimension();
    let cm = pd == h;
    let ty = if cm && h == 2 { Some(cm_type(ideal)?) } else { None };
    let mut t = format!("ideal: {ideal}\nheight: {h}\nprojective dimension of S/I: {pd}\ncohen-macaulay: {cm}\n");
    if let Some(ty) = ty {
        let _ = writeln!(t, "cohen-macaulay type: {ty}");
    }
    let _ = writeln!(t, "basis: {EXACT}");
    Ok(Report::ok(
        t,
        json!({ "ideal": ideal, "height": h, "projective_dimension": pd, "cohen_macaulay": cm, "type": ty }),
    ))
}

fn betti_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let ring = ideal.ring();
    let table = betti_numbers(ideal)?;
    let totals = table.quotient_totals();
    let mut t = format!(
        "ideal: {ideal}\nbetti numbers of S/I: {}\n",
        totals.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    let mut rows = Vec::new();
    for r in table.quotient_rows() {
        let degree = mono(ring, &Monomial::new(r.degree.clone()));
        let _ = writeln!(t, "  beta_{{{},{}}} = {}", r.index, degree, r.value);
        rows.push(json!({ "index": r.index, "degree": degree, "exponents": r.degree, "value": r.value }));
    }
    let _ = writeln!(t, "basis: {EXACT}");
    Ok(Report::ok(t, json!({ "ideal": ideal, "totals": totals, "graded": rows })))
}

fn hb_matrix(ideal: &MonomialIdeal) -> Result<SignedMonomialMatrix, CliError> {
    Ok(if ideal.nvars() == 2 { hb_matrix_xy(ideal)? } else { hb_matrix_general(ideal)? })
}

fn hb_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let x = hb_matrix(ideal)?;
    let how = if ideal.nvars() == 2 { "staircase construction" } else { "minimal Taylor syzygies" };
    let t = format!("ideal: {ideal}\nhilbert-burch matrix ({how}):\n{x}\nbasis: {EXACT}\n");
    Ok(Report::ok(t, json!({ "ideal": ideal, "matrix": x })))
}

fn trace_text(r: &cmtrace::TraceReport) -> String {
    let ring = r.ideal.ring();
    let mut t = format!("ideal: {}\nhilbert-burch matrix:\n{}\n", r.ideal, r.hb_matrix);
    let _ = writeln!(t, "trace: {}", r.trace);
    let _ = writeln!(t, "basis: {}", r.basis.describe());
    let _ = writeln!(t, "cohen-macaulay: {}", r.is_cm);
    let _ = writeln!(t, "gorenstein: {}", r.is_gorenstein);
    let _ = writeln!(t, "nearly gorenstein: {}", r.is_nearly_gorenstein);
    let _ = writeln!(t, "generically gorenstein: {}", r.is_generically_gorenstein);
    if let Some(w) = &r.generic_witness {
        let _ =
            writeln!(t, "  localization at ({}) is {}", names(ring, w.prime.iter().copied()).join(", "), w.localized);
    }
    let missing = r.missing_variables();
    if !missing.is_empty() && !r.trace.is_unit() {
        let _ = writeln!(t, "variables outside the trace: {}", names(ring, missing).join(", "));
    }
    t
}

fn trace_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let r = canonical_trace(ideal)?;
    let mut json = serde_json::to_value(&r).expect("serializes");
    json["basis_proven"] = json!(r.basis.is_proven());
    json["missing_variables"] = json!(names(ideal.ring(), r.missing_variables()));
    Ok(Report::ok(trace_text(&r), json))
}

fn classify_cmd(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let ring = ideal.ring();
    let cls = classify_ng_height2(ideal)?;
    let trace = if is_cohen_macaulay_h2(ideal)? { Some(canonical_trace(ideal)?) } else { None };
    let two_vars = if ideal.nvars() == 2 { classify_ng_two_vars(ideal).ok().map(|c| c.label) } else { None };
    let mut t = format!("ideal: {ideal}\ncase: {}\n", cls.label);
    if cls.support_label != cls.label {
        let _ = writeln!(t, "case on the support: {}", cls.support_label);
    }
    if !cls.permutation.is_empty() {
        let _ = writeln!(t, "pattern variables: {}", names(ring, cls.permutation.iter().copied()).join(", "));
    }
    let params: Vec<String> = [("a", cls.params.a), ("b", cls.params.b), ("c", cls.params.c), ("d", cls.params.d)]
        .iter()
        .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
        .collect();
    if !params.is_empty() {
        let _ = writeln!(t, "parameters: {}", params.join(" "));
    }
    if !cls.ambient_excess_vars.is_empty() {
        let _ = writeln!(
            t,
            "variables outside the support: {}",
            names(ring, cls.ambient_excess_vars.iter().copied()).join(", ")
        );
    }
    if let Some(l) = two_vars {
        let _ = writeln!(t, "two-variable case: {l}");
    }
    let mut status = None;
    let consistent = match &trace {
        Some(r) => {
            let _ = writeln!(t, "nearly gorenstein (trace): {}", r.is_nearly_gorenstein);
            let _ = writeln!(t, "basis: {}", r.basis.describe());
            let agree = r.is_nearly_gorenstein == cls.label.is_nearly_gorenstein()
                && two_vars.is_none_or(|l| l.is_nearly_gorenstein() == r.is_nearly_gorenstein);
            if r.basis.is_proven() {
                let _ = writeln!(t, "consistent: {agree}");
                if !agree {
                    status = Some((1, "classification and trace disagree".to_string()));
                }
                Some(agree)
            } else {
                let _ = writeln!(t, "consistent: not decided (trace formula conjectural here)");
                None
            }
        }
        None => {
            let _ = writeln!(t, "nearly gorenstein (trace): not computed, S/I is not Cohen-Macaulay");
            let _ = writeln!(t, "basis: {EXACT}");
            None
        }
    };
    let json = json!({
        "ideal": ideal,
        "classification": cls,
        "two_variable_case": two_vars,
        "trace_nearly_gorenstein": trace.as_ref().map(|r| r.is_nearly_gorenstein),
        "basis": trace.as_ref().map(|r| r.basis),
        "consistent": consistent,
    });
    Ok(Report { text: t, json, status })
}

fn verification_text(r: &VerificationReport) -> String {
    let ring = r.ideal.ring();
    let fmt_exps = |e: &[u32]| mono(ring, &Monomial::new(e.to_vec()));
    let mut t = format!("statement: {}\nideal: {}\n", r.statement, r.ideal);
    let _ = writeln!(t, "bound: {} (exponents {:?})", fmt_exps(&r.bound), r.bound);
    match &r.window {
        Some(w) => {
            let _ = writeln!(t, "comparison window: {}", fmt_exps(w));
        }
        None => {
            let _ = writeln!(t, "comparison window: empty");
        }
    }
    let verdict = match r.verdict {
        Verdict::ConfirmedToBound => "confirmed to bound",
        Verdict::Refuted => "REFUTED",
        Verdict::Inconclusive => "inconclusive",
    };
    let _ = writeln!(t, "verdict: {verdict}");
    if let Some(w) = &r.witness {
        let _ = writeln!(t, "witness: {} ({})", w.monomial, w.side);
    }
    let _ = writeln!(t, "kernel entries: {}", r.entries_ideal);
    let _ = writeln!(t, "formula side: {}", r.formula_ideal);
    let _ = writeln!(t, "kernel generators: {}, degrees scanned: {}", r.kernel_generators, r.degrees_scanned);
    if !r.unchecked.is_empty() {
        let _ = writeln!(t, "outside the window: {}", r.unchecked.join(", "));
    }
    t
}

fn verify_kernel_cmd(ideal: &MonomialIdeal, bound: Option<&Monomial>, cap: usize) -> Result<Report, CliError> {
    let r = verify_kernel_theorem_xy(ideal, bound, cap)?;
    let mut t = verification_text(&r);
    let _ = writeln!(t, "basis: {}; oracle checked up to the bound", TraceBasis::TwoVariables.describe());
    let status = (r.verdict == Verdict::Refuted).then(|| (1, "the two-variable kernel theorem failed".to_string()));
    Ok(Report { text: t, json: serde_json::to_value(&r).expect("serializes"), status })
}

fn verify_inclusion_cmd(ideal: &MonomialIdeal, bound: Option<&Monomial>, cap: usize) -> Result<Report, CliError> {
    let r = verify_inclusion(ideal, bound, cap)?;
    let mut t = verification_text(&r.inclusion);
    let _ = writeln!(
        t,
        "c-vectors annihilated: {}/{}",
        r.c_vectors_checked - r.c_vector_failures.len(),
        r.c_vectors_checked
    );
    let _ = writeln!(t, "holds: {}", r.holds());
    let _ = writeln!(t, "basis: proven inclusion; oracle checked up to the bound, c-vectors checked symbolically");
    let mut json = serde_json::to_value(&r).expect("serializes");
    json["holds"] = json!(r.holds());
    let status = (!r.holds()).then(|| (1, "the inclusion of minors failed".to_string()));
    Ok(Report { text: t, json, status })
}

fn verify_conjecture_cmd(ideal: &MonomialIdeal, bound: Option<&Monomial>, cap: usize) -> Result<Report, CliError> {
    let r = verify_conjecture(ideal, bound, cap)?;
    let basis = if ideal.support().len() == 2 {
        TraceBasis::TwoVariables
    } else if is_generically_gorenstein(ideal)?.holds {
        TraceBasis::GenericallyGorenstein
    } else {
        TraceBasis::ConjecturalOnly
    };
    let mut t = verification_text(&r);
    let _ = writeln!(t, "basis: {}", basis.describe());
    let mut json = serde_json::to_value(&r).expect("serializes");
    json["basis"] = json!(basis);
    let status = (r.verdict == Verdict::Refuted).then(|| (4, "REFUTATION FOUND".to_string()));
    Ok(Report { text: t, json, status })
}

fn sweep_xy(max_exp: u32) -> Result<Report, CliError> {
    let family = families::xy_three_generator_family(max_exp);
    let rows: Vec<(u32, u32, u32, u32, usize, bool, bool)> = family
        .par_iter()
        .map(|inst| {
            let mu = inst.ideal.num_gens();
            let trace_ng = is_nearly_gorenstein_h2(&inst.ideal)?;
            let predicted = if mu == 3 {
                families::xy_conditions(inst.a, inst.b, inst.c, inst.d)
            } else {
                classify_ng_two_vars(&inst.ideal)?.label.is_nearly_gorenstein()
            };
            Ok((inst.a, inst.b, inst.c, inst.d, mu, trace_ng, predicted))
        })
        .collect::<cmtrace::Result<_>>()?;
    let mismatches = rows.iter().filter(|r| r.5 != r.6).count();
    let mut t = String::from("  a  b  c  d  mu  trace-NG  predicted\n");
    for &(a, b, c, d, mu, ng, p) in &rows {
        let flag = if ng == p { "" } else { "  MISMATCH" };
        let _ = writeln!(t, "{a:>3}{b:>3}{c:>3}{d:>3}{mu:>4}  {ng:<8}  {p}{flag}");
    }
    let _ = writeln!(t, "instances: {}, mismatches: {mismatches}", rows.len());
    let _ = writeln!(t, "basis: {}", TraceBasis::TwoVariables.describe());
    let json = json!({
        "family": "xy",
        "max_exp": max_exp,
        "instances": rows.len(),
        "mismatches": mismatches,
        "rows": rows.iter().map(|&(a, b, c, d, mu, ng, p)| json!({
            "a": a, "b": b, "c": c, "d": d, "mu": mu, "trace_nearly_gorenstein": ng, "predicted": p
        })).collect::<Vec<_>>(),
    });
    let status = (mismatches > 0).then(|| (1, format!("{mismatches} classification mismatches")));
    Ok(Report { text: t, json, status })
}

fn random_non_pattern(count: usize, max_exp: u32, seed: u64) -> Result<Vec<MonomialIdeal>, CliError> {
    let mut rng = seeded_rng(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let limit = 1000 * count.max(1) + 10_000;
    for _ in 0..limit {
        if out.len() == count {
            return Ok(out);
        }
        let n = rng.gen_range(2..=4);
        let i = families::random_small_edge_data(&mut rng, n, 6, max_exp).build_ideal();
        if i.num_gens() > 4 || !is_cohen_macaulay_h2(&i)? {
            continue;
        }
        if classify_ng_height2(&i)?.label != NgCase::NotNearlyGorenstein {
            continue;
        }
        if seen.insert(i.gens().to_vec()) {
            out.push(i);
        }
    }
    if out.len() == count {
        Ok(out)
    } else {
        Err(CliError::Lib(cmtrace::Error::Resource(format!(
            "found only {} distinct non-pattern instances after {limit} draws",
            out.len()
        ))))
    }
}

fn sweep_height2(max_param: u32, count: usize, seed: u64) -> Result<Report, CliError> {
    let patterns = families::pattern_instances(max_param);
    let pattern_rows: Vec<(NgCase, &MonomialIdeal, bool)> =
        patterns.par_iter().map(|(c, i)| Ok((*c, i, is_nearly_gorenstein_h2(i)?))).collect::<cmtrace::Result<_>>()?;
    let randoms = random_non_pattern(count, max_param, seed)?;
    let random_rows: Vec<bool> = randoms.par_iter().map(is_nearly_gorenstein_h2).collect::<cmtrace::Result<_>>()?;

    let mut t = String::from("pattern instances (expected nearly gorenstein):\n");
    let mut per_case: Vec<(NgCase, usize, usize)> = Vec::new();
    for &(c, _, ng) in &pattern_rows {
        match per_case.iter_mut().find(|e| e.0 == c) {
            Some(e) => {
                e.1 += 1;
                e.2 += usize::from(!ng);
            }
            None => per_case.push((c, 1, usize::from(!ng))),
        }
    }
    for (c, n, bad) in &per_case {
        let _ = writeln!(t, "  {c:<20} {n:>5} instances, {bad} mismatches");
    }
    for (c, i, ng) in &pattern_rows {
        if !ng {
            let _ = writeln!(t, "  MISMATCH {c}: {i}");
        }
    }
    let random_bad = random_rows.iter().filter(|&&ng| ng).count();
    let _ = writeln!(t, "random non-pattern instances (expected not nearly gorenstein, seed {seed}):");
    let _ = writeln!(t, "  {:<20} {:>5} instances, {random_bad} mismatches", "NotNearlyGorenstein", randoms.len());
    for (i, &ng) in randoms.iter().zip(&random_rows) {
        if ng {
            let _ = writeln!(t, "  MISMATCH {i}");
        }
    }
    let mismatches = pattern_rows.iter().filter(|r| !r.2).count() + random_bad;
    let _ = writeln!(t, "instances: {}, mismatches: {mismatches}", pattern_rows.len() + randoms.len());
    let _ = writeln!(t, "basis: {}", TraceBasis::GenericallyGorenstein.describe());
    let json = json!({
        "family": "height2",
        "max_exp": max_param,
        "seed": seed,
        "instances": pattern_rows.len() + randoms.len(),
        "mismatches": mismatches,
        "patterns": pattern_rows.iter().map(|(c, i, ng)| json!({
            "case": c, "ideal": i, "trace_nearly_gorenstein": ng
        })).collect::<Vec<_>>(),
        "random": randoms.iter().zip(&random_rows).map(|(i, ng)| json!({
            "ideal": i, "trace_nearly_gorenstein": ng
        })).collect::<Vec<_>>(),
    });
    let status = (mismatches > 0).then(|| (1, format!("{mismatches} classification mismatches")));
    Ok(Report { text: t, json, status })
}
