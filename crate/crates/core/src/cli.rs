//! Command-line front end. [`run`] returns the exit code and the report text
//! so it can be tested without a process.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 failed internal
//! cross-check, 4 graphs distinguished.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::distinguish::{distinguish, Graph, Mode, Verdict};
use crate::error::Error;
use crate::hypergraph::{parse_hypergraph, Hypergraph};
use crate::linegraph::line_graph_of;
use crate::oracle::{oracle_report, DEFAULT_BUDGET};
use crate::poly::{char_poly, Rational};
use crate::spectra::{
    approx, bipartite_square_nonnegative, default_tolerance, obvious_eigenvalues, pole_audit,
    ramanujan_check, riemann_hypothesis_check, verify_char_relations, Carrier,
};
use crate::zeta::{
    bipartite_reciprocal, cross_validate, zeta_core, zeta_via_bass, zeta_via_hashimoto,
    zeta_via_linegraph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_DISTINGUISHED: i32 = 4;

pub const USAGE: &str = "\
usage: hyperzeta <command> [args]

commands:
  zeta <file.hg> [--route linegraph|bass|hashimoto|all] [--seeds N]
  oracle <file.hg> [--order M]
  spectra <file.hg>
  ramanujan <file.hg> [--tolerance T]
  distinguish <g1.hg> <g2.hg> [--k K] [--mode disjoint-pairs|all-singletons|all-at-once]
  validate <file.hg>
";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteChoice {
    LineGraph,
    Bass,
    Hashimoto,
    All,
}

impl FromStr for RouteChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "linegraph" => Ok(RouteChoice::LineGraph),
            "bass" => Ok(RouteChoice::Bass),
            "hashimoto" => Ok(RouteChoice::Hashimoto),
            "all" => Ok(RouteChoice::All),
            _ => Err(format!("unknown route {s:?}")),
        }
    }
}

/// A parsed command line; every flag is checked before any computation.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Zeta { file: String, route: RouteChoice, seeds: u64 },
    Oracle { file: String, order: usize },
    Spectra { file: String },
    Ramanujan { file: String, tolerance: Rational },
    Distinguish { first: String, second: String, k: usize, mode: Mode },
    Validate { file: String },
}

/// Parses `0.001`, `1e-9`, `3/7` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("cannot parse {s:?} as a number");
    if s.contains('/') {
        return Rational::from_str(s).map_err(|_| bad());
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int_part}{frac_part}");
    let num = BigInt::from_str(&digits).map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        Rational::from_integer(num * ten.pow(scale as u32))
    } else {
        Rational::new(num, ten.pow(scale.unsigned_abs()))
    })
}

struct Args<'a> {
    positional: Vec<&'a str>,
    flags: Vec<(&'a str, &'a str)>,
}

fn split_args<'a>(args: &'a [String], allowed: &[&str]) -> Result<Args<'a>, String> {
    let mut positional = Vec::new();
    let mut flags = Vec::new();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if let Some(name) = a.strip_prefix("--") {
            if !allowed.contains(&name) {
                return Err(format!("unknown flag --{name}"));
            }
            let value = it.next().ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.push((name, value.as_str()));
        } else {
            positional.push(a.as_str());
        }
    }
    Ok(Args { positional, flags })
}

impl<'a> Args<'a> {
    fn flag(&self, name: &str) -> Option<&'a str> {
        self.flags.iter().rev().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    fn one_file(&self, cmd: &str) -> Result<String, String> {
        match self.positional.as_slice() {
            [f] => Ok(f.to_string()),
            _ => Err(format!("{cmd} takes exactly one input file")),
        }
    }
}

fn parse_num<T: FromStr>(name: &str, v: Option<&str>, default: T) -> Result<T, String> {
    match v {
        None => Ok(default),
        Some(s) => s.parse().map_err(|_| format!("--{name}: cannot parse {s:?}")),
    }
}

pub fn parse_command(args: &[String]) -> Result<Command, String> {
    let (cmd, rest) = args.split_first().ok_or("missing command")?;
    match cmd.as_str() {
        "zeta" => {
            let a = split_args(rest, &["route", "seeds"])?;
            Ok(Command::Zeta {
                file: a.one_file("zeta")?,
                route: a.flag("route").map_or(Ok(RouteChoice::All), str::parse)?,
                seeds: parse_num("seeds", a.flag("seeds"), 10)?,
            })
        }
        "oracle" => {
            let a = split_args(rest, &["order"])?;
            let order = parse_num("order", a.flag("order"), 10)?;
            if order == 0 {
                return Err("--order must be positive".into());
            }
            Ok(Command::Oracle { file: a.one_file("oracle")?, order })
        }
        "spectra" => {
            let a = split_args(rest, &[])?;
            Ok(Command::Spectra { file: a.one_file("spectra")? })
        }
        "ramanujan" => {
            let a = split_args(rest, &["tolerance"])?;
            let tolerance = match a.flag("tolerance") {
                Some(t) => parse_rational(t)?,
                None => default_tolerance(),
            };
            Ok(Command::Ramanujan { file: a.one_file("ramanujan")?, tolerance })
        }
        "distinguish" => {
            let a = split_args(rest, &["k", "mode"])?;
            let [first, second] = a.positional.as_slice() else {
                return Err("distinguish takes two graph files".into());
            };
            let k = parse_num("k", a.flag("k"), 3)?;
            if k < 3 {
                return Err("--k must be at least 3".into());
            }
            let mode = match a.flag("mode") {
                Some(m) => Mode::from_str(m).map_err(|e| e.to_string())?,
                None => Mode::DisjointPairs,
            };
            Ok(Command::Distinguish { first: first.to_string(), second: second.to_string(), k, mode })
        }
        "validate" => {
            let a = split_args(rest, &[])?;
            Ok(Command::Validate { file: a.one_file("validate")? })
        }
        "help" | "--help" | "-h" => Err(String::new()),
        other => Err(format!("unknown command {other:?}")),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Mismatch(_) | Error::Inconsistent(_) => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

fn load(path: &str) -> Result<Hypergraph, (i32, String)> {
    let text = std::fs::read_to_string(Path::new(path))
        .map_err(|e| (EXIT_INVALID, format!("error: cannot read {path}: {e}\n")))?;
    parse_hypergraph(&text).map_err(|e| (EXIT_INVALID, format!("error: {path}: {e}\n")))
}

/// Runs a command line (without the program name).
pub fn run(args: &[String]) -> (i32, String) {
    let cmd = match parse_command(args) {
        Ok(c) => c,
        Err(msg) if msg.is_empty() => return (EXIT_OK, USAGE.to_string()),
        Err(msg) => return (EXIT_USAGE, format!("error: {msg}\n{USAGE}")),
    };
    match execute(&cmd) {
        Ok(r) => r,
        Err((code, msg)) => (code, msg),
    }
}

type Outcome = Result<(i32, String), (i32, String)>;

fn fail(out: String, e: Error) -> (i32, String) {
    (exit_code_for(&e), format!("{out}error: {e}\n"))
}

pub fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Zeta { file, route, seeds } => zeta_cmd(file, *route, *seeds),
        Command::Oracle { file, order } => oracle_cmd(file, *order),
        Command::Spectra { file } => spectra_cmd(file),
        Command::Ramanujan { file, tolerance } => ramanujan_cmd(file, tolerance),
        Command::Distinguish { first, second, k, mode } => distinguish_cmd(first, second, *k, mode),
        Command::Validate { file } => validate_cmd(file),
    }
}

fn header(out: &mut String, kind: &str, file: &str, h: &Hypergraph) {
    let _ = writeln!(out, "report: {kind}");
    let _ = writeln!(out, "file: {file}");
    let _ = writeln!(out, "vertices: {}", h.n_vertices());
    let _ = writeln!(out, "hyperedges: {}", h.n_hyperedges());
}

fn zeta_cmd(file: &str, route: RouteChoice, seeds: u64) -> Outcome {
    let h = load(file)?;
    let mut out = String::new();
    header(&mut out, "zeta", file, &h);
    let wants = |r: RouteChoice| route == RouteChoice::All || route == r;
    let step = |out: &mut String, e: Error| fail(std::mem::take(out), e);
    if wants(RouteChoice::LineGraph) {
        let z = zeta_via_linegraph(&h).map_err(|e| step(&mut out, e))?;
        let _ = writeln!(out, "route linegraph: {}", z.reciprocal.to_coeff_string());
    }
    if wants(RouteChoice::Bass) {
        let z = zeta_via_bass(&h).map_err(|e| step(&mut out, e))?;
        let _ = writeln!(out, "route bass: {}", z.reciprocal.to_coeff_string());
    }
    if wants(RouteChoice::Hashimoto) {
        match zeta_via_hashimoto(&h) {
            Ok((f1, f2)) => {
                let _ = writeln!(out, "route hashimoto1: {}", f1.reciprocal.to_coeff_string());
                let _ = writeln!(out, "route hashimoto2: {}", f2.reciprocal.to_coeff_string());
            }
            Err(Error::NotRegular) if route == RouteChoice::All => {
                let _ = writeln!(out, "route hashimoto: not-applicable (not regular)");
            }
            Err(e) => return Err(step(&mut out, e)),
        }
    }
    let _ = writeln!(out, "section: cross-validation");
    let cv = match cross_validate(&h, seeds) {
        Ok(cv) => cv,
        Err(Error::Mismatch(diff)) => {
            let _ = writeln!(out, "routes: MISMATCH");
            for line in diff.lines() {
                let _ = writeln!(out, "  {line}");
            }
            return Ok((EXIT_MISMATCH, out));
        }
        Err(e) => return Err(step(&mut out, e)),
    };
    let _ = writeln!(out, "routes: AGREE ({} routes)", cv.routes.len());
    let _ = writeln!(out, "reciprocal: {}", cv.reciprocal.to_coeff_string());
    let _ = writeln!(out, "bipartite-reciprocal: {}", cv.bipartite_reciprocal.to_coeff_string());
    let _ = writeln!(out, "pretty: {}", cv.reciprocal.pretty("u"));
    let _ = writeln!(out, "degree: {}", cv.degree);
    let _ = writeln!(out, "total-order: {}", cv.total_order);
    let _ = writeln!(out, "degree-law: {}", pass(cv.degree_law_holds));
    let _ = writeln!(
        out,
        "graph-parity: {}",
        if cv.not_a_graph_zeta { "odd degree, no graph has this zeta function" } else { "even degree" }
    );
    let _ = writeln!(out, "dual-identity: {}", pass(cv.dual_agrees));
    let _ = writeln!(out, "orientation-seeds: {} {}", cv.seeds_checked, pass(true));
    let even = cv.reciprocal.is_even();
    let _ = writeln!(out, "even: {even}");
    let _ = writeln!(out, "unimodular-implied: {even}");
    for w in &cv.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let ok = cv.degree_law_holds && cv.dual_agrees;
    Ok((if ok { EXIT_OK } else { EXIT_MISMATCH }, out))
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn oracle_cmd(file: &str, order: usize) -> Outcome {
    let h = load(file)?;
    let mut out = String::new();
    header(&mut out, "oracle", file, &h);
    let r = oracle_report(&h, order, DEFAULT_BUDGET).map_err(|e| fail(out.clone(), e))?;
    let _ = writeln!(out, "reciprocal: {}", r.reciprocal.to_coeff_string());
    let _ = writeln!(out, "order: {order}");
    let _ = writeln!(out, "{:>4} {:>10} {:>8} {:>12} {:>12} {:>12}", "m", "N_m", "primes", "series", "euler", "trace-exp");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{:>4} {:>10} {:>8} {:>12} {:>12} {:>12}",
            row.length, row.closed_paths, row.prime_cycles, row.series, row.euler, row.trace_exp
        );
    }
    let _ = writeln!(out, "euler-product: {}", if r.euler_agrees { "AGREE" } else { "MISMATCH" });
    let _ = writeln!(out, "trace-identity: {}", if r.trace_agrees { "AGREE" } else { "MISMATCH" });
    Ok((if r.all_agree() { EXIT_OK } else { EXIT_MISMATCH }, out))
}

fn spectra_cmd(file: &str) -> Outcome {
    let h = load(file)?;
    let mut out = String::new();
    header(&mut out, "spectra", file, &h);
    let e = |out: &String, e: Error| fail(out.clone(), e);
    let p = char_poly(&h.adjacency_matrix()).map_err(|x| e(&out, x))?;
    let ps = char_poly(&h.dual().adjacency_matrix()).map_err(|x| e(&out, x))?;
    let ab = h.bipartite().adjacency_matrix();
    let q = char_poly(&(&ab * &ab)).map_err(|x| e(&out, x))?;
    let _ = writeln!(out, "charpoly-A: {}", p.to_coeff_string());
    let _ = writeln!(out, "charpoly-A*: {}", ps.to_coeff_string());
    let _ = writeln!(out, "charpoly-AB2: {}", q.to_coeff_string());
    let nonneg = bipartite_square_nonnegative(&h).map_err(|x| e(&out, x))?;
    let _ = writeln!(out, "AB2-nonnegative: {}", pass(nonneg));
    match h.regularity() {
        Some((d, r)) => {
            let rel = verify_char_relations(&h).map_err(|x| e(&out, x))?;
            let _ = writeln!(out, "regular: ({d},{r})");
            let _ = writeln!(out, "eq2: {}", pass(rel.eq2));
            let _ = writeln!(out, "eq3: {}", pass(rel.eq3));
            let _ = writeln!(out, "eq4: {}", pass(rel.eq4));
            match obvious_eigenvalues(&h).map_err(|x| e(&out, x))? {
                Some(o) => {
                    let on = if o.carrier == Carrier::Dual { "dual" } else { "hypergraph" };
                    let _ = writeln!(out, "obvious-eigenvalue: {} x{} on {on}", o.value, o.multiplicity);
                }
                None => {
                    let _ = writeln!(out, "obvious-eigenvalue: none");
                }
            }
            let ok = rel.eq2 && rel.eq3 && rel.eq4 && nonneg;
            Ok((if ok { EXIT_OK } else { EXIT_MISMATCH }, out))
        }
        None => {
            let _ = writeln!(out, "regular: no");
            let _ = writeln!(out, "eq2: not-applicable (not regular)");
            let _ = writeln!(out, "eq3: not-applicable (not regular)");
            let _ = writeln!(out, "eq4: not-applicable (not regular)");
            Ok((if nonneg { EXIT_OK } else { EXIT_MISMATCH }, out))
        }
    }
}

fn ramanujan_cmd(file: &str, tolerance: &Rational) -> Outcome {
    let h = load(file)?;
    let mut out = String::new();
    header(&mut out, "ramanujan", file, &h);
    let s = ramanujan_check(&h, tolerance).map_err(|e| fail(out.clone(), e))?;
    let _ = writeln!(out, "regular: ({},{})", s.d, s.r);
    let _ = writeln!(out, "q: {}", s.q);
    let _ = writeln!(out, "tolerance: {}", s.tolerance);
    let _ = writeln!(out, "charpoly-A: {}", s.char_poly.to_coeff_string());
    let _ = writeln!(out, "lambda1: {}", s.lambda1);
    match &s.lambda2_bound_check.lambda2 {
        Some(l2) => {
            let _ = writeln!(out, "lambda2: {l2} (~{:.6})", approx(l2));
        }
        None => {
            let _ = writeln!(out, "lambda2: none");
        }
    }
    let _ = writeln!(
        out,
        "alon-boppana: {} (~{:.6}) exceeded-by-lambda2: {}",
        s.alon_boppana,
        s.alon_boppana.to_f64(),
        s.lambda2_bound_check.exceeds_bound
    );
    if let Some(o) = s.obvious {
        let on = if o.carrier == Carrier::Dual { "dual" } else { "hypergraph" };
        let _ = writeln!(out, "obvious-eigenvalue: {} x{} on {on}", o.value, o.multiplicity);
    }
    let _ = writeln!(out, "violating-eigenvalues: {}", s.violating);
    let _ = writeln!(out, "boundary-band-eigenvalues: {}", s.boundary_band);
    let _ = writeln!(out, "ramanujan: {}", s.ramanujan);
    let rh = riemann_hypothesis_check(&h).map_err(|e| fail(out.clone(), e))?;
    let _ = writeln!(out, "riemann-hypothesis: {rh}");
    let p = pole_audit(&h).map_err(|e| fail(out.clone(), e))?;
    let _ = writeln!(out, "section: pole-audit");
    if p.dualized {
        let _ = writeln!(out, "dualized: true");
    }
    let _ = writeln!(out, "pole-u=1: {} (prefactor {})", p.mult_at_1, p.prefactor_mult_at_1);
    let _ = writeln!(
        out,
        "pole-u=-1/{}: {} (prefactor {})",
        p.r - 1,
        p.mult_at_neg_inv_r_minus_1,
        p.prefactor_mult_at_neg_inv_r_minus_1
    );
    for root in &p.det_part_roots {
        let _ = writeln!(
            out,
            "det-root: lambda {} x{}: {}",
            root.eigenvalue, root.multiplicity, root.description
        );
    }
    let _ = writeln!(out, "off-circle: {}", p.off_circle().count());
    Ok((EXIT_OK, out))
}

fn load_graph(path: &str) -> Result<Graph, (i32, String)> {
    let h = load(path)?;
    Graph::from_hypergraph(h).map_err(|e| (EXIT_INVALID, format!("error: {path}: {e}\n")))
}

fn distinguish_cmd(first: &str, second: &str, k: usize, mode: &Mode) -> Outcome {
    let g1 = load_graph(first)?;
    let g2 = load_graph(second)?;
    let mut out = String::new();
    let _ = writeln!(out, "report: distinguish");
    let _ = writeln!(out, "first: {first}");
    let _ = writeln!(out, "second: {second}");
    let _ = writeln!(out, "k: {k}");
    let _ = writeln!(out, "mode: {mode}");
    let c = distinguish(&g1, &g2, k, mode).map_err(|e| fail(out.clone(), e))?;
    let _ = writeln!(out, "cospectral: {}", c.cospectral);
    let _ = writeln!(out, "same-ihara: {}", c.same_ihara);
    for (name, m) in [("first", &c.first), ("second", &c.second)] {
        let _ = writeln!(out, "{name}-choices: {}", m.choices.len());
        for p in &m.polys {
            let _ = writeln!(out, "{name}-invariant: {}", p.to_coeff_string());
        }
        for (i, w) in &m.warnings {
            let _ = writeln!(out, "{name}-warning: choice {i}: {w}");
        }
    }
    let _ = writeln!(out, "invariant-multisets-equal: {}", c.invariant_multisets_equal);
    let _ = writeln!(out, "verdict: {}", c.verdict);
    let code = if c.verdict == Verdict::Distinguished { EXIT_DISTINGUISHED } else { EXIT_OK };
    Ok((code, out))
}

fn validate_cmd(file: &str) -> Outcome {
    let h = load(file)?;
    let mut out = String::new();
    header(&mut out, "validate", file, &h);
    let v = h.validate();
    let _ = writeln!(out, "connected: {}", v.connected);
    let _ = writeln!(out, "min-vertex-degree: {}", v.min_vertex_degree);
    let _ = writeln!(out, "min-order: {}", v.min_order);
    let _ = writeln!(out, "total-order: {}", h.total_order());
    let _ = writeln!(out, "euler-characteristic: {}", h.euler_chi_bipartite());
    match h.regularity() {
        Some((d, r)) => {
            let _ = writeln!(out, "regular: ({d},{r})");
        }
        None => {
            let _ = writeln!(out, "regular: no");
        }
    }
    for f in v.failures() {
        let _ = writeln!(out, "warning: {f}");
    }
    match zeta_core(&h) {
        Ok((core, warnings)) => {
            for w in warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            let l = line_graph_of(&core);
            let _ = writeln!(out, "line-graph-vertices: {}", l.n_vertices());
            let _ = writeln!(out, "line-graph-arcs: {}", l.arc_count());
            let scc = l.strongly_connected_components().len();
            if scc != 1 {
                let _ = writeln!(out, "warning: line graph not strongly connected ({scc} components)");
            }
            let bip_even = bipartite_reciprocal(&core).map(|p| p.is_even()).unwrap_or(false);
            let _ = writeln!(out, "bipartite-zeta-even: {bip_even}");
            let _ = writeln!(out, "zeta-ready: true");
            Ok((EXIT_OK, out))
        }
        Err(e) => {
            let _ = writeln!(out, "zeta-ready: false");
            let _ = writeln!(out, "error: {e}");
            Ok((EXIT_INVALID, out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn parses_commands() {
        assert_eq!(
            parse_command(&s(&["zeta", "a.hg", "--route", "bass"])),
            Ok(Command::Zeta { file: "a.hg".into(), route: RouteChoice::Bass, seeds: 10 })
        );
        assert!(parse_command(&s(&["zeta"])).is_err());
        assert!(parse_command(&s(&["zeta", "a.hg", "--route", "x"])).is_err());
        assert!(parse_command(&s(&["zeta", "a.hg", "--bogus", "1"])).is_err());
        assert!(parse_command(&s(&["distinguish", "a", "b", "--k", "2"])).is_err());
        assert!(parse_command(&s(&["frobnicate"])).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1e-9").unwrap(), ratio(1, 1_000_000_000));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("3/7").unwrap(), ratio(3, 7));
        assert_eq!(parse_rational("2.5e1").unwrap(), ratio(25, 1));
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn usage_exit_codes() {
        assert_eq!(run(&s(&[])).0, EXIT_USAGE);
        assert_eq!(run(&s(&["--help"])).0, EXIT_OK);
        assert_eq!(run(&s(&["validate", "/nonexistent.hg"])).0, EXIT_INVALID);
    }
}
