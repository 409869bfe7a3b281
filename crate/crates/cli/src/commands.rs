use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use pgmm::bound::supply_degrees;
use pgmm::cover::BRUTE_FORCE_LIMIT;
use pgmm::{
    brute_force_max_f, build_sets, check_tpp, cu_multiply, degrees_for, enumerate_aliasing,
    exact_max_f, formula_f, heuristic_cover, predicted_output, reduce_independent_set, solve_omega,
    verify_certificate, AliasingSet, BoundResult, Certificate, Cover, DegreeSpectrum, EntryIndex,
    ExactOptions, GroupDescriptor, IndexingTriple, IntMatrix, PartialPatternInstance, SimpleGraph,
    SolveMethod, SolveReport, WorkBudget,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{Command, ConstructKind, ConstructionKind, CoverMethod, Family, OmegaArgs, RunConfig};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Largest n for which `reproduce` enumerates aliasing and solves exactly.
const REPRODUCE_ENUMERABLE: u32 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Budget(msg) => f.write_str(msg),
        }
    }
}

impl From<pgmm::Error> for CliError {
    fn from(err: pgmm::Error) -> Self {
        match err {
            pgmm::Error::BudgetExceeded { .. } => CliError::Budget(err.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Input(format!("invalid JSON: {err}"))
    }
}

type CliResult<T> = Result<T, CliError>;

impl RunConfig {
    fn budget(&self) -> WorkBudget {
        WorkBudget {
            tpp_multiplications: self.budget_tpp,
            aliasing_pairs: self.budget_pairs,
        }
    }

    fn exact_options(&self) -> ExactOptions {
        ExactOptions {
            node_limit: self.node_limit,
            shuffle_seed: None,
            threads: usize::try_from(self.threads).unwrap_or(usize::MAX),
        }
    }
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: invalid JSON: {e}", path.display())))
}

fn read_as<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    serde_json::from_value(read_json(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_subsets(path: &Path) -> CliResult<IndexingTriple> {
    IndexingTriple::from_json_value(read_json(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn print_json(value: &impl serde::Serialize) -> CliResult<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// Single-line JSON for outputs meant to be fed back in as input files.
fn print_data(value: &impl serde::Serialize) -> CliResult<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

pub fn run(cfg: &RunConfig, command: Command) -> CliResult<ExitCode> {
    match command {
        Command::TppCheck { subsets } => tpp_check(cfg, &subsets),
        Command::Aliasing { subsets, instance } => aliasing(cfg, &subsets, instance),
        Command::Cover {
            file,
            method,
            exact,
            heuristic,
        } => {
            let method = match (exact, heuristic) {
                (true, _) => CoverMethod::Exact,
                (_, true) => CoverMethod::Heuristic,
                _ => method,
            };
            cover(cfg, &file, method)
        }
        Command::OmegaBound(args) => omega_bound(cfg, &args),
        Command::Reproduce => reproduce(cfg),
        Command::MultiplyDemo { subsets, cover } => multiply_demo(cfg, &subsets, cover.as_deref()),
        Command::ReduceIndependentSet { graph } => {
            let graph: SimpleGraph = read_as(&graph)?;
            print_data(&reduce_independent_set(&graph))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCertificate {
            instance,
            certificate,
            k,
        } => {
            let inst = load_instance(cfg, &instance)?;
            let cert: Certificate = certificate.parse()?;
            let ok = verify_certificate(&inst, &cert, k)?;
            if cfg.json {
                print_json(&json!({ "accepted": ok, "k": k }))?;
            } else {
                println!("certificate {}", if ok { "accepted" } else { "rejected" });
            }
            Ok(verdict(ok))
        }
        Command::Construct {
            kind: ConstructKind::Wreath { n, relaxed, bounds },
        } => construct_wreath(cfg, n, relaxed, bounds),
    }
}

fn tpp_check(cfg: &RunConfig, path: &Path) -> CliResult<ExitCode> {
    let triple = read_subsets(path)?;
    let budget = cfg.budget();
    let tpp = check_tpp(&triple, &budget)?;
    // A negative verdict is still reported when counting the triples would
    // exceed the pair budget.
    let count = if tpp {
        Some(0)
    } else {
        match enumerate_aliasing(&triple, &budget) {
            Ok(set) => Some(set.len()),
            Err(pgmm::Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    };
    if cfg.json {
        print_json(&json!({ "tpp": tpp, "aliasing_count": count }))?;
    } else if tpp {
        println!("TPP: yes");
    } else {
        match count {
            Some(c) => println!("TPP: no; {c} aliasing triples"),
            None => println!("TPP: no; aliasing count exceeds the pair budget"),
        }
    }
    Ok(verdict(tpp))
}

fn aliasing(cfg: &RunConfig, path: &Path, as_instance: bool) -> CliResult<ExitCode> {
    let triple = read_subsets(path)?;
    let set = enumerate_aliasing(&triple, &cfg.budget())?;
    if as_instance {
        print_data(&PartialPatternInstance::from_aliasing(&set))?;
    } else if cfg.json {
        print_data(&set)?;
    } else {
        let (m, n, p) = set.dims();
        println!("{} aliasing triples ({m}x{n} by {n}x{p})", set.len());
        for t in set.triples() {
            println!("{t}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Accepts an instance, an aliasing set, or a subsets file.
fn load_instance(cfg: &RunConfig, path: &Path) -> CliResult<PartialPatternInstance> {
    let value = read_json(path)?;
    let context = |e: pgmm::Error| CliError::Input(format!("{}: {e}", path.display()));
    if value.get("triples").is_some() {
        let set: AliasingSet = serde_json::from_value(value)?;
        Ok(PartialPatternInstance::from_aliasing(&set))
    } else if value.get("group").is_some() {
        let triple = IndexingTriple::from_json_value(value).map_err(context)?;
        Ok(PartialPatternInstance::from_aliasing(&enumerate_aliasing(
            &triple,
            &cfg.budget(),
        )?))
    } else {
        serde_json::from_value(value)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn format_entries(set: &std::collections::BTreeSet<EntryIndex>) -> String {
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn describe_report(report: &SolveReport) -> String {
    let how = match report.method {
        SolveMethod::BranchAndBound if report.exact => format!(
            "exact; branch and bound, {} nodes, {} pruned",
            report.nodes, report.pruned
        ),
        SolveMethod::BranchAndBound => format!(
            "NOT proven optimal; node limit reached after {} nodes",
            report.nodes
        ),
        SolveMethod::BruteForce => "exact; exhaustive search".to_string(),
        SolveMethod::MatchingHeuristic => format!(
            "heuristic, not necessarily optimal; minimum vertex cover of size {}",
            report.matching_size.unwrap_or(report.cover.size())
        ),
    };
    format!(
        "f = {} ({how})\nI = {}\nJ = {}",
        report.f,
        format_entries(&report.cover.left),
        format_entries(&report.cover.right)
    )
}

fn cover(cfg: &RunConfig, path: &Path, method: CoverMethod) -> CliResult<ExitCode> {
    let inst = load_instance(cfg, path)?;
    let report = match method {
        CoverMethod::Exact => exact_max_f(&inst, &cfg.exact_options()),
        CoverMethod::Heuristic => heuristic_cover(&inst),
        CoverMethod::BruteForce => brute_force_max_f(&inst).map_err(|e| match e {
            pgmm::Error::OracleTooLarge { .. } => CliError::Budget(format!(
                "{e}; the exhaustive search handles at most {BRUTE_FORCE_LIMIT} entries"
            )),
            other => other.into(),
        })?,
    };
    if cfg.json {
        print_json(&report)?;
    } else {
        println!("{}", describe_report(&report));
    }
    let limit_hit = method == CoverMethod::Exact && !report.exact;
    Ok(if limit_hit {
        ExitCode::from(EXIT_BUDGET)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Deserialize)]
struct SpectrumFile {
    order: u64,
    degrees: Vec<(u64, u64)>,
    #[serde(default)]
    classes: Option<u64>,
}

fn wreath_descriptor(n: u32) -> GroupDescriptor {
    GroupDescriptor::WreathS2 {
        base: Box::new(GroupDescriptor::CyclicPower { moduli: vec![n; 3] }),
    }
}

fn family_spectrum(family: Family, n: u32) -> CliResult<DegreeSpectrum> {
    let descriptor = match family {
        Family::Cyclic => GroupDescriptor::CyclicPower { moduli: vec![n] },
        Family::Dihedral => GroupDescriptor::Dihedral { n },
        Family::WreathS2 => wreath_descriptor(n),
    };
    Ok(degrees_for(&descriptor)?)
}

fn construction_f(kind: ConstructionKind, n: u32) -> CliResult<u64> {
    Ok(formula_f(u64::from(n), kind == ConstructionKind::Relaxed)?)
}

fn describe_bound(b: &BoundResult) -> String {
    let mut out = format!(
        "omega <= {:.6} (vacuous: {})",
        b.omega,
        if b.vacuous { "yes" } else { "no" }
    );
    if let Some(note) = &b.note {
        let _ = write!(out, " [{note}]");
    }
    out
}

fn omega_bound(cfg: &RunConfig, args: &OmegaArgs) -> CliResult<ExitCode> {
    let n = args.n;
    let need_n = || n.ok_or_else(|| CliError::Input("--n is required here".into()));
    let spectrum = match (&args.spectrum, args.family) {
        (Some(path), _) => {
            let file: SpectrumFile = read_as(path)?;
            supply_degrees(file.order, file.degrees, file.classes)?
        }
        (None, Some(family)) => family_spectrum(family, need_n()?)?,
        (None, None) => family_spectrum(Family::WreathS2, need_n()?)?,
    };
    let f = match (args.f, args.construction) {
        (Some(f), _) => f,
        (None, Some(kind)) => construction_f(kind, need_n()?)?,
        (None, None) => {
            return Err(CliError::Input(
                "one of --f or --construction is required".into(),
            ))
        }
    };
    let bound = solve_omega(&spectrum, f)?;
    if cfg.json {
        print_json(&bound)?;
    } else {
        println!("{}", describe_bound(&bound));
        println!("f = {f}, group order {}", spectrum.order);
    }
    Ok(ExitCode::SUCCESS)
}

struct ReproduceRow {
    n: u32,
    relaxed: bool,
    set_size: usize,
    formula: u64,
    exact: Option<(u64, bool)>,
    aliasing: Option<usize>,
    omega: f64,
    omega_exact: Option<f64>,
}

fn reproduce_row(cfg: &RunConfig, n: u32, relaxed: bool) -> CliResult<ReproduceRow> {
    let c = build_sets(n, relaxed)?;
    let formula = formula_f(u64::from(n), relaxed)?;
    let spectrum = degrees_for(&wreath_descriptor(n))?;
    let omega = solve_omega(&spectrum, formula)?.omega;
    let mut row = ReproduceRow {
        n,
        relaxed,
        set_size: c.set_size(),
        formula,
        exact: None,
        aliasing: None,
        omega,
        omega_exact: None,
    };
    if n <= REPRODUCE_ENUMERABLE {
        let set = enumerate_aliasing(c.triple(), &cfg.budget())?;
        row.aliasing = Some(set.len());
        let inst = PartialPatternInstance::from_aliasing(&set);
        let report = exact_max_f(&inst, &cfg.exact_options());
        row.exact = Some((report.f, report.exact));
        row.omega_exact = Some(solve_omega(&spectrum, report.f)?.omega);
    }
    Ok(row)
}

fn reproduce(cfg: &RunConfig) -> CliResult<ExitCode> {
    let start = Instant::now();
    let mut rows = Vec::new();
    for n in [2, 3, 17] {
        for relaxed in [false, true] {
            rows.push(reproduce_row(cfg, n, relaxed)?);
        }
    }
    let label = |relaxed: bool| if relaxed { "relaxed" } else { "original" };
    let all_exact = rows.iter().all(|r| r.exact.is_none_or(|(_, e)| e));
    if cfg.json {
        let out: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "sets": label(r.relaxed),
                    "set_size": r.set_size,
                    "f_formula": r.formula,
                    "aliasing_triples": r.aliasing,
                    "f_exact": r.exact.map(|(f, _)| f),
                    "f_exact_proven": r.exact.map(|(_, e)| e),
                    "omega_formula": r.omega,
                    "omega_exact": r.omega_exact,
                    "enumerated": r.exact.is_some(),
                })
            })
            .collect();
        print_json(&out)?;
    } else {
        println!(
            "{:>3}  {:<8}  {:>5}  {:>9}  {:>12}  {:>12}  {:>10}  {:>10}  note",
            "n", "sets", "|S|", "aliasing", "f formula", "f exact", "omega(f)", "omega(ex)"
        );
        for r in &rows {
            let (aliasing, exact, omega_exact, note) = match (r.aliasing, r.exact, r.omega_exact) {
                (Some(a), Some((f, proven)), Some(w)) => (
                    a.to_string(),
                    if proven {
                        f.to_string()
                    } else {
                        format!("{f}*")
                    },
                    format!("{w:.6}"),
                    if a == 0 { "TPP holds" } else { "enumerated" },
                ),
                _ => (
                    "-".into(),
                    "-".into(),
                    "-".into(),
                    "closed-form (not enumerated)",
                ),
            };
            println!(
                "{:>3}  {:<8}  {:>5}  {:>9}  {:>12}  {:>12}  {:>10.6}  {:>10}  {note}",
                r.n,
                label(r.relaxed),
                r.set_size,
                aliasing,
                r.formula,
                exact,
                r.omega,
                omega_exact
            );
        }
        if !all_exact {
            println!("* node limit reached; value is the best cover found, not proven optimal");
        }
        println!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    }
    Ok(if all_exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_BUDGET)
    })
}

fn multiply_demo(cfg: &RunConfig, path: &Path, cover_path: Option<&Path>) -> CliResult<ExitCode> {
    let triple = read_subsets(path)?;
    let (m_dim, n_dim, p_dim) = triple.dims();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut m = IntMatrix::random(m_dim, n_dim, -9, 9, &mut rng);
    let mut n = IntMatrix::random(n_dim, p_dim, -9, 9, &mut rng);
    let cover: Option<Cover> = cover_path.map(read_as).transpose()?;
    if let Some(c) = &cover {
        for e in &c.left {
            if !e.in_bounds(m_dim, n_dim) {
                return Err(CliError::Input(format!(
                    "cover entry {e} outside the left factor"
                )));
            }
        }
        for e in &c.right {
            if !e.in_bounds(n_dim, p_dim) {
                return Err(CliError::Input(format!(
                    "cover entry {e} outside the right factor"
                )));
            }
        }
        m.zero_entries(&c.left);
        n.zero_entries(&c.right);
    }
    let direct = m.checked_mul(&n)?;
    let cu = cu_multiply(&m, &n, &triple)?;
    let delta = cu.checked_sub(&direct)?;
    let predicted = match enumerate_aliasing(&triple, &cfg.budget()) {
        Ok(set) => Some(predicted_output(&m, &n, &set)? == cu),
        Err(pgmm::Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    if cfg.json {
        print_json(&json!({
            "seed": cfg.seed,
            "M": m,
            "N": n,
            "direct": direct,
            "group_algebra": cu,
            "delta": delta,
            "delta_is_zero": delta.is_zero(),
            "matches_aliasing_prediction": predicted,
        }))?;
    } else {
        println!("seed {}", cfg.seed);
        println!("M =\n{m}");
        println!("N =\n{n}");
        println!("M*N =\n{direct}");
        println!("group-algebra product =\n{cu}");
        println!("delta =\n{delta}");
        println!(
            "delta is {}",
            if delta.is_zero() {
                "zero"
            } else {
                "nonzero (aliasing)"
            }
        );
        match predicted {
            Some(ok) => println!(
                "matches M*N plus aliasing terms: {}",
                if ok { "yes" } else { "no" }
            ),
            None => println!("aliasing prediction skipped: pair budget exceeded"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn construct_wreath(cfg: &RunConfig, n: u32, relaxed: bool, bounds: bool) -> CliResult<ExitCode> {
    if !bounds {
        let c = build_sets(n, relaxed)?;
        print_data(&c.triple().to_json_value())?;
        return Ok(ExitCode::SUCCESS);
    }
    if n < 2 {
        return Err(CliError::Input(format!("n must be at least 2, got {n}")));
    }
    let spectrum = degrees_for(&wreath_descriptor(n))?;
    let mut out = Vec::new();
    for kind in [ConstructionKind::Original, ConstructionKind::Relaxed] {
        let f = construction_f(kind, n)?;
        out.push((kind, f, solve_omega(&spectrum, f)?));
    }
    if cfg.json {
        let rows: Vec<Value> = out
            .iter()
            .map(|(kind, f, b)| {
                json!({
                    "sets": if *kind == ConstructionKind::Relaxed { "relaxed" } else { "original" },
                    "f": f,
                    "omega": b.omega,
                    "vacuous": b.vacuous,
                })
            })
            .collect();
        print_json(&json!({ "n": n, "group_order": spectrum.order, "rows": rows }))?;
    } else {
        println!("(C{n})^3 wr S2, order {}", spectrum.order);
        for (kind, f, b) in &out {
            let name = if *kind == ConstructionKind::Relaxed {
                "relaxed"
            } else {
                "original"
            };
            println!("{name:<8} f = {f:<14} {}", describe_bound(b));
        }
    }
    Ok(ExitCode::SUCCESS)
}
