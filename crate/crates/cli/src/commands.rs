//! Subcommand implementations. Each returns the stdout payload; failures
//! carry their diagnostic and exit code in [`CliError`].

use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use splice_indices::formulas::splice_index_report;
use splice_indices::indices::{IndexKind, IndexValues, Method};
use splice_indices::splice::{splice, SpliceSpec, Variant};
use splice_indices::verify::{run_campaign, CampaignConfig, CampaignReport};
use splice_indices::Graph;

use crate::dist;
use crate::edgelist;
use crate::error::CliError;
use crate::graph6;
use crate::report::{CampaignJson, ComparisonJson, CountersJson, JsonReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, Copy)]
pub struct InputOptions {
    pub format: InputFormat,
    pub one_based: bool,
}

pub fn load_graph(path: &Path, options: InputOptions) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Parse(format!("cannot read {}: {err}", path.display())))?;
    match options.format {
        InputFormat::EdgeList => edgelist::parse(&text, options.one_based),
        InputFormat::Graph6 => {
            if options.one_based {
                return Err(CliError::Usage(
                    "--one-based only applies to edge-list input".into(),
                ));
            }
            graph6::parse(&text)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexSelection {
    All,
    One(IndexKind),
}

pub fn cmd_compute(
    path: &Path,
    selection: IndexSelection,
    json: bool,
    options: InputOptions,
    threads: usize,
) -> Result<String, CliError> {
    let graph = load_graph(path, options)?;
    let distances = dist::all_pairs(&graph, threads);
    let values = IndexValues::compute(&graph, &distances)?;
    if json {
        let mut report = JsonReport::new(graph.vertex_count(), graph.edge_count(), values);
        report.method = Some(Method::Direct.as_str());
        report.counters = Some(CountersJson {
            bfs_calls: graph.vertex_count() as u64,
        });
        return Ok(report.render());
    }
    let mut out = String::new();
    match selection {
        IndexSelection::All => {
            for kind in IndexKind::ALL {
                writeln!(out, "{}: {}", kind.as_str(), values.get(kind)).unwrap();
            }
        }
        IndexSelection::One(kind) => {
            writeln!(out, "{}: {}", kind.as_str(), values.get(kind)).unwrap();
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpliceMethod {
    Direct,
    Formula,
    FormulaPrinted,
}

impl SpliceMethod {
    fn core_method(self) -> Method {
        match self {
            SpliceMethod::Direct => Method::Direct,
            SpliceMethod::Formula => Method::FormulaCorrected,
            SpliceMethod::FormulaPrinted => Method::FormulaPrinted,
        }
    }

    fn formula_variant(self) -> Variant {
        match self {
            SpliceMethod::FormulaPrinted => Variant::Printed,
            _ => Variant::Corrected,
        }
    }
}

pub struct SpliceArgs<'a> {
    pub file1: &'a Path,
    pub file2: &'a Path,
    pub u1: usize,
    pub u2: usize,
    pub out: Option<&'a Path>,
    pub method: SpliceMethod,
    pub compare: bool,
    pub json: bool,
    pub options: InputOptions,
}

pub fn cmd_splice(args: &SpliceArgs<'_>) -> Result<String, CliError> {
    let g1 = load_graph(args.file1, args.options)?;
    let g2 = load_graph(args.file2, args.options)?;
    let spec = SpliceSpec::new(g1, g2, args.u1, args.u2)?;

    if let Some(out_path) = args.out {
        let (composite, _) = splice(&spec);
        std::fs::write(out_path, edgelist::serialize(&composite)).map_err(|err| {
            CliError::Parse(format!("cannot write {}: {err}", out_path.display()))
        })?;
    }

    let n = spec.composite_order();
    let m = spec.composite_size();

    if args.compare {
        let direct = splice_index_report(&spec, Method::Direct)?;
        let variant = args.method.formula_variant();
        let formula_method = match variant {
            Variant::Printed => Method::FormulaPrinted,
            Variant::Corrected => Method::FormulaCorrected,
        };
        let formula = splice_index_report(&spec, formula_method)?;
        if args.json {
            let mut report = JsonReport::new(n, m, direct.values);
            report.method = Some(formula_method.as_str());
            report.counters = Some(formula.counters.into());
            report.comparison = Some(ComparisonJson::new(direct.values, formula.values, variant));
            return Ok(report.render());
        }
        let mut out = String::new();
        writeln!(out, "graph: n={n} m={m}").unwrap();
        writeln!(
            out,
            "{:<24} {:>12} {:>12}  match",
            "index", "direct", "formula"
        )
        .unwrap();
        let mut matching = 0;
        for kind in IndexKind::ALL {
            let d = direct.values.get(kind);
            let f = formula.values.get(kind);
            if d == f {
                matching += 1;
            }
            writeln!(
                out,
                "{:<24} {:>12} {:>12}  {}",
                kind.as_str(),
                d,
                f,
                if d == f { "yes" } else { "NO" }
            )
            .unwrap();
        }
        writeln!(out, "method: {}", formula_method.as_str()).unwrap();
        writeln!(out, "result: {matching}/5 indices match").unwrap();
        return Ok(out);
    }

    let report = splice_index_report(&spec, args.method.core_method())?;
    if args.json {
        let mut json = JsonReport::new(n, m, report.values);
        json.method = Some(report.method.as_str());
        json.counters = Some(report.counters.into());
        return Ok(json.render());
    }
    let mut out = String::new();
    writeln!(out, "method: {}", report.method.as_str()).unwrap();
    writeln!(out, "graph: n={n} m={m}").unwrap();
    for kind in IndexKind::ALL {
        writeln!(out, "{}: {}", kind.as_str(), report.values.get(kind)).unwrap();
    }
    writeln!(out, "bfs_calls: {}", report.counters.bfs_runs).unwrap();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantChoice {
    Printed,
    Corrected,
    Both,
}

impl VariantChoice {
    fn variants(self) -> Vec<Variant> {
        match self {
            VariantChoice::Printed => vec![Variant::Printed],
            VariantChoice::Corrected => vec![Variant::Corrected],
            VariantChoice::Both => vec![Variant::Corrected, Variant::Printed],
        }
    }
}

pub struct VerifyArgs {
    pub trials: u64,
    pub max_n: usize,
    pub exhaustive_limit: usize,
    pub seed: u64,
    pub variant: VariantChoice,
    pub json: bool,
}

/// Randomized-phase density bounds used by the CLI.
const VERIFY_DENSITY: (f64, f64) = (0.1, 0.5);

pub fn cmd_verify(args: &VerifyArgs) -> Result<String, CliError> {
    if args.exhaustive_limit > 7 {
        return Err(CliError::Usage(
            "--exhaustive-limit must be at most 7".into(),
        ));
    }
    if args.trials > 0 && args.max_n == 0 {
        return Err(CliError::Usage(
            "--max-n must be at least 1 when trials are requested".into(),
        ));
    }
    let variants = args.variant.variants();
    let config = CampaignConfig {
        trials: args.trials,
        min_vertices: 1,
        max_vertices: args.max_n,
        min_density: VERIFY_DENSITY.0,
        max_density: VERIFY_DENSITY.1,
        seed: args.seed,
        variants: variants.clone(),
        exhaustive_limit: args.exhaustive_limit,
    };
    let report = run_campaign(&config)?;
    let output = if args.json {
        CampaignJson::new(&report).render()
    } else {
        render_campaign(&report)
    };
    // Printed-variant mismatches are expected findings and never affect the
    // exit code; corrected mismatches fail the run.
    let corrected_mismatches = report.mismatches(Variant::Corrected);
    if variants.contains(&Variant::Corrected) && corrected_mismatches > 0 {
        return Err(CliError::Failure(format!(
            "{output}verification failed: {corrected_mismatches} corrected-variant mismatches"
        )));
    }
    Ok(output)
}

fn render_campaign(report: &CampaignReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "rng: {} seed={} exhaustive_limit={} trials={}",
        report.rng_algorithm,
        report.config.seed,
        report.config.exhaustive_limit,
        report.config.trials
    )
    .unwrap();
    writeln!(out, "exhaustive cases: {}", report.exhaustive_cases).unwrap();
    writeln!(out, "randomized cases: {}", report.random_cases).unwrap();
    writeln!(
        out,
        "{:<24} {:<10} {:>10} {:>11} {:>9}",
        "index", "variant", "matches", "mismatches", "max_diff"
    )
    .unwrap();
    for cell in &report.cells {
        writeln!(
            out,
            "{:<24} {:<10} {:>10} {:>11} {:>9}",
            cell.index.as_str(),
            cell.variant.as_str(),
            cell.matches,
            cell.mismatches,
            cell.max_discrepancy
        )
        .unwrap();
    }
    for cell in &report.cells {
        if let Some(witness) = &cell.first_witness {
            writeln!(
                out,
                "first witness ({}/{}): {} case {}: g1 n={} edges={:?} u1={} | g2 n={} edges={:?} u2={}",
                cell.index.as_str(),
                cell.variant.as_str(),
                witness.phase.as_str(),
                witness.case_index,
                witness.spec.g1().vertex_count(),
                witness.spec.g1().edges(),
                witness.spec.u1(),
                witness.spec.g2().vertex_count(),
                witness.spec.g2().edges(),
                witness.spec.u2()
            )
            .unwrap();
        }
    }
    let corrected = report.mismatches(Variant::Corrected);
    if report.config.variants.contains(&Variant::Corrected) {
        if corrected == 0 {
            writeln!(out, "result: PASS (no corrected-variant mismatches)").unwrap();
        } else {
            writeln!(
                out,
                "result: FAIL ({corrected} corrected-variant mismatches)"
            )
            .unwrap();
        }
    } else {
        writeln!(
            out,
            "result: PASS (printed-variant findings are informational)"
        )
        .unwrap();
    }
    out
}

pub struct BenchArgs<'a> {
    pub file1: &'a Path,
    pub file2: &'a Path,
    pub u1: usize,
    pub u2: usize,
    pub repeat: u32,
    pub options: InputOptions,
}

fn median(durations: &mut [Duration]) -> Duration {
    durations.sort_unstable();
    durations[durations.len() / 2]
}

pub fn cmd_bench(args: &BenchArgs<'_>) -> Result<String, CliError> {
    if args.repeat == 0 {
        return Err(CliError::Usage("--repeat must be at least 1".into()));
    }
    let g1 = load_graph(args.file1, args.options)?;
    let g2 = load_graph(args.file2, args.options)?;
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let spec = SpliceSpec::new(g1, g2, args.u1, args.u2)?;

    let mut direct_times = Vec::with_capacity(args.repeat as usize);
    let mut formula_times = Vec::with_capacity(args.repeat as usize);
    let mut direct = None;
    let mut formula = None;
    for _ in 0..args.repeat {
        let start = Instant::now();
        let report = splice_index_report(&spec, Method::Direct)?;
        direct_times.push(start.elapsed());
        direct = Some(report);

        let start = Instant::now();
        let report = splice_index_report(&spec, Method::FormulaCorrected)?;
        formula_times.push(start.elapsed());
        formula = Some(report);
    }
    let direct = direct.expect("repeat >= 1");
    let formula = formula.expect("repeat >= 1");

    if direct.values != formula.values {
        return Err(CliError::Failure(
            "internal error: formula-corrected values diverge from direct values".into(),
        ));
    }
    let expected_formula = (n1 + n2) as u64;
    let expected_direct = (n1 + n2 - 1) as u64;
    if formula.counters.bfs_runs != expected_formula || direct.counters.bfs_runs != expected_direct
    {
        return Err(CliError::Failure(format!(
            "internal error: BFS counters off contract (direct={} expected {expected_direct}, formula={} expected {expected_formula})",
            direct.counters.bfs_runs, formula.counters.bfs_runs
        )));
    }

    // `median` sorts in place, so index 0 is the minimum afterwards.
    let direct_median = median(&mut direct_times);
    let formula_median = median(&mut formula_times);
    let mut out = String::new();
    writeln!(
        out,
        "components: n1={n1} n2={n2}; composite: n={} m={}",
        spec.composite_order(),
        spec.composite_size()
    )
    .unwrap();
    writeln!(out, "repeat: {}", args.repeat).unwrap();
    writeln!(
        out,
        "{:<10} {:>14} {:>14} {:>9} {:>7}",
        "method", "median", "min", "bfs_runs", "passes"
    )
    .unwrap();
    for (name, median_time, times, report) in [
        ("direct", direct_median, &direct_times, &direct),
        ("formula", formula_median, &formula_times, &formula),
    ] {
        writeln!(
            out,
            "{:<10} {:>11.3} ms {:>11.3} ms {:>9} {:>7}",
            name,
            median_time.as_secs_f64() * 1e3,
            times[0].as_secs_f64() * 1e3,
            report.counters.bfs_runs,
            report.counters.edge_classification_passes
        )
        .unwrap();
    }
    writeln!(
        out,
        "counters: formula bfs_runs == |V1|+|V2| ({expected_formula}) ok; direct bfs_runs == |V1|+|V2|-1 ({expected_direct}) ok"
    )
    .unwrap();
    let ordering_holds = formula_median < direct_median;
    writeln!(
        out,
        "wall time: formula median {} direct median -> {}",
        if ordering_holds { "<" } else { ">=" },
        if ordering_holds {
            "PASS"
        } else {
            "WARN (soft criterion)"
        }
    )
    .unwrap();
    Ok(out)
}
