mod args;

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use sombor_core::report::{
    bound_row, extremal_row, format_real, summary_row, BOUND_HEADER, COMPUTE_HEADER,
    EXTREMAL_HEADER, SUMMARY_HEADER,
};
use sombor_core::verify::parse_bound_list;
use sombor_core::{
    encode_graph6, first_zagreb, h_graph, parse_graph6, reduced_sombor, run_suite, sombor,
    sombor_shifted, Enumerator, FamilySpec, Graph,
};

use args::{Cli, Command, Common, ExtremalIndex, Format, Universe, UniverseArgs};

#[derive(Debug, thiserror::Error)]
enum CliError {
    /// Bad input, bad parameters, or a scope cap; exit code 2.
    #[error("{0}")]
    Input(String),
    /// The run completed but found failures; the output is still written. Exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl From<sombor_core::Error> for CliError {
    fn from(e: sombor_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sombor: {e}");
            match e {
                CliError::Failed(_) => ExitCode::from(1),
                CliError::Input(_) => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Compute { input, common } => {
            setup(&common)?;
            let graphs = read_graph6(&input)?;
            emit(
                &common,
                &render_graphs(&graphs, common.format.unwrap_or(Format::Csv))?,
            )
        }
        Command::Construct {
            family,
            params,
            common,
        } => {
            setup(&common)?;
            let g = FamilySpec::from_parts(&family, &params)
                .and_then(FamilySpec::build)
                .map_err(|e| {
                    CliError::Input(format!(
                        "{e} (usage: construct <family> <params>..., e.g. construct h_graph 5 2)"
                    ))
                })?;
            emit(
                &common,
                &render_graphs(&[g], common.format.unwrap_or(Format::Graph6))?,
            )
        }
        Command::VerifyExtremal {
            n,
            nu,
            index,
            common,
        } => {
            setup(&common)?;
            verify_extremal(n, nu, index, &common)
        }
        Command::VerifyBounds {
            source,
            bounds,
            common,
        } => {
            setup(&common)?;
            let bounds = parse_bound_list(&bounds)?;
            let universe = match (&source.input, source.universe()) {
                (Some(path), _) => read_graph6(path)?,
                (None, Some(u)) => generate(&u)?,
                (None, None) => {
                    return Err(CliError::Input("either --n or --input is required".into()))
                }
            };
            let result = run_suite(universe, &bounds);
            let text = match common.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut out = String::from(BOUND_HEADER);
                    out.push('\n');
                    for r in &result.reports {
                        out.push_str(&bound_row(r));
                        out.push('\n');
                    }
                    out.push('\n');
                    out.push_str(SUMMARY_HEADER);
                    out.push('\n');
                    out.push_str(&summary_row(&result.summary));
                    out.push('\n');
                    out
                }
                Format::Graph6 => {
                    let mut seen = BTreeSet::new();
                    let bad = result
                        .violations()
                        .chain(result.anomalies())
                        .map(|r| r.graph6.clone());
                    let ordered: Vec<String> = bad.filter(|g| seen.insert(g.clone())).collect();
                    ordered.iter().map(|g| format!("{g}\n")).collect()
                }
            };
            emit(&common, &text)?;
            let s = result.summary;
            if s.is_clean() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{} violations, {} anomalies",
                    s.violations, s.anomalies
                )))
            }
        }
        Command::Enumerate { universe, common } => {
            setup(&common)?;
            let graphs = generate(&universe)?;
            emit(
                &common,
                &render_graphs(&graphs, common.format.unwrap_or(Format::Graph6))?,
            )
        }
    }
}

fn setup(common: &Common) -> CliResult<()> {
    if let Some(k) = common.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build_global()
            .map_err(|e| CliError::Input(format!("cannot start {k} workers: {e}")))?;
    }
    Ok(())
}

fn emit(common: &Common, text: &str) -> CliResult<()> {
    match common.output_path() {
        Some(path) => {
            fs::write(&path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// One graph per non-blank line; errors name the 1-based line number.
fn read_graph6(input: &str) -> CliResult<Vec<Graph>> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?
    };
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            parse_graph6(line.trim()).map_err(|e| CliError::Input(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

fn compute_row(g: &Graph) -> CliResult<String> {
    let g6 = encode_graph6(g);
    let fail = |e: sombor_core::Error| CliError::Input(format!("{g6}: {e}"));
    Ok(format!(
        "{g6},{},{},{},{},{},{},{}",
        g.order(),
        g.size(),
        g.cyclomatic_number(),
        format_real(sombor(g).map_err(fail)?),
        format_real(reduced_sombor(g).map_err(fail)?),
        format_real(sombor_shifted(g).map_err(fail)?),
        first_zagreb(g).map_err(fail)?
    ))
}

fn render_graphs(graphs: &[Graph], format: Format) -> CliResult<String> {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(COMPUTE_HEADER);
            out.push('\n');
            for g in graphs {
                out.push_str(&compute_row(g)?);
                out.push('\n');
            }
        }
        Format::Graph6 => {
            for g in graphs {
                out.push_str(&encode_graph6(g));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

fn generate(u: &UniverseArgs) -> CliResult<Vec<Graph>> {
    let e = Enumerator::default();
    let mut graphs = Vec::new();
    for n in u.n.clone() {
        let full = n * n.saturating_sub(1) / 2;
        let (lo, hi) =
            u.m.clone()
                .map_or((0, full), |r| (*r.start(), (*r.end()).min(full)));
        if lo > hi {
            continue;
        }
        let levels = e.levels(n, hi)?;
        for level in levels.into_iter().skip(lo) {
            graphs.extend(
                level
                    .iter()
                    .map(|c| c.to_graph())
                    .filter(|g| u.universe == Universe::All || g.is_connected()),
            );
        }
    }
    Ok(graphs)
}

fn verify_extremal(
    n: std::ops::RangeInclusive<usize>,
    nu: Option<std::ops::RangeInclusive<usize>>,
    index: ExtremalIndex,
    common: &Common,
) -> CliResult<()> {
    let e = Enumerator::default();
    let f: fn(&Graph) -> f64 = match index {
        ExtremalIndex::So => |g| sombor(g).expect("non-empty graph"),
        ExtremalIndex::Sored => |g| reduced_sombor(g).expect("non-empty graph"),
    };
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in n {
        if n < 2 {
            return Err(CliError::Input(format!(
                "verify-extremal needs n >= 2, got {n}"
            )));
        }
        let nus = nu.clone().unwrap_or(0..=n - 2);
        for nu in nus.filter(|&v| v + 2 <= n) {
            match e.extremal_search(n, nu, f) {
                Ok(r) => {
                    if !r.uniquely_attained_by(&h_graph(n, nu)?)? {
                        failures.push(format!("n={n} nu={nu}: maximizer is not uniquely H"));
                    }
                    rows.push(r);
                }
                Err(err @ sombor_core::Error::AmbiguousMaximum { .. }) => {
                    failures.push(err.to_string())
                }
                Err(err) => return Err(err.into()),
            }
        }
    }
    if rows.is_empty() && failures.is_empty() {
        return Err(CliError::Input(
            "no (n, nu) cell with 0 <= nu <= n - 2 in range".into(),
        ));
    }
    let text = match common.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut out = String::from(EXTREMAL_HEADER);
            out.push('\n');
            for r in &rows {
                out.push_str(&extremal_row(r));
                out.push('\n');
            }
            out
        }
        Format::Graph6 => rows
            .iter()
            .flat_map(|r| &r.maximizers)
            .map(|g| encode_graph6(g) + "\n")
            .collect(),
    };
    emit(common, &text)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(failures.join("; ")))
    }
}
