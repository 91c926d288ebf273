//! Command-line front end for the first-page calculator.
//!
//! Subcommands map one-to-one onto the library entry points: `euler`,
//! `relative`, and `table` emit exact series and dimension tables, `growth`
//! prints the only floating-point numbers in the project, and `verify`
//! reruns the identity checkers and fails the process when a counterexample
//! shows up. Output is deterministic in all three formats; warnings and
//! notes that would break CSV parsing go to standard error.
//!
//! Exit codes: 0 success, 1 verification failure or engine error, 2 usage.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use linkss::exact::{rising_factorial_poly, IntPolynomial, TruncatedSeries, Var};
use linkss::poincare::ModelParams;
use linkss::sseq::{
    e1_table, empirical_slopes, euler_series_closed, euler_series_report, euler_series_summed,
    growth_rate, knot_power_series, relative_series, tot_lower_bound, verify_stirling_transform,
    verify_transform_sum,
};
use linkss::stirling::{eulerian2, stirling1, stirling2};

#[derive(Parser)]
#[command(
    name = "linkss",
    version,
    about = "Exact first-page spectral sequence tables, Euler series, and growth estimates for spaces of long links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic series of the first page
    Euler(EulerArgs),
    /// Dimension table of the first page, with slopes and lower bounds
    Table(TableArgs),
    /// Euler series of the pair: links modulo split tuples of knots
    Relative(SeriesArgs),
    /// Ratio-based growth estimate of a series
    Growth(GrowthArgs),
    /// Rerun the identity checks; exits 1 on any counterexample
    Verify(VerifyArgs),
    /// Print a combinatorial triangle
    Stirling(StirlingArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// Number of strings of the link (at least 1)
    #[arg(long, value_parser = parse_ell)]
    ell: u64,
    /// Ambient dimension N (at least 3; the stable statements need N >= 4)
    #[arg(long, value_parser = parse_dim)]
    dim: u64,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Truncation degree D (coefficients are reported up to x^D)
    #[arg(long, default_value_t = 30)]
    max_degree: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct EulerArgs {
    #[command(flatten)]
    series: SeriesArgs,
    /// Which route to evaluate
    #[arg(long, value_enum, default_value_t = Route::Closed)]
    form: Route,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Largest column p of the table
    #[arg(long, default_value_t = 5)]
    p_max: u64,
    /// Slope for the lower-bound windows (rational like 3/2; must exceed 1).
    /// Defaults to the empirical lower slope of the computed table.
    #[arg(long, value_parser = parse_alpha)]
    alpha: Option<Ratio<i64>>,
    /// Truncation degree of the Euler series backing the lower bounds
    #[arg(long, default_value_t = 30)]
    max_degree: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GrowthArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Truncation degree D of the analyzed series
    #[arg(long, default_value_t = 30)]
    max_degree: usize,
    /// Number of trailing coefficient ratios averaged
    #[arg(long, default_value_t = 5)]
    tail: usize,
    /// Which series to analyze
    #[arg(long, value_enum, default_value_t = SeriesKind::Euler)]
    series: SeriesKind,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which identity to check
    #[arg(long, value_enum)]
    target: Target,
    /// Largest number of strings checked (euler, stirling)
    #[arg(long, default_value_t = 4)]
    ell_max: u64,
    /// Largest lattice height checked (stirling)
    #[arg(long, default_value_t = 8)]
    j_max: u64,
    /// Largest degree of the shifted-factorial family (transform)
    #[arg(long, default_value_t = 8)]
    d_max: u64,
    /// Number of pseudo-random polynomials (transform)
    #[arg(long, default_value_t = 100)]
    cases: u64,
    /// Seed for the pseudo-random polynomials (transform)
    #[arg(long, default_value_t = 1729)]
    seed: u64,
    /// Truncation degree for the series comparison (euler)
    #[arg(long, default_value_t = 40)]
    max_degree: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct StirlingArgs {
    /// Which triangle to print
    #[arg(long, value_enum, default_value_t = TriangleKind::First)]
    kind: TriangleKind,
    /// Largest row printed
    #[arg(long, default_value_t = 10)]
    n_max: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Expansion of the closed product form
    Closed,
    /// Columnwise alternating double sum with certified cutoff
    Summed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Euler series of the first page (closed form)
    Euler,
    /// Euler series of the pair: links modulo split knots
    Relative,
    /// Euler series of the product of knot models
    Knot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Summed and closed Euler series agree coefficientwise
    Euler,
    /// Alternating cycle-number sums equal subset numbers
    Stirling,
    /// Alternating double sums telescope to q(-1)
    Transform,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TriangleKind {
    /// Cycle numbers [n; k]
    First,
    /// Subset numbers {n; k}
    Second,
    /// Second-order Eulerian numbers
    Eulerian,
}

fn parse_ell(s: &str) -> Result<u64, String> {
    let value: u64 = s
        .parse()
        .map_err(|_| format!("'{s}' is not a nonnegative integer"))?;
    if value < 1 {
        return Err("number of strings must be at least 1".into());
    }
    Ok(value)
}

fn parse_dim(s: &str) -> Result<u64, String> {
    let value: u64 = s
        .parse()
        .map_err(|_| format!("'{s}' is not a nonnegative integer"))?;
    if value < 3 {
        return Err(format!("ambient dimension must be at least 3 (got {value})"));
    }
    Ok(value)
}

fn parse_alpha(s: &str) -> Result<Ratio<i64>, String> {
    let ratio = match s.split_once('/') {
        Some((numer, denom)) => {
            let numer: i64 = numer
                .trim()
                .parse()
                .map_err(|_| format!("'{numer}' is not an integer"))?;
            let denom: i64 = denom
                .trim()
                .parse()
                .map_err(|_| format!("'{denom}' is not an integer"))?;
            if denom == 0 {
                return Err("denominator must be nonzero".into());
            }
            Ratio::new(numer, denom)
        }
        None => Ratio::from_integer(
            s.trim()
                .parse()
                .map_err(|_| format!("'{s}' is not an integer or a fraction like 3/2"))?,
        ),
    };
    if ratio <= Ratio::one() {
        return Err(format!("slope must exceed 1 (got {ratio})"));
    }
    Ok(ratio)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Euler(args) => run_euler(args),
        Command::Table(args) => run_table(args),
        Command::Relative(args) => run_relative(args),
        Command::Growth(args) => run_growth(args),
        Command::Verify(args) => run_verify(args),
        Command::Stirling(args) => run_stirling(args),
    }
}

fn model(args: &ModelArgs) -> Result<ModelParams, String> {
    let params = ModelParams::new(args.ell, args.dim).map_err(|e| e.to_string())?;
    if !params.theorem_grade() {
        eprintln!(
            "warning: N = 3 is below the stable range (N >= 4); results are formal series identities only"
        );
    }
    Ok(params)
}

fn emit(out: &OutputArgs, content: &str) -> Result<(), String> {
    match &out.output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Lattice points of a series: the degrees divisible by `step` up to the
/// truncation degree, with their coefficients.
fn lattice_points(series: &TruncatedSeries, step: usize) -> (Vec<usize>, Vec<BigInt>) {
    let mut degrees = Vec::new();
    let mut coefficients = Vec::new();
    for j in 0..=series.trunc_degree() / step {
        degrees.push(j * step);
        coefficients.push(series.coeff(j * step));
    }
    (degrees, coefficients)
}

/// Left-aligned columns separated by two spaces; no trailing padding.
fn aligned(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut text = String::new();
    let mut push_row = |cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                text.push_str(cell);
            } else {
                let _ = write!(text, "{cell:<width$}  ", width = widths[i]);
            }
        }
        text.push('\n');
    };
    push_row(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        push_row(row);
    }
    text
}

fn csv(header: &str, rows: &[Vec<String>]) -> String {
    let mut text = String::with_capacity(16 * (rows.len() + 1));
    text.push_str(header);
    text.push('\n');
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    text
}

#[derive(Serialize)]
struct JsonDoc {
    params: Value,
    degrees: Value,
    coefficients: Value,
    meta: Value,
}

fn json_doc(params: Value, degrees: Value, coefficients: Value, meta: Value) -> String {
    let doc = JsonDoc { params, degrees, coefficients, meta };
    let mut text = serde_json::to_string_pretty(&doc).expect("reports serialize cleanly");
    text.push('\n');
    text
}

/// Exact integer as a JSON number of arbitrary size.
fn big_num(value: &BigInt) -> Value {
    Value::Number(
        value
            .to_string()
            .parse()
            .expect("a decimal integer is a valid JSON number"),
    )
}

fn series_rows(degrees: &[usize], coefficients: &[BigInt]) -> Vec<Vec<String>> {
    degrees
        .iter()
        .zip(coefficients)
        .map(|(d, c)| vec![d.to_string(), c.to_string()])
        .collect()
}

fn render_series(
    title: &str,
    params: &ModelParams,
    max_degree: usize,
    series: &TruncatedSeries,
    meta: Value,
    out: &OutputArgs,
) -> Result<(), String> {
    let (degrees, coefficients) = lattice_points(series, params.lattice_step());
    let content = match out.format {
        Format::Text => {
            let header = format!(
                "# {title}, ell = {}, N = {}, D = {max_degree}\n",
                params.ell(),
                params.dim()
            );
            header + &aligned(&["degree", "coefficient"], &series_rows(&degrees, &coefficients))
        }
        Format::Csv => csv("degree,coefficient", &series_rows(&degrees, &coefficients)),
        Format::Json => json_doc(
            json!({"ell": params.ell(), "dim": params.dim(), "max_degree": max_degree}),
            json!(degrees),
            Value::Array(coefficients.iter().map(big_num).collect()),
            meta,
        ),
    };
    emit(out, &content)
}

fn run_euler(args: EulerArgs) -> Result<ExitCode, String> {
    let params = model(&args.series.model)?;
    let max_degree = args.series.max_degree;
    let (series, form) = match args.form {
        Route::Closed => (euler_series_closed(&params, max_degree), "closed"),
        Route::Summed => (
            euler_series_summed(&params, max_degree).map_err(|e| e.to_string())?,
            "summed",
        ),
    };
    render_series(
        &format!("Euler series ({form} form)"),
        &params,
        max_degree,
        &series,
        json!({"series": "euler", "form": form}),
        &args.series.out,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn run_relative(args: SeriesArgs) -> Result<ExitCode, String> {
    let params = model(&args.model)?;
    if params.ell() == 1 {
        let note = "pair is trivial for ell=1";
        let content = match args.out.format {
            Format::Text => format!(
                "# Relative series, ell = 1, N = {}, D = {}\nALL,0\nnote: {note}\n",
                params.dim(),
                args.max_degree
            ),
            Format::Csv => {
                eprintln!("note: {note}");
                "degree,coefficient\nALL,0\n".to_string()
            }
            Format::Json => json_doc(
                json!({"ell": 1, "dim": params.dim(), "max_degree": args.max_degree}),
                json!([]),
                json!([]),
                json!({"series": "relative", "note": note}),
            ),
        };
        emit(&args.out, &content)?;
        return Ok(ExitCode::SUCCESS);
    }
    let series = relative_series(&params, args.max_degree);
    render_series(
        "Relative series",
        &params,
        args.max_degree,
        &series,
        json!({"series": "relative"}),
        &args.out,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn run_table(args: TableArgs) -> Result<ExitCode, String> {
    let params = model(&args.model)?;
    let table = e1_table(args.p_max, &params).map_err(|e| e.to_string())?;
    let entries = table.nonzero_entries();
    let slopes = empirical_slopes(&table).ok();
    let alpha = match (args.alpha, slopes) {
        (Some(a), _) => Some((a, "flag")),
        (None, Some((lower, _))) if lower > Ratio::one() => Some((lower, "empirical")),
        _ => None,
    };

    let mut bounds: Vec<(usize, (usize, usize), BigInt)> = Vec::new();
    if let Some((a, _)) = alpha {
        let series = euler_series_closed(&params, args.max_degree);
        for j in 0..=args.max_degree / params.lattice_step() {
            let degree = j * params.lattice_step();
            let (bound, window) =
                tot_lower_bound(degree, a, &series).map_err(|e| e.to_string())?;
            bounds.push((degree, window, bound));
        }
    }

    let entry_rows: Vec<Vec<String>> = entries
        .iter()
        .map(|(p, q, dim)| vec![p.to_string(), q.to_string(), dim.to_string()])
        .collect();

    let content = match args.out.format {
        Format::Text => {
            let mut text = format!(
                "# First page dimensions, ell = {}, N = {}, p_max = {}\n",
                params.ell(),
                params.dim(),
                args.p_max
            );
            text += &aligned(&["p", "q", "dim"], &entry_rows);
            text.push('\n');
            match slopes {
                Some((lower, upper)) => {
                    let _ = writeln!(text, "lower slope = {lower}");
                    let _ = writeln!(text, "upper slope = {upper}");
                }
                None => text.push_str("slopes undefined: no nonzero entries with p >= 1\n"),
            }
            match alpha {
                Some((a, source)) => {
                    let _ = writeln!(
                        text,
                        "\n# Total-complex lower bounds, alpha = {a} ({source}), Euler series D = {}",
                        args.max_degree
                    );
                    let bound_rows: Vec<Vec<String>> = bounds
                        .iter()
                        .map(|(degree, (lo, hi), bound)| {
                            vec![degree.to_string(), format!("[{lo}, {hi}]"), bound.to_string()]
                        })
                        .collect();
                    text += &aligned(&["degree", "window", "bound"], &bound_rows);
                }
                None => {
                    text.push_str(
                        "\nno lower bounds: pass --alpha with a slope above 1\n",
                    );
                }
            }
            text
        }
        Format::Csv => csv("p,q,dim", &entry_rows),
        Format::Json => {
            let degrees: Vec<[u64; 2]> = entries.iter().map(|(p, q, _)| [*p, *q]).collect();
            let dims: Vec<Value> = entries.iter().map(|(_, _, d)| big_num(d)).collect();
            let bounds_json: Vec<Value> = bounds
                .iter()
                .map(|(degree, (lo, hi), bound)| {
                    json!({"degree": degree, "window": [lo, hi], "bound": big_num(bound)})
                })
                .collect();
            json_doc(
                json!({
                    "ell": params.ell(),
                    "dim": params.dim(),
                    "p_max": args.p_max,
                    "max_degree": args.max_degree,
                }),
                json!(degrees),
                Value::Array(dims),
                json!({
                    "lower_slope": slopes.map(|(lower, _)| lower.to_string()),
                    "upper_slope": slopes.map(|(_, upper)| upper.to_string()),
                    "alpha": alpha.map(|(a, _)| a.to_string()),
                    "alpha_source": alpha.map(|(_, source)| source),
                    "bounds": bounds_json,
                }),
            )
        }
    };
    emit(&args.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn run_growth(args: GrowthArgs) -> Result<ExitCode, String> {
    let params = model(&args.model)?;
    let (series, kind) = match args.series {
        SeriesKind::Euler => (euler_series_closed(&params, args.max_degree), "euler"),
        SeriesKind::Relative => (relative_series(&params, args.max_degree), "relative"),
        SeriesKind::Knot => (knot_power_series(&params, args.max_degree), "knot"),
    };
    let estimate = growth_rate(&series, params.dim(), args.tail).map_err(|e| e.to_string())?;

    let step = params.lattice_step();
    let top = series.trunc_degree() / step;
    let window: Vec<(usize, BigInt)> = (top - args.tail..=top)
        .map(|j| (j * step, series.coeff(j * step)))
        .collect();

    let content = match args.out.format {
        Format::Text => {
            let mut text = format!(
                "# Growth estimate, series = {kind}, ell = {}, N = {}, D = {}, tail = {}\n",
                params.ell(),
                params.dim(),
                args.max_degree,
                args.tail
            );
            let _ = writeln!(text, "u_ratio = {}", estimate.u_ratio);
            let _ = writeln!(text, "x_rate = {}", estimate.x_rate);
            text
        }
        Format::Csv => csv(
            "quantity,value",
            &[
                vec!["u_ratio".into(), estimate.u_ratio.to_string()],
                vec!["x_rate".into(), estimate.x_rate.to_string()],
            ],
        ),
        Format::Json => json_doc(
            json!({
                "ell": params.ell(),
                "dim": params.dim(),
                "max_degree": args.max_degree,
                "tail": args.tail,
            }),
            json!(window.iter().map(|(d, _)| *d).collect::<Vec<_>>()),
            Value::Array(window.iter().map(|(_, c)| big_num(c)).collect()),
            json!({"series": kind, "u_ratio": estimate.u_ratio, "x_rate": estimate.x_rate}),
        ),
    };
    emit(&args.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let mut total: u64 = 0;
    let mut failures: Vec<String> = Vec::new();
    let title;
    match args.target {
        Target::Euler => {
            title = format!(
                "Verify euler: summed vs closed agreement, ell <= {}, N in {{4, 5}}, D = {}",
                args.ell_max, args.max_degree
            );
            for ell in 1..=args.ell_max {
                for dim in [4u64, 5] {
                    let params = ModelParams::new(ell, dim).map_err(|e| e.to_string())?;
                    let report =
                        euler_series_report(&params, args.max_degree).map_err(|e| e.to_string())?;
                    total += 1;
                    if !report.agree {
                        failures.push(format!("ell = {ell}, N = {dim}"));
                    }
                }
            }
        }
        Target::Stirling => {
            title = format!(
                "Verify stirling: alternating cycle-number sums vs subset numbers, ell <= {}, j <= {}",
                args.ell_max, args.j_max
            );
            for ell in 1..=args.ell_max {
                for j in 1..=args.j_max {
                    let check = verify_stirling_transform(ell, j).map_err(|e| e.to_string())?;
                    total += 1;
                    if !check.ok {
                        failures.push(format!(
                            "ell = {ell}, j = {j}: lhs {} != rhs {}",
                            check.lhs, check.rhs
                        ));
                    }
                }
            }
        }
        Target::Transform => {
            title = format!(
                "Verify transform: telescoping double sums, factorial family d <= {}, {} random polynomials (seed {})",
                args.d_max, args.cases, args.seed
            );
            for d in 0..=args.d_max {
                let check = verify_transform_sum(&rising_factorial_poly(Var::Y, d));
                total += 1;
                if !check.ok {
                    failures.push(format!("shifted factorial family, d = {d}"));
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            for case in 0..args.cases {
                let len = rng.random_range(1..=11usize);
                let coeffs: Vec<i64> = (0..len).map(|_| rng.random_range(-9i64..=9)).collect();
                let q = IntPolynomial::from_i64(Var::Y, &coeffs);
                let check = verify_transform_sum(&q);
                total += 1;
                if !check.ok {
                    failures.push(format!("random case {case}: q = {q}"));
                }
            }
        }
    }

    let passed = total - failures.len() as u64;
    let verdict = if failures.is_empty() {
        format!("OK {passed}/{total} cases")
    } else {
        format!(
            "FAIL {passed}/{total} cases; first counterexample: {}",
            failures[0]
        )
    };
    let target_name = match args.target {
        Target::Euler => "euler",
        Target::Stirling => "stirling",
        Target::Transform => "transform",
    };
    let content = match args.out.format {
        Format::Text => format!("# {title}\n{verdict}\n"),
        Format::Csv => csv(
            "target,total,failed",
            &[vec![
                target_name.into(),
                total.to_string(),
                failures.len().to_string(),
            ]],
        ),
        Format::Json => json_doc(
            json!({"target": target_name}),
            json!([]),
            json!([]),
            json!({
                "total": total,
                "failed": failures.len(),
                "ok": failures.is_empty(),
                "first_failure": failures.first(),
            }),
        ),
    };
    emit(&args.out, &content)?;
    if failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_stirling(args: StirlingArgs) -> Result<ExitCode, String> {
    let mut cells: Vec<(u64, u64, BigInt)> = Vec::new();
    for n in 0..=args.n_max {
        match args.kind {
            TriangleKind::First => {
                for k in 0..=n {
                    cells.push((n, k, stirling1(n, k as i64)));
                }
            }
            TriangleKind::Second => {
                for k in 0..=n {
                    cells.push((n, k, stirling2(n, k as i64)));
                }
            }
            TriangleKind::Eulerian => {
                for i in 0..n.max(1) {
                    cells.push((n, i, eulerian2(n, i as i64)));
                }
            }
        }
    }
    let kind_name = match args.kind {
        TriangleKind::First => "first",
        TriangleKind::Second => "second",
        TriangleKind::Eulerian => "eulerian",
    };
    let rows: Vec<Vec<String>> = cells
        .iter()
        .map(|(n, k, v)| vec![n.to_string(), k.to_string(), v.to_string()])
        .collect();
    let content = match args.out.format {
        Format::Text => {
            format!("# Triangle {kind_name}, n <= {}\n", args.n_max)
                + &aligned(&["n", "k", "value"], &rows)
        }
        Format::Csv => csv("n,k,value", &rows),
        Format::Json => json_doc(
            json!({"kind": kind_name, "n_max": args.n_max}),
            json!(cells.iter().map(|(n, k, _)| [*n, *k]).collect::<Vec<_>>()),
            Value::Array(cells.iter().map(|(_, _, v)| big_num(v)).collect()),
            json!({"triangle": kind_name}),
        ),
    };
    emit(&args.out, &content)?;
    Ok(ExitCode::SUCCESS)
}
