//! Subcommands of the `langrowth` binary.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use langrowth_core::asymptotics::critical_points;
use langrowth_core::catalog::{chi_of_alpha, CogrowthSemantics};
use langrowth_core::indicatrice::{amoeba_slice, Direction, ExtendedValue, Method as CoreMethod};
use langrowth_core::series::TableMode;
use langrowth_core::spectral::{parry, rate_function, sanov_rate, simulate_ldp};

use crate::error::{CliError, EXIT_CHECK_FAILED};
use crate::format::{csv, fmt_real, series_to_json, table_csv};
use crate::language::Language;
use crate::verify::{run_suite, Check, Suite};

#[derive(Parser, Debug)]
#[command(name = "langrowth", version, about = "Directional growth of regular languages")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rational growth series, reduced by common binomial factors.
    Series(SeriesArgs),
    /// Coefficient table by frequency vector.
    Coefficients(CoefficientsArgs),
    /// Indicatrice over a direction grid.
    Psi(PsiArgs),
    /// Large-deviation rate against the Sanov formula.
    Rate(CurveArgs),
    /// Positive critical points of the reduced denominator.
    Critical(CurveArgs),
    /// Boundary of the amoeba complement in log coordinates.
    Amoeba(AmoebaArgs),
    /// Spectral radius as a function of cogrowth.
    Chi(ChiArgs),
    /// Monte Carlo estimate of the rate under the Parry chain.
    Simulate(SimulateArgs),
    /// Invariant suites; exits 1 on any failure.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Catalog language: fibonacci, free_monoid, f2_delta,
    /// free_group_unambiguous, free_group_ergodic.
    #[arg(long)]
    pub language: Option<String>,
    /// Automaton document (JSON).
    #[arg(long)]
    pub automaton: Option<String>,
    /// Rank for free groups, alphabet size for the free monoid.
    #[arg(long)]
    pub m: Option<usize>,
    /// One variable per generator-inverse pair.
    #[arg(long)]
    pub paired: bool,
}

impl Source {
    fn resolve(&self) -> Result<Language, CliError> {
        Language::resolve(self.language.as_deref(), self.automaton.as_deref(), self.m, self.paired)
    }
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub source: Source,
    /// Destination of the JSON series document; `-` for standard output.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Log,
}

#[derive(Args, Debug)]
pub struct CoefficientsArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = 10)]
    pub max_total: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Boundary,
    Tmap,
    Empirical,
    #[value(alias = "closed_form")]
    ClosedForm,
    All,
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    #[command(flatten)]
    pub source: Source,
    /// Points per edge of the direction simplex.
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    /// Single direction `p,q[,s,...]` instead of a grid.
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Args, Debug)]
pub struct PsiArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Boundary)]
    pub method: MethodArg,
    /// Table size for the empirical method.
    #[arg(long, default_value_t = 60)]
    pub max_total: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
}

#[derive(Args, Debug)]
pub struct AmoebaArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    #[value(alias = "normal_subgroup")]
    NormalSubgroup,
    Schreier,
}

#[derive(Args, Debug)]
pub struct ChiArgs {
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    #[arg(long, value_enum, default_value_t = SemanticsArg::Schreier)]
    pub semantics: SemanticsArg,
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<f64>>,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0.02)]
    pub window: f64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Agreement,
    Spectral,
    Asymptotics,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, default_value = "-")]
    pub out: String,
}

/// Parses arguments, runs the subcommand and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { crate::error::EXIT_INVALID_INPUT } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Series(a) => cmd_series(a),
        Command::Coefficients(a) => cmd_coefficients(a),
        Command::Psi(a) => cmd_psi(a),
        Command::Rate(a) => cmd_rate(a),
        Command::Critical(a) => cmd_critical(a),
        Command::Amoeba(a) => cmd_amoeba(a),
        Command::Chi(a) => cmd_chi(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn emit(out: &str, text: &str) -> Result<(), CliError> {
    if out == "-" {
        let mut h = std::io::stdout().lock();
        h.write_all(text.as_bytes())?;
        h.flush()?;
    } else {
        std::fs::write(out, text)?;
    }
    Ok(())
}

fn cmd_series(a: SeriesArgs) -> Result<i32, CliError> {
    let lang = a.source.resolve()?;
    let s = lang.series()?.cancel_binomial_factors();
    println!("{s}");
    if let Some(out) = &a.out {
        emit(out, &(series_to_json(&s) + "\n"))?;
    }
    Ok(0)
}

fn table_mode(m: Mode) -> TableMode {
    match m {
        Mode::Exact => TableMode::Exact,
        Mode::Log => TableMode::Log,
    }
}

fn cmd_coefficients(a: CoefficientsArgs) -> Result<i32, CliError> {
    let lang = a.source.resolve()?;
    let t = lang.table(a.max_total, table_mode(a.mode))?;
    emit(&a.out, &table_csv(&t))?;
    Ok(0)
}

/// Directions of the simplex: one given point, or the barycentric grid
/// with `grid` points per edge.
fn directions(d: usize, grid: usize, r: &Option<Vec<f64>>) -> Result<Vec<Direction>, CliError> {
    if let Some(r) = r {
        if r.len() != d {
            return Err(CliError::input(format!("--r has {} entries, the language has {d} variables", r.len())));
        }
        return Ok(vec![Direction::new(r.clone()).map_err(|e| CliError::input(e.to_string()))?]);
    }
    if grid < 2 {
        return Err(CliError::input("--grid must be at least 2".to_string()));
    }
    let g = (grid - 1) as f64;
    let k = grid - 1;
    let mut out = Vec::new();
    match d {
        2 => {
            for i in 0..=k {
                let p = i as f64 / g;
                out.push(Direction::new(vec![p, 1.0 - p]));
            }
        }
        3 => {
            for i in 0..=k {
                for j in 0..=k - i {
                    let (p, q) = (i as f64 / g, j as f64 / g);
                    out.push(Direction::new(vec![p, q, (1.0 - p - q).max(0.0)]));
                }
            }
        }
        _ => {
            return Err(CliError::input(format!(
                "grids are available for 2 or 3 variables; give --r for {d}"
            )))
        }
    }
    out.into_iter()
        .map(|r| r.map_err(|e| CliError::input(e.to_string())))
        .collect()
}

fn direction_columns(d: usize, single: bool) -> Vec<String> {
    match (d, single) {
        (2, false) => vec!["p".into()],
        (3, false) => vec!["p".into(), "q".into()],
        _ => (1..=d).map(|i| format!("r{i}")).collect(),
    }
}

fn direction_cells(r: &Direction, single: bool) -> Vec<String> {
    let s = r.as_slice();
    let n = if single || s.len() > 3 { s.len() } else { s.len() - 1 };
    s[..n].iter().map(|x| fmt_real(*x)).collect()
}

fn method_name(m: MethodArg) -> CoreMethod {
    match m {
        MethodArg::Boundary => CoreMethod::Boundary,
        MethodArg::Tmap => CoreMethod::Tmap,
        MethodArg::Empirical => CoreMethod::Empirical,
        _ => CoreMethod::ClosedForm,
    }
}

fn cmd_psi(a: PsiArgs) -> Result<i32, CliError> {
    let lang = a.curve.source.resolve()?;
    let d = lang.nvars();
    let single = a.curve.r.is_some();
    let dirs = directions(d, a.curve.grid, &a.curve.r)?;
    let methods: Vec<MethodArg> = match a.method {
        MethodArg::All => vec![MethodArg::Boundary, MethodArg::Tmap, MethodArg::ClosedForm, MethodArg::Empirical],
        m => vec![m],
    };
    let mut header = direction_columns(d, single);
    header.extend(["psi".to_string(), "method".to_string()]);
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut rows = Vec::new();
    let mut h = None;
    let mut table = None;
    for m in methods {
        let mut eval = |r: &Direction| -> Result<ExtendedValue, CliError> {
            match m {
                MethodArg::Boundary => {
                    if h.is_none() {
                        h = Some(lang.denominator()?);
                    }
                    lang.psi_boundary(h.as_ref().expect("set above"), r, a.curve.tol)
                }
                MethodArg::Tmap => lang.psi_tmap(r, a.curve.tol),
                MethodArg::ClosedForm => lang.psi_closed(r),
                _ => {
                    if table.is_none() {
                        table = Some(lang.table(a.max_total, table_mode(a.mode))?);
                    }
                    lang.psi_empirical(table.as_ref().expect("set above"), r)
                }
            }
        };
        let mut block = Vec::new();
        let mut skipped = false;
        for r in &dirs {
            match eval(r) {
                Ok(v) => {
                    let mut row = direction_cells(r, single);
                    row.push(fmt_real(v.value));
                    row.push(method_name(m).name().to_string());
                    block.push(row);
                }
                Err(e) if a.method == MethodArg::All && e.code == crate::error::EXIT_INAPPLICABLE => {
                    eprintln!("skipping {}: {}", method_name(m).name(), e.message);
                    skipped = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !skipped {
            rows.extend(block);
        }
    }
    emit(&a.curve.out, &csv(&header, &rows))?;
    Ok(0)
}

fn cmd_rate(a: CurveArgs) -> Result<i32, CliError> {
    let lang = a.source.resolve()?;
    let (auto, labels) = lang.spectral_route()?;
    let adj = auto.adjacency();
    let sd = parry(&adj)?;
    let d = labels.len();
    let single = a.r.is_some();
    let dirs = directions(d, a.grid, &a.r)?;
    let mut header = direction_columns(d, single);
    header.extend(["I_analytic".to_string(), "I_sanov".to_string()]);
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut rows = Vec::new();
    for r in &dirs {
        let by_state: Vec<f64> = labels.iter().map(|&l| r.as_slice()[l]).collect();
        let rs = Direction::new(by_state).map_err(|e| CliError::input(e.to_string()))?;
        let psi = lang.psi_tmap(r, a.tol)?;
        let analytic = rate_function(&adj, &rs, &psi)?;
        let sanov = sanov_rate(&sd.p, &rs, a.tol)?;
        let mut row = direction_cells(r, single);
        row.push(fmt_real(analytic));
        row.push(fmt_real(sanov));
        rows.push(row);
    }
    emit(&a.out, &csv(&header, &rows))?;
    Ok(0)
}

fn cmd_critical(a: CurveArgs) -> Result<i32, CliError> {
    let lang = a.source.resolve()?;
    let h = lang.denominator()?;
    let d = h.nvars();
    let single = a.r.is_some();
    let dirs = directions(d, a.grid, &a.r)?;
    let mut header = direction_columns(d, single);
    header.extend((1..=d).map(|i| format!("z{i}")));
    header.extend(["lambda".to_string(), "height".to_string(), "minimal".to_string()]);
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut rows = Vec::new();
    for r in dirs.iter().filter(|r| r.is_interior()) {
        for c in critical_points(&h, r, a.tol)? {
            let mut row = direction_cells(r, single);
            row.extend(c.z_star.iter().map(|x| fmt_real(*x)));
            row.push(fmt_real(c.lambda));
            row.push(fmt_real(c.height));
            row.push(c.minimal.to_string());
            rows.push(row);
        }
    }
    emit(&a.out, &csv(&header, &rows))?;
    Ok(0)
}

fn cmd_amoeba(a: AmoebaArgs) -> Result<i32, CliError> {
    let lang = a.source.resolve()?;
    let h = lang.denominator()?;
    let pts = amoeba_slice(&h, a.grid)?;
    let rows: Vec<Vec<String>> = pts.iter().map(|(s, t)| vec![fmt_real(*s), fmt_real(*t)]).collect();
    emit(&a.out, &csv(&["s", "t"], &rows))?;
    Ok(0)
}

fn cmd_chi(a: ChiArgs) -> Result<i32, CliError> {
    if a.grid < 2 {
        return Err(CliError::input("--grid must be at least 2".to_string()));
    }
    if a.m < 2 {
        return Err(CliError::input("--m must be at least 2".to_string()));
    }
    let semantics = match a.semantics {
        SemanticsArg::NormalSubgroup => CogrowthSemantics::NormalSubgroup,
        SemanticsArg::Schreier => CogrowthSemantics::Schreier,
    };
    let k = (2 * a.m - 1) as f64;
    let lo = match semantics {
        CogrowthSemantics::NormalSubgroup => k.sqrt(),
        CogrowthSemantics::Schreier => 1.0,
    };
    let mut rows = Vec::new();
    for i in 0..a.grid {
        let alpha = lo + (k - lo) * i as f64 / (a.grid - 1) as f64;
        // The open end of the normal-subgroup range is skipped.
        if semantics == CogrowthSemantics::NormalSubgroup && i == 0 {
            continue;
        }
        let chi = chi_of_alpha(alpha, a.m, semantics)?;
        rows.push(vec![fmt_real(alpha), fmt_real(chi)]);
    }
    emit(&a.out, &csv(&["alpha", "chi"], &rows))?;
    Ok(0)
}

fn cmd_simulate(a: SimulateArgs) -> Result<i32, CliError> {
    let lang = a.source.resolve()?;
    let (auto, labels) = lang.spectral_route()?;
    let adj = auto.adjacency();
    let sd = parry(&adj)?;
    let d = labels.len();
    // Parry frequencies, reported by symbol.
    let mut stationary = vec![0.0; d];
    for (state, &l) in labels.iter().enumerate() {
        stationary[l] = sd.stationary[state];
    }
    let r = match &a.r {
        Some(r) => directions(d, 2, &Some(r.clone()))?.remove(0),
        None => Direction::new(stationary.clone()).map_err(|e| CliError::failure(e.to_string()))?,
    };
    let by_state: Vec<f64> = labels.iter().map(|&l| r.as_slice()[l]).collect();
    let rs = Direction::new(by_state).map_err(|e| CliError::input(e.to_string()))?;
    let psi = lang.psi_tmap(&r, a.tol)?;
    let analytic = rate_function(&adj, &rs, &psi)?;
    let e = simulate_ldp(&sd.p, &sd.stationary, &rs, a.n, a.trials, a.window, a.seed)?;
    let join = |v: &[f64]| v.iter().map(|x| fmt_real(*x)).collect::<Vec<_>>().join(",");
    let text = format!(
        "seed: {}\nn: {}\ntrials: {}\nwindow: {}\nr: {}\nstationary: {}\nhits: {}\nfraction: {}\nestimate: {}\nci_low: {}\nci_high: {}\nanalytic: {}\n",
        e.seed,
        e.n,
        e.trials,
        fmt_real(e.window),
        join(r.as_slice()),
        join(&stationary),
        e.hits,
        fmt_real(e.fraction),
        e.estimate.map(fmt_real).unwrap_or_else(|| "inf".to_string()),
        fmt_real(e.ci_low),
        fmt_real(e.ci_high),
        fmt_real(analytic),
    );
    emit(&a.out, &text)?;
    Ok(0)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `suite,check,pass,detail` rows.
pub fn report(checks: &[Check]) -> String {
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.suite.to_string(),
                csv_field(&c.name),
                c.pass.to_string(),
                csv_field(&c.detail),
            ]
        })
        .collect();
    csv(&["suite", "check", "pass", "detail"], &rows)
}

fn cmd_verify(a: VerifyArgs) -> Result<i32, CliError> {
    let suite = match a.suite {
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::Agreement => Suite::Agreement,
        SuiteArg::Spectral => Suite::Spectral,
        SuiteArg::Asymptotics => Suite::Asymptotics,
        SuiteArg::All => Suite::All,
    };
    let checks = run_suite(suite);
    emit(&a.out, &report(&checks))?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    if failed > 0 {
        eprintln!("{failed} of {} checks failed", checks.len());
        return Ok(EXIT_CHECK_FAILED);
    }
    Ok(0)
}
