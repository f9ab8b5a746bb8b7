//! `tlbe`: boundary entropy generating functions of the dense loop model at
//! loop weight 1, exactly at finite size, with closed-form checks and
//! high-precision asymptotic extraction.

mod cache;
mod checks;
mod tables;

use anyhow::{anyhow, bail, Context, Result};
use cache::Cache;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::ops::Pow;
use rug::{Integer, Rational};
use std::io::Write;
use std::path::PathBuf;
use tlbe_asymp::coeffs::{self, StripParity};
use tlbe_asymp::figures::{self, FigureId, FitOptions};
use tlbe_asymp::fit::{fit_expansion, BasisFn, BasisSpec};
use tlbe_asymp::rparam::{r_of_x, Branch};
use tlbe_asymp::series::{collect_series, Parity};
use tlbe_core::closedform;
use tlbe_core::genfun::GenFun;
use tlbe_core::groundstate;
use tlbe_core::pattern::BoundaryKind;

#[derive(Parser)]
#[command(name = "tlbe", version, about = "boundary entropy of critical bond percolation, exactly")]
struct Cli {
    /// Worker threads for independent evaluations (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for cached exact results (or set CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    PerEven,
    PerOdd,
    ReflEven,
    ReflOdd,
}

impl KindArg {
    fn kind(self) -> BoundaryKind {
        match self {
            KindArg::PerEven => BoundaryKind::PeriodicEven,
            KindArg::PerOdd => BoundaryKind::PeriodicOdd,
            KindArg::ReflEven => BoundaryKind::ReflectingEven,
            KindArg::ReflOdd => BoundaryKind::ReflectingOdd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
    All,
}

impl ParityArg {
    fn parity(self) -> Parity {
        match self {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
            ParityArg::All => Parity::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Txt,
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    F0,
    F1,
    F2,
    G1,
}

#[derive(Args)]
struct SizedArgs {
    /// Boundary kind
    #[arg(long, value_enum)]
    kind: KindArg,
    /// System size L (site count)
    #[arg(short = 'L', long = "size")]
    size: usize,
    /// Raise the oracle state-space cap (default 16)
    #[arg(long, default_value_t = groundstate::DEFAULT_SIZE_CAP)]
    max_l: usize,
    #[arg(long, value_enum, default_value = "txt")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckScope {
    Tables,
    Identities,
    Lemma,
    Ode,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    B1,
    B2,
    B3,
    B4,
    CEven,
    COdd,
    D,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Z_L F_L(x) from the closed form (odd cylinder falls back to the oracle)
    Genfun(SizedArgs),
    /// Exact Z_L F_L(x) from the Hamiltonian-kernel oracle
    Oracle(SizedArgs),
    /// Run the exact verification suites
    Check {
        #[arg(long, value_enum, default_value = "all")]
        scope: CheckScope,
        /// Treat conjectured-identity failures as fatal
        #[arg(long)]
        strict_conjectures: bool,
        /// Largest size for the exact suites
        #[arg(long, default_value_t = 12)]
        max_l: usize,
    },
    /// Fit expansion coefficients from exact data and compare to closed forms
    Fit {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Boundary weight, exact: "p/q" or a decimal string (repeatable)
        #[arg(long = "x", required = true, allow_hyphen_values = true)]
        xs: Vec<String>,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
        /// Precision floor in bits
        #[arg(long, default_value_t = 1024)]
        bits: u32,
        /// Number of basis terms
        #[arg(long)]
        basis: Option<usize>,
        /// Window length (default: square system, = basis size)
        #[arg(long)]
        window: Option<usize>,
        /// Tracked coefficient for CSV/SVG rows (default: f0 cylinders, g1 strips)
        #[arg(long, value_enum)]
        coeff: Option<CoeffArg>,
        #[arg(long, value_enum, default_value = "txt")]
        format: Format,
    },
    /// Print the closed-form expansion coefficients at a weight
    Asympt {
        #[arg(long = "x", allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 512)]
        bits: u32,
    },
    /// Regenerate a reference table with a match column
    Table {
        #[arg(long, value_enum)]
        name: TableName,
        #[arg(long, default_value_t = 1024)]
        bits: u32,
    },
    /// Print the embedded constants, their self-test, and the special-point table
    Constants {
        #[arg(long, default_value_t = 384)]
        bits: u32,
    },
}

/// Exact rational from "p/q" or a decimal string; never parsed through
/// binary floating point.
fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: Integer = p.trim().parse().map_err(|_| anyhow!("bad numerator in {s:?}"))?;
        let den: Integer = q.trim().parse().map_err(|_| anyhow!("bad denominator in {s:?}"))?;
        if den.cmp0() == std::cmp::Ordering::Equal {
            bail!("zero denominator in {s:?}");
        }
        return Ok(Rational::from((num, den)));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: Integer = if int.is_empty() || int == "-" {
            Integer::ZERO
        } else {
            int.parse().map_err(|_| anyhow!("bad integer part in {s:?}"))?
        };
        let digits = frac.len() as u32;
        let fnum: Integer = if frac.is_empty() {
            Integer::ZERO
        } else {
            frac.parse().map_err(|_| anyhow!("bad fractional part in {s:?}"))?
        };
        let scale = Integer::from(10).pow(digits);
        let mut num = int * &scale;
        if neg {
            num -= fnum;
        } else {
            num += fnum;
        }
        return Ok(Rational::from((num, scale)));
    }
    let num: Integer = s.parse().map_err(|_| anyhow!("not a rational: {s:?}"))?;
    Ok(Rational::from(num))
}

fn genfun_text(g: &GenFun) -> String {
    format!("Z_L F_L(x) = {}\nZ_{} = {}\n", g.poly_string(), g.l, g.z)
}

fn genfun_json(g: &GenFun) -> String {
    let coeffs: Vec<String> = g.coeffs.iter().map(|c| format!("\"{c}\"")).collect();
    format!(
        "{{\"kind\":\"{}\",\"L\":{},\"Z\":\"{}\",\"coeffs\":[{}]}}\n",
        g.kind.tag(),
        g.l,
        g.z,
        coeffs.join(",")
    )
}

struct Output {
    sink: Box<dyn Write>,
}

impl Output {
    fn new(path: Option<&PathBuf>) -> Result<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?),
            None => Box::new(std::io::stdout()),
        };
        Ok(Output { sink })
    }

    fn emit(&mut self, s: &str) -> Result<()> {
        self.sink.write_all(s.as_bytes())?;
        Ok(())
    }
}

fn cmd_genfun(args: &SizedArgs, cache: Option<&Cache>, out: &mut Output, force_oracle: bool) -> Result<()> {
    let kind = args.kind.kind();
    let oracle = force_oracle || kind == BoundaryKind::PeriodicOdd;
    if oracle && !force_oracle {
        eprintln!("note: no closed form for {}; using the kernel oracle", kind.tag());
    }
    let cached = cache.and_then(|c| c.load(kind, args.size, oracle));
    let g = match cached {
        Some(g) => g,
        None => {
            let g = if oracle {
                groundstate::genfun_oracle_capped(kind, args.size, args.max_l)?
            } else {
                closedform::genfun_closed(kind, args.size)?
            };
            if let Some(c) = cache {
                c.store(&g, oracle)?;
            }
            g
        }
    };
    match args.format {
        Format::Json => out.emit(&genfun_json(&g))?,
        _ => out.emit(&genfun_text(&g))?,
    }
    Ok(())
}

fn coeff_target(kind: BoundaryKind, bf: BasisFn, r: &rug::Float) -> Option<(rug::Float, rug::Float)> {
    let f = |j: usize, b: Branch| coeffs::f_coeff_r(j, r, b).ok();
    match (kind.is_periodic(), bf) {
        (true, BasisFn::N) | (false, BasisFn::N) => Some((f(0, Branch::Low)?, f(0, Branch::High)?)),
        (true, BasisFn::One) => Some((f(1, Branch::Low)?, f(1, Branch::High)?)),
        (true, BasisFn::InvN(k)) if k as usize + 1 <= 7 => {
            Some((f(k as usize + 1, Branch::Low)?, f(k as usize + 1, Branch::High)?))
        }
        (false, BasisFn::LogN) => {
            let parity = if kind == BoundaryKind::ReflectingEven { StripParity::Even } else { StripParity::Odd };
            Some((coeffs::g1_r(parity, r, Branch::Low), coeffs::g1_r(parity, r, Branch::High)))
        }
        _ => None,
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_fit(
    kind: BoundaryKind,
    xs: &[Rational],
    n_min: Option<u32>,
    n_max: Option<u32>,
    parity: Option<Parity>,
    bits: u32,
    basis_terms: Option<usize>,
    window: Option<usize>,
    coeff: Option<CoeffArg>,
    format: Format,
    out: &mut Output,
) -> Result<()> {
    let figure = match (kind, coeff) {
        (BoundaryKind::ReflectingEven, None | Some(CoeffArg::G1)) => FigureId::RefldataEven,
        (BoundaryKind::ReflectingOdd, None | Some(CoeffArg::G1)) => FigureId::RefldataOdd,
        (BoundaryKind::PeriodicEven | BoundaryKind::PeriodicOdd, None | Some(CoeffArg::F0)) => FigureId::PerdataF0,
        (_, Some(CoeffArg::F1)) => FigureId::PerdataF1,
        (_, Some(CoeffArg::F2)) => FigureId::PerdataF2,
        (k, Some(c)) => bail!("coefficient {:?} is not tracked for {}", c as u8, k.tag()),
    };
    let mut all_rows = Vec::new();
    for x in xs {
        let mut opts = FitOptions::recommended(kind, x);
        opts.bits = bits;
        if let Some(v) = n_min {
            opts.n_min = v;
        }
        if let Some(v) = n_max {
            opts.n_max = v;
        }
        if let Some(p) = parity {
            opts.parity = p;
        }
        if let Some(b) = basis_terms {
            opts.basis_terms = b;
        }
        opts.window = window;

        // full coefficient printout on stderr-free txt path
        let series = collect_series(kind, x, opts.n_min, opts.n_max, opts.parity, opts.bits)?;
        let basis = BasisSpec::default_for(kind, opts.basis_terms)?;
        let report = fit_expansion(&series, &basis, opts.window.unwrap_or(basis.len()))?;
        if matches!(format, Format::Txt) {
            let prec = 64;
            let xf = rug::Float::with_val(prec, x);
            let rp = r_of_x(&xf);
            out.emit(&format!(
                "kind {}  x = {}  r = {:.6}  n in [{}, {}] ({}), window {}, {} bits\n",
                kind.tag(),
                x,
                rp.r.to_f64(),
                report.n_min,
                report.n_max,
                opts.parity.tag(),
                report.window,
                series.prec
            ))?;
            if !series.zeros.is_empty() {
                out.emit(&format!("  exact zeros skipped at n = {:?}\n", series.zeros))?;
            }
            for c in &report.coeffs {
                let mut line = format!(
                    "  {:6} = {:+.15e}   (stability {:.2e})",
                    c.basis.name(),
                    c.value.to_f64(),
                    c.stability.to_f64()
                );
                let xf512 = rug::Float::with_val(512, x);
                let rp512 = r_of_x(&xf512);
                if let Some((lo, hi)) = coeff_target(kind, c.basis, &rp512.r) {
                    let target = if rp512.branch == Branch::Low { &lo } else { &hi };
                    let dev = rug::Float::with_val(512, &c.value - target).abs();
                    line.push_str(&format!(
                        "   closed form {:+.15e}, deviation {:.2e}",
                        target.to_f64(),
                        dev.to_f64()
                    ));
                }
                line.push('\n');
                out.emit(&line)?;
            }
        }
        let rows = figures::reproduce_figure(figure, std::slice::from_ref(x), &opts)?;
        all_rows.extend(rows);
    }
    match format {
        Format::Csv => out.emit(&figures::rows_to_csv(&all_rows))?,
        Format::Svg => out.emit(&figures::figure_svg(figure, &all_rows))?,
        Format::Txt => {
            out.emit("\n")?;
            out.emit(&figures::rows_to_csv(&all_rows))?;
        }
        Format::Json => bail!("fit output formats: txt, csv, svg"),
    }
    Ok(())
}

fn cmd_asympt(x: &Rational, bits: u32, out: &mut Output) -> Result<()> {
    let xf = rug::Float::with_val(bits, x);
    let rp = r_of_x(&xf);
    let branch = rp.branch;
    out.emit(&format!(
        "x = {}  ->  r = {:.12}  ({} branch)\n",
        x,
        rp.r.to_f64(),
        if branch == Branch::Low { "low" } else { "high" }
    ))?;
    for j in 0..=7usize {
        let v = coeffs::f_coeff_r(j, &rp.r, branch)?;
        out.emit(&format!("  f_{j} = {:+.20e}\n", v.to_f64()))?;
    }
    for (parity, tag) in [(StripParity::Even, "even strip"), (StripParity::Odd, "odd strip")] {
        let g1 = coeffs::g_coeff(parity, 1, &xf)?;
        out.emit(&format!("  g_1 ({tag}) = {:+.20e}\n", g1.to_f64()))?;
    }
    if *x < -1i32 {
        out.emit("  sign of reduced F on the even cylinder: (-1)^(n+1)\n")?;
    } else {
        out.emit("  sign of reduced F on the even cylinder: +1\n")?;
    }
    match coeffs::affleck_ludwig_g(&xf) {
        Ok(g) => out.emit(&format!("  boundary amplitude g = x exp(f_1) = {:+.20e}\n", g.to_f64()))?,
        Err(_) => out.emit("  boundary amplitude: not defined below the crossover\n")?,
    }
    Ok(())
}

fn cmd_constants(bits: u32, out: &mut Output) -> Result<()> {
    let worst = tlbe_asymp::consts::self_test().map_err(|e| anyhow!("{e}"))?;
    out.emit(&format!("literal self-test residual: {:.3e}\n", worst.to_f64()))?;
    out.emit(&format!("glaisher A  = {}\n", tlbe_asymp::consts::glaisher(bits)))?;
    out.emit(&format!("Gamma(1/3)  = {}\n", tlbe_asymp::consts::gamma_third(bits)))?;
    out.emit(&format!("Gamma(1/6)  = {}\n", tlbe_asymp::consts::gamma_sixth(bits)))?;
    out.emit("\nspecial-point strip constants (g0, g1, g2):\n")?;
    for (parity, tag) in [(StripParity::Even, "even"), (StripParity::Odd, "odd")] {
        for sx in closedform::SpecialX::ALL {
            let [g0, g1, g2] = coeffs::appendix_c_constants(parity, sx, bits.min(tlbe_asymp::consts::LITERAL_PREC_BITS));
            out.emit(&format!(
                "  {tag:5} x = {:>4}: g0 = {:+.15}  g1 = {:+.15}  g2 = {:+.15}\n",
                sx.rational(),
                g0.to_f64(),
                g1.to_f64(),
                g2.to_f64()
            ))?;
        }
    }
    Ok(())
}

fn exit_code_for(err: &anyhow::Error) -> i32 {
    if let Some(core) = err.downcast_ref::<tlbe_core::Error>() {
        if matches!(core, tlbe_core::Error::SizeCapExceeded { .. }) {
            return 3;
        }
    }
    if let Some(asy) = err.downcast_ref::<tlbe_asymp::Error>() {
        if matches!(asy, tlbe_asymp::Error::Core(tlbe_core::Error::SizeCapExceeded { .. })) {
            return 3;
        }
    }
    1
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("initializing worker pool")?;
    }
    let cache = Cache::from_flag(cli.cache_dir.as_deref())?;
    let mut out = Output::new(cli.out.as_ref())?;
    match &cli.command {
        Command::Genfun(args) => cmd_genfun(args, cache.as_ref(), &mut out, false)?,
        Command::Oracle(args) => cmd_genfun(args, cache.as_ref(), &mut out, true)?,
        Command::Check { scope, strict_conjectures, max_l } => {
            let outcome = checks::run_checks(*scope, *strict_conjectures, *max_l, &mut out)?;
            return Ok(if outcome { 0 } else { 1 });
        }
        Command::Fit { kind, xs, n_min, n_max, parity, bits, basis, window, coeff, format } => {
            let xs: Vec<Rational> = xs.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
            cmd_fit(
                kind.kind(),
                &xs,
                *n_min,
                *n_max,
                parity.map(|p| p.parity()),
                *bits,
                *basis,
                *window,
                *coeff,
                *format,
                &mut out,
            )?;
        }
        Command::Asympt { x, bits } => cmd_asympt(&parse_rational(x)?, *bits, &mut out)?,
        Command::Table { name, bits } => tables::cmd_table(*name, *bits, &mut out)?,
        Command::Constants { bits } => cmd_constants(*bits, &mut out)?,
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(exit_code_for(&err));
        }
    }
}
