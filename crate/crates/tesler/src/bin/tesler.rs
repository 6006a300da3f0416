//! Command-line surface over the tesler library: enumeration, counting,
//! poset statistics and DOT export, characteristic polynomials, quotient
//! checks, series, families, bounds, probes, and the full verification
//! suite.
//!
//! Exit codes: 0 on success, 1 on a verification failure, 2 on a usage
//! error, 3 when a resource ceiling is hit.

use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use tesler::enumerate::{count, enumerate_family, EnumerationLimits};
use tesler::growth::{
    armstrong_polynomial, family_sequence, mobius_bound_probe, parking_bound_threshold,
    verify_bounds, verify_coefficient_identities, FamilyKind,
};
use tesler::harmonics::{hilbert_series_with_ceiling, DEFAULT_HILBERT_CEILING};
use tesler::matrix::HookSumVector;
use tesler::poly::{specialize, SpecializeRule};
use tesler::poset::build_poset;
use tesler::quotient::{quotient_by_sum, verify_factorization};
use tesler::Error;

#[derive(Parser)]
#[command(name = "tesler", version, about = "Exact Tesler matrix enumeration and poset analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Matrix-count ceiling for materializing operations.
    #[arg(long, global = true)]
    ceiling: Option<u64>,

    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a family and emit it (JSON lines, CSV census, or text).
    Enumerate {
        #[arg(long)]
        alpha: HookSumVector,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Count a family exactly without materializing it.
    Count {
        #[arg(long)]
        alpha: HookSumVector,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Poset statistics, with optional DOT export of the Hasse diagram.
    Poset {
        #[arg(long)]
        alpha: HookSumVector,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
        /// Annotate nodes with Möbius values.
        #[arg(long)]
        annotate_mobius: bool,
    },
    /// Characteristic polynomial, factored and raw.
    Charpoly {
        #[arg(long)]
        alpha: HookSumVector,
    },
    /// Hallam–Sagan checks: one quotient with --r, or the full
    /// factorization trace for a binary vector without it.
    QuotientCheck {
        #[arg(long)]
        alpha: HookSumVector,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The bivariate series over T(1^n), optionally specialized.
    Hilbert {
        #[arg(long)]
        n: usize,
        /// One of: t=0, t=q^-1, q=1,t=1, or numeric q=..,t=..
        #[arg(long)]
        specialize: Option<String>,
    },
    /// Armstrong polynomial of a family.
    Armstrong {
        #[arg(long, conflicts_with = "n")]
        alpha: Option<HookSumVector>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Family sequences with bounds, recurrences and generating functions.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyArg,
        /// Number of ones for the ones-then-zeros family.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Largest vector length to compute.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The counting-bound chain around T(1^n).
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Largest Möbius magnitude over P(1^n) against the n! bound.
    MobiusProbe {
        #[arg(long)]
        n: usize,
    },
    /// Run the whole verification suite; nonzero exit on any failure.
    VerifyAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    SingleOne,
    OnesThenZeros,
    Staircase,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CeilingExceeded { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn verification_failed(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => Box::new(std::io::BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    };
    let limits = cli
        .ceiling
        .map(EnumerationLimits::with_ceiling)
        .unwrap_or_default();
    match run(&cli, &limits, &mut sink) {
        Ok(()) => {
            let _ = sink.flush();
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let _ = sink.flush();
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli, limits: &EnumerationLimits, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Enumerate { alpha, format } => {
            let family = enumerate_family(alpha, limits)?;
            match format {
                OutputFormat::Json => {
                    for m in &family.matrices {
                        writeln!(out, "{}", serde_json::to_string(m).expect("serializable"))?;
                    }
                }
                OutputFormat::Csv => {
                    writeln!(out, "alpha,count")?;
                    writeln!(out, "\"{alpha}\",{}", family.count)?;
                }
                _ => {
                    for m in &family.matrices {
                        writeln!(out, "{m}")?;
                    }
                    writeln!(out, "count: {}", family.count)?;
                }
            }
        }
        Command::Count { alpha, format } => {
            let value = count(alpha);
            match format {
                OutputFormat::Csv => {
                    writeln!(out, "alpha,count")?;
                    writeln!(out, "\"{alpha}\",{value}")?;
                }
                _ => writeln!(out, "{value}")?,
            }
        }
        Command::Poset {
            alpha,
            format,
            dot,
            annotate_mobius,
        } => {
            let poset = build_poset(alpha, limits)?;
            if *dot || *format == OutputFormat::Dot {
                let mobius = annotate_mobius.then(|| poset.mobius());
                let dot_text = poset.to_dot(
                    &format!("P({alpha})"),
                    |_, m| m.to_string(),
                    mobius.as_ref(),
                );
                write!(out, "{dot_text}")?;
            } else {
                writeln!(out, "alpha: {alpha}")?;
                writeln!(out, "elements: {}", poset.len())?;
                writeln!(out, "rank: {}", poset.poset_rank())?;
                let sizes: Vec<String> = poset
                    .rank_level_sizes()
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                writeln!(out, "rank level sizes: ({})", sizes.join(", "))?;
                writeln!(out, "cover edges: {}", poset.cover_count())?;
                if *annotate_mobius {
                    let mu = poset.mobius();
                    for x in 0..poset.len() as u32 {
                        writeln!(
                            out,
                            "mu = {:>4}  rank {}  {}",
                            mu.values[x as usize],
                            poset.rank_of(x),
                            poset.label(x)
                        )?;
                    }
                }
            }
        }
        Command::Charpoly { alpha } => {
            let poset = build_poset(alpha, limits)?;
            let chi = poset.characteristic_polynomial();
            let (power, rest) = chi.strip_q_minus_one();
            let factored = match (power, rest.to_string().as_str()) {
                (0, _) => format!("{rest}"),
                (1, "1") => "(q-1)".to_string(),
                (_, "1") => format!("(q-1)^{power}"),
                (1, _) => format!("({rest})*(q-1)"),
                _ => format!("({rest})*(q-1)^{power}"),
            };
            writeln!(out, "chi(P({alpha})) = {factored}")?;
            writeln!(out, "expanded: {chi}")?;
            let coeffs: Vec<String> = chi
                .coefficients_ascending()
                .iter()
                .map(|c| c.to_string())
                .collect();
            writeln!(out, "coefficients (ascending): [{}]", coeffs.join(", "))?;
        }
        Command::QuotientCheck { alpha, r, format } => match r {
            Some(r) => {
                let qp = quotient_by_sum(alpha, *r, limits)?;
                let conditions = qp.check_conditions();
                let witness = qp.witness_isomorphism(limits)?;
                if *format == OutputFormat::Json {
                    let payload = serde_json::json!({
                        "alpha": alpha.entries(),
                        "r": r,
                        "target": qp.target_alpha.entries(),
                        "product_size": qp.prod.len(),
                        "class_count": qp.class_count(),
                        "conditions": conditions,
                        "witness": witness,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap())?;
                } else {
                    writeln!(out, "alpha: ({alpha}), r = {r}, target: ({})", qp.target_alpha)?;
                    writeln!(out, "product elements: {}", qp.prod.len())?;
                    writeln!(out, "classes: {}", qp.class_count())?;
                    let verdict = |c: &tesler::quotient::Condition| {
                        if c.passed {
                            "pass".to_string()
                        } else {
                            format!("FAIL ({})", c.witness.clone().unwrap_or_default())
                        }
                    };
                    writeln!(out, "singleton bottom: {}", verdict(&conditions.singleton_bottom))?;
                    writeln!(out, "homogeneity:      {}", verdict(&conditions.homogeneity))?;
                    writeln!(out, "rank preserved:   {}", verdict(&conditions.rank_preserved))?;
                    writeln!(out, "summation:        {}", verdict(&conditions.summation))?;
                    writeln!(
                        out,
                        "witness bijection: {}",
                        if witness.ok() { "pass" } else { "FAIL" }
                    )?;
                }
                if !(conditions.all_passed() && witness.ok()) {
                    return Err(verification_failed("quotient checks failed"));
                }
            }
            None => {
                let trace = verify_factorization(alpha, limits)?;
                if *format == OutputFormat::Json {
                    writeln!(out, "{}", serde_json::to_string_pretty(&trace).unwrap())?;
                } else {
                    writeln!(out, "alpha: ({})", trace.alpha)?;
                    writeln!(
                        out,
                        "base ({}) ~ Boolean lattice: {}",
                        trace.base_alpha,
                        if trace.base_boolean_ok { "pass" } else { "FAIL" }
                    )?;
                    for step in &trace.steps {
                        writeln!(
                            out,
                            "raise coordinate {} (r = {}): ({}) -> ({}); product {}, classes {}, \
                             conditions {}, witness {}, chi match {}",
                            step.position,
                            step.r,
                            step.alpha_from,
                            step.target,
                            step.product_size,
                            step.class_count,
                            if step.conditions.all_passed() { "pass" } else { "FAIL" },
                            if step.witness.ok() { "pass" } else { "FAIL" },
                            if step.chi_match { "pass" } else { "FAIL" },
                        )?;
                    }
                    writeln!(
                        out,
                        "chi(P({})) = (q-1)^{} : {}",
                        trace.alpha,
                        trace.weight_exponent,
                        if trace.matches_direct {
                            "matches the direct computation"
                        } else {
                            "DIFFERS from the direct computation"
                        }
                    )?;
                }
                if !trace.all_checks_passed {
                    return Err(verification_failed("factorization checks failed"));
                }
            }
        },
        Command::Hilbert { n, specialize: rule } => {
            let ceiling = cli.ceiling.unwrap_or(DEFAULT_HILBERT_CEILING);
            let result = hilbert_series_with_ceiling(*n, ceiling)?;
            match rule {
                None => writeln!(out, "{}", result.series)?,
                Some(rule) => {
                    let rule: SpecializeRule = rule.parse()?;
                    writeln!(out, "{}", specialize(&result.series, rule))?;
                }
            }
        }
        Command::Armstrong { alpha, n } => {
            let alpha = match (alpha, n) {
                (Some(alpha), _) => alpha.clone(),
                (None, Some(n)) => HookSumVector::ones(*n),
                (None, None) => {
                    return Err(verification_failed("pass --alpha or --n"));
                }
            };
            let poly = armstrong_polynomial(&alpha);
            writeln!(out, "A({alpha}; q) = {poly}")?;
            writeln!(out, "value at 1: {}", poly.eval_at_one())?;
            writeln!(out, "derivative at 1: {}", poly.derivative_at_one())?;
        }
        Command::Family { kind, k, n, format } => {
            let kind = match kind {
                FamilyArg::SingleOne => FamilyKind::SingleOne,
                FamilyArg::OnesThenZeros => FamilyKind::OnesThenZeros { k: *k },
                FamilyArg::Staircase => FamilyKind::Staircase,
            };
            let report = family_sequence(kind, *n)?;
            if *format == OutputFormat::Csv {
                writeln!(out, "family,n,value,bound_low,bound_high,verdict")?;
                for row in &report.rows {
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        report.family,
                        row.n,
                        row.value,
                        row.bound_low
                            .as_ref()
                            .map(|b| b.to_string())
                            .unwrap_or_default(),
                        row.bound_high
                            .as_ref()
                            .map(|b| b.to_string())
                            .unwrap_or_default(),
                        row.verdict
                    )?;
                }
            } else {
                writeln!(out, "family: {}", report.family)?;
                for row in &report.rows {
                    writeln!(
                        out,
                        "n = {:>2}: {} {}",
                        row.n,
                        row.value,
                        if row.verdict { "(ok)" } else { "(bound missed)" }
                    )?;
                }
                for &(m, holds) in &report.recurrence {
                    writeln!(
                        out,
                        "t_{m} = 5 t_{} - 5 t_{}: {}",
                        m - 1,
                        m - 2,
                        if holds { "holds" } else { "fails" }
                    )?;
                }
                if !report.ogf.is_empty() {
                    writeln!(out, "generating function vs enumeration:")?;
                    for coeff in &report.ogf {
                        writeln!(
                            out,
                            "  x^{}: {} vs {} {}",
                            coeff.index,
                            coeff.ogf,
                            coeff.enumerated,
                            if coeff.matches { "(match)" } else { "(MISMATCH)" }
                        )?;
                    }
                }
                if matches!(kind, FamilyKind::OnesThenZeros { .. }) {
                    match parking_bound_threshold(*k, *n)? {
                        Some(threshold) => writeln!(
                            out,
                            "bound (k+1)^(n-1) holds from n = {threshold} through n = {n}"
                        )?,
                        None => writeln!(out, "bound (k+1)^(n-1) does not stabilize by n = {n}")?,
                    }
                }
            }
        }
        Command::Bounds { n } => {
            let report = verify_bounds(*n);
            writeln!(out, "T(1^{n}) = {}", report.count)?;
            for link in &report.links {
                let verdict = match link.holds {
                    Some(true) => "holds",
                    Some(false) => "FAILS",
                    None => "not applicable",
                };
                writeln!(out, "{}: {} ({} vs {})", link.description, verdict, link.lhs, link.rhs)?;
            }
            let identities = verify_coefficient_identities(*n);
            for check in &identities.checks {
                writeln!(
                    out,
                    "{}: {}",
                    check.name,
                    if check.passed { "holds" } else { "FAILS" }
                )?;
            }
        }
        Command::MobiusProbe { n } => {
            let probe = mobius_bound_probe(*n, limits)?;
            writeln!(out, "max |mu| over P(1^{n}): {}", probe.max_abs_mu)?;
            writeln!(
                out,
                "within {n}! = {}: {}",
                probe.factorial_bound,
                if probe.within_bound { "yes" } else { "NO" }
            )?;
            writeln!(out, "implied lower bound: {}", probe.implied_lower)?;
            writeln!(
                out,
                "T(1^{n}) = {} meets it: {}",
                probe.family_count,
                if probe.meets_implied { "yes" } else { "NO" }
            )?;
        }
        Command::VerifyAll => {
            let results = tesler::acceptance::run_all();
            let mut all_passed = true;
            for result in &results {
                writeln!(
                    out,
                    "[{}] criterion {:>2}: {} ({})",
                    if result.passed { "PASS" } else { "FAIL" },
                    result.id,
                    result.name,
                    result.details
                )?;
                all_passed &= result.passed;
            }
            if !all_passed {
                return Err(verification_failed("verification suite failed"));
            }
        }
    }
    Ok(())
}
