use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use designlat::classify::{
    analyze_dimension, classify, describe_verdict, Certificate, ClassifyConfig, ClassifyOptions,
    DimensionRecord, Method, MinimumRecord, Provenance, Status, Survivor, CONFIG_ENV,
};
use designlat::exactmath::{format_rational, BigInt, BigRational, QPolynomial};
use designlat::feasibility::{scan, ScanReport, DEFAULT_N_MAX};
use designlat::lattice::{
    verify_design, DesignCertificate, GramMatrix, PairBudget, DEFAULT_PAIR_BUDGET,
};
use designlat::moments::DesignProblem;
use designlat::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_UNDECIDED: u8 = 4;
const EXIT_INTERNAL: u8 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "designlat",
    version,
    about = "Design-strength analysis of integral lattices"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for the library (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integral solutions of the count system over a range of dimensions.
    Scan {
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Dual-class polynomial, roots and elimination verdicts per feasible dimension.
    Dual {
        #[command(flatten)]
        problem: ProblemArgs,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Enumerate minimal vectors of a Gram matrix and certify the design strength.
    Verify {
        /// Gram matrix file (whitespace text or JSON).
        #[arg(long)]
        gram: PathBuf,
        #[arg(long)]
        t: u32,
        /// Run even when the number of vector pairs exceeds the budget.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
        pair_budget: u64,
    },
    /// Full classification for strength t and minima up to a bound.
    Classify {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        min_max: u32,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u32,
        #[command(flatten)]
        config: ConfigArgs,
        /// Re-verify cited lattices against the bundled Gram fixtures (slow).
        #[arg(long)]
        verify_fixtures: bool,
    },
}

#[derive(clap::Args, Debug)]
struct ProblemArgs {
    #[arg(long)]
    t: u32,
    #[arg(long = "min")]
    minimum: u32,
    #[arg(long, default_value_t = 1)]
    n_min: u32,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: u32,
}

#[derive(clap::Args, Debug)]
struct ConfigArgs {
    /// Hermite-constant bounds and determinant hypotheses (JSON); the bundled
    /// defaults are used when neither this nor the environment variable is set.
    #[arg(long, env = CONFIG_ENV)]
    config: Option<PathBuf>,
}

impl ConfigArgs {
    fn load(&self) -> designlat::Result<ClassifyConfig> {
        match &self.config {
            Some(path) => ClassifyConfig::load(path),
            None => Ok(ClassifyConfig::bundled()),
        }
    }
}

impl ProblemArgs {
    fn problem(&self) -> designlat::Result<DesignProblem> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::Input(format!(
                "empty dimension range {}..{}",
                self.n_min, self.n_max
            )));
        }
        DesignProblem::new(self.minimum, self.t)
    }
}

/// Rendered output plus the exit code it should produce.
struct Report {
    body: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("designlat: cannot configure thread pool: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.body);
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("designlat: {e}");
            ExitCode::from(match e {
                Error::Dimension(_) | Error::Domain(_) | Error::Input(_) => EXIT_USAGE,
                Error::Resource(_) => EXIT_RESOURCE,
                Error::Structural(_) => EXIT_INTERNAL,
            })
        }
    }
}

fn run(cli: &Cli) -> designlat::Result<Report> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Scan { problem } => {
            let report = scan(problem.problem()?, problem.n_min, problem.n_max)?;
            let body = if json {
                to_json(&report)
            } else {
                scan_text(&report)
            };
            Ok(Report { body, code: 0 })
        }
        Command::Dual { problem, config } => {
            let p = problem.problem()?;
            if !p.is_square() {
                return Err(Error::Domain(format!(
                    "dual analysis needs floor(m/2) + 1 = (t-1)/2; minimum {} at strength {} is overdetermined",
                    p.minimum, p.strength
                )));
            }
            let config = config.load()?;
            let report = scan(p, problem.n_min, problem.n_max)?;
            let records: Vec<DimensionRecord> = report
                .solutions
                .iter()
                .map(|sol| analyze_dimension(p, sol, &config))
                .collect::<designlat::Result<_>>()?;
            let code = if records.iter().any(|r| r.status == Status::Undecided) {
                EXIT_UNDECIDED
            } else {
                0
            };
            let body = if json {
                to_json(&records)
            } else {
                dual_text(p, &records)
            };
            Ok(Report { body, code })
        }
        Command::Verify {
            gram,
            t,
            force,
            pair_budget,
        } => {
            let g = GramMatrix::load(gram)?;
            let cert = verify_design(
                &g,
                *t,
                PairBudget {
                    max_pairs: *pair_budget,
                    force: *force,
                },
            )?;
            let body = if json {
                to_json(&cert)
            } else {
                verify_text(&cert)
            };
            Ok(Report { body, code: 0 })
        }
        Command::Classify {
            t,
            min_max,
            n_max,
            config,
            verify_fixtures,
        } => {
            let config = config.load()?;
            let options = ClassifyOptions {
                n_max: *n_max,
                verify_fixtures: *verify_fixtures,
            };
            let cert = classify(*t, *min_max, &config, &options)?;
            let code = if cert.is_decided() { 0 } else { EXIT_UNDECIDED };
            let body = if json {
                to_json(&cert)
            } else {
                classify_text(&cert)
            };
            Ok(Report { body, code })
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn scan_text(report: &ScanReport) -> String {
    let p = report.problem;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "scan: strength {}, minimum {}, dimensions {}..{}",
        p.strength, p.minimum, report.n_min, report.n_max
    );
    if report.solutions.is_empty() {
        out.push_str("no solutions\n");
    } else {
        let mut header = vec!["n".to_string(), "s".to_string()];
        header.extend((1..=p.bound()).map(|j| format!("s_{j}")));
        let mut rows = vec![header];
        for sol in &report.solutions {
            let mut row = vec![sol.n.to_string(), sol.s.to_string()];
            row.extend(sol.counts.iter().map(BigInt::to_string));
            rows.push(row);
        }
        out.push_str(&table(&rows));
    }
    for sol in &report.zero_count_solutions {
        let _ = writeln!(
            out,
            "zero count (excluded): n = {}, s = {}, counts [{}]",
            sol.n,
            sol.s,
            join(&sol.counts)
        );
    }
    for sing in &report.singular {
        let _ = writeln!(
            out,
            "singular: n = {}, rank {}, {}",
            sing.n,
            sing.rank,
            if sing.consistent {
                "solution family exists"
            } else {
                "inconsistent"
            }
        );
    }
    let _ = writeln!(
        out,
        "non-integral or negative: {} dimension(s)",
        report.infeasible
    );
    out
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

fn poly_text(coeffs: &[BigInt]) -> String {
    QPolynomial::new(
        coeffs
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect(),
    )
    .to_string()
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Eliminated => "eliminated",
        Status::Survives => "survives",
        Status::Undecided => "undecided",
    }
}

fn dimension_text(out: &mut String, d: &DimensionRecord, indent: &str) {
    let _ = writeln!(out, "{indent}n = {}, s = {}", d.n, d.s);
    let _ = writeln!(out, "{indent}  p_n(t) = {}", poly_text(&d.dual.polynomial));
    if d.dual.roots.is_empty() {
        let _ = writeln!(out, "{indent}  positive rational roots: none");
    }
    for root in &d.dual.roots {
        let counts: Vec<String> = root.counts.iter().map(format_rational).collect();
        let _ = writeln!(
            out,
            "{indent}  root t = {}: dual counts [{}]{}",
            format_rational(&root.norm),
            counts.join(", "),
            if root.inadmissible_counts {
                " (not non-negative integers)"
            } else {
                ""
            }
        );
    }
    for v in &d.non_unimodular {
        let _ = writeln!(out, "{indent}  non-unimodular, {}", describe_verdict(v));
    }
    if let Some(v) = &d.unimodular {
        let _ = writeln!(out, "{indent}  unimodular, {}", describe_verdict(v));
    }
    let _ = writeln!(out, "{indent}  status: {}", status_text(d.status));
}

fn dual_text(p: DesignProblem, records: &[DimensionRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dual: strength {}, minimum {}", p.strength, p.minimum);
    if records.is_empty() {
        out.push_str("nothing to analyze (no feasible dimensions)\n");
    }
    for d in records {
        dimension_text(&mut out, d, "");
    }
    out
}

fn verify_text(c: &DesignCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "lattice: dimension {}, minimum {}, kissing number {}",
        c.dimension, c.minimum, c.kissing_number
    );
    for m in &c.moments {
        let _ = writeln!(
            out,
            "moment 2i = {}: pair sum {}, target {}, {}",
            2 * m.i,
            m.pair_sum,
            format_rational(&m.target),
            if m.holds { "holds" } else { "fails" }
        );
    }
    let verdict = if c.passes { "pass" } else { "fail" };
    let _ = write!(out, "{}-design: {verdict}", c.requested_strength);
    match c.failing_moment {
        Some(i) => {
            let _ = writeln!(
                out,
                " (moment 2i = {} fails; largest strength {})",
                2 * i,
                c.strength
            );
        }
        None => out.push('\n'),
    }
    let dist: Vec<String> = c
        .inner_product_distribution
        .iter()
        .map(|(a, n)| format!("{a}:{n}"))
        .collect();
    let _ = writeln!(out, "inner products over X x X: {}", dist.join(" "));
    out
}

fn survivor_text(s: &Survivor) -> String {
    let mut flags = Vec::new();
    if s.even {
        flags.push("even");
    }
    if s.unimodular {
        flags.push("unimodular");
    }
    if s.extremal {
        flags.push("extremal");
    }
    let source = match s.provenance {
        Provenance::Computed => "computed",
        Provenance::Cited => "cited, not recomputed",
    };
    let mut line = format!(
        "n = {}, minimum {}, s = {}, {} [{}; {}]",
        s.n,
        s.minimum,
        s.s,
        s.name,
        flags.join(", "),
        source
    );
    if let Some(v) = s.verified {
        let _ = write!(
            line,
            " [fixture re-verified: {}]",
            if v { "pass" } else { "fail" }
        );
    }
    line
}

fn record_text(out: &mut String, r: &MinimumRecord, indent: &str) {
    let label = match r.method {
        Method::Cited => format!("minimum ≤ {}: cited, not recomputed", r.minimum),
        Method::Computed => format!("minimum {}: computed (strength {})", r.minimum, r.strength),
        Method::Reduced => format!("minimum {}: reduced (strength {})", r.minimum, r.strength),
    };
    let _ = writeln!(out, "{indent}{label}");
    if let Some(c) = &r.citation {
        let _ = writeln!(out, "{indent}  {c}");
    }
    for f in &r.fixture_checks {
        let _ = writeln!(
            out,
            "{indent}  fixture {}: minimum {}, kissing number {}, {}-design: {}",
            f.name,
            f.minimum,
            f.kissing_number,
            f.strength,
            if f.passes { "pass" } else { "fail" }
        );
    }
    if let Some(scan) = &r.scan {
        if scan.solutions.is_empty() {
            let _ = writeln!(
                out,
                "{indent}  scan {}..{}: no solutions",
                scan.n_min, scan.n_max
            );
        } else {
            let pairs: Vec<String> = scan
                .solutions
                .iter()
                .map(|s| format!("({}, {})", s.n, s.s))
                .collect();
            let _ = writeln!(
                out,
                "{indent}  scan {}..{}: (n, s) = {}",
                scan.n_min,
                scan.n_max,
                pairs.join(" ")
            );
        }
    }
    for z in &r.zero_count {
        let _ = writeln!(
            out,
            "{indent}  note: zero-count solution n = {}, s = {} excluded",
            z.n, z.s
        );
    }
    let inner = format!("{indent}  ");
    for d in &r.dimensions {
        dimension_text(out, d, &inner);
    }
    if let Some(red) = &r.reduction {
        let _ = writeln!(
            out,
            "{indent}  strength-{} candidates [{}], kept [{}], dropped [{}]",
            red.from_strength,
            join(&red.candidates),
            join(&red.kept),
            join(&red.dropped)
        );
        let nested = format!("{indent}    ");
        record_text(out, &red.previous, &nested);
    }
    for s in &r.survivors {
        let _ = writeln!(out, "{indent}  survivor: {}", survivor_text(s));
        for c in &s.citations {
            if Some(c) != r.citation.as_ref() {
                let _ = writeln!(out, "{indent}    {c}");
            }
        }
    }
    for u in &r.undecided {
        let _ = writeln!(out, "{indent}  undecided: {u}");
    }
}

fn classify_text(c: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "classify: strength {}, minimum ≤ {}, dimensions 1..{}",
        c.strength, c.minimum_max, c.n_max
    );
    for r in &c.minima {
        record_text(&mut out, r, "");
    }
    out.push_str("final:\n");
    if c.final_lattices.is_empty() {
        out.push_str("  none\n");
    }
    for s in &c.final_lattices {
        let _ = writeln!(out, "  {}", survivor_text(s));
    }
    for u in &c.undecided {
        let _ = writeln!(out, "undecided: {u}");
    }
    let _ = writeln!(out, "conclusion: {}", c.conclusion);
    out
}
