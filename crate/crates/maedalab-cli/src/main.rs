//! Command-line front end for the maedalab library.
//!
//! One subcommand per experiment: `census` (d-cycle counts in Sₙ), `seq`
//! (the a(i) table and limit enclosures), `density` and `effective` (tower
//! recursions with guaranteed lower bounds), `scan` and `classes`
//! (Chebotarev statistics of a polynomial), and `maeda` (T₂ charpoly
//! evidence per weight).
//!
//! Output conventions: JSON carries exact rationals as {num, den} decimal
//! strings with float mirrors and a top-level "schema": 1; CSV carries
//! plottable floats (exact integer counts aside), flagged by a leading
//! comment. Identical inputs — including seed and worker count — produce
//! byte-identical output. Exit codes: 0 success, 2 validation error, 3 when
//! --strict demands a conclusive verdict and the run was inconclusive.

use clap::{Parser, Subcommand, ValueEnum};
use maedalab::density_model::{effective_lower_bound, target_group_label, tower_density, TowerSpec};
use maedalab::ffpoly::{chebotarev_scan, chebotarev_scan_rows, profile_density_table, IntPolynomial, Verdict};
use maedalab::hecke::{maeda_evidence, EvidenceVerdict, MaedaEvidence};
use maedalab::permcycles::{
    census_bruteforce, count_at_least_one, count_exactly_j, count_special_b1, count_special_b2,
    monte_carlo_census, predicted_proportion_f64, signed_discrepancy_bound,
};
use maedalab::rational::{factorial, ratio_to_f64, Rational};
use maedalab::sequences::{a_recursive, limit_enclosure, tail_bound, MaedaSequence};
use maedalab::{Error, Result};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Environment variable supplying the default worker count.
const WORKERS_ENV: &str = "MAEDALAB_WORKERS";

#[derive(Parser)]
#[command(
    name = "maedalab",
    version,
    about = "Cycle censuses, density towers, Chebotarev scans, and Hecke charpoly evidence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Worker threads for prime scans and the weight sweep
    /// (default: $MAEDALAB_WORKERS, else 1).
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Exit with status 3 when a verdict is inconclusive.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// d-cycle census of S_n: closed formulas by default, exhaustive
    /// enumeration with --brute, Monte Carlo with --samples.
    Census {
        /// Symmetric group degree n.
        #[arg(long)]
        n: u32,
        /// Cycle length d.
        #[arg(long)]
        d: u32,
        /// Enumerate all n! permutations (n <= 10) instead of using formulas.
        #[arg(long)]
        brute: bool,
        /// Estimate proportions from this many seeded random permutations.
        #[arg(long, value_name = "N")]
        samples: Option<u64>,
        /// Seed for --samples mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Table of the census proportions a(i) for a fixed cycle length d.
    Seq {
        /// Cycle length d.
        #[arg(long)]
        d: u32,
        /// Largest index i to tabulate.
        #[arg(long)]
        imax: usize,
        /// Evaluate the closed alternating sum instead of the recursion.
        #[arg(long)]
        closed: bool,
        /// Also report the rational enclosure of lim a(i) = 1 - exp(-1/d)
        /// using this many terms.
        #[arg(long, value_name = "TERMS")]
        enclosure_terms: Option<usize>,
    },
    /// Inclusion-exclusion density recursion over an explicit tower of
    /// degrees.
    Density {
        /// Target cycle length / residue degree d.
        #[arg(long)]
        d: u32,
        /// Comma-separated tower degrees, strictly increasing, each at least
        /// max(5, 2d).
        #[arg(long, value_delimiter = ',', required = true, value_name = "N1,N2,...")]
        degrees: Vec<u32>,
        /// Track guaranteed intervals (with rigorous delta bounds) alongside
        /// the point values.
        #[arg(long)]
        guaranteed: bool,
        /// Alternating-series terms for the enclosures behind each delta
        /// bound.
        #[arg(long, default_value_t = 16, value_name = "TERMS")]
        enclosure_terms: usize,
    },
    /// Guaranteed lower bound for the record tower of all weights up to B.
    Effective {
        /// Target residue degree d.
        #[arg(long)]
        d: u32,
        /// Weight bound B for the record tower.
        #[arg(long = "B")]
        b: u32,
        /// Alternating-series terms for the enclosures behind each delta
        /// bound.
        #[arg(long, default_value_t = 16, value_name = "TERMS")]
        enclosure_terms: usize,
    },
    /// Chebotarev scan: how often does f mod p show a degree-d factor?
    Scan {
        /// Monic integer polynomial, e.g. "x^5-x-1" or "-1,-1,0,0,0,1".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Factor degree to count.
        #[arg(long)]
        d: u32,
        /// Scan all primes p <= plimit.
        #[arg(long)]
        plimit: u64,
    },
    /// Empirical distribution of factorization profiles of f mod p.
    Classes {
        /// Monic integer polynomial, e.g. "x^3-2".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Scan all primes p <= plimit.
        #[arg(long)]
        plimit: u64,
    },
    /// Maeda evidence sweep: T2 charpoly irreducibility and S_n
    /// certification per weight.
    Maeda {
        /// Inclusive weight range "12..200" (or a single weight "48"); only
        /// even weights are processed.
        #[arg(long)]
        weights: String,
        /// Prime budget for irreducibility and group witnesses.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
}

/// A finished run: the text to emit and whether a --strict caller should see
/// exit status 3.
struct Rendered {
    text: String,
    inconclusive: bool,
}

impl Rendered {
    fn conclusive(text: String) -> Self {
        Rendered { text, inconclusive: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let strict = cli.strict;
    let output = cli.output.clone();
    match execute(cli) {
        Ok(rendered) => {
            let write_result = match &output {
                Some(path) => std::fs::write(path, &rendered.text),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(rendered.text.as_bytes())
                }
            };
            if let Err(e) = write_result {
                eprintln!("error[io-error]: {e}");
                return ExitCode::from(2);
            }
            if strict && rendered.inconclusive {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<Rendered> {
    let format = cli.format;
    match cli.command {
        Command::Census { n, d, brute, samples, seed } => {
            run_census(n, d, brute, samples, seed, format)
        }
        Command::Seq { d, imax, closed, enclosure_terms } => {
            run_seq(d, imax, closed, enclosure_terms, format)
        }
        Command::Density { d, degrees, guaranteed, enclosure_terms } => {
            run_density(d, degrees, guaranteed, enclosure_terms, format)
        }
        Command::Effective { d, b, enclosure_terms } => {
            run_effective(d, b, enclosure_terms, format)
        }
        Command::Scan { poly, d, plimit } => {
            run_scan(&poly, d, plimit, resolve_workers(cli.workers)?, format)
        }
        Command::Classes { poly, plimit } => {
            run_classes(&poly, plimit, resolve_workers(cli.workers)?, format)
        }
        Command::Maeda { weights, budget } => {
            run_maeda(&weights, budget, resolve_workers(cli.workers)?, format)
        }
    }
}

/// Worker count: --workers flag, else $MAEDALAB_WORKERS, else 1.
fn resolve_workers(flag: Option<usize>) -> Result<usize> {
    let workers = match flag {
        Some(w) => w,
        None => match std::env::var(WORKERS_ENV) {
            Ok(raw) => raw.parse().map_err(|_| {
                Error::InvalidParameter(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}"))
            })?,
            Err(_) => 1,
        },
    };
    if workers < 1 {
        return Err(Error::InvalidParameter("workers must be at least 1".into()));
    }
    Ok(workers)
}

/// Adds the top-level "schema": 1 marker every JSON output carries.
fn with_schema(mut v: serde_json::Value) -> serde_json::Value {
    v.as_object_mut()
        .expect("top-level JSON output is an object")
        .insert("schema".into(), json!(1));
    v
}

fn render_json(v: serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(&with_schema(v)).expect("JSON serialization");
    text.push('\n');
    text
}

/// {num, den, float} object for an exact rational (reduced for canonical
/// output).
fn rat_json(r: &Rational) -> serde_json::Value {
    let r = r.reduced();
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "float": ratio_to_f64(&r),
    })
}

const FLOAT_MIRROR_NOTE: &str = "# floats are non-guaranteed mirrors; exact rationals appear in JSON output only\n";

// ---------------------------------------------------------------------------
// census

fn run_census(
    n: u32,
    d: u32,
    brute: bool,
    samples: Option<u64>,
    seed: u64,
    format: Format,
) -> Result<Rendered> {
    if brute && samples.is_some() {
        return Err(Error::InvalidParameter(
            "--brute and --samples are mutually exclusive".into(),
        ));
    }
    if let Some(samples) = samples {
        let mc = monte_carlo_census(n, d, samples, seed)?;
        let predicted = predicted_proportion_f64(n, d);
        let text = match format {
            Format::Json => render_json(json!({
                "mode": "monte-carlo",
                "n": mc.n,
                "d": mc.d,
                "samples": mc.samples,
                "seed": mc.seed,
                "at_least_one": {
                    "hits": mc.at_least_one.hits,
                    "proportion": mc.at_least_one.proportion,
                    "std_error": mc.at_least_one.std_error,
                },
                "exactly_j": mc.exactly_j.iter().map(|e| json!({
                    "hits": e.hits,
                    "proportion": e.proportion,
                    "std_error": e.std_error,
                })).collect::<Vec<_>>(),
                "predicted_at_least_one": predicted,
            })),
            Format::Csv => {
                let mut out = String::new();
                out.push_str("# Monte Carlo d-cycle census\n");
                out.push_str(FLOAT_MIRROR_NOTE);
                out.push_str("key,value\n");
                let _ = writeln!(out, "n,{n}");
                let _ = writeln!(out, "d,{d}");
                let _ = writeln!(out, "samples,{samples}");
                let _ = writeln!(out, "seed,{seed}");
                let _ = writeln!(out, "at_least_one_hits,{}", mc.at_least_one.hits);
                let _ = writeln!(out, "at_least_one_proportion,{}", mc.at_least_one.proportion);
                let _ = writeln!(out, "at_least_one_std_error,{}", mc.at_least_one.std_error);
                for (idx, e) in mc.exactly_j.iter().enumerate() {
                    let _ = writeln!(out, "exactly_{}_proportion,{}", idx + 1, e.proportion);
                }
                let _ = writeln!(out, "predicted_at_least_one,{predicted}");
                out
            }
        };
        return Ok(Rendered::conclusive(text));
    }

    if brute {
        let census = census_bruteforce(n, d)?;
        let text = match format {
            Format::Json => {
                let mut v = census.to_json();
                v.as_object_mut().unwrap().insert("mode".into(), json!("bruteforce"));
                render_json(v)
            }
            Format::Csv => {
                let mut out = String::new();
                out.push_str("# exhaustive d-cycle census (all n! permutations)\n");
                out.push_str("key,value\n");
                let _ = writeln!(out, "n,{}", census.n);
                let _ = writeln!(out, "d,{}", census.d);
                let _ = writeln!(out, "total,{}", census.total);
                let _ = writeln!(out, "at_least_one,{}", census.at_least_one);
                for (idx, c) in census.exactly_j.iter().enumerate() {
                    let _ = writeln!(out, "exactly_{},{c}", idx + 1);
                }
                let _ = writeln!(out, "plus,{}", census.plus);
                let _ = writeln!(out, "minus,{}", census.minus);
                let _ = writeln!(out, "special_b1,{}", census.special_b1);
                let _ = writeln!(out, "special_b2,{}", census.special_b2);
                out
            }
        };
        return Ok(Rendered::conclusive(text));
    }

    // Formula mode: exact counts for n >= 2d without enumeration.
    let total = factorial(n as u64);
    let at_least_one = count_at_least_one(n, d)?;
    let jmax = n / d;
    let exactly: Vec<String> = (1..=jmax)
        .map(|j| count_exactly_j(n, d, j).map(|c| c.to_string()))
        .collect::<Result<_>>()?;
    let b1 = count_special_b1(n, d)?;
    let b2 = count_special_b2(n, d)?;
    let bound = signed_discrepancy_bound(n, d)?;
    let text = match format {
        Format::Json => render_json(json!({
            "mode": "formula",
            "n": n,
            "d": d,
            "total": total.to_string(),
            "at_least_one": at_least_one.to_string(),
            "exactly_j": exactly,
            "special_b1": b1.to_string(),
            "special_b2": b2.to_string(),
            "discrepancy_bound": rat_json(&bound),
        })),
        Format::Csv => {
            let mut out = String::new();
            out.push_str("# d-cycle census of S_n by closed formulas\n");
            out.push_str(FLOAT_MIRROR_NOTE);
            out.push_str("key,value\n");
            let _ = writeln!(out, "n,{n}");
            let _ = writeln!(out, "d,{d}");
            let _ = writeln!(out, "total,{total}");
            let _ = writeln!(out, "at_least_one,{at_least_one}");
            for (idx, c) in exactly.iter().enumerate() {
                let _ = writeln!(out, "exactly_{},{c}", idx + 1);
            }
            let _ = writeln!(out, "special_b1,{b1}");
            let _ = writeln!(out, "special_b2,{b2}");
            let _ = writeln!(out, "discrepancy_bound_float,{}", ratio_to_f64(&bound));
            out
        }
    };
    Ok(Rendered::conclusive(text))
}

// ---------------------------------------------------------------------------
// seq

fn run_seq(
    d: u32,
    imax: usize,
    closed: bool,
    enclosure_terms: Option<usize>,
    format: Format,
) -> Result<Rendered> {
    // The closed form equals the recursion; --closed only switches the
    // evaluation route.
    let seq: MaedaSequence = a_recursive(d, imax)?;
    let values: Vec<Rational> = if closed {
        (0..=imax).map(|i| maedalab::sequences::a_closed(d, i)).collect()
    } else {
        seq.a.clone()
    };
    let mode = if closed { "closed" } else { "recursive" };
    let enclosure = match enclosure_terms {
        Some(terms) => Some((terms, limit_enclosure(d, terms)?, tail_bound(d, terms))),
        None => None,
    };

    let text = match format {
        Format::Json => {
            let terms: Vec<serde_json::Value> = values
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let mut obj = rat_json(a);
                    obj.as_object_mut().unwrap().insert("i".into(), json!(i));
                    obj
                })
                .collect();
            let mut v = json!({
                "d": d,
                "i_max": imax,
                "mode": mode,
                "terms": terms,
            });
            if let Some((t, interval, tail)) = &enclosure {
                v.as_object_mut().unwrap().insert(
                    "enclosure".into(),
                    json!({
                        "terms": t,
                        "lo": rat_json(interval.lo()),
                        "hi": rat_json(interval.hi()),
                        "tail_bound": rat_json(tail),
                    }),
                );
            }
            render_json(v)
        }
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# a(i) table for d = {d} ({mode})");
            out.push_str("# floats are non-guaranteed mirrors; exact values are the num/den columns\n");
            out.push_str("i,a_num,a_den,a_float\n");
            for (i, a) in values.iter().enumerate() {
                let a = a.reduced();
                let _ = writeln!(out, "{i},{},{},{}", a.numer(), a.denom(), ratio_to_f64(&a));
            }
            if let Some((t, interval, _)) = &enclosure {
                let _ = writeln!(out, "# limit enclosure of 1 - exp(-1/{d}) from {t} terms");
                out.push_str("lo_num,lo_den,hi_num,hi_den\n");
                let (lo, hi) = (interval.lo().reduced(), interval.hi().reduced());
                let _ = writeln!(out, "{},{},{},{}", lo.numer(), lo.denom(), hi.numer(), hi.denom());
            }
            out
        }
    };
    Ok(Rendered::conclusive(text))
}

// ---------------------------------------------------------------------------
// density

fn run_density(
    d: u32,
    degrees: Vec<u32>,
    guaranteed: bool,
    enclosure_terms: usize,
    format: Format,
) -> Result<Rendered> {
    let tower = TowerSpec::new(d, degrees)?;
    let density = tower_density(&tower, enclosure_terms)?;
    let steps = tower.len();

    let text = match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = (0..=steps)
                .map(|n| {
                    let mut row = serde_json::Map::new();
                    row.insert("step".into(), json!(n));
                    if n == 0 {
                        row.insert("degree".into(), json!(null));
                    } else {
                        row.insert("degree".into(), json!(tower.degrees[n - 1]));
                        row.insert("a".into(), rat_json(&density.a_terms[n - 1]));
                        if guaranteed {
                            row.insert("delta_bound".into(), rat_json(&density.delta_bounds[n - 1]));
                        }
                    }
                    row.insert("point".into(), rat_json(&density.point[n]));
                    row.insert("residual".into(), rat_json(&density.residuals[n]));
                    if guaranteed {
                        row.insert("lo".into(), rat_json(density.guaranteed[n].lo()));
                        row.insert("hi".into(), rat_json(density.guaranteed[n].hi()));
                    }
                    serde_json::Value::Object(row)
                })
                .collect();
            render_json(json!({
                "d": d,
                "degrees": tower.degrees,
                "enclosure_terms": enclosure_terms,
                "guaranteed": guaranteed,
                "steps": rows,
            }))
        }
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# tower density recursion, d = {d}");
            out.push_str(FLOAT_MIRROR_NOTE);
            if guaranteed {
                out.push_str("step,degree,a_float,delta_bound_float,point_float,residual_float,lo_float,hi_float\n");
            } else {
                out.push_str("step,degree,a_float,point_float,residual_float\n");
            }
            for n in 0..=steps {
                let (degree, a_str, db_str) = if n == 0 {
                    (String::new(), String::new(), String::new())
                } else {
                    (
                        tower.degrees[n - 1].to_string(),
                        ratio_to_f64(&density.a_terms[n - 1]).to_string(),
                        ratio_to_f64(&density.delta_bounds[n - 1]).to_string(),
                    )
                };
                let point = ratio_to_f64(&density.point[n]);
                let residual = ratio_to_f64(&density.residuals[n]);
                if guaranteed {
                    let (lo, hi) = density.guaranteed[n].to_f64s();
                    let _ = writeln!(out, "{n},{degree},{a_str},{db_str},{point},{residual},{lo},{hi}");
                } else {
                    let _ = writeln!(out, "{n},{degree},{a_str},{point},{residual}");
                }
            }
            out
        }
    };
    Ok(Rendered::conclusive(text))
}

// ---------------------------------------------------------------------------
// effective

fn run_effective(d: u32, b: u32, enclosure_terms: usize, format: Format) -> Result<Rendered> {
    let report = effective_lower_bound(d, b, enclosure_terms)?;
    let text = match format {
        Format::Json => render_json(report.to_json()),
        Format::Csv => {
            let mut out = String::new();
            out.push_str("# effective lower bound for the record tower\n");
            out.push_str(FLOAT_MIRROR_NOTE);
            out.push_str("key,value\n");
            let _ = writeln!(out, "d,{}", report.d);
            let _ = writeln!(out, "weight_bound,{}", report.weight_bound);
            let _ = writeln!(out, "enclosure_terms,{}", report.enclosure_terms);
            let _ = writeln!(out, "group,{}", target_group_label(report.d));
            let _ = writeln!(out, "tower_steps,{}", report.tower.len());
            let _ = writeln!(out, "lower_bound_float,{}", ratio_to_f64(&report.lower_bound));
            let _ = writeln!(out, "point_estimate_float,{}", ratio_to_f64(&report.point_estimate));
            out
        }
    };
    Ok(Rendered::conclusive(text))
}

// ---------------------------------------------------------------------------
// scan / classes

fn run_scan(poly: &str, d: u32, plimit: u64, workers: usize, format: Format) -> Result<Rendered> {
    let f = IntPolynomial::parse(poly)?;
    match format {
        Format::Json => {
            let experiment = chebotarev_scan(&f, d, plimit, workers)?;
            let inconclusive = experiment.certificate.verdict == Verdict::Inconclusive;
            Ok(Rendered {
                text: render_json(experiment.summary_json()),
                inconclusive,
            })
        }
        Format::Csv => {
            let (experiment, rows) = chebotarev_scan_rows(&f, d, plimit, workers)?;
            let mut out = String::new();
            let _ = writeln!(out, "# Chebotarev scan of {} for degree {d}, primes <= {plimit}", experiment.poly);
            let _ = writeln!(
                out,
                "# estimate = {} over {} unramified primes; certificate: {}",
                experiment.estimate_f64(),
                experiment.unramified_count,
                experiment.certificate.verdict
            );
            out.push_str("p,ramified,profile,hit\n");
            for row in &rows {
                let _ = writeln!(out, "{},{},{},{}", row.p, row.ramified, row.profile, row.hit);
            }
            Ok(Rendered {
                text: out,
                inconclusive: experiment.certificate.verdict == Verdict::Inconclusive,
            })
        }
    }
}

fn run_classes(poly: &str, plimit: u64, workers: usize, format: Format) -> Result<Rendered> {
    let f = IntPolynomial::parse(poly)?;
    let table = profile_density_table(&f, plimit, workers)?;
    let text = match format {
        Format::Json => render_json(table.to_json()),
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# factorization profiles of {} over {} unramified primes <= {plimit}",
                table.poly, table.unramified_count
            );
            out.push_str(FLOAT_MIRROR_NOTE);
            out.push_str("profile,count,frequency\n");
            for (pattern, &count) in &table.counts {
                let profile = pattern
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("-");
                let _ = writeln!(out, "{profile},{count},{}", table.frequency_f64(pattern));
            }
            out
        }
    };
    Ok(Rendered::conclusive(text))
}

// ---------------------------------------------------------------------------
// maeda

/// Parses "12..200" (inclusive on both ends) or a single weight "48".
fn parse_weight_range(raw: &str) -> Result<(u32, u32)> {
    let parse_one = |tok: &str| -> Result<u32> {
        tok.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad weight {tok:?} in range {raw:?}")))
    };
    match raw.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse_one(lo)?, parse_one(hi)?);
            if lo > hi {
                return Err(Error::InvalidParameter(format!(
                    "weight range {raw:?} is empty (start exceeds end)"
                )));
            }
            Ok((lo, hi))
        }
        None => {
            let k = parse_one(raw)?;
            Ok((k, k))
        }
    }
}

/// Applies `f` to 0..count on `workers` threads; results come back in index
/// order regardless of scheduling.
fn parallel_indexed<T, F>(count: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let slots: Vec<Mutex<Option<T>>> = (0..count).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = workers.max(1).min(count.max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= count {
                    break;
                }
                let value = f(idx);
                *slots[idx].lock().unwrap() = Some(value);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("every index computed"))
        .collect()
}

fn run_maeda(weights: &str, budget: u64, workers: usize, format: Format) -> Result<Rendered> {
    let (lo, hi) = parse_weight_range(weights)?;
    let ks: Vec<u32> = (lo..=hi).filter(|k| k % 2 == 0).collect();
    let results: Vec<Result<MaedaEvidence>> =
        parallel_indexed(ks.len(), workers, |idx| maeda_evidence(ks[idx], budget));
    let evidence: Vec<MaedaEvidence> = results.into_iter().collect::<Result<_>>()?;
    let all_consistent = evidence
        .iter()
        .all(|ev| ev.verdict == EvidenceVerdict::Consistent);

    let text = match format {
        Format::Json => render_json(json!({
            "weights": format!("{lo}..{hi}"),
            "budget": budget,
            "all_consistent": all_consistent,
            "evidence": evidence.iter().map(|ev| ev.to_json()).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# Maeda evidence for even weights {lo}..{hi}, prime budget {budget}");
            out.push_str("k,dk,verdict,irreducible_witness,charpoly\n");
            for ev in &evidence {
                let witness = ev
                    .irreducible_witness
                    .map(|p| p.to_string())
                    .unwrap_or_default();
                let _ = writeln!(out, "{},{},{},{witness},{}", ev.k, ev.dk, ev.verdict, ev.charpoly);
            }
            out
        }
    };
    Ok(Rendered { text, inconclusive: !all_consistent })
}
