//! Thin command-line front end over the genforms library.
//!
//! Exit codes: 0 all expectations met, 1 some expectation violated (or a
//! computation failed), 2 usage error, 3 resource cap exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use genforms::bigraded::bigraded_froberg_series;
use genforms::engine::{
    bigraded_quotient_series, quotient_series, QuotientOutput, DEFAULT_PRIME, DEFAULT_TRIALS,
};
use genforms::error::Error;
use genforms::harness::{
    check, parse_grid_config, recheck, run_grid, CheckId, CheckParams, CheckSpec, Expectation,
    VerificationReport, DEFAULT_SEED,
};
use genforms::ideals::{search_extremal_series, EnumerateOptions};
use genforms::monomial::AlgebraKind;
use genforms::paths::paths_conjecture_series;
use genforms::series::{
    anick_series, exterior_expected_series, froberg_series, max_series_two_vars, DegreeSequence,
    TruncatedSeries,
};
use genforms::speclang::parse_generators;
use genforms::FieldSpec;

#[derive(Parser)]
#[command(
    name = "genforms",
    version,
    about = "Hilbert series of graded algebras modulo ideals of generic forms",
    long_about = "Computes closed-form expected Hilbert series, empirical series by \
                  finite-field rank computations, exhaustive extremal searches over monomial \
                  ideals, and verdict reports for the conjectures the library covers.\n\
                  Generator lists use a mini-language documented in docs/generator-specs.md, \
                  e.g. 'generic:2x4', 'varpow:2, linpow:2x2', 'fl-family:q=2'."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Froberg,
    Anick,
    Exterior,
    Max2,
    Paths,
    Bigraded,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algebra {
    Comm,
    Ext,
    Tensor,
    Bigraded,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Print a closed-form expected series.
    Series {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        /// Comma-separated generator degrees, e.g. 3,2,2.
        #[arg(long)]
        degrees: Option<String>,
        /// Comma-separated bidegrees d:e, e.g. 2:1,2:1.
        #[arg(long)]
        bidegrees: Option<String>,
        #[arg(long, default_value_t = 16)]
        prec: usize,
        #[arg(long)]
        prec_x: Option<usize>,
        #[arg(long)]
        prec_y: Option<usize>,
        /// Use the zeros-pass truncation convention in two variables.
        #[arg(long)]
        no_strict: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute an empirical quotient series with the rank engine.
    Compute {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
        /// Generator list in the spec mini-language.
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        field: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u32,
        #[arg(long, default_value_t = 10)]
        max_deg: u32,
        #[arg(long, default_value_t = 6)]
        prec_x: usize,
        #[arg(long, default_value_t = 6)]
        prec_y: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run one conjecture check and report the verdict.
    Verify {
        /// Re-derive the verdict embedded in a report file and compare.
        #[arg(long)]
        recheck: Option<PathBuf>,
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long)]
        bidegrees: Option<String>,
        /// Comma-separated multidegrees d:e:f, one per form.
        #[arg(long)]
        multidegrees: Option<String>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        q_infinite: bool,
        /// Plus-separated factor degrees for product checks, e.g. 2+1+1.
        #[arg(long)]
        factors: Option<String>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        with_squares: bool,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        second_prime: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u32>,
        #[arg(long)]
        max_deg: Option<u32>,
        #[arg(long)]
        prec_x: Option<usize>,
        #[arg(long)]
        prec_y: Option<usize>,
        #[arg(long)]
        no_strict: bool,
        /// Override the default expectation: match | differ | report.
        #[arg(long)]
        expect: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a grid of checks from a declarative config file.
    Grid {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive extremal search over minimal monomial ideals.
    SearchMax {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degrees: String,
        /// Candidate-count cap before enumeration starts.
        #[arg(long, default_value_t = 2_000_000)]
        cap: u64,
        /// Compare raw ideals instead of one representative per
        /// variable-permutation orbit.
        #[arg(long)]
        no_canonicalize: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidParameter(_)
        | Error::SpecKindMismatch(_)
        | Error::ZeroDegree
        | Error::NotPrime(_)
        | Error::HypothesisViolated(_)
        | Error::ZeroConstantTerm => 2,
        Error::ResourceCap(_) => 3,
        _ => 1,
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Error> {
    match &output.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{text}")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn parse_degree_list(text: &str) -> Result<Vec<u32>, Error> {
    text.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad degree '{p}'"))))
        .collect()
}

fn parse_bidegree_list(text: &str) -> Result<Vec<(u32, u32)>, Error> {
    text.split(',')
        .map(|p| {
            let (a, b) =
                p.trim().split_once(':').ok_or_else(|| Error::Parse(format!("bad bidegree '{p}'")))?;
            Ok((
                a.parse().map_err(|_| Error::Parse(format!("bad bidegree '{p}'")))?,
                b.parse().map_err(|_| Error::Parse(format!("bad bidegree '{p}'")))?,
            ))
        })
        .collect()
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Series {
            family,
            n,
            m,
            degrees,
            bidegrees,
            prec,
            prec_x,
            prec_y,
            no_strict,
            output,
        } => {
            let degs = match &degrees {
                Some(text) => DegreeSequence::new(parse_degree_list(text)?)?,
                None => DegreeSequence::empty(),
            };
            let need_n = || n.ok_or_else(|| Error::InvalidParameter("--n required".into()));
            let series: Option<TruncatedSeries> = match family {
                Family::Froberg => Some(froberg_series(need_n()?, &degs, prec)),
                Family::Anick => Some(anick_series(need_n()?, &degs, prec)),
                Family::Exterior => Some(exterior_expected_series(need_n()?, &degs, prec)),
                Family::Max2 => {
                    if degs.is_empty() {
                        return Err(Error::InvalidParameter("--degrees required".into()));
                    }
                    Some(max_series_two_vars(&degs, prec))
                }
                Family::Paths => {
                    let n = need_n()?;
                    let p = prec.min((n as usize + 2) / 2 + 2);
                    Some(paths_conjecture_series(n, p))
                }
                Family::Bigraded => None,
            };
            match series {
                Some(s) => match output.format {
                    Format::Json => emit(&output, &serde_json::to_string(&s)?)?,
                    _ => emit(&output, &s.to_string())?,
                },
                None => {
                    let m = m.ok_or_else(|| Error::InvalidParameter("--m required".into()))?;
                    let n = need_n()?;
                    let bide = parse_bidegree_list(
                        bidegrees
                            .as_deref()
                            .ok_or_else(|| Error::InvalidParameter("--bidegrees required".into()))?,
                    )?;
                    let s = bigraded_froberg_series(
                        m,
                        n,
                        &bide,
                        prec_x.unwrap_or(6),
                        prec_y.unwrap_or(6),
                        !no_strict,
                    );
                    match output.format {
                        Format::Json => emit(&output, &serde_json::to_string(&s)?)?,
                        _ => emit(&output, &s.to_string())?,
                    }
                }
            }
            Ok(0)
        }

        Command::Compute {
            algebra,
            n,
            m,
            gens,
            field,
            seed,
            trials,
            max_deg,
            prec_x,
            prec_y,
            output,
        } => {
            let field = FieldSpec::new(field)?;
            let specs = parse_generators(&gens)?;
            match algebra {
                Algebra::Bigraded => {
                    let m = m.ok_or_else(|| Error::InvalidParameter("--m required".into()))?;
                    let (series, profile) =
                        bigraded_quotient_series(m, n, &specs, field, seed, trials, prec_x, prec_y)?;
                    let doc = serde_json::json!({
                        "schema": 1,
                        "version": env!("CARGO_PKG_VERSION"),
                        "algebra": format!("bigraded(m={m},n={n})"),
                        "gens": gens,
                        "seed": seed,
                        "prime": field.prime(),
                        "trials": trials,
                        "series": series,
                        "profile": profile,
                    });
                    match output.format {
                        Format::Json => emit(&output, &serde_json::to_string(&doc)?)?,
                        _ => emit(
                            &output,
                            &format!(
                                "series (rows = x-degree):\n{series}seed {seed}  prime {}  trials {trials}",
                                field.prime()
                            ),
                        )?,
                    }
                }
                _ => {
                    let kind = match algebra {
                        Algebra::Comm => AlgebraKind::Commutative { n },
                        Algebra::Ext => AlgebraKind::Exterior { n },
                        Algebra::Tensor => AlgebraKind::Tensor { n },
                        Algebra::Bigraded => unreachable!(),
                    };
                    let QuotientOutput { series, profile } =
                        quotient_series(kind, &specs, field, seed, trials, max_deg)?;
                    let doc = serde_json::json!({
                        "schema": 1,
                        "version": env!("CARGO_PKG_VERSION"),
                        "algebra": kind.to_string(),
                        "gens": gens,
                        "seed": seed,
                        "prime": field.prime(),
                        "trials": trials,
                        "series": series,
                        "profile": profile,
                    });
                    match output.format {
                        Format::Json => emit(&output, &serde_json::to_string(&doc)?)?,
                        _ => {
                            let mut text = format!("series: {series}\n");
                            text.push_str("degree  ambient  ideal_rank  quotient\n");
                            for dr in &profile.per_degree {
                                text.push_str(&format!(
                                    "{:>6}  {:>7}  {:>10}  {:>8}\n",
                                    dr.degree.to_string(),
                                    dr.ambient_dim,
                                    dr.ideal_rank,
                                    dr.quotient_dim
                                ));
                            }
                            text.push_str(&format!(
                                "seed {seed}  prime {}  trials {trials}",
                                field.prime()
                            ));
                            emit(&output, &text)?;
                        }
                    }
                }
            }
            Ok(0)
        }

        Command::Verify { recheck: recheck_path, output, .. } if recheck_path.is_some() => {
            let path = recheck_path.expect("guarded");
            let text = std::fs::read_to_string(&path)?;
            let report: VerificationReport = serde_json::from_str(&text)?;
            let rederived = recheck(&report)?;
            let same = rederived == report.verdict;
            let doc = serde_json::json!({
                "schema": 1,
                "stored_verdict": report.verdict,
                "recomputed_verdict": rederived,
                "identical": same,
            });
            match output.format {
                Format::Json => emit(&output, &serde_json::to_string(&doc)?)?,
                _ => emit(
                    &output,
                    &format!(
                        "stored {:?}, recomputed {:?}: {}",
                        report.verdict,
                        rederived,
                        if same { "identical" } else { "DIVERGED" }
                    ),
                )?,
            }
            Ok(if same { 0 } else { 1 })
        }

        Command::Verify {
            check: check_name,
            n,
            m,
            degrees,
            bidegrees,
            multidegrees,
            d,
            r,
            k,
            s,
            q,
            q_infinite,
            factors,
            i,
            with_squares,
            prime,
            second_prime,
            seed,
            trials,
            max_deg,
            prec_x,
            prec_y,
            no_strict,
            expect,
            output,
            ..
        } => {
            let check_id = CheckId::from_str(
                check_name
                    .as_deref()
                    .ok_or_else(|| Error::InvalidParameter("--check required".into()))?,
            )?;
            let params = CheckParams {
                n,
                m,
                degrees: degrees.as_deref().map(parse_degree_list).transpose()?,
                bidegrees: bidegrees.as_deref().map(parse_bidegree_list).transpose()?,
                multidegrees: multidegrees
                    .as_deref()
                    .map(|text| {
                        text.split(',')
                            .map(|p| {
                                p.trim()
                                    .split(':')
                                    .map(|x| {
                                        x.parse::<u32>().map_err(|_| {
                                            Error::Parse(format!("bad multidegree '{p}'"))
                                        })
                                    })
                                    .collect::<Result<Vec<u32>, Error>>()
                            })
                            .collect::<Result<Vec<Vec<u32>>, Error>>()
                    })
                    .transpose()?,
                d,
                r,
                k,
                s,
                q,
                q_infinite: if q_infinite { Some(true) } else { None },
                factors: factors
                    .as_deref()
                    .map(|f| {
                        f.split('+')
                            .map(|p| {
                                p.trim()
                                    .parse::<u32>()
                                    .map_err(|_| Error::Parse(format!("bad factor '{p}'")))
                            })
                            .collect::<Result<Vec<u32>, Error>>()
                    })
                    .transpose()?,
                i,
                with_squares: if with_squares { Some(true) } else { None },
                prime,
                second_prime,
                seed,
                trials,
                max_degree: max_deg,
                prec_x,
                prec_y,
                strict: if no_strict { Some(false) } else { None },
            };
            let expectation = expect.as_deref().map(Expectation::from_str).transpose()?;
            let spec = CheckSpec { check_id, params, expectation };
            let report = check(&spec)?;
            match output.format {
                Format::Json => emit(&output, &serde_json::to_string(&report)?)?,
                Format::Csv => emit(&output, &report_csv(std::slice::from_ref(&report)))?,
                Format::Table => emit(&output, &report_table(&report))?,
            }
            Ok(if report.expectation_met { 0 } else { 1 })
        }

        Command::Grid { config, output } => {
            let text = std::fs::read_to_string(&config)?;
            let grid = parse_grid_config(&text)?;
            let (cells, summary) = run_grid(&grid);
            match output.format {
                Format::Json => {
                    // JSON lines: one report object per cell, then the summary.
                    let mut lines = Vec::with_capacity(cells.len() + 1);
                    for cell in &cells {
                        lines.push(serde_json::to_string(cell)?);
                    }
                    lines.push(serde_json::to_string(&serde_json::json!({
                        "schema": 1,
                        "summary": summary,
                    }))?);
                    emit(&output, &lines.join("\n"))?;
                }
                Format::Csv => {
                    let reports: Vec<VerificationReport> =
                        cells.iter().filter_map(|c| c.report.clone()).collect();
                    emit(&output, &report_csv(&reports))?;
                }
                Format::Table => {
                    let mut text = String::new();
                    for cell in &cells {
                        match (&cell.report, &cell.error) {
                            (Some(rep), _) => {
                                text.push_str(&format!(
                                    "[{:>4}] {:<24} {:<40} {:?} (expected {:?}){}\n",
                                    cell.index,
                                    rep.check_id.to_string(),
                                    rep.params.compact(),
                                    rep.verdict,
                                    rep.expectation,
                                    if rep.expectation_met { "" } else { "  <-- FAILED" }
                                ));
                            }
                            (None, Some(err)) => {
                                text.push_str(&format!("[{:>4}] error: {err}\n", cell.index));
                            }
                            _ => {}
                        }
                    }
                    text.push_str(&summary.to_string());
                    emit(&output, &text)?;
                }
            }
            Ok(if summary.expectation_failures == 0 && summary.errors == 0 { 0 } else { 1 })
        }

        Command::SearchMax { n, degrees, cap, no_canonicalize, output } => {
            let degs = DegreeSequence::new(parse_degree_list(&degrees)?)?;
            let opts = EnumerateOptions { cap, canonicalize: !no_canonicalize };
            let report = search_extremal_series(n, &degs, &opts)?;
            match output.format {
                Format::Json => emit(&output, &serde_json::to_string(&report)?)?,
                _ => {
                    let mut text = format!(
                        "degrees {} in {} variables: {} candidate ideals\n",
                        report.degrees, report.n, report.candidates
                    );
                    text.push_str(&format!(
                        "unique coefficientwise maximum series: {}\n",
                        report.unique_maximum
                    ));
                    if let Some(flag) = report.theorem_bound_attained {
                        text.push_str(&format!("sharp two-variable bound attained: {flag}\n"));
                    }
                    text.push_str("maximal ideals:\n");
                    for entry in &report.maximal {
                        text.push_str(&format!("  {}  ->  {}\n", entry.ideal, entry.series));
                    }
                    text.push_str(&format!(
                        "lexicographically maximal: {}  ->  {}",
                        report.lex_maximal.ideal, report.lex_maximal.series
                    ));
                    emit(&output, &text)?;
                }
            }
            Ok(0)
        }
    }
}

fn report_table(report: &VerificationReport) -> String {
    let mut text = format!(
        "check        {}\nparams       {}\nexpectation  {:?}\nverdict      {:?}\nmet          {}\n",
        report.check_id,
        report.params.compact(),
        report.expectation,
        report.verdict,
        report.expectation_met
    );
    if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.computed {
        text.push_str(&format!("computed     {s}\n"));
    }
    if let Some(genforms::harness::SeriesPayload::Uni(s)) = &report.reference {
        text.push_str(&format!("reference    {s}\n"));
    }
    if let Some(c) = &report.convention {
        text.push_str(&format!("convention   {c}\n"));
    }
    text.push_str(&format!(
        "seed {}  primes {:?}  trials {}  wall {} ms",
        report.seed, report.primes, report.trials, report.wall_ms
    ));
    text
}

fn report_csv(reports: &[VerificationReport]) -> String {
    let mut text = String::from("check_id,params,verdict,first_divergence,seed,prime\n");
    for report in reports {
        let verdict = match report.verdict {
            genforms::harness::Verdict::Match => "match".to_string(),
            genforms::harness::Verdict::Mismatch { .. } => "mismatch".to_string(),
            genforms::harness::Verdict::Incomparable { .. } => "incomparable".to_string(),
        };
        let divergence = report
            .first_divergence()
            .map(|deg| deg.to_string())
            .unwrap_or_default();
        text.push_str(&format!(
            "{},\"{}\",{},{},{},{}\n",
            report.check_id,
            report.params.compact(),
            verdict,
            divergence,
            report.seed,
            report.primes.first().copied().unwrap_or_default()
        ));
    }
    text.pop();
    text
}
