use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use g2roll::compact::{compact_basis, ratio_scan};
use g2roll::exact::{fmt_q, parse_q, Rational, Sampler};
use g2roll::octonion::basis_multiplication_table;
use g2roll::pfaffian::{build_system, parse_point, system_rank_at};
use g2roll::report::{
    rolling_growth, run_all, run_suite, run_suite_with, sort_reports, tally_reports, to_json, to_text, RunConfig,
    Status, Suite, VerificationReport,
};
use g2roll::roots::{build_parabolic, root_decomposition, roots_dump};
use g2roll::serre::{render_json, render_latex, render_text, serre_basis, structure_constant_table};

#[derive(Parser)]
#[command(name = "g2roll", version, about = "Exact checks for the split octonion model of g2 and rolling balls")]
struct Cli {
    /// Seed for all sampled checks; G2ROLL_SEED overrides it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count for randomized checks; other counts scale with it.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include per-claim durations (breaks byte-identical output).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    /// Only for `constants`.
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every check suite.
    VerifyAll,
    /// Print the structure-constant table.
    Constants,
    /// Root system checks, or a JSON dump of roots, weights and flags.
    Roots {
        #[arg(long)]
        emit_json: bool,
    },
    /// Maximal compact subalgebra checks.
    Compact {
        /// Only report which ratios the compact plane satisfies.
        #[arg(long)]
        ratio_scan: bool,
    },
    /// Rolling distribution checks.
    Rolling {
        /// Radius ratio p/q.
        #[arg(long, value_parser = parse_ratio)]
        ratio: Option<Rational>,
        /// Print the growth vector at each sample point.
        #[arg(long)]
        growth: bool,
    },
    /// Null quadric checks; flags select subsets.
    Quadric {
        #[arg(long)]
        chain: bool,
        #[arg(long)]
        isotropy: bool,
        #[arg(long)]
        cover: bool,
        #[arg(long)]
        ratio_scan: bool,
    },
    /// Pfaffian system checks.
    Pfaffian {
        #[arg(long)]
        verify_all: bool,
        /// Kernel dimensions at a point such as x1,0,0.
        #[arg(long)]
        rank_at: Option<String>,
    },
    /// Split octonion checks.
    Octonions {
        /// Print the basis multiplication table.
        #[arg(long)]
        table: bool,
    },
}

fn parse_ratio(s: &str) -> Result<Rational, String> {
    let r = parse_q(s).map_err(|e| e.to_string())?;
    if r <= Rational::from_integer(0.into()) {
        return Err(format!("ratio must be positive, got {s}"));
    }
    Ok(r)
}

struct Output {
    body: String,
    failed: bool,
}

fn reports_output(mut v: Vec<VerificationReport>, format: Format, verbose: bool) -> Output {
    sort_reports(&mut v);
    let failed = tally_reports(&v).fail > 0;
    let body = match format {
        Format::Json => to_json(&v),
        _ if verbose => verbose_text(&v),
        _ => to_text(&v),
    };
    Output { body, failed }
}

/// Like the summary text, with every witness shown.
fn verbose_text(v: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in v {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAG",
        };
        s.push_str(&format!("{tag:<5} {}  {}\n      {}\n", r.claim_id, r.locus, r.witness));
        if let Some(ms) = r.duration_ms {
            s.push_str(&format!("      {ms:.1} ms\n"));
        }
    }
    let t = tally_reports(v);
    s.push_str(&format!("{} checks: {} pass, {} fail, {} flagged\n", v.len(), t.pass, t.fail, t.flagged));
    s
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<Output, String> {
    let f = cli.format;
    match &cli.cmd {
        Cmd::VerifyAll => Ok(reports_output(run_all(cfg), f, false)),
        Cmd::Constants => {
            let rd = root_decomposition().map_err(|e| e.to_string())?;
            let sb = serre_basis(&rd).map_err(|e| e.to_string())?;
            match structure_constant_table(&sb, &rd) {
                Ok(t) => Ok(Output {
                    body: match f {
                        Format::Text => render_text(&t),
                        Format::Json => render_json(&t),
                        Format::Latex => render_latex(&t),
                    },
                    failed: false,
                }),
                Err(e) => Ok(Output {
                    body: format!("{e}\n"),
                    failed: true,
                }),
            }
        }
        Cmd::Roots { emit_json: true } => {
            let d = roots_dump().map_err(|e| e.to_string())?;
            Ok(Output {
                body: serde_json::to_string_pretty(&d).expect("serializable") + "\n",
                failed: false,
            })
        }
        Cmd::Roots { emit_json: false } => Ok(reports_output(run_suite(Suite::Roots, cfg), f, true)),
        Cmd::Compact { ratio_scan: true } => {
            let rd = root_decomposition().map_err(|e| e.to_string())?;
            let sb = serre_basis(&rd).map_err(|e| e.to_string())?;
            let p = build_parabolic(&rd).map_err(|e| e.to_string())?;
            let rows = ratio_scan(&compact_basis(&sb), &rd, &p).map_err(|e| e.to_string())?;
            let failed = !rows
                .iter()
                .all(|r| r.matches == (r.ratio == "3") && r.matches_swapped == (r.ratio == "1/3"));
            let body = if f == Format::Json {
                serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
            } else {
                let mut s = format!("{:<7}{:<9}{}\n", "ratio", "matches", "swapped");
                for r in &rows {
                    s.push_str(&format!("{:<7}{:<9}{}\n", r.ratio, r.matches, r.matches_swapped));
                }
                s
            };
            Ok(Output { body, failed })
        }
        Cmd::Compact { ratio_scan: false } => Ok(reports_output(run_suite(Suite::Compact, cfg), f, true)),
        Cmd::Rolling { ratio, growth: true } => {
            let ratio = ratio.clone().unwrap_or_else(|| Rational::from_integer(3.into()));
            let mut s = Sampler::new(cfg.seed);
            let got = rolling_growth(&ratio, cfg.samples, &mut s).map_err(|e| e.to_string())?;
            let fmt = |g: &[usize]| format!("({})", g.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
            let body = if f == Format::Json {
                let v: Vec<_> = got.iter().enumerate().map(|(k, g)| json!({ "sample": k, "growth": g })).collect();
                serde_json::to_string_pretty(&json!({ "ratio": fmt_q(&ratio), "points": v })).expect("serializable") + "\n"
            } else {
                got.iter().enumerate().map(|(k, g)| format!("ratio {} sample {k}: {}\n", fmt_q(&ratio), fmt(g))).collect()
            };
            Ok(Output { body, failed: false })
        }
        Cmd::Rolling { ratio, growth: false } => {
            Ok(reports_output(run_suite_with(Suite::Rolling, cfg, ratio.as_ref()), f, true))
        }
        Cmd::Quadric {
            chain,
            isotropy,
            cover,
            ratio_scan,
        } => {
            let mut prefixes: Vec<&str> = Vec::new();
            if *chain {
                prefixes.push("quadric.chain");
            }
            if *isotropy {
                prefixes.extend(["quadric.isotropy", "quadric.data", "quadric.transitivity"]);
            }
            if *cover {
                prefixes.push("quadric.cover");
            }
            if *ratio_scan {
                prefixes.push("quadric.cover.ratio");
            }
            let mut v = run_suite(Suite::Quadric, cfg);
            if !prefixes.is_empty() {
                v.retain(|r| prefixes.iter().any(|p| r.claim_id.starts_with(p)));
            }
            Ok(reports_output(v, f, true))
        }
        Cmd::Pfaffian { verify_all, rank_at } => {
            let mut v = Vec::new();
            if let Some(pt) = rank_at {
                let p = parse_point(pt).map_err(|e| format!("usage: {e}; expected slots like x1,y2,0 or -z"))?;
                let sys = build_system().map_err(|e| e.to_string())?;
                v.push(VerificationReport {
                    claim_id: format!("pfaffian.rank_at[{pt}]"),
                    locus: "kernel dimensions at a point".into(),
                    status: Status::Pass,
                    witness: json!({
                        "alpha_beta": system_rank_at(&sys.alpha_beta(), &p),
                        "alpha_beta_gamma": system_rank_at(&sys.forms(), &p),
                    }),
                    duration_ms: None,
                });
            }
            if *verify_all || rank_at.is_none() {
                v.extend(run_suite(Suite::Pfaffian, cfg));
            }
            Ok(reports_output(v, f, true))
        }
        Cmd::Octonions { table: true } => {
            let t = basis_multiplication_table().map_err(|e| e.to_string())?;
            let body = if f == Format::Json {
                let rows: Vec<Vec<String>> =
                    t.entries.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
            } else {
                t.to_text()
            };
            Ok(Output { body, failed: false })
        }
        Cmd::Octonions { table: false } => Ok(reports_output(run_suite(Suite::Octonions, cfg), f, true)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let usage = |msg: String| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    };
    if cli.format == Format::Latex && !matches!(cli.cmd, Cmd::Constants) {
        return usage("--format latex is only available for `constants`".into());
    }
    let seed = match std::env::var("G2ROLL_SEED") {
        Ok(s) if !s.trim().is_empty() => match s.trim().parse() {
            Ok(n) => n,
            Err(_) => return usage(format!("G2ROLL_SEED must be a non-negative integer, got {s:?}")),
        },
        _ => cli.seed,
    };
    if cli.samples == 0 {
        return usage("--samples must be at least 1".into());
    }
    let cfg = RunConfig {
        seed,
        samples: cli.samples,
        timings: cli.timings,
    };
    let out = match run(&cli, &cfg) {
        Ok(o) => o,
        Err(msg) if msg.starts_with("usage: ") => return usage(msg["usage: ".len()..].to_string()),
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &out.body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(out.body.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if out.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
