use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use fusion_cert::center::OrbitVector;
use fusion_cert::pipeline::{error_exit_code, exit_code, run_pipeline, Config, Selection, DEFAULT_SMOKE_VECTORS};
use fusion_cert::report::CertificateReport;
use fusion_cert::FusionRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Markdown,
    Both,
}

/// Run the non-categorifiability certificate for the rank-6 ring.
#[derive(Debug, Parser)]
#[command(name = "certify", version)]
struct Args {
    /// Stage to run: all, cyclotomic, ring, obstruction, census, center, subcat.
    #[arg(long, default_value = "all")]
    stage: Selection,

    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Search only a subset of orbit vectors in the center stage.
    #[arg(long)]
    smoke: bool,

    /// Orbit vector for smoke mode, as nine comma-separated counts (repeatable).
    #[arg(long = "smoke-vector", value_parser = parse_vector)]
    smoke_vectors: Vec<OrbitVector>,

    /// Fixture directory (falls back to $CERT_FIXTURES, then the shipped fixtures).
    #[arg(long, env = "CERT_FIXTURES")]
    fixtures: Option<PathBuf>,

    /// Write certificate files here instead of printing to stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Also run the audit computations.
    #[arg(long)]
    audit: bool,

    /// Ring to check instead of the built-in one (.fring).
    #[arg(long)]
    ring: Option<PathBuf>,
}

fn parse_vector(s: &str) -> Result<OrbitVector, String> {
    let v: Vec<u32> = s.split(',').map(|x| x.trim().parse().map_err(|_| format!("bad count {x:?}"))).collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<u32>| format!("expected 9 counts, found {}", v.len()))
}

fn write_outputs(report: &CertificateReport, args: &Args) -> std::io::Result<()> {
    let text = matches!(args.format, Format::Text | Format::Both).then(|| report.render_text());
    let md = matches!(args.format, Format::Markdown | Format::Both).then(|| report.render_markdown());
    match &args.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            if let Some(t) = text {
                std::fs::write(dir.join("certificate.txt"), t)?;
            }
            if let Some(m) = md {
                std::fs::write(dir.join("certificate.md"), m)?;
            }
            std::fs::write(dir.join("timings.txt"), report.render_timings())?;
        }
        None => {
            if let Some(t) = text {
                print!("{t}");
            }
            if let Some(m) = md {
                print!("{m}");
            }
            eprint!("{}", report.render_timings());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let ring = match &args.ring {
        Some(p) => {
            let parsed = std::fs::read_to_string(p)
                .map_err(|e| e.to_string())
                .and_then(|t| FusionRing::parse_fring(&t).map_err(|e| e.to_string()));
            match parsed {
                Ok(r) => Some((r, p.display().to_string())),
                Err(e) => {
                    eprintln!("error: cannot read ring {}: {e}", p.display());
                    return ExitCode::from(2);
                }
            }
        }
        None => None,
    };
    let mut cfg = Config {
        stage: args.stage,
        jobs: args.jobs,
        smoke: args.smoke,
        smoke_vectors: if args.smoke_vectors.is_empty() { DEFAULT_SMOKE_VECTORS.to_vec() } else { args.smoke_vectors.clone() },
        audit: args.audit,
        ring,
        ..Config::default()
    };
    if let Some(dir) = &args.fixtures {
        cfg.fixtures = dir.clone();
    }
    if let Err(m) = cfg.validate() {
        eprintln!("error: {m}");
        return ExitCode::from(2);
    }
    let report = match run_pipeline(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_exit_code(&e) as u8);
        }
    };
    if let Err(e) = write_outputs(&report, &args) {
        eprintln!("error: cannot write certificate: {e}");
        return ExitCode::from(2);
    }
    if !report.verdict() {
        for s in report.sections.iter().filter(|s| s.status == fusion_cert::report::Status::Fail) {
            for (k, _) in s.checks.iter().filter(|(_, ok)| !ok) {
                eprintln!("failed: {}.{k}", s.name);
            }
        }
        for f in report.fixtures.iter().filter(|f| f.status == "mismatch" || f.status == "missing") {
            eprintln!("fixture {}: {}", f.name, f.status);
        }
    }
    ExitCode::from(exit_code(&report) as u8)
}
