//! Command-line front end: build and analyze exact polytopes, enumerate
//! Hanner catalogs, run stress analyses, and reproduce the source tables
//! with `verify-paper`.
//!
//! Exit status: 0 on success, 1 on any computation or input error, 2 when
//! `verify-paper` finds a failing item.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use cspoly::flags::{
    evaluate_functional, flag_vector, functionals_l1_l2_alpha, identities_and_inequalities,
    s_value, Functional,
};
use cspoly::hanner::{catalog_csv, conjecture_report, enumerate_hanner};
use cspoly::io;
use cspoly::polytope::{is_centrally_symmetric, VPolytope};
use cspoly::rigidity::{stress_analysis, triangulate_2_skeleton, FanRoot};
use cspoly::verify;

#[derive(Parser)]
#[command(
    name = "cspoly",
    about = "Exact arithmetic for centrally symmetric polytopes: face lattices, flag vectors, Hanner catalogs, skeleton stresses",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polytope from an expression and write its vertex file.
    Build {
        /// Constructor expression, e.g. "slab(cube(4); 1 1 1 1; -2; 2)".
        expr: String,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// f-vector, s, flag data and the 4-dimensional identity battery.
    Analyze {
        /// A polytope file or a constructor expression.
        input: String,
        /// Print the full flag vector.
        #[arg(long)]
        flags: bool,
        /// Evaluate the functionals from this JSON file.
        #[arg(long)]
        functionals: Option<PathBuf>,
    },
    /// Conjecture A/B/C report for a centrally symmetric polytope.
    Conjectures {
        /// A polytope file or a constructor expression.
        input: String,
        /// Functionals for the restricted conjecture C check.
        #[arg(long)]
        functionals: Option<PathBuf>,
    },
    /// Hanner catalog operations.
    Hanner {
        #[command(subcommand)]
        command: HannerCommand,
    },
    /// Stress analysis of the triangulated 2-skeleton framework.
    Rigidity {
        /// A polytope file or a constructor expression.
        input: String,
        /// Use the symmetry-respecting triangulation and report the
        /// symmetric stress dimension (requires central symmetry).
        #[arg(long)]
        symmetric: bool,
    },
    /// Recompute every table value and report per-item verdicts.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Where to write the JSON report (a .md twin is written next to
        /// it). Default: verify-paper.json.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum HannerCommand {
    /// Enumerate all Hanner polytopes of one dimension as CSV.
    Enumerate {
        d: usize,
        /// Output CSV file (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Interpret the input as a polytope file when it names one, otherwise as
/// a constructor expression.
fn load_polytope(input: &str) -> Result<VPolytope> {
    if std::path::Path::new(input).is_file() {
        Ok(io::read_polytope_file(input)?)
    } else {
        let expr = cspoly::expr::parse(input)
            .with_context(|| format!("{input:?} is neither a file nor a valid expression"))?;
        Ok(cspoly::expr::build(&expr)?)
    }
}

fn load_functionals(path: &Option<PathBuf>) -> Result<Vec<Functional>> {
    match path {
        None => Ok(Vec::new()),
        Some(p) => Ok(io::read_functionals_file(p)?),
    }
}

fn analyze(input: &str, show_flags: bool, functionals: &Option<PathBuf>) -> Result<()> {
    let p = load_polytope(input)?;
    let lat = p.face_lattice()?;
    let fv = flag_vector(&lat);
    let cs = is_centrally_symmetric(&p);
    println!(
        "ambient dim {}, intrinsic dim {}, {} vertices, {} facets",
        p.ambient_dim(),
        p.intrinsic_dim(),
        p.n_vertices(),
        lat.layer(lat.dim - 1).len()
    );
    println!("f-vector: {:?}", lat.f_vector());
    println!("s = {}", s_value(&lat));
    println!(
        "centrally symmetric: {}",
        if cs.is_some() { "yes" } else { "no" }
    );
    if lat.dim == 4 {
        let fns = functionals_l1_l2_alpha(&fv)?;
        println!("f02 = {}", fv.count(&[0, 2]));
        println!("l1 = {}, l2 = {}, alpha = {}", fns.l1, fns.l2, fns.alpha);
        let report = identities_and_inequalities(&fv, cs.is_some())?;
        println!("\n{}", report.to_markdown());
    }
    if show_flags {
        println!("flag vector:");
        let d = fv.dim();
        for mask in 1u32..(1 << d) {
            let dims: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).collect();
            let names: Vec<String> = dims.iter().map(|i| i.to_string()).collect();
            println!("  f_{{{}}} = {}", names.join(","), fv.count(&dims));
        }
    }
    for f in load_functionals(functionals)? {
        println!("{} = {}", f.name, evaluate_functional(&f, &fv)?);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { expr, output } => {
            let parsed = cspoly::expr::parse(&expr)?;
            let p = cspoly::expr::build(&parsed)?;
            let text = io::polytope_to_string(&p);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze {
            input,
            flags,
            functionals,
        } => {
            analyze(&input, flags, &functionals)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjectures { input, functionals } => {
            let p = load_polytope(&input)?;
            let fs = load_functionals(&functionals)?;
            let report = conjecture_report(&p, &fs)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Hanner {
            command: HannerCommand::Enumerate { d, output },
        } => {
            let catalog = enumerate_hanner(d)?;
            let csv = catalog_csv(&catalog);
            match output {
                Some(path) => std::fs::write(path, csv)?,
                None => print!("{csv}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rigidity { input, symmetric } => {
            let p = load_polytope(&input)?;
            let lat = p.face_lattice()?;
            let g2 = cspoly::flags::g2_toric(&flag_vector(&lat)).ok();
            let fw = triangulate_2_skeleton(&p, &lat, symmetric, FanRoot::Least)?;
            let report = stress_analysis(&fw, g2)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { output } => {
            let items = verify::verify_paper()?;
            let json_path = output.unwrap_or_else(|| PathBuf::from("verify-paper.json"));
            let md_path = json_path.with_extension("md");
            std::fs::write(&json_path, verify::to_json(&items)?)?;
            std::fs::write(&md_path, verify::to_markdown(&items))?;
            let mut pass = 0;
            let mut ambiguous = 0;
            let mut fail = 0;
            for item in &items {
                match item.verdict {
                    verify::Verdict::Pass => pass += 1,
                    verify::Verdict::PassUpToDocumentedAmbiguity => {
                        ambiguous += 1;
                        println!("~ {} (documented ambiguity): claimed {}, computed {}",
                            item.id, item.claimed, item.computed);
                    }
                    verify::Verdict::Fail => {
                        fail += 1;
                        println!(
                            "FAIL {}: claimed {}, computed {}",
                            item.id, item.claimed, item.computed
                        );
                        if let Some(note) = &item.note {
                            println!("     note: {note}");
                        }
                    }
                }
            }
            println!(
                "{} items: {pass} pass, {ambiguous} pass up to documented ambiguity, {fail} fail",
                items.len()
            );
            println!("report: {} and {}", json_path.display(), md_path.display());
            if fail > 0 {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
