//! `lieyam`: command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for unreadable input or bad usage.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lieyam_core::cochain::admissibility_residual;
use lieyam_core::io::{parse_cocycle, write_cochain, write_ly};
use lieyam_core::linalg::{format_rational, parse_rational};
use lieyam_core::{
    algebra::enumerate_modified_operators, build_extension, classify, infinitesimal_cocycle_check,
    rigidity_report, verify_deformation, verify_lya, verify_modified_operator,
    verify_representation, Classification, Complex, ComplexKind, Document, Error, LyCochain, MdlyCochain,
    RatMatrix, Report,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lieyam", version, about = "Exact checks for Lie-Yamaguti algebras with modified differential operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ly,
    Mdly,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the algebra and, when present, its operator and representation.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "mdly")]
        complex: Kind,
        /// Print cocycles whose classes span the cohomology.
        #[arg(long)]
        representatives: bool,
        /// Use the adjoint representation regardless of the document.
        #[arg(long)]
        adjoint: bool,
        #[arg(long)]
        json: bool,
    },
    /// All modified λ-differential operators on the document's algebra.
    EnumerateOperators {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Check a truncated deformation given in the document.
    DeformCheck { file: PathBuf },
    /// Rigidity verdict from the second adjoint cohomology.
    Rigidity { file: PathBuf },
    /// Build the abelian extension of a 2-cocycle and print its document.
    Extend {
        file: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long)]
        adjoint: bool,
    },
    /// Decide whether two 2-cocycles define equivalent extensions.
    Classify {
        file: PathBuf,
        #[arg(long)]
        cocycle1: PathBuf,
        #[arg(long)]
        cocycle2: PathBuf,
        #[arg(long)]
        adjoint: bool,
    },
}

enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Document> {
    Document::read(path).map_err(anyhow::Error::from)
}

fn run(cmd: Command) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Validate { file, json } => validate(&load(&file)?, json),
        Command::Cohomology {
            file,
            degree,
            complex,
            representatives,
            adjoint,
            json,
        } => cohomology(&load(&file)?, degree, complex, representatives, adjoint, json),
        Command::EnumerateOperators { file, lambda } => {
            let doc = load(&file)?;
            let lambda = parse_rational(&lambda).context("--lambda")?;
            let space = enumerate_modified_operators(&doc.algebra, &lambda);
            println!("lambda = {}", format_rational(&lambda));
            println!("dimension = {}", space.dimension());
            println!("particular = {}", matrix_json(&space.particular));
            for (k, b) in space.basis.iter().enumerate() {
                println!("direction {} = {}", k + 1, matrix_json(b));
            }
            Ok(Outcome::Pass)
        }
        Command::DeformCheck { file } => {
            let doc = load(&file)?;
            let d = doc.truncated_deformation()?;
            let report = verify_deformation(&d);
            print!("{report}");
            let cocycle = infinitesimal_cocycle_check(&d)?;
            println!("infinitesimal is a 2-cocycle: {cocycle}");
            Ok(Outcome::from_ok(report.all_pass() && cocycle))
        }
        Command::Rigidity { file } => {
            let a = load(&file)?.mdly()?;
            if !a.verify().is_empty() {
                return not_verified(&a.verify());
            }
            println!("{}", rigidity_report(&a)?);
            Ok(Outcome::Pass)
        }
        Command::Extend {
            file,
            cocycle,
            adjoint,
        } => {
            let doc = load(&file)?;
            let a = doc.mdly()?;
            let r = doc.representation(adjoint)?;
            let text = std::fs::read_to_string(&cocycle).with_context(|| cocycle.display().to_string())?;
            let c = parse_cocycle(&text, a.dim(), r.module_dim())?;
            match build_extension(&a, &r, &c) {
                Ok(e) => {
                    println!("{}", Document::from_mdly(e.total()).to_json());
                    Ok(Outcome::Pass)
                }
                Err(Error::NotCocycle(msg)) => {
                    println!("rejected: not a 2-cocycle: {msg}");
                    Ok(Outcome::Fail)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Classify {
            file,
            cocycle1,
            cocycle2,
            adjoint,
        } => {
            let doc = load(&file)?;
            let a = doc.mdly()?;
            let r = doc.representation(adjoint)?;
            let read = |p: &PathBuf| -> anyhow::Result<_> {
                let text = std::fs::read_to_string(p).with_context(|| p.display().to_string())?;
                Ok(parse_cocycle(&text, a.dim(), r.module_dim())?)
            };
            let (c1, c2) = (read(&cocycle1)?, read(&cocycle2)?);
            let cx = Complex::new(&a, &r)?;
            for (name, c) in [("cocycle1", &c1), ("cocycle2", &c2)] {
                if !cx.is_cocycle(&c.to_cochain()?)? {
                    println!("{name} is not a 2-cocycle");
                    return Ok(Outcome::Fail);
                }
            }
            match classify(&a, &r, &c1, &c2)? {
                Classification::Equivalent { witness } => {
                    let label = if witness.is_zero() { "equivalent, witness omega = 0" } else { "equivalent" };
                    println!("{label}");
                    println!("omega = {}", matrix_json(&witness));
                }
                Classification::Inequivalent => println!("inequivalent"),
            }
            Ok(Outcome::Pass)
        }
    }
}

fn matrix_json(m: &RatMatrix) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect();
    serde_json::to_string(&rows).expect("strings serialize")
}

fn not_verified(report: &Report) -> anyhow::Result<Outcome> {
    println!("the algebra does not verify:");
    print!("{report}");
    Ok(Outcome::Fail)
}

fn validate(doc: &Document, json: bool) -> anyhow::Result<Outcome> {
    let mut sections: Vec<(&str, Report)> = vec![("algebra", verify_lya(&doc.algebra))];
    if let Some(op) = &doc.operator {
        sections.push(("operator", verify_modified_operator(&doc.algebra, op)?));
        if doc.representation.is_some() {
            let a = doc.mdly()?;
            let r = doc.representation(false)?;
            sections.push(("representation", verify_representation(&a, &r)?));
        }
    } else if doc.representation.is_some() {
        bail!("a representation block needs an operator block");
    }
    if let (Some(c), Some(_)) = (&doc.cocycle, &doc.operator) {
        // without a representation block the cocycle takes adjoint coefficients
        let a = doc.mdly()?;
        let r = doc.representation(doc.representation.is_none())?;
        let cochain = c.to_cochain()?;
        let mut rep = Report::new();
        rep.check("cocycle", &[], Complex::new(&a, &r)?.partial(&cochain)?.coords());
        rep.check(
            "cocycle-admissible",
            &[],
            admissibility_residual(a.algebra(), &r, cochain.top())?,
        );
        sections.push(("cocycle", rep));
    }
    let ok = sections.iter().all(|(_, r)| r.is_empty());
    if json {
        let body: serde_json::Map<String, serde_json::Value> = sections
            .iter()
            .map(|(name, r)| (name.to_string(), serde_json::to_value(r.to_json()).unwrap()))
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!({ "ok": ok, "checks": body }))?);
    } else {
        for (name, r) in &sections {
            if r.is_empty() {
                println!("{name}: ok");
            } else {
                print!("{name}: {r}");
            }
        }
    }
    Ok(Outcome::from_ok(ok))
}

fn cohomology(
    doc: &Document,
    degree: usize,
    kind: Kind,
    representatives: bool,
    adjoint: bool,
    json: bool,
) -> anyhow::Result<Outcome> {
    let a = doc.mdly()?;
    let r = doc.representation(adjoint)?;
    let mut report = a.verify();
    report.merge(verify_representation(&a, &r)?);
    if !report.is_empty() {
        return not_verified(&report);
    }
    let kind = match kind {
        Kind::Ly => ComplexKind::Ly,
        Kind::Mdly => ComplexKind::Mdly,
    };
    let cx = Complex::new(&a, &r)?;
    let h = cx.cohomology(kind, degree, representatives)?;
    let reps: Vec<serde_json::Value> = h
        .representatives
        .iter()
        .flatten()
        .map(|v| -> anyhow::Result<serde_json::Value> {
            let doc = match kind {
                ComplexKind::Mdly => write_cochain(&MdlyCochain::from_coords(a.dim(), r.module_dim(), degree, v)?),
                ComplexKind::Ly => write_ly(&LyCochain::from_coords(
                    cx.ly_shape(degree)?,
                    v.clone(),
                )?),
            };
            Ok(serde_json::to_value(doc)?)
        })
        .collect::<anyhow::Result<_>>()?;
    if json {
        let mut out = json!({
            "complex": kind,
            "degree": h.degree,
            "dim_cochains": h.dim_cochains,
            "dim_z": h.dim_z,
            "dim_b": h.dim_b,
            "dim_h": h.dim_h,
        });
        if representatives {
            out["representatives"] = serde_json::Value::Array(reps);
        }
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        let name = match kind {
            ComplexKind::Ly => "LY",
            ComplexKind::Mdly => "MDLY",
        };
        println!("complex = {name}");
        println!("degree = {}", h.degree);
        println!("dimC = {}", h.dim_cochains);
        println!("dimZ = {}", h.dim_z);
        println!("dimB = {}", h.dim_b);
        println!("dimH = {}", h.dim_h);
        for (k, rep) in reps.iter().enumerate() {
            println!("representative {} = {}", k + 1, serde_json::to_string(rep)?);
        }
    }
    Ok(Outcome::Pass)
}
