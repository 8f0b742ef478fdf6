//! Command-line front end: catalog browsing, Hopf-algebra checks,
//! (co)action verification, (co)invariant reports, quiver export.
//!
//! Exit codes: 0 = success / all checks passed, 1 = a verification check
//! failed, 2 = usage error (unknown name, malformed input).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qsym::classify::{self, ActionCatalogEntry};
use qsym::groups::parse_group;
use qsym::hopf::parse_hopf;
use qsym::invariants::GradedSubring;
use qsym::mckay;
use qsym::ncalg::{series_divides, SeriesDivision};
use qsym::scalar::CycScalar;

const SCHEMA: &str = "qsym/1";

#[derive(Parser)]
#[command(
    name = "qsym",
    version,
    about = "Exact computations with finite quantum symmetries of quantum planes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Browse the built-in names.
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
    /// Hopf-algebra checks.
    Hopf {
        #[command(subcommand)]
        sub: HopfCmd,
    },
    /// Coaction checks on catalog entries.
    Coaction {
        #[command(subcommand)]
        sub: CoactionCmd,
    },
    /// Inner-faithfulness of a catalog entry's coaction.
    Faithful(EntryArgs),
    /// Homological (co)determinant of a catalog entry.
    Hdet(EntryArgs),
    /// (Co)invariant subring slices and generators of a catalog entry.
    Coinv {
        /// Catalog entry label.
        name: String,
        /// Degree bound for the slices.
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// McKay quiver of a group algebra or dual group algebra.
    Mckay {
        /// "kG:<group>" or "dual:kG:<group>" (groups: C:n, D:2n, BD:4n, 2T, 2O, 2I).
        name: String,
        /// Module: "taut" (2-dim defining module) or "reflections"
        /// (two reflection points of a dual dihedral group algebra).
        #[arg(long, default_value = "taut")]
        module: String,
        #[arg(long, default_value = "dot")]
        format: String,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Classification sweeps.
    Classify {
        #[command(subcommand)]
        sub: ClassifyCmd,
    },
    /// Hilbert-series checks.
    Series {
        #[command(subcommand)]
        sub: SeriesCmd,
    },
}

#[derive(Args)]
struct EntryArgs {
    /// Catalog entry label.
    name: String,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Print the built-in Hopf algebra names and action-catalog labels.
    List,
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Build a Hopf algebra by name and verify all axioms.
    Check {
        /// e.g. "kG:C:6", "dual:kG:D:8", "taft:q=zeta:3:1,alpha=0,n=3",
        /// "uq:zeta:3:1", "u2q:zeta:4:1", "u2q8:zeta:4:1", "double:BD:8".
        name: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand)]
enum CoactionCmd {
    /// Re-validate the coaction of a catalog entry.
    Validate(EntryArgs),
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Verify catalog entries against their expected verdicts.
    Verify {
        /// Verify every entry.
        #[arg(long)]
        all: bool,
        /// Verify a single entry by label.
        #[arg(long)]
        entry: Option<String>,
    },
    /// Enumerate the trivial-determinant automorphism group of a plane.
    Autos {
        /// "kq" (quantum plane, requires --q) or "kj" (Jordan plane).
        #[arg(long)]
        algebra: String,
        /// Plane parameter for "kq", e.g. "zeta:5:1" or "-1".
        #[arg(long)]
        q: Option<String>,
        /// Matrix entries range over N-th roots of unity.
        #[arg(long, default_value_t = 6)]
        bound: u64,
    },
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Does the ambient Hilbert series divide by the (co)invariant one
    /// with nonnegative integer quotient?
    Divides {
        /// Catalog entry label.
        name: String,
        #[arg(long, default_value_t = 12)]
        bound: u64,
    },
}

/// 2 = usage error (unknown names, malformed scalars), 1 = check failed.
enum CliError {
    Usage(String),
    Failed(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn find_entry(name: &str) -> Result<ActionCatalogEntry, CliError> {
    classify::catalog()
        .into_iter()
        .find(|e| e.label == name)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "unknown catalog entry '{}' (see `qsym catalog list`)",
                name
            ))
        })
}

fn entry_subring(e: &ActionCatalogEntry, bound: u64) -> GradedSubring {
    match &e.group_action {
        Some(act) => GradedSubring::invariants(act, bound),
        None => GradedSubring::coinvariants(&e.coaction, bound),
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Catalog { sub: CatalogCmd::List } => {
            println!("Hopf algebras (for `hopf check`):");
            for n in [
                "kG:C:2",
                "kG:C:6",
                "kG:D:8",
                "kG:BD:8",
                "kG:2T",
                "kG:2O",
                "kG:2I",
                "dual:kG:D:8",
                "double:BD:8",
                "taft:q=zeta:3:1,alpha=0,n=3",
                "taft:q=zeta:4:1,alpha=0,n=4",
                "uq:zeta:3:1",
                "u2q:zeta:4:1",
                "u2q8:zeta:4:1",
            ] {
                println!("  {}", n);
            }
            println!("Action catalog entries (for coaction/faithful/hdet/coinv/series):");
            for e in classify::catalog() {
                println!("  {}", e.label);
            }
            println!("Quiver names (for `mckay`): kG:<group>, dual:kG:D:<2n>");
            Ok(())
        }
        Cmd::Hopf {
            sub: HopfCmd::Check { name, format },
        } => {
            let h = parse_hopf(&name).map_err(CliError::Usage)?;
            match h.check_axioms() {
                Ok(report) => {
                    if format == "json" {
                        println!(
                            "{}",
                            json!({
                                "schema": SCHEMA,
                                "name": h.name,
                                "dim": report.dim,
                                "mode": report.mode,
                                "laws": report.laws_checked,
                                "passed": true,
                            })
                        );
                    } else {
                        println!(
                            "{}: dim {}, axioms pass ({} mode)",
                            h.name, report.dim, report.mode
                        );
                    }
                    Ok(())
                }
                Err(w) => Err(CliError::Failed(format!("{}: axiom failure: {}", h.name, w))),
            }
        }
        Cmd::Coaction {
            sub: CoactionCmd::Validate(args),
        } => {
            let e = find_entry(&args.name)?;
            match e.coaction.validate() {
                Ok(()) => {
                    println!("{}: coaction valid", e.label);
                    Ok(())
                }
                Err(w) => Err(CliError::Failed(format!("{}: {}", e.label, w))),
            }
        }
        Cmd::Faithful(args) => {
            let e = find_entry(&args.name)?;
            let f = e.coaction.inner_faithful();
            if args.format == "json" {
                println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "entry": e.label,
                        "faithful": f.faithful,
                        "sub_hopf_dim": f.sub_hopf_dim,
                        "hopf_dim": e.coaction.hopf.dim,
                    })
                );
            } else {
                println!(
                    "{}: inner faithful = {} (factors through dim {} of {})",
                    e.label, f.faithful, f.sub_hopf_dim, e.coaction.hopf.dim
                );
            }
            Ok(())
        }
        Cmd::Hdet(args) => {
            let e = find_entry(&args.name)?;
            let codet = e
                .coaction
                .hcodet_trivial()
                .map_err(CliError::Failed)?;
            let det = e.group_action.as_ref().map(|a| a.hdet_trivial().0);
            if args.format == "json" {
                println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "entry": e.label,
                        "codeterminant_trivial": codet,
                        "determinant_trivial": det,
                    })
                );
            } else {
                println!("{}: homological codeterminant trivial = {}", e.label, codet);
                if let Some(d) = det {
                    println!("{}: homological determinant trivial = {}", e.label, d);
                }
            }
            Ok(())
        }
        Cmd::Coinv {
            name,
            degree,
            format,
        } => {
            let e = find_entry(&name)?;
            let bound = degree.unwrap_or(e.bound);
            let sub = entry_subring(&e, bound);
            let gens = sub.minimal_generators();
            if format == "json" {
                println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "entry": e.label,
                        "bound": bound,
                        "dims": sub.dims(),
                        "generators": gens.iter().map(|g| json!({
                            "degree": g.degree,
                            "element": g.element.render(&sub.ambient.names),
                        })).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("{}: slice dimensions to degree {}: {:?}", e.label, bound, sub.dims());
                for g in &gens {
                    println!(
                        "  generator (degree {}): {}",
                        g.degree,
                        g.element.render(&sub.ambient.names)
                    );
                }
            }
            Ok(())
        }
        Cmd::Mckay {
            name,
            module,
            format,
            out,
        } => {
            let quiver = if let Some(group) = name.strip_prefix("dual:kG:") {
                let g = parse_group(group).map_err(CliError::Usage)?;
                if module != "reflections" {
                    return usage("dual group quivers support --module reflections");
                }
                match group.split(':').next() {
                    Some("D") => {}
                    _ => return usage("reflection quivers are defined for dihedral groups D:<2n>"),
                }
                let f = mckay::fusion_from_dual_group(&g);
                let mut u = vec![0u64; g.order()];
                let s = g.gens[1];
                let rs = g.mult[g.gens[0]][s];
                u[s] += 1;
                u[rs] += 1;
                mckay::mckay_quiver(&f, &u).map_err(CliError::Failed)?
            } else if let Some(group) = name.strip_prefix("kG:") {
                let g = parse_group(group).map_err(CliError::Usage)?;
                if module != "taut" {
                    return usage("group-algebra quivers support --module taut");
                }
                mckay::tautological_quiver(&g).map_err(CliError::Failed)?
            } else {
                return usage(format!(
                    "unknown quiver name '{}': expected kG:<group> or dual:kG:D:<2n>",
                    name
                ));
            };
            let text = match format.as_str() {
                "dot" => mckay::dot_export(&quiver),
                "json" => format!(
                    "{}\n",
                    json!({
                        "schema": SCHEMA,
                        "vertices": quiver.labels.iter().zip(&quiver.dims).map(|(l, d)| json!({
                            "label": l, "dim": d,
                        })).collect::<Vec<_>>(),
                        "arrows": quiver.arrows,
                        "type": quiver.kind.to_string(),
                    })
                ),
                other => return usage(format!("unknown format '{}'", other)),
            };
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {}", path.display(), e)))?,
                None => print!("{}", text),
            }
            Ok(())
        }
        Cmd::Classify { sub } => match sub {
            ClassifyCmd::Verify { all, entry } => {
                let entries = classify::catalog();
                let selected: Vec<_> = if all {
                    entries
                } else if let Some(label) = entry {
                    let e = entries.into_iter().find(|e| e.label == label);
                    match e {
                        Some(e) => vec![e],
                        None => return usage(format!("unknown catalog entry '{}'", label)),
                    }
                } else {
                    return usage("pass --all or --entry <label>");
                };
                let mut failed = false;
                for e in &selected {
                    let r = classify::verify_entry(e);
                    println!("{} {}", if r.passed() { "PASS" } else { "FAIL" }, r.label);
                    for (check, ok) in &r.checks {
                        if !ok {
                            failed = true;
                            println!("  failed: {}", check);
                        }
                    }
                }
                if failed {
                    Err(CliError::Failed("some catalog entries failed".into()))
                } else {
                    Ok(())
                }
            }
            ClassifyCmd::Autos { algebra, q, bound } => {
                let (qv, eta) = match algebra.as_str() {
                    "kq" => {
                        let qs = match q {
                            Some(qs) => qs,
                            None => return usage("--algebra kq requires --q"),
                        };
                        (CycScalar::parse(&qs).map_err(CliError::Usage)?, CycScalar::zero())
                    }
                    "kj" => (CycScalar::one(), -&CycScalar::one()),
                    other => return usage(format!("unknown algebra '{}': expected kq or kj", other)),
                };
                let g = classify::enumerate_trivial_hdet_autos(&qv, &eta, bound)
                    .map_err(CliError::Failed)?;
                println!(
                    "{} solutions, isomorphism type {}",
                    g.matrices.len(),
                    g.iso_type
                );
                for note in &g.notes {
                    println!("note: {}", note);
                }
                for (i, m) in g.matrices.iter().enumerate() {
                    println!(
                        "  #{}: [[{}, {}], [{}, {}]]",
                        i,
                        m[0][0], m[0][1], m[1][0], m[1][1]
                    );
                }
                Ok(())
            }
        },
        Cmd::Series {
            sub: SeriesCmd::Divides { name, bound },
        } => {
            let e = find_entry(&name)?;
            let ambient = e.coaction.algebra.hilbert_series(bound);
            let sub = entry_subring(&e, bound).dims();
            match series_divides(&ambient, &sub) {
                SeriesDivision::FreeCompatible { quotient } => {
                    println!(
                        "{}: quotient has nonnegative integer coefficients {:?}",
                        e.label, quotient
                    );
                    Ok(())
                }
                SeriesDivision::NotFreeCompatible { degree, value } => Err(CliError::Failed(
                    format!("{}: quotient fails at degree {}: {}", e.label, degree, value),
                )),
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("FAIL: {}", msg);
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
