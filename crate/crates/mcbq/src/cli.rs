//! The `mcbq` command line.
//!
//! Exit status is 0 on success, 1 for usage, input and parse errors, and 2
//! when the input is well formed but fails a mathematical requirement
//! (axioms, Alexander constraints, composite modulus).

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mcbq_core::algebra::{
    alexander_mcb, check_axioms, endomorphisms, enumerate_mcb, EnumerateError, EnumerateOptions,
    MAX_ENUMERATION_ORDER,
};
use mcbq_core::linear::{build_coloring_matrix, rref_mod_p, LinearError};
use mcbq_core::{
    build_quiver, count_colorings, find_colorings, parse_gauss, parse_pd, AlexanderParams,
    Endomorphism, InDegreePolynomial, LinkDiagram, McBiquandle,
};

use crate::export::{homset_json, quiver_dot, quiver_json};
use crate::links::{builtin, builtin_table, read_link_table, LinkTableEntry};
use crate::mcb_file::{self, read_endos_file, read_mcb_file};

#[derive(Parser, Debug)]
#[command(
    name = "mcbq",
    version,
    about = "Coloring invariants of links from finite mc-biquandles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the mc-biquandle axioms (or the Alexander constraints).
    Check(StructureArgs),
    /// List all endomorphisms.
    Endos(StructureArgs),
    /// Print the counting invariant.
    Count {
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Print every coloring.
    Colorings {
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, value_enum, default_value_t = ColoringFormat::Json)]
        format: ColoringFormat,
    },
    /// Print the coloring matrix, its reduced form and the count (Alexander mode, prime modulus).
    Matrix {
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Print the coloring quiver.
    Quiver {
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        endos: EndoArgs,
        #[arg(long, value_enum, default_value_t = QuiverFormat::Dot)]
        format: QuiverFormat,
    },
    /// Print the in-degree polynomial.
    Poly {
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        endos: EndoArgs,
    },
    /// In-degree polynomials over a whole link table, grouped by value.
    Table {
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        endos: EndoArgs,
        /// Link table file; defaults to the shipped table.
        #[arg(long, value_name = "FILE")]
        table: Option<PathBuf>,
        /// One line per link with its count and polynomial.
        #[arg(long)]
        per_link: bool,
    },
    /// List every mc-biquandle of the given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Print only the number found.
        #[arg(long)]
        count: bool,
    },
    /// Convert a PD code to a signed Gauss code.
    Convert {
        /// PD code such as "X[4,1,3,2], X[2,3,1,4]".
        pd: Option<String>,
        #[arg(long, value_name = "FILE", conflicts_with = "pd")]
        file: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct StructureArgs {
    /// mc-biquandle table file.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["modulus", "params"])]
    mcb: Option<PathBuf>,
    /// Modulus of an Alexander mc-biquandle.
    #[arg(long, requires = "params")]
    modulus: Option<u64>,
    /// Alexander parameters t_s,r_s,t_m,r_m.
    #[arg(long, value_delimiter = ',', requires = "modulus")]
    params: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct LinkArgs {
    /// File holding a Gauss code or a PD code.
    #[arg(long, value_name = "FILE")]
    link: Option<PathBuf>,
    /// Name of a link in the shipped table, e.g. L4a1.
    #[arg(long)]
    name: Option<String>,
    /// Signed Gauss code given inline.
    #[arg(long, allow_hyphen_values = true)]
    code: Option<String>,
    /// PD code given inline.
    #[arg(long)]
    pd: Option<String>,
}

#[derive(Args, Debug)]
struct EndoArgs {
    /// `all`, or a file with one endomorphism per line.
    #[arg(long, default_value = "all")]
    endos: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ColoringFormat {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Semantic(String),
}

impl Failure {
    fn usage(e: impl Display) -> Self {
        Failure::Usage(e.to_string())
    }

    fn semantic(e: impl Display) -> Self {
        Failure::Semantic(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e)
    }
}

type Outcome = Result<(), Failure>;

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Semantic(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Check(s) => check(&s, out),
        Command::Endos(s) => {
            let x = structure(&s)?;
            for f in endomorphisms(&x) {
                writeln!(out, "{f}")?;
            }
            Ok(())
        }
        Command::Count { structure: s, link } => {
            let x = structure(&s)?;
            writeln!(out, "{}", count_colorings(&x, &diagram(&link)?))?;
            Ok(())
        }
        Command::Colorings {
            structure: s,
            link,
            format,
        } => {
            let x = structure(&s)?;
            let h = find_colorings(&x, &diagram(&link)?);
            match format {
                ColoringFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&homset_json(&h)).unwrap()
                )?,
                ColoringFormat::Text => {
                    for c in &h.colorings {
                        writeln!(out, "{c}")?;
                    }
                }
            }
            Ok(())
        }
        Command::Matrix { structure: s, link } => matrix(&s, &link, out),
        Command::Quiver {
            structure: s,
            link,
            endos,
            format,
        } => {
            let x = structure(&s)?;
            let h = find_colorings(&x, &diagram(&link)?);
            let q = build_quiver(&x, &h, &endo_set(&x, &endos)?).map_err(Failure::usage)?;
            match format {
                QuiverFormat::Dot => write!(out, "{}", quiver_dot(&h, &q))?,
                QuiverFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&quiver_json(&h, &q)).unwrap()
                )?,
            }
            Ok(())
        }
        Command::Poly {
            structure: s,
            link,
            endos,
        } => {
            let x = structure(&s)?;
            let (_, poly) = polynomial(&x, &diagram(&link)?, &endo_set(&x, &endos)?)?;
            writeln!(out, "{poly}")?;
            Ok(())
        }
        Command::Table {
            structure: s,
            endos,
            table,
            per_link,
        } => {
            let x = structure(&s)?;
            let entries = match table {
                Some(path) => read_link_table(&path).map_err(Failure::usage)?,
                None => builtin_table(),
            };
            write_table(&x, &endo_set(&x, &endos)?, &entries, per_link, out)
        }
        Command::Enumerate {
            order,
            up_to_iso,
            count,
        } => {
            if order == MAX_ENUMERATION_ORDER {
                writeln!(err, "warning: order {order} enumeration is slow")?;
            }
            let opts = EnumerateOptions {
                modulo_isomorphism: up_to_iso,
                max_order: MAX_ENUMERATION_ORDER,
            };
            let stream =
                enumerate_mcb(order, opts).map_err(|e: EnumerateError| Failure::usage(e))?;
            if count {
                writeln!(out, "{}", stream.count())?;
            } else {
                for (i, x) in stream.enumerate() {
                    writeln!(out, "# {}", i + 1)?;
                    write!(out, "{x}")?;
                }
            }
            Ok(())
        }
        Command::Convert { pd, file } => {
            let text = match (pd, file) {
                (Some(t), _) => t,
                (None, Some(path)) => mcb_file::read(&path).map_err(Failure::usage)?,
                (None, None) => return Err(Failure::usage("give a PD code or --file")),
            };
            let d = parse_pd(&text).map_err(Failure::usage)?;
            writeln!(out, "{d}")?;
            Ok(())
        }
    }
}

fn alexander_params(s: &StructureArgs) -> Result<Option<AlexanderParams>, Failure> {
    match (s.modulus, &s.params) {
        (Some(m), Some(p)) => {
            let [t_s, r_s, t_m, r_m] = p[..] else {
                return Err(Failure::usage("--params takes four values t_s,r_s,t_m,r_m"));
            };
            if m < 2 {
                return Err(Failure::usage("--modulus must be at least 2"));
            }
            Ok(Some(AlexanderParams::new(m, t_s, r_s, t_m, r_m)))
        }
        _ => Ok(None),
    }
}

fn structure(s: &StructureArgs) -> Result<McBiquandle, Failure> {
    if let Some(params) = alexander_params(s)? {
        return alexander_mcb(&params).map_err(Failure::semantic);
    }
    let Some(path) = &s.mcb else {
        return Err(Failure::usage(
            "give --mcb FILE or --modulus M --params t_s,r_s,t_m,r_m",
        ));
    };
    let tables = read_mcb_file(path).map_err(Failure::usage)?;
    tables.validate().map_err(Failure::semantic)
}

fn check(s: &StructureArgs, out: &mut dyn Write) -> Outcome {
    if let Some(params) = alexander_params(s)? {
        return match alexander_mcb(&params) {
            Ok(x) => {
                writeln!(out, "pass: {params}")?;
                write!(out, "{x}")?;
                Ok(())
            }
            Err(e) => {
                writeln!(out, "fail: {e}")?;
                Err(Failure::semantic("Alexander parameters rejected"))
            }
        };
    }
    let Some(path) = &s.mcb else {
        return Err(Failure::usage(
            "give --mcb FILE or --modulus M --params t_s,r_s,t_m,r_m",
        ));
    };
    let tables = read_mcb_file(path).map_err(Failure::usage)?;
    let report = check_axioms(&tables);
    writeln!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::semantic("axioms violated"))
    }
}

fn matrix(s: &StructureArgs, link: &LinkArgs, out: &mut dyn Write) -> Outcome {
    let Some(params) = alexander_params(s)? else {
        return Err(Failure::usage("matrix needs --modulus and --params"));
    };
    alexander_mcb(&params).map_err(Failure::semantic)?;
    let d = diagram(link)?;
    let m = build_coloring_matrix(&d, &params).map_err(|e| match e {
        LinearError::CompositeModulus(_) => Failure::semantic(e),
        other => Failure::usage(other),
    })?;
    let (r, rank) = rref_mod_p(&m);
    writeln!(out, "coloring matrix over Z/{}:", m.modulus())?;
    writeln!(out, "{m}")?;
    writeln!(out, "reduced row-echelon form (rank {rank}):")?;
    writeln!(out, "{r}")?;
    writeln!(
        out,
        "count: {}",
        m.kernel_size().map_err(Failure::semantic)?
    )?;
    Ok(())
}

fn diagram(link: &LinkArgs) -> Result<LinkDiagram, Failure> {
    if let Some(name) = &link.name {
        return builtin(name)
            .map(|e| e.diagram())
            .ok_or_else(|| Failure::usage(format!("no link named {name} in the table")));
    }
    if let Some(code) = &link.code {
        return parse_gauss(code).map_err(Failure::usage);
    }
    if let Some(pd) = &link.pd {
        return parse_pd(pd).map_err(Failure::usage);
    }
    let path = link.link.as_ref().expect("clap enforces one link source");
    let text = mcb_file::read(path).map_err(Failure::usage)?;
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    if body.contains('X') {
        parse_pd(&body).map_err(Failure::usage)
    } else {
        parse_gauss(&body).map_err(Failure::usage)
    }
}

fn endo_set(x: &McBiquandle, args: &EndoArgs) -> Result<Vec<Endomorphism>, Failure> {
    if args.endos == "all" {
        Ok(endomorphisms(x))
    } else {
        read_endos_file(args.endos.as_ref(), x.order()).map_err(Failure::usage)
    }
}

fn polynomial(
    x: &McBiquandle,
    d: &LinkDiagram,
    s: &[Endomorphism],
) -> Result<(usize, InDegreePolynomial), Failure> {
    let h = find_colorings(x, d);
    let q = build_quiver(x, &h, s).map_err(Failure::usage)?;
    Ok((h.len(), q.indegree_polynomial()))
}

fn write_table(
    x: &McBiquandle,
    s: &[Endomorphism],
    entries: &[LinkTableEntry],
    per_link: bool,
    out: &mut dyn Write,
) -> Outcome {
    let mut groups: Vec<(InDegreePolynomial, Vec<&str>)> = Vec::new();
    for e in entries {
        let (count, poly) = polynomial(x, &e.diagram(), s)?;
        if per_link {
            writeln!(out, "{}\t{count}\t{poly}", e.name)?;
            continue;
        }
        match groups.iter_mut().find(|(p, _)| *p == poly) {
            Some((_, names)) => names.push(&e.name),
            None => groups.push((poly, vec![&e.name])),
        }
    }
    for (poly, names) in groups {
        writeln!(out, "{}\t{poly}", names.join(", "))?;
    }
    Ok(())
}
