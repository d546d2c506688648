//! Batch front-end wiring the solver pipelines together.
//!
//! Exit codes: 0 = yes/solvable, 1 = no/unsolvable, 2 = usage or parse
//! error, 3 = budget exceeded. Witnesses and constructed instances are
//! printed on stdout in the instance grammar (see [`format`]); identical
//! invocations produce byte-identical stdout. `TROPKIT_BUDGET` overrides
//! the scan budget of the brute-force oracles and of global dimension
//! enumeration.

pub mod format;

use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use tropkit_core::dimension::{
    self, local_dimension_with_form, verify_certificate, Convention, DimensionCertificate,
};
use tropkit_core::maxatom::MaxAtomSystem;
use tropkit_core::mpgame::{combine_and, MeanPayoffGame};
use tropkit_core::oracles;
use tropkit_core::reductions::{
    self, combine_or, decide_minplus, decide_tropical, inf_elimination, solve_minplus,
    solve_tropical, solve_tropical_inf,
};
use tropkit_core::{Domain, Error, Ext, ExtInt, Int, SystemRef, TropicalSystem, TwoSidedSystem};

use format::ParseError;

#[derive(Parser)]
#[command(name = "tropkit", version, about = "Exact tropical / min-plus linear algebra")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    /// Max-atom pipeline (finite systems).
    Map,
    /// Infinity elimination, then the max-atom pipeline.
    Infelim,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// Max-atom system (binary normal form).
    Map,
    /// Min-plus inequality system with the same solution set.
    Minplus,
    /// Tropical system solvable iff the max-atom input is.
    TropicalOfMap,
    /// Single finite system solvable iff the Z∞ input is.
    Finite,
}

#[derive(Args)]
struct DimArgs {
    file: String,
    /// Evaluate the local dimension at this point (comma-separated, `inf` allowed).
    #[arg(long, conflicts_with = "global")]
    at: Option<String>,
    /// Maximize the local dimension over all solutions.
    #[arg(long)]
    global: bool,
    /// Report affine dimension (projective + 1); the default.
    #[arg(long, conflicts_with = "projective")]
    affine: bool,
    /// Report projective dimension.
    #[arg(long)]
    projective: bool,
    /// Exit 0 iff the dimension is at least this.
    #[arg(long)]
    at_least: Option<usize>,
    /// Write a dimension certificate here.
    #[arg(long, value_name = "PATH")]
    emit_cert: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a tropical system; prints a witness or `unsat`.
    Solve {
        file: String,
        /// Decide by exhaustive grid search instead of the reductions.
        #[arg(long)]
        oracle: bool,
        /// Force a pipeline (default: by the presence of `inf` entries).
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// Solve a two-sided min-plus system; prints a witness or `unsat`.
    MinplusSolve { file: String },
    /// Prevariety dimension at a point or globally.
    Dim(DimArgs),
    /// Verify a dimension certificate against a system.
    Certify { file: String, certfile: String },
    /// Does the equation (1-row system) follow from the system?
    Implies {
        sysfile: String,
        rowfile: String,
        /// Decide by exhaustive grid search.
        #[arg(long)]
        oracle: bool,
    },
    /// Are the two systems equivalent?
    Equiv { file1: String, file2: String },
    /// Translate an instance into another encoding.
    Reduce {
        file: String,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Instance generators.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Mean payoff games.
    Mpg {
        #[command(subcommand)]
        what: MpgCmd,
    },
    /// Tropical rank of a finite matrix.
    Rank { file: String },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Vertex-Cover hard instance for the dimension problem.
    Vc {
        graphfile: String,
        /// Emit the min-plus equality variant instead.
        #[arg(long)]
        minplus: bool,
    },
}

#[derive(Subcommand)]
enum MpgCmd {
    /// Does player 1 win?
    Solve { file: String },
    /// Emit the role-swapped complement game.
    Negate { file: String },
    /// Emit the AND-combination of several games.
    Combine {
        #[arg(num_args = 1..)]
        files: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(msg) => Failure::Budget(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{path}: {e}")))?)
    }
}

fn budget() -> Result<u64, Failure> {
    match std::env::var("TROPKIT_BUDGET") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Failure::Usage("TROPKIT_BUDGET must be an unsigned integer".into())),
        Err(_) => Ok(tropkit_core::DEFAULT_BUDGET),
    }
}

fn print_witness(out: Out<'_>, w: &[Ext]) -> Result<(), Failure> {
    let parts: Vec<String> = w.iter().map(|e| e.to_string()).collect();
    writeln!(out, "{}", parts.join(" "))?;
    Ok(())
}

fn parse_point(text: &str, n: usize) -> Result<Vec<Ext>, Failure> {
    let coords: Vec<Ext> = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            if t == "inf" {
                Ok(ExtInt::Inf)
            } else {
                t.parse::<Int>()
                    .map(ExtInt::Finite)
                    .map_err(|_| Failure::Usage(format!("malformed coordinate `{t}`")))
            }
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != n {
        return Err(Failure::Usage(format!(
            "point has {} coordinates, system has {n} columns",
            coords.len()
        )));
    }
    Ok(coords)
}

/// Either kind of system file, detected by its header.
enum AnySystem {
    Tropical(TropicalSystem<Int>),
    MinPlus(TwoSidedSystem<Int>),
}

fn parse_system(text: &str) -> Result<AnySystem, Failure> {
    if text.starts_with("tropical") {
        Ok(AnySystem::Tropical(format::parse_matrix(text)?))
    } else if text.starts_with("minplus") {
        Ok(AnySystem::MinPlus(format::parse_twosided(text)?))
    } else {
        Err(Failure::Usage("expected a `tropical` or `minplus` file".into()))
    }
}

impl AnySystem {
    fn as_ref(&self) -> SystemRef<'_, Int> {
        match self {
            AnySystem::Tropical(a) => SystemRef::Tropical(a),
            AnySystem::MinPlus(s) => SystemRef::MinPlus(s),
        }
    }

    fn nrows(&self) -> usize {
        match self {
            AnySystem::Tropical(a) => a.nrows(),
            AnySystem::MinPlus(s) => s.nrows(),
        }
    }

    fn ncols(&self) -> usize {
        match self {
            AnySystem::Tropical(a) => a.ncols(),
            AnySystem::MinPlus(s) => s.ncols(),
        }
    }
}

fn cmd_solve(out: Out<'_>, file: &str, oracle: bool, via: Option<Via>) -> Result<i32, Failure> {
    let a = format::parse_matrix(&read_input(file)?)?;
    let has_inf = a.domain() == Domain::IntInf;
    let witness: Option<Vec<Ext>> = if oracle {
        if has_inf {
            oracles::brute_tropsolv_inf(&a, budget()?)?
        } else {
            oracles::brute_tropsolv(&a, budget()?)?
                .map(|w| w.into_iter().map(ExtInt::Finite).collect())
        }
    } else {
        let via = via.unwrap_or(if has_inf { Via::Infelim } else { Via::Map });
        match via {
            Via::Map => {
                if has_inf {
                    return Err(Failure::Usage(
                        "--via map needs a finite system; use --via infelim".into(),
                    ));
                }
                solve_tropical(&a)?.map(|w| w.into_iter().map(ExtInt::Finite).collect())
            }
            Via::Infelim => solve_tropical_inf(&a)?,
        }
    };
    match witness {
        Some(w) => {
            print_witness(out, &w)?;
            Ok(0)
        }
        None => {
            writeln!(out, "unsat")?;
            Ok(1)
        }
    }
}

fn cmd_minplus_solve(out: Out<'_>, file: &str) -> Result<i32, Failure> {
    let s = format::parse_twosided(&read_input(file)?)?;
    match solve_minplus(&s)? {
        Some(w) => {
            print_witness(out, &w)?;
            Ok(0)
        }
        None => {
            writeln!(out, "unsat")?;
            Ok(1)
        }
    }
}

fn cmd_dim(out: Out<'_>, args: &DimArgs) -> Result<i32, Failure> {
    let sys = parse_system(&read_input(&args.file)?)?;
    let convention = if args.projective {
        Convention::Projective
    } else {
        Convention::Affine
    };
    let (projective, cert): (usize, Option<DimensionCertificate<Int>>) =
        if let Some(at) = &args.at {
            let x = parse_point(at, sys.ncols())?;
            let (d, form, _) = local_dimension_with_form(sys.as_ref(), &x)?;
            (d, Some(DimensionCertificate { witness: x, form, claimed_k: d }))
        } else if args.global {
            let g = dimension::global_dimension(sys.as_ref(), budget()?)?;
            match g {
                Some(g) => {
                    let cert = DimensionCertificate {
                        witness: g.witness,
                        form: g.form,
                        claimed_k: g.projective,
                    };
                    (g.projective, Some(cert))
                }
                None => {
                    writeln!(out, "unsat")?;
                    return Ok(1);
                }
            }
        } else {
            return Err(Failure::Usage("pass --at <point> or --global".into()));
        };
    let reported = match convention {
        Convention::Projective => projective,
        Convention::Affine => projective + 1,
    };
    writeln!(out, "{reported}")?;
    if let Some(path) = &args.emit_cert {
        let cert = cert.expect("certificate accompanies every computed dimension");
        std::fs::write(path, format::emit_certificate(&cert, sys.nrows()))?;
    }
    match args.at_least {
        Some(k) => Ok(if reported >= k { 0 } else { 1 }),
        None => Ok(0),
    }
}

fn cmd_certify(out: Out<'_>, file: &str, certfile: &str) -> Result<i32, Failure> {
    let sys = parse_system(&read_input(file)?)?;
    let cert = format::parse_certificate(&read_input(certfile)?)?;
    if verify_certificate(sys.as_ref(), &cert) {
        writeln!(out, "valid")?;
        Ok(0)
    } else {
        writeln!(out, "invalid")?;
        Ok(1)
    }
}

fn cmd_implies(out: Out<'_>, sysfile: &str, rowfile: &str, oracle: bool) -> Result<i32, Failure> {
    let sys = parse_system(&read_input(sysfile)?)?;
    let row = parse_system(&read_input(rowfile)?)?;
    let verdict = match (&sys, &row) {
        (AnySystem::Tropical(a), AnySystem::Tropical(l)) => {
            if l.nrows() != 1 {
                return Err(Failure::Usage("the row file must have exactly one row".into()));
            }
            let lrow = &l.rows()[0];
            let finite_inputs =
                a.domain() == Domain::Int && lrow.iter().all(|e| e.is_finite());
            if oracle {
                if !finite_inputs {
                    return Err(Failure::Usage(
                        "--oracle implication needs finite entries".into(),
                    ));
                }
                let l_fin: Vec<Int> =
                    lrow.iter().map(|e| e.finite().cloned().unwrap()).collect();
                oracles::brute_implies(a, &l_fin, budget()?)?
            } else if finite_inputs {
                let l_fin: Vec<Int> =
                    lrow.iter().map(|e| e.finite().cloned().unwrap()).collect();
                reductions::implies(a, &l_fin, decide_tropical)?
            } else {
                reductions::implies_inf(a, lrow, decide_tropical)?
            }
        }
        (AnySystem::MinPlus(s), AnySystem::MinPlus(l)) => {
            if l.nrows() != 1 {
                return Err(Failure::Usage("the row file must have exactly one row".into()));
            }
            if oracle {
                oracles::brute_minplus_implies(s, &l.lhs()[0], &l.rhs()[0], budget()?)?
            } else {
                reductions::minplus_implies(s, &l.lhs()[0], &l.rhs()[0], decide_minplus)?
            }
        }
        _ => {
            return Err(Failure::Usage(
                "system and row files must be of the same kind".into(),
            ))
        }
    };
    writeln!(out, "{}", if verdict { "yes" } else { "no" })?;
    Ok(if verdict { 0 } else { 1 })
}

fn cmd_equiv(out: Out<'_>, file1: &str, file2: &str) -> Result<i32, Failure> {
    let a = format::parse_matrix(&read_input(file1)?)?;
    let b = format::parse_matrix(&read_input(file2)?)?;
    if a.ncols() != b.ncols() {
        return Err(Failure::Usage("systems have different column counts".into()));
    }
    let finite = a.domain() == Domain::Int && b.domain() == Domain::Int;
    let verdict = if finite {
        reductions::equivalent(&a, &b, decide_tropical)?
    } else {
        // Row-by-row implication both ways, over Z∞.
        let mut ok = true;
        for row in b.rows() {
            if !reductions::implies_inf(&a, row, decide_tropical)? {
                ok = false;
                break;
            }
        }
        if ok {
            for row in a.rows() {
                if !reductions::implies_inf(&b, row, decide_tropical)? {
                    ok = false;
                    break;
                }
            }
        }
        ok
    };
    writeln!(out, "{}", if verdict { "yes" } else { "no" })?;
    Ok(if verdict { 0 } else { 1 })
}

fn cmd_reduce(out: Out<'_>, file: &str, to: Target) -> Result<i32, Failure> {
    let text = read_input(file)?;
    match to {
        Target::Map => {
            let a = format::parse_matrix(&text)?;
            let (map, _) = reductions::tropical_to_maxatom(&a)?;
            write!(out, "{}", format::emit_map(&map.to_binary_form())?)?;
        }
        Target::Minplus => {
            let a = format::parse_matrix(&text)?;
            let s = reductions::tropical_to_minplus(&a)?;
            write!(out, "{}", format::emit_twosided(&s))?;
        }
        Target::TropicalOfMap => {
            let map: MaxAtomSystem<Int> = format::parse_map(&text)?;
            let (t, _) = reductions::maxatom_to_tropical(&map.to_binary_form())?;
            write!(out, "{}", format::emit_matrix(&t))?;
        }
        Target::Finite => {
            let a = format::parse_matrix(&text)?;
            write!(out, "{}", format::emit_matrix(&reduce_to_finite(&a)?))?;
        }
    }
    Ok(0)
}

/// One finite system solvable iff the `Z∞` input is: the OR-combination of
/// all infinity eliminations. Trivially solvable inputs (everything
/// unconstrained, or an all-`∞` column) collapse to a fixed solvable matrix.
fn reduce_to_finite(a: &TropicalSystem<Int>) -> Result<TropicalSystem<Int>, Failure> {
    let trivially_solvable = TropicalSystem::from_finite(vec![vec![Int::from(0), Int::from(0)]])?;
    let (norm, _) = a.normalize();
    let Some(norm) = norm else {
        return Ok(trivially_solvable);
    };
    for j in 0..norm.ncols() {
        if norm.rows().iter().all(|r| r[j].is_inf()) {
            return Ok(trivially_solvable);
        }
    }
    let parts: Vec<TropicalSystem<Int>> = (0..norm.ncols())
        .map(|i| inf_elimination(&norm, i))
        .collect::<Result<_, _>>()?;
    Ok(combine_or(&parts, None)?)
}

fn cmd_gen_vc(out: Out<'_>, graphfile: &str, minplus: bool) -> Result<i32, Failure> {
    let g = format::parse_graph(&read_input(graphfile)?)?;
    if minplus {
        let s = dimension::vc_to_minplus::<Int>(&g)?;
        write!(out, "{}", format::emit_twosided(&s))?;
    } else {
        let a = dimension::vc_to_tropical::<Int>(&g)?;
        write!(out, "{}", format::emit_matrix(&a))?;
    }
    Ok(0)
}

fn cmd_mpg(out: Out<'_>, what: &MpgCmd) -> Result<i32, Failure> {
    match what {
        MpgCmd::Solve { file } => {
            let g = format::parse_mpg(&read_input(file)?)?;
            let win = g.decide()?;
            writeln!(out, "{}", if win { "yes" } else { "no" })?;
            Ok(if win { 0 } else { 1 })
        }
        MpgCmd::Negate { file } => {
            let g = format::parse_mpg(&read_input(file)?)?;
            write!(out, "{}", format::emit_mpg(&g.negate()))?;
            Ok(0)
        }
        MpgCmd::Combine { files } => {
            let games: Vec<MeanPayoffGame<Int>> = files
                .iter()
                .map(|f| Ok(format::parse_mpg(&read_input(f)?)?))
                .collect::<Result<_, Failure>>()?;
            write!(out, "{}", format::emit_mpg(&combine_and(&games)?))?;
            Ok(0)
        }
    }
}

fn cmd_rank(out: Out<'_>, file: &str) -> Result<i32, Failure> {
    let a = format::parse_matrix(&read_input(file)?)?;
    let r = dimension::tropical_rank(&a, decide_tropical)?;
    writeln!(out, "{r}")?;
    Ok(0)
}

fn dispatch(out: Out<'_>, cmd: &Cmd) -> Result<i32, Failure> {
    match cmd {
        Cmd::Solve { file, oracle, via } => cmd_solve(out, file, *oracle, *via),
        Cmd::MinplusSolve { file } => cmd_minplus_solve(out, file),
        Cmd::Dim(args) => cmd_dim(out, args),
        Cmd::Certify { file, certfile } => cmd_certify(out, file, certfile),
        Cmd::Implies { sysfile, rowfile, oracle } => {
            cmd_implies(out, sysfile, rowfile, *oracle)
        }
        Cmd::Equiv { file1, file2 } => cmd_equiv(out, file1, file2),
        Cmd::Reduce { file, to } => cmd_reduce(out, file, *to),
        Cmd::Gen { what } => match what {
            GenCmd::Vc { graphfile, minplus } => cmd_gen_vc(out, graphfile, *minplus),
        },
        Cmd::Mpg { what } => cmd_mpg(out, what),
        Cmd::Rank { file } => cmd_rank(out, file),
    }
}

/// Runs one invocation; writes the report to `out` and returns the exit
/// status.
pub fn run<A, S>(argv: A, out: &mut dyn Write) -> i32
where
    A: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            eprintln!("{e}");
            return 2;
        }
    };
    match dispatch(out, &cli.cmd) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("tropkit: {msg}");
            2
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("tropkit: budget exceeded: {msg}");
            3
        }
    }
}
