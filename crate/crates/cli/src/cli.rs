use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use klein_core::catalog::{named_subalgebra, sl2, sympower, verify_family, FamilyError, NamedSubalgebra};
use klein_core::jetfilt::{
    greedy_chain, is_maximally_refined, jet_order_search, validate_jet_filtration, SearchStrategy,
};
use klein_core::klein::{analyze, analyze_pair, build_klein_pair, is_stiffening, StabilizerChoice};
use klein_core::{Error, Representation};
use serde_json::json;

use crate::error::{CliError, CliResult, ExitStatus};
use crate::formats::{
    algebra_json, load_algebra, load_representation, load_subspace, load_unchecked, load_vector, load_vectors, render,
    representation_json, subspace_json, write_json, Loaded,
};
use crate::report::{self, FiltrationSummary, Report};

#[derive(Debug, Parser)]
#[command(
    name = "klein",
    version,
    about = "Exact analysis of Lie algebra representations, jet-filtrations and Klein pairs"
)]
pub struct Cli {
    /// Canonical JSON output (default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Aligned human-readable output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the identities of a Lie algebra or representation file.
    Validate { file: PathBuf },
    /// Emit catalog objects.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Greedy jet-filtration from one start vector.
    JetFiltration {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        vector: PathBuf,
    },
    /// Search start vectors for the longest greedy jet-filtration.
    JetOrder {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, value_enum)]
        strategy: Strategy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        random_count: usize,
        #[arg(long)]
        vectors: Option<PathBuf>,
    },
    /// Build the semidirect Klein pair of a representation and analyze it.
    KleinPair(RepPair),
    /// Weissfeiler filtration of a pair, from an algebra and subalgebra or
    /// from a representation.
    Weissfeiler(WeissfeilerArgs),
    /// Whether (g, h) stiffens (g', h').
    Stiffening {
        #[arg(long)]
        ambient: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long = "h-prime")]
        h_prime: PathBuf,
        #[arg(long)]
        h: PathBuf,
    },
    /// Verify a catalog family over a range of parameters.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Symmetric power representation of sl(2) of degree k.
    #[command(name = "sl2-sympower")]
    Sl2Sympower {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Lie algebra sl(2) in the basis (e, f, h).
    Sl2 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A named subalgebra of sl(2).
    #[command(name = "sl2-subalgebra")]
    Sl2Subalgebra {
        #[arg(long)]
        name: NamedSubalgebra,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Strategy {
    Basis,
    Random,
    File,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    #[value(name = "sl2-sympower")]
    Sl2Sympower,
}

#[derive(Debug, Args)]
pub struct RepPair {
    #[arg(long)]
    pub rep: PathBuf,
    /// `abelian`, or `stabilizer:<file|name>` with a subalgebra of g.
    #[arg(long)]
    pub h0: String,
}

#[derive(Debug, Args)]
pub struct WeissfeilerArgs {
    #[arg(long, conflicts_with = "rep", requires = "h0_basis")]
    pub algebra: Option<PathBuf>,
    #[arg(long = "h0-basis", requires = "algebra")]
    pub h0_basis: Option<PathBuf>,
    #[arg(long, required_unless_present = "algebra", requires = "h0")]
    pub rep: Option<PathBuf>,
    #[arg(long, requires = "rep")]
    pub h0: Option<String>,
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { ExitStatus::Success } else { ExitStatus::BadInput };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let _ = out.write_all(report.text(cli.pretty).as_bytes());
            report.status
        }
        Err(e) => {
            let violations = match &e {
                CliError::Core { source: Error::InvalidAlgebra(r) | Error::InvalidRepresentation(r), .. } => Some(r),
                _ => None,
            };
            let _ = writeln!(err, "error: {e}");
            if !cli.pretty {
                let _ = out.write_all(render(&report::error(&e.to_string(), violations)).as_bytes());
            }
            ExitStatus::BadInput
        }
    }
}

fn context(path: &Path) -> String {
    path.display().to_string()
}

pub fn execute(command: &Command) -> CliResult<Report> {
    match command {
        Command::Validate { file } => validate(file),
        Command::Catalog(c) => catalog(c),
        Command::JetFiltration { rep, vector } => jet_filtration(rep, vector),
        Command::JetOrder { rep, strategy, seed, random_count, vectors } => {
            jet_order(rep, *strategy, *seed, *random_count, vectors.as_deref())
        }
        Command::KleinPair(args) => klein_pair(&args.rep, &args.h0),
        Command::Weissfeiler(args) => match (&args.algebra, &args.h0_basis, &args.rep, &args.h0) {
            (Some(algebra), Some(basis), _, _) => {
                let h = load_algebra(algebra)?;
                let h0 = load_subspace(basis, Some(h.dim()))?;
                let analysis = analyze(&h, &h0).map_err(CliError::core(context(basis)))?;
                Ok(report::klein(&analysis, report::algebra_provenance_json(&h0)))
            }
            (_, _, Some(rep), Some(h0)) => klein_pair(rep, h0),
            _ => Err(CliError::Usage("give --algebra with --h0-basis, or --rep with --h0".into())),
        },
        Command::Stiffening { ambient, g, h_prime, h } => {
            let g_prime = load_algebra(ambient)?;
            let n = Some(g_prime.dim());
            let (hp, gs, hs) = (load_subspace(h_prime, n)?, load_subspace(g, n)?, load_subspace(h, n)?);
            let r = is_stiffening(&g_prime, &hp, &gs, &hs).map_err(CliError::core("stiffening"))?;
            Ok(report::stiffening(&r, [g_prime.dim(), hp.dim(), gs.dim(), hs.dim()]))
        }
        Command::Verify { family: Family::Sl2Sympower, k_max } => verify(*k_max),
    }
}

fn validate(file: &Path) -> CliResult<Report> {
    Ok(match load_unchecked(file)? {
        Loaded::Algebra(a) => report::validation(&[a.validate()], (a.dim(), None)),
        Loaded::Representation(r) => {
            let algebra = r.algebra().validate();
            let mut reports = vec![algebra];
            // The homomorphism check is meaningless over a broken bracket.
            if reports[0].passed {
                reports.push(r.validate());
            }
            report::validation(&reports, (r.algebra().dim(), Some(r.space_dim())))
        }
    })
}

fn catalog(command: &CatalogCommand) -> CliResult<Report> {
    let (object, summary, out) = match command {
        CatalogCommand::Sl2Sympower { k, out } => {
            let rep = sympower(*k).map_err(CliError::core("--k"))?;
            (representation_json(&rep), json!({"kind": "representation", "k": k, "space_dim": k + 1}), out)
        }
        CatalogCommand::Sl2 { out } => (algebra_json(&sl2()), json!({"kind": "lie_algebra", "dim": 3}), out),
        CatalogCommand::Sl2Subalgebra { name, out } => {
            let s = named_subalgebra(*name);
            (subspace_json(&s), json!({"kind": "subspace", "name": name.name(), "dim": s.dim()}), out)
        }
    };
    if let Some(path) = out {
        write_json(path, &object)?;
    }
    let written = out.as_ref().map(|p| p.display().to_string());
    Ok(report::catalog(object, written.as_deref(), summary))
}

fn jet_filtration(rep_path: &Path, vector_path: &Path) -> CliResult<Report> {
    let rep = load_representation(rep_path)?;
    let v = load_vector(vector_path, rep.space_dim())?;
    let chain = greedy_chain(&rep, &v).map_err(CliError::core(context(vector_path)))?;
    let f = &chain.filtration;
    let valid = validate_jet_filtration(&rep, f).map_err(CliError::core("filtration"))?;
    let maximally_refined = valid && is_maximally_refined(&rep, f).map_err(CliError::core("filtration"))?;
    Ok(report::filtration(&FiltrationSummary { filtration: f, valid, maximally_refined, stalled: chain.is_stalled() }))
}

fn jet_order(
    rep_path: &Path,
    strategy: Strategy,
    seed: u64,
    count: usize,
    vectors: Option<&Path>,
) -> CliResult<Report> {
    let rep = load_representation(rep_path)?;
    let (search, described) = match strategy {
        Strategy::Basis => (SearchStrategy::Basis, json!({"kind": "basis"})),
        Strategy::Random => (
            SearchStrategy::BasisAndRandom { seed, count },
            json!({"kind": "random", "seed": seed, "random_count": count}),
        ),
        Strategy::File => {
            let path = vectors.ok_or_else(|| CliError::Usage("--strategy file needs --vectors".into()))?;
            (SearchStrategy::Explicit(load_vectors(path, rep.space_dim())?), json!({"kind": "file"}))
        }
    };
    let result = jet_order_search(&rep, &search).map_err(CliError::core("jet-order"))?;
    Ok(report::jet_order(described, rep.space_dim(), &result))
}

fn stabilizer_choice(rep: &Representation, h0: &str, base_dir: &Path) -> CliResult<StabilizerChoice> {
    if h0 == "abelian" {
        return Ok(StabilizerChoice::Abelian);
    }
    let Some(target) = h0.strip_prefix("stabilizer:") else {
        return Err(CliError::Usage(format!("--h0 must be `abelian` or `stabilizer:<file|name>`, got {h0:?}")));
    };
    if let Ok(name) = target.parse::<NamedSubalgebra>() {
        if rep.algebra() != &sl2() {
            return Err(CliError::Usage(format!("named subalgebra {target:?} needs a representation of sl2")));
        }
        return Ok(StabilizerChoice::Subalgebra(named_subalgebra(name)));
    }
    let path = Path::new(target);
    let path = if path.is_absolute() || path.exists() { path.to_path_buf() } else { base_dir.join(path) };
    Ok(StabilizerChoice::Subalgebra(load_subspace(&path, Some(rep.algebra().dim()))?))
}

/// The filtration is the greedy chain of the first basis vector attaining
/// the best length.
fn klein_pair(rep_path: &Path, h0: &str) -> CliResult<Report> {
    let rep = load_representation(rep_path)?;
    let base_dir = rep_path.parent().map(Path::to_path_buf).unwrap_or_default();
    let choice = stabilizer_choice(&rep, h0, &base_dir)?;
    let search = jet_order_search(&rep, &SearchStrategy::Basis).map_err(CliError::core("jet-order"))?;
    let chain = greedy_chain(&rep, &search.witness).map_err(CliError::core("greedy chain"))?;
    let pair = build_klein_pair(&rep, &chain.filtration, choice).map_err(CliError::core("--h0"))?;
    let analysis = analyze_pair(&pair).map_err(CliError::core("klein pair"))?;
    let provenance = pair.provenance().expect("built from a representation");
    let mut prov = report::provenance_json(provenance, Some(&search.witness));
    prov["filtration_stalled"] = json!(chain.is_stalled());
    Ok(report::klein(&analysis, prov))
}

fn verify(k_max: usize) -> CliResult<Report> {
    if k_max < 1 {
        return Err(CliError::Usage("--k-max must be at least 1".into()));
    }
    match verify_family(k_max) {
        Ok(r) => Ok(report::family(k_max, &r.rows, None)),
        Err(FamilyError::Check { k, reason, row, mut rows_so_far }) => {
            rows_so_far.push(*row);
            Ok(report::family(k_max, &rows_so_far, Some((k, &reason))))
        }
        Err(FamilyError::Computation { k, source }) => Err(CliError::Core { context: format!("k = {k}"), source }),
    }
}
