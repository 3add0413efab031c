use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ghcseries::rootsys::parse_rational;
use ghcseries::LambdaConvention;
use ghcseries_cli::commands::{self, PairSpec};
use ghcseries_cli::{exit_code, table};

#[derive(Parser)]
#[command(name = "ghcseries", version, about = "Fundamental series of (g, sl(2))-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct PairArgs {
    /// One of the built-in pairs, e.g. sp4-principal.
    #[arg(long, conflicts_with_all = ["algebra", "embedding"])]
    fixture: Option<String>,
    /// Type label such as A2, C2 or A1+A1.
    #[arg(long, requires = "embedding")]
    algebra: Option<String>,
    /// principal, root:<coords> or vector:<coords>.
    #[arg(long, requires = "algebra", allow_hyphen_values = true)]
    embedding: Option<String>,
}

impl PairArgs {
    fn spec(&self) -> Result<PairSpec, String> {
        match (&self.fixture, &self.algebra, &self.embedding) {
            (Some(f), _, _) => Ok(PairSpec::Fixture(f.clone())),
            (None, Some(a), Some(e)) => Ok(PairSpec::Explicit {
                algebra: a.clone(),
                embedding: e.clone(),
            }),
            _ => Err("give either --fixture or both --algebra and --embedding".into()),
        }
    }
}

#[derive(Args)]
struct ConventionArg {
    /// Read lambda1, lambda2 off the weights of n or of n ∩ k^perp.
    #[arg(long, default_value = "n")]
    lambda_convention: LambdaConvention,
}

#[derive(Args)]
struct CutoffArg {
    /// Largest k-type V(delta) reported.
    #[arg(long, env = "GHCSERIES_CUTOFF", default_value_t = 60)]
    cutoff: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the minimal compatible parabolic and the bounds on mu.
    Analyze {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        conv: ConventionArg,
        /// Also classify this minimal k-type.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<i64>,
    },
    /// t-character of N_p(E) and k-character of F^1(p, E).
    Character {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        cutoff: CutoffArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: i64,
        #[arg(long, default_value_t = 1)]
        dim_e: i64,
        /// Accept mu < 0 and report the Euler characteristic instead.
        #[arg(long)]
        allow_virtual: bool,
    },
    /// Fundamental series with central character theta_kappa and their
    /// multiplicity matrices.
    Block {
        #[command(flatten)]
        pair: PairArgs,
        /// Comma separated rationals, e.g. 3/2,1/2.
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        /// Skip the multiplicity matrices.
        #[arg(long)]
        enumerate_only: bool,
    },
    /// k-character of the socle of F^1(p, E) for a block element.
    Socle {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        conv: ConventionArg,
        #[command(flatten)]
        cutoff: CutoffArg,
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        #[arg(long)]
        mu: i64,
        /// Block index, needed when several elements share mu.
        #[arg(long)]
        index: Option<usize>,
    },
    /// b-parameters of the g-types a rho + b zeta in the sl(3) principal
    /// series attached to a root sl(2).
    Iwasawa {
        #[arg(long, default_value_t = 20)]
        max_a: i64,
        /// chi(h_I), a rational.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        c: String,
    },
}

fn run(cli: &Cli) -> Result<ghcseries_cli::report::Document, (i32, String)> {
    let lib = |e: ghcseries::Error| (exit_code(&e), e.to_string());
    let spec = |p: &PairArgs| p.spec().map_err(|m| (2, m));
    match &cli.command {
        Command::Analyze { pair, conv, mu } => {
            commands::analyze(&spec(pair)?, *mu, conv.lambda_convention).map_err(lib)
        }
        Command::Character {
            pair,
            cutoff,
            mu,
            dim_e,
            allow_virtual,
        } => commands::character(&spec(pair)?, *mu, *dim_e, cutoff.cutoff, *allow_virtual)
            .map_err(lib),
        Command::Block {
            pair,
            kappa,
            enumerate_only,
        } => commands::block(&spec(pair)?, kappa, *enumerate_only).map_err(lib),
        Command::Socle {
            pair,
            conv,
            cutoff,
            kappa,
            mu,
            index,
        } => commands::socle(
            &spec(pair)?,
            kappa,
            *mu,
            *index,
            cutoff.cutoff,
            conv.lambda_convention,
        )
        .map_err(lib),
        Command::Iwasawa { max_a, c } => {
            let c = parse_rational(c).map_err(lib)?;
            commands::iwasawa(*max_a, c).map_err(lib)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            let value = serde_json::to_value(&doc).expect("report serializes");
            let text = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&value).expect("report serializes") + "\n"
                }
                Format::Table => table::render(&value),
            };
            // a closed pipe downstream is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
