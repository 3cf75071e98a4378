//! Command-line front end for `twisted-dirac`.
//!
//! [`run`] parses an argument list, calls the library and renders the result
//! as an aligned table, CSV or canonical JSON. It never touches the
//! filesystem; `main` only forwards its output to stdout or stderr.

mod commands;
mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use render::OutputFormat;

/// Exit status for a successful command.
pub const EXIT_OK: i32 = 0;
/// Exit status for an internal consistency failure.
pub const EXIT_INTERNAL: i32 = 1;
/// Exit status for invalid arguments or parameters.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twisted-dirac",
    about = "Exact spectra of twisted Dirac operators on complex projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues and multiplicities of the squared operator
    Spectrum {
        #[command(subcommand)]
        kind: SpectrumKind,
    },
    /// Lowest eigenvalue for the normal spinor twist, with per-family minima
    Lowest(PairArgs),
    /// Splitting of the normal spinor bundle into powers of the tautological bundle
    Decompose(PairArgs),
    /// Upper bound, Killing spinor count and Kirchberg lower bound
    Bounds(PairArgs),
    /// Compare the upper bound with the actual spectrum
    Sharpness(PairArgs),
    /// Check closed-form multiplicities against the Weyl dimension formula
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum SpectrumKind {
    /// Twist by the m-th power of the tautological bundle
    LineBundle(LineBundleArgs),
    /// Twist by the spinor bundle of the normal bundle of CP^d in CP^n
    Normal(NormalArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
struct FormatFlag {
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Complex dimension of the submanifold (odd)
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    /// Complex dimension of the ambient space (odd, greater than d)
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[command(flatten)]
    format: FormatFlag,
}

#[derive(Debug, Args)]
struct LineBundleArgs {
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    /// Power of the tautological bundle (any integer)
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    /// Largest eigenvalue to report
    #[arg(long)]
    max_eig: u64,
    #[command(flatten)]
    format: FormatFlag,
}

#[derive(Debug, Args)]
struct NormalArgs {
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long)]
    max_eig: u64,
    #[command(flatten)]
    format: FormatFlag,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    /// How far above its lower bound `l` is taken on every strand
    #[arg(long)]
    max_l: u32,
    #[command(flatten)]
    format: FormatFlag,
}

/// Runs one command. `args` excludes the program name.
///
/// Returns the exit status and the text to print: the rendered result on
/// success, a diagnostic otherwise.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("twisted-dirac"))
        .chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, err.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Spectrum { kind: SpectrumKind::LineBundle(a) } => {
            commands::line_bundle(a.d, a.m, a.max_eig, a.format.format.into())
        }
        Command::Spectrum { kind: SpectrumKind::Normal(a) } => {
            commands::normal(a.d, a.n, a.max_eig, a.format.format.into())
        }
        Command::Lowest(a) => commands::lowest(a.d, a.n, a.format.format.into()),
        Command::Decompose(a) => commands::decompose(a.d, a.n, a.format.format.into()),
        Command::Bounds(a) => commands::bounds(a.d, a.n, a.format.format.into()),
        Command::Sharpness(a) => commands::sharpness(a.d, a.n, a.format.format.into()),
        Command::Verify(a) => commands::verify(a.d, a.n, a.max_l, a.format.format.into()),
    };
    match result {
        Ok(text) => (EXIT_OK, text),
        Err(failure) => (failure.code(), failure.to_string()),
    }
}
