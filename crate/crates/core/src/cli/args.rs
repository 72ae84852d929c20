use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wild-mckay", version, about = "Exact invariants of wild Z/p quotient singularities")]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    /// One `path<TAB>value` line per leaf of the JSON report.
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stringy invariants of V/G and of pairs.
    #[command(subcommand)]
    Stringy(StringyCmd),
    /// Artin-Schreier covers of the punctured formal disk.
    #[command(subcommand)]
    Covers(CoversCmd),
    /// Invariant-ring relations and Jacobian checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run the full acceptance battery.
    Suite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct RepArgs {
    #[arg(long)]
    pub p: u64,
    /// Jordan block sizes, comma separated, each in 1..=p.
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<u64>,
}

#[derive(Debug, Subcommand)]
pub enum StringyCmd {
    /// M_st, e_st, E_0 and the projectivization for a representation.
    Invariant(RepArgs),
    /// Pair invariant M_st(X, aY) (smooth) or M_st(X, aY) for the quotient stack (--stack).
    Pair {
        /// Required with --stack.
        #[arg(long, required_if_eq("stack", "true"))]
        p: Option<u64>,
        /// Divisor coefficient, `n` or `n/m`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        stack: bool,
        /// Dimension of the smooth variety.
        #[arg(long, default_value_t = 2, conflicts_with = "stack")]
        d: i64,
    },
    /// #E_0(F_q) from the weighted count of extensions.
    Pointcount {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CoversCmd {
    /// Normal form, constant class and jump of a Laurent polynomial.
    Reduce {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// `exp:coeff,...`, coefficients as integers or `a0+a1*y+...`.
        #[arg(long, allow_hyphen_values = true)]
        series: String,
    },
    /// Enumerate all polar parts of order at most --max-exp and check the counts.
    Census {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max_exp: u64,
        /// Maximum number of inputs to enumerate.
        #[arg(long, default_value_t = wild_mckay::covers::DEFAULT_LIMIT)]
        limit: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Number of representative polynomials (or extensions) with a given jump.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        jump: u64,
        /// Count Galois extensions instead of representatives.
        #[arg(long)]
        extensions: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// The relation among x, N(y), N(z), d for V_3.
    V3 {
        #[arg(long)]
        p: u64,
        /// Use d = y^2 + xz - xy instead of the invariant form.
        #[arg(long)]
        literal_d: bool,
    },
    /// The relation among the five generators for V_2 + V_2 in characteristic 2.
    V2v2,
    /// Invariance and Jacobian determinant for the reflection x -> x + y.
    Reflection {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
    },
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = wild_mckay::suite::DEFAULT_SEED)]
    pub seed: u64,
    /// Run only these criteria (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}
