use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact γ-vector transforms, log-concavity checks, quadratic-form
/// coefficients and lattice-path certificates.
#[derive(Debug, Parser)]
#[command(name = "gammalc", version)]
pub struct Cli {
    /// Emit JSON (with a top-level "schema": "1") instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

/// Coefficients come inline (comma or space separated, `p/q` allowed) or
/// from a JSON file `{"n": .., "coeffs": [..]}`; `-` reads standard input.
#[derive(Debug, Args)]
pub struct Input {
    /// Inline coefficient list.
    #[arg(allow_hyphen_values = true)]
    pub values: Option<String>,

    /// JSON input file.
    #[arg(long, conflicts_with = "values")]
    pub input: Option<PathBuf>,

    /// Degree of the symmetric polynomial.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between h-coefficients and the γ-vector.
    Gamma {
        /// Treat the input as a γ-vector and print h.
        #[arg(long, conflicts_with = "to_gamma", required_unless_present = "to_gamma")]
        to_h: bool,
        /// Treat the input as h and print its γ-vector.
        #[arg(long)]
        to_gamma: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate sequence predicates; exit 0 iff every requested one holds.
    Check {
        #[arg(long)]
        lc: bool,
        /// Ultra log-concavity of the given order.
        #[arg(long, value_name = "M")]
        ulc: Option<i64>,
        #[arg(long)]
        unimodal: bool,
        #[arg(long)]
        no_internal_zeros: bool,
        /// Log-concavity through the inequalities a_i a_{j-1} >= a_{i-1} a_j, i <= j.
        #[arg(long)]
        pairwise: bool,
        /// Input is a γ-vector (needs --n): γ LC without internal zeros => h likewise.
        #[arg(long)]
        main_theorem: bool,
        /// Input is a γ-vector (needs --n): γ ULC of order n/2 => h ULC of order n.
        #[arg(long)]
        ulc_theorem: bool,
        #[command(flatten)]
        input: Input,
    },
    /// The quadratic form h_i^2 - h_{i-1} h_{i+1} in the γ's.
    Coeffs {
        n: i64,
        i: i64,
        /// Group each anti-diagonal into differences by summation by parts.
        #[arg(long)]
        regroup: bool,
        /// Print zero coefficients too.
        #[arg(long)]
        zeros: bool,
    },
    /// One diagonal of the coefficient table with its sign pattern.
    Diagonal {
        n: i64,
        i: i64,
        l: i64,
        #[arg(long, conflicts_with = "odd", required_unless_present = "odd")]
        even: bool,
        #[arg(long)]
        odd: bool,
    },
    /// Path-counting certificate for the binomial inequality at (n, i, r).
    Certify {
        n: i64,
        i: i64,
        r: i64,
        /// Also draw the configuration.
        #[arg(long)]
        ascii: bool,
        /// Only evaluate the binomial sums; no enumeration.
        #[arg(long)]
        formula_only: bool,
        /// Enumeration cap (default: $GAMMALC_ENUM_CAP or 10000000).
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Draw one path on the (n, i, r) configuration.
    Render {
        n: i64,
        i: i64,
        r: i64,
        /// Steps from the origin, e.g. EENENEEE.
        path: String,
    },
    /// Run the exhaustive property suites up to a given n.
    Sweep {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest n (defaults per suite: 20, 30, 30, 10, 12).
        #[arg(long)]
        max_n: Option<i64>,
        /// Enumeration cap for the path suite.
        #[arg(long)]
        cap: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Diagonal,
    Rsum,
    Paths,
    Transfer,
    All,
}
