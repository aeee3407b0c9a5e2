use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "diagquartic", version, about = "Zero counts of diagonal quartic forms over finite fields")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Characteristic (odd prime).
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Extension degree.
    #[arg(long, global = true, default_value_t = 1)]
    pub m: u32,
    /// Generator of F_q^*, as a canonical integer encoding.
    #[arg(long, global = true)]
    pub generator: Option<u64>,
    /// Monic modulus, comma-separated coefficients from x^0 up to x^m.
    #[arg(long, global = true, value_delimiter = ',')]
    pub modulus: Option<Vec<u64>>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

impl Common {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Modulus, generator and (s, t) of F_q.
    Field,
    /// Table of cyclotomic numbers (i, j)_k, closed form next to enumeration.
    Cyclotomic {
        #[arg(long, default_value_t = 4)]
        k: u64,
    },
    /// N_n(c), or M_n(y) with --y.
    Count(CountArgs),
    /// Generating function and its first coefficients.
    Series {
        #[arg(long, conflicts_with = "y")]
        c: Option<u64>,
        #[arg(long)]
        y: Option<u64>,
        /// Number of coefficients.
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// Cross-check every route against the oracle.
    Verify {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Also check Gauss sums, the quartic they satisfy, and reconstruction.
        #[arg(long)]
        expsums: bool,
        /// Shift t by this amount before checking closed forms.
        #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
        perturb_t: i64,
    },
    /// Wall time per method.
    Bench {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Field sizes as p or p^m (default 5, 13, 49).
        #[arg(long, value_delimiter = ',')]
        fields: Option<Vec<String>>,
    },
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, conflicts_with = "y")]
    pub c: Option<u64>,
    /// Count zeros of x_1^4 + ... + x_{n-1}^4 + y x_n^4 instead.
    #[arg(long)]
    pub y: Option<u64>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    #[arg(long)]
    pub all_methods: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Oracle,
    Closed,
    Cyclotomy,
    Expsum,
    Series,
}

impl Method {
    pub const CONCRETE: [Method; 5] = [Method::Oracle, Method::Closed, Method::Cyclotomy, Method::Series, Method::Expsum];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Oracle => "oracle",
            Method::Closed => "closed",
            Method::Cyclotomy => "cyclotomy",
            Method::Expsum => "expsum",
            Method::Series => "series",
        }
    }
}
