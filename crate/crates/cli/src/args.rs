//! Command-line grammar.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "korolat", version, about = "Korobov lattice rules over multiplicative subgroups of Z_p*")]
#[command(after_help = "Exit codes: 0 success, 2 invalid input, 3 work budget exceeded, 4 internal check failed.\n\
Work caps come from KOROLAT_BUDGET: one integer for every cap, or key=value pairs\n\
over lattice, discrepancy, expsum and search.")]
pub struct Cli {
    /// Print one JSON object instead of CSV or text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print CSV for commands that default to a text line.
    #[arg(long, global = true, conflicts_with = "json")]
    pub csv: bool,
    /// Write the output to this file, with a run manifest at <OUT>.manifest.json.
    #[arg(long, global = true, value_name = "OUT")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Dimension thresholds for a subgroup size exponent delta.
    #[command(after_help = "Columns: delta,m,branch,alpha_m,beta_m,alpha_next,n_delta,s_prime,s_double_prime,s_min\n\
With --table: left,right,s_at_left,s_at_midpoint,expected,status")]
    #[command(group(ArgGroup::new("what").required(true).args(["delta", "table"])))]
    Thresholds {
        /// Rational "n/d" or an exact decimal.
        delta: Option<String>,
        /// Recompute the small-m reference table and compare.
        #[arg(long)]
        table: bool,
    },
    /// Minimize the relative-minima sum over generating vectors from G^s.
    #[command(after_help = "Columns: p,s,order,strategy,seed,samples,candidates,best_a,bykovskii,bykovskii_exact,\n\
q,q_threshold,omega_class,exact_d,reference,ratio")]
    Search(SearchArgs),
    /// Best relative-minima sum against (ln p)^(s-1) ln ln p across primes.
    #[command(after_help = "Columns: p,order,best_a,bykovskii,exact_d,reference,ratio,error")]
    Growth(GrowthArgs),
    /// Exact star discrepancy (unnormalized) with a witness box.
    #[command(after_help = "Columns: points,dim,denominator,d,d_float,mode,witness,witness_count\n\
Points files hold one point per line, coordinates as comma-separated rationals in [0,1).")]
    #[command(group(ArgGroup::new("input").required(true).args(["korobov", "points"])))]
    Disc {
        /// Korobov set for modulus N and comma-separated a.
        #[arg(long, num_args = 2, value_names = ["N", "A"])]
        korobov: Option<Vec<String>>,
        #[arg(long, value_name = "FILE")]
        points: Option<PathBuf>,
    },
    /// The congruence lattice a.m = 0 (mod N).
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Continued fractions of x/N.
    #[command(subcommand)]
    Cf(CfCommand),
    /// Exponential sums over a subgroup and solution counts in boxes.
    #[command(subcommand)]
    Sums(SumsCommand),
    /// Residue arithmetic helpers.
    #[command(subcommand)]
    Modp(ModpCommand),
}

/// Which subgroup of Z_p* to use; the whole group when neither flag is given.
#[derive(Args, Debug, Clone, Default)]
pub struct GroupArgs {
    /// Subgroup of this order, a divisor of p - 1.
    #[arg(long, conflicts_with = "delta")]
    pub order: Option<u64>,
    /// Smallest subgroup with at least p^delta elements.
    #[arg(long)]
    pub delta: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyArg {
    Exhaustive,
    /// Exhaustive over vectors with a_1 = 1.
    Orbits,
    Random,
}

#[derive(Args, Debug, Clone)]
pub struct SearchOptions {
    #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
    pub strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sample count for the random strategy.
    #[arg(short = 'n', long = "samples", default_value_t = 1000)]
    pub samples: u64,
    /// Also compute the exact discrepancy of the winner when within budget.
    #[arg(long = "exact-d")]
    pub exact_d: bool,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    pub p: u64,
    pub s: usize,
    #[command(flatten)]
    pub group: GroupArgs,
    #[command(flatten)]
    pub options: SearchOptions,
    /// Override the threshold Q used for the OMEGA/OMEGA1 label.
    #[arg(long = "q")]
    pub q: Option<f64>,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("prime_list").required(true).args(["primes", "from"])))]
pub struct GrowthArgs {
    pub s: usize,
    #[arg(long)]
    pub delta: String,
    /// Comma-separated primes.
    #[arg(long)]
    pub primes: Option<String>,
    /// Every prime in [FROM, TO].
    #[arg(long, requires = "to")]
    pub from: Option<u64>,
    #[arg(long)]
    pub to: Option<u64>,
    #[command(flatten)]
    pub options: SearchOptions,
    /// Run even when s is below max(3, s_min(delta)).
    #[arg(long)]
    pub allow_below_threshold: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum LatticeCommand {
    /// Smallest height of a nonzero lattice vector.
    #[command(after_help = "Columns: n,a,q,witness,degenerate")]
    Q { n: u64, a: String },
    /// Relative minima, one per row.
    #[command(after_help = "Columns: height,vector")]
    Minima { n: u64, a: String },
    /// N times the sum of 1/H over the relative minima.
    #[command(after_help = "Columns: n,a,minima,sum,sum_exact")]
    Bykovskii { n: u64, a: String },
    /// Whether m lies in the lattice.
    #[command(after_help = "Columns: n,a,m,contains")]
    Contains {
        n: u64,
        a: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum CfCommand {
    /// Partial quotients of x/N.
    #[command(after_help = "Columns: x,n,reduced_by,quotients,sum,length,proxy")]
    Expand { x: u64, n: u64 },
    /// The g coprime to N with the smallest partial-quotient sum.
    #[command(after_help = "Columns: n,g,sum")]
    Larcher { n: u64 },
    /// The best element of a subgroup, or of one of its cosets.
    #[command(after_help = "Columns: p,order,coset,element,sum,reference")]
    Subgroup {
        p: u64,
        #[command(flatten)]
        group: GroupArgs,
        /// Use the coset v*G.
        #[arg(long, value_name = "V")]
        coset: Option<u64>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendArg {
    Direct,
    Spectral,
}

#[derive(Subcommand, Debug, Clone)]
pub enum SumsCommand {
    /// S(t, G), the sum of e(t x / p) over x in G.
    #[command(after_help = "Columns: p,order,t,re,im,abs")]
    Char {
        p: u64,
        t: u64,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// The largest |S(t, G)| over t != 0.
    #[command(after_help = "Columns: p,order,s_max,argmax_t")]
    Max {
        p: u64,
        #[command(flatten)]
        group: GroupArgs,
        /// Scan one t per coset of G.
        #[arg(long)]
        cosets: bool,
    },
    /// Solutions of x_1 u_1 + ... + x_s u_s = 0 with u_i in G and 1 <= x_i <= P_i.
    #[command(after_help = "Columns: p,order,boxes,count,backend,rounding_error")]
    Count {
        p: u64,
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated box sides P_i.
        #[arg(long = "box", value_name = "P")]
        boxes: String,
        #[arg(long, value_enum, default_value_t = BackendArg::Direct)]
        backend: BackendArg,
    },
    /// The count times p over #G^s times the box volume.
    #[command(after_help = "Columns: p,order,boxes,ratio")]
    Ratio {
        p: u64,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "box", value_name = "P")]
        boxes: String,
    },
    /// Constant-free bound on the largest sum for the branch of #G.
    #[command(after_help = "Columns: p,order,m,branch,delta,exponent_on_order,exponent_on_p,bound,effective,s_max")]
    Konyagin {
        p: u64,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Admissibility and saving factor of the multi-set bound.
    #[command(after_help = "Columns: p,n,c,sizes,admissible,factor,n_in_range")]
    Garaev {
        p: u64,
        n: u32,
        c: f64,
        /// Comma-separated set sizes, n of them.
        #[arg(long)]
        sizes: String,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ModpCommand {
    #[command(after_help = "Columns: n,prime")]
    Prime { n: u64 },
    /// Smallest primitive root.
    #[command(after_help = "Columns: p,root")]
    Root { p: u64 },
    #[command(after_help = "Columns: p,order,generator,elements")]
    Subgroup {
        p: u64,
        #[command(flatten)]
        group: GroupArgs,
    },
    #[command(after_help = "Columns: p,order,v,elements")]
    Coset {
        p: u64,
        v: u64,
        #[command(flatten)]
        group: GroupArgs,
    },
    #[command(after_help = "Columns: n,phi")]
    Phi { n: u64 },
    #[command(after_help = "Columns: n,divisors")]
    Divisors { n: u64 },
}
