use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "stein", version, about = "Legendrian fronts, surgery calculus and Stein-realizability deciders")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Classical invariants of every component of a front.
    Stats { file: PathBuf },
    /// Validate a FRONT or SURGERY file.
    Lint { file: PathBuf },
    /// Check that every framing of a front is tb - 1.
    CheckStein { file: PathBuf },
    /// Replace the 1-handles of a front by 0-framed unknots.
    Surger { file: PathBuf },
    /// First homology of the surgered manifold.
    H1 { file: PathBuf },
    /// Turn rational coefficients into integer chains.
    Expand { file: PathBuf },
    /// Rolfsen twist `m` times along the unknot `component`.
    #[command(allow_negative_numbers = true)]
    Twist { component: usize, m: i64, file: PathBuf },
    /// Slam-dunk the meridian `j` into `i`, or with `--inverse c` add a
    /// meridian of `i` with coefficient `c`.
    Dunk {
        i: usize,
        /// `j`, then the file; just the file with `--inverse`.
        #[arg(num_args = 1..=2, required = true)]
        rest: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        inverse: Option<String>,
    },
    /// Blow down a `±1`-framed unknot.
    Blowdown { component: usize, file: PathBuf },
    /// Realize rational coefficients below tb by Legendrian chains.
    Plan { file: PathBuf },
    /// Γ for every spin structure.
    Gamma { file: PathBuf },
    /// θ and Θ at the canonical framing.
    Theta { file: PathBuf },
    /// Decide a Seifert fibered space.
    Seifert(SeifertArgs),
    /// Decide a Brieskorn sphere.
    Brieskorn {
        #[arg(num_args = 3, required = true)]
        p: Vec<i64>,
        #[arg(long, value_enum, default_value = "+")]
        orientation: Sign,
        #[arg(long, default_value_t = stein_core::families::DEFAULT_SEARCH_BOUND)]
        search_bound: u32,
    },
    /// Decide a surgery on the Borromean rings or a derived link.
    #[command(allow_negative_numbers = true)]
    Borromean(BorromeanArgs),
    /// Apply front move `n` (1 to 6).
    Move {
        n: u8,
        /// Column, gap or handle, depending on the move.
        #[arg(long)]
        at: Option<usize>,
        /// Strand height for move 1.
        #[arg(long)]
        height: Option<usize>,
        /// Move 1: grow the kink below the strand.
        #[arg(long)]
        lower: bool,
        /// Move 2: push the cusp past the strand below.
        #[arg(long)]
        below: bool,
        /// Moves 1 and 2: undo the pattern at `--at`.
        #[arg(long)]
        undo: bool,
        /// Moves 4 and 5: carry the first event to the back.
        #[arg(long)]
        back: bool,
        /// Move 6: swing the bottom strand.
        #[arg(long)]
        bottom: bool,
        file: PathBuf,
    },
    /// Add a zig-zag to a component in gap `--at`.
    Stabilize {
        component: usize,
        direction: UpDown,
        #[arg(long)]
        at: usize,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UpDown {
    Up,
    Down,
}

#[derive(Debug, Args)]
pub struct SeifertArgs {
    /// `o<g>` or `n<g>`.
    #[arg(long, default_value = "o0")]
    pub base: String,
    /// Repeatable coefficient `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub coeff: Vec<String>,
    #[arg(long, num_args = 3, conflicts_with = "coeff")]
    pub brieskorn: Option<Vec<i64>>,
    #[arg(long, value_enum, default_value = "+")]
    pub orientation: Sign,
    #[arg(long, default_value_t = stein_core::families::DEFAULT_SEARCH_BOUND)]
    pub search_bound: u32,
}

#[derive(Debug, Args)]
pub struct BorromeanArgs {
    /// `r1 r2 r3`; put `--` first when they are negative.
    #[arg(num_args = 0..=3)]
    pub coefficients: Vec<String>,
    #[arg(long, num_args = 3, allow_hyphen_values = true)]
    pub borromean: Option<Vec<String>>,
    #[arg(long, num_args = 3, allow_hyphen_values = true, value_names = ["L", "M", "R"])]
    pub twist_knot: Option<Vec<String>>,
    #[arg(long, num_args = 3, allow_hyphen_values = true, value_names = ["M", "R1", "R2"])]
    pub two_component: Option<Vec<String>>,
}
