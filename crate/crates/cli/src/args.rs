//! clap surface, kept separate so the library API stays flag-free.

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use realization::Mode;

use crate::{Command, Format, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "rootcurves", about = "Roots, c-vectors, and curve witnesses for acyclic quivers")]
pub struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// Ordering discipline for witnesses: nd (non-decreasing) or strict.
    #[arg(long, global = true, default_value = "nd")]
    mode: String,

    /// Crossing budget for the search fallback.
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Worker threads; defaults to all cores. Output is identical either way.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Random seed, recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Directory for output files; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Rendering format for diagrams.
    #[arg(long, global = true, default_value = "ascii")]
    format: String,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// List the positive roots of a finite-type quiver.
    Roots { quiver: PathBuf },
    /// Print c-vectors after a mutation sequence, or the full closure.
    Cvectors {
        quiver: PathBuf,
        /// Comma-separated vertices to mutate at, in order.
        #[arg(long, value_delimiter = ',')]
        seq: Option<Vec<usize>>,
        /// Collect every c-vector over the whole mutation closure instead.
        #[arg(long)]
        enumerate: bool,
    },
    /// Construct a curve witness for one root.
    Find {
        quiver: PathBuf,
        /// Comma-separated root coefficients.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        root: Vec<i64>,
        /// Fix the vertex ordering (comma-separated image list).
        #[arg(long, value_delimiter = ',')]
        pi: Option<Vec<usize>>,
    },
    /// Realize every positive root and write a report.
    Verify {
        quiver: Option<PathBuf>,
        /// Check the one-source one-sink cycle family with K and L interior
        /// points instead of a quiver file.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        affine: Option<Vec<usize>>,
        /// Level bound for the affine family.
        #[arg(long, default_value_t = 3)]
        gmax: usize,
    },
    /// Render a diagram file.
    Render {
        diagram: PathBuf,
        /// Number of marked points.
        #[arg(long)]
        n: usize,
    },
    /// Re-verify the bundled curve tables.
    Fixtures {
        #[arg(value_parser = ["audit"])]
        action: String,
    },
}

pub fn parse(cli: Cli) -> Result<RunConfig> {
    let mode = match cli.mode.as_str() {
        "nd" => Mode::NonDecreasing,
        "strict" => Mode::StrictlyIncreasing,
        other => bail!("unknown mode `{other}` (expected nd or strict)"),
    };
    let format = match cli.format.as_str() {
        "ascii" => Format::Ascii,
        "svg" => Format::Svg,
        other => bail!("unknown format `{other}` (expected ascii or svg)"),
    };
    let command = match cli.command {
        Sub::Roots { quiver } => Command::Roots { quiver },
        Sub::Cvectors { quiver, seq, enumerate } => {
            Command::CVectors { quiver, seq, enumerate }
        }
        Sub::Find { quiver, root, pi } => Command::Find { quiver, root, pi },
        Sub::Verify { quiver, affine, gmax } => {
            let affine = match affine {
                None => None,
                Some(v) if v.len() == 2 => Some((v[0], v[1])),
                Some(_) => bail!("--affine takes exactly K,L"),
            };
            Command::Verify { quiver, affine, g_max: gmax }
        }
        Sub::Render { diagram, n } => Command::Render { diagram, n },
        Sub::Fixtures { .. } => Command::FixturesAudit,
    };
    Ok(RunConfig {
        command,
        mode,
        budget: cli.budget,
        jobs: cli.jobs,
        seed: cli.seed,
        out: cli.out,
        format,
    })
}
