//! Command-line front end: builds a function configuration from global
//! flags, runs one operation, and prints either human-readable text or a
//! single JSON document.
//!
//! Exit status: 0 on success, 1 when a check reports a finding (a
//! disagreeing boundary point, or a route mismatch under `--method both`),
//! 2 on usage and domain errors.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;

use tribin_core::{
    oracle, DigitCode, LevelSetKind, Partition, RepresentationSystem, TransducerRule,
    TribinConfig, WellDefinedness,
};

use parse::{format_code, format_prefix, parse_code, parse_digits, parse_prefix};
use report::{config_report, decimal, exact, CommandResult, Document};

const EVAL_DECIMAL_PLACES: usize = 12;
const PLOT_DECIMAL_PLACES: usize = 15;

#[derive(Debug, Parser)]
#[command(
    name = "tribin",
    version,
    about = "Exact computations with weighted s-symbol numeral systems and the Tribin-class nowhere-monotonic functions"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// Alphabet size of the argument system (at least 3)
    #[arg(long = "s", global = true, default_value_t = 3)]
    pub s: u32,

    /// Comma-separated digits forming the class A_0
    #[arg(long = "a0", global = true, default_value = "0,1")]
    pub a0: String,

    /// Argument-system weights: "uniform" or comma-separated rationals summing to 1
    #[arg(long = "arg-weights", global = true, default_value = "uniform")]
    pub arg_weights: String,

    /// Value-system weights: "uniform" or two comma-separated rationals summing to 1
    #[arg(long = "val-weights", global = true, default_value = "uniform")]
    pub val_weights: String,

    /// Transducer rule: 3 flips the output bit on digit change, 7 on digit repeat
    #[arg(long = "rule", global = true, default_value_t = 3)]
    pub rule: u8,

    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the function at an eventually periodic argument code
    Eval {
        /// Argument code, e.g. "1,2:(0)" or "(1)"
        #[arg(long)]
        code: String,
    },
    /// The image cylinder of the cylinder over a base prefix
    Image {
        /// Argument base prefix, e.g. "1,2"
        #[arg(long)]
        base: String,
    },
    /// Preimages: cylinders matching a value prefix, or the classification of
    /// a value code's level set
    #[command(group = clap::ArgGroup::new("target").required(true))]
    Levelset {
        /// Value prefix over {0,1}, e.g. "0,1"
        #[arg(long, group = "target")]
        beta: Option<String>,
        /// Value code over {0,1}, e.g. "(0,1)"
        #[arg(long = "beta-code", group = "target")]
        beta_code: Option<String>,
        /// Also list the rank-n argument cylinders meeting the level set
        #[arg(long, requires = "beta_code")]
        rank: Option<u32>,
    },
    /// A strict valley or peak of the function inside a cylinder
    Witness {
        /// Argument base prefix
        #[arg(long)]
        base: String,
    },
    /// Image-length sums over all cylinders of each rank up to a bound
    Variation {
        #[arg(long = "max-rank")]
        max_rank: u32,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Ranks whose image-length sums clear the doubling thresholds 2, 4, …, 2^n
    Growth {
        /// Number of thresholds to clear
        #[arg(long)]
        n: u32,
        #[arg(long = "max-rank")]
        max_rank: u32,
    },
    /// Evaluate both codes of every boundary point up to a rank
    Check {
        #[arg(long = "max-rank")]
        max_rank: u32,
    },
    /// CSV of (x, f(x)) at all rank-n cylinder endpoints
    Plot {
        #[arg(long)]
        rank: u32,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dp,
    Brute,
    Both,
}

/// Parses the argument vector, runs the command, and returns the exit
/// status, writing all output to the given streams.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(parse_error) => {
            let stream: &mut dyn Write = if parse_error.use_stderr() { err } else { out };
            let _ = write!(stream, "{parse_error}");
            return parse_error.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(status) => status,
        Err(domain_error) => {
            let _ = writeln!(err, "error: {domain_error:#}");
            2
        }
    }
}

fn build_config(args: &ConfigArgs) -> Result<TribinConfig> {
    let argument = parse_weights(&args.arg_weights, args.s)
        .context("invalid --arg-weights")?;
    let value = parse_weights(&args.val_weights, 2).context("invalid --val-weights")?;
    let class_zero = parse_digits(&args.a0).context("invalid --a0")?;
    let partition = Partition::new(argument.alphabet(), &class_zero)?;
    let rule = match args.rule {
        3 => TransducerRule::Standard,
        7 => TransducerRule::Flipped,
        other => bail!("--rule must be 3 or 7, got {other}"),
    };
    Ok(TribinConfig::new(argument, value, partition, rule)?)
}

fn parse_weights(text: &str, size: u32) -> Result<RepresentationSystem> {
    if text.trim() == "uniform" {
        return Ok(RepresentationSystem::uniform(size)?);
    }
    let weights: Vec<BigRational> = text
        .split(',')
        .map(|token| {
            token
                .trim()
                .parse::<BigRational>()
                .with_context(|| format!("malformed rational {token:?}"))
        })
        .collect::<Result<_>>()?;
    if weights.len() != size as usize {
        bail!("expected {size} weights, got {}", weights.len());
    }
    Ok(RepresentationSystem::new(weights)?)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let config = build_config(&cli.config)?;
    let (result, status, command_name) = match &cli.command {
        Command::Eval { code } => (cmd_eval(&config, code)?, 0, "eval"),
        Command::Image { base } => (cmd_image(&config, base)?, 0, "image"),
        Command::Levelset {
            beta,
            beta_code,
            rank,
        } => (
            cmd_levelset(&config, beta.as_deref(), beta_code.as_deref(), *rank)?,
            0,
            "levelset",
        ),
        Command::Witness { base } => (cmd_witness(&config, base)?, 0, "witness"),
        Command::Variation { max_rank, method } => {
            let (result, status) = cmd_variation(&config, *max_rank, *method)?;
            (result, status, "variation")
        }
        Command::Growth { n, max_rank } => (cmd_growth(&config, *n, *max_rank)?, 0, "growth"),
        Command::Check { max_rank } => {
            let (result, status) = cmd_check(&config, *max_rank)?;
            (result, status, "check")
        }
        Command::Plot { rank, out: path } => (cmd_plot(&config, *rank, path)?, 0, "plot"),
    };

    if cli.config.json {
        let document = Document {
            config: config_report(&config, cli.config.rule),
            command: command_name.to_string(),
            result,
        };
        serde_json::to_writer_pretty(&mut *out, &document)?;
        writeln!(out)?;
    } else {
        write_text(&result, out)?;
    }
    Ok(status)
}

fn cmd_eval(config: &TribinConfig, code_text: &str) -> Result<CommandResult> {
    let code = parse_code(code_text, config.alphabet())?;
    let value = config.eval(&code)?;
    Ok(CommandResult::Eval {
        code: format_code(&code),
        value: exact(&value),
        decimal: decimal(&value, EVAL_DECIMAL_PLACES),
    })
}

fn cmd_image(config: &TribinConfig, base_text: &str) -> Result<CommandResult> {
    let base = parse_prefix(base_text, config.alphabet())?;
    let image = config.cylinder_image(&base)?;
    let (min, max) = config.value_system().cylinder_bounds(&image)?;
    Ok(CommandResult::Image {
        base: format_prefix(&base),
        image_base: format_prefix(&image),
        min: exact(&min),
        max: exact(&max),
    })
}

fn cmd_levelset(
    config: &TribinConfig,
    beta: Option<&str>,
    beta_code: Option<&str>,
    rank: Option<u32>,
) -> Result<CommandResult> {
    if let Some(beta_text) = beta {
        let beta = parse_prefix(beta_text, config.value_system().alphabet())?;
        let cylinders = config.level_set_cylinders(&beta)?;
        return Ok(CommandResult::LevelSetCylinders {
            beta: format_prefix(&beta),
            count: cylinders.len() as u64,
            cylinders: cylinders.iter().map(format_prefix).collect(),
        });
    }
    let code_text = beta_code.expect("clap guarantees one of --beta / --beta-code");
    let code = parse_code(code_text, config.value_system().alphabet())?;
    let report = config.classify_level_set(&code, rank.map(|r| r as usize))?;
    let (classification, members) = match &report.classification {
        LevelSetKind::Finite(codes) => (
            "finite".to_string(),
            Some(codes.iter().map(format_code).collect()),
        ),
        LevelSetKind::Continuum => ("continuum".to_string(), None),
    };
    Ok(CommandResult::LevelSetClassification {
        code: format_code(&code),
        classification,
        members,
        rank,
        rank_cylinders: report
            .rank_cylinders
            .map(|bases| bases.iter().map(format_prefix).collect()),
    })
}

fn cmd_witness(config: &TribinConfig, base_text: &str) -> Result<CommandResult> {
    let base = parse_prefix(base_text, config.alphabet())?;
    let witness = config.monotonicity_witness(&base)?;
    let shape = if witness.is_valley() { "valley" } else { "peak" };
    Ok(CommandResult::Witness {
        base: format_prefix(&base),
        codes: witness.codes.iter().map(format_code).collect(),
        points: witness.points.iter().map(exact).collect(),
        values: witness.values.iter().map(exact).collect(),
        shape: shape.to_string(),
    })
}

fn cmd_variation(
    config: &TribinConfig,
    max_rank: u32,
    method: Method,
) -> Result<(CommandResult, i32)> {
    // Fail fast if the largest requested enumeration is out of reach instead
    // of grinding through the smaller ranks first.
    if method != Method::Dp {
        let s = config.alphabet().size() as u64;
        if s.checked_pow(max_rank)
            .filter(|&count| count <= tribin_core::tribin::ENUMERATION_GUARD)
            .is_none()
        {
            bail!(
                "enumeration of {s}^{max_rank} bases exceeds the guard of {}",
                tribin_core::tribin::ENUMERATION_GUARD
            );
        }
    }
    let mut rows = Vec::with_capacity(max_rank as usize);
    let mut status = 0;
    for rank in 1..=max_rank {
        let value = match method {
            Method::Dp => config.variation_lower_bound_dp(rank)?,
            Method::Brute => config.variation_lower_bound_brute(rank)?,
            Method::Both => {
                let dp = config.variation_lower_bound_dp(rank)?;
                let brute = config.variation_lower_bound_brute(rank)?;
                if dp != brute {
                    status = 1;
                }
                dp
            }
        };
        rows.push(report::VariationRow {
            rank,
            value: exact(&value),
        });
    }
    let method_name = match method {
        Method::Dp => "dp",
        Method::Brute => "brute",
        Method::Both => "both",
    };
    Ok((
        CommandResult::Variation {
            method: method_name.to_string(),
            rows,
        },
        status,
    ))
}

fn cmd_growth(config: &TribinConfig, n: u32, max_rank: u32) -> Result<CommandResult> {
    let report = config.variation_growth_schedule(n, max_rank)?;
    let mut threshold = BigRational::from_integer(2.into());
    let mut rows = Vec::with_capacity(report.growth_schedule.len());
    for (index, &rank) in report.growth_schedule.iter().enumerate() {
        rows.push(report::GrowthRow {
            index: index as u32 + 1,
            rank,
            value: exact(&report.rank_sums[rank as usize - 1]),
            threshold: exact(&threshold),
        });
        threshold *= BigRational::from_integer(2.into());
    }
    Ok(CommandResult::Growth { target: n, rows })
}

fn cmd_check(config: &TribinConfig, max_rank: u32) -> Result<(CommandResult, i32)> {
    match config.check_well_defined(max_rank)? {
        WellDefinedness::WellDefined { points_checked } => Ok((
            CommandResult::Check {
                well_defined: true,
                points_checked: Some(points_checked),
                witness: None,
            },
            0,
        )),
        WellDefinedness::Mismatch(mismatch) => Ok((
            CommandResult::Check {
                well_defined: false,
                points_checked: None,
                witness: Some(report::CheckWitness {
                    codes: [
                        format_code(&mismatch.codes.0),
                        format_code(&mismatch.codes.1),
                    ],
                    values: [exact(&mismatch.values.0), exact(&mismatch.values.1)],
                }),
            },
            1,
        )),
    }
}

fn cmd_plot(config: &TribinConfig, rank: u32, path: &PathBuf) -> Result<CommandResult> {
    let max_digit = config.alphabet().max_digit();
    let file = File::create(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    let mut writer = BufWriter::new(file);
    writeln!(writer, "x,f")?;
    let mut rows = 0u64;
    for base in oracle::enumerate_prefixes(config.alphabet(), rank as usize)? {
        let cylinder = config.argument_system().cylinder(&base)?;
        let left_code = DigitCode::new(config.alphabet(), base.digits().to_vec(), vec![0])?;
        let right_code =
            DigitCode::new(config.alphabet(), base.digits().to_vec(), vec![max_digit])?;
        for (x, code) in [
            (cylinder.min().clone(), left_code),
            (cylinder.max(), right_code),
        ] {
            let value = config.eval(&code)?;
            writeln!(
                writer,
                "{},{}",
                decimal(&x, PLOT_DECIMAL_PLACES),
                decimal(&value, PLOT_DECIMAL_PLACES)
            )?;
            rows += 1;
        }
    }
    writer.flush()?;
    Ok(CommandResult::Plot {
        rows,
        path: path.display().to_string(),
    })
}

fn write_text(result: &CommandResult, out: &mut dyn Write) -> Result<()> {
    match result {
        CommandResult::Eval {
            code,
            value,
            decimal,
        } => {
            writeln!(out, "f({code}) = {value} \u{2248} {decimal}")?;
        }
        CommandResult::Image {
            base,
            image_base,
            min,
            max,
        } => {
            writeln!(
                out,
                "image of cylinder {base} is cylinder {image_base} = [{min}, {max}]"
            )?;
        }
        CommandResult::LevelSetCylinders {
            beta,
            count,
            cylinders,
        } => {
            writeln!(out, "preimage cylinders of {beta} (count {count}):")?;
            for cylinder in cylinders {
                writeln!(out, "  {cylinder}")?;
            }
        }
        CommandResult::LevelSetClassification {
            code,
            classification,
            members,
            rank,
            rank_cylinders,
        } => {
            match members {
                Some(members) => {
                    writeln!(
                        out,
                        "level set of {code}: {classification} with {} members:",
                        members.len()
                    )?;
                    for member in members {
                        writeln!(out, "  {member}")?;
                    }
                }
                None => writeln!(out, "level set of {code}: {classification}")?,
            }
            if let (Some(rank), Some(bases)) = (rank, rank_cylinders) {
                writeln!(out, "rank-{rank} cylinders meeting the level set:")?;
                for base in bases {
                    writeln!(out, "  {base}")?;
                }
            }
        }
        CommandResult::Witness {
            base,
            codes,
            points,
            values,
            shape,
        } => {
            writeln!(out, "non-monotonic triple inside cylinder {base} ({shape}):")?;
            for i in 0..3 {
                writeln!(
                    out,
                    "  x{i} = {}  x = {}  f = {}",
                    codes[i], points[i], values[i]
                )?;
            }
        }
        CommandResult::Variation { method, rows } => {
            writeln!(out, "rank  image-length-sum")?;
            for row in rows {
                writeln!(out, "{:>4}  {}", row.rank, row.value)?;
            }
            if method == "both" {
                writeln!(out, "dp and brute agree on all {} ranks", rows.len())?;
            }
        }
        CommandResult::Growth { target, rows } => {
            writeln!(out, "   n  rank  image-length-sum  threshold")?;
            for row in rows {
                writeln!(
                    out,
                    "{:>4}  {:>4}  {:<16}  {}",
                    row.index, row.rank, row.value, row.threshold
                )?;
            }
            writeln!(
                out,
                "image-length sums clear {target} doubling thresholds; the total variation is unbounded"
            )?;
        }
        CommandResult::Check {
            well_defined,
            points_checked,
            witness,
        } => {
            if *well_defined {
                writeln!(
                    out,
                    "well defined: all {} boundary points agree on both codes",
                    points_checked.unwrap_or(0)
                )?;
            } else if let Some(witness) = witness {
                writeln!(out, "not well defined: dual codes disagree")?;
                writeln!(out, "  f({}) = {}", witness.codes[0], witness.values[0])?;
                writeln!(out, "  f({}) = {}", witness.codes[1], witness.values[1])?;
            }
        }
        CommandResult::Plot { rows, path } => {
            writeln!(out, "wrote {rows} rows to {path}")?;
        }
    }
    Ok(())
}
