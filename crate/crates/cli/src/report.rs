//! Structured output: one JSON document per invocation, with every exact
//! value rendered as `p/q` in lowest terms and decimals explicitly marked as
//! approximations.

use num::{BigInt, BigRational, Integer};
use serde::{Deserialize, Serialize};

use tribin_core::TribinConfig;

/// The single document emitted by `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub config: ConfigReport,
    pub command: String,
    pub result: CommandResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigReport {
    pub s: u32,
    pub a0: Vec<u32>,
    pub a1: Vec<u32>,
    pub arg_weights: Vec<String>,
    pub val_weights: Vec<String>,
    pub rule: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommandResult {
    Eval {
        code: String,
        value: String,
        decimal: String,
    },
    Image {
        base: String,
        image_base: String,
        min: String,
        max: String,
    },
    LevelSetCylinders {
        beta: String,
        count: u64,
        cylinders: Vec<String>,
    },
    LevelSetClassification {
        code: String,
        classification: String,
        members: Option<Vec<String>>,
        rank: Option<u32>,
        rank_cylinders: Option<Vec<String>>,
    },
    Witness {
        base: String,
        codes: Vec<String>,
        points: Vec<String>,
        values: Vec<String>,
        shape: String,
    },
    Variation {
        method: String,
        rows: Vec<VariationRow>,
    },
    Growth {
        target: u32,
        rows: Vec<GrowthRow>,
    },
    Check {
        well_defined: bool,
        points_checked: Option<u64>,
        witness: Option<CheckWitness>,
    },
    Plot {
        rows: u64,
        path: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariationRow {
    pub rank: u32,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub index: u32,
    pub rank: u32,
    pub value: String,
    pub threshold: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckWitness {
    pub codes: [String; 2],
    pub values: [String; 2],
}

pub fn config_report(config: &TribinConfig, rule_flag: u8) -> ConfigReport {
    ConfigReport {
        s: config.alphabet().size(),
        a0: config.partition().class_zero(),
        a1: config.partition().class_one(),
        arg_weights: config.argument_system().weights().iter().map(exact).collect(),
        val_weights: config.value_system().weights().iter().map(exact).collect(),
        rule: rule_flag,
    }
}

/// `p/q` in lowest terms, always with an explicit denominator.
pub fn exact(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Decimal expansion rounded half-up to `places` fractional digits. Only an
/// approximation; the exact value is the `p/q` form.
pub fn decimal(value: &BigRational, places: usize) -> String {
    let ten_power = BigInt::from(10).pow(places as u32);
    let scaled = value * BigRational::from_integer(ten_power.clone());
    let rounded = (scaled + BigRational::new(1.into(), 2.into()))
        .floor()
        .to_integer();
    let (int_part, frac_part) = rounded.div_mod_floor(&ten_power);
    format!("{int_part}.{frac_part:0places$}")
}
