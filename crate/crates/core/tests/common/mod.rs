//! Shared fixtures for the integration suites.

use num::BigRational;

use tribin_core::{
    Digit, DigitCode, Partition, Prefix, RepresentationSystem, TransducerRule, TribinConfig,
};

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn weights(values: &[(i64, i64)]) -> RepresentationSystem {
    RepresentationSystem::new(values.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
}

/// Three weight configurations per alphabet size: uniform, one mildly skewed,
/// one strongly skewed.
pub fn weight_variants(s: u32) -> Vec<RepresentationSystem> {
    let skewed = match s {
        2 => weights(&[(1, 3), (2, 3)]),
        3 => weights(&[(1, 2), (1, 4), (1, 4)]),
        4 => weights(&[(2, 5), (1, 5), (1, 5), (1, 5)]),
        _ => panic!("no skewed variant for s = {s}"),
    };
    let steep = match s {
        2 => weights(&[(3, 5), (2, 5)]),
        3 => weights(&[(1, 5), (3, 10), (1, 2)]),
        4 => weights(&[(1, 10), (1, 5), (3, 10), (2, 5)]),
        _ => panic!("no steep variant for s = {s}"),
    };
    vec![RepresentationSystem::uniform(s).unwrap(), skewed, steep]
}

/// Every admissible two-class partition of an s-symbol alphabet: all
/// 2^s − 2 nonempty proper choices of the zero class.
pub fn all_partitions(s: u32) -> Vec<Partition> {
    let alphabet = tribin_core::Alphabet::new(s).unwrap();
    (1u32..(1 << s) - 1)
        .map(|mask| {
            let class_zero: Vec<Digit> = (0..s).filter(|d| mask & (1 << d) != 0).collect();
            Partition::new(alphabet, &class_zero).unwrap()
        })
        .collect()
}

pub fn config(
    argument: RepresentationSystem,
    value: RepresentationSystem,
    class_zero: &[Digit],
    rule: TransducerRule,
) -> TribinConfig {
    let partition = Partition::new(argument.alphabet(), class_zero).unwrap();
    TribinConfig::new(argument, value, partition, rule).unwrap()
}

/// s = 3, uniform weights both sides, A_0 = {0, 1}, standard rule.
pub fn cfg0() -> TribinConfig {
    config(
        RepresentationSystem::uniform(3).unwrap(),
        RepresentationSystem::uniform(2).unwrap(),
        &[0, 1],
        TransducerRule::Standard,
    )
}

pub fn prefix(cfg: &TribinConfig, digits: &[Digit]) -> Prefix {
    Prefix::new(cfg.alphabet(), digits.to_vec()).unwrap()
}

pub fn code(cfg: &TribinConfig, pre: &[Digit], per: &[Digit]) -> DigitCode {
    DigitCode::new(cfg.alphabet(), pre.to_vec(), per.to_vec()).unwrap()
}

pub fn binary_code(pre: &[Digit], per: &[Digit]) -> DigitCode {
    DigitCode::new(tribin_core::Alphabet::binary(), pre.to_vec(), per.to_vec()).unwrap()
}
