//! Variation lower bounds: the total image length of all rank-k cylinders.
//!
//! The function's oscillation on a cylinder equals the length of its image
//! cylinder, so the sum of image lengths over every rank-k base bounds the
//! total variation from below. The sum admits two routes: exhaustive
//! enumeration of all s^k bases, and a dynamic program over transducer
//! states (last input digit, current output bit) costing O(k·s²). Driving
//! the sum past 2^n for growing n certifies unbounded variation.

use num::{BigRational, One, Zero};

use crate::codes::{Digit, Prefix};
use crate::error::{Error, Result};

use super::{guarded_pow, TribinConfig};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
use super::PARALLEL_THRESHOLD;

/// Which route computed a variation report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariationMethod {
    Brute,
    Dp,
}

/// Exact rank sums `rank_sums[k−1] = Σ image lengths at rank k`, the route
/// that produced them, and the ranks certifying doubling growth: entry n
/// (1-indexed) is a rank r with `rank_sums[r−1] ≥ 2^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct VariationReport {
    pub rank_sums: Vec<BigRational>,
    pub method: VariationMethod,
    pub growth_schedule: Vec<u32>,
}

/// Running sums over transducer states: `mass[digit][bit]` accumulates the
/// image lengths of all enumerated bases ending in `digit` with current
/// output bit `bit`.
struct ImageLengthSums<'a> {
    config: &'a TribinConfig,
    mass: Vec<BigRational>,
}

impl<'a> ImageLengthSums<'a> {
    fn empty(config: &'a TribinConfig) -> Self {
        let states = config.alphabet().size() as usize * 2;
        Self {
            config,
            mass: vec![BigRational::zero(); states],
        }
    }

    fn index(digit: Digit, bit: Digit) -> usize {
        digit as usize * 2 + bit as usize
    }

    /// All rank-1 bases: digit a contributes the weight of its class bit.
    fn over_first_digits(config: &'a TribinConfig) -> Self {
        let mut sums = Self::empty(config);
        for digit in config.alphabet().digits() {
            let bit = config.partition().class_of(digit);
            let weight = config.value_system().weight(bit).clone();
            sums.mass[Self::index(digit, bit)] += weight;
        }
        sums
    }

    /// A single base: its end state carries the image length of the base.
    fn over_base(config: &'a TribinConfig, base: &Prefix) -> Result<Self> {
        let image = config.beta_prefix(base)?;
        let length = config.value_system().cylinder_length(&image)?;
        let digit = *base.digits().last().expect("base checked nonempty");
        let bit = *image.digits().last().expect("image is nonempty");
        let mut sums = Self::empty(config);
        sums.mass[Self::index(digit, bit)] = length;
        Ok(sums)
    }

    /// Extends every tracked base by one digit.
    fn advance(&mut self) {
        let config = self.config;
        let mut next = vec![BigRational::zero(); self.mass.len()];
        for digit in config.alphabet().digits() {
            for bit in 0..2 {
                let mass = &self.mass[Self::index(digit, bit)];
                if mass.is_zero() {
                    continue;
                }
                for successor in config.alphabet().digits() {
                    let next_bit = config.rule().step(bit, digit, successor);
                    next[Self::index(successor, next_bit)] +=
                        mass * config.value_system().weight(next_bit);
                }
            }
        }
        self.mass = next;
    }

    fn total(&self) -> BigRational {
        self.mass.iter().sum()
    }
}

impl TribinConfig {
    /// The rank-k image-length sum by exhaustive enumeration of all s^k
    /// bases. Refuses enumerations beyond the guard.
    pub fn variation_lower_bound_brute(&self, rank: u32) -> Result<BigRational> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        let count = guarded_pow(self.alphabet().size(), rank)?;

        #[cfg(feature = "parallel")]
        if count > PARALLEL_THRESHOLD {
            return Ok((0..count)
                .into_par_iter()
                .map(|index| self.image_length_of_base(index, rank))
                .reduce(BigRational::zero, |a, b| a + b));
        }

        Ok((0..count)
            .map(|index| self.image_length_of_base(index, rank))
            .sum())
    }

    /// Image length of the rank-`rank` base encoded by `index` in base s,
    /// most significant digit first (so index order is lexicographic base
    /// order).
    fn image_length_of_base(&self, index: u64, rank: u32) -> BigRational {
        let s = self.alphabet().size() as u64;
        let mut digits = vec![0 as Digit; rank as usize];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % s) as Digit;
            rest /= s;
        }
        let mut length = BigRational::one();
        let mut bit = self.partition().class_of(digits[0]);
        length *= self.value_system().weight(bit);
        for pair in digits.windows(2) {
            bit = self.rule().step(bit, pair[0], pair[1]);
            length *= self.value_system().weight(bit);
        }
        length
    }

    /// The rank-k image-length sum by dynamic programming over transducer
    /// states; exactly equal to the brute-force route at O(k·s²) cost.
    pub fn variation_lower_bound_dp(&self, rank: u32) -> Result<BigRational> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        let mut sums = ImageLengthSums::over_first_digits(self);
        for _ in 1..rank {
            sums.advance();
        }
        Ok(sums.total())
    }

    /// The smallest extension depth k ≤ max_depth at which the image lengths
    /// of all rank-(m+k) refinements of `base` add up to at least twice the
    /// image length of `base` itself. Such a depth always exists; the bound
    /// only caps the search.
    pub fn refinement_rank(&self, base: &Prefix, max_depth: u32) -> Result<u32> {
        let mut sums = ImageLengthSums::over_base(self, base)?;
        let target = sums.total() * BigRational::from_integer(2.into());
        for depth in 1..=max_depth {
            sums.advance();
            if sums.total() >= target {
                return Ok(depth);
            }
        }
        Err(Error::NotFound {
            what: "an image-length sum at least twice the base cylinder's".into(),
            bound: max_depth,
        })
    }

    /// Ranks r_1 < … < r_n ≤ max_rank whose image-length sums clear the
    /// thresholds 2, 4, …, 2^n, certifying unbounded variation up to desk
    /// scale. Sums are computed by the dynamic program, one rank at a time.
    pub fn variation_growth_schedule(
        &self,
        n_target: u32,
        max_rank: u32,
    ) -> Result<VariationReport> {
        if n_target == 0 {
            return Err(Error::InvalidArgument(
                "the growth target must be at least 1".into(),
            ));
        }
        let mut sums = ImageLengthSums::over_first_digits(self);
        let mut rank_sums = Vec::new();
        let mut schedule = Vec::new();
        let mut threshold = BigRational::from_integer(2.into());
        for rank in 1..=max_rank {
            if rank > 1 {
                sums.advance();
            }
            let total = sums.total();
            let cleared = total >= threshold;
            rank_sums.push(total);
            if cleared {
                schedule.push(rank);
                if schedule.len() as u32 == n_target {
                    return Ok(VariationReport {
                        rank_sums,
                        method: VariationMethod::Dp,
                        growth_schedule: schedule,
                    });
                }
                threshold *= BigRational::from_integer(2.into());
            }
        }
        Err(Error::NotFound {
            what: format!("a doubling growth schedule of length {n_target}"),
            bound: max_rank,
        })
    }
}
