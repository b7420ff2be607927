//! Brute-force reference computations for cross-checking the main
//! operations.
//!
//! Everything here is written in the most literal way available (full
//! enumeration, its own digit fold, its own geometric-series arithmetic) and
//! shares only the domain types with the rest of the crate. Enumerations
//! beyond the guard are refused rather than sampled.

use num::{BigRational, One, Zero};

use crate::codes::{Alphabet, Digit, Prefix};
use crate::error::{Error, Result};
use crate::tribin::{TransducerRule, TribinConfig, ENUMERATION_GUARD};

/// All rank-n digit strings over the alphabet, in lexicographic order.
pub fn enumerate_prefixes(alphabet: Alphabet, rank: usize) -> Result<Vec<Prefix>> {
    let s = alphabet.size() as u64;
    let count = s
        .checked_pow(rank as u32)
        .filter(|&c| c <= ENUMERATION_GUARD)
        .ok_or(Error::EnumerationGuard {
            count: u64::MAX,
            guard: ENUMERATION_GUARD,
        })?;
    let mut out = Vec::with_capacity(count as usize);
    let mut digits = vec![0 as Digit; rank];
    loop {
        out.push(Prefix::new(alphabet, digits.clone())?);
        // Odometer increment; stops after the all-(s−1) string.
        let mut position = rank;
        loop {
            if position == 0 {
                return Ok(out);
            }
            position -= 1;
            if digits[position] + 1 < alphabet.size() {
                digits[position] += 1;
                break;
            }
            digits[position] = 0;
        }
    }
}

/// Output bits for a digit block, folded step by step from the definition.
fn output_bits(config: &TribinConfig, alpha: &[Digit]) -> Vec<Digit> {
    let mut bits = Vec::with_capacity(alpha.len());
    let mut bit = config.partition().class_of(alpha[0]);
    bits.push(bit);
    for i in 1..alpha.len() {
        let changed = alpha[i] != alpha[i - 1];
        let flip = match config.rule() {
            TransducerRule::Standard => changed,
            TransducerRule::Flipped => !changed,
        };
        if flip {
            bit = 1 - bit;
        }
        bits.push(bit);
    }
    bits
}

/// Accumulated value of the output bits seen so far: the point so far lies
/// in `[offset, offset + scale]`, and the pair `(digit, bit)` is the
/// transducer state.
#[derive(Clone)]
struct FoldState {
    last: Option<(Digit, Digit)>,
    offset: BigRational,
    scale: BigRational,
}

impl FoldState {
    fn start() -> Self {
        Self {
            last: None,
            offset: BigRational::zero(),
            scale: BigRational::one(),
        }
    }

    /// Consumes one input digit, producing one output bit.
    fn consume(&self, config: &TribinConfig, digit: Digit) -> Self {
        let bit = match self.last {
            None => config.partition().class_of(digit),
            Some((previous_digit, previous_bit)) => {
                let changed = digit != previous_digit;
                let flip = match config.rule() {
                    TransducerRule::Standard => changed,
                    TransducerRule::Flipped => !changed,
                };
                if flip {
                    1 - previous_bit
                } else {
                    previous_bit
                }
            }
        };
        Self {
            last: Some((digit, bit)),
            offset: &self.offset + config.value_system().cumulative_weight(bit) * &self.scale,
            scale: &self.scale * config.value_system().weight(bit),
        }
    }

    /// The exact value at the point whose remaining digits are `(tail)^ω`:
    /// one more output bit for entering the tail, then a constant (or, under
    /// the flipped rule, alternating) geometric remainder.
    fn close_with_constant_tail(&self, config: &TribinConfig, tail: Digit) -> BigRational {
        let entered = self.consume(config, tail);
        let last_bit = entered.last.expect("tail digit was consumed").1;
        let weight = |bit: Digit| config.value_system().weight(bit);
        let start = |bit: Digit| config.value_system().cumulative_weight(bit);
        let remainder = match config.rule() {
            // The input digit repeats forever, so the output bit holds.
            TransducerRule::Standard => {
                if last_bit == 0 {
                    BigRational::zero()
                } else {
                    BigRational::one()
                }
            }
            // The output bit flips forever, alternating from 1 − last_bit.
            TransducerRule::Flipped => {
                let first = 1 - last_bit;
                let second = last_bit;
                (start(first) + weight(first) * start(second))
                    / (BigRational::one() - weight(first) * weight(second))
            }
        };
        entered.offset + entered.scale * remainder
    }
}

/// Exact min and max of the function over the cylinder of `base`, probed at
/// every depth-`depth` refinement closed off with every constant tail.
///
/// Probing all s constant tails (not only 0 and s−1) matters: an extremum can
/// be attained only at a point whose code ends in a constant interior digit,
/// e.g. the zero of the standard-rule function inside a cylinder whose image
/// bit pattern ends in 0.
pub fn brute_image_bounds(
    config: &TribinConfig,
    base: &Prefix,
    depth: usize,
) -> Result<(BigRational, BigRational)> {
    // Guard the leaf count up front.
    let _ = (config.alphabet().size() as u64)
        .checked_pow(depth as u32)
        .filter(|&c| c <= ENUMERATION_GUARD)
        .ok_or(Error::EnumerationGuard {
            count: u64::MAX,
            guard: ENUMERATION_GUARD,
        })?;

    let mut state = FoldState::start();
    for &digit in base.digits() {
        state = state.consume(config, digit);
    }

    let mut min: Option<BigRational> = None;
    let mut max: Option<BigRational> = None;
    probe_extensions(config, &state, depth, &mut |value| {
        if min.as_ref().is_none_or(|m| value < m) {
            min = Some(value.clone());
        }
        if max.as_ref().is_none_or(|m| value > m) {
            max = Some(value.clone());
        }
    });
    Ok((
        min.expect("enumeration is nonempty"),
        max.expect("enumeration is nonempty"),
    ))
}

/// Walks every extension of the current state to the given depth, reporting
/// the probe value of each constant-tail closure.
fn probe_extensions(
    config: &TribinConfig,
    state: &FoldState,
    depth: usize,
    report: &mut impl FnMut(&BigRational),
) {
    if depth == 0 {
        for tail in config.alphabet().digits() {
            report(&state.close_with_constant_tail(config, tail));
        }
        return;
    }
    for digit in config.alphabet().digits() {
        probe_extensions(config, &state.consume(config, digit), depth - 1, report);
    }
}

/// All rank-`rank` bases whose output prefix equals `beta`, by filtering the
/// full enumeration.
pub fn brute_level_set(config: &TribinConfig, beta: &Prefix, rank: usize) -> Result<Vec<Prefix>> {
    if rank != beta.rank() {
        return Err(Error::InvalidArgument(format!(
            "rank {rank} does not match the target prefix of rank {}",
            beta.rank()
        )));
    }
    Ok(enumerate_prefixes(config.alphabet(), rank)?
        .into_iter()
        .filter(|candidate| output_bits(config, candidate.digits()) == beta.digits())
        .collect())
}

/// The rank-k image-length sum by direct enumeration: for every base, the
/// product of the value weights of its output bits.
pub fn brute_variation(config: &TribinConfig, rank: u32) -> Result<BigRational> {
    if rank == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let mut total = BigRational::zero();
    for base in enumerate_prefixes(config.alphabet(), rank as usize)? {
        let mut product = BigRational::one();
        for bit in output_bits(config, base.digits()) {
            product *= config.value_system().weight(bit);
        }
        total += product;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tribin::test_config::*;

    #[test]
    fn prefix_enumeration_is_lexicographic() {
        let alphabet = Alphabet::new(3).unwrap();
        let rank1 = enumerate_prefixes(alphabet, 1).unwrap();
        let digits: Vec<&[Digit]> = rank1.iter().map(|p| p.digits()).collect();
        assert_eq!(digits, vec![&[0][..], &[1], &[2]]);

        let rank2 = enumerate_prefixes(alphabet, 2).unwrap();
        assert_eq!(rank2.len(), 9);
        assert_eq!(rank2.first().unwrap().digits(), &[0, 0]);
        assert_eq!(rank2.last().unwrap().digits(), &[2, 2]);

        let binary = enumerate_prefixes(Alphabet::binary(), 3).unwrap();
        assert_eq!(binary.len(), 8);
    }

    #[test]
    fn image_bounds_match_known_cylinders() {
        let cfg = cfg0();
        assert_eq!(
            brute_image_bounds(&cfg, &prefix(&cfg, &[1, 2]), 4).unwrap(),
            (ratio(1, 4), ratio(1, 2))
        );
        assert_eq!(
            brute_image_bounds(&cfg, &prefix(&cfg, &[2]), 3).unwrap(),
            (ratio(1, 2), ratio(1, 1))
        );
        assert_eq!(
            brute_image_bounds(&cfg, &prefix(&cfg, &[0]), 3).unwrap(),
            (ratio(0, 1), ratio(1, 2))
        );
    }

    #[test]
    fn filtered_level_sets() {
        let cfg = cfg0();
        assert_eq!(brute_level_set(&cfg, &beta(&[0, 1]), 2).unwrap().len(), 4);

        let set = brute_level_set(&cfg, &beta(&[1, 1]), 2).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set[0].digits(), &[2, 2]);

        let set = brute_level_set(&cfg, &beta(&[1, 0]), 2).unwrap();
        let digits: Vec<&[Digit]> = set.iter().map(|p| p.digits()).collect();
        assert_eq!(digits, vec![&[2, 0][..], &[2, 1]]);

        assert!(matches!(
            brute_level_set(&cfg, &beta(&[1, 0]), 3),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn variation_sums_cross_check_the_main_routes() {
        let cfg = cfg0();
        for rank in 1..=6 {
            let brute = brute_variation(&cfg, rank).unwrap();
            assert_eq!(brute, cfg.variation_lower_bound_brute(rank).unwrap());
            assert_eq!(brute, cfg.variation_lower_bound_dp(rank).unwrap());
        }
    }
}
