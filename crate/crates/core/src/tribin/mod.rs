//! The Tribin-class functions: continuous nowhere-monotonic maps defined by a
//! digit transducer between an s-symbol argument system and a binary value
//! system.
//!
//! Fix an alphabet partition `A_0 ∪ A_1 = A_s` (both parts nonempty). The
//! function sends the point with argument code `α_1 α_2 …` to the point with
//! binary value code `β_1 β_2 …` where
//!
//! * `β_1` is 0 or 1 according to whether `α_1` lies in `A_0` or `A_1`, and
//! * under the standard rule, `β_{n+1} = β_n` when `α_{n+1} = α_n` and
//!   `β_{n+1} = 1 − β_n` otherwise: each later output bit flips exactly when
//!   the input digit changes.
//!
//! The flipped rule swaps the hold/flip cases; it produces a map that
//! disagrees on the two codes of some boundary point for every admissible
//! partition, which [`TribinConfig::check_well_defined`] finds by exhaustive
//! sweep.

mod level_set;
mod variation;
mod witness;

pub use level_set::{LevelSetKind, LevelSetReport};
pub use variation::{VariationMethod, VariationReport};
pub use witness::MonotonicityWitness;

use num::BigRational;

use crate::codes::{Alphabet, Digit, DigitCode, Prefix};
use crate::error::{Error, Result};
use crate::numsys::RepresentationSystem;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Enumerations larger than this run on the rayon pool when the `parallel`
/// feature is enabled; smaller ones stay sequential.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: u64 = 1 << 12;

/// Hard ceiling on exhaustive enumerations.
pub const ENUMERATION_GUARD: u64 = 10_000_000;

pub(crate) fn guarded_pow(base: u32, exp: u32) -> Result<u64> {
    let count = (base as u64)
        .checked_pow(exp)
        .filter(|&c| c <= ENUMERATION_GUARD)
        .ok_or(Error::EnumerationGuard {
            count: (base as u64).checked_pow(exp).unwrap_or(u64::MAX),
            guard: ENUMERATION_GUARD,
        })?;
    Ok(count)
}

/// A two-class partition of the digit alphabet, `A_0 ∪ A_1 = A_s` with both
/// classes nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    alphabet: Alphabet,
    in_class_one: Vec<bool>,
}

impl Partition {
    /// Builds the partition with `A_0 = class_zero` and `A_1` its complement.
    pub fn new(alphabet: Alphabet, class_zero: &[Digit]) -> Result<Self> {
        let mut in_class_one = vec![true; alphabet.size() as usize];
        for &d in class_zero {
            if !alphabet.contains(d) {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    size: alphabet.size(),
                });
            }
            in_class_one[d as usize] = false;
        }
        if in_class_one.iter().all(|&b| b) {
            return Err(Error::InvalidPartition("class A_0 is empty".into()));
        }
        if in_class_one.iter().all(|&b| !b) {
            return Err(Error::InvalidPartition("class A_1 is empty".into()));
        }
        Ok(Self {
            alphabet,
            in_class_one,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// 0 or 1: which class the digit belongs to. This is the first output bit
    /// for arguments starting with `digit`.
    pub fn class_of(&self, digit: Digit) -> Digit {
        self.in_class_one[digit as usize] as Digit
    }

    pub fn class_zero(&self) -> Vec<Digit> {
        self.digits_of_class(0)
    }

    pub fn class_one(&self) -> Vec<Digit> {
        self.digits_of_class(1)
    }

    pub fn digits_of_class(&self, class: Digit) -> Vec<Digit> {
        self.alphabet
            .digits()
            .filter(|&d| self.class_of(d) == class)
            .collect()
    }
}

/// Which digit-change behaviour drives the output bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransducerRule {
    /// Flip the output bit exactly when the input digit changes.
    Standard,
    /// Flip the output bit exactly when the input digit repeats. This variant
    /// is not well defined at boundary points; kept for the counterexample
    /// machinery.
    Flipped,
}

impl TransducerRule {
    /// One transducer step: the next output bit from the current bit and the
    /// adjacent pair of input digits.
    pub fn step(self, bit: Digit, previous: Digit, next: Digit) -> Digit {
        let changed = previous != next;
        let flip = match self {
            TransducerRule::Standard => changed,
            TransducerRule::Flipped => !changed,
        };
        if flip {
            1 - bit
        } else {
            bit
        }
    }

    /// The inverse view of [`TransducerRule::step`]: whether producing
    /// `next_bit` after `current_bit` forces the input digit to change.
    pub(crate) fn requires_change(self, current_bit: Digit, next_bit: Digit) -> bool {
        match self {
            TransducerRule::Standard => current_bit != next_bit,
            TransducerRule::Flipped => current_bit == next_bit,
        }
    }
}

/// One fully specified function: argument system, binary value system,
/// alphabet partition, and transducer rule.
#[derive(Debug, Clone, PartialEq)]
pub struct TribinConfig {
    argument_system: RepresentationSystem,
    value_system: RepresentationSystem,
    partition: Partition,
    rule: TransducerRule,
}

impl TribinConfig {
    pub fn new(
        argument_system: RepresentationSystem,
        value_system: RepresentationSystem,
        partition: Partition,
        rule: TransducerRule,
    ) -> Result<Self> {
        if argument_system.alphabet().size() < 3 {
            return Err(Error::AlphabetTooSmall {
                got: argument_system.alphabet().size(),
                min: 3,
            });
        }
        if value_system.alphabet().size() != 2 {
            return Err(Error::InvalidConfig(format!(
                "value system must be binary, got {} symbols",
                value_system.alphabet().size()
            )));
        }
        if partition.alphabet() != argument_system.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: argument_system.alphabet().size(),
                got: partition.alphabet().size(),
            });
        }
        Ok(Self {
            argument_system,
            value_system,
            partition,
            rule,
        })
    }

    pub fn argument_system(&self) -> &RepresentationSystem {
        &self.argument_system
    }

    pub fn value_system(&self) -> &RepresentationSystem {
        &self.value_system
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn rule(&self) -> TransducerRule {
        self.rule
    }

    pub fn alphabet(&self) -> Alphabet {
        self.argument_system.alphabet()
    }

    /// The output bits for a block of input digits.
    pub(crate) fn beta_digits(&self, alpha: &[Digit]) -> Vec<Digit> {
        let mut beta = Vec::with_capacity(alpha.len());
        if alpha.is_empty() {
            return beta;
        }
        let mut bit = self.partition.class_of(alpha[0]);
        beta.push(bit);
        for pair in alpha.windows(2) {
            bit = self.rule.step(bit, pair[0], pair[1]);
            beta.push(bit);
        }
        beta
    }

    /// The binary output prefix for an argument prefix; same length.
    pub fn beta_prefix(&self, alpha: &Prefix) -> Result<Prefix> {
        if self.alphabet() != alpha.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet().size(),
                got: alpha.alphabet().size(),
            });
        }
        if alpha.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        Prefix::new(
            self.value_system.alphabet(),
            self.beta_digits(alpha.digits()),
        )
    }

    /// The full output code of an argument code, in canonical form.
    ///
    /// An input with preperiod length ℓ and period length p yields an output
    /// with preperiod length at most ℓ + p and period length dividing 2p: the
    /// transducer state entering each period pass repeats with the same last
    /// input digit, and the output bit at the pass boundary can only
    /// alternate with period two.
    pub fn transduce(&self, alpha: &DigitCode) -> Result<DigitCode> {
        if self.alphabet() != alpha.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet().size(),
                got: alpha.alphabet().size(),
            });
        }
        let pre_len = alpha.preperiod().len();
        let per_len = alpha.period().len();
        let total = pre_len + 3 * per_len;
        let beta = self.beta_digits(&alpha.first_digits(total));
        let cut = pre_len + per_len;
        let (preperiod, period) = if beta[cut - 1] == beta[cut + per_len - 1] {
            (&beta[..cut], &beta[cut..cut + per_len])
        } else {
            (&beta[..cut], &beta[cut..cut + 2 * per_len])
        };
        DigitCode::new(
            self.value_system.alphabet(),
            preperiod.to_vec(),
            period.to_vec(),
        )
    }

    /// The function value at the point coded by `alpha`, as an exact rational
    /// in `[0,1]`.
    pub fn eval(&self, alpha: &DigitCode) -> Result<BigRational> {
        self.value_system.code_value(&self.transduce(alpha)?)
    }

    /// The base of the image cylinder: the image of the cylinder over `base`
    /// is exactly the value-system cylinder over the returned binary prefix
    /// (closed interval onto closed interval).
    pub fn cylinder_image(&self, base: &Prefix) -> Result<Prefix> {
        self.beta_prefix(base)
    }

    /// Sweeps every boundary point of rank at most `max_rank` (bases whose
    /// last digit is nonzero) and evaluates the function on both codes of the
    /// point. Returns the first disagreement in lexicographic base order, or
    /// confirmation that all pairs agree.
    pub fn check_well_defined(&self, max_rank: u32) -> Result<WellDefinedness> {
        let s = self.alphabet().size();
        let mut points_checked = 0u64;
        for rank in 1..=max_rank {
            let count = guarded_pow(s, rank - 1)?
                .checked_mul((s - 1) as u64)
                .filter(|&c| c <= ENUMERATION_GUARD)
                .ok_or(Error::EnumerationGuard {
                    count: u64::MAX,
                    guard: ENUMERATION_GUARD,
                })?;
            if let Some(mismatch) = self.first_mismatch_at_rank(rank, count)? {
                return Ok(WellDefinedness::Mismatch(Box::new(mismatch)));
            }
            points_checked += count;
        }
        Ok(WellDefinedness::WellDefined { points_checked })
    }

    /// Index `i` encodes a rank-`rank` base with nonzero last digit: the
    /// leading digits in base s from `i / (s−1)`, the last digit
    /// `1 + i mod (s−1)`. The encoding preserves lexicographic base order.
    fn dual_pair_at(&self, rank: u32, index: u64) -> Result<Option<DualMismatch>> {
        let s = self.alphabet().size();
        let mut base = Vec::with_capacity(rank as usize);
        let mut lead = index / (s - 1) as u64;
        for pos in (0..rank - 1).rev() {
            let scale = (s as u64).pow(pos);
            base.push((lead / scale) as Digit % s);
            lead %= scale;
        }
        base.push(1 + (index % (s - 1) as u64) as Digit);

        let zero_tail = DigitCode::new(self.alphabet(), base, vec![0])?;
        let max_tail = zero_tail
            .dual_representation()
            .expect("bases with nonzero last digit always have a dual");
        let zero_tail_value = self.eval(&zero_tail)?;
        let max_tail_value = self.eval(&max_tail)?;
        if zero_tail_value == max_tail_value {
            return Ok(None);
        }
        Ok(Some(DualMismatch {
            codes: (zero_tail, max_tail),
            values: (zero_tail_value, max_tail_value),
        }))
    }

    fn first_mismatch_at_rank(&self, rank: u32, count: u64) -> Result<Option<DualMismatch>> {
        #[cfg(feature = "parallel")]
        if count > PARALLEL_THRESHOLD {
            return (0..count)
                .into_par_iter()
                .map(|i| self.dual_pair_at(rank, i))
                .find_map_first(|r| r.transpose())
                .transpose();
        }
        (0..count)
            .map(|i| self.dual_pair_at(rank, i))
            .find_map(|r| r.transpose())
            .transpose()
    }
}

/// Two codes of the same point on which the function takes different values.
#[derive(Debug, Clone, PartialEq)]
pub struct DualMismatch {
    /// The eventually-zero code and its eventually-(s−1) partner.
    pub codes: (DigitCode, DigitCode),
    /// The function values at the two codes, in the same order.
    pub values: (BigRational, BigRational),
}

/// Outcome of the boundary-point sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum WellDefinedness {
    /// Every boundary point in range evaluated equally on both of its codes.
    WellDefined { points_checked: u64 },
    /// The first disagreement found.
    Mismatch(Box<DualMismatch>),
}

impl WellDefinedness {
    pub fn is_well_defined(&self) -> bool {
        matches!(self, WellDefinedness::WellDefined { .. })
    }
}
