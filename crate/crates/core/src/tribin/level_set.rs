//! Level sets: full preimages of value points and of value-cylinder bases.
//!
//! Preimages unfold digit by digit: the first argument digit ranges over the
//! class named by the first output bit; each later position either pins the
//! argument digit or frees it to any of the other s−1 digits, according to
//! whether the configured rule reproduces that output step with a repeated or
//! a changed input digit. A value code whose tail eventually pins the
//! argument digit has finitely many preimage codes; one that frees it
//! infinitely often has continuum many.

use crate::codes::{Digit, DigitCode, Prefix};
use crate::error::{Error, Result};

use super::{TransducerRule, TribinConfig};

/// Cardinality classification of one level set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelSetKind {
    /// Finitely many preimages, listed exhaustively as canonical codes in
    /// lexicographic order.
    Finite(Vec<DigitCode>),
    /// Continuum many preimages.
    Continuum,
}

/// A level-set classification plus, when requested, the rank-n cylinder bases
/// meeting the level set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSetReport {
    pub classification: LevelSetKind,
    pub rank_cylinders: Option<Vec<Prefix>>,
}

impl TribinConfig {
    /// All argument bases of rank `|beta|` whose output prefix equals `beta`,
    /// in lexicographic order. Under the standard rule the count is
    /// `|A_{β_1}| · (s−1)^{number of bit flips in beta}`.
    pub fn level_set_cylinders(&self, beta: &Prefix) -> Result<Vec<Prefix>> {
        if beta.alphabet() != self.value_system().alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.value_system().alphabet().size(),
                got: beta.alphabet().size(),
            });
        }
        if beta.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        let bits = beta.digits();
        let mut out = Vec::new();
        let mut acc = Vec::with_capacity(bits.len());
        for first in self.partition().digits_of_class(bits[0]) {
            acc.push(first);
            self.unfold_preimages(bits, &mut acc, &mut |digits| {
                out.push(Prefix::new(self.alphabet(), digits.to_vec())?);
                Ok(())
            })?;
            acc.pop();
        }
        Ok(out)
    }

    /// Depth-first expansion of all digit strings matching `bits` from the
    /// seeded first digit, visiting leaves in lexicographic order.
    fn unfold_preimages(
        &self,
        bits: &[Digit],
        acc: &mut Vec<Digit>,
        visit: &mut impl FnMut(&[Digit]) -> Result<()>,
    ) -> Result<()> {
        let position = acc.len();
        if position == bits.len() {
            return visit(acc);
        }
        let previous = acc[position - 1];
        if self.rule().requires_change(bits[position - 1], bits[position]) {
            for digit in self.alphabet().digits() {
                if digit == previous {
                    continue;
                }
                acc.push(digit);
                self.unfold_preimages(bits, acc, visit)?;
                acc.pop();
            }
        } else {
            acc.push(previous);
            self.unfold_preimages(bits, acc, visit)?;
            acc.pop();
        }
        Ok(())
    }

    /// Classifies the level set of the point with value code `target`.
    ///
    /// When the target point has two value codes, the preimages of both are
    /// merged: level sets belong to points, not codes. With `rank = Some(n)`
    /// the report also lists the rank-n argument bases meeting the level set.
    pub fn classify_level_set(
        &self,
        target: &DigitCode,
        rank: Option<usize>,
    ) -> Result<LevelSetReport> {
        if target.alphabet() != self.value_system().alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.value_system().alphabet().size(),
                got: target.alphabet().size(),
            });
        }
        let mut contributing = vec![target.clone()];
        if let Some(dual) = target.dual_representation() {
            contributing.push(dual);
        }

        let classification = if contributing.iter().all(|c| self.tail_pins_argument(c)) {
            let mut members = Vec::new();
            for value_code in &contributing {
                members.extend(self.pinned_tail_preimages(value_code)?);
            }
            members.sort_by(|a, b| {
                a.compare_lex(b)
                    .expect("preimage codes share the argument alphabet")
            });
            LevelSetKind::Finite(members)
        } else {
            LevelSetKind::Continuum
        };

        let rank_cylinders = match rank {
            None => None,
            Some(n) => {
                let mut bases = Vec::new();
                for value_code in &contributing {
                    let beta = Prefix::new(
                        self.value_system().alphabet(),
                        value_code.first_digits(n),
                    )?;
                    bases.extend(self.level_set_cylinders(&beta)?);
                }
                bases.sort_by(|a, b| a.digits().cmp(b.digits()));
                bases.dedup();
                Some(bases)
            }
        };

        Ok(LevelSetReport {
            classification,
            rank_cylinders,
        })
    }

    /// Whether the periodic tail of this canonical value code forces a
    /// constant argument tail: a constant tail under the standard rule, a
    /// strictly alternating one under the flipped rule. Anything else frees
    /// the argument digit infinitely often.
    fn tail_pins_argument(&self, value_code: &DigitCode) -> bool {
        match self.rule() {
            TransducerRule::Standard => value_code.period().len() == 1,
            // The only primitive binary words of length two are 01 and 10.
            TransducerRule::Flipped => value_code.period().len() == 2,
        }
    }

    /// Exhaustive preimages of a value code whose tail pins the argument
    /// digit. Once the tail is reached the argument digit repeats forever,
    /// so the choices are confined to the first `ℓ + 1` positions.
    fn pinned_tail_preimages(&self, value_code: &DigitCode) -> Result<Vec<DigitCode>> {
        let decision_len = value_code.preperiod().len() + 1;
        let bits = value_code.first_digits(decision_len);

        let mut out = Vec::new();
        let mut acc: Vec<Digit> = Vec::with_capacity(decision_len);
        for first in self.partition().digits_of_class(bits[0]) {
            acc.push(first);
            self.unfold_preimages(&bits, &mut acc, &mut |digits| {
                let (head, tail) = digits.split_at(digits.len() - 1);
                out.push(DigitCode::new(self.alphabet(), head.to_vec(), vec![tail[0]])?);
                Ok(())
            })?;
            acc.pop();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_config::*;
    use super::*;

    #[test]
    fn preimage_cylinders_of_short_bases() {
        let cfg = cfg0();
        let cylinders = cfg.level_set_cylinders(&beta(&[0, 1])).unwrap();
        let digits: Vec<&[Digit]> = cylinders.iter().map(|p| p.digits()).collect();
        assert_eq!(digits, vec![&[0, 1][..], &[0, 2], &[1, 0], &[1, 2]]);

        let cylinders = cfg.level_set_cylinders(&beta(&[1])).unwrap();
        assert_eq!(cylinders.len(), 1);
        assert_eq!(cylinders[0].digits(), &[2]);

        let cylinders = cfg.level_set_cylinders(&beta(&[0, 0, 0])).unwrap();
        let digits: Vec<&[Digit]> = cylinders.iter().map(|p| p.digits()).collect();
        assert_eq!(digits, vec![&[0, 0, 0][..], &[1, 1, 1]]);
    }

    #[test]
    fn flipped_rule_swaps_pinned_and_free_positions() {
        let cfg = config(3, &[0, 1], crate::tribin::TransducerRule::Flipped);
        // Held output bits now require changed digits.
        let cylinders = cfg.level_set_cylinders(&beta(&[0, 0])).unwrap();
        let digits: Vec<&[Digit]> = cylinders.iter().map(|p| p.digits()).collect();
        assert_eq!(digits, vec![&[0, 1][..], &[0, 2], &[1, 0], &[1, 2]]);
        // Flipped output bits pin the digit.
        let cylinders = cfg.level_set_cylinders(&beta(&[0, 1])).unwrap();
        let digits: Vec<&[Digit]> = cylinders.iter().map(|p| p.digits()).collect();
        assert_eq!(digits, vec![&[0, 0][..], &[1, 1]]);
    }

    #[test]
    fn zero_and_one_have_finite_level_sets() {
        let cfg = cfg0();
        let report = cfg
            .classify_level_set(&binary_code(&[], &[0]), None)
            .unwrap();
        assert_eq!(
            report.classification,
            LevelSetKind::Finite(vec![code(&cfg, &[], &[0]), code(&cfg, &[], &[1])])
        );

        let report = cfg
            .classify_level_set(&binary_code(&[], &[1]), None)
            .unwrap();
        assert_eq!(
            report.classification,
            LevelSetKind::Finite(vec![code(&cfg, &[], &[2])])
        );
    }

    #[test]
    fn alternating_value_code_has_continuum_level_set() {
        let cfg = cfg0();
        let report = cfg
            .classify_level_set(&binary_code(&[], &[0, 1]), None)
            .unwrap();
        assert_eq!(report.classification, LevelSetKind::Continuum);
    }

    #[test]
    fn boundary_value_merges_both_codes() {
        let cfg = cfg0();
        // 1/2 has value codes 1:(0) and 0:(1); their preimages merge.
        let report = cfg
            .classify_level_set(&binary_code(&[1], &[0]), None)
            .unwrap();
        let LevelSetKind::Finite(members) = &report.classification else {
            panic!("expected a finite level set");
        };
        assert_eq!(members.len(), 6);
        for member in members {
            assert_eq!(cfg.eval(member).unwrap(), ratio(1, 2));
        }
        // Same result from the other code of 1/2.
        let other = cfg
            .classify_level_set(&binary_code(&[0], &[1]), None)
            .unwrap();
        assert_eq!(&other.classification, &report.classification);
    }

    #[test]
    fn requested_rank_lists_meeting_cylinders() {
        let cfg = cfg0();
        let report = cfg
            .classify_level_set(&binary_code(&[], &[0, 1]), Some(2))
            .unwrap();
        let bases = report.rank_cylinders.unwrap();
        let digits: Vec<&[Digit]> = bases.iter().map(|p| p.digits()).collect();
        assert_eq!(digits, vec![&[0, 1][..], &[0, 2], &[1, 0], &[1, 2]]);
    }
}
