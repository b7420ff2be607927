//! Non-monotonicity witnesses: a strict valley or peak inside any cylinder.
//!
//! For a base ending in a digit c with 0 < c < s−1, the three points
//! `base·(0)^ω < head·(c)^ω < base·(s−1)^ω` transduce so that the outer two
//! share a value different from the middle one. A base ending in 0 or s−1
//! first descends into its sub-cylinder with appended digit 1, which always
//! satisfies the interior condition since s ≥ 3.

use num::BigRational;

use crate::codes::{DigitCode, Prefix};
use crate::error::{Error, Result};

use super::TribinConfig;

/// Three points `x0 < x1 < x2` inside a cylinder on which the function forms
/// a strict valley or peak: the outer values sit on the same side of the
/// middle value.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityWitness {
    /// Argument codes, in increasing point order.
    pub codes: [DigitCode; 3],
    /// The three points as exact rationals.
    pub points: [BigRational; 3],
    /// The function values at the three points.
    pub values: [BigRational; 3],
}

impl MonotonicityWitness {
    /// True when the middle value lies strictly below the equal-sided outer
    /// values.
    pub fn is_valley(&self) -> bool {
        self.values[1] < self.values[0]
    }
}

impl TribinConfig {
    /// Produces the witness triple inside the cylinder over `base`,
    /// descending one digit when the base's last digit touches the alphabet
    /// boundary.
    pub fn monotonicity_witness(&self, base: &Prefix) -> Result<MonotonicityWitness> {
        if base.alphabet() != self.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet().size(),
                got: base.alphabet().size(),
            });
        }
        if base.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        let max = self.alphabet().max_digit();
        let mut digits = base.digits().to_vec();
        let last = *digits.last().expect("base is nonempty");
        if last == 0 || last == max {
            digits.push(1);
        }
        let pivot = *digits.last().expect("digits are nonempty");
        let head = digits[..digits.len() - 1].to_vec();

        let codes = [
            DigitCode::new(self.alphabet(), digits.clone(), vec![0])?,
            DigitCode::new(self.alphabet(), head, vec![pivot])?,
            DigitCode::new(self.alphabet(), digits, vec![max])?,
        ];
        let mut points = Vec::with_capacity(3);
        let mut values = Vec::with_capacity(3);
        for code in &codes {
            points.push(self.argument_system().code_value(code)?);
            values.push(self.eval(code)?);
        }
        Ok(MonotonicityWitness {
            codes,
            points: points.try_into().expect("exactly three points"),
            values: values.try_into().expect("exactly three values"),
        })
    }
}
