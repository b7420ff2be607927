//! Alphabets, cylinder bases, and eventually periodic digit codes.
//!
//! A digit code stands for an infinite digit sequence over an alphabet
//! `{0, 1, …, s−1}`. Restricting to eventually periodic sequences keeps every
//! question about codes (equality, order, the dual of a boundary point)
//! decidable while still covering every point expressible in closed rational
//! form.

use std::cmp::Ordering;

use num::integer::lcm;

use crate::error::{Error, Result};

/// A single digit of an s-symbol alphabet.
pub type Digit = u32;

/// The digit alphabet `{0, 1, …, s−1}` for a fixed size `s ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self> {
        if size < 2 {
            return Err(Error::AlphabetTooSmall { got: size, min: 2 });
        }
        Ok(Self { size })
    }

    /// The binary alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Self { size: 2 }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn max_digit(&self) -> Digit {
        self.size - 1
    }

    pub fn contains(&self, digit: Digit) -> bool {
        digit < self.size
    }

    pub fn digits(&self) -> impl Iterator<Item = Digit> {
        0..self.size
    }

    fn check_digits(&self, digits: &[Digit]) -> Result<()> {
        for &d in digits {
            if !self.contains(d) {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    size: self.size,
                });
            }
        }
        Ok(())
    }
}

/// A finite digit string: the base of a cylinder. The empty prefix names the
/// whole unit interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Prefix {
    alphabet: Alphabet,
    digits: Vec<Digit>,
}

impl Prefix {
    pub fn new(alphabet: Alphabet, digits: Vec<Digit>) -> Result<Self> {
        alphabet.check_digits(&digits)?;
        Ok(Self { alphabet, digits })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            digits: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    /// The prefix extended by one more digit.
    pub fn child(&self, digit: Digit) -> Result<Self> {
        if !self.alphabet.contains(digit) {
            return Err(Error::DigitOutOfRange {
                digit,
                size: self.alphabet.size(),
            });
        }
        let mut digits = self.digits.clone();
        digits.push(digit);
        Ok(Self {
            alphabet: self.alphabet,
            digits,
        })
    }
}

/// An eventually periodic digit code `a_1…a_ℓ (p_1…p_k)^ω`, held in canonical
/// form: the period is primitive (not a repetition of a shorter word) and the
/// preperiod is minimal (its last digit differs from the period's last digit).
///
/// Canonicalization happens in [`DigitCode::new`], so two values of this type
/// are equal exactly when they denote the same infinite digit sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitCode {
    alphabet: Alphabet,
    preperiod: Vec<Digit>,
    period: Vec<Digit>,
}

impl DigitCode {
    /// Builds the canonical code for `preperiod (period)^ω`.
    ///
    /// The inputs need not be canonical; repeated period words collapse and
    /// preperiod digits that merely restate the periodic tail are absorbed.
    pub fn new(alphabet: Alphabet, preperiod: Vec<Digit>, period: Vec<Digit>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::MalformedCode("period must be nonempty".into()));
        }
        alphabet.check_digits(&preperiod)?;
        alphabet.check_digits(&period)?;

        let root = primitive_root(&period);
        let mut preperiod = preperiod;
        let mut period = period[..root].to_vec();
        // Absorb preperiod digits into the period: u·a (w·a)^ω = u (a·w)^ω.
        while let (Some(&pre_last), Some(&per_last)) = (preperiod.last(), period.last()) {
            if pre_last != per_last {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(Self {
            alphabet,
            preperiod,
            period,
        })
    }

    /// The code `(digit)^ω`.
    pub fn constant(alphabet: Alphabet, digit: Digit) -> Result<Self> {
        Self::new(alphabet, Vec::new(), vec![digit])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn preperiod(&self) -> &[Digit] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Digit] {
        &self.period
    }

    /// The n-th digit of the infinite expansion, 1-indexed.
    pub fn digit_at(&self, n: u64) -> Digit {
        assert!(n >= 1, "digit positions are 1-indexed");
        let pre_len = self.preperiod.len() as u64;
        if n <= pre_len {
            self.preperiod[(n - 1) as usize]
        } else {
            let offset = (n - pre_len - 1) % self.period.len() as u64;
            self.period[offset as usize]
        }
    }

    /// The first `n` digits of the expansion.
    pub fn first_digits(&self, n: usize) -> Vec<Digit> {
        (1..=n as u64).map(|i| self.digit_at(i)).collect()
    }

    /// Lexicographic order on the underlying infinite digit sequences.
    ///
    /// Codes over the same alphabet compare equal exactly when their
    /// canonical forms coincide.
    pub fn compare_lex(&self, other: &Self) -> Result<Ordering> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.size(),
                got: other.alphabet.size(),
            });
        }
        if self == other {
            return Ok(Ordering::Equal);
        }
        // Two distinct eventually periodic sequences must differ within the
        // shared preperiod plus one common period.
        let horizon = self.preperiod.len().max(other.preperiod.len()) as u64
            + lcm(self.period.len() as u64, other.period.len() as u64);
        for n in 1..=horizon {
            match self.digit_at(n).cmp(&other.digit_at(n)) {
                Ordering::Equal => continue,
                ord => return Ok(ord),
            }
        }
        Ok(Ordering::Equal)
    }

    /// The other code denoting the same point, when one exists.
    ///
    /// A code with an eventually-zero tail pairs with the code obtained by
    /// decrementing the digit before the tail and switching to an
    /// eventually-(s−1) tail, and vice versa. The constant codes `(0)^ω` and
    /// `(s−1)^ω` (the endpoints of the unit interval) have no partner, and
    /// neither does any code whose tail is not eventually constant at 0 or
    /// s−1. The operation is an involution on its domain.
    pub fn dual_representation(&self) -> Option<Self> {
        if self.period.len() != 1 {
            return None;
        }
        let max = self.alphabet.max_digit();
        let tail = self.period[0];
        let mut preperiod = self.preperiod.clone();
        let pivot = if tail == 0 {
            let pivot = preperiod.pop()?;
            // Canonical form guarantees pivot != 0 here.
            pivot - 1
        } else if tail == max {
            let pivot = preperiod.pop()?;
            pivot + 1
        } else {
            return None;
        };
        preperiod.push(pivot);
        let new_tail = if tail == 0 { max } else { 0 };
        Some(
            Self::new(self.alphabet, preperiod, vec![new_tail])
                .expect("dual of a canonical code is well formed"),
        )
    }
}

/// Length of the shortest word whose repetition spells out `period`.
fn primitive_root(period: &[Digit]) -> usize {
    let len = period.len();
    'candidate: for d in 1..=len {
        if !len.is_multiple_of(d) {
            continue;
        }
        for i in d..len {
            if period[i] != period[i - d] {
                continue 'candidate;
            }
        }
        return d;
    }
    len
}
