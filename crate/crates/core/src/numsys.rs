//! Weighted s-symbol representation systems with exact cylinder geometry.
//!
//! A [`RepresentationSystem`] assigns each digit `i` a positive rational
//! weight `q_i` with `Σ q_i = 1`. Digit `i` of every cylinder occupies the
//! fraction `q_i` of that cylinder, laid out in ascending digit order, so the
//! rank-m cylinders tile `[0,1]` without overlapping interiors and their
//! diameters vanish as m grows. Uniform weights `q_i = 1/s` recover the
//! classical base-s expansion `x = Σ a_n / s^n`.
//!
//! All arithmetic is exact: endpoints, lengths, and code values are
//! arbitrary-precision rationals, which makes boundary coincidences (two
//! codes of the same point) decidable equalities rather than tolerance
//! checks.

use num::{BigRational, One, Signed, Zero};

use crate::codes::{Alphabet, Digit, DigitCode, Prefix};
use crate::error::{Error, Result};

/// An s-symbol encoding of `[0,1]` determined by positive digit weights
/// summing to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationSystem {
    alphabet: Alphabet,
    weights: Vec<BigRational>,
    /// cumulative[d] = Σ_{i<d} q_i, with cumulative[s] = 1.
    cumulative: Vec<BigRational>,
}

impl RepresentationSystem {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        let alphabet = Alphabet::new(weights.len() as u32)?;
        let mut cumulative = Vec::with_capacity(weights.len() + 1);
        let mut sum = BigRational::zero();
        for w in &weights {
            if !w.is_positive() {
                return Err(Error::InvalidWeights(format!(
                    "weight {w} is not positive"
                )));
            }
            cumulative.push(sum.clone());
            sum += w;
        }
        if !sum.is_one() {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        cumulative.push(sum);
        Ok(Self {
            alphabet,
            weights,
            cumulative,
        })
    }

    /// The classical base-s system: every digit weighted `1/s`.
    pub fn uniform(size: u32) -> Result<Self> {
        if size < 2 {
            return Err(Error::AlphabetTooSmall { got: size, min: 2 });
        }
        let w = BigRational::new(1.into(), size.into());
        Self::new(vec![w; size as usize])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight(&self, digit: Digit) -> &BigRational {
        &self.weights[digit as usize]
    }

    /// Σ of the weights of all digits below `digit`; the relative offset at
    /// which the digit's sub-cylinder starts.
    pub fn cumulative_weight(&self, digit: Digit) -> &BigRational {
        &self.cumulative[digit as usize]
    }

    fn check_alphabet(&self, other: Alphabet) -> Result<()> {
        if self.alphabet != other {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.size(),
                got: other.size(),
            });
        }
        Ok(())
    }

    /// Left endpoint and length of the cylinder over `digits`, accumulated in
    /// one pass: entering digit `d` of a cylinder `[min, min+len]` moves to
    /// `[min + cumulative(d)·len, …]` and scales the length by `q_d`.
    fn offset_and_scale(&self, digits: &[Digit]) -> (BigRational, BigRational) {
        let mut offset = BigRational::zero();
        let mut scale = BigRational::one();
        for &d in digits {
            offset += self.cumulative_weight(d) * &scale;
            scale *= self.weight(d);
        }
        (offset, scale)
    }

    /// The exact length of the cylinder over `base`: the product of the base
    /// digits' weights. The empty base has length 1.
    pub fn cylinder_length(&self, base: &Prefix) -> Result<BigRational> {
        self.check_alphabet(base.alphabet())?;
        Ok(base
            .digits()
            .iter()
            .map(|&d| self.weight(d))
            .product())
    }

    /// Exact `(min, max)` endpoints of the cylinder over `base`.
    pub fn cylinder_bounds(&self, base: &Prefix) -> Result<(BigRational, BigRational)> {
        let cylinder = self.cylinder(base)?;
        let max = cylinder.max();
        Ok((cylinder.min, max))
    }

    pub fn cylinder(&self, base: &Prefix) -> Result<Cylinder> {
        self.check_alphabet(base.alphabet())?;
        let (min, length) = self.offset_and_scale(base.digits());
        Ok(Cylinder {
            base: base.clone(),
            min,
            length,
        })
    }

    /// The unique point in the nested intersection of the code's cylinders.
    ///
    /// The periodic tail's value solves `v = offset + scale·v` in closed
    /// form, so the result is an exact rational in `[0,1]`.
    pub fn code_value(&self, code: &DigitCode) -> Result<BigRational> {
        self.check_alphabet(code.alphabet())?;
        let (pre_offset, pre_scale) = self.offset_and_scale(code.preperiod());
        let (per_offset, per_scale) = self.offset_and_scale(code.period());
        // per_scale < 1 because every digit weight is strictly below 1.
        let tail = per_offset / (BigRational::one() - per_scale);
        Ok(pre_offset + pre_scale * tail)
    }

    /// Greedy digit extraction: the rank-`depth` base of a cylinder
    /// containing `x`, together with a flag reporting whether `x` was an
    /// interior cylinder endpoint along the way (a point with two codes).
    ///
    /// At such an endpoint both continuations are valid; this always follows
    /// the eventually-zero branch, so the boundary stays recoverable through
    /// [`DigitCode::dual_representation`].
    pub fn value_digits(&self, x: &BigRational, depth: usize) -> Result<(Prefix, bool)> {
        if x.is_negative() || x > &BigRational::one() {
            return Err(Error::ValueOutOfRange(x.to_string()));
        }
        let mut remainder = x.clone();
        let mut digits = Vec::with_capacity(depth);
        let mut on_boundary = false;
        for _ in 0..depth {
            let digit = self.locate_digit(&remainder);
            let start = self.cumulative_weight(digit);
            if digit > 0 && remainder == *start {
                on_boundary = true;
            }
            remainder = (remainder - start) / self.weight(digit);
            digits.push(digit);
        }
        Ok((Prefix::new(self.alphabet, digits)?, on_boundary))
    }

    /// Largest digit whose sub-interval start does not exceed `r` (with
    /// `r = 1` landing in the last digit's sub-interval).
    fn locate_digit(&self, r: &BigRational) -> Digit {
        let mut digit = self.alphabet.max_digit();
        while digit > 0 && self.cumulative_weight(digit) > r {
            digit -= 1;
        }
        digit
    }

    /// Re-reads `code` in `target`, the digit-preserving map between two
    /// systems over the same alphabet. The induced point map is continuous
    /// and strictly increasing.
    pub fn project(&self, target: &RepresentationSystem, code: &DigitCode) -> Result<BigRational> {
        self.check_alphabet(code.alphabet())?;
        target.check_alphabet(self.alphabet)?;
        target.code_value(code)
    }
}

/// A cylinder: the closed interval of all points whose codes extend a fixed
/// base. Its length is the product of the base digits' weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cylinder {
    base: Prefix,
    min: BigRational,
    length: BigRational,
}

impl Cylinder {
    pub fn base(&self) -> &Prefix {
        &self.base
    }

    pub fn min(&self) -> &BigRational {
        &self.min
    }

    pub fn max(&self) -> BigRational {
        &self.min + &self.length
    }

    pub fn length(&self) -> &BigRational {
        &self.length
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        *x >= self.min && *x <= self.max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn uniform(s: u32) -> RepresentationSystem {
        RepresentationSystem::uniform(s).unwrap()
    }

    /// Weights (1/2, 1/4, 1/4).
    fn skewed3() -> RepresentationSystem {
        RepresentationSystem::new(vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]).unwrap()
    }

    fn prefix(system: &RepresentationSystem, digits: &[Digit]) -> Prefix {
        Prefix::new(system.alphabet(), digits.to_vec()).unwrap()
    }

    fn code(system: &RepresentationSystem, pre: &[Digit], per: &[Digit]) -> DigitCode {
        DigitCode::new(system.alphabet(), pre.to_vec(), per.to_vec()).unwrap()
    }

    #[test]
    fn weights_must_be_positive_and_sum_to_one() {
        assert!(matches!(
            RepresentationSystem::new(vec![ratio(1, 2), ratio(1, 2), ratio(0, 1)]),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(
            RepresentationSystem::new(vec![ratio(1, 2), ratio(1, 4)]),
            Err(Error::InvalidWeights(_))
        ));
    }

    #[test]
    fn cylinder_length_is_weight_product() {
        let u3 = uniform(3);
        assert_eq!(
            u3.cylinder_length(&prefix(&u3, &[1, 2])).unwrap(),
            ratio(1, 9)
        );
        let sk = skewed3();
        assert_eq!(
            sk.cylinder_length(&prefix(&sk, &[0, 0])).unwrap(),
            ratio(1, 4)
        );
        assert_eq!(sk.cylinder_length(&prefix(&sk, &[])).unwrap(), ratio(1, 1));
    }

    #[test]
    fn cylinder_bounds_follow_ascending_layout() {
        let u3 = uniform(3);
        assert_eq!(
            u3.cylinder_bounds(&prefix(&u3, &[1, 2])).unwrap(),
            (ratio(5, 9), ratio(6, 9))
        );
        let sk = skewed3();
        assert_eq!(
            sk.cylinder_bounds(&prefix(&sk, &[2])).unwrap(),
            (ratio(3, 4), ratio(1, 1))
        );
        // The leftmost chain pins min to 0 and max to q_0^m.
        assert_eq!(
            sk.cylinder_bounds(&prefix(&sk, &[0, 0, 0])).unwrap(),
            (ratio(0, 1), ratio(1, 8))
        );
    }

    #[test]
    fn code_value_closed_forms() {
        let u3 = uniform(3);
        assert_eq!(u3.code_value(&code(&u3, &[], &[1])).unwrap(), ratio(1, 2));
        // Dual codes of the boundary point 1/3 evaluate equally.
        assert_eq!(u3.code_value(&code(&u3, &[1], &[0])).unwrap(), ratio(1, 3));
        assert_eq!(u3.code_value(&code(&u3, &[0], &[2])).unwrap(), ratio(1, 3));
        // Endpoints.
        let sk = skewed3();
        assert_eq!(sk.code_value(&code(&sk, &[], &[0])).unwrap(), ratio(0, 1));
        assert_eq!(sk.code_value(&code(&sk, &[], &[2])).unwrap(), ratio(1, 1));
    }

    #[test]
    fn value_digits_prefers_zero_tail_on_boundaries() {
        let u3 = uniform(3);
        let (p, boundary) = u3.value_digits(&ratio(1, 3), 2).unwrap();
        assert_eq!(p.digits(), &[1, 0]);
        assert!(boundary);

        let x = ratio(5, 9) + ratio(1, 100);
        let (p, boundary) = u3.value_digits(&x, 2).unwrap();
        assert_eq!(p.digits(), &[1, 2]);
        assert!(!boundary);

        let (p, boundary) = u3.value_digits(&ratio(0, 1), 4).unwrap();
        assert_eq!(p.digits(), &[0, 0, 0, 0]);
        assert!(!boundary);
    }

    #[test]
    fn value_digits_rejects_out_of_range() {
        let u3 = uniform(3);
        assert!(matches!(
            u3.value_digits(&ratio(-1, 2), 3),
            Err(Error::ValueOutOfRange(_))
        ));
        assert!(matches!(
            u3.value_digits(&ratio(3, 2), 3),
            Err(Error::ValueOutOfRange(_))
        ));
    }

    #[test]
    fn projection_reinterprets_digits() {
        let u3 = uniform(3);
        let sk = skewed3();
        assert_eq!(
            u3.project(&sk, &code(&u3, &[1], &[0])).unwrap(),
            ratio(1, 2)
        );
        // Identity projector.
        let c = code(&u3, &[2], &[0, 1]);
        assert_eq!(
            u3.project(&u3, &c).unwrap(),
            u3.code_value(&c).unwrap()
        );
        // (1)^ω re-read with weights (1/2,1/4,1/4) solves v = 1/2 + v/4.
        assert_eq!(
            u3.project(&sk, &code(&u3, &[], &[1])).unwrap(),
            ratio(2, 3)
        );
        // Order is preserved: 0 = (0)^ω maps below (1)^ω.
        assert!(u3.project(&sk, &code(&u3, &[], &[0])).unwrap() < ratio(2, 3));
    }

    #[test]
    fn agreement_depth_bounds_value_distance() {
        // For a point with a unique code, any code agreeing on exactly m−1
        // leading digits lies within the rank-(m−1) cylinder of the original.
        let systems = [uniform(3), skewed3()];
        for system in &systems {
            for tail in 0..3 {
                let x0 = code(system, &[], &[tail]);
                if x0.dual_representation().is_some() {
                    continue;
                }
                let v0 = system.code_value(&x0).unwrap();
                for m in 1..=6usize {
                    let shared = x0.first_digits(m - 1);
                    for d in 0..3 {
                        if d == x0.digit_at(m as u64) {
                            continue;
                        }
                        for t in 0..3 {
                            let mut pre = shared.clone();
                            pre.push(d);
                            let x = code(system, &pre, &[t]);
                            let v = system.code_value(&x).unwrap();
                            let bound = system
                                .cylinder_length(&prefix(system, &shared))
                                .unwrap();
                            assert!((v - &v0).abs() <= bound);
                        }
                    }
                }
            }
        }
    }
}
