//! The textual grammar for digit strings and codes.
//!
//! A prefix is a comma-separated digit list (`1,2`); the empty string is the
//! empty prefix. A code is `preperiod:(period)` with the preperiod part
//! omitted when empty: `1,2:(0)` means preperiod 1,2 with period 0, and
//! `(1)` is the purely periodic code with period 1.

use anyhow::{bail, Context, Result};

use tribin_core::{Alphabet, Digit, DigitCode, Prefix};

pub fn parse_digits(input: &str) -> Result<Vec<Digit>> {
    let input = input.trim();
    if input.is_empty() {
        return Ok(Vec::new());
    }
    input
        .split(',')
        .map(|token| {
            token
                .trim()
                .parse::<Digit>()
                .with_context(|| format!("malformed digit {token:?}"))
        })
        .collect()
}

pub fn parse_prefix(input: &str, alphabet: Alphabet) -> Result<Prefix> {
    Ok(Prefix::new(alphabet, parse_digits(input)?)?)
}

pub fn parse_code(input: &str, alphabet: Alphabet) -> Result<DigitCode> {
    let input = input.trim();
    let open = input
        .find('(')
        .with_context(|| format!("malformed code string {input:?}: missing '('"))?;
    let Some(inner) = input[open + 1..].strip_suffix(')') else {
        bail!("malformed code string {input:?}: missing trailing ')'");
    };
    let head = &input[..open];
    let preperiod = match head.strip_suffix(':') {
        Some(rest) => parse_digits(rest)?,
        None if head.is_empty() => Vec::new(),
        None => bail!("malformed code string {input:?}: expected ':' before '('"),
    };
    let period = parse_digits(inner)?;
    Ok(DigitCode::new(alphabet, preperiod, period)?)
}

pub fn format_digits(digits: &[Digit]) -> String {
    digits
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_prefix(prefix: &Prefix) -> String {
    format_digits(prefix.digits())
}

pub fn format_code(code: &DigitCode) -> String {
    let period = format_digits(code.period());
    if code.preperiod().is_empty() {
        format!("({period})")
    } else {
        format!("{}:({period})", format_digits(code.preperiod()))
    }
}
