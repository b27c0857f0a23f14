//! Complex literals: `complex := real | [real] [sign] imag "i" | "i"`.
//!
//! Reals use ordinary decimal or scientific notation (`2`, `-0.5`, `1.5e-3`).
//! Whitespace is not allowed anywhere inside a literal, and `i` alone means
//! `1i`. Formatting always uses `.` as the decimal separator and prints with
//! a fixed number of significant digits; at 17 digits the output parses back
//! to the identical value.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid complex literal {literal:?}: {reason}")]
pub struct ParseError {
    pub literal: String,
    pub reason: &'static str,
}

fn fail(literal: &str, reason: &'static str) -> ParseError {
    ParseError {
        literal: literal.to_string(),
        reason,
    }
}

fn parse_real(text: &str, literal: &str) -> Result<f64, ParseError> {
    let body = text.strip_prefix(['+', '-']).unwrap_or(text);
    if body.is_empty() || !body.starts_with(|c: char| c.is_ascii_digit() || c == '.') {
        return Err(fail(literal, "expected a number"));
    }
    if !body
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
    {
        return Err(fail(literal, "unexpected character"));
    }
    let v: f64 = text
        .parse()
        .map_err(|_| fail(literal, "malformed number"))?;
    if !v.is_finite() {
        return Err(fail(literal, "number out of range"));
    }
    Ok(v)
}

pub fn parse_complex(literal: &str) -> Result<Complex64, ParseError> {
    if literal.is_empty() {
        return Err(fail(literal, "empty literal"));
    }
    if literal.chars().any(char::is_whitespace) {
        return Err(fail(literal, "whitespace inside literal"));
    }
    let Some(body) = literal.strip_suffix('i') else {
        return Ok(Complex64::new(parse_real(literal, literal)?, 0.0));
    };

    // Split before the last sign that is neither leading nor an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (real, imag) = match split {
        Some(k) => (parse_real(&body[..k], literal)?, &body[k..]),
        None => (0.0, body),
    };
    let imag = match imag {
        "" | "+" => 1.0,
        "-" => -1.0,
        text => parse_real(text, literal)?,
    };
    Ok(Complex64::new(real, imag))
}

/// `v` with `digits` significant digits (clamped to 1..=17), trailing zeros removed.
pub fn format_real(v: f64, digits: usize) -> String {
    let digits = digits.clamp(1, 17);
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent in scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let figures: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let figures = figures.trim_end_matches('0');
    let figures = if figures.is_empty() { "0" } else { figures };

    if (-5..17).contains(&exp) {
        let point = exp + 1;
        let text = if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), figures)
        } else if point as usize >= figures.len() {
            format!("{}{}", figures, "0".repeat(point as usize - figures.len()))
        } else {
            let (int, frac) = figures.split_at(point as usize);
            format!("{int}.{frac}")
        };
        format!("{sign}{text}")
    } else {
        let (lead, rest) = figures.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{exp}")
        } else {
            format!("{sign}{lead}.{rest}e{exp}")
        }
    }
}

/// `re±imi`, e.g. `0.5+0.866025403784i`.
pub fn format_complex(z: Complex64, digits: usize) -> String {
    let re = format_real(z.re, digits);
    let im = format_real(z.im.abs(), digits);
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}
