//! Split-vector data files.
//!
//! ```text
//! # P^3 with c_1(O(1)) as polarization
//! 3
//! 4 2 2/3
//! ```
//!
//! The first content line is the dimension `n`, the second holds exactly `n`
//! whitespace-separated rationals `r_1 .. r_n` written `p/q` (or a bare
//! integer `p`). Everything from `#` to the end of a line is a comment;
//! blank lines are ignored. No other content lines are allowed.

use chern_descent_core::exact::Rational;
use chern_descent_core::SplitChernVector;
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> InputError {
    InputError {
        line,
        message: message.into(),
    }
}

/// Parses one `p/q` or `p` token.
pub fn parse_rational(token: &str) -> Result<Rational, String> {
    let (p, q) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let p: BigInt = p
        .parse()
        .map_err(|_| format!("bad numerator in {token:?}"))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| format!("bad denominator in {token:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {token:?}"));
    }
    Ok(Rational::new(p, q))
}

/// Always `p/q`, including `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_split_vector(text: &str) -> Result<SplitChernVector, InputError> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (dim_line, dim_text) = content
        .next()
        .ok_or_else(|| err(1, "missing dimension line"))?;
    let dim: usize = dim_text.parse().map_err(|_| {
        err(
            dim_line,
            format!("dimension must be a positive integer, got {dim_text:?}"),
        )
    })?;
    if dim == 0 {
        return Err(err(dim_line, "dimension must be positive"));
    }

    let (values_line, values_text) = content
        .next()
        .ok_or_else(|| err(dim_line + 1, "missing line of Chern scalars"))?;
    let scalars = values_text
        .split_whitespace()
        .map(|t| parse_rational(t).map_err(|m| err(values_line, m)))
        .collect::<Result<Vec<_>, _>>()?;
    if scalars.len() != dim {
        return Err(err(
            values_line,
            format!("expected {dim} scalars, found {}", scalars.len()),
        ));
    }
    if let Some((extra, _)) = content.next() {
        return Err(err(extra, "unexpected content after the scalar line"));
    }
    SplitChernVector::new(dim, scalars).map_err(|e| err(values_line, e.to_string()))
}

pub fn write_split_vector(v: &SplitChernVector) -> String {
    let mut out = String::new();
    if let Some(label) = v.label() {
        out.push_str(&format!("# {label}\n"));
    }
    out.push_str(&format!("{}\n", v.dim()));
    let tokens: Vec<String> = v.scalars().iter().map(format_rational).collect();
    out.push_str(&tokens.join(" "));
    out.push('\n');
    out
}
