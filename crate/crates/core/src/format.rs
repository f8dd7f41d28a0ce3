//! Text format for monomial ideals.
//!
//! ```text
//! # comments run to end of line
//! vars: 3
//! x1^2
//! x1*x2
//! x1*x3
//! x2^2
//! ```
//!
//! The header `vars: n` is mandatory and comes first. Each remaining line
//! holds one monomial; `1` is the unit monomial and an ideal with no
//! monomial lines is the zero ideal. [`to_text`] emits generators in
//! canonical order, so equal ideals serialize to identical bytes.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_EXPONENT, MAX_VARS};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses one monomial as `(variable index (1-based), exponent)` factors.
/// `col0` is the 1-based column of `src[0]`.
fn parse_factors(src: &str, line: usize, col0: usize) -> Result<Vec<(usize, u32)>> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let mut factors = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let number = |pos: &mut usize| -> Option<u64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        src[start..*pos].parse().ok()
    };
    loop {
        skip_ws(&mut pos);
        let here = col0 + pos;
        match bytes.get(pos) {
            Some(b'x') => {
                pos += 1;
                let idx =
                    number(&mut pos).ok_or_else(|| parse_err(line, col0 + pos, "expected variable index after 'x'"))?;
                if idx == 0 || idx as usize > MAX_VARS {
                    return Err(parse_err(line, here, format!("unknown variable x{idx}")));
                }
                let mut exp = 1u64;
                skip_ws(&mut pos);
                if bytes.get(pos) == Some(&b'^') {
                    pos += 1;
                    skip_ws(&mut pos);
                    exp = number(&mut pos).ok_or_else(|| parse_err(line, col0 + pos, "expected exponent after '^'"))?;
                }
                if exp > MAX_EXPONENT as u64 {
                    return Err(parse_err(line, here, format!("exponent {exp} exceeds {MAX_EXPONENT}")));
                }
                factors.push((idx as usize, exp as u32));
            }
            Some(b'1') if factors.is_empty() => {
                pos += 1;
            }
            Some(c) => {
                return Err(parse_err(line, here, format!("unexpected character {:?}", *c as char)));
            }
            None => return Err(parse_err(line, here, "expected a monomial")),
        }
        skip_ws(&mut pos);
        match bytes.get(pos) {
            None => return Ok(factors),
            Some(b'*') => pos += 1,
            Some(c) => {
                return Err(parse_err(
                    line,
                    col0 + pos,
                    format!("unexpected character {:?}", *c as char),
                ))
            }
        }
    }
}

fn build_monomial(factors: &[(usize, u32)], n: usize, line: usize, column: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; n];
    for &(idx, e) in factors {
        if idx > n {
            return Err(parse_err(
                line,
                column,
                format!("variable x{idx} exceeds the declared {n} variables"),
            ));
        }
        exps[idx - 1] += e;
        if exps[idx - 1] > MAX_EXPONENT {
            return Err(parse_err(line, column, "exponent overflow"));
        }
    }
    Monomial::new(&exps)
}

pub fn parse_monomial(src: &str, n: usize) -> Result<Monomial> {
    let factors = parse_factors(src, 1, 1)?;
    build_monomial(&factors, n, 1, 1)
}

/// Parses an ideal file (header `vars: n`, one monomial per line).
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut n: Option<usize> = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let col0 = body.len() - trimmed.len() + 1;
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        match n {
            None => {
                let rest = trimmed
                    .strip_prefix("vars:")
                    .ok_or_else(|| parse_err(line, col0, "expected header 'vars: n'"))?;
                let count: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, col0 + 5, "expected a variable count"))?;
                if count == 0 || count > MAX_VARS {
                    return Err(parse_err(
                        line,
                        col0 + 5,
                        format!("variable count {count} outside 1..=16"),
                    ));
                }
                n = Some(count);
            }
            Some(n) => {
                let factors = parse_factors(trimmed, line, col0)?;
                gens.push(build_monomial(&factors, n, line, col0)?);
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(1, 1, "missing header 'vars: n'"))?;
    MonomialIdeal::minimalize(gens, n)
}

/// Parses a comma- or newline-separated generator list such as
/// `"x1^2, x1*x2"`. Without `n`, the ring has as many variables as the
/// largest index used (at least 1).
pub fn parse_generators(src: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut parsed = Vec::new();
    for (k, line_src) in src.lines().enumerate() {
        let mut offset = 0;
        for piece in line_src.split(',') {
            let trimmed = piece.trim_start();
            let col0 = offset + (piece.len() - trimmed.len()) + 1;
            offset += piece.len() + 1;
            let trimmed = trimmed.trim_end();
            if trimmed.is_empty() {
                continue;
            }
            parsed.push((parse_factors(trimmed, k + 1, col0)?, k + 1, col0));
        }
    }
    let inferred = parsed
        .iter()
        .flat_map(|(f, _, _)| f.iter().map(|&(i, _)| i))
        .max()
        .unwrap_or(1);
    let n = n.unwrap_or(inferred);
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableCount(n));
    }
    let gens = parsed
        .iter()
        .map(|(f, line, col)| build_monomial(f, n, *line, *col))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(gens, n)
}

/// Canonical serialization in the ideal file format.
pub fn to_text(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars: {}\n", ideal.n());
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// One-line canonical form, e.g. `vars 3: x1^2, x1*x2`.
pub fn to_inline(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    format!("vars {}: {}", ideal.n(), gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_with_comments() {
        let text = "# example\nvars: 3\nx1^2\nx1*x2  # trailing\n\nx1*x3\nx2^2\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.n(), 3);
        assert_eq!(to_text(&i), "vars: 3\nx1^2\nx1*x2\nx1*x3\nx2^2\n");
    }

    #[test]
    fn zero_and_unit() {
        assert!(parse_ideal("vars: 2\n").unwrap().is_zero());
        assert!(parse_ideal("vars: 2\n1\n").unwrap().is_unit());
        assert_eq!(to_text(&parse_ideal("vars: 2\n1\n").unwrap()), "vars: 2\n1\n");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_ideal("vars: 2\nx1*y2\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("{other:?}"),
        }
        match parse_ideal("vars: 2\n  x3\n") {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (2, 3));
                assert!(message.contains("x3"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ideal("x1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ideal(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("vars: 1\nx1^\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn inline_lists() {
        let i = parse_generators("x1^2, x1*x2, x1*x3, x2^2", Some(3)).unwrap();
        assert_eq!(i.generators().len(), 4);
        let j = parse_generators("x2 * x1 ^ 2", None).unwrap();
        assert_eq!(j.n(), 2);
        assert_eq!(to_inline(&j), "vars 2: x1^2*x2");
        assert!(parse_generators("x1, x4", Some(3)).is_err());
    }

    #[test]
    fn repeated_factors_accumulate() {
        assert_eq!(parse_monomial("x1*x1^2", 1).unwrap(), Monomial::new(&[3]).unwrap());
    }
}
