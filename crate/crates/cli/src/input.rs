//! Monoid input: inline text or a file holding either the whole `F` or the
//! split pair `(f_{d-1}, f_d)` on two lines.

use std::path::Path;

use monoid_core::mvpoly::{parse_mpoly, HPoly, MPoly};
use monoid_core::{MonoidError, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Split,
    Whole,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub source: String,
    pub form: Form,
    pub text: Vec<String>,
}

/// An input line with a syntax error, for position reporting.
#[derive(Clone, Debug)]
pub struct InputError {
    pub error: MonoidError,
    pub line: Option<usize>,
}

impl From<MonoidError> for InputError {
    fn from(error: MonoidError) -> Self {
        InputError { error, line: None }
    }
}

pub struct ParsedInput {
    pub echo: InputEcho,
    /// Names of `x1..xn` as written in the input.
    pub names: Vec<String>,
    /// Name used for `x0`.
    pub apex_name: String,
    pub f_lo: HPoly,
    pub f_hi: HPoly,
}

/// Reads the polynomial lines from the positional arguments: a single
/// existing file, or one (whole) or two (split) inline polynomials.
pub fn read_lines(args: &[String]) -> std::result::Result<(String, Vec<String>), String> {
    match args {
        [one] if Path::new(one).is_file() => {
            let text = std::fs::read_to_string(one).map_err(|e| format!("{one}: {e}"))?;
            Ok((one.clone(), polynomial_lines(&text)))
        }
        [_] | [_, _] => Ok(("inline".into(), args.to_vec())),
        [] => Err("no input given".into()),
        _ => Err("expected one input file or one or two inline polynomials".into()),
    }
}

/// Non-empty lines with `#` comments removed.
pub fn polynomial_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

fn identifiers(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars().chain(std::iter::once(' ')) {
        if c.is_alphanumeric() || c == '_' {
            if cur.is_empty() && c.is_ascii_digit() {
                continue;
            }
            cur.push(c);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    out
}

/// Variable names for the input: letters `x, y, z` with `w` as `x0`, or
/// indexed `x0..xn` with `n >= 3`.
fn naming(lines: &[String]) -> (String, Vec<String>) {
    let ids: Vec<String> = lines.iter().flat_map(|l| identifiers(l)).collect();
    if !ids.is_empty() && ids.iter().all(|v| ["w", "x", "y", "z"].contains(&v.as_str())) {
        return ("w".into(), vec!["x".into(), "y".into(), "z".into()]);
    }
    let n = ids
        .iter()
        .filter_map(|v| v.strip_prefix('x').and_then(|k| k.parse::<usize>().ok()))
        .max()
        .unwrap_or(3)
        .max(3);
    ("x0".into(), (1..=n).map(|i| format!("x{i}")).collect())
}

pub fn parse_input(source: String, lines: Vec<String>) -> std::result::Result<ParsedInput, InputError> {
    let (apex_name, names) = naming(&lines);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let at_line = |line: usize| move |error: MonoidError| InputError { error, line: Some(line) };
    match lines.len() {
        2 => {
            let lo = parse_mpoly(&lines[0], &refs).map_err(at_line(1))?;
            let hi = parse_mpoly(&lines[1], &refs).map_err(at_line(2))?;
            let echo = InputEcho { source, form: Form::Split, text: lines };
            Ok(ParsedInput { echo, names, apex_name, f_lo: HPoly::new(lo)?, f_hi: HPoly::new(hi)? })
        }
        1 => {
            let mut all = vec![apex_name.as_str()];
            all.extend(&refs);
            let f = parse_mpoly(&lines[0], &all).map_err(at_line(1))?;
            let (f_lo, f_hi) = split_affine_or_projective(&f)?;
            let echo = InputEcho { source, form: Form::Whole, text: lines };
            Ok(ParsedInput { echo, names, apex_name, f_lo, f_hi })
        }
        k => Err(InputError {
            error: MonoidError::Syntax { pos: 0, msg: format!("expected one or two polynomial lines, found {k}") },
            line: None,
        }),
    }
}

/// Homogeneous input is split as `x0·f_{d-1} + f_d`. Input not involving
/// `x0` that is inhomogeneous is read in the chart `x0 = 1` and homogenized.
fn split_affine_or_projective(f: &MPoly) -> Result<(HPoly, HPoly)> {
    if f.is_zero() {
        return Err(MonoidError::ZeroPolynomial("monoid input"));
    }
    let whole = if f.is_homogeneous() || f.involves(0) {
        HPoly::new(f.clone())?
    } else {
        let d = f.total_degree().unwrap_or(0);
        HPoly::new(f.homogenize(0, d))?
    };
    monoid_core::monoid::split_whole(&whole)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(lines: &[&str]) -> std::result::Result<ParsedInput, InputError> {
        parse_input("inline".into(), lines.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn split_and_whole_agree() {
        let a = parse(&["x1*x2^2+x3^3", "x1^4"]).unwrap();
        let b = parse(&["x0*(x1*x2^2+x3^3)+x1^4"]).unwrap();
        assert_eq!(a.f_lo, b.f_lo);
        assert_eq!(a.f_hi, b.f_hi);
    }

    #[test]
    fn affine_letters_are_homogenized() {
        let a = parse(&["x^3+y^3+5*x*y*z-z^3*(x+y)"]).unwrap();
        assert_eq!(a.f_lo.degree(), Some(3));
        assert_eq!(a.f_hi.degree(), Some(4));
        assert_eq!(a.apex_name, "w");
    }

    #[test]
    fn syntax_errors_carry_line_and_position() {
        let e = parse(&["x1^2", "x1*+"]).err().unwrap();
        assert_eq!(e.line, Some(2));
        assert!(matches!(e.error, MonoidError::Syntax { .. }));
    }

    #[test]
    fn comments_and_blank_lines() {
        assert_eq!(polynomial_lines("# f3\nx1^3\n\n x2^4 # f4\n"), vec!["x1^3", "x2^4"]);
    }
}
