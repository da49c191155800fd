//! Text format for braid words, the fixture corpus, and JSON reports.
//!
//! ```text
//! braid := "B" n ":" word
//! word  := term*
//! term  := signed-int | "(" word ")" "^" signed-int
//! ```
//!
//! A letter `k > 0` is `σ_k`, `k < 0` is `σ_|k|⁻¹`. A group raised to a
//! negative exponent repeats its inverse.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::braid::{BraidWord, Letter};

/// Default cap on the number of letters a parsed word may expand to.
pub const DEFAULT_MAX_LETTERS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header \"B<n>:\"")]
    MissingHeader,
    #[error("strand count must be a positive integer")]
    BadStrandCount,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected '^' and an exponent after ')'")]
    MissingExponent,
    #[error("unmatched ')'")]
    UnmatchedClose,
    #[error("integer out of range")]
    Overflow,
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: u64, n: usize },
    #[error("zero exponent")]
    ZeroExponent,
    #[error("word expands to more than {limit} letters")]
    TooLong { limit: usize },
    #[error("fixture line needs three ';'-separated fields")]
    FixtureFields,
    #[error("expected-trivial must be true or false, got {0:?}")]
    FixtureVerdict(String),
}

/// A parse failure at a byte offset (or a line, for fixture files).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location} {position}: {kind}")]
pub struct ParseError {
    pub location: Location,
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Byte,
    Line,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Location::Byte => "at byte",
            Location::Line => "at line",
        })
    }
}

impl ParseError {
    fn at(position: usize, kind: ParseErrorKind) -> Self {
        ParseError {
            location: Location::Byte,
            position,
            kind,
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    limit: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::at(self.pos, kind)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(_) => {
                let rest = std::str::from_utf8(&self.src[self.pos..]).unwrap_or("?");
                self.err(ParseErrorKind::UnexpectedChar(
                    rest.chars().next().unwrap_or('?'),
                ))
            }
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let value = digits
            .parse::<u64>()
            .map_err(|_| ParseError::at(start, ParseErrorKind::Overflow))?;
        // tokens must be separated
        if self
            .peek()
            .is_some_and(|c| !(c.is_ascii_whitespace() || matches!(c, b'(' | b')' | b'^')))
        {
            return Err(self.unexpected());
        }
        Ok(value)
    }

    fn signed(&mut self) -> Result<(bool, u64), ParseError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        Ok((negative, self.unsigned()?))
    }

    fn header(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() != Some(b'B') {
            return Err(self.err(ParseErrorKind::MissingHeader));
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        self.n = match digits.parse::<usize>() {
            Ok(n) if n >= 1 => n,
            _ => return Err(ParseError::at(start, ParseErrorKind::BadStrandCount)),
        };
        if self.peek() != Some(b':') {
            return Err(self.err(ParseErrorKind::MissingHeader));
        }
        self.pos += 1;
        Ok(())
    }

    fn check_len(&self, len: usize, at: usize) -> Result<(), ParseError> {
        if len > self.limit {
            Err(ParseError::at(
                at,
                ParseErrorKind::TooLong { limit: self.limit },
            ))
        } else {
            Ok(())
        }
    }

    /// Parses terms until end of input or a closing parenthesis.
    fn word(&mut self, depth: usize) -> Result<Vec<Letter>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => {
                    if depth > 0 {
                        return Err(self.err(ParseErrorKind::UnexpectedEnd));
                    }
                    return Ok(out);
                }
                Some(b')') => {
                    if depth == 0 {
                        return Err(self.err(ParseErrorKind::UnmatchedClose));
                    }
                    return Ok(out);
                }
                Some(b'(') => {
                    let open = self.pos;
                    self.pos += 1;
                    let group = self.word(depth + 1)?;
                    self.pos += 1; // ')'
                    self.skip_ws();
                    if self.peek() != Some(b'^') {
                        return Err(self.err(ParseErrorKind::MissingExponent));
                    }
                    self.pos += 1;
                    self.skip_ws();
                    let exp_at = self.pos;
                    let (negative, e) = self.signed()?;
                    if e == 0 {
                        return Err(ParseError::at(exp_at, ParseErrorKind::ZeroExponent));
                    }
                    let reps = usize::try_from(e).unwrap_or(usize::MAX);
                    let total = out.len().saturating_add(group.len().saturating_mul(reps));
                    self.check_len(total, open)?;
                    let block: Vec<Letter> = if negative {
                        group.iter().rev().map(|l| l.inverse()).collect()
                    } else {
                        group
                    };
                    if !block.is_empty() {
                        for _ in 0..reps {
                            out.extend_from_slice(&block);
                        }
                    }
                }
                Some(_) => {
                    let at = self.pos;
                    let (negative, index) = self.signed()?;
                    if index == 0 || index >= self.n as u64 {
                        return Err(ParseError::at(
                            at,
                            ParseErrorKind::IndexOutOfRange { index, n: self.n },
                        ));
                    }
                    let index = index as usize;
                    out.push(if negative {
                        Letter::neg(index)
                    } else {
                        Letter::pos(index)
                    });
                    self.check_len(out.len(), at)?;
                }
            }
        }
    }
}

pub fn parse(text: &str) -> Result<BraidWord, ParseError> {
    parse_with_limit(text, DEFAULT_MAX_LETTERS)
}

/// Parses with a cap on the expanded letter count.
pub fn parse_with_limit(text: &str, max_letters: usize) -> Result<BraidWord, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n: 0,
        limit: max_letters,
    };
    p.header()?;
    let letters = p.word(0)?;
    Ok(BraidWord::new(p.n, letters).expect("indices checked while parsing"))
}

/// Flat text form `B<n>: l1 l2 …`.
pub fn serialize(b: &BraidWord) -> String {
    let mut s = format!("B{}:", b.n());
    for l in b.letters() {
        s.push(' ');
        s.push_str(&l.signed().to_string());
    }
    s
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}

/// One line of a fixture file: `name ; braid-text ; expected-trivial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub text: String,
    pub braid: BraidWord,
    pub expected_trivial: bool,
}

/// Reads a fixture corpus. Blank lines and lines starting with `#` are
/// skipped.
pub fn parse_fixtures(src: &str) -> Result<Vec<Fixture>, ParseError> {
    parse_fixtures_with_limit(src, DEFAULT_MAX_LETTERS)
}

pub fn parse_fixtures_with_limit(
    src: &str,
    max_letters: usize,
) -> Result<Vec<Fixture>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line_err = |kind| ParseError {
            location: Location::Line,
            position: lineno + 1,
            kind,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(';').map(str::trim).collect();
        let [name, text, verdict] = fields[..] else {
            return Err(line_err(ParseErrorKind::FixtureFields));
        };
        let braid = parse_with_limit(text, max_letters).map_err(|e| line_err(e.kind))?;
        let expected_trivial = match verdict {
            "true" => true,
            "false" => false,
            other => return Err(line_err(ParseErrorKind::FixtureVerdict(other.to_string()))),
        };
        out.push(Fixture {
            name: name.to_string(),
            text: text.to_string(),
            braid,
            expected_trivial,
        });
    }
    Ok(out)
}

/// Compact JSON with fields in declaration order.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types always serialize")
}
