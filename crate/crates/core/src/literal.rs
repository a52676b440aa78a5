//! Text form of quadratic integers: `a+b*w` for `Z[w]`, `a+b*i` for `Z[i]`.
//!
//! Printing drops zero parts and unit coefficients (`2+w`, `-w`, `5`).
//! Parsing accepts any sum of integer terms and symbol terms, with optional
//! whitespace and an optional `*`, e.g. `-1 - 3*w`, `w`, `4w + 2`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseLiteralError {
    /// Byte offset into the input where parsing failed.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseLiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseLiteralError {}

pub(crate) fn format_quadratic(
    f: &mut fmt::Formatter<'_>,
    a: i64,
    b: i64,
    symbol: char,
) -> fmt::Result {
    if b == 0 {
        return write!(f, "{a}");
    }
    if a != 0 {
        write!(f, "{a}")?;
        f.write_str(if b < 0 { "-" } else { "+" })?;
    } else if b < 0 {
        f.write_str("-")?;
    }
    match b.unsigned_abs() {
        1 => write!(f, "{symbol}"),
        m => write!(f, "{m}*{symbol}"),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParseLiteralError {
        ParseLiteralError {
            position: self.pos,
            message: message.into(),
        }
    }

    /// Magnitude of an unsigned decimal; `i64::MIN` needs the full `u64` range.
    fn integer(&mut self) -> Result<Option<u64>, ParseLiteralError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<u64>().map(Some).map_err(|_| ParseLiteralError {
            position: start,
            message: format!("integer {text} is out of range"),
        })
    }
}

/// Parses a sum of terms `n`, `n*s`, `ns`, `s` (with `s` the symbol) into `(a, b)`.
pub(crate) fn parse_quadratic(input: &str, symbol: u8) -> Result<(i64, i64), ParseLiteralError> {
    let mut cur = Cursor {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let overflow = |pos| ParseLiteralError {
        position: pos,
        message: "value out of range".into(),
    };
    let (mut a, mut b) = (0i64, 0i64);
    let mut first = true;
    loop {
        cur.skip_ws();
        let sign_pos = cur.pos;
        let sign = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                1i128
            }
            Some(b'-') => {
                cur.pos += 1;
                -1
            }
            None if first => return Err(cur.err("empty literal")),
            None => break,
            Some(_) if first => 1,
            Some(c) => return Err(cur.err(format!("expected '+' or '-', found '{}'", c as char))),
        };
        first = false;
        cur.skip_ws();
        let term_pos = cur.pos;
        let coeff = cur.integer()?;
        cur.skip_ws();
        let is_symbol_term = match (coeff, cur.peek()) {
            (Some(_), Some(b'*')) => {
                cur.pos += 1;
                cur.skip_ws();
                if cur.peek() != Some(symbol) {
                    return Err(cur.err(format!("expected '{}' after '*'", symbol as char)));
                }
                cur.pos += 1;
                true
            }
            (_, Some(c)) if c == symbol => {
                cur.pos += 1;
                true
            }
            (Some(_), _) => false,
            (None, Some(c)) => {
                return Err(cur.err(format!("unexpected character '{}'", c as char)));
            }
            (None, None) => return Err(cur.err("expected a term")),
        };
        let value = i64::try_from(sign * i128::from(coeff.unwrap_or(1)))
            .map_err(|_| overflow(sign_pos))?;
        let slot = if is_symbol_term { &mut b } else { &mut a };
        *slot = slot.checked_add(value).ok_or_else(|| overflow(term_pos))?;
    }
    Ok((a, b))
}
