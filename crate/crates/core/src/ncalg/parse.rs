//! Text grammar for polynomials.
//!
//! ```text
//! polynomial := ["+"|"-"] term (("+"|"-") term)*
//! term       := float | [float ["*"]] factor (["*"] factor)*
//! factor     := ("x"|"X") index ["^" power]
//! ```
//! Whitespace is ignored and `#` starts a comment running to the end of the line.

use thiserror::Error;

use super::poly::NcPoly;
use super::word::Word;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.pos + 1, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '#' {
                self.pos = self.chars.len();
            } else if c.is_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        let mut seen_e = false;
        while let Some(&c) = self.chars.get(end) {
            let prev = if end > start { self.chars[end - 1] } else { ' ' };
            let ok = c.is_ascii_digit()
                || c == '.'
                || ((c == 'e' || c == 'E') && !seen_e && end > start)
                || ((c == '+' || c == '-') && (prev == 'e' || prev == 'E'));
            if !ok {
                break;
            }
            if c == 'e' || c == 'E' {
                seen_e = true;
            }
            end += 1;
        }
        let text: String = self.chars[start..end].iter().collect();
        let v = text.parse::<f64>().map_err(|_| self.err(format!("invalid number '{text}'")))?;
        self.pos = end;
        Ok(v)
    }

    fn integer(&mut self, what: &str) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(format!("expected {what}")));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| ParseError {
            line: self.line,
            col: start + 1,
            msg: format!("{what} out of range"),
        })
    }

    /// Parses `x<i>[^p]`, appending letters to `word`.
    fn factor(&mut self, word: &mut Vec<u16>) -> Result<(), ParseError> {
        match self.peek() {
            Some('x') | Some('X') => self.bump(),
            _ => return Err(self.err("expected variable")),
        }
        let col = self.pos + 1;
        let idx = self.integer("variable index")?;
        if idx == 0 || idx > u16::MAX as usize {
            return Err(ParseError { line: self.line, col, msg: "variable index must be in 1..=65535".into() });
        }
        let mut power = 1;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            power = self.integer("exponent")?;
        }
        word.extend(std::iter::repeat_n(idx as u16, power));
        Ok(())
    }

    fn term(&mut self) -> Result<(Word, f64), ParseError> {
        let mut coef = 1.0;
        let mut letters = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => {
                coef = self.number()?;
                match self.peek() {
                    Some('*') => {
                        self.bump();
                        self.factor(&mut letters)?;
                    }
                    Some('x') | Some('X') => self.factor(&mut letters)?,
                    _ => return Ok((Word::one(), coef)),
                }
            }
            Some('x') | Some('X') => self.factor(&mut letters)?,
            Some(c) => return Err(self.err(format!("unexpected '{c}'"))),
            None => return Err(self.err("unexpected end of input")),
        }
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    self.factor(&mut letters)?;
                }
                Some('x') | Some('X') => self.factor(&mut letters)?,
                _ => break,
            }
        }
        Ok((Word::new(letters), coef))
    }
}

fn parse_line_into(src: &str, line: usize, out: &mut NcPoly, allow_empty: bool) -> Result<bool, ParseError> {
    let mut cur = Cursor::new(src, line);
    if cur.peek().is_none() {
        return if allow_empty { Ok(false) } else { Err(cur.err("empty polynomial")) };
    }
    let mut sign = 1.0;
    if let Some(c @ ('+' | '-')) = cur.peek() {
        cur.bump();
        if c == '-' {
            sign = -1.0;
        }
    }
    loop {
        let (w, c) = cur.term()?;
        out.add_term(w, sign * c);
        match cur.peek() {
            None => break,
            Some('+') => sign = 1.0,
            Some('-') => sign = -1.0,
            Some(c) => return Err(cur.err(format!("unexpected '{c}'"))),
        }
        cur.bump();
    }
    Ok(true)
}

/// Parses one polynomial. Newlines are allowed between terms.
pub fn parse_poly(src: &str) -> Result<NcPoly, ParseError> {
    parse_poly_at(src, 1)
}

/// Like [`parse_poly`], reporting line numbers offset so the first line is `first_line`.
pub fn parse_poly_at(src: &str, first_line: usize) -> Result<NcPoly, ParseError> {
    let mut p = NcPoly::zero(0);
    let mut any = false;
    for (i, l) in src.lines().enumerate() {
        any |= parse_line_into(l, first_line + i, &mut p, true)?;
    }
    if !any {
        return Err(ParseError { line: first_line, col: 1, msg: "empty polynomial".into() });
    }
    Ok(p)
}
