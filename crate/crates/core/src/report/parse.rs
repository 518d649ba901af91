//! Text formats for matrices (`a,b;c,d`) and words (`AB^10A^2`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Letter, Mat2, Rational, Word};
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor {
            chars,
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(offset, _)| offset)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            self.pos = start;
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a digit, found '{c}'")),
                None => self.error("expected a digit, found end of input"),
            });
        }
        Ok(s.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut numer = self.digits()?;
        if negative {
            numer = -numer;
        }
        if self.peek() == Some('/') {
            self.bump();
            let position = self.offset();
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(Error::ZeroDenominator { position });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing '{c}'"))),
        }
    }
}

/// Parses `a,b;c,d` where each entry is an integer or a `p/q` fraction.
/// Whitespace is ignored anywhere.
pub fn parse_matrix_spec(text: &str) -> Result<Mat2> {
    let mut cur = Cursor::new(text);
    let a = cur.rational()?;
    cur.expect(',')?;
    let b = cur.rational()?;
    cur.expect(';')?;
    let c = cur.rational()?;
    cur.expect(',')?;
    let d = cur.rational()?;
    cur.finish()?;
    Ok(Mat2::new(a, b, c, d))
}

/// Parses a word over `{A, B}`; a letter may carry an exponent `^n`, n ≥ 1.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut cur = Cursor::new(text);
    let mut letters = Vec::new();
    while let Some(c) = cur.peek() {
        let letter = match c {
            'A' => Letter::A,
            'B' => Letter::B,
            other => return Err(cur.error(format!("unexpected '{other}', expected A or B"))),
        };
        cur.bump();
        let mut count = 1usize;
        if cur.peek() == Some('^') {
            cur.bump();
            if cur.peek() == Some('-') {
                return Err(cur.error("exponents must be positive"));
            }
            let position = cur.offset();
            let exp = cur.digits()?;
            count = usize::try_from(&exp).map_err(|_| Error::Parse {
                position,
                message: format!("exponent {exp} is too large"),
            })?;
            if count == 0 {
                return Err(Error::Parse {
                    position,
                    message: "exponents must be positive".into(),
                });
            }
        }
        letters.extend(std::iter::repeat_n(letter, count));
    }
    Ok(Word::new(letters))
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matrix_spec(s)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}
