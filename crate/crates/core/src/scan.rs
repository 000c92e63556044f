//! Tiny character cursor shared by the text parsers.

use num_bigint::BigInt;

use crate::error::ParseError;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    /// Next non-whitespace character, without consuming it.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// The character after the next one (whitespace-insensitive).
    pub fn peek_second(&mut self) -> Option<char> {
        self.skip_ws();
        let mut it = self.rest().char_indices();
        let (_, first) = it.next()?;
        let after = &self.rest()[first.len_utf8()..];
        after.trim_start().chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error([format!("'{c}'")]))
        }
    }

    /// Unsigned decimal integer.
    pub fn uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let digits: &str = {
            let rest = self.rest();
            let end = rest
                .char_indices()
                .find(|(_, c)| !c.is_ascii_digit())
                .map_or(rest.len(), |(i, _)| i);
            &rest[..end]
        };
        if digits.is_empty() {
            return None;
        }
        self.pos += digits.len();
        digits.parse().ok()
    }

    pub fn small_uint(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        self.uint()
            .and_then(|n| u32::try_from(n).ok())
            .ok_or_else(|| ParseError::new(at, ["small non-negative integer"]))
    }

    pub fn error<S: Into<String>>(&mut self, expected: impl IntoIterator<Item = S>) -> ParseError {
        self.skip_ws();
        ParseError::new(self.pos, expected)
    }

    pub fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(["end of input"]))
        }
    }
}
