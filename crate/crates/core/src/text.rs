//! Textual syntax for partitions and multipartitions.
//!
//! Partitions are written as `[3,2,1]` with `[]` for the empty partition;
//! multipartitions as `[[2],[1,1],[]]`. Whitespace between tokens is
//! ignored. Printing (the `Display` impls) and parsing round-trip.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{MultiPartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    UnexpectedChar { at: usize },
    UnexpectedEnd,
    BadPartition,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::UnexpectedChar { at } => write!(f, "unexpected character at byte {at}"),
            ParseError::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseError::BadPartition => write!(f, "parts are not a weakly decreasing partition"),
        }
    }
}

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor { input, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.input[self.pos..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.input[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(_) => Err(ParseError::UnexpectedChar { at: self.pos }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.input[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(_) => Err(ParseError::UnexpectedChar { at: self.pos }),
                None => Err(ParseError::UnexpectedEnd),
            };
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| ParseError::BadPartition)
    }

    fn partition(&mut self) -> Result<Partition, ParseError> {
        self.expect('[')?;
        let mut parts = Vec::new();
        if self.peek() != Some(']') {
            loop {
                parts.push(self.number()?);
                match self.peek() {
                    Some(',') => self.expect(',')?,
                    _ => break,
                }
            }
        }
        self.expect(']')?;
        Partition::new(parts).map_err(|_| ParseError::BadPartition)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(ParseError::UnexpectedChar { at: self.pos }),
        }
    }
}

/// Parse `"[3,2,1]"` or `"[]"`.
pub fn parse_partition(input: &str) -> Result<Partition, ParseError> {
    let mut cur = Cursor::new(input);
    let p = cur.partition()?;
    cur.finish()?;
    Ok(p)
}

/// Parse `"[[2],[1,1],[]]"`.
pub fn parse_multipartition(input: &str) -> Result<MultiPartition, ParseError> {
    let mut cur = Cursor::new(input);
    cur.expect('[')?;
    let mut components = Vec::new();
    if cur.peek() != Some(']') {
        loop {
            components.push(cur.partition()?);
            match cur.peek() {
                Some(',') => cur.expect(',')?,
                _ => break,
            }
        }
    }
    cur.expect(']')?;
    cur.finish()?;
    Ok(MultiPartition::new(components))
}

/// Canonical text form of a partition (same as its `Display`).
pub fn render_partition(p: &Partition) -> String {
    use alloc::string::ToString;
    p.to_string()
}

/// Canonical text form of a multipartition (same as its `Display`).
pub fn render_multipartition(mp: &MultiPartition) -> String {
    use alloc::string::ToString;
    mp.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert_eq!(
            parse_partition("[3,2,1]").unwrap(),
            Partition::new(vec![3, 2, 1]).unwrap()
        );
        assert_eq!(
            parse_partition(" [ 3 , 2 ] ").unwrap(),
            Partition::new(vec![3, 2]).unwrap()
        );
        let mp = parse_multipartition("[[2],[1,1],[]]").unwrap();
        assert_eq!(mp.len(), 3);
        assert_eq!(mp.to_string(), "[[2],[1,1],[]]");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_partition("[1,2]").is_err());
        assert!(parse_partition("[1").is_err());
        assert!(parse_partition("[1]]").is_err());
        assert!(parse_partition("1,1").is_err());
        assert!(parse_multipartition("[[1],2]").is_err());
    }

    #[test]
    fn round_trip() {
        for text in ["[]", "[5]", "[4,2,2,1]"] {
            let p = parse_partition(text).unwrap();
            assert_eq!(render_partition(&p), text);
        }
        for text in ["[[]]", "[[2],[1,1],[]]", "[[3,1],[2]]"] {
            let mp = parse_multipartition(text).unwrap();
            assert_eq!(render_multipartition(&mp), text);
        }
    }
}
