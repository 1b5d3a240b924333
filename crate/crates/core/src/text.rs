//! Text syntax for words and ring expressions.
//!
//! ```text
//! word     := "1" | syllable ("*" syllable)*
//! syllable := name ("^" signed_int)?
//! ringexpr := "0" | ["-"] term (("+" | "-") term)*
//! term     := [unsigned_int "*"] word
//! ```
//!
//! Whitespace between tokens is ignored. Output is canonical: terms in the
//! canonical element order, exponent `1` and coefficient `1` omitted.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::disc::SrData;
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, Syllable};
use crate::ring::RingElement;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn describe_next(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("unexpected {c:?}"),
            None => "unexpected end of input".to_string(),
        }
    }

    /// `syllable ("*" syllable)*`, or the literal `1`, multiplied out.
    fn word(&mut self, spec: &GroupSpec) -> Result<GroupElement> {
        if self.peek() == Some('1') {
            let start = self.pos;
            let n = self.unsigned()?;
            if n != BigInt::one() {
                return Err(Error::parse(start, format!("expected a word, found {n}")));
            }
            return Ok(GroupElement::identity());
        }
        let mut syllables = vec![self.syllable(spec)?];
        while self.eat('*') {
            syllables.push(self.syllable(spec)?);
        }
        spec.word(syllables)
    }

    fn syllable(&mut self, spec: &GroupSpec) -> Result<Syllable> {
        self.skip_ws();
        let start = self.pos;
        match self.src[self.pos..].chars().next() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => {
                let what = self.describe_next();
                return Err(Error::parse(
                    start,
                    format!("expected a factor name, {what}"),
                ));
            }
        }
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        let factor = spec
            .factor_index(name)
            .ok_or_else(|| Error::parse(start, format!("unknown factor {name:?}")))?;
        let exp = if self.eat('^') {
            let negative = self.eat('-');
            let e = self.unsigned()?;
            if negative {
                -e
            } else {
                e
            }
        } else {
            BigInt::one()
        };
        Ok(Syllable::new(factor, exp))
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            let what = self.describe_next();
            Err(self.error(what))
        }
    }
}

pub fn parse_word(text: &str, spec: &GroupSpec) -> Result<GroupElement> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty word"));
    }
    let w = cur.word(spec)?;
    cur.finish()?;
    Ok(w)
}

pub fn parse_ringexpr(text: &str, spec: &GroupSpec) -> Result<RingElement> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty expression"));
    }
    if cur.peek() == Some('0') {
        let start = cur.pos;
        let n = cur.unsigned()?;
        if n.is_zero() && cur.at_end() {
            return Ok(RingElement::zero());
        }
        return Err(Error::parse(start, "a literal 0 must stand alone"));
    }

    let mut out = RingElement::zero();
    let mut sign = if cur.eat('-') { -1 } else { 1 };
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let coeff = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let save = cur.pos;
            let n = cur.unsigned()?;
            if cur.eat('*') {
                n
            } else {
                cur.pos = save;
                BigInt::one()
            }
        } else {
            BigInt::one()
        };
        let g = cur.word(spec)?;
        if g.is_identity() {
            return Err(Error::validation(
                format!("term at {start}"),
                "the identity element is not allowed in Z[pi_1 \\ 1]",
            ));
        }
        out.add_term(g, coeff * sign);
        sign = if cur.eat('+') {
            1
        } else if cur.eat('-') {
            -1
        } else {
            break;
        };
    }
    cur.finish()?;
    Ok(out)
}

/// Display adapter for a word.
pub struct WordDisplay<'a> {
    spec: &'a GroupSpec,
    word: &'a GroupElement,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_char('1');
        }
        for (i, s) in self.word.syllables().iter().enumerate() {
            if i > 0 {
                f.write_char('*')?;
            }
            let name = self.spec.factors.get(s.factor).map_or("?", |x| x.name());
            f.write_str(name)?;
            if !s.exp.is_one() {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

pub struct RingDisplay<'a> {
    spec: &'a GroupSpec,
    value: &'a RingElement,
}

impl fmt::Display for RingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_zero() {
            return f.write_char('0');
        }
        for (i, (g, c)) in self.value.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_char('-')?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", self.spec.display_word(g))?;
        }
        Ok(())
    }
}

pub struct DiscDisplay<'a> {
    spec: &'a GroupSpec,
    data: &'a SrData,
}

impl fmt::Display for DiscDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("tubes=[")?;
        for (i, l) in self.data.double_tubes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.spec.display_word(l))?;
        }
        f.write_str("] discs=[")?;
        for (i, s) in self.data.sr_discs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let sign = if s.sign < 0 { '-' } else { '+' };
            write!(f, "{sign}{}", self.spec.display_word(&s.element))?;
        }
        f.write_char(']')
    }
}

impl GroupSpec {
    pub fn display_word<'a>(&'a self, word: &'a GroupElement) -> WordDisplay<'a> {
        WordDisplay { spec: self, word }
    }

    pub fn display_ring<'a>(&'a self, value: &'a RingElement) -> RingDisplay<'a> {
        RingDisplay { spec: self, value }
    }

    pub fn display_disc<'a>(&'a self, data: &'a SrData) -> DiscDisplay<'a> {
        DiscDisplay { spec: self, data }
    }
}
