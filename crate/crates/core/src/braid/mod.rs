//! Braid words `[n; b1,...,bk]` and the operations that act on them
//! directly: weights, the ordered leading tag, mirror image and the
//! canonical text form.

mod closure;
mod minimize;
mod moves;
mod order;

pub use closure::ClosurePermutation;
pub use minimize::heuristic_minimize;
pub(crate) use moves::{braid_triple_image, is_alternating};
pub use moves::{ElementaryMove, MoveError, MoveKind};
pub use order::{compare, compare_with_rule, OrderRule};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A braid representative on `strands` strands. Letter `b` stands for
/// the generator `σ_|b|` raised to `sgn(b)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("letter {index} is zero")]
    ZeroLetter { index: usize },
    #[error("letter {index} ({letter}) needs |b| < {strands}")]
    LetterOutOfRange {
        index: usize,
        letter: i32,
        strands: usize,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{kind} at column {pos}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("integer out of range")]
    Overflow,
    #[error("unexpected trailing input")]
    Trailing,
    #[error(transparent)]
    Invalid(#[from] BraidError),
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for (index, &letter) in letters.iter().enumerate() {
            if letter == 0 {
                return Err(BraidError::ZeroLetter { index });
            }
            if letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange {
                    index,
                    letter,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The word `[n; -]`, whose closure is the `n`-component unlink.
    pub fn trivial(strands: usize) -> Self {
        assert!(strands >= 1, "strand count must be at least 1");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Builds a word without validation. Callers uphold the letter invariant.
    pub(crate) fn from_parts(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(strands >= 1);
        debug_assert!(letters
            .iter()
            .all(|&b| b != 0 && (b.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters with absolute value `m`.
    pub fn weight(&self, m: usize) -> usize {
        self.letters
            .iter()
            .filter(|b| b.unsigned_abs() as usize == m)
            .count()
    }

    /// `(w_1, ..., w_{n-1})`.
    pub fn weights(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands.saturating_sub(1)];
        for &b in &self.letters {
            counts[b.unsigned_abs() as usize - 1] += 1;
        }
        counts
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&b| i64::from(b.signum())).sum()
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&b| -b).collect(),
        }
    }

    /// Length of the initial run `|b_j| = |b_1| + j - 1`, or 0 when the
    /// first letter does not have the minimal absolute value (and for the
    /// empty word).
    pub fn ordered_leading_tag(&self) -> usize {
        let Some(first) = self.letters.first() else {
            return 0;
        };
        let base = first.unsigned_abs();
        if self.letters.iter().any(|b| b.unsigned_abs() < base) {
            return 0;
        }
        self.letters
            .iter()
            .enumerate()
            .take_while(|(j, b)| b.unsigned_abs() == base + *j as u32)
            .count()
    }

    pub fn closure_permutation(&self) -> ClosurePermutation {
        ClosurePermutation::of(self)
    }

    /// Number of components of the closed braid.
    pub fn component_count(&self) -> usize {
        self.closure_permutation().cycle_count()
    }

    /// Cyclic shift to the left by `by` positions.
    pub fn rotated(&self, by: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let by = by % letters.len();
            letters.rotate_left(by);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The `<_br`-least cyclic rotation.
    pub fn least_rotation(&self) -> BraidWord {
        (1..self.len().max(1))
            .map(|r| self.rotated(r))
            .fold(self.clone(), |best, w| if w < best { w } else { best })
    }
}

impl Ord for BraidWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        compare(self, other)
    }
}

impl PartialOrd for BraidWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; ", self.strands)?;
        if self.letters.is_empty() {
            f.write_str("-")?;
        } else {
            for (i, b) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{b}")?;
            }
        }
        f.write_str("]")
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid_word(s)
    }
}

/// Parses `[n; b1,b2,...]` or `[n; -]`. Whitespace is allowed between tokens.
pub fn parse_braid_word(text: &str) -> Result<BraidWord, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    cur.skip_ws();
    cur.expect('[', "'['")?;
    cur.skip_ws();
    let strands_pos = cur.pos;
    let strands = cur.integer()?;
    cur.skip_ws();
    cur.expect(';', "';'")?;
    cur.skip_ws();

    let mut letters = Vec::new();
    let mut letter_pos = Vec::new();
    let rest = &text[cur.pos..];
    let dash_only = rest.starts_with('-') && rest[1..].trim_start().starts_with(']');
    if dash_only {
        cur.pos += 1;
    } else {
        loop {
            cur.skip_ws();
            letter_pos.push(cur.pos);
            letters.push(cur.integer()?);
            cur.skip_ws();
            if cur.peek() == Some(',') {
                cur.pos += 1;
            } else {
                break;
            }
        }
    }
    cur.skip_ws();
    cur.expect(']', "',' or ']'")?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(ParseError {
            pos: cur.pos,
            kind: ParseErrorKind::Trailing,
        });
    }

    if strands < 1 {
        return Err(ParseError {
            pos: strands_pos,
            kind: BraidError::NoStrands.into(),
        });
    }
    let strands = usize::try_from(strands).map_err(|_| ParseError {
        pos: strands_pos,
        kind: ParseErrorKind::Overflow,
    })?;
    let letters: Vec<i32> = letters
        .into_iter()
        .zip(&letter_pos)
        .map(|(b, &pos)| {
            i32::try_from(b).map_err(|_| ParseError {
                pos,
                kind: ParseErrorKind::Overflow,
            })
        })
        .collect::<Result<_, _>>()?;
    BraidWord::new(strands, letters).map_err(|e| {
        let pos = match e {
            BraidError::ZeroLetter { index } | BraidError::LetterOutOfRange { index, .. } => {
                letter_pos[index]
            }
            BraidError::NoStrands => strands_pos,
        };
        ParseError {
            pos,
            kind: e.into(),
        }
    })
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError {
                pos: self.pos,
                kind: ParseErrorKind::Expected(what),
            })
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if matches!(bytes.get(end), Some(b'-' | b'+')) {
            end += 1;
        }
        let digits = end;
        while bytes.get(end).is_some_and(u8::is_ascii_digit) {
            end += 1;
        }
        if end == digits {
            return Err(ParseError {
                pos: start,
                kind: ParseErrorKind::Expected("integer"),
            });
        }
        let value = self.text[start..end].parse().map_err(|_| ParseError {
            pos: start,
            kind: ParseErrorKind::Overflow,
        })?;
        self.pos = end;
        Ok(value)
    }
}
