//! The elementary relations generating closed-braid equivalence.
//!
//! Positions are read cyclically: a move "at `j`" acts on the letters at
//! `j, j+1, ...` modulo the word length, which amounts to rotating `j` to
//! the head, applying the relation there, and rotating back.

use thiserror::Error;

use super::BraidWord;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ElementaryMove {
    /// Swap letters `at` and `at+1` when their indices differ by more than one.
    Commute { at: usize },
    /// Rewrite `b_at b_at+1 b_at+2` by the braid relation
    /// `(x, y, z) -> (sgn z |y|, sgn y |x|, sgn x |y|)`; excluded for the
    /// alternating patterns `+-+` and `-+-`.
    BraidTriple { at: usize },
    /// Delete `b_at, b_at+1` when `b_at = -b_at+1`.
    CancelPair { at: usize },
    /// Drop the first letter and one strand when every other letter has a
    /// larger index; the remaining letters shift down by one.
    Destabilize,
    /// Cyclic shift to the left.
    Rotate { by: usize },
    /// Inverse of `CancelPair`: insert `letter, -letter` before position `at`.
    InsertPair { at: usize, letter: i32 },
    /// Inverse of `Destabilize` on the first strand: add a strand and a
    /// leading `±1`, shifting the other letters up.
    Stabilize { positive: bool },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MoveKind {
    Commute,
    BraidTriple,
    CancelPair,
    Destabilize,
    Rotate,
    InsertPair,
    Stabilize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("position {at} out of range for a word of length {len}")]
    OutOfRange { at: usize, len: usize },
    #[error("commute needs ||b_j| - |b_j+1|| > 1")]
    NotFarApart,
    #[error("braid triple needs |b_j| = |b_j+2| adjacent to |b_j+1|")]
    NotBraidShaped,
    #[error("braid triple does not apply to alternating sign pattern")]
    AlternatingSigns,
    #[error("cancel needs b_j = -b_j+1")]
    NotInversePair,
    #[error("destabilize needs |b_j| > |b_1| for all j >= 2")]
    NotDestabilizable,
    #[error("letter {0} is not valid on this strand count")]
    BadLetter(i32),
}

impl ElementaryMove {
    pub fn kind(&self) -> MoveKind {
        match self {
            ElementaryMove::Commute { .. } => MoveKind::Commute,
            ElementaryMove::BraidTriple { .. } => MoveKind::BraidTriple,
            ElementaryMove::CancelPair { .. } => MoveKind::CancelPair,
            ElementaryMove::Destabilize => MoveKind::Destabilize,
            ElementaryMove::Rotate { .. } => MoveKind::Rotate,
            ElementaryMove::InsertPair { .. } => MoveKind::InsertPair,
            ElementaryMove::Stabilize { .. } => MoveKind::Stabilize,
        }
    }
}

fn span(len: usize, at: usize, width: usize) -> Result<(), MoveError> {
    if len < width || at >= len {
        Err(MoveError::OutOfRange { at, len })
    } else {
        Ok(())
    }
}

pub(crate) fn braid_triple_image(x: i32, y: i32, z: i32) -> [i32; 3] {
    let (ax, ay) = (x.abs(), y.abs());
    [z.signum() * ay, y.signum() * ax, x.signum() * ay]
}

pub(crate) fn is_alternating(x: i32, y: i32, z: i32) -> bool {
    x.signum() == -y.signum() && y.signum() == -z.signum()
}

impl BraidWord {
    pub fn apply_move(&self, mv: ElementaryMove) -> Result<BraidWord, MoveError> {
        let n = self.strands;
        let k = self.letters.len();
        let b = &self.letters;
        match mv {
            ElementaryMove::Commute { at } => {
                span(k, at, 2)?;
                let next = (at + 1) % k;
                if b[at].abs().abs_diff(b[next].abs()) <= 1 {
                    return Err(MoveError::NotFarApart);
                }
                let mut letters = b.clone();
                letters.swap(at, next);
                Ok(BraidWord::from_parts(n, letters))
            }
            ElementaryMove::BraidTriple { at } => {
                span(k, at, 3)?;
                let idx = [at, (at + 1) % k, (at + 2) % k];
                let [x, y, z] = idx.map(|i| b[i]);
                if x.abs() != z.abs() || x.abs().abs_diff(y.abs()) != 1 {
                    return Err(MoveError::NotBraidShaped);
                }
                if is_alternating(x, y, z) {
                    return Err(MoveError::AlternatingSigns);
                }
                let mut letters = b.clone();
                for (i, v) in idx.into_iter().zip(braid_triple_image(x, y, z)) {
                    letters[i] = v;
                }
                Ok(BraidWord::from_parts(n, letters))
            }
            ElementaryMove::CancelPair { at } => {
                span(k, at, 2)?;
                let next = (at + 1) % k;
                if b[at] != -b[next] {
                    return Err(MoveError::NotInversePair);
                }
                let letters = b
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != at && i != next)
                    .map(|(_, &v)| v)
                    .collect();
                Ok(BraidWord::from_parts(n, letters))
            }
            ElementaryMove::Destabilize => {
                let Some(&head) = b.first() else {
                    return Err(MoveError::NotDestabilizable);
                };
                if b[1..].iter().any(|v| v.abs() <= head.abs()) {
                    return Err(MoveError::NotDestabilizable);
                }
                let letters = b[1..].iter().map(|&v| v - v.signum()).collect();
                Ok(BraidWord::from_parts(n - 1, letters))
            }
            ElementaryMove::Rotate { by } => Ok(self.rotated(by)),
            ElementaryMove::InsertPair { at, letter } => {
                if at > k {
                    return Err(MoveError::OutOfRange { at, len: k });
                }
                if letter == 0 || letter.unsigned_abs() as usize >= n {
                    return Err(MoveError::BadLetter(letter));
                }
                let mut letters = b.clone();
                letters.splice(at..at, [letter, -letter]);
                Ok(BraidWord::from_parts(n, letters))
            }
            ElementaryMove::Stabilize { positive } => {
                let head = if positive { 1 } else { -1 };
                let letters = std::iter::once(head)
                    .chain(b.iter().map(|&v| v + v.signum()))
                    .collect();
                Ok(BraidWord::from_parts(n + 1, letters))
            }
        }
    }

    /// Every applicable move that does not lengthen the word, one rotation
    /// (by 1) included.
    pub fn reducing_moves(&self) -> Vec<ElementaryMove> {
        let k = self.len();
        let mut out = Vec::new();
        for at in 0..k {
            for mv in [
                ElementaryMove::Commute { at },
                ElementaryMove::BraidTriple { at },
                ElementaryMove::CancelPair { at },
            ] {
                if self.apply_move(mv).is_ok() {
                    out.push(mv);
                }
            }
        }
        if self.apply_move(ElementaryMove::Destabilize).is_ok() {
            out.push(ElementaryMove::Destabilize);
        }
        if k > 1 {
            out.push(ElementaryMove::Rotate { by: 1 });
        }
        out
    }

    /// Every lengthening move: pair insertions at each gap with each letter,
    /// and both stabilizations.
    pub fn growing_moves(&self) -> Vec<ElementaryMove> {
        let n = self.strands as i32;
        let mut out = Vec::new();
        for at in 0..=self.len() {
            for g in 1..n {
                out.push(ElementaryMove::InsertPair { at, letter: g });
                out.push(ElementaryMove::InsertPair { at, letter: -g });
            }
        }
        out.push(ElementaryMove::Stabilize { positive: true });
        out.push(ElementaryMove::Stabilize { positive: false });
        out
    }
}
