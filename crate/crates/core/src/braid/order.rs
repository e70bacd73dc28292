use std::cmp::Ordering;
use std::fmt;

use super::BraidWord;

/// Which clause of the order decided a comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderRule {
    /// Fewer letters.
    Length = 1,
    /// Same length, fewer strands.
    Strands = 2,
    /// First differing weight `w_p`, scanning from `p = 1`.
    Weights = 3,
    /// First differing absolute letter value.
    AbsLetters = 4,
    /// First differing sign; the negative letter is smaller.
    Signs = 5,
}

impl fmt::Display for OrderRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {}", *self as u8)
    }
}

pub fn compare(a: &BraidWord, b: &BraidWord) -> Ordering {
    compare_with_rule(a, b).0
}

/// Compares under `<_br`, returning the deciding rule unless the words are
/// identical.
pub fn compare_with_rule(a: &BraidWord, b: &BraidWord) -> (Ordering, Option<OrderRule>) {
    let decided = |ord: Ordering, rule| (ord != Ordering::Equal).then_some((ord, Some(rule)));

    if let Some(r) = decided(a.len().cmp(&b.len()), OrderRule::Length) {
        return r;
    }
    if let Some(r) = decided(a.strands.cmp(&b.strands), OrderRule::Strands) {
        return r;
    }
    // Equal strand counts, so the weight vectors have equal length.
    if let Some(r) = decided(a.weights().cmp(&b.weights()), OrderRule::Weights) {
        return r;
    }
    let abs = a
        .letters
        .iter()
        .zip(&b.letters)
        .map(|(x, y)| x.unsigned_abs().cmp(&y.unsigned_abs()))
        .find(|o| o.is_ne());
    if let Some(ord) = abs {
        return (ord, Some(OrderRule::AbsLetters));
    }
    let signed = a
        .letters
        .iter()
        .zip(&b.letters)
        .map(|(x, y)| x.cmp(y))
        .find(|o| o.is_ne());
    match signed {
        Some(ord) => (ord, Some(OrderRule::Signs)),
        None => (Ordering::Equal, None),
    }
}
