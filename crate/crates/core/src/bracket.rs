//! Jones polynomial straight from the closed-braid diagram by the Kauffman
//! bracket state sum. Independent of the skein engine; used to cross-check
//! it.
//!
//! `<D> = sum over states of A^(#A - #B) d^(loops - 1)` with
//! `d = -A^2 - A^-2`, then `V = (-A)^(-3 w) <D>` at `t = A^-4`. For a
//! positive letter the A-smoothing is the vertical one (the oriented
//! smoothing), for a negative letter the horizontal one.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::specialize::GaussLaurent1;

/// Longest word the state sum accepts.
pub const MAX_BRACKET_LETTERS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("state sum limited to {MAX_BRACKET_LETTERS} crossings, word has {0}")]
    TooLarge(usize),
}

/// One crossing of a closed-braid diagram. Strands run top to bottom; the
/// strand entering at `top[0]` leaves at `bottom[1]` and vice versa.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub top: [usize; 2],
    pub bottom: [usize; 2],
    /// +1 for a positive letter.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    /// Edges are numbered `0..edge_count`; strands without crossings are
    /// single closed edges.
    pub edge_count: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
        ra != rb
    }
}

fn count_classes(uf: &mut UnionFind) -> usize {
    (0..uf.0.len()).filter(|&x| uf.find(x) == x).count()
}

impl PlanarDiagram {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strands();
        let k = word.len();
        // arc (level, position) for levels 0..=k; level k is glued to level 0
        let arc = |level: usize, pos: usize| level * n + pos;
        let mut uf = UnionFind::new((k + 1) * n);
        for (level, &b) in word.letters().iter().enumerate() {
            let i = b.unsigned_abs() as usize - 1;
            for pos in (0..n).filter(|&p| p != i && p != i + 1) {
                uf.union(arc(level, pos), arc(level + 1, pos));
            }
        }
        for pos in 0..n {
            uf.union(arc(k, pos), arc(0, pos));
        }

        let mut ids = BTreeMap::new();
        let mut edge = |uf: &mut UnionFind, a: usize| {
            let root = uf.find(a);
            let next = ids.len();
            *ids.entry(root).or_insert(next)
        };
        let mut crossings = Vec::with_capacity(k);
        for (level, &b) in word.letters().iter().enumerate() {
            let i = b.unsigned_abs() as usize - 1;
            crossings.push(Crossing {
                top: [
                    edge(&mut uf, arc(level, i)),
                    edge(&mut uf, arc(level, i + 1)),
                ],
                bottom: [
                    edge(&mut uf, arc(level + 1, i)),
                    edge(&mut uf, arc(level + 1, i + 1)),
                ],
                sign: b.signum() as i8,
            });
        }
        for pos in 0..n {
            edge(&mut uf, arc(0, pos));
        }
        PlanarDiagram {
            crossings,
            edge_count: ids.len(),
        }
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    /// Link components, following strands through each crossing.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.edge_count);
        for c in &self.crossings {
            uf.union(c.top[0], c.bottom[1]);
            uf.union(c.top[1], c.bottom[0]);
        }
        count_classes(&mut uf)
    }

    /// Loops left after smoothing every crossing; bit `j` of `state` set
    /// means crossing `j` takes its B-smoothing.
    fn loops(&self, state: u64) -> usize {
        let mut uf = UnionFind::new(self.edge_count);
        for (j, c) in self.crossings.iter().enumerate() {
            let b_smoothing = state >> j & 1 == 1;
            let vertical = b_smoothing == (c.sign < 0);
            if vertical {
                uf.union(c.top[0], c.bottom[0]);
                uf.union(c.top[1], c.bottom[1]);
            } else {
                uf.union(c.top[0], c.top[1]);
                uf.union(c.bottom[0], c.bottom[1]);
            }
        }
        count_classes(&mut uf)
    }

    /// Index into the `(#A - #B, loops)` tally.
    fn slot(&self, state: u64) -> usize {
        let k = self.crossings.len();
        let b_count = state.count_ones() as usize;
        // #A - #B + k = 2 (k - #B)
        let a_minus_b = 2 * (k - b_count);
        a_minus_b * (self.edge_count + 1) + self.loops(state)
    }

    fn tally_len(&self) -> usize {
        (2 * self.crossings.len() + 1) * (self.edge_count + 1)
    }

    fn tally_range(&self, states: std::ops::Range<u64>) -> Vec<u64> {
        let mut tally = vec![0u64; self.tally_len()];
        for s in states {
            tally[self.slot(s)] += 1;
        }
        tally
    }

    fn state_tally_sequential(&self) -> Vec<u64> {
        self.tally_range(0..1u64 << self.crossings.len())
    }

    #[cfg(feature = "parallel")]
    fn state_tally_parallel(&self) -> Vec<u64> {
        use rayon::prelude::*;

        const CHUNK: u64 = 1 << 10;
        let total = 1u64 << self.crossings.len();
        let chunks = total.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| self.tally_range(c * CHUNK..((c + 1) * CHUNK).min(total)))
            .reduce(
                || vec![0u64; self.tally_len()],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    }

    /// Laurent polynomial in `A`, keyed by exponent.
    fn bracket_from_tally(&self, tally: &[u64]) -> BTreeMap<i32, BigInt> {
        let k = self.crossings.len() as i32;
        let width = self.edge_count + 1;
        let d = BTreeMap::from([(2, BigInt::from(-1)), (-2, BigInt::from(-1))]);
        let mut d_pows = vec![BTreeMap::from([(0, BigInt::from(1))])];
        let mut out: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (idx, &count) in tally.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let a_exp = (idx / width) as i32 - k;
            let loops = idx % width;
            while d_pows.len() < loops {
                let last = d_pows.last().cloned().unwrap_or_default();
                d_pows.push(mul_a(&last, &d));
            }
            for (&e, c) in &d_pows[loops - 1] {
                *out.entry(e + a_exp).or_default() += c * count;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn mul_a(x: &BTreeMap<i32, BigInt>, y: &BTreeMap<i32, BigInt>) -> BTreeMap<i32, BigInt> {
    let mut out: BTreeMap<i32, BigInt> = BTreeMap::new();
    for (a, u) in x {
        for (b, v) in y {
            *out.entry(a + b).or_default() += u * v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn normalize(diagram: &PlanarDiagram, bracket: BTreeMap<i32, BigInt>) -> GaussLaurent1 {
    // (-A)^(-3w), then A^e = t^(-e/4) = s^(-e/2)
    let w = diagram.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    GaussLaurent1::from_real(bracket.into_iter().map(|(e, c)| {
        let e = e - 3 * w;
        debug_assert!(e % 2 == 0, "odd power of A in a normalized bracket");
        (-e / 2, c * sign)
    }))
}

fn check_size(word: &BraidWord) -> Result<PlanarDiagram, BracketError> {
    if word.len() > MAX_BRACKET_LETTERS {
        return Err(BracketError::TooLarge(word.len()));
    }
    Ok(PlanarDiagram::of(word))
}

/// Jones polynomial of the closure by the state sum, parallel over states
/// when the `parallel` feature is enabled.
pub fn jones_via_bracket(word: &BraidWord) -> Result<GaussLaurent1, BracketError> {
    let diagram = check_size(word)?;
    #[cfg(feature = "parallel")]
    let tally = diagram.state_tally_parallel();
    #[cfg(not(feature = "parallel"))]
    let tally = diagram.state_tally_sequential();
    Ok(normalize(&diagram, diagram.bracket_from_tally(&tally)))
}

/// Single-threaded state sum.
pub fn jones_via_bracket_sequential(word: &BraidWord) -> Result<GaussLaurent1, BracketError> {
    let diagram = check_size(word)?;
    let tally = diagram.state_tally_sequential();
    Ok(normalize(&diagram, diagram.bracket_from_tally(&tally)))
}
