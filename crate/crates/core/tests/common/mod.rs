//! Shared generators for the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skein_core::braid::{ElementaryMove, MoveKind};
use skein_core::BraidWord;

/// Longest word the random move walks may produce.
pub const LENGTH_CAP: usize = 14;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut impl Rng, max_strands: usize, max_letters: usize) -> BraidWord {
    let n = rng.gen_range(1..=max_strands);
    let k = if n == 1 {
        0
    } else {
        rng.gen_range(0..=max_letters)
    };
    let letters = (0..k)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// A walk of up to `steps` legal moves, staying within `cap` letters.
pub fn random_walk(
    rng: &mut impl Rng,
    start: &BraidWord,
    steps: usize,
    cap: usize,
) -> (BraidWord, Vec<ElementaryMove>) {
    let mut w = start.clone();
    let mut taken = Vec::new();
    for _ in 0..steps {
        let mut moves = w.reducing_moves();
        if w.len() + 2 <= cap {
            moves.extend(w.growing_moves());
        }
        // pick the kind first so the many insertions do not swamp the rest
        let mut kinds: Vec<MoveKind> = Vec::new();
        for m in &moves {
            if !kinds.contains(&m.kind()) {
                kinds.push(m.kind());
            }
        }
        let Some(&kind) = kinds.choose(rng) else {
            break;
        };
        moves.retain(|m| m.kind() == kind);
        let &mv = moves.choose(rng).expect("kind has a move");
        w = w.apply_move(mv).expect("listed moves apply");
        taken.push(mv);
    }
    (w, taken)
}

pub fn arb_word(max_strands: usize, max_letters: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        proptest::collection::vec(letter, 0..=max_letters)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}
