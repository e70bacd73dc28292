use std::collections::{HashSet, VecDeque};

use super::BraidWord;

/// Breadth-first search over words reachable by elementary moves, keeping
/// the `<_br`-least one seen. Words longer than the input by more than two
/// letters are not explored, and at most `budget` words are expanded.
///
/// This is a best-effort search; the result need not be the global minimum
/// of the equivalence class.
pub fn heuristic_minimize(word: &BraidWord, budget: usize) -> BraidWord {
    let max_len = word.len() + 2;
    let mut best = word.clone();
    let mut seen = HashSet::from([word.clone()]);
    let mut queue = VecDeque::from([word.clone()]);
    let mut expanded = 0;

    while let Some(current) = queue.pop_front() {
        if expanded >= budget {
            break;
        }
        expanded += 1;
        let moves = current
            .reducing_moves()
            .into_iter()
            .chain(current.growing_moves());
        for mv in moves {
            let Ok(next) = current.apply_move(mv) else {
                continue;
            };
            if next.len() > max_len || seen.contains(&next) {
                continue;
            }
            if next < best {
                best = next.clone();
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    best
}
