use std::fmt;

use super::BraidWord;

/// Where each strand position at the top of the braid ends up at the
/// bottom. Cycles correspond to components of the closure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosurePermutation {
    /// `image[p]` is the bottom position of the strand entering at top
    /// position `p` (0-based).
    image: Vec<usize>,
}

impl ClosurePermutation {
    pub fn of(word: &BraidWord) -> Self {
        // position[p]: current position of the strand that started at p.
        let mut at = (0..word.strands()).collect::<Vec<_>>();
        let mut position = at.clone();
        for &b in word.letters() {
            let i = b.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
            position[at[i]] = i;
            position[at[i + 1]] = i + 1;
        }
        ClosurePermutation { image: position }
    }

    pub fn identity(n: usize) -> Self {
        ClosurePermutation {
            image: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// 1-based image of 1-based `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.image[p - 1] + 1
    }

    /// Cycles in 1-based notation, each starting from its least element,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut cycles = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.image[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for ClosurePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if moved.is_empty() {
            return f.write_str("()");
        }
        for cycle in moved {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}
