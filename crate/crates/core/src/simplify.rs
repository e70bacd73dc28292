//! Rewriting a braid word into one of three terminal shapes from which a
//! single skein step produces strictly smaller words.
//!
//! The loop is:
//!
//! * **S1** rotate the first letter of minimal index to the front; stop on
//!   the empty word.
//! * **S2** if that index occurs once, destabilize and restart.
//! * **S3** cancel adjacent inverse pairs; restart if anything cancelled.
//! * **S4** with `q` the ordered leading tag:
//!   * **4.1** move the block of letters following the tag whose index
//!     exceeds `|b_q| + 1` to the end, then back to S3;
//!   * **4.2** `|b_q+1| = |b_q|`: stop;
//!   * **4.3** `|b_q+1| < |b_q|`: commute `b_q+1` back next to its partner
//!     in the tag, then stop on an alternating sign pattern (4.3.1) or
//!     apply the braid relation and restart (4.3.2).
//!
//! Every restart strictly decreases the word under `<_br`; this is checked
//! as the loop runs.

use std::fmt;

use thiserror::Error;

use crate::braid::BraidWord;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Shape {
    /// No letters left; the closure is an unlink.
    Empty,
    /// Tag length `q` (1-based) with `c_q+1 = c_q`.
    RepeatAt(usize),
    /// Tag length `q` (1-based) with `c_q+1 = c_q-1` and the sign of
    /// `c_q+1` opposite to that of `c_q`.
    BraidTripleAt(usize),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Empty => f.write_str("Empty"),
            Shape::RepeatAt(q) => write!(f, "RepeatAt({q})"),
            Shape::BraidTripleAt(q) => write!(f, "BraidTripleAt({q})"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StepLabel {
    S1,
    S2,
    S3,
    S4_1,
    S4_2,
    S4_3_1,
    S4_3_2,
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepLabel::S1 => "S1",
            StepLabel::S2 => "S2",
            StepLabel::S3 => "S3",
            StepLabel::S4_1 => "S4.1",
            StepLabel::S4_2 => "S4.2",
            StepLabel::S4_3_1 => "S4.3.1",
            StepLabel::S4_3_2 => "S4.3.2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifyOutcome {
    pub word: BraidWord,
    pub shape: Shape,
    /// Letters removed by destabilization, in order.
    pub destabilized: Vec<i32>,
    pub trace: Option<Vec<(StepLabel, BraidWord)>>,
}

impl SimplifyOutcome {
    /// One `label word` line per recorded step.
    pub fn trace_lines(&self) -> Vec<String> {
        self.trace
            .iter()
            .flatten()
            .map(|(label, word)| format!("{label} {word}"))
            .collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplifyError {
    #[error("simplification exceeded its budget of {budget} steps on {input}")]
    IterationBudgetExceeded { input: String, budget: usize },
    #[error("simplification failed to decrease the word at {step} on {input}")]
    NoProgress { input: String, step: StepLabel },
}

pub fn simplify(word: &BraidWord) -> Result<SimplifyOutcome, SimplifyError> {
    Simplifier::new(word, false).run()
}

pub fn simplify_traced(word: &BraidWord) -> Result<SimplifyOutcome, SimplifyError> {
    Simplifier::new(word, true).run()
}

/// The terminal shape `word` already has, if any.
pub fn classify(word: &BraidWord) -> Option<Shape> {
    let c = word.letters();
    if c.is_empty() {
        return Some(Shape::Empty);
    }
    let q = word.ordered_leading_tag();
    if q == 0 || q >= c.len() {
        return None;
    }
    let (cq, next) = (c[q - 1], c[q]);
    if next == cq {
        return Some(Shape::RepeatAt(q));
    }
    if q >= 2 && next == c[q - 2] && next.signum() == -cq.signum() {
        return Some(Shape::BraidTripleAt(q));
    }
    None
}

struct Simplifier<'a> {
    input: &'a BraidWord,
    strands: usize,
    letters: Vec<i32>,
    destabilized: Vec<i32>,
    trace: Option<Vec<(StepLabel, BraidWord)>>,
    steps: usize,
    budget: usize,
}

enum Next {
    Restart(StepLabel),
    Done(Shape),
}

impl<'a> Simplifier<'a> {
    fn new(input: &'a BraidWord, trace: bool) -> Self {
        let k = input.len();
        Simplifier {
            input,
            strands: input.strands(),
            letters: input.letters().to_vec(),
            destabilized: Vec::new(),
            trace: trace.then(Vec::new),
            steps: 0,
            budget: 100 * (k + 1) * (k + 1) * input.strands(),
        }
    }

    fn word(&self) -> BraidWord {
        BraidWord::from_parts(self.strands, self.letters.clone())
    }

    fn record(&mut self, label: StepLabel) {
        if self.trace.is_some() {
            let w = self.word();
            if let Some(t) = self.trace.as_mut() {
                t.push((label, w));
            }
        }
    }

    fn tick(&mut self) -> Result<(), SimplifyError> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(SimplifyError::IterationBudgetExceeded {
                input: self.input.to_string(),
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn run(mut self) -> Result<SimplifyOutcome, SimplifyError> {
        let mut checkpoint: Option<BraidWord> = None;
        let mut cause = StepLabel::S1;
        loop {
            self.tick()?;
            let current = self.word();
            if let Some(prev) = &checkpoint {
                if current >= *prev {
                    return Err(SimplifyError::NoProgress {
                        input: self.input.to_string(),
                        step: cause,
                    });
                }
            }
            checkpoint = Some(current);

            match self.pass()? {
                Next::Restart(label) => cause = label,
                Next::Done(shape) => {
                    debug_assert_eq!(classify(&self.word()), Some(shape));
                    return Ok(SimplifyOutcome {
                        word: self.word(),
                        shape,
                        destabilized: self.destabilized,
                        trace: self.trace,
                    });
                }
            }
        }
    }

    /// One pass from S1 up to the next restart or stop.
    fn pass(&mut self) -> Result<Next, SimplifyError> {
        // S1
        if self.letters.is_empty() {
            self.record(StepLabel::S1);
            return Ok(Next::Done(Shape::Empty));
        }
        let min = self.letters.iter().map(|b| b.abs()).min().unwrap_or(0);
        let first_min = self
            .letters
            .iter()
            .position(|b| b.abs() == min)
            .unwrap_or(0);
        self.letters.rotate_left(first_min);
        self.record(StepLabel::S1);

        // S2
        if self.letters[1..].iter().all(|b| b.abs() > min) {
            let head = self.letters.remove(0);
            self.destabilized.push(head);
            for b in &mut self.letters {
                *b -= b.signum();
            }
            self.strands -= 1;
            self.record(StepLabel::S2);
            return Ok(Next::Restart(StepLabel::S2));
        }

        loop {
            self.tick()?;
            // S3
            if self.cancel_pairs() {
                self.record(StepLabel::S3);
                return Ok(Next::Restart(StepLabel::S3));
            }

            // S4
            let b = &mut self.letters;
            let q = b
                .iter()
                .enumerate()
                .take_while(|(j, v)| v.abs() == min + *j as i32)
                .count();
            // The head has weight >= 2 here, so the tag cannot cover the word.
            debug_assert!(q >= 1 && q < b.len());
            let tag_top = b[q - 1].abs();
            let next = b[q].abs();

            if next > tag_top + 1 {
                // 4.1: b[q..end] all exceed tag_top + 1; move them to the back.
                let end = (q..b.len())
                    .find(|&j| b[j].abs() <= tag_top + 1)
                    .unwrap_or(b.len());
                b[q..].rotate_left(end - q);
                self.record(StepLabel::S4_1);
                continue;
            }
            if next == tag_top {
                // Step 3 already ruled out b[q] = -b[q-1].
                self.record(StepLabel::S4_2);
                return Ok(Next::Done(Shape::RepeatAt(q)));
            }

            // 4.3: partner of b[q] in the tag sits at m0 (0-based).
            let m0 = (next - min) as usize;
            let moved = b.remove(q);
            b.insert(m0 + 2, moved);
            // Closing the gap left by `moved` can create a new inverse pair.
            if has_inverse_pair(b) {
                continue;
            }
            let (x, y, z) = (b[m0], b[m0 + 1], b[m0 + 2]);
            if crate::braid::is_alternating(x, y, z) {
                self.record(StepLabel::S4_3_1);
                return Ok(Next::Done(Shape::BraidTripleAt(m0 + 2)));
            }
            // 4.3.2: x y z -> (sgn z |y|)(sgn y |x|)(sgn x |y|), then the
            // first of the three is commuted to the front and rotated to the end.
            let [front, mid, last] = crate::braid::braid_triple_image(x, y, z);
            let mut rewritten = Vec::with_capacity(b.len());
            rewritten.extend_from_slice(&b[..m0]);
            rewritten.push(mid);
            rewritten.push(last);
            rewritten.extend_from_slice(&b[m0 + 3..]);
            rewritten.push(front);
            *b = rewritten;
            self.record(StepLabel::S4_3_2);
            return Ok(Next::Restart(StepLabel::S4_3_2));
        }
    }

    /// Free reduction of adjacent inverse pairs. Returns whether anything
    /// was removed.
    fn cancel_pairs(&mut self) -> bool {
        let before = self.letters.len();
        let mut out: Vec<i32> = Vec::with_capacity(before);
        for &b in &self.letters {
            if out.last() == Some(&-b) {
                out.pop();
            } else {
                out.push(b);
            }
        }
        self.letters = out;
        self.letters.len() < before
    }
}

fn has_inverse_pair(letters: &[i32]) -> bool {
    letters.windows(2).any(|p| p[0] == -p[1])
}
