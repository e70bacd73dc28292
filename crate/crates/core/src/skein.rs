//! HOMFLY evaluation by the skein relation
//! `l P(L+) + l^-1 P(L-) + m P(L0) = 0`, with `P(unknot) = 1`.
//!
//! Each node is simplified to a terminal shape, then split at the pivot
//! crossing `c_q` into a sign-flipped and a dropped child. Both children
//! are strictly smaller under `<_br`, so the recursion terminates.

use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::laurent::LaurentPoly2;
use crate::simplify::{simplify, Shape, SimplifyError, SimplifyOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error(transparent)]
    Simplify(#[from] SimplifyError),
    #[error("the unlink needs at least one strand")]
    NoStrands,
    #[error("cannot split an empty word")]
    EmptySplit,
    #[error("child {child} is not smaller than its parent {parent}")]
    NoDescent { parent: String, child: String },
}

/// `-l m^-1 - l^-1 m^-1`, the value of the 2-component unlink.
pub fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(1, -1, -1), (-1, -1, -1)])
}

/// `P` of the `n`-component unlink, `delta^(n-1)`.
pub fn unlink_polynomial(n: usize) -> Result<LaurentPoly2, SkeinError> {
    if n == 0 {
        return Err(SkeinError::NoStrands);
    }
    let exp = u32::try_from(n - 1).map_err(|_| SkeinError::NoStrands)?;
    Ok(delta().pow(exp))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinSplit {
    /// The pivot's sign flipped, already rewritten to a smaller word.
    pub flipped: BraidWord,
    /// The pivot smoothed away.
    pub dropped: BraidWord,
    pub coeff_flipped: LaurentPoly2,
    pub coeff_dropped: LaurentPoly2,
    /// 1-based position `q` of the pivot letter.
    pub pivot: usize,
    pub pivot_sign: i32,
}

/// Splits a terminal word at its pivot so that
/// `P(word) = coeff_flipped * P(flipped) + coeff_dropped * P(dropped)`.
pub fn split(outcome: &SimplifyOutcome) -> Result<SkeinSplit, SkeinError> {
    let gamma = &outcome.word;
    let c = gamma.letters();
    let n = gamma.strands();
    let q = match outcome.shape {
        Shape::Empty => return Err(SkeinError::EmptySplit),
        Shape::RepeatAt(q) | Shape::BraidTripleAt(q) => q,
    };
    let pivot = c[q - 1];

    let mut dropped = c.to_vec();
    dropped.remove(q - 1);

    let flipped = match outcome.shape {
        // -c_q c_q cancels
        Shape::RepeatAt(_) => {
            let mut v = c.to_vec();
            v.drain(q - 1..=q);
            v
        }
        // c_{q-1} (-c_q) c_{q-1} is a positive or negative braid triple,
        // equal to (-c_q) c_{q-1} (-c_q).
        Shape::BraidTripleAt(_) => {
            let mut v = Vec::with_capacity(c.len());
            v.extend_from_slice(&c[..q - 2]);
            v.extend([-pivot, c[q - 2], -pivot]);
            v.extend_from_slice(&c[q + 1..]);
            v
        }
        Shape::Empty => unreachable!(),
    };

    let (coeff_flipped, coeff_dropped) = if pivot > 0 {
        // word is L+: P+ = -l^-2 P- - l^-1 m P0
        (
            LaurentPoly2::monomial(-1, -2, 0),
            LaurentPoly2::monomial(-1, -1, 1),
        )
    } else {
        // word is L-: P- = -l^2 P+ - l m P0
        (
            LaurentPoly2::monomial(-1, 2, 0),
            LaurentPoly2::monomial(-1, 1, 1),
        )
    };

    let out = SkeinSplit {
        flipped: BraidWord::from_parts(n, flipped),
        dropped: BraidWord::from_parts(n, dropped),
        coeff_flipped,
        coeff_dropped,
        pivot: q,
        pivot_sign: pivot.signum(),
    };
    for child in [&out.flipped, &out.dropped] {
        if child >= gamma {
            return Err(SkeinError::NoDescent {
                parent: gamma.to_string(),
                child: child.to_string(),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EvalStats {
    /// Braid words materialized as recursion nodes, the root and both
    /// children of every split, counted before any cache lookup.
    pub nodes_total: u64,
    /// Most nodes alive at once under depth-first evaluation.
    pub nodes_peak: u64,
    pub max_depth: u32,
    pub cache_hits: u64,
    pub elapsed_ms: f64,
}

/// Results keyed by simplified word.
#[derive(Clone, Debug, Default)]
pub struct HomflyCache {
    map: HashMap<BraidWord, LaurentPoly2>,
    canonicalize: bool,
}

impl HomflyCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Keys by the least rotation of the simplified word instead.
    pub fn canonicalizing() -> Self {
        HomflyCache {
            map: HashMap::new(),
            canonicalize: true,
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn key(&self, simplified: &BraidWord) -> BraidWord {
        if self.canonicalize {
            simplified.least_rotation()
        } else {
            simplified.clone()
        }
    }
}

/// `P` of the closure of `word`, without caching.
pub fn homfly(word: &BraidWord) -> Result<(LaurentPoly2, EvalStats), SkeinError> {
    evaluate(word, None)
}

/// As [`homfly`], reading and filling `cache`.
pub fn homfly_memoized(
    word: &BraidWord,
    cache: &mut HomflyCache,
) -> Result<(LaurentPoly2, EvalStats), SkeinError> {
    evaluate(word, Some(cache))
}

enum Task {
    Eval {
        word: BraidWord,
        depth: u32,
    },
    Combine {
        key: BraidWord,
        coeff_flipped: LaurentPoly2,
        coeff_dropped: LaurentPoly2,
    },
}

fn evaluate(
    word: &BraidWord,
    mut cache: Option<&mut HomflyCache>,
) -> Result<(LaurentPoly2, EvalStats), SkeinError> {
    let start = Instant::now();
    let mut stats = EvalStats {
        nodes_total: 1,
        nodes_peak: 1,
        ..EvalStats::default()
    };
    let mut live: u64 = 1;
    let mut tasks = vec![Task::Eval {
        word: word.clone(),
        depth: 0,
    }];
    let mut values: Vec<LaurentPoly2> = Vec::new();

    while let Some(task) = tasks.pop() {
        match task {
            Task::Eval { word, depth } => {
                stats.max_depth = stats.max_depth.max(depth);
                let outcome = simplify(&word)?;
                let key = match cache.as_deref() {
                    Some(c) => c.key(&outcome.word),
                    None => outcome.word.clone(),
                };
                if let Some(hit) = cache.as_deref().and_then(|c| c.map.get(&key)) {
                    stats.cache_hits += 1;
                    values.push(hit.clone());
                    live -= 1;
                    continue;
                }
                if outcome.shape == Shape::Empty {
                    let value = unlink_polynomial(outcome.word.strands())?;
                    if let Some(c) = cache.as_deref_mut() {
                        c.map.insert(key, value.clone());
                    }
                    values.push(value);
                    live -= 1;
                    continue;
                }
                let s = split(&outcome)?;
                tasks.push(Task::Combine {
                    key,
                    coeff_flipped: s.coeff_flipped,
                    coeff_dropped: s.coeff_dropped,
                });
                tasks.push(Task::Eval {
                    word: s.dropped,
                    depth: depth + 1,
                });
                tasks.push(Task::Eval {
                    word: s.flipped,
                    depth: depth + 1,
                });
                stats.nodes_total += 2;
                live += 2;
                stats.nodes_peak = stats.nodes_peak.max(live);
            }
            Task::Combine {
                key,
                coeff_flipped,
                coeff_dropped,
            } => {
                let dropped = values.pop().expect("dropped child value");
                let flipped = values.pop().expect("flipped child value");
                let mut value = &coeff_flipped * &flipped;
                value += &(&coeff_dropped * &dropped);
                if let Some(c) = cache.as_deref_mut() {
                    c.map.insert(key, value.clone());
                }
                values.push(value);
                live -= 1;
            }
        }
    }

    debug_assert_eq!(values.len(), 1);
    stats.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok((values.pop().unwrap_or_default(), stats))
}

/// JSON record for one evaluation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub input: String,
    pub simplified: String,
    pub homfly: LaurentPoly2,
    pub stats: EvalStats,
}

impl EvalRecord {
    pub fn new(
        input: &BraidWord,
        simplified: &BraidWord,
        homfly: LaurentPoly2,
        stats: EvalStats,
    ) -> Self {
        EvalRecord {
            input: input.to_string(),
            simplified: simplified.to_string(),
            homfly,
            stats,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn unlinks() {
        assert_eq!(unlink_polynomial(1).unwrap(), LaurentPoly2::one());
        assert_eq!(unlink_polynomial(2).unwrap(), p("-l*m^-1 - l^-1*m^-1"));
        assert_eq!(
            unlink_polynomial(3).unwrap(),
            p("l^2*m^-2 + 2*m^-2 + l^-2*m^-2")
        );
        assert_eq!(unlink_polynomial(0), Err(SkeinError::NoStrands));
    }

    #[test]
    fn split_repeat() {
        let o = simplify(&w("[2; 1,1,1]")).unwrap();
        let s = split(&o).unwrap();
        assert_eq!(s.flipped, w("[2; 1]"));
        assert_eq!(s.dropped, w("[2; 1,1]"));
        assert_eq!(s.coeff_flipped, p("-l^-2"));
        assert_eq!(s.coeff_dropped, p("-l^-1*m"));
        assert_eq!((s.pivot, s.pivot_sign), (1, 1));
    }

    #[test]
    fn split_braid_triple() {
        let o = simplify(&w("[3; 1,-2,1,-2]")).unwrap();
        let s = split(&o).unwrap();
        assert_eq!(s.flipped, w("[3; 2,1,2,-2]"));
        assert_eq!(s.dropped, w("[3; 1,1,-2]"));
        assert_eq!(s.coeff_flipped, p("-l^2"));
        assert_eq!(s.coeff_dropped, p("-l*m"));
        assert_eq!((s.pivot, s.pivot_sign), (2, -1));
    }

    #[test]
    fn split_rejects_empty() {
        let o = simplify(&w("[3; -]")).unwrap();
        assert_eq!(split(&o), Err(SkeinError::EmptySplit));
    }

    #[test]
    fn small_goldens() {
        assert_eq!(homfly(&w("[1; -]")).unwrap().0, LaurentPoly2::one());
        assert_eq!(
            homfly(&w("[2; 1,1]")).unwrap().0,
            p("l^-1*m^-1 + l^-3*m^-1 - l^-1*m")
        );
        assert_eq!(
            homfly(&w("[2; 1,1,1]")).unwrap().0,
            p("l^-2*m^2 - 2*l^-2 - l^-4")
        );
    }

    #[test]
    fn stats_for_trefoil() {
        let (_, s) = homfly(&w("[2; 1,1,1]")).unwrap();
        // root, [2; 1], [2; 1,1], then [2; -], [2; 1]
        assert_eq!(s.nodes_total, 5);
        assert_eq!(s.max_depth, 2);
        assert_eq!(s.cache_hits, 0);
        assert!(s.nodes_peak <= s.nodes_total);
        let (_, s) = homfly(&w("[1; -]")).unwrap();
        assert_eq!((s.nodes_total, s.nodes_peak, s.max_depth), (1, 1, 0));
    }

    #[test]
    fn warm_cache() {
        let mut cache = HomflyCache::new();
        let x = w("[2; 1,1,1]");
        let (a, _) = homfly_memoized(&x, &mut cache).unwrap();
        let (b, s) = homfly_memoized(&x, &mut cache).unwrap();
        assert_eq!(a, b);
        assert!(s.cache_hits >= 1);
        assert_eq!(s.nodes_total, 1);
    }

    #[test]
    fn canonical_cache_shares_rotations() {
        let mut cache = HomflyCache::canonicalizing();
        let (a, _) = homfly_memoized(&w("[4; 2,3,-1]"), &mut cache).unwrap();
        let (b, s) = homfly_memoized(&w("[4; -1,2,3]"), &mut cache).unwrap();
        assert_eq!(a, b);
        assert_eq!(s.cache_hits, 1);

        // rotations that survive simplification land on one key
        let mut cache = HomflyCache::canonicalizing();
        let (a, _) = homfly_memoized(&w("[2; 1,1,1]"), &mut cache).unwrap();
        let before = cache.len();
        let (b, _) = homfly_memoized(&w("[2; 1,1,1]").rotated(1), &mut cache).unwrap();
        assert_eq!((a, cache.len()), (b, before));
    }

    #[test]
    fn eval_record_json_shape() {
        let x = w("[2; 1,1]");
        let (poly, stats) = homfly(&x).unwrap();
        let rec = EvalRecord::new(&x, &simplify(&x).unwrap().word, poly, stats);
        let v: serde_json::Value = serde_json::to_value(&rec).unwrap();
        assert_eq!(v["input"], "[2; 1,1]");
        assert_eq!(v["simplified"], "[2; 1,1]");
        assert!(v["homfly"].is_array());
        for key in [
            "nodes_total",
            "nodes_peak",
            "max_depth",
            "cache_hits",
            "elapsed_ms",
        ] {
            assert!(v["stats"].get(key).is_some(), "{key}");
        }
    }
}
