//! Skein-relation link polynomials of closed braids.
//!
//! A link is given as a braid word `[n; b1,...,bk]`. Evaluation simplifies
//! the word into a terminal shape, applies the skein relation at a pivot
//! crossing and recurses on two words that are strictly smaller in a
//! well-founded total order on braid words.

pub mod bench;
pub mod bracket;
pub mod braid;
pub mod laurent;
pub mod simplify;
pub mod skein;
pub mod specialize;
pub mod table;

pub use braid::{parse_braid_word, BraidWord};
pub use laurent::LaurentPoly2;
pub use simplify::{classify, simplify, Shape, SimplifyOutcome};
pub use skein::{homfly, homfly_memoized, EvalStats, HomflyCache};
pub use specialize::{alexander, conway, jones, GaussLaurent1, ZLaurent};
