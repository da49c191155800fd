//! Straighten the last strand of a pure braid, remove it, and decide
//! whether the braid is topologically trivial.
//!
//! The strand that starts at position `n` is tracked from the right-hand
//! end of the word. Each letter where it passes in front of a neighbour is
//! marked, and a flip is inserted immediately to its left:
//!
//! * strand at `i`, letter `σ_{i-1}`: insert `r_i⁻¹`;
//! * strand at `i`, letter `σ_i⁻¹`: insert `r_i`.
//!
//! After the insertions the strand passes behind every other strand, so it
//! can be deleted. The braid is trivial iff the remaining braid on `n - 1`
//! strands is a power of the full twist.

use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::canonical::{self, NormalForm};
use crate::generators;
use crate::{BraidError, Result};

/// One marked letter and the flip inserted to its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mark {
    /// Zero-based position of the marked letter in the input word.
    pub letter_position: usize,
    /// Position (1-based) of the tracked strand just before the crossing.
    pub strand_position: usize,
    /// Index `i` of the inserted flip `r_i^{±1}`.
    pub flip: usize,
    /// `+1` for `r_i`, `-1` for `r_i⁻¹`.
    pub flip_sign: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraightenTrace {
    pub marks: Vec<Mark>,
    /// The input with every flip inserted, letter for letter.
    pub expanded: BraidWord,
    /// `expanded` with each inserted flip cancelled against its marked
    /// letter; the tracked strand passes behind at every crossing here.
    pub output: BraidWord,
}

/// Outcome of the triviality test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrivialityReport {
    pub n: usize,
    pub pure: bool,
    pub trivial: bool,
    /// `k` with `s'(b) = d^k` on `n - 1` strands, when trivial.
    pub twist_power: Option<i64>,
    /// Class of `s'(b)` modulo the full twist.
    pub class_rep: NormalForm,
}

fn require_pure(b: &BraidWord) -> Result<()> {
    if b.is_pure() {
        Ok(())
    } else {
        Err(BraidError::NotPure(b.permutation()))
    }
}

fn flip_word(i: usize, sign: i64, n: usize) -> BraidWord {
    let r = generators::flip(i, n).expect("flip index within 1..=n");
    if sign < 0 {
        r.inverse()
    } else {
        r
    }
}

/// Inserts flips so that the strand starting at position `n` passes behind
/// every other strand.
pub fn straighten(b: &BraidWord) -> Result<StraightenTrace> {
    require_pure(b)?;
    let n = b.n();
    let mut position = n;
    let mut marks = Vec::new();
    // pieces in reverse order
    let mut expanded_rev: Vec<Vec<Letter>> = Vec::with_capacity(b.len());
    let mut output_rev: Vec<Vec<Letter>> = Vec::with_capacity(b.len());

    for (k, &l) in b.letters().iter().enumerate().rev() {
        let front = l.touches(position) && l.back_position() != position;
        if front {
            let sign = if l.is_positive() { -1 } else { 1 };
            marks.push(Mark {
                letter_position: k,
                strand_position: position,
                flip: position,
                flip_sign: sign,
            });
            let inserted = flip_word(position, sign, n);
            let mut with_letter = inserted.letters().to_vec();
            with_letter.push(l);
            expanded_rev.push(with_letter);

            let mut cancelled = inserted.letters().to_vec();
            let last = cancelled.pop();
            debug_assert_eq!(last, Some(l.inverse()));
            output_rev.push(cancelled);
        } else {
            expanded_rev.push(vec![l]);
            output_rev.push(vec![l]);
        }
        position = l.next_position(position);
    }
    marks.reverse();
    let flatten = |rev: Vec<Vec<Letter>>| {
        BraidWord::from_letters_unchecked(n, rev.into_iter().rev().flatten().collect())
    };
    Ok(StraightenTrace {
        marks,
        expanded: flatten(expanded_rev),
        output: flatten(output_rev),
    })
}

/// First letter (zero-based) where the strand starting at `start` is the
/// front strand, if any.
fn first_front_crossing(b: &BraidWord, start: usize) -> Option<usize> {
    let mut position = start;
    for (k, &l) in b.letters().iter().enumerate().rev() {
        if l.touches(position) && l.back_position() != position {
            return Some(k);
        }
        position = l.next_position(position);
    }
    None
}

/// True iff the strand starting at `start` (1-based) is the back strand at
/// every crossing it takes part in. Out-of-range starts give false.
pub fn behind_check(b: &BraidWord, start: usize) -> bool {
    if start == 0 || start > b.n() {
        return false;
    }
    first_front_crossing(b, start).is_none()
}

/// Deletes the strand starting at position `n`, which must run behind all
/// others, and renumbers the remaining letters onto `n - 1` strands.
pub fn remove_last_strand(s: &BraidWord) -> Result<BraidWord> {
    let n = s.n();
    if n < 2 {
        return Err(BraidError::TooFewStrands { n, min: 2 });
    }
    require_pure(s)?;
    if let Some(letter) = first_front_crossing(s, n) {
        return Err(BraidError::NotBehind { start: n, letter });
    }
    let mut position = n;
    let mut kept = Vec::with_capacity(s.len());
    for &l in s.letters().iter().rev() {
        if l.touches(position) {
            position = l.next_position(position);
        } else if l.index() > position {
            let shifted = if l.is_positive() {
                Letter::pos(l.index() - 1)
            } else {
                Letter::neg(l.index() - 1)
            };
            kept.push(shifted);
        } else {
            kept.push(l);
        }
    }
    kept.reverse();
    Ok(BraidWord::from_letters_unchecked(n - 1, kept))
}

/// Puts a straight strand back at position `n + 1`.
pub fn append_straight_strand(b: &BraidWord) -> BraidWord {
    BraidWord::from_letters_unchecked(b.n() + 1, b.letters().to_vec())
}

/// `s'(b)`: straighten, then remove the last strand.
pub fn reduced_braid(b: &BraidWord) -> Result<BraidWord> {
    let trace = straighten(b)?;
    remove_last_strand(&trace.output)
}

/// Necessary condition for `s'` to be a power of the full twist: its
/// writhe is a multiple of `m (m - 1)` on `m` strands.
pub fn writhe_prefilter(reduced: &BraidWord) -> bool {
    let m = reduced.n() as i64;
    let twist_writhe = m * (m - 1);
    twist_writhe == 0 || reduced.writhe() % twist_writhe == 0
}

pub fn is_topologically_trivial(b: &BraidWord) -> Result<TrivialityReport> {
    let n = b.n();
    if n < 2 {
        return Err(BraidError::TooFewStrands { n, min: 2 });
    }
    let reduced = reduced_braid(b)?;
    let nf = canonical::normal_form(&reduced);
    let twist_power = nf.full_twist_power();
    debug_assert!(twist_power.is_none() || writhe_prefilter(&reduced));
    let class_rep = nf.modulo_center();
    Ok(TrivialityReport {
        n,
        pure: true,
        trivial: twist_power.is_some(),
        twist_power,
        class_rep,
    })
}

/// Canonical representative of the topological class of a pure braid,
/// as an element of `P_{n-1}` modulo its center.
pub fn classify(b: &BraidWord) -> Result<NormalForm> {
    if b.n() < 3 {
        return Err(BraidError::TooFewStrands { n: b.n(), min: 3 });
    }
    Ok(is_topologically_trivial(b)?.class_rep)
}
