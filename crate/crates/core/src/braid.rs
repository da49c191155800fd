//! Braid words over Artin generators and the permutations they induce.
//!
//! Conventions used throughout the crate:
//!
//! * a word is applied rightmost letter first when tracking strands;
//! * `σ_i` swaps the strands at positions `i` and `i + 1`, and the strand
//!   at position `i + 1` passes in front;
//! * in `σ_i⁻¹` the strand at position `i` passes in front.

use std::fmt;

use crate::{BraidError, Result};

/// A signed Artin generator `σ_index^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    index: usize,
    positive: bool,
}

impl Letter {
    /// `σ_index`. Panics if `index == 0`.
    pub fn pos(index: usize) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        Letter {
            index,
            positive: true,
        }
    }

    /// `σ_index⁻¹`. Panics if `index == 0`.
    pub fn neg(index: usize) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        Letter {
            index,
            positive: false,
        }
    }

    /// `k > 0` is `σ_k`, `k < 0` is `σ_|k|⁻¹`; zero has no letter.
    pub fn from_signed(k: i64) -> Option<Self> {
        match k {
            0 => None,
            k if k > 0 => Some(Letter::pos(k as usize)),
            k => Some(Letter::neg(k.unsigned_abs() as usize)),
        }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn signed(self) -> i64 {
        self.sign() * self.index as i64
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }

    /// The position (1-based) of the strand that passes behind at this crossing.
    pub fn back_position(self) -> usize {
        if self.positive {
            self.index
        } else {
            self.index + 1
        }
    }

    /// True if the crossing involves the strand currently at `position`.
    pub fn touches(self, position: usize) -> bool {
        position == self.index || position == self.index + 1
    }

    /// Where a strand at `position` ends up after this crossing.
    pub fn next_position(self, position: usize) -> usize {
        if position == self.index {
            self.index + 1
        } else if position == self.index + 1 {
            self.index
        } else {
            position
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

/// A word in the Artin generators of `B_n`. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, checking that every letter index is below `n`.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::TooFewStrands { n, min: 1 });
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= n) {
            return Err(BraidError::IndexOutOfRange {
                index: bad.index(),
                n,
            });
        }
        Ok(BraidWord { n, letters })
    }

    /// Builds a word from signed generator indices, e.g. `[1, -2]` for `σ1 σ2⁻¹`.
    pub fn from_signed(n: usize, letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&k| Letter::from_signed(k).ok_or(BraidError::IndexOutOfRange { index: 0, n }))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "a braid needs at least one strand");
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index() < n));
        BraidWord { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed_letters(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    /// The concatenation `self · other`, without simplification.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Concatenation of several words on the same strand count.
    pub fn concat(words: &[&BraidWord]) -> Result<BraidWord> {
        let Some(first) = words.first() else {
            return Err(BraidError::TooFewStrands { n: 0, min: 1 });
        };
        if let Some(bad) = words.iter().find(|w| w.n != first.n) {
            return Err(BraidError::StrandMismatch {
                left: first.n,
                right: bad.n,
            });
        }
        Ok(BraidWord::product(first.n, words.iter().copied()))
    }

    /// Concatenates words that are known to share the strand count.
    pub(crate) fn product<'a, I>(n: usize, words: I) -> BraidWord
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut letters = Vec::new();
        for w in words {
            debug_assert_eq!(w.n, n);
            letters.extend_from_slice(&w.letters);
        }
        BraidWord { n, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^e`; negative exponents repeat the inverse.
    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let reps = e.unsigned_abs() as usize;
        BraidWord {
            n: self.n,
            letters: base.letters.repeat(reps),
        }
    }

    /// Image under `σ_i ↦ σ_{n-i}`, the conjugation by the half twist.
    pub fn mirror(&self) -> BraidWord {
        let n = self.n;
        BraidWord {
            n,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    index: n - l.index(),
                    positive: l.is_positive(),
                })
                .collect(),
        }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            n: self.n,
            letters: stack,
        }
    }

    pub fn permutation(&self) -> Permutation {
        let mut image: Vec<usize> = (0..self.n).collect();
        // image[p] = current position of the strand that started at p
        let mut at: Vec<usize> = (0..self.n).collect();
        for l in self.letters.iter().rev() {
            let i = l.index() - 1;
            at.swap(i, i + 1);
        }
        for (pos, &strand) in at.iter().enumerate() {
            image[strand] = pos;
        }
        Permutation { image }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }
}

/// A permutation of strand positions: the strand starting at position `p`
/// ends at position `image[p]`.
///
/// Positions are stored zero-based; [`Permutation::to_one_based`] gives the
/// `1..=n` form used in reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds from a zero-based image; `None` unless it is a bijection.
    pub fn from_image(image: Vec<usize>) -> Option<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { image })
    }

    pub fn from_one_based(image: &[usize]) -> Option<Self> {
        if image.contains(&0) {
            return None;
        }
        Permutation::from_image(image.iter().map(|x| x - 1).collect())
    }

    /// The permutation reversing all positions.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            image: (0..n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.image.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation size mismatch");
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// Number of inversions, i.e. the crossing count of the permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.image[i] > self.image[j])
            .count()
    }

    /// `self ∘ s_i` for the adjacent transposition of zero-based `i, i+1`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.image.swap(i, i + 1);
    }

    /// `s_i ∘ self`.
    pub(crate) fn swap_values(&mut self, i: usize) {
        for x in self.image.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_based())
    }
}
