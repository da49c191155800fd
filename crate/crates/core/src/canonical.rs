//! Garside left normal forms for `B_n`.
//!
//! Every braid is written uniquely as `Δ^inf · s_1 ⋯ s_l` where `Δ` is the
//! positive half twist, each `s_i` is a permutation braid other than `1`
//! and `Δ`, and every adjacent pair is left-weighted. Simple factors are
//! stored as permutations; all factor arithmetic happens on permutations.
//!
//! A positive word `σ_{i1} ⋯ σ_{ik}` corresponds to the permutation
//! `s_{i1} ∘ ⋯ ∘ s_{ik}`, matching [`BraidWord::permutation`].

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::braid::{BraidWord, Letter, Permutation};
use crate::{BraidError, Result};

/// A permutation braid: a positive braid in which each pair of strands
/// crosses at most once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleFactor(Permutation);

impl SimpleFactor {
    pub fn new(permutation: Permutation) -> Self {
        SimpleFactor(permutation)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.0
    }

    /// Number of crossings.
    pub fn length(&self) -> usize {
        self.0.inversions()
    }

    /// Zero-based `i` such that the factor can start with `σ_{i+1}`.
    pub fn starting_set(&self) -> Vec<usize> {
        let inv = self.0.inverse();
        descents(inv.image())
    }

    /// Zero-based `i` such that the factor can end with `σ_{i+1}`.
    pub fn finishing_set(&self) -> Vec<usize> {
        descents(self.0.image())
    }

    /// A reduced positive word for this factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.0.len();
        let mut p = self.0.clone();
        let mut tail = Vec::with_capacity(p.inversions());
        // peel right descents: p = p' ∘ s_i, word(p) = word(p') σ_i
        while let Some(i) = first_descent(p.image()) {
            p.swap_positions(i);
            tail.push(Letter::pos(i + 1));
        }
        tail.reverse();
        BraidWord::from_letters_unchecked(n, tail)
    }
}

fn descents(image: &[usize]) -> Vec<usize> {
    image
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i)
        .collect()
}

fn first_descent(image: &[usize]) -> Option<usize> {
    image.windows(2).position(|w| w[0] > w[1])
}

/// Left normal form `Δ^inf · s_1 ⋯ s_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<SimpleFactor>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The power of `Δ`.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    /// `inf + l`.
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// True if this is `Δ^{2k}`, i.e. the `k`-th power of the full twist.
    pub fn full_twist_power(&self) -> Option<i64> {
        if self.n <= 1 {
            return Some(0);
        }
        if self.factors.is_empty() && self.inf % 2 == 0 {
            Some(self.inf / 2)
        } else {
            None
        }
    }

    /// Representative modulo the center `⟨Δ²⟩`.
    pub fn modulo_center(&self) -> NormalForm {
        NormalForm {
            n: self.n,
            inf: if self.n <= 1 {
                0
            } else {
                self.inf.rem_euclid(2)
            },
            factors: self.factors.clone(),
        }
    }

    pub fn to_word(&self) -> BraidWord {
        let n = self.n;
        if n <= 1 {
            return BraidWord::identity(n);
        }
        let delta = delta_word(n);
        let mut pieces = vec![delta.pow(self.inf)];
        pieces.extend(self.factors.iter().map(SimpleFactor::to_word));
        BraidWord::product(n, pieces.iter())
    }

    /// Checks the structural invariants of a left normal form.
    pub fn is_well_formed(&self) -> bool {
        let delta = Permutation::reversal(self.n);
        let no_trivial = self
            .factors
            .iter()
            .all(|f| !f.0.is_identity() && f.0 != delta);
        let weighted = self.factors.windows(2).all(|pair| {
            let finish = pair[0].finishing_set();
            pair[1].starting_set().iter().all(|i| finish.contains(i))
        });
        no_trivial && weighted
    }

    /// Appends a simple factor on the right and restores normality.
    fn push(&mut self, s: Permutation) {
        if s.is_identity() {
            return;
        }
        let delta = Permutation::reversal(self.n);
        if s == delta {
            // s_1⋯s_l Δ = Δ τ(s_1)⋯τ(s_l)
            self.inf += 1;
            for f in &mut self.factors {
                f.0 = tau(&f.0);
            }
            return;
        }
        self.factors.push(SimpleFactor(s));
        // one right-to-left sweep suffices; stop once a left factor is unchanged
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1].0, &mut tail[0].0) {
                break;
            }
            j -= 1;
        }
        self.normalize_ends(&delta);
    }

    fn normalize_ends(&mut self, delta: &Permutation) {
        let lead = self.factors.iter().take_while(|f| &f.0 == delta).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
        self.factors.retain(|f| !f.0.is_identity());
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let factors: Vec<Vec<usize>> = self.factors.iter().map(|f| f.0.to_one_based()).collect();
        let mut st = serializer.serialize_struct("NormalForm", 2)?;
        st.serialize_field("inf", &self.inf)?;
        st.serialize_field("factors", &factors)?;
        st.end()
    }
}

/// Conjugation by `Δ` on permutations: `w0 ∘ p ∘ w0`.
fn tau(p: &Permutation) -> Permutation {
    let n = p.len();
    let image = p.image();
    Permutation::from_image((0..n).map(|x| n - 1 - image[n - 1 - x]).collect())
        .expect("conjugate of a permutation is a permutation")
}

/// Makes `(a, b)` left-weighted by moving letters from the front of `b` to
/// the end of `a`. Returns true if anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut b_inv = b.inverse();
    let mut changed = false;
    loop {
        let a_img = a.image();
        let b_inv_img = b_inv.image();
        // i ∈ S(b) \ F(a)
        let next = (0..n.saturating_sub(1))
            .find(|&i| b_inv_img[i] > b_inv_img[i + 1] && a_img[i] < a_img[i + 1]);
        match next {
            Some(i) => {
                a.swap_positions(i);
                b.swap_values(i);
                b_inv.swap_positions(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

fn delta_word(n: usize) -> BraidWord {
    let letters = (1..n)
        .flat_map(|k| (1..=k).rev().map(Letter::pos))
        .collect();
    BraidWord::from_letters_unchecked(n, letters)
}

/// The positive half twist `Δ_n = σ1 (σ2 σ1) ⋯ (σ_{n-1} ⋯ σ1)`.
pub fn half_twist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::TooFewStrands { n, min: 2 });
    }
    Ok(delta_word(n))
}

pub fn normal_form(b: &BraidWord) -> NormalForm {
    let n = b.n();
    let mut nf = NormalForm::identity(n);
    if n <= 1 {
        return nf;
    }
    let delta = Permutation::reversal(n);
    let letters = b.letters();
    // σ_i⁻¹ = Δ⁻¹ (Δ σ_i⁻¹); each Δ⁻¹ moves left past earlier factors via τ
    let mut negatives_after = letters.iter().filter(|l| !l.is_positive()).count();
    nf.inf = -(negatives_after as i64);
    for l in letters {
        let i = l.index() - 1;
        let mut factor = if l.is_positive() {
            let mut p = Permutation::identity(n);
            p.swap_positions(i);
            p
        } else {
            negatives_after -= 1;
            let mut p = delta.clone();
            p.swap_positions(i);
            p
        };
        if negatives_after % 2 == 1 {
            factor = tau(&factor);
        }
        nf.push(factor);
    }
    nf
}

pub fn is_identity(b: &BraidWord) -> bool {
    normal_form(b).is_identity()
}

pub fn equals(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.n() != b.n() {
        return Err(BraidError::StrandMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(normal_form(a) == normal_form(b))
}

/// Normal form with `inf` reduced mod 2, a canonical representative of the
/// class of `b` modulo powers of the full twist.
pub fn center_coset_rep(b: &BraidWord) -> Result<NormalForm> {
    if b.n() < 3 {
        return Err(BraidError::TooFewStrands { n: b.n(), min: 3 });
    }
    Ok(normal_form(b).modulo_center())
}
