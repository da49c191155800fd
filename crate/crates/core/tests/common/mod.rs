//! Test-only oracles and random word generators. Nothing here calls into
//! the normal-form code.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use braid_unplait::braid::{BraidWord, Letter};
use braid_unplait::canonical::SimpleFactor;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn w(n: usize, letters: &[i64]) -> BraidWord {
    BraidWord::from_signed(n, letters).unwrap()
}

pub fn random_letter(rng: &mut StdRng, n: usize) -> i64 {
    let i = rng.gen_range(1..n) as i64;
    if rng.gen_bool(0.5) {
        i
    } else {
        -i
    }
}

pub fn random_word(rng: &mut StdRng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i64> = (0..len).map(|_| random_letter(rng, n)).collect();
    w(n, &letters)
}

/// A random pure word of length at most `max_len`: a random word followed
/// by the positive permutation braid undoing its permutation.
pub fn random_pure_word(rng: &mut StdRng, n: usize, max_len: usize) -> BraidWord {
    let fix = n * (n - 1) / 2;
    let body = random_word(rng, n, max_len.saturating_sub(fix));
    let undo = SimpleFactor::new(body.permutation().inverse()).to_word();
    let pure = body.compose(&undo).unwrap();
    assert!(pure.is_pure());
    pure
}

/// Strand positions simulated with explicit labels, letters applied
/// rightmost first. Returns the one-based image of each start position.
pub fn simulate_permutation(b: &BraidWord) -> Vec<usize> {
    let n = b.n();
    let mut slots: Vec<usize> = (1..=n).collect(); // slots[pos] = label
    for l in b.letters().iter().rev() {
        let i = l.index() - 1;
        slots.swap(i, i + 1);
    }
    let mut image = vec![0; n];
    for (pos, label) in slots.iter().enumerate() {
        image[label - 1] = pos + 1;
    }
    image
}

// ---- Artin's action on the free group F_n -------------------------------
//
// σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i, x_j ↦ x_j. The action is
// faithful, so a word is the identity braid iff it fixes every generator.

type FreeWord = Vec<i32>; // ±(k+1) for x_k^{±1}

fn free_push(out: &mut FreeWord, g: i32) {
    if out.last() == Some(&-g) {
        out.pop();
    } else {
        out.push(g);
    }
}

fn free_inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|g| -g).collect()
}

/// Image of the generator `x_j` (1-based) under the letter.
fn letter_image(l: Letter, j: i32) -> FreeWord {
    let i = l.index() as i32;
    if l.is_positive() {
        if j == i {
            vec![i, i + 1, -i]
        } else if j == i + 1 {
            vec![i]
        } else {
            vec![j]
        }
    } else if j == i {
        vec![i + 1]
    } else if j == i + 1 {
        vec![-(i + 1), i, i + 1]
    } else {
        vec![j]
    }
}

/// Images of `x_1..x_n` under the automorphism of `b`, or `None` if they
/// grow past `cap` letters.
pub fn free_action(b: &BraidWord, cap: usize) -> Option<Vec<FreeWord>> {
    let n = b.n();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    for &l in b.letters() {
        // φ ∘ φ_l: substitute current images into the letter's images
        let mut next = Vec::with_capacity(n);
        for j in 1..=n as i32 {
            let mut out = FreeWord::new();
            for g in letter_image(l, j) {
                let img = &images[(g.unsigned_abs() - 1) as usize];
                if g > 0 {
                    img.iter().for_each(|&h| free_push(&mut out, h));
                } else {
                    free_inverse(img)
                        .into_iter()
                        .for_each(|h| free_push(&mut out, h));
                }
            }
            if out.len() > cap {
                return None;
            }
            next.push(out);
        }
        images = next;
    }
    Some(images)
}

pub fn free_action_is_identity(b: &BraidWord, cap: usize) -> Option<bool> {
    let images = free_action(b, cap)?;
    Some(
        images
            .iter()
            .enumerate()
            .all(|(k, img)| img == &vec![k as i32 + 1]),
    )
}

pub fn free_action_equal(a: &BraidWord, b: &BraidWord, cap: usize) -> Option<bool> {
    Some(free_action(a, cap)? == free_action(b, cap)?)
}

// ---- Positive rewriting -------------------------------------------------

/// Breadth-first search over positive words using only the braid and far
/// commutation relations. Decides equality of positive words of equal length.
pub fn positive_words_equal(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let target = b.to_vec();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.to_vec());
    queue.push_back(a.to_vec());
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            return true;
        }
        let mut neighbours = Vec::new();
        for k in 0..cur.len().saturating_sub(1) {
            let (x, y) = (cur[k], cur[k + 1]);
            if x.abs_diff(y) >= 2 {
                let mut nb = cur.clone();
                nb.swap(k, k + 1);
                neighbours.push(nb);
            }
            if k + 2 < cur.len() && cur[k + 2] == x && x.abs_diff(y) == 1 {
                let mut nb = cur.clone();
                nb[k] = y;
                nb[k + 1] = x;
                nb[k + 2] = y;
                neighbours.push(nb);
            }
        }
        for nb in neighbours {
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    false
}

// ---- Random Artin rewrites ----------------------------------------------

fn relator(rng: &mut StdRng, n: usize) -> Vec<i64> {
    let mut rel: Vec<i64> = if n >= 4 && rng.gen_bool(0.4) {
        let i = rng.gen_range(1..=n - 3);
        let j = rng.gen_range(i + 2..n);
        let (i, j) = (i as i64, j as i64);
        vec![i, j, -i, -j]
    } else if n >= 3 {
        let i = rng.gen_range(1..n - 1) as i64;
        vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]
    } else {
        let i = 1;
        vec![i, -i]
    };
    let rot = rng.gen_range(0..rel.len());
    rel.rotate_left(rot);
    if rng.gen_bool(0.5) {
        rel = rel.iter().rev().map(|x| -x).collect();
    }
    rel
}

/// Applies `steps` random relation-preserving rewrites.
pub fn random_rewrite(rng: &mut StdRng, b: &BraidWord, steps: usize) -> BraidWord {
    let n = b.n();
    let mut letters = b.signed_letters();
    for _ in 0..steps {
        match rng.gen_range(0..5) {
            0 => {
                let at = rng.gen_range(0..=letters.len());
                let rel = relator(rng, n);
                letters.splice(at..at, rel);
            }
            1 => {
                let at = rng.gen_range(0..=letters.len());
                let x = random_letter(rng, n);
                letters.splice(at..at, [x, -x]);
            }
            2 => {
                // commute a far pair
                let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&k| (letters[k].abs() - letters[k + 1].abs()).abs() >= 2)
                    .collect();
                if !spots.is_empty() {
                    let k = spots[rng.gen_range(0..spots.len())];
                    letters.swap(k, k + 1);
                }
            }
            3 => {
                // σ_i σ_j σ_i ↔ σ_j σ_i σ_j with all signs equal
                let spots: Vec<usize> = (0..letters.len().saturating_sub(2))
                    .filter(|&k| {
                        let (x, y, z) = (letters[k], letters[k + 1], letters[k + 2]);
                        x == z && x.signum() == y.signum() && (x.abs() - y.abs()).abs() == 1
                    })
                    .collect();
                if !spots.is_empty() {
                    let k = spots[rng.gen_range(0..spots.len())];
                    let (x, y) = (letters[k], letters[k + 1]);
                    letters[k] = y;
                    letters[k + 1] = x;
                    letters[k + 2] = y;
                }
            }
            _ => {
                // cancel an adjacent inverse pair
                let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&k| letters[k] == -letters[k + 1])
                    .collect();
                if !spots.is_empty() {
                    let k = spots[rng.gen_range(0..spots.len())];
                    letters.drain(k..k + 2);
                }
            }
        }
    }
    w(n, &letters)
}
