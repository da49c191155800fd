//! Inputs shared by the benchmarks.

use braid_unplait::braidio::parse;
use braid_unplait::canonical::SimpleFactor;
use braid_unplait::BraidWord;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn sennit() -> BraidWord {
    parse("B5: (3 4 -2 -1)^5").unwrap()
}

pub fn theta() -> BraidWord {
    parse("B6: (-2 -1 -3 -2 4 3 5 4)^3").unwrap()
}

/// A reproducible random word of exactly `len` letters.
pub fn random_word(seed: u64, n: usize, len: usize) -> BraidWord {
    let mut rng = StdRng::seed_from_u64(seed);
    let letters: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n) as i64;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_signed(n, &letters).unwrap()
}

/// A random word closed up into a pure braid by a positive permutation braid.
pub fn random_pure_word(seed: u64, n: usize, len: usize) -> BraidWord {
    let body = random_word(seed, n, len);
    let undo = SimpleFactor::new(body.permutation().inverse()).to_word();
    body.compose(&undo).unwrap()
}
