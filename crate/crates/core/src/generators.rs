//! Words for the full twist `d`, the flips `r_i`, the belt elements `b_k`
//! and the ribbon flips `R_i`.
//!
//! The subgroup `R_n` of topologically trivial pure braids is generated by
//! the flips `r_1, …, r_{n-1}` together with `d`; the flips alone generate
//! the subgroup `R_n'`, which contains `d²` but not `d`.

use crate::braid::{BraidWord, Letter};
use crate::{BraidError, Result};

fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        Err(BraidError::TooFewStrands { n, min: 2 })
    } else {
        Ok(())
    }
}

fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        Err(BraidError::ArgumentOutOfRange {
            what,
            value: value as i64,
            min: min as i64,
            max: max as i64,
        })
    } else {
        Ok(())
    }
}

/// `σ_from σ_{from+1} ⋯ σ_to`, empty if `from > to`.
fn ascending(from: usize, to: usize) -> impl Iterator<Item = Letter> {
    (from..=to).map(Letter::pos)
}

/// `σ_from σ_{from-1} ⋯ σ_to`, empty if `from < to`.
fn descending(from: usize, to: usize) -> impl Iterator<Item = Letter> {
    (to..=from).rev().map(Letter::pos)
}

fn square(i: usize) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(Letter::pos(i), 2)
}

/// `d = (σ_{n-1} ⋯ σ2 σ1)^n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let block: Vec<Letter> = descending(n - 1, 1).collect();
    Ok(BraidWord::from_letters_unchecked(n, block).pow(n as i64))
}

/// The flip `r_i`, `1 ≤ i ≤ n`: the strand at position `i` is passed
/// around all the others.
pub fn flip(i: usize, n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    check_range("flip index", i, 1, n)?;
    let letters: Vec<Letter> = if i == 1 {
        // σ1 σ2 ⋯ σ_{n-2} σ_{n-1}² σ_{n-2} ⋯ σ1
        ascending(1, n - 2)
            .chain(square(n - 1))
            .chain(descending(n - 2, 1))
            .collect()
    } else if i == n {
        // σ_{n-1} ⋯ σ2 σ1² σ2 ⋯ σ_{n-1}
        descending(n - 1, 2)
            .chain(square(1))
            .chain(ascending(2, n - 1))
            .collect()
    } else {
        // σ_{i-1} ⋯ σ2 σ1² σ2 ⋯ σ_{n-2} σ_{n-1}² σ_{n-2} ⋯ σ_i
        descending(i - 1, 2)
            .chain(square(1))
            .chain(ascending(2, n - 2))
            .chain(square(n - 1))
            .chain(descending(n - 2, i))
            .collect()
    };
    Ok(BraidWord::from_letters_unchecked(n, letters))
}

/// `r_{i1} r_{i2} ⋯` in the given order.
pub fn flip_product(indices: &[usize], n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let flips = indices
        .iter()
        .map(|&i| flip(i, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BraidWord::product(n, flips.iter()))
}

/// `b_k = (σ_{k-1} ⋯ σ1)^{-k} (σ_{n-1} ⋯ σ_{k+1})^{n-k}`, `0 ≤ k ≤ n`.
pub fn belt_element(k: usize, n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    check_range("belt index", k, 0, n)?;
    let left = if k >= 2 {
        BraidWord::from_letters_unchecked(n, descending(k - 1, 1).collect()).pow(-(k as i64))
    } else {
        BraidWord::identity(n)
    };
    let right = BraidWord::from_letters_unchecked(n, descending(n - 1, k + 1).collect())
        .pow((n - k) as i64);
    Ok(BraidWord::product(n, [&left, &right]))
}

/// The ribbon flip `R_i = r_{2i} r_{2i-1}` on `2m` strands.
pub fn ribbon_flip(i: usize, m: usize) -> Result<BraidWord> {
    check_range("ribbon count", m, 1, usize::MAX)?;
    check_range("ribbon index", i, 1, m)?;
    flip_product(&[2 * i, 2 * i - 1], 2 * m)
}

fn check_conjugation(j: usize, sign: i64, i: usize, n: usize) -> Result<()> {
    check_strands(n)?;
    check_range("generator index", j, 1, n - 1)?;
    check_range("flip index", i, 1, n)?;
    if sign != 1 && sign != -1 {
        return Err(BraidError::ArgumentOutOfRange {
            what: "sign",
            value: sign,
            min: -1,
            max: 1,
        });
    }
    Ok(())
}

/// The word that `σ_j^{sign} r_i σ_j^{-sign}` equals, from the conjugation
/// table showing that the flips generate a normal subgroup of `B_n`.
pub fn conjugated_flip(j: usize, sign: i64, i: usize, n: usize) -> Result<BraidWord> {
    check_conjugation(j, sign, i, n)?;
    let r = |k: usize| flip(k, n);
    let positive = sign == 1;
    if j + 1 == i {
        if positive {
            // σ_{i-1} r_i σ_{i-1}⁻¹ = r_i r_{i-1} r_i⁻¹
            let ri = r(i)?;
            Ok(BraidWord::product(n, [&ri, &r(i - 1)?, &ri.inverse()]))
        } else {
            // σ_{i-1}⁻¹ r_i σ_{i-1} = r_{i-1}
            r(i - 1)
        }
    } else if j == i {
        if positive {
            // σ_i r_i σ_i⁻¹ = r_{i+1}
            r(i + 1)
        } else {
            // σ_i⁻¹ r_i σ_i = r_i⁻¹ r_{i+1} r_i
            let ri = r(i)?;
            Ok(BraidWord::product(n, [&ri.inverse(), &r(i + 1)?, &ri]))
        }
    } else {
        r(i)
    }
}

/// The literal conjugate `σ_j^{sign} r_i σ_j^{-sign}`.
pub fn conjugate_of_flip(j: usize, sign: i64, i: usize, n: usize) -> Result<BraidWord> {
    check_conjugation(j, sign, i, n)?;
    let letter = if sign == 1 {
        Letter::pos(j)
    } else {
        Letter::neg(j)
    };
    let g = BraidWord::from_letters_unchecked(n, vec![letter]);
    Ok(BraidWord::product(n, [&g, &flip(i, n)?, &g.inverse()]))
}
