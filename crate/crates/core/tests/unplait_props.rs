mod common;

use braid_unplait::braid::BraidWord;
use braid_unplait::canonical;
use braid_unplait::generators::{belt_element, flip, full_twist};
use braid_unplait::unplait::*;
use rand::rngs::StdRng;
use rand::Rng;

use common::*;

fn trivial(b: &BraidWord) -> bool {
    is_topologically_trivial(b).unwrap().trivial
}

/// `g b_k g⁻¹` for random `g` and `k`.
fn random_belt_conjugate(rng: &mut StdRng, n: usize) -> BraidWord {
    let g = random_word(rng, n, 10);
    let k = rng.gen_range(0..=n);
    let b = belt_element(k, n).unwrap();
    BraidWord::concat(&[&g, &b, &g.inverse()]).unwrap()
}

fn random_trivial(rng: &mut StdRng, n: usize) -> BraidWord {
    let count = rng.gen_range(1..=4);
    let parts: Vec<BraidWord> = (0..count).map(|_| random_belt_conjugate(rng, n)).collect();
    BraidWord::concat(&parts.iter().collect::<Vec<_>>()).unwrap()
}

#[test]
fn straightened_strand_passes_behind() {
    let mut rng = rng(0x5b);
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let b = random_pure_word(&mut rng, n, 40);
        let trace = straighten(&b).unwrap();
        assert!(behind_check(&trace.output, n), "{b}");
        assert!(canonical::equals(&trace.output, &trace.expanded).unwrap());
        for m in &trace.marks {
            let l = b.letters()[m.letter_position];
            assert_eq!(m.flip, m.strand_position);
            assert_eq!(m.flip_sign, -l.sign());
        }
    }
}

#[test]
fn removal_round_trips() {
    let mut rng = rng(0x52);
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let b = random_pure_word(&mut rng, n, 40);
        let s = straighten(&b).unwrap().output;
        let reduced = remove_last_strand(&s).unwrap();
        assert_eq!(reduced.n(), n - 1);
        assert!(reduced.is_pure());
        let back = append_straight_strand(&reduced);
        assert!(canonical::equals(&back, &s).unwrap(), "{b}");
    }
}

#[test]
fn inserted_flips_are_trivial() {
    let mut rng = rng(0x1f);
    for _ in 0..100 {
        let n = rng.gen_range(3..=6);
        let b = random_pure_word(&mut rng, n, 40);
        let s = straighten(&b).unwrap().output;
        assert!(trivial(&s.compose(&b.inverse()).unwrap()), "{b}");
    }
}

#[test]
fn belt_conjugates_are_trivial() {
    let mut rng = rng(0xbe);
    for n in 4..=6 {
        for _ in 0..100 {
            let b = random_trivial(&mut rng, n);
            assert!(trivial(&b), "{b}");
        }
    }
}

#[test]
fn verdict_is_invariant() {
    let mut rng = rng(0x3e);
    let mut seen = [0usize; 2];
    for case in 0..100 {
        let n = if case % 2 == 0 { 4 } else { 5 };
        let b = if rng.gen_bool(0.5) {
            random_pure_word(&mut rng, n, 30)
        } else {
            random_trivial(&mut rng, n)
        };
        let verdict = trivial(&b);
        seen[verdict as usize] += 1;
        let i = rng.gen_range(1..=n);
        let r = flip(i, n).unwrap();
        let d = full_twist(n).unwrap();
        let g = random_word(&mut rng, n, 12);
        let variants = [
            BraidWord::concat(&[&r, &b]).unwrap(),
            BraidWord::concat(&[&b, &r]).unwrap(),
            BraidWord::concat(&[&r.inverse(), &b]).unwrap(),
            BraidWord::concat(&[&d, &b]).unwrap(),
            BraidWord::concat(&[&g, &b, &g.inverse()]).unwrap(),
        ];
        for v in &variants {
            assert_eq!(trivial(v), verdict, "{b} -> {v}");
        }
    }
    assert!(seen[0] > 10 && seen[1] > 10, "{seen:?}");
}

#[test]
fn classification_is_coherent() {
    let mut rng = rng(0xc1);
    let mut same = 0;
    for case in 0..100 {
        let n = rng.gen_range(3..=5);
        let b1 = random_pure_word(&mut rng, n, 24);
        let b2 = if case % 2 == 0 {
            let t = random_trivial(&mut rng, n);
            BraidWord::concat(&[&t, &b1]).unwrap()
        } else {
            random_pure_word(&mut rng, n, 24)
        };
        let equal_class = classify(&b1).unwrap() == classify(&b2).unwrap();
        let quotient = b1.compose(&b2.inverse()).unwrap();
        assert_eq!(equal_class, trivial(&quotient), "{b1} / {b2}");
        same += equal_class as usize;
    }
    assert!(same >= 50);
}

#[test]
fn every_pure_three_braid_is_trivial() {
    let mut rng = rng(0x03);
    for _ in 0..200 {
        let b = random_pure_word(&mut rng, 3, 30);
        let report = is_topologically_trivial(&b).unwrap();
        assert!(report.trivial, "{b}");
        assert!(report.class_rep.is_identity());
    }
}

#[test]
fn twist_power_matches_reduced_braid() {
    let mut rng = rng(0x7a);
    for _ in 0..100 {
        let n = rng.gen_range(3..=6);
        let b = random_trivial(&mut rng, n);
        let report = is_topologically_trivial(&b).unwrap();
        let k = report.twist_power.unwrap();
        let reduced = reduced_braid(&b).unwrap();
        let d = full_twist(n - 1).unwrap().pow(k);
        assert!(canonical::equals(&reduced, &d).unwrap());
        assert!(writhe_prefilter(&reduced));
        assert_eq!(reduced.writhe(), k * ((n - 1) * (n - 2)) as i64);
    }
}

#[test]
fn nontrivial_reports_fail_or_pass_prefilter_consistently() {
    let mut rng = rng(0x91);
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let b = random_pure_word(&mut rng, n, 30);
        let reduced = reduced_braid(&b).unwrap();
        if !writhe_prefilter(&reduced) {
            assert!(!trivial(&b));
        }
        let report = is_topologically_trivial(&b).unwrap();
        assert_eq!(report.trivial, report.class_rep.is_identity());
    }
}
