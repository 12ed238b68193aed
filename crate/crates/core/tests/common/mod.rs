#![allow(dead_code)]

use gof_core::mat2::Matrix2;
use proptest::prelude::*;
use rand::Rng;

/// Generators of GL(2,Z) used to build random conjugators.
pub const GL2_LETTERS: [Matrix2; 5] = [
    Matrix2::R,
    Matrix2::L,
    Matrix2::new(1, -1, 0, 1),
    Matrix2::new(1, 0, -1, 1),
    Matrix2::J,
];

pub const SL2_LETTERS: [Matrix2; 4] = [Matrix2::R, Matrix2::L, Matrix2::new(1, -1, 0, 1), Matrix2::new(1, 0, -1, 1)];

pub fn product(letters: &[Matrix2]) -> Matrix2 {
    letters.iter().fold(Matrix2::IDENTITY, |acc, m| acc.checked_mul(m).unwrap())
}

pub fn gl2_word(max_len: usize) -> impl Strategy<Value = Matrix2> {
    prop::collection::vec(prop::sample::select(GL2_LETTERS.to_vec()), 0..=max_len).prop_map(|w| product(&w))
}

pub fn sl2_word(max_len: usize) -> impl Strategy<Value = Matrix2> {
    prop::collection::vec(prop::sample::select(SL2_LETTERS.to_vec()), 0..=max_len).prop_map(|w| product(&w))
}

/// `±` a random SL(2,Z) word, so all trace signs occur.
pub fn sl2_element(max_len: usize) -> impl Strategy<Value = Matrix2> {
    (sl2_word(max_len), any::<bool>()).prop_map(|(m, neg)| if neg { m.checked_neg().unwrap() } else { m })
}

pub fn random_gl2<R: Rng>(rng: &mut R, max_len: usize) -> Matrix2 {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Matrix2> = (0..len).map(|_| GL2_LETTERS[rng.gen_range(0..GL2_LETTERS.len())]).collect();
    product(&letters)
}

pub fn random_sl2<R: Rng>(rng: &mut R, max_len: usize) -> Matrix2 {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Matrix2> = (0..len).map(|_| SL2_LETTERS[rng.gen_range(0..SL2_LETTERS.len())]).collect();
    let m = product(&letters);
    if rng.gen_bool(0.5) {
        m.checked_neg().unwrap()
    } else {
        m
    }
}

/// All determinant-one matrices with entries in `[-bound, bound]`, sorted
/// by entry size so that small representatives come first.
pub fn small_sl2(bound: i64) -> Vec<Matrix2> {
    let r = -bound..=bound;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if a * d - b * c == 1 {
                        out.push(Matrix2::new(a, b, c, d));
                    }
                }
            }
        }
    }
    out.sort_by_key(|m| (m.entries().iter().map(|x| x.abs()).sum::<i64>(), m.entries()));
    out
}
