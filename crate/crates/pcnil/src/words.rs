//! Words over the vertex alphabet, the lexicographic order used by the
//! basis construction, and associative Lyndon-Shirshov (ALS) words.
//!
//! The order is the Shirshov convention: every nonempty word is *smaller*
//! than the empty word, and first letters are compared in the base order.
//! Under this order an ALS word is strictly greater than each of its
//! nontrivial rotations, so it starts with the largest letter of its
//! support. This is the opposite of the common "Lyndon word = minimal
//! rotation" convention; imported algorithms must be order-transformed.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{CommutationGraph, Vertex};

/// A word is a finite sequence of vertex handles; the empty slice is the
/// empty word, written `1`.
pub type Word = Vec<Vertex>;

/// Total order on words: `u = v` iff identical; any nonempty word is less
/// than the empty word; otherwise first letters decide, ties recurse on
/// the suffixes.
pub fn word_cmp(u: &[Vertex], v: &[Vertex]) -> Ordering {
    match (u.split_first(), v.split_first()) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater, // 1 > v for nonempty v
        (Some(_), None) => Ordering::Less,
        (Some((a, ur)), Some((b, vr))) => a.cmp(b).then_with(|| word_cmp(ur, vr)),
    }
}

/// True iff `u` is an associative Lyndon-Shirshov word: for every
/// factorization `u = u1 u2` with both parts nonempty, `u2 u1 < u1 u2`.
/// Single letters are vacuously ALS. Errors on the empty word.
pub fn is_als(u: &[Vertex]) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut rotation = Vec::with_capacity(u.len());
    for split in 1..u.len() {
        rotation.clear();
        rotation.extend_from_slice(&u[split..]);
        rotation.extend_from_slice(&u[..split]);
        if word_cmp(&rotation, u) != Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All ALS words of each length `1..=max_len`, by brute-force filtering of
/// the n^k words of length k. Within a length the output is sorted by
/// `word_cmp`, largest first, which is the order the basis listing uses.
pub fn generate_als(g: &CommutationGraph, max_len: usize) -> Vec<Vec<Word>> {
    let n = g.vertex_count() as Vertex;
    let mut by_length = Vec::with_capacity(max_len);
    for k in 1..=max_len {
        let mut found: Vec<Word> = Vec::new();
        let mut w: Word = vec![0; k];
        loop {
            if is_als(&w).unwrap() {
                found.push(w.clone());
            }
            // odometer over all n^k words
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                w[pos] += 1;
                if w[pos] < n {
                    break;
                }
                w[pos] = 0;
            }
            if pos == 0 && w[0] == 0 {
                break;
            }
        }
        found.sort_by(|a, b| word_cmp(b, a));
        by_length.push(found);
    }
    by_length
}

/// Number of occurrences of `x` in `u`.
pub fn occurrences(u: &[Vertex], x: Vertex) -> usize {
    u.iter().filter(|&&l| l == x).count()
}

/// The set of letters occurring in `u`.
pub fn support(u: &[Vertex]) -> BTreeSet<Vertex> {
    u.iter().copied().collect()
}

/// Space-separated symbol rendering; the empty word renders as `"1"`.
pub fn format_word(g: &CommutationGraph, u: &[Vertex]) -> String {
    if u.is_empty() {
        return "1".to_string();
    }
    u.iter()
        .map(|&v| g.symbol(v))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a space-separated sequence of vertex symbols; `"1"` is the
/// empty word.
pub fn parse_plain_word(g: &CommutationGraph, text: &str) -> Result<Word> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    text.split_whitespace().map(|s| g.vertex(s)).collect()
}
