//! Handle reduction for braid words.
//!
//! A handle is a subword `s_i^e v s_i^-e` where `v` has no letter of index
//! `<= i`. Reducing the leftmost-ending handle always terminates, and the
//! result is empty exactly when the input represents the identity braid.

/// Locates the handle ending leftmost, as `(start, end)` inclusive.
fn leftmost_handle(word: &[i32]) -> Option<(usize, usize)> {
    for end in 1..word.len() {
        let i = word[end].abs();
        for start in (0..end).rev() {
            let a = word[start].abs();
            if a < i {
                break;
            }
            if a == i {
                if word[start] == -word[end] {
                    return Some((start, end));
                }
                break;
            }
        }
    }
    None
}

/// Reduces the word until it has no handle.
pub fn handle_reduce(word: &[i32]) -> Vec<i32> {
    let mut w = super::free_reduce_letters(word);
    while let Some((start, end)) = leftmost_handle(&w) {
        let i = w[start].abs();
        let e = w[start].signum();
        let mut next = Vec::with_capacity(w.len() + 2 * (end - start));
        next.extend_from_slice(&w[..start]);
        for &k in &w[start + 1..end] {
            if k.abs() == i + 1 {
                // v contains s_{i+1} with one sign only.
                next.extend_from_slice(&[-e * (i + 1), k.signum() * i, e * (i + 1)]);
            } else {
                next.push(k);
            }
        }
        next.extend_from_slice(&w[end + 1..]);
        w = super::free_reduce_letters(&next);
    }
    w
}
