#![allow(dead_code)]

use gridbraid::{BraidWord, GridDiagram};
use proptest::prelude::*;

pub fn grid(max_n: usize) -> impl Strategy<Value = GridDiagram> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
            (Just(n), perm.clone(), perm)
        })
        .prop_filter("X and O must not share a square", |(_, x, o)| {
            x.iter().zip(o).all(|(a, b)| a != b)
        })
        .prop_map(|(n, x, o)| GridDiagram::new(n, x, o).unwrap())
}

pub fn letters(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let top = strands as i32 - 1;
    if top < 1 {
        return Just(Vec::new()).boxed();
    }
    prop::collection::vec((1..=top, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(k, pos)| if pos { k } else { -k }).collect())
        .boxed()
}

pub fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_strands).prop_flat_map(move |n| {
        letters(n, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}
