//! Markov moves, the exchange move and its decomposition into conjugations
//! and one positive stabilization/destabilization pair.

use std::fmt;

use super::{free_reduce_letters, BraidWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MarkovMove {
    /// `w -> u w u^-1`.
    Conjugate(BraidWord),
    PosStab,
    PosDestab,
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkovMove::Conjugate(u) => {
                let letters: Vec<String> = u.letters().iter().map(|k| k.to_string()).collect();
                write!(f, "conj [{}]", letters.join(" "))
            }
            MarkovMove::PosStab => f.write_str("+stab"),
            MarkovMove::PosDestab => f.write_str("+destab"),
        }
    }
}

/// A move together with the full word it produces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkovStep {
    pub kind: MarkovMove,
    pub word: BraidWord,
}

pub type BwStep = MarkovStep;

impl fmt::Display for MarkovStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.kind, self.word)
    }
}

/// Checks every transition of `steps` starting from `start`, up to group
/// equality. Returns the index of the first bad step on failure.
pub fn check_markov_path(start: &BraidWord, steps: &[MarkovStep]) -> std::result::Result<(), usize> {
    let mut current = start.clone();
    for (i, step) in steps.iter().enumerate() {
        let ok = match &step.kind {
            MarkovMove::Conjugate(u) => current
                .conjugate(u)
                .and_then(|c| c.equals(&step.word))
                .unwrap_or(false),
            MarkovMove::PosStab => current.pos_stab().equals(&step.word).unwrap_or(false),
            // current = v sigma_{n-1} with v in B_{n-1}
            MarkovMove::PosDestab => {
                step.word.strands() + 1 == current.strands()
                    && step.word.pos_stab().equals(&current).unwrap_or(false)
            }
        };
        if !ok {
            return Err(i);
        }
        current = step.word.clone();
    }
    Ok(())
}

fn exchange_letters(letters: &[i32], top: i32) -> Option<Vec<i32>> {
    let hits: Vec<usize> = (0..letters.len())
        .filter(|&i| letters[i].abs() == top)
        .collect();
    match hits.as_slice() {
        &[a, b] if b == letters.len() - 1 && letters[a] == -letters[b] => {
            let mut out = letters.to_vec();
            out[a] = -out[a];
            out[b] = -out[b];
            Some(out)
        }
        _ => None,
    }
}

/// `B1 s^e B2 s^-e -> B1 s^-e B2 s^e` with `s = sigma_{n-1}` and `B1, B2`
/// avoiding `s`. The literal word is tried before its free reduction.
pub fn exchange(w: &BraidWord) -> Result<BraidWord> {
    let top = w.strands() as i32 - 1;
    if top < 1 {
        return Err(Error::NoExchangePattern);
    }
    exchange_letters(w.letters(), top)
        .or_else(|| exchange_letters(&free_reduce_letters(w.letters()), top))
        .map(|letters| BraidWord::from_parts(w.strands(), letters))
        .ok_or(Error::NoExchangePattern)
}

/// Expresses the exchange move on `B1 s B2 s^-1` (`s = sigma_{n-1}`) as five
/// conjugations, one positive stabilization and one positive
/// destabilization. `b1` and `b2` must lie in `B_{n-1}`, embedded in `B_n`.
pub fn birman_wrinkle_script(b1: &BraidWord, b2: &BraidWord, n: usize) -> Result<Vec<BwStep>> {
    if n < 2 {
        return Err(Error::LetterOutOfRange { letter: 1, strands: n });
    }
    for b in [b1, b2] {
        if let Some(&k) = b.letters().iter().find(|k| k.unsigned_abs() as usize > n - 2) {
            return Err(Error::LetterOutOfRange {
                letter: k,
                strands: n - 1,
            });
        }
    }
    let s = n as i32 - 1;
    let t = n as i32;
    let l1 = b1.letters();
    let l2 = b2.letters();
    let cat = |parts: &[&[i32]]| -> Vec<i32> { parts.concat() };
    let word = |strands: usize, letters: Vec<i32>| BraidWord::from_parts(strands, letters);
    let conj = |strands: usize, letters: Vec<i32>| MarkovMove::Conjugate(word(strands, letters));
    let inverse = |letters: &[i32]| -> Vec<i32> { letters.iter().rev().map(|k| -k).collect() };

    let w1 = word(n, cat(&[&[s], l1, &[s], l2, &[-s, -s]]));
    let w2 = word(n + 1, cat(&[&[s], l1, &[s], l2, &[-s, -s, t]]));
    // B1 s B2 s^-2 t s, displayed as B1 s B2 t s t^-2
    let w3 = word(n + 1, cat(&[l1, &[s], l2, &[t, s, -t, -t]]));
    // t^-2 B1 s t B2 s, displayed as B1 s t s^-2 B2 s
    let w4 = word(n + 1, cat(&[l1, &[s, t, -s, -s], l2, &[s]]));
    let w5 = word(n + 1, cat(&[&[-s, -s], l2, &[s], l1, &[s, t]]));
    let w6 = word(n, cat(&[&[-s, -s], l2, &[s], l1, &[s]]));
    let w7 = word(n, cat(&[l1, &[-s], l2, &[s]]));

    let steps = vec![
        BwStep { kind: conj(n, vec![s]), word: w1 },
        BwStep { kind: MarkovMove::PosStab, word: w2 },
        BwStep { kind: conj(n + 1, vec![-s]), word: w3 },
        BwStep { kind: conj(n + 1, vec![-t, -t]), word: w4 },
        BwStep {
            kind: conj(n + 1, inverse(&cat(&[l1, &[s, t]]))),
            word: w5,
        },
        BwStep { kind: MarkovMove::PosDestab, word: w6 },
        BwStep {
            kind: conj(n, inverse(&cat(&[&[-s, -s], l2, &[s]]))),
            word: w7,
        },
    ];
    let start = word(n, cat(&[l1, &[s], l2, &[-s]]));
    debug_assert_eq!(check_markov_path(&start, &steps), Ok(()));
    Ok(steps)
}
