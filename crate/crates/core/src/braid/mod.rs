//! Braid words on `n` strands.
//!
//! Letter `k > 0` is `sigma_k`, letter `-k` its inverse. Strands are
//! numbered top to bottom and braids read left to right; in `sigma_k` the
//! upper of strands `k, k+1` passes over the lower one.

mod handle;
mod markov;
mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use handle::handle_reduce;
pub use markov::{
    birman_wrinkle_script, check_markov_path, exchange, BwStep, MarkovMove, MarkovStep,
};
pub use oracle::{conjugacy_oracle, markov_oracle, OracleBudget, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::LetterOutOfRange {
                letter: 0,
                strands,
            });
        }
        if let Some(&letter) = letters
            .iter()
            .find(|&&k| k == 0 || k.unsigned_abs() as usize >= strands)
        {
            return Err(Error::LetterOutOfRange { letter, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_parts(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(BraidWord::new(strands, letters.clone()).is_ok());
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::from_parts(strands.max(1), Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&k| i64::from(k.signum())).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::from_parts(
            self.strands,
            self.letters.iter().rev().map(|&k| -k).collect(),
        )
    }

    /// Every letter replaced by its inverse.
    pub fn mirror(&self) -> BraidWord {
        BraidWord::from_parts(self.strands, self.letters.iter().map(|&k| -k).collect())
    }

    /// The word read backwards.
    pub fn reverse(&self) -> BraidWord {
        BraidWord::from_parts(self.strands, self.letters.iter().rev().copied().collect())
    }

    /// Cancels adjacent `k, -k` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord::from_parts(self.strands, free_reduce_letters(&self.letters))
    }

    /// Handle-reduced form; empty exactly when the braid is trivial.
    pub fn handle_reduced(&self) -> BraidWord {
        BraidWord::from_parts(self.strands, handle_reduce(&self.letters))
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent_sum() == 0 && handle_reduce(&self.letters).is_empty()
    }

    /// Equality in the braid group.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        if self.exponent_sum() != other.exponent_sum()
            || self.permutation() != other.permutation()
        {
            return Ok(false);
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().rev().map(|&k| -k));
        Ok(handle_reduce(&letters).is_empty())
    }

    /// `u w u^-1`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord> {
        if self.strands != by.strands {
            return Err(Error::StrandMismatch(self.strands, by.strands));
        }
        let mut letters = by.letters.clone();
        letters.extend_from_slice(&self.letters);
        letters.extend(by.letters.iter().rev().map(|&k| -k));
        Ok(BraidWord::from_parts(self.strands, letters))
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_parts(self.strands, letters))
    }

    fn stabilize(&self, sign: i32) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(sign * self.strands as i32);
        BraidWord::from_parts(self.strands + 1, letters)
    }

    /// `w sigma_n` on `n + 1` strands.
    pub fn pos_stab(&self) -> BraidWord {
        self.stabilize(1)
    }

    /// `w sigma_n^-1` on `n + 1` strands.
    pub fn neg_stab(&self) -> BraidWord {
        self.stabilize(-1)
    }

    /// Removes a final `sigma_{n-1}^{+-1}` when the rest of the word avoids
    /// `sigma_{n-1}`. The literal word is tried first, then its free
    /// reduction.
    pub fn destab(&self) -> Result<BraidWord> {
        self.destab_matching(|_| true)
    }

    /// Like [`BraidWord::destab`] but only for a final positive letter.
    pub fn pos_destab(&self) -> Result<BraidWord> {
        self.destab_matching(|sign| sign > 0)
    }

    fn destab_matching(&self, accept: impl Fn(i32) -> bool) -> Result<BraidWord> {
        let top = self.strands as i32 - 1;
        let attempt = |letters: &[i32]| -> Option<BraidWord> {
            let (&last, rest) = letters.split_last()?;
            if last.abs() != top || !accept(last.signum()) || rest.iter().any(|k| k.abs() == top)
            {
                return None;
            }
            Some(BraidWord::from_parts(self.strands - 1, rest.to_vec()))
        };
        if self.strands < 2 {
            return Err(Error::NotDestabilizable);
        }
        attempt(&self.letters)
            .or_else(|| attempt(&free_reduce_letters(&self.letters)))
            .ok_or(Error::NotDestabilizable)
    }

    /// Final position of the strand starting at each position (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn invariants(&self) -> BraidInvariants {
        let strand_perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycle_type = Vec::new();
        for start in 0..self.strands {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = strand_perm[i];
                len += 1;
            }
            if len > 0 {
                cycle_type.push(len);
            }
        }
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        BraidInvariants {
            exponent_sum: self.exponent_sum(),
            strand_perm,
            cycle_type,
        }
    }

    /// Components of the closure.
    pub fn closure_components(&self) -> usize {
        self.invariants().cycle_type.len()
    }

    /// Bennequin self-linking number of the closure: `e - n`.
    pub fn self_linking(&self) -> i64 {
        self.exponent_sum() - self.strands as i64
    }

    /// Reads `"n=K; l1 l2 ..."`. Without the prefix the strand count is one
    /// more than the largest generator index.
    pub fn parse(text: &str) -> Result<Self> {
        let body: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(" ");
        let trimmed = body.trim();
        let (strands, rest) = match trimmed.strip_prefix("n=") {
            Some(after) => {
                let (count, rest) = after.split_once(';').ok_or_else(|| Error::Syntax {
                    line: 1,
                    column: 1,
                    message: "expected ';' after strand count".to_string(),
                })?;
                let count = count.trim().parse::<usize>().map_err(|_| Error::Syntax {
                    line: 1,
                    column: 3,
                    message: format!("bad strand count '{}'", count.trim()),
                })?;
                (Some(count), rest)
            }
            None => (None, trimmed),
        };
        let letters = rest
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>().map_err(|_| Error::Syntax {
                    line: 1,
                    column: 1,
                    message: format!("bad braid letter '{tok}'"),
                })
            })
            .collect::<Result<Vec<i32>>>()?;
        let strands = strands.unwrap_or_else(|| {
            letters
                .iter()
                .map(|k| k.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1)
        });
        BraidWord::new(strands, letters)
    }

    /// `"n=K;"` on the first line, the letters on the second.
    pub fn serialize(&self) -> String {
        format!("n={};\n{}\n", self.strands, self.letter_string())
    }

    fn letter_string(&self) -> String {
        self.letters
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; {}", self.strands, self.letter_string())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BraidWord::parse(s)
    }
}

/// Group equality of two braid words.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.equals(b)
}

pub(crate) fn free_reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &k in letters {
        if out.last() == Some(&-k) {
            out.pop();
        } else {
            out.push(k);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidInvariants {
    pub exponent_sum: i64,
    /// `strand_perm[i]` is the final position of the strand entering at
    /// position `i` (0-based).
    pub strand_perm: Vec<usize>,
    /// Cycle lengths of `strand_perm`, largest first.
    pub cycle_type: Vec<usize>,
}
