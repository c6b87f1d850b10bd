//! Bounded searches for conjugacy and Markov equivalence.
//!
//! Visited elements are bucketed by the Hurwitz action on fixed tuples of
//! permutations (a braid group invariant) and confirmed by word equality.

use std::collections::HashMap;

use super::markov::{MarkovMove, MarkovStep};
use super::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Conjugator length for the conjugacy search, moves per side for the
    /// Markov search.
    pub max_depth: usize,
    pub max_states: usize,
    /// Extra strands the Markov search may add above the larger input.
    pub max_extra_strands: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_depth: 6,
            max_states: 20_000,
            max_extra_strands: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Yes(W),
    No(String),
    Unknown,
}

impl<W> Verdict<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }
}

const DEGREE: usize = 7;
const TUPLES: usize = 2;

type Perm = [u8; DEGREE];

fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a b)(i) = a(b(i))
    let mut out = [0; DEGREE];
    for i in 0..DEGREE {
        out[i] = a[b[i] as usize];
    }
    out
}

fn inv(a: &Perm) -> Perm {
    let mut out = [0; DEGREE];
    for i in 0..DEGREE {
        out[a[i] as usize] = i as u8;
    }
    out
}

/// Fixed pseudo-random permutation for strand `i` of tuple `t`.
fn seed_perm(t: usize, i: usize) -> Perm {
    let mut p: Perm = [0, 1, 2, 3, 4, 5, 6];
    let mut state = (t as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (i as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03);
    for k in (1..DEGREE).rev() {
        state ^= state >> 31;
        state = state.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        state ^= state >> 29;
        let j = (state % (k as u64 + 1)) as usize;
        p.swap(k, j);
    }
    p
}

/// Hurwitz action image of fixed seed tuples; equal braids give equal
/// fingerprints.
fn fingerprint(w: &BraidWord) -> Vec<Perm> {
    let n = w.strands();
    let mut out = Vec::with_capacity(TUPLES * n);
    for t in 0..TUPLES {
        let mut tuple: Vec<Perm> = (0..n).map(|i| seed_perm(t, i)).collect();
        for &k in w.letters() {
            let i = k.unsigned_abs() as usize - 1;
            let (a, b) = (tuple[i], tuple[i + 1]);
            if k > 0 {
                tuple[i] = compose(&compose(&a, &b), &inv(&a));
                tuple[i + 1] = a;
            } else {
                tuple[i] = b;
                tuple[i + 1] = compose(&compose(&inv(&b), &a), &b);
            }
        }
        out.extend(tuple);
    }
    out
}

/// Set of braid group elements with an index per element.
struct ElementSet {
    buckets: HashMap<Vec<Perm>, Vec<(BraidWord, usize)>>,
    len: usize,
}

impl ElementSet {
    fn new() -> Self {
        ElementSet {
            buckets: HashMap::new(),
            len: 0,
        }
    }

    fn find_with(&self, print: &[Perm], w: &BraidWord) -> Option<usize> {
        self.buckets.get(print).and_then(|bucket| {
            bucket
                .iter()
                .find(|(other, _)| other.strands() == w.strands() && other.equals(w).unwrap_or(false))
                .map(|&(_, id)| id)
        })
    }

    fn find(&self, w: &BraidWord) -> Option<usize> {
        self.find_with(&fingerprint(w), w)
    }

    /// Inserts unless present; returns whether it was new.
    fn insert(&mut self, w: &BraidWord, id: usize) -> bool {
        let print = fingerprint(w);
        if self.find_with(&print, w).is_some() {
            return false;
        }
        self.buckets.entry(print).or_default().push((w.clone(), id));
        self.len += 1;
        true
    }
}

fn generators(strands: usize) -> impl Iterator<Item = i32> {
    (1..strands as i32).flat_map(|k| [k, -k])
}

/// Searches for `u` with `u w1 u^-1 = w2`.
pub fn conjugacy_oracle(
    w1: &BraidWord,
    w2: &BraidWord,
    budget: &OracleBudget,
) -> Result<Verdict<BraidWord>> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch(w1.strands(), w2.strands()));
    }
    let (i1, i2) = (w1.invariants(), w2.invariants());
    if i1.exponent_sum != i2.exponent_sum {
        return Ok(Verdict::No(format!(
            "exponent_sum: {} vs {}",
            i1.exponent_sum, i2.exponent_sum
        )));
    }
    if i1.cycle_type != i2.cycle_type {
        return Ok(Verdict::No(format!(
            "cycle_type: {:?} vs {:?}",
            i1.cycle_type, i2.cycle_type
        )));
    }
    let n = w1.strands();
    let mut target = ElementSet::new();
    target.insert(w2, 0);
    if target.find(w1).is_some() {
        return Ok(Verdict::Yes(BraidWord::identity(n)));
    }
    let mut seen = ElementSet::new();
    let start = w1.handle_reduced();
    seen.insert(&start, 0);
    let mut frontier = vec![(start, Vec::<i32>::new())];
    for _ in 0..budget.max_depth {
        let mut next = Vec::new();
        for (word, u) in &frontier {
            for g in generators(n) {
                let mut letters = vec![g];
                letters.extend_from_slice(word.letters());
                letters.push(-g);
                let candidate = BraidWord::from_parts(n, letters).handle_reduced();
                if !seen.insert(&candidate, 0) {
                    continue;
                }
                let mut conjugator = vec![g];
                conjugator.extend_from_slice(u);
                if target.find(&candidate).is_some() {
                    return Ok(Verdict::Yes(BraidWord::from_parts(n, conjugator)));
                }
                if seen.len >= budget.max_states {
                    return Ok(Verdict::Unknown);
                }
                next.push((candidate, conjugator));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(Verdict::Unknown)
}

struct Node {
    word: BraidWord,
    parent: Option<(usize, MarkovMove)>,
}

struct Side {
    nodes: Vec<Node>,
    seen: ElementSet,
    frontier: Vec<usize>,
}

impl Side {
    fn new(start: &BraidWord) -> Self {
        let word = start.handle_reduced();
        let mut seen = ElementSet::new();
        seen.insert(&word, 0);
        Side {
            nodes: vec![Node { word, parent: None }],
            seen,
            frontier: vec![0],
        }
    }

    /// Moves from the start to node `id`, in order.
    fn path_to(&self, mut id: usize) -> Vec<MarkovStep> {
        let mut steps = Vec::new();
        while let Some((parent, kind)) = &self.nodes[id].parent {
            steps.push(MarkovStep {
                kind: kind.clone(),
                word: self.nodes[id].word.clone(),
            });
            id = *parent;
        }
        steps.reverse();
        steps
    }
}

fn neighbours(w: &BraidWord, max_strands: usize) -> Vec<(MarkovMove, BraidWord)> {
    let n = w.strands();
    let mut out = Vec::new();
    if let Ok(d) = w.pos_destab() {
        out.push((MarkovMove::PosDestab, d.handle_reduced()));
    }
    for g in generators(n) {
        let mut letters = vec![g];
        letters.extend_from_slice(w.letters());
        letters.push(-g);
        let u = BraidWord::from_parts(n, vec![g]);
        out.push((
            MarkovMove::Conjugate(u),
            BraidWord::from_parts(n, letters).handle_reduced(),
        ));
    }
    if n < max_strands {
        out.push((MarkovMove::PosStab, w.pos_stab()));
    }
    out
}

fn invert_move(kind: &MarkovMove) -> MarkovMove {
    match kind {
        MarkovMove::Conjugate(u) => MarkovMove::Conjugate(u.inverse()),
        MarkovMove::PosStab => MarkovMove::PosDestab,
        MarkovMove::PosDestab => MarkovMove::PosStab,
    }
}

/// Searches for conjugations and positive (de)stabilizations taking `w1` to
/// `w2`. The witness replays under [`super::check_markov_path`].
pub fn markov_oracle(
    w1: &BraidWord,
    w2: &BraidWord,
    budget: &OracleBudget,
) -> Verdict<Vec<MarkovStep>> {
    if w1.self_linking() != w2.self_linking() {
        return Verdict::No(format!(
            "e-n: {} vs {}",
            w1.self_linking(),
            w2.self_linking()
        ));
    }
    if w1.closure_components() != w2.closure_components() {
        return Verdict::No(format!(
            "components: {} vs {}",
            w1.closure_components(),
            w2.closure_components()
        ));
    }
    let max_strands = w1.strands().max(w2.strands()) + budget.max_extra_strands;
    let mut sides = [Side::new(w1), Side::new(w2)];
    if let Some(meet) = sides[1].seen.find(&sides[0].nodes[0].word) {
        return Verdict::Yes(join(&sides, 0, meet, w2));
    }
    let mut states = 2;
    for _ in 0..budget.max_depth {
        for s in 0..2 {
            let frontier = std::mem::take(&mut sides[s].frontier);
            let mut next = Vec::new();
            for id in frontier {
                let word = sides[s].nodes[id].word.clone();
                for (kind, candidate) in neighbours(&word, max_strands) {
                    let new_id = sides[s].nodes.len();
                    if !sides[s].seen.insert(&candidate, new_id) {
                        continue;
                    }
                    sides[s].nodes.push(Node {
                        word: candidate.clone(),
                        parent: Some((id, kind)),
                    });
                    states += 1;
                    if let Some(other) = sides[1 - s].seen.find(&candidate) {
                        let (a, b) = if s == 0 { (new_id, other) } else { (other, new_id) };
                        return Verdict::Yes(join(&sides, a, b, w2));
                    }
                    if states >= budget.max_states {
                        return Verdict::Unknown;
                    }
                    next.push(new_id);
                }
            }
            sides[s].frontier = next;
        }
        if sides.iter().all(|side| side.frontier.is_empty()) {
            break;
        }
    }
    Verdict::Unknown
}

/// Forward path to `a`, then the reversed backward path from `b`, ending on
/// the literal target.
fn join(sides: &[Side; 2], a: usize, b: usize, target: &BraidWord) -> Vec<MarkovStep> {
    let mut steps = sides[0].path_to(a);
    let backward = sides[1].path_to(b);
    for (i, step) in backward.iter().enumerate().rev() {
        let word = if i == 0 {
            target.clone()
        } else {
            backward[i - 1].word.clone()
        };
        steps.push(MarkovStep {
            kind: invert_move(&step.kind),
            word,
        });
    }
    if steps.is_empty() || steps.last().map(|s| &s.word) != Some(target) {
        steps.push(MarkovStep {
            kind: MarkovMove::Conjugate(BraidWord::identity(target.strands())),
            word: target.clone(),
        });
    }
    steps
}
