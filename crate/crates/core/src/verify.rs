//! Seeded randomized checks of how moves and symmetries act on braids and
//! classical invariants.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{
    birman_wrinkle_script, check_markov_path, exchange, markov_oracle, BraidWord, OracleBudget,
    Verdict,
};
use crate::convert::{braid_to_grid, classical_invariants, grid_to_braid, sl_from_braid};
use crate::equivalence::tc_orbit_equal;
use crate::grid::{GridDiagram, Marker};
use crate::moves::{
    apply, image_x_column, legal_moves, stab_type_image, symmetry, translate, Corner, Move,
    Symmetry,
};
use crate::random::{random_grid, random_word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Table2,
    Roundtrip,
    Bw,
    SlCoherence,
    Markov,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Table1,
        Suite::Table2,
        Suite::Roundtrip,
        Suite::Bw,
        Suite::SlCoherence,
        Suite::Markov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Roundtrip => "roundtrip",
            Suite::Bw => "bw",
            Suite::SlCoherence => "slcoherence",
            Suite::Markov => "markov",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Tally for one property, keeping the first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Property {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

impl Property {
    pub fn new(name: &str) -> Self {
        Property {
            name: name.to_string(),
            passed: 0,
            failed: 0,
            counterexample: None,
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let total = self.passed + self.failed;
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({}/{total})", self.name, self.passed)?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub properties: Vec<Property>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.properties.iter().all(Property::ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite={} trials={} seed={}",
            self.suite.name(),
            self.trials,
            self.seed
        )?;
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, trials: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let properties = match suite {
        Suite::Table1 => table1(trials, &mut rng),
        Suite::Table2 => table2(trials, &mut rng),
        Suite::Roundtrip => roundtrip(trials, &mut rng),
        Suite::Bw => bw(trials, &mut rng),
        Suite::SlCoherence => sl_coherence(trials, &mut rng),
        Suite::Markov => markov(trials, &mut rng),
    };
    Report {
        suite,
        trials,
        seed,
        properties,
    }
}

fn show(g: &GridDiagram) -> String {
    format!("x={:?} o={:?}", g.x(), g.o())
}

fn x_stab(corner: Corner, column: usize) -> Move {
    Move::Stabilize {
        marker: Marker::X,
        corner,
        column,
    }
}

/// Expected change of `(tb, r, sl)` under an X stabilization.
pub fn legendrian_delta(corner: Corner) -> (i64, i64, i64) {
    match corner {
        Corner::NE | Corner::SW => (0, 0, 0),
        Corner::SE => (-1, -1, 0),
        Corner::NW => (-1, 1, -2),
    }
}

/// Expected change of `(exponent_sum, strands)`; `None` means unchanged as
/// a braid.
pub fn braid_delta(corner: Corner) -> Option<(i64, usize)> {
    match corner {
        Corner::NE | Corner::SE => None,
        Corner::SW => Some((1, 1)),
        Corner::NW => Some((-1, 1)),
    }
}

/// Whether the braid of `h` relates to that of `g` as the stabilization
/// type predicts.
pub fn braid_column_holds(g: &GridDiagram, h: &GridDiagram, corner: Corner) -> bool {
    let (b, hb) = (grid_to_braid(g), grid_to_braid(h));
    match braid_delta(corner) {
        None => b.strands() == hb.strands() && b.equals(&hb).unwrap_or(false),
        Some((de, ds)) => {
            hb.exponent_sum() - b.exponent_sum() == de && hb.strands() == b.strands() + ds
        }
    }
}

pub fn legendrian_column_holds(g: &GridDiagram, h: &GridDiagram, corner: Corner) -> bool {
    let (i, j) = (classical_invariants(g), classical_invariants(h));
    (j.tb - i.tb, j.r - i.r, j.sl - i.sl) == legendrian_delta(corner)
}

/// Cyclic rotation moving the first `i` letters to the end.
pub fn rotate_word(w: &BraidWord, i: usize) -> BraidWord {
    let mut letters = w.letters()[i..].to_vec();
    letters.extend_from_slice(&w.letters()[..i]);
    BraidWord::new(w.strands(), letters).expect("same letters")
}

/// True when `b` equals a cyclic rotation of the exchange of a cyclic
/// rotation of `a`.
pub fn exchange_related(a: &BraidWord, b: &BraidWord) -> bool {
    if a.strands() != b.strands() {
        return false;
    }
    (0..a.len().max(1)).any(|i| {
        exchange(&rotate_word(a, i)).is_ok_and(|e| {
            (0..e.len().max(1)).any(|j| rotate_word(&e, j).equals(b).unwrap_or(false))
        })
    })
}

/// Translates `g` so rows `r, r + 1` become the bottom two rows, with the
/// markers of the bottom row right of those of the row above and the
/// bottom-right cell occupied. Requires the row commutation to be legal.
pub fn normalize_row_pair(g: &GridDiagram, r: usize) -> GridDiagram {
    let n = g.size();
    let h = translate(g, n - r, 0);
    let (xc, oc) = (h.x_columns(), h.o_columns());
    let bottom = [xc[0], oc[0]];
    let above = [xc[1], oc[1]];
    // the bottom-row marker followed, cyclically, by a marker of the row above
    let last = bottom
        .into_iter()
        .find(|&m| {
            let next = (1..n)
                .map(|d| (m + d) % n)
                .find(|c| bottom.contains(c) || above.contains(c))
                .expect("four markers");
            above.contains(&next)
        })
        .expect("non-interleaved rows");
    translate(&h, 0, n - 1 - last)
}

/// Row commutation changes the braid by nothing or by one exchange, read
/// in the normalized position.
pub fn row_commutation_holds(g: &GridDiagram, r: usize) -> bool {
    let t = normalize_row_pair(g, r);
    let Ok(swapped) = apply(&t, &Move::CommuteRows(0)) else {
        return false;
    };
    let (b0, b1) = (grid_to_braid(&t), grid_to_braid(&swapped));
    (b0.strands() == b1.strands() && b0.equals(&b1).unwrap_or(false)) || exchange_related(&b0, &b1)
}

fn table1<R: Rng>(trials: usize, rng: &mut R) -> Vec<Property> {
    let mut braid = Property::new("braid column under X stabilization");
    let mut legendrian = Property::new("tb, r, sl deltas under X stabilization");
    let mut isotopy = Property::new("tb, r unchanged by translation and commutation");
    let mut markov = Property::new("X:SW stabilization is Markov equivalent (n<=4)");
    let mut rows = Property::new("row commutation is trivial or one exchange");
    let budget = OracleBudget::default();
    for _ in 0..trials {
        let n = rng.random_range(2..=6);
        let g = random_grid(n, rng);
        let column = rng.random_range(0..n);
        for corner in Corner::ALL {
            let h = apply(&g, &x_stab(corner, column)).expect("stabilization applies");
            let witness = || format!("{} X:{corner} column {column}", show(&g));
            braid.record(braid_column_holds(&g, &h, corner), witness);
            legendrian.record(legendrian_column_holds(&g, &h, corner), witness);
            if corner == Corner::SW && n <= 4 {
                let verdict = markov_oracle(&grid_to_braid(&g), &grid_to_braid(&h), &budget);
                markov.record(verdict.is_yes(), witness);
            }
        }
        let inv = classical_invariants(&g);
        for m in legal_moves(&g) {
            if m.is_translation() || m.is_commutation() {
                let j = classical_invariants(&apply(&g, &m).expect("legal"));
                isotopy.record((j.tb, j.r) == (inv.tb, inv.r), || format!("{} {m}", show(&g)));
            }
            if let Move::CommuteRows(r) = m {
                rows.record(row_commutation_holds(&g, r), || format!("{} {m}", show(&g)));
            }
        }
    }
    vec![braid, legendrian, isotopy, markov, rows]
}

/// `s` after an X stabilization agrees, up to translation and commutation,
/// with the image stabilization after `s`.
pub fn table2_holds(g: &GridDiagram, s: Symmetry, corner: Corner, column: usize) -> bool {
    let left = symmetry(&apply(g, &x_stab(corner, column)).expect("applies"), s);
    let image = stab_type_image(s, corner);
    let right = apply(&symmetry(g, s), &x_stab(image, image_x_column(g, s, column)))
        .expect("applies");
    tc_orbit_equal(&left, &right)
}

fn table2<R: Rng>(trials: usize, rng: &mut R) -> Vec<Property> {
    let mut prop = Property::new("symmetry and stabilization commute up to orbit");
    for _ in 0..trials {
        let n = rng.random_range(2..=5);
        let g = random_grid(n, rng);
        let column = rng.random_range(0..n);
        for s in Symmetry::ALL {
            for corner in Corner::ALL {
                prop.record(table2_holds(&g, s, corner, column), || {
                    format!("{} {s:?} X:{corner} column {column}", show(&g))
                });
            }
        }
    }
    vec![prop]
}

fn roundtrip<R: Rng>(trials: usize, rng: &mut R) -> Vec<Property> {
    let mut prop = Property::new("braid to grid to braid is the identity");
    for _ in 0..trials {
        let strands = rng.random_range(1..=4);
        let len = rng.random_range(0..=8);
        let w = random_word(strands, len, rng);
        prop.record(grid_to_braid(&braid_to_grid(&w)) == w, || w.to_string());
    }
    vec![prop]
}

/// The exchange script for `(b1, b2, n)` replays and ends at the exchanged
/// word.
pub fn bw_holds(b1: &BraidWord, b2: &BraidWord, n: usize) -> bool {
    let Ok(steps) = birman_wrinkle_script(b1, b2, n) else {
        return false;
    };
    let s = n as i32 - 1;
    let word = |parts: &[&[i32]]| BraidWord::new(n, parts.concat()).expect("in range");
    let start = word(&[b1.letters(), &[s], b2.letters(), &[-s]]);
    let end = word(&[b1.letters(), &[-s], b2.letters(), &[s]]);
    steps.len() == 7
        && check_markov_path(&start, &steps).is_ok()
        && steps[6].word.equals(&end).unwrap_or(false)
}

fn bw<R: Rng>(trials: usize, rng: &mut R) -> Vec<Property> {
    let mut prop = Property::new("exchange script verifies step by step");
    for _ in 0..trials {
        let n = rng.random_range(2..=5);
        let l1 = rng.random_range(0..=4);
        let l2 = rng.random_range(0..=4);
        let b1 = random_word(n - 1, l1, rng);
        let b2 = random_word(n - 1, l2, rng);
        prop.record(bw_holds(&b1, &b2, n), || format!("{b1} / {b2} n={n}"));
    }
    vec![prop]
}

fn sl_coherence<R: Rng>(trials: usize, rng: &mut R) -> Vec<Property> {
    let mut prop = Property::new("sl of the braid equals sl of the front");
    for _ in 0..trials {
        let n = rng.random_range(2..=7);
        let g = random_grid(n, rng);
        let ok = sl_from_braid(&grid_to_braid(&g)) == classical_invariants(&g).sl;
        prop.record(ok, || show(&g));
    }
    vec![prop]
}

/// Applies a random conjugation, positive stabilization or exchange.
fn random_markov_move<R: Rng>(w: &BraidWord, rng: &mut R) -> BraidWord {
    match rng.random_range(0..3) {
        0 if w.strands() < 4 => w.pos_stab(),
        1 => exchange(w).unwrap_or_else(|_| w.clone()),
        _ => {
            let u = random_word(w.strands(), 1, rng);
            w.conjugate(&u).expect("same strands")
        }
    }
}

fn markov<R: Rng>(trials: usize, rng: &mut R) -> Vec<Property> {
    let mut sound = Property::new("oracle never answers No for related braids");
    let mut replay = Property::new("Yes witnesses replay");
    let budget = OracleBudget::default();
    for _ in 0..trials {
        let strands = rng.random_range(1..=3);
        let len = rng.random_range(0..=4);
        let w = random_word(strands, len, rng);
        let mut v = w.clone();
        for _ in 0..rng.random_range(1..=2) {
            v = random_markov_move(&v, rng);
        }
        let verdict = markov_oracle(&w, &v, &budget);
        sound.record(!verdict.is_no(), || format!("{w} ~ {v}"));
        if let Verdict::Yes(steps) = verdict {
            let ok = check_markov_path(&w, &steps).is_ok()
                && steps.last().map(|s| &s.word) == Some(&v);
            replay.record(ok, || format!("{w} ~ {v}"));
        }
    }
    vec![sound, replay]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for suite in Suite::ALL {
            let report = run(suite, 10, 7);
            assert!(report.ok(), "{report}");
        }
    }

    #[test]
    fn deterministic_output() {
        let a = run(Suite::Roundtrip, 20, 3).to_string();
        let b = run(Suite::Roundtrip, 20, 3).to_string();
        assert_eq!(a, b);
        assert!(a.starts_with("suite=roundtrip trials=20 seed=3\nPASS"));
    }
}
