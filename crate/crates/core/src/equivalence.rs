//! Bounded equivalence search on grids under a chosen class of moves.
//!
//! Search states are torus translation classes, keyed by their least
//! translate. Edges are move sequences between class representatives.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::braid::Verdict;
use crate::convert::{classical_invariants, grid_to_braid};
use crate::error::{Error, Result};
use crate::grid::{GridDiagram, Marker};
use crate::moves::{apply, destabilizations, translate, translation_moves, Corner, Move, MoveScript};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveClass {
    /// Topological: every X (de)stabilization.
    K,
    /// Legendrian: X:NE and X:SW.
    L,
    /// Transverse: X:NE, X:SW and X:SE.
    T,
    /// Braids up to conjugation and exchange: X:NE and X:SE.
    B,
    /// Translations and commutations only.
    TC,
}

impl MoveClass {
    /// X (de)stabilization types allowed besides translation and commutation.
    pub fn x_corners(self) -> &'static [Corner] {
        match self {
            MoveClass::K => &Corner::ALL,
            MoveClass::L => &[Corner::NE, Corner::SW],
            MoveClass::T => &[Corner::NE, Corner::SW, Corner::SE],
            MoveClass::B => &[Corner::NE, Corner::SE],
            MoveClass::TC => &[],
        }
    }
}

impl fmt::Display for MoveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveClass::K => "K",
            MoveClass::L => "L",
            MoveClass::T => "T",
            MoveClass::B => "B",
            MoveClass::TC => "TC",
        };
        f.write_str(s)
    }
}

impl FromStr for MoveClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "K" | "k" => Ok(MoveClass::K),
            "L" | "l" => Ok(MoveClass::L),
            "T" | "t" => Ok(MoveClass::T),
            "B" | "b" => Ok(MoveClass::B),
            "TC" | "tc" => Ok(MoveClass::TC),
            _ => Err(format!("unknown move class '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    pub max_grid_number: usize,
    pub max_states: usize,
    pub max_seconds: f64,
}

impl SearchBudget {
    /// Two above the larger input, 200000 states, 30 seconds.
    pub fn for_inputs(g1: &GridDiagram, g2: &GridDiagram) -> Self {
        SearchBudget {
            max_grid_number: g1.size().max(g2.size()) + 2,
            max_states: 200_000,
            max_seconds: 30.0,
        }
    }
}

/// Least translate of `g`, and the shift `(up, right)` producing it.
pub fn canonical(g: &GridDiagram) -> (GridDiagram, usize, usize) {
    let n = g.size();
    let mut best = (g.clone(), 0, 0);
    for up in 0..n {
        for right in 0..n {
            if up == 0 && right == 0 {
                continue;
            }
            let t = translate(g, up, right);
            if t < best.0 {
                best = (t, up, right);
            }
        }
    }
    best
}

/// Move sequences leaving `rep`, destabilizations first. Rows and columns
/// that wrap around the torus are reached through one translation.
fn expansions(rep: &GridDiagram, corners: &[Corner], max_n: usize) -> Vec<Vec<Move>> {
    let n = rep.size();
    let mut out: Vec<Vec<Move>> = Vec::new();
    if !corners.is_empty() && n > 2 {
        let shifted = [
            (vec![], false, false),
            (vec![Move::TranslateDown], true, false),
            (vec![Move::TranslateLeft], false, true),
            (vec![Move::TranslateDown, Move::TranslateLeft], true, true),
        ];
        for (prefix, wrap_row, wrap_col) in shifted {
            let g = MoveScript::new(prefix.clone())
                .replay(rep)
                .expect("translations always apply");
            for m in destabilizations(&g, &[Marker::X], corners) {
                let Move::Destabilize { row, column, .. } = m else { continue };
                if (wrap_row && row != n - 2) || (wrap_col && column != n - 2) {
                    continue;
                }
                let mut seq = prefix.clone();
                seq.push(m);
                out.push(seq);
            }
        }
    }
    for r in 0..n - 1 {
        if apply(rep, &Move::CommuteRows(r)).is_ok() {
            out.push(vec![Move::CommuteRows(r)]);
        }
    }
    if n > 2 && apply(&apply(rep, &Move::TranslateUp).unwrap(), &Move::CommuteRows(0)).is_ok() {
        out.push(vec![Move::TranslateUp, Move::CommuteRows(0)]);
    }
    for c in 0..n - 1 {
        if apply(rep, &Move::CommuteCols(c)).is_ok() {
            out.push(vec![Move::CommuteCols(c)]);
        }
    }
    if n > 2 && apply(&apply(rep, &Move::TranslateRight).unwrap(), &Move::CommuteCols(0)).is_ok()
    {
        out.push(vec![Move::TranslateRight, Move::CommuteCols(0)]);
    }
    if n < max_n {
        for &corner in corners {
            for column in 0..n {
                out.push(vec![Move::Stabilize {
                    marker: Marker::X,
                    corner,
                    column,
                }]);
            }
        }
    }
    out
}

/// Each class reached, with the edge that first reached it.
type Tree = HashMap<GridDiagram, Option<(GridDiagram, Vec<Move>)>>;

enum Outcome {
    /// Representative where the two trees meet.
    Met(GridDiagram),
    /// One side's closure was enumerated without meeting the other.
    Exhausted,
    OutOfBudget,
}

fn bidirectional(
    a: &GridDiagram,
    b: &GridDiagram,
    corners: &[Corner],
    max_n: usize,
    max_states: usize,
    deadline: Option<Instant>,
    trees: &mut [Tree; 2],
) -> Outcome {
    let starts = [a.clone(), b.clone()];
    for (tree, start) in trees.iter_mut().zip(&starts) {
        tree.insert(start.clone(), None);
    }
    if a == b {
        return Outcome::Met(a.clone());
    }
    let mut frontiers = [vec![a.clone()], vec![b.clone()]];
    loop {
        if frontiers.iter().any(|f| f.is_empty()) {
            return Outcome::Exhausted;
        }
        let s = if frontiers[1].len() < frontiers[0].len() { 1 } else { 0 };
        let mut next = Vec::new();
        for rep in std::mem::take(&mut frontiers[s]) {
            for seq in expansions(&rep, corners, max_n) {
                let reached = match MoveScript::new(seq.clone()).replay(&rep) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                let (child, up, right) = canonical(&reached);
                if trees[s].contains_key(&child) {
                    continue;
                }
                let mut edge = seq;
                edge.extend(translation_moves(reached.size(), up, right));
                trees[s].insert(child.clone(), Some((rep.clone(), edge)));
                if trees[1 - s].contains_key(&child) {
                    return Outcome::Met(child);
                }
                if trees[0].len() + trees[1].len() >= max_states
                    || deadline.is_some_and(|d| Instant::now() >= d)
                {
                    return Outcome::OutOfBudget;
                }
                next.push(child);
            }
        }
        frontiers[s] = next;
    }
}

/// Moves from the root of `tree` to `target`.
fn path_from_root(tree: &Tree, target: &GridDiagram) -> Vec<Move> {
    let mut edges = Vec::new();
    let mut at = target.clone();
    while let Some(Some((parent, edge))) = tree.get(&at) {
        edges.push(edge.clone());
        at = parent.clone();
    }
    edges.reverse();
    edges.concat()
}

/// Inverse of `moves` applied to `start`.
fn invert_path(start: &GridDiagram, moves: &[Move]) -> Vec<Move> {
    let mut grids = vec![start.clone()];
    for m in moves {
        let next = apply(grids.last().unwrap(), m).expect("recorded moves replay");
        grids.push(next);
    }
    moves
        .iter()
        .zip(&grids)
        .rev()
        .map(|(m, before)| m.inverse_on(before))
        .collect()
}

fn search(
    g1: &GridDiagram,
    g2: &GridDiagram,
    corners: &[Corner],
    max_n: usize,
    max_states: usize,
    deadline: Option<Instant>,
) -> (Outcome, Option<MoveScript>) {
    let (r1, up1, right1) = canonical(g1);
    let (r2, up2, right2) = canonical(g2);
    let mut trees = [Tree::new(), Tree::new()];
    let outcome = bidirectional(&r1, &r2, corners, max_n, max_states, deadline, &mut trees);
    let Outcome::Met(meet) = &outcome else {
        return (outcome, None);
    };
    let mut moves = translation_moves(g1.size(), up1, right1);
    moves.extend(path_from_root(&trees[0], meet));
    let back = path_from_root(&trees[1], meet);
    moves.extend(invert_path(&r2, &back));
    let n2 = g2.size();
    moves.extend(translation_moves(n2, n2 - up2, n2 - right2));
    let script = MoveScript::new(moves);
    debug_assert_eq!(script.replay(g1).as_ref(), Ok(g2));
    (outcome, Some(script))
}

/// Exact decision of equality up to translations and commutations.
pub fn tc_orbit_equal(g1: &GridDiagram, g2: &GridDiagram) -> bool {
    tc_script(g1, g2).is_some()
}

/// Translations and commutations taking `g1` to `g2`, if any.
pub fn tc_script(g1: &GridDiagram, g2: &GridDiagram) -> Option<MoveScript> {
    if g1.size() != g2.size() {
        return None;
    }
    search(g1, g2, &[], g1.size(), usize::MAX, None).1
}

/// Number of grids reachable by translations and commutations.
pub fn orbit_size(g: &GridDiagram, class: MoveClass) -> Result<usize> {
    if class != MoveClass::TC {
        return Err(Error::UnsupportedClass);
    }
    let n = g.size();
    let start = canonical(g).0;
    let mut seen: HashSet<GridDiagram> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    let mut total = 0;
    while let Some(rep) = stack.pop() {
        let translates: HashSet<GridDiagram> = (0..n)
            .flat_map(|up| (0..n).map(move |right| (up, right)))
            .map(|(up, right)| translate(&rep, up, right))
            .collect();
        total += translates.len();
        for seq in expansions(&rep, &[], n) {
            let reached = MoveScript::new(seq).replay(&rep).expect("legal commutation");
            let child = canonical(&reached).0;
            if seen.insert(child.clone()) {
                stack.push(child);
            }
        }
    }
    Ok(total)
}

/// Invariant of the class that differs between the grids, as a reason.
fn obstruction(g1: &GridDiagram, g2: &GridDiagram, class: MoveClass) -> Option<String> {
    let differ = |name: &str, a: String, b: String| {
        (a != b).then(|| format!("{name}: {a} vs {b}"))
    };
    if class == MoveClass::TC {
        if let Some(reason) = differ("grid number", g1.size().to_string(), g2.size().to_string()) {
            return Some(reason);
        }
    }
    if let Some(reason) = differ(
        "components",
        g1.components().to_string(),
        g2.components().to_string(),
    ) {
        return Some(reason);
    }
    let (i1, i2) = (classical_invariants(g1), classical_invariants(g2));
    match class {
        MoveClass::L | MoveClass::TC => differ("tb", i1.tb.to_string(), i2.tb.to_string())
            .or_else(|| differ("r", i1.r.to_string(), i2.r.to_string())),
        MoveClass::T => differ("sl", i1.sl.to_string(), i2.sl.to_string()),
        MoveClass::B => {
            let (b1, b2) = (grid_to_braid(g1), grid_to_braid(g2));
            let (v1, v2) = (b1.invariants(), b2.invariants());
            differ("strands", b1.strands().to_string(), b2.strands().to_string())
                .or_else(|| {
                    differ(
                        "exponent_sum",
                        v1.exponent_sum.to_string(),
                        v2.exponent_sum.to_string(),
                    )
                })
                .or_else(|| {
                    differ(
                        "cycle_type",
                        format!("{:?}", v1.cycle_type),
                        format!("{:?}", v2.cycle_type),
                    )
                })
        }
        MoveClass::K => None,
    }
}

/// Decides whether the grids are related by the moves of `class`, within
/// the budget. A `Yes` script replays from `g1` to exactly `g2`; a `No`
/// names a class invariant that differs.
pub fn equivalent(
    g1: &GridDiagram,
    g2: &GridDiagram,
    class: MoveClass,
    budget: &SearchBudget,
) -> Verdict<MoveScript> {
    if let Some(reason) = obstruction(g1, g2, class) {
        return Verdict::No(reason);
    }
    if class == MoveClass::TC {
        return match tc_script(g1, g2) {
            Some(script) => Verdict::Yes(script),
            None => Verdict::No("not in the translation and commutation orbit".to_string()),
        };
    }
    let deadline = Instant::now() + Duration::from_secs_f64(budget.max_seconds.max(0.0));
    let max_n = budget.max_grid_number.max(g1.size()).max(g2.size());
    match search(g1, g2, class.x_corners(), max_n, budget.max_states, Some(deadline)) {
        (_, Some(script)) => Verdict::Yes(script),
        _ => Verdict::Unknown,
    }
}
