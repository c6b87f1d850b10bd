//! Grids to braids through rectilinear braid diagrams, and back.

use std::collections::BTreeSet;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::grid::GridDiagram;
use crate::moves::{symmetry, Symmetry};

/// A braid drawn with rightward horizontals at integer heights and vertical
/// segments that pass over them.
///
/// Strands enter on the left at `entry_heights` and leave on the right at
/// the same heights. Each event is a vertical segment `(from, to)`; events
/// are ordered left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectilinearBraidDiagram {
    pub strand_count: usize,
    /// Sorted ascending.
    pub entry_heights: Vec<usize>,
    pub events: Vec<(usize, usize)>,
}

/// Cuts every leftward row of the grid at the boundary, turning it into a
/// strand that enters on the left and leaves on the right.
pub fn grid_to_rectilinear(g: &GridDiagram) -> RectilinearBraidDiagram {
    let x_col = g.x_columns();
    let o_col = g.o_columns();
    let entry_heights: Vec<usize> = (0..g.size()).filter(|&r| x_col[r] < o_col[r]).collect();
    let events = (0..g.size()).map(|c| (g.x()[c], g.o()[c])).collect();
    RectilinearBraidDiagram {
        strand_count: entry_heights.len(),
        entry_heights,
        events,
    }
}

/// Reads the diagram left to right. A vertical taking the strand at
/// position `p` (counted from the top, from 1) to position `q` crosses over
/// the strands in between: `s_p .. s_{q-1}` going down, inverses going up.
pub fn rectilinear_to_word(r: &RectilinearBraidDiagram) -> Result<BraidWord> {
    if r.strand_count == 0 || r.entry_heights.len() != r.strand_count {
        return Err(Error::MalformedDiagram(format!(
            "{} strands declared, {} entry heights",
            r.strand_count,
            r.entry_heights.len()
        )));
    }
    let mut active: BTreeSet<usize> = r.entry_heights.iter().copied().collect();
    if active.len() != r.strand_count {
        return Err(Error::MalformedDiagram("repeated entry height".to_string()));
    }
    let mut letters = Vec::new();
    for (i, &(from, to)) in r.events.iter().enumerate() {
        if !active.contains(&from) {
            return Err(Error::MalformedDiagram(format!(
                "event {i} starts at height {from} with no strand"
            )));
        }
        let p = active.range(from + 1..).count() + 1;
        active.remove(&from);
        if !active.insert(to) {
            return Err(Error::MalformedDiagram(format!(
                "event {i} ends on occupied height {to}"
            )));
        }
        let q = active.range(to + 1..).count() + 1;
        if q > p {
            letters.extend(p as i32..q as i32);
        } else {
            letters.extend((q as i32..p as i32).rev().map(|k| -k));
        }
    }
    if !active.iter().eq(r.entry_heights.iter()) {
        return Err(Error::MalformedDiagram(
            "exit heights differ from entry heights".to_string(),
        ));
    }
    BraidWord::new(r.strand_count, letters)
}

pub fn grid_to_braid(g: &GridDiagram) -> BraidWord {
    rectilinear_to_word(&grid_to_rectilinear(g)).expect("grids give well-formed diagrams")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Right,
    Up,
    Left,
    Down,
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" | "→" => Ok(Direction::Right),
            "up" | "↑" => Ok(Direction::Up),
            "left" | "←" => Ok(Direction::Left),
            "down" | "↓" => Ok(Direction::Down),
            other => Err(Error::Syntax {
                line: 1,
                column: 1,
                message: format!("unknown direction '{other}'"),
            }),
        }
    }
}

/// The braid read with strands running in the given direction.
pub fn directional_braid(g: &GridDiagram, direction: Direction) -> BraidWord {
    match direction {
        Direction::Right => grid_to_braid(g),
        Direction::Left => grid_to_braid(&symmetry(g, Symmetry::S1)),
        Direction::Up => grid_to_braid(&symmetry(g, Symmetry::S2)),
        Direction::Down => grid_to_braid(&symmetry(&symmetry(g, Symmetry::S2), Symmetry::S1)),
    }
}

/// Builds a grid whose braid reading is `w` letter for letter.
///
/// Rows are kept as an ordered list of levels, top first. Strand `j`
/// wraps through level `W_j`; between moves the strand at position `j` sits
/// strictly between `W_j` and `W_{j+1}` (its band), so each column crosses
/// exactly the strands its letter requires.
pub fn braid_to_grid(w: &BraidWord) -> GridDiagram {
    let n = w.strands();
    let mut levels: Vec<usize> = Vec::new();
    let mut fresh = 0usize;
    let mut new_level = || {
        fresh += 1;
        fresh - 1
    };
    let wrap: Vec<usize> = (0..n).map(|_| new_level()).collect();
    levels.extend(&wrap);
    let index_of = |levels: &Vec<usize>, id: usize| levels.iter().position(|&l| l == id).unwrap();
    let mut columns: Vec<(usize, usize)> = Vec::with_capacity(2 * (n + w.len()));
    let mut at = vec![0usize; n];
    for j in 0..n {
        let id = new_level();
        let below = index_of(&levels, wrap[j]) + 1;
        levels.insert(below, id);
        columns.push((wrap[j], id));
        at[j] = id;
    }
    let band_end = |levels: &Vec<usize>, j: usize| {
        if j + 1 < n {
            index_of(levels, wrap[j + 1])
        } else {
            levels.len()
        }
    };
    for &k in w.letters() {
        let i = k.unsigned_abs() as usize - 1;
        let (a, b) = (at[i], at[i + 1]);
        if k > 0 {
            let id = new_level();
            levels.insert(index_of(&levels, b) + 1, id);
            columns.push((a, id));
            // the old lower strand now holds position i, still in band i+1
            let back = new_level();
            levels.insert(band_end(&levels, i), back);
            columns.push((b, back));
            at[i] = back;
            at[i + 1] = id;
        } else {
            let id = new_level();
            levels.insert(index_of(&levels, a), id);
            columns.push((b, id));
            let back = new_level();
            levels.insert(index_of(&levels, wrap[i + 1]) + 1, back);
            columns.push((a, back));
            at[i] = id;
            at[i + 1] = back;
        }
    }
    for j in 0..n {
        columns.push((at[j], wrap[j]));
    }
    let size = levels.len();
    let mut row = vec![0usize; size];
    for (index, &id) in levels.iter().enumerate() {
        row[id] = size - 1 - index;
    }
    let x = columns.iter().map(|&(from, _)| row[from]).collect();
    let o = columns.iter().map(|&(_, to)| row[to]).collect();
    GridDiagram::from_parts(x, o)
}
