//! Cromwell moves on grid diagrams and the grid symmetries S1-S4.
//!
//! A (de)stabilization is named by its marker kind and by the corner of the
//! 2x2 block left empty. Stabilizing the marker at `(r, c)` replaces that
//! cell by the block occupying rows `r, r+1` and columns `c, c+1` of the
//! larger grid; the displaced partners in row `r` and column `c` move to
//! the block row and block column that lack an opposite-kind marker.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::{invert, GridDiagram, Marker};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NW, Corner::NE, Corner::SW, Corner::SE];

    pub fn is_north(self) -> bool {
        matches!(self, Corner::NW | Corner::NE)
    }

    pub fn is_east(self) -> bool {
        matches!(self, Corner::NE | Corner::SE)
    }

    fn from_parts(north: bool, east: bool) -> Corner {
        match (north, east) {
            (true, false) => Corner::NW,
            (true, true) => Corner::NE,
            (false, false) => Corner::SW,
            (false, true) => Corner::SE,
        }
    }

    /// The diagonally opposite corner.
    pub fn opposite(self) -> Corner {
        Corner::from_parts(!self.is_north(), !self.is_east())
    }

    /// Mirror across a horizontal axis (N <-> S).
    pub fn flip_vertical(self) -> Corner {
        Corner::from_parts(!self.is_north(), self.is_east())
    }

    /// Mirror across a vertical axis (E <-> W).
    pub fn flip_horizontal(self) -> Corner {
        Corner::from_parts(self.is_north(), !self.is_east())
    }

    /// Reflection about the SW-NE diagonal.
    pub fn transpose(self) -> Corner {
        match self {
            Corner::NW => Corner::SE,
            Corner::SE => Corner::NW,
            other => other,
        }
    }

    /// Offsets `(row, column)` of this corner inside a 2x2 block.
    fn offset(self) -> (usize, usize) {
        (usize::from(self.is_north()), usize::from(self.is_east()))
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Corner::NW => "NW",
            Corner::NE => "NE",
            Corner::SW => "SW",
            Corner::SE => "SE",
        })
    }
}

impl FromStr for Corner {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "NW" => Ok(Corner::NW),
            "NE" => Ok(Corner::NE),
            "SW" => Ok(Corner::SW),
            "SE" => Ok(Corner::SE),
            _ => Err(format!("unknown corner '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    TranslateUp,
    TranslateDown,
    TranslateLeft,
    TranslateRight,
    /// Swap rows `r` and `r + 1`.
    CommuteRows(usize),
    /// Swap columns `c` and `c + 1`.
    CommuteCols(usize),
    /// Split the `marker` in `column` into a 2x2 block with `corner` empty.
    Stabilize {
        marker: Marker,
        corner: Corner,
        column: usize,
    },
    /// Merge the 2x2 block whose lower-left cell is `(row, column)`.
    Destabilize {
        marker: Marker,
        corner: Corner,
        row: usize,
        column: usize,
    },
}

impl Move {
    /// Marker kind and corner for (de)stabilizations.
    pub fn stabilization_type(&self) -> Option<(Marker, Corner)> {
        match *self {
            Move::Stabilize { marker, corner, .. } | Move::Destabilize { marker, corner, .. } => {
                Some((marker, corner))
            }
            _ => None,
        }
    }

    pub fn is_translation(&self) -> bool {
        matches!(
            self,
            Move::TranslateUp | Move::TranslateDown | Move::TranslateLeft | Move::TranslateRight
        )
    }

    pub fn is_commutation(&self) -> bool {
        matches!(self, Move::CommuteRows(_) | Move::CommuteCols(_))
    }

    /// The move undoing `self`, given the grid `self` was applied to.
    pub fn inverse_on(&self, before: &GridDiagram) -> Move {
        match *self {
            Move::TranslateUp => Move::TranslateDown,
            Move::TranslateDown => Move::TranslateUp,
            Move::TranslateLeft => Move::TranslateRight,
            Move::TranslateRight => Move::TranslateLeft,
            Move::CommuteRows(r) => Move::CommuteRows(r),
            Move::CommuteCols(c) => Move::CommuteCols(c),
            Move::Stabilize {
                marker,
                corner,
                column,
            } => Move::Destabilize {
                marker,
                corner,
                row: before.markers(marker)[column],
                column,
            },
            Move::Destabilize {
                marker,
                corner,
                column,
                ..
            } => Move::Stabilize {
                marker,
                corner,
                column,
            },
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::TranslateUp => write!(f, "TU"),
            Move::TranslateDown => write!(f, "TD"),
            Move::TranslateLeft => write!(f, "TL"),
            Move::TranslateRight => write!(f, "TR"),
            Move::CommuteRows(r) => write!(f, "CR {r}"),
            Move::CommuteCols(c) => write!(f, "CC {c}"),
            Move::Stabilize {
                marker,
                corner,
                column,
            } => write!(f, "S{marker} {corner} {column}"),
            Move::Destabilize {
                marker,
                corner,
                row,
                column,
            } => write!(f, "D{marker} {corner} {row} {column}"),
        }
    }
}

impl FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let index = |i: usize| -> std::result::Result<usize, String> {
            tokens
                .get(i)
                .ok_or_else(|| format!("'{s}': missing argument"))?
                .parse::<usize>()
                .map_err(|_| format!("'{s}': bad index"))
        };
        let corner = || -> std::result::Result<Corner, String> {
            tokens
                .get(1)
                .ok_or_else(|| format!("'{s}': missing corner"))?
                .parse()
        };
        let (mv, arity) = match tokens.first().copied() {
            Some("TU") => (Move::TranslateUp, 1),
            Some("TD") => (Move::TranslateDown, 1),
            Some("TL") => (Move::TranslateLeft, 1),
            Some("TR") => (Move::TranslateRight, 1),
            Some("CR") => (Move::CommuteRows(index(1)?), 2),
            Some("CC") => (Move::CommuteCols(index(1)?), 2),
            Some(tag @ ("SX" | "SO")) => (
                Move::Stabilize {
                    marker: if tag == "SX" { Marker::X } else { Marker::O },
                    corner: corner()?,
                    column: index(2)?,
                },
                3,
            ),
            Some(tag @ ("DX" | "DO")) => (
                Move::Destabilize {
                    marker: if tag == "DX" { Marker::X } else { Marker::O },
                    corner: corner()?,
                    row: index(2)?,
                    column: index(3)?,
                },
                4,
            ),
            Some(other) => return Err(format!("unknown move '{other}'")),
            None => return Err("empty move".to_string()),
        };
        if tokens.len() != arity {
            return Err(format!("'{s}': expected {arity} fields"));
        }
        Ok(mv)
    }
}

/// A replayable sequence of moves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveScript {
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn new(moves: Vec<Move>) -> Self {
        MoveScript { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn replay(&self, start: &GridDiagram) -> Result<GridDiagram> {
        self.moves
            .iter()
            .try_fold(start.clone(), |g, m| apply(&g, m))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut moves = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mv = body.parse::<Move>().map_err(|message| Error::Syntax {
                line: i + 1,
                column: 1,
                message,
            })?;
            moves.push(mv);
        }
        Ok(MoveScript { moves })
    }

    pub fn serialize(&self) -> String {
        self.moves.iter().map(|m| format!("{m}\n")).collect()
    }
}

fn check_index(index: usize, size: usize) -> Result<()> {
    if index < size {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, size })
    }
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |v: usize| a0 < v && v < a1;
    inside(b.0) != inside(b.1)
}

/// Legality of swapping two adjacent lines whose markers sit at
/// positions `first` and `second` (each an (X, O) pair along the line).
fn commutation_check(first: (usize, usize), second: (usize, usize)) -> Result<()> {
    let ends = [first.0, first.1, second.0, second.1];
    for i in 0..4 {
        for j in i + 1..4 {
            if ends[i] == ends[j] {
                return Err(Error::IllegalCommutation(format!(
                    "markers share position {}",
                    ends[i]
                )));
            }
        }
    }
    if interleaved(first, second) {
        return Err(Error::IllegalCommutation(
            "segments interleave".to_string(),
        ));
    }
    Ok(())
}

fn translate_rows(g: &GridDiagram, shift: usize) -> GridDiagram {
    let n = g.size();
    let map = |seq: &[usize]| seq.iter().map(|&r| (r + shift) % n).collect();
    GridDiagram::from_parts(map(g.x()), map(g.o()))
}

fn translate_columns(g: &GridDiagram, shift: usize) -> GridDiagram {
    let n = g.size();
    let map = |seq: &[usize]| (0..n).map(|c| seq[(c + n - shift) % n]).collect();
    GridDiagram::from_parts(map(g.x()), map(g.o()))
}

fn commute_columns(g: &GridDiagram, c: usize) -> Result<GridDiagram> {
    check_index(c + 1, g.size())?;
    let (x, o) = (g.x(), g.o());
    commutation_check((x[c], o[c]), (x[c + 1], o[c + 1]))?;
    let mut x = x.to_vec();
    let mut o = o.to_vec();
    x.swap(c, c + 1);
    o.swap(c, c + 1);
    Ok(GridDiagram::from_parts(x, o))
}

fn commute_rows(g: &GridDiagram, r: usize) -> Result<GridDiagram> {
    check_index(r + 1, g.size())?;
    let xc = g.x_columns();
    let oc = g.o_columns();
    commutation_check((xc[r], oc[r]), (xc[r + 1], oc[r + 1]))?;
    let swap = |seq: &[usize]| {
        seq.iter()
            .map(|&v| match v {
                v if v == r => r + 1,
                v if v == r + 1 => r,
                v => v,
            })
            .collect()
    };
    Ok(GridDiagram::from_parts(swap(g.x()), swap(g.o())))
}

fn stabilize(g: &GridDiagram, kind: Marker, empty: Corner, c: usize) -> Result<GridDiagram> {
    let n = g.size();
    check_index(c, n)?;
    let r = g.markers(kind)[c];
    let other = kind.opposite();
    // old row/column -> new index, for lines other than r / c
    let shift = |i: usize, at: usize| if i < at { i } else { i + 1 };
    let (odd_dr, odd_dc) = empty.opposite().offset();
    let spare_row = r + 1 - odd_dr;
    let spare_col = c + 1 - odd_dc;

    let mut x = vec![0; n + 1];
    let mut o = vec![0; n + 1];
    let mut set = |m: Marker, row: usize, col: usize| match m {
        Marker::X => x[col] = row,
        Marker::O => o[col] = row,
    };
    for corner in Corner::ALL {
        let (dr, dc) = corner.offset();
        if corner == empty {
            continue;
        }
        let m = if corner == empty.opposite() { other } else { kind };
        set(m, r + dr, c + dc);
    }
    // column partner of the split marker
    let q = g.markers(other)[c];
    set(other, shift(q, r), spare_col);
    for j in (0..n).filter(|&j| j != c) {
        let col = shift(j, c);
        for m in [Marker::X, Marker::O] {
            let row = g.markers(m)[j];
            let row = if row == r { spare_row } else { shift(row, r) };
            set(m, row, col);
        }
    }
    Ok(GridDiagram::from_parts(x, o))
}

/// True when the 2x2 block at `(r, c)` is a `kind`-destabilization block
/// with `empty` unoccupied.
fn block_matches(g: &GridDiagram, kind: Marker, empty: Corner, r: usize, c: usize) -> bool {
    let n = g.size();
    if r + 1 >= n || c + 1 >= n {
        return false;
    }
    Corner::ALL.iter().all(|&corner| {
        let (dr, dc) = corner.offset();
        let want = if corner == empty {
            None
        } else if corner == empty.opposite() {
            Some(kind.opposite())
        } else {
            Some(kind)
        };
        g.marker_at(r + dr, c + dc) == want
    })
}

fn destabilize(
    g: &GridDiagram,
    kind: Marker,
    empty: Corner,
    r: usize,
    c: usize,
) -> Result<GridDiagram> {
    let n = g.size();
    check_index(r, n)?;
    check_index(c, n)?;
    if !block_matches(g, kind, empty, r, c) {
        return Err(Error::NoSuchBlock { row: r, column: c });
    }
    let collapse = |i: usize, at: usize| if i <= at { i } else { i - 1 };
    let mut x = vec![0; n - 1];
    let mut o = vec![0; n - 1];
    for j in 0..n {
        let col = collapse(j, c);
        for m in [Marker::X, Marker::O] {
            let row = g.markers(m)[j];
            let in_block = (j == c || j == c + 1) && (row == r || row == r + 1);
            if in_block {
                continue;
            }
            let seq = match m {
                Marker::X => &mut x,
                Marker::O => &mut o,
            };
            seq[col] = collapse(row, r);
        }
    }
    match kind {
        Marker::X => x[c] = r,
        Marker::O => o[c] = r,
    }
    Ok(GridDiagram::from_parts(x, o))
}

/// Applies one move, returning a fresh grid.
pub fn apply(g: &GridDiagram, m: &Move) -> Result<GridDiagram> {
    let n = g.size();
    match *m {
        Move::TranslateUp => Ok(translate_rows(g, 1)),
        Move::TranslateDown => Ok(translate_rows(g, n - 1)),
        Move::TranslateRight => Ok(translate_columns(g, 1)),
        Move::TranslateLeft => Ok(translate_columns(g, n - 1)),
        Move::CommuteRows(r) => commute_rows(g, r),
        Move::CommuteCols(c) => commute_columns(g, c),
        Move::Stabilize {
            marker,
            corner,
            column,
        } => stabilize(g, marker, corner, column),
        Move::Destabilize {
            marker,
            corner,
            row,
            column,
        } => destabilize(g, marker, corner, row, column),
    }
}

/// Every move that applies to `g`, in a fixed order: translations, row
/// commutations, column commutations, stabilizations, destabilizations.
pub fn legal_moves(g: &GridDiagram) -> Vec<Move> {
    let n = g.size();
    let mut moves = vec![
        Move::TranslateUp,
        Move::TranslateDown,
        Move::TranslateLeft,
        Move::TranslateRight,
    ];
    moves.extend(
        (0..n - 1)
            .map(Move::CommuteRows)
            .filter(|m| apply(g, m).is_ok()),
    );
    moves.extend(
        (0..n - 1)
            .map(Move::CommuteCols)
            .filter(|m| apply(g, m).is_ok()),
    );
    for marker in [Marker::X, Marker::O] {
        for column in 0..n {
            for corner in Corner::ALL {
                moves.push(Move::Stabilize {
                    marker,
                    corner,
                    column,
                });
            }
        }
    }
    moves.extend(destabilizations(g, &[Marker::X, Marker::O], &Corner::ALL));
    moves
}

/// Destabilizations of the given kinds and types available on `g`.
pub fn destabilizations(g: &GridDiagram, kinds: &[Marker], corners: &[Corner]) -> Vec<Move> {
    let n = g.size();
    let mut moves = Vec::new();
    for &marker in kinds {
        for row in 0..n.saturating_sub(1) {
            for column in 0..n - 1 {
                for &corner in corners {
                    if block_matches(g, marker, corner, row, column) {
                        moves.push(Move::Destabilize {
                            marker,
                            corner,
                            row,
                            column,
                        });
                    }
                }
            }
        }
    }
    moves
}

/// The X stabilization type paired with an O stabilization of type `corner`.
pub fn paired_x_corner(corner: Corner) -> Corner {
    corner.opposite()
}

/// Expresses the O stabilization of type `corner` at the O in `column` as
/// translations, commutations and a single X stabilization.
///
/// The grid is translated vertically until the O sits on the bottom row
/// (south types) or top row (north types); the X in the same column is
/// stabilized with the paired type; the resulting one-square row is
/// commuted along the column until it meets the O; a final translation
/// restores the original placement.
pub fn o_stab_script(g: &GridDiagram, corner: Corner, column: usize) -> Result<MoveScript> {
    let n = g.size();
    check_index(column, n)?;
    let r = g.o()[column];
    let target = if corner.is_north() { n - 1 } else { 0 };
    let mut moves = vertical_shift(n, (target + n - r) % n);
    let shifted = MoveScript::new(moves.clone()).replay(g)?;
    let q = shifted.x()[column];
    moves.push(Move::Stabilize {
        marker: Marker::X,
        corner: paired_x_corner(corner),
        column,
    });
    if corner.is_north() {
        moves.extend((q + 1..n - 1).map(Move::CommuteRows));
    } else {
        moves.extend((1..q).rev().map(Move::CommuteRows));
    }
    moves.extend(vertical_shift(n + 1, (r + n + 1 - target) % (n + 1)));
    Ok(MoveScript::new(moves))
}

/// Torus translation moving every marker `up` rows up and `right` columns
/// right.
pub fn translate(g: &GridDiagram, up: usize, right: usize) -> GridDiagram {
    let n = g.size();
    translate_columns(&translate_rows(g, up % n), right % n)
}

/// Shortest run of single translations realizing `translate(_, up, right)`
/// on a grid of size `n`.
pub fn translation_moves(n: usize, up: usize, right: usize) -> Vec<Move> {
    let mut moves = vertical_shift(n, up % n);
    let right = right % n;
    if right <= n - right {
        moves.extend(vec![Move::TranslateRight; right]);
    } else {
        moves.extend(vec![Move::TranslateLeft; n - right]);
    }
    moves
}

/// Shortest run of vertical translations shifting rows up by `up` on a
/// grid of size `n`.
fn vertical_shift(n: usize, up: usize) -> Vec<Move> {
    if up <= n - up {
        vec![Move::TranslateUp; up]
    } else {
        vec![Move::TranslateDown; n - up]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    /// Rotation by 180 degrees.
    S1,
    /// Reflection in the SW-NE diagonal, exchanging X and O.
    S2,
    /// Reflection across the horizontal axis.
    S3,
    /// Rotation by 180 degrees, exchanging X and O.
    S4,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [Symmetry::S1, Symmetry::S2, Symmetry::S3, Symmetry::S4];

    pub fn swaps_markers(self) -> bool {
        matches!(self, Symmetry::S2 | Symmetry::S4)
    }
}

impl FromStr for Symmetry {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "s1" => Ok(Symmetry::S1),
            "s2" => Ok(Symmetry::S2),
            "s3" => Ok(Symmetry::S3),
            "s4" => Ok(Symmetry::S4),
            _ => Err(format!("unknown symmetry '{s}'")),
        }
    }
}

pub fn symmetry(g: &GridDiagram, s: Symmetry) -> GridDiagram {
    let n = g.size();
    let (x, o) = (g.x(), g.o());
    let rotate = |seq: &[usize]| -> Vec<usize> { (0..n).map(|c| n - 1 - seq[n - 1 - c]).collect() };
    match s {
        Symmetry::S1 => GridDiagram::from_parts(rotate(x), rotate(o)),
        Symmetry::S2 => GridDiagram::from_parts(invert(o), invert(x)),
        Symmetry::S3 => GridDiagram::from_parts(
            x.iter().map(|&r| n - 1 - r).collect(),
            o.iter().map(|&r| n - 1 - r).collect(),
        ),
        Symmetry::S4 => GridDiagram::from_parts(rotate(o), rotate(x)),
    }
}

/// How a symmetry permutes X stabilization types on grids modulo
/// translation and commutation.
pub fn stab_type_image(s: Symmetry, corner: Corner) -> Corner {
    match s {
        Symmetry::S1 => corner.opposite(),
        Symmetry::S2 => corner.transpose().opposite(),
        Symmetry::S3 => corner.flip_vertical(),
        Symmetry::S4 => corner,
    }
}

/// Column of the X corresponding to the X in `column` of `g` after
/// applying `s`. For the marker-swapping symmetries the image of an X is an
/// O; the X sharing its column is returned.
pub fn image_x_column(g: &GridDiagram, s: Symmetry, column: usize) -> usize {
    let n = g.size();
    match s {
        Symmetry::S1 | Symmetry::S4 => n - 1 - column,
        Symmetry::S2 => g.x()[column],
        Symmetry::S3 => column,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u2() -> GridDiagram {
        GridDiagram::unknot()
    }

    fn grid(x: &[usize], o: &[usize]) -> GridDiagram {
        GridDiagram::new(x.len(), x.to_vec(), o.to_vec()).unwrap()
    }

    fn stab(marker: Marker, corner: Corner, column: usize) -> Move {
        Move::Stabilize {
            marker,
            corner,
            column,
        }
    }

    #[test]
    fn translations() {
        let up = apply(&u2(), &Move::TranslateUp).unwrap();
        assert_eq!(up, grid(&[0, 1], &[1, 0]));
        let g5 = grid(&[1, 2, 3, 4, 0], &[4, 0, 1, 2, 3]);
        for (a, b) in [
            (Move::TranslateUp, Move::TranslateDown),
            (Move::TranslateLeft, Move::TranslateRight),
        ] {
            let there = apply(&g5, &a).unwrap();
            assert_eq!(apply(&there, &b).unwrap(), g5);
        }
        let right = apply(&g5, &Move::TranslateRight).unwrap();
        assert_eq!(right.x(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn commutation_legality() {
        assert!(matches!(
            apply(&u2(), &Move::CommuteCols(0)),
            Err(Error::IllegalCommutation(_))
        ));
        assert!(matches!(
            apply(&u2(), &Move::CommuteRows(0)),
            Err(Error::IllegalCommutation(_))
        ));
        assert!(matches!(
            apply(&u2(), &Move::CommuteCols(1)),
            Err(Error::IndexOutOfRange { .. })
        ));
        // nested columns: [0,3] contains [1,2]
        let g = grid(&[0, 1, 3, 2], &[3, 2, 0, 1]);
        let swapped = apply(&g, &Move::CommuteCols(0)).unwrap();
        assert_eq!(swapped, grid(&[1, 0, 3, 2], &[2, 3, 0, 1]));
        // interleaved columns: [0,2] and [1,3]
        let h = grid(&[0, 1, 2, 3], &[2, 3, 0, 1]);
        assert!(matches!(
            apply(&h, &Move::CommuteCols(0)),
            Err(Error::IllegalCommutation(_))
        ));
    }

    #[test]
    fn stabilization_example() {
        let s = apply(&u2(), &stab(Marker::X, Corner::NE, 0)).unwrap();
        assert_eq!(s, grid(&[2, 1, 0], &[1, 0, 2]));
        let back = apply(
            &s,
            &Move::Destabilize {
                marker: Marker::X,
                corner: Corner::NE,
                row: 1,
                column: 0,
            },
        )
        .unwrap();
        assert_eq!(back, u2());
        assert!(legal_moves(&s).contains(&Move::Destabilize {
            marker: Marker::X,
            corner: Corner::NE,
            row: 1,
            column: 0
        }));
    }

    #[test]
    fn destabilization_errors() {
        assert_eq!(
            apply(
                &u2(),
                &Move::Destabilize {
                    marker: Marker::X,
                    corner: Corner::NE,
                    row: 0,
                    column: 0
                }
            ),
            Err(Error::NoSuchBlock { row: 0, column: 0 })
        );
        assert!(destabilizations(&u2(), &[Marker::X, Marker::O], &Corner::ALL).is_empty());
    }

    #[test]
    fn legal_moves_of_unknot() {
        let moves = legal_moves(&u2());
        for t in [
            Move::TranslateUp,
            Move::TranslateDown,
            Move::TranslateLeft,
            Move::TranslateRight,
        ] {
            assert!(moves.contains(&t));
        }
        assert!(!moves.iter().any(Move::is_commutation));
        let stabs = moves
            .iter()
            .filter(|m| matches!(m, Move::Stabilize { .. }))
            .count();
        assert_eq!(stabs, 16);
    }

    #[test]
    fn every_stabilization_inverts() {
        let g = grid(&[1, 2, 3, 4, 0], &[4, 0, 1, 2, 3]);
        for marker in [Marker::X, Marker::O] {
            for corner in Corner::ALL {
                for column in 0..5 {
                    let m = stab(marker, corner, column);
                    let s = apply(&g, &m).unwrap();
                    assert_eq!(s.size(), 6);
                    assert_eq!(s.components(), g.components());
                    assert_eq!(apply(&s, &m.inverse_on(&g)).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(symmetry(&u2(), Symmetry::S1), u2());
        assert_eq!(symmetry(&u2(), Symmetry::S2), grid(&[0, 1], &[1, 0]));
        let g5 = grid(&[1, 2, 3, 4, 0], &[4, 0, 1, 2, 3]);
        for s in Symmetry::ALL {
            assert_eq!(symmetry(&symmetry(&g5, s), s), g5);
        }
    }

    #[test]
    fn table_of_symmetry_images() {
        use Corner::*;
        let expect = [
            (Symmetry::S1, [SE, SW, NE, NW]),
            (Symmetry::S2, [NW, SW, NE, SE]),
            (Symmetry::S3, [SW, SE, NW, NE]),
            (Symmetry::S4, [NW, NE, SW, SE]),
        ];
        for (s, images) in expect {
            for (corner, image) in Corner::ALL.into_iter().zip(images) {
                assert_eq!(stab_type_image(s, corner), image, "{s:?} {corner}");
            }
        }
    }

    #[test]
    fn o_stab_script_pairs_types() {
        let script = o_stab_script(&u2(), Corner::SW, 0).unwrap();
        let x_moves: Vec<_> = script
            .moves
            .iter()
            .filter_map(Move::stabilization_type)
            .collect();
        assert_eq!(x_moves, vec![(Marker::X, Corner::NE)]);
    }

    #[test]
    fn o_stab_script_lands_on_direct_stabilization() {
        let grids = [
            u2(),
            grid(&[1, 2, 3, 4, 0], &[4, 0, 1, 2, 3]),
            grid(&[0, 1, 3, 2], &[3, 2, 0, 1]),
        ];
        for g in &grids {
            for corner in Corner::ALL {
                for column in 0..g.size() {
                    let script = o_stab_script(g, corner, column).unwrap();
                    let direct = apply(g, &stab(Marker::O, corner, column)).unwrap();
                    assert_eq!(script.replay(g).unwrap(), direct, "{corner} {column}");
                }
            }
        }
    }

    #[test]
    fn script_text_roundtrip() {
        let text = "TU\nTD\nTL\nTR\nCR 2\nCC 0\nSX NW 3\nSO SE 1\nDX NE 1 0\nDO SW 0 2\n";
        let script = MoveScript::parse(text).unwrap();
        assert_eq!(script.len(), 10);
        assert_eq!(script.serialize(), text);
        assert!(MoveScript::parse("TU\nSX QQ 1\n").is_err());
        assert!(MoveScript::parse("# only a comment\n").unwrap().is_empty());
    }
}
