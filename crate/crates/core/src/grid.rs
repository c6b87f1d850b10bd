//! Grid diagrams: an `n x n` board with one X and one O in every row and
//! column.
//!
//! Columns are indexed left to right and rows bottom to top, so "north"
//! means a larger row index and "east" a larger column index. A grid is
//! stored as two permutations: `x[c]` and `o[c]` are the rows of the X and
//! the O in column `c`.
//!
//! The oriented link drawn by a grid runs from O to X along each row and
//! from X to O along each column, with vertical segments passing over
//! horizontal ones.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The two marker kinds placed on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Marker {
    X,
    O,
}

impl Marker {
    pub fn opposite(self) -> Marker {
        match self {
            Marker::X => Marker::O,
            Marker::O => Marker::X,
        }
    }
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Marker::X => "X",
            Marker::O => "O",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridDiagram {
    x: Vec<usize>,
    o: Vec<usize>,
}

fn check_permutation(which: char, n: usize, seq: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &row in seq {
        if row >= n {
            return Err(Error::IndexOutOfRange { index: row, size: n });
        }
        if seen[row] {
            return Err(Error::NotPermutation { which, row });
        }
        seen[row] = true;
    }
    Ok(())
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

impl GridDiagram {
    /// Checks both sequences and builds the grid.
    pub fn new(n: usize, x: Vec<usize>, o: Vec<usize>) -> Result<Self> {
        for seq in [&x, &o] {
            if seq.len() != n {
                return Err(Error::BadLength {
                    expected: n,
                    found: seq.len(),
                });
            }
        }
        if n == 0 {
            return Err(Error::BadLength {
                expected: 1,
                found: 0,
            });
        }
        check_permutation('X', n, &x)?;
        check_permutation('O', n, &o)?;
        if let Some(column) = (0..n).find(|&c| x[c] == o[c]) {
            return Err(Error::SharedSquare { column });
        }
        Ok(GridDiagram { x, o })
    }

    /// Builds a grid from sequences already known to be valid.
    pub(crate) fn from_parts(x: Vec<usize>, o: Vec<usize>) -> Self {
        debug_assert!(GridDiagram::new(x.len(), x.clone(), o.clone()).is_ok());
        GridDiagram { x, o }
    }

    /// The smallest grid: the 2x2 unknot with X's on the anti-diagonal.
    pub fn unknot() -> Self {
        GridDiagram::from_parts(vec![1, 0], vec![0, 1])
    }

    pub fn size(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn o(&self) -> &[usize] {
        &self.o
    }

    pub fn markers(&self, kind: Marker) -> &[usize] {
        match kind {
            Marker::X => &self.x,
            Marker::O => &self.o,
        }
    }

    /// Column of the X in each row.
    pub fn x_columns(&self) -> Vec<usize> {
        invert(&self.x)
    }

    /// Column of the O in each row.
    pub fn o_columns(&self) -> Vec<usize> {
        invert(&self.o)
    }

    pub fn marker_at(&self, row: usize, column: usize) -> Option<Marker> {
        if self.x[column] == row {
            Some(Marker::X)
        } else if self.o[column] == row {
            Some(Marker::O)
        } else {
            None
        }
    }

    /// Number of link components: cycles of `c -> x^-1(o(c))`.
    pub fn components(&self) -> usize {
        let x_col = self.x_columns();
        let n = self.size();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = x_col[self.o[c]];
            }
        }
        cycles
    }

    pub fn census(&self) -> GridCensus {
        let n = self.size();
        let x_col = self.x_columns();
        let o_col = self.o_columns();
        let rows: Vec<Horizontal> = (0..n)
            .map(|r| {
                if x_col[r] > o_col[r] {
                    Horizontal::Rightward
                } else {
                    Horizontal::Leftward
                }
            })
            .collect();
        let columns: Vec<Vertical> = (0..n)
            .map(|c| {
                if self.o[c] > self.x[c] {
                    Vertical::Up
                } else {
                    Vertical::Down
                }
            })
            .collect();
        let mut crossings = Vec::new();
        for c in 0..n {
            let (lo, hi) = span(self.x[c], self.o[c]);
            for r in lo + 1..hi {
                let (left, right) = span(x_col[r], o_col[r]);
                if left < c && c < right {
                    crossings.push(Crossing {
                        column: c,
                        row: r,
                        sign: crossing_sign(columns[c], rows[r]),
                    });
                }
            }
        }
        GridCensus {
            components: self.components(),
            crossings,
            rows,
            columns,
        }
    }

    pub fn render_ascii(&self) -> String {
        let n = self.size();
        (0..n)
            .rev()
            .map(|r| {
                (0..n)
                    .map(|c| match self.marker_at(r, c) {
                        Some(Marker::X) => "X",
                        Some(Marker::O) => "O",
                        None => ".",
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Canonical text form, see [`GridDiagram::parse`].
    pub fn serialize(&self) -> String {
        format!(
            "{}\nX: {}\nO: {}\n",
            self.size(),
            join(&self.x),
            join(&self.o)
        )
    }

    /// Reads the `.grid` format: a line with `n`, then `X:` and `O:` lines
    /// listing row indices (bottom-up) for columns left to right. A matrix
    /// of `.`, `X` and `O` with the top row first is also accepted. `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let Some(&(first_no, first)) = lines.first() else {
            return Err(syntax(1, 1, "empty grid file"));
        };
        match first.parse::<usize>() {
            Ok(n) => parse_sequences(n, &lines[1..], first_no),
            Err(_) if first.starts_with(|ch: char| ch.is_ascii_digit()) => {
                Err(syntax(first_no, 1, "expected grid number"))
            }
            Err(_) => parse_matrix(&lines),
        }
    }
}

fn join(seq: &[usize]) -> String {
    seq.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

fn parse_sequences(n: usize, rest: &[(usize, &str)], first_no: usize) -> Result<GridDiagram> {
    let mut seqs = Vec::with_capacity(2);
    let mut last_line = first_no;
    for (i, label) in ["X:", "O:"].iter().enumerate() {
        let Some(&(line_no, line)) = rest.get(i) else {
            return Err(syntax(
                last_line + 1,
                1,
                &format!("missing '{label}' line"),
            ));
        };
        last_line = line_no;
        let Some(body) = line.strip_prefix(label) else {
            return Err(syntax(line_no, 1, &format!("expected '{label}'")));
        };
        let mut seq = Vec::new();
        for token in body.split_whitespace() {
            let column = line.find(token).map_or(1, |p| p + 1);
            let value = token
                .parse::<usize>()
                .map_err(|_| syntax(line_no, column, &format!("bad row index '{token}'")))?;
            seq.push(value);
        }
        seqs.push(seq);
    }
    if let Some(&(line_no, _)) = rest.get(2) {
        return Err(syntax(line_no, 1, "unexpected trailing content"));
    }
    let o = seqs.pop().unwrap_or_default();
    let x = seqs.pop().unwrap_or_default();
    GridDiagram::new(n, x, o)
}

fn parse_matrix(lines: &[(usize, &str)]) -> Result<GridDiagram> {
    let n = lines.len();
    let mut x = vec![None; n];
    let mut o = vec![None; n];
    for (top_index, &(line_no, line)) in lines.iter().enumerate() {
        let row = n - 1 - top_index;
        let cells: Vec<(usize, char)> = line
            .char_indices()
            .filter(|(_, ch)| !ch.is_whitespace())
            .collect();
        if cells.len() != n {
            return Err(syntax(
                line_no,
                1,
                &format!("expected {n} cells, found {}", cells.len()),
            ));
        }
        for (c, &(pos, ch)) in cells.iter().enumerate() {
            let slot = match ch {
                'X' | 'x' => &mut x[c],
                'O' | 'o' => &mut o[c],
                '.' => continue,
                _ => return Err(syntax(line_no, pos + 1, &format!("unexpected '{ch}'"))),
            };
            if slot.is_some() {
                return Err(syntax(line_no, pos + 1, "column has two markers of one kind"));
            }
            *slot = Some(row);
        }
    }
    let collect = |seq: Vec<Option<usize>>, which: char| -> Result<Vec<usize>> {
        seq.into_iter()
            .enumerate()
            .map(|(c, r)| {
                r.ok_or_else(|| {
                    syntax(lines[0].0, 1, &format!("column {c} has no {which}"))
                })
            })
            .collect()
    };
    let x = collect(x, 'X')?;
    let o = collect(o, 'O')?;
    GridDiagram::new(n, x, o)
}

impl FromStr for GridDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GridDiagram::parse(s)
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Direction of the O-to-X segment in a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Horizontal {
    Rightward,
    Leftward,
}

/// Direction of the X-to-O segment in a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertical {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub column: usize,
    pub row: usize,
    pub sign: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCensus {
    pub components: usize,
    pub crossings: Vec<Crossing>,
    pub rows: Vec<Horizontal>,
    pub columns: Vec<Vertical>,
}

impl GridCensus {
    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|c| c.sign).sum()
    }
}

fn span(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

// Sign of the planar cross product (over tangent) x (under tangent).
fn crossing_sign(over: Vertical, under: Horizontal) -> i32 {
    let v = match over {
        Vertical::Up => 1,
        Vertical::Down => -1,
    };
    let h = match under {
        Horizontal::Rightward => 1,
        Horizontal::Leftward => -1,
    };
    -v * h
}
