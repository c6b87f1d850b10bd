//! Legendrian front data read off a grid, and the classical invariants.

use std::fmt;

use crate::braid::BraidWord;
use crate::grid::GridDiagram;

/// Cusp and crossing counts of the front obtained by turning the grid
/// 45 degrees counterclockwise and smoothing corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrontData {
    pub right_cusps: usize,
    pub left_cusps: usize,
    pub up_cusps: usize,
    pub down_cusps: usize,
    pub writhe: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub r: i64,
    pub sl: i64,
}

impl fmt::Display for ClassicalInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tb={} r={} sl={}", self.tb, self.r, self.sl)
    }
}

/// Every marker is a corner joining its row segment and its column
/// segment. Corners opening north-west become right cusps and corners
/// opening south-east left cusps; the other two kinds are smooth.
pub fn grid_to_front(g: &GridDiagram) -> FrontData {
    let x_col = g.x_columns();
    let o_col = g.o_columns();
    let mut front = FrontData {
        right_cusps: 0,
        left_cusps: 0,
        up_cusps: 0,
        down_cusps: 0,
        writhe: g.census().writhe(),
    };
    for c in 0..g.size() {
        let (xr, or) = (g.x()[c], g.o()[c]);
        // X: the row arrives, the column leaves towards the O.
        let x_north = or > xr;
        let x_west = o_col[xr] < c;
        // O: the column arrives from the X, the row leaves towards its X.
        let o_north = xr > or;
        let o_west = x_col[or] < c;
        for (north, west, at_x) in [(x_north, x_west, true), (o_north, o_west, false)] {
            match (north, west) {
                (true, true) => {
                    front.right_cusps += 1;
                    if at_x {
                        front.up_cusps += 1;
                    } else {
                        front.down_cusps += 1;
                    }
                }
                (false, false) => {
                    front.left_cusps += 1;
                    if at_x {
                        front.down_cusps += 1;
                    } else {
                        front.up_cusps += 1;
                    }
                }
                _ => {}
            }
        }
    }
    front
}

/// `tb = writhe - right cusps`, `r = (down - up) / 2`, `sl = tb - r`.
pub fn classical_invariants(g: &GridDiagram) -> ClassicalInvariants {
    let front = grid_to_front(g);
    let tb = i64::from(front.writhe) - front.right_cusps as i64;
    let r = (front.down_cusps as i64 - front.up_cusps as i64) / 2;
    ClassicalInvariants { tb, r, sl: tb - r }
}

/// Self-linking number of the transverse closure: `e - n`.
pub fn sl_from_braid(w: &BraidWord) -> i64 {
    w.self_linking()
}
