//! Maps between grids, braids and Legendrian fronts.

mod front;
mod rectilinear;

pub use front::{classical_invariants, grid_to_front, sl_from_braid, ClassicalInvariants, FrontData};
pub use rectilinear::{
    braid_to_grid, directional_braid, grid_to_braid, grid_to_rectilinear, rectilinear_to_word,
    Direction, RectilinearBraidDiagram,
};

use crate::braid::BraidWord;

/// Every letter replaced by its inverse.
pub fn mirror_word(w: &BraidWord) -> BraidWord {
    w.mirror()
}

/// The word read backwards.
pub fn reverse_word(w: &BraidWord) -> BraidWord {
    w.reverse()
}
