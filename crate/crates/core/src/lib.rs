pub mod braid;
pub mod convert;
pub mod equivalence;
pub mod error;
pub mod grid;
pub mod moves;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{GridCensus, GridDiagram, Marker};
pub use moves::{apply, legal_moves, o_stab_script, symmetry, Corner, Move, MoveScript, Symmetry};
pub use braid::{words_equal, BraidInvariants, BraidWord, Verdict};
pub use equivalence::{equivalent, orbit_size, tc_orbit_equal, MoveClass, SearchBudget};
