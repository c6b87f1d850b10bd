mod common;

use gridbraid::convert::{
    braid_to_grid, classical_invariants, directional_braid, grid_to_braid, grid_to_front,
    sl_from_braid, Direction,
};
use gridbraid::moves::{apply, symmetry, Symmetry};
use gridbraid::verify::{braid_column_holds, legendrian_column_holds, row_commutation_holds};
use gridbraid::{legal_moves, BraidWord, Corner, Marker, Move};
use proptest::prelude::*;

/// sigma_k -> sigma_{n-k}, conjugation by the half twist.
fn flip(w: &BraidWord) -> BraidWord {
    let n = w.strands() as i32;
    let letters = w.letters().iter().map(|&k| k.signum() * (n - k.abs())).collect();
    BraidWord::new(w.strands(), letters).unwrap()
}

proptest! {
    #[test]
    fn braid_roundtrip(w in common::word(4, 8)) {
        let g = braid_to_grid(&w);
        prop_assert_eq!(g.size(), 2 * w.strands() + 2 * w.len());
        prop_assert_eq!(grid_to_braid(&g), w);
    }

    #[test]
    fn self_linking_agrees(g in common::grid(7)) {
        prop_assert_eq!(sl_from_braid(&grid_to_braid(&g)), classical_invariants(&g).sl);
    }

    #[test]
    fn front_is_closed(g in common::grid(7)) {
        let f = grid_to_front(&g);
        prop_assert_eq!(f.right_cusps, f.left_cusps);
        prop_assert_eq!(f.up_cusps + f.down_cusps, f.right_cusps + f.left_cusps);
    }

    #[test]
    fn stabilization_columns(g in common::grid(6), column in 0usize..6) {
        let column = column % g.size();
        for corner in Corner::ALL {
            let h = apply(&g, &Move::Stabilize { marker: Marker::X, corner, column }).unwrap();
            prop_assert!(braid_column_holds(&g, &h, corner), "X:{}", corner);
            prop_assert!(legendrian_column_holds(&g, &h, corner), "X:{}", corner);
        }
    }

    #[test]
    fn isotopies_keep_invariants(g in common::grid(6)) {
        let inv = classical_invariants(&g);
        for m in legal_moves(&g) {
            if m.is_translation() || m.is_commutation() {
                prop_assert_eq!(classical_invariants(&apply(&g, &m).unwrap()), inv);
            }
            if let Move::CommuteCols(_) = m {
                let b = grid_to_braid(&g);
                prop_assert!(grid_to_braid(&apply(&g, &m).unwrap()).equals(&b).unwrap());
            }
            if let Move::CommuteRows(r) = m {
                prop_assert!(row_commutation_holds(&g, r));
            }
        }
    }

    #[test]
    fn horizontal_translation_rotates_the_word(g in common::grid(7)) {
        let b = grid_to_braid(&g);
        let moved = grid_to_braid(&apply(&g, &Move::TranslateRight).unwrap());
        let doubled = [b.letters(), b.letters()].concat();
        let rotation = (0..b.len().max(1)).any(|i| doubled[i..i + b.len()] == *moved.letters());
        prop_assert!(rotation, "{} vs {}", b, moved);
    }

    #[test]
    fn symmetries_act_on_words(g in common::grid(7)) {
        let b = grid_to_braid(&g);
        prop_assert_eq!(grid_to_braid(&symmetry(&g, Symmetry::S3)), flip(&b.mirror()));
        let s4 = grid_to_braid(&symmetry(&g, Symmetry::S4));
        prop_assert_eq!(s4.strands(), b.strands());
        prop_assert!(s4.equals(&flip(&b.reverse())).unwrap());
        prop_assert_eq!(directional_braid(&g, Direction::Right), b);
    }
}
