mod common;

use gridbraid::moves::{
    apply, legal_moves, o_stab_script, stab_type_image, symmetry, image_x_column, Corner, Move,
    Symmetry,
};
use gridbraid::{tc_orbit_equal, GridDiagram, Marker};
use proptest::prelude::*;

proptest! {
    #[test]
    fn text_roundtrip(g in common::grid(8)) {
        prop_assert_eq!(GridDiagram::parse(&g.serialize()).unwrap(), g);
    }

    #[test]
    fn moves_preserve_components(g in common::grid(6), pick in any::<prop::sample::Index>()) {
        let moves = legal_moves(&g);
        let m = pick.get(&moves);
        let h = apply(&g, m).unwrap();
        prop_assert_eq!(h.components(), g.components(), "{}", m);
    }

    #[test]
    fn symmetries_preserve_crossing_count(g in common::grid(7)) {
        let count = g.census().crossings.len();
        for s in Symmetry::ALL {
            prop_assert_eq!(symmetry(&g, s).census().crossings.len(), count);
            prop_assert_eq!(symmetry(&symmetry(&g, s), s), g.clone());
        }
    }

    #[test]
    fn translations_and_commutations_undo(g in common::grid(7)) {
        for (m, back) in [
            (Move::TranslateUp, Move::TranslateDown),
            (Move::TranslateLeft, Move::TranslateRight),
        ] {
            prop_assert_eq!(apply(&apply(&g, &m).unwrap(), &back).unwrap(), g.clone());
        }
        for m in legal_moves(&g).into_iter().filter(Move::is_commutation) {
            prop_assert_eq!(apply(&apply(&g, &m).unwrap(), &m).unwrap(), g.clone());
        }
    }

    #[test]
    fn stabilization_inverts(g in common::grid(6), column in 0usize..6, corner in 0usize..4) {
        let column = column % g.size();
        for marker in [Marker::X, Marker::O] {
            let m = Move::Stabilize { marker, corner: Corner::ALL[corner], column };
            let h = apply(&g, &m).unwrap();
            prop_assert_eq!(h.size(), g.size() + 1);
            prop_assert_eq!(apply(&h, &m.inverse_on(&g)).unwrap(), g.clone());
        }
    }

    #[test]
    fn symmetry_stabilization_law(g in common::grid(5), column in 0usize..5, s in 0usize..4, corner in 0usize..4) {
        let (s, corner, column) = (Symmetry::ALL[s], Corner::ALL[corner], column % g.size());
        let stab = |c, col| Move::Stabilize { marker: Marker::X, corner: c, column: col };
        let left = symmetry(&apply(&g, &stab(corner, column)).unwrap(), s);
        let right = apply(
            &symmetry(&g, s),
            &stab(stab_type_image(s, corner), image_x_column(&g, s, column)),
        ).unwrap();
        prop_assert!(tc_orbit_equal(&left, &right));
    }

    #[test]
    fn o_stabilization_script(g in common::grid(6), column in 0usize..6, corner in 0usize..4) {
        let (corner, column) = (Corner::ALL[corner], column % g.size());
        let script = o_stab_script(&g, corner, column).unwrap();
        let direct = apply(&g, &Move::Stabilize { marker: Marker::O, corner, column }).unwrap();
        prop_assert!(tc_orbit_equal(&script.replay(&g).unwrap(), &direct));
    }
}
