mod common;

use gridbraid::braid::{
    birman_wrinkle_script, check_markov_path, conjugacy_oracle, exchange, OracleBudget,
};
use gridbraid::BraidWord;
use proptest::prelude::*;

proptest! {
    #[test]
    fn free_reduction_preserves_the_braid(w in common::word(5, 12)) {
        let r = w.free_reduce();
        prop_assert!(r.equals(&w).unwrap());
        prop_assert!(r.letters().windows(2).all(|p| p[0] != -p[1]));
    }

    #[test]
    fn equality_is_an_equivalence(a in common::letters(4, 6), b in common::letters(4, 6)) {
        let a = BraidWord::new(4, a).unwrap();
        let b = BraidWord::new(4, b).unwrap();
        prop_assert!(a.equals(&a).unwrap());
        prop_assert_eq!(a.equals(&b).unwrap(), b.equals(&a).unwrap());
        // a = a b b^-1
        let padded = a.concat(&b).unwrap().concat(&b.inverse()).unwrap();
        prop_assert!(padded.equals(&a).unwrap());
        if a.equals(&b).unwrap() {
            prop_assert!(padded.equals(&b).unwrap());
        }
    }

    #[test]
    fn conjugation_keeps_invariants(w in common::letters(4, 8), u in common::letters(4, 4)) {
        let w = BraidWord::new(4, w).unwrap();
        let c = w.conjugate(&BraidWord::new(4, u).unwrap()).unwrap();
        let (a, b) = (w.invariants(), c.invariants());
        prop_assert_eq!(a.exponent_sum, b.exponent_sum);
        prop_assert_eq!(a.cycle_type, b.cycle_type);
    }

    #[test]
    fn stabilization_deltas(w in common::word(5, 8)) {
        let p = w.pos_stab();
        let n = w.neg_stab();
        prop_assert_eq!((p.exponent_sum(), p.strands()), (w.exponent_sum() + 1, w.strands() + 1));
        prop_assert_eq!((n.exponent_sum(), n.strands()), (w.exponent_sum() - 1, w.strands() + 1));
        prop_assert_eq!(p.destab().unwrap(), w.clone());
        prop_assert_eq!(n.destab().unwrap(), w);
    }

    #[test]
    fn exchange_is_an_involution(n in 2usize..=5, b1 in common::letters(4, 4), b2 in common::letters(4, 4), pos in any::<bool>()) {
        let s = n as i32 - 1;
        let keep = |l: &Vec<i32>| l.iter().copied().filter(|k| k.abs() < s).collect::<Vec<_>>();
        let e = if pos { s } else { -s };
        let w = BraidWord::new(n, [keep(&b1), vec![e], keep(&b2), vec![-e]].concat()).unwrap();
        let once = exchange(&w).unwrap();
        let (a, b) = (w.invariants(), once.invariants());
        prop_assert_eq!(a.exponent_sum, b.exponent_sum);
        prop_assert_eq!(a.cycle_type, b.cycle_type);
        prop_assert!(exchange(&once).unwrap().equals(&w).unwrap());
    }

    #[test]
    fn exchange_script_verifies(n in 2usize..=5, b1 in common::letters(4, 4), b2 in common::letters(4, 4)) {
        let keep = |l: &Vec<i32>| l.iter().copied().filter(|k| (k.unsigned_abs() as usize) < n - 1).collect::<Vec<_>>();
        let (l1, l2) = (keep(&b1), keep(&b2));
        let s = n as i32 - 1;
        let steps = birman_wrinkle_script(
            &BraidWord::new(n, l1.clone()).unwrap(),
            &BraidWord::new(n, l2.clone()).unwrap(),
            n,
        ).unwrap();
        let start = BraidWord::new(n, [l1.clone(), vec![s], l2.clone(), vec![-s]].concat()).unwrap();
        let end = BraidWord::new(n, [l1, vec![-s], l2, vec![s]].concat()).unwrap();
        prop_assert_eq!(check_markov_path(&start, &steps), Ok(()));
        prop_assert!(steps[6].word.equals(&end).unwrap());
    }

    #[test]
    fn conjugacy_oracle_finds_short_conjugators(w in common::letters(3, 6), u in common::letters(3, 2)) {
        let w = BraidWord::new(3, w).unwrap();
        let target = w.conjugate(&BraidWord::new(3, u).unwrap()).unwrap();
        let budget = OracleBudget { max_depth: 3, ..OracleBudget::default() };
        let verdict = conjugacy_oracle(&w, &target, &budget).unwrap();
        prop_assert!(verdict.is_yes());
    }

    #[test]
    fn braid_text_roundtrip(w in common::word(6, 10)) {
        prop_assert_eq!(BraidWord::parse(&w.serialize()).unwrap(), w.clone());
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }
}
