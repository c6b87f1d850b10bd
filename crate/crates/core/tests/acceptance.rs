//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::time::{Duration, Instant};

use gridbraid::braid::{
    conjugacy_oracle, exchange, markov_oracle, BraidWord, OracleBudget, Verdict,
};
use gridbraid::convert::{braid_to_grid, classical_invariants, grid_to_braid, sl_from_braid};
use gridbraid::equivalence::{equivalent, tc_orbit_equal, MoveClass, SearchBudget};
use gridbraid::moves::{apply, o_stab_script, paired_x_corner, symmetry, Corner, Move, MoveScript, Symmetry};
use gridbraid::random::{random_grid, random_word};
use gridbraid::verify::{
    braid_column_holds, bw_holds, legendrian_column_holds, row_commutation_holds, table2_holds,
};
use gridbraid::{GridDiagram, Marker};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn show(g: &GridDiagram) -> String {
    format!("x={:?} o={:?}", g.x(), g.o())
}

fn x_stab(corner: Corner, column: usize) -> Move {
    Move::Stabilize {
        marker: Marker::X,
        corner,
        column,
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn roundtrip() -> Outcome {
    let mut rng = rng(1);
    let mut words = vec![BraidWord::new(3, vec![-2, 1, 2, 2, 1, 1]).unwrap()];
    for _ in 0..200 {
        let strands = rng.random_range(1..=4);
        let len = rng.random_range(0..=8);
        words.push(random_word(strands, len, &mut rng));
    }
    for w in &words {
        let back = grid_to_braid(&braid_to_grid(w));
        if &back != w {
            return fail(format!("{w} came back as {back}"));
        }
    }
    pass(format!("{} words verbatim", words.len()))
}

/// 100 random grids, every column, every X stabilization type.
fn stabilization_sample() -> Vec<(GridDiagram, usize, Corner, GridDiagram)> {
    let mut rng = rng(2);
    let mut out = Vec::new();
    for _ in 0..100 {
        let n = rng.random_range(2..=6);
        let g = random_grid(n, &mut rng);
        for column in 0..n {
            for corner in Corner::ALL {
                let h = apply(&g, &x_stab(corner, column)).unwrap();
                out.push((g.clone(), column, corner, h));
            }
        }
    }
    out
}

fn braid_column() -> Outcome {
    let budget = OracleBudget::default();
    let mut markov_checked = 0;
    let sample = stabilization_sample();
    for (g, column, corner, h) in &sample {
        if !braid_column_holds(g, h, *corner) {
            return fail(format!("{} X:{corner} column {column}", show(g)));
        }
        if *corner == Corner::SW && g.size() <= 4 {
            let verdict = markov_oracle(&grid_to_braid(g), &grid_to_braid(h), &budget);
            match verdict {
                Verdict::Yes(_) => markov_checked += 1,
                other => {
                    return fail(format!(
                        "markov oracle {:?} on {} X:SW column {column}",
                        other.is_no(),
                        show(g)
                    ))
                }
            }
        }
    }
    pass(format!(
        "{} stabilizations, {markov_checked} Markov witnesses",
        sample.len()
    ))
}

fn legendrian_column() -> Outcome {
    let sample = stabilization_sample();
    let mut isotopies = 0;
    for (g, column, corner, h) in &sample {
        if !legendrian_column_holds(g, h, *corner) {
            return fail(format!("{} X:{corner} column {column}", show(g)));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for (g, ..) in &sample {
        if !seen.insert(g.clone()) {
            continue;
        }
        let inv = classical_invariants(g);
        for m in gridbraid::legal_moves(g) {
            if m.is_translation() || m.is_commutation() {
                let j = classical_invariants(&apply(g, &m).unwrap());
                if (j.tb, j.r, j.sl) != (inv.tb, inv.r, inv.sl) {
                    return fail(format!("{} {m}", show(g)));
                }
                isotopies += 1;
            }
        }
    }
    pass(format!(
        "{} stabilizations, {isotopies} translations/commutations",
        sample.len()
    ))
}

fn sl_coherence() -> Outcome {
    let mut rng = rng(4);
    for _ in 0..500 {
        let n = rng.random_range(2..=7);
        let g = random_grid(n, &mut rng);
        let (a, b) = (sl_from_braid(&grid_to_braid(&g)), classical_invariants(&g).sl);
        if a != b {
            return fail(format!("{}: braid {a} vs front {b}", show(&g)));
        }
    }
    pass("500 grids")
}

fn proof_steps() -> Outcome {
    let mut rng = rng(5);
    let mut instances = 0;
    let mut commutations = 0;
    while instances < 50 {
        let n = rng.random_range(2..=6);
        let g = random_grid(n, &mut rng);
        let b = grid_to_braid(&g);
        if b.strands() > 4 {
            continue;
        }
        instances += 1;
        let budget = OracleBudget {
            max_depth: n,
            max_states: 200_000,
            max_extra_strands: 0,
        };
        for m in [
            Move::TranslateLeft,
            Move::TranslateRight,
            Move::TranslateUp,
            Move::TranslateDown,
        ] {
            let moved = grid_to_braid(&apply(&g, &m).unwrap());
            match conjugacy_oracle(&b, &moved, &budget) {
                Ok(Verdict::Yes(u)) => {
                    if !b.conjugate(&u).unwrap().equals(&moved).unwrap() {
                        return fail(format!("bad conjugator for {} {m}", show(&g)));
                    }
                }
                _ => return fail(format!("{} {m}: {b} vs {moved} not shown conjugate", show(&g))),
            }
        }
        for r in 0..n - 1 {
            if apply(&g, &Move::CommuteRows(r)).is_ok() {
                commutations += 1;
                if !row_commutation_holds(&g, r) {
                    return fail(format!("{} CR {r}", show(&g)));
                }
            }
        }
    }
    pass(format!(
        "{instances} grids x 4 translations, {commutations} row commutations"
    ))
}

fn words_up_to(len: usize) -> Vec<BraidWord> {
    let letters = [1, -1, 2, -2];
    let mut all = vec![vec![]];
    let mut layer: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&k| {
                    let mut v = w.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all.into_iter()
        .map(|l| BraidWord::new(4, l).unwrap())
        .collect()
}

fn birman_wrinkle() -> Outcome {
    let words = words_up_to(3);
    let mut count = 0;
    for b1 in &words {
        for b2 in &words {
            if !bw_holds(b1, b2, 4) {
                return fail(format!("{b1} / {b2}"));
            }
            count += 1;
        }
    }
    pass(format!("{count} pairs"))
}

fn table2() -> Outcome {
    let mut rng = rng(7);
    let mut checks = 0;
    for s in Symmetry::ALL {
        for corner in Corner::ALL {
            for _ in 0..50 {
                let n = rng.random_range(2..=6);
                let g = random_grid(n, &mut rng);
                let column = rng.random_range(0..n);
                if !table2_holds(&g, s, corner, column) {
                    return fail(format!("{} {s:?} X:{corner} column {column}", show(&g)));
                }
                checks += 1;
            }
        }
    }
    pass(format!("{checks} checks"))
}

fn o_stabilization() -> Outcome {
    let mut rng = rng(8);
    for _ in 0..50 {
        let n = rng.random_range(2..=6);
        let g = random_grid(n, &mut rng);
        let corner = Corner::ALL[rng.random_range(0..4)];
        let column = rng.random_range(0..n);
        let script = o_stab_script(&g, corner, column).unwrap();
        let direct = apply(
            &g,
            &Move::Stabilize {
                marker: Marker::O,
                corner,
                column,
            },
        )
        .unwrap();
        let types: Vec<_> = script
            .moves
            .iter()
            .filter_map(Move::stabilization_type)
            .collect();
        if types != vec![(Marker::X, paired_x_corner(corner))] {
            return fail(format!("{} O:{corner}: stabilizations {types:?}", show(&g)));
        }
        if !tc_orbit_equal(&script.replay(&g).unwrap(), &direct) {
            return fail(format!("{} O:{corner} column {column}", show(&g)));
        }
    }
    pass("50 scripts")
}

fn equivalence_sanity() -> Outcome {
    let u = GridDiagram::unknot();
    let nw = apply(&u, &x_stab(Corner::NW, 0)).unwrap();
    let se = apply(&u, &x_stab(Corner::SE, 0)).unwrap();
    let budget = SearchBudget::for_inputs(&u, &nw);
    for class in [MoveClass::L, MoveClass::T] {
        if !equivalent(&u, &nw, class, &budget).is_no() {
            return fail(format!("U2 vs X:NW in class {class} not No"));
        }
    }
    match equivalent(&u, &nw, MoveClass::K, &budget) {
        Verdict::Yes(script) => {
            let real = script.moves.iter().filter(|m| !m.is_translation()).count();
            if script.replay(&u).as_ref() != Ok(&nw) || real != 1 {
                return fail(format!("class K script {script:?}"));
            }
        }
        _ => return fail("U2 vs X:NW in class K not Yes"),
    }
    match equivalent(&u, &se, MoveClass::T, &budget) {
        Verdict::Yes(script) if script.replay(&u).as_ref() == Ok(&se) => {}
        _ => return fail("U2 vs X:SE in class T not Yes"),
    }
    if !equivalent(&u, &se, MoveClass::L, &budget).is_no() {
        return fail("U2 vs X:SE in class L not No");
    }
    pass("5 queries")
}

fn identities() -> Outcome {
    let mut rng = rng(10);
    let mut cases = 0;
    for _ in 0..125 {
        let n = rng.random_range(2..=7);
        let g = random_grid(n, &mut rng);
        for s in Symmetry::ALL {
            if symmetry(&symmetry(&g, s), s) != g {
                return fail(format!("{s:?} on {}", show(&g)));
            }
        }
        if GridDiagram::parse(&g.serialize()).as_ref() != Ok(&g) {
            return fail(format!("grid text {}", show(&g)));
        }
        cases += 1;
    }
    for _ in 0..125 {
        let n = rng.random_range(2..=6);
        let g = random_grid(n, &mut rng);
        let column = rng.random_range(0..n);
        for marker in [Marker::X, Marker::O] {
            for corner in Corner::ALL {
                let m = Move::Stabilize {
                    marker,
                    corner,
                    column,
                };
                let h = apply(&g, &m).unwrap();
                if apply(&h, &m.inverse_on(&g)).as_ref() != Ok(&g) {
                    return fail(format!("{m} on {}", show(&g)));
                }
            }
        }
        let script = MoveScript::new(gridbraid::legal_moves(&g));
        if MoveScript::parse(&script.serialize()).as_ref() != Ok(&script) {
            return fail(format!("script text for {}", show(&g)));
        }
        cases += 1;
    }
    for _ in 0..125 {
        let n = rng.random_range(2..=5);
        let b1 = random_word(n - 1, rng.random_range(0..=4), &mut rng);
        let b2 = random_word(n - 1, rng.random_range(0..=4), &mut rng);
        let s = n as i32 - 1;
        let e = if rng.random_bool(0.5) { 1 } else { -1 };
        let letters = [b1.letters(), &[e * s], b2.letters(), &[-e * s]].concat();
        let w = BraidWord::new(n, letters).unwrap();
        let twice = exchange(&exchange(&w).unwrap()).unwrap();
        if !twice.equals(&w).unwrap() {
            return fail(format!("exchange twice on {w}"));
        }
        cases += 1;
    }
    for _ in 0..125 {
        let strands = rng.random_range(1..=5);
        let w = random_word(strands, rng.random_range(0..=10), &mut rng);
        if BraidWord::parse(&w.serialize()).as_ref() != Ok(&w) {
            return fail(format!("braid text {w}"));
        }
        cases += 1;
    }
    pass(format!("{cases} cases"))
}

fn main() {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check, u64); 10] = [
        ("braid/grid roundtrip", roundtrip, 5),
        ("stabilizations: braid column", braid_column, 60),
        ("stabilizations: Legendrian and transverse columns", legendrian_column, 30),
        ("sl coherence of braid and front", sl_coherence, 30),
        ("translations and commutations on braids", proof_steps, 120),
        ("exchange as Markov moves", birman_wrinkle, 60),
        ("symmetries and stabilization types", table2, 120),
        ("O stabilization through X stabilization", o_stabilization, 60),
        ("equivalence engine sanity", equivalence_sanity, 5),
        ("involutions and text roundtrips", identities, 10),
    ];
    let mut failures = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(limit) {
            outcome = fail(format!("{} but took {elapsed:.1?} (limit {limit}s)", outcome.detail));
        }
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {}: {name} ({}; {elapsed:.2?})",
            i + 1,
            outcome.detail
        );
        if !outcome.ok {
            failures += 1;
        }
    }
    if failures > 0 {
        eprintln!("{failures} criteria failed");
        std::process::exit(1);
    }
}
