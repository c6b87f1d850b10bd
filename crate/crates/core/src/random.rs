//! Seeded random grids and braid words.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::BraidWord;
use crate::grid::GridDiagram;

/// Uniform among grids of size `n` (`n >= 2`).
pub fn random_grid<R: Rng + ?Sized>(n: usize, rng: &mut R) -> GridDiagram {
    assert!(n >= 2, "grids have size at least 2");
    let mut x: Vec<usize> = (0..n).collect();
    let mut o: Vec<usize> = (0..n).collect();
    x.shuffle(rng);
    loop {
        o.shuffle(rng);
        if x.iter().zip(&o).all(|(a, b)| a != b) {
            return GridDiagram::from_parts(x, o);
        }
    }
}

/// Knot grids only (one component).
pub fn random_knot_grid<R: Rng + ?Sized>(n: usize, rng: &mut R) -> GridDiagram {
    loop {
        let g = random_grid(n, rng);
        if g.components() == 1 {
            return g;
        }
    }
}

/// Letters drawn uniformly from `+-1 .. +-(strands - 1)`.
pub fn random_word<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(1);
    }
    let letters = (0..len)
        .map(|_| {
            let k = rng.random_range(1..strands as i32);
            if rng.random_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::from_parts(strands, letters)
}
