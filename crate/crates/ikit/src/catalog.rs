//! A fixed catalog of small named lattices used by tests, examples, and the
//! exhaustive verification suites.

use crate::order::{CompleteLattice, FinPoset, Lattice};
use std::sync::Arc;

/// The five-element diamond: bottom, three incomparable atoms, top.
pub fn m3() -> Lattice {
    let names = ["0", "a", "b", "c", "1"].map(str::to_string).to_vec();
    let poset = FinPoset::from_fn(names, |i, j| i == j || i == 0 || j == 4).expect("M3 poset");
    Arc::new(CompleteLattice::from_poset(poset).expect("M3 lattice"))
}

/// The five-element pentagon: 0 < a < c < 1 and 0 < b < 1, with b
/// incomparable to both a and c.
pub fn n5() -> Lattice {
    let names = ["0", "a", "c", "b", "1"].map(str::to_string).to_vec();
    let leq = |i: usize, j: usize| match (i, j) {
        _ if i == j => true,
        (0, _) | (_, 4) => true,
        (1, 2) => true,
        _ => false,
    };
    let poset = FinPoset::from_fn(names, leq).expect("N5 poset");
    Arc::new(CompleteLattice::from_poset(poset).expect("N5 lattice"))
}

/// Chains with 2, 3 and 4 elements.
pub fn chains() -> Vec<Lattice> {
    (2..=4).map(CompleteLattice::chain).collect()
}

/// Powersets of 1, 2 and 3 points.
pub fn powersets() -> Vec<Lattice> {
    vec![
        CompleteLattice::powerset(&["a"]),
        CompleteLattice::powerset(&["a", "b"]),
        CompleteLattice::powerset(&["a", "b", "c"]),
    ]
}

/// The full verification catalog: chains of 2-4 elements, powersets of 1-3
/// points, M3 and N5.
pub fn all() -> Vec<Lattice> {
    let mut out = chains();
    out.extend(powersets());
    out.push(m3());
    out.push(n5());
    out
}

/// Catalog members with at most `max` elements.
pub fn lattices_up_to(max: usize) -> Vec<Lattice> {
    all().into_iter().filter(|l| l.len() <= max).collect()
}
