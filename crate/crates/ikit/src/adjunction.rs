//! Adjoint pairs and triples between finite complete lattices: verification
//! of the adjunction biconditional, synthesis of missing adjoints from
//! preservation properties, and the preservation laws every adjoint pair
//! satisfies.
//!
//! Conventions: in a pair `left: P -> Q`, `right: Q -> P`, adjointness means
//! `left(m) <= n` iff `m <= right(n)` for all `m` in `P`, `n` in `Q`. The
//! synthesis formulas are
//! `left(p) = meet { q | p <= right(q) }` and
//! `right(q) = join { p | left(p) <= q }`,
//! which exist exactly when the given map preserves all meets (resp. joins).

use thiserror::Error;

use crate::order::{self, same_lattice, Lattice, MapError, MonotoneMap};

/// Lattice-size cap for the exhaustive subset scans used by preservation
/// checks; above this the operations report `CapExceeded` instead of
/// silently sampling.
pub const DEFAULT_SUBSET_CAP: usize = 12;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AdjunctionError {
    #[error("the two maps do not connect the same pair of lattices")]
    DomainMismatch,
    #[error("adjointness fails at (`{left_arg}`, `{right_arg}`)")]
    NotAdjoint { left_arg: String, right_arg: String },
    #[error("meet of {{{}}} not preserved: expected `{expected}`, got `{got}`", subset.join(", "))]
    MeetNotPreserved {
        subset: Vec<String>,
        expected: String,
        got: String,
    },
    #[error("join of {{{}}} not preserved: expected `{expected}`, got `{got}`", subset.join(", "))]
    JoinNotPreserved {
        subset: Vec<String>,
        expected: String,
        got: String,
    },
    #[error("left.right.left differs from left at `{at}`")]
    LeftTripleLaw { at: String },
    #[error("right.left.right differs from right at `{at}`")]
    RightTripleLaw { at: String },
    #[error("lattice of size {size} exceeds the subset-scan cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Checks the adjunction biconditional over every pair of elements.
pub fn is_adjoint_pair(left: &MonotoneMap, right: &MonotoneMap) -> Result<(), AdjunctionError> {
    if !same_lattice(left.dom(), right.cod()) || !same_lattice(left.cod(), right.dom()) {
        return Err(AdjunctionError::DomainMismatch);
    }
    let p = left.dom();
    let q = left.cod();
    for m in p.elements() {
        for n in q.elements() {
            if q.leq(left.apply(m), n) != p.leq(m, right.apply(n)) {
                return Err(AdjunctionError::NotAdjoint {
                    left_arg: p.name(m).to_string(),
                    right_arg: q.name(n).to_string(),
                });
            }
        }
    }
    Ok(())
}

/// A verified adjoint pair `left -| right`.
#[derive(Debug, Clone)]
pub struct AdjointPair {
    left: MonotoneMap,
    right: MonotoneMap,
}

impl AdjointPair {
    pub fn new(left: MonotoneMap, right: MonotoneMap) -> Result<Self, AdjunctionError> {
        is_adjoint_pair(&left, &right)?;
        Ok(AdjointPair { left, right })
    }

    pub fn left(&self) -> &MonotoneMap {
        &self.left
    }

    pub fn right(&self) -> &MonotoneMap {
        &self.right
    }
}

/// First meet (by subset mask order) that the table fails to preserve.
fn find_unpreserved_meet(
    dom: &Lattice,
    cod: &Lattice,
    table: &[usize],
) -> Option<(Vec<String>, usize, usize)> {
    let n = dom.len();
    for mask in 0u64..1 << n {
        let members = || (0..n).filter(move |&k| mask >> k & 1 == 1);
        let expected = table[dom.meet_all(members())];
        let got = cod.meet_all(members().map(|k| table[k]));
        if expected != got {
            let subset = members().map(|k| dom.name(k).to_string()).collect();
            return Some((subset, expected, got));
        }
    }
    None
}

fn find_unpreserved_join(
    dom: &Lattice,
    cod: &Lattice,
    table: &[usize],
) -> Option<(Vec<String>, usize, usize)> {
    let n = dom.len();
    for mask in 0u64..1 << n {
        let members = || (0..n).filter(move |&k| mask >> k & 1 == 1);
        let expected = table[dom.join_all(members())];
        let got = cod.join_all(members().map(|k| table[k]));
        if expected != got {
            let subset = members().map(|k| dom.name(k).to_string()).collect();
            return Some((subset, expected, got));
        }
    }
    None
}

fn check_cap(size: usize, cap: usize) -> Result<(), AdjunctionError> {
    if size > cap {
        return Err(AdjunctionError::CapExceeded { size, cap });
    }
    Ok(())
}

/// Synthesizes the left adjoint of `right`, or reports a meet it fails to
/// preserve.
pub fn synthesize_left_adjoint(right: &MonotoneMap) -> Result<MonotoneMap, AdjunctionError> {
    synthesize_left_adjoint_table(right.dom(), right.cod(), right.table(), DEFAULT_SUBSET_CAP)
}

/// Raw-table variant of [`synthesize_left_adjoint`]; the table need not be
/// monotone (a non-monotone table always fails the meet-preservation scan).
pub fn synthesize_left_adjoint_table(
    dom: &Lattice,
    cod: &Lattice,
    table: &[usize],
    cap: usize,
) -> Result<MonotoneMap, AdjunctionError> {
    order::check_table(dom, cod, table).map_err(AdjunctionError::Map)?;
    check_cap(dom.len(), cap)?;
    if let Some((subset, expected, got)) = find_unpreserved_meet(dom, cod, table) {
        return Err(AdjunctionError::MeetNotPreserved {
            subset,
            expected: cod.name(expected).to_string(),
            got: cod.name(got).to_string(),
        });
    }
    // left(p) = meet of { q | p <= right(q) }.
    let left_table: Vec<usize> = cod
        .elements()
        .map(|p| dom.meet_all(dom.elements().filter(|&q| cod.leq(p, table[q]))))
        .collect();
    Ok(MonotoneMap::new(cod, dom, left_table).expect("synthesized left adjoint is monotone"))
}

/// Synthesizes the right adjoint of `left`, or reports a join it fails to
/// preserve.
pub fn synthesize_right_adjoint(left: &MonotoneMap) -> Result<MonotoneMap, AdjunctionError> {
    synthesize_right_adjoint_table(left.dom(), left.cod(), left.table(), DEFAULT_SUBSET_CAP)
}

/// Raw-table variant of [`synthesize_right_adjoint`].
pub fn synthesize_right_adjoint_table(
    dom: &Lattice,
    cod: &Lattice,
    table: &[usize],
    cap: usize,
) -> Result<MonotoneMap, AdjunctionError> {
    order::check_table(dom, cod, table).map_err(AdjunctionError::Map)?;
    check_cap(dom.len(), cap)?;
    if let Some((subset, expected, got)) = find_unpreserved_join(dom, cod, table) {
        return Err(AdjunctionError::JoinNotPreserved {
            subset,
            expected: cod.name(expected).to_string(),
            got: cod.name(got).to_string(),
        });
    }
    // right(q) = join of { p | left(p) <= q }.
    let right_table: Vec<usize> = cod
        .elements()
        .map(|q| dom.join_all(dom.elements().filter(|&p| cod.leq(table[p], q))))
        .collect();
    Ok(MonotoneMap::new(cod, dom, right_table).expect("synthesized right adjoint is monotone"))
}

/// Confirms the preservation laws of a verified pair: the left adjoint
/// preserves all joins, the right all meets, and both triple-composition
/// identities hold.
pub fn check_preservation(pair: &AdjointPair) -> Result<(), AdjunctionError> {
    check_preservation_capped(pair, DEFAULT_SUBSET_CAP)
}

pub fn check_preservation_capped(pair: &AdjointPair, cap: usize) -> Result<(), AdjunctionError> {
    let (left, right) = (pair.left(), pair.right());
    let p = left.dom();
    let q = left.cod();
    check_cap(p.len().max(q.len()), cap)?;
    if let Some((subset, expected, got)) = find_unpreserved_join(p, q, left.table()) {
        return Err(AdjunctionError::JoinNotPreserved {
            subset,
            expected: q.name(expected).to_string(),
            got: q.name(got).to_string(),
        });
    }
    if let Some((subset, expected, got)) = find_unpreserved_meet(q, p, right.table()) {
        return Err(AdjunctionError::MeetNotPreserved {
            subset,
            expected: p.name(expected).to_string(),
            got: p.name(got).to_string(),
        });
    }
    for m in p.elements() {
        if left.apply(right.apply(left.apply(m))) != left.apply(m) {
            return Err(AdjunctionError::LeftTripleLaw {
                at: p.name(m).to_string(),
            });
        }
    }
    for n in q.elements() {
        if right.apply(left.apply(right.apply(n))) != right.apply(n) {
            return Err(AdjunctionError::RightTripleLaw {
                at: q.name(n).to_string(),
            });
        }
    }
    Ok(())
}

/// The chain `existential -| inverse -| universal`, packaging how a morphism
/// acts on subobject lattices: `existential, universal: P(X) -> P(Y)` and
/// `inverse: P(Y) -> P(X)`.
#[derive(Debug, Clone)]
pub struct AdjointTriple {
    existential: MonotoneMap,
    inverse: MonotoneMap,
    universal: MonotoneMap,
}

impl AdjointTriple {
    pub fn new(
        existential: MonotoneMap,
        inverse: MonotoneMap,
        universal: MonotoneMap,
    ) -> Result<Self, AdjunctionError> {
        is_adjoint_pair(&existential, &inverse)?;
        is_adjoint_pair(&inverse, &universal)?;
        Ok(AdjointTriple {
            existential,
            inverse,
            universal,
        })
    }

    /// The identity action on a lattice.
    pub fn identity(l: &Lattice) -> Self {
        let id = MonotoneMap::identity(l);
        AdjointTriple {
            existential: id.clone(),
            inverse: id.clone(),
            universal: id,
        }
    }

    pub fn existential(&self) -> &MonotoneMap {
        &self.existential
    }

    pub fn inverse(&self) -> &MonotoneMap {
        &self.inverse
    }

    pub fn universal(&self) -> &MonotoneMap {
        &self.universal
    }

    /// Lattice of subobjects of the morphism's source.
    pub fn source(&self) -> &Lattice {
        self.existential.dom()
    }

    /// Lattice of subobjects of the morphism's target.
    pub fn target(&self) -> &Lattice {
        self.existential.cod()
    }

    /// Action of the composed morphism: `self` acts for `g: Z -> X`, `outer`
    /// for `f: X -> Y`, and the result acts for `f . g: Z -> Y`. In
    /// particular the composite inverse image is
    /// `self.inverse . outer.inverse`.
    pub fn then(&self, outer: &AdjointTriple) -> Result<AdjointTriple, AdjunctionError> {
        AdjointTriple::new(
            self.existential.then(&outer.existential)?,
            outer.inverse.then(&self.inverse)?,
            self.universal.then(&outer.universal)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{enumerate_monotone_maps, CompleteLattice};

    #[test]
    fn identity_is_self_adjoint() {
        let l = CompleteLattice::chain(3);
        let id = MonotoneMap::identity(&l);
        assert!(is_adjoint_pair(&id, &id).is_ok());
    }

    #[test]
    fn constant_pair_on_chain_2_is_not_adjoint() {
        // Oracle over all 4 pairs (m, n): left(m) <= n vs m <= right(n).
        //   (0,0): 1 <= 0 false, 0 <= 0 true  -> violation
        //   (0,1): 1 <= 1 true,  0 <= 0 true
        //   (1,0): 1 <= 0 false, 1 <= 0 false
        //   (1,1): 1 <= 1 true,  1 <= 0 false -> violation
        // The first violation in scan order is (0, 0).
        let l = CompleteLattice::chain(2);
        let left = MonotoneMap::constant(&l, &l, 1);
        let right = MonotoneMap::constant(&l, &l, 0);
        let mut violations = Vec::new();
        for m in 0..2 {
            for n in 0..2 {
                if l.leq(left.apply(m), n) != l.leq(m, right.apply(n)) {
                    violations.push((m, n));
                }
            }
        }
        assert_eq!(violations, vec![(0, 0), (1, 1)]);
        assert_eq!(
            is_adjoint_pair(&left, &right).unwrap_err(),
            AdjunctionError::NotAdjoint {
                left_arg: "0".into(),
                right_arg: "0".into(),
            }
        );
    }

    #[test]
    fn mismatched_lattices_are_rejected() {
        let c2 = CompleteLattice::chain(2);
        let c3 = CompleteLattice::chain(3);
        let f = MonotoneMap::identity(&c2);
        let g = MonotoneMap::identity(&c3);
        assert_eq!(
            is_adjoint_pair(&f, &g).unwrap_err(),
            AdjunctionError::DomainMismatch
        );
    }

    #[test]
    fn left_adjoint_of_a_chain_surjection() {
        // right: chain {0,1,2} -> chain {0,1}, 0,1,2 -> 0,1,1.
        // Search oracle: among all 6 monotone maps chain2 -> chain3, exactly
        // one passes the full adjunction scan, and it is [0, 1].
        let q = CompleteLattice::chain(3);
        let p = CompleteLattice::chain(2);
        let right = MonotoneMap::new(&q, &p, vec![0, 1, 1]).unwrap();
        let candidates = enumerate_monotone_maps(&p, &q);
        assert_eq!(candidates.len(), 6);
        let adjoints: Vec<&MonotoneMap> = candidates
            .iter()
            .filter(|m| is_adjoint_pair(m, &right).is_ok())
            .collect();
        assert_eq!(adjoints.len(), 1);
        assert_eq!(adjoints[0].table(), &[0, 1]);
        let synthesized = synthesize_left_adjoint(&right).unwrap();
        assert_eq!(synthesized.table(), &[0, 1]);
    }

    #[test]
    fn left_adjoint_of_identity_is_identity() {
        let l = CompleteLattice::powerset(&["a", "b"]);
        let id = MonotoneMap::identity(&l);
        let phi = synthesize_left_adjoint(&id).unwrap();
        assert!(phi.equals_pointwise(&id));
        let psi = synthesize_right_adjoint(&id).unwrap();
        assert!(psi.equals_pointwise(&id));
    }

    #[test]
    fn constant_bottom_fails_on_the_empty_meet() {
        let l = CompleteLattice::chain(2);
        let right = MonotoneMap::constant(&l, &l, 0);
        let err = synthesize_left_adjoint(&right).unwrap_err();
        assert_eq!(
            err,
            AdjunctionError::MeetNotPreserved {
                subset: vec![],
                expected: "0".into(),
                got: "1".into(),
            }
        );
    }

    #[test]
    fn constant_top_fails_on_the_empty_join() {
        let l = CompleteLattice::chain(2);
        let left = MonotoneMap::constant(&l, &l, 1);
        let err = synthesize_right_adjoint(&left).unwrap_err();
        assert_eq!(
            err,
            AdjunctionError::JoinNotPreserved {
                subset: vec![],
                expected: "1".into(),
                got: "0".into(),
            }
        );
    }

    #[test]
    fn cap_is_reported_not_sampled() {
        let l = CompleteLattice::chain(4);
        let id = MonotoneMap::identity(&l);
        let err = synthesize_left_adjoint_table(&l, &l, id.table(), 3).unwrap_err();
        assert_eq!(err, AdjunctionError::CapExceeded { size: 4, cap: 3 });
    }

    #[test]
    fn preservation_laws_hold_for_identity_pair() {
        let l = CompleteLattice::powerset(&["a", "b"]);
        let id = MonotoneMap::identity(&l);
        let pair = AdjointPair::new(id.clone(), id).unwrap();
        assert!(check_preservation(&pair).is_ok());
    }

    #[test]
    fn unit_and_counit_inequalities_hold_for_synthesized_pairs() {
        // For every monotone meet-preserving map between small catalog
        // lattices, the synthesized pair satisfies m <= right(left(m)) and
        // left(right(n)) <= n.
        for q in crate::catalog::lattices_up_to(4) {
            for p in crate::catalog::lattices_up_to(4) {
                for right in enumerate_monotone_maps(&q, &p) {
                    let Ok(left) = synthesize_left_adjoint(&right) else {
                        continue;
                    };
                    for m in p.elements() {
                        assert!(p.leq(m, right.apply(left.apply(m))));
                    }
                    for n in q.elements() {
                        assert!(q.leq(left.apply(right.apply(n)), n));
                    }
                }
            }
        }
    }

    #[test]
    fn adjoints_are_unique_when_they_exist() {
        for q in crate::catalog::lattices_up_to(4) {
            for p in crate::catalog::lattices_up_to(4) {
                for right in enumerate_monotone_maps(&q, &p) {
                    let found: Vec<MonotoneMap> = enumerate_monotone_maps(&p, &q)
                        .into_iter()
                        .filter(|cand| is_adjoint_pair(cand, &right).is_ok())
                        .collect();
                    assert!(found.len() <= 1);
                    // Existence is equivalent to synthesis succeeding.
                    assert_eq!(found.len() == 1, synthesize_left_adjoint(&right).is_ok());
                }
            }
        }
    }

    #[test]
    fn triple_composition_wires_inverse_backwards() {
        let l = CompleteLattice::chain(2);
        let t = AdjointTriple::identity(&l);
        let composed = t.then(&t).unwrap();
        assert!(composed.inverse().equals_pointwise(t.inverse()));
    }
}
