//! Finite posets, complete lattices, and monotone maps — the substrate every
//! other module computes on.
//!
//! Elements are opaque named identifiers. The input order of the element list
//! is kept only for deterministic iteration and canonical output; it carries
//! no semantic meaning. All structures are immutable once validated and can be
//! shared freely across threads.

use std::sync::Arc;

use thiserror::Error;

/// Shared handle to a validated complete lattice.
pub type Lattice = Arc<CompleteLattice>;

/// A finite partially ordered set over named elements.
///
/// The order relation is stored as a full `n x n` membership table; the
/// constructor rejects any relation that is not reflexive, antisymmetric and
/// transitive, reporting the first violation in canonical element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    names: Vec<String>,
    leq: Vec<bool>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    EmptyElements,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("reflexivity violated at `{element}`")]
    ReflexivityViolation { element: String },
    #[error("antisymmetry violated by `{first}` and `{second}`")]
    AntisymmetryViolation { first: String, second: String },
    #[error("transitivity violated on (`{first}`, `{second}`, `{third}`)")]
    TransitivityViolation {
        first: String,
        second: String,
        third: String,
    },
}

impl FinPoset {
    /// Validates a poset given by a membership predicate on element indices.
    pub fn from_fn<F>(names: Vec<String>, leq: F) -> Result<Self, PosetError>
    where
        F: Fn(usize, usize) -> bool,
    {
        if names.is_empty() {
            return Err(PosetError::EmptyElements);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(PosetError::DuplicateElement(name.clone()));
            }
        }
        let n = names.len();
        let table: Vec<bool> = (0..n * n).map(|k| leq(k / n, k % n)).collect();
        let poset = FinPoset { names, leq: table };
        poset.check_laws()?;
        Ok(poset)
    }

    /// Validates a poset given by the full list of related pairs
    /// (reflexive pairs included).
    pub fn from_pairs<S: AsRef<str>>(
        names: Vec<String>,
        pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        if names.is_empty() {
            return Err(PosetError::EmptyElements);
        }
        let index = |name: &str| -> Result<usize, PosetError> {
            names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
        };
        let n = names.len();
        let mut table = vec![false; n * n];
        for (a, b) in pairs {
            let (i, j) = (index(a.as_ref())?, index(b.as_ref())?);
            table[i * n + j] = true;
        }
        Self::from_fn(names, |i, j| table[i * n + j])
    }

    fn check_laws(&self) -> Result<(), PosetError> {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(PosetError::ReflexivityViolation {
                    element: self.names[i].clone(),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(PosetError::AntisymmetryViolation {
                        first: self.names[i.min(j)].clone(),
                        second: self.names[i.max(j)].clone(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(PosetError::TransitivityViolation {
                            first: self.names[i].clone(),
                            second: self.names[j].clone(),
                            third: self.names[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// Index lookup that reports the missing name.
    pub fn require(&self, name: &str) -> Result<usize, PosetError> {
        self.index_of(name)
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }
}

/// Whether a missing bound was a meet or a join.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "meet"),
            BoundKind::Join => write!(f, "join"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("not a lattice: {{{}}} has no {kind}", subset.join(", "))]
    NotALattice { kind: BoundKind, subset: Vec<String> },
}

/// A finite complete lattice: a validated poset together with precomputed
/// binary meet/join tables and the top and bottom elements.
///
/// Tables are materialized at validation time; the lattices here are small
/// and the enumeration-heavy callers want constant-time queries. N-ary meets
/// and joins reduce by folding the binary tables, starting from top
/// (resp. bottom) so that the empty family yields top (resp. bottom).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteLattice {
    poset: FinPoset,
    top: usize,
    bottom: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl CompleteLattice {
    /// Equips a finite poset with its lattice structure, or reports a subset
    /// with no greatest lower (least upper) bound.
    ///
    /// Binary bounds are located directly in the order; joins of larger
    /// families then come out as meets of upper-bound sets, which for finite
    /// posets coincides with folding the binary tables. Once every pair is
    /// bounded, the fold over all elements produces top and bottom.
    pub fn from_poset(poset: FinPoset) -> Result<Self, LatticeError> {
        let n = poset.len();
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in i..n {
                let glb = Self::bound_of_pair(&poset, i, j, BoundKind::Meet).ok_or_else(|| {
                    LatticeError::NotALattice {
                        kind: BoundKind::Meet,
                        subset: vec![poset.name(i).to_string(), poset.name(j).to_string()],
                    }
                })?;
                let lub = Self::bound_of_pair(&poset, i, j, BoundKind::Join).ok_or_else(|| {
                    LatticeError::NotALattice {
                        kind: BoundKind::Join,
                        subset: vec![poset.name(i).to_string(), poset.name(j).to_string()],
                    }
                })?;
                meet[i * n + j] = glb;
                meet[j * n + i] = glb;
                join[i * n + j] = lub;
                join[j * n + i] = lub;
            }
        }
        let mut top = 0;
        let mut bottom = 0;
        for i in 1..n {
            top = join[top * n + i];
            bottom = meet[bottom * n + i];
        }
        Ok(CompleteLattice {
            poset,
            top,
            bottom,
            meet,
            join,
        })
    }

    fn bound_of_pair(poset: &FinPoset, i: usize, j: usize, kind: BoundKind) -> Option<usize> {
        let n = poset.len();
        let below = |x: usize, y: usize| match kind {
            BoundKind::Meet => poset.leq(x, y),
            BoundKind::Join => poset.leq(y, x),
        };
        let bounds: Vec<usize> = (0..n).filter(|&k| below(k, i) && below(k, j)).collect();
        bounds
            .iter()
            .copied()
            .find(|&g| bounds.iter().all(|&k| below(k, g)))
    }

    /// The chain 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> Lattice {
        let names = (0..n).map(|i| i.to_string()).collect();
        let poset = FinPoset::from_fn(names, |i, j| i <= j).expect("chain is a poset");
        Arc::new(Self::from_poset(poset).expect("chain is a lattice"))
    }

    /// The powerset of a ground set ordered by inclusion.
    ///
    /// Element `i` is the subset whose bitmask is `i`, so meet and join are
    /// bitwise and/or on indices; names render as `{a,c}`.
    pub fn powerset(ground: &[&str]) -> Lattice {
        assert!(ground.len() <= 16, "powerset ground set too large");
        let n = 1usize << ground.len();
        let names = (0..n).map(|m| subset_name(ground, m as u64)).collect();
        let poset =
            FinPoset::from_fn(names, |i, j| i & j == i).expect("inclusion order is a poset");
        Arc::new(Self::from_poset(poset).expect("powerset is a lattice"))
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    /// Meet of a family; the empty family yields top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a family; the empty family yields bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }
}

/// Pointer-or-structural equality for shared lattices.
pub fn same_lattice(a: &Lattice, b: &Lattice) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Canonical rendering of a bitmask subset of a named ground set.
pub fn subset_name(ground: &[&str], mask: u64) -> String {
    let mut parts = Vec::new();
    for (k, g) in ground.iter().enumerate() {
        if mask >> k & 1 == 1 {
            parts.push(*g);
        }
    }
    format!("{{{}}}", parts.join(","))
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("map table has {got} entries for a domain of size {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("map value {value} is out of range for a codomain of size {size}")]
    ValueOutOfRange { value: usize, size: usize },
    #[error("not monotone: `{lower}` <= `{upper}` but their images are not ordered")]
    NotMonotone { lower: String, upper: String },
    #[error("composition mismatch: codomain of the first map is not the domain of the second")]
    ComposeMismatch,
}

/// An order-preserving map between complete lattices, stored as a total table
/// on element indices. Construction validates monotonicity and reports the
/// first violating pair in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    dom: Lattice,
    cod: Lattice,
    table: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(dom: &Lattice, cod: &Lattice, table: Vec<usize>) -> Result<Self, MapError> {
        check_table(dom, cod, &table)?;
        for i in dom.elements() {
            for j in dom.elements() {
                if dom.leq(i, j) && !cod.leq(table[i], table[j]) {
                    return Err(MapError::NotMonotone {
                        lower: dom.name(i).to_string(),
                        upper: dom.name(j).to_string(),
                    });
                }
            }
        }
        Ok(MonotoneMap {
            dom: Arc::clone(dom),
            cod: Arc::clone(cod),
            table,
        })
    }

    pub fn identity(l: &Lattice) -> Self {
        MonotoneMap {
            dom: Arc::clone(l),
            cod: Arc::clone(l),
            table: l.elements().collect(),
        }
    }

    pub fn constant(dom: &Lattice, cod: &Lattice, value: usize) -> Self {
        assert!(value < cod.len());
        MonotoneMap {
            dom: Arc::clone(dom),
            cod: Arc::clone(cod),
            table: vec![value; dom.len()],
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn dom(&self) -> &Lattice {
        &self.dom
    }

    pub fn cod(&self) -> &Lattice {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Composition `next . self`; requires `self.cod = next.dom`.
    pub fn then(&self, next: &MonotoneMap) -> Result<MonotoneMap, MapError> {
        if !same_lattice(&self.cod, &next.dom) {
            return Err(MapError::ComposeMismatch);
        }
        Ok(MonotoneMap {
            dom: Arc::clone(&self.dom),
            cod: Arc::clone(&next.cod),
            table: self.table.iter().map(|&x| next.table[x]).collect(),
        })
    }

    pub fn equals_pointwise(&self, other: &MonotoneMap) -> bool {
        same_lattice(&self.dom, &other.dom)
            && same_lattice(&self.cod, &other.cod)
            && self.table == other.table
    }
}

/// Enumerates every monotone map between two lattices, in a deterministic
/// order.
///
/// Elements of the domain are assigned along a linear extension, so a
/// candidate value only has to dominate the join of the images of the
/// already-assigned elements below it; this prunes the `|cod|^|dom|` table
/// space down to exactly the monotone maps.
pub fn enumerate_monotone_maps(dom: &Lattice, cod: &Lattice) -> Vec<MonotoneMap> {
    let n = dom.len();
    let mut order: Vec<usize> = dom.elements().collect();
    order.sort_by_key(|&e| (dom.elements().filter(|&d| dom.leq(d, e)).count(), e));
    let mut out = Vec::new();
    let mut table = vec![0usize; n];
    fn go(
        dom: &Lattice,
        cod: &Lattice,
        order: &[usize],
        pos: usize,
        table: &mut Vec<usize>,
        out: &mut Vec<MonotoneMap>,
    ) {
        if pos == order.len() {
            out.push(MonotoneMap {
                dom: Arc::clone(dom),
                cod: Arc::clone(cod),
                table: table.clone(),
            });
            return;
        }
        let e = order[pos];
        let floor = cod.join_all(
            order[..pos]
                .iter()
                .filter(|&&d| dom.leq(d, e))
                .map(|&d| table[d]),
        );
        for v in cod.elements() {
            if cod.leq(floor, v) {
                table[e] = v;
                go(dom, cod, order, pos + 1, table, out);
            }
        }
    }
    go(dom, cod, &order, 0, &mut table, &mut out);
    out.sort_by(|a, b| a.table.cmp(&b.table));
    out
}

/// Totality/range validation shared by maps and raw tables.
pub(crate) fn check_table(dom: &Lattice, cod: &Lattice, table: &[usize]) -> Result<(), MapError> {
    if table.len() != dom.len() {
        return Err(MapError::TableSize {
            expected: dom.len(),
            got: table.len(),
        });
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= cod.len()) {
        return Err(MapError::ValueOutOfRange {
            value: bad,
            size: cod.len(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    /// Independent oracle: checks the three poset laws for a relation given
    /// as a closure, without going through `FinPoset`.
    fn poset_laws_hold(n: usize, leq: impl Fn(usize, usize) -> bool) -> bool {
        let refl = (0..n).all(|i| leq(i, i));
        let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(leq(i, j) && leq(j, i))));
        let trans = (0..n)
            .all(|i| (0..n).all(|j| (0..n).all(|k| !(leq(i, j) && leq(j, k)) || leq(i, k))));
        refl && antisym && trans
    }

    #[test]
    fn chain_is_a_poset() {
        let p = FinPoset::from_fn(names(&["0", "1", "2"]), |i, j| i <= j).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn two_cycle_fails_antisymmetry() {
        let err = FinPoset::from_pairs(
            names(&["a", "b"]),
            &[("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")],
        )
        .unwrap_err();
        assert_eq!(
            err,
            PosetError::AntisymmetryViolation {
                first: "a".into(),
                second: "b".into(),
            }
        );
    }

    #[test]
    fn missing_reflexive_pair_is_reported() {
        let err = FinPoset::from_pairs(names(&["a", "b"]), &[("a", "a"), ("a", "b")]).unwrap_err();
        assert_eq!(err, PosetError::ReflexivityViolation { element: "b".into() });
    }

    #[test]
    fn transitivity_witness_is_reported() {
        let err = FinPoset::from_pairs(
            names(&["a", "b", "c"]),
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")],
        )
        .unwrap_err();
        assert_eq!(
            err,
            PosetError::TransitivityViolation {
                first: "a".into(),
                second: "b".into(),
                third: "c".into(),
            }
        );
    }

    #[test]
    fn powerset_of_two_points_is_a_valid_4_element_poset() {
        // Oracle: inclusion on bitmasks satisfies the three laws directly.
        assert!(poset_laws_hold(4, |i, j| i & j == i));
        let p = FinPoset::from_fn(names(&["{}", "{a}", "{b}", "{a,b}"]), |i, j| i & j == i).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn empty_element_list_is_rejected() {
        assert_eq!(
            FinPoset::from_fn(vec![], |_, _| true).unwrap_err(),
            PosetError::EmptyElements
        );
    }

    #[test]
    fn duplicate_elements_are_rejected() {
        assert_eq!(
            FinPoset::from_fn(names(&["a", "a"]), |i, j| i == j).unwrap_err(),
            PosetError::DuplicateElement("a".into())
        );
    }

    /// Independent oracle: greatest lower bound of a subset located by scanning
    /// the whole poset, with no reference to the lattice tables.
    fn glb_oracle(p: &FinPoset, subset: &[usize]) -> Option<usize> {
        let lower: Vec<usize> = (0..p.len())
            .filter(|&k| subset.iter().all(|&s| p.leq(k, s)))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&k| p.leq(k, g)))
    }

    fn lub_oracle(p: &FinPoset, subset: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = (0..p.len())
            .filter(|&k| subset.iter().all(|&s| p.leq(s, k)))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&g| upper.iter().all(|&k| p.leq(g, k)))
    }

    #[test]
    fn powerset_of_three_points_is_a_complete_lattice() {
        let l = CompleteLattice::powerset(&["a", "b", "c"]);
        assert_eq!(l.name(l.top()), "{a,b,c}");
        assert_eq!(l.name(l.bottom()), "{}");
        for i in l.elements() {
            for j in l.elements() {
                assert_eq!(l.meet(i, j), i & j);
                assert_eq!(l.join(i, j), i | j);
            }
        }
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        // Two minimal elements m1, m2 below two maximal elements t1, t2.
        let poset = FinPoset::from_fn(names(&["m1", "m2", "t1", "t2"]), |i, j| {
            i == j || (i < 2 && j >= 2)
        })
        .unwrap();
        // Oracle scan over all 16 subsets: the earliest pair with a missing
        // bound is {m1, m2}.
        let mut first_bad: Option<Vec<usize>> = None;
        'outer: for i in 0..4 {
            for j in i..4 {
                let subset = vec![i, j];
                if glb_oracle(&poset, &subset).is_none() || lub_oracle(&poset, &subset).is_none() {
                    first_bad = Some(subset);
                    break 'outer;
                }
            }
        }
        assert_eq!(first_bad, Some(vec![0, 1]));
        for mask in 0u32..16 {
            let subset: Vec<usize> = (0..4).filter(|&k| mask >> k & 1 == 1).collect();
            let bounded = glb_oracle(&poset, &subset).is_some()
                && lub_oracle(&poset, &subset).is_some();
            // A subset is bounded exactly when it is non-empty and avoids
            // both incomparable pairs {m1,m2} and {t1,t2}.
            let expect = !subset.is_empty()
                && !(subset.contains(&0) && subset.contains(&1))
                && !(subset.contains(&2) && subset.contains(&3));
            assert_eq!(bounded, expect, "subset {subset:?}");
        }
        let err = CompleteLattice::from_poset(poset).unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotALattice {
                kind: BoundKind::Meet,
                subset: vec!["m1".into(), "m2".into()],
            }
        );
    }

    #[test]
    fn chain_meet_is_min_and_join_is_max() {
        let l = CompleteLattice::chain(3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l.meet(i, j), i.min(j));
                assert_eq!(l.join(i, j), i.max(j));
            }
        }
        assert_eq!(l.top(), 2);
        assert_eq!(l.bottom(), 0);
    }

    #[test]
    fn nary_folds_match_the_bound_oracle_on_small_lattices() {
        for l in crate::catalog::lattices_up_to(6) {
            let n = l.len();
            for mask in 0u32..1 << n {
                let subset: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).collect();
                let glb = l.meet_all(subset.iter().copied());
                let lub = l.join_all(subset.iter().copied());
                assert_eq!(Some(glb), glb_oracle(l.poset(), &subset));
                assert_eq!(Some(lub), lub_oracle(l.poset(), &subset));
            }
        }
    }

    #[test]
    fn empty_family_bounds_are_top_and_bottom() {
        let l = CompleteLattice::powerset(&["a", "b"]);
        assert_eq!(l.meet_all([]), l.top());
        assert_eq!(l.join_all([]), l.bottom());
    }

    #[test]
    fn binary_lattice_laws_hold_exhaustively() {
        for l in crate::catalog::lattices_up_to(6) {
            for x in l.elements() {
                for y in l.elements() {
                    assert_eq!(l.meet(x, y), l.meet(y, x));
                    assert_eq!(l.join(x, y), l.join(y, x));
                    assert_eq!(l.meet(x, x), x);
                    assert_eq!(l.join(x, x), x);
                    assert_eq!(l.meet(x, l.join(x, y)), x, "absorption in {:?}", l.name(x));
                    assert_eq!(l.join(x, l.meet(x, y)), x);
                    for z in l.elements() {
                        assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
                        assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn identity_map_is_monotone() {
        let l = CompleteLattice::chain(3);
        let id = MonotoneMap::identity(&l);
        assert!(MonotoneMap::new(&l, &l, id.table().to_vec()).is_ok());
    }

    #[test]
    fn inverted_chain_map_reports_first_witness() {
        let l = CompleteLattice::chain(3);
        let err = MonotoneMap::new(&l, &l, vec![1, 0, 2]).unwrap_err();
        assert_eq!(
            err,
            MapError::NotMonotone {
                lower: "0".into(),
                upper: "1".into(),
            }
        );
    }

    #[test]
    fn complement_on_powerset_of_one_point_is_not_monotone() {
        // Oracle: the two comparable pairs are ({},{}) and ({},{a}); the
        // complement map sends {} to {a} and {a} to {}, breaking the second.
        let l = CompleteLattice::powerset(&["a"]);
        assert!(l.leq(0, 1) && !l.leq(1, 0));
        let err = MonotoneMap::new(&l, &l, vec![1, 0]).unwrap_err();
        assert_eq!(
            err,
            MapError::NotMonotone {
                lower: "{}".into(),
                upper: "{a}".into(),
            }
        );
    }

    #[test]
    fn composition_follows_tables() {
        let c2 = CompleteLattice::chain(2);
        let c3 = CompleteLattice::chain(3);
        let f = MonotoneMap::new(&c2, &c3, vec![0, 2]).unwrap();
        let g = MonotoneMap::new(&c3, &c2, vec![0, 1, 1]).unwrap();
        assert_eq!(f.then(&g).unwrap().table(), &[0, 1]);
        assert!(f.then(&f).is_err());
    }

    #[test]
    fn monotone_enumeration_matches_naive_filter() {
        // Oracle: filter all |cod|^|dom| tables by the monotonicity predicate.
        let pairs = [
            (CompleteLattice::chain(3), CompleteLattice::chain(2)),
            (CompleteLattice::powerset(&["a", "b"]), CompleteLattice::chain(3)),
            (crate::catalog::n5(), CompleteLattice::powerset(&["a"])),
        ];
        for (dom, cod) in pairs {
            let n = dom.len();
            let k = cod.len();
            let mut naive = Vec::new();
            let mut table = vec![0usize; n];
            loop {
                let monotone = (0..n).all(|i| {
                    (0..n).all(|j| !dom.leq(i, j) || cod.leq(table[i], table[j]))
                });
                if monotone {
                    naive.push(table.clone());
                }
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    table[pos] += 1;
                    if table[pos] < k {
                        break;
                    }
                    table[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
            naive.sort();
            let fast: Vec<Vec<usize>> = enumerate_monotone_maps(&dom, &cod)
                .into_iter()
                .map(|m| m.table().to_vec())
                .collect();
            assert_eq!(fast, naive);
        }
    }
}
