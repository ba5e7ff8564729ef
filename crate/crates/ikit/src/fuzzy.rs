//! GL-monoids, graded fuzzy interior operators, and the graded topologies
//! they induce.
//!
//! A GL-monoid is a complete lattice with a commutative tensor whose unit is
//! the top, distributing over arbitrary joins and divisible (`a <= b` implies
//! `a = b (x) c` for some `c`). Fuzzy sets over a ground set `X` take values
//! in the monoid's lattice; a fuzzy interior operator is indexed by a level
//! and satisfies axioms `I1`-`I7` below. Grading openness by
//! `grade(f) = join { level | f <= interior(f, level) }` turns any such
//! operator into a graded topology.
//!
//! Two axioms are printed ambiguously in the literature this follows; the
//! readings used here are explicit:
//!
//! - `I5` (level-indexed idempotence) is checked as
//!   `interior(f, a) <= interior(interior(f, a), a)` — the outer application
//!   reuses the same level.
//! - `I7` (left continuity in the level) defaults to the constant-family
//!   reading: if `interior(f, -)` is constant on a non-empty level set `K`,
//!   its value persists at `join K`. [`I7Reading::FixedPoint`] switches to
//!   the weaker reading that only constrains levels at which `f` itself is
//!   fixed.

use std::sync::Arc;

use thiserror::Error;

use crate::order::Lattice;

/// Cap on `|L|^|X|`, the number of fuzzy sets iterated by the axiom checks.
pub const DEFAULT_FUZZY_CAP: usize = 81;
/// Lattice-size cap for the subset scans in the monoid checks.
pub const DEFAULT_MONOID_CAP: usize = 12;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FuzzyError {
    #[error("tensor table has {got} entries for a lattice of size {expected}")]
    TensorSize { expected: usize, got: usize },
    #[error("tensor value {value} is out of range for a lattice of size {size}")]
    ValueOutOfRange { value: usize, size: usize },
    #[error("tensor is not commutative at (`{a}`, `{b}`)")]
    NotCommutative { a: String, b: String },
    #[error("tensor is not associative on (`{a}`, `{b}`, `{c}`)")]
    NotAssociative { a: String, b: String, c: String },
    #[error("unit law fails at `{a}`: top (x) `{a}` != `{a}`")]
    UnitLaw { a: String },
    #[error("tensor is not isotone: `{a}` <= `{b}` but `{c}` (x) `{a}` exceeds `{c}` (x) `{b}`")]
    NotIsotone { a: String, b: String, c: String },
    #[error("tensor does not distribute over the join of {{{}}} at `{a}`", subset.join(", "))]
    JoinNotDistributed { a: String, subset: Vec<String> },
    #[error("divisibility fails: `{a}` <= `{b}` but no `c` gives `{a}` = `{b}` (x) `c`")]
    NotDivisible { a: String, b: String },
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("interior table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("fuzzy-set code {code} is out of range ({size} fuzzy sets)")]
    CodeOutOfRange { code: usize, size: usize },
    #[error("I1 fails: interior of the constant-top set at level `{level}` is not constant-top")]
    I1 { level: String },
    #[error("I2 fails: `{g}` <= `{f}` and `{alpha}` <= `{beta}` but interiors are not ordered")]
    I2 {
        g: String,
        f: String,
        alpha: String,
        beta: String,
    },
    #[error("I3 fails on (`{f}`, `{alpha}`) (x) (`{g}`, `{beta}`)")]
    I3 {
        f: String,
        alpha: String,
        g: String,
        beta: String,
    },
    #[error("I4 fails: interior of `{f}` at `{alpha}` is not below `{f}`")]
    I4 { f: String, alpha: String },
    #[error("I5 fails: interior at `{alpha}` of `{f}` is not open at its own level")]
    I5 { f: String, alpha: String },
    #[error("I6 fails: interior of `{f}` at bottom is not `{f}`")]
    I6 { f: String },
    #[error("I7 fails for `{f}` on the level set {{{}}}", levels.join(", "))]
    I7 { f: String, levels: Vec<String> },
    #[error("grade of the constant-top set is `{got}`, not top")]
    TopGrade { got: String },
    #[error("tensor grade law fails on (`{f}`, `{g}`)")]
    TensorGrade { f: String, g: String },
    #[error("join grade law fails on the family {{{}}}", family.join(", "))]
    JoinGrade { family: Vec<String> },
    #[error("fuzzy-set space of size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

/// A commutative, unital (unit = top), join-distributive, divisible tensor
/// on a complete lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlMonoid {
    lattice: Lattice,
    tensor: Vec<usize>,
}

impl GlMonoid {
    pub fn new(lattice: &Lattice, tensor: Vec<usize>) -> Result<Self, FuzzyError> {
        Self::new_capped(lattice, tensor, DEFAULT_MONOID_CAP)
    }

    pub fn new_capped(
        lattice: &Lattice,
        tensor: Vec<usize>,
        cap: usize,
    ) -> Result<Self, FuzzyError> {
        let n = lattice.len();
        if tensor.len() != n * n {
            return Err(FuzzyError::TensorSize {
                expected: n,
                got: tensor.len(),
            });
        }
        if let Some(&bad) = tensor.iter().find(|&&v| v >= n) {
            return Err(FuzzyError::ValueOutOfRange { value: bad, size: n });
        }
        if n > cap {
            return Err(FuzzyError::CapExceeded { size: n, cap });
        }
        let name = |i: usize| lattice.name(i).to_string();
        let t = |a: usize, b: usize| tensor[a * n + b];
        for a in 0..n {
            if t(lattice.top(), a) != a {
                return Err(FuzzyError::UnitLaw { a: name(a) });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if t(a, b) != t(b, a) {
                    return Err(FuzzyError::NotCommutative {
                        a: name(a),
                        b: name(b),
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return Err(FuzzyError::NotAssociative {
                            a: name(a),
                            b: name(b),
                            c: name(c),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !lattice.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if !lattice.leq(t(c, a), t(c, b)) {
                        return Err(FuzzyError::NotIsotone {
                            a: name(a),
                            b: name(b),
                            c: name(c),
                        });
                    }
                }
            }
        }
        // Distribution over arbitrary joins, the empty join included.
        for a in 0..n {
            for mask in 0u64..1 << n {
                let members = || (0..n).filter(move |&k| mask >> k & 1 == 1);
                let lhs = t(a, lattice.join_all(members()));
                let rhs = lattice.join_all(members().map(|k| t(a, k)));
                if lhs != rhs {
                    return Err(FuzzyError::JoinNotDistributed {
                        a: name(a),
                        subset: members().map(name).collect(),
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if lattice.leq(a, b) && !(0..n).any(|c| t(b, c) == a) {
                    return Err(FuzzyError::NotDivisible {
                        a: name(a),
                        b: name(b),
                    });
                }
            }
        }
        Ok(GlMonoid {
            lattice: Arc::clone(lattice),
            tensor,
        })
    }

    /// The meet tensor on a lattice; a GL-monoid exactly for frames.
    pub fn meet_monoid(lattice: &Lattice) -> Result<Self, FuzzyError> {
        let n = lattice.len();
        let tensor = (0..n * n).map(|k| lattice.meet(k / n, k % n)).collect();
        Self::new(lattice, tensor)
    }

    /// The n-element chain with the min tensor.
    pub fn min_chain(n: usize) -> Arc<GlMonoid> {
        let lattice = crate::order::CompleteLattice::chain(n);
        Arc::new(Self::meet_monoid(&lattice).expect("min tensor on a chain"))
    }

    /// The n-element chain `0 < 1 < ... < n-1` with the Lukasiewicz tensor
    /// `a (x) b = max(0, a + b - (n-1))`.
    pub fn lukasiewicz_chain(n: usize) -> Arc<GlMonoid> {
        let lattice = crate::order::CompleteLattice::chain(n);
        let tensor = (0..n * n)
            .map(|k| (k / n + k % n).saturating_sub(n - 1))
            .collect();
        Arc::new(Self::new(&lattice, tensor).expect("Lukasiewicz tensor on a chain"))
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.tensor[a * self.lattice.len() + b]
    }
}

/// The space of fuzzy sets `X -> L` for a fixed monoid and ground set,
/// with fuzzy sets encoded as radix-`|L|` integers over the point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzySpace {
    monoid: Arc<GlMonoid>,
    ground: Vec<String>,
}

impl FuzzySpace {
    pub fn new(monoid: &Arc<GlMonoid>, ground: Vec<String>) -> Result<Self, FuzzyError> {
        for (i, p) in ground.iter().enumerate() {
            if ground[..i].contains(p) {
                return Err(FuzzyError::DuplicatePoint(p.clone()));
            }
        }
        Ok(FuzzySpace {
            monoid: Arc::clone(monoid),
            ground,
        })
    }

    pub fn monoid(&self) -> &Arc<GlMonoid> {
        &self.monoid
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn levels(&self) -> usize {
        self.monoid.lattice().len()
    }

    /// Number of fuzzy sets, `|L|^|X|`.
    pub fn size(&self) -> usize {
        self.levels().pow(self.ground.len() as u32)
    }

    pub fn encode(&self, values: &[usize]) -> usize {
        let l = self.levels();
        values.iter().rev().fold(0, |acc, &v| acc * l + v)
    }

    pub fn decode(&self, code: usize) -> Vec<usize> {
        let l = self.levels();
        let mut rest = code;
        (0..self.ground.len())
            .map(|_| {
                let v = rest % l;
                rest /= l;
                v
            })
            .collect()
    }

    pub fn value_at(&self, code: usize, point: usize) -> usize {
        let l = self.levels();
        code / l.pow(point as u32) % l
    }

    pub fn leq(&self, f: usize, g: usize) -> bool {
        let lat = self.monoid.lattice();
        (0..self.ground.len()).all(|p| lat.leq(self.value_at(f, p), self.value_at(g, p)))
    }

    pub fn join(&self, f: usize, g: usize) -> usize {
        let lat = self.monoid.lattice();
        let values: Vec<usize> = (0..self.ground.len())
            .map(|p| lat.join(self.value_at(f, p), self.value_at(g, p)))
            .collect();
        self.encode(&values)
    }

    pub fn tensor(&self, f: usize, g: usize) -> usize {
        let values: Vec<usize> = (0..self.ground.len())
            .map(|p| self.monoid.tensor(self.value_at(f, p), self.value_at(g, p)))
            .collect();
        self.encode(&values)
    }

    /// The constant fuzzy set at a level.
    pub fn constant(&self, level: usize) -> usize {
        let values = vec![level; self.ground.len()];
        self.encode(&values)
    }

    pub fn top_code(&self) -> usize {
        self.constant(self.monoid.lattice().top())
    }

    pub fn render(&self, code: usize) -> String {
        let lat = self.monoid.lattice();
        let parts: Vec<String> = self
            .ground
            .iter()
            .enumerate()
            .map(|(p, name)| format!("{name}:{}", lat.name(self.value_at(code, p))))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// How to read the level-continuity axiom `I7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum I7Reading {
    /// If the interior of `f` is constant across a non-empty level set, the
    /// constant persists at the set's join.
    #[default]
    ConstantFamily,
    /// Only constrains levels at which `f` is fixed: if `f` is open at every
    /// level in the set, it is open at the join.
    FixedPoint,
}

/// A level-indexed interior table on a fuzzy-set space. Construction checks
/// sizes only; the axioms are the business of [`check_fuzzy_interior`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyInterior {
    space: FuzzySpace,
    table: Vec<usize>,
}

impl FuzzyInterior {
    /// `table[f * |L| + level]` is the interior of `f` at `level`.
    pub fn from_table(space: FuzzySpace, table: Vec<usize>) -> Result<Self, FuzzyError> {
        let expected = space.size() * space.levels();
        if table.len() != expected {
            return Err(FuzzyError::TableSize {
                expected,
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= space.size()) {
            return Err(FuzzyError::CodeOutOfRange {
                code: bad,
                size: space.size(),
            });
        }
        Ok(FuzzyInterior { space, table })
    }

    /// The operator that ignores its level and returns the set unchanged.
    pub fn discrete(space: FuzzySpace) -> Self {
        let table = (0..space.size() * space.levels())
            .map(|k| k / space.levels())
            .collect();
        FuzzyInterior { space, table }
    }

    pub fn space(&self) -> &FuzzySpace {
        &self.space
    }

    pub fn apply(&self, f: usize, level: usize) -> usize {
        self.table[f * self.space.levels() + level]
    }
}

/// Checks axioms `I1`-`I7` exhaustively, in order, with the first witness.
pub fn check_fuzzy_interior(i: &FuzzyInterior, reading: I7Reading) -> Result<(), FuzzyError> {
    check_fuzzy_interior_capped(i, reading, DEFAULT_FUZZY_CAP)
}

pub fn check_fuzzy_interior_capped(
    i: &FuzzyInterior,
    reading: I7Reading,
    cap: usize,
) -> Result<(), FuzzyError> {
    let space = i.space();
    if space.size() > cap {
        return Err(FuzzyError::CapExceeded {
            size: space.size(),
            cap,
        });
    }
    let lat = space.monoid().lattice().clone();
    let l = space.levels();
    let sets = space.size();
    let level_name = |a: usize| lat.name(a).to_string();
    // I1: the constant-top set is fixed at every level.
    let top = space.top_code();
    for alpha in 0..l {
        if i.apply(top, alpha) != top {
            return Err(FuzzyError::I1 {
                level: level_name(alpha),
            });
        }
    }
    // I2: antitone in the level, monotone in the set.
    for f in 0..sets {
        for alpha in 0..l {
            for g in 0..sets {
                for beta in 0..l {
                    if space.leq(g, f)
                        && lat.leq(alpha, beta)
                        && !space.leq(i.apply(g, beta), i.apply(f, alpha))
                    {
                        return Err(FuzzyError::I2 {
                            g: space.render(g),
                            f: space.render(f),
                            alpha: level_name(alpha),
                            beta: level_name(beta),
                        });
                    }
                }
            }
        }
    }
    // I3: tensoring interiors refines the interior of the tensor.
    for f in 0..sets {
        for alpha in 0..l {
            for g in 0..sets {
                for beta in 0..l {
                    let lhs = space.tensor(i.apply(f, alpha), i.apply(g, beta));
                    let rhs = i.apply(space.tensor(f, g), space.monoid().tensor(alpha, beta));
                    if !space.leq(lhs, rhs) {
                        return Err(FuzzyError::I3 {
                            f: space.render(f),
                            alpha: level_name(alpha),
                            g: space.render(g),
                            beta: level_name(beta),
                        });
                    }
                }
            }
        }
    }
    // I4: contraction.
    for f in 0..sets {
        for alpha in 0..l {
            if !space.leq(i.apply(f, alpha), f) {
                return Err(FuzzyError::I4 {
                    f: space.render(f),
                    alpha: level_name(alpha),
                });
            }
        }
    }
    // I5: the interior is open at its own level.
    for f in 0..sets {
        for alpha in 0..l {
            let once = i.apply(f, alpha);
            if !space.leq(once, i.apply(once, alpha)) {
                return Err(FuzzyError::I5 {
                    f: space.render(f),
                    alpha: level_name(alpha),
                });
            }
        }
    }
    // I6: the bottom level is inert.
    for f in 0..sets {
        if i.apply(f, lat.bottom()) != f {
            return Err(FuzzyError::I6 {
                f: space.render(f),
            });
        }
    }
    // I7: level continuity, under the chosen reading.
    for f in 0..sets {
        for mask in 1u64..1 << l {
            let members = || (0..l).filter(move |&k| mask >> k & 1 == 1);
            let sup = lat.join_all(members());
            match reading {
                I7Reading::ConstantFamily => {
                    let first = i.apply(f, members().next().expect("non-empty"));
                    if members().all(|k| i.apply(f, k) == first) && i.apply(f, sup) != first {
                        return Err(FuzzyError::I7 {
                            f: space.render(f),
                            levels: members().map(level_name).collect(),
                        });
                    }
                }
                I7Reading::FixedPoint => {
                    if members().all(|k| i.apply(f, k) == f) && i.apply(f, sup) != f {
                        return Err(FuzzyError::I7 {
                            f: space.render(f),
                            levels: members().map(level_name).collect(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// A grading of openness on a fuzzy-set space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyTopology {
    space: FuzzySpace,
    grade: Vec<usize>,
}

impl FuzzyTopology {
    pub fn from_grades(space: FuzzySpace, grade: Vec<usize>) -> Result<Self, FuzzyError> {
        if grade.len() != space.size() {
            return Err(FuzzyError::TableSize {
                expected: space.size(),
                got: grade.len(),
            });
        }
        if let Some(&bad) = grade.iter().find(|&&v| v >= space.levels()) {
            return Err(FuzzyError::ValueOutOfRange {
                value: bad,
                size: space.levels(),
            });
        }
        Ok(FuzzyTopology { space, grade })
    }

    pub fn space(&self) -> &FuzzySpace {
        &self.space
    }

    pub fn grade(&self, f: usize) -> usize {
        self.grade[f]
    }
}

/// Grades every fuzzy set by the join of the levels at which it is open:
/// `grade(f) = join { level | f <= interior(f, level) }`. The operator is
/// re-validated first.
pub fn fuzzy_topology_from_interior(
    i: &FuzzyInterior,
    reading: I7Reading,
) -> Result<FuzzyTopology, FuzzyError> {
    check_fuzzy_interior(i, reading)?;
    Ok(grade_by_open_levels(i))
}

/// The grading construction alone, with no validity check.
pub fn grade_by_open_levels(i: &FuzzyInterior) -> FuzzyTopology {
    let space = i.space().clone();
    let lat = space.monoid().lattice().clone();
    let grade = (0..space.size())
        .map(|f| lat.join_all((0..space.levels()).filter(|&a| space.leq(f, i.apply(f, a)))))
        .collect();
    FuzzyTopology { space, grade }
}

/// Checks the graded-topology laws: the constant-top set has top grade,
/// grades are submultiplicative under tensor, and the grade of a pointwise
/// join dominates the meet of the grades. Families are scanned exhaustively
/// while the space is small, pairwise otherwise (equivalent by folding on a
/// finite carrier).
pub fn check_fuzzy_topology(t: &FuzzyTopology) -> Result<(), FuzzyError> {
    check_fuzzy_topology_capped(t, DEFAULT_FUZZY_CAP)
}

pub fn check_fuzzy_topology_capped(t: &FuzzyTopology, cap: usize) -> Result<(), FuzzyError> {
    let space = t.space();
    if space.size() > cap {
        return Err(FuzzyError::CapExceeded {
            size: space.size(),
            cap,
        });
    }
    let lat = space.monoid().lattice().clone();
    let sets = space.size();
    let top = space.top_code();
    if t.grade(top) != lat.top() {
        return Err(FuzzyError::TopGrade {
            got: lat.name(t.grade(top)).to_string(),
        });
    }
    for f in 0..sets {
        for g in 0..sets {
            let tensored = space.tensor(f, g);
            if !lat.leq(
                space.monoid().tensor(t.grade(f), t.grade(g)),
                t.grade(tensored),
            ) {
                return Err(FuzzyError::TensorGrade {
                    f: space.render(f),
                    g: space.render(g),
                });
            }
        }
    }
    if sets <= 14 {
        for mask in 1u64..1 << sets {
            let members = || (0..sets).filter(move |&k| mask >> k & 1 == 1);
            let joined = members().fold(space.constant(lat.bottom()), |acc, f| space.join(acc, f));
            let floor = lat.meet_all(members().map(|f| t.grade(f)));
            if !lat.leq(floor, t.grade(joined)) {
                return Err(FuzzyError::JoinGrade {
                    family: members().map(|f| space.render(f)).collect(),
                });
            }
        }
    } else {
        for f in 0..sets {
            for g in 0..sets {
                let joined = space.join(f, g);
                if !lat.leq(lat.meet(t.grade(f), t.grade(g)), t.grade(joined)) {
                    return Err(FuzzyError::JoinGrade {
                        family: vec![space.render(f), space.render(g)],
                    });
                }
            }
        }
    }
    Ok(())
}
