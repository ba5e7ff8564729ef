//! Kuratowski interior operators on powersets and the topologies they induce.
//!
//! On top of the general interior axioms, a Kuratowski operator is idempotent
//! and preserves binary intersections; exactly those two extras make the
//! fixpoint family a topology. Operators and topologies here live over a
//! named ground set, with subsets as bitmasks over the canonical point order.

use thiserror::Error;

use crate::interior::InteriorOp;
use crate::order::{subset_name, CompleteLattice, Lattice};
use crate::subsets::Mask;

/// Ground-set cap for topology enumeration.
pub const DEFAULT_TOPOLOGY_CAP: usize = 4;
/// Ground-set cap for operator enumeration (the contractive table space is
/// `2^(n * 2^(n-1))`).
pub const DEFAULT_OPERATOR_CAP: usize = 3;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KuratowskiError {
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("subset {mask:#b} is out of range for a {size}-point ground set")]
    SubsetOutOfRange { mask: Mask, size: usize },
    #[error("table has {got} entries for a powerset of size {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("duplicate open set `{0}`")]
    DuplicateOpen(String),
    #[error("the empty set is not open")]
    EmptyNotOpen,
    #[error("the ground set is not open")]
    GroundNotOpen,
    #[error("opens are not closed under union: `{first}` with `{second}`")]
    UnionNotClosed { first: String, second: String },
    #[error("opens are not closed under intersection: `{first}` with `{second}`")]
    IntersectionNotClosed { first: String, second: String },
    #[error("the carrier is not a powerset lattice")]
    NotPowersetCarrier,
    #[error("the ground set is not fixed")]
    TopViolation,
    #[error("contraction fails at `{subset}`")]
    Contraction { subset: String },
    #[error("idempotence fails at `{subset}`")]
    NotIdempotent { subset: String },
    #[error("binary intersections not preserved: `{first}` with `{second}`")]
    MeetNotPreserved { first: String, second: String },
    #[error("ground set of size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

fn check_points(ground: &[String]) -> Result<(), KuratowskiError> {
    for (i, p) in ground.iter().enumerate() {
        if ground[..i].contains(p) {
            return Err(KuratowskiError::DuplicatePoint(p.clone()));
        }
    }
    Ok(())
}

fn render(ground: &[String], mask: Mask) -> String {
    let refs: Vec<&str> = ground.iter().map(String::as_str).collect();
    subset_name(&refs, mask)
}

/// A topology on a finite ground set: the family of open subsets, stored as
/// sorted bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    ground: Vec<String>,
    opens: Vec<Mask>,
}

impl Topology {
    /// Validates the topology axioms: empty and ground open, closure under
    /// binary unions and intersections (which on a finite carrier is closure
    /// under arbitrary ones). The first failing pair in mask order is the
    /// witness.
    pub fn new(ground: Vec<String>, mut opens: Vec<Mask>) -> Result<Self, KuratowskiError> {
        check_points(&ground)?;
        let full = (1u64 << ground.len()) - 1;
        for &o in &opens {
            if o & !full != 0 {
                return Err(KuratowskiError::SubsetOutOfRange {
                    mask: o,
                    size: ground.len(),
                });
            }
        }
        opens.sort_unstable();
        for w in opens.windows(2) {
            if w[0] == w[1] {
                return Err(KuratowskiError::DuplicateOpen(render(&ground, w[0])));
            }
        }
        if !opens.contains(&0) {
            return Err(KuratowskiError::EmptyNotOpen);
        }
        if !opens.contains(&full) {
            return Err(KuratowskiError::GroundNotOpen);
        }
        for &a in &opens {
            for &b in &opens {
                if !opens.contains(&(a | b)) {
                    return Err(KuratowskiError::UnionNotClosed {
                        first: render(&ground, a),
                        second: render(&ground, b),
                    });
                }
                if !opens.contains(&(a & b)) {
                    return Err(KuratowskiError::IntersectionNotClosed {
                        first: render(&ground, a),
                        second: render(&ground, b),
                    });
                }
            }
        }
        Ok(Topology { ground, opens })
    }

    pub fn from_names<S: AsRef<str>>(
        ground: Vec<String>,
        opens: &[Vec<S>],
    ) -> Result<Self, KuratowskiError> {
        let mut masks = Vec::with_capacity(opens.len());
        for open in opens {
            let mut mask = 0;
            for p in open {
                let i = ground
                    .iter()
                    .position(|g| g == p.as_ref())
                    .ok_or_else(|| KuratowskiError::UnknownPoint(p.as_ref().to_string()))?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        Self::new(ground, masks)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn render_subset(&self, mask: Mask) -> String {
        render(&self.ground, mask)
    }
}

/// A Kuratowski interior operator over a named ground set: a table on subset
/// masks satisfying top-fixed, contraction, idempotence, and binary-meet
/// preservation (monotonicity follows from the last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiOp {
    ground: Vec<String>,
    table: Vec<Mask>,
}

impl KuratowskiOp {
    pub fn new(ground: Vec<String>, table: Vec<Mask>) -> Result<Self, KuratowskiError> {
        check_points(&ground)?;
        let n = 1usize << ground.len();
        if table.len() != n {
            return Err(KuratowskiError::TableSize {
                expected: n,
                got: table.len(),
            });
        }
        let full = n as Mask - 1;
        for &v in &table {
            if v & !full != 0 {
                return Err(KuratowskiError::SubsetOutOfRange {
                    mask: v,
                    size: ground.len(),
                });
            }
        }
        // Axioms in order: ground fixed, contraction, idempotence,
        // binary-meet preservation.
        if table[full as usize] != full {
            return Err(KuratowskiError::TopViolation);
        }
        for m in 0..n as Mask {
            if table[m as usize] & !m != 0 {
                return Err(KuratowskiError::Contraction {
                    subset: render(&ground, m),
                });
            }
        }
        for m in 0..n as Mask {
            let once = table[m as usize];
            if table[once as usize] != once {
                return Err(KuratowskiError::NotIdempotent {
                    subset: render(&ground, m),
                });
            }
        }
        for a in 0..n as Mask {
            for b in 0..n as Mask {
                if table[(a & b) as usize] != table[a as usize] & table[b as usize] {
                    return Err(KuratowskiError::MeetNotPreserved {
                        first: render(&ground, a),
                        second: render(&ground, b),
                    });
                }
            }
        }
        Ok(KuratowskiOp { ground, table })
    }

    /// Reinterprets a general interior operator as a Kuratowski operator.
    ///
    /// The carrier must be powerset-shaped: atom-generated with the order
    /// isomorphic to inclusion of atom sets. Ground points are the carrier's
    /// atom names, so all further witnesses stay in the caller's name space.
    pub fn from_interior(op: &InteriorOp) -> Result<Self, KuratowskiError> {
        let view = powerset_view(op.carrier()).ok_or(KuratowskiError::NotPowersetCarrier)?;
        let n = op.carrier().len();
        let mut table = vec![0 as Mask; n];
        for e in 0..n {
            table[view.elem_to_mask[e] as usize] = view.elem_to_mask[op.apply(e)];
        }
        Self::new(view.points, table)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn table(&self) -> &[Mask] {
        &self.table
    }

    pub fn apply(&self, m: Mask) -> Mask {
        self.table[m as usize]
    }

    pub fn render_subset(&self, mask: Mask) -> String {
        render(&self.ground, mask)
    }

    /// The same table as a general interior operator on the canonical
    /// powerset lattice of the ground set.
    pub fn as_interior_op(&self) -> InteriorOp {
        let lattice = self.powerset_lattice();
        let table: Vec<usize> = self.table.iter().map(|&m| m as usize).collect();
        InteriorOp::new(&lattice, table).expect("meet preservation implies monotonicity")
    }

    pub fn powerset_lattice(&self) -> Lattice {
        let refs: Vec<&str> = self.ground.iter().map(String::as_str).collect();
        CompleteLattice::powerset(&refs)
    }
}

struct PowersetView {
    points: Vec<String>,
    elem_to_mask: Vec<Mask>,
}

/// Detects whether a lattice is powerset-shaped and returns the atom-mask
/// coordinates if so.
fn powerset_view(l: &Lattice) -> Option<PowersetView> {
    let n = l.len();
    if !n.is_power_of_two() {
        return None;
    }
    let atoms: Vec<usize> = l
        .elements()
        .filter(|&x| {
            x != l.bottom() && l.elements().all(|y| !l.leq(y, x) || y == x || y == l.bottom())
        })
        .collect();
    if atoms.len() >= usize::BITS as usize || 1usize << atoms.len() != n {
        return None;
    }
    let elem_to_mask: Vec<Mask> = l
        .elements()
        .map(|e| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| l.leq(a, e))
                .fold(0, |acc, (k, _)| acc | 1 << k)
        })
        .collect();
    // The atom coordinates must be a bijection respecting the order.
    let mut seen = vec![false; n];
    for &m in &elem_to_mask {
        if seen[m as usize] {
            return None;
        }
        seen[m as usize] = true;
    }
    for a in l.elements() {
        for b in l.elements() {
            if l.leq(a, b) != (elem_to_mask[a] & !elem_to_mask[b] == 0) {
                return None;
            }
        }
    }
    Some(PowersetView {
        points: atoms.iter().map(|&a| l.name(a).to_string()).collect(),
        elem_to_mask,
    })
}

/// The fixpoint family of a Kuratowski operator; always a topology.
pub fn topology_from_interior(op: &KuratowskiOp) -> Topology {
    let opens: Vec<Mask> = (0..op.table.len() as Mask)
        .filter(|&m| op.apply(m) == m)
        .collect();
    Topology::new(op.ground.clone(), opens).expect("fixpoints of a Kuratowski operator")
}

/// The interior operator of a topology: each subset maps to the union of the
/// opens inside it.
pub fn interior_from_topology(t: &Topology) -> KuratowskiOp {
    let n = 1usize << t.ground.len();
    let table: Vec<Mask> = (0..n as Mask)
        .map(|m| {
            t.opens
                .iter()
                .filter(|&&o| o & !m == 0)
                .fold(0, |acc, &o| acc | o)
        })
        .collect();
    KuratowskiOp::new(t.ground.clone(), table).expect("largest-open-inside operator")
}

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Brute-force enumeration of all topologies on an `n`-point ground set, in
/// canonical order (ascending family bitmask).
pub fn enumerate_topologies(n: usize, cap: usize) -> Result<Vec<Topology>, KuratowskiError> {
    if n > cap {
        return Err(KuratowskiError::CapExceeded { size: n, cap });
    }
    let ground = letters(n);
    let subsets = 1usize << n;
    let full = subsets as Mask - 1;
    let mut out = Vec::new();
    for family in 0u64..1 << subsets {
        if family & 1 == 0 || family >> full & 1 == 0 {
            continue;
        }
        let opens: Vec<Mask> = (0..subsets as Mask)
            .filter(|&s| family >> s & 1 == 1)
            .collect();
        let closed = opens.iter().all(|&a| {
            opens
                .iter()
                .all(|&b| family >> (a | b) & 1 == 1 && family >> (a & b) & 1 == 1)
        });
        if closed {
            out.push(Topology {
                ground: ground.clone(),
                opens,
            });
        }
    }
    Ok(out)
}

/// Enumerates all Kuratowski operators on an `n`-point ground set by walking
/// the contractive tables and filtering by the remaining axioms, in table
/// order.
pub fn enumerate_kuratowski_ops(
    n: usize,
    cap: usize,
) -> Result<Vec<KuratowskiOp>, KuratowskiError> {
    if n > cap {
        return Err(KuratowskiError::CapExceeded { size: n, cap });
    }
    let ground = letters(n);
    let subsets = 1usize << n;
    let full = subsets as Mask - 1;
    let mut out = Vec::new();
    let mut table = vec![0 as Mask; subsets];
    table[full as usize] = full;
    fn go(
        ground: &[String],
        full: Mask,
        pos: Mask,
        table: &mut Vec<Mask>,
        out: &mut Vec<KuratowskiOp>,
    ) {
        if pos == full {
            // Ground-set slot is pinned; run the remaining axioms.
            if KuratowskiOp::new(ground.to_vec(), table.clone()).is_ok() {
                out.push(KuratowskiOp {
                    ground: ground.to_vec(),
                    table: table.clone(),
                });
            }
            return;
        }
        // Contraction: only submasks of pos are candidates.
        let mut sub = pos;
        loop {
            table[pos as usize] = sub;
            go(ground, full, pos + 1, table, out);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & pos;
        }
    }
    go(&ground, full, 0, &mut table, &mut out);
    out.sort_by(|a, b| a.table.cmp(&b.table));
    Ok(out)
}
