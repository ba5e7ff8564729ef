//! Interior operators on arbitrary complete lattices.
//!
//! An interior operator is a self-map that is contractive, monotone, and
//! fixes the top element. Idempotence is deliberately *not* assumed here;
//! only the Kuratowski specialization adds it. On a fixed carrier the valid
//! operators form a complete lattice under the pointwise order, with the
//! identity (discrete) operator as maximum and the collapse-to-bottom
//! (trivial) operator as minimum.
//!
//! Morphisms act on carriers through an [`AdjointTriple`]; continuity of an
//! action `f` with respect to operators `i_X`, `i_Y` is the lax exchange law
//! `inverse(i_Y(m)) <= i_X(inverse(m))`, and every action pulls an operator
//! on its target back to the coarsest continuous operator on its source,
//! `inverse . i_Y . universal`.

use thiserror::Error;

use crate::adjunction::AdjointTriple;
use crate::order::{self, same_lattice, Lattice, MapError};
use std::sync::Arc;

/// Carrier-size cap for interior-operator enumeration.
pub const DEFAULT_ENUM_CAP: usize = 12;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InteriorError {
    #[error("contraction fails at `{element}`")]
    Contraction { element: String },
    #[error("monotonicity fails on `{lower}` <= `{upper}`")]
    Monotonicity { lower: String, upper: String },
    #[error("the top element is not fixed")]
    TopNotFixed,
    #[error("operators live on different carriers")]
    CarrierMismatch,
    #[error("the operator family is empty")]
    EmptyFamily,
    #[error("continuity fails at `{element}`")]
    NotContinuous { element: String },
    #[error("continuity precondition fails at `{element}`")]
    PreconditionViolated { element: String },
    #[error("inverse image of the open element `{element}` is not open")]
    OpenNotStable { element: String },
    #[error("initiality biconditional fails: inner action continuous = {inner}, composite continuous = {composite}")]
    InitialityFailed { inner: bool, composite: bool },
    #[error("carrier of size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Checks the three interior axioms on a raw table: contraction,
/// monotonicity, top fixed. Returns the first violated axiom with a witness.
pub fn check_interior_table(carrier: &Lattice, table: &[usize]) -> Result<(), InteriorError> {
    order::check_table(carrier, carrier, table)?;
    for m in carrier.elements() {
        if !carrier.leq(table[m], m) {
            return Err(InteriorError::Contraction {
                element: carrier.name(m).to_string(),
            });
        }
    }
    for m in carrier.elements() {
        for k in carrier.elements() {
            if carrier.leq(m, k) && !carrier.leq(table[m], table[k]) {
                return Err(InteriorError::Monotonicity {
                    lower: carrier.name(m).to_string(),
                    upper: carrier.name(k).to_string(),
                });
            }
        }
    }
    if table[carrier.top()] != carrier.top() {
        return Err(InteriorError::TopNotFixed);
    }
    Ok(())
}

/// A validated interior operator on a complete lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorOp {
    carrier: Lattice,
    table: Vec<usize>,
}

impl InteriorOp {
    pub fn new(carrier: &Lattice, table: Vec<usize>) -> Result<Self, InteriorError> {
        check_interior_table(carrier, &table)?;
        Ok(InteriorOp {
            carrier: Arc::clone(carrier),
            table,
        })
    }

    /// The identity table; the largest interior operator.
    pub fn discrete(carrier: &Lattice) -> Self {
        InteriorOp {
            carrier: Arc::clone(carrier),
            table: carrier.elements().collect(),
        }
    }

    /// Sends every non-top element to bottom; the least interior operator.
    pub fn trivial(carrier: &Lattice) -> Self {
        let table = carrier
            .elements()
            .map(|m| if m == carrier.top() { m } else { carrier.bottom() })
            .collect();
        InteriorOp {
            carrier: Arc::clone(carrier),
            table,
        }
    }

    pub fn carrier(&self) -> &Lattice {
        &self.carrier
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, m: usize) -> usize {
        self.table[m]
    }

    /// Elements fixed by the operator; always contains bottom and top.
    pub fn open_elements(&self) -> Vec<usize> {
        self.carrier
            .elements()
            .filter(|&m| self.table[m] == m)
            .collect()
    }
}

fn shared_carrier(ops: &[InteriorOp]) -> Result<&Lattice, InteriorError> {
    let first = ops.first().ok_or(InteriorError::EmptyFamily)?;
    for op in &ops[1..] {
        if !same_lattice(op.carrier(), first.carrier()) {
            return Err(InteriorError::CarrierMismatch);
        }
    }
    Ok(first.carrier())
}

/// Pointwise join of a non-empty family; valid whenever the inputs are.
pub fn join_ops(ops: &[InteriorOp]) -> Result<InteriorOp, InteriorError> {
    let carrier = shared_carrier(ops)?;
    let table = carrier
        .elements()
        .map(|m| carrier.join_all(ops.iter().map(|op| op.apply(m))))
        .collect();
    InteriorOp::new(carrier, table)
}

/// Pointwise meet of a non-empty family.
pub fn meet_ops(ops: &[InteriorOp]) -> Result<InteriorOp, InteriorError> {
    let carrier = shared_carrier(ops)?;
    let table = carrier
        .elements()
        .map(|m| carrier.meet_all(ops.iter().map(|op| op.apply(m))))
        .collect();
    InteriorOp::new(carrier, table)
}

/// Pointwise order on operators over one carrier.
pub fn le_ops(a: &InteriorOp, b: &InteriorOp) -> Result<bool, InteriorError> {
    if !same_lattice(a.carrier(), b.carrier()) {
        return Err(InteriorError::CarrierMismatch);
    }
    Ok(a
        .carrier()
        .elements()
        .all(|m| a.carrier().leq(a.apply(m), b.apply(m))))
}

fn check_action_carriers(
    action: &AdjointTriple,
    i_src: &InteriorOp,
    i_tgt: &InteriorOp,
) -> Result<(), InteriorError> {
    if !same_lattice(i_src.carrier(), action.source())
        || !same_lattice(i_tgt.carrier(), action.target())
    {
        return Err(InteriorError::CarrierMismatch);
    }
    Ok(())
}

/// Continuity of an action with respect to operators on its source and
/// target: `inverse(i_tgt(m)) <= i_src(inverse(m))` for every target
/// element `m`. Returns the first witness on failure.
pub fn is_continuous(
    action: &AdjointTriple,
    i_src: &InteriorOp,
    i_tgt: &InteriorOp,
) -> Result<(), InteriorError> {
    check_action_carriers(action, i_src, i_tgt)?;
    let src = i_src.carrier();
    let inv = action.inverse();
    for m in i_tgt.carrier().elements() {
        if !src.leq(inv.apply(i_tgt.apply(m)), i_src.apply(inv.apply(m))) {
            return Err(InteriorError::NotContinuous {
                element: i_tgt.carrier().name(m).to_string(),
            });
        }
    }
    Ok(())
}

/// The coarsest interior operator on the action's source making the action
/// continuous: `inverse . i_tgt . universal`.
pub fn initial_interior(
    action: &AdjointTriple,
    i_tgt: &InteriorOp,
) -> Result<InteriorOp, InteriorError> {
    if !same_lattice(i_tgt.carrier(), action.target()) {
        return Err(InteriorError::CarrierMismatch);
    }
    let table = action
        .source()
        .elements()
        .map(|m| {
            action
                .inverse()
                .apply(i_tgt.apply(action.universal().apply(m)))
        })
        .collect();
    InteriorOp::new(action.source(), table)
}

/// With the middle operator taken initial along `outer`, an inner action is
/// continuous exactly when its composite with `outer` is; verifies that
/// biconditional.
pub fn check_initiality(
    inner: &AdjointTriple,
    outer: &AdjointTriple,
    i_src: &InteriorOp,
    i_tgt: &InteriorOp,
) -> Result<(), InteriorError> {
    let i_mid = initial_interior(outer, i_tgt)?;
    if !same_lattice(inner.target(), outer.source()) {
        return Err(InteriorError::CarrierMismatch);
    }
    let composite = inner
        .then(outer)
        .map_err(|_| InteriorError::CarrierMismatch)?;
    let lhs = is_continuous(inner, i_src, &i_mid).is_ok();
    let rhs = is_continuous(&composite, i_src, i_tgt).is_ok();
    if lhs != rhs {
        return Err(InteriorError::InitialityFailed {
            inner: lhs,
            composite: rhs,
        });
    }
    Ok(())
}

/// For a continuous action, inverse images of open elements are open.
/// `PreconditionViolated` reports a failed continuity premise.
pub fn check_open_stability(
    action: &AdjointTriple,
    i_src: &InteriorOp,
    i_tgt: &InteriorOp,
) -> Result<(), InteriorError> {
    match is_continuous(action, i_src, i_tgt) {
        Ok(()) => {}
        Err(InteriorError::NotContinuous { element }) => {
            return Err(InteriorError::PreconditionViolated { element });
        }
        Err(other) => return Err(other),
    }
    let open_src = i_src.open_elements();
    for n in i_tgt.open_elements() {
        let pulled = action.inverse().apply(n);
        if !open_src.contains(&pulled) {
            return Err(InteriorError::OpenNotStable {
                element: i_tgt.carrier().name(n).to_string(),
            });
        }
    }
    Ok(())
}

/// Enumerates every interior operator on a carrier, in table order.
///
/// Backtracks along a linear extension: a candidate value must lie below the
/// element (contraction) and above the images of the already-assigned
/// elements below it (monotonicity); the top element pins to itself.
pub fn enumerate_interior_ops(carrier: &Lattice) -> Result<Vec<InteriorOp>, InteriorError> {
    enumerate_interior_ops_capped(carrier, DEFAULT_ENUM_CAP)
}

pub fn enumerate_interior_ops_capped(
    carrier: &Lattice,
    cap: usize,
) -> Result<Vec<InteriorOp>, InteriorError> {
    let n = carrier.len();
    if n > cap {
        return Err(InteriorError::CapExceeded { size: n, cap });
    }
    let mut order: Vec<usize> = carrier.elements().collect();
    order.sort_by_key(|&e| (carrier.elements().filter(|&d| carrier.leq(d, e)).count(), e));
    let mut out = Vec::new();
    let mut table = vec![0usize; n];
    fn go(
        carrier: &Lattice,
        order: &[usize],
        pos: usize,
        table: &mut Vec<usize>,
        out: &mut Vec<InteriorOp>,
    ) {
        if pos == order.len() {
            out.push(InteriorOp {
                carrier: Arc::clone(carrier),
                table: table.clone(),
            });
            return;
        }
        let e = order[pos];
        let floor = carrier.join_all(
            order[..pos]
                .iter()
                .filter(|&&d| carrier.leq(d, e))
                .map(|&d| table[d]),
        );
        if e == carrier.top() {
            // Only the top itself satisfies the upper-bound axiom.
            if carrier.leq(floor, e) {
                table[e] = e;
                go(carrier, order, pos + 1, table, out);
            }
            return;
        }
        for v in carrier.elements() {
            if carrier.leq(floor, v) && carrier.leq(v, e) {
                table[e] = v;
                go(carrier, order, pos + 1, table, out);
            }
        }
    }
    go(carrier, &order, 0, &mut table, &mut out);
    out.sort_by(|a, b| a.table.cmp(&b.table));
    Ok(out)
}
