//! Subset images along finite functions: the direct image, inverse image,
//! and universal image, packaged as an adjoint triple
//! `direct -| inverse -| universal` between powerset lattices.
//!
//! Subsets are bitmasks over the canonical element order, which makes them
//! literally the element indices of [`CompleteLattice::powerset`]; the three
//! image operators therefore double as lattice map tables.

use thiserror::Error;

use crate::adjunction::AdjointTriple;
use crate::order::{subset_name, CompleteLattice, Lattice, MonotoneMap};

/// A subset as a bitmask over a ground set's element order.
pub type Mask = u64;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("function table has {got} entries for a domain of size {expected}")]
    MapSize { expected: usize, got: usize },
    #[error("function value {value} is out of range for a codomain of size {size}")]
    ValueOutOfRange { value: usize, size: usize },
    #[error("mask {mask:#b} is not a subset of a {size}-element set")]
    NotASubset { mask: Mask, size: usize },
}

/// A total function between finite named sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunction {
    dom: Vec<String>,
    cod: Vec<String>,
    map: Vec<usize>,
}

fn check_distinct(names: &[String]) -> Result<(), SetError> {
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(SetError::DuplicateElement(name.clone()));
        }
    }
    Ok(())
}

impl FinFunction {
    pub fn from_indices(
        dom: Vec<String>,
        cod: Vec<String>,
        map: Vec<usize>,
    ) -> Result<Self, SetError> {
        check_distinct(&dom)?;
        check_distinct(&cod)?;
        if map.len() != dom.len() {
            return Err(SetError::MapSize {
                expected: dom.len(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= cod.len()) {
            return Err(SetError::ValueOutOfRange {
                value: bad,
                size: cod.len(),
            });
        }
        Ok(FinFunction { dom, cod, map })
    }

    pub fn from_pairs<S: AsRef<str>>(
        dom: Vec<String>,
        cod: Vec<String>,
        pairs: &[(S, S)],
    ) -> Result<Self, SetError> {
        let mut map = vec![usize::MAX; dom.len()];
        for (x, y) in pairs {
            let i = dom
                .iter()
                .position(|d| d == x.as_ref())
                .ok_or_else(|| SetError::UnknownElement(x.as_ref().to_string()))?;
            let j = cod
                .iter()
                .position(|c| c == y.as_ref())
                .ok_or_else(|| SetError::UnknownElement(y.as_ref().to_string()))?;
            map[i] = j;
        }
        if map.contains(&usize::MAX) {
            return Err(SetError::MapSize {
                expected: dom.len(),
                got: map.iter().filter(|&&v| v != usize::MAX).count(),
            });
        }
        Self::from_indices(dom, cod, map)
    }

    pub fn dom(&self) -> &[String] {
        &self.dom
    }

    pub fn cod(&self) -> &[String] {
        &self.cod
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, v)| !self.map[..i].contains(v))
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.cod.len()).all(|y| self.map.contains(&y))
    }

    fn check_dom_subset(&self, m: Mask) -> Result<(), SetError> {
        if m >> self.dom.len() != 0 {
            return Err(SetError::NotASubset {
                mask: m,
                size: self.dom.len(),
            });
        }
        Ok(())
    }

    fn check_cod_subset(&self, n: Mask) -> Result<(), SetError> {
        if n >> self.cod.len() != 0 {
            return Err(SetError::NotASubset {
                mask: n,
                size: self.cod.len(),
            });
        }
        Ok(())
    }

    /// `{ f(x) | x in M }`.
    pub fn direct_image(&self, m: Mask) -> Result<Mask, SetError> {
        self.check_dom_subset(m)?;
        let mut out = 0;
        for (x, &y) in self.map.iter().enumerate() {
            if m >> x & 1 == 1 {
                out |= 1 << y;
            }
        }
        Ok(out)
    }

    /// `{ x | f(x) in N }`.
    pub fn inverse_image(&self, n: Mask) -> Result<Mask, SetError> {
        self.check_cod_subset(n)?;
        let mut out = 0;
        for (x, &y) in self.map.iter().enumerate() {
            if n >> y & 1 == 1 {
                out |= 1 << x;
            }
        }
        Ok(out)
    }

    /// `{ y | the whole fibre over y lies in M }` — the right adjoint of the
    /// inverse image.
    pub fn universal_image(&self, m: Mask) -> Result<Mask, SetError> {
        self.check_dom_subset(m)?;
        let mut out = 0;
        for y in 0..self.cod.len() {
            let fibre = self.inverse_image(1 << y)?;
            if fibre & m == fibre {
                out |= 1 << y;
            }
        }
        Ok(out)
    }

    /// Powerset lattice of the domain, with subset index = bitmask.
    pub fn dom_lattice(&self) -> Lattice {
        let refs: Vec<&str> = self.dom.iter().map(String::as_str).collect();
        CompleteLattice::powerset(&refs)
    }

    pub fn cod_lattice(&self) -> Lattice {
        let refs: Vec<&str> = self.cod.iter().map(String::as_str).collect();
        CompleteLattice::powerset(&refs)
    }

    /// The adjoint triple `direct -| inverse -| universal` between the two
    /// powerset lattices; both adjunctions are verified on construction.
    pub fn triple(&self) -> AdjointTriple {
        let pd = self.dom_lattice();
        let pc = self.cod_lattice();
        let direct: Vec<usize> = pd
            .elements()
            .map(|m| self.direct_image(m as Mask).unwrap() as usize)
            .collect();
        let inverse: Vec<usize> = pc
            .elements()
            .map(|n| self.inverse_image(n as Mask).unwrap() as usize)
            .collect();
        let universal: Vec<usize> = pd
            .elements()
            .map(|m| self.universal_image(m as Mask).unwrap() as usize)
            .collect();
        let existential = MonotoneMap::new(&pd, &pc, direct).expect("direct image is monotone");
        let inverse = MonotoneMap::new(&pc, &pd, inverse).expect("inverse image is monotone");
        let universal = MonotoneMap::new(&pd, &pc, universal).expect("universal image is monotone");
        AdjointTriple::new(existential, inverse, universal)
            .expect("image operators form an adjoint triple")
    }

    pub fn render_dom_subset(&self, m: Mask) -> String {
        let refs: Vec<&str> = self.dom.iter().map(String::as_str).collect();
        subset_name(&refs, m)
    }

    pub fn render_cod_subset(&self, n: Mask) -> String {
        let refs: Vec<&str> = self.cod.iter().map(String::as_str).collect();
        subset_name(&refs, n)
    }

    /// Resolves a list of domain element names to a mask.
    pub fn dom_subset<S: AsRef<str>>(&self, names: &[S]) -> Result<Mask, SetError> {
        resolve_subset(&self.dom, names)
    }

    pub fn cod_subset<S: AsRef<str>>(&self, names: &[S]) -> Result<Mask, SetError> {
        resolve_subset(&self.cod, names)
    }

    /// Checks the image laws that hold under injectivity or surjectivity and
    /// reports which hypotheses apply.
    pub fn check_mono_epi_laws(&self) -> MonoEpiReport {
        let injective = self.is_injective();
        let surjective = self.is_surjective();
        let mut retraction_failure = None;
        for m in 0..1u64 << self.dom.len() {
            let back = self.inverse_image(self.direct_image(m).unwrap()).unwrap();
            if back != m {
                retraction_failure = Some(self.render_dom_subset(m));
                break;
            }
        }
        let mut section_failure = None;
        for n in 0..1u64 << self.cod.len() {
            let forth = self.direct_image(self.inverse_image(n).unwrap()).unwrap();
            if forth != n {
                section_failure = Some(self.render_cod_subset(n));
                break;
            }
        }
        MonoEpiReport {
            injective,
            surjective,
            retraction_failure,
            section_failure,
            preimage_of_empty_is_empty: self.inverse_image(0).unwrap() == 0,
            image_of_empty_is_empty: self.direct_image(0).unwrap() == 0,
        }
    }
}

fn resolve_subset<S: AsRef<str>>(ground: &[String], names: &[S]) -> Result<Mask, SetError> {
    let mut mask = 0;
    for name in names {
        let i = ground
            .iter()
            .position(|g| g == name.as_ref())
            .ok_or_else(|| SetError::UnknownElement(name.as_ref().to_string()))?;
        mask |= 1 << i;
    }
    Ok(mask)
}

/// Outcome of [`FinFunction::check_mono_epi_laws`]: which hypotheses the
/// function satisfies, and witnesses for the two identity laws where they
/// fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoEpiReport {
    pub injective: bool,
    pub surjective: bool,
    /// First `M` with `inverse_image(direct_image(M)) != M`, if any.
    pub retraction_failure: Option<String>,
    /// First `N` with `direct_image(inverse_image(N)) != N`, if any.
    pub section_failure: Option<String>,
    pub preimage_of_empty_is_empty: bool,
    pub image_of_empty_is_empty: bool,
}

impl MonoEpiReport {
    /// True when every conclusion whose hypothesis applies actually holds.
    pub fn conclusions_hold(&self) -> bool {
        (!self.injective
            || (self.retraction_failure.is_none() && self.preimage_of_empty_is_empty))
            && (!self.surjective
                || (self.section_failure.is_none() && self.image_of_empty_is_empty))
    }
}

/// All functions between two named ground sets, in lexicographic table order.
pub fn enumerate_functions(dom: &[&str], cod: &[&str]) -> Vec<FinFunction> {
    let n = dom.len();
    let k = cod.len();
    let count = k.checked_pow(n as u32).unwrap_or(0);
    let mut out = Vec::with_capacity(count);
    if k == 0 && n > 0 {
        return out;
    }
    let dom: Vec<String> = dom.iter().map(|s| s.to_string()).collect();
    let cod: Vec<String> = cod.iter().map(|s| s.to_string()).collect();
    let mut table = vec![0usize; n];
    for idx in 0..count.max(1) {
        let mut rest = idx;
        for slot in table.iter_mut() {
            *slot = rest % k.max(1);
            rest /= k.max(1);
        }
        out.push(FinFunction::from_indices(dom.clone(), cod.clone(), table.clone()).unwrap());
    }
    out
}
