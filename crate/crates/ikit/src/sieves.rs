//! Finite categories, sieves as right ideals, interior operators on sieve
//! lattices, and Grothendieck-topology extraction from open sieves.
//!
//! A sieve at an object is a set of incoming morphisms closed under
//! precomposition. The sieves at each object form a complete lattice under
//! inclusion (intersections and unions of right ideals are right ideals),
//! materialized through [`crate::order`] so the general interior machinery
//! applies unchanged. The pullback action of a morphism on sieve lattices
//! preserves unions and intersections, so its two adjoints are synthesized
//! generically rather than through bespoke formulas.

use std::sync::Arc;

use thiserror::Error;

use crate::adjunction::{
    synthesize_left_adjoint, synthesize_right_adjoint, AdjointTriple, AdjunctionError,
};
use crate::interior::{check_interior_table, InteriorError, InteriorOp};
use crate::order::{CompleteLattice, FinPoset, Lattice, MonotoneMap};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CategoryError {
    #[error("duplicate object `{0}`")]
    DuplicateObject(String),
    #[error("duplicate morphism `{0}`")]
    DuplicateMorphism(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("object `{object}` has no identity")]
    MissingIdentity { object: String },
    #[error("identity for `{object}` must be an endomorphism of it, got `{morphism}`")]
    BadIdentity { object: String, morphism: String },
    #[error("composite declared for non-composable pair (`{g}`, `{f}`)")]
    NotComposable { g: String, f: String },
    #[error("composite of (`{g}`, `{f}`) declared twice")]
    DuplicateComposite { g: String, f: String },
    #[error("no composite declared for composable pair (`{g}`, `{f}`)")]
    MissingComposite { g: String, f: String },
    #[error("composite of (`{g}`, `{f}`) has the wrong endpoints")]
    CompositionClosure { g: String, f: String },
    #[error("identity law fails at `{morphism}`")]
    IdentityLaw { morphism: String },
    #[error("associativity fails on (`{f}`, `{g}`, `{h}`)")]
    Associativity { f: String, g: String, h: String },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SieveError {
    #[error("morphism `{morphism}` does not end at `{object}`")]
    WrongCodomain { morphism: String, object: String },
    #[error("not a right ideal: `{arrow}` is in the sieve but `{arrow}` . `{precompose}` is not")]
    NotRightIdeal { arrow: String, precompose: String },
    #[error("sieve is at `{found}`, expected `{expected}`")]
    ObjectMismatch { expected: String, found: String },
    #[error("unknown sieve `{0}` in the table")]
    UnknownSieve(String),
    #[error("at object `{object}`: {source}")]
    InvalidInterior {
        object: String,
        source: InteriorError,
    },
    #[error(transparent)]
    Adjunction(#[from] AdjunctionError),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GrothError {
    #[error("maximality fails at `{object}`: the maximal sieve is not covering")]
    Maximality { object: String },
    #[error("stability fails at `{object}`: pulling `{sieve}` back along `{morphism}`")]
    Stability {
        object: String,
        sieve: String,
        morphism: String,
    },
    #[error("transitivity fails at `{object}`: cover `{cover}` admits `{candidate}`")]
    Transitivity {
        object: String,
        cover: String,
        candidate: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MorphismData {
    name: String,
    dom: usize,
    cod: usize,
}

/// A finite category given by explicit identity and composition tables,
/// validated for identity laws, associativity, and closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identities: Vec<usize>,
    comp: Vec<Option<usize>>,
}

impl FinCategory {
    /// Builds and validates a category from name-level tables. `morphisms`
    /// lists `(name, dom, cod)`; `identities` pairs each object with its
    /// identity morphism; `comp` lists `(g, f, g.f)` for every composable
    /// pair.
    pub fn new<S: AsRef<str>>(
        objects: Vec<String>,
        morphisms: &[(S, S, S)],
        identities: &[(S, S)],
        comp: &[(S, S, S)],
    ) -> Result<Self, CategoryError> {
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(CategoryError::DuplicateObject(o.clone()));
            }
        }
        let object_index = |name: &str| {
            objects
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
        };
        let mut mors: Vec<MorphismData> = Vec::with_capacity(morphisms.len());
        for (name, dom, cod) in morphisms {
            let name = name.as_ref().to_string();
            if mors.iter().any(|m| m.name == name) {
                return Err(CategoryError::DuplicateMorphism(name));
            }
            mors.push(MorphismData {
                name,
                dom: object_index(dom.as_ref())?,
                cod: object_index(cod.as_ref())?,
            });
        }
        let morphism_index = |name: &str| {
            mors.iter()
                .position(|m| m.name == name)
                .ok_or_else(|| CategoryError::UnknownMorphism(name.to_string()))
        };
        let mut ids = vec![usize::MAX; objects.len()];
        for (obj, mor) in identities {
            let o = object_index(obj.as_ref())?;
            let m = morphism_index(mor.as_ref())?;
            if mors[m].dom != o || mors[m].cod != o {
                return Err(CategoryError::BadIdentity {
                    object: objects[o].clone(),
                    morphism: mors[m].name.clone(),
                });
            }
            ids[o] = m;
        }
        if let Some(o) = ids.iter().position(|&m| m == usize::MAX) {
            return Err(CategoryError::MissingIdentity {
                object: objects[o].clone(),
            });
        }
        let n = mors.len();
        let mut table: Vec<Option<usize>> = vec![None; n * n];
        for (g, f, gf) in comp {
            let g = morphism_index(g.as_ref())?;
            let f = morphism_index(f.as_ref())?;
            let gf = morphism_index(gf.as_ref())?;
            if mors[f].cod != mors[g].dom {
                return Err(CategoryError::NotComposable {
                    g: mors[g].name.clone(),
                    f: mors[f].name.clone(),
                });
            }
            if table[g * n + f].is_some() {
                return Err(CategoryError::DuplicateComposite {
                    g: mors[g].name.clone(),
                    f: mors[f].name.clone(),
                });
            }
            table[g * n + f] = Some(gf);
        }
        let cat = FinCategory {
            objects,
            morphisms: mors,
            identities: ids,
            comp: table,
        };
        cat.check_laws()?;
        Ok(cat)
    }

    fn check_laws(&self) -> Result<(), CategoryError> {
        let n = self.morphisms.len();
        for g in 0..n {
            for f in 0..n {
                let composable = self.morphisms[f].cod == self.morphisms[g].dom;
                match self.comp[g * n + f] {
                    Some(gf) => {
                        let data = &self.morphisms[gf];
                        if data.dom != self.morphisms[f].dom || data.cod != self.morphisms[g].cod {
                            return Err(CategoryError::CompositionClosure {
                                g: self.morphisms[g].name.clone(),
                                f: self.morphisms[f].name.clone(),
                            });
                        }
                    }
                    None if composable => {
                        return Err(CategoryError::MissingComposite {
                            g: self.morphisms[g].name.clone(),
                            f: self.morphisms[f].name.clone(),
                        });
                    }
                    None => {}
                }
            }
        }
        for f in 0..n {
            let id_cod = self.identities[self.morphisms[f].cod];
            let id_dom = self.identities[self.morphisms[f].dom];
            if self.comp[id_cod * n + f] != Some(f) || self.comp[f * n + id_dom] != Some(f) {
                return Err(CategoryError::IdentityLaw {
                    morphism: self.morphisms[f].name.clone(),
                });
            }
        }
        for h in 0..n {
            for g in 0..n {
                for f in 0..n {
                    let (Some(gf), Some(hg)) = (self.comp[g * n + f], self.comp[h * n + g]) else {
                        continue;
                    };
                    if self.comp[h * n + gf] != self.comp[hg * n + f] {
                        return Err(CategoryError::Associativity {
                            f: self.morphisms[f].name.clone(),
                            g: self.morphisms[g].name.clone(),
                            h: self.morphisms[h].name.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The poset category of a chain of `n` objects `a < b < ...`, with one
    /// morphism `u_xy` for every strict pair.
    pub fn chain_poset(n: usize) -> Arc<FinCategory> {
        let objects: Vec<String> = (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        let mut morphisms: Vec<(String, String, String)> = Vec::new();
        let mut identities = Vec::new();
        for (i, o) in objects.iter().enumerate() {
            morphisms.push((format!("id_{o}"), o.clone(), o.clone()));
            identities.push((o.clone(), format!("id_{o}")));
            for upper in objects.iter().skip(i + 1) {
                morphisms.push((format!("u_{o}{upper}"), o.clone(), upper.clone()));
            }
        }
        let mor_name = |i: usize, j: usize| {
            if i == j {
                format!("id_{}", objects[i])
            } else {
                format!("u_{}{}", objects[i], objects[j])
            }
        };
        let mut comp = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    comp.push((mor_name(j, k), mor_name(i, j), mor_name(i, k)));
                }
            }
        }
        Arc::new(
            FinCategory::new(objects, &morphisms, &identities, &comp)
                .expect("chain poset category"),
        )
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.morphisms[m].name
    }

    pub fn dom(&self, m: usize) -> usize {
        self.morphisms[m].dom
    }

    pub fn cod(&self, m: usize) -> usize {
        self.morphisms[m].cod
    }

    pub fn identity_of(&self, object: usize) -> usize {
        self.identities[object]
    }

    /// `g . f` when `cod(f) = dom(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.morphisms.len() + f]
    }

    pub fn object_index(&self, name: &str) -> Result<usize, CategoryError> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
    }

    pub fn morphism_index(&self, name: &str) -> Result<usize, CategoryError> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .ok_or_else(|| CategoryError::UnknownMorphism(name.to_string()))
    }

    /// Morphisms with codomain `object`, in index order.
    pub fn morphisms_into(&self, object: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].cod == object)
            .collect()
    }
}

/// A sieve at an object: a right ideal of morphisms into it, stored as a
/// sorted list of morphism indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sieve {
    at: usize,
    arrows: Vec<usize>,
}

impl Sieve {
    pub fn new(cat: &FinCategory, at: usize, mut arrows: Vec<usize>) -> Result<Self, SieveError> {
        arrows.sort_unstable();
        arrows.dedup();
        for &f in &arrows {
            if cat.cod(f) != at {
                return Err(SieveError::WrongCodomain {
                    morphism: cat.morphism_name(f).to_string(),
                    object: cat.objects()[at].clone(),
                });
            }
        }
        for &f in &arrows {
            for g in 0..cat.morphism_count() {
                if cat.cod(g) != cat.dom(f) {
                    continue;
                }
                let fg = cat.compose(f, g).expect("composable pair");
                if arrows.binary_search(&fg).is_err() {
                    return Err(SieveError::NotRightIdeal {
                        arrow: cat.morphism_name(f).to_string(),
                        precompose: cat.morphism_name(g).to_string(),
                    });
                }
            }
        }
        Ok(Sieve { at, arrows })
    }

    pub fn at(&self) -> usize {
        self.at
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn contains(&self, m: usize) -> bool {
        self.arrows.binary_search(&m).is_ok()
    }

    pub fn render(&self, cat: &FinCategory) -> String {
        let names: Vec<&str> = self.arrows.iter().map(|&m| cat.morphism_name(m)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Every sieve at an object, in ascending subset-mask order over the
/// incoming morphisms.
pub fn all_sieves(cat: &FinCategory, object: usize) -> Vec<Sieve> {
    let incoming = cat.morphisms_into(object);
    let mut out = Vec::new();
    for mask in 0u64..1 << incoming.len() {
        let arrows: Vec<usize> = incoming
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        if let Ok(s) = Sieve::new(cat, object, arrows) {
            out.push(s);
        }
    }
    out
}

/// All incoming morphisms: the top of the sieve lattice.
pub fn maximal_sieve(cat: &FinCategory, object: usize) -> Sieve {
    Sieve::new(cat, object, cat.morphisms_into(object)).expect("maximal sieve")
}

/// `h^*(S) = { g into dom(h) | h . g in S }`; always a sieve.
pub fn pullback_sieve(cat: &FinCategory, h: usize, s: &Sieve) -> Result<Sieve, SieveError> {
    if s.at() != cat.cod(h) {
        return Err(SieveError::ObjectMismatch {
            expected: cat.objects()[cat.cod(h)].clone(),
            found: cat.objects()[s.at()].clone(),
        });
    }
    let d = cat.dom(h);
    let arrows: Vec<usize> = cat
        .morphisms_into(d)
        .into_iter()
        .filter(|&g| s.contains(cat.compose(h, g).expect("composable pair")))
        .collect();
    Ok(Sieve::new(cat, d, arrows).expect("pullback of a sieve is a sieve"))
}

/// The sieve lattice at an object, materialized as a complete lattice whose
/// element order matches [`all_sieves`].
#[derive(Debug, Clone)]
pub struct SieveLattice {
    pub object: usize,
    pub lattice: Lattice,
    pub sieves: Vec<Sieve>,
}

impl SieveLattice {
    pub fn index_of(&self, s: &Sieve) -> Option<usize> {
        self.sieves.iter().position(|t| t == s)
    }
}

pub fn sieve_lattice(cat: &FinCategory, object: usize) -> SieveLattice {
    let sieves = all_sieves(cat, object);
    let names: Vec<String> = sieves.iter().map(|s| s.render(cat)).collect();
    let poset = FinPoset::from_fn(names, |i, j| {
        sieves[i].arrows().iter().all(|m| sieves[j].contains(*m))
    })
    .expect("inclusion of sieves is a poset");
    let lattice =
        Arc::new(CompleteLattice::from_poset(poset).expect("sieves form a complete lattice"));
    SieveLattice {
        object,
        lattice,
        sieves,
    }
}

/// The pullback `h^*` as a monotone map between materialized sieve lattices.
pub fn pullback_map(
    cat: &FinCategory,
    h: usize,
    at_cod: &SieveLattice,
    at_dom: &SieveLattice,
) -> MonotoneMap {
    let table: Vec<usize> = at_cod
        .sieves
        .iter()
        .map(|s| {
            let pulled = pullback_sieve(cat, h, s).expect("codomain lattice matches");
            at_dom.index_of(&pulled).expect("pullback is a sieve")
        })
        .collect();
    MonotoneMap::new(&at_cod.lattice, &at_dom.lattice, table).expect("pullback is monotone")
}

/// The full action of `h` on sieve lattices: both adjoints of `h^*` are
/// synthesized from its preservation of unions and intersections.
pub fn pullback_action(
    cat: &FinCategory,
    h: usize,
    at_cod: &SieveLattice,
    at_dom: &SieveLattice,
) -> Result<AdjointTriple, SieveError> {
    let inverse = pullback_map(cat, h, at_cod, at_dom);
    let existential = synthesize_left_adjoint(&inverse)?;
    let universal = synthesize_right_adjoint(&inverse)?;
    Ok(AdjointTriple::new(existential, inverse, universal)?)
}

/// An interior operator on the sieve lattice of every object.
#[derive(Debug, Clone)]
pub struct SieveInteriorFamily {
    cat: Arc<FinCategory>,
    lattices: Vec<SieveLattice>,
    ops: Vec<InteriorOp>,
}

impl SieveInteriorFamily {
    /// Validates one table per object, indexed over [`all_sieves`] order.
    /// Each table must satisfy contraction, monotonicity, and fix the
    /// maximal sieve.
    pub fn from_tables(
        cat: &Arc<FinCategory>,
        tables: Vec<Vec<usize>>,
    ) -> Result<Self, SieveError> {
        let lattices: Vec<SieveLattice> = (0..cat.objects().len())
            .map(|c| sieve_lattice(cat, c))
            .collect();
        let mut ops = Vec::with_capacity(tables.len());
        for (c, table) in tables.into_iter().enumerate() {
            check_interior_table(&lattices[c].lattice, &table).map_err(|source| {
                SieveError::InvalidInterior {
                    object: cat.objects()[c].clone(),
                    source,
                }
            })?;
            ops.push(InteriorOp::new(&lattices[c].lattice, table).expect("checked above"));
        }
        Ok(SieveInteriorFamily {
            cat: Arc::clone(cat),
            lattices,
            ops,
        })
    }

    /// The identity operator at every object.
    pub fn discrete(cat: &Arc<FinCategory>) -> Self {
        let tables = (0..cat.objects().len())
            .map(|c| (0..all_sieves(cat, c).len()).collect())
            .collect();
        Self::from_tables(cat, tables).expect("discrete family")
    }

    /// Fixes only the maximal sieve, collapsing everything else to empty.
    pub fn trivial(cat: &Arc<FinCategory>) -> Self {
        let tables = (0..cat.objects().len())
            .map(|c| {
                let lat = sieve_lattice(cat, c);
                lat.lattice
                    .elements()
                    .map(|s| {
                        if s == lat.lattice.top() {
                            s
                        } else {
                            lat.lattice.bottom()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_tables(cat, tables).expect("trivial family")
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    pub fn lattice_at(&self, object: usize) -> &SieveLattice {
        &self.lattices[object]
    }

    pub fn op_at(&self, object: usize) -> &InteriorOp {
        &self.ops[object]
    }
}

/// A Grothendieck-topology candidate: a chosen set of covering sieves per
/// object. Construction validates the sieves; the axioms are checked by
/// [`check_grothendieck`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrothTopology {
    cat: Arc<FinCategory>,
    covering: Vec<Vec<Sieve>>,
}

impl GrothTopology {
    pub fn new(cat: &Arc<FinCategory>, mut covering: Vec<Vec<Sieve>>) -> Self {
        for per_object in &mut covering {
            per_object.sort();
            per_object.dedup();
        }
        GrothTopology {
            cat: Arc::clone(cat),
            covering,
        }
    }

    /// The topology whose only cover at each object is the maximal sieve.
    pub fn maximal_only(cat: &Arc<FinCategory>) -> Self {
        let covering = (0..cat.objects().len())
            .map(|c| vec![maximal_sieve(cat, c)])
            .collect();
        Self::new(cat, covering)
    }

    /// Every sieve covers.
    pub fn all_sieves(cat: &Arc<FinCategory>) -> Self {
        let covering = (0..cat.objects().len()).map(|c| all_sieves(cat, c)).collect();
        Self::new(cat, covering)
    }

    /// The dense covers: sieves hit by every incoming morphism after some
    /// precomposition.
    pub fn dense(cat: &Arc<FinCategory>) -> Self {
        let covering = (0..cat.objects().len())
            .map(|c| {
                all_sieves(cat, c)
                    .into_iter()
                    .filter(|s| {
                        cat.morphisms_into(c).into_iter().all(|h| {
                            (0..cat.morphism_count()).any(|g| {
                                cat.cod(g) == cat.dom(h)
                                    && s.contains(cat.compose(h, g).expect("composable"))
                            })
                        })
                    })
                    .collect()
            })
            .collect();
        Self::new(cat, covering)
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    pub fn covering(&self, object: usize) -> &[Sieve] {
        &self.covering[object]
    }

    pub fn contains(&self, s: &Sieve) -> bool {
        self.covering[s.at()].iter().any(|t| t == s)
    }
}

/// Fixpoint sieves of a family, packaged as a topology candidate.
pub fn open_sieve_topology(family: &SieveInteriorFamily) -> GrothTopology {
    let covering = (0..family.cat.objects().len())
        .map(|c| {
            let lat = family.lattice_at(c);
            family
                .op_at(c)
                .open_elements()
                .into_iter()
                .map(|e| lat.sieves[e].clone())
                .collect()
        })
        .collect();
    GrothTopology::new(&family.cat, covering)
}

/// Checks maximality, stability, and transitivity, in that order, and
/// reports the first failure with a witness.
pub fn check_grothendieck(j: &GrothTopology) -> Result<(), GrothError> {
    let cat = j.category();
    for c in 0..cat.objects().len() {
        if !j.contains(&maximal_sieve(cat, c)) {
            return Err(GrothError::Maximality {
                object: cat.objects()[c].clone(),
            });
        }
    }
    for c in 0..cat.objects().len() {
        for s in j.covering(c) {
            for h in 0..cat.morphism_count() {
                if cat.cod(h) != c {
                    continue;
                }
                let pulled = pullback_sieve(cat, h, s).expect("codomains line up");
                if !j.contains(&pulled) {
                    return Err(GrothError::Stability {
                        object: cat.objects()[c].clone(),
                        sieve: s.render(cat),
                        morphism: cat.morphism_name(h).to_string(),
                    });
                }
            }
        }
    }
    for c in 0..cat.objects().len() {
        for s in j.covering(c) {
            for r in all_sieves(cat, c) {
                if j.contains(&r) {
                    continue;
                }
                let all_pullbacks_cover = s.arrows().iter().all(|&h| {
                    let pulled = pullback_sieve(cat, h, &r).expect("codomains line up");
                    j.contains(&pulled)
                });
                if all_pullbacks_cover {
                    return Err(GrothError::Transitivity {
                        object: cat.objects()[c].clone(),
                        cover: s.render(cat),
                        candidate: r.render(cat),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Whether every covering sieve contains at least one morphism from the
/// designated class; reports the offenders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCoverReport {
    pub satisfied: bool,
    pub failures: Vec<(String, String)>,
}

pub fn check_class_cover(j: &GrothTopology, class: &[usize]) -> ClassCoverReport {
    let cat = j.category();
    let mut failures = Vec::new();
    for c in 0..cat.objects().len() {
        for s in j.covering(c) {
            if !s.arrows().iter().any(|m| class.contains(m)) {
                failures.push((cat.objects()[c].clone(), s.render(cat)));
            }
        }
    }
    ClassCoverReport {
        satisfied: failures.is_empty(),
        failures,
    }
}

/// The walking arrow: objects `a`, `b` and a single morphism `u: a -> b`.
pub fn walking_arrow() -> Arc<FinCategory> {
    Arc::new(
        FinCategory::new(
            vec!["a".into(), "b".into()],
            &[("id_a", "a", "a"), ("id_b", "b", "b"), ("u", "a", "b")],
            &[("a", "id_a"), ("b", "id_b")],
            &[
                ("id_a", "id_a", "id_a"),
                ("id_b", "id_b", "id_b"),
                ("u", "id_a", "u"),
                ("id_b", "u", "u"),
            ],
        )
        .expect("walking arrow category"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::is_adjoint_pair;
    use crate::interior::{initial_interior, is_continuous};

    #[test]
    fn walking_arrow_validates() {
        let cat = walking_arrow();
        assert_eq!(cat.objects(), &["a".to_string(), "b".to_string()]);
        assert_eq!(cat.morphism_count(), 3);
    }

    #[test]
    fn chain_poset_3_has_composite() {
        // Objects a <= b <= c with the composite u_bc . u_ab = u_ac; all
        // composable triples checked by the constructor.
        let cat = FinCategory::chain_poset(3);
        let u_ab = cat.morphism_index("u_ab").unwrap();
        let u_bc = cat.morphism_index("u_bc").unwrap();
        let u_ac = cat.morphism_index("u_ac").unwrap();
        assert_eq!(cat.compose(u_bc, u_ab), Some(u_ac));
    }

    #[test]
    fn bad_identity_composite_is_reported() {
        let err = FinCategory::new(
            vec!["a".into(), "b".into()],
            &[("id_a", "a", "a"), ("id_b", "b", "b"), ("u", "a", "b")],
            &[("a", "id_a"), ("b", "id_b")],
            &[
                ("id_a", "id_a", "id_a"),
                ("id_b", "id_b", "id_b"),
                ("u", "id_a", "id_b"),
                ("id_b", "u", "u"),
            ],
        )
        .unwrap_err();
        // u . id_a = id_b has the wrong endpoints before laws are reached.
        assert_eq!(
            err,
            CategoryError::CompositionClosure {
                g: "u".into(),
                f: "id_a".into(),
            }
        );
        // With a well-typed but wrong composite, the identity law itself
        // reports.
        let err = FinCategory::new(
            vec!["a".into()],
            &[("id_a", "a", "a"), ("e", "a", "a")],
            &[("a", "id_a")],
            &[
                ("id_a", "id_a", "id_a"),
                ("e", "id_a", "id_a"),
                ("id_a", "e", "e"),
                ("e", "e", "e"),
            ],
        )
        .unwrap_err();
        assert_eq!(err, CategoryError::IdentityLaw { morphism: "e".into() });
    }

    /// Independent oracle: sieves as unions of principal right ideals.
    fn sieves_by_principal_unions(cat: &FinCategory, object: usize) -> Vec<Vec<usize>> {
        let incoming = cat.morphisms_into(object);
        let principal: Vec<Vec<usize>> = incoming
            .iter()
            .map(|&f| {
                let mut arrows: Vec<usize> = (0..cat.morphism_count())
                    .filter_map(|g| {
                        (cat.cod(g) == cat.dom(f)).then(|| cat.compose(f, g).unwrap())
                    })
                    .collect();
                arrows.push(f);
                arrows.sort_unstable();
                arrows.dedup();
                arrows
            })
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << principal.len() {
            let mut union: Vec<usize> = Vec::new();
            for (k, p) in principal.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    union.extend(p.iter().copied());
                }
            }
            union.sort_unstable();
            union.dedup();
            if !out.contains(&union) {
                out.push(union);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn sieves_at_walking_arrow_objects() {
        let cat = walking_arrow();
        let at_b = all_sieves(&cat, 1);
        let names: Vec<String> = at_b.iter().map(|s| s.render(&cat)).collect();
        assert_eq!(names, vec!["{}", "{u}", "{id_b,u}"]);
        let at_a = all_sieves(&cat, 0);
        assert_eq!(at_a.len(), 2);
        // One-object category: empty and identity sieves only.
        let one = FinCategory::new(
            vec!["x".into()],
            &[("id_x", "x", "x")],
            &[("x", "id_x")],
            &[("id_x", "id_x", "id_x")],
        )
        .unwrap();
        assert_eq!(all_sieves(&one, 0).len(), 2);
    }

    #[test]
    fn sieve_enumeration_matches_principal_union_oracle() {
        for cat in [walking_arrow(), FinCategory::chain_poset(3)] {
            for c in 0..cat.objects().len() {
                let fast: Vec<Vec<usize>> = all_sieves(&cat, c)
                    .iter()
                    .map(|s| s.arrows().to_vec())
                    .collect();
                let mut fast_sorted = fast.clone();
                fast_sorted.sort();
                assert_eq!(fast_sorted, sieves_by_principal_unions(&cat, c));
            }
        }
    }

    #[test]
    fn non_ideal_subsets_are_rejected() {
        let cat = walking_arrow();
        let id_b = cat.morphism_index("id_b").unwrap();
        let err = Sieve::new(&cat, 1, vec![id_b]).unwrap_err();
        assert_eq!(
            err,
            SieveError::NotRightIdeal {
                arrow: "id_b".into(),
                precompose: "u".into(),
            }
        );
    }

    #[test]
    fn maximal_sieve_is_top() {
        let cat = walking_arrow();
        let t_b = maximal_sieve(&cat, 1);
        assert_eq!(t_b.render(&cat), "{id_b,u}");
        let t_a = maximal_sieve(&cat, 0);
        assert_eq!(t_a.render(&cat), "{id_a}");
        let lat = sieve_lattice(&cat, 1);
        assert_eq!(lat.index_of(&t_b), Some(lat.lattice.top()));
    }

    #[test]
    fn pullback_examples_on_the_walking_arrow() {
        let cat = walking_arrow();
        let u = cat.morphism_index("u").unwrap();
        let t_b = maximal_sieve(&cat, 1);
        let pulled = pullback_sieve(&cat, u, &t_b).unwrap();
        assert_eq!(pulled.render(&cat), "{id_a}");
        let just_u = Sieve::new(&cat, 1, vec![u]).unwrap();
        let pulled = pullback_sieve(&cat, u, &just_u).unwrap();
        assert_eq!(pulled.render(&cat), "{id_a}");
        let id_a = cat.morphism_index("id_a").unwrap();
        let at_a = Sieve::new(&cat, 0, vec![id_a]).unwrap();
        assert_eq!(
            pullback_sieve(&cat, u, &at_a).unwrap_err(),
            SieveError::ObjectMismatch {
                expected: "b".into(),
                found: "a".into(),
            }
        );
        // Pulling back along an identity is the identity.
        let id_b = cat.morphism_index("id_b").unwrap();
        for s in all_sieves(&cat, 1) {
            assert_eq!(pullback_sieve(&cat, id_b, &s).unwrap(), s);
        }
    }

    #[test]
    fn pullback_functoriality_on_the_chain() {
        let cat = FinCategory::chain_poset(3);
        for h in 0..cat.morphism_count() {
            for k in 0..cat.morphism_count() {
                if cat.cod(k) != cat.dom(h) {
                    continue;
                }
                let hk = cat.compose(h, k).unwrap();
                for s in all_sieves(&cat, cat.cod(h)) {
                    let direct = pullback_sieve(&cat, hk, &s).unwrap();
                    let stepwise =
                        pullback_sieve(&cat, k, &pullback_sieve(&cat, h, &s).unwrap()).unwrap();
                    assert_eq!(direct, stepwise);
                }
            }
        }
    }

    #[test]
    fn sieve_lattice_meets_are_intersections() {
        let cat = FinCategory::chain_poset(3);
        for c in 0..3 {
            let lat = sieve_lattice(&cat, c);
            for i in lat.lattice.elements() {
                for j in lat.lattice.elements() {
                    let meet = &lat.sieves[lat.lattice.meet(i, j)];
                    let expect: Vec<usize> = lat.sieves[i]
                        .arrows()
                        .iter()
                        .copied()
                        .filter(|m| lat.sieves[j].contains(*m))
                        .collect();
                    assert_eq!(meet.arrows(), &expect[..]);
                }
            }
        }
    }

    #[test]
    fn pullback_action_is_an_adjoint_triple() {
        let cat = walking_arrow();
        let u = cat.morphism_index("u").unwrap();
        let at_b = sieve_lattice(&cat, 1);
        let at_a = sieve_lattice(&cat, 0);
        let action = pullback_action(&cat, u, &at_b, &at_a).unwrap();
        assert!(is_adjoint_pair(action.existential(), action.inverse()).is_ok());
        assert!(is_adjoint_pair(action.inverse(), action.universal()).is_ok());
        // The initial operator along u of any operator at b is continuous.
        for i_b in crate::interior::enumerate_interior_ops(&at_b.lattice).unwrap() {
            let init = initial_interior(&action, &i_b).unwrap();
            assert!(is_continuous(&action, &init, &i_b).is_ok());
        }
    }

    #[test]
    fn family_tables_are_validated_per_object() {
        let cat = walking_arrow();
        // At b the sieve order is {}, {u}, {id_b,u}; sending the maximal
        // sieve to {u} breaks the upper-bound axiom.
        let err =
            SieveInteriorFamily::from_tables(&cat, vec![vec![0, 1], vec![0, 1, 1]]).unwrap_err();
        assert_eq!(
            err,
            SieveError::InvalidInterior {
                object: "b".into(),
                source: InteriorError::TopNotFixed,
            }
        );
    }

    #[test]
    fn open_sieves_of_discrete_and_trivial_families() {
        let cat = walking_arrow();
        let discrete = open_sieve_topology(&SieveInteriorFamily::discrete(&cat));
        assert_eq!(discrete.covering(1).len(), 3);
        assert_eq!(discrete.covering(0).len(), 2);
        let trivial = open_sieve_topology(&SieveInteriorFamily::trivial(&cat));
        let names: Vec<String> = trivial.covering(1).iter().map(|s| s.render(&cat)).collect();
        assert_eq!(names, vec!["{}", "{id_b,u}"]);
    }

    #[test]
    fn fixpoint_family_with_chosen_opens() {
        // Fix exactly {u} and the maximal sieve at b, the maximal sieve at a.
        let cat = walking_arrow();
        let fam = SieveInteriorFamily::from_tables(&cat, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        let j = open_sieve_topology(&fam);
        assert_eq!(j.covering(0).len(), 2);
        assert_eq!(j.covering(1).len(), 3);
        // Collapse {} differently: i({u}) = {}, fixing only {} and t_b.
        let fam = SieveInteriorFamily::from_tables(&cat, vec![vec![0, 1], vec![0, 0, 2]]).unwrap();
        let j = open_sieve_topology(&fam);
        let names: Vec<String> = j.covering(1).iter().map(|s| s.render(&cat)).collect();
        assert_eq!(names, vec!["{}", "{id_b,u}"]);
    }

    #[test]
    fn grothendieck_axioms_on_known_topologies() {
        for cat in [walking_arrow(), FinCategory::chain_poset(3)] {
            assert!(check_grothendieck(&GrothTopology::maximal_only(&cat)).is_ok());
            assert!(check_grothendieck(&GrothTopology::all_sieves(&cat)).is_ok());
            assert!(check_grothendieck(&GrothTopology::dense(&cat)).is_ok());
        }
    }

    #[test]
    fn dense_topology_on_the_walking_arrow() {
        let cat = walking_arrow();
        let dense = GrothTopology::dense(&cat);
        let names: Vec<String> = dense.covering(1).iter().map(|s| s.render(&cat)).collect();
        assert_eq!(names, vec!["{id_b,u}", "{u}"]);
        assert_eq!(dense.covering(0).len(), 1);
    }

    #[test]
    fn missing_maximal_sieve_fails_maximality() {
        let cat = walking_arrow();
        let u = cat.morphism_index("u").unwrap();
        let j = GrothTopology::new(
            &cat,
            vec![
                vec![maximal_sieve(&cat, 0)],
                vec![Sieve::new(&cat, 1, vec![u]).unwrap()],
            ],
        );
        assert_eq!(
            check_grothendieck(&j).unwrap_err(),
            GrothError::Maximality { object: "b".into() }
        );
    }

    #[test]
    fn empty_cover_forces_everything_by_transitivity() {
        // { {}, t } at each object: the empty sieve covers, its (vacuous)
        // pullback premise makes every sieve a candidate, so transitivity
        // fails at b where {u} is missing.
        let cat = walking_arrow();
        let trivial_family = SieveInteriorFamily::trivial(&cat);
        let j = open_sieve_topology(&trivial_family);
        assert_eq!(
            check_grothendieck(&j).unwrap_err(),
            GrothError::Transitivity {
                object: "b".into(),
                cover: "{}".into(),
                candidate: "{u}".into(),
            }
        );
    }

    #[test]
    fn stability_failure_has_a_witness() {
        // J(b) = {{}, t_b}, J(a) = {t_a}: pulling the empty sieve back along
        // u gives the empty sieve at a, which is not covering there.
        let cat = walking_arrow();
        let empty_b = Sieve::new(&cat, 1, vec![]).unwrap();
        let j = GrothTopology::new(
            &cat,
            vec![
                vec![maximal_sieve(&cat, 0)],
                vec![maximal_sieve(&cat, 1), empty_b],
            ],
        );
        assert_eq!(
            check_grothendieck(&j).unwrap_err(),
            GrothError::Stability {
                object: "b".into(),
                sieve: "{}".into(),
                morphism: "u".into(),
            }
        );
    }

    #[test]
    fn class_cover_report_flags_empty_covers() {
        let cat = walking_arrow();
        let u = cat.morphism_index("u").unwrap();
        let j = GrothTopology::dense(&cat);
        let report = check_class_cover(&j, &[u]);
        // The cover {t_a} at `a` contains no morphism from the class {u}.
        assert!(!report.satisfied);
        assert_eq!(report.failures, vec![("a".to_string(), "{id_a}".to_string())]);
        let id_a = cat.morphism_index("id_a").unwrap();
        let report = check_class_cover(&j, &[u, id_a]);
        assert!(report.satisfied);
    }
}
