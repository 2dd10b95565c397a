//! Finite 1-categories with explicit composition tables.
//!
//! A [`FinCat`] stores its objects, morphisms, identities and the full
//! composition table. All values are immutable after construction and every
//! operation is a pure function, so categories can be shared freely behind
//! [`std::sync::Arc`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub mod build;
pub mod functor;
pub mod gf;

pub use functor::{
    enumerate_functors, enumerate_transforms, functor_category, is_equivalence_functor,
    EquivWitness, EquivalenceOutcome, Functor, FunctorCat, NatTransform,
};

use crate::error::{Error, Result};

/// A morphism record: name plus source and target object indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mor {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// A finite category given by explicit object/morphism/composition tables.
///
/// Morphism equality is identifier equality; no quotienting happens inside a
/// `FinCat`. Construction checks that the tables are syntactically
/// well-formed (no dangling identifiers, identities present, composites only
/// declared on composable pairs); whether the tables satisfy the category
/// laws is a separate question answered by [`FinCat::validate`].
#[derive(Debug, Clone)]
pub struct FinCat {
    label: String,
    objects: Vec<String>,
    morphisms: Vec<Mor>,
    identity: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    homs: HashMap<(usize, usize), Vec<usize>>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identity == other.identity
            && self.compose == other.compose
    }
}

impl Eq for FinCat {}

/// One violated category law, pinpointing the witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawViolation {
    /// compose(id_dst(f), f) or compose(f, id_src(f)) differs from f.
    IdentityLaw { mor: String, left: bool },
    /// compose(h, compose(g, f)) != compose(compose(h, g), f).
    Associativity { h: String, g: String, f: String },
    /// A composable pair with no entry in the table.
    MissingComposite { g: String, f: String },
    /// compose(g, f) has the wrong source or target.
    CompositeEndpoints { g: String, f: String },
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::IdentityLaw { mor, left } => {
                let side = if *left { "left" } else { "right" };
                write!(f, "{side} identity law fails at `{mor}`")
            }
            LawViolation::Associativity { h, g, f: f0 } => {
                write!(f, "associativity fails on (`{h}`, `{g}`, `{f0}`)")
            }
            LawViolation::MissingComposite { g, f: f0 } => {
                write!(f, "no composite for composable pair (`{g}`, `{f0}`)")
            }
            LawViolation::CompositeEndpoints { g, f: f0 } => {
                write!(f, "composite of (`{g}`, `{f0}`) has wrong endpoints")
            }
        }
    }
}

/// Result of checking the category laws; empty iff the tables are a category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CatReport {
    pub violations: Vec<LawViolation>,
}

impl CatReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "ok")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl FinCat {
    /// Builds a category from raw tables.
    ///
    /// `compose` entries are `(g, f, g_after_f)` by name. Fails on dangling
    /// names, duplicates, or composites declared for non-composable pairs;
    /// does *not* check the category laws (see [`FinCat::validate`]).
    pub fn build(
        label: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        identity: &HashMap<String, String>,
        compose: &[(String, String, String)],
    ) -> Result<FinCat> {
        let label = label.into();
        let mut obj_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate object `{o}`")));
            }
        }
        let mut mor_index = HashMap::new();
        let mut mors = Vec::with_capacity(morphisms.len());
        for (i, (name, src, dst)) in morphisms.into_iter().enumerate() {
            let src = *obj_index
                .get(&src)
                .ok_or_else(|| Error::input(format!("morphism `{name}`: unknown source `{src}`")))?;
            let dst = *obj_index
                .get(&dst)
                .ok_or_else(|| Error::input(format!("morphism `{name}`: unknown target `{dst}`")))?;
            if mor_index.insert(name.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate morphism `{name}`")));
            }
            mors.push(Mor { name, src, dst });
        }
        let mut ids = vec![usize::MAX; objects.len()];
        for (obj, mor) in identity {
            let &o = obj_index
                .get(obj)
                .ok_or_else(|| Error::input(format!("identity table: unknown object `{obj}`")))?;
            let &m = mor_index
                .get(mor)
                .ok_or_else(|| Error::input(format!("identity table: unknown morphism `{mor}`")))?;
            if mors[m].src != o || mors[m].dst != o {
                return Err(Error::input(format!(
                    "identity of `{obj}` is `{mor}`, which is not an endomorphism of it"
                )));
            }
            ids[o] = m;
        }
        if let Some(o) = ids.iter().position(|&m| m == usize::MAX) {
            return Err(Error::input(format!("object `{}` has no identity", objects[o])));
        }
        let mut table = HashMap::new();
        for (g, f, gf) in compose {
            let &g = mor_index
                .get(g)
                .ok_or_else(|| Error::input(format!("compose table: unknown morphism `{g}`")))?;
            let &f = mor_index
                .get(f)
                .ok_or_else(|| Error::input(format!("compose table: unknown morphism `{f}`")))?;
            let &gf = mor_index
                .get(gf)
                .ok_or_else(|| Error::input(format!("compose table: unknown morphism `{gf}`")))?;
            if mors[f].dst != mors[g].src {
                return Err(Error::input(format!(
                    "compose table: (`{}`, `{}`) is not a composable pair",
                    mors[g].name, mors[f].name
                )));
            }
            if table.insert((g, f), gf).is_some() {
                return Err(Error::input(format!(
                    "compose table: duplicate entry for (`{}`, `{}`)",
                    mors[g].name, mors[f].name
                )));
            }
        }
        Ok(FinCat::assemble(label, objects, mors, ids, table))
    }

    /// Internal constructor for builders that produce well-formed tables.
    pub(crate) fn assemble(
        label: String,
        objects: Vec<String>,
        morphisms: Vec<Mor>,
        identity: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> FinCat {
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            homs.entry((m.src, m.dst)).or_default().push(i);
        }
        FinCat { label, objects, morphisms, identity, compose, homs }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphisms(&self) -> &[Mor] {
        &self.morphisms
    }

    pub fn morphism(&self, m: usize) -> &Mor {
        &self.morphisms[m]
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].src
    }

    pub fn dst(&self, m: usize) -> usize {
        self.morphisms[m].dst
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identity[self.morphisms[m].src] == m
    }

    /// Morphisms from `x` to `y`, in construction order.
    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        self.homs.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Table lookup for `g∘f`; `None` when the pair is composable but the
    /// table has no entry (a law violation) or not composable at all.
    pub fn compose_opt(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    /// `g∘f` where `f: x→y` and `g: y→z`.
    pub fn compose(&self, g: usize, f: usize) -> Result<usize> {
        if self.morphisms[f].dst != self.morphisms[g].src {
            return Err(Error::type_err(format!(
                "cannot compose `{}` after `{}` in {}",
                self.morphisms[g].name, self.morphisms[f].name, self.label
            )));
        }
        self.compose_opt(g, f).ok_or_else(|| {
            Error::input(format!(
                "composition table of {} has no entry for (`{}`, `{}`)",
                self.label, self.morphisms[g].name, self.morphisms[f].name
            ))
        })
    }

    /// The inverse of `m`, if `m` is an isomorphism.
    pub fn inverse(&self, m: usize) -> Option<usize> {
        let Mor { src, dst, .. } = self.morphisms[m];
        self.hom(dst, src).iter().copied().find(|&w| {
            self.compose_opt(w, m) == Some(self.identity[src])
                && self.compose_opt(m, w) == Some(self.identity[dst])
        })
    }

    pub fn is_iso(&self, m: usize) -> bool {
        self.inverse(m).is_some()
    }

    /// Checks the category laws exhaustively, listing every violation.
    pub fn validate(&self) -> CatReport {
        let mut violations = Vec::new();
        for (m, mor) in self.morphisms.iter().enumerate() {
            let left = self.compose_opt(self.identity[mor.dst], m);
            if left != Some(m) {
                violations.push(LawViolation::IdentityLaw { mor: mor.name.clone(), left: true });
            }
            let right = self.compose_opt(m, self.identity[mor.src]);
            if right != Some(m) {
                violations.push(LawViolation::IdentityLaw { mor: mor.name.clone(), left: false });
            }
        }
        for (g, gm) in self.morphisms.iter().enumerate() {
            for &f in self.hom_into(gm.src) {
                match self.compose_opt(g, f) {
                    None => violations.push(LawViolation::MissingComposite {
                        g: gm.name.clone(),
                        f: self.morphisms[f].name.clone(),
                    }),
                    Some(gf) => {
                        if self.morphisms[gf].src != self.morphisms[f].src
                            || self.morphisms[gf].dst != gm.dst
                        {
                            violations.push(LawViolation::CompositeEndpoints {
                                g: gm.name.clone(),
                                f: self.morphisms[f].name.clone(),
                            });
                        }
                    }
                }
            }
        }
        for (h, hm) in self.morphisms.iter().enumerate() {
            for &g in self.hom_into(hm.src) {
                let Some(hg) = self.compose_opt(h, g) else { continue };
                for &f in self.hom_into(self.morphisms[g].src) {
                    let (Some(gf), Some(hg_f)) = (self.compose_opt(g, f), Some(hg)) else {
                        continue;
                    };
                    let lhs = self.compose_opt(h, gf);
                    let rhs = self.compose_opt(hg_f, f);
                    if lhs.is_some() && rhs.is_some() && lhs != rhs {
                        violations.push(LawViolation::Associativity {
                            h: hm.name.clone(),
                            g: self.morphisms[g].name.clone(),
                            f: self.morphisms[f].name.clone(),
                        });
                    }
                }
            }
        }
        CatReport { violations }
    }

    fn hom_into(&self, y: usize) -> impl Iterator<Item = &usize> {
        (0..self.objects.len()).flat_map(move |x| self.hom(x, y).iter())
    }

    /// Partitions objects into isomorphism classes; returns one representative
    /// per class (the least object index in it), in increasing order.
    pub fn iso_classes(&self) -> Vec<usize> {
        let n = self.objects.len();
        let mut repr: Vec<usize> = (0..n).collect();
        for x in 0..n {
            for y in (x + 1)..n {
                if repr[y] != y {
                    continue;
                }
                if self.isomorphic(x, y) {
                    repr[y] = repr[x];
                }
            }
        }
        let mut out: Vec<usize> = (0..n).filter(|&o| repr[o] == o).collect();
        out.sort_unstable();
        out
    }

    /// Objects `x` and `y` are isomorphic iff some morphism between them is an
    /// isomorphism.
    pub fn isomorphic(&self, x: usize, y: usize) -> bool {
        x == y || self.hom(x, y).iter().any(|&m| self.is_iso(m))
    }

    /// The full subcategory on the given objects, keeping names.
    pub fn full_subcategory(&self, keep: &[usize], label: impl Into<String>) -> FinCat {
        let mut obj_of_old = HashMap::new();
        let mut objects = Vec::new();
        for &o in keep {
            obj_of_old.insert(o, objects.len());
            objects.push(self.objects[o].clone());
        }
        let mut mor_of_old = HashMap::new();
        let mut morphisms = Vec::new();
        for (m, mor) in self.morphisms.iter().enumerate() {
            if let (Some(&s), Some(&d)) = (obj_of_old.get(&mor.src), obj_of_old.get(&mor.dst)) {
                mor_of_old.insert(m, morphisms.len());
                morphisms.push(Mor { name: mor.name.clone(), src: s, dst: d });
            }
        }
        let identity = keep.iter().map(|&o| mor_of_old[&self.identity[o]]).collect();
        let compose = self
            .compose
            .iter()
            .filter_map(|(&(g, f), &gf)| {
                Some(((*mor_of_old.get(&g)?, *mor_of_old.get(&f)?), *mor_of_old.get(&gf)?))
            })
            .collect();
        FinCat::assemble(label.into(), objects, morphisms, identity, compose)
    }
}

pub type ArcCat = Arc<FinCat>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_validates() {
        let cat = build::terminal();
        assert!(cat.validate().is_ok());
        assert_eq!(cat.object_count(), 1);
        assert_eq!(cat.morphism_count(), 1);
    }

    #[test]
    fn bz2_validates_and_mutation_fails() {
        let cat = build::cyclic_group(2);
        assert!(cat.validate().is_ok());

        // s∘s = s instead of e: the identity law at s survives, but
        // associativity and the group structure break.
        let mut compose = cat.compose.clone();
        compose.insert((1, 1), 1);
        let bad = FinCat::assemble(
            "bad-bz2".into(),
            cat.objects.clone(),
            cat.morphisms.clone(),
            cat.identity.clone(),
            compose,
        );
        let report = bad.validate();
        assert!(!report.is_ok());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, LawViolation::Associativity { .. })));
    }

    #[test]
    fn mutated_identity_law_detected() {
        // BZ2 with s∘e = e: breaks the right identity law at s.
        let cat = build::cyclic_group(2);
        let mut compose = cat.compose.clone();
        compose.insert((1, 0), 0);
        let bad = FinCat::assemble(
            "bad-bz2".into(),
            cat.objects.clone(),
            cat.morphisms.clone(),
            cat.identity.clone(),
            compose,
        );
        assert!(bad
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, LawViolation::IdentityLaw { .. })));
    }

    #[test]
    fn dangling_reference_is_input_error() {
        let err = FinCat::build(
            "broken",
            vec!["x".into()],
            vec![("f".into(), "x".into(), "y".into())],
            &HashMap::new(),
            &[],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn iso_classes_discrete_and_group() {
        assert_eq!(build::discrete(&["a", "b", "c"]).iso_classes().len(), 3);
        assert_eq!(build::cyclic_group(2).iso_classes().len(), 1);
    }

    #[test]
    fn iso_classes_idempotent_on_skeleton() {
        let cat = build::finset(2);
        let reps = cat.iso_classes();
        let skel = cat.full_subcategory(&reps, "skel");
        assert_eq!(skel.iso_classes().len(), reps.len());
    }

    #[test]
    fn inverse_detection() {
        let cat = build::cyclic_group(3);
        // every element of a group is invertible
        for m in 0..cat.morphism_count() {
            assert!(cat.is_iso(m));
        }
        let arrow = build::arrow();
        let f = arrow.morphism_index("f").unwrap();
        assert!(!arrow.is_iso(f));
    }
}
