use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::finset::{FinFn, FinSetObj, Inversion};
use crate::report::Witness;

/// A category whose morphism equality is decidable.
///
/// Objects and morphisms are plain values; the category value carries
/// whatever context is needed to compose them (a monoid table, an index
/// category, ...). `distinguish` must error on non-parallel arguments so
/// that a checker can never mistake a malformed composite for a pass.
pub trait Category: Clone {
    type Obj: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Mor: Clone + fmt::Debug;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;

    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    /// `None` if `f = g`, otherwise a witness of the difference.
    fn distinguish(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Witness>>;

    fn invert(&self, f: &Self::Mor) -> Result<Inversion<Self::Mor>>;

    /// All morphisms `a → b`, when there are at most `limit` of them and the
    /// category knows how to enumerate them.
    fn hom(&self, _a: &Self::Obj, _b: &Self::Obj, _limit: usize) -> Option<Vec<Self::Mor>> {
        None
    }

    /// A short name for a morphism in reports.
    fn describe_mor(&self, f: &Self::Mor) -> String {
        format!("{} → {}", self.dom(f), self.cod(f))
    }
}

pub type Obj<C> = <C as Category>::Obj;
pub type Mor<C> = <C as Category>::Mor;

impl<C: Category> Category for &C {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        (**self).dom(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        (**self).cod(f)
    }
    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        (**self).identity(a)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        (**self).compose(g, f)
    }
    fn distinguish(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Witness>> {
        (**self).distinguish(f, g)
    }
    fn invert(&self, f: &Self::Mor) -> Result<Inversion<Self::Mor>> {
        (**self).invert(f)
    }
    fn hom(&self, a: &Self::Obj, b: &Self::Obj, limit: usize) -> Option<Vec<Self::Mor>> {
        (**self).hom(a, b, limit)
    }
    fn describe_mor(&self, f: &Self::Mor) -> String {
        (**self).describe_mor(f)
    }
}

/// Composes a path given in diagram order: `chain(c, [f, g, h]) = h∘g∘f`.
pub fn chain<C: Category>(cat: &C, steps: &[C::Mor]) -> Result<C::Mor> {
    let (first, rest) = steps
        .split_first()
        .ok_or_else(|| Error::structure("empty composite"))?;
    let mut acc = first.clone();
    for s in rest {
        acc = cat.compose(s, &acc)?;
    }
    Ok(acc)
}

/// Checks that `f : dom → cod`, naming `what` on failure.
pub fn expect_boundary<C: Category>(
    cat: &C,
    f: &C::Mor,
    dom: &C::Obj,
    cod: &C::Obj,
    what: &str,
) -> Result<()> {
    let (d, c) = (cat.dom(f), cat.cod(f));
    if &d != dom || &c != cod {
        return Err(Error::structure(format!(
            "{what} has boundary {d} → {c}, expected {dom} → {cod}"
        )));
    }
    Ok(())
}

/// Compares two parallel morphisms, insisting on equal boundaries first.
pub fn compare<C: Category>(cat: &C, f: &C::Mor, g: &C::Mor) -> Result<Option<Witness>> {
    let (fd, fc, gd, gc) = (cat.dom(f), cat.cod(f), cat.dom(g), cat.cod(g));
    if fd != gd || fc != gc {
        return Err(Error::structure(format!(
            "composites are not parallel: {fd} → {fc} vs {gd} → {gc}"
        )));
    }
    cat.distinguish(f, g)
}

/// The formal opposite. Morphisms are the same values with their
/// boundaries read backwards.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Op<C>(pub C);

impl<C: Category> Category for Op<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        self.0.cod(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        self.0.dom(f)
    }
    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        self.0.identity(a)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        self.0.compose(f, g)
    }
    fn distinguish(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Witness>> {
        self.0.distinguish(f, g)
    }
    fn invert(&self, f: &Self::Mor) -> Result<Inversion<Self::Mor>> {
        self.0.invert(f)
    }
    fn hom(&self, a: &Self::Obj, b: &Self::Obj, limit: usize) -> Option<Vec<Self::Mor>> {
        self.0.hom(b, a, limit)
    }
    fn describe_mor(&self, f: &Self::Mor) -> String {
        format!("op({})", self.0.describe_mor(f))
    }
}

/// Finite sets and all functions between them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FinSet;

impl Category for FinSet {
    type Obj = FinSetObj;
    type Mor = FinFn;

    fn dom(&self, f: &FinFn) -> FinSetObj {
        f.dom().clone()
    }
    fn cod(&self, f: &FinFn) -> FinSetObj {
        f.cod().clone()
    }
    fn identity(&self, a: &FinSetObj) -> FinFn {
        FinFn::identity(a)
    }
    fn compose(&self, g: &FinFn, f: &FinFn) -> Result<FinFn> {
        crate::finset::compose(g, f)
    }
    fn distinguish(&self, f: &FinFn, g: &FinFn) -> Result<Option<Witness>> {
        f.first_difference(g)
    }
    fn invert(&self, f: &FinFn) -> Result<Inversion<FinFn>> {
        Ok(f.invert())
    }
    fn hom(&self, a: &FinSetObj, b: &FinSetObj, limit: usize) -> Option<Vec<FinFn>> {
        match FinFn::count(a, b) {
            Some(n) if n <= limit => Some(FinFn::all(a, b).collect()),
            _ => None,
        }
    }
}

/// Short description of an object tuple for report entries.
pub fn names<T: fmt::Display>(objs: &[&T]) -> Vec<String> {
    objs.iter().map(|o| format!("{o}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn op_reverses_boundaries_and_composition() {
        let x = FinSetObj::range(2);
        let y = FinSetObj::letters(1);
        let f = FinFn::from_fn(x.clone(), y.clone(), |_| crate::Label::atom("a")).unwrap();
        let op = Op(FinSet);
        assert_eq!(op.dom(&f), y);
        assert_eq!(op.cod(&f), x);
        let g = FinFn::identity(&y);
        // in the opposite, f ∘ g means "g then f" read backwards
        assert_eq!(op.compose(&f, &g).unwrap(), f);
        assert!(op.compose(&g, &f).is_err());
    }

    #[test]
    fn opposite_of_opposite_replays_a_palette() {
        let a = FinSetObj::range(2);
        let palette: Vec<FinFn> = FinFn::all(&a, &a).collect();
        let twice = Op(Op(FinSet));
        for f in &palette {
            for g in &palette {
                assert_eq!(twice.compose(g, f).unwrap(), FinSet.compose(g, f).unwrap());
                assert_eq!(twice.distinguish(f, g).unwrap(), FinSet.distinguish(f, g).unwrap());
            }
            assert_eq!(twice.dom(f), FinSet.dom(f));
            assert_eq!(twice.invert(f).unwrap(), FinSet.invert(f).unwrap());
        }
        assert_eq!(twice.hom(&a, &a, 16).map(|v| v.len()), Some(4));
    }

    #[test]
    fn chain_is_diagram_order() {
        let x = FinSetObj::range(2);
        let s = FinFn::from_indices(x.clone(), x.clone(), vec![1, 0]).unwrap();
        let c = FinFn::from_indices(x.clone(), x.clone(), vec![0, 0]).unwrap();
        // swap then constant-0 is constant 0; constant-0 then swap is constant 1
        assert_eq!(chain(&FinSet, &[s.clone(), c.clone()]).unwrap(), c);
        assert_eq!(chain(&FinSet, &[c, s]).unwrap().table(), &[1, 1]);
    }

    #[test]
    fn compare_rejects_non_parallel() {
        let f = FinFn::identity(&FinSetObj::range(1));
        let g = FinFn::identity(&FinSetObj::range(2));
        assert!(compare(&FinSet, &f, &g).is_err());
    }
}
