//! Finite sets and total functions with extensional equality.
//!
//! A [`FinSetObj`] is a sorted list of distinct [`Label`]s; a [`FinFn`] is a
//! table of codomain indices, one per domain element. Two functions with the
//! same boundaries are equal exactly when their tables agree, which is the
//! morphism equality every checker in the crate relies on.

mod colimit;
mod limits;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::report::Witness;

pub use colimit::{finite_colimit, graph_colimit, Colimit, Diagram, UnionFind};
pub use limits::{coproduct, exponential, product, product_map, Coproduct, Exponential, Product};

/// A finite set of labels, kept in canonical (sorted) order.
#[derive(Clone, Eq)]
pub struct FinSetObj {
    elems: Arc<[Label]>,
}

// Shared carriers are compared by pointer first; deep label trees make the
// structural comparison expensive.
impl PartialEq for FinSetObj {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.elems, &other.elems) || self.elems == other.elems
    }
}

impl core::hash::Hash for FinSetObj {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl Ord for FinSetObj {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        if Arc::ptr_eq(&self.elems, &other.elems) {
            return core::cmp::Ordering::Equal;
        }
        self.elems.cmp(&other.elems)
    }
}

impl PartialOrd for FinSetObj {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FinSetObj {
    /// Builds a set from labels in any order; duplicates are rejected.
    pub fn new(labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        let mut v: Vec<Label> = labels.into_iter().collect();
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(format!("{}", w[0])));
        }
        Ok(FinSetObj { elems: v.into() })
    }

    /// Caller guarantees the labels are strictly increasing.
    pub(crate) fn from_sorted(v: Vec<Label>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        FinSetObj { elems: v.into() }
    }

    pub fn empty() -> Self {
        FinSetObj::from_sorted(Vec::new())
    }

    /// The one-point set `{*}`.
    pub fn point() -> Self {
        FinSetObj::from_sorted(alloc::vec![Label::Point])
    }

    pub fn singleton(l: Label) -> Self {
        FinSetObj::from_sorted(alloc::vec![l])
    }

    /// `{0, 1, …, n−1}` as integer labels.
    pub fn range(n: usize) -> Self {
        FinSetObj::from_sorted((0..n as i64).map(Label::Int).collect())
    }

    /// `{a, b, c, …}`: the first `n` letters as atoms (`a`..`z`, then `a26`…).
    pub fn letters(n: usize) -> Self {
        let v: Vec<Label> = (0..n)
            .map(|i| {
                if i < 26 {
                    Label::Atom(String::from((b'a' + i as u8) as char))
                } else {
                    Label::Atom(format!("a{i}"))
                }
            })
            .collect();
        FinSetObj::new(v).expect("distinct letters")
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[Label] {
        &self.elems
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Label> {
        self.elems.iter()
    }

    pub fn get(&self, i: usize) -> &Label {
        &self.elems[i]
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.elems.binary_search(l).ok()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.index_of(l).is_some()
    }

    pub(crate) fn require(&self, l: &Label) -> Result<usize> {
        self.index_of(l).ok_or_else(|| Error::NotAnElement {
            label: format!("{l}"),
            set: format!("{self}"),
        })
    }
}

impl fmt::Display for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 6;
        f.write_str("{")?;
        for (i, l) in self.elems.iter().take(SHOWN).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        if self.elems.len() > SHOWN {
            write!(f, ",…|{}|", self.elems.len())?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of an inversion attempt. A non-invertible map is an ordinary
/// answer carrying a witness, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inversion<M> {
    Iso(M),
    NotIso(Witness),
}

impl<M> Inversion<M> {
    pub fn is_iso(&self) -> bool {
        matches!(self, Inversion::Iso(_))
    }

    pub fn iso(self) -> Option<M> {
        match self {
            Inversion::Iso(m) => Some(m),
            Inversion::NotIso(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Inversion::Iso(_) => None,
            Inversion::NotIso(w) => Some(w),
        }
    }

    pub fn map<N>(self, f: impl FnOnce(M) -> N) -> Inversion<N> {
        match self {
            Inversion::Iso(m) => Inversion::Iso(f(m)),
            Inversion::NotIso(w) => Inversion::NotIso(w),
        }
    }
}

/// A total function between finite sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinFn {
    dom: FinSetObj,
    cod: FinSetObj,
    table: Arc<[usize]>,
}

impl FinFn {
    /// `table[i]` is the index in `cod` of the image of the `i`-th element.
    pub fn from_indices(dom: FinSetObj, cod: FinSetObj, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.len() {
            return Err(Error::structure(format!(
                "table has {} entries for a domain of {} elements",
                table.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&j| j >= cod.len()) {
            return Err(Error::structure(format!("image index {bad} outside {cod}")));
        }
        Ok(FinFn {
            dom,
            cod,
            table: table.into(),
        })
    }

    /// Tabulates `f`; every image must be an element of `cod`.
    pub fn from_fn(dom: FinSetObj, cod: FinSetObj, mut f: impl FnMut(&Label) -> Label) -> Result<Self> {
        Self::try_from_fn(dom, cod, |l| Ok(f(l)))
    }

    pub fn try_from_fn(
        dom: FinSetObj,
        cod: FinSetObj,
        mut f: impl FnMut(&Label) -> Result<Label>,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(dom.len());
        for l in dom.iter() {
            let image = f(l)?;
            table.push(cod.require(&image)?);
        }
        Ok(FinFn {
            dom,
            cod,
            table: table.into(),
        })
    }

    /// Builds a function from `(argument, image)` pairs covering `dom`.
    pub fn from_pairs(
        dom: FinSetObj,
        cod: FinSetObj,
        pairs: impl IntoIterator<Item = (Label, Label)>,
    ) -> Result<Self> {
        let mut table: Vec<Option<usize>> = alloc::vec![None; dom.len()];
        for (x, y) in pairs {
            let i = dom.require(&x)?;
            let j = cod.require(&y)?;
            match table[i] {
                Some(k) if k != j => {
                    return Err(Error::structure(format!("{x} given two images")));
                }
                _ => table[i] = Some(j),
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, j)| j.ok_or_else(|| Error::structure(format!("no image for {}", dom.get(i)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FinFn {
            dom,
            cod,
            table: table.into(),
        })
    }

    pub fn identity(x: &FinSetObj) -> Self {
        FinFn {
            dom: x.clone(),
            cod: x.clone(),
            table: (0..x.len()).collect::<Vec<_>>().into(),
        }
    }

    pub fn dom(&self) -> &FinSetObj {
        &self.dom
    }

    pub fn cod(&self) -> &FinSetObj {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Image of the element at index `i` of the domain, as an index of the codomain.
    pub fn image_index(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply(&self, x: &Label) -> Option<&Label> {
        self.dom.index_of(x).map(|i| self.cod.get(self.table[i]))
    }

    /// Like [`apply`](Self::apply) but reports a missing argument as an error.
    pub fn eval(&self, x: &Label) -> Result<&Label> {
        let i = self.dom.require(x)?;
        Ok(self.cod.get(self.table[i]))
    }

    /// Pairs `(x, f(x))` in domain order.
    pub fn graph(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.dom
            .iter()
            .zip(self.table.iter())
            .map(move |(x, &j)| (x, self.cod.get(j)))
    }

    /// The function as a label of the exponential `cod^dom`.
    pub fn to_table_label(&self) -> Label {
        Label::Table(self.table.iter().map(|&j| self.cod.get(j).clone()).collect())
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FinFn) -> Result<FinFn> {
        compose(g, self)
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_injective(&self) -> bool {
        self.collision().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        self.missed().is_none()
    }

    fn missed(&self) -> Option<usize> {
        let mut hit = alloc::vec![false; self.cod.len()];
        for &j in self.table.iter() {
            hit[j] = true;
        }
        hit.iter().position(|h| !h)
    }

    /// Smallest `(i, j)` with `i < j` (ordered by `j`) and equal images.
    fn collision(&self) -> Option<(usize, usize)> {
        let mut first_preimage: Vec<Option<usize>> = alloc::vec![None; self.cod.len()];
        for (j, &y) in self.table.iter().enumerate() {
            match first_preimage[y] {
                Some(i) => return Some((i, j)),
                None => first_preimage[y] = Some(j),
            }
        }
        None
    }

    /// The inverse of a bijection, or a witness of why there is none.
    /// Surjectivity is examined first, so a constant map into a larger set
    /// reports its first missed element.
    pub fn invert(&self) -> Inversion<FinFn> {
        if let Some(j) = self.missed() {
            return Inversion::NotIso(Witness::NotSurjective {
                component: None,
                missed: self.cod.get(j).clone(),
            });
        }
        if let Some((i, j)) = self.collision() {
            return Inversion::NotIso(Witness::NotInjective {
                component: None,
                first: self.dom.get(i).clone(),
                second: self.dom.get(j).clone(),
                image: self.cod.get(self.table[i]).clone(),
            });
        }
        let mut inv = alloc::vec![0; self.cod.len()];
        for (i, &j) in self.table.iter().enumerate() {
            inv[j] = i;
        }
        Inversion::Iso(FinFn {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            table: inv.into(),
        })
    }

    /// First domain element (canonical order) where `self` and `other`
    /// differ. Errors if the boundaries differ: such maps are not parallel.
    pub fn first_difference(&self, other: &FinFn) -> Result<Option<Witness>> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::structure(format!(
                "comparing non-parallel maps {} → {} and {} → {}",
                self.dom, self.cod, other.dom, other.cod
            )));
        }
        Ok(self
            .table
            .iter()
            .zip(other.table.iter())
            .position(|(a, b)| a != b)
            .map(|i| Witness::Differ {
                component: None,
                element: self.dom.get(i).clone(),
                left: self.cod.get(self.table[i]).clone(),
                right: self.cod.get(other.table[i]).clone(),
            }))
    }

    /// `|cod|^|dom|`, or `None` on overflow.
    pub fn count(dom: &FinSetObj, cod: &FinSetObj) -> Option<usize> {
        let mut n: usize = 1;
        for _ in 0..dom.len() {
            n = n.checked_mul(cod.len())?;
        }
        Some(n)
    }

    /// Every function `dom → cod`, in the canonical order of their table
    /// labels (first domain element most significant).
    pub fn all(dom: &FinSetObj, cod: &FinSetObj) -> FnSpace {
        FnSpace {
            dom: dom.clone(),
            cod: cod.clone(),
            next: if dom.is_empty() || !cod.is_empty() {
                Some(alloc::vec![0; dom.len()])
            } else {
                None
            },
        }
    }
}

impl fmt::Debug for FinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {} ", self.dom, self.cod)?;
        f.debug_map().entries(self.graph()).finish()
    }
}

/// `g ∘ f`, defined when `cod f = dom g`.
pub fn compose(g: &FinFn, f: &FinFn) -> Result<FinFn> {
    if f.cod != g.dom {
        return Err(Error::Composition {
            first_cod: format!("{}", f.cod),
            second_dom: format!("{}", g.dom),
        });
    }
    Ok(FinFn {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        table: f.table.iter().map(|&j| g.table[j]).collect::<Vec<_>>().into(),
    })
}

/// Iterator over a function space; see [`FinFn::all`].
pub struct FnSpace {
    dom: FinSetObj,
    cod: FinSetObj,
    next: Option<Vec<usize>>,
}

impl Iterator for FnSpace {
    type Item = FinFn;

    fn next(&mut self) -> Option<FinFn> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        let mut advanced = false;
        while pos > 0 {
            pos -= 1;
            if succ[pos] + 1 < self.cod.len() {
                succ[pos] += 1;
                advanced = true;
                break;
            }
            succ[pos] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(FinFn {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            table: current.into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn swap2() -> FinFn {
        let x = FinSetObj::range(2);
        FinFn::from_indices(x.clone(), x, vec![1, 0]).unwrap()
    }

    #[test]
    fn identity_composes_to_identity() {
        let x = FinSetObj::letters(3);
        let id = FinFn::identity(&x);
        assert_eq!(compose(&id, &id).unwrap(), id);
    }

    #[test]
    fn swap_is_an_involution() {
        let s = swap2();
        assert!(compose(&s, &s).unwrap().is_identity());
    }

    #[test]
    fn constants_compose_to_a_constant() {
        let two = FinSetObj::range(2);
        let a = FinSetObj::singleton(Label::atom("a"));
        let z = FinSetObj::singleton(Label::atom("z"));
        let const_a = FinFn::from_fn(two.clone(), a.clone(), |_| Label::atom("a")).unwrap();
        let const_z = FinFn::from_fn(a, z.clone(), |_| Label::atom("z")).unwrap();
        let h = compose(&const_z, &const_a).unwrap();
        assert_eq!(h.dom(), &two);
        assert_eq!(h.cod(), &z);
        assert!(h.graph().all(|(_, y)| *y == Label::atom("z")));
    }

    #[test]
    fn mismatched_boundaries_name_both_sets() {
        let f = FinFn::identity(&FinSetObj::range(2));
        let g = FinFn::identity(&FinSetObj::range(3));
        match compose(&g, &f) {
            Err(Error::Composition { first_cod, second_dom }) => {
                assert_eq!(first_cod, "{0,1}");
                assert_eq!(second_dom, "{0,1,2}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invert_identity_and_swap() {
        let id = FinFn::identity(&FinSetObj::letters(2));
        assert_eq!(id.invert(), Inversion::Iso(id.clone()));
        assert_eq!(swap2().invert(), Inversion::Iso(swap2()));
    }

    #[test]
    fn invert_constant_reports_missed_element() {
        let ab = FinSetObj::letters(2);
        let c = FinFn::from_fn(FinSetObj::range(2), ab, |_| Label::atom("a")).unwrap();
        assert_eq!(
            c.invert(),
            Inversion::NotIso(Witness::NotSurjective {
                component: None,
                missed: Label::atom("b")
            })
        );
    }

    #[test]
    fn invert_reports_collision_when_surjective() {
        let c = FinFn::from_fn(FinSetObj::range(2), FinSetObj::point(), |_| Label::Point).unwrap();
        assert!(matches!(c.invert(), Inversion::NotIso(Witness::NotInjective { .. })));
    }

    #[test]
    fn function_space_is_canonically_ordered_and_complete() {
        let x = FinSetObj::range(2);
        let y = FinSetObj::letters(3);
        let labels: Vec<Label> = FinFn::all(&x, &y).map(|f| f.to_table_label()).collect();
        assert_eq!(labels.len(), 9);
        assert!(labels.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn empty_function_spaces() {
        let e = FinSetObj::empty();
        let y = FinSetObj::letters(2);
        assert_eq!(FinFn::all(&e, &y).count(), 1);
        assert_eq!(FinFn::all(&y, &e).count(), 0);
        assert_eq!(FinFn::all(&e, &e).count(), 1);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            FinSetObj::new(vec![Label::Int(1), Label::Int(1)]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn first_difference_is_the_smallest_element() {
        let x = FinSetObj::range(3);
        let f = FinFn::from_indices(x.clone(), x.clone(), vec![0, 1, 2]).unwrap();
        let g = FinFn::from_indices(x.clone(), x, vec![0, 2, 1]).unwrap();
        let w = f.first_difference(&g).unwrap().unwrap();
        assert_eq!(
            w,
            Witness::Differ {
                component: None,
                element: Label::Int(1),
                left: Label::Int(1),
                right: Label::Int(2)
            }
        );
    }
}
