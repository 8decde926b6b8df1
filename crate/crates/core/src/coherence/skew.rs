use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::finset::Inversion;
use crate::kernel::{chain, compare, expect_boundary, Category, Mor, Obj, Op};
use crate::report::CheckReport;

/// Which way the constraints point.
///
/// Left: `γ : (A⊗B)⊗C → A⊗(B⊗C)`, `λ : I⊗A → A`, `ρ : A → A⊗I`.
/// Right: all three reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Orientation {
    Left,
    Right,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
        }
    }
}

/// A tensor, a unit and the three constraint families, in the direction
/// given by `orientation`. A (genuine) monoidal category is presented as a
/// left skew one whose constraints happen to be invertible.
pub trait SkewMonoidal {
    type Cat: Category;

    fn category(&self) -> &Self::Cat;
    fn orientation(&self) -> Orientation;
    fn unit(&self) -> Obj<Self::Cat>;
    fn tensor(&self, a: &Obj<Self::Cat>, b: &Obj<Self::Cat>) -> Result<Obj<Self::Cat>>;
    fn tensor_mor(&self, f: &Mor<Self::Cat>, g: &Mor<Self::Cat>) -> Result<Mor<Self::Cat>>;
    fn associator(&self, a: &Obj<Self::Cat>, b: &Obj<Self::Cat>, c: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
    fn left_unitor(&self, a: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
    fn right_unitor(&self, a: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
}

impl<S: SkewMonoidal + ?Sized> SkewMonoidal for &S {
    type Cat = S::Cat;

    fn category(&self) -> &Self::Cat {
        (**self).category()
    }
    fn orientation(&self) -> Orientation {
        (**self).orientation()
    }
    fn unit(&self) -> Obj<Self::Cat> {
        (**self).unit()
    }
    fn tensor(&self, a: &Obj<Self::Cat>, b: &Obj<Self::Cat>) -> Result<Obj<Self::Cat>> {
        (**self).tensor(a, b)
    }
    fn tensor_mor(&self, f: &Mor<Self::Cat>, g: &Mor<Self::Cat>) -> Result<Mor<Self::Cat>> {
        (**self).tensor_mor(f, g)
    }
    fn associator(&self, a: &Obj<Self::Cat>, b: &Obj<Self::Cat>, c: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>> {
        (**self).associator(a, b, c)
    }
    fn left_unitor(&self, a: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>> {
        (**self).left_unitor(a)
    }
    fn right_unitor(&self, a: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>> {
        (**self).right_unitor(a)
    }
}

pub type SkObj<S> = Obj<<S as SkewMonoidal>::Cat>;
pub type SkMor<S> = Mor<<S as SkewMonoidal>::Cat>;

/// `a ⊗ g`.
pub fn whisker_left<S: SkewMonoidal>(s: &S, a: &SkObj<S>, g: &SkMor<S>) -> Result<SkMor<S>> {
    s.tensor_mor(&s.category().identity(a), g)
}

/// `f ⊗ b`.
pub fn whisker_right<S: SkewMonoidal>(s: &S, f: &SkMor<S>, b: &SkObj<S>) -> Result<SkMor<S>> {
    s.tensor_mor(f, &s.category().identity(b))
}

/// Inverse of `f`, or a structure error naming `what`.
pub fn inverse<C: Category>(cat: &C, f: &C::Mor, what: &str) -> Result<C::Mor> {
    match cat.invert(f)? {
        Inversion::Iso(g) => Ok(g),
        Inversion::NotIso(w) => Err(Error::Structure(format!("{what} is not invertible: {w}"))),
    }
}

/// The same data on the opposite category, so that every constraint
/// points the other way.
#[derive(Clone, Debug)]
pub struct OpSkew<S: SkewMonoidal> {
    inner: S,
    cat: Op<S::Cat>,
}

impl<S: SkewMonoidal> OpSkew<S> {
    pub fn new(inner: S) -> Self {
        let cat = Op(inner.category().clone());
        OpSkew { inner, cat }
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }
}

impl<S: SkewMonoidal> SkewMonoidal for OpSkew<S> {
    type Cat = Op<S::Cat>;

    fn category(&self) -> &Self::Cat {
        &self.cat
    }
    fn orientation(&self) -> Orientation {
        self.inner.orientation().flip()
    }
    fn unit(&self) -> SkObj<S> {
        self.inner.unit()
    }
    fn tensor(&self, a: &SkObj<S>, b: &SkObj<S>) -> Result<SkObj<S>> {
        self.inner.tensor(a, b)
    }
    fn tensor_mor(&self, f: &SkMor<S>, g: &SkMor<S>) -> Result<SkMor<S>> {
        self.inner.tensor_mor(f, g)
    }
    fn associator(&self, a: &SkObj<S>, b: &SkObj<S>, c: &SkObj<S>) -> Result<SkMor<S>> {
        self.inner.associator(a, b, c)
    }
    fn left_unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.inner.left_unitor(a)
    }
    fn right_unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.inner.right_unitor(a)
    }
}

/// The reversed tensor `A ⊗' B = B ⊗ A`. Left unitor and right unitor
/// trade places, the associator is read backwards, and the orientation
/// flips.
#[derive(Clone, Debug)]
pub struct RevSkew<S>(pub S);

impl<S: SkewMonoidal> SkewMonoidal for RevSkew<S> {
    type Cat = S::Cat;

    fn category(&self) -> &S::Cat {
        self.0.category()
    }
    fn orientation(&self) -> Orientation {
        self.0.orientation().flip()
    }
    fn unit(&self) -> SkObj<S> {
        self.0.unit()
    }
    fn tensor(&self, a: &SkObj<S>, b: &SkObj<S>) -> Result<SkObj<S>> {
        self.0.tensor(b, a)
    }
    fn tensor_mor(&self, f: &SkMor<S>, g: &SkMor<S>) -> Result<SkMor<S>> {
        self.0.tensor_mor(g, f)
    }
    fn associator(&self, a: &SkObj<S>, b: &SkObj<S>, c: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.associator(c, b, a)
    }
    fn left_unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.right_unitor(a)
    }
    fn right_unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.left_unitor(a)
    }
}

/// The opposite of a monoidal category, presented as a left skew one: the
/// constraints are the inverses of the original ones. Fails with a
/// structure error where a constraint is not invertible.
#[derive(Clone, Debug)]
pub struct OpMonoidal<S: SkewMonoidal> {
    inner: S,
    cat: Op<S::Cat>,
}

impl<S: SkewMonoidal> OpMonoidal<S> {
    pub fn new(inner: S) -> Result<Self> {
        if inner.orientation() != Orientation::Left {
            return Err(Error::structure("OpMonoidal expects a monoidal category presented left"));
        }
        let cat = Op(inner.category().clone());
        Ok(OpMonoidal { inner, cat })
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }
}

impl<S: SkewMonoidal> SkewMonoidal for OpMonoidal<S> {
    type Cat = Op<S::Cat>;

    fn category(&self) -> &Self::Cat {
        &self.cat
    }
    fn orientation(&self) -> Orientation {
        Orientation::Left
    }
    fn unit(&self) -> SkObj<S> {
        self.inner.unit()
    }
    fn tensor(&self, a: &SkObj<S>, b: &SkObj<S>) -> Result<SkObj<S>> {
        self.inner.tensor(a, b)
    }
    fn tensor_mor(&self, f: &SkMor<S>, g: &SkMor<S>) -> Result<SkMor<S>> {
        self.inner.tensor_mor(f, g)
    }
    fn associator(&self, a: &SkObj<S>, b: &SkObj<S>, c: &SkObj<S>) -> Result<SkMor<S>> {
        inverse(self.inner.category(), &self.inner.associator(a, b, c)?, "associator")
    }
    fn left_unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        inverse(self.inner.category(), &self.inner.left_unitor(a)?, "left unitor")
    }
    fn right_unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        inverse(self.inner.category(), &self.inner.right_unitor(a)?, "right unitor")
    }
}

/// Boundaries of `γ`, `λ`, `ρ` for a left skew structure.
pub(crate) fn check_left_boundaries<S: SkewMonoidal>(s: &S, palette: &[SkObj<S>]) -> Result<()> {
    let cat = s.category();
    let i = s.unit();
    for a in palette {
        let ia = s.tensor(&i, a)?;
        let ai = s.tensor(a, &i)?;
        expect_boundary(cat, &s.left_unitor(a)?, &ia, a, "left unitor")?;
        expect_boundary(cat, &s.right_unitor(a)?, a, &ai, "right unitor")?;
        for b in palette {
            let ab = s.tensor(a, b)?;
            for c in palette {
                let dom = s.tensor(&ab, c)?;
                let cod = s.tensor(a, &s.tensor(b, c)?)?;
                expect_boundary(cat, &s.associator(a, b, c)?, &dom, &cod, "associator")?;
            }
        }
    }
    Ok(())
}

fn label<T: core::fmt::Display>(objs: &[&T]) -> Vec<String> {
    objs.iter().map(|o| format!("{o}")).collect()
}

fn check_left<S: SkewMonoidal>(s: &S, palette: &[SkObj<S>]) -> Result<CheckReport> {
    check_left_boundaries(s, palette)?;
    let cat = s.category();
    let i = s.unit();
    let mut r = CheckReport::new("skew monoidal");
    let g = |a: &SkObj<S>, b: &SkObj<S>, c: &SkObj<S>| s.associator(a, b, c);
    let t = |a: &SkObj<S>, b: &SkObj<S>| s.tensor(a, b);

    for a in palette {
        for b in palette {
            let ab = t(a, b)?;
            for c in palette {
                let bc = t(b, c)?;
                for d in palette {
                    let cd = t(c, d)?;
                    let lhs = chain(cat, &[g(&ab, c, d)?, g(a, b, &cd)?])?;
                    let rhs = chain(
                        cat,
                        &[
                            whisker_right(s, &g(a, b, c)?, d)?,
                            g(a, &bc, d)?,
                            whisker_left(s, a, &g(b, c, d)?)?,
                        ],
                    )?;
                    r.record("LSkM1", label(&[a, b, c, d]), compare(cat, &lhs, &rhs)?);
                }
            }
        }
    }
    for a in palette {
        for b in palette {
            let ab = t(a, b)?;
            let lhs = chain(cat, &[s.right_unitor(&ab)?, g(a, b, &i)?])?;
            let rhs = whisker_left(s, a, &s.right_unitor(b)?)?;
            r.record("LSkM2", label(&[a, b]), compare(cat, &lhs, &rhs)?);
        }
    }
    for a in palette {
        for b in palette {
            let ab = t(a, b)?;
            let lhs = chain(cat, &[g(&i, a, b)?, s.left_unitor(&ab)?])?;
            let rhs = whisker_right(s, &s.left_unitor(a)?, b)?;
            r.record("LSkM3", label(&[a, b]), compare(cat, &lhs, &rhs)?);
        }
    }
    let lhs = chain(cat, &[s.right_unitor(&i)?, s.left_unitor(&i)?])?;
    r.record("LSkM4", vec![format!("{i}")], compare(cat, &lhs, &cat.identity(&i))?);
    for a in palette {
        for b in palette {
            let lhs = chain(
                cat,
                &[
                    whisker_right(s, &s.right_unitor(a)?, b)?,
                    g(a, &i, b)?,
                    whisker_left(s, a, &s.left_unitor(b)?)?,
                ],
            )?;
            let id = cat.identity(&t(a, b)?);
            r.record("LSkM5", label(&[a, b]), compare(cat, &lhs, &id)?);
        }
    }
    Ok(r)
}

/// The five skew monoidal axioms over a palette of objects: LSkM1 on all
/// quadruples, LSkM2, LSkM3 and LSkM5 on all pairs, LSkM4 once.
///
/// In the left orientation the axioms read
///
/// ```text
/// LSkM1  γ_{A,B,C⊗D} ∘ γ_{A⊗B,C,D} = (A⊗γ_{B,C,D}) ∘ γ_{A,B⊗C,D} ∘ (γ_{A,B,C}⊗D)
/// LSkM2  γ_{A,B,I} ∘ ρ_{A⊗B} = A⊗ρ_B
/// LSkM3  λ_{A⊗B} ∘ γ_{I,A,B} = λ_A⊗B
/// LSkM4  λ_I ∘ ρ_I = id_I
/// LSkM5  (A⊗λ_B) ∘ γ_{A,I,B} ∘ (ρ_A⊗B) = id_{A⊗B}
/// ```
///
/// Right skew data is checked on its opposite, under the same labels.
/// Constraint boundaries are verified first; a mismatch is an error.
pub fn check_skew_monoidal<S: SkewMonoidal>(s: &S, palette: &[SkObj<S>]) -> Result<CheckReport> {
    if palette.is_empty() {
        return Err(Error::structure("empty palette"));
    }
    match s.orientation() {
        Orientation::Left => check_left(s, palette),
        Orientation::Right => check_left(&OpSkew::new(s), palette),
    }
}

/// Naturality of `γ` in each slot, and of `λ` and `ρ`, along palette arrows
/// (the other slots range over `objects`).
pub fn check_skew_naturality<S: SkewMonoidal>(
    s: &S,
    objects: &[SkObj<S>],
    arrows: &[SkMor<S>],
) -> Result<CheckReport> {
    match s.orientation() {
        Orientation::Left => naturality_left(s, objects, arrows),
        Orientation::Right => naturality_left(&OpSkew::new(s), objects, arrows),
    }
}

fn naturality_left<S: SkewMonoidal>(s: &S, objects: &[SkObj<S>], arrows: &[SkMor<S>]) -> Result<CheckReport> {
    let cat = s.category();
    let mut r = CheckReport::new("skew monoidal naturality");
    let id = |a: &SkObj<S>| cat.identity(a);
    let i = s.unit();
    for f in arrows {
        let (x, y) = (cat.dom(f), cat.cod(f));
        let fname = cat.describe_mor(f);
        // slot-wise: ((f⊗b)⊗c, f⊗(b⊗c)) and the analogues
        for b in objects {
            for c in objects {
                let slots = [
                    (x.clone(), b.clone(), c.clone(), y.clone(), b.clone(), c.clone(), [f.clone(), id(b), id(c)]),
                    (b.clone(), x.clone(), c.clone(), b.clone(), y.clone(), c.clone(), [id(b), f.clone(), id(c)]),
                    (b.clone(), c.clone(), x.clone(), b.clone(), c.clone(), y.clone(), [id(b), id(c), f.clone()]),
                ];
                for (k, (a0, b0, c0, a1, b1, c1, [p, q, w])) in slots.into_iter().enumerate() {
                    let before = s.tensor_mor(&s.tensor_mor(&p, &q)?, &w)?;
                    let after = s.tensor_mor(&p, &s.tensor_mor(&q, &w)?)?;
                    let lhs = cat.compose(&s.associator(&a1, &b1, &c1)?, &before)?;
                    let rhs = cat.compose(&after, &s.associator(&a0, &b0, &c0)?)?;
                    let axiom = ["associator naturality (first)", "associator naturality (second)", "associator naturality (third)"][k];
                    r.record(axiom, vec![fname.clone(), format!("{b}"), format!("{c}")], compare(cat, &lhs, &rhs)?);
                }
            }
        }
        let lhs = cat.compose(f, &s.left_unitor(&x)?)?;
        let rhs = cat.compose(&s.left_unitor(&y)?, &whisker_left(s, &i, f)?)?;
        r.record("left unitor naturality", vec![fname.clone()], compare(cat, &lhs, &rhs)?);
        let lhs = cat.compose(&whisker_right(s, f, &i)?, &s.right_unitor(&x)?)?;
        let rhs = cat.compose(&s.right_unitor(&y)?, f)?;
        r.record("right unitor naturality", vec![fname], compare(cat, &lhs, &rhs)?);
    }
    Ok(r)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::finset::{product, product_map, FinFn, FinSetObj};
    use crate::kernel::FinSet;
    use crate::label::Label;

    /// FinSet with cartesian product, written out directly for tests.
    #[derive(Clone, Debug)]
    pub(crate) struct Cartesian;

    impl SkewMonoidal for Cartesian {
        type Cat = FinSet;
        fn category(&self) -> &FinSet {
            &FinSet
        }
        fn orientation(&self) -> Orientation {
            Orientation::Left
        }
        fn unit(&self) -> FinSetObj {
            FinSetObj::point()
        }
        fn tensor(&self, a: &FinSetObj, b: &FinSetObj) -> Result<FinSetObj> {
            Ok(product(a, b).obj)
        }
        fn tensor_mor(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
            Ok(product_map(f, g))
        }
        fn associator(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> Result<FinFn> {
            let dom = product(&product(a, b).obj, c).obj;
            let cod = product(a, &product(b, c).obj).obj;
            FinFn::try_from_fn(dom, cod, |x| {
                let (ab, c) = x.as_pair().unwrap();
                let (a, b) = ab.as_pair().unwrap();
                Ok(Label::pair(a.clone(), Label::pair(b.clone(), c.clone())))
            })
        }
        fn left_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
            let dom = product(&FinSetObj::point(), a).obj;
            FinFn::try_from_fn(dom, a.clone(), |x| Ok(x.as_pair().unwrap().1.clone()))
        }
        fn right_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
            let cod = product(a, &FinSetObj::point()).obj;
            FinFn::try_from_fn(a.clone(), cod, |x| Ok(Label::pair(x.clone(), Label::Point)))
        }
    }

    pub(crate) fn small_sets() -> Vec<FinSetObj> {
        vec![FinSetObj::empty(), FinSetObj::point(), FinSetObj::range(2)]
    }

    #[test]
    fn cartesian_finset_passes_all_five() {
        let r = check_skew_monoidal(&Cartesian, &small_sets()).unwrap();
        assert!(r.is_pass(), "{r}");
        assert_eq!(r.count_of("LSkM1"), 81);
        assert_eq!(r.count_of("LSkM4"), 1);
    }

    #[test]
    fn opposite_is_right_skew_and_checks_report_for_report() {
        let op = OpSkew::new(Cartesian);
        assert_eq!(op.orientation(), Orientation::Right);
        let direct = check_skew_monoidal(&Cartesian, &small_sets()).unwrap();
        let via_op = check_skew_monoidal(&op, &small_sets()).unwrap();
        assert_eq!(direct, via_op);
    }

    #[test]
    fn reversed_tensor_of_monoidal_is_right_skew_and_passes() {
        let rev = RevSkew(Cartesian);
        assert_eq!(rev.orientation(), Orientation::Right);
        assert!(check_skew_monoidal(&rev, &small_sets()).unwrap().is_pass());
        let back = OpSkew::new(RevSkew(Cartesian));
        assert!(check_skew_monoidal(&back, &small_sets()).unwrap().is_pass());
    }

    #[test]
    fn op_monoidal_inverts_constraints_and_passes() {
        let op = OpMonoidal::new(Cartesian).unwrap();
        assert_eq!(op.orientation(), Orientation::Left);
        assert!(check_skew_monoidal(&op, &small_sets()).unwrap().is_pass());
    }

    #[test]
    fn naturality_holds_for_cartesian() {
        let two = FinSetObj::range(2);
        let arrows: Vec<FinFn> = FinFn::all(&two, &two).collect();
        let r = check_skew_naturality(&Cartesian, &small_sets(), &arrows).unwrap();
        assert!(r.is_pass(), "{r}");
    }

    /// A right unitor pointing the wrong way is a structure error, not a pass.
    #[test]
    fn reversed_constraint_is_an_error() {
        struct Wrong;
        impl SkewMonoidal for Wrong {
            type Cat = FinSet;
            fn category(&self) -> &FinSet {
                &FinSet
            }
            fn orientation(&self) -> Orientation {
                Orientation::Left
            }
            fn unit(&self) -> FinSetObj {
                Cartesian.unit()
            }
            fn tensor(&self, a: &FinSetObj, b: &FinSetObj) -> Result<FinSetObj> {
                Cartesian.tensor(a, b)
            }
            fn tensor_mor(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
                Cartesian.tensor_mor(f, g)
            }
            fn associator(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> Result<FinFn> {
                Cartesian.associator(a, b, c)
            }
            fn left_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
                Cartesian.left_unitor(a)
            }
            fn right_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
                let r = Cartesian.right_unitor(a)?;
                Ok(r.invert().iso().unwrap())
            }
        }
        assert!(matches!(check_skew_monoidal(&Wrong, &small_sets()), Err(Error::Structure(_))));
    }
}
