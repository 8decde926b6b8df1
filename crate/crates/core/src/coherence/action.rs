use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::skew::{inverse, OpSkew, Orientation, RevSkew, SkMor, SkObj, SkewMonoidal};
use crate::error::Result;
use crate::kernel::{chain, compare, expect_boundary, Category, Mor, Obj, Op};
use crate::report::CheckReport;

/// An action `X * A` of a skew monoidal `V` on a category `A`.
///
/// For left skew `V` the structure maps are `m : (X⊗Y)*A → X*(Y*A)` and
/// `u : I*A → A`; for right skew `V` both point the other way.
pub trait LeftAction {
    type Acting: SkewMonoidal;
    type Carrier: Category;

    fn acting(&self) -> &Self::Acting;
    fn carrier(&self) -> &Self::Carrier;
    fn act(&self, x: &SkObj<Self::Acting>, a: &Obj<Self::Carrier>) -> Result<Obj<Self::Carrier>>;
    fn act_mor(&self, f: &SkMor<Self::Acting>, g: &Mor<Self::Carrier>) -> Result<Mor<Self::Carrier>>;
    fn multiplicator(
        &self,
        x: &SkObj<Self::Acting>,
        y: &SkObj<Self::Acting>,
        a: &Obj<Self::Carrier>,
    ) -> Result<Mor<Self::Carrier>>;
    fn unitor(&self, a: &Obj<Self::Carrier>) -> Result<Mor<Self::Carrier>>;
}

impl<L: LeftAction + ?Sized> LeftAction for &L {
    type Acting = L::Acting;
    type Carrier = L::Carrier;

    fn acting(&self) -> &Self::Acting {
        (**self).acting()
    }
    fn carrier(&self) -> &Self::Carrier {
        (**self).carrier()
    }
    fn act(&self, x: &SkObj<Self::Acting>, a: &Obj<Self::Carrier>) -> Result<Obj<Self::Carrier>> {
        (**self).act(x, a)
    }
    fn act_mor(&self, f: &SkMor<Self::Acting>, g: &Mor<Self::Carrier>) -> Result<Mor<Self::Carrier>> {
        (**self).act_mor(f, g)
    }
    fn multiplicator(
        &self,
        x: &SkObj<Self::Acting>,
        y: &SkObj<Self::Acting>,
        a: &Obj<Self::Carrier>,
    ) -> Result<Mor<Self::Carrier>> {
        (**self).multiplicator(x, y, a)
    }
    fn unitor(&self, a: &Obj<Self::Carrier>) -> Result<Mor<Self::Carrier>> {
        (**self).unitor(a)
    }
}

/// An action `A * X` from the right.
///
/// For left skew `V`: `m : (A*X)*Y → A*(X⊗Y)` and `u : A → A*I`; reversed
/// for right skew `V`.
pub trait RightAction {
    type Acting: SkewMonoidal;
    type Carrier: Category;

    fn acting(&self) -> &Self::Acting;
    fn carrier(&self) -> &Self::Carrier;
    fn act(&self, a: &Obj<Self::Carrier>, x: &SkObj<Self::Acting>) -> Result<Obj<Self::Carrier>>;
    fn act_mor(&self, g: &Mor<Self::Carrier>, f: &SkMor<Self::Acting>) -> Result<Mor<Self::Carrier>>;
    fn multiplicator(
        &self,
        a: &Obj<Self::Carrier>,
        x: &SkObj<Self::Acting>,
        y: &SkObj<Self::Acting>,
    ) -> Result<Mor<Self::Carrier>>;
    fn unitor(&self, a: &Obj<Self::Carrier>) -> Result<Mor<Self::Carrier>>;
}

impl<R: RightAction + ?Sized> RightAction for &R {
    type Acting = R::Acting;
    type Carrier = R::Carrier;

    fn acting(&self) -> &Self::Acting {
        (**self).acting()
    }
    fn carrier(&self) -> &Self::Carrier {
        (**self).carrier()
    }
    fn act(&self, a: &Obj<Self::Carrier>, x: &SkObj<Self::Acting>) -> Result<Obj<Self::Carrier>> {
        (**self).act(a, x)
    }
    fn act_mor(&self, g: &Mor<Self::Carrier>, f: &SkMor<Self::Acting>) -> Result<Mor<Self::Carrier>> {
        (**self).act_mor(g, f)
    }
    fn multiplicator(
        &self,
        a: &Obj<Self::Carrier>,
        x: &SkObj<Self::Acting>,
        y: &SkObj<Self::Acting>,
    ) -> Result<Mor<Self::Carrier>> {
        (**self).multiplicator(a, x, y)
    }
    fn unitor(&self, a: &Obj<Self::Carrier>) -> Result<Mor<Self::Carrier>> {
        (**self).unitor(a)
    }
}

type VObj<L> = SkObj<<L as LeftAction>::Acting>;
type AObj<L> = Obj<<L as LeftAction>::Carrier>;
type AMor<L> = Mor<<L as LeftAction>::Carrier>;

/// `X * g`.
pub fn act_left<L: LeftAction>(l: &L, x: &VObj<L>, g: &AMor<L>) -> Result<AMor<L>> {
    l.act_mor(&l.acting().category().identity(x), g)
}

/// `f * A`.
pub fn act_right<L: LeftAction>(l: &L, f: &SkMor<L::Acting>, a: &AObj<L>) -> Result<AMor<L>> {
    l.act_mor(f, &l.carrier().identity(a))
}

/// `(X⊗Y)*A → X*(Y*A)` whatever the orientation of `V`.
pub fn mult_forward<L: LeftAction>(l: &L, x: &VObj<L>, y: &VObj<L>, a: &AObj<L>) -> Result<AMor<L>> {
    let m = l.multiplicator(x, y, a)?;
    match l.acting().orientation() {
        Orientation::Left => Ok(m),
        Orientation::Right => inverse(l.carrier(), &m, "multiplicator"),
    }
}

/// `X*(Y*A) → (X⊗Y)*A`.
pub fn mult_backward<L: LeftAction>(l: &L, x: &VObj<L>, y: &VObj<L>, a: &AObj<L>) -> Result<AMor<L>> {
    let m = l.multiplicator(x, y, a)?;
    match l.acting().orientation() {
        Orientation::Left => inverse(l.carrier(), &m, "multiplicator"),
        Orientation::Right => Ok(m),
    }
}

/// `I*A → A`.
pub fn unit_forward<L: LeftAction>(l: &L, a: &AObj<L>) -> Result<AMor<L>> {
    let u = l.unitor(a)?;
    match l.acting().orientation() {
        Orientation::Left => Ok(u),
        Orientation::Right => inverse(l.carrier(), &u, "unitor"),
    }
}

/// `A → I*A`.
pub fn unit_backward<L: LeftAction>(l: &L, a: &AObj<L>) -> Result<AMor<L>> {
    let u = l.unitor(a)?;
    match l.acting().orientation() {
        Orientation::Left => inverse(l.carrier(), &u, "unitor"),
        Orientation::Right => Ok(u),
    }
}

/// The same action on the opposite categories. Morphisms are unchanged;
/// the acting category's orientation flips.
pub struct OpLeftAction<L: LeftAction> {
    inner: L,
    acting: OpSkew<L::Acting>,
    carrier: Op<L::Carrier>,
}

impl<L: LeftAction> OpLeftAction<L>
where
    L::Acting: Clone,
{
    pub fn new(inner: L) -> Self {
        let acting = OpSkew::new(inner.acting().clone());
        let carrier = Op(inner.carrier().clone());
        OpLeftAction { inner, acting, carrier }
    }

}

impl<L: LeftAction> OpLeftAction<L> {
    pub fn inner(&self) -> &L {
        &self.inner
    }
}

impl<L: LeftAction> LeftAction for OpLeftAction<L> {
    type Acting = OpSkew<L::Acting>;
    type Carrier = Op<L::Carrier>;

    fn acting(&self) -> &Self::Acting {
        &self.acting
    }
    fn carrier(&self) -> &Self::Carrier {
        &self.carrier
    }
    fn act(&self, x: &VObj<L>, a: &AObj<L>) -> Result<AObj<L>> {
        self.inner.act(x, a)
    }
    fn act_mor(&self, f: &SkMor<L::Acting>, g: &AMor<L>) -> Result<AMor<L>> {
        self.inner.act_mor(f, g)
    }
    fn multiplicator(&self, x: &VObj<L>, y: &VObj<L>, a: &AObj<L>) -> Result<AMor<L>> {
        self.inner.multiplicator(x, y, a)
    }
    fn unitor(&self, a: &AObj<L>) -> Result<AMor<L>> {
        self.inner.unitor(a)
    }
}

/// A right action read as a left action of the reversed tensor:
/// `X *' A = A * X`.
pub struct RevRightAction<R: RightAction> {
    inner: R,
    acting: RevSkew<R::Acting>,
}

impl<R: RightAction> RevRightAction<R>
where
    R::Acting: Clone,
{
    pub fn new(inner: R) -> Self {
        let acting = RevSkew(inner.acting().clone());
        RevRightAction { inner, acting }
    }

}

impl<R: RightAction> RevRightAction<R> {
    pub fn inner(&self) -> &R {
        &self.inner
    }
}

impl<R: RightAction> LeftAction for RevRightAction<R> {
    type Acting = RevSkew<R::Acting>;
    type Carrier = R::Carrier;

    fn acting(&self) -> &Self::Acting {
        &self.acting
    }
    fn carrier(&self) -> &R::Carrier {
        self.inner.carrier()
    }
    fn act(&self, x: &SkObj<R::Acting>, a: &Obj<R::Carrier>) -> Result<Obj<R::Carrier>> {
        self.inner.act(a, x)
    }
    fn act_mor(&self, f: &SkMor<R::Acting>, g: &Mor<R::Carrier>) -> Result<Mor<R::Carrier>> {
        self.inner.act_mor(g, f)
    }
    fn multiplicator(&self, x: &SkObj<R::Acting>, y: &SkObj<R::Acting>, a: &Obj<R::Carrier>) -> Result<Mor<R::Carrier>> {
        self.inner.multiplicator(a, y, x)
    }
    fn unitor(&self, a: &Obj<R::Carrier>) -> Result<Mor<R::Carrier>> {
        self.inner.unitor(a)
    }
}

/// A right action on the opposite category, as a left action.
pub type OpRevRightAction<R> = OpLeftAction<RevRightAction<R>>;

fn label<T: core::fmt::Display>(objs: &[&T]) -> Vec<String> {
    objs.iter().map(|o| format!("{o}")).collect()
}

fn label_mixed<X: core::fmt::Display, Y: core::fmt::Display>(xs: &[&X], a: &Y) -> Vec<String> {
    let mut v = label(xs);
    v.push(format!("{a}"));
    v
}

fn check_left<L: LeftAction>(l: &L, vs: &[VObj<L>], objs: &[AObj<L>]) -> Result<CheckReport> {
    let v = l.acting();
    let cat = l.carrier();
    let i = v.unit();
    let mut r = CheckReport::new("strong action");

    for x in vs {
        for y in vs {
            let xy = v.tensor(x, y)?;
            for a in objs {
                let m = l.multiplicator(x, y, a)?;
                let dom = l.act(&xy, a)?;
                let cod = l.act(x, &l.act(y, a)?)?;
                expect_boundary(cat, &m, &dom, &cod, "multiplicator")?;
                r.record("m invertible", label_mixed(&[x, y], a), cat.invert(&m)?.witness().cloned());
            }
        }
    }
    for a in objs {
        let u = l.unitor(a)?;
        expect_boundary(cat, &u, &l.act(&i, a)?, a, "unitor")?;
        r.record("u invertible", vec![format!("{a}")], cat.invert(&u)?.witness().cloned());
    }

    for x in vs {
        for y in vs {
            let xy = v.tensor(x, y)?;
            for z in vs {
                let yz = v.tensor(y, z)?;
                for a in objs {
                    let za = l.act(z, a)?;
                    let lhs = chain(cat, &[l.multiplicator(&xy, z, a)?, l.multiplicator(x, y, &za)?])?;
                    let rhs = chain(
                        cat,
                        &[
                            act_right(l, &v.associator(x, y, z)?, a)?,
                            l.multiplicator(x, &yz, a)?,
                            act_left(l, x, &l.multiplicator(y, z, a)?)?,
                        ],
                    )?;
                    r.record("LAct1", label_mixed(&[x, y, z], a), compare(cat, &lhs, &rhs)?);
                }
            }
        }
    }
    for x in vs {
        for a in objs {
            let xa = l.act(x, a)?;
            let lhs = chain(cat, &[l.multiplicator(&i, x, a)?, l.unitor(&xa)?])?;
            let rhs = act_right(l, &v.left_unitor(x)?, a)?;
            r.record("LAct2", label_mixed(&[x], a), compare(cat, &lhs, &rhs)?);
        }
    }
    for x in vs {
        for a in objs {
            let lhs = chain(
                cat,
                &[
                    act_right(l, &v.right_unitor(x)?, a)?,
                    l.multiplicator(x, &i, a)?,
                    act_left(l, x, &l.unitor(a)?)?,
                ],
            )?;
            let id = cat.identity(&l.act(x, a)?);
            r.record("LAct3", label_mixed(&[x], a), compare(cat, &lhs, &id)?);
        }
    }
    Ok(r)
}

/// The strong action axioms, with invertibility of every `m` and `u`
/// component that is used. For left skew `V`:
///
/// ```text
/// LAct1  m^{X,Y}_{Z*A} ∘ m^{X⊗Y,Z}_A = (X*m^{Y,Z}_A) ∘ m^{X,Y⊗Z}_A ∘ (a_{X,Y,Z}*A)
/// LAct2  u_{X*A} ∘ m^{I,X}_A = ℓ_X*A
/// LAct3  (X*u_A) ∘ m^{X,I}_A ∘ (r_X*A) = id
/// ```
///
/// An action of a right skew `V` is checked on the opposite categories.
pub fn check_strong_action<L: LeftAction>(l: &L, vs: &[VObj<L>], objs: &[AObj<L>]) -> Result<CheckReport>
where
    L::Acting: Clone,
{
    match l.acting().orientation() {
        Orientation::Left => check_left(l, vs, objs),
        Orientation::Right => check_left(&OpLeftAction::new(l), vs, objs),
    }
}

/// The right action axioms: the left action axioms for the reversed
/// tensor, reported as RAct1 to RAct3.
pub fn check_right_action<R: RightAction>(
    r: &R,
    vs: &[SkObj<R::Acting>],
    objs: &[Obj<R::Carrier>],
) -> Result<CheckReport>
where
    R::Acting: Clone,
{
    let rev = RevRightAction::new(r);
    let rep = check_strong_action(&rev, vs, objs)?;
    Ok(rep.relabel(|a| a.strip_prefix("LAct").map(|n| format!("RAct{n}"))))
}
