use crate::coherence::{inverse, Adjunction, Braiding, LeftAction, Orientation, RightAction, SkMor, SkObj, SkewMonoidal};
use crate::error::{Error, Result};
use crate::finset::{product, product_map, FinFn, FinSetObj};
use crate::kernel::{Category, FinSet};
use crate::label::Label;

/// Finite sets with the cartesian product and unit `{*}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CartesianFinSet;

impl SkewMonoidal for CartesianFinSet {
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
            let ((a, b), c) = split2(x)?;
            Ok(Label::pair(a.clone(), Label::pair(b.clone(), c.clone())))
        })
    }
    fn left_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        Ok(product(&FinSetObj::point(), a).proj2())
    }
    fn right_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        let cod = product(a, &FinSetObj::point()).obj;
        FinFn::from_fn(a.clone(), cod, |x| Label::pair(x.clone(), Label::Point))
    }
}

pub(crate) fn split(l: &Label) -> Result<(&Label, &Label)> {
    l.as_pair().ok_or_else(|| Error::structure(alloc::format!("{l} is not a pair")))
}

fn split2(l: &Label) -> Result<((&Label, &Label), &Label)> {
    let (ab, c) = split(l)?;
    Ok((split(ab)?, c))
}

/// The symmetry `(x, y) ↦ (y, x)` of [`CartesianFinSet`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Swap;

impl Braiding for Swap {
    type Host = CartesianFinSet;

    fn host(&self) -> &CartesianFinSet {
        &CartesianFinSet
    }
    fn braid(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FinFn> {
        let (p, q) = (product(x, y), product(y, x));
        q.pair(&p.proj2(), &p.proj1())
    }
}

/// A monoidal category acting on itself by its tensor:
/// `m = γ` and `u = λ`.
#[derive(Clone, Debug)]
pub struct SelfAction<S>(pub S);

impl<S: SkewMonoidal> LeftAction for SelfAction<S> {
    type Acting = S;
    type Carrier = S::Cat;

    fn acting(&self) -> &S {
        &self.0
    }
    fn carrier(&self) -> &S::Cat {
        self.0.category()
    }
    fn act(&self, x: &SkObj<S>, a: &SkObj<S>) -> Result<SkObj<S>> {
        self.0.tensor(x, a)
    }
    fn act_mor(&self, f: &SkMor<S>, g: &SkMor<S>) -> Result<SkMor<S>> {
        self.0.tensor_mor(f, g)
    }
    fn multiplicator(&self, x: &SkObj<S>, y: &SkObj<S>, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.associator(x, y, a)
    }
    fn unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.left_unitor(a)
    }
}

/// `A * X = A ⊗ X` with `m = γ` and unitor `ρ`.
#[derive(Clone, Debug)]
pub struct RightSelfAction<S>(pub S);

impl<S: SkewMonoidal> RightAction for RightSelfAction<S> {
    type Acting = S;
    type Carrier = S::Cat;

    fn acting(&self) -> &S {
        &self.0
    }
    fn carrier(&self) -> &S::Cat {
        self.0.category()
    }
    fn act(&self, a: &SkObj<S>, x: &SkObj<S>) -> Result<SkObj<S>> {
        self.0.tensor(a, x)
    }
    fn act_mor(&self, g: &SkMor<S>, f: &SkMor<S>) -> Result<SkMor<S>> {
        self.0.tensor_mor(g, f)
    }
    fn multiplicator(&self, a: &SkObj<S>, x: &SkObj<S>, y: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.associator(a, x, y)
    }
    fn unitor(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.right_unitor(a)
    }
}

/// `id ⊣ (−) ⊗ I` with unit `ρ` and counit `ρ⁻¹`. The counit fails with
/// a structure error where `ρ` is not invertible.
#[derive(Clone, Debug)]
pub struct SelfAdjunction<S>(pub S);

impl<S: SkewMonoidal> Adjunction for SelfAdjunction<S> {
    type Source = S::Cat;
    type Target = S::Cat;

    fn source(&self) -> &S::Cat {
        self.0.category()
    }
    fn target(&self) -> &S::Cat {
        self.0.category()
    }
    fn left_obj(&self, a: &SkObj<S>) -> Result<SkObj<S>> {
        Ok(a.clone())
    }
    fn left_mor(&self, f: &SkMor<S>) -> Result<SkMor<S>> {
        Ok(f.clone())
    }
    fn right_obj(&self, x: &SkObj<S>) -> Result<SkObj<S>> {
        self.0.tensor(x, &self.0.unit())
    }
    fn right_mor(&self, g: &SkMor<S>) -> Result<SkMor<S>> {
        self.0.tensor_mor(g, &self.0.category().identity(&self.0.unit()))
    }
    fn unit(&self, a: &SkObj<S>) -> Result<SkMor<S>> {
        self.0.right_unitor(a)
    }
    fn counit(&self, x: &SkObj<S>) -> Result<SkMor<S>> {
        inverse(self.0.category(), &self.0.right_unitor(x)?, "right unitor")
    }
}
