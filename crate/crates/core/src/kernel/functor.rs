use alloc::string::String;

use super::{Category, Mor, Obj};
use crate::error::Result;

pub trait Functor {
    type Src: Category;
    type Tgt: Category;

    fn source(&self) -> &Self::Src;
    fn target(&self) -> &Self::Tgt;
    fn obj(&self, a: &Obj<Self::Src>) -> Result<Obj<Self::Tgt>>;
    fn mor(&self, f: &Mor<Self::Src>) -> Result<Mor<Self::Tgt>>;
}

impl<F: Functor + ?Sized> Functor for &F {
    type Src = F::Src;
    type Tgt = F::Tgt;

    fn source(&self) -> &Self::Src {
        (**self).source()
    }
    fn target(&self) -> &Self::Tgt {
        (**self).target()
    }
    fn obj(&self, a: &Obj<Self::Src>) -> Result<Obj<Self::Tgt>> {
        (**self).obj(a)
    }
    fn mor(&self, f: &Mor<Self::Src>) -> Result<Mor<Self::Tgt>> {
        (**self).mor(f)
    }
}

pub trait Bifunctor {
    type Left: Category;
    type Right: Category;
    type Tgt: Category;

    fn left(&self) -> &Self::Left;
    fn right(&self) -> &Self::Right;
    fn target(&self) -> &Self::Tgt;
    fn obj(&self, a: &Obj<Self::Left>, b: &Obj<Self::Right>) -> Result<Obj<Self::Tgt>>;
    fn mor(&self, f: &Mor<Self::Left>, g: &Mor<Self::Right>) -> Result<Mor<Self::Tgt>>;
}

/// `f ⊗ g`.
pub fn apply_bifunctor<B: Bifunctor>(
    b: &B,
    f: &Mor<B::Left>,
    g: &Mor<B::Right>,
) -> Result<Mor<B::Tgt>> {
    b.mor(f, g)
}

#[derive(Clone, Debug)]
pub struct IdentityFunctor<C>(pub C);

impl<C: Category> Functor for IdentityFunctor<C> {
    type Src = C;
    type Tgt = C;

    fn source(&self) -> &C {
        &self.0
    }
    fn target(&self) -> &C {
        &self.0
    }
    fn obj(&self, a: &C::Obj) -> Result<C::Obj> {
        Ok(a.clone())
    }
    fn mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }
}

/// `G ∘ F`.
pub struct Composite<F, G>(pub F, pub G);

impl<F, G> Functor for Composite<F, G>
where
    F: Functor,
    G: Functor<Src = F::Tgt>,
{
    type Src = F::Src;
    type Tgt = G::Tgt;

    fn source(&self) -> &Self::Src {
        self.0.source()
    }
    fn target(&self) -> &Self::Tgt {
        self.1.target()
    }
    fn obj(&self, a: &Obj<Self::Src>) -> Result<Obj<Self::Tgt>> {
        self.1.obj(&self.0.obj(a)?)
    }
    fn mor(&self, f: &Mor<Self::Src>) -> Result<Mor<Self::Tgt>> {
        self.1.mor(&self.0.mor(f)?)
    }
}

/// A functor given by two closures.
pub struct FnFunctor<S, T, FO, FM> {
    pub source: S,
    pub target: T,
    pub obj: FO,
    pub mor: FM,
}

impl<S, T, FO, FM> Functor for FnFunctor<S, T, FO, FM>
where
    S: Category,
    T: Category,
    FO: Fn(&S::Obj) -> Result<T::Obj>,
    FM: Fn(&S::Mor) -> Result<T::Mor>,
{
    type Src = S;
    type Tgt = T;

    fn source(&self) -> &S {
        &self.source
    }
    fn target(&self) -> &T {
        &self.target
    }
    fn obj(&self, a: &S::Obj) -> Result<T::Obj> {
        (self.obj)(a)
    }
    fn mor(&self, f: &S::Mor) -> Result<T::Mor> {
        (self.mor)(f)
    }
}

/// A bifunctor given by two closures.
pub struct FnBifunctor<L, R, T, FO, FM> {
    pub left: L,
    pub right: R,
    pub target: T,
    pub obj: FO,
    pub mor: FM,
}

impl<L, R, T, FO, FM> Bifunctor for FnBifunctor<L, R, T, FO, FM>
where
    L: Category,
    R: Category,
    T: Category,
    FO: Fn(&L::Obj, &R::Obj) -> Result<T::Obj>,
    FM: Fn(&L::Mor, &R::Mor) -> Result<T::Mor>,
{
    type Left = L;
    type Right = R;
    type Tgt = T;

    fn left(&self) -> &L {
        &self.left
    }
    fn right(&self) -> &R {
        &self.right
    }
    fn target(&self) -> &T {
        &self.target
    }
    fn obj(&self, a: &L::Obj, b: &R::Obj) -> Result<T::Obj> {
        (self.obj)(a, b)
    }
    fn mor(&self, f: &L::Mor, g: &R::Mor) -> Result<T::Mor> {
        (self.mor)(f, g)
    }
}

/// A family of morphisms `t_a : F a → G a` claimed to be natural.
pub struct NatFamily<F, G, K> {
    pub name: String,
    pub source: F,
    pub target: G,
    pub component: K,
}

impl<F, G, K> NatFamily<F, G, K>
where
    F: Functor,
    G: Functor<Src = F::Src, Tgt = F::Tgt>,
    K: Fn(&Obj<F::Src>) -> Result<Mor<F::Tgt>>,
{
    pub fn at(&self, a: &Obj<F::Src>) -> Result<Mor<F::Tgt>> {
        (self.component)(a)
    }
}
