use alloc::format;
use alloc::string::String;
use alloc::vec;

use crate::error::{Error, Result};
use crate::kernel::{
    check_functor_laws, check_naturality, compare, expect_boundary, Category, Composite, Functor, IdentityFunctor, Mor,
    NatFamily, Obj, Op,
};
use crate::report::CheckReport;

/// `F ⊣ G` with `F : Source → Target`, unit `a → G F a` and counit
/// `F G x → x`.
pub trait Adjunction {
    type Source: Category;
    type Target: Category;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn left_obj(&self, a: &Obj<Self::Source>) -> Result<Obj<Self::Target>>;
    fn left_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>>;
    fn right_obj(&self, x: &Obj<Self::Target>) -> Result<Obj<Self::Source>>;
    fn right_mor(&self, g: &Mor<Self::Target>) -> Result<Mor<Self::Source>>;
    fn unit(&self, a: &Obj<Self::Source>) -> Result<Mor<Self::Source>>;
    fn counit(&self, x: &Obj<Self::Target>) -> Result<Mor<Self::Target>>;

    /// `G f ∘ η_a` for `f : F a → y`, boundaries unchecked. Override only
    /// with an extensionally equal formula that avoids building `G F a`.
    fn transpose_raw(&self, a: &Obj<Self::Source>, f: &Mor<Self::Target>) -> Result<Mor<Self::Source>> {
        self.source().compose(&self.right_mor(f)?, &self.unit(a)?)
    }

    /// `ε_y ∘ F g` for `g : a → G y`, boundaries unchecked. Same caveat.
    fn untranspose_raw(&self, y: &Obj<Self::Target>, g: &Mor<Self::Source>) -> Result<Mor<Self::Target>> {
        self.target().compose(&self.counit(y)?, &self.left_mor(g)?)
    }
}

impl<A: Adjunction + ?Sized> Adjunction for &A {
    type Source = A::Source;
    type Target = A::Target;

    fn source(&self) -> &Self::Source {
        (**self).source()
    }
    fn target(&self) -> &Self::Target {
        (**self).target()
    }
    fn left_obj(&self, a: &Obj<Self::Source>) -> Result<Obj<Self::Target>> {
        (**self).left_obj(a)
    }
    fn left_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>> {
        (**self).left_mor(f)
    }
    fn right_obj(&self, x: &Obj<Self::Target>) -> Result<Obj<Self::Source>> {
        (**self).right_obj(x)
    }
    fn right_mor(&self, g: &Mor<Self::Target>) -> Result<Mor<Self::Source>> {
        (**self).right_mor(g)
    }
    fn unit(&self, a: &Obj<Self::Source>) -> Result<Mor<Self::Source>> {
        (**self).unit(a)
    }
    fn counit(&self, x: &Obj<Self::Target>) -> Result<Mor<Self::Target>> {
        (**self).counit(x)
    }
    fn transpose_raw(&self, a: &Obj<Self::Source>, f: &Mor<Self::Target>) -> Result<Mor<Self::Source>> {
        (**self).transpose_raw(a, f)
    }
    fn untranspose_raw(&self, y: &Obj<Self::Target>, g: &Mor<Self::Source>) -> Result<Mor<Self::Target>> {
        (**self).untranspose_raw(y, g)
    }
}

/// `f : F a → y` to `G f ∘ η_a : a → G y`.
pub fn transpose<A: Adjunction>(adj: &A, a: &Obj<A::Source>, f: &Mor<A::Target>) -> Result<Mor<A::Source>> {
    let t = adj.target();
    let fa = adj.left_obj(a)?;
    if t.dom(f) != fa {
        return Err(Error::structure(format!("transpose: {} does not start at F {a} = {fa}", t.describe_mor(f))));
    }
    adj.transpose_raw(a, f)
}

/// `g : a → G y` to `ε_y ∘ F g : F a → y`.
pub fn untranspose<A: Adjunction>(adj: &A, y: &Obj<A::Target>, g: &Mor<A::Source>) -> Result<Mor<A::Target>> {
    let s = adj.source();
    let gy = adj.right_obj(y)?;
    if s.cod(g) != gy {
        return Err(Error::structure(format!("untranspose: {} does not end at G {y} = {gy}", s.describe_mor(g))));
    }
    adj.untranspose_raw(y, g)
}

/// `G^op ⊣ F^op`, with unit and counit exchanged.
pub struct OpAdjunction<A: Adjunction> {
    inner: A,
    source: Op<A::Target>,
    target: Op<A::Source>,
}

impl<A: Adjunction> OpAdjunction<A> {
    pub fn new(inner: A) -> Self {
        let source = Op(inner.target().clone());
        let target = Op(inner.source().clone());
        OpAdjunction { inner, source, target }
    }

    pub fn inner(&self) -> &A {
        &self.inner
    }
}

impl<A: Adjunction> Adjunction for OpAdjunction<A> {
    type Source = Op<A::Target>;
    type Target = Op<A::Source>;

    fn source(&self) -> &Self::Source {
        &self.source
    }
    fn target(&self) -> &Self::Target {
        &self.target
    }
    fn left_obj(&self, x: &Obj<A::Target>) -> Result<Obj<A::Source>> {
        self.inner.right_obj(x)
    }
    fn left_mor(&self, g: &Mor<A::Target>) -> Result<Mor<A::Source>> {
        self.inner.right_mor(g)
    }
    fn right_obj(&self, a: &Obj<A::Source>) -> Result<Obj<A::Target>> {
        self.inner.left_obj(a)
    }
    fn right_mor(&self, f: &Mor<A::Source>) -> Result<Mor<A::Target>> {
        self.inner.left_mor(f)
    }
    fn unit(&self, x: &Obj<A::Target>) -> Result<Mor<A::Target>> {
        self.inner.counit(x)
    }
    fn counit(&self, a: &Obj<A::Source>) -> Result<Mor<A::Source>> {
        self.inner.unit(a)
    }
    fn transpose_raw(&self, x: &Obj<A::Target>, f: &Mor<A::Source>) -> Result<Mor<A::Target>> {
        self.inner.untranspose_raw(x, f)
    }
    fn untranspose_raw(&self, a: &Obj<A::Source>, g: &Mor<A::Target>) -> Result<Mor<A::Source>> {
        self.inner.transpose_raw(a, g)
    }
}

/// `Id ⊣ Id` on a category.
#[derive(Clone, Debug)]
pub struct IdentityAdjunction<C>(pub C);

impl<C: Category> Adjunction for IdentityAdjunction<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.0
    }
    fn target(&self) -> &C {
        &self.0
    }
    fn left_obj(&self, a: &C::Obj) -> Result<C::Obj> {
        Ok(a.clone())
    }
    fn left_mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }
    fn right_obj(&self, a: &C::Obj) -> Result<C::Obj> {
        Ok(a.clone())
    }
    fn right_mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }
    fn unit(&self, a: &C::Obj) -> Result<C::Mor> {
        Ok(self.0.identity(a))
    }
    fn counit(&self, a: &C::Obj) -> Result<C::Mor> {
        Ok(self.0.identity(a))
    }
}

/// The left adjoint as a functor.
pub struct LeftAdjoint<'a, A>(pub &'a A);

impl<A: Adjunction> Functor for LeftAdjoint<'_, A> {
    type Src = A::Source;
    type Tgt = A::Target;

    fn source(&self) -> &A::Source {
        self.0.source()
    }
    fn target(&self) -> &A::Target {
        self.0.target()
    }
    fn obj(&self, a: &Obj<A::Source>) -> Result<Obj<A::Target>> {
        self.0.left_obj(a)
    }
    fn mor(&self, f: &Mor<A::Source>) -> Result<Mor<A::Target>> {
        self.0.left_mor(f)
    }
}

/// The right adjoint as a functor.
pub struct RightAdjoint<'a, A>(pub &'a A);

impl<A: Adjunction> Functor for RightAdjoint<'_, A> {
    type Src = A::Target;
    type Tgt = A::Source;

    fn source(&self) -> &A::Target {
        self.0.target()
    }
    fn target(&self) -> &A::Source {
        self.0.source()
    }
    fn obj(&self, x: &Obj<A::Target>) -> Result<Obj<A::Source>> {
        self.0.right_obj(x)
    }
    fn mor(&self, g: &Mor<A::Target>) -> Result<Mor<A::Source>> {
        self.0.right_mor(g)
    }
}

/// Both triangle identities:
/// `ε_{F a} ∘ F(η_a) = id` for `a` in `sources` and
/// `G(ε_x) ∘ η_{G x} = id` for `x` in `targets`, after checking the
/// boundaries of `η` and `ε`.
pub fn check_adjunction_triangles<A: Adjunction>(
    adj: &A,
    sources: &[Obj<A::Source>],
    targets: &[Obj<A::Target>],
) -> Result<CheckReport> {
    let (s, t) = (adj.source(), adj.target());
    let mut r = CheckReport::new("adjunction");
    for a in sources {
        let fa = adj.left_obj(a)?;
        let eta = adj.unit(a)?;
        expect_boundary(s, &eta, a, &adj.right_obj(&fa)?, "unit")?;
        let lhs = t.compose(&adj.counit(&fa)?, &adj.left_mor(&eta)?)?;
        r.record("triangle at F", vec![format!("{a}")], compare(t, &lhs, &t.identity(&fa))?);
    }
    for x in targets {
        let gx = adj.right_obj(x)?;
        let eps = adj.counit(x)?;
        expect_boundary(t, &eps, &adj.left_obj(&gx)?, x, "counit")?;
        let lhs = s.compose(&adj.right_mor(&eps)?, &adj.unit(&gx)?)?;
        r.record("triangle at G", vec![format!("{x}")], compare(s, &lhs, &s.identity(&gx))?);
    }
    Ok(r)
}

/// Transpose and untranspose are mutually inverse on every hom-set
/// `Hom(F a, x)` and `Hom(a, G x)` with at most `limit` elements that the
/// categories can enumerate. Larger or non-enumerable hom-sets are skipped.
pub fn check_transpose_round_trip<A: Adjunction>(
    adj: &A,
    sources: &[Obj<A::Source>],
    targets: &[Obj<A::Target>],
    limit: usize,
) -> Result<CheckReport> {
    let (s, t) = (adj.source(), adj.target());
    let mut r = CheckReport::new("transpose round trip");
    for a in sources {
        let fa = adj.left_obj(a)?;
        for x in targets {
            let objs = vec![format!("{a}"), format!("{x}")];
            if let Some(fs) = t.hom(&fa, x, limit) {
                let mut outcome = None;
                for f in &fs {
                    let back = untranspose(adj, x, &transpose(adj, a, f)?)?;
                    if let Some(w) = compare(t, &back, f)? {
                        outcome = Some(w);
                        break;
                    }
                }
                r.record("untranspose after transpose", objs.clone(), outcome);
            }
            let gx = adj.right_obj(x)?;
            if let Some(gs) = s.hom(a, &gx, limit) {
                let mut outcome = None;
                for g in &gs {
                    let back = transpose(adj, a, &untranspose(adj, x, g)?)?;
                    if let Some(w) = compare(s, &back, g)? {
                        outcome = Some(w);
                        break;
                    }
                }
                r.record("transpose after untranspose", objs, outcome);
            }
        }
    }
    Ok(r)
}

/// Functoriality of both adjoints and naturality of unit and counit along
/// palette arrows.
pub fn check_adjunction_naturality<A: Adjunction>(
    adj: &A,
    sources: &[Obj<A::Source>],
    source_arrows: &[Mor<A::Source>],
    targets: &[Obj<A::Target>],
    target_arrows: &[Mor<A::Target>],
) -> Result<CheckReport> {
    let mut r = CheckReport::new("adjunction naturality");
    let relabel = |rep: CheckReport, side: &str| {
        rep.relabel(|a| Some(format!("{side} {a}")))
    };
    r.merge(relabel(check_functor_laws(&LeftAdjoint(adj), sources, source_arrows)?, "left adjoint"));
    r.merge(relabel(check_functor_laws(&RightAdjoint(adj), targets, target_arrows)?, "right adjoint"));
    let unit = NatFamily {
        name: String::from("unit"),
        source: IdentityFunctor(adj.source().clone()),
        target: Composite(LeftAdjoint(adj), RightAdjoint(adj)),
        component: |a: &Obj<A::Source>| adj.unit(a),
    };
    r.merge(relabel(check_naturality(&unit, source_arrows)?, "unit"));
    let counit = NatFamily {
        name: String::from("counit"),
        source: Composite(RightAdjoint(adj), LeftAdjoint(adj)),
        target: IdentityFunctor(adj.target().clone()),
        component: |x: &Obj<A::Target>| adj.counit(x),
    };
    r.merge(relabel(check_naturality(&counit, target_arrows)?, "counit"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{exponential, product, product_map, FinFn, FinSetObj};
    use crate::kernel::FinSet;
    use alloc::vec::Vec;

    /// `(−) × e ⊣ (−)^e`.
    struct Curry(FinSetObj);

    impl Adjunction for Curry {
        type Source = FinSet;
        type Target = FinSet;
        fn source(&self) -> &FinSet {
            &FinSet
        }
        fn target(&self) -> &FinSet {
            &FinSet
        }
        fn left_obj(&self, a: &FinSetObj) -> Result<FinSetObj> {
            Ok(product(a, &self.0).obj)
        }
        fn left_mor(&self, f: &FinFn) -> Result<FinFn> {
            Ok(product_map(f, &FinFn::identity(&self.0)))
        }
        fn right_obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
            Ok(exponential(&self.0, x).obj)
        }
        fn right_mor(&self, g: &FinFn) -> Result<FinFn> {
            let from = exponential(&self.0, g.dom());
            let to = exponential(&self.0, g.cod());
            from.map(&to, &FinFn::identity(&self.0), g)
        }
        fn unit(&self, a: &FinSetObj) -> Result<FinFn> {
            let e = exponential(&self.0, &product(a, &self.0).obj);
            e.curry_from(a, &FinFn::identity(&product(a, &self.0).obj))
        }
        fn counit(&self, x: &FinSetObj) -> Result<FinFn> {
            Ok(exponential(&self.0, x).eval())
        }
    }

    fn sets() -> Vec<FinSetObj> {
        vec![FinSetObj::empty(), FinSetObj::point(), FinSetObj::range(2)]
    }

    #[test]
    fn identity_adjunction_passes() {
        let r = check_adjunction_triangles(&IdentityAdjunction(FinSet), &sets(), &sets()).unwrap();
        assert!(r.is_pass());
    }

    #[test]
    fn curry_adjunction_passes_triangles_and_round_trip() {
        for e in sets() {
            let adj = Curry(e);
            assert!(check_adjunction_triangles(&adj, &sets(), &sets()).unwrap().is_pass());
            let rt = check_transpose_round_trip(&adj, &sets(), &sets(), 16).unwrap();
            assert!(rt.is_pass(), "{rt}");
            assert!(rt.instance_count() > 0);
        }
    }

    #[test]
    fn opposite_adjunction_passes() {
        let adj = OpAdjunction::new(Curry(FinSetObj::range(2)));
        assert!(check_adjunction_triangles(&adj, &sets(), &sets()).unwrap().is_pass());
        assert!(check_transpose_round_trip(&adj, &sets(), &sets(), 16).unwrap().is_pass());
    }

    #[test]
    fn transpose_of_identity_is_unit_and_of_counit_is_identity() {
        let adj = Curry(FinSetObj::range(2));
        let a = FinSetObj::range(2);
        let fa = adj.left_obj(&a).unwrap();
        assert_eq!(transpose(&adj, &a, &FinFn::identity(&fa)).unwrap(), adj.unit(&a).unwrap());
        let y = FinSetObj::letters(2);
        let gy = adj.right_obj(&y).unwrap();
        assert!(transpose(&adj, &gy, &adj.counit(&y).unwrap()).unwrap().is_identity());
        assert_eq!(untranspose(&adj, &y, &FinFn::identity(&gy)).unwrap(), adj.counit(&y).unwrap());
    }

    #[test]
    fn naturality_of_curry_unit_and_counit() {
        let two = FinSetObj::range(2);
        let arrows: Vec<FinFn> = FinFn::all(&two, &two).collect();
        let adj = Curry(two.clone());
        let r = check_adjunction_naturality(&adj, &sets(), &arrows, &sets(), &arrows).unwrap();
        assert!(r.is_pass(), "{r}");
    }

    #[test]
    fn wrong_counit_breaks_a_triangle() {
        struct Bad(Curry);
        impl Adjunction for Bad {
            type Source = FinSet;
            type Target = FinSet;
            fn source(&self) -> &FinSet {
                &FinSet
            }
            fn target(&self) -> &FinSet {
                &FinSet
            }
            fn left_obj(&self, a: &FinSetObj) -> Result<FinSetObj> {
                self.0.left_obj(a)
            }
            fn left_mor(&self, f: &FinFn) -> Result<FinFn> {
                self.0.left_mor(f)
            }
            fn right_obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
                self.0.right_obj(x)
            }
            fn right_mor(&self, g: &FinFn) -> Result<FinFn> {
                self.0.right_mor(g)
            }
            fn unit(&self, a: &FinSetObj) -> Result<FinFn> {
                self.0.unit(a)
            }
            fn counit(&self, x: &FinSetObj) -> Result<FinFn> {
                // evaluate at the other point
                let e = exponential(&(self.0).0, x);
                let flip = FinFn::from_indices((self.0).0.clone(), (self.0).0.clone(), vec![1, 0])?;
                product_map(&FinFn::identity(&e.obj), &flip).then(&e.eval())
            }
        }
        let adj = Bad(Curry(FinSetObj::range(2)));
        let r = check_adjunction_triangles(&adj, &sets(), &sets()).unwrap();
        assert!(!r.is_pass());
    }
}
