//! Braidings on a monoidal `V`, and right and left braidings on a left skew
//! monoidal category.
//!
//! A right braiding has components `s^P_{A,B} : (P⊛A)⊛B → (P⊛B)⊛A`
//! subject to
//!
//! ```text
//! RSkBr1  s^{P⊛C}_{A,B} ∘ (s^P_{A,C}⊛B) ∘ s^{P⊛A}_{B,C} = (s^P_{B,C}⊛A) ∘ s^{P⊛B}_{A,C} ∘ (s^P_{A,B}⊛C)
//! RSkBr2  (γ_{P,B,C}⊛A) ∘ s^{P⊛B}_{A,C} ∘ (s^P_{A,B}⊛C) = s^P_{A,B⊛C} ∘ γ_{P⊛A,B,C}
//! RSkBr3  γ_{P⊛C,A,B} ∘ (s^P_{A,C}⊛B) ∘ s^{P⊛A}_{B,C} = s^P_{A⊛B,C} ∘ (γ_{P,A,B}⊛C)
//! RSkBr4  (P⊛s^A_{B,C}) ∘ γ_{P,A⊛B,C} ∘ (γ_{P,A,B}⊛C) = γ_{P,A⊛C,B} ∘ (γ_{P,A,C}⊛B) ∘ s^{P⊛A}_{B,C}
//! ```
//!
//! A left braiding has components `s^P_{A,B} : A⊛(B⊛P) → B⊛(A⊛P)`. Its
//! axioms are obtained by reading the four above in the opposite category
//! with the reversed tensor (`X ⊛' Y = Y ⊛ X`, `γ'_{X,Y,Z} = γ_{Z,Y,X}`,
//! composites reversed). Written out, that gives
//!
//! ```text
//! LSkBr1  s^{A⊛P}_{B,C} ∘ (B⊛s^P_{A,C}) ∘ s^{C⊛P}_{A,B} = (C⊛s^P_{A,B}) ∘ s^{B⊛P}_{A,C} ∘ (A⊛s^P_{B,C})
//! LSkBr2  (C⊛s^P_{A,B}) ∘ s^{B⊛P}_{A,C} ∘ (A⊛γ_{C,B,P}) = γ_{C,B,A⊛P} ∘ s^P_{A,C⊛B}
//! LSkBr3  s^{A⊛P}_{B,C} ∘ (B⊛s^P_{A,C}) ∘ γ_{B,A,C⊛P} = (C⊛γ_{B,A,P}) ∘ s^P_{B⊛A,C}
//! LSkBr4  (C⊛γ_{B,A,P}) ∘ γ_{C,B⊛A,P} ∘ (s^A_{B,C}⊛P) = s^{A⊛P}_{B,C} ∘ (B⊛γ_{C,A,P}) ∘ γ_{B,C⊛A,P}
//! ```
//!
//! The checker does not use this list directly: it runs the right-braiding
//! suite on the dual host and renames the labels. The list is what that
//! procedure checks, and the tests replay it literally.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::skew::{inverse, whisker_left, whisker_right, OpSkew, Orientation, RevSkew, SkMor, SkObj, SkewMonoidal};
use crate::error::{Error, Result};
use crate::kernel::{chain, compare, expect_boundary, Category};
use crate::report::CheckReport;

/// `c_{X,Y} : X⊗Y → Y⊗X` on a monoidal category presented left.
pub trait Braiding {
    type Host: SkewMonoidal;

    fn host(&self) -> &Self::Host;
    fn braid(&self, x: &SkObj<Self::Host>, y: &SkObj<Self::Host>) -> Result<SkMor<Self::Host>>;
}

impl<B: Braiding + ?Sized> Braiding for &B {
    type Host = B::Host;

    fn host(&self) -> &Self::Host {
        (**self).host()
    }
    fn braid(&self, x: &SkObj<Self::Host>, y: &SkObj<Self::Host>) -> Result<SkMor<Self::Host>> {
        (**self).braid(x, y)
    }
}

fn label<T: core::fmt::Display>(objs: &[&T]) -> Vec<String> {
    objs.iter().map(|o| format!("{o}")).collect()
}

/// The two hexagons, plus boundaries and invertibility of `c`:
///
/// ```text
/// a_{Y,Z,X} ∘ c_{X,Y⊗Z} ∘ a_{X,Y,Z} = (Y⊗c_{X,Z}) ∘ a_{Y,X,Z} ∘ (c_{X,Y}⊗Z)
/// a⁻¹_{Z,X,Y} ∘ c_{X⊗Y,Z} ∘ a⁻¹_{X,Y,Z} = (c_{X,Z}⊗Y) ∘ a⁻¹_{X,Z,Y} ∘ (X⊗c_{Y,Z})
/// ```
///
/// The associator must be invertible (the host is monoidal).
pub fn check_hexagons<B: Braiding>(c: &B, palette: &[SkObj<B::Host>]) -> Result<CheckReport> {
    let v = c.host();
    if v.orientation() != Orientation::Left {
        return Err(Error::structure("a braiding needs a monoidal host presented left"));
    }
    let cat = v.category();
    let a = |x: &SkObj<B::Host>, y: &SkObj<B::Host>, z: &SkObj<B::Host>| v.associator(x, y, z);
    let ainv = |x: &SkObj<B::Host>, y: &SkObj<B::Host>, z: &SkObj<B::Host>| {
        inverse(cat, &v.associator(x, y, z)?, "associator")
    };
    let mut r = CheckReport::new("braiding");
    for x in palette {
        for y in palette {
            let cxy = c.braid(x, y)?;
            expect_boundary(cat, &cxy, &v.tensor(x, y)?, &v.tensor(y, x)?, "braiding")?;
            r.record("c invertible", label(&[x, y]), cat.invert(&cxy)?.witness().cloned());
        }
    }
    for x in palette {
        for y in palette {
            for z in palette {
                let lhs = chain(cat, &[a(x, y, z)?, c.braid(x, &v.tensor(y, z)?)?, a(y, z, x)?])?;
                let rhs = chain(
                    cat,
                    &[whisker_right(v, &c.braid(x, y)?, z)?, a(y, x, z)?, whisker_left(v, y, &c.braid(x, z)?)?],
                )?;
                r.record("hexagon (first)", label(&[x, y, z]), compare(cat, &lhs, &rhs)?);
                let lhs = chain(cat, &[ainv(x, y, z)?, c.braid(&v.tensor(x, y)?, z)?, ainv(z, x, y)?])?;
                let rhs = chain(
                    cat,
                    &[whisker_left(v, x, &c.braid(y, z)?)?, ainv(x, z, y)?, whisker_right(v, &c.braid(x, z)?, y)?],
                )?;
                r.record("hexagon (second)", label(&[x, y, z]), compare(cat, &lhs, &rhs)?);
            }
        }
    }
    Ok(r)
}

/// `c_{Y,X} ∘ c_{X,Y} = id` on all palette pairs.
pub fn check_braiding_symmetry<B: Braiding>(c: &B, palette: &[SkObj<B::Host>]) -> Result<CheckReport> {
    let v = c.host();
    let cat = v.category();
    let mut r = CheckReport::new("braiding symmetry");
    for x in palette {
        for y in palette {
            let lhs = cat.compose(&c.braid(y, x)?, &c.braid(x, y)?)?;
            let id = cat.identity(&v.tensor(x, y)?);
            r.record("c self-inverse", label(&[x, y]), compare(cat, &lhs, &id)?);
        }
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BraidSide {
    /// `(P⊛A)⊛B → (P⊛B)⊛A`
    Right,
    /// `A⊛(B⊛P) → B⊛(A⊛P)`
    Left,
}

/// Pivoted components `s^P_{A,B}` on a left skew monoidal host.
pub trait SkewBraiding {
    type Host: SkewMonoidal;

    fn host(&self) -> &Self::Host;
    fn side(&self) -> BraidSide;
    fn component(
        &self,
        p: &SkObj<Self::Host>,
        a: &SkObj<Self::Host>,
        b: &SkObj<Self::Host>,
    ) -> Result<SkMor<Self::Host>>;
}

impl<S: SkewBraiding + ?Sized> SkewBraiding for &S {
    type Host = S::Host;

    fn host(&self) -> &Self::Host {
        (**self).host()
    }
    fn side(&self) -> BraidSide {
        (**self).side()
    }
    fn component(&self, p: &SkObj<Self::Host>, a: &SkObj<Self::Host>, b: &SkObj<Self::Host>) -> Result<SkMor<Self::Host>> {
        (**self).component(p, a, b)
    }
}

/// A left braiding seen as a right braiding on the opposite of the
/// reversed host, and vice versa. Components are unchanged.
pub struct DualBraiding<'a, S: SkewBraiding> {
    inner: &'a S,
    host: OpSkew<RevSkew<&'a S::Host>>,
}

impl<'a, S: SkewBraiding> DualBraiding<'a, S> {
    pub fn new(inner: &'a S) -> Self {
        DualBraiding {
            inner,
            host: OpSkew::new(RevSkew(inner.host())),
        }
    }
}

impl<'a, S: SkewBraiding> SkewBraiding for DualBraiding<'a, S> {
    type Host = OpSkew<RevSkew<&'a S::Host>>;

    fn host(&self) -> &Self::Host {
        &self.host
    }
    fn side(&self) -> BraidSide {
        match self.inner.side() {
            BraidSide::Right => BraidSide::Left,
            BraidSide::Left => BraidSide::Right,
        }
    }
    fn component(&self, p: &SkObj<S::Host>, a: &SkObj<S::Host>, b: &SkObj<S::Host>) -> Result<SkMor<S::Host>> {
        self.inner.component(p, a, b)
    }
}

fn expect_shape<S: SkewBraiding>(s: &S, side: BraidSide) -> Result<()> {
    if s.side() != side {
        return Err(Error::structure(format!("expected a {side:?} braiding, got {:?}", s.side())));
    }
    if s.host().orientation() != Orientation::Left {
        return Err(Error::structure("skew braidings live on a left skew monoidal host"));
    }
    Ok(())
}

fn right_suite<S: SkewBraiding>(s: &S, palette: &[SkObj<S::Host>]) -> Result<CheckReport> {
    let h = s.host();
    let cat = h.category();
    let t = |a: &SkObj<S::Host>, b: &SkObj<S::Host>| h.tensor(a, b);
    let sb = |p: &SkObj<S::Host>, a: &SkObj<S::Host>, b: &SkObj<S::Host>| s.component(p, a, b);
    let g = |a: &SkObj<S::Host>, b: &SkObj<S::Host>, c: &SkObj<S::Host>| h.associator(a, b, c);
    let mut r = CheckReport::new("right braiding");
    for p in palette {
        for a in palette {
            let pa = t(p, a)?;
            for b in palette {
                let pb = t(p, b)?;
                let comp = sb(p, a, b)?;
                expect_boundary(cat, &comp, &t(&pa, b)?, &t(&pb, a)?, "braiding component")?;
                r.record("s invertible", label(&[p, a, b]), cat.invert(&comp)?.witness().cloned());
            }
        }
    }
    for p in palette {
        for a in palette {
            let pa = t(p, a)?;
            for b in palette {
                let pb = t(p, b)?;
                for c in palette {
                    let pc = t(p, c)?;
                    let names = label(&[p, a, b, c]);
                    let lhs = chain(
                        cat,
                        &[sb(&pa, b, c)?, whisker_right(h, &sb(p, a, c)?, b)?, sb(&pc, a, b)?],
                    )?;
                    let rhs = chain(
                        cat,
                        &[whisker_right(h, &sb(p, a, b)?, c)?, sb(&pb, a, c)?, whisker_right(h, &sb(p, b, c)?, a)?],
                    )?;
                    r.record("RSkBr1", names.clone(), compare(cat, &lhs, &rhs)?);

                    let bc = t(b, c)?;
                    let lhs = chain(
                        cat,
                        &[whisker_right(h, &sb(p, a, b)?, c)?, sb(&pb, a, c)?, whisker_right(h, &g(p, b, c)?, a)?],
                    )?;
                    let rhs = chain(cat, &[g(&pa, b, c)?, sb(p, a, &bc)?])?;
                    r.record("RSkBr2", names.clone(), compare(cat, &lhs, &rhs)?);

                    let ab = t(a, b)?;
                    let lhs = chain(cat, &[sb(&pa, b, c)?, whisker_right(h, &sb(p, a, c)?, b)?, g(&pc, a, b)?])?;
                    let rhs = chain(cat, &[whisker_right(h, &g(p, a, b)?, c)?, sb(p, &ab, c)?])?;
                    r.record("RSkBr3", names.clone(), compare(cat, &lhs, &rhs)?);

                    let ac = t(a, c)?;
                    let lhs = chain(
                        cat,
                        &[whisker_right(h, &g(p, a, b)?, c)?, g(p, &ab, c)?, whisker_left(h, p, &sb(a, b, c)?)?],
                    )?;
                    let rhs = chain(cat, &[sb(&pa, b, c)?, whisker_right(h, &g(p, a, c)?, b)?, g(p, &ac, b)?])?;
                    r.record("RSkBr4", names, compare(cat, &lhs, &rhs)?);
                }
            }
        }
    }
    Ok(r)
}

/// RSkBr1 to RSkBr4 on all palette quadruples `(P, A, B, C)`, after
/// checking boundaries and invertibility of every component at palette
/// triples.
pub fn check_right_braiding<S: SkewBraiding>(s: &S, palette: &[SkObj<S::Host>]) -> Result<CheckReport> {
    expect_shape(s, BraidSide::Right)?;
    right_suite(s, palette)
}

/// LSkBr1 to LSkBr4 (see the module documentation), checked as the right
/// braiding axioms of the dual host.
pub fn check_left_braiding<S: SkewBraiding>(s: &S, palette: &[SkObj<S::Host>]) -> Result<CheckReport> {
    expect_shape(s, BraidSide::Left)?;
    let mut r = right_suite(&DualBraiding::new(s), palette)?
        .relabel(|a| a.strip_prefix("RSkBr").map(|n| format!("LSkBr{n}")));
    r.suite = String::from("left braiding");
    Ok(r)
}

/// `s^P_{B,A} ∘ s^P_{A,B} = id` on all palette triples `(P, A, B)`.
pub fn check_symmetry<S: SkewBraiding>(s: &S, palette: &[SkObj<S::Host>]) -> Result<CheckReport> {
    let cat = s.host().category();
    let mut r = CheckReport::new("symmetry");
    for p in palette {
        for a in palette {
            for b in palette {
                let there = s.component(p, a, b)?;
                let back = cat.compose(&s.component(p, b, a)?, &there)?;
                let id = cat.identity(&cat.dom(&there));
                r.record("symmetry", label(&[p, a, b]), compare(cat, &back, &id)?);
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::skew::tests::{small_sets, Cartesian};
    use crate::finset::{product, FinFn, FinSetObj};
    use crate::label::Label;
    use alloc::vec;

    struct Swap;

    impl Braiding for Swap {
        type Host = Cartesian;
        fn host(&self) -> &Cartesian {
            &Cartesian
        }
        fn braid(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FinFn> {
            let p = product(x, y);
            let q = product(y, x);
            q.pair(&p.proj2(), &p.proj1())
        }
    }

    #[test]
    fn swap_satisfies_hexagons_and_is_symmetric() {
        let r = check_hexagons(&Swap, &small_sets()).unwrap();
        assert!(r.is_pass(), "{r}");
        assert!(check_braiding_symmetry(&Swap, &small_sets()).unwrap().is_pass());
    }

    /// On cartesian FinSet: `((p,a),b) ↦ ((p,b),a)` is a right braiding and
    /// `(a,(b,p)) ↦ (b,(a,p))` a left one.
    struct Shuffle(BraidSide);

    impl SkewBraiding for Shuffle {
        type Host = Cartesian;
        fn host(&self) -> &Cartesian {
            &Cartesian
        }
        fn side(&self) -> BraidSide {
            self.0
        }
        fn component(&self, p: &FinSetObj, a: &FinSetObj, b: &FinSetObj) -> Result<FinFn> {
            let t = |x: &FinSetObj, y: &FinSetObj| product(x, y).obj;
            match self.0 {
                BraidSide::Right => FinFn::try_from_fn(t(&t(p, a), b), t(&t(p, b), a), |l| {
                    let (pa, b) = l.as_pair().unwrap();
                    let (p, a) = pa.as_pair().unwrap();
                    Ok(Label::pair(Label::pair(p.clone(), b.clone()), a.clone()))
                }),
                BraidSide::Left => FinFn::try_from_fn(t(a, &t(b, p)), t(b, &t(a, p)), |l| {
                    let (a, bp) = l.as_pair().unwrap();
                    let (b, p) = bp.as_pair().unwrap();
                    Ok(Label::pair(b.clone(), Label::pair(a.clone(), p.clone())))
                }),
            }
        }
    }

    #[test]
    fn shuffles_are_braidings_and_symmetries() {
        let r = check_right_braiding(&Shuffle(BraidSide::Right), &small_sets()).unwrap();
        assert!(r.is_pass(), "{r}");
        assert_eq!(r.count_of("RSkBr4"), 81);
        let l = check_left_braiding(&Shuffle(BraidSide::Left), &small_sets()).unwrap();
        assert!(l.is_pass(), "{l}");
        assert_eq!(l.count_of("LSkBr2"), 81);
        assert!(check_symmetry(&Shuffle(BraidSide::Right), &small_sets()).unwrap().is_pass());
        assert!(check_symmetry(&Shuffle(BraidSide::Left), &small_sets()).unwrap().is_pass());
    }

    #[test]
    fn wrong_side_is_an_error() {
        assert!(check_left_braiding(&Shuffle(BraidSide::Right), &small_sets()).is_err());
    }

    /// The literal LSkBr list from the module documentation, evaluated
    /// directly on the host.
    pub(crate) fn literal_left_axioms<S: SkewBraiding>(s: &S, palette: &[SkObj<S::Host>]) -> Result<CheckReport> {
        let h = s.host();
        let cat = h.category();
        let t = |a: &SkObj<S::Host>, b: &SkObj<S::Host>| h.tensor(a, b);
        let sb = |p: &SkObj<S::Host>, a: &SkObj<S::Host>, b: &SkObj<S::Host>| s.component(p, a, b);
        let g = |a: &SkObj<S::Host>, b: &SkObj<S::Host>, c: &SkObj<S::Host>| h.associator(a, b, c);
        let mut r = CheckReport::new("left braiding");
        for p in palette {
            for a in palette {
                for b in palette {
                    for c in palette {
                        let names = label(&[p, a, b, c]);
                        let (ap, bp, cp) = (t(a, p)?, t(b, p)?, t(c, p)?);
                        let lhs = chain(cat, &[sb(&cp, a, b)?, whisker_left(h, b, &sb(p, a, c)?)?, sb(&ap, b, c)?])?;
                        let rhs = chain(
                            cat,
                            &[whisker_left(h, a, &sb(p, b, c)?)?, sb(&bp, a, c)?, whisker_left(h, c, &sb(p, a, b)?)?],
                        )?;
                        r.record("LSkBr1", names.clone(), compare(cat, &lhs, &rhs)?);
                        let cb = t(c, b)?;
                        let lhs = chain(
                            cat,
                            &[whisker_left(h, a, &g(c, b, p)?)?, sb(&bp, a, c)?, whisker_left(h, c, &sb(p, a, b)?)?],
                        )?;
                        let rhs = chain(cat, &[sb(p, a, &cb)?, g(c, b, &ap)?])?;
                        r.record("LSkBr2", names.clone(), compare(cat, &lhs, &rhs)?);
                        let ba = t(b, a)?;
                        let lhs = chain(cat, &[g(b, a, &cp)?, whisker_left(h, b, &sb(p, a, c)?)?, sb(&ap, b, c)?])?;
                        let rhs = chain(cat, &[sb(p, &ba, c)?, whisker_left(h, c, &g(b, a, p)?)?])?;
                        r.record("LSkBr3", names.clone(), compare(cat, &lhs, &rhs)?);
                        let ca = t(c, a)?;
                        let lhs = chain(
                            cat,
                            &[whisker_right(h, &sb(a, b, c)?, p)?, g(c, &ba, p)?, whisker_left(h, c, &g(b, a, p)?)?],
                        )?;
                        let rhs = chain(cat, &[g(b, &ca, p)?, whisker_left(h, b, &g(c, a, p)?)?, sb(&ap, b, c)?])?;
                        r.record("LSkBr4", names, compare(cat, &lhs, &rhs)?);
                    }
                }
            }
        }
        Ok(r)
    }

    #[test]
    fn documented_left_axioms_agree_with_the_dualized_suite() {
        let s = Shuffle(BraidSide::Left);
        let lit = literal_left_axioms(&s, &small_sets()).unwrap();
        assert!(lit.is_pass(), "{lit}");
        let dual = check_left_braiding(&s, &small_sets()).unwrap();
        for ax in ["LSkBr1", "LSkBr2", "LSkBr3", "LSkBr4"] {
            assert_eq!(lit.count_of(ax), dual.count_of(ax));
        }
    }

    /// A non-natural left "braiding" that fixes one element of `A⊛(B⊛P)`
    /// set-theoretically but otherwise shuffles.
    #[test]
    fn tampered_left_braiding_fails_in_both_readings() {
        struct Tampered;
        impl SkewBraiding for Tampered {
            type Host = Cartesian;
            fn host(&self) -> &Cartesian {
                &Cartesian
            }
            fn side(&self) -> BraidSide {
                BraidSide::Left
            }
            fn component(&self, p: &FinSetObj, a: &FinSetObj, b: &FinSetObj) -> Result<FinFn> {
                let base = Shuffle(BraidSide::Left).component(p, a, b)?;
                if a.len() == 2 && b.len() == 2 && p.len() == 2 {
                    // compose with a swap of the first factor
                    let flip = FinFn::from_indices(b.clone(), b.clone(), vec![1, 0])?;
                    base.then(&Cartesian.tensor_mor(&flip, &FinFn::identity(&product(a, p).obj))?)
                } else {
                    Ok(base)
                }
            }
        }
        let dual = check_left_braiding(&Tampered, &small_sets()).unwrap();
        assert!(!dual.is_pass());
        let lit = literal_left_axioms(&Tampered, &small_sets()).unwrap();
        assert!(!lit.is_pass());
        let axioms = |r: &CheckReport| {
            let mut v: Vec<String> = r.failures.iter().map(|f| f.axiom.clone()).collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(axioms(&dual), axioms(&lit));
    }
}
