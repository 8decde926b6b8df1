use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::skew::{SkMor, SkObj, SkewMonoidal};
use crate::error::{Error, Result};
use crate::kernel::{compare, expect_boundary, Category};
use crate::report::{CheckReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ClosedSide {
    /// `(−)⊛B ⊣ ⟨B,−⟩`: `Hom(A⊛B, C) ≅ Hom(A, ⟨B,C⟩)`.
    Left,
    /// `A⊛(−) ⊣ ⟨A,−⟩`: `Hom(A⊛B, C) ≅ Hom(B, ⟨A,C⟩)`.
    Right,
}

/// A candidate internal hom for a skew tensor.
///
/// `fixed` is the tensor factor the hom is taken against (`B` on the left
/// side, `A` on the right side) and `other` the remaining one.
pub trait InternalHom {
    type Skew: SkewMonoidal;

    fn skew(&self) -> &Self::Skew;
    fn side(&self) -> ClosedSide;
    fn hom_obj(&self, fixed: &SkObj<Self::Skew>, c: &SkObj<Self::Skew>) -> Result<SkObj<Self::Skew>>;
    /// For `y : F' → F` and `z : C → C'`, the map `⟨F,C⟩ → ⟨F',C'⟩`.
    fn hom_mor(&self, y: &SkMor<Self::Skew>, z: &SkMor<Self::Skew>) -> Result<SkMor<Self::Skew>>;
    /// `f : A⊛B → C` to its transpose `other → ⟨fixed, C⟩`.
    fn transpose(
        &self,
        other: &SkObj<Self::Skew>,
        fixed: &SkObj<Self::Skew>,
        f: &SkMor<Self::Skew>,
    ) -> Result<SkMor<Self::Skew>>;
    /// `g : other → ⟨fixed, C⟩` back to `A⊛B → C`.
    fn untranspose(
        &self,
        other: &SkObj<Self::Skew>,
        fixed: &SkObj<Self::Skew>,
        c: &SkObj<Self::Skew>,
        g: &SkMor<Self::Skew>,
    ) -> Result<SkMor<Self::Skew>>;
}

impl<H: InternalHom + ?Sized> InternalHom for &H {
    type Skew = H::Skew;

    fn skew(&self) -> &Self::Skew {
        (**self).skew()
    }
    fn side(&self) -> ClosedSide {
        (**self).side()
    }
    fn hom_obj(&self, fixed: &SkObj<Self::Skew>, c: &SkObj<Self::Skew>) -> Result<SkObj<Self::Skew>> {
        (**self).hom_obj(fixed, c)
    }
    fn hom_mor(&self, y: &SkMor<Self::Skew>, z: &SkMor<Self::Skew>) -> Result<SkMor<Self::Skew>> {
        (**self).hom_mor(y, z)
    }
    fn transpose(&self, other: &SkObj<Self::Skew>, fixed: &SkObj<Self::Skew>, f: &SkMor<Self::Skew>) -> Result<SkMor<Self::Skew>> {
        (**self).transpose(other, fixed, f)
    }
    fn untranspose(
        &self,
        other: &SkObj<Self::Skew>,
        fixed: &SkObj<Self::Skew>,
        c: &SkObj<Self::Skew>,
        g: &SkMor<Self::Skew>,
    ) -> Result<SkMor<Self::Skew>> {
        (**self).untranspose(other, fixed, c, g)
    }
}

fn label<T: core::fmt::Display>(objs: &[&T]) -> Vec<String> {
    objs.iter().map(|o| format!("{o}")).collect()
}

/// The hom-set bijection and its naturality.
///
/// For every palette triple `(A, B, C)`: both hom-sets are enumerated (at
/// most `limit` elements each, else `TooLarge`), their sizes compared, and
/// transpose and untranspose checked to be mutually inverse. Triples whose
/// sizes differ record a count failure and are skipped for the remaining
/// checks. Naturality is checked in each of the three slots against every
/// palette arrow that lands in (or, for `C`, leaves) the slot's object.
pub fn check_closedness<H: InternalHom>(
    h: &H,
    objects: &[SkObj<H::Skew>],
    arrows: &[SkMor<H::Skew>],
    limit: usize,
) -> Result<CheckReport> {
    let s = h.skew();
    let cat = s.category();
    let side = h.side();
    let mut r = CheckReport::new(match side {
        ClosedSide::Left => "left closed",
        ClosedSide::Right => "right closed",
    });
    let split = |a: &SkObj<H::Skew>, b: &SkObj<H::Skew>| match side {
        ClosedSide::Left => (a.clone(), b.clone()),
        ClosedSide::Right => (b.clone(), a.clone()),
    };
    // the tensor with `x` in the "other" slot and `y` in the "fixed" slot
    let tensor_in = |other: &SkMor<H::Skew>, fixed: &SkMor<H::Skew>| match side {
        ClosedSide::Left => s.tensor_mor(other, fixed),
        ClosedSide::Right => s.tensor_mor(fixed, other),
    };
    let enumerate = |x: &SkObj<H::Skew>, y: &SkObj<H::Skew>| {
        cat.hom(x, y, limit)
            .ok_or_else(|| Error::TooLarge(format!("Hom({x}, {y}) exceeds {limit} or is not enumerable")))
    };

    for a in objects {
        for b in objects {
            let ab = s.tensor(a, b)?;
            let (other, fixed) = split(a, b);
            for c in objects {
                let names = label(&[a, b, c]);
                let hc = h.hom_obj(&fixed, c)?;
                let lhs_set = enumerate(&ab, c)?;
                let rhs_set = enumerate(&other, &hc)?;
                if lhs_set.len() != rhs_set.len() {
                    r.fail(
                        "hom-set sizes",
                        names,
                        Witness::Count { expected: lhs_set.len(), found: rhs_set.len() },
                    );
                    continue;
                }
                r.pass("hom-set sizes", names.clone());

                let mut outcome = None;
                let mut transposes = Vec::with_capacity(lhs_set.len());
                for f in &lhs_set {
                    let g = h.transpose(&other, &fixed, f)?;
                    expect_boundary(cat, &g, &other, &hc, "transpose")?;
                    if outcome.is_none() {
                        outcome = compare(cat, &h.untranspose(&other, &fixed, c, &g)?, f)?;
                    }
                    transposes.push(g);
                }
                for g in &rhs_set {
                    if outcome.is_some() {
                        break;
                    }
                    let f = h.untranspose(&other, &fixed, c, g)?;
                    expect_boundary(cat, &f, &ab, c, "untranspose")?;
                    outcome = compare(cat, &h.transpose(&other, &fixed, &f)?, g)?;
                }
                r.record("bijection", names.clone(), outcome);

                let id = |o: &SkObj<H::Skew>| cat.identity(o);
                for x in arrows {
                    let xname = cat.describe_mor(x);
                    let mut with = names.clone();
                    with.push(xname);
                    if cat.cod(x) == other {
                        let o2 = cat.dom(x);
                        let pre = tensor_in(x, &id(&fixed))?;
                        let mut outcome = None;
                        for (f, g) in lhs_set.iter().zip(&transposes) {
                            let lhs = h.transpose(&o2, &fixed, &cat.compose(f, &pre)?)?;
                            let rhs = cat.compose(g, x)?;
                            outcome = compare(cat, &lhs, &rhs)?;
                            if outcome.is_some() {
                                break;
                            }
                        }
                        r.record("naturality (other slot)", with.clone(), outcome);
                    }
                    if cat.cod(x) == fixed {
                        let f2 = cat.dom(x);
                        let pre = tensor_in(&id(&other), x)?;
                        let post = h.hom_mor(x, &id(c))?;
                        let mut outcome = None;
                        for (f, g) in lhs_set.iter().zip(&transposes) {
                            let lhs = h.transpose(&other, &f2, &cat.compose(f, &pre)?)?;
                            let rhs = cat.compose(&post, g)?;
                            outcome = compare(cat, &lhs, &rhs)?;
                            if outcome.is_some() {
                                break;
                            }
                        }
                        r.record("naturality (fixed slot)", with.clone(), outcome);
                    }
                    if &cat.dom(x) == c {
                        let post = h.hom_mor(&id(&fixed), x)?;
                        let mut outcome = None;
                        for (f, g) in lhs_set.iter().zip(&transposes) {
                            let lhs = h.transpose(&other, &fixed, &cat.compose(x, f)?)?;
                            let rhs = cat.compose(&post, g)?;
                            outcome = compare(cat, &lhs, &rhs)?;
                            if outcome.is_some() {
                                break;
                            }
                        }
                        r.record("naturality (codomain slot)", with, outcome);
                    }
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::skew::tests::Cartesian;
    use crate::finset::{exponential, product, FinFn, FinSetObj};
    use crate::label::Label;
    use alloc::vec;

    /// Cartesian closedness of FinSet, on either side.
    struct Exp(ClosedSide);

    impl InternalHom for Exp {
        type Skew = Cartesian;
        fn skew(&self) -> &Cartesian {
            &Cartesian
        }
        fn side(&self) -> ClosedSide {
            self.0
        }
        fn hom_obj(&self, fixed: &FinSetObj, c: &FinSetObj) -> Result<FinSetObj> {
            Ok(exponential(fixed, c).obj)
        }
        fn hom_mor(&self, y: &FinFn, z: &FinFn) -> Result<FinFn> {
            exponential(y.cod(), z.dom()).map(&exponential(y.dom(), z.cod()), y, z)
        }
        fn transpose(&self, other: &FinSetObj, fixed: &FinSetObj, f: &FinFn) -> Result<FinFn> {
            let e = exponential(fixed, f.cod());
            FinFn::try_from_fn(other.clone(), e.obj.clone(), |o| {
                let row = fixed
                    .iter()
                    .map(|x| {
                        let arg = match self.0 {
                            ClosedSide::Left => Label::pair(o.clone(), x.clone()),
                            ClosedSide::Right => Label::pair(x.clone(), o.clone()),
                        };
                        f.eval(&arg).cloned()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Label::Table(row))
            })
        }
        fn untranspose(&self, other: &FinSetObj, fixed: &FinSetObj, c: &FinSetObj, g: &FinFn) -> Result<FinFn> {
            let dom = match self.0 {
                ClosedSide::Left => product(other, fixed).obj,
                ClosedSide::Right => product(fixed, other).obj,
            };
            FinFn::try_from_fn(dom, c.clone(), |l| {
                let (p, q) = l.as_pair().unwrap();
                let (o, x) = match self.0 {
                    ClosedSide::Left => (p, q),
                    ClosedSide::Right => (q, p),
                };
                let i = fixed.index_of(x).unwrap();
                Ok(g.eval(o)?.as_table().unwrap()[i].clone())
            })
        }
    }

    #[test]
    fn cartesian_closed_on_both_sides() {
        let two = FinSetObj::range(2);
        let arrows: Vec<FinFn> = FinFn::all(&two, &two).collect();
        for side in [ClosedSide::Left, ClosedSide::Right] {
            let objs = vec![FinSetObj::range(2)];
            let r = check_closedness(&Exp(side), &objs, &arrows, 4096).unwrap();
            assert!(r.is_pass(), "{r}");
            assert_eq!(r.count_of("naturality (codomain slot)"), 4);
        }
    }

    /// `⟨B,C⟩ = C^B` with a transpose that ignores one argument of `f`.
    #[test]
    fn wrong_exponent_is_a_count_failure() {
        struct Wrong;
        impl InternalHom for Wrong {
            type Skew = Cartesian;
            fn skew(&self) -> &Cartesian {
                &Cartesian
            }
            fn side(&self) -> ClosedSide {
                ClosedSide::Left
            }
            fn hom_obj(&self, _fixed: &FinSetObj, c: &FinSetObj) -> Result<FinSetObj> {
                Ok(exponential(&FinSetObj::point(), c).obj)
            }
            fn hom_mor(&self, _y: &FinFn, _z: &FinFn) -> Result<FinFn> {
                Err(Error::structure("unused"))
            }
            fn transpose(&self, _: &FinSetObj, _: &FinSetObj, _: &FinFn) -> Result<FinFn> {
                Err(Error::structure("unused"))
            }
            fn untranspose(&self, _: &FinSetObj, _: &FinSetObj, _: &FinSetObj, _: &FinFn) -> Result<FinFn> {
                Err(Error::structure("unused"))
            }
        }
        let r = check_closedness(&Wrong, &[FinSetObj::range(2)], &[], 4096).unwrap();
        let f = r.failures_of("hom-set sizes").next().expect("count failure");
        assert_eq!(f.witness, Witness::Count { expected: 16, found: 4 });
    }
}
