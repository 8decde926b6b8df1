//! Generic law checkers: category, functor, naturality and bifunctor laws
//! over a finite palette.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{compare, expect_boundary, Bifunctor, Category, Functor, Mor, NatFamily, Obj};
use crate::error::Result;
use crate::report::CheckReport;

/// Identity laws for every palette arrow and associativity for every
/// composable triple.
pub fn check_category_laws<C: Category>(cat: &C, palette: &[C::Mor]) -> Result<CheckReport> {
    let mut r = CheckReport::new("category");
    for f in palette {
        let name = vec![cat.describe_mor(f)];
        let left = cat.compose(&cat.identity(&cat.cod(f)), f)?;
        r.record("left identity", name.clone(), compare(cat, &left, f)?);
        let right = cat.compose(f, &cat.identity(&cat.dom(f)))?;
        r.record("right identity", name, compare(cat, &right, f)?);
    }
    for f in palette {
        for g in palette.iter().filter(|g| cat.dom(g) == cat.cod(f)) {
            for h in palette.iter().filter(|h| cat.dom(h) == cat.cod(g)) {
                let lhs = cat.compose(&cat.compose(h, g)?, f)?;
                let rhs = cat.compose(h, &cat.compose(g, f)?)?;
                let objs = vec![cat.describe_mor(f), cat.describe_mor(g), cat.describe_mor(h)];
                r.record("associativity", objs, compare(cat, &lhs, &rhs)?);
            }
        }
    }
    Ok(r)
}

/// `F(id) = id` at the given objects and `F(g∘f) = F(g)∘F(f)` for every
/// composable palette pair; also that `F f` has the expected boundary.
pub fn check_functor_laws<F: Functor>(
    f: &F,
    objects: &[Obj<F::Src>],
    arrows: &[Mor<F::Src>],
) -> Result<CheckReport> {
    let (s, t) = (f.source(), f.target());
    let mut r = CheckReport::new("functor");
    for a in objects {
        let fa = f.obj(a)?;
        let image = f.mor(&s.identity(a))?;
        r.record("identity", vec![format!("{a}")], compare(t, &image, &t.identity(&fa))?);
    }
    for g in arrows {
        let fg = f.mor(g)?;
        expect_boundary(t, &fg, &f.obj(&s.dom(g))?, &f.obj(&s.cod(g))?, "functor image")?;
    }
    for g in arrows {
        for h in arrows.iter().filter(|h| s.dom(h) == s.cod(g)) {
            let lhs = f.mor(&s.compose(h, g)?)?;
            let rhs = t.compose(&f.mor(h)?, &f.mor(g)?)?;
            let objs = vec![s.describe_mor(g), s.describe_mor(h)];
            r.record("composition", objs, compare(t, &lhs, &rhs)?);
        }
    }
    Ok(r)
}

/// For each palette arrow `f : a → b`, `G f ∘ t_a = t_b ∘ F f`.
pub fn check_naturality<F, G, K>(family: &NatFamily<F, G, K>, arrows: &[Mor<F::Src>]) -> Result<CheckReport>
where
    F: Functor,
    G: Functor<Src = F::Src, Tgt = F::Tgt>,
    K: Fn(&Obj<F::Src>) -> Result<Mor<F::Tgt>>,
{
    let s = family.source.source();
    let t = family.source.target();
    let mut r = CheckReport::new(format!("naturality of {}", family.name));
    for f in arrows {
        let (a, b) = (s.dom(f), s.cod(f));
        let (ta, tb) = (family.at(&a)?, family.at(&b)?);
        expect_boundary(t, &ta, &family.source.obj(&a)?, &family.target.obj(&a)?, &family.name)?;
        let lhs = t.compose(&family.target.mor(f)?, &ta)?;
        let rhs = t.compose(&tb, &family.source.mor(f)?)?;
        r.record("naturality", vec![s.describe_mor(f)], compare(t, &lhs, &rhs)?);
    }
    Ok(r)
}

/// Identities go to identities, and for `f : A → A'`, `g : B → B'`,
/// `(f ⊗ B')∘(A ⊗ g) = f ⊗ g = (A' ⊗ g)∘(f ⊗ B)`.
pub fn check_bifunctor_laws<B: Bifunctor>(
    b: &B,
    left: &[Mor<B::Left>],
    right: &[Mor<B::Right>],
) -> Result<CheckReport> {
    let (l, rc, t) = (b.left(), b.right(), b.target());
    let mut r = CheckReport::new("bifunctor");
    for f in left {
        for g in right {
            let (a, a2) = (l.dom(f), l.cod(f));
            let (bb, b2) = (rc.dom(g), rc.cod(g));
            let objs = vec![l.describe_mor(f), rc.describe_mor(g)];
            let both = b.mor(f, g)?;
            let first_right = t.compose(&b.mor(f, &rc.identity(&b2))?, &b.mor(&l.identity(&a), g)?)?;
            let first_left = t.compose(&b.mor(&l.identity(&a2), g)?, &b.mor(f, &rc.identity(&bb))?)?;
            r.record("interchange (right first)", objs.clone(), compare(t, &first_right, &both)?);
            r.record("interchange (left first)", objs, compare(t, &first_left, &both)?);
        }
    }
    let mut ids = Vec::new();
    for f in left {
        for g in right {
            for pair in [(l.dom(f), rc.dom(g)), (l.cod(f), rc.cod(g))] {
                if !ids.contains(&pair) {
                    ids.push(pair);
                }
            }
        }
    }
    for (a, bb) in ids {
        let image = b.mor(&l.identity(&a), &rc.identity(&bb))?;
        let id = t.identity(&b.obj(&a, &bb)?);
        r.record("identity", vec![format!("{a}"), format!("{bb}")], compare(t, &image, &id)?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{product, product_map, FinFn, FinSetObj};
    use crate::kernel::{FinPresCat, FinSet, FnBifunctor, IdentityFunctor};
    use crate::label::Label;
    use crate::report::Witness;
    use alloc::string::String;

    fn z2_table() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    #[test]
    fn group_is_a_category() {
        let c = FinPresCat::from_monoid(vec![Label::Int(0), Label::Int(1)], &z2_table(), 0).unwrap();
        assert!(check_category_laws(&c, &c.all_arrows()).unwrap().is_pass());
    }

    #[test]
    fn discrete_category_passes() {
        let c = FinPresCat::discrete(3);
        let r = check_category_laws(&c, &c.all_arrows()).unwrap();
        assert!(r.is_pass());
        assert_eq!(r.count_of("associativity"), 3);
    }

    #[test]
    fn mutated_table_fails_with_a_triple() {
        let mut c = FinPresCat::from_monoid(vec![Label::Int(0), Label::Int(1)], &z2_table(), 0).unwrap();
        c.set_composite(1, 0, 0).unwrap();
        let r = check_category_laws(&c, &c.all_arrows()).unwrap();
        let f = r.failures_of("associativity").next().expect("an associativity failure");
        assert_eq!(f.objects.len(), 3);
        assert!(matches!(f.witness, Witness::DistinctArrows { .. }));
    }

    fn cartesian() -> impl Bifunctor<Left = FinSet, Right = FinSet, Tgt = FinSet> {
        FnBifunctor {
            left: FinSet,
            right: FinSet,
            target: FinSet,
            obj: |a: &FinSetObj, b: &FinSetObj| Ok(product(a, b).obj),
            mor: |f: &FinFn, g: &FinFn| Ok(product_map(f, g)),
        }
    }

    #[test]
    fn product_bifunctor_interchange() {
        let two = FinSetObj::range(2);
        let ab = FinSetObj::letters(2);
        let left: Vec<FinFn> = FinFn::all(&two, &ab).collect();
        let right: Vec<FinFn> = FinFn::all(&ab, &two).collect();
        let r = check_bifunctor_laws(&cartesian(), &left, &right).unwrap();
        assert!(r.is_pass(), "{r}");
    }

    #[test]
    fn identity_functor_passes() {
        let two = FinSetObj::range(2);
        let arrows: Vec<FinFn> = FinFn::all(&two, &two).collect();
        let r = check_functor_laws(&IdentityFunctor(FinSet), &[two], &arrows).unwrap();
        assert!(r.is_pass());
    }

    #[test]
    fn swap_is_natural_and_fixed_element_is_not() {
        let two = FinSetObj::range(2);
        let one = FinSetObj::point();
        let arrows: Vec<FinFn> = FinFn::all(&two, &two).chain(FinFn::all(&one, &two)).collect();
        // the diagonal functor X ↦ X × X and the swap on it
        let diag = || crate::kernel::FnFunctor {
            source: FinSet,
            target: FinSet,
            obj: |a: &FinSetObj| Ok(product(a, a).obj),
            mor: |f: &FinFn| Ok(product_map(f, f)),
        };
        let swap = NatFamily {
            name: String::from("swap"),
            source: diag(),
            target: diag(),
            component: |a: &FinSetObj| {
                let p = product(a, a);
                p.pair(&p.proj2(), &p.proj1())
            },
        };
        assert!(check_naturality(&swap, &arrows).unwrap().is_pass());
        // X ↦ X to X ↦ X, sending everything to the smallest element (or
        // identity on the empty set): not natural along 1 → 2 picking 1
        let pick = NatFamily {
            name: String::from("pick"),
            source: IdentityFunctor(FinSet),
            target: IdentityFunctor(FinSet),
            component: |a: &FinSetObj| Ok(FinFn::from_indices(a.clone(), a.clone(), vec![0; a.len()]).unwrap()),
        };
        let r = check_naturality(&pick, &arrows).unwrap();
        assert!(!r.is_pass());
        assert!(matches!(r.failures[0].witness, Witness::Differ { .. }));
    }
}
