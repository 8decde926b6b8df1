//! Copowers, powers and exponential warping, all on finite sets.
//!
//! - copower (LR): `c ⊛ d = Hom(j, c) × d`, right skew;
//! - power (LL over `FinSet^op`): `c ⊛ d = d^Hom(c, j)`, left skew;
//! - exponential warping (RR): `P ⊛ A = P × A^J`, left skew, with the
//!   right braiding induced by the swap.

use alloc::vec::Vec;

use crate::coherence::{Adjunction, LeftAction, OpMonoidal};
use crate::construction::{build_ll, build_lr, build_rr, LeftLeft, LeftRight, RightRight};
use crate::error::Result;
use crate::finset::{exponential, product, product_map, FinFn, FinSetObj};
use crate::kernel::{FinSet, Op};
use crate::label::Label;

use super::cartesian::{CartesianFinSet, RightSelfAction, SelfAction};

/// `(−) × e ⊣ (−)^e`.
#[derive(Clone, Debug)]
pub struct CopowerAdjunction(pub FinSetObj);

impl Adjunction for CopowerAdjunction {
    type Source = FinSet;
    type Target = FinSet;

    fn source(&self) -> &FinSet {
        &FinSet
    }
    fn target(&self) -> &FinSet {
        &FinSet
    }
    fn left_obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
        Ok(product(x, &self.0).obj)
    }
    fn left_mor(&self, f: &FinFn) -> Result<FinFn> {
        Ok(product_map(f, &FinFn::identity(&self.0)))
    }
    fn right_obj(&self, c: &FinSetObj) -> Result<FinSetObj> {
        Ok(exponential(&self.0, c).obj)
    }
    fn right_mor(&self, g: &FinFn) -> Result<FinFn> {
        let (from, to) = (exponential(&self.0, g.dom()), exponential(&self.0, g.cod()));
        from.map(&to, &FinFn::identity(&self.0), g)
    }
    fn unit(&self, x: &FinSetObj) -> Result<FinFn> {
        let xe = product(x, &self.0).obj;
        exponential(&self.0, &xe).curry_from(x, &FinFn::identity(&xe))
    }
    fn counit(&self, c: &FinSetObj) -> Result<FinFn> {
        Ok(exponential(&self.0, c).eval())
    }
    /// Currying.
    fn transpose_raw(&self, x: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        exponential(&self.0, f.cod()).curry_from(x, f)
    }
}

pub type Copower = LeftRight<SelfAction<CartesianFinSet>, CopowerAdjunction>;

/// The right skew structure `c ⊛ d = Hom(j, c) × d` from copowers.
pub fn copower_instance(j: FinSetObj, palette: &[FinSetObj]) -> Result<Copower> {
    build_lr(SelfAction(CartesianFinSet), CopowerAdjunction(j.clone()), j, palette, palette)
}

/// The opposite of cartesian finite sets, presented left.
pub type OpFinSet = OpMonoidal<CartesianFinSet>;

pub fn op_finset() -> OpFinSet {
    OpMonoidal::new(CartesianFinSet).expect("cartesian finite sets are presented left")
}

/// `FinSet^op` acting on finite sets by powers, `X * d = d^X`.
#[derive(Clone, Debug)]
pub struct PowerAction(pub OpFinSet);

/// `x ↦ (φ ↦ φ(x)) : s → j^(j^s)`.
fn double_dual(s: &FinSetObj, j: &FinSetObj) -> Result<FinFn> {
    let inner = exponential(s, j);
    let outer = exponential(&inner.obj, j);
    FinFn::try_from_fn(s.clone(), outer.obj.clone(), |x| {
        let i = s.index_of(x).expect("element of s");
        let row = inner
            .obj
            .iter()
            .map(|phi| phi.as_table().expect("table")[i].clone())
            .collect();
        Ok(Label::Table(row))
    })
}

impl LeftAction for PowerAction {
    type Acting = OpFinSet;
    type Carrier = FinSet;

    fn acting(&self) -> &OpFinSet {
        &self.0
    }
    fn carrier(&self) -> &FinSet {
        &FinSet
    }
    fn act(&self, x: &FinSetObj, d: &FinSetObj) -> Result<FinSetObj> {
        Ok(exponential(x, d).obj)
    }
    /// `f : X → Y` in `FinSet^op` is a map `Y → X`; the result is
    /// `φ ↦ g ∘ φ ∘ f`.
    fn act_mor(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        let from = exponential(f.cod(), g.dom());
        let to = exponential(f.dom(), g.cod());
        from.map(&to, f, g)
    }
    /// `d^(X×Y) → (d^Y)^X`, currying.
    fn multiplicator(&self, x: &FinSetObj, y: &FinSetObj, d: &FinSetObj) -> Result<FinFn> {
        let xy = product(x, y).obj;
        let whole = exponential(&xy, d);
        let yd = exponential(y, d);
        let xyd = exponential(x, &yd.obj);
        FinFn::try_from_fn(whole.obj.clone(), xyd.obj.clone(), |psi| {
            let psi = whole.function_of(psi)?;
            let rows = x
                .iter()
                .map(|a| {
                    let row = y.iter().map(|b| psi.eval(&Label::pair(a.clone(), b.clone())).cloned());
                    row.collect::<Result<Vec<_>>>().map(Label::Table)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Label::Table(rows))
        })
    }
    /// `d^1 → d`, evaluation at the point.
    fn unitor(&self, d: &FinSetObj) -> Result<FinFn> {
        let e = exponential(&FinSetObj::point(), d);
        FinFn::try_from_fn(e.obj.clone(), d.clone(), |psi| Ok(psi.as_table().expect("table")[0].clone()))
    }
}

/// `j^(−) ⊣ j^(−)` between finite sets and their opposite.
#[derive(Clone, Debug)]
pub struct PowerAdjunction {
    pub j: FinSetObj,
    op: Op<FinSet>,
}

impl PowerAdjunction {
    pub fn new(j: FinSetObj) -> Self {
        PowerAdjunction { j, op: Op(FinSet) }
    }

    /// `g : a → j^b` to `b → j^a`, `y ↦ (x ↦ g(x)(y))`.
    fn flip(&self, g: &FinFn, b: &FinSetObj) -> Result<FinFn> {
        let e = exponential(b, &self.j);
        if g.cod() != &e.obj {
            return Err(crate::Error::structure(alloc::format!("{} is not {}", g.cod(), e.obj)));
        }
        let a = g.dom().clone();
        let rows = a.iter().map(|x| e.function_of(g.eval(x)?)).collect::<Result<Vec<_>>>()?;
        let to = exponential(&a, &self.j);
        FinFn::try_from_fn(b.clone(), to.obj.clone(), |y| {
            let k = b.index_of(y).expect("element of b");
            Ok(Label::Table(rows.iter().map(|r| self.j.get(r.image_index(k)).clone()).collect()))
        })
    }

    fn dual_map(&self, f: &FinFn) -> Result<FinFn> {
        let from = exponential(f.cod(), &self.j);
        let to = exponential(f.dom(), &self.j);
        from.map(&to, f, &FinFn::identity(&self.j))
    }
}

impl Adjunction for PowerAdjunction {
    type Source = FinSet;
    type Target = Op<FinSet>;

    fn source(&self) -> &FinSet {
        &FinSet
    }
    fn target(&self) -> &Op<FinSet> {
        &self.op
    }
    fn left_obj(&self, d: &FinSetObj) -> Result<FinSetObj> {
        Ok(exponential(d, &self.j).obj)
    }
    fn left_mor(&self, g: &FinFn) -> Result<FinFn> {
        self.dual_map(g)
    }
    fn right_obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
        Ok(exponential(x, &self.j).obj)
    }
    fn right_mor(&self, f: &FinFn) -> Result<FinFn> {
        self.dual_map(f)
    }
    fn unit(&self, d: &FinSetObj) -> Result<FinFn> {
        double_dual(d, &self.j)
    }
    fn counit(&self, x: &FinSetObj) -> Result<FinFn> {
        double_dual(x, &self.j)
    }
    /// `f : y → j^d` becomes `d → j^y`.
    fn transpose_raw(&self, d: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        self.flip(f, d)
    }
    /// `g : d → j^x` becomes `x → j^d`.
    fn untranspose_raw(&self, x: &FinSetObj, g: &FinFn) -> Result<FinFn> {
        self.flip(g, x)
    }
}

pub type Power = LeftLeft<PowerAction, PowerAdjunction>;

/// The left skew structure `c ⊛ d = d^Hom(c, j)` from powers.
pub fn power_instance(j: FinSetObj, palette: &[FinSetObj]) -> Result<Power> {
    build_ll(PowerAction(op_finset()), PowerAdjunction::new(j.clone()), j, palette, palette)
}

/// `J × (−) ⊣ (−)^J`.
#[derive(Clone, Debug)]
pub struct ExponentialAdjunction(pub FinSetObj);

impl Adjunction for ExponentialAdjunction {
    type Source = FinSet;
    type Target = FinSet;

    fn source(&self) -> &FinSet {
        &FinSet
    }
    fn target(&self) -> &FinSet {
        &FinSet
    }
    fn left_obj(&self, x: &FinSetObj) -> Result<FinSetObj> {
        Ok(product(&self.0, x).obj)
    }
    fn left_mor(&self, f: &FinFn) -> Result<FinFn> {
        Ok(product_map(&FinFn::identity(&self.0), f))
    }
    fn right_obj(&self, a: &FinSetObj) -> Result<FinSetObj> {
        Ok(exponential(&self.0, a).obj)
    }
    fn right_mor(&self, g: &FinFn) -> Result<FinFn> {
        let (from, to) = (exponential(&self.0, g.dom()), exponential(&self.0, g.cod()));
        from.map(&to, &FinFn::identity(&self.0), g)
    }
    /// `x ↦ (k ↦ (k, x))`.
    fn unit(&self, x: &FinSetObj) -> Result<FinFn> {
        let (xj, jx) = (product(x, &self.0), product(&self.0, x));
        let swap = jx.pair(&xj.proj2(), &xj.proj1())?;
        exponential(&self.0, &jx.obj).curry_from(x, &swap)
    }
    /// `(k, φ) ↦ φ(k)`.
    fn counit(&self, a: &FinSetObj) -> Result<FinFn> {
        let e = exponential(&self.0, a);
        let (je, ej) = (product(&self.0, &e.obj), product(&e.obj, &self.0));
        ej.pair(&je.proj2(), &je.proj1())?.then(&e.eval())
    }
    /// Currying in the second variable.
    fn transpose_raw(&self, x: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        let (xj, jx) = (product(x, &self.0), product(&self.0, x));
        let swapped = jx.pair(&xj.proj2(), &xj.proj1())?.then(f)?;
        exponential(&self.0, f.cod()).curry_from(x, &swapped)
    }
}

pub type ExponentialWarping = RightRight<RightSelfAction<CartesianFinSet>, ExponentialAdjunction>;

/// The left skew structure `P ⊛ A = P × A^J` from the right self-action.
pub fn exponential_warping_instance(j: FinSetObj, palette: &[FinSetObj]) -> Result<ExponentialWarping> {
    build_rr(RightSelfAction(CartesianFinSet), ExponentialAdjunction(j.clone()), j, palette, palette)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Category;

    fn literal_transpose<A: Adjunction<Source = FinSet, Target = FinSet>>(adj: &A, x: &FinSetObj, f: &FinFn) -> FinFn {
        FinSet.compose(&adj.right_mor(f).unwrap(), &adj.unit(x).unwrap()).unwrap()
    }

    #[test]
    fn currying_transposes_match_the_unit_formula() {
        let sets: Vec<FinSetObj> = (0..3).map(FinSetObj::range).collect();
        for e in &sets {
            let copower = CopowerAdjunction(e.clone());
            let warping = ExponentialAdjunction(e.clone());
            for x in &sets {
                for c in &sets {
                    for f in FinSet.hom(&copower.left_obj(x).unwrap(), c, 1 << 12).unwrap() {
                        let direct = copower.transpose_raw(x, &f).unwrap();
                        assert!(direct.first_difference(&literal_transpose(&copower, x, &f)).unwrap().is_none());
                    }
                    for f in FinSet.hom(&warping.left_obj(x).unwrap(), c, 1 << 12).unwrap() {
                        let direct = warping.transpose_raw(x, &f).unwrap();
                        assert!(direct.first_difference(&literal_transpose(&warping, x, &f)).unwrap().is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn power_transposes_match_the_unit_and_counit_formulas() {
        let adj = PowerAdjunction::new(FinSetObj::range(2));
        let sets: Vec<FinSetObj> = (0..3).map(FinSetObj::range).collect();
        for d in &sets {
            for x in &sets {
                let gx = adj.right_obj(x).unwrap();
                for g in FinSet.hom(d, &gx, 1 << 12).unwrap() {
                    let literal = FinSet.compose(&adj.left_mor(&g).unwrap(), &adj.counit(x).unwrap()).unwrap();
                    let direct = adj.untranspose_raw(x, &g).unwrap();
                    assert!(literal.first_difference(&direct).unwrap().is_none());
                    let f = direct;
                    let literal = FinSet.compose(&adj.right_mor(&f).unwrap(), &adj.unit(d).unwrap()).unwrap();
                    let back = adj.transpose_raw(d, &f).unwrap();
                    assert!(literal.first_difference(&back).unwrap().is_none());
                    assert!(back.first_difference(&g).unwrap().is_none());
                }
            }
        }
    }
}
