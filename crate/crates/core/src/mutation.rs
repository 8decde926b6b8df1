//! Single-entry corruptions of passing instances, one or more per checker
//! suite. Each fixture builds its instance, corrupts one ingredient and runs
//! the suite; a sound checker reports at least one failure with a witness.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coherence::{
    check_adjunction_naturality, check_adjunction_triangles, check_braiding_symmetry, check_closedness, check_hexagons,
    check_lax_monoidal, check_left_braiding, check_oplax_monoidal, check_right_braiding, check_skew_monoidal,
    check_skew_naturality, check_strong_action, check_symmetry, check_transpose_round_trip, Adjunction, Braiding,
    BraidSide, ClosedSide, Direction, InternalHom, LeftAction, MonoidalFunctor, Orientation, SkMor, SkObj, SkewBraiding,
    SkewMonoidal,
};
use crate::construction::{
    invertibility_probe, ActionSkew, InducedLeftBraiding, InducedRightBraiding, LaxRightAdjoint, OplaxLeftAdjoint,
};
use crate::error::Result;
use crate::finset::{exponential, product, product_map, FinFn, FinSetObj};
use crate::instances::{
    exponential_warping_instance, monoid_warping, mset_palette, self_action_instance, tensor_label, CartesianFinSet,
    FreeForgetful, MSetCartesian, MSetObj, MSetSwap, MonoidAction, MonoidTable, MonoidWarping, Swap,
};
use crate::kernel::{
    check_bifunctor_laws, check_category_laws, check_functor_laws, check_naturality, Category, FinPresCat, FinSet,
    FnBifunctor, FnFunctor, IdentityFunctor, NatFamily,
};
use crate::label::Label;
use crate::report::CheckReport;

/// One corrupted instance and the suite run against it.
#[derive(Clone, Copy, Debug)]
pub struct Mutation {
    pub name: &'static str,
    pub suite: &'static str,
    pub description: &'static str,
    run: fn() -> Result<CheckReport>,
}

impl Mutation {
    pub fn run(&self) -> Result<CheckReport> {
        (self.run)()
    }
}

/// Outcome of running one fixture.
#[derive(Clone, Debug)]
pub struct MutationOutcome {
    pub mutation: Mutation,
    pub report: CheckReport,
}

impl MutationOutcome {
    /// The suite failed and every failure carries a witness.
    pub fn caught(&self) -> bool {
        !self.report.failures.is_empty()
    }
}

pub fn fixtures() -> Vec<Mutation> {
    vec![
        Mutation {
            name: "z3-composite",
            suite: "category",
            description: "one-object category of Z3 with 1∘1 set to 0",
            run: category_fixture,
        },
        Mutation {
            name: "rotation-image",
            suite: "functor",
            description: "Z3 acting on three points by rotation, with 2 sent to the rotation by 1",
            run: functor_fixture,
        },
        Mutation {
            name: "constant-family",
            suite: "naturality",
            description: "family on finite sets picking the first element of each set",
            run: naturality_fixture,
        },
        Mutation {
            name: "forgetful-product",
            suite: "bifunctor",
            description: "product of maps that replaces g by a constant when both maps are non-identities",
            run: bifunctor_fixture,
        },
        Mutation {
            name: "odd-right-unitor",
            suite: "skew monoidal",
            description: "Z2 warping with ρ(a) = (1, a, *)",
            run: skew_fixture,
        },
        Mutation {
            name: "broken-pentagon",
            suite: "skew monoidal",
            description: "self-action of cartesian sets whose associator at (2, 2, 2) is followed by a transposition",
            run: broken_pentagon_fixture,
        },
        Mutation {
            name: "twisted-associator",
            suite: "skew monoidal naturality",
            description: "cartesian sets with the associator at (2, 2, 2) followed by a transposition",
            run: skew_naturality_fixture,
        },
        Mutation {
            name: "constant-unitor",
            suite: "strong action",
            description: "Z2 M-sets acting on sets with u replaced by a constant map",
            run: strong_action_fixture,
        },
        Mutation {
            name: "shifted-unit",
            suite: "adjunction",
            description: "free ⊣ forgetful for Z2 with η(a) = ((1, a), *)",
            run: triangles_fixture,
        },
        Mutation {
            name: "shifted-unit",
            suite: "transpose round trip",
            description: "free ⊣ forgetful for Z2 with η(a) = ((1, a), *)",
            run: round_trip_fixture,
        },
        Mutation {
            name: "singular-unit",
            suite: "adjunction naturality",
            description: "free ⊣ forgetful for Z2 with η shifted at the element 0 only",
            run: adjunction_naturality_fixture,
        },
        Mutation {
            name: "shifted-unit",
            suite: "preflight",
            description: "Z2 instance preflight with η(a) = ((1, a), *)",
            run: preflight_fixture,
        },
        Mutation {
            name: "shifted-unit",
            suite: "fusion",
            description: "Z2 construction over η(a) = ((1, a), *), unvalidated",
            run: fusion_fixture,
        },
        Mutation {
            name: "twisted-φ",
            suite: "lax monoidal",
            description: "self-action, φ followed by a transposition",
            run: lax_fixture,
        },
        Mutation {
            name: "twisted-φ̂",
            suite: "oplax monoidal",
            description: "self-action, φ̂ followed by a transposition",
            run: oplax_fixture,
        },
        Mutation {
            name: "collapsing-action",
            suite: "invertibility",
            description: "self-action whose f * id collapses to a constant on domains of size ≥ 2",
            run: invertibility_fixture,
        },
        Mutation {
            name: "twisted-swap",
            suite: "braiding",
            description: "cartesian swap followed by a transposition",
            run: hexagon_fixture,
        },
        Mutation {
            name: "twisted-swap",
            suite: "braiding symmetry",
            description: "cartesian swap followed by a transposition",
            run: braiding_symmetry_fixture,
        },
        Mutation {
            name: "permuted-s",
            suite: "right braiding",
            description: "exponential warping, J = 2, induced s followed by a fixed transposition",
            run: right_braiding_fixture,
        },
        Mutation {
            name: "shifted-s",
            suite: "left braiding",
            description: "Z2 warping, induced s with the outer monoid coordinate shifted by 1",
            run: left_braiding_fixture,
        },
        Mutation {
            name: "three-cycle-s",
            suite: "symmetry",
            description: "exponential warping, J = 1, induced s followed by a fixed 3-cycle",
            run: symmetry_fixture,
        },
        Mutation {
            name: "wrong-exponent",
            suite: "right closed",
            description: "Z2 warping with ⟨A, C⟩ = C^A instead of C^(M×A)",
            run: right_closed_fixture,
        },
        Mutation {
            name: "wrong-exponent",
            suite: "left closed",
            description: "Z2 warping with ⟨B, C⟩ = C^B × 1 instead of (C^B)^M × 1",
            run: left_closed_fixture,
        },
    ]
}

/// Runs every fixture. Errors (as opposed to failures) are propagated.
pub fn run_all() -> Result<Vec<MutationOutcome>> {
    fixtures()
        .into_iter()
        .map(|m| Ok(MutationOutcome { report: m.run()?, mutation: m }))
        .collect()
}

fn sets(n: usize) -> Vec<FinSetObj> {
    (0..=n).map(FinSetObj::range).collect()
}

fn all_maps(objs: &[FinSetObj]) -> Vec<FinFn> {
    let mut out = Vec::new();
    for a in objs {
        for b in objs {
            out.extend(FinFn::all(a, b));
        }
    }
    out
}

/// `f` followed by the permutation of its codomain given on the first
/// `cycle.len()` indices; unchanged when the codomain is too small.
fn permute_after(f: &FinFn, cycle: &[usize]) -> Result<FinFn> {
    let n = f.cod().len();
    if n < cycle.len() {
        return Ok(f.clone());
    }
    let table = (0..n).map(|i| if i < cycle.len() { cycle[i] } else { i }).collect();
    f.then(&FinFn::from_indices(f.cod().clone(), f.cod().clone(), table)?)
}

fn transposed(f: &FinFn) -> Result<FinFn> {
    permute_after(f, &[1, 0])
}

fn category_fixture() -> Result<CheckReport> {
    let z3 = MonoidTable::cyclic(3);
    let mut c = FinPresCat::from_monoid(z3.carrier().elements().to_vec(), &z3.rows(), 0)?;
    c.set_composite(1, 1, 0)?;
    check_category_laws(&c, &c.all_arrows())
}

fn functor_fixture() -> Result<CheckReport> {
    let z3 = MonoidTable::cyclic(3);
    let c = FinPresCat::from_monoid(z3.carrier().elements().to_vec(), &z3.rows(), 0)?;
    let three = FinSetObj::range(3);
    let f = FnFunctor {
        source: c.clone(),
        target: FinSet,
        obj: |_: &usize| Ok(FinSetObj::range(3)),
        mor: |k: &usize| {
            let by = if *k == 2 { 1 } else { *k };
            FinFn::from_indices(three.clone(), three.clone(), (0..3).map(|i| (i + by) % 3).collect())
        },
    };
    check_functor_laws(&f, &[0], &c.all_arrows())
}

fn naturality_fixture() -> Result<CheckReport> {
    let objs: Vec<FinSetObj> = (1..=2).map(FinSetObj::range).collect();
    let family = NatFamily {
        name: String::from("first element"),
        source: IdentityFunctor(FinSet),
        target: IdentityFunctor(FinSet),
        component: |a: &FinSetObj| FinFn::from_indices(a.clone(), a.clone(), vec![0; a.len()]),
    };
    check_naturality(&family, &all_maps(&objs))
}

fn bifunctor_fixture() -> Result<CheckReport> {
    let b = FnBifunctor {
        left: FinSet,
        right: FinSet,
        target: FinSet,
        obj: |a: &FinSetObj, b: &FinSetObj| Ok(product(a, b).obj),
        mor: |f: &FinFn, g: &FinFn| {
            if f.is_identity() || g.is_identity() || g.dom().is_empty() {
                return Ok(product_map(f, g));
            }
            let first = g.image_index(0);
            let k = FinFn::from_indices(g.dom().clone(), g.cod().clone(), vec![first; g.dom().len()])?;
            Ok(product_map(f, &k))
        },
    };
    let maps = all_maps(&sets(2));
    check_bifunctor_laws(&b, &maps, &maps)
}

fn z2() -> MonoidTable {
    MonoidTable::cyclic(2)
}

/// The Z2 warping with `ρ(a) = ((1, a), *)`.
struct OddRightUnitor(MonoidWarping);

impl SkewMonoidal for OddRightUnitor {
    type Cat = FinSet;

    fn category(&self) -> &FinSet {
        &FinSet
    }
    fn orientation(&self) -> Orientation {
        Orientation::Left
    }
    fn unit(&self) -> FinSetObj {
        self.0.unit()
    }
    fn tensor(&self, a: &FinSetObj, b: &FinSetObj) -> Result<FinSetObj> {
        self.0.tensor(a, b)
    }
    fn tensor_mor(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        self.0.tensor_mor(f, g)
    }
    fn associator(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> Result<FinFn> {
        self.0.associator(a, b, c)
    }
    fn left_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        self.0.left_unitor(a)
    }
    fn right_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        let cod = self.0.tensor(a, &self.0.unit())?;
        FinFn::from_fn(a.clone(), cod, |x| tensor_label(Label::Int(1), x.clone(), Label::Point))
    }
}

fn skew_fixture() -> Result<CheckReport> {
    let m = z2();
    let s = monoid_warping(&m, &mset_palette(&m, 1, 1), &sets(2))?;
    check_skew_monoidal(&OddRightUnitor(s), &sets(2))
}

/// Cartesian sets with the associator at `(2, 2, 2)` followed by a
/// transposition of its codomain.
#[derive(Clone, Copy, Debug, Default)]
pub struct TwistedCartesian;

impl SkewMonoidal for TwistedCartesian {
    type Cat = FinSet;

    fn category(&self) -> &FinSet {
        &FinSet
    }
    fn orientation(&self) -> Orientation {
        Orientation::Left
    }
    fn unit(&self) -> FinSetObj {
        CartesianFinSet.unit()
    }
    fn tensor(&self, a: &FinSetObj, b: &FinSetObj) -> Result<FinSetObj> {
        CartesianFinSet.tensor(a, b)
    }
    fn tensor_mor(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        CartesianFinSet.tensor_mor(f, g)
    }
    fn associator(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> Result<FinFn> {
        let g = CartesianFinSet.associator(a, b, c)?;
        let two = FinSetObj::range(2);
        if *a == two && *b == two && *c == two {
            return transposed(&g);
        }
        Ok(g)
    }
    fn left_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        CartesianFinSet.left_unitor(a)
    }
    fn right_unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        CartesianFinSet.right_unitor(a)
    }
}

fn broken_pentagon_fixture() -> Result<CheckReport> {
    let p = sets(2);
    let s = self_action_instance(TwistedCartesian, &p)?;
    check_skew_monoidal(&s, &p)
}

fn skew_naturality_fixture() -> Result<CheckReport> {
    let p = sets(2);
    check_skew_naturality(&TwistedCartesian, &p, &all_maps(&p))
}

/// The Z2 action with `u : I * A → A` collapsed onto the first element.
struct ConstantUnitor(MonoidAction);

impl LeftAction for ConstantUnitor {
    type Acting = MSetCartesian;
    type Carrier = FinSet;

    fn acting(&self) -> &MSetCartesian {
        self.0.acting()
    }
    fn carrier(&self) -> &FinSet {
        &FinSet
    }
    fn act(&self, x: &MSetObj, b: &FinSetObj) -> Result<FinSetObj> {
        self.0.act(x, b)
    }
    fn act_mor(&self, f: &<crate::instances::MSetCat as Category>::Mor, g: &FinFn) -> Result<FinFn> {
        self.0.act_mor(f, g)
    }
    fn multiplicator(&self, x: &MSetObj, y: &MSetObj, a: &FinSetObj) -> Result<FinFn> {
        self.0.multiplicator(x, y, a)
    }
    fn unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        let u = self.0.unitor(a)?;
        if a.is_empty() {
            return Ok(u);
        }
        FinFn::from_indices(u.dom().clone(), a.clone(), vec![0; u.dom().len()])
    }
}

fn strong_action_fixture() -> Result<CheckReport> {
    let m = z2();
    let l = ConstantUnitor(MonoidAction(MSetCartesian::new(m.clone())));
    check_strong_action(&l, &mset_palette(&m, 1, 1), &sets(2))
}

/// Free ⊣ forgetful with the unit moved off the identity element, either
/// everywhere or only at the element `0`.
#[derive(Clone, Debug)]
struct ShiftedUnit {
    inner: FreeForgetful,
    only_zero: bool,
}

impl ShiftedUnit {
    fn new(only_zero: bool) -> Self {
        ShiftedUnit { inner: FreeForgetful::new(z2()), only_zero }
    }
}

impl Adjunction for ShiftedUnit {
    type Source = FinSet;
    type Target = crate::instances::MSetCat;

    fn source(&self) -> &FinSet {
        &FinSet
    }
    fn target(&self) -> &crate::instances::MSetCat {
        self.inner.target()
    }
    fn left_obj(&self, a: &FinSetObj) -> Result<MSetObj> {
        self.inner.left_obj(a)
    }
    fn left_mor(&self, f: &FinFn) -> Result<<crate::instances::MSetCat as Category>::Mor> {
        self.inner.left_mor(f)
    }
    fn right_obj(&self, x: &MSetObj) -> Result<FinSetObj> {
        self.inner.right_obj(x)
    }
    fn right_mor(&self, g: &<crate::instances::MSetCat as Category>::Mor) -> Result<FinFn> {
        self.inner.right_mor(g)
    }
    fn unit(&self, a: &FinSetObj) -> Result<FinFn> {
        let u = self.inner.unit(a)?;
        let only_zero = self.only_zero;
        FinFn::from_fn(a.clone(), u.cod().clone(), |x| {
            if only_zero && *x != Label::Int(0) {
                tensor_label(Label::Int(0), x.clone(), Label::Point)
            } else {
                tensor_label(Label::Int(1), x.clone(), Label::Point)
            }
        })
    }
    fn counit(&self, x: &MSetObj) -> Result<<crate::instances::MSetCat as Category>::Mor> {
        self.inner.counit(x)
    }
}

fn triangles_fixture() -> Result<CheckReport> {
    let m = z2();
    check_adjunction_triangles(&ShiftedUnit::new(false), &sets(2), &mset_palette(&m, 2, 1))
}

fn round_trip_fixture() -> Result<CheckReport> {
    let m = z2();
    check_transpose_round_trip(&ShiftedUnit::new(false), &sets(1), &mset_palette(&m, 1, 1), 16)
}

fn adjunction_naturality_fixture() -> Result<CheckReport> {
    let m = z2();
    let adj = ShiftedUnit::new(true);
    let p = sets(2);
    let vs = mset_palette(&m, 1, 1);
    let mut varrows = Vec::new();
    for x in &vs {
        for y in &vs {
            varrows.extend(adj.target().hom(x, y, 64).unwrap_or_default());
        }
    }
    check_adjunction_naturality(&adj, &p, &all_maps(&p), &vs, &varrows)
}

fn shifted_instance() -> ActionSkew<MonoidAction, ShiftedUnit> {
    ActionSkew::new(MonoidAction(MSetCartesian::new(z2())), ShiftedUnit::new(false), FinSetObj::point())
}

fn preflight_fixture() -> Result<CheckReport> {
    shifted_instance().preflight(&mset_palette(&z2(), 1, 1), &sets(2))
}

fn fusion_fixture() -> Result<CheckReport> {
    shifted_instance().check_fusion(&mset_palette(&z2(), 1, 1), &sets(1))
}

/// A monoidal functor into sets whose binary map is followed by a
/// transposition.
struct TwistedBinary<F>(F);

impl<F> MonoidalFunctor for TwistedBinary<F>
where
    F: MonoidalFunctor,
    F::Tgt: SkewMonoidal<Cat = FinSet>,
{
    type Src = F::Src;
    type Tgt = F::Tgt;

    fn source(&self) -> &F::Src {
        self.0.source()
    }
    fn target(&self) -> &F::Tgt {
        self.0.target()
    }
    fn direction(&self) -> Direction {
        self.0.direction()
    }
    fn obj(&self, a: &SkObj<F::Src>) -> Result<FinSetObj> {
        self.0.obj(a)
    }
    fn mor(&self, f: &SkMor<F::Src>) -> Result<FinFn> {
        self.0.mor(f)
    }
    fn binary(&self, a: &SkObj<F::Src>, b: &SkObj<F::Src>) -> Result<FinFn> {
        transposed(&self.0.binary(a, b)?)
    }
    fn nullary(&self) -> Result<FinFn> {
        self.0.nullary()
    }
}

fn lax_fixture() -> Result<CheckReport> {
    let p = sets(2);
    let s = self_action_instance(CartesianFinSet, &p)?;
    check_lax_monoidal(&TwistedBinary(LaxRightAdjoint(&s)), &p)
}

fn oplax_fixture() -> Result<CheckReport> {
    let p = sets(2);
    let s = self_action_instance(CartesianFinSet, &p)?;
    check_oplax_monoidal(&TwistedBinary(OplaxLeftAdjoint(&s)), &p)
}

/// The cartesian self-action with `f * id_B` collapsed to a constant when
/// `f` has at least two elements in its domain.
#[derive(Clone, Debug)]
struct CollapsingAction;

impl LeftAction for CollapsingAction {
    type Acting = CartesianFinSet;
    type Carrier = FinSet;

    fn acting(&self) -> &CartesianFinSet {
        &CartesianFinSet
    }
    fn carrier(&self) -> &FinSet {
        &FinSet
    }
    fn act(&self, x: &FinSetObj, b: &FinSetObj) -> Result<FinSetObj> {
        CartesianFinSet.tensor(x, b)
    }
    fn act_mor(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        let fg = CartesianFinSet.tensor_mor(f, g)?;
        if g.is_identity() && f.dom().len() >= 2 && !fg.dom().is_empty() {
            return FinFn::from_indices(fg.dom().clone(), fg.cod().clone(), vec![0; fg.dom().len()]);
        }
        Ok(fg)
    }
    fn multiplicator(&self, x: &FinSetObj, y: &FinSetObj, a: &FinSetObj) -> Result<FinFn> {
        CartesianFinSet.associator(x, y, a)
    }
    fn unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        CartesianFinSet.left_unitor(a)
    }
}

fn invertibility_fixture() -> Result<CheckReport> {
    let s = ActionSkew::new(CollapsingAction, crate::instances::SelfAdjunction(CartesianFinSet), FinSetObj::point());
    Ok(invertibility_probe(&s, &sets(2)[1..])?.implications)
}

#[derive(Clone, Copy, Debug)]
struct TwistedSwap;

impl Braiding for TwistedSwap {
    type Host = CartesianFinSet;

    fn host(&self) -> &CartesianFinSet {
        &CartesianFinSet
    }
    fn braid(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FinFn> {
        transposed(&Swap.braid(x, y)?)
    }
}

fn hexagon_fixture() -> Result<CheckReport> {
    check_hexagons(&TwistedSwap, &sets(2))
}

fn braiding_symmetry_fixture() -> Result<CheckReport> {
    check_braiding_symmetry(&TwistedSwap, &sets(2))
}

/// A skew braiding on a host over sets with every component post-composed
/// by a fixed map of its codomain.
struct AlteredSkewBraiding<B> {
    inner: B,
    alter: fn(&FinFn) -> Result<FinFn>,
}

impl<B> SkewBraiding for AlteredSkewBraiding<B>
where
    B: SkewBraiding,
    <B::Host as SkewMonoidal>::Cat: Category<Obj = FinSetObj, Mor = FinFn>,
{
    type Host = B::Host;

    fn host(&self) -> &B::Host {
        self.inner.host()
    }
    fn side(&self) -> BraidSide {
        self.inner.side()
    }
    fn component(&self, p: &FinSetObj, a: &FinSetObj, b: &FinSetObj) -> Result<FinFn> {
        (self.alter)(&self.inner.component(p, a, b)?)
    }
}

fn right_braiding_fixture() -> Result<CheckReport> {
    let p = sets(2);
    let s = exponential_warping_instance(FinSetObj::range(2), &p)?;
    let b = InducedRightBraiding::new(&s, Swap, &p)?;
    check_right_braiding(&AlteredSkewBraiding { inner: &b, alter: transposed }, &p)
}

fn shift_outer(f: &FinFn) -> Result<FinFn> {
    FinFn::try_from_fn(f.dom().clone(), f.cod().clone(), |x| {
        let y = f.eval(x)?;
        let Some((mb, rest)) = y.as_pair() else { return Ok(y.clone()) };
        let Some((m, b)) = mb.as_pair() else { return Ok(y.clone()) };
        let flipped = match m {
            Label::Int(k) => Label::Int(1 - k),
            other => other.clone(),
        };
        Ok(Label::pair(Label::pair(flipped, b.clone()), rest.clone()))
    })
}

fn left_braiding_fixture() -> Result<CheckReport> {
    let m = z2();
    let p = sets(1);
    let vs = mset_palette(&m, 1, 1);
    let s = monoid_warping(&m, &vs, &p)?;
    let b = InducedLeftBraiding::new(&s, MSetSwap(MSetCartesian::new(m)), &vs)?;
    check_left_braiding(&AlteredSkewBraiding { inner: &b, alter: shift_outer }, &p)
}

fn three_cycle(f: &FinFn) -> Result<FinFn> {
    permute_after(f, &[1, 2, 0])
}

fn symmetry_fixture() -> Result<CheckReport> {
    let p = sets(2);
    let s = exponential_warping_instance(FinSetObj::range(1), &p)?;
    let b = InducedRightBraiding::new(&s, Swap, &p)?;
    check_symmetry(&AlteredSkewBraiding { inner: &b, alter: three_cycle }, &p)
}

/// `⟨A, C⟩ = C^A`, forgetting the monoid factor; the transposes read and
/// write the identity element's slice.
struct ForgetfulRightHom<'a>(&'a MonoidWarping);

impl<'a> InternalHom for ForgetfulRightHom<'a> {
    type Skew = MonoidWarping;

    fn skew(&self) -> &MonoidWarping {
        self.0
    }
    fn side(&self) -> ClosedSide {
        ClosedSide::Right
    }
    fn hom_obj(&self, a: &FinSetObj, c: &FinSetObj) -> Result<FinSetObj> {
        Ok(exponential(a, c).obj)
    }
    fn hom_mor(&self, y: &FinFn, z: &FinFn) -> Result<FinFn> {
        exponential(y.cod(), z.dom()).map(&exponential(y.dom(), z.cod()), y, z)
    }
    fn transpose(&self, b: &FinSetObj, a: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        let e = exponential(a, f.cod());
        FinFn::try_from_fn(b.clone(), e.obj.clone(), |y| {
            let row = a.iter().map(|x| Ok(f.eval(&tensor_label(Label::Int(0), x.clone(), y.clone()))?.clone()));
            Ok(Label::Table(row.collect::<Result<Vec<_>>>()?))
        })
    }
    fn untranspose(&self, b: &FinSetObj, a: &FinSetObj, c: &FinSetObj, g: &FinFn) -> Result<FinFn> {
        let e = exponential(a, c);
        FinFn::try_from_fn(self.0.tensor(a, b)?, c.clone(), |l| {
            let (ma, y) = l.as_pair().expect("tensor label");
            let (_, x) = ma.as_pair().expect("tensor label");
            Ok(e.function_of(g.eval(y)?)?.eval(x)?.clone())
        })
    }
}

/// `⟨B, C⟩ = C^B × 1`, forgetting the cofree step.
struct ForgetfulLeftHom<'a>(&'a MonoidWarping);

impl<'a> InternalHom for ForgetfulLeftHom<'a> {
    type Skew = MonoidWarping;

    fn skew(&self) -> &MonoidWarping {
        self.0
    }
    fn side(&self) -> ClosedSide {
        ClosedSide::Left
    }
    fn hom_obj(&self, b: &FinSetObj, c: &FinSetObj) -> Result<FinSetObj> {
        Ok(product(&exponential(b, c).obj, &FinSetObj::point()).obj)
    }
    fn hom_mor(&self, y: &FinFn, z: &FinFn) -> Result<FinFn> {
        let inner = exponential(y.cod(), z.dom()).map(&exponential(y.dom(), z.cod()), y, z)?;
        Ok(product_map(&inner, &FinFn::identity(&FinSetObj::point())))
    }
    fn transpose(&self, a: &FinSetObj, b: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        let cod = self.hom_obj(b, f.cod())?;
        FinFn::try_from_fn(a.clone(), cod, |x| {
            let row = b.iter().map(|y| Ok(f.eval(&tensor_label(Label::Int(0), x.clone(), y.clone()))?.clone()));
            Ok(Label::pair(Label::Table(row.collect::<Result<Vec<_>>>()?), Label::Point))
        })
    }
    fn untranspose(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj, g: &FinFn) -> Result<FinFn> {
        let e = exponential(b, c);
        FinFn::try_from_fn(self.0.tensor(a, b)?, c.clone(), |l| {
            let (na, y) = l.as_pair().expect("tensor label");
            let (_, x) = na.as_pair().expect("tensor label");
            let (phi, _) = g.eval(x)?.as_pair().expect("hom label");
            Ok(e.function_of(phi)?.eval(y)?.clone())
        })
    }
}

fn right_closed_fixture() -> Result<CheckReport> {
    let m = z2();
    let p = sets(2);
    let s = monoid_warping(&m, &mset_palette(&m, 1, 1), &p)?;
    check_closedness(&ForgetfulRightHom(&s), &p, &all_maps(&p), 1 << 12)
}

fn left_closed_fixture() -> Result<CheckReport> {
    let m = z2();
    let p = sets(2);
    let s = monoid_warping(&m, &mset_palette(&m, 1, 1), &p)?;
    check_closedness(&ForgetfulLeftHom(&s), &p, &all_maps(&p), 1 << 12)
}

/// One line per fixture, for reports.
pub fn describe(o: &MutationOutcome) -> String {
    format!(
        "{} [{}]: {} failure(s) of {} instance(s)",
        o.mutation.name,
        o.mutation.suite,
        o.report.failures.len(),
        o.report.instance_count()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_is_caught() {
        for o in run_all().unwrap() {
            assert!(o.caught(), "{} passed {}", o.mutation.name, o.mutation.suite);
        }
    }

    #[test]
    fn fixtures_cover_every_suite() {
        let suites: Vec<&str> = fixtures().iter().map(|m| m.suite).collect();
        for s in [
            "category",
            "functor",
            "bifunctor",
            "skew monoidal",
            "skew monoidal naturality",
            "strong action",
            "adjunction",
            "adjunction naturality",
            "transpose round trip",
            "lax monoidal",
            "oplax monoidal",
            "fusion",
            "invertibility",
            "braiding",
            "braiding symmetry",
            "right braiding",
            "left braiding",
            "symmetry",
            "left closed",
            "right closed",
        ] {
            assert!(suites.contains(&s), "{s}");
        }
    }
}
