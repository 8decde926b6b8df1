//! Functor categories `[C, FinSet]` for a finite `C`, acted on by
//! endofunctors of `FinSet` through postcomposition. The left adjoint of
//! `(−) ∘ J` is the pointwise left Kan extension along `J`, so the tensor is
//! `G ⊛ F = Lan_J G ∘ F` with unit `J`.
//!
//! Endofunctors are formal composites of `Lan_J G` atoms, evaluated on
//! demand at whatever carrier a composite needs. Composition of atoms is
//! concatenation, so the action is strict and `m`, `u` are identities.
//! Two transformations between endofunctors are compared at a fixed list of
//! sample carriers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::coherence::{Adjunction, LeftAction, Orientation, SkewMonoidal};
use crate::construction::{build_ll, LeftLeft};
use crate::error::{Error, Result};
use crate::finset::{graph_colimit, Colimit, FinFn, FinSetObj, Inversion};
use crate::kernel::{Category, FinPresCat, FunctorCat, NatTrans, SetFunctor};
use crate::label::Label;
use crate::report::Witness;

/// `Lan_J G` evaluated at one carrier `d`: the colimit of `G` over the
/// comma category `(J ↓ d)`.
#[derive(Clone, Debug)]
pub struct LanEvaluation {
    pub colimit: Colimit,
    /// The comma object `(c, f : Jc → d)` behind each summand.
    pub comma: Vec<(usize, FinFn)>,
    index: BTreeMap<(usize, Vec<usize>), usize>,
}

impl LanEvaluation {
    pub fn carrier(&self) -> &FinSetObj {
        &self.colimit.obj
    }

    /// The summand of the comma object `(c, f)`.
    pub fn summand(&self, c: usize, f: &FinFn) -> Result<usize> {
        self.index
            .get(&(c, f.table().to_vec()))
            .copied()
            .ok_or_else(|| Error::structure(format!("no comma object ({c}, {f:?})")))
    }

    /// The class of `x ∈ G c` sitting over `f : Jc → d`.
    pub fn class_of(&self, c: usize, f: &FinFn, x: &Label) -> Result<Label> {
        Ok(self.colimit.injections[self.summand(c, f)?].eval(x)?.clone())
    }
}

/// Pointwise left Kan extension of `g` along `j`, evaluated at `d`.
pub fn left_kan_extension(j: &SetFunctor, g: &SetFunctor, d: &FinSetObj) -> Result<LanEvaluation> {
    let shape = j.shape();
    if g.shape() != shape {
        return Err(Error::Functor(format!("{g} and {j} have different shapes")));
    }
    let mut names = Vec::new();
    let mut objects = Vec::new();
    let mut comma = Vec::new();
    let mut index = BTreeMap::new();
    for c in 0..shape.object_count() {
        for f in FinFn::all(j.at(c), d) {
            index.insert((c, f.table().to_vec()), comma.len());
            names.push(Label::pair(shape.object_name(c).clone(), f.to_table_label()));
            objects.push(g.at(c).clone());
            comma.push((c, f));
        }
    }
    // an arrow k : c → c' relates (c, f' ∘ Jk) to (c', f')
    let mut edges = Vec::new();
    for k in shape.all_arrows() {
        if shape.is_identity(k) {
            continue;
        }
        let (c, c2) = (shape.arrow_dom(k), shape.arrow_cod(k));
        for (t, (ct, f2)) in comma.iter().enumerate() {
            if *ct != c2 {
                continue;
            }
            let s = index[&(c, j.on_arrow(k).then(f2)?.table().to_vec())];
            edges.push((s, t, g.on_arrow(k)));
        }
    }
    let colimit = graph_colimit(&names, &objects, &edges)?;
    Ok(LanEvaluation { colimit, comma, index })
}

/// One `Lan_J G` factor, with its evaluations cached per carrier.
pub struct LanAtom {
    j: SetFunctor,
    g: SetFunctor,
    memo: RefCell<BTreeMap<FinSetObj, Rc<LanEvaluation>>>,
}

impl LanAtom {
    fn new(j: SetFunctor, g: SetFunctor) -> Self {
        LanAtom { j, g, memo: RefCell::new(BTreeMap::new()) }
    }

    pub fn functor(&self) -> &SetFunctor {
        &self.g
    }

    pub fn eval(&self, d: &FinSetObj) -> Result<Rc<LanEvaluation>> {
        if let Some(e) = self.memo.borrow().get(d) {
            return Ok(e.clone());
        }
        let e = Rc::new(left_kan_extension(&self.j, &self.g, d)?);
        self.memo.borrow_mut().insert(d.clone(), e.clone());
        Ok(e)
    }

    /// `Lan_J G (h)`: the class over `f` goes to the class over `h ∘ f`.
    pub fn map(&self, h: &FinFn) -> Result<FinFn> {
        let (from, to) = (self.eval(h.dom())?, self.eval(h.cod())?);
        let legs = from
            .comma
            .iter()
            .map(|(c, f)| {
                // `f` lands in `h.dom()`, which `eval` has already matched.
                let moved: Vec<usize> = f.table().iter().map(|&i| h.image_index(i)).collect();
                let k = to.index.get(&(*c, moved)).copied().ok_or_else(|| Error::structure("comma object lost under a map"))?;
                Ok(to.colimit.injections[k].clone())
            })
            .collect::<Result<Vec<_>>>()?;
        factor(&from, &legs, &to.colimit.obj)
    }
}

fn factor(e: &LanEvaluation, legs: &[FinFn], target: &FinSetObj) -> Result<FinFn> {
    if legs.is_empty() {
        return FinFn::from_indices(e.colimit.obj.clone(), target.clone(), Vec::new());
    }
    e.colimit.factor(legs)
}

impl PartialEq for LanAtom {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.j == other.j
    }
}

impl fmt::Debug for LanAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lan({})", self.g)
    }
}

/// A composite `Lan_J G₁ ∘ ⋯ ∘ Lan_J Gₙ`; the empty composite is the
/// identity.
#[derive(Clone, PartialEq)]
pub struct Endo {
    atoms: Vec<Rc<LanAtom>>,
}

impl Endo {
    pub fn identity() -> Self {
        Endo { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[Rc<LanAtom>] {
        &self.atoms
    }

    pub fn then_apply(&self, inner: &Endo) -> Endo {
        let mut atoms = self.atoms.clone();
        atoms.extend(inner.atoms.iter().cloned());
        Endo { atoms }
    }

    pub fn obj(&self, d: &FinSetObj) -> Result<FinSetObj> {
        let mut x = d.clone();
        for a in self.atoms.iter().rev() {
            x = a.eval(&x)?.carrier().clone();
        }
        Ok(x)
    }

    pub fn mor(&self, h: &FinFn) -> Result<FinFn> {
        let mut h = h.clone();
        for a in self.atoms.iter().rev() {
            h = a.map(&h)?;
        }
        Ok(h)
    }

    fn single(&self) -> Result<&Rc<LanAtom>> {
        match self.atoms.as_slice() {
            [a] => Ok(a),
            _ => Err(Error::structure(format!("{self} is not a single Kan extension"))),
        }
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("Id");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("∘")?;
            }
            write!(f, "Lan({})", a.g)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug)]
enum Node {
    Identity,
    Vertical(EndoMor, EndoMor),
    Horizontal(EndoMor, EndoMor),
    LanOf(NatTrans),
    Counit,
    Inverse(EndoMor),
}

/// A transformation between endofunctor composites, evaluated per carrier.
#[derive(Clone, Debug)]
pub struct EndoMor {
    dom: Endo,
    cod: Endo,
    node: Rc<Node>,
}

impl EndoMor {
    fn new(dom: Endo, cod: Endo, node: Node) -> Self {
        EndoMor { dom, cod, node: Rc::new(node) }
    }

    pub fn dom(&self) -> &Endo {
        &self.dom
    }

    pub fn cod(&self) -> &Endo {
        &self.cod
    }

    pub fn component(&self, d: &FinSetObj) -> Result<FinFn> {
        match &*self.node {
            Node::Identity => Ok(FinFn::identity(&self.dom.obj(d)?)),
            Node::Vertical(g, f) => f.component(d)?.then(&g.component(d)?),
            Node::Horizontal(a, b) => {
                // a : X → X', b : Y → Y', at d: X'(b_d) ∘ a_{Yd}
                let first = a.component(&b.dom.obj(d)?)?;
                first.then(&a.cod.mor(&b.component(d)?)?)
            }
            Node::LanOf(t) => {
                let (from, to) = (self.dom.single()?.eval(d)?, self.cod.single()?.eval(d)?);
                let legs = from
                    .comma
                    .iter()
                    .enumerate()
                    .map(|(i, (c, _))| t.component(*c).then(&to.colimit.injections[i]))
                    .collect::<Result<Vec<_>>>()?;
                factor(&from, &legs, to.carrier())
            }
            Node::Counit => {
                let from = self.dom.single()?.eval(d)?;
                let legs = from.comma.iter().map(|(_, f)| self.cod.mor(f)).collect::<Result<Vec<_>>>()?;
                factor(&from, &legs, &self.cod.obj(d)?)
            }
            Node::Inverse(f) => f
                .component(d)?
                .invert()
                .iso()
                .ok_or_else(|| Error::structure(format!("component at {d} is not invertible"))),
        }
    }
}

/// Endofunctor composites and their transformations. Equality of
/// transformations is decided at `samples`.
#[derive(Clone, Debug)]
pub struct EndoCat {
    pub samples: Vec<FinSetObj>,
}

impl Category for EndoCat {
    type Obj = Endo;
    type Mor = EndoMor;

    fn dom(&self, f: &EndoMor) -> Endo {
        f.dom.clone()
    }
    fn cod(&self, f: &EndoMor) -> Endo {
        f.cod.clone()
    }
    fn identity(&self, a: &Endo) -> EndoMor {
        EndoMor::new(a.clone(), a.clone(), Node::Identity)
    }
    fn compose(&self, g: &EndoMor, f: &EndoMor) -> Result<EndoMor> {
        if f.cod != g.dom {
            return Err(Error::Composition { first_cod: format!("{}", f.cod), second_dom: format!("{}", g.dom) });
        }
        Ok(match (&*f.node, &*g.node) {
            (Node::Identity, _) => g.clone(),
            (_, Node::Identity) => f.clone(),
            _ => EndoMor::new(f.dom.clone(), g.cod.clone(), Node::Vertical(g.clone(), f.clone())),
        })
    }
    fn distinguish(&self, f: &EndoMor, g: &EndoMor) -> Result<Option<Witness>> {
        if f.dom != g.dom || f.cod != g.cod {
            return Err(Error::structure(format!("{} and {} are not parallel", self.describe_mor(f), self.describe_mor(g))));
        }
        for d in &self.samples {
            if let Some(w) = f.component(d)?.first_difference(&g.component(d)?)? {
                return Ok(Some(w.in_component(format!("{d}"))));
            }
        }
        Ok(None)
    }
    fn invert(&self, f: &EndoMor) -> Result<Inversion<EndoMor>> {
        for d in &self.samples {
            if let Inversion::NotIso(w) = f.component(d)?.invert() {
                return Ok(Inversion::NotIso(w.in_component(format!("{d}"))));
            }
        }
        Ok(Inversion::Iso(EndoMor::new(f.cod.clone(), f.dom.clone(), Node::Inverse(f.clone()))))
    }
}

/// Endofunctor composites under composition: strict, with unit `Id`.
#[derive(Clone, Debug)]
pub struct EndoComposition {
    cat: EndoCat,
}

impl EndoComposition {
    pub fn new(samples: Vec<FinSetObj>) -> Self {
        EndoComposition { cat: EndoCat { samples } }
    }
}

impl SkewMonoidal for EndoComposition {
    type Cat = EndoCat;

    fn category(&self) -> &EndoCat {
        &self.cat
    }
    fn orientation(&self) -> Orientation {
        Orientation::Left
    }
    fn unit(&self) -> Endo {
        Endo::identity()
    }
    fn tensor(&self, x: &Endo, y: &Endo) -> Result<Endo> {
        Ok(x.then_apply(y))
    }
    fn tensor_mor(&self, f: &EndoMor, g: &EndoMor) -> Result<EndoMor> {
        let (dom, cod) = (f.dom.then_apply(&g.dom), f.cod.then_apply(&g.cod));
        Ok(EndoMor::new(dom, cod, Node::Horizontal(f.clone(), g.clone())))
    }
    fn associator(&self, x: &Endo, y: &Endo, z: &Endo) -> Result<EndoMor> {
        Ok(self.cat.identity(&x.then_apply(y).then_apply(z)))
    }
    fn left_unitor(&self, x: &Endo) -> Result<EndoMor> {
        Ok(self.cat.identity(x))
    }
    fn right_unitor(&self, x: &Endo) -> Result<EndoMor> {
        Ok(self.cat.identity(x))
    }
}

/// Postcomposition `X * F = X ∘ F`.
#[derive(Clone, Debug)]
pub struct Postcomposition {
    v: EndoComposition,
    a: FunctorCat,
}

impl Postcomposition {
    pub fn new(v: EndoComposition, a: FunctorCat) -> Self {
        Postcomposition { v, a }
    }
}

fn postcompose(x: &Endo, f: &SetFunctor) -> Result<SetFunctor> {
    if x.atoms.is_empty() {
        return Ok(f.clone());
    }
    f.map_through(format!("{x}∘{f}"), |s| x.obj(s), |h| x.mor(h))
}

impl LeftAction for Postcomposition {
    type Acting = EndoComposition;
    type Carrier = FunctorCat;

    fn acting(&self) -> &EndoComposition {
        &self.v
    }
    fn carrier(&self) -> &FunctorCat {
        &self.a
    }
    fn act(&self, x: &Endo, f: &SetFunctor) -> Result<SetFunctor> {
        postcompose(x, f)
    }
    fn act_mor(&self, t: &EndoMor, a: &NatTrans) -> Result<NatTrans> {
        let (dom, cod) = (postcompose(&t.dom, a.dom())?, postcompose(&t.cod, a.cod())?);
        let comps = (0..self.a.shape.object_count())
            .map(|c| t.component(a.dom().at(c))?.then(&t.cod.mor(a.component(c))?))
            .collect::<Result<Vec<_>>>()?;
        NatTrans::from_components_unchecked(dom, cod, comps)
    }
    fn multiplicator(&self, x: &Endo, y: &Endo, f: &SetFunctor) -> Result<NatTrans> {
        Ok(NatTrans::identity(&postcompose(&x.then_apply(y), f)?))
    }
    fn unitor(&self, f: &SetFunctor) -> Result<NatTrans> {
        Ok(NatTrans::identity(f))
    }
}

/// `Lan_J ⊣ (−) ∘ J`, with unit the comma injection at `(c, id_{Jc})` and
/// counit `[(c, f), x] ↦ X(f)(x)` at `X`.
#[derive(Clone, Debug)]
pub struct KanAdjunction {
    j: SetFunctor,
    a: FunctorCat,
    v: EndoCat,
    atoms: Rc<RefCell<Vec<Rc<LanAtom>>>>,
}

impl KanAdjunction {
    pub fn new(j: SetFunctor, samples: Vec<FinSetObj>) -> Self {
        let a = FunctorCat::new(j.shape().clone());
        KanAdjunction { j, a, v: EndoCat { samples }, atoms: Rc::new(RefCell::new(Vec::new())) }
    }

    pub fn j(&self) -> &SetFunctor {
        &self.j
    }

    /// `Lan_J g`, shared with earlier requests for an equal functor so its
    /// evaluations are computed once.
    pub fn lan(&self, g: &SetFunctor) -> Endo {
        let mut atoms = self.atoms.borrow_mut();
        let atom = match atoms.iter().find(|a| &a.g == g) {
            Some(a) => a.clone(),
            None => {
                let a = Rc::new(LanAtom::new(self.j.clone(), g.clone()));
                atoms.push(a.clone());
                a
            }
        };
        Endo { atoms: vec![atom] }
    }
}

impl Adjunction for KanAdjunction {
    type Source = FunctorCat;
    type Target = EndoCat;

    fn source(&self) -> &FunctorCat {
        &self.a
    }
    fn target(&self) -> &EndoCat {
        &self.v
    }
    fn left_obj(&self, g: &SetFunctor) -> Result<Endo> {
        Ok(self.lan(g))
    }
    fn left_mor(&self, t: &NatTrans) -> Result<EndoMor> {
        Ok(EndoMor::new(self.lan(t.dom()), self.lan(t.cod()), Node::LanOf(t.clone())))
    }
    fn right_obj(&self, x: &Endo) -> Result<SetFunctor> {
        postcompose(x, &self.j)
    }
    fn right_mor(&self, t: &EndoMor) -> Result<NatTrans> {
        let (dom, cod) = (self.right_obj(&t.dom)?, self.right_obj(&t.cod)?);
        let comps = self.j.values().iter().map(|jc| t.component(jc)).collect::<Result<Vec<_>>>()?;
        NatTrans::from_components_unchecked(dom, cod, comps)
    }
    fn unit(&self, g: &SetFunctor) -> Result<NatTrans> {
        let lan = self.lan(g);
        let atom = lan.single()?.clone();
        let cod = self.right_obj(&lan)?;
        let comps = (0..self.a.shape.object_count())
            .map(|c| {
                let e = atom.eval(self.j.at(c))?;
                Ok(e.colimit.injections[e.summand(c, &FinFn::identity(self.j.at(c)))?].clone())
            })
            .collect::<Result<Vec<_>>>()?;
        NatTrans::from_components_unchecked(g.clone(), cod, comps)
    }
    fn counit(&self, x: &Endo) -> Result<EndoMor> {
        Ok(EndoMor::new(self.lan(&self.right_obj(x)?), x.clone(), Node::Counit))
    }
}

pub type KanInstance = LeftLeft<Postcomposition, KanAdjunction>;

/// The endofunctor palette used to validate a Kan instance: `Id` and
/// `Lan_J F` for every palette functor.
pub fn kan_endo_palette(adj: &KanAdjunction, palette: &[SetFunctor]) -> Vec<Endo> {
    let mut out = vec![Endo::identity()];
    out.extend(palette.iter().map(|f| adj.lan(f)));
    out
}

/// `[C, FinSet]` with tensor `G ⊛ F = Lan_J G ∘ F` and unit `J`.
/// Endofunctor transformations are compared at `samples`.
pub fn kan_instance(j: SetFunctor, palette: &[SetFunctor], samples: Vec<FinSetObj>) -> Result<KanInstance> {
    for f in palette.iter().chain(core::iter::once(&j)) {
        if f.shape() != j.shape() {
            return Err(Error::Functor(format!("{f} is not on the shape of {j}")));
        }
        f.diagram().validate().map_err(|e| Error::Functor(format!("{f}: {e}")))?;
    }
    let adj = KanAdjunction::new(j.clone(), samples.clone());
    let vs = kan_endo_palette(&adj, palette);
    let action = Postcomposition::new(EndoComposition::new(samples), FunctorCat::new(j.shape().clone()));
    build_ll(action, adj, j, &vs, palette)
}

/// Every functor `shape → FinSet` with values among `{0..n}` for `n ≤ max`,
/// named `F0, F1, …` in enumeration order.
pub fn functor_palette(shape: &alloc::sync::Arc<FinPresCat>, max: usize, limit: usize) -> Vec<SetFunctor> {
    let objs: Vec<FinSetObj> = (0..=max).map(FinSetObj::range).collect();
    let k = shape.object_count();
    let gens: Vec<usize> = shape.all_arrows().into_iter().filter(|&a| !shape.is_identity(a)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    'outer: loop {
        let values: Vec<FinSetObj> = choice.iter().map(|&i| objs[i].clone()).collect();
        let spaces: Vec<Vec<FinFn>> =
            gens.iter().map(|&a| FinFn::all(&values[shape.arrow_dom(a)], &values[shape.arrow_cod(a)]).collect()).collect();
        let mut pick = vec![0usize; gens.len()];
        if spaces.iter().all(|s| !s.is_empty()) {
            loop {
                let maps = gens.iter().zip(&pick).enumerate().map(|(i, (&a, &p))| (a, spaces[i][p].clone())).collect();
                if let Ok(f) = SetFunctor::new(shape.clone(), String::new(), values.clone(), maps) {
                    let name = format!("F{}", out.len());
                    out.push(f.named(name));
                    if out.len() >= limit {
                        break 'outer;
                    }
                }
                let mut i = 0;
                while i < pick.len() {
                    pick[i] += 1;
                    if pick[i] < spaces[i].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == pick.len() {
                    break;
                }
            }
        }
        let mut i = 0;
        while i < k {
            choice[i] += 1;
            if choice[i] <= max {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out
}
