//! Warping by a finite monoid `M`: finite `M`-sets act on finite sets by
//! `(X, ·) * B = UX × B`, and the free `M`-set functor `M × (−)` is left
//! adjoint to `X ↦ UX × 1`. The resulting tensor is `A ⊛ B = M × A × B`,
//! with elements labelled `((m, a), b)`.
//!
//! The free action is `m · (n, a) = (m + n, a)`, which makes
//! `γ(((n, ((m, a), b)), c)) = ((n + m, a), ((n, b), c))`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coherence::{Adjunction, Braiding, ClosedSide, InternalHom, LeftAction, Orientation, SkewMonoidal};
use crate::construction::{build_ll, invertibility_probe, LeftLeft};
use crate::error::{Error, Result};
use crate::finset::{exponential, product, product_map, Exponential, FinFn, FinSetObj, Inversion};
use crate::kernel::{Category, FinSet};
use crate::label::Label;
use crate::report::{ProbeReport, Witness};

use super::cartesian::{split, CartesianFinSet, Swap};

/// A finite monoid on `{0, …, n-1}` given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidTable {
    name: String,
    carrier: FinSetObj,
    table: Vec<usize>,
    identity: usize,
}

impl MonoidTable {
    /// Checks closure, two-sided identity and associativity exhaustively.
    pub fn new(name: impl Into<String>, rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Monoid("a monoid has at least one element".into()));
        }
        if identity >= n {
            return Err(Error::Monoid(format!("identity {identity} outside 0..{n}")));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Monoid(format!("row {i} has {} entries, expected {n}", r.len())));
            }
            if let Some(&bad) = r.iter().find(|&&x| x >= n) {
                return Err(Error::Monoid(format!("entry {bad} in row {i} outside 0..{n}")));
            }
        }
        let op = |a: usize, b: usize| rows[a][b];
        for a in 0..n {
            if op(identity, a) != a || op(a, identity) != a {
                return Err(Error::Monoid(format!("{identity} is not a two-sided identity at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return Err(Error::Monoid(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(MonoidTable {
            name: name.into(),
            carrier: FinSetObj::range(n),
            table: rows.into_iter().flatten().collect(),
            identity,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(format!("Z{n}"), rows, 0).expect("cyclic groups are monoids")
    }

    /// `({0, 1}, ∨, 0)`.
    pub fn join() -> Self {
        Self::new("({0,1},∨)", vec![vec![0, 1], vec![1, 1]], 0).expect("join is a monoid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &FinSetObj {
        &self.carrier
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn element(&self, i: usize) -> &Label {
        self.carrier.get(i)
    }

    pub fn index(&self, l: &Label) -> Result<usize> {
        self.carrier
            .index_of(l)
            .ok_or_else(|| Error::NotAnElement { label: format!("{l}"), set: self.name.clone() })
    }

    pub fn is_group(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).any(|b| self.op(a, b) == self.identity && self.op(b, a) == self.identity))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Every monoid of order at most `max_order` up to isomorphism, each
    /// with identity `0`. Found by brute force over tables.
    pub fn curated(max_order: usize) -> Vec<MonoidTable> {
        let mut out = Vec::new();
        for n in 1..=max_order {
            let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
            let total = n.pow(free.len() as u32);
            let mut found: Vec<Vec<Vec<usize>>> = Vec::new();
            for code in 0..total {
                let mut rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| if a == 0 { b } else if b == 0 { a } else { 0 }).collect()).collect();
                let mut c = code;
                for &(a, b) in &free {
                    rows[a][b] = c % n;
                    c /= n;
                }
                if MonoidTable::new("", rows.clone(), 0).is_err() {
                    continue;
                }
                if !found.iter().any(|t| isomorphic(t, &rows)) {
                    found.push(rows);
                }
            }
            for (k, rows) in found.into_iter().enumerate() {
                out.push(MonoidTable::new(format!("M{n}.{k}"), rows, 0).expect("checked above"));
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Some bijection fixing `0` carries one table onto the other.
fn isomorphic(s: &[Vec<usize>], t: &[Vec<usize>]) -> bool {
    let n = s.len();
    permutations(n).into_iter().filter(|p| p[0] == 0).any(|p| {
        (0..n).all(|a| (0..n).all(|b| p[s[a][b]] == t[p[a]][p[b]]))
    })
}

/// A finite set with an action of the monoid, `action[m·|X| + i]` being
/// the index of `m · x_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct MSetObj {
    pub carrier: FinSetObj,
    action: Vec<usize>,
}

impl MSetObj {
    /// Tabulates `act` and checks `0 · x = x` and `(m + n) · x = m · (n · x)`.
    pub fn new(monoid: &MonoidTable, carrier: FinSetObj, mut act: impl FnMut(usize, &Label) -> Result<Label>) -> Result<Self> {
        let mut action = Vec::with_capacity(monoid.order() * carrier.len());
        for m in 0..monoid.order() {
            for x in carrier.iter() {
                let y = act(m, x)?;
                action.push(carrier.index_of(&y).ok_or_else(|| Error::NotAnElement {
                    label: format!("{y}"),
                    set: format!("{carrier}"),
                })?);
            }
        }
        let o = MSetObj { carrier, action };
        let k = o.carrier.len();
        for i in 0..k {
            if o.act(monoid.identity(), i) != i {
                return Err(Error::structure(format!("identity moves {}", o.carrier.get(i))));
            }
            for m in 0..monoid.order() {
                for n in 0..monoid.order() {
                    if o.act(monoid.op(m, n), i) != o.act(m, o.act(n, i)) {
                        return Err(Error::structure(format!("action not compatible at ({m}, {n}, {})", o.carrier.get(i))));
                    }
                }
            }
        }
        Ok(o)
    }

    /// `carrier` with every element fixed.
    pub fn trivial(monoid: &MonoidTable, carrier: FinSetObj) -> Self {
        Self::new(monoid, carrier, |_, x| Ok(x.clone())).expect("trivial actions are actions")
    }

    /// `M × A` with `m · (n, a) = (m + n, a)`.
    pub fn free(monoid: &MonoidTable, a: &FinSetObj) -> Self {
        Self::new(monoid, product(monoid.carrier(), a).obj, |m, l| {
            let (n, x) = split(l)?;
            Ok(Label::pair(monoid.element(monoid.op(m, monoid.index(n)?)).clone(), x.clone()))
        })
        .expect("free actions are actions")
    }

    pub fn act(&self, m: usize, i: usize) -> usize {
        self.action[m * self.carrier.len() + i]
    }

    pub fn act_label(&self, m: usize, x: &Label) -> Result<&Label> {
        let i = self.carrier.require(x)?;
        Ok(self.carrier.get(self.act(m, i)))
    }

    pub fn is_trivial(&self) -> bool {
        let k = self.carrier.len();
        self.action.iter().enumerate().all(|(p, &j)| p % k.max(1) == j)
    }
}

impl fmt::Display for MSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.carrier)?;
        if self.is_trivial() {
            return Ok(());
        }
        let k = self.carrier.len();
        f.write_str("·[")?;
        for (m, row) in self.action.chunks(k.max(1)).enumerate() {
            if m > 0 {
                f.write_str("|")?;
            }
            for (i, j) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{j}")?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Debug for MSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An equivariant map.
#[derive(Clone, Debug)]
pub struct MSetMor {
    pub dom: MSetObj,
    pub cod: MSetObj,
    pub map: FinFn,
}

impl MSetMor {
    /// Checks boundaries and `f(m · x) = m · f(x)`.
    pub fn new(monoid: &MonoidTable, dom: MSetObj, cod: MSetObj, map: FinFn) -> Result<Self> {
        if map.dom() != &dom.carrier || map.cod() != &cod.carrier {
            return Err(Error::structure(format!("{map:?} does not run {dom} → {cod}")));
        }
        if !equivariant(monoid, &dom, &cod, &map) {
            return Err(Error::structure(format!("{map:?} is not equivariant")));
        }
        Ok(MSetMor { dom, cod, map })
    }

    /// Wraps a map known to be equivariant.
    fn trusted(dom: MSetObj, cod: MSetObj, map: FinFn) -> Self {
        MSetMor { dom, cod, map }
    }
}

fn equivariant(monoid: &MonoidTable, dom: &MSetObj, cod: &MSetObj, map: &FinFn) -> bool {
    (0..monoid.order()).all(|m| (0..dom.carrier.len()).all(|i| map.image_index(dom.act(m, i)) == cod.act(m, map.image_index(i))))
}

/// Finite `M`-sets and equivariant maps.
#[derive(Clone, Debug)]
pub struct MSetCat {
    pub monoid: MonoidTable,
}

impl Category for MSetCat {
    type Obj = MSetObj;
    type Mor = MSetMor;

    fn dom(&self, f: &MSetMor) -> MSetObj {
        f.dom.clone()
    }
    fn cod(&self, f: &MSetMor) -> MSetObj {
        f.cod.clone()
    }
    fn identity(&self, a: &MSetObj) -> MSetMor {
        MSetMor::trusted(a.clone(), a.clone(), FinFn::identity(&a.carrier))
    }
    fn compose(&self, g: &MSetMor, f: &MSetMor) -> Result<MSetMor> {
        if f.cod != g.dom {
            return Err(Error::Composition { first_cod: format!("{}", f.cod), second_dom: format!("{}", g.dom) });
        }
        Ok(MSetMor::trusted(f.dom.clone(), g.cod.clone(), f.map.then(&g.map)?))
    }
    fn distinguish(&self, f: &MSetMor, g: &MSetMor) -> Result<Option<Witness>> {
        if f.dom != g.dom || f.cod != g.cod {
            return Err(Error::structure(format!("{} and {} are not parallel", self.describe_mor(f), self.describe_mor(g))));
        }
        f.map.first_difference(&g.map)
    }
    fn invert(&self, f: &MSetMor) -> Result<Inversion<MSetMor>> {
        Ok(f.map.invert().map(|inv| MSetMor::trusted(f.cod.clone(), f.dom.clone(), inv)))
    }
    fn hom(&self, a: &MSetObj, b: &MSetObj, limit: usize) -> Option<Vec<MSetMor>> {
        if FinFn::count(&a.carrier, &b.carrier)? > limit.saturating_mul(64) {
            return None;
        }
        let out: Vec<MSetMor> = FinFn::all(&a.carrier, &b.carrier)
            .filter(|f| equivariant(&self.monoid, a, b, f))
            .map(|f| MSetMor::trusted(a.clone(), b.clone(), f))
            .collect();
        (out.len() <= limit).then_some(out)
    }
}

/// `M`-sets with the cartesian product (diagonal action) and unit `{*}`.
#[derive(Clone, Debug)]
pub struct MSetCartesian {
    cat: MSetCat,
}

impl MSetCartesian {
    pub fn new(monoid: MonoidTable) -> Self {
        MSetCartesian { cat: MSetCat { monoid } }
    }

    pub fn monoid(&self) -> &MonoidTable {
        &self.cat.monoid
    }

    fn lift(&self, dom: MSetObj, cod: MSetObj, f: Result<FinFn>) -> Result<MSetMor> {
        Ok(MSetMor::trusted(dom, cod, f?))
    }
}

impl SkewMonoidal for MSetCartesian {
    type Cat = MSetCat;

    fn category(&self) -> &MSetCat {
        &self.cat
    }
    fn orientation(&self) -> Orientation {
        Orientation::Left
    }
    fn unit(&self) -> MSetObj {
        MSetObj::trivial(self.monoid(), FinSetObj::point())
    }
    fn tensor(&self, x: &MSetObj, y: &MSetObj) -> Result<MSetObj> {
        MSetObj::new(self.monoid(), product(&x.carrier, &y.carrier).obj, |m, l| {
            let (a, b) = split(l)?;
            Ok(Label::pair(x.act_label(m, a)?.clone(), y.act_label(m, b)?.clone()))
        })
    }
    fn tensor_mor(&self, f: &MSetMor, g: &MSetMor) -> Result<MSetMor> {
        let (dom, cod) = (self.tensor(&f.dom, &g.dom)?, self.tensor(&f.cod, &g.cod)?);
        Ok(MSetMor::trusted(dom, cod, product_map(&f.map, &g.map)))
    }
    fn associator(&self, x: &MSetObj, y: &MSetObj, z: &MSetObj) -> Result<MSetMor> {
        let dom = self.tensor(&self.tensor(x, y)?, z)?;
        let cod = self.tensor(x, &self.tensor(y, z)?)?;
        self.lift(dom, cod, CartesianFinSet.associator(&x.carrier, &y.carrier, &z.carrier))
    }
    fn left_unitor(&self, x: &MSetObj) -> Result<MSetMor> {
        let dom = self.tensor(&self.unit(), x)?;
        self.lift(dom, x.clone(), CartesianFinSet.left_unitor(&x.carrier))
    }
    fn right_unitor(&self, x: &MSetObj) -> Result<MSetMor> {
        let cod = self.tensor(x, &self.unit())?;
        self.lift(x.clone(), cod, CartesianFinSet.right_unitor(&x.carrier))
    }
}

/// The swap symmetry of `M`-sets.
#[derive(Clone, Debug)]
pub struct MSetSwap(pub MSetCartesian);

impl Braiding for MSetSwap {
    type Host = MSetCartesian;

    fn host(&self) -> &MSetCartesian {
        &self.0
    }
    fn braid(&self, x: &MSetObj, y: &MSetObj) -> Result<MSetMor> {
        let (dom, cod) = (self.0.tensor(x, y)?, self.0.tensor(y, x)?);
        Ok(MSetMor::trusted(dom, cod, Swap.braid(&x.carrier, &y.carrier)?))
    }
}

/// `(X, ·) * B = UX × B`, with the cartesian associator and unitor.
#[derive(Clone, Debug)]
pub struct MonoidAction(pub MSetCartesian);

impl LeftAction for MonoidAction {
    type Acting = MSetCartesian;
    type Carrier = FinSet;

    fn acting(&self) -> &MSetCartesian {
        &self.0
    }
    fn carrier(&self) -> &FinSet {
        &FinSet
    }
    fn act(&self, x: &MSetObj, b: &FinSetObj) -> Result<FinSetObj> {
        Ok(product(&x.carrier, b).obj)
    }
    fn act_mor(&self, f: &MSetMor, g: &FinFn) -> Result<FinFn> {
        Ok(product_map(&f.map, g))
    }
    fn multiplicator(&self, x: &MSetObj, y: &MSetObj, a: &FinSetObj) -> Result<FinFn> {
        CartesianFinSet.associator(&x.carrier, &y.carrier, a)
    }
    fn unitor(&self, a: &FinSetObj) -> Result<FinFn> {
        CartesianFinSet.left_unitor(a)
    }
}

/// Free `M`-set `⊣` forgetful-times-point: `M × A ⊣ UX × 1`, with
/// `η(a) = ((0, a), *)` and `ε(m, (x, *)) = m · x`.
#[derive(Clone, Debug)]
pub struct FreeForgetful {
    cat: MSetCat,
}

impl FreeForgetful {
    pub fn new(monoid: MonoidTable) -> Self {
        FreeForgetful { cat: MSetCat { monoid } }
    }
}

impl Adjunction for FreeForgetful {
    type Source = FinSet;
    type Target = MSetCat;

    fn source(&self) -> &FinSet {
        &FinSet
    }
    fn target(&self) -> &MSetCat {
        &self.cat
    }
    fn left_obj(&self, a: &FinSetObj) -> Result<MSetObj> {
        Ok(MSetObj::free(&self.cat.monoid, a))
    }
    fn left_mor(&self, f: &FinFn) -> Result<MSetMor> {
        let m = &self.cat.monoid;
        let (dom, cod) = (MSetObj::free(m, f.dom()), MSetObj::free(m, f.cod()));
        Ok(MSetMor::trusted(dom, cod, product_map(&FinFn::identity(m.carrier()), f)))
    }
    fn right_obj(&self, x: &MSetObj) -> Result<FinSetObj> {
        Ok(product(&x.carrier, &FinSetObj::point()).obj)
    }
    fn right_mor(&self, g: &MSetMor) -> Result<FinFn> {
        Ok(product_map(&g.map, &FinFn::identity(&FinSetObj::point())))
    }
    fn unit(&self, a: &FinSetObj) -> Result<FinFn> {
        let m = &self.cat.monoid;
        let cod = self.right_obj(&MSetObj::free(m, a))?;
        let zero = m.element(m.identity()).clone();
        FinFn::from_fn(a.clone(), cod, |x| Label::pair(Label::pair(zero.clone(), x.clone()), Label::Point))
    }
    fn counit(&self, x: &MSetObj) -> Result<MSetMor> {
        let m = &self.cat.monoid;
        let dom = MSetObj::free(m, &self.right_obj(x)?);
        let map = FinFn::try_from_fn(dom.carrier.clone(), x.carrier.clone(), |l| {
            let (n, xs) = split(l)?;
            let (y, _) = split(xs)?;
            Ok(x.act_label(m.index(n)?, y)?.clone())
        })?;
        MSetMor::new(m, dom, x.clone(), map)
    }
}

pub type MonoidWarping = LeftLeft<MonoidAction, FreeForgetful>;

/// A palette of `M`-sets: trivial actions on carriers up to `max`, and
/// free `M`-sets on carriers up to `free_max`.
pub fn mset_palette(monoid: &MonoidTable, max: usize, free_max: usize) -> Vec<MSetObj> {
    let mut out: Vec<MSetObj> = (0..=max).map(|n| MSetObj::trivial(monoid, FinSetObj::range(n))).collect();
    for n in 1..=free_max {
        out.push(MSetObj::free(monoid, &FinSetObj::range(n)));
    }
    out
}

/// The warping structure `A ⊛ B = M × A × B` on finite sets, validated on
/// the given palettes.
pub fn monoid_warping(monoid: &MonoidTable, vs: &[MSetObj], objs: &[FinSetObj]) -> Result<MonoidWarping> {
    build_ll(
        MonoidAction(MSetCartesian::new(monoid.clone())),
        FreeForgetful::new(monoid.clone()),
        FinSetObj::point(),
        vs,
        objs,
    )
}

/// Labels `((m, a), b)` of `A ⊛ B`.
pub fn tensor_label(m: Label, a: Label, b: Label) -> Label {
    Label::pair(Label::pair(m, a), b)
}

/// Outcome of [`group_iff_associator_invertible`].
#[derive(Clone, Debug)]
pub struct GroupCheck {
    pub is_group: bool,
    pub associator_invertible: bool,
    /// `(n, m) ↦ (n + m, n)` is a bijection of `M × M`.
    pub shear_bijective: bool,
    pub probe: ProbeReport,
}

fn nonempty(objs: &[FinSetObj]) -> Result<()> {
    if objs.is_empty() || objs.iter().any(|a| a.is_empty()) {
        return Err(Error::structure("the palette must consist of nonempty carriers"));
    }
    Ok(())
}

fn shear_bijective(m: &MonoidTable) -> bool {
    let n = m.order();
    let mut seen = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            let k = m.op(a, b) * n + a;
            if seen[k] {
                return false;
            }
            seen[k] = true;
        }
    }
    true
}

/// Decides whether `M` is a group and whether every palette `γ` component
/// is invertible. The two must agree, as must the shear bijectivity;
/// disagreement is reported as an error.
pub fn group_iff_associator_invertible(monoid: &MonoidTable, objs: &[FinSetObj]) -> Result<GroupCheck> {
    nonempty(objs)?;
    let s = monoid_warping(monoid, &mset_palette(monoid, 1, 1), objs)?;
    let probe = invertibility_probe(&s, objs)?;
    let associator_invertible = probe.entries.iter().filter(|e| e.constraint == "γ").all(|e| e.invertible);
    let out = GroupCheck { is_group: monoid.is_group(), associator_invertible, shear_bijective: shear_bijective(monoid), probe };
    if out.is_group != out.associator_invertible || out.is_group != out.shear_bijective {
        return Err(Error::Monoid(format!(
            "theorem violation for {}: group {}, associator invertible {}, shear bijective {}",
            monoid.name(),
            out.is_group,
            out.associator_invertible,
            out.shear_bijective
        )));
    }
    Ok(out)
}

/// Outcome of [`unit_invertibility`].
#[derive(Clone, Debug)]
pub struct UnitCheck {
    pub trivial: bool,
    pub left_invertible: bool,
    pub right_invertible: bool,
    pub probe: ProbeReport,
}

/// Invertibility of every palette `λ` and `ρ` component, which must hold
/// exactly when `M` is trivial.
pub fn unit_invertibility(monoid: &MonoidTable, objs: &[FinSetObj]) -> Result<UnitCheck> {
    nonempty(objs)?;
    let s = monoid_warping(monoid, &mset_palette(monoid, 1, 1), objs)?;
    let probe = invertibility_probe(&s, objs)?;
    let all = |c: &str| probe.entries.iter().filter(|e| e.constraint == c).all(|e| e.invertible);
    let out = UnitCheck { trivial: monoid.order() == 1, left_invertible: all("λ"), right_invertible: all("ρ"), probe };
    if out.trivial != out.left_invertible || out.trivial != out.right_invertible {
        return Err(Error::Monoid(format!(
            "theorem violation for {}: trivial {}, λ invertible {}, ρ invertible {}",
            monoid.name(),
            out.trivial,
            out.left_invertible,
            out.right_invertible
        )));
    }
    Ok(out)
}

fn free_times(m: &MonoidTable, a: &FinSetObj) -> FinSetObj {
    product(m.carrier(), a).obj
}

fn expect_dom(f: &FinFn, dom: &FinSetObj, what: &str) -> Result<()> {
    if f.dom() != dom {
        return Err(Error::structure(format!("{what}: domain {} is not {dom}", f.dom())));
    }
    Ok(())
}

/// `⟨A, C⟩ = C^(M×A)`, right adjoint to `A ⊛ (−)`.
pub struct RightMonoidHom<'a>(pub &'a MonoidWarping);

impl<'a> RightMonoidHom<'a> {
    fn monoid(&self) -> &MonoidTable {
        self.0.action().acting().monoid()
    }
    fn exp(&self, a: &FinSetObj, c: &FinSetObj) -> Exponential {
        exponential(&free_times(self.monoid(), a), c)
    }
}

impl<'a> InternalHom for RightMonoidHom<'a> {
    type Skew = MonoidWarping;

    fn skew(&self) -> &MonoidWarping {
        self.0
    }
    fn side(&self) -> ClosedSide {
        ClosedSide::Right
    }
    fn hom_obj(&self, a: &FinSetObj, c: &FinSetObj) -> Result<FinSetObj> {
        Ok(self.exp(a, c).obj)
    }
    fn hom_mor(&self, y: &FinFn, z: &FinFn) -> Result<FinFn> {
        let m = self.monoid();
        let (from, to) = (self.exp(y.cod(), z.dom()), self.exp(y.dom(), z.cod()));
        from.map(&to, &product_map(&FinFn::identity(m.carrier()), y), z)
    }
    fn transpose(&self, b: &FinSetObj, a: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        expect_dom(f, &self.0.tensor(a, b)?, "transpose")?;
        let e = self.exp(a, f.cod());
        FinFn::try_from_fn(b.clone(), e.obj.clone(), |y| {
            let row = e.base.iter().map(|ma| Ok(f.eval(&Label::pair(ma.clone(), y.clone()))?.clone()));
            Ok(Label::Table(row.collect::<Result<Vec<_>>>()?))
        })
    }
    fn untranspose(&self, b: &FinSetObj, a: &FinSetObj, c: &FinSetObj, g: &FinFn) -> Result<FinFn> {
        expect_dom(g, b, "untranspose")?;
        let e = self.exp(a, c);
        FinFn::try_from_fn(self.0.tensor(a, b)?, c.clone(), |l| {
            let (ma, y) = split(l)?;
            Ok(e.function_of(g.eval(y)?)?.eval(ma)?.clone())
        })
    }
}

/// `⟨B, C⟩ = (C^B)^M × 1`: the cofree `M`-set on `C^B`, then forgotten.
/// Right adjoint to `(−) ⊛ B`.
pub struct LeftMonoidHom<'a>(pub &'a MonoidWarping);

impl<'a> LeftMonoidHom<'a> {
    fn monoid(&self) -> &MonoidTable {
        self.0.action().acting().monoid()
    }
    fn exps(&self, b: &FinSetObj, c: &FinSetObj) -> (Exponential, Exponential) {
        let inner = exponential(b, c);
        let outer = exponential(self.monoid().carrier(), &inner.obj);
        (inner, outer)
    }
}

impl<'a> InternalHom for LeftMonoidHom<'a> {
    type Skew = MonoidWarping;

    fn skew(&self) -> &MonoidWarping {
        self.0
    }
    fn side(&self) -> ClosedSide {
        ClosedSide::Left
    }
    fn hom_obj(&self, b: &FinSetObj, c: &FinSetObj) -> Result<FinSetObj> {
        Ok(product(&self.exps(b, c).1.obj, &FinSetObj::point()).obj)
    }
    fn hom_mor(&self, y: &FinFn, z: &FinFn) -> Result<FinFn> {
        let (i1, o1) = self.exps(y.cod(), z.dom());
        let (i2, o2) = self.exps(y.dom(), z.cod());
        let inner = i1.map(&i2, y, z)?;
        let outer = o1.map(&o2, &FinFn::identity(self.monoid().carrier()), &inner)?;
        Ok(product_map(&outer, &FinFn::identity(&FinSetObj::point())))
    }
    fn transpose(&self, a: &FinSetObj, b: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        expect_dom(f, &self.0.tensor(a, b)?, "transpose")?;
        let m = self.monoid();
        let cod = self.hom_obj(b, f.cod())?;
        FinFn::try_from_fn(a.clone(), cod, |x| {
            let outer = m.carrier().iter().map(|n| {
                let inner = b.iter().map(|y| Ok(f.eval(&tensor_label(n.clone(), x.clone(), y.clone()))?.clone()));
                Ok(Label::Table(inner.collect::<Result<Vec<_>>>()?))
            });
            Ok(Label::pair(Label::Table(outer.collect::<Result<Vec<_>>>()?), Label::Point))
        })
    }
    fn untranspose(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj, g: &FinFn) -> Result<FinFn> {
        expect_dom(g, a, "untranspose")?;
        let (inner, outer) = self.exps(b, c);
        FinFn::try_from_fn(self.0.tensor(a, b)?, c.clone(), |l| {
            let (na, y) = split(l)?;
            let (n, x) = split(na)?;
            let (phi, _) = split(g.eval(x)?)?;
            let row = outer.function_of(phi)?;
            Ok(inner.function_of(row.eval(n)?)?.eval(y)?.clone())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::{
        check_closedness, check_lax_monoidal, check_left_braiding, check_oplax_monoidal, check_skew_monoidal,
        check_symmetry, SkewBraiding,
    };
    use crate::construction::{InducedLeftBraiding, LaxRightAdjoint, OplaxLeftAdjoint};

    fn sets(n: usize) -> Vec<FinSetObj> {
        (0..=n).map(FinSetObj::range).collect()
    }

    fn int(n: i64) -> Label {
        Label::Int(n)
    }

    fn z2() -> (MonoidTable, MonoidWarping) {
        let m = MonoidTable::cyclic(2);
        let s = monoid_warping(&m, &mset_palette(&m, 2, 1), &sets(2)).unwrap();
        (m, s)
    }

    #[test]
    fn curated_list_has_one_two_and_seven_monoids() {
        let c = MonoidTable::curated(3);
        let by_order = |n| c.iter().filter(|m| m.order() == n).count();
        assert_eq!((by_order(1), by_order(2), by_order(3)), (1, 2, 7));
        assert_eq!(c.iter().filter(|m| m.is_group()).count(), 3);
    }

    #[test]
    fn tables_that_are_not_monoids_are_rejected() {
        assert!(matches!(MonoidTable::new("x", vec![vec![0, 1], vec![1, 0]], 1), Err(Error::Monoid(_))));
        assert!(matches!(MonoidTable::new("x", vec![vec![0, 1], vec![1, 2]], 0), Err(Error::Monoid(_))));
        // 1·1 = 0 is fine, but 1·2 = 2 and 2·1 = 1 break associativity here
        let rows = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 2]];
        assert!(MonoidTable::new("x", rows, 0).is_err());
    }

    #[test]
    fn z2_constraints_match_the_elementwise_formulas() {
        let (_, s) = z2();
        let a = FinSetObj::range(1);
        let g = s.associator(&a, &a, &a).unwrap();
        let x = Label::pair(int(1), tensor_label(int(1), int(0), int(0)));
        let x = Label::pair(x, int(0));
        let y = tensor_label(int(0), int(0), tensor_label(int(1), int(0), int(0)));
        assert_eq!(g.eval(&x).unwrap(), &y);
        let rho = s.right_unitor(&a).unwrap();
        assert_eq!(rho.eval(&int(0)).unwrap(), &tensor_label(int(0), int(0), Label::Point));
        let lam = s.left_unitor(&a).unwrap();
        for m in 0..2 {
            assert_eq!(lam.eval(&tensor_label(int(m), Label::Point, int(0))).unwrap(), &int(0));
        }
    }

    #[test]
    fn z2_warping_passes_every_suite() {
        let (_, s) = z2();
        let p = sets(2);
        let r = check_skew_monoidal(&s, &p).unwrap();
        assert!(r.is_pass(), "{r}");
        assert!(s.check_fusion(&mset_palette(s.action().acting().monoid(), 2, 1), &p).unwrap().is_pass());
        assert!(check_lax_monoidal(&LaxRightAdjoint(&s), &mset_palette(s.action().acting().monoid(), 1, 1)).unwrap().is_pass());
        assert!(check_oplax_monoidal(&OplaxLeftAdjoint(&s), &p).unwrap().is_pass());
    }

    #[test]
    fn strength_acts_on_the_first_factor() {
        let (m, s) = z2();
        let x = MSetObj::free(&m, &FinSetObj::range(1));
        let b = FinSetObj::range(2);
        let st = s.strength(&x, &b).unwrap();
        for l in st.dom.carrier.iter() {
            let (n, xb) = split(l).unwrap();
            let (xl, bl) = split(xb).unwrap();
            let moved = x.act_label(m.index(n).unwrap(), xl).unwrap().clone();
            let want = Label::pair(moved, Label::pair(n.clone(), bl.clone()));
            assert_eq!(st.map.eval(l).unwrap(), &want);
        }
    }

    #[test]
    fn join_associator_is_not_invertible() {
        let m = MonoidTable::join();
        let g = group_iff_associator_invertible(&m, &[FinSetObj::range(1)]).unwrap();
        assert!(!g.is_group && !g.associator_invertible && !g.shear_bijective);
        assert!(g.probe.first_witness("γ").is_some());
    }

    #[test]
    fn group_iff_holds_on_the_curated_list() {
        let p = [FinSetObj::range(1), FinSetObj::range(2)];
        for m in MonoidTable::curated(3) {
            // (m, n) ↦ (m + n, m) is injective on M × M
            let n = m.order();
            let mut images: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (m.op(a, b), a)).collect();
            images.sort();
            images.dedup();
            let oracle = images.len() == n * n;
            let g = group_iff_associator_invertible(&m, &p).unwrap();
            assert_eq!((g.is_group, g.associator_invertible), (oracle, oracle), "{}", m.name());
            let u = unit_invertibility(&m, &p).unwrap();
            assert_eq!(u.left_invertible, n == 1);
            assert_eq!(u.right_invertible, n == 1);
        }
    }

    #[test]
    fn z2_right_unitor_misses_the_odd_half() {
        let m = MonoidTable::cyclic(2);
        let u = unit_invertibility(&m, &[FinSetObj::range(1)]).unwrap();
        let w = u.probe.first_witness("ρ").unwrap();
        assert!(matches!(w, Witness::NotSurjective { missed, .. } if *missed == tensor_label(int(1), int(0), Label::Point)));
    }

    #[test]
    fn left_braiding_exchanges_the_outer_factors() {
        let (m, s) = z2();
        let vs = mset_palette(&m, 2, 1);
        let b = InducedLeftBraiding::new(&s, MSetSwap(MSetCartesian::new(m.clone())), &vs).unwrap();
        let p = sets(2);
        let r = check_left_braiding(&b, &p).unwrap();
        assert!(r.is_pass(), "{r}");
        assert!(check_symmetry(&b, &p).unwrap().is_pass());
        let one = FinSetObj::range(1);
        let c = b.component(&one, &FinSetObj::range(2), &one).unwrap();
        for l in c.dom().iter() {
            let (m1a, rest) = split(l).unwrap();
            let (m2b, pl) = split(rest).unwrap();
            let want = Label::pair(m2b.clone(), Label::pair(m1a.clone(), pl.clone()));
            assert_eq!(c.eval(l).unwrap(), &want);
        }
    }

    fn arrows(objs: &[FinSetObj]) -> Vec<FinFn> {
        let mut out = Vec::new();
        for a in objs {
            for b in objs {
                out.extend(FinFn::all(a, b));
            }
        }
        out
    }

    #[test]
    fn both_internal_homs_are_adjoint() {
        let p = sets(2);
        let fs = arrows(&p);
        for m in [MonoidTable::trivial(), MonoidTable::cyclic(2)] {
            let s = monoid_warping(&m, &mset_palette(&m, 1, 1), &p).unwrap();
            let r = check_closedness(&RightMonoidHom(&s), &p, &fs, 1 << 12).unwrap();
            assert!(r.is_pass(), "{r}");
            let l = check_closedness(&LeftMonoidHom(&s), &p, &fs, 1 << 12).unwrap();
            assert!(l.is_pass(), "{l}");
        }
    }

    #[test]
    fn right_hom_counts_match() {
        let (m, s) = z2();
        let h = RightMonoidHom(&s);
        for a in sets(2) {
            for c in sets(2) {
                let n = m.order() * a.len();
                assert_eq!(h.hom_obj(&a, &c).unwrap().len(), c.len().pow(n as u32));
            }
        }
    }

    #[test]
    fn mset_category_has_equivariant_homs_only() {
        let m = MonoidTable::cyclic(2);
        let cat = MSetCat { monoid: m.clone() };
        let free = MSetObj::free(&m, &FinSetObj::range(1));
        let point = MSetObj::trivial(&m, FinSetObj::range(1));
        // Z2 acting freely on two points admits two automorphisms, no fixed point
        assert_eq!(cat.hom(&free, &free, 16).unwrap().len(), 2);
        assert_eq!(cat.hom(&point, &free, 16).unwrap().len(), 0);
        assert_eq!(format!("{free}"), "{(0,0),(1,0)}·[0 1|1 0]");
    }
}
