use alloc::format;
use alloc::vec::Vec;

use super::{FinFn, FinSetObj};
use crate::error::{Error, Result};
use crate::label::Label;

/// `X × Y` with elements `(x, y)` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Product {
    pub obj: FinSetObj,
    pub left: FinSetObj,
    pub right: FinSetObj,
}

pub fn product(x: &FinSetObj, y: &FinSetObj) -> Product {
    let mut v = Vec::with_capacity(x.len() * y.len());
    for a in x.iter() {
        for b in y.iter() {
            v.push(Label::pair(a.clone(), b.clone()));
        }
    }
    Product {
        obj: FinSetObj::from_sorted(v),
        left: x.clone(),
        right: y.clone(),
    }
}

impl Product {
    pub fn proj1(&self) -> FinFn {
        let n = self.right.len();
        FinFn {
            dom: self.obj.clone(),
            cod: self.left.clone(),
            table: (0..self.obj.len()).map(|k| k / n).collect::<Vec<_>>().into(),
        }
    }

    pub fn proj2(&self) -> FinFn {
        let n = self.right.len();
        FinFn {
            dom: self.obj.clone(),
            cod: self.right.clone(),
            table: (0..self.obj.len()).map(|k| k % n).collect::<Vec<_>>().into(),
        }
    }

    /// The unique `h : Z → X × Y` with `π₁h = f`, `π₂h = g`.
    pub fn pair(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        if f.dom() != g.dom() || f.cod() != &self.left || g.cod() != &self.right {
            return Err(Error::structure(format!(
                "cannot pair {} → {} with {} → {} into {}",
                f.dom(),
                f.cod(),
                g.dom(),
                g.cod(),
                self.obj
            )));
        }
        let n = self.right.len();
        let table = f
            .table()
            .iter()
            .zip(g.table())
            .map(|(&i, &j)| i * n + j)
            .collect();
        FinFn::from_indices(f.dom().clone(), self.obj.clone(), table)
    }
}

/// `f × g : X × Y → X' × Y'`.
pub fn product_map(f: &FinFn, g: &FinFn) -> FinFn {
    let dom = product(f.dom(), g.dom()).obj;
    let cod = product(f.cod(), g.cod()).obj;
    let n = g.cod().len();
    let table = (0..f.dom().len())
        .flat_map(|i| (0..g.dom().len()).map(move |j| (i, j)))
        .map(|(i, j)| f.image_index(i) * n + g.image_index(j))
        .collect::<Vec<_>>();
    FinFn {
        dom,
        cod,
        table: table.into(),
    }
}

/// `X + Y` with `inl` elements before `inr` elements.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub obj: FinSetObj,
    pub left: FinSetObj,
    pub right: FinSetObj,
}

pub fn coproduct(x: &FinSetObj, y: &FinSetObj) -> Coproduct {
    let v = x
        .iter()
        .map(|a| Label::inl(a.clone()))
        .chain(y.iter().map(|b| Label::inr(b.clone())))
        .collect();
    Coproduct {
        obj: FinSetObj::from_sorted(v),
        left: x.clone(),
        right: y.clone(),
    }
}

impl Coproduct {
    pub fn inl(&self) -> FinFn {
        FinFn {
            dom: self.left.clone(),
            cod: self.obj.clone(),
            table: (0..self.left.len()).collect::<Vec<_>>().into(),
        }
    }

    pub fn inr(&self) -> FinFn {
        let off = self.left.len();
        FinFn {
            dom: self.right.clone(),
            cod: self.obj.clone(),
            table: (0..self.right.len()).map(|j| off + j).collect::<Vec<_>>().into(),
        }
    }

    /// The unique `h : X + Y → Z` with `h∘inl = f`, `h∘inr = g`.
    pub fn copair(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        if f.cod() != g.cod() || f.dom() != &self.left || g.dom() != &self.right {
            return Err(Error::structure(format!(
                "cannot copair {} → {} with {} → {} out of {}",
                f.dom(),
                f.cod(),
                g.dom(),
                g.cod(),
                self.obj
            )));
        }
        let table = f.table().iter().chain(g.table()).copied().collect();
        FinFn::from_indices(self.obj.clone(), f.cod().clone(), table)
    }
}

/// The function space `Y^X`, elements being table labels of all maps `X → Y`.
#[derive(Clone, Debug)]
pub struct Exponential {
    pub obj: FinSetObj,
    pub base: FinSetObj,
    pub target: FinSetObj,
}

pub fn exponential(x: &FinSetObj, y: &FinSetObj) -> Exponential {
    let v = FinFn::all(x, y).map(|f| f.to_table_label()).collect();
    Exponential {
        obj: FinSetObj::from_sorted(v),
        base: x.clone(),
        target: y.clone(),
    }
}

impl Exponential {
    /// The function named by an element of the exponential.
    pub fn function_of(&self, l: &Label) -> Result<FinFn> {
        let images = l
            .as_table()
            .filter(|t| t.len() == self.base.len())
            .ok_or_else(|| Error::NotAnElement {
                label: format!("{l}"),
                set: format!("{}", self.obj),
            })?;
        let table = images
            .iter()
            .map(|y| self.target.require(y))
            .collect::<Result<Vec<_>>>()?;
        FinFn::from_indices(self.base.clone(), self.target.clone(), table)
    }

    /// `eval : Y^X × X → Y`.
    pub fn eval(&self) -> FinFn {
        let dom = product(&self.obj, &self.base).obj;
        let target = self.target.clone();
        let base = self.base.clone();
        FinFn::from_fn(dom, target, |l| {
            let (t, x) = l.as_pair().expect("pair");
            let i = base.index_of(x).expect("base element");
            t.as_table().expect("table")[i].clone()
        })
        .expect("evaluation stays in the target")
    }

    /// `curry(f) : Z → Y^X` for `f : Z × X → Y`. `Z` is read off the domain,
    /// which fails only when the domain is empty; use
    /// [`curry_from`](Self::curry_from) then.
    pub fn curry(&self, f: &FinFn) -> Result<FinFn> {
        let (z, _) = split_product(f.dom())?;
        self.curry_from(&z, f)
    }

    /// `curry(f) : Z → Y^X` with `Z` given explicitly.
    pub fn curry_from(&self, z: &FinSetObj, f: &FinFn) -> Result<FinFn> {
        if f.dom() != &product(z, &self.base).obj || f.cod() != &self.target {
            return Err(Error::structure(format!(
                "cannot curry {} → {} into {}",
                f.dom(),
                f.cod(),
                self.obj
            )));
        }
        let n = self.base.len();
        FinFn::try_from_fn(z.clone(), self.obj.clone(), |zl| {
            let i = z.require(zl)?;
            Ok(Label::Table(
                (0..n)
                    .map(|j| f.cod().get(f.image_index(i * n + j)).clone())
                    .collect(),
            ))
        })
    }

    /// Inverse of [`curry`](Self::curry): `eval ∘ (g × id_X)`.
    pub fn uncurry(&self, g: &FinFn) -> Result<FinFn> {
        if g.cod() != &self.obj {
            return Err(Error::structure(format!("cannot uncurry a map into {}", g.cod())));
        }
        let gx = product_map(g, &FinFn::identity(&self.base));
        gx.then(&self.eval())
    }

    /// `h^g : Y^X → Y'^X'` for `g : X' → X`, `h : Y → Y'`, sending `φ` to `h∘φ∘g`.
    pub fn map(&self, to: &Exponential, g: &FinFn, h: &FinFn) -> Result<FinFn> {
        if g.dom() != &to.base || g.cod() != &self.base || h.dom() != &self.target || h.cod() != &to.target {
            return Err(Error::structure("exponential map boundaries do not match"));
        }
        FinFn::try_from_fn(self.obj.clone(), to.obj.clone(), |phi| {
            let phi = self.function_of(phi)?;
            Ok(g.then(&phi)?.then(h)?.to_table_label())
        })
    }
}

/// Recovers `(X, Y)` from a product carrier `X × Y`. The empty set is read as
/// `∅ × ∅`, which is the only reading available without more information.
fn split_product(p: &FinSetObj) -> Result<(FinSetObj, FinSetObj)> {
    let mut xs: Vec<Label> = Vec::new();
    let mut ys: Vec<Label> = Vec::new();
    for l in p.iter() {
        let (a, b) = l
            .as_pair()
            .ok_or_else(|| Error::structure(format!("{p} is not a product carrier")))?;
        if !xs.contains(a) {
            xs.push(a.clone());
        }
        if !ys.contains(b) {
            ys.push(b.clone());
        }
    }
    let x = FinSetObj::new(xs)?;
    let y = FinSetObj::new(ys)?;
    if x.len() * y.len() != p.len() {
        return Err(Error::structure(format!("{p} is not a full product")));
    }
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::compose;

    #[test]
    fn product_cardinality() {
        assert_eq!(product(&FinSetObj::range(2), &FinSetObj::letters(3)).obj.len(), 6);
    }

    #[test]
    fn product_with_point_is_bijective_to_factor() {
        let x = FinSetObj::letters(3);
        let p = product(&x, &FinSetObj::point());
        assert!(p.proj1().invert().is_iso());
    }

    #[test]
    fn coproduct_cardinality_and_unit() {
        let a = FinSetObj::singleton(Label::atom("x"));
        let b = FinSetObj::singleton(Label::atom("y"));
        assert_eq!(coproduct(&a, &b).obj.len(), 2);
        let y = FinSetObj::letters(2);
        let c = coproduct(&FinSetObj::empty(), &y);
        assert!(c.inr().invert().is_iso());
    }

    #[test]
    fn exponential_cardinality() {
        assert_eq!(exponential(&FinSetObj::range(2), &FinSetObj::letters(3)).obj.len(), 9);
    }

    #[test]
    fn eval_after_curry_recovers_map() {
        let z = FinSetObj::range(2);
        let x = FinSetObj::letters(2);
        let y = FinSetObj::range(2);
        let e = exponential(&x, &y);
        let zx = product(&z, &x).obj;
        for f in FinFn::all(&zx, &y) {
            let c = e.curry(&f).unwrap();
            assert_eq!(e.uncurry(&c).unwrap(), f);
        }
    }

    #[test]
    fn pairing_composes_with_projections() {
        let z = FinSetObj::range(2);
        let x = FinSetObj::letters(2);
        let y = FinSetObj::range(3);
        let p = product(&x, &y);
        for f in FinFn::all(&z, &x) {
            for g in FinFn::all(&z, &y) {
                let h = p.pair(&f, &g).unwrap();
                assert_eq!(compose(&p.proj1(), &h).unwrap(), f);
                assert_eq!(compose(&p.proj2(), &h).unwrap(), g);
            }
        }
    }
}
