use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Category, FinPresCat};
use crate::error::{Error, Result};
use crate::finset::{Diagram, FinFn, FinSetObj, Inversion};
use crate::report::Witness;

/// A functor from a finitely presented category into finite sets, stored as
/// one carrier per object and one map per arrow.
#[derive(Clone)]
pub struct SetFunctor {
    shape: Arc<FinPresCat>,
    name: String,
    objects: Vec<FinSetObj>,
    arrows: Vec<FinFn>,
}

impl PartialEq for SetFunctor {
    /// Names are presentation only.
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.shape, &other.shape) || self.shape == other.shape)
            && self.objects == other.objects
            && self.arrows == other.arrows
    }
}

impl SetFunctor {
    /// `maps` gives the image of every non-identity arrow by index;
    /// identities are filled in. Functoriality is checked.
    pub fn new(
        shape: Arc<FinPresCat>,
        name: impl Into<String>,
        objects: Vec<FinSetObj>,
        maps: Vec<(usize, FinFn)>,
    ) -> Result<Self> {
        if objects.len() != shape.object_count() {
            return Err(Error::Functor(format!(
                "{} carriers for {} objects",
                objects.len(),
                shape.object_count()
            )));
        }
        let mut arrows: Vec<Option<FinFn>> = vec![None; shape.arrow_count()];
        for o in 0..shape.object_count() {
            arrows[shape.identity_of(o)] = Some(FinFn::identity(&objects[o]));
        }
        for (k, f) in maps {
            if k >= arrows.len() {
                return Err(Error::Index(format!("arrow {k}")));
            }
            arrows[k] = Some(f);
        }
        let arrows = arrows
            .into_iter()
            .enumerate()
            .map(|(k, f)| f.ok_or_else(|| Error::Functor(format!("no image for arrow {}", shape.arrow_name(k)))))
            .collect::<Result<Vec<_>>>()?;
        let f = SetFunctor {
            shape,
            name: name.into(),
            objects,
            arrows,
        };
        f.diagram().validate().map_err(|e| Error::Functor(format!("{e}")))?;
        Ok(f)
    }

    /// Builds a functor without checking functoriality. For mutation
    /// fixtures and for images of functors already known to be functorial.
    pub fn from_parts_unchecked(
        shape: Arc<FinPresCat>,
        name: impl Into<String>,
        objects: Vec<FinSetObj>,
        arrows: Vec<FinFn>,
    ) -> Self {
        SetFunctor {
            shape,
            name: name.into(),
            objects,
            arrows,
        }
    }

    /// The same functor under a different display name.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn shape(&self) -> &Arc<FinPresCat> {
        &self.shape
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn at(&self, o: usize) -> &FinSetObj {
        &self.objects[o]
    }

    pub fn on_arrow(&self, k: usize) -> &FinFn {
        &self.arrows[k]
    }

    pub fn values(&self) -> &[FinSetObj] {
        &self.objects
    }

    pub fn diagram(&self) -> Diagram<'_> {
        Diagram {
            shape: &self.shape,
            objects: self.objects.clone(),
            arrows: self.arrows.clone(),
        }
    }

    /// Postcomposition with a set-level functor given by its action on
    /// carriers and maps.
    pub fn map_through(
        &self,
        name: impl Into<String>,
        on_obj: impl Fn(&FinSetObj) -> Result<FinSetObj>,
        on_mor: impl Fn(&FinFn) -> Result<FinFn>,
    ) -> Result<SetFunctor> {
        Ok(SetFunctor {
            shape: self.shape.clone(),
            name: name.into(),
            objects: self.objects.iter().map(&on_obj).collect::<Result<_>>()?,
            arrows: self.arrows.iter().map(&on_mor).collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for SetFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            return f.write_str(&self.name);
        }
        f.write_str("⟨")?;
        for (i, o) in self.objects.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{o}")?;
        }
        f.write_str("⟩")
    }
}

impl fmt::Debug for SetFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFunctor({self}: ")?;
        f.debug_list().entries(self.objects.iter()).finish()?;
        f.write_str(")")
    }
}

/// A natural transformation between two [`SetFunctor`]s on the same shape.
#[derive(Clone, Debug)]
pub struct NatTrans {
    dom: SetFunctor,
    cod: SetFunctor,
    components: Vec<FinFn>,
}

impl NatTrans {
    /// Checks boundaries and every naturality square.
    pub fn new(dom: SetFunctor, cod: SetFunctor, components: Vec<FinFn>) -> Result<Self> {
        let t = NatTrans::from_components_unchecked(dom, cod, components)?;
        if let Some((k, w)) = t.naturality_failure()? {
            return Err(Error::Functor(format!(
                "not natural along {}: {w}",
                t.dom.shape.arrow_name(k)
            )));
        }
        Ok(t)
    }

    /// Checks boundaries only.
    pub fn from_components_unchecked(dom: SetFunctor, cod: SetFunctor, components: Vec<FinFn>) -> Result<Self> {
        if dom.shape != cod.shape || components.len() != dom.objects.len() {
            return Err(Error::structure("transformation between functors on different shapes"));
        }
        for (o, c) in components.iter().enumerate() {
            if c.dom() != &dom.objects[o] || c.cod() != &cod.objects[o] {
                return Err(Error::structure(format!(
                    "component at {} is {} → {}, expected {} → {}",
                    dom.shape.object_name(o),
                    c.dom(),
                    c.cod(),
                    dom.objects[o],
                    cod.objects[o]
                )));
            }
        }
        Ok(NatTrans { dom, cod, components })
    }

    pub fn identity(f: &SetFunctor) -> Self {
        NatTrans {
            dom: f.clone(),
            cod: f.clone(),
            components: f.objects.iter().map(FinFn::identity).collect(),
        }
    }

    pub fn dom(&self) -> &SetFunctor {
        &self.dom
    }

    pub fn cod(&self) -> &SetFunctor {
        &self.cod
    }

    pub fn component(&self, o: usize) -> &FinFn {
        &self.components[o]
    }

    pub fn components(&self) -> &[FinFn] {
        &self.components
    }

    /// First arrow whose naturality square fails, with the differing element.
    pub fn naturality_failure(&self) -> Result<Option<(usize, Witness)>> {
        let shape = &self.dom.shape;
        for k in 0..shape.arrow_count() {
            let (a, b) = (shape.arrow_dom(k), shape.arrow_cod(k));
            let lhs = self.components[a].then(&self.cod.arrows[k])?;
            let rhs = self.dom.arrows[k].then(&self.components[b])?;
            if let Some(w) = lhs.first_difference(&rhs)? {
                return Ok(Some((k, w)));
            }
        }
        Ok(None)
    }
}

/// The functor category `[C, FinSet]` for a finite `C`.
#[derive(Clone, Debug)]
pub struct FunctorCat {
    pub shape: Arc<FinPresCat>,
}

impl FunctorCat {
    pub fn new(shape: Arc<FinPresCat>) -> Self {
        FunctorCat { shape }
    }
}

impl Category for FunctorCat {
    type Obj = SetFunctor;
    type Mor = NatTrans;

    fn dom(&self, f: &NatTrans) -> SetFunctor {
        f.dom.clone()
    }
    fn cod(&self, f: &NatTrans) -> SetFunctor {
        f.cod.clone()
    }
    fn identity(&self, a: &SetFunctor) -> NatTrans {
        NatTrans::identity(a)
    }
    fn compose(&self, g: &NatTrans, f: &NatTrans) -> Result<NatTrans> {
        if f.cod != g.dom {
            return Err(Error::Composition {
                first_cod: format!("{}", f.cod),
                second_dom: format!("{}", g.dom),
            });
        }
        let components = f
            .components
            .iter()
            .zip(&g.components)
            .map(|(a, b)| a.then(b))
            .collect::<Result<_>>()?;
        Ok(NatTrans {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            components,
        })
    }
    fn distinguish(&self, f: &NatTrans, g: &NatTrans) -> Result<Option<Witness>> {
        if f.dom != g.dom || f.cod != g.cod {
            return Err(Error::structure(format!(
                "comparing non-parallel transformations {} → {} and {} → {}",
                f.dom, f.cod, g.dom, g.cod
            )));
        }
        for (o, (a, b)) in f.components.iter().zip(&g.components).enumerate() {
            if let Some(w) = a.first_difference(b)? {
                return Ok(Some(w.in_component(format!("{}", self.shape.object_name(o)))));
            }
        }
        Ok(None)
    }
    fn invert(&self, f: &NatTrans) -> Result<Inversion<NatTrans>> {
        let mut inv = Vec::with_capacity(f.components.len());
        for (o, c) in f.components.iter().enumerate() {
            match c.invert() {
                Inversion::Iso(i) => inv.push(i),
                Inversion::NotIso(w) => {
                    return Ok(Inversion::NotIso(w.in_component(format!("{}", self.shape.object_name(o)))))
                }
            }
        }
        Ok(Inversion::Iso(NatTrans {
            dom: f.cod.clone(),
            cod: f.dom.clone(),
            components: inv,
        }))
    }
    fn hom(&self, a: &SetFunctor, b: &SetFunctor, limit: usize) -> Option<Vec<NatTrans>> {
        // enumerate component tuples, giving up if the raw product is large
        let mut raw: usize = 1;
        let spaces: Vec<Vec<FinFn>> = a
            .objects
            .iter()
            .zip(&b.objects)
            .map(|(x, y)| {
                let n = FinFn::count(x, y)?;
                raw = raw.checked_mul(n)?;
                (raw <= limit.saturating_mul(64)).then(|| FinFn::all(x, y).collect())
            })
            .collect::<Option<_>>()?;
        let mut out = Vec::new();
        let mut idx = vec![0usize; spaces.len()];
        if spaces.iter().any(|s| s.is_empty()) {
            return Some(out);
        }
        loop {
            let comps = idx.iter().zip(&spaces).map(|(&i, s)| s[i].clone()).collect();
            let t = NatTrans {
                dom: a.clone(),
                cod: b.clone(),
                components: comps,
            };
            if t.naturality_failure().ok()?.is_none() {
                out.push(t);
                if out.len() > limit {
                    return None;
                }
            }
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return Some(out);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < spaces[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    fn describe_mor(&self, f: &NatTrans) -> String {
        format!("{} ⇒ {}", f.dom, f.cod)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::laws::check_category_laws;
    use crate::label::Label;

    fn arrow_functor(a: usize, b: usize) -> SetFunctor {
        let shape = Arc::new(FinPresCat::arrow());
        let (x, y) = (FinSetObj::range(a), FinSetObj::range(b));
        let u = FinFn::from_indices(x.clone(), y.clone(), vec![0; a]).unwrap();
        SetFunctor::new(shape, "", vec![x, y], vec![(2, u)]).unwrap()
    }

    #[test]
    fn functoriality_is_enforced() {
        let shape = Arc::new(FinPresCat::terminal());
        let x = FinSetObj::range(2);
        let swap = FinFn::from_indices(x.clone(), x.clone(), vec![1, 0]).unwrap();
        let bad = SetFunctor::new(shape, "", vec![x], vec![(0, swap)]);
        assert!(matches!(bad, Err(Error::Functor(_))));
    }

    #[test]
    fn hom_counts_natural_transformations() {
        let f = arrow_functor(1, 1);
        let g = arrow_functor(2, 2);
        let cat = FunctorCat::new(f.shape().clone());
        // components 1→2 at both objects, natural iff both pick images
        // compatible with the constant maps to 0: (0,0) only plus (1,0)
        let homs = cat.hom(&f, &g, 16).unwrap();
        assert_eq!(homs.len(), 2);
        let r = check_category_laws(&cat, &homs).unwrap();
        assert!(r.is_pass());
    }

    #[test]
    fn names_do_not_affect_equality() {
        let f = arrow_functor(1, 2);
        assert_eq!(f.clone().named("F"), f);
        assert_eq!(format!("{}", f.clone().named("F")), "F");
        assert_eq!(f.at(1), &FinSetObj::range(2));
        let _ = Label::Point;
    }
}
