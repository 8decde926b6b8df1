use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Category;
use crate::error::{Error, Result};
use crate::finset::Inversion;
use crate::label::Label;
use crate::report::Witness;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Arrow {
    name: Label,
    dom: usize,
    cod: usize,
}

/// A finite category given by its full composition table.
///
/// Objects and arrows are referred to by index. The identity of object `o`
/// is arrow `identity_of(o)`; constructors put identities first, but code
/// should not rely on that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinPresCat {
    objects: Vec<Label>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    /// `comp[g * n + f] = g ∘ f` when `cod f = dom g`.
    comp: Vec<Option<usize>>,
}

impl FinPresCat {
    /// Builds a category from objects, non-identity generators
    /// `(name, dom, cod)` and the composites `(g, f, g∘f)` among them, with
    /// arrow indices counted after the identities (which come first, one per
    /// object). Composites with identities are filled in. Every composable
    /// pair of generators must be given.
    pub fn new(
        objects: Vec<Label>,
        generators: Vec<(Label, usize, usize)>,
        composites: Vec<(usize, usize, usize)>,
    ) -> Result<Self> {
        let mut sorted = objects.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(format!("{}", w[0])));
        }
        let k = objects.len();
        let mut arrows: Vec<Arrow> = objects
            .iter()
            .enumerate()
            .map(|(o, name)| Arrow {
                name: Label::pair(Label::atom("id"), name.clone()),
                dom: o,
                cod: o,
            })
            .collect();
        for (name, d, c) in generators {
            if d >= k || c >= k {
                return Err(Error::structure(format!("arrow {name} has an unknown endpoint")));
            }
            arrows.push(Arrow { name, dom: d, cod: c });
        }
        let n = arrows.len();
        let mut cat = FinPresCat {
            objects,
            arrows,
            identities: (0..k).collect(),
            comp: alloc::vec![None; n * n],
        };
        for f in 0..n {
            let (d, c) = (cat.arrows[f].dom, cat.arrows[f].cod);
            cat.comp[c * n + f] = Some(f);
            cat.comp[f * n + d] = Some(f);
        }
        for (g, f, h) in composites {
            cat.set_composite(g, f, h)?;
        }
        cat.check_total()?;
        Ok(cat)
    }

    /// The one-object category of a monoid: arrow `i` is element `i`, and
    /// `i ∘ j` is `table[i][j]`.
    pub fn from_monoid(elements: Vec<Label>, table: &[Vec<usize>], identity: usize) -> Result<Self> {
        let n = elements.len();
        if identity >= n || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Monoid(String::from("table is not square over the elements")));
        }
        let arrows = elements
            .into_iter()
            .map(|name| Arrow { name, dom: 0, cod: 0 })
            .collect();
        let mut comp = alloc::vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                comp[g * n + f] = Some(table[g][f]);
            }
        }
        Ok(FinPresCat {
            objects: alloc::vec![Label::Point],
            arrows,
            identities: alloc::vec![identity],
            comp,
        })
    }

    /// One object, one arrow.
    pub fn terminal() -> Self {
        FinPresCat::discrete(1)
    }

    /// `n` objects and only their identities.
    pub fn discrete(n: usize) -> Self {
        let objects = (0..n as i64).map(Label::Int).collect();
        FinPresCat::new(objects, Vec::new(), Vec::new()).expect("discrete category")
    }

    /// `s ⇉ t`: two parallel arrows `f, g : s → t`.
    pub fn parallel_pair() -> Self {
        FinPresCat::new(
            alloc::vec![Label::atom("s"), Label::atom("t")],
            alloc::vec![(Label::atom("f"), 0, 1), (Label::atom("g"), 0, 1)],
            Vec::new(),
        )
        .expect("parallel pair")
    }

    /// `0 → 1`: a single non-identity arrow `u`.
    pub fn arrow() -> Self {
        FinPresCat::new(
            alloc::vec![Label::Int(0), Label::Int(1)],
            alloc::vec![(Label::atom("u"), 0, 1)],
            Vec::new(),
        )
        .expect("walking arrow")
    }

    /// Overwrites one composite. Used to build mutated presentations; the
    /// laws are not re-checked here.
    pub fn set_composite(&mut self, g: usize, f: usize, h: usize) -> Result<()> {
        let n = self.arrows.len();
        if g >= n || f >= n || h >= n {
            return Err(Error::Index(format!("composite ({g}, {f}) ↦ {h}")));
        }
        if self.arrows[f].cod != self.arrows[g].dom {
            return Err(Error::structure(format!(
                "{} and {} are not composable",
                self.arrows[g].name, self.arrows[f].name
            )));
        }
        if self.arrows[h].dom != self.arrows[f].dom || self.arrows[h].cod != self.arrows[g].cod {
            return Err(Error::structure(format!(
                "{} cannot be the composite {} ∘ {}",
                self.arrows[h].name, self.arrows[g].name, self.arrows[f].name
            )));
        }
        self.comp[g * n + f] = Some(h);
        Ok(())
    }

    fn check_total(&self) -> Result<()> {
        let n = self.arrows.len();
        for g in 0..n {
            for f in 0..n {
                if self.arrows[f].cod == self.arrows[g].dom && self.comp[g * n + f].is_none() {
                    return Err(Error::structure(format!(
                        "composite {} ∘ {} is missing",
                        self.arrows[g].name, self.arrows[f].name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_name(&self, o: usize) -> &Label {
        &self.objects[o]
    }

    pub fn object_index(&self, name: &Label) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn arrow_name(&self, k: usize) -> &Label {
        &self.arrows[k].name
    }

    pub fn arrow_index(&self, name: &Label) -> Option<usize> {
        self.arrows.iter().position(|a| &a.name == name)
    }

    pub fn arrow_dom(&self, k: usize) -> usize {
        self.arrows[k].dom
    }

    pub fn arrow_cod(&self, k: usize) -> usize {
        self.arrows[k].cod
    }

    pub fn identity_of(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, k: usize) -> bool {
        self.identities.contains(&k)
    }

    /// `g ∘ f`, or `None` if not composable.
    pub fn composite(&self, g: usize, f: usize) -> Option<usize> {
        if self.arrows[f].cod != self.arrows[g].dom {
            return None;
        }
        self.comp[g * self.arrows.len() + f]
    }

    /// All arrows, as morphisms of the category (the full palette).
    pub fn all_arrows(&self) -> Vec<usize> {
        (0..self.arrows.len()).collect()
    }
}

impl Category for FinPresCat {
    type Obj = usize;
    type Mor = usize;

    fn dom(&self, f: &usize) -> usize {
        self.arrows[*f].dom
    }
    fn cod(&self, f: &usize) -> usize {
        self.arrows[*f].cod
    }
    fn identity(&self, a: &usize) -> usize {
        self.identities[*a]
    }
    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        self.composite(*g, *f).ok_or_else(|| Error::Composition {
            first_cod: format!("{}", self.objects[self.arrows[*f].cod]),
            second_dom: format!("{}", self.objects[self.arrows[*g].dom]),
        })
    }
    fn distinguish(&self, f: &usize, g: &usize) -> Result<Option<Witness>> {
        Ok((f != g).then(|| Witness::DistinctArrows {
            left: format!("{}", self.arrows[*f].name),
            right: format!("{}", self.arrows[*g].name),
        }))
    }
    fn invert(&self, f: &usize) -> Result<Inversion<usize>> {
        let (d, c) = (self.arrows[*f].dom, self.arrows[*f].cod);
        let inverse = (0..self.arrows.len()).find(|&g| {
            self.composite(g, *f) == Some(self.identities[d])
                && self.composite(*f, g) == Some(self.identities[c])
        });
        Ok(match inverse {
            Some(g) => Inversion::Iso(g),
            None => Inversion::NotIso(Witness::Note(format!(
                "{} has no two-sided inverse",
                self.arrows[*f].name
            ))),
        })
    }
    fn hom(&self, a: &usize, b: &usize, limit: usize) -> Option<Vec<usize>> {
        let v: Vec<usize> = (0..self.arrows.len())
            .filter(|&k| self.arrows[k].dom == *a && self.arrows[k].cod == *b)
            .collect();
        (v.len() <= limit).then_some(v)
    }
    fn describe_mor(&self, f: &usize) -> String {
        format!("{}", self.arrows[*f].name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn missing_composite_is_rejected() {
        let r = FinPresCat::new(
            vec![Label::Int(0)],
            vec![(Label::atom("e"), 0, 0)],
            Vec::new(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn identities_compose_neutrally() {
        let c = FinPresCat::arrow();
        let u = c.arrow_index(&Label::atom("u")).unwrap();
        assert_eq!(c.compose(&c.identity(&1), &u).unwrap(), u);
        assert_eq!(c.compose(&u, &c.identity(&0)).unwrap(), u);
        assert!(c.compose(&u, &u).is_err());
    }

    #[test]
    fn group_elements_invert() {
        let z2 = FinPresCat::from_monoid(vec![Label::Int(0), Label::Int(1)], &[vec![0, 1], vec![1, 0]], 0)
            .unwrap();
        assert_eq!(z2.invert(&1).unwrap(), Inversion::Iso(1));
        let or = FinPresCat::from_monoid(vec![Label::Int(0), Label::Int(1)], &[vec![0, 1], vec![1, 1]], 0)
            .unwrap();
        assert!(!or.invert(&1).unwrap().is_iso());
    }
}
