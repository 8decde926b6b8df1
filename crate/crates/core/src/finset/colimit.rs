use alloc::format;
use alloc::vec::Vec;

use super::{FinFn, FinSetObj};
use crate::error::{Error, Result};
use crate::kernel::FinPresCat;
use crate::label::Label;

/// Disjoint-set forest over `0..n` with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Merges the classes of `i` and `j`; the smaller root index survives.
    pub fn union(&mut self, i: usize, j: usize) -> bool {
        let (a, b) = (self.find(i), self.find(j));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }
}

/// A functor from a finitely presented shape into finite sets.
pub struct Diagram<'a> {
    pub shape: &'a FinPresCat,
    /// One carrier per object of `shape`.
    pub objects: Vec<FinSetObj>,
    /// One map per arrow of `shape`, identities included.
    pub arrows: Vec<FinFn>,
}

impl Diagram<'_> {
    /// Boundaries, identities and composites must all be respected.
    pub fn validate(&self) -> Result<()> {
        let shape = self.shape;
        if self.objects.len() != shape.object_count() || self.arrows.len() != shape.arrow_count() {
            return Err(Error::Diagram(format!(
                "expected {} objects and {} arrows, got {} and {}",
                shape.object_count(),
                shape.arrow_count(),
                self.objects.len(),
                self.arrows.len()
            )));
        }
        for (k, f) in self.arrows.iter().enumerate() {
            let (d, c) = (shape.arrow_dom(k), shape.arrow_cod(k));
            if f.dom() != &self.objects[d] || f.cod() != &self.objects[c] {
                return Err(Error::Diagram(format!(
                    "arrow {} is sent to a map {} → {}, expected {} → {}",
                    shape.arrow_name(k),
                    f.dom(),
                    f.cod(),
                    self.objects[d],
                    self.objects[c]
                )));
            }
        }
        for o in 0..shape.object_count() {
            if !self.arrows[shape.identity_of(o)].is_identity() {
                return Err(Error::Diagram(format!(
                    "identity of {} is not sent to an identity",
                    shape.object_name(o)
                )));
            }
        }
        for g in 0..shape.arrow_count() {
            for f in 0..shape.arrow_count() {
                if let Some(h) = shape.composite(g, f) {
                    let gf = self.arrows[f].then(&self.arrows[g])?;
                    if gf != self.arrows[h] {
                        return Err(Error::Diagram(format!(
                            "{} ∘ {} = {} is not preserved",
                            shape.arrow_name(g),
                            shape.arrow_name(f),
                            shape.arrow_name(h)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A colimit: the quotient carrier and one injection per diagram object.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub obj: FinSetObj,
    /// Names of the indexing objects, parallel to `injections`.
    pub names: Vec<Label>,
    pub injections: Vec<FinFn>,
}

impl Colimit {
    /// The class of `x` in the summand named `name`.
    pub fn inject(&self, name: &Label, x: &Label) -> Option<&Label> {
        let i = self.names.iter().position(|n| n == name)?;
        self.injections[i].apply(x)
    }

    /// The unique map out of the colimit through which `cocone` factors.
    /// Errors if the legs do not agree on some class (the family is not a
    /// cocone) or have mismatched boundaries.
    pub fn factor(&self, cocone: &[FinFn]) -> Result<FinFn> {
        if cocone.len() != self.injections.len() {
            return Err(Error::structure("cocone has the wrong number of legs"));
        }
        let Some(target) = cocone.first().map(|f| f.cod().clone()) else {
            return FinFn::from_indices(self.obj.clone(), FinSetObj::empty(), Vec::new());
        };
        let mut table: Vec<Option<usize>> = alloc::vec![None; self.obj.len()];
        for (leg, inj) in cocone.iter().zip(&self.injections) {
            if leg.dom() != inj.dom() || leg.cod() != &target {
                return Err(Error::structure(format!(
                    "cocone leg {} → {} does not fit",
                    leg.dom(),
                    leg.cod()
                )));
            }
            for i in 0..leg.dom().len() {
                let class = inj.image_index(i);
                let image = leg.image_index(i);
                match table[class] {
                    Some(prev) if prev != image => {
                        return Err(Error::Diagram(format!(
                            "cocone identifies {} with both {} and {}",
                            self.obj.get(class),
                            target.get(prev),
                            target.get(image)
                        )));
                    }
                    _ => table[class] = Some(image),
                }
            }
        }
        let table = table
            .into_iter()
            .map(|j| j.ok_or_else(|| Error::structure("colimit class with no member")))
            .collect::<Result<Vec<_>>>()?;
        FinFn::from_indices(self.obj.clone(), target, table)
    }
}

/// Colimit of a validated diagram.
pub fn finite_colimit(d: &Diagram<'_>) -> Result<Colimit> {
    d.validate()?;
    let names: Vec<Label> = (0..d.shape.object_count())
        .map(|o| d.shape.object_name(o).clone())
        .collect();
    let edges: Vec<(usize, usize, &FinFn)> = (0..d.shape.arrow_count())
        .map(|k| (d.shape.arrow_dom(k), d.shape.arrow_cod(k), &d.arrows[k]))
        .collect();
    graph_colimit(&names, &d.objects, &edges)
}

/// Colimit over a bare graph: a colimit only depends on generating arrows,
/// so callers with large index categories (comma categories) can skip
/// tabulating composition. Summand `i` contributes elements `(names[i], x)`;
/// each class is named by its smallest member.
pub fn graph_colimit(
    names: &[Label],
    objects: &[FinSetObj],
    edges: &[(usize, usize, &FinFn)],
) -> Result<Colimit> {
    if names.len() != objects.len() {
        return Err(Error::structure("one name per summand is required"));
    }
    let mut offsets = Vec::with_capacity(objects.len() + 1);
    let mut total = 0;
    for o in objects {
        offsets.push(total);
        total += o.len();
    }
    let mut uf = UnionFind::new(total);
    for &(s, t, f) in edges {
        if f.dom() != &objects[s] || f.cod() != &objects[t] {
            return Err(Error::Diagram(format!(
                "edge {} → {} carries a map {} → {}",
                names[s],
                names[t],
                f.dom(),
                f.cod()
            )));
        }
        for i in 0..f.dom().len() {
            uf.union(offsets[s] + i, offsets[t] + f.image_index(i));
        }
    }
    let member = |flat: usize| -> Label {
        let s = offsets.partition_point(|&o| o <= flat) - 1;
        Label::pair(names[s].clone(), objects[s].get(flat - offsets[s]).clone())
    };
    // smallest member label per root
    let mut best: Vec<Option<Label>> = alloc::vec![None; total];
    let mut roots = Vec::with_capacity(total);
    for flat in 0..total {
        let r = uf.find(flat);
        roots.push(r);
        let l = member(flat);
        match &best[r] {
            Some(b) if *b <= l => {}
            _ => best[r] = Some(l),
        }
    }
    let mut classes: Vec<Label> = best.iter().flatten().map(|l| Label::class(l.clone())).collect();
    classes.sort();
    let obj = FinSetObj::from_sorted(classes);
    let class_index = |flat: usize| -> usize {
        let rep = best[roots[flat]].clone().expect("root has a member");
        obj.index_of(&Label::class(rep)).expect("class present")
    };
    let injections = objects
        .iter()
        .enumerate()
        .map(|(s, o)| FinFn {
            dom: o.clone(),
            cod: obj.clone(),
            table: (0..o.len())
                .map(|i| class_index(offsets[s] + i))
                .collect::<Vec<_>>()
                .into(),
        })
        .collect();
    Ok(Colimit {
        obj,
        names: names.to_vec(),
        injections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_only_diagram_is_a_relabeling() {
        let shape = FinPresCat::terminal();
        let x = FinSetObj::letters(3);
        let d = Diagram {
            shape: &shape,
            objects: vec![x.clone()],
            arrows: vec![FinFn::identity(&x)],
        };
        let c = finite_colimit(&d).unwrap();
        assert_eq!(c.obj.len(), 3);
        assert!(c.injections[0].invert().is_iso());
    }

    #[test]
    fn discrete_diagram_is_a_coproduct() {
        let shape = FinPresCat::discrete(2);
        let x = FinSetObj::singleton(Label::atom("x"));
        let y = FinSetObj::singleton(Label::atom("y"));
        let d = Diagram {
            shape: &shape,
            objects: vec![x.clone(), y.clone()],
            arrows: vec![FinFn::identity(&x), FinFn::identity(&y)],
        };
        assert_eq!(finite_colimit(&d).unwrap().obj.len(), 2);
    }

    #[test]
    fn coequalizer_of_two_constants_merges() {
        let shape = FinPresCat::parallel_pair();
        let src = FinSetObj::range(2);
        let tgt = FinSetObj::letters(2);
        let ca = FinFn::from_fn(src.clone(), tgt.clone(), |_| Label::atom("a")).unwrap();
        let cb = FinFn::from_fn(src.clone(), tgt.clone(), |_| Label::atom("b")).unwrap();
        let d = Diagram {
            shape: &shape,
            objects: vec![src.clone(), tgt.clone()],
            arrows: vec![FinFn::identity(&src), FinFn::identity(&tgt), ca, cb],
        };
        let c = finite_colimit(&d).unwrap();
        assert_eq!(c.obj.len(), 1);
    }

    #[test]
    fn non_functorial_diagram_is_rejected() {
        let shape = FinPresCat::terminal();
        let x = FinSetObj::range(2);
        let swap = FinFn::from_indices(x.clone(), x.clone(), vec![1, 0]).unwrap();
        let d = Diagram {
            shape: &shape,
            objects: vec![x],
            arrows: vec![swap],
        };
        assert!(matches!(finite_colimit(&d), Err(Error::Diagram(_))));
    }

    #[test]
    fn factor_rejects_non_cocones() {
        let shape = FinPresCat::parallel_pair();
        let src = FinSetObj::range(1);
        let tgt = FinSetObj::letters(2);
        let ca = FinFn::from_fn(src.clone(), tgt.clone(), |_| Label::atom("a")).unwrap();
        let cb = FinFn::from_fn(src.clone(), tgt.clone(), |_| Label::atom("b")).unwrap();
        let d = Diagram {
            shape: &shape,
            objects: vec![src.clone(), tgt.clone()],
            arrows: vec![FinFn::identity(&src), FinFn::identity(&tgt), ca, cb],
        };
        let c = finite_colimit(&d).unwrap();
        let out = FinSetObj::range(2);
        let leg0 = FinFn::from_indices(src.clone(), out.clone(), vec![0]).unwrap();
        let good = FinFn::from_indices(tgt.clone(), out.clone(), vec![0, 0]).unwrap();
        let bad = FinFn::from_indices(tgt, out, vec![0, 1]).unwrap();
        assert!(c.factor(&[leg0.clone(), good]).is_ok());
        assert!(c.factor(&[leg0, bad]).is_err());
    }
}
