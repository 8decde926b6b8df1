use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::skew::{whisker_left, whisker_right, Orientation, SkMor, SkObj, SkewMonoidal};
use crate::error::{Error, Result};
use crate::kernel::{chain, compare, expect_boundary, Category};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Direction {
    Lax,
    Oplax,
}

/// A functor between left skew monoidal categories with a binary and a
/// nullary structure map.
///
/// Lax: `φ_{A,B} : FA ⊗ FB → F(A⊗B)` and `ι : I → FI`.
/// Oplax: `φ̂_{A,B} : F(A⊗B) → FA ⊗ FB` and `ι̂ : FI → I`.
pub trait MonoidalFunctor {
    type Src: SkewMonoidal;
    type Tgt: SkewMonoidal;

    fn source(&self) -> &Self::Src;
    fn target(&self) -> &Self::Tgt;
    fn direction(&self) -> Direction;
    fn obj(&self, a: &SkObj<Self::Src>) -> Result<SkObj<Self::Tgt>>;
    fn mor(&self, f: &SkMor<Self::Src>) -> Result<SkMor<Self::Tgt>>;
    fn binary(&self, a: &SkObj<Self::Src>, b: &SkObj<Self::Src>) -> Result<SkMor<Self::Tgt>>;
    fn nullary(&self) -> Result<SkMor<Self::Tgt>>;
}

fn both_left<F: MonoidalFunctor>(f: &F, want: Direction) -> Result<()> {
    if f.direction() != want {
        return Err(Error::structure(format!("expected a {want:?} functor, got {:?}", f.direction())));
    }
    if f.source().orientation() != Orientation::Left || f.target().orientation() != Orientation::Left {
        return Err(Error::structure("monoidal functor suites expect left skew source and target"));
    }
    Ok(())
}

fn label<T: core::fmt::Display>(objs: &[&T]) -> Vec<String> {
    objs.iter().map(|o| format!("{o}")).collect()
}

/// Associativity and both unit laws of a lax monoidal functor:
///
/// ```text
/// F(γ_{X,Y,Z}) ∘ φ_{X⊗Y,Z} ∘ (φ_{X,Y}⊗FZ) = φ_{X,Y⊗Z} ∘ (FX⊗φ_{Y,Z}) ∘ γ_{FX,FY,FZ}
/// λ_{FX} = F(λ_X) ∘ φ_{I,X} ∘ (ι⊗FX)
/// F(ρ_X) = φ_{X,I} ∘ (FX⊗ι) ∘ ρ_{FX}
/// ```
pub fn check_lax_monoidal<F: MonoidalFunctor>(f: &F, palette: &[SkObj<F::Src>]) -> Result<CheckReport> {
    both_left(f, Direction::Lax)?;
    let (s, t) = (f.source(), f.target());
    let tc = t.category();
    let iota = f.nullary()?;
    expect_boundary(tc, &iota, &t.unit(), &f.obj(&s.unit())?, "ι")?;
    for a in palette {
        for b in palette {
            let dom = t.tensor(&f.obj(a)?, &f.obj(b)?)?;
            let cod = f.obj(&s.tensor(a, b)?)?;
            expect_boundary(tc, &f.binary(a, b)?, &dom, &cod, "φ")?;
        }
    }
    let mut r = CheckReport::new("lax monoidal");
    for x in palette {
        let fx = f.obj(x)?;
        for y in palette {
            let fy = f.obj(y)?;
            let xy = s.tensor(x, y)?;
            for z in palette {
                let fz = f.obj(z)?;
                let yz = s.tensor(y, z)?;
                let lhs = chain(
                    tc,
                    &[
                        whisker_right(t, &f.binary(x, y)?, &fz)?,
                        f.binary(&xy, z)?,
                        f.mor(&s.associator(x, y, z)?)?,
                    ],
                )?;
                let rhs = chain(
                    tc,
                    &[t.associator(&fx, &fy, &fz)?, whisker_left(t, &fx, &f.binary(y, z)?)?, f.binary(x, &yz)?],
                )?;
                r.record("associativity", label(&[x, y, z]), compare(tc, &lhs, &rhs)?);
            }
        }
    }
    let i = s.unit();
    for x in palette {
        let fx = f.obj(x)?;
        let rhs = chain(tc, &[whisker_right(t, &iota, &fx)?, f.binary(&i, x)?, f.mor(&s.left_unitor(x)?)?])?;
        r.record("left unitality", label(&[x]), compare(tc, &t.left_unitor(&fx)?, &rhs)?);
        let rhs = chain(tc, &[t.right_unitor(&fx)?, whisker_left(t, &fx, &iota)?, f.binary(x, &i)?])?;
        r.record("right unitality", label(&[x]), compare(tc, &f.mor(&s.right_unitor(x)?)?, &rhs)?);
    }
    Ok(r)
}

/// Associativity and both unit laws of an oplax monoidal functor:
///
/// ```text
/// γ_{GA,GB,GC} ∘ (φ̂_{A,B}⊗GC) ∘ φ̂_{A⊗B,C} = (GA⊗φ̂_{B,C}) ∘ φ̂_{A,B⊗C} ∘ G(γ_{A,B,C})
/// λ_{GA} ∘ (ι̂⊗GA) ∘ φ̂_{I,A} = G(λ_A)
/// (GA⊗ι̂) ∘ φ̂_{A,I} ∘ G(ρ_A) = ρ_{GA}
/// ```
pub fn check_oplax_monoidal<F: MonoidalFunctor>(f: &F, palette: &[SkObj<F::Src>]) -> Result<CheckReport> {
    both_left(f, Direction::Oplax)?;
    let (s, t) = (f.source(), f.target());
    let tc = t.category();
    let iota = f.nullary()?;
    expect_boundary(tc, &iota, &f.obj(&s.unit())?, &t.unit(), "ι̂")?;
    for a in palette {
        for b in palette {
            let dom = f.obj(&s.tensor(a, b)?)?;
            let cod = t.tensor(&f.obj(a)?, &f.obj(b)?)?;
            expect_boundary(tc, &f.binary(a, b)?, &dom, &cod, "φ̂")?;
        }
    }
    let mut r = CheckReport::new("oplax monoidal");
    for a in palette {
        let ga = f.obj(a)?;
        for b in palette {
            let gb = f.obj(b)?;
            let ab = s.tensor(a, b)?;
            for c in palette {
                let gc = f.obj(c)?;
                let bc = s.tensor(b, c)?;
                let lhs = chain(
                    tc,
                    &[f.binary(&ab, c)?, whisker_right(t, &f.binary(a, b)?, &gc)?, t.associator(&ga, &gb, &gc)?],
                )?;
                let rhs = chain(
                    tc,
                    &[
                        f.mor(&s.associator(a, b, c)?)?,
                        f.binary(a, &bc)?,
                        whisker_left(t, &ga, &f.binary(b, c)?)?,
                    ],
                )?;
                r.record("associativity", label(&[a, b, c]), compare(tc, &lhs, &rhs)?);
            }
        }
    }
    let i = s.unit();
    for a in palette {
        let ga = f.obj(a)?;
        let lhs = chain(tc, &[f.binary(&i, a)?, whisker_right(t, &iota, &ga)?, t.left_unitor(&ga)?])?;
        r.record("left unitality", label(&[a]), compare(tc, &lhs, &f.mor(&s.left_unitor(a)?)?)?);
        let lhs = chain(tc, &[f.mor(&s.right_unitor(a)?)?, f.binary(a, &i)?, whisker_left(t, &ga, &iota)?])?;
        r.record("right unitality", label(&[a]), compare(tc, &lhs, &t.right_unitor(&ga)?)?);
    }
    Ok(r)
}

/// The identity functor with identity structure maps, in either direction.
pub struct IdentityMonoidal<S> {
    pub skew: S,
    pub direction: Direction,
}

impl<S: SkewMonoidal> MonoidalFunctor for IdentityMonoidal<S> {
    type Src = S;
    type Tgt = S;

    fn source(&self) -> &S {
        &self.skew
    }
    fn target(&self) -> &S {
        &self.skew
    }
    fn direction(&self) -> Direction {
        self.direction
    }
    fn obj(&self, a: &SkObj<S>) -> Result<SkObj<S>> {
        Ok(a.clone())
    }
    fn mor(&self, f: &SkMor<S>) -> Result<SkMor<S>> {
        Ok(f.clone())
    }
    fn binary(&self, a: &SkObj<S>, b: &SkObj<S>) -> Result<SkMor<S>> {
        Ok(self.skew.category().identity(&self.skew.tensor(a, b)?))
    }
    fn nullary(&self) -> Result<SkMor<S>> {
        Ok(self.skew.category().identity(&self.skew.unit()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::skew::tests::{small_sets, Cartesian};

    #[test]
    fn identity_is_lax_and_oplax() {
        let lax = IdentityMonoidal { skew: Cartesian, direction: Direction::Lax };
        let r = check_lax_monoidal(&lax, &small_sets()).unwrap();
        assert!(r.is_pass(), "{r}");
        assert_eq!(r.count_of("associativity"), 27);
        let oplax = IdentityMonoidal { skew: Cartesian, direction: Direction::Oplax };
        assert!(check_oplax_monoidal(&oplax, &small_sets()).unwrap().is_pass());
    }

    #[test]
    fn direction_mismatch_is_an_error() {
        let lax = IdentityMonoidal { skew: Cartesian, direction: Direction::Lax };
        assert!(check_oplax_monoidal(&lax, &small_sets()).is_err());
    }
}
