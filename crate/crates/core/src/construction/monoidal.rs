use alloc::format;
use alloc::vec;

use crate::coherence::{
    mult_backward, mult_forward, unit_backward, Adjunction, Direction, LeftAction, MonoidalFunctor, SkMor, SkObj, SkewMonoidal,
};
use crate::error::Result;
use crate::kernel::{compare, Category};
use crate::report::CheckReport;

use super::engine::{ActionSkew, AObj, AMor, VCat, VMor, VObj};

/// `J_* : V → (A, ⊛)` with
/// `φ_{X,Y} = m⁻¹_{X,Y,J} ∘ (ε_X * J_*Y)` and `ι = u_J⁻¹`.
pub struct LaxRightAdjoint<'a, L: LeftAction, A>(pub &'a ActionSkew<L, A>);

impl<'a, L, A> MonoidalFunctor for LaxRightAdjoint<'a, L, A>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    type Src = L::Acting;
    type Tgt = ActionSkew<L, A>;

    fn source(&self) -> &L::Acting {
        self.0.action().acting()
    }
    fn target(&self) -> &ActionSkew<L, A> {
        self.0
    }
    fn direction(&self) -> Direction {
        Direction::Lax
    }
    fn obj(&self, x: &VObj<L>) -> Result<AObj<L>> {
        self.0.adjunction().right_obj(x)
    }
    fn mor(&self, f: &VMor<L>) -> Result<AMor<L>> {
        self.0.adjunction().right_mor(f)
    }
    fn binary(&self, x: &VObj<L>, y: &VObj<L>) -> Result<AMor<L>> {
        let (s, l) = (self.0, self.0.action());
        let gy = s.adjunction().right_obj(y)?;
        let eps = l.act_mor(&s.adjunction().counit(x)?, &l.carrier().identity(&gy))?;
        l.carrier().compose(&mult_backward(l, x, y, s.j())?, &eps)
    }
    fn nullary(&self) -> Result<AMor<L>> {
        unit_backward(self.0.action(), self.0.j())
    }
}

/// `J_! : (A, ⊛) → V` with `φ̂ = γ̃` and `ι̂ = ε_I ∘ J_!(u_J⁻¹)`.
pub struct OplaxLeftAdjoint<'a, L: LeftAction, A>(pub &'a ActionSkew<L, A>);

impl<'a, L, A> MonoidalFunctor for OplaxLeftAdjoint<'a, L, A>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    type Src = ActionSkew<L, A>;
    type Tgt = L::Acting;

    fn source(&self) -> &ActionSkew<L, A> {
        self.0
    }
    fn target(&self) -> &L::Acting {
        self.0.action().acting()
    }
    fn direction(&self) -> Direction {
        Direction::Oplax
    }
    fn obj(&self, a: &AObj<L>) -> Result<VObj<L>> {
        self.0.adjunction().left_obj(a)
    }
    fn mor(&self, f: &AMor<L>) -> Result<VMor<L>> {
        self.0.adjunction().left_mor(f)
    }
    fn binary(&self, a: &SkObj<ActionSkew<L, A>>, b: &SkObj<ActionSkew<L, A>>) -> Result<SkMor<L::Acting>> {
        self.0.fusion(a, b)
    }
    fn nullary(&self) -> Result<VMor<L>> {
        self.0.unit_counit()
    }
}

/// `γ_{A,B,C}` against `m ∘ (φ̂_{A,B} * C)` on a palette.
pub fn check_associator_factors<L, A>(s: &ActionSkew<L, A>, objs: &[AObj<L>]) -> Result<CheckReport>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    let l = s.action();
    let cat = l.carrier();
    let oplax = OplaxLeftAdjoint(s);
    let mut r = CheckReport::new("fusion");
    for a in objs {
        for b in objs {
            let (fa, fb) = (oplax.obj(a)?, oplax.obj(b)?);
            for c in objs {
                let gc = l.act_mor(&oplax.binary(a, b)?, &cat.identity(c))?;
                let rhs = cat.compose(&mult_forward(l, &fa, &fb, c)?, &gc)?;
                let names = vec![format!("{a}"), format!("{b}"), format!("{c}")];
                r.record("γ factors through φ̂", names, compare(cat, &s.associator(a, b, c)?, &rhs)?);
            }
        }
    }
    Ok(r)
}
