use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coherence::{
    check_adjunction_triangles, check_strong_action, mult_backward, mult_forward, unit_backward, unit_forward, Adjunction, LeftAction,
    Orientation, SkMor, SkObj, SkewMonoidal,
};
use crate::error::{Error, Result};
use crate::kernel::{chain, compare, Category, Mor, Obj};
use crate::report::CheckReport;

pub(crate) type VCat<L> = <<L as LeftAction>::Acting as SkewMonoidal>::Cat;
pub(crate) type VObj<L> = SkObj<<L as LeftAction>::Acting>;
pub(crate) type VMor<L> = SkMor<<L as LeftAction>::Acting>;
pub(crate) type AObj<L> = Obj<<L as LeftAction>::Carrier>;
pub(crate) type AMor<L> = Mor<<L as LeftAction>::Carrier>;

/// The skew monoidal structure on the carrier of a strong action, given an
/// object `J` and a left adjoint `J_!` of `J_* = (−) * J`:
///
/// ```text
/// A ⊛ B = J_!A * B
/// γ_{A,B,C} = m_{J_!A,J_!B,C} ∘ (γ̃_{A,B} * C)
/// λ_A = u_A ∘ (ε_I * A) ∘ (J_!(u_J⁻¹) * A)
/// ρ_A = η_A
/// ```
///
/// `γ̃_{A,B}` is the strength `ς_{J_!A,B}`, the adjoint transpose of
/// `m⁻¹_{X,J_!B,J} ∘ (X * η_B)` at `X = J_!A`.
///
/// `new` does no checking; [`ActionSkew::validate`] runs the preconditions
/// on a palette.
pub struct ActionSkew<L: LeftAction, A> {
    action: L,
    adj: A,
    j: AObj<L>,
}

impl<L, A> ActionSkew<L, A>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    pub fn new(action: L, adj: A, j: AObj<L>) -> Self {
        ActionSkew { action, adj, j }
    }

    pub fn action(&self) -> &L {
        &self.action
    }

    pub fn adjunction(&self) -> &A {
        &self.adj
    }

    pub fn j(&self) -> &AObj<L> {
        &self.j
    }

    /// Preconditions on a palette: the right adjoint is `X ↦ X * J`, the
    /// triangle identities hold, and `m`, `u` are invertible.
    pub fn validate(&self, vs: &[VObj<L>], objs: &[AObj<L>]) -> Result<()> {
        let l = &self.action;
        for x in vs {
            let (g, xj) = (self.adj.right_obj(x)?, l.act(x, &self.j)?);
            if g != xj {
                return Err(Error::structure(format!("right adjoint sends {x} to {g}, but {x} * J is {xj}")));
            }
        }
        let tri = check_adjunction_triangles(&self.adj, objs, vs)?;
        if let Some(f) = first_failure(&tri) {
            return Err(Error::Adjunction(f));
        }
        let mut targets: Vec<AObj<L>> = objs.to_vec();
        targets.push(self.j.clone());
        let mut actors: Vec<VObj<L>> = vs.to_vec();
        for a in objs {
            actors.push(self.adj.left_obj(a)?);
        }
        for a in &targets {
            unit_backward(l, a)?;
            for x in &actors {
                for y in &actors {
                    mult_backward(l, x, y, a)?;
                }
            }
        }
        Ok(())
    }

    /// The strong action axioms and the triangle identities on a palette,
    /// as one report. Unlike [`validate`](Self::validate) this does not
    /// stop at the first failure.
    pub fn preflight(&self, vs: &[VObj<L>], objs: &[AObj<L>]) -> Result<CheckReport>
    where
        L::Acting: Clone,
    {
        let mut r = check_strong_action(&self.action, vs, objs)?;
        r.merge(check_adjunction_triangles(&self.adj, objs, vs)?);
        r.suite = "preflight".into();
        Ok(r)
    }

    /// `η_A : A → J_!A * J`, the right unitor.
    pub fn eta(&self, a: &AObj<L>) -> Result<AMor<L>> {
        self.adj.unit(a)
    }

    /// `m⁻¹_{X,J_!B,J} ∘ (X * η_B) : X * B → (X ⊗ J_!B) * J`.
    pub fn strength_transpose(&self, x: &VObj<L>, b: &AObj<L>) -> Result<AMor<L>> {
        let l = &self.action;
        let fb = self.adj.left_obj(b)?;
        let xe = l.act_mor(&l.acting().category().identity(x), &self.eta(b)?)?;
        chain(l.carrier(), &[xe, mult_backward(l, x, &fb, &self.j)?])
    }

    /// `ς_{X,B} : J_!(X * B) → X ⊗ J_!B`.
    pub fn strength(&self, x: &VObj<L>, b: &AObj<L>) -> Result<VMor<L>> {
        let v = self.action.acting();
        let target = v.tensor(x, &self.adj.left_obj(b)?)?;
        crate::coherence::untranspose(&self.adj, &target, &self.strength_transpose(x, b)?)
    }

    /// `γ̃_{A,B} = ς_{J_!A,B} : J_!(J_!A * B) → J_!A ⊗ J_!B`.
    pub fn fusion(&self, a: &AObj<L>, b: &AObj<L>) -> Result<VMor<L>> {
        self.strength(&self.adj.left_obj(a)?, b)
    }

    /// `ε_I ∘ J_!(u_J⁻¹) : J_!J → I`.
    pub fn unit_counit(&self) -> Result<VMor<L>> {
        let v = self.action.acting();
        let i = v.unit();
        let lifted = self.adj.left_mor(&unit_backward(&self.action, &self.j)?)?;
        v.category().compose(&self.adj.counit(&i)?, &lifted)
    }

    /// The strength as `ε ∘ J_!(m⁻¹) ∘ J_!(X * η)`, applying the left
    /// adjoint to each factor separately.
    pub fn strength_split(&self, x: &VObj<L>, b: &AObj<L>) -> Result<VMor<L>> {
        let l = &self.action;
        let v = l.acting();
        let fb = self.adj.left_obj(b)?;
        let xe = l.act_mor(&v.category().identity(x), &self.eta(b)?)?;
        chain(
            v.category(),
            &[
                self.adj.left_mor(&xe)?,
                self.adj.left_mor(&mult_backward(l, x, &fb, &self.j)?)?,
                self.adj.counit(&v.tensor(x, &fb)?)?,
            ],
        )
    }

    /// The strength and fusion equations on a palette:
    /// - "AT": `(ς * J) ∘ η_{X*B} = m⁻¹ ∘ (X * η_B)`;
    /// - "AT*": `ς = ε ∘ J_!(m⁻¹) ∘ J_!(X * η_B)`;
    /// - "fusion at J_!A": `γ̃_{A,B}` against the split strength at `J_!A`;
    /// - "ρ is η".
    pub fn check_fusion(&self, vs: &[VObj<L>], objs: &[AObj<L>]) -> Result<CheckReport> {
        let l = &self.action;
        let (a_cat, v_cat) = (l.carrier(), l.acting().category());
        let mut r = CheckReport::new("fusion");
        for x in vs {
            for b in objs {
                let names = vec![format!("{x}"), format!("{b}")];
                let s = self.strength(x, b)?;
                let lhs = chain(a_cat, &[self.eta(&l.act(x, b)?)?, self.adj.right_mor(&s)?])?;
                r.record("AT", names.clone(), compare(a_cat, &lhs, &self.strength_transpose(x, b)?)?);
                r.record("AT*", names, compare(v_cat, &s, &self.strength_split(x, b)?)?);
            }
        }
        for a in objs {
            for b in objs {
                let split = self.strength_split(&self.adj.left_obj(a)?, b)?;
                r.record("fusion at J_!A", vec![format!("{a}"), format!("{b}")], compare(v_cat, &self.fusion(a, b)?, &split)?);
            }
            r.record("ρ is η", vec![format!("{a}")], compare(a_cat, &self.right_unitor(a)?, &self.eta(a)?)?);
        }
        Ok(r)
    }
}

impl<L, A> SkewMonoidal for ActionSkew<L, A>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    type Cat = L::Carrier;

    fn category(&self) -> &L::Carrier {
        self.action.carrier()
    }
    fn orientation(&self) -> Orientation {
        Orientation::Left
    }
    fn unit(&self) -> AObj<L> {
        self.j.clone()
    }
    fn tensor(&self, a: &AObj<L>, b: &AObj<L>) -> Result<AObj<L>> {
        self.action.act(&self.adj.left_obj(a)?, b)
    }
    fn tensor_mor(&self, f: &AMor<L>, g: &AMor<L>) -> Result<AMor<L>> {
        self.action.act_mor(&self.adj.left_mor(f)?, g)
    }
    fn associator(&self, a: &AObj<L>, b: &AObj<L>, c: &AObj<L>) -> Result<AMor<L>> {
        let l = &self.action;
        let (fa, fb) = (self.adj.left_obj(a)?, self.adj.left_obj(b)?);
        let gc = l.act_mor(&self.fusion(a, b)?, &l.carrier().identity(c))?;
        chain(l.carrier(), &[gc, mult_forward(l, &fa, &fb, c)?])
    }
    fn left_unitor(&self, a: &AObj<L>) -> Result<AMor<L>> {
        let l = &self.action;
        let k = l.act_mor(&self.unit_counit()?, &l.carrier().identity(a))?;
        chain(l.carrier(), &[k, unit_forward(l, a)?])
    }
    fn right_unitor(&self, a: &AObj<L>) -> Result<AMor<L>> {
        self.eta(a)
    }
}

pub(crate) fn first_failure(r: &CheckReport) -> Option<String> {
    r.failures.first().map(|f| format!("{} at {}", f.axiom, f.objects.join(", ")))
}
