use crate::coherence::{
    check_hexagons, inverse, mult_backward, mult_forward, Adjunction, BraidSide, Braiding, LeftAction, OpAdjunction,
    OpRevRightAction, Orientation, RightAction, SkMor, SkObj, SkewBraiding, SkewMonoidal,
};
use crate::error::{Error, Result};
use crate::kernel::{chain, Category, Mor, Obj};

use super::engine::{first_failure, ActionSkew, VCat};
use super::variants::RightRight;

fn require_hexagons<C: Braiding>(c: &C, vs: &[SkObj<C::Host>]) -> Result<()> {
    let r = check_hexagons(c, vs)?;
    match first_failure(&r) {
        Some(f) => Err(Error::Braiding(f)),
        None => Ok(()),
    }
}

/// The left braiding on an LL structure induced by a braiding `c` of `V`:
/// `s^P_{A,B} = m_{J_!B,J_!A,P} ∘ (c_{J_!A,J_!B} * P) ∘ m⁻¹_{J_!A,J_!B,P}`.
pub struct InducedLeftBraiding<'a, L: LeftAction, A, C> {
    skew: &'a ActionSkew<L, A>,
    c: C,
}

impl<'a, L, A, C> InducedLeftBraiding<'a, L, A, C>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
    C: Braiding<Host = L::Acting>,
{
    /// Fails with a braiding error if `c` breaks a hexagon on `vs`.
    pub fn new(skew: &'a ActionSkew<L, A>, c: C, vs: &[SkObj<L::Acting>]) -> Result<Self> {
        require_hexagons(&c, vs)?;
        Ok(InducedLeftBraiding { skew, c })
    }
}

impl<'a, L, A, C> SkewBraiding for InducedLeftBraiding<'a, L, A, C>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
    C: Braiding<Host = L::Acting>,
{
    type Host = ActionSkew<L, A>;

    fn host(&self) -> &ActionSkew<L, A> {
        self.skew
    }
    fn side(&self) -> BraidSide {
        BraidSide::Left
    }
    fn component(&self, p: &Obj<L::Carrier>, a: &Obj<L::Carrier>, b: &Obj<L::Carrier>) -> Result<Mor<L::Carrier>> {
        let l = self.skew.action();
        let adj = self.skew.adjunction();
        let (fa, fb) = (adj.left_obj(a)?, adj.left_obj(b)?);
        let cp = l.act_mor(&self.c.braid(&fa, &fb)?, &l.carrier().identity(p))?;
        chain(l.carrier(), &[mult_backward(l, &fa, &fb, p)?, cp, mult_forward(l, &fb, &fa, p)?])
    }
}

/// The right braiding on an RR structure induced by a braiding `c` of `V`:
/// `s^P_{A,B} = m⁻¹_{P,J^#B,J^#A} ∘ (P * c_{J^#A,J^#B}) ∘ m_{P,J^#A,J^#B}`,
/// with `m : (P*X)*Y → P*(X⊗Y)` the multiplicator of the right action.
pub struct InducedRightBraiding<'a, R, A, C>
where
    R: RightAction,
    A: Adjunction<Source = <R::Acting as SkewMonoidal>::Cat, Target = R::Carrier>,
{
    skew: &'a RightRight<R, A>,
    c: C,
}

type RVObj<R> = SkObj<<R as RightAction>::Acting>;

impl<'a, R, A, C> InducedRightBraiding<'a, R, A, C>
where
    R: RightAction,
    A: Adjunction<Source = <R::Acting as SkewMonoidal>::Cat, Target = R::Carrier>,
    C: Braiding<Host = R::Acting>,
{
    pub fn new(skew: &'a RightRight<R, A>, c: C, vs: &[RVObj<R>]) -> Result<Self> {
        require_hexagons(&c, vs)?;
        Ok(InducedRightBraiding { skew, c })
    }

    fn core(&self) -> &ActionSkew<OpRevRightAction<R>, OpAdjunction<A>> {
        self.skew.0.inner()
    }

    fn action(&self) -> &R {
        self.core().action().inner().inner()
    }

    /// `(P*X)*Y → P*(X⊗Y)`.
    fn mult(&self, p: &Obj<R::Carrier>, x: &RVObj<R>, y: &RVObj<R>) -> Result<Mor<R::Carrier>> {
        let r = self.action();
        let m = r.multiplicator(p, x, y)?;
        match r.acting().orientation() {
            Orientation::Left => Ok(m),
            Orientation::Right => inverse(r.carrier(), &m, "multiplicator"),
        }
    }
}

impl<'a, R, A, C> SkewBraiding for InducedRightBraiding<'a, R, A, C>
where
    R: RightAction,
    A: Adjunction<Source = <R::Acting as SkewMonoidal>::Cat, Target = R::Carrier>,
    C: Braiding<Host = R::Acting>,
{
    type Host = RightRight<R, A>;

    fn host(&self) -> &RightRight<R, A> {
        self.skew
    }
    fn side(&self) -> BraidSide {
        BraidSide::Right
    }
    fn component(&self, p: &Obj<R::Carrier>, a: &Obj<R::Carrier>, b: &Obj<R::Carrier>) -> Result<SkMor<Self::Host>> {
        let r = self.action();
        let adj = self.core().adjunction().inner();
        let (ha, hb) = (adj.right_obj(a)?, adj.right_obj(b)?);
        let pc = r.act_mor(&r.carrier().identity(p), &self.c.braid(&ha, &hb)?)?;
        let back = inverse(r.carrier(), &self.mult(p, &hb, &ha)?, "multiplicator")?;
        chain(r.carrier(), &[self.mult(p, &ha, &hb)?, pc, back])
    }
}
