//! The four action/adjoint combinations. Only [`ActionSkew`] carries
//! formulas; the other three are the same engine run on opposite or
//! reversed data and read back through the skew wrappers.
//!
//! | variant | action | adjoint of `J_*` | orientation | `A ⊛ B` |
//! |---------|--------|------------------|-------------|------------|
//! | LL      | left   | left `J_!`       | left        | `J_!A * B` |
//! | LR      | left   | right `J_#`      | right       | `J_#A * B` |
//! | RL      | right  | left `J^!`       | right       | `A * J^!B` |
//! | RR      | right  | right `J^#`      | left        | `A * J^#B` |
//!
//! For LR and RR the adjunction passed in is the one with `J_*`
//! (resp. `J^*`) on the left.

use crate::coherence::{
    Adjunction, LeftAction, OpAdjunction, OpLeftAction, OpRevRightAction, OpSkew, Orientation, RevRightAction,
    RevSkew, RightAction, SkObj, SkewMonoidal,
};
use crate::error::Result;
use crate::kernel::Obj;

use super::engine::{ActionSkew, VCat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Variant {
    LL,
    LR,
    RL,
    RR,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::LL, Variant::LR, Variant::RL, Variant::RR];

    pub fn orientation(self) -> Orientation {
        match self {
            Variant::LL | Variant::RR => Orientation::Left,
            Variant::LR | Variant::RL => Orientation::Right,
        }
    }

    pub fn tensor_formula(self) -> &'static str {
        match self {
            Variant::LL => "J_!A * B",
            Variant::LR => "J_#A * B",
            Variant::RL => "A * J^!B",
            Variant::RR => "A * J^#B",
        }
    }
}

impl core::fmt::Display for Variant {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Variant::LL => "LL",
            Variant::LR => "LR",
            Variant::RL => "RL",
            Variant::RR => "RR",
        })
    }
}

impl core::str::FromStr for Variant {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "LL" | "ll" => Ok(Variant::LL),
            "LR" | "lr" => Ok(Variant::LR),
            "RL" | "rl" => Ok(Variant::RL),
            "RR" | "rr" => Ok(Variant::RR),
            _ => Err(crate::Error::structure(alloc::format!("unknown variant {s:?}"))),
        }
    }
}

pub type LeftLeft<L, A> = ActionSkew<L, A>;
pub type LeftRight<L, A> = OpSkew<ActionSkew<OpLeftAction<L>, OpAdjunction<A>>>;
pub type RightLeft<R, A> = RevSkew<ActionSkew<RevRightAction<R>, A>>;
pub type RightRight<R, A> = RevSkew<OpSkew<ActionSkew<OpRevRightAction<R>, OpAdjunction<A>>>>;

type RV<R> = <R as RightAction>::Acting;
type RObj<R> = Obj<<R as RightAction>::Carrier>;

/// Left action, left adjoint `J_! ⊣ J_*`.
pub fn build_ll<L, A>(action: L, adj: A, j: Obj<L::Carrier>, vs: &[SkObj<L::Acting>], objs: &[Obj<L::Carrier>]) -> Result<LeftLeft<L, A>>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    let s = ActionSkew::new(action, adj, j);
    s.validate(vs, objs)?;
    Ok(s)
}

/// Left action, right adjoint: `adj` is `J_* ⊣ J_#`.
pub fn build_lr<L, A>(action: L, adj: A, j: Obj<L::Carrier>, vs: &[SkObj<L::Acting>], objs: &[Obj<L::Carrier>]) -> Result<LeftRight<L, A>>
where
    L: LeftAction,
    L::Acting: Clone,
    A: Adjunction<Source = VCat<L>, Target = L::Carrier>,
{
    let s = ActionSkew::new(OpLeftAction::new(action), OpAdjunction::new(adj), j);
    s.validate(vs, objs)?;
    Ok(OpSkew::new(s))
}

/// Right action, left adjoint `J^! ⊣ J^*`.
pub fn build_rl<R, A>(action: R, adj: A, j: RObj<R>, vs: &[SkObj<RV<R>>], objs: &[RObj<R>]) -> Result<RightLeft<R, A>>
where
    R: RightAction,
    R::Acting: Clone,
    A: Adjunction<Source = R::Carrier, Target = <RV<R> as SkewMonoidal>::Cat>,
{
    let s = ActionSkew::new(RevRightAction::new(action), adj, j);
    s.validate(vs, objs)?;
    Ok(RevSkew(s))
}

/// Right action, right adjoint: `adj` is `J^* ⊣ J^#`.
pub fn build_rr<R, A>(action: R, adj: A, j: RObj<R>, vs: &[SkObj<RV<R>>], objs: &[RObj<R>]) -> Result<RightRight<R, A>>
where
    R: RightAction,
    R::Acting: Clone,
    A: Adjunction<Source = <RV<R> as SkewMonoidal>::Cat, Target = R::Carrier>,
{
    let s = ActionSkew::new(OpLeftAction::new(RevRightAction::new(action)), OpAdjunction::new(adj), j);
    s.validate(vs, objs)?;
    Ok(RevSkew(OpSkew::new(s)))
}
