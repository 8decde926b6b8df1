//! Finite instances of the construction.

mod cartesian;
mod kan;
mod monoid;
mod powers;

pub use cartesian::{CartesianFinSet, RightSelfAction, SelfAction, SelfAdjunction, Swap};
pub use kan::{
    functor_palette, kan_endo_palette, kan_instance, left_kan_extension, Endo, EndoCat, EndoComposition, EndoMor,
    KanAdjunction, KanInstance, LanAtom, LanEvaluation, Postcomposition,
};
pub use monoid::{
    group_iff_associator_invertible, monoid_warping, mset_palette, unit_invertibility, GroupCheck, LeftMonoidHom,
    RightMonoidHom, UnitCheck, tensor_label, FreeForgetful, MSetCartesian, MSetCat, MSetMor, MSetObj, MSetSwap,
    MonoidAction, MonoidTable, MonoidWarping,
};
pub use powers::{
    copower_instance, exponential_warping_instance, op_finset, power_instance, Copower, CopowerAdjunction,
    ExponentialAdjunction, ExponentialWarping, OpFinSet, Power, PowerAction, PowerAdjunction,
};

use crate::coherence::{SkObj, SkewMonoidal};
use crate::construction::{ActionSkew, LeftLeft};
use crate::error::Result;

pub type SelfInstance<S> = LeftLeft<SelfAction<S>, SelfAdjunction<S>>;

/// A monoidal category acting on itself, `J = I` and `J_! = id`. Only the
/// structural preconditions are enforced here, so a mutated `V` still
/// builds and its defects surface in the checkers.
pub fn self_action_instance<S: SkewMonoidal + Clone>(v: S, palette: &[SkObj<S>]) -> Result<SelfInstance<S>> {
    let j = v.unit();
    let s = ActionSkew::new(SelfAction(v.clone()), SelfAdjunction(v), j);
    s.validate(palette, palette)?;
    Ok(s)
}
