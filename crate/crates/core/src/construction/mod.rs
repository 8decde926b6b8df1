//! The action-plus-adjoint construction and everything derived from it:
//! strengths and fusion maps, the four variants, the induced (op)lax
//! monoidal structures on the adjoints, invertibility probes and induced
//! braidings.

mod braiding;
mod engine;
mod monoidal;
mod probe;
mod variants;

pub use crate::coherence::{transpose, untranspose};
pub use braiding::{InducedLeftBraiding, InducedRightBraiding};
pub use engine::ActionSkew;
pub use monoidal::{check_associator_factors, LaxRightAdjoint, OplaxLeftAdjoint};
pub use probe::invertibility_probe;
pub use variants::{build_ll, build_lr, build_rl, build_rr, LeftLeft, LeftRight, RightLeft, RightRight, Variant};
