//! Axiom suites for skew monoidal structures, actions, adjunctions,
//! monoidal functors, braidings and closedness.

mod action;
mod adjunction;
mod braiding;
mod closed;
mod monoidal_functor;
mod skew;

pub use skew::{
    check_skew_monoidal, check_skew_naturality, inverse, whisker_left, whisker_right, OpMonoidal, OpSkew,
    Orientation, RevSkew, SkMor, SkObj, SkewMonoidal,
};
pub use action::{
    act_left, act_right, check_right_action, check_strong_action, mult_backward, mult_forward, unit_backward,
    unit_forward, LeftAction, OpLeftAction, OpRevRightAction, RevRightAction, RightAction,
};
pub use adjunction::{
    check_adjunction_naturality, check_adjunction_triangles, check_transpose_round_trip, transpose, untranspose,
    Adjunction, IdentityAdjunction, LeftAdjoint, OpAdjunction, RightAdjoint,
};
pub use braiding::{
    check_braiding_symmetry, check_hexagons, check_left_braiding, check_right_braiding, check_symmetry, BraidSide,
    Braiding, DualBraiding, SkewBraiding,
};
pub use monoidal_functor::{check_lax_monoidal, check_oplax_monoidal, Direction, IdentityMonoidal, MonoidalFunctor};
pub use closed::{check_closedness, ClosedSide, InternalHom};
