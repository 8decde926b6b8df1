//! Skew monoidal structures induced on actegories.
//!
//! Given a strong action `* : V × A → A` of a (skew) monoidal category and an
//! object `J` of `A` whose induced functor `J_* = (−) * J` has a left adjoint
//! `J_!`, the actegory carries a left skew monoidal structure with tensor
//! `A ⊛ B = J_!A * B`. This crate builds that structure (and its three
//! mirror variants) for concrete finite categories and checks every
//! coherence law by exhaustive evaluation over finite carriers.
//!
//! Layout:
//! - [`finset`]: finite sets, total functions and the finite (co)limits the
//!   instances need.
//! - [`kernel`]: the [`Category`](kernel::Category) abstraction, opposites,
//!   finitely presented categories, functor categories and generic law
//!   checkers.
//! - [`coherence`]: skew monoidal categories, strong actions, adjunctions,
//!   (op)lax monoidal functors, braidings and closedness, each with a checker
//!   that reports concrete witnesses.
//! - [`construction`]: the action-plus-adjoint construction, fusion maps and
//!   strengths, induced monoidal structure on the adjunction, invertibility
//!   probes and induced braidings.
//! - [`instances`]: monoid warping, Kan extensions on functor categories,
//!   copowers and powers, exponential warping and the self-action.
//! - [`mutation`]: single-entry corruptions of passing instances, used to
//!   show that every checker actually rejects something.
#![no_std]

extern crate alloc;

pub mod coherence;
pub mod construction;
pub mod error;
pub mod finset;
pub mod instances;
pub mod kernel;
pub mod label;
pub mod mutation;
pub mod report;

pub use error::Error;
pub use finset::{FinFn, FinSetObj, Inversion};
pub use label::Label;
pub use report::{CheckReport, Witness};
