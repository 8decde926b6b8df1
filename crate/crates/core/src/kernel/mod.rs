//! Computable categories, functors and natural families, with law checkers.
//!
//! Categories with infinitely many objects (finite sets, functor categories)
//! are handled by palettes: every law is checked over a finite list of
//! objects or arrows supplied by the caller, and exhaustively over elements
//! once those are fixed.

mod category;
mod fincat;
mod functor;
mod functor_cat;
pub mod laws;

pub use category::{chain, compare, expect_boundary, names, Category, FinSet, Mor, Obj, Op};
pub use fincat::FinPresCat;
pub use functor::{apply_bifunctor, Bifunctor, Composite, FnBifunctor, FnFunctor, Functor, IdentityFunctor, NatFamily};
pub use functor_cat::{FunctorCat, NatTrans, SetFunctor};
pub use laws::{check_bifunctor_laws, check_category_laws, check_functor_laws, check_naturality};
