use alloc::string::String;

/// Errors raised while building or composing morphisms.
///
/// Axiom failures are never errors: they are recorded in a
/// [`CheckReport`](crate::report::CheckReport). An `Error` means the data
/// itself is malformed (boundaries do not match, a component is missing,
/// a table is not a monoid, ...).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot compose: codomain {first_cod} of the first map differs from domain {second_dom} of the second")]
    Composition { first_cod: String, second_dom: String },
    #[error("{label} is not an element of {set}")]
    NotAnElement { label: String, set: String },
    #[error("duplicate element {0}")]
    DuplicateLabel(String),
    #[error("malformed structure: {0}")]
    Structure(String),
    #[error("missing component: {0}")]
    Index(String),
    #[error("diagram is not functorial: {0}")]
    Diagram(String),
    #[error("invalid monoid: {0}")]
    Monoid(String),
    #[error("not a functor: {0}")]
    Functor(String),
    #[error("adjunction triangle identity fails: {0}")]
    Adjunction(String),
    #[error("braiding fails: {0}")]
    Braiding(String),
    #[error("too large to enumerate: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl Error {
    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
}
