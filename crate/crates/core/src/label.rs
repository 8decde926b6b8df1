use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// An element of a finite set.
///
/// Labels are structured so that carriers built along different routes
/// (products of products, quotients, function spaces) still compare on the
/// nose. The derived order is the canonical order used everywhere: variant
/// first, then contents lexicographically. In particular `Inl` sorts before
/// `Inr`, and pairs sort lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Label {
    /// The element of the one-point set.
    Point,
    Int(i64),
    Atom(String),
    Pair(Box<Label>, Box<Label>),
    Inl(Box<Label>),
    Inr(Box<Label>),
    /// A function, recorded as its images in domain order.
    Table(Vec<Label>),
    /// An equivalence class, named by its smallest member.
    Class(Box<Label>),
}

impl Label {
    pub fn atom(name: &str) -> Self {
        Label::Atom(name.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Pair(Box::new(a), Box::new(b))
    }

    pub fn inl(a: Label) -> Self {
        Label::Inl(Box::new(a))
    }

    pub fn inr(a: Label) -> Self {
        Label::Inr(Box::new(a))
    }

    pub fn class(rep: Label) -> Self {
        Label::Class(Box::new(rep))
    }

    pub fn as_pair(&self) -> Option<(&Label, &Label)> {
        match self {
            Label::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_table(&self) -> Option<&[Label]> {
        match self {
            Label::Table(t) => Some(t),
            _ => None,
        }
    }

    /// `(a, (b, c))`, the right-nested triple.
    pub fn triple(a: Label, b: Label, c: Label) -> Self {
        Label::pair(a, Label::pair(b, c))
    }
}

impl From<i64> for Label {
    fn from(n: i64) -> Self {
        Label::Int(n)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Atom(String::from(s))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Point => f.write_str("*"),
            Label::Int(n) => write!(f, "{n}"),
            Label::Atom(s) => f.write_str(s),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
            Label::Inl(a) => write!(f, "inl({a})"),
            Label::Inr(a) => write!(f, "inr({a})"),
            Label::Table(t) => {
                f.write_str("[")?;
                for (i, l) in t.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{l}")?;
                }
                f.write_str("]")
            }
            Label::Class(r) => write!(f, "cls({r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injections_order_left_before_right() {
        assert!(Label::inl(Label::Int(9)) < Label::inr(Label::Int(0)));
    }

    #[test]
    fn pairs_order_lexicographically() {
        let p = |a, b| Label::pair(Label::Int(a), Label::Int(b));
        assert!(p(0, 5) < p(1, 0));
        assert!(p(1, 0) < p(1, 1));
    }

    #[test]
    fn display_is_compact() {
        let l = Label::pair(Label::Int(1), Label::Table(alloc::vec![Label::atom("a"), Label::Point]));
        assert_eq!(alloc::format!("{l}"), "(1,[a,*])");
    }
}
