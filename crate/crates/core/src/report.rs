//! Check results with concrete failure witnesses.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::label::Label;

/// Why two morphisms differ, or why a morphism is not invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Witness {
    /// The first element (in canonical order) on which two parallel maps
    /// disagree. `component` names the index of a componentwise morphism
    /// (an object of the indexing category, or a probe carrier).
    Differ {
        component: Option<String>,
        element: Label,
        left: Label,
        right: Label,
    },
    /// Two distinct elements with the same image.
    NotInjective {
        component: Option<String>,
        first: Label,
        second: Label,
        image: Label,
    },
    /// A codomain element outside the image.
    NotSurjective {
        component: Option<String>,
        missed: Label,
    },
    /// Two arrows of a finitely presented category that should agree.
    DistinctArrows { left: String, right: String },
    /// Two hom-sets (or a hom-set and a formula) of different sizes.
    Count { expected: usize, found: usize },
    /// Anything else, stated as text.
    Note(String),
}

impl Witness {
    /// The same witness, attached to a named component.
    pub fn in_component(self, name: String) -> Self {
        match self {
            Witness::Differ {
                element,
                left,
                right,
                component: None,
            } => Witness::Differ {
                component: Some(name),
                element,
                left,
                right,
            },
            Witness::NotInjective {
                first,
                second,
                image,
                component: None,
            } => Witness::NotInjective {
                component: Some(name),
                first,
                second,
                image,
            },
            Witness::NotSurjective {
                missed,
                component: None,
            } => Witness::NotSurjective {
                component: Some(name),
                missed,
            },
            other => other,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |c: &Option<String>| match c {
            Some(c) => alloc::format!(" at component {c}"),
            None => String::new(),
        };
        match self {
            Witness::Differ {
                component,
                element,
                left,
                right,
            } => write!(f, "{element} ↦ {left} vs {right}{}", at(component)),
            Witness::NotInjective {
                component,
                first,
                second,
                image,
            } => write!(f, "{first} and {second} both map to {image}{}", at(component)),
            Witness::NotSurjective { component, missed } => {
                write!(f, "{missed} is not hit{}", at(component))
            }
            Witness::DistinctArrows { left, right } => write!(f, "{left} ≠ {right}"),
            Witness::Count { expected, found } => {
                write!(f, "expected {expected} elements, found {found}")
            }
            Witness::Note(s) => f.write_str(s),
        }
    }
}

/// One evaluated instance of an axiom: which law, at which objects.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Instance {
    pub axiom: String,
    pub objects: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Failure {
    pub axiom: String,
    pub objects: Vec<String>,
    pub witness: Witness,
}

/// Aggregated outcome of one suite.
///
/// `passed + failures.len() == checked.len()` always holds, and entries keep
/// the order in which the palette was enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub suite: String,
    pub checked: Vec<Instance>,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            checked: Vec::new(),
            passed: 0,
            failures: Vec::new(),
        }
    }

    /// Records one instance; `None` means the two sides agreed.
    pub fn record(&mut self, axiom: &str, objects: Vec<String>, outcome: Option<Witness>) {
        self.checked.push(Instance {
            axiom: axiom.into(),
            objects: objects.clone(),
        });
        match outcome {
            None => self.passed += 1,
            Some(witness) => self.failures.push(Failure {
                axiom: axiom.into(),
                objects,
                witness,
            }),
        }
    }

    pub fn pass(&mut self, axiom: &str, objects: Vec<String>) {
        self.record(axiom, objects, None);
    }

    pub fn fail(&mut self, axiom: &str, objects: Vec<String>, witness: Witness) {
        self.record(axiom, objects, Some(witness));
    }

    /// Appends `other`'s entries after this report's.
    pub fn merge(&mut self, other: CheckReport) {
        self.checked.extend(other.checked);
        self.passed += other.passed;
        self.failures.extend(other.failures);
    }

    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn instance_count(&self) -> usize {
        self.checked.len()
    }

    /// Instances of a single axiom label.
    pub fn count_of(&self, axiom: &str) -> usize {
        self.checked.iter().filter(|i| i.axiom == axiom).count()
    }

    pub fn failures_of<'a>(&'a self, axiom: &'a str) -> impl Iterator<Item = &'a Failure> + 'a {
        self.failures.iter().filter(move |f| f.axiom == axiom)
    }

    /// Renames axiom labels, e.g. when a suite is run through a dualizing
    /// wrapper and should be reported under the dual names.
    pub fn relabel(mut self, rename: impl Fn(&str) -> Option<String>) -> Self {
        for i in &mut self.checked {
            if let Some(n) = rename(&i.axiom) {
                i.axiom = n;
            }
        }
        for f in &mut self.failures {
            if let Some(n) = rename(&f.axiom) {
                f.axiom = n;
            }
        }
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.is_pass() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} {}: {}/{} instances",
            self.suite,
            self.passed,
            self.instance_count()
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "  {} at ({}): {}",
                fail.axiom,
                fail.objects.join(", "),
                fail.witness
            )?;
        }
        Ok(())
    }
}

/// Invertibility of one constraint component.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProbeEntry {
    pub constraint: String,
    pub objects: Vec<String>,
    pub invertible: bool,
    pub witness: Option<Witness>,
}

/// Result of an invertibility probe. Non-invertible components are
/// observations, not failures; only a violated implication is a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProbeReport {
    pub entries: Vec<ProbeEntry>,
    pub implications: CheckReport,
}

impl ProbeReport {
    pub fn all_invertible(&self, constraint: &str) -> bool {
        self.entries
            .iter()
            .filter(|e| e.constraint == constraint)
            .all(|e| e.invertible)
    }

    pub fn none_invertible(&self, constraint: &str) -> bool {
        self.entries
            .iter()
            .filter(|e| e.constraint == constraint)
            .all(|e| !e.invertible)
    }

    pub fn first_witness(&self, constraint: &str) -> Option<&Witness> {
        self.entries
            .iter()
            .filter(|e| e.constraint == constraint)
            .find_map(|e| e.witness.as_ref())
    }
}
