use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coherence::{Adjunction, LeftAction, SkewMonoidal};
use crate::error::Result;
use crate::finset::Inversion;
use crate::kernel::Category;
use crate::report::{CheckReport, ProbeEntry, ProbeReport, Witness};

use super::engine::{ActionSkew, AObj, VCat};

fn entry<M>(constraint: &str, objects: Vec<String>, inv: Inversion<M>) -> ProbeEntry {
    ProbeEntry {
        constraint: constraint.into(),
        objects,
        invertible: inv.is_iso(),
        witness: inv.witness().cloned(),
    }
}

/// Invertibility of every `γ`, `λ`, `ρ` and `γ̃` component on the palette
/// and of `ε_I ∘ J_!(u_J⁻¹)`, plus the implication "all `γ̃` and the unit
/// map invertible ⇒ all `γ` and `λ` invertible" on the probed data.
pub fn invertibility_probe<L, A>(s: &ActionSkew<L, A>, objs: &[AObj<L>]) -> Result<ProbeReport>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    let cat = s.category();
    let v_cat = s.action().acting().category();
    let mut entries = Vec::new();
    for a in objs {
        for b in objs {
            for c in objs {
                let names = vec![format!("{a}"), format!("{b}"), format!("{c}")];
                entries.push(entry("γ", names, cat.invert(&s.associator(a, b, c)?)?));
            }
        }
    }
    for a in objs {
        entries.push(entry("λ", vec![format!("{a}")], cat.invert(&s.left_unitor(a)?)?));
        entries.push(entry("ρ", vec![format!("{a}")], cat.invert(&s.right_unitor(a)?)?));
    }
    for a in objs {
        for b in objs {
            let names = vec![format!("{a}"), format!("{b}")];
            entries.push(entry("γ̃", names, v_cat.invert(&s.fusion(a, b)?)?));
        }
    }
    entries.push(entry("ε_I", Vec::new(), v_cat.invert(&s.unit_counit()?)?));

    let all = |c: &str| entries.iter().filter(|e| e.constraint == c).all(|e| e.invertible);
    let mut implications = CheckReport::new("invertibility");
    let names: Vec<String> = objs.iter().map(|a| format!("{a}")).collect();
    let premise = all("γ̃") && all("ε_I");
    let outcome = if !premise || (all("γ") && all("λ")) {
        None
    } else {
        Some(Witness::Note("fusion and unit map invertible, but some γ or λ component is not".into()))
    };
    implications.record("fusion invertible implies γ, λ invertible", names, outcome);
    Ok(ProbeReport { entries, implications })
}
