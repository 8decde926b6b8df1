//! Builds the instances of a plan and runs the requested suites.

use std::fmt::Display;
use std::sync::Arc;

use actegory_core::coherence::{
    check_adjunction_naturality, check_adjunction_triangles, check_closedness, check_lax_monoidal, check_left_braiding,
    check_oplax_monoidal, check_right_braiding, check_skew_monoidal, check_skew_naturality, check_strong_action,
    check_symmetry, check_transpose_round_trip, Adjunction, LeftAction, SkObj, SkewMonoidal,
};
use actegory_core::construction::{
    check_associator_factors, invertibility_probe, ActionSkew, InducedLeftBraiding, InducedRightBraiding, LaxRightAdjoint,
    OplaxLeftAdjoint,
};
use actegory_core::instances::{
    copower_instance, exponential_warping_instance, functor_palette, group_iff_associator_invertible, kan_endo_palette,
    kan_instance, monoid_warping, mset_palette, power_instance, self_action_instance, unit_invertibility, CartesianFinSet,
    LeftMonoidHom, MSetCartesian, MSetSwap, MonoidTable, RightMonoidHom, Swap,
};
use actegory_core::kernel::{Category, FinPresCat, FinSet, Obj, SetFunctor};
use actegory_core::mutation;
use actegory_core::{CheckReport, FinFn, FinSetObj, Label, Witness};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::plan::{CheckPlan, InstanceSpec, KanSpec, MonoidPreset, MonoidSpec, PlannedInstance, Suite};
use crate::report::{InstanceReport, RunReport, SuiteReport, SCHEMA, SCHEMA_VERSION};

type Res<T> = actegory_core::error::Result<T>;

/// Hom-sets larger than this are skipped by the round-trip check.
const ROUND_TRIP_LIMIT: usize = 16;
/// Enumeration cap for closedness hom-sets.
const CLOSED_LIMIT: usize = 1 << 12;
/// Enumeration cap for arrows fed to naturality checks.
const ARROW_LIMIT: usize = 64;
/// Functors enumerated before subsampling a Kan palette.
const FUNCTOR_LIMIT: usize = 4096;

/// Which suites to run: the plan's, or only the probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Check,
    ProbeOnly,
}

struct Ctx<'a> {
    plan: &'a CheckPlan,
    subsampling: Vec<String>,
}

impl Ctx<'_> {
    /// Keeps `items` if within `max_palette`, else a seeded sample in the
    /// original order, recording the reduction.
    fn bounded<T: Clone>(&mut self, what: &str, items: Vec<T>) -> Vec<T> {
        let max = self.plan.bounds.max_palette;
        if items.len() <= max {
            return items;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.plan.seed);
        let mut keep = rand::seq::index::sample(&mut rng, items.len(), max).into_vec();
        keep.sort_unstable();
        self.subsampling
            .push(format!("{what}: {} of {} objects (seed {})", max, items.len(), self.plan.seed));
        keep.into_iter().map(|i| items[i].clone()).collect()
    }

    fn sets(&mut self, what: &str) -> Vec<FinSetObj> {
        let all = (0..=self.plan.bounds.max_size).map(FinSetObj::range).collect();
        self.bounded(what, all)
    }
}

pub fn run_checks(plan: &CheckPlan, mode: Mode) -> RunReport {
    let mut ctx = Ctx { plan, subsampling: Vec::new() };
    let mut instances = Vec::new();
    for inst in &plan.instances {
        let suites: Vec<Suite> = match mode {
            Mode::Check => inst.suites.clone(),
            Mode::ProbeOnly => inst.spec.applicable().iter().copied().filter(|s| *s == Suite::Probes).collect(),
        };
        let mut out = InstanceReport::new(&inst.name, inst.spec.kind());
        if mode == Mode::Check {
            out.skipped = inst.skipped.iter().map(|s| format!("{s}: not defined for kind {}", inst.spec.kind())).collect();
        }
        if let Err(e) = run_instance(&mut ctx, inst, &suites, &mut out) {
            out.error = Some(e.to_string());
        }
        instances.push(out);
    }
    RunReport {
        schema: SCHEMA.into(),
        version: SCHEMA_VERSION,
        plan: plan.name.clone(),
        bounds: plan.bounds,
        defaulted: plan.defaulted.clone(),
        seed: plan.seed,
        subsampling: ctx.subsampling,
        instances,
    }
}

fn push(out: &mut InstanceReport, suite: Suite, checks: Vec<CheckReport>) {
    out.suites.push(SuiteReport { suite: suite.name().into(), checks });
}

fn all_arrows<C: Category>(cat: &C, objs: &[C::Obj]) -> Vec<C::Mor> {
    let mut out = Vec::new();
    for a in objs {
        for b in objs {
            out.extend(cat.hom(a, b, ARROW_LIMIT).unwrap_or_default());
        }
    }
    out
}

type VCat<L> = <<L as LeftAction>::Acting as SkewMonoidal>::Cat;

/// The suites that only need the action, the adjunction and the engine.
fn engine_suites<L, A>(
    s: &ActionSkew<L, A>,
    vs: &[SkObj<L::Acting>],
    objs: &[Obj<L::Carrier>],
    suites: &[Suite],
    pre: &Preflight,
    out: &mut InstanceReport,
) -> Res<()>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    for &suite in suites {
        match suite {
            Suite::Action => push(out, suite, vec![pre.action.clone()]),
            Suite::Adjunction => {
                let adj = s.adjunction();
                let source_arrows = all_arrows(adj.source(), objs);
                let target_arrows = all_arrows(adj.target(), vs);
                push(
                    out,
                    suite,
                    vec![
                        pre.triangles.clone(),
                        check_transpose_round_trip(adj, objs, vs, ROUND_TRIP_LIMIT)?,
                        check_adjunction_naturality(adj, objs, &source_arrows, vs, &target_arrows)?,
                    ],
                )
            }
            Suite::Probes => {
                let p = invertibility_probe(s, objs)?;
                let mut implications = p.implications.clone();
                implications.suite = "invertibility".into();
                push(out, suite, vec![implications]);
                out.probe = Some(p);
            }
            Suite::TheoremChecks => {
                push(out, suite, vec![s.check_fusion(vs, objs)?, check_associator_factors(s, objs)?]);
            }
            _ => {}
        }
    }
    Ok(())
}

/// The strong action axioms and triangle identities, computed once and
/// shared by the preflight entry and the action and adjunction suites.
struct Preflight {
    action: CheckReport,
    triangles: CheckReport,
}

/// Preflight first, as the plan semantics require, then the engine suites.
fn with_preflight<L, A>(
    s: &ActionSkew<L, A>,
    vs: &[SkObj<L::Acting>],
    objs: &[Obj<L::Carrier>],
    suites: &[Suite],
    out: &mut InstanceReport,
) -> Res<()>
where
    L: LeftAction,
    L::Acting: Clone,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    if suites.is_empty() {
        return Ok(());
    }
    let pre = Preflight {
        action: check_strong_action(s.action(), vs, objs)?,
        triangles: check_adjunction_triangles(s.adjunction(), objs, vs)?,
    };
    let mut merged = pre.action.clone();
    merged.merge(pre.triangles.clone());
    merged.suite = "preflight".into();
    out.suites.push(SuiteReport { suite: "preflight".into(), checks: vec![merged] });
    engine_suites(s, vs, objs, suites, &pre, out)
}

fn skew_suite<S: SkewMonoidal>(s: &S, objs: &[SkObj<S>], out: &mut InstanceReport) -> Res<()> {
    let arrows = all_arrows(s.category(), objs);
    push(out, Suite::Skew, vec![check_skew_monoidal(s, objs)?, check_skew_naturality(s, objs, &arrows)?]);
    Ok(())
}

fn has(suites: &[Suite], s: Suite) -> bool {
    suites.contains(&s)
}

fn run_instance(ctx: &mut Ctx<'_>, inst: &PlannedInstance, suites: &[Suite], out: &mut InstanceReport) -> Res<()> {
    let tag = inst.name.as_str();
    match &inst.spec {
        InstanceSpec::Monoid(m) => run_monoid(ctx, tag, m, suites, out),
        InstanceSpec::SelfAction(_) => {
            let objs = ctx.sets(&format!("{tag} carriers"));
            let s = self_action_instance(CartesianFinSet, &objs)?;
            with_preflight(&s, &objs, &objs, suites, out)?;
            if has(suites, Suite::Skew) {
                skew_suite(&s, &objs, out)?;
            }
            lax_oplax(&s, &objs, &objs, suites, out)?;
            if has(suites, Suite::BraidingLeft) || has(suites, Suite::Symmetry) {
                let b = InducedLeftBraiding::new(&s, Swap, &objs)?;
                if has(suites, Suite::BraidingLeft) {
                    push(out, Suite::BraidingLeft, vec![check_left_braiding(&b, &objs)?]);
                }
                if has(suites, Suite::Symmetry) {
                    push(out, Suite::Symmetry, vec![check_symmetry(&b, &objs)?]);
                }
            }
            Ok(())
        }
        InstanceSpec::Copower(p) => {
            let objs = ctx.sets(&format!("{tag} carriers"));
            let s = copower_instance(FinSetObj::range(p.j), &objs)?;
            with_preflight(s.inner(), &objs, &objs, suites, out)?;
            if has(suites, Suite::Skew) {
                skew_suite(&s, &objs, out)?;
            }
            Ok(())
        }
        InstanceSpec::Power(p) => {
            let objs = ctx.sets(&format!("{tag} carriers"));
            let s = power_instance(FinSetObj::range(p.j), &objs)?;
            with_preflight(&s, &objs, &objs, suites, out)?;
            if has(suites, Suite::Skew) {
                skew_suite(&s, &objs, out)?;
            }
            Ok(())
        }
        InstanceSpec::Exponential(p) => {
            let objs = ctx.sets(&format!("{tag} carriers"));
            let s = exponential_warping_instance(FinSetObj::range(p.j), &objs)?;
            with_preflight(s.0.inner(), &objs, &objs, suites, out)?;
            if has(suites, Suite::Skew) {
                skew_suite(&s, &objs, out)?;
            }
            if has(suites, Suite::BraidingRight) || has(suites, Suite::Symmetry) {
                let b = InducedRightBraiding::new(&s, Swap, &objs)?;
                if has(suites, Suite::BraidingRight) {
                    push(out, Suite::BraidingRight, vec![check_right_braiding(&b, &objs)?]);
                }
                if has(suites, Suite::Symmetry) {
                    push(out, Suite::Symmetry, vec![check_symmetry(&b, &objs)?]);
                }
            }
            Ok(())
        }
        InstanceSpec::Kan(k) => run_kan(ctx, tag, k, suites, out),
        InstanceSpec::Mutation(m) => {
            for f in mutation::fixtures() {
                if m.fixtures.is_empty() || m.fixtures.iter().any(|n| n == f.name) {
                    out.suites.push(SuiteReport { suite: format!("mutation {}", f.name), checks: vec![f.run()?] });
                }
            }
            Ok(())
        }
    }
}

fn lax_oplax<L, A>(
    s: &ActionSkew<L, A>,
    vs: &[SkObj<L::Acting>],
    objs: &[Obj<L::Carrier>],
    suites: &[Suite],
    out: &mut InstanceReport,
) -> Res<()>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
    ActionSkew<L, A>: SkewMonoidal<Cat = L::Carrier>,
{
    if has(suites, Suite::Lax) {
        push(out, Suite::Lax, vec![check_lax_monoidal(&LaxRightAdjoint(s), vs)?]);
    }
    if has(suites, Suite::Oplax) {
        push(out, Suite::Oplax, vec![check_oplax_monoidal(&OplaxLeftAdjoint(s), objs)?]);
    }
    Ok(())
}

pub fn build_monoid(m: &MonoidSpec) -> Res<MonoidTable> {
    match (m.preset, &m.table) {
        (Some(MonoidPreset::Trivial), _) => Ok(MonoidTable::trivial()),
        (Some(MonoidPreset::Z2), _) => Ok(MonoidTable::cyclic(2)),
        (Some(MonoidPreset::Z3), _) => Ok(MonoidTable::cyclic(3)),
        (Some(MonoidPreset::Or), _) => Ok(MonoidTable::join()),
        (None, Some(t)) => MonoidTable::new("M", t.clone(), m.identity.unwrap_or(0)),
        (None, None) => Err(actegory_core::Error::Monoid("no table".into())),
    }
}

fn theorem_report<T, E: Display>(axiom: &str, objects: Vec<String>, r: Result<T, E>, ok: impl Fn(&T) -> bool) -> CheckReport {
    let mut c = CheckReport::new("theorem");
    match r {
        Ok(v) if ok(&v) => c.pass(axiom, objects),
        Ok(_) => c.fail(axiom, objects, Witness::Note("prediction and observation disagree".into())),
        Err(e) => c.fail(axiom, objects, Witness::Note(e.to_string())),
    }
    c
}

fn run_monoid(ctx: &mut Ctx<'_>, tag: &str, spec: &MonoidSpec, suites: &[Suite], out: &mut InstanceReport) -> Res<()> {
    let m = build_monoid(spec)?;
    let objs = ctx.sets(&format!("{tag} carriers"));
    let vs = ctx.bounded(&format!("{tag} M-sets"), mset_palette(&m, ctx.plan.bounds.max_size, 1));
    let s = monoid_warping(&m, &vs, &objs)?;
    with_preflight(&s, &vs, &objs, suites, out)?;
    if has(suites, Suite::Skew) {
        skew_suite(&s, &objs, out)?;
    }
    lax_oplax(&s, &vs, &objs, suites, out)?;
    if has(suites, Suite::BraidingLeft) || has(suites, Suite::Symmetry) {
        if m.is_commutative() {
            let b = InducedLeftBraiding::new(&s, MSetSwap(MSetCartesian::new(m.clone())), &vs)?;
            if has(suites, Suite::BraidingLeft) {
                push(out, Suite::BraidingLeft, vec![check_left_braiding(&b, &objs)?]);
            }
            if has(suites, Suite::Symmetry) {
                push(out, Suite::Symmetry, vec![check_symmetry(&b, &objs)?]);
            }
        } else {
            out.skipped.push(String::from("braiding-left, symmetry: the swap is not equivariant for a non-commutative monoid"));
        }
    }
    if has(suites, Suite::Closedness) {
        let arrows = all_arrows(&FinSet, &objs);
        push(
            out,
            Suite::Closedness,
            vec![
                check_closedness(&RightMonoidHom(&s), &objs, &arrows, CLOSED_LIMIT)?,
                check_closedness(&LeftMonoidHom(&s), &objs, &arrows, CLOSED_LIMIT)?,
            ],
        );
    }
    if has(suites, Suite::TheoremChecks) {
        let nonempty: Vec<FinSetObj> = objs.iter().filter(|a| !a.is_empty()).cloned().collect();
        let names: Vec<String> = nonempty.iter().map(|a| a.to_string()).collect();
        let g = theorem_report("group iff γ invertible", names.clone(), group_iff_associator_invertible(&m, &nonempty), |g| {
            g.is_group == g.associator_invertible && g.is_group == g.shear_bijective
        });
        let u = theorem_report("trivial iff λ, ρ invertible", names, unit_invertibility(&m, &nonempty), |u| {
            u.trivial == u.left_invertible && u.trivial == u.right_invertible
        });
        if let Some(last) = out.suites.iter_mut().find(|r| r.suite == Suite::TheoremChecks.name()) {
            last.checks.extend([g, u]);
        } else {
            push(out, Suite::TheoremChecks, vec![g, u]);
        }
    }
    Ok(())
}

pub fn build_kan_shape(k: &KanSpec) -> Res<Arc<FinPresCat>> {
    let objects = k.objects.iter().map(|o| Label::atom(o)).collect();
    let gens = k.arrows.iter().map(|(n, d, c)| (Label::atom(n), *d, *c)).collect();
    Ok(Arc::new(FinPresCat::new(objects, gens, k.composites.clone())?))
}

pub fn build_kan_unit(shape: &Arc<FinPresCat>, k: &KanSpec) -> Res<SetFunctor> {
    let values: Vec<FinSetObj> = k.j.values.iter().map(|&n| FinSetObj::range(n)).collect();
    let base = shape.object_count();
    let mut maps = Vec::new();
    for (i, table) in k.j.maps.iter().enumerate() {
        let a = base + i;
        let (d, c) = (shape.arrow_dom(a), shape.arrow_cod(a));
        maps.push((a, FinFn::from_indices(values[d].clone(), values[c].clone(), table.clone())?));
    }
    SetFunctor::new(shape.clone(), "J", values, maps)
}

const KAN_LAX_ATOMS: usize = 2;

fn run_kan(ctx: &mut Ctx<'_>, tag: &str, k: &KanSpec, suites: &[Suite], out: &mut InstanceReport) -> Res<()> {
    let shape = build_kan_shape(k)?;
    let j = build_kan_unit(&shape, k)?;
    let palette = ctx.bounded(&format!("{tag} functors"), functor_palette(&shape, ctx.plan.bounds.max_size, FUNCTOR_LIMIT));
    let samples: Vec<FinSetObj> = (0..=ctx.plan.bounds.max_size).map(FinSetObj::range).collect();
    let s = kan_instance(j, &palette, samples)?;
    let vs = kan_endo_palette(s.adjunction(), &palette);
    with_preflight(&s, &vs, &palette, suites, out)?;
    if has(suites, Suite::Skew) {
        push(out, Suite::Skew, vec![check_skew_monoidal(&s, &palette)?]);
    }
    if has(suites, Suite::Lax) {
        // Lax associativity nests three Kan extensions of composites, whose
        // carriers grow exponentially; only the smallest atoms are used.
        let mut by_size: Vec<&SetFunctor> = palette.iter().collect();
        by_size.sort_by_key(|f| f.values().iter().map(FinSetObj::len).sum::<usize>());
        let lax_palette: Vec<SetFunctor> = by_size.into_iter().take(KAN_LAX_ATOMS).cloned().collect();
        if lax_palette.len() < palette.len() {
            ctx.subsampling.push(format!("{tag} lax: identity and the {} smallest of {} functors", lax_palette.len(), palette.len()));
        }
        let lax_vs = kan_endo_palette(s.adjunction(), &lax_palette);
        push(out, Suite::Lax, vec![check_lax_monoidal(&LaxRightAdjoint(&s), &lax_vs)?]);
    }
    let rest: Vec<Suite> = suites.iter().copied().filter(|x| *x != Suite::Lax).collect();
    lax_oplax(&s, &vs, &palette, &rest, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plan::parse_spec;

    fn run(doc: &str) -> RunReport {
        run_checks(&parse_spec(doc).unwrap(), Mode::Check)
    }

    #[test]
    fn z2_all_suites_pass() {
        let r = run("version = 1\nsuites = [\"all\"]\n[[instances]]\nkind = \"monoid\"\npreset = \"Z2\"\n");
        assert_eq!(r.exit_code(), 0, "{:?}", r.instances[0].error);
        let inst = &r.instances[0];
        for s in &inst.suites {
            assert!(s.instances() > 0, "{} is empty", s.suite);
        }
        assert!(inst.suites.iter().any(|s| s.suite == "closedness"));
        assert!(inst.suites.iter().any(|s| s.suite == "braiding-left"));
    }

    #[test]
    fn or_monoid_probe_reports_non_invertible_associator() {
        let r = run("version = 1\nsuites = [\"probes\"]\n[[instances]]\nkind = \"monoid\"\npreset = \"or\"\n");
        let p = r.instances[0].probe.as_ref().unwrap();
        assert!(!p.all_invertible("γ"));
        assert!(p.first_witness("γ").is_some());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn mutation_fixture_fails_with_witnesses() {
        let r = run("version = 1\n[[instances]]\nkind = \"mutation\"\nfixtures = [\"shifted-unit\"]\n");
        assert!(r.failures() > 0);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn structure_error_aborts_only_that_instance() {
        let doc = "version = 1\nsuites = [\"skew\"]\n[[instances]]\nkind = \"monoid\"\ntable = [[1, 0], [0, 0]]\n\
                   [[instances]]\nkind = \"power\"\nj = 1\n";
        let r = run(doc);
        assert!(r.instances[0].error.is_some());
        assert!(r.instances[1].error.is_none());
        assert!(r.instances[1].suites.iter().all(|s| s.failures() == 0));
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn oversized_palettes_are_sampled_deterministically() {
        let doc = "version = 1\nseed = 7\nsuites = [\"skew\"]\n[bounds]\nmax_size = 3\nmax_palette = 2\n\
                   [[instances]]\nkind = \"power\"\nj = 1\n";
        let (a, b) = (run(doc), run(doc));
        assert_eq!(a, b);
        assert_eq!(a.subsampling.len(), 1);
        assert_eq!(a.exit_code(), 0);
    }
}
