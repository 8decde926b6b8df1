//! The ten acceptance criteria, each printed as one PASS/FAIL line.
//!
//! Runs without the libtest harness so the lines always reach the output;
//! the process exits nonzero when any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use actegory_core::coherence::{
    check_closedness, check_lax_monoidal, check_left_braiding, check_oplax_monoidal, check_right_braiding,
    check_skew_monoidal, check_strong_action, check_symmetry, check_transpose_round_trip, Adjunction, LeftAction,
    Orientation, SkewMonoidal,
};
use actegory_core::construction::{ActionSkew, InducedLeftBraiding, InducedRightBraiding, LaxRightAdjoint, OplaxLeftAdjoint};
use actegory_core::instances::{
    copower_instance, exponential_warping_instance, functor_palette, group_iff_associator_invertible, kan_endo_palette,
    kan_instance, left_kan_extension, monoid_warping, mset_palette, power_instance, self_action_instance, tensor_label,
    unit_invertibility, CartesianFinSet, LeftMonoidHom, MSetCartesian, MSetSwap, MonoidTable, RightMonoidHom, Swap,
};
use actegory_core::kernel::{FinPresCat, Obj, SetFunctor};
use actegory_core::mutation;
use actegory_core::{CheckReport, FinFn, FinSetObj, Label};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn sets(n: usize) -> Vec<FinSetObj> {
    (0..=n).map(FinSetObj::range).collect()
}

fn maps(objs: &[FinSetObj]) -> Vec<FinFn> {
    let mut out = Vec::new();
    for a in objs {
        for b in objs {
            out.extend(FinFn::all(a, b));
        }
    }
    out
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn clean(r: &CheckReport, what: &str) -> Result<usize, String> {
    if r.is_pass() && r.instance_count() > 0 {
        Ok(r.instance_count())
    } else if r.instance_count() == 0 {
        Err(format!("{what}: no instances checked"))
    } else {
        Err(format!("{what}: {}", r.to_string().trim_end()))
    }
}

fn time_limit(start: Instant, limit: Duration, detail: String) -> Outcome {
    let t = start.elapsed();
    if t > limit {
        Err(format!("{detail}; took {:.1}s, over the {}s limit", t.as_secs_f64(), limit.as_secs()))
    } else {
        Ok(format!("{detail}; {:.2}s", t.as_secs_f64()))
    }
}

/// Every monoid of order ≤ 3 up to isomorphism passes LSkM1–5 at carriers
/// ≤ 2 within a minute.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let p = sets(2);
    let monoids = MonoidTable::curated(3);
    let mut total = 0;
    for m in &monoids {
        let s = monoid_warping(m, &mset_palette(m, 1, 1), &p).map_err(err)?;
        let r = check_skew_monoidal(&s, &p).map_err(err)?;
        if r.count_of("LSkM1") != p.len().pow(4) {
            return Err(format!("{}: LSkM1 covered {} quadruples", m.name(), r.count_of("LSkM1")));
        }
        total += clean(&r, m.name())?;
    }
    time_limit(start, Duration::from_secs(60), format!("{} monoids, {total} instances", monoids.len()))
}

/// γ, λ, ρ against "(m+n, a, (n, b, c))", "(m, *, b) ↦ b", "a ↦ (0, a, *)".
fn criterion_2() -> Outcome {
    let p = sets(2);
    let mut compared = 0;
    let commutative: Vec<MonoidTable> = MonoidTable::curated(3).into_iter().filter(|m| m.is_commutative()).collect();
    for m in &commutative {
        let s = monoid_warping(m, &mset_palette(m, 1, 1), &p).map_err(err)?;
        let e = m.element(m.identity()).clone();
        for a in &p {
            let rho = s.right_unitor(a).map_err(err)?;
            let lam = s.left_unitor(a).map_err(err)?;
            for x in a.iter() {
                let want = tensor_label(e.clone(), x.clone(), Label::Point);
                if rho.eval(x).map_err(err)? != &want {
                    return Err(format!("{}: ρ({x})", m.name()));
                }
                for k in 0..m.order() {
                    let l = tensor_label(m.element(k).clone(), Label::Point, x.clone());
                    if lam.eval(&l).map_err(err)? != x {
                        return Err(format!("{}: λ({l})", m.name()));
                    }
                }
                compared += 1 + m.order();
            }
            for b in &p {
                for c in &p {
                    let g = s.associator(a, b, c).map_err(err)?;
                    for mi in 0..m.order() {
                        for ni in 0..m.order() {
                            for x in a.iter() {
                                for y in b.iter() {
                                    for z in c.iter() {
                                        let (mm, nn) = (m.element(mi).clone(), m.element(ni).clone());
                                        let from = Label::pair(Label::pair(nn.clone(), tensor_label(mm, x.clone(), y.clone())), z.clone());
                                        let sum = m.element(m.op(mi, ni)).clone();
                                        let want = tensor_label(sum, x.clone(), tensor_label(nn, y.clone(), z.clone()));
                                        if g.eval(&from).map_err(err)? != &want {
                                            return Err(format!("{}: γ({from})", m.name()));
                                        }
                                        compared += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{} commutative monoids, {compared} elements compared", commutative.len()))
}

/// `(m, n) ↦ (m + n, m)` is a bijection of `M × M`.
fn shear_oracle(m: &MonoidTable) -> bool {
    let n = m.order();
    let mut seen = std::collections::BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            seen.insert((m.op(a, b), a));
        }
    }
    seen.len() == n * n
}

fn criterion_3() -> Outcome {
    let p = [FinSetObj::range(1), FinSetObj::range(2)];
    let mut mismatches = Vec::new();
    let monoids = MonoidTable::curated(3);
    for m in &monoids {
        let oracle = shear_oracle(m);
        match group_iff_associator_invertible(m, &p) {
            Ok(g) if g.is_group == oracle && g.associator_invertible == oracle => {}
            Ok(g) => mismatches.push(format!("{}: group {} γ {} oracle {oracle}", m.name(), g.is_group, g.associator_invertible)),
            Err(e) => mismatches.push(format!("{}: {e}", m.name())),
        }
        match unit_invertibility(m, &p) {
            Ok(u) if u.left_invertible == (m.order() == 1) && u.right_invertible == (m.order() == 1) => {}
            Ok(u) => mismatches.push(format!("{}: λ {} ρ {}", m.name(), u.left_invertible, u.right_invertible)),
            Err(e) => mismatches.push(format!("{}: {e}", m.name())),
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{} monoids, zero mismatches", monoids.len()))
    } else {
        Err(mismatches.join("; "))
    }
}

fn criterion_4() -> Outcome {
    let m = MonoidTable::cyclic(2);
    let p = sets(2);
    let vs = mset_palette(&m, 2, 1);
    let s = monoid_warping(&m, &vs, &p).map_err(err)?;
    let lax = clean(&check_lax_monoidal(&LaxRightAdjoint(&s), &vs).map_err(err)?, "lax")?;
    let oplax = clean(&check_oplax_monoidal(&OplaxLeftAdjoint(&s), &p).map_err(err)?, "oplax")?;
    Ok(format!("lax {lax} instances, oplax {oplax} instances"))
}

type VCat<L> = <<L as LeftAction>::Acting as SkewMonoidal>::Cat;

/// AT, AT* and the round trip on every hom-set of size ≤ 16.
fn transpose_calculus<L, A>(
    name: &str,
    s: &ActionSkew<L, A>,
    vs: &[Obj<VCat<L>>],
    objs: &[Obj<L::Carrier>],
) -> Result<(usize, usize), String>
where
    L: LeftAction,
    A: Adjunction<Source = L::Carrier, Target = VCat<L>>,
{
    let f = s.check_fusion(vs, objs).map_err(err)?;
    if f.count_of("AT") == 0 || f.count_of("AT*") == 0 {
        return Err(format!("{name}: no AT instances"));
    }
    let fusion = clean(&f, name)?;
    let trips = clean(&check_transpose_round_trip(s.adjunction(), objs, vs, 16).map_err(err)?, name)?;
    Ok((fusion, trips))
}

fn criterion_5() -> Outcome {
    let p = sets(2);
    let mut fusion = 0;
    let mut trips = 0;
    let mut add = |r: Result<(usize, usize), String>| -> Result<(), String> {
        let (a, b) = r?;
        fusion += a;
        trips += b;
        Ok(())
    };
    for m in MonoidTable::curated(3) {
        let vs = mset_palette(&m, 1, 1);
        let s = monoid_warping(&m, &vs, &p).map_err(err)?;
        add(transpose_calculus(m.name(), &s, &vs, &p))?;
    }
    let s = self_action_instance(CartesianFinSet, &p).map_err(err)?;
    add(transpose_calculus("self-action", &s, &p, &p))?;
    for j in sets(2) {
        let c = copower_instance(j.clone(), &p).map_err(err)?;
        add(transpose_calculus("copower", c.inner(), &p, &p))?;
        let w = power_instance(j.clone(), &p).map_err(err)?;
        // J^(B^(J^A)) has 2^16 elements at |J| = |A| = |B| = 2, too many to
        // enumerate the split strength over; |J| = 2 stops at carriers ≤ 1
        let q = if j.len() < 2 { sets(2) } else { sets(1) };
        add(transpose_calculus("power", &w, &q, &q))?;
        let e = exponential_warping_instance(j, &p).map_err(err)?;
        add(transpose_calculus("exponential", e.0.inner(), &p, &p))?;
    }
    let (j, palette) = arrow_kan();
    let k = kan_instance(j, &palette, sets(2)).map_err(err)?;
    let vs = kan_endo_palette(k.adjunction(), &palette);
    add(transpose_calculus("kan", &k, &vs, &palette))?;
    Ok(format!("{fusion} fusion instances, {trips} round trips"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let p = sets(2);
    let mut n = 0;
    for j in sets(2) {
        let s = exponential_warping_instance(j.clone(), &p).map_err(err)?;
        let b = InducedRightBraiding::new(&s, Swap, &p).map_err(err)?;
        n += clean(&check_right_braiding(&b, &p).map_err(err)?, &format!("RSkBr J={j}"))?;
        n += clean(&check_symmetry(&b, &p).map_err(err)?, &format!("symmetry J={j}"))?;
    }
    let commutative: Vec<MonoidTable> = MonoidTable::curated(3).into_iter().filter(|m| m.is_commutative()).collect();
    for m in &commutative {
        let vs = mset_palette(m, 2, 1);
        let s = monoid_warping(m, &vs, &p).map_err(err)?;
        let b = InducedLeftBraiding::new(&s, MSetSwap(MSetCartesian::new(m.clone())), &vs).map_err(err)?;
        n += clean(&check_left_braiding(&b, &p).map_err(err)?, &format!("LSkBr {}", m.name()))?;
        n += clean(&check_symmetry(&b, &p).map_err(err)?, &format!("symmetry {}", m.name()))?;
    }
    time_limit(start, Duration::from_secs(120), format!("{n} instances over 3 exponential and {} monoid instances", commutative.len()))
}

/// `J` constant at a point on `0 → 1`, with three functors of sizes
/// (0,1), (1,1), (1,2).
fn arrow_kan() -> (SetFunctor, Vec<SetFunctor>) {
    let arrow = Arc::new(FinPresCat::arrow());
    let j = functor_palette(&arrow, 1, 64).into_iter().find(|f| f.at(0).len() == 1 && f.at(1).len() == 1).unwrap();
    let palette = functor_palette(&arrow, 2, 64)
        .into_iter()
        .filter(|f| [(0, 1), (1, 1), (1, 2)].contains(&(f.at(0).len(), f.at(1).len())))
        .take(3)
        .collect();
    (j, palette)
}

fn criterion_7() -> Outcome {
    let mut n = 0;
    // terminal C, J* = {0}, and the walking arrow
    let one = Arc::new(FinPresCat::terminal());
    let p1 = functor_palette(&one, 2, 8);
    let j1 = p1.iter().find(|f| f.at(0).len() == 1).unwrap().clone();
    let s = kan_instance(j1.clone(), &p1, sets(2)).map_err(err)?;
    if s.unit() != j1 || p1.len() < 3 {
        return Err("terminal shape: unit is not J or palette too small".into());
    }
    n += clean(&check_skew_monoidal(&s, &p1).map_err(err)?, "terminal shape")?;
    let (j, palette) = arrow_kan();
    let s = kan_instance(j.clone(), &palette, sets(2)).map_err(err)?;
    if s.unit() != j || palette.len() < 3 {
        return Err("arrow shape: unit is not J or palette too small".into());
    }
    n += clean(&check_skew_monoidal(&s, &palette).map_err(err)?, "arrow shape")?;
    // pointwise formula on C = 1
    let mut evaluated = 0;
    for jf in &p1 {
        for g in &p1 {
            for d in sets(2) {
                let e = left_kan_extension(jf, g, &d).map_err(err)?;
                let homs: Vec<FinFn> = FinFn::all(jf.at(0), &d).collect();
                let expected = homs.len() * g.at(0).len();
                if e.carrier().len() != expected {
                    return Err(format!("|Lan({g})({d})| = {} over J = {jf}, expected {expected}", e.carrier().len()));
                }
                // the cocone is a coproduct: distinct pairs land in distinct classes
                let mut classes = std::collections::BTreeSet::new();
                for f in &homs {
                    for x in g.at(0).iter() {
                        classes.insert(e.class_of(0, f, x).map_err(err)?);
                    }
                }
                if classes.len() != expected {
                    return Err(format!("cocone of Lan({g})({d}) is not jointly bijective"));
                }
                evaluated += 1;
            }
        }
    }
    Ok(format!("{n} LSkM instances, {evaluated} pointwise evaluations"))
}

fn criterion_8() -> Outcome {
    let p = sets(2);
    let mut n = 0;
    for j in sets(2) {
        let c = copower_instance(j.clone(), &p).map_err(err)?;
        if c.orientation() != Orientation::Right {
            return Err("copower is not right skew".into());
        }
        n += clean(&check_skew_monoidal(&c, &p).map_err(err)?, &format!("copower J={j}"))?;
        n += clean(&check_strong_action(c.inner().action(), &p, &p).map_err(err)?, "copower action")?;
        // a triple tensor over |J| = 2 at carriers of size 2 has 2^(2^16)
        // elements; that case is checked at carriers ≤ 1
        let q = if j.len() < 2 { sets(2) } else { sets(1) };
        let w = power_instance(j.clone(), &q).map_err(err)?;
        if w.orientation() != Orientation::Left {
            return Err("power is not left skew".into());
        }
        n += clean(&check_skew_monoidal(&w, &q).map_err(err)?, &format!("power J={j}"))?;
        for a in &p {
            for b in &p {
                let (cn, dn, jn) = (a.len() as u32, b.len(), j.len() as u32);
                let got = c.tensor(a, b).map_err(err)?.len();
                if got != dn * a.len().pow(jn) {
                    return Err(format!("|{a} ⊛ {b}| = {got} for the copower over {j}"));
                }
                let got = w.tensor(a, b).map_err(err)?.len();
                if got != dn.pow(jn.pow(cn)) {
                    return Err(format!("|{a} ⊛ {b}| = {got} for the power over {j}"));
                }
            }
        }
    }
    Ok(format!("{n} instances, cardinalities match"))
}

fn criterion_9() -> Outcome {
    let p = sets(2);
    let fs = maps(&p);
    let mut n = 0;
    for m in [MonoidTable::trivial(), MonoidTable::cyclic(2)] {
        let s = monoid_warping(&m, &mset_palette(&m, 1, 1), &p).map_err(err)?;
        n += clean(&check_closedness(&RightMonoidHom(&s), &p, &fs, 1 << 12).map_err(err)?, &format!("right {}", m.name()))?;
        n += clean(&check_closedness(&LeftMonoidHom(&s), &p, &fs, 1 << 12).map_err(err)?, &format!("left {}", m.name()))?;
    }
    Ok(format!("{n} instances"))
}

fn criterion_10() -> Outcome {
    let outcomes = mutation::run_all().map_err(err)?;
    let mut suites = std::collections::BTreeSet::new();
    for o in &outcomes {
        if !o.caught() {
            return Err(format!("{} passed {}", o.mutation.name, o.mutation.suite));
        }
        suites.insert(o.mutation.suite);
    }
    Ok(format!("{} mutations caught across {} suites", outcomes.len(), suites.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 monoid family passes LSkM1-5", criterion_1),
        ("2 elementwise formulas", criterion_2),
        ("3 group iff invertible associator", criterion_3),
        ("4 lax and oplax on Z2", criterion_4),
        ("5 transpose calculus", criterion_5),
        ("6 braidings and symmetry", criterion_6),
        ("7 Kan extension instance", criterion_7),
        ("8 copower and power", criterion_8),
        ("9 closedness", criterion_9),
        ("10 checker soundness", criterion_10),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
