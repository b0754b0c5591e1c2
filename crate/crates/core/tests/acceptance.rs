//! Acceptance runner: one PASS/FAIL line per criterion.
//!
//! Criterion 2 is red for `so-grassmann` with `p ≥ 1`, where the printed closed form is
//! not the first eigenvalue. The runner exits non-zero if any other criterion fails or if
//! the set of mismatching rows changes.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use outer_dirac::dirac_solver::{
    closed_form_reference, fiber_lattice, first_eigenvalue, first_eigenvalue_with, minimize_over_fiber, FiberSolver,
};
use outer_dirac::lie_core::{q, Rational, Weight};
use outer_dirac::spin_module::decompose_spin;
use outer_dirac::symmetric_space::{build_space, verify_root_partition, Family, SymmetricSpace, SymmetricSpaceSpec};
use outer_dirac::Caps;

type Outcome = Result<String, String>;

fn build(spec: &SymmetricSpaceSpec) -> SymmetricSpace {
    build_space(spec, &Caps::default()).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

fn grid() -> Vec<SymmetricSpaceSpec> {
    let mut v = Vec::new();
    for m in 2..=6 {
        v.push(SymmetricSpaceSpec::su_so(m).unwrap());
    }
    for m in 2..=6 {
        v.push(SymmetricSpaceSpec::su_sp(m).unwrap());
    }
    for q in 1..=4 {
        for p in 0..=q {
            v.push(SymmetricSpaceSpec::so_grassmann(p, q).unwrap());
        }
    }
    v.push(SymmetricSpaceSpec::e6_f4());
    v.push(SymmetricSpaceSpec::e6_sp4());
    v
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn weight(space: &SymmetricSpace, num: &[i64], den: i64) -> Weight {
    Weight::new(space.g().basis().clone(), num.iter().map(|&x| q(x, den)).collect())
}

fn criterion_1() -> Outcome {
    let mut parts = Vec::new();
    for (spec, want) in [
        (SymmetricSpaceSpec::e6_f4(), q(277, 72)),
        (SymmetricSpaceSpec::e6_sp4(), q(529, 72)),
    ] {
        let got = first_eigenvalue(&build(&spec))
            .map_err(|e| format!("{spec}: {e}"))?
            .lambda_squared;
        ensure(got == want, || format!("{spec}: {got} ≠ {want}"))?;
        parts.push(format!("{spec} = {got}"));
    }
    Ok(parts.join(", "))
}

/// Rows where the printed closed form is known not to be the first eigenvalue.
fn known_closed_form_defect(spec: &SymmetricSpaceSpec) -> bool {
    spec.family() == Family::SoGrassmann && spec.p() >= 1
}

fn criterion_2() -> (Outcome, bool) {
    let specs: Vec<SymmetricSpaceSpec> = grid().into_iter().filter(|s| s.family().is_parametric()).collect();
    let mut mismatches = Vec::new();
    let mut unexpected = Vec::new();
    for spec in &specs {
        let got = match first_eigenvalue(&build(spec)) {
            Ok(r) => r.lambda_squared,
            Err(e) => return (Err(format!("{spec}: {e}")), false),
        };
        let want = closed_form_reference(spec);
        if got != want {
            mismatches.push(format!("{spec}: {got} vs printed {want}"));
        }
        if (got != want) != known_closed_form_defect(spec) {
            unexpected.push(spec.to_string());
        }
    }
    let as_known = unexpected.is_empty();
    if mismatches.is_empty() {
        (Ok(format!("{} spaces", specs.len())), as_known)
    } else {
        let msg = format!(
            "{} of {} spaces differ from the printed closed form: {}{}",
            mismatches.len(),
            specs.len(),
            mismatches.join("; "),
            if as_known {
                String::new()
            } else {
                format!(" (unexpected: {})", unexpected.join(", "))
            }
        );
        (Err(msg), as_known)
    }
}

fn criterion_3() -> Outcome {
    for qq in 1..=4u32 {
        let spec = SymmetricSpaceSpec::so_grassmann(0, qq).unwrap();
        let got = first_eigenvalue(&build(&spec))
            .map_err(|e| e.to_string())?
            .lambda_squared;
        let n = 2 * qq as i64 + 1;
        let want = q(n * n, 16 * qq as i64);
        ensure(got == want, || format!("{spec}: {got} ≠ {want}"))?;
    }
    Ok("(2q+1)²/(16q) for q = 1..4".into())
}

fn criterion_4() -> Outcome {
    for spec in grid() {
        let s = build(&spec);
        let d = decompose_spin(&s).map_err(|e| format!("{spec}: {e}"))?;
        let want = BigInt::from(2u8).pow((s.dims().p / 2) as u32);
        ensure(d.total_dim() == want, || format!("{spec}: {} ≠ {want}", d.total_dim()))?;
    }
    let f4 = decompose_spin(&build(&SymmetricSpaceSpec::e6_f4())).unwrap();
    let f4_parts: Vec<(u128, BigInt)> = f4.entries.iter().map(|e| (e.multiplicity, e.dim.clone())).collect();
    ensure(f4_parts == vec![(2, BigInt::from(4096))], || {
        format!("E6/F4 parts {f4_parts:?}")
    })?;
    let sp4 = decompose_spin(&build(&SymmetricSpaceSpec::e6_sp4())).unwrap();
    let dims: BTreeSet<BigInt> = sp4.entries.iter().map(|e| e.dim.clone()).collect();
    ensure(
        sp4.entries.iter().all(|e| e.multiplicity == 2)
            && dims == [180224, 524288, 344064].into_iter().map(BigInt::from).collect(),
        || format!("E6/Sp4 parts {dims:?}"),
    )?;
    Ok("all grid spaces; 2×4096 = 2¹³, 2×(180224+524288+344064) = 2²¹".into())
}

fn criterion_5() -> Outcome {
    for m in 2..=6u32 {
        let s = build(&SymmetricSpaceSpec::su_so(m).unwrap());
        let d = decompose_spin(&s).unwrap();
        let mut top: Vec<i64> = (2..=m as i64).rev().collect();
        top.push(1);
        let plus = Weight::from_ints(s.k().basis().clone(), &top);
        *top.last_mut().unwrap() = -1;
        let minus = Weight::from_ints(s.k().basis().clone(), &top);
        let got: BTreeSet<(Weight, u128)> = d.entries.iter().map(|e| (e.weight.clone(), e.multiplicity)).collect();
        let mult = 1u128 << ((m - 1) / 2);
        ensure(got == BTreeSet::from([(plus, mult), (minus, mult)]), || {
            format!("su2m-so2m m={m}: {got:?}")
        })?;

        let s = build(&SymmetricSpaceSpec::su_sp(m).unwrap());
        let d = decompose_spin(&s).unwrap();
        let want: Vec<i64> = (0..m as i64).rev().collect();
        let got: Vec<Weight> = d.weights().cloned().collect();
        ensure(got == vec![Weight::from_ints(s.k().basis().clone(), &want)], || {
            format!("su2m-sp-m m={m}: {got:?}")
        })?;
    }
    let labels = |spec: SymmetricSpaceSpec| -> BTreeSet<Vec<i64>> {
        decompose_spin(&build(&spec))
            .unwrap()
            .entries
            .into_iter()
            .map(|e| e.labels)
            .collect()
    };
    let f4 = labels(SymmetricSpaceSpec::e6_f4());
    ensure(f4 == BTreeSet::from([vec![0, 0, 1, 1]]), || format!("e6-f4: {f4:?}"))?;
    let sp4 = labels(SymmetricSpaceSpec::e6_sp4());
    ensure(
        sp4 == BTreeSet::from([vec![5, 1, 1, 0], vec![3, 1, 1, 1], vec![1, 1, 3, 0]]),
        || format!("e6-sp4: {sp4:?}"),
    )?;
    Ok("su2m-so2m, su2m-sp-m (m = 2..6), ω₃+ω₄, {5ω₁+ω₂+ω₃, 3ω₁+ω₂+ω₃+ω₄, ω₁+ω₂+3ω₃}".into())
}

fn criterion_6() -> Outcome {
    let s = build(&SymmetricSpaceSpec::e6_f4());
    let r = first_eigenvalue(&s).map_err(|e| e.to_string())?;
    let pairs: BTreeSet<(Rational, Rational)> = r
        .minimizers
        .iter()
        .map(|c| (c.mu.coords()[0].clone(), c.mu.coords()[2].clone()))
        .collect();
    ensure(
        pairs == BTreeSet::from([(q(7, 3), q(14, 3)), (q(8, 3), q(13, 3))]),
        || format!("E6/F4 minimizer pairs {pairs:?}"),
    )?;
    let s = build(&SymmetricSpaceSpec::e6_sp4());
    let mu1 = weight(&s, &[13, 18, 26, 36, 25, 14], 3);
    let mu1p = weight(&s, &[13, 15, 26, 33, 25, 14], 3);
    let cas = s.g().casimir(&mu1).map_err(|e| e.to_string())?;
    ensure(cas == q(340, 3), || format!("casimir(μ₁) = {cas}"))?;
    let (dom, _) = s.g().dominant_representative(&mu1p).map_err(|e| e.to_string())?;
    ensure(dom == mu1, || format!("dominant(μ₁′) = {dom}"))?;
    Ok("(μ₁,μ₃) ∈ {(7/3,14/3),(8/3,13/3)}, casimir(μ₁) = 340/3, μ₁′ ↦ μ₁".into())
}

fn criterion_7() -> Outcome {
    for spec in grid() {
        let s = build(&spec);
        let rep = verify_root_partition(&s);
        let failed: Vec<String> = rep.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        ensure(failed.is_empty(), || format!("{spec}: {}", failed.join("; ")))?;
        let g = s.g();
        let delta = g.weyl_vector();
        let sigma = s.involution();
        ensure(sigma.apply(&sigma.apply(delta).unwrap()).unwrap() == *delta, || {
            format!("{spec}: σ*²δ ≠ δ")
        })?;
        ensure(sigma.apply(delta).unwrap() == *delta, || format!("{spec}: σ*δ ≠ δ"))?;
        for a in g.simple_roots() {
            for b in g.simple_roots() {
                let lhs = g.inner(&sigma.apply(a).unwrap(), &sigma.apply(b).unwrap()).unwrap();
                ensure(lhs == g.inner(a, b).unwrap(), || {
                    format!("{spec}: σ* is not an isometry")
                })?;
            }
        }
        let s_norm = s.normalization().map_err(|e| e.to_string())? * g.norm2(delta).unwrap();
        let want = Rational::new(BigInt::from(spec.dims().g), BigInt::from(24));
        ensure(s_norm == want, || format!("{spec}: s·‖δ‖² = {s_norm} ≠ {want}"))?;
        let dims = spec.dims();
        let part = s.partition();
        ensure(
            dims.p == dims.t0 + 2 * part.phi2_plus.len() as u64 + 2 * part.phi3_prime_plus.len() as u64,
            || format!("{spec}: dim 𝔭 identity"),
        )?;
        ensure(*s.k_type() == spec.expected_k_type(), || {
            format!("{spec}: K type {}", s.k_type())
        })?;
    }
    Ok(format!("{} spaces", grid().len()))
}

/// Exhaustive scan of the displacement box `[-10, 10]^arity`.
fn box_minimum(space: &SymmetricSpace, lambda: &Weight) -> (Rational, BTreeSet<Weight>) {
    let fl = fiber_lattice(space, lambda).unwrap();
    let n = fl.arity;
    let mut best: Option<Rational> = None;
    let mut set = BTreeSet::new();
    let side = 21usize;
    for idx in 0..side.pow(n as u32) {
        let mut r = idx;
        let x: Vec<i64> = (0..n)
            .map(|_| {
                let t = (r % side) as i64 - 10;
                r /= side;
                t
            })
            .collect();
        let mu = fl.point(space, &x);
        let v = space.g().shifted_norm(&mu).unwrap();
        match &best {
            Some(b) if v > *b => {}
            Some(b) if v == *b => {
                set.insert(mu);
            }
            _ => {
                best = Some(v);
                set = BTreeSet::from([mu]);
            }
        }
    }
    (best.unwrap(), set)
}

fn criterion_8() -> Outcome {
    let mut fibers = 0;
    let mut modules = 0;
    for spec in grid() {
        let s = build(&spec);
        let shw = decompose_spin(&s).map_err(|e| e.to_string())?;
        let solver = FiberSolver::new(&s).map_err(|e| e.to_string())?;
        if solver.arity() <= 3 {
            for e in &shw.entries {
                let fl = fiber_lattice(&s, &e.weight).map_err(|e| e.to_string())?;
                let got = minimize_over_fiber(&s, &fl).map_err(|e| e.to_string())?;
                let (best, set) = box_minimum(&s, &e.weight);
                let got_set: BTreeSet<Weight> = got.iter().map(|c| c.mu.clone()).collect();
                ensure(got.iter().all(|c| c.shifted_norm == best) && got_set == set, || {
                    format!("{spec} fiber over {}: solver and box scan differ", e.weight)
                })?;
                fibers += 1;
            }
        }
        // Freudenthal totals for the isotropy modules in the spin decomposition and the witness
        let k = s.k().label_system();
        for e in &shw.entries {
            let chars = k
                .dominant_multiplicities(&e.labels, usize::MAX)
                .map_err(|x| x.to_string())?;
            ensure(k.total_from_dominant(&chars) == e.dim, || {
                format!("{spec}: K module {} total", e.weight)
            })?;
            ensure(s.k().weyl_dim_labels(&e.labels) == e.dim, || {
                format!("{spec}: K module {} dim", e.weight)
            })?;
            modules += 1;
        }
        let r = first_eigenvalue_with(&s, &shw).map_err(|e| e.to_string())?;
        let g = s.g().label_system();
        let labels = s.g().integral_labels(&r.witness.mu).unwrap().unwrap();
        let chars = g
            .dominant_multiplicities(&labels, usize::MAX)
            .map_err(|x| x.to_string())?;
        ensure(g.total_from_dominant(&chars) == s.g().weyl_dim_labels(&labels), || {
            format!("{spec}: G module {} total", r.witness.mu)
        })?;
        modules += 1;
    }
    Ok(format!(
        "{fibers} fibers of arity ≤ 3 against the box scan, {modules} modules against weyl_dim"
    ))
}

fn run(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into()))
    })
}

type Criterion = (usize, &'static str, fn() -> (Outcome, bool));

fn strict(f: fn() -> Outcome) -> (Outcome, bool) {
    (run(f), false)
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "exact constants", || strict(criterion_1)),
        (2, "parametric oracle", || {
            catch_unwind(criterion_2).unwrap_or_else(|_| (Err("panic".into()), false))
        }),
        (3, "sphere degeneration", || strict(criterion_3)),
        (4, "spin module dimension identities", || strict(criterion_4)),
        (5, "highest weight golden values", || strict(criterion_5)),
        (6, "minimizer golden values", || strict(criterion_6)),
        (7, "structural property suites", || strict(criterion_7)),
        (8, "oracle equivalence at micro scale", || strict(criterion_8)),
    ];
    let mut regressions = 0;
    for (n, title, f) in criteria {
        let t = Instant::now();
        let (outcome, tolerated) = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("PASS {n} {title}: {d} [{secs:.1}s]"),
            Err(d) => {
                println!("FAIL {n} {title}: {d} [{secs:.1}s]");
                if !tolerated {
                    regressions += 1;
                }
            }
        }
    }
    if regressions > 0 {
        std::process::exit(1);
    }
}
