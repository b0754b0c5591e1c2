use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use outer_dirac::dirac_solver::{
    branching_multiplicity, closed_form_reference, fiber_lattice, first_eigenvalue, first_eigenvalue_with,
    minimize_over_fiber, spin_condition_check, Candidate, FiberSolver,
};
use outer_dirac::lie_core::{q, qi, Rational, Weight};
use outer_dirac::spin_module::decompose_spin;
use outer_dirac::symmetric_space::{build_space, SymmetricSpace, SymmetricSpaceSpec};
use outer_dirac::Caps;
use proptest::prelude::*;

fn build(spec: SymmetricSpaceSpec) -> SymmetricSpace {
    build_space(&spec, &Caps::default()).unwrap()
}

fn gw(space: &SymmetricSpace, c: &[Rational]) -> Weight {
    Weight::new(space.g().basis().clone(), c.to_vec())
}

fn halves(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&x| q(x, 2)).collect()
}

fn thirds(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&x| q(x, 3)).collect()
}

/// Independent oracle: restrict every weight of `V_G(μ)` and peel off `K`-irreducibles
/// from the top.
fn peel_restriction(space: &SymmetricSpace, mu: &Weight) -> BTreeMap<Weight, u128> {
    let k = space.k();
    let mut chi: BTreeMap<Weight, i128> = BTreeMap::new();
    for (w, m) in space.g().freudenthal_multiplicities(mu).unwrap() {
        *chi.entry(space.restrict(&w).unwrap()).or_default() += m as i128;
    }
    let mut out = BTreeMap::new();
    loop {
        chi.retain(|_, m| *m != 0);
        let top = chi
            .keys()
            .filter(|w| k.is_dominant(w).unwrap())
            .max_by(|a, b| {
                k.shifted_norm(a)
                    .unwrap()
                    .cmp(&k.shifted_norm(b).unwrap())
                    .then_with(|| a.cmp(b))
            })
            .cloned();
        let Some(top) = top else { break };
        let n = chi[&top];
        assert!(n > 0, "negative leading multiplicity at {top}");
        for (w, m) in k.freudenthal_multiplicities(&top).unwrap() {
            *chi.entry(w).or_default() -= n * m as i128;
        }
        out.insert(top, n as u128);
    }
    out
}

fn check_branching(space: &SymmetricSpace, mu: &Weight) {
    let expected = peel_restriction(space, mu);
    let k = space.k();
    let total: BigInt = expected
        .iter()
        .map(|(l, n)| k.weyl_dim(l).unwrap() * BigInt::from(*n))
        .sum();
    assert_eq!(total, space.g().weyl_dim(mu).unwrap());
    for (lambda, n) in &expected {
        assert_eq!(
            branching_multiplicity(space, mu, lambda).unwrap(),
            BigInt::from(*n),
            "{} ⊃ {lambda}",
            space.spec()
        );
    }
    // a K-dominant weight one step away from every component is absent unless listed
    for lambda in expected.keys() {
        for a in k.simple_roots() {
            let nu = lambda.try_add(a).unwrap();
            if k.is_dominant(&nu).unwrap() && !expected.contains_key(&nu) {
                assert!(branching_multiplicity(space, mu, &nu).unwrap().is_zero(), "{nu}");
            }
        }
    }
}

#[test]
fn branching_matches_peeling_for_small_modules() {
    let s = build(SymmetricSpaceSpec::su_so(2).unwrap());
    for labels in [[1, 0, 0], [0, 1, 0], [1, 1, 0], [2, 0, 1], [1, 1, 1]] {
        check_branching(&s, &s.g().weight_from_labels(&labels));
    }
    let s = build(SymmetricSpaceSpec::su_sp(3).unwrap());
    for labels in [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [1, 0, 0, 0, 1], [0, 0, 1, 0, 0]] {
        check_branching(&s, &s.g().weight_from_labels(&labels));
    }
    let s = build(SymmetricSpaceSpec::so_grassmann(1, 2).unwrap());
    check_branching(&s, &gw(&s, &halves(&[3, 3, 1, -1])));
    check_branching(&s, &gw(&s, &halves(&[2, 2, 0, 0])));
}

#[test]
fn branching_of_the_minimal_e6_modules() {
    let s = build(SymmetricSpaceSpec::e6_f4());
    let w1 = s.g().fundamental_weights()[0].clone();
    let res = peel_restriction(&s, &w1);
    let dims: BTreeSet<BigInt> = res.keys().map(|l| s.k().weyl_dim(l).unwrap()).collect();
    assert_eq!(dims, BTreeSet::from([BigInt::from(1), BigInt::from(26)]));
    check_branching(&s, &w1);
    let s = build(SymmetricSpaceSpec::e6_sp4());
    let w1 = s.g().fundamental_weights()[0].clone();
    let res = peel_restriction(&s, &w1);
    assert_eq!(res.len(), 1);
    assert_eq!(s.k().weyl_dim(res.keys().next().unwrap()).unwrap(), BigInt::from(27));
    check_branching(&s, &w1);
}

#[test]
fn branching_certifies_the_so_2_3_witness() {
    let s = build(SymmetricSpaceSpec::so_grassmann(2, 3).unwrap());
    let mu = gw(&s, &halves(&[5, 5, 3, 3, 1, -1]));
    let shw = decompose_spin(&s).unwrap();
    assert!(!shw.contains(&s.restrict(&mu).unwrap()));
    let res = peel_restriction(&s, &mu);
    let shared: Vec<&Weight> = res.keys().filter(|l| shw.contains(l)).collect();
    assert!(!shared.is_empty());
    for l in shared {
        assert_eq!(branching_multiplicity(&s, &mu, l).unwrap(), BigInt::from(res[l]));
    }
}

#[test]
fn fiber_arity_is_the_rank_difference() {
    for (spec, arity) in [
        (SymmetricSpaceSpec::su_so(2).unwrap(), 1),
        (SymmetricSpaceSpec::su_so(5).unwrap(), 4),
        (SymmetricSpaceSpec::su_sp(4).unwrap(), 3),
        (SymmetricSpaceSpec::so_grassmann(2, 3).unwrap(), 1),
        (SymmetricSpaceSpec::so_grassmann(0, 2).unwrap(), 1),
        (SymmetricSpaceSpec::e6_f4(), 2),
        (SymmetricSpaceSpec::e6_sp4(), 2),
    ] {
        let s = build(spec);
        assert_eq!(FiberSolver::new(&s).unwrap().arity(), arity, "{}", s.spec());
        assert_eq!(s.dims().t0 as usize, arity);
    }
}

#[test]
fn fiber_points_restrict_to_lambda() {
    let s = build(SymmetricSpaceSpec::e6_sp4());
    for e in &decompose_spin(&s).unwrap().entries {
        let fl = fiber_lattice(&s, &e.weight).unwrap();
        for x in [[0, 0], [1, -2], [-3, 5]] {
            assert_eq!(s.restrict(&fl.point(&s, &x)).unwrap(), e.weight);
        }
    }
}

#[test]
fn non_weights_have_no_fiber() {
    let s = build(SymmetricSpaceSpec::su_so(2).unwrap());
    let bad = Weight::new(s.k().basis().clone(), vec![q(1, 3), qi(0)]);
    assert!(fiber_lattice(&s, &bad).is_err());
}

/// Oracle: exhaustive scan of a box of displacement coordinates.
fn box_minimizers(space: &SymmetricSpace, lambda: &Weight, radius: i64) -> (Rational, BTreeSet<Weight>) {
    let fl = fiber_lattice(space, lambda).unwrap();
    let g = space.g();
    let n = fl.arity;
    let mut best: Option<Rational> = None;
    let mut set = BTreeSet::new();
    let side = (2 * radius + 1) as usize;
    for idx in 0..side.pow(n as u32) {
        let mut r = idx;
        let x: Vec<i64> = (0..n)
            .map(|_| {
                let t = (r % side) as i64 - radius;
                r /= side;
                t
            })
            .collect();
        let mu = fl.point(space, &x);
        let v = g.shifted_norm(&mu).unwrap();
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

#[test]
fn minimizers_agree_with_a_box_scan() {
    let specs = [
        SymmetricSpaceSpec::su_so(2).unwrap(),
        SymmetricSpaceSpec::su_so(3).unwrap(),
        SymmetricSpaceSpec::su_so(4).unwrap(),
        SymmetricSpaceSpec::su_sp(2).unwrap(),
        SymmetricSpaceSpec::su_sp(3).unwrap(),
        SymmetricSpaceSpec::su_sp(4).unwrap(),
        SymmetricSpaceSpec::so_grassmann(1, 2).unwrap(),
        SymmetricSpaceSpec::so_grassmann(2, 2).unwrap(),
        SymmetricSpaceSpec::e6_f4(),
        SymmetricSpaceSpec::e6_sp4(),
    ];
    for spec in specs {
        let s = build(spec);
        let radius = if s.dims().t0 >= 3 { 6 } else { 10 };
        for e in decompose_spin(&s).unwrap().entries.iter().take(6) {
            let fl = fiber_lattice(&s, &e.weight).unwrap();
            let got = minimize_over_fiber(&s, &fl).unwrap();
            let (best, set) = box_minimizers(&s, &e.weight, radius);
            assert!(got.iter().all(|c| c.shifted_norm == best), "{} {}", s.spec(), e.weight);
            let got: BTreeSet<Weight> = got.into_iter().map(|c| c.mu).collect();
            assert_eq!(got, set, "{} {}", s.spec(), e.weight);
        }
    }
}

#[test]
fn minimizers_are_sigma_stable() {
    for spec in [
        SymmetricSpaceSpec::su_so(3).unwrap(),
        SymmetricSpaceSpec::su_sp(3).unwrap(),
        SymmetricSpaceSpec::so_grassmann(1, 3).unwrap(),
        SymmetricSpaceSpec::e6_f4(),
    ] {
        let s = build(spec);
        let r = first_eigenvalue(&s).unwrap();
        let set: BTreeSet<Weight> = r.minimizers.iter().map(|c| c.mu.clone()).collect();
        for c in &r.minimizers {
            assert!(set.contains(&s.involution().apply(&c.mu).unwrap()), "{}", s.spec());
        }
    }
}

#[test]
fn e6_f4_minimizers() {
    let s = build(SymmetricSpaceSpec::e6_f4());
    let r = first_eigenvalue(&s).unwrap();
    let pairs: BTreeSet<(Rational, Rational)> = r
        .minimizers
        .iter()
        .map(|c| (c.mu.coords()[0].clone(), c.mu.coords()[2].clone()))
        .collect();
    assert_eq!(pairs, BTreeSet::from([(q(7, 3), q(14, 3)), (q(8, 3), q(13, 3))]));
    assert!(r.minimizers.iter().all(Candidate::is_dominant));
    let mu1 = gw(&s, &thirds(&[7, 9, 14, 18, 13, 8]));
    assert_eq!(r.witness.mu, mu1);
    assert_eq!(s.g().casimir(&mu1).unwrap() * s.normalization().unwrap(), q(20, 9));
    assert_eq!(r.lambda_squared, q(277, 72));
}

#[test]
fn e6_sp4_minimizers_and_witness() {
    let s = build(SymmetricSpaceSpec::e6_sp4());
    let r = first_eigenvalue(&s).unwrap();
    let mu1 = gw(&s, &thirds(&[13, 18, 26, 36, 25, 14]));
    let mu1p = gw(&s, &thirds(&[13, 15, 26, 33, 25, 14]));
    assert_eq!(s.g().casimir(&mu1).unwrap(), q(340, 3));
    assert_eq!(s.g().dominant_representative(&mu1p).unwrap().0, mu1);
    assert!(r.minimizers.iter().any(|c| c.mu == mu1p));
    assert!(r.minimizers.iter().all(|c| !c.is_dominant()));
    assert_eq!(r.witness.mu, mu1);
    assert!(s.g().shifted_norm(&mu1).unwrap() > r.fiber_minimum);
    let shw = decompose_spin(&s).unwrap();
    let ev = spin_condition_check(&s, &r.witness, &shw, 1).unwrap();
    assert_eq!(ev.certified_level(), 1);
    assert_eq!(r.spin_highest_weight, s.restrict(&mu1).unwrap());
    assert_eq!(r.lambda_squared, q(529, 72));
}

#[test]
fn the_trivial_module_fails_the_spin_condition() {
    let s = build(SymmetricSpaceSpec::su_so(2).unwrap());
    let shw = decompose_spin(&s).unwrap();
    let zero = Candidate::new(&s, &[0, 0, 0]).unwrap();
    let ev = spin_condition_check(&s, &zero, &shw, 2).unwrap();
    assert!(!ev.level1);
    assert_eq!(ev.level2, Some(false));
    assert_eq!(ev.certified_level(), 0);
}

#[test]
fn level_two_is_downgraded_when_capped() {
    let s = build_space(
        &SymmetricSpaceSpec::so_grassmann(2, 3).unwrap(),
        &Caps {
            orbit: 10,
            ..Caps::default()
        },
    )
    .unwrap();
    let shw = decompose_spin(&s).unwrap();
    let labels = s
        .g()
        .integral_labels(&gw(&s, &halves(&[5, 5, 3, 3, 1, -1])))
        .unwrap()
        .unwrap();
    let c = Candidate::new(&s, &labels).unwrap();
    let ev = spin_condition_check(&s, &c, &shw, 2).unwrap();
    assert_eq!(ev.level2, None);
    assert!(ev.notice.unwrap().contains("level 2 skipped"));
}

#[test]
fn su_so_minimizers_for_even_m() {
    for m in [2i64, 4] {
        let s = build(SymmetricSpaceSpec::su_so(m as u32).unwrap());
        let r = first_eigenvalue(&s).unwrap();
        let block = |first: i64, last: i64| {
            let mut c: Vec<Rational> = (0..m)
                .map(|i| if i % 2 == 0 { q(first, 2) } else { q(-first, 2) })
                .collect();
            c.extend((0..m).map(|i| qi(m - i)));
            let end = c.len() - 1;
            c[end] = qi(last);
            gw(&s, &c)
        };
        let got: BTreeSet<Weight> = r.minimizers.iter().map(|c| c.mu.clone()).collect();
        assert_eq!(got, BTreeSet::from([block(1, -1), block(-1, -1)]), "m={m}");
        assert_eq!(s.involution().apply(&block(1, -1)).unwrap(), block(-1, -1));
        let doms: BTreeSet<Weight> = r.minimizers.iter().map(|c| c.mu_dominant.clone()).collect();
        assert_eq!(doms, BTreeSet::from([block(1, 1), block(-1, 1)]));
    }
}

#[test]
fn closed_forms_as_printed() {
    assert_eq!(closed_form_reference(&SymmetricSpaceSpec::su_so(2).unwrap()), q(57, 32));
    assert_eq!(closed_form_reference(&SymmetricSpaceSpec::su_sp(3).unwrap()), q(79, 36));
    assert_eq!(closed_form_reference(&SymmetricSpaceSpec::su_sp(2).unwrap()), q(25, 32));
    assert_eq!(
        closed_form_reference(&SymmetricSpaceSpec::so_grassmann(1, 1).unwrap()),
        q(49, 32)
    );
    assert_eq!(
        closed_form_reference(&SymmetricSpaceSpec::so_grassmann(0, 3).unwrap()),
        q(49, 48)
    );
    assert_eq!(closed_form_reference(&SymmetricSpaceSpec::e6_f4()), q(277, 72));
    assert_eq!(closed_form_reference(&SymmetricSpaceSpec::e6_sp4()), q(529, 72));
}

#[test]
fn pipeline_matches_closed_forms_where_they_hold() {
    let mut specs = vec![];
    for m in 2..=5 {
        specs.push(SymmetricSpaceSpec::su_so(m).unwrap());
        specs.push(SymmetricSpaceSpec::su_sp(m).unwrap());
    }
    for qq in 1..=4 {
        specs.push(SymmetricSpaceSpec::so_grassmann(0, qq).unwrap());
    }
    for spec in specs {
        let s = build(spec);
        assert_eq!(
            first_eigenvalue(&s).unwrap().lambda_squared,
            closed_form_reference(&spec),
            "{spec}"
        );
    }
}

/// `(1/(4(p+q)))·⟨μ₊, μ₊+2δ_G⟩ + (2p+1)(2q+1)/16` for `μ₊ = ((p+½)^q, ½^p, ½)`, evaluated
/// coordinate by coordinate.
fn so_block_value(p: i64, qq: i64) -> Rational {
    let n = p + qq + 1;
    let mut mu: Vec<Rational> = vec![q(2 * p + 1, 2); qq as usize];
    mu.extend(vec![q(1, 2); (p + 1) as usize]);
    let delta: Vec<Rational> = (0..n).map(|i| qi(n - 1 - i)).collect();
    let c: Rational = mu.iter().zip(&delta).map(|(m, d)| m * (m + qi(2) * d)).sum();
    c * q(1, 4 * (p + qq)) + q((2 * p + 1) * (2 * qq + 1), 16)
}

#[test]
fn so_grassmann_values() {
    let frozen = [
        ((1, 1), q(57, 32)),
        ((1, 2), q(43, 16)),
        ((1, 3), q(225, 64)),
        ((1, 4), q(69, 16)),
        ((2, 2), q(289, 64)),
        ((2, 3), q(489, 80)),
        ((2, 4), q(243, 32)),
        ((3, 3), q(275, 32)),
    ];
    for ((p, qq), expected) in frozen {
        let s = build(SymmetricSpaceSpec::so_grassmann(p, qq).unwrap());
        let r = first_eigenvalue(&s).unwrap();
        assert_eq!(r.lambda_squared, expected, "SO({p},{qq})");
        let block = so_block_value(p as i64, qq as i64);
        if p == 1 {
            assert_eq!(r.lambda_squared, block);
        } else {
            assert!(r.lambda_squared < block);
        }
        let printed = closed_form_reference(s.spec());
        assert!(printed < block);
    }
}

#[test]
fn so_2_2_is_certified_by_its_highest_weight() {
    let s = build(SymmetricSpaceSpec::so_grassmann(2, 2).unwrap());
    let shw = decompose_spin(&s).unwrap();
    let r = first_eigenvalue_with(&s, &shw).unwrap();
    let mu = gw(&s, &halves(&[5, 3, 3, 1, -1]));
    assert_eq!(r.witness.mu, mu);
    assert!(s.g().is_dominant(&mu).unwrap());
    assert!(shw.contains(&s.restrict(&mu).unwrap()));
}

#[test]
fn witnesses_are_dominant_and_certified() {
    for spec in [
        SymmetricSpaceSpec::su_so(3).unwrap(),
        SymmetricSpaceSpec::su_sp(4).unwrap(),
        SymmetricSpaceSpec::so_grassmann(2, 3).unwrap(),
        SymmetricSpaceSpec::e6_sp4(),
    ] {
        let s = build(spec);
        let shw = decompose_spin(&s).unwrap();
        let r = first_eigenvalue_with(&s, &shw).unwrap();
        assert!(r.witness.is_dominant());
        assert!(r.witness.shifted_norm >= r.fiber_minimum);
        assert!(spin_condition_check(&s, &r.witness, &shw, 2).unwrap().certified_level() >= 1);
        assert!(shw.contains(&r.spin_highest_weight));
        assert_eq!(r.lambda_squared, &r.casimir_term + &r.scalar_term);
        assert_eq!(r.witness.mu, r.optimal[0].mu);
        assert!(r.optimal.windows(2).all(|w| w[0].mu < w[1].mu));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominant_form_has_the_larger_shifted_norm(labels in proptest::collection::vec(-6i64..7, 6)) {
        let s = build(SymmetricSpaceSpec::e6_f4());
        let c = Candidate::new(&s, &labels).unwrap();
        prop_assert!(c.dominant_shifted_norm >= c.shifted_norm);
        prop_assert_eq!(c.is_dominant(), c.dominant_shifted_norm == c.shifted_norm);
    }

    #[test]
    fn so_orbit_norms(labels in proptest::collection::vec(-5i64..6, 5)) {
        let s = build(SymmetricSpaceSpec::so_grassmann(2, 2).unwrap());
        let c = Candidate::new(&s, &labels).unwrap();
        prop_assert!(c.dominant_shifted_norm >= c.shifted_norm);
        prop_assert_eq!(s.g().casimir(&c.mu_dominant).unwrap(), c.casimir_value.clone());
    }
}
