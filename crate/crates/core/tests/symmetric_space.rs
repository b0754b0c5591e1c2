use outer_dirac::lie_core::{q, qi, CartanType, Rational, Weight};
use outer_dirac::symmetric_space::{
    build_space, k_cartan_matrix, verify_root_partition, Family, SymmetricSpace, SymmetricSpaceSpec,
};
use outer_dirac::Caps;

fn build(spec: SymmetricSpaceSpec) -> SymmetricSpace {
    build_space(&spec, &Caps::default()).unwrap()
}

fn grid() -> Vec<SymmetricSpaceSpec> {
    let mut v = vec![SymmetricSpaceSpec::e6_f4(), SymmetricSpaceSpec::e6_sp4()];
    for m in 2..=6 {
        v.push(SymmetricSpaceSpec::su_so(m).unwrap());
        v.push(SymmetricSpaceSpec::su_sp(m).unwrap());
    }
    for q in 1..=4 {
        for p in 0..=q {
            v.push(SymmetricSpaceSpec::so_grassmann(p, q).unwrap());
        }
    }
    v
}

fn in_g(space: &SymmetricSpace, c: &[Rational]) -> Weight {
    Weight::new(space.g().basis().clone(), c.to_vec())
}

#[test]
fn e6_form_and_root_count() {
    let s = build(SymmetricSpaceSpec::e6_f4());
    let t1 = in_g(&s, &[qi(1), qi(0), qi(0), qi(0), qi(0), qi(0)]);
    assert_eq!(s.g().norm2(&t1).unwrap(), qi(2));
    assert_eq!(s.g().positive_roots().len(), 36);
    assert_eq!(s.g().norm2(s.g().weyl_vector()).unwrap(), qi(78));
}

#[test]
fn partition_sizes() {
    let f4 = build(SymmetricSpaceSpec::e6_f4());
    let p = f4.partition();
    assert_eq!(
        (p.phi1_plus.len(), p.phi2_plus.len(), p.phi3_prime_plus.len()),
        (12, 0, 12)
    );
    let sp4 = build(SymmetricSpaceSpec::e6_sp4());
    let p = sp4.partition();
    assert_eq!(
        (p.phi1_plus.len(), p.phi2_plus.len(), p.phi3_prime_plus.len()),
        (4, 8, 12)
    );
    for (pp, qq) in [(0u32, 1u32), (1, 2), (2, 3), (3, 3)] {
        let s = build(SymmetricSpaceSpec::so_grassmann(pp, qq).unwrap());
        let part = s.partition();
        assert_eq!(part.phi2_plus.len() as u32, 2 * pp * qq);
        assert_eq!(part.phi3_prime_plus.len() as u32, pp + qq);
    }
    for m in 2..=5u32 {
        let s = build(SymmetricSpaceSpec::su_so(m).unwrap());
        assert_eq!(s.partition().phi2_plus.len() as u32, m);
        assert_eq!(s.partition().phi3_prime_plus.len() as u32, m * (m - 1));
        let s = build(SymmetricSpaceSpec::su_sp(m).unwrap());
        assert_eq!(s.partition().phi1_plus.len() as u32, m);
        assert!(s.partition().phi2_plus.is_empty());
    }
}

#[test]
fn verification_passes_on_the_whole_grid() {
    for spec in grid() {
        let s = build(spec);
        let rep = verify_root_partition(&s);
        let bad: Vec<_> = rep.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        assert!(bad.is_empty(), "{spec}: {bad:?}");
        assert!(rep.checks.len() >= 15);
    }
}

#[test]
fn isotropy_types() {
    for spec in grid() {
        let s = build(spec);
        assert!(
            s.k_type().is_isomorphic(&spec.expected_k_type()),
            "{spec}: {}",
            s.k_type()
        );
    }
    let s = build(SymmetricSpaceSpec::so_grassmann(2, 3).unwrap());
    assert_eq!(s.k_type(), &"B2×B3".parse::<CartanType>().unwrap());
    let s = build(SymmetricSpaceSpec::su_so(2).unwrap());
    assert_eq!(s.k_type(), &"A1×A1".parse::<CartanType>().unwrap());
    let s = build(SymmetricSpaceSpec::su_so(3).unwrap());
    assert_eq!(s.k_type(), &"A3".parse::<CartanType>().unwrap());
}

#[test]
fn exceptional_isotropy_cartan_matrices() {
    let f4 = build(SymmetricSpaceSpec::e6_f4());
    let (a, t) = k_cartan_matrix(f4.k()).unwrap();
    // the transpose of the displayed matrix, which uses the opposite index convention
    let shown = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]];
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(a[i][j], shown[j][i]);
        }
    }
    assert_eq!(t.to_string(), "F4");
    let sp4 = build(SymmetricSpaceSpec::e6_sp4());
    let (a, t) = k_cartan_matrix(sp4.k()).unwrap();
    assert_eq!(
        a,
        vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -2, 2]
        ]
    );
    assert_eq!(t.to_string(), "C4");
    let ones: Vec<_> = sp4.k().simple_roots()[..3]
        .iter()
        .map(|r| sp4.k().norm2(r).unwrap())
        .collect();
    assert_eq!(ones, vec![qi(1), qi(1), qi(1)]);
}

#[test]
fn e6_restriction_example() {
    let s = build(SymmetricSpaceSpec::e6_sp4());
    let mu = in_g(&s, &[qi(4), qi(6), qi(8), qi(12), qi(9), qi(5)]);
    let r = s.restrict(&mu).unwrap();
    assert_eq!(r.coords(), &[qi(9), qi(6), qi(17), qi(12)]);
    // σ*-invariance
    let smu = s.involution().apply(&mu).unwrap();
    assert_eq!(s.restrict(&smu).unwrap(), r);
}

#[test]
fn e6_casimir_of_a_minimizer() {
    let s = build(SymmetricSpaceSpec::e6_f4());
    let mu = in_g(&s, &[q(7, 3), qi(3), q(14, 3), qi(6), q(13, 3), q(8, 3)]);
    let c = s.g().casimir(&mu).unwrap();
    assert_eq!(c, q(160, 3));
    assert_eq!(s.normalization().unwrap() * c, q(20, 9));
}

#[test]
fn su_so_weights_and_dominance() {
    let s = build(SymmetricSpaceSpec::su_so(3).unwrap());
    // odd block first, then even block
    let delta = s.g().weyl_vector();
    assert_eq!(&delta.coords()[3..], &[qi(5), qi(3), qi(1)]);
    let plus = in_g(&s, &[qi(0), qi(0), qi(0), qi(3), qi(2), qi(1)]);
    let minus = in_g(&s, &[qi(0), qi(0), qi(0), qi(3), qi(2), qi(-1)]);
    assert!(s.g().is_dominant(&plus).unwrap());
    assert!(!s.g().is_dominant(&minus).unwrap());
    let (dom, _) = s.g().dominant_representative(&minus).unwrap();
    assert!(s.g().is_dominant(&dom).unwrap());
    assert_eq!(s.g().norm2(&dom).unwrap(), s.g().norm2(&minus).unwrap());
}

#[test]
fn normalization_constants() {
    for spec in grid() {
        let s = build(spec);
        assert_eq!(s.normalization().unwrap(), spec.stated_normalization(), "{spec}");
    }
    assert_eq!(SymmetricSpaceSpec::su_sp(3).unwrap().stated_normalization(), q(1, 12));
}

#[test]
fn family_names_parse() {
    for f in Family::ALL {
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }
    assert!("so-grasmann".parse::<Family>().is_err());
}
