mod common;

use std::collections::BTreeSet;

use common::{determinant, homogeneous_strategy, linear_images, monomials_up_to, permutation_strategy, rank_mod_p, unimodular_strategy};
use hassett_kit::deform::{
    build_ledger, chart_contributions, chi_tangent_ambient, hypersurface_chi, node_action, node_orbit,
    node_permutation, segre_cubic, segre_nodes, segre_six, singular_audit, DeformError, Provenance,
};
use hassett_kit::groebner::Limits;
use hassett_kit::poly::{parse_poly, Monomial, Polynomial, VariableSet};
use hassett_kit::rational::{int, Rational};
use hassett_kit::symmetry::Permutation;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn forms_of_degree(vars: &VariableSet, d: u32) -> Vec<Polynomial> {
    monomials_up_to(vars.len(), d)
        .into_iter()
        .filter(|e| e.iter().sum::<u32>() == d)
        .map(|e| Polynomial::monomial(vars, Monomial::from_exponents(e), int(1)))
        .collect()
}

/// Hilbert function of `S/(f)` in degree `d` by linear algebra mod p.
fn hilbert_of_hypersurface(f: &Polynomial, k: u32, d: u32) -> i64 {
    let vars = f.vars();
    let top = forms_of_degree(vars, d).len() as i64;
    if d < k {
        return top;
    }
    let multiples: Vec<Polynomial> = forms_of_degree(vars, d - k).iter().map(|m| m * f).collect();
    top - rank_mod_p(&multiples) as i64
}

fn plane_vars() -> VariableSet {
    VariableSet::parse("x,y,z").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]

    #[test]
    fn nodes_are_permuted_by_coordinate_symmetries(images in permutation_strategy(6)) {
        let sigma = Permutation::from_images(images).unwrap();
        let nodes = node_orbit();
        let induced = node_permutation(&nodes, &sigma).unwrap();
        let moved: BTreeSet<_> = nodes.iter().map(|p| p.permuted(&sigma).unwrap()).collect();
        prop_assert_eq!(moved, nodes.iter().cloned().collect::<BTreeSet<_>>());
        prop_assert_eq!(induced.degree(), 10);
        // Both defining equations and the Lagrange condition hold at every image.
        let (cubic, linear) = segre_six();
        for p in &nodes {
            let q = p.permuted(&sigma).unwrap();
            prop_assert!(cubic.evaluate(q.coords()).unwrap().is_zero());
            prop_assert!(linear.evaluate(q.coords()).unwrap().is_zero());
            let squares: BTreeSet<Rational> = q.coords().iter().map(|c| c * c).collect();
            prop_assert_eq!(squares.len(), 1);
        }
    }

    #[test]
    fn plane_cubic_audit_is_coordinate_invariant(a in unimodular_strategy(3), which in 0usize..5) {
        prop_assume!(determinant(&a).abs() == 1);
        let v = plane_vars();
        // Nodal, cuspidal, a conic with a tangent line (A3), a triangle and a smooth cubic.
        let (text, tau) = [
            ("y^2*z - x^3 - x^2*z", 1),
            ("y^2*z - x^3", 2),
            ("(x*z - y^2)*x", 3),
            ("x*y*z", 3),
            ("x^3 + y^3 + z^3", 0),
        ][which];
        let f = parse_poly(text, &v).unwrap();
        let moved = f.compose(&linear_images(&v, &a), &v);
        prop_assert_eq!(singular_audit(&moved).unwrap(), tau);
    }

    #[test]
    fn euler_characteristic_matches_hilbert_function(n in 1u32..=3, k in 1u32..=3, extra in 0u32..=3, seed in homogeneous_strategy(VariableSet::indexed("x", 4), 3, 6)) {
        let vars = VariableSet::indexed("x", n as usize + 1);
        // Restrict to n + 1 variables and degree k, falling back to x0^k.
        let images: Vec<Polynomial> = (0..4).map(|i| if i <= n as usize { Polynomial::var_index(&vars, i) } else { Polynomial::zero(&vars) }).collect();
        let restricted = seed.compose(&images, &vars);
        let f = if restricted.is_homogeneous() && restricted.degree() == hassett_kit::poly::Degree::Finite(k) {
            restricted
        } else {
            Polynomial::var_index(&vars, 0).pow(k)
        };
        let d = k.saturating_sub(n) + extra;
        let chi = hypersurface_chi(n, k, i64::from(d));
        prop_assert_eq!(chi, BigInt::from(hilbert_of_hypersurface(&f, k, d)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 3, rng_seed: RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]

    #[test]
    fn segre_audit_is_coordinate_invariant(a in unimodular_strategy(5)) {
        prop_assume!(determinant(&a).abs() == 1);
        let v = VariableSet::indexed("x", 5);
        let moved = segre_cubic().compose(&linear_images(&v, &a), &v);
        prop_assert_eq!(singular_audit(&moved).unwrap(), 10);
    }
}

#[test]
fn node_certificates_and_chart_partition() {
    let certs = segre_nodes().unwrap();
    assert_eq!(certs.len(), 10);
    let f = segre_cubic();
    let mut per_chart = [0u64; 5];
    for c in &certs {
        assert!(c.is_certified_node());
        assert_eq!((c.hessian_rank, c.tyurina), (4, 1));
        let first = c.point.coords().iter().position(|x| !x.is_zero()).unwrap();
        assert_eq!(c.chart, first);
        assert_eq!(c.point.coords()[first], int(1));
        per_chart[c.chart] += 1;
        assert!(hassett_kit::deform::is_singular_point(&f, &c.point).unwrap());
    }
    let contributions = chart_contributions(&f, &Limits::default()).unwrap();
    assert_eq!(contributions, per_chart);
    let local: u64 = certs.iter().map(|c| c.tyurina).sum();
    assert_eq!(local, singular_audit(&f).unwrap());
    assert_eq!(local, 10);
    let action = node_action().unwrap();
    assert!(action.is_transitive());
    assert_eq!(action.order(), 720);
}

#[test]
fn cayley_cubic_has_four_nodes() {
    let v = VariableSet::parse("a,b,c,d").unwrap();
    let f = parse_poly("b*c*d + a*c*d + a*b*d + a*b*c", &v).unwrap();
    assert_eq!(chart_contributions(&f, &Limits::default()).unwrap(), [1, 1, 1, 1]);
}

#[test]
fn audit_rejections() {
    let v = plane_vars();
    let double_line = parse_poly("x^2*z", &v).unwrap();
    assert!(matches!(singular_audit(&double_line), Err(DeformError::NotIsolatedSingularities(_))));
    let affine = parse_poly("x^2 + y + z^3", &v).unwrap();
    assert!(matches!(singular_audit(&affine), Err(DeformError::NotHomogeneous)));
}

#[test]
fn ambient_tangent_closed_forms() {
    for n in 1..=12u32 {
        let n64 = i64::from(n);
        assert_eq!(chi_tangent_ambient(n, 1), BigInt::from(n64 * n64 + n64 - 1));
    }
    // Segre cubic threefold: O_S(3) and the restricted tangent bundle, checked
    // against the graded pieces of S/(f).
    let f = segre_cubic();
    for d in 0..=4u32 {
        assert_eq!(hypersurface_chi(4, 3, i64::from(d)), BigInt::from(hilbert_of_hypersurface(&f, 3, d)));
    }
    assert_eq!(hypersurface_chi(4, 3, 3), BigInt::from(34));
    assert_eq!(chi_tangent_ambient(4, 3), BigInt::from(24));
}

#[test]
fn ledger_values_and_identities() {
    let l = build_ledger().unwrap();
    assert!(l.identities_hold());
    assert_eq!(l.chi_tangent_ambient_restricted, 24);
    assert_eq!(l.chi_os3, 34);
    assert_eq!(l.tau_total, 10);
    assert_eq!(l.chi_ts, 0);
    assert_eq!(l.chi_ts + l.chi_os3, l.chi_tangent_ambient_restricted + l.tau_total);
    assert_eq!((l.h0_ts, l.h1_ts, l.dim_ext1, l.dim_ext2), (0, 0, 10, 0));
    assert_eq!(l.aut_order, 720);
    assert_eq!(l.provenance.h0_ts, Provenance::PaperInput);
    assert_eq!(l.provenance.tau_total, Provenance::Computed);
    let json = serde_json::to_value(&l).unwrap();
    assert_eq!(json["chi_OS3"], 34);
    assert_eq!(json["provenance"]["h0_TS"], "paper_input");
}
