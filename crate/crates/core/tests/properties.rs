use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use noncomm::charpoly::charpoly;
use noncomm::formulas::dihedral::{dihedral_graph, dihedral_spectrum, piecewise_adjacency};
use noncomm::formulas::multipartite::{multipartite_charpoly, multipartite_spectral_radius, radius_residual};
use noncomm::formulas::products::product_scaling_check;
use noncomm::graph::noncommuting_graph;
use noncomm::group::{make_cyclic, make_dihedral};
use noncomm::spectra::{assemble_exact_spectrum, eigenvalues_numeric};
use noncomm::surd::SurdSum;
use noncomm::{Graph, IntPolynomial, DEFAULT_CAP};

fn small_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-9i64..=9, 1..6).prop_map(|c| IntPolynomial::from_i64(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dihedral_axioms_and_edges(n in 3usize..24) {
        let g = make_dihedral(n).unwrap();
        prop_assert!(g.check_axioms(2000, n as u64).is_ok());
        let graph = noncommuting_graph(&g);
        prop_assert_eq!(graph.vertex_count(), g.order() - g.center().len());
        // every non-commuting pair: Σ_x (|G| − |C(x)|) / 2
        let pairs: usize = g.elements().map(|x| g.order() - g.centralizer(x).unwrap().len()).sum::<usize>() / 2;
        prop_assert_eq!(graph.edge_count(), pairs);
        let a = graph.adjacency();
        prop_assert!(a.is_symmetric());
        prop_assert!((0..a.dim()).all(|i| a[(i, i)] == 0));
        prop_assert!(a == piecewise_adjacency(n).unwrap());
    }

    #[test]
    fn dihedral_spectrum_matches(n in 3usize..20) {
        let got = assemble_exact_spectrum(&charpoly(&dihedral_graph(n).unwrap().adjacency()).unwrap()).unwrap();
        prop_assert_eq!(got, dihedral_spectrum(n).unwrap());
    }

    #[test]
    fn multipartite_closed_form(sizes in prop::collection::vec(1usize..6, 1..6)) {
        let a = Graph::complete_multipartite(&sizes).adjacency();
        prop_assert_eq!(charpoly(&a).unwrap(), multipartite_charpoly(&sizes).unwrap());
        let eig = eigenvalues_numeric(&a.to_f64(), 1e-12).unwrap();
        let energy: f64 = eig.iter().map(|v| v.abs()).sum();
        if sizes.len() > 1 {
            let lambda = multipartite_spectral_radius(&sizes).unwrap();
            prop_assert!(radius_residual(&sizes, lambda).abs() < 1e-12);
            prop_assert!((energy - 2.0 * lambda).abs() < 1e-8);
        } else {
            prop_assert!(energy < 1e-12);
        }
    }

    #[test]
    fn division_inverts_multiplication(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero() && !a.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn squarefree_decomposition_reconstructs(roots in prop::collection::vec(-4i64..=4, 1..8)) {
        let p = roots.iter().fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::linear_root(r));
        let back = p.squarefree_decomposition().iter().fold(IntPolynomial::one(), |acc, (f, e)| &acc * &f.pow(*e));
        prop_assert_eq!(back, p);
    }

    #[test]
    fn surd_display_round_trips(r in -50i64..50, c in -20i64..20, d in 2u64..80) {
        let mut s = SurdSum::integer(r);
        s.add_assign(&SurdSum::sqrt_term(BigRational::from_integer(BigInt::from(c)), d));
        let back: SurdSum = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn charpoly_trace_coefficient(n in 3usize..16) {
        let a = dihedral_graph(n).unwrap().laplacian();
        let p = charpoly(&a).unwrap();
        prop_assert_eq!(p.coeff(a.dim() - 1), BigInt::from(-a.trace()));
        prop_assert!(p.is_monic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn abelian_factor_scales(n in 3usize..7, m in 1usize..5) {
        let g = Arc::new(make_dihedral(n).unwrap());
        let h = Arc::new(make_cyclic(m).unwrap());
        let r = product_scaling_check(g, h, DEFAULT_CAP).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }
}
