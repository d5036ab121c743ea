use chromatic_reciprocity::chromatic::chromatic_polynomial;
use chromatic_reciprocity::family::{small_family, DEFAULT_SEED};
use chromatic_reciprocity::orientations::acyclic_count_table;
use chromatic_reciprocity::symfunc::{
    csf_from_colorings, csf_powersum, csf_powersum_by_blocks, expand_finite, omega, orientation_tally,
    specialize_p_to_q, PPoly,
};
use chromatic_reciprocity::{Graph, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

#[test]
fn power_sum_expansion_matches_coloring_oracle() {
    for g in small_family(DEFAULT_SEED) {
        let x = csf_powersum(&g).unwrap();
        assert_eq!(x, csf_powersum_by_blocks(&g).unwrap(), "{g:?}");
        for variables in 1..=3 {
            assert_eq!(
                expand_finite(&x, variables).unwrap(),
                csf_from_colorings(&g, variables).unwrap(),
                "{g:?} in {variables} variables"
            );
        }
    }
}

#[test]
fn omega_is_an_involution_with_nonnegative_image() {
    for g in small_family(DEFAULT_SEED) {
        let x = csf_powersum(&g).unwrap();
        let dual = omega(&x);
        assert_eq!(omega(&dual), x);
        assert!(dual.terms().values().all(|c| !c.is_negative()), "{g:?}: {dual}");
        assert_eq!(dual, orientation_tally(&g).unwrap());
        let total: BigRational = dual.terms().values().cloned().sum();
        let a = acyclic_count_table(&g).unwrap();
        assert_eq!(total, BigRational::from_integer(a.get(g.vertices()).into()));
    }
}

#[test]
fn specialization_gives_the_chromatic_polynomial() {
    for g in small_family(DEFAULT_SEED) {
        let x = csf_powersum(&g).unwrap();
        assert_eq!(specialize_p_to_q(&x).unwrap(), chromatic_polynomial(&g).unwrap());
    }
}

#[test]
fn dual_at_all_ones_is_the_reciprocal_count() {
    for g in small_family(DEFAULT_SEED) {
        let n = g.vertex_count();
        let dual = omega(&csf_powersum(&g).unwrap());
        let chi = chromatic_polynomial(&g).unwrap();
        let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        for j in 1..=4 {
            let expanded = expand_finite(&dual, j).unwrap();
            assert_eq!(expanded.sum_of_coefficients(), &sign * chi.evaluate(&BigInt::from(-(j as i64))));
        }
    }
}

#[test]
fn specialization_rejects_fractional_coefficients() {
    let half = BigRational::new(1.into(), 2.into());
    let x = PPoly::power_sum(Partition::new(vec![1])).scale(&half);
    assert!(specialize_p_to_q(&x).is_err());
}

#[test]
fn empty_graph_is_p1_to_the_n() {
    let g = Graph::empty(4).unwrap();
    let x = csf_powersum(&g).unwrap();
    assert_eq!(x, PPoly::power_sum(Partition::new(vec![1, 1, 1, 1])));
    assert!(!x.is_zero());
    assert!(!x.coeff(&Partition::new(vec![1, 1, 1, 1])).is_zero());
}

fn arb_ppoly() -> impl Strategy<Value = PPoly> {
    let partitions = Partition::all(5);
    proptest::collection::vec(-5i64..=5, partitions.len()).prop_map(move |coeffs| {
        let terms = partitions
            .iter()
            .cloned()
            .zip(coeffs)
            .map(|(p, c)| (p, BigRational::from_integer(c.into())));
        PPoly::from_terms(5, terms).unwrap()
    })
}

proptest! {
    #[test]
    fn omega_squared_is_identity(x in arb_ppoly()) {
        prop_assert_eq!(omega(&omega(&x)), x);
    }

    #[test]
    fn omega_is_linear(x in arb_ppoly(), y in arb_ppoly()) {
        prop_assert_eq!(omega(&x.add(&y).unwrap()), omega(&x).add(&omega(&y)).unwrap());
    }
}

#[test]
fn identities_in_enough_variables_for_small_graphs() {
    use chromatic_reciprocity::symfunc::{verify_combined, verify_superfication, verify_thm53};
    for g in small_family(DEFAULT_SEED).into_iter().filter(|g| g.vertex_count() <= 3) {
        let n = g.vertex_count();
        for report in [
            verify_thm53(&g, n, n).unwrap(),
            verify_superfication(&g, n, n).unwrap(),
            verify_combined(&g, n, n, n).unwrap(),
        ] {
            assert!(report.passed(), "{g:?}: {report}");
            assert!(report.truncation.as_deref().unwrap_or("").contains("determines"), "{report}");
        }
    }
}

#[test]
fn multicoloring_identity() {
    use chromatic_reciprocity::symfunc::verify_multicolor;
    use chromatic_reciprocity::ExponentVector;
    let g = Graph::path(3).unwrap();
    for m in [vec![1, 1, 1], vec![2, 1, 0], vec![1, 2, 1], vec![2, 0, 2]] {
        let report = verify_multicolor(&g, &ExponentVector::new(m), 2).unwrap();
        assert!(report.passed(), "{report}");
    }
}
