//! Property tests for the homomorphism catalogue and its exact sequences.

use proptest::prelude::*;
use sympow::homs::{self, exact_at, Hom};
use sympow::presentation::Presentation;
use sympow::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

fn catalogue(field: Field) -> Vec<Hom> {
    vec![
        homs::i_star(field, CoeffRing::Z, Trunc::Inf).unwrap(),
        homs::i_star(field, CoeffRing::F2, Trunc::Inf).unwrap(),
        homs::i_star(field, CoeffRing::Z, Trunc::N(1)).unwrap(),
        homs::i_star(field, CoeffRing::Z, Trunc::N(3)).unwrap(),
        homs::m_multiplication(field).unwrap(),
        homs::gysin_delta(field).unwrap(),
        homs::delta_from_cover(field, CoeffRing::Z).unwrap(),
        homs::delta_from_cover(field, CoeffRing::F2).unwrap(),
        homs::delta_from_base(field, CoeffRing::Z, Trunc::Inf).unwrap(),
        homs::delta_from_base(field, CoeffRing::F2, Trunc::Inf).unwrap(),
        homs::delta_from_base(field, CoeffRing::F2, Trunc::N(3)).unwrap(),
        homs::b_star(field).unwrap(),
        homs::b_delta_star(field, Trunc::Inf).unwrap(),
        homs::b_delta_star(field, Trunc::N(2)).unwrap(),
        homs::pi2_star(field, CoeffRing::Z).unwrap(),
        homs::pi2_star(field, CoeffRing::F2).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn catalogue_maps_kill_source_relations(
        field in prop::sample::select(vec![Field::C, Field::H]),
        which in 0usize..16,
        k in 0usize..=16,
    ) {
        let h = catalogue(field).swap_remove(which);
        let k = k * field.d() / 2;
        if let Err(e) = h.check_well_defined(k) {
            prop_assert!(false, "{} at degree {}: {}", h.name, k, e);
        }
    }

    #[test]
    fn cofiber_sequence_is_short_exact(
        field in prop::sample::select(vec![Field::C, Field::H]),
        trunc in prop::sample::select(vec![Trunc::Inf, Trunc::N(1), Trunc::N(2), Trunc::N(3)]),
        k in 1usize..=20,
    ) {
        let d = field.d();
        let k = (k * d / 2).max(1);
        let delta = homs::delta_from_base(field, CoeffRing::F2, trunc).unwrap();
        let collapse = homs::b_delta_star(field, trunc).unwrap();
        prop_assert!(delta.is_monic(k - 1, true).unwrap());
        exact_at(&delta, &collapse, k, true).unwrap();
        prop_assert!(collapse.is_epic(k, true).unwrap());
    }

    #[test]
    fn sphere_bundle_sequence_is_exact(
        field in prop::sample::select(vec![Field::C, Field::H]),
        k in 1usize..=20,
    ) {
        let d = field.d();
        let k = k * d / 2;
        let times_m = homs::m_multiplication(field).unwrap();
        let restrict = homs::i_star(field, CoeffRing::F2, Trunc::Inf).unwrap();
        let connecting = homs::gysin_delta(field).unwrap();
        exact_at(&times_m, &restrict, k, false).unwrap();
        exact_at(&restrict, &connecting, k, false).unwrap();
        if k >= d {
            exact_at(&connecting, &times_m, k - d + 1, false).unwrap();
        }
    }

    #[test]
    fn restriction_recovers_the_thom_groups(
        field in prop::sample::select(vec![Field::C, Field::H]),
        k in 1usize..=10,
    ) {
        let k = 2 * (k * field.d() / 4).max(1);
        let i = homs::i_star(field, CoeffRing::Z, Trunc::Inf).unwrap();
        let mp = Presentation::new(SpaceSpec::new(
            SpaceId::Mp,
            field,
            CoeffRing::Z,
            Trunc::Inf,
        ))
        .unwrap();
        let (kf, kt) = i.kernel_invariants(k).unwrap();
        prop_assert_eq!((kf, kt.len()), mp.poincare(k).unwrap());
        let (cf, ct) = i.cokernel_invariants(k).unwrap();
        prop_assert_eq!((cf, ct.len()), mp.poincare(k + 1).unwrap());
    }

    #[test]
    fn quotient_dimensions_add_up(
        field in prop::sample::select(vec![Field::C, Field::H]),
        trunc in prop::sample::select(vec![Trunc::Inf, Trunc::N(1), Trunc::N(2), Trunc::N(3)]),
        k in 1usize..=40,
    ) {
        let d = field.d();
        if k > 10 * d {
            return Ok(());
        }
        let build = |id| {
            Presentation::new(SpaceSpec::new(id, field, CoeffRing::F2, trunc)).unwrap()
        };
        let sp2 = build(SpaceId::Sp2);
        let kp = build(SpaceId::Kp);
        let mp = build(SpaceId::Mp);
        prop_assert_eq!(
            sp2.dim_f2(k).unwrap() + kp.dim_f2(k - 1).unwrap(),
            mp.dim_f2(k).unwrap()
        );
    }

    #[test]
    fn composite_connecting_map_is_monic(
        field in prop::sample::select(vec![Field::C, Field::H]),
        k in 0usize..=20,
    ) {
        let k = k * field.d() / 2;
        let composite = homs::compose(
            "delta.pi2*",
            homs::delta_from_cover(field, CoeffRing::F2).unwrap(),
            homs::pi2_star(field, CoeffRing::F2).unwrap(),
        )
        .unwrap();
        prop_assert!(composite.is_monic(k, true).unwrap());
    }
}
