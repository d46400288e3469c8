//! Property tests for the graded presentations: products, torsion, truncation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use sympow::expr::parse_element;
use sympow::fib::lucas_parity;
use sympow::names::u_name;
use sympow::presentation::{ClassOrder, Presentation};
use sympow::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};

fn build(id: SpaceId, field: Field, coeff: CoeffRing, trunc: Trunc) -> Presentation {
    Presentation::new(SpaceSpec::new(id, field, coeff, trunc)).unwrap()
}

fn ring_under_test(which: usize) -> Presentation {
    match which {
        0 => build(SpaceId::Sp2, Field::C, CoeffRing::Z, Trunc::Inf),
        1 => build(SpaceId::Sp2, Field::H, CoeffRing::Z, Trunc::Inf),
        2 => build(SpaceId::Sp2, Field::C, CoeffRing::F2, Trunc::Inf),
        3 => build(SpaceId::Sp2, Field::C, CoeffRing::Z, Trunc::N(3)),
        4 => build(SpaceId::Sp2, Field::H, CoeffRing::F2, Trunc::N(2)),
        5 => build(SpaceId::Mp, Field::C, CoeffRing::F2, Trunc::Inf),
        6 => build(SpaceId::Gamma, Field::C, CoeffRing::Z, Trunc::Inf),
        _ => build(SpaceId::Gamma, Field::H, CoeffRing::F2, Trunc::N(2)),
    }
}

fn prune(combo: &[(BigInt, String)]) -> BTreeMap<String, BigInt> {
    combo
        .iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| (n.clone(), c.clone()))
        .collect()
}

/// combo * single named class, extended by bilinearity.
fn mul_combo(
    p: &Presentation,
    combo: &BTreeMap<String, BigInt>,
    other: &str,
) -> BTreeMap<String, BigInt> {
    let mut acc: BTreeMap<String, BigInt> = BTreeMap::new();
    let rhs = parse_element(other).unwrap();
    for (name, c) in combo {
        let (_, parts) = p.multiply(&parse_element(name).unwrap(), &rhs).unwrap();
        for (k, part_name) in parts {
            let v = acc.entry(part_name).or_insert_with(BigInt::zero);
            *v += c * &k;
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn multiplication_is_commutative_and_associative(
        which in 0usize..8,
        k1 in 0usize..=8,
        k2 in 0usize..=8,
        k3 in 0usize..=8,
        pick in prop::array::uniform3(0usize..6),
    ) {
        let p = ring_under_test(which);
        let d = p.spec.d();
        let cap = 10 * d;
        prop_assume!((k1 + k2 + k3) * d / 2 <= cap);
        let name_at = |k: usize, idx: usize| -> Option<String> {
            let piece = p.piece(k * d / 2).ok()?;
            if piece.basis.is_empty() {
                return None;
            }
            Some(piece.basis[idx % piece.basis.len()].name.clone())
        };
        let (Some(a), Some(b), Some(c)) = (
            name_at(k1, pick[0]),
            name_at(k2, pick[1]),
            name_at(k3, pick[2]),
        ) else {
            return Ok(());
        };
        let ea = parse_element(&a).unwrap();
        let eb = parse_element(&b).unwrap();
        let (dab, ab) = p.multiply(&ea, &eb).unwrap();
        let (dba, ba) = p.multiply(&eb, &ea).unwrap();
        prop_assert_eq!(dab, dba);
        prop_assert_eq!(prune(&ab), prune(&ba));
        prop_assert_eq!(dab, (k1 + k2) * d / 2);

        let left = mul_combo(&p, &prune(&ab), &c);
        let (_, bc) = p.multiply(&eb, &parse_element(&c).unwrap()).unwrap();
        let right = mul_combo(&p, &prune(&bc), &a);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn torsion_doubles_to_zero_and_free_does_not(
        which in 0usize..8,
        k in 0usize..=16,
    ) {
        let p = ring_under_test(which);
        let d = p.spec.d();
        let piece = p.piece(k * d / 2).unwrap();
        for class in piece.basis.iter() {
            let doubled = format!("2*{}", class.name);
            let (_, combo) = p.normal_form(&parse_element(&doubled).unwrap()).unwrap();
            let nf = prune(&combo);
            match class.order {
                ClassOrder::Two => prop_assert!(nf.is_empty(), "2*{} != 0", class.name),
                ClassOrder::Free => {
                    prop_assert_eq!(nf.get(&class.name), Some(&BigInt::from(2)));
                }
            }
        }
    }

    #[test]
    fn odd_integral_pieces_are_torsion(
        field in prop::sample::select(vec![Field::C, Field::H]),
        trunc in prop::sample::select(vec![Trunc::Inf, Trunc::N(2), Trunc::N(3)]),
        k in 0usize..=20,
    ) {
        let p = build(SpaceId::Sp2, field, CoeffRing::Z, trunc);
        let deg = 2 * k + 1;
        if deg <= 10 * field.d() {
            let (free, _) = p.poincare(deg).unwrap();
            prop_assert_eq!(free, 0);
        }
    }

    #[test]
    fn truncation_agrees_below_its_first_relation(
        field in prop::sample::select(vec![Field::C, Field::H]),
        n in 1u32..=3,
        k in 0usize..=40,
    ) {
        let d = field.d();
        let full_f2 = build(SpaceId::Sp2, field, CoeffRing::F2, Trunc::Inf);
        let part_f2 = build(SpaceId::Sp2, field, CoeffRing::F2, Trunc::N(n));
        if k <= 10 * d {
            prop_assert!(part_f2.dim_f2(k).unwrap() <= full_f2.dim_f2(k).unwrap());
        }
        if k <= (n as usize + 1) * d - 1 {
            prop_assert_eq!(part_f2.dim_f2(k).unwrap(), full_f2.dim_f2(k).unwrap());
            let full_z = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::Inf);
            let part_z = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::N(n));
            prop_assert_eq!(part_z.poincare(k).unwrap(), full_z.poincare(k).unwrap());
        }
    }

    #[test]
    fn out_of_range_u_classes_rewrite_by_parity(
        field in prop::sample::select(vec![Field::C, Field::H]),
        j in 1usize..=6,
    ) {
        let d = field.d();
        let p = build(SpaceId::Sp2, field, CoeffRing::Z, Trunc::Inf);
        let boundary = u_name((j * d / 2) as u16, j as u16);
        let (_, combo) = p.normal_form(&parse_element(&boundary).unwrap()).unwrap();
        let mut want: BTreeMap<String, BigInt> = BTreeMap::new();
        for i in 1..j {
            if lucas_parity(j as u64, i as u64) {
                want.insert(
                    u_name(((j - i) * d / 2) as u16, (j + i) as u16),
                    BigInt::from(1),
                );
            }
        }
        prop_assert_eq!(prune(&combo), want);
    }

    #[test]
    fn basis_names_parse_back_to_themselves(
        which in 0usize..8,
        k in 0usize..=16,
    ) {
        let p = ring_under_test(which);
        let d = p.spec.d();
        let piece = p.piece(k * d / 2).unwrap();
        for class in piece.basis.iter() {
            let (deg, combo) = p.normal_form(&parse_element(&class.name).unwrap()).unwrap();
            prop_assert_eq!(deg, k * d / 2);
            let mut want = BTreeMap::new();
            want.insert(class.name.clone(), BigInt::from(1));
            prop_assert_eq!(prune(&combo), want);
        }
    }
}
