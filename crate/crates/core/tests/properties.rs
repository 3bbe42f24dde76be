use std::sync::OnceLock;

use fplrs::lattice::{BoundaryCondition, Domain};
use fplrs::relations::{check_close_add, check_close_add_product, check_tl, exhaustive, sparse_subsets};
use fplrs::{catalan, LinkPattern, LpVector, Operator};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn patterns(n: usize) -> &'static [LinkPattern] {
    static CACHE: OnceLock<Vec<Vec<LinkPattern>>> = OnceLock::new();
    &CACHE.get_or_init(|| (0..=7).map(LinkPattern::all).collect())[n]
}

fn pattern(max_n: usize) -> impl Strategy<Value = LinkPattern> {
    (1..=max_n).prop_flat_map(|n| (0..patterns(n).len()).prop_map(move |i| patterns(n)[i].clone()))
}

#[test]
fn relations_exhaustive_up_to_five() {
    for n in 1..=5 {
        let (count, failure) = exhaustive(n);
        assert!(failure.is_none(), "n = {n}: {failure:?}");
        assert!(count > 0);
    }
}

#[test]
fn catalan_counts() {
    for n in 0..=10 {
        assert_eq!(BigInt::from(LinkPattern::all(n).len()), catalan(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn tl_relations_random(
        p in (5usize..=7).prop_flat_map(|n| (0..patterns(n).len()).prop_map(move |i| patterns(n)[i].clone())),
        i in 1usize..=14,
        j in 1usize..=14,
    ) {
        let m = p.points();
        let (i, j) = ((i - 1) % m + 1, (j - 1) % m + 1);
        prop_assert_eq!(check_tl(&p, i, j), None);
        prop_assert_eq!(check_close_add(&p, i.min(m - 1), j), None);
    }

    #[test]
    fn close_add_products_random(
        p in (5usize..=7).prop_flat_map(|n| (0..patterns(n).len()).prop_map(move |i| patterns(n)[i].clone())),
        mask in any::<u16>(),
    ) {
        let top = p.points() - 1;
        let mut set: Vec<usize> = (1..=top).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        // drop the larger of two consecutive indices
        let mut k = 1;
        while k < set.len() {
            if set[k] == set[k - 1] + 1 { set.remove(k); } else { k += 1; }
        }
        prop_assert_eq!(check_close_add_product(&p, &set), None);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn word_roundtrip(p in pattern(7)) {
        let w = p.to_word();
        prop_assert_eq!(LinkPattern::from_word(&w).unwrap(), p.clone());
        prop_assert_eq!(w.parse::<LinkPattern>().unwrap(), p);
    }

    #[test]
    fn rotation_and_reflection(p in pattern(7), k in -20i64..20) {
        let m = p.points() as i64;
        prop_assert_eq!(p.rotate(m), p.clone());
        prop_assert_eq!(p.rotate(k).rotate(-k), p.clone());
        prop_assert_eq!(p.reflect().reflect(), p.clone());
        for (a, b) in p.arcs() {
            prop_assert_eq!(p.partner(a as i64), b);
            prop_assert_eq!(p.partner(b as i64), a);
        }
    }

    #[test]
    fn add_is_injective_with_left_inverse(p in pattern(6), j in 1usize..=13) {
        let j = (j - 1) % (p.points() + 1) + 1;
        prop_assert_eq!(p.add(j).close(j), p);
    }

    #[test]
    fn sym_absorbs_rotation(p in pattern(5), k in 0i64..10) {
        let v = LpVector::basis(&p);
        let s = v.apply(Operator::Sym).unwrap();
        prop_assert_eq!(s.apply(Operator::Rotate(k)).unwrap(), s.clone());
        prop_assert_eq!(v.apply(Operator::Rotate(k)).unwrap().apply(Operator::Sym).unwrap(), s);
    }

    #[test]
    fn vector_json_roundtrip(
        entries in proptest::collection::vec((0usize..14, -50i64..50, 1i64..9), 0..10),
    ) {
        let mut v = LpVector::zero(4);
        for (i, num, den) in entries {
            v.add_term(patterns(4)[i].clone(), BigRational::new(BigInt::from(num), BigInt::from(den)));
        }
        prop_assert_eq!(LpVector::from_json(&v.to_json()).unwrap(), v);
    }

    #[test]
    fn hamiltonian_preserves_mass(p in pattern(6)) {
        let v = LpVector::basis(&p);
        let h = v.apply(Operator::Hamiltonian).unwrap();
        prop_assert_eq!(h.sum_entries(), BigRational::from_integer(BigInt::from(p.points())));
    }

    #[test]
    fn boundary_string_roundtrip(bits in proptest::collection::vec(any::<bool>(), 1..40)) {
        let s: String = bits.iter().map(|&b| if b { 'b' } else { 'w' }).collect();
        match s.parse::<BoundaryCondition>() {
            Ok(t) => {
                prop_assert_eq!(t.to_string(), s);
                prop_assert_eq!(t.black_count() % 2, 0);
                prop_assert_eq!(t.complement().complement(), t);
            }
            Err(_) => {
                let black = bits.iter().filter(|&&b| b).count();
                prop_assert!(black % 2 == 1 || (bits.len() - black) % 2 == 1);
            }
        }
    }

    #[test]
    fn rectangle_json_roundtrip(w in 1usize..6, h in 1usize..6, k in 0i64..30) {
        let d = Domain::rectangle(w, h).unwrap().reanchored(k);
        let back = Domain::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), d.to_json());
        prop_assert_eq!(d.num_terminations(), 2 * (w + h));
        prop_assert_eq!(d.boundary_string().total(), 4);
    }
}

#[test]
fn sparse_subsets_have_no_neighbours() {
    for s in sparse_subsets(8) {
        assert!(s.windows(2).all(|w| w[1] > w[0] + 1));
    }
}
