mod common;

use proptest::prelude::*;

use biorder::catalog;
use biorder::chrompoly::{flat_orientations, is_monic_in_x};
use biorder::graph::orientation_to_poset;
use biorder::orderpoly::check::{check_word_reciprocity, WordReciprocityReading};
use biorder::orderpoly::oracle::{brute_count_plain, interpolate_order_poly};
use biorder::orderpoly::{decompose, default_labeling};
use biorder::{
    brute_count, chi_classical, chi_poly, fixtures, omega, omega_strict, omega_weak, BicoloredPoset, Budget, Graph,
    Mode, Poly,
};

use common::{all_words, b, c, permutations, q};

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..4, 0u32..4), -20i64..20, 1i64..6), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|((dx, dy), n, d)| Poly::monomial(dx, dy, common::frac(n, d)))
            .sum()
    })
}

fn small_poset() -> impl Strategy<Value = BicoloredPoset> {
    (1usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        (
            prop::collection::vec(any::<bool>(), m),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(keep, cel)| {
                let rel: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
                let celeste: Vec<_> = (0..n).filter(|&i| cel[i]).collect();
                BicoloredPoset::new(n, &rel, &celeste).unwrap()
            })
    })
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), x in -6i64..6, y in -6i64..6) {
        prop_assert_eq!((&a * &b).evaluate_int(x, y), a.evaluate_int(x, y) * b.evaluate_int(x, y));
        prop_assert_eq!((&a + &b).evaluate_int(x, y), a.evaluate_int(x, y) + b.evaluate_int(x, y));
        prop_assert_eq!(a.substitute_negate().evaluate_int(x, y), a.evaluate_int(-x, -y));
        prop_assert_eq!(a.substitute_shift(2, -3).evaluate_int(x, y), a.evaluate_int(x + 2, y - 3));
    }

    #[test]
    fn json_round_trip(a in small_poly()) {
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn negated_binomial(s in -3i64..4, t in -3i64..4, m in 0u32..=6) {
        let a = Poly::affine(s, t, 1);
        let lhs = b(-a.clone(), m);
        let rhs = b(&a + &c(m as i64 - 1), m).scale(&q(if m % 2 == 0 { 1 } else { -1 }));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_posets_match_oracle(p in small_poset()) {
        for mode in [Mode::Strict, Mode::Weak] {
            let closed: Poly = omega(&p, mode);
            let oracle: Poly = interpolate_order_poly(&p, mode, Budget::DEFAULT).unwrap();
            prop_assert_eq!(closed, oracle);
        }
    }

    #[test]
    fn random_graphs_decompose(g in small_graph()) {
        let p: Poly = chi_poly(&g);
        prop_assert!(is_monic_in_x(&p, g.vertex_count()));
        prop_assert_eq!(p.total_degree(), Some(g.vertex_count() as u32));
        prop_assert_eq!(p.diagonal(), chi_classical::<biorder::Rational>(&g));
    }
}

#[test]
fn linear_extensions_match_permutation_filter() {
    for p in catalog::bicolored_posets(4)
        .iter()
        .chain(fixtures::named_posets().iter().map(|(_, p)| p))
    {
        let exts = p.linear_extensions();
        let brute = permutations(p.len())
            .into_iter()
            .filter(|perm| {
                let pos = |a: usize| perm.iter().position(|&v| v == a + 1).unwrap();
                p.relations().iter().all(|&(a, b)| pos(a) < pos(b))
            })
            .count();
        assert_eq!(exts.len(), brute);
        for e in &exts {
            assert!(e.refines(p));
        }
        let mut orders: Vec<_> = exts.iter().map(|e| e.order.clone()).collect();
        orders.sort();
        orders.dedup();
        assert_eq!(orders.len(), exts.len());
    }
}

#[test]
fn labelings_have_expected_kind() {
    for p in catalog::bicolored_posets(4) {
        assert!(p.natural_labeling().is_natural(&p));
        assert!(p.reverse_natural_labeling().is_reverse_natural(&p));
        assert!(p.natural_labelings().iter().all(|l| l.is_natural(&p)));
        assert!(p.reverse_natural_labelings().iter().all(|l| l.is_reverse_natural(&p)));
    }
}

#[test]
fn ascents_and_descents_partition_positions() {
    for w in all_words(5) {
        assert_eq!(w.asc() + w.des(), w.len() - 1);
        assert!(w.k() <= w.len());
    }
}

#[test]
fn summand_count_is_extension_count() {
    for p in catalog::bicolored_posets(4) {
        let n = p.linear_extensions().len();
        for mode in [Mode::Strict, Mode::Weak] {
            assert_eq!(decompose(&p, mode, &default_labeling(&p, mode)).unwrap().len(), n);
        }
    }
}

#[test]
fn named_fixtures_match_brute_counts() {
    let budget = Budget(200_000_000);
    for (name, p) in fixtures::named_posets() {
        let strict: Poly = omega_strict(&p);
        let weak: Poly = omega_weak(&p);
        let max_x = if p.len() >= 6 { 6 } else { 8 };
        for x in 0..=max_x {
            for y in 0..=x {
                let count = brute_count(&p, Mode::Strict, x, y, budget).unwrap();
                assert_eq!(
                    strict.evaluate_int(x as i64, y as i64),
                    q(count as i64),
                    "{name} strict ({x},{y})"
                );
            }
            for y in 1..=x + 1 {
                let count = brute_count(&p, Mode::Weak, x, y, budget).unwrap();
                assert_eq!(
                    weak.evaluate_int(x as i64, y as i64),
                    q(count as i64),
                    "{name} weak ({x},{y})"
                );
            }
        }
    }
}

#[test]
fn specializations_recover_univariate_order_polynomials() {
    for p in catalog::bicolored_posets(3)
        .iter()
        .chain(std::iter::once(&fixtures::pentagon()))
    {
        let strict: Poly = omega_strict(p);
        let weak: Poly = omega_weak(p);
        for x in 0..=7u64 {
            let plain_strict = brute_count_plain(p, Mode::Strict, x, Budget::DEFAULT).unwrap();
            let plain_weak = brute_count_plain(p, Mode::Weak, x, Budget::DEFAULT).unwrap();
            assert_eq!(strict.evaluate_int(x as i64, 0), q(plain_strict as i64));
            assert_eq!(weak.evaluate_int(x as i64, 1), q(plain_weak as i64));
        }
    }
}

#[test]
fn flats_of_complete_graphs_are_bell_numbers() {
    let bell = [1, 1, 2, 5, 15, 52, 203];
    for (n, &expected) in bell.iter().enumerate().skip(1) {
        assert_eq!(fixtures::complete(n).flats().len(), expected, "K{n}");
    }
}

#[test]
fn flat_invariants() {
    for g in catalog::graphs_up_to(4) {
        let flats = g.flats();
        assert_eq!(flats.iter().filter(|f| f.is_trivial()).count(), 1);
        for f in &flats {
            let mut covered: Vec<usize> = f.blocks.iter().flatten().copied().collect();
            covered.sort_unstable();
            assert_eq!(covered, (0..g.vertex_count()).collect::<Vec<_>>());
            assert_eq!(f.quotient.vertex_count(), f.blocks.len());
            for (i, block) in f.blocks.iter().enumerate() {
                let mask = block.iter().fold(0u64, |m, &v| m | 1 << v);
                assert!(g.induces_connected(mask));
                assert_eq!(f.contracted.contains(&i), block.len() >= 2);
            }
        }
    }
}

#[test]
fn trivial_flat_on_diagonal_is_classical() {
    for g in catalog::graphs_up_to(4) {
        let sum: Poly = flat_orientations(&g)
            .iter()
            .filter(|(f, _)| f.is_trivial())
            .map(|(f, o)| omega_strict::<biorder::Rational>(&orientation_to_poset(f, o).unwrap()))
            .sum();
        assert_eq!(sum.diagonal(), chi_classical(&g));
        assert!(sum.is_y_free());
    }
}

#[test]
fn word_reciprocity_prefix_reversed() {
    for w in all_words(5) {
        let r = check_word_reciprocity(&w, WordReciprocityReading::PrefixReversed);
        assert!(r.passed, "{w} {:?}: {:?}", w.celeste_pos(), r.witness);
    }
}

#[test]
fn word_reciprocity_mirrored_is_not_an_identity() {
    let w = biorder::Word::from_digits("21", Some(2)).unwrap();
    assert!(!check_word_reciprocity(&w, WordReciprocityReading::MirroredCeleste).passed);
}
