mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tabloids::coopgame::{self, Game, SolutionCoefficients, SolutionConcept};
use tabloids::symcore::enumerate_tabloids;
use tabloids::voting::{self, SpectralWeights, WeightingVector};
use tabloids::{Composition, GroupAlgebraElement, ModuleVector, Permutation, Tabloid};

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=3, 1..=4)
        .prop_filter("n <= 7", |parts| parts.iter().sum::<usize>() <= 7)
        .prop_map(|parts| Composition::new(parts).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=5).prop_map(|(a, b)| qf(a, b))
}

fn vector_on(shape: Composition) -> impl Strategy<Value = ModuleVector> {
    let dim = shape.tabloid_count().unwrap() as usize;
    prop::collection::vec(small_rational(), dim)
        .prop_map(move |values| ModuleVector::from_values(&shape, values).unwrap())
}

fn profile(n: usize) -> impl Strategy<Value = ModuleVector> {
    let shape = Composition::full_ranking(n).unwrap();
    let dim = shape.tabloid_count().unwrap() as usize;
    prop::collection::vec(0i64..=6, dim).prop_map(move |counts| {
        ModuleVector::from_values(&shape, counts.into_iter().map(q).collect()).unwrap()
    })
}

fn shape_and_vectors() -> impl Strategy<Value = (ModuleVector, ModuleVector, Permutation)> {
    composition().prop_flat_map(|shape| {
        let n = shape.n();
        (vector_on(shape.clone()), vector_on(shape), permutation(n))
    })
}

fn profile_and_permutation() -> impl Strategy<Value = (ModuleVector, Permutation)> {
    (3usize..=4).prop_flat_map(|n| (profile(n), permutation(n)))
}

fn multinomial(parts: &[usize]) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    fact(parts.iter().sum()) / parts.iter().map(|&p| fact(p)).product::<u128>()
}

/// Reads a tabloid as its rows' sorted contents, top row first.
fn reading_word(x: &Tabloid) -> Vec<usize> {
    x.rows()
        .flat_map(|row| {
            let mut r = row.to_vec();
            r.sort_unstable();
            r
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tabloid_count_is_multinomial(shape in composition()) {
        let all = enumerate_tabloids(&shape).unwrap();
        prop_assert_eq!(all.len() as u128, multinomial(shape.parts()));
        prop_assert_eq!(shape.tabloid_count().unwrap(), multinomial(shape.parts()));
    }

    #[test]
    fn enumeration_is_sorted_by_reading_word(shape in composition()) {
        let all = enumerate_tabloids(&shape).unwrap();
        let words: Vec<Vec<usize>> = all.iter().map(reading_word).collect();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(&words, &sorted);
        for (rank, x) in all.iter().enumerate() {
            prop_assert_eq!(x.lex_rank(), rank as u128);
            prop_assert_eq!(&Tabloid::unrank(&shape, rank as u128).unwrap(), x);
        }
    }

    #[test]
    fn action_is_orthogonal((f, g, sigma) in shape_and_vectors()) {
        let sf = f.act(&sigma).unwrap();
        let sg = g.act(&sigma).unwrap();
        prop_assert_eq!(sf.inner(&sg).unwrap(), f.inner(&g).unwrap());
        let ones = ModuleVector::ones(f.shape()).unwrap();
        prop_assert_eq!(ones.act(&sigma).unwrap(), ones);
        prop_assert_eq!(sf.act(&sigma.inverse()).unwrap(), f);
    }

    #[test]
    fn action_is_a_left_action((f, _g, sigma) in shape_and_vectors(), seed in any::<u64>()) {
        let n = sigma.n();
        let mut images: Vec<usize> = (1..=n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(images.as_mut_slice(), &mut rng);
        let tau = Permutation::new(images).unwrap();
        let composed = sigma.compose(&tau).unwrap();
        prop_assert_eq!(f.act(&tau).unwrap().act(&sigma).unwrap(), f.act(&composed).unwrap());
    }

    #[test]
    fn row_sorting_is_an_isometry((f, g, _sigma) in shape_and_vectors()) {
        let sf = f.to_sorted_shape().unwrap();
        let sg = g.to_sorted_shape().unwrap();
        prop_assert!(sf.shape().is_partition());
        prop_assert_eq!(sf.inner(&sg).unwrap(), f.inner(&g).unwrap());
        let mut a = f.to_values();
        let mut b = sf.to_values();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn positional_tally_is_neutral((f, sigma) in profile_and_permutation()) {
        let n = f.n();
        for w in [WeightingVector::borda(n).unwrap(), WeightingVector::plurality(n).unwrap()] {
            let lhs = voting::apply_positional(&w, &f.act(&sigma).unwrap()).unwrap();
            let rhs = voting::apply_positional(&w, &f).unwrap().act(&sigma).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn pairs_and_kemeny_are_neutral((f, sigma) in profile_and_permutation()) {
        let sf = f.act(&sigma).unwrap();
        prop_assert_eq!(
            voting::apply_pairs(&sf).unwrap(),
            voting::apply_pairs(&f).unwrap().act(&sigma).unwrap()
        );
        prop_assert_eq!(
            voting::apply_kemeny(&sf).unwrap(),
            voting::apply_kemeny(&f).unwrap().act(&sigma).unwrap()
        );
        let gamma = SpectralWeights([q(1), qf(-2, 3), q(5)]);
        prop_assert_eq!(
            voting::apply_family(&gamma, &sf).unwrap(),
            voting::apply_family(&gamma, &f).unwrap().act(&sigma).unwrap()
        );
    }

    #[test]
    fn kemeny_is_self_adjoint(n in 3usize..=4, seed in any::<u64>()) {
        let shape = Composition::full_ranking(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = shape.tabloid_count().unwrap() as usize;
        let f = ModuleVector::from_values(&shape, (0..dim).map(|_| random_small(&mut rng)).collect()).unwrap();
        let g = ModuleVector::from_values(&shape, (0..dim).map(|_| random_small(&mut rng)).collect()).unwrap();
        prop_assert_eq!(
            voting::apply_kemeny(&f).unwrap().inner(&g).unwrap(),
            f.inner(&voting::apply_kemeny(&g).unwrap()).unwrap()
        );
    }

    #[test]
    fn kemeny_matches_the_kendall_oracle(f in profile(4)) {
        let k = kemeny_matrix(4);
        let expected: Vec<Q> = k
            .iter()
            .map(|row| row.iter().zip(f.to_values()).map(|(a, b)| a * b).sum())
            .collect();
        prop_assert_eq!(voting::apply_kemeny(&f).unwrap().to_values(), expected);
    }

    #[test]
    fn equivalent_weights_give_equal_tiers(f in profile(4), scale in 1i64..=9, shift in -9i64..=9) {
        let w = WeightingVector::new(vec![q(5), q(2), q(1), q(0)]).unwrap();
        let w2 = WeightingVector::new(w.weights().iter().map(|x| x * q(scale) + q(shift)).collect()).unwrap();
        prop_assert!(voting::weighting_equivalent(&w, &w2));
        prop_assert!(voting::same_ordinal_ranking(
            &voting::positional_tally(&w, &f).unwrap(),
            &voting::positional_tally(&w2, &f).unwrap()
        ));
    }

    #[test]
    fn group_algebra_round_trip(f in profile(4)) {
        let element = GroupAlgebraElement::from_function(&f).unwrap();
        prop_assert_eq!(element.to_function(), f.clone());
        for (sigma, coefficient) in element.nonzero_terms().unwrap() {
            let x = Tabloid::initial(f.shape()).act(&sigma).unwrap();
            prop_assert_eq!(f.value_at(&x).unwrap(), coefficient);
        }
    }

    #[test]
    fn solution_concepts_are_symmetric(n in 2usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_game_values(&mut rng, n);
        let game = Game::from_values(n, v[1..].to_vec()).unwrap();
        let c = SolutionCoefficients::new(
            (0..n).map(|_| random_small(&mut rng)).collect(),
            (0..n - 1).map(|_| random_small(&mut rng)).collect(),
        ).unwrap();
        let mut images: Vec<usize> = (1..=n).collect();
        rand::seq::SliceRandom::shuffle(images.as_mut_slice(), &mut rng);
        let sigma = Permutation::new(images).unwrap();
        prop_assert_eq!(
            c.payoffs(&game.relabel(&sigma).unwrap()).unwrap(),
            c.payoffs(&game).unwrap().act(&sigma).unwrap()
        );
    }

    #[test]
    fn duality_is_an_involution(n in 2usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_game_values(&mut rng, n);
        let game = Game::from_values(n, v[1..].to_vec()).unwrap();
        let dual = coopgame::dual_game(&game);
        prop_assert_eq!(dual.grand_value(), game.grand_value());
        prop_assert_eq!(coopgame::dual_game(&dual), game);
    }

    #[test]
    fn decomposition_parts_are_orthogonal(n in 3usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_game_values(&mut rng, n);
        let game = Game::from_values(n, v[1..].to_vec()).unwrap();
        for level in coopgame::decompose_game(&game).unwrap() {
            prop_assert!(level.mean_part.inner(&level.u1_part).unwrap().is_zero());
            prop_assert!(level.mean_part.inner(&level.kernel_part).unwrap().is_zero());
            prop_assert!(level.u1_part.inner(&level.kernel_part).unwrap().is_zero());
        }
    }
}

#[test]
fn action_is_transitive() {
    for n in 1..=5 {
        let mut shapes = Vec::new();
        let mut stack = vec![Vec::<usize>::new()];
        while let Some(parts) = stack.pop() {
            let used: usize = parts.iter().sum();
            if used == n {
                shapes.push(Composition::new(parts).unwrap());
                continue;
            }
            for p in 1..=n - used {
                let mut next = parts.clone();
                next.push(p);
                stack.push(next);
            }
        }
        assert_eq!(shapes.len(), 1 << (n - 1));
        for shape in shapes {
            let start = Tabloid::initial(&shape);
            let mut orbit: Vec<Tabloid> = Permutation::all(n)
                .map(|s| start.act(&s).unwrap())
                .collect();
            orbit.sort();
            orbit.dedup();
            assert_eq!(orbit, enumerate_tabloids(&shape).unwrap(), "shape {shape}");
        }
    }
}

#[test]
fn kemeny_columns_permute_the_first() {
    for n in 3..=4 {
        let k = voting::kemeny_map(n).unwrap().materialize().unwrap();
        let mut first = k.column(0);
        first.sort();
        for j in 0..k.cols() {
            let mut column = k.column(j);
            column.sort();
            assert_eq!(column, first);
        }
    }
}

#[test]
fn non_equivalent_weights_disagree_somewhere() {
    let pairs = [
        (vec![q(2), q(1), q(0)], vec![q(1), q(0), q(0)]),
        (vec![q(1), q(1), q(0)], vec![q(1), q(0), q(0)]),
        (vec![q(3), q(2), q(1), q(0)], vec![q(1), q(1), q(0), q(0)]),
    ];
    for (a, b) in pairs {
        let w = WeightingVector::new(a).unwrap();
        let w2 = WeightingVector::new(b).unwrap();
        assert!(!voting::weighting_equivalent(&w, &w2));
        let f = voting::disagreement_profile(&w, &w2)
            .unwrap()
            .expect("not equivalent");
        assert!(voting::integer_counts(&f).is_some());
        assert!(!voting::same_ordinal_ranking(
            &voting::positional_tally(&w, &f).unwrap(),
            &voting::positional_tally(&w2, &f).unwrap()
        ));
    }
}

#[test]
fn efficiency_criterion_at_six_players() {
    let n = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let basis = Game::unanimity_basis(n).unwrap();
    for trial in 0..6 {
        let c1: Vec<Q> = (0..n - 1).map(|_| random_small(&mut rng)).collect();
        let mut c0 = vec![Q::zero(); n];
        c0[n - 1] = q(1);
        if trial % 2 == 1 {
            c0[trial % (n - 1)] = q(1);
        }
        let c = SolutionCoefficients::new(c0, c1).unwrap();
        assert_eq!(
            coopgame::efficiency_check(&c),
            coopgame::is_efficient_on(&c, &basis).unwrap()
        );
    }
}

#[test]
fn figure_tabloid_rank() {
    let shape = Composition::new(vec![2, 3, 1, 3]).unwrap();
    let x = Tabloid::new(
        shape.clone(),
        vec![vec![6, 2], vec![5, 1, 3], vec![8], vec![9, 4, 7]],
    )
    .unwrap();
    // position of its reading word among all reading words of the shape
    let mut words: Vec<Vec<usize>> = enumerate_tabloids(&shape)
        .unwrap()
        .iter()
        .map(reading_word)
        .collect();
    words.sort();
    let expected = words.binary_search(&reading_word(&x)).unwrap() as u128;
    assert_eq!(x.lex_rank(), expected);
    assert_eq!(x.lex_rank(), 1546);
    assert_eq!(Tabloid::unrank(&shape, 1546).unwrap(), x);
}
