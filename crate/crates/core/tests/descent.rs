mod support;

use chern_descent_core::descent::{catalogue, descend, descend_chain, descend_direct, ModelFamily};
use chern_descent_core::exact::int;
use chern_descent_core::{CoeffTable, Error, SplitChernVector, Terminal};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn model(family: ModelFamily) -> SplitChernVector {
    catalogue(family).unwrap().vector().unwrap().clone()
}

#[test]
fn projective_spaces_descend_to_projective_spaces() {
    let table = support::shared_table();
    for n in 2..=10 {
        let step = descend(table, &model(ModelFamily::ProjectiveSpace(n)), 1).unwrap();
        let down = step.descended.unwrap();
        assert_eq!(
            down.scalars(),
            model(ModelFamily::ProjectiveSpace(n - 1)).scalars(),
            "P^{n}"
        );
    }
}

#[test]
fn quadrics_descend_two_dimensions() {
    let table = support::shared_table();
    for n in 3..=10 {
        let step = descend(table, &model(ModelFamily::Quadric(n)), 1).unwrap();
        assert_eq!(step.family_dim, n as i64 - 2);
        let down = step.descended.unwrap();
        assert_eq!(
            down.scalars(),
            model(ModelFamily::Quadric(n - 2)).scalars(),
            "Q^{n}"
        );
    }
}

#[test]
fn catalogue_chains_reach_the_stated_n() {
    let table = support::shared_table();
    for n in 1..=10 {
        for family in [ModelFamily::ProjectiveSpace(n), ModelFamily::Quadric(n)] {
            let entry = catalogue(family).unwrap();
            let report = descend_chain(table, entry.vector().unwrap(), entry.degrees()).unwrap();
            assert_eq!(report.terminal, Terminal::DimensionZero, "{family:?}");
            assert_eq!(
                report.n_invariant,
                Some(entry.n_invariants().0),
                "{family:?}"
            );
            let dims = report.dims();
            assert!(dims.windows(2).all(|w| w[0] > w[1]));
        }
    }
}

#[test]
fn direct_matches_iterated_on_projective_and_quadric_models() {
    let table = support::shared_table();
    let p5 = model(ModelFamily::ProjectiveSpace(5));
    let direct = descend_direct(table, &p5, 2, 1).unwrap().descended.unwrap();
    assert_eq!(
        direct.scalars(),
        model(ModelFamily::ProjectiveSpace(3)).scalars()
    );

    let q6 = model(ModelFamily::Quadric(6));
    let direct = descend_direct(table, &q6, 2, 1).unwrap().descended.unwrap();
    assert_eq!(direct.scalars(), &[int(2), int(0)]);
}

fn iterate(table: &CoeffTable, v: &SplitChernVector, depth: usize, a: u32) -> SplitChernVector {
    let mut current = v.clone();
    for step in 0..depth {
        let degree = if step == 0 { a } else { 1 };
        current = descend(table, &current, degree).unwrap().descended.unwrap();
    }
    current
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn direct_descent_equals_iterated_descent(seed in any::<u64>()) {
        let table = support::shared_table();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let chain = support::defined_chain(&mut rng, 8, 4);
        let iterated = iterate(table, &chain.vector, chain.depth, chain.first_degree);
        let direct = descend_direct(table, &chain.vector, chain.depth, chain.first_degree).unwrap();
        prop_assert_eq!(direct.family_dim, *chain.dims.last().unwrap() as i64);
        let direct = direct.descended.unwrap();
        prop_assert_eq!(direct.scalars(), iterated.scalars());
    }

    #[test]
    fn first_chern_class_shortcut(seed in any::<u64>()) {
        let table = support::shared_table();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let chain = support::defined_chain(&mut rng, 8, 1);
        let v = &chain.vector;
        let a = int(chain.first_degree as i64);
        let s = descend(table, v, chain.first_degree).unwrap().descended.unwrap();
        let r1 = v.r(1).unwrap();
        let r2 = v.r(2).unwrap();
        prop_assert_eq!(&s.scalars()[0], &((r1 * &a - int(2)) / int(2) + r2 * &a * &a));
    }

    #[test]
    fn chain_dimensions_strictly_decrease(seed in any::<u64>()) {
        let table = support::shared_table();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let chain = support::defined_chain(&mut rng, 8, 4);
        if chain.vector.is_fano() {
            let mut degrees = vec![1; 8];
            degrees[0] = chain.first_degree;
            // Past the constructed depth c_1 may stop being integral, which
            // the driver reports as an error.
            let report = match descend_chain(table, &chain.vector, Some(&degrees)) {
                Ok(report) => report,
                Err(Error::NonIntegralDimension { .. }) => return Ok(()),
                Err(e) => panic!("{e}"),
            };
            prop_assert!(report.steps.len() >= chain.depth.min(1));
            let dims = report.dims();
            prop_assert!(dims.windows(2).all(|w| w[0] > w[1]));
            match report.terminal {
                Terminal::DimensionZero | Terminal::NotFano => {
                    prop_assert_eq!(report.n_invariant, Some(report.steps.len()))
                }
                _ => prop_assert_eq!(report.n_invariant, None),
            }
        }
    }
}
