use combicurv::explorer::{
    component_sum_check, components_of_t, explore, explore_pattern, ExploreOptions, VerdictKind,
};
use combicurv::generators::{catalog, generate, GenKind};
use combicurv::patterns::{enumerate_positive, Pattern};
use combicurv::tess::VertexStar;
use combicurv::Curv;

fn opts(max_radius: usize) -> ExploreOptions {
    ExploreOptions { max_radius, ..Default::default() }
}

#[test]
fn strongly_curved_seeds_certify_at_radius_zero() {
    for family in enumerate_positive(42).unwrap() {
        for p in family.members(42) {
            if p.curvature() >= Curv::new(1, 12) {
                let v = explore_pattern(&p, opts(0)).unwrap();
                assert!(v.is_certified(), "{p}");
                assert_eq!(v.min_sum, p.curvature());
            }
        }
    }
}

#[test]
fn small_pentagon_seeds_certify_by_radius_two() {
    for seed in [[3, 3, 3, 3, 5].as_slice(), &[3, 4, 4, 5], &[3, 3, 5, 5]] {
        let p = Pattern::new(seed.to_vec());
        let v = explore_pattern(&p, opts(2)).unwrap();
        assert!(v.is_certified(), "{p}: {v:?}");
        assert!(v.min_sum >= Curv::new(1, 12), "{p}: {}", v.min_sum);
    }
}

#[test]
fn hendecagon_seed_stays_inconclusive() {
    let v = explore(&VertexStar::from_cycle(vec![3, 11, 12]), opts(1)).unwrap();
    assert_eq!(v.kind, VerdictKind::Inconclusive);
    assert!(v.min_sum.is_positive());
    assert!(v.min_sum >= Curv::new(1, 132));
}

#[test]
fn more_budget_or_radius_never_loses_a_certificate() {
    let seed = VertexStar::from_cycle(vec![3, 3, 3, 3, 5]);
    let mut certified_before = false;
    for budget in [10, 100, 1_000, 10_000] {
        for radius in 0..=2 {
            let v = explore(
                &seed,
                ExploreOptions { max_radius: radius, node_budget: budget, ..Default::default() },
            )
            .unwrap();
            let bigger = explore(
                &seed,
                ExploreOptions {
                    max_radius: radius + 1,
                    node_budget: budget * 10,
                    ..Default::default()
                },
            )
            .unwrap();
            if v.is_certified() {
                assert!(bigger.is_certified(), "budget {budget} radius {radius}");
                certified_before = true;
            }
        }
    }
    assert!(certified_before);
}

#[test]
fn explore_is_deterministic() {
    let seed = VertexStar::from_cycle(vec![3, 4, 4, 5]);
    assert_eq!(explore(&seed, opts(2)).unwrap(), explore(&seed, opts(2)).unwrap());
}

#[test]
fn components_of_the_corpus() {
    let t = generate("fig31", 3).unwrap();
    let comps = components_of_t(&t).unwrap();
    assert_eq!(comps.len(), 12);
    assert!(comps.iter().all(|c| c.sum >= Curv::new(1, 15)));

    let t = generate("fig2", 2).unwrap();
    let comps = components_of_t(&t).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].sum, Curv::new(1, 12));

    for s in catalog().iter().filter(|s| s.kind == GenKind::Infinite) {
        let t = generate(s.name, s.min_radius + 1).unwrap();
        let check = component_sum_check(&t).unwrap();
        assert!(check.passes(), "{}", s.name);
        assert_eq!(check.components.len(), s.declared_components, "{}", s.name);
    }
}
