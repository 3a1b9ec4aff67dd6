mod common;

use proptest::prelude::*;
use star_routing::io::{instance_from_json, instance_to_json};
use star_routing::{
    metric_closure, solve_star_approx, solve_star_exact, verify_feasible, Error, ExperimentConfig,
    Instance, TspBackend,
};

use common::opt_by_state_search;

fn arb_instance() -> impl Strategy<Value = Instance> {
    prop_oneof![
        (1usize..=6, 1usize..=6, 0.05f64..=1.0, any::<u64>())
            .prop_filter("grid needs an edge", |(r, c, _, _)| r * c >= 2)
            .prop_map(|(r, c, d, s)| ExperimentConfig::grid(r, c, d, s).generate().unwrap()),
        (2usize..=9, 0.0f64..=0.7, 0.05f64..=1.0, any::<u64>())
            .prop_map(|(n, p, d, s)| ExperimentConfig::general(n, p, d, s).generate().unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn closure_is_a_metric(inst in arb_instance()) {
        let all: Vec<usize> = (0..inst.graph().num_vertices()).collect();
        let closure = metric_closure(inst.graph(), &all).unwrap();
        prop_assert!(closure.metric().validate().is_ok());
        for i in 0..all.len() {
            for j in 0..all.len() {
                let path = closure.path(i, j);
                prop_assert_eq!(path.len() as u64 - 1, closure.metric().dist(i, j));
            }
        }
    }

    #[test]
    fn approx_is_feasible_and_canonical(inst in arb_instance()) {
        for backend in TspBackend::ALL {
            let r = match solve_star_approx(&inst, backend) {
                Err(Error::BudgetExceeded { .. }) if backend == TspBackend::Exact => continue,
                other => other.unwrap(),
            };
            prop_assert_eq!(verify_feasible(&inst, &r.walk), Ok(()));
            prop_assert_eq!(r.walk.canonical(), r.walk.clone());
            prop_assert_eq!(r.walk.start(), *r.walk.vertex_set().iter().next().unwrap());
        }
    }

    #[test]
    fn exact_matches_state_search(inst in arb_instance().prop_filter("small X", |i| i.customers().len() <= 8)) {
        let exact = solve_star_exact(&inst).unwrap();
        prop_assert_eq!(verify_feasible(&inst, &exact.walk), Ok(()));
        prop_assert_eq!(exact.length(), opt_by_state_search(&inst));
    }

    #[test]
    fn json_round_trip(inst in arb_instance()) {
        let text = instance_to_json(&inst);
        let back = instance_from_json(&text).unwrap();
        prop_assert_eq!(instance_to_json(&back), text);
        prop_assert_eq!(back, inst);
    }
}
