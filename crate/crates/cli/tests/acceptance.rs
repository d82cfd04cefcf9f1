//! Acceptance gate: twelve end-to-end checks, one per shipped guarantee.
//! Every test prints a single `criterion N: PASS/FAIL` line (visible under
//! `--nocapture`) and enforces the runtime budget it was sized for.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use zdg_core::algebra::{
    annihilator, content_map, content_onto_all_ideals, is_content_semimodule, FiniteModule,
    FiniteSemiring,
};
use zdg_core::gamma::{build_classic, Codomain, LabeledFunction};
use zdg_core::graph::{iso_check, Diameter, SimpleGraph};
use zdg_core::report::{CheckId, ReasonCode, Status, Witness};
use zdg_core::search::{
    search_extremal, search_realization, ExtremalPredicate, ImpossibleGrounds, RealizeOutcome,
    Realization, SearchSpec,
};
use zdg_core::semigroup::{BoundedSemilattice, SemigroupTable};
use zdg_core::verify::{
    run_corpus, verify_path_dichotomy, CorpusConfig, CorpusReport, FamilySpec,
};
use zdg_core::Caps;

fn criterion(n: usize, budget_secs: u64, desc: &str, f: impl FnOnce()) {
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f));
    let elapsed = started.elapsed();
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {n:2}: {verdict} in {elapsed:.2?} - {desc}");
    if let Err(cause) = outcome {
        resume_unwind(cause);
    }
    assert!(
        elapsed <= Duration::from_secs(budget_secs),
        "criterion {n} blew its {budget_secs}s budget: {elapsed:?}"
    );
}

fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> SimpleGraph {
    SimpleGraph::new(
        vertices.iter().map(|s| s.to_string()),
        edges
            .iter()
            .map(|(u, v)| (u.to_string(), v.to_string()))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

fn pair(a: &str, b: &str) -> (String, String) {
    lex_pair(a.to_string(), b.to_string())
}

fn module_corpus(checks: Vec<CheckId>, seed: u64) -> CorpusReport {
    run_corpus(&CorpusConfig {
        seed,
        caps: Caps::default(),
        checks: Some(checks),
        families: vec![
            FamilySpec::ZnModules { min: 2, max: 30 },
            FamilySpec::ZnSquareModules { min: 2, max: 8 },
        ],
    })
}

fn corpus_modules() -> Vec<Arc<FiniteModule>> {
    let mut out = Vec::new();
    for n in 2..=30 {
        out.push(FiniteModule::regular(&FiniteSemiring::zn(n).unwrap()));
    }
    for n in 2..=8 {
        let regular = FiniteModule::regular(&FiniteSemiring::zn(n).unwrap());
        out.push(FiniteModule::product(&regular, &regular).unwrap());
    }
    out
}

fn expect_witness(outcome: RealizeOutcome) -> Realization {
    match outcome {
        RealizeOutcome::Witness(w) => w,
        other => panic!("expected a witness, got {other:?}"),
    }
}

/// Rebuild the witness graph from its recorded assignments and confirm the
/// isomorphism onto the target from scratch.
fn reverify(w: &Realization, target: &SimpleGraph) {
    let inst = LabeledFunction::new(
        w.assignments.clone(),
        Codomain::Plain(w.semigroup.clone()),
    )
    .unwrap();
    let rebuilt = inst.build_graph();
    let mapping = iso_check(&rebuilt, target, &Caps::default())
        .unwrap()
        .expect("witness graph must be isomorphic to the target");
    assert_eq!(mapping, w.mapping);
}

fn cycle_is_real(g: &SimpleGraph, cycle: &[String]) -> bool {
    let k = cycle.len();
    let distinct: BTreeSet<&String> = cycle.iter().collect();
    distinct.len() == k && (0..k).all(|i| g.has_edge(&cycle[i], &cycle[(i + 1) % k]))
}

fn cycle_contains_edge(cycle: &[String], u: &str, v: &str) -> bool {
    let k = cycle.len();
    (0..k).any(|i| {
        let a = cycle[i].as_str();
        let b = cycle[(i + 1) % k].as_str();
        (a == u && b == v) || (a == v && b == u)
    })
}

#[test]
fn c01_z6_construction_exactness() {
    criterion(1, 1, "gamma(Z6) matches the modular product scan", || {
        let g = build_classic(&SemigroupTable::zn_multiplicative(6).unwrap());
        assert_eq!(g.labels(), ["2", "3", "4"]);
        assert_eq!(edge_set(&g), BTreeSet::from([pair("2", "3"), pair("3", "4")]));
        assert!(g.is_connected());
        assert_eq!(g.diameter(), Diameter::Finite(2));

        let (vertices, edges) = modular_gamma(6);
        assert_eq!(
            g.labels().iter().cloned().collect::<BTreeSet<_>>(),
            vertices
        );
        assert_eq!(edge_set(&g), edges);
    });
}

#[test]
fn c02_diameter_theorem_sweep() {
    criterion(2, 120, "closure-passing instances are connected with diameter <= 3", || {
        let cfg = CorpusConfig {
            seed: 20260814,
            caps: Caps::default(),
            checks: Some(vec![CheckId::ClosureDiameter]),
            families: vec![
                FamilySpec::ZnIdentity { min: 2, max: 200 },
                FamilySpec::RandomInstances {
                    count: 1000,
                    seed: 20260814,
                    max_order: 6,
                    max_domain: 6,
                },
            ],
        };
        let report = run_corpus(&cfg);
        assert_eq!(report.summary.records, 199 + 1000);
        assert_eq!(report.summary.fail, 0);
        let random: Vec<_> = report
            .records
            .iter()
            .filter(|r| r.report.instance_ref.starts_with("random#"))
            .collect();
        assert_eq!(random.len(), 1000);
        for r in random {
            assert_eq!(r.report.status, Status::Pass, "{}", r.report.instance_ref);
        }
    });
}

#[test]
fn c03_residual_graph_sweep() {
    criterion(3, 120, "nonempty residual graphs are connected with diameter <= 3", || {
        let report = module_corpus(vec![CheckId::ResidualGraphDiameter], 3);
        assert_eq!(report.summary.records, 29 + 7);
        assert_eq!(report.summary.fail, 0);
        assert!(report.summary.pass > 0);
    });
}

#[test]
fn c04_core_short_cycles() {
    criterion(4, 10, "core edges of qualifying instances sit on 3- or 4-cycles", || {
        let cfg = CorpusConfig {
            seed: 4,
            caps: Caps::default(),
            checks: Some(vec![CheckId::CoreShortCycles]),
            families: vec![FamilySpec::ZnIdentity { min: 2, max: 30 }],
        };
        let report = run_corpus(&cfg);
        assert_eq!(report.summary.fail, 0);

        let mut saw_z12_pass = false;
        for record in &report.records {
            if record.report.status != Status::Pass {
                continue;
            }
            let name = record.report.instance_ref.strip_suffix(" identity").unwrap();
            let n: usize = name.strip_prefix('Z').unwrap().parse().unwrap();
            if n == 12 {
                saw_z12_pass = true;
            }
            let g = build_classic(&SemigroupTable::zn_multiplicative(n).unwrap());
            let covers = match &record.report.witness {
                Some(Witness::CycleCover { covers }) => covers,
                other => panic!("{name}: PASS without a cycle cover: {other:?}"),
            };
            let covered: BTreeSet<(String, String)> = covers
                .iter()
                .map(|c| lex_pair(c.u.clone(), c.v.clone()))
                .collect();
            assert_eq!(covered, edge_set(&g.core()), "{name}");
            for cover in covers {
                assert!(matches!(cover.cycle.len(), 3 | 4), "{name}");
                assert!(cycle_is_real(&g, &cover.cycle), "{name}: {:?}", cover.cycle);
                assert!(cycle_contains_edge(&cover.cycle, &cover.u, &cover.v), "{name}");
                let alternate = dist_without_edge(&g, &cover.u, &cover.v)
                    .expect("covered edges lie on cycles");
                assert!(alternate <= 3, "{name}: no short cycle through {}-{}", cover.u, cover.v);
            }
        }
        assert!(saw_z12_pass);

        let z12 = build_classic(&SemigroupTable::zn_multiplicative(12).unwrap());
        let expected: BTreeSet<(String, String)> = [
            ("3", "4"),
            ("3", "8"),
            ("4", "6"),
            ("4", "9"),
            ("6", "8"),
            ("8", "9"),
        ]
        .iter()
        .map(|(u, v)| pair(u, v))
        .collect();
        assert_eq!(edge_set(&z12.core()), expected);
        let bridges: BTreeSet<(String, String)> = z12
            .bridges()
            .into_iter()
            .map(|(u, v)| lex_pair(u, v))
            .collect();
        assert_eq!(bridges, BTreeSet::from([pair("2", "6"), pair("10", "6")]));
        for (u, v) in &bridges {
            assert!(!edge_on_cycle(&z12, u, v), "bridge {u}-{v} must sit on no cycle");
        }
        for (u, v) in &expected {
            let alternate = dist_without_edge(&z12, u, v).unwrap();
            assert!(alternate <= 3);
        }
    });
}

#[test]
fn c05_path_dichotomy() {
    criterion(5, 30, "every two-step path satisfies the common-neighbor dichotomy", || {
        let mut passes = 0;
        for (i, g) in seeded_graphs(500, 30, 55).iter().enumerate() {
            let report = verify_path_dichotomy(g, &format!("random graph #{i}"));
            assert_ne!(report.status, Status::Fail, "random graph #{i}");
            if report.status == Status::Pass {
                passes += 1;
            }
        }
        assert!(passes > 100, "sample too degenerate: {passes} passes");

        let cfg = CorpusConfig {
            seed: 5,
            caps: Caps::default(),
            checks: Some(vec![CheckId::PathCommonNeighborDichotomy]),
            families: vec![
                FamilySpec::ZnIdentity { min: 2, max: 80 },
                FamilySpec::EnumeratedIdentity { order: 4 },
                FamilySpec::RandomInstances {
                    count: 120,
                    seed: 5,
                    max_order: 6,
                    max_domain: 6,
                },
            ],
        };
        let report = run_corpus(&cfg);
        assert_eq!(report.summary.fail, 0);
        assert!(report.summary.pass > 0);
    });
}

#[test]
fn c06_residual_ideal_laws() {
    criterion(6, 60, "residuation laws hold over every submodule pair", || {
        let report = module_corpus(vec![CheckId::ResidualIdealLaws], 6);
        assert_eq!(report.summary.records, 36);
        assert_eq!(report.summary.fail, 0);
        for r in &report.records {
            assert_eq!(r.report.status, Status::Pass, "{}", r.report.instance_ref);
        }
    });
}

#[test]
fn c07_annihilator_identities() {
    criterion(7, 60, "pair annihilators are singleton intersections; the diameter corollary follows", || {
        let report = module_corpus(
            vec![
                CheckId::AnnihilatorCondition,
                CheckId::AnnihilatorIntersection,
                CheckId::AnnihilatorConditionDiameter,
            ],
            7,
        );
        assert_eq!(report.summary.fail, 0);
        let mut by_instance: BTreeMap<&str, BTreeMap<CheckId, Status>> = BTreeMap::new();
        for r in &report.records {
            by_instance
                .entry(r.report.instance_ref.as_str())
                .or_default()
                .insert(r.report.check_id, r.report.status);
        }
        assert_eq!(by_instance.len(), 36);
        let mut corollary_applied = 0;
        for (instance, checks) in &by_instance {
            assert_eq!(checks[&CheckId::AnnihilatorIntersection], Status::Pass, "{instance}");
            if checks[&CheckId::AnnihilatorCondition] == Status::Pass {
                let diam = checks[&CheckId::AnnihilatorConditionDiameter];
                assert!(
                    diam == Status::Pass || diam == Status::Vacuous,
                    "{instance}: corollary hypothesis held but conclusion was {diam:?}"
                );
                if diam == Status::Pass {
                    corollary_applied += 1;
                }
            }
        }
        assert!(corollary_applied > 0);

        for owner in corpus_modules() {
            let scalars = owner.scalars().order();
            let raw_ann = |xs: &[usize]| -> BTreeSet<usize> {
                (0..scalars)
                    .filter(|&s| xs.iter().all(|&x| owner.act(s, x) == owner.zero()))
                    .collect()
            };
            for x in 0..owner.order() {
                let ax = raw_ann(&[x]);
                assert_eq!(annihilator(&owner, &[x].into()).unwrap().elements(), &ax);
                for y in x..owner.order() {
                    let meet: BTreeSet<usize> =
                        ax.intersection(&raw_ann(&[y])).copied().collect();
                    assert_eq!(
                        annihilator(&owner, &[x, y].into()).unwrap().elements(),
                        &meet,
                        "{} at ({x}, {y})",
                        owner.qualified_name()
                    );
                }
            }
        }
    });
}

#[test]
fn c08_content_machinery() {
    criterion(8, 10, "contents over Z6 are exact and the content corollary holds", || {
        let caps = Caps::default();
        let z6 = FiniteModule::regular(&FiniteSemiring::zn(6).unwrap());
        let contents: Vec<String> = content_map(&z6, &caps)
            .unwrap()
            .iter()
            .map(|ideal| ideal.render())
            .collect();
        assert_eq!(
            contents,
            [
                "{0}",
                "{0,1,2,3,4,5}",
                "{0,2,4}",
                "{0,3}",
                "{0,2,4}",
                "{0,1,2,3,4,5}",
            ]
        );
        assert_eq!(is_content_semimodule(&z6, &caps).unwrap().status, Status::Pass);
        assert_eq!(content_onto_all_ideals(&z6, &caps).unwrap().status, Status::Pass);

        let report = module_corpus(vec![CheckId::ContentDiameter], 8);
        assert_eq!(report.summary.fail, 0);
        let applied = report
            .records
            .iter()
            .filter(|r| r.report.status == Status::Pass)
            .count();
        assert!(applied > 0);
    });
}

#[test]
fn c09_semilattice_vacuity() {
    criterion(9, 10, "bounded semilattices never supply a nilpotent maximum", || {
        let cfg = CorpusConfig {
            seed: 9,
            caps: Caps::default(),
            checks: Some(vec![CheckId::SemilatticeDiameterOne]),
            families: vec![
                FamilySpec::SubsetSemilattices { max_exponent: 4 },
                FamilySpec::ChainSemilattices { max_order: 16 },
            ],
        };
        let report = run_corpus(&cfg);
        assert_eq!(report.summary.records, 5 + 16);
        for r in &report.records {
            assert_eq!(
                r.report.status,
                Status::NotApplicable,
                "{}",
                r.report.instance_ref
            );
            assert_eq!(
                r.report.reason,
                Some(ReasonCode::NoNilpotent),
                "{}",
                r.report.instance_ref
            );
        }

        let caps = Caps::default();
        for k in 0..=4 {
            let s = BoundedSemilattice::subset_meet(k, &caps).unwrap();
            assert!(s.base().order() <= 16);
            assert_eq!(nilpotent_count(s.base()), 0, "subset_meet({k})");
        }
        for n in 1..=16 {
            let s = BoundedSemilattice::chain(n).unwrap();
            assert_eq!(nilpotent_count(s.base()), 0, "chain({n})");
        }
    });
}

#[test]
fn c10_realizability() {
    criterion(10, 60, "P3 and K2 are realized and reverified; K1 is proved impossible", || {
        let p3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let k2 = graph(&["a", "b"], &[("a", "b")]);
        let k1 = graph(&["a"], &[]);
        let spec = SearchSpec::new(6, 5, 10);

        let w = expect_witness(search_realization(&p3, &spec).unwrap());
        assert_eq!(w.semigroup_name, "Z6");
        let mut values: Vec<usize> = w.assignments.values().copied().collect();
        values.sort_unstable();
        assert_eq!(values, [2, 2, 3]);
        reverify(&w, &p3);

        let w = expect_witness(search_realization(&k2, &spec).unwrap());
        assert_eq!(w.semigroup_name, "Z4");
        assert_eq!(w.assignments.values().copied().collect::<Vec<_>>(), [2, 2]);
        reverify(&w, &k2);

        match search_realization(&k1, &spec).unwrap() {
            RealizeOutcome::Impossible(ImpossibleGrounds::IsolatedVertex { vertex }) => {
                assert_eq!(vertex, "a");
            }
            other => panic!("expected the isolated-vertex filter, got {other:?}"),
        }

        let filtered = SearchSpec::new(3, 3, 10);
        let mut exhaustive = SearchSpec::new(3, 3, 10);
        exhaustive.structural_filters = false;
        for target in [&k1, &graph(&["a", "b", "c"], &[("a", "b")])] {
            assert!(matches!(
                search_realization(target, &filtered).unwrap(),
                RealizeOutcome::Impossible(ImpossibleGrounds::IsolatedVertex { .. })
            ));
            assert!(matches!(
                search_realization(target, &exhaustive).unwrap(),
                RealizeOutcome::Impossible(ImpossibleGrounds::SpaceExhausted { .. })
            ));
        }
        for target in [&k2, &p3] {
            let fast = expect_witness(search_realization(target, &filtered).unwrap());
            let slow = expect_witness(search_realization(target, &exhaustive).unwrap());
            reverify(&fast, target);
            reverify(&slow, target);
            assert_eq!(fast.semigroup_name, slow.semigroup_name);
            assert_eq!(fast.assignments, slow.assignments);
        }
    });
}

#[test]
fn c11_graph_algorithm_oracles() {
    criterion(11, 60, "BFS diameter and bridge-based core agree with brute force", || {
        for (i, g) in seeded_graphs(500, 50, 1111).iter().enumerate() {
            let got = match g.diameter() {
                Diameter::Undefined => None,
                Diameter::Infinite => Some(None),
                Diameter::Finite(d) => Some(Some(d)),
            };
            assert_eq!(got, oracle_diameter(g), "graph #{i}");
        }
        for (i, g) in seeded_graphs(500, 12, 2222).iter().enumerate() {
            let core = g.core();
            let expected: BTreeSet<(String, String)> = edge_set(g)
                .into_iter()
                .filter(|(u, v)| edge_on_cycle(g, u, v))
                .collect();
            assert_eq!(edge_set(&core), expected, "graph #{i}");
            let endpoints: BTreeSet<String> = expected
                .iter()
                .flat_map(|(u, v)| [u.clone(), v.clone()])
                .collect();
            assert_eq!(
                core.labels().iter().cloned().collect::<BTreeSet<_>>(),
                endpoints,
                "graph #{i}"
            );
        }
    });
}

#[test]
fn c12_extremal_consistency() {
    criterion(12, 300, "no closure-passing instance is disconnected or stretches past diameter 3", || {
        let spec = SearchSpec::new(4, 4, 12);
        let disconnected = search_extremal(ExtremalPredicate::Disconnected, &spec).unwrap();
        assert!(disconnected.complete);
        assert!(!disconnected.hits.is_empty());
        for hit in &disconnected.hits {
            assert!(
                !hit.closure_pass,
                "{}: closure-passing disconnected instance",
                hit.semigroup_name
            );
            assert!(!hit.connected);
        }

        let distant =
            search_extremal(ExtremalPredicate::DiameterAtLeast { bound: 4 }, &spec).unwrap();
        assert!(distant.complete);
        assert!(distant.hits.is_empty(), "{:?}", distant.hits);
    });
}
