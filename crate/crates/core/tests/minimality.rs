mod common;

use std::collections::BTreeSet;

use attractors::minimality::{build_grid, necessity_flags, BoxColors, MinimalityVerdict};
use attractors::verify::SubstringCatalog;
use attractors::{is_k_attractor, is_minimal_k_attractor, AttractorSet, EquivClasses, Error, SuffixIndex, Universe};
use common::{all_texts, instance, occurrences, random_subset, random_text, rng, subset};
use proptest::prelude::*;
use rand::Rng;

/// Members of `gamma` lying inside some occurrence of the edge string.
fn markers(index: &SuffixIndex, universe: &Universe, edge: usize, gamma: &AttractorSet) -> BTreeSet<u32> {
    let e = universe.edge(edge);
    let t = index.text();
    let start = index.sa()[e.l] as usize;
    let mut out = BTreeSet::new();
    for s in occurrences(t, &t[start..start + e.lambda]) {
        for p in s..s + e.lambda {
            if let Some(c) = gamma.rank_of(p) {
                out.insert(c as u32);
            }
        }
    }
    out
}

fn naive_flags(index: &SuffixIndex, universe: &Universe, gamma: &AttractorSet) -> Vec<bool> {
    let mut flags = vec![false; gamma.len()];
    for id in 0..universe.len() {
        let m = markers(index, universe, id, gamma);
        if m.len() == 1 {
            flags[*m.iter().next().unwrap() as usize] = true;
        }
    }
    flags
}

fn naive_minimal(index: &SuffixIndex, gamma: &AttractorSet, k: usize) -> bool {
    is_k_attractor(index, gamma, k).unwrap().is_valid()
        && gamma.offsets().iter().all(|&j| !is_k_attractor(index, &gamma.without(j), k).unwrap().is_valid())
}

#[test]
fn necessity_flags_match_definition() {
    let mut rng = rng(21);
    for raw in all_texts(10, 2).into_iter().step_by(3).chain(all_texts(6, 3).into_iter().step_by(2)) {
        let inst = instance(&raw);
        let n = raw.len();
        for k in 1..=n {
            let universe = inst.index.universe(k).unwrap();
            for _ in 0..3 {
                let gamma = random_subset(&mut rng, n);
                if gamma.is_empty() {
                    assert!(matches!(necessity_flags(&inst.index, &universe, &gamma), Err(Error::EmptyAttractor)));
                    continue;
                }
                let flags = necessity_flags(&inst.index, &universe, &gamma).unwrap();
                assert_eq!(flags, naive_flags(&inst.index, &universe, &gamma), "{raw:?} k={k} {:?}", gamma.offsets());
            }
        }
    }
}

#[test]
fn second_successor_points_are_needed_on_periodic_text() {
    let raw = b"ABABABABABAB";
    let inst = instance(raw);
    let n = raw.len();
    let mut first_only_wrong = 0;
    for k in 1..=n {
        let universe = inst.index.universe(k).unwrap();
        for mask in 1..1u64 << n {
            let gamma = subset(mask, n);
            let grid = build_grid(&inst.index, &gamma, k).unwrap();
            let mut nearest = vec![usize::MAX; n];
            for p in grid.points() {
                nearest[p.x] = nearest[p.x].min(p.y);
            }
            for (id, e) in universe.edges().iter().enumerate() {
                let want = markers(&inst.index, &universe, id, &gamma);
                let got = match grid.edge_colors(e.l, e.r, e.lambda) {
                    BoxColors::None => BTreeSet::new(),
                    BoxColors::One(c) => BTreeSet::from([c]),
                    BoxColors::Two(a, b) => BTreeSet::from([a, b]),
                };
                assert_eq!(got.len(), want.len().min(2));
                assert!(got.is_subset(&want));
                let first_only: BTreeSet<u32> = grid
                    .points()
                    .iter()
                    .filter(|p| p.y == nearest[p.x] && (e.l..=e.r).contains(&p.x) && p.y < e.lambda)
                    .map(|p| p.color)
                    .collect();
                if first_only.len() == 1 && want.len() >= 2 {
                    first_only_wrong += 1;
                }
            }
        }
    }
    assert!(first_only_wrong > 0, "first successors alone never misclassified an edge");
}

/// Every minimal k-attractor of a text, by exhaustive search over subsets.
fn all_minimal(catalog: &SubstringCatalog, n: usize) -> Vec<u64> {
    let masks = catalog.cover_masks();
    let covers = |set: u64| masks.iter().all(|&m| m & set != 0);
    (1..1u64 << n)
        .filter(|&s| covers(s) && (0..n).filter(|&b| s >> b & 1 == 1).all(|b| !covers(s & !(1 << b))))
        .collect()
}

#[test]
fn enumerated_minimal_attractors_are_incomparable_and_class_sparse() {
    let mut total = 0usize;
    for raw in all_texts(10, 2) {
        let inst = instance(&raw);
        let n = raw.len();
        for k in 1..=n {
            let catalog = SubstringCatalog::up_to(inst.text.symbols(), k);
            let minimal = all_minimal(&catalog, n);
            assert!(!minimal.is_empty());
            for (a, &x) in minimal.iter().enumerate() {
                for &y in &minimal[a + 1..] {
                    assert!(x & y != x && x & y != y, "{raw:?} k={k}: {x:b} and {y:b} are nested");
                }
            }
            let classes = EquivClasses::new(&inst.text, k).unwrap();
            for &s in &minimal {
                let gamma = subset(s, n);
                let mut seen = BTreeSet::new();
                assert!(gamma.offsets().iter().all(|&o| seen.insert(classes.class_of(o))));
            }
            if n <= 7 {
                for &s in &minimal {
                    assert!(is_minimal_k_attractor(&inst.index, &subset(s, n), k).unwrap().is_minimal());
                }
            }
            total += minimal.len();
        }
    }
    assert!(total > 10_000);
}

#[test]
fn verdict_lists_every_unnecessary_member() {
    let mut rng = rng(22);
    for _ in 0..1500 {
        let n = rng.gen_range(1..=18);
        let raw = random_text(&mut rng, n, 3);
        let inst = instance(&raw);
        let k = rng.gen_range(1..=n);
        let gamma = random_subset(&mut rng, n);
        match is_minimal_k_attractor(&inst.index, &gamma, k).unwrap() {
            MinimalityVerdict::NotAttractor(w) => {
                assert!(!is_k_attractor(&inst.index, &gamma, k).unwrap().is_valid());
                assert!(w.len <= k);
            }
            MinimalityVerdict::Minimal => assert!(naive_minimal(&inst.index, &gamma, k)),
            MinimalityVerdict::NotMinimal { removable } => {
                assert!(!removable.is_empty());
                for &j in gamma.offsets() {
                    let still = is_k_attractor(&inst.index, &gamma.without(j), k).unwrap().is_valid();
                    assert_eq!(still, removable.contains_offset(j), "{raw:?} k={k} {:?} j={j}", gamma.offsets());
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn minimality_characterization(raw in prop::collection::vec(0u8..3, 1..30), k_frac in 0.0f64..1.0, seed in any::<u64>()) {
        let inst = instance(&raw.iter().map(|b| b'a' + b).collect::<Vec<_>>());
        let n = raw.len();
        let k = 1 + ((n - 1) as f64 * k_frac) as usize;
        let mut rng = rng(seed);
        // Shrink the full set at random until it is tight, keeping it valid.
        let mut gamma = AttractorSet::full(n);
        for _ in 0..n {
            let j = rng.gen_range(0..n);
            let smaller = gamma.without(j);
            if rng.gen_bool(0.7) && is_k_attractor(&inst.index, &smaller, k).unwrap().is_valid() {
                gamma = smaller;
            }
        }
        let verdict = is_minimal_k_attractor(&inst.index, &gamma, k).unwrap();
        prop_assert_eq!(verdict.is_minimal(), naive_minimal(&inst.index, &gamma, k));
    }
}
