//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use attractors::attractor::{AttractorSet, EquivClasses};
use attractors::combinatorics::harmonic;
use attractors::minimality::{is_minimal_k_attractor_in, necessity_flags, MinimalityVerdict};
use attractors::optimizer::{build_marker_graph, naive_marks, DEFAULT_BUDGET};
use attractors::sharp::{brute_force_min_k_sharp, build_gadget_attractor, gen_sharp_gadget, min_2_sharp_attractor, SetCoverInstance};
use attractors::text_index::{RemappedText, SuffixIndex};
use attractors::verify::{brute_force_min_k_attractor, is_k_attractor, is_k_attractor_in, is_k_sharp_attractor, Marking, SubstringCatalog};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
/// Name, time limit, check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("BBBABA fixtures", Duration::from_secs(1), bbbaba),
        ("verifier equivalence on binary texts", Duration::from_secs(300), verifier_equivalence),
        ("per-edge marking vs definition scan", Duration::from_secs(30), marking_bidirectional),
        ("minimality and necessity flags", Duration::from_secs(300), minimality_equivalence),
        ("exact minimum vs exhaustive search", Duration::from_secs(600), exact_minimum),
        ("approximation bounds", Duration::from_secs(600), approximation_bounds),
        ("marker graph vs definition", Duration::from_secs(120), marker_graph),
        ("2-sharp exactness", Duration::from_secs(300), two_sharp),
        ("gadget forward direction", Duration::from_secs(120), gadget_forward),
        ("verification scaling", Duration::from_secs(120), scaling),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded the {:.0?} limit", limit)),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "[{}] {:>2}. {name}: {detail} ({:.2?})",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            took
        );
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}

/// Every binary text with length in `lengths`, as bytes over {a, b}.
fn binary_texts(lengths: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = Vec<u8>> {
    lengths.flat_map(|n| {
        (0u32..1 << n).map(move |bits| (0..n).map(|i| if bits >> i & 1 == 1 { b'b' } else { b'a' }).collect())
    })
}

struct Instance {
    text: RemappedText,
    index: SuffixIndex,
}

fn instance(raw: &[u8]) -> Instance {
    let text = RemappedText::from_bytes(raw).unwrap();
    let index = SuffixIndex::new(&text);
    Instance { text, index }
}

fn from_mask(mask: u64, n: usize) -> AttractorSet {
    AttractorSet::from_offsets((0..n).filter(|&i| mask >> i & 1 == 1).collect(), n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bbbaba() -> Outcome {
    let inst = instance(b"BBBABA");
    let k = 6;
    let universe = inst.index.universe(k).map_err(|e| e.to_string())?;
    for positions in [&[2, 5, 6][..], &[3, 4]] {
        let gamma = AttractorSet::from_positions(positions, 6).unwrap();
        let verdict = is_minimal_k_attractor_in(&inst.index, &universe, &gamma).unwrap();
        ensure(is_k_attractor_in(&inst.index, &universe, &gamma).unwrap().is_valid(), || {
            format!("{positions:?} rejected")
        })?;
        ensure(verdict.is_minimal(), || format!("{positions:?} reported {verdict:?}"))?;
    }
    let dir = std::env::temp_dir().join(format!("attractors-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file: PathBuf = dir.join("bbbaba.txt");
    std::fs::write(&file, "BBBABA\n").map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_attractors"))
        .args(["minimum", file.to_str().unwrap(), "6"])
        .env_remove("ATTRACTOR_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    let _ = std::fs::remove_dir_all(&dir);
    let printed = String::from_utf8_lossy(&out.stdout).lines().filter(|l| !l.starts_with('#')).count();
    ensure(out.status.success() && printed == 2, || {
        format!("cmd minimum exited {:?} with {printed} positions", out.status.code())
    })?;
    Ok("{2,5,6} and {3,4} valid and minimal; minimum prints 2 positions".into())
}

fn verifier_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2);
    let (mut texts, mut checks) = (0u64, 0u64);
    for raw in binary_texts(1..=12) {
        texts += 1;
        let inst = instance(&raw);
        let n = raw.len();
        for k in 1..=n {
            let universe = inst.index.universe(k).unwrap();
            let catalog = SubstringCatalog::up_to(inst.text.symbols(), k);
            let mut masks = vec![0u64];
            for a in 0..n {
                masks.push(1 << a);
                for b in a + 1..n {
                    masks.push(1 << a | 1 << b);
                }
            }
            masks.extend((0..50).map(|_| rng.gen::<u64>() & ((1 << n) - 1)));
            for mask in masks {
                let gamma = from_mask(mask, n);
                let fast = is_k_attractor_in(&inst.index, &universe, &gamma).unwrap().is_valid();
                let slow = catalog.is_covered_by(&gamma);
                checks += 1;
                ensure(fast == slow, || {
                    format!("{} k={k} gamma={:?}: fast {fast}, definition {slow}", String::from_utf8_lossy(&raw), gamma.offsets())
                })?;
            }
        }
    }
    Ok(format!("{texts} texts, {checks} (text, k, set) checks, 0 disagreements"))
}

fn marking_bidirectional() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let mut edges = 0usize;
    for _ in 0..200 {
        let n = rng.gen_range(1..=200);
        let sigma = rng.gen_range(1..=4u8);
        let raw: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect();
        let inst = instance(&raw);
        let k = rng.gen_range(1..=n);
        let density = rng.gen_range(0.0..0.5);
        let gamma = AttractorSet::from_offsets((0..n).filter(|_| rng.gen_bool(density)).collect(), n);
        // prefix[i] = members below i.
        let mut prefix = vec![0usize; n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i] + usize::from(gamma.contains_offset(i));
        }
        let universe = inst.index.universe(k).unwrap();
        let marking = Marking::new(&inst.index, &gamma, k).unwrap();
        let text = inst.text.symbols();
        for e in universe.edges() {
            let start = inst.index.sa()[e.l] as usize;
            let s = &text[start..start + e.lambda];
            let scan = (0..=n - e.lambda).any(|i| &text[i..i + e.lambda] == s && prefix[i + e.lambda] > prefix[i]);
            let via_d = marking.marks(e.l, e.r, e.lambda);
            edges += 1;
            ensure(scan == via_d, || format!("edge {} of a text of length {n}: D says {via_d}, scan {scan}", e.id))?;
        }
    }
    Ok(format!("200 triples, {edges} edges, 0 disagreements"))
}

/// Random valid set: a random sample topped up with random positions.
fn random_valid(rng: &mut StdRng, index: &SuffixIndex, universe: &attractors::Universe, n: usize) -> AttractorSet {
    let density = rng.gen_range(0.0..0.6);
    let mut gamma = AttractorSet::from_offsets((0..n).filter(|_| rng.gen_bool(density)).collect(), n);
    while !is_k_attractor_in(index, universe, &gamma).unwrap().is_valid() {
        let missing: Vec<usize> = (0..n).filter(|&o| !gamma.contains_offset(o)).collect();
        gamma = gamma.with(missing[rng.gen_range(0..missing.len())]);
    }
    gamma
}

fn minimality_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let mut cases = 0usize;
    for raw in binary_texts(1..=12) {
        let inst = instance(&raw);
        let n = raw.len();
        for _ in 0..30 {
            let k = rng.gen_range(1..=n);
            let universe = inst.index.universe(k).unwrap();
            let catalog = SubstringCatalog::up_to(inst.text.symbols(), k);
            let gamma = random_valid(&mut rng, &inst.index, &universe, n);
            let verdict = is_minimal_k_attractor_in(&inst.index, &universe, &gamma).unwrap();
            let flags = necessity_flags(&inst.index, &universe, &gamma).unwrap();
            let removable_naive: Vec<usize> =
                gamma.offsets().iter().copied().filter(|&g| catalog.is_covered_by(&gamma.without(g))).collect();
            let naive_minimal = removable_naive.is_empty();
            let label = || format!("{} k={k} gamma={:?}", String::from_utf8_lossy(&raw), gamma.offsets());
            ensure(verdict.is_minimal() == naive_minimal, || format!("{}: {verdict:?}", label()))?;
            if let MinimalityVerdict::NotMinimal { removable } = &verdict {
                ensure(removable.offsets() == removable_naive.as_slice(), || format!("{}: removable {:?}", label(), removable.offsets()))?;
            }
            for (c, &g) in gamma.offsets().iter().enumerate() {
                let necessary = (0..universe.len()).any(|e| {
                    naive_marks(&inst.index, &universe, e, g)
                        && gamma.offsets().iter().all(|&o| o == g || !naive_marks(&inst.index, &universe, e, o))
                });
                ensure(flags[c] == necessary, || format!("{}: flag of offset {g} is {}", label(), flags[c]))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (text, k, set) cases, verdicts and flags agree"))
}

fn corpus_ks(n: usize) -> Vec<usize> {
    let mut ks: Vec<usize> = [1, 2, 3, n].into_iter().filter(|&k| k <= n).collect();
    ks.dedup();
    ks
}

fn exact_minimum() -> Outcome {
    let abra = instance(b"abracadabra");
    let (oracle, _) = brute_force_min_k_attractor(abra.text.symbols(), 3);
    let classes = EquivClasses::new(&abra.text, 3).unwrap();
    let got = build_marker_graph(&abra.index, &classes, 3).unwrap().find_minimum(None, DEFAULT_BUDGET).unwrap();
    ensure(got.len() == oracle, || format!("abracadabra k=3: {} vs oracle {oracle}", got.len()))?;
    let mut cases = 0;
    for raw in binary_texts(1..=12) {
        let inst = instance(&raw);
        for k in corpus_ks(raw.len()) {
            let (opt, _) = brute_force_min_k_attractor(inst.text.symbols(), k);
            let classes = EquivClasses::new(&inst.text, k).unwrap();
            let graph = build_marker_graph(&inst.index, &classes, k).unwrap();
            let best = graph.find_minimum(None, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(best.len() == opt, || format!("{} k={k}: {} vs {opt}", String::from_utf8_lossy(&raw), best.len()))?;
            cases += 1;
        }
    }
    Ok(format!("abracadabra k=3 size {oracle}; {cases} binary (text, k) cases equal"))
}

fn approximation_bounds() -> Outcome {
    let mut cases = 0;
    let (mut worst_minimal, mut worst_greedy) = (0.0f64, 0.0f64);
    for raw in binary_texts(1..=12) {
        let inst = instance(&raw);
        for k in corpus_ks(raw.len()) {
            let (opt, _) = brute_force_min_k_attractor(inst.text.symbols(), k);
            let classes = EquivClasses::new(&inst.text, k).unwrap();
            let graph = build_marker_graph(&inst.index, &classes, k).unwrap();
            let universe = graph.universe();
            let label = || format!("{} k={k}", String::from_utf8_lossy(&raw));
            let minimal = graph.find_minimal();
            let greedy = graph.greedy();
            for (name, set) in [("minimal", &minimal), ("greedy", &greedy)] {
                ensure(is_k_attractor_in(&inst.index, universe, set).unwrap().is_valid(), || {
                    format!("{}: {name} output invalid", label())
                })?;
            }
            ensure(minimal.len() <= k * opt, || format!("{}: minimal {} > k * {opt}", label(), minimal.len()))?;
            let h = harmonic(k * (k + 1) / 2);
            ensure(greedy.len() as f64 <= h * opt as f64 + 1e-9, || {
                format!("{}: greedy {} > H * {opt}", label(), greedy.len())
            })?;
            worst_minimal = worst_minimal.max(minimal.len() as f64 / opt as f64);
            worst_greedy = worst_greedy.max(greedy.len() as f64 / opt as f64);
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} cases, 0 violations; worst ratios minimal {worst_minimal:.2}, greedy {worst_greedy:.2}"
    ))
}

fn marker_graph() -> Outcome {
    let mut pairs = 0usize;
    for raw in binary_texts(1..=10) {
        let inst = instance(&raw);
        for k in 1..=raw.len() {
            let classes = EquivClasses::new(&inst.text, k).unwrap();
            let graph = build_marker_graph(&inst.index, &classes, k).unwrap();
            let universe = graph.universe();
            let mut present = 0;
            for (c, &j) in graph.candidates().iter().enumerate() {
                for e in 0..universe.len() {
                    let want = naive_marks(&inst.index, universe, e, j);
                    ensure(graph.contains(c, e) == want, || {
                        format!("{} k={k}: (j={j}, edge {e}) graph {} definition {want}", String::from_utf8_lossy(&raw), !want)
                    })?;
                    present += usize::from(want);
                    pairs += 1;
                }
            }
            ensure(present == graph.edge_count(), || "edge count mismatch".into())?;
        }
    }
    Ok(format!("{pairs} (candidate, edge) pairs agree"))
}

/// Texts in first-occurrence normal form: each symbol is at most one more
/// than the largest before it. Every text over `sigma` letters is a
/// renaming of exactly one of these, and renaming preserves attractors.
fn normal_form_texts(n: usize, sigma: u8, out: &mut Vec<Vec<u8>>) {
    fn go(cur: &mut Vec<u8>, n: usize, sigma: u8, max: u8, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=(max + 1).min(sigma - 1) {
            cur.push(b'a' + c);
            go(cur, n, sigma, max.max(c), out);
            cur.pop();
        }
    }
    let mut cur = vec![b'a'];
    go(&mut cur, n, sigma, 0, out);
}

fn two_sharp() -> Outcome {
    let mut texts = 0usize;
    let mut batch = Vec::new();
    for n in 2..=12 {
        batch.clear();
        normal_form_texts(n, 4, &mut batch);
        for raw in &batch {
            let inst = instance(raw);
            let got = min_2_sharp_attractor(inst.text.symbols()).unwrap();
            let valid = is_k_sharp_attractor(&inst.index, &got, 2).unwrap().is_valid();
            let (opt, _) = brute_force_min_k_sharp(inst.text.symbols(), 2, u64::MAX).unwrap();
            ensure(valid && got.len() == opt, || {
                format!("{}: size {} (valid {valid}) vs brute force {opt}", String::from_utf8_lossy(raw), got.len())
            })?;
            texts += 1;
        }
    }
    Ok(format!("{texts} texts (all of length 2..=12 over <= 4 letters, up to renaming)"))
}

fn set_cover_instances() -> Vec<SetCoverInstance> {
    let mut out = Vec::new();
    for universe in 1..=4usize {
        let subsets: Vec<Vec<usize>> = (1u32..1 << universe)
            .filter(|s| s.count_ones() <= 3)
            .map(|s| (1..=universe).filter(|&u| s >> (u - 1) & 1 == 1).collect())
            .collect();
        let s = subsets.len();
        for m in 1..=3usize {
            // Multisets of m sets (order does not change the instance).
            let mut idx = vec![0usize; m];
            loop {
                let sets = idx.iter().map(|&i| subsets[i].clone()).collect();
                if let Ok(inst) = SetCoverInstance::new(universe, 3, sets) {
                    out.push(inst);
                }
                let mut p = m;
                while p > 0 && idx[p - 1] == s - 1 {
                    p -= 1;
                }
                if p == 0 {
                    break;
                }
                idx[p - 1] += 1;
                let v = idx[p - 1];
                for slot in &mut idx[p..] {
                    *slot = v;
                }
            }
        }
    }
    out
}

fn gadget_forward() -> Outcome {
    let (mut covers, mut non_covers, mut with_gap) = (0usize, 0usize, 0usize);
    let instances = set_cover_instances();
    for inst in &instances {
        let gadget = gen_sharp_gadget(inst, 3).map_err(|e| e.to_string())?;
        let text = gadget.text();
        let index = SuffixIndex::new(&text);
        let m = inst.sets.len();
        let mut optimum = usize::MAX;
        let mut results = Vec::new();
        for mask in 0u32..1 << m {
            let chosen: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let gamma = build_gadget_attractor(&gadget, &chosen).unwrap();
            let valid = is_k_sharp_attractor(&index, &gamma, 3).unwrap().is_valid();
            let is_cover = inst.is_cover(&chosen);
            if is_cover {
                optimum = optimum.min(chosen.len());
                ensure(valid, || format!("{inst:?}: cover {chosen:?} gives an invalid set"))?;
                ensure(gamma.len() == gadget.expected_size(chosen.len()), || {
                    format!("{inst:?}: cover {chosen:?} gives size {}", gamma.len())
                })?;
                covers += 1;
            } else {
                non_covers += 1;
            }
            results.push((chosen.len(), valid));
        }
        // No member of the family below the optimum verifies.
        ensure(results.iter().all(|&(p, valid)| p >= optimum || !valid), || {
            format!("{inst:?}: a set with p < p* = {optimum} verified")
        })?;
        with_gap += usize::from(optimum >= 2);
    }
    ensure(with_gap > 0, || "no instance with p* >= 2".into())?;
    Ok(format!(
        "{} instances, {covers} covers valid with exact size; {non_covers} non-covers, none below p* valid ({with_gap} instances with p* >= 2)",
        instances.len()
    ))
}

fn time_verification(n: usize, seed: u64) -> Result<Duration, String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let raw: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..4)).collect();
    let k = 16;
    let gamma = AttractorSet::from_offsets((0..n).step_by(2).collect(), n);
    let mut best = Duration::MAX;
    for _ in 0..3 {
        let start = Instant::now();
        let text = RemappedText::from_bytes(&raw).unwrap();
        let index = SuffixIndex::new(&text);
        let valid = is_k_attractor(&index, &gamma, k).unwrap().is_valid();
        best = best.min(start.elapsed());
        ensure(valid, || format!("even positions rejected at n = {n}"))?;
    }
    Ok(best)
}

fn scaling() -> Outcome {
    let small = time_verification(100_000, 10)?;
    let large = time_verification(1_000_000, 11)?;
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    let detail = format!("1e5: {small:.2?}, 1e6: {large:.2?}, ratio {ratio:.1}");
    ensure(ratio < 15.0 && large < Duration::from_secs(10), || detail.clone())?;
    Ok(detail)
}
