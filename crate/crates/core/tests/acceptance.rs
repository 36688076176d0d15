//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test --release --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use aritylab::arity::{
    check_arit_hypotheses, is_n_ary_relation, level_partition, relation_arity, theory_arity, theory_arity_in,
    CONCLUSION_NOTE,
};
use aritylab::automorph::{automorphisms, is_automorphism};
use aritylab::cli::{execute, Cli};
use aritylab::expansions::{expand_finite_range, expand_singletons, IdentityRows};
use aritylab::oracle::{brute_automorphisms, brute_n_ary_atoms, brute_relation_arity, OracleCaps};
use aritylab::orbits::{tuple_rank, tuple_unrank, TupleSet};
use aritylab::structures::{parse_structure, serialize_structure, Family, FiniteStructure};
use clap::Parser;
use common::*;

type Outcome = Result<String, String>;
type Predicate = Box<dyn Fn(&[usize]) -> bool>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_arity(s: &FiniteStructure) -> Result<usize, String> {
    let n = s.size();
    let r = theory_arity(s, n, n, &limits()).map_err(|e| format!("{}: {e}", s.name()))?;
    ensure(r.exact, || format!("{}: not exact", s.name()))?;
    r.theory_arity
        .value()
        .ok_or_else(|| format!("{}: exceeds max_n", s.name()))
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let corpus = corpus_upto(6);
    ensure(corpus.len() >= 12, || {
        format!("only {} corpus structures", corpus.len())
    })?;
    let mut summary = Vec::new();
    for s in &corpus {
        let a = exact_arity(s)?;
        ensure(a <= s.size(), || format!("{}: arity {a} > {}", s.name(), s.size()))?;
        summary.push(format!("{}={a}", s.name()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} structures in {:.2}s: {}",
        corpus.len(),
        elapsed.as_secs_f64(),
        summary.join(" ")
    ))
}

fn ac2() -> Outcome {
    let corpus = corpus_upto(5);
    for s in &corpus {
        let e = expand_singletons(s).map_err(|e| e.to_string())?;
        let a = exact_arity(&e.combined)?;
        ensure(a == 1, || format!("{}: expanded arity {a}", s.name()))?;
    }
    Ok(format!("{} structures unary after naming singletons", corpus.len()))
}

/// The three disjuncts for `x·y = z` in a flat monoid with identity `e`.
fn disjuncts(e: usize) -> [Predicate; 3] {
    [
        Box::new(move |t| t[0] == e && t[1] == t[2]),
        Box::new(move |t| t[1] == e && t[0] == t[2]),
        Box::new(move |t| t[0] != e && t[1] != e && t[2] == e),
    ]
}

fn ac3() -> Outcome {
    for k in 2..=5 {
        let s = family(Family::FlatMonoid(k));
        let a = exact_arity(&s)?;
        ensure(a == 1, || format!("flat_monoid({k}): arity {a}"))?;
        let graph = s.graph_of("mul").map_err(|e| e.to_string())?;
        let mut t = table(&s);
        let verdict = is_n_ary_relation(&graph, 1, &mut t).map_err(|e| e.to_string())?;
        ensure(verdict.holds, || format!("flat_monoid({k}): graph not unary"))?;

        let size = s.size();
        let sig = level_partition(&t, 1, 3).map_err(|e| e.to_string())?;
        let ds = disjuncts(0);
        let mut classes_in_graph = std::collections::BTreeSet::new();
        for rank in 0..size.pow(3) {
            let tuple = tuple_unrank(rank, 3, size).unwrap();
            let in_graph = graph.contains_rank(rank);
            let in_disjunction = ds.iter().any(|d| d(&tuple));
            ensure(in_graph == in_disjunction, || {
                format!("flat_monoid({k}): {tuple:?} disagrees")
            })?;
            if in_graph {
                classes_in_graph.insert(sig.class_of[rank]);
            }
        }
        // Each disjunct is a union of signature classes.
        for (i, d) in ds.iter().enumerate() {
            let mut verdict = std::collections::BTreeMap::new();
            for rank in 0..size.pow(3) {
                let tuple = tuple_unrank(rank, 3, size).unwrap();
                let inside = d(&tuple);
                let seen = *verdict.entry(sig.class_of[rank]).or_insert(inside);
                ensure(seen == inside, || {
                    format!("flat_monoid({k}): disjunct {} splits a class", i + 1)
                })?;
            }
        }
        // With identity 0: (e,e,e), (e,u,u)=, (u,e,u)=, (u,u,e) split by x = y.
        ensure(classes_in_graph.len() == 5, || {
            format!(
                "flat_monoid({k}): {} signature classes in graph",
                classes_in_graph.len()
            )
        })?;
    }
    Ok("flat_monoid(2..5) unary; graph = union of the three disjuncts, 5 signature classes".into())
}

fn ac4() -> Outcome {
    let mut detail = Vec::new();
    for k in 3..=5 {
        let s = family(Family::FiniteRangeMonoid { k, r: 2 });
        let e = expand_finite_range(&s, IdentityRows::Exclude).map_err(|e| e.to_string())?;
        let a = exact_arity(&e.combined)?;
        ensure(a <= 2, || format!("finite_range({k},2): expanded arity {a}"))?;
        let size = s.size();
        let mut seen = TupleSet::empty(size, 2).unwrap();
        for i in 1..=2 {
            let d = &e.predicate(&format!("D_{i}")).ok_or("missing D predicate")?.tuples;
            ensure(seen.is_disjoint(d), || format!("finite_range({k},2): D_{i} overlaps"))?;
            seen.union_with(d);
        }
        let target = TupleSet::from_predicate(size, 2, |t| t[0] != 0 && t[1] != 0).unwrap();
        ensure(seen == target, || {
            format!("finite_range({k},2): D union is not (M minus e)^2")
        })?;
        detail.push(format!("k={k}: {a}"));
    }
    Ok(format!("expanded arities {}; D partition exact", detail.join(", ")))
}

fn ac5() -> Outcome {
    for q in [4, 5] {
        let s = family(Family::Cyclic(q));
        for n in [2, 3] {
            let rel = s.power_graph_of("mul", n).map_err(|e| e.to_string())?;
            let h = check_arit_hypotheses(&rel, 1, 0, &limits()).map_err(|e| e.to_string())?;
            ensure(h.bounded_solutions.holds, || {
                format!("Z_{q} n={n}: solutions not bounded")
            })?;
            ensure(h.cofinite_projections.holds, || {
                format!("Z_{q} n={n}: projections not full")
            })?;
            ensure(
                h.conclusion == CONCLUSION_NOTE && h.conclusion.contains("not desk-testable"),
                || "conclusion not marked".into(),
            )?;
        }
    }
    Ok("Z_4, Z_5 with n = 2, 3: unique solutions and full projections at F = 1, C = 0".into())
}

fn small_structures(seed: u64, count: usize) -> Vec<FiniteStructure> {
    let mut out = corpus_upto(4);
    out.push(family(Family::FlatMonoid(1)));
    let mut r = rng(seed);
    for i in 0..count {
        out.push(random_structure(&mut r, 1 + i % 4));
    }
    out
}

fn ac6() -> Outcome {
    let caps = OracleCaps::default();
    let structures = small_structures(101, 30);
    let mut partitions = 0;
    for s in &structures {
        let mut t = table(s);
        t.ensure_upto(4).map_err(|e| e.to_string())?;
        for m in 1..=4 {
            for n in 1..=2 {
                let engine = level_partition(&t, n, m).map_err(|e| e.to_string())?;
                let oracle = brute_n_ary_atoms(s, m, n, &caps).map_err(|e| e.to_string())?;
                ensure(engine.class_of == oracle.labels(), || {
                    format!("{} m={m} n={n}: atoms differ", s.name())
                })?;
                partitions += 1;
            }
        }
    }

    let rel_caps = OracleCaps { max_n: 4, ..caps };
    let mut r = rng(202);
    let mut relations = 0;
    while relations < 60 {
        let s = &structures[relations % structures.len()];
        let mut t = table(s);
        let m = 1 + relations % 4;
        let rel = random_invariant_relation(&mut r, &mut t, m);
        let engine = relation_arity(&rel, &mut t).map_err(|e| e.to_string())?;
        let oracle = brute_relation_arity(s, &rel, &rel_caps).map_err(|e| e.to_string())?;
        ensure(engine == oracle, || {
            format!("{} m={m}: relation arity {engine} vs {oracle}", s.name())
        })?;
        relations += 1;
    }

    let mut groups: Vec<FiniteStructure> = corpus_upto(7);
    for n in 2..=7 {
        groups.push(family(Family::Cyclic(n)));
        groups.push(family(Family::FlatMonoid(n - 1)));
        groups.push(FiniteStructure::new(format!("bare_{n}"), n).unwrap());
    }
    let mut r = rng(303);
    for i in 0..30 {
        groups.push(random_structure(&mut r, 2 + i % 6));
    }
    for s in &groups {
        let aut = automorphisms(s, &limits()).map_err(|e| e.to_string())?;
        let brute = brute_automorphisms(s).map_err(|e| e.to_string())?;
        ensure(aut.order() == brute.len() as u64, || {
            format!("{}: order {} vs {}", s.name(), aut.order(), brute.len())
        })?;
    }
    Ok(format!(
        "{partitions} atom partitions, {relations} invariant relations, {} group orders",
        groups.len()
    ))
}

fn refines_orbits(s: &FiniteStructure) -> Result<(), String> {
    let mut t = table(s);
    t.ensure_upto(4).map_err(|e| e.to_string())?;
    for m in 1..=4 {
        let orbits = t.get(m).unwrap().class_of().to_vec();
        let mut previous: Option<Vec<u32>> = None;
        for n in 1..=m {
            let sig = level_partition(&t, n, m).map_err(|e| e.to_string())?.class_of;
            ensure(refines(&orbits, &sig), || {
                format!("{} m={m} n={n}: not coarser", s.name())
            })?;
            if let Some(p) = &previous {
                ensure(refines(&sig, p), || format!("{} m={m} n={n}: not monotone", s.name()))?;
            }
            previous = Some(sig);
        }
    }
    Ok(())
}

fn index_sets_suffice(s: &FiniteStructure) -> Result<(), String> {
    use itertools::Itertools;
    let size = s.size();
    let mut t = table(s);
    t.ensure_upto(4).map_err(|e| e.to_string())?;
    for m in 3..=4 {
        for n in 2..m {
            let full: Vec<Vec<u32>> = (0..size.pow(m as u32))
                .map(|rank| {
                    let tuple = tuple_unrank(rank, m, size).unwrap();
                    let mut label = Vec::new();
                    for k in 1..=n {
                        let orbits = t.get(k).unwrap();
                        for map in (0..k).map(|_| 0..m).multi_cartesian_product() {
                            let image: Vec<usize> = map.iter().map(|&i| tuple[i]).collect();
                            label.push(orbits.orbit_of(&image).unwrap());
                        }
                    }
                    label
                })
                .collect();
            let sig = level_partition(&t, n, m).map_err(|e| e.to_string())?.class_of;
            ensure(canonical(&full) == sig, || {
                format!("{} m={m} n={n}: index sets", s.name())
            })?;
        }
    }
    Ok(())
}

fn relabel_invariant(s: &FiniteStructure, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let q = random_permutation(&mut r, s.size());
    let image = s.relabel(&q).map_err(|e| e.to_string())?;
    let (a, b) = (exact_arity(s)?, exact_arity(&image)?);
    ensure(a == b, || format!("{}: arity {a} vs {b} after relabelling", s.name()))?;
    let size = s.size();
    let (mut ts, mut ti) = (table(s), table(&image));
    for m in 1..=3 {
        let rel = random_invariant_relation(&mut r, &mut ts, m);
        let moved: Vec<Vec<usize>> = rel.tuples().map(|t| t.iter().map(|&x| q.apply(x)).collect()).collect();
        let moved = TupleSet::from_tuples(size, m, moved.iter().map(Vec::as_slice)).unwrap();
        let before = relation_arity(&rel, &mut ts).map_err(|e| e.to_string())?;
        let after = relation_arity(&moved, &mut ti).map_err(|e| e.to_string())?;
        ensure(before == after, || format!("{}: relation arity moved", s.name()))?;
        let orbits_before = ts.ensure(m).unwrap().class_of().to_vec();
        let orbits_after = ti.ensure(m).unwrap().class_of().to_vec();
        let pulled: Vec<u32> = (0..size.pow(m as u32))
            .map(|rank| {
                let t: Vec<usize> = tuple_unrank(rank, m, size)
                    .unwrap()
                    .iter()
                    .map(|&x| q.apply(x))
                    .collect();
                orbits_after[tuple_rank(&t, size).unwrap()]
            })
            .collect();
        ensure(canonical(&pulled) == orbits_before, || {
            format!("{}: orbits not carried", s.name())
        })?;
    }
    Ok(())
}

fn cli_output(args: &[&str]) -> Result<String, String> {
    let cli =
        Cli::try_parse_from(std::iter::once("aritylab").chain(args.iter().copied())).map_err(|e| e.to_string())?;
    execute(&cli).map(|o| o.text).map_err(|e| e.to_string())
}

fn ac7() -> Outcome {
    let structures = small_structures(404, 40);
    let mut relabelings = 0;
    for (i, s) in structures.iter().enumerate() {
        refines_orbits(s)?;
        index_sets_suffice(s)?;

        let text = serialize_structure(s);
        let back = parse_structure(&text).map_err(|e| e.to_string())?;
        ensure(&back == s, || format!("{}: round trip", s.name()))?;

        let mut t = table(s);
        let mut r = rng(500 + i as u64);
        for m in 1..=3 {
            let rel = random_invariant_relation(&mut r, &mut t, m);
            let a = relation_arity(&rel, &mut t).map_err(|e| e.to_string())?;
            ensure(a <= m, || format!("{}: relation arity {a} > {m}", s.name()))?;
            ensure((a == 0) == (rel.is_empty() || rel.is_full()), || {
                format!("{}: arity-0 characterization", s.name())
            })?;

            let expanded = s.clone().with_relation("Q_new", rel).map_err(|e| e.to_string())?;
            ensure(exact_arity(&expanded)? == exact_arity(s)?, || {
                format!("{}: invariant expansion", s.name())
            })?;
        }

        let aut = automorphisms(s, &limits()).map_err(|e| e.to_string())?;
        for g in aut.generators() {
            ensure(is_automorphism(g, s).unwrap(), || {
                format!("{}: generator not automorphism", s.name())
            })?;
        }

        relabel_invariant(s, 600 + i as u64)?;
        relabelings += 1;
    }
    ensure(relabelings >= 20, || format!("only {relabelings} relabelings"))?;

    let mut saturated = 0;
    for s in corpus_upto(5).iter().chain(structures.iter()) {
        let n = s.size();
        let mut t = table(s);
        let a = theory_arity_in(&mut t, n, n + 1).map_err(|e| e.to_string())?;
        let b = theory_arity_in(&mut t, n + 1, n + 1).map_err(|e| e.to_string())?;
        ensure(a.theory_arity == b.theory_arity, || format!("{}: saturation", s.name()))?;
        saturated += 1;
    }

    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(4)
        .max(2)
        .to_string();
    let commands: [&[&str]; 4] = [
        &["arity", "corpus:s3"],
        &["rel-arity", "corpus:z5", "--graph-of", "mul", "--check-hypotheses"],
        &["expand", "corpus:finite_range_5_2", "--mode", "finite-range"],
        &["family", "flat-monoid", "--sweep", "2..5", "--format", "table"],
    ];
    for args in commands {
        let one = cli_output(&[args, &["--threads", "1"]].concat())?;
        let many = cli_output(&[args, &["--threads", threads.as_str()]].concat())?;
        ensure(one == many, || format!("{args:?}: output depends on thread count"))?;
    }
    Ok(format!(
        "{} structures, {relabelings} relabelings, {saturated} saturation checks, 4 reports byte-identical at 1 vs {threads} threads",
        structures.len()
    ))
}

fn ac8() -> Outcome {
    let graph_arity = |name: &str| -> Result<usize, String> {
        let s = bundled(name);
        let g = s.graph_of("mul").map_err(|e| e.to_string())?;
        relation_arity(&g, &mut table(&s)).map_err(|e| e.to_string())
    };
    let checks = [
        ("graph arity Z_3", graph_arity("z3")?, pinned::GRAPH_ARITY_Z3),
        ("graph arity Z_4", graph_arity("z4")?, pinned::GRAPH_ARITY_Z4),
        ("graph arity Z_5", graph_arity("z5")?, pinned::GRAPH_ARITY_Z5),
        (
            "theory arity Z_3",
            exact_arity(&bundled("z3"))?,
            pinned::THEORY_ARITY_Z3,
        ),
        (
            "theory arity Z_4",
            exact_arity(&bundled("z4"))?,
            pinned::THEORY_ARITY_Z4,
        ),
        (
            "theory arity S_3",
            exact_arity(&bundled("s3"))?,
            pinned::THEORY_ARITY_S3,
        ),
    ];
    for (what, got, want) in &checks {
        ensure(got == want, || format!("{what}: {got} vs pinned {want}"))?;
    }
    Ok(checks
        .iter()
        .map(|(w, g, _)| format!("{w}={g}"))
        .collect::<Vec<_>>()
        .join(", "))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1", "theory arity bounded by universe size on corpus", ac1),
        ("AC2", "naming singletons gives a unary theory", ac2),
        ("AC3", "flat monoids are unary; graph case split", ac3),
        ("AC4", "finite-range expansion is at most binary", ac4),
        ("AC5", "aritization hypotheses on cyclic groups", ac5),
        ("AC6", "engine matches brute-force oracle", ac6),
        ("AC7", "property suites", ac7),
        ("AC8", "pinned constants", ac8),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {title} ({secs:.2}s): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
