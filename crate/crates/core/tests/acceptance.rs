//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pachner_core::census::{count_move_schemas_for, family_census};
use pachner_core::demo;
use pachner_core::filtration::{
    apply_extended_bistellar, ball_times_interval, enumerate_extended_moves, FilteredComplex,
};
use pachner_core::invariants::{euler_characteristic, homology, HomologyGroup};
use pachner_core::moves::{apply_bistellar, enumerate_moves};
use pachner_core::search::{
    flip_search, reduce, replay, stratified_align, AlignBudget, MoveTarget, ReduceBudget, SearchBudget,
};
use pachner_core::stark::{apply_stark_extended_bistellar, validate_stark_neighborhood, StarkNeighborhood};
use pachner_core::walk::{random_extended_walk, random_walk, seeded_rng};
use pachner_core::{check_combinatorial_manifold, Complex, Simplex, StarkComplex, Verdict};
use rand::Rng;

const INVOLUTION_MIN_CASES: usize = 500;
const INVOLUTION_TIME: Duration = Duration::from_secs(30);
const INVARIANCE_STEPS: usize = 100;
const INVARIANCE_TIME: Duration = Duration::from_secs(60);
const CONSTRAINED_STEPS: usize = 100;
const CONSTRAINED_MAX_LEN: usize = 6;
const EXTENDED_WALK_STEPS: usize = 50;
const ALIGN_PAIRS: u64 = 20;
const ALIGN_MAX_WALK: usize = 4;
const ALIGN_TIME: Duration = Duration::from_secs(120);
const STARK_MIN_CASES: usize = 100;
const KNOT_PAIRS: usize = 5;
const REDUCE_TRIALS: u64 = 20;
const REDUCE_MIN_SUCCESSES: usize = 18;
const REDUCE_WALK: usize = 20;
const JOIN_FAN_MAX: u32 = 5;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(lists: &[&[u32]]) -> Complex {
    Complex::from_lists(lists.iter().map(|l| l.iter().copied())).unwrap()
}

fn s(v: &[u32]) -> Simplex {
    Simplex::new(v.iter().copied()).unwrap()
}

fn move_involution() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n in [2usize, 3, 4] {
        for seed in 0..6u64 {
            let mut rng = seeded_rng(1000 * n as u64 + seed);
            let mut state = demo::sphere_boundary(n);
            for _ in 0..10 {
                let moves = enumerate_moves(&state, &Complex::empty()).map_err(|e| e.to_string())?;
                for _ in 0..4 {
                    let m = &moves[rng.gen_range(0..moves.len())];
                    let there = apply_bistellar(&state, m).map_err(|e| format!("{m}: {e}"))?;
                    let back = apply_bistellar(&there, &m.inverse()).map_err(|e| format!("inverse of {m}: {e}"))?;
                    ensure(back == state, || format!("{m} then its inverse changed {state}"))?;
                    cases += 1;
                }
                state = apply_bistellar(&state, &moves[rng.gen_range(0..moves.len())]).unwrap();
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(cases >= INVOLUTION_MIN_CASES, || format!("only {cases} cases"))?;
    ensure(elapsed < INVOLUTION_TIME, || format!("took {elapsed:?}"))?;
    Ok(format!("{cases} moves inverted exactly in {elapsed:.2?}"))
}

fn bistellar_invariance() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("S2", demo::sphere_boundary(2)),
        ("S3", demo::sphere_boundary(3)),
        ("torus7", demo::torus7()),
        ("rp2-6", demo::rp2_6()),
    ];
    let rp2 = homology(&demo::rp2_6());
    ensure(rp2[1] == HomologyGroup { betti: 0, torsion: vec![2u32.into()] }, || format!("H_1(RP2) = {}", rp2[1]))?;
    for (name, k) in cases {
        let chi = euler_characteristic(&k);
        let h = homology(&k);
        let (_, moves) = random_walk(&k, &Complex::empty(), INVARIANCE_STEPS, &mut seeded_rng(42)).unwrap();
        ensure(moves.len() == INVARIANCE_STEPS, || format!("{name}: walk stalled"))?;
        let mut state = k.clone();
        for (i, m) in moves.iter().enumerate() {
            state = apply_bistellar(&state, m).map_err(|e| e.to_string())?;
            ensure(euler_characteristic(&state) == chi, || format!("{name}: chi changed at step {i}"))?;
            ensure(homology(&state) == h, || format!("{name}: homology changed at step {i}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < INVARIANCE_TIME, || format!("took {elapsed:?}"))?;
    Ok(format!("4 walks of {INVARIANCE_STEPS} moves, chi and homology fixed at every step ({elapsed:.2?})"))
}

fn constrained_moves() -> Outcome {
    let disk = demo::wheel(6);
    let rim = disk.boundary_complex().clone();
    for seed in 0..5 {
        let (_, moves) = random_walk(&disk, &rim, CONSTRAINED_STEPS, &mut seeded_rng(seed)).unwrap();
        let mut state = disk.clone();
        for m in &moves {
            state = apply_bistellar(&state, m).map_err(|e| e.to_string())?;
            ensure(state.boundary_complex() == &rim && rim.is_subcomplex_of(&state), || {
                format!("boundary changed after {m}")
            })?;
        }
    }
    let fresh = disk.fresh_vertex();
    let target = disk.stellar_subdivide(&s(&[0, 1, 2]), fresh).unwrap();
    let budget = SearchBudget::with_depth(CONSTRAINED_MAX_LEN);
    let seq = flip_search(&disk, &target, &rim, &budget)
        .map_err(|e| e.to_string())?
        .ok_or("not found within budget")?;
    ensure(seq.len() <= CONSTRAINED_MAX_LEN, || format!("certificate has {} moves", seq.len()))?;
    let end = replay(&disk, &seq).map_err(|e| e.to_string())?;
    ensure(end == target, || "replay did not reach the target".into())?;
    let mut state = disk.clone();
    for m in &seq.moves {
        state = state.apply_record(m).unwrap();
        ensure(rim.is_subcomplex_of(&state) && state.boundary_complex() == &rim, || "certificate moved the rim".into())?;
    }
    Ok(format!("5 constrained walks kept the rim; subdivision certificate of length {}", seq.len()))
}

fn ball_times_interval_construction() -> Outcome {
    let balls = [
        ("edge", c(&[&[1, 2]]), vec![1, 2]),
        ("triangle", c(&[&[1, 2, 3]]), vec![1, 2, 3]),
        ("subdivided edge", c(&[&[1, 3], &[2, 3]]), vec![1, 2, 3]),
    ];
    for (name, b, order) in balls {
        let (vplus, vminus) = (10, 11);
        let out = ball_times_interval(&b, &order, (vplus, vminus)).map_err(|e| e.to_string())?;
        let r = check_combinatorial_manifold(&out.complex);
        ensure(r.is_combinatorial_manifold == Verdict::Yes && !r.is_closed(), || {
            format!("{name}: not a manifold with boundary")
        })?;
        ensure(b.suspension(vplus, vminus).unwrap().is_subcomplex_of(&out.complex), || {
            format!("{name}: suspension missing")
        })?;
        // v+ sees the top copy and never the bottom one, and vice versa
        let up = out.complex.link(&Simplex::vertex(vplus)).unwrap();
        let down = out.complex.link(&Simplex::vertex(vminus)).unwrap();
        ensure(out.top.is_subcomplex_of(&up) && out.bottom.is_subcomplex_of(&down), || {
            format!("{name}: apex cones do not cap the level copies")
        })?;
        ensure(
            out.bottom.vertices().iter().all(|&v| !up.has_vertex(v))
                && out.top.vertices().iter().all(|&v| !down.has_vertex(v)),
            || format!("{name}: apex on the wrong side"),
        )?;
        let chi = euler_characteristic(&out.complex);
        ensure(chi == euler_characteristic(&b), || format!("{name}: chi {chi}"))?;
    }
    Ok("edge, triangle and subdivided edge: manifolds with boundary containing the suspension, chi = 1".into())
}

fn strata_homology(fc: &FilteredComplex) -> Vec<(i64, Vec<HomologyGroup>)> {
    fc.strata().iter().map(|m| (euler_characteristic(m), homology(m))).collect()
}

fn extended_invariance() -> Outcome {
    let mut total = 0;
    for (name, fc) in [
        ("filtered-s2-equator", demo::filtered_s2_equator()),
        ("filtered-s3-equatorial-s2", demo::filtered_s3_equatorial_s2()),
    ] {
        let inv = strata_homology(&fc);
        let (_, moves) = random_extended_walk(&fc, EXTENDED_WALK_STEPS, &mut seeded_rng(5)).unwrap();
        ensure(moves.len() == EXTENDED_WALK_STEPS, || format!("{name}: walk stalled"))?;
        let mut state = fc.clone();
        for (i, m) in moves.iter().enumerate() {
            let next = apply_extended_bistellar(&state, m).map_err(|e| e.to_string())?;
            ensure(next.validate().is_valid(), || format!("{name}: filtration invalid after step {i}"))?;
            ensure(strata_homology(&next) == inv, || format!("{name}: invariants changed at step {i}"))?;
            let restricted = apply_bistellar(state.stratum(m.k), &m.inner).map_err(|e| e.to_string())?;
            ensure(next.stratum(m.k) == &restricted, || format!("{name}: restriction differs at step {i}"))?;
            for j in 0..m.k {
                ensure(next.stratum(j) == state.stratum(j), || format!("{name}: M_{j} changed at step {i}"))?;
            }
            state = next;
            total += 1;
        }
    }
    Ok(format!("{total} extended moves preserved validity, strata invariants and restriction"))
}

fn stratified_alignment() -> Outcome {
    let start = Instant::now();
    let fc = demo::filtered_s2_equator();
    let mut found = 0;
    let mut longest = 0;
    let mut failures = Vec::new();
    for seed in 0..ALIGN_PAIRS {
        let len = 1 + (seed as usize % ALIGN_MAX_WALK);
        let (target, _) = random_extended_walk(&fc, len, &mut seeded_rng(seed)).unwrap();
        match stratified_align(&fc, &target, &AlignBudget::default()) {
            Ok(Some(seq)) => {
                let end = replay(&fc, &seq).map_err(|e| e.to_string())?;
                ensure(end == target, || format!("seed {seed}: replay missed the target"))?;
                longest = longest.max(seq.len());
                found += 1;
            }
            Ok(None) => failures.push(format!("seed {seed}: not found within budget")),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    ensure(failures.is_empty(), || format!("{found}/{ALIGN_PAIRS}; {}", failures.join("; ")))?;
    ensure(elapsed < ALIGN_TIME, || format!("took {elapsed:?}"))?;
    Ok(format!("{found}/{ALIGN_PAIRS} pairs aligned, longest certificate {longest}, {elapsed:.2?}"))
}

fn stark_compatibility() -> Outcome {
    let mut cases = 0;
    for (seed, fc) in [demo::filtered_s2_equator(), demo::filtered_s3_equatorial_s2()].into_iter().enumerate() {
        let mut rng = seeded_rng(77 + seed as u64);
        let mut state = fc;
        for _ in 0..30 {
            let moves = enumerate_extended_moves(&state, &[]);
            for _ in 0..2 {
                let m = &moves[rng.gen_range(0..moves.len())];
                let filtered = apply_extended_bistellar(&state, m).map_err(|e| e.to_string())?;
                let n = StarkNeighborhood::from_suspension(m.inner.before(), &m.susp);
                let x = StarkComplex::from(state.clone());
                ensure(validate_stark_neighborhood(&x, &n).is_valid(), || format!("neighborhood of {m} invalid"))?;
                let stark = apply_stark_extended_bistellar(&x, &n, &m.inner).map_err(|e| format!("{m}: {e}"))?;
                ensure(stark.strata() == filtered.strata(), || format!("{m}: results differ"))?;
                cases += 1;
            }
            state = apply_extended_bistellar(&state, &moves[rng.gen_range(0..moves.len())]).unwrap();
        }
    }
    ensure(cases >= STARK_MIN_CASES, || format!("only {cases} cases"))?;
    Ok(format!("{cases} cases identical"))
}

fn knot_census() -> Outcome {
    // empty M_0, the knot K, the surface, the 3-sphere
    let census = count_move_schemas_for(3, &[1, 2, 3]);
    ensure(census.pair_count() == KNOT_PAIRS, || format!("{} pairs", census.pair_count()))?;
    Ok(format!(
        "{} inverse pairs (n^2 - n = {} reported alongside)",
        census.pair_count(),
        census.quoted_figure
    ))
}

fn reduction_oracle() -> Outcome {
    let r = reduce(&demo::bipyramid(), &ReduceBudget::default());
    ensure(r.certifies_sphere() && r.certificate.len() == 1, || {
        format!("bipyramid reduced in {} moves", r.certificate.len())
    })?;
    let s3 = demo::sphere_boundary(3);
    let mut successes = 0;
    for seed in 0..REDUCE_TRIALS {
        let (k, _) = random_walk(&s3, &Complex::empty(), REDUCE_WALK, &mut seeded_rng(500 + seed)).unwrap();
        let r = reduce(&k, &ReduceBudget { seed, ..ReduceBudget::default() });
        let end = replay(&k, &r.certificate).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(end == r.complex, || format!("seed {seed}: certificate does not reach the result"))?;
        if r.certifies_sphere() {
            ensure(end.find_isomorphism(&s3).is_some(), || format!("seed {seed}: wrong sphere certificate"))?;
            successes += 1;
        }
    }
    ensure(successes >= REDUCE_MIN_SUCCESSES, || format!("{successes}/{REDUCE_TRIALS}"))?;
    Ok(format!("bipyramid in 1 move; {successes}/{REDUCE_TRIALS} S3 walks reduced to the 4-simplex boundary"))
}

fn non_finiteness() -> Outcome {
    let fans: Vec<_> = (1..=JOIN_FAN_MAX).map(demo::join_fan).collect();
    for (i, fan) in fans.iter().enumerate() {
        let r = fan.space.validate();
        ensure(r.is_valid(), || format!("join-fan {}: {:?}", i + 1, r.findings))?;
        for n in &fan.neighborhoods {
            let r = validate_stark_neighborhood(&fan.space, n);
            ensure(r.is_valid(), || format!("join-fan {}: {:?}", i + 1, r.findings))?;
        }
    }
    let mut counts = Vec::new();
    for n in 1..=fans.len() {
        let census = family_census(fans[..n].iter().map(|f| (&f.space, f.neighborhoods.as_slice())));
        counts.push(census.pairs);
    }
    ensure(counts.windows(2).all(|w| w[1] > w[0]), || format!("census {counts:?} does not grow"))?;
    let distinct: BTreeSet<usize> = counts.iter().copied().collect();
    Ok(format!("join-fan 1..{JOIN_FAN_MAX} valid; census {counts:?} ({} distinct)", distinct.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("move involution", move_involution),
        ("bistellar invariance", bistellar_invariance),
        ("constrained moves", constrained_moves),
        ("B x I construction", ball_times_interval_construction),
        ("extended-move invariance", extended_invariance),
        ("stratified alignment", stratified_alignment),
        ("stark compatibility", stark_compatibility),
        ("knot-case census", knot_census),
        ("reduction oracle", reduction_oracle),
        ("non-finiteness witness", non_finiteness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
