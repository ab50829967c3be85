//! Randomized and exhaustive search for MWS multisets.
//!
//! A multiset of total size n is MWS exactly when its q_k hyperplane
//! characters are pairwise distinct, and it spans the space exactly when no
//! character reaches n. The searches work directly on multiplicity vectors;
//! column order and scaling never matter.

use std::sync::Arc;

use crate::code::ProjectiveMultiset;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::geometry::{gaussian, ProjectiveSpace};
use crate::rng::SplitMix64;

/// Exhaustive mode enumerates compositions; the count is capped here.
pub const EXHAUSTIVE_MULTISET_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Randomized,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub field: FieldSpec,
    pub k: u32,
    pub n: usize,
    pub seed: u64,
    pub max_iters: u64,
    pub mode: SearchMode,
}

/// One entry of the energy trace: (restart, iteration, energy).
pub type TraceEvent = (u64, u64, u64);

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub hit: Option<ProjectiveMultiset>,
    pub iterations: u64,
    pub restarts: u64,
    pub trace: Vec<TraceEvent>,
}

/// Number of multisets of size n on qk points: C(n + qk - 1, qk - 1).
pub fn multiset_count(n: usize, qk: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..qk as u128 - 1 {
        acc = acc.saturating_mul(n as u128 + i + 1) / (i + 1);
        if acc > EXHAUSTIVE_MULTISET_GUARD * 1000 {
            return acc; // far beyond any guard, no need for exactness
        }
    }
    acc
}

fn collisions(chars: &[u64], n: u64) -> u64 {
    let mut sorted = chars.to_vec();
    sorted.sort_unstable();
    let mut energy = 0u64;
    let mut run = 1u64;
    for i in 1..sorted.len() {
        if sorted[i] == sorted[i - 1] {
            run += 1;
        } else {
            energy += run * (run - 1) / 2;
            run = 1;
        }
    }
    energy += run * (run - 1) / 2;
    // a character equal to n means the support sits inside that hyperplane
    energy + chars.iter().filter(|&&c| c == n).count() as u64
}

/// Searches for a full-rank multiset of size n with all characters distinct.
///
/// Randomized mode hill-climbs on the number of colliding character pairs,
/// moving one unit of multiplicity at a time and restarting on plateaus with
/// a per-restart generator seeded by `seed ^ restart_index`. Deterministic
/// for a fixed configuration. Exhaustive mode scans compositions in
/// lexicographic order and returns the first hit.
pub fn search_mws(cfg: &SearchConfig) -> Result<SearchOutcome> {
    if cfg.n == 0 {
        return Err(Error::BadSearchConfig("n must be positive".into()));
    }
    let qk = gaussian(cfg.field.q(), cfg.k) as usize;
    let space = ProjectiveSpace::build(cfg.field.clone(), cfg.k)?;
    match cfg.mode {
        SearchMode::Exhaustive => {
            let count = multiset_count(cfg.n, qk);
            if count > EXHAUSTIVE_MULTISET_GUARD {
                return Err(Error::BadSearchConfig(format!(
                    "{count} multisets exceed the exhaustive cap {EXHAUSTIVE_MULTISET_GUARD}"
                )));
            }
            Ok(search_exhaustive(&space, cfg.n))
        }
        SearchMode::Randomized => Ok(search_randomized(&space, cfg)),
    }
}

fn search_exhaustive(space: &Arc<ProjectiveSpace>, n: usize) -> SearchOutcome {
    let qk = space.num_points();
    let mut mult = vec![0u64; qk];
    let mut examined = 0u64;
    let mut stack_found = None;
    // lexicographic compositions of n into qk parts
    compositions(&mut mult, 0, n as u64, &mut |m| {
        examined += 1;
        let chars = chars_of(space, m);
        if collisions(&chars, n as u64) == 0 {
            stack_found = Some(m.to_vec());
            true
        } else {
            false
        }
    });
    let hit = stack_found
        .map(|m| ProjectiveMultiset::new(Arc::clone(space), m).expect("length checked"));
    SearchOutcome { hit, iterations: examined, restarts: 0, trace: Vec::new() }
}

fn compositions(mult: &mut Vec<u64>, idx: usize, remaining: u64, visit: &mut impl FnMut(&[u64]) -> bool) -> bool {
    if idx + 1 == mult.len() {
        mult[idx] = remaining;
        let stop = visit(mult);
        mult[idx] = 0;
        return stop;
    }
    for v in 0..=remaining {
        mult[idx] = v;
        if compositions(mult, idx + 1, remaining - v, visit) {
            mult[idx] = 0;
            return true;
        }
    }
    mult[idx] = 0;
    false
}

fn chars_of(space: &ProjectiveSpace, mult: &[u64]) -> Vec<u64> {
    (0..space.num_points())
        .map(|s| space.hyperplane_points(s).map(|i| mult[i]).sum())
        .collect()
}

fn search_randomized(space: &Arc<ProjectiveSpace>, cfg: &SearchConfig) -> SearchOutcome {
    let qk = space.num_points();
    let n = cfg.n as u64;
    let mut iterations = 0u64;
    let mut restart = 0u64;
    let mut trace = Vec::new();

    while iterations < cfg.max_iters {
        let mut rng = SplitMix64::new(cfg.seed ^ restart);
        // drop n units on random points
        let mut mult = vec![0u64; qk];
        for _ in 0..n {
            mult[rng.below(qk as u64) as usize] += 1;
        }
        let mut chars = chars_of(space, &mult);
        let mut energy = collisions(&chars, n);
        trace.push((restart, iterations, energy));

        loop {
            if energy == 0 {
                let hit = ProjectiveMultiset::new(Arc::clone(space), mult)
                    .expect("length checked");
                return SearchOutcome { hit: Some(hit), iterations, restarts: restart, trace };
            }
            if iterations >= cfg.max_iters {
                break;
            }
            iterations += 1;

            // steepest descent over single-unit moves
            let mut best: Option<(u64, usize, usize)> = None;
            for from in 0..qk {
                if mult[from] == 0 {
                    continue;
                }
                for to in 0..qk {
                    if to == from {
                        continue;
                    }
                    let mut trial = chars.clone();
                    for s in 0..qk {
                        if space.on_hyperplane(from, s) {
                            trial[s] -= 1;
                        }
                        if space.on_hyperplane(to, s) {
                            trial[s] += 1;
                        }
                    }
                    let e = collisions(&trial, n);
                    if e < energy && best.is_none_or(|(be, _, _)| e < be) {
                        best = Some((e, from, to));
                    }
                }
            }
            match best {
                Some((e, from, to)) => {
                    mult[from] -= 1;
                    mult[to] += 1;
                    for s in 0..qk {
                        if space.on_hyperplane(from, s) {
                            chars[s] -= 1;
                        }
                        if space.on_hyperplane(to, s) {
                            chars[s] += 1;
                        }
                    }
                    energy = e;
                    trace.push((restart, iterations, energy));
                }
                None => break, // plateau: restart
            }
        }
        restart += 1;
    }
    SearchOutcome { hit: None, iterations, restarts: restart, trace }
}

/// Smallest n <= n_max admitting an MWS multiset, by exhaustive scan.
pub fn min_length_probe(field: &FieldSpec, k: u32, n_max: usize) -> Result<usize> {
    for n in 1..=n_max {
        let cfg = SearchConfig {
            field: field.clone(),
            k,
            n,
            seed: 0,
            max_iters: 0,
            mode: SearchMode::Exhaustive,
        };
        if search_mws(&cfg)?.hit.is_some() {
            return Ok(n);
        }
    }
    Err(Error::ProbeExhausted(n_max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelingObjective {
    MaximizeDistance,
    MinimizeDistance,
}

/// Seeded local search over point-label transpositions of a powers-of-two
/// multiset. Returns the best labeling found: `perm[i]` is the point
/// receiving multiplicity 2^i.
pub fn optimize_labeling(
    m: &ProjectiveMultiset,
    objective: LabelingObjective,
    seed: u64,
    max_iters: u64,
) -> Result<Vec<usize>> {
    let space = m.space();
    let qk = space.num_points();
    // recover the current labeling; multiplicities must be a permutation of
    // the successive powers of two
    let mut perm = vec![usize::MAX; qk];
    for (point, &mult) in m.multiplicities().iter().enumerate() {
        if mult == 0 || mult & (mult - 1) != 0 {
            return Err(Error::NotPowersOfTwo);
        }
        let i = mult.trailing_zeros() as usize;
        if i >= qk || perm[i] != usize::MAX {
            return Err(Error::NotPowersOfTwo);
        }
        perm[i] = point;
    }

    let n = m.n() as u64;
    let distance = |perm: &[usize]| -> u64 {
        let mut mult = vec![0u64; qk];
        for (i, &p) in perm.iter().enumerate() {
            mult[p] = 1u64 << i;
        }
        let chars = chars_of(space, &mult);
        n - chars.iter().max().copied().unwrap_or(0)
    };
    let better = |new: u64, old: u64| match objective {
        LabelingObjective::MaximizeDistance => new > old,
        LabelingObjective::MinimizeDistance => new < old,
    };

    let mut rng = SplitMix64::new(seed);
    let mut best_perm = perm.clone();
    let mut best_d = distance(&perm);
    let mut current = perm;
    let mut current_d = best_d;
    for _ in 0..max_iters {
        let a = rng.below(qk as u64) as usize;
        let b = rng.below(qk as u64) as usize;
        if a == b {
            continue;
        }
        current.swap(a, b);
        let d = distance(&current);
        if better(d, current_d) || d == current_d {
            current_d = d;
            if better(d, best_d) {
                best_d = d;
                best_perm = current.clone();
            }
        } else {
            current.swap(a, b); // undo
        }
    }
    Ok(best_perm)
}
