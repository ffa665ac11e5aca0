//! Subset-scanning and census machinery: k-subset sweeps over one instance,
//! exhaustive enumeration of every marking of a small clique, and seeded
//! random sampling where exhaustion is infeasible.
//!
//! Marking spaces are indexed by mixed-radix integers with one digit per edge
//! in lexicographic edge order, which makes shard-by-range parallelism and
//! exact resume possible. Random sampling draws from a SplitMix64 stream
//! (see [`crate::rng`]); sample `s` consumes exactly the draws
//! `[s * m, (s + 1) * m)` of the stream, where `m` is the edge count, so
//! workers can jump to their range in O(1).

use crate::comb::{binomial, subsets_lex};
use crate::error::{Error, Result};
use crate::model::{build_clique, MarkVariant, MarkedHypergraph, Marks, VertexId};
use crate::rng::SplitMix64;
use crate::solvers::solve_auto;

/// Capped length of counterexample and failing-subset lists; totals are
/// always retained.
pub const MAX_LISTED: usize = 100;

/// Default instance budget for exhaustive censuses.
pub const DEFAULT_CENSUS_BUDGET: u64 = 20_000_000;

/// Result of sweeping all k-subsets of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyScanReport {
    pub k: u32,
    pub subsets_checked: u64,
    pub failing_total: u64,
    /// First failing subsets in lexicographic order, truncated to
    /// [`MAX_LISTED`].
    pub failing_subsets: Vec<Vec<VertexId>>,
    pub whole_exists: bool,
}

/// Decides every k-subset of the vertex set through the variant solver
/// (oracle fallback), plus the whole set. Subsets are visited in
/// lexicographic order.
pub fn scan_subsets(h: &MarkedHypergraph, k: u32) -> HellyScanReport {
    assert!(h.r() <= k && k <= h.n(), "subset size out of range");
    let mut checked = 0u64;
    let mut failing_total = 0u64;
    let mut failing = Vec::new();
    for subset in subsets_lex(h.n(), k) {
        checked += 1;
        if !decide_subset(h, &subset) {
            failing_total += 1;
            if failing.len() < MAX_LISTED {
                failing.push(subset);
            }
        }
    }
    HellyScanReport {
        k,
        subsets_checked: checked,
        failing_total,
        failing_subsets: failing,
        whole_exists: solve_auto(h).exists,
    }
}

fn decide_subset(h: &MarkedHypergraph, subset: &[VertexId]) -> bool {
    let (sub, _) = h.restrict(subset);
    solve_auto(&sub).exists
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

/// One instance that passes the k-subset sweep but has no agreeing order,
/// identified by its marking digits (and index or sample number).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: u64,
    pub digits: Vec<u32>,
}

/// Census over markings of the (r, n)-clique of one variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub variant: MarkVariant,
    pub r: u32,
    pub n: u32,
    pub k: u32,
    pub mode: CensusMode,
    pub instances_total: u64,
    /// Instances whose k-subsets all admit agreeing orders.
    pub instances_helly_k_pass: u64,
    pub counterexamples_total: u64,
    /// First counterexamples in index order, truncated to [`MAX_LISTED`].
    pub counterexamples: Vec<Counterexample>,
}

impl CensusReport {
    /// The Helly claim for (variant, r, k) holds on the censused space
    /// exactly when this is true.
    pub fn certifies(&self) -> bool {
        self.counterexamples_total == 0
    }
}

/// Number of markings of one edge.
pub fn marking_choices(variant: MarkVariant, r: u32) -> u64 {
    variant.marking_choices(r)
}

/// Size of the full marking space of the (r, n)-clique, or `None` on
/// overflow.
pub fn marking_space(variant: MarkVariant, r: u32, n: u32) -> Option<u128> {
    let choices = marking_choices(variant, r) as u128;
    let edges = binomial(n as u64, r as u64);
    let mut acc: u128 = 1;
    for _ in 0..edges {
        acc = acc.checked_mul(choices)?;
    }
    Some(acc)
}

/// Decodes one mark digit for an edge with the given sorted vertex set.
///
/// Digits index the per-variant mark tables in lexicographic order: pairs
/// `(a, b)` with `a < b` for two-extreme, single vertices for min-marked and
/// one-extreme, ordered pairs for min&max.
pub fn decode_marks(variant: MarkVariant, verts: &[VertexId], digit: u32) -> Marks {
    let r = verts.len();
    match variant {
        MarkVariant::MinMarked => Marks::MinMarked(verts[digit as usize]),
        MarkVariant::OneExtreme => Marks::OneExtreme(verts[digit as usize]),
        MarkVariant::TwoExtreme => {
            let mut d = digit as usize;
            for i in 0..r {
                let span = r - 1 - i;
                if d < span {
                    return Marks::TwoExtreme(verts[i], verts[i + 1 + d]);
                }
                d -= span;
            }
            unreachable!("digit within C(r, 2)")
        }
        MarkVariant::MinMax => {
            let i = digit as usize / (r - 1);
            let j0 = digit as usize % (r - 1);
            let j = if j0 < i { j0 } else { j0 + 1 };
            Marks::MinMax(verts[i], verts[j])
        }
    }
}

/// Builds the (r, n)-clique whose i-th edge (lexicographic) carries the
/// marking decoded from `digits[i]`.
pub fn clique_from_digits(
    variant: MarkVariant,
    r: u32,
    n: u32,
    digits: &[u32],
) -> MarkedHypergraph {
    let mut next = 0usize;
    build_clique(n, r, variant, |verts| {
        let m = decode_marks(variant, verts, digits[next]);
        next += 1;
        m
    })
    .expect("decoded marks are valid")
}

/// Little-endian mixed-radix decomposition of an instance index.
pub fn digits_from_index(choices: u64, edge_count: usize, mut index: u64) -> Vec<u32> {
    let mut digits = Vec::with_capacity(edge_count);
    for _ in 0..edge_count {
        digits.push((index % choices) as u32);
        index /= choices;
    }
    digits
}

/// Digits of sample `s` of the seeded stream.
pub fn digits_from_sample(choices: u64, edge_count: usize, seed: u64, sample: u64) -> Vec<u32> {
    let mut rng = SplitMix64::advanced(seed, sample.wrapping_mul(edge_count as u64));
    (0..edge_count)
        .map(|_| rng.next_below(choices) as u32)
        .collect()
}

/// Iterates every marking of the (r, n)-clique and reports the instances
/// that violate the Helly claim at `k` (all k-subsets pass, whole fails).
pub fn census_exhaustive(
    variant: MarkVariant,
    r: u32,
    n: u32,
    k: u32,
    budget: u64,
    jobs: usize,
) -> Result<CensusReport> {
    let space = marking_space(variant, r, n).unwrap_or(u128::MAX);
    if space > budget as u128 {
        return Err(Error::BudgetExceeded { space, budget });
    }
    let total = space as u64;
    let edge_count = binomial(n as u64, r as u64) as usize;
    let choices = marking_choices(variant, r);
    let digits_of = move |i: u64| digits_from_index(choices, edge_count, i);
    Ok(run_census(
        variant,
        r,
        n,
        k,
        CensusMode::Exhaustive,
        total,
        jobs,
        &digits_of,
    ))
}

/// Seeded, reproducible uniform sampling of markings with the same
/// counterexample semantics as the exhaustive census.
pub fn census_random(
    variant: MarkVariant,
    r: u32,
    n: u32,
    k: u32,
    samples: u64,
    seed: u64,
    jobs: usize,
) -> CensusReport {
    let edge_count = binomial(n as u64, r as u64) as usize;
    let choices = marking_choices(variant, r);
    let digits_of = move |s: u64| digits_from_sample(choices, edge_count, seed, s);
    run_census(
        variant,
        r,
        n,
        k,
        CensusMode::Random { samples, seed },
        samples,
        jobs,
        &digits_of,
    )
}

struct Partial {
    helly_k_pass: u64,
    counter_total: u64,
    counterexamples: Vec<Counterexample>,
}

#[allow(clippy::too_many_arguments)]
fn run_census(
    variant: MarkVariant,
    r: u32,
    n: u32,
    k: u32,
    mode: CensusMode,
    total: u64,
    jobs: usize,
    digits_of: &(dyn Fn(u64) -> Vec<u32> + Sync),
) -> CensusReport {
    let jobs = jobs.max(1).min(total.max(1) as usize);
    let chunk = total.div_ceil(jobs as u64).max(1);
    let ranges: Vec<(u64, u64)> = (0..jobs as u64)
        .map(|j| (j * chunk, ((j + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let run_range = |lo: u64, hi: u64| -> Partial {
        let mut partial = Partial {
            helly_k_pass: 0,
            counter_total: 0,
            counterexamples: Vec::new(),
        };
        for index in lo..hi {
            let digits = digits_of(index);
            let h = clique_from_digits(variant, r, n, &digits);
            if !all_subsets_pass(&h, k) {
                continue;
            }
            partial.helly_k_pass += 1;
            if !solve_auto(&h).exists {
                partial.counter_total += 1;
                if partial.counterexamples.len() < MAX_LISTED {
                    partial
                        .counterexamples
                        .push(Counterexample { index, digits });
                }
            }
        }
        partial
    };

    // Partials merge associatively in shard order, so job count never
    // changes the report.
    let partials: Vec<Partial> = if ranges.len() == 1 {
        vec![run_range(ranges[0].0, ranges[0].1)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(lo, hi)| scope.spawn(move || run_range(lo, hi)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut report = CensusReport {
        variant,
        r,
        n,
        k,
        mode,
        instances_total: total,
        instances_helly_k_pass: 0,
        counterexamples_total: 0,
        counterexamples: Vec::new(),
    };
    for p in partials {
        report.instances_helly_k_pass += p.helly_k_pass;
        report.counterexamples_total += p.counter_total;
        for c in p.counterexamples {
            if report.counterexamples.len() < MAX_LISTED {
                report.counterexamples.push(c);
            }
        }
    }
    report
}

fn all_subsets_pass(h: &MarkedHypergraph, k: u32) -> bool {
    subsets_lex(h.n(), k).all(|subset| {
        let (sub, _) = h.restrict(&subset);
        solve_auto(&sub).exists
    })
}
