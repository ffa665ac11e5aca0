//! Helpers shared by the integration suites: an independent brute-force
//! reference oracle and seeded random instance generators.

use agreelin::comb::binomial;
use agreelin::helly::{clique_from_digits, marking_choices};
use agreelin::model::{
    check_order, LinearOrder, MarkVariant, MarkedEdge, MarkedHypergraph, Marks, VertexId,
};
use agreelin::rng::SplitMix64;

/// Lexicographic successor; false once the permutation is descending.
pub fn lex_next(perm: &mut [VertexId]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Plain n!-filter: every permutation of `subset`, kept when `check_order`
/// agrees. Independent of the backtracking search it cross-checks.
pub fn brute_orders(h: &MarkedHypergraph, subset: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut perm: Vec<VertexId> = subset.to_vec();
    perm.sort_unstable();
    if perm.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    loop {
        let order = LinearOrder::new(perm.clone()).unwrap();
        if check_order(h, &order).unwrap().agrees {
            out.push(perm.clone());
        }
        if !lex_next(&mut perm) {
            break;
        }
    }
    out
}

/// Uniformly random marking of the (r, n)-clique.
pub fn random_clique(
    variant: MarkVariant,
    r: u32,
    n: u32,
    rng: &mut SplitMix64,
) -> MarkedHypergraph {
    let edges = binomial(n as u64, r as u64) as usize;
    let choices = marking_choices(variant, r);
    let digits: Vec<u32> = (0..edges).map(|_| rng.next_below(choices) as u32).collect();
    clique_from_digits(variant, r, n, &digits)
}

fn random_marks(variant: MarkVariant, verts: &[VertexId], rng: &mut SplitMix64) -> Marks {
    let digit = rng.next_below(marking_choices(variant, verts.len() as u32)) as u32;
    agreelin::helly::decode_marks(variant, verts, digit)
}

/// Random non-complete hypergraph: up to `max_edges` distinct random
/// r-subsets of `1..=n` with uniformly random marks.
pub fn random_sparse(
    variant: MarkVariant,
    r: u32,
    n: u32,
    max_edges: usize,
    rng: &mut SplitMix64,
) -> MarkedHypergraph {
    let target = 1 + rng.next_below(max_edges as u64) as usize;
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..target * 4 {
        let mut pool: Vec<VertexId> = (1..=n).collect();
        rng.shuffle(&mut pool);
        let mut verts: Vec<VertexId> = pool[..r as usize].to_vec();
        verts.sort_unstable();
        seen.insert(verts);
        if seen.len() == target {
            break;
        }
    }
    let edges = seen
        .into_iter()
        .map(|verts| {
            let marks = random_marks(variant, &verts, rng);
            MarkedEdge::new(verts, marks).unwrap()
        })
        .collect();
    MarkedHypergraph::new(n, r, variant, edges).unwrap()
}

/// The five-edge one-extreme instance whose contracted S/F graph is a
/// triangle on the compound classes {e}, {f,g}, {h,j}; vertices are 1..=5.
pub fn triangle_instance() -> MarkedHypergraph {
    let table: &[(&[VertexId], VertexId)] = &[
        (&[1, 2, 3], 1), // e
        (&[1, 2, 5], 2), // f
        (&[2, 3, 5], 2), // g
        (&[2, 3, 4], 3), // h
        (&[1, 3, 4], 3), // j
    ];
    let edges = table
        .iter()
        .map(|&(v, a)| MarkedEdge::new(v.to_vec(), Marks::OneExtreme(a)).unwrap())
        .collect();
    MarkedHypergraph::new(5, 3, MarkVariant::OneExtreme, edges).unwrap()
}

/// Marking of the (r, n)-clique induced by a random permutation, so the
/// instance is realizable by construction.
pub fn order_induced_two_extreme(r: u32, n: u32, rng: &mut SplitMix64) -> MarkedHypergraph {
    let mut perm: Vec<VertexId> = (1..=n).collect();
    rng.shuffle(&mut perm);
    let mut position = vec![0usize; n as usize + 1];
    for (i, &v) in perm.iter().enumerate() {
        position[v as usize] = i;
    }
    agreelin::model::build_clique(n, r, MarkVariant::TwoExtreme, |verts| {
        let lo = *verts.iter().min_by_key(|&&v| position[v as usize]).unwrap();
        let hi = *verts.iter().max_by_key(|&&v| position[v as usize]).unwrap();
        Marks::TwoExtreme(lo, hi)
    })
    .unwrap()
}
