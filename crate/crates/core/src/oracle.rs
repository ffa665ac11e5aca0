//! Ground-truth decision procedure: backtracking search over vertex
//! placements, for any variant and any (possibly non-complete) marked
//! hypergraph.
//!
//! The order is built left to right; a partial prefix is pruned as soon as
//! some edge inside the queried subset is violated irreparably. Every pruning
//! rule is sound (it never discards an extendable prefix), and every
//! un-pruned full permutation is re-checked with [`check_order`], so a
//! pruning bug could only cost time, never correctness.

use crate::model::{check_order, LinearOrder, MarkedHypergraph, Marks, VertexId};

/// Result of an oracle query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub exists: bool,
    /// Lexicographically least agreeing order, when one exists and the query
    /// asked for a witness.
    pub order: Option<LinearOrder>,
    /// Number of agreeing orders, when counting was requested.
    pub count: Option<u64>,
}

impl OracleResult {
    pub fn no() -> OracleResult {
        OracleResult {
            exists: false,
            order: None,
            count: None,
        }
    }

    pub fn yes(order: LinearOrder) -> OracleResult {
        OracleResult {
            exists: true,
            order: Some(order),
            count: None,
        }
    }
}

/// Decides whether some permutation of `subset` agrees with every edge
/// contained in it. The returned order is the lexicographically least
/// agreeing permutation.
pub fn decide(h: &MarkedHypergraph, subset: &[VertexId]) -> OracleResult {
    match enumerate(h, subset, Some(1)).pop() {
        Some(order) => OracleResult::yes(order),
        None => OracleResult::no(),
    }
}

/// All agreeing permutations of `subset` in lexicographic order, truncated at
/// `limit`.
pub fn enumerate(
    h: &MarkedHypergraph,
    subset: &[VertexId],
    limit: Option<usize>,
) -> Vec<LinearOrder> {
    let mut search = Search::new(h, subset, limit);
    search.run();
    search.results
}

/// Number of agreeing permutations of `subset`.
pub fn count(h: &MarkedHypergraph, subset: &[VertexId]) -> OracleResult {
    let orders = enumerate(h, subset, None);
    OracleResult {
        exists: !orders.is_empty(),
        count: Some(orders.len() as u64),
        order: orders.into_iter().next(),
    }
}

const NO_SLOT: u8 = u8::MAX;

/// Per-edge mark data translated to slot indices of the queried subset.
enum SlotMarks {
    TwoExtreme(u8, u8),
    MinMarked(u8),
    OneExtreme(u8),
    MinMax(u8, u8),
}

struct ActiveEdge {
    slots: Vec<u8>,
    marks: SlotMarks,
}

struct Search<'a> {
    h: &'a MarkedHypergraph,
    verts: Vec<VertexId>, // sorted subset; slot i <-> verts[i]
    edges: Vec<ActiveEdge>,
    touching: Vec<Vec<usize>>, // slot -> active edge indices
    placed: Vec<bool>,
    prefix: Vec<u8>,
    placed_count: Vec<u8>,
    first_placed: Vec<u8>,
    limit: Option<usize>,
    results: Vec<LinearOrder>,
}

impl<'a> Search<'a> {
    fn new(h: &'a MarkedHypergraph, subset: &[VertexId], limit: Option<usize>) -> Search<'a> {
        let mut verts: Vec<VertexId> = subset.to_vec();
        verts.sort_unstable();
        verts.dedup();
        assert_eq!(verts.len(), subset.len(), "oracle subset repeats a vertex");
        assert!(
            verts.iter().all(|&v| v >= 1 && v <= h.n()),
            "oracle subset outside the vertex set"
        );
        assert!(verts.len() < NO_SLOT as usize, "oracle subset too large");

        let slot_of = |v: VertexId| verts.binary_search(&v).map(|i| i as u8);
        let mut edges = Vec::new();
        for e in h.edges() {
            let Ok(slots) = e
                .verts()
                .iter()
                .map(|&v| slot_of(v))
                .collect::<Result<Vec<u8>, _>>()
            else {
                continue; // edge not contained in the subset
            };
            let marks = match e.marks() {
                Marks::TwoExtreme(a, b) => {
                    SlotMarks::TwoExtreme(slot_of(a).unwrap(), slot_of(b).unwrap())
                }
                Marks::MinMarked(a) => SlotMarks::MinMarked(slot_of(a).unwrap()),
                Marks::OneExtreme(a) => SlotMarks::OneExtreme(slot_of(a).unwrap()),
                Marks::MinMax(a, b) => SlotMarks::MinMax(slot_of(a).unwrap(), slot_of(b).unwrap()),
            };
            edges.push(ActiveEdge { slots, marks });
        }
        let mut touching = vec![Vec::new(); verts.len()];
        for (i, e) in edges.iter().enumerate() {
            for &s in &e.slots {
                touching[s as usize].push(i);
            }
        }
        let edge_count = edges.len();
        Search {
            h,
            placed: vec![false; verts.len()],
            prefix: Vec::with_capacity(verts.len()),
            placed_count: vec![0; edge_count],
            first_placed: vec![NO_SLOT; edge_count],
            touching,
            edges,
            verts,
            limit,
            results: Vec::new(),
        }
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.results.len() >= l)
    }

    fn run(&mut self) {
        if self.verts.is_empty() {
            // the empty order vacuously agrees
            if !self.done() {
                self.results.push(LinearOrder::empty());
            }
            return;
        }
        self.dfs();
    }

    fn dfs(&mut self) {
        if self.prefix.len() == self.verts.len() {
            let seq: Vec<VertexId> = self
                .prefix
                .iter()
                .map(|&s| self.verts[s as usize])
                .collect();
            let order = LinearOrder::new(seq).expect("prefix is a permutation");
            // mandatory final gate, independent of the pruning rules
            if check_order(self.h, &order)
                .expect("order over subset")
                .agrees
            {
                self.results.push(order);
            }
            return;
        }
        for s in 0..self.verts.len() as u8 {
            if self.placed[s as usize] {
                continue;
            }
            if self.try_place(s) {
                self.dfs();
                self.unplace(s);
            }
            if self.done() {
                return;
            }
        }
    }

    /// Places slot `s` if no edge through it is already irreparably violated.
    fn try_place(&mut self, s: u8) -> bool {
        for idx in 0..self.touching[s as usize].len() {
            let ei = self.touching[s as usize][idx];
            if !self.placement_ok(ei, s) {
                // roll back the edges updated so far
                for &ej in &self.touching[s as usize][..idx] {
                    self.placed_count[ej] -= 1;
                    if self.placed_count[ej] == 0 {
                        self.first_placed[ej] = NO_SLOT;
                    }
                }
                return false;
            }
            if self.placed_count[ei] == 0 {
                self.first_placed[ei] = s;
            }
            self.placed_count[ei] += 1;
        }
        self.placed[s as usize] = true;
        self.prefix.push(s);
        true
    }

    fn unplace(&mut self, s: u8) {
        self.prefix.pop();
        self.placed[s as usize] = false;
        for &ei in &self.touching[s as usize] {
            self.placed_count[ei] -= 1;
            if self.placed_count[ei] == 0 {
                self.first_placed[ei] = NO_SLOT;
            }
        }
    }

    /// Soundness of each rule: in a left-to-right construction every
    /// still-unplaced vertex of an edge ends up after the current one, so the
    /// first-placed member is the edge minimum and the last-placed the
    /// maximum in every completion of the prefix.
    fn placement_ok(&self, ei: usize, s: u8) -> bool {
        let e = &self.edges[ei];
        let k = self.placed_count[ei];
        let last = k as usize == e.slots.len() - 1;
        let slot_placed = |x: u8| self.placed[x as usize];
        match e.marks {
            SlotMarks::TwoExtreme(a, b) => {
                let boundary = s == a || s == b;
                if k == 0 || last {
                    boundary
                } else {
                    !boundary
                }
            }
            SlotMarks::MinMarked(a) => s == a || slot_placed(a),
            SlotMarks::MinMax(a, b) => {
                if s != a && !slot_placed(a) {
                    return false;
                }
                if s == b {
                    last
                } else {
                    !slot_placed(b)
                }
            }
            SlotMarks::OneExtreme(a) => {
                if s != a && slot_placed(a) && self.first_placed[ei] != a {
                    return false; // the mark is already strictly interior
                }
                if last {
                    s == a || self.first_placed[ei] == a
                } else {
                    true
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_natural, gen_two_extreme_tight};
    use crate::helly::{clique_from_digits, marking_choices};
    use crate::model::{MarkVariant, MarkedEdge};
    use crate::rng::SplitMix64;

    fn lex_next(perm: &mut [VertexId]) -> bool {
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

    /// Plain n!-filter used as the independent reference.
    fn brute_orders(h: &MarkedHypergraph, subset: &[VertexId]) -> Vec<Vec<VertexId>> {
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

    #[test]
    fn natural_clique_decides_to_identity() {
        let h = gen_natural(3, 4, MarkVariant::TwoExtreme).unwrap();
        let result = decide(&h, &[1, 2, 3, 4]);
        assert!(result.exists);
        assert_eq!(result.order.unwrap().seq(), &[1, 2, 3, 4]);
    }

    #[test]
    fn tight_clique_fails_whole_but_all_five_subsets_pass() {
        let h = gen_two_extreme_tight(4).unwrap();
        assert!(!decide(&h, &h.vertex_vec()).exists);
        for drop in 1..=6u32 {
            let subset: Vec<VertexId> = (1..=6).filter(|&v| v != drop).collect();
            assert!(decide(&h, &subset).exists, "subset without {drop}");
        }
    }

    #[test]
    fn uniqueness_at_seven_vertices() {
        let h = gen_natural(4, 7, MarkVariant::TwoExtreme).unwrap();
        let orders = enumerate(&h, &h.vertex_vec(), None);
        assert_eq!(orders.len(), 2);
        assert_eq!(orders[0].dual(), orders[1]);
    }

    #[test]
    fn single_edge_has_swappable_middles() {
        let h = gen_natural(4, 4, MarkVariant::TwoExtreme).unwrap();
        let orders = enumerate(&h, &[1, 2, 3, 4], None);
        assert!(orders.len() >= 4);
        assert_eq!(orders.len(), 4); // 2 end choices x 2! middles
    }

    #[test]
    fn empty_subset_has_exactly_the_empty_order() {
        let h = gen_natural(3, 4, MarkVariant::MinMarked).unwrap();
        let orders = enumerate(&h, &[], None);
        assert_eq!(orders.len(), 1);
        assert!(orders[0].is_empty());
    }

    #[test]
    fn enumeration_respects_limit_and_lex_order() {
        let h = gen_natural(4, 4, MarkVariant::TwoExtreme).unwrap();
        let all = enumerate(&h, &[1, 2, 3, 4], None);
        let some = enumerate(&h, &[1, 2, 3, 4], Some(2));
        assert_eq!(&all[..2], &some[..]);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.seq().cmp(b.seq()));
        assert_eq!(all, sorted);
    }

    #[test]
    fn matches_brute_filter_on_random_instances() {
        let mut rng = SplitMix64::new(0xface);
        for case in 0..60 {
            let variant = MarkVariant::ALL[case % 4];
            let r = 3;
            let n = 3 + (rng.next_below(3) as u32); // 3..=5
            let edges = crate::comb::binomial(n as u64, r as u64) as usize;
            let choices = marking_choices(variant, r);
            let digits: Vec<u32> = (0..edges).map(|_| rng.next_below(choices) as u32).collect();
            let h = clique_from_digits(variant, r, n, &digits);
            let fast: Vec<Vec<VertexId>> = enumerate(&h, &h.vertex_vec(), None)
                .into_iter()
                .map(|o| o.seq().to_vec())
                .collect();
            assert_eq!(fast, brute_orders(&h, &h.vertex_vec()));
        }
    }

    #[test]
    fn subset_query_equals_restriction_query() {
        let mut rng = SplitMix64::new(7);
        for case in 0..40 {
            let variant = MarkVariant::ALL[case % 4];
            let n = 5;
            let edges = crate::comb::binomial(n, 3) as usize;
            let digits: Vec<u32> = (0..edges)
                .map(|_| rng.next_below(marking_choices(variant, 3)) as u32)
                .collect();
            let h = clique_from_digits(variant, 3, n as u32, &digits);
            let subset: Vec<VertexId> = (1..=5).filter(|_| rng.next_below(2) == 0).collect();
            let (sub, back) = h.restrict(&subset);
            let direct = decide(&h, &subset);
            let relabeled = decide(&sub, &sub.vertex_vec());
            assert_eq!(direct.exists, relabeled.exists);
            if let (Some(a), Some(b)) = (direct.order, relabeled.order) {
                let mapped: Vec<VertexId> = b.seq().iter().map(|&v| back[v as usize - 1]).collect();
                assert_eq!(a.seq(), &mapped[..]);
            }
        }
    }

    #[test]
    fn dual_closure_makes_counts_even() {
        let mut rng = SplitMix64::new(99);
        for case in 0..40 {
            let variant = if case % 2 == 0 {
                MarkVariant::TwoExtreme
            } else {
                MarkVariant::OneExtreme
            };
            let n = 4 + (case % 2) as u32;
            let edges = crate::comb::binomial(n as u64, 3) as usize;
            let digits: Vec<u32> = (0..edges)
                .map(|_| rng.next_below(marking_choices(variant, 3)) as u32)
                .collect();
            let h = clique_from_digits(variant, 3, n, &digits);
            let count = enumerate(&h, &h.vertex_vec(), None).len();
            assert_eq!(count % 2, 0, "{h:?}");
        }
    }

    #[test]
    fn non_clique_instances_are_supported() {
        // two overlapping min&max edges with conflicting maxima
        let e1 = MarkedEdge::new(vec![1, 2, 3], Marks::MinMax(1, 3)).unwrap();
        let e2 = MarkedEdge::new(vec![2, 3, 4], Marks::MinMax(3, 2)).unwrap();
        let h = MarkedHypergraph::new(4, 3, MarkVariant::MinMax, vec![e1, e2]).unwrap();
        assert!(!h.is_clique());
        assert!(!decide(&h, &h.vertex_vec()).exists);
    }
}
