//! Binomial coefficients and lexicographic k-subset enumeration/ranking.

/// Exact binomial coefficient; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // prefix products are themselves binomials, so the division is exact
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Iterator over the k-subsets of `{1..=n}` in lexicographic order.
pub struct SubsetsLex {
    n: u32,
    k: u32,
    cur: Option<Vec<u32>>,
}

pub fn subsets_lex(n: u32, k: u32) -> SubsetsLex {
    let cur = (k <= n).then(|| (1..=k).collect());
    SubsetsLex { n, k, cur }
}

impl Iterator for SubsetsLex {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.cur.take()?;
        let out = cur.clone();
        let k = self.k as usize;
        let mut next = cur;
        let mut i = k as i64 - 1;
        while i >= 0 && next[i as usize] == self.n - (k as u32 - 1 - i as u32) {
            i -= 1;
        }
        if i >= 0 {
            let i = i as usize;
            next[i] += 1;
            for j in i + 1..k {
                next[j] = next[j - 1] + 1;
            }
            self.cur = Some(next);
        }
        Some(out)
    }
}

/// Lexicographic rank of a sorted k-subset of `{1..=n}` (0-based).
pub fn subset_rank(n: u32, subset: &[u32]) -> u64 {
    let k = subset.len() as u32;
    let mut rank: u128 = 0;
    let mut prev = 0u32;
    for (i, &v) in subset.iter().enumerate() {
        let rem = (k - 1 - i as u32) as u64;
        for x in prev + 1..v {
            rank += binomial((n - x) as u64, rem);
        }
        prev = v;
    }
    rank as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn subsets_lex_order_and_count() {
        let all: Vec<_> = subsets_lex(4, 3).collect();
        assert_eq!(
            all,
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
        assert_eq!(subsets_lex(10, 4).count() as u128, binomial(10, 4));
        let empty: Vec<_> = subsets_lex(5, 0).collect();
        assert_eq!(empty, vec![Vec::<u32>::new()]);
    }

    #[test]
    fn rank_matches_enumeration() {
        for (i, s) in subsets_lex(7, 3).enumerate() {
            assert_eq!(subset_rank(7, &s), i as u64);
        }
    }
}
