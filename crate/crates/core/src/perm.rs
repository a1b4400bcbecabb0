//! Lazy lexicographic enumeration of permutations. The fixed order makes
//! brute-force tie-breaking (first minimal permutation wins) deterministic.

use crate::model::Assignment;

/// All permutations of `0..k` in lexicographic order of the mapping,
/// generated one at a time. `k = 0` yields exactly one empty mapping.
pub fn permutations(k: usize) -> Permutations {
    Permutations {
        next: Some((0..k).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Assignment;

    fn next(&mut self) -> Option<Assignment> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Assignment::from_permutation(current))
    }
}

/// Advances `seq` to its lexicographic successor in place; returns false at
/// the last permutation.
pub(crate) fn next_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn factorial(n: usize) -> usize {
        (2..=n).product::<usize>().max(1)
    }

    #[test]
    fn three_elements_in_lexicographic_order() {
        let all: Vec<Vec<usize>> = permutations(3).map(|a| a.mapping().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
            ]
        );
    }

    #[test]
    fn single_element() {
        let all: Vec<_> = permutations(1).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].mapping(), &[0]);
    }

    #[test]
    fn empty_yields_one_empty_mapping() {
        let all: Vec<_> = permutations(0).collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].mapping().is_empty());
    }

    #[test]
    fn four_elements_are_distinct_permutations() {
        let mut seen = HashSet::new();
        let mut count = 0;
        for a in permutations(4) {
            let mut sorted = a.mapping().to_vec();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![0, 1, 2, 3]);
            assert!(seen.insert(a.mapping().to_vec()));
            count += 1;
        }
        assert_eq!(count, 24);
    }

    #[test]
    fn counts_match_factorials_up_to_seven() {
        for k in 0..=7 {
            let unique: HashSet<Vec<usize>> =
                permutations(k).map(|a| a.mapping().to_vec()).collect();
            assert_eq!(unique.len(), factorial(k), "k = {k}");
            assert_eq!(permutations(k).count(), factorial(k), "k = {k}");
        }
    }
}
