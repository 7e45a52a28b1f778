//! Small combinatorial iteration helpers used by the kernels.

use num::bigint::BigInt;
use num::One;

use crate::partitions::factorial;

/// Advance `v` to its next lexicographic permutation, returning false once
/// the last one has been visited.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct arrangements of a multiset of values, together with the
/// number of permutations in `S_m` that realize each arrangement
/// (the product of multiplicities-factorials).
///
/// Summing `f` over all of `S_m` equals `multiplicity * sum over distinct
/// arrangements of f`.
pub(crate) fn distinct_arrangements(values: &[u32]) -> (Vec<Vec<u32>>, BigInt) {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut multiplicity = BigInt::one();
    let mut run = 0u32;
    for i in 0..sorted.len() {
        run += 1;
        if i + 1 == sorted.len() || sorted[i + 1] != sorted[i] {
            multiplicity *= factorial(run as u64);
            run = 0;
        }
    }
    let mut out = Vec::new();
    loop {
        out.push(sorted.clone());
        if !next_permutation(&mut sorted) {
            break;
        }
    }
    (out, multiplicity)
}

/// Visit every multiset of size `k` drawn from `0..pool` as a weakly
/// increasing index vector.
pub(crate) fn for_each_multiset_indices(pool: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(pool: usize, k: usize, start: usize, stack: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if stack.len() == k {
            f(stack);
            return;
        }
        for i in start..pool {
            stack.push(i);
            rec(pool, k, i, stack, f);
            stack.pop();
        }
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut stack = Vec::with_capacity(k);
    rec(pool, k, 0, &mut stack, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangements_of_multiset() {
        let (arrs, mult) = distinct_arrangements(&[1, 1, 2]);
        assert_eq!(arrs.len(), 3);
        assert_eq!(mult, BigInt::from(2));
        let (arrs, mult) = distinct_arrangements(&[1, 1, 1, 1]);
        assert_eq!(arrs.len(), 1);
        assert_eq!(mult, BigInt::from(24));
    }

    #[test]
    fn multiset_indices_count() {
        let mut count = 0;
        for_each_multiset_indices(3, 2, |_| count += 1);
        assert_eq!(count, 6); // C(3+2-1, 2)
    }
}
