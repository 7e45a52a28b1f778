//! Irreducible characters of the symmetric group.
//!
//! Characters are computed by the Murnaghan–Nakayama rim-hook recursion on
//! beta-sets, stripping the largest part of the class partition first. A
//! [`CharacterTable`] memoizes every sub-instance behind a mutex, so
//! concurrent callers see correct values and never a partial entry.

use std::collections::HashMap;
use std::sync::Mutex;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};

/// Memoized character values for one symmetric group degree `n`.
pub struct CharacterTable {
    n: u32,
    cache: Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        CharacterTable { n, cache: Mutex::new(HashMap::new()) }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// χ_λ(μ): the irreducible character indexed by `lambda` evaluated on
    /// the conjugacy class of cycle type `mu`. Both must be partitions of
    /// the table degree.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.weight() != self.n {
            return Err(Error::WeightMismatch { expected: self.n, got: lambda.weight() });
        }
        if mu.weight() != self.n {
            return Err(Error::WeightMismatch { expected: self.n, got: mu.weight() });
        }
        Ok(self.value(lambda.parts(), mu.parts()))
    }

    /// dim λ = n!/h_λ, the character on the identity class.
    pub fn dimension(&self, lambda: &Partition) -> Result<BigInt> {
        if lambda.weight() != self.n {
            return Err(Error::WeightMismatch { expected: self.n, got: lambda.weight() });
        }
        Ok(factorial(self.n as u64) / lambda.hook_product())
    }

    fn value(&self, lambda: &[u32], mu: &[u32]) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = self.cache.lock().unwrap().get(&key) {
            return v;
        }
        let v = self.strip_rim_hooks(lambda, mu);
        self.cache.lock().unwrap().insert(key, v);
        v
    }

    /// Sum over removals of a rim hook of length mu[0], with sign
    /// (-1)^height, recursing on the remaining class parts.
    fn strip_rim_hooks(&self, lambda: &[u32], mu: &[u32]) -> i64 {
        let hook = mu[0] as i64;
        let rest = &mu[1..];
        let k = lambda.len();
        // beta set: strictly decreasing first-column hook lengths
        let beta: Vec<i64> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
            .collect();
        let mut total = 0i64;
        for idx in 0..k {
            let target = beta[idx] - hook;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&b| target < b && b < beta[idx]).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut reduced = beta.clone();
            reduced[idx] = target;
            reduced.sort_unstable_by(|a, b| b.cmp(a));
            let mut shape: Vec<u32> = reduced
                .iter()
                .enumerate()
                .map(|(i, &b)| (b - (k - 1 - i) as i64) as u32)
                .collect();
            while shape.last() == Some(&0) {
                shape.pop();
            }
            total += sign * self.value(&shape, rest);
        }
        total
    }

    /// Snapshot of the memoized entries, for persistence.
    pub fn entries(&self) -> Vec<((Vec<u32>, Vec<u32>), i64)> {
        let mut out: Vec<_> = self.cache.lock().unwrap().iter().map(|(k, &v)| (k.clone(), v)).collect();
        out.sort();
        out
    }

    /// Seed the memo table, e.g. from a previously persisted snapshot.
    /// Entries are trusted as-is.
    pub fn preload(&self, entries: impl IntoIterator<Item = ((Vec<u32>, Vec<u32>), i64)>) {
        let mut cache = self.cache.lock().unwrap();
        for (k, v) in entries {
            cache.insert(k, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use num::bigint::BigInt;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3);
        // trivial representation is 1 everywhere
        for mu in enumerate_partitions(3) {
            assert_eq!(t.character(&p(&[3]), &mu).unwrap(), 1);
        }
        // sign character on a 3-cycle (even permutation)
        assert_eq!(t.character(&p(&[1, 1, 1]), &p(&[3])).unwrap(), 1);
        assert_eq!(t.character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        // standard representation
        assert_eq!(t.character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(t.character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(t.character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn dimensions() {
        let t = CharacterTable::new(3);
        assert_eq!(t.dimension(&p(&[3])).unwrap(), BigInt::from(1));
        assert_eq!(t.dimension(&p(&[2, 1])).unwrap(), BigInt::from(2));
        let t4 = CharacterTable::new(4);
        assert_eq!(t4.dimension(&p(&[2, 2])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn character_on_identity_equals_dimension() {
        for n in 1..=7u32 {
            let t = CharacterTable::new(n);
            let identity = p(&vec![1; n as usize]);
            for lambda in enumerate_partitions(n) {
                let chi = t.character(&lambda, &identity).unwrap();
                assert_eq!(BigInt::from(chi), t.dimension(&lambda).unwrap());
            }
        }
    }

    #[test]
    fn column_orthogonality_small() {
        for n in 1..=6u32 {
            let t = CharacterTable::new(n);
            let classes = enumerate_partitions(n);
            for mu in &classes {
                for nu in &classes {
                    let sum: i64 = classes
                        .iter()
                        .map(|l| t.character(l, mu).unwrap() * t.character(l, nu).unwrap())
                        .sum();
                    let expected = if mu == nu {
                        mu.z_order()
                    } else {
                        BigInt::from(0)
                    };
                    assert_eq!(BigInt::from(sum), expected);
                }
            }
        }
    }

    #[test]
    fn weight_mismatch_is_rejected() {
        let t = CharacterTable::new(4);
        assert!(t.character(&p(&[3]), &p(&[2, 2])).is_err());
        assert!(t.character(&p(&[2, 2]), &p(&[3])).is_err());
    }

    #[test]
    fn concurrent_reads_are_consistent() {
        let t = std::sync::Arc::new(CharacterTable::new(6));
        let classes = enumerate_partitions(6);
        let mut handles = Vec::new();
        for _ in 0..4 {
            let t = t.clone();
            let classes = classes.clone();
            handles.push(std::thread::spawn(move || {
                let mut values = Vec::new();
                for l in &classes {
                    for m in &classes {
                        values.push(t.character(l, m).unwrap());
                    }
                }
                values
            }));
        }
        let first = handles.pop().unwrap().join().unwrap();
        for h in handles {
            assert_eq!(h.join().unwrap(), first);
        }
    }

    #[test]
    fn preload_round_trip() {
        let t = CharacterTable::new(4);
        let _ = t.character(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap();
        let entries = t.entries();
        assert!(!entries.is_empty());
        let fresh = CharacterTable::new(4);
        fresh.preload(entries.clone());
        assert_eq!(fresh.entries(), entries);
    }
}
