//! Integer partitions, their enumeration, and combinatorial statistics.
//!
//! Partitions index conjugacy classes and irreducible representations of the
//! symmetric group, as well as ramification profiles of branch points and
//! colength profiles of branching configurations. The canonical enumeration
//! order everywhere is reverse-lexicographic, so tables and reports are
//! deterministic.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::One;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts (possibly none).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Build from parts in any order; zero or negative entries are rejected.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|: the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ): the number of parts.
    pub fn length(&self) -> u32 {
        self.parts.len() as u32
    }

    /// ℓ*(λ) = |λ| − ℓ(λ), the degree of degeneration of a ramification
    /// profile.
    pub fn colength(&self) -> u32 {
        self.weight() - self.length()
    }

    /// Part multiplicities as (part, count), largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// |aut(λ)| = product of factorials of the part multiplicities.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .map(|&(_, m)| factorial(m as u64))
            .product()
    }

    /// z_λ = ∏ m_i! · i^{m_i}: the order of the stabilizer of a permutation
    /// of cycle type λ.
    pub fn z_order(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .map(|&(part, m)| factorial(m as u64) * BigInt::from(part).pow(m))
            .product()
    }

    /// Product of the hook lengths over all boxes of the Young diagram.
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut product = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as i64 - j as i64 - 1;
                let leg = conj.parts[j] as i64 - i as i64 - 1;
                product *= BigInt::from(arm + leg + 1);
            }
        }
        product
    }

    /// Contents j − i of the boxes, row by row (0-indexed rows/columns).
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as i64 {
                out.push(j - i as i64);
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parse comma-separated positive parts; "" and "[]" are the empty
    /// partition. Parts are sorted into weakly decreasing order.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::ParsePartition(s.to_string()))?;
            if v == 0 {
                return Err(Error::ParsePartition(s.to_string()));
            }
            parts.push(v);
        }
        Partition::from_unsorted(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(de::Error::custom)
    }
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// All partitions of `n` exactly once, in reverse-lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// p(n): the number of partitions of `n`.
pub fn count_partitions(n: u32) -> u64 {
    (0..=n).map(|k| count_partitions_with_length(n, k)).sum()
}

/// p(n, k): the number of partitions of `n` with exactly `k` parts.
pub fn count_partitions_with_length(n: u32, k: u32) -> u64 {
    let (n, k) = (n as usize, k as usize);
    if k > n {
        return 0;
    }
    // p(n, k) = p(n-1, k-1) + p(n-k, k)
    let mut table = vec![vec![0u64; k + 1]; n + 1];
    table[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            table[i][j] = table[i - 1][j - 1] + if i >= j { table[i - j][j] } else { 0 };
        }
    }
    table[n][k]
}

/// All λ ⊢ n with colength `g`, i.e. with exactly n − g parts, in
/// reverse-lexicographic order.
pub fn partitions_with_colength(n: u32, g: u32) -> Vec<Partition> {
    if g > n {
        return Vec::new();
    }
    let len = n - g;
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.length() == len)
        .collect()
}

/// The partition of `n` with `m` parts equal to `l` and `n - m*l` parts
/// equal to 1.
pub fn special_partition(l: u32, m: u32, n: u32) -> Result<Partition> {
    if l == 0 {
        return Err(Error::InvalidPartition(vec![0]));
    }
    if n < m * l {
        return Err(Error::SpecialPartitionTooSmall { l, m, n });
    }
    let mut parts = vec![l; m as usize];
    parts.extend(std::iter::repeat(1).take((n - m * l) as usize));
    Partition::new(parts)
}

/// Euler characteristic χ = 2n − d of an n-sheeted cover with total
/// branching colength d.
pub fn euler_characteristic(n: i64, d: i64) -> i64 {
    2 * n - d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_is_reverse_lexicographic() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        let four = enumerate_partitions(4);
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(four.len(), 5);
    }

    #[test]
    fn length_counts() {
        assert_eq!(count_partitions_with_length(6, 4), 2);
        assert_eq!(count_partitions_with_length(5, 0), 0);
        assert_eq!(count_partitions_with_length(7, 7), 1);
        assert_eq!(count_partitions_with_length(0, 0), 1);
    }

    #[test]
    fn length_counts_sum_to_partition_count() {
        for n in 0..=24 {
            let total: u64 = (0..=n).map(|k| count_partitions_with_length(n, k)).sum();
            assert_eq!(total, enumerate_partitions(n).len() as u64);
            assert_eq!(total, count_partitions(n));
        }
    }

    #[test]
    fn colength_fibers() {
        assert_eq!(partitions_with_colength(5, 0), vec![p(&[1, 1, 1, 1, 1])]);
        assert_eq!(partitions_with_colength(6, 2), vec![p(&[3, 1, 1, 1]), p(&[2, 2, 1, 1])]);
        assert_eq!(partitions_with_colength(3, 2), vec![p(&[3])]);
    }

    #[test]
    fn colength_count_identity_up_to_24() {
        // p(n, n-l) = p(l) whenever n >= 2l
        for n in 2..=24u32 {
            for l in 1..=n / 2 {
                assert_eq!(count_partitions_with_length(n, n - l), count_partitions(l), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn statistics_match_hand_values() {
        assert_eq!(p(&[1, 1, 1]).aut_order(), BigInt::from(6));
        assert_eq!(p(&[2, 2, 1]).aut_order(), BigInt::from(2));
        assert_eq!(p(&[3, 2, 1]).aut_order(), BigInt::from(1));

        assert_eq!(p(&[1, 1, 1, 1]).z_order(), BigInt::from(24));
        assert_eq!(p(&[2, 1]).z_order(), BigInt::from(2));
        assert_eq!(p(&[3]).z_order(), BigInt::from(3));

        assert_eq!(p(&[5]).hook_product(), factorial(5));
        assert_eq!(p(&[2, 1]).hook_product(), BigInt::from(3));
        assert_eq!(p(&[2, 2]).hook_product(), BigInt::from(12));
    }

    #[test]
    fn dimension_integrality() {
        use num::Zero;
        for n in 1..=8u32 {
            for lambda in enumerate_partitions(n) {
                let (quot, rem) = num::Integer::div_rem(&factorial(n as u64), &lambda.hook_product());
                assert!(rem.is_zero());
                assert!(quot > BigInt::zero());
            }
        }
    }

    #[test]
    fn special_partitions() {
        assert_eq!(special_partition(5, 3, 20).unwrap(), p(&[5, 5, 5, 1, 1, 1, 1, 1]));
        assert_eq!(special_partition(2, 1, 4).unwrap(), p(&[2, 1, 1]));
        assert_eq!(special_partition(1, 0, 6).unwrap(), p(&[1, 1, 1, 1, 1, 1]));
        assert!(special_partition(3, 2, 5).is_err());
    }

    #[test]
    fn euler_characteristic_values() {
        assert_eq!(euler_characteristic(6, 2), 10);
        assert_eq!(euler_characteristic(7, 0), 14);
        assert_eq!(euler_characteristic(4, 8), 0);
    }

    #[test]
    fn colength_fiber_cardinality() {
        for n in 2..=12u32 {
            for g in 0..n {
                let fiber = partitions_with_colength(n, g);
                assert_eq!(fiber.len() as u64, count_partitions_with_length(n, n - g));
                for lam in &fiber {
                    assert_eq!(lam.colength(), g);
                }
            }
        }
    }

    #[test]
    fn conjugation_and_contents() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 1]).contents(), vec![0, 1, 2, -1]);
        let mut negated: Vec<i64> = p(&[3, 1]).conjugate().contents().iter().map(|c| -c).collect();
        let mut original = p(&[3, 1]).contents();
        negated.sort_unstable();
        original.sort_unstable();
        assert_eq!(negated, original);
    }

    #[test]
    fn parses_and_serializes() {
        assert_eq!("2,1,1".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("1,3".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("0,1".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1, 1])).unwrap(), "[3,1,1]");
        let back: Partition = serde_json::from_str("[3,1,1]").unwrap();
        assert_eq!(back, p(&[3, 1, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
