//! Classical (unweighted) Hurwitz numbers.
//!
//! The production path is the character sum
//! `H(μ⁽¹⁾,…,μ⁽ᵏ⁾) = Σ_λ h_λ^{k-2} ∏ χ_λ(μ⁽ⁱ⁾)/z_{μ⁽ⁱ⁾}`.
//! A brute-force convolution in the class algebra of S_n serves as an
//! independent oracle for small degrees: it counts factorizations of the
//! identity directly, without characters.

use std::collections::HashMap;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};
use crate::rational::Rational;

/// Largest degree accepted by the class-algebra oracle.
pub const ORACLE_MAX_DEGREE: u32 = 8;

/// Hurwitz number for the given ramification profiles, all partitions of
/// the table degree. The profile list may be empty.
pub fn hurwitz_number(table: &CharacterTable, profiles: &[Partition]) -> Result<Rational> {
    let n = table.n();
    for p in profiles {
        if p.weight() != n {
            return Err(Error::WeightMismatch { expected: n, got: p.weight() });
        }
    }
    let k = profiles.len() as i32;
    let mut total = Rational::zero();
    for lambda in enumerate_partitions(n) {
        let hook = Rational::from_bigint(lambda.hook_product());
        let mut term = hook.pow(k - 2);
        for p in profiles {
            let chi = Rational::from_int(table.character(&lambda, p)?);
            term = term * chi;
            term = term.checked_div(&Rational::from_bigint(p.z_order()))?;
        }
        total += &term;
    }
    Ok(total)
}

/// The center of the group algebra of S_n in the class-sum basis, with
/// structure constants tabulated by brute force over all n! permutations.
pub struct ClassAlgebra {
    n: u32,
    classes: Vec<Partition>,
    class_index: HashMap<Vec<u32>, usize>,
    /// structure[k][m][v] = #{ x in C_m : x^{-1} g_k in C_v }, the
    /// coefficient of C_k in the product C_m * C_v.
    structure: Vec<Vec<Vec<u128>>>,
}

impl ClassAlgebra {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > ORACLE_MAX_DEGREE {
            return Err(Error::OracleDegreeTooLarge { n, max: ORACLE_MAX_DEGREE });
        }
        let classes = enumerate_partitions(n);
        let class_index: HashMap<Vec<u32>, usize> = classes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.parts().to_vec(), i))
            .collect();
        let nc = classes.len();
        let reps: Vec<Vec<u8>> = classes.iter().map(|p| canonical_permutation(p)).collect();
        let mut structure = vec![vec![vec![0u128; nc]; nc]; nc];
        let mut perm: Vec<u8> = (0..n as u8).collect();
        loop {
            let m = class_index[&cycle_type(&perm)];
            let inv = invert(&perm);
            for (k, rep) in reps.iter().enumerate() {
                let product = compose(&inv, rep);
                let v = class_index[&cycle_type(&product)];
                structure[k][m][v] += 1;
            }
            if !crate::util::next_permutation(&mut perm) {
                break;
            }
        }
        Ok(ClassAlgebra { n, classes, class_index, structure })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Counts factorizations of the identity into elements of the given
    /// conjugacy classes and divides by n!.
    pub fn hurwitz_number(&self, profiles: &[Partition]) -> Result<Rational> {
        let nc = self.classes.len();
        let identity = self.class_index[&vec![1u32; self.n as usize]];
        // coefficients of the identity element in the class-sum basis
        let mut coeffs = vec![0u128; nc];
        coeffs[identity] = 1;
        for p in profiles {
            if p.weight() != self.n {
                return Err(Error::WeightMismatch { expected: self.n, got: p.weight() });
            }
            let v = self.class_index[&p.parts().to_vec()];
            let mut next = vec![0u128; nc];
            for (k, slot) in next.iter_mut().enumerate() {
                for m in 0..nc {
                    if coeffs[m] != 0 {
                        *slot += coeffs[m] * self.structure[k][m][v];
                    }
                }
            }
            coeffs = next;
        }
        let count = Rational::from_bigint(coeffs[identity].into());
        count.checked_div(&Rational::from_bigint(factorial(self.n as u64)))
    }
}

/// One-call oracle; builds the structure constants for each invocation.
pub fn hurwitz_number_oracle(n: u32, profiles: &[Partition]) -> Result<Rational> {
    ClassAlgebra::new(n)?.hurwitz_number(profiles)
}

fn cycle_type(perm: &[u8]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// A permutation with the given cycle type, cycles laid out consecutively.
fn canonical_permutation(p: &Partition) -> Vec<u8> {
    let n: u32 = p.weight();
    let mut perm = vec![0u8; n as usize];
    let mut base = 0u32;
    for &part in p.parts() {
        for off in 0..part {
            perm[(base + off) as usize] = (base + (off + 1) % part) as u8;
        }
        base += part;
    }
    perm
}

fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&i| p[i as usize]).collect()
}

fn invert(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn character_sum_examples() {
        let t2 = CharacterTable::new(2);
        assert_eq!(hurwitz_number(&t2, &[p(&[1, 1])]).unwrap(), r(1, 2));
        assert_eq!(hurwitz_number(&t2, &[p(&[2]), p(&[2])]).unwrap(), r(1, 2));
        let t3 = CharacterTable::new(3);
        assert_eq!(hurwitz_number(&t3, &[p(&[3]), p(&[3])]).unwrap(), r(1, 3));
        assert_eq!(hurwitz_number(&t3, &[p(&[2, 1]), p(&[2, 1])]).unwrap(), r(1, 2));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(hurwitz_number_oracle(2, &[p(&[2]), p(&[2])]).unwrap(), r(1, 2));
        assert_eq!(hurwitz_number_oracle(3, &[p(&[3]), p(&[2, 1])]).unwrap(), r(0, 1));
        assert_eq!(
            hurwitz_number_oracle(3, &[p(&[2, 1]), p(&[3]), p(&[2, 1])]).unwrap(),
            r(1, 1)
        );
    }

    #[test]
    fn empty_profile_list() {
        // k = 0 gives sum of h_lambda^{-2} = 1/n!
        for n in 1..=5u32 {
            let t = CharacterTable::new(n);
            let expected = Rational::one()
                .checked_div(&Rational::from_bigint(factorial(n as u64)))
                .unwrap();
            assert_eq!(hurwitz_number(&t, &[]).unwrap(), expected);
            assert_eq!(hurwitz_number_oracle(n, &[]).unwrap(), expected);
        }
    }

    #[test]
    fn oracle_degree_gate() {
        assert!(matches!(
            ClassAlgebra::new(9),
            Err(Error::OracleDegreeTooLarge { n: 9, max: 8 })
        ));
    }

    #[test]
    fn profile_order_does_not_matter() {
        let t = CharacterTable::new(4);
        let a = [p(&[2, 1, 1]), p(&[3, 1]), p(&[2, 2])];
        let b = [p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])];
        assert_eq!(hurwitz_number(&t, &a).unwrap(), hurwitz_number(&t, &b).unwrap());
    }

    #[test]
    fn odd_transposition_products_vanish() {
        for n in 2..=5u32 {
            let t = CharacterTable::new(n);
            let identity = p(&vec![1; n as usize]);
            let transposition = crate::partitions::special_partition(2, 1, n).unwrap();
            for count in [1usize, 3] {
                let mut profiles = vec![transposition.clone(); count];
                profiles.push(identity.clone());
                profiles.push(identity.clone());
                assert!(hurwitz_number(&t, &profiles).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn oracle_matches_characters_exhaustively_small() {
        // all profile pairs for n <= 4 (the full n <= 5, k <= 3 sweep runs
        // in the acceptance suite)
        for n in 2..=4u32 {
            let t = CharacterTable::new(n);
            let algebra = ClassAlgebra::new(n).unwrap();
            let classes = enumerate_partitions(n);
            for a in &classes {
                for b in &classes {
                    let profiles = [a.clone(), b.clone()];
                    assert_eq!(
                        hurwitz_number(&t, &profiles).unwrap(),
                        algebra.hurwitz_number(&profiles).unwrap()
                    );
                }
            }
        }
    }
}
