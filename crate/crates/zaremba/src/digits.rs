//! Integers whose base-s digits avoid a prescribed set: membership
//! enumeration, residue coverage modulo q, and multiplicative witness
//! pairs on x₁·x₂ ≡ λ (mod q) with both coordinates digit-restricted.

use std::collections::BTreeMap;

use exact_core::{Error, Result};

use crate::enumerate::gcd;

/// The set of positive integers whose base-s expansion uses only the
/// digits in `digits`. The digit list must contain 0, must omit at least
/// one nonzero digit, and its nonzero part must have gcd 1 (otherwise
/// every member shares that factor and residues degenerate).
#[derive(Clone, Debug)]
pub struct MissingDigitSet {
    s: u64,
    digits: Vec<u64>,
}

impl MissingDigitSet {
    pub fn new(s: u64, digits: &[u64]) -> Result<Self> {
        if s < 3 {
            return Err(Error::InvalidInput(
                "need a base s >= 3 to omit a digit and keep a nonzero one".into(),
            ));
        }
        let mut ds = digits.to_vec();
        ds.sort_unstable();
        ds.dedup();
        if ds.len() != digits.len() {
            return Err(Error::InvalidInput("digits must be distinct".into()));
        }
        if ds.first() != Some(&0) {
            return Err(Error::InvalidInput("the digit 0 must be allowed".into()));
        }
        if ds.iter().any(|&d| d >= s) {
            return Err(Error::InvalidInput("digits must be smaller than the base".into()));
        }
        let k = ds.len() - 1; // number of nonzero digits
        if k < 1 || k as u64 > s - 2 {
            return Err(Error::InvalidInput(format!(
                "need between 1 and {} nonzero digits, got {k}",
                s - 2
            )));
        }
        let g = ds[1..].iter().fold(0u64, |acc, &d| gcd(acc, d));
        if g != 1 {
            return Err(Error::InvalidInput(format!(
                "nonzero digits must have gcd 1, got {g}"
            )));
        }
        Ok(MissingDigitSet { s, digits: ds })
    }

    pub fn base(&self) -> u64 {
        self.s
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// All members ≤ n in increasing order. Members are built most
    /// significant digit first: a member is a nonzero digit followed by
    /// any string of allowed digits.
    pub fn members(&self, n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut frontier: Vec<u64> = self.digits[1..]
            .iter()
            .copied()
            .filter(|&d| d <= n)
            .collect();
        while !frontier.is_empty() {
            out.extend_from_slice(&frontier);
            let mut next = Vec::new();
            for &x in &frontier {
                for &d in &self.digits {
                    match x.checked_mul(self.s).and_then(|v| v.checked_add(d)) {
                        Some(y) if y <= n => next.push(y),
                        _ => {}
                    }
                }
            }
            frontier = next;
        }
        out.sort_unstable();
        out
    }

    /// Smallest member ≤ n congruent to `residue` mod q, if any.
    pub fn residue_witness(&self, q: u64, residue: u64, n: u64) -> Result<Option<u64>> {
        if q < 1 {
            return Err(Error::InvalidInput("need q >= 1".into()));
        }
        let r = residue % q;
        Ok(self.members(n).into_iter().find(|&x| x % q == r))
    }

    /// Which residues mod q the members up to q³ reach: (covered, q).
    pub fn residue_coverage(&self, q: u64) -> Result<(u64, u64)> {
        if q < 1 {
            return Err(Error::InvalidInput("need q >= 1".into()));
        }
        let n = q
            .checked_mul(q)
            .and_then(|v| v.checked_mul(q))
            .ok_or_else(|| Error::OutOfRange("q^3 overflows u64".into()))?;
        let mut seen = vec![false; q as usize];
        let mut covered = 0u64;
        for x in self.members(n) {
            let r = (x % q) as usize;
            if !seen[r] {
                seen[r] = true;
                covered += 1;
            }
        }
        Ok((covered, q))
    }

    /// Pairs (x₁, x₂) of members ≤ n with x₁·x₂ ≡ λ (mod q): for each
    /// feasible first coordinate in increasing order, the smallest
    /// completing second coordinate. Requires gcd(λ, q) = 1, so only
    /// first coordinates coprime to q can be completed.
    pub fn product_witnesses(&self, q: u64, lambda: u64, n: u64) -> Result<Vec<(u64, u64)>> {
        if q < 2 {
            return Err(Error::InvalidInput("need a modulus q >= 2".into()));
        }
        let lam = lambda % q;
        if gcd(lam, q) != 1 {
            return Err(Error::InvalidInput(format!(
                "need gcd(lambda, q) = 1, got gcd({lam}, {q}) = {}",
                gcd(lam, q)
            )));
        }
        let members = self.members(n);
        let mut smallest_by_residue: BTreeMap<u64, u64> = BTreeMap::new();
        for &x in &members {
            smallest_by_residue.entry(x % q).or_insert(x);
        }
        let mut out = Vec::new();
        for &x1 in &members {
            if gcd(x1 % q, q) != 1 {
                continue;
            }
            let want = (lam as u128 * mod_inverse(x1 % q, q) as u128 % q as u128) as u64;
            if let Some(&x2) = smallest_by_residue.get(&want) {
                out.push((x1, x2));
            }
        }
        Ok(out)
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    debug_assert_eq!(old_r, 1, "inputs must be coprime");
    (old_s.rem_euclid(m as i128)) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary_decimal() -> MissingDigitSet {
        MissingDigitSet::new(10, &[0, 1]).unwrap()
    }

    #[test]
    fn zero_one_members_up_to_one_hundred() {
        assert_eq!(binary_decimal().members(100), vec![1, 10, 11, 100]);
    }

    #[test]
    fn members_agree_with_a_digit_check_oracle() {
        let set = MissingDigitSet::new(5, &[0, 2, 3]).unwrap();
        let members = set.members(2000);
        let is_member = |mut x: u64| -> bool {
            if x == 0 {
                return false;
            }
            while x > 0 {
                if !matches!(x % 5, 0 | 2 | 3) {
                    return false;
                }
                x /= 5;
            }
            true
        };
        let expected: Vec<u64> = (1..=2000).filter(|&x| is_member(x)).collect();
        assert_eq!(members, expected);
    }

    #[test]
    fn constructor_enforces_the_shape_rules() {
        assert!(MissingDigitSet::new(10, &[1, 2]).is_err(), "missing 0");
        assert!(MissingDigitSet::new(10, &[0, 2, 4]).is_err(), "gcd 2");
        assert!(MissingDigitSet::new(10, &[0, 12]).is_err(), "digit >= base");
        assert!(MissingDigitSet::new(10, &[0, 1, 1]).is_err(), "duplicate");
        assert!(MissingDigitSet::new(2, &[0, 1]).is_err(), "no digit missing");
        assert!(
            MissingDigitSet::new(10, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]).is_err(),
            "full digit set"
        );
        assert!(MissingDigitSet::new(10, &[0]).is_err(), "no nonzero digit");
        assert!(MissingDigitSet::new(10, &[0, 1, 2, 3, 4, 5, 6, 7, 8]).is_ok());
    }

    #[test]
    fn unit_pair_witnesses_lambda_one() {
        let set = binary_decimal();
        let pairs = set.product_witnesses(7, 1, 100).unwrap();
        assert!(pairs.contains(&(1, 1)));
        for (x1, x2) in pairs {
            assert_eq!(x1 * x2 % 7, 1);
        }
    }

    #[test]
    fn residue_witness_finds_the_smallest_member() {
        let set = binary_decimal();
        // members mod 3: 1 -> 1, 10 -> 1, 11 -> 2, 100 -> 1, ...
        assert_eq!(set.residue_witness(3, 1, 100).unwrap(), Some(1));
        assert_eq!(set.residue_witness(3, 2, 100).unwrap(), Some(11));
        assert_eq!(set.residue_witness(3, 0, 100).unwrap(), None);
        // 0 mod 3 needs a longer member: 111 ≡ 0
        assert_eq!(set.residue_witness(3, 0, 200).unwrap(), Some(111));
    }

    #[test]
    fn coverage_counts_distinct_residues_exactly() {
        let set = binary_decimal();
        // members(27) = {1, 10, 11} -> residues {1, 1, 2} mod 3
        assert_eq!(set.residue_coverage(3).unwrap(), (2, 3));
        // richer digit sets cover everything for small q
        let rich = MissingDigitSet::new(10, &[0, 1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(rich.residue_coverage(7).unwrap(), (7, 7));
    }

    #[test]
    fn coverage_reports_exist_for_all_small_moduli() {
        let set = binary_decimal();
        for q in 1..=200u64 {
            let (covered, modulus) = set.residue_coverage(q).unwrap();
            assert_eq!(modulus, q);
            assert!(covered >= 1, "q = {q} covers nothing");
            assert!(covered <= q);
        }
    }

    #[test]
    fn degenerate_product_modulus_is_rejected() {
        let set = binary_decimal();
        assert!(set.product_witnesses(10, 5, 100).is_err());
    }
}
