//! Witness search on the modular hyperbola x₁·x₂ ≡ λ (mod q): find pairs
//! whose coordinates both pass the prefix-bounded quotient test.

use exact_core::{Error, Result};

use crate::enumerate::{b_membership, gcd};

/// Modular inverse of a mod m (both ≥ 1, coprime), by extended Euclid
/// over i128 to dodge intermediate overflow.
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

/// All ordered pairs (x₁, x₂) with 1 ≤ xᵢ < q, x₁·x₂ ≡ λ (mod q), where
/// x₁ passes the prefix test at (k, t₁) and x₂ passes it at (k, t₂).
/// Requires gcd(λ, q) = 1 (otherwise no solution has both coordinates
/// invertible, and the hyperbola degenerates).
pub fn hyperbola_search(q: u64, lambda: u64, k: u64, t1: u64, t2: u64) -> Result<Vec<(u64, u64)>> {
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
    let mut witnesses = Vec::new();
    for x1 in 1..q {
        if gcd(x1, q) != 1 {
            continue;
        }
        if !b_membership(x1, q, k, t1)? {
            continue;
        }
        let x2 = (lam as u128 * mod_inverse(x1, q) as u128 % q as u128) as u64;
        if x2 == 0 {
            continue; // only when q = 1, excluded above
        }
        if b_membership(x2, q, k, t2)? {
            witnesses.push((x1, x2));
        }
    }
    Ok(witnesses)
}

/// First witness, if any — the search order is increasing x₁.
pub fn hyperbola_witness(
    q: u64,
    lambda: u64,
    k: u64,
    t1: u64,
    t2: u64,
) -> Result<Option<(u64, u64)>> {
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
    for x1 in 1..q {
        if gcd(x1, q) != 1 {
            continue;
        }
        if !b_membership(x1, q, k, t1)? {
            continue;
        }
        let x2 = (lam as u128 * mod_inverse(x1, q) as u128 % q as u128) as u64;
        if b_membership(x2, q, k, t2)? {
            return Ok(Some((x1, x2)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::primes::primes_up_to;

    #[test]
    fn modular_inverses_invert() {
        for m in 2..200u64 {
            for a in 1..m {
                if gcd(a, m) == 1 {
                    let inv = mod_inverse(a, m);
                    assert_eq!(a * inv % m, 1, "a={a} m={m}");
                }
            }
        }
    }

    #[test]
    fn thirteen_has_the_five_times_eight_witness() {
        let pairs = hyperbola_search(13, 1, 2, 13, 13).unwrap();
        assert!(pairs.contains(&(5, 8)), "pairs = {pairs:?}");
        // x1 = 1 needs its own expansion [0; q] bounded, so it only
        // appears when q <= k
        assert!(pairs.iter().all(|&(x1, _)| x1 != 1));
        // every reported pair actually lies on the hyperbola
        for (x1, x2) in &pairs {
            assert_eq!(x1 * x2 % 13, 1);
        }
    }

    #[test]
    fn trivial_coordinate_appears_only_for_tiny_moduli() {
        // q = 2: 1·1 ≡ 1, and 1/2 = [0; 2] has quotient 2 ≤ k
        let pairs = hyperbola_search(2, 1, 2, 2, 2).unwrap();
        assert_eq!(pairs, vec![(1, 1)]);
        // q = 7 > k = 2: 1/7 = [0; 7] breaks the bound at threshold 7
        let pairs = hyperbola_search(7, 1, 2, 7, 7).unwrap();
        assert!(pairs.iter().all(|&(x1, x2)| x1 != 1 && x2 != 1));
    }

    #[test]
    fn witness_matches_full_search_head() {
        let pairs = hyperbola_search(101, 3, 3, 101, 101).unwrap();
        let head = hyperbola_witness(101, 3, 3, 101, 101).unwrap();
        assert_eq!(head, pairs.first().copied());
    }

    #[test]
    fn all_midsize_primes_have_five_bounded_witnesses() {
        for p in primes_up_to(500) {
            if p <= 100 {
                continue;
            }
            let w = hyperbola_witness(p, 1, 5, p, p).unwrap();
            assert!(w.is_some(), "no witness at p = {p}");
            let (x1, x2) = w.unwrap();
            assert_eq!(x1 as u128 * x2 as u128 % p as u128, 1);
        }
    }

    #[test]
    fn degenerate_lambda_is_rejected() {
        assert!(hyperbola_search(12, 4, 3, 12, 12).is_err());
        assert!(hyperbola_witness(12, 4, 3, 12, 12).is_err());
    }
}
