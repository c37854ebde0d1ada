//! p-adic valuation and norm of rationals.

use crate::error::Result;
use crate::primes::require_prime;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// p-adic valuation `v_p(x)` of a nonzero rational: the exponent of `p` in
/// the factorization of `x`. Returns `None` for `x = 0` (conventionally
/// `+infinity`). Fails when `p` is not prime.
pub fn padic_valuation(x: &BigRational, p: u64) -> Result<Option<i64>> {
    require_prime(p)?;
    if x.is_zero() {
        return Ok(None);
    }
    let pb = BigInt::from(p);
    Ok(Some(int_valuation(x.numer(), &pb) - int_valuation(x.denom(), &pb)))
}

/// p-adic norm `|x|_p = p^-v_p(x)` as an exact rational; `|0|_p = 0`.
pub fn padic_norm(x: &BigRational, p: u64) -> Result<BigRational> {
    let v = match padic_valuation(x, p)? {
        None => return Ok(BigRational::zero()),
        Some(v) => v,
    };
    let pow = BigInt::from(p).pow(v.unsigned_abs() as u32);
    Ok(if v >= 0 {
        BigRational::new(BigInt::from(1), pow)
    } else {
        BigRational::from_integer(pow)
    })
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}
