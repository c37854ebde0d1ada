//! Iterated folding: grow a quotient string whose continuant is an exact
//! power of a chosen base while the maximal partial quotient stays
//! bounded. One fold maps a word with continuant q to a word with
//! continuant q²·(x + 1); choosing x = q₀ − 1 at every step keeps each
//! continuant in the chain a power of q₀.

use exact_core::cf::cf_expand;
use exact_core::rational::rat;
use exact_core::{continuant, fold, BigInt, BigUint, ContinuedFraction, Error, Result, Zero};

use crate::enumerate::gcd;

/// One link of a folding chain.
#[derive(Clone, Debug)]
pub struct FoldStep {
    /// Continuant (denominator) of this step's fraction.
    pub q: BigUint,
    /// Numerator of the fraction the quotient string expands.
    pub a: BigUint,
    /// Largest partial quotient in the string.
    pub max_quotient: u64,
    /// The quotient string itself, in canonical form (final quotient ≥ 2).
    pub quotients: Vec<BigUint>,
}

fn step_from_quotients(quotients: Vec<BigUint>) -> Result<FoldStep> {
    let q = continuant(&quotients);
    let cf = ContinuedFraction::new(BigInt::zero(), quotients)?;
    let value = cf.value();
    if value.denom() != &BigInt::from(q.clone()) {
        return Err(Error::InvalidInput(
            "quotient string does not expand to a reduced fraction with its continuant".into(),
        ));
    }
    let a = value
        .numer()
        .to_biguint()
        .ok_or_else(|| Error::InvalidInput("expected a fraction in (0, 1)".into()))?;
    let max_quotient = cf
        .max_quotient()
        .map(|m| u64::try_from(m.clone()).unwrap_or(u64::MAX))
        .unwrap_or(0);
    Ok(FoldStep {
        q,
        a,
        max_quotient,
        quotients: cf.quotients,
    })
}

/// Apply one fold with parameter x and re-canonicalize the result (a
/// trailing 1 is merged into its neighbor, preserving the value). The
/// continuant identity K(new) = K(old)²·(x + 1) holds exactly.
pub fn fold_once(quotients: &[BigUint], x: &BigUint) -> Result<FoldStep> {
    let folded = fold(quotients, x)?;
    let cf = ContinuedFraction::new(BigInt::zero(), folded)?.normalize();
    step_from_quotients(cf.quotients)
}

/// Pick the seed fraction a/q₀: among numerators coprime to q₀ whose
/// canonical expansion has first and last quotient ≥ 2 (so the folded
/// word stays foldable), take the one with the smallest maximal quotient,
/// breaking ties by the smaller numerator.
pub fn folding_seed(q0: u64) -> Result<FoldStep> {
    if q0 < 2 {
        return Err(Error::InvalidInput("need a base q0 >= 2".into()));
    }
    let mut best: Option<(u64, u64, Vec<BigUint>)> = None;
    for a in 1..q0 {
        if gcd(a, q0) != 1 {
            continue;
        }
        let cf = cf_expand(&rat(a as i64, q0 as i64));
        let two = BigUint::from(2u32);
        let first_ok = cf.quotients.first().map(|b| *b >= two).unwrap_or(false);
        if !first_ok || !cf.is_canonical() {
            continue;
        }
        let m = cf
            .max_quotient()
            .map(|b| u64::try_from(b.clone()).expect("quotient of a/q0 fits in u64"))
            .unwrap_or(0);
        if best.as_ref().map(|(bm, _, _)| m < *bm).unwrap_or(true) {
            best = Some((m, a, cf.quotients.clone()));
        }
    }
    let (_, _, quotients) =
        best.ok_or_else(|| Error::InvalidInput(format!("no usable seed fraction for q0 = {q0}")))?;
    step_from_quotients(quotients)
}

/// Build a folding chain over the base q₀: the seed fraction (step 0)
/// followed by `steps` folds with the fixed parameter x = q₀ − 1, the
/// smallest choice that keeps every continuant an exact power of q₀
/// (since K ↦ K²·q₀). Fails with OutOfRange when the required parameter
/// or the seed itself would exceed the quotient bound `k_target`.
pub fn folding_construct(q0: u64, k_target: u64, steps: usize) -> Result<Vec<FoldStep>> {
    if steps > 32 {
        return Err(Error::BudgetExceeded(format!(
            "folding chain of {steps} steps squares the continuant each time; cap is 32"
        )));
    }
    let seed = folding_seed(q0)?; // also validates q0 >= 2
    let x = q0 - 1;
    if x > k_target {
        return Err(Error::OutOfRange(format!(
            "fold parameter {x} exceeds the quotient bound {k_target}"
        )));
    }
    if seed.max_quotient > k_target {
        return Err(Error::OutOfRange(format!(
            "every admissible seed for base {q0} has a quotient of size {}, above the bound {k_target}",
            seed.max_quotient
        )));
    }
    let x_big = BigUint::from(x);
    let mut chain = vec![seed];
    for _ in 0..steps {
        let prev = chain.last().expect("chain starts nonempty");
        let next = fold_once(&prev.quotients, &x_big)?;
        chain.push(next);
    }
    Ok(chain)
}
