//! Exact rational arithmetic, Bernoulli numbers, and l-divisibility.
//!
//! Every quantity the congruence criteria test lives here as a reduced
//! arbitrary-precision rational: Bernoulli numbers B_k, the values
//! B_k/2k, cusp constant terms, Fourier coefficients.  "l divides a
//! fraction" always means l divides the numerator of the reduced form.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::primes::{is_prime, mod_inv};

/// Exact reduced rational; numerator and denominator are arbitrary
/// precision, the denominator is positive, and gcd(|num|, den) = 1.
/// `BigRational` maintains exactly these invariants on construction.
pub type BigRat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("index {0} exceeds the Bernoulli cap {1}")]
    BernoulliCap(usize, usize),
    #[error("{0} divides the denominator: value is not {0}-integral")]
    NotLIntegral(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

// ---- Bernoulli numbers ----

/// Memoized Bernoulli numbers, convention B_1 = -1/2.
///
/// Built by the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
/// The shared table behind [`bernoulli`] grows under a single mutex, so
/// concurrent readers are safe.
pub struct BernoulliTable {
    values: Vec<BigRat>,
    cap: usize,
}

pub const DEFAULT_BERNOULLI_CAP: usize = 10_000;

impl BernoulliTable {
    pub fn new(cap: usize) -> Self {
        BernoulliTable {
            values: vec![BigRat::one()],
            cap,
        }
    }

    /// B_k, extending the table as needed.
    pub fn get(&mut self, k: usize) -> Result<BigRat, ArithError> {
        if k > self.cap {
            return Err(ArithError::BernoulliCap(k, self.cap));
        }
        while self.values.len() <= k {
            let m = self.values.len();
            // C(m+1, j) running binomial; B_m = -1/(m+1) sum_{j<m} C(m+1,j) B_j
            let mut acc = BigRat::zero();
            let mut binom = BigInt::one();
            for (j, bj) in self.values.iter().enumerate() {
                if !bj.is_zero() {
                    acc += bj * &binom;
                }
                binom = binom * BigInt::from((m + 1 - j) as u64) / BigInt::from((j + 1) as u64);
            }
            let bm = -acc / BigRat::from_integer(BigInt::from((m + 1) as u64));
            self.values.push(bm);
        }
        Ok(self.values[k].clone())
    }
}

static BERNOULLI: Mutex<Option<BernoulliTable>> = Mutex::new(None);

/// The exact Bernoulli number B_k (B_1 = -1/2; zero for odd k >= 3).
pub fn bernoulli(k: usize) -> Result<BigRat, ArithError> {
    let mut guard = BERNOULLI.lock().expect("bernoulli table poisoned");
    guard
        .get_or_insert_with(|| BernoulliTable::new(DEFAULT_BERNOULLI_CAP))
        .get(k)
}

/// B_k / 2k, the constant-term factor of the weight-k Eisenstein series.
pub fn bernoulli_over_2k(k: u64) -> Result<BigRat, ArithError> {
    if k == 0 {
        return Err(ArithError::Precondition("k must be positive".into()));
    }
    Ok(bernoulli(k as usize)? / rat_int(2 * k as i64))
}

// ---- l-divisibility and residues ----

/// True iff l divides the numerator of the reduced fraction x.
pub fn ell_divides(x: &BigRat, ell: u64) -> bool {
    (x.numer() % BigInt::from(ell)).is_zero()
}

/// The residue of x in F_l: num(x) * den(x)^{-1} mod l.
///
/// Fails with `NotLIntegral` when l divides the denominator.
pub fn rational_residue(x: &BigRat, ell: u64) -> Result<u64, ArithError> {
    let ell_big = BigInt::from(ell);
    if (x.denom() % &ell_big).is_zero() {
        return Err(ArithError::NotLIntegral(ell));
    }
    let num = x.numer().mod_floor(&ell_big).to_u64().expect("residue fits");
    let den = x.denom().mod_floor(&ell_big).to_u64().expect("residue fits");
    let inv = mod_inv(den, ell).expect("denominator invertible mod l");
    Ok(num * inv % ell)
}

trait ModFloor {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

/// Kummer's congruence test: B_k/k = B_k2/k2 (mod l) as residues.
///
/// Preconditions (returned as errors when violated): l >= 5 prime,
/// k = k2 (mod l-1), and neither weight is divisible by l-1.  Under
/// these, B_k/k is l-integral by the von Staudt-Clausen/Adams facts.
pub fn kummer_congruent(k: u64, k2: u64, ell: u64) -> Result<bool, ArithError> {
    if ell < 5 || !is_prime(ell) {
        return Err(ArithError::Precondition(format!("l = {ell} must be a prime >= 5")));
    }
    if k == 0 || k2 == 0 || k % 2 != 0 || k2 % 2 != 0 {
        return Err(ArithError::Precondition("weights must be positive and even".into()));
    }
    if (k % (ell - 1)) != (k2 % (ell - 1)) {
        return Err(ArithError::Precondition(format!("{k} and {k2} differ mod {}", ell - 1)));
    }
    if k % (ell - 1) == 0 {
        return Err(ArithError::Precondition(format!("weights are 0 mod {}", ell - 1)));
    }
    let lhs = bernoulli(k as usize)? / rat_int(k as i64);
    let rhs = bernoulli(k2 as usize)? / rat_int(k2 as i64);
    Ok(rational_residue(&lhs, ell)? == rational_residue(&rhs, ell)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::primes_up_to;

    /// Independent Bernoulli oracle: the Worpitzky double sum
    /// B_n = sum_{j=0}^{n} 1/(j+1) sum_{r=0}^{j} (-1)^r C(j,r) r^n.
    fn bernoulli_worpitzky(n: usize) -> BigRat {
        if n == 0 {
            return BigRat::one();
        }
        let mut total = BigRat::zero();
        for j in 0..=n {
            let mut inner = BigInt::zero();
            let mut binom = BigInt::one();
            for r in 0..=j {
                let term = &binom * BigInt::from(r as u64).pow(n as u32);
                if r % 2 == 0 {
                    inner += term;
                } else {
                    inner -= term;
                }
                if r < j {
                    binom = binom * BigInt::from((j - r) as u64) / BigInt::from((r + 1) as u64);
                }
            }
            total += BigRat::new(inner, BigInt::from((j + 1) as u64));
        }
        total
    }

    #[test]
    fn test_bernoulli_against_worpitzky_oracle() {
        for k in 0..=40 {
            assert_eq!(bernoulli(k).unwrap(), bernoulli_worpitzky(k), "B_{k}");
        }
    }

    #[test]
    fn test_bernoulli_known_values() {
        assert_eq!(bernoulli(0).unwrap(), rat_int(1));
        assert_eq!(bernoulli(1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
    }

    #[test]
    fn test_bernoulli_odd_vanishes() {
        for k in (3..200).step_by(2) {
            assert!(bernoulli(k).unwrap().is_zero(), "B_{k} should vanish");
        }
    }

    #[test]
    fn test_bernoulli_cap() {
        let mut small = BernoulliTable::new(10);
        assert!(small.get(11).is_err());
        assert_eq!(small.get(10).unwrap(), bernoulli(10).unwrap());
    }

    #[test]
    fn test_von_staudt_clausen_denominators() {
        // den(B_k) = prod of primes p with (p-1) | k, for even k
        for k in (2..=200u64).step_by(2) {
            let expected: BigInt = primes_up_to(k + 1)
                .into_iter()
                .filter(|&p| k % (p - 1) == 0)
                .map(BigInt::from)
                .product();
            assert_eq!(bernoulli(k as usize).unwrap().denom(), &expected, "k = {k}");
        }
    }

    #[test]
    fn test_ell_divides() {
        // Ramanujan's 691: B_12 / 24 = -691/65520
        let x = bernoulli_over_2k(12).unwrap();
        assert_eq!(x, rat(-691, 65520));
        assert!(ell_divides(&x, 691));
        assert!(!ell_divides(&rat(1, 6), 5));
        assert!(ell_divides(&rat(-3430, 9), 5));
    }

    #[test]
    fn test_ell_divides_reduction_invariance() {
        // constructing from (c*num, c*den) cannot change the verdict
        for c in [2i64, -3, 7, 360] {
            let x = BigRational::new(BigInt::from(10 * c), BigInt::from(9 * c));
            assert!(ell_divides(&x, 5));
            assert!(!ell_divides(&x, 3));
        }
    }

    #[test]
    fn test_rational_residue() {
        assert_eq!(rational_residue(&rat(1, 6), 5).unwrap(), 1);
        assert_eq!(rational_residue(&rat_int(0), 7).unwrap(), 0);
        assert_eq!(rational_residue(&rat(410, 3), 5).unwrap(), 0);
        assert_eq!(rational_residue(&rat(1, 5), 5), Err(ArithError::NotLIntegral(5)));
        // negative numerators reduce into 0..l-1
        assert_eq!(rational_residue(&rat(-1, 1), 5).unwrap(), 4);
    }

    #[test]
    fn test_kummer_examples() {
        assert!(kummer_congruent(6, 2, 5).unwrap());
        assert!(kummer_congruent(2, 2, 7).unwrap());
        assert!(kummer_congruent(16, 4, 13).unwrap());
    }

    #[test]
    fn test_kummer_preconditions() {
        assert!(kummer_congruent(6, 2, 4).is_err()); // not prime
        assert!(kummer_congruent(8, 2, 5).is_err()); // 8 != 2 mod 4
        assert!(kummer_congruent(8, 4, 5).is_err()); // both 0 mod 4
    }
}
