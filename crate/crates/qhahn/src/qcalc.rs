//! q-series primitives: q-Pochhammer symbols, q-numbers, q-binomials.
//!
//! All functions are generic over the scalar backend and pure. The
//! q-Pochhammer symbol follows the three-branch definition
//!
//! ```text
//! (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k)          n > 0
//!         = 1                                      n = 0
//!         = prod_{k=1}^{|n|} (1 - a q^{-k})^{-1}   n < 0
//! ```

use crate::scalar::Scalar;
use crate::{Error, Result};

/// q-Pochhammer symbol `(a;q)_n` for any integer `n`.
///
/// The negative branch fails with [`Error::DivisionByZero`] when some factor
/// `1 - a q^{-k}` vanishes, i.e. when `a = q^k` for a required `k`.
pub fn q_pochhammer<S: Scalar>(a: &S, q: &S, n: i64) -> Result<S> {
    let one = S::one();
    if n == 0 {
        return Ok(one);
    }
    if n > 0 {
        let mut acc = one;
        let mut qk = S::one();
        for _ in 0..n {
            acc = acc * (S::one() - a.clone() * qk.clone());
            qk = qk * q.clone();
        }
        return Ok(acc);
    }
    // n < 0
    let mut acc = one;
    for k in 1..=(-n) {
        let factor = S::one() - a.clone() * q.powi(-(k as i32));
        if factor.is_zero() {
            return Err(Error::DivisionByZero(format!(
                "(a;q)_{{{n}}} with a = q^{k}"
            )));
        }
        acc = acc * factor.recip();
    }
    Ok(acc)
}

/// q-number `[n] = (1 - q^n)/(1 - q)`, with the limit value `n` at `q = 1`.
pub fn q_number<S: Scalar>(n: i64, q: &S) -> S {
    if q.is_one() {
        return S::from_int(n);
    }
    let one = S::one();
    (one.clone() - q.powi(n as i32)) / (one - q.clone())
}

/// q-factorial `[n]! = [1][2]...[n]`.
pub fn q_factorial<S: Scalar>(n: i64, q: &S) -> S {
    let mut acc = S::one();
    for k in 1..=n {
        acc = acc * q_number(k, q);
    }
    acc
}

/// Ordinary binomial coefficient as a scalar.
pub fn binomial<S: Scalar>(n: i64, m: i64) -> S {
    if m < 0 || m > n {
        return S::zero();
    }
    let m = m.min(n - m);
    let mut num = S::one();
    let mut den = S::one();
    for i in 0..m {
        num = num * S::from_int(n - i);
        den = den * S::from_int(i + 1);
    }
    num / den
}

/// Ordinary binomial coefficient as a u128 (for state-space counting).
pub fn binomial_u128(n: u64, m: u64) -> u128 {
    if m > n {
        return 0;
    }
    let m = m.min(n - m);
    let mut acc: u128 = 1;
    for i in 0..m {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// q-binomial coefficient `[n over m]_q = (q;q)_n / ((q;q)_m (q;q)_{n-m})`.
///
/// Out-of-range `m` (negative or above `n`) returns zero by convention. At
/// `q = 1` the ordinary binomial coefficient is returned by an explicit
/// branch, avoiding the 0/0 in the product form.
pub fn q_binomial<S: Scalar>(n: i64, m: i64, q: &S) -> S {
    if m < 0 || m > n {
        return S::zero();
    }
    if q.is_one() {
        return binomial(n, m);
    }
    // product form: prod_{i=1}^{m} (1 - q^{n-m+i})/(1 - q^i)
    let m = m.min(n - m);
    let mut acc = S::one();
    for i in 1..=m {
        let num = S::one() - q.powi((n - m + i) as i32);
        let den = S::one() - q.powi(i as i32);
        acc = acc * num / den;
    }
    acc
}
