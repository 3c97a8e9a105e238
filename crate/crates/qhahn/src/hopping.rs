//! Model parameters and the q-Hahn hopping distribution `phi(m|n)`.
//!
//! The single-site weights are
//!
//! ```text
//! v(k) = mu^k (nu/mu;q)_k / (q;q)_k      (evaluated as a polynomial in mu)
//! w(k) = (mu;q)_k / (q;q)_k
//! f(n) = (nu;q)_n / (q;q)_n = sum_k v(k) w(n-k)
//! ```
//!
//! and the hopping distribution is `phi(m|n) = v(m) w(n-m) / f(n)`, the
//! weight function of the q-Hahn polynomials. The closed form and the
//! weight-ratio form are both implemented and must agree exactly.

use crate::qcalc::{binomial, q_binomial, q_number, q_pochhammer};
use crate::scalar::{rat_to_decimal, Rat, Scalar};
use crate::{Error, Result};
use std::fmt::Write as _;

/// Tolerance used when deciding whether parameters sit at a named limit
/// point (`q = 0`, `mu = q nu`, `nu = 0`, `q = 1`).
const LIMIT_TOL: f64 = 1e-5;

/// The parameter triple `(q, mu, nu)` with its derived quantities.
///
/// Derived fields: the Bernoulli parameter `p = (mu - nu)/(1 - nu)` and the
/// quadratic-relation coefficients
///
/// ```text
/// alpha = nu(1-q)/(1-q nu),  beta = (q-nu)/(1-q nu),  gamma = (1-q)/(1-q nu)
/// ```
///
/// which always satisfy `alpha + beta + gamma = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelParams<S: Scalar> {
    pub q: S,
    pub mu: S,
    pub nu: S,
    pub p: S,
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
}

impl<S: Scalar> ModelParams<S> {
    /// Build parameters enforcing the default probabilistic domain
    /// `0 <= nu <= mu < 1`, `|q| < 1`.
    pub fn new(q: S, mu: S, nu: S) -> Result<Self> {
        let qc = q.to_c64();
        let mc = mu.to_c64();
        let nc = nu.to_c64();
        let real = |z: num::complex::Complex64| z.im.abs() <= 1e-12;
        if !(real(qc) && real(mc) && real(nc)) {
            return Err(Error::InvalidInput(
                "default domain requires real parameters; use new_permissive for complex ones"
                    .into(),
            ));
        }
        if !(0.0 <= nc.re && nc.re <= mc.re && mc.re < 1.0) {
            return Err(Error::InvalidInput(format!(
                "need 0 <= nu <= mu < 1, got mu = {}, nu = {}",
                mc.re, nc.re
            )));
        }
        if qc.re.abs() >= 1.0 {
            return Err(Error::InvalidInput(format!("need |q| < 1, got q = {}", qc.re)));
        }
        Self::new_permissive(q, mu, nu)
    }

    /// Build parameters checking only the algebraic singularities
    /// (`q nu != 1`, `nu != 1`). The model remains meaningful beyond the
    /// default domain; nonnegativity of the weights is then the caller's
    /// concern (see [`ModelParams::weights_nonnegative`]).
    pub fn new_permissive(q: S, mu: S, nu: S) -> Result<Self> {
        let one = S::one();
        if (one.clone() - q.clone() * nu.clone()).is_zero() {
            return Err(Error::SingularParams("q nu = 1".into()));
        }
        if (one.clone() - nu.clone()).is_zero() {
            return Err(Error::SingularParams("nu = 1".into()));
        }
        let denom = (one.clone() - nu.clone()).recip();
        let p = (mu.clone() - nu.clone()) * denom;
        let qnu = (one.clone() - q.clone() * nu.clone()).recip();
        let alpha = nu.clone() * (one.clone() - q.clone()) * qnu.clone();
        let beta = (q.clone() - nu.clone()) * qnu.clone();
        let gamma = (one - q.clone()) * qnu;
        Ok(Self { q, mu, nu, p, alpha, beta, gamma })
    }

    /// True iff `v(k) >= 0` and `w(k) >= 0` for all `k <= horizon`
    /// (sufficient for `phi(.|n)` to be a probability distribution up to
    /// `n = horizon`). Only meaningful for real parameters.
    pub fn weights_nonnegative(&self, horizon: usize) -> bool {
        (0..=horizon).all(|k| {
            let v = weight_v(k as i64, self);
            let w = weight_w(k as i64, self);
            match (v, w) {
                (Ok(v), Ok(w)) => v.to_c64().re >= -1e-14 && w.to_c64().re >= -1e-14,
                _ => false,
            }
        })
    }

    /// True iff `nu != q^{-k}` for all `1 <= k <= horizon` (required by the
    /// quantum-binomial theorem; automatic in the default domain).
    pub fn nu_avoids_q_powers(&self, horizon: usize) -> bool {
        (1..=horizon).all(|k| !(self.nu.clone() - self.q.powi(-(k as i32))).is_zero())
    }
}

/// Single-site weight `v(k) = mu^k (nu/mu;q)_k / (q;q)_k`.
///
/// `mu^k (nu/mu;q)_k` is expanded as `prod_{j<k} (mu - nu q^j)` before
/// substitution, so `mu = 0` is regular.
pub fn weight_v<S: Scalar>(k: i64, params: &ModelParams<S>) -> Result<S> {
    if k < 0 {
        return Err(Error::InvalidInput(format!("v(k) needs k >= 0, got {k}")));
    }
    let mut num = S::one();
    let mut qj = S::one();
    for _ in 0..k {
        num = num * (params.mu.clone() - params.nu.clone() * qj.clone());
        qj = qj * params.q.clone();
    }
    let den = q_pochhammer(&params.q, &params.q, k)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero(format!("(q;q)_{k} in v({k})")));
    }
    Ok(num / den)
}

/// Single-site weight `w(k) = (mu;q)_k / (q;q)_k`.
pub fn weight_w<S: Scalar>(k: i64, params: &ModelParams<S>) -> Result<S> {
    if k < 0 {
        return Err(Error::InvalidInput(format!("w(k) needs k >= 0, got {k}")));
    }
    let num = q_pochhammer(&params.mu, &params.q, k)?;
    let den = q_pochhammer(&params.q, &params.q, k)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero(format!("(q;q)_{k} in w({k})")));
    }
    Ok(num / den)
}

/// One-site stationary weight `f(n) = (nu;q)_n / (q;q)_n` (closed form).
pub fn weight_f<S: Scalar>(n: i64, params: &ModelParams<S>) -> Result<S> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("f(n) needs n >= 0, got {n}")));
    }
    let num = q_pochhammer(&params.nu, &params.q, n)?;
    let den = q_pochhammer(&params.q, &params.q, n)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero(format!("(q;q)_{n} in f({n})")));
    }
    Ok(num / den)
}

/// `f(n)` as the convolution `sum_{k=0}^n v(k) w(n-k)`; must equal
/// [`weight_f`] (the q-Vandermonde-type identity behind normalization).
pub fn weight_f_convolution<S: Scalar>(n: i64, params: &ModelParams<S>) -> Result<S> {
    let mut acc = S::zero();
    for k in 0..=n {
        acc = acc + weight_v(k, params)? * weight_w(n - k, params)?;
    }
    Ok(acc)
}

/// Hopping probability `phi(m|n)` from the closed q-Hahn form.
///
/// Returns 0 for `m > n` or `m < 0`; fails if `f(n) = 0` (degenerate
/// parameters outside the default domain).
pub fn phi<S: Scalar>(m: i64, n: i64, params: &ModelParams<S>) -> Result<S> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("phi(m|n) needs n >= 0, got {n}")));
    }
    if m < 0 || m > n {
        return Ok(S::zero());
    }
    let fnn = weight_f(n, params)?;
    if fnn.is_zero() {
        return Err(zero_weight_error(n));
    }
    // mu^m (nu/mu;q)_m as prod_{j<m} (mu - nu q^j)
    let mut head = S::one();
    let mut qj = S::one();
    for _ in 0..m {
        head = head * (params.mu.clone() - params.nu.clone() * qj.clone());
        qj = qj * params.q.clone();
    }
    let num = head * q_pochhammer(&params.mu, &params.q, n - m)?;
    let den = q_pochhammer(&params.nu, &params.q, n)?;
    Ok(num / den * q_binomial(n, m, &params.q))
}

/// `phi(m|n)` through the weight ratio `v(m) w(n-m) / f(n)`.
pub fn phi_via_weights<S: Scalar>(m: i64, n: i64, params: &ModelParams<S>) -> Result<S> {
    if m < 0 || m > n {
        return Ok(S::zero());
    }
    let f = weight_f(n, params)?;
    if f.is_zero() {
        return Err(zero_weight_error(n));
    }
    Ok(weight_v(m, params)? * weight_w(n - m, params)? / f)
}

/// Limiting cases of `phi(m|n)` with closed-form reference values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiLimit {
    /// `q -> 1`: ordinary binomial distribution with success probability `p`.
    Q1Binomial,
    /// `q = 0`: generalized-update TASEP chipping law.
    Q0Generalized,
    /// `mu = q nu`: only single-particle jumps survive, `phi(1|n) = p [n]`.
    SingleJumpQtasep,
    /// `nu = 0`: geometric q-TASEP jump-length law.
    GeometricNu0,
}

/// Closed form of the limiting distribution named by `kind`.
///
/// Fails with [`Error::WrongLimit`] when the parameters are not within
/// `1e-5` of the limit point.
pub fn phi_limit<S: Scalar>(
    kind: PhiLimit,
    m: i64,
    n: i64,
    params: &ModelParams<S>,
) -> Result<S> {
    if n < 0 || m < 0 || m > n {
        return Ok(S::zero());
    }
    let p = &params.p;
    let mu = &params.mu;
    match kind {
        PhiLimit::Q1Binomial => {
            if (params.q.clone() - S::one()).magnitude() > LIMIT_TOL {
                return Err(Error::WrongLimit("q = 1".into()));
            }
            let omp = S::one() - p.clone();
            Ok(p.powi(m as i32) * omp.powi((n - m) as i32) * binomial(n, m))
        }
        PhiLimit::Q0Generalized => {
            if params.q.magnitude() > LIMIT_TOL {
                return Err(Error::WrongLimit("q = 0".into()));
            }
            if n == 0 {
                return Ok(S::one());
            }
            if m == 0 {
                Ok(S::one() - p.clone())
            } else if m == n {
                Ok(p.clone() * mu.powi((n - 1) as i32))
            } else {
                Ok((S::one() - mu.clone()) * p.clone() * mu.powi((m - 1) as i32))
            }
        }
        PhiLimit::SingleJumpQtasep => {
            let defect = params.mu.clone() - params.q.clone() * params.nu.clone();
            if defect.magnitude() > LIMIT_TOL {
                return Err(Error::WrongLimit("mu = q nu".into()));
            }
            if n == 0 {
                return Ok(S::one());
            }
            match m {
                0 => Ok(S::one() - p.clone() * q_number(n, &params.q)),
                1 => Ok(p.clone() * q_number(n, &params.q)),
                _ => Ok(S::zero()),
            }
        }
        PhiLimit::GeometricNu0 => {
            if params.nu.magnitude() > LIMIT_TOL {
                return Err(Error::WrongLimit("nu = 0".into()));
            }
            let head = mu.powi(m as i32) * q_pochhammer(&params.mu, &params.q, n - m)?;
            Ok(head * q_binomial(n, m, &params.q))
        }
    }
}

/// Memoized weight tables `v`, `w`, `f` up to a horizon, for code paths that
/// evaluate `phi` in bulk (matrix construction, sampling).
#[derive(Clone, Debug)]
pub struct WeightTable<S: Scalar> {
    pub params: ModelParams<S>,
    v: Vec<S>,
    w: Vec<S>,
    f: Vec<S>,
}

impl<S: Scalar> WeightTable<S> {
    pub fn build(params: &ModelParams<S>, horizon: usize) -> Result<Self> {
        let mut v = Vec::with_capacity(horizon + 1);
        let mut w = Vec::with_capacity(horizon + 1);
        let mut f = Vec::with_capacity(horizon + 1);
        for k in 0..=horizon as i64 {
            v.push(weight_v(k, params)?);
            w.push(weight_w(k, params)?);
            let fk = weight_f(k, params)?;
            if fk.is_zero() {
                return Err(zero_weight_error(k));
            }
            f.push(fk);
        }
        Ok(Self { params: params.clone(), v, w, f })
    }

    pub fn horizon(&self) -> usize {
        self.f.len() - 1
    }

    /// `phi(m|n)` from the tables; `n` must be within the horizon.
    pub fn phi(&self, m: i64, n: i64) -> Result<S> {
        if n < 0 || n as usize > self.horizon() {
            return Err(Error::HorizonExceeded {
                n: n.max(0) as usize,
                horizon: self.horizon(),
            });
        }
        if m < 0 || m > n {
            return Ok(S::zero());
        }
        Ok(self.v[m as usize].clone() * self.w[(n - m) as usize].clone()
            / self.f[n as usize].clone())
    }
}

/// Render the table of `phi(m|n)` for `n <= n_max` as CSV with columns
/// `n,m,phi`, exact values printed as decimals with `digits` places.
pub fn phi_table_csv(params: &ModelParams<Rat>, n_max: i64, digits: usize) -> Result<String> {
    let mut out = String::from("n,m,phi\n");
    for n in 0..=n_max {
        for m in 0..=n {
            let value = phi(m, n, params)?;
            let _ = writeln!(out, "{},{},{}", n, m, rat_to_decimal(&value, digits));
        }
    }
    Ok(out)
}

fn zero_weight_error(n: i64) -> Error {
    Error::InvalidInput(format!("f({n}) = 0: phi(.|{n}) undefined at these parameters"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::{One, Zero};
    use crate::scalar::{Rat, C64};

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn params(q: (i64, i64), mu: (i64, i64), nu: (i64, i64)) -> ModelParams<Rat> {
        ModelParams::new(r(q.0, q.1), r(mu.0, mu.1), r(nu.0, nu.1)).unwrap()
    }

    #[test]
    fn derived_params() {
        let pr = params((1, 2), (2, 5), (1, 5));
        // alpha + beta + gamma = 1 exactly
        assert_eq!(
            pr.alpha.clone() + pr.beta.clone() + pr.gamma.clone(),
            Rat::one()
        );
        // mu = p + nu (1 - p)
        assert_eq!(
            pr.mu,
            pr.p.clone() + pr.nu.clone() * (Rat::one() - pr.p.clone())
        );
        // nu = 0 -> alpha = 0, beta = q, gamma = 1 - q, p = mu
        let pr0 = params((1, 2), (2, 5), (0, 1));
        assert_eq!(pr0.alpha, Rat::zero());
        assert_eq!(pr0.beta, r(1, 2));
        assert_eq!(pr0.gamma, r(1, 2));
        assert_eq!(pr0.p, r(2, 5));
        // nu = q -> beta = 0
        let prq = params((1, 3), (1, 2), (1, 3));
        assert_eq!(prq.beta, Rat::zero());
    }

    #[test]
    fn singular_and_domain_errors() {
        // q nu = 1 (permissive path still refuses)
        assert!(matches!(
            ModelParams::new_permissive(Rat::from_int(2), r(1, 2), r(1, 2)),
            Err(Error::SingularParams(_))
        ));
        // nu > mu violates the default domain
        assert!(matches!(
            ModelParams::new(r(1, 2), r(2, 5), r(9, 10)),
            Err(Error::InvalidInput(_))
        ));
        // but is accepted permissively
        assert!(ModelParams::new_permissive(r(1, 2), r(2, 5), r(9, 10)).is_ok());
    }

    #[test]
    fn weight_values() {
        let pr = params((1, 2), (2, 5), (1, 5));
        assert_eq!(weight_v(0, &pr).unwrap(), Rat::one());
        assert_eq!(weight_w(0, &pr).unwrap(), Rat::one());
        // v(1) = (mu - nu)/(1 - q)
        assert_eq!(
            weight_v(1, &pr).unwrap(),
            (pr.mu.clone() - pr.nu.clone()) / (Rat::one() - pr.q.clone())
        );
        // w(1) = (1 - mu)/(1 - q)
        assert_eq!(
            weight_w(1, &pr).unwrap(),
            (Rat::one() - pr.mu.clone()) / (Rat::one() - pr.q.clone())
        );
        // f(0) = 1, f(1) = (1 - nu)/(1 - q)
        assert_eq!(weight_f(0, &pr).unwrap(), Rat::one());
        assert_eq!(
            weight_f(1, &pr).unwrap(),
            (Rat::one() - pr.nu.clone()) / (Rat::one() - pr.q.clone())
        );
    }

    #[test]
    fn f_equals_convolution_up_to_20() {
        let pr = params((1, 3), (3, 7), (1, 7));
        for n in 0..=20 {
            assert_eq!(
                weight_f(n, &pr).unwrap(),
                weight_f_convolution(n, &pr).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn mu_zero_is_regular() {
        // v(k) at mu = 0 is (-nu)^k q^{k(k-1)/2} / (q;q)_k; no singularity.
        let pr = ModelParams::new(r(1, 2), Rat::zero(), Rat::zero()).unwrap();
        assert_eq!(weight_v(0, &pr).unwrap(), Rat::one());
        assert_eq!(weight_v(3, &pr).unwrap(), Rat::zero());
        let pr = ModelParams::new_permissive(r(1, 2), Rat::zero(), r(-1, 3)).unwrap();
        let v2 = weight_v(2, &pr).unwrap();
        let expect = (r(1, 3) * r(1, 6)) / q_pochhammer(&r(1, 2), &r(1, 2), 2).unwrap();
        assert_eq!(v2, expect);
    }

    #[test]
    fn phi_basics() {
        let pr = params((1, 2), (2, 5), (1, 5));
        // phi(0|1) = (1 - mu)/(1 - nu) = 1 - p
        assert_eq!(phi(0, 1, &pr).unwrap(), Rat::one() - pr.p.clone());
        // normalization for each n <= 30
        for n in 0..=30 {
            let mut total = Rat::zero();
            for m in 0..=n {
                let val = phi(m, n, &pr).unwrap();
                // in-domain values lie in [0,1]
                assert!(val >= Rat::zero() && val <= Rat::one(), "phi({m}|{n})");
                total = total + val;
            }
            assert_eq!(total, Rat::one(), "sum over m at n={n}");
        }
        // m > n -> 0
        assert_eq!(phi(3, 2, &pr).unwrap(), Rat::zero());
    }

    #[test]
    fn phi_closed_form_equals_weight_ratio() {
        let pr = params((2, 5), (1, 2), (1, 10));
        for n in 0..=20 {
            for m in 0..=n {
                assert_eq!(
                    phi(m, n, &pr).unwrap(),
                    phi_via_weights(m, n, &pr).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn gauge_invariance_of_phi() {
        // replacing v(k) -> a th^k v(k), w(k) -> b th^k w(k) leaves phi alone
        let pr = params((1, 3), (2, 5), (1, 6));
        let mix = |x: u64| {
            let mut z = x.wrapping_mul(0x9E3779B97F4A7C15);
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
            z ^ (z >> 31)
        };
        for trial in 0..20u64 {
            let a = Rat::from_ratio(1 + (mix(3 * trial) % 7) as i64, 3);
            let b = Rat::from_ratio(1 + (mix(3 * trial + 1) % 5) as i64, 2);
            let th = Rat::from_ratio(1 + (mix(3 * trial + 2) % 4) as i64, 5);
            for n in 0..=8i64 {
                let mut fn_gauged = Rat::zero();
                for k in 0..=n {
                    let vg = a.clone()
                        * Scalar::powi(&th, k as i32)
                        * weight_v(k, &pr).unwrap();
                    let wg = b.clone()
                        * Scalar::powi(&th, (n - k) as i32)
                        * weight_w(n - k, &pr).unwrap();
                    fn_gauged = fn_gauged + vg * wg;
                }
                for m in 0..=n {
                    let vg = a.clone()
                        * Scalar::powi(&th, m as i32)
                        * weight_v(m, &pr).unwrap();
                    let wg = b.clone()
                        * Scalar::powi(&th, (n - m) as i32)
                        * weight_w(n - m, &pr).unwrap();
                    let gauged = vg * wg / fn_gauged.clone();
                    assert_eq!(gauged, phi(m, n, &pr).unwrap(), "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn q0_limit_exact() {
        let pr = params((0, 1), (2, 5), (1, 5));
        for n in 1..=8 {
            for m in 0..=n {
                assert_eq!(
                    phi(m, n, &pr).unwrap(),
                    phi_limit(PhiLimit::Q0Generalized, m, n, &pr).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn single_jump_limit_exact() {
        // mu = q nu
        let q = r(1, 2);
        let nu = r(1, 3);
        let mu = q.clone() * nu.clone();
        let pr = ModelParams::new_permissive(q, mu, nu).unwrap();
        for n in 1..=8 {
            assert_eq!(
                phi(1, n, &pr).unwrap(),
                pr.p.clone() * q_number(n, &pr.q),
                "phi(1|{n})"
            );
            for m in 2..=n {
                assert_eq!(phi(m, n, &pr).unwrap(), Rat::zero(), "phi({m}|{n})");
            }
            assert_eq!(
                phi(0, n, &pr).unwrap(),
                phi_limit(PhiLimit::SingleJumpQtasep, 0, n, &pr).unwrap()
            );
        }
    }

    #[test]
    fn near_q1_matches_binomial() {
        let q = C64::new(1.0 - 1e-6, 0.0);
        let pr = ModelParams::new(q, C64::new(0.4, 0.0), C64::new(0.2, 0.0)).unwrap();
        for n in 0..=8 {
            for m in 0..=n {
                let lhs = phi(m, n, &pr).unwrap();
                let rhs = phi_limit(PhiLimit::Q1Binomial, m, n, &pr).unwrap();
                assert!((lhs - rhs).norm() < 1e-4, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn wrong_limit_refused() {
        let pr = params((1, 2), (2, 5), (1, 5));
        assert!(matches!(
            phi_limit(PhiLimit::Q0Generalized, 0, 1, &pr),
            Err(Error::WrongLimit(_))
        ));
        assert!(matches!(
            phi_limit(PhiLimit::GeometricNu0, 0, 1, &pr),
            Err(Error::WrongLimit(_))
        ));
    }

    #[test]
    fn nu0_limit_exact() {
        let pr = params((1, 3), (2, 5), (0, 1));
        for n in 0..=8 {
            for m in 0..=n {
                assert_eq!(
                    phi(m, n, &pr).unwrap(),
                    phi_limit(PhiLimit::GeometricNu0, m, n, &pr).unwrap()
                );
            }
        }
    }

    #[test]
    fn weight_table_matches_direct() {
        let pr = params((1, 2), (2, 5), (1, 5));
        let table = WeightTable::build(&pr, 12).unwrap();
        for n in 0..=12 {
            for m in 0..=n {
                assert_eq!(table.phi(m, n).unwrap(), phi(m, n, &pr).unwrap());
            }
        }
        assert!(matches!(
            table.phi(0, 13),
            Err(Error::HorizonExceeded { .. })
        ));
    }

    #[test]
    fn csv_rows_and_normalization() {
        let pr = params((1, 2), (2, 5), (1, 5));
        let csv = phi_table_csv(&pr, 6, 12).unwrap();
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 28); // sum_{n<=6} (n+1)
        assert!(rows[0].starts_with("0,0,1.0000"));
    }

    #[test]
    fn validity_flags() {
        let pr = params((1, 2), (2, 5), (1, 5));
        assert!(pr.weights_nonnegative(30));
        assert!(pr.nu_avoids_q_powers(30));
        // nu > mu makes v(1) < 0
        let bad = ModelParams::new_permissive(r(1, 2), r(1, 5), r(2, 5)).unwrap();
        assert!(!bad.weights_nonnegative(5));
        // nu = q^{-2} hits the excluded value at k = 2
        let pathological = ModelParams::new_permissive(r(1, 2), r(1, 5), Rat::from_int(4));
        assert!(!pathological.unwrap().nu_avoids_q_powers(3));
    }
}
