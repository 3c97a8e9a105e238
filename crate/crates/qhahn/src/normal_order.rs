//! Normal ordering for the quadratic algebra `BA = alpha AA + beta AB + gamma BB`.
//!
//! A word over `{A, B}` is normally ordered when no `B` precedes an `A`. With
//! `alpha + beta + gamma = 1` every homogeneous element has a unique normally
//! ordered representation; the quantum-binomial expansion
//!
//! ```text
//! (pA + (1-p)B)^n = sum_m phi(m|n) A^m B^{n-m}
//! ```
//!
//! identifies the expansion coefficients with the q-Hahn hopping
//! probabilities. This module verifies that identity by brute force over
//! exact rationals, together with the whole coefficient ladder
//! `B^{l-1}A = sum_k a_k^l A^{l-k} B^k` (rewrite, recursion and closed forms).
//!
//! Reduction strategy. Naive rewriting of single `BA` occurrences does not
//! terminate here: the `BB` branch recreates `BA` patterns (`BAA -> gamma BBA
//! + ...` while `BBA -> alpha BAA + ...`), which is why the coefficient
//! recursion resums a geometric series into the factor `(1 - alpha a_l^l)^{-1}`.
//! [`reduce_word`] therefore folds the word into normal form letter by letter,
//! solving the one-dimensional fixed point exactly at each step. Folding can
//! start from either end of the word; the two directions use different ladder
//! tables and serve as each other's confluence check. The fixed-point
//! denominators equal `(1-nu)(1-nu q^l)/((1-q nu)(1-nu q^{l-1}))`, nonzero
//! exactly when `nu` avoids `1` and `q^{-l}` — the theorem's own proviso.
//!
//! Floating-point parameters are refused: this module is a proof by
//! computation, and rounding would void it.

use crate::hopping::{phi, ModelParams};
use crate::qcalc::q_pochhammer;
use crate::scalar::{Rat, Scalar};
use crate::{Error, Result};
use num::traits::{One, Zero};

/// Alphabet of the quadratic algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    A,
    B,
}

/// A word is a finite sequence of letters; empty words are allowed.
pub type Word = Vec<Letter>;

/// Parse a word from a string like `"BBA"`.
pub fn word(s: &str) -> Word {
    s.chars()
        .map(|c| match c {
            'A' | 'a' => Letter::A,
            'B' | 'b' => Letter::B,
            other => panic!("invalid letter {other:?} in word"),
        })
        .collect()
}

/// A homogeneous element in normally ordered form,
/// `sum_k coeffs[k] A^k B^{degree-k}` (index = number of `A`s).
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    coeffs: Vec<Rat>,
}

impl NormalForm {
    /// The unit element (degree 0).
    pub fn unit() -> Self {
        NormalForm { coeffs: vec![Rat::one()] }
    }

    fn zeros(degree: usize) -> Self {
        NormalForm { coeffs: vec![Rat::zero(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `A^k B^{degree-k}`.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Value at `A = B = 1`; equals 1 for the reduction of any single word
    /// because `alpha + beta + gamma = 1` turns the relation into `1 = 1`.
    pub fn coeff_sum(&self) -> Rat {
        self.coeffs.iter().fold(Rat::zero(), |acc, c| acc + c.clone())
    }

    fn add_scaled(&mut self, other: &NormalForm, scale: &Rat) {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.clone() + b.clone() * scale.clone();
        }
    }
}

/// Direction in which [`reduce_word_with`] folds the word into normal form.
///
/// Both produce the same (unique) normal form; they compute through different
/// ladder tables, so their agreement is a nontrivial consistency check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceStrategy {
    /// Fold from the right: prepend letters, resumming `B A^m` ladders.
    FromRight,
    /// Fold from the left: append letters, resumming `B^l A` ladders.
    FromLeft,
}

fn require_nonsingular(den: &Rat, what: &str) -> Result<()> {
    if den.is_zero() {
        return Err(Error::SingularParams(format!(
            "fixed-point denominator vanished in {what} (nu = q^-l or nu = 1)"
        )));
    }
    Ok(())
}

/// Tables `T_m = NF(B A^m)`, `m = 0..=max_m`, coefficients indexed by B-count.
///
/// Recursion: `T_m (1 - gamma t_{m-1,0}) = alpha A^{m+1} + beta A T_{m-1}
/// + gamma sum_{j>=1} t_{m-1,j} T_{m-j} B^j`.
fn push_tables(max_m: usize, params: &ModelParams<Rat>) -> Result<Vec<Vec<Rat>>> {
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(max_m + 1);
    // T_0 = B
    t.push(vec![Rat::zero(), Rat::one()]);
    for m in 1..=max_m {
        let prev = t[m - 1].clone(); // degree m, B-counts 0..=m
        let mut u = vec![Rat::zero(); m + 2];
        // alpha A^{m+1}
        u[0] = params.alpha.clone();
        // beta A T_{m-1}: B-count unchanged
        for (j, c) in prev.iter().enumerate() {
            u[j] = u[j].clone() + params.beta.clone() * c.clone();
        }
        // gamma sum_{j>=1} t_{m-1,j} T_{m-j} B^j
        for (j, c) in prev.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let sub = &t[m - j]; // degree m-j+1, B-counts 0..=m-j+1
            for (i, s) in sub.iter().enumerate() {
                u[i + j] = u[i + j].clone() + params.gamma.clone() * c.clone() * s.clone();
            }
        }
        let den = Rat::one() - params.gamma.clone() * prev[0].clone();
        require_nonsingular(&den, "push_tables")?;
        let inv = den.recip();
        for c in &mut u {
            *c = c.clone() * inv.clone();
        }
        t.push(u);
    }
    Ok(t)
}

/// Tables `a^l`, `l = 1..=max_l`, where `B^{l-1}A = sum_k a_k^l A^{l-k} B^k`.
///
/// This is the triangular recursion with base `a_0^1 = 1, a_1^1 = 0`:
///
/// ```text
/// a_j^{l+1} = (1 - alpha a_l^l)^{-1} ( alpha sum_{k=j-1}^{l-1} a_k^l a_j^{k+1}
///             + beta a_{j-1}^l + delta_{j,l+1} gamma )
/// ```
pub fn a_tables(max_l: usize, params: &ModelParams<Rat>) -> Result<Vec<Vec<Rat>>> {
    assert!(max_l >= 1);
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(max_l + 1);
    a.push(Vec::new()); // l = 0 unused
    a.push(vec![Rat::one(), Rat::zero()]);
    for l in 1..max_l {
        let den = Rat::one() - params.alpha.clone() * a[l][l].clone();
        require_nonsingular(&den, "a_tables recursion")?;
        let inv = den.recip();
        let mut next = vec![Rat::zero(); l + 2];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for k in j.saturating_sub(1)..l {
                // a_j^{k+1} vanishes unless j <= k+1
                if j <= k + 1 {
                    acc = acc + a[l][k].clone() * a[k + 1][j].clone();
                }
            }
            acc = acc * params.alpha.clone();
            if j >= 1 {
                acc = acc + params.beta.clone() * a[l][j - 1].clone();
            }
            if j == l + 1 {
                acc = acc + params.gamma.clone();
            }
            *slot = acc * inv.clone();
        }
        a.push(next);
    }
    Ok(a)
}

/// Reduce a word to its unique normally ordered form (default strategy:
/// fold from the right).
pub fn reduce_word(w: &Word, params: &ModelParams<Rat>) -> Result<NormalForm> {
    reduce_word_with(w, params, ReduceStrategy::FromRight)
}

/// Reduce a word with an explicit fold direction.
pub fn reduce_word_with(
    w: &Word,
    params: &ModelParams<Rat>,
    strategy: ReduceStrategy,
) -> Result<NormalForm> {
    match strategy {
        ReduceStrategy::FromRight => {
            let t = push_tables(w.len(), params)?;
            let mut nf = NormalForm::unit();
            for &letter in w.iter().rev() {
                nf = prepend(letter, &nf, &t);
            }
            Ok(nf)
        }
        ReduceStrategy::FromLeft => {
            let a = a_tables(w.len().max(1) + 1, params)?;
            let mut nf = NormalForm::unit();
            for &letter in w.iter() {
                nf = append(letter, &nf, &a);
            }
            Ok(nf)
        }
    }
}

/// `letter * nf` using the `T_m = NF(B A^m)` tables.
fn prepend(letter: Letter, nf: &NormalForm, t: &[Vec<Rat>]) -> NormalForm {
    let d = nf.degree();
    let mut out = NormalForm::zeros(d + 1);
    match letter {
        Letter::A => {
            for k in 0..=d {
                out.coeffs[k + 1] = nf.coeffs[k].clone();
            }
        }
        Letter::B => {
            for k in 0..=d {
                let c = &nf.coeffs[k];
                if c.is_zero() {
                    continue;
                }
                // B A^k B^{d-k} = T_k B^{d-k}; T_k term of B-count j has A-count k+1-j
                for (j, s) in t[k].iter().enumerate() {
                    let a_count = k + 1 - j;
                    out.coeffs[a_count] = out.coeffs[a_count].clone() + c.clone() * s.clone();
                }
            }
        }
    }
    out
}

/// `nf * letter` using the `a^l` tables (`S_m = NF(B^m A)` has coefficients
/// `a_k^{m+1}` by B-count `k`).
fn append(letter: Letter, nf: &NormalForm, a: &[Vec<Rat>]) -> NormalForm {
    let d = nf.degree();
    let mut out = NormalForm::zeros(d + 1);
    match letter {
        Letter::B => {
            for k in 0..=d {
                out.coeffs[k] = nf.coeffs[k].clone();
            }
        }
        Letter::A => {
            for k in 0..=d {
                let c = &nf.coeffs[k];
                if c.is_zero() {
                    continue;
                }
                let b_count = d - k;
                if b_count == 0 {
                    // A^k A = A^{k+1}
                    out.coeffs[k + 1] = out.coeffs[k + 1].clone() + c.clone();
                } else {
                    // A^k B^m A = A^k sum_j a_j^{m+1} A^{m+1-j} B^j
                    for (j, s) in a[b_count + 1].iter().enumerate() {
                        let a_count = k + b_count + 1 - j;
                        out.coeffs[a_count] =
                            out.coeffs[a_count].clone() + c.clone() * s.clone();
                    }
                }
            }
        }
    }
    out
}

/// Expansion of `(pA + (1-p)B)^n` by repeated right multiplication and word
/// reduction; the coefficient of `A^m B^{n-m}` must equal `phi(m|n)`.
pub fn expand_skew_binomial(n: usize, params: &ModelParams<Rat>) -> Result<NormalForm> {
    let t = push_tables(n, params)?;
    let mut nf = NormalForm::unit();
    let one_minus_p = Rat::one() - params.p.clone();
    for _ in 0..n {
        let d = nf.degree();
        let mut next = NormalForm::zeros(d + 1);
        for k in 0..=d {
            let c = &nf.coeffs[k];
            if c.is_zero() {
                continue;
            }
            // (A^k B^{d-k}) B
            next.coeffs[k] = next.coeffs[k].clone() + c.clone() * one_minus_p.clone();
            // (A^k B^{d-k}) A, reduced as a word
            let mut w: Word = Vec::with_capacity(d + 1);
            w.extend(std::iter::repeat(Letter::A).take(k));
            w.extend(std::iter::repeat(Letter::B).take(d - k));
            w.push(Letter::A);
            let mut reduced = NormalForm::unit();
            for &letter in w.iter().rev() {
                reduced = prepend(letter, &reduced, &t);
            }
            let scale = c.clone() * params.p.clone();
            next.add_scaled(&reduced, &scale);
        }
        nf = next;
    }
    Ok(nf)
}

/// `a_k^l` by reduction of the word `B^{l-1} A` (path i).
pub fn coeff_a_rewrite(k: usize, l: usize, params: &ModelParams<Rat>) -> Result<Rat> {
    assert!(l >= 1 && k <= l);
    let mut w: Word = std::iter::repeat(Letter::B).take(l - 1).collect();
    w.push(Letter::A);
    let nf = reduce_word_with(&w, params, ReduceStrategy::FromRight)?;
    // a_k^l multiplies A^{l-k} B^k, i.e. A-count l-k
    Ok(nf.coeff(l - k))
}

/// `a_k^l` from the triangular recursion (path ii).
pub fn coeff_a_recursion(k: usize, l: usize, params: &ModelParams<Rat>) -> Result<Rat> {
    assert!(l >= 1 && k <= l);
    let a = a_tables(l, params)?;
    Ok(a[l][k].clone())
}

/// `a_k^l` from the closed forms (path iii):
///
/// ```text
/// a_k^l = (1-nu)(q-nu) nu^{l-k-1} q^{k-1} (q;q)_{l-1} (nu;q)_{k-1}
///         / ((q;q)_k (nu;q)_l)                        for 0 < k < l,
/// a_0^l = (1-nu) nu^{l-1} (q;q)_{l-1} / (nu;q)_l,
/// a_l^l = (1-q^{l-1}) / (1-nu q^{l-1}).
/// ```
///
/// (The `k = 0` line is the general one with `(q-nu) q^{-1} (nu;q)_{-1} = 1`
/// substituted, which keeps `q = 0` regular.)
pub fn coeff_a_closed(k: usize, l: usize, params: &ModelParams<Rat>) -> Result<Rat> {
    assert!(l >= 1 && k <= l);
    let q = &params.q;
    let nu = &params.nu;
    if k == l {
        let den = Rat::one() - nu.clone() * q.powi(l as i32 - 1);
        require_nonsingular(&den, "coeff_a_closed diagonal")?;
        return Ok((Rat::one() - q.powi(l as i32 - 1)) / den);
    }
    let poch_nu_l = q_pochhammer(nu, q, l as i64)?;
    require_nonsingular(&poch_nu_l, "coeff_a_closed (nu;q)_l")?;
    let common = (Rat::one() - nu.clone())
        * nu.powi((l - k - 1) as i32)
        * q_pochhammer(q, q, l as i64 - 1)?
        / poch_nu_l;
    if k == 0 {
        return Ok(common);
    }
    let value = common
        * (q.clone() - nu.clone())
        * q.powi(k as i32 - 1)
        * q_pochhammer(nu, q, k as i64 - 1)?
        / q_pochhammer(q, q, k as i64)?;
    Ok(value)
}

/// `a_k^l` for callers: recursion path, falling back to the closed form when
/// the recursion denominator is singular. (The two singular loci coincide —
/// `nu = q^{-l}` — so the fallback can fail too; the error is propagated.)
pub fn coeff_a(k: usize, l: usize, params: &ModelParams<Rat>) -> Result<Rat> {
    match coeff_a_recursion(k, l, params) {
        Ok(v) => Ok(v),
        Err(Error::SingularParams(_)) => coeff_a_closed(k, l, params),
        Err(e) => Err(e),
    }
}

/// Direct sum `s_{n,k} = sum_{m=0}^k v(m) (mu;q)_{n-m-1} / (nu^m (nu;q)_{n-m})`.
pub fn partial_sum_s_direct(n: usize, k: usize, params: &ModelParams<Rat>) -> Result<Rat> {
    if k >= n {
        return Err(Error::InvalidInput(format!(
            "s_{{n,k}} needs k < n, got n={n} k={k}"
        )));
    }
    if params.nu.is_zero() && k >= 1 {
        return Err(Error::DivisionByZero("s_{n,k} at nu = 0".into()));
    }
    let mut acc = Rat::zero();
    for m in 0..=k {
        let term = crate::hopping::weight_v(m as i64, params)?
            * q_pochhammer(&params.mu, &params.q, (n - m) as i64 - 1)?
            / (params.nu.powi(m as i32)
                * q_pochhammer(&params.nu, &params.q, (n - m) as i64)?);
        acc = acc + term;
    }
    Ok(acc)
}

/// Closed form of the partial sum, arranged so the `mu -> nu` and `mu -> 0`
/// limits stay regular:
///
/// ```text
/// s_{n,k} = prod_{j=1}^{k} (mu - nu q^j) / ( nu^k (1 - nu q^{n-1}) )
///           * (mu;q)_{n-k-1} / ( (q;q)_k (nu;q)_{n-k-1} )
/// ```
pub fn partial_sum_s_closed(n: usize, k: usize, params: &ModelParams<Rat>) -> Result<Rat> {
    if k >= n {
        return Err(Error::InvalidInput(format!(
            "s_{{n,k}} needs k < n, got n={n} k={k}"
        )));
    }
    if params.nu.is_zero() {
        return Err(Error::DivisionByZero("s_{n,k} closed form at nu = 0".into()));
    }
    let q = &params.q;
    let mut head = Rat::one();
    let mut qj = q.clone();
    for _ in 1..=k {
        head = head * (params.mu.clone() - params.nu.clone() * qj.clone());
        qj = qj * q.clone();
    }
    let den =
        params.nu.powi(k as i32) * (Rat::one() - params.nu.clone() * q.powi(n as i32 - 1));
    require_nonsingular(&den, "partial_sum_s_closed")?;
    let tail = q_pochhammer(&params.mu, q, (n - k) as i64 - 1)?
        / (q_pochhammer(q, q, k as i64)?
            * q_pochhammer(&params.nu, q, (n - k) as i64 - 1)?);
    Ok(head / den * tail)
}

/// `phi(l|n)` from the ladder recursions
///
/// ```text
/// phi(l|n) = p sum_{m=0}^{l} phi(m|n-1) a_{n-l}^{n-m} + (1-p) phi(l|n-1)   (l < n)
/// phi(n|n) = p sum_{m=0}^{n-1} phi(m|n-1) a_0^{n-m}
/// ```
///
/// using the closed-form `a` coefficients; must reproduce the q-Hahn form
/// exactly.
pub fn phi_recursive(l: usize, n: usize, params: &ModelParams<Rat>) -> Result<Rat> {
    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
    for nn in 1..=n {
        let prev = rows[nn - 1].clone();
        let mut row = vec![Rat::zero(); nn + 1];
        for (ll, slot) in row.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            if ll < nn {
                for (m, pm) in prev.iter().enumerate().take(ll + 1) {
                    acc = acc + pm.clone() * coeff_a_closed(nn - ll, nn - m, params)?;
                }
                acc = acc * params.p.clone()
                    + (Rat::one() - params.p.clone()) * prev[ll].clone();
            } else {
                for (m, pm) in prev.iter().enumerate() {
                    acc = acc + pm.clone() * coeff_a_closed(0, nn - m, params)?;
                }
                acc = acc * params.p.clone();
            }
            *slot = acc;
        }
        rows.push(row);
    }
    Ok(rows[n][l].clone())
}

/// Plain-text table of `a_k^l` and `phi(m|n)` as exact fractions, for the
/// CLI dump.
pub fn ladder_dump(l_max: usize, params: &ModelParams<Rat>) -> Result<String> {
    use std::fmt::Write as _;
    let mut out = String::new();
    let a = a_tables(l_max.max(1), params)?;
    writeln!(out, "# a_k^l  (B^(l-1)A = sum_k a_k^l A^(l-k) B^k)").unwrap();
    for l in 1..=l_max.max(1) {
        for (k, v) in a[l].iter().enumerate() {
            writeln!(out, "a[{k}]^[{l}] = {v}").unwrap();
        }
    }
    writeln!(out, "# phi(m|n)").unwrap();
    for n in 0..=l_max as i64 {
        for m in 0..=n {
            writeln!(out, "phi({m}|{n}) = {}", phi(m, n, params)?).unwrap();
        }
    }
    Ok(out)
}
