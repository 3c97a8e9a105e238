//! Configuration enumeration and exact transition matrices.
//!
//! Configurations are occupation vectors `n_i >= 0` over a ring of `L` sites
//! (or a finite window), with the coordinate view `x_1 <= ... <= x_N` as the
//! interchangeable representation. The one-step transition matrix follows the
//! master-equation convention
//!
//! ```text
//! P_{t+1}(n) = sum_{n'} M[n, n'] P_t(n'),
//! M[n, n'] = sum_{flows m} prod_i phi(m_i | n'_i),   n_i = n'_i + m_{i-1} - m_i,
//! ```
//!
//! so columns are indexed by the source configuration and sum to one. On a
//! ring the flow vector solving the constraint is determined only up to a
//! uniform additive constant; all feasible constants are summed (see
//! [`flow_multiplicity`] for the diagnostic), which is what keeps the matrix
//! stochastic on configurations like the fully occupied ring.
//!
//! The factorized stationary state `P_st(n) ~ prod_i f(n_i)` is an exact
//! fixed point of `M`, and `M` is related to its transpose by the conjugation
//! `M^T = Pi S M S^{-1} Pi` with `S = diag(1/P_st)` and `Pi` the site
//! reflection.

use crate::hopping::{weight_f, ModelParams, WeightTable};
use crate::qcalc::binomial_u128;
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};

/// A particle configuration in occupation form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration(pub Vec<u32>);

impl Configuration {
    /// Total particle number.
    pub fn particles(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Weakly increasing particle coordinates (site indices, one per
    /// particle).
    pub fn to_coords(&self) -> Vec<i64> {
        let mut coords = Vec::with_capacity(self.particles() as usize);
        for (site, &n) in self.0.iter().enumerate() {
            coords.extend(std::iter::repeat(site as i64).take(n as usize));
        }
        coords
    }

    /// Occupation vector from weakly increasing coordinates on `sites` sites.
    pub fn from_coords(coords: &[i64], sites: usize) -> Result<Self> {
        let mut occ = vec![0u32; sites];
        for pair in coords.windows(2) {
            if pair[0] > pair[1] {
                return Err(Error::InvalidInput(format!(
                    "coordinates not weakly increasing: {coords:?}"
                )));
            }
        }
        for &x in coords {
            if x < 0 || x as usize >= sites {
                return Err(Error::InvalidInput(format!(
                    "coordinate {x} outside lattice of {sites} sites"
                )));
            }
            occ[x as usize] += 1;
        }
        Ok(Configuration(occ))
    }
}

/// Enumerated fixed-`N` sector of a lattice with `L` sites, in lexicographic
/// occupation order.
#[derive(Clone, Debug)]
pub struct StateSpace {
    pub sites: usize,
    pub particles: u32,
    configs: Vec<Configuration>,
    index: HashMap<Vec<u32>, usize>,
}

impl StateSpace {
    /// Enumerate all `C(L+N-1, N)` occupation vectors, refusing when the
    /// count exceeds `cap`.
    pub fn new(sites: usize, particles: u32, cap: usize) -> Result<Self> {
        assert!(sites >= 1);
        let count = binomial_u128((sites as u64) + (particles as u64) - 1, particles as u64);
        if count > cap as u128 {
            return Err(Error::SizeCap { dim: count as usize, cap });
        }
        let mut configs = Vec::with_capacity(count as usize);
        let mut current = vec![0u32; sites];
        enumerate_rec(&mut current, 0, particles, &mut configs);
        configs.sort_by(|a, b| a.0.cmp(&b.0));
        let index = configs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.0.clone(), i))
            .collect();
        Ok(StateSpace { sites, particles, configs, index })
    }

    pub fn dim(&self) -> usize {
        self.configs.len()
    }

    pub fn config(&self, i: usize) -> &Configuration {
        &self.configs[i]
    }

    pub fn configs(&self) -> &[Configuration] {
        &self.configs
    }

    pub fn index_of(&self, occ: &[u32]) -> Option<usize> {
        self.index.get(occ).copied()
    }

    /// Index permutation induced by a site relabeling `site -> perm[site]`.
    fn site_permutation(&self, perm: &[usize]) -> Vec<usize> {
        self.configs
            .iter()
            .map(|c| {
                let mut occ = vec![0u32; self.sites];
                for (site, &n) in c.0.iter().enumerate() {
                    occ[perm[site]] = n;
                }
                self.index_of(&occ).expect("permuted configuration in space")
            })
            .collect()
    }

    /// Reflection `i -> L-1-i` as an index permutation (the parity map).
    pub fn parity_permutation(&self) -> Vec<usize> {
        let perm: Vec<usize> = (0..self.sites).map(|i| self.sites - 1 - i).collect();
        self.site_permutation(&perm)
    }

    /// One-site rotation `i -> i+1 (mod L)` as an index permutation.
    pub fn rotation_permutation(&self) -> Vec<usize> {
        let perm: Vec<usize> = (0..self.sites).map(|i| (i + 1) % self.sites).collect();
        self.site_permutation(&perm)
    }
}

fn enumerate_rec(current: &mut Vec<u32>, site: usize, remaining: u32, out: &mut Vec<Configuration>) {
    if site == current.len() - 1 {
        current[site] = remaining;
        out.push(Configuration(current.clone()));
        current[site] = 0;
        return;
    }
    for n in 0..=remaining {
        current[site] = n;
        enumerate_rec(current, site + 1, remaining - n, out);
    }
    current[site] = 0;
}

/// Column-sparse matrix over scalars, indexed by an enumerated state space.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionMatrix<S: Scalar> {
    pub dim: usize,
    /// `cols[c]` maps row -> entry `M[row, c]`.
    cols: Vec<BTreeMap<usize, S>>,
}

impl<S: Scalar> TransitionMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        TransitionMatrix { dim, cols: vec![BTreeMap::new(); dim] }
    }

    pub fn entry(&self, row: usize, col: usize) -> S {
        self.cols[col].get(&row).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: S) {
        if value.is_zero() {
            return;
        }
        let slot = self.cols[col].entry(row).or_insert_with(S::zero);
        *slot = slot.clone() + value;
    }

    pub fn column_sum(&self, col: usize) -> S {
        self.cols[col]
            .values()
            .fold(S::zero(), |acc, v| acc + v.clone())
    }

    /// `M v` in the master-equation convention.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            for (&r, m) in col {
                out[r] = out[r].clone() + m.clone() * v[c].clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, m) in col {
                out.cols[r].insert(c, m.clone());
            }
        }
        out
    }

    /// `D M D^{-1}` with `D = diag(weights^{-1})`, i.e.
    /// `out[r,c] = M[r,c] * weights[c] / weights[r]`.
    pub fn conjugate_by_inverse_diagonal(&self, weights: &[S]) -> Result<Self> {
        if weights.iter().any(|w| w.is_zero()) {
            return Err(Error::DivisionByZero("zero stationary weight".into()));
        }
        let mut out = Self::zeros(self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, m) in col {
                out.cols[c].insert(r, m.clone() * weights[c].clone() / weights[r].clone());
            }
        }
        Ok(out)
    }

    /// `P M P^{-1}` for an index permutation `perm` (`P e_i = e_{perm[i]}`).
    pub fn conjugate_by_permutation(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, m) in col {
                out.cols[perm[c]].insert(perm[r], m.clone());
            }
        }
        out
    }

    /// Entries as `(row, col, value)` in column order.
    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    /// Coordinate-list text export: one `row col value` line per entry.
    pub fn export_coo(&self) -> String {
        let mut out = String::new();
        for (r, c, v) in self.iter_entries() {
            out.push_str(&format!("{} {} {}\n", r, c, v));
        }
        out
    }

    pub fn to_f64_dense(&self) -> nalgebra::DMatrix<f64> {
        let mut m = nalgebra::DMatrix::zeros(self.dim, self.dim);
        for (r, c, v) in self.iter_entries() {
            m[(r, c)] = v.to_c64().re;
        }
        m
    }
}

/// Config-index legend for exported matrices.
pub fn legend(space: &StateSpace) -> String {
    let mut out = String::new();
    for (i, c) in space.configs().iter().enumerate() {
        out.push_str(&format!("{} {:?}\n", i, c.0));
    }
    out
}

/// Number of distinct uniform flow constants connecting `source -> target` on
/// the ring (0 when the transition is impossible). The paper's remark that
/// the flow sum "consists of the only term" fails exactly when this exceeds 1
/// (wrap-around flows, e.g. every site occupied); the matrix builder sums all
/// of them.
pub fn flow_multiplicity(target: &Configuration, source: &Configuration) -> usize {
    let l = source.0.len();
    debug_assert_eq!(target.0.len(), l);
    if target.particles() != source.particles() {
        return 0;
    }
    // m_i = t + d_i with d_0 = 0, d_i = d_{i-1} + n'_i - n_i
    let mut d = vec![0i64; l];
    for i in 1..l {
        d[i] = d[i - 1] + source.0[i] as i64 - target.0[i] as i64;
    }
    let t_min = d.iter().map(|&di| -di).max().unwrap().max(0);
    let t_max = (0..l)
        .map(|i| source.0[i] as i64 - d[i])
        .min()
        .unwrap();
    (t_max - t_min + 1).max(0) as usize
}

/// Single transition probability `M[target, source]` on the ring, summing
/// all feasible uniform flow constants.
pub fn transition_entry<S: Scalar>(
    target: &Configuration,
    source: &Configuration,
    table: &WeightTable<S>,
) -> Result<S> {
    let l = source.0.len();
    if target.particles() != source.particles() {
        return Ok(S::zero());
    }
    let mut d = vec![0i64; l];
    for i in 1..l {
        d[i] = d[i - 1] + source.0[i] as i64 - target.0[i] as i64;
    }
    let t_min = d.iter().map(|&di| -di).max().unwrap().max(0);
    let t_max = (0..l).map(|i| source.0[i] as i64 - d[i]).min().unwrap();
    let mut acc = S::zero();
    let mut t = t_min;
    while t <= t_max {
        let mut prod = S::one();
        for i in 0..l {
            prod = prod * table.phi(t + d[i], source.0[i] as i64)?;
        }
        acc = acc + prod;
        t += 1;
    }
    Ok(acc)
}

/// Exact one-step transition matrix on the ring, built column by column by
/// enumerating every outcome of the parallel update.
pub fn build_markov_matrix<S: Scalar>(
    space: &StateSpace,
    params: &ModelParams<S>,
) -> Result<TransitionMatrix<S>> {
    let table = WeightTable::build(params, space.particles as usize)?;
    let mut m = TransitionMatrix::zeros(space.dim());
    let l = space.sites;
    for (col, source) in space.configs().iter().enumerate() {
        // flows[i] = number of particles leaving site i; 0..=n_i each
        let mut flow = vec![0u32; l];
        loop {
            let mut prob = S::one();
            for i in 0..l {
                prob = prob * table.phi(flow[i] as i64, source.0[i] as i64)?;
            }
            if !prob.is_zero() {
                let mut target = source.0.clone();
                for i in 0..l {
                    target[i] -= flow[i];
                    target[(i + 1) % l] += flow[i];
                }
                let row = space
                    .index_of(&target)
                    .expect("target stays in the fixed-N sector");
                m.add_to(row, col, prob);
            }
            // advance the mixed-radix flow counter
            let mut i = 0;
            loop {
                if i == l {
                    break;
                }
                if flow[i] < source.0[i] {
                    flow[i] += 1;
                    break;
                }
                flow[i] = 0;
                i += 1;
            }
            if i == l {
                break;
            }
        }
    }
    Ok(m)
}

/// Normalized stationary vector with components proportional to
/// `prod_i f(n_i)`.
pub fn stationary_vector<S: Scalar>(
    space: &StateSpace,
    params: &ModelParams<S>,
) -> Result<Vec<S>> {
    let mut weights = Vec::with_capacity(space.dim());
    let mut total = S::zero();
    for c in space.configs() {
        let mut w = S::one();
        for &n in &c.0 {
            w = w * weight_f(n as i64, params)?;
        }
        total = total + w.clone();
        weights.push(w);
    }
    if total.is_zero() {
        return Err(Error::DivisionByZero("stationary normalization".into()));
    }
    let inv = total.recip();
    Ok(weights.into_iter().map(|w| w * inv.clone()).collect())
}

/// `M0 = S M S^{-1}` with `S = diag(1/P_st)`: the matrix whose eigenvectors
/// are the Bethe functions `Psi^0`.
pub fn conjugate_m0<S: Scalar>(
    m: &TransitionMatrix<S>,
    stationary: &[S],
) -> Result<TransitionMatrix<S>> {
    // S M S^{-1} has entries M[r,c] P_st(c)/P_st(r)
    m.conjugate_by_inverse_diagonal(stationary)
}

/// Exact one-step matrix on a finite window of `window_len` sites with an
/// absorbing right edge: the last site never emits, every other site runs the
/// chipping update, nothing enters from the left. Columns still sum to one.
pub fn build_window_matrix<S: Scalar>(
    space: &StateSpace,
    params: &ModelParams<S>,
) -> Result<TransitionMatrix<S>> {
    let table = WeightTable::build(params, space.particles as usize)?;
    let mut m = TransitionMatrix::zeros(space.dim());
    let l = space.sites;
    for (col, source) in space.configs().iter().enumerate() {
        let mut flow = vec![0u32; l - 1];
        loop {
            let mut prob = S::one();
            for i in 0..l - 1 {
                prob = prob * table.phi(flow[i] as i64, source.0[i] as i64)?;
            }
            if !prob.is_zero() {
                let mut target = source.0.clone();
                for i in 0..l - 1 {
                    target[i] -= flow[i];
                    target[i + 1] += flow[i];
                }
                let row = space.index_of(&target).expect("window target in sector");
                m.add_to(row, col, prob);
            }
            let mut i = 0;
            loop {
                if i == l - 1 {
                    break;
                }
                if flow[i] < source.0[i] {
                    flow[i] += 1;
                    break;
                }
                flow[i] = 0;
                i += 1;
            }
            if i == l - 1 {
                break;
            }
        }
    }
    Ok(m)
}

/// Propagate a delta-initialized cluster `y` (weakly increasing coordinates)
/// for `t` steps on a window just large enough that the absorbing edge is
/// never reached, returning the distribution over final coordinate tuples.
///
/// The window is `[y_1, y_N + t]`; since every particle moves at most one
/// site per step, the rightmost site can be occupied only at time `t`, after
/// which no further step is taken. This is the exact infinite-lattice
/// propagator for rightward-only dynamics.
pub fn window_propagate<S: Scalar>(
    y: &[i64],
    t: usize,
    params: &ModelParams<S>,
    cap: usize,
) -> Result<Vec<(Vec<i64>, S)>> {
    window_propagate_in(y, t, None, params, cap)
}

/// As [`window_propagate`], but on a caller-supplied window length; fails if
/// mass could cross the right edge within `t` steps.
pub fn window_propagate_in<S: Scalar>(
    y: &[i64],
    t: usize,
    window_len: Option<usize>,
    params: &ModelParams<S>,
    cap: usize,
) -> Result<Vec<(Vec<i64>, S)>> {
    if y.is_empty() {
        return Err(Error::InvalidInput("empty initial configuration".into()));
    }
    let offset = y[0];
    let span = (y[y.len() - 1] - y[0]) as usize;
    let needed = span + t + 1;
    let w = window_len.unwrap_or(needed);
    if w < needed {
        return Err(Error::WindowTooSmall(format!(
            "window of {w} sites cannot hold span {span} plus horizon {t}"
        )));
    }
    let shifted: Vec<i64> = y.iter().map(|&x| x - offset).collect();
    let space = StateSpace::new(w, y.len() as u32, cap)?;
    let m = build_window_matrix(&space, params)?;
    let start = Configuration::from_coords(&shifted, w)?;
    let mut v = vec![S::zero(); space.dim()];
    v[space.index_of(&start.0).expect("start config present")] = S::one();
    for _ in 0..t {
        v = m.apply(&v);
    }
    let mut out = Vec::new();
    for (i, value) in v.into_iter().enumerate() {
        if value.is_zero() {
            continue;
        }
        let coords: Vec<i64> = space.config(i).to_coords().iter().map(|&c| c + offset).collect();
        out.push((coords, value));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use num::traits::{One, Zero};

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn params() -> ModelParams<Rat> {
        ModelParams::new(r(1, 2), r(2, 5), r(1, 5)).unwrap()
    }

    #[test]
    fn enumeration_is_lexicographic_and_counted() {
        let space = StateSpace::new(2, 1, 1000).unwrap();
        assert_eq!(space.dim(), 2);
        assert_eq!(space.config(0).0, vec![0, 1]);
        assert_eq!(space.config(1).0, vec![1, 0]);

        let space = StateSpace::new(4, 3, 1000).unwrap();
        assert_eq!(space.dim(), 20); // C(6,3)

        let space = StateSpace::new(1, 5, 1000).unwrap();
        assert_eq!(space.dim(), 1);
        assert_eq!(space.config(0).0, vec![5]);

        assert!(matches!(
            StateSpace::new(10, 10, 100),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn coordinate_views_roundtrip() {
        let c = Configuration(vec![2, 0, 1, 3]);
        let coords = c.to_coords();
        assert_eq!(coords, vec![0, 0, 2, 3, 3, 3]);
        assert_eq!(Configuration::from_coords(&coords, 4).unwrap(), c);
        assert!(Configuration::from_coords(&[1, 0], 3).is_err());
    }

    #[test]
    fn single_site_ring_is_identity() {
        let space = StateSpace::new(1, 4, 100).unwrap();
        let m = build_markov_matrix(&space, &params()).unwrap();
        assert_eq!(m.entry(0, 0), Rat::one());
    }

    #[test]
    fn two_site_single_particle_matrix() {
        let pr = params();
        let space = StateSpace::new(2, 1, 100).unwrap();
        let m = build_markov_matrix(&space, &pr).unwrap();
        let p = pr.p.clone();
        // configs: 0 = (0,1), 1 = (1,0); symmetric random walk
        assert_eq!(m.entry(0, 0), Rat::one() - p.clone());
        assert_eq!(m.entry(1, 0), p.clone());
        assert_eq!(m.entry(0, 1), p.clone());
        assert_eq!(m.entry(1, 1), Rat::one() - p);
    }

    #[test]
    fn column_sums_are_one() {
        let pr = params();
        for (l, n) in [(3usize, 2u32), (4, 3), (5, 2)] {
            let space = StateSpace::new(l, n, 1000).unwrap();
            let m = build_markov_matrix(&space, &pr).unwrap();
            for c in 0..space.dim() {
                assert_eq!(m.column_sum(c), Rat::one(), "L={l} N={n} col={c}");
            }
        }
    }

    #[test]
    fn particle_conservation_in_entries() {
        let pr = params();
        let space = StateSpace::new(3, 2, 100).unwrap();
        let m = build_markov_matrix(&space, &pr).unwrap();
        for (rr, cc, _) in m.iter_entries() {
            assert_eq!(
                space.config(rr).particles(),
                space.config(cc).particles()
            );
        }
    }

    #[test]
    fn stationary_vector_is_fixed_point() {
        let pr = params();
        let space = StateSpace::new(2, 1, 100).unwrap();
        let st = stationary_vector(&space, &pr).unwrap();
        assert_eq!(st, vec![r(1, 2), r(1, 2)]);

        let space = StateSpace::new(2, 2, 100).unwrap();
        let st = stationary_vector(&space, &pr).unwrap();
        // proportional to (f(0)f(2), f(1)^2, f(2)f(0))
        let f = |n| weight_f(n, &pr).unwrap();
        let raw = [f(0) * f(2), f(1) * f(1), f(2) * f(0)];
        let total = raw.iter().fold(Rat::zero(), |a, b| a + b.clone());
        for (s, w) in st.iter().zip(raw.iter()) {
            assert_eq!(s.clone(), w.clone() / total.clone());
        }
        let m = build_markov_matrix(&space, &pr).unwrap();
        assert_eq!(m.apply(&st), st);
    }

    #[test]
    fn stationarity_exact_for_medium_sizes() {
        let pr = params();
        for (l, n) in [(4usize, 3u32), (5, 3), (6, 2)] {
            let space = StateSpace::new(l, n, 1000).unwrap();
            let m = build_markov_matrix(&space, &pr).unwrap();
            let st = stationary_vector(&space, &pr).unwrap();
            assert_eq!(m.apply(&st), st, "L={l} N={n}");
        }
    }

    #[test]
    fn conjugation_identity() {
        // M^T = Pi S M S^{-1} Pi, exact, on (3,2) and (4,2)
        let pr = params();
        for (l, n) in [(3usize, 2u32), (4, 2)] {
            let space = StateSpace::new(l, n, 1000).unwrap();
            let m = build_markov_matrix(&space, &pr).unwrap();
            let st = stationary_vector(&space, &pr).unwrap();
            let m0 = conjugate_m0(&m, &st).unwrap();
            let pi = space.parity_permutation();
            let lhs = m.transpose();
            let rhs = m0.conjugate_by_permutation(&pi);
            assert_eq!(lhs, rhs, "L={l} N={n}");
        }
    }

    #[test]
    fn left_eigenvector_is_all_ones() {
        let pr = params();
        let space = StateSpace::new(4, 2, 100).unwrap();
        let m = build_markov_matrix(&space, &pr).unwrap();
        let ones = vec![Rat::one(); space.dim()];
        assert_eq!(m.transpose().apply(&ones), ones);
    }

    #[test]
    fn translation_covariance() {
        let pr = params();
        let space = StateSpace::new(4, 2, 100).unwrap();
        let m = build_markov_matrix(&space, &pr).unwrap();
        let rot = space.rotation_permutation();
        assert_eq!(m.conjugate_by_permutation(&rot), m);
    }

    #[test]
    fn entry_query_matches_bulk_build() {
        let pr = params();
        let space = StateSpace::new(3, 3, 100).unwrap();
        let table = WeightTable::build(&pr, 3).unwrap();
        let m = build_markov_matrix(&space, &pr).unwrap();
        for rr in 0..space.dim() {
            for cc in 0..space.dim() {
                assert_eq!(
                    m.entry(rr, cc),
                    transition_entry(space.config(rr), space.config(cc), &table).unwrap(),
                    "row={rr} col={cc}"
                );
            }
        }
    }

    #[test]
    fn wraparound_flows_are_summed() {
        // fully occupied two-site ring: staying put can happen with flow
        // constants 0 and 1
        let space = StateSpace::new(2, 2, 100).unwrap();
        let c = Configuration(vec![1, 1]);
        assert_eq!(flow_multiplicity(&c, &c), 2);
        // and on L=1 every flow constant 0..=N is feasible
        let c1 = Configuration(vec![3]);
        assert_eq!(flow_multiplicity(&c1, &c1), 4);
        // ordinary transitions have a unique flow
        let a = Configuration(vec![0, 2]);
        let b = Configuration(vec![1, 1]);
        assert_eq!(flow_multiplicity(&b, &a), 1);
    }

    #[test]
    fn window_matrix_single_walker() {
        let pr = params();
        let space = StateSpace::new(2, 1, 100).unwrap();
        let m = build_window_matrix(&space, &pr).unwrap();
        let p = pr.p.clone();
        // configs: 0 = (0,1) [right site, absorbing], 1 = (1,0)
        assert_eq!(m.entry(0, 0), Rat::one());
        assert_eq!(m.entry(1, 1), Rat::one() - p.clone());
        assert_eq!(m.entry(0, 1), p);
        for c in 0..2 {
            assert_eq!(m.column_sum(c), Rat::one());
        }
    }

    #[test]
    fn window_propagation_conserves_mass() {
        let pr = params();
        let out = window_propagate(&[0, 0], 3, &pr, 10_000).unwrap();
        let total = out.iter().fold(Rat::zero(), |acc, (_, v)| acc + v.clone());
        assert_eq!(total, Rat::one());
        // every outcome respects rightward-only weak order
        for (coords, _) in &out {
            assert!(coords.windows(2).all(|w| w[0] <= w[1]));
            assert!(coords[0] >= 0 && coords[1] <= 3);
        }
    }

    #[test]
    fn window_too_small_is_refused() {
        let pr = params();
        assert!(matches!(
            window_propagate_in(&[0, 2], 3, Some(4), &pr, 10_000),
            Err(Error::WindowTooSmall(_))
        ));
    }

    #[test]
    fn export_has_legend_and_entries() {
        let pr = params();
        let space = StateSpace::new(2, 1, 100).unwrap();
        let m = build_markov_matrix(&space, &pr).unwrap();
        let coo = m.export_coo();
        assert!(coo.lines().count() == 4);
        let leg = legend(&space);
        assert!(leg.contains("0 [0, 1]"));
    }
}
