//! Numerical semigroups and the order-bound quantities built on them.
//!
//! Indexing follows the one-point code tables: non-gaps are `ρ_1 = 0 < ρ_2 < …`
//! and `ν_ℓ` counts ordered pairs of semigroup *values* summing to `ρ_{ℓ+1}`,
//! so `ν_0 = 1` (only `0 + 0`).

use serde::Serialize;
use thiserror::Error;

use crate::curve::Orbit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("infinite gaps: generators have gcd {0}")]
    InfiniteGaps(u64),
    #[error("no generators given")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("non-gap index must be at least 1")]
    BadIndex,
    #[error("semigroup unknown for q̄ = {0} at an O2 point")]
    Unknown(u32),
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// All non-gaps up to `conductor + 2·max(generators)`.
    elements: Vec<u64>,
    conductor: u64,
    genus: u64,
}

impl NumericalSemigroup {
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::InfiniteGaps(g));
        }

        let min_gen = generators[0] as usize;
        let max_gen = *generators.last().unwrap();
        // Grow a membership table until `min_gen` consecutive members appear;
        // everything from the start of that run on is in the semigroup.
        let mut member = vec![true];
        let mut run = 1usize;
        while run < min_gen {
            let n = member.len() as u64;
            let is_member = generators.iter().any(|&a| a <= n && member[(n - a) as usize]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
        }
        let conductor = (member.len() - run) as u64;
        let genus = member[..conductor as usize].iter().filter(|&&m| !m).count() as u64;
        let bound = conductor + 2 * max_gen;
        let elements = (0..=bound).filter(|&n| n >= conductor || member[n as usize]).collect();

        Ok(Self { generators, elements, conductor, genus })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Stored non-gaps (up to `conductor + 2·max generator`).
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor).filter(|&n| !self.contains(n)).collect()
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.elements.binary_search(&n).is_ok()
    }

    /// Number of non-gaps strictly below the conductor.
    fn small_count(&self) -> u64 {
        self.conductor - self.genus
    }

    /// `ρ_ℓ`, the ℓ-th smallest non-gap (1-based).
    pub fn rho(&self, ell: u64) -> Result<u64, SemigroupError> {
        if ell == 0 {
            return Err(SemigroupError::BadIndex);
        }
        Ok(self.rho_unchecked(ell))
    }

    fn rho_unchecked(&self, ell: u64) -> u64 {
        if ell <= self.small_count() {
            self.elements[(ell - 1) as usize]
        } else {
            ell - 1 + self.genus
        }
    }

    /// The index ℓ with `ρ_ℓ = value`, if `value` is a non-gap.
    pub fn index_of(&self, value: u64) -> Option<u64> {
        if value >= self.conductor {
            Some(value + 1 - self.genus)
        } else {
            self.elements.binary_search(&value).ok().map(|i| i as u64 + 1)
        }
    }

    /// Number of ordered pairs `(a, b) ∈ S × S` with `a + b = value`.
    pub fn pair_count(&self, value: u64) -> u64 {
        let below_conductor = self
            .elements
            .iter()
            .take_while(|&&a| a <= value && a < self.conductor)
            .filter(|&&a| self.contains(value - a))
            .count() as u64;
        let tail = if value >= self.conductor {
            (self.conductor..=value).filter(|&a| self.contains(value - a)).count() as u64
        } else {
            0
        };
        below_conductor + tail
    }

    /// `ν_ℓ = #{(a, b) ∈ S² : a + b = ρ_{ℓ+1}}` for ℓ ≥ 0.
    pub fn nu(&self, ell: u64) -> u64 {
        self.pair_count(self.rho_unchecked(ell + 1))
    }

    /// First index from which `ν_ℓ = ℓ + 1 - g` holds.
    pub fn tail_start(&self) -> u64 {
        (2 * self.conductor + 1).saturating_sub(self.genus + 2)
    }

    /// Feng–Rao order bound `d_ORD(C_ℓ) = min{ν_m : m ≥ ℓ}`.
    pub fn order_bound(&self, ell: u64) -> u64 {
        // ν_m = m + 1 - g is increasing past the tail start.
        let last = ell.max(self.tail_start());
        (ell..=last).map(|m| self.nu(m)).min().expect("non-empty range")
    }

    /// Indices `i ≥ 0` with `ν_i < d`; the parity checks of the improved code are `h_{i+1}`.
    pub fn improved_indices(&self, d: u64) -> Vec<u64> {
        // In the tail ν_i < d iff i < d + g - 1.
        let end = self.tail_start().max(d + self.genus);
        (0..end).filter(|&i| self.nu(i) < d).collect()
    }

    /// `r_d = #{i ≥ 0 : ν_i < d}`.
    pub fn r_d(&self, d: u64) -> u64 {
        self.improved_indices(d).len() as u64
    }

    /// Greedy factorisation of `value` over the generators: the exponent of the
    /// largest generator is maximised first, then the next, and so on.
    /// Exponents are returned in generator order.
    pub fn factor(&self, value: u64) -> Option<Vec<u64>> {
        factor_over(&self.generators, value)
    }
}

/// Representation of `value` as `Σ e_i·weights[i]`, maximising exponents of
/// larger weights first (lexicographically largest when read from the largest
/// weight down). `weights` need not be sorted.
pub fn factor_over(weights: &[u64], value: u64) -> Option<Vec<u64>> {
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));

    // representable[v]: v is a non-negative combination of weights[order[k..]]
    let n = value as usize;
    let k = order.len();
    let mut representable = vec![vec![false; n + 1]; k + 1];
    representable[k][0] = true;
    for idx in (0..k).rev() {
        let w = weights[order[idx]] as usize;
        for v in 0..=n {
            representable[idx][v] = representable[idx + 1][v] || (v >= w && representable[idx][v - w]);
        }
    }
    if !representable[0][n] {
        return None;
    }
    let mut exps = vec![0u64; weights.len()];
    let mut rest = n;
    for (pos, &gi) in order.iter().enumerate() {
        let w = weights[gi] as usize;
        let mut e = rest / w;
        while !representable[pos + 1][rest - e * w] {
            e -= 1;
        }
        exps[gi] = e as u64;
        rest -= e * w;
    }
    Some(exps)
}

/// Weierstrass semigroup of the GK curve at a rational point of the given orbit.
pub fn gk_semigroup(qbar: u32, orbit: Orbit) -> Result<NumericalSemigroup, SemigroupError> {
    let qb = u64::from(qbar);
    let gens: Vec<u64> = match (orbit, qbar) {
        (Orbit::O1, _) => vec![qb.pow(3) - qb * qb + qb, qb.pow(3), qb.pow(3) + 1],
        (Orbit::O2, 2) => vec![7, 8, 9, 13],
        (Orbit::O2, 3) => vec![25, 27, 28, 74, 121],
        (Orbit::O2, other) => return Err(SemigroupError::Unknown(other)),
    };
    NumericalSemigroup::from_generators(&gens)
}

/// One row of a `C_ℓ` table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NuRow {
    pub ell: u64,
    pub rho: u64,
    pub nu: u64,
    pub d_ord: u64,
}

pub fn nu_rows(s: &NumericalSemigroup, max_rho: u64) -> Vec<NuRow> {
    (1..)
        .map(|ell| (ell, s.rho_unchecked(ell)))
        .take_while(|&(_, rho)| rho <= max_rho)
        .map(|(ell, rho)| NuRow { ell, rho, nu: s.nu(ell), d_ord: s.order_bound(ell) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Naive closure: every sum of generators up to `limit`.
    fn closure(gens: &[u64], limit: u64) -> BTreeSet<u64> {
        let mut set = BTreeSet::from([0u64]);
        let mut frontier = vec![0u64];
        while let Some(v) = frontier.pop() {
            for &g in gens {
                let w = v + g;
                if w <= limit && set.insert(w) {
                    frontier.push(w);
                }
            }
        }
        set
    }

    fn naive_pairs(set: &BTreeSet<u64>, value: u64) -> u64 {
        set.iter().filter(|&&a| a <= value && set.contains(&(value - a))).count() as u64
    }

    #[test]
    fn o1_qbar2_gaps_and_genus() {
        let s = NumericalSemigroup::from_generators(&[6, 8, 9]).unwrap();
        assert_eq!(s.genus(), 10);
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 5, 7, 10, 11, 13, 19]);
        assert_eq!(s.conductor(), 20);
    }

    #[test]
    fn genera_of_the_four_gk_semigroups() {
        assert_eq!(NumericalSemigroup::from_generators(&[7, 8, 9, 13]).unwrap().genus(), 10);
        assert_eq!(NumericalSemigroup::from_generators(&[25, 27, 28, 74, 121]).unwrap().genus(), 99);
        let s = gk_semigroup(3, Orbit::O1).unwrap();
        assert_eq!(s.generators(), &[21, 27, 28]);
        assert_eq!(s.genus(), 99);
        assert_eq!(gk_semigroup(2, Orbit::O1).unwrap().generators(), &[6, 8, 9]);
        assert_eq!(gk_semigroup(2, Orbit::O2).unwrap().generators(), &[7, 8, 9, 13]);
        assert_eq!(gk_semigroup(4, Orbit::O2).unwrap_err(), SemigroupError::Unknown(4));
        // O1 is available for any q̄; genus matches the curve genus formula
        assert_eq!(gk_semigroup(4, Orbit::O1).unwrap().genus(), 65 * 14 / 2 + 1);
    }

    #[test]
    fn gcd_and_index_errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[4, 6]).unwrap_err(), SemigroupError::InfiniteGaps(2));
        assert_eq!(NumericalSemigroup::from_generators(&[]).unwrap_err(), SemigroupError::Empty);
        let s = NumericalSemigroup::from_generators(&[6, 8, 9]).unwrap();
        assert_eq!(s.rho(0), Err(SemigroupError::BadIndex));
    }

    #[test]
    fn trivial_semigroup() {
        let s = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!((s.genus(), s.conductor()), (0, 0));
        assert_eq!(s.rho(5).unwrap(), 4);
        assert_eq!(s.nu(0), 1);
    }

    #[test]
    fn rho_values() {
        let s = NumericalSemigroup::from_generators(&[6, 8, 9]).unwrap();
        assert_eq!(s.rho(1).unwrap(), 0);
        assert_eq!(s.rho(2).unwrap(), 6);
        assert_eq!(s.rho(5).unwrap(), 12);
        let t = NumericalSemigroup::from_generators(&[7, 8, 9, 13]).unwrap();
        assert_eq!(t.rho(5).unwrap(), 13);
        for ell in 1..200 {
            assert_eq!(t.index_of(t.rho(ell).unwrap()), Some(ell));
        }
        assert_eq!(t.index_of(19), None);
    }

    #[test]
    fn nu_and_order_bound_examples() {
        let s = NumericalSemigroup::from_generators(&[6, 8, 9]).unwrap();
        let ell = s.index_of(12).unwrap();
        assert_eq!(s.nu(ell), 4);
        assert_eq!(s.order_bound(ell), 3);
        let t = NumericalSemigroup::from_generators(&[7, 8, 9, 13]).unwrap();
        assert_eq!(t.nu(t.index_of(29).unwrap()), 13);
        assert_eq!(t.order_bound(t.index_of(28).unwrap()), 12);
        // row ρ_1 = 0 of the O2 table: pairs (0,7), (7,0)
        assert_eq!(t.nu(1), 2);
        assert_eq!(t.nu(0), 1);
    }

    #[test]
    fn r_d_examples() {
        let s = NumericalSemigroup::from_generators(&[6, 8, 9]).unwrap();
        assert_eq!(s.r_d(13), 21);
        let t = NumericalSemigroup::from_generators(&[7, 8, 9, 13]).unwrap();
        assert_eq!(t.r_d(5), 10);
        // ν_0 = 1 always, and ν_i ≥ 2 for i ≥ 1
        for sg in [&s, &t] {
            assert_eq!(sg.r_d(2), 1);
            assert!((1..500).all(|i| sg.nu(i) >= 2));
        }
    }

    #[test]
    fn tail_law_and_lower_bound() {
        for gens in [&[6u64, 8, 9][..], &[7, 8, 9, 13], &[21, 27, 28], &[25, 27, 28, 74, 121]] {
            let s = NumericalSemigroup::from_generators(gens).unwrap();
            let (c, g) = (s.conductor(), s.genus());
            for ell in (2 * c - g - 1)..=(2 * c + 50) {
                assert_eq!(s.nu(ell), ell + 1 - g, "{gens:?} ℓ={ell}");
            }
            for ell in 0..(2 * c + 50) {
                assert!(s.order_bound(ell) + g > ell);
            }
            assert!(s.contains(s.conductor()) && !s.contains(s.conductor() - 1));
        }
    }

    #[test]
    fn gk_semigroups_contain_q_and_q_plus_1() {
        for (qbar, orbit) in [(2, Orbit::O1), (2, Orbit::O2), (3, Orbit::O1), (3, Orbit::O2)] {
            let s = gk_semigroup(qbar, orbit).unwrap();
            let q = u64::from(qbar).pow(3);
            assert!(s.contains(q) && s.contains(q + 1));
            let qb = u64::from(qbar);
            assert_eq!(s.genus(), (qb.pow(3) + 1) * (qb * qb - 2) / 2 + 1);
        }
    }

    #[test]
    fn greedy_factorisation() {
        let s = NumericalSemigroup::from_generators(&[6, 8, 9]).unwrap();
        assert_eq!(s.factor(12), Some(vec![2, 0, 0]));
        assert_eq!(s.factor(0), Some(vec![0, 0, 0]));
        assert_eq!(s.factor(7), None);
        let t = NumericalSemigroup::from_generators(&[7, 8, 9, 13]).unwrap();
        assert_eq!(t.factor(13), Some(vec![0, 0, 0, 1]));
        assert_eq!(t.factor(16), Some(vec![1, 0, 1, 0]));
        for v in 0..300 {
            let e = t.factor(v);
            assert_eq!(e.is_some(), t.contains(v));
            if let Some(e) = e {
                assert_eq!(e.iter().zip(t.generators()).map(|(a, b)| a * b).sum::<u64>(), v);
            }
        }
    }

    #[test]
    fn nu_rows_table_shape() {
        let s = gk_semigroup(2, Orbit::O2).unwrap();
        let rows = nu_rows(&s, 38);
        assert_eq!(rows.len(), 29);
        assert_eq!(rows[0], NuRow { ell: 1, rho: 0, nu: 2, d_ord: 2 });
    }

    proptest! {
        #[test]
        fn agrees_with_naive_closure(gens in prop::collection::vec(1u64..=15, 1..5)) {
            let g = gens.iter().fold(0, |a, &b| gcd(a, b));
            prop_assume!(g == 1);
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            let limit = s.conductor() + 60;
            let naive = closure(&gens, limit);
            let gaps: Vec<u64> = (1..=limit).filter(|n| !naive.contains(n)).collect();
            prop_assert_eq!(gaps.clone(), s.gaps());
            prop_assert_eq!(gaps.len() as u64, s.genus());
            for v in 0..=limit {
                prop_assert_eq!(s.contains(v), naive.contains(&v));
            }
            let sorted: Vec<u64> = naive.iter().copied().collect();
            for (i, &rho) in sorted.iter().enumerate().take(40) {
                prop_assert_eq!(s.rho(i as u64 + 1).unwrap(), rho);
                if i + 1 < sorted.len() {
                    prop_assert_eq!(s.nu(i as u64), naive_pairs(&naive, sorted[i]));
                }
            }
        }
    }
}
