//! Both sides of every generating-function identity: brute-force sums over
//! partitions weighted by their statistics, and closed-form truncated
//! products.
//!
//! Bivariate and multivariate series are carried in shifted variables
//! v = u - 1, because (1+v)^g = sum_d binom(g,d) v^d turns every
//! "d-th derivative at u=1, divided by d!" into plain coefficient
//! extraction; no symbolic differentiation happens anywhere.

use std::collections::HashMap;

use crate::bpoly::{bpoly_binom, BPoly, BPolyRing};
use crate::partition::{enumerate_partitions, StatVector};
use crate::ring::{binom_u64, CoeffRing, Rat, RationalField};
use crate::series::{euler_inverse, geometric_factor, product_truncated, QSeries};
use crate::upoly::UPolyRing;

/// Which family of per-partition statistics a moment ranges over: the
/// multiplicity thresholds gamma_{>=k}, or the hook counts H_k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StatSide {
    Gamma,
    Hook,
}

/// A mixed binomial moment: the partition sum
/// `sum_{lambda of n} prod_s binom(stat_{k_s}(lambda), d_s)`
/// with strictly increasing thresholds `k_s` and degrees `d_s >= 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatMoment {
    side: StatSide,
    pairs: Vec<(usize, usize)>,
}

impl StatMoment {
    /// Panics unless the thresholds are strictly increasing, at least 1, and
    /// every degree is at least 1.
    pub fn new(side: StatSide, pairs: Vec<(usize, usize)>) -> Self {
        assert!(!pairs.is_empty(), "a moment needs at least one (k, d) pair");
        for &(k, d) in &pairs {
            assert!(k >= 1 && d >= 1, "thresholds and degrees must be positive");
        }
        for w in pairs.windows(2) {
            assert!(w[0].0 < w[1].0, "thresholds must be strictly increasing");
        }
        StatMoment { side, pairs }
    }

    pub fn side(&self) -> StatSide {
        self.side
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

fn stat_value(sv: &StatVector, side: StatSide, k: usize) -> usize {
    match side {
        StatSide::Gamma => sv.gamma_geq(k),
        StatSide::Hook => sv.hook_count(k),
    }
}

/// Counts the partitions of `n` by a statistic key, so that polynomial
/// weights are computed once per distinct key instead of once per partition.
fn group_by_key<F>(n: usize, mut key: F) -> HashMap<Vec<usize>, u64>
where
    F: FnMut(&StatVector) -> Vec<usize>,
{
    let mut groups: HashMap<Vec<usize>, u64> = HashMap::new();
    for lam in enumerate_partitions(n) {
        *groups.entry(key(&lam.stat_vector())).or_insert(0) += 1;
    }
    groups
}

/// Memoized powers of a fixed polynomial.
struct PowCache {
    base: BPoly,
    powers: Vec<BPoly>,
}

impl PowCache {
    fn new(base: BPoly) -> Self {
        PowCache {
            base,
            powers: vec![BPoly::one()],
        }
    }

    fn get(&mut self, e: usize) -> &BPoly {
        while self.powers.len() <= e {
            let next = self.powers.last().unwrap().mul(&self.base);
            self.powers.push(next);
        }
        &self.powers[e]
    }
}

/// The hook-length series restricted to hooks of length at most `j`:
/// `[q^n]` is `sum_{lambda of n} prod_{hooks h <= j} (1 - b/h^2)`.
///
/// Per partition the product is `prod_{h<=j} (1 - b/h^2)^{H_h}`, so
/// partitions are grouped by their vector (H_1, ..., H_j).
pub fn hno_truncated(j: usize, n_order: usize) -> QSeries<BPolyRing> {
    assert!(j >= 1, "truncation depth must be at least 1");
    let mut caches: Vec<PowCache> = (1..=j)
        .map(|h| {
            let factor = BPoly::from_coeffs(vec![Rat::one(), Rat::new(-1, (h * h) as i64)]);
            PowCache::new(factor)
        })
        .collect();
    let mut out = QSeries::zero(BPolyRing, n_order);
    for n in 0..=n_order {
        let groups = group_by_key(n, |sv| (1..=j).map(|h| sv.hook_count(h)).collect());
        let mut acc = BPoly::zero();
        for (key, count) in groups {
            let mut w = BPoly::one();
            for (idx, &e) in key.iter().enumerate() {
                if e > 0 {
                    w = w.mul(caches[idx].get(e));
                }
            }
            acc = acc.add(&w.scale(&Rat::from_uint(count)));
        }
        out.set_coeff(n, acc);
    }
    out
}

/// The colored-partition series truncated at multiplicity `j`:
/// `[q^n]` is `sum_{lambda of n} prod_{i : nu_i > 0} binom(min(j, nu_i) - b, min(j, nu_i))`.
///
/// Grouping the factors of the product by clipped multiplicity turns the
/// per-partition weight into
/// `prod_{m<j} binom(m-b,m)^{gamma_m} * binom(j-b,j)^{gamma_{>=j}}`,
/// so partitions are grouped by the vector (gamma_1, ..., gamma_{j-1}, gamma_{>=j}).
pub fn cprime_truncated(j: usize, n_order: usize) -> QSeries<BPolyRing> {
    assert!(j >= 1, "truncation depth must be at least 1");
    let mut caches: Vec<PowCache> = (1..=j).map(|m| PowCache::new(bpoly_binom(m))).collect();
    let mut out = QSeries::zero(BPolyRing, n_order);
    for n in 0..=n_order {
        let groups = group_by_key(n, |sv| {
            let mut key: Vec<usize> = (1..j)
                .map(|m| sv.gamma.get(&m).copied().unwrap_or(0))
                .collect();
            key.push(sv.gamma_geq(j));
            key
        });
        let mut acc = BPoly::zero();
        for (key, count) in groups {
            let mut w = BPoly::one();
            for (idx, &e) in key.iter().enumerate() {
                if e > 0 {
                    w = w.mul(caches[idx].get(e));
                }
            }
            acc = acc.add(&w.scale(&Rat::from_uint(count)));
        }
        out.set_coeff(n, acc);
    }
    out
}

/// The same series as [`cprime_truncated`], built the dual way: part sizes
/// choose their multiplicities independently, so the series is the product
/// over sizes `i` of `sum_m binom(min(j,m) - b, min(j,m)) q^{im}`.
pub fn cprime_product_form(j: usize, n_order: usize) -> QSeries<BPolyRing> {
    assert!(j >= 1, "truncation depth must be at least 1");
    let binoms: Vec<BPoly> = (0..=j).map(bpoly_binom).collect();
    let factors = (1usize..).map(|i| {
        let mut f = QSeries::zero(BPolyRing, n_order);
        for m in 0..=n_order / i {
            f.set_coeff(m * i, binoms[m.min(j)].clone());
        }
        f
    });
    product_truncated(BPolyRing, n_order, factors)
        .expect("factor i is 1 + O(q^i), so the product converges")
}

/// The full infinite product `prod_m (1 - q^m)^{b-1}` to order `n_order`.
///
/// Expanding each factor by the binomial series gives
/// `(1-q^m)^{b-1} = sum_d binom(d-b, d) q^{md}`, which is the `j -> infinity`
/// limit of the factors in [`cprime_product_form`]; at truncation order N any
/// `j >= N` realizes it exactly.
pub fn hno_infinite_product(n_order: usize) -> QSeries<BPolyRing> {
    cprime_product_form(n_order.max(1), n_order)
}

/// The universal brute-force oracle: `[q^n]` is the moment sum of `m` over
/// all partitions of `n`, as an exact (integer-valued) rational.
pub fn brute_stat_sum(m: &StatMoment, n_order: usize) -> QSeries<RationalField> {
    let mut out = QSeries::zero(RationalField, n_order);
    for n in 0..=n_order {
        let mut total: u64 = 0;
        for lam in enumerate_partitions(n) {
            let sv = lam.stat_vector();
            let mut w: u64 = 1;
            for &(k, d) in m.pairs() {
                w *= binom_u64(stat_value(&sv, m.side, k) as u64, d as u64);
                if w == 0 {
                    break;
                }
            }
            total += w;
        }
        out.set_coeff(n, Rat::from_uint(total));
    }
    out
}

/// All per-size totals over the partitions of `n` in one enumeration pass.
///
/// Index `i` of each vector (1-based; index 0 is unused) holds the total of
/// `nu_i`, `H_i`, or `gamma_{>=i}` over all partitions of `n`.
pub struct StatTotals {
    pub nu: Vec<u64>,
    pub hooks: Vec<u64>,
    pub gamma_geq: Vec<u64>,
}

pub fn stat_totals(n: usize) -> StatTotals {
    let mut nu = vec![0u64; n + 1];
    let mut hooks = vec![0u64; n + 1];
    let mut gamma = vec![0u64; n + 1];
    for lam in enumerate_partitions(n) {
        let sv = lam.stat_vector();
        for (&i, &c) in &sv.nu {
            nu[i] += c as u64;
        }
        for (&h, &c) in &sv.hooks {
            hooks[h] += c as u64;
        }
        for (&m, &c) in &sv.gamma {
            gamma[m] += c as u64;
        }
    }
    // suffix sums turn gamma_m totals into gamma_{>=k} totals
    for k in (1..n).rev() {
        gamma[k] += gamma[k + 1];
    }
    StatTotals {
        nu,
        hooks,
        gamma_geq: gamma,
    }
}

/// Number of partitions of `n`, by enumeration.
pub fn partition_count(n: usize) -> u64 {
    enumerate_partitions(n).count() as u64
}

/// The composition-sum coefficients of `b^0 .. b^{c_max}` on `q^n`:
/// for each c, `(-1)^c sum_{lambda of n} sum_{a_1+...+a_j=c} prod_s w_s^{a_s} binom(stat_s, a_s)`
/// with `w_s = 1/s`, `stat_s = gamma_{>=s}` on the gamma side and
/// `w_s = 1/s^2`, `stat_s = H_s` on the hook side.
///
/// The inner sum over compositions is evaluated per partition as the
/// `x^c` coefficient of `prod_s (sum_a binom(stat_s, a) w_s^a x^a)`.
/// The factor `(-1)^c` is the sign the expansions `(1 - b/s)^{stat}` force on
/// the `b^c` term, so the returned value matches `[b^c][q^n]` of the
/// corresponding truncated series exactly.
pub fn composition_coeffs(side: StatSide, j: usize, c_max: usize, n: usize) -> Vec<Rat> {
    assert!(j >= 1, "truncation depth must be at least 1");
    // w_pows[s-1][a] = w_s^a
    let w_pows: Vec<Vec<Rat>> = (1..=j)
        .map(|s| {
            let w = match side {
                StatSide::Gamma => Rat::new(1, s as i64),
                StatSide::Hook => Rat::new(1, (s * s) as i64),
            };
            (0..=c_max as u32).map(|a| w.pow(a)).collect()
        })
        .collect();
    let groups = group_by_key(n, |sv| (1..=j).map(|s| stat_value(sv, side, s)).collect());
    let mut totals = vec![Rat::zero(); c_max + 1];
    for (key, count) in groups {
        let mut dp = vec![Rat::zero(); c_max + 1];
        dp[0] = Rat::one();
        for (s, &stat) in key.iter().enumerate() {
            let mut next = vec![Rat::zero(); c_max + 1];
            for (t, v) in dp.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for a in 0..=(c_max - t) {
                    let ways = binom_u64(stat as u64, a as u64);
                    if ways == 0 {
                        continue;
                    }
                    let term = &(v * &w_pows[s][a]) * &Rat::from_uint(ways);
                    next[t + a] = &next[t + a] + &term;
                }
            }
            dp = next;
        }
        let cnt = Rat::from_uint(count);
        for (t, v) in dp.into_iter().enumerate() {
            totals[t] = &totals[t] + &(&v * &cnt);
        }
    }
    for (c, v) in totals.iter_mut().enumerate() {
        if c % 2 == 1 {
            *v = -&*v;
        }
    }
    totals
}

/// Single coefficient of the composition-sum formula; see
/// [`composition_coeffs`] for the sign convention.
pub fn coeff_by_composition(side: StatSide, j: usize, c: usize, n: usize) -> Rat {
    composition_coeffs(side, j, c, n).pop().unwrap()
}

/// The hook-count generating function
/// `F_k = (1/(q)_inf) prod_i (1 + q^{ki}(u-1))^k`, carried in v = u - 1:
/// `[v^d][q^n]` is `sum_{lambda of n} binom(H_k(lambda), d)` for d up to `cap`.
pub fn han_hook_gf(k: usize, n_order: usize, cap: usize) -> QSeries<UPolyRing> {
    assert!(k >= 1, "hook length must be at least 1");
    let ring = UPolyRing::new(vec![cap]);
    let v = ring.monomial(vec![1], Rat::one());
    let factors = (1usize..).map(|i| {
        let mut base = QSeries::one(ring.clone(), n_order);
        if k * i <= n_order {
            base.set_coeff(k * i, v.clone());
        }
        let mut acc = QSeries::one(ring.clone(), n_order);
        for _ in 0..k {
            acc = acc.mul(&base);
        }
        acc
    });
    let prod = product_truncated(ring.clone(), n_order, factors)
        .expect("factor i is 1 + O(q^{ki}), so the product converges");
    euler_inverse(n_order).lift_into(ring).mul(&prod)
}

/// The multiplicity-threshold generating function for thresholds
/// `k_1 < ... < k_r` carried in v_s = u_s - 1 with per-variable caps:
/// `[prod_s v_s^{d_s}][q^n]` is
/// `sum_{lambda of n} prod_s binom(gamma_{>=k_s}(lambda), d_s)`.
///
/// Each part size `i` contributes the factor
/// `sum_m q^{mi} prod_{s : k_s <= m} (1 + v_s)`: a size at multiplicity m is
/// marked by every threshold it meets.
pub fn multiplicity_gf(thresholds: &[usize], caps: &[usize], n_order: usize) -> QSeries<UPolyRing> {
    assert!(!thresholds.is_empty(), "at least one threshold required");
    assert_eq!(thresholds.len(), caps.len(), "one cap per threshold");
    assert!(thresholds[0] >= 1, "thresholds must be at least 1");
    for w in thresholds.windows(2) {
        assert!(w[0] < w[1], "thresholds must be strictly increasing");
    }
    let ring = UPolyRing::new(caps.to_vec());
    let one_plus_v: Vec<_> = (0..thresholds.len())
        .map(|s| {
            let mut exps = vec![0; thresholds.len()];
            exps[s] = 1;
            ring.add(&ring.one(), &ring.monomial(exps, Rat::one()))
        })
        .collect();
    let factor_ring = ring.clone();
    let factors = (1usize..).map(move |i| {
        let mut f = QSeries::zero(factor_ring.clone(), n_order);
        let mut mark = factor_ring.one();
        let mut next_s = 0;
        for m in 0..=n_order / i {
            while next_s < thresholds.len() && thresholds[next_s] <= m {
                mark = factor_ring.mul(&mark, &one_plus_v[next_s]);
                next_s += 1;
            }
            f.set_coeff(m * i, mark.clone());
        }
        f
    });
    product_truncated(ring, n_order, factors)
        .expect("factor i is 1 + O(q^i), so the product converges")
}

/// Closed form of the d-th binomial moment of gamma_{>=k}:
/// `(1/(q)_inf) prod_{i=1}^{d} q^{ik}/(1 - q^{ik})`. The lowest nonzero term
/// sits at `q^{k d(d+1)/2}`.
pub fn gamma_moment_closed(k: usize, d: usize, n_order: usize) -> QSeries<RationalField> {
    assert!(k >= 1 && d >= 1, "threshold and degree must be positive");
    let mut s = euler_inverse(n_order);
    for i in 1..=d {
        let factor = geometric_factor(RationalField, i * k, &Rat::one(), n_order).mul_qpow(i * k);
        s = s.mul(&factor);
    }
    s
}

/// Closed form of the second binomial moment of H_k:
/// `(1/2) (1/(q)_inf) [ (k q^k / (1-q^k))^2 - k q^{2k} / (1-q^{2k}) ]`.
pub fn hook_pair_closed(k: usize, n_order: usize) -> QSeries<RationalField> {
    assert!(k >= 1, "hook length must be at least 1");
    let kr = Rat::from_uint(k as u64);
    let a = geometric_factor(RationalField, k, &Rat::one(), n_order)
        .mul_qpow(k)
        .scale(&kr);
    let b = geometric_factor(RationalField, 2 * k, &Rat::one(), n_order)
        .mul_qpow(2 * k)
        .scale(&kr);
    let inner = a.mul(&a).sub(&b);
    euler_inverse(n_order).mul(&inner).scale(&Rat::new(1, 2))
}

/// The simplified k = 2 form of [`hook_pair_closed`]:
/// `(1/(q)_inf) q^4 (1 + 3q^2) / ((1-q^2)(1-q^4))`.
pub fn hook_pair_closed_k2_alt(n_order: usize) -> QSeries<RationalField> {
    let num = QSeries::monomial(RationalField, 4, Rat::one(), n_order).add(&QSeries::monomial(
        RationalField,
        6,
        Rat::from_int(3),
        n_order,
    ));
    num.mul(&geometric_factor(RationalField, 2, &Rat::one(), n_order))
        .mul(&geometric_factor(RationalField, 4, &Rat::one(), n_order))
        .mul(&euler_inverse(n_order))
}

/// Closed form of the mixed first moments of H_1 and H_2:
/// `2 (1/(q)_inf) (q^2 + q^4 + q^5) / ((1-q^2)(1-q^3))`.
pub fn h1h2_closed(n_order: usize) -> QSeries<RationalField> {
    let num = QSeries::monomial(RationalField, 2, Rat::one(), n_order)
        .add(&QSeries::monomial(RationalField, 4, Rat::one(), n_order))
        .add(&QSeries::monomial(RationalField, 5, Rat::one(), n_order));
    num.mul(&geometric_factor(RationalField, 2, &Rat::one(), n_order))
        .mul(&geometric_factor(RationalField, 3, &Rat::one(), n_order))
        .mul(&euler_inverse(n_order))
        .scale(&Rat::from_int(2))
}

/// The hook-count distributions f_k(n, a) = number of partitions of n with
/// exactly a hooks of length k, for n up to `n_order`.
///
/// Recovered from the v-moments of [`han_hook_gf`] by inverting the binomial
/// re-expansion u^a = (1+v)^a: with m_d = `[v^d][q^n]`,
/// `f_k(n, a) = sum_d (-1)^{d-a} binom(d, a) m_d`. Row `n` of the result is
/// `[f_k(n,0), f_k(n,1), ...]` up to the highest moment present.
pub fn han_u_distribution(k: usize, n_order: usize) -> Vec<Vec<Rat>> {
    // cap = n_order can never clip: H_k <= n/k <= n_order
    let series = han_hook_gf(k, n_order, n_order);
    (0..=n_order)
        .map(|n| {
            let poly = series.coeff(n);
            let max_d = poly.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
            (0..=max_d)
                .map(|a| {
                    let mut f = Rat::zero();
                    for d in a..=max_d {
                        let m_d = poly.coeff(&[d]);
                        let mut term = &m_d * &Rat::from_uint(binom_u64(d as u64, a as u64));
                        if (d - a) % 2 == 1 {
                            term = -term;
                        }
                        f = &f + &term;
                    }
                    f
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn bp(coeffs: &[(i64, i64)]) -> BPoly {
        BPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn hno_small_coefficients() {
        let s = hno_truncated(2, 3);
        assert_eq!(s.coeff(0), &BPoly::one());
        // the single partition (1) has one hook of size 1
        assert_eq!(s.coeff(1), &bp(&[(1, 1), (-1, 1)]));
        // both partitions of 2 have hook multiset {2, 1}: each contributes
        // (1 - b)(1 - b/4)
        assert_eq!(s.coeff(2), &bp(&[(2, 1), (-5, 2), (1, 2)]));
    }

    #[test]
    fn hno_q1_independent_of_j() {
        for j in 1..=4 {
            assert_eq!(hno_truncated(j, 1).coeff(1), &bp(&[(1, 1), (-1, 1)]));
        }
    }

    #[test]
    fn cprime_small_coefficients() {
        let s = cprime_truncated(2, 3);
        assert_eq!(s.coeff(0), &BPoly::one());
        // (2) contributes binom(1-b,1); (1,1) contributes binom(2-b,2)
        assert_eq!(s.coeff(2), &bp(&[(2, 1), (-5, 2), (1, 2)]));
    }

    #[test]
    fn cprime_grouping_matches_direct_product() {
        // the grouped weight must equal the literal per-partition product
        // of binom(min(j, nu_i) - b, min(j, nu_i))
        for j in 1..=3 {
            let s = cprime_truncated(j, 9);
            for n in 0..=9 {
                let mut direct = BPoly::zero();
                for lam in enumerate_partitions(n) {
                    let mut w = BPoly::one();
                    for &m in lam.stat_vector().nu.values() {
                        w = w.mul(&bpoly_binom(m.min(j)));
                    }
                    direct = direct.add(&w);
                }
                assert_eq!(s.coeff(n), &direct, "j={j} n={n}");
            }
        }
    }

    #[test]
    fn cprime_j1_equals_hno_j1() {
        assert_eq!(cprime_truncated(1, 10), hno_truncated(1, 10));
    }

    #[test]
    fn cprime_product_form_matches_partition_sum() {
        for j in 1..=3 {
            assert_eq!(cprime_product_form(j, 10), cprime_truncated(j, 10), "j={j}");
        }
    }

    #[test]
    fn infinite_product_equals_full_hook_sum() {
        // With j at the truncation order no hook is excluded, so the
        // partition sum is the full hook-length series, equal to the
        // infinite product.
        assert_eq!(hno_infinite_product(8), hno_truncated(8, 8));
    }

    #[test]
    fn infinite_product_low_coefficients() {
        let s = hno_infinite_product(2);
        assert_eq!(s.coeff(0), &BPoly::one());
        assert_eq!(s.coeff(1), &bp(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn brute_stat_sum_examples() {
        let g11 = brute_stat_sum(&StatMoment::new(StatSide::Gamma, vec![(1, 1)]), 3);
        assert_eq!(g11.coeff(3), &Rat::from_int(4));

        let h11_21 = brute_stat_sum(&StatMoment::new(StatSide::Hook, vec![(1, 1), (2, 1)]), 2);
        assert_eq!(h11_21.coeff(2), &Rat::from_int(2));
        assert_eq!(h11_21.coeff(0), &Rat::zero());
    }

    #[test]
    #[should_panic(expected = "strictly increasing")]
    fn stat_moment_rejects_unordered_thresholds() {
        let _ = StatMoment::new(StatSide::Gamma, vec![(2, 1), (1, 1)]);
    }

    #[test]
    fn stat_totals_small() {
        // partitions of 3: (3), (2,1), (1,1,1)
        let t = stat_totals(3);
        assert_eq!(t.nu[1..], [4, 1, 1]);
        assert_eq!(t.hooks[1..], [4, 2, 3]);
        assert_eq!(t.gamma_geq[1..], [4, 1, 1]);
        assert_eq!(partition_count(10), 42);
    }

    #[test]
    fn composition_constant_term_is_partition_count() {
        for n in 0..=8 {
            let p_n = Rat::from_uint(partition_count(n));
            assert_eq!(coeff_by_composition(StatSide::Gamma, 3, 0, n), p_n);
            assert_eq!(coeff_by_composition(StatSide::Hook, 2, 0, n), p_n);
        }
    }

    #[test]
    fn composition_linear_terms() {
        // [b^1][q^2] of the j=2 hook series is -5/2
        assert_eq!(coeff_by_composition(StatSide::Hook, 2, 1, 2), rat(-5, 2));
        // gamma side, j=1: sum of gamma_{>=1} over partitions of 3 is 4,
        // carried with the sign of the b^1 coefficient
        assert_eq!(coeff_by_composition(StatSide::Gamma, 1, 1, 3), rat(-4, 1));
    }

    #[test]
    fn composition_matches_series_extraction() {
        for j in 1..=3 {
            let hno = hno_truncated(j, 8);
            let cp = cprime_truncated(j, 8);
            for n in 0..=8 {
                let hook = composition_coeffs(StatSide::Hook, j, 3, n);
                let gamma = composition_coeffs(StatSide::Gamma, j, 3, n);
                for c in 0..=3 {
                    assert_eq!(hook[c], hno.coeff(n).coeff(c), "hook j={j} c={c} n={n}");
                    assert_eq!(gamma[c], cp.coeff(n).coeff(c), "gamma j={j} c={c} n={n}");
                }
            }
        }
    }

    #[test]
    fn han_gf_v_coefficients() {
        // [v^0][q^n] = p(n)
        let s = han_hook_gf(2, 6, 3);
        let euler = euler_inverse(6);
        for n in 0..=6 {
            assert_eq!(&s.coeff(n).coeff(&[0]), euler.coeff(n));
        }
        // [v^1][q^2] for k=2: both partitions of 2 have one hook of size 2
        assert_eq!(s.coeff(2).coeff(&[1]), Rat::from_int(2));
        // [v^1][q^3] for k=1: H_1 totals 4 over the partitions of 3
        let s1 = han_hook_gf(1, 3, 2);
        assert_eq!(s1.coeff(3).coeff(&[1]), Rat::from_int(4));
    }

    #[test]
    fn han_gf_moments_match_brute_force() {
        for k in 1..=3 {
            let s = han_hook_gf(k, 10, 3);
            for d in 1..=3 {
                let oracle = brute_stat_sum(&StatMoment::new(StatSide::Hook, vec![(k, d)]), 10);
                for n in 0..=10 {
                    assert_eq!(
                        &s.coeff(n).coeff(&[d]),
                        oracle.coeff(n),
                        "k={k} d={d} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn multiplicity_gf_examples() {
        // single threshold k=2: only (1,1) among the partitions of 2 has a
        // multiplicity >= 2
        let s = multiplicity_gf(&[2], &[1], 4);
        assert_eq!(s.coeff(2).coeff(&[1]), Rat::one());
        // thresholds (1,2): among the partitions of 3 only (1,1,1) has both
        // gamma_{>=1} >= 1 and gamma_{>=2} >= 1
        let s = multiplicity_gf(&[1, 2], &[1, 1], 4);
        assert_eq!(s.coeff(3).coeff(&[1, 1]), Rat::one());
    }

    #[test]
    fn multiplicity_gf_matches_brute_force() {
        let s = multiplicity_gf(&[1, 2], &[2, 1], 10);
        for d1 in 1..=2 {
            let oracle =
                brute_stat_sum(&StatMoment::new(StatSide::Gamma, vec![(1, d1), (2, 1)]), 10);
            for n in 0..=10 {
                assert_eq!(
                    &s.coeff(n).coeff(&[d1, 1]),
                    oracle.coeff(n),
                    "d1={d1} n={n}"
                );
            }
        }
    }

    #[test]
    fn gamma_moment_closed_examples() {
        let s = gamma_moment_closed(1, 1, 5);
        assert_eq!(s.coeff(3), &Rat::from_int(4));
        let s = gamma_moment_closed(4, 1, 5);
        assert_eq!(s.coeff(4), &Rat::one());
        let s = gamma_moment_closed(2, 2, 7);
        for n in 0..6 {
            assert_eq!(s.coeff(n), &Rat::zero(), "below the q^6 threshold");
        }
        assert_eq!(s.lowest_degree(), Some(6));
    }

    #[test]
    fn gamma_moment_matches_brute_force() {
        for k in 1..=3 {
            for d in 1..=3 {
                let closed = gamma_moment_closed(k, d, 12);
                let oracle = brute_stat_sum(&StatMoment::new(StatSide::Gamma, vec![(k, d)]), 12);
                assert_eq!(closed, oracle, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn hook_pair_matches_brute_force() {
        for k in 1..=3 {
            let closed = hook_pair_closed(k, 12);
            let oracle = brute_stat_sum(&StatMoment::new(StatSide::Hook, vec![(k, 2)]), 12);
            assert_eq!(closed, oracle, "k={k}");
            assert!(
                closed.coeff(0).is_zero(),
                "the empty partition has no hooks"
            );
        }
        assert_eq!(hook_pair_closed_k2_alt(12), hook_pair_closed(2, 12));
        // pinned values: both partitions of 2 have a single 1-hook, so the
        // k=1 pair count vanishes at q^2 and first reaches 1 at q^3 (from
        // (2,1)); the k=2 count first reaches 1 at q^4 (from (2,2)).
        let k1 = hook_pair_closed(1, 4);
        assert!(k1.coeff(2).is_zero());
        assert_eq!(k1.coeff(3), &Rat::one());
        assert_eq!(hook_pair_closed(2, 4).coeff(4), &Rat::one());
    }

    #[test]
    fn h1h2_matches_brute_force() {
        let closed = h1h2_closed(12);
        assert_eq!(closed.coeff(2), &Rat::from_int(2));
        let oracle = brute_stat_sum(&StatMoment::new(StatSide::Hook, vec![(1, 1), (2, 1)]), 12);
        assert_eq!(closed, oracle);
    }

    #[test]
    fn han_distribution_counts_partitions() {
        let dist = han_u_distribution(1, 6);
        for (n, row) in dist.iter().enumerate() {
            // direct histogram of H_1 over the partitions of n
            let mut hist: Vec<u64> = Vec::new();
            for lam in enumerate_partitions(n) {
                let h = lam.stat_vector().hook_count(1);
                if hist.len() <= h {
                    hist.resize(h + 1, 0);
                }
                hist[h] += 1;
            }
            assert_eq!(row.len(), hist.len(), "n={n}");
            for (a, f) in row.iter().enumerate() {
                assert_eq!(f, &Rat::from_uint(hist[a]), "n={n} a={a}");
            }
        }
        // partitions of 4 by number of 1-hooks: three have one distinct
        // size, two have two
        assert_eq!(
            dist[4],
            vec![Rat::zero(), Rat::from_int(3), Rat::from_int(2)]
        );
    }

    #[test]
    fn quadratic_difference_appears_at_weight_four() {
        let hno = hno_truncated(2, 5);
        let cp = cprime_truncated(2, 5);
        for n in 0..=3 {
            assert_eq!(hno.coeff(n).coeff(2), cp.coeff(n).coeff(2), "n={n}");
        }
        // only (1,1,1,1) has a multiplicity >= 4, so the b^2 gap at n=4 is 1/16
        let gap = &hno.coeff(4).coeff(2) - &cp.coeff(4).coeff(2);
        assert_eq!(gap, rat(1, 16));
    }

    #[test]
    fn running_example_statistics() {
        let lam: Partition = "5,4,3,3,2,2,1".parse().unwrap();
        let sv = lam.stat_vector();
        assert_eq!(stat_value(&sv, StatSide::Gamma, 2), 2);
        assert_eq!(stat_value(&sv, StatSide::Hook, 2), 2);
    }
}
