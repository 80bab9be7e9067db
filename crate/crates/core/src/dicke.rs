//! Direct constructors for Dicke-type states.
//!
//! The h-deformed lowest-weight state has amplitude `ξ(S)·(h/2)^{n↑(S)}` on
//! every basis state `S`, where `ξ` is an integer built from elementary
//! symmetric polynomials of the values `f(k) = 2k − N − 1` over the up sites.
//! Higher states follow by applying `Δ_h⁽ᴺ⁾(Z₊)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coproducts::{apply_dense, apply_h_zplus, apply_h_zplus_simplified, h_images, q_images, tangent_numbers};
use crate::hilbert::{check_sites, BasisState, Generator, NumericState, StateVector};
use crate::scalar::{factorial, q_factorial, sqrt_rational, HScalar, QValue, Rational};
use crate::{Error, Result};

/// Largest chain for the exact h-branch constructors: `ξ` needs `C_m` with
/// `m ≤ ⌊N/2⌋`, and only `C_0..C_5` are known.
pub const MAX_XI_SITES: usize = 11;
/// Largest chain accepted by [`lowest_weight_oracle`].
pub const MAX_ORACLE_SITES: usize = 6;

/// Sorted 1-based positions of the up spins in an `n_sites` chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExcitationPattern {
    n_sites: usize,
    positions: Vec<usize>,
}

impl ExcitationPattern {
    pub fn new(n_sites: usize, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        for (i, &p) in positions.iter().enumerate() {
            if p == 0 || p > n_sites {
                return Err(Error::SiteOutOfRange { site: p, n_sites });
            }
            if i > 0 && positions[i - 1] == p {
                return Err(Error::Format(format!("repeated position {p}")));
            }
        }
        Ok(Self { n_sites, positions })
    }

    pub fn of(state: &BasisState) -> Self {
        Self { n_sites: state.n_sites(), positions: state.up_sites() }
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn n_up(&self) -> usize {
        self.positions.len()
    }

    /// `f(k)` for every up position.
    pub fn f_values(&self) -> Vec<i64> {
        self.positions.iter().map(|&k| f_value(k, self.n_sites)).collect()
    }
}

impl fmt::Display for ExcitationPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.positions.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// `f(k) = 2k − N − 1`.
pub fn f_value(k: usize, n_sites: usize) -> i64 {
    2 * k as i64 - n_sites as i64 - 1
}

/// `e_m` of the given values; `e_0 = 1` and `e_m = 0` for `m > len`.
pub fn elementary_symmetric(values: &[i64], m: usize) -> BigInt {
    // e[j] after processing a prefix holds e_j of that prefix.
    let mut e = vec![BigInt::zero(); m + 1];
    e[0] = BigInt::one();
    for &v in values {
        for j in (1..=m).rev() {
            let term = &e[j - 1] * v;
            e[j] += term;
        }
    }
    e.swap_remove(m)
}

/// `(2m − 1)!!`, with `(−1)!! = 1`.
pub fn double_factorial_odd(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

/// The polynomials `C_m(N)` for `m = 0..=5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmTable {
    /// Ascending coefficients in `N`.
    coefficients: Vec<Vec<i64>>,
}

impl Default for CmTable {
    fn default() -> Self {
        Self::known()
    }
}

impl CmTable {
    pub fn known() -> Self {
        Self {
            coefficients: vec![
                vec![1],
                vec![0, 1],
                vec![0, -2, 3],
                vec![0, 16, -30, 15],
                vec![0, -272, 588, -420, 105],
                vec![0, 7936, -18960, 16380, -6300, 945],
            ],
        }
    }

    /// Number of known coefficients; `C_m` exists for `m < len()`.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn polynomial(&self, m: usize) -> Option<&[i64]> {
        self.coefficients.get(m).map(Vec::as_slice)
    }

    pub fn leading(&self, m: usize) -> Option<i64> {
        self.polynomial(m).and_then(|p| p.last().copied())
    }

    pub fn evaluate(&self, m: usize, n_sites: usize) -> Option<BigInt> {
        let p = self.polynomial(m)?;
        let n = BigInt::from(n_sites);
        Some(p.iter().rev().fold(BigInt::zero(), |acc, &c| acc * &n + c))
    }
}

/// `ξ(S) = Σ_{m ≤ n↑/2} C_m(N)·e_{n↑−2m}(f(P↑))`.
pub fn xi_factor(pattern: &ExcitationPattern, table: &CmTable) -> Result<BigInt> {
    let n_up = pattern.n_up();
    let needed = n_up / 2;
    if needed >= table.len() {
        return Err(Error::UnsupportedOrder { missing: table.len(), excitations: n_up });
    }
    let values = pattern.f_values();
    let n = pattern.n_sites();
    let mut xi = BigInt::zero();
    for m in 0..=needed {
        let c = table.evaluate(m, n).expect("m is below the table length");
        xi += c * elementary_symmetric(&values, n_up - 2 * m);
    }
    Ok(xi)
}

/// Large-`N` approximation of `ξ`: each `C_m(N)` replaced by `(2m−1)!!·N^m`.
pub fn xi_large_n(pattern: &ExcitationPattern) -> BigInt {
    let n_up = pattern.n_up();
    let values = pattern.f_values();
    let n = BigInt::from(pattern.n_sites());
    (0..=n_up / 2)
        .map(|m| double_factorial_odd(m) * num_traits::pow(n.clone(), m) * elementary_symmetric(&values, n_up - 2 * m))
        .sum()
}

fn check_k(n_sites: usize, k: usize) -> Result<()> {
    if k > n_sites {
        return Err(Error::range("number of excitations", k, 0, n_sites as i64));
    }
    Ok(())
}

/// Chains past [`MAX_XI_SITES`] but within the Hilbert-space limit fail with
/// the missing coefficient, not a range error.
fn check_xi_sites(n_sites: usize) -> Result<()> {
    if (MAX_XI_SITES + 1..=crate::hilbert::MAX_SITES).contains(&n_sites) {
        return Err(Error::UnsupportedOrder { missing: n_sites / 2, excitations: n_sites });
    }
    if !(2..=MAX_XI_SITES).contains(&n_sites) {
        return Err(Error::range("number of sites", n_sites, 2, MAX_XI_SITES as i64));
    }
    Ok(())
}

fn excited(n_sites: usize, k: usize) -> Result<impl Iterator<Item = BasisState>> {
    Ok(BasisState::all(n_sites)?.into_iter().filter(move |b| b.excitations() == k))
}

/// Undeformed Dicke state with `k` excitations, exactly normalized.
pub fn dicke_classical(n_sites: usize, k: usize) -> Result<StateVector> {
    check_sites(n_sites)?;
    check_k(n_sites, k)?;
    let weight = factorial(k as u32) * factorial((n_sites - k) as u32) / factorial(n_sites as u32);
    let amplitude = HScalar::constant(sqrt_rational(&weight)?);
    StateVector::from_entries(n_sites, excited(n_sites, k)?.map(|b| (b, amplitude.clone())))
}

/// q-Dicke state from its closed form: amplitude
/// `√([k]![N−k]!/[N]!)·q^{−k(N+1)/4 + Σnᵢ/2}` on up positions `nᵢ`.
pub fn qdicke_explicit(n_sites: usize, k: usize, q: &QValue) -> Result<NumericState> {
    check_sites(n_sites)?;
    check_k(n_sites, k)?;
    let norm =
        (q_factorial(k as u32, q) * q_factorial((n_sites - k) as u32, q) / q_factorial(n_sites as u32, q)).sqrt();
    let base = -(k as f64) * (n_sites as f64 + 1.0) / 4.0;
    let entries = excited(n_sites, k)?.map(|b| {
        let sum: usize = b.up_sites().iter().sum();
        (b, norm * q.powf(base + sum as f64 / 2.0))
    });
    StateVector::from_entries(n_sites, entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderDirection {
    /// `k` applications of `Δ_q(L₊)` to `|↓…↓⟩`.
    Raise,
    /// `N − k` applications of `Δ_q(L₋)` to `|↑…↑⟩`.
    Lower,
}

/// q-Dicke state by repeated coproduct action, normalized.
pub fn qdicke_ladder(n_sites: usize, k: usize, q: &QValue, direction: LadderDirection) -> Result<NumericState> {
    check_sites(n_sites)?;
    check_k(n_sites, k)?;
    let images = q_images(n_sites, q)?;
    let (op, start, steps) = match direction {
        LadderDirection::Raise => (&images.lplus, BasisState::all_down(n_sites)?, k),
        LadderDirection::Lower => (&images.lminus, BasisState::all_up(n_sites)?, n_sites - k),
    };
    let mut state = NumericState::basis(start, 1.0);
    for _ in 0..steps {
        state = apply_dense(op, &state)?;
    }
    state.normalized()
}

/// `|D_N^{−N}⟩_h` with amplitudes `ξ(S)·(h/2)^{n↑(S)}`, unnormalized.
pub fn h_lowest_weight(n_sites: usize) -> Result<StateVector> {
    check_xi_sites(n_sites)?;
    let table = CmTable::known();
    let mut entries = Vec::with_capacity(1 << n_sites);
    for b in BasisState::all(n_sites)? {
        let xi = xi_factor(&ExcitationPattern::of(&b), &table)?;
        entries.push((b, weighted_half_h(xi, b.excitations())));
    }
    StateVector::from_entries(n_sites, entries)
}

/// [`h_lowest_weight`] with the leading-order `C_m(N) ≈ (2m−1)!!·N^m`.
pub fn h_lowest_weight_large_n(n_sites: usize) -> Result<StateVector> {
    check_sites(n_sites)?;
    if n_sites < 2 {
        return Err(Error::range("number of sites", n_sites, 2, crate::hilbert::MAX_SITES as i64));
    }
    let entries = BasisState::all(n_sites)?
        .into_iter()
        .map(|b| (b, weighted_half_h(xi_large_n(&ExcitationPattern::of(&b)), b.excitations())));
    StateVector::from_entries(n_sites, entries)
}

fn weighted_half_h(coefficient: BigInt, power: usize) -> HScalar {
    HScalar::half_h_pow(power as u32).scale_rational(&Rational::from_integer(coefficient))
}

/// Which image of `Z₊` drives the h-ladder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZplusForm {
    /// The full `Δ_h⁽ᴺ⁾(Z₊)`, flips of every odd size.
    Exact,
    /// Single flips minus `h²/2` times triple flips; equal to `Exact` for
    /// `N ≤ 4` only.
    Simplified,
}

/// h-Dicke state `(Δ_h(Z₊))^k |D_N^{−N}⟩_h`, unnormalized.
pub fn h_dicke(n_sites: usize, k: usize) -> Result<StateVector> {
    h_dicke_with(n_sites, k, ZplusForm::Exact)
}

pub fn h_dicke_with(n_sites: usize, k: usize, form: ZplusForm) -> Result<StateVector> {
    check_xi_sites(n_sites)?;
    check_k(n_sites, k)?;
    let mut state = h_lowest_weight(n_sites)?;
    for _ in 0..k {
        state = match form {
            ZplusForm::Exact => apply_h_zplus(&state),
            ZplusForm::Simplified => apply_h_zplus_simplified(&state),
        };
    }
    Ok(state)
}

/// h-deformed W state `Δ_h(Z₊)|D_N^{−N}⟩_h` in closed form: amplitude
/// `ξ′(S)·(h/2)^{n↑−1}` with
/// `ξ′ = Σ_t (−1)^t T_{2t+1} Σ_m C(2m+2t+1, 2t+1)·C_m(N)·e_{n↑−2t−1−2m}`,
/// `T` the tangent numbers `1, 2, 16, …`. The `t = 0, 1` terms alone give
/// [`w_state_h_truncated`].
pub fn w_state_h(n_sites: usize) -> Result<StateVector> {
    w_state_from(n_sites, usize::MAX)
}

/// W state from single and triple flips only; equal to [`w_state_h`] for
/// `N ≤ 4`.
pub fn w_state_h_truncated(n_sites: usize) -> Result<StateVector> {
    w_state_from(n_sites, 2)
}

fn w_state_from(n_sites: usize, max_terms: usize) -> Result<StateVector> {
    check_xi_sites(n_sites)?;
    let table = CmTable::known();
    let tangents = tangent_numbers(n_sites.div_ceil(2));
    let mut entries = Vec::new();
    for b in BasisState::all(n_sites)? {
        let n_up = b.excitations();
        if n_up == 0 {
            continue;
        }
        let pattern = ExcitationPattern::of(&b);
        let values = pattern.f_values();
        let mut xi = BigInt::zero();
        for (t, tangent) in tangents.iter().enumerate().take(max_terms) {
            let flips = 2 * t + 1;
            if flips > n_up {
                break;
            }
            let mut inner = BigInt::zero();
            for m in 0..=(n_up - flips) / 2 {
                let c = table.evaluate(m, n_sites).ok_or(Error::UnsupportedOrder { missing: m, excitations: n_up })?;
                let choose = binomial(BigInt::from(2 * m + flips), BigInt::from(flips));
                inner += choose * c * elementary_symmetric(&values, n_up - flips - 2 * m);
            }
            if t % 2 == 1 {
                inner = -inner;
            }
            xi += inner * tangent;
        }
        entries.push((b, weighted_half_h(xi, n_up - 1)));
    }
    StateVector::from_entries(n_sites, entries)
}

/// Lowest-weight state reached from `|↑…↑⟩` by `N` applications of the
/// recursive `Δ_h⁽ᴺ⁾(Z₋)`; independent of the `ξ` formula.
pub fn lowest_weight_oracle(n_sites: usize) -> Result<StateVector> {
    if !(2..=MAX_ORACLE_SITES).contains(&n_sites) {
        return Err(Error::range("number of sites", n_sites, 2, MAX_ORACLE_SITES as i64));
    }
    let images = h_images(n_sites)?;
    let zminus = images.get(Generator::Zminus);
    let mut state = StateVector::basis(BasisState::all_up(n_sites)?, HScalar::one());
    for _ in 0..n_sites {
        state = zminus.apply(&state)?;
    }
    Ok(state)
}

/// Brute-force check of
/// `Σ_{J ⊂ P, |J| = r} e_i(P ∖ J) = C(|P| − i, r)·e_i(P)`.
/// Enumerates all `2^|P|` subsets; sets of 64 or more values report `false`.
pub fn check_sym_identity(values: &[i64], r: usize, i: usize) -> bool {
    let n = values.len();
    if n >= 64 {
        return false;
    }
    let mut lhs = BigInt::zero();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let rest: Vec<i64> = (0..n).filter(|b| mask & (1 << b) == 0).map(|b| values[b]).collect();
        lhs += elementary_symmetric(&rest, i);
    }
    lhs == binomial_or_zero(n, i, r) * elementary_symmetric(values, i)
}

fn binomial_or_zero(n: usize, i: usize, r: usize) -> BigInt {
    if i > n || r > n - i {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n - i), BigInt::from(r))
    }
}

/// Relative deviation `|approx − exact| / |exact|` of one amplitude, or
/// `None` when the exact amplitude vanishes.
pub fn large_n_relative_error(pattern: &ExcitationPattern) -> Result<Option<f64>> {
    let exact = xi_factor(pattern, &CmTable::known())?;
    if exact.is_zero() {
        return Ok(None);
    }
    let diff = (xi_large_n(pattern) - &exact).abs();
    Ok(Some(ratio_f64(&diff, &exact.abs())))
}

fn ratio_f64(a: &BigInt, b: &BigInt) -> f64 {
    let r = Rational::new(a.clone(), b.clone());
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coproducts::{coproduct_n, DeformationTag};
    use crate::golden::{golden_table, golden_w4};
    use crate::hilbert::proportional;
    use crate::scalar::rational;

    fn st(s: &str) -> BasisState {
        s.parse().unwrap()
    }

    fn prop(a: &StateVector, b: &StateVector) -> bool {
        proportional(a, b).unwrap().is_some()
    }

    #[test]
    fn f_and_e_values() {
        assert_eq!(f_value(1, 2), -1);
        assert_eq!(f_value(2, 2), 1);
        assert_eq!(elementary_symmetric(&[-3, -1, 1], 2), BigInt::from(-1));
        assert_eq!(elementary_symmetric(&[-3, -1, 1], 5), BigInt::zero());
        assert_eq!(elementary_symmetric(&[], 0), BigInt::one());
    }

    #[test]
    fn cm_table_leading_terms() {
        let table = CmTable::known();
        assert_eq!(table.len(), 6);
        for m in 0..6 {
            assert_eq!(BigInt::from(table.leading(m).unwrap()), double_factorial_odd(m));
        }
        assert_eq!(table.evaluate(2, 4), Some(BigInt::from(40)));
    }

    #[test]
    fn xi_examples() {
        let table = CmTable::known();
        let p = |n, v: Vec<usize>| ExcitationPattern::new(n, v).unwrap();
        assert_eq!(xi_factor(&p(5, vec![]), &table).unwrap(), BigInt::one());
        assert_eq!(xi_factor(&p(4, vec![1, 2]), &table).unwrap(), BigInt::from(7));
        let twelve = p(12, (1..=12).collect());
        assert_eq!(xi_factor(&twelve, &table), Err(Error::UnsupportedOrder { missing: 6, excitations: 12 }));
        assert!(ExcitationPattern::new(3, vec![4]).is_err());
        assert!(ExcitationPattern::new(3, vec![2, 2]).is_err());
    }

    #[test]
    fn classical_dicke() {
        let w = dicke_classical(2, 1).unwrap();
        let half = HScalar::constant(sqrt_rational(&rational(1, 2)).unwrap());
        assert_eq!(w.amplitude(&st("ud")), half);
        assert_eq!(w.amplitude(&st("du")), half);
        assert_eq!(dicke_classical(3, 0).unwrap().support_len(), 1);
        let d42 = dicke_classical(4, 2).unwrap();
        assert_eq!(d42.support_len(), 6);
        assert!(d42.norm_squared().is_one());
        assert!(dicke_classical(3, 4).is_err());
    }

    #[test]
    fn q_dicke_examples() {
        let q = QValue::new(0.5).unwrap();
        let s = qdicke_explicit(2, 1, &q).unwrap();
        let norm = (q.half() + 1.0 / q.half()).sqrt();
        assert!((s.amplitude(&st("du")) - q.quarter() / norm).abs() < 1e-14);
        assert!((s.amplitude(&st("ud")) - 1.0 / (q.quarter() * norm)).abs() < 1e-14);
        let s3 = qdicke_explicit(3, 1, &q).unwrap();
        let ratio = s3.amplitude(&st("ddu")) / s3.amplitude(&st("dud"));
        assert!((ratio - q.half()).abs() < 1e-14);
        for k in 0..=4 {
            let classical = dicke_classical(4, k).unwrap().evaluate(0.0);
            let undeformed = qdicke_explicit(4, k, &QValue::undeformed()).unwrap();
            assert!(classical.max_abs_diff(&undeformed) < 1e-12);
        }
    }

    #[test]
    fn q_ladders_agree() {
        for q in [0.5, 2.0] {
            let q = QValue::new(q).unwrap();
            for n in 1..=4 {
                for k in 0..=n {
                    let e = qdicke_explicit(n, k, &q).unwrap();
                    let up = qdicke_ladder(n, k, &q, LadderDirection::Raise).unwrap();
                    let down = qdicke_ladder(n, k, &q, LadderDirection::Lower).unwrap();
                    assert!(e.max_abs_diff(&up) < 1e-10, "N={n} k={k}");
                    assert!(e.max_abs_diff(&down) < 1e-10, "N={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn lowest_weight_matches_tables() {
        let lw2 = h_lowest_weight(2).unwrap();
        assert_eq!(lw2.amplitude(&st("ud")), HScalar::h().scale_rational(&rational(-1, 2)));
        assert_eq!(lw2.amplitude(&st("uu")), HScalar::h().pow(2).scale_rational(&rational(1, 4)));
        assert!(prop(&lw2, golden_table(2).unwrap().get("D-2").unwrap()));
        assert!(prop(&h_lowest_weight(3).unwrap(), golden_table(3).unwrap().get("D-3").unwrap()));
        assert_eq!(&h_lowest_weight(4).unwrap(), golden_table(4).unwrap().get("D-4").unwrap());
    }

    #[test]
    fn oracle_agrees_and_is_annihilated() {
        for n in 2..=4 {
            let oracle = lowest_weight_oracle(n).unwrap();
            assert!(prop(&oracle, &h_lowest_weight(n).unwrap()), "N={n}");
        }
        let zminus = coproduct_n(DeformationTag::HExact, Generator::Zminus, 3).unwrap();
        let once_more = zminus.as_exact().unwrap().apply(&lowest_weight_oracle(3).unwrap()).unwrap();
        assert!(once_more.is_zero());
        assert!(lowest_weight_oracle(7).is_err());
    }

    #[test]
    fn h_dicke_small_cases() {
        assert!(prop(&h_dicke(3, 1).unwrap(), golden_table(3).unwrap().get("D-1").unwrap()));
        assert!(prop(&h_dicke(2, 1).unwrap(), golden_table(2).unwrap().get("D0").unwrap()));
        let top = h_dicke(4, 4).unwrap();
        assert_eq!(top.support_len(), 1);
        assert!(top.get(&st("uuuu")).is_some());
        assert!(apply_h_zplus(&top).is_zero());
    }

    #[test]
    fn w_state_matches_table() {
        let w4 = golden_w4().unwrap();
        assert!(prop(&w_state_h(4).unwrap(), w4.get("W").unwrap()));
        assert_eq!(w_state_h(4).unwrap(), w_state_h_truncated(4).unwrap());
        for n in 2..=6 {
            assert!(prop(&w_state_h(n).unwrap(), &h_dicke(n, 1).unwrap()), "N={n}");
        }
        let classical = dicke_classical(5, 1).unwrap();
        assert!(prop(&w_state_h(5).unwrap().constant_part(), &classical));
    }

    #[test]
    fn truncated_w_state_drifts_at_five_sites() {
        let full = w_state_h(5).unwrap();
        let truncated = w_state_h_truncated(5).unwrap();
        let diff = full.sub(&truncated).unwrap();
        assert_eq!(diff.support_len(), 1);
        // Five simultaneous flips from |↓↓↓↓↓⟩, weight h⁴ = 16·(h/2)⁴.
        assert_eq!(diff.amplitude(&st("uuuuu")), HScalar::half_h_pow(4).scale_rational(&rational(16, 1)));
        assert!(prop(&truncated, &h_dicke_with(5, 1, ZplusForm::Simplified).unwrap()));
    }

    #[test]
    fn large_n_examples() {
        let p = |n, v: Vec<usize>| ExcitationPattern::new(n, v).unwrap();
        assert_eq!(large_n_relative_error(&p(11, vec![1])).unwrap(), Some(0.0));
        assert_eq!(xi_large_n(&p(11, vec![1, 2])), xi_factor(&p(11, vec![1, 2]), &CmTable::known()).unwrap());
        let exact4 = h_lowest_weight(4).unwrap();
        let approx4 = h_lowest_weight_large_n(4).unwrap();
        assert_eq!(exact4.amplitude(&st("uddd")), approx4.amplitude(&st("uddd")));
        assert_ne!(exact4, approx4);
    }

    #[test]
    fn sym_identity_examples() {
        assert!(check_sym_identity(&[2, 5, 7], 1, 1));
        assert!(check_sym_identity(&[-3, -1, 1, 3], 2, 1));
        assert!(check_sym_identity(&[4, -2, 9, 1, 1], 2, 2));
    }
}
