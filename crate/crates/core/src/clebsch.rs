//! Clebsch–Gordan coefficients (classical, q- and h-deformed) and the
//! left-to-right coupling of a qubit chain into labelled coupled states.
//!
//! The h-coefficients expand the classical ones with the triangular
//! correction array
//!
//! ```text
//! A_{k,l} = a_{k,l} · α_{j1,m1+k} α_{j2,m2+l} / (α_{j1,m1} α_{j2,m2}),   α_{j,m} = √((j+m)!/(j−m)!)
//! a_{k,l} = (−1)^k 2^{−k−l} h^{k+l} (b_{k,l} − b_{k−1,l−1})
//! b_{k,l} = (−2m1−k)_l (−2m2−l)_k / (k! l!)
//! ```
//!
//! where `(x)_n = x(x+1)…(x+n−1)` is the rising factorial. The falling
//! factorial does not reproduce the two-qubit singlet `|↑↓⟩ − |↓↑⟩ − h|↑↑⟩`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coproducts::DeformationTag;
use crate::error::{Error, Result};
use crate::hilbert::{check_sites, BasisState, NumericState, StateVector};
use crate::scalar::{factorial, q_factorial, q_number, sqrt_rational, HScalar, QValue, RadicalSum, Rational};

/// Largest chain accepted by [`couple_chain`] for the exact h-branch.
pub const MAX_EXACT_SITES: usize = 11;
/// Largest chain accepted by [`couple_chain`] otherwise.
pub const MAX_NUMERIC_SITES: usize = 16;

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    pub fn from_twice(twice: i32) -> Self {
        Self(twice)
    }

    pub fn from_int(n: i32) -> Self {
        Self(2 * n)
    }

    pub fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Integer value; only meaningful when [`Self::is_integer`].
    fn int(self) -> i64 {
        debug_assert!(self.is_integer());
        (self.0 / 2) as i64
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `|j, m⟩` with `j ≥ 0`, `|m| ≤ j` and `j − m` integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinLabel {
    pub j: HalfInt,
    pub m: HalfInt,
}

impl SpinLabel {
    pub fn new(j: HalfInt, m: HalfInt) -> Result<Self> {
        if j.0 < 0 || m.0.abs() > j.0 || !(j - m).is_integer() {
            return Err(Error::InvalidSpin(format!("|j={j}, m={m}⟩")));
        }
        Ok(Self { j, m })
    }
}

fn check_label(j: HalfInt, m: HalfInt) -> Result<()> {
    SpinLabel::new(j, m).map(|_| ())
}

fn check_triangle(j1: HalfInt, j2: HalfInt, j: HalfInt) -> Result<()> {
    let ok = j1.0 >= 0 && j2.0 >= 0 && j.0 >= (j1.0 - j2.0).abs() && j.0 <= j1.0 + j2.0 && (j1 + j2 - j).is_integer();
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSpin(format!("j={j} is not in {j1} ⊗ {j2}")))
    }
}

fn fact(n: HalfInt) -> Rational {
    factorial(n.int() as u32)
}

/// Classical Clebsch–Gordan coefficient `⟨j1 m1; j2 m2 | j m⟩` by the Racah sum.
pub fn cg_classical(j1: HalfInt, j2: HalfInt, j: HalfInt, m1: HalfInt, m2: HalfInt, m: HalfInt) -> Result<RadicalSum> {
    check_triangle(j1, j2, j)?;
    check_label(j1, m1)?;
    check_label(j2, m2)?;
    check_label(j, m)?;
    if m1 + m2 != m {
        return Ok(RadicalSum::zero());
    }
    let pre = fact(j1 + j2 - j) * fact(j1 - j2 + j) * fact(j2 - j1 + j) / fact(j1 + j2 + j + HalfInt::from_int(1))
        * fact(j1 + m1)
        * fact(j1 - m1)
        * fact(j2 + m2)
        * fact(j2 - m2)
        * fact(j + m)
        * fact(j - m)
        * Rational::from_integer(BigInt::from(j.0 + 1));
    let mut sum = Rational::zero();
    for k in 0.. {
        let args = [
            k,
            (j1 + j2 - j).int() - k,
            (j1 - m1).int() - k,
            (j2 + m2).int() - k,
            (j - j2 + m1).int() + k,
            (j - j1 - m2).int() + k,
        ];
        if args[1] < 0 || args[2] < 0 || args[3] < 0 {
            break;
        }
        if args.iter().any(|a| *a < 0) {
            continue;
        }
        let denom = args.iter().fold(Rational::one(), |acc, a| acc * factorial(*a as u32));
        let term = Rational::one() / denom;
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return Ok(RadicalSum::zero());
    }
    Ok(sqrt_rational(&pre)?.scale(&sum))
}

fn qfact(n: HalfInt, q: &QValue) -> f64 {
    q_factorial(n.int() as u32, q)
}

/// q-deformed Clebsch–Gordan coefficient (standard deformation).
pub fn cg_q(j1: HalfInt, j2: HalfInt, j: HalfInt, m1: HalfInt, m2: HalfInt, m: HalfInt, q: &QValue) -> Result<f64> {
    check_triangle(j1, j2, j)?;
    check_label(j1, m1)?;
    check_label(j2, m2)?;
    check_label(j, m)?;
    if m1 + m2 != m {
        return Ok(0.0);
    }
    let (fj1, fj2, fj, fm1, fm2) = (j1.to_f64(), j2.to_f64(), j.to_f64(), m1.to_f64(), m2.to_f64());
    let one = HalfInt::from_int(1);
    let phase = q.powf(0.5 * (fj1 * fm2 - fj2 * fm1) - 0.25 * (fj1 + fj2 - fj) * (fj + fj1 + fj2 + 1.0));
    let num = q_number((2 * j.0 + 2) as f64 / 2.0, q)
        * qfact(j + m, q)
        * qfact(j2 - m2, q)
        * qfact(j + j1 - j2, q)
        * qfact(j1 + j2 - j, q)
        * qfact(j + j1 + j2 + one, q);
    let den = qfact(j - m, q) * qfact(j1 - m1, q) * qfact(j1 + m1, q) * qfact(j2 + m2, q) * qfact(j - j1 + j2, q);
    let top = (j1 + j2 - j).int().min((j2 - m2).int());
    let mut sum = 0.0;
    for n in 0..=top {
        let hn = HalfInt::from_int(n as i32);
        let sign = if ((j1 + j2 - j).int() + n) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * qfact(j2 + j2 - hn, q) * q.powf(0.5 * n as f64 * (fj1 + fm1)) * qfact(j1 + j2 - m - hn, q)
            / (qfact(hn, q) * qfact(j2 - m2 - hn, q) * qfact(j1 + j2 - j - hn, q) * qfact(j + j1 + j2 - hn + one, q));
    }
    Ok(phase * (num / den).sqrt() * sum)
}

/// Rising factorial `(x)_n`.
fn rising(x: i64, n: i64) -> BigInt {
    (0..n).fold(BigInt::one(), |acc, i| acc * (x + i))
}

fn b_array(m1: HalfInt, m2: HalfInt, k: i64, l: i64) -> Rational {
    if k < 0 || l < 0 {
        return Rational::zero();
    }
    let num = rising(-m1.0 as i64 - k, l) * rising(-m2.0 as i64 - l, k);
    Rational::new(num, BigInt::one()) / (factorial(k as u32) * factorial(l as u32))
}

/// Sign convention for the `(−1)^k` factor of the `a`-array. `Flipped`
/// drops the alternation and exists to show the golden checks catch it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ASign {
    Alternating,
    Flipped,
}

fn a_array(m1: HalfInt, m2: HalfInt, k: i64, l: i64, sign: ASign) -> HScalar {
    let diff = b_array(m1, m2, k, l) - b_array(m1, m2, k - 1, l - 1);
    if diff.is_zero() {
        return HScalar::zero();
    }
    let signed = if sign == ASign::Alternating && k % 2 == 1 { -diff } else { diff };
    HScalar::half_h_pow((k + l) as u32).scale_rational(&signed)
}

/// `α_{j,m+s}² / α_{j,m}² = (j+m+s)!(j−m)! / ((j−m−s)!(j+m)!)`.
fn alpha_ratio_sq(j: HalfInt, m: HalfInt, shift: i64) -> Rational {
    let s = HalfInt::from_int(shift as i32);
    fact(j + m + s) * fact(j - m) / (fact(j - m - s) * fact(j + m))
}

/// Jordanian Clebsch–Gordan coefficient `𝒞^{j1,j2,j}_{n1,n2,m}(h)`.
pub fn cg_h(j1: HalfInt, j2: HalfInt, j: HalfInt, n1: HalfInt, n2: HalfInt, m: HalfInt) -> Result<HScalar> {
    cg_h_with_sign(j1, j2, j, n1, n2, m, ASign::Alternating)
}

/// [`cg_h`] with an explicit `a`-array sign convention.
pub fn cg_h_with_sign(
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
    n1: HalfInt,
    n2: HalfInt,
    m: HalfInt,
    sign: ASign,
) -> Result<HScalar> {
    check_triangle(j1, j2, j)?;
    check_label(j1, n1)?;
    check_label(j2, n2)?;
    check_label(j, m)?;
    let mut total = HScalar::zero();
    let mut m1 = -j1;
    while m1 <= j1 {
        let m2 = m - m1;
        let (k, l) = ((n1 - m1).0, (n2 - m2).0);
        if m2.0.abs() <= j2.0 && (j2 - m2).is_integer() && k >= 0 && l >= 0 && k % 2 == 0 && l % 2 == 0 {
            let (k, l) = (k as i64 / 2, l as i64 / 2);
            let c = cg_classical(j1, j2, j, m1, m2, m)?;
            let a = a_array(m1, m2, k, l, sign);
            if !c.is_zero() && !a.is_zero() {
                let alpha = sqrt_rational(&(alpha_ratio_sq(j1, m1, k) * alpha_ratio_sq(j2, m2, l)))?;
                total += a.scale(&(&c * &alpha));
            }
        }
        m1 = m1 + HalfInt::from_int(1);
    }
    Ok(total)
}

/// Coupling path of a chain: the total spin after adding each of sites
/// `2..=N`, as twice its value. Site 1 alone always has `j = 1/2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CouplingPath {
    twice_j: Vec<u32>,
}

impl CouplingPath {
    pub fn new(twice_j: Vec<u32>) -> Result<Self> {
        let mut prev = 1i64;
        for &t in &twice_j {
            if (t as i64 - prev).abs() != 1 {
                return Err(Error::InvalidSpin(format!("coupling path {twice_j:?} changes 2j by other than ±1")));
            }
            prev = t as i64;
        }
        Ok(Self { twice_j })
    }

    pub fn n_sites(&self) -> usize {
        self.twice_j.len() + 1
    }

    /// Intermediate `2j` values after sites `2..=N`.
    pub fn twice_j(&self) -> &[u32] {
        &self.twice_j
    }

    /// Final total spin `j`.
    pub fn j(&self) -> HalfInt {
        HalfInt::from_twice(self.twice_j.last().copied().unwrap_or(1) as i32)
    }

    /// All paths of an `n`-site chain, `j + 1/2` branches before `j − 1/2`.
    pub fn all(n_sites: usize) -> Result<Vec<CouplingPath>> {
        check_sites(n_sites)?;
        let mut paths = vec![Vec::new()];
        for _ in 1..n_sites {
            let mut next = Vec::new();
            for p in paths {
                let last = p.last().copied().unwrap_or(1u32);
                for t in [last + 1, last.wrapping_sub(1)] {
                    if t != u32::MAX {
                        let mut q = p.clone();
                        q.push(t);
                        next.push(q);
                    }
                }
            }
            paths = next;
        }
        Ok(paths.into_iter().map(|twice_j| CouplingPath { twice_j }).collect())
    }

    /// Maximal-spin path (Dicke states).
    pub fn dicke(n_sites: usize) -> Self {
        Self { twice_j: (2..=n_sites as u32).collect() }
    }

    /// State label for chains of up to four sites: `D`, `M`, `V`, `T`, `R`, `Q`
    /// in path order. Longer chains only label the Dicke path.
    pub fn label(&self) -> Option<char> {
        let n = self.n_sites();
        if *self == Self::dicke(n) {
            return Some('D');
        }
        if n > 4 {
            return None;
        }
        let index = Self::all(n).ok()?.iter().position(|p| p == self)?;
        "DMVTRQ".chars().nth(index)
    }

    pub fn from_label(n_sites: usize, label: char) -> Result<Self> {
        let paths = Self::all(n_sites)?;
        paths
            .into_iter()
            .find(|p| p.label() == Some(label.to_ascii_uppercase()))
            .ok_or_else(|| Error::InvalidSpin(format!("no state label {label:?} on {n_sites} sites")))
    }
}

impl fmt::Display for CouplingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twice_j.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// One coupled basis state: path, `H` eigenvalue `2m`, unnormalized vector.
#[derive(Clone, Debug, PartialEq)]
pub struct CoupledState<A = HScalar> {
    pub path: CouplingPath,
    pub twice_m: i32,
    pub state: StateVector<A>,
}

impl<A> CoupledState<A> {
    pub fn j(&self) -> HalfInt {
        self.path.j()
    }

    pub fn m(&self) -> HalfInt {
        HalfInt::from_twice(self.twice_m)
    }

    /// Display name such as `D-2` or `M0`, using the `H` eigenvalue.
    pub fn name(&self) -> String {
        match self.path.label() {
            Some(c) => format!("{c}{}", self.twice_m),
            None => format!("{}:{}", self.path, self.twice_m),
        }
    }
}

/// The full coupled basis of a chain.
#[derive(Clone, Debug, PartialEq)]
pub enum CoupledBasis {
    Exact(Vec<CoupledState<HScalar>>),
    Numeric(Vec<CoupledState<f64>>),
}

/// Couples sites left to right and returns every `(path, m)` state, paths in
/// [`CouplingPath::all`] order and `m` ascending within a path.
pub fn couple_chain(n_sites: usize, tag: DeformationTag) -> Result<CoupledBasis> {
    let limit = match tag {
        DeformationTag::HExact => MAX_EXACT_SITES,
        _ => MAX_NUMERIC_SITES,
    };
    couple_chain_bounded(n_sites, tag, limit)
}

/// [`couple_chain`] with a caller-chosen size cap (at most the hard site limit).
pub fn couple_chain_bounded(n_sites: usize, tag: DeformationTag, max_sites: usize) -> Result<CoupledBasis> {
    if n_sites == 0 || n_sites > max_sites {
        return Err(Error::range("number of sites", n_sites, 1, max_sites as i64));
    }
    check_sites(n_sites)?;
    Ok(match tag {
        DeformationTag::HExact => CoupledBasis::Exact(couple_exact(n_sites, ASign::Alternating, true)?),
        DeformationTag::Undeformed => CoupledBasis::Exact(couple_exact(n_sites, ASign::Alternating, false)?),
        DeformationTag::Q(q) => CoupledBasis::Numeric(couple_q(n_sites, &q)?),
    })
}

/// Exact coupled basis, h-deformed or classical.
pub fn couple_exact(n_sites: usize, sign: ASign, deformed: bool) -> Result<Vec<CoupledState>> {
    let coefficient = |j1: HalfInt, j: HalfInt, n1: HalfInt, n2: HalfInt, m: HalfInt| -> Result<HScalar> {
        if deformed {
            cg_h_with_sign(j1, HalfInt::HALF, j, n1, n2, m, sign)
        } else {
            Ok(HScalar::constant(cg_classical(j1, HalfInt::HALF, j, n1, n2, m)?))
        }
    };
    let mut out = couple_generic(n_sites, coefficient)?;
    for s in &mut out {
        let lead =
            s.state.iter().map(|(_, a)| a.constant_term()).find(|c| !c.is_zero()).map(|c| c.to_f64()).unwrap_or(1.0);
        if lead < 0.0 {
            s.state = s.state.neg();
        }
    }
    Ok(out)
}

fn couple_q(n_sites: usize, q: &QValue) -> Result<Vec<CoupledState<f64>>> {
    let mut out = couple_generic(n_sites, |j1, j, n1, n2, m| cg_q(j1, HalfInt::HALF, j, n1, n2, m, q))?;
    for s in &mut out {
        let norm = s.state.norm();
        let lead = s.state.iter().map(|(_, a)| *a).find(|a| a.abs() > 1e-12 * norm).unwrap_or(1.0);
        if lead < 0.0 {
            s.state = s.state.neg();
        }
    }
    Ok(out)
}

type Level<A> = Vec<(Vec<u32>, Vec<StateVector<A>>)>;

fn couple_generic<A, F>(n_sites: usize, coefficient: F) -> Result<Vec<CoupledState<A>>>
where
    A: crate::hilbert::Amplitude + From<i8>,
    F: Fn(HalfInt, HalfInt, HalfInt, HalfInt, HalfInt) -> Result<A>,
{
    let up = BasisState::from_mask(1, 1);
    let down = BasisState::from_mask(1, 0);
    // States indexed by m ascending: m = −j..=j.
    let mut level: Level<A> =
        vec![(Vec::new(), vec![StateVector::basis(down, A::from(1)), StateVector::basis(up, A::from(1))])];
    for n in 2..=n_sites {
        let mut next = Vec::new();
        for (path, states) in &level {
            let j1 = HalfInt::from_twice(path.last().copied().unwrap_or(1) as i32);
            for twice_j in [j1.0 + 1, j1.0 - 1] {
                if twice_j < 0 {
                    continue;
                }
                let j = HalfInt::from_twice(twice_j);
                let mut coupled = Vec::with_capacity(twice_j as usize + 1);
                for mi in 0..=twice_j {
                    let m = HalfInt::from_twice(2 * mi - twice_j);
                    let mut v = StateVector::zero(n)?;
                    for (i1, prev) in states.iter().enumerate() {
                        let n1 = HalfInt::from_twice(2 * i1 as i32 - j1.0);
                        for (n2, bit) in [(-HalfInt::HALF, 0u32), (HalfInt::HALF, 1u32)] {
                            let c = coefficient(j1, j, n1, n2, m)?;
                            if c.is_zero() {
                                continue;
                            }
                            for (b, a) in prev.iter() {
                                let extended = BasisState::from_mask(n, b.mask() << 1 | bit);
                                v.add_amplitude(extended, a.mul_ref(&c));
                            }
                        }
                    }
                    coupled.push(v);
                }
                let mut p = path.clone();
                p.push(twice_j as u32);
                next.push((p, coupled));
            }
        }
        level = next;
    }
    let mut out = Vec::new();
    for (path, states) in level {
        let twice_j = path.last().copied().unwrap_or(1) as i32;
        for (mi, state) in states.into_iter().enumerate() {
            out.push(CoupledState {
                path: CouplingPath { twice_j: path.clone() },
                twice_m: 2 * mi as i32 - twice_j,
                state,
            });
        }
    }
    Ok(out)
}

/// The coupled state with path label `label` and `H` eigenvalue `twice_m`,
/// i.e. the state named `D-2` is `find_state(basis, 'D', -2)`.
pub fn find_state<A>(basis: &[CoupledState<A>], label: char, twice_m: i32) -> Option<&CoupledState<A>> {
    basis.iter().find(|s| s.path.label() == Some(label) && s.twice_m == twice_m)
}

/// Every state of the basis as a named numeric vector, exact states
/// evaluated at `h`.
pub fn numeric_states(basis: &CoupledBasis, h: f64) -> Vec<(String, NumericState)> {
    match basis {
        CoupledBasis::Exact(states) => states.iter().map(|s| (s.name(), s.state.evaluate(h))).collect(),
        CoupledBasis::Numeric(states) => states.iter().map(|s| (s.name(), s.state.clone())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    const H: HalfInt = HalfInt::HALF;

    fn hi(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn sqrt_half() -> RadicalSum {
        sqrt_rational(&rational(1, 2)).unwrap()
    }

    #[test]
    fn classical_examples() {
        assert_eq!(cg_classical(H, H, hi(2), H, -H, hi(0)).unwrap(), sqrt_half());
        assert_eq!(cg_classical(H, H, hi(2), H, H, hi(2)).unwrap(), RadicalSum::one());
        assert_eq!(cg_classical(H, H, hi(0), H, -H, hi(0)).unwrap(), sqrt_half());
        assert_eq!(cg_classical(H, H, hi(0), -H, H, hi(0)).unwrap(), -sqrt_half());
        assert!(cg_classical(H, H, hi(2), H, H, hi(0)).unwrap().is_zero());
        assert!(cg_classical(H, H, hi(4), H, H, hi(2)).is_err());
        assert!(cg_classical(H, H, hi(2), hi(3), -H, hi(2)).is_err());
    }

    #[test]
    fn classical_orthogonality() {
        for tj1 in 0..=3 {
            for tj2 in 0..=3 {
                let (j1, j2) = (hi(tj1), hi(tj2));
                let js: Vec<i32> = ((tj1 - tj2).abs()..=tj1 + tj2).step_by(2).collect();
                for &a in &js {
                    for &b in &js {
                        for ma in (-a..=a).step_by(2) {
                            for mb in (-b..=b).step_by(2) {
                                let mut acc = RadicalSum::zero();
                                for m1 in (-tj1..=tj1).step_by(2) {
                                    for m2 in (-tj2..=tj2).step_by(2) {
                                        let x = cg_classical(j1, j2, hi(a), hi(m1), hi(m2), hi(ma)).unwrap();
                                        let y = cg_classical(j1, j2, hi(b), hi(m1), hi(m2), hi(mb)).unwrap();
                                        acc += &(&x * &y);
                                    }
                                }
                                let expected = if a == b && ma == mb { RadicalSum::one() } else { RadicalSum::zero() };
                                assert_eq!(acc, expected, "j1={tj1}/2 j2={tj2}/2 j={a}/2,{b}/2 m={ma}/2,{mb}/2");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn q_examples() {
        let one = QValue::undeformed();
        let c = cg_q(H, H, hi(2), H, -H, hi(0), &one).unwrap();
        assert!((c - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);

        let q = QValue::new(2.0).unwrap();
        let expected = q.quarter() / q_number(2.0, &q).sqrt();
        assert!((cg_q(H, H, hi(2), -H, H, hi(0), &q).unwrap() - expected).abs() < 1e-12);
        assert!((cg_q(H, H, hi(0), H, -H, hi(0), &q).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn h_stretched_equals_classical() {
        for (n1, n2) in [(H, H), (H, -H), (-H, H), (-H, -H)] {
            for tj in [0, 2] {
                let m = n1 + n2;
                if m.0.abs() > tj {
                    continue;
                }
                let h = cg_h(H, H, hi(tj), n1, n2, m).unwrap();
                let c = cg_classical(H, H, hi(tj), n1, n2, m).unwrap();
                assert_eq!(h, HScalar::constant(c));
            }
        }
    }

    #[test]
    fn two_qubit_singlet_weights() {
        let basis = couple_exact(2, ASign::Alternating, true).unwrap();
        let singlet = find_state(&basis, 'M', 0).unwrap();
        let expected = StateVector::from_entries(
            2,
            [
                ("ud".parse().unwrap(), HScalar::one()),
                ("du".parse().unwrap(), HScalar::from_integer(-1)),
                ("uu".parse().unwrap(), -HScalar::h()),
            ],
        )
        .unwrap();
        let r = crate::hilbert::proportional(&singlet.state, &expected).unwrap().unwrap();
        assert!(r.evaluate(0.3) > 0.0);
    }

    #[test]
    fn path_labels() {
        let labels: String = CouplingPath::all(4).unwrap().iter().map(|p| p.label().unwrap()).collect();
        assert_eq!(labels, "DMVTRQ");
        assert_eq!(CouplingPath::from_label(3, 'v').unwrap().twice_j(), &[0, 1]);
        assert_eq!(CouplingPath::all(5).unwrap().len(), 10);
        assert!(CouplingPath::new(vec![2, 4]).is_err());
    }

    #[test]
    fn h_zero_part_is_classical() {
        let h = couple_exact(3, ASign::Alternating, true).unwrap();
        let c = couple_exact(3, ASign::Alternating, false).unwrap();
        for (a, b) in h.iter().zip(&c) {
            assert_eq!(a.state.constant_part(), b.state);
        }
    }
}
