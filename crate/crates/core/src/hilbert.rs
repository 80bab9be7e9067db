//! Qubit-chain basis states, sparse state vectors and exact operators.
//!
//! Site 1 is the leftmost tensor factor. A [`BasisState`] is a bitmask with
//! site 1 in the most significant position and a set bit meaning `↑`.
//! Basis states order by excitation count first, then lexicographically with
//! `↑ < ↓` at each site. That is the column order used by the exported
//! tables (`↓↓`, `↑↓`, `↓↑`, `↑↑` for two sites).

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::HScalar;

pub const MAX_SITES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisState {
    mask: u32,
    n_sites: u8,
}

pub(crate) fn check_sites(n_sites: usize) -> Result<()> {
    if n_sites == 0 || n_sites > MAX_SITES {
        return Err(Error::range("number of sites", n_sites, 1, MAX_SITES as i64));
    }
    Ok(())
}

impl BasisState {
    /// `mask` has site 1 in bit `n_sites - 1`; set bits are `↑`.
    pub fn new(n_sites: usize, mask: u32) -> Result<Self> {
        check_sites(n_sites)?;
        if n_sites < 32 && mask >> n_sites != 0 {
            return Err(Error::Format(format!("mask {mask:#b} wider than {n_sites} sites")));
        }
        Ok(Self { mask, n_sites: n_sites as u8 })
    }

    pub(crate) fn from_mask(n_sites: usize, mask: u32) -> Self {
        Self { mask, n_sites: n_sites as u8 }
    }

    pub fn all_down(n_sites: usize) -> Result<Self> {
        Self::new(n_sites, 0)
    }

    pub fn all_up(n_sites: usize) -> Result<Self> {
        check_sites(n_sites)?;
        Ok(Self::from_mask(n_sites, full_mask(n_sites)))
    }

    /// Basis state with `↑` exactly at the given 1-based sites.
    pub fn with_up_sites(n_sites: usize, sites: &[usize]) -> Result<Self> {
        check_sites(n_sites)?;
        let mut mask = 0;
        for &s in sites {
            if s == 0 || s > n_sites {
                return Err(Error::SiteOutOfRange { site: s, n_sites });
            }
            mask |= bit(n_sites, s);
        }
        Ok(Self::from_mask(n_sites, mask))
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn spin(&self, site: usize) -> Spin {
        if self.mask & bit(self.n_sites(), site) != 0 {
            Spin::Up
        } else {
            Spin::Down
        }
    }

    pub fn excitations(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// 1-based positions of the `↑` sites, ascending.
    pub fn up_sites(&self) -> Vec<usize> {
        (1..=self.n_sites()).filter(|&s| self.spin(s) == Spin::Up).collect()
    }

    /// Index in the dense tensor-product vector where `|↑⟩ = (1,0)ᵀ`.
    pub fn dense_index(&self) -> usize {
        (!self.mask & full_mask(self.n_sites())) as usize
    }

    pub fn from_dense_index(n_sites: usize, index: usize) -> Self {
        Self::from_mask(n_sites, !(index as u32) & full_mask(n_sites))
    }

    /// All `2^n` basis states in canonical order.
    pub fn all(n_sites: usize) -> Result<Vec<BasisState>> {
        check_sites(n_sites)?;
        let mut states: Vec<_> = (0..=full_mask(n_sites)).map(|m| Self::from_mask(n_sites, m)).collect();
        states.sort();
        Ok(states)
    }

    /// Moves the spin at site `perm[i]` to site `i + 1`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n_sites();
        let mut mask = 0;
        for (i, &src) in perm.iter().enumerate() {
            if self.spin(src) == Spin::Up {
                mask |= bit(n, i + 1);
            }
        }
        Self::from_mask(n, mask)
    }

    /// ASCII rendering with `u`/`d`.
    pub fn to_ascii(&self) -> String {
        (1..=self.n_sites()).map(|s| if self.spin(s) == Spin::Up { 'u' } else { 'd' }).collect()
    }
}

pub(crate) fn full_mask(n_sites: usize) -> u32 {
    if n_sites >= 32 {
        u32::MAX
    } else {
        (1u32 << n_sites) - 1
    }
}

fn bit(n_sites: usize, site: usize) -> u32 {
    1 << (n_sites - site)
}

impl Ord for BasisState {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n_sites, self.mask.count_ones(), Reverse(self.mask)).cmp(&(
            other.n_sites,
            other.mask.count_ones(),
            Reverse(other.mask),
        ))
    }
}

impl PartialOrd for BasisState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in 1..=self.n_sites() {
            f.write_str(if self.spin(s) == Spin::Up { "↑" } else { "↓" })?;
        }
        Ok(())
    }
}

impl FromStr for BasisState {
    type Err = Error;

    /// Accepts `↑`/`↓` or ASCII `u`/`d` (case-insensitive).
    /// Accepts `↑`/`u`/`U` and `↓`/`d`/`D`, optionally written as `|…⟩` or `|…>`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = match t.strip_prefix('|') {
            Some(inner) => inner
                .strip_suffix('⟩')
                .or_else(|| inner.strip_suffix('>'))
                .ok_or_else(|| Error::Format(format!("unterminated ket {s:?}")))?,
            None => t,
        };
        let mut sites = Vec::new();
        for c in t.chars() {
            match c {
                '↑' | 'u' | 'U' => sites.push(Spin::Up),
                '↓' | 'd' | 'D' => sites.push(Spin::Down),
                _ => return Err(Error::Format(format!("invalid basis character {c:?} in {s:?}"))),
            }
        }
        check_sites(sites.len())?;
        let n = sites.len();
        let mask = sites.iter().enumerate().filter(|(_, s)| **s == Spin::Up).fold(0, |m, (i, _)| m | bit(n, i + 1));
        Ok(Self::from_mask(n, mask))
    }
}

/// Ring operations needed by [`StateVector`].
pub trait Amplitude: Clone + fmt::Debug + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Amplitude for HScalar {
    fn zero() -> Self {
        HScalar::zero()
    }
    fn is_zero(&self) -> bool {
        HScalar::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Amplitude for f64 {
    fn zero() -> Self {
        0.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Sparse vector over the `2^n`-dimensional chain space. Zero amplitudes are
/// never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<A = HScalar> {
    n_sites: usize,
    amplitudes: BTreeMap<BasisState, A>,
}

/// Floating-point state vector.
pub type NumericState = StateVector<f64>;

impl<A: Amplitude> StateVector<A> {
    pub fn zero(n_sites: usize) -> Result<Self> {
        check_sites(n_sites)?;
        Ok(Self { n_sites, amplitudes: BTreeMap::new() })
    }

    pub fn basis(state: BasisState, amplitude: A) -> Self {
        let mut v = Self { n_sites: state.n_sites(), amplitudes: BTreeMap::new() };
        v.add_amplitude(state, amplitude);
        v
    }

    pub fn from_entries(n_sites: usize, entries: impl IntoIterator<Item = (BasisState, A)>) -> Result<Self> {
        let mut v = Self::zero(n_sites)?;
        for (b, a) in entries {
            if b.n_sites() != n_sites {
                return Err(Error::SiteMismatch(n_sites, b.n_sites()));
            }
            v.add_amplitude(b, a);
        }
        Ok(v)
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Number of stored (nonzero) amplitudes.
    pub fn support_len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, state: &BasisState) -> A {
        self.amplitudes.get(state).cloned().unwrap_or_else(A::zero)
    }

    pub fn get(&self, state: &BasisState) -> Option<&A> {
        self.amplitudes.get(state)
    }

    /// Nonzero amplitudes in canonical basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&BasisState, &A)> {
        self.amplitudes.iter()
    }

    pub fn add_amplitude(&mut self, state: BasisState, amplitude: A) {
        debug_assert_eq!(state.n_sites(), self.n_sites);
        if amplitude.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.amplitudes.entry(state) {
            Entry::Vacant(v) => {
                v.insert(amplitude);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&amplitude);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &A) -> Self {
        let mut out = Self { n_sites: self.n_sites, amplitudes: BTreeMap::new() };
        for (b, a) in &self.amplitudes {
            out.add_amplitude(*b, a.mul_ref(factor));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { n_sites: self.n_sites, amplitudes: self.amplitudes.iter().map(|(b, a)| (*b, a.neg_ref())).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (b, a) in &other.amplitudes {
            out.add_amplitude(*b, a.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Bilinear (not sesquilinear) pairing `Σ a_i b_i`.
    pub fn dot(&self, other: &Self) -> Result<A> {
        self.check_same(other)?;
        let mut acc = A::zero();
        for (b, a) in &self.amplitudes {
            if let Some(c) = other.amplitudes.get(b) {
                acc.add_assign_ref(&a.mul_ref(c));
            }
        }
        Ok(acc)
    }

    /// Relabels sites: the result's site `i + 1` carries this state's site `perm[i]`.
    pub fn permute_sites(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n_sites + 1];
        if perm.len() != self.n_sites {
            return Err(Error::SiteMismatch(self.n_sites, perm.len()));
        }
        for &p in perm {
            if p == 0 || p > self.n_sites || seen[p] {
                return Err(Error::Format(format!("{perm:?} is not a site permutation")));
            }
            seen[p] = true;
        }
        Ok(Self {
            n_sites: self.n_sites,
            amplitudes: self.amplitudes.iter().map(|(b, a)| (b.permuted(perm), a.clone())).collect(),
        })
    }

    pub fn map<B: Amplitude>(&self, f: impl Fn(&A) -> B) -> StateVector<B> {
        let mut out = StateVector { n_sites: self.n_sites, amplitudes: BTreeMap::new() };
        for (b, a) in &self.amplitudes {
            out.add_amplitude(*b, f(a));
        }
        out
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n_sites != other.n_sites {
            return Err(Error::SiteMismatch(self.n_sites, other.n_sites));
        }
        Ok(())
    }
}

impl StateVector<HScalar> {
    /// `Σ a_i²`; every amplitude here is real.
    pub fn norm_squared(&self) -> HScalar {
        let mut acc = HScalar::zero();
        for a in self.amplitudes.values() {
            acc += a * a;
        }
        acc
    }

    pub fn evaluate(&self, h: f64) -> NumericState {
        self.map(|a| a.evaluate(h))
    }

    /// Degree-0 part of every amplitude (the `h → 0` limit).
    pub fn constant_part(&self) -> Self {
        self.map(|a| HScalar::constant(a.constant_term()))
    }

    /// The substitution `h ↦ -h` on every amplitude.
    pub fn negate_h(&self) -> Self {
        self.map(HScalar::negate_h)
    }

    /// Numeric unit vector at `h` with the first significant amplitude positive.
    pub fn normalize_at(&self, h: f64) -> Result<NumericState> {
        self.evaluate(h).normalized()
    }
}

impl NumericState {
    pub fn norm(&self) -> f64 {
        self.amplitudes.values().map(|a| a * a).sum::<f64>().sqrt()
    }

    /// Unit vector whose first amplitude above `1e-14·norm` (canonical basis
    /// order) is positive.
    pub fn normalized(&self) -> Result<NumericState> {
        let norm = self.norm();
        if norm.is_nan() || norm <= 1e-14 {
            return Err(Error::DegenerateNorm(norm));
        }
        let lead = self.amplitudes.values().find(|a| a.abs() > 1e-14 * norm).copied().unwrap_or(1.0);
        let factor = lead.signum() / norm;
        Ok(self.map(|a| a * factor))
    }

    /// Dense amplitudes in tensor-product order (`|↑⟩ = (1,0)ᵀ`, site 1 most significant).
    pub fn to_dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; 1 << self.n_sites];
        for (b, a) in &self.amplitudes {
            out[b.dense_index()] = *a;
        }
        out
    }

    pub fn from_dense(n_sites: usize, dense: &[f64]) -> Result<Self> {
        check_sites(n_sites)?;
        if dense.len() != 1 << n_sites {
            return Err(Error::SiteMismatch(n_sites, dense.len()));
        }
        Self::from_entries(
            n_sites,
            dense.iter().enumerate().map(|(i, a)| (BasisState::from_dense_index(n_sites, i), *a)),
        )
    }

    /// Largest absolute componentwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut keys: Vec<_> = self.amplitudes.keys().chain(other.amplitudes.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().map(|b| (self.amplitude(b) - other.amplitude(b)).abs()).fold(0.0, f64::max)
    }
}

/// Exact ratio `numerator / denominator` between two proportional states.
#[derive(Clone, Debug, PartialEq)]
pub struct Ratio {
    pub numerator: HScalar,
    pub denominator: HScalar,
}

impl Ratio {
    /// Whether the ratio equals `value` exactly.
    pub fn equals(&self, value: &HScalar) -> bool {
        self.numerator == value * &self.denominator
    }

    pub fn evaluate(&self, h: f64) -> f64 {
        self.numerator.evaluate(h) / self.denominator.evaluate(h)
    }
}

/// Exact proportionality test: returns `r` with `a = r·b` when it exists.
///
/// Cross-multiplies against one pivot component, so no division in the ring
/// is needed. Both supports must coincide.
pub fn proportional(a: &StateVector, b: &StateVector) -> Result<Option<Ratio>> {
    if a.n_sites != b.n_sites {
        return Err(Error::SiteMismatch(a.n_sites, b.n_sites));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroVector);
    }
    if a.amplitudes.len() != b.amplitudes.len() || a.amplitudes.keys().ne(b.amplitudes.keys()) {
        return Ok(None);
    }
    let (pivot, a_p) = a.amplitudes.iter().next().expect("nonzero");
    let b_p = &b.amplitudes[pivot];
    for (state, a_i) in &a.amplitudes {
        let b_i = &b.amplitudes[state];
        if a_i * b_p != a_p * b_i {
            return Ok(None);
        }
    }
    Ok(Some(Ratio { numerator: a_p.clone(), denominator: b_p.clone() }))
}

/// Site-local generator of the undeformed action: `Z₊ = J₊`, `Z₋ = J₋`, `H = 2J_z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Zplus,
    Zminus,
    Hgen,
}

/// Sparse exact operator on an `n`-site chain, stored column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOperator {
    n_sites: usize,
    /// `columns[in_mask]` maps `out_mask` to the matrix entry.
    columns: Vec<BTreeMap<u32, HScalar>>,
}

impl LinearOperator {
    pub fn zero(n_sites: usize) -> Result<Self> {
        check_sites(n_sites)?;
        Ok(Self::zero_unchecked(n_sites))
    }

    fn zero_unchecked(n_sites: usize) -> Self {
        Self { n_sites, columns: vec![BTreeMap::new(); 1 << n_sites] }
    }

    pub fn identity(n_sites: usize) -> Result<Self> {
        let mut op = Self::zero(n_sites)?;
        for (m, col) in op.columns.iter_mut().enumerate() {
            col.insert(m as u32, HScalar::one());
        }
        Ok(op)
    }

    /// Single-site generator on `site` (1-based), identity elsewhere.
    pub fn site_op(kind: Generator, site: usize, n_sites: usize) -> Result<Self> {
        check_sites(n_sites)?;
        if site == 0 || site > n_sites {
            return Err(Error::SiteOutOfRange { site, n_sites });
        }
        let b = bit(n_sites, site);
        let mut op = Self::zero_unchecked(n_sites);
        for (m, col) in op.columns.iter_mut().enumerate() {
            let m = m as u32;
            let up = m & b != 0;
            match kind {
                Generator::Zplus if !up => {
                    col.insert(m | b, HScalar::one());
                }
                Generator::Zminus if up => {
                    col.insert(m & !b, HScalar::one());
                }
                Generator::Hgen => {
                    col.insert(m, HScalar::from_integer(if up { 1 } else { -1 }));
                }
                _ => {}
            }
        }
        Ok(op)
    }

    /// The generator on a single site.
    pub fn single_site(kind: Generator) -> Self {
        Self::site_op(kind, 1, 1).expect("one site is valid")
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    pub fn entry(&self, out: &BasisState, input: &BasisState) -> HScalar {
        self.columns[input.mask() as usize].get(&out.mask()).cloned().unwrap_or_default()
    }

    /// Nonzero entries as `(out, in, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (BasisState, BasisState, &HScalar)> {
        let n = self.n_sites;
        self.columns.iter().enumerate().flat_map(move |(i, col)| {
            col.iter().map(move |(o, v)| (BasisState::from_mask(n, *o), BasisState::from_mask(n, i as u32), v))
        })
    }

    /// Adds `value` to the entry at `(out, input)`.
    pub fn with_entry(mut self, out: BasisState, input: BasisState, value: HScalar) -> Self {
        debug_assert_eq!(out.n_sites(), self.n_sites);
        Self::insert_add(&mut self.columns[input.mask() as usize], out.mask(), value);
        self
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    fn insert_add(col: &mut BTreeMap<u32, HScalar>, out: u32, value: HScalar) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match col.entry(out) {
            Entry::Vacant(v) => {
                v.insert(value);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += value;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (col, other_col) in out.columns.iter_mut().zip(&other.columns) {
            for (o, v) in other_col {
                Self::insert_add(col, *o, v.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&HScalar::from_integer(-1)))
    }

    pub fn scale(&self, factor: &HScalar) -> Self {
        let mut out = Self::zero_unchecked(self.n_sites);
        if factor.is_zero() {
            return out;
        }
        for (col, src) in out.columns.iter_mut().zip(&self.columns) {
            for (o, v) in src {
                Self::insert_add(col, *o, v * factor);
            }
        }
        out
    }

    /// Operator product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero_unchecked(self.n_sites);
        for (col, other_col) in out.columns.iter_mut().zip(&other.columns) {
            for (k, b) in other_col {
                for (o, a) in &self.columns[*k as usize] {
                    Self::insert_add(col, *o, a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = Self::identity(self.n_sites).expect("validated size");
        for _ in 0..exponent {
            out = self.compose(&out).expect("same size");
        }
        out
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Tensor product with `self` on the left (more significant) sites.
    pub fn kron(&self, right: &Self) -> Result<Self> {
        let n = self.n_sites + right.n_sites;
        check_sites(n)?;
        let shift = right.n_sites;
        let mut out = Self::zero_unchecked(n);
        for (ia, col_a) in self.columns.iter().enumerate() {
            for (ib, col_b) in right.columns.iter().enumerate() {
                let col = &mut out.columns[(ia << shift) | ib];
                for (oa, va) in col_a {
                    for (ob, vb) in col_b {
                        Self::insert_add(col, (oa << shift) | ob, va * vb);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.n_sites() != self.n_sites {
            return Err(Error::SiteMismatch(self.n_sites, v.n_sites()));
        }
        let mut out = StateVector::zero(self.n_sites)?;
        for (b, a) in v.iter() {
            for (o, m) in &self.columns[b.mask() as usize] {
                out.add_amplitude(BasisState::from_mask(self.n_sites, *o), m * a);
            }
        }
        Ok(out)
    }

    /// Degree-0 part of every entry.
    pub fn constant_part(&self) -> Self {
        self.map_entries(|v| HScalar::constant(v.constant_term()))
    }

    pub fn evaluate(&self, h: f64) -> Vec<Vec<f64>> {
        let dim = 1usize << self.n_sites;
        let mut dense = vec![vec![0.0; dim]; dim];
        for (o, i, v) in self.entries() {
            dense[o.dense_index()][i.dense_index()] = v.evaluate(h);
        }
        dense
    }

    fn map_entries(&self, f: impl Fn(&HScalar) -> HScalar) -> Self {
        let mut out = Self::zero_unchecked(self.n_sites);
        for (col, src) in out.columns.iter_mut().zip(&self.columns) {
            for (o, v) in src {
                Self::insert_add(col, *o, f(v));
            }
        }
        out
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n_sites != other.n_sites {
            return Err(Error::SiteMismatch(self.n_sites, other.n_sites));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> BasisState {
        s.parse().unwrap()
    }

    fn vec_of(n: usize, entries: &[(&str, HScalar)]) -> StateVector {
        StateVector::from_entries(n, entries.iter().map(|(b, a)| (st(b), a.clone()))).unwrap()
    }

    #[test]
    fn canonical_order_matches_table_columns() {
        let order: Vec<String> = BasisState::all(3).unwrap().iter().map(|b| b.to_ascii()).collect();
        assert_eq!(order, ["ddd", "udd", "dud", "ddu", "uud", "udu", "duu", "uuu"]);
    }

    #[test]
    fn dense_index_uses_up_first_convention() {
        assert_eq!(st("uu").dense_index(), 0);
        assert_eq!(st("ud").dense_index(), 1);
        assert_eq!(st("du").dense_index(), 2);
        assert_eq!(st("dd").dense_index(), 3);
        assert_eq!(BasisState::from_dense_index(2, 1), st("ud"));
    }

    #[test]
    fn site_op_examples() {
        let zp = LinearOperator::site_op(Generator::Zplus, 1, 2).unwrap();
        let out = zp.apply(&StateVector::basis(st("dd"), HScalar::one())).unwrap();
        assert_eq!(out, StateVector::basis(st("ud"), HScalar::one()));

        let h = LinearOperator::single_site(Generator::Hgen);
        let up = StateVector::basis(st("u"), HScalar::one());
        assert_eq!(h.apply(&up).unwrap(), up);

        let zp1 = LinearOperator::single_site(Generator::Zplus);
        assert!(zp1.compose(&zp1).unwrap().is_zero());
        assert!(matches!(LinearOperator::site_op(Generator::Zplus, 3, 2), Err(Error::SiteOutOfRange { .. })));
    }

    #[test]
    fn site_commutators() {
        for n in 1..=3 {
            for s in 1..=n {
                let zp = LinearOperator::site_op(Generator::Zplus, s, n).unwrap();
                let zm = LinearOperator::site_op(Generator::Zminus, s, n).unwrap();
                let h = LinearOperator::site_op(Generator::Hgen, s, n).unwrap();
                assert_eq!(zp.commutator(&zm).unwrap(), h);
                assert_eq!(h.commutator(&zp).unwrap(), zp.scale(&HScalar::from_integer(2)));
                assert_eq!(h.commutator(&zm).unwrap(), zm.scale(&HScalar::from_integer(-2)));
            }
        }
    }

    #[test]
    fn norm_squared_examples() {
        let h = HScalar::h();
        let singlet = vec_of(2, &[("ud", HScalar::one()), ("du", HScalar::from_integer(-1)), ("uu", -&h)]);
        assert_eq!(singlet.norm_squared(), &h.pow(2) + &HScalar::from_integer(2));

        assert_eq!(StateVector::basis(st("uu"), HScalar::one()).norm_squared(), HScalar::one());

        let two_h = h.scale_rational(&crate::scalar::rational(2, 1));
        let lowest =
            vec_of(2, &[("dd", HScalar::from_integer(4)), ("ud", -&two_h), ("du", two_h.clone()), ("uu", h.pow(2))]);
        let expected = (&h.pow(2) + &HScalar::from_integer(4)).pow(2);
        assert_eq!(lowest.norm_squared(), expected);
    }

    #[test]
    fn proportional_examples() {
        let b = vec_of(2, &[("ud", HScalar::one()), ("du", HScalar::one())]);
        let a = b.scale(&HScalar::from_integer(2));
        let r = proportional(&a, &b).unwrap().unwrap();
        assert!(r.equals(&HScalar::from_integer(2)));
        assert!(proportional(&b, &b).unwrap().unwrap().equals(&HScalar::one()));

        let c = vec_of(2, &[("ud", HScalar::one()), ("du", HScalar::from_integer(-1))]);
        assert_eq!(proportional(&c, &b).unwrap(), None);
        let zero = StateVector::zero(2).unwrap();
        assert_eq!(proportional(&zero, &b), Err(Error::ZeroVector));
    }

    #[test]
    fn normalize_examples() {
        let sym = vec_of(2, &[("ud", HScalar::one()), ("du", HScalar::one())]);
        let n = sym.normalize_at(0.3).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((n.amplitude(&st("ud")) - s).abs() < 1e-15);

        let h = HScalar::h();
        let singlet = vec_of(2, &[("ud", HScalar::one()), ("du", HScalar::from_integer(-1)), ("uu", -&h)]);
        let bell = singlet.normalize_at(0.0).unwrap();
        assert!((bell.amplitude(&st("ud")) - s).abs() < 1e-15);
        assert!((bell.amplitude(&st("du")) + s).abs() < 1e-15);
        assert_eq!(bell.support_len(), 2);

        let half = singlet.neg().normalize_at(0.5).unwrap();
        for (b, x) in [("ud", 2.0 / 3.0), ("du", -2.0 / 3.0), ("uu", -1.0 / 3.0)] {
            assert!((half.amplitude(&st(b)) - x).abs() < 1e-15, "{b}");
        }
        assert!(matches!(StateVector::<HScalar>::zero(2).unwrap().normalize_at(1.0), Err(Error::DegenerateNorm(_))));
    }

    #[test]
    fn kron_matches_site_ops() {
        let zp = LinearOperator::single_site(Generator::Zplus);
        let id = LinearOperator::identity(2).unwrap();
        assert_eq!(zp.kron(&id).unwrap(), LinearOperator::site_op(Generator::Zplus, 1, 3).unwrap());
        assert_eq!(id.kron(&zp).unwrap(), LinearOperator::site_op(Generator::Zplus, 3, 3).unwrap());
    }

    #[test]
    fn permute_sites_reverses() {
        let v = vec_of(3, &[("uud", HScalar::one()), ("ddu", HScalar::h())]);
        let r = v.permute_sites(&[3, 2, 1]).unwrap();
        assert_eq!(r.amplitude(&st("duu")), HScalar::one());
        assert_eq!(r.amplitude(&st("udd")), HScalar::h());
    }
}
