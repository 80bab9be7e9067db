use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{RadicalSum, Rational};

/// A polynomial in the deformation parameter `h` with [`RadicalSum`]
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HScalar {
    coefficients: BTreeMap<u32, RadicalSum>,
}

impl HScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(RadicalSum::one())
    }

    /// The indeterminate `h`.
    pub fn h() -> Self {
        Self::monomial(RadicalSum::one(), 1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(RadicalSum::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::constant(RadicalSum::from_rational(r))
    }

    /// `numerator / denominator` as a constant.
    pub fn ratio(numerator: i64, denominator: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(numerator), BigInt::from(denominator)))
    }

    pub fn constant(c: RadicalSum) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: RadicalSum, power: u32) -> Self {
        let mut coefficients = BTreeMap::new();
        if !c.is_zero() {
            coefficients.insert(power, c);
        }
        Self { coefficients }
    }

    /// `(h/2)^k`
    pub fn half_h_pow(k: u32) -> Self {
        let denom = BigInt::one() << k as usize;
        Self::monomial(RadicalSum::from_rational(Rational::new(BigInt::one(), denom)), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coefficients.len() == 1 && self.coefficients.get(&0).is_some_and(RadicalSum::is_one)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn coefficient(&self, power: u32) -> RadicalSum {
        self.coefficients.get(&power).cloned().unwrap_or_default()
    }

    /// Iterates `(power, coefficient)` in ascending power.
    pub fn coefficients(&self) -> impl Iterator<Item = (u32, &RadicalSum)> {
        self.coefficients.iter().map(|(k, c)| (*k, c))
    }

    /// Exact value at `h = 0`.
    pub fn constant_term(&self) -> RadicalSum {
        self.coefficient(0)
    }

    pub fn as_constant(&self) -> Option<&RadicalSum> {
        match self.coefficients.len() {
            0 => None,
            1 => self.coefficients.get(&0),
            _ => None,
        }
    }

    pub fn evaluate(&self, h: f64) -> f64 {
        // Horner over the sparse powers, highest first.
        let mut acc = 0.0;
        let mut current = self.degree().unwrap_or(0);
        for (power, c) in self.coefficients.iter().rev() {
            acc *= h.powi((current - power) as i32);
            acc += c.to_f64();
            current = *power;
        }
        acc * h.powi(current as i32)
    }

    /// The substitution `h ↦ -h`.
    pub fn negate_h(&self) -> Self {
        Self {
            coefficients: self
                .coefficients
                .iter()
                .map(|(k, c)| (*k, if k % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &RadicalSum) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, c) in &self.coefficients {
            out.add_at(*k, c * factor);
        }
        out
    }

    pub fn scale_rational(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { coefficients: self.coefficients.iter().map(|(k, c)| (*k, c.scale(factor))).collect() }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exponent {
            out = &out * self;
        }
        out
    }

    pub(crate) fn add_at(&mut self, power: u32, c: RadicalSum) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coefficients.entry(power) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl From<RadicalSum> for HScalar {
    fn from(c: RadicalSum) -> Self {
        Self::constant(c)
    }
}

impl From<i8> for HScalar {
    fn from(n: i8) -> Self {
        Self::from_integer(n.into())
    }
}

impl From<i64> for HScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for HScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coefficients
            .iter()
            .flat_map(|(k, c)| c.terms().map(move |(d, r)| (r.clone(), d, *k)).collect::<Vec<_>>());
        super::format::write_terms(f, terms)
    }
}

impl Neg for HScalar {
    type Output = HScalar;
    fn neg(mut self) -> HScalar {
        for c in self.coefficients.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &HScalar {
    type Output = HScalar;
    fn neg(self) -> HScalar {
        -self.clone()
    }
}

impl AddAssign<&HScalar> for HScalar {
    fn add_assign(&mut self, rhs: &HScalar) {
        for (k, c) in &rhs.coefficients {
            self.add_at(*k, c.clone());
        }
    }
}

impl AddAssign for HScalar {
    fn add_assign(&mut self, rhs: HScalar) {
        for (k, c) in rhs.coefficients {
            self.add_at(k, c);
        }
    }
}

impl SubAssign<&HScalar> for HScalar {
    fn sub_assign(&mut self, rhs: &HScalar) {
        for (k, c) in &rhs.coefficients {
            self.add_at(*k, -c);
        }
    }
}

impl Add<&HScalar> for &HScalar {
    type Output = HScalar;
    fn add(self, rhs: &HScalar) -> HScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HScalar {
    type Output = HScalar;
    fn add(mut self, rhs: HScalar) -> HScalar {
        self += rhs;
        self
    }
}

impl Sub<&HScalar> for &HScalar {
    type Output = HScalar;
    fn sub(self, rhs: &HScalar) -> HScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for HScalar {
    type Output = HScalar;
    fn sub(mut self, rhs: HScalar) -> HScalar {
        self -= &rhs;
        self
    }
}

impl Mul<&HScalar> for &HScalar {
    type Output = HScalar;
    fn mul(self, rhs: &HScalar) -> HScalar {
        let mut out = HScalar::zero();
        for (a, ca) in &self.coefficients {
            for (b, cb) in &rhs.coefficients {
                out.add_at(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for HScalar {
    type Output = HScalar;
    fn mul(self, rhs: HScalar) -> HScalar {
        &self * &rhs
    }
}

impl MulAssign<&HScalar> for HScalar {
    fn mul_assign(&mut self, rhs: &HScalar) {
        *self = &*self * rhs;
    }
}

impl Zero for HScalar {
    fn zero() -> Self {
        HScalar::zero()
    }
    fn is_zero(&self) -> bool {
        HScalar::is_zero(self)
    }
}

impl One for HScalar {
    fn one() -> Self {
        HScalar::one()
    }
}
