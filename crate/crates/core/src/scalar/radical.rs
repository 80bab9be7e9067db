use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, ScalarError};

/// Trial division bound used when splitting a radicand into square and
/// squarefree parts.
const TRIAL_LIMIT: u64 = 1 << 20;

/// A finite sum `Σ c_d · √d` with rational `c_d` and squarefree radicands `d`.
///
/// Radicand `1` holds the rational part. Zero coefficients are never stored,
/// so structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<u64, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(1, r);
        }
        Self { terms }
    }

    /// `coefficient · √radicand`; the radicand is reduced to squarefree form.
    pub fn radical(coefficient: Rational, radicand: u64) -> Result<Self, ScalarError> {
        if radicand == 0 {
            return Ok(Self::zero());
        }
        let root = sqrt_rational(&Rational::from_integer(BigInt::from(radicand)))?;
        Ok(root.scale(&coefficient))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(One::is_one)
    }

    /// Iterates `(radicand, coefficient)` pairs in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(d, c)| (*d, c * factor)).collect() }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(d, c)| c.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt()).sum()
    }

    /// Largest absolute coefficient, used only for diagnostics.
    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, radicand: u64, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(radicand) {
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Square root of a positive rational as `c·√d`, `d` squarefree.
pub fn sqrt_rational(r: &Rational) -> Result<RadicalSum, ScalarError> {
    if !r.is_positive() {
        return Err(ScalarError::NonPositiveRadicand(r.to_string()));
    }
    // √(p/q) = √(p·q) / q
    let p = r.numer().magnitude();
    let q = r.denom().magnitude();
    let (outer, radicand) = squarefree_split(&(p * q))?;
    let coefficient = Rational::new(BigInt::from(outer), BigInt::from(q.clone()));
    let mut out = RadicalSum::zero();
    out.add_term(radicand, coefficient);
    Ok(out)
}

/// Writes `n = outer² · radicand` with `radicand` squarefree.
fn squarefree_split(n: &BigUint) -> Result<(BigUint, u64), ScalarError> {
    let mut rest = n.clone();
    let mut outer = BigUint::one();
    let mut radicand = 1u64;
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut exponent = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            exponent += 1;
        }
        if exponent > 0 {
            outer *= bp.pow(exponent / 2);
            if exponent % 2 == 1 {
                radicand = checked_radicand(radicand as u128 * p as u128, n)?;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok((outer, radicand));
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        outer *= root;
        return Ok((outer, radicand));
    }
    // No factor below the trial bound: `rest` is prime whenever it is below
    // the bound squared. Above that it could still hide a square factor.
    let bound = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
    if rest >= bound {
        return Err(ScalarError::RadicandTooLarge(n.to_string()));
    }
    let rest = rest.to_u64().ok_or_else(|| ScalarError::RadicandTooLarge(n.to_string()))?;
    radicand = checked_radicand(radicand as u128 * rest as u128, n)?;
    Ok((outer, radicand))
}

fn checked_radicand(value: u128, original: &BigUint) -> Result<u64, ScalarError> {
    u64::try_from(value).map_err(|_| ScalarError::RadicandTooLarge(original.to_string()))
}

/// √a · √b for squarefree a, b, returned as `(rational factor, squarefree radicand)`.
fn radical_product(a: u64, b: u64) -> (u64, u64) {
    let g = a.gcd(&b);
    let radicand = (a / g).checked_mul(b / g).expect("radicand product overflows u64");
    (g, radicand)
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_terms(f, self.terms.iter().map(|(d, c)| (c.clone(), *d, 0)))
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(mut self) -> RadicalSum {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -self.clone()
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, c.clone());
        }
    }
}

impl SubAssign<&RadicalSum> for RadicalSum {
    fn sub_assign(&mut self, rhs: &RadicalSum) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, -c.clone());
        }
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(mut self, rhs: RadicalSum) -> RadicalSum {
        self -= &rhs;
        self
    }
}

impl Mul<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let (outer, radicand) = radical_product(*a, *b);
                let coefficient = ca * cb * Rational::from_integer(BigInt::from(outer));
                out.add_term(radicand, coefficient);
            }
        }
        out
    }
}

impl Mul for RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: RadicalSum) -> RadicalSum {
        &self * &rhs
    }
}
