//! N-fold coproduct images of the generators on qubit chains.
//!
//! Three Hopf structures are covered:
//!
//! * undeformed: the primitive coproduct, exact;
//! * Jordanian (`h`): exact, in the `{H, Z₊, Z₋}` basis, with every infinite
//!   series summed until the operator power vanishes;
//! * standard (`q`): dense `f64` matrices with `q^{±L_z/2}` acting diagonally.
//!
//! The N-site image is produced from the two-site map by expanding the left
//! tensor slot, `Δ⁽ᴺ⁾ = (Δ⁽ᴺ⁻¹⁾ ⊗ 1)∘Δ`. Since `Δ` is an algebra
//! homomorphism, this only needs the `(N−1)`-site images of the generators:
//! [`delta2_h`] takes generator images on two blocks and returns the images on
//! their tensor product. Expanding the right slot instead ([`h_images_fl`])
//! gives the alternative recursion used to test coassociativity.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hilbert::{check_sites, full_mask, BasisState, Generator, LinearOperator, NumericState, StateVector};
use crate::scalar::{q_number, rational, HScalar, QValue, Rational};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DeformationTag {
    Undeformed,
    Q(QValue),
    HExact,
}

/// Images of `H`, `Z₊`, `Z₋` on one block of sites.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactImages {
    pub h: LinearOperator,
    pub zplus: LinearOperator,
    pub zminus: LinearOperator,
}

impl ExactImages {
    /// Generators on a single qubit.
    pub fn site() -> Self {
        Self {
            h: LinearOperator::single_site(Generator::Hgen),
            zplus: LinearOperator::single_site(Generator::Zplus),
            zminus: LinearOperator::single_site(Generator::Zminus),
        }
    }

    pub fn n_sites(&self) -> usize {
        self.h.n_sites()
    }

    pub fn get(&self, generator: Generator) -> &LinearOperator {
        match generator {
            Generator::Hgen => &self.h,
            Generator::Zplus => &self.zplus,
            Generator::Zminus => &self.zminus,
        }
    }

    /// Image of the Casimir `C_h = Z₊Z₋ + H²/4 − H/2` on this block.
    pub fn casimir(&self) -> LinearOperator {
        let quarter = HScalar::ratio(1, 4);
        let half = HScalar::ratio(1, 2);
        let zz = self.zplus.compose(&self.zminus).expect("same block");
        let h2 = self.h.compose(&self.h).expect("same block");
        zz.add(&h2.scale(&quarter)).and_then(|op| op.sub(&self.h.scale(&half))).expect("same block")
    }

    /// Degree-0 part of every image.
    pub fn constant_part(&self) -> Self {
        Self { h: self.h.constant_part(), zplus: self.zplus.constant_part(), zminus: self.zminus.constant_part() }
    }
}

/// Images of `2L_z`, `L₊`, `L₋` on one block, dense in tensor-product order.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericImages {
    pub h: DMatrix<f64>,
    pub lplus: DMatrix<f64>,
    pub lminus: DMatrix<f64>,
}

impl NumericImages {
    pub fn site() -> Self {
        Self {
            h: DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]),
            lplus: DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]),
            lminus: DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0]),
        }
    }

    pub fn get(&self, generator: Generator) -> &DMatrix<f64> {
        match generator {
            Generator::Hgen => &self.h,
            Generator::Zplus => &self.lplus,
            Generator::Zminus => &self.lminus,
        }
    }

    /// Diagonal of `L_z`; `h` is diagonal on every block.
    pub fn lz_diagonal(&self) -> Vec<f64> {
        self.h.diagonal().iter().map(|x| x / 2.0).collect()
    }
}

/// A coproduct image, exact or numeric depending on the deformation.
#[derive(Clone, Debug, PartialEq)]
pub enum CoproductOperator {
    Exact(LinearOperator),
    Numeric(DMatrix<f64>),
}

impl CoproductOperator {
    pub fn as_exact(&self) -> Option<&LinearOperator> {
        match self {
            Self::Exact(op) => Some(op),
            Self::Numeric(_) => None,
        }
    }

    pub fn as_numeric(&self) -> Option<&DMatrix<f64>> {
        match self {
            Self::Numeric(m) => Some(m),
            Self::Exact(_) => None,
        }
    }
}

/// N-fold coproduct of one generator. For `Q`, `Hgen` maps to `2L_z` and
/// `Zplus`/`Zminus` to `L±`.
pub fn coproduct_n(tag: DeformationTag, generator: Generator, n_sites: usize) -> Result<CoproductOperator> {
    check_sites(n_sites)?;
    Ok(match tag {
        DeformationTag::Undeformed => CoproductOperator::Exact(undeformed(generator, n_sites)?),
        DeformationTag::HExact => CoproductOperator::Exact(match generator {
            Generator::Zplus => h_zplus(n_sites)?,
            Generator::Hgen => h_hgen_zplus(n_sites)?.0,
            Generator::Zminus => h_images(n_sites)?.zminus,
        }),
        DeformationTag::Q(q) => CoproductOperator::Numeric(q_images(n_sites, &q)?.get(generator).clone()),
    })
}

/// Primitive coproduct: the sum of the site operators.
pub fn undeformed(generator: Generator, n_sites: usize) -> Result<LinearOperator> {
    let mut acc = LinearOperator::zero(n_sites)?;
    for site in 1..=n_sites {
        acc = acc.add(&LinearOperator::site_op(generator, site, n_sites)?)?;
    }
    Ok(acc)
}

pub fn undeformed_images(n_sites: usize) -> Result<ExactImages> {
    Ok(ExactImages {
        h: undeformed(Generator::Hgen, n_sites)?,
        zplus: undeformed(Generator::Zplus, n_sites)?,
        zminus: undeformed(Generator::Zminus, n_sites)?,
    })
}

/// Primitive two-block coproduct `a ⊗ 1 + 1 ⊗ a` on every generator.
pub fn delta2_primitive(left: &ExactImages, right: &ExactImages) -> Result<ExactImages> {
    let il = LinearOperator::identity(left.n_sites())?;
    let ir = LinearOperator::identity(right.n_sites())?;
    let prim = |a: &LinearOperator, b: &LinearOperator| a.kron(&ir)?.add(&il.kron(b)?);
    Ok(ExactImages {
        h: prim(&left.h, &right.h)?,
        zplus: prim(&left.zplus, &right.zplus)?,
        zminus: prim(&left.zminus, &right.zminus)?,
    })
}

/// `Σ_{n ≥ start} coef(n)·tⁿ`, stopping at the first vanishing power.
fn nilpotent_series(t: &LinearOperator, start: u32, coef: impl Fn(u32) -> i64) -> LinearOperator {
    let mut acc = LinearOperator::zero(t.n_sites()).expect("valid size");
    let mut power = t.pow(start);
    let mut n = start;
    while !power.is_zero() {
        let c = coef(n);
        if c != 0 {
            acc = acc.add(&power.scale(&HScalar::from_integer(c))).expect("same size");
        }
        power = t.compose(&power).expect("same size");
        n += 1;
    }
    acc
}

/// `±(h/2)·Z₊` on a block.
fn half_h_zplus(zplus: &LinearOperator, sign: i64) -> LinearOperator {
    zplus.scale(&HScalar::half_h_pow(1).scale_rational(&rational(sign, 1)))
}

/// `Δ_h(Z₊) = (1⊗Z₊ + Z₊⊗1)·Σₙ (−h²/4)ⁿ Z₊ⁿ⊗Z₊ⁿ`.
pub fn delta2_zplus(left: &LinearOperator, right: &LinearOperator) -> Result<LinearOperator> {
    let il = LinearOperator::identity(left.n_sites())?;
    let ir = LinearOperator::identity(right.n_sites())?;
    let prefix = il.kron(right)?.add(&left.kron(&ir)?)?;
    let step = left.kron(right)?.scale(&(-HScalar::half_h_pow(2)));
    let mut series = LinearOperator::identity(prefix.n_sites())?;
    let mut power = step.clone();
    while !power.is_zero() {
        series = series.add(&power)?;
        power = power.compose(&step)?;
    }
    prefix.compose(&series)
}

/// `Δ_h(H) = H⊗1 + 1⊗H + 2H⊗Σ_{n≥1}(hZ₊/2)ⁿ + Σ_{n≥1}(−hZ₊/2)ⁿ⊗2H`.
pub fn delta2_hgen(
    left_h: &LinearOperator,
    left_zplus: &LinearOperator,
    right_h: &LinearOperator,
    right_zplus: &LinearOperator,
) -> Result<LinearOperator> {
    let il = LinearOperator::identity(left_h.n_sites())?;
    let ir = LinearOperator::identity(right_h.n_sites())?;
    let two = HScalar::from_integer(2);
    let tail_r = nilpotent_series(&half_h_zplus(right_zplus, 1), 1, |_| 1);
    let tail_l = nilpotent_series(&half_h_zplus(left_zplus, -1), 1, |_| 1);
    left_h
        .kron(&ir)?
        .add(&il.kron(right_h)?)?
        .add(&left_h.scale(&two).kron(&tail_r)?)?
        .add(&tail_l.kron(&right_h.scale(&two))?)
}

/// Two-site `Δ_h(Z₋)` with `h(C_h − H²/4) = h(Z₊Z₋ − H/2)` formed per block.
pub fn delta2_zminus(left: &ExactImages, right: &ExactImages) -> Result<LinearOperator> {
    let t_r = half_h_zplus(&right.zplus, 1);
    let t_l = half_h_zplus(&left.zplus, -1);
    let hh = HScalar::h();
    let casimir_part = |b: &ExactImages| -> Result<LinearOperator> {
        let zz = b.zplus.compose(&b.zminus)?;
        Ok(zz.sub(&b.h.scale(&HScalar::ratio(1, 2)))?.scale(&hh))
    };
    let zpzmzp = |b: &ExactImages| -> Result<LinearOperator> {
        Ok(b.zplus.compose(&b.zminus)?.compose(&b.zplus)?.scale(&HScalar::half_h_pow(2)))
    };

    let mut acc = left.zminus.kron(&nilpotent_series(&t_r, 0, |n| n as i64 + 1))?;
    acc = acc.add(&nilpotent_series(&t_l, 0, |n| n as i64 + 1).kron(&right.zminus)?)?;
    acc = acc.add(&casimir_part(left)?.kron(&nilpotent_series(&t_r, 1, |m| m as i64))?)?;
    acc = acc.sub(&nilpotent_series(&t_l, 1, |m| m as i64).kron(&casimir_part(right)?)?)?;
    acc = acc.add(&zpzmzp(left)?.kron(&nilpotent_series(&t_r, 2, |k| k as i64 - 1))?)?;
    acc.add(&nilpotent_series(&t_l, 2, |k| k as i64 - 1).kron(&zpzmzp(right)?)?)
}

/// Jordanian images on the tensor product of two blocks.
pub fn delta2_h(left: &ExactImages, right: &ExactImages) -> Result<ExactImages> {
    Ok(ExactImages {
        h: delta2_hgen(&left.h, &left.zplus, &right.h, &right.zplus)?,
        zplus: delta2_zplus(&left.zplus, &right.zplus)?,
        zminus: delta2_zminus(left, right)?,
    })
}

/// All three Jordanian images on `n` sites, left-slot recursion.
pub fn h_images(n_sites: usize) -> Result<ExactImages> {
    check_sites(n_sites)?;
    let site = ExactImages::site();
    let mut acc = site.clone();
    for _ in 1..n_sites {
        acc = delta2_h(&acc, &site)?;
    }
    Ok(acc)
}

/// All three Jordanian images on `n` sites, right-slot recursion.
pub fn h_images_fl(n_sites: usize) -> Result<ExactImages> {
    check_sites(n_sites)?;
    let site = ExactImages::site();
    let mut acc = site.clone();
    for _ in 1..n_sites {
        acc = delta2_h(&site, &acc)?;
    }
    Ok(acc)
}

/// Jordanian images with the chain split as `(1..=a) ⊗ (a+1..=n)`, each block
/// built by the left-slot recursion.
pub fn h_images_split(a: usize, n_sites: usize) -> Result<ExactImages> {
    if a == 0 || a >= n_sites {
        return Err(Error::range("split point", a, 1, n_sites as i64 - 1));
    }
    delta2_h(&h_images(a)?, &h_images(n_sites - a)?)
}

/// `Δ_h⁽ᴺ⁾(Z₊)` alone; it only depends on lower images of `Z₊`.
pub fn h_zplus(n_sites: usize) -> Result<LinearOperator> {
    check_sites(n_sites)?;
    let site = LinearOperator::single_site(Generator::Zplus);
    let mut acc = site.clone();
    for _ in 1..n_sites {
        acc = delta2_zplus(&acc, &site)?;
    }
    Ok(acc)
}

/// `(Δ_h⁽ᴺ⁾(H), Δ_h⁽ᴺ⁾(Z₊))`.
pub fn h_hgen_zplus(n_sites: usize) -> Result<(LinearOperator, LinearOperator)> {
    check_sites(n_sites)?;
    let h_site = LinearOperator::single_site(Generator::Hgen);
    let z_site = LinearOperator::single_site(Generator::Zplus);
    let (mut h, mut z) = (h_site.clone(), z_site.clone());
    for _ in 1..n_sites {
        h = delta2_hgen(&h, &z, &h_site, &z_site)?;
        z = delta2_zplus(&z, &z_site)?;
    }
    Ok((h, z))
}

/// The truncated closed form of `Δ_h⁽ᴺ⁾(Z₊)` on qubits: all single flips
/// minus `h²/2` times all flips of three distinct sites.
///
/// This agrees with the coproduct for `N ≤ 4` only. From five sites on the
/// coproduct also flips five sites at once with weight `h⁴`; see
/// [`coproduct_h_zplus_closed_form`].
pub fn coproduct_h_zplus_simplified(n_sites: usize) -> Result<LinearOperator> {
    operator_from_action(n_sites, apply_h_zplus_simplified)
}

/// Exact closed form of `Δ_h⁽ᴺ⁾(Z₊)` on qubits.
///
/// `Z₊ = (2/h)·tanh(hX/2)` with `X` primitive and `Xᵢ = Zᵢ` on a qubit, and
/// the `Zᵢ` commute and square to zero, so
/// `Δ⁽ᴺ⁾(Z₊) = Σ_k (−1)^k T_{2k+1} (h/2)^{2k} e_{2k+1}(Z₁, …, Z_N)` with `T`
/// the tangent numbers. The first two terms are the truncated form.
pub fn coproduct_h_zplus_closed_form(n_sites: usize) -> Result<LinearOperator> {
    operator_from_action(n_sites, apply_h_zplus)
}

fn operator_from_action(n_sites: usize, action: impl Fn(&StateVector) -> StateVector) -> Result<LinearOperator> {
    let mut op = LinearOperator::zero(n_sites)?;
    for b in BasisState::all(n_sites)? {
        let image = action(&StateVector::basis(b, HScalar::one()));
        for (out, v) in image.iter() {
            op = op.with_entry(*out, b, v.clone());
        }
    }
    Ok(op)
}

/// Tangent numbers `T₁, T₃, T₅, …` (1, 2, 16, 272, …), `count` of them.
pub fn tangent_numbers(count: usize) -> Vec<BigInt> {
    // Brent–Harvey in-place recurrence; t[k] ends as T_{2k+1}.
    let mut t = vec![BigInt::zero(); count.max(1)];
    t[0] = BigInt::one();
    for k in 1..count {
        t[k] = &t[k - 1] * k;
    }
    for k in 1..count {
        for j in k..count {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t.truncate(count);
    t
}

/// Weight of a simultaneous flip of `size` sites in `Δ_h⁽ᴺ⁾(Z₊)`.
pub fn zplus_flip_weight(size: usize) -> HScalar {
    if size.is_multiple_of(2) {
        return HScalar::zero();
    }
    let k = size / 2;
    let t = tangent_numbers(k + 1).pop().expect("k + 1 ≥ 1");
    let signed = if k.is_multiple_of(2) { t } else { -t };
    HScalar::half_h_pow(2 * k as u32).scale_rational(&Rational::from_integer(signed))
}

/// Applies the exact `Δ_h⁽ᴺ⁾(Z₊)` by flipping every odd-size set of down spins.
pub fn apply_h_zplus(state: &StateVector) -> StateVector {
    let n = state.n_sites();
    let weights: Vec<HScalar> = (0..=n).map(zplus_flip_weight).collect();
    let mut out = StateVector::zero(n).expect("state has a valid size");
    for (b, a) in state.iter() {
        let down = !b.mask() & full_mask(n);
        // Enumerate nonempty submasks of the down set.
        let mut sub = down;
        while sub != 0 {
            let w = &weights[sub.count_ones() as usize];
            if !w.is_zero() {
                out.add_amplitude(BasisState::from_mask(n, b.mask() | sub), a * w);
            }
            sub = (sub - 1) & down;
        }
    }
    out
}

/// Applies the truncated closed form (singles and triples only).
pub fn apply_h_zplus_simplified(state: &StateVector) -> StateVector {
    let n = state.n_sites();
    let triple = -(HScalar::h().pow(2).scale_rational(&rational(1, 2)));
    let mut out = StateVector::zero(n).expect("state has a valid size");
    for (b, a) in state.iter() {
        let down: Vec<u32> = (0..n as u32).filter(|i| b.mask() & (1 << i) == 0).collect();
        for &i in &down {
            out.add_amplitude(BasisState::from_mask(n, b.mask() | 1 << i), a.clone());
        }
        let weighted = a * &triple;
        for (x, &i) in down.iter().enumerate() {
            for (y, &j) in down.iter().enumerate().skip(x + 1) {
                for &k in &down[y + 1..] {
                    let m = b.mask() | 1 << i | 1 << j | 1 << k;
                    out.add_amplitude(BasisState::from_mask(n, m), weighted.clone());
                }
            }
        }
    }
    out
}

/// Single-site Casimir `Z₊Z₋ + H²/4 − H/2`, equal to `(3/4)·1` on a qubit.
pub fn casimir_h_site() -> LinearOperator {
    ExactImages::site().casimir()
}

/// N-site image of `C_h`, formed from the images of the generators.
pub fn casimir_h(n_sites: usize) -> Result<LinearOperator> {
    Ok(h_images(n_sites)?.casimir())
}

fn diag_power(diagonal: &[f64], f: impl Fn(f64) -> f64) -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(diagonal.len(), diagonal.iter().map(|x| f(*x))))
}

/// `Δ_q(L±) = q^{−L_z/2}⊗L± + L±⊗q^{L_z/2}`, `Δ_q(L_z)` primitive.
pub fn delta2_q(left: &NumericImages, right: &NumericImages, q: &QValue) -> NumericImages {
    let il = DMatrix::<f64>::identity(left.h.nrows(), left.h.nrows());
    let ir = DMatrix::<f64>::identity(right.h.nrows(), right.h.nrows());
    let qv = q.value();
    let left_inv = diag_power(&left.lz_diagonal(), |lz| qv.powf(-lz / 2.0));
    let right_pos = diag_power(&right.lz_diagonal(), |lz| qv.powf(lz / 2.0));
    let ladder = |l: &DMatrix<f64>, r: &DMatrix<f64>| left_inv.kronecker(r) + l.kronecker(&right_pos);
    NumericImages {
        h: left.h.kronecker(&ir) + il.kronecker(&right.h),
        lplus: ladder(&left.lplus, &right.lplus),
        lminus: ladder(&left.lminus, &right.lminus),
    }
}

/// q-deformed images on `n` sites, left-slot recursion.
pub fn q_images(n_sites: usize, q: &QValue) -> Result<NumericImages> {
    check_sites(n_sites)?;
    let site = NumericImages::site();
    let mut acc = site.clone();
    for _ in 1..n_sites {
        acc = delta2_q(&acc, &site, q);
    }
    Ok(acc)
}

/// q-deformed images on `n` sites, right-slot recursion.
pub fn q_images_fl(n_sites: usize, q: &QValue) -> Result<NumericImages> {
    check_sites(n_sites)?;
    let site = NumericImages::site();
    let mut acc = site.clone();
    for _ in 1..n_sites {
        acc = delta2_q(&site, &acc, q);
    }
    Ok(acc)
}

/// `[x]_q` applied to the diagonal matrix `diag(d)`.
pub fn q_number_diag(diagonal: &[f64], shift: f64, q: &QValue) -> DMatrix<f64> {
    diag_power(diagonal, |x| q_number(x + shift, q))
}

/// `C_q = Δ(L₋)Δ(L₊) + [Δ(L_z)]_q[Δ(L_z)+1]_q`.
pub fn qcasimir(n_sites: usize, q: &QValue) -> Result<DMatrix<f64>> {
    let images = q_images(n_sites, q)?;
    let lz = images.lz_diagonal();
    Ok(&images.lminus * &images.lplus + q_number_diag(&lz, 0.0, q) * q_number_diag(&lz, 1.0, q))
}

/// Dense matrix-vector product in tensor-product order.
pub fn apply_dense(op: &DMatrix<f64>, state: &NumericState) -> Result<NumericState> {
    let n = state.n_sites();
    if op.nrows() != 1 << n {
        return Err(Error::SiteMismatch(n, op.nrows().trailing_zeros() as usize));
    }
    let v = nalgebra::DVector::from_vec(state.to_dense());
    let out = op * v;
    NumericState::from_dense(n, out.as_slice())
}

/// Largest absolute entry of `a − b`.
pub fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).amax()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ket(s: &str) -> StateVector {
        StateVector::basis(s.parse().unwrap(), HScalar::one())
    }

    #[test]
    fn undeformed_two_site_raise() {
        let op = coproduct_n(DeformationTag::Undeformed, Generator::Zplus, 2).unwrap();
        let out = op.as_exact().unwrap().apply(&ket("dd")).unwrap();
        assert_eq!(out, ket("ud").add(&ket("du")).unwrap());
    }

    #[test]
    fn h_two_site_raise_has_no_correction() {
        let op = h_zplus(2).unwrap();
        assert_eq!(op.apply(&ket("dd")).unwrap(), ket("ud").add(&ket("du")).unwrap());
        assert_eq!(coproduct_h_zplus_simplified(2).unwrap(), op);
    }

    #[test]
    fn simplified_three_site_example() {
        let out = coproduct_h_zplus_simplified(3).unwrap().apply(&ket("ddd")).unwrap();
        let singles = ket("udd").add(&ket("dud")).unwrap().add(&ket("ddu")).unwrap();
        let triple = ket("uuu").scale(&HScalar::h().pow(2).scale_rational(&rational(-1, 2)));
        assert_eq!(out, singles.add(&triple).unwrap());
    }

    #[test]
    fn simplified_four_site_example() {
        let out = coproduct_h_zplus_simplified(4).unwrap().apply(&ket("dddd")).unwrap();
        assert_eq!(out.support_len(), 8);
        assert_eq!(out.amplitude(&"uudu".parse().unwrap()), HScalar::h().pow(2).scale_rational(&rational(-1, 2)));
    }

    #[test]
    fn tangent_numbers_and_weights() {
        let t: Vec<i64> = tangent_numbers(5).iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(t, [1, 2, 16, 272, 7936]);
        assert_eq!(zplus_flip_weight(1), HScalar::one());
        assert_eq!(zplus_flip_weight(3), HScalar::h().pow(2).scale_rational(&rational(-1, 2)));
        assert_eq!(zplus_flip_weight(5), HScalar::h().pow(4));
        assert_eq!(zplus_flip_weight(7), HScalar::h().pow(6).scale_rational(&rational(-17, 4)));
        assert!(zplus_flip_weight(4).is_zero());
    }

    #[test]
    fn truncated_form_misses_five_flips() {
        for n in 1..=4 {
            assert_eq!(coproduct_h_zplus_simplified(n).unwrap(), coproduct_h_zplus_closed_form(n).unwrap());
        }
        let diff = coproduct_h_zplus_closed_form(5).unwrap().sub(&coproduct_h_zplus_simplified(5).unwrap()).unwrap();
        let entries: Vec<_> = diff.entries().map(|(o, i, v)| (o.to_ascii(), i.to_ascii(), v.clone())).collect();
        assert_eq!(entries, [("uuuuu".to_string(), "ddddd".to_string(), HScalar::h().pow(4))]);
    }

    #[test]
    fn q_two_site_raise() {
        let q = QValue::new(2.0).unwrap();
        let op = coproduct_n(DeformationTag::Q(q), Generator::Zplus, 2).unwrap();
        let start = NumericState::basis("dd".parse().unwrap(), 1.0);
        let out = apply_dense(op.as_numeric().unwrap(), &start).unwrap();
        assert!((out.amplitude(&"du".parse().unwrap()) - q.quarter()).abs() < 1e-15);
        assert!((out.amplitude(&"ud".parse().unwrap()) - 1.0 / q.quarter()).abs() < 1e-15);
    }

    #[test]
    fn site_casimir_is_three_quarters() {
        let c = casimir_h_site();
        assert_eq!(c, LinearOperator::identity(1).unwrap().scale(&HScalar::ratio(3, 4)));
    }

    #[test]
    fn qcasimir_examples() {
        let one = QValue::undeformed();
        let c1 = qcasimir(1, &one).unwrap();
        assert!(max_abs_diff(&c1, &(DMatrix::identity(2, 2) * 0.75)) < 1e-14);

        let q = QValue::new(1.7).unwrap();
        let c2 = qcasimir(2, &q).unwrap();
        let top = BasisState::all_up(2).unwrap().dense_index();
        assert!((c2[(top, top)] - q_number(1.0, &q) * q_number(2.0, &q)).abs() < 1e-12);
    }

    #[test]
    fn two_site_homomorphism() {
        let im = h_images(2).unwrap();
        let two = HScalar::from_integer(2);
        assert_eq!(im.h.commutator(&im.zplus).unwrap(), im.zplus.scale(&two));
        assert_eq!(im.h.commutator(&im.zminus).unwrap(), im.zminus.scale(&-two));
        assert_eq!(im.zplus.commutator(&im.zminus).unwrap(), im.h);
    }
}
