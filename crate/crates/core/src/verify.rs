//! Verification suites: every structural property of the constructions,
//! checked on concrete chains and reported one line per check.
//!
//! A check either passes, fails, or is a known deviation: a property that
//! was expected to hold but is false for a documented reason (the truncated
//! closed form of `Δ_h(Z₊)` from five sites on). Known deviations are
//! reported but do not fail a run.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clebsch::{
    cg_classical, couple_chain, couple_exact, find_state, ASign, CoupledBasis, CoupledState, HalfInt,
};
use crate::coproducts::{
    apply_h_zplus_simplified, coproduct_h_zplus_closed_form, coproduct_h_zplus_simplified, h_hgen_zplus, h_images,
    h_images_fl, h_zplus, max_abs_diff, q_images, q_images_fl, q_number_diag, qcasimir, undeformed_images,
    DeformationTag, ExactImages, NumericImages,
};
use crate::decomp::{
    acin3, acin3_complex, apply_local, density, euler_unitary, reversal_symmetry_check, schmidt2, schmidt2_complex,
    to_complex, Unitary2,
};
use crate::dicke::{
    check_sym_identity, dicke_classical, f_value, h_dicke, h_lowest_weight, lowest_weight_oracle, qdicke_explicit,
    qdicke_ladder, w_state_h, w_state_h_truncated, LadderDirection, MAX_ORACLE_SITES,
};
use crate::golden::{golden_prefactors, golden_table, golden_w4};
use crate::hilbert::{proportional, BasisState, LinearOperator, NumericState, StateVector};
use crate::reference::{acin_expected, schmidt_d_minus2, schmidt_m0, sign_singular, ACIN_STATES, H_VALUES};
use crate::scalar::{q_number, HScalar, QValue, RadicalSum};
use crate::{Error, Result};

/// q values swept by the q-branch checks.
pub const Q_VALUES: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Coproducts,
    Cg,
    Dicke,
    Identity,
    Decomp,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Coproducts, Suite::Cg, Suite::Dicke, Suite::Identity, Suite::Decomp];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Coproducts => "coproducts",
            Suite::Cg => "cg",
            Suite::Dicke => "dicke",
            Suite::Identity => "identity",
            Suite::Decomp => "decomp",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::Format(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    KnownDeviation,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Caps the chain size of every check; each check also has its own cap.
    pub max_n: Option<usize>,
    /// Sign convention fed to the golden coupling checks.
    pub cg_sign: ASign,
    /// Seed for the randomized instances.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_n: None, cg_sign: ASign::Alternating, seed: 0x5eed }
    }
}

impl VerifyOptions {
    fn limit(&self, cap: usize) -> usize {
        self.max_n.map_or(cap, |m| m.min(cap))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub known_deviation: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub counts: Counts,
    pub checks: Vec<CheckResult>,
}

impl Report {
    fn new(suite: Suite, checks: Vec<CheckResult>) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let counts = Counts {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            known_deviation: count(Status::KnownDeviation),
        };
        Self { suite: suite.to_string(), passed: counts.fail == 0, counts, checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self).map_err(|e| Error::Format(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::KnownDeviation => "KNOWN",
            };
            write!(f, "{tag:<5} {:<10} {}", c.suite, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "{}: {} passed, {} failed, {} known deviations",
            self.suite, self.counts.pass, self.counts.fail, self.counts.known_deviation
        )
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Known(String),
}

impl From<bool> for Outcome {
    fn from(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(String::new())
        }
    }
}

fn within(diff: f64, tolerance: f64) -> Outcome {
    if diff <= tolerance {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("deviation {diff:e} exceeds {tolerance:e}"))
    }
}

struct Runner {
    suite: &'static str,
    checks: Vec<CheckResult>,
}

impl Runner {
    fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
        let (status, detail) = match f() {
            Ok(Outcome::Pass) => (Status::Pass, String::new()),
            Ok(Outcome::Fail(d)) => (Status::Fail, d),
            Ok(Outcome::Known(d)) => (Status::KnownDeviation, d),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.checks.push(CheckResult { suite: self.suite, name: name.into(), status, detail });
    }
}

/// Runs one suite (or all of them, in order).
pub fn run(suite: Suite, options: &VerifyOptions) -> Report {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        let mut runner = Runner { suite: s.as_str(), checks: Vec::new() };
        match s {
            Suite::Coproducts => coproduct_suite(&mut runner, options),
            Suite::Cg => cg_suite(&mut runner, options),
            Suite::Dicke => dicke_suite(&mut runner, options),
            Suite::Identity => identity_suite(&mut runner, options),
            Suite::Decomp => decomp_suite(&mut runner, options),
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(runner.checks);
    }
    Report::new(suite, checks)
}

fn qvalue(q: f64) -> Result<QValue> {
    Ok(QValue::new(q)?)
}

fn prop(a: &StateVector, b: &StateVector) -> Result<bool> {
    Ok(proportional(a, b)?.is_some())
}

fn dense(op: &LinearOperator, h: f64) -> DMatrix<f64> {
    let rows = op.evaluate(h);
    let dim = rows.len();
    DMatrix::from_fn(dim, dim, |r, c| rows[r][c])
}

fn homomorphism_exact(im: &ExactImages) -> Result<bool> {
    let two = HScalar::from_integer(2);
    Ok(im.h.commutator(&im.zplus)? == im.zplus.scale(&two)
        && im.h.commutator(&im.zminus)? == im.zminus.scale(&-two)
        && im.zplus.commutator(&im.zminus)? == im.h)
}

/// Largest deviation from `[H, L±] = ±2L±` and `[L₊, L₋] = [H]_q`.
fn homomorphism_q(im: &NumericImages, q: &QValue) -> f64 {
    let comm = |a: &DMatrix<f64>, b: &DMatrix<f64>| a * b - b * a;
    let h_diag: Vec<f64> = im.h.diagonal().iter().copied().collect();
    [
        max_abs_diff(&comm(&im.h, &im.lplus), &(&im.lplus * 2.0)),
        max_abs_diff(&comm(&im.h, &im.lminus), &(&im.lminus * -2.0)),
        max_abs_diff(&comm(&im.lplus, &im.lminus), &q_number_diag(&h_diag, 0.0, q)),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

fn coproduct_suite(r: &mut Runner, o: &VerifyOptions) {
    for n in 2..=o.limit(6) {
        r.check(format!("coassociativity h N={n}"), || Ok((h_images(n)? == h_images_fl(n)?).into()));
        for q in Q_VALUES {
            r.check(format!("coassociativity q={q} N={n}"), || {
                let q = qvalue(q)?;
                let (a, b) = (q_images(n, &q)?, q_images_fl(n, &q)?);
                let diff =
                    [max_abs_diff(&a.h, &b.h), max_abs_diff(&a.lplus, &b.lplus), max_abs_diff(&a.lminus, &b.lminus)]
                        .into_iter()
                        .fold(0.0, f64::max);
                Ok(within(diff, 1e-10))
            });
        }
    }
    for n in 1..=o.limit(5) {
        r.check(format!("homomorphism undeformed N={n}"), || {
            homomorphism_exact(&undeformed_images(n)?).map(Outcome::from)
        });
        r.check(format!("homomorphism h N={n}"), || homomorphism_exact(&h_images(n)?).map(Outcome::from));
        for q in Q_VALUES {
            r.check(format!("homomorphism q={q} N={n}"), || {
                let q = qvalue(q)?;
                Ok(within(homomorphism_q(&q_images(n, &q)?, &q), 1e-10))
            });
        }
    }
    for n in 1..=o.limit(6) {
        r.check(format!("h=0 limit N={n}"), || Ok((h_images(n)?.constant_part() == undeformed_images(n)?).into()));
        r.check(format!("q=1 limit N={n}"), || {
            let q = q_images(n, &QValue::undeformed())?;
            let u = undeformed_images(n)?;
            let diff = [
                max_abs_diff(&q.h, &dense(&u.h, 0.0)),
                max_abs_diff(&q.lplus, &dense(&u.zplus, 0.0)),
                max_abs_diff(&q.lminus, &dense(&u.zminus, 0.0)),
            ]
            .into_iter()
            .fold(0.0, f64::max);
            Ok(within(diff, 1e-12))
        });
    }
    for n in 1..=o.limit(4) {
        r.check(format!("Casimir centrality N={n}"), || {
            let im = h_images(n)?;
            let c = im.casimir();
            Ok((c.commutator(&im.h)?.is_zero()
                && c.commutator(&im.zplus)?.is_zero()
                && c.commutator(&im.zminus)?.is_zero())
            .into())
        });
    }
    for n in 1..=o.limit(8) {
        r.check(format!("truncated Z+ form equals coproduct N={n}"), || {
            let diff = coproduct_h_zplus_simplified(n)?.sub(&h_zplus(n)?)?;
            Ok(match (diff.is_zero(), n) {
                (true, _) => Outcome::Pass,
                (false, 1..=4) => Outcome::Fail(format!("{} entries differ", diff.nnz())),
                (false, _) => Outcome::Known(format!(
                    "{} entries differ; the coproduct also flips 5 or more sites at once (weights h^4, h^6, ...)",
                    diff.nnz()
                )),
            })
        });
        r.check(format!("tangent-number Z+ form equals coproduct N={n}"), || {
            Ok((coproduct_h_zplus_closed_form(n)? == h_zplus(n)?).into())
        });
    }
}

fn exact_basis(n: usize, tag: DeformationTag) -> Result<Vec<CoupledState>> {
    match couple_chain(n, tag)? {
        CoupledBasis::Exact(states) => Ok(states),
        CoupledBasis::Numeric(_) => Err(Error::Format("expected an exact basis".into())),
    }
}

fn numeric_basis(n: usize, q: QValue) -> Result<Vec<CoupledState<f64>>> {
    match couple_chain(n, DeformationTag::Q(q))? {
        CoupledBasis::Numeric(states) => Ok(states),
        CoupledBasis::Exact(_) => Err(Error::Format("expected a numeric basis".into())),
    }
}

/// `Σ_{m1} C^{j1 j2 j}_{m1, m−m1, m} C^{j1 j2 j'}_{m1, m−m1, m}` over valid `m1`.
fn cg_overlap(j1: HalfInt, j2: HalfInt, j: HalfInt, jp: HalfInt, m: HalfInt) -> Result<RadicalSum> {
    let mut acc = RadicalSum::zero();
    for t1 in (-j1.twice()..=j1.twice()).step_by(2) {
        let m1 = HalfInt::from_twice(t1);
        let m2 = HalfInt::from_twice(m.twice() - t1);
        if m2.twice().abs() > j2.twice() || (j2.twice() - m2.twice()) % 2 != 0 {
            continue;
        }
        acc += &(&cg_classical(j1, j2, j, m1, m2, m)? * &cg_classical(j1, j2, jp, m1, m2, m)?);
    }
    Ok(acc)
}

fn cg_suite(r: &mut Runner, o: &VerifyOptions) {
    for n in 2..=o.limit(4) {
        r.check(format!("golden coupled table N={n}"), || {
            let table = golden_table(n)?;
            let states = couple_exact(n, o.cg_sign, true)?;
            if states.len() != table.rows().len() {
                return Ok(Outcome::Fail(format!("{} states, table has {}", states.len(), table.rows().len())));
            }
            let mut bad = Vec::new();
            for (s, row) in states.iter().zip(table.rows()) {
                if s.name() != row.name || !prop(&s.state, &row.state)? {
                    bad.push(row.name.clone());
                }
            }
            Ok(if bad.is_empty() { Outcome::Pass } else { Outcome::Fail(format!("rows differ: {}", bad.join(", "))) })
        });
    }
    if o.limit(4) >= 4 {
        r.check("golden W state N=4", || {
            let w = golden_w4()?;
            let row = w.get("W").ok_or_else(|| Error::Format("W row missing".into()))?;
            Ok((prop(&w_state_h(4)?, row)? && prop(&h_dicke(4, 1)?, row)?).into())
        });
    }
    r.check("golden normalization prefactors", || {
        let mut bad = Vec::new();
        for p in golden_prefactors()? {
            let table = golden_table(p.n_sites)?;
            let state = table.get(&p.name).ok_or_else(|| Error::Format(format!("{} missing", p.name)))?;
            if state.norm_squared() != p.norm_squared {
                bad.push(format!("{} (N={})", p.name, p.n_sites));
            }
        }
        Ok(if bad.is_empty() { Outcome::Pass } else { Outcome::Fail(bad.join(", ")) })
    });
    r.check("classical CG orthogonality j1, j2 <= 3/2", || {
        for t1 in 1..=3 {
            for t2 in 1..=3 {
                let (j1, j2) = (HalfInt::from_twice(t1), HalfInt::from_twice(t2));
                let js: Vec<i32> = ((t1 - t2).abs()..=t1 + t2).step_by(2).collect();
                for &tj in &js {
                    for &tjp in &js {
                        for tm in (-tj.min(tjp)..=tj.min(tjp)).step_by(2) {
                            let s = cg_overlap(
                                j1,
                                j2,
                                HalfInt::from_twice(tj),
                                HalfInt::from_twice(tjp),
                                HalfInt::from_twice(tm),
                            )?;
                            let expected = if tj == tjp { RadicalSum::one() } else { RadicalSum::zero() };
                            if s != expected {
                                return Ok(Outcome::Fail(format!("2j1={t1} 2j2={t2} 2j={tj} 2j'={tjp} 2m={tm}: {s}")));
                            }
                        }
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    });
    for n in 1..=o.limit(6) {
        r.check(format!("coupled states are H eigenvectors N={n}"), || {
            let (hgen, _) = h_hgen_zplus(n)?;
            for s in exact_basis(n, DeformationTag::HExact)? {
                if hgen.apply(&s.state)? != s.state.scale(&HScalar::from_integer(s.twice_m.into())) {
                    return Ok(Outcome::Fail(s.name()));
                }
            }
            Ok(Outcome::Pass)
        });
        r.check(format!("Z+ ladder along the D path N={n}"), || {
            let zplus = h_zplus(n)?;
            let basis = exact_basis(n, DeformationTag::HExact)?;
            let n = n as i32;
            for tm in (-n..=n).step_by(2) {
                let s = find_state(&basis, 'D', tm).ok_or_else(|| Error::Format(format!("D{tm} missing")))?;
                let raised = zplus.apply(&s.state)?;
                let ok = match find_state(&basis, 'D', tm + 2) {
                    Some(next) => !raised.is_zero() && prop(&raised, &next.state)?,
                    None => raised.is_zero(),
                };
                if !ok {
                    return Ok(Outcome::Fail(format!("D{tm}")));
                }
            }
            Ok(Outcome::Pass)
        });
    }
    for n in 1..=o.limit(5) {
        r.check(format!("h=0 coupled basis is classical N={n}"), || {
            let deformed = exact_basis(n, DeformationTag::HExact)?;
            let classical = exact_basis(n, DeformationTag::Undeformed)?;
            for (d, c) in deformed.iter().zip(&classical) {
                if d.name() != c.name() || !prop(&d.state.constant_part(), &c.state)? {
                    return Ok(Outcome::Fail(d.name()));
                }
            }
            Ok(Outcome::Pass)
        });
        r.check(format!("q=1 coupled basis is classical N={n}"), || {
            let deformed = numeric_basis(n, QValue::undeformed())?;
            let classical = exact_basis(n, DeformationTag::Undeformed)?;
            let mut worst = 0.0f64;
            for (d, c) in deformed.iter().zip(&classical) {
                worst = worst.max(d.state.normalized()?.max_abs_diff(&c.state.normalize_at(0.0)?));
            }
            Ok(within(worst, 1e-12))
        });
    }
    if o.limit(2) >= 2 {
        r.check("two-qubit h -> -h reversal symmetry", || {
            let t = golden_table(2)?;
            let get = |name: &str| t.get(name).ok_or_else(|| Error::Format(format!("{name} missing")));
            Ok((reversal_symmetry_check(get("D-2")?, None, 1)? && reversal_symmetry_check(get("M0")?, None, -1)?)
                .into())
        });
    }
    for n in 1..=o.limit(4) {
        for q in Q_VALUES {
            r.check(format!("q-Casimir eigenvalue q={q} N={n}"), || {
                let q = qvalue(q)?;
                let c = qcasimir(n, &q)?;
                let mut worst = 0.0f64;
                for s in numeric_basis(n, q)? {
                    let j = s.j().to_f64();
                    let v = nalgebra::DVector::from_vec(s.state.normalized()?.to_dense());
                    let expected = q_number(j, &q) * q_number(j + 1.0, &q);
                    worst = worst.max((&c * &v - &v * expected).amax());
                }
                Ok(within(worst, 1e-9))
            });
        }
    }
}

fn dicke_suite(r: &mut Runner, o: &VerifyOptions) {
    for n in 2..=o.limit(8) {
        r.check(format!("H eigenvalue 2k-N of h Dicke states N={n}"), || {
            let (hgen, _) = h_hgen_zplus(n)?;
            for k in 0..=n {
                let s = h_dicke(n, k)?;
                let m = 2 * k as i64 - n as i64;
                if hgen.apply(&s)? != s.scale(&HScalar::from_integer(m)) {
                    return Ok(Outcome::Fail(format!("k={k}")));
                }
            }
            Ok(Outcome::Pass)
        });
        r.check(format!("N+1 raisings annihilate the lowest weight N={n}"), || {
            let mut s = h_lowest_weight(n)?;
            for _ in 0..=n {
                s = apply_h_zplus_simplified(&s);
            }
            Ok(s.is_zero().into())
        });
        r.check(format!("h=0 limit is the classical Dicke state N={n}"), || {
            for k in 0..=n {
                let ratio = proportional(&h_dicke(n, k)?.constant_part(), &dicke_classical(n, k)?)?;
                let positive = ratio.is_some_and(|r| r.evaluate(0.0) > 0.0);
                if !positive {
                    return Ok(Outcome::Fail(format!("k={k}")));
                }
            }
            Ok(Outcome::Pass)
        });
    }
    for n in 2..=o.limit(4) {
        r.check(format!("ladder route matches coupling route N={n}"), || {
            let basis = exact_basis(n, DeformationTag::HExact)?;
            for k in 0..=n {
                let tm = 2 * k as i32 - n as i32;
                let d = find_state(&basis, 'D', tm).ok_or_else(|| Error::Format(format!("D{tm} missing")))?;
                if !prop(&h_dicke(n, k)?, &d.state)? {
                    return Ok(Outcome::Fail(format!("k={k}")));
                }
            }
            Ok(Outcome::Pass)
        });
    }
    for n in 2..=o.limit(MAX_ORACLE_SITES) {
        r.check(format!("lowest weight matches the Z- oracle N={n}"), || {
            Ok(prop(&lowest_weight_oracle(n)?, &h_lowest_weight(n)?)?.into())
        });
        r.check(format!("Z- annihilates the lowest weight N={n}"), || {
            Ok(h_images(n)?.zminus.apply(&h_lowest_weight(n)?)?.is_zero().into())
        });
    }
    for n in 2..=o.limit(8) {
        r.check(format!("W formula matches the ladder N={n}"), || Ok(prop(&w_state_h(n)?, &h_dicke(n, 1)?)?.into()));
        r.check(format!("truncated W formula matches the ladder N={n}"), || {
            let ok = prop(&w_state_h_truncated(n)?, &h_dicke(n, 1)?)?;
            Ok(match (ok, n) {
                (true, _) => Outcome::Pass,
                (false, 2..=4) => Outcome::Fail(String::new()),
                (false, _) => Outcome::Known("terms of order h^4 and above are missing".into()),
            })
        });
    }
    for n in 1..=o.limit(6) {
        for q in Q_VALUES {
            r.check(format!("q Dicke explicit vs ladders q={q} N={n}"), || {
                let q = qvalue(q)?;
                let mut worst = 0.0f64;
                for k in 0..=n {
                    let e = qdicke_explicit(n, k, &q)?;
                    for dir in [LadderDirection::Raise, LadderDirection::Lower] {
                        worst = worst.max(e.max_abs_diff(&qdicke_ladder(n, k, &q, dir)?));
                    }
                }
                Ok(within(worst, 1e-10))
            });
        }
    }
}

/// Every `(r, i)` with `i ≤ |P|` and `r ≤ |P| − i`.
fn identity_all(values: &[i64]) -> Option<(usize, usize)> {
    let n = values.len();
    (0..=n).flat_map(|i| (0..=n - i).map(move |r| (r, i))).find(|&(r, i)| !check_sym_identity(values, r, i))
}

fn identity_suite(r: &mut Runner, o: &VerifyOptions) {
    r.check("200 random sets, |P| <= 8, all (r, i)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        for _ in 0..200 {
            let size = rng.gen_range(1..=8);
            let values: Vec<i64> = (0..size).map(|_| rng.gen_range(-50..=50)).collect();
            if let Some((rr, i)) = identity_all(&values) {
                return Ok(Outcome::Fail(format!("P={values:?} r={rr} i={i}")));
            }
        }
        Ok(Outcome::Pass)
    });
    for n in 1..=o.limit(11) {
        r.check(format!("f-value set N={n}, all (r, i)"), || {
            let values: Vec<i64> = (1..=n).map(|k| f_value(k, n)).collect();
            Ok(match identity_all(&values) {
                None => Outcome::Pass,
                Some((rr, i)) => Outcome::Fail(format!("r={rr} i={i}")),
            })
        });
    }
}

fn golden_state(n: usize, name: &str, h: f64) -> Result<NumericState> {
    golden_table(n)?.get(name).ok_or_else(|| Error::Format(format!("{name} missing")))?.normalize_at(h)
}

fn random_unitary(rng: &mut ChaCha8Rng) -> Unitary2 {
    let mut a = || rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    euler_unitary(a(), a(), a(), a())
}

fn decomp_suite(r: &mut Runner, o: &VerifyOptions) {
    for h in H_VALUES {
        r.check(format!("Schmidt closed forms h={h}"), || {
            let mut worst = 0.0f64;
            for (name, expected) in [("D-2", schmidt_d_minus2(h)), ("M0", schmidt_m0(h))] {
                let s = schmidt2(&golden_state(2, name, h)?)?;
                if s.rank(1e-12) != 2 {
                    return Ok(Outcome::Fail(format!("{name} has rank {}", s.rank(1e-12))));
                }
                for (x, y) in s.coefficients.iter().zip(expected) {
                    worst = worst.max((x - y).abs());
                }
            }
            Ok(within(worst, 1e-10))
        });
        if sign_singular(h) {
            continue;
        }
        r.check(format!("Acin closed forms h={h}"), || {
            let mut worst = 0.0f64;
            for name in ACIN_STATES {
                let (lambdas, phi) =
                    acin_expected(name, h).ok_or_else(|| Error::Format(format!("{name} has no reference")))?;
                let a = acin3(&golden_state(3, name, h)?)?;
                for (x, y) in a.lambdas.iter().zip(lambdas) {
                    worst = worst.max((x - y).abs());
                }
                worst = worst.max((a.phi - phi).abs());
            }
            Ok(within(worst, 1e-8))
        });
    }
    r.check("Schmidt of a product state is (1, 0)", || {
        let s = schmidt2(&NumericState::basis(BasisState::all_up(2)?, 1.0))?;
        Ok(within((s.coefficients[0] - 1.0).abs().max(s.coefficients[1].abs()), 1e-15))
    });
    r.check("density matrices of the golden states", || {
        for n in 2..=4 {
            for row in golden_table(n)?.rows() {
                for h in H_VALUES {
                    density(&row.state.normalize_at(h)?)?.validate()?;
                }
            }
        }
        Ok(Outcome::Pass)
    });
    r.check("Schmidt coefficients are local-unitary invariant", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ 2);
        let mut worst = 0.0f64;
        for h in H_VALUES {
            for name in ["D-2", "D0", "M0"] {
                let psi = to_complex(&golden_state(2, name, h)?);
                let base = schmidt2_complex(&psi)?;
                for _ in 0..10 {
                    let (u, v) = (random_unitary(&mut rng), random_unitary(&mut rng));
                    let moved = schmidt2_complex(&apply_local(&psi, [&u, &v]))?;
                    for (x, y) in base.coefficients.iter().zip(moved.coefficients) {
                        worst = worst.max((x - y).abs());
                    }
                }
            }
        }
        Ok(within(worst, 1e-10))
    });
    r.check("Acin spectrum is local-unitary invariant", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ 3);
        let mut worst = 0.0f64;
        for h in H_VALUES {
            for name in ACIN_STATES {
                let psi = to_complex(&golden_state(3, name, h)?);
                let base = acin3_complex(&psi)?;
                for _ in 0..10 {
                    let us = [random_unitary(&mut rng), random_unitary(&mut rng), random_unitary(&mut rng)];
                    let moved = acin3_complex(&apply_local(&psi, [&us[0], &us[1], &us[2]]))?;
                    for (x, y) in base.lambdas.iter().zip(moved.lambdas) {
                        worst = worst.max((x - y).abs());
                    }
                }
            }
        }
        Ok(within(worst, 1e-8))
    });
}
