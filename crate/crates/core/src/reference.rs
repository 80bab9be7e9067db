//! Closed-form reference values for the decompositions of the two- and
//! three-qubit coupled states, used as independent oracles.

use std::f64::consts::PI;

pub const H_VALUES: [f64; 3] = [0.3, 0.7, 1.5];

/// `d± = √2·√(4 + h² ± h√(4 + h²))`.
pub fn d_pm(h: f64) -> (f64, f64) {
    let r = (4.0 + h * h).sqrt();
    (2f64.sqrt() * (4.0 + h * h + h * r).sqrt(), 2f64.sqrt() * (4.0 + h * h - h * r).sqrt())
}

/// Schmidt coefficients of the two-qubit lowest-weight triplet.
pub fn schmidt_d_minus2(h: f64) -> [f64; 2] {
    let a = (16.0 + 24.0 * h * h + h.powi(4)).sqrt();
    let den = 2.0 * (4.0 + h * h);
    [(a - h * h + 4.0) / den, (a + h * h - 4.0) / den]
}

/// Schmidt coefficients of the two-qubit deformed singlet.
pub fn schmidt_m0(h: f64) -> [f64; 2] {
    let (dp, dm) = d_pm(h);
    let s = (h * h + 2.0).sqrt();
    [dp / dm / s, dm / dp / s]
}

fn phase_from_sign(x: f64) -> f64 {
    if x > 0.0 {
        0.0
    } else {
        PI
    }
}

/// Acín coefficients `(λ₀..λ₄)` and `φ` of the three-qubit coupled states.
pub fn acin_expected(name: &str, h: f64) -> Option<([f64; 5], f64)> {
    let h2 = h * h;
    let h4 = h2 * h2;
    let (dp, dm) = d_pm(h);
    let out = match name {
        "V1" | "V-1" => {
            let s = (h2 + 2.0).sqrt();
            ([dp / dm / s, 0.0, 0.0, dm / dp / s, 0.0], 0.0)
        }
        "M1" => {
            let s = (9.0 * h2 + 6.0).sqrt();
            ([1.0 / s, 3.0 * h.abs() / s, 2.0 / s, 1.0 / s, 0.0], 0.0)
        }
        "M-1" => {
            let big = ((h2 + 1.0) * (4.0 * h2 + 1.0) * (5.0 * h2 + 6.0) * (16.0 * h2 + 1.0)).sqrt();
            let root = ((4.0 * h2 + 1.0) / ((h2 + 1.0) * (5.0 * h2 + 6.0) * (16.0 * h2 + 1.0))).sqrt();
            (
                [
                    ((h2 + 1.0) * (16.0 * h2 + 1.0) / (20.0 * h4 + 29.0 * h2 + 6.0)).sqrt(),
                    h.abs() * (10.0 * h2 + 7.0) / big,
                    (-8.0 * h4 + 6.0 * h2 + 2.0).abs() / big,
                    root,
                    4.0 * h.abs() * root,
                ],
                phase_from_sign(-(1.0 + 3.0 * h2 - 4.0 * h4)),
            )
        }
        "D-3" => {
            let den = ((3.0 * h2 + 4.0) * (19.0 * h4 + 32.0 * h2 + 16.0)).sqrt();
            (
                [
                    ((9.0 * h2 + 12.0) / (19.0 * h4 + 32.0 * h2 + 16.0)).sqrt() * h.abs(),
                    2.0 * (h2 + 4.0) / den,
                    3f64.sqrt() * h.abs() * (4.0 - 3.0 * h2).abs() / den,
                    3f64.sqrt() * (h2 + 4.0) * h.abs() / den,
                    12.0 * h2 / den,
                ],
                phase_from_sign(4.0 - 3.0 * h2),
            )
        }
        "D-1" => {
            let den = ((7.0 * h2 + 4.0) * (9.0 * h4 + 32.0 * h2 + 48.0)).sqrt();
            let s7 = 7f64.sqrt();
            (
                [
                    2.0 * ((7.0 * h2 + 4.0) / (9.0 * h4 + 32.0 * h2 + 48.0)).sqrt(),
                    s7 * h.abs() * (4.0 - 3.0 * h2).abs() / den,
                    2.0 * (4.0 - 7.0 * h2).abs() / den,
                    2.0 * (4.0 - 3.0 * h2).abs() / den,
                    8.0 * ((11.0 * s7 + 28.0) * h2 * h + 4.0 * s7 * h).abs() / (((4.0 * s7 + 11.0) * h2 + 4.0) * den),
                ],
                phase_from_sign(7.0 * h2 - 4.0),
            )
        }
        _ => return None,
    };
    Some(out)
}

/// States with closed-form Acín coefficients.
pub const ACIN_STATES: [&str; 6] = ["M-1", "M1", "V-1", "V1", "D-3", "D-1"];

/// `h` values where a sign in the closed forms flips.
pub fn sign_singular(h: f64) -> bool {
    let h2 = h * h;
    [3.0 * h2 - 4.0, 7.0 * h2 - 4.0, -4.0 * h2 * h2 + 3.0 * h2 + 1.0].iter().any(|x| x.abs() < 1e-9)
}
