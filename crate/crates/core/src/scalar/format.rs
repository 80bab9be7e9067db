use std::fmt;

use num_traits::{One, Signed};

use super::Rational;

/// Writes `Σ c·√d·h^k` in the canonical exact-amplitude grammar, e.g.
/// `(-3/2)*h + (1/2)*sqrt(2)*h^3`. Terms are joined with ` + `; the sign
/// lives on the coefficient.
pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (Rational, u64, u32)>,
{
    let mut first = true;
    for (coefficient, radicand, power) in terms {
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        write_term(f, &coefficient, radicand, power)?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Rational, radicand: u64, power: u32) -> fmt::Result {
    let mut factors: Vec<String> = Vec::new();
    if radicand != 1 {
        factors.push(format!("sqrt({radicand})"));
    }
    match power {
        0 => {}
        1 => factors.push("h".to_string()),
        k => factors.push(format!("h^{k}")),
    }
    let coefficient = if c.is_integer() { c.numer().to_string() } else { format!("({}/{})", c.numer(), c.denom()) };
    if factors.is_empty() {
        return f.write_str(&coefficient);
    }
    if c.is_one() {
        write!(f, "{}", factors.join("*"))
    } else if c.is_negative() && c.abs().is_one() {
        write!(f, "-{}", factors.join("*"))
    } else {
        write!(f, "{}*{}", coefficient, factors.join("*"))
    }
}
