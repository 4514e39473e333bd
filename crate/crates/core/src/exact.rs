//! Exact rational helpers on top of `num-rational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// `p / q`, reduced.
///
/// # Panics
/// If `q` is zero.
pub fn frac<P: Into<BigInt>, Q: Into<BigInt>>(p: P, q: Q) -> Rational {
    Rational::new(p.into(), q.into())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Square root when `r` is the square of a rational, `None` otherwise.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let root_of = |x: &BigInt| {
        let s = x.sqrt();
        (&s * &s == *x).then_some(s)
    };
    Some(Rational::new(root_of(r.numer())?, root_of(r.denom())?))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Inverse of [`format`]. Accepts `"p"` and `"p/q"` with `q != 0`.
pub fn parse(text: &str) -> Option<Rational> {
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<BigInt>().ok()?,
            q.trim().parse::<BigInt>().ok()?,
        ),
        None => (text.trim().parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    (!q.is_zero()).then(|| Rational::new(p, q))
}

/// Kahan-Babuska (Neumaier) compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::default();
        iter.into_iter().for_each(|x| acc.add(x));
        acc
    }
}

/// `|a - b| <= tol * max(|a|, |b|)`, with exact equality always accepted.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}
