//! Closed forms for the complements of five circulant families.
//!
//! | family | base graph | complement regularity |
//! |--------|------------|-----------------------|
//! | [`FamilyId::DoubleLoopHalf`] | `C_{2k}(1, k)` | `n - 4` |
//! | [`FamilyId::DoubleLoopGen`]  | `C_n(1, a)`, `2 <= a < n/2` | `n - 5` |
//! | [`FamilyId::C7Special`]      | `C_7(1, 2)`, `C_7(1, 3)` | `2` |
//! | [`FamilyId::Mc2h`]           | `C_{2^h}(1, 2, ..., 2^{h-1})` | `n - 2h` |
//! | [`FamilyId::McGen`]          | `C_{m^h}(1, m, ..., m^{h-1})`, `m >= 3` | `n - 2h - 1` |
//! | [`FamilyId::Mc23`]           | `C_8(1, 2, 4)` | `2` |
//!
//! Outside the two special families, every complement distance is 1 except
//! the base graph's own jumps, which sit at distance 2. Each family has an
//! effective domain on which that pattern is asserted; see
//! [`FamilyPoint::domain`].

use std::fmt;

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::exact::{frac, int, Rational};
use crate::indices::{EdgeIndices, IndexReport, IndexValue, PairIndices};
use crate::metrics::DistanceVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    DoubleLoopHalf,
    DoubleLoopGen,
    C7Special,
    Mc2h,
    McGen,
    Mc23,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::DoubleLoopHalf,
        FamilyId::DoubleLoopGen,
        FamilyId::C7Special,
        FamilyId::Mc2h,
        FamilyId::McGen,
        FamilyId::Mc23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::DoubleLoopHalf => "double-loop-half",
            FamilyId::DoubleLoopGen => "double-loop-gen",
            FamilyId::C7Special => "c7",
            FamilyId::Mc2h => "mc-2h",
            FamilyId::McGen => "mc-gen",
            FamilyId::Mc23 => "mc-23",
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyId> {
        FamilyId::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One member of a family, identified by its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyPoint {
    /// Complement of `C_{2k}(1, k)`.
    DoubleLoopHalf { k: usize },
    /// Complement of `C_n(1, a)`.
    DoubleLoopGen { n: usize, a: usize },
    /// Complement of `C_7(1, a)`.
    C7Special { a: usize },
    /// Complement of `C_{2^h}(1, 2, ..., 2^{h-1})`.
    Mc2h { h: u32 },
    /// Complement of `C_{m^h}(1, m, ..., m^{h-1})`.
    McGen { m: usize, h: u32 },
    /// Complement of `C_8(1, 2, 4)`.
    Mc23,
}

/// Where a parameter point sits relative to the closed form's reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainStatus {
    InDomain,
    KnownException,
    OutOfDomain,
}

impl DomainStatus {
    pub fn name(self) -> &'static str {
        match self {
            DomainStatus::InDomain => "in_domain",
            DomainStatus::KnownException => "known_exception",
            DomainStatus::OutOfDomain => "out_of_domain",
        }
    }
}

impl fmt::Display for DomainStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn pow(m: usize, h: u32) -> Option<usize> {
    m.checked_pow(h)
}

impl FamilyPoint {
    pub fn family(&self) -> FamilyId {
        match self {
            FamilyPoint::DoubleLoopHalf { .. } => FamilyId::DoubleLoopHalf,
            FamilyPoint::DoubleLoopGen { .. } => FamilyId::DoubleLoopGen,
            FamilyPoint::C7Special { .. } => FamilyId::C7Special,
            FamilyPoint::Mc2h { .. } => FamilyId::Mc2h,
            FamilyPoint::McGen { .. } => FamilyId::McGen,
            FamilyPoint::Mc23 => FamilyId::Mc23,
        }
    }

    /// Number of vertices, or `None` if `m^h` overflows.
    pub fn order(&self) -> Option<usize> {
        match *self {
            FamilyPoint::DoubleLoopHalf { k } => k.checked_mul(2),
            FamilyPoint::DoubleLoopGen { n, .. } => Some(n),
            FamilyPoint::C7Special { .. } => Some(7),
            FamilyPoint::Mc2h { h } => pow(2, h),
            FamilyPoint::McGen { m, h } => pow(m, h),
            FamilyPoint::Mc23 => Some(8),
        }
    }

    /// Parameter list such as `n=10,a=3`.
    pub fn label(&self) -> String {
        match *self {
            FamilyPoint::DoubleLoopHalf { k } => format!("k={k}"),
            FamilyPoint::DoubleLoopGen { n, a } => format!("n={n},a={a}"),
            FamilyPoint::C7Special { a } => format!("a={a}"),
            FamilyPoint::Mc2h { h } => format!("h={h}"),
            FamilyPoint::McGen { m, h } => format!("m={m},h={h}"),
            FamilyPoint::Mc23 => "m=2,h=3".to_string(),
        }
    }

    /// The graph whose complement the closed forms describe.
    pub fn base_spec(&self) -> Result<CirculantSpec> {
        match *self {
            FamilyPoint::DoubleLoopHalf { k } => CirculantSpec::double_loop(2 * k, k),
            FamilyPoint::DoubleLoopGen { n, a } => CirculantSpec::double_loop(n, a),
            FamilyPoint::C7Special { a } => CirculantSpec::double_loop(7, a),
            FamilyPoint::Mc2h { h } => multiplicative(2, h),
            FamilyPoint::McGen { m, h } => multiplicative(m, h),
            FamilyPoint::Mc23 => multiplicative(2, 3),
        }
    }

    /// Effective domain of the closed form.
    ///
    /// * `C_{2k}(1, k)`: `k >= 4`. For `k = 2` the complement has no edges
    ///   and for `k = 3` it is two disjoint triangles.
    /// * `C_n(1, a)`: `n >= 8`, `2 <= a < n/2`, with `(8, 3)` a known
    ///   exception (disconnected complement).
    /// * `C_7(1, a)`: `a` in `{2, 3}`.
    /// * `m = 2`: `h >= 4`; `h = 3` is the separate `C_8(1, 2, 4)` family.
    /// * `m >= 3`: `m >= 5` with any `h >= 1`, and `m` in `{3, 4}` with
    ///   `h >= 2`.
    pub fn domain(&self) -> DomainStatus {
        use DomainStatus::*;
        match *self {
            FamilyPoint::DoubleLoopHalf { k } if k >= 4 => InDomain,
            FamilyPoint::DoubleLoopGen { n: 8, a: 3 } => KnownException,
            FamilyPoint::DoubleLoopGen { n, a } if n >= 8 && a >= 2 && 2 * a < n => InDomain,
            FamilyPoint::C7Special { a: 2 | 3 } => InDomain,
            FamilyPoint::Mc2h { h } if h >= 4 => InDomain,
            FamilyPoint::McGen { m, h } if h >= 1 && (m >= 5 || (m >= 3 && h >= 2)) => InDomain,
            FamilyPoint::Mc23 => InDomain,
            _ => OutOfDomain,
        }
    }

    /// Why the point is not in the domain, if it is not.
    pub fn domain_note(&self) -> Option<String> {
        let why = match *self {
            _ if self.domain() == DomainStatus::InDomain => return None,
            FamilyPoint::DoubleLoopGen { n: 8, a: 3 } => "known exception to the C_n(1, a) pattern",
            FamilyPoint::DoubleLoopHalf { .. } => "requires k >= 4",
            FamilyPoint::DoubleLoopGen { n, a } if a < 2 || 2 * a >= n => "requires 2 <= a < n/2",
            FamilyPoint::DoubleLoopGen { .. } => "requires n >= 8",
            FamilyPoint::C7Special { .. } => "requires a in {2, 3}",
            FamilyPoint::Mc2h { h: 3 } => "C_8(1,2,4) has its own closed form",
            FamilyPoint::Mc2h { .. } => "requires h >= 4",
            FamilyPoint::McGen { m: 2, .. } => "m = 2 belongs to the mc-2h family",
            FamilyPoint::McGen { .. } => "requires m >= 5, or m in {3, 4} with h >= 2",
            FamilyPoint::Mc23 => unreachable!(),
        };
        Some(why.to_string())
    }
}

impl fmt::Display for FamilyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.family(), self.label())
    }
}

fn multiplicative(m: usize, h: u32) -> Result<CirculantSpec> {
    if m < 2 || h == 0 || pow(m, h).is_none() {
        return Err(Error::OutOfDomain(format!(
            "multiplicative circulant m={m}, h={h}"
        )));
    }
    CirculantSpec::multiplicative(m, h)
}

/// Vertices at distance 2 from 0 in the complement: the jumps of the base
/// graph and their negatives.
fn far_set(point: &FamilyPoint, n: usize) -> Vec<usize> {
    let mut near: Vec<usize> = match *point {
        FamilyPoint::DoubleLoopHalf { k } => vec![1, k],
        FamilyPoint::DoubleLoopGen { a, .. } => vec![1, a],
        FamilyPoint::Mc2h { h } => (0..h).map(|i| 1usize << i).collect(),
        FamilyPoint::McGen { m, h } => (0..h).map(|i| m.pow(i)).collect(),
        _ => unreachable!("special families have explicit vectors"),
    };
    let mirrored: Vec<usize> = near.iter().map(|&s| n - s).collect();
    near.extend(mirrored);
    near
}

/// The closed-form distance row, evaluated without checking the domain.
pub fn distance_vector_as_stated(point: &FamilyPoint) -> Result<DistanceVector> {
    let n = point
        .order()
        .filter(|&n| n >= 2)
        .ok_or_else(|| Error::OutOfDomain(point.to_string()))?;
    let d = match *point {
        FamilyPoint::C7Special { a: 2 } => vec![0, 2, 3, 1, 1, 3, 2],
        FamilyPoint::C7Special { a: 3 } => vec![0, 3, 1, 2, 2, 1, 3],
        FamilyPoint::C7Special { .. } => return Err(Error::OutOfDomain(point.to_string())),
        FamilyPoint::Mc23 => vec![0, 3, 2, 1, 4, 1, 2, 3],
        _ => {
            let mut d = vec![1; n];
            d[0] = 0;
            for v in far_set(point, n) {
                if v % n != 0 {
                    d[v % n] = 2;
                }
            }
            d
        }
    };
    DistanceVector::new(d)
}

fn require_domain(point: &FamilyPoint) -> Result<()> {
    match point.domain() {
        DomainStatus::InDomain => Ok(()),
        DomainStatus::KnownException => Err(Error::KnownException(point.to_string())),
        DomainStatus::OutOfDomain => Err(Error::OutOfDomain(point.to_string())),
    }
}

/// Predicted first row of the complement's distance matrix.
pub fn cf_distance_vector(point: &FamilyPoint) -> Result<DistanceVector> {
    require_domain(point)?;
    distance_vector_as_stated(point)
}

/// Every quantity the closed forms predict for one family member.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub point: FamilyPoint,
    pub order: usize,
    pub regularity: usize,
    pub distance_vector: DistanceVector,
    pub rho: u64,
    pub rs: Rational,
    pub xi: u64,
    pub pi_lower: Rational,
    pub pi_upper: i64,
    pub indices: IndexReport,
}

impl Prediction {
    /// Identities tying the fields together: `rho` and `rs` are the row sums
    /// of the distances and their reciprocals, `xi = rho - (n - 1)`,
    /// `W = n rho / 2` and `H = n rs / 2`.
    pub fn consistency(&self) -> Vec<(&'static str, bool)> {
        let n = self.order as u64;
        vec![
            (
                "rho = sum d",
                self.rho == self.distance_vector.transmission(),
            ),
            (
                "rs = sum 1/d",
                self.rs == self.distance_vector.reciprocal_transmission(),
            ),
            ("xi = rho - (n-1)", self.xi + (n - 1) == self.rho),
            (
                "W = n rho / 2",
                self.indices.pair.wiener == int(n) * int(self.rho) / int(2),
            ),
            (
                "H = n rs / 2",
                self.indices.pair.harary == int(n) * &self.rs / int(2),
            ),
        ]
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency().iter().all(|(_, ok)| *ok)
    }
}

/// Scalar closed forms, before assembly into a [`Prediction`].
struct Forms {
    r: usize,
    rho: u64,
    rs: Rational,
    xi: u64,
    pi_lower: Rational,
    pi_upper: i64,
    w: Rational,
    ww: Rational,
    h: Rational,
    s: Rational,
    g: Rational,
    ha: Rational,
    hm: Rational,
    /// `T_GA = T_AG` and `RT_GA = RT_AG`.
    ga: Rational,
    t_sc: f64,
    t_abc: f64,
    t_az: Rational,
    rt_sc: f64,
    rt_abc: f64,
    rt_az: Rational,
}

fn q(p: i64) -> Rational {
    int(p)
}

/// Product of the factors over `d`, in big integers.
fn pq(factors: &[i64], d: i64) -> Rational {
    factors.iter().fold(int(1), |acc, &x| acc * int(x)) / int(d)
}

fn cube(x: Rational) -> Rational {
    &x * &x * &x
}

fn sixth(x: Rational) -> Rational {
    let c = cube(x);
    &c * &c
}

/// `n r x^6 / (c y^3)`, the shape of every `AZ` form.
fn az(n: i64, r: i64, x: i64, c: i64, y: i64) -> Rational {
    pq(&[n, r], 1) * sixth(q(x)) / (q(c) * cube(q(y)))
}

fn half_forms(n: i64) -> Forms {
    let nf = n as f64;
    let r = n - 4;
    Forms {
        r: r as usize,
        rho: (n + 2) as u64,
        rs: frac(2 * n - 5, 2),
        xi: 3,
        pi_lower: frac(2 * (n + 2), r),
        pi_upper: 11,
        w: pq(&[n, n + 2], 2),
        s: pq(&[n, r, n + 2], 1),
        g: pq(&[n, n + 2, r, r], 2),
        ww: pq(&[n, n + 5], 2),
        h: pq(&[n, 2 * n - 5], 4),
        ha: pq(&[n, r, 2 * n - 5], 2),
        hm: pq(&[n, 2 * n - 5, r, r], 4),
        ga: pq(&[n, r], 2),
        t_sc: nf * (nf - 4.0) / (2.0 * 2f64.sqrt() * (nf + 2.0).sqrt()),
        t_abc: nf * (nf - 4.0) * (nf + 1.0).sqrt() / (2f64.sqrt() * (nf + 2.0)),
        t_az: az(n, r, n + 2, 16, n + 1),
        rt_sc: nf * (nf - 4.0) / (2.0 * (2.0 * nf - 5.0).sqrt()),
        rt_abc: nf * (nf - 4.0) * (2.0 * nf - 7.0).sqrt() / (2.0 * nf - 5.0),
        rt_az: az(n, r, 2 * n - 5, 128, 2 * n - 7),
    }
}

fn gen_forms(n: i64) -> Forms {
    let nf = n as f64;
    let r = n - 5;
    Forms {
        r: r as usize,
        rho: (n + 3) as u64,
        rs: q(n - 3),
        xi: 4,
        pi_lower: frac(2 * (n + 3), r),
        pi_upper: 14,
        w: pq(&[n, n + 3], 2),
        s: pq(&[n, r, n + 3], 1),
        g: pq(&[n, n + 3, r, r], 2),
        ww: pq(&[n, 2 * n + 14], 4),
        h: pq(&[n, n - 3], 2),
        ha: pq(&[n, r, n - 3], 1),
        hm: pq(&[n, n - 3, r, r], 2),
        ga: pq(&[n, r], 2),
        t_sc: nf * (nf - 5.0) / (2.0 * 2f64.sqrt() * (nf + 3.0).sqrt()),
        t_abc: nf * (nf - 5.0) * (nf + 2.0).sqrt() / (2f64.sqrt() * (nf + 3.0)),
        t_az: az(n, r, n + 3, 16, n + 2),
        rt_sc: nf * (nf - 5.0) / (2.0 * 2f64.sqrt() * (nf - 3.0).sqrt()),
        rt_abc: nf * (nf - 5.0) * (nf - 4.0).sqrt() / (2f64.sqrt() * (nf - 3.0)),
        rt_az: az(n, r, n - 3, 16, n - 4),
    }
}

fn c7_forms() -> Forms {
    Forms {
        r: 2,
        rho: 12,
        rs: frac(11, 3),
        xi: 6,
        pi_lower: q(12),
        pi_upper: 16,
        w: q(42),
        s: q(168),
        g: q(168),
        ww: q(70),
        h: frac(77, 6),
        ha: frac(154, 3),
        hm: frac(154, 3),
        ga: q(7),
        t_sc: 7.0 * 6f64.sqrt() / 12.0,
        t_abc: 7.0 * 22f64.sqrt() / 12.0,
        t_az: frac(2_612_736, 1_331),
        rt_sc: 7.0 * 66f64.sqrt() / 22.0,
        rt_abc: 28.0 * 3f64.sqrt() / 11.0,
        rt_az: frac(12_400_927, 110_592),
    }
}

fn mc23_forms() -> Forms {
    Forms {
        r: 2,
        rho: 16,
        rs: frac(47, 12),
        xi: 9,
        pi_lower: q(16),
        pi_upper: 21,
        w: q(64),
        s: q(256),
        g: q(256),
        ww: q(120),
        h: frac(47, 3),
        ha: frac(188, 3),
        hm: frac(188, 3),
        ga: q(8),
        t_sc: 2f64.sqrt(),
        t_abc: 30f64.sqrt() / 2.0,
        t_az: frac(16_777_216, 3_375),
        rt_sc: 8.0 * 282f64.sqrt() / 47.0,
        rt_abc: 16.0 * 210f64.sqrt() / 47.0,
        rt_az: frac(10_779_215_329i64, 74_088_000),
    }
}

fn mc2h_forms(n: i64, h: i64) -> Forms {
    let (nf, hf) = (n as f64, h as f64);
    let r = n - 2 * h;
    let rho = n + 2 * h - 2;
    // rs = (2n - 2h - 1) / 2
    let rs2 = 2 * n - 2 * h - 1;
    Forms {
        r: r as usize,
        rho: rho as u64,
        rs: frac(rs2, 2),
        xi: (2 * h - 1) as u64,
        pi_lower: frac(2 * rho, r),
        pi_upper: 6 * h - 1,
        w: pq(&[n, rho], 2),
        s: pq(&[n, r, rho], 1),
        g: pq(&[n, rho, r, r], 2),
        ww: pq(&[n, 2 * n + 8 * h - 6], 4),
        h: pq(&[n, rs2], 4),
        ha: pq(&[n, r, rs2], 2),
        hm: pq(&[n, rs2, r, r], 4),
        ga: pq(&[n, r], 2),
        t_sc: nf * (nf - 2.0 * hf) / (2.0 * 2f64.sqrt() * (nf + 2.0 * hf - 2.0).sqrt()),
        t_abc: nf * (nf - 2.0 * hf) * (nf + 2.0 * hf - 3.0).sqrt()
            / (2f64.sqrt() * (nf + 2.0 * hf - 2.0)),
        t_az: az(n, r, rho, 16, n + 2 * h - 3),
        rt_sc: nf * (nf - 2.0 * hf) / (2.0 * (2.0 * nf - 2.0 * hf - 1.0).sqrt()),
        rt_abc: nf * (nf - 2.0 * hf) * (2.0 * nf - 2.0 * hf - 3.0).sqrt()
            / (2.0 * nf - 2.0 * hf - 1.0),
        rt_az: az(n, r, rs2, 128, 2 * n - 2 * h - 3),
    }
}

fn mc_gen_forms(n: i64, h: i64) -> Forms {
    let (nf, hf) = (n as f64, h as f64);
    let r = n - 2 * h - 1;
    let rho = n + 2 * h - 1;
    Forms {
        r: r as usize,
        rho: rho as u64,
        rs: q(n - h - 1),
        xi: (2 * h) as u64,
        pi_lower: frac(2 * rho, r),
        pi_upper: 6 * h + 2,
        w: pq(&[n, rho], 2),
        s: pq(&[n, r, rho], 1),
        g: pq(&[n, rho, r, r], 2),
        ww: pq(&[n, n + 4 * h - 1], 2),
        h: pq(&[n, n - h - 1], 2),
        ha: pq(&[n, r, n - h - 1], 1),
        hm: pq(&[n, n - h - 1, r, r], 2),
        ga: pq(&[n, r], 2),
        t_sc: nf * (nf - 2.0 * hf - 1.0) / (2.0 * 2f64.sqrt() * (nf + 2.0 * hf - 1.0).sqrt()),
        t_abc: nf * (nf - 2.0 * hf - 1.0) * (nf / 2.0 + hf - 1.0).sqrt() / (nf + 2.0 * hf - 1.0),
        t_az: az(n, r, rho, 16, n + 2 * h - 2),
        rt_sc: nf * (nf - 2.0 * hf - 1.0) / (2.0 * 2f64.sqrt() * (nf - hf - 1.0).sqrt()),
        rt_abc: nf * (nf - 2.0 * hf - 1.0) * (nf - hf - 2.0).sqrt()
            / (2f64.sqrt() * (nf - hf - 1.0)),
        rt_az: az(n, r, n - h - 1, 16, n - h - 2),
    }
}

/// `RT_AZ` in its sign-flipped arrangement for the multiplicative families,
/// `n(2h-n)(1+2h-2n)^6 / (128(3+2h-2n)^3)` for `m = 2` and
/// `n(1+2h-n)(1+h-n)^6 / (16(2+h-n)^3)` for `m >= 3`. Both equal the
/// positive forms used in [`cf_prediction`].
pub fn signed_rt_az(point: &FamilyPoint) -> Option<Rational> {
    match *point {
        FamilyPoint::Mc2h { h } => {
            let (n, h) = (pow(2, h)? as i64, i64::from(h));
            Some(az(n, 2 * h - n, 1 + 2 * h - 2 * n, 128, 3 + 2 * h - 2 * n))
        }
        FamilyPoint::McGen { m, h } => {
            let (n, h) = (pow(m, h)? as i64, i64::from(h));
            Some(az(n, 1 + 2 * h - n, 1 + h - n, 16, 2 + h - n))
        }
        _ => None,
    }
}

/// All closed-form values for an in-domain point.
pub fn cf_prediction(point: &FamilyPoint) -> Result<Prediction> {
    let distance_vector = cf_distance_vector(point)?;
    let n = distance_vector.order();
    let ni = n as i64;
    let f = match *point {
        FamilyPoint::DoubleLoopHalf { .. } => half_forms(ni),
        FamilyPoint::DoubleLoopGen { .. } => gen_forms(ni),
        FamilyPoint::C7Special { .. } => c7_forms(),
        FamilyPoint::Mc2h { h } => mc2h_forms(ni, i64::from(h)),
        FamilyPoint::McGen { h, .. } => mc_gen_forms(ni, i64::from(h)),
        FamilyPoint::Mc23 => mc23_forms(),
    };
    let ga = || IndexValue::exact(f.ga.clone());
    let indices = IndexReport {
        pair: PairIndices {
            wiener: f.w,
            hyper_wiener: f.ww,
            harary: f.h,
            schultz: f.s,
            gutman: f.g,
            harary_additive: f.ha,
            harary_multiplicative: f.hm,
        },
        transmission: EdgeIndices {
            ga: ga(),
            ag: ga(),
            sc: IndexValue::approx(f.t_sc),
            abc: IndexValue::approx(f.t_abc),
            az: IndexValue::exact(f.t_az),
        },
        reciprocal: EdgeIndices {
            ga: ga(),
            ag: ga(),
            sc: IndexValue::approx(f.rt_sc),
            abc: IndexValue::approx(f.rt_abc),
            az: IndexValue::exact(f.rt_az),
        },
    };
    Ok(Prediction {
        point: *point,
        order: n,
        regularity: f.r,
        distance_vector,
        rho: f.rho,
        rs: f.rs,
        xi: f.xi,
        pi_lower: f.pi_lower,
        pi_upper: f.pi_upper,
        indices,
    })
}

/// Diameter of the base graph `C_{m^h}(1, m, ..., m^{h-1})`:
/// `(h(m-1)+1)/2` when `m` is even and `h` odd, `h(m-1)/2` otherwise.
pub fn tang_diameter(m: usize, h: u32) -> usize {
    let h = h as usize;
    if m.is_multiple_of(2) && h % 2 == 1 {
        (h * (m - 1)).div_ceil(2)
    } else {
        h * (m - 1) / 2
    }
}

/// `ceil((sqrt(2n - 1) - 1) / 2)`, a lower bound on the diameter of every
/// two-jump circulant of order `n`. Evaluated exactly as the least `t` with
/// `(2t + 1)^2 >= 2n - 1`.
pub fn yebra_lower_bound(n: usize) -> usize {
    let target = 2 * n as u128 - 1;
    let mut t = ((target as f64).sqrt() as u128).saturating_sub(1) / 2;
    while t > 0 && (2 * t - 1) * (2 * t - 1) >= target {
        t -= 1;
    }
    while (2 * t + 1) * (2 * t + 1) < target {
        t += 1;
    }
    t as usize
}

/// Diameter of `C_{2k}(1, k)`: `k/2` for even `k`, `(k+1)/2` for odd `k`.
pub fn half_double_loop_diameter(k: usize) -> usize {
    k.div_ceil(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_vector_examples() {
        let dv = cf_distance_vector(&FamilyPoint::DoubleLoopHalf { k: 4 }).unwrap();
        assert_eq!(dv.entries(), &[0, 2, 1, 1, 2, 1, 1, 2]);
        let dv = cf_distance_vector(&FamilyPoint::Mc23).unwrap();
        assert_eq!(dv.entries(), &[0, 3, 2, 1, 4, 1, 2, 3]);
        let dv = cf_distance_vector(&FamilyPoint::DoubleLoopGen { n: 10, a: 3 }).unwrap();
        assert_eq!(dv.entries(), &[0, 2, 1, 2, 1, 1, 1, 2, 1, 2]);
        let dv = cf_distance_vector(&FamilyPoint::McGen { m: 5, h: 2 }).unwrap();
        let twos: Vec<usize> = (0..25).filter(|&v| dv.get(v) == 2).collect();
        assert_eq!(twos, vec![1, 5, 20, 24]);
        let dv = cf_distance_vector(&FamilyPoint::Mc2h { h: 4 }).unwrap();
        let twos: Vec<usize> = (0..16).filter(|&v| dv.get(v) == 2).collect();
        assert_eq!(twos, vec![1, 2, 4, 8, 12, 14, 15]);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            cf_distance_vector(&FamilyPoint::DoubleLoopGen { n: 8, a: 3 }),
            Err(Error::KnownException(_))
        ));
        for p in [
            FamilyPoint::DoubleLoopHalf { k: 3 },
            FamilyPoint::DoubleLoopGen { n: 7, a: 2 },
            FamilyPoint::DoubleLoopGen { n: 10, a: 5 },
            FamilyPoint::C7Special { a: 1 },
            FamilyPoint::Mc2h { h: 3 },
            FamilyPoint::McGen { m: 4, h: 1 },
            FamilyPoint::McGen { m: 2, h: 5 },
        ] {
            assert!(
                matches!(cf_prediction(&p), Err(Error::OutOfDomain(_))),
                "{p}"
            );
            assert!(p.domain_note().is_some());
        }
        assert_eq!(
            FamilyPoint::McGen { m: 3, h: 2 }.domain(),
            DomainStatus::InDomain
        );
        assert_eq!(
            FamilyPoint::McGen { m: 5, h: 1 }.domain(),
            DomainStatus::InDomain
        );
    }

    #[test]
    fn prediction_examples() {
        let p = cf_prediction(&FamilyPoint::DoubleLoopHalf { k: 6 }).unwrap();
        assert_eq!((p.rho, p.xi, p.pi_upper), (14, 3, 11));
        assert_eq!(p.rs, frac(19, 2));
        assert_eq!(p.pi_lower, frac(28, 8));
        assert_eq!(p.indices.pair.wiener, int(84));

        let p = cf_prediction(&FamilyPoint::C7Special { a: 2 }).unwrap();
        assert_eq!((p.rho, p.xi), (12, 6));
        assert_eq!(p.indices.pair.wiener, int(42));
        assert_eq!(p.indices.transmission.az.exact, Some(frac(2612736, 1331)));

        let p = cf_prediction(&FamilyPoint::McGen { m: 5, h: 2 }).unwrap();
        assert_eq!((p.order, p.rho, p.xi), (25, 28, 4));
        assert_eq!(p.rs, int(22));
    }

    #[test]
    fn specials_match_general_shape_where_defined() {
        // C_8(1,4) complement through the k=4 forms.
        let p = cf_prediction(&FamilyPoint::DoubleLoopHalf { k: 4 }).unwrap();
        assert_eq!(p.indices.pair.wiener, int(40));
        assert_eq!(p.rs, frac(11, 2));
    }

    #[test]
    fn predictions_are_internally_consistent() {
        let mut points = vec![
            FamilyPoint::Mc23,
            FamilyPoint::C7Special { a: 2 },
            FamilyPoint::C7Special { a: 3 },
        ];
        points.extend((4..40).map(|k| FamilyPoint::DoubleLoopHalf { k }));
        points
            .extend((8usize..40).flat_map(|n| {
                (2..n.div_ceil(2)).map(move |a| FamilyPoint::DoubleLoopGen { n, a })
            }));
        points.extend((4..12).map(|h| FamilyPoint::Mc2h { h }));
        points.extend(
            [(3, 2), (3, 5), (4, 2), (5, 1), (7, 3), (10, 2)]
                .map(|(m, h)| FamilyPoint::McGen { m, h }),
        );
        for p in points
            .into_iter()
            .filter(|p| p.domain() == DomainStatus::InDomain)
        {
            let pred = cf_prediction(&p).unwrap();
            assert!(pred.is_consistent(), "{p}: {:?}", pred.consistency());
            assert_eq!(
                pred.indices.pair.schultz,
                int(2 * pred.regularity as u64) * &pred.indices.pair.wiener,
                "{p}"
            );
        }
    }

    #[test]
    fn signed_forms_agree_with_positive_forms() {
        for h in 4..=12 {
            let p = FamilyPoint::Mc2h { h };
            let pred = cf_prediction(&p).unwrap();
            assert_eq!(signed_rt_az(&p), pred.indices.reciprocal.az.exact, "{p}");
        }
        for (m, h) in [(3, 2), (3, 3), (5, 1), (5, 4), (9, 2), (100, 1)] {
            let p = FamilyPoint::McGen { m, h };
            let pred = cf_prediction(&p).unwrap();
            assert_eq!(signed_rt_az(&p), pred.indices.reciprocal.az.exact, "{p}");
        }
        assert_eq!(signed_rt_az(&FamilyPoint::Mc23), None);
    }

    #[test]
    fn tang_examples() {
        assert_eq!(tang_diameter(2, 3), 2);
        assert_eq!(tang_diameter(3, 2), 2);
        assert_eq!(tang_diameter(2, 1), 1);
        assert_eq!(tang_diameter(4, 3), 5);
    }

    #[test]
    fn yebra_examples() {
        assert_eq!(yebra_lower_bound(26), 4);
        assert_eq!(yebra_lower_bound(25), 3);
        assert_eq!(yebra_lower_bound(2), 1);
        for n in 2..2000usize {
            let direct = (((2 * n - 1) as f64).sqrt() - 1.0) / 2.0;
            assert_eq!(yebra_lower_bound(n), direct.ceil() as usize, "n={n}");
        }
        assert_eq!((2..100).find(|&n| yebra_lower_bound(n) == 4), Some(26));
    }

    #[test]
    fn half_diameter_examples() {
        assert_eq!(half_double_loop_diameter(8), 4);
        assert_eq!(half_double_loop_diameter(7), 4);
    }

    #[test]
    fn family_names_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(FamilyId::from_name(f.name()), Some(f));
        }
    }
}
