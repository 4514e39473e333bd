//! Seventeen distance-based topological indices.
//!
//! Pair indices sum over unordered vertex pairs:
//!
//! | index | summand over `{u, v}` |
//! |-------|-----------------------|
//! | `W`   | `d` |
//! | `WW`  | `(d + d^2) / 2` |
//! | `H`   | `1 / d` |
//! | `S`   | `(deg u + deg v) d` |
//! | `G`   | `deg u deg v d` |
//! | `H_A` | `(deg u + deg v) / d` |
//! | `H_M` | `deg u deg v / d` |
//!
//! Edge indices sum a kernel `f(x_u, x_v)` over edges, where `x` is the
//! transmission `sigma` (the `T_*` family) or the reciprocal transmission `rs`
//! (the `RT_*` family):
//!
//! | kernel | `f(a, b)` |
//! |--------|-----------|
//! | `GA`   | `2 sqrt(ab) / (a + b)` |
//! | `AG`   | `(a + b) / (2 sqrt(ab))` |
//! | `SC`   | `1 / sqrt(a + b)` |
//! | `ABC`  | `sqrt((a + b - 2) / (ab))` |
//! | `AZ`   | `(ab / (a + b - 2))^3` |
//!
//! Edges whose endpoints carry the same pair of values contribute identical
//! terms, so edge sums are grouped by value class before evaluation. A kernel
//! sum is kept exactly whenever every square root it needs is rational.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::exact::{exact_sqrt, frac, int, to_f64, CompensatedSum, Rational};
use crate::graph::GenericGraph;
use crate::metrics::{
    all_pairs_distances, distance_vector, reciprocal_transmissions, transmissions, DistanceMatrix,
};

/// Name of one of the seventeen indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Index {
    W,
    WW,
    H,
    S,
    G,
    HA,
    HM,
    TGA,
    TAG,
    TSC,
    TABC,
    TAZ,
    RTGA,
    RTAG,
    RTSC,
    RTABC,
    RTAZ,
}

impl Index {
    pub const ALL: [Index; 17] = [
        Index::W,
        Index::WW,
        Index::H,
        Index::S,
        Index::G,
        Index::HA,
        Index::HM,
        Index::TGA,
        Index::TAG,
        Index::TSC,
        Index::TABC,
        Index::TAZ,
        Index::RTGA,
        Index::RTAG,
        Index::RTSC,
        Index::RTABC,
        Index::RTAZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Index::W => "W",
            Index::WW => "WW",
            Index::H => "H",
            Index::S => "S",
            Index::G => "G",
            Index::HA => "H_A",
            Index::HM => "H_M",
            Index::TGA => "T_GA",
            Index::TAG => "T_AG",
            Index::TSC => "T_SC",
            Index::TABC => "T_ABC",
            Index::TAZ => "T_AZ",
            Index::RTGA => "RT_GA",
            Index::RTAG => "RT_AG",
            Index::RTSC => "RT_SC",
            Index::RTABC => "RT_ABC",
            Index::RTAZ => "RT_AZ",
        }
    }

    pub fn from_name(name: &str) -> Option<Index> {
        Index::ALL.into_iter().find(|i| i.name() == name)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A binary64 value, with its exact rational form when one is known.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexValue {
    pub value: f64,
    pub exact: Option<Rational>,
}

impl IndexValue {
    pub fn exact(r: Rational) -> Self {
        Self {
            value: to_f64(&r),
            exact: Some(r),
        }
    }

    pub fn approx(value: f64) -> Self {
        Self { value, exact: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIndices {
    pub wiener: Rational,
    pub hyper_wiener: Rational,
    pub harary: Rational,
    pub schultz: Rational,
    pub gutman: Rational,
    pub harary_additive: Rational,
    pub harary_multiplicative: Rational,
}

/// The five edge kernels for one vertex quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeIndices {
    pub ga: IndexValue,
    pub ag: IndexValue,
    pub sc: IndexValue,
    pub abc: IndexValue,
    pub az: IndexValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub pair: PairIndices,
    /// `T_GA`, `T_AG`, `T_SC`, `T_ABC`, `T_AZ`.
    pub transmission: EdgeIndices,
    /// `RT_GA`, `RT_AG`, `RT_SC`, `RT_ABC`, `RT_AZ`.
    pub reciprocal: EdgeIndices,
}

impl IndexReport {
    pub fn get(&self, index: Index) -> IndexValue {
        let p = &self.pair;
        let (t, rt) = (&self.transmission, &self.reciprocal);
        match index {
            Index::W => IndexValue::exact(p.wiener.clone()),
            Index::WW => IndexValue::exact(p.hyper_wiener.clone()),
            Index::H => IndexValue::exact(p.harary.clone()),
            Index::S => IndexValue::exact(p.schultz.clone()),
            Index::G => IndexValue::exact(p.gutman.clone()),
            Index::HA => IndexValue::exact(p.harary_additive.clone()),
            Index::HM => IndexValue::exact(p.harary_multiplicative.clone()),
            Index::TGA => t.ga.clone(),
            Index::TAG => t.ag.clone(),
            Index::TSC => t.sc.clone(),
            Index::TABC => t.abc.clone(),
            Index::TAZ => t.az.clone(),
            Index::RTGA => rt.ga.clone(),
            Index::RTAG => rt.ag.clone(),
            Index::RTSC => rt.sc.clone(),
            Index::RTABC => rt.abc.clone(),
            Index::RTAZ => rt.az.clone(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (Index, IndexValue)> + '_ {
        Index::ALL.into_iter().map(|i| (i, self.get(i)))
    }
}

/// Unordered pairs at one distance: how many, and the sums of
/// `deg u + deg v` and `deg u * deg v` over them.
#[derive(Debug, Clone, Copy, Default)]
struct DistanceClass {
    pairs: u128,
    degree_sum: u128,
    degree_product: u128,
}

fn pair_indices_from_classes(classes: &[DistanceClass]) -> PairIndices {
    let mut w = 0u128;
    let mut ww2 = 0u128;
    let mut s = 0u128;
    let mut g = 0u128;
    let mut h = int(0);
    let mut ha = int(0);
    let mut hm = int(0);
    for (d, c) in classes.iter().enumerate().skip(1) {
        if c.pairs == 0 {
            continue;
        }
        let d = d as u128;
        w += d * c.pairs;
        ww2 += (d + d * d) * c.pairs;
        s += d * c.degree_sum;
        g += d * c.degree_product;
        h += frac(c.pairs, d);
        ha += frac(c.degree_sum, d);
        hm += frac(c.degree_product, d);
    }
    PairIndices {
        wiener: int(w),
        hyper_wiener: frac(ww2, 2u8),
        harary: h,
        schultz: int(s),
        gutman: int(g),
        harary_additive: ha,
        harary_multiplicative: hm,
    }
}

fn pair_indices_with(g: &GenericGraph, dm: &DistanceMatrix) -> PairIndices {
    let n = g.order();
    let deg: Vec<u128> = g.degrees().into_iter().map(|d| d as u128).collect();
    let mut classes = vec![DistanceClass::default(); dm.max() as usize + 1];
    for u in 0..n {
        for (v, &d) in dm.row(u).iter().enumerate().skip(u + 1) {
            let c = &mut classes[d as usize];
            c.pairs += 1;
            c.degree_sum += deg[u] + deg[v];
            c.degree_product += deg[u] * deg[v];
        }
    }
    pair_indices_from_classes(&classes)
}

/// `W, WW, H, S, G, H_A, H_M` from all-pairs BFS.
pub fn pair_indices(g: &GenericGraph) -> Result<PairIndices> {
    let dm = all_pairs_distances(g)?;
    Ok(pair_indices_with(g, &dm))
}

/// Edges grouped by the (unordered) pair of endpoint values.
struct EdgeClass {
    a: Rational,
    b: Rational,
    count: u64,
    witness: (usize, usize),
}

fn group_edges(g: &GenericGraph, values: &[Rational]) -> Vec<EdgeClass> {
    let mut ids: BTreeMap<&Rational, usize> = BTreeMap::new();
    for v in values {
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    let class_of: Vec<usize> = values.iter().map(|v| ids[v]).collect();
    let mut groups: HashMap<(usize, usize), (u64, (usize, usize))> = HashMap::new();
    for (u, v) in g.edges() {
        let key = (class_of[u].min(class_of[v]), class_of[u].max(class_of[v]));
        groups.entry(key).or_insert((0, (u, v))).0 += 1;
    }
    let mut out: Vec<EdgeClass> = groups
        .into_values()
        .map(|(count, (u, v))| EdgeClass {
            a: values[u].clone(),
            b: values[v].clone(),
            count,
            witness: (u, v),
        })
        .collect();
    out.sort_by_key(|c| c.witness);
    out
}

#[derive(Clone, Copy)]
enum Quantity {
    Transmission,
    ReciprocalTransmission,
}

/// Accumulates one kernel: a compensated float sum and, while every term
/// is rational, an exact sum.
struct KernelSum {
    float: CompensatedSum,
    exact: Option<Rational>,
}

impl KernelSum {
    fn new() -> Self {
        Self {
            float: CompensatedSum::default(),
            exact: Some(Rational::zero()),
        }
    }

    fn add(&mut self, count: u64, term: f64, exact_term: Option<Rational>) {
        self.float.add(count as f64 * term);
        self.exact = match (self.exact.take(), exact_term) {
            (Some(acc), Some(t)) => Some(acc + t * int(count)),
            _ => None,
        };
    }

    fn finish(self) -> IndexValue {
        match self.exact {
            Some(r) => IndexValue::exact(r),
            None => IndexValue::approx(self.float.value()),
        }
    }
}

fn edge_indices(classes: &[EdgeClass], quantity: Quantity) -> Result<EdgeIndices> {
    let two = int(2);
    let mut ga = KernelSum::new();
    let mut ag = KernelSum::new();
    let mut sc = KernelSum::new();
    let mut abc = KernelSum::new();
    let mut az = KernelSum::new();
    for c in classes {
        let sum = &c.a + &c.b;
        if sum <= two {
            let (u, v) = c.witness;
            let sum = sum.to_string();
            return Err(match quantity {
                Quantity::Transmission => Error::DegenerateTransmission { u, v, sum },
                Quantity::ReciprocalTransmission => {
                    Error::DegenerateReciprocalTransmission { u, v, sum }
                }
            });
        }
        let prod = &c.a * &c.b;
        let excess = &sum - &two;
        let (af, bf) = (to_f64(&c.a), to_f64(&c.b));
        let (sf, pf) = (af + bf, af * bf);

        let root_prod = exact_sqrt(&prod);
        ga.add(
            c.count,
            2.0 * pf.sqrt() / sf,
            root_prod.as_ref().map(|r| &two * r / &sum),
        );
        ag.add(
            c.count,
            sf / (2.0 * pf.sqrt()),
            root_prod.as_ref().map(|r| &sum / (&two * r)),
        );
        sc.add(
            c.count,
            1.0 / sf.sqrt(),
            exact_sqrt(&sum).map(|r| Rational::one() / r),
        );
        let abc_sq = &excess / &prod;
        abc.add(c.count, ((sf - 2.0) / pf).sqrt(), exact_sqrt(&abc_sq));
        let az_base = &prod / &excess;
        let az_term = &az_base * &az_base * &az_base;
        az.add(c.count, to_f64(&az_term), Some(az_term));
    }
    Ok(EdgeIndices {
        ga: ga.finish(),
        ag: ag.finish(),
        sc: sc.finish(),
        abc: abc.finish(),
        az: az.finish(),
    })
}

fn transmission_values(dm: &DistanceMatrix) -> Vec<Rational> {
    transmissions(dm).into_iter().map(int).collect()
}

/// `T_GA, T_AG, T_SC, T_ABC, T_AZ` over the edges of a connected graph.
pub fn transmission_indices(g: &GenericGraph) -> Result<EdgeIndices> {
    let dm = all_pairs_distances(g)?;
    edge_indices(
        &group_edges(g, &transmission_values(&dm)),
        Quantity::Transmission,
    )
}

/// `RT_GA, RT_AG, RT_SC, RT_ABC, RT_AZ` over the edges of a connected graph.
pub fn reciprocal_transmission_indices(g: &GenericGraph) -> Result<EdgeIndices> {
    let dm = all_pairs_distances(g)?;
    edge_indices(
        &group_edges(g, &reciprocal_transmissions(&dm)),
        Quantity::ReciprocalTransmission,
    )
}

/// All seventeen indices of a connected graph from one all-pairs BFS.
pub fn full_report(g: &GenericGraph) -> Result<IndexReport> {
    let dm = all_pairs_distances(g)?;
    Ok(IndexReport {
        pair: pair_indices_with(g, &dm),
        transmission: edge_indices(
            &group_edges(g, &transmission_values(&dm)),
            Quantity::Transmission,
        )?,
        reciprocal: edge_indices(
            &group_edges(g, &reciprocal_transmissions(&dm)),
            Quantity::ReciprocalTransmission,
        )?,
    })
}

/// All seventeen indices of a connected circulant from its distance vector.
///
/// Vertex-transitivity makes every vertex see the same distance row, every
/// degree equal `r`, and every edge carry the same endpoint values, so the
/// sums collapse to counts over the first row.
pub fn circulant_report(spec: &CirculantSpec) -> Result<IndexReport> {
    let dv = distance_vector(spec)?;
    let n = spec.order() as u128;
    let r = spec.degree() as u128;
    let classes: Vec<DistanceClass> = dv
        .level_counts()
        .into_iter()
        .map(|c| {
            // n * c ordered pairs at this distance, each unordered pair twice.
            let pairs = n * c as u128 / 2;
            DistanceClass {
                pairs,
                degree_sum: 2 * r * pairs,
                degree_product: r * r * pairs,
            }
        })
        .collect();
    let m = spec.edge_count() as u64;
    let witness = (0, spec.jumps()[0]);
    let class = |x: Rational| {
        [EdgeClass {
            a: x.clone(),
            b: x,
            count: m,
            witness,
        }]
    };
    Ok(IndexReport {
        pair: pair_indices_from_classes(&classes),
        transmission: edge_indices(&class(int(dv.transmission())), Quantity::Transmission)?,
        reciprocal: edge_indices(
            &class(dv.reciprocal_transmission()),
            Quantity::ReciprocalTransmission,
        )?,
    })
}
