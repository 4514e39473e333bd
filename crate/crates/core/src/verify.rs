//! Field-by-field comparison of closed-form predictions against brute force.

use std::fmt::Display;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::circulant::CirculantSpec;
use crate::error::Error;
use crate::exact::{format as fmt_rational, int, rel_close, Rational};
use crate::formulas::{
    cf_prediction, distance_vector_as_stated, half_double_loop_diameter, signed_rt_az,
    tang_diameter, yebra_lower_bound, DomainStatus, FamilyId, FamilyPoint,
};
use crate::indices::{circulant_report, full_report, Index, IndexReport, IndexValue};
use crate::metrics::{
    all_pairs_distances, circulant_has_property_star, distance_vector, DistanceVector,
};
use crate::routing::{edge_forwarding_bounds, vertex_forwarding_index, RotationRouting};
use crate::spectral::circulant_spectrum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Relative tolerance for surd-valued indices.
    pub tolerance: f64,
    /// Relative tolerance for the trigonometric spectral radius.
    pub spectral_tolerance: f64,
    /// Largest order whose rotation routing is materialized and validated.
    pub routing_limit: usize,
    /// Largest order rebuilt as a generic graph for the all-pairs cross-check.
    pub generic_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            spectral_tolerance: 1e-6,
            routing_limit: 512,
            generic_limit: 128,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldCheck {
    pub field: String,
    pub predicted: String,
    pub computed: String,
    pub matched: bool,
    /// Relative tolerance, for floating-point comparisons.
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub point: FamilyPoint,
    pub order: Option<usize>,
    pub domain_status: DomainStatus,
    pub checks: Vec<FieldCheck>,
    pub notes: Vec<String>,
}

impl VerificationRecord {
    pub fn family(&self) -> FamilyId {
        self.point.family()
    }

    pub fn matched(&self) -> bool {
        self.checks.iter().all(|c| c.matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &FieldCheck> {
        self.checks.iter().filter(|c| !c.matched)
    }

    /// A mismatch counts unless the point lies outside the effective domain,
    /// where checks are informational.
    pub fn is_failure(&self) -> bool {
        self.domain_status != DomainStatus::OutOfDomain && !self.matched()
    }

    pub fn check(&self, field: &str) -> Option<&FieldCheck> {
        self.checks.iter().find(|c| c.field == field)
    }
}

#[derive(Default)]
struct Checks(Vec<FieldCheck>);

impl Checks {
    fn exact(
        &mut self,
        field: impl Into<String>,
        predicted: impl Display,
        computed: impl Display,
        matched: bool,
    ) {
        self.0.push(FieldCheck {
            field: field.into(),
            predicted: predicted.to_string(),
            computed: computed.to_string(),
            matched,
            tolerance: None,
        });
    }

    fn eq<T: PartialEq + Display>(&mut self, field: impl Into<String>, predicted: T, computed: T) {
        let matched = predicted == computed;
        self.exact(field, predicted, computed, matched);
    }

    fn rational(&mut self, field: impl Into<String>, predicted: &Rational, computed: &Rational) {
        self.exact(
            field,
            fmt_rational(predicted),
            fmt_rational(computed),
            predicted == computed,
        );
    }

    fn float(&mut self, field: impl Into<String>, predicted: f64, computed: f64, tol: f64) {
        self.0.push(FieldCheck {
            field: field.into(),
            predicted: predicted.to_string(),
            computed: computed.to_string(),
            matched: rel_close(predicted, computed, tol),
            tolerance: Some(tol),
        });
    }

    /// Exact when both sides are exact, relative tolerance otherwise.
    fn index(
        &mut self,
        field: impl Into<String>,
        predicted: &IndexValue,
        computed: &IndexValue,
        tol: f64,
    ) {
        match (&predicted.exact, &computed.exact) {
            (Some(p), Some(c)) => self.rational(field, p, c),
            _ => self.float(field, predicted.value, computed.value, tol),
        }
    }

    fn report(&mut self, prefix: &str, predicted: &IndexReport, computed: &IndexReport, tol: f64) {
        for index in Index::ALL {
            let name = format!("{prefix}{}", index.name());
            self.index(name, &predicted.get(index), &computed.get(index), tol);
        }
    }
}

fn dv_text(dv: &DistanceVector) -> String {
    let parts: Vec<String> = dv.entries().iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Verifies one parameter point. Never fails: problems become checks or notes.
pub fn verify_point(point: &FamilyPoint, opts: &VerifyOptions) -> VerificationRecord {
    let mut record = VerificationRecord {
        point: *point,
        order: point.order(),
        domain_status: point.domain(),
        checks: Vec::new(),
        notes: point.domain_note().into_iter().collect(),
    };
    let mut checks = Checks::default();
    run_checks(point, opts, &mut checks, &mut record.notes);
    record.checks = checks.0;
    routing_checks(point, opts, &mut record);
    record
}

fn run_checks(
    point: &FamilyPoint,
    opts: &VerifyOptions,
    checks: &mut Checks,
    notes: &mut Vec<String>,
) {
    let status = point.domain();
    let base = match point.base_spec() {
        Ok(base) => base,
        Err(e) => {
            notes.push(format!("no base graph: {e}"));
            return;
        }
    };
    base_graph_checks(point, &base, checks);

    let complement = base.complement();
    let dv = match complement.as_ref().map(distance_vector) {
        Ok(Ok(dv)) => dv,
        Err(Error::EmptyComplement { .. }) | Ok(Err(_)) => {
            let what = if complement.is_err() {
                "edgeless"
            } else {
                "disconnected"
            };
            notes.push(format!("complement is {what}"));
            match status {
                DomainStatus::InDomain => checks.exact("connected", "connected", what, false),
                DomainStatus::KnownException => {
                    checks.exact("exception", "disconnected", what, what == "disconnected")
                }
                DomainStatus::OutOfDomain => {}
            }
            return;
        }
        Err(e) => {
            notes.push(format!("complement: {e}"));
            return;
        }
    };
    let complement = complement.expect("distance vector implies a complement");
    if status == DomainStatus::KnownException {
        checks.exact("exception", "disconnected", "connected", false);
    }

    let n = complement.order();
    let computed = Computed::new(&complement, &dv);
    brute_force_cross_checks(&complement, &dv, &computed, opts, checks);

    match status {
        DomainStatus::InDomain => match cf_prediction(point) {
            Ok(pred) => {
                checks.exact(
                    "prediction_consistency",
                    true,
                    pred.is_consistent(),
                    pred.is_consistent(),
                );
                checks.exact(
                    "distance_vector",
                    dv_text(&pred.distance_vector),
                    dv_text(&dv),
                    pred.distance_vector == dv,
                );
                checks.eq("diameter", pred.distance_vector.diameter(), dv.diameter());
                checks.eq("regularity", pred.regularity, computed.regularity);
                checks.eq("rho", pred.rho, computed.rho);
                checks.float(
                    "rho_dft",
                    pred.rho as f64,
                    computed.rho_dft,
                    opts.spectral_tolerance,
                );
                checks.rational("rs", &pred.rs, &computed.rs);
                checks.eq("xi", pred.xi, computed.xi);
                checks.rational("pi_lower", &pred.pi_lower, &computed.pi_lower);
                checks.eq("pi_upper", pred.pi_upper, computed.pi_upper);
                checks.report("", &pred.indices, &computed.report, opts.tolerance);
                if pred.distance_vector.diameter() == 2 {
                    let n = n as u64;
                    let expected = int(n * (n - 1) / 2 + base.edge_count() as u64);
                    checks.rational(
                        "wiener_pairs_plus_edges",
                        &expected,
                        &computed.report.pair.wiener,
                    );
                }
                if let Some(signed) = signed_rt_az(point) {
                    let positive = pred
                        .indices
                        .reciprocal
                        .az
                        .exact
                        .clone()
                        .expect("RT_AZ is rational");
                    checks.rational("signed_rt_az", &signed, &positive);
                }
            }
            Err(e) => notes.push(format!("no prediction: {e}")),
        },
        _ => {
            if let Some(stated) = distance_vector_as_stated(point)
                .ok()
                .filter(|s| s.order() == n)
            {
                checks.exact(
                    "distance_vector_as_stated",
                    dv_text(&stated),
                    dv_text(&dv),
                    stated == dv,
                );
            }
        }
    }
}

/// Brute-force quantities for a connected complement.
struct Computed {
    regularity: usize,
    rho: u64,
    rho_dft: f64,
    rs: Rational,
    xi: u64,
    pi_lower: Rational,
    pi_upper: i64,
    report: IndexReport,
}

impl Computed {
    fn new(spec: &CirculantSpec, dv: &DistanceVector) -> Self {
        let bounds = edge_forwarding_bounds(spec).expect("connected");
        Self {
            regularity: spec.degree(),
            rho: dv.transmission(),
            rho_dft: circulant_spectrum(dv).radius,
            rs: dv.reciprocal_transmission(),
            xi: vertex_forwarding_index(spec).expect("connected"),
            pi_lower: bounds.lower,
            pi_upper: bounds.upper,
            report: circulant_report(spec).expect("connected"),
        }
    }
}

fn brute_force_cross_checks(
    spec: &CirculantSpec,
    dv: &DistanceVector,
    computed: &Computed,
    opts: &VerifyOptions,
    checks: &mut Checks,
) {
    let n = spec.order();
    checks.float(
        "rho_dft_vs_transmission",
        computed.rho as f64,
        computed.rho_dft,
        opts.spectral_tolerance,
    );
    if n <= opts.generic_limit {
        let g = spec.build();
        match all_pairs_distances(&g) {
            Ok(dm) => checks.exact(
                "rotation_law",
                true,
                dm == dv.to_matrix(),
                dm == dv.to_matrix(),
            ),
            Err(e) => checks.exact("rotation_law", true, e, false),
        }
        match full_report(&g) {
            Ok(generic) => checks.report("generic:", &computed.report, &generic, opts.tolerance),
            Err(e) => checks.exact("generic", "report", e, false),
        }
    }
}

fn base_graph_checks(point: &FamilyPoint, base: &CirculantSpec, checks: &mut Checks) {
    let Ok(base_dv) = distance_vector(base) else {
        return;
    };
    let diameter = base_dv.diameter() as usize;
    match *point {
        FamilyPoint::Mc2h { h } => checks.eq("tang_diameter", tang_diameter(2, h), diameter),
        FamilyPoint::Mc23 => checks.eq("tang_diameter", tang_diameter(2, 3), diameter),
        FamilyPoint::McGen { m, h } => checks.eq("tang_diameter", tang_diameter(m, h), diameter),
        FamilyPoint::DoubleLoopHalf { k } if k <= 64 => {
            checks.eq("liu_diameter", half_double_loop_diameter(k), diameter)
        }
        FamilyPoint::DoubleLoopGen { n, .. } => {
            let bound = yebra_lower_bound(n);
            checks.exact(
                "yebra_bound",
                format!(">= {bound}"),
                diameter,
                diameter >= bound,
            );
        }
        _ => {}
    }
    if diameter >= 4 {
        let star = circulant_has_property_star(base);
        checks.exact("property_star_from_diameter", true, star, star);
    }
}

/// Materializes the rotation routing and checks its loads.
fn routing_checks(point: &FamilyPoint, opts: &VerifyOptions, record: &mut VerificationRecord) {
    if record.order.is_none_or(|n| n > opts.routing_limit) {
        return;
    }
    let Ok(spec) = point.base_spec().and_then(|b| b.complement()) else {
        return;
    };
    let Ok(rr) = RotationRouting::new(&spec) else {
        return;
    };
    let mut checks = Checks::default();
    match rr.to_routing() {
        Ok(routing) => {
            checks.exact(
                "routing_minimal",
                true,
                routing.is_minimal(),
                routing.is_minimal(),
            );
            let loads = routing.load_profile();
            let xi = vertex_forwarding_index(&spec).expect("connected");
            checks.exact(
                "routing_uniform_load",
                xi,
                loads.max_vertex_load,
                loads.is_uniform() && loads.max_vertex_load == xi,
            );
            if record.domain_status == DomainStatus::InDomain {
                if let Ok(pred) = cf_prediction(point) {
                    checks.eq("routing_vertex_load", pred.xi, loads.max_vertex_load);
                    let above = int(loads.max_edge_load) >= pred.pi_lower;
                    checks.exact(
                        "routing_edge_load_vs_pi_lower",
                        fmt_rational(&pred.pi_lower),
                        loads.max_edge_load,
                        above,
                    );
                }
            }
        }
        Err(e) => checks.exact("routing_valid", "valid", e, false),
    }
    record.checks.extend(checks.0);
}

/// Verifies every point in parallel; records come back in input order.
pub fn verify_points(points: &[FamilyPoint], opts: &VerifyOptions) -> Vec<VerificationRecord> {
    points.par_iter().map(|p| verify_point(p, opts)).collect()
}

/// What a sweep covers: one family, or every multiplicative circulant up to
/// a maximum order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepTarget {
    Family(FamilyId),
    Multiplicative,
}

impl SweepTarget {
    pub fn from_name(name: &str) -> Option<SweepTarget> {
        if name == "mc" {
            return Some(SweepTarget::Multiplicative);
        }
        FamilyId::from_name(name).map(SweepTarget::Family)
    }

    pub fn name(self) -> &'static str {
        match self {
            SweepTarget::Family(f) => f.name(),
            SweepTarget::Multiplicative => "mc",
        }
    }
}

/// Parameter ranges; unset ranges take per-family defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParamRanges {
    pub k: Option<RangeInclusive<usize>>,
    pub n: Option<RangeInclusive<usize>>,
    pub a: Option<RangeInclusive<usize>>,
    pub m: Option<RangeInclusive<usize>>,
    pub h: Option<RangeInclusive<u32>>,
    pub max_order: Option<usize>,
}

pub const DEFAULT_K: RangeInclusive<usize> = 2..=32;
pub const DEFAULT_N: RangeInclusive<usize> = 7..=40;
pub const DEFAULT_M: RangeInclusive<usize> = 3..=16;
pub const DEFAULT_H: RangeInclusive<u32> = 1..=3;
pub const DEFAULT_H_2: RangeInclusive<u32> = 1..=10;
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Parameter points of a sweep, in parameter order.
pub fn sweep_points(target: SweepTarget, ranges: &ParamRanges) -> Vec<FamilyPoint> {
    let a_ok = |a: usize| ranges.a.as_ref().is_none_or(|r| r.contains(&a));
    match target {
        SweepTarget::Family(FamilyId::DoubleLoopHalf) => ranges
            .k
            .clone()
            .unwrap_or(DEFAULT_K)
            .map(|k| FamilyPoint::DoubleLoopHalf { k })
            .collect(),
        SweepTarget::Family(FamilyId::DoubleLoopGen) => ranges
            .n
            .clone()
            .unwrap_or(DEFAULT_N)
            .flat_map(|n| (2..n.div_ceil(2)).map(move |a| (n, a)))
            .filter(|&(_, a)| a_ok(a))
            .map(|(n, a)| FamilyPoint::DoubleLoopGen { n, a })
            .collect(),
        SweepTarget::Family(FamilyId::C7Special) => ranges
            .a
            .clone()
            .unwrap_or(2..=3)
            .map(|a| FamilyPoint::C7Special { a })
            .collect(),
        SweepTarget::Family(FamilyId::Mc2h) => ranges
            .h
            .clone()
            .unwrap_or(DEFAULT_H_2)
            .map(|h| FamilyPoint::Mc2h { h })
            .collect(),
        SweepTarget::Family(FamilyId::McGen) => {
            let hs = ranges.h.clone().unwrap_or(DEFAULT_H);
            ranges
                .m
                .clone()
                .unwrap_or(DEFAULT_M)
                .flat_map(|m| hs.clone().map(move |h| FamilyPoint::McGen { m, h }))
                .collect()
        }
        SweepTarget::Family(FamilyId::Mc23) => vec![FamilyPoint::Mc23],
        SweepTarget::Multiplicative => {
            multiplicative_points(ranges.max_order.unwrap_or(DEFAULT_MAX_ORDER))
        }
    }
}

/// Every `(m, h)` with `m >= 2`, `h >= 1` and `m^h <= max_order`, routed to
/// the family whose closed forms cover it.
pub fn multiplicative_points(max_order: usize) -> Vec<FamilyPoint> {
    let mut points = Vec::new();
    for m in 2..=max_order {
        let mut h = 1u32;
        while m.checked_pow(h).is_some_and(|n| n <= max_order) {
            points.push(match (m, h) {
                (2, 3) => FamilyPoint::Mc23,
                (2, h) => FamilyPoint::Mc2h { h },
                (m, h) => FamilyPoint::McGen { m, h },
            });
            h += 1;
        }
    }
    points
}

pub fn verify_family(
    target: SweepTarget,
    ranges: &ParamRanges,
    opts: &VerifyOptions,
) -> Vec<VerificationRecord> {
    verify_points(&sweep_points(target, ranges), opts)
}
