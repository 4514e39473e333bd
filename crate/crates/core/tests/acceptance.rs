//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use circan_core::exact::{frac, int, rel_close, Rational};
use circan_core::formulas::{DomainStatus, FamilyId, FamilyPoint};
use circan_core::graph::GraphFixture;
use circan_core::indices::{circulant_report, full_report, Index, IndexReport};
use circan_core::metrics::{all_pairs_distances, has_property_star};
use circan_core::routing::{
    edge_forwarding_bounds, parse_routing_fixture, vertex_forwarding_index,
};
use circan_core::verify::{
    verify_family, ParamRanges, SweepTarget, VerificationRecord, VerifyOptions,
};
use circan_core::{distance_vector, spectral_radius_exact, CirculantSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn six_vertex_loads() -> Outcome {
    let f = GraphFixture::parse(include_str!("../fixtures/six_vertex.graph"))
        .map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for (name, text, minimal, loads, xi, reference) in [
        (
            "R1",
            include_str!("../fixtures/r1.routes"),
            true,
            [2, 4, 4, 0, 2, 2],
            4,
            [3, 4, 4, 0, 2, 2],
        ),
        (
            "R2",
            include_str!("../fixtures/r2.routes"),
            false,
            [5, 4, 9, 3, 1, 4],
            9,
            [7, 7, 9, 3, 2, 2],
        ),
    ] {
        let r = parse_routing_fixture(text, &f.graph, f.indexing)
            .map_err(|e| format!("{name}: {e}"))?;
        let p = r.load_profile();
        ensure(r.is_minimal() == minimal, || {
            format!("{name}: minimal = {}", r.is_minimal())
        })?;
        ensure(p.vertex_loads == loads, || {
            format!("{name}: loads {:?}", p.vertex_loads)
        })?;
        ensure(p.vertex_loads[2] == xi, || {
            format!("{name}: load of vertex 3 is {}", p.vertex_loads[2])
        })?;
        ensure(p.max_vertex_load == xi, || {
            format!("{name}: forwarding index {}", p.max_vertex_load)
        })?;
        summary.push(format!(
            "{name} loads {loads:?} xi={xi} (reference profile {reference:?})"
        ));
    }
    Ok(summary.join("; "))
}

/// Literal values for the 17 indices plus the scalar invariants.
struct Table {
    rho: u64,
    rs: Rational,
    xi: u64,
    pi: (Rational, i64),
    exact: Vec<(Index, Rational)>,
    surds: Vec<(Index, f64)>,
}

fn check_table(label: &str, spec: &CirculantSpec, t: &Table) -> Result<(), String> {
    let dv = distance_vector(spec).map_err(|e| format!("{label}: {e}"))?;
    let fast = circulant_report(spec).map_err(|e| e.to_string())?;
    let generic = full_report(&spec.build()).map_err(|e| e.to_string())?;
    let b = edge_forwarding_bounds(spec).map_err(|e| e.to_string())?;
    ensure(spectral_radius_exact(spec) == Ok(t.rho), || {
        format!("{label}: rho")
    })?;
    ensure(dv.reciprocal_transmission() == t.rs, || {
        format!("{label}: rs")
    })?;
    ensure(vertex_forwarding_index(spec) == Ok(t.xi), || {
        format!("{label}: xi")
    })?;
    ensure((b.lower.clone(), b.upper) == t.pi, || {
        format!("{label}: pi bounds ({}, {})", b.lower, b.upper)
    })?;
    for report in [&fast, &generic] {
        check_indices(label, report, t)?;
    }
    Ok(())
}

fn check_indices(label: &str, report: &IndexReport, t: &Table) -> Result<(), String> {
    for (i, v) in &t.exact {
        let got = report.get(*i);
        ensure(got.exact.as_ref() == Some(v), || {
            format!("{label}: {i} = {:?}, want {v}", got.exact)
        })?;
    }
    for (i, v) in &t.surds {
        let got = report.get(*i).value;
        ensure(rel_close(got, *v, 1e-9), || {
            format!("{label}: {i} = {got}, want {v}")
        })?;
    }
    Ok(())
}

fn c7_table() -> Outcome {
    let t = Table {
        rho: 12,
        rs: frac(11, 3),
        xi: 6,
        pi: (int(12), 16),
        exact: vec![
            (Index::W, int(42)),
            (Index::WW, int(70)),
            (Index::H, frac(77, 6)),
            (Index::S, int(168)),
            (Index::G, int(168)),
            (Index::HA, frac(154, 3)),
            (Index::HM, frac(154, 3)),
            (Index::TGA, int(7)),
            (Index::TAG, int(7)),
            (Index::TAZ, frac(2612736, 1331)),
            (Index::RTGA, int(7)),
            (Index::RTAG, int(7)),
            (Index::RTAZ, frac(12400927, 110592)),
        ],
        surds: vec![
            (Index::TSC, 7.0 * 6f64.sqrt() / 12.0),
            (Index::TABC, 7.0 * 22f64.sqrt() / 12.0),
            (Index::RTSC, 7.0 * 66f64.sqrt() / 22.0),
            (Index::RTABC, 28.0 * 3f64.sqrt() / 11.0),
        ],
    };
    for a in [2, 3] {
        let spec = CirculantSpec::double_loop(7, a)
            .and_then(|s| s.complement())
            .map_err(|e| e.to_string())?;
        check_table(&format!("a={a}"), &spec, &t)?;
    }
    Ok("complements of C_7(1,2) and C_7(1,3): 17 indices, rho, rs, xi, pi bounds".into())
}

fn mc23_table() -> Outcome {
    let t = Table {
        rho: 16,
        rs: frac(47, 12),
        xi: 9,
        pi: (int(16), 21),
        exact: vec![
            (Index::W, int(64)),
            (Index::WW, int(120)),
            (Index::H, frac(47, 3)),
            (Index::S, int(256)),
            (Index::G, int(256)),
            (Index::TAZ, frac(16777216, 3375)),
            (Index::RTAZ, frac(10779215329u64, 74088000)),
        ],
        surds: vec![(Index::TSC, 2f64.sqrt())],
    };
    let spec = CirculantSpec::multiplicative(2, 3)
        .and_then(|s| s.complement())
        .map_err(|e| e.to_string())?;
    check_table("C_8(1,2,4)", &spec, &t)?;
    Ok(
        "complement of C_8(1,2,4): rho, rs, xi, pi bounds, W, WW, H, S, G, T_SC, T_AZ, RT_AZ"
            .into(),
    )
}

fn failures(records: &[VerificationRecord]) -> Result<(), String> {
    let bad: Vec<String> = records
        .iter()
        .filter(|r| r.is_failure())
        .map(|r| {
            let fields: Vec<&str> = r.mismatches().map(|c| c.field.as_str()).collect();
            format!("{} [{}]", r.point, fields.join(","))
        })
        .collect();
    ensure(bad.is_empty(), || {
        format!("{} failing records: {}", bad.len(), bad.join("; "))
    })
}

fn require(records: &[VerificationRecord], fields: &[&str]) -> Result<(), String> {
    for r in records
        .iter()
        .filter(|r| r.domain_status == DomainStatus::InDomain)
    {
        for f in fields {
            let c = r
                .check(f)
                .ok_or_else(|| format!("{}: no {f} check", r.point))?;
            ensure(c.matched, || {
                format!(
                    "{}: {f} predicted {} computed {}",
                    r.point, c.predicted, c.computed
                )
            })?;
        }
    }
    Ok(())
}

fn index_fields() -> Vec<&'static str> {
    Index::ALL.iter().map(|i| i.name()).collect()
}

fn half_sweep(records: &[VerificationRecord]) -> Outcome {
    failures(records)?;
    let mut fields = vec!["distance_vector", "rho", "xi", "rs"];
    fields.extend(index_fields());
    require(records, &fields)?;
    for k in [2, 3] {
        let r = records
            .iter()
            .find(|r| r.point == FamilyPoint::DoubleLoopHalf { k })
            .ok_or("missing k")?;
        ensure(r.domain_status == DomainStatus::OutOfDomain, || {
            format!("k={k} not flagged")
        })?;
    }
    let n = records
        .iter()
        .filter(|r| r.domain_status == DomainStatus::InDomain)
        .count();
    ensure(n == 97, || format!("{n} in-domain points"))?;
    Ok(format!(
        "k=4..100: {n} points match; k=2,3 flagged out_of_domain"
    ))
}

fn gen_sweep(records: &[VerificationRecord]) -> Outcome {
    failures(records)?;
    let mut fields = vec![
        "distance_vector",
        "rho",
        "xi",
        "rs",
        "wiener_pairs_plus_edges",
    ];
    fields.extend(index_fields());
    require(records, &fields)?;
    for r in records
        .iter()
        .filter(|r| r.domain_status == DomainStatus::InDomain)
    {
        let n = r.order.unwrap() as u64;
        let w = r.check("W").unwrap();
        ensure(w.computed == (n * (n - 1) / 2 + 2 * n).to_string(), || {
            format!("{}: W={}", r.point, w.computed)
        })?;
    }
    let exceptions: Vec<_> = records
        .iter()
        .filter(|r| r.domain_status == DomainStatus::KnownException)
        .collect();
    ensure(exceptions.len() == 1, || {
        format!("{} exceptions", exceptions.len())
    })?;
    let e = exceptions[0];
    ensure(e.point == FamilyPoint::DoubleLoopGen { n: 8, a: 3 }, || {
        e.point.to_string()
    })?;
    ensure(e.check("exception").is_some_and(|c| c.matched), || {
        "C_8(1,3) complement not disconnected".into()
    })?;
    let n = records
        .iter()
        .filter(|r| r.domain_status == DomainStatus::InDomain)
        .count();
    Ok(format!(
        "n=8..100: {n} points match, (8,3) disconnected and recorded known_exception"
    ))
}

fn mc_sweep(records: &[VerificationRecord]) -> Outcome {
    failures(records)?;
    require(records, &["distance_vector", "xi"])?;
    for r in records {
        let c = r
            .check("tang_diameter")
            .ok_or_else(|| format!("{}: no tang_diameter check", r.point))?;
        ensure(c.matched, || {
            format!(
                "{}: base diameter {} vs {}",
                r.point, c.computed, c.predicted
            )
        })?;
    }
    for r in records
        .iter()
        .filter(|r| r.domain_status == DomainStatus::InDomain)
    {
        let h = match r.point {
            FamilyPoint::Mc2h { h } => Some((h, 2 * h - 1)),
            FamilyPoint::McGen { h, .. } => Some((h, 2 * h)),
            _ => None,
        };
        if let Some((_, want)) = h {
            let xi = &r.check("xi").unwrap().computed;
            ensure(*xi == want.to_string(), || format!("{}: xi={xi}", r.point))?;
        }
    }
    let flagged: Vec<String> = records
        .iter()
        .filter(|r| r.domain_status != DomainStatus::InDomain)
        .map(|r| r.point.to_string())
        .collect();
    let n = records.len() - flagged.len();
    Ok(format!(
        "m^h <= 4096: {n} points match, flagged {}",
        flagged.join(" ")
    ))
}

fn spectral(all: &[&[VerificationRecord]]) -> Outcome {
    let mut count = 0;
    for r in all.iter().flat_map(|rs| rs.iter()) {
        if r.domain_status != DomainStatus::InDomain {
            continue;
        }
        let c = r
            .check("rho_dft_vs_transmission")
            .ok_or_else(|| format!("{}: no spectral check", r.point))?;
        ensure(c.matched, || {
            format!("{}: {} vs {}", r.point, c.computed, c.predicted)
        })?;
        count += 1;
    }
    Ok(format!("{count} graphs within 1e-6 relative"))
}

fn routing_witness(all: &[&[VerificationRecord]]) -> Outcome {
    let mut count = 0;
    for r in all.iter().flat_map(|rs| rs.iter()) {
        if r.domain_status != DomainStatus::InDomain || r.order.is_none_or(|n| n > 512) {
            continue;
        }
        for f in [
            "routing_minimal",
            "routing_uniform_load",
            "routing_vertex_load",
        ] {
            let c = r
                .check(f)
                .ok_or_else(|| format!("{}: no {f} check", r.point))?;
            ensure(c.matched, || {
                format!("{}: {f} {} vs {}", r.point, c.computed, c.predicted)
            })?;
        }
        count += 1;
    }
    Ok(format!(
        "{count} graphs with n <= 512 have uniform loads Tr-(n-1)"
    ))
}

fn random_corpus() -> Vec<CirculantSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00c1_2c01);
    let mut corpus = Vec::new();
    while corpus.len() < 200 {
        let n = rng.gen_range(3..=256usize);
        let k = rng.gen_range(1..=(n / 2).min(8));
        let jumps: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=(n / 2) as i64)).collect();
        let spec = CirculantSpec::new(n, jumps).expect("jumps in range");
        if distance_vector(&spec).is_ok() {
            corpus.push(spec);
        }
    }
    corpus
}

fn properties() -> Outcome {
    let corpus = random_corpus();
    let mut wide = 0;
    for s in &corpus {
        let dv = distance_vector(s).map_err(|e| e.to_string())?;
        let g = s.build();
        let dm = all_pairs_distances(&g).map_err(|e| e.to_string())?;
        ensure(dm == dv.to_matrix(), || format!("{s}: rotation law"))?;
        if dv.diameter() >= 4 {
            wide += 1;
            ensure(has_property_star(&g), || {
                format!("{s}: diameter {} without Property *", dv.diameter())
            })?;
        }
        let rep = full_report(&g).map_err(|e| e.to_string())?;
        let r = int(s.degree() as u64);
        let m = int(s.edge_count() as u64);
        let p = &rep.pair;
        ensure(p.schultz == int(2) * &r * &p.wiener, || {
            format!("{s}: S != 2rW")
        })?;
        ensure(p.gutman == &r * &r * &p.wiener, || {
            format!("{s}: G != r^2 W")
        })?;
        for i in [Index::TGA, Index::TAG, Index::RTGA, Index::RTAG] {
            ensure(rep.get(i).exact.as_ref() == Some(&m), || {
                format!("{s}: {i} != |E|")
            })?;
        }
    }
    Ok(format!(
        "200 circulants (n <= 256, {wide} with diameter >= 4): rotation law, Property *, collapses"
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let opts = VerifyOptions::default();
    let sweep = |target, ranges: ParamRanges| verify_family(target, &ranges, &opts);
    let half = sweep(
        SweepTarget::Family(FamilyId::DoubleLoopHalf),
        ParamRanges {
            k: Some(2..=100),
            ..Default::default()
        },
    );
    let gen = sweep(
        SweepTarget::Family(FamilyId::DoubleLoopGen),
        ParamRanges {
            n: Some(8..=100),
            ..Default::default()
        },
    );
    let mc = sweep(
        SweepTarget::Multiplicative,
        ParamRanges {
            max_order: Some(4096),
            ..Default::default()
        },
    );
    let all: [&[VerificationRecord]; 3] = [&half, &gen, &mc];

    let results: Vec<(&str, Outcome)> = vec![
        ("six-vertex routing loads", six_vertex_loads()),
        ("n=7 double loop complements", c7_table()),
        ("C_8(1,2,4) complement", mc23_table()),
        ("C_2k(1,k) complement sweep", half_sweep(&half)),
        ("C_n(1,a) complement sweep", gen_sweep(&gen)),
        ("multiplicative complement sweep", mc_sweep(&mc)),
        ("spectral radius cross-check", spectral(&all)),
        ("rotation routing witness", routing_witness(&all)),
        ("random circulant properties", properties()),
    ];
    let mut ok = true;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                ok = false;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("elapsed {:.1}s", start.elapsed().as_secs_f64());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
