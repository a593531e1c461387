//! Acceptance suite. Each test covers one shipping criterion and prints a
//! single [PASS] line with the measured evidence (visible with --nocapture).

use std::sync::Arc;
use std::time::Instant;

use agraph_core::arith;
use agraph_core::graph::{build_ag_graph, build_zero_divisor_graph, Diameter, Girth};
use agraph_core::harness::corpus::{crosscheck_zn, run_checks, standard_table_corpus};
use agraph_core::harness::report::{checks_json, tally};
use agraph_core::harness::{CheckId, Verdict, ALL_CHECKS};
use agraph_core::ideal::enumerate_ideals;
use agraph_core::naive;
use agraph_core::ring::{
    build_ring, parse_ring_spec, quotient_ring, FiniteRing, Limits, RingSpec,
};

fn lattice_of(ring: &Arc<FiniteRing>) -> agraph_core::ideal::IdealLattice {
    enumerate_ideals(ring, Limits::default()).expect("lattice")
}

fn corpus() -> Vec<Arc<FiniteRing>> {
    standard_table_corpus(64, Limits::default()).expect("corpus")
}

fn find(rings: &[Arc<FiniteRing>], name: &str) -> Arc<FiniteRing> {
    rings
        .iter()
        .find(|r| r.name() == name)
        .unwrap_or_else(|| panic!("{name} missing from corpus"))
        .clone()
}

#[test]
fn criterion_1_zn_sweep_is_connected_with_small_diameter_and_girth() {
    let start = Instant::now();
    let mut swept = 0usize;
    for n in 2..=10_000u64 {
        if arith::is_prime(n) {
            continue;
        }
        let ring = Arc::new(build_ring(&RingSpec::Zn(n)).unwrap());
        let lat = lattice_of(&ring);
        let inv = build_ag_graph(&lat).graph.invariants();
        assert!(inv.is_connected, "AG(Z{n}) disconnected");
        match inv.diameter {
            Diameter::Finite(d) => assert!(d <= 3, "AG(Z{n}) diameter {d}"),
            other => panic!("AG(Z{n}) diameter {other}"),
        }
        match inv.girth {
            Girth::Finite(g) => assert!(g == 3 || g == 4, "AG(Z{n}) girth {g}"),
            Girth::Infinite => {}
        }
        swept += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "sweep took {elapsed:?}, budget is 60s"
    );
    println!(
        "[PASS] criterion 1: {swept} non-field Z_n swept (n <= 10000), all connected, \
         diameter <= 3, girth in {{3, 4, inf}}, in {elapsed:?}"
    );
}

#[test]
fn criterion_2_diameter_and_girth_bounds_are_tight() {
    let z2xz4 = Arc::new(build_ring(&parse_ring_spec("Z2 x Z4").unwrap()).unwrap());
    let inv = build_ag_graph(&lattice_of(&z2xz4)).graph.invariants();
    assert_eq!(inv.diameter, Diameter::Finite(3), "diameter of AG(Z2 x Z4)");

    let z2cubed = Arc::new(build_ring(&parse_ring_spec("Z2 x Z2 x Z2").unwrap()).unwrap());
    let inv2 = build_ag_graph(&lattice_of(&z2cubed)).graph.invariants();
    assert_eq!(inv2.girth, Girth::Finite(3), "girth of AG(Z2 x Z2 x Z2)");

    println!(
        "[PASS] criterion 2: diameter(AG(Z2 x Z4)) = 3 and girth(AG(Z2 x Z2 x Z2)) = 3 exactly"
    );
}

#[test]
fn criterion_3_vertices_are_exactly_the_nonzero_proper_ideals() {
    let rings = corpus();
    for ring in &rings {
        let lat = lattice_of(ring);
        let ag = build_ag_graph(&lat);
        assert_eq!(
            ag.ids,
            lat.nonzero_proper_ids(),
            "vertex set of AG({}) misses a nonzero proper ideal",
            ring.name()
        );
    }
    println!(
        "[PASS] criterion 3: AG vertex set equals the nonzero proper ideals on all {} corpus rings",
        rings.len()
    );
}

#[test]
fn criterion_4_prime_cubes_complete_in_ag_but_not_in_gamma() {
    for p in [2u64, 3, 5] {
        let n = p * p * p;
        let ring = Arc::new(build_ring(&RingSpec::Zn(n)).unwrap());
        let lat = lattice_of(&ring);
        let ag = build_ag_graph(&lat).graph.invariants();
        assert!(ag.is_complete, "AG(Z{n}) should be complete");
        let gamma = build_zero_divisor_graph(&ring).graph.invariants();
        assert!(!gamma.is_complete, "Gamma(Z{n}) should not be complete");

        // The zero-divisors of Z_{p^3} form the ideal (p); its square is
        // (p^2), not the zero ideal.
        let z = lat.principal_id(p as usize);
        assert_ne!(
            lat.product(z, z),
            lat.zero_id(),
            "Z(Z{n})^2 should be nonzero"
        );
    }
    let z2xz2 = Arc::new(build_ring(&parse_ring_spec("Z2 x Z2").unwrap()).unwrap());
    let gamma = build_zero_divisor_graph(&z2xz2).graph.invariants();
    assert!(gamma.is_complete, "Gamma(Z2 x Z2) should be complete");

    println!(
        "[PASS] criterion 4: for p in {{2, 3, 5}}, AG(Z_p^3) complete, Gamma(Z_p^3) not, \
         Z(Z_p^3)^2 != (0); Gamma(Z2 x Z2) complete"
    );
}

#[test]
fn criterion_5_shape_checks_and_named_classifications() {
    let rings = corpus();
    let checks = [
        CheckId::StarCases,
        CheckId::CompleteCases,
        CheckId::UnivVertex,
        CheckId::SmallGraphs,
        CheckId::PrimeVerts,
        CheckId::SocleMax,
        CheckId::BrauerMin,
        CheckId::MaxAnn,
        CheckId::PrimeExists,
        CheckId::CyclicVert,
    ];
    let results = run_checks(&rings, &checks, Limits::default()).unwrap();
    let (passed, failed, na) = tally(&results);
    for r in &results {
        assert_ne!(
            r.verdict,
            Verdict::Fail,
            "{} failed on {}: {} ({:?})",
            r.check,
            r.ring,
            r.detail,
            r.witness
        );
    }
    assert_eq!(failed, 0);

    // Named classifications, asserted on the graph and on the check detail.
    let case = |name: &str, id: CheckId| {
        let ring = find(&rings, name);
        let out = run_checks(&[ring], &[id], Limits::default()).unwrap();
        out[0].detail.clone()
    };

    let z4 = build_ag_graph(&lattice_of(&find(&rings, "Z4"))).graph.invariants();
    assert_eq!((z4.vertex_count, z4.edge_count), (1, 0), "AG(Z4)");

    let z8 = build_ag_graph(&lattice_of(&find(&rings, "Z8"))).graph.invariants();
    assert!(z8.vertex_count == 2 && z8.edge_count == 1 && z8.is_complete, "AG(Z8)");
    assert!(case("Z8", CheckId::CompleteCases).contains("type (3)"));

    let z16 = build_ag_graph(&lattice_of(&find(&rings, "Z16"))).graph.invariants();
    assert!(z16.vertex_count == 3 && z16.edge_count == 2 && z16.is_star, "AG(Z16)");
    assert!(case("Z16", CheckId::StarCases).contains("case (iii)"));

    let z27 = build_ag_graph(&lattice_of(&find(&rings, "Z27"))).graph.invariants();
    assert!(z27.vertex_count == 2 && z27.edge_count == 1 && z27.is_complete, "AG(Z27)");
    assert!(case("Z27", CheckId::CompleteCases).contains("type (3)"));

    let q = build_ag_graph(&lattice_of(&find(&rings, "Z4[x]/(x^2, 2x)"))).graph.invariants();
    assert!(q.vertex_count == 4 && q.edge_count == 6 && q.is_complete, "AG(Z4[x]/(x^2, 2x))");
    assert!(case("Z4[x]/(x^2, 2x)", CheckId::CompleteCases).contains("type (2)"));

    println!(
        "[PASS] criterion 5: 10 shape checks x {} rings: {passed} passed, 0 failed, {na} n/a; \
         AG(Z4) single vertex, AG(Z8) and AG(Z27) complete pairs of type (3), \
         AG(Z16) a 3-vertex star of case (iii), AG(Z4[x]/(x^2, 2x)) complete on 4 \
         vertices of type (2)",
        rings.len()
    );
}

#[test]
fn criterion_6_enumeration_matches_the_subset_scan_oracle() {
    let rings = corpus();
    let mut checked = 0usize;
    for ring in rings.iter().filter(|r| r.order() <= 16) {
        let lat = lattice_of(ring);
        let fast: Vec<Vec<usize>> = (0..lat.count()).map(|id| lat.elements(id)).collect();
        let slow = naive::ideals_by_subset_scan(ring);
        assert_eq!(fast, slow, "ideal enumeration differs on {}", ring.name());
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} rings of order <= 16");
    println!(
        "[PASS] criterion 6: fast ideal enumeration equals the all-subsets scan on all \
         {checked} corpus rings of order <= 16"
    );
}

#[test]
fn criterion_7_divisor_and_table_backends_agree_through_64() {
    let report = crosscheck_zn(64, Limits::default()).unwrap();
    assert_eq!(report.total, 64);
    assert_eq!(
        report.agree, report.total,
        "discrepancies: {:?}",
        report.discrepancies
    );
    assert!(report.discrepancies.is_empty());
    println!("[PASS] criterion 7: crosscheck reports {}/{} agree", report.agree, report.total);
}

#[test]
fn criterion_8_prime_and_maximal_flags_match_quotient_structure() {
    let rings = corpus();
    let mut ideals_checked = 0usize;
    for ring in rings.iter().filter(|r| r.order() <= 32) {
        let lat = lattice_of(ring);
        for id in 0..lat.count() {
            if lat.size(id) == ring.order() {
                continue;
            }
            let q = quotient_ring(ring, &lat.elements(id)).unwrap();
            let domain = q.zero_divisors() == vec![q.zero()];
            let field = q.units().len() == q.order() - 1;
            let flags = lat.classify_ideal(id);
            assert_eq!(
                flags.is_prime,
                domain,
                "prime flag vs quotient domain on {} ideal {}",
                ring.name(),
                lat.label(id)
            );
            assert_eq!(
                flags.is_maximal,
                field,
                "maximal flag vs quotient field on {} ideal {}",
                ring.name(),
                lat.label(id)
            );
            ideals_checked += 1;
        }
    }
    println!(
        "[PASS] criterion 8: prime <=> quotient domain and maximal <=> quotient field on \
         {ideals_checked} proper ideals across rings of order <= 32"
    );
}

#[test]
fn criterion_9_verify_suite_is_byte_deterministic() {
    let run = || {
        let rings = corpus();
        let results = run_checks(&rings, &ALL_CHECKS, Limits::default()).unwrap();
        checks_json(&results).unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "verify suite JSON is not byte-stable");
    println!(
        "[PASS] criterion 9: two full verify runs serialize to byte-identical JSON \
         ({} bytes)",
        first.len()
    );
}
