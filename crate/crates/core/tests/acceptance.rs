//! Acceptance suite: one test per exit criterion, each printing a pass/fail
//! line. Everything is exact integer equality; there are no tolerances.

use pursuit_core::game::GameConfig;
use pursuit_core::graph::{capture_family, write_graph6};
use pursuit_core::harness::{
    find_claim, for_each_labeled_connected, scan_graph6, ClaimStatus, RunCtx,
};
use pursuit_core::solver::solve;
use std::io::Write;

fn check(criterion: &str, claim_ids: &[&str]) {
    let ctx = RunCtx::default();
    let mut all_hold = true;
    let mut details = Vec::new();
    for id in claim_ids {
        let claim = find_claim(id).unwrap_or_else(|| panic!("claim {id} is registered"));
        let record = claim.run(&ctx);
        let ok = record.status == ClaimStatus::Holds;
        all_hold &= ok;
        details.push(format!(
            "{id}: {} (expected {}, computed {})",
            record.status, record.expected, record.computed
        ));
    }
    println!(
        "acceptance {criterion}: {}",
        if all_hold { "PASS" } else { "FAIL" }
    );
    for d in &details {
        println!("    {d}");
    }
    assert!(all_hold, "criterion {criterion} failed: {details:?}");
}

#[test]
fn criterion_01_hypercube_cop_numbers() {
    check("1 hypercubes d=2..6", &["hypercube_speed2"]);
}

#[test]
fn criterion_02_three_cop_evidence() {
    // Two-factor path grids fall to a single fast cop, so the three-cop
    // computational evidence lives on the square tori with a shared factor;
    // both readings are pinned here.
    check(
        "2 torus 7x7 needs three cops, path grid needs one",
        &["torus_7x7_speed2", "grid_2d_speed2"],
    );
}

#[test]
fn criterion_03_capture_time_family() {
    check(
        "3 capture-time family",
        &["capture_family_solver", "capture_family_partition"],
    );
    // One fast cop wins on every family member up to order 60.
    let cfg = GameConfig::speed(1, 2);
    for n in 9..=60 {
        let g = capture_family(n).unwrap();
        let res = solve(&g, &cfg).unwrap();
        assert!(
            res.cop_win,
            "one speed-2 cop must win on the order-{n} member"
        );
    }
    println!("acceptance 3b single-cop sweep to order 60: PASS");
}

#[test]
fn criterion_04_subdivided_complete_graphs() {
    check(
        "4 subdivision bounds",
        &[
            "subdivided_complete_speed2",
            "subdivided_complete_speed3",
            "subdivision_sandwich_speed2",
        ],
    );
}

#[test]
fn criterion_05_power_equivalence() {
    check("5 power-graph equivalence", &["graphpower_equivalence"]);
}

#[test]
fn criterion_06_strong_cycle_gadget() {
    check("6 strong cycle powers", &["strong_cycle_gadget"]);
}

#[test]
fn criterion_07_sequence_realizers() {
    check("7 sequence realizers", &["realizer_21", "realizer_331"]);
}

#[test]
fn criterion_08_projective_planes() {
    check(
        "8 projective plane square",
        &["projective_plane_order2", "projective_robber_survival"],
    );
}

#[test]
fn criterion_09_coprime_tori() {
    check(
        "9 coprime tori",
        &["coprime_tori_semiactive", "two_cycles_speed2"],
    );
}

#[test]
fn criterion_10_tree_product_grids() {
    check(
        "10 path-product grids",
        &["grid_2d_speed2", "grid_3d_speed2"],
    );
}

#[test]
fn criterion_11_hypercube_lower_bound_instance() {
    check("11 one cop loses on the 9-cube", &["q9_one_cop_escape"]);
}

#[test]
fn criterion_12_variant_chain_and_monotonicity() {
    check(
        "12 variant chain and speed monotonicity",
        &["variant_chain_speed2", "speed_factor_monotone"],
    );
}

#[test]
fn criterion_13_classic_anchors_and_catalog_scan() {
    check(
        "13 classic tree products",
        &["trees_product_classic", "classic_capture_order7"],
    );

    // The same extremal value through the catalog-scanning pipeline: write
    // every labeled connected order-7 graph as graph6 and scan the file.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("order7.g6");
    let mut file = std::io::BufWriter::new(std::fs::File::create(&path).unwrap());
    for_each_labeled_connected(7, |g| {
        writeln!(file, "{}", write_graph6(g).unwrap()).unwrap();
    })
    .unwrap();
    file.flush().unwrap();
    let file = std::fs::File::open(&path).unwrap();
    let report = scan_graph6(std::io::BufReader::new(file), 7, 1, 50_000).unwrap();
    println!(
        "acceptance 13b order-7 catalog scan: {} (max {:?} over {} cop-win graphs, {} spot checks)",
        if report.max_capture_time == Some(3) {
            "PASS"
        } else {
            "FAIL"
        },
        report.max_capture_time,
        report.cop_win,
        report.spot_checks
    );
    assert_eq!(report.max_capture_time, Some(3));
    assert!(report.spot_checks > 0);
    assert!(!report.witnesses.is_empty());
}

#[test]
fn criterion_14_budget_skips_are_reported() {
    let ctx = RunCtx::default();
    let records: Vec<_> = [
        "two_cycles_k2",
        "nonincreasing_long_sequence",
        "capt_star_speed2_order9",
        "capt_star_speed2_order10",
        "torus_8x8_speed2",
        "torus_9x9_speed2",
    ]
    .iter()
    .map(|id| find_claim(id).expect("registered").run(&ctx))
    .collect();
    for r in &records {
        assert!(
            matches!(r.status, ClaimStatus::Skipped { .. }),
            "{} must be reported as skipped, got {}",
            r.id,
            r.status
        );
    }
    let budget_reasons = records
        .iter()
        .filter(|r| r.id == "two_cycles_k2" || r.id == "nonincreasing_long_sequence")
        .all(|r| matches!(&r.status, ClaimStatus::Skipped { reason } if reason.contains("states")));
    println!(
        "acceptance 14 over-budget work reported as skipped: {}",
        if budget_reasons { "PASS" } else { "FAIL" }
    );
    assert!(
        budget_reasons,
        "budget skips must carry state-count evidence"
    );
}
