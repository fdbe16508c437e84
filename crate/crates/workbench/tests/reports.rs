//! Library-level pipeline tests: expected command outcomes on the built-in
//! fixtures, and report determinism.

use pearl_blowup::{builtin_example, parse_spec, run_report, Command};

#[test]
fn clifford_qh_is_wide_with_torus_ranks() {
    let w = builtin_example("clifford-cp2").unwrap();
    let report = run_report(&w, Command::Qh, "t", false).unwrap();
    let section = &report.pearl[0];
    assert_eq!(section.verdict, "wide");
    assert!(section.differential_zero);
    let ranks: Vec<usize> = section.homology.iter().map(|r| r.free_rank).collect();
    assert_eq!(ranks, vec![1, 2, 1]);
    assert_eq!(section.reference_betti, vec![1, 2, 1]);
}

#[test]
fn acyclic_pair_qh_is_narrow() {
    let w = builtin_example("acyclic-pair").unwrap();
    let report = run_report(&w, Command::Qh, "t", false).unwrap();
    assert_eq!(report.pearl[0].verdict, "narrow");
    assert!(report.pearl[0].homology.iter().all(|r| r.free_rank == 0));
}

#[test]
fn point_lagrangian_has_a_point_homology() {
    let w = builtin_example("point-lagrangian").unwrap();
    let report = run_report(&w, Command::Qh, "t", false).unwrap();
    let ranks: Vec<usize> = report.pearl[0]
        .homology
        .iter()
        .map(|r| r.free_rank)
        .collect();
    assert_eq!(ranks, vec![1, 0, 0]);
}

#[test]
fn rp2_qh_still_computes_on_the_base() {
    // The inadmissibility gate concerns the blow-up only; the base quantum
    // homology of the projective plane is the full Morse homology.
    let w = builtin_example("rp2-cp2").unwrap();
    let report = run_report(&w, Command::Qh, "t", false).unwrap();
    assert_eq!(report.pearl[0].verdict, "wide");
    let ranks: Vec<usize> = report.pearl[0]
        .homology
        .iter()
        .map(|r| r.free_rank)
        .collect();
    assert_eq!(ranks, vec![1, 1, 1]);
}

#[test]
fn floer_pipelines_on_the_displaceable_pair() {
    let w = builtin_example("acyclic-pair").unwrap();
    let hf = run_report(&w, Command::Hf, "t", false).unwrap();
    assert_eq!(hf.floer[0].homology_rank, 0);
    let hf_blowup = run_report(&w, Command::HfBlowup, "t", false).unwrap();
    assert_eq!(hf_blowup.floer[0].homology_rank, 0);
}

#[test]
fn check_summarizes_the_verdict() {
    let w = builtin_example("clifford-cp2").unwrap();
    let report = run_report(&w, Command::Check, "t", false).unwrap();
    let adm = report.admissibility.as_ref().unwrap();
    assert!(adm.admissible);
    assert!(!report.refused);

    let w = builtin_example("rp2-cp2").unwrap();
    let report = run_report(&w, Command::Check, "t", false).unwrap();
    assert!(!report.admissibility.as_ref().unwrap().admissible);
    assert!(report.refused);
}

#[test]
fn rendering_is_deterministic_in_process() {
    for name in [
        "clifford-cp2",
        "rp2-cp2",
        "acyclic-pair",
        "point-lagrangian",
    ] {
        let w = builtin_example(name).unwrap();
        for command in [Command::Check, Command::Qh, Command::Blowup] {
            let a = run_report(&w, command, "t", true);
            let b = run_report(&w, command, "t", true);
            match (a, b) {
                (Ok(ra), Ok(rb)) => {
                    assert_eq!(ra.render_text(), rb.render_text());
                    assert_eq!(ra.render_json(), rb.render_json());
                }
                (Err(_), Err(_)) => {}
                _ => panic!("nondeterministic outcome for {} {:?}", name, command.name()),
            }
        }
    }
}

#[test]
fn workspace_round_trip_survives_a_full_pipeline() {
    let w = builtin_example("clifford-cp2").unwrap();
    let text = pearl_blowup::document::render_document(&w);
    let reparsed = parse_spec(&text).unwrap();
    let a = run_report(&w, Command::Blowup, "t", false).unwrap();
    let b = run_report(&reparsed, Command::Blowup, "t", false).unwrap();
    assert_eq!(a.render_text(), b.render_text());
}

#[test]
fn one_bad_member_blocks_the_whole_collection() {
    // A collection is admissible only if every member is: adding the
    // projective plane to the Clifford torus drags the blow-up minimal
    // Maslov number to 1 and the blowup command refuses.
    let torus = builtin_example("clifford-cp2").unwrap();
    let plane = builtin_example("rp2-cp2").unwrap();
    let mut both = torus.clone();
    both.lagrangians.extend(plane.lagrangians.clone());
    let report = run_report(&both, Command::Blowup, "t", false).unwrap();
    let adm = report.admissibility.as_ref().unwrap();
    assert!(!adm.admissible);
    assert_eq!(adm.min_maslov_blowup, 1);
    assert!(report.refused);
    assert!(report.pearl.is_empty());

    // Two admissible members compute independently.
    let point = builtin_example("point-lagrangian").unwrap();
    let mut pair = torus.clone();
    // Same manifold constants are required; the point fixture uses a
    // different lambda, so rebuild it on the torus manifold.
    let mut point_l = point.lagrangians[0].clone();
    point_l.name = "second".to_string();
    pair.lagrangians.push(point_l);
    let report = run_report(&pair, Command::Blowup, "t", false).unwrap();
    assert!(report.admissibility.as_ref().unwrap().admissible);
    assert_eq!(report.pearl.len(), 2);
    assert_eq!(report.pearl[0].verdict, "wide");
    assert_eq!(report.pearl[1].verdict, "wide");
}
