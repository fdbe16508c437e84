//! Acceptance suite. One test per criterion; each prints a pass line, and
//! every tolerance is exact rational equality unless a runtime bound is
//! stated.
//!
//! Run with `cargo test -p pearl-blowup --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pearl_blowup::{builtin_example, run_report, Command};
use pearl_core::algebra::{
    homology_decompose, rank_over_fraction_field, smith_normal_form, NovikovScalar, ScalarMatrix,
};
use pearl_core::blowup::{check_admissible, monotone_weight, proper_transform_class, BlowupParams};
use pearl_core::floer::{assemble_floer_complex, blowup_floer_complex, floer_homology};
use pearl_core::model::{
    classify_pearl_count, morse_homology, CriticalPoint, DiskClass, FloerPairData, LagrangianData,
    ManifoldData, PearlCountRole, TrajectoryCount,
};
use pearl_core::pearl::{
    assemble_pearl_complex, blowup_pearl_complex, quantum_homology, PearlError,
};
use pearl_core::{rat, ratio, Rat};

// ---------------------------------------------------------------------------
// Criterion 1: Clifford blow-up reproduction
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_clifford_blowup_reproduction() {
    let start = Instant::now();
    let w = builtin_example("clifford-cp2").unwrap();
    let report = run_report(&w, Command::Blowup, "example clifford-cp2", false).unwrap();

    let adm = report.admissibility.as_ref().unwrap();
    assert!(adm.admissible);
    assert_eq!(adm.min_maslov_blowup, 2);
    assert_eq!(report.blowup.as_ref().unwrap().rho_sq, "1/3");
    assert_eq!(monotone_weight(&w.manifold), ratio(1, 3));

    let section = &report.pearl[0];
    assert_eq!(section.ring_min_maslov, 2);
    assert!(section.differential_zero);
    assert_eq!(section.verdict, "wide");
    let ranks: Vec<(i64, usize)> = section
        .homology
        .iter()
        .map(|r| (r.degree, r.free_rank))
        .collect();
    assert_eq!(ranks, vec![(0, 1), (1, 2), (2, 1)]);
    assert!(section.homology.iter().all(|r| r.torsion.is_empty()));

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "took {:?}, budget is 1 s",
        elapsed
    );
    println!("acceptance criterion 1 (clifford blow-up reproduction): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 2: correction ledger for the pair (p0, p1a)
// ---------------------------------------------------------------------------

#[test]
fn criterion_2_correction_ledger() {
    let w = builtin_example("clifford-cp2").unwrap();
    let l = &w.lagrangians[0];
    let params = w.blowup_params();
    let base = assemble_pearl_complex(&w.manifold, l).unwrap();
    let (transformed, corrections) = blowup_pearl_complex(&w.manifold, l, &params).unwrap();

    let corr = corrections
        .iter()
        .find(|c| c.from == "p0" && c.to == "p1a")
        .expect("ledger row for (p0, p1a)");
    assert_eq!(corr.classes, vec!["A0+A2".to_string(), "A1+A2".to_string()]);
    assert_eq!(corr.k, 2);

    // Entrywise: the base coefficient is 0, adding k = 2 keeps it 0 mod 2.
    let base_coeff = base.entry("p0", "p1a").support().contains(&rat(1));
    let new_coeff = transformed.entry("p0", "p1a").support().contains(&rat(1));
    assert!(!base_coeff);
    assert_eq!(new_coeff, base_coeff != (corr.k % 2 == 1));
    assert!(transformed.entry("p0", "p1a").is_zero());
    println!("acceptance criterion 2 (correction ledger for (p0, p1a)): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 3: inadmissibility gate and projective-space weights
// ---------------------------------------------------------------------------

#[test]
fn criterion_3_inadmissibility_gate() {
    let w = builtin_example("rp2-cp2").unwrap();
    let report = run_report(&w, Command::Blowup, "example rp2-cp2", false).unwrap();
    let adm = report.admissibility.as_ref().unwrap();
    assert!(!adm.admissible);
    assert_eq!(adm.min_maslov_blowup, 1);
    assert!(report.refused);
    assert!(report.pearl.is_empty(), "no homology may be computed");
    assert!(adm
        .diagnostics
        .iter()
        .any(|d| d == "minimal Maslov in blow-up = 1 < 2"));

    // Monotone weights of the projective family: rho^2 = (n-1)/(n+1).
    for n in 2..=10u32 {
        let m = ManifoldData::new(n, rat(2 * (i64::from(n) + 1)), true).unwrap();
        assert_eq!(
            monotone_weight(&m),
            ratio(i64::from(n) - 1, i64::from(n) + 1)
        );
    }
    println!("acceptance criterion 3 (inadmissibility gate + projective weights): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 4: unmarked fixtures transfer with equal homology
// ---------------------------------------------------------------------------

/// Random pearl fixture with no through-point markings. Generators of the
/// middle index are split into an inbound and an outbound side (likewise the
/// extremes), so every composition of contributions vanishes structurally
/// and the data is a complex by construction.
fn random_pearl_fixture(rng: &mut ChaCha8Rng) -> (ManifoldData, LagrangianData) {
    let lambda = *[2i64, 4, 6].choose(rng).unwrap();
    let m = ManifoldData::new(2, rat(lambda), true).unwrap();

    let n0 = rng.gen_range(1..=2usize);
    let n1 = rng.gen_range(1..=3usize);
    let n2 = rng.gen_range(0..=2usize);
    let mut points = Vec::new();
    for i in 0..n0 {
        points.push(CriticalPoint::new(&format!("a{}", i), 0));
    }
    for i in 0..n1 {
        points.push(CriticalPoint::new(&format!("b{}", i), 1));
    }
    for i in 0..n2 {
        points.push(CriticalPoint::new(&format!("c{}", i), 2));
    }
    let side = |rng: &mut ChaCha8Rng, count: usize| -> Vec<bool> {
        (0..count).map(|_| rng.gen_bool(0.5)).collect()
    };
    let out0 = side(rng, n0);
    let out1 = side(rng, n1);
    let out2 = side(rng, n2);

    let morse_only = rng.gen_bool(0.25);
    let mut classes = Vec::new();
    if morse_only {
        // A single Maslov-4 class: the base ring constant becomes 4 and the
        // blow-up constant 2, exercising the degree folding.
        classes.push(DiskClass::base("W", 4, rat(4) / rat(lambda), false));
    } else {
        let class_count = rng.gen_range(1..=2usize);
        for i in 0..class_count {
            classes.push(DiskClass::base(
                &format!("A{}", i),
                2,
                rat(2) / rat(lambda),
                false,
            ));
        }
        if rng.gen_bool(0.3) {
            classes.push(DiskClass::base("W", 4, rat(4) / rat(lambda), false));
        }
    }
    let quantum_class_names: Vec<String> = classes
        .iter()
        .filter(|c| c.maslov == 2)
        .map(|c| c.name.clone())
        .collect();

    let mut morse = Vec::new();
    let mut quantum = Vec::new();
    // Morse counts: index 1 -> 0 from outbound to inbound, 2 -> 1 likewise.
    for (j, pb) in out1.iter().enumerate() {
        for (i, pa) in out0.iter().enumerate() {
            if *pb && !*pa && rng.gen_bool(0.6) {
                morse.push(TrajectoryCount::morse(
                    &format!("b{}", j),
                    &format!("a{}", i),
                    rng.gen_range(1..=3),
                ));
            }
        }
    }
    for (k, pc) in out2.iter().enumerate() {
        for (j, pb) in out1.iter().enumerate() {
            if *pc && !*pb && rng.gen_bool(0.6) {
                morse.push(TrajectoryCount::morse(
                    &format!("c{}", k),
                    &format!("b{}", j),
                    rng.gen_range(1..=3),
                ));
            }
        }
    }
    if !morse_only {
        // Quantum counts: index 0 -> 1 (Maslov 2) and 1 -> 2, respecting the
        // same sides.
        for (i, pa) in out0.iter().enumerate() {
            for (j, pb) in out1.iter().enumerate() {
                if *pa && !*pb && rng.gen_bool(0.5) {
                    let class = quantum_class_names.choose(rng).unwrap();
                    quantum.push(TrajectoryCount::quantum(
                        &format!("a{}", i),
                        &format!("b{}", j),
                        class,
                        rng.gen_range(1..=2),
                    ));
                }
            }
        }
        for (j, pb) in out1.iter().enumerate() {
            for (k, pc) in out2.iter().enumerate() {
                if *pb && !*pc && rng.gen_bool(0.5) {
                    let class = quantum_class_names.choose(rng).unwrap();
                    quantum.push(TrajectoryCount::quantum(
                        &format!("b{}", j),
                        &format!("c{}", k),
                        class,
                        rng.gen_range(1..=2),
                    ));
                }
            }
        }
    }
    // Inert Maslov-4 records (nonempty spaces not through the blown-up
    // point): the transfer must ignore them.
    if classes.iter().any(|c| c.name == "W") && n1 > 0 && rng.gen_bool(0.5) {
        quantum.push(TrajectoryCount::quantum("a0", "b0", "W", 1));
    }

    let l = LagrangianData {
        name: "random".to_string(),
        dim: 2,
        critical_points: points,
        classes,
        morse_counts: morse,
        quantum_counts: quantum,
        betti_mod2: None,
    };
    (m, l)
}

fn random_floer_fixture(rng: &mut ChaCha8Rng) -> FloerPairData {
    let nx = rng.gen_range(1..=3usize);
    let ny = rng.gen_range(1..=3usize);
    let mut points = Vec::new();
    for i in 0..nx {
        points.push(format!("x{}", i));
    }
    for j in 0..ny {
        points.push(format!("y{}", j));
    }
    let mut classes = Vec::new();
    for i in 0..rng.gen_range(1..=2usize) {
        classes.push(DiskClass::base(
            &format!("S{}", i),
            1,
            Rat::new(rng.gen_range(1..=5), rng.gen_range(1..=3)),
            false,
        ));
    }
    if rng.gen_bool(0.4) {
        // Unmarked transfer-index strips with counts: ignored by the blow-up.
        classes.push(DiskClass::base("W", 3, rat(3), false));
    }
    let mut counts = Vec::new();
    for i in 0..nx {
        for j in 0..ny {
            if rng.gen_bool(0.5) {
                let class = classes.choose(rng).unwrap().name.clone();
                counts.push(TrajectoryCount::quantum(
                    &format!("x{}", i),
                    &format!("y{}", j),
                    &class,
                    rng.gen_range(0..=2),
                ));
            }
        }
    }
    FloerPairData {
        intersection_points: points,
        strip_classes: classes,
        strip_counts: counts,
        min_maslov_assertion: true,
    }
}

#[test]
fn criterion_4_unmarked_transfer_preserves_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC4);

    for round in 0..200 {
        let (m, l) = random_pearl_fixture(&mut rng);
        let params = BlowupParams::monotone(&m);
        let base = assemble_pearl_complex(&m, &l)
            .unwrap_or_else(|e| panic!("round {}: base assembly failed: {}", round, e));
        let betti = morse_homology(&l).unwrap().free_ranks();
        let base_h = quantum_homology(&base, &betti).unwrap();
        let (transformed, corrections) = blowup_pearl_complex(&m, &l, &params)
            .unwrap_or_else(|e| panic!("round {}: transform failed: {}", round, e));
        assert!(corrections.is_empty(), "no markings, no corrections");
        let new_h = quantum_homology(&transformed, &betti).unwrap();
        assert_eq!(
            base_h.free_ranks(),
            new_h.free_ranks(),
            "round {}: per-degree ranks changed",
            round
        );
        assert_eq!(base_h.has_torsion(), new_h.has_torsion());
        assert_eq!(base_h.verdict, new_h.verdict);
    }

    let m = ManifoldData::new(2, rat(2), true).unwrap();
    let params = BlowupParams::monotone(&m);
    let verdict = check_admissible(&m, &[]);
    for round in 0..200 {
        let pair = random_floer_fixture(&mut rng);
        let base = assemble_floer_complex(&pair, 2)
            .unwrap_or_else(|e| panic!("round {}: floer assembly failed: {}", round, e));
        let transformed = blowup_floer_complex(&pair, &params, &verdict)
            .unwrap_or_else(|e| panic!("round {}: floer transform failed: {}", round, e));
        assert_eq!(base.differential(), transformed.differential());
        assert_eq!(floer_homology(&base), floer_homology(&transformed));
    }

    // Equal-k marking swaps on the flagship fixture do not change homology.
    let w = builtin_example("clifford-cp2").unwrap();
    let l = &w.lagrangians[0];
    let params = w.blowup_params();
    let (c0, _) = blowup_pearl_complex(&w.manifold, l, &params).unwrap();
    let h0 = quantum_homology(&c0, &[1, 2, 1]).unwrap();
    let mut swapped = l.clone();
    for class in &mut swapped.classes {
        match class.name.as_str() {
            "A0+A2" => class.through_point = false,
            "A0+A1" => class.through_point = true,
            _ => {}
        }
    }
    for count in &mut swapped.quantum_counts {
        if count.class_name.as_deref() == Some("A0+A2")
            && classify_pearl_count(&w.manifold, l, count).unwrap() == PearlCountRole::UniruledMark
        {
            count.class_name = Some("A0+A1".to_string());
        }
    }
    let (c1, corrections) = blowup_pearl_complex(&w.manifold, &swapped, &params).unwrap();
    assert!(corrections.iter().all(|c| c.k == 2));
    let h1 = quantum_homology(&c1, &[1, 2, 1]).unwrap();
    assert_eq!(h0.free_ranks(), h1.free_ranks());
    assert_eq!(h0.verdict, h1.verdict);

    println!(
        "acceptance criterion 4 (unmarked transfer preserves homology, 200+200 fixtures): PASS"
    );
}

// ---------------------------------------------------------------------------
// Criterion 5: monotonicity is preserved by proper transforms
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_monotonicity_preservation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC5);
    for round in 0..1000 {
        let n = rng.gen_range(2..=8u32);
        let lambda = Rat::new(rng.gen_range(1..=24), rng.gen_range(1..=6));
        let m = ManifoldData::new(n, lambda, true).unwrap();
        let params = BlowupParams::monotone(&m);
        // Sample the base relation mu = lambda * area exactly.
        let mu = rng.gen_range(1..=30i64);
        let area = rat(mu) / lambda;
        let class = DiskClass::base("A", mu, area, rng.gen_bool(0.5));
        let mult = rng.gen_range(0..=5i64);
        let t = proper_transform_class(&class, mult, &params).unwrap();
        assert_eq!(
            rat(t.maslov),
            lambda * t.area_over_pi,
            "round {}: transform broke monotonicity",
            round
        );
        if mult == 0 {
            assert_eq!(t.maslov, class.maslov);
            assert_eq!(t.area_over_pi, class.area_over_pi);
            assert_eq!(t.through_point, class.through_point);
        } else {
            assert!(!t.through_point);
        }
    }
    println!("acceptance criterion 5 (monotonicity preserved on 1000 samples): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 6: algebra oracle equivalence
// ---------------------------------------------------------------------------

fn random_scalar(rng: &mut ChaCha8Rng) -> NovikovScalar {
    let terms = rng.gen_range(0..=3);
    NovikovScalar::from_exponents((0..terms).map(|_| rat(rng.gen_range(-3..=3))))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ScalarMatrix {
    let mut m = ScalarMatrix::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(0.7) {
                m.set(i, j, random_scalar(rng));
            }
        }
    }
    m
}

/// Three-term complex with known middle homology: planted invariant factors
/// scrambled by paired row/column operations that keep the composition zero.
fn planted_complex(
    rng: &mut ChaCha8Rng,
) -> (ScalarMatrix, ScalarMatrix, usize, Vec<NovikovScalar>) {
    let pool = [
        NovikovScalar::one(),
        NovikovScalar::from_exponents([rat(0), rat(1)]),
        NovikovScalar::from_exponents([rat(0), rat(1), rat(3)]),
        NovikovScalar::from_exponents([rat(0), rat(2)]),
    ];
    let r = rng.gen_range(0..=3);
    let h = rng.gen_range(0..=3);
    let s = rng.gen_range(0..=2);
    let middle = r + h + s; // ambient rank up to 8
    let mut factors: Vec<NovikovScalar> = Vec::new();
    let mut acc = NovikovScalar::one();
    for _ in 0..r {
        acc = acc.mul(&pool[rng.gen_range(0..pool.len())]);
        factors.push(acc.clone());
    }
    let mut d_in = ScalarMatrix::zero(middle, r + 1);
    for (i, f) in factors.iter().enumerate() {
        d_in.set(i, i, f.clone());
    }
    let mut d_out = ScalarMatrix::zero(s + 1, middle);
    for i in 0..s {
        d_out.set(i, r + h + i, pool[rng.gen_range(1..pool.len())].clone());
    }
    for _ in 0..3 * middle.max(1) {
        if middle < 2 {
            break;
        }
        let a = rng.gen_range(0..middle);
        let b = rng.gen_range(0..middle);
        if a == b {
            continue;
        }
        if rng.gen_bool(0.5) {
            d_in.swap_rows(a, b);
            d_out.swap_cols(a, b);
        } else {
            let f = NovikovScalar::monomial(rat(rng.gen_range(-1..=1)));
            d_in.add_scaled_row(a, b, &f);
            d_out.add_scaled_col(b, a, &f);
        }
    }
    let torsion = factors
        .iter()
        .filter(|f| !f.is_monomial())
        .map(|f| f.normalized().1)
        .collect();
    (d_in, d_out, h, torsion)
}

#[test]
fn criterion_6_algebra_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC6);

    for round in 0..500 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = random_matrix(&mut rng, rows, cols);
        let snf = smith_normal_form(&m).unwrap();
        assert_eq!(
            snf.rank(),
            rank_over_fraction_field(&m),
            "round {}: SNF diagonal count disagrees with elimination rank",
            round
        );
        assert_eq!(
            snf.u.mul(&m).mul(&snf.v),
            snf.d,
            "round {}: U M V != D",
            round
        );
        let div = snf.divisors();
        for w in div.windows(2) {
            assert!(
                w[0].divides(&w[1]).unwrap(),
                "round {}: chain broken",
                round
            );
        }
    }

    for round in 0..200 {
        let (d_in, d_out, free, torsion) = planted_complex(&mut rng);
        assert!(d_out.mul(&d_in).is_zero());
        let h = homology_decompose(&d_in, &d_out).unwrap();
        assert_eq!(h.free_rank, free, "round {}: free rank", round);
        let mut got = h.torsion.clone();
        let mut expected = torsion;
        got.sort();
        expected.sort();
        assert_eq!(got, expected, "round {}: torsion divisors", round);
        // Brute-force dimension count over the fraction field.
        let ambient = d_in.rows();
        assert_eq!(
            h.free_rank,
            ambient - rank_over_fraction_field(&d_in) - rank_over_fraction_field(&d_out)
        );
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "took {:?}, budget is 30 s",
        elapsed
    );
    println!(
        "acceptance criterion 6 (algebra oracle equivalence, 500 SNF + 200 complexes in {:?}): PASS",
        elapsed
    );
}

// ---------------------------------------------------------------------------
// Criterion 7: single corrupted counts are rejected, never absorbed
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_single_count_mutations_are_rejected() {
    let w = builtin_example("clifford-cp2").unwrap();
    let m = &w.manifold;
    let l = &w.lagrangians[0];
    let params = w.blowup_params();

    // The unmutated fixture passes the whole pipeline.
    assert!(blowup_pearl_complex(m, l, &params).is_ok());

    let run = |mutated: &LagrangianData| -> Result<(), PearlError> {
        assemble_pearl_complex(m, mutated)?;
        blowup_pearl_complex(m, mutated, &params)?;
        Ok(())
    };

    let mut checked = 0;
    let total_counts = l.morse_counts.len() + l.quantum_counts.len();
    for slot in 0..total_counts {
        let (is_morse, idx) = if slot < l.morse_counts.len() {
            (true, slot)
        } else {
            (false, slot - l.morse_counts.len())
        };
        let original = if is_morse {
            &l.morse_counts[idx]
        } else {
            &l.quantum_counts[idx]
        };
        let role = classify_pearl_count(m, l, original).unwrap();

        let mutations: Vec<u64> = match role {
            // Parity flips of a counted family.
            PearlCountRole::Morse | PearlCountRole::Differential => {
                let mut v = vec![original.count + 1];
                if original.count > 0 {
                    v.push(original.count - 1);
                }
                v
            }
            // A mark records a nonempty trajectory space; the one meaningful
            // flip is nonempty -> empty.
            PearlCountRole::UniruledMark => vec![0],
        };
        for new_count in mutations {
            let mut mutated = l.clone();
            if is_morse {
                mutated.morse_counts[idx].count = new_count;
            } else {
                mutated.quantum_counts[idx].count = new_count;
            }
            match run(&mutated) {
                Err(PearlError::NotAComplex(_)) => {}
                other => panic!(
                    "mutation of count #{} to {} was not rejected as a broken complex: {:?}",
                    slot,
                    new_count,
                    other.err()
                ),
            }
            checked += 1;
        }

        // A mark with count 2 still records a nonempty space: accepting it is
        // correct, and the result is unchanged.
        if role == PearlCountRole::UniruledMark {
            let mut mutated = l.clone();
            mutated.quantum_counts[idx].count = 2;
            let (c, corrections) = blowup_pearl_complex(m, &mutated, &params).unwrap();
            let (c0, corrections0) = blowup_pearl_complex(m, l, &params).unwrap();
            assert_eq!(c.differential(), c0.differential());
            assert_eq!(corrections, corrections0);
        }
    }
    assert_eq!(checked, 4 * 2 + 8 * 2 + 8, "mutation inventory");
    println!(
        "acceptance criterion 7 (all {} single-count mutations rejected): PASS",
        checked
    );
}
