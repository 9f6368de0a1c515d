use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schreyer_core::hilbert::{numerator_from_resolution, HilbertNumerator};
use schreyer_core::resolution::{free_resolution, GradedMatrix};
use schreyer_curves::graded::{binomial, cokernel_dimension, graded_piece_rank};
use schreyer_curves::hr_module::{finite_length_series, forcing_kernel};
use schreyer_curves::pipeline::attempt;
use schreyer_curves::{
    build_hr_module, curve_ring, run_pipeline, ConstructionRecipe, CurveError, CurveReport, ModuleShape,
    SmoothnessVerdict, DEFAULT_PRIME,
};

fn build(d: i64, g: i64, seed: u64) -> CurveReport {
    let recipe = ConstructionRecipe::builtin(d, g, DEFAULT_PRIME, seed).unwrap();
    let mut gates = Vec::new();
    attempt(&recipe, &mut gates).unwrap_or_else(|e| panic!("seed {seed}: {e}; {gates:?}"))
}

/// `dim (I_C)_n` by ranking the products of generators with monomials.
fn ideal_dimension(r: &CurveReport, n: i32) -> i64 {
    let m = GradedMatrix::from_ideal(&r.generators).unwrap();
    graded_piece_rank(&r.ring, &m, n) as i64
}

/// Numerator of the section ring `⊕ H^0(O_C(n))`, whose Hilbert function is
/// `HF_{S_C}(n) + h^1(I_C(n))`, checked against the table.
fn section_ring_numerator(r: &CurveReport) -> HilbertNumerator {
    let num = r.curve_numerator.add(&r.recipe.module_series.times_one_minus_t(4));
    for row in &r.hilbert_table {
        assert_eq!(num.series_coefficient(4, row.n), row.h0_curve);
    }
    num
}

fn check_table_against_linear_algebra(r: &CurveReport) {
    for row in &r.hilbert_table {
        let s = binomial(row.n as usize + 3, 3) as i64;
        assert_eq!(row.h0_space, s);
        assert_eq!(row.h0_ideal, ideal_dimension(r, row.n), "h0(I_C({}))", row.n);
        assert_eq!(row.h0_curve, s - row.h0_ideal + row.h1_ideal);
        // h^1 is read off the curve, the target comes from the module
        assert_eq!(row.h1_ideal, r.recipe.module_series.coefficient(row.n), "h1(I_C({}))", row.n);
    }
    assert_eq!(r.deficiency_series(), r.recipe.module_series);
}

#[test]
fn curve_of_degree_11_and_genus_10() {
    let r = build(11, 10, 1);
    assert_eq!((r.degree, r.genus), (11, 10));
    assert_eq!(r.module_betti.row_string(2), "3 8 2 . .");
    assert_eq!(r.module_betti.row_string(3), ". . 12 13 4");
    assert_eq!(r.curve_betti.row_string(4), ". 10 13 4");
    assert_eq!(r.generators.len(), 10);
    assert!(r.generators.iter().all(|g| g.homogeneous_degree() == Some(5)));
    let rows: Vec<_> = r.hilbert_table.iter().map(|h| h.as_tuple()).collect();
    assert_eq!(
        rows,
        vec![
            (0, 0, 1, 1, 0),
            (1, 0, 4, 4, 0),
            (2, 3, 13, 10, 0),
            (3, 4, 24, 20, 0),
            (4, 0, 35, 35, 0),
            (5, 0, 46, 56, 10),
            (6, 0, 57, 84, 27),
        ]
    );
    check_table_against_linear_algebra(&r);
    // natural resolution "2: 3 8 2 / 3: . . 2" of the section ring
    assert_eq!(
        section_ring_numerator(&r),
        HilbertNumerator::from_terms([(0, 1), (2, 3), (3, -8), (4, 2), (5, 2)])
    );
    assert_eq!(r.saturation_steps, 0);
    assert_eq!(r.smoothness, SmoothnessVerdict::Smooth);
    assert!(r.maximal_rank.holds);
}

#[test]
fn curve_of_degree_13_and_genus_12() {
    let r = build(13, 12, 1);
    assert_eq!((r.degree, r.genus), (13, 12));
    assert_eq!(r.module_betti.row_string(2), "5 12 4 . .");
    assert_eq!(r.module_betti.row_string(3), ". . 4 . .");
    assert_eq!(r.module_betti.row_string(4), ". . 9 16 6");
    assert_eq!(r.curve_betti.row_string(4), ". 2 . .");
    assert_eq!(r.curve_betti.row_string(5), ". 9 16 6");
    check_table_against_linear_algebra(&r);
    let h1: Vec<_> = r.hilbert_table.iter().map(|h| h.h1_ideal).collect();
    assert_eq!(&h1[..6], &[0, 0, 5, 8, 6, 0]);
    // natural resolution "2: 5 12 4 / 3: . . 2" of the section ring
    assert_eq!(
        section_ring_numerator(&r),
        HilbertNumerator::from_terms([(0, 1), (2, 5), (3, -12), (4, 4), (5, 2)])
    );
    assert_eq!(r.saturation_steps, 0);
    assert_eq!(r.smoothness, SmoothnessVerdict::Smooth);
}

#[test]
fn module_numerators_come_from_betti_tables() {
    let ring = curve_ring(DEFAULT_PRIME).unwrap();
    for (d, g) in [(11, 10), (13, 12)] {
        let recipe = ConstructionRecipe::builtin(d, g, DEFAULT_PRIME, 3).unwrap();
        let m = build_hr_module(&ring, &recipe, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let res = free_resolution(&ring, &m.presentation, true, None).unwrap();
        let num = numerator_from_resolution(&res.betti_table());
        assert_eq!(num, recipe.module_series.times_one_minus_t(4));
        // dim M_n straight from the presentation
        for n in 0..7 {
            let dim = cokernel_dimension(&ring, &m.presentation, n) as i64;
            assert_eq!(dim, recipe.module_series.coefficient(n));
        }
    }
}

#[test]
fn forcing_kernel_has_dimension_eight() {
    let ring = curve_ring(DEFAULT_PRIME).unwrap();
    let mut exact = 0;
    for seed in 0..10 {
        let k = forcing_kernel(&ring, 12, 4, 2, &mut ChaCha8Rng::seed_from_u64(seed));
        assert!(k.len() >= 8);
        exact += usize::from(k.len() == 8);
    }
    assert!(exact >= 9, "{exact} of 10");
}

#[test]
fn unforced_presentation_misses_the_target() {
    let ring = curve_ring(DEFAULT_PRIME).unwrap();
    let mut recipe = ConstructionRecipe::builtin(13, 12, DEFAULT_PRIME, 0).unwrap();
    recipe.shape = ModuleShape::Random {
        rows: vec![2; 5],
        cols: vec![3; 12],
    };
    let err = build_hr_module(&ring, &recipe, &mut ChaCha8Rng::seed_from_u64(0)).unwrap_err();
    assert!(matches!(err, CurveError::DegenerateSample(_)), "{err}");
    let m = schreyer_curves::graded::random_graded_matrix(&ring, &[2; 5], &[3; 12], &mut ChaCha8Rng::seed_from_u64(0));
    assert_eq!(
        finite_length_series(&ring, &m),
        Some(HilbertNumerator::from_terms([(2, 5), (3, 8), (4, 2)]))
    );
}

#[test]
fn identical_seeds_give_identical_reports() {
    let a = build(11, 10, 5).summary();
    let b = build(11, 10, 5).summary();
    assert_eq!(a, b);
    let c = build(11, 10, 6).summary();
    assert_ne!(a.generators, c.generators);
}

#[test]
fn pipeline_logs_every_attempt() {
    let recipe = ConstructionRecipe::builtin(11, 10, DEFAULT_PRIME, 40).unwrap();
    let out = run_pipeline(&recipe, 3);
    assert!(!out.attempts.is_empty());
    assert!(out.attempts.last().unwrap().succeeded());
    for (k, log) in out.attempts.iter().enumerate() {
        assert_eq!(log.seed, 40 + k as u64);
    }
    let report = out.into_result().unwrap();
    assert_eq!((report.degree, report.genus), (11, 10));

    // a recipe that can never pass its module gate exhausts the budget
    let mut bad = recipe.clone();
    bad.module_series = HilbertNumerator::from_terms([(2, 1)]);
    let out = run_pipeline(&bad, 2);
    assert_eq!(out.attempts.len(), 2);
    assert!(out.attempts.iter().all(|a| a.gates[0].gate == "module" && !a.gates[0].passed));
    assert!(matches!(out.into_result(), Err(CurveError::Exhausted { attempts: 2 })));
}
