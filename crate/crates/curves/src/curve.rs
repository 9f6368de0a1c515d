//! From a finite length module to the ideal of a space curve.

use rand::RngCore;
use schreyer_core::groebner::{default_saturation_cap, groebner_basis, saturate, GroebnerBasis, Saturator};
use schreyer_core::hilbert::{degree_genus, numerator_from_resolution, HilbertNumerator};
use schreyer_core::linalg::DenseMatrix;
use schreyer_core::resolution::{free_resolution, resolve_ideal, BettiTable, FreeResolution, GradedMatrix};
use schreyer_core::{Monomial, Polynomial, PrimeField, Ring};
use serde::{Deserialize, Serialize};

use crate::graded::{binomial, cokernel_dimension, graded_piece_kernel, random_graded_matrix};
use crate::hr_module::HartshorneRaoModule;
use crate::rank::{maximal_rank_check, MaximalRankReport};
use crate::recipe::ConstructionRecipe;
use crate::smooth::{smoothness_check, SmoothnessVerdict};
use crate::CurveError;

/// One row of the table of cohomology dimensions of twists of the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRow {
    pub n: i32,
    /// `h^1(I_C(n))`
    pub h1_ideal: i64,
    /// `h^0(O_C(n))`
    pub h0_curve: i64,
    /// `h^0(O_P3(n))`
    pub h0_space: i64,
    /// `h^0(I_C(n))`
    pub h0_ideal: i64,
}

impl HilbertRow {
    pub fn as_tuple(&self) -> (i32, i64, i64, i64, i64) {
        (self.n, self.h1_ideal, self.h0_curve, self.h0_space, self.h0_ideal)
    }
}

/// Verified invariants of a constructed curve.
#[derive(Clone, Debug)]
pub struct CurveReport {
    pub recipe: ConstructionRecipe,
    pub ring: Ring<PrimeField>,
    /// Minimal generators of the saturated ideal.
    pub generators: Vec<Polynomial<PrimeField>>,
    pub groebner: GroebnerBasis<PrimeField>,
    pub degree: i64,
    pub genus: i64,
    pub module_betti: BettiTable,
    pub curve_betti: BettiTable,
    pub curve_numerator: HilbertNumerator,
    pub hilbert_table: Vec<HilbertRow>,
    pub saturation_steps: usize,
    pub smoothness: SmoothnessVerdict,
    pub maximal_rank: MaximalRankReport,
    /// Seed of the attempt that produced the curve.
    pub seed: u64,
}

/// `h^1(I_C(n))` for every `n` in `range`, through local duality:
/// `H^1_*(I_C)_n` is dual to `Ext^3(S_C, S)_{-n-4}`, the cokernel of the
/// transposed third map of a resolution of `S_C`.
pub fn hartshorne_rao_dimensions(
    res: &FreeResolution<PrimeField>,
    range: std::ops::RangeInclusive<i32>,
) -> Vec<i64> {
    let ring = res.ring();
    let n = ring.nvars() as i32;
    let dual = ext_presentation(res, (n - 1) as usize);
    range
        .map(|k| match &dual {
            Some(m) => cokernel_dimension(ring, m, -k - n) as i64,
            None => 0,
        })
        .collect()
}

/// Presentation of `Ext^i(S/I, S)` as the cokernel of `φ_i^t`, restricted to
/// the kernel of `φ_{i+1}^t` when `F_{i+1}` is nonzero; `None` when
/// `F_i = 0`. Only used for `i` equal to the resolution length, where the
/// cokernel is the full Ext group.
pub fn ext_presentation(res: &FreeResolution<PrimeField>, i: usize) -> Option<GradedMatrix<PrimeField>> {
    if i == 0 || i > res.length() {
        return None;
    }
    debug_assert!(i == res.length(), "Ext presentation only at the end of the resolution");
    Some(res.map(i).transpose())
}

/// `h^0(O_P^{n-1}(k))`.
pub fn space_sections(nvars: usize, k: i32) -> i64 {
    if k < 0 {
        0
    } else {
        binomial(k as usize + nvars - 1, nvars - 1) as i64
    }
}

/// Rows `n` in `range` of the table `(h^1(I_C(n)), h^0(O_C(n)),
/// h^0(O(n)), h^0(I_C(n)))` for a saturated ideal with minimal resolution
/// `res` of `S/I_C`.
pub fn hilbert_table(res: &FreeResolution<PrimeField>, range: std::ops::RangeInclusive<i32>) -> Vec<HilbertRow> {
    let nvars = res.ring().nvars();
    let num = numerator_from_resolution(&res.betti_table());
    let h1 = hartshorne_rao_dimensions(res, range.clone());
    range
        .zip(h1)
        .map(|(n, h1_ideal)| {
            let h0_space = space_sections(nvars, n);
            let h0_ideal = h0_space - num.series_coefficient(nvars, n);
            HilbertRow {
                n,
                h1_ideal,
                h0_curve: h0_space - h0_ideal + h1_ideal,
                h0_space,
                h0_ideal,
            }
        })
        .collect()
}

/// Cuts a curve out of the resolved module.
///
/// With `d_1: F_1 -> F_0` and `d_2: F_2 -> F_1` from the minimal resolution
/// of `M`, the second syzygy module `N` is the image of `d_2`. A random
/// map `α: L_1 -> F_2` of the recipe's twists gives `Q = N / im(d_2 α)`.
/// Every map `N -> S` extends to `F_1`, so a map `Q -> S` is a row vector
/// `v` with `v d_2 α = 0`, and its image is generated by the entries of
/// `v d_2`. The smallest degree with a nonzero image gives the ideal.
pub fn curve_from_module(
    ring: &Ring<PrimeField>,
    module: &HartshorneRaoModule,
    recipe: &ConstructionRecipe,
    rng: &mut dyn RngCore,
) -> Result<CurveReport, CurveError> {
    let field = ring.field();
    let res = free_resolution(ring, &module.presentation, true, None)?;
    let module_betti = res.betti_table();
    if res.length() < 2 {
        return Err(CurveError::DegenerateSample("module resolution too short".into()));
    }
    let d2 = res.map(2);
    let f2 = res.module(2);
    let alpha = random_graded_matrix(ring, f2.twists(), &recipe.l1_twists, rng);
    check_general_split_map(field, &alpha)?;
    let b = d2.mul(ring, &alpha);
    let bt = b.transpose();

    let f1 = res.module(1);
    let lowest = -f1.twists().iter().max().copied().unwrap_or(0);
    let highest = -f1.twists().iter().min().copied().unwrap_or(0) + f2.twists().iter().max().copied().unwrap_or(0);
    let mut embedding = None;
    for e in lowest..=highest {
        let kernel = graded_piece_kernel(ring, &bt, e);
        let images: Vec<Vec<Polynomial<PrimeField>>> =
            kernel.iter().map(|v| row_times_matrix(ring, v, d2)).collect();
        let dim = image_rank(ring, &images);
        if dim == 0 {
            continue;
        }
        if dim > 1 {
            return Err(CurveError::EmbeddingFailure(format!(
                "{dim} independent maps to S in degree {e}; the cokernel is not an ideal"
            )));
        }
        let u = images.into_iter().find(|u| u.iter().any(|p| !p.is_zero())).expect("rank one");
        embedding = Some(u);
        break;
    }
    let u = embedding.ok_or_else(|| CurveError::EmbeddingFailure("no map to S".into()))?;
    let gens: Vec<_> = u.into_iter().filter(|p| !p.is_zero()).map(|p| ring.make_monic(&p)).collect();
    finish_curve(ring, recipe, module_betti, &gens, rng)
}

/// Row vector `v` times `m`.
fn row_times_matrix(ring: &Ring<PrimeField>, v: &[Polynomial<PrimeField>], m: &GradedMatrix<PrimeField>) -> Vec<Polynomial<PrimeField>> {
    (0..m.cols())
        .map(|j| {
            v.iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .fold(ring.zero(), |acc, (i, p)| ring.add(&acc, &ring.mul(p, m.entry(i, j))))
        })
        .collect()
}

/// Dimension of the span of vectors of polynomials.
fn image_rank(ring: &Ring<PrimeField>, vectors: &[Vec<Polynomial<PrimeField>>]) -> usize {
    let mut keys: Vec<(usize, Monomial)> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for v in vectors {
        for (j, p) in v.iter().enumerate() {
            for t in p.terms() {
                index.entry((j, t.mon.clone())).or_insert_with(|| {
                    keys.push((j, t.mon.clone()));
                    keys.len() - 1
                });
            }
        }
    }
    if keys.is_empty() {
        return 0;
    }
    let field = ring.field();
    let mut m = DenseMatrix::zeros(field, vectors.len(), keys.len());
    for (r, v) in vectors.iter().enumerate() {
        for (j, p) in v.iter().enumerate() {
            for t in p.terms() {
                m.set(r, index[&(j, t.mon.clone())], t.coeff);
            }
        }
    }
    m.rank(field)
}

/// Every block of constant entries of the split map must have full column
/// rank, so the map hits the generators of each degree in general position.
fn check_general_split_map(field: &PrimeField, alpha: &GradedMatrix<PrimeField>) -> Result<(), CurveError> {
    let mut twists: Vec<i32> = alpha.col_twists().to_vec();
    twists.dedup();
    for t in twists {
        let rows: Vec<usize> = (0..alpha.rows()).filter(|&i| alpha.row_twists()[i] == t).collect();
        let cols: Vec<usize> = (0..alpha.cols()).filter(|&j| alpha.col_twists()[j] == t).collect();
        let mut m = DenseMatrix::zeros(field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if let Some(term) = alpha.entry(i, j).terms().first() {
                    m.set(a, b, term.coeff);
                }
            }
        }
        if rows.len() < cols.len() || m.rank(field) < cols.len() {
            return Err(CurveError::DegenerateSample(format!(
                "split map is not general on the generators of degree {t}"
            )));
        }
    }
    Ok(())
}

/// Verifies an ideal against the recipe and assembles the report.
pub fn finish_curve(
    ring: &Ring<PrimeField>,
    recipe: &ConstructionRecipe,
    module_betti: BettiTable,
    gens: &[Polynomial<PrimeField>],
    rng: &mut dyn RngCore,
) -> Result<CurveReport, CurveError> {
    let (saturated, steps) = saturate(ring, gens, &Saturator::Irrelevant, default_saturation_cap(gens))?;
    let sat_gens = saturated.polynomials(ring);
    let res = resolve_ideal(ring, &sat_gens, true)?;
    let curve_betti = res.betti_table();
    let num = numerator_from_resolution(&curve_betti);
    let (degree, genus) = degree_genus(&num, ring.nvars())
        .map_err(|e| CurveError::VerificationFailure(e.to_string()))?;
    if (degree, genus) != (recipe.degree, recipe.genus) {
        return Err(CurveError::VerificationFailure(format!(
            "constructed (d, g) = ({degree}, {genus}), expected ({}, {})",
            recipe.degree, recipe.genus
        )));
    }
    let generators: Vec<_> = (0..res.map(1).cols()).map(|j| res.map(1).entry(0, j).clone()).collect();
    let top = curve_betti.regularity().unwrap_or(0) + 2;
    let hilbert_table = hilbert_table(&res, 0..=top.max(6));
    let smoothness = smoothness_check(ring, &generators, &res, rng);
    let maximal_rank = maximal_rank_check(&hilbert_table, degree, genus);
    Ok(CurveReport {
        recipe: recipe.clone(),
        ring: ring.clone(),
        generators,
        groebner: groebner_basis(ring, &sat_gens),
        degree,
        genus,
        module_betti,
        curve_betti,
        curve_numerator: num,
        hilbert_table,
        saturation_steps: steps,
        smoothness,
        maximal_rank,
        seed: recipe.seed,
    })
}

impl CurveReport {
    /// `h^1(I_C(n))` read from the table, as a series.
    pub fn deficiency_series(&self) -> HilbertNumerator {
        HilbertNumerator::from_terms(self.hilbert_table.iter().map(|r| (r.n, r.h1_ideal)))
    }
}
