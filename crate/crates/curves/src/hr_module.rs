//! Sampling finite length modules with prescribed Hilbert series.

use rand::RngCore;
use schreyer_core::hilbert::{cokernel_numerator, HilbertNumerator};
use schreyer_core::linalg::DenseMatrix;
use schreyer_core::resolution::GradedMatrix;
use schreyer_core::{Field, PrimeField, Ring};

use crate::graded::{graded_piece_kernel, random_graded_matrix};
use crate::recipe::{ConstructionRecipe, ModuleShape};
use crate::CurveError;

/// A finite length module given by a presentation `F_1 -> F_0`.
#[derive(Clone, Debug)]
pub struct HartshorneRaoModule {
    pub presentation: GradedMatrix<PrimeField>,
    /// `Σ dim M_n t^n`.
    pub series: HilbertNumerator,
    /// Dimension of the kernel used to force syzygies, when there is one.
    pub forcing_kernel_dimension: Option<usize>,
}

/// The Hilbert series `Σ dim M_n t^n` of a finite length cokernel, or `None`
/// when the cokernel has positive dimension.
pub fn finite_length_series(
    ring: &Ring<PrimeField>,
    presentation: &GradedMatrix<PrimeField>,
) -> Option<HilbertNumerator> {
    let num = cokernel_numerator(ring, presentation);
    let mut q = num;
    for _ in 0..ring.nvars() {
        q = q.div_one_minus_t()?;
    }
    Some(q)
}

/// Kernel of `A^t` in the degree where its elements are vectors of linear
/// forms, for a linear `cols x syzygies` matrix `A` from
/// `S^syzygies(-twist-2)` to `S^cols(-twist-1)`.
pub fn forcing_kernel(
    ring: &Ring<PrimeField>,
    cols: usize,
    syzygies: usize,
    twist: i32,
    rng: &mut dyn RngCore,
) -> Vec<Vec<schreyer_core::Polynomial<PrimeField>>> {
    let a = random_graded_matrix(ring, &vec![twist + 1; cols], &vec![twist + 2; syzygies], rng);
    // A^t has row twists -(twist+2) and column twists -(twist+1); linear
    // entries of a kernel vector sit in degree 1 - (twist + 1)
    graded_piece_kernel(ring, &a.transpose(), -twist)
}

/// Samples the presentation described by the recipe and checks the Hilbert
/// series of its cokernel.
pub fn build_hr_module(
    ring: &Ring<PrimeField>,
    recipe: &ConstructionRecipe,
    rng: &mut dyn RngCore,
) -> Result<HartshorneRaoModule, CurveError> {
    let field = ring.field();
    let (presentation, forcing_kernel_dimension) = match &recipe.shape {
        ModuleShape::Random { rows, cols } => (random_graded_matrix(ring, rows, cols, rng), None),
        ModuleShape::ForcedLinearSyzygies {
            rows,
            cols,
            syzygies,
            twist,
        } => {
            let kernel = forcing_kernel(ring, *cols, *syzygies, *twist, rng);
            let expected = (cols * ring.nvars()).saturating_sub(syzygies * quadrics(ring.nvars()));
            if kernel.len() != expected {
                return Err(CurveError::DegenerateSample(format!(
                    "forcing kernel has dimension {}, expected {expected}",
                    kernel.len()
                )));
            }
            // a random point of the Grassmannian of rows-planes in the kernel
            let mut coeffs = DenseMatrix::zeros(field, *rows, kernel.len());
            for i in 0..*rows {
                for k in 0..kernel.len() {
                    coeffs.set(i, k, field.random(rng));
                }
            }
            if coeffs.rank(field) < *rows {
                return Err(CurveError::DegenerateSample("rank-deficient subspace".into()));
            }
            let mut entries = Vec::with_capacity(rows * cols);
            for i in 0..*rows {
                let mut row = vec![ring.zero(); *cols];
                for (k, v) in kernel.iter().enumerate() {
                    let c = coeffs.get(i, k);
                    for (j, p) in v.iter().enumerate() {
                        row[j] = ring.add_scaled(&row[j], c, p);
                    }
                }
                entries.extend(row);
            }
            let m = GradedMatrix::new(entries, vec![*twist; *rows], vec![twist + 1; *cols])
                .expect("linear entries");
            (m, Some(kernel.len()))
        }
    };
    let series = finite_length_series(ring, &presentation).ok_or_else(|| {
        CurveError::DegenerateSample("cokernel does not have finite length".into())
    })?;
    if series != recipe.module_series {
        return Err(CurveError::DegenerateSample(format!(
            "module Hilbert series {series}, expected {}",
            recipe.module_series
        )));
    }
    Ok(HartshorneRaoModule {
        presentation,
        series,
        forcing_kernel_dimension,
    })
}

/// `dim S_2` in `n` variables.
fn quadrics(n: usize) -> usize {
    n * (n + 1) / 2
}
