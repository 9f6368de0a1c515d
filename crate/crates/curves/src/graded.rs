//! Graded pieces of free modules and maps between them as dense matrices.

use std::collections::HashMap;

use rand::RngCore;
use schreyer_core::linalg::DenseMatrix;
use schreyer_core::resolution::GradedMatrix;
use schreyer_core::{Field, Monomial, Polynomial, Ring};

/// Monomial basis of the degree-`d` piece of `⊕ S(-twists[i])`, listed
/// summand by summand.
pub fn piece_basis(nvars: usize, twists: &[i32], d: i32) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (i, &t) in twists.iter().enumerate() {
        if d - t >= 0 {
            out.extend(Monomial::all_of_degree(nvars, (d - t) as u32).into_iter().map(|m| (i, m)));
        }
    }
    out
}

pub fn piece_dimension(nvars: usize, twists: &[i32], d: i32) -> usize {
    twists
        .iter()
        .filter(|&&t| d >= t)
        .map(|&t| binomial((d - t) as usize + nvars - 1, nvars - 1))
        .sum()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The degree-`d` component of `m` as a dense matrix (target rows, source
/// columns), with both monomial bases.
pub struct GradedPiece<F: Field> {
    pub matrix: DenseMatrix<F>,
    pub source: Vec<(usize, Monomial)>,
    pub target: Vec<(usize, Monomial)>,
}

pub fn graded_piece<F: Field>(ring: &Ring<F>, m: &GradedMatrix<F>, d: i32) -> GradedPiece<F> {
    let field = ring.field();
    let n = ring.nvars();
    let source = piece_basis(n, m.col_twists(), d);
    let target = piece_basis(n, m.row_twists(), d);
    let index: HashMap<(usize, Monomial), usize> =
        target.iter().cloned().enumerate().map(|(k, key)| (key, k)).collect();
    let mut matrix = DenseMatrix::zeros(field, target.len(), source.len());
    for (c, (j, mon)) in source.iter().enumerate() {
        for i in 0..m.rows() {
            let entry = m.entry(i, *j);
            for t in entry.terms() {
                let key = (i, t.mon.mul(mon));
                let r = index[&key];
                let v = field.add(matrix.get(r, c), &t.coeff);
                matrix.set(r, c, v);
            }
        }
    }
    GradedPiece {
        matrix,
        source,
        target,
    }
}

/// Converts a coefficient vector on a piece basis into a vector of
/// polynomials with `rank` components.
pub fn vector_from_coefficients<F: Field>(
    ring: &Ring<F>,
    basis: &[(usize, Monomial)],
    coeffs: &[F::Elem],
    rank: usize,
) -> Vec<Polynomial<F>> {
    let mut terms: Vec<Vec<(F::Elem, Monomial)>> = vec![Vec::new(); rank];
    for ((i, m), c) in basis.iter().zip(coeffs) {
        if !ring.field().is_zero(c) {
            terms[*i].push((c.clone(), m.clone()));
        }
    }
    terms.into_iter().map(|t| ring.from_terms(t)).collect()
}

/// A basis of the degree-`d` piece of `ker m`, as vectors in the source.
pub fn graded_piece_kernel<F: Field>(
    ring: &Ring<F>,
    m: &GradedMatrix<F>,
    d: i32,
) -> Vec<Vec<Polynomial<F>>> {
    let piece = graded_piece(ring, m, d);
    let kernel = if piece.target.is_empty() {
        // every source vector lies in the kernel
        (0..piece.source.len())
            .map(|k| {
                let mut v = vec![ring.field().zero(); piece.source.len()];
                v[k] = ring.field().one();
                v
            })
            .collect()
    } else {
        piece.matrix.kernel(ring.field())
    };
    kernel
        .iter()
        .map(|v| vector_from_coefficients(ring, &piece.source, v, m.cols()))
        .collect()
}

/// Rank of the degree-`d` component of `m`.
pub fn graded_piece_rank<F: Field>(ring: &Ring<F>, m: &GradedMatrix<F>, d: i32) -> usize {
    let piece = graded_piece(ring, m, d);
    if piece.source.is_empty() || piece.target.is_empty() {
        0
    } else {
        piece.matrix.rank(ring.field())
    }
}

/// `dim_k (coker m)_d`.
pub fn cokernel_dimension<F: Field>(ring: &Ring<F>, m: &GradedMatrix<F>, d: i32) -> usize {
    piece_dimension(ring.nvars(), m.row_twists(), d) - graded_piece_rank(ring, m, d)
}

/// A matrix whose entry `(i, j)` is a random form of degree
/// `col_twists[j] - row_twists[i]`, or zero when that degree is negative.
pub fn random_graded_matrix<F: Field>(
    ring: &Ring<F>,
    row_twists: &[i32],
    col_twists: &[i32],
    rng: &mut dyn RngCore,
) -> GradedMatrix<F> {
    let mut entries = Vec::with_capacity(row_twists.len() * col_twists.len());
    for &r in row_twists {
        for &c in col_twists {
            entries.push(if c >= r {
                ring.random_form((c - r) as u32, rng)
            } else {
                ring.zero()
            });
        }
    }
    GradedMatrix::new(entries, row_twists.to_vec(), col_twists.to_vec())
        .expect("random forms have the forced degrees")
}

/// Random linear combination of vectors with field coefficients.
pub fn random_combination<F: Field>(
    ring: &Ring<F>,
    vectors: &[Vec<Polynomial<F>>],
    rng: &mut dyn RngCore,
) -> Option<Vec<Polynomial<F>>> {
    let first = vectors.first()?;
    let mut out = vec![ring.zero(); first.len()];
    for v in vectors {
        let c = ring.field().random(rng);
        for (o, p) in out.iter_mut().zip(v) {
            *o = ring.add_scaled(o, &c, p);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use schreyer_core::{MonomialOrder, PrimeField};

    fn ring() -> Ring<PrimeField> {
        Ring::new(PrimeField::new(10007).unwrap(), &["a", "b", "c", "d"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn random_matrix_shapes_and_determinism() {
        let r = ring();
        let m1 = random_graded_matrix(&r, &[2, 2, 2], &[3; 8], &mut ChaCha8Rng::seed_from_u64(5));
        let m2 = random_graded_matrix(&r, &[2, 2, 2], &[3; 8], &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(m1, m2);
        assert_eq!((m1.rows(), m1.cols()), (3, 8));
        assert!(m1.entries().iter().all(|e| e.homogeneous_degree() == Some(1)));
        let m3 = random_graded_matrix(&r, &[2], &[1, 2], &mut ChaCha8Rng::seed_from_u64(5));
        assert!(m3.entry(0, 0).is_zero());
        assert_eq!(m3.entry(0, 1).homogeneous_degree(), Some(0));
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let r = ring();
        let z = GradedMatrix::zero(vec![0, 0], vec![1, 1, 1]);
        assert_eq!(graded_piece_kernel(&r, &z, 2).len(), 3 * 4);
        assert_eq!(piece_dimension(4, &[1, 1, 1], 2), 12);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_graded_matrix(&r, &[0, 0], &[1, 1, 1, 2], &mut rng);
        for d in 1..4 {
            let k = graded_piece_kernel(&r, &m, d);
            let src = piece_dimension(4, m.col_twists(), d);
            let tgt = piece_dimension(4, m.row_twists(), d);
            assert!(k.len() + tgt >= src);
            for v in &k {
                for i in 0..m.rows() {
                    let mut s = r.zero();
                    for (j, p) in v.iter().enumerate() {
                        s = r.add(&s, &r.mul(m.entry(i, j), p));
                    }
                    assert!(s.is_zero());
                }
            }
        }
    }
}
