//! Linear-algebra oracles that never touch Groebner bases or division.
#![allow(dead_code)]

use rand::Rng;
use schreyer_core::linalg::DenseMatrix;
use schreyer_core::resolution::{FreeResolution, GradedMatrix};
use schreyer_core::{Field, Monomial, Polynomial, Ring};

pub fn monomials(nvars: usize, d: i32) -> Vec<Monomial> {
    if d < 0 {
        Vec::new()
    } else {
        Monomial::all_of_degree(nvars, d as u32)
    }
}

/// Rows spanning `I_d` for homogeneous generators.
pub fn degree_piece_rows<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], d: i32) -> Vec<Vec<F::Elem>> {
    let basis = monomials(ring.nvars(), d);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let e = g.homogeneous_degree().expect("homogeneous generator") as i32;
        for m in monomials(ring.nvars(), d - e) {
            let p = ring.mul_term(g, &ring.field().one(), &m);
            rows.push(ring.coefficients_in(&p, &basis));
        }
    }
    rows
}

pub fn rank_of_rows<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    DenseMatrix::from_rows(field, rows, cols).rank(field)
}

/// `dim_k I_d`.
pub fn ideal_dimension<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], d: i32) -> usize {
    let cols = monomials(ring.nvars(), d).len();
    rank_of_rows(ring.field(), degree_piece_rows(ring, gens, d), cols)
}

/// `dim_k (S/I)_d`.
pub fn hilbert_function<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], d: i32) -> usize {
    monomials(ring.nvars(), d).len() - ideal_dimension(ring, gens, d)
}

/// Membership of a homogeneous `h` in the ideal, decided in degree `deg h`.
pub fn in_ideal<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], h: &Polynomial<F>) -> bool {
    if h.is_zero() {
        return true;
    }
    let d = h.homogeneous_degree().expect("homogeneous") as i32;
    let basis = monomials(ring.nvars(), d);
    let mut rows = degree_piece_rows(ring, gens, d);
    let before = rank_of_rows(ring.field(), rows.clone(), basis.len());
    rows.push(ring.coefficients_in(h, &basis));
    rank_of_rows(ring.field(), rows, basis.len()) == before
}

/// The degree-`d` component of a graded map as a dense matrix acting on
/// column vectors.
pub fn graded_piece<F: Field>(ring: &Ring<F>, map: &GradedMatrix<F>, d: i32) -> (DenseMatrix<F>, usize, usize) {
    let field = ring.field();
    let n = ring.nvars();
    let target: Vec<(usize, Vec<Monomial>)> = map
        .row_twists()
        .iter()
        .enumerate()
        .map(|(i, t)| (i, monomials(n, d - t)))
        .collect();
    let target_dim: usize = target.iter().map(|(_, b)| b.len()).sum();
    let mut columns = Vec::new();
    for (j, t) in map.col_twists().iter().enumerate() {
        for m in monomials(n, d - t) {
            let mut col = Vec::with_capacity(target_dim);
            for (i, basis) in &target {
                let p = ring.mul_term(map.entry(*i, j), &field.one(), &m);
                col.extend(ring.coefficients_in(&p, basis));
            }
            columns.push(col);
        }
    }
    let source_dim = columns.len();
    let m = DenseMatrix::from_rows(field, columns, target_dim).transpose();
    (m, target_dim, source_dim)
}

pub fn piece_rank<F: Field>(ring: &Ring<F>, map: &GradedMatrix<F>, d: i32) -> usize {
    let (m, rows, cols) = graded_piece(ring, map, d);
    if rows == 0 || cols == 0 {
        0
    } else {
        m.rank(ring.field())
    }
}

/// Checks `rank φ_k + rank φ_{k+1} = dim (F_k)_d` for every `k >= 1`, that
/// is exactness at every `F_k` with `k >= 1` in degree `d`.
pub fn exact_in_degree<F: Field>(res: &FreeResolution<F>, d: i32) -> bool {
    let ring = res.ring();
    let n = ring.nvars();
    let ranks: Vec<usize> = res.maps().iter().map(|m| piece_rank(ring, m, d)).collect();
    (1..=res.length()).all(|k| {
        let dim: usize = res
            .module(k)
            .twists()
            .iter()
            .map(|t| monomials(n, d - t).len())
            .sum();
        let next = ranks.get(k).copied().unwrap_or(0);
        ranks[k - 1] + next == dim
    })
}

/// A random homogeneous polynomial of degree `d` with about `terms` terms.
pub fn random_sparse_form<F: Field>(
    ring: &Ring<F>,
    d: u32,
    terms: usize,
    rng: &mut impl Rng,
) -> Polynomial<F> {
    let basis = Monomial::all_of_degree(ring.nvars(), d);
    let picked = (0..terms).map(|_| {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        (ring.field().from_i64(rng.gen_range(-5..=5)), m)
    });
    ring.from_terms(picked.collect::<Vec<_>>())
}
