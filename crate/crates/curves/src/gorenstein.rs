//! Artinian Gorenstein algebras with Hilbert function `{1, m, m, 1}` as
//! quotients by apolar ideals of cubic forms.

use std::collections::BTreeMap;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schreyer_core::groebner::{groebner_basis, GroebnerBasis};
use schreyer_core::linalg::DenseMatrix;
use schreyer_core::resolution::{resolve_ideal, BettiTable};
use schreyer_core::{Field, Monomial, MonomialOrder, Polynomial, PrimeField, Ring};
use serde::{Deserialize, Serialize};

use crate::CurveError;

/// `g(∂) F`, with `x_i` acting as `∂/∂x_i`.
pub fn apply_operator<F: Field>(ring: &Ring<F>, g: &Polynomial<F>, form: &Polynomial<F>) -> Polynomial<F> {
    let mut out = ring.zero();
    for t in g.terms() {
        let mut h = form.clone();
        for (i, &e) in t.mon.exponents().iter().enumerate() {
            for _ in 0..e {
                h = ring.derivative(&h, i);
            }
        }
        out = ring.add_scaled(&out, &t.coeff, &h);
    }
    out
}

/// Matrix of `S_k -> S_{d-k}`, `g ↦ g(∂)F`, for a form of degree `d`:
/// rows indexed by monomials of degree `d - k`, columns by degree `k`.
pub fn catalecticant<F: Field>(ring: &Ring<F>, form: &Polynomial<F>, k: u32) -> (DenseMatrix<F>, Vec<Monomial>) {
    let n = ring.nvars();
    let d = form.homogeneous_degree().unwrap_or(0);
    let source = Monomial::all_of_degree(n, k);
    let target = Monomial::all_of_degree(n, d.saturating_sub(k));
    let field = ring.field();
    let mut m = DenseMatrix::zeros(field, target.len(), source.len());
    for (c, mon) in source.iter().enumerate() {
        let image = apply_operator(ring, &ring.monomial(field.one(), mon.clone()), form);
        for (r, v) in ring.coefficients_in(&image, &target).into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    (m, source)
}

/// Hilbert function `dim (S/ann F)_k` for `k = 0..=deg F`.
pub fn apolar_hilbert_function<F: Field>(ring: &Ring<F>, form: &Polynomial<F>) -> Vec<usize> {
    let d = form.homogeneous_degree().unwrap_or(0);
    (0..=d).map(|k| catalecticant(ring, form, k).0.rank(ring.field())).collect()
}

/// Generators of `ann F` in degrees `1..=d` together with all monomials of
/// degree `d + 1`, which the annihilator contains.
pub fn apolar_generators<F: Field>(ring: &Ring<F>, form: &Polynomial<F>) -> Vec<Polynomial<F>> {
    let d = form.homogeneous_degree().unwrap_or(0);
    let mut gens = Vec::new();
    for k in 1..=d {
        let (m, source) = catalecticant(ring, form, k);
        for v in m.kernel(ring.field()) {
            gens.push(ring.from_coefficients(&source, &v));
        }
    }
    let one = ring.field().one();
    gens.extend(
        Monomial::all_of_degree(ring.nvars(), d + 1)
            .into_iter()
            .map(|m| ring.monomial(one.clone(), m)),
    );
    gens
}

/// Groebner basis of the apolar ideal of a form.
pub fn apolar_ideal<F: Field>(ring: &Ring<F>, form: &Polynomial<F>) -> GroebnerBasis<F> {
    groebner_basis(ring, &apolar_generators(ring, form))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CubicKind {
    Dense,
    /// A sum of this many cubes of random linear forms.
    SumOfCubes(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinTrial {
    pub seed: u64,
    pub kind: CubicKind,
    pub hilbert_function: Vec<usize>,
    /// Minimal cubic generators, for trials passing the Hilbert function
    /// gate.
    pub cubic_generators: Option<usize>,
    /// `β_{i,j} = β_{m-i, m+3-j}` on the minimal resolution.
    pub self_dual: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub genus: usize,
    pub prime: u32,
    pub seed: u64,
    pub trials: Vec<GorensteinTrial>,
    /// Cubic generator count -> number of trials.
    pub histogram: BTreeMap<usize, usize>,
}

impl GorensteinReport {
    /// Counts the conjecture allows: `0..=g-5` and `g-3`.
    pub fn allowed_counts(genus: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..=genus.saturating_sub(5)).collect();
        v.push(genus - 3);
        v
    }

    pub fn violations(&self) -> Vec<&GorensteinTrial> {
        let allowed = Self::allowed_counts(self.genus);
        self.trials
            .iter()
            .filter(|t| t.cubic_generators.is_some_and(|c| !allowed.contains(&c)))
            .collect()
    }

    pub fn accepted(&self) -> usize {
        self.histogram.values().sum()
    }
}

/// Polynomial ring `F_p[x_0..x_{m-1}]` with degrevlex.
pub fn apolar_ring(m: usize, p: u32) -> Result<Ring<PrimeField>, CurveError> {
    let field = PrimeField::new(p as u64).map_err(|e| CurveError::UnsupportedRecipe(e.to_string()))?;
    let names: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ring::new(field, &refs, MonomialOrder::DegRevLex).map_err(|e| CurveError::UnsupportedRecipe(e.to_string()))
}

/// Even trials draw a dense cubic, odd ones a sum of `k` cubes of linear
/// forms with `k` uniform in `1..=m+1`.
pub fn sample_cubic(ring: &Ring<PrimeField>, trial: usize, rng: &mut dyn RngCore) -> (CubicKind, Polynomial<PrimeField>) {
    if trial.is_multiple_of(2) {
        return (CubicKind::Dense, ring.random_form(3, rng));
    }
    let k = rng.gen_range(1..=ring.nvars() + 1);
    let f = (0..k).fold(ring.zero(), |acc, _| {
        let l = ring.random_form(1, rng);
        ring.add(&acc, &ring.pow(&l, 3))
    });
    (CubicKind::SumOfCubes(k), f)
}

/// Runs one trial: the Hilbert function gate, then the minimal resolution
/// of the apolar ideal.
pub fn gorenstein_trial(ring: &Ring<PrimeField>, seed: u64, trial: usize) -> Result<GorensteinTrial, CurveError> {
    let m = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (kind, form) = sample_cubic(ring, trial, &mut rng);
    let hilbert_function = apolar_hilbert_function(ring, &form);
    if hilbert_function != [1, m, m, 1] {
        return Ok(GorensteinTrial {
            seed,
            kind,
            hilbert_function,
            cubic_generators: None,
            self_dual: None,
        });
    }
    let gb = apolar_ideal(ring, &form);
    let res = resolve_ideal(ring, &gb.polynomials(ring), true)?;
    let betti = res.betti_table();
    Ok(GorensteinTrial {
        seed,
        kind,
        hilbert_function,
        cubic_generators: Some(betti.get(1, 3)),
        self_dual: Some(is_self_dual(&betti, m, m as i32 + 3)),
    })
}

/// `β_{i,j} = β_{c-i, s-j}` for every entry.
pub fn is_self_dual(b: &BettiTable, c: usize, s: i32) -> bool {
    b.iter().all(|(i, j, r)| i <= c && b.get(c - i, s - j) == r)
}

/// Samples `trials` cubics in `g - 2` variables with seeds `seed + t`.
pub fn gorenstein_experiment(genus: usize, prime: u32, trials: usize, seed: u64) -> Result<GorensteinReport, CurveError> {
    if genus < 5 {
        return Err(CurveError::UnsupportedRecipe(format!("genus {genus} < 5")));
    }
    let ring = apolar_ring(genus - 2, prime)?;
    let mut out = Vec::with_capacity(trials);
    let mut histogram = BTreeMap::new();
    for t in 0..trials {
        let trial = gorenstein_trial(&ring, seed.wrapping_add(t as u64), t)?;
        if let Some(c) = trial.cubic_generators {
            *histogram.entry(c).or_insert(0) += 1;
        }
        out.push(trial);
    }
    Ok(GorensteinReport {
        genus,
        prime,
        seed,
        trials: out,
        histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_of_a_variable() {
        let r = apolar_ring(1, 10007).unwrap();
        let f = r.parse_polynomial("x0^3").unwrap();
        assert_eq!(apolar_hilbert_function(&r, &f), vec![1, 1, 1, 1]);
        let gb = apolar_ideal(&r, &f);
        assert_eq!(gb.polynomials(&r), vec![r.parse_polynomial("x0^4").unwrap()]);
    }

    #[test]
    fn fermat_cubic_has_two_cubic_generators() {
        let r = apolar_ring(3, 10007).unwrap();
        let f = r.parse_polynomial("x0^3 + x1^3 + x2^3").unwrap();
        assert_eq!(apolar_hilbert_function(&r, &f), vec![1, 3, 3, 1]);
        let res = resolve_ideal(&r, &apolar_ideal(&r, &f).polynomials(&r), true).unwrap();
        let b = res.betti_table();
        assert_eq!(b.get(1, 2), 3);
        assert_eq!(b.get(1, 3), 2);
        assert!(is_self_dual(&b, 3, 6));
    }

    #[test]
    fn perfect_cube_fails_the_gate() {
        let r = apolar_ring(3, 10007).unwrap();
        let f = r.pow(&r.parse_polynomial("x0 + 2*x1 - x2").unwrap(), 3);
        assert_eq!(apolar_hilbert_function(&r, &f), vec![1, 1, 1, 1]);
    }

    #[test]
    fn allowed_counts() {
        assert_eq!(GorensteinReport::allowed_counts(5), vec![0, 2]);
        assert_eq!(GorensteinReport::allowed_counts(6), vec![0, 1, 3]);
    }
}
