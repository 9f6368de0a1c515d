//! Jacobian criterion for space curves.

use rand::RngCore;
use schreyer_core::groebner::groebner_basis;
use schreyer_core::hilbert::{degree_genus, krull_dimension, numerator_from_resolution};
use schreyer_core::resolution::FreeResolution;
use schreyer_core::{Polynomial, PrimeField, Ring};
use serde::{Deserialize, Serialize};

use crate::hr_module::finite_length_series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoothnessVerdict {
    Smooth,
    Singular,
    /// The ideal is not known to define an equidimensional curve.
    Inconclusive,
}

/// Decides smoothness of the projective scheme of `gens`, given the minimal
/// resolution `res` of `S/(gens)`.
///
/// Only codimension-two schemes without embedded or isolated points are
/// judged: the Hilbert polynomial must be linear, the resolution must have
/// length at most `n - 1`, and `Ext^{n-1}(S/I, S)` must have finite length.
/// Then `C` is smooth iff the 2x2 minors of the Jacobian together with `I`
/// vanish only at the origin. The minors of three random combinations of
/// the generators are tried first, since at every point of `C` their
/// Jacobian is a combination of the rows of the full one.
pub fn smoothness_check(
    ring: &Ring<PrimeField>,
    gens: &[Polynomial<PrimeField>],
    res: &FreeResolution<PrimeField>,
    rng: &mut dyn RngCore,
) -> SmoothnessVerdict {
    let n = ring.nvars();
    let num = numerator_from_resolution(&res.betti_table());
    if degree_genus(&num, n).is_err() || res.length() > n - 1 {
        return SmoothnessVerdict::Inconclusive;
    }
    if res.length() == n - 1 && finite_length_series(ring, &res.map(n - 1).transpose()).is_none() {
        return SmoothnessVerdict::Inconclusive;
    }
    let gens: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return SmoothnessVerdict::Inconclusive;
    }
    let top = gens.iter().filter_map(|g| g.homogeneous_degree()).max().unwrap_or(0);
    let combos: Vec<_> = (0..3)
        .map(|_| {
            gens.iter().fold(ring.zero(), |acc, g| {
                let d = top - g.homogeneous_degree().unwrap_or(top);
                ring.add(&acc, &ring.mul(&ring.random_form(d, rng), g))
            })
        })
        .collect();
    if singular_locus_is_empty(ring, &gens, &combos) {
        return SmoothnessVerdict::Smooth;
    }
    if singular_locus_is_empty(ring, &gens, &gens) {
        SmoothnessVerdict::Smooth
    } else {
        SmoothnessVerdict::Singular
    }
}

/// Whether `ideal + (2x2 minors of the Jacobian of rows)` has affine
/// dimension zero.
fn singular_locus_is_empty(
    ring: &Ring<PrimeField>,
    ideal: &[Polynomial<PrimeField>],
    rows: &[Polynomial<PrimeField>],
) -> bool {
    let mut gens = ideal.to_vec();
    gens.extend(jacobian_minors(ring, rows));
    let gb = groebner_basis(ring, &gens);
    let lead = &gb.leading_ideals(ring.nvars())[0];
    krull_dimension(lead) == 0
}

/// All 2x2 minors of the Jacobian matrix of `polys`.
pub fn jacobian_minors(ring: &Ring<PrimeField>, polys: &[Polynomial<PrimeField>]) -> Vec<Polynomial<PrimeField>> {
    let n = ring.nvars();
    let jac: Vec<Vec<_>> = polys
        .iter()
        .map(|p| (0..n).map(|i| ring.derivative(p, i)).collect())
        .collect();
    let mut out = Vec::new();
    for a in 0..jac.len() {
        for b in a + 1..jac.len() {
            for i in 0..n {
                for j in i + 1..n {
                    let m = ring.sub(
                        &ring.mul(&jac[a][i], &jac[b][j]),
                        &ring.mul(&jac[a][j], &jac[b][i]),
                    );
                    if !m.is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve_ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use schreyer_core::resolution::resolve_ideal;

    fn verdict(gens: &[&str]) -> SmoothnessVerdict {
        let r = curve_ring(10007).unwrap();
        let polys: Vec<_> = gens.iter().map(|s| r.parse_polynomial(s).unwrap()).collect();
        let res = resolve_ideal(&r, &polys, true).unwrap();
        smoothness_check(&r, &polys, &res, &mut ChaCha8Rng::seed_from_u64(1))
    }

    #[test]
    fn line_is_smooth() {
        assert_eq!(verdict(&["x", "y"]), SmoothnessVerdict::Smooth);
    }

    #[test]
    fn twisted_cubic_is_smooth() {
        assert_eq!(verdict(&["x*z - y^2", "x*w - y*z", "y*w - z^2"]), SmoothnessVerdict::Smooth);
    }

    #[test]
    fn nodal_plane_cubic_is_singular() {
        assert_eq!(verdict(&["w", "y^2*z - x^3 - x^2*z"]), SmoothnessVerdict::Singular);
    }

    #[test]
    fn double_line_is_singular() {
        assert_eq!(verdict(&["x^2", "y"]), SmoothnessVerdict::Singular);
    }

    #[test]
    fn plane_with_line_is_not_judged() {
        assert_eq!(verdict(&["x*y", "x*z"]), SmoothnessVerdict::Inconclusive);
    }

    #[test]
    fn line_with_embedded_point_is_not_judged() {
        // (x, y) ∩ (x^2, y, z^2): a line with an embedded point at [0:0:0:1]
        assert_eq!(verdict(&["x^2", "y", "x*z^2"]), SmoothnessVerdict::Inconclusive);
    }
}
