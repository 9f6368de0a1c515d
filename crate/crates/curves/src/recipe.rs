//! Construction recipes: the shape data that determines a random curve.

use schreyer_core::hilbert::HilbertNumerator;
use serde::{Deserialize, Serialize};

pub const DEFAULT_PRIME: u32 = 10007;

/// How the presentation of the finite length module is sampled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleShape {
    /// A random matrix `⊕ S(-cols) -> ⊕ S(-rows)`.
    Random { rows: Vec<i32>, cols: Vec<i32> },
    /// A `rows x cols` matrix of linear forms from `S^cols(-twist-1)` to
    /// `S^rows(-twist)` with `syzygies` forced linear syzygies: a random
    /// linear `cols x syzygies` matrix `A` is drawn, and the presentation's
    /// transpose is a random point of the degree-0 kernel of `A^t`.
    ForcedLinearSyzygies {
        rows: usize,
        cols: usize,
        syzygies: usize,
        twist: i32,
    },
}

impl ModuleShape {
    pub fn row_twists(&self) -> Vec<i32> {
        match self {
            ModuleShape::Random { rows, .. } => rows.clone(),
            ModuleShape::ForcedLinearSyzygies { rows, twist, .. } => vec![*twist; *rows],
        }
    }

    pub fn col_twists(&self) -> Vec<i32> {
        match self {
            ModuleShape::Random { cols, .. } => cols.clone(),
            ModuleShape::ForcedLinearSyzygies { cols, twist, .. } => vec![twist + 1; *cols],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecipe {
    pub degree: i64,
    pub genus: i64,
    pub prime: u32,
    pub seed: u64,
    pub shape: ModuleShape,
    /// Target Hilbert series of the finite length module (a polynomial).
    pub module_series: HilbertNumerator,
    /// Twists of the split bundle mapped into the second syzygy bundle.
    pub l1_twists: Vec<i32>,
}

impl ConstructionRecipe {
    /// Built-in recipes for `(11, 10)` and `(13, 12)`.
    pub fn builtin(degree: i64, genus: i64, prime: u32, seed: u64) -> Option<Self> {
        let (shape, module_series, l1_twists) = match (degree, genus) {
            (11, 10) => (
                ModuleShape::Random {
                    rows: vec![2; 3],
                    cols: vec![3; 8],
                },
                HilbertNumerator::from_terms([(2, 3), (3, 4)]),
                vec![4, 4, 5, 5],
            ),
            (13, 12) => (
                ModuleShape::ForcedLinearSyzygies {
                    rows: 5,
                    cols: 12,
                    syzygies: 4,
                    twist: 2,
                },
                HilbertNumerator::from_terms([(2, 5), (3, 8), (4, 6)]),
                vec![4, 4, 4, 4, 5, 5],
            ),
            _ => return None,
        };
        Some(Self {
            degree,
            genus,
            prime,
            seed,
            shape,
            module_series,
            l1_twists,
        })
    }

    /// Rank of the second syzygy bundle: generators minus relations of the
    /// module's presentation.
    pub fn bundle_rank(&self) -> i64 {
        self.shape.col_twists().len() as i64 - self.shape.row_twists().len() as i64
    }

    /// The cokernel of the split bundle map has rank one.
    pub fn ranks_close(&self) -> bool {
        self.bundle_rank() - self.l1_twists.len() as i64 == 1
    }

    /// The same recipe with another seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        Self {
            seed,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_ranks_close() {
        let a = ConstructionRecipe::builtin(11, 10, DEFAULT_PRIME, 0).unwrap();
        assert_eq!(a.bundle_rank(), 5);
        assert!(a.ranks_close());
        let b = ConstructionRecipe::builtin(13, 12, DEFAULT_PRIME, 0).unwrap();
        assert_eq!(b.bundle_rank(), 7);
        assert!(b.ranks_close());
        assert!(ConstructionRecipe::builtin(16, 14, DEFAULT_PRIME, 0).is_none());
    }
}
