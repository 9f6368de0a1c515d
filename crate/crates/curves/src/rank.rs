//! Maximal rank of the restriction maps `H^0(O(n)) -> H^0(O_C(n))`.

use serde::{Deserialize, Serialize};

use crate::curve::HilbertRow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalRankRow {
    pub n: i32,
    pub h0_ideal: i64,
    pub h1_ideal: i64,
    /// `max(0, h^0(O(n)) - h^0(O_C(n)))`, with `h^0(O_C(n)) = dn + 1 - g`
    /// when `dn > 2g - 2`.
    pub expected_h0_ideal: i64,
    pub injective: bool,
    pub surjective: bool,
}

impl MaximalRankRow {
    pub fn maximal_rank(&self) -> bool {
        self.injective || self.surjective
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalRankReport {
    pub rows: Vec<MaximalRankRow>,
    /// Every row has maximal rank and matches the expected count.
    pub holds: bool,
}

pub fn maximal_rank_check(table: &[HilbertRow], degree: i64, genus: i64) -> MaximalRankReport {
    let rows: Vec<_> = table
        .iter()
        .map(|r| {
            let n = r.n as i64;
            let sections = if degree * n > 2 * genus - 2 {
                degree * n + 1 - genus
            } else {
                r.h0_curve
            };
            MaximalRankRow {
                n: r.n,
                h0_ideal: r.h0_ideal,
                h1_ideal: r.h1_ideal,
                expected_h0_ideal: (r.h0_space - sections).max(0),
                injective: r.h0_ideal == 0,
                surjective: r.h1_ideal == 0,
            }
        })
        .collect();
    let holds = rows
        .iter()
        .all(|r| r.maximal_rank() && r.h0_ideal == r.expected_h0_ideal);
    MaximalRankReport { rows, holds }
}
