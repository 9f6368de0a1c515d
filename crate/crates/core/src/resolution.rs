//! Graded matrices, Schreyer syzygies and free resolutions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coefficients::Field;
use crate::division::{DivisionError, Divisors};
use crate::groebner::{buchberger_complete, colon_generators, GroebnerBasis};
use crate::polyring::{
    FreeModule, GradedFreeModule, ModuleElement, ModuleMonomial, ModuleOrder, Monomial, Polynomial,
    Ring, Term,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("entry ({row}, {col}) is not homogeneous of degree {expected}")]
    NotHomogeneous { row: usize, col: usize, expected: i32 },
    #[error("matrix has {got} entries, expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize, got: usize },
    #[error("syzygies need a verified Groebner basis")]
    UnverifiedBasis,
    #[error("x^a f_{0} did not reduce to zero; the basis is not a Groebner basis")]
    NonzeroRemainder(usize),
    #[error(transparent)]
    Division(#[from] DivisionError),
}

/// A homogeneous map `⊕ S(-col_twists[j]) -> ⊕ S(-row_twists[i])`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
    row_twists: Vec<i32>,
    col_twists: Vec<i32>,
}

impl<F: Field> GradedMatrix<F> {
    /// Checks that entry `(i, j)` is zero or homogeneous of degree
    /// `col_twists[j] - row_twists[i]`.
    pub fn new(
        entries: Vec<Polynomial<F>>,
        row_twists: Vec<i32>,
        col_twists: Vec<i32>,
    ) -> Result<Self, ResolutionError> {
        let (rows, cols) = (row_twists.len(), col_twists.len());
        if entries.len() != rows * cols {
            return Err(ResolutionError::Shape {
                rows,
                cols,
                got: entries.len(),
            });
        }
        for i in 0..rows {
            for j in 0..cols {
                let e = &entries[i * cols + j];
                let expected = col_twists[j] - row_twists[i];
                if !e.is_zero() && e.homogeneous_degree().map(|d| d as i32) != Some(expected) {
                    return Err(ResolutionError::NotHomogeneous {
                        row: i,
                        col: j,
                        expected,
                    });
                }
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
            row_twists,
            col_twists,
        })
    }

    pub fn zero(row_twists: Vec<i32>, col_twists: Vec<i32>) -> Self {
        let (rows, cols) = (row_twists.len(), col_twists.len());
        Self {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
            row_twists,
            col_twists,
        }
    }

    /// The `1 x r` matrix of homogeneous generators of an ideal.
    pub fn from_ideal(gens: &[Polynomial<F>]) -> Result<Self, ResolutionError> {
        let gens: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let mut twists = Vec::with_capacity(gens.len());
        for (j, g) in gens.iter().enumerate() {
            let d = g.homogeneous_degree().ok_or(ResolutionError::NotHomogeneous {
                row: 0,
                col: j,
                expected: g.total_degree().unwrap_or(0) as i32,
            })?;
            twists.push(d as i32);
        }
        Self::new(gens, vec![0], twists)
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(
        ring: &Ring<F>,
        columns: &[ModuleElement<F>],
        row_twists: Vec<i32>,
        col_twists: Vec<i32>,
    ) -> Result<Self, ResolutionError> {
        let rows = row_twists.len();
        let cols = columns.len();
        let mut entries = vec![Polynomial::zero(); rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for (i, p) in c.components(ring).into_iter().enumerate() {
                entries[i * cols + j] = p;
            }
        }
        Self::new(entries, row_twists, col_twists)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_twists(&self) -> &[i32] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i32] {
        &self.col_twists
    }

    pub fn source(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.col_twists.clone())
    }

    pub fn target(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.row_twists.clone())
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    pub fn column(&self, order: &ModuleOrder, j: usize) -> ModuleElement<F> {
        let comps: Vec<_> = (0..self.rows).map(|i| self.entry(i, j).clone()).collect();
        ModuleElement::from_components(order, &comps)
    }

    pub fn columns(&self, order: &ModuleOrder) -> Vec<ModuleElement<F>> {
        (0..self.cols).map(|j| self.column(order, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// The dual map; twists are negated.
    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
            row_twists: self.col_twists.iter().map(|t| -t).collect(),
            col_twists: self.row_twists.iter().map(|t| -t).collect(),
        }
    }

    /// `self · other`; the column twists of `self` must match the row twists
    /// of `other` wherever entries are nonzero.
    pub fn mul(&self, ring: &Ring<F>, other: &GradedMatrix<F>) -> GradedMatrix<F> {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut entries = vec![Polynomial::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let e = &mut entries[i * other.cols + j];
                    *e = ring.add(e, &ring.mul(a, b));
                }
            }
        }
        GradedMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
            row_twists: self.row_twists.clone(),
            col_twists: other.col_twists.clone(),
        }
    }

    /// Position of the first nonzero constant entry, scanning columns.
    pub fn unit_entry(&self) -> Option<(usize, usize)> {
        (0..self.cols).find_map(|j| {
            (0..self.rows).find_map(|i| {
                let e = self.entry(i, j);
                (!e.is_zero() && e.homogeneous_degree() == Some(0)).then_some((i, j))
            })
        })
    }

    pub fn remove_row(&mut self, r: usize) {
        let cols = self.cols;
        let mut k = 0;
        self.entries.retain(|_| {
            let keep = k / cols != r;
            k += 1;
            keep
        });
        self.row_twists.remove(r);
        self.rows -= 1;
    }

    pub fn remove_col(&mut self, c: usize) {
        let cols = self.cols;
        let mut k = 0;
        self.entries.retain(|_| {
            let keep = k % cols != c;
            k += 1;
            keep
        });
        self.col_twists.remove(c);
        self.cols -= 1;
    }

    /// Text rendering, one row per line, entries separated by `, `.
    pub fn format(&self, ring: &Ring<F>) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| ring.format(self.entry(i, j))).collect();
            out.push_str(&format!("[{}]\n", row.join(", ")));
        }
        out
    }
}

/// A Schreyer syzygy `x^a e_i - sum_j g_j e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyElement<F: Field> {
    pub vector: ModuleElement<F>,
    /// Index `i` of the generator the syzygy starts from.
    pub source: usize,
    /// The monomial `x^a`, a minimal generator of `M_i`.
    pub monomial: Monomial,
}

impl<F: Field> SyzygyElement<F> {
    pub fn expected_lead(&self) -> ModuleMonomial {
        ModuleMonomial::new(self.monomial.clone(), self.source)
    }
}

/// Syzygies of a basis, the induced order they are sorted under, and their
/// degrees.
#[derive(Clone, Debug)]
pub struct SyzygyStep<F: Field> {
    pub syzygies: Vec<SyzygyElement<F>>,
    pub order: ModuleOrder,
    pub twists: Vec<i32>,
}

/// Degrees of the basis elements of a Groebner basis under the given twists
/// of the ambient module.
fn element_degrees<F: Field>(gb: &GroebnerBasis<F>, twists: &[i32]) -> Vec<i32> {
    gb.elements()
        .iter()
        .map(|e| {
            let (_, m) = e.leading_term().expect("nonzero");
            m.mon.degree() as i32 + twists[m.pos]
        })
        .collect()
}

/// The syzygies `G^{(i,a)}` of a verified basis, one per minimal generator
/// `x^a` of each `M_i`. They form a Groebner basis of the syzygy module under
/// the induced order, with `L(G^{(i,a)}) = x^a e_i`.
pub fn schreyer_syzygies<F: Field>(
    ring: &Ring<F>,
    gb: &GroebnerBasis<F>,
    twists: &[i32],
) -> Result<SyzygyStep<F>, ResolutionError> {
    if !gb.is_verified() {
        return Err(ResolutionError::UnverifiedBasis);
    }
    let field = ring.field();
    let r = gb.len();
    let degrees = element_degrees(gb, twists);
    if r == 0 {
        return Ok(SyzygyStep {
            syzygies: Vec::new(),
            order: gb.order().clone(),
            twists: Vec::new(),
        });
    }
    let leads = gb.leading_monomials();
    let induced = gb
        .order()
        .schreyer(&leads)
        .expect("nonempty list of leading terms");
    let divisors = Divisors::new(field, gb.elements().iter().collect())?;
    let fm = FreeModule::new(field.clone(), gb.order().clone(), gb.rank());
    let mut syzygies = Vec::new();
    let mut out_twists = Vec::new();
    for i in 0..r {
        for a in colon_generators(&leads, i) {
            let shifted = fm.scale_term(&gb.elements()[i], &field.one(), &a);
            let (quotients, rem) = divisors.divide(field, gb.order(), &shifted, true);
            if !rem.is_zero() {
                return Err(ResolutionError::NonzeroRemainder(i));
            }
            let mut terms = vec![(field.one(), ModuleMonomial::new(a.clone(), i))];
            for (j, q) in quotients.into_iter().enumerate() {
                for Term { coeff, mon } in q {
                    terms.push((field.neg(&coeff), ModuleMonomial::new(mon, j)));
                }
            }
            let vector = ModuleElement::from_terms(field, &induced, r, terms);
            out_twists.push(a.degree() as i32 + degrees[i]);
            syzygies.push(SyzygyElement {
                vector,
                source: i,
                monomial: a,
            });
        }
    }
    Ok(SyzygyStep {
        syzygies,
        order: induced,
        twists: out_twists,
    })
}

/// Stable permutation that sorts leading monomials by the exponent of the
/// last variable occurring in any of them. After sorting, no minimal
/// generator of any `M_i` involves that variable or a later one.
pub fn termination_permutation(leads: &[ModuleMonomial]) -> Vec<usize> {
    let last = leads.iter().filter_map(|l| l.mon.last_variable()).max();
    let mut perm: Vec<usize> = (0..leads.len()).collect();
    if let Some(v) = last {
        perm.sort_by_key(|&k| leads[k].mon.exponent(v));
    }
    perm
}

/// Reorders a basis with [`termination_permutation`].
pub fn sort_for_termination<F: Field>(gb: &GroebnerBasis<F>) -> GroebnerBasis<F> {
    let perm = termination_permutation(&gb.leading_monomials());
    let elements = perm.iter().map(|&k| gb.elements()[k].clone()).collect();
    let mut out = GroebnerBasis::unverified(elements, gb.order().clone(), gb.rank());
    if gb.is_verified() {
        out = out.mark_verified();
    }
    out
}

impl<F: Field> GroebnerBasis<F> {
    /// Sets the verified flag; used for reorderings of verified bases and
    /// for Schreyer syzygies, which are Groebner bases by construction.
    pub(crate) fn mark_verified(self) -> Self {
        let order = self.order().clone();
        let rank = self.rank();
        GroebnerBasis::trusted(self.into_elements(), order, rank)
    }
}

/// The raw Schreyer data of one resolution step: the syzygies of the previous
/// basis, in the order they became generators.
#[derive(Clone, Debug)]
pub struct SchreyerLevel<F: Field> {
    pub order: ModuleOrder,
    pub syzygies: Vec<SyzygyElement<F>>,
}

/// A graded free resolution `F_0 <- F_1 <- ... <- F_L`, stored as the maps
/// `φ_k : F_k -> F_{k-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    ring: Ring<F>,
    base: Vec<i32>,
    maps: Vec<GradedMatrix<F>>,
    levels: Vec<SchreyerLevel<F>>,
}

impl<F: Field> FreeResolution<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn maps(&self) -> &[GradedMatrix<F>] {
        &self.maps
    }

    /// `φ_k` for `k >= 1`.
    pub fn map(&self, k: usize) -> &GradedMatrix<F> {
        &self.maps[k - 1]
    }

    /// Raw Schreyer data, one entry per syzygy step (empty after
    /// minimalization).
    pub fn levels(&self) -> &[SchreyerLevel<F>] {
        &self.levels
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// The free module `F_k`.
    pub fn module(&self, k: usize) -> GradedFreeModule {
        if k == 0 {
            GradedFreeModule::new(self.base.clone())
        } else {
            self.maps[k - 1].source()
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.length()).map(|k| self.module(k).rank()).collect()
    }

    /// Whether every composite `φ_k φ_{k+1}` vanishes.
    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&self.ring, &w[1]).is_zero())
    }

    /// Whether no map has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.unit_entry().is_none())
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut table = BettiTable::default();
        for k in 0..=self.length() {
            for &t in self.module(k).twists() {
                table.add(k, t, 1);
            }
        }
        table
    }

    /// Cancels unit entries until none are left, in ascending homological
    /// index. Exactness and the graded Betti alternating sums are preserved.
    pub fn minimalize(&self) -> FreeResolution<F> {
        let ring = &self.ring;
        let field = ring.field();
        let mut maps = self.maps.clone();
        for k in 0..maps.len() {
            while let Some((r, c)) = maps[k].unit_entry() {
                let b = &maps[k];
                let inv = field.inv(&b.entry(r, c).terms()[0].coeff).expect("unit entry");
                let mut next = b.clone();
                for s in 0..b.rows() {
                    let bsc = b.entry(s, c);
                    if s == r || bsc.is_zero() {
                        continue;
                    }
                    let factor = ring.scale(bsc, &inv);
                    for j in 0..b.cols() {
                        let brj = b.entry(r, j);
                        if j == c || brj.is_zero() {
                            continue;
                        }
                        let e = ring.sub(b.entry(s, j), &ring.mul(&factor, brj));
                        next.entries[s * b.cols() + j] = e;
                    }
                }
                next.remove_row(r);
                next.remove_col(c);
                maps[k] = next;
                if k > 0 {
                    maps[k - 1].remove_col(r);
                }
                if k + 1 < maps.len() {
                    maps[k + 1].remove_row(c);
                }
            }
        }
        let mut base = self.base.clone();
        if let Some(first) = maps.first() {
            base = first.row_twists.clone();
        }
        while maps.last().is_some_and(|m| m.cols() == 0) {
            maps.pop();
        }
        FreeResolution {
            ring: self.ring.clone(),
            base,
            maps,
            levels: Vec::new(),
        }
    }
}

/// Resolves the cokernel of a homogeneous presentation.
///
/// The columns are completed to a Groebner basis under term-over-position
/// (which gives `φ_1`); after that every step takes Schreyer syzygies of the
/// previous basis, sorted with [`termination_permutation`], so no further
/// completion is needed and the length is at most the number of variables.
pub fn free_resolution<F: Field>(
    ring: &Ring<F>,
    presentation: &GradedMatrix<F>,
    minimal: bool,
    max_length: Option<usize>,
) -> Result<FreeResolution<F>, ResolutionError> {
    let field = ring.field();
    let order = ModuleOrder::TermOverPosition(ring.order());
    let base = presentation.row_twists().to_vec();
    let columns: Vec<_> = presentation
        .columns(&order)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    let mut maps = Vec::new();
    let mut levels = Vec::new();
    let limit = max_length.unwrap_or(usize::MAX);
    if !columns.is_empty() && limit > 0 {
        let mut columns = columns;
        for c in &mut columns {
            // the ambient rank is fixed by the presentation
            if c.rank() != base.len() {
                *c = ModuleElement::zero(base.len());
            }
        }
        let (gb, _) = buchberger_complete(field, &order, &columns, &base);
        let mut gb = sort_for_termination(&gb.minimalize(field));
        let mut twists = element_degrees(&gb, &base);
        maps.push(GradedMatrix::from_columns(
            ring,
            gb.elements(),
            base.clone(),
            twists.clone(),
        )?);
        while maps.len() < limit {
            let step = schreyer_syzygies(ring, &gb, &maps.last().unwrap().row_twists)?;
            if step.syzygies.is_empty() {
                break;
            }
            let leads: Vec<_> = step.syzygies.iter().map(|s| s.expected_lead()).collect();
            let perm = termination_permutation(&leads);
            let syzygies: Vec<_> = perm.iter().map(|&k| step.syzygies[k].clone()).collect();
            let new_twists: Vec<i32> = perm.iter().map(|&k| step.twists[k]).collect();
            let vectors: Vec<_> = syzygies.iter().map(|s| s.vector.clone()).collect();
            maps.push(GradedMatrix::from_columns(
                ring,
                &vectors,
                twists.clone(),
                new_twists.clone(),
            )?);
            gb = GroebnerBasis::unverified(vectors, step.order.clone(), twists.len()).mark_verified();
            levels.push(SchreyerLevel {
                order: step.order,
                syzygies,
            });
            twists = new_twists;
        }
    }
    let res = FreeResolution {
        ring: ring.clone(),
        base,
        maps,
        levels,
    };
    Ok(if minimal { res.minimalize() } else { res })
}

/// Resolves `S / I` for homogeneous generators of `I`.
pub fn resolve_ideal<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
    minimal: bool,
) -> Result<FreeResolution<F>, ResolutionError> {
    free_resolution(ring, &GradedMatrix::from_ideal(gens)?, minimal, None)
}

/// Graded Betti numbers `β_{i,j}`: the number of summands `S(-j)` in `F_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<BettiEntry>", from = "Vec<BettiEntry>")]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

impl From<BettiTable> for Vec<BettiEntry> {
    fn from(t: BettiTable) -> Self {
        t.entries()
    }
}

impl From<Vec<BettiEntry>> for BettiTable {
    fn from(v: Vec<BettiEntry>) -> Self {
        BettiTable::from_entries(v.into_iter().map(|e| (e.i, e.j, e.rank)))
    }
}

/// One `β_{i,j}` for JSON output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub rank: usize,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, i32, usize)>) -> Self {
        let mut t = Self::default();
        for (i, j, r) in entries {
            t.add(i, j, r);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: i32, rank: usize) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i32, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    pub fn entries(&self) -> Vec<BettiEntry> {
        self.iter().map(|(i, j, rank)| BettiEntry { i, j, rank }).collect()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Total rank of `F_i`.
    pub fn total(&self, i: usize) -> usize {
        self.iter().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// Range of rows `j - i` that have entries.
    pub fn row_range(&self) -> Option<(i32, i32)> {
        let rows = self.entries.keys().map(|&(i, j)| j - i as i32);
        let min = rows.clone().min()?;
        Some((min, rows.max()?))
    }

    /// Row `r` in the usual layout: `β_{i,i+r}` for `i = 0..=length`, with
    /// `.` for zero, separated by single spaces.
    pub fn row_string(&self, r: i32) -> String {
        (0..=self.length())
            .map(|i| match self.get(i, i as i32 + r) {
                0 => ".".to_string(),
                n => n.to_string(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Largest `j - i` over nonzero entries (the Castelnuovo-Mumford
    /// regularity when the table is minimal).
    pub fn regularity(&self) -> Option<i32> {
        self.row_range().map(|r| r.1)
    }

    /// Whether at most one `β_{i,j}` is nonzero for each internal degree.
    pub fn is_natural(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.entries.keys().all(|&(_, j)| seen.insert(j))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some((lo, hi)) = self.row_range() else {
            return writeln!(f, "0");
        };
        let len = self.length();
        let label_width = lo.to_string().len().max(hi.to_string().len()).max(5) + 1;
        let cell = |s: String| format!("{s:>width$}", width = 4);
        let mut header = format!("{:width$}", "", width = label_width);
        for i in 0..=len {
            header.push_str(&cell(i.to_string()));
        }
        writeln!(f, "{}", header.trim_end())?;
        let mut total = format!("{:<width$}", "total:", width = label_width);
        for i in 0..=len {
            total.push_str(&cell(self.total(i).to_string()));
        }
        writeln!(f, "{total}")?;
        for r in lo..=hi {
            let mut line = format!("{:<width$}", format!("{r}:"), width = label_width);
            for i in 0..=len {
                line.push_str(&cell(match self.get(i, i as i32 + r) {
                    0 => ".".to_string(),
                    n => n.to_string(),
                }));
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{PrimeField, Rationals};
    use crate::groebner::{groebner_basis, is_groebner};
    use crate::polyring::MonomialOrder;

    fn twisted_cubic() -> (Ring<Rationals>, Vec<Polynomial<Rationals>>) {
        let r = Ring::new(Rationals, &["x", "y", "z", "w"], MonomialOrder::DegRevLex).unwrap();
        let g = ["x*z - y^2", "x*w - y*z", "y*w - z^2"]
            .iter()
            .map(|s| r.parse_polynomial(s).unwrap())
            .collect();
        (r, g)
    }

    #[test]
    fn twisted_cubic_resolution() {
        let (r, g) = twisted_cubic();
        let res = resolve_ideal(&r, &g, false).unwrap();
        assert!(res.is_complex());
        assert_eq!(res.ranks(), vec![1, 3, 2]);
        let b = res.betti_table();
        assert_eq!(b.row_string(1), ". 3 2");
        assert_eq!(b.row_string(0), "1 . .");
        assert!(res.is_minimal());
    }

    #[test]
    fn syzygies_have_predicted_leads() {
        let (r, g) = twisted_cubic();
        let gb = groebner_basis(&r, &g);
        let step = schreyer_syzygies(&r, &gb, &[0]).unwrap();
        for s in &step.syzygies {
            assert_eq!(s.vector.leading_monomial(), Some(&s.expected_lead()));
        }
        // they form a Groebner basis under the induced order
        let vectors: Vec<_> = step.syzygies.iter().map(|s| s.vector.clone()).collect();
        assert!(is_groebner(r.field(), &step.order, &vectors).unwrap().is_groebner);
    }

    #[test]
    fn single_generator_has_no_syzygies() {
        let r = Ring::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let res = resolve_ideal(&r, &[r.parse_polynomial("x^2 + y^2").unwrap()], false).unwrap();
        assert_eq!(res.ranks(), vec![1, 1]);
    }

    #[test]
    fn termination_sort_examples() {
        let x = |e: &[u16], p| ModuleMonomial::new(Monomial::from_exponents(e), p);
        assert_eq!(termination_permutation(&[x(&[1], 0), x(&[2], 0)]), vec![0, 1]);
        // leads y^2, xy with last variable y: sorted to xy, y^2
        assert_eq!(termination_permutation(&[x(&[0, 2], 0), x(&[1, 1], 0)]), vec![1, 0]);
    }

    #[test]
    fn minimalization_cancels_units() {
        let f = PrimeField::new(101).unwrap();
        let r = Ring::new(f, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let p = |s: &str| r.parse_polynomial(s).unwrap();
        // the third generator is redundant
        let gens = vec![p("x^2"), p("y^2"), p("x^2 + y^2")];
        let pres = GradedMatrix::from_ideal(&gens).unwrap();
        let res = free_resolution(&r, &pres, false, None).unwrap();
        let min = res.minimalize();
        assert!(min.is_minimal());
        assert!(min.is_complex());
        assert_eq!(min.ranks(), vec![1, 2, 1]);
    }

    #[test]
    fn graded_matrix_checks_degrees() {
        let r = Ring::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let bad = GradedMatrix::new(vec![r.var(0)], vec![0], vec![2]);
        assert!(matches!(bad, Err(ResolutionError::NotHomogeneous { .. })));
        let m = GradedMatrix::new(vec![r.var(0), r.var(1)], vec![0], vec![1, 1]).unwrap();
        let t = m.transpose();
        assert_eq!(t.row_twists(), &[-1, -1]);
        assert_eq!(t.col_twists(), &[0]);
    }

    #[test]
    fn betti_rendering() {
        let t = BettiTable::from_entries([(0, 2, 3), (1, 3, 8), (2, 4, 2), (2, 5, 12), (3, 6, 13), (4, 7, 4)]);
        assert_eq!(t.row_string(2), "3 8 2 . .");
        assert_eq!(t.row_string(3), ". . 12 13 4");
        assert!(t.is_natural());
        assert_eq!(t.regularity(), Some(3));
        assert!(BettiTable::default().is_empty());
        let shown = t.to_string();
        assert!(shown.contains("total:"));
    }
}
