//! Graded Betti numbers of `S/I` from Koszul cohomology of graded pieces.
//!
//! `β_{p,q}` is the homology of
//! `∧^{p+1}V ⊗ A_{q-1} → ∧^p V ⊗ A_q → ∧^{p-1}V ⊗ A_{q+1}` for `A = S/I`,
//! so `β_{p,q} = C(N,p)·H(q) − r(p,q) − r(p+1,q−1)` where `r(p,q)` is the
//! rank of the differential leaving `∧^p V ⊗ A_q`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{restrict_linear, GroebnerBasis};
use crate::kernel::field::Field;
use crate::kernel::matrix::{sparse_rank, SparseVec};
use crate::kernel::monomial::Monomial;

use super::hilbert::{binomial, hilbert_data, HilbertData};

/// Hard cap on the rows of an adaptively computed table.
pub const ROW_CAP: usize = 20;

/// Seed for the random linear forms used to shrink the ambient ring before
/// computing Koszul homology; fixed so tables are reproducible.
const REDUCTION_SEED: u64 = 0x6b6f_737a_756c;

/// Betti table of a cyclic graded module `S/I`, rows `q`, columns `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
    rows: usize,
    complete: bool,
}

impl BettiTable {
    /// Builds a table from its nonzero entries. `rows` counts the rows known
    /// (including trailing zero rows); `complete` says that all nonzero
    /// entries are present.
    pub fn from_entries(nvars: usize, entries: impl IntoIterator<Item = ((usize, usize), u64)>, rows: usize, complete: bool) -> Self {
        let entries = entries.into_iter().filter(|(_, b)| *b != 0).collect();
        BettiTable { nvars, entries, rows, complete }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((p, q), β)`, ordered by `(p, q)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Number of rows that were computed.
    pub fn rows_computed(&self) -> usize {
        self.rows
    }

    /// Projective dimension: the last nonzero column.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Last nonzero row.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// `β_{1,1}, β_{2,1}, ..., β_{len,1}`.
    pub fn strand(&self, q: usize, len: usize) -> Vec<u64> {
        (1..=len).map(|p| self.get(p, q)).collect()
    }

    /// `Σ (−1)^p β_{p,q} z^{p+q}` as a coefficient vector.
    pub fn alternating_sum(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (&(p, q), &b) in &self.entries {
            let d = p + q;
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            let sign = if p % 2 == 0 { 1 } else { -1 };
            out[d] += sign * b as i64;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Largest `p` with `β_{i,j} = 0` for all `i ≤ p`, `j ≥ 2`; `None` when
    /// there is no nonzero entry below the first row (index infinity).
    pub fn gl_index(&self) -> Option<usize> {
        self.entries.keys().filter(|k| k.1 >= 2).map(|k| k.0).min().map(|p| p.saturating_sub(1))
    }

    /// Betti diagram: one row per `q`, one column per `p`, `.` for zero.
    pub fn render(&self) -> String {
        let pmax = self.pd();
        let qmax = self.reg();
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .chain(std::iter::once(pmax.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = qmax.to_string().len() + 1;
        let mut s = String::new();
        let _ = write!(s, "{:label$}", "");
        for p in 0..=pmax {
            let _ = write!(s, " {p:>width$}");
        }
        s.push('\n');
        for q in 0..=qmax {
            let _ = write!(s, "{:>label$}", format!("{q}:"));
            for p in 0..=pmax {
                match self.get(p, q) {
                    0 => {
                        let _ = write!(s, " {:>width$}", ".");
                    }
                    b => {
                        let _ = write!(s, " {b:>width$}");
                    }
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Standard monomials of `S/I` by degree, with the multiplication maps
/// `m ↦ NF(x_i·m)` expressed in the standard basis one degree up.
struct GradedPieces<'a, F: Field> {
    gb: &'a GroebnerBasis<F>,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// `mult[q][j][i]`: coordinates of `x_i · bases[q][j]` in degree `q+1`.
    mult: Vec<Vec<Vec<SparseVec<F>>>>,
}

impl<'a, F: Field> GradedPieces<'a, F> {
    fn new(gb: &'a GroebnerBasis<F>) -> Self {
        let one = gb.ring().monomial(&[]);
        let base0 = if gb.is_standard(&one) { vec![one] } else { Vec::new() };
        let mut g = GradedPieces { gb, bases: Vec::new(), index: Vec::new(), mult: Vec::new() };
        g.push_basis(base0);
        g
    }

    fn push_basis(&mut self, b: Vec<Monomial>) {
        self.index.push(b.iter().enumerate().map(|(i, m)| (*m, i)).collect());
        self.bases.push(b);
    }

    fn ensure_degree(&mut self, d: usize) {
        let ring = self.gb.ring().clone();
        let n = ring.nvars();
        while self.bases.len() <= d {
            // every standard monomial of degree q+1 is x_i times a standard
            // monomial of degree q whose variables all have index ≤ i
            let prev = self.bases.last().unwrap();
            let mut next = Vec::new();
            for m in prev {
                let last = (0..n).rev().find(|&i| m.exp(i) > 0).unwrap_or(0);
                for i in last..n {
                    let c = m.mul(&ring.var_monomial(i));
                    if self.gb.is_standard(&c) {
                        next.push(c);
                    }
                }
            }
            next.sort_by(|a, b| ring.cmp(b, a));
            self.push_basis(next);
        }
        while self.mult.len() + 1 < self.bases.len() {
            let q = self.mult.len();
            let field = ring.field();
            let up = &self.index[q + 1];
            let table: Vec<Vec<SparseVec<F>>> = self.bases[q]
                .par_iter()
                .map(|m| {
                    (0..n)
                        .map(|i| {
                            let c = m.mul(&ring.var_monomial(i));
                            if let Some(&k) = up.get(&c) {
                                return vec![(k, field.one())];
                            }
                            let poly = crate::kernel::Polynomial::monomial_term(&ring, c, field.one());
                            let nf = self.gb.normal_form(&poly).expect("same ring");
                            let mut v: SparseVec<F> =
                                nf.terms().iter().map(|(mm, cc)| (up[mm], cc.clone())).collect();
                            v.sort_by_key(|t| t.0);
                            v
                        })
                        .collect()
                })
                .collect();
            self.mult.push(table);
        }
    }

    fn dim(&self, q: usize) -> usize {
        self.bases.get(q).map_or(0, |b| b.len())
    }
}

/// Subsets of `0..n` of size `p` as bitmasks in lexicographic order.
fn subsets(n: usize, p: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, left: usize, cur: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, cur | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, 0, &mut out);
    }
    out
}

/// Rank of the Koszul differential `∧^p V ⊗ A_q → ∧^{p-1} V ⊗ A_{q+1}`,
/// `e_J ⊗ m ↦ Σ_k (−1)^k e_{J∖j_k} ⊗ x_{j_k} m` (positions `k` counted from 0).
fn koszul_rank<F: Field>(g: &GradedPieces<'_, F>, p: usize, q: usize) -> usize {
    let n = g.gb.ring().nvars();
    if p == 0 || p > n || g.dim(q) == 0 || g.dim(q + 1) == 0 {
        return 0;
    }
    let field = g.gb.ring().field();
    let target: HashMap<u32, usize> = subsets(n, p - 1).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    let hq1 = g.dim(q + 1);
    let mut rows: Vec<SparseVec<F>> = Vec::with_capacity(binomial(n as i64, p as i64) as usize * g.dim(q));
    for s in subsets(n, p) {
        for j in 0..g.dim(q) {
            let mut row: SparseVec<F> = Vec::new();
            let mut k = 0;
            for i in 0..n {
                if s & (1 << i) == 0 {
                    continue;
                }
                let col0 = target[&(s & !(1 << i))] * hq1;
                let negate = k % 2 == 1;
                for (c, v) in &g.mult[q][j][i] {
                    let v = if negate { field.neg(v) } else { v.clone() };
                    row.push((col0 + c, v));
                }
                k += 1;
            }
            row.sort_by_key(|t| t.0);
            rows.push(row);
        }
    }
    sparse_rank(field, rows)
}

/// One Betti number straight from the Koszul complex of `S/I`.
pub fn koszul_betti<F: Field>(gb: &GroebnerBasis<F>, p: usize, q: usize) -> u64 {
    let n = gb.ring().nvars();
    if p > n {
        return 0;
    }
    let mut g = GradedPieces::new(gb);
    g.ensure_degree(q + 1);
    let total = binomial(n as i64, p as i64) as usize * g.dim(q);
    let r_out = koszul_rank(&g, p, q);
    let r_in = if q == 0 { 0 } else { koszul_rank(&g, p + 1, q - 1) };
    (total - r_out - r_in) as u64
}

/// Standard monomials of degree `m`.
pub fn graded_piece_basis<F: Field>(gb: &GroebnerBasis<F>, m: usize) -> Vec<Monomial> {
    let mut g = GradedPieces::new(gb);
    g.ensure_degree(m);
    g.bases.swap_remove(m)
}

/// Quotients `S/I` by random linear forms for as long as each form is a
/// nonzerodivisor, which leaves every Betti number unchanged. A form `ℓ` is
/// a nonzerodivisor exactly when `S/(I,ℓ)` has the same K-polynomial as
/// `S/I`, which is checked exactly.
fn reduce_by_regular_forms<F: Field>(gb: &GroebnerBasis<F>, h: &HilbertData) -> Result<GroebnerBasis<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(REDUCTION_SEED);
    let mut cur = gb.clone();
    let mut remaining_dim = h.dimension;
    'outer: while remaining_dim > 0 && cur.ring().nvars() > 1 {
        let r = cur.ring().nvars() - 1;
        for _ in 0..3 {
            let form: Vec<F::Elem> = (0..r).map(|_| cur.ring().field().random(&mut rng)).collect();
            let next = restrict_linear(&cur.to_ideal(), &[form])?.groebner();
            if next.is_unit() {
                continue;
            }
            if hilbert_data(&next)?.numerator == h.numerator {
                cur = next;
                remaining_dim -= 1;
                continue 'outer;
            }
        }
        break;
    }
    Ok(cur)
}

/// Full Betti table of `S/I`.
///
/// Columns run to `p_max` (default `N`). Without `q_max`, rows are computed
/// until a zero row past row 0 is reached at which the alternating sum of
/// the table equals the Hilbert numerator; more than [`ROW_CAP`] rows is an
/// error. Before the Koszul computation the ring is cut down by random
/// linear nonzerodivisors.
pub fn betti_table<F: Field>(gb: &GroebnerBasis<F>, p_max: Option<usize>, q_max: Option<usize>) -> Result<BettiTable> {
    let h = hilbert_data(gb)?;
    let n_orig = gb.ring().nvars();
    let reduced = reduce_by_regular_forms(gb, &h)?;
    let n = reduced.ring().nvars();
    let p_last = p_max.unwrap_or(n).min(n);
    let columns_all = p_last == n;

    let mut g = GradedPieces::new(&reduced);
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut prev_ranks: Vec<usize> = vec![0; n + 2];
    let cap = q_max.unwrap_or(ROW_CAP);
    let mut q = 0;
    loop {
        if q > cap {
            if q_max.is_some() {
                return Ok(BettiTable { nvars: n_orig, entries, rows: q, complete: false });
            }
            return Err(Error::RegularityCapExceeded(ROW_CAP));
        }
        g.ensure_degree(q + 1);
        let ranks: Vec<usize> = (0..=n + 1)
            .into_par_iter()
            .map(|p| if p <= p_last + 1 { koszul_rank(&g, p, q) } else { 0 })
            .collect();
        let mut row_zero = true;
        for p in 0..=p_last {
            let total = binomial(n as i64, p as i64) as usize * g.dim(q);
            let b = total - ranks[p] - prev_ranks[p + 1];
            if b != 0 {
                entries.insert((p, q), b as u64);
                row_zero = false;
            }
        }
        prev_ranks = ranks;
        q += 1;
        if q_max.is_none() && row_zero && q > 1 && columns_all {
            let table = BettiTable { nvars: n_orig, entries: entries.clone(), rows: q, complete: true };
            let mut k = h.numerator.clone();
            while k.last() == Some(&0) {
                k.pop();
            }
            if table.alternating_sum() == k {
                return Ok(table);
            }
        }
        if q_max.is_none() && !columns_all && row_zero && q > 1 {
            return Ok(BettiTable { nvars: n_orig, entries, rows: q, complete: false });
        }
    }
}
