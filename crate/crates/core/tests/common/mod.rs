//! Test-only oracles that share no code with the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use syzygy::groebner::Ideal;
use syzygy::kernel::PrimeField;

pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

type Mono = Vec<u16>;
/// Sparse element of a graded free module: `(generator, monomial) -> coefficient`.
type Element = HashMap<(usize, Mono), u64>;

fn monomials(n: usize, d: usize) -> Vec<Mono> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=d)
        .rev()
        .flat_map(|a| {
            monomials(n - 1, d - a).into_iter().map(move |mut rest| {
                rest.insert(0, a as u16);
                rest
            })
        })
        .collect()
}

fn mono_mul(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Monomial basis of the degree-`d` piece of `⊕ S(−deg_j)`.
struct Basis {
    elems: Vec<(usize, Mono)>,
    index: HashMap<(usize, Mono), usize>,
}

impl Basis {
    fn new(n: usize, degs: &[usize], d: usize) -> Self {
        let elems: Vec<(usize, Mono)> = degs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a <= d)
            .flat_map(|(j, &a)| monomials(n, d - a).into_iter().map(move |m| (j, m)))
            .collect();
        let index = elems.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Basis { elems, index }
    }
}

/// Incremental row echelon form over `Z/p`.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

fn inv(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    /// Adds `v` to the span; true when it was independent.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * r) % p;
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else { return false };
        let s = inv(v[piv], p);
        v.iter_mut().for_each(|x| *x = *x * s % p);
        self.rows.push((piv, v));
        true
    }
}

/// Kernel of the `rows × cols` matrix `a` as a list of column vectors.
fn nullspace(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..a.len()).find(|&k| a[k][c] != 0) else { continue };
        a.swap(r, k);
        let s = inv(a[r][c], p);
        a[r].iter_mut().for_each(|x| *x = *x * s % p);
        let pivot_row = a[r].clone();
        for (k, row) in a.iter_mut().enumerate() {
            let f = row[c];
            if k != r && f != 0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[i][free]) % p;
            }
            v
        })
        .collect()
}

fn to_dense(x: &Element, shift: &[u16], basis: &Basis) -> Vec<u64> {
    let mut v = vec![0; basis.elems.len()];
    for ((j, m), c) in x {
        v[basis.index[&(*j, mono_mul(m, shift))]] = *c;
    }
    v
}

fn to_sparse(v: &[u64], basis: &Basis) -> Element {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (basis.elems[i].clone(), c)).collect()
}

/// Minimal generators, by degree, of a graded submodule `K ⊆ ⊕ S(−degs_j)`
/// given degree by degree. A degree-`d` generator is a vector of `K_d`
/// outside `S_1 · K_{d−1}`.
fn minimal_generators(
    n: usize,
    p: u64,
    degs: &[usize],
    dmax: usize,
    kernel_at: impl Fn(usize, &Basis) -> Vec<Vec<u64>>,
) -> Vec<(usize, Element)> {
    let mut out = Vec::new();
    let mut prev: Option<(Basis, Vec<Vec<u64>>)> = None;
    let dmin = degs.iter().copied().min().unwrap_or(0);
    for d in dmin..=dmax {
        let basis = Basis::new(n, degs, d);
        let k = kernel_at(d, &basis);
        let mut span = Echelon::new(p);
        if let Some((pb, pk)) = &prev {
            for v in pk {
                let sparse = to_sparse(v, pb);
                for x in 0..n {
                    let mut e = vec![0; n];
                    e[x] = 1;
                    span.insert(to_dense(&sparse, &e, &basis));
                }
            }
        }
        for v in &k {
            if span.insert(v.clone()) {
                out.push((d, to_sparse(v, &basis)));
            }
        }
        prev = Some((basis, k));
    }
    out
}

/// Graded Betti numbers of `S/I` from a minimal free resolution built by
/// linear algebra in each degree, listing rows `q < row_cap + 1` only. Meant
/// for rings with few variables.
pub fn resolution_oracle(ideal: &Ideal<PrimeField>, row_cap: usize) -> Vec<((usize, usize), u64)> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let p = ring.field().modulus() as u64;
    let ideal_gens: Vec<(usize, Element)> = ideal
        .generators()
        .iter()
        .map(|g| {
            let deg = g.degree().unwrap() as usize;
            let el = g.terms().iter().map(|(m, c)| ((0, m.exps(n).to_vec()), *c as u64)).collect();
            (deg, el)
        })
        .collect();

    let mut betti = BTreeMap::from([((0, 0), 1u64)]);
    let mut target = vec![0usize];
    let mut gens = minimal_generators(n, p, &target, 1 + row_cap, |d, basis| {
        let mut span = Echelon::new(p);
        for (a, g) in ideal_gens.iter().filter(|(a, _)| *a <= d) {
            for m in monomials(n, d - a) {
                span.insert(to_dense(g, &m, basis));
            }
        }
        span.rows.into_iter().map(|(_, v)| v).collect()
    });
    let mut i = 1;
    while !gens.is_empty() {
        for (d, _) in &gens {
            *betti.entry((i, d - i)).or_insert(0) += 1;
        }
        let source: Vec<usize> = gens.iter().map(|g| g.0).collect();
        let next = minimal_generators(n, p, &source, i + 1 + row_cap, |d, sbasis| {
            let tbasis = Basis::new(n, &target, d);
            let mut a = vec![vec![0u64; sbasis.elems.len()]; tbasis.elems.len()];
            for (col, (j, m)) in sbasis.elems.iter().enumerate() {
                for (row, c) in to_dense(&gens[*j].1, m, &tbasis).into_iter().enumerate() {
                    a[row][col] = c;
                }
            }
            nullspace(a, sbasis.elems.len(), p)
        });
        target = source;
        gens = next;
        i += 1;
    }
    betti.into_iter().collect()
}

#[test]
fn oracle_resolves_koszul_complex() {
    use syzygy::kernel::{MonomialOrder, Polynomial, Ring};
    let ring = Ring::new(PrimeField::default(), 3, MonomialOrder::Grevlex).unwrap();
    let vars = (0..3).map(|i| Polynomial::var(&ring, i)).collect();
    let ideal = Ideal::new(&ring, vars).unwrap();
    let want = vec![((0, 0), 1), ((1, 0), 3), ((2, 0), 3), ((3, 0), 1)];
    assert_eq!(resolution_oracle(&ideal, 2), want);
}
