//! Seeded corpora and brute-force oracles that share no code with the
//! library beyond its public types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gcnodes::gc::infer_parameters;
use gcnodes::{sr_ideal, skeleton, Face, SimplicialComplex, SquarefreeMonomialIdeal};
use itertools::Itertools;
use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A complex on `1..=max_vertices` vertices with a few random facets.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> SimplicialComplex {
    let m = rng.gen_range(1..=max_vertices);
    let facets = rng.gen_range(1..=6);
    let faces: Vec<Face> = (0..facets)
        .map(|_| {
            let size = rng.gen_range(0..=m.min(5));
            let vs: BTreeSet<usize> = (0..size).map(|_| rng.gen_range(0..m)).collect();
            Face::new(vs).unwrap()
        })
        .collect();
    SimplicialComplex::from_facets(m, faces).unwrap()
}

pub fn complex_corpus(count: usize, max_vertices: usize, seed: u64) -> Vec<SimplicialComplex> {
    let mut r = rng(seed);
    (0..count).map(|_| random_complex(&mut r, max_vertices)).collect()
}

/// Ideals whose GC parameters can be inferred: skeleton ideals and random
/// equigenerated ideals that happen to have the right degree.
pub fn gc_ideal_corpus(seed: u64) -> Vec<SquarefreeMonomialIdeal> {
    let mut out = Vec::new();
    for (i, j) in [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3), (6, 2), (6, 3)] {
        out.push(sr_ideal(&skeleton(i, j).unwrap()).unwrap());
    }
    let mut r = rng(seed);
    let mut attempts = 0;
    while out.len() < 40 && attempts < 20_000 {
        attempts += 1;
        let m = r.gen_range(4..=8);
        let degree = r.gen_range(2..=3);
        let all: Vec<Vec<usize>> = (0..m).combinations(degree).collect();
        let count = r.gen_range(1..=all.len());
        let gens: BTreeSet<Face> = (0..count)
            .map(|_| Face::new(all[r.gen_range(0..all.len())].iter().copied()).unwrap())
            .collect();
        let ideal = SquarefreeMonomialIdeal::new(m, gens).unwrap();
        if infer_parameters(&ideal).is_ok() && !out.contains(&ideal) {
            out.push(ideal);
        }
    }
    out
}

/// All faces of `c` as sorted vertex lists, the empty face included.
pub fn naive_faces(c: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
    let mut faces = BTreeSet::new();
    for facet in c.facets() {
        let vs = facet.to_vec();
        for k in 0..=vs.len() {
            for s in vs.iter().copied().combinations(k) {
                faces.insert(s);
            }
        }
    }
    faces
}

/// Rank by plain Gaussian elimination over the rationals.
pub fn naive_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[rank][c];
                let pivot = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers indexed by dimension + 1 (entry 0 is dimension -1).
pub fn naive_reduced_betti(faces: &BTreeSet<Vec<usize>>) -> Vec<usize> {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let by_size: Vec<Vec<&Vec<usize>>> = (0..=top)
        .map(|k| faces.iter().filter(|f| f.len() == k).collect())
        .collect();
    // ranks[k] = rank of the boundary from size k to size k - 1.
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let lower = &by_size[k - 1];
        let rows: Vec<Vec<BigRational>> = by_size[k]
            .iter()
            .map(|f| {
                let mut row = vec![BigRational::zero(); lower.len()];
                for (drop, _) in f.iter().enumerate() {
                    let mut g = (*f).clone();
                    g.remove(drop);
                    let j = lower.iter().position(|h| **h == g).unwrap();
                    let sign = if drop % 2 == 0 { 1 } else { -1 };
                    row[j] = BigRational::from_integer(sign.into());
                }
                row
            })
            .collect();
        ranks[k] = if rows.is_empty() { 0 } else { naive_rank(rows) };
    }
    (0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Reisner's criterion with the naive homology above.
pub fn naive_is_cm(c: &SimplicialComplex) -> bool {
    let faces = naive_faces(c);
    faces.iter().all(|sigma| {
        let link: BTreeSet<Vec<usize>> = faces
            .iter()
            .filter(|tau| tau.iter().all(|v| !sigma.contains(v)))
            .filter(|tau| {
                let mut u: Vec<usize> = tau.iter().chain(sigma).copied().collect();
                u.sort_unstable();
                faces.contains(&u)
            })
            .cloned()
            .collect();
        let betti = naive_reduced_betti(&link);
        // Only the top entry may be nonzero.
        betti[..betti.len() - 1].iter().all(|&b| b == 0)
    })
}

/// Lexicographically first degree-n squarefree monomial outside `component`
/// that is not in the ideal but lands in it after multiplying by any
/// variable of the component.
pub fn brute_force_witness(
    ideal: &SquarefreeMonomialIdeal,
    component: Face,
    n: usize,
) -> Option<Face> {
    (0..ideal.variable_count())
        .filter(|v| !component.contains(*v))
        .combinations(n)
        .map(|s| Face::new(s).unwrap())
        .find(|&tau| {
            !ideal.contains_monomial(tau)
                && component.vertices().all(|v| ideal.contains_monomial(tau.with(v)))
        })
}

/// Minimal vertex sets meeting every generator, by exhaustion.
pub fn brute_force_decomposition(ideal: &SquarefreeMonomialIdeal) -> BTreeSet<Face> {
    let m = ideal.variable_count();
    let covers: Vec<Face> = (0..1u64 << m)
        .map(Face::from_mask)
        .filter(|s| ideal.generators().iter().all(|g| !g.is_disjoint(*s)))
        .collect();
    covers
        .iter()
        .copied()
        .filter(|s| !covers.iter().any(|t| t != s && t.is_subset(*s)))
        .collect()
}
