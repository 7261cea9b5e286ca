//! Reduced simplicial homology over the rationals, Reisner's criterion and
//! the face-count laws satisfied by Bi-Cohen–Macaulay complexes.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, FVector, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{sr_ideal, SquarefreeMonomialIdeal};
use crate::linalg::integer_rank;

/// Reduced Betti numbers; `ranks[k]` is the rank in dimension `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub ranks: Vec<u64>,
}

impl HomologyProfile {
    /// Rank of reduced homology in dimension `dim`, zero outside the range.
    pub fn rank(&self, dim: isize) -> u64 {
        if dim < -1 {
            return 0;
        }
        self.ranks.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    /// `sum_k (-1)^k rank H̃_k`.
    pub fn reduced_euler_characteristic(&self) -> i128 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i128 } else { -(r as i128) })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Boundary matrix from the faces in `upper` to those in `lower`, with
/// columns in the given (mask) order.
fn boundary_matrix(lower: &[Face], upper: &[Face]) -> Vec<Vec<i64>> {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, f)| (f.mask(), i)).collect();
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, sigma) in upper.iter().enumerate() {
        for (pos, v) in sigma.vertices().enumerate() {
            let row = index[&sigma.without(v).mask()];
            m[row][col] = if pos % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Reduced homology ranks in dimensions `-1 ..= dim Δ`.
pub fn reduced_homology(complex: &SimplicialComplex) -> Result<HomologyProfile> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let layers = complex.faces_by_dimension();
    // boundary_ranks[k] = rank of the map out of layer k.
    let mut boundary_ranks = vec![0usize; layers.len() + 1];
    for k in 1..layers.len() {
        boundary_ranks[k] = integer_rank(&boundary_matrix(&layers[k - 1], &layers[k]));
    }
    let ranks = (0..layers.len())
        .map(|k| (layers[k].len() - boundary_ranks[k] - boundary_ranks[k + 1]) as u64)
        .collect();
    Ok(HomologyProfile { ranks })
}

/// Outcome of Reisner's criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    /// First face (by mask) whose link has homology below its top
    /// dimension, with that dimension.
    pub failure: Option<(Face, isize)>,
}

/// Lowest dimension below the top in which `lk(σ)` has homology.
fn link_defect(complex: &SimplicialComplex, sigma: Face) -> Option<isize> {
    let link = complex.link(sigma).expect("sigma enumerated from the complex");
    let top = link.dimension().expect("links of faces are nonvoid");
    let h = reduced_homology(&link).expect("nonvoid");
    (-1..top).find(|&dim| h.rank(dim) != 0)
}

/// Reisner's criterion: every link has reduced homology only in its top
/// dimension. Faces are examined in mask order and the first failure wins.
pub fn is_cohen_macaulay(complex: &SimplicialComplex) -> Result<CmVerdict> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = complex.faces();
    let failure = faces
        .par_iter()
        .find_map_first(|&sigma| link_defect(complex, sigma).map(|dim| (sigma, dim)));
    Ok(CmVerdict {
        cohen_macaulay: failure.is_none(),
        failure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicmVerdict {
    pub primal: CmVerdict,
    pub dual: CmVerdict,
}

impl BicmVerdict {
    pub fn is_bicm(&self) -> bool {
        self.primal.cohen_macaulay && self.dual.cohen_macaulay
    }
}

/// Decides Bi-Cohen–Macaulayness by running Reisner on both the complex of
/// `ideal` and its Alexander dual.
pub fn is_bicm(ideal: &SquarefreeMonomialIdeal) -> Result<BicmVerdict> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let complex = ideal.complex();
    Ok(BicmVerdict {
        primal: is_cohen_macaulay(&complex)?,
        dual: is_cohen_macaulay(&complex.alexander_dual())?,
    })
}

/// Checks `f_i(Δ∨) + f_{m-i-2}(Δ) = C(m, i+1)` for `i` in `0 ..= m-2`.
pub fn fv_duality_check(complex: &SimplicialComplex) -> bool {
    let m = complex.vertex_count();
    let f = complex.f_vector();
    let f_dual = complex.alexander_dual().f_vector();
    (0..m.saturating_sub(1)).all(|i| {
        let lhs = f_dual.f(i as isize) as u128 + f.f(m as isize - i as isize - 2) as u128;
        lhs == binomial(m as u64, i as u64 + 1)
    })
}

/// `F(t) = (1+t)^i · (1 + m t + C(m,2) t^2 + .. + C(m,k) t^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FvectFactorization {
    pub i: usize,
    pub m: u64,
    pub k: usize,
}

/// Divides by `1 + t`, or `None` when the division is not exact.
fn divide_by_one_plus_t(p: &[i128]) -> Option<Vec<i128>> {
    if p.len() < 2 {
        return None;
    }
    let mut q = Vec::with_capacity(p.len() - 1);
    let mut carry = 0i128;
    for &a in &p[..p.len() - 1] {
        carry = a - carry;
        q.push(carry);
    }
    (p[p.len() - 1] == carry).then_some(q)
}

/// `Some((m, k))` when `p = 1 + m t + .. + C(m,k) t^k`.
fn truncated_binomial(p: &[i128]) -> Option<(u64, usize)> {
    if p.first() != Some(&1) {
        return None;
    }
    let k = p.len() - 1;
    if k == 0 {
        return Some((0, 0));
    }
    let m = u64::try_from(p[1]).ok()?;
    if m < k as u64 {
        return None;
    }
    p.iter()
        .enumerate()
        .all(|(j, &c)| c as u128 == binomial(m, j as u64) && c >= 0)
        .then_some((m, k))
}

/// Factors the face-count polynomial into a power of `1+t` times a
/// truncated binomial, preferring the largest power of `1+t`.
pub fn bicm_fvector_factorization(f: &FVector) -> Option<FvectFactorization> {
    if f.counts().is_empty() {
        return None;
    }
    let mut quotients = vec![f.counts().iter().map(|&c| c as i128).collect::<Vec<_>>()];
    while let Some(q) = divide_by_one_plus_t(quotients.last().expect("nonempty")) {
        quotients.push(q);
    }
    quotients
        .iter()
        .enumerate()
        .rev()
        .find_map(|(i, q)| truncated_binomial(q).map(|(m, k)| FvectFactorization { i, m, k }))
}

/// Wire form of a Cohen–Macaulay check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub cm: bool,
    pub dual_cm: bool,
    pub bicm: bool,
    pub failing_face: Option<Face>,
    pub fvect_factorization: Option<FvectFactorization>,
}

/// Runs Reisner on `Δ` and `Δ∨` and the face-count factorization on `Δ`.
///
/// `failing_face` reports the primal failure if any, else the dual one.
pub fn cm_report(complex: &SimplicialComplex) -> Result<CmReport> {
    let ideal = sr_ideal(complex)?;
    if ideal.is_zero() {
        // The full simplex is Cohen–Macaulay; its dual is void.
        let primal = is_cohen_macaulay(complex)?;
        return Ok(CmReport {
            cm: primal.cohen_macaulay,
            dual_cm: false,
            bicm: false,
            failing_face: primal.failure.map(|f| f.0),
            fvect_factorization: bicm_fvector_factorization(&complex.f_vector()),
        });
    }
    let verdict = is_bicm(&ideal)?;
    Ok(CmReport {
        cm: verdict.primal.cohen_macaulay,
        dual_cm: verdict.dual.cohen_macaulay,
        bicm: verdict.is_bicm(),
        failing_face: verdict.primal.failure.or(verdict.dual.failure).map(|f| f.0),
        fvect_factorization: bicm_fvector_factorization(&complex.f_vector()),
    })
}
