//! Chung–Yao natural lattices: the skeleton ideal `I_{Δ(d+n, n)}`, seeded
//! generic hyperplanes to specialize it with, and the determinantal
//! presentation of the ideal.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{skeleton, Face};
use crate::error::{Error, Result};
use crate::geometry::{
    rational, specialize, LinearForm, PointConfiguration, Rational, SpecializationMap,
};
use crate::ideal::{sr_ideal, SquarefreeMonomialIdeal};
use crate::linalg::RationalMatrix;

pub const MAX_RETRIES: usize = 1000;
const COEFFICIENT_RANGE: std::ops::RangeInclusive<i64> = -9..=9;

/// All squarefree monomials of degree `n+1` on `n+d` variables.
pub fn chung_yao_ideal(d: usize, n: usize) -> Result<SquarefreeMonomialIdeal> {
    if d < 1 || n < 1 || d + n > 64 {
        return Err(Error::Parameters(format!(
            "need d, n >= 1 and d + n <= 64, got d={d}, n={n}"
        )));
    }
    sr_ideal(&skeleton(d + n, n)?)
}

/// Whether `forms` in `P^d` are in general position: every `min(d+1, m)` of
/// them independent, the `C(m, d)` intersection points pairwise distinct and
/// none at infinity for `chart`.
pub fn in_general_position(forms: &[LinearForm], d: usize, chart: usize) -> bool {
    if forms.iter().any(|f| f.len() != d + 1) || chart > d {
        return false;
    }
    let k = (d + 1).min(forms.len());
    let independent = (0..forms.len()).combinations(k).all(|s| {
        let rows = s.iter().map(|&i| forms[i].coefficients().to_vec()).collect();
        RationalMatrix::new(rows).rank() == k
    });
    if !independent {
        return false;
    }
    let mut seen = HashSet::new();
    for s in (0..forms.len()).combinations(d) {
        let rows = s.iter().map(|&i| forms[i].coefficients().to_vec()).collect();
        let mut kernel = RationalMatrix::new(rows).nullspace();
        if kernel.len() != 1 {
            return false;
        }
        let mut point = kernel.pop().expect("one vector");
        if point[chart].is_zero() {
            return false;
        }
        let w = point[chart].clone();
        point.iter_mut().for_each(|x| *x = &*x / &w);
        if !seen.insert(point) {
            return false;
        }
    }
    true
}

/// `m` seeded pseudorandom forms on `P^d` with small integer coefficients,
/// redrawn until they are in general position for the last-coordinate chart.
pub fn generic_forms(d: usize, m: usize, seed: u64) -> Result<Vec<LinearForm>> {
    if d < 1 || m < d + 1 {
        return Err(Error::Parameters(format!(
            "need m >= d + 1 forms to span P^d, got d={d}, m={m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let forms: Option<Vec<LinearForm>> = (0..m)
            .map(|_| {
                let coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(COEFFICIENT_RANGE)).collect();
                LinearForm::from_integers(&coeffs).ok()
            })
            .collect();
        if let Some(forms) = forms {
            if in_general_position(&forms, d, d) {
                return Ok(forms);
            }
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// A seeded `rows × cols` integer matrix with no vanishing maximal minor.
pub fn generic_matrix(rows: usize, cols: usize, seed: u64) -> Result<RationalMatrix> {
    if cols == 0 || rows < cols {
        return Err(Error::Parameters(format!(
            "need rows >= cols >= 1, got {rows}x{cols}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let data: Vec<Vec<Rational>> = (0..rows)
            .map(|_| (0..cols).map(|_| rational(rng.gen_range(COEFFICIENT_RANGE))).collect())
            .collect();
        let m = RationalMatrix::new(data);
        if vanishing_minor(&m).is_none() {
            return Ok(m);
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

fn submatrix(m: &RationalMatrix, rows: &[usize]) -> RationalMatrix {
    RationalMatrix::new(rows.iter().map(|&r| m.row(r).to_vec()).collect())
}

/// First row set (lexicographically) whose maximal minor vanishes.
fn vanishing_minor(m: &RationalMatrix) -> Option<Vec<usize>> {
    (0..m.rows())
        .combinations(m.cols())
        .find(|rows| submatrix(m, rows).determinant().is_zero())
}

/// Leibniz expansion of the minor of `M'` on `rows`, where row `i` of `M'`
/// is row `i` of `M` multiplied by `y_i`. Keys are exponent vectors.
fn scaled_minor(m: &RationalMatrix, rows: &[usize], variables: usize) -> HashMap<Vec<u32>, Rational> {
    let k = rows.len();
    let mut poly: HashMap<Vec<u32>, Rational> = HashMap::new();
    for perm in (0..k).permutations(k) {
        let inversions = (0..k)
            .tuple_combinations()
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        let mut coeff = if inversions % 2 == 0 { rational(1) } else { rational(-1) };
        let mut exponents = vec![0u32; variables];
        for (pos, &col) in perm.iter().enumerate() {
            coeff *= &m.row(rows[pos])[col];
            exponents[rows[pos]] += 1;
        }
        *poly.entry(exponents).or_insert_with(Rational::zero) += coeff;
    }
    poly.retain(|_, c| !c.is_zero());
    poly
}

/// Checks that the maximal minors of `M'` (row `i` of `M` scaled by `y_i`)
/// are nonzero multiples of exactly the generators of `I_{Δ(d+n, n)}`.
///
/// `M` must be `(n+d) × (n+1)` with no vanishing maximal minor.
pub fn determinantal_check(d: usize, n: usize, m: &RationalMatrix) -> Result<bool> {
    if m.rows() != n + d || m.cols() != n + 1 {
        return Err(Error::MatrixShape {
            rows: m.rows(),
            cols: m.cols(),
            expected_rows: n + d,
            expected_cols: n + 1,
        });
    }
    if let Some(rows) = vanishing_minor(m) {
        return Err(Error::VanishingMinor(rows));
    }
    let mut supports = BTreeSet::new();
    for rows in (0..n + d).combinations(n + 1) {
        let minor = scaled_minor(m, &rows, n + d);
        let constant = submatrix(m, &rows).determinant();
        // Expect the single term det(M_S) · prod_{i in S} y_i.
        let terms: Vec<_> = minor.into_iter().collect();
        let [(exponents, coeff)] = &terms[..] else {
            return Ok(false);
        };
        if *coeff != constant || exponents.iter().any(|&e| e > 1) {
            return Ok(false);
        }
        let support = Face::new(
            exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e == 1)
                .map(|(i, _)| i),
        )?;
        supports.insert(support);
    }
    let expected: BTreeSet<Face> = chung_yao_ideal(d, n)?.generators().iter().copied().collect();
    Ok(supports == expected)
}

/// The natural lattice `specialize(I_{Δ(d+n,n)}, generic_forms(d, d+n, seed))`.
pub fn chung_yao_configuration(
    d: usize,
    n: usize,
    seed: u64,
) -> Result<(SquarefreeMonomialIdeal, SpecializationMap, PointConfiguration)> {
    let ideal = chung_yao_ideal(d, n)?;
    let map = SpecializationMap::new(d, generic_forms(d, d + n, seed)?)?;
    let config = specialize(&ideal, &map, d)?;
    Ok((ideal, map, config))
}
