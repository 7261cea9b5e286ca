use std::collections::HashSet;

use itertools::Itertools;
use num::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::specialize::form_matrix;
use super::{rational_string, LinearForm, PointConfiguration, Rational};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// Exponent vectors of all degree-`degree` monomials in `vars` variables,
/// in lexicographic order.
pub(crate) fn monomial_exponents(vars: usize, degree: usize) -> Vec<Vec<u32>> {
    (0..vars)
        .combinations_with_replacement(degree)
        .map(|c| {
            let mut e = vec![0u32; vars];
            for v in c {
                e[v] += 1;
            }
            e
        })
        .collect()
}

fn monomial_value(point: &[Rational], exponents: &[u32]) -> Rational {
    point
        .iter()
        .zip(exponents)
        .filter(|(_, &e)| e > 0)
        .map(|(x, &e)| num::pow(x.clone(), e as usize))
        .product()
}

/// Whether evaluation of degree-`n` forms on `X` is bijective, i.e. the
/// square matrix of all degree-`n` monomials at the points is invertible.
pub fn is_n_correct(config: &PointConfiguration, n: usize) -> Result<bool> {
    let d = config.ambient_dim();
    let expected = binomial((d + n) as u64, d as u64);
    if config.len() as u128 != expected {
        return Err(Error::PointCount {
            expected,
            found: config.len(),
        });
    }
    let monomials = monomial_exponents(d + 1, n);
    let rows = config
        .points()
        .iter()
        .map(|p| {
            monomials
                .iter()
                .map(|e| monomial_value(p.coordinates(), e))
                .collect()
        })
        .collect();
    Ok(!RationalMatrix::new(rows).determinant().is_zero())
}

/// `Q_p = scale · prod_k pool[factors[k]]`, evaluating to `δ_pq` on the
/// chart representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcCertificate {
    pub point: usize,
    pub factors: Vec<usize>,
    #[serde(with = "rational_string")]
    pub scale: Rational,
}

/// `Q_p(q)` on the chart representative of point `q`.
pub fn evaluate_certificate(
    cert: &GcCertificate,
    config: &PointConfiguration,
    pool: &[LinearForm],
    q: usize,
) -> Rational {
    let point = config.points()[q]
        .dehomogenized(config.chart())
        .expect("validated chart");
    let product: Rational = cert.factors.iter().map(|&f| pool[f].eval(&point)).product();
    &cert.scale * product
}

/// Pool indices of the first occurrence of each form up to scaling.
fn distinct_indices(pool: &[LinearForm]) -> Vec<usize> {
    let mut seen = HashSet::new();
    (0..pool.len()).filter(|&i| seen.insert(&pool[i])).collect()
}

/// Lexicographically first selection of `n` forms (strictly increasing, or
/// non-decreasing with `repeats`) whose zero sets cover every point in
/// `targets`.
fn first_cover(
    zero_sets: &[Vec<bool>],
    candidates: &[usize],
    targets: &[usize],
    n: usize,
    repeats: bool,
) -> Option<Vec<usize>> {
    fn search(
        zero_sets: &[Vec<bool>],
        candidates: &[usize],
        uncovered: &[usize],
        start: usize,
        slots: usize,
        repeats: bool,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if uncovered.is_empty() {
            // Smallest completion: repeat the last pick, or take the next ones.
            if repeats {
                if let Some(&last) = chosen.last().or(candidates.first()) {
                    chosen.extend(std::iter::repeat_n(last, slots));
                    return true;
                }
                return slots == 0;
            }
            if candidates.len() - start >= slots {
                chosen.extend(&candidates[start..start + slots]);
                return true;
            }
            return false;
        }
        if slots == 0 {
            return false;
        }
        let first = uncovered[0];
        if !candidates[start..].iter().any(|&f| zero_sets[f][first]) {
            return false;
        }
        for pos in start..candidates.len() {
            let f = candidates[pos];
            let rest: Vec<usize> = uncovered.iter().copied().filter(|&q| !zero_sets[f][q]).collect();
            chosen.push(f);
            let next = if repeats { pos } else { pos + 1 };
            if search(zero_sets, candidates, &rest, next, slots - 1, repeats, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(n);
    search(zero_sets, candidates, targets, 0, n, repeats, &mut chosen).then_some(chosen)
}

/// Searches a certificate for every point; `None` entries could not be
/// certified from this pool.
///
/// Forms equal up to scaling are considered once (first occurrence). Sets
/// of distinct forms are tried first, then multisets when `allow_repeats`.
pub fn certify_points(
    config: &PointConfiguration,
    pool: &[LinearForm],
    n: usize,
    allow_repeats: bool,
) -> Vec<Option<GcCertificate>> {
    let points = config.dehomogenized();
    let forms = distinct_indices(pool);
    let values: Vec<Vec<Rational>> = (0..pool.len())
        .map(|f| {
            if forms.contains(&f) {
                points.iter().map(|p| pool[f].eval(p)).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let zero_sets: Vec<Vec<bool>> = values
        .iter()
        .map(|v| v.iter().map(Zero::is_zero).collect())
        .collect();

    (0..points.len())
        .into_par_iter()
        .map(|p| {
            let candidates: Vec<usize> = forms
                .iter()
                .copied()
                .filter(|&f| !zero_sets[f][p])
                .collect();
            let targets: Vec<usize> = (0..points.len()).filter(|&q| q != p).collect();
            let factors = first_cover(&zero_sets, &candidates, &targets, n, false).or_else(|| {
                allow_repeats
                    .then(|| first_cover(&zero_sets, &candidates, &targets, n, true))
                    .flatten()
            })?;
            let at_p: Rational = factors.iter().map(|&f| values[f][p].clone()).product();
            Some(GcCertificate {
                point: p,
                factors,
                scale: Rational::one() / at_p,
            })
        })
        .collect()
}

/// A certificate for every point, or `None` if some point has none from
/// this pool. Absence does not mean the configuration is not GC.
pub fn gc_certificates(
    config: &PointConfiguration,
    pool: &[LinearForm],
    n: usize,
    allow_repeats: bool,
) -> Option<Vec<GcCertificate>> {
    certify_points(config, pool, n, allow_repeats)
        .into_iter()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneCount {
    pub form: usize,
    pub count: usize,
    pub maximal: bool,
}

/// Points on each pool form; maximal when the count is `C(d-1+n, n)`.
pub fn maximal_hyperplanes(
    config: &PointConfiguration,
    pool: &[LinearForm],
    n: usize,
) -> Vec<HyperplaneCount> {
    let d = config.ambient_dim() as u64;
    let target = binomial(d - 1 + n as u64, n as u64);
    pool.iter()
        .enumerate()
        .map(|(form, l)| {
            let count = config.points().iter().filter(|p| l.vanishes_at(p)).count();
            HyperplaneCount {
                form,
                count,
                maximal: count as u128 == target,
            }
        })
        .collect()
}

/// Every hyperplane through `d` points of `X` in linearly general position,
/// deduplicated, in order of first discovery.
pub fn spanned_hyperplanes(config: &PointConfiguration) -> Vec<LinearForm> {
    let d = config.ambient_dim();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for subset in (0..config.len()).combinations(d) {
        let rows = subset
            .iter()
            .map(|&i| config.points()[i].coordinates().to_vec())
            .collect();
        let mut kernel = RationalMatrix::new(rows).nullspace();
        if kernel.len() != 1 {
            continue;
        }
        let form = LinearForm::new(kernel.pop().expect("one vector")).expect("nonzero kernel");
        if seen.insert(form.clone()) {
            out.push(form);
        }
    }
    out
}

/// `pool` followed by the spanned hyperplanes of `X` not already in it.
pub fn augment_with_spanned(config: &PointConfiguration, pool: &[LinearForm]) -> Vec<LinearForm> {
    let existing: HashSet<&LinearForm> = pool.iter().collect();
    let extra: Vec<LinearForm> = spanned_hyperplanes(config)
        .into_iter()
        .filter(|f| !existing.contains(f))
        .collect();
    pool.iter().cloned().chain(extra).collect()
}

/// Rank of `forms` as vectors.
pub(crate) fn form_rank(forms: &[&LinearForm]) -> usize {
    if forms.is_empty() {
        return 0;
    }
    form_matrix(forms.iter().copied()).rank()
}
