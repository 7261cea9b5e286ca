use std::collections::HashMap;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::verify::{form_rank, monomial_exponents};
use super::{GcCertificate, LinearForm, PointConfiguration, Rational};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// Coefficient vector of `prod_k forms[k]` over the degree-`k` monomials of
/// `vars` variables, indexed by `basis`.
fn expand_product(
    forms: &[&LinearForm],
    vars: usize,
    basis: &HashMap<Vec<u32>, usize>,
) -> Vec<Rational> {
    let mut poly: HashMap<Vec<u32>, Rational> = HashMap::from([(vec![0u32; vars], Rational::one())]);
    for form in forms {
        let mut next: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (exp, coeff) in &poly {
            for (v, c) in form.coefficients().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut e = exp.clone();
                e[v] += 1;
                *next.entry(e).or_insert_with(Rational::zero) += coeff * c;
            }
        }
        poly = next;
    }
    let mut out = vec![Rational::zero(); basis.len()];
    for (exp, coeff) in poly {
        out[basis[&exp]] = coeff;
    }
    out
}

fn span_dimension(products: &[Vec<&LinearForm>], vars: usize, degree: usize) -> usize {
    let basis: HashMap<Vec<u32>, usize> = monomial_exponents(vars, degree)
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let rows: Vec<Vec<Rational>> = products
        .iter()
        .map(|p| expand_product(p, vars, &basis))
        .collect();
    if rows.is_empty() {
        return 0;
    }
    RationalMatrix::new(rows).rank()
}

/// The products `Q_p · l_{p,j}` generating the vanishing ideal in degree
/// `n+1`, together with the dimension they span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    /// Pool indices of the factors of each product.
    pub products: Vec<Vec<usize>>,
    pub span_dimension: usize,
    pub expected_dimension: u128,
}

/// Builds `Q_p · l_{p,j}` for each point `p` and each of the first `d`
/// independent pool forms through `p`, checks that every product vanishes
/// on `X`, and that they span `C(n+d, n+1)` dimensions.
pub fn generators_from_certificates(
    config: &PointConfiguration,
    certificates: &[GcCertificate],
    pool: &[LinearForm],
) -> Result<GeneratorReport> {
    let d = config.ambient_dim();
    let n = certificates.first().map_or(0, |c| c.factors.len());
    let mut products: Vec<Vec<usize>> = Vec::new();
    for p in 0..config.len() {
        let cert = certificates
            .iter()
            .find(|c| c.point == p)
            .ok_or(Error::MissingCertificate(p))?;
        let point = &config.points()[p];
        let mut through: Vec<usize> = Vec::with_capacity(d);
        for (j, form) in pool.iter().enumerate() {
            if through.len() == d {
                break;
            }
            if !form.vanishes_at(point) {
                continue;
            }
            let mut trial: Vec<&LinearForm> = through.iter().map(|&k| &pool[k]).collect();
            trial.push(form);
            if form_rank(&trial) == trial.len() {
                through.push(j);
            }
        }
        if through.len() < d {
            return Err(Error::TooFewVanishingForms {
                point: p,
                found: through.len(),
                needed: d,
            });
        }
        for j in through {
            let mut factors = cert.factors.clone();
            factors.push(j);
            products.push(factors);
        }
    }

    for factors in &products {
        let vanishes = config.points().iter().all(|q| {
            factors
                .iter()
                .any(|&f| pool[f].vanishes_at(q))
        });
        if !vanishes {
            return Err(Error::ProductDoesNotVanish(factors.clone()));
        }
    }

    let forms: Vec<Vec<&LinearForm>> = products
        .iter()
        .map(|f| f.iter().map(|&k| &pool[k]).collect())
        .collect();
    let span = span_dimension(&forms, d + 1, n + 1);
    let expected = binomial((n + d) as u64, n as u64 + 1);
    if span as u128 != expected {
        return Err(Error::GeneratorSpan {
            found: span,
            expected,
        });
    }
    Ok(GeneratorReport {
        products,
        span_dimension: span,
        expected_dimension: expected,
    })
}

/// Dimension spanned by the certificate products `Q_p` in degree `n`; for a
/// GC set this is `C(n+d, d)`, all forms of degree `n`.
pub fn certificate_span_dimension(
    config: &PointConfiguration,
    certificates: &[GcCertificate],
    pool: &[LinearForm],
) -> usize {
    let n = certificates.first().map_or(0, |c| c.factors.len());
    let forms: Vec<Vec<&LinearForm>> = certificates
        .iter()
        .map(|c| c.factors.iter().map(|&k| &pool[k]).collect())
        .collect();
    span_dimension(&forms, config.ambient_dim() + 1, n)
}
