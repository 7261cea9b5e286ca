use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub shift: usize,
    pub rank: u128,
}

/// Graded ranks of the Eagon–Northcott resolution of the vanishing ideal
/// of a `GC_{d,n}` set, with the Hilbert series data they determine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionProfile {
    pub d: usize,
    pub n: usize,
    /// Homological degrees `1..=d`.
    pub terms: Vec<ResolutionTerm>,
    /// Coefficients of `1 + sum_i (-1)^i b_i t^{n+i}`, lowest degree first;
    /// the Hilbert series is this over `(1-t)^{d+1}`.
    pub hilbert_numerator: Vec<i128>,
    pub hilbert_polynomial_constant: u128,
}

impl ResolutionProfile {
    /// `1 - b_1 + b_2 - ...`; zero for a module of rank zero.
    pub fn alternating_rank_sum(&self) -> i128 {
        1 + self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| if i % 2 == 0 { -(t.rank as i128) } else { t.rank as i128 })
            .sum::<i128>()
    }

    /// The Hilbert polynomial read from the numerator: divide by `(1-t)^d`
    /// and evaluate at `t = 1`. `None` if the division is not exact.
    pub fn hilbert_polynomial_from_numerator(&self) -> Option<i128> {
        let mut p = self.hilbert_numerator.clone();
        for _ in 0..self.d {
            // Synthetic division by (1 - t): q_j = sum_{k <= j} p_k.
            let mut q = Vec::with_capacity(p.len().saturating_sub(1));
            let mut acc = 0i128;
            for &c in &p[..p.len() - 1] {
                acc += c;
                q.push(acc);
            }
            if acc + p[p.len() - 1] != 0 {
                return None;
            }
            p = q;
        }
        Some(p.iter().sum())
    }
}

/// `b_i = C(n+i-1, i-1) · C(n+d, n+i)` in homological degree `i` with shift
/// `n+i`.
pub fn resolution_profile(d: usize, n: usize) -> Result<ResolutionProfile> {
    if d < 1 || n < 1 {
        return Err(Error::Parameters(format!("need d, n >= 1, got d={d}, n={n}")));
    }
    let terms: Vec<ResolutionTerm> = (1..=d)
        .map(|i| ResolutionTerm {
            shift: n + i,
            rank: binomial((n + i - 1) as u64, (i - 1) as u64)
                * binomial((n + d) as u64, (n + i) as u64),
        })
        .collect();
    let mut numerator = vec![0i128; n + d + 1];
    numerator[0] = 1;
    for (i, t) in terms.iter().enumerate() {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        numerator[t.shift] += sign * t.rank as i128;
    }
    Ok(ResolutionProfile {
        d,
        n,
        terms,
        hilbert_numerator: numerator,
        hilbert_polynomial_constant: binomial((n + d) as u64, d as u64),
    })
}
