//! Monomial GC: the combinatorial shadow of the geometric characterization
//! property.
//!
//! A primary component `P` of `I_Δ` is monomial GC when some degree-`n`
//! monomial `f` satisfies `f·P ⊆ I_Δ` and `f ∉ P`. Combinatorially this is a
//! face `τ` of `Δ` with `|τ| = n`, disjoint from `P`, whose join with every
//! vertex of `P` leaves `Δ`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{PrimeComponent, SquarefreeMonomialIdeal};

/// Codimension `d` and degree parameter `n` of a candidate GC ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GcParameters {
    pub d: usize,
    pub n: usize,
}

impl GcParameters {
    /// `C(n+d, d)`: expected degree, and number of points after specialization.
    pub fn degree(self) -> u128 {
        binomial((self.n + self.d) as u64, self.d as u64)
    }

    /// `C(n+d-1, d-1)`: components through a maximal monomial hyperplane.
    pub fn maximal_hyperplane_count(self) -> u128 {
        binomial((self.n + self.d - 1) as u64, self.d as u64 - 1)
    }

    /// `C(n+d, n+1)`: generators of the ideal in degree `n+1`.
    pub fn generator_count(self) -> u128 {
        binomial((self.n + self.d) as u64, self.n as u64 + 1)
    }
}

/// Reads `d` from the codimension and `n` from the common generator degree,
/// then checks the degree against `C(n+d, d)`.
pub fn infer_parameters(ideal: &SquarefreeMonomialIdeal) -> Result<GcParameters> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let degrees = ideal.generator_degrees();
    if degrees.len() > 1 {
        return Err(Error::MixedGeneratorDegrees(degrees));
    }
    let (codim, degree) = ideal.codim_degree()?;
    let n = degrees[0] - 1;
    if n == 0 {
        return Err(Error::Parameters("generators of degree 1 give n = 0".into()));
    }
    let params = GcParameters { d: codim, n };
    if degree as u128 != params.degree() {
        return Err(Error::DegreeMismatch {
            d: codim,
            n,
            degree,
            expected: params.degree(),
        });
    }
    Ok(params)
}

/// A face `τ` certifying that `component` is monomial GC.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GcWitness {
    pub component: PrimeComponent,
    pub tau: Face,
}

impl GcWitness {
    /// Checks the defining conditions directly against `complex`.
    pub fn is_valid(&self, complex: &SimplicialComplex, n: usize) -> bool {
        let vars = self.component.variables();
        self.tau.len() == n
            && complex.contains(self.tau)
            && self.tau.is_disjoint(vars)
            && vars.vertices().all(|v| !complex.contains(self.tau.with(v)))
    }
}

/// Lexicographically first `τ ∈ Δ` with `|τ| = n`, `τ ∩ P = ∅` and
/// `τ ∪ {v} ∉ Δ` for all `v ∈ P`.
pub fn find_witness(complex: &SimplicialComplex, component: PrimeComponent, n: usize) -> Option<GcWitness> {
    let vars = component.variables();
    vars.complement(complex.vertex_count())
        .vertices()
        .combinations(n)
        .map(|c| Face::new(c).expect("in range"))
        .find(|&tau| {
            complex.contains(tau) && vars.vertices().all(|v| !complex.contains(tau.with(v)))
        })
        .map(|tau| GcWitness { component, tau })
}

/// The witness for `component`, which must belong to the decomposition of
/// `ideal`.
pub fn monomial_gc_witness(
    ideal: &SquarefreeMonomialIdeal,
    component: PrimeComponent,
) -> Result<Option<GcWitness>> {
    let params = infer_parameters(ideal)?;
    if !ideal.primary_decomposition()?.contains(&component) {
        return Err(Error::NotAComponent(component.variables()));
    }
    Ok(find_witness(&ideal.complex(), component, params.n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vars: Face,
    pub witness: Option<Face>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCount {
    pub vertex: usize,
    pub count: usize,
}

/// Per-component witnesses and maximal monomial hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialGcReport {
    pub d: usize,
    pub n: usize,
    pub components: Vec<ComponentReport>,
    pub gc_count: usize,
    pub monomial_gc: bool,
    pub maximal_hyperplanes: Vec<VertexCount>,
    /// Vertices lying in more than `C(n+d-1, d-1)` components.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exceeding_vertices: Vec<VertexCount>,
}

impl MonomialGcReport {
    pub fn params(&self) -> GcParameters {
        GcParameters { d: self.d, n: self.n }
    }
}

pub fn monomial_gc_report(ideal: &SquarefreeMonomialIdeal) -> Result<MonomialGcReport> {
    let params = infer_parameters(ideal)?;
    let complex = ideal.complex();
    let comps = ideal.primary_decomposition()?;
    let components: Vec<ComponentReport> = comps
        .par_iter()
        .map(|&c| ComponentReport {
            vars: c.variables(),
            witness: find_witness(&complex, c, params.n).map(|w| w.tau),
        })
        .collect();
    let gc_count = components.iter().filter(|c| c.witness.is_some()).count();

    let target = params.maximal_hyperplane_count();
    let counts = (0..ideal.variable_count()).map(|v| VertexCount {
        vertex: v,
        count: comps.iter().filter(|c| c.variables().contains(v)).count(),
    });
    let (maximal_hyperplanes, rest): (Vec<_>, Vec<_>) =
        counts.partition(|vc| vc.count as u128 == target);
    let exceeding_vertices = rest.into_iter().filter(|vc| vc.count as u128 > target).collect();

    Ok(MonomialGcReport {
        d: params.d,
        n: params.n,
        monomial_gc: gc_count == components.len(),
        gc_count,
        components,
        maximal_hyperplanes,
        exceeding_vertices,
    })
}

/// Parameter inference plus the generator-count hypothesis that cannot be
/// decided symbolically here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub d: usize,
    pub n: usize,
    pub codimension: usize,
    pub degree: usize,
    pub generator_count: usize,
    pub expected_generator_count: u128,
    pub generator_count_matches: bool,
    pub warnings: Vec<String>,
}

pub const RADICAL_EQUALITY_WARNING: &str =
    "equality of the lifted ideal with its squarefree hull is assumed, not verified";

pub fn parameter_report(ideal: &SquarefreeMonomialIdeal) -> Result<ParameterReport> {
    let params = infer_parameters(ideal)?;
    let (codimension, degree) = ideal.codim_degree()?;
    let expected = params.generator_count();
    let generator_count = ideal.generators().len();
    let mut warnings = vec![RADICAL_EQUALITY_WARNING.to_string()];
    if generator_count as u128 != expected {
        warnings.push(format!(
            "ideal has {generator_count} generators, expected C(n+d, n+1) = {expected}"
        ));
    }
    Ok(ParameterReport {
        d: params.d,
        n: params.n,
        codimension,
        degree,
        generator_count,
        expected_generator_count: expected,
        generator_count_matches: generator_count as u128 == expected,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::skeleton;
    use crate::ideal::sr_ideal;

    fn face(v: &[usize]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    fn four_lines() -> SquarefreeMonomialIdeal {
        sr_ideal(&skeleton(4, 2).unwrap()).unwrap()
    }

    #[test]
    fn parameters_of_four_lines() {
        assert_eq!(infer_parameters(&four_lines()), Ok(GcParameters { d: 2, n: 2 }));
    }

    #[test]
    fn removing_a_generator_breaks_inference() {
        let i = four_lines();
        let fewer = SquarefreeMonomialIdeal::new(4, i.generators()[..3].iter().copied()).unwrap();
        // The complex loses purity before the degree can even be compared.
        assert_eq!(infer_parameters(&fewer), Err(Error::NonPure));
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        let i = SquarefreeMonomialIdeal::from_vertex_lists(4, &[&[0, 1], &[1, 2, 3]]).unwrap();
        assert_eq!(infer_parameters(&i), Err(Error::MixedGeneratorDegrees(vec![2, 3])));
    }

    #[test]
    fn witness_for_first_line_pair() {
        let i = four_lines();
        let p = PrimeComponent::new(face(&[0, 1])).unwrap();
        let w = monomial_gc_witness(&i, p).unwrap().unwrap();
        assert_eq!(w.tau, face(&[2, 3]));
        assert!(w.is_valid(&i.complex(), 2));
    }

    #[test]
    fn witness_requires_a_component() {
        let p = PrimeComponent::new(face(&[0, 1, 2])).unwrap();
        assert_eq!(
            monomial_gc_witness(&four_lines(), p),
            Err(Error::NotAComponent(face(&[0, 1, 2])))
        );
    }

    #[test]
    fn skeleton_witnesses_are_complements() {
        for (d, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let i = sr_ideal(&skeleton(d + n, n).unwrap()).unwrap();
            for p in i.primary_decomposition().unwrap() {
                let w = monomial_gc_witness(&i, p).unwrap().unwrap();
                assert_eq!(w.tau, p.variables().complement(d + n));
            }
        }
    }

    #[test]
    fn report_for_four_lines() {
        let r = monomial_gc_report(&four_lines()).unwrap();
        assert!(r.monomial_gc);
        assert_eq!(r.gc_count, 6);
        assert_eq!(r.maximal_hyperplanes.len(), 4);
        assert!(r.maximal_hyperplanes.iter().all(|vc| vc.count == 3));
        assert!(r.exceeding_vertices.is_empty());
    }

    #[test]
    fn report_for_five_vertex_skeleton() {
        let r = monomial_gc_report(&sr_ideal(&skeleton(5, 2).unwrap()).unwrap()).unwrap();
        assert!(r.monomial_gc);
        assert_eq!(r.maximal_hyperplanes.len(), 5);
        assert!(r.maximal_hyperplanes.iter().all(|vc| vc.count == 6));
    }

    #[test]
    fn report_json_shape() {
        let r = monomial_gc_report(&four_lines()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["d"], 2);
        assert_eq!(v["components"][0]["vars"], serde_json::json!([0, 1]));
        assert_eq!(v["components"][0]["witness"], serde_json::json!([2, 3]));
        assert_eq!(v["maximal_hyperplanes"][0], serde_json::json!({"vertex": 0, "count": 3}));
        assert!(v.get("exceeding_vertices").is_none());
    }

    #[test]
    fn parameter_report_flags_assumption() {
        let r = parameter_report(&four_lines()).unwrap();
        assert!(r.generator_count_matches);
        assert_eq!(r.expected_generator_count, 4);
        assert_eq!(r.warnings, vec![RADICAL_EQUALITY_WARNING.to_string()]);
    }
}
