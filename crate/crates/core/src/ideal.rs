//! Squarefree monomial ideals and the Stanley–Reisner correspondence.
//!
//! A squarefree monomial is identified with its support, so generators are
//! [`Face`]s. Primary components of a squarefree ideal are generated by
//! variables and are exactly the minimal transversals of the generator
//! supports; their complements are the facets of the associated complex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{minimal_members, Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// A squarefree monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealFile", into = "IdealFile")]
pub struct SquarefreeMonomialIdeal {
    variable_count: usize,
    generators: Vec<Face>,
}

/// Wire format `{"variables": m, "generators": [[1,5,6], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: usize,
    pub generators: Vec<Face>,
}

impl TryFrom<IdealFile> for SquarefreeMonomialIdeal {
    type Error = Error;

    fn try_from(file: IdealFile) -> Result<Self> {
        SquarefreeMonomialIdeal::new(file.variables, file.generators)
    }
}

impl From<SquarefreeMonomialIdeal> for IdealFile {
    fn from(i: SquarefreeMonomialIdeal) -> Self {
        IdealFile {
            variables: i.variable_count,
            generators: i.generators,
        }
    }
}

/// A prime `⟨y_i : i ∈ variables⟩` in the decomposition of a squarefree ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeComponent(Face);

impl PrimeComponent {
    pub fn new(variables: Face) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::Input("a prime component needs at least one variable".into()));
        }
        Ok(PrimeComponent(variables))
    }

    pub fn variables(self) -> Face {
        self.0
    }
}

impl fmt::Debug for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

impl SquarefreeMonomialIdeal {
    /// Builds the ideal generated by the given supports, keeping the minimal
    /// ones. An empty support would be the unit ideal and is rejected.
    pub fn new<I: IntoIterator<Item = Face>>(variable_count: usize, generators: I) -> Result<Self> {
        if variable_count == 0 || variable_count > MAX_VERTICES {
            return Err(Error::VertexCount(variable_count));
        }
        let generators: Vec<Face> = generators.into_iter().collect();
        let limit = Face::full(variable_count);
        for g in &generators {
            if g.is_empty() {
                return Err(Error::UnitIdeal);
            }
            if !g.is_subset(limit) {
                return Err(Error::VertexOutOfRange {
                    index: g.max_vertex().unwrap_or(0),
                    vertex_count: variable_count,
                });
            }
        }
        Ok(SquarefreeMonomialIdeal {
            variable_count,
            generators: minimal_members(generators),
        })
    }

    pub fn from_vertex_lists(variable_count: usize, generators: &[&[usize]]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Face::new(g.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(variable_count, gens)
    }

    pub fn zero(variable_count: usize) -> Result<Self> {
        Self::new(variable_count, [])
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    /// Minimal generator supports in lexicographic order.
    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Distinct generator degrees, ascending.
    pub fn generator_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.generators.iter().map(|g| g.len()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Whether the monomial with support `s` lies in the ideal.
    pub fn contains_monomial(&self, s: Face) -> bool {
        self.generators.iter().any(|g| g.is_subset(s))
    }

    /// Inclusion-minimal vertex sets meeting every generator.
    fn minimal_transversals(&self) -> Vec<Face> {
        let mut transversals = vec![Face::EMPTY];
        for &g in &self.generators {
            let mut next = Vec::with_capacity(transversals.len() * g.len());
            for t in transversals {
                if t.is_disjoint(g) {
                    next.extend(g.vertices().map(|v| t.with(v)));
                } else {
                    next.push(t);
                }
            }
            transversals = minimal_members(next);
        }
        transversals
    }

    /// The complex whose Stanley–Reisner ideal is `self`.
    pub fn complex(&self) -> SimplicialComplex {
        let m = self.variable_count;
        let facets = self
            .minimal_transversals()
            .into_iter()
            .map(|t| t.complement(m));
        SimplicialComplex::from_facets(m, facets).expect("transversal complements are in range")
    }

    /// One prime per facet `F` of the complex, on the variables `V \ F`.
    pub fn primary_decomposition(&self) -> Result<Vec<PrimeComponent>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self
            .minimal_transversals()
            .into_iter()
            .map(PrimeComponent)
            .collect())
    }

    /// The Alexander dual ideal, generated by the monomialized components.
    pub fn dual(&self) -> Result<SquarefreeMonomialIdeal> {
        let comps = self.primary_decomposition()?;
        SquarefreeMonomialIdeal::new(self.variable_count, comps.into_iter().map(|c| c.0))
    }

    /// `(codimension, degree)` for ideals with a pure complex.
    pub fn codim_degree(&self) -> Result<(usize, usize)> {
        let comps = self.primary_decomposition()?;
        let codim = comps[0].0.len();
        if comps.iter().any(|c| c.0.len() != codim) {
            return Err(Error::NonPure);
        }
        Ok((codim, comps.len()))
    }
}

/// `I_Δ`, generated by the minimal nonfaces of `Δ`.
///
/// The void complex has the unit ideal, which is not representable here.
pub fn sr_ideal(complex: &SimplicialComplex) -> Result<SquarefreeMonomialIdeal> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    SquarefreeMonomialIdeal::new(complex.vertex_count(), complex.minimal_nonfaces())
}
