use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{LinearForm, ProjectivePoint, Rational};
use crate::error::{Error, Result};
use crate::gc::infer_parameters;
use crate::ideal::{PrimeComponent, SquarefreeMonomialIdeal};
use crate::linalg::RationalMatrix;

/// The substitution `y_i ↦ l_i` into `P^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationMap {
    forms: Vec<LinearForm>,
    ambient_dim: usize,
}

impl SpecializationMap {
    /// Requires pairwise distinct forms that span all linear forms on
    /// `P^ambient_dim`.
    pub fn new(ambient_dim: usize, forms: Vec<LinearForm>) -> Result<Self> {
        for f in &forms {
            if f.len() != ambient_dim + 1 {
                return Err(Error::FormLength {
                    expected: ambient_dim + 1,
                    found: f.len(),
                });
            }
        }
        let mut seen: HashMap<&LinearForm, usize> = HashMap::new();
        for (i, f) in forms.iter().enumerate() {
            if let Some(&j) = seen.get(f) {
                return Err(Error::DuplicateForms(j, i));
            }
            seen.insert(f, i);
        }
        let rank = form_matrix(&forms).rank();
        if rank != ambient_dim + 1 {
            return Err(Error::FormsDoNotSpan {
                rank,
                expected: ambient_dim + 1,
            });
        }
        Ok(SpecializationMap { forms, ambient_dim })
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
}

pub(crate) fn form_matrix<'a, I>(forms: I) -> RationalMatrix
where
    I: IntoIterator<Item = &'a LinearForm>,
{
    RationalMatrix::new(forms.into_iter().map(|f| f.coefficients().to_vec()).collect())
}

/// Distinct points of `P^d` with an affine chart and, when they came from a
/// specialization, the component each point was cut out by.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigurationFile", into = "ConfigurationFile")]
pub struct PointConfiguration {
    ambient_dim: usize,
    chart: usize,
    points: Vec<ProjectivePoint>,
    provenance: Vec<Option<PrimeComponent>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub coords: ProjectivePoint,
    /// Chart image; recomputed on input.
    #[serde(default, skip_deserializing)]
    pub affine: Vec<String>,
    #[serde(default)]
    pub component: Option<PrimeComponent>,
}

/// Wire format of a point configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationFile {
    pub ambient_dim: usize,
    pub chart: usize,
    pub points: Vec<PointRecord>,
}

impl TryFrom<ConfigurationFile> for PointConfiguration {
    type Error = Error;

    fn try_from(file: ConfigurationFile) -> Result<Self> {
        let (points, provenance) = file
            .points
            .into_iter()
            .map(|r| (r.coords, r.component))
            .unzip();
        PointConfiguration::with_provenance(file.ambient_dim, file.chart, points, provenance)
    }
}

impl From<PointConfiguration> for ConfigurationFile {
    fn from(c: PointConfiguration) -> Self {
        let chart = c.chart;
        let points = c
            .points
            .into_iter()
            .zip(c.provenance)
            .map(|(p, component)| PointRecord {
                affine: p
                    .affine(chart)
                    .expect("validated chart")
                    .iter()
                    .map(|x| x.to_string())
                    .collect(),
                coords: p,
                component,
            })
            .collect();
        ConfigurationFile {
            ambient_dim: c.ambient_dim,
            chart,
            points,
        }
    }
}

impl PointConfiguration {
    pub fn new(ambient_dim: usize, chart: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        let provenance = vec![None; points.len()];
        Self::with_provenance(ambient_dim, chart, points, provenance)
    }

    /// Checks dimensions, distinctness and that no point lies at infinity.
    pub fn with_provenance(
        ambient_dim: usize,
        chart: usize,
        points: Vec<ProjectivePoint>,
        provenance: Vec<Option<PrimeComponent>>,
    ) -> Result<Self> {
        if chart > ambient_dim {
            return Err(Error::ChartOutOfRange {
                chart,
                ambient: ambient_dim,
            });
        }
        let mut seen: HashMap<&ProjectivePoint, usize> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if p.ambient_dim() != ambient_dim {
                return Err(Error::FormLength {
                    expected: ambient_dim + 1,
                    found: p.coordinates().len(),
                });
            }
            if p.dehomogenized(chart).is_none() {
                return Err(Error::PointAtInfinity { index: i, chart });
            }
            if let Some(&j) = seen.get(p) {
                let label = |k: usize| {
                    provenance[k].map_or(crate::combinatorics::Face::EMPTY, |c| c.variables())
                };
                return Err(Error::PointsCollide(label(j), label(i)));
            }
            seen.insert(p, i);
        }
        Ok(PointConfiguration {
            ambient_dim,
            chart,
            points,
            provenance,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn provenance(&self) -> &[Option<PrimeComponent>] {
        &self.provenance
    }

    /// Index of the point cut out by `component`.
    pub fn point_of(&self, component: PrimeComponent) -> Option<usize> {
        self.provenance.iter().position(|c| *c == Some(component))
    }

    /// Representatives with the chart coordinate equal to 1.
    pub fn dehomogenized(&self) -> Vec<Vec<Rational>> {
        self.points
            .iter()
            .map(|p| p.dehomogenized(self.chart).expect("validated chart"))
            .collect()
    }

    /// The same points in a different chart.
    pub fn with_chart(&self, chart: usize) -> Result<Self> {
        Self::with_provenance(self.ambient_dim, chart, self.points.clone(), self.provenance.clone())
    }
}

/// Substitutes `y_i ↦ l_i` and solves each prime component for its point.
pub fn specialize(
    ideal: &SquarefreeMonomialIdeal,
    map: &SpecializationMap,
    chart: usize,
) -> Result<PointConfiguration> {
    let params = infer_parameters(ideal)?;
    if map.ambient_dim() != params.d {
        return Err(Error::AmbientMismatch {
            ambient: map.ambient_dim(),
            codim: params.d,
        });
    }
    if map.forms().len() != ideal.variable_count() {
        return Err(Error::FormCountMismatch {
            forms: map.forms().len(),
            variables: ideal.variable_count(),
        });
    }
    if chart > params.d {
        return Err(Error::ChartOutOfRange {
            chart,
            ambient: params.d,
        });
    }
    let components = ideal.primary_decomposition()?;
    let points = components
        .par_iter()
        .map(|c| {
            let matrix = form_matrix(c.variables().vertices().map(|i| &map.forms()[i]));
            let mut kernel = matrix.nullspace();
            if kernel.len() != 1 {
                return Err(Error::ComponentNotAPoint(c.variables()));
            }
            ProjectivePoint::new(kernel.pop().expect("one vector"))
        })
        .collect::<Result<Vec<_>>>()?;
    let provenance = components.into_iter().map(Some).collect();
    PointConfiguration::with_provenance(params.d, chart, points, provenance)
}
